//! The `mystica` command line.

use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::classify::{fingerprint, isomorphic, regular_singular};
use crate::error::{Error, Result};
use crate::groups::{enumerate_thick, identify_thick, FiniteMonomialGroup, GroupKind, GroupSpec};
use crate::mystic::{default_truncation, mu_group, mystic_equiv_check};
use crate::qpoly::{
    commute_check, fundamental_degrees, fundamental_invariants, hilbert_free, invariant_dimension,
    QMatrix, Twist,
};
use crate::verify::{run_all, Bounds, Criterion};

#[derive(Parser, Debug)]
#[command(
    name = "mystica",
    version,
    about = "Exact computations with G(m,p,n), its mystic counterpart and their twisted actions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Largest group order that closure and enumeration may build.
    #[arg(long, env = "MYSTICA_CAP", default_value_t = crate::groups::DEFAULT_CAP, global = true)]
    pub cap: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct Params {
    #[arg(long)]
    pub m: u32,
    #[arg(long, default_value_t = 1)]
    pub p: u32,
    #[arg(long)]
    pub n: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build and print a group: G(m,p,n), W(m,d,n) with --cprime, or any --spec.
    Group {
        #[arg(long, requires = "n")]
        m: Option<u32>,
        #[arg(long, default_value_t = 1, conflicts_with = "cprime")]
        p: u32,
        #[arg(long)]
        n: Option<usize>,
        /// Build W(m,d,n) with |C'| = d instead of G(m,p,n).
        #[arg(long)]
        cprime: Option<u32>,
        /// `G(m,p,n)`, `W(m,d,n)`, `X(m,d,n)`, `mu(G(m,p,n))`, `S<n>` or JSON.
        #[arg(long, conflicts_with_all = ["m", "n", "cprime"])]
        spec: Option<String>,
    },
    /// Enumerate the thick subgroups of G(m,1,n).
    Thick {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: usize,
    },
    /// The mystic counterpart of G(m,p,n), m even.
    Mu {
        #[command(flatten)]
        params: Params,
    },
    /// Compare rho(e_G) and rho'(e_G') degree by degree.
    Equiv {
        #[command(flatten)]
        params: Params,
        /// Truncation degree; defaults to max(2m, nm/p, 8).
        #[arg(long)]
        degree: Option<u32>,
        /// Left group, defaults to G(m,p,n).
        #[arg(long)]
        left: Option<String>,
        /// Right group, defaults to mu(G(m,p,n)).
        #[arg(long)]
        right: Option<String>,
        /// Action on the left group: plus, minus or a scalar literal.
        #[arg(long, default_value = "plus")]
        left_c: String,
        /// Action on the right group.
        #[arg(long, default_value = "minus")]
        right_c: String,
    },
    /// Invariant dimensions against the free Hilbert series, and the
    /// commuting check of the fundamental invariants.
    Invariants {
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        degree: Option<u32>,
    },
    /// Abstract isomorphism test.
    Iso {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
    },
    /// Run every acceptance check on the grid m <= max-m, n <= max-n.
    VerifyAll {
        #[arg(long, default_value_t = 4)]
        max_m: u32,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        /// Randomized instances per identity suite.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

/// Result of a command: the report and whether it counts as a pass.
struct Outcome {
    text: String,
    json: serde_json::Value,
    pass: bool,
}

/// Parses `argv`, runs the command and writes the report; returns the exit
/// status (0 pass, 1 verification failure, 2 usage error).
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(o) => {
            let body = match cli.format {
                Format::Text => o.text,
                Format::Json => {
                    serde_json::to_string_pretty(&o.json).expect("reports serialize") + "\n"
                }
            };
            let _ = out.write_all(body.as_bytes());
            if o.pass {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ZeroOrder
        | Error::ScalarSyntax { .. }
        | Error::IndexOutOfRange { .. }
        | Error::NotDivisor { .. }
        | Error::OddM { .. }
        | Error::InvalidParameter(_)
        | Error::DimensionMismatch(_)
        | Error::AmbientMismatch { .. } => 2,
        _ => 1,
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Group {
            m,
            p,
            n,
            cprime,
            spec,
        } => {
            let spec = match (spec, m, n) {
                (Some(s), _, _) => s.parse::<GroupSpec>()?,
                (None, Some(m), Some(n)) => match cprime {
                    Some(d) => GroupSpec::W {
                        m: *m,
                        cprime: *d,
                        n: *n,
                    },
                    None => GroupSpec::Gmpn {
                        m: *m,
                        p: *p,
                        n: *n,
                    },
                },
                _ => {
                    return Err(Error::InvalidParameter(
                        "give --m and --n, or --spec".into(),
                    ))
                }
            };
            let g = spec.build()?;
            check_cap(&g, cli.cap)?;
            Ok(group_outcome(&g))
        }
        Command::Thick { m, n } => thick(*m, *n, cli.cap),
        Command::Mu { params } => {
            let g = FiniteMonomialGroup::make_gmpn(params.m, params.p, params.n)?;
            check_cap(&g, cli.cap)?;
            Ok(group_outcome(&mu_group(&g)?))
        }
        Command::Equiv {
            params,
            degree,
            left,
            right,
            left_c,
            right_c,
        } => {
            let base = GroupSpec::Gmpn {
                m: params.m,
                p: params.p,
                n: params.n,
            };
            let g = match left {
                Some(s) => s.parse::<GroupSpec>()?.build()?,
                None => base.build()?,
            };
            let h = match right {
                Some(s) => s.parse::<GroupSpec>()?.build()?,
                None => mu_group(&base.build()?)?,
            };
            check_cap(&g, cli.cap)?;
            check_cap(&h, cli.cap)?;
            let d = degree.unwrap_or_else(|| default_truncation(params.m, params.p, params.n));
            let r = mystic_equiv_check(&g, &left_c.parse()?, &h, &right_c.parse()?, d)?;
            let mut text = format!("{}  vs  {}\n", r.g, r.mu_g);
            for (k, ok) in r.per_degree.iter().enumerate() {
                let _ = writeln!(
                    text,
                    "degree {k:>3}  {}",
                    if *ok { "equal" } else { "DIFFER" }
                );
            }
            let _ = writeln!(
                text,
                "VERDICT {}",
                if r.verdict {
                    "equivalent"
                } else {
                    "not equivalent"
                }
            );
            Ok(Outcome {
                text,
                json: serde_json::to_value(&r).expect("report serializes"),
                pass: r.verdict,
            })
        }
        Command::Invariants { params, degree } => invariants(params, *degree, cli.cap),
        Command::Iso { g, h } => {
            let a = g.parse::<GroupSpec>()?.build()?;
            let b = h.parse::<GroupSpec>()?.build()?;
            check_cap(&a, cli.cap)?;
            check_cap(&b, cli.cap)?;
            let iso = isomorphic(&a, &b)?;
            let (fa, fb) = (fingerprint(&a), fingerprint(&b));
            let text = format!(
                "{} (order {})  {}  {} (order {})\n",
                a.descriptor(),
                a.order(),
                if iso { "≅" } else { "≇" },
                b.descriptor(),
                b.order()
            );
            Ok(Outcome {
                text,
                json: json!({
                    "g": a.descriptor(),
                    "h": b.descriptor(),
                    "isomorphic": iso,
                    "fingerprints_equal": fa == fb,
                }),
                pass: true,
            })
        }
        Command::VerifyAll {
            max_m,
            max_n,
            samples,
            seed,
        } => {
            let criteria = run_all(&Bounds {
                max_m: *max_m,
                max_n: *max_n,
                samples: *samples,
                seed: *seed,
                cap: cli.cap,
            });
            Ok(verify_outcome(&criteria))
        }
    }
}

fn check_cap(g: &FiniteMonomialGroup, cap: usize) -> Result<()> {
    if g.order() > cap {
        return Err(Error::CapExceeded { cap });
    }
    Ok(())
}

#[derive(Serialize)]
struct GroupJson<'a> {
    #[serde(flatten)]
    kind: &'a GroupKind,
    order: usize,
    #[serde(rename = "N")]
    ambient: u32,
    elements: &'a [crate::monomial::MonomialElement],
}

fn group_outcome(g: &FiniteMonomialGroup) -> Outcome {
    let mut text = format!(
        "{}  order {}  rank {}  ambient μ_{}\n",
        g.descriptor(),
        g.order(),
        g.rank(),
        g.ambient_order()
    );
    for e in g.elements() {
        let _ = writeln!(text, "  {e}");
    }
    let json = serde_json::to_value(GroupJson {
        kind: g.kind(),
        order: g.order(),
        ambient: g.ambient_order(),
        elements: g.elements(),
    })
    .expect("group serializes");
    Outcome {
        text,
        json,
        pass: true,
    }
}

fn thick(m: u32, n: usize, cap: usize) -> Result<Outcome> {
    let groups = enumerate_thick(m, n, cap)?;
    let mut text = format!("thick subgroups of G({m},1,{n}): {}\n", groups.len());
    let mut rows = vec![];
    for g in &groups {
        let name = identify_thick(g, m).map_or_else(|| "unnamed".to_string(), |k| k.to_string());
        let torus = g.torus_part();
        let reg = regular_singular(g);
        let _ = writeln!(
            text,
            "  {name:<12} order {:>6}  |T| {:>5}  |C'| {:>2}  {}",
            g.order(),
            torus.group.order(),
            torus.cprime_order,
            if reg.regular { "regular" } else { "singular" }
        );
        rows.push(json!({
            "name": name,
            "order": g.order(),
            "torus_order": torus.group.order(),
            "cprime": torus.cprime_order,
            "regular": reg.regular,
        }));
    }
    Ok(Outcome {
        text,
        json: json!(rows),
        pass: true,
    })
}

fn invariants(params: &Params, degree: Option<u32>, cap: usize) -> Result<Outcome> {
    let (m, p, n) = (params.m, params.p, params.n);
    let g = FiniteMonomialGroup::make_gmpn(m, p, n)?;
    check_cap(&g, cap)?;
    let mu = mu_group(&g)?;
    let d_max = degree.unwrap_or_else(|| default_truncation(m, p, n));
    let degrees = fundamental_degrees(m, p, n);
    let hilbert = hilbert_free(&degrees, d_max)?;
    let inv = fundamental_invariants(m, p, n)?;
    let commute = commute_check(&QMatrix::minus_one(n), &inv)?;
    let mut text = format!("G({m},{p},{n}), generator degrees {degrees:?}\n");
    let _ = writeln!(text, "degree  hilbert  G ⊳+  mu(G) ⊳-");
    let mut rows = vec![];
    let mut pass = commute;
    for d in 0..=d_max {
        let plus = invariant_dimension(&g, &Twist::Plus, d)?;
        let minus = invariant_dimension(&mu, &Twist::minus(), d)?;
        let h = hilbert[d as usize];
        pass &= plus as u64 == h && minus as u64 == h;
        let _ = writeln!(text, "{d:>6}  {h:>7}  {plus:>4}  {minus:>9}");
        rows.push(json!({"degree": d, "hilbert": h, "plus": plus, "minus": minus}));
    }
    for f in &inv {
        let _ = writeln!(text, "invariant: {f}");
    }
    let _ = writeln!(text, "commute under q = -1: {commute}");
    Ok(Outcome {
        text,
        json: json!({
            "params": [m, p, n],
            "degrees": degrees,
            "dimensions": rows,
            "invariants": inv,
            "commute": commute,
        }),
        pass,
    })
}

fn verify_outcome(criteria: &[Criterion]) -> Outcome {
    let mut text = String::new();
    let mut rows = vec![];
    for c in criteria {
        let _ = writeln!(text, "{}", c.summary_line());
        for f in c.failures() {
            let _ = writeln!(
                text,
                "    fail {} {}{}",
                f.check,
                f.params,
                f.note.as_ref().map_or(String::new(), |n| format!(": {n}"))
            );
        }
        for check in &c.checks {
            rows.push(json!({
                "check": format!("{}.{}", c.id, check.check),
                "params": check.params,
                "pass": check.pass,
            }));
        }
    }
    let failed = criteria.iter().filter(|c| !c.pass()).count();
    let _ = writeln!(
        text,
        "{} of {} criteria pass, {failed} fail",
        criteria.len() - failed,
        criteria.len()
    );
    Outcome {
        text,
        json: json!(rows),
        pass: failed == 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = vec![];
        let mut err = vec![];
        let code = run(
            std::iter::once("mystica").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn group_and_mu() {
        let (code, out, _) = call(&["group", "--m", "1", "--p", "1", "--n", "3"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("G(1,1,3)  order 6"));
        let (code, out, _) = call(&["mu", "--m", "2", "--p", "2", "--n", "2", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["kind"], "W");
        assert_eq!(v["order"], 4);
        assert_eq!(v["elements"].as_array().unwrap().len(), 4);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["frobnicate"]).0, 2);
        let (code, _, err) = call(&["group", "--m", "4", "--p", "3", "--n", "2"]);
        assert_eq!(code, 2);
        assert_eq!(err.lines().count(), 1);
        assert_eq!(call(&["mu", "--m", "3", "--n", "2"]).0, 2);
    }

    #[test]
    fn cap_is_enforced() {
        let (code, _, err) = call(&["group", "--m", "4", "--n", "3", "--cap", "100"]);
        assert_eq!(code, 1);
        assert!(err.contains("100"));
    }

    #[test]
    fn equivalence_and_iso() {
        let (code, out, _) = call(&["equiv", "--m", "2", "--p", "2", "--n", "2", "--degree", "4"]);
        assert_eq!(code, 0);
        assert!(out.trim_end().ends_with("VERDICT equivalent"));
        let (code, out, _) = call(&["iso", "--g", "G(2,2,3)", "--h", "S4", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["isomorphic"], true);
    }

    #[test]
    fn deterministic_output() {
        let args = ["thick", "--m", "2", "--n", "3", "--format", "json"];
        assert_eq!(call(&args), call(&args));
    }
}
