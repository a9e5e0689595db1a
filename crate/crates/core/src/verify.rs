//! The acceptance checks, shared by `mystica verify-all` and
//! the acceptance test target.

use std::collections::{BTreeSet, HashMap};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{
    named_thick, regular_singular, verify_classification_grid, verify_not_iso_grid, z_obstruction,
};
use crate::cyclo::{Cyclotomic, RootOfUnity};
use crate::error::Result;
use crate::groupalg::{ga_mul, j_c, psi_eval, q_w_element, rho_slice, GroupAlgebraElement};
use crate::groups::{enumerate_thick, identify_thick, FiniteMonomialGroup};
use crate::monomial::{perm_compose, perm_inverse, MonomialElement};
use crate::mystic::{
    default_truncation, faithfulness_degree, group_ring_iso_check, mu_group, mystic_equiv_check,
    odd_m_witness, uniqueness_scan,
};
use crate::qpoly::{
    act_c, commute_check, fundamental_degrees, fundamental_invariants, hilbert_free,
    invariant_dimension, phi_w_eval, qform_bracket, ExponentVector, QMatrix, QPolynomial, Twist,
};

/// One line of a verification report.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub check: String,
    pub params: String,
    pub pass: bool,
    #[serde(skip)]
    pub note: Option<String>,
}

impl Check {
    fn new(check: &str, params: impl Into<String>, pass: bool) -> Self {
        Check {
            check: check.to_string(),
            params: params.into(),
            pass,
            note: None,
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// All checks belonging to one acceptance criterion.
#[derive(Clone, Debug, Serialize)]
pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    pub checks: Vec<Check>,
}

impl Criterion {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// `criterion N: PASS|FAIL (k/n checks) title`.
    pub fn summary_line(&self) -> String {
        let ok = self.checks.iter().filter(|c| c.pass).count();
        format!(
            "criterion {:>2}: {} ({}/{} checks) {}",
            self.id,
            if self.pass() { "PASS" } else { "FAIL" },
            ok,
            self.checks.len(),
            self.title
        )
    }
}

fn divisors(m: u32) -> Vec<u32> {
    (1..=m).filter(|d| m % d == 0).collect()
}

/// `(m, p, n)` with `m` even, `p | m`.
fn even_grid(max_m: u32, max_n: usize) -> Vec<(u32, u32, usize)> {
    let mut out = vec![];
    for m in (2..=max_m).step_by(2) {
        for p in divisors(m) {
            for n in 1..=max_n {
                out.push((m, p, n));
            }
        }
    }
    out
}

fn name(m: u32, p: u32, n: usize) -> String {
    format!("G({m},{p},{n})")
}

fn failed(check: &str, params: String, e: crate::Error) -> Check {
    Check::new(check, params, false).with_note(format!("error: {e}"))
}

/// 1. `|G(m,p,n)| = mⁿ n!/p`.
pub fn orders(max_m: u32, ns: &[usize]) -> Criterion {
    let cells: Vec<(u32, u32, usize)> = (1..=max_m)
        .flat_map(|m| divisors(m).into_iter().map(move |p| (m, p)))
        .flat_map(|(m, p)| ns.iter().map(move |&n| (m, p, n)))
        .collect();
    let checks = cells
        .par_iter()
        .map(|&(m, p, n)| {
            let expected = (m as usize).pow(n as u32) * (1..=n).product::<usize>() / p as usize;
            match FiniteMonomialGroup::make_gmpn(m, p, n) {
                Ok(g) => Check::new("order", name(m, p, n), g.order() == expected)
                    .with_note(format!("{} vs {expected}", g.order())),
                Err(e) => failed("order", name(m, p, n), e),
            }
        })
        .collect();
    Criterion {
        id: 1,
        title: "orders of G(m,p,n)",
        checks,
    }
}

/// 2. `μ(G) = W(m, m/p, n)`, mystical equivalence up to the default
/// truncation, and uniqueness among thick subgroups.
pub fn mystic_correspondence(max_m: u32, max_n: usize, cap: usize) -> Criterion {
    let cells = even_grid(max_m, max_n);
    let mut checks: Vec<Check> = cells
        .par_iter()
        .flat_map_iter(|&(m, p, n)| {
            let params = name(m, p, n);
            let run = || -> Result<Vec<Check>> {
                let g = FiniteMonomialGroup::make_gmpn(m, p, n)?;
                let mu = mu_group(&g)?;
                let w = FiniteMonomialGroup::make_w(m, m / p, n)?;
                let d = default_truncation(m, p, n);
                let eq = mystic_equiv_check(&g, &Twist::Plus, &mu, &Twist::minus(), d)?;
                let uniq = uniqueness_scan(m, p, n, d, cap)?;
                Ok(vec![
                    Check::new("mu_equals_w", params.clone(), mu.same_elements(&w)),
                    Check::new("mystic_equivalence", format!("{params} D={d}"), eq.verdict),
                    Check::new("uniqueness", format!("{params} D={d}"), uniq.unique_and_mu)
                        .with_note(format!(
                            "{} thick candidates, matches {:?}",
                            uniq.candidates, uniq.matches
                        )),
                ])
            };
            run().unwrap_or_else(|e| vec![failed("mystic_correspondence", params.clone(), e)])
        })
        .collect();
    checks.sort_by(|a, b| (&a.params, &a.check).cmp(&(&b.params, &b.check)));
    Criterion {
        id: 2,
        title: "mu(G) = W, mystical equivalence and uniqueness",
        checks,
    }
}

/// 3. Fundamental invariants commute in `S_{-1}`, are `⊳_-`-invariant under
/// `μ(G)` and `⊳_+`-invariant under `G`, and both invariant spaces have the
/// Hilbert function of a polynomial ring in those degrees.
pub fn commuting_invariants(max_m: u32, max_n: usize) -> Criterion {
    let cells = even_grid(max_m, max_n);
    let mut checks: Vec<Check> = cells
        .par_iter()
        .flat_map_iter(|&(m, p, n)| {
            let params = name(m, p, n);
            let run = || -> Result<Vec<Check>> {
                let g = FiniteMonomialGroup::make_gmpn(m, p, n)?;
                let mu = mu_group(&g)?;
                let inv = fundamental_invariants(m, p, n)?;
                let d_max = default_truncation(m, p, n);
                let hilbert = hilbert_free(&fundamental_degrees(m, p, n), d_max)?;
                let fixed = |h: &FiniteMonomialGroup, c: &Twist| -> Result<bool> {
                    for x in h.elements() {
                        for f in &inv {
                            if &act_c(c, x, f)? != f {
                                return Ok(false);
                            }
                        }
                    }
                    Ok(true)
                };
                let series = |h: &FiniteMonomialGroup, c: &Twist| -> Result<Option<u32>> {
                    for d in 0..=d_max {
                        if invariant_dimension(h, c, d)? as u64 != hilbert[d as usize] {
                            return Ok(Some(d));
                        }
                    }
                    Ok(None)
                };
                let minus = series(&mu, &Twist::minus())?;
                let plus = series(&g, &Twist::Plus)?;
                let mismatch = |r: Option<u32>| r.map_or("none".into(), |d| format!("degree {d}"));
                Ok(vec![
                    Check::new(
                        "invariants_commute",
                        params.clone(),
                        commute_check(&QMatrix::minus_one(n), &inv)?,
                    ),
                    Check::new(
                        "invariants_fixed_minus",
                        params.clone(),
                        fixed(&mu, &Twist::minus())?,
                    ),
                    Check::new(
                        "invariants_fixed_plus",
                        params.clone(),
                        fixed(&g, &Twist::Plus)?,
                    ),
                    Check::new(
                        "hilbert_minus",
                        format!("{params} D={d_max}"),
                        minus.is_none(),
                    )
                    .with_note(format!("first mismatch: {}", mismatch(minus))),
                    Check::new(
                        "hilbert_plus",
                        format!("{params} D={d_max}"),
                        plus.is_none(),
                    )
                    .with_note(format!("first mismatch: {}", mismatch(plus))),
                ])
            };
            run().unwrap_or_else(|e| vec![failed("invariants", params.clone(), e)])
        })
        .collect();
    checks.sort_by(|a, b| (&a.params, &a.check).cmp(&(&b.params, &b.check)));
    Criterion {
        id: 3,
        title: "commuting invariants and Hilbert series",
        checks,
    }
}

/// 4. The group ring isomorphism `J_i : RG → Rμ(G)`.
pub fn group_ring_iso(max_m: u32, max_n: usize) -> Criterion {
    let cells = even_grid(max_m, max_n);
    let checks = cells
        .par_iter()
        .map(|&(m, p, n)| {
            let params = name(m, p, n);
            match FiniteMonomialGroup::make_gmpn(m, p, n).and_then(|g| group_ring_iso_check(&g)) {
                Ok(r) => Check::new("group_ring_iso", params, r.pass).with_note(format!(
                    "support {} coefficients {} inverse {} invertible {} e_G {}",
                    r.support_in_mu,
                    r.coefficients_in_r,
                    r.inverse_in_rg,
                    r.invertible,
                    r.maps_e_g_to_e_mu
                )),
                Err(e) => failed("group_ring_iso", params, e),
            }
        })
        .collect();
    Criterion {
        id: 4,
        title: "group rings RG and R mu(G) are isomorphic",
        checks,
    }
}

/// 5. `G ≇ μ(G)` exactly when `n` is even and `m/p` odd, with the long-cycle
/// power obstruction on the non-isomorphic cells.
pub fn not_iso(max_m: u32, max_n: usize) -> Criterion {
    let checks = match verify_not_iso_grid(max_m, max_n) {
        Ok(cells) => {
            let mut out = vec![];
            for c in cells {
                let obstruct = !c.predicted;
                out.push(
                    Check::new("not_iso_parity", c.params.clone(), c.pass()).with_note(format!(
                        "predicted iso {} computed {}",
                        c.predicted, c.computed
                    )),
                );
                if obstruct {
                    let (m, p, n) = parse_gmpn(&c.params);
                    out.push(match z_obstruction(m, p, n) {
                        Ok(z) => Check::new("z_obstruction", c.params.clone(), z.pass()),
                        Err(e) => failed("z_obstruction", c.params.clone(), e),
                    });
                }
            }
            out
        }
        Err(e) => vec![failed(
            "not_iso_parity",
            format!("m<={max_m} n<={max_n}"),
            e,
        )],
    };
    Criterion {
        id: 5,
        title: "G and mu(G) not isomorphic iff n even and m/p odd",
        checks,
    }
}

fn parse_gmpn(s: &str) -> (u32, u32, usize) {
    let body = &s[2..s.len() - 1];
    let v: Vec<&str> = body.split(',').collect();
    (
        v[0].parse().unwrap(),
        v[1].parse().unwrap(),
        v[2].parse().unwrap(),
    )
}

/// 6. Thick subgroups of `G(m,1,n)`, enumerated from the normal subgroup
/// lattice, against the family `{G(m,p,n)} ∪ {W(m,d,n) : m even}`.
pub fn thick_family(max_m: u32, max_n: usize, cap: usize) -> Criterion {
    let cells: Vec<(u32, usize)> = (1..=max_m)
        .flat_map(|m| (1..=max_n).map(move |n| (m, n)))
        .collect();
    let checks = cells
        .par_iter()
        .map(|&(m, n)| {
            let params = format!("G({m},1,{n})");
            let run = || -> Result<Check> {
                let found = enumerate_thick(m, n, cap)?;
                let mut predicted: Vec<FiniteMonomialGroup> = vec![];
                let mut push = |g: FiniteMonomialGroup| {
                    if !predicted.iter().any(|h| h.same_elements(&g)) {
                        predicted.push(g);
                    }
                };
                for p in divisors(m) {
                    push(FiniteMonomialGroup::make_gmpn(m, p, n)?);
                }
                if m % 2 == 0 {
                    for d in divisors(m) {
                        push(FiniteMonomialGroup::make_w(m, d, n)?);
                    }
                }
                let label = |g: &FiniteMonomialGroup| {
                    identify_thick(g, m)
                        .map_or_else(|| format!("order {}", g.order()), |k| k.to_string())
                };
                let extra: Vec<String> = found
                    .iter()
                    .filter(|g| !predicted.iter().any(|h| h.same_elements(g)))
                    .map(label)
                    .collect();
                let missing: Vec<String> = predicted
                    .iter()
                    .filter(|g| !found.iter().any(|h| h.same_elements(g)))
                    .map(label)
                    .collect();
                let pass = extra.is_empty() && missing.is_empty();
                Ok(
                    Check::new("thick_family", params.clone(), pass).with_note(format!(
                        "{} found; unexpected {extra:?}; missing {missing:?}",
                        found.len()
                    )),
                )
            };
            run().unwrap_or_else(|e| failed("thick_family", params.clone(), e))
        })
        .collect();
    Criterion {
        id: 6,
        title: "every thick subgroup is G(m,p,n) or W",
        checks,
    }
}

/// 7. Isomorphism among thick subgroups against the classification.
pub fn classification(max_m: u32, max_mp: u32, max_n: usize, cap: usize) -> Criterion {
    let checks = match verify_classification_grid(max_m, max_mp, max_n, cap) {
        Ok(cells) => cells
            .into_iter()
            .map(|c| {
                let note = format!("predicted iso {} computed {}", c.predicted, c.computed);
                Check::new("classification", c.params.clone(), c.pass()).with_note(note)
            })
            .collect(),
        Err(e) => vec![failed(
            "classification",
            format!("m<={max_m} n<={max_n}"),
            e,
        )],
    };
    Criterion {
        id: 7,
        title: "isomorphisms between thick subgroups",
        checks,
    }
}

/// Names of the singular thick subgroups predicted by the classification.
pub const PREDICTED_SINGULAR: [&str; 6] = [
    "G(1,1,2)", "G(1,1,3)", "G(1,1,4)", "G(2,1,2)", "G(2,2,2)", "W(2,1,2)",
];

/// 8. Regular/singular status of every thick subgroup.
pub fn singular(max_m: u32, max_n: usize, cap: usize) -> Criterion {
    let checks = match named_thick(max_m, 2, max_n, cap) {
        Ok(thick) => thick
            .par_iter()
            .map(|t| {
                let r = regular_singular(&t.group);
                let predicted = PREDICTED_SINGULAR.contains(&t.name().as_str());
                let note = match &r.witness {
                    Some(w) => format!(
                        "singular: normal abelian subgroup of order {} vs |T| = {}",
                        w.len(),
                        r.torus_order
                    ),
                    None => "regular".into(),
                };
                Check::new("singular", t.name(), predicted == !r.regular).with_note(note)
            })
            .collect(),
        Err(e) => vec![failed("singular", format!("m<={max_m} n<={max_n}"), e)],
    };
    Criterion {
        id: 8,
        title: "singular thick subgroups",
        checks,
    }
}

/// 9. `ρ_c` is injective on `CG` for `c ∈ {0, 1, i}` within degree `n·N`,
/// for `G(m,p,n)` and `μ(G(m,p,n))`.
pub fn faithfulness(max_m: u32, max_n: usize) -> Criterion {
    let twists = [
        Twist::Plus,
        Twist::minus(),
        Twist::scalar(Cyclotomic::root(4, 1).expect("order 4")),
    ];
    let mut cells = vec![];
    for (m, p, n) in even_grid(max_m, max_n) {
        for mu in [false, true] {
            for c in &twists {
                cells.push((m, p, n, mu, c.clone()));
            }
        }
    }
    let mut checks: Vec<Check> = cells
        .par_iter()
        .map(|(m, p, n, mu, c)| {
            let label = if *mu {
                format!("mu({})", name(*m, *p, *n))
            } else {
                name(*m, *p, *n)
            };
            let params = format!("{label} c={c}");
            let run = || -> Result<Check> {
                let g = FiniteMonomialGroup::make_gmpn(*m, *p, *n)?;
                let g = if *mu { mu_group(&g)? } else { g };
                let bound = *n as u32 * g.ambient_order();
                let d = faithfulness_degree(&g, c, bound)?;
                Ok(
                    Check::new("faithful", params.clone(), d.is_some()).with_note(match d {
                        Some(d) => format!("rank |G| = {} reached at D = {d}", g.order()),
                        None => format!("rank below |G| = {} at D = {bound}", g.order()),
                    }),
                )
            };
            run().unwrap_or_else(|e| failed("faithful", params.clone(), e))
        })
        .collect();
    checks.sort_by(|a, b| a.params.cmp(&b.params));
    Criterion {
        id: 9,
        title: "faithfulness of rho_c",
        checks,
    }
}

/// 10. Randomized identity suites, `samples` instances each.
pub fn properties(samples: usize, seed: u64) -> Criterion {
    type Suite = fn(&mut ChaCha8Rng) -> Result<bool>;
    let suites: [(&str, Suite); 9] = [
        ("cocycle_composition", cocycle_composition),
        ("cocycle_bracket", cocycle_bracket),
        ("q_inverse", q_inverse),
        ("q_composition", q_composition),
        ("psi_q_is_phi", psi_q_is_phi),
        ("j_multiplicative", j_multiplicative),
        ("j_inverse", j_inverse),
        ("rho_plus_j_is_rho_c", rho_plus_j_is_rho_c),
        ("long_cycle_power", long_cycle_power),
    ];
    let mut checks: Vec<Check> = suites
        .par_iter()
        .enumerate()
        .map(|(i, (label, f))| run_suite(label, *f, samples, seed.wrapping_add(i as u64)))
        .collect();
    checks.push(run_suite(
        "odd_m_non_closure",
        odd_m_non_closure,
        samples,
        seed ^ 0x5eed,
    ));
    Criterion {
        id: 10,
        title: "randomized identity suites",
        checks,
    }
}

fn run_suite(
    label: &str,
    f: fn(&mut ChaCha8Rng) -> Result<bool>,
    samples: usize,
    seed: u64,
) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    let mut first = None;
    for i in 0..samples {
        match f(&mut rng) {
            Ok(true) => {}
            Ok(false) => {
                failures += 1;
                first.get_or_insert(format!("instance {i} violated the identity"));
            }
            Err(e) => {
                failures += 1;
                first.get_or_insert(format!("instance {i}: {e}"));
            }
        }
    }
    let check = Check::new(
        label,
        format!("samples={samples} seed={seed}"),
        failures == 0,
    );
    match first {
        Some(f) => check.with_note(format!("{failures} failures, first: {f}")),
        None => check,
    }
}

fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Vec<u8> {
    let mut w: Vec<u8> = (0..n as u8).collect();
    w.shuffle(rng);
    w
}

fn random_exponent(rng: &mut ChaCha8Rng, n: usize) -> ExponentVector {
    ExponentVector((0..n).map(|_| rng.gen_range(0..6)).collect())
}

/// Twists with a root of unity or `2` as the scalar.
fn random_scalar(rng: &mut ChaCha8Rng) -> Cyclotomic {
    match rng.gen_range(0..5) {
        0 => Cyclotomic::one(1),
        1 => Cyclotomic::root(4, 1).expect("order 4"),
        2 => Cyclotomic::root(3, 1).expect("order 3"),
        3 => Cyclotomic::root(12, 5).expect("order 12"),
        _ => Cyclotomic::from_integer(2),
    }
}

fn random_root(rng: &mut ChaCha8Rng) -> Cyclotomic {
    [
        Cyclotomic::one(1),
        Cyclotomic::root(4, 1).expect("order 4"),
        Cyclotomic::root(3, 1).expect("order 3"),
    ][rng.gen_range(0..3)]
    .clone()
}

/// `φ_{w'w}(k) = φ_{w'}(w(k)) φ_w(k)`.
fn cocycle_composition(rng: &mut ChaCha8Rng) -> Result<bool> {
    let n = rng.gen_range(1..=4);
    let c = Twist::scalar(random_root(rng));
    let (w, wp) = (random_perm(rng, n), random_perm(rng, n));
    let k = random_exponent(rng, n);
    let lhs = phi_w_eval(&c, &perm_compose(&wp, &w), &k)?;
    let rhs = &phi_w_eval(&c, &wp, &k.permute(&w))? * &phi_w_eval(&c, &w, &k)?;
    Ok(lhs == rhs)
}

/// `⟨k,k'⟩ φ_w(k+k') = ⟨w(k),w(k')⟩ φ_w(k) φ_w(k')` for `φ^{(0)}` with
/// `a = 1` and `φ^{(±1)}` with `a = -1`.
fn cocycle_bracket(rng: &mut ChaCha8Rng) -> Result<bool> {
    let n = rng.gen_range(2..=4);
    let (c, q) = match rng.gen_range(0..3) {
        0 => (Twist::Plus, QMatrix::plus_one(n)),
        1 => (Twist::minus(), QMatrix::minus_one(n)),
        _ => (
            Twist::scalar(Cyclotomic::from_integer(-1)),
            QMatrix::minus_one(n),
        ),
    };
    let w = random_perm(rng, n);
    let (k, kp) = (random_exponent(rng, n), random_exponent(rng, n));
    let lhs = &qform_bracket(&q, &k, &kp)? * &phi_w_eval(&c, &w, &k.add(&kp))?;
    let rhs = &(&qform_bracket(&q, &k.permute(&w), &kp.permute(&w))? * &phi_w_eval(&c, &w, &k)?)
        * &phi_w_eval(&c, &w, &kp)?;
    Ok(lhs == rhs)
}

const Q_ORDER: u32 = 12;

fn perm_element(w: &[u8]) -> MonomialElement {
    MonomialElement::permutation(w.to_vec(), Q_ORDER).expect("valid permutation")
}

/// `Q_w^{(c)} Q_w^{(c⁻¹)} = 1`.
fn q_inverse(rng: &mut ChaCha8Rng) -> Result<bool> {
    let n = rng.gen_range(2..=3);
    let c = random_scalar(rng);
    let w = random_perm(rng, n);
    let a = q_w_element(&c, &w, Q_ORDER)?;
    let b = q_w_element(&c.inv()?, &w, Q_ORDER)?;
    Ok(ga_mul(&a, &b)? == GroupAlgebraElement::one(n, Q_ORDER))
}

/// `Q_{w'w}^{(c)} = w⁻¹(Q_{w'}^{(c)}) Q_w^{(c)}`.
fn q_composition(rng: &mut ChaCha8Rng) -> Result<bool> {
    let n = rng.gen_range(2..=3);
    let c = random_scalar(rng);
    let (w, wp) = (random_perm(rng, n), random_perm(rng, n));
    let lhs = q_w_element(&c, &perm_compose(&wp, &w), Q_ORDER)?;
    let moved = q_w_element(&c, &wp, Q_ORDER)?.conjugate_by(&perm_element(&perm_inverse(&w)))?;
    Ok(lhs == ga_mul(&moved, &q_w_element(&c, &w, Q_ORDER)?)?)
}

/// `Ψ(Q_w^{(c)}) = φ_w^{(c)}`.
fn psi_q_is_phi(rng: &mut ChaCha8Rng) -> Result<bool> {
    let n = rng.gen_range(2..=3);
    let c = random_scalar(rng);
    let w = random_perm(rng, n);
    let k = random_exponent(rng, n);
    let q = q_w_element(&c, &w, Q_ORDER)?;
    Ok(psi_eval(&q, &k)? == phi_w_eval(&Twist::scalar(c), &w, &k)?)
}

fn random_algebra_element(rng: &mut ChaCha8Rng, n: usize) -> Result<GroupAlgebraElement> {
    let mut a = GroupAlgebraElement::zero(n, Q_ORDER);
    for _ in 0..rng.gen_range(1..=3) {
        let exps = (0..n).map(|_| rng.gen_range(0..Q_ORDER as i64)).collect();
        let g = MonomialElement::new(random_perm(rng, n), exps, Q_ORDER)?;
        let coef = Cyclotomic::from_integer(rng.gen_range(-3..=3));
        a.add_term(g, coef)?;
    }
    Ok(a)
}

/// `J_c(ab) = J_c(a) J_c(b)`.
fn j_multiplicative(rng: &mut ChaCha8Rng) -> Result<bool> {
    let n = rng.gen_range(1..=3);
    let c = random_scalar(rng);
    let a = random_algebra_element(rng, n)?;
    let b = random_algebra_element(rng, n)?;
    Ok(j_c(&c, &ga_mul(&a, &b)?)? == ga_mul(&j_c(&c, &a)?, &j_c(&c, &b)?)?)
}

/// `J_{c⁻¹} ∘ J_c = id`.
fn j_inverse(rng: &mut ChaCha8Rng) -> Result<bool> {
    let n = rng.gen_range(1..=3);
    let c = random_scalar(rng);
    let a = random_algebra_element(rng, n)?;
    Ok(j_c(&c.inv()?, &j_c(&c, &a)?)? == a)
}

/// `ρ_+(J_c(a)) = ρ_c(a)` on one slice of degree at most 4.
fn rho_plus_j_is_rho_c(rng: &mut ChaCha8Rng) -> Result<bool> {
    let n = rng.gen_range(1..=3);
    let c = random_scalar(rng);
    let a = random_algebra_element(rng, n)?;
    let d = rng.gen_range(0..=4);
    Ok(rho_slice(&j_c(&c, &a)?, &Twist::Plus, d)? == rho_slice(&a, &Twist::scalar(c), d)?)
}

/// `(t c)^n = z^{(det t)}` for a long cycle `c`.
fn long_cycle_power(rng: &mut ChaCha8Rng) -> Result<bool> {
    let n = rng.gen_range(1..=6);
    let order = rng.gen_range(1..=12u32);
    let mut points: Vec<u8> = (0..n as u8).collect();
    points.shuffle(rng);
    let mut cycle = vec![0u8; n];
    for i in 0..n {
        cycle[points[i] as usize] = points[(i + 1) % n];
    }
    let exps: Vec<i64> = (0..n).map(|_| rng.gen_range(0..order as i64)).collect();
    let det = exps.iter().sum::<i64>();
    let tc = MonomialElement::new(cycle, exps, order)?;
    let z = MonomialElement::central_scalar(n, order, RootOfUnity::new(order, det))?;
    Ok(tc.pow(n as u64) == z)
}

type WitnessCache = HashMap<(u32, u32, usize), (FiniteMonomialGroup, Vec<QPolynomial>, bool)>;

thread_local! {
    static ODD_CACHE: std::cell::RefCell<WitnessCache> = std::cell::RefCell::new(HashMap::new());
}

/// For odd `m`: a random element of `G(m,p,n)` fixes both fundamental
/// invariants `p_1, r` under `⊳_+`, while their `•_-` product is moved by
/// some element of the group.
fn odd_m_non_closure(rng: &mut ChaCha8Rng) -> Result<bool> {
    let m = [1u32, 3, 5][rng.gen_range(0..3)];
    let ps = divisors(m);
    let p = ps[rng.gen_range(0..ps.len())];
    let n = rng.gen_range(2..=3usize);
    let (g, inv, witnessed) = ODD_CACHE.with(|cache| -> Result<_> {
        let mut cache = cache.borrow_mut();
        if let Some(v) = cache.get(&(m, p, n)) {
            return Ok(v.clone());
        }
        let g = FiniteMonomialGroup::make_gmpn(m, p, n)?;
        let inv = fundamental_invariants(m, p, n)?;
        let w = odd_m_witness(m, p, n)?;
        let witnessed = w.is_some_and(|w| {
            w.factors_invariant
                && g.contains(&w.moved_by)
                && act_c(&Twist::Plus, &w.moved_by, &w.product).is_ok_and(|y| y != w.product)
        });
        let v = (g, vec![inv[0].clone(), inv[n - 1].clone()], witnessed);
        cache.insert((m, p, n), v.clone());
        Ok(v)
    })?;
    let x = &g.elements()[rng.gen_range(0..g.order())];
    for f in &inv {
        if &act_c(&Twist::Plus, x, f)? != f {
            return Ok(false);
        }
    }
    Ok(witnessed)
}

/// Bounds for [`run_all`].
#[derive(Clone, Debug)]
pub struct Bounds {
    pub max_m: u32,
    pub max_n: usize,
    pub samples: usize,
    pub seed: u64,
    pub cap: usize,
}

/// Every criterion, restricted to `m ≤ max_m`, `n ≤ max_n`.
pub fn run_all(b: &Bounds) -> Vec<Criterion> {
    let ranks: Vec<usize> = (2..=b.max_n).collect();
    vec![
        orders(b.max_m, &ranks),
        mystic_correspondence(b.max_m, b.max_n, b.cap),
        commuting_invariants(b.max_m, b.max_n),
        group_ring_iso(b.max_m, b.max_n),
        not_iso(b.max_m, b.max_n),
        thick_family(b.max_m, b.max_n, b.cap),
        classification(b.max_m, b.max_m.min(2), b.max_n, b.cap),
        singular(b.max_m, b.max_n, b.cap),
        faithfulness(b.max_m, b.max_n),
        properties(b.samples, b.seed),
    ]
}

/// Names of the thick subgroups found singular, for reporting.
pub fn singular_names(c: &Criterion) -> BTreeSet<String> {
    c.checks
        .iter()
        .filter(|k| k.note.as_deref().is_some_and(|n| n.starts_with("singular")))
        .map(|k| k.params.clone())
        .collect()
}
