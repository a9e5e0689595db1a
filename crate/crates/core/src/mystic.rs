//! The correspondence `μ`, mystical equivalence on truncations, the group ring
//! isomorphism `J_i` and faithfulness ranks.

use std::collections::HashMap;

use serde::Serialize;

use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::groupalg::{e_group, j_c, GroupAlgebraElement};
use crate::groups::{
    enumerate_thick, identify_thick, FiniteMonomialGroup, GroupKind, IndexedGroup,
};
use crate::linalg::EchelonBasis;
use crate::monomial::{perm_sign, permutations, MonomialElement};
use crate::qpoly::{
    act_c, fundamental_invariants, group_sum_operator, qmul, ActionKernel, QMatrix, QPolynomial,
    SliceBasis, Twist,
};

fn gmpn_params(g: &FiniteMonomialGroup) -> Result<(u32, u32, usize)> {
    match g.kind() {
        GroupKind::Gmpn { m, p, n } => Ok((*m, *p, *n)),
        _ => Err(Error::NotGmpn),
    }
}

/// `μ(G) = {w t_1^{(det w)} t : w ∈ S_n, t ∈ T_G}` for `G = G(m,p,n)` with `m` even.
pub fn mu_group(g: &FiniteMonomialGroup) -> Result<FiniteMonomialGroup> {
    let (m, p, n) = gmpn_params(g)?;
    if m % 2 == 1 {
        return Err(Error::OddM { m });
    }
    let order = g.ambient_order();
    let torus = g.torus_part().group;
    let mut elements = Vec::with_capacity(g.order());
    for w in permutations(n) {
        let det = if perm_sign(&w) < 0 {
            (order / 2) as i64
        } else {
            0
        };
        let wt = MonomialElement::permutation(w, order)?
            .compose(&MonomialElement::torus_generator(n, 1, det, order)?)?;
        for t in torus.elements() {
            elements.push(wt.compose(t)?);
        }
    }
    let mu = FiniteMonomialGroup::from_closed_set(
        n,
        order,
        elements,
        GroupKind::W {
            m,
            cprime: m / p,
            n,
        },
    );
    let expected = FiniteMonomialGroup::make_w_in(m, m / p, n, order)?;
    if !mu.same_elements(&expected) {
        return Err(Error::Internal(format!(
            "μ(G({m},{p},{n})) differs from W({m},{},{n})",
            m / p
        )));
    }
    Ok(mu)
}

/// Default truncation degree `max(2m, nm/p, 8)`.
pub fn default_truncation(m: u32, p: u32, n: usize) -> u32 {
    (2 * m).max(n as u32 * m / p).max(8)
}

/// Comparison of `ρ(e_G)` and `ρ'(e_{G'})` on the slices of degree `0..=D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub g: String,
    pub mu_g: String,
    #[serde(rename = "D")]
    pub d: u32,
    pub per_degree: Vec<bool>,
    pub verdict: bool,
}

fn common_ambient(
    g: &FiniteMonomialGroup,
    h: &FiniteMonomialGroup,
) -> Result<(FiniteMonomialGroup, FiniteMonomialGroup)> {
    if g.rank() != h.rank() {
        return Err(Error::AmbientMismatch {
            n1: g.rank(),
            order1: g.ambient_order(),
            n2: h.rank(),
            order2: h.ambient_order(),
        });
    }
    let l = crate::cyclo::lcm(g.ambient_order(), h.ambient_order());
    let lift = |x: &FiniteMonomialGroup| {
        if x.ambient_order() == l {
            Ok(x.clone())
        } else {
            x.lift(l)
        }
    };
    Ok((lift(g)?, lift(h)?))
}

fn label(g: &FiniteMonomialGroup, c: &Twist) -> String {
    let act = match c {
        Twist::Plus => "+".to_string(),
        Twist::Scalar(x) if x.is_one() => "-".to_string(),
        Twist::Scalar(x) => format!("c={x}"),
    };
    format!("{} ⊳{act}", g.descriptor())
}

/// Degree-by-degree comparison of `ρ_{act_g}(e_G)` and `ρ_{act_h}(e_H)`.
pub fn mystic_equiv_check(
    g: &FiniteMonomialGroup,
    act_g: &Twist,
    h: &FiniteMonomialGroup,
    act_h: &Twist,
    d: u32,
) -> Result<EquivalenceReport> {
    let (g2, h2) = common_ambient(g, h)?;
    let per_degree = (0..=d)
        .map(|k| Ok(group_sum_operator(act_g, &g2, k)? == group_sum_operator(act_h, &h2, k)?))
        .collect::<Result<Vec<bool>>>()?;
    Ok(EquivalenceReport {
        g: label(g, act_g),
        mu_g: label(h, act_h),
        d,
        verdict: per_degree.iter().all(|&b| b),
        per_degree,
    })
}

/// Same as [`mystic_equiv_check`] but stops at the first differing degree.
pub fn equivalent_up_to(
    g: &FiniteMonomialGroup,
    act_g: &Twist,
    h: &FiniteMonomialGroup,
    act_h: &Twist,
    d: u32,
) -> Result<bool> {
    if g.order() != h.order() {
        // ρ(e_G) on degree 0 is |G|
        return Ok(false);
    }
    let (g2, h2) = common_ambient(g, h)?;
    for k in 0..=d {
        if group_sum_operator(act_g, &g2, k)? != group_sum_operator(act_h, &h2, k)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of the search for thick subgroups of `G(m,1,n)` mystically
/// equivalent (under `⊳_-`) to `(G(m,p,n), ⊳_+)`.
#[derive(Clone, Debug, Serialize)]
pub struct UniquenessReport {
    pub params: (u32, u32, usize),
    #[serde(rename = "D")]
    pub d: u32,
    pub candidates: usize,
    pub matches: Vec<String>,
    /// Exactly one match, and it is `μ(G)`.
    pub unique_and_mu: bool,
}

pub fn uniqueness_scan(m: u32, p: u32, n: usize, d: u32, cap: usize) -> Result<UniquenessReport> {
    let g = FiniteMonomialGroup::make_gmpn(m, p, n)?;
    let mu = mu_group(&g)?;
    let thick = enumerate_thick(m, n, cap)?;
    let mut matches = vec![];
    let mut hits = vec![];
    for h in &thick {
        if equivalent_up_to(&g, &Twist::Plus, h, &Twist::minus(), d)? {
            let name =
                identify_thick(h, m).map_or_else(|| "unnamed".to_string(), |k| k.to_string());
            matches.push(name);
            hits.push(h);
        }
    }
    let unique_and_mu = hits.len() == 1 && hits[0].same_elements(&mu);
    Ok(UniquenessReport {
        params: (m, p, n),
        d,
        candidates: thick.len(),
        matches,
        unique_and_mu,
    })
}

/// Checks of the group ring isomorphism `J_i : RG → Rμ(G)`, `R = Z[(1+i)/2]`.
#[derive(Clone, Debug, Serialize)]
pub struct GroupRingReport {
    pub g: String,
    pub mu_g: String,
    /// `supp J_i(g) ⊆ μ(G)` for all `g ∈ G`.
    pub support_in_mu: bool,
    /// Every coefficient of every `J_i(g)` lies in `R`.
    pub coefficients_in_r: bool,
    /// `supp J_{-i}(h) ⊆ G` and coefficients in `R`, for all `h ∈ μ(G)`.
    pub inverse_in_rg: bool,
    /// The two restricted coefficient matrices multiply to the identity in
    /// both orders, so the `|G| × |μ(G)|` matrix is invertible.
    pub invertible: bool,
    /// `J_i(e_G) = e_{μ(G)}`.
    pub maps_e_g_to_e_mu: bool,
    pub pass: bool,
}

fn images(
    c: &Cyclotomic,
    src: &FiniteMonomialGroup,
) -> Result<HashMap<MonomialElement, GroupAlgebraElement>> {
    src.elements()
        .iter()
        .map(|g| {
            Ok((
                g.clone(),
                j_c(c, &GroupAlgebraElement::from_element(g.clone()))?,
            ))
        })
        .collect()
}

/// `Σ_h A[x, h] B[h]` equals `x` for every `x`, i.e. `A B = I`.
fn composes_to_identity(
    a: &HashMap<MonomialElement, GroupAlgebraElement>,
    b: &HashMap<MonomialElement, GroupAlgebraElement>,
) -> Result<bool> {
    for (x, ax) in a {
        let mut acc = GroupAlgebraElement::zero(x.rank(), x.order());
        for (h, coef) in ax.terms() {
            let Some(bh) = b.get(h) else {
                return Ok(false);
            };
            acc = acc.add(&bh.scale(coef))?;
        }
        if acc != GroupAlgebraElement::from_element(x.clone()) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn group_ring_iso_check(g: &FiniteMonomialGroup) -> Result<GroupRingReport> {
    let mu = mu_group(g)?;
    let i = Cyclotomic::root(4, 1)?;
    let minus_i = Cyclotomic::root(4, 3)?;
    let forward = images(&i, g)?;
    let backward = images(&minus_i, &mu)?;
    let support_in_mu = forward
        .values()
        .all(|a| a.support().all(|h| mu.contains(h)));
    let coefficients_in_r = forward
        .values()
        .all(|a| a.terms().all(|(_, c)| c.in_gaussian_half_ring()));
    let inverse_in_rg = backward.values().all(|a| {
        a.terms()
            .all(|(h, c)| g.contains(h) && c.in_gaussian_half_ring())
    });
    let invertible = support_in_mu
        && inverse_in_rg
        && g.order() == mu.order()
        && composes_to_identity(&forward, &backward)?
        && composes_to_identity(&backward, &forward)?;
    let maps_e_g_to_e_mu = j_c(&i, &e_group(g))? == e_group(&mu);
    Ok(GroupRingReport {
        g: g.descriptor(),
        mu_g: mu.descriptor(),
        pass: support_in_mu && coefficients_in_r && inverse_in_rg && invertible && maps_e_g_to_e_mu,
        support_in_mu,
        coefficients_in_r,
        inverse_in_rg,
        invertible,
        maps_e_g_to_e_mu,
    })
}

/// Rank of `{ρ_c(g)|_{deg ≤ D} : g ∈ G}` for `D = 0, 1, …, max_d`.
///
/// Writing `g = u t_w w` with `u ∈ T_G` and a fixed representative `t_w w`
/// for each `w ∈ π(G)`, a relation `Σ y_g ρ_c(g) = 0` splits over the
/// characters of `T_G` (Fourier transform in `u`): the character through
/// which `T_G` acts on the output monomial `x^{k'}` selects a block whose
/// columns are the `w ∈ π(G)`, with entry `φ_w(k) χ_{t_w}(k')` in row
/// `(k, k')` when `w(k) = k'`. The rank is the sum of the block ranks.
pub fn faithfulness_profile(g: &FiniteMonomialGroup, c: &Twist, max_d: u32) -> Result<Vec<usize>> {
    let n = g.rank();
    let order = g.ambient_order();
    let mut reps: Vec<MonomialElement> = vec![];
    let mut perm_index: HashMap<Vec<u8>, usize> = HashMap::new();
    for e in g.elements() {
        perm_index.entry(e.perm().to_vec()).or_insert_with(|| {
            reps.push(e.clone());
            reps.len() - 1
        });
    }
    let torus = g.torus_part().group;
    let ig = IndexedGroup::new(&torus);
    let torus_gens: Vec<MonomialElement> = ig
        .generating_set()
        .into_iter()
        .map(|i| ig.element(i).clone())
        .collect();
    let char_key = |k: &[u32]| -> Vec<u32> {
        torus_gens
            .iter()
            .map(|u| {
                let s: u64 = u
                    .exps()
                    .iter()
                    .zip(k)
                    .map(|(&e, &j)| e as u64 * j as u64)
                    .sum();
                (s % order as u64) as u32
            })
            .collect()
    };
    let kernel = ActionKernel::new(c, order);
    let cols = reps.len();
    let mut blocks: HashMap<Vec<u32>, EchelonBasis> = HashMap::new();
    let mut total = 0usize;
    let mut profile = vec![];
    for d in 0..=max_d {
        if total < g.order() {
            let basis = SliceBasis::new(n, d);
            for k in &basis.monomials {
                let mut rows: HashMap<Vec<u32>, Vec<Cyclotomic>> = HashMap::new();
                for (col, rep) in reps.iter().enumerate() {
                    let (coef, kp) = kernel.act_value(rep, &k.0);
                    rows.entry(kp)
                        .or_insert_with(|| vec![Cyclotomic::zero(1); cols])[col] = coef;
                }
                for (kp, row) in rows {
                    let block = blocks
                        .entry(char_key(&kp))
                        .or_insert_with(|| EchelonBasis::new(cols));
                    if !block.is_full() && block.insert(row) {
                        total += 1;
                    }
                }
                if total == g.order() {
                    break;
                }
            }
        }
        profile.push(total);
    }
    Ok(profile)
}

pub fn faithfulness_rank(g: &FiniteMonomialGroup, c: &Twist, d: u32) -> Result<usize> {
    Ok(*faithfulness_profile(g, c, d)?
        .last()
        .expect("nonempty profile"))
}

/// Smallest `D ≤ max_d` at which the rank reaches `|G|`.
pub fn faithfulness_degree(g: &FiniteMonomialGroup, c: &Twist, max_d: u32) -> Result<Option<u32>> {
    let profile = faithfulness_profile(g, c, max_d)?;
    Ok(profile
        .iter()
        .position(|&r| r == g.order())
        .map(|d| d as u32))
}

/// For odd `m`: `p_1^{(m)} •_- r^{(m/p)}` and a generator of `G(m,p,n)`
/// that does not fix it under `⊳_+`, although both factors are invariant.
#[derive(Clone, Debug, Serialize)]
pub struct NonClosureWitness {
    pub params: (u32, u32, usize),
    pub product: QPolynomial,
    pub moved_by: MonomialElement,
    pub factors_invariant: bool,
}

pub fn odd_m_witness(m: u32, p: u32, n: usize) -> Result<Option<NonClosureWitness>> {
    if m % 2 == 0 {
        return Err(Error::InvalidParameter(format!("m = {m} is even")));
    }
    if n < 2 {
        return Ok(None);
    }
    let g = FiniteMonomialGroup::make_gmpn(m, p, n)?;
    let ig = IndexedGroup::new(&g);
    let gens: Vec<MonomialElement> = ig
        .generating_set()
        .into_iter()
        .map(|i| ig.element(i).clone())
        .chain([MonomialElement::simple_reflection(n, 1, g.ambient_order())?])
        .collect();
    let inv = fundamental_invariants(m, p, n)?;
    let (f, r) = (&inv[0], &inv[n - 1]);
    let fixes = |x: &MonomialElement, h: &QPolynomial| act_c(&Twist::Plus, x, h).map(|y| &y == h);
    let mut factors_invariant = true;
    for x in &gens {
        factors_invariant &= fixes(x, f)? && fixes(x, r)?;
    }
    let product = qmul(&QMatrix::minus_one(n), f, r)?;
    for x in &gens {
        if !fixes(x, &product)? {
            return Ok(Some(NonClosureWitness {
                params: (m, p, n),
                product,
                moved_by: x.clone(),
                factors_invariant,
            }));
        }
    }
    Ok(None)
}
