//! Finite subgroups of `μ_N^n ⋊ S_n`: the imprimitive reflection groups
//! `G(m,p,n)`, the groups `W_{C,C'}`, closures of generator sets, and the
//! thick-subgroup machinery.

pub mod lattice;
pub mod probes;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::cyclo::lcm;
use crate::error::{Error, Result};
use crate::monomial::{permutations, MonomialElement};

pub use lattice::{IndexedGroup, Subgroup};
pub use probes::{structure_probes, StructureProbes};

pub const DEFAULT_CAP: usize = 50_000;

/// Ambient torus order used for a group with torus entries in `μ_m`: both the
/// `m`-th roots of unity and `i` must be available.
pub fn ambient_order_for(m: u32) -> u32 {
    lcm(m, 4)
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Where a group came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum GroupKind {
    #[serde(rename = "G")]
    Gmpn { m: u32, p: u32, n: usize },
    #[serde(rename = "W")]
    W { m: u32, cprime: u32, n: usize },
    /// The twisted family of [`FiniteMonomialGroup::make_x`].
    #[serde(rename = "X")]
    X { m: u32, cprime: u32, n: usize },
    #[serde(rename = "generated")]
    Generated,
    #[serde(rename = "explicit")]
    Explicit,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Gmpn { m, p, n } => write!(f, "G({m},{p},{n})"),
            GroupKind::W { m, cprime, n } => write!(f, "W({m},{cprime},{n})"),
            GroupKind::X { m, cprime, n } => write!(f, "X({m},{cprime},{n})"),
            GroupKind::Generated => write!(f, "generated"),
            GroupKind::Explicit => write!(f, "explicit"),
        }
    }
}

/// A finite subgroup of `μ_N^n ⋊ S_n`, stored as its sorted element set.
#[derive(Clone, Debug)]
pub struct FiniteMonomialGroup {
    n: usize,
    order: u32,
    elements: Vec<MonomialElement>,
    index: HashMap<MonomialElement, u32>,
    kind: GroupKind,
}

impl PartialEq for FiniteMonomialGroup {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.order == other.order && self.elements == other.elements
    }
}

impl Eq for FiniteMonomialGroup {}

impl FiniteMonomialGroup {
    /// Wraps an element set already known to be a group.
    pub(crate) fn from_closed_set(
        n: usize,
        order: u32,
        mut elements: Vec<MonomialElement>,
        kind: GroupKind,
    ) -> Self {
        elements.sort();
        elements.dedup();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i as u32))
            .collect();
        FiniteMonomialGroup {
            n,
            order,
            elements,
            index,
            kind,
        }
    }

    /// Builds a group from an explicit element list, rejecting sets that are
    /// not closed under the group law.
    pub fn from_elements(n: usize, order: u32, elements: Vec<MonomialElement>) -> Result<Self> {
        for e in &elements {
            if e.rank() != n || e.order() != order {
                return Err(Error::AmbientMismatch {
                    n1: n,
                    order1: order,
                    n2: e.rank(),
                    order2: e.order(),
                });
            }
        }
        let g = Self::from_closed_set(n, order, elements, GroupKind::Explicit);
        let closed = g.contains(&MonomialElement::identity(n, order))
            && g.elements
                .iter()
                .all(|a| g.elements.iter().all(|b| g.contains(&(a * b))));
        if !closed {
            return Err(Error::InvalidElement(
                "element set is not closed under composition".into(),
            ));
        }
        Ok(g)
    }

    /// The smallest subgroup containing `gens`.
    pub fn closure_generate(
        n: usize,
        order: u32,
        gens: &[MonomialElement],
        cap: usize,
    ) -> Result<Self> {
        let id = MonomialElement::identity(n, order);
        for g in gens {
            id.compose(g)?;
        }
        let mut seen: HashMap<MonomialElement, ()> = HashMap::new();
        seen.insert(id.clone(), ());
        let mut queue = vec![id];
        let mut next = 0;
        while next < queue.len() {
            let x = queue[next].clone();
            next += 1;
            for g in gens {
                let y = &x * g;
                if !seen.contains_key(&y) {
                    if seen.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    seen.insert(y.clone(), ());
                    queue.push(y);
                }
            }
        }
        Ok(Self::from_closed_set(n, order, queue, GroupKind::Generated))
    }

    /// `G(m,p,n) = {t w ∈ μ_m^n ⋊ S_n : det t ∈ μ_{m/p}}` in the default ambient.
    pub fn make_gmpn(m: u32, p: u32, n: usize) -> Result<Self> {
        Self::make_gmpn_in(m, p, n, ambient_order_for(m.max(1)))
    }

    pub fn make_gmpn_in(m: u32, p: u32, n: usize, ambient: u32) -> Result<Self> {
        check_params(m, p, n, ambient)?;
        let d = m / p;
        let step = ambient / d;
        let elements = Self::filtered(m, n, ambient, |w_sign, det| {
            let _ = w_sign;
            det % step == 0
        });
        let mut g = Self::from_closed_set(n, ambient, elements, GroupKind::Gmpn { m, p, n });
        g.kind = GroupKind::Gmpn { m, p, n };
        Ok(g)
    }

    /// `W_{C,C'} = {t w ∈ μ_m^n ⋊ S_n : det(t w) ∈ C'}` with `|C| = m`, `|C'| = d`.
    pub fn make_w(m: u32, d: u32, n: usize) -> Result<Self> {
        Self::make_w_in(m, d, n, ambient_order_for(m.max(1)))
    }

    pub fn make_w_in(m: u32, d: u32, n: usize, ambient: u32) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidParameter("|C'| must be positive".into()));
        }
        check_params(m, d, n, ambient)?;
        let step = ambient / d;
        let half = (ambient % 2 == 0).then_some(ambient / 2);
        let elements = Self::filtered(m, n, ambient, |w_sign, det| {
            if w_sign > 0 {
                det % step == 0
            } else {
                // -ζ^det = ζ^{det + N/2}, only available for even N
                half.is_some_and(|h| ((det + h) % ambient) % step == 0)
            }
        });
        Ok(Self::from_closed_set(
            n,
            ambient,
            elements,
            GroupKind::W { m, cprime: d, n },
        ))
    }

    /// `{t w : det t ∈ η^{[w odd]} C'}` with `|C'| = d` and `η` a primitive
    /// `2d`-th root of unity. Needs `d` even and `2d | m`, so that `η ∉ ±C'`
    /// while `η² ∈ C'`.
    pub fn make_x(m: u32, d: u32, n: usize) -> Result<Self> {
        Self::make_x_in(m, d, n, ambient_order_for(m.max(1)))
    }

    pub fn make_x_in(m: u32, d: u32, n: usize, ambient: u32) -> Result<Self> {
        if d == 0 || d % 2 == 1 || m % (2 * d) != 0 {
            return Err(Error::InvalidParameter(format!(
                "X({m},{d},{n}) needs d even and 2d | m"
            )));
        }
        check_params(m, d, n, ambient)?;
        let step = ambient / d;
        let eta = ambient / (2 * d);
        let elements = Self::filtered(m, n, ambient, |w_sign, det| {
            let shift = if w_sign > 0 { 0 } else { eta };
            (det + ambient - shift) % step == 0
        });
        Ok(Self::from_closed_set(
            n,
            ambient,
            elements,
            GroupKind::X { m, cprime: d, n },
        ))
    }

    /// Elements of `μ_m^n ⋊ S_n` kept by `keep(sign w, exponent of det t)`.
    fn filtered(
        m: u32,
        n: usize,
        ambient: u32,
        keep: impl Fn(i8, u32) -> bool,
    ) -> Vec<MonomialElement> {
        let step = ambient / m;
        let perms = permutations(n);
        let mut out = vec![];
        for w in &perms {
            let sign = crate::monomial::perm_sign(w);
            for exps in (0..n).map(|_| 0..m).multi_cartesian_product() {
                let det = exps.iter().map(|e| e * step).sum::<u32>() % ambient;
                if keep(sign, det) {
                    out.push(MonomialElement::from_raw(
                        w.clone(),
                        exps.iter().map(|e| e * step).collect(),
                        ambient,
                    ));
                }
            }
            if n == 0 {
                out.push(MonomialElement::from_raw(vec![], vec![], ambient));
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn ambient_order(&self) -> u32 {
        self.order
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[MonomialElement] {
        &self.elements
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn with_kind(mut self, kind: GroupKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn contains(&self, e: &MonomialElement) -> bool {
        self.index.contains_key(e)
    }

    pub fn index_of(&self, e: &MonomialElement) -> Option<u32> {
        self.index.get(e).copied()
    }

    /// Same ambient and same element set, regardless of provenance.
    /// Equality as subgroups of `𝔾_n`, independent of the ambient order.
    pub fn same_elements(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self == other;
        }
        if self.n != other.n || self.elements.len() != other.elements.len() {
            return false;
        }
        let l = crate::cyclo::lcm(self.order, other.order);
        match (self.lift(l), other.lift(l)) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    }

    /// Re-expresses the group over `μ_target`.
    pub fn lift(&self, target: u32) -> Result<Self> {
        let elems = self
            .elements
            .iter()
            .map(|e| e.lift(target))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_closed_set(
            self.n,
            target,
            elems,
            self.kind.clone(),
        ))
    }

    /// Set of permutations occurring in the group.
    pub fn projection(&self) -> BTreeSet<Vec<u8>> {
        self.elements.iter().map(|e| e.perm().to_vec()).collect()
    }

    pub fn projection_is_surjective(&self) -> bool {
        self.projection().len() == factorial(self.n)
    }

    /// Smallest `m` with every torus entry of every element in `μ_m`.
    pub fn torus_exponent(&self) -> u32 {
        self.elements
            .iter()
            .flat_map(|e| e.exps().iter())
            .fold(1, |acc, &e| {
                let ord = self.order / num_integer::gcd(e, self.order);
                lcm(acc, ord)
            })
    }

    /// Whether `self` is normal in `other` (checked on generators of `other`).
    pub fn is_normal_in(&self, other: &Self) -> bool {
        let ig = IndexedGroup::new(other);
        let gens: Vec<_> = ig
            .generating_set()
            .into_iter()
            .map(|i| ig.element(i).clone())
            .collect();
        self.elements
            .iter()
            .all(|x| gens.iter().all(|g| self.contains(&x.conjugate_by(g))))
    }

    /// Thick in `G(m,1,n)`: surjects onto `S_n` and is normal in `G(m,1,n)`.
    pub fn is_thick(&self, ambient_m: u32) -> Result<bool> {
        if !self.elements.iter().all(|e| e.entries_in(ambient_m)) {
            return Err(Error::NotInAmbient {
                m: ambient_m,
                n: self.n,
            });
        }
        if !self.projection_is_surjective() {
            return Ok(false);
        }
        let full = Self::make_gmpn_in(ambient_m, 1, self.n, self.order)?;
        Ok(self.is_normal_in(&full))
    }

    /// `T_G = G ∩ torus`, with the order of its determinant image.
    pub fn torus_part(&self) -> TorusSubgroup {
        let torus: Vec<_> = self
            .elements
            .iter()
            .filter(|e| e.is_torus())
            .cloned()
            .collect();
        let dets: BTreeSet<u32> = torus
            .iter()
            .map(|t| t.det_char().torus_det.exponent())
            .collect();
        let cprime = dets.len() as u32;
        let m = self.torus_exponent();
        let group = Self::from_closed_set(self.n, self.order, torus, GroupKind::Generated);

        let step = self.order / m;
        let cstep = self.order / cprime;
        let n = self.n;
        let mut gens = vec![];
        for &d in &dets {
            let mut e = vec![0i64; n];
            if n > 0 {
                e[0] = d as i64;
            }
            gens.push(MonomialElement::torus(e, self.order).expect("valid"));
        }
        for eps in 0..m {
            for i in 0..n {
                for j in 0..n {
                    if i == j {
                        continue;
                    }
                    let mut e = vec![0i64; n];
                    e[i] += (eps * step) as i64;
                    e[j] -= (eps * step) as i64;
                    gens.push(MonomialElement::torus(e, self.order).expect("valid"));
                }
            }
        }
        let generated = Self::closure_generate(n, self.order, &gens, DEFAULT_CAP)
            .map(|g| g.same_elements(&group))
            .unwrap_or(false);
        let expected: Vec<MonomialElement> = (0..n)
            .map(|_| 0..m)
            .multi_cartesian_product()
            .filter(|ex| (ex.iter().sum::<u32>() * step) % cstep == 0)
            .map(|ex| {
                MonomialElement::torus(ex.iter().map(|&x| (x * step) as i64).collect(), self.order)
                    .expect("valid")
            })
            .collect();
        let matches_form = Self::from_closed_set(n, self.order, expected, GroupKind::Generated)
            .same_elements(&group);
        TorusSubgroup {
            group,
            m,
            cprime_order: cprime,
            generated_by_standard_set: generated,
            matches_t_c_cprime: matches_form,
        }
    }

    pub fn descriptor(&self) -> String {
        self.kind.to_string()
    }
}

fn check_params(m: u32, p: u32, n: usize, ambient: u32) -> Result<()> {
    if m == 0 || p == 0 {
        return Err(Error::InvalidParameter("m and p must be positive".into()));
    }
    if m % p != 0 {
        return Err(Error::NotDivisor { p, m });
    }
    if n == 0 {
        return Err(Error::InvalidParameter("rank n must be at least 1".into()));
    }
    if ambient % m != 0 {
        return Err(Error::InvalidParameter(format!(
            "μ_{m} is not contained in μ_{ambient}"
        )));
    }
    Ok(())
}

/// `T_G = G ∩ (C^×)^n` together with the data of its `T_{C,C'}` description.
#[derive(Clone, Debug)]
pub struct TorusSubgroup {
    pub group: FiniteMonomialGroup,
    /// Smallest `m` such that `G ⊆ μ_m^n ⋊ S_n`.
    pub m: u32,
    /// `|C'| = |det(T_G)|`.
    pub cprime_order: u32,
    /// `T_G` is generated by `t_1^{(ε')}`, `ε' ∈ C'`, and `t_i^{(ε)} t_j^{(ε⁻¹)}`, `ε ∈ C`.
    pub generated_by_standard_set: bool,
    /// `T_G = {t ∈ C^n : det t ∈ C'}`.
    pub matches_t_c_cprime: bool,
}

/// Every thick subgroup of `G(m,1,n)`, found by enumerating the normal
/// subgroups of `G(m,1,n)` and keeping those that surject onto `S_n`.
pub fn enumerate_thick(m: u32, n: usize, cap: usize) -> Result<Vec<FiniteMonomialGroup>> {
    let predicted = (m as usize)
        .checked_pow(n as u32)
        .and_then(|v| v.checked_mul(factorial(n)));
    if predicted.is_none_or(|size| size > cap) {
        return Err(Error::CapExceeded { cap });
    }
    let ambient = FiniteMonomialGroup::make_gmpn(m, 1, n)?;
    let ig = IndexedGroup::new(&ambient);
    let mut out: Vec<_> = ig
        .normal_subgroups(|_, _| true)
        .iter()
        .map(|s| ig.to_group(s))
        .filter(|g| g.projection_is_surjective())
        .collect();
    out.sort_by(|a, b| {
        b.order()
            .cmp(&a.order())
            .then_with(|| a.elements.cmp(&b.elements))
    });
    Ok(out)
}

/// Names a thick subgroup of `G(m,1,n)` as one of `G(m,p,n)` or `W(m,d,n)`
/// by comparison with the explicit constructions.
pub fn identify_thick(g: &FiniteMonomialGroup, m: u32) -> Option<GroupKind> {
    let n = g.rank();
    let divs: Vec<u32> = (1..=m).filter(|d| m % d == 0).collect();
    for &p in &divs {
        if let Ok(c) = FiniteMonomialGroup::make_gmpn_in(m, p, n, g.ambient_order()) {
            if c.same_elements(g) {
                return Some(GroupKind::Gmpn { m, p, n });
            }
        }
    }
    for &d in &divs {
        if let Ok(c) = FiniteMonomialGroup::make_w_in(m, d, n, g.ambient_order()) {
            if c.same_elements(g) {
                return Some(GroupKind::W { m, cprime: d, n });
            }
        }
    }
    for &d in &divs {
        if let Ok(c) = FiniteMonomialGroup::make_x_in(m, d, n, g.ambient_order()) {
            if c.same_elements(g) {
                return Some(GroupKind::X { m, cprime: d, n });
            }
        }
    }
    None
}

/// How a group is requested from the outside world.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum GroupSpec {
    #[serde(rename = "G")]
    Gmpn { m: u32, p: u32, n: usize },
    #[serde(rename = "W")]
    W { m: u32, cprime: u32, n: usize },
    #[serde(rename = "X")]
    X { m: u32, cprime: u32, n: usize },
    /// `μ(G(m,p,n))`.
    #[serde(rename = "mu")]
    Mu { m: u32, p: u32, n: usize },
    #[serde(rename = "explicit")]
    Explicit { elements: Vec<MonomialElement> },
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteMonomialGroup> {
        match self {
            GroupSpec::Gmpn { m, p, n } => FiniteMonomialGroup::make_gmpn(*m, *p, *n),
            GroupSpec::W { m, cprime, n } => FiniteMonomialGroup::make_w(*m, *cprime, *n),
            GroupSpec::X { m, cprime, n } => FiniteMonomialGroup::make_x(*m, *cprime, *n),
            GroupSpec::Mu { m, p, n } => {
                crate::mystic::mu_group(&FiniteMonomialGroup::make_gmpn(*m, *p, *n)?)
            }
            GroupSpec::Explicit { elements } => {
                let first = elements.first().ok_or_else(|| {
                    Error::InvalidParameter("explicit group needs at least the identity".into())
                })?;
                FiniteMonomialGroup::from_elements(first.rank(), first.order(), elements.clone())
            }
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// Accepts `G(m,p,n)`, `W(m,d,n)`, `X(m,d,n)`, `mu(G(m,p,n))`, `S<n>` or a JSON object.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('{') {
            return serde_json::from_str(s).map_err(|e| Error::InvalidParameter(e.to_string()));
        }
        let bad = || Error::InvalidParameter(format!("unrecognized group `{s}`"));
        let args = |body: &str| -> Result<(u32, u32, usize)> {
            let parts: Vec<&str> = body.split(',').map(str::trim).collect();
            if parts.len() != 3 {
                return Err(bad());
            }
            let a = parts[0].parse().map_err(|_| bad())?;
            let b = parts[1].parse().map_err(|_| bad())?;
            let c = parts[2].parse().map_err(|_| bad())?;
            Ok((a, b, c))
        };
        if let Some(rest) = s.strip_prefix("mu(").and_then(|r| r.strip_suffix(')')) {
            return match rest.parse::<GroupSpec>()? {
                GroupSpec::Gmpn { m, p, n } => Ok(GroupSpec::Mu { m, p, n }),
                _ => Err(bad()),
            };
        }
        if let Some(body) = s.strip_prefix("G(").and_then(|r| r.strip_suffix(')')) {
            let (m, p, n) = args(body)?;
            return Ok(GroupSpec::Gmpn { m, p, n });
        }
        if let Some(body) = s.strip_prefix("W(").and_then(|r| r.strip_suffix(')')) {
            let (m, cprime, n) = args(body)?;
            return Ok(GroupSpec::W { m, cprime, n });
        }
        if let Some(body) = s.strip_prefix("X(").and_then(|r| r.strip_suffix(')')) {
            let (m, cprime, n) = args(body)?;
            return Ok(GroupSpec::X { m, cprime, n });
        }
        if let Some(n) = s.strip_prefix('S').and_then(|r| r.parse().ok()) {
            return Ok(GroupSpec::Gmpn { m: 1, p: 1, n });
        }
        Err(bad())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s1(n: usize, order: u32) -> MonomialElement {
        MonomialElement::simple_reflection(n, 1, order).unwrap()
    }

    #[test]
    fn closure_examples() {
        let triv = FiniteMonomialGroup::closure_generate(2, 2, &[], 10).unwrap();
        assert_eq!(triv.order(), 1);
        let s3 = FiniteMonomialGroup::closure_generate(
            3,
            1,
            &[
                s1(3, 1),
                MonomialElement::simple_reflection(3, 2, 1).unwrap(),
            ],
            100,
        )
        .unwrap();
        assert_eq!(s3.order(), 6);
        let sigma = &s1(2, 2) * &MonomialElement::torus_generator(2, 1, 1, 2).unwrap();
        let c4 = FiniteMonomialGroup::closure_generate(2, 2, &[sigma], 100).unwrap();
        assert_eq!(c4.order(), 4);
        assert_eq!(
            FiniteMonomialGroup::closure_generate(
                3,
                1,
                &[
                    s1(3, 1),
                    MonomialElement::simple_reflection(3, 2, 1).unwrap()
                ],
                5
            ),
            Err(Error::CapExceeded { cap: 5 })
        );
    }

    #[test]
    fn gmpn_examples() {
        let g = FiniteMonomialGroup::make_gmpn_in(2, 2, 2, 2).unwrap();
        let expect: Vec<MonomialElement> = vec![
            MonomialElement::identity(2, 2),
            s1(2, 2),
            MonomialElement::torus(vec![1, 1], 2).unwrap(),
            &MonomialElement::torus(vec![1, 1], 2).unwrap() * &s1(2, 2),
        ];
        let expect = FiniteMonomialGroup::from_elements(2, 2, expect).unwrap();
        assert!(g.same_elements(&expect));
        assert_eq!(FiniteMonomialGroup::make_gmpn(1, 1, 4).unwrap().order(), 24);
        assert_eq!(FiniteMonomialGroup::make_gmpn(6, 3, 2).unwrap().order(), 24);
        assert_eq!(
            FiniteMonomialGroup::make_gmpn(6, 4, 2),
            Err(Error::NotDivisor { p: 4, m: 6 })
        );
    }

    #[test]
    fn w_examples() {
        let w = FiniteMonomialGroup::make_w_in(2, 1, 2, 2).unwrap();
        let t1 = MonomialElement::torus_generator(2, 1, 1, 2).unwrap();
        let t2 = MonomialElement::torus_generator(2, 2, 1, 2).unwrap();
        let expect = vec![
            MonomialElement::identity(2, 2),
            MonomialElement::torus(vec![1, 1], 2).unwrap(),
            &s1(2, 2) * &t1,
            &s1(2, 2) * &t2,
        ];
        let expect = FiniteMonomialGroup::from_elements(2, 2, expect).unwrap();
        assert!(w.same_elements(&expect));
        for (m, n) in [(2, 2), (2, 3), (4, 2)] {
            assert!(FiniteMonomialGroup::make_w(m, m, n)
                .unwrap()
                .same_elements(&FiniteMonomialGroup::make_gmpn(m, 1, n).unwrap()));
        }
        assert_eq!(FiniteMonomialGroup::make_w(2, 1, 3).unwrap().order(), 24);
    }

    #[test]
    fn thickness() {
        let g222 = FiniteMonomialGroup::make_gmpn(2, 2, 2).unwrap();
        assert!(g222.is_thick(2).unwrap());
        let sym = FiniteMonomialGroup::make_gmpn_in(1, 1, 3, 4).unwrap();
        assert!(!sym.is_thick(2).unwrap());
        let triv = FiniteMonomialGroup::closure_generate(2, 4, &[], 1).unwrap();
        assert!(!triv.is_thick(2).unwrap());
        let g4 = FiniteMonomialGroup::make_gmpn(4, 1, 2).unwrap();
        assert_eq!(g4.is_thick(2), Err(Error::NotInAmbient { m: 2, n: 2 }));
    }

    #[test]
    fn thick_enumeration_small() {
        let thick = enumerate_thick(2, 2, DEFAULT_CAP).unwrap();
        assert_eq!(thick.len(), 3);
        let kinds: BTreeSet<String> = thick
            .iter()
            .map(|g| identify_thick(g, 2).unwrap().to_string())
            .collect();
        assert_eq!(
            kinds,
            ["G(2,1,2)", "G(2,2,2)", "W(2,1,2)"]
                .iter()
                .map(|s| s.to_string())
                .collect()
        );
        let sym = enumerate_thick(1, 3, DEFAULT_CAP).unwrap();
        assert_eq!(sym.len(), 1);
        assert_eq!(sym[0].order(), 6);
    }

    #[test]
    fn twisted_family() {
        // the odd-permutation coset sits over η C' with η = i, C' = {±1}
        let x = FiniteMonomialGroup::make_x(4, 2, 2).unwrap();
        assert_eq!(x.order(), 16);
        assert!(x.is_thick(4).unwrap());
        let g = MonomialElement::from_one_based(&[2, 1], &[1, 0], 4).unwrap();
        assert!(x.contains(&g));
        assert!(!x.contains(&MonomialElement::simple_reflection(2, 1, 4).unwrap()));
        let t = x.torus_part();
        assert_eq!((t.group.order(), t.cprime_order), (8, 2));
        assert!(t.matches_t_c_cprime);
        assert!(FiniteMonomialGroup::make_x(4, 1, 2).is_err());
        assert!(FiniteMonomialGroup::make_x(2, 2, 2).is_err());
        let kinds: BTreeSet<String> = enumerate_thick(4, 2, DEFAULT_CAP)
            .unwrap()
            .iter()
            .map(|g| identify_thick(g, 4).unwrap().to_string())
            .collect();
        assert!(kinds.contains("X(4,2,2)"));
        assert_eq!(kinds.len(), 5);
    }

    #[test]
    fn torus_parts() {
        let t = FiniteMonomialGroup::make_gmpn(2, 2, 2)
            .unwrap()
            .torus_part();
        assert_eq!((t.group.order(), t.cprime_order), (2, 1));
        assert!(t.generated_by_standard_set && t.matches_t_c_cprime);
        let t = FiniteMonomialGroup::make_gmpn(3, 1, 3)
            .unwrap()
            .torus_part();
        assert_eq!((t.group.order(), t.cprime_order, t.m), (27, 3, 3));
        let w = FiniteMonomialGroup::make_w(2, 1, 2).unwrap();
        let t = w.torus_part();
        assert_eq!((t.group.order(), t.cprime_order), (2, 1));
        assert!(t
            .group
            .contains(&MonomialElement::torus(vec![2, 2], 4).unwrap()));
    }

    #[test]
    fn spec_parsing() {
        assert_eq!(
            "G(2,2,3)".parse::<GroupSpec>().unwrap(),
            GroupSpec::Gmpn { m: 2, p: 2, n: 3 }
        );
        assert_eq!(
            "mu(G(2,2,2))".parse::<GroupSpec>().unwrap(),
            GroupSpec::Mu { m: 2, p: 2, n: 2 }
        );
        assert_eq!(
            r#"{"kind":"W","m":2,"cprime":1,"n":2}"#.parse::<GroupSpec>().unwrap(),
            GroupSpec::W {
                m: 2,
                cprime: 1,
                n: 2
            }
        );
        assert_eq!(
            "S4".parse::<GroupSpec>().unwrap(),
            GroupSpec::Gmpn { m: 1, p: 1, n: 4 }
        );
        assert!("H(1,2,3)".parse::<GroupSpec>().is_err());
    }
}
