//! The group algebra of `μ_N^n ⋊ S_n` over cyclotomic scalars, the elements
//! `Q_w^{(c)}` and the automorphisms `J_c`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::ser::SerializeSeq;
use serde::Serialize;

use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::groups::FiniteMonomialGroup;
use crate::linalg::Matrix;
use crate::monomial::{inversions, MonomialElement};
use crate::qpoly::{weighted_operator, ExponentVector, SliceOperator, Twist};

/// A finitely supported combination `Σ a_g g`; no zero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    n: usize,
    order: u32,
    terms: BTreeMap<MonomialElement, Cyclotomic>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize, order: u32) -> Self {
        GroupAlgebraElement {
            n,
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize, order: u32) -> Self {
        Self::from_element(MonomialElement::identity(n, order))
    }

    pub fn from_element(g: MonomialElement) -> Self {
        Self::term(g, Cyclotomic::one(1))
    }

    pub fn term(g: MonomialElement, c: Cyclotomic) -> Self {
        let mut a = Self::zero(g.rank(), g.order());
        a.add_term(g, c).expect("same ambient");
        a
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MonomialElement, &Cyclotomic)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &MonomialElement> {
        self.terms.keys()
    }

    pub fn coeff(&self, g: &MonomialElement) -> Cyclotomic {
        self.terms
            .get(g)
            .cloned()
            .unwrap_or_else(|| Cyclotomic::zero(1))
    }

    pub fn add_term(&mut self, g: MonomialElement, c: Cyclotomic) -> Result<()> {
        if g.rank() != self.n || g.order() != self.order {
            return Err(Error::AmbientMismatch {
                n1: self.n,
                order1: self.order,
                n2: g.rank(),
                order2: g.order(),
            });
        }
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.get_mut(&g) {
            Some(x) => {
                *x = &*x + &c;
                if x.is_zero() {
                    self.terms.remove(&g);
                }
            }
            None => {
                self.terms.insert(g, c);
            }
        }
        Ok(())
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.n != other.n || self.order != other.order {
            return Err(Error::AmbientMismatch {
                n1: self.n,
                order1: self.order,
                n2: other.n,
                order2: other.order,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(g.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&Cyclotomic::from_integer(-1)))
    }

    pub fn scale(&self, s: &Cyclotomic) -> Self {
        let mut out = Self::zero(self.n, self.order);
        for (g, c) in &self.terms {
            out.add_term(g.clone(), c * s).expect("same ambient");
        }
        out
    }

    /// `x a x⁻¹`.
    pub fn conjugate_by(&self, x: &MonomialElement) -> Result<Self> {
        let xi = x.invert();
        let mut out = Self::zero(self.n, self.order);
        for (g, c) in &self.terms {
            out.add_term(x.compose(g)?.compose(&xi)?, c.clone())?;
        }
        Ok(out)
    }

    pub fn is_torus_supported(&self) -> bool {
        self.terms.keys().all(MonomialElement::is_torus)
    }

    /// Re-expresses the element over `μ_target`.
    pub fn lift(&self, target: u32) -> Result<Self> {
        let mut out = Self::zero(self.n, target);
        for (g, c) in &self.terms {
            out.add_term(g.lift(target)?, c.clone())?;
        }
        Ok(out)
    }
}

/// Convolution product in the group algebra.
pub fn ga_mul(a: &GroupAlgebraElement, b: &GroupAlgebraElement) -> Result<GroupAlgebraElement> {
    a.check_ambient(b)?;
    let mut acc: HashMap<MonomialElement, Cyclotomic> = HashMap::new();
    for (g, x) in &a.terms {
        for (h, y) in &b.terms {
            let gh = g.compose(h)?;
            let v = x * y;
            match acc.get_mut(&gh) {
                Some(s) => *s = &*s + &v,
                None => {
                    acc.insert(gh, v);
                }
            }
        }
    }
    let mut out = GroupAlgebraElement::zero(a.n, a.order);
    for (g, c) in acc {
        out.add_term(g, c)?;
    }
    Ok(out)
}

/// `e_G = Σ_{g ∈ G} g`.
pub fn e_group(g: &FiniteMonomialGroup) -> GroupAlgebraElement {
    let mut out = GroupAlgebraElement::zero(g.rank(), g.ambient_order());
    for e in g.elements() {
        out.add_term(e.clone(), Cyclotomic::one(1))
            .expect("same ambient");
    }
    out
}

fn check_twist_ambient(c: &Cyclotomic, order: u32) -> Result<Cyclotomic> {
    if order % 2 != 0 {
        return Err(Error::InvalidParameter(format!(
            "ambient μ_{order} does not contain -1"
        )));
    }
    c.inv()
}

/// `Q_ij^{(c)} = ¼((c+c⁻¹)(1-τ_iτ_j) + (c⁻¹-c+2)τ_i + (c-c⁻¹+2)τ_j)` with
/// `τ_k = t_k^{(-1)}` (one-based `i < j`).
pub fn q_ij(
    c: &Cyclotomic,
    i: usize,
    j: usize,
    n: usize,
    order: u32,
) -> Result<GroupAlgebraElement> {
    let cinv = check_twist_ambient(c, order)?;
    if i == 0 || j > n || i >= j {
        return Err(Error::IndexOutOfRange { index: i.max(j), n });
    }
    let half = (order / 2) as i64;
    let tau = |ks: &[usize]| {
        let mut e = vec![0i64; n];
        for &k in ks {
            e[k - 1] = half;
        }
        MonomialElement::torus(e, order)
    };
    let quarter = Cyclotomic::from_fraction(1, 4)?;
    let two = Cyclotomic::from_integer(2);
    let sum = c + &cinv;
    let mut q = GroupAlgebraElement::zero(n, order);
    q.add_term(tau(&[])?, &quarter * &sum)?;
    q.add_term(tau(&[i, j])?, -(&quarter * &sum))?;
    q.add_term(tau(&[i])?, &quarter * &(&(&cinv - c) + &two))?;
    q.add_term(tau(&[j])?, &quarter * &(&(c - &cinv) + &two))?;
    Ok(q)
}

/// `Q_w^{(c)} = ∏_{i<j, w(i)>w(j)} Q_ij^{(c)}` (a product of commuting torus elements).
pub fn q_w_element(c: &Cyclotomic, w: &[u8], order: u32) -> Result<GroupAlgebraElement> {
    let n = w.len();
    check_twist_ambient(c, order)?;
    let mut acc = GroupAlgebraElement::one(n, order);
    for (i, j) in inversions(w) {
        acc = ga_mul(&acc, &q_ij(c, i + 1, j + 1, n, order)?)?;
    }
    Ok(acc)
}

/// `J_c(t w) = t w Q_w^{(c)}`, extended linearly.
pub fn j_c(c: &Cyclotomic, a: &GroupAlgebraElement) -> Result<GroupAlgebraElement> {
    let mut cache: HashMap<Vec<u8>, GroupAlgebraElement> = HashMap::new();
    let mut out = GroupAlgebraElement::zero(a.n, a.order);
    for (g, x) in &a.terms {
        let q = match cache.get(g.perm()) {
            Some(q) => q,
            None => {
                let q = q_w_element(c, g.perm(), a.order)?;
                cache.entry(g.perm().to_vec()).or_insert(q)
            }
        };
        for (u, y) in &q.terms {
            out.add_term(g.compose(u)?, x * y)?;
        }
    }
    Ok(out)
}

/// `Ψ(a)(k) = Σ a_t ∏ ζ_j^{k_j}` for `a` supported on the torus.
pub fn psi_eval(a: &GroupAlgebraElement, k: &ExponentVector) -> Result<Cyclotomic> {
    if k.len() != a.n {
        return Err(Error::DimensionMismatch(format!(
            "exponent of length {} for rank {}",
            k.len(),
            a.n
        )));
    }
    let mut acc = Cyclotomic::zero(1);
    for (t, x) in &a.terms {
        if !t.is_torus() {
            return Err(Error::NotTorus);
        }
        let e: u64 = t
            .exps()
            .iter()
            .zip(&k.0)
            .map(|(&e, &kj)| e as u64 * kj as u64)
            .sum();
        let r = Cyclotomic::root(a.order, (e % a.order as u64) as i64)?;
        acc = &acc + &(x * &r);
    }
    Ok(acc)
}

/// `ρ_c(a)` on the degree-`d` slice.
pub fn rho_slice(a: &GroupAlgebraElement, c: &Twist, d: u32) -> Result<SliceOperator> {
    weighted_operator(c, a.terms.iter(), a.n, d)
}

/// `ρ_c(a)` on the degree-`d` slice as a dense matrix.
pub fn rho_apply(a: &GroupAlgebraElement, c: &Twist, d: u32) -> Result<Matrix> {
    Ok(rho_slice(a, c, d)?.to_dense())
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(g, c)| format!("({c})·[{g}]"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize)]
struct TermJson<'a> {
    elem: &'a MonomialElement,
    coeff: &'a Cyclotomic,
}

impl Serialize for GroupAlgebraElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (elem, coeff) in &self.terms {
            seq.serialize_element(&TermJson { elem, coeff })?;
        }
        seq.end()
    }
}
