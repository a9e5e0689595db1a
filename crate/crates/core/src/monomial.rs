//! Elements of the finite monomial group `μ_N^n ⋊ S_n`.
//!
//! An element is stored as `t·w`: the torus factor `t = t_1^{(ζ^{e_1})}⋯t_n^{(ζ^{e_n})}`
//! on the left, the permutation `w` on the right. Permutations are image lists,
//! zero-based internally and one-based in every external format.

use std::fmt;
use std::ops::Mul;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::cyclo::{Cyclotomic, RootOfUnity};
use crate::error::{Error, Result};

/// All permutations of `0..n` in lexicographic order of their image lists.
pub fn permutations(n: usize) -> Vec<Vec<u8>> {
    (0..n as u8).permutations(n).collect()
}

pub fn perm_inverse(w: &[u8]) -> Vec<u8> {
    let mut inv = vec![0u8; w.len()];
    for (i, &wi) in w.iter().enumerate() {
        inv[wi as usize] = i as u8;
    }
    inv
}

pub fn perm_compose(w: &[u8], v: &[u8]) -> Vec<u8> {
    v.iter().map(|&i| w[i as usize]).collect()
}

/// Pairs `i < j` with `w(i) > w(j)`.
pub fn inversions(w: &[u8]) -> impl Iterator<Item = (usize, usize)> + '_ {
    (0..w.len())
        .tuple_combinations()
        .filter(move |&(i, j)| w[i] > w[j])
}

pub fn perm_sign(w: &[u8]) -> i8 {
    if inversions(w).count() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Whether `w` is a single cycle through all points.
pub fn is_long_cycle(w: &[u8]) -> bool {
    let n = w.len();
    let mut len = 1;
    let mut i = w[0] as usize;
    while i != 0 {
        i = w[i] as usize;
        len += 1;
    }
    len == n
}

/// `w(k) = (k_{w⁻¹(1)}, …, k_{w⁻¹(n)})`, i.e. `w(k)_{w(i)} = k_i`.
pub fn permute_vector<T: Copy + Default>(w: &[u8], k: &[T]) -> Vec<T> {
    let mut out = vec![T::default(); k.len()];
    for (i, &wi) in w.iter().enumerate() {
        out[wi as usize] = k[i];
    }
    out
}

/// One element `t·w` of `μ_N^n ⋊ S_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MonomialElement {
    perm: Vec<u8>,
    exps: Vec<u32>,
    order: u32,
}

/// `det` of a monomial element, split into the sign of the permutation and
/// the determinant of the torus factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DetValue {
    pub sign: i8,
    pub torus_det: RootOfUnity,
}

impl DetValue {
    pub fn to_cyclotomic(&self) -> Cyclotomic {
        let t = self.torus_det.to_cyclotomic();
        if self.sign < 0 {
            -t
        } else {
            t
        }
    }

    /// The determinant as a single root of unity of order `lcm(N, 2)`.
    pub fn as_root(&self) -> RootOfUnity {
        let s = if self.sign < 0 {
            RootOfUnity::new(2, 1)
        } else {
            RootOfUnity::one(1)
        };
        s * self.torus_det
    }
}

impl MonomialElement {
    pub fn new(perm: Vec<u8>, exps: Vec<i64>, order: u32) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        let n = perm.len();
        if exps.len() != n {
            return Err(Error::InvalidElement(format!(
                "{} exponents for rank {n}",
                exps.len()
            )));
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p as usize >= n || std::mem::replace(&mut seen[p as usize], true) {
                return Err(Error::InvalidElement(format!(
                    "{perm:?} is not a permutation"
                )));
            }
        }
        let exps = exps
            .into_iter()
            .map(|e| e.rem_euclid(order as i64) as u32)
            .collect();
        Ok(MonomialElement { perm, exps, order })
    }

    /// Builds from a one-based image list, as used in the JSON format.
    pub fn from_one_based(perm: &[usize], exps: &[i64], order: u32) -> Result<Self> {
        let perm = perm
            .iter()
            .map(|&p| {
                if p == 0 || p > perm.len() {
                    Err(Error::InvalidElement(format!("image {p} out of range")))
                } else {
                    Ok((p - 1) as u8)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(perm, exps.to_vec(), order)
    }

    pub(crate) fn from_raw(perm: Vec<u8>, exps: Vec<u32>, order: u32) -> Self {
        debug_assert!(exps.iter().all(|&e| e < order));
        MonomialElement { perm, exps, order }
    }

    pub fn identity(n: usize, order: u32) -> Self {
        MonomialElement {
            perm: (0..n as u8).collect(),
            exps: vec![0; n],
            order,
        }
    }

    pub fn permutation(perm: Vec<u8>, order: u32) -> Result<Self> {
        let n = perm.len();
        Self::new(perm, vec![0; n], order)
    }

    /// The simple transposition `s_i` swapping `x_i` and `x_{i+1}` (one-based `i`).
    pub fn simple_reflection(n: usize, i: usize, order: u32) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, n: n - 1 });
        }
        let mut perm: Vec<u8> = (0..n as u8).collect();
        perm.swap(i - 1, i);
        Self::permutation(perm, order)
    }

    /// `t_j^{(ζ_N^e)}` (one-based `j`).
    pub fn torus_generator(n: usize, j: usize, exponent: i64, order: u32) -> Result<Self> {
        if j == 0 || j > n {
            return Err(Error::IndexOutOfRange { index: j, n });
        }
        let mut exps = vec![0; n];
        exps[j - 1] = exponent;
        Self::new((0..n as u8).collect(), exps, order)
    }

    pub fn torus(exps: Vec<i64>, order: u32) -> Result<Self> {
        let n = exps.len();
        Self::new((0..n as u8).collect(), exps, order)
    }

    /// The scalar element `z^{(ε)} = t_1^{(ε)}⋯t_n^{(ε)}`.
    pub fn central_scalar(n: usize, order: u32, eps: RootOfUnity) -> Result<Self> {
        if order % eps.order() != 0 {
            return Err(Error::InvalidParameter(format!(
                "ε of order {} does not live in μ_{order}",
                eps.order()
            )));
        }
        let e = eps.lift(order).exponent() as i64;
        Self::torus(vec![e; n], order)
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn perm(&self) -> &[u8] {
        &self.perm
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_torus(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| p as usize == i)
    }

    pub fn is_identity(&self) -> bool {
        self.is_torus() && self.exps.iter().all(|&e| e == 0)
    }

    /// The torus factor `t` of `t·w`.
    pub fn torus_part(&self) -> MonomialElement {
        MonomialElement {
            perm: (0..self.rank() as u8).collect(),
            exps: self.exps.clone(),
            order: self.order,
        }
    }

    /// The permutation factor `w` of `t·w`.
    pub fn perm_part(&self) -> MonomialElement {
        MonomialElement {
            perm: self.perm.clone(),
            exps: vec![0; self.rank()],
            order: self.order,
        }
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.rank() != other.rank() || self.order != other.order {
            return Err(Error::AmbientMismatch {
                n1: self.rank(),
                order1: self.order,
                n2: other.rank(),
                order2: other.order,
            });
        }
        Ok(())
    }

    /// `(t w)(t' w') = (t · w(t'))(w w')`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(self.compose_unchecked(other))
    }

    fn compose_unchecked(&self, other: &Self) -> Self {
        let n = self.rank();
        let mut exps = self.exps.clone();
        for i in 0..n {
            let j = self.perm[i] as usize;
            exps[j] = (exps[j] + other.exps[i]) % self.order;
        }
        MonomialElement {
            perm: perm_compose(&self.perm, &other.perm),
            exps,
            order: self.order,
        }
    }

    pub fn invert(&self) -> Self {
        let n = self.rank();
        let exps = (0..n)
            .map(|i| (self.order - self.exps[self.perm[i] as usize]) % self.order)
            .collect();
        MonomialElement {
            perm: perm_inverse(&self.perm),
            exps,
            order: self.order,
        }
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Self::identity(self.rank(), self.order);
        for _ in 0..e {
            acc = acc.compose_unchecked(self);
        }
        acc
    }

    /// Multiplicative order of the element.
    pub fn element_order(&self) -> u64 {
        let mut k = 1;
        let mut acc = self.clone();
        while !acc.is_identity() {
            acc = acc.compose_unchecked(self);
            k += 1;
        }
        k
    }

    pub fn conjugate_by(&self, g: &Self) -> Self {
        g.compose_unchecked(self).compose_unchecked(&g.invert())
    }

    pub fn det_char(&self) -> DetValue {
        let s: u64 = self.exps.iter().map(|&e| e as u64).sum();
        DetValue {
            sign: perm_sign(&self.perm),
            torus_det: RootOfUnity::new(self.order, s as i64),
        }
    }

    /// The defining action on `V`: `a(x_i) = scalar · x_j` (one-based indices).
    pub fn act_on_basis(&self, i: usize) -> Result<(RootOfUnity, usize)> {
        let n = self.rank();
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        let j = self.perm[i - 1] as usize;
        Ok((RootOfUnity::new(self.order, self.exps[j] as i64), j + 1))
    }

    /// Re-expresses the element over `μ_target`.
    pub fn lift(&self, target: u32) -> Result<Self> {
        if target % self.order != 0 {
            return Err(Error::InvalidParameter(format!(
                "cannot lift order {} to {target}",
                self.order
            )));
        }
        let f = target / self.order;
        Ok(MonomialElement {
            perm: self.perm.clone(),
            exps: self.exps.iter().map(|e| e * f).collect(),
            order: target,
        })
    }

    /// Whether every torus entry lies in `μ_m ⊂ μ_N`.
    pub fn entries_in(&self, m: u32) -> bool {
        self.order % m == 0 && {
            let step = self.order / m;
            self.exps.iter().all(|e| e % step == 0)
        }
    }
}

impl Mul for &MonomialElement {
    type Output = MonomialElement;

    /// Panics on mismatched ambient parameters; use [`MonomialElement::compose`]
    /// for a checked product.
    fn mul(self, rhs: &MonomialElement) -> MonomialElement {
        self.compose(rhs).expect("matching ambient")
    }
}

impl fmt::Display for MonomialElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let torus = self
            .exps
            .iter()
            .enumerate()
            .map(|(i, e)| format!("t{}^{}", i + 1, e))
            .join(" ");
        let mut seen = vec![false; self.rank()];
        let mut cycles = String::new();
        for start in 0..self.rank() {
            if seen[start] || self.perm[start] as usize == start {
                continue;
            }
            let mut cyc = vec![];
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cyc.push(i + 1);
                i = self.perm[i] as usize;
            }
            cycles.push_str(&format!("({})", cyc.iter().join(" ")));
        }
        if cycles.is_empty() {
            cycles.push_str("()");
        }
        write!(f, "{torus} * {cycles}")
    }
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    n: usize,
    #[serde(rename = "N")]
    order: u32,
    perm: Vec<usize>,
    exp: Vec<i64>,
}

impl Serialize for MonomialElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ElementJson {
            n: self.rank(),
            order: self.order,
            perm: self.perm.iter().map(|&p| p as usize + 1).collect(),
            exp: self.exps.iter().map(|&e| e as i64).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MonomialElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = ElementJson::deserialize(d)?;
        if j.perm.len() != j.n {
            return Err(serde::de::Error::custom("perm length differs from n"));
        }
        MonomialElement::from_one_based(&j.perm, &j.exp, j.order).map_err(serde::de::Error::custom)
    }
}
