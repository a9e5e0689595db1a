//! Polynomials in `x_1, …, x_n` with the skew products `•_q`, the twisted
//! monomial actions `⊳_c`, and invariant-theory computations on graded slices.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::ser::SerializeSeq;
use serde::Serialize;

use crate::cyclo::{lcm, Cyclotomic, RootOfUnity, RootSum};
use crate::error::{Error, Result};
use crate::groups::FiniteMonomialGroup;
use crate::linalg::{Matrix, SparseMatrix};
use crate::monomial::{inversions, permute_vector, MonomialElement};

/// Exponent vector `k` of the monomial `x^k`.
///
/// Ordered by degree first, then descending lexicographically, so that
/// `x_1^2 < x_1 x_2 < x_2^2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentVector(pub Vec<u32>);

impl ExponentVector {
    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    /// `x_i` with one-based `i`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut k = vec![0; n];
        k[i - 1] = 1;
        ExponentVector(k)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `w(k) = (k_{w⁻¹(1)}, …, k_{w⁻¹(n)})`.
    pub fn permute(&self, w: &[u8]) -> Self {
        ExponentVector(permute_vector(w, &self.0))
    }

    /// `k̄ = k mod 2`.
    pub fn parity(&self) -> Vec<u32> {
        self.0.iter().map(|k| k % 2).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All exponent vectors of degree `d` in `n` variables, in basis order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<ExponentVector> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(ExponentVector(prefix.clone()));
            prefix.pop();
            return;
        }
        for first in (0..=d).rev() {
            prefix.push(first);
            rec(n, d - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = vec![];
    if n == 0 {
        if d == 0 {
            out.push(ExponentVector(vec![]));
        }
        return out;
    }
    rec(n, d, &mut vec![], &mut out);
    out
}

/// Indexed monomial basis of the degree-`d` slice.
#[derive(Clone, Debug)]
pub struct SliceBasis {
    pub degree: u32,
    pub monomials: Vec<ExponentVector>,
    index: HashMap<ExponentVector, usize>,
}

impl SliceBasis {
    pub fn new(n: usize, degree: u32) -> Self {
        let monomials = monomials_of_degree(n, degree);
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, k)| (k.clone(), i))
            .collect();
        SliceBasis {
            degree,
            monomials,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn index_of(&self, k: &ExponentVector) -> usize {
        self.index[k]
    }
}

/// The matrix `q = (q_ij)` with `q_ii = 1` and `q_ij q_ji = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    n: usize,
    entries: Vec<Vec<Cyclotomic>>,
    roots: Option<Vec<Vec<RootOfUnity>>>,
}

impl QMatrix {
    pub fn new(entries: Vec<Vec<Cyclotomic>>) -> Result<Self> {
        let n = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidQMatrix(format!(
                    "row {} has length {}",
                    i + 1,
                    row.len()
                )));
            }
            if !row[i].is_one() {
                return Err(Error::InvalidQMatrix(format!("q_{0}{0} ≠ 1", i + 1)));
            }
            for j in 0..n {
                if !(&row[j] * &entries[j][i]).is_one() {
                    return Err(Error::InvalidQMatrix(format!(
                        "q_{}{} q_{}{} ≠ 1",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        let roots = entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(Cyclotomic::as_root_of_unity)
                    .collect::<Option<Vec<_>>>()
            })
            .collect::<Option<Vec<_>>>();
        Ok(QMatrix { n, entries, roots })
    }

    /// `q_ij = s` for all `i ≠ j`, with `s = ±1`.
    fn uniform(n: usize, s: i64) -> Self {
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| Cyclotomic::from_integer(if i == j { 1 } else { s }))
                    .collect()
            })
            .collect();
        Self::new(entries).expect("±1 matrices are valid")
    }

    pub fn plus_one(n: usize) -> Self {
        Self::uniform(n, 1)
    }

    pub fn minus_one(n: usize) -> Self {
        Self::uniform(n, -1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `q_ij` with one-based indices.
    pub fn entry(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.entries[i - 1][j - 1]
    }
}

/// `⟨k, k'⟩ = ∏_{i<j} a_ij^{k'_i k_j}` with `a_ij = q_ji`, so that
/// `x^k • x^{k'} = ⟨k, k'⟩ x^{k+k'}` realizes `x_i x_j = q_ij x_j x_i`.
pub fn qform_bracket(q: &QMatrix, k: &ExponentVector, kp: &ExponentVector) -> Result<Cyclotomic> {
    if k.len() != q.n || kp.len() != q.n {
        return Err(Error::DimensionMismatch(format!(
            "exponent vectors of length {} and {} for a {}x{} q-matrix",
            k.len(),
            kp.len(),
            q.n,
            q.n
        )));
    }
    let mut pairs = (0..q.n)
        .tuple_combinations()
        .map(|(i, j)| (i, j, kp.0[i] as i64 * k.0[j] as i64))
        .filter(|&(_, _, e)| e != 0);
    match &q.roots {
        Some(roots) => {
            let acc = pairs.fold(RootOfUnity::one(1), |acc, (i, j, e)| {
                acc * roots[j][i].pow(e)
            });
            Ok(acc.to_cyclotomic())
        }
        None => pairs.try_fold(Cyclotomic::one(1), |acc, (i, j, e)| {
            Ok(&acc * &q.entries[j][i].pow(e)?)
        }),
    }
}

/// A finitely supported polynomial; no zero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPolynomial {
    n: usize,
    terms: BTreeMap<ExponentVector, Cyclotomic>,
}

impl QPolynomial {
    pub fn zero(n: usize) -> Self {
        QPolynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(ExponentVector::zero(n), Cyclotomic::one(1))
    }

    pub fn monomial(k: ExponentVector, coeff: Cyclotomic) -> Self {
        let mut p = Self::zero(k.len());
        p.add_term(k, coeff);
        p
    }

    /// `x_i` with one-based `i`.
    pub fn var(n: usize, i: usize) -> Self {
        Self::monomial(ExponentVector::unit(n, i), Cyclotomic::one(1))
    }

    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (ExponentVector, Cyclotomic)>,
    ) -> Result<Self> {
        let mut p = Self::zero(n);
        for (k, c) in terms {
            if k.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "exponent of length {} in {n} variables",
                    k.len()
                )));
            }
            p.add_term(k, c);
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Cyclotomic)> {
        self.terms.iter()
    }

    pub fn coeff(&self, k: &ExponentVector) -> Cyclotomic {
        self.terms
            .get(k)
            .cloned()
            .unwrap_or_else(|| Cyclotomic::zero(1))
    }

    pub fn add_term(&mut self, k: ExponentVector, c: Cyclotomic) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(x) => {
                *x = &*x + &c;
                if x.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    fn check_n(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "polynomials in {} and {} variables",
                self.n, other.n
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_n(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&Cyclotomic::from_integer(-1)))
    }

    pub fn scale(&self, s: &Cyclotomic) -> Self {
        let mut out = Self::zero(self.n);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), c * s);
        }
        out
    }

    /// Terms by descending degree, then descending lexicographic order.
    fn display_order(&self) -> Vec<(&ExponentVector, &Cyclotomic)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| {
            b.0.degree()
                .cmp(&a.0.degree())
                .then_with(|| b.0 .0.cmp(&a.0 .0))
        });
        v
    }

    /// Degrees occurring in the support.
    pub fn degrees(&self) -> Vec<u32> {
        self.terms
            .keys()
            .map(ExponentVector::degree)
            .dedup()
            .collect()
    }
}

/// `f •_q g`, the bilinear extension of `x^k • x^{k'} = ⟨k,k'⟩ x^{k+k'}`.
pub fn qmul(q: &QMatrix, f: &QPolynomial, g: &QPolynomial) -> Result<QPolynomial> {
    f.check_n(g)?;
    if f.n != q.n {
        return Err(Error::DimensionMismatch(format!(
            "polynomials in {} variables, q-matrix of size {}",
            f.n, q.n
        )));
    }
    let mut out = QPolynomial::zero(f.n);
    for (k, a) in &f.terms {
        for (kp, b) in &g.terms {
            let br = qform_bracket(q, k, kp)?;
            out.add_term(k.add(kp), &(a * b) * &br);
        }
    }
    Ok(out)
}

/// Whether all pairs of `polys` commute under `•_q`.
pub fn commute_check(q: &QMatrix, polys: &[QPolynomial]) -> Result<bool> {
    for (f, g) in polys.iter().tuple_combinations() {
        if qmul(q, f, g)? != qmul(q, g, f)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The twist parameter `c` of `⊳_c`: either the distinguished symbol `0`
/// (`φ ≡ 1`, the action `⊳_+`) or an invertible scalar; `⊳_-` is `c = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Twist {
    Plus,
    Scalar(Cyclotomic),
}

impl Twist {
    pub fn minus() -> Self {
        Twist::Scalar(Cyclotomic::one(1))
    }

    pub fn scalar(c: Cyclotomic) -> Self {
        if c.is_zero() {
            Twist::Plus
        } else {
            Twist::Scalar(c)
        }
    }

    /// `c ↦ c⁻¹`; the symbol `0` is fixed.
    pub fn inverse(&self) -> Self {
        match self {
            Twist::Plus => Twist::Plus,
            Twist::Scalar(c) => Twist::Scalar(c.inv().expect("nonzero twist")),
        }
    }
}

impl fmt::Display for Twist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Twist::Plus => write!(f, "0"),
            Twist::Scalar(c) => write!(f, "{c}"),
        }
    }
}

impl FromStr for Twist {
    type Err = Error;

    /// `plus`/`+` and `minus`/`-` name `⊳_±`; anything else is a scalar literal.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "plus" | "+" => Ok(Twist::Plus),
            "minus" | "-" => Ok(Twist::minus()),
            lit => Ok(Twist::scalar(lit.parse()?)),
        }
    }
}

impl Serialize for Twist {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `φ_ij^{(c)}(k) = (-1)^{k_i k_j} c^{k̄_i - k̄_j}` (one-based `i ≠ j`).
pub fn phi_eval(c: &Twist, i: usize, j: usize, k: &ExponentVector) -> Result<Cyclotomic> {
    let n = k.len();
    for idx in [i, j] {
        if idx == 0 || idx > n {
            return Err(Error::IndexOutOfRange { index: idx, n });
        }
    }
    if i == j {
        return Err(Error::InvalidParameter("φ_ij needs i ≠ j".into()));
    }
    let Twist::Scalar(c) = c else {
        return Ok(Cyclotomic::one(1));
    };
    let (ki, kj) = (k.0[i - 1], k.0[j - 1]);
    let sign = Cyclotomic::from_integer(if (ki * kj) % 2 == 0 { 1 } else { -1 });
    Ok(&sign * &c.pow((ki % 2) as i64 - (kj % 2) as i64)?)
}

/// `φ_w^{(c)}(k) = ∏_{i<j, w(i)>w(j)} φ_ij^{(c)}(k)`.
pub fn phi_w_eval(c: &Twist, w: &[u8], k: &ExponentVector) -> Result<Cyclotomic> {
    if w.len() != k.len() {
        return Err(Error::DimensionMismatch(format!(
            "permutation of {} points, exponent of length {}",
            w.len(),
            k.len()
        )));
    }
    let Twist::Scalar(c) = c else {
        return Ok(Cyclotomic::one(1));
    };
    let (sign, cpow) = phi_w_exponents(w, &k.0);
    let s = Cyclotomic::from_integer(if sign { -1 } else { 1 });
    Ok(&s * &c.pow(cpow)?)
}

/// `φ_w^{(c)}(k) = (-1)^sign c^cpow`.
fn phi_w_exponents(w: &[u8], k: &[u32]) -> (bool, i64) {
    let mut sign = 0u32;
    let mut cpow = 0i64;
    for (i, j) in inversions(w) {
        sign ^= (k[i] & k[j]) & 1;
        cpow += (k[i] % 2) as i64 - (k[j] % 2) as i64;
    }
    (sign == 1, cpow)
}

/// Coefficient of `t·w ⊳_c x^k`.
#[derive(Clone, Debug)]
enum Coef {
    Root(u32),
    Field(Cyclotomic),
}

/// Precomputed data for applying `⊳_c` with elements of `μ_N^n ⋊ S_n`.
#[derive(Clone, Debug)]
pub(crate) struct ActionKernel {
    ambient: u32,
    /// Order of the roots of unity in which coefficients are expressed, when
    /// `c` is a root of unity (or the symbol 0).
    root_order: Option<u32>,
    c_exp: u32,
    c: Option<(Cyclotomic, Cyclotomic)>,
}

impl ActionKernel {
    pub(crate) fn new(c: &Twist, ambient: u32) -> Self {
        match c {
            Twist::Plus => ActionKernel {
                ambient,
                root_order: Some(ambient),
                c_exp: 0,
                c: None,
            },
            Twist::Scalar(c) => {
                let inv = c.inv().expect("twist is nonzero");
                match c.as_root_of_unity() {
                    Some(r) => {
                        let l = lcm(lcm(ambient, 2), r.order());
                        ActionKernel {
                            ambient,
                            root_order: Some(l),
                            c_exp: r.lift(l).exponent(),
                            c: Some((c.clone(), inv)),
                        }
                    }
                    None => ActionKernel {
                        ambient,
                        root_order: None,
                        c_exp: 0,
                        c: Some((c.clone(), inv)),
                    },
                }
            }
        }
    }

    /// `ρ_c(t·w) x^k = χ_t(w(k)) φ_w^{(c)}(k) x^{w(k)}` with
    /// `χ_t(j) = ∏ ζ^{e_i j_i}`.
    fn act(&self, g: &MonomialElement, k: &[u32]) -> (Coef, Vec<u32>) {
        let wk = permute_vector(g.perm(), k);
        let n_amb = self.ambient as u64;
        let te = g
            .exps()
            .iter()
            .zip(&wk)
            .map(|(&e, &j)| e as u64 * j as u64 % n_amb)
            .sum::<u64>()
            % n_amb;
        let (sign, cpow) = match self.c {
            Some(_) => phi_w_exponents(g.perm(), k),
            None => (false, 0),
        };
        match self.root_order {
            Some(l) => {
                let l64 = l as i64;
                let mut e = te as i64 * (l64 / self.ambient as i64);
                if sign {
                    e += l64 / 2;
                }
                e += (cpow.rem_euclid(l64) * self.c_exp as i64) % l64;
                (Coef::Root(e.rem_euclid(l64) as u32), wk)
            }
            None => {
                let (c, cinv) = self.c.as_ref().expect("general twist");
                let base = if cpow >= 0 { c } else { cinv };
                let mut v = Cyclotomic::root(self.ambient, te as i64).expect("positive order");
                for _ in 0..cpow.unsigned_abs() {
                    v = &v * base;
                }
                if sign {
                    v = -v;
                }
                (Coef::Field(v), wk)
            }
        }
    }

    pub(crate) fn act_value(&self, g: &MonomialElement, k: &[u32]) -> (Cyclotomic, Vec<u32>) {
        let (coef, wk) = self.act(g, k);
        (self.coef_value(&coef), wk)
    }

    fn coef_value(&self, c: &Coef) -> Cyclotomic {
        match c {
            Coef::Root(e) => Cyclotomic::root(self.root_order.unwrap(), *e as i64).unwrap(),
            Coef::Field(v) => v.clone(),
        }
    }

    /// Accumulator for sums of coefficients.
    fn accumulator(&self) -> Acc {
        match self.root_order {
            Some(l) => Acc::Roots(RootSum::new(l)),
            None => Acc::Field(Cyclotomic::zero(1)),
        }
    }
}

enum Acc {
    Roots(RootSum),
    Field(Cyclotomic),
}

impl Acc {
    fn add(&mut self, c: &Coef, kernel: &ActionKernel, mult: &Cyclotomic) {
        if let (Acc::Roots(r), Coef::Root(e)) = (&mut *self, c) {
            if mult.is_one() {
                r.add_root(*e, 1);
                return;
            }
        }
        let v = &kernel.coef_value(c) * mult;
        *self = Acc::Field(&self.value() + &v);
    }

    fn value(&self) -> Cyclotomic {
        match self {
            Acc::Roots(r) => r.to_cyclotomic(),
            Acc::Field(f) => f.clone(),
        }
    }
}

fn check_rank(g: &MonomialElement, n: usize) -> Result<()> {
    if g.rank() != n {
        return Err(Error::DimensionMismatch(format!(
            "element of rank {} acting on {n} variables",
            g.rank()
        )));
    }
    Ok(())
}

/// `g ⊳_c x^k`, as coefficient and exponent.
pub fn act_monomial(
    c: &Twist,
    g: &MonomialElement,
    k: &ExponentVector,
) -> Result<(Cyclotomic, ExponentVector)> {
    check_rank(g, k.len())?;
    let kernel = ActionKernel::new(c, g.order());
    let (coef, wk) = kernel.act(g, &k.0);
    Ok((kernel.coef_value(&coef), ExponentVector(wk)))
}

/// `g ⊳_c f`.
pub fn act_c(c: &Twist, g: &MonomialElement, f: &QPolynomial) -> Result<QPolynomial> {
    check_rank(g, f.n)?;
    let kernel = ActionKernel::new(c, g.order());
    let mut out = QPolynomial::zero(f.n);
    for (k, a) in &f.terms {
        let (coef, wk) = kernel.act(g, &k.0);
        out.add_term(ExponentVector(wk), &kernel.coef_value(&coef) * a);
    }
    Ok(out)
}

/// A linear operator on one graded slice, stored sparsely by
/// `(row, column)` = (output monomial, input monomial) in basis order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceOperator {
    pub degree: u32,
    pub dim: usize,
    entries: BTreeMap<(usize, usize), Cyclotomic>,
}

impl SliceOperator {
    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Cyclotomic)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (&(r, c), v) in &self.entries {
            m.set(r, c, v.clone());
        }
        m
    }

    pub fn rank(&self) -> usize {
        let mut s = SparseMatrix::new();
        for (&(r, c), v) in &self.entries {
            s.add_to(r, c, v.clone());
        }
        s.rank()
    }

    pub fn trace(&self) -> Cyclotomic {
        self.entries
            .iter()
            .filter(|((r, c), _)| r == c)
            .fold(Cyclotomic::zero(1), |acc, (_, v)| &acc + v)
    }
}

/// The operator `Σ a_g ρ_c(g)` on the degree-`d` slice. All elements must
/// share one ambient.
pub fn weighted_operator<'a>(
    c: &Twist,
    terms: impl IntoIterator<Item = (&'a MonomialElement, &'a Cyclotomic)>,
    n: usize,
    d: u32,
) -> Result<SliceOperator> {
    let basis = SliceBasis::new(n, d);
    let mut kernel: Option<ActionKernel> = None;
    let mut acc: HashMap<(usize, usize), Acc> = HashMap::new();
    for (g, a) in terms {
        check_rank(g, n)?;
        let kern = match &kernel {
            Some(k) if k.ambient == g.order() => k,
            Some(k) => {
                return Err(Error::AmbientMismatch {
                    n1: n,
                    order1: k.ambient,
                    n2: g.rank(),
                    order2: g.order(),
                })
            }
            None => kernel.insert(ActionKernel::new(c, g.order())),
        };
        for (col, k) in basis.monomials.iter().enumerate() {
            let (coef, wk) = kern.act(g, &k.0);
            let row = basis.index_of(&ExponentVector(wk));
            acc.entry((row, col))
                .or_insert_with(|| kern.accumulator())
                .add(&coef, kern, a);
        }
    }
    let entries = acc
        .into_iter()
        .map(|(pos, v)| (pos, v.value()))
        .filter(|(_, v)| !v.is_zero())
        .collect();
    Ok(SliceOperator {
        degree: d,
        dim: basis.len(),
        entries,
    })
}

/// `ρ_c(e_G)` on the degree-`d` slice.
pub fn group_sum_operator(c: &Twist, g: &FiniteMonomialGroup, d: u32) -> Result<SliceOperator> {
    let one = Cyclotomic::one(1);
    weighted_operator(c, g.elements().iter().map(|e| (e, &one)), g.rank(), d)
}

/// `ρ_c(g)` on the degree-`d` slice as a dense matrix.
pub fn operator_matrix(c: &Twist, g: &MonomialElement, d: u32) -> Result<Matrix> {
    let one = Cyclotomic::one(1);
    Ok(weighted_operator(c, [(g, &one)], g.rank(), d)?.to_dense())
}

/// Both computations of the invariant dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantDimension {
    pub by_rank: usize,
    pub by_trace: usize,
}

/// Dimension of the `⊳_c`-fixed space in degree `d`, as the rank of `ρ_c(e_G)`
/// and as the trace average `(1/|G|) Σ_g tr ρ_c(g)`; disagreement is an error.
pub fn invariant_dimension(g: &FiniteMonomialGroup, c: &Twist, d: u32) -> Result<usize> {
    let dims = invariant_dimension_both(g, c, d)?;
    if dims.by_rank != dims.by_trace {
        return Err(Error::Internal(format!(
            "invariant dimension in degree {d}: rank gives {}, trace average gives {}",
            dims.by_rank, dims.by_trace
        )));
    }
    Ok(dims.by_rank)
}

pub fn invariant_dimension_both(
    g: &FiniteMonomialGroup,
    c: &Twist,
    d: u32,
) -> Result<InvariantDimension> {
    let by_rank = group_sum_operator(c, g, d)?.rank();

    let basis = SliceBasis::new(g.rank(), d);
    let kernel = ActionKernel::new(c, g.ambient_order());
    let mut acc = kernel.accumulator();
    let one = Cyclotomic::one(1);
    for e in g.elements() {
        for k in &basis.monomials {
            if permute_vector(e.perm(), &k.0) == k.0 {
                let (coef, _) = kernel.act(e, &k.0);
                acc.add(&coef, &kernel, &one);
            }
        }
    }
    let total = acc.value();
    let avg = total
        .as_rational()
        .map(|q| q / num_rational::BigRational::from_integer((g.order() as i64).into()));
    let by_trace = match avg {
        Some(q) if q.is_integer() => usize::try_from(q.to_integer())
            .map_err(|_| Error::Internal(format!("negative trace average in degree {d}")))?,
        _ => {
            return Err(Error::Internal(format!(
                "trace average {total} / {} is not a nonnegative integer",
                g.order()
            )))
        }
    };
    Ok(InvariantDimension { by_rank, by_trace })
}

/// The first `D + 1` coefficients of `∏ 1/(1 - t^{d_i})`.
pub fn hilbert_free(degrees: &[u32], max_degree: u32) -> Result<Vec<u64>> {
    if degrees.contains(&0) {
        return Err(Error::InvalidParameter(
            "generator degrees must be positive".into(),
        ));
    }
    let len = max_degree as usize + 1;
    let mut coeffs = vec![0u64; len];
    coeffs[0] = 1;
    for &d in degrees {
        let d = d as usize;
        for i in d..len {
            coeffs[i] += coeffs[i - d];
        }
    }
    Ok(coeffs)
}

/// `p_k^{(m)} = Σ_i x_i^{km}` for `k = 1, …, n-1`, then `r^{(m/p)} = (x_1⋯x_n)^{m/p}`.
pub fn fundamental_invariants(m: u32, p: u32, n: usize) -> Result<Vec<QPolynomial>> {
    if m == 0 || p == 0 || n == 0 {
        return Err(Error::InvalidParameter(
            "m, p and n must be positive".into(),
        ));
    }
    if m % p != 0 {
        return Err(Error::NotDivisor { p, m });
    }
    let one = Cyclotomic::one(1);
    let mut out = vec![];
    for k in 1..n as u32 {
        let terms = (0..n).map(|i| {
            let mut e = vec![0; n];
            e[i] = k * m;
            (ExponentVector(e), one.clone())
        });
        out.push(QPolynomial::from_terms(n, terms)?);
    }
    out.push(QPolynomial::monomial(ExponentVector(vec![m / p; n]), one));
    Ok(out)
}

/// Degrees `m, 2m, …, (n-1)m, nm/p` of the fundamental invariants.
pub fn fundamental_degrees(m: u32, p: u32, n: usize) -> Vec<u32> {
    let mut d: Vec<u32> = (1..n as u32).map(|k| k * m).collect();
    d.push(n as u32 * m / p);
    d
}

fn fmt_monomial(k: &ExponentVector) -> String {
    k.0.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("x{}", i + 1)
            } else {
                format!("x{}^{}", i + 1, e)
            }
        })
        .join("*")
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts = self.display_order().into_iter().map(|(k, c)| {
            let mono = fmt_monomial(k);
            match (mono.is_empty(), c.is_one()) {
                (true, _) => format!("({c})"),
                (false, true) => mono,
                (false, false) => format!("({c})*{mono}"),
            }
        });
        write!(f, "{}", parts.format(" + "))
    }
}

#[derive(Serialize)]
struct TermJson<'a> {
    exp: &'a [u32],
    coeff: &'a Cyclotomic,
}

impl Serialize for QPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (k, c) in self.display_order() {
            seq.serialize_element(&TermJson {
                exp: &k.0,
                coeff: c,
            })?;
        }
        seq.end()
    }
}
