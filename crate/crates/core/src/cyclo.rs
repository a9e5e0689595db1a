//! Exact arithmetic in cyclotomic fields `Q(ζ_N)`.
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^{φ(N)-1}` modulo the
//! `N`-th cyclotomic polynomial, with a single positive common denominator.
//! The representation is canonical at a fixed order: two elements of the same
//! order are equal iff their coefficient vectors are. Elements of different
//! orders are lifted to the least common multiple before being combined.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Reduction data for one cyclotomic order.
#[derive(Debug)]
pub(crate) struct CycloTable {
    degree: usize,
    /// `powers[j]` is `x^j mod Φ_N` for `0 <= j < N`.
    powers: Vec<Vec<i64>>,
    /// Residues coprime to `N`, i.e. the Galois group.
    units: Vec<u32>,
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Exact division of integer polynomials (low degree first) by a monic divisor.
fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qlen = rem.len() - dn;
    let mut quot = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        if c != 0 {
            for (j, d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    let mut known: HashMap<u32, Vec<i64>> = HashMap::new();
    for d in divisors(n) {
        let mut p = vec![0i64; d as usize + 1];
        p[0] = -1;
        p[d as usize] = 1;
        for e in divisors(d) {
            if e < d {
                p = poly_div_exact(&p, &known[&e]);
            }
        }
        known.insert(d, p);
    }
    known.remove(&n).expect("n divides itself")
}

impl CycloTable {
    fn build(order: u32) -> Self {
        let modulus = cyclotomic_polynomial(order);
        let degree = modulus.len() - 1;
        let mut powers = Vec::with_capacity(order as usize);
        let mut cur = vec![0i64; degree];
        cur[0] = 1;
        for _ in 0..order {
            powers.push(cur.clone());
            let top = cur[degree - 1];
            let mut next = vec![0i64; degree];
            next[1..degree].copy_from_slice(&cur[..(degree - 1)]);
            if top != 0 {
                for i in 0..degree {
                    next[i] -= top * modulus[i];
                }
            }
            cur = next;
        }
        let units = (0..order.max(1))
            .filter(|&u| u.gcd(&order) == 1)
            .map(|u| if order == 1 { 1 } else { u })
            .collect();
        CycloTable {
            degree,
            powers,
            units,
        }
    }
}

static TABLES: OnceLock<RwLock<HashMap<u32, Arc<CycloTable>>>> = OnceLock::new();

pub(crate) fn table(order: u32) -> Arc<CycloTable> {
    assert!(order > 0, "cyclotomic order must be positive");
    let lock = TABLES.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = lock.read().expect("table lock").get(&order) {
        return Arc::clone(t);
    }
    let built = Arc::new(CycloTable::build(order));
    let mut w = lock.write().expect("table lock");
    Arc::clone(w.entry(order).or_insert(built))
}

/// Euler's totient, i.e. the degree of `Q(ζ_N)` over `Q`.
pub fn totient(order: u32) -> usize {
    table(order).degree
}

pub fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

/// An exact element of `Q(ζ_N)`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u32,
    num: Vec<BigInt>,
    den: BigInt,
}

impl Cyclotomic {
    fn from_parts(order: u32, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        if den.is_negative() {
            den = -den;
            for c in &mut num {
                *c = -std::mem::take(c);
            }
        }
        let mut g = den.clone();
        for c in &num {
            if !c.is_zero() {
                g = g.gcd(c);
                if g.is_one() {
                    break;
                }
            }
        }
        if num.iter().all(Zero::is_zero) {
            den = BigInt::one();
        } else if !g.is_one() {
            for c in &mut num {
                *c = &*c / &g;
            }
            den = den / g;
        }
        Cyclotomic { order, num, den }
    }

    pub fn zero(order: u32) -> Self {
        let d = table(order).degree;
        Cyclotomic {
            order,
            num: vec![BigInt::zero(); d],
            den: BigInt::one(),
        }
    }

    pub fn one(order: u32) -> Self {
        Self::from_integer(1)
            .lift(order)
            .expect("1 divides every order")
    }

    pub fn from_integer(v: i64) -> Self {
        Cyclotomic {
            order: 1,
            num: vec![BigInt::from(v)],
            den: BigInt::one(),
        }
    }

    pub fn from_rational(q: &BigRational) -> Self {
        Self::from_parts(1, vec![q.numer().clone()], q.denom().clone())
    }

    pub fn from_fraction(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_parts(
            1,
            vec![BigInt::from(num)],
            BigInt::from(den),
        ))
    }

    /// `ζ_N^exponent` in canonical form.
    pub fn root(order: u32, exponent: i64) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        let t = table(order);
        let j = exponent.rem_euclid(order as i64) as usize;
        Ok(Self::from_int_coeffs(order, &t.powers[j]))
    }

    pub(crate) fn from_int_coeffs(order: u32, coeffs: &[i64]) -> Self {
        Cyclotomic {
            order,
            num: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
            den: BigInt::one(),
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Rational coordinates in the power basis.
    pub fn coefficients(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    /// Re-expresses the element in `Q(ζ_target)`; `target` must be a multiple of the order.
    pub fn lift(&self, target: u32) -> Result<Self> {
        if target == 0 {
            return Err(Error::ZeroOrder);
        }
        if target % self.order != 0 {
            return Err(Error::InvalidParameter(format!(
                "cannot lift order {} to {}",
                self.order, target
            )));
        }
        if target == self.order {
            return Ok(self.clone());
        }
        let t = table(target);
        let step = (target / self.order) as usize;
        let mut out = vec![BigInt::zero(); t.degree];
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &t.powers[(j * step) % target as usize];
            for (o, &r) in out.iter_mut().zip(row) {
                if r != 0 {
                    *o += c * r;
                }
            }
        }
        Ok(Cyclotomic {
            order: target,
            num: out,
            den: self.den.clone(),
        })
    }

    fn aligned(a: &Self, b: &Self) -> (Self, Self) {
        if a.order == b.order {
            return (a.clone(), b.clone());
        }
        let l = lcm(a.order, b.order);
        (a.lift(l).unwrap(), b.lift(l).unwrap())
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        if self.order != other.order {
            let (a, b) = Self::aligned(self, other);
            return a.add_impl(&b, negate);
        }
        let sign = if negate { -1 } else { 1 };
        if self.den == other.den {
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| if negate { a - b } else { a + b })
                .collect();
            return Self::from_parts(self.order, num, self.den.clone());
        }
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(a, b)| a * &other.den + b * &self.den * sign)
            .collect();
        Self::from_parts(self.order, num, &self.den * &other.den)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.order != other.order {
            if self.order == 1 {
                return other.scale(&self.num[0], &self.den);
            }
            if other.order == 1 {
                return self.scale(&other.num[0], &other.den);
            }
            let (a, b) = Self::aligned(self, other);
            return a.mul_impl(&b);
        }
        let t = table(self.order);
        let d = t.degree;
        let mut prod = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let mut out: Vec<BigInt> = prod.drain(..d).collect();
        for (k, c) in prod.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &t.powers[(k + d) % self.order as usize];
            for (o, &r) in out.iter_mut().zip(row) {
                if r != 0 {
                    *o += &c * r;
                }
            }
        }
        Self::from_parts(self.order, out, &self.den * &other.den)
    }

    fn scale(&self, num: &BigInt, den: &BigInt) -> Self {
        let out = self.num.iter().map(|c| c * num).collect();
        Self::from_parts(self.order, out, &self.den * den)
    }

    /// Image under the Galois automorphism `ζ ↦ ζ^u`, `gcd(u, N) = 1`.
    pub fn galois(&self, u: i64) -> Result<Self> {
        let n = self.order as i64;
        let u = u.rem_euclid(n.max(1));
        if (u as u32).gcd(&self.order) != 1 && self.order != 1 {
            return Err(Error::InvalidParameter(format!(
                "{u} is not a unit modulo {}",
                self.order
            )));
        }
        let t = table(self.order);
        let mut out = vec![BigInt::zero(); t.degree];
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &t.powers[((j as i64 * u) % n.max(1)) as usize];
            for (o, &r) in out.iter_mut().zip(row) {
                if r != 0 {
                    *o += c * r;
                }
            }
        }
        Ok(Self::from_parts(self.order, out, self.den.clone()))
    }

    /// Complex conjugation.
    pub fn conj(&self) -> Self {
        self.galois(-1).expect("-1 is always a unit")
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_parts(
                self.order,
                {
                    let mut v = vec![BigInt::zero(); self.num.len()];
                    v[0] = q.denom().clone();
                    v
                },
                q.numer().clone(),
            ));
        }
        // a^{-1} = (product of the other conjugates) / norm(a)
        let t = table(self.order);
        let mut cofactor = Self::one(self.order);
        for &u in t.units.iter().filter(|&&u| u != 1) {
            cofactor = &cofactor * &self.galois(u as i64)?;
        }
        let norm = (&cofactor * self)
            .as_rational()
            .ok_or_else(|| Error::Internal("field norm is not rational".into()))?;
        Ok(cofactor.scale(norm.denom(), norm.numer()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one(self.order);
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        Ok(acc)
    }

    /// Decides whether the element is a root of unity, returning it as one.
    pub fn as_root_of_unity(&self) -> Option<RootOfUnity> {
        let l = lcm(self.order, 2);
        let lifted = self.lift(l).ok()?;
        (0..l).find_map(|j| {
            let r = Cyclotomic::root(l, j as i64).ok()?;
            (r == lifted).then(|| RootOfUnity::new(l, j as i64).reduced())
        })
    }

    /// Membership in `Z[(1+i)/2] = Z[i, 1/2]`.
    pub fn in_gaussian_half_ring(&self) -> bool {
        let c = self.conj();
        let two = Cyclotomic::from_integer(2);
        let re = (self + &c).checked_div(&two).expect("2 is invertible");
        let i = Cyclotomic::root(4, 1).expect("order 4");
        // (a - conj a) / (2i)
        let im = (self - &c)
            .checked_div(&(&two * &i))
            .expect("2i is invertible");
        let is_dyadic = |q: &BigRational| {
            let mut d = q.denom().clone();
            let two = BigInt::from(2);
            while d.is_even() {
                d /= &two;
            }
            d.is_one()
        };
        match (re.as_rational(), im.as_rational()) {
            (Some(u), Some(v)) => is_dyadic(&u) && is_dyadic(&v),
            _ => false,
        }
    }

    /// Numeric approximation, only used for human-readable output.
    pub fn approx(&self) -> (f64, f64) {
        let n = self.order as f64;
        let den = self.den.to_f64().unwrap_or(f64::NAN);
        self.num
            .iter()
            .enumerate()
            .fold((0.0, 0.0), |(re, im), (j, c)| {
                let v = c.to_f64().unwrap_or(f64::NAN) / den;
                let ang = 2.0 * std::f64::consts::PI * j as f64 / n;
                (re + v * ang.cos(), im + v * ang.sin())
            })
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.den == other.den && self.num == other.num;
        }
        let (a, b) = Self::aligned(self, other);
        a.den == b.den && a.num == b.num
    }
}

impl Eq for Cyclotomic {}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a> $tr<&'a Cyclotomic> for &'a Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &'a Cyclotomic) -> Cyclotomic {
                let f: fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic = $body;
                f(self, rhs)
            }
        }
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_impl(b, false));
forward_binop!(Sub, sub, |a, b| a.add_impl(b, true));
forward_binop!(Mul, mul, |a, b| a.mul_impl(b));

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

/// `ζ_order^exponent`, kept symbolic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    order: u32,
    exponent: u32,
}

impl RootOfUnity {
    pub fn new(order: u32, exponent: i64) -> Self {
        assert!(order > 0, "root of unity order must be positive");
        RootOfUnity {
            order,
            exponent: exponent.rem_euclid(order as i64) as u32,
        }
    }

    pub fn one(order: u32) -> Self {
        Self::new(order, 0)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    /// Re-expresses over `ζ_target`; `target` must be a multiple of the order.
    pub fn lift(&self, target: u32) -> Self {
        assert!(target % self.order == 0, "lift target must be a multiple");
        Self::new(target, (self.exponent * (target / self.order)) as i64)
    }

    /// Smallest order in which the root can be written.
    pub fn reduced(&self) -> Self {
        let g = self.exponent.gcd(&self.order);
        if self.exponent == 0 {
            return Self::one(1);
        }
        Self::new(self.order / g, (self.exponent / g) as i64)
    }

    /// Multiplicative order of the root.
    pub fn multiplicative_order(&self) -> u32 {
        self.reduced().order
    }

    pub fn inv(&self) -> Self {
        Self::new(self.order, -(self.exponent as i64))
    }

    pub fn pow(&self, e: i64) -> Self {
        Self::new(
            self.order,
            (self.exponent as i64 * e.rem_euclid(self.order as i64)) % self.order as i64,
        )
    }

    pub fn to_cyclotomic(&self) -> Cyclotomic {
        Cyclotomic::root(self.order, self.exponent as i64).expect("positive order")
    }
}

impl Mul for RootOfUnity {
    type Output = RootOfUnity;
    fn mul(self, rhs: RootOfUnity) -> RootOfUnity {
        if self.order == rhs.order {
            return RootOfUnity::new(self.order, self.exponent as i64 + rhs.exponent as i64);
        }
        let l = lcm(self.order, rhs.order);
        let (a, b) = (self.lift(l), rhs.lift(l));
        RootOfUnity::new(l, a.exponent as i64 + b.exponent as i64)
    }
}

/// An element of `Z[μ_N]` written as integer multiplicities of the `N` roots
/// of unity; sums of roots are accumulated here and reduced once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSum {
    counts: Vec<i64>,
}

impl RootSum {
    pub fn new(order: u32) -> Self {
        assert!(order > 0, "root sum order must be positive");
        RootSum {
            counts: vec![0; order as usize],
        }
    }

    pub fn order(&self) -> u32 {
        self.counts.len() as u32
    }

    pub fn add_root(&mut self, exponent: u32, multiplicity: i64) {
        let n = self.counts.len();
        self.counts[exponent as usize % n] += multiplicity;
    }

    pub fn is_trivially_zero(&self) -> bool {
        self.counts.iter().all(|&c| c == 0)
    }

    pub fn to_cyclotomic(&self) -> Cyclotomic {
        let order = self.order();
        let t = table(order);
        let mut out = vec![0i64; t.degree];
        for (j, &c) in self.counts.iter().enumerate() {
            if c != 0 {
                for (o, &r) in out.iter_mut().zip(&t.powers[j]) {
                    *o += c * r;
                }
            }
        }
        Cyclotomic::from_int_coeffs(order, &out)
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, q: &BigRational) -> fmt::Result {
    if q.denom().is_one() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, q) in self.coefficients().into_iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if j == 0 {
                write_rational(f, &q)?;
            } else if q.is_one() {
                write!(f, "zeta{}^{}", self.order, j)?;
            } else if q.is_negative() {
                write!(f, "(")?;
                write_rational(f, &q)?;
                write!(f, ")*zeta{}^{}", self.order, j)?;
            } else {
                write_rational(f, &q)?;
                write!(f, "*zeta{}^{}", self.order, j)?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, reason: impl Into<String>) -> Error {
        Error::ScalarSyntax {
            input: self.src.to_string(),
            reason: reason.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err(format!("expected a number at offset {start}")));
        }
        self.src[start..self.pos]
            .parse::<BigInt>()
            .map_err(|e| self.err(e.to_string()))
    }

    fn small_int(&mut self) -> Result<i64> {
        let neg = self.eat(b'-');
        let v = self
            .integer()?
            .to_i64()
            .ok_or_else(|| self.err("exponent too large"))?;
        Ok(if neg { -v } else { v })
    }

    fn expr(&mut self) -> Result<Cyclotomic> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Cyclotomic> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.factor()?;
            } else if self.eat(b'/') {
                let d = self.factor()?;
                acc = acc.checked_div(&d)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Cyclotomic> {
        if self.eat(b'-') {
            return Ok(-self.factor()?);
        }
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.small_int()?;
            return base.pow(e);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Cyclotomic> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("unbalanced parenthesis"));
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Cyclotomic::from_parts(1, vec![n], BigInt::one()))
            }
            Some(b'z') if self.src[self.pos..].starts_with("zeta") => {
                self.pos += 4;
                let order = self
                    .integer()?
                    .to_u32()
                    .filter(|&o| o > 0)
                    .ok_or_else(|| self.err("zeta order must be a positive integer"))?;
                let e = if self.eat(b'^') { self.small_int()? } else { 1 };
                Cyclotomic::root(order, e)
            }
            Some(c) => Err(self.err(format!("unexpected `{}`", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

impl FromStr for Cyclotomic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser {
            src: s,
            bytes: s.as_bytes(),
            pos: 0,
        };
        let v = p.expr()?;
        if p.peek().is_some() {
            return Err(p.err(format!("trailing input at offset {}", p.pos)));
        }
        Ok(v)
    }
}

impl serde::Serialize for Cyclotomic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Cyclotomic {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Cyclotomic {
        s.parse().unwrap()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(totient(24), 8);
    }

    #[test]
    fn make_roots() {
        assert!(Cyclotomic::root(4, 0).unwrap().is_one());
        assert_eq!(
            Cyclotomic::root(4, 2).unwrap(),
            Cyclotomic::from_integer(-1)
        );
        assert_eq!(Cyclotomic::root(0, 1), Err(Error::ZeroOrder));
        let z3 = Cyclotomic::root(3, 1).unwrap();
        // minimal polynomial x^2 + x + 1
        let sq = &z3 * &z3;
        assert!((&(&sq + &z3) + &Cyclotomic::one(3)).is_zero());
        assert!((&sq * &z3).is_one());
    }

    #[test]
    fn arithmetic_examples() {
        let i = Cyclotomic::root(4, 1).unwrap();
        let i3 = Cyclotomic::root(4, 3).unwrap();
        assert!((&i * &i3).is_one());
        let a = c("1/2 + 1/2*zeta4^1");
        let b = c("1/2 - 1/2*zeta4^1");
        assert_eq!(&a * &b, Cyclotomic::from_fraction(1, 2).unwrap());
        let z8 = Cyclotomic::root(8, 1).unwrap();
        assert_eq!(&z8 * &z8, i);
        assert_eq!((&z8 * &z8).order(), 8);
        assert_eq!(
            Cyclotomic::one(3).checked_div(&Cyclotomic::zero(3)),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn gaussian_half_ring() {
        assert!(c("1/2 + 1/2*zeta4^1").in_gaussian_half_ring());
        assert!(!c("1/3").in_gaussian_half_ring());
        assert!(!c("zeta3^1").in_gaussian_half_ring());
        assert!(c("zeta12^3 + 5/8").in_gaussian_half_ring());
        assert!(c("zeta8^2").in_gaussian_half_ring());
        assert!(!c("zeta8^1").in_gaussian_half_ring());
    }

    #[test]
    fn literal_round_trip() {
        for s in [
            "0",
            "-1",
            "1/2 + 1/2*zeta4^1",
            "3 + (-2/5)*zeta12^3 + zeta12^1",
        ] {
            let v = c(s);
            assert_eq!(c(&v.to_string()), v, "{s}");
        }
        assert_eq!(c("1/2 + 1/2*zeta4^1").to_string(), "1/2 + 1/2*zeta4^1");
        assert!(c("(zeta6^1)^6").is_one());
        assert!("zeta0^1".parse::<Cyclotomic>().is_err());
        assert!("1/0".parse::<Cyclotomic>().is_err());
        assert!("1 +".parse::<Cyclotomic>().is_err());
    }

    #[test]
    fn inverse_and_conjugate() {
        let a = c("1 + 2*zeta12^1 + (-3)*zeta12^3");
        assert!((&a * &a.inv().unwrap()).is_one());
        let i = Cyclotomic::root(4, 1).unwrap();
        assert_eq!(i.conj(), Cyclotomic::root(4, 3).unwrap());
    }

    #[test]
    fn root_detection() {
        let r = c("zeta12^4").as_root_of_unity().unwrap();
        assert_eq!(r.multiplicative_order(), 3);
        assert_eq!(c("-1").as_root_of_unity().unwrap(), RootOfUnity::new(2, 1));
        assert!(c("1/2").as_root_of_unity().is_none());
        assert!(c("1 + zeta4^1").as_root_of_unity().is_none());
    }

    #[test]
    fn root_sum_matches_field_sum() {
        let mut s = RootSum::new(6);
        let mut expect = Cyclotomic::zero(6);
        for (e, m) in [(0u32, 2i64), (1, -1), (3, 4), (5, 1)] {
            s.add_root(e, m);
            expect =
                &expect + &(&Cyclotomic::from_integer(m) * &Cyclotomic::root(6, e as i64).unwrap());
        }
        assert_eq!(s.to_cyclotomic(), expect);
    }
}
