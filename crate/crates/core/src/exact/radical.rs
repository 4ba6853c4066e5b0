//! Multi-quadratic extensions of the Gaussian rationals.
//!
//! An element is a finite sum `Σ c_r √r` where every `r` is a squarefree
//! positive integer and every `c_r` is a Gaussian rational `a + b i`.
//! The radicand set is open-ended: products of radicals are merged with
//! `√r·√s = g·√(rs/g²)`, so new radicands appear only when requested.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::One;
use serde::ser::SerializeSeq;

use super::rational::Rational;
use crate::error::{Error, Result};

/// `re + im·i` with rational parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Gaussian {
    pub re: Rational,
    pub im: Rational,
}

impl Gaussian {
    pub fn new(re: Rational, im: Rational) -> Self {
        Gaussian { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Gaussian { re, im: Rational::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Gaussian { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    fn add(&self, o: &Gaussian) -> Gaussian {
        Gaussian { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    fn mul(&self, o: &Gaussian) -> Gaussian {
        // cheap paths for the overwhelmingly common real case
        if self.im.is_zero() && o.im.is_zero() {
            return Gaussian::real(&self.re * &o.re);
        }
        Gaussian {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    fn scale(&self, r: &Rational) -> Gaussian {
        Gaussian { re: &self.re * r, im: &self.im * r }
    }

    fn neg(&self) -> Gaussian {
        Gaussian { re: -&self.re, im: -&self.im }
    }
}

fn imag_str(im: &Rational) -> String {
    if im.is_one() {
        "i".into()
    } else if (-im).is_one() {
        "-i".into()
    } else {
        format!("{im}i")
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}", imag_str(&self.im)),
            (false, false) => {
                let im = imag_str(&self.im);
                if im.starts_with('-') {
                    write!(f, "{}{}", self.re, im)
                } else {
                    write!(f, "{}+{}", self.re, im)
                }
            }
        }
    }
}

/// Element of `Q(i)(√r₁, √r₂, …)`: sorted `(radicand, coefficient)` terms,
/// no zero coefficients, radicands squarefree and distinct.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RadicalScalar {
    terms: Vec<(u64, Gaussian)>,
}

fn squarefree_decompose(n: u64) -> (u64, u64) {
    // n = s^2 * r with r squarefree; returns (s, r)
    let mut s = 1u64;
    let mut r = 1u64;
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        let mut e = 0;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        for _ in 0..e / 2 {
            s *= p;
        }
        if e % 2 == 1 {
            r *= p;
        }
        p += 1;
    }
    r *= m;
    (s, r)
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl RadicalScalar {
    pub fn zero() -> Self {
        RadicalScalar { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    /// The imaginary unit √−1.
    pub fn i() -> Self {
        Self::from_gaussian(Gaussian::new(Rational::zero(), Rational::one()))
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::from_gaussian(Gaussian::real(r))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::int(n))
    }

    pub fn from_gaussian(g: Gaussian) -> Self {
        if g.is_zero() {
            Self::zero()
        } else {
            RadicalScalar { terms: vec![(1, g)] }
        }
    }

    /// `c·√r` for a positive integer `r` (not necessarily squarefree).
    pub fn radical(c: Gaussian, r: u64) -> Self {
        assert!(r > 0, "radicand must be positive");
        let (s, core) = squarefree_decompose(r);
        let c = c.scale(&Rational::int(s as i64));
        if c.is_zero() {
            Self::zero()
        } else {
            RadicalScalar { terms: vec![(core, c)] }
        }
    }

    /// Positive square root of a positive rational `p/q`, as `√(pq)/q`.
    pub fn sqrt_rational(x: &Rational) -> Result<Self> {
        if !x.is_positive() {
            return Err(Error::NormalizationFailure(format!(
                "square root requested of non-positive rational {x}"
            )));
        }
        let pq: BigInt = x.numer() * x.denom();
        let pq: u64 = pq
            .try_into()
            .map_err(|_| Error::NormalizationFailure(format!("radicand too large in √{x}")))?;
        let inv_q = Rational::from_bigints(BigInt::one(), x.denom().clone())?;
        Ok(Self::radical(Gaussian::real(inv_q), pq))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms[0].0 == 1
            && self.terms[0].1.re.is_one()
            && self.terms[0].1.im.is_zero()
    }

    pub fn terms(&self) -> &[(u64, Gaussian)] {
        &self.terms
    }

    pub fn radicands(&self) -> impl Iterator<Item = u64> + '_ {
        self.terms.iter().map(|(r, _)| *r)
    }

    /// The value as a Gaussian rational, if no radical beyond √1 appears.
    pub fn as_gaussian(&self) -> Option<Gaussian> {
        match self.terms.as_slice() {
            [] => Some(Gaussian::default()),
            [(1, g)] => Some(g.clone()),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.as_gaussian().filter(|g| g.im.is_zero()).map(|g| g.re)
    }

    /// Real if every coefficient has zero imaginary part.
    pub fn is_real(&self) -> bool {
        self.terms.iter().all(|(_, g)| g.im.is_zero())
    }

    /// Purely imaginary (including zero).
    pub fn is_imaginary(&self) -> bool {
        self.terms.iter().all(|(_, g)| g.re.is_zero())
    }

    pub fn real_part(&self) -> Self {
        self.map_coeffs(|g| Gaussian::real(g.re.clone()))
    }

    pub fn imag_part(&self) -> Self {
        self.map_coeffs(|g| Gaussian::real(g.im.clone()))
    }

    /// Complex conjugation: flips imaginary parts, fixes the (real) radicals.
    pub fn conj(&self) -> Self {
        self.map_coeffs(Gaussian::conj)
    }

    fn map_coeffs(&self, f: impl Fn(&Gaussian) -> Gaussian) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(r, g)| (*r, f(g)))
            .filter(|(_, g)| !g.is_zero())
            .collect();
        RadicalScalar { terms }
    }

    /// Flips the sign of √p for a prime `p` (a field automorphism).
    fn flip_prime(&self, p: u64) -> Self {
        self.map_coeffs_with_radicand(|r, g| if r % p == 0 { g.neg() } else { g.clone() })
    }

    fn map_coeffs_with_radicand(&self, f: impl Fn(u64, &Gaussian) -> Gaussian) -> Self {
        RadicalScalar { terms: self.terms.iter().map(|(r, g)| (*r, f(*r, g))).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        self.map_coeffs(|g| g.scale(c))
    }

    /// Multiplicative inverse by iterated conjugate rationalization.
    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(g) = self.as_gaussian() {
            let n = g.norm().recip()?;
            return Ok(Self::from_gaussian(g.conj().scale(&n)));
        }
        let mut primes: Vec<u64> = self.radicands().flat_map(prime_factors).collect();
        primes.sort_unstable();
        primes.dedup();
        let mut numerator = Self::one();
        let mut y = self.clone();
        for p in primes {
            let c = y.flip_prime(p);
            numerator = &numerator * &c;
            y = &y * &c;
        }
        let g = y.as_gaussian().ok_or_else(|| {
            Error::ConsistencyFailure("rationalization left a radical behind".into())
        })?;
        let n = g.norm().recip()?;
        Ok(&numerator * &Self::from_gaussian(g.conj().scale(&n)))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.invert()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Sign of a real element (−1, 0, 1), decided by refining rational
    /// enclosures of every √r until the enclosure of the sum excludes 0.
    pub fn real_sign(&self) -> Result<i32> {
        if !self.is_real() {
            return Err(Error::ConsistencyFailure(format!("sign of non-real value {self}")));
        }
        if self.is_zero() {
            return Ok(0);
        }
        if let Some(r) = self.as_rational() {
            return Ok(r.signum());
        }
        let mut bits = 16u32;
        loop {
            let scale = BigInt::one() << bits;
            let mut lo = Rational::zero();
            let mut hi = Rational::zero();
            for (r, g) in &self.terms {
                let c = &g.re;
                let (s_lo, s_hi) = if *r == 1 {
                    (Rational::one(), Rational::one())
                } else {
                    let big = BigInt::from(*r) * &scale * &scale;
                    let f = big.sqrt();
                    let l = Rational::from_bigints(f.clone(), scale.clone())?;
                    let h = Rational::from_bigints(f + 1, scale.clone())?;
                    (l, h)
                };
                if c.is_positive() {
                    lo += &(c * &s_lo);
                    hi += &(c * &s_hi);
                } else {
                    lo += &(c * &s_hi);
                    hi += &(c * &s_lo);
                }
            }
            if lo.is_positive() {
                return Ok(1);
            }
            if hi.is_negative() {
                return Ok(-1);
            }
            bits *= 2;
            if bits > 1 << 14 {
                return Err(Error::ConsistencyFailure(format!("sign refinement diverged for {self}")));
            }
        }
    }

    fn from_sorted_terms(mut terms: Vec<(u64, Gaussian)>) -> Self {
        terms.retain(|(_, g)| !g.is_zero());
        RadicalScalar { terms }
    }

    fn merge(a: &[(u64, Gaussian)], b: &[(u64, Gaussian)], negate_b: bool) -> Self {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let take_b = |g: &Gaussian| if negate_b { g.neg() } else { g.clone() };
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, take_b(&b[j].1)));
                j += 1;
            } else {
                let s = a[i].1.add(&take_b(&b[j].1));
                if !s.is_zero() {
                    out.push((a[i].0, s));
                }
                i += 1;
                j += 1;
            }
        }
        RadicalScalar { terms: out }
    }
}

impl<'a> Add<&'a RadicalScalar> for &'a RadicalScalar {
    type Output = RadicalScalar;
    fn add(self, rhs: &'a RadicalScalar) -> RadicalScalar {
        RadicalScalar::merge(&self.terms, &rhs.terms, false)
    }
}

impl<'a> Sub<&'a RadicalScalar> for &'a RadicalScalar {
    type Output = RadicalScalar;
    fn sub(self, rhs: &'a RadicalScalar) -> RadicalScalar {
        RadicalScalar::merge(&self.terms, &rhs.terms, true)
    }
}

impl<'a> Mul<&'a RadicalScalar> for &'a RadicalScalar {
    type Output = RadicalScalar;
    fn mul(self, rhs: &'a RadicalScalar) -> RadicalScalar {
        if self.is_zero() || rhs.is_zero() {
            return RadicalScalar::zero();
        }
        if self.terms.len() == 1 && rhs.terms.len() == 1 && self.terms[0].0 == 1 && rhs.terms[0].0 == 1 {
            return RadicalScalar::from_sorted_terms(vec![(1, self.terms[0].1.mul(&rhs.terms[0].1))]);
        }
        let mut acc: Vec<(u64, Gaussian)> = Vec::new();
        for (r, a) in &self.terms {
            for (s, b) in &rhs.terms {
                let g = gcd_u64(*r, *s);
                let radicand = (r / g) * (s / g);
                let c = a.mul(b).scale(&Rational::int(g as i64));
                match acc.binary_search_by_key(&radicand, |(k, _)| *k) {
                    Ok(pos) => acc[pos].1 = acc[pos].1.add(&c),
                    Err(pos) => acc.insert(pos, (radicand, c)),
                }
            }
        }
        RadicalScalar::from_sorted_terms(acc)
    }
}

impl<'a> Neg for &'a RadicalScalar {
    type Output = RadicalScalar;
    fn neg(self) -> RadicalScalar {
        self.map_coeffs(Gaussian::neg)
    }
}

macro_rules! owned_ops {
    ($trait:ident, $method:ident) => {
        impl $trait<RadicalScalar> for RadicalScalar {
            type Output = RadicalScalar;
            fn $method(self, rhs: RadicalScalar) -> RadicalScalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a RadicalScalar> for RadicalScalar {
            type Output = RadicalScalar;
            fn $method(self, rhs: &'a RadicalScalar) -> RadicalScalar {
                (&self).$method(rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for RadicalScalar {
    type Output = RadicalScalar;
    fn neg(self) -> RadicalScalar {
        -&self
    }
}

impl From<Rational> for RadicalScalar {
    fn from(r: Rational) -> Self {
        RadicalScalar::from_rational(r)
    }
}

impl From<i64> for RadicalScalar {
    fn from(n: i64) -> Self {
        RadicalScalar::from_int(n)
    }
}

impl fmt::Display for RadicalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (r, g)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            let coeff = if g.re.is_zero() || g.im.is_zero() { g.to_string() } else { format!("({g})") };
            if *r == 1 {
                write!(f, "{coeff}")?;
            } else {
                write!(f, "{coeff}*sqrt({r})")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RadicalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Structured form: `[{"coeff": "a+bi", "radicand": r}, …]`.
impl serde::Serialize for RadicalScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(serde::Serialize)]
        struct Term {
            coeff: String,
            radicand: u64,
        }
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (r, g) in &self.terms {
            seq.serialize_element(&Term { coeff: g.to_string(), radicand: *r })?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::q;

    fn sqrt(n: u64) -> RadicalScalar {
        RadicalScalar::radical(Gaussian::real(Rational::one()), n)
    }

    fn rat(n: i64, d: i64) -> RadicalScalar {
        RadicalScalar::from_rational(q(n, d))
    }

    #[test]
    fn invert_examples() {
        assert_eq!(rat(2, 1).invert().unwrap(), rat(1, 2));
        assert_eq!(sqrt(2).invert().unwrap(), &sqrt(2) * &rat(1, 2));
        // (1+√2)^{-1} = −1+√2
        let x = &rat(1, 1) + &sqrt(2);
        assert_eq!(x.invert().unwrap(), &rat(-1, 1) + &sqrt(2));
        assert!(RadicalScalar::zero().invert().is_err());
    }

    #[test]
    fn radicals_multiply_with_gcd_extraction() {
        assert_eq!(&sqrt(6) * &sqrt(10), &rat(2, 1) * &sqrt(15));
        assert_eq!(&sqrt(3) * &sqrt(3), rat(3, 1));
        assert_eq!(sqrt(12), &rat(2, 1) * &sqrt(3));
    }

    #[test]
    fn sqrt_of_rational_normalizes() {
        let s = RadicalScalar::sqrt_rational(&q(2, 3)).unwrap();
        assert_eq!(s, &sqrt(6) * &rat(1, 3));
        assert_eq!(&s * &s, rat(2, 3));
        assert!(RadicalScalar::sqrt_rational(&q(-1, 2)).is_err());
    }

    #[test]
    fn conjugation_fixes_radicals() {
        let i = RadicalScalar::i();
        let x = &(&i * &sqrt(5)) + &rat(1, 2);
        assert_eq!(x.conj(), &(&(-&i) * &sqrt(5)) + &rat(1, 2));
        assert_eq!(&i * &i, rat(-1, 1));
    }

    #[test]
    fn real_sign_of_radical_sums() {
        let x = &sqrt(2) - &rat(7, 5); // 1.414 - 1.4 > 0
        assert_eq!(x.real_sign().unwrap(), 1);
        let y = &(&sqrt(3) + &sqrt(2)) - &sqrt(10); // 3.146 - 3.162 < 0
        assert_eq!(y.real_sign().unwrap(), -1);
        assert!(RadicalScalar::i().real_sign().is_err());
    }

    #[test]
    fn display_format() {
        let x = &(&rat(1, 2) * &sqrt(3)) + &RadicalScalar::i();
        assert_eq!(x.to_string(), "i + 1/2*sqrt(3)");
        assert_eq!(serde_json::to_string(&x).unwrap(), r#"[{"coeff":"i","radicand":1},{"coeff":"1/2","radicand":3}]"#);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn scalar() -> impl Strategy<Value = RadicalScalar> {
            let term = (prop::sample::select(vec![1u64, 2, 3, 5, 6, 10]), -4i64..5, -4i64..5, 1i64..4);
            prop::collection::vec(term, 0..4).prop_map(|ts| {
                ts.into_iter().fold(RadicalScalar::zero(), |acc, (r, a, b, d)| {
                    &acc + &RadicalScalar::radical(Gaussian::new(q(a, d), q(b, d)), r)
                })
            })
        }

        proptest! {
            #[test]
            fn field_axioms(x in scalar(), y in scalar(), z in scalar()) {
                prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
                prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
                prop_assert_eq!(&(&x + &y) - &y, x.clone());
                if !x.is_zero() {
                    prop_assert!((&x * &x.invert().unwrap()).is_one());
                }
            }

            #[test]
            fn conj_is_ring_involution(x in scalar(), y in scalar()) {
                prop_assert_eq!(x.conj().conj(), x.clone());
                prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
                prop_assert_eq!((&x + &y).conj(), &x.conj() + &y.conj());
            }
        }
    }
}
