//! Polynomials and rational functions in the level `k` over `Q`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Dense polynomial, ascending coefficients, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LevelPolynomial {
    coeffs: Vec<Rational>,
}

impl LevelPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        LevelPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        LevelPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `k`.
    pub fn k() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    /// `a·k + b`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::new(vec![b, a])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, k: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * k) + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn monic(&self) -> Result<Self> {
        let l = self.leading().recip().map_err(|_| Error::ZeroPolynomial)?;
        Ok(self.scale(&l))
    }

    /// Euclidean division `self = q·d + r`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = d.leading().recip()?;
        let mut r = self.coeffs.clone();
        let n = self.coeffs.len();
        if n <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quo = vec![Rational::zero(); n - dd];
        for i in (0..n - dd).rev() {
            let c = &r[i + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[i + j] = &r[i + j] - &(&c * dc);
            }
            quo[i] = c;
        }
        r.truncate(dd);
        Ok((Self::new(quo), Self::new(r)))
    }

    /// Monic gcd (zero only if both are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic().unwrap_or_else(|_| Self::zero())
    }

    /// All rational roots, sorted, without multiplicity.
    pub fn rational_roots(&self) -> Result<Vec<Rational>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut roots = Vec::new();
        // strip powers of k
        let lowest = self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
        if lowest > 0 {
            roots.push(Rational::zero());
        }
        let stripped = Self::new(self.coeffs[lowest..].to_vec());
        if stripped.degree().unwrap_or(0) > 0 {
            let lcm = Rational::gcd_denominator(stripped.coeffs());
            let ints: Vec<BigInt> = stripped
                .coeffs
                .iter()
                .map(|c| (c * &Rational::from(lcm.clone())).numer().clone())
                .collect();
            let a0 = ints[0].abs();
            let an = ints.last().unwrap().abs();
            let ps = divisors(&a0)?;
            let qs = divisors(&an)?;
            for p in &ps {
                for qd in &qs {
                    if !p.gcd(qd).is_one() {
                        continue;
                    }
                    for sign in [1i64, -1] {
                        let cand = Rational::from_bigints(p * sign, qd.clone())?;
                        if stripped.eval(&cand).is_zero() {
                            roots.push(cand);
                        }
                    }
                }
            }
        }
        roots.sort();
        roots.dedup();
        Ok(roots)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Rational::int(i as i64))
                .collect(),
        )
    }
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let n: u64 = n
        .try_into()
        .map_err(|_| Error::BadParameter(format!("coefficient {n} too large for root search")))?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Ok(out)
}

impl<'a> Add<&'a LevelPolynomial> for &'a LevelPolynomial {
    type Output = LevelPolynomial;
    fn add(self, rhs: &'a LevelPolynomial) -> LevelPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        LevelPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a LevelPolynomial> for &'a LevelPolynomial {
    type Output = LevelPolynomial;
    fn sub(self, rhs: &'a LevelPolynomial) -> LevelPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        LevelPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a LevelPolynomial> for &'a LevelPolynomial {
    type Output = LevelPolynomial;
    fn mul(self, rhs: &'a LevelPolynomial) -> LevelPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return LevelPolynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        LevelPolynomial::new(out)
    }
}

impl<'a> Neg for &'a LevelPolynomial {
    type Output = LevelPolynomial;
    fn neg(self) -> LevelPolynomial {
        LevelPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for LevelPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => "k".into(),
                _ => format!("k^{i}"),
            };
            if i == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{a}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LevelPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Ascending coefficient strings.
impl serde::Serialize for LevelPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

/// `num/den` in lowest terms with monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LevelRationalFunction {
    num: LevelPolynomial,
    den: LevelPolynomial,
}

impl LevelRationalFunction {
    pub fn new(num: LevelPolynomial, den: LevelPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::from_poly(LevelPolynomial::zero()));
        }
        let g = num.gcd(&den);
        let (n, _) = num.div_rem(&g)?;
        let (d, _) = den.div_rem(&g)?;
        let l = d.leading().recip()?;
        Ok(LevelRationalFunction { num: n.scale(&l), den: d.scale(&l) })
    }

    pub fn from_poly(p: LevelPolynomial) -> Self {
        LevelRationalFunction { num: p, den: LevelPolynomial::constant(Rational::one()) }
    }

    pub fn numerator(&self) -> &LevelPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &LevelPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn eval(&self, k: &Rational) -> Result<Rational> {
        let d = self.den.eval(k);
        if d.is_zero() {
            return Err(Error::PoleAtLevel(k.to_string()));
        }
        Ok(&self.num.eval(k) / &d)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = &(&self.num * &o.den) + &(&o.num * &self.den);
        Self::new(n, &self.den * &o.den).expect("nonzero denominators")
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(&self.num * &o.num, &self.den * &o.den).expect("nonzero denominators")
    }

    pub fn neg(&self) -> Self {
        LevelRationalFunction { num: -&self.num, den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }
}

impl fmt::Display for LevelRationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for LevelRationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl serde::Serialize for LevelRationalFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("LevelRationalFunction", 2)?;
        st.serialize_field("numerator", &self.num)?;
        st.serialize_field("denominator", &self.den)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::q;

    fn p(cs: &[(i64, i64)]) -> LevelPolynomial {
        LevelPolynomial::new(cs.iter().map(|&(n, d)| q(n, d)).collect())
    }

    #[test]
    fn roots_of_product_of_linears() {
        // (2k+1)(k-3)k = 2k^3 - 5k^2 - 3k
        let f = p(&[(0, 1), (-3, 1), (-5, 1), (2, 1)]);
        assert_eq!(f.rational_roots().unwrap(), vec![q(-1, 2), q(0, 1), q(3, 1)]);
        assert!(p(&[(1, 1), (0, 1), (1, 1)]).rational_roots().unwrap().is_empty());
        assert!(LevelPolynomial::zero().rational_roots().is_err());
    }

    #[test]
    fn rational_function_reduces() {
        let num = p(&[(-1, 1), (0, 1), (1, 1)]); // k^2 - 1
        let den = p(&[(2, 1), (2, 1)]); // 2k + 2
        let r = LevelRationalFunction::new(num, den).unwrap();
        assert_eq!(r.numerator(), &p(&[(-1, 2), (1, 2)]));
        assert_eq!(r.denominator().degree(), Some(0));
        assert_eq!(r.eval(&q(3, 1)).unwrap(), q(1, 1));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[(-1, 1), (0, 1), (-2, 3)]).to_string(), "-2/3*k^2 - 1");
        assert_eq!(p(&[(1, 2), (1, 1)]).to_string(), "k + 1/2");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn roots() -> impl Strategy<Value = Vec<(i64, i64)>> {
            prop::collection::vec((-12i64..13, 1i64..7), 1..4)
        }

        proptest! {
            #[test]
            fn recovers_planted_roots(rs in roots()) {
                let mut f = LevelPolynomial::constant(Rational::one());
                let mut want: Vec<Rational> = Vec::new();
                for (n, d) in rs {
                    let r = q(n, d);
                    f = &f * &LevelPolynomial::linear(Rational::one(), -&r);
                    want.push(r);
                }
                want.sort();
                want.dedup();
                prop_assert_eq!(f.rational_roots().unwrap(), want);
            }

            #[test]
            fn div_rem_identity(a in prop::collection::vec(-9i64..10, 0..5), b in prop::collection::vec(-9i64..10, 1..4)) {
                let a = LevelPolynomial::new(a.into_iter().map(Rational::int).collect());
                let b = LevelPolynomial::new(b.into_iter().map(Rational::int).collect());
                prop_assume!(!b.is_zero());
                let (qq, r) = a.div_rem(&b).unwrap();
                prop_assert_eq!(&(&qq * &b) + &r, a);
                prop_assert!(r.degree() < b.degree());
            }
        }
    }
}
