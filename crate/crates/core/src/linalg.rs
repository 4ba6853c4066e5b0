//! Gaussian elimination over an exact field.

use crate::error::{Error, Result};
use crate::exact::{RadicalScalar, Rational};

pub trait Field: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;
}

impl Field for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self> {
        self.recip()
    }
}

impl Field for RadicalScalar {
    fn zero() -> Self {
        RadicalScalar::zero()
    }
    fn one() -> Self {
        RadicalScalar::one()
    }
    fn is_zero(&self) -> bool {
        RadicalScalar::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self> {
        self.invert()
    }
}

/// Row-major dense matrix.
pub type Matrix<F> = Vec<Vec<F>>;

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref<F: Field>(m: &mut Matrix<F>) -> Result<Vec<usize>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv()?;
        for x in m[r].iter_mut() {
            if !x.is_zero() {
                *x = x.mul(&inv);
            }
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    if !m[r][j].is_zero() {
                        let d = f.mul(&m[r][j]);
                        m[i][j] = m[i][j].sub(&d);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Ok(pivots)
}

pub fn rank<F: Field>(m: &Matrix<F>) -> Result<usize> {
    let mut a = m.clone();
    Ok(rref(&mut a)?.len())
}

/// Basis of `{v : m v = 0}`.
pub fn nullspace<F: Field>(m: &Matrix<F>, cols: usize) -> Result<Vec<Vec<F>>> {
    let mut a = m.clone();
    let pivots = rref(&mut a)?;
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![F::zero(); cols];
        v[free] = F::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = a[row][free].neg();
        }
        basis.push(v);
    }
    Ok(basis)
}

/// Some solution of `m x = b`, or `None` if inconsistent.
pub fn solve<F: Field>(m: &Matrix<F>, b: &[F]) -> Result<Option<Vec<F>>> {
    let cols = m.first().map_or(0, Vec::len);
    let mut aug: Matrix<F> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug)?;
    if pivots.contains(&cols) {
        return Ok(None);
    }
    let mut x = vec![F::zero(); cols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[row][cols].clone();
    }
    Ok(Some(x))
}

pub fn inverse<F: Field>(m: &Matrix<F>) -> Result<Matrix<F>> {
    let n = m.len();
    let mut aug: Matrix<F> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug)?;
    if pivots.len() < n || pivots[n - 1] >= n {
        return Err(Error::DivisionByZero);
    }
    Ok(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn determinant<F: Field>(m: &Matrix<F>) -> Result<F> {
    let n = m.len();
    let mut a = m.clone();
    let mut det = F::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Ok(F::zero());
        };
        if p != c {
            a.swap(p, c);
            det = det.neg();
        }
        det = det.mul(&a[c][c]);
        let inv = a[c][c].inv()?;
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].mul(&inv);
            for j in c..n {
                let d = f.mul(&a[c][j]);
                a[i][j] = a[i][j].sub(&d);
            }
        }
    }
    Ok(det)
}

pub fn mat_mul<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner).fold(F::zero(), |acc, k| {
                        if row[k].is_zero() || b[k][j].is_zero() {
                            acc
                        } else {
                            acc.add(&row[k].mul(&b[k][j]))
                        }
                    })
                })
                .collect()
        })
        .collect()
}

pub fn identity<F: Field>(n: usize) -> Matrix<F> {
    (0..n).map(|i| (0..n).map(|j| if i == j { F::one() } else { F::zero() }).collect()).collect()
}

/// Span of independent vectors with coordinate extraction.
#[derive(Clone, Debug)]
pub struct Subspace<F: Field> {
    pub basis: Vec<Vec<F>>,
    rows: Vec<usize>,
    inv: Matrix<F>,
}

impl<F: Field> Subspace<F> {
    /// Fails if the vectors are dependent.
    pub fn new(basis: Vec<Vec<F>>) -> Result<Self> {
        let d = basis.len();
        if d == 0 {
            return Ok(Subspace { basis, rows: Vec::new(), inv: Vec::new() });
        }
        let n = basis[0].len();
        // rows of the n×d matrix whose columns are the basis vectors
        let mut t: Matrix<F> = basis.clone();
        let rows = rref(&mut t)?;
        if rows.len() != d {
            return Err(Error::ConsistencyFailure(format!("{} dependent vectors in subspace basis", d - rows.len())));
        }
        debug_assert!(rows.iter().all(|&r| r < n));
        let m: Matrix<F> = rows.iter().map(|&r| basis.iter().map(|b| b[r].clone()).collect()).collect();
        Ok(Subspace { basis, rows, inv: inverse(&m)? })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `v`, or `None` if `v` is outside the span.
    pub fn coords(&self, v: &[F]) -> Option<Vec<F>> {
        let d = self.dim();
        let picked: Vec<F> = self.rows.iter().map(|&r| v[r].clone()).collect();
        let c: Vec<F> = (0..d)
            .map(|i| (0..d).fold(F::zero(), |acc, j| if picked[j].is_zero() { acc } else { acc.add(&self.inv[i][j].mul(&picked[j])) }))
            .collect();
        let n = v.len();
        for k in 0..n {
            let mut s = F::zero();
            for (ci, b) in c.iter().zip(&self.basis) {
                if !ci.is_zero() && !b[k].is_zero() {
                    s = s.add(&ci.mul(&b[k]));
                }
            }
            if s != v[k] {
                return None;
            }
        }
        Some(c)
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.coords(v).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        rows.iter().map(|r| r.iter().map(|&x| Rational::int(x)).collect()).collect()
    }

    #[test]
    fn nullspace_and_rank() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&a).unwrap(), 2);
        let ns = nullspace(&a, 3).unwrap();
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        for row in &a {
            let s: Rational = row.iter().zip(v).map(|(x, y)| x * y).sum();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn inverse_and_det() {
        let a = m(&[&[2, 1], &[1, 1]]);
        assert_eq!(determinant(&a).unwrap(), q(1, 1));
        assert_eq!(mat_mul(&a, &inverse(&a).unwrap()), identity::<Rational>(2));
        assert!(inverse(&m(&[&[1, 2], &[2, 4]])).is_err());
        assert_eq!(solve(&m(&[&[1, 1], &[1, 1]]), &[q(1, 1), q(2, 1)]).unwrap(), None);
    }

    #[test]
    fn subspace_coordinates() {
        let s = Subspace::new(m(&[&[1, 0, 1], &[0, 1, 1]])).unwrap();
        assert_eq!(s.coords(&[q(2, 1), q(3, 1), q(5, 1)]).unwrap(), vec![q(2, 1), q(3, 1)]);
        assert!(!s.contains(&[q(1, 1), q(0, 1), q(0, 1)]));
        assert!(Subspace::new(m(&[&[1, 2], &[2, 4]])).is_err());
    }
}
