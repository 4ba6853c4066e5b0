//! Supermatrix models of the classical families with the supertrace form.

use std::collections::HashMap;

use crate::catalog::{AlgebraSpec, Family};
use crate::construct::algebra::{to_sparse, BasisLabel, Sparse, Vector};
use crate::construct::{build_algebra, Algebra, SuperLieAlgebra};
use crate::error::{Error, Result};
use crate::exact::{RadicalScalar, Rational};
use crate::linalg;

use super::align::{align_with, Alignment};

type Mat = Vec<Vec<Rational>>;

#[derive(Clone, Debug)]
pub struct MatrixSuperAlgebra {
    pub spec: AlgebraSpec,
    /// `(even_dim, odd_dim)` of the underlying superspace.
    pub size: (usize, usize),
    pub basis: Vec<Vec<Vec<RadicalScalar>>>,
    pub odd: Vec<bool>,
    /// Weights in the catalog's coordinates (`ε`, `δ`).
    pub weights: Vec<Vec<i64>>,
    /// `c` with `(A|B) = c·str(AB)` and `(θ|θ) = 2`.
    pub form_scale: Rational,
    /// True for psl(2|2), where the identity is divided out.
    pub center_quotient: bool,
    /// Structure constants in `basis`, with the scaled supertrace form.
    pub alg: SuperLieAlgebra,
    /// Bracket-preserving map from `build_algebra(spec)`.
    pub alignment: Alignment,
}

/// Weight of each index of the superspace, and the invariant form if the
/// model is orthosymplectic.
struct Layout {
    even: usize,
    odd: usize,
    wt: Vec<Vec<i64>>,
    form: Option<Mat>,
}

fn unit(n: usize, i: usize, s: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = s;
    v
}

fn layout(spec: &AlgebraSpec) -> Result<Layout> {
    let m = spec.m as usize;
    let zero = || Rational::zero();
    match spec.family {
        Family::Sl2m | Family::Psl22 => {
            let n = 2 + m;
            Ok(Layout { even: 2, odd: m, wt: (0..n).map(|a| unit(n, a, 1)).collect(), form: None })
        }
        Family::Spo2m => {
            // coordinates δ, ε1..εk; symplectic even block, split symmetric odd block
            let k = m / 2;
            let c = 1 + k;
            let n = 2 + m;
            let mut wt = vec![unit(c, 0, 1), unit(c, 0, -1)];
            wt.extend((0..m).map(|i| {
                if i < k {
                    unit(c, 1 + i, 1)
                } else if m % 2 == 1 && i == k {
                    vec![0; c]
                } else {
                    unit(c, 1 + (m - 1 - i), -1)
                }
            }));
            let mut b = vec![vec![zero(); n]; n];
            b[0][1] = Rational::one();
            b[1][0] = -Rational::one();
            for i in 0..m {
                b[2 + i][2 + m - 1 - i] = Rational::one();
            }
            Ok(Layout { even: 2, odd: m, wt, form: Some(b) })
        }
        Family::Osp4m => {
            // coordinates ε1, ε2, δ1..δk; split symmetric even block, symplectic odd block
            let k = m / 2;
            let c = 2 + k;
            let n = 4 + m;
            let mut wt = vec![unit(c, 0, 1), unit(c, 1, 1), unit(c, 1, -1), unit(c, 0, -1)];
            wt.extend((0..m).map(|i| if i < k { unit(c, 2 + i, 1) } else { unit(c, 2 + (m - 1 - i), -1) }));
            let mut b = vec![vec![zero(); n]; n];
            for i in 0..4 {
                b[i][3 - i] = Rational::one();
            }
            for i in 0..k {
                b[4 + i][4 + m - 1 - i] = Rational::one();
                b[4 + m - 1 - i][4 + i] = -Rational::one();
            }
            Ok(Layout { even: 4, odd: m, wt, form: Some(b) })
        }
        _ => Err(Error::UnsupportedFamily(format!("no matrix model for {spec}"))),
    }
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut out = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] = &out[i][j] + &(&a[i][k] * &b[k][j]);
                }
            }
        }
    }
    out
}

fn supercommutator(a: &Mat, pa: bool, b: &Mat, pb: bool) -> Mat {
    let ab = mat_mul(a, b);
    let ba = mat_mul(b, a);
    let s = if pa && pb { Rational::one() } else { -Rational::one() };
    ab.iter().zip(&ba).map(|(r, q)| r.iter().zip(q).map(|(x, y)| x + &(y * &s)).collect()).collect()
}

fn supertrace(a: &Mat, even: usize) -> Rational {
    a.iter().enumerate().fold(Rational::zero(), |acc, (i, r)| if i < even { &acc + &r[i] } else { &acc - &r[i] })
}

/// Homogeneous matrices preserving the form, as flattened vectors.
fn osp_matrices(l: &Layout, b: &Mat) -> Result<Vec<Vec<Rational>>> {
    let n = l.even + l.odd;
    let par = |a: usize| a >= l.even;
    let mut out = Vec::new();
    for odd in [false, true] {
        let cells: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |c| (a, c))).filter(|&(a, c)| (par(a) != par(c)) == odd).collect();
        let pos: HashMap<(usize, usize), usize> = cells.iter().enumerate().map(|(k, &p)| (p, k)).collect();
        // (XᵀB)_ab + (−1)^{p(X)p(a)} (BX)_ab = 0
        let mut rows = Vec::new();
        for a in 0..n {
            for c in 0..n {
                let mut row = vec![Rational::zero(); cells.len()];
                let s = if odd && par(a) { -Rational::one() } else { Rational::one() };
                for k in 0..n {
                    if let Some(&p) = pos.get(&(k, a)) {
                        row[p] = &row[p] + &b[k][c];
                    }
                    if let Some(&p) = pos.get(&(k, c)) {
                        row[p] = &row[p] + &(&b[a][k] * &s);
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
        for v in linalg::nullspace(&rows, cells.len())? {
            let mut flat = vec![Rational::zero(); n * n];
            for (k, &(a, c)) in cells.iter().enumerate() {
                flat[a * n + c] = v[k].clone();
            }
            out.push(flat);
        }
    }
    Ok(out)
}

/// Off-diagonal matrix units and supertraceless diagonals.
fn sl_matrices(l: &Layout) -> Vec<Vec<Rational>> {
    let n = l.even + l.odd;
    let mut out = Vec::new();
    for a in 0..n {
        for c in 0..n {
            if a != c {
                let mut flat = vec![Rational::zero(); n * n];
                flat[a * n + c] = Rational::one();
                out.push(flat);
            }
        }
    }
    for a in 0..n - 1 {
        let mut flat = vec![Rational::zero(); n * n];
        flat[a * n + a] = Rational::one();
        // E_aa ± E_{a+1,a+1} with zero supertrace
        flat[(a + 1) * n + a + 1] = if a + 1 == l.even { Rational::one() } else { -Rational::one() };
        out.push(flat);
    }
    out
}

fn unflatten(v: &[Rational], n: usize) -> Mat {
    v.chunks(n).map(<[Rational]>::to_vec).collect()
}

/// Builds the model of `spec`, checks closure, and aligns it with
/// `build_algebra(spec)`; fails with UnsupportedFamily for D(2,1;a), F(4), G(3).
pub fn matrix_realization(spec: &AlgebraSpec) -> Result<MatrixSuperAlgebra> {
    let l = layout(spec)?;
    let n = l.even + l.odd;
    let quotient = spec.family == Family::Psl22;
    let mut flats = match &l.form {
        Some(b) => osp_matrices(&l, b)?,
        None => sl_matrices(&l),
    };
    // rows in reduced echelon form: coordinates are read off at the pivots
    let pivots = linalg::rref(&mut flats)?;
    flats.truncate(pivots.len());
    let cells_weight = |k: usize| -> Vec<i64> {
        let (a, c) = (k / n, k % n);
        l.wt[a].iter().zip(&l.wt[c]).map(|(x, y)| x - y).collect()
    };
    let fail = |m: String| Error::ConstructionFailure(format!("{spec}: {m}"));
    let mut odd = Vec::new();
    let mut weights = Vec::new();
    for f in &flats {
        let support: Vec<usize> = (0..n * n).filter(|&k| !f[k].is_zero()).collect();
        let w = cells_weight(support[0]);
        if support.iter().any(|&k| cells_weight(k) != w) {
            return Err(fail("basis matrix is not a weight vector".into()));
        }
        odd.push((support[0] / n >= l.even) != (support[0] % n >= l.even));
        weights.push(w);
    }
    let coords = |m: &Mat| -> Result<Vec<Rational>> {
        let c: Vec<Rational> = pivots.iter().map(|&k| m[k / n][k % n].clone()).collect();
        for k in 0..n * n {
            let s = c.iter().zip(&flats).fold(Rational::zero(), |acc, (x, f)| if x.is_zero() || f[k].is_zero() { acc } else { &acc + &(x * &f[k]) });
            if s != m[k / n][k % n] {
                return Err(fail("bracket leaves the span".into()));
            }
        }
        Ok(c)
    };
    // psl(2|2): drop one Cartan vector having a nonzero coefficient on the identity
    let (keep, reduce): (Vec<usize>, Option<(usize, Vec<Rational>)>) = if quotient {
        let id: Mat = (0..n).map(|a| (0..n).map(|c| if a == c { Rational::one() } else { Rational::zero() }).collect()).collect();
        let ic = coords(&id)?;
        let drop = (0..ic.len()).find(|&k| !ic[k].is_zero()).ok_or_else(|| fail("identity not in span".into()))?;
        ((0..flats.len()).filter(|&k| k != drop).collect(), Some((drop, ic)))
    } else {
        ((0..flats.len()).collect(), None)
    };
    let mats: Vec<Mat> = flats.iter().map(|f| unflatten(f, n)).collect();
    let reduced = |c: Vec<Rational>| -> Vec<Rational> {
        let mut c = c;
        if let Some((drop, ic)) = &reduce {
            let t = c[*drop].checked_div(&ic[*drop]).expect("nonzero pivot");
            for (x, y) in c.iter_mut().zip(ic) {
                *x = &*x - &(&t * y);
            }
        }
        keep.iter().map(|&k| c[k].clone()).collect()
    };
    let dim = keep.len();
    let mut table: Vec<Vec<Sparse>> = vec![Vec::new(); dim];
    for (p, &i) in keep.iter().enumerate() {
        for &j in &keep[p..] {
            let br = supercommutator(&mats[i], odd[i], &mats[j], odd[j]);
            let c = reduced(coords(&br)?);
            table[p].push(to_sparse(&c.into_iter().map(RadicalScalar::from_rational).collect::<Vec<_>>()));
        }
    }
    let labels: Vec<BasisLabel> = (0..dim).map(|p| BasisLabel::Named(format!("M{}", p + 1))).collect();
    let kodd: Vec<bool> = keep.iter().map(|&k| odd[k]).collect();
    let kweights: Vec<Vec<i64>> = keep.iter().map(|&k| weights[k].clone()).collect();
    let raw = SuperLieAlgebra::from_brackets(format!("{spec} (matrices)"), labels.clone(), kodd.clone(), kweights.clone(), |i, j| {
        table[i][j - i].clone()
    });
    let src = build_algebra(spec)?;
    let simple = simple_targets(&src, &kweights)?;
    let alignment = align_with(&src, &raw, &simple)?;
    // str form on the model basis
    let str_form: Vec<Vec<Rational>> =
        keep.iter().map(|&i| keep.iter().map(|&j| supertrace(&mat_mul(&mats[i], &mats[j]), l.even)).collect()).collect();
    let form_scale = theta_scale(&src, &raw, &alignment, &str_form)?;
    let alg = raw.with_form(
        str_form
            .iter()
            .map(|row| to_sparse(&row.iter().map(|x| RadicalScalar::from_rational(x * &form_scale)).collect::<Vec<_>>()))
            .collect(),
    );
    check_form_match(&src, &alg, &alignment)?;
    Ok(MatrixSuperAlgebra {
        spec: spec.clone(),
        size: (l.even, l.odd),
        basis: keep.iter().map(|&k| mats[k].iter().map(|r| r.iter().cloned().map(RadicalScalar::from_rational).collect()).collect()).collect(),
        odd: kodd,
        weights: kweights,
        form_scale,
        center_quotient: quotient,
        alg,
        alignment,
    })
}

/// Model indices carrying the catalog weights `±α_i`.
fn simple_targets(src: &Algebra, weights: &[Vec<i64>]) -> Result<Vec<(usize, usize)>> {
    let find = |w: Vec<i64>| {
        let hits: Vec<usize> = (0..weights.len()).filter(|&k| weights[k] == w).collect();
        match hits[..] {
            [k] => Ok(k),
            _ => Err(Error::ConstructionFailure(format!("{} model vectors of weight {w:?}", hits.len()))),
        }
    };
    src.datum
        .simple
        .iter()
        .map(|s| {
            let w: Vec<i64> = s.coords.iter().map(|c| c.to_i64().expect("integral root coordinates")).collect();
            let neg = w.iter().map(|x| -x).collect();
            Ok((find(w)?, find(neg)?))
        })
        .collect()
}

/// `θ(h)/(2·str(Xθ X−θ))` with `h = [Xθ, X−θ]`.
fn theta_scale(src: &Algebra, tgt: &SuperLieAlgebra, al: &Alignment, str_form: &[Vec<Rational>]) -> Result<Rational> {
    let xp = &al.images[src.theta_index()];
    let xm = &al.images[src.neg_theta_index()];
    let h = tgt.bracket(xp, xm);
    let hx = tgt.bracket(&h, xp);
    let k = xp.iter().position(|c| !c.is_zero()).expect("nonzero image");
    let eig = hx[k].checked_div(&xp[k])?;
    let mut s = RadicalScalar::zero();
    for (i, a) in xp.iter().enumerate() {
        for (j, b) in xm.iter().enumerate() {
            if !a.is_zero() && !b.is_zero() && !str_form[i][j].is_zero() {
                s = &s + &(&(a * b) * &RadicalScalar::from_rational(str_form[i][j].clone()));
            }
        }
    }
    let c = eig.checked_div(&(&s * &RadicalScalar::from_int(2)))?;
    c.as_rational().ok_or_else(|| Error::NormalizationFailure("irrational form scale".into()))
}

/// The pulled-back form equals the catalog form on every basis pair.
fn check_form_match(src: &Algebra, alg: &SuperLieAlgebra, al: &Alignment) -> Result<()> {
    let g = &src.alg;
    let sparse: Vec<Vec<(usize, RadicalScalar)>> = al.images.iter().map(|v: &Vector| to_sparse(v)).collect();
    for a in 0..g.dim() {
        for b in a..g.dim() {
            let mut s = RadicalScalar::zero();
            for (i, x) in &sparse[a] {
                for (j, y) in &sparse[b] {
                    let f = alg.form_basis(*i, *j);
                    if !f.is_zero() {
                        s = &s + &(&(x * y) * &f);
                    }
                }
            }
            if s != g.form_basis(a, b) {
                return Err(Error::ConsistencyFailure(format!("{}: form differs on ({}, {})", src.spec, g.labels[a], g.labels[b])));
            }
        }
    }
    Ok(())
}
