//! Real forms as fixed points of conjugate linear involutions.

use crate::construct::algebra::{to_sparse, unit, Vector};
use crate::construct::SuperLieAlgebra;
use crate::error::{Error, Result};
use crate::exact::RadicalScalar;
use crate::involution::{first_nonnegative_pivot, real_fixed_basis, ConjugateLinearMap};
use crate::linalg::Subspace;

use super::align::Alignment;

/// A real basis of `{v : φ(v) = v}`; its real dimension equals `dim 𝔤`.
pub fn real_form_fixed_points(alg: &SuperLieAlgebra, phi: &ConjugateLinearMap) -> Result<Vec<Vector>> {
    phi.check_involution()?;
    let n = alg.dim();
    let all: Vec<Vector> = (0..n).map(|j| unit(n, j)).collect();
    let fixed = real_fixed_basis(phi, &all)?;
    if fixed.len() != n {
        return Err(Error::ConsistencyFailure(format!("fixed points have real dimension {} for dim {n}", fixed.len())));
    }
    Ok(fixed)
}

/// `A∘φ∘A⁻¹` for the linear isomorphism `A` of an alignment.
pub fn transport(phi: &ConjugateLinearMap, al: &Alignment) -> Result<ConjugateLinearMap> {
    let n = al.images.len();
    let sub = Subspace::new(al.images.clone())?;
    let push = |c: &[RadicalScalar]| -> Vector {
        let mut out = vec![RadicalScalar::zero(); n];
        for (x, img) in c.iter().zip(&al.images) {
            if !x.is_zero() {
                for (k, y) in img.iter().enumerate() {
                    if !y.is_zero() {
                        out[k] = &out[k] + &(x * y);
                    }
                }
            }
        }
        out
    };
    let cols = (0..n)
        .map(|j| {
            let c = sub.coords(&unit(n, j)).expect("images span");
            to_sparse(&push(&phi.apply(&c)))
        })
        .collect();
    Ok(ConjugateLinearMap { cols })
}

/// `tr(ad u ∘ ad v)` restricted to the even part, on real vectors.
pub fn even_trace_form(alg: &SuperLieAlgebra, vectors: &[Vector]) -> Result<Vec<Vec<RadicalScalar>>> {
    let even: Vec<usize> = (0..alg.dim()).filter(|&k| !alg.odd[k]).collect();
    let ad: Vec<Vec<Vector>> = vectors.iter().map(|u| even.iter().map(|&k| alg.bracket(u, &unit(alg.dim(), k))).collect()).collect();
    let k = vectors.len();
    let mut gram = vec![vec![RadicalScalar::zero(); k]; k];
    for a in 0..k {
        for b in a..k {
            // Σ_col (ad a)(ad b)[col][col] over even basis columns
            let mut t = RadicalScalar::zero();
            for (ci, _) in even.iter().enumerate() {
                let col = &ad[b][ci];
                for (mi, &m) in even.iter().enumerate() {
                    if !col[m].is_zero() && !ad[a][mi][even[ci]].is_zero() {
                        t = &t + &(&col[m] * &ad[a][mi][even[ci]]);
                    }
                }
            }
            if !t.is_real() {
                return Err(Error::CompactnessFailure(format!("trace form not real on vectors {a},{b}")));
            }
            gram[a][b] = t.clone();
            gram[b][a] = t;
        }
    }
    Ok(gram)
}

/// The real span of `vectors` is a compact Lie algebra: the even trace form
/// is negative definite on it.
pub fn check_compact_span(alg: &SuperLieAlgebra, vectors: &[Vector]) -> Result<()> {
    match first_nonnegative_pivot(even_trace_form(alg, vectors)?)? {
        None => Ok(()),
        Some(p) => Err(Error::CompactnessFailure(format!("{}: leading minor {} is not negative", alg.name, p + 1))),
    }
}
