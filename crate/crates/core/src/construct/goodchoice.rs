//! Good choice of root vectors and the normalized algebra.

use crate::catalog::{root_system, AlgebraSpec, RootDatum};
use crate::error::{Error, Result};
use crate::exact::{RadicalScalar, Rational};

use super::algebra::{Sparse, SuperLieAlgebra};
use super::chevalley::{basis_index, build_chevalley, ChevalleyData};

/// Rescaling and sign data of a good choice.
#[derive(Clone, Debug)]
pub struct RootVectorBasis {
    /// `Y_k = scale[k]·X_k` over the Chevalley basis.
    pub scale: Vec<RadicalScalar>,
    /// `σ_α` per basis vector (1 on the Cartan).
    pub sigma: Vec<i64>,
    /// `ξ_α` per basis vector (1 on the Cartan).
    pub xi: Vec<i64>,
    /// Radicands adjoined by the rescaling.
    pub radicands: Vec<u64>,
}

/// A catalog algebra with its good-choice basis.
#[derive(Clone, Debug)]
pub struct Algebra {
    pub spec: AlgebraSpec,
    pub datum: RootDatum,
    pub chevalley: ChevalleyData,
    /// Chevalley basis `X`.
    pub raw: SuperLieAlgebra,
    /// Good-choice basis `Y`.
    pub alg: SuperLieAlgebra,
    pub basis: RootVectorBasis,
}

impl Algebra {
    pub fn cartan_dim(&self) -> usize {
        self.chevalley.cartan_dim()
    }

    pub fn index(&self, coeffs: &[i64]) -> Option<usize> {
        basis_index(&self.datum, self.cartan_dim(), coeffs)
    }

    pub fn theta_index(&self) -> usize {
        self.index(&self.datum.theta.coeffs).expect("θ is a root")
    }

    pub fn neg_theta_index(&self) -> usize {
        let t: Vec<i64> = self.datum.theta.coeffs.iter().map(|c| -c).collect();
        self.index(&t).expect("−θ is a root")
    }

    /// Index of the root vector of weight `coeffs`, or `NotARoot`.
    pub fn root_index(&self, coeffs: &[i64]) -> Result<usize> {
        self.index(coeffs).ok_or_else(|| Error::NotARoot(format!("{coeffs:?}")))
    }

    /// Signed coefficients of the basis vector `k` (zero on the Cartan).
    pub fn weight(&self, k: usize) -> &[i64] {
        &self.alg.weights[k]
    }

    /// `h_γ = Σ n_i h_i` in the basis, for a weight `γ`.
    pub fn coroot_vector(&self, coeffs: &[i64]) -> Vec<RadicalScalar> {
        let n = self.alg.dim();
        let mut v = vec![RadicalScalar::zero(); n];
        for (i, &c) in coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (p, x) in self.chevalley.coroots[i].iter().enumerate() {
                v[p] = &v[p] + &RadicalScalar::from_rational(x * &Rational::int(c));
            }
        }
        v
    }

    /// `Λ₀`: `−sgn(α_i|α_i)` on even simple roots, `√−1` on odd ones.
    pub fn lambda0(&self) -> Vec<RadicalScalar> {
        lambda0(&self.datum)
    }
}

pub fn lambda0(datum: &RootDatum) -> Vec<RadicalScalar> {
    datum
        .simple
        .iter()
        .map(|s| {
            if s.odd {
                RadicalScalar::i()
            } else {
                RadicalScalar::from_int(-(datum.form(&s.coords, &s.coords).signum() as i64))
            }
        })
        .collect()
}

/// Checks the reality constraints on `Λ`.
pub fn check_lambda(datum: &RootDatum, lambda: &[RadicalScalar]) -> Result<()> {
    if lambda.len() != datum.rank() {
        return Err(Error::BadLambda(format!("expected {} values, got {}", datum.rank(), lambda.len())));
    }
    for (i, (l, s)) in lambda.iter().zip(&datum.simple).enumerate() {
        if l.is_zero() {
            return Err(Error::BadLambda(format!("λ_{} = 0", i + 1)));
        }
        if s.odd && !l.is_imaginary() {
            return Err(Error::BadLambda(format!("λ_{} = {l} must be imaginary for an odd root", i + 1)));
        }
        if !s.odd && !l.is_real() {
            return Err(Error::BadLambda(format!("λ_{} = {l} must be real for an even root", i + 1)));
        }
    }
    Ok(())
}

fn sgn(x: &Rational) -> i64 {
    x.signum() as i64
}

/// `λ_α = ∏(−ξ_{α_i} λ_i)^{n_i}` for any (signed) coefficient vector.
pub fn lambda_alpha(datum: &RootDatum, lambda: &[RadicalScalar], coeffs: &[i64]) -> Result<RadicalScalar> {
    let mut out = RadicalScalar::one();
    for (i, &n) in coeffs.iter().enumerate() {
        if n == 0 {
            continue;
        }
        let s = &datum.simple[i];
        let xi = if s.odd { 1 } else { sgn(&datum.form(&s.coords, &s.coords)) };
        let base = &RadicalScalar::from_int(-xi) * &lambda[i];
        let p = base.pow(n.unsigned_abs() as u32);
        out = &out * &if n > 0 { p } else { p.invert()? };
    }
    Ok(out)
}

/// The rescaling making `ω_Λ(X_α) = −σ_α ξ_α λ_α X_{−α}` for all roots.
///
/// With `X_{−γ}` built by the same bracket word as `X_γ`, one has
/// `ω_Λ(X_γ) = (∏λ_i^{n_i}) X_{−γ}`, and rescaling `Y_γ = sX_γ`,
/// `Y_{−γ} = X_{−γ}/(s c_γ)` forces `|s|² = −ξ_γ ∏(−ξ_{α_i})^{n_i}/c_γ`.
/// The rescaling does not depend on `Λ`; `Λ` is only validated.
pub fn good_choice(datum: &RootDatum, chev: &ChevalleyData, lambda: &[RadicalScalar]) -> Result<RootVectorBasis> {
    check_lambda(datum, lambda)?;
    let c = chev.cartan_dim();
    let np = datum.positive.len();
    let dim = c + 2 * np;
    let mut scale = vec![RadicalScalar::one(); dim];
    let mut sigma = vec![1i64; dim];
    let mut xi = vec![1i64; dim];
    let mut radicands = Vec::new();
    let xi_simple: Vec<i64> = datum
        .simple
        .iter()
        .map(|s| if s.odd { 1 } else { sgn(&datum.form(&s.coords, &s.coords)) })
        .collect();
    for (n, root) in datum.positive.iter().enumerate() {
        let xi_g = if root.odd { 1 } else { sgn(&datum.form(&root.coords, &root.coords)) };
        let mut prod = -xi_g;
        for (i, &k) in root.coeffs.iter().enumerate() {
            if k % 2 == 1 && xi_simple[i] == 1 {
                prod = -prod;
            }
        }
        let cg = &chev.pairing[n];
        let t = &Rational::int(prod) / cg;
        if !t.is_positive() {
            return Err(Error::NormalizationFailure(format!(
                "{}: |s|² = {t} at root {:?}",
                datum.spec, root.coeffs
            )));
        }
        let s = RadicalScalar::sqrt_rational(&t)?;
        radicands.extend(s.radicands().filter(|&r| r != 1));
        let inv = (&s * &RadicalScalar::from_rational(cg.clone())).invert()?;
        scale[c + n] = s;
        scale[c + np + n] = inv;
        xi[c + n] = xi_g;
        xi[c + np + n] = xi_g;
        if root.odd {
            sigma[c + np + n] = -1;
        }
    }
    radicands.sort_unstable();
    radicands.dedup();
    Ok(RootVectorBasis { scale, sigma, xi, radicands })
}

/// Images of the basis under `ω_Λ` in the good-choice basis, derived from
/// `ω_Λ(X_γ) = μ_γ X_{−γ}`, `ω_Λ(X_{−γ}) = conj(μ_γ)^{-1} X_γ`, `ω_Λ(h) = −h`.
pub fn omega_images(alg: &Algebra, lambda: &[RadicalScalar]) -> Result<Vec<Sparse>> {
    check_lambda(&alg.datum, lambda)?;
    let c = alg.cartan_dim();
    let np = alg.datum.positive.len();
    let mut cols: Vec<Sparse> = vec![Vec::new(); c + 2 * np];
    for (p, col) in cols.iter_mut().enumerate().take(c) {
        *col = vec![(p, RadicalScalar::from_int(-1))];
    }
    let s = &alg.basis.scale;
    for (n, root) in alg.datum.positive.iter().enumerate() {
        let mut mu = RadicalScalar::one();
        for (i, &k) in root.coeffs.iter().enumerate() {
            mu = &mu * &lambda[i].pow(k as u32);
        }
        let (a, b) = (c + n, c + np + n);
        // ω(Y_a) = conj(s_a) μ X_b = conj(s_a) μ / s_b · Y_b
        let fa = &(&s[a].conj() * &mu) * &s[b].invert()?;
        let fb = &(&s[b].conj() * &mu.conj().invert()?) * &s[a].invert()?;
        cols[a] = vec![(b, fa)];
        cols[b] = vec![(a, fb)];
    }
    Ok(cols)
}

/// Verifies `ω_Λ(Y_α) = −σ_α ξ_α λ_α Y_{−α}` and `(Y_α|Y_{−α}) = σ_α` on all roots.
pub fn verify_good_choice(alg: &Algebra, lambda: &[RadicalScalar]) -> Result<usize> {
    let cols = omega_images(alg, lambda)?;
    let mut checked = 0;
    for k in alg.cartan_dim()..alg.alg.dim() {
        let w = alg.weight(k).to_vec();
        let neg: Vec<i64> = w.iter().map(|c| -c).collect();
        let j = alg.root_index(&neg)?;
        let la = lambda_alpha(&alg.datum, lambda, &w)?;
        let want = &RadicalScalar::from_int(-alg.basis.sigma[k] * alg.basis.xi[k]) * &la;
        if cols[k] != vec![(j, want.clone())] {
            return Err(Error::NormalizationFailure(format!(
                "{}: (ox) fails at {:?}: got {:?}, want {want}",
                alg.spec, w, cols[k]
            )));
        }
        if alg.alg.form_basis(k, j) != RadicalScalar::from_int(alg.basis.sigma[k]) {
            return Err(Error::NormalizationFailure(format!("{}: (Y|Y−) != σ at {:?}", alg.spec, w)));
        }
        checked += 1;
    }
    Ok(checked)
}

/// `N_{α,β}`: the coefficient of `Y_{α+β}` in `[Y_α, Y_β]`.
pub fn structure_constant(alg: &Algebra, alpha: &[i64], beta: &[i64]) -> Result<RadicalScalar> {
    let sum: Vec<i64> = alpha.iter().zip(beta).map(|(a, b)| a + b).collect();
    let target = alg.root_index(&sum)?;
    let a = alg.root_index(alpha)?;
    let b = alg.root_index(beta)?;
    Ok(alg
        .alg
        .bracket_basis(a, b)
        .into_iter()
        .find(|(k, _)| *k == target)
        .map(|(_, c)| c)
        .unwrap_or_default())
}

/// Root data, contragredient construction and good-choice normalization.
pub fn build_algebra(spec: &AlgebraSpec) -> Result<Algebra> {
    let datum = root_system(spec)?;
    let (raw, chevalley) = build_chevalley(&datum)?;
    let basis = good_choice(&datum, &chevalley, &lambda0(&datum))?;
    let alg = raw.rescaled(&basis.scale)?;
    Ok(Algebra { spec: spec.clone(), datum, chevalley, raw, alg, basis })
}
