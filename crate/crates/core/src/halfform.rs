//! The form `⟨u,v⟩ = (e|[u,v])` on `𝔤_{−1/2}` and its positivity on the
//! real subspace where `φ = −id`.

use crate::construct::algebra::{add_vec, scale_vec, sub_vec, unit, Vector};
use crate::construct::{structure_constant, Algebra};
use crate::error::{Error, Result};
use crate::exact::{RadicalScalar, Rational};
use crate::involution::{real_fixed_basis, ConjugateLinearMap, MinimalData, Sl2Triple};
use crate::linalg;

/// `u_α`, `v_α` over the positive odd roots, and a real basis of `𝔯`.
#[derive(Clone, Debug)]
pub struct HalfSpaceBasis {
    pub roots: Vec<Vec<i64>>,
    /// `N_{−θ,α}` for each root.
    pub n_minus_theta: Vec<RadicalScalar>,
    pub u: Vec<Vector>,
    pub v: Vec<Vector>,
    pub r_basis: Vec<Vector>,
    /// Identities checked, with the number of instances of each.
    pub checked: Vec<(&'static str, usize)>,
}

impl HalfSpaceBasis {
    pub fn len(&self) -> usize {
        self.u.len()
    }

    pub fn is_empty(&self) -> bool {
        self.u.is_empty()
    }
}

fn neg(c: &[i64]) -> Vec<i64> {
    c.iter().map(|x| -x).collect()
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// `u_α = X_α + i N_{−θ,α} X_{α−θ}` for positive odd `α`, in root order.
pub fn u_vectors(alg: &Algebra) -> Result<Vec<(Vec<i64>, Vector)>> {
    let n = alg.alg.dim();
    let theta = &alg.datum.theta.coeffs;
    let mut out = Vec::new();
    for root in alg.datum.positive.iter().filter(|r| r.odd) {
        let a = &root.coeffs;
        let nm = structure_constant(alg, &neg(theta), a)?;
        let mut u = unit(n, alg.root_index(a)?);
        u[alg.root_index(&sub(a, theta))?] = &RadicalScalar::i() * &nm;
        out.push((a.clone(), u));
    }
    Ok(out)
}

fn in_half(alg: &Algebra, triple: &Sl2Triple, u: &[RadicalScalar]) -> bool {
    let mh = RadicalScalar::from_rational(Rational::new(-1, 2));
    alg.alg.bracket(&triple.x, u) == scale_vec(&mh, u)
}

/// `⟨u,v⟩ = (e|[u,v])`.
pub fn pair(alg: &Algebra, triple: &Sl2Triple, u: &[RadicalScalar], v: &[RadicalScalar]) -> Result<RadicalScalar> {
    for w in [u, v] {
        if !in_half(alg, triple, w) {
            return Err(Error::WrongGrade("argument is not in 𝔤_{−1/2}".into()));
        }
    }
    Ok(alg.alg.form_vec(&triple.e, &alg.alg.bracket(u, v)))
}

fn fail(name: &str, alg: &Algebra, root: &[i64]) -> Error {
    Error::IdentityFailure(format!("{name} fails for {} at α = {root:?}", alg.spec))
}

fn real_rows(vs: &[Vector]) -> Vec<Vec<RadicalScalar>> {
    vs.iter().map(|v| v.iter().map(|c| c.real_part()).chain(v.iter().map(|c| c.imag_part())).collect()).collect()
}

/// Builds the `u_α`, `v_α` and `𝔯`, checking every identity along the way.
pub fn half_basis(alg: &Algebra, data: &MinimalData) -> Result<HalfSpaceBasis> {
    let phi = &data.phi;
    let triple = &data.triple;
    let theta = alg.datum.theta.coeffs.clone();
    let mt = neg(&theta);
    let one = RadicalScalar::one();
    let i = RadicalScalar::i();
    let half = RadicalScalar::from_rational(Rational::new(1, 2));
    let pairs = u_vectors(alg)?;
    let roots: Vec<Vec<i64>> = pairs.iter().map(|(a, _)| a.clone()).collect();
    let u: Vec<Vector> = pairs.into_iter().map(|(_, u)| u).collect();
    let d = roots.len();
    let pos = |r: &[i64]| roots.iter().position(|x| x == r);
    let mut nmt = Vec::new();
    let n = alg.alg.dim();
    for (k, a) in roots.iter().enumerate() {
        let na = structure_constant(alg, &mt, a)?;
        let amt = sub(a, &theta);
        let tma = neg(&amt);
        if &na * &structure_constant(alg, &theta, &amt)? != one {
            return Err(fail("N_{−θ,α}N_{θ,α−θ} = 1", alg, a));
        }
        if &na * &na != one {
            return Err(fail("N_{−θ,α}² = 1", alg, a));
        }
        if &na * &structure_constant(alg, &mt, &tma)? != one {
            return Err(fail("N_{−θ,α}N_{−θ,θ−α} = 1", alg, a));
        }
        if !in_half(alg, triple, &u[k]) {
            return Err(fail("[x,u_α] = −u_α/2", alg, a));
        }
        let j = pos(&tma).ok_or_else(|| fail("θ−α is a positive odd root", alg, a))?;
        if phi.apply(&u[k]) != scale_vec(&na, &u[j]) {
            return Err(fail("φ(u_α) = N_{−θ,α}u_{θ−α}", alg, a));
        }
        let want = add_vec(&scale_vec(&i, &unit(n, alg.root_index(a)?)), &scale_vec(&na, &unit(n, alg.root_index(&amt)?)));
        if alg.alg.bracket(&triple.e, &u[k]) != want {
            return Err(fail("[e,u_α] = iX_α + N_{−θ,α}X_{α−θ}", alg, a));
        }
        nmt.push(na);
    }
    for a in 0..d {
        for b in 0..d {
            let got = pair(alg, triple, &u[a], &u[b])?;
            let want = if sub(&theta, &roots[a]) == roots[b] {
                -(&nmt[a] + &nmt[b])
            } else {
                RadicalScalar::zero()
            };
            if got != want {
                return Err(fail("⟨u_α,u_β⟩ = −(N_{−θ,α}+N_{−θ,β})δ_{θ−α,β}", alg, &roots[a]));
            }
        }
    }
    let v: Vec<Vector> = u
        .iter()
        .map(|ua| {
            let pu = phi.apply(ua);
            add_vec(&scale_vec(&half, &sub_vec(ua, &pu)), &scale_vec(&(&i * &half), &add_vec(ua, &pu)))
        })
        .collect();
    let minus_phi = ConjugateLinearMap {
        cols: phi.cols.iter().map(|c| c.iter().map(|(k, x)| (*k, -x)).collect()).collect(),
    };
    for (k, va) in v.iter().enumerate() {
        if minus_phi.apply(va) != *va {
            return Err(fail("v_α ∈ 𝔯", alg, &roots[k]));
        }
    }
    let r_basis = real_fixed_basis(&minus_phi, &u)?;
    let rv = real_rows(&v);
    let rr = real_rows(&r_basis);
    let both: Vec<_> = rv.iter().chain(&rr).cloned().collect();
    if r_basis.len() != d || linalg::rank(&rv)? != d || linalg::rank(&both)? != d {
        return Err(Error::IdentityFailure(format!("{}: the v_α do not span 𝔯", alg.spec)));
    }
    let checked = vec![
        ("rss", d),
        ("Npm1", d),
        ("ns", d),
        ("u-grade", d),
        ("secondaa", d),
        ("a1", d),
        ("a2", d * d),
    ];
    Ok(HalfSpaceBasis { roots, n_minus_theta: nmt, u, v, r_basis, checked })
}

/// Gram matrix of `⟨·,·⟩` on the `v_α`; must be `2·I`.
pub fn gram_on_r(alg: &Algebra, triple: &Sl2Triple, hb: &HalfSpaceBasis) -> Result<Vec<Vec<RadicalScalar>>> {
    let d = hb.len();
    let mut g = vec![vec![RadicalScalar::zero(); d]; d];
    for a in 0..d {
        for b in 0..d {
            g[a][b] = pair(alg, triple, &hb.v[a], &hb.v[b])?;
        }
    }
    let two = RadicalScalar::from_int(2);
    for a in 0..d {
        for b in 0..d {
            let want = if a == b { two.clone() } else { RadicalScalar::zero() };
            if g[a][b] != want {
                let c = if a == b { (a + 1) % d.max(1) } else { b };
                return Err(Error::PositivityFailure(format!(
                    "{}: Gram entry ({a},{b}) = {}; minor [[{}, {}], [{}, {}]]",
                    alg.spec, g[a][b], g[a][a], g[a][c], g[c][a], g[c][c]
                )));
            }
        }
    }
    Ok(g)
}
