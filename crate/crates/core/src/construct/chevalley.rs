//! Contragredient construction from the simple roots.
//!
//! Positive root vectors are produced height by height as `X_γ = [e_i, X_β]`.
//! A vector of positive degree is zero in the simple quotient exactly when
//! every `f_j` kills it, so each new bracket is identified through its
//! `f`-action: zero, a new root vector, or a multiple of an existing one.

use std::collections::HashSet;

use crate::catalog::RootDatum;
use crate::error::{Error, Result};
use crate::exact::{RadicalScalar, Rational};
use crate::linalg;

use super::algebra::{BasisLabel, Sparse, SuperLieAlgebra};

type QSparse = Vec<(usize, Rational)>;

/// How each basis vector was produced.
#[derive(Clone, Debug)]
pub struct ChevalleyData {
    /// Simple coroots `h_p` kept as the Cartan basis.
    pub cartan_pivots: Vec<usize>,
    /// `h_i` in the Cartan basis, for every simple coroot.
    pub coroots: Vec<Vec<Rational>>,
    /// For positive root `n`: `None` if simple, else `(i, β)` with `X_n = [e_i, X_β]`
    /// and `X_{−n} = [f_i, X_{−β}]`.
    pub words: Vec<Option<(usize, usize)>>,
    /// `(X_n | X_{−n})`.
    pub pairing: Vec<Rational>,
}

impl ChevalleyData {
    pub fn cartan_dim(&self) -> usize {
        self.cartan_pivots.len()
    }
}

/// Basis layout: Cartan, then positive roots, then negative roots, each
/// in the datum's root order.
pub fn basis_index(datum: &RootDatum, cartan_dim: usize, coeffs: &[i64]) -> Option<usize> {
    let p = datum.positive.len();
    if let Some(n) = datum.positive_index(coeffs) {
        return Some(cartan_dim + n);
    }
    let neg: Vec<i64> = coeffs.iter().map(|c| -c).collect();
    datum.positive_index(&neg).map(|n| cartan_dim + p + n)
}

fn q_axpy(acc: &mut QSparse, c: &Rational, v: &QSparse) {
    for (k, x) in v {
        let t = c * x;
        match acc.binary_search_by_key(k, |(i, _)| *i) {
            Ok(p) => {
                acc[p].1 += &t;
                if acc[p].1.is_zero() {
                    acc.remove(p);
                }
            }
            Err(p) => {
                if !t.is_zero() {
                    acc.insert(p, (*k, t));
                }
            }
        }
    }
}

/// Column-sparse operator.
#[derive(Clone)]
struct Op(Vec<QSparse>);

impl Op {
    fn apply(&self, v: &QSparse) -> QSparse {
        let mut acc = Vec::new();
        for (k, c) in v {
            q_axpy(&mut acc, c, &self.0[*k]);
        }
        acc
    }

    fn compose(&self, other: &Op) -> Op {
        Op(other.0.iter().map(|col| self.apply(col)).collect())
    }

    /// `self·other − s·other·self`.
    fn supercommutator(&self, other: &Op, s: &Rational) -> Op {
        let ab = self.compose(other);
        let ba = other.compose(self);
        let neg_s = -s;
        Op(ab
            .0
            .into_iter()
            .zip(ba.0)
            .map(|(mut x, y)| {
                q_axpy(&mut x, &neg_s, &y);
                x
            })
            .collect())
    }
}

fn pm(odd: bool) -> Rational {
    if odd {
        Rational::int(-1)
    } else {
        Rational::one()
    }
}

/// Builds the algebra in the unnormalized root-vector basis.
pub fn build_chevalley(datum: &RootDatum) -> Result<(SuperLieAlgebra, ChevalleyData)> {
    let spec = &datum.spec;
    let r = datum.rank();
    let b = datum.cartan_matrix();
    let par: Vec<bool> = datum.simple.iter().map(|s| s.odd).collect();
    let roots = &datum.positive;
    let np = roots.len();

    // Cartan basis: independent rows of the Cartan matrix
    let mut pivots = Vec::new();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (i, row) in b.iter().enumerate() {
        let mut trial = rows.clone();
        trial.push(row.clone());
        if linalg::rank(&trial)? == trial.len() {
            rows = trial;
            pivots.push(i);
        }
    }
    let c = pivots.len();
    // h_i = Σ_p coef_p h_{pivot p}, solved on the action rows
    let tr: Vec<Vec<Rational>> = (0..r).map(|col| rows.iter().map(|row| row[col].clone()).collect()).collect();
    let coroots: Vec<Vec<Rational>> = b
        .iter()
        .map(|row| {
            linalg::solve(&tr, row)?
                .ok_or_else(|| Error::ConstructionFailure(format!("{spec}: coroot outside Cartan span")))
        })
        .collect::<Result<_>>()?;

    let simple_index = |n: usize| -> Option<usize> {
        let co = &roots[n].coeffs;
        if roots[n].height() == 1 {
            co.iter().position(|&x| x == 1)
        } else {
            None
        }
    };
    let minus = |n: usize, j: usize| -> Option<usize> {
        let mut co = roots[n].coeffs.clone();
        co[j] -= 1;
        datum.positive_index(&co)
    };
    let plus = |n: usize, i: usize| -> Option<usize> {
        let mut co = roots[n].coeffs.clone();
        co[i] += 1;
        datum.positive_index(&co)
    };
    let form_simple_root = |i: usize, n: usize| -> Rational {
        roots[n].coeffs.iter().enumerate().map(|(k, &x)| &b[i][k] * &Rational::int(x)).sum()
    };

    // f-action on X_n (positive) and e-action on X_{-n}; None until defined
    let mut f_act: Vec<Option<Vec<Rational>>> = vec![None; np];
    let mut e_neg: Vec<Option<Vec<Rational>>> = vec![None; np];
    // e_up[i][n] = coefficient of X_{n+α_i} in [e_i, X_n]; f_dn[i][n] likewise for negatives
    let mut e_up: Vec<Vec<Rational>> = vec![vec![Rational::zero(); np]; r];
    let mut f_dn: Vec<Vec<Rational>> = vec![vec![Rational::zero(); np]; r];
    let mut words: Vec<Option<(usize, usize)>> = vec![None; np];
    for n in 0..np {
        if let Some(i) = simple_index(n) {
            let _ = i;
            f_act[n] = Some(Vec::new());
            e_neg[n] = Some(Vec::new());
        }
    }

    for beta in 0..np {
        if f_act[beta].is_none() {
            return Err(Error::ConstructionFailure(format!(
                "{spec}: root {:?} was never generated",
                roots[beta].coeffs
            )));
        }
        let hb = roots[beta].height();
        for i in 0..r {
            let sb = roots[beta].odd;
            // w_j: coefficient of X_{γ−α_j} in [f_j, [e_i, X_β]]
            let mut w = vec![Rational::zero(); r];
            let mut wn = vec![Rational::zero(); r];
            w[i] = -&(&pm(par[i]) * &form_simple_root(i, beta));
            wn[i] = -form_simple_root(i, beta);
            for j in 0..r {
                let s = pm(par[i] && par[j]);
                if hb == 1 {
                    if simple_index(beta) == Some(j) {
                        w[j] += &(&s * &(&pm(par[j]) * &b[i][j]));
                        wn[j] += &(&s * &b[i][j]);
                    }
                } else if let Some(lower) = minus(beta, j) {
                    let fb = &f_act[beta].as_ref().unwrap()[j];
                    let eb = &e_neg[beta].as_ref().unwrap()[j];
                    w[j] += &(&s * &(fb * &e_up[i][lower]));
                    wn[j] += &(&s * &(eb * &f_dn[i][lower]));
                }
            }
            let _ = sb;
            let zero_w = w.iter().all(Rational::is_zero);
            let zero_wn = wn.iter().all(Rational::is_zero);
            if zero_w != zero_wn {
                return Err(Error::ConstructionFailure(format!(
                    "{spec}: positive and negative sides disagree at e_{i} on {:?}",
                    roots[beta].coeffs
                )));
            }
            let Some(gamma) = plus(beta, i) else {
                if !zero_w {
                    let mut co = roots[beta].coeffs.clone();
                    co[i] += 1;
                    return Err(Error::ConstructionFailure(format!("{spec}: generated non-root weight {co:?}")));
                }
                continue;
            };
            if zero_w {
                continue;
            }
            match &f_act[gamma] {
                None => {
                    f_act[gamma] = Some(w);
                    e_neg[gamma] = Some(wn);
                    e_up[i][beta] = Rational::one();
                    f_dn[i][beta] = Rational::one();
                    words[gamma] = Some((i, beta));
                }
                Some(existing) => {
                    e_up[i][beta] = proportion(&w, existing).ok_or_else(|| multiplicity(spec, &roots[gamma].coeffs))?;
                    let existing_n = e_neg[gamma].as_ref().unwrap();
                    f_dn[i][beta] =
                        proportion(&wn, existing_n).ok_or_else(|| multiplicity(spec, &roots[gamma].coeffs))?;
                }
            }
        }
    }

    // generator operators on the basis
    let dim = c + 2 * np;
    let pos = |n: usize| c + n;
    let neg = |n: usize| c + np + n;
    let coroot_sparse = |i: usize| -> QSparse {
        coroots[i].iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(p, x)| (p, x.clone())).collect()
    };
    let mut e_op = Vec::new();
    let mut f_op = Vec::new();
    for i in 0..r {
        let mut e = vec![Vec::new(); dim];
        let mut f = vec![Vec::new(); dim];
        let ei = pos(simple_of(datum, i));
        let fi = neg(simple_of(datum, i));
        for (p, &piv) in pivots.iter().enumerate() {
            // [e_i, h_p] = −(α_p|α_i) e_i, [f_i, h_p] = (α_p|α_i) f_i
            if !b[piv][i].is_zero() {
                e[p] = vec![(ei, -&b[piv][i])];
                f[p] = vec![(fi, b[piv][i].clone())];
            }
        }
        for n in 0..np {
            if let Some(g) = plus(n, i) {
                if !e_up[i][n].is_zero() {
                    e[pos(n)] = vec![(pos(g), e_up[i][n].clone())];
                }
                if !f_dn[i][n].is_zero() {
                    f[neg(n)] = vec![(neg(g), f_dn[i][n].clone())];
                }
            }
            match simple_index(n) {
                Some(k) => {
                    if k == i {
                        e[neg(n)] = coroot_sparse(i);
                        f[pos(n)] = coroot_sparse(i).into_iter().map(|(p, x)| (p, &(-&pm(par[i])) * &x)).collect();
                    }
                }
                None => {
                    if let Some(lower) = minus(n, i) {
                        let a = &f_act[n].as_ref().unwrap()[i];
                        if !a.is_zero() {
                            f[pos(n)] = vec![(pos(lower), a.clone())];
                        }
                        let a = &e_neg[n].as_ref().unwrap()[i];
                        if !a.is_zero() {
                            e[neg(n)] = vec![(neg(lower), a.clone())];
                        }
                    }
                }
            }
        }
        e_op.push(Op(e));
        f_op.push(Op(f));
    }
    let mut ad: Vec<Option<Op>> = vec![None; dim];
    for (p, &piv) in pivots.iter().enumerate() {
        let mut h = vec![Vec::new(); dim];
        for n in 0..np {
            let w = form_simple_root(piv, n);
            if !w.is_zero() {
                h[pos(n)] = vec![(pos(n), w.clone())];
                h[neg(n)] = vec![(neg(n), -&w)];
            }
        }
        ad[p] = Some(Op(h));
    }
    for n in 0..np {
        let (up, down) = match words[n] {
            None => {
                let i = simple_index(n).unwrap();
                (e_op[i].clone(), f_op[i].clone())
            }
            Some((i, beta)) => {
                let s = pm(par[i] && roots[beta].odd);
                let xb = ad[pos(beta)].as_ref().unwrap();
                let yb = ad[neg(beta)].as_ref().unwrap();
                (e_op[i].supercommutator(xb, &s), f_op[i].supercommutator(yb, &s))
            }
        };
        ad[pos(n)] = Some(up);
        ad[neg(n)] = Some(down);
    }
    let ad: Vec<Op> = ad.into_iter().map(Option::unwrap).collect();

    // pairing (X_n|X_{−n}) from [X_n, X_{−n}] = c·h_n
    let mut pairing = Vec::with_capacity(np);
    for n in 0..np {
        let br = &ad[pos(n)].0[neg(n)];
        let mut hn: QSparse = Vec::new();
        for (k, &x) in roots[n].coeffs.iter().enumerate() {
            if x != 0 {
                q_axpy(&mut hn, &Rational::int(x), &coroot_sparse(k));
            }
        }
        let cn = proportion_sparse(br, &hn).ok_or_else(|| {
            Error::ConstructionFailure(format!("{spec}: [X,X−] not proportional to h at {:?}", roots[n].coeffs))
        })?;
        if cn.is_zero() {
            return Err(Error::ConstructionFailure(format!("{spec}: degenerate pairing at {:?}", roots[n].coeffs)));
        }
        pairing.push(cn);
    }

    let mut labels: Vec<BasisLabel> = pivots.iter().map(|&p| BasisLabel::Cartan(p)).collect();
    let mut odd = vec![false; c];
    let mut weights = vec![vec![0i64; r]; c];
    for root in roots {
        labels.push(BasisLabel::Root(root.coeffs.clone()));
        odd.push(root.odd);
        weights.push(root.coeffs.clone());
    }
    for root in roots {
        let nr = root.neg();
        labels.push(BasisLabel::Root(nr.coeffs.clone()));
        odd.push(root.odd);
        weights.push(nr.coeffs);
    }
    let lift = |v: &QSparse| -> Sparse { v.iter().map(|(k, x)| (*k, RadicalScalar::from_rational(x.clone()))).collect() };
    let mut form: Vec<Sparse> = vec![Vec::new(); dim];
    for (p, &pp) in pivots.iter().enumerate() {
        form[p] = pivots
            .iter()
            .enumerate()
            .filter(|(_, &qq)| !b[pp][qq].is_zero())
            .map(|(q, &qq)| (q, RadicalScalar::from_rational(b[pp][qq].clone())))
            .collect();
    }
    for n in 0..np {
        form[pos(n)] = vec![(neg(n), RadicalScalar::from_rational(pairing[n].clone()))];
        form[neg(n)] = vec![(pos(n), RadicalScalar::from_rational(&pm(roots[n].odd) * &pairing[n]))];
    }
    let root_set: HashSet<Vec<i64>> = datum.all_roots().into_iter().map(|r| r.coeffs).collect();
    let alg = SuperLieAlgebra::from_brackets(spec.to_string(), labels, odd, weights, |i, j| lift(&ad[i].0[j]))
        .with_form(form)
        .with_roots(root_set);
    Ok((alg, ChevalleyData { cartan_pivots: pivots, coroots, words, pairing }))
}

fn simple_of(datum: &RootDatum, i: usize) -> usize {
    let mut e = vec![0; datum.rank()];
    e[i] = 1;
    datum.positive_index(&e).expect("simple roots are roots")
}

fn multiplicity(spec: &crate::catalog::AlgebraSpec, coeffs: &[i64]) -> Error {
    Error::ConstructionFailure(format!("{spec}: root space {coeffs:?} has dimension > 1"))
}

/// `c` with `w = c·v`, if any (`v ≠ 0`).
fn proportion(w: &[Rational], v: &[Rational]) -> Option<Rational> {
    let k = v.iter().position(|x| !x.is_zero())?;
    let c = &w[k] / &v[k];
    w.iter().zip(v).all(|(a, b)| *a == &c * b).then_some(c)
}

fn proportion_sparse(w: &QSparse, v: &QSparse) -> Option<Rational> {
    let (k0, v0) = v.first()?;
    let w0 = w.iter().find(|(k, _)| k == k0).map(|(_, x)| x.clone()).unwrap_or_default();
    let c = &w0 / v0;
    let mut scaled: QSparse = Vec::new();
    q_axpy(&mut scaled, &c, v);
    (scaled == *w).then_some(c)
}
