//! Isomorphisms from a constructed algebra onto a model with a weight basis,
//! fixed by the images of the simple root vectors.

use std::collections::HashMap;

use crate::construct::algebra::{is_zero_vec, scale_vec, unit, Vector};
use crate::construct::{Algebra, SuperLieAlgebra};
use crate::error::{Error, Result};
use crate::exact::RadicalScalar;
use crate::linalg::{self, Subspace};

#[derive(Clone, Debug)]
pub struct Alignment {
    /// Image in the model of each basis vector of the constructed algebra.
    pub images: Vec<Vector>,
    /// Model basis indices receiving `X_{α_i}` and (a multiple of) `X_{−α_i}`.
    pub simple: Vec<(usize, usize)>,
    /// Basis pairs whose brackets were compared.
    pub pairs_checked: usize,
}

fn coefficient_of(v: &[RadicalScalar], w: &[RadicalScalar]) -> Option<RadicalScalar> {
    // v = c·w for a nonzero w
    let k = w.iter().position(|c| !c.is_zero())?;
    let c = v[k].checked_div(&w[k]).ok()?;
    (scale_vec(&c, w) == v).then_some(c)
}

/// Extends `X_{α_i} ↦ b_{pos_i}`, `X_{−α_i} ↦ s_i b_{neg_i}` (with `s_i` forced
/// by the Cartan relations) to all of `src` and checks every bracket.
pub fn align_with(src: &Algebra, tgt: &SuperLieAlgebra, simple: &[(usize, usize)]) -> Result<Alignment> {
    let g = &src.alg;
    let n = g.dim();
    let nt = tgt.dim();
    let d = &src.datum;
    let r = d.rank();
    if nt != n || simple.len() != r {
        return Err(Error::ConsistencyFailure(format!("model has dimension {nt}, algebra {n}")));
    }
    let fail = |m: String| Err(Error::ConsistencyFailure(format!("{}: {m}", src.spec)));
    let e_idx: Vec<usize> = (0..r).map(|i| src.root_index(&unit_i64(r, i))).collect::<Result<_>>()?;
    let f_idx: Vec<usize> = (0..r).map(|i| src.root_index(&neg_unit(r, i))).collect::<Result<_>>()?;
    // source Cartan relations [H_i, e_j] = B_ij e_j with H_i = [e_i, f_i]
    let hs: Vec<Vector> = (0..r).map(|i| g.bracket(&unit(n, e_idx[i]), &unit(n, f_idx[i]))).collect();
    let mut scale = Vec::with_capacity(r);
    for (i, &(p, q)) in simple.iter().enumerate() {
        let hp = tgt.bracket(&unit(nt, p), &unit(nt, q));
        let mut s: Option<RadicalScalar> = None;
        for (j, &(pj, _)) in simple.iter().enumerate() {
            let ej = unit(n, e_idx[j]);
            let bij = coefficient_of(&g.bracket(&hs[i], &ej), &ej).ok_or(Error::ConsistencyFailure("source is not a weight basis".into()))?;
            let tj = unit(nt, pj);
            let aij = match coefficient_of(&tgt.bracket(&hp, &tj), &tj) {
                Some(c) => c,
                None if is_zero_vec(&tgt.bracket(&hp, &tj)) => RadicalScalar::zero(),
                None => return fail(format!("model vector {pj} is not a weight vector")),
            };
            if aij.is_zero() != bij.is_zero() {
                return fail(format!("Cartan entry ({i},{j}) vanishes on one side only"));
            }
            if !aij.is_zero() {
                let c = bij.checked_div(&aij)?;
                match &s {
                    Some(s0) if *s0 != c => return fail(format!("Cartan row {i} is not proportional")),
                    _ => s = Some(c),
                }
            }
        }
        scale.push(s.ok_or(Error::ConsistencyFailure("zero Cartan row".into()))?);
    }
    let mut images: Vec<Option<Vector>> = vec![None; n];
    for i in 0..r {
        images[e_idx[i]] = Some(unit(nt, simple[i].0));
        images[f_idx[i]] = Some(scale_vec(&scale[i], &unit(nt, simple[i].1)));
    }
    // Cartan: solve for the basis vectors in terms of the H_i
    let c = src.cartan_dim();
    let mut hbasis = Vec::new();
    let mut hsrc = Vec::new();
    for i in 0..r {
        let mut trial = hsrc.clone();
        trial.push(hs[i].clone());
        if linalg::rank(&trial)? == trial.len() {
            hsrc = trial;
            hbasis.push(i);
        }
    }
    let sub = Subspace::new(hsrc)?;
    for k in 0..c {
        let coords = sub.coords(&unit(n, k)).ok_or(Error::ConsistencyFailure("Cartan not spanned by coroots".into()))?;
        let mut v = vec![RadicalScalar::zero(); nt];
        for (x, &i) in coords.iter().zip(&hbasis) {
            if !x.is_zero() {
                let hi = tgt.bracket(images[e_idx[i]].as_ref().unwrap(), images[f_idx[i]].as_ref().unwrap());
                v = crate::construct::algebra::add_vec(&v, &scale_vec(x, &hi));
            }
        }
        images[k] = Some(v);
    }
    // root vectors by height
    for root in &d.positive {
        if root.height() == 1 {
            continue;
        }
        for (sign, gens) in [(1i64, &e_idx), (-1, &f_idx)] {
            let beta: Vec<i64> = root.coeffs.iter().map(|x| sign * x).collect();
            let target = src.root_index(&beta)?;
            let mut done = false;
            for i in 0..r {
                let prev: Vec<i64> = beta.iter().enumerate().map(|(k, x)| if k == i { x - sign } else { *x }).collect();
                let Some(pi) = src.index(&prev) else { continue };
                let br = g.bracket_basis(gens[i], pi);
                let Some((_, nc)) = br.iter().find(|(k, _)| *k == target) else { continue };
                let img = tgt.bracket(images[gens[i]].as_ref().unwrap(), images[pi].as_ref().unwrap());
                images[target] = Some(scale_vec(&nc.invert()?, &img));
                done = true;
                break;
            }
            if !done {
                return fail(format!("root vector {beta:?} is not reached from the generators"));
            }
        }
    }
    let images: Vec<Vector> = images.into_iter().map(|v| v.expect("every basis vector has an image")).collect();
    if linalg::rank(&images)? != n {
        return fail("map is not injective".into());
    }
    let mut pairs = 0;
    for a in 0..n {
        for b in a..n {
            let mut lhs = vec![RadicalScalar::zero(); nt];
            for (k, x) in g.bracket_basis(a, b) {
                lhs = crate::construct::algebra::add_vec(&lhs, &scale_vec(&x, &images[k]));
            }
            if lhs != tgt.bracket(&images[a], &images[b]) {
                return fail(format!("bracket [{}, {}] is not preserved", g.labels[a], g.labels[b]));
            }
            pairs += 1;
        }
    }
    Ok(Alignment { images, simple: simple.to_vec(), pairs_checked: pairs })
}

fn unit_i64(r: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; r];
    v[i] = 1;
    v
}

fn neg_unit(r: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; r];
    v[i] = -1;
    v
}

/// Searches the model's root vectors for images of the simple root vectors
/// (parities and Cartan zero pattern must match), then runs [`align_with`].
pub fn find_alignment(src: &Algebra, tgt: &SuperLieAlgebra) -> Result<Alignment> {
    let nt = tgt.dim();
    let by_weight: HashMap<&Vec<i64>, Vec<usize>> = tgt.weights.iter().enumerate().fold(HashMap::new(), |mut m, (k, w)| {
        m.entry(w).or_default().push(k);
        m
    });
    let roots: Vec<(usize, usize)> = (0..nt)
        .filter(|&k| tgt.weights[k].iter().any(|&x| x != 0))
        .filter_map(|k| {
            let neg: Vec<i64> = tgt.weights[k].iter().map(|x| -x).collect();
            let q = by_weight.get(&neg)?;
            (q.len() == 1 && by_weight[&tgt.weights[k]].len() == 1).then_some((k, q[0]))
        })
        .filter(|&(p, q)| !is_zero_vec(&tgt.bracket(&unit(nt, p), &unit(nt, q))))
        .collect();
    let d = &src.datum;
    let r = d.rank();
    let gram = d.cartan_matrix();
    let is_weight = |w: &Vec<i64>| by_weight.contains_key(w);
    let mut chosen: Vec<(usize, usize)> = Vec::new();
    fn dfs(
        i: usize,
        r: usize,
        roots: &[(usize, usize)],
        chosen: &mut Vec<(usize, usize)>,
        ok: &dyn Fn(&[(usize, usize)], (usize, usize)) -> bool,
        finish: &mut dyn FnMut(&[(usize, usize)]) -> Option<Alignment>,
    ) -> Option<Alignment> {
        if i == r {
            return finish(chosen);
        }
        for &cand in roots {
            if ok(chosen, cand) {
                chosen.push(cand);
                if let Some(a) = dfs(i + 1, r, roots, chosen, ok, finish) {
                    return Some(a);
                }
                chosen.pop();
            }
        }
        None
    }
    let ok = |prev: &[(usize, usize)], cand: (usize, usize)| -> bool {
        let i = prev.len();
        if tgt.odd[cand.0] != d.simple[i].odd {
            return false;
        }
        let wc = &tgt.weights[cand.0];
        for (j, &(pj, _)) in prev.iter().enumerate() {
            let wj = &tgt.weights[pj];
            if wj == wc {
                return false;
            }
            let diff: Vec<i64> = wc.iter().zip(wj).map(|(a, b)| a - b).collect();
            if is_weight(&diff) {
                return false;
            }
            let sum: Vec<i64> = wc.iter().zip(wj).map(|(a, b)| a + b).collect();
            if is_weight(&sum) == gram[i][j].is_zero() && !(d.simple[i].odd && d.simple[j].odd) {
                return false;
            }
        }
        true
    };
    let mut finish = |c: &[(usize, usize)]| align_with(src, tgt, c).ok();
    dfs(0, r, &roots, &mut chosen, &ok, &mut finish)
        .ok_or_else(|| Error::ConsistencyFailure(format!("{}: no alignment with {}", src.spec, tgt.name)))
}
