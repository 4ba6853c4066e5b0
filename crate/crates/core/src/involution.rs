//! The almost compact involution, the sl₂-triple and the minimal grading.

use std::collections::BTreeMap;

use crate::construct::algebra::{add_vec, is_zero_vec, scale_vec, sub_vec, to_sparse, unit, Sparse, Vector};
use crate::construct::goodchoice::{omega_images, verify_good_choice};
use crate::construct::Algebra;
use crate::error::{Error, Result};
use crate::exact::{RadicalScalar, Rational};
use crate::catalog::RootDatum;
use crate::linalg::{self, Subspace};

/// `v ↦ Σ_j conj(v_j)·cols[j]`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConjugateLinearMap {
    pub cols: Vec<Sparse>,
}

impl ConjugateLinearMap {
    pub fn apply(&self, v: &[RadicalScalar]) -> Vector {
        let n = self.cols.len();
        let mut out = vec![RadicalScalar::zero(); n];
        for (j, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let cj = c.conj();
            for (k, x) in &self.cols[j] {
                out[*k] = &out[*k] + &(&cj * x);
            }
        }
        out
    }

    pub fn apply_basis(&self, j: usize) -> Vector {
        self.apply(&unit(self.cols.len(), j))
    }

    /// `φ² = id`.
    pub fn check_involution(&self) -> Result<()> {
        let n = self.cols.len();
        for j in 0..n {
            if self.apply(&self.apply_basis(j)) != unit(n, j) {
                return Err(Error::NotInvolution(format!("φ² differs from id on basis vector {j}")));
            }
        }
        Ok(())
    }

    /// `φ[a,b] = [φa, φb]` on all basis pairs.
    pub fn check_automorphism(&self, alg: &crate::SuperLieAlgebra) -> Result<()> {
        let n = alg.dim();
        let images: Vec<Vector> = (0..n).map(|j| self.apply_basis(j)).collect();
        for a in 0..n {
            for b in a..n {
                let br = alg.bracket_basis(a, b);
                let mut dense = vec![RadicalScalar::zero(); n];
                for (k, c) in &br {
                    dense[*k] = c.clone();
                }
                if self.apply(&dense) != alg.bracket(&images[a], &images[b]) {
                    return Err(Error::ConsistencyFailure(format!(
                        "φ does not preserve [{}, {}]",
                        alg.labels[a], alg.labels[b]
                    )));
                }
            }
        }
        Ok(())
    }
}

/// `ω_Λ` in the good-choice basis, after checking (ox) for this `Λ`.
pub fn omega_involution(alg: &Algebra, lambda: &[RadicalScalar]) -> Result<ConjugateLinearMap> {
    verify_good_choice(alg, lambda)?;
    let map = ConjugateLinearMap { cols: omega_images(alg, lambda)? };
    map.check_involution()?;
    Ok(map)
}

#[derive(Clone, Debug)]
pub struct Sl2Triple {
    pub e: Vector,
    pub x: Vector,
    pub f: Vector,
}

/// Eigenspaces of `ad x`.
#[derive(Clone, Debug)]
pub struct GradedDecomposition {
    /// Eigenvalues `−1, −1/2, 0, 1/2, 1` with bases.
    pub spaces: Vec<(Rational, Vec<Vector>)>,
}

impl GradedDecomposition {
    pub fn space(&self, j: &Rational) -> &[Vector] {
        self.spaces.iter().find(|(k, _)| k == j).map(|(_, b)| b.as_slice()).unwrap_or(&[])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum ComponentKind {
    Center,
    Simple,
}

/// One ideal of `𝔤^♮`.
#[derive(Clone, Debug)]
pub struct Component {
    pub kind: ComponentKind,
    /// Positive roots, by simple-root coefficients.
    pub positive_roots: Vec<Vec<i64>>,
    /// Highest root of the component (simple components only).
    pub theta: Option<Vec<i64>>,
    pub rank: usize,
    /// Cartan label such as `A3`, `B3`, `G2`; `C` for the center.
    pub cartan_type: String,
    /// `(θ_i|θ_i)`, or 2 for the center.
    pub u: Rational,
    /// `(θ_i|θ_i)/2 + (ρ_i|θ_i)`, or 0 for the center.
    pub hbar: Rational,
    pub basis: Vec<Vector>,
}

impl Component {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Everything the minimal-grading analysis produces.
#[derive(Clone, Debug)]
pub struct MinimalData {
    pub phi: ConjugateLinearMap,
    pub triple: Sl2Triple,
    pub grading: GradedDecomposition,
    /// Basis of `𝔤^♮`: Cartan part first, then root vectors.
    pub natural: Vec<Vector>,
    pub components: Vec<Component>,
}

fn half() -> RadicalScalar {
    RadicalScalar::from_rational(Rational::new(1, 2))
}

/// The triple `x = (i/2)(X_θ − X_{−θ})`, `e, f = ½(X_θ + X_{−θ} ± i h_θ)`.
pub fn sl2_triple(alg: &Algebra) -> Result<Sl2Triple> {
    let n = alg.alg.dim();
    let t = unit(n, alg.theta_index());
    let mt = unit(n, alg.neg_theta_index());
    let h = alg.alg.bracket(&t, &mt);
    let i = RadicalScalar::i();
    let s = add_vec(&t, &mt);
    let ih = scale_vec(&i, &h);
    let triple = Sl2Triple {
        x: scale_vec(&(&i * &half()), &sub_vec(&t, &mt)),
        e: scale_vec(&half(), &add_vec(&s, &ih)),
        f: scale_vec(&half(), &sub_vec(&s, &ih)),
    };
    let g = &alg.alg;
    let fail = |what: &str| Err(Error::ConsistencyFailure(format!("{}: sl2 relation {what} fails", alg.spec)));
    if g.bracket(&triple.x, &triple.e) != triple.e {
        return fail("[x,e]=e");
    }
    if g.bracket(&triple.x, &triple.f) != scale_vec(&RadicalScalar::from_int(-1), &triple.f) {
        return fail("[x,f]=-f");
    }
    // with h_θ = [X_θ, X_{−θ}] these formulas give [e,f] = 2x
    if g.bracket(&triple.e, &triple.f) != scale_vec(&RadicalScalar::from_int(2), &triple.x) {
        return fail("[e,f]=2x");
    }
    if g.form_vec(&triple.x, &triple.x) != half() {
        return fail("(x|x)=1/2");
    }
    Ok(triple)
}

fn ad_matrix_minus(alg: &Algebra, x: &[RadicalScalar], j: &Rational) -> Vec<Vec<RadicalScalar>> {
    let mut m = alg.alg.ad_matrix(x);
    let js = RadicalScalar::from_rational(j.clone());
    for (k, row) in m.iter_mut().enumerate() {
        row[k] = &row[k] - &js;
    }
    m
}

/// Eigenspaces of `ad x` by exact nullspaces; checks `𝔤_{−1} = ℂf`,
/// parities `2j mod 2` and that the spaces exhaust `𝔤`.
pub fn grading(alg: &Algebra, triple: &Sl2Triple) -> Result<GradedDecomposition> {
    let n = alg.alg.dim();
    let mut spaces = Vec::new();
    let mut total = 0;
    for (a, b) in [(-1, 1), (-1, 2), (0, 1), (1, 2), (1, 1)] {
        let j = Rational::new(a, b);
        let m = ad_matrix_minus(alg, &triple.x, &j);
        let basis = linalg::nullspace(&m, n)?;
        let odd = b == 2;
        for v in &basis {
            if v.iter().enumerate().any(|(k, c)| !c.is_zero() && alg.alg.odd[k] != odd) {
                return Err(Error::ConsistencyFailure(format!("{}: 𝔤_{j} is not of parity {}", alg.spec, odd as u8)));
            }
        }
        total += basis.len();
        spaces.push((j, basis));
    }
    if total != n {
        return Err(Error::ConsistencyFailure(format!("{}: ad x eigenspaces have total dimension {total} != {n}", alg.spec)));
    }
    let g = GradedDecomposition { spaces };
    for (j, want) in [(Rational::int(-1), &triple.f), (Rational::int(1), &triple.e)] {
        let sp = g.space(&j);
        if sp.len() != 1 || !Subspace::new(sp.to_vec())?.contains(want) {
            return Err(Error::ConsistencyFailure(format!("{}: 𝔤_{j} is not spanned by the triple", alg.spec)));
        }
    }
    Ok(g)
}

/// Basis of `𝔤^♮`: the part of the Cartan killed by `θ`, and root vectors of
/// even roots other than `±θ`. Checked against the centralizer of `e, f`.
pub fn natural_basis(alg: &Algebra, triple: &Sl2Triple) -> Result<Vec<Vector>> {
    let n = alg.alg.dim();
    let c = alg.cartan_dim();
    let theta_on_cartan: Vec<Vec<Rational>> = vec![alg
        .chevalley
        .cartan_pivots
        .iter()
        .map(|&p| alg.datum.form_coeffs(&alg.datum.theta.coeffs, &unit_i64(alg.datum.rank(), p)))
        .collect()];
    let mut basis: Vec<Vector> = linalg::nullspace(&theta_on_cartan, c)?
        .into_iter()
        .map(|h| {
            let mut v = vec![RadicalScalar::zero(); n];
            for (p, x) in h.into_iter().enumerate() {
                v[p] = RadicalScalar::from_rational(x);
            }
            v
        })
        .collect();
    for root in natural_roots(alg)? {
        basis.push(unit(n, alg.root_index(&root)?));
        let neg: Vec<i64> = root.iter().map(|x| -x).collect();
        basis.push(unit(n, alg.root_index(&neg)?));
    }
    // compare with the centralizer of e and f
    let ae = alg.alg.ad_matrix(&triple.e);
    let af = alg.alg.ad_matrix(&triple.f);
    let stacked: Vec<Vec<RadicalScalar>> = ae.into_iter().chain(af).collect();
    let cent = linalg::nullspace(&stacked, n)?;
    let cs = Subspace::new(cent)?;
    if cs.dim() != basis.len() || !basis.iter().all(|v| cs.contains(v)) {
        return Err(Error::ConsistencyFailure(format!(
            "{}: centralizer of the triple has dimension {} but 𝔤^♮ basis has {}",
            alg.spec,
            cs.dim(),
            basis.len()
        )));
    }
    Ok(basis)
}

fn unit_i64(r: usize, i: usize) -> Vec<i64> {
    let mut e = vec![0; r];
    e[i] = 1;
    e
}

/// Positive even roots other than `θ`; all must be orthogonal to `θ`.
pub fn natural_roots(alg: &Algebra) -> Result<Vec<Vec<i64>>> {
    natural_roots_of(&alg.datum)
}

pub fn natural_roots_of(d: &RootDatum) -> Result<Vec<Vec<i64>>> {
    let mut out = Vec::new();
    for root in d.positive.iter().filter(|r| !r.odd && r.coeffs != d.theta.coeffs) {
        if !d.form(&root.coords, &d.theta.coords).is_zero() {
            return Err(Error::ConsistencyFailure(format!("{}: even root {:?} not orthogonal to θ", d.spec, root.coeffs)));
        }
        out.push(root.coeffs.clone());
    }
    Ok(out)
}

fn cartan_type(rank: usize, lengths: &[Rational]) -> String {
    let p = lengths.len();
    let mut distinct: Vec<Rational> = lengths.iter().map(Rational::abs).collect();
    distinct.sort();
    distinct.dedup();
    let long = distinct.last().cloned().unwrap_or_default();
    let nlong = lengths.iter().filter(|l| l.abs() == long).count();
    let r = rank;
    match distinct.len() {
        1 if p == r * (r + 1) / 2 => format!("A{r}"),
        1 if r >= 4 && p == r * (r - 1) => format!("D{r}"),
        2 if r == 2 && p == 6 => "G2".into(),
        2 if r == 2 && p == 4 => "B2".into(),
        2 if p == r * r && nlong == r * (r - 1) => format!("B{r}"),
        2 if p == r * r && nlong == r => format!("C{r}"),
        _ => format!("?{r}/{p}"),
    }
}

/// A simple ideal of `𝔤^♮` seen through its roots.
#[derive(Clone, Debug, PartialEq)]
pub struct RootComponent {
    pub positive_roots: Vec<Vec<i64>>,
    pub theta: Vec<i64>,
    pub rank: usize,
    pub cartan_type: String,
    pub u: Rational,
    pub hbar: Rational,
}

/// Simple ideals of `𝔤^♮` from the root datum, ordered by (dimension, rank,
/// smallest positive root), and the dimension of the center.
pub fn root_components(d: &RootDatum) -> Result<(Vec<RootComponent>, usize)> {
    let roots = natural_roots_of(d)?;
    // union-find on non-orthogonality
    let mut parent: Vec<usize> = (0..roots.len()).collect();
    fn find(p: &mut Vec<usize>, i: usize) -> usize {
        if p[i] != i {
            let r = find(p, p[i]);
            p[i] = r;
        }
        p[i]
    }
    for a in 0..roots.len() {
        for b in a + 1..roots.len() {
            if !d.form_coeffs(&roots[a], &roots[b]).is_zero() {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<Vec<i64>>> = BTreeMap::new();
    for (i, root) in roots.iter().enumerate() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(root.clone());
    }
    let mut comps = Vec::new();
    let mut rank_total = 0;
    for (_, mut group) in groups {
        group.sort_by(|a, b| (a.iter().sum::<i64>(), a).cmp(&(b.iter().sum::<i64>(), b)));
        let theta = group.last().unwrap().clone();
        let coords: Vec<Vec<Rational>> = group.iter().map(|r| d.coords_of(r)).collect();
        let rank = linalg::rank(&coords)?;
        rank_total += rank;
        let lengths: Vec<Rational> = coords.iter().map(|v| d.form(v, v)).collect();
        let tc = d.coords_of(&theta);
        let u = d.form(&tc, &tc);
        let mut rho = vec![Rational::zero(); tc.len()];
        for v in &coords {
            for (o, x) in rho.iter_mut().zip(v) {
                *o += &(x * &Rational::new(1, 2));
            }
        }
        let hbar = &(&u * &Rational::new(1, 2)) + &d.form(&rho, &tc);
        comps.push(RootComponent { cartan_type: cartan_type(rank, &lengths), positive_roots: group, theta, rank, u, hbar });
    }
    comps.sort_by(|a, b| {
        let da = 2 * a.positive_roots.len() + a.rank;
        let db = 2 * b.positive_roots.len() + b.rank;
        (da, a.rank, &a.positive_roots[0]).cmp(&(db, b.rank, &b.positive_roots[0]))
    });
    let center = (d.cartan_dim - 1).checked_sub(rank_total).ok_or_else(|| {
        Error::ConsistencyFailure(format!("{}: components have too large a rank", d.spec))
    })?;
    Ok((comps, center))
}

/// Splits `𝔤^♮` into the center and simple ideals, ordered center first,
/// then by (dimension, rank, smallest positive root).
pub fn component_split(alg: &Algebra) -> Result<Vec<Component>> {
    let d = &alg.datum;
    let n = alg.alg.dim();
    let c = alg.cartan_dim();
    let roots = natural_roots(alg)?;
    let (rcomps, center_dim) = root_components(d)?;
    let mut comps = Vec::new();
    for rc in rcomps {
        // Cartan part spanned by the coroots of the component
        let mut cartan: Vec<Vector> = Vec::new();
        for r in &rc.positive_roots {
            let mut trial = cartan.clone();
            trial.push(alg.coroot_vector(r));
            if linalg::rank(&trial)? == trial.len() {
                cartan = trial;
            }
        }
        let mut basis = cartan;
        for r in &rc.positive_roots {
            basis.push(unit(n, alg.root_index(r)?));
            let neg: Vec<i64> = r.iter().map(|x| -x).collect();
            basis.push(unit(n, alg.root_index(&neg)?));
        }
        comps.push(Component {
            kind: ComponentKind::Simple,
            cartan_type: rc.cartan_type,
            positive_roots: rc.positive_roots,
            theta: Some(rc.theta),
            rank: rc.rank,
            u: rc.u,
            hbar: rc.hbar,
            basis,
        });
    }
    // center: Cartan elements killed by θ and every natural root
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for w in std::iter::once(&d.theta.coeffs).chain(roots.iter()) {
        rows.push(alg.chevalley.cartan_pivots.iter().map(|&p| d.form_coeffs(w, &unit_i64(d.rank(), p))).collect());
    }
    let center = linalg::nullspace(&rows, c)?;
    if center.len() != center_dim {
        return Err(Error::ConsistencyFailure(format!("{}: Cartan of 𝔤^♮ does not split", alg.spec)));
    }
    if !center.is_empty() {
        let basis: Vec<Vector> = center
            .into_iter()
            .map(|h| {
                let mut v = vec![RadicalScalar::zero(); n];
                for (p, x) in h.into_iter().enumerate() {
                    v[p] = RadicalScalar::from_rational(x);
                }
                v
            })
            .collect();
        let rank = basis.len();
        comps.insert(
            0,
            Component {
                kind: ComponentKind::Center,
                positive_roots: Vec::new(),
                theta: None,
                rank,
                cartan_type: "C".into(),
                u: Rational::int(2),
                hbar: Rational::zero(),
                basis,
            },
        );
    }
    Ok(comps)
}

/// Half the Casimir eigenvalue of a simple component on itself, from
/// structure constants and the restricted form.
pub fn component_casimir_half(alg: &Algebra, comp: &Component) -> Result<Rational> {
    let g = &alg.alg;
    let b = &comp.basis;
    let gram: Vec<Vec<RadicalScalar>> = b.iter().map(|u| b.iter().map(|v| g.form_vec(u, v)).collect()).collect();
    let inv = linalg::inverse(&gram)?;
    let dual: Vec<Vector> = inv
        .iter()
        .map(|row| {
            let mut acc = vec![RadicalScalar::zero(); g.dim()];
            for (c, v) in row.iter().zip(b) {
                if !c.is_zero() {
                    acc = add_vec(&acc, &scale_vec(c, v));
                }
            }
            acc
        })
        .collect();
    let mut eig: Option<RadicalScalar> = None;
    for v in b {
        let mut acc = vec![RadicalScalar::zero(); g.dim()];
        for (bi, di) in b.iter().zip(&dual) {
            acc = add_vec(&acc, &g.bracket(bi, &g.bracket(di, v)));
        }
        let k = v.iter().position(|c| !c.is_zero()).unwrap();
        let lam = acc[k].checked_div(&v[k])?;
        if acc != scale_vec(&lam, v) {
            return Err(Error::ConsistencyFailure(format!("{}: component Casimir not scalar", alg.spec)));
        }
        if eig.as_ref().is_some_and(|e| *e != lam) {
            return Err(Error::ConsistencyFailure(format!("{}: component Casimir has two eigenvalues", alg.spec)));
        }
        eig = Some(lam);
    }
    let e = eig.and_then(|e| e.as_rational()).ok_or_else(|| Error::ConsistencyFailure("irrational Casimir".into()))?;
    Ok(&e * &Rational::new(1, 2))
}

/// Real basis of `{v ∈ span(vectors) : φ(v) = v}`, assuming `φ` preserves the span.
pub fn real_fixed_basis(phi: &ConjugateLinearMap, vectors: &[Vector]) -> Result<Vec<Vector>> {
    let i = RadicalScalar::i();
    let mut out: Vec<Vector> = Vec::new();
    let mut real_rows: Vec<Vec<RadicalScalar>> = Vec::new();
    for v in vectors {
        let pv = phi.apply(v);
        let iv = scale_vec(&i, v);
        for cand in [add_vec(v, &pv), add_vec(&iv, &phi.apply(&iv))] {
            if is_zero_vec(&cand) {
                continue;
            }
            let row: Vec<RadicalScalar> =
                cand.iter().map(|c| c.real_part()).chain(cand.iter().map(|c| c.imag_part())).collect();
            let mut trial = real_rows.clone();
            trial.push(row.clone());
            if linalg::rank(&trial)? == trial.len() {
                real_rows = trial;
                out.push(cand);
            }
        }
    }
    Ok(out)
}

/// Killing form of `𝔤^♮` on the real fixed points of its semisimple part
/// must be negative definite; checked by the signs of the pivots of a
/// symmetric elimination (equivalently, leading principal minors).
pub fn check_compactness(alg: &Algebra, phi: &ConjugateLinearMap, natural: &[Vector], comps: &[Component]) -> Result<usize> {
    let g = &alg.alg;
    let nat = Subspace::new(natural.to_vec())?;
    let ss: Vec<Vector> = comps.iter().filter(|c| c.kind == ComponentKind::Simple).flat_map(|c| c.basis.clone()).collect();
    let fixed = real_fixed_basis(phi, &ss)?;
    if fixed.len() != ss.len() {
        return Err(Error::CompactnessFailure(format!(
            "fixed real space has dimension {} instead of {}",
            fixed.len(),
            ss.len()
        )));
    }
    // ad on 𝔤^♮ in natural coordinates
    let ad: Vec<Vec<Vec<RadicalScalar>>> = fixed
        .iter()
        .map(|u| {
            natural
                .iter()
                .map(|b| nat.coords(&g.bracket(u, b)).ok_or_else(|| Error::ConsistencyFailure("𝔤^♮ not closed".into())))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let k = fixed.len();
    let dn = natural.len();
    let mut gram = vec![vec![RadicalScalar::zero(); k]; k];
    for a in 0..k {
        for b in a..k {
            // tr(ad a ∘ ad b): ad[a][col] is the column of basis vector col
            let mut t = RadicalScalar::zero();
            for col in 0..dn {
                for (mid, x) in ad[b][col].iter().enumerate() {
                    if !x.is_zero() && !ad[a][mid][col].is_zero() {
                        t = &t + &(x * &ad[a][mid][col]);
                    }
                }
            }
            if !t.is_real() {
                return Err(Error::CompactnessFailure(format!("Killing form not real on fixed vectors {a},{b}")));
            }
            gram[a][b] = t.clone();
            gram[b][a] = t;
        }
    }
    if let Some(p) = first_nonnegative_pivot(gram)? {
        return Err(Error::CompactnessFailure(format!(
            "{}: leading minor {} has wrong sign; witness {:?}",
            alg.spec,
            p + 1,
            to_sparse(&fixed[p])
        )));
    }
    Ok(k)
}

/// Symmetric elimination without pivoting on a real symmetric matrix; the
/// first pivot that is not negative, if any. `None` means negative definite.
pub fn first_nonnegative_pivot(mut gram: Vec<Vec<RadicalScalar>>) -> Result<Option<usize>> {
    let k = gram.len();
    for p in 0..k {
        let piv = gram[p][p].clone();
        if piv.real_sign()? >= 0 {
            return Ok(Some(p));
        }
        let inv = piv.invert()?;
        for r in p + 1..k {
            if gram[r][p].is_zero() {
                continue;
            }
            let f = &gram[r][p] * &inv;
            for c in p..k {
                let d = &f * &gram[p][c];
                gram[r][c] = &gram[r][c] - &d;
            }
        }
    }
    Ok(None)
}

/// Builds `φ = ω_{Λ₀}`, the triple, the grading and `𝔤^♮`, and verifies
/// that `φ` fixes the triple, preserves the grading and is compact on `𝔤^♮`.
pub fn almost_compact(alg: &Algebra) -> Result<MinimalData> {
    let phi = omega_involution(alg, &alg.lambda0())?;
    let triple = sl2_triple(alg)?;
    for (name, v) in [("e", &triple.e), ("x", &triple.x), ("f", &triple.f)] {
        if phi.apply(v) != *v {
            return Err(Error::ConsistencyFailure(format!("{}: φ does not fix {name}", alg.spec)));
        }
    }
    let grading = grading(alg, &triple)?;
    for (j, basis) in &grading.spaces {
        let js = RadicalScalar::from_rational(j.clone());
        for v in basis {
            let pv = phi.apply(v);
            if alg.alg.bracket(&triple.x, &pv) != scale_vec(&js, &pv) {
                return Err(Error::ConsistencyFailure(format!("{}: φ does not preserve 𝔤_{j}", alg.spec)));
            }
        }
    }
    let natural = natural_basis(alg, &triple)?;
    let g0 = Subspace::new(grading.space(&Rational::zero()).to_vec())?;
    if g0.dim() != natural.len() + 1 || !natural.iter().all(|v| g0.contains(v)) || !g0.contains(&triple.x) {
        return Err(Error::ConsistencyFailure(format!("{}: 𝔤_0 != ℂx ⊕ 𝔤^♮", alg.spec)));
    }
    for v in &natural {
        if !alg.alg.form_vec(v, &triple.x).is_zero() {
            return Err(Error::ConsistencyFailure(format!("{}: 𝔤^♮ not orthogonal to x", alg.spec)));
        }
    }
    let components = component_split(alg)?;
    check_compactness(alg, &phi, &natural, &components)?;
    Ok(MinimalData { phi, triple, grading, natural, components })
}

/// `conj((φa|φb)) = (a|b)` on all basis pairs.
pub fn check_form_compatibility(alg: &Algebra, phi: &ConjugateLinearMap) -> Result<()> {
    let n = alg.alg.dim();
    let images: Vec<Vector> = (0..n).map(|j| phi.apply_basis(j)).collect();
    for a in 0..n {
        for b in 0..n {
            if alg.alg.form_vec(&images[a], &images[b]).conj() != alg.alg.form_basis(a, b) {
                return Err(Error::ConsistencyFailure(format!("{}: φ not compatible with the form at {a},{b}", alg.spec)));
            }
        }
    }
    Ok(())
}

/// The roots of the degree-zero part of the grading that puts odd simple
/// root vectors in degrees ±1; must be exactly the roots of `𝔤^♮`.
pub fn check_q0_roots(alg: &Algebra) -> Result<()> {
    let d = &alg.datum;
    let q0: Vec<Vec<i64>> = d
        .positive
        .iter()
        .filter(|r| r.coeffs.iter().zip(&d.simple).filter(|(_, s)| s.odd).map(|(c, _)| c).sum::<i64>() == 0)
        .map(|r| r.coeffs.clone())
        .collect();
    if q0 != natural_roots(alg)? {
        return Err(Error::ConsistencyFailure(format!("{}: roots of 𝔮_0 differ from those of 𝔤^♮", alg.spec)));
    }
    Ok(())
}

/// Dimension of the space of linear maps on `𝔤_{−1/2}` commuting with `𝔤_0`.
/// It is 1 when `𝔤_{−1/2}` is irreducible, so any involution fixing `e,x,f` and
/// agreeing with `φ` on `𝔤_0` equals `±φ` on `𝔤_{−1/2}`.
pub fn commutant_dimension(alg: &Algebra, data: &MinimalData) -> Result<usize> {
    let half = crate::halfform::u_vectors(alg)?;
    let vs: Vec<Vector> = half.iter().map(|(_, u)| u.clone()).collect();
    let sub = Subspace::new(vs.clone())?;
    let d = vs.len();
    // weights of the u_α under the Cartan of 𝔤^♮ group the unknowns
    let cart: Vec<&Vector> = data.natural.iter().filter(|v| (0..alg.cartan_dim()).any(|k| !v[k].is_zero())).collect();
    let weight_of = |u: &Vector| -> Result<Vec<RadicalScalar>> {
        cart.iter()
            .map(|h| {
                let img = alg.alg.bracket(h, u);
                let k = u.iter().position(|c| !c.is_zero()).unwrap();
                img[k].checked_div(&u[k])
            })
            .collect()
    };
    let weights: Vec<Vec<RadicalScalar>> = vs.iter().map(weight_of).collect::<Result<_>>()?;
    let unknowns: Vec<(usize, usize)> =
        (0..d).flat_map(|a| (0..d).map(move |b| (a, b))).filter(|(a, b)| weights[*a] == weights[*b]).collect();
    let col_of: BTreeMap<(usize, usize), usize> = unknowns.iter().enumerate().map(|(k, p)| (*p, k)).collect();
    let mut rows: Vec<Vec<RadicalScalar>> = Vec::new();
    for g in data.natural.iter() {
        // ρ(g) on the u basis: column b = coords of [g, u_b]
        let rho: Vec<Vec<RadicalScalar>> = vs
            .iter()
            .map(|u| sub.coords(&alg.alg.bracket(g, u)).ok_or_else(|| Error::ConsistencyFailure("𝔤_{−1/2} not 𝔤_0-stable".into())))
            .collect::<Result<_>>()?;
        // (Tρ − ρT)[a][b] = Σ_c T[a][c] ρ[c][b] − ρ[a][c] T[c][b], with ρ[c][b] = rho[b][c]
        for a in 0..d {
            for b in 0..d {
                let mut row = vec![RadicalScalar::zero(); unknowns.len()];
                for c in 0..d {
                    if let Some(&k) = col_of.get(&(a, c)) {
                        row[k] = &row[k] + &rho[b][c];
                    }
                    if let Some(&k) = col_of.get(&(c, b)) {
                        row[k] = &row[k] - &rho[c][a];
                    }
                }
                if !is_zero_vec(&row) {
                    rows.push(row);
                }
            }
        }
    }
    Ok(linalg::nullspace(&rows, unknowns.len())?.len())
}

/// Degree of a root in the grading `𝔤 = 𝔤_{−1} ⊕ 𝔤_0 ⊕ 𝔤_1` of a type I
/// algebra: coefficient of the first simple root minus that of the last.
pub fn type_one_degree(alg: &Algebra, coeffs: &[i64]) -> Result<i64> {
    if !alg.spec.is_type_one() {
        return Err(Error::NotTypeI(alg.spec.to_string()));
    }
    Ok(coeffs[0] - coeffs[coeffs.len() - 1])
}

/// `δ_λ`: identity on `𝔤_0̄`, `λ` on `𝔤_1̄^+`, `λ^{−1}` on `𝔤_1̄^−`, as a diagonal.
pub fn delta_automorphism(alg: &Algebra, lambda: &RadicalScalar) -> Result<Vec<RadicalScalar>> {
    if lambda.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let inv = lambda.invert()?;
    let mut diag = Vec::with_capacity(alg.alg.dim());
    for k in 0..alg.alg.dim() {
        let w = alg.weight(k);
        let deg = type_one_degree(alg, w)?;
        let ok = if alg.alg.odd[k] { deg.abs() == 1 } else { deg == 0 };
        if !ok {
            return Err(Error::NotTypeI(format!("{}: degree {deg} at {}", alg.spec, alg.alg.labels[k])));
        }
        diag.push(match deg {
            1 => lambda.clone(),
            -1 => inv.clone(),
            _ => RadicalScalar::one(),
        });
    }
    Ok(diag)
}

/// A diagonal map preserves every basis bracket.
pub fn check_diagonal_automorphism(alg: &crate::SuperLieAlgebra, diag: &[RadicalScalar]) -> Result<()> {
    let n = alg.dim();
    for a in 0..n {
        for b in a..n {
            let f = &diag[a] * &diag[b];
            for (k, _) in alg.bracket_basis(a, b) {
                if diag[k] != f {
                    return Err(Error::ConsistencyFailure(format!(
                        "diagonal map does not preserve [{}, {}]",
                        alg.labels[a], alg.labels[b]
                    )));
                }
            }
        }
    }
    Ok(())
}
