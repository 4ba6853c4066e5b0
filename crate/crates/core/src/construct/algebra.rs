//! Finite-dimensional Lie superalgebras given by structure constants.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::exact::RadicalScalar;
use crate::linalg;

/// Sparse vector: sorted `(basis index, coefficient)` pairs, no zeros.
pub type Sparse = Vec<(usize, RadicalScalar)>;
/// Dense coordinate vector in the algebra basis.
pub type Vector = Vec<RadicalScalar>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum BasisLabel {
    /// Cartan basis element, indexed by the simple coroot it came from.
    Cartan(usize),
    /// Root vector, by simple-root coefficients.
    Root(Vec<i64>),
    Named(String),
}

impl std::fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BasisLabel::Cartan(i) => write!(f, "h{}", i + 1),
            BasisLabel::Root(c) => {
                let s: Vec<String> = c.iter().map(i64::to_string).collect();
                write!(f, "X[{}]", s.join(","))
            }
            BasisLabel::Named(n) => write!(f, "{n}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuperLieAlgebra {
    pub name: String,
    pub labels: Vec<BasisLabel>,
    pub odd: Vec<bool>,
    /// Weight of each basis vector (empty vectors when no weights are known).
    pub weights: Vec<Vec<i64>>,
    /// `upper[i][j - i] = [b_i, b_j]` for `i ≤ j`.
    upper: Vec<Vec<Sparse>>,
    /// Rows of the invariant form, sparse.
    form: Option<Vec<Sparse>>,
    roots: Option<HashSet<Vec<i64>>>,
}

pub(crate) fn push_sparse(acc: &mut Vector, c: &RadicalScalar, s: &Sparse) {
    for (k, x) in s {
        let t = c * x;
        acc[*k] = &acc[*k] + &t;
    }
}

pub fn to_sparse(v: &[RadicalScalar]) -> Sparse {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

pub fn is_zero_vec(v: &[RadicalScalar]) -> bool {
    v.iter().all(RadicalScalar::is_zero)
}

pub fn unit(n: usize, i: usize) -> Vector {
    let mut v = vec![RadicalScalar::zero(); n];
    v[i] = RadicalScalar::one();
    v
}

pub fn add_vec(a: &[RadicalScalar], b: &[RadicalScalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[RadicalScalar], b: &[RadicalScalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(c: &RadicalScalar, a: &[RadicalScalar]) -> Vector {
    a.iter().map(|x| if x.is_zero() { RadicalScalar::zero() } else { c * x }).collect()
}

fn sign(odd_a: bool, odd_b: bool) -> RadicalScalar {
    if odd_a && odd_b {
        RadicalScalar::from_int(-1)
    } else {
        RadicalScalar::one()
    }
}

impl SuperLieAlgebra {
    /// Tabulates `bracket(i, j)` for `i ≤ j`.
    pub fn from_brackets(
        name: impl Into<String>,
        labels: Vec<BasisLabel>,
        odd: Vec<bool>,
        weights: Vec<Vec<i64>>,
        mut bracket: impl FnMut(usize, usize) -> Sparse,
    ) -> Self {
        let n = labels.len();
        let upper = (0..n).map(|i| (i..n).map(|j| bracket(i, j)).collect()).collect();
        SuperLieAlgebra { name: name.into(), labels, odd, weights, upper, form: None, roots: None }
    }

    pub fn with_form(mut self, form: Vec<Sparse>) -> Self {
        self.form = Some(form);
        self
    }

    pub fn with_roots(mut self, roots: HashSet<Vec<i64>>) -> Self {
        self.roots = Some(roots);
        self
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn even_dim(&self) -> usize {
        self.odd.iter().filter(|o| !**o).count()
    }

    pub fn odd_dim(&self) -> usize {
        self.dim() - self.even_dim()
    }

    pub fn has_form(&self) -> bool {
        self.form.is_some()
    }

    pub fn index_of(&self, label: &BasisLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `[b_i, b_j]`, using super-antisymmetry below the diagonal.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Sparse {
        if i <= j {
            self.upper[i][j - i].clone()
        } else {
            let s = -&sign(self.odd[i], self.odd[j]);
            self.upper[j][i - j].iter().map(|(k, c)| (*k, &s * c)).collect()
        }
    }

    fn bracket_basis_into(&self, i: usize, j: usize, c: &RadicalScalar, acc: &mut Vector) {
        if i <= j {
            push_sparse(acc, c, &self.upper[i][j - i]);
        } else {
            let s = &(-&sign(self.odd[i], self.odd[j])) * c;
            push_sparse(acc, &s, &self.upper[j][i - j]);
        }
    }

    pub fn bracket(&self, u: &[RadicalScalar], v: &[RadicalScalar]) -> Vector {
        let n = self.dim();
        let mut acc = vec![RadicalScalar::zero(); n];
        for (i, a) in u.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in v.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                self.bracket_basis_into(i, j, &(a * b), &mut acc);
            }
        }
        acc
    }

    /// `[b_i, v]`.
    pub fn bracket_with(&self, i: usize, v: &[RadicalScalar]) -> Vector {
        let mut acc = vec![RadicalScalar::zero(); self.dim()];
        for (j, b) in v.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
            self.bracket_basis_into(i, j, b, &mut acc);
        }
        acc
    }

    /// Matrix of `ad(u)`: column `j` is `[u, b_j]`; returned row-major.
    pub fn ad_matrix(&self, u: &[RadicalScalar]) -> Vec<Vec<RadicalScalar>> {
        let n = self.dim();
        let mut m = vec![vec![RadicalScalar::zero(); n]; n];
        for j in 0..n {
            let col = self.bracket(u, &unit(n, j));
            for (i, c) in col.into_iter().enumerate() {
                m[i][j] = c;
            }
        }
        m
    }

    pub fn form_basis(&self, i: usize, j: usize) -> RadicalScalar {
        let Some(form) = &self.form else { return RadicalScalar::zero() };
        match form[i].binary_search_by_key(&j, |(k, _)| *k) {
            Ok(p) => form[i][p].1.clone(),
            Err(_) => RadicalScalar::zero(),
        }
    }

    pub fn form_rows(&self) -> Option<&[Sparse]> {
        self.form.as_deref()
    }

    pub fn form_vec(&self, u: &[RadicalScalar], v: &[RadicalScalar]) -> RadicalScalar {
        let Some(form) = &self.form else { return RadicalScalar::zero() };
        let mut s = RadicalScalar::zero();
        for (i, a) in u.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, c) in &form[i] {
                if !v[*j].is_zero() {
                    s = &s + &(&(a * c) * &v[*j]);
                }
            }
        }
        s
    }

    fn total_weight(&self, idx: &[usize]) -> Option<Vec<i64>> {
        let w0 = &self.weights[idx[0]];
        if w0.is_empty() {
            return None;
        }
        let mut w = w0.clone();
        for &k in &idx[1..] {
            for (a, b) in w.iter_mut().zip(&self.weights[k]) {
                *a += b;
            }
        }
        Some(w)
    }

    /// False when the weight sum of the indices is neither 0 nor a root,
    /// so every bracket monomial in them vanishes for weight reasons.
    fn weight_may_survive(&self, idx: &[usize]) -> bool {
        match (&self.roots, self.total_weight(idx)) {
            (Some(roots), Some(w)) => w.iter().all(|&c| c == 0) || roots.contains(&w),
            _ => true,
        }
    }

    /// `[b_i,b_i] = 0` for even `b_i`, and brackets respect weights.
    pub fn check_grading(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            if !self.odd[i] && !self.upper[i][0].is_empty() {
                return Err(Error::ConsistencyFailure(format!("[{0},{0}] != 0 for even {0}", self.labels[i])));
            }
            for j in i..n {
                for (k, _) in &self.upper[i][j - i] {
                    if self.odd[*k] != (self.odd[i] ^ self.odd[j]) {
                        return Err(Error::ConsistencyFailure(format!(
                            "parity of [{}, {}] has component {}",
                            self.labels[i], self.labels[j], self.labels[*k]
                        )));
                    }
                    if let Some(w) = self.total_weight(&[i, j]) {
                        if self.weights[*k] != w {
                            return Err(Error::ConsistencyFailure(format!(
                                "weight of [{}, {}] has component {}",
                                self.labels[i], self.labels[j], self.labels[*k]
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Super Jacobi `[a,[b,c]] = [[a,b],c] + (−1)^{p(a)p(b)}[b,[a,c]]` on
    /// every ordered basis triple; returns the number of triples evaluated.
    pub fn check_jacobi(&self) -> Result<usize> {
        let n = self.dim();
        let mut count = 0;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if !self.weight_may_survive(&[a, b, c]) {
                        continue;
                    }
                    count += 1;
                    let mut acc = vec![RadicalScalar::zero(); n];
                    for (k, x) in &self.bracket_basis(b, c) {
                        self.bracket_basis_into(a, *k, x, &mut acc);
                    }
                    let m1 = -RadicalScalar::one();
                    for (k, x) in &self.bracket_basis(a, b) {
                        self.bracket_basis_into(*k, c, &(&m1 * x), &mut acc);
                    }
                    let s = -&sign(self.odd[a], self.odd[b]);
                    for (k, x) in &self.bracket_basis(a, c) {
                        self.bracket_basis_into(b, *k, &(&s * x), &mut acc);
                    }
                    if !is_zero_vec(&acc) {
                        return Err(Error::ConsistencyFailure(format!(
                            "{}: Jacobi fails on ({}, {}, {})",
                            self.name, self.labels[a], self.labels[b], self.labels[c]
                        )));
                    }
                }
            }
        }
        Ok(count)
    }

    /// Supersymmetry, evenness, nondegeneracy and invariance
    /// `([a,b]|c) = (a|[b,c])` of the form.
    pub fn check_form(&self) -> Result<()> {
        let n = self.dim();
        let form = self.form.as_ref().ok_or_else(|| Error::ConsistencyFailure("no invariant form".into()))?;
        for (i, row) in form.iter().enumerate() {
            for (j, x) in row {
                if self.odd[i] != self.odd[*j] {
                    return Err(Error::ConsistencyFailure(format!("form pairs opposite parities at {i},{j}")));
                }
                let back = self.form_basis(*j, i);
                if back != &sign(self.odd[i], self.odd[*j]) * x {
                    return Err(Error::ConsistencyFailure(format!("form not supersymmetric at {i},{j}")));
                }
            }
        }
        let dense: Vec<Vec<RadicalScalar>> =
            (0..n).map(|i| (0..n).map(|j| self.form_basis(i, j)).collect()).collect();
        if linalg::rank(&dense)? != n {
            return Err(Error::ConsistencyFailure(format!("{}: form is degenerate", self.name)));
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.bracket_basis(a, b);
                for c in 0..n {
                    if !self.weight_may_survive(&[a, b, c]) {
                        continue;
                    }
                    let mut lhs = RadicalScalar::zero();
                    for (k, x) in &ab {
                        lhs = &lhs + &(x * &self.form_basis(*k, c));
                    }
                    let mut rhs = RadicalScalar::zero();
                    for (k, x) in &self.bracket_basis(b, c) {
                        rhs = &rhs + &(x * &self.form_basis(a, *k));
                    }
                    if lhs != rhs {
                        return Err(Error::ConsistencyFailure(format!(
                            "{}: form not invariant on ({}, {}, {})",
                            self.name, self.labels[a], self.labels[b], self.labels[c]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Dual basis `b^i` with `(b^i|b_j) = δ_ij`, as dense vectors.
    pub fn dual_basis(&self) -> Result<Vec<Vector>> {
        let n = self.dim();
        // G[i][j] = (b_i|b_j); b^i = Σ_k D[i][k] b_k with Σ_k D[i][k] G[k][j] = δ_ij
        let g: Vec<Vec<RadicalScalar>> = (0..n).map(|i| (0..n).map(|j| self.form_basis(i, j)).collect()).collect();
        linalg::inverse(&g)
    }

    /// Casimir operator `v ↦ Σ_i [b_i, [b^i, v]]`, which acts on the
    /// adjoint representation of a simple superalgebra as `2h^∨`.
    pub fn casimir_apply(&self, dual: &[Vector], v: &[RadicalScalar]) -> Vector {
        let n = self.dim();
        let mut acc = vec![RadicalScalar::zero(); n];
        for (i, bi) in dual.iter().enumerate() {
            let inner = self.bracket(bi, v);
            if is_zero_vec(&inner) {
                continue;
            }
            let outer = self.bracket_with(i, &inner);
            acc = add_vec(&acc, &outer);
        }
        acc
    }

    /// The scalar by which the Casimir acts, if it acts by a scalar.
    pub fn casimir_scalar(&self) -> Result<RadicalScalar> {
        let n = self.dim();
        let dual = self.dual_basis()?;
        let mut scalar: Option<RadicalScalar> = None;
        for j in 0..n {
            let img = self.casimir_apply(&dual, &unit(n, j));
            let c = img[j].clone();
            if img != scale_vec(&c, &unit(n, j)) {
                return Err(Error::ConsistencyFailure(format!("{}: Casimir not diagonal at {}", self.name, self.labels[j])));
            }
            match &scalar {
                None => scalar = Some(c),
                Some(s) if *s != c => {
                    return Err(Error::ConsistencyFailure(format!(
                        "{}: Casimir eigenvalue {c} at {} differs from {s}",
                        self.name, self.labels[j]
                    )))
                }
                _ => {}
            }
        }
        scalar.ok_or_else(|| Error::ConsistencyFailure("empty algebra".into()))
    }

    /// Same algebra in the basis `Y_k = s_k X_k`.
    pub fn rescaled(&self, s: &[RadicalScalar]) -> Result<SuperLieAlgebra> {
        let n = self.dim();
        let inv: Vec<RadicalScalar> = s.iter().map(RadicalScalar::invert).collect::<Result<_>>()?;
        let mut upper = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n - i);
            for j in i..n {
                let f = &s[i] * &s[j];
                row.push(self.upper[i][j - i].iter().map(|(k, c)| (*k, &(&f * c) * &inv[*k])).collect());
            }
            upper.push(row);
        }
        let form = self.form.as_ref().map(|rows| {
            rows.iter()
                .enumerate()
                .map(|(i, row)| row.iter().map(|(j, c)| (*j, &(&s[i] * &s[*j]) * c)).collect())
                .collect()
        });
        Ok(SuperLieAlgebra {
            name: self.name.clone(),
            labels: self.labels.clone(),
            odd: self.odd.clone(),
            weights: self.weights.clone(),
            upper,
            form,
            roots: self.roots.clone(),
        })
    }

    /// JSON dump of basis, brackets and form.
    pub fn to_json(&self) -> serde_json::Value {
        use serde_json::{json, Map, Value};
        let term = |k: &usize, c: &RadicalScalar| json!({"index": k, "coeff": c});
        let basis: Vec<Value> = self
            .labels
            .iter()
            .zip(&self.odd)
            .map(|(l, o)| json!({"label": l.to_string(), "parity": if *o { 1 } else { 0 }}))
            .collect();
        let mut brackets = Vec::new();
        for (i, row) in self.upper.iter().enumerate() {
            for (d, v) in row.iter().enumerate() {
                if !v.is_empty() {
                    let terms: Vec<Value> = v.iter().map(|(k, c)| term(k, c)).collect();
                    brackets.push(json!({"i": i, "j": i + d, "value": terms}));
                }
            }
        }
        let mut out = Map::new();
        out.insert("name".into(), json!(self.name));
        out.insert("basis".into(), Value::Array(basis));
        out.insert("brackets".into(), Value::Array(brackets));
        if let Some(form) = &self.form {
            let mut entries = Vec::new();
            for (i, row) in form.iter().enumerate() {
                for (j, c) in row {
                    entries.push(json!({"i": i, "j": j, "value": c}));
                }
            }
            out.insert("form".into(), Value::Array(entries));
        }
        Value::Object(out)
    }
}
