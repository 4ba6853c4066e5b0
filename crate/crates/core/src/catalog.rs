//! Root data for the superalgebras with minimal data.
//!
//! Every family is described in closed form over an ε/δ coordinate basis:
//! the Gram matrix of `(·|·)`, the distinguished simple roots, the full
//! root list with parities and the highest root `θ` with `(θ|θ) = 2`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::linalg;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum Family {
    Sl2m,
    Psl22,
    Spo2m,
    Osp4m,
    D21a,
    F4,
    G3,
}

/// One algebra of the catalog.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraSpec {
    pub family: Family,
    /// `m` for the classical families, 0 otherwise.
    pub m: u32,
    /// The parameter of `D(2,1;a)`, 0 otherwise.
    pub a: Rational,
}

impl AlgebraSpec {
    pub fn sl(m: u32) -> Result<Self> {
        Self::checked(Family::Sl2m, m, Rational::zero())
    }
    pub fn psl22() -> Self {
        AlgebraSpec { family: Family::Psl22, m: 2, a: Rational::zero() }
    }
    pub fn spo(m: u32) -> Result<Self> {
        Self::checked(Family::Spo2m, m, Rational::zero())
    }
    pub fn osp(m: u32) -> Result<Self> {
        Self::checked(Family::Osp4m, m, Rational::zero())
    }
    pub fn d21a(a: Rational) -> Result<Self> {
        Self::checked(Family::D21a, 0, a)
    }
    pub fn f4() -> Self {
        AlgebraSpec { family: Family::F4, m: 0, a: Rational::zero() }
    }
    pub fn g3() -> Self {
        AlgebraSpec { family: Family::G3, m: 0, a: Rational::zero() }
    }

    fn checked(family: Family, m: u32, a: Rational) -> Result<Self> {
        let spec = AlgebraSpec { family, m, a };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |why: &str| Err(Error::UnsupportedParameter(format!("{self}: {why}")));
        match self.family {
            Family::Sl2m if self.m < 3 => bad("need m >= 3 (sl(2|1) is spo(2|2), sl(2|2) is not simple)"),
            Family::Psl22 if self.m != 2 => bad("psl(2|m) only for m = 2"),
            Family::Osp4m if self.m <= 2 || self.m % 2 == 1 => bad("need m > 2 even"),
            Family::D21a if self.a.is_zero() || self.a == Rational::int(-1) => {
                bad("a = 0 and a = -1 give non-simple algebras")
            }
            _ => Ok(()),
        }
    }

    /// Whether `𝔤^♮` is non-abelian (excludes `spo(2|m)`, `m ≤ 2`).
    pub fn has_nonabelian_natural(&self) -> bool {
        !(self.family == Family::Spo2m && self.m <= 2)
    }

    /// Type I: the odd part splits into two `𝔤_0̄`-submodules.
    pub fn is_type_one(&self) -> bool {
        matches!(self.family, Family::Sl2m | Family::Psl22)
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Sl2m => write!(f, "sl(2|{})", self.m),
            Family::Psl22 => write!(f, "psl(2|2)"),
            Family::Spo2m => write!(f, "spo(2|{})", self.m),
            Family::Osp4m => write!(f, "osp(4|{})", self.m),
            Family::D21a => write!(f, "D(2,1;a={})", self.a),
            Family::F4 => write!(f, "F(4)"),
            Family::G3 => write!(f, "G(3)"),
        }
    }
}

impl serde::Serialize for AlgebraSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for AlgebraSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        parse_spec(text)
    }
}

/// Parses `sl(2|m)`, `psl(2|2)`, `spo(2|m)`, `osp(4|m)`, `D(2,1;a=<q>)`, `F(4)`, `G(3)`.
pub fn parse_spec(text: &str) -> Result<AlgebraSpec> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let syntax = || Error::Parse(format!("unrecognized algebra '{text}'"));
    let inner = |prefix: &str| -> Option<&str> { t.strip_prefix(prefix)?.strip_suffix(')') };
    let int = |s: &str| s.parse::<u32>().map_err(|_| syntax());
    if let Some(m) = inner("sl(2|") {
        return AlgebraSpec::sl(int(m)?);
    }
    if let Some(m) = inner("psl(2|") {
        let m = int(m)?;
        let spec = AlgebraSpec { family: Family::Psl22, m, a: Rational::zero() };
        spec.validate()?;
        return Ok(spec);
    }
    if let Some(m) = inner("spo(2|") {
        return AlgebraSpec::spo(int(m)?);
    }
    if let Some(m) = inner("osp(4|") {
        return AlgebraSpec::osp(int(m)?);
    }
    if let Some(a) = inner("D(2,1;") {
        let a = a.strip_prefix("a=").unwrap_or(a);
        return AlgebraSpec::d21a(a.parse().map_err(|_| syntax())?);
    }
    match t.as_str() {
        "F(4)" => Ok(AlgebraSpec::f4()),
        "G(3)" => Ok(AlgebraSpec::g3()),
        _ => Err(syntax()),
    }
}

/// A root with its ε/δ coordinates and simple-root coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Root {
    pub coords: Vec<Rational>,
    pub coeffs: Vec<i64>,
    pub odd: bool,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0)
    }

    pub fn neg(&self) -> Root {
        Root {
            coords: self.coords.iter().map(|c| -c).collect(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            odd: self.odd,
        }
    }
}

#[derive(Clone, Debug)]
pub struct RootDatum {
    pub spec: AlgebraSpec,
    pub coordinate_labels: Vec<String>,
    pub gram: Vec<Vec<Rational>>,
    pub simple: Vec<Root>,
    /// Positive roots ordered by height, ties by coefficient vector.
    pub positive: Vec<Root>,
    pub theta: Root,
    /// Dimension of the Cartan subalgebra of `𝔤` itself.
    pub cartan_dim: usize,
    index: HashMap<Vec<i64>, usize>,
}

/// Coordinate vector builder: `v(n, &[(i, c)])`.
fn v(n: usize, entries: &[(usize, Rational)]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n];
    for (i, c) in entries {
        out[*i] = &out[*i] + c;
    }
    out
}

fn r(n: i64) -> Rational {
    Rational::int(n)
}

fn half(n: i64) -> Rational {
    Rational::new(n, 2)
}

struct Raw {
    labels: Vec<String>,
    gram: Vec<Vec<Rational>>,
    simple: Vec<(Vec<Rational>, bool)>,
    /// Positive roots only (coordinates, parity); sign is fixed later.
    roots: Vec<(Vec<Rational>, bool)>,
    theta: Vec<Rational>,
}

fn diag(entries: &[Rational]) -> Vec<Vec<Rational>> {
    let n = entries.len();
    (0..n).map(|i| (0..n).map(|j| if i == j { entries[i].clone() } else { Rational::zero() }).collect()).collect()
}

/// sl(2|m) and psl(2|2): coordinates ε1, ε2, δ1..δm.
fn raw_sl(m: usize) -> Raw {
    let n = 2 + m;
    let eps = |i: usize| i;
    let del = |j: usize| 2 + j;
    let mut labels = vec!["e1".to_string(), "e2".to_string()];
    labels.extend((1..=m).map(|j| format!("d{j}")));
    let mut g = vec![r(1), r(1)];
    g.extend((0..m).map(|_| r(-1)));
    let mut simple = vec![(v(n, &[(eps(0), r(1)), (del(0), r(-1))]), true)];
    for j in 0..m - 1 {
        simple.push((v(n, &[(del(j), r(1)), (del(j + 1), r(-1))]), false));
    }
    simple.push((v(n, &[(del(m - 1), r(1)), (eps(1), r(-1))]), true));
    let mut roots = vec![(v(n, &[(eps(0), r(1)), (eps(1), r(-1))]), false)];
    for i in 0..m {
        for j in i + 1..m {
            roots.push((v(n, &[(del(i), r(1)), (del(j), r(-1))]), false));
        }
        roots.push((v(n, &[(eps(0), r(1)), (del(i), r(-1))]), true));
        roots.push((v(n, &[(del(i), r(1)), (eps(1), r(-1))]), true));
    }
    let theta = v(n, &[(eps(0), r(1)), (eps(1), r(-1))]);
    Raw { labels, gram: diag(&g), simple, roots, theta }
}

/// osp(4|m): coordinates ε1, ε2, δ1..δ_{m/2}.
fn raw_osp(m: usize) -> Raw {
    let k = m / 2;
    let n = 2 + k;
    let del = |j: usize| 2 + j;
    let mut labels = vec!["e1".to_string(), "e2".to_string()];
    labels.extend((1..=k).map(|j| format!("d{j}")));
    let mut g = vec![r(1), r(1)];
    g.extend((0..k).map(|_| r(-1)));
    let mut simple = vec![
        (v(n, &[(0, r(1)), (1, r(-1))]), false),
        (v(n, &[(1, r(1)), (del(0), r(-1))]), true),
    ];
    for j in 0..k - 1 {
        simple.push((v(n, &[(del(j), r(1)), (del(j + 1), r(-1))]), false));
    }
    simple.push((v(n, &[(del(k - 1), r(2))]), false));
    let mut roots = vec![(v(n, &[(0, r(1)), (1, r(-1))]), false), (v(n, &[(0, r(1)), (1, r(1))]), false)];
    for i in 0..k {
        for j in i + 1..k {
            roots.push((v(n, &[(del(i), r(1)), (del(j), r(-1))]), false));
            roots.push((v(n, &[(del(i), r(1)), (del(j), r(1))]), false));
        }
        roots.push((v(n, &[(del(i), r(2))]), false));
        for e in 0..2 {
            roots.push((v(n, &[(e, r(1)), (del(i), r(1))]), true));
            roots.push((v(n, &[(e, r(1)), (del(i), r(-1))]), true));
        }
    }
    Raw { labels, gram: diag(&g), simple, roots, theta: v(n, &[(0, r(1)), (1, r(1))]) }
}

/// spo(2|m): coordinates δ, ε1..ε_{⌊m/2⌋}.
fn raw_spo(m: usize) -> Raw {
    let k = m / 2;
    let n = 1 + k;
    let eps = |i: usize| 1 + i;
    let mut labels = vec!["d".to_string()];
    labels.extend((1..=k).map(|i| format!("e{i}")));
    let mut g = vec![half(1)];
    g.extend((0..k).map(|_| half(-1)));
    let mut simple = Vec::new();
    match m {
        0 => simple.push((v(n, &[(0, r(2))]), false)),
        1 => simple.push((v(n, &[(0, r(1))]), true)),
        2 => {
            simple.push((v(n, &[(0, r(1)), (eps(0), r(-1))]), true));
            simple.push((v(n, &[(0, r(1)), (eps(0), r(1))]), true));
        }
        _ => {
            simple.push((v(n, &[(0, r(1)), (eps(0), r(-1))]), true));
            for i in 0..k - 1 {
                simple.push((v(n, &[(eps(i), r(1)), (eps(i + 1), r(-1))]), false));
            }
            if m % 2 == 1 {
                simple.push((v(n, &[(eps(k - 1), r(1))]), false));
            } else {
                simple.push((v(n, &[(eps(k - 2), r(1)), (eps(k - 1), r(1))]), false));
            }
        }
    }
    let mut roots = vec![(v(n, &[(0, r(2))]), false)];
    for i in 0..k {
        for j in i + 1..k {
            roots.push((v(n, &[(eps(i), r(1)), (eps(j), r(-1))]), false));
            roots.push((v(n, &[(eps(i), r(1)), (eps(j), r(1))]), false));
        }
        if m % 2 == 1 {
            roots.push((v(n, &[(eps(i), r(1))]), false));
        }
        roots.push((v(n, &[(0, r(1)), (eps(i), r(1))]), true));
        roots.push((v(n, &[(0, r(1)), (eps(i), r(-1))]), true));
    }
    if m % 2 == 1 {
        roots.push((v(n, &[(0, r(1))]), true));
    }
    Raw { labels, gram: diag(&g), simple, roots, theta: v(n, &[(0, r(2))]) }
}

/// D(2,1;a): coordinates ε1, ε2, δ.
///
/// The ε-block of the Gram is fixed by requiring `(θ|θ) = 2` for
/// `θ = ε1+ε2`, `(ε1−ε2|ε1−ε2) = 2a` and isotropic odd roots `±ε_i±δ`.
fn raw_d21a(a: &Rational) -> Raw {
    let n = 3;
    let one = Rational::one();
    let p = &(&one + a) * &half(1);
    let q = &(&one - a) * &half(1);
    let gram = vec![
        vec![p.clone(), q.clone(), Rational::zero()],
        vec![q, p.clone(), Rational::zero()],
        vec![Rational::zero(), Rational::zero(), -&p],
    ];
    let simple = vec![
        (v(n, &[(0, r(1)), (1, r(-1))]), false),
        (v(n, &[(1, r(1)), (2, r(-1))]), true),
        (v(n, &[(2, r(2))]), false),
    ];
    let mut roots = vec![
        (v(n, &[(0, r(1)), (1, r(1))]), false),
        (v(n, &[(0, r(1)), (1, r(-1))]), false),
        (v(n, &[(2, r(2))]), false),
    ];
    for e in 0..2 {
        roots.push((v(n, &[(e, r(1)), (2, r(1))]), true));
        roots.push((v(n, &[(e, r(1)), (2, r(-1))]), true));
    }
    let labels = vec!["e1".into(), "e2".into(), "d".into()];
    Raw { labels, gram, simple, roots, theta: v(n, &[(0, r(1)), (1, r(1))]) }
}

/// F(4): coordinates ε1, ε2, ε3, δ.
fn raw_f4() -> Raw {
    let n = 4;
    let d = 3;
    let e = Rational::new(-2, 3);
    let gram = diag(&[e.clone(), e.clone(), e, r(2)]);
    let simple = vec![
        (v(n, &[(d, half(1)), (0, half(-1)), (1, half(-1)), (2, half(-1))]), true),
        (v(n, &[(2, r(1))]), false),
        (v(n, &[(1, r(1)), (2, r(-1))]), false),
        (v(n, &[(0, r(1)), (1, r(-1))]), false),
    ];
    let mut roots = vec![(v(n, &[(d, r(1))]), false)];
    for i in 0..3 {
        roots.push((v(n, &[(i, r(1))]), false));
        for j in i + 1..3 {
            roots.push((v(n, &[(i, r(1)), (j, r(-1))]), false));
            roots.push((v(n, &[(i, r(1)), (j, r(1))]), false));
        }
    }
    for s in 0..8u32 {
        let sg = |b: u32| if s >> b & 1 == 1 { half(-1) } else { half(1) };
        roots.push((v(n, &[(d, half(1)), (0, sg(0)), (1, sg(1)), (2, sg(2))]), true));
    }
    let labels = vec!["e1".into(), "e2".into(), "e3".into(), "d".into()];
    Raw { labels, gram, simple, roots, theta: v(n, &[(d, r(1))]) }
}

/// G(3): coordinates δ, ε1, ε2, with ε3 = −ε1−ε2 eliminated.
fn raw_g3() -> Raw {
    let n = 3;
    let eps = |i: usize| -> Vec<Rational> {
        match i {
            0 => v(n, &[(1, r(1))]),
            1 => v(n, &[(2, r(1))]),
            _ => v(n, &[(1, r(-1)), (2, r(-1))]),
        }
    };
    let add = |a: &[Rational], b: &[Rational], s: i64| -> Vec<Rational> {
        a.iter().zip(b).map(|(x, y)| x + &(y * &r(s))).collect()
    };
    let delta = v(n, &[(0, r(1))]);
    let gram = vec![
        vec![half(1), Rational::zero(), Rational::zero()],
        vec![Rational::zero(), half(-1), Rational::new(1, 4)],
        vec![Rational::zero(), Rational::new(1, 4), half(-1)],
    ];
    let simple = vec![
        (add(&delta, &eps(2), 1), true),
        (eps(0), false),
        (add(&eps(1), &eps(0), -1), false),
    ];
    let mut roots = vec![(v(n, &[(0, r(2))]), false), (delta.clone(), true)];
    for i in 0..3 {
        roots.push((eps(i), false));
        for j in 0..3 {
            if i != j {
                roots.push((add(&eps(i), &eps(j), -1), false));
            }
        }
        roots.push((add(&delta, &eps(i), 1), true));
        roots.push((add(&delta, &eps(i), -1), true));
    }
    let labels = vec!["d".into(), "e1".into(), "e2".into()];
    Raw { labels, gram, simple, roots, theta: v(n, &[(0, r(2))]) }
}

fn dot(gram: &[Vec<Rational>], a: &[Rational], b: &[Rational]) -> Rational {
    let mut s = Rational::zero();
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() && !gram[i][j].is_zero() {
                s += &(&(ai * bj) * &gram[i][j]);
            }
        }
    }
    s
}

/// Builds the root datum. Raw root lists may contain either sign of a
/// root; each is normalized to its positive representative.
pub fn root_system(spec: &AlgebraSpec) -> Result<RootDatum> {
    spec.validate()?;
    let raw = match spec.family {
        Family::Sl2m | Family::Psl22 => raw_sl(spec.m as usize),
        Family::Osp4m => raw_osp(spec.m as usize),
        Family::Spo2m => raw_spo(spec.m as usize),
        Family::D21a => raw_d21a(&spec.a),
        Family::F4 => raw_f4(),
        Family::G3 => raw_g3(),
    };
    let rank = raw.simple.len();
    // columns = simple roots; solve coords = S · coeffs
    let ncoord = raw.labels.len();
    let smat: Vec<Vec<Rational>> =
        (0..ncoord).map(|c| raw.simple.iter().map(|(s, _)| s[c].clone()).collect()).collect();
    let to_coeffs = |coords: &[Rational]| -> Result<Vec<i64>> {
        let sol = linalg::solve(&smat, coords)?
            .ok_or_else(|| Error::ConsistencyFailure(format!("{spec}: root outside simple-root span")))?;
        sol.iter()
            .map(|x| {
                x.to_i64()
                    .ok_or_else(|| Error::ConsistencyFailure(format!("{spec}: non-integral root coefficient {x}")))
            })
            .collect()
    };
    let mut positive = Vec::new();
    for (coords, odd) in &raw.roots {
        let coeffs = to_coeffs(coords)?;
        let root = Root { coords: coords.clone(), coeffs, odd: *odd };
        let root = if root.is_positive() { root } else { root.neg() };
        if root.coeffs.iter().any(|&c| c < 0) {
            return Err(Error::ConsistencyFailure(format!("{spec}: root of mixed sign {:?}", root.coeffs)));
        }
        if !positive.contains(&root) {
            positive.push(root);
        }
    }
    positive.sort_by(|a: &Root, b: &Root| (a.height(), &a.coeffs).cmp(&(b.height(), &b.coeffs)));
    let simple: Vec<Root> = raw
        .simple
        .iter()
        .map(|(c, odd)| Ok(Root { coords: c.clone(), coeffs: to_coeffs(c)?, odd: *odd }))
        .collect::<Result<_>>()?;
    let theta = Root { coords: raw.theta.clone(), coeffs: to_coeffs(&raw.theta)?, odd: false };
    let mut index = HashMap::new();
    for (n, root) in positive.iter().enumerate() {
        index.insert(root.coeffs.clone(), n);
    }
    let cmat: Vec<Vec<Rational>> =
        simple.iter().map(|a| simple.iter().map(|b| dot(&raw.gram, &a.coords, &b.coords)).collect()).collect();
    let cartan_dim = linalg::rank(&cmat)?;
    debug_assert_eq!(cartan_dim, if spec.family == Family::Psl22 { rank - 1 } else { rank });
    let datum = RootDatum {
        spec: spec.clone(),
        coordinate_labels: raw.labels,
        gram: raw.gram,
        simple,
        positive,
        theta,
        cartan_dim,
        index,
    };
    if datum.form(&datum.theta.coords, &datum.theta.coords) != Rational::int(2) {
        return Err(Error::ConsistencyFailure(format!("{spec}: (θ|θ) != 2")));
    }
    if !datum.index.contains_key(&datum.theta.coeffs) {
        return Err(Error::ConsistencyFailure(format!("{spec}: θ is not a root")));
    }
    Ok(datum)
}

impl RootDatum {
    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    pub fn form(&self, a: &[Rational], b: &[Rational]) -> Rational {
        dot(&self.gram, a, b)
    }

    /// `(α_i|α_j)` over the simple roots.
    pub fn cartan_matrix(&self) -> Vec<Vec<Rational>> {
        self.simple.iter().map(|a| self.simple.iter().map(|b| self.form(&a.coords, &b.coords)).collect()).collect()
    }

    /// Form on simple-root coefficient vectors.
    pub fn form_coeffs(&self, a: &[i64], b: &[i64]) -> Rational {
        let ca = self.coords_of(a);
        let cb = self.coords_of(b);
        self.form(&ca, &cb)
    }

    pub fn coords_of(&self, coeffs: &[i64]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.coordinate_labels.len()];
        for (c, s) in coeffs.iter().zip(&self.simple) {
            if *c != 0 {
                for (o, x) in out.iter_mut().zip(&s.coords) {
                    *o += &(x * &Rational::int(*c));
                }
            }
        }
        out
    }

    /// Looks up a root (of either sign) by its coefficient vector.
    pub fn root(&self, coeffs: &[i64]) -> Option<Root> {
        if let Some(&i) = self.index.get(coeffs) {
            return Some(self.positive[i].clone());
        }
        let neg: Vec<i64> = coeffs.iter().map(|c| -c).collect();
        self.index.get(&neg).map(|&i| self.positive[i].neg())
    }

    pub fn is_root(&self, coeffs: &[i64]) -> bool {
        self.root(coeffs).is_some()
    }

    pub fn positive_index(&self, coeffs: &[i64]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    /// All roots: positives then their negatives.
    pub fn all_roots(&self) -> Vec<Root> {
        let mut out = self.positive.clone();
        out.extend(self.positive.iter().map(Root::neg));
        out
    }

    pub fn even_root_count(&self) -> usize {
        2 * self.positive.iter().filter(|r| !r.odd).count()
    }

    pub fn odd_root_count(&self) -> usize {
        2 * self.positive.iter().filter(|r| r.odd).count()
    }

    pub fn dim(&self) -> usize {
        self.cartan_dim + 2 * self.positive.len()
    }

    /// `ρ = ρ_even − ρ_odd` in coordinates.
    pub fn rho(&self) -> Vec<Rational> {
        let mut rho = vec![Rational::zero(); self.coordinate_labels.len()];
        let h = Rational::new(1, 2);
        for root in &self.positive {
            let s = if root.odd { -&h } else { h.clone() };
            for (o, x) in rho.iter_mut().zip(&root.coords) {
                *o += &(x * &s);
            }
        }
        rho
    }

    /// `h^∨ = (θ|θ)/2 + (ρ|θ)`.
    pub fn dual_coxeter_from_roots(&self) -> Rational {
        let t = &self.theta.coords;
        &(&self.form(t, t) * &Rational::new(1, 2)) + &self.form(&self.rho(), t)
    }

    pub fn superdimension(&self) -> i64 {
        self.cartan_dim as i64 + self.even_root_count() as i64 - self.odd_root_count() as i64
    }
}

/// Closed-form dual Coxeter numbers of the catalog.
pub fn dual_coxeter_reference(spec: &AlgebraSpec) -> Rational {
    let m = Rational::int(spec.m as i64);
    match spec.family {
        Family::Sl2m | Family::Osp4m => &Rational::int(2) - &m,
        Family::Psl22 | Family::D21a => Rational::zero(),
        Family::Spo2m => &Rational::int(2) - &(&m * &Rational::new(1, 2)),
        Family::F4 => Rational::int(-2),
        Family::G3 => Rational::new(-3, 2),
    }
}

/// `h^∨` from the roots, checked against the closed form.
pub fn dual_coxeter(datum: &RootDatum) -> Result<Rational> {
    let h = datum.dual_coxeter_from_roots();
    let want = dual_coxeter_reference(&datum.spec);
    if h != want {
        return Err(Error::ConsistencyFailure(format!("{}: h^∨ from roots {h} != {want}", datum.spec)));
    }
    Ok(h)
}

pub fn superdimension(datum: &RootDatum) -> i64 {
    datum.superdimension()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(s: &str) -> RootDatum {
        root_system(&parse_spec(s).unwrap()).unwrap()
    }

    #[test]
    fn parse_round_trip_and_errors() {
        let s = parse_spec("D(2,1;a=-3/5)").unwrap();
        assert_eq!(s.family, Family::D21a);
        assert_eq!(s.a, Rational::new(-3, 5));
        assert_eq!(s.to_string(), "D(2,1;a=-3/5)");
        assert_eq!(parse_spec("sl(2|4)").unwrap(), AlgebraSpec::sl(4).unwrap());
        assert!(matches!(parse_spec("D(2,1;a=0)"), Err(Error::UnsupportedParameter(_))));
        assert!(matches!(parse_spec("D(2,1;a=-1)"), Err(Error::UnsupportedParameter(_))));
        assert!(matches!(parse_spec("osp(4|3)"), Err(Error::UnsupportedParameter(_))));
        assert!(matches!(parse_spec("sl(2|2)"), Err(Error::UnsupportedParameter(_))));
        assert!(matches!(parse_spec("E(8)"), Err(Error::Parse(_))));
        assert!(matches!(parse_spec("sl(2|x)"), Err(Error::Parse(_))));
    }

    #[test]
    fn root_counts() {
        let d = datum("psl(2|2)");
        assert_eq!((d.even_root_count(), d.odd_root_count()), (4, 8));
        let d = datum("F(4)");
        assert_eq!((d.even_root_count(), d.odd_root_count()), (20, 16));
        let d = datum("G(3)");
        assert_eq!((d.even_root_count(), d.odd_root_count()), (14, 14));
        assert_eq!(d.theta.coeffs, vec![2, 4, 2]);
    }

    #[test]
    fn superdimensions() {
        assert_eq!(datum("psl(2|2)").superdimension(), -2);
        assert_eq!(datum("G(3)").superdimension(), 3);
        assert_eq!(datum("D(2,1;a=3)").superdimension(), 1);
        assert_eq!(datum("F(4)").superdimension(), 24 - 16);
        for m in 3..9 {
            let want = ((m as i64) - 1) * ((m as i64) - 3);
            assert_eq!(datum(&format!("sl(2|{m})")).superdimension(), want);
        }
    }

    #[test]
    fn dual_coxeter_values() {
        assert_eq!(dual_coxeter(&datum("F(4)")).unwrap(), Rational::int(-2));
        assert_eq!(dual_coxeter(&datum("psl(2|2)")).unwrap(), Rational::zero());
        assert_eq!(dual_coxeter(&datum("spo(2|7)")).unwrap(), Rational::new(-3, 2));
        for m in 3..=12 {
            assert_eq!(dual_coxeter(&datum(&format!("sl(2|{m})"))).unwrap(), Rational::int(2 - m));
        }
    }

    #[test]
    fn every_family_is_consistent() {
        let specs = [
            "spo(2|0)", "spo(2|1)", "spo(2|2)", "spo(2|3)", "spo(2|4)", "spo(2|5)", "spo(2|6)", "spo(2|8)",
            "osp(4|4)", "osp(4|6)", "D(2,1;a=1)", "D(2,1;a=-2/5)", "D(2,1;a=3)", "G(3)", "F(4)", "psl(2|2)",
        ];
        for s in specs {
            let d = datum(s);
            dual_coxeter(&d).unwrap();
            // θ dominates every positive root
            for root in &d.positive {
                assert!(root.coeffs.iter().zip(&d.theta.coeffs).all(|(a, b)| a <= b), "{s}: {:?}", root.coeffs);
            }
            // simple roots are roots of height 1
            for (i, s_root) in d.simple.iter().enumerate() {
                let mut e = vec![0; d.rank()];
                e[i] = 1;
                assert_eq!(s_root.coeffs, e);
                assert_eq!(d.root(&e).unwrap().odd, s_root.odd);
            }
        }
    }
}
