//! The contact superalgebra `K(1,4)` on `t, ξ₁..ξ₄` and its 17-dimensional
//! subalgebra isomorphic to `D(2,1;a)`.

use std::collections::BTreeMap;
use std::fmt;

use crate::construct::algebra::{to_sparse, BasisLabel, Sparse};
use crate::construct::SuperLieAlgebra;
use crate::error::{Error, Result};
use crate::involution::ConjugateLinearMap;
use crate::exact::{RadicalScalar, Rational};
use crate::linalg::Subspace;

/// Monomial `t^a ξ_S`, `S` a bit mask over `ξ₁..ξ₄`.
pub type Monomial = (u32, u8);

/// Polynomial in `t` and the odd `ξ_i`.
#[derive(Clone, Default, PartialEq)]
pub struct ContactElement {
    terms: BTreeMap<Monomial, RadicalScalar>,
}

fn sign(neg: bool) -> RadicalScalar {
    if neg {
        -RadicalScalar::one()
    } else {
        RadicalScalar::one()
    }
}

/// `ξ_S ξ_T = ±ξ_{S∪T}`, or `None` if they overlap.
fn odd_product(s: u8, t: u8) -> Option<(u8, bool)> {
    if s & t != 0 {
        return None;
    }
    let mut swaps = 0;
    for i in 0..4 {
        if t & (1 << i) != 0 {
            swaps += (s >> (i + 1)).count_ones();
        }
    }
    Some((s | t, swaps % 2 == 1))
}

impl ContactElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: RadicalScalar, tpow: u32, mask: u8) -> Self {
        let mut e = Self::zero();
        e.add_term((tpow, mask), c);
        e
    }

    pub fn one() -> Self {
        Self::monomial(RadicalScalar::one(), 0, 0)
    }

    pub fn t() -> Self {
        Self::monomial(RadicalScalar::one(), 1, 0)
    }

    /// `ξ_i`, `i ∈ 1..=4`.
    pub fn xi(i: usize) -> Self {
        Self::monomial(RadicalScalar::one(), 0, 1 << (i - 1))
    }

    /// `ξ̂_i = (−1)^{i+1} ∏_{j≠i} ξ_j`, factors in increasing `j`.
    pub fn xi_hat(i: usize) -> Self {
        let mask = 0b1111 & !(1u8 << (i - 1));
        Self::monomial(sign(i % 2 == 0), 0, mask)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &RadicalScalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: Monomial, c: RadicalScalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_default();
        *e = &*e + &c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, c.clone());
        }
        r
    }

    pub fn scale(&self, c: &RadicalScalar) -> Self {
        let mut r = Self::zero();
        for (m, x) in &self.terms {
            r.add_term(*m, c * x);
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-RadicalScalar::one()))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for ((a, s), x) in &self.terms {
            for ((b, t), y) in &o.terms {
                if let Some((u, neg)) = odd_product(*s, *t) {
                    r.add_term((a + b, u), &sign(neg) * &(x * y));
                }
            }
        }
        r
    }

    /// Parity, if homogeneous.
    /// Entrywise complex conjugate of the coefficients.
    pub fn conj(&self) -> Self {
        ContactElement { terms: self.terms.iter().map(|(m, c)| (*m, c.conj())).collect() }
    }

    pub fn parity(&self) -> Option<bool> {
        let mut it = self.terms.keys().map(|(_, s)| s.count_ones() % 2 == 1);
        let first = it.next().unwrap_or(false);
        it.all(|p| p == first).then_some(first)
    }

    /// `deg′` with `deg′ t = 2`, `deg′ ξ_i = 1`, if homogeneous.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|(a, s)| 2 * a + s.count_ones());
        let first = it.next().unwrap_or(0);
        it.all(|d| d == first).then_some(first)
    }

    pub fn dt(&self) -> Self {
        let mut r = Self::zero();
        for ((a, s), x) in &self.terms {
            if *a > 0 {
                r.add_term((a - 1, *s), &RadicalScalar::from_int(*a as i64) * x);
            }
        }
        r
    }

    /// Left derivative `∂/∂ξ_i`.
    pub fn di(&self, i: usize) -> Self {
        let bit = 1u8 << (i - 1);
        let mut r = Self::zero();
        for ((a, s), x) in &self.terms {
            if s & bit != 0 {
                let before = (s & (bit - 1)).count_ones();
                r.add_term((*a, s & !bit), &sign(before % 2 == 1) * x);
            }
        }
        r
    }

    /// `(2 − Σ ξ_i ∂_i) f`.
    fn two_minus_euler(&self) -> Self {
        let mut r = Self::zero();
        for ((a, s), x) in &self.terms {
            r.add_term((*a, *s), &RadicalScalar::from_int(2 - s.count_ones() as i64) * x);
        }
        r
    }
}

impl fmt::Display for ContactElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((a, s), c)| {
                let mut m = String::new();
                match a {
                    0 => {}
                    1 => m.push('t'),
                    _ => m.push_str(&format!("t^{a}")),
                }
                for i in 0..4 {
                    if s & (1 << i) != 0 {
                        m.push_str(&format!("ξ{}", i + 1));
                    }
                }
                if m.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c}){m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for ContactElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `{f,g} = (2−E)f·∂_t g − ∂_t f·(2−E)g + Σ_i (−1)^{p(f)} ∂_i f ∂_i g`,
/// `E = Σ ξ_i ∂_i`; `f` must be homogeneous.
pub fn contact_bracket(f: &ContactElement, g: &ContactElement) -> ContactElement {
    let pf = f.parity().expect("contact bracket needs a homogeneous left argument");
    let mut r = f.two_minus_euler().mul(&g.dt()).sub(&f.dt().mul(&g.two_minus_euler()));
    let s = sign(pf);
    for i in 1..=4 {
        r = r.add(&f.di(i).mul(&g.di(i)).scale(&s));
    }
    r
}

/// All monomials with `deg′ ≤ max`.
pub fn monomials_up_to(max: u32) -> Vec<ContactElement> {
    let mut out = Vec::new();
    for a in 0..=max / 2 {
        for s in 0u8..16 {
            if 2 * a + s.count_ones() <= max {
                out.push(ContactElement::monomial(RadicalScalar::one(), a, s));
            }
        }
    }
    out
}

/// Super-anticommutativity and super Jacobi on all monomials of `deg′ ≤ max`;
/// returns the number of triples checked.
pub fn check_contact_identities(max: u32) -> Result<usize> {
    let mons = monomials_up_to(max);
    let n = mons.len();
    let par: Vec<bool> = mons.iter().map(|m| m.parity().unwrap()).collect();
    let mut br = vec![vec![ContactElement::zero(); n]; n];
    for a in 0..n {
        for b in 0..n {
            br[a][b] = contact_bracket(&mons[a], &mons[b]);
        }
    }
    for a in 0..n {
        for b in 0..n {
            let s = sign(!(par[a] && par[b]));
            if br[a][b] != br[b][a].scale(&s) {
                return Err(Error::ConsistencyFailure(format!(
                    "contact bracket not super-antisymmetric on {}, {}",
                    mons[a], mons[b]
                )));
            }
        }
    }
    let mut count = 0;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = contact_bracket(&mons[a], &br[b][c]);
                let mut rhs = if br[a][b].is_zero() { ContactElement::zero() } else { contact_bracket(&br[a][b], &mons[c]) };
                let s = sign(par[a] && par[b]);
                rhs = rhs.add(&contact_bracket(&mons[b], &br[a][c]).scale(&s));
                if lhs != rhs {
                    return Err(Error::ConsistencyFailure(format!(
                        "contact Jacobi fails on {}, {}, {}",
                        mons[a], mons[b], mons[c]
                    )));
                }
                count += 1;
            }
        }
    }
    Ok(count)
}

/// The 17-dimensional subalgebra for one value of `b`.
#[derive(Clone, Debug)]
pub struct K14Realization {
    pub b: Rational,
    /// Basis elements as polynomials, in the order of `alg`.
    pub elements: Vec<ContactElement>,
    /// Weight basis with structure constants.
    pub alg: SuperLieAlgebra,
    /// Raw Cartan matrix `[h_i, e_j] = A_ij e_j` of the given generators.
    pub raw_cartan: Vec<Vec<RadicalScalar>>,
    /// Rows rescaled: diagonal 2 where nonzero, else first nonzero entry 1.
    pub cartan: Vec<Vec<Rational>>,
    /// `(1+b)/(1−b)`.
    pub a: Rational,
    /// Chevalley generators `(e_i, f_i, h_i)` as polynomials.
    pub generators: Vec<[ContactElement; 3]>,
}

/// `a_i = tξ_i + b ξ̂_i`.
pub fn a_element(b: &Rational, i: usize) -> ContactElement {
    ContactElement::t().mul(&ContactElement::xi(i)).add(&ContactElement::xi_hat(i).scale(&RadicalScalar::from_rational(b.clone())))
}

/// `ξ = ξ₁ξ₂ξ₃ξ₄`.
pub fn xi_top() -> ContactElement {
    ContactElement::monomial(RadicalScalar::one(), 0, 0b1111)
}

/// `e = −t² + 2bξ`, `x = t/2`, `f = −1`.
pub fn k14_triple(b: &Rational) -> [ContactElement; 3] {
    let bb = RadicalScalar::from_rational(b * &Rational::int(2));
    [
        ContactElement::monomial(-RadicalScalar::one(), 2, 0).add(&xi_top().scale(&bb)),
        ContactElement::t().scale(&RadicalScalar::from_rational(Rational::new(1, 2))),
        ContactElement::monomial(-RadicalScalar::one(), 0, 0),
    ]
}

/// `1, ξ_i, ξ_iξ_j (i<j), t/2, a_i, −t²+2bξ`.
pub fn k14_spanning_set(b: &Rational) -> Vec<(String, ContactElement)> {
    let mut out = vec![("1".to_string(), ContactElement::one())];
    for i in 1..=4 {
        out.push((format!("ξ{i}"), ContactElement::xi(i)));
    }
    for i in 1..=4 {
        for j in i + 1..=4 {
            out.push((format!("ξ{i}ξ{j}"), ContactElement::xi(i).mul(&ContactElement::xi(j))));
        }
    }
    let [e, x, _] = k14_triple(b);
    out.push(("t/2".into(), x));
    for i in 1..=4 {
        out.push((format!("a{i}"), a_element(b, i)));
    }
    out.push(("e".into(), e));
    out
}

/// Coordinates of polynomials in a fixed span.
struct Span {
    index: BTreeMap<Monomial, usize>,
    sub: Subspace<RadicalScalar>,
}

impl Span {
    fn new(elements: &[ContactElement]) -> Result<Self> {
        let mut index = BTreeMap::new();
        for e in elements {
            for (m, _) in e.terms() {
                let k = index.len();
                index.entry(*m).or_insert(k);
            }
        }
        let vecs = elements.iter().map(|e| Self::dense(&index, e)).collect::<Option<Vec<_>>>().unwrap();
        Ok(Span { index, sub: Subspace::new(vecs)? })
    }

    fn dense(index: &BTreeMap<Monomial, usize>, e: &ContactElement) -> Option<Vec<RadicalScalar>> {
        let mut v = vec![RadicalScalar::zero(); index.len()];
        for (m, c) in e.terms() {
            v[*index.get(m)?] = c.clone();
        }
        Some(v)
    }

    fn coords(&self, e: &ContactElement) -> Option<Vec<RadicalScalar>> {
        self.sub.coords(&Self::dense(&self.index, e)?)
    }
}

fn combine(elements: &[ContactElement], coeffs: &[RadicalScalar]) -> ContactElement {
    let mut r = ContactElement::zero();
    for (e, c) in elements.iter().zip(coeffs) {
        if !c.is_zero() {
            r = r.add(&e.scale(c));
        }
    }
    r
}

/// Builds the subalgebra for `b`, checks closure, extracts the Cartan matrix of
/// the generators `e₁ = −i a₁ + a₂, f₁ = iξ₁ + ξ₂, …` and passes to a weight
/// basis for the Cartan `t, −iξ₁ξ₂, −iξ₃ξ₄`.
pub fn k14_realization(b: &Rational) -> Result<K14Realization> {
    let one = Rational::one();
    if *b == one || *b == -&one {
        return Err(Error::DegenerateParameter(format!("b = {b}")));
    }
    let i = RadicalScalar::i();
    let span = k14_spanning_set(b);
    let elems: Vec<ContactElement> = span.iter().map(|(_, e)| e.clone()).collect();
    let sp = Span::new(&elems)?;
    if sp.sub.dim() != 17 {
        return Err(Error::ConstructionFailure(format!("span has dimension {}", sp.sub.dim())));
    }
    for a in &elems {
        for c in &elems {
            if sp.coords(&contact_bracket(a, c)).is_none() {
                return Err(Error::ConstructionFailure(format!("span not closed: {{{a}, {c}}}")));
            }
        }
    }
    let xi = ContactElement::xi;
    let xx = |p: usize, q: usize| xi(p).mul(&xi(q));
    let v1 = ContactElement::t();
    let v2 = xx(1, 2).scale(&-&i);
    let v3 = xx(3, 4).scale(&-&i);
    let lin = |terms: &[(RadicalScalar, &ContactElement)]| {
        terms.iter().fold(ContactElement::zero(), |acc, (k, e)| acc.add(&e.scale(k)))
    };
    let a1 = a_element(b, 1);
    let a2 = a_element(b, 2);
    let (x13, x24, x14, x23) = (xx(1, 3), xx(2, 4), xx(1, 4), xx(2, 3));
    let one_s = RadicalScalar::one();
    let pairs: Vec<[ContactElement; 2]> = vec![
        [lin(&[(-&i, &a1), (one_s.clone(), &a2)]), lin(&[(i.clone(), &xi(1)), (one_s.clone(), &xi(2))])],
        [
            lin(&[(one_s.clone(), &x13), (one_s.clone(), &x24), (i.clone(), &x14), (-&i, &x23)]),
            lin(&[(one_s.clone(), &x13), (one_s.clone(), &x24), (-&i, &x14), (i.clone(), &x23)]),
        ],
        [
            lin(&[(one_s.clone(), &x13), (-&one_s, &x24), (-&i, &x14), (-&i, &x23)]),
            lin(&[(one_s.clone(), &x13), (-&one_s, &x24), (i.clone(), &x14), (i.clone(), &x23)]),
        ],
    ];
    let cartan_span = Span::new(&[v1.clone(), v2.clone(), v3.clone()])?;
    let mut gens: Vec<[ContactElement; 3]> = Vec::new();
    for (p, [e, f]) in pairs.iter().enumerate() {
        let h = contact_bracket(e, f);
        if h.is_zero() || cartan_span.coords(&h).is_none() {
            return Err(Error::ConstructionFailure(format!("[e{}, f{}] = {h} is not a nonzero Cartan element", p + 1, p + 1)));
        }
        gens.push([e.clone(), f.clone(), h]);
    }
    for (p, [e, _, _]) in gens.iter().enumerate() {
        for (q, [_, f, _]) in gens.iter().enumerate() {
            if p != q && !contact_bracket(e, f).is_zero() {
                return Err(Error::ConstructionFailure(format!("[e{}, f{}] is nonzero", p + 1, q + 1)));
            }
        }
    }
    let mut raw = vec![vec![RadicalScalar::zero(); 3]; 3];
    for (p, [_, _, h]) in gens.iter().enumerate() {
        for (q, [e, _, _]) in gens.iter().enumerate() {
            let br = contact_bracket(h, e);
            let (m, coef) = e.terms().next().unwrap();
            let lam = br.terms.get(m).cloned().unwrap_or_default().checked_div(coef)?;
            if br != e.scale(&lam) {
                return Err(Error::ConstructionFailure(format!("e{} is not an eigenvector of ad h{}", q + 1, p + 1)));
            }
            raw[p][q] = lam;
        }
    }
    let mut cartan = Vec::new();
    for (p, row) in raw.iter().enumerate() {
        let pivot = if !row[p].is_zero() {
            &row[p] * &RadicalScalar::from_rational(Rational::new(1, 2))
        } else {
            row.iter().find(|x| !x.is_zero()).cloned().ok_or(Error::DegenerateParameter("zero Cartan row".into()))?
        };
        let inv = pivot.invert()?;
        cartan.push(
            row.iter()
                .map(|x| (x * &inv).as_rational().ok_or_else(|| Error::ConstructionFailure("irrational Cartan entry".into())))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    let a = (&one + b).checked_div(&(&one - b))?;
    let alg = weight_basis(b, &elems, &sp, [&v1, &v2, &v3])?;
    Ok(K14Realization { b: b.clone(), elements: alg.1, alg: alg.0, raw_cartan: raw, cartan, a, generators: gens })
}

/// Simultaneous eigenvectors of `ad v₁, ad v₂, ad v₃` on the span; weights
/// are recorded as twice the eigenvalues.
fn weight_basis(
    b: &Rational,
    elems: &[ContactElement],
    sp: &Span,
    cartan: [&ContactElement; 3],
) -> Result<(SuperLieAlgebra, Vec<ContactElement>)> {
    let n = elems.len();
    let ad = |h: &ContactElement| -> Result<Vec<Vec<RadicalScalar>>> {
        // column j = coordinates of [h, b_j]
        let cols: Vec<Vec<RadicalScalar>> = elems
            .iter()
            .map(|e| sp.coords(&contact_bracket(h, e)).ok_or_else(|| Error::ConstructionFailure("not closed".into())))
            .collect::<Result<_>>()?;
        Ok((0..n).map(|r| (0..n).map(|c| cols[c][r].clone()).collect()).collect())
    };
    let mats = [ad(cartan[0])?, ad(cartan[1])?, ad(cartan[2])?];
    let mut basis: Vec<(Vec<i64>, Vec<RadicalScalar>)> = Vec::new();
    let vals: Vec<i64> = (-4..=4).collect();
    for &w1 in &vals {
        for &w2 in &vals {
            for &w3 in &vals {
                let w = [w1, w2, w3];
                let mut stacked = Vec::new();
                for (m, wk) in mats.iter().zip(w) {
                    let lam = RadicalScalar::from_rational(Rational::new(wk, 2));
                    for (r, row) in m.iter().enumerate() {
                        let mut row = row.clone();
                        row[r] = &row[r] - &lam;
                        stacked.push(row);
                    }
                }
                for v in crate::linalg::nullspace(&stacked, n)? {
                    basis.push((w.to_vec(), v));
                }
            }
        }
    }
    if basis.len() != n {
        return Err(Error::ConstructionFailure(format!("weight spaces have total dimension {}", basis.len())));
    }
    // Cartan first, then the rest in weight order
    basis.sort_by(|x, y| (x.0 != [0, 0, 0], &x.0).cmp(&(y.0 != [0, 0, 0], &y.0)));
    let new_elems: Vec<ContactElement> = basis.iter().map(|(_, v)| combine(elems, v)).collect();
    let new_span = Span::new(&new_elems)?;
    let odd: Vec<bool> = new_elems
        .iter()
        .map(|e| e.parity().ok_or_else(|| Error::ConstructionFailure(format!("{e} is not homogeneous"))))
        .collect::<Result<_>>()?;
    let labels: Vec<BasisLabel> = basis.iter().map(|(w, _)| BasisLabel::Named(format!("K{w:?}"))).collect();
    let weights: Vec<Vec<i64>> = basis.iter().map(|(w, _)| w.clone()).collect();
    let mut err = None;
    let alg = SuperLieAlgebra::from_brackets(format!("K(1,4), b = {b}"), labels, odd, weights, |p, q| -> Sparse {
        match new_span.coords(&contact_bracket(&new_elems[p], &new_elems[q])) {
            Some(c) => to_sparse(&c),
            None => {
                err = Some(Error::ConstructionFailure("weight basis not closed".into()));
                Vec::new()
            }
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    Ok((alg, new_elems))
}

/// Coordinates of `e` in the weight basis of `k.alg`.
pub fn k14_coords(k: &K14Realization, e: &ContactElement) -> Result<Vec<RadicalScalar>> {
    Span::new(&k.elements)?.coords(e).ok_or_else(|| Error::WrongSubspace(format!("{e} is outside the subalgebra")))
}

/// Coefficient conjugation: the conjugate linear map fixing the real span of
/// `1, ξ_i, ξ_iξ_j, t/2, a_i, −t²+2bξ`, in the weight basis.
pub fn k14_conjugation(k: &K14Realization) -> Result<ConjugateLinearMap> {
    let sp = Span::new(&k.elements)?;
    let cols = k
        .elements
        .iter()
        .map(|e| sp.coords(&e.conj()).map(|c| to_sparse(&c)).ok_or_else(|| Error::ConstructionFailure("conjugation leaves the span".into())))
        .collect::<Result<_>>()?;
    Ok(ConjugateLinearMap { cols })
}
