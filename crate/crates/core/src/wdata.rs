//! Level-dependent data of the minimal W-algebra: induced levels `z_i(k)`,
//! collapsing levels, central charge and the unitarity classification.

use serde::Serialize;

use crate::catalog::{dual_coxeter, root_system, AlgebraSpec, Family, RootDatum};
use crate::construct::algebra::{add_vec, Vector};
use crate::construct::Algebra;
use crate::error::{Error, Result};
use crate::exact::{LevelPolynomial, LevelRationalFunction, RadicalScalar, Rational};
use crate::halfform;
use crate::involution::{root_components, ComponentKind, MinimalData, Sl2Triple};
use crate::linalg::Subspace;

/// Invariants of one component of `𝔤^♮`; index 0 is the center when present.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComponentData {
    pub index: usize,
    pub kind: ComponentKind,
    pub cartan_type: String,
    pub u: Rational,
    pub hbar: Rational,
    pub chi: Rational,
    pub z: LevelPolynomial,
}

impl ComponentData {
    /// Conventional name, e.g. `sl_4`, `so_7`, `G_2`.
    pub fn name(&self) -> String {
        lie_name(&self.cartan_type)
    }
}

fn lie_name(t: &str) -> String {
    let r: u32 = t.get(1..).and_then(|s| s.parse().ok()).unwrap_or(0);
    match t.chars().next() {
        Some('A') => format!("sl_{}", r + 1),
        Some('B') => format!("so_{}", 2 * r + 1),
        Some('C') if t == "C" => "C".into(),
        Some('C') => format!("sp_{}", 2 * r),
        Some('D') => format!("so_{}", 2 * r),
        Some('G') => "G_2".into(),
        _ => t.into(),
    }
}

/// Standard dual Coxeter number of a simple Lie algebra by Cartan type.
pub fn standard_dual_coxeter(t: &str) -> Option<i64> {
    let r: i64 = t.get(1..)?.parse().ok()?;
    Some(match t.chars().next()? {
        'A' => r + 1,
        'B' if r == 2 => 3,
        'B' => 2 * r - 1,
        'C' => r + 1,
        'D' => 2 * r - 2,
        'G' => 4,
        'F' => 9,
        _ => return None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "target")]
pub enum UnitarityVerdict {
    ExcludedLevel,
    Trivial,
    CollapsingUnitary(String),
    CollapsingNonUnitary(String),
    UnitaryNontrivial,
    NonUnitary,
}

impl UnitarityVerdict {
    pub fn name(&self) -> &'static str {
        match self {
            Self::ExcludedLevel => "ExcludedLevel",
            Self::Trivial => "Trivial",
            Self::CollapsingUnitary(_) => "CollapsingUnitary",
            Self::CollapsingNonUnitary(_) => "CollapsingNonUnitary",
            Self::UnitaryNontrivial => "UnitaryNontrivial",
            Self::NonUnitary => "NonUnitary",
        }
    }

    /// Unitary and not `ℂ`: the sense of the classification theorem.
    pub fn is_nontrivial_unitary(&self) -> bool {
        matches!(self, Self::UnitaryNontrivial | Self::CollapsingUnitary(_))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Classification {
    pub level: Rational,
    pub verdict: UnitarityVerdict,
    /// `None` at the excluded level.
    pub c: Option<Rational>,
}

/// `c(k) = kd/(k+h^∨) − 6k + h^∨ − 4`.
pub fn central_charge_function(sdim: i64, h: &Rational) -> LevelRationalFunction {
    let d = Rational::int(sdim);
    let kh = LevelPolynomial::linear(Rational::one(), h.clone());
    let lin = LevelPolynomial::linear(Rational::int(-6), h - &Rational::int(4));
    let num = &LevelPolynomial::linear(d, Rational::zero()) + &(&lin * &kh);
    LevelRationalFunction::new(num, kh).expect("k + h^∨ is nonzero")
}

/// Central charge as a function of `k` for any supported spec.
pub fn central_charge(spec: &AlgebraSpec) -> Result<LevelRationalFunction> {
    let datum = root_system(spec)?;
    Ok(central_charge_function(datum.superdimension(), &dual_coxeter(&datum)?))
}

/// Everything level-dependent for one algebra.
#[derive(Clone, Debug, Serialize)]
pub struct WData {
    pub spec: AlgebraSpec,
    pub h_dual: Rational,
    pub sdim: i64,
    pub components: Vec<ComponentData>,
}


impl WData {
    pub fn new(spec: &AlgebraSpec) -> Result<Self> {
        Self::from_datum(&root_system(spec)?)
    }

    pub fn from_datum(datum: &RootDatum) -> Result<Self> {
        let spec = datum.spec.clone();
        if !spec.has_nonabelian_natural() {
            return Err(Error::AbelianGNatural(spec.to_string()));
        }
        let h = dual_coxeter(datum)?;
        let (roots, center) = root_components(datum)?;
        let half = Rational::new(1, 2);
        let mut components = Vec::new();
        let mut push = |kind, cartan_type: String, u: Rational, hbar: Rational| -> Result<()> {
            let two_over_u = Rational::int(2).checked_div(&u)?;
            let shift = &(&h - &hbar) * &half;
            components.push(ComponentData {
                index: components.len(),
                kind,
                cartan_type,
                chi: (&h - &hbar).checked_div(&u)?,
                z: LevelPolynomial::linear(two_over_u.clone(), &two_over_u * &shift),
                u,
                hbar,
            });
            Ok(())
        };
        if center > 1 {
            return Err(Error::UnsupportedFamily(format!("{spec}: center of dimension {center}")));
        }
        if center == 1 {
            push(ComponentKind::Center, "C".into(), Rational::int(2), Rational::zero())?;
        }
        for rc in roots {
            // h̄_i from the roots must match u_i·h^∨_std/2
            let std = standard_dual_coxeter(&rc.cartan_type)
                .ok_or_else(|| Error::ConsistencyFailure(format!("{spec}: unknown type {}", rc.cartan_type)))?;
            if rc.hbar != &(&rc.u * &Rational::int(std)) * &half {
                return Err(Error::ConsistencyFailure(format!("{spec}: h̄ of {} is not u·h^∨/2", rc.cartan_type)));
            }
            push(ComponentKind::Simple, rc.cartan_type, rc.u, rc.hbar)?;
        }
        Ok(WData { spec, h_dual: h, sdim: datum.superdimension(), components })
    }

    pub fn has_center(&self) -> bool {
        self.components.iter().any(|c| c.kind == ComponentKind::Center)
    }

    pub fn simple_components(&self) -> impl Iterator<Item = &ComponentData> {
        self.components.iter().filter(|c| c.kind == ComponentKind::Simple)
    }

    /// `𝔤^♮` simple.
    pub fn is_simple(&self) -> bool {
        self.components.len() == 1 && !self.has_center()
    }

    pub fn z_at(&self, k: &Rational) -> Vec<Rational> {
        self.components.iter().map(|c| c.z.eval(k)).collect()
    }

    /// Monic `p(k)`: `z_1 z_2` with two components, else `z_1·(k + h̄_1/2 + 1)`.
    pub fn collapsing_poly(&self) -> Result<LevelPolynomial> {
        let p = match self.components.as_slice() {
            [a, b] => &a.z * &b.z,
            [a] => {
                let shift = &(&a.hbar * &Rational::new(1, 2)) + &Rational::one();
                &a.z * &LevelPolynomial::linear(Rational::one(), shift)
            }
            _ => {
                return Err(Error::UnsupportedFamily(format!(
                    "{}: {} components",
                    self.spec,
                    self.components.len()
                )))
            }
        };
        p.monic()
    }

    /// Distinct roots of `p(k)`, ascending.
    pub fn collapsing_levels(&self) -> Result<Vec<Rational>> {
        let mut r = self.collapsing_poly()?.rational_roots()?;
        r.sort();
        r.dedup();
        Ok(r)
    }

    pub fn central_charge(&self) -> LevelRationalFunction {
        central_charge_function(self.sdim, &self.h_dual)
    }

    pub fn central_charge_at(&self, k: &Rational) -> Result<Rational> {
        // the reduced function can hide the pole when d = 0 or h^∨ = 0
        if (k + &self.h_dual).is_zero() {
            return Err(Error::PoleAtLevel(k.to_string()));
        }
        self.central_charge().eval(k)
    }

    /// The second form of the central charge, with `s = √(dh^∨/6)` kept formal
    /// (`s² = dh^∨/6`): its `s`-part vanishes and the rest equals `c(k)`.
    pub fn check_alternative_central_charge(&self) -> Result<()> {
        let h = &self.h_dual;
        let d = Rational::int(self.sdim);
        let s2 = &(&d * h) * &Rational::new(1, 6);
        let kh = LevelPolynomial::linear(Rational::one(), h.clone());
        let khf = LevelRationalFunction::from_poly(kh.clone());
        let cst = |c: Rational| LevelRationalFunction::from_poly(LevelPolynomial::constant(c));
        // (k+h−s)² = (k+h)² + s² − 2s(k+h)
        let sq_rational = LevelRationalFunction::from_poly(&(&kh * &kh) + &LevelPolynomial::constant(s2));
        let base = cst(&(&(h * &Rational::int(7)) + &d) - &Rational::int(4));
        let rational_part = base.sub(&cst(Rational::int(6)).mul(&sq_rational.div(&khf)?));
        let s_part = cst(Rational::int(-12)).add(&cst(Rational::int(12)).mul(&khf.div(&khf)?));
        if !s_part.is_zero() || rational_part != self.central_charge() {
            return Err(Error::IdentityFailure(format!("{}: the two central charge formulas differ", self.spec)));
        }
        Ok(())
    }

    /// The other level with the same central charge:
    /// `(k₁+h^∨)(k₂+h^∨) = dh^∨/6`.
    pub fn partner_level(&self, k: &Rational) -> Result<Rational> {
        let h = &self.h_dual;
        let prod = &(&Rational::int(self.sdim) * h) * &Rational::new(1, 6);
        if prod.is_zero() {
            return Err(Error::ZeroProduct);
        }
        let kh = k + h;
        if kh.is_zero() {
            return Err(Error::PoleAtLevel(k.to_string()));
        }
        let k2 = &prod.checked_div(&kh)? - h;
        if &k2 == k {
            return Err(Error::SelfPartner(k.to_string()));
        }
        Ok(k2)
    }

    fn target(&self, zs: &[Rational]) -> String {
        let parts: Vec<String> = self
            .components
            .iter()
            .zip(zs)
            .filter(|(c, z)| c.kind == ComponentKind::Simple && !z.is_zero())
            .map(|(c, z)| format!("V_{}({})", z, c.name()))
            .collect();
        parts.join(" ⊗ ")
    }

    pub fn classify(&self, k: &Rational) -> Result<Classification> {
        let h = &self.h_dual;
        if (k + h).is_zero() {
            return Ok(Classification { level: k.clone(), verdict: UnitarityVerdict::ExcludedLevel, c: None });
        }
        let c = Some(self.central_charge_at(k)?);
        let zs = self.z_at(k);
        let simple_z: Vec<&Rational> =
            self.components.iter().zip(&zs).filter(|(c, _)| c.kind == ComponentKind::Simple).map(|(_, z)| z).collect();
        let collapsing = self.collapsing_poly()?.eval(k).is_zero();
        let verdict = if collapsing {
            if self.has_center() {
                // sl(2|m): z_1 = 0 leaves the Heisenberg algebra, z_0 = 0 leaves V_{z_1}(sl_m)
                if simple_z.iter().all(|z| z.is_zero()) {
                    UnitarityVerdict::CollapsingUnitary(format!("M(Cϖ), level {}", zs[0]))
                } else {
                    UnitarityVerdict::CollapsingNonUnitary(self.target(&zs))
                }
            } else if simple_z.iter().all(|z| z.is_zero()) {
                UnitarityVerdict::Trivial
            } else if simple_z.iter().all(|z| z.is_nonneg_integer()) {
                UnitarityVerdict::CollapsingUnitary(self.target(&zs))
            } else {
                UnitarityVerdict::CollapsingNonUnitary(self.target(&zs))
            }
        } else if !self.has_center() && simple_z.iter().all(|z| z.is_nonneg_integer()) {
            UnitarityVerdict::UnitaryNontrivial
        } else {
            UnitarityVerdict::NonUnitary
        };
        Ok(Classification { level: k.clone(), verdict, c })
    }

    /// The first `count` nontrivially unitary levels from the closed-form
    /// lists, as `(k, c(k))` with `k = −κ`; each is re-checked by [`WData::classify`].
    pub fn unitary_levels(&self, count: usize) -> Result<Vec<(Rational, Rational)>> {
        let kappas = unitary_kappas(&self.spec, count)?;
        let mut out = Vec::with_capacity(kappas.len());
        for kappa in kappas {
            let k = -&kappa;
            let cl = self.classify(&k)?;
            if !cl.verdict.is_nontrivial_unitary() {
                return Err(Error::ConsistencyFailure(format!(
                    "{}: listed level {k} classifies as {}",
                    self.spec,
                    cl.verdict.name()
                )));
            }
            out.push((k, cl.c.expect("not the excluded level")));
        }
        Ok(out)
    }
}

/// `κ` values with `W_{−κ}` nontrivially unitary, from the closed forms.
pub fn unitary_kappas(spec: &AlgebraSpec, count: usize) -> Result<Vec<Rational>> {
    let arith = |start: i64, step: Rational| -> Vec<Rational> {
        (0..count as i64).map(|j| &step * &Rational::int(start + j)).collect()
    };
    let m = spec.m as i64;
    let out = match spec.family {
        Family::Sl2m => vec![Rational::one()].into_iter().take(count).collect(),
        Family::Psl22 => arith(2, Rational::one()),
        Family::Spo2m if m == 3 => arith(3, Rational::new(1, 4)),
        Family::Spo2m if m > 3 => arith(2, Rational::new(1, 2)),
        Family::Spo2m => return Err(Error::AbelianGNatural(spec.to_string())),
        Family::Osp4m => return Err(Error::EmptySet(spec.to_string())),
        Family::F4 => arith(2, Rational::new(2, 3)),
        Family::G3 => arith(2, Rational::new(3, 4)),
        Family::D21a => {
            // a = −m/(m+n): the multiples t(m₀, n₀) of the reduced pair
            let ma = -&spec.a;
            if !ma.is_positive() || ma >= 1 {
                return Err(Error::EmptySet(spec.to_string()));
            }
            let m0 = Rational::from_inner(ma.numer().clone().into());
            let s0 = Rational::from_inner(ma.denom().clone().into());
            let n0 = &s0 - &m0;
            let base = (&m0 * &n0).checked_div(&s0)?;
            let start = if m0 == 1 && n0 == 1 { 2 } else { 1 };
            arith(start, base)
        }
    };
    Ok(out)
}

/// Central charges of the unitary Virasoro (`n=0`), Neveu-Schwarz (`n=1`)
/// and `N=2` (`n=2`) discrete series.
pub fn classical_series(n: u32, p: i64) -> Result<Rational> {
    if p < 2 {
        return Err(Error::BadParameter(format!("p = {p} < 2")));
    }
    let pr = Rational::int(p);
    let one = Rational::one();
    Ok(match n {
        0 => &one - &Rational::new(6, p * (p + 1)),
        1 => &Rational::new(3, 2) * &(&one - &Rational::new(8, p * (p + 2))),
        2 => &Rational::int(3) * &(&one - &Rational::int(2).checked_div(&pr)?),
        _ => return Err(Error::BadParameter(format!("n = {n} not in 0..=2"))),
    })
}

fn natural_decomposition(data: &MinimalData) -> Result<(Subspace<RadicalScalar>, Vec<usize>)> {
    let mut basis = Vec::new();
    let mut owner = Vec::new();
    for (i, c) in data.components.iter().enumerate() {
        for v in &c.basis {
            basis.push(v.clone());
            owner.push(i);
        }
    }
    Ok((Subspace::new(basis)?, owner))
}

fn project(data: &MinimalData, sub: &Subspace<RadicalScalar>, owner: &[usize], v: &[RadicalScalar]) -> Result<Vec<Vector>> {
    let coords = sub.coords(v).ok_or_else(|| Error::WrongSubspace("vector not in 𝔤^♮".into()))?;
    let n = v.len();
    let mut parts = vec![vec![RadicalScalar::zero(); n]; data.components.len()];
    for ((c, b), &i) in coords.iter().zip(&sub.basis).zip(owner) {
        if !c.is_zero() {
            parts[i] = add_vec(&parts[i], &crate::construct::algebra::scale_vec(c, b));
        }
    }
    Ok(parts)
}

/// `β_k(a,b) = Σ_i (k + (h^∨ − h̄_i)/2)(a_i|b_i)` on `𝔤^♮`.
pub fn beta_form(
    alg: &Algebra,
    data: &MinimalData,
    wd: &WData,
    k: &Rational,
    a: &[RadicalScalar],
    b: &[RadicalScalar],
) -> Result<RadicalScalar> {
    let (sub, owner) = natural_decomposition(data)?;
    let pa = project(data, &sub, &owner, a)?;
    let pb = project(data, &sub, &owner, b)?;
    let mut acc = RadicalScalar::zero();
    for (i, comp) in wd.components.iter().enumerate() {
        let coef = k + &(&(&wd.h_dual - &comp.hbar) * &Rational::new(1, 2));
        let f = alg.alg.form_vec(&pa[i], &pb[i]);
        acc = &acc + &(&RadicalScalar::from_rational(coef) * &f);
    }
    Ok(acc)
}

/// Killing form of `𝔤_0`.
pub fn killing_g0(alg: &Algebra, data: &MinimalData, a: &[RadicalScalar], b: &[RadicalScalar]) -> Result<RadicalScalar> {
    let g0 = Subspace::new(data.grading.space(&Rational::zero()).to_vec())?;
    for v in [a, b] {
        if !g0.contains(v) {
            return Err(Error::WrongSubspace("vector not in 𝔤_0".into()));
        }
    }
    let mut t = RadicalScalar::zero();
    for (j, bj) in g0.basis.iter().enumerate() {
        let img = alg.alg.bracket(a, &alg.alg.bracket(b, bj));
        let c = g0.coords(&img).ok_or_else(|| Error::ConsistencyFailure("𝔤_0 not closed".into()))?;
        t = &t + &c[j];
    }
    Ok(t)
}

/// `α_k(a,b) = (k+h^∨)(a|b) − ½κ_{𝔤_0}(a,b)` on `𝔤_0`.
pub fn alpha_form(
    alg: &Algebra,
    data: &MinimalData,
    wd: &WData,
    k: &Rational,
    a: &[RadicalScalar],
    b: &[RadicalScalar],
) -> Result<RadicalScalar> {
    let kappa = killing_g0(alg, data, a, b)?;
    let kh = RadicalScalar::from_rational(k + &wd.h_dual);
    let half = RadicalScalar::from_rational(Rational::new(1, 2));
    Ok(&(&kh * &alg.alg.form_vec(a, b)) - &(&half * &kappa))
}

/// Checks `β_k = z_i(k)(·|·)^♮_i` and `α_k = (z_i+χ_i)(·|·)^♮_i` on every
/// component, `β_k = 0` across components and `α_k(x,x) = (k+h^∨)/2`,
/// where `(·|·)^♮_i = (u_i/2)(·|·)`. Returns the number of pairs checked.
pub fn check_level_forms(alg: &Algebra, data: &MinimalData, wd: &WData, k: &Rational) -> Result<usize> {
    let mut count = 0;
    let fail = |what: &str| Err(Error::IdentityFailure(format!("{}: {what} at k = {k}", wd.spec)));
    for (i, ci) in data.components.iter().enumerate() {
        let cd = &wd.components[i];
        let norm = &cd.u * &Rational::new(1, 2);
        let zb = RadicalScalar::from_rational(&cd.z.eval(k) * &norm);
        let za = RadicalScalar::from_rational(&(&cd.z.eval(k) + &cd.chi) * &norm);
        for a in &ci.basis {
            for (j, cj) in data.components.iter().enumerate() {
                for b in &cj.basis {
                    let beta = beta_form(alg, data, wd, k, a, b)?;
                    let alpha = alpha_form(alg, data, wd, k, a, b)?;
                    let f = alg.alg.form_vec(a, b);
                    if i == j {
                        if beta != &zb * &f {
                            return fail("β_k ≠ z_i(·|·)^♮");
                        }
                        if alpha != &za * &f {
                            return fail("α_k ≠ (z_i+χ_i)(·|·)^♮");
                        }
                    } else if !beta.is_zero() || !alpha.is_zero() {
                        return fail("forms do not vanish across components");
                    }
                    count += 1;
                }
            }
        }
    }
    let x = &data.triple.x;
    let want = RadicalScalar::from_rational(&(k + &wd.h_dual) * &Rational::new(1, 2));
    if alpha_form(alg, data, wd, k, x, x)? != want {
        return fail("α_k(x,x) ≠ (k+h^∨)/2");
    }
    Ok(count + 1)
}

/// `G^{u}_{(2)}G^{v} = 4(e|[u,v])p(k)` with the monic `p`.
pub fn g_self_bracket_constant(
    alg: &Algebra,
    triple: &Sl2Triple,
    wd: &WData,
    k: &Rational,
    u: &[RadicalScalar],
    v: &[RadicalScalar],
) -> Result<RadicalScalar> {
    let pair = halfform::pair(alg, triple, u, v).map_err(|e| match e {
        Error::WrongGrade(m) => Error::WrongSubspace(m),
        e => e,
    })?;
    let p = wd.collapsing_poly()?.eval(k);
    Ok(&RadicalScalar::from_rational(&Rational::int(4) * &p) * &pair)
}
