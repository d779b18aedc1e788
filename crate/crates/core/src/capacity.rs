//! Capacities of toric domains.
//!
//! Values are exact where a closed form is available (ellipsoids, balls,
//! `N(a)`, one-dimensional shapes) and otherwise reported as the interval
//! cut out by the sandwich `B(δ) ⊂ X_Ω ⊂ N(δ)`. Curve-counting capacities
//! (`g_k`, `g̃_k`) are never computed from curves; they are reported as the
//! bounds the comparison theorems force, together with the hypotheses those
//! theorems need.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::domain::{DomainClass, Ellipsoid, Shape, ToricDomain};
use crate::error::{Error, Result};
use crate::rational::{ExtRational, Rational};
use crate::reeb::{self, ReebOrbit};

pub const HYP_ASSUMPTION: &str = "under virtual perturbation scheme assumption";
pub const HYP_UNCONDITIONAL: &str = "unconditional";
pub const HYP_STAR_SHAPED: &str = "star-shaped";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CapacityKind {
    #[serde(rename = "cgh")]
    Cgh,
    #[serde(rename = "csh")]
    Csh,
    #[serde(rename = "cP")]
    CP,
    #[serde(rename = "cL")]
    CL,
    #[serde(rename = "g")]
    G,
    #[serde(rename = "gtilde")]
    GTilde,
}

impl CapacityKind {
    pub fn name(self) -> &'static str {
        match self {
            CapacityKind::Cgh => "cgh",
            CapacityKind::Csh => "csh",
            CapacityKind::CP => "cP",
            CapacityKind::CL => "cL",
            CapacityKind::G => "g",
            CapacityKind::GTilde => "gtilde",
        }
    }

    /// Whether the capacity is indexed by `k ≥ 1`.
    pub fn is_graded(self) -> bool {
        !matches!(self, CapacityKind::CP | CapacityKind::CL)
    }
}

impl fmt::Display for CapacityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for CapacityKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "cgh" => CapacityKind::Cgh,
            "csh" => CapacityKind::Csh,
            "cP" | "cp" => CapacityKind::CP,
            "cL" | "cl" => CapacityKind::CL,
            "g" => CapacityKind::G,
            "gtilde" => CapacityKind::GTilde,
            other => {
                return Err(Error::InvalidParameter(format!(
                    "unknown capacity kind {other:?} (expected cgh, csh, cP, cL, g, gtilde)"
                )))
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CapacityReport {
    pub kind: CapacityKind,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
    pub lower: ExtRational,
    pub upper: ExtRational,
    pub exact: bool,
    pub hypotheses: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness_orbit: Option<ReebOrbit>,
}

impl CapacityReport {
    fn exact(kind: CapacityKind, k: Option<usize>, value: Rational, hypotheses: Vec<String>) -> Self {
        let v = ExtRational::Finite(value);
        CapacityReport {
            kind,
            k,
            lower: v.clone(),
            upper: v,
            exact: true,
            hypotheses,
            witness_orbit: None,
        }
    }

    fn interval(
        kind: CapacityKind,
        k: Option<usize>,
        lower: Rational,
        upper: Rational,
        hypotheses: Vec<String>,
    ) -> Result<Self> {
        if lower > upper {
            return Err(Error::Inconsistent(format!(
                "{kind} bounds cross: lower {lower} > upper {upper}"
            )));
        }
        let exact = lower == upper;
        Ok(CapacityReport {
            kind,
            k,
            lower: ExtRational::Finite(lower),
            upper: ExtRational::Finite(upper),
            exact,
            hypotheses,
            witness_orbit: None,
        })
    }

    /// The value when `exact`.
    pub fn value(&self) -> Option<&Rational> {
        if self.exact {
            self.lower.finite()
        } else {
            None
        }
    }

    pub fn lower_finite(&self) -> &Rational {
        self.lower.finite().expect("capacity lower bound is finite")
    }

    pub fn upper_finite(&self) -> &Rational {
        self.upper.finite().expect("capacity upper bound is finite")
    }
}

/// Exponential-form constants of the Lagrangian-capacity estimate:
/// `s₁ = 2`, `s₂ = 1 + a/(εk)`, `s = max(s₁, s₂)`, `δ = 1/s`, `ℓ₀ = a·s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmConstants {
    pub a: Rational,
    pub eps: Rational,
    pub k: u64,
    pub s1: Rational,
    pub s2: Rational,
    pub s: Rational,
    pub delta: Rational,
    pub ell0: Rational,
    /// `(s/(s−1))·(a/k)`.
    pub lhs: Rational,
    /// `a/k + ε`.
    pub rhs: Rational,
    pub equality: bool,
}

fn require_k(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    Ok(())
}

fn require_supported(omega: &ToricDomain) -> Result<()> {
    if omega.class() == DomainClass::Unknown {
        return Err(Error::UnsupportedDomain(format!(
            "{} is neither convex nor concave; capacities are supported for convex or concave toric domains only",
            omega.kind_name()
        )));
    }
    Ok(())
}

/// `cgh_k(N(a)) = a(k + n − 1)`.
pub fn cgh_ncylinders(a: &Rational, n: usize, k: usize) -> Rational {
    a * Rational::from(k + n - 1)
}

/// The `k`-th smallest element, with multiplicity, of `{m·aᵢ}`.
pub fn cgh_ellipsoid(e: &Ellipsoid, k: usize) -> Rational {
    assert!(k >= 1, "k must be at least 1");
    let (action, _, _) = reeb::first_actions(e, k).pop().expect("k >= 1");
    action
}

/// The orbit realizing [`cgh_ellipsoid`].
pub fn cgh_witness(e: &Ellipsoid, k: usize) -> ReebOrbit {
    let (_, j, m) = reeb::first_actions(e, k).pop().expect("k >= 1");
    reeb::orbit(e, j, m)
}

/// Minimal action of an orbit of index `n − 1 + 2k`. This is a second route
/// to `cgh_k` that agrees with the spectrum sort when no resonance occurs.
pub fn min_action_in_degree(e: &Ellipsoid, k: usize) -> Option<Rational> {
    let d = e.dim() as i64 - 1 + 2 * k as i64;
    // γ₁¹, …, γ₁ᵏ all have action ≤ k·a₁, so the answer lies below that cap.
    let cap = Rational::from(k) * e.axis(1);
    reeb::orbits_with_cz(e, d, &cap).into_iter().map(|o| o.action).min()
}

/// Step count `K = L·Σ 1/aᵢ` at which `cgh_K / K = δ`, where `L` is the
/// least common multiple of the axes.
pub fn squeeze_witness_k(e: &Ellipsoid) -> Option<u64> {
    let l = Rational::common_multiple(e.axes())?;
    let k: Rational = e.axes().iter().map(|a| &l / a).sum();
    k.to_i64().and_then(|v| u64::try_from(v).ok())
}

fn cgh_report(omega: &ToricDomain, k: usize, kind: CapacityKind) -> Result<CapacityReport> {
    require_k(k)?;
    require_supported(omega)?;
    if let Some(e) = omega.to_ellipsoid() {
        let witness = cgh_witness(&e, k);
        let mut r = CapacityReport::exact(
            kind,
            Some(k),
            witness.action.clone(),
            vec!["ellipsoid: k-th element of the action spectrum".into()],
        );
        r.witness_orbit = Some(witness);
        return Ok(r);
    }
    if let Shape::NCylinders(a) = omega.shape() {
        return Ok(CapacityReport::exact(
            kind,
            Some(k),
            cgh_ncylinders(a, omega.dim(), k),
            vec!["closed form a(k+n-1)".into()],
        ));
    }
    let n = omega.dim();
    let delta = omega.diagonal()?;
    let lower = &delta * Rational::from(k.div_ceil(n));
    let upper = cgh_ncylinders(&delta, n, k);
    CapacityReport::interval(
        kind,
        Some(k),
        lower,
        upper,
        vec!["monotonicity: B(delta) inside X inside N(delta)".into()],
    )
}

/// `cgh_k`, exact for ellipsoids and `N(a)`, otherwise
/// `[δ⌈k/n⌉, δ(k+n−1)]`.
pub fn cgh_bounds_toric(omega: &ToricDomain, k: usize) -> Result<CapacityReport> {
    cgh_report(omega, k, CapacityKind::Cgh)
}

/// `csh_k`, which equals `cgh_k` on star-shaped domains.
pub fn csh(omega: &ToricDomain, k: usize) -> Result<CapacityReport> {
    let mut r = cgh_report(omega, k, CapacityKind::Csh)?;
    r.hypotheses.insert(0, HYP_STAR_SHAPED.into());
    Ok(r)
}

pub fn c_p_toric(omega: &ToricDomain) -> Result<CapacityReport> {
    require_supported(omega)?;
    Ok(CapacityReport::exact(
        CapacityKind::CP,
        None,
        omega.diagonal()?,
        vec![
            "convex or concave toric: c_P = delta (Gutt-Hutchings)".into(),
            "c_P >= delta since P(delta) lies in X".into(),
        ],
    ))
}

fn c_l_unconditional(omega: &ToricDomain) -> bool {
    omega.dim() == 1
        || (omega.dim() == 2 && omega.class().is_convex())
        || matches!(omega.shape(), Shape::Ball(_) | Shape::Cylinder(_))
}

/// `c_L = δ`, unconditional for four-dimensional convex domains and for
/// balls and cylinders, otherwise conditional on the perturbation scheme.
pub fn c_l(omega: &ToricDomain) -> Result<CapacityReport> {
    require_supported(omega)?;
    let delta = omega.diagonal()?;
    if let Some(e) = omega.as_ellipsoid() {
        let inv: Rational = e.axes().iter().map(Rational::recip).sum();
        if inv.recip() != delta {
            return Err(Error::AssertionFailure(format!(
                "diagonal {delta} differs from (sum 1/a_i)^-1 = {}",
                inv.recip()
            )));
        }
    }
    let hyp = if c_l_unconditional(omega) { HYP_UNCONDITIONAL } else { HYP_ASSUMPTION };
    Ok(CapacityReport::exact(CapacityKind::CL, None, delta, vec![hyp.into()]))
}

/// Reports for `g_k` and `g̃_k`: `g_k = cgh_k` and
/// `kδ ≤ g̃_k ≤ g_k`.
pub fn g_and_gtilde_bounds(
    omega: &ToricDomain,
    k: usize,
) -> Result<(CapacityReport, CapacityReport)> {
    let cgh = cgh_bounds_toric(omega, k)?;
    let delta = omega.diagonal()?;
    let four_dim_convex = omega.dim() == 2 && omega.class().is_convex() && omega.is_bounded();

    let mut g = cgh.clone();
    g.kind = CapacityKind::G;
    g.hypotheses.insert(0, HYP_ASSUMPTION.into());

    let mut lower = Rational::from(k) * &delta;
    let mut hyps = vec![
        "lower: k*c_L <= gtilde_k with c_L >= delta".into(),
        "upper: gtilde_k <= g_k = cgh_k".into(),
    ];
    if four_dim_convex {
        lower = lower.max(cgh.lower_finite().clone());
        hyps.push("4-dim convex: gtilde_k = cgh_k (McDuff-Siegel)".into());
    } else {
        hyps.insert(0, HYP_ASSUMPTION.into());
    }
    let mut gt = CapacityReport::interval(
        CapacityKind::GTilde,
        Some(k),
        lower,
        cgh.upper_finite().clone(),
        hyps,
    )?;
    if gt.exact {
        gt.witness_orbit = cgh.witness_orbit.clone();
    }
    Ok((g, gt))
}

/// Every capacity for one `(Ω, k)`; `k` is ignored by ungraded kinds.
pub fn capacity(omega: &ToricDomain, kind: CapacityKind, k: usize) -> Result<CapacityReport> {
    match kind {
        CapacityKind::Cgh => cgh_bounds_toric(omega, k),
        CapacityKind::Csh => csh(omega, k),
        CapacityKind::CP => c_p_toric(omega),
        CapacityKind::CL => c_l(omega),
        CapacityKind::G => g_and_gtilde_bounds(omega, k).map(|p| p.0),
        CapacityKind::GTilde => g_and_gtilde_bounds(omega, k).map(|p| p.1),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SqueezeRow {
    pub k: usize,
    /// Lower bound on `g̃_k / k`.
    pub gtilde_lower_over_k: Rational,
    /// Bounds on `g_k / k = cgh_k / k`.
    pub cgh_lower_over_k: Rational,
    pub cgh_upper_over_k: Rational,
    pub cgh_exact: bool,
    /// `cgh_k(N(δ)) / k = δ(k+n−1)/k`.
    pub ncyl_over_k: Rational,
    /// `δ(n−1)/k`.
    pub gap: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SqueezeReport {
    pub n: usize,
    pub delta: Rational,
    pub c_p: Rational,
    pub c_l: Rational,
    pub hypotheses: Vec<String>,
    pub rows: Vec<SqueezeRow>,
    /// Smallest computed upper bound on `c_L`, `min_k cgh_k/k`.
    pub infimum: Rational,
    /// Smallest `k` attaining [`Self::infimum`].
    pub attained_k: usize,
    /// `infimum = δ`.
    pub closed: bool,
}

/// Checks `δ ≤ c_P ≤ c_L ≤ g̃_k/k ≤ g_k/k = cgh_k/k ≤ δ(k+n−1)/k` for
/// `k = 1..=k_max` and reports the best upper bound.
pub fn verify_squeeze(omega: &ToricDomain, k_max: usize) -> Result<SqueezeReport> {
    require_k(k_max)?;
    require_supported(omega)?;
    let n = omega.dim();
    let delta = omega.diagonal()?;
    let c_p = c_p_toric(omega)?.lower_finite().clone();
    let cl = c_l(omega)?;
    let c_l_value = cl.lower_finite().clone();
    let fail = |what: String| Err(Error::Inconsistent(what));
    if !(delta <= c_p && c_p <= c_l_value) {
        return fail(format!("delta {delta} <= c_P {c_p} <= c_L {c_l_value}"));
    }

    let spectrum = omega.to_ellipsoid().map(|e| reeb::first_actions(&e, k_max));
    let mut rows = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        let kr = Rational::from(k);
        let (cgh_lower, cgh_upper, cgh_exact) = match (&spectrum, omega.shape()) {
            (Some(sp), _) => (sp[k - 1].0.clone(), sp[k - 1].0.clone(), true),
            (None, Shape::NCylinders(a)) => {
                let v = cgh_ncylinders(a, n, k);
                (v.clone(), v, true)
            }
            _ => {
                let r = cgh_bounds_toric(omega, k)?;
                (r.lower_finite().clone(), r.upper_finite().clone(), r.exact)
            }
        };
        let ncyl = cgh_ncylinders(&delta, n, k);
        let gtilde_lower = &kr * &delta;
        if c_l_value > &cgh_upper / &kr {
            return fail(format!("c_L {c_l_value} > cgh_{k}/k upper {}", &cgh_upper / &kr));
        }
        if cgh_exact && gtilde_lower > cgh_upper {
            return fail(format!("k*delta {gtilde_lower} > cgh_{k} {cgh_upper}"));
        }
        if cgh_upper > ncyl {
            return fail(format!("cgh_{k} upper {cgh_upper} > delta(k+n-1) = {ncyl}"));
        }
        rows.push(SqueezeRow {
            k,
            gtilde_lower_over_k: &gtilde_lower / &kr,
            cgh_lower_over_k: &cgh_lower / &kr,
            cgh_upper_over_k: &cgh_upper / &kr,
            cgh_exact,
            ncyl_over_k: &ncyl / &kr,
            gap: &delta * Rational::from(n - 1) / &kr,
        });
    }
    let best = rows
        .iter()
        .min_by(|a, b| a.cgh_upper_over_k.cmp(&b.cgh_upper_over_k).then(a.k.cmp(&b.k)))
        .expect("k_max >= 1");
    let infimum = best.cgh_upper_over_k.clone();
    let attained_k = best.k;
    Ok(SqueezeReport {
        n,
        closed: infimum == delta,
        delta,
        c_p,
        c_l: c_l_value,
        hypotheses: cl.hypotheses,
        rows,
        infimum,
        attained_k,
    })
}

/// Constants of the Lagrangian-capacity estimate, with its final
/// inequality `(s/(s−1))(a/k) ≤ a/k + ε` checked exactly.
pub fn cm_constants(a: &Rational, eps: &Rational, k: u64) -> Result<CmConstants> {
    if !a.is_positive() || !eps.is_positive() {
        return Err(Error::InvalidParameter(format!(
            "a = {a} and eps = {eps} must both be positive"
        )));
    }
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let kr = Rational::from(k);
    let s1 = Rational::from(2);
    let s2 = Rational::one() + a / (eps * &kr);
    let s = s1.clone().max(s2.clone());
    let delta = s.recip();
    let ell0 = a * &s;
    let a_over_k = a / &kr;
    let lhs = &s / (&s - Rational::one()) * &a_over_k;
    let rhs = &a_over_k + eps;
    if lhs > rhs {
        return Err(Error::Inconsistent(format!("(s/(s-1))(a/k) = {lhs} > a/k + eps = {rhs}")));
    }
    let equality = lhs == rhs;
    if equality != (s == s2) {
        return Err(Error::Inconsistent("equality case does not match s = s2".into()));
    }
    Ok(CmConstants { a: a.clone(), eps: eps.clone(), k, s1, s2, s, delta, ell0, lhs, rhs, equality })
}
