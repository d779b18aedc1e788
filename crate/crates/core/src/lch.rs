//! Linearized contact homology of ellipsoids.
//!
//! Every Reeb orbit of `∂E(a₁, …, aₙ)` is good and has index of parity
//! `n − 1`, while the differential has degree `−1`; so the differential
//! vanishes and homology equals the chain complex. Only that certificate is
//! represented, never a curve count for the differential.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::capacity;
use crate::domain::Ellipsoid;
use crate::error::{Error, Result};
use crate::index::{self, CurveSetup};
use crate::rational::Rational;
use crate::reeb::{self, ReebOrbit, SpectrumQuery};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityCertificate {
    pub all_degrees_same_parity: bool,
    /// Common parity of the degrees, `(n − 1) mod 2`.
    pub parity: i64,
    pub all_good: bool,
    pub differential_vanishes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainComplexSummary {
    pub ellipsoid: Ellipsoid,
    pub action_cap: Rational,
    pub generators_by_degree: BTreeMap<i64, Vec<ReebOrbit>>,
    pub certificate: ParityCertificate,
}

impl ChainComplexSummary {
    pub fn rank(&self, degree: i64) -> usize {
        self.generators_by_degree.get(&degree).map_or(0, Vec::len)
    }

    pub fn num_generators(&self) -> usize {
        self.generators_by_degree.values().map(Vec::len).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AugmentationResult {
    pub k: usize,
    pub witness_orbit: ReebOrbit,
    /// Count of planes through the witness with the tangency constraint.
    /// `None` when no count is proved for this ellipsoid.
    pub curve_count: Option<i64>,
    pub marker_weighted_count: Option<Rational>,
    pub value_nonzero: bool,
    /// `k·a₁ < a₂ < … < aₙ`.
    pub hypothesis_met: bool,
    pub provenance: String,
}

/// Generators of `CC^a(E)` grouped by degree, with the vanishing certificate.
pub fn lch_table(e: &Ellipsoid, action_cap: &Rational) -> ChainComplexSummary {
    let parity = (e.dim() as i64 - 1).rem_euclid(2);
    let mut generators_by_degree: BTreeMap<i64, Vec<ReebOrbit>> = BTreeMap::new();
    let mut same_parity = true;
    let mut all_good = true;
    if action_cap.is_positive() {
        for o in reeb::enumerate(e, &SpectrumQuery::MaxAction(action_cap.clone())) {
            same_parity &= o.cz.rem_euclid(2) == parity;
            all_good &= o.good;
            generators_by_degree.entry(o.cz).or_default().push(o);
        }
    }
    ChainComplexSummary {
        ellipsoid: e.clone(),
        action_cap: action_cap.clone(),
        generators_by_degree,
        certificate: ParityCertificate {
            all_degrees_same_parity: same_parity,
            parity,
            all_good,
            differential_vanishes: same_parity && all_good,
        },
    }
}

/// Rank of `CH^a_d(E)`.
pub fn lch_rank(e: &Ellipsoid, degree: i64, action_cap: &Rational) -> usize {
    reeb::orbits_with_cz(e, degree, action_cap).len()
}

/// `k·a₁ < a₂ < … < aₙ`.
pub fn augmentation_hypothesis(e: &Ellipsoid, k: usize) -> bool {
    let axes = e.axes();
    let first = Rational::from(k) * &axes[0];
    let mut prev = &first;
    for a in &axes[1..] {
        if a <= prev {
            return false;
        }
        prev = a;
    }
    true
}

/// The augmentation `ε_k` on the degree `n − 1 + 2k` part of `CH(E)`.
pub fn augmentation(e: &Ellipsoid, k: usize) -> Result<AugmentationResult> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let n = e.dim();
    let degree = n as i64 - 1 + 2 * k as i64;
    if augmentation_hypothesis(e, k) {
        let witness = reeb::orbit(e, 1, k as u64);
        if witness.cz != degree {
            return Err(Error::AssertionFailure(format!(
                "gamma_1^{k} has index {} instead of {degree}",
                witness.cz
            )));
        }
        // The moduli space of planes on γ₁ᵏ with tangency order k is rigid.
        let setup = CurveSetup::new(n as u32, 0, vec![witness.cz], vec![], 0, 0)?;
        let dim = index::virtual_dim_tangency(&setup, k as u32);
        if dim != 0 {
            return Err(Error::AssertionFailure(format!(
                "moduli space of planes on gamma_1^{k} has dimension {dim}"
            )));
        }
        return Ok(AugmentationResult {
            k,
            witness_orbit: witness,
            curve_count: Some(1),
            marker_weighted_count: Some(index::marker_count(&[k as u64], 1)),
            value_nonzero: true,
            hypothesis_met: true,
            provenance: "unique rigid plane with tangency order k".into(),
        });
    }
    let cap = Rational::from(k) * e.axis(1);
    let resonance_free = reeb::nondegeneracy_report(e, &cap).is_empty();
    let by_degree = reeb::orbits_with_cz(e, degree, &cap).into_iter().next();
    let (witness, provenance) = match by_degree {
        Some(o) if resonance_free => (
            o,
            "extrapolated via g_k = cgh_k: minimal-action generator in degree n-1+2k",
        ),
        _ => (
            capacity::cgh_witness(e, k),
            "extrapolated via g_k = cgh_k: resonant ellipsoid, k-th orbit of the action spectrum",
        ),
    };
    Ok(AugmentationResult {
        k,
        witness_orbit: witness,
        curve_count: None,
        marker_weighted_count: None,
        value_nonzero: true,
        hypothesis_met: false,
        provenance: provenance.into(),
    })
}

/// `g_k(E)`: the least action of a generator on which `ε_k` is nonzero,
/// checked against `cgh_k(E)`.
pub fn g_k_from_lch(e: &Ellipsoid, k: usize) -> Result<Rational> {
    let value = augmentation(e, k)?.witness_orbit.action;
    let cgh = capacity::cgh_ellipsoid(e, k);
    if value != cgh {
        return Err(Error::AssertionFailure(format!(
            "g_{k} = {value} from the augmentation but cgh_{k} = {cgh}"
        )));
    }
    Ok(value)
}
