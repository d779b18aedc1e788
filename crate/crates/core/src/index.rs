//! Index arithmetic for punctured holomorphic curves.
//!
//! Everything here is integer bookkeeping relative to one implicit
//! trivialization `τ`: callers supply `c₁^τ` and the Conley–Zehnder indices
//! of the asymptotic orbits. Moduli spaces in a symplectization carry an
//! extra `ℝ`-action; [`virtual_dim_tangency`] does not subtract it.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Asymptotic data of a punctured curve in a target of complex dimension `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CurveSetupSpec", into = "CurveSetupSpec")]
pub struct CurveSetup {
    n: u32,
    genus: u32,
    cz_pos: Vec<i64>,
    cz_neg: Vec<i64>,
    c1_tau: i64,
    even_punctures: u32,
    tangency_k: u32,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CurveSetupSpec {
    n: u32,
    #[serde(default)]
    genus: u32,
    cz_pos: Vec<i64>,
    #[serde(default)]
    cz_neg: Vec<i64>,
    #[serde(default)]
    c1_tau: i64,
    #[serde(default)]
    even_punctures: u32,
    #[serde(default)]
    tangency_k: u32,
}

impl TryFrom<CurveSetupSpec> for CurveSetup {
    type Error = Error;

    fn try_from(s: CurveSetupSpec) -> Result<Self> {
        CurveSetup::new(s.n, s.genus, s.cz_pos, s.cz_neg, s.c1_tau, s.even_punctures)
            .map(|c| c.with_tangency(s.tangency_k))
    }
}

impl From<CurveSetup> for CurveSetupSpec {
    fn from(c: CurveSetup) -> Self {
        CurveSetupSpec {
            n: c.n,
            genus: c.genus,
            cz_pos: c.cz_pos,
            cz_neg: c.cz_neg,
            c1_tau: c.c1_tau,
            even_punctures: c.even_punctures,
            tangency_k: c.tangency_k,
        }
    }
}

impl CurveSetup {
    pub fn new(
        n: u32,
        genus: u32,
        cz_pos: Vec<i64>,
        cz_neg: Vec<i64>,
        c1_tau: i64,
        even_punctures: u32,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::InconsistentData("target dimension n must be positive".into()));
        }
        if cz_pos.is_empty() {
            return Err(Error::InconsistentData(
                "a curve needs at least one positive puncture".into(),
            ));
        }
        let punctures = cz_pos.len() + cz_neg.len();
        if even_punctures as usize > punctures {
            return Err(Error::InconsistentData(format!(
                "{even_punctures} even punctures but only {punctures} punctures"
            )));
        }
        Ok(CurveSetup { n, genus, cz_pos, cz_neg, c1_tau, even_punctures, tangency_k: 0 })
    }

    pub fn with_tangency(mut self, k: u32) -> Self {
        self.tangency_k = k;
        self
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn cz_pos(&self) -> &[i64] {
        &self.cz_pos
    }

    pub fn cz_neg(&self) -> &[i64] {
        &self.cz_neg
    }

    pub fn c1_tau(&self) -> i64 {
        self.c1_tau
    }

    pub fn even_punctures(&self) -> u32 {
        self.even_punctures
    }

    pub fn tangency_k(&self) -> u32 {
        self.tangency_k
    }

    pub fn num_punctures(&self) -> usize {
        self.cz_pos.len() + self.cz_neg.len()
    }

    /// `χ(Σ̇) = 2 − 2g − #z`.
    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.num_punctures() as i64
    }

    /// Appends a positive puncture.
    pub fn push_positive(&mut self, cz: i64) {
        self.cz_pos.push(cz);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindingData {
    pub alpha_minus: i64,
    pub alpha_plus: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransversalityVerdict {
    pub injective: bool,
    pub surjective: bool,
    pub conclusive: bool,
}

impl TransversalityVerdict {
    fn new(injective: bool, surjective: bool) -> Self {
        TransversalityVerdict { injective, surjective, conclusive: injective || surjective }
    }
}

/// Riemann–Roch: `n·χ(Σ̇) + 2c₁^τ + Σ cz⁺ − Σ cz⁻`.
pub fn fredholm_index(s: &CurveSetup) -> i64 {
    s.n as i64 * s.euler_characteristic() + 2 * s.c1_tau + s.cz_pos.iter().sum::<i64>()
        - s.cz_neg.iter().sum::<i64>()
}

/// Virtual dimension of the moduli space with a tangency constraint of
/// order `k` at a point; `k = 0` means no constraint.
pub fn virtual_dim_tangency(s: &CurveSetup, k: u32) -> i64 {
    let n = s.n as i64;
    let p_pos = s.cz_pos.len() as i64;
    let p_neg = s.cz_neg.len() as i64;
    let base = (n - 3) * (2 - p_pos - p_neg) + s.c1_tau + s.cz_pos.iter().sum::<i64>()
        - s.cz_neg.iter().sum::<i64>();
    if k == 0 {
        base
    } else {
        base - (2 * n + 2 * k as i64 - 4)
    }
}

/// `cz = 2α₋ + p = 2α₊ − p` with parity `p = α₊ − α₋`.
pub fn cz_from_winding(w: WindingData) -> Result<i64> {
    let p = w.alpha_plus - w.alpha_minus;
    if p != 0 && p != 1 {
        return Err(Error::InvalidWinding(p));
    }
    let cz = 2 * w.alpha_minus + p;
    assert_eq!(cz, 2 * w.alpha_plus - p);
    Ok(cz)
}

/// Adjusted first Chern number of a rank-one problem:
/// `2c₁ = ind − 2 − 2g + #z₀`.
pub fn adjusted_chern_rank1(ind: i64, genus: u32, num_even: u32) -> Result<Rational> {
    let twice = ind - 2 - 2 * genus as i64 + num_even as i64;
    if twice.rem_euclid(2) != 0 {
        return Err(Error::InconsistentData(format!(
            "ind - 2 - 2g + #z0 = {twice} is odd"
        )));
    }
    Ok(Rational::from(twice / 2))
}

/// Wendl's criterion for a rank-one Cauchy–Riemann operator.
pub fn wendl_criterion(ind: i64, c1_adj: i64) -> TransversalityVerdict {
    TransversalityVerdict::new(ind <= 0 && c1_adj < 0, ind >= 0 && c1_adj < ind)
}

/// The genus-zero case with only odd punctures.
pub fn genus0_odd_criterion(ind: i64) -> TransversalityVerdict {
    TransversalityVerdict::new(ind <= 0, ind >= 0)
}

/// Conley–Zehnder index of `t ↦ exp(t J₀ S)`, `t ∈ [0, T]`, for a symmetric
/// nondegenerate `2×2` matrix `S`. Eigenvalues are given in units of `2π`,
/// so that the rotation ratio is `r = √(λ₁λ₂)·T`.
pub fn gutt_cz(eigen1: &Rational, eigen2: &Rational, signature: i64, t: &Rational) -> Result<i64> {
    let bad_signature = || Error::InvalidSignature {
        signature,
        eigen1: eigen1.to_string(),
        eigen2: eigen2.to_string(),
    };
    if !t.is_positive() {
        return Err(Error::DegeneratePath(format!("period {t} is not positive")));
    }
    let consistent = match signature {
        2 => eigen1.is_positive() && eigen2.is_positive(),
        -2 => eigen1.is_negative() && eigen2.is_negative(),
        0 => (eigen1 * eigen2).is_negative(),
        _ => false,
    };
    if !consistent {
        return Err(bad_signature());
    }
    if signature == 0 {
        return Ok(0);
    }
    let product = eigen1 * eigen2;
    let root = product
        .sqrt_exact()
        .ok_or_else(|| Error::IrrationalEigenvalue(product.to_string()))?;
    gutt_cz_from_ratio(&(root * t), signature)
}

/// [`gutt_cz`] with the rotation ratio `r` supplied directly.
pub fn gutt_cz_from_ratio(r: &Rational, signature: i64) -> Result<i64> {
    match signature {
        0 => Ok(0),
        2 | -2 => {
            if r.is_integer() {
                return Err(Error::DegeneratePath(r.to_string()));
            }
            let fl = r.floor_i64().expect("rotation ratio overflows i64");
            Ok((1 + 2 * fl) * signature / 2)
        }
        _ => Err(Error::InvalidSignature {
            signature,
            eigen1: "?".into(),
            eigen2: "?".into(),
        }),
    }
}

/// Curves with asymptotic markers per unmarked curve: `Π m(γ) / |Aut(u)|`.
pub fn marker_count(multiplicities: &[u64], aut_order: u64) -> Rational {
    assert!(aut_order >= 1, "automorphism group order must be positive");
    assert!(multiplicities.iter().all(|&m| m >= 1), "multiplicities must be positive");
    let prod: Rational = multiplicities.iter().map(|&m| Rational::from(m)).product();
    prod / Rational::from(aut_order)
}
