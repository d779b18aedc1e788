//! Reeb orbits on the boundary of an ellipsoid `E(a₁, …, aₙ)`.
//!
//! The simple orbits are the coordinate circles `γⱼ`; the iterate `γⱼᵐ` has
//! action `m·aⱼ` and Conley–Zehnder index `n − 1 + 2 Σᵢ ⌊m·aⱼ / aᵢ⌋`. The
//! index formula is only meaningful when no ratio `m·aⱼ / aᵢ` (`i ≠ j`) is an
//! integer; with rational axes such resonances do occur, and the affected
//! orbits are flagged `degenerate` while the same formula is still
//! evaluated.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::domain::Ellipsoid;
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ReebOrbit {
    /// 1-based axis index `j`.
    pub axis: usize,
    pub multiplicity: u64,
    pub action: Rational,
    pub cz: i64,
    pub degenerate: bool,
    pub good: bool,
}

impl ReebOrbit {
    /// `γⱼᵐ` as a short label.
    pub fn label(&self) -> String {
        format!("gamma_{}^{}", self.axis, self.multiplicity)
    }

    fn sort_key(&self) -> (&Rational, usize, u64) {
        (&self.action, self.axis, self.multiplicity)
    }
}

/// Either an action cap or a number of orbits; both must be positive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectrumQuery {
    MaxAction(Rational),
    MaxCount(usize),
}

impl SpectrumQuery {
    pub fn max_action(cap: Rational) -> Result<Self> {
        if !cap.is_positive() {
            return Err(Error::InvalidDomain(format!("action cap {cap} is not positive")));
        }
        Ok(SpectrumQuery::MaxAction(cap))
    }

    pub fn max_count(count: usize) -> Result<Self> {
        if count == 0 {
            return Err(Error::InvalidDomain("orbit count must be positive".into()));
        }
        Ok(SpectrumQuery::MaxCount(count))
    }
}

/// A triple `(j, m, i)` with `i ≠ j` and `m·aⱼ / aᵢ ∈ ℤ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Resonance {
    pub axis: usize,
    pub multiplicity: u64,
    pub other_axis: usize,
}

/// `Σᵢ ⌊m·aⱼ / aᵢ⌋`, including the `i = j` term `m`.
fn floor_sum(e: &Ellipsoid, j: usize, m: u64) -> i64 {
    let period = Rational::from(m) * e.axis(j);
    e.axes()
        .iter()
        .map(|ai| {
            (&period / ai)
                .floor_i64()
                .expect("Conley-Zehnder floor term overflows i64")
        })
        .sum()
}

fn resonant(e: &Ellipsoid, j: usize, m: u64) -> bool {
    let period = Rational::from(m) * e.axis(j);
    (1..=e.dim()).any(|i| i != j && (&period / e.axis(i)).is_integer())
}

/// Conley–Zehnder index of `γⱼᵐ`.
pub fn conley_zehnder(e: &Ellipsoid, j: usize, m: u64) -> i64 {
    e.dim() as i64 - 1 + 2 * floor_sum(e, j, m)
}

/// An orbit is bad when its index differs in parity from that of the
/// underlying simple orbit.
pub fn is_bad(cz_simple: i64, cz_iterate: i64) -> bool {
    (cz_iterate - cz_simple).rem_euclid(2) == 1
}

/// The orbit `γⱼᵐ`. Panics unless `1 ≤ j ≤ n` and `m ≥ 1`.
pub fn orbit(e: &Ellipsoid, j: usize, m: u64) -> ReebOrbit {
    assert!((1..=e.dim()).contains(&j), "axis {j} out of range 1..={}", e.dim());
    assert!(m >= 1, "multiplicity must be positive");
    let cz = conley_zehnder(e, j, m);
    let cz_simple = conley_zehnder(e, j, 1);
    ReebOrbit {
        axis: j,
        multiplicity: m,
        action: Rational::from(m) * e.axis(j),
        cz,
        degenerate: resonant(e, j, m),
        good: !is_bad(cz_simple, cz),
    }
}

/// Number of orbits with action `≤ cap`, i.e. `Σⱼ ⌊cap / aⱼ⌋`.
pub fn count_below(e: &Ellipsoid, cap: &Rational) -> u128 {
    e.axes()
        .iter()
        .map(|a| {
            let f = (cap / a).floor();
            u128::try_from(f).unwrap_or(0)
        })
        .sum()
}

/// Orbits sorted by `(action, axis, multiplicity)`, either all those with
/// action below a cap or the first `count` of them.
pub fn enumerate(e: &Ellipsoid, query: &SpectrumQuery) -> Vec<ReebOrbit> {
    match query {
        SpectrumQuery::MaxAction(cap) => {
            let mut out = Vec::new();
            for j in 1..=e.dim() {
                let mut m = 1u64;
                while Rational::from(m) * e.axis(j) <= *cap {
                    out.push(orbit(e, j, m));
                    m += 1;
                }
            }
            out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
            out
        }
        SpectrumQuery::MaxCount(count) => first_actions(e, *count)
            .into_iter()
            .map(|(_, j, m)| orbit(e, j, m))
            .collect(),
    }
}

/// The first `count` entries `(action, j, m)` of the action spectrum, as a
/// merge of the `n` arithmetic progressions `m·aⱼ`.
pub fn first_actions(e: &Ellipsoid, count: usize) -> Vec<(Rational, usize, u64)> {
    let mut heap: BinaryHeap<Reverse<(Rational, usize, u64)>> = (1..=e.dim())
        .map(|j| Reverse((e.axis(j).clone(), j, 1)))
        .collect();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let Reverse((action, j, m)) = heap.pop().expect("spectrum is infinite");
        heap.push(Reverse((&action + e.axis(j), j, m + 1)));
        out.push((action, j, m));
    }
    out
}

/// All orbits with index `d` and action `≤ action_cap`, sorted as in
/// [`enumerate`]. Uses that the index strictly increases along each axis.
pub fn orbits_with_cz(e: &Ellipsoid, d: i64, action_cap: &Rational) -> Vec<ReebOrbit> {
    let mut out = Vec::new();
    for j in 1..=e.dim() {
        let mut m = 1u64;
        while Rational::from(m) * e.axis(j) <= *action_cap {
            let cz = conley_zehnder(e, j, m);
            if cz == d {
                out.push(orbit(e, j, m));
            } else if cz > d {
                break;
            }
            m += 1;
        }
    }
    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    out
}

/// Resonances `(j, m, i)` with `m·aⱼ ≤ cap`, sorted lexicographically.
pub fn nondegeneracy_report(e: &Ellipsoid, cap: &Rational) -> Vec<Resonance> {
    let mut out = Vec::new();
    for j in 1..=e.dim() {
        let mut m = 1u64;
        loop {
            let period = Rational::from(m) * e.axis(j);
            if period > *cap {
                break;
            }
            for i in 1..=e.dim() {
                if i != j && (&period / e.axis(i)).is_integer() {
                    out.push(Resonance { axis: j, multiplicity: m, other_axis: i });
                }
            }
            m += 1;
        }
    }
    out.sort();
    out
}
