//! Combinatorial holomorphic buildings.
//!
//! A building is recorded as its levels (bottom first), each a list of
//! components with their asymptotic orbits, energies and tangency orders.
//! Nothing about the maps themselves is modeled; the checks below only use
//! this combinatorial shadow. Buildings with nodes are not representable.
//!
//! Matched orbits are paired in listing order: the `i`-th positive
//! occurrence of an orbit on level `ν` is glued to the `i`-th negative
//! occurrence of the same orbit on level `ν + 1`.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "OrbitRefSpec")]
pub struct OrbitRef {
    pub label: String,
    pub action: Rational,
    pub multiplicity: u64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct OrbitRefSpec {
    label: String,
    action: Rational,
    #[serde(default = "one")]
    multiplicity: u64,
}

fn one() -> u64 {
    1
}

impl TryFrom<OrbitRefSpec> for OrbitRef {
    type Error = Error;

    fn try_from(s: OrbitRefSpec) -> Result<Self> {
        OrbitRef::new(s.label, s.action, s.multiplicity)
    }
}

impl OrbitRef {
    pub fn new(label: impl Into<String>, action: Rational, multiplicity: u64) -> Result<Self> {
        let label = label.into();
        if !action.is_positive() {
            return Err(Error::InvalidBuilding(format!(
                "orbit {label} has nonpositive action {action}"
            )));
        }
        if multiplicity == 0 {
            return Err(Error::InvalidBuilding(format!("orbit {label} has multiplicity 0")));
        }
        Ok(OrbitRef { label, action, multiplicity })
    }
}

impl fmt::Display for OrbitRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}", self.label, self.action)?;
        if self.multiplicity != 1 {
            write!(f, ", x{}", self.multiplicity)?;
        }
        f.write_str("]")
    }
}

/// Sum of actions.
pub fn total_action(orbits: &[OrbitRef]) -> Rational {
    orbits.iter().map(|o| o.action.clone()).sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LevelKind {
    BottomCobordism,
    Symplectization,
    /// A cobordism whose symplectic form is not exact, where the energy of
    /// a component is not determined by its asymptotics.
    Cobordism,
    TopSymplectization,
}

impl LevelKind {
    /// Whether the energy identity `Ẽ = 𝒜(Γ⁺) − 𝒜(Γ⁻)` applies.
    pub fn is_exact(self) -> bool {
        !matches!(self, LevelKind::Cobordism)
    }

    pub fn is_symplectization(self) -> bool {
        matches!(self, LevelKind::Symplectization | LevelKind::TopSymplectization)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BuildingComponent {
    pub id: String,
    #[serde(default)]
    pub positive_orbits: Vec<OrbitRef>,
    #[serde(default)]
    pub negative_orbits: Vec<OrbitRef>,
    #[serde(default)]
    pub is_constant: bool,
    /// Punctures plus marked points.
    #[serde(default)]
    pub special_points: u32,
    pub energy_tilde: Rational,
    #[serde(default)]
    pub tangency_order: u32,
}

impl BuildingComponent {
    pub fn num_punctures(&self) -> usize {
        self.positive_orbits.len() + self.negative_orbits.len()
    }

    /// `𝒜(Γ⁺) − 𝒜(Γ⁻)`.
    pub fn action_difference(&self) -> Rational {
        total_action(&self.positive_orbits) - total_action(&self.negative_orbits)
    }

    /// Non-constant, one positive and one negative end on the same orbit,
    /// zero energy.
    pub fn is_trivial_cylinder(&self) -> bool {
        !self.is_constant
            && self.positive_orbits.len() == 1
            && self.negative_orbits.len() == 1
            && self.positive_orbits[0] == self.negative_orbits[0]
            && self.energy_tilde.is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Level {
    pub kind: LevelKind,
    pub components: Vec<BuildingComponent>,
}

impl Level {
    pub fn positive_orbits(&self) -> Vec<OrbitRef> {
        self.components.iter().flat_map(|c| c.positive_orbits.iter().cloned()).collect()
    }

    pub fn negative_orbits(&self) -> Vec<OrbitRef> {
        self.components.iter().flat_map(|c| c.negative_orbits.iter().cloned()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HolomorphicBuilding {
    /// Bottom level first.
    pub levels: Vec<Level>,
    pub target_tangency_k: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tangency_carrier: Option<String>,
    /// Enables the puncture lint for tangency carried in the bottom level.
    pub cotangent_bottom: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub energy_budget: Option<Rational>,
    pub top_orbits: Vec<OrbitRef>,
    pub bottom_orbits: Vec<OrbitRef>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BuildingSpec {
    levels: Vec<Level>,
    #[serde(default)]
    target_tangency_k: u32,
    #[serde(default)]
    tangency_carrier: Option<String>,
    #[serde(default)]
    cotangent_bottom: bool,
    #[serde(default)]
    energy_budget: Option<Rational>,
    #[serde(default)]
    top_orbits: Vec<OrbitRef>,
    #[serde(default)]
    bottom_orbits: Vec<OrbitRef>,
    #[serde(default)]
    nodes_allowed: Option<serde_json::Value>,
}

impl<'de> Deserialize<'de> for HolomorphicBuilding {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let spec = BuildingSpec::deserialize(d)?;
        if spec.nodes_allowed.is_some() {
            return Err(serde::de::Error::custom(
                "`nodes_allowed` is not supported: buildings with nodes cannot be represented",
            ));
        }
        HolomorphicBuilding::new(
            spec.levels,
            spec.target_tangency_k,
            spec.tangency_carrier,
            spec.cotangent_bottom,
            spec.energy_budget,
            spec.top_orbits,
            spec.bottom_orbits,
        )
        .map_err(serde::de::Error::custom)
    }
}

impl HolomorphicBuilding {
    pub fn new(
        levels: Vec<Level>,
        target_tangency_k: u32,
        tangency_carrier: Option<String>,
        cotangent_bottom: bool,
        energy_budget: Option<Rational>,
        top_orbits: Vec<OrbitRef>,
        bottom_orbits: Vec<OrbitRef>,
    ) -> Result<Self> {
        let b = HolomorphicBuilding {
            levels,
            target_tangency_k,
            tangency_carrier,
            cotangent_bottom,
            energy_budget,
            top_orbits,
            bottom_orbits,
        };
        b.check_shape()?;
        Ok(b)
    }

    fn check_shape(&self) -> Result<()> {
        if self.levels.is_empty() {
            return Err(Error::InvalidBuilding("a building needs at least one level".into()));
        }
        let mut seen = HashMap::new();
        for (nu, level) in self.levels.iter().enumerate() {
            if level.components.is_empty() {
                return Err(Error::InvalidBuilding(format!("level {} is empty", nu + 1)));
            }
            for c in &level.components {
                if let Some(prev) = seen.insert(c.id.as_str(), nu) {
                    return Err(Error::InvalidBuilding(format!(
                        "component id {:?} appears on levels {} and {}",
                        c.id,
                        prev + 1,
                        nu + 1
                    )));
                }
                if c.energy_tilde.is_negative() {
                    return Err(Error::InvalidBuilding(format!(
                        "component {} has negative energy {}",
                        c.id, c.energy_tilde
                    )));
                }
            }
        }
        if let Some(id) = &self.tangency_carrier {
            if !seen.contains_key(id.as_str()) {
                return Err(Error::InvalidBuilding(format!("tangency carrier {id:?} is not a component")));
            }
        }
        if let Some(b) = &self.energy_budget {
            if b.is_negative() {
                return Err(Error::InvalidBuilding(format!("energy budget {b} is negative")));
            }
        }
        Ok(())
    }

    pub fn num_components(&self) -> usize {
        self.levels.iter().map(|l| l.components.len()).sum()
    }

    /// Components with their (0-based) level index, bottom to top.
    pub fn components(&self) -> impl Iterator<Item = (usize, &BuildingComponent)> {
        self.levels
            .iter()
            .enumerate()
            .flat_map(|(nu, l)| l.components.iter().map(move |c| (nu, c)))
    }

    pub fn component_mut(&mut self, id: &str) -> Option<&mut BuildingComponent> {
        self.levels.iter_mut().flat_map(|l| l.components.iter_mut()).find(|c| c.id == id)
    }

    /// Budget used by [`validate_all`]: the declared one, else `𝒜(top)`.
    pub fn effective_budget(&self) -> Rational {
        self.energy_budget.clone().unwrap_or_else(|| total_action(&self.top_orbits))
    }

    /// Edges `(i, j, orbit)` between component indices (in [`Self::components`]
    /// order) for every matched orbit.
    pub fn edges(&self) -> Vec<(usize, usize, OrbitRef)> {
        let mut offsets = Vec::with_capacity(self.levels.len());
        let mut total = 0;
        for l in &self.levels {
            offsets.push(total);
            total += l.components.len();
        }
        let mut edges = Vec::new();
        for nu in 0..self.levels.len().saturating_sub(1) {
            let mut upper_ends: HashMap<&OrbitRef, VecDeque<usize>> = HashMap::new();
            for (ci, c) in self.levels[nu + 1].components.iter().enumerate() {
                for o in &c.negative_orbits {
                    upper_ends.entry(o).or_default().push_back(offsets[nu + 1] + ci);
                }
            }
            for (ci, c) in self.levels[nu].components.iter().enumerate() {
                for o in &c.positive_orbits {
                    if let Some(j) = upper_ends.get_mut(o).and_then(VecDeque::pop_front) {
                        edges.push((offsets[nu] + ci, j, o.clone()));
                    }
                }
            }
        }
        edges
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ViolationCode {
    MatchFail,
    NotTree,
    TrivialLevel,
    ConstUnstable,
    EnergyId,
    EnergyBudget,
    EnergyPositive,
    TangencySum,
    TangencyCarrier,
    PunctureCount,
}

impl ViolationCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ViolationCode::MatchFail => "MATCH_FAIL",
            ViolationCode::NotTree => "NOT_TREE",
            ViolationCode::TrivialLevel => "TRIVIAL_LEVEL",
            ViolationCode::ConstUnstable => "CONST_UNSTABLE",
            ViolationCode::EnergyId => "ENERGY_ID",
            ViolationCode::EnergyBudget => "ENERGY_BUDGET",
            ViolationCode::EnergyPositive => "ENERGY_POSITIVE",
            ViolationCode::TangencySum => "TANGENCY_SUM",
            ViolationCode::TangencyCarrier => "TANGENCY_CARRIER",
            ViolationCode::PunctureCount => "PUNCTURE_COUNT",
        }
    }
}

impl fmt::Display for ViolationCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub code: ViolationCode,
    pub location: String,
    pub message: String,
}

impl Violation {
    fn new(code: ViolationCode, location: impl Into<String>, message: impl Into<String>) -> Self {
        Violation { code, location: location.into(), message: message.into() }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}: {}", self.code, self.location, self.message)
    }
}

fn multiset(orbits: &[OrbitRef]) -> BTreeMap<&OrbitRef, usize> {
    let mut m = BTreeMap::new();
    for o in orbits {
        *m.entry(o).or_insert(0) += 1;
    }
    m
}

fn describe(orbits: &[OrbitRef]) -> String {
    let mut v: Vec<String> = orbits.iter().map(ToString::to_string).collect();
    v.sort();
    format!("({})", v.join(", "))
}

/// Adjacent levels glue along the same orbits, and the extremes agree with
/// the declared top and bottom orbits.
pub fn validate_matching(f: &HolomorphicBuilding) -> Vec<Violation> {
    let mut out = Vec::new();
    let n = f.levels.len();
    let bottom = f.levels[0].negative_orbits();
    if multiset(&bottom) != multiset(&f.bottom_orbits) {
        out.push(Violation::new(
            ViolationCode::MatchFail,
            "bottom",
            format!(
                "level 1 negative ends {} differ from bottom orbits {}",
                describe(&bottom),
                describe(&f.bottom_orbits)
            ),
        ));
    }
    for nu in 0..n - 1 {
        let up = f.levels[nu].positive_orbits();
        let down = f.levels[nu + 1].negative_orbits();
        if multiset(&up) != multiset(&down) {
            out.push(Violation::new(
                ViolationCode::MatchFail,
                format!("interface {}|{}", nu + 1, nu + 2),
                format!(
                    "level {} positive ends {} differ from level {} negative ends {}",
                    nu + 1,
                    describe(&up),
                    nu + 2,
                    describe(&down)
                ),
            ));
        }
    }
    let top = f.levels[n - 1].positive_orbits();
    if multiset(&top) != multiset(&f.top_orbits) {
        out.push(Violation::new(
            ViolationCode::MatchFail,
            "top",
            format!(
                "level {n} positive ends {} differ from top orbits {}",
                describe(&top),
                describe(&f.top_orbits)
            ),
        ));
    }
    out
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

/// The graph with components as vertices and matched orbits as edges is a
/// tree.
pub fn validate_tree(f: &HolomorphicBuilding) -> Vec<Violation> {
    let ids: Vec<&str> = f.components().map(|(_, c)| c.id.as_str()).collect();
    let mut uf = UnionFind::new(ids.len());
    let mut out = Vec::new();
    for (i, j, o) in f.edges() {
        if !uf.union(i, j) {
            out.push(Violation::new(
                ViolationCode::NotTree,
                format!("{}-{}", ids[i], ids[j]),
                format!("edge {o} closes a cycle"),
            ));
        }
    }
    let mut roots: Vec<usize> = (0..ids.len()).map(|i| uf.find(i)).collect();
    roots.sort_unstable();
    roots.dedup();
    if roots.len() > 1 {
        out.push(Violation::new(
            ViolationCode::NotTree,
            "graph",
            format!("{} connected pieces", roots.len()),
        ));
    }
    out
}

/// No symplectization level is made only of trivial cylinders, and constant
/// components have negative Euler characteristic once their special points
/// are removed.
pub fn validate_stability(f: &HolomorphicBuilding) -> Vec<Violation> {
    let mut out = Vec::new();
    for (nu, level) in f.levels.iter().enumerate() {
        if level.kind.is_symplectization()
            && level.components.iter().all(BuildingComponent::is_trivial_cylinder)
        {
            out.push(Violation::new(
                ViolationCode::TrivialLevel,
                format!("level {}", nu + 1),
                "symplectization level consists of trivial cylinders only",
            ));
        }
        for c in &level.components {
            if c.is_constant && c.special_points <= 2 {
                out.push(Violation::new(
                    ViolationCode::ConstUnstable,
                    c.id.clone(),
                    format!(
                        "constant component with {} special points has Euler characteristic {}",
                        c.special_points,
                        2 - c.special_points as i64
                    ),
                ));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnergyReport {
    pub total: Rational,
    pub budget: Rational,
    /// `𝒜(top) − 𝒜(bottom)`, when every level is exact.
    pub telescoped: Option<Rational>,
    pub violations: Vec<Violation>,
}

/// Energy identity on exact levels, total energy within budget, and
/// positive energy for non-constant buildings and for each non-constant
/// component other than a trivial cylinder.
pub fn validate_energy(f: &HolomorphicBuilding, budget: &Rational) -> EnergyReport {
    let mut violations = Vec::new();
    let mut total = Rational::zero();
    let mut any_nonconstant = false;
    let mut zero_components = 0;
    for (nu, c) in f.components() {
        total += &c.energy_tilde;
        if c.is_constant {
            if !c.energy_tilde.is_zero() || c.num_punctures() > 0 {
                violations.push(Violation::new(
                    ViolationCode::EnergyId,
                    c.id.clone(),
                    format!(
                        "constant component has energy {} and {} punctures",
                        c.energy_tilde,
                        c.num_punctures()
                    ),
                ));
            }
            continue;
        }
        any_nonconstant = true;
        let trivial = f.levels[nu].kind.is_symplectization() && c.is_trivial_cylinder();
        if c.energy_tilde.is_zero() && !trivial {
            zero_components += 1;
            violations.push(Violation::new(
                ViolationCode::EnergyPositive,
                c.id.clone(),
                "non-constant component has zero energy",
            ));
        }
        if f.levels[nu].kind.is_exact() {
            let diff = c.action_difference();
            if diff != c.energy_tilde {
                violations.push(Violation::new(
                    ViolationCode::EnergyId,
                    c.id.clone(),
                    format!("energy {} but A(G+) - A(G-) = {diff}", c.energy_tilde),
                ));
            }
        }
    }
    if total > *budget {
        violations.push(Violation::new(
            ViolationCode::EnergyBudget,
            "building",
            format!("total energy {total} exceeds budget {budget}"),
        ));
    }
    if any_nonconstant && !total.is_positive() && zero_components == 0 {
        violations.push(Violation::new(
            ViolationCode::EnergyPositive,
            "building",
            "non-constant building has zero total energy",
        ));
    }
    let telescoped = f
        .levels
        .iter()
        .all(|l| l.kind.is_exact())
        .then(|| total_action(&f.top_orbits) - total_action(&f.bottom_orbits));
    EnergyReport { total, budget: budget.clone(), telescoped, violations }
}

/// Exactly one component carries the tangency constraint; if it is handed
/// on to neighbouring components their orders add up to at least `k`; and,
/// for a cotangent bottom level, a component there with order `k̃ ≥ 1` has
/// at least `k̃ + 1` punctures.
pub fn validate_tangency(f: &HolomorphicBuilding) -> Vec<Violation> {
    let mut out = Vec::new();
    let comps: Vec<(usize, &BuildingComponent)> = f.components().collect();
    let k = f.target_tangency_k;

    if f.cotangent_bottom {
        for c in &f.levels[0].components {
            let kt = c.tangency_order;
            if kt >= 1 && c.num_punctures() < kt as usize + 1 {
                out.push(Violation::new(
                    ViolationCode::PunctureCount,
                    c.id.clone(),
                    format!(
                        "tangency order {kt} in the bottom level needs at least {} punctures, found {}",
                        kt + 1,
                        c.num_punctures()
                    ),
                ));
            }
        }
    }

    if k == 0 {
        for (_, c) in &comps {
            if c.tangency_order != 0 {
                out.push(Violation::new(
                    ViolationCode::TangencyCarrier,
                    c.id.clone(),
                    format!("tangency order {} without a target constraint", c.tangency_order),
                ));
            }
        }
        return out;
    }

    let carriers: Vec<usize> = match &f.tangency_carrier {
        Some(id) => comps.iter().position(|(_, c)| &c.id == id).into_iter().collect(),
        None => (0..comps.len()).filter(|&i| comps[i].1.tangency_order == k).collect(),
    };
    if carriers.len() != 1 {
        let ids: Vec<&str> = carriers.iter().map(|&i| comps[i].1.id.as_str()).collect();
        out.push(Violation::new(
            ViolationCode::TangencyCarrier,
            "building",
            format!(
                "{} components carry the order-{k} constraint ({})",
                carriers.len(),
                ids.join(", ")
            ),
        ));
        return out;
    }
    let carrier = carriers[0];
    let carrier_comp = comps[carrier].1;
    if carrier_comp.tangency_order != k {
        out.push(Violation::new(
            ViolationCode::TangencyCarrier,
            carrier_comp.id.clone(),
            format!("designated carrier has order {} instead of {k}", carrier_comp.tangency_order),
        ));
    }

    // neighbours of the carrier after collapsing constant components
    let mut adj = vec![Vec::new(); comps.len()];
    for (i, j, _) in f.edges() {
        adj[i].push(j);
        adj[j].push(i);
    }
    let mut visited = vec![false; comps.len()];
    visited[carrier] = true;
    let mut queue = VecDeque::from([carrier]);
    let mut children = Vec::new();
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if visited[w] {
                continue;
            }
            visited[w] = true;
            if comps[w].1.is_constant {
                queue.push_back(w);
            } else {
                children.push(w);
            }
        }
    }
    for (i, (_, c)) in comps.iter().enumerate() {
        if i != carrier && c.tangency_order != 0 && !children.contains(&i) {
            out.push(Violation::new(
                ViolationCode::TangencyCarrier,
                c.id.clone(),
                format!(
                    "tangency order {} on a component not adjacent to carrier {}",
                    c.tangency_order, carrier_comp.id
                ),
            ));
        }
    }
    let sum: u32 = children.iter().map(|&i| comps[i].1.tangency_order).sum();
    let handed_on = sum > 0 || carrier_comp.is_constant;
    if handed_on && sum < k {
        out.push(Violation::new(
            ViolationCode::TangencySum,
            carrier_comp.id.clone(),
            format!("adjacent tangency orders sum to {sum} < {k}"),
        ));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub num_levels: usize,
    pub num_components: usize,
    pub num_edges: usize,
    /// `None` when matching failed and the tree check was skipped.
    pub is_tree: Option<bool>,
    pub energy: EnergyReport,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn codes(&self) -> Vec<ViolationCode> {
        let mut c: Vec<_> = self.violations.iter().map(|v| v.code).collect();
        c.sort();
        c.dedup();
        c
    }
}

/// All checks, with the tree check run only when matching passes.
pub fn validate_all(f: &HolomorphicBuilding) -> ValidationReport {
    let mut violations = validate_matching(f);
    let is_tree = if violations.is_empty() {
        let t = validate_tree(f);
        let ok = t.is_empty();
        violations.extend(t);
        Some(ok)
    } else {
        None
    };
    violations.extend(validate_stability(f));
    let energy = validate_energy(f, &f.effective_budget());
    violations.extend(energy.violations.iter().cloned());
    violations.extend(validate_tangency(f));
    ValidationReport {
        num_levels: f.levels.len(),
        num_components: f.num_components(),
        num_edges: f.edges().len(),
        is_tree,
        energy,
        violations,
    }
}

/// Bounds from comparing energies for the forms `ω̃` and `ω̂` on a level
/// stretched by `s = e^K`: `(Ẽ/(s−1), s·Ẽ/(s−1))`.
pub fn energy_bounds(e_tilde: &Rational, s: &Rational) -> Result<(Rational, Rational)> {
    if *s <= Rational::one() {
        return Err(Error::InvalidScale(s.to_string()));
    }
    if e_tilde.is_negative() {
        return Err(Error::InvalidParameter(format!("energy {e_tilde} is negative")));
    }
    let denom = s - Rational::one();
    Ok((e_tilde / &denom, s * e_tilde / &denom))
}
