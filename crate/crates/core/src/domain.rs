//! Toric domains described by their moment images `Ω ⊂ ℝⁿ₊`.
//!
//! Every shape here is closed and down-closed (if `x ∈ Ω` and `0 ≤ y ≤ x`
//! componentwise then `y ∈ Ω`), which is what makes the diagonal and the
//! inclusion tests exact:
//!
//! * `Ω ⊂ N(b)` holds iff `δ_Ω ≤ b`;
//! * `Ω ⊂ C` for a convex `C` holds iff the vertices and recession rays of
//!   the convex pieces of `Ω` (or of its convex hull) lie in `C`;
//! * in dimension two every bounded shape is the region under a monotone
//!   piecewise-linear profile, and two profiles are compared at the union of
//!   their breakpoints.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{ExtRational, Rational};

/// Upper bound on the number of candidate vertices examined when enumerating
/// the vertices of a halfspace polytope. Larger systems are reported as
/// [`Error::Undecidable`] rather than decided approximately.
pub const MAX_VERTEX_CANDIDATES: u128 = 250_000;

/// `E(a₁, …, aₙ)` with the axes sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "EllipsoidSpec")]
pub struct Ellipsoid {
    axes: Vec<Rational>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EllipsoidSpec {
    axes: Vec<Rational>,
}

impl TryFrom<EllipsoidSpec> for Ellipsoid {
    type Error = Error;

    fn try_from(s: EllipsoidSpec) -> Result<Self> {
        Ellipsoid::new(s.axes)
    }
}

impl Ellipsoid {
    pub fn new(mut axes: Vec<Rational>) -> Result<Self> {
        if axes.is_empty() {
            return Err(Error::InvalidDomain("ellipsoid needs at least one axis".into()));
        }
        if let Some(bad) = axes.iter().find(|a| !a.is_positive()) {
            return Err(Error::InvalidDomain(format!("ellipsoid axis {bad} is not positive")));
        }
        axes.sort();
        Ok(Ellipsoid { axes })
    }

    pub fn dim(&self) -> usize {
        self.axes.len()
    }

    pub fn axes(&self) -> &[Rational] {
        &self.axes
    }

    /// The `j`-th axis, 1-based.
    pub fn axis(&self, j: usize) -> &Rational {
        &self.axes[j - 1]
    }

    /// Repeated axes (`aᵢ = aⱼ`, `i ≠ j`) make every orbit on those axes
    /// resonant.
    pub fn has_ties(&self) -> bool {
        self.axes.windows(2).any(|w| w[0] == w[1])
    }

    pub fn scale(&self, alpha: &Rational) -> Ellipsoid {
        Ellipsoid {
            axes: self.axes.iter().map(|a| a * alpha).collect(),
        }
    }

    /// `(1/a₁ + ⋯ + 1/aₙ)⁻¹`.
    pub fn diagonal(&self) -> Rational {
        self.axes.iter().map(Rational::recip).sum::<Rational>().recip()
    }
}

impl fmt::Display for Ellipsoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E(")?;
        for (i, a) in self.axes.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// The closed halfspace `⟨normal, x⟩ ≤ bound`, with `normal ≥ 0` and
/// `bound > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Halfspace {
    pub normal: Vec<Rational>,
    pub bound: Rational,
}

impl Halfspace {
    pub fn new(normal: Vec<Rational>, bound: Rational) -> Self {
        Halfspace { normal, bound }
    }

    fn value(&self, x: &[Rational]) -> Rational {
        dot(&self.normal, x)
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.value(x) <= self.bound
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BuiltinKind {
    Ball,
    Cylinder,
    Polydisk,
    NCylinders,
    Ellipsoid,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DomainClass {
    Convex,
    Concave,
    Both,
    Unknown,
}

impl DomainClass {
    pub fn is_convex(self) -> bool {
        matches!(self, DomainClass::Convex | DomainClass::Both)
    }

    pub fn is_concave(self) -> bool {
        matches!(self, DomainClass::Concave | DomainClass::Both)
    }
}

impl fmt::Display for DomainClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DomainClass::Convex => "convex",
            DomainClass::Concave => "concave",
            DomainClass::Both => "convex and concave",
            DomainClass::Unknown => "neither convex nor concave",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    Ellipsoid(Ellipsoid),
    /// `x₁ + ⋯ + xₙ ≤ a`
    Ball(Rational),
    /// `x₁ ≤ a`
    Cylinder(Rational),
    /// `xᵢ ≤ a` for all `i`
    Polydisk(Rational),
    /// `xᵢ ≤ a` for some `i`
    NCylinders(Rational),
    ConvexPolytope(Vec<Halfspace>),
    /// Region of `ℝ²₊` under the polyline through `vertices`, which starts on
    /// the `y`-axis, ends on the `x`-axis, and is strictly decreasing.
    Staircase2D(Vec<(Rational, Rational)>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ToricDomain {
    n: usize,
    shape: Shape,
}

impl ToricDomain {
    pub fn new(n: usize, shape: Shape) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDomain("dimension must be positive".into()));
        }
        let positive = |a: &Rational, what: &str| {
            if a.is_positive() {
                Ok(())
            } else {
                Err(Error::InvalidDomain(format!("{what} parameter {a} is not positive")))
            }
        };
        match &shape {
            Shape::Ellipsoid(e) => {
                if e.dim() != n {
                    return Err(Error::DimensionError { expected: n, got: e.dim() });
                }
            }
            Shape::Ball(a) => positive(a, "ball")?,
            Shape::Cylinder(a) => positive(a, "cylinder")?,
            Shape::Polydisk(a) => positive(a, "polydisk")?,
            Shape::NCylinders(a) => positive(a, "ncylinders")?,
            Shape::ConvexPolytope(hs) => {
                if hs.is_empty() {
                    return Err(Error::InvalidDomain("polytope needs at least one halfspace".into()));
                }
                for h in hs {
                    if h.normal.len() != n {
                        return Err(Error::DimensionError { expected: n, got: h.normal.len() });
                    }
                    if h.normal.iter().any(Rational::is_negative) {
                        return Err(Error::InvalidDomain(
                            "halfspace normals must be componentwise nonnegative".into(),
                        ));
                    }
                    if h.normal.iter().all(Rational::is_zero) {
                        return Err(Error::InvalidDomain("halfspace normal is zero".into()));
                    }
                    positive(&h.bound, "halfspace bound")?;
                }
            }
            Shape::Staircase2D(vs) => {
                if n != 2 {
                    return Err(Error::DimensionError { expected: 2, got: n });
                }
                validate_staircase(vs)?;
            }
        }
        Ok(ToricDomain { n, shape })
    }

    pub fn ellipsoid(axes: Vec<Rational>) -> Result<Self> {
        let e = Ellipsoid::new(axes)?;
        Ok(ToricDomain { n: e.dim(), shape: Shape::Ellipsoid(e) })
    }

    pub fn ball(n: usize, a: Rational) -> Result<Self> {
        Self::new(n, Shape::Ball(a))
    }

    pub fn cylinder(n: usize, a: Rational) -> Result<Self> {
        Self::new(n, Shape::Cylinder(a))
    }

    pub fn polydisk(n: usize, a: Rational) -> Result<Self> {
        Self::new(n, Shape::Polydisk(a))
    }

    pub fn ncylinders(n: usize, a: Rational) -> Result<Self> {
        Self::new(n, Shape::NCylinders(a))
    }

    pub fn convex_polytope(n: usize, halfspaces: Vec<Halfspace>) -> Result<Self> {
        Self::new(n, Shape::ConvexPolytope(halfspaces))
    }

    /// A staircase whose complement in `ℝ²₊` is convex.
    pub fn concave_staircase(vertices: Vec<(Rational, Rational)>) -> Result<Self> {
        let d = Self::new(2, Shape::Staircase2D(vertices))?;
        if !d.class().is_concave() {
            return Err(Error::InvalidDomain(
                "staircase boundary slopes must be nondecreasing for a concave domain".into(),
            ));
        }
        Ok(d)
    }

    /// Any monotone staircase; classified by the shape of its boundary.
    pub fn staircase(vertices: Vec<(Rational, Rational)>) -> Result<Self> {
        Self::new(2, Shape::Staircase2D(vertices))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn as_ellipsoid(&self) -> Option<&Ellipsoid> {
        match &self.shape {
            Shape::Ellipsoid(e) => Some(e),
            _ => None,
        }
    }

    /// Ellipsoid form of shapes that are ellipsoids: `B(a) = E(a, …, a)` and
    /// every one-dimensional shape is `E(length)`.
    pub fn to_ellipsoid(&self) -> Option<Ellipsoid> {
        match &self.shape {
            Shape::Ellipsoid(e) => Some(e.clone()),
            Shape::Ball(a) => Some(Ellipsoid { axes: vec![a.clone(); self.n] }),
            _ if self.n == 1 => match self.extent(0) {
                ExtRational::Finite(len) => Some(Ellipsoid { axes: vec![len] }),
                ExtRational::PosInfinity => None,
            },
            _ => None,
        }
    }

    /// Halfspace description, for shapes that are convex polyhedra.
    pub fn to_polytope(&self) -> Option<ToricDomain> {
        self.halfspaces().map(|hs| ToricDomain { n: self.n, shape: Shape::ConvexPolytope(hs) })
    }

    pub fn kind_name(&self) -> &'static str {
        match self.shape {
            Shape::Ellipsoid(_) => "ellipsoid",
            Shape::Ball(_) => "ball",
            Shape::Cylinder(_) => "cylinder",
            Shape::Polydisk(_) => "polydisk",
            Shape::NCylinders(_) => "ncylinders",
            Shape::ConvexPolytope(_) => "convex_polytope",
            Shape::Staircase2D(_) => "staircase",
        }
    }

    pub fn class(&self) -> DomainClass {
        match &self.shape {
            Shape::Ellipsoid(_) | Shape::Ball(_) | Shape::Cylinder(_) => DomainClass::Both,
            Shape::Polydisk(_) | Shape::ConvexPolytope(_) => DomainClass::Convex,
            // the complement {xᵢ > a for all i} is convex
            Shape::NCylinders(_) if self.n == 1 => DomainClass::Both,
            Shape::NCylinders(_) => DomainClass::Concave,
            Shape::Staircase2D(vs) => staircase_class(vs),
        }
    }

    /// Bounded in every coordinate direction.
    pub fn is_bounded(&self) -> bool {
        (0..self.n).all(|i| !self.extent(i).is_infinite())
    }

    pub fn contains_point(&self, x: &[Rational]) -> Result<bool> {
        if x.len() != self.n {
            return Err(Error::DimensionError { expected: self.n, got: x.len() });
        }
        if x.iter().any(Rational::is_negative) {
            return Ok(false);
        }
        let inside = match &self.shape {
            Shape::NCylinders(a) => x.iter().any(|xi| xi <= a),
            Shape::Staircase2D(vs) => {
                let profile = Profile::from_vertices(vs.clone());
                profile.covers(&x[0], &x[1])
            }
            _ => self
                .halfspaces()
                .expect("convex shape has halfspaces")
                .iter()
                .all(|h| h.contains(x)),
        };
        Ok(inside)
    }

    /// `δ_Ω = max{a : (a, …, a) ∈ Ω}`.
    pub fn diagonal(&self) -> Result<Rational> {
        match self.diagonal_ext() {
            ExtRational::Finite(d) => Ok(d),
            ExtRational::PosInfinity => Err(Error::UnboundedDiagonal),
        }
    }

    fn diagonal_ext(&self) -> ExtRational {
        match &self.shape {
            Shape::Ellipsoid(e) => e.diagonal().into(),
            Shape::Ball(a) => (a / Rational::from(self.n)).into(),
            Shape::Cylinder(a) | Shape::Polydisk(a) | Shape::NCylinders(a) => a.clone().into(),
            Shape::ConvexPolytope(hs) => hs
                .iter()
                .filter_map(|h| {
                    let s: Rational = h.normal.iter().sum();
                    s.is_positive().then(|| ExtRational::Finite(&h.bound / s))
                })
                .min()
                .unwrap_or(ExtRational::PosInfinity),
            Shape::Staircase2D(vs) => staircase_diagonal(vs).into(),
        }
    }

    /// `sup{xᵢ : x ∈ Ω}`.
    fn extent(&self, i: usize) -> ExtRational {
        match &self.shape {
            Shape::Ellipsoid(e) => e.axes[i].clone().into(),
            Shape::Ball(a) | Shape::Polydisk(a) => a.clone().into(),
            Shape::Cylinder(a) => {
                if i == 0 {
                    a.clone().into()
                } else {
                    ExtRational::PosInfinity
                }
            }
            Shape::NCylinders(a) => {
                if self.n == 1 {
                    a.clone().into()
                } else {
                    ExtRational::PosInfinity
                }
            }
            Shape::ConvexPolytope(hs) => hs
                .iter()
                .filter(|h| h.normal[i].is_positive())
                .map(|h| ExtRational::Finite(&h.bound / &h.normal[i]))
                .min()
                .unwrap_or(ExtRational::PosInfinity),
            Shape::Staircase2D(vs) => {
                if i == 0 {
                    vs.last().unwrap().0.clone().into()
                } else {
                    vs[0].1.clone().into()
                }
            }
        }
    }

    pub fn scale(&self, alpha: &Rational) -> Result<ToricDomain> {
        if !alpha.is_positive() {
            return Err(Error::InvalidDomain(format!("scale factor {alpha} is not positive")));
        }
        let shape = match &self.shape {
            Shape::Ellipsoid(e) => Shape::Ellipsoid(e.scale(alpha)),
            Shape::Ball(a) => Shape::Ball(a * alpha),
            Shape::Cylinder(a) => Shape::Cylinder(a * alpha),
            Shape::Polydisk(a) => Shape::Polydisk(a * alpha),
            Shape::NCylinders(a) => Shape::NCylinders(a * alpha),
            Shape::ConvexPolytope(hs) => Shape::ConvexPolytope(
                hs.iter()
                    .map(|h| Halfspace::new(h.normal.clone(), &h.bound * alpha))
                    .collect(),
            ),
            Shape::Staircase2D(vs) => {
                Shape::Staircase2D(vs.iter().map(|(x, y)| (x * alpha, y * alpha)).collect())
            }
        };
        Ok(ToricDomain { n: self.n, shape })
    }

    /// Halfspace description when `Ω` is a convex polyhedron.
    fn halfspaces(&self) -> Option<Vec<Halfspace>> {
        let n = self.n;
        let unit = |i: usize| {
            let mut v = vec![Rational::zero(); n];
            v[i] = Rational::one();
            v
        };
        match &self.shape {
            Shape::Ellipsoid(e) => Some(vec![Halfspace::new(
                e.axes.iter().map(Rational::recip).collect(),
                Rational::one(),
            )]),
            Shape::Ball(a) => Some(vec![Halfspace::new(vec![Rational::one(); n], a.clone())]),
            Shape::Cylinder(a) => Some(vec![Halfspace::new(unit(0), a.clone())]),
            Shape::Polydisk(a) => Some((0..n).map(|i| Halfspace::new(unit(i), a.clone())).collect()),
            Shape::NCylinders(a) if n == 1 => Some(vec![Halfspace::new(unit(0), a.clone())]),
            Shape::NCylinders(_) => None,
            Shape::ConvexPolytope(hs) => Some(hs.clone()),
            Shape::Staircase2D(vs) => {
                if !staircase_class(vs).is_convex() {
                    return None;
                }
                Some(
                    vs.windows(2)
                        .map(|w| {
                            let (x0, y0) = &w[0];
                            let (x1, y1) = &w[1];
                            let normal = vec![y0 - y1, x1 - x0];
                            let bound = &normal[0] * x0 + &normal[1] * y0;
                            Halfspace::new(normal, bound)
                        })
                        .collect(),
                )
            }
        }
    }

    /// Convex polyhedra whose union is `Ω`, or whose union has the same
    /// convex hull as `Ω` when `hull_only` is returned true.
    fn convex_pieces(&self) -> Result<(Vec<Polyhedron>, bool)> {
        match &self.shape {
            Shape::NCylinders(a) if self.n > 1 => {
                let pieces = (0..self.n)
                    .map(|i| {
                        let mut vertex = vec![Rational::zero(); self.n];
                        vertex[i] = a.clone();
                        Polyhedron {
                            vertices: vec![vec![Rational::zero(); self.n], vertex],
                            rays: (0..self.n).filter(|&j| j != i).collect(),
                        }
                    })
                    .collect();
                Ok((pieces, false))
            }
            Shape::Staircase2D(vs) if !staircase_class(vs).is_convex() => {
                let mut vertices = vec![vec![Rational::zero(), Rational::zero()]];
                vertices.extend(vs.iter().map(|(x, y)| vec![x.clone(), y.clone()]));
                Ok((vec![Polyhedron { vertices, rays: vec![] }], true))
            }
            _ => {
                let hs = self.halfspaces().expect("convex shape has halfspaces");
                Ok((vec![Polyhedron::from_halfspaces(self.n, &hs)?], false))
            }
        }
    }

    /// Upper boundary of a bounded two-dimensional shape.
    fn profile(&self) -> Option<Profile> {
        debug_assert_eq!(self.n, 2);
        if let Shape::Staircase2D(vs) = &self.shape {
            return Some(Profile::from_vertices(vs.clone()));
        }
        let hs = self.halfspaces()?;
        Profile::from_halfspaces(&hs)
    }

    /// Exact decision of `self ⊂ other`.
    pub fn includes_in(&self, other: &ToricDomain) -> Result<bool> {
        includes(self, other)
    }
}

/// Exact decision of `inner ⊂ outer`.
///
/// Supported pairs: every pair of shapes of equal dimension, subject to the
/// vertex enumeration limit [`MAX_VERTEX_CANDIDATES`] for halfspace
/// polytopes (exceeding it yields [`Error::Undecidable`]).
pub fn includes(inner: &ToricDomain, outer: &ToricDomain) -> Result<bool> {
    if inner.n != outer.n {
        return Err(Error::DimensionError { expected: inner.n, got: outer.n });
    }
    if inner == outer {
        return Ok(true);
    }
    let n = inner.n;
    if n == 1 {
        return Ok(inner.extent(0) <= outer.extent(0));
    }
    if let Shape::NCylinders(b) = &outer.shape {
        return Ok(inner.diagonal_ext() <= ExtRational::Finite(b.clone()));
    }
    if let Some(hs) = outer.halfspaces() {
        let (pieces, _) = inner.convex_pieces()?;
        return Ok(pieces.iter().all(|p| p.inside(&hs)));
    }
    // outer is a non-convex two-dimensional staircase
    let outer_profile = outer.profile().expect("staircase has a profile");
    match inner.profile() {
        Some(p) => Ok(p.below(&outer_profile)),
        None => {
            if inner.is_bounded() {
                Err(Error::Undecidable(format!(
                    "{} inside {}",
                    inner.kind_name(),
                    outer.kind_name()
                )))
            } else {
                Ok(false)
            }
        }
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `conv(vertices) + cone(e_r : r ∈ rays)`.
#[derive(Debug, Clone)]
struct Polyhedron {
    vertices: Vec<Vec<Rational>>,
    rays: Vec<usize>,
}

impl Polyhedron {
    fn from_halfspaces(n: usize, hs: &[Halfspace]) -> Result<Self> {
        let rays: Vec<usize> = (0..n)
            .filter(|&i| hs.iter().all(|h| h.normal[i].is_zero()))
            .collect();
        let vertices = enumerate_vertices(n, hs)?;
        Ok(Polyhedron { vertices, rays })
    }

    fn inside(&self, hs: &[Halfspace]) -> bool {
        self.vertices.iter().all(|v| hs.iter().all(|h| h.contains(v)))
            && self.rays.iter().all(|&r| hs.iter().all(|h| h.normal[r].is_zero()))
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// Vertices of `{x ≥ 0, ⟨vⱼ, x⟩ ≤ cⱼ}` by solving every `n`-subset of the
/// constraints with equality.
fn enumerate_vertices(n: usize, hs: &[Halfspace]) -> Result<Vec<Vec<Rational>>> {
    let total = n + hs.len();
    if binomial(total as u128, n as u128) > MAX_VERTEX_CANDIDATES {
        return Err(Error::Undecidable(format!(
            "vertex enumeration over {} constraints in dimension {n}",
            total
        )));
    }
    // constraint rows: first the coordinate planes x_i = 0, then the halfspaces
    let row = |k: usize| -> (Vec<Rational>, Rational) {
        if k < n {
            let mut v = vec![Rational::zero(); n];
            v[k] = Rational::one();
            (v, Rational::zero())
        } else {
            let h = &hs[k - n];
            (h.normal.clone(), h.bound.clone())
        }
    };
    let mut out: Vec<Vec<Rational>> = Vec::new();
    let mut subset: Vec<usize> = (0..n).collect();
    loop {
        let (a, b): (Vec<_>, Vec<_>) = subset.iter().map(|&k| row(k)).unzip();
        if let Some(x) = solve(a, b) {
            let feasible =
                x.iter().all(|xi| !xi.is_negative()) && hs.iter().all(|h| h.contains(&x));
            if feasible && !out.contains(&x) {
                out.push(x);
            }
        }
        // next combination
        let mut i = n;
        loop {
            if i == 0 {
                out.sort();
                return Ok(out);
            }
            i -= 1;
            if subset[i] < total - n + i {
                subset[i] += 1;
                for j in i + 1..n {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Unique solution of the square system `a x = b`, if any.
fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let p = a[col][col].clone();
        for c in col..n {
            a[col][c] = &a[col][c] / &p;
        }
        b[col] = &b[col] / &p;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in col..n {
                    let delta = &factor * &a[col][c];
                    a[r][c] -= &delta;
                }
                let delta = &factor * &b[col];
                b[r] -= &delta;
            }
        }
    }
    Some(b)
}

fn validate_staircase(vs: &[(Rational, Rational)]) -> Result<()> {
    if vs.len() < 2 {
        return Err(Error::InvalidDomain("staircase needs at least two vertices".into()));
    }
    let (x0, y0) = &vs[0];
    let (xl, yl) = vs.last().unwrap();
    if !x0.is_zero() || !y0.is_positive() {
        return Err(Error::InvalidDomain("staircase must start at (0, y) with y > 0".into()));
    }
    if !yl.is_zero() || !xl.is_positive() {
        return Err(Error::InvalidDomain("staircase must end at (x, 0) with x > 0".into()));
    }
    for w in vs.windows(2) {
        if w[1].0 <= w[0].0 || w[1].1 >= w[0].1 {
            return Err(Error::InvalidDomain(
                "staircase x must increase strictly and y decrease strictly".into(),
            ));
        }
    }
    Ok(())
}

fn slopes(vs: &[(Rational, Rational)]) -> Vec<Rational> {
    vs.windows(2)
        .map(|w| (&w[1].1 - &w[0].1) / (&w[1].0 - &w[0].0))
        .collect()
}

fn staircase_class(vs: &[(Rational, Rational)]) -> DomainClass {
    let s = slopes(vs);
    let nondecreasing = s.windows(2).all(|w| w[0] <= w[1]);
    let nonincreasing = s.windows(2).all(|w| w[0] >= w[1]);
    match (nondecreasing, nonincreasing) {
        (true, true) => DomainClass::Both,
        (true, false) => DomainClass::Concave,
        (false, true) => DomainClass::Convex,
        (false, false) => DomainClass::Unknown,
    }
}

fn staircase_diagonal(vs: &[(Rational, Rational)]) -> Rational {
    // x - y goes from -y₀ < 0 to x_end > 0 along the polyline
    for w in vs.windows(2) {
        let (x0, y0) = &w[0];
        let (x1, y1) = &w[1];
        let d0 = x0 - y0;
        let d1 = x1 - y1;
        if !d0.is_positive() && !d1.is_negative() {
            let t = (-&d0) / (&d1 - &d0);
            return x0 + t * (x1 - x0);
        }
    }
    unreachable!("validated staircase crosses the diagonal")
}

/// Graph of a nonincreasing piecewise-linear function `h` on `[0, x_max]`
/// given by vertices with strictly increasing `x`; the region is
/// `{0 ≤ x ≤ x_max, 0 ≤ y ≤ h(x)}`.
#[derive(Debug, Clone)]
struct Profile {
    vertices: Vec<(Rational, Rational)>,
}

impl Profile {
    fn from_vertices(vertices: Vec<(Rational, Rational)>) -> Self {
        Profile { vertices }
    }

    /// Upper boundary of `{x ≥ 0, ⟨v, x⟩ ≤ c}` in the plane; `None` when
    /// unbounded.
    fn from_halfspaces(hs: &[Halfspace]) -> Option<Self> {
        let x_max = hs
            .iter()
            .filter(|h| h.normal[0].is_positive())
            .map(|h| &h.bound / &h.normal[0])
            .min()?;
        let lines: Vec<&Halfspace> = hs.iter().filter(|h| h.normal[1].is_positive()).collect();
        if lines.is_empty() {
            return None;
        }
        let height = |x: &Rational| -> Rational {
            lines
                .iter()
                .map(|h| (&h.bound - &h.normal[0] * x) / &h.normal[1])
                .min()
                .unwrap()
        };
        let mut xs = vec![Rational::zero(), x_max.clone()];
        for (i, a) in lines.iter().enumerate() {
            for b in &lines[i + 1..] {
                // a0 x + a1 y = ca, b0 x + b1 y = cb
                let det = &a.normal[0] * &b.normal[1] - &a.normal[1] * &b.normal[0];
                if det.is_zero() {
                    continue;
                }
                let x = (&a.bound * &b.normal[1] - &b.bound * &a.normal[1]) / det;
                if x.is_positive() && x < x_max {
                    xs.push(x);
                }
            }
        }
        xs.sort();
        xs.dedup();
        let vertices = xs.into_iter().map(|x| (height(&x), x)).map(|(y, x)| (x, y)).collect();
        Some(Profile { vertices })
    }

    fn x_max(&self) -> &Rational {
        &self.vertices.last().unwrap().0
    }

    /// `h(x)` for `0 ≤ x ≤ x_max`.
    fn height(&self, x: &Rational) -> Rational {
        for w in self.vertices.windows(2) {
            let (x0, y0) = &w[0];
            let (x1, y1) = &w[1];
            if x >= x0 && x <= x1 {
                let t = (x - x0) / (x1 - x0);
                return y0 + t * (y1 - y0);
            }
        }
        self.vertices[0].1.clone()
    }

    fn covers(&self, x: &Rational, y: &Rational) -> bool {
        x <= self.x_max() && y <= &self.height(x)
    }

    /// Region of `self` contained in region of `other`.
    fn below(&self, other: &Profile) -> bool {
        if self.x_max() > other.x_max() {
            return false;
        }
        let mut xs: Vec<Rational> = self.vertices.iter().map(|(x, _)| x.clone()).collect();
        xs.extend(
            other
                .vertices
                .iter()
                .map(|(x, _)| x.clone())
                .filter(|x| x <= self.x_max()),
        );
        xs.sort();
        xs.dedup();
        xs.iter().all(|x| self.height(x) <= other.height(x))
    }
}

/// Constructs a built-in shape from positive parameters. `Ellipsoid` takes
/// its `n` axes; every other kind takes a single parameter `a`.
pub fn make_builtin(kind: BuiltinKind, n: usize, params: &[Rational]) -> Result<ToricDomain> {
    if kind == BuiltinKind::Ellipsoid {
        if params.len() != n {
            return Err(Error::DimensionError { expected: n, got: params.len() });
        }
        return ToricDomain::ellipsoid(params.to_vec());
    }
    let [a] = params else {
        return Err(Error::InvalidDomain(format!(
            "{kind:?} takes exactly one parameter, got {}",
            params.len()
        )));
    };
    let shape = match kind {
        BuiltinKind::Ball => Shape::Ball(a.clone()),
        BuiltinKind::Cylinder => Shape::Cylinder(a.clone()),
        BuiltinKind::Polydisk => Shape::Polydisk(a.clone()),
        BuiltinKind::NCylinders => Shape::NCylinders(a.clone()),
        BuiltinKind::Ellipsoid => unreachable!(),
    };
    ToricDomain::new(n, shape)
}

// JSON schema: {"n": int, "shape": {"kind": ..., params}}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum ShapeSpec {
    Ellipsoid { axes: Vec<Rational> },
    Ball { a: Rational },
    Cylinder { a: Rational },
    Polydisk { a: Rational },
    Ncylinders { a: Rational },
    ConvexPolytope { halfspaces: Vec<Halfspace> },
    ConcaveStaircase { vertices: Vec<(Rational, Rational)> },
    Staircase { vertices: Vec<(Rational, Rational)> },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DomainSpec {
    n: usize,
    shape: ShapeSpec,
}

impl TryFrom<DomainSpec> for ToricDomain {
    type Error = Error;

    fn try_from(spec: DomainSpec) -> Result<Self> {
        let n = spec.n;
        match spec.shape {
            ShapeSpec::Ellipsoid { axes } => {
                if axes.len() != n {
                    return Err(Error::DimensionError { expected: n, got: axes.len() });
                }
                ToricDomain::ellipsoid(axes)
            }
            ShapeSpec::Ball { a } => ToricDomain::ball(n, a),
            ShapeSpec::Cylinder { a } => ToricDomain::cylinder(n, a),
            ShapeSpec::Polydisk { a } => ToricDomain::polydisk(n, a),
            ShapeSpec::Ncylinders { a } => ToricDomain::ncylinders(n, a),
            ShapeSpec::ConvexPolytope { halfspaces } => ToricDomain::convex_polytope(n, halfspaces),
            ShapeSpec::ConcaveStaircase { vertices } => {
                if n != 2 {
                    return Err(Error::DimensionError { expected: 2, got: n });
                }
                ToricDomain::concave_staircase(vertices)
            }
            ShapeSpec::Staircase { vertices } => {
                if n != 2 {
                    return Err(Error::DimensionError { expected: 2, got: n });
                }
                ToricDomain::staircase(vertices)
            }
        }
    }
}

impl From<&ToricDomain> for DomainSpec {
    fn from(d: &ToricDomain) -> Self {
        let shape = match &d.shape {
            Shape::Ellipsoid(e) => ShapeSpec::Ellipsoid { axes: e.axes.clone() },
            Shape::Ball(a) => ShapeSpec::Ball { a: a.clone() },
            Shape::Cylinder(a) => ShapeSpec::Cylinder { a: a.clone() },
            Shape::Polydisk(a) => ShapeSpec::Polydisk { a: a.clone() },
            Shape::NCylinders(a) => ShapeSpec::Ncylinders { a: a.clone() },
            Shape::ConvexPolytope(hs) => ShapeSpec::ConvexPolytope { halfspaces: hs.clone() },
            Shape::Staircase2D(vs) => ShapeSpec::Staircase { vertices: vs.clone() },
        };
        DomainSpec { n: d.n, shape }
    }
}

impl Serialize for ToricDomain {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        DomainSpec::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ToricDomain {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let spec = DomainSpec::deserialize(deserializer)?;
        ToricDomain::try_from(spec).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for ToricDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.shape {
            Shape::Ellipsoid(e) => write!(f, "{e}"),
            Shape::Ball(a) => write!(f, "B({a}) in dimension {}", self.n),
            Shape::Cylinder(a) => write!(f, "Z({a}) in dimension {}", self.n),
            Shape::Polydisk(a) => write!(f, "P({a}) in dimension {}", self.n),
            Shape::NCylinders(a) => write!(f, "N({a}) in dimension {}", self.n),
            Shape::ConvexPolytope(hs) => {
                write!(f, "convex polytope with {} halfspaces in dimension {}", hs.len(), self.n)
            }
            Shape::Staircase2D(vs) => write!(f, "staircase with {} vertices", vs.len()),
        }
    }
}
