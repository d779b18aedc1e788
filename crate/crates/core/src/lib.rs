//! Exact computations for symplectic capacities of toric domains.
//!
//! The crate works entirely over exact rationals. Its modules are:
//!
//! * [`domain`]: toric domains `X_Ω` through their moment images `Ω`;
//! * [`reeb`]: Reeb orbits of ellipsoid boundaries, their actions and
//!   Conley–Zehnder indices;
//! * [`index`]: Fredholm indices, virtual dimensions and automatic
//!   transversality criteria;
//! * [`capacity`]: Gutt–Hutchings, cube, Lagrangian and higher capacities
//!   with the inequalities relating them;
//! * [`lch`]: linearized contact homology of ellipsoids and the
//!   augmentation map;
//! * [`building`]: combinatorial validation of holomorphic buildings.

pub mod building;
pub mod capacity;
pub mod domain;
pub mod error;
pub mod index;
pub mod lch;
pub mod rational;
pub mod reeb;

pub use domain::{includes, make_builtin, BuiltinKind, DomainClass, Ellipsoid, Halfspace, Shape, ToricDomain};
pub use error::{Error, Result};
pub use rational::{q, ExtRational, Rational};
