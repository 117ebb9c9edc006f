//! Invariants of building sets.
//!
//! A building set is a family of nonempty subsets of a finite ground set
//! containing all singletons and closed under unions of overlapping
//! members. This crate computes its Hopf-algebraic operations (product,
//! coproduct, antipode), chromatic symmetric functions in the monomial and
//! power-sum bases, chromatic polynomials with brute-force coloring
//! oracles, the value of the inverse character, eulerian detection by
//! algebraic and geometric routes, flag vectors and the cd-index, plus the
//! graph constructions feeding all of the above (graphical building sets,
//! edge inflations, Tutte evaluations, nerves and chordality).

pub mod building;
pub mod cdindex;
pub mod chromatic;
pub mod error;
pub mod eulerian;
pub mod graphs;
pub mod hopf;
pub mod subset;
pub mod symfunc;

pub use building::{BuildingSet, SetFamily};
pub use cdindex::{CdPolynomial, FlagVector, NcPolynomial};
pub use chromatic::{ChromaticPolynomial, ConnectedPartitionLattice};
pub use error::{Error, Result};
pub use eulerian::CharacterValueReport;
pub use graphs::{IntersectionPoset, SimpleGraph, SimplicialComplex, TuttePolynomial};
pub use hopf::FormalSum;
pub use subset::Mask;
pub use symfunc::{Composition, Partition, PSymElement, QSymElement};
