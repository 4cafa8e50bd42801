//! Exact-arithmetic toolkit for comparing mirror constructions of K3 surfaces.
//!
//! The crate mechanizes a lattice-theoretic comparison of three mirror
//! constructions for K3 surfaces built from the bimodal singularities of
//! Arnold's classification:
//!
//! * transpose duality of invertible polynomials ([`invertible`]),
//! * polar duality of reflexive Newton polytopes ([`polytope`], [`batyrev`]),
//! * lattice-polarized duality, `M⊥ ≅ M̌ ⊕ U` inside the K3 lattice
//!   `Λ = U³ ⊕ E₈²` ([`lattice`], [`picard`]).
//!
//! Everything is computed over `Z` and `Q` with no floating point: convex
//! hulls, polar duals and lattice-point inventories are exact, Gram matrices
//! of toric divisor classes are assembled combinatorially, and signatures,
//! Smith invariants and discriminant quadratic forms are derived by exact
//! reductions. The [`runner`] module packages five worked singularity pairs
//! (`Z13/J30`, `X20/S17`, `W18/W18`, `W17/S10`, `U16/U16`) as reproducible
//! case studies with machine-readable reports, and can scan a PALP-format
//! database of three-dimensional reflexive polytopes.

pub mod batyrev;
pub mod cases;
pub mod invertible;
pub mod lattice;
pub mod mat;
pub mod picard;
pub mod polytope;
pub mod runner;

pub use invertible::ExponentMatrix;
pub use lattice::IntegralLattice;
pub use polytope::LatticePolytope;
