//! Numerical laboratory for representation varieties of compact Lie groups.
//!
//! The crate implements, for SU(2), SU(3), tori U(1)^r and their finite
//! products:
//!
//! - exact-arithmetic-style group numerics: Haar sampling, exp/log,
//!   adjoint action, centralizers, regularity, conjugacy transport
//!   ([`group`]);
//! - characters, Weyl dimensions, and the commutator-pushforward density
//!   by character series, closed form, and Monte Carlo ([`harmonic`]);
//! - surface representation spaces with group-element boundary conditions,
//!   Dehn-twist dynamics, cut/sew, and the genus-2 twist-word algebra
//!   ([`surface`]);
//! - differentials of the commutator and related maps, kernel and
//!   evaluation-span computations, and rank experiments ([`transversality`]);
//! - constructive solvers for commutator equations ([`solvers`]).
//!
//! The `expcli` binary in this workspace drives the statistical
//! experiments; the `book/` directory is a narrative guide whose code
//! snippets compile and run as doc-tests of this crate (see [`guide`]).

pub mod group;
pub mod linalg;
pub mod rng;
pub mod stats;

pub mod harmonic;
pub mod solvers;
pub mod surface;
pub mod transversality;

pub mod guide;
