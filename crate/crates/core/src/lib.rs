//! Numerical construction and verification toolkit for a two-dimensional
//! convex-integration scheme built from translating Lamb–Chaplygin dipoles.
//!
//! The crate provides, bottom up:
//!
//! * periodic-grid field algebra with spectral operators ([`spectral`],
//!   [`norms`], [`mollify`]),
//! * the closed-form dipole family and its compactly supported
//!   decomposition ([`dipole`], [`profiles`]),
//! * compactly supported and symmetric anti-divergence operators
//!   ([`antidiv`]),
//! * the moving building block with variable core size and speed
//!   ([`block`]),
//! * the rank-one stress decomposition, time partition and trajectory
//!   bookkeeping ([`decomp`]),
//! * the auxiliary block, time-average cancellation and time corrector
//!   ([`auxblock`]),
//! * the stage map and its exact-rational parameter checker ([`stage`],
//!   [`schedule`]),
//! * flat binary / CSV field serialization ([`io`]).

pub mod antidiv;
pub mod auxblock;
pub mod bessel;
pub mod block;
pub mod bump;
pub mod decomp;
pub mod dipole;
pub mod error;
pub mod fft;
pub mod field;
pub mod grid;
pub mod io;
pub mod mollify;
pub mod norms;
pub mod ode;
pub mod profiles;
pub mod quad;
pub mod schedule;
pub mod spectral;
pub mod stage;

pub use error::{Error, Result};
pub use field::{
    SpaceTimeField, SpaceTimeScalar, SpaceTimeSymTensor, SpaceTimeVector, TorusScalarField,
    TorusSymTensorField, TorusVectorField,
};
pub use grid::TorusGrid;
