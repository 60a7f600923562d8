//! Exact integral-lattice arithmetic for Seifert surfaces of Haefliger knots
//! `S^3 -> S^6`.
//!
//! A Seifert surface is modelled at the level of algebra: the intersection
//! form of the closed 4-manifold (an [`IntegralLattice`]) together with the
//! normal Euler class of the punctured embedding (a characteristic
//! [`CharVector`]). From that pair the crate computes
//!
//! * the Hopf invariant along the boundary, `H = -e.e`,
//! * the Haefliger invariant `Omega = -(sigma + H) / 8`,
//! * the Smale invariant of the projection to `R^5`, `(3 sigma + e.e) / 2`,
//!
//! and runs the realization procedures (prescribing Hopf invariant or
//! signature by boundary connected sum with the `CP^2` blocks, solving the
//! compression system, searching Euler classes on a given form).
//!
//! The crate is `no_std` and needs only `alloc`. Everything is exact: all
//! integers are [`num_bigint::BigInt`].

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod error;
pub mod lattice;
pub mod oracle;
pub mod realize;
pub mod smale;
pub mod surface;

pub use error::{Error, Result};
pub use lattice::{CharVector, CharacteristicBasis, IntegralLattice, Polarity};
pub use realize::{CompressionData, RealizationPlan};
pub use smale::SingularSeifertData;
pub use surface::SeifertSurfaceModel;

pub use num_bigint::BigInt;
