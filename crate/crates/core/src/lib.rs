//! Casimir forces in planar cavities that contain left-handed or magnetic
//! metamaterials.
//!
//! The crate covers three levels of description:
//!
//! * the dispersion-free picture, where an `ε = μ = −1` slab folds space and
//!   the cavity behaves like an empty one of size `a' = |a − 2b|`
//!   ([`ideal`]);
//! * the dispersive Lifshitz force for an impedance-matched lens medium,
//!   reduced to a single frequency integral over the kernel
//!   [`special::kernel_h`] ([`lifshitz`]);
//! * the full three-layer stress for a passive magnetic slab resting on one
//!   mirror ([`magnetic`]).
//!
//! Everything is computed on the imaginary frequency axis, where the material
//! responses are real and the integrands decay exponentially. Unless a
//! [`UnitsContext::si`] is passed, lengths and frequencies are dimensionless
//! with `ħ = c = 1`.

pub mod cli;
pub mod dispersion;
pub mod error;
pub mod ideal;
pub mod lifshitz;
pub mod magnetic;
pub mod profile;
pub mod quadrature;
pub mod special;
pub mod units;

pub use dispersion::DispersionModel;
pub use error::{CasimirError, Result};
pub use ideal::{Arrangement, CavityGeometry, ForceResult};
pub use magnetic::LayerStack;
pub use profile::SweepProfile;
pub use quadrature::{QuadratureResult, QuadratureSpec};
pub use units::UnitsContext;
