//! Exact computation of elliptic genera, twisted index invariants and modular
//! q-expansions, with a classifier for 24-dimensional string cobordism.
//!
//! Everything is exact rational arithmetic on truncated series; there is no
//! floating point anywhere.
//!
//! * [`series`]: rationals, truncated power series, (δ,ε)-polynomials.
//! * [`modular`]: theta constants, δᵢ/εᵢ, E₄, Δ, Δ̄ and the Jacobi-quartic
//!   solutions F₁, F₂.
//! * [`genus`]: partitions, multiplicative sequences, the universal elliptic
//!   genus and its specializations.
//! * [`twist`]: Chern characters of tangent-derived bundles, Witten bundles,
//!   twisted Â and signature genera.
//! * [`string24`]: the dimension-24 matrices, image lattice and classifier.
//! * [`verify`]: the identity-checking suite behind `ellgenus verify`.

pub mod error;
pub mod genus;
pub mod modular;
pub mod oracle;
pub mod series;
pub mod string24;
pub mod twist;
pub mod verify;

pub use error::{Error, Result};
pub use genus::{GenusPolynomial, Partition, PontryaginVector};
pub use series::{Coeff, DeltaEpsPoly, ExactRational, Parity, QSeries, Series, ZSeries};
pub use string24::{ClassificationReport, EllipticClass24, IndexQuadruple};
pub use twist::CharClass;
