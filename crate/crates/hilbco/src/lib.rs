//! Exact computation of Hilbert–Samuel functions and Hilbert coefficients
//! of m-primary ideals in explicitly presented local rings, together with
//! mechanical checks of the identities, inequalities and Cohen-Macaulayness
//! criteria that those coefficients satisfy.
//!
//! Two ring presentations are supported:
//!
//! * polynomial rings modulo a monomial ideal, with exact ideal arithmetic,
//!   standard-monomial counting and primary decomposition;
//! * affine semigroup rings, with membership decided by dynamic programming
//!   and lengths certified by doubled-box recounts.
//!
//! On top of the kernels sit a finite-difference fitter that writes Hilbert
//! polynomials in the binomial basis, a recurrence route to the first two
//! coefficients through a minimal reduction, and an analysis layer that
//! evaluates every statement-level check on a concrete (R, Q, K) instance.
//! The `hilbco` binary exposes all of it as a batch CLI with deterministic
//! JSON reports.
//!
//! ```
//! use hilbco::hilbert::{extract_coefficients, FitOptions};
//! use hilbco::{BigInt, Monomial, Ring};
//!
//! // k[x, y] with Q = (x^3, x^2 y, y^3) and K = (x, y)^2
//! let ring = Ring::polynomial(vec!["x".into(), "y".into()]);
//! let q = ring.ideal_from_monomials(vec![
//!     Monomial::new(vec![3, 0]),
//!     Monomial::new(vec![2, 1]),
//!     Monomial::new(vec![0, 3]),
//! ])?;
//! let k = ring.ideal_from_monomials(vec![
//!     Monomial::new(vec![2, 0]),
//!     Monomial::new(vec![1, 1]),
//!     Monomial::new(vec![0, 2]),
//! ])?;
//! let report = extract_coefficients(&ring, &q, &k, &FitOptions::default())?;
//! assert_eq!(report.g, vec![BigInt::from(9), BigInt::from(-3), BigInt::from(3)]);
//! # Ok::<(), hilbco::Error>(())
//! ```

pub mod analysis;
pub mod counting;
pub mod decompose;
pub mod error;
pub mod hilbert;
pub mod huneke;
pub mod job;
pub mod monomial;
pub mod ring;
pub mod semigroup;

pub use error::{Error, Result};
pub use monomial::{Monomial, MonomialIdeal};
pub use ring::{IdealHandle, LengthOptions, Presentation, Ring};

pub use num_bigint::BigInt;
