//! Generalized q-deformed coherent states built on the sequence
//! `x_n = (1 + α q^(n-1)) [n]_q`.
//!
//! The crate is organised bottom-up:
//!
//! - [`qcore`]: q-brackets, Pochhammer symbols, the q-exponential, basic
//!   hypergeometric series and the deformed sequence `x_n`.
//! - [`orthopoly`]: Al-Salam-Chihara, continuous q-Hermite, Rogers-Szegő and
//!   Meixner-Pollaczek evaluators, plus the orthonormal basis `φ_n`.
//! - [`measures`]: the atomic radial measure solving the moment problem, the
//!   orthogonality weight `ω_{q,α}` and Gauss-Legendre quadrature over `I_q`.
//! - [`states`]: coherent-state coefficients, normalization, reproducing
//!   kernel, wavefunctions and the ladder / position operators.
//! - [`bargmann`]: the integral kernel `T(z, ξ)`, the transform and its
//!   isometry on the atomic planar measure.
//! - [`limits`]: the `α = 0` and `q → 1` degenerations.
//! - [`verify`]: named verification suites behind a common trait.
//! - [`table`]: deterministic CSV / JSON tables.

pub mod bargmann;
pub mod error;
pub mod limits;
pub mod measures;
pub mod orthopoly;
pub mod qcore;
pub mod states;
pub mod table;
pub mod verify;

pub use error::{Error, Result};
pub use num_complex::Complex64 as C64;
pub use qcore::{QParams, SeriesControl};
