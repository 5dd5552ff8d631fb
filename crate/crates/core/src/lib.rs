//! Generalized Dempster–Shafer evidence theory over complex mass functions.
//!
//! Masses are complex numbers `M(A) = m(A)·e^{iθ(A)}` whose magnitudes lie
//! in `[0, 1]` and whose sum over the power set is `1 + 0i`. Bodies of
//! evidence are fused with the generalized Dempster rule
//!
//! ```text
//! M(C) = 1/(1 - K) · Σ_{A∩B=C} M₁(A)·M₂(B),   K = Σ_{A∩B=∅} M₁(A)·M₂(B)
//! ```
//!
//! which is defined whenever `K ≠ 1`. Real-valued assignments reduce to
//! the classical theory, which is provided alongside for comparison.
//!
//! ```
//! use gds_core::{combine, Cbba, Complex, Frame};
//!
//! let frame = Frame::new(["A", "B"])?;
//! let a = frame.proposition(["A"])?;
//! let b = frame.proposition(["B"])?;
//! let m1 = Cbba::new(&frame, [(a.clone(), Complex::new(0.5, 0.5)), (b.clone(), Complex::new(0.5, -0.5))])?;
//! let m2 = Cbba::vacuous(&frame);
//! let fused = combine(&m1, &m2)?;
//! assert_eq!(fused.mass(&a)?, Complex::new(0.5, 0.5));
//! # Ok::<(), gds_core::Error>(())
//! ```

pub mod complex;
pub mod error;
pub mod frame;
pub mod fusion;
pub mod mass;
pub mod sweep;

pub use complex::{Complex, Polar};
pub use error::{Error, Result};
pub use frame::{Frame, Proposition, MAX_FRAME_SIZE};
pub use fusion::{
    classical_combine, classical_conflict, combine, combine_all, conflict, Combiner,
    ConflictReport, SINGULARITY_THRESHOLD,
};
pub use mass::{Bba, Cbba, FocalSet, NORMALIZATION_TOLERANCE};
pub use sweep::{m1_of, sweep, SweepCell, SweepSpec};
