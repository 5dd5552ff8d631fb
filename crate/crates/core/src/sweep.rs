//! Conflict-coefficient surface over a two-parameter family of CBBAs.
//!
//! On the frame `{A, B}` the family is `M₁(A) = x + yi`, `M₁(B) = (1 - x) - yi`,
//! which sums to one for every `(x, y)`. A point is feasible when both
//! masses have magnitude at most one, i.e. it lies in the intersection of
//! the unit disks centred at `(0, 0)` and `(1, 0)`. Each feasible point is
//! scored by `|K|` against a fixed second body.

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::fusion::Combiner;
use crate::mass::Cbba;

/// Slack on the unit-magnitude feasibility test.
pub const FEASIBILITY_TOLERANCE: f64 = 1e-12;

pub const DEFAULT_X_STEPS: usize = 201;
pub const DEFAULT_Y_STEPS: usize = 401;

/// The two-element frame `{A, B}` the sweep is defined on.
pub fn default_frame() -> Frame {
    Frame::new(["A", "B"]).expect("static frame")
}

/// The fixed reference body: `M₂(A) = 0.5 + 0.5i`, `M₂(B) = 0.5 - 0.5i`.
pub fn reference_m2(frame: &Frame) -> Result<Cbba> {
    check_binary(frame)?;
    Cbba::new(
        frame,
        [
            (
                frame.singleton(0).expect("binary frame"),
                Complex::new(0.5, 0.5),
            ),
            (
                frame.singleton(1).expect("binary frame"),
                Complex::new(0.5, -0.5),
            ),
        ],
    )
}

/// Whether both masses of the `(x, y)` family member have magnitude ≤ 1.
pub fn is_feasible(x: f64, y: f64) -> bool {
    x.hypot(y) <= 1.0 + FEASIBILITY_TOLERANCE && (1.0 - x).hypot(y) <= 1.0 + FEASIBILITY_TOLERANCE
}

/// The family member at `(x, y)` on a two-element frame.
///
/// Built in rectangular form, so `x = 0` needs no special case.
pub fn m1_of(x: f64, y: f64, frame: &Frame) -> Result<Cbba> {
    check_binary(frame)?;
    if !x.is_finite() || !y.is_finite() || !is_feasible(x, y) {
        return Err(Error::InfeasibleParameters { x, y });
    }
    let a = Complex::new(x, y);
    let b = Complex::new(1.0 - x, -y);
    // the masses sum to one by construction; validate only the magnitudes
    Cbba::with_tolerance(
        frame,
        [
            (frame.singleton(0).expect("binary frame"), a),
            (frame.singleton(1).expect("binary frame"), b),
        ],
        f64::EPSILON * 4.0,
    )
}

fn check_binary(frame: &Frame) -> Result<()> {
    if frame.len() == 2 {
        Ok(())
    } else {
        Err(Error::InvalidFrame(format!(
            "the sweep family needs a two-element frame, got {}",
            frame.len()
        )))
    }
}

/// Grid and reference body for a sweep.
#[derive(Debug, Clone)]
pub struct SweepSpec {
    x_range: (f64, f64),
    y_range: (f64, f64),
    x_steps: usize,
    y_steps: usize,
    m2: Cbba,
}

impl Default for SweepSpec {
    /// 201 × 401 nodes over `[0, 1] × [-1, 1]`, step 0.005 on both axes,
    /// against the reference body.
    fn default() -> Self {
        let frame = default_frame();
        SweepSpec {
            x_range: (0.0, 1.0),
            y_range: (-1.0, 1.0),
            x_steps: DEFAULT_X_STEPS,
            y_steps: DEFAULT_Y_STEPS,
            m2: reference_m2(&frame).expect("reference body is valid"),
        }
    }
}

impl SweepSpec {
    pub fn new(x_steps: usize, y_steps: usize) -> Result<Self> {
        SweepSpec::default().with_steps(x_steps, y_steps)
    }

    pub fn with_steps(mut self, x_steps: usize, y_steps: usize) -> Result<Self> {
        if x_steps < 2 || y_steps < 2 {
            return Err(Error::InvalidSweep(format!(
                "need at least 2 steps per axis, got {x_steps} × {y_steps}"
            )));
        }
        self.x_steps = x_steps;
        self.y_steps = y_steps;
        Ok(self)
    }

    /// Replaces the reference body; it must live on a two-element frame.
    pub fn with_m2(mut self, m2: Cbba) -> Result<Self> {
        check_binary(m2.frame())?;
        self.m2 = m2;
        Ok(self)
    }

    pub fn m2(&self) -> &Cbba {
        &self.m2
    }

    pub fn x_steps(&self) -> usize {
        self.x_steps
    }

    pub fn y_steps(&self) -> usize {
        self.y_steps
    }

    pub fn xs(&self) -> impl Iterator<Item = f64> + '_ {
        grid(self.x_range, self.x_steps)
    }

    pub fn ys(&self) -> impl Iterator<Item = f64> + '_ {
        grid(self.y_range, self.y_steps)
    }

    /// Scores a single point, independent of the grid.
    pub fn cell_at(&self, x: f64, y: f64) -> Result<SweepCell> {
        if !is_feasible(x, y) {
            return Ok(SweepCell {
                x,
                y,
                k_magnitude: None,
            });
        }
        let m1 = m1_of(x, y, self.m2.frame())?;
        let report = Combiner::default().conflict(&m1, &self.m2)?;
        Ok(SweepCell {
            x,
            y,
            k_magnitude: Some(report.k_magnitude),
        })
    }
}

fn grid((lo, hi): (f64, f64), steps: usize) -> impl Iterator<Item = f64> {
    let last = (steps - 1) as f64;
    // lo + (hi - lo)·i/(n-1) keeps nodes such as 0.5 exact
    (0..steps).map(move |i| {
        if i + 1 == steps {
            hi
        } else {
            lo + (hi - lo) * i as f64 / last
        }
    })
}

/// One grid node of the sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepCell {
    pub x: f64,
    pub y: f64,
    /// `|K|` at this node; `None` outside the feasible region.
    pub k_magnitude: Option<f64>,
}

impl SweepCell {
    pub fn feasible(&self) -> bool {
        self.k_magnitude.is_some()
    }
}

/// Evaluates every grid node, row-major with `y` varying fastest.
pub fn sweep(spec: &SweepSpec) -> Result<Vec<SweepCell>> {
    let ys: Vec<f64> = spec.ys().collect();
    let mut cells = Vec::with_capacity(spec.x_steps * spec.y_steps);
    for x in spec.xs() {
        for &y in &ys {
            cells.push(spec.cell_at(x, y)?);
        }
    }
    Ok(cells)
}
