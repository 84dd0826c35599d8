//! Core value types shared across the crate.

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

pub type C64 = Complex64;

/// The complex index triple (j, mu, nu) labelling every function in the family.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IndexTriple {
    pub j: C64,
    pub mu: C64,
    pub nu: C64,
}

impl IndexTriple {
    pub fn new(j: C64, mu: C64, nu: C64) -> Self {
        Self { j, mu, nu }
    }

    pub fn is_finite(&self) -> bool {
        [self.j, self.mu, self.nu]
            .iter()
            .all(|w| w.re.is_finite() && w.im.is_finite())
    }
}

/// Which boundary value to take when the argument lies on one of the two
/// real-axis cuts (-inf,-1) and (-1,+1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CutSide {
    Above,
    Below,
    OffAxis,
}

/// Evaluation point plus the cut-side discriminator.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Argument {
    pub z: C64,
    pub side: CutSide,
}

impl Argument {
    /// Off-axis or right-of-cut argument; the side is only consulted when
    /// `z` is real with `Re z < 1`.
    pub fn new(z: C64) -> Self {
        Self {
            z,
            side: CutSide::OffAxis,
        }
    }

    pub fn with_side(z: C64, side: CutSide) -> Self {
        Self { z, side }
    }

    pub fn on_cut(&self) -> bool {
        self.z.im == 0.0 && self.z.re < 1.0
    }

    /// The effective sign of the infinitesimal imaginary part: +1 above,
    /// -1 below, 0 when genuinely off-axis.
    pub fn im_sign(&self) -> i32 {
        if self.z.im > 0.0 {
            1
        } else if self.z.im < 0.0 {
            -1
        } else {
            match self.side {
                CutSide::Above => 1,
                CutSide::Below => -1,
                CutSide::OffAxis => 0,
            }
        }
    }

    /// Reject arguments that sit on a cut without a side, or at the
    /// singular points z = +-1.
    pub fn validate(&self) -> Result<(), EvalError> {
        if !(self.z.re.is_finite() && self.z.im.is_finite()) {
            return Err(EvalError::Domain("argument must be finite"));
        }
        if self.z.im == 0.0 && ((self.z.re - 1.0).abs() < 1e-14 || (self.z.re + 1.0).abs() < 1e-14)
        {
            return Err(EvalError::Domain(
                "evaluation exactly at z = +-1 is not supported",
            ));
        }
        if self.on_cut() && self.side == CutSide::OffAxis {
            return Err(EvalError::BranchAmbiguity);
        }
        Ok(())
    }

    /// Argument reflected through the origin; the boundary side flips.
    pub fn negated(&self) -> Argument {
        let side = match (self.z.im == 0.0, self.side) {
            (true, CutSide::Above) => CutSide::Below,
            (true, CutSide::Below) => CutSide::Above,
            _ => CutSide::OffAxis,
        };
        Argument {
            z: -self.z,
            side,
        }
    }
}

/// Status flags carried by every function value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ValueFlags {
    /// The indices sit on a pole of the function; the value field is meaningless.
    pub pole: bool,
    /// The value is zero by an identity in the indices, not by cancellation.
    pub identically_zero: bool,
    /// The error estimate exceeds the standard accuracy target.
    pub degraded_precision: bool,
}

impl ValueFlags {
    pub fn any(&self) -> bool {
        self.pole || self.identically_zero || self.degraded_precision
    }

    pub fn names(&self) -> Vec<&'static str> {
        let mut v = Vec::new();
        if self.pole {
            v.push("pole");
        }
        if self.identically_zero {
            v.push("identically-zero");
        }
        if self.degraded_precision {
            v.push("degraded-precision");
        }
        v
    }
}

/// Complex result with an absolute-error estimate and status flags.
#[derive(Clone, Copy, Debug)]
pub struct FnValue {
    pub value: C64,
    pub abs_error: f64,
    pub flags: ValueFlags,
}

impl FnValue {
    pub fn exact(value: C64) -> Self {
        Self {
            value,
            abs_error: 0.0,
            flags: ValueFlags::default(),
        }
    }

    pub fn with_error(value: C64, abs_error: f64) -> Self {
        let mut flags = ValueFlags::default();
        if !(value.re.is_finite() && value.im.is_finite()) || !abs_error.is_finite() {
            flags.degraded_precision = true;
        }
        Self {
            value,
            abs_error,
            flags,
        }
    }

    pub fn pole() -> Self {
        Self {
            value: C64::new(0.0, 0.0),
            abs_error: f64::INFINITY,
            flags: ValueFlags {
                pole: true,
                ..Default::default()
            },
        }
    }

    pub fn identically_zero() -> Self {
        Self {
            value: C64::new(0.0, 0.0),
            abs_error: 0.0,
            flags: ValueFlags {
                identically_zero: true,
                ..Default::default()
            },
        }
    }
}

/// Residual of an identity check: |LHS - RHS| together with the magnitude
/// scale of the terms entering it, so tolerances can be cancellation-aware.
#[derive(Clone, Copy, Debug)]
pub struct Residual {
    pub value: C64,
    /// Max magnitude among the terms combined into the residual.
    pub scale: f64,
    pub abs_error: f64,
    pub flags: ValueFlags,
}

impl Residual {
    pub fn relative(&self) -> f64 {
        if self.scale > 0.0 {
            self.value.norm() / self.scale
        } else {
            self.value.norm()
        }
    }
}

#[derive(Debug, Error)]
pub enum EvalError {
    #[error("argument lies on a branch cut and no side was supplied")]
    BranchAmbiguity,
    #[error("gamma function pole at a nonpositive integer")]
    GammaPole,
    #[error("domain error: {0}")]
    Domain(&'static str),
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    #[error("degenerate coefficient: {0}")]
    DegenerateCoefficient(&'static str),
    #[error("quadrature failed to converge")]
    NonConvergence,
    #[error("invalid spin index: {0}")]
    InvalidIndex(&'static str),
}

/// Distance-based detector for "is within `tol` of a nonpositive integer";
/// returns the integer p >= 0 such that w ~ -p.
pub fn near_nonpositive_integer(w: C64, tol: f64) -> Option<u32> {
    if w.im.abs() > tol {
        return None;
    }
    let r = w.re.round();
    if r > 0.5 || (w.re - r).abs() > tol {
        return None;
    }
    if r < -(u32::MAX as f64) {
        return None;
    }
    Some((-r) as u32)
}

/// Nearest integer when within `tol` (complex distance).
pub fn near_integer(w: C64, tol: f64) -> Option<i64> {
    if w.im.abs() > tol {
        return None;
    }
    let r = w.re.round();
    if (w.re - r).abs() > tol || r.abs() > 4.0e18 {
        return None;
    }
    Some(r as i64)
}
