//! Branch-cut-aware elementary operations on complex scalars.
//!
//! A [`Sided`] value is a complex number together with the sign of an
//! infinitesimal imaginary offset, so boundary values on the negative real
//! axis (for powers and logs) and on [1, inf) (for the hypergeometric kernel)
//! are exact limits instead of finite-epsilon approximations.

use crate::types::{C64, EvalError};
use std::f64::consts::PI;

/// Sign of the infinitesimal imaginary part attached to a real value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Side {
    Plus,
    Minus,
    None,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Plus => Side::Minus,
            Side::Minus => Side::Plus,
            Side::None => Side::None,
        }
    }

    pub fn from_im_sign(s: i32) -> Side {
        match s.signum() {
            1 => Side::Plus,
            -1 => Side::Minus,
            _ => Side::None,
        }
    }
}

/// Complex value with a side discriminator consulted only when the value is
/// exactly real and sits on the relevant cut.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Sided {
    pub v: C64,
    pub side: Side,
}

impl Sided {
    pub fn new(v: C64, side: Side) -> Self {
        Sided { v, side }
    }

    pub fn off_axis(v: C64) -> Self {
        Sided {
            v,
            side: Side::None,
        }
    }

    /// 1 - x, side flips.
    pub fn one_minus(self) -> Sided {
        Sided::new(C64::new(1.0, 0.0) - self.v, self.side.flip())
    }

    /// -x, side flips.
    pub fn negate(self) -> Sided {
        Sided::new(-self.v, self.side.flip())
    }

    /// 1/x, side flips.
    pub fn recip(self) -> Sided {
        Sided::new(C64::new(1.0, 0.0) / self.v, self.side.flip())
    }

    /// x/(x-1), side flips.
    pub fn pfaff(self) -> Sided {
        Sided::new(self.v / (self.v - 1.0), self.side.flip())
    }

    /// Principal log with the side deciding the branch on the negative real
    /// axis. Errors if the value is negative real with no side.
    pub fn ln(self) -> Result<C64, EvalError> {
        if self.v.im != 0.0 {
            return Ok(self.v.ln());
        }
        if self.v.re > 0.0 {
            return Ok(C64::new(self.v.re.ln(), 0.0));
        }
        if self.v.re == 0.0 {
            return Err(EvalError::Domain("log of zero"));
        }
        let l = (-self.v.re).ln();
        match self.side {
            Side::Plus => Ok(C64::new(l, PI)),
            Side::Minus => Ok(C64::new(l, -PI)),
            Side::None => Err(EvalError::BranchAmbiguity),
        }
    }

    /// w^p as exp(p ln w) with the sided branch.
    pub fn pow(self, p: C64) -> Result<C64, EvalError> {
        if p.re == 0.0 && p.im == 0.0 {
            return Ok(C64::new(1.0, 0.0));
        }
        if self.v.re == 0.0 && self.v.im == 0.0 {
            if p.re > 0.0 {
                return Ok(C64::new(0.0, 0.0));
            }
            return Err(EvalError::Domain("zero base with nonpositive exponent"));
        }
        Ok((p * self.ln()?).exp())
    }
}

/// sin(pi z), with argument reduction so half-integer and integer inputs are
/// exact; real inputs within 1e-15 of an integer map to exactly zero.
pub fn sin_pi(z: C64) -> C64 {
    let n = z.re.round();
    let w = z.re - n;
    if z.im == 0.0 && w.abs() < 1e-15 {
        return C64::new(0.0, 0.0);
    }
    let sgn = if (n as i64) % 2 == 0 { 1.0 } else { -1.0 };
    // sin(pi(w + iy)) = sin(pi w)cosh(pi y) + i cos(pi w)sinh(pi y)
    let (s, c) = (PI * w).sin_cos();
    let (sh, ch) = ((PI * z.im).sinh(), (PI * z.im).cosh());
    sgn * C64::new(s * ch, c * sh)
}

/// cos(pi z) with the same reduction.
pub fn cos_pi(z: C64) -> C64 {
    sin_pi(z + C64::new(0.5, 0.0))
}

/// exp(i pi z), exact up to rounding at integer and half-integer real z.
pub fn exp_i_pi(z: C64) -> C64 {
    let n = z.re.round();
    let w = z.re - n;
    let sgn = if (n as i64) % 2 == 0 { 1.0 } else { -1.0 };
    let (s, c) = (PI * w).sin_cos();
    let damp = (-PI * z.im).exp();
    sgn * damp * C64::new(c, s)
}

/// Principal-branch power w^p, argument zero on the positive real axis and
/// the cut along the negative real axis. Errors when w is negative real
/// (signed zero on the imaginary part does not count as a side here).
pub fn branch_power(w: C64, p: C64) -> Result<C64, EvalError> {
    Sided::off_axis(w).pow(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn sin_pi_exact_zeros_and_halves() {
        assert_eq!(sin_pi(C64::new(3.0, 0.0)), C64::new(0.0, 0.0));
        assert_eq!(sin_pi(C64::new(-7.0, 0.0)), C64::new(0.0, 0.0));
        assert_relative_eq!(sin_pi(C64::new(0.5, 0.0)).re, 1.0, max_relative = 1e-15);
        assert_relative_eq!(
            sin_pi(C64::new(0.25, 0.0)).re,
            0.5f64.sqrt(),
            max_relative = 1e-15
        );
        // huge real part keeps accuracy through reduction
        assert_relative_eq!(
            sin_pi(C64::new(1000.25, 0.0)).re,
            0.5f64.sqrt(),
            max_relative = 1e-12
        );
    }

    #[test]
    fn branch_power_basics() {
        let v = branch_power(C64::new(4.0, 0.0), C64::new(0.5, 0.0)).unwrap();
        assert_relative_eq!(v.re, 2.0, max_relative = 1e-15);
        let one = branch_power(C64::new(1.0, 0.0), C64::new(0.3, -2.0)).unwrap();
        assert_relative_eq!(one.re, 1.0, max_relative = 1e-15);
        assert!(branch_power(C64::new(-2.0, 0.0), C64::new(0.5, 0.0)).is_err());
    }

    #[test]
    fn sided_limits_match_principal_branch() {
        let above = Sided::new(C64::new(-1.0, 0.0), Side::Plus)
            .pow(C64::new(0.5, 0.0))
            .unwrap();
        let below = Sided::new(C64::new(-1.0, 0.0), Side::Minus)
            .pow(C64::new(0.5, 0.0))
            .unwrap();
        assert_relative_eq!(above.im, 1.0, max_relative = 1e-15);
        assert_relative_eq!(below.im, -1.0, max_relative = 1e-15);
    }

    #[test]
    fn exp_i_pi_integers() {
        assert_relative_eq!(exp_i_pi(C64::new(2.0, 0.0)).re, 1.0);
        assert_relative_eq!(exp_i_pi(C64::new(3.0, 0.0)).re, -1.0);
        assert!(exp_i_pi(C64::new(3.0, 0.0)).im.abs() < 1e-16);
    }
}
