//! Scaled complex values: mantissa * exp(exponent), with a propagated
//! relative-error estimate. Keeps products of very large gamma factors and
//! very small powers inside f64 range.

use crate::types::C64;

#[derive(Clone, Copy, Debug)]
pub(crate) struct SVal {
    pub m: C64,
    pub e: f64,
    pub rel: f64,
}

impl SVal {
    pub fn zero() -> Self {
        SVal {
            m: C64::new(0.0, 0.0),
            e: 0.0,
            rel: 0.0,
        }
    }

    pub fn one() -> Self {
        SVal {
            m: C64::new(1.0, 0.0),
            e: 0.0,
            rel: 0.0,
        }
    }

    pub fn from_c64(v: C64) -> Self {
        SVal {
            m: v,
            e: 0.0,
            rel: 1e-16,
        }
        .normalized()
    }

    pub fn from_c64_err(v: C64, rel: f64) -> Self {
        SVal { m: v, e: 0.0, rel }.normalized()
    }

    /// exp(l) as a scaled value.
    pub fn from_ln(l: C64, rel: f64) -> Self {
        SVal {
            m: C64::new(l.im.cos(), l.im.sin()),
            e: l.re,
            rel,
        }
    }

    /// Mantissa plus explicit exponent (used by series that rescale).
    pub fn from_parts(m: C64, e: f64, rel: f64) -> Self {
        SVal { m, e, rel }.normalized()
    }

    pub fn is_zero(&self) -> bool {
        self.m.re == 0.0 && self.m.im == 0.0
    }

    fn normalized(mut self) -> Self {
        let n = self.m.norm();
        if n == 0.0 || !n.is_finite() {
            return self;
        }
        if !(1e-8..=1e8).contains(&n) {
            let l = n.ln();
            self.m /= n;
            self.e += l;
        }
        self
    }

    pub fn mul(self, o: SVal) -> SVal {
        if self.is_zero() || o.is_zero() {
            return SVal::zero();
        }
        SVal {
            m: self.m * o.m,
            e: self.e + o.e,
            rel: self.rel + o.rel + 1e-16,
        }
        .normalized()
    }

    pub fn mul_c64(self, v: C64) -> SVal {
        self.mul(SVal::from_c64(v))
    }

    pub fn neg(self) -> SVal {
        SVal {
            m: -self.m,
            ..self
        }
    }

    pub fn add(self, o: SVal) -> SVal {
        if self.is_zero() {
            return o;
        }
        if o.is_zero() {
            return self;
        }
        let (hi, lo) = if self.e >= o.e { (self, o) } else { (o, self) };
        let de = lo.e - hi.e;
        if de < -745.0 {
            return hi;
        }
        let lo_m = lo.m * de.exp();
        let m = hi.m + lo_m;
        let a = hi.m.norm();
        let b = lo_m.norm();
        let s = m.norm();
        let rel = if s > 0.0 {
            (a * hi.rel + b * lo.rel) / s + 1e-16 * (a + b) / s
        } else {
            f64::INFINITY
        };
        SVal { m, e: hi.e, rel }.normalized()
    }

    /// Collapse to a plain complex plus absolute error. Overflow reports
    /// infinity; the caller decides how to flag it.
    pub fn to_c64(self) -> (C64, f64) {
        if self.is_zero() {
            return (C64::new(0.0, 0.0), 0.0);
        }
        let n = self.m.norm();
        let lt = self.e + n.ln();
        if lt > 709.0 {
            return (
                C64::new(f64::INFINITY, f64::INFINITY),
                f64::INFINITY,
            );
        }
        if lt < -745.0 {
            return (C64::new(0.0, 0.0), 0.0);
        }
        let v = self.m * self.e.exp();
        (v, v.norm() * self.rel.max(1e-16))
    }

    pub fn log_norm(&self) -> f64 {
        if self.is_zero() {
            f64::NEG_INFINITY
        } else {
            self.e + self.m.norm().ln()
        }
    }
}
