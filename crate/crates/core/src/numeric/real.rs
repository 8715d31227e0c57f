use std::cmp::Ordering;
use std::fmt;

use super::interval::Interval;
use super::quad::QuadExt;
use super::rational::Rational;

/// A real number known either exactly or through a validated enclosure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Real {
    Exact(QuadExt),
    Approx(Interval),
}

impl Real {
    pub fn rational(x: Rational) -> Self {
        Real::Exact(QuadExt::rational(x))
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Real::Exact(_))
    }

    pub fn exact(&self) -> Option<&QuadExt> {
        match self {
            Real::Exact(x) => Some(x),
            Real::Approx(_) => None,
        }
    }

    pub fn enclose(&self, bits: u32) -> Interval {
        match self {
            Real::Exact(x) => x.enclose(bits),
            Real::Approx(iv) => iv.clone(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Real::Exact(x) => x.to_f64(),
            Real::Approx(iv) => iv.midpoint_f64(),
        }
    }

    /// Width of the enclosure, zero for exact values.
    pub fn width(&self) -> Rational {
        match self {
            Real::Exact(_) => Rational::default(),
            Real::Approx(iv) => iv.width(),
        }
    }

    /// Order of the two values when it can be certified.
    pub fn compare(&self, other: &Real) -> Option<Ordering> {
        match (self, other) {
            (Real::Exact(a), Real::Exact(b)) => Some(a.cmp_exact(b)),
            _ => self.enclose(128).compare(&other.enclose(128)),
        }
    }

    /// The larger value; falls back to an enclosure of the maximum when the
    /// order is not certified.
    pub fn max(&self, other: &Real) -> Real {
        match self.compare(other) {
            Some(Ordering::Less) => other.clone(),
            Some(_) => self.clone(),
            None => Real::Approx(self.enclose(128).max(&other.enclose(128))),
        }
    }

    /// Decimal rendering with a fixed number of fractional digits.
    pub fn to_fixed(&self, digits: u32) -> String {
        match self {
            Real::Exact(x) => x.enclose(4 * digits + 16).to_fixed(digits),
            Real::Approx(iv) => iv.to_fixed(digits),
        }
    }

    /// Symbolic form of exact values.
    pub fn symbolic(&self) -> Option<String> {
        self.exact().map(QuadExt::symbolic)
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Real::Exact(x) => write!(f, "{x}"),
            Real::Approx(iv) => write!(f, "{iv}"),
        }
    }
}

impl From<QuadExt> for Real {
    fn from(x: QuadExt) -> Self {
        Real::Exact(x)
    }
}
