//! Drawings as exact-rational polylines and the good-drawing validator.
//!
//! All coordinates are arbitrary-precision rationals so that crossing counts
//! are certificates rather than approximations: every incidence decision is
//! a sign of an exact determinant.

mod drawing;
mod rational;
mod segments;
mod svg;

pub use drawing::{count_crossings, Crossing, CrossingReport, Drawing, Violation};
pub use rational::{format_rational, parse_rational};
pub use segments::{orient, SegContact};
pub use svg::{to_svg, SvgOptions};

use num::BigRational;

pub type Rat = BigRational;

/// A point in the plane with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Rat,
    pub y: Rat,
}

impl Point {
    pub fn new(x: Rat, y: Rat) -> Self {
        Point { x, y }
    }

    /// Point with integer coordinates.
    pub fn int(x: i64, y: i64) -> Self {
        Point {
            x: Rat::from_integer(x.into()),
            y: Rat::from_integer(y.into()),
        }
    }

    /// Point `(xn/xd, yn/yd)`.
    pub fn frac(xn: i64, xd: i64, yn: i64, yd: i64) -> Self {
        Point {
            x: Rat::new(xn.into(), xd.into()),
            y: Rat::new(yn.into(), yd.into()),
        }
    }
}

/// Shorthand for building a rational from a numerator/denominator pair.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}
