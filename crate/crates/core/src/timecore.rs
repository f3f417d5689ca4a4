//! Integer-day time model with ACT/360 year fractions.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::Ratio;

use crate::scalar::Scalar;

/// A calendar-free point in time, counted in whole days from an arbitrary epoch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct TimePoint(pub i64);

impl TimePoint {
    pub const fn new(day: i64) -> Self {
        TimePoint(day)
    }

    pub const fn day(self) -> i64 {
        self.0
    }

    pub const fn plus_days(self, days: i64) -> Self {
        TimePoint(self.0 + days)
    }
}

impl From<i64> for TimePoint {
    fn from(day: i64) -> Self {
        TimePoint(day)
    }
}

impl fmt::Display for TimePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Sub for TimePoint {
    type Output = i64;

    fn sub(self, rhs: TimePoint) -> i64 {
        self.0 - rhs.0
    }
}

/// Day count convention. Every fraction in this crate is ACT/360.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum DayCount {
    #[default]
    Act360,
}

impl DayCount {
    pub const fn days_per_year(self) -> i64 {
        match self {
            DayCount::Act360 => 360,
        }
    }
}

/// A span of days measured as a fraction of a year.
///
/// The day count is stored, not the real value, so sums and differences stay
/// exact and conversion to a scalar happens once at the point of use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct YearFraction {
    days: i64,
    convention: DayCount,
}

impl YearFraction {
    pub const ZERO: YearFraction = YearFraction {
        days: 0,
        convention: DayCount::Act360,
    };

    pub const fn from_days(days: i64) -> Self {
        YearFraction {
            days,
            convention: DayCount::Act360,
        }
    }

    pub const fn days(self) -> i64 {
        self.days
    }

    pub const fn convention(self) -> DayCount {
        self.convention
    }

    pub fn is_negative(self) -> bool {
        self.days < 0
    }

    /// `days / 360` in the requested scalar.
    pub fn value<T: Scalar>(self) -> T {
        T::from_int(self.days) / T::from_int(self.convention.days_per_year())
    }

    pub fn as_ratio(self) -> Ratio<i64> {
        Ratio::new(self.days, self.convention.days_per_year())
    }
}

impl Add for YearFraction {
    type Output = YearFraction;

    fn add(self, rhs: YearFraction) -> YearFraction {
        YearFraction::from_days(self.days + rhs.days)
    }
}

impl Sub for YearFraction {
    type Output = YearFraction;

    fn sub(self, rhs: YearFraction) -> YearFraction {
        YearFraction::from_days(self.days - rhs.days)
    }
}

impl Neg for YearFraction {
    type Output = YearFraction;

    fn neg(self) -> YearFraction {
        YearFraction::from_days(-self.days)
    }
}

/// ACT/360 fraction from `from` to `to`. Negative spans are returned as-is.
pub fn year_fraction(from: TimePoint, to: TimePoint) -> YearFraction {
    YearFraction::from_days(to - from)
}
