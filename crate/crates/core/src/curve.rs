//! Simple-interest zero curve: discount factors and implied forwards.
//!
//! Rates are simple (money-market) rates on ACT/360, so the discount factor
//! over a span `dt` at zero rate `z` is `1 / (1 + z * dt)`. Discounting between
//! two future days goes through the ratio `DF(a, t2) / DF(a, t1)` so that the
//! forward rate implied by the curve reproduces the curve exactly.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::timecore::{year_fraction, TimePoint};

/// A discount factor. Positive by construction.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct DiscountFactor<T>(T);

impl<T: Scalar> DiscountFactor<T> {
    pub fn one() -> Self {
        DiscountFactor(T::one())
    }

    pub fn value(self) -> T {
        self.0
    }
}

/// Zero rates by day with linear interpolation and flat extrapolation.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroCurve<T> {
    anchor: TimePoint,
    pillars: Vec<(TimePoint, T)>,
}

impl<T: Scalar> ZeroCurve<T> {
    pub fn new(anchor: TimePoint, pillars: Vec<(TimePoint, T)>) -> Result<Self> {
        if pillars.is_empty() {
            return Err(Error::EmptyCurve);
        }
        for (day, rate) in &pillars {
            if !rate.is_finite() {
                return Err(Error::NonFiniteRate { day: *day });
            }
        }
        for pair in pillars.windows(2) {
            if pair[1].0 <= pair[0].0 {
                return Err(Error::NonIncreasingPillars {
                    previous: pair[0].0,
                    next: pair[1].0,
                });
            }
        }
        Ok(ZeroCurve { anchor, pillars })
    }

    /// A single-pillar curve: the same rate for every tenor.
    pub fn flat(anchor: TimePoint, rate: T) -> Result<Self> {
        Self::new(anchor, vec![(anchor.plus_days(1), rate)])
    }

    pub fn builder(anchor: TimePoint) -> ZeroCurveBuilder<T> {
        ZeroCurveBuilder::new(anchor)
    }

    pub fn anchor(&self) -> TimePoint {
        self.anchor
    }

    pub fn pillars(&self) -> &[(TimePoint, T)] {
        &self.pillars
    }

    /// Zero rate from the anchor to `to`.
    pub fn zero_rate(&self, to: TimePoint) -> T {
        let first = self.pillars[0];
        let last = self.pillars[self.pillars.len() - 1];
        if to <= first.0 {
            return first.1;
        }
        if to >= last.0 {
            return last.1;
        }
        let idx = self.pillars.partition_point(|(day, _)| *day <= to);
        let (d0, z0) = self.pillars[idx - 1];
        if d0 == to {
            return z0;
        }
        let (d1, z1) = self.pillars[idx];
        let w = T::from_int(to - d0) / T::from_int(d1 - d0);
        z0 + (z1 - z0) * w
    }

    fn df_from_anchor(&self, to: TimePoint) -> Result<T> {
        if to < self.anchor {
            return Err(Error::BeforeAnchor {
                day: to,
                anchor: self.anchor,
            });
        }
        let dt = year_fraction(self.anchor, to).value::<T>();
        let denom = T::one() + self.zero_rate(to) * dt;
        if denom <= T::zero() {
            return Err(Error::NonPositiveDiscount {
                from: self.anchor,
                to,
            });
        }
        Ok(T::one() / denom)
    }

    pub fn discount_factor(&self, from: TimePoint, to: TimePoint) -> Result<DiscountFactor<T>> {
        if from > to {
            return Err(Error::ReversedInterval { from, to });
        }
        if from < self.anchor {
            return Err(Error::BeforeAnchor {
                day: from,
                anchor: self.anchor,
            });
        }
        let to_df = self.df_from_anchor(to)?;
        if from == to {
            return Ok(DiscountFactor::one());
        }
        if from == self.anchor {
            return Ok(DiscountFactor(to_df));
        }
        let from_df = self.df_from_anchor(from)?;
        Ok(DiscountFactor(to_df / from_df))
    }

    /// Simple forward rate `f` with `1 + f * dt12 = DF(a, t1) / DF(a, t2)`.
    pub fn implied_forward_rate(&self, t1: TimePoint, t2: TimePoint) -> Result<T> {
        if t1 >= t2 {
            return Err(Error::EmptyPeriod { start: t1, end: t2 });
        }
        if t1 < self.anchor {
            return Err(Error::BeforeAnchor {
                day: t1,
                anchor: self.anchor,
            });
        }
        let df1 = self.df_from_anchor(t1)?;
        let df2 = self.df_from_anchor(t2)?;
        let dt = year_fraction(t1, t2).value::<T>();
        Ok((df1 / df2 - T::one()) / dt)
    }

    /// Simple rate consistent with `discount_factor(from, to)`.
    ///
    /// From the anchor this is the zero rate; from a later day it is the
    /// implied forward. For an empty span the zero rate at `to` is returned.
    pub fn rate_between(&self, from: TimePoint, to: TimePoint) -> Result<T> {
        if from > to {
            return Err(Error::ReversedInterval { from, to });
        }
        if from < self.anchor {
            return Err(Error::BeforeAnchor {
                day: from,
                anchor: self.anchor,
            });
        }
        if from == self.anchor || from == to {
            // Validates discount factor positivity on the way.
            self.df_from_anchor(to)?;
            return Ok(self.zero_rate(to));
        }
        self.implied_forward_rate(from, to)
    }

    /// Parallel shift of every pillar rate.
    pub fn shifted(&self, bump: T) -> Self {
        ZeroCurve {
            anchor: self.anchor,
            pillars: self.pillars.iter().map(|&(d, z)| (d, z + bump)).collect(),
        }
    }

    /// Same rates at the same tenors, re-anchored at `anchor`.
    pub fn rolled_to(&self, anchor: TimePoint) -> Self {
        let offset = anchor - self.anchor;
        ZeroCurve {
            anchor,
            pillars: self
                .pillars
                .iter()
                .map(|&(d, z)| (d.plus_days(offset), z))
                .collect(),
        }
    }
}

/// Builds a curve from zero-rate pillars and forward rates chained onto the
/// previous pillar.
#[derive(Debug, Clone)]
pub struct ZeroCurveBuilder<T> {
    anchor: TimePoint,
    pillars: Vec<(TimePoint, T)>,
    error: Option<Error>,
}

impl<T: Scalar> ZeroCurveBuilder<T> {
    pub fn new(anchor: TimePoint) -> Self {
        ZeroCurveBuilder {
            anchor,
            pillars: Vec::new(),
            error: None,
        }
    }

    pub fn pillar(mut self, day: TimePoint, rate: T) -> Self {
        self.pillars.push((day, rate));
        self
    }

    /// Adds a pillar at `day` such that the simple forward rate from the
    /// previous pillar (or the anchor) to `day` equals `rate`.
    pub fn forward(mut self, day: TimePoint, rate: T) -> Self {
        if self.error.is_some() {
            return self;
        }
        match self.forward_pillar(day, rate) {
            Ok(z) => self.pillars.push((day, z)),
            Err(e) => self.error = Some(e),
        }
        self
    }

    fn forward_pillar(&self, day: TimePoint, rate: T) -> Result<T> {
        let (prev_day, prev_df) = match self.pillars.last() {
            Some(&(d, z)) => {
                let dt = year_fraction(self.anchor, d).value::<T>();
                let denom = T::one() + z * dt;
                if denom <= T::zero() {
                    return Err(Error::NonPositiveDiscount {
                        from: self.anchor,
                        to: d,
                    });
                }
                (d, T::one() / denom)
            }
            None => (self.anchor, T::one()),
        };
        if day <= prev_day {
            return Err(Error::NonIncreasingPillars {
                previous: prev_day,
                next: day,
            });
        }
        let fwd_denom = T::one() + rate * year_fraction(prev_day, day).value::<T>();
        if fwd_denom <= T::zero() {
            return Err(Error::NonPositiveDiscount {
                from: prev_day,
                to: day,
            });
        }
        let df = prev_df / fwd_denom;
        let dt = year_fraction(self.anchor, day).value::<T>();
        Ok((T::one() / df - T::one()) / dt)
    }

    pub fn build(self) -> Result<ZeroCurve<T>> {
        if let Some(e) = self.error {
            return Err(e);
        }
        ZeroCurve::new(self.anchor, self.pillars)
    }
}
