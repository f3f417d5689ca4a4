//! Trade definitions and phase classification.
//!
//! Notionals are lender-positive: a positive notional means we lend and
//! receive interest.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::timecore::{year_fraction, TimePoint, YearFraction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PaymentTiming {
    /// Interest and principal are paid at the end of the period.
    End,
    /// Interest is paid at the start of the period (FRA style).
    Start,
}

/// Where a valuation date sits relative to the accrual period.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Phase {
    Forward,
    Cash,
    Matured,
}

impl Phase {
    pub fn name(self) -> &'static str {
        match self {
            Phase::Forward => "forward",
            Phase::Cash => "cash",
            Phase::Matured => "matured",
        }
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Schedule {
    start: TimePoint,
    end: TimePoint,
    pay_at: PaymentTiming,
}

impl Schedule {
    pub fn new(start: TimePoint, end: TimePoint, pay_at: PaymentTiming) -> Result<Self> {
        if start >= end {
            return Err(Error::InvalidSchedule { start, end });
        }
        Ok(Schedule { start, end, pay_at })
    }

    pub fn start(&self) -> TimePoint {
        self.start
    }

    pub fn end(&self) -> TimePoint {
        self.end
    }

    pub fn pay_at(&self) -> PaymentTiming {
        self.pay_at
    }

    /// Full accrual period, start to end.
    pub fn period(&self) -> YearFraction {
        year_fraction(self.start, self.end)
    }

    /// Start is inclusive; the end day belongs to the matured phase.
    pub fn phase(&self, t: TimePoint) -> Phase {
        if t < self.start {
            Phase::Forward
        } else if t < self.end {
            Phase::Cash
        } else {
            Phase::Matured
        }
    }
}

fn check_notional<T: Scalar>(notional: T) -> Result<()> {
    if !notional.is_finite() {
        return Err(Error::NonFinite { what: "notional" });
    }
    if notional.is_zero() {
        return Err(Error::ZeroNotional);
    }
    Ok(())
}

fn check_rate<T: Scalar>(rate: T, what: &'static str) -> Result<()> {
    if rate.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite { what })
    }
}

/// Fixed-rate deposit paying principal plus interest at the end.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedDeposit<T> {
    pub notional: T,
    pub rate: T,
    schedule: Schedule,
}

impl<T: Scalar> FixedDeposit<T> {
    pub fn new(notional: T, rate: T, start: TimePoint, end: TimePoint) -> Result<Self> {
        check_notional(notional)?;
        check_rate(rate, "rate")?;
        Ok(FixedDeposit {
            notional,
            rate,
            schedule: Schedule::new(start, end, PaymentTiming::End)?,
        })
    }

    pub fn schedule(&self) -> &Schedule {
        &self.schedule
    }

    pub fn phase(&self, t: TimePoint) -> Phase {
        self.schedule.phase(t)
    }

    /// Principal plus interest paid at maturity, `N + N * r * dt12`.
    pub fn redemption(&self) -> T {
        self.notional + self.coupon()
    }

    pub fn coupon(&self) -> T {
        self.notional * self.rate * self.schedule.period().value::<T>()
    }
}

/// Deposit paying a floating rate plus a fixed spread.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FloatingDeposit<T> {
    pub notional: T,
    pub spread: T,
    fixing: Option<T>,
    schedule: Schedule,
}

impl<T: Scalar> FloatingDeposit<T> {
    pub fn new(notional: T, spread: T, start: TimePoint, end: TimePoint) -> Result<Self> {
        check_notional(notional)?;
        check_rate(spread, "spread")?;
        Ok(FloatingDeposit {
            notional,
            spread,
            fixing: None,
            schedule: Schedule::new(start, end, PaymentTiming::End)?,
        })
    }

    /// Records the floating rate fixing. A deposit fixes at most once.
    pub fn fix(&mut self, rate: T) -> Result<()> {
        check_rate(rate, "fixing")?;
        if self.fixing.is_some() {
            return Err(Error::AlreadyFixed);
        }
        self.fixing = Some(rate);
        Ok(())
    }

    pub fn with_fixing(mut self, rate: T) -> Result<Self> {
        self.fix(rate)?;
        Ok(self)
    }

    pub fn fixing(&self) -> Option<T> {
        self.fixing
    }

    pub fn schedule(&self) -> &Schedule {
        &self.schedule
    }

    pub fn phase(&self, t: TimePoint) -> Phase {
        self.schedule.phase(t)
    }

    /// The fixed deposit this trade becomes once fixed: rate = fixing + spread.
    pub fn fixed_equivalent(&self) -> Option<FixedDeposit<T>> {
        self.fixing.map(|f| FixedDeposit {
            notional: self.notional,
            rate: f + self.spread,
            schedule: self.schedule,
        })
    }
}

/// Forward rate agreement: receive the contract rate against the floating
/// rate, settled discounted at the start of the period.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ForwardRateAgreement<T> {
    pub notional: T,
    pub contract_rate: T,
    schedule: Schedule,
}

impl<T: Scalar> ForwardRateAgreement<T> {
    pub fn new(notional: T, contract_rate: T, start: TimePoint, end: TimePoint) -> Result<Self> {
        check_notional(notional)?;
        check_rate(contract_rate, "contract rate")?;
        Ok(ForwardRateAgreement {
            notional,
            contract_rate,
            schedule: Schedule::new(start, end, PaymentTiming::Start)?,
        })
    }

    pub fn schedule(&self) -> &Schedule {
        &self.schedule
    }

    pub fn phase(&self, t: TimePoint) -> Phase {
        self.schedule.phase(t)
    }
}

/// Open-ended deposit callable at any time; treated as zero duration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CallAccount<T> {
    pub notional: T,
    pub rate: T,
    pub start: TimePoint,
}

impl<T: Scalar> CallAccount<T> {
    pub fn new(notional: T, rate: T, start: TimePoint) -> Result<Self> {
        check_notional(notional)?;
        check_rate(rate, "rate")?;
        Ok(CallAccount {
            notional,
            rate,
            start,
        })
    }

    pub fn phase(&self, t: TimePoint) -> Phase {
        if t < self.start {
            Phase::Forward
        } else {
            Phase::Cash
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Trade<T> {
    Fixed(FixedDeposit<T>),
    Floating(FloatingDeposit<T>),
    Fra(ForwardRateAgreement<T>),
    Call(CallAccount<T>),
}

impl<T: Scalar> Trade<T> {
    pub fn kind(&self) -> &'static str {
        match self {
            Trade::Fixed(_) => "fixed deposit",
            Trade::Floating(_) => "floating deposit",
            Trade::Fra(_) => "forward rate agreement",
            Trade::Call(_) => "call account",
        }
    }

    pub fn notional(&self) -> T {
        match self {
            Trade::Fixed(d) => d.notional,
            Trade::Floating(d) => d.notional,
            Trade::Fra(f) => f.notional,
            Trade::Call(c) => c.notional,
        }
    }

    pub fn schedule(&self) -> Option<&Schedule> {
        match self {
            Trade::Fixed(d) => Some(d.schedule()),
            Trade::Floating(d) => Some(d.schedule()),
            Trade::Fra(f) => Some(f.schedule()),
            Trade::Call(_) => None,
        }
    }

    pub fn start(&self) -> TimePoint {
        match self {
            Trade::Call(c) => c.start,
            _ => self.schedule().map(Schedule::start).unwrap_or_default(),
        }
    }

    /// The rate the trade accrues at, when it is known.
    pub fn fixed_rate(&self) -> Option<T> {
        match self {
            Trade::Fixed(d) => Some(d.rate),
            Trade::Floating(d) => d.fixing().map(|f| f + d.spread),
            Trade::Fra(f) => Some(f.contract_rate),
            Trade::Call(c) => Some(c.rate),
        }
    }
}

impl<T> From<FixedDeposit<T>> for Trade<T> {
    fn from(d: FixedDeposit<T>) -> Self {
        Trade::Fixed(d)
    }
}

impl<T> From<FloatingDeposit<T>> for Trade<T> {
    fn from(d: FloatingDeposit<T>) -> Self {
        Trade::Floating(d)
    }
}

impl<T> From<ForwardRateAgreement<T>> for Trade<T> {
    fn from(f: ForwardRateAgreement<T>) -> Self {
        Trade::Fra(f)
    }
}

impl<T> From<CallAccount<T>> for Trade<T> {
    fn from(c: CallAccount<T>) -> Self {
        Trade::Call(c)
    }
}

/// Forward before the start, cash from the start (inclusive) to the end
/// (exclusive), matured from the end on. Call accounts never mature.
pub fn trade_phase<T: Scalar>(trade: &Trade<T>, valuation_date: TimePoint) -> Phase {
    match trade {
        Trade::Fixed(d) => d.phase(valuation_date),
        Trade::Floating(d) => d.phase(valuation_date),
        Trade::Fra(f) => f.phase(valuation_date),
        Trade::Call(c) => c.phase(valuation_date),
    }
}
