//! First-order Greeks from the Taylor decomposition, with finite-difference
//! oracles on the exact DCF value.

use crate::curve::ZeroCurve;
use crate::error::{Error, Result};
use crate::instrument::{trade_phase, FixedDeposit, Phase, Trade};
use crate::scalar::Scalar;
use crate::timecore::{year_fraction, TimePoint};
use crate::valuation::{pv_breakdown, Market};

/// Rate bump for [`fd_rho`]: 1e-6, i.e. 0.01bp.
pub const DEFAULT_RATE_BUMP: f64 = 1e-6;

const BASIS_POINT: i64 = 10_000;

/// Daily theta split into the part earned at the trade rate and the part
/// coming from the gap between market and trade rate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaSplit<T> {
    /// Always `theta_accrual + theta_mtm`.
    pub theta: T,
    pub theta_accrual: T,
    pub theta_mtm: T,
}

impl<T: Scalar> ThetaSplit<T> {
    pub fn new(theta_accrual: T, theta_mtm: T) -> Self {
        ThetaSplit {
            theta: theta_accrual + theta_mtm,
            theta_accrual,
            theta_mtm,
        }
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RiskReport<T> {
    pub theta: T,
    pub theta_accrual: T,
    pub theta_mtm: T,
    /// PV change per 1.0 (100%) parallel move in rates.
    pub rho: T,
    pub duration_days: i64,
}

impl<T: Scalar> RiskReport<T> {
    pub fn rho_per_bp(&self) -> T {
        self.rho / T::from_int(BASIS_POINT)
    }
}

fn per_day<T: Scalar>(annual: T) -> T {
    annual / T::from_int(360)
}

/// `theta = N z / 360` split as `N r / 360 + N (z - r) / 360`, where `z` is
/// the rate from `t` to maturity.
pub fn analytic_theta<T: Scalar>(
    trade: &FixedDeposit<T>,
    curve: &ZeroCurve<T>,
    t: TimePoint,
) -> Result<ThetaSplit<T>> {
    let phase = trade.phase(t);
    if phase != Phase::Cash {
        return Err(Error::WrongPhase {
            operation: "analytic theta",
            expected: Phase::Cash.name(),
            actual: phase,
            day: t,
        });
    }
    let z = curve.rate_between(t, trade.schedule().end())?;
    let n = trade.notional;
    Ok(ThetaSplit::new(
        per_day(n * trade.rate),
        per_day(n * (z - trade.rate)),
    ))
}

/// Days from the later of `t` and the period start to the period end.
pub fn remaining_accrual_days<T: Scalar>(trade: &Trade<T>, t: TimePoint) -> i64 {
    match (trade.schedule(), trade_phase(trade, t)) {
        (_, Phase::Matured) | (None, _) => 0,
        (Some(s), _) => s.end() - t.max(s.start()),
    }
}

/// First-order rho, `-N * dt` over the remaining accrual period.
///
/// Call accounts and matured trades have no duration. A forward-starting
/// deposit or FRA is only exposed over its accrual period, so `dt` runs from
/// the later of `t` and the start.
pub fn analytic_rho<T: Scalar>(trade: &Trade<T>, t: TimePoint) -> T {
    let exposed = match trade {
        Trade::Call(_) => false,
        Trade::Floating(d) => d.fixing().is_some(),
        Trade::Fixed(_) | Trade::Fra(_) => true,
    };
    if !exposed {
        return T::zero();
    }
    let days = remaining_accrual_days(trade, t);
    -trade.notional() * T::from_int(days) / T::from_int(360)
}

/// Analytic theta split and rho for any trade.
pub fn risk_report<T: Scalar>(
    trade: &Trade<T>,
    market: &Market<T>,
    t: TimePoint,
) -> Result<RiskReport<T>> {
    let phase = trade_phase(trade, t);
    let split = match (trade, phase) {
        (Trade::Fixed(d), Phase::Cash) => analytic_theta(d, &market.discount, t)?,
        (Trade::Floating(d), Phase::Cash) => match d.fixed_equivalent() {
            Some(fixed) => analytic_theta(&fixed, &market.discount, t)?,
            None => return Err(Error::MissingFixing { day: t }),
        },
        (Trade::Call(c), Phase::Cash) => ThetaSplit::new(per_day(c.notional * c.rate), T::zero()),
        // Forward values carry no first-order time decay; matured ones none.
        _ => ThetaSplit::zero(),
    };
    Ok(RiskReport {
        theta: split.theta,
        theta_accrual: split.theta_accrual,
        theta_mtm: split.theta_mtm,
        rho: analytic_rho(trade, t),
        duration_days: remaining_accrual_days(trade, t),
    })
}

fn dcf_value<T: Scalar>(trade: &Trade<T>, market: &Market<T>, t: TimePoint) -> Result<T> {
    Ok(pv_breakdown(trade, market, t)?.pv_dcf)
}

/// `pv(t + 1) - pv(t)` with the market rolled forward one day unchanged.
pub fn fd_theta<T: Scalar>(trade: &Trade<T>, market: &Market<T>, t: TimePoint) -> Result<T> {
    let next = t.plus_days(1);
    let (before, after) = (trade_phase(trade, t), trade_phase(trade, next));
    if before != after {
        return Err(Error::PhaseChange {
            day: t,
            before,
            after,
        });
    }
    let shift = year_fraction(t, next).days();
    let rolled = market.rolled_to(market.discount.anchor().plus_days(shift));
    Ok(dcf_value(trade, &rolled, next)? - dcf_value(trade, market, t)?)
}

/// Central difference of the DCF value under a parallel curve shift.
pub fn fd_rho<T: Scalar>(trade: &Trade<T>, market: &Market<T>, t: TimePoint, bump: T) -> Result<T> {
    if bump <= T::zero() || !bump.is_finite() {
        return Err(Error::InvalidBump);
    }
    let up = dcf_value(trade, &market.shifted(bump), t)?;
    let down = dcf_value(trade, &market.shifted(-bump), t)?;
    Ok((up - down) / (bump + bump))
}
