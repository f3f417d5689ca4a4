//! PV kernels: accrual, discounted cash flow, spread-based, Taylor
//! decomposition, floating deposits, FRAs and call accounts.
//!
//! Every kernel takes the valuation date explicitly or, for the `*_forward`
//! entry points, uses the curve anchor as the valuation date.

use crate::curve::ZeroCurve;
use crate::error::{Error, Result};
use crate::instrument::{
    CallAccount, FixedDeposit, FloatingDeposit, ForwardRateAgreement, Phase, Trade,
};
use crate::scalar::Scalar;
use crate::timecore::{year_fraction, TimePoint};

/// PV split into the accrual view and the mark-to-market bridge.
///
/// `pv_taylor = notional_leg + accrued + mtm_adjustment` and
/// `unexplained = pv_dcf - pv_taylor`, both by construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PvBreakdown<T> {
    pub notional_leg: T,
    pub accrued: T,
    pub mtm_adjustment: T,
    pub pv_taylor: T,
    pub pv_dcf: T,
    pub unexplained: T,
}

impl<T: Scalar> PvBreakdown<T> {
    pub fn new(notional_leg: T, accrued: T, mtm_adjustment: T, pv_dcf: T) -> Self {
        let pv_taylor = notional_leg + accrued + mtm_adjustment;
        PvBreakdown {
            notional_leg,
            accrued,
            mtm_adjustment,
            pv_taylor,
            pv_dcf,
            unexplained: pv_dcf - pv_taylor,
        }
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero(), T::zero(), T::zero())
    }
}

/// Market state for one valuation date: a discount curve and an optional
/// separate forecast curve for floating rates.
#[derive(Debug, Clone, PartialEq)]
pub struct Market<T> {
    pub discount: ZeroCurve<T>,
    pub forecast: Option<ZeroCurve<T>>,
}

impl<T: Scalar> Market<T> {
    pub fn single(curve: ZeroCurve<T>) -> Self {
        Market {
            discount: curve,
            forecast: None,
        }
    }

    pub fn with_forecast(discount: ZeroCurve<T>, forecast: ZeroCurve<T>) -> Self {
        Market {
            discount,
            forecast: Some(forecast),
        }
    }

    /// Forecast curve, falling back to the discount curve.
    pub fn forecast(&self) -> &ZeroCurve<T> {
        self.forecast.as_ref().unwrap_or(&self.discount)
    }

    pub fn rolled_to(&self, anchor: TimePoint) -> Self {
        Market {
            discount: self.discount.rolled_to(anchor),
            forecast: self.forecast.as_ref().map(|c| c.rolled_to(anchor)),
        }
    }

    /// Parallel shift applied to every curve.
    pub fn shifted(&self, bump: T) -> Self {
        Market {
            discount: self.discount.shifted(bump),
            forecast: self.forecast.as_ref().map(|c| c.shifted(bump)),
        }
    }
}

fn expect_phase(
    operation: &'static str,
    expected: Phase,
    actual: Phase,
    day: TimePoint,
) -> Result<()> {
    if expected == actual {
        Ok(())
    } else {
        Err(Error::WrongPhase {
            operation,
            expected: expected.name(),
            actual,
            day,
        })
    }
}

/// Accrual-based PV: `N * (1 + r * dt(start, t))` during the period, else 0.
pub fn accrual_pv<T: Scalar>(trade: &Trade<T>, t: TimePoint) -> Result<T> {
    let rate = match trade.fixed_rate() {
        Some(r) => r,
        None if t < trade.start() => return Ok(T::zero()),
        None => return Err(Error::MissingFixing { day: t }),
    };
    if crate::instrument::trade_phase(trade, t) != Phase::Cash {
        return Ok(T::zero());
    }
    let n = trade.notional();
    Ok(n + n * rate * year_fraction(trade.start(), t).value::<T>())
}

/// DCF value of a forward-starting deposit as of the curve anchor.
pub fn dcf_pv_forward<T: Scalar>(trade: &FixedDeposit<T>, curve: &ZeroCurve<T>) -> Result<T> {
    dcf_pv_forward_at(trade, curve, curve.anchor())
}

/// `-N * DF(t, t1) + N * (1 + r * dt12) * DF(t, t2)`.
pub fn dcf_pv_forward_at<T: Scalar>(
    trade: &FixedDeposit<T>,
    curve: &ZeroCurve<T>,
    t: TimePoint,
) -> Result<T> {
    expect_phase("forward DCF valuation", Phase::Forward, trade.phase(t), t)?;
    let s = trade.schedule();
    let df1 = curve.discount_factor(t, s.start())?.value();
    let df2 = curve.discount_factor(t, s.end())?.value();
    Ok(trade.redemption() * df2 - trade.notional * df1)
}

/// `N * (1 + r * dt12) * DF(t, t2)` for a started deposit; 0 from maturity on.
pub fn dcf_pv_cash<T: Scalar>(
    trade: &FixedDeposit<T>,
    curve: &ZeroCurve<T>,
    t: TimePoint,
) -> Result<T> {
    match trade.phase(t) {
        Phase::Matured => Ok(T::zero()),
        phase => {
            expect_phase("cash DCF valuation", Phase::Cash, phase, t)?;
            cum_payment_dcf(trade, curve, t)
        }
    }
}

// DCF value including the payment due on `t`; equals the redemption at t2.
fn cum_payment_dcf<T: Scalar>(
    trade: &FixedDeposit<T>,
    curve: &ZeroCurve<T>,
    t: TimePoint,
) -> Result<T> {
    let df = curve.discount_factor(t, trade.schedule().end())?.value();
    Ok(trade.redemption() * df)
}

/// Spread-based value as of the curve anchor.
pub fn spread_pv<T: Scalar>(trade: &FixedDeposit<T>, curve: &ZeroCurve<T>) -> Result<T> {
    spread_pv_at(trade, curve, curve.anchor())
}

/// `N * (r - z12) * dt12 * DF(t, t2)` with `z12` implied by the curve.
pub fn spread_pv_at<T: Scalar>(
    trade: &FixedDeposit<T>,
    curve: &ZeroCurve<T>,
    t: TimePoint,
) -> Result<T> {
    expect_phase("spread-based valuation", Phase::Forward, trade.phase(t), t)?;
    let s = trade.schedule();
    let z12 = curve.implied_forward_rate(s.start(), s.end())?;
    let df2 = curve.discount_factor(t, s.end())?.value();
    Ok(trade.notional * (trade.rate - z12) * s.period().value::<T>() * df2)
}

/// First-order spread value `N * (r - z12) * dt12`, without discounting.
pub fn spread_pv_taylor<T: Scalar>(trade: &FixedDeposit<T>, curve: &ZeroCurve<T>) -> Result<T> {
    let s = trade.schedule();
    let z12 = curve.implied_forward_rate(s.start(), s.end())?;
    Ok(trade.notional * (trade.rate - z12) * s.period().value::<T>())
}

/// Accrual plus mark-to-market decomposition of a started deposit.
///
/// The mark-to-market term uses the rate from `t` to maturity read off the
/// curve, `z = rate_between(t, t2)`, which is consistent with `DF(t, t2)`.
/// On the maturity day itself the breakdown reports the value with the final
/// payment still attached, the amount that moves to cash.
pub fn taylor_breakdown<T: Scalar>(
    trade: &FixedDeposit<T>,
    curve: &ZeroCurve<T>,
    t: TimePoint,
) -> Result<PvBreakdown<T>> {
    let s = trade.schedule();
    if t != s.end() {
        expect_phase("Taylor breakdown", Phase::Cash, trade.phase(t), t)?;
    }
    let n = trade.notional;
    let z = curve.rate_between(t, s.end())?;
    let remaining = year_fraction(t, s.end()).value::<T>();
    let accrued = n * trade.rate * year_fraction(s.start(), t).value::<T>();
    let mtm = n * (trade.rate - z) * remaining;
    Ok(PvBreakdown::new(
        n,
        accrued,
        mtm,
        cum_payment_dcf(trade, curve, t)?,
    ))
}

/// Floating deposit value as of the discount curve anchor.
///
/// A deposit that already carries a fixing is valued as the fixed deposit
/// paying fixing + spread.
pub fn floating_pv_forward<T: Scalar>(
    trade: &FloatingDeposit<T>,
    forecast: &ZeroCurve<T>,
    discount: &ZeroCurve<T>,
) -> Result<T> {
    if let Some(fixed) = trade.fixed_equivalent() {
        return spread_pv(&fixed, discount);
    }
    floating_pv_forward_at(trade, forecast, discount, discount.anchor())
}

/// `N * (f12 + s - z12) * dt12 * DF(t, t2)`: `f12` from the forecast curve,
/// `z12` and the discount factor from the discount curve.
pub fn floating_pv_forward_at<T: Scalar>(
    trade: &FloatingDeposit<T>,
    forecast: &ZeroCurve<T>,
    discount: &ZeroCurve<T>,
    t: TimePoint,
) -> Result<T> {
    Ok(floating_forward_parts(trade, forecast, discount, t)?.0)
}

// (exact, first-order) values of an unfixed forward floating deposit.
fn floating_forward_parts<T: Scalar>(
    trade: &FloatingDeposit<T>,
    forecast: &ZeroCurve<T>,
    discount: &ZeroCurve<T>,
    t: TimePoint,
) -> Result<(T, T)> {
    expect_phase(
        "floating forward valuation",
        Phase::Forward,
        trade.phase(t),
        t,
    )?;
    let s = trade.schedule();
    let f12 = forecast.implied_forward_rate(s.start(), s.end())?;
    let z12 = discount.implied_forward_rate(s.start(), s.end())?;
    let df2 = discount.discount_factor(t, s.end())?.value();
    let taylor = trade.notional * ((f12 - z12) + trade.spread) * s.period().value::<T>();
    Ok((taylor * df2, taylor))
}

/// FRA value with its first-order approximation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FraValuation<T> {
    /// `N * (r - f12) * dt12 / (1 + f12 * dt12) * DF(t, t1)`.
    pub exact: T,
    /// `N * (r - f12) * dt12`.
    pub taylor: T,
    pub forward_rate: T,
    pub discount_to_start: T,
}

pub fn fra_valuation<T: Scalar>(
    trade: &ForwardRateAgreement<T>,
    curve: &ZeroCurve<T>,
    t: TimePoint,
) -> Result<FraValuation<T>> {
    expect_phase("FRA valuation", Phase::Forward, trade.phase(t), t)?;
    let s = trade.schedule();
    let f12 = curve.implied_forward_rate(s.start(), s.end())?;
    let dt12 = s.period().value::<T>();
    let df1 = curve.discount_factor(t, s.start())?.value();
    let taylor = trade.notional * (trade.contract_rate - f12) * dt12;
    Ok(FraValuation {
        exact: taylor / (T::one() + f12 * dt12) * df1,
        taylor,
        forward_rate: f12,
        discount_to_start: df1,
    })
}

pub fn fra_pv<T: Scalar>(
    trade: &ForwardRateAgreement<T>,
    curve: &ZeroCurve<T>,
    t: TimePoint,
) -> Result<T> {
    Ok(fra_valuation(trade, curve, t)?.exact)
}

/// Amount the FRA settles for at the period start, given the fixed rate.
pub fn fra_settlement<T: Scalar>(trade: &ForwardRateAgreement<T>, fixing: T) -> T {
    let dt12 = trade.schedule().period().value::<T>();
    trade.notional * (trade.contract_rate - fixing) * dt12 / (T::one() + fixing * dt12)
}

/// Purely accrual-based value: zero duration, no mark-to-market.
pub fn call_account_pv<T: Scalar>(trade: &CallAccount<T>, t: TimePoint) -> T {
    if t < trade.start {
        return T::zero();
    }
    trade.notional + trade.notional * trade.rate * year_fraction(trade.start, t).value::<T>()
}

/// Uniform breakdown for any trade on any date.
///
/// Forward trades report the first-order spread value as their
/// mark-to-market adjustment with zero notional and accrued legs. Matured
/// trades report zeros, except a deposit on its maturity day (see
/// [`taylor_breakdown`]).
pub fn pv_breakdown<T: Scalar>(
    trade: &Trade<T>,
    market: &Market<T>,
    t: TimePoint,
) -> Result<PvBreakdown<T>> {
    let curve = &market.discount;
    match trade {
        Trade::Fixed(d) => fixed_breakdown(d, curve, t),
        Trade::Floating(d) => match (d.phase(t), d.fixed_equivalent()) {
            (Phase::Forward, Some(_)) => Err(Error::PrematureFixing { day: t }),
            (Phase::Forward, None) => {
                let (exact, taylor) = floating_forward_parts(d, market.forecast(), curve, t)?;
                Ok(PvBreakdown::new(T::zero(), T::zero(), taylor, exact))
            }
            (Phase::Matured, _) if t > d.schedule().end() => Ok(PvBreakdown::zero()),
            (_, Some(fixed)) => fixed_breakdown(&fixed, curve, t),
            (_, None) => Err(Error::MissingFixing { day: t }),
        },
        Trade::Fra(f) => match f.phase(t) {
            Phase::Forward => {
                let v = fra_valuation(f, curve, t)?;
                Ok(PvBreakdown::new(T::zero(), T::zero(), v.taylor, v.exact))
            }
            _ => Ok(PvBreakdown::zero()),
        },
        Trade::Call(c) => match c.phase(t) {
            Phase::Cash => {
                let accrued = c.notional * c.rate * year_fraction(c.start, t).value::<T>();
                Ok(PvBreakdown::new(
                    c.notional,
                    accrued,
                    T::zero(),
                    call_account_pv(c, t),
                ))
            }
            _ => Ok(PvBreakdown::zero()),
        },
    }
}

fn fixed_breakdown<T: Scalar>(
    d: &FixedDeposit<T>,
    curve: &ZeroCurve<T>,
    t: TimePoint,
) -> Result<PvBreakdown<T>> {
    match d.phase(t) {
        Phase::Forward => {
            let exact = dcf_pv_forward_at(d, curve, t)?;
            Ok(PvBreakdown::new(
                T::zero(),
                T::zero(),
                spread_pv_taylor(d, curve)?,
                exact,
            ))
        }
        Phase::Matured if t > d.schedule().end() => Ok(PvBreakdown::zero()),
        _ => taylor_breakdown(d, curve, t),
    }
}
