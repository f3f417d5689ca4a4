//! Day-by-day valuation replay, PNL attribution, and the accrual-basis
//! cash / deferral / NPV ledger.

use crate::error::{Error, Result};
use crate::instrument::{trade_phase, ForwardRateAgreement, PaymentTiming, Phase, Trade};
use crate::risk::risk_report;
use crate::scalar::Scalar;
use crate::timecore::{year_fraction, TimePoint};
use crate::valuation::{fra_settlement, pv_breakdown, Market};

/// One simulated day.
///
/// `pv_taylor = notional_leg + accrued + mtm_adj` and
/// `unexplained = pv_dcf - pv_taylor` as in the valuation breakdown.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimRow<T> {
    pub day: TimePoint,
    pub phase: Phase,
    pub notional_leg: T,
    pub pv_dcf: T,
    pub accrued: T,
    pub mtm_adj: T,
    pub pv_taylor: T,
    pub unexplained: T,
    /// Cumulative cash exchanged since inception, lender-positive.
    pub cash_position: T,
    /// Change of `pv_dcf + cash_position` since the previous row.
    pub daily_pnl: Option<T>,
    pub theta_accrual: T,
    pub theta_mtm: T,
    pub rho: T,
    /// Market rate driving the mark-to-market term on this day.
    pub rate: T,
    pub deferral: T,
}

impl<T: Scalar> SimRow<T> {
    pub fn total_value(&self) -> T {
        self.pv_dcf + self.cash_position
    }
}

/// Accrual-basis position on one day.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ledger<T> {
    pub day: TimePoint,
    pub cash_position: T,
    pub coupon_received: T,
    pub deferral: T,
    pub security_pv: T,
    /// `cash_position + security_pv`.
    pub npv: T,
}

impl<T: Scalar> Ledger<T> {
    fn new(day: TimePoint, cash: T, coupon: T, deferral: T, security: T) -> Self {
        Ledger {
            day,
            cash_position: cash,
            coupon_received: coupon,
            deferral,
            security_pv: security,
            npv: cash + security,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AttributionRow<T> {
    pub day: TimePoint,
    pub daily_pnl: T,
    pub theta_accrual: T,
    pub theta_mtm: T,
    pub rho_effect: T,
    pub residual: T,
    /// The trade changed phase between the previous row and this one.
    pub phase_change: bool,
}

/// Deferral of an up-front coupon: `-N * r * dt(t, end)` from the start
/// (inclusive) to the end (exclusive), zero elsewhere.
pub fn deferral<T: Scalar>(trade: &ForwardRateAgreement<T>, t: TimePoint) -> T {
    let s = trade.schedule();
    if t < s.start() || t >= s.end() {
        return T::zero();
    }
    -(trade.notional * trade.contract_rate * year_fraction(t, s.end()).value::<T>())
}

fn horizon_len(from: TimePoint, to: TimePoint) -> Result<usize> {
    if to < from {
        return Err(Error::EmptyHorizon);
    }
    Ok((to - from) as usize + 1)
}

/// Replays the trade over `from..=to` with one market state per day,
/// `markets[i]` applying to day `from + i`.
///
/// A deposit with a floating rate is fixed on its start day from that day's
/// forecast curve; an FRA settles on its start day against the same rate.
/// Both therefore need the start day inside the horizon when the horizon
/// begins after the start.
pub fn simulate<T: Scalar>(
    trade: &Trade<T>,
    markets: &[Market<T>],
    from: TimePoint,
    to: TimePoint,
) -> Result<Vec<SimRow<T>>> {
    let len = horizon_len(from, to)?;
    if markets.len() != len {
        return Err(Error::MarketLengthMismatch {
            expected: len,
            actual: markets.len(),
        });
    }
    let mut trade = *trade;
    let mut settlement: Option<T> = None;
    let mut rows: Vec<SimRow<T>> = Vec::with_capacity(len);
    for (offset, market) in markets.iter().enumerate() {
        let day = from.plus_days(offset as i64);
        observe_fixing(&mut trade, &mut settlement, market, day)?;
        let b = pv_breakdown(&trade, market, day)?;
        let risk = risk_report(&trade, market, day)?;
        let cash = cash_position(&trade, settlement, day)?;
        let daily_pnl = rows
            .last()
            .map(|prev| (b.pv_dcf - prev.pv_dcf) + (cash - prev.cash_position));
        rows.push(SimRow {
            day,
            phase: trade_phase(&trade, day),
            notional_leg: b.notional_leg,
            pv_dcf: b.pv_dcf,
            accrued: b.accrued,
            mtm_adj: b.mtm_adjustment,
            pv_taylor: b.pv_taylor,
            unexplained: b.unexplained,
            cash_position: cash,
            daily_pnl,
            theta_accrual: risk.theta_accrual,
            theta_mtm: risk.theta_mtm,
            rho: risk.rho,
            rate: driving_rate(&trade, market, day)?,
            deferral: match &trade {
                Trade::Fra(f) => deferral(f, day),
                _ => T::zero(),
            },
        });
    }
    Ok(rows)
}

/// [`simulate`] with the same market every day: the given curves are
/// re-anchored at each valuation date, keeping rates per tenor unchanged.
pub fn simulate_constant<T: Scalar>(
    trade: &Trade<T>,
    market: &Market<T>,
    from: TimePoint,
    to: TimePoint,
) -> Result<Vec<SimRow<T>>> {
    let len = horizon_len(from, to)?;
    let markets: Vec<_> = (0..len as i64)
        .map(|i| market.rolled_to(from.plus_days(i)))
        .collect();
    simulate(trade, &markets, from, to)
}

fn observe_fixing<T: Scalar>(
    trade: &mut Trade<T>,
    settlement: &mut Option<T>,
    market: &Market<T>,
    day: TimePoint,
) -> Result<()> {
    match trade {
        Trade::Floating(d) if d.fixing().is_none() && day >= d.schedule().start() => {
            let s = *d.schedule();
            if day > s.start() {
                return Err(Error::MissingFixing { day });
            }
            if day < s.end() {
                let rate = market.forecast().rate_between(s.start(), s.end())?;
                d.fix(rate)?;
            }
        }
        Trade::Fra(f) if settlement.is_none() && day >= f.schedule().start() => {
            let s = *f.schedule();
            if day > s.start() {
                return Err(Error::MissingFixing { day: s.start() });
            }
            let rate = market.forecast().rate_between(s.start(), s.end())?;
            *settlement = Some(fra_settlement(f, rate));
        }
        _ => {}
    }
    Ok(())
}

fn cash_position<T: Scalar>(trade: &Trade<T>, settlement: Option<T>, day: TimePoint) -> Result<T> {
    let zero = T::zero();
    Ok(match trade {
        Trade::Fixed(d) => deposit_cash(d.notional, d.redemption(), d.schedule(), day),
        Trade::Floating(d) => match d.fixed_equivalent() {
            Some(fixed) => deposit_cash(d.notional, fixed.redemption(), d.schedule(), day),
            None => zero,
        },
        Trade::Fra(_) => settlement.unwrap_or(zero),
        Trade::Call(c) if day >= c.start => -c.notional,
        Trade::Call(_) => zero,
    })
}

// Lend at the start; the final payment arrives after the maturity-day row,
// which still carries it in the trade value.
fn deposit_cash<T: Scalar>(
    notional: T,
    redemption: T,
    schedule: &crate::instrument::Schedule,
    day: TimePoint,
) -> T {
    if day < schedule.start() {
        T::zero()
    } else if day <= schedule.end() {
        -notional
    } else {
        -notional + redemption
    }
}

fn driving_rate<T: Scalar>(trade: &Trade<T>, market: &Market<T>, day: TimePoint) -> Result<T> {
    let curve = &market.discount;
    let Some(s) = trade.schedule() else {
        return Ok(T::zero());
    };
    if day > s.end() {
        return Ok(T::zero());
    }
    match (trade, trade_phase(trade, day)) {
        (Trade::Fra(_), Phase::Forward) => {
            market.forecast().implied_forward_rate(s.start(), s.end())
        }
        (Trade::Fra(_), _) => Ok(T::zero()),
        (_, Phase::Forward) => curve.implied_forward_rate(s.start(), s.end()),
        _ => curve.rate_between(day, s.end()),
    }
}

/// Splits each day's PNL into carry at the trade rate, carry from the
/// market/trade rate gap, the rate move times rho, and what is left over.
/// Greeks are taken from the earlier of the two rows.
pub fn attribute<T: Scalar>(rows: &[SimRow<T>]) -> Result<Vec<AttributionRow<T>>> {
    if rows.len() < 2 {
        return Err(Error::TooFewRows);
    }
    Ok(rows
        .windows(2)
        .map(|pair| {
            let (prev, cur) = (&pair[0], &pair[1]);
            let days = T::from_int(cur.day - prev.day);
            let daily_pnl = (cur.pv_dcf - prev.pv_dcf) + (cur.cash_position - prev.cash_position);
            let theta_accrual = prev.theta_accrual * days;
            let theta_mtm = prev.theta_mtm * days;
            let rho_effect = prev.rho * (cur.rate - prev.rate);
            AttributionRow {
                day: cur.day,
                daily_pnl,
                theta_accrual,
                theta_mtm,
                rho_effect,
                residual: daily_pnl - theta_accrual - theta_mtm - rho_effect,
                phase_change: prev.phase != cur.phase,
            }
        })
        .collect())
}

/// Accrual-basis ledger after all flows due on `t` have settled.
pub fn ledger_entry<T: Scalar>(trade: &Trade<T>, t: TimePoint) -> Result<Ledger<T>> {
    ledger_at(trade, t, false)
}

/// Ledger an instant before `t`, with flows due on `t` still outstanding.
pub fn ledger_entry_before<T: Scalar>(trade: &Trade<T>, t: TimePoint) -> Result<Ledger<T>> {
    ledger_at(trade, t, true)
}

fn ledger_at<T: Scalar>(trade: &Trade<T>, t: TimePoint, before: bool) -> Result<Ledger<T>> {
    let zero = T::zero();
    let n = trade.notional();
    let rate = match trade.fixed_rate() {
        Some(r) => r,
        None => {
            return Err(Error::Unsupported {
                operation: "ledger profile",
                kind: "floating deposit without a fixing",
            })
        }
    };
    let started = if before {
        t > trade.start()
    } else {
        t >= trade.start()
    };
    if !started {
        return Ok(Ledger::new(t, zero, zero, zero, zero));
    }
    let Some(schedule) = trade.schedule() else {
        // Call account: lent at the start, accruing with no maturity.
        let accrued = n * rate * year_fraction(trade.start(), t).value::<T>();
        return Ok(Ledger::new(t, -n, zero, zero, n + accrued));
    };
    let paid = if before {
        t > schedule.end()
    } else {
        t >= schedule.end()
    };
    let coupon = n * rate * schedule.period().value::<T>();
    match schedule.pay_at() {
        PaymentTiming::End => {
            if paid {
                Ok(Ledger::new(t, -n + (n + coupon), coupon, zero, zero))
            } else {
                let accrued = n * rate * year_fraction(schedule.start(), t).value::<T>();
                Ok(Ledger::new(t, -n, zero, zero, n + accrued))
            }
        }
        PaymentTiming::Start => {
            let deferral = if paid {
                zero
            } else {
                -(n * rate * year_fraction(t, schedule.end()).value::<T>())
            };
            Ok(Ledger::new(t, coupon, coupon, deferral, deferral))
        }
    }
}

/// Ledger for every day in `from..=to`.
pub fn ledger_profile<T: Scalar>(
    trade: &Trade<T>,
    from: TimePoint,
    to: TimePoint,
) -> Result<Vec<Ledger<T>>> {
    let len = horizon_len(from, to)?;
    (0..len as i64)
        .map(|i| ledger_entry(trade, from.plus_days(i)))
        .collect()
}
