//! Randomized identities and error envelopes for the valuation, risk and
//! simulation layers.

use irpnl_core::pnlsim::{attribute, ledger_entry, simulate_constant};
use irpnl_core::risk::{analytic_rho, analytic_theta, fd_rho, fd_theta, DEFAULT_RATE_BUMP};
use irpnl_core::valuation::{dcf_pv_forward, spread_pv, taylor_breakdown};
use irpnl_core::{FixedDeposit, Market, Rational, TimePoint, Trade, ZeroCurve};
use proptest::prelude::*;

fn t(d: i64) -> TimePoint {
    TimePoint(d)
}

fn rate() -> impl Strategy<Value = f64> {
    -0.05f64..0.20
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn dcf_equals_spread_based(
        notional in 1.0f64..1e9,
        r in rate(),
        z1 in rate(),
        z2 in rate(),
        lead in 1i64..360,
        tenor in 1i64..=360,
    ) {
        let curve = ZeroCurve::new(t(0), vec![(t(lead), z1), (t(lead + tenor), z2)]).unwrap();
        let trade = FixedDeposit::new(notional, r, t(lead), t(lead + tenor)).unwrap();
        let dcf = dcf_pv_forward(&trade, &curve).unwrap();
        let spread = spread_pv(&trade, &curve).unwrap();
        prop_assert!((dcf - spread).abs() <= 1e-12 * notional, "dcf {} spread {}", dcf, spread);
    }

    #[test]
    fn dcf_equals_spread_based_exactly(
        notional in 1i64..1_000_000_000,
        r_bp in -500i64..2000,
        z1_bp in -500i64..2000,
        z2_bp in -500i64..2000,
        lead in 1i64..360,
        tenor in 1i64..=360,
    ) {
        let bp = |x: i64| Rational::new(x as i128, 10_000);
        let curve = ZeroCurve::new(t(0), vec![(t(lead), bp(z1_bp)), (t(lead + tenor), bp(z2_bp))]).unwrap();
        let trade = FixedDeposit::new(Rational::from_integer(notional as i128), bp(r_bp), t(lead), t(lead + tenor)).unwrap();
        prop_assert_eq!(dcf_pv_forward(&trade, &curve).unwrap(), spread_pv(&trade, &curve).unwrap());
    }

    #[test]
    fn taylor_residual_is_second_order(
        notional in 1.0f64..1e9,
        r in rate(),
        z in rate(),
        tenor in 1i64..=360,
        frac in 0.0f64..=1.0,
    ) {
        let now = (frac * tenor as f64).floor() as i64;
        let trade = FixedDeposit::new(notional, r, t(0), t(tenor)).unwrap();
        let curve = ZeroCurve::flat(t(now), z).unwrap();
        let b = taylor_breakdown(&trade, &curve, t(now)).unwrap();
        let d02 = tenor as f64 / 360.0;
        let bound = notional * (r.abs() + z.abs()).powi(2) * d02 * d02 * 3.0;
        prop_assert!(b.unexplained.abs() <= bound, "unexplained {} bound {}", b.unexplained, bound);
        prop_assert_eq!(b.pv_taylor, b.notional_leg + b.accrued + b.mtm_adjustment);
        prop_assert_eq!(b.unexplained, b.pv_dcf - b.pv_taylor);
    }

    #[test]
    fn par_carry_is_pure_accrual(
        notional in 1.0f64..1e9,
        r in rate(),
        tenor in 2i64..=360,
        frac in 0.0f64..1.0,
    ) {
        let now = ((frac * (tenor - 1) as f64).floor() as i64).min(tenor - 2);
        let trade = FixedDeposit::new(notional, r, t(0), t(tenor)).unwrap();
        let today = taylor_breakdown(&trade, &ZeroCurve::flat(t(now), r).unwrap(), t(now)).unwrap();
        let tomorrow = taylor_breakdown(&trade, &ZeroCurve::flat(t(now + 1), r).unwrap(), t(now + 1)).unwrap();
        let carry = tomorrow.pv_taylor - today.pv_taylor;
        prop_assert!((carry - notional * r / 360.0).abs() <= 1e-9 * notional.max(1.0));
    }

    #[test]
    fn theta_matches_finite_difference(
        notional in 1.0f64..1e9,
        r in rate(),
        z in rate(),
        tenor in 3i64..=360,
        frac in 0.0f64..1.0,
    ) {
        let now = (frac * (tenor - 2) as f64).floor() as i64;
        let deposit = FixedDeposit::new(notional, r, t(0), t(tenor)).unwrap();
        let market = Market::single(ZeroCurve::flat(t(now), z).unwrap());
        let fd = fd_theta(&Trade::Fixed(deposit), &market, t(now)).unwrap();
        let analytic = analytic_theta(&deposit, &market.discount, t(now)).unwrap();
        let d02 = tenor as f64 / 360.0;
        let bound = notional * (r.abs() + z.abs()).powi(2) * d02 * 2.0 / 360.0;
        prop_assert!((fd - analytic.theta).abs() <= bound + 1e-9 * notional);
    }

    #[test]
    fn rho_matches_finite_difference(
        notional in 1.0f64..1e9,
        r in rate(),
        z in 0.0f64..0.20,
        tenor in 2i64..=360,
        frac in 0.0f64..1.0,
    ) {
        let now = (frac * (tenor - 1) as f64).floor() as i64;
        let trade: Trade<f64> = FixedDeposit::new(notional, r, t(0), t(tenor)).unwrap().into();
        let market = Market::single(ZeroCurve::flat(t(now), z).unwrap());
        let fd = fd_rho(&trade, &market, t(now), DEFAULT_RATE_BUMP).unwrap();
        let analytic = analytic_rho(&trade, t(now));
        let remaining = (tenor - now) as f64 / 360.0;
        let bound = 2.0 * (z.abs() * remaining + r.abs() * tenor as f64 / 360.0) + 1e-6;
        prop_assert!((fd - analytic).abs() / (notional * remaining) <= bound);
        prop_assert!(analytic < 0.0);
    }

    #[test]
    fn attribution_residual_is_small(
        notional in 1.0f64..1e9,
        r in rate(),
        z in rate(),
        tenor in 2i64..=120,
    ) {
        let trade: Trade<f64> = FixedDeposit::new(notional, r, t(0), t(tenor)).unwrap().into();
        let market = Market::single(ZeroCurve::flat(t(0), z).unwrap());
        let rows = simulate_constant(&trade, &market, t(0), t(tenor)).unwrap();
        let d02 = tenor as f64 / 360.0;
        let bound = notional * (r.abs() + z.abs()).powi(2) * d02 * 4.0 / 360.0;
        for a in attribute(&rows).unwrap() {
            prop_assert!(a.residual.abs() <= bound + 1e-9 * notional, "day {} residual {}", a.day, a.residual);
        }
    }

    #[test]
    fn daily_pnl_telescopes(
        notional in 1.0f64..1e9,
        r in rate(),
        z in rate(),
        tenor in 1i64..=120,
    ) {
        let trade = FixedDeposit::new(notional, r, t(0), t(tenor)).unwrap();
        let market = Market::single(ZeroCurve::flat(t(0), z).unwrap());
        let rows = simulate_constant(&Trade::Fixed(trade), &market, t(0), t(tenor + 2)).unwrap();
        let total: f64 = rows.iter().filter_map(|r| r.daily_pnl).sum();
        let day0_mtm = rows[0].pv_dcf - notional;
        let expected = trade.coupon() - day0_mtm;
        prop_assert!((total - expected).abs() <= 1e-8 * notional);
    }

    #[test]
    fn npv_continuous_at_payment(
        notional in 1i64..1_000_000_000,
        r_bp in -500i64..2000,
        start in 0i64..100,
        tenor in 1i64..=360,
    ) {
        let trade: Trade<Rational> = FixedDeposit::new(
            Rational::from_integer(notional as i128),
            Rational::new(r_bp as i128, 10_000),
            t(start),
            t(start + tenor),
        ).unwrap().into();
        let end = t(start + tenor);
        let before = irpnl_core::pnlsim::ledger_entry_before(&trade, end).unwrap();
        prop_assert_eq!(before.npv, ledger_entry(&trade, end).unwrap().npv);
    }
}

#[test]
fn rho_envelope_breaks_for_negative_market_rates() {
    // (1 + rD) / (1 + z tau)^2 - 1 carries +3 (z tau)^2 which the first-order
    // envelope does not cover once z < 0 and r is near zero.
    let (notional, r, z, tenor) = (1e6, 0.0, -0.05, 360);
    let trade: Trade<f64> = FixedDeposit::new(notional, r, t(0), t(tenor))
        .unwrap()
        .into();
    let market = Market::single(ZeroCurve::flat(t(0), z).unwrap());
    let fd = fd_rho(&trade, &market, t(0), DEFAULT_RATE_BUMP).unwrap();
    let analytic = analytic_rho(&trade, t(0));
    let gap = (fd - analytic).abs() / notional;
    let envelope = 2.0 * 0.05 + 1e-6;
    assert!(gap > envelope);
    assert!((gap - (1.0 / 0.95f64.powi(2) - 1.0)).abs() < 1e-6);
}
