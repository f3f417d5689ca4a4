//! Valuation and PNL attribution for single-period interest rate trades.
//!
//! The crate prices fixed and floating deposits, FRAs and call accounts on a
//! simple-interest zero curve, splits the discounted value into an accrual
//! part and a mark-to-market adjustment, derives theta and rho from that
//! split, and replays trades day by day to attribute PNL.
//!
//! All kernels are generic over [`Scalar`], implemented for `f32`, `f64` and
//! the exact [`Rational`]. The aliases below fix the scalar for the common
//! cases.

pub mod curve;
pub mod error;
pub mod instrument;
pub mod pnlsim;
pub mod risk;
pub mod scalar;
pub mod timecore;
pub mod valuation;

pub use curve::{DiscountFactor, ZeroCurve, ZeroCurveBuilder};
pub use error::{Error, Result};
pub use instrument::{
    trade_phase, CallAccount, FixedDeposit, FloatingDeposit, ForwardRateAgreement, PaymentTiming,
    Phase, Schedule, Trade,
};
pub use pnlsim::{AttributionRow, Ledger, SimRow};
pub use risk::{RiskReport, ThetaSplit};
pub use scalar::{Rational, Scalar};
pub use timecore::{year_fraction, DayCount, TimePoint, YearFraction};
pub use valuation::{FraValuation, Market, PvBreakdown};

pub type ZeroCurveF64 = ZeroCurve<f64>;
pub type ZeroCurveF32 = ZeroCurve<f32>;
pub type ZeroCurveExact = ZeroCurve<Rational>;

pub type TradeF64 = Trade<f64>;
pub type TradeF32 = Trade<f32>;
pub type TradeExact = Trade<Rational>;

pub type MarketF64 = Market<f64>;
pub type MarketExact = Market<Rational>;

pub type PvBreakdownF64 = PvBreakdown<f64>;
pub type RiskReportF64 = RiskReport<f64>;
pub type SimRowF64 = SimRow<f64>;
pub type LedgerF64 = Ledger<f64>;
pub type LedgerExact = Ledger<Rational>;
