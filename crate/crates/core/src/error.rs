use thiserror::Error;

use crate::instrument::Phase;
use crate::timecore::TimePoint;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("zero curve has no pillars")]
    EmptyCurve,
    #[error(
        "curve pillar days must be strictly increasing (day {previous} followed by day {next})"
    )]
    NonIncreasingPillars {
        previous: TimePoint,
        next: TimePoint,
    },
    #[error("curve rate at day {day} is not finite")]
    NonFiniteRate { day: TimePoint },
    #[error("interval is reversed: from day {from} is after to day {to}")]
    ReversedInterval { from: TimePoint, to: TimePoint },
    #[error("day {day} is before the curve anchor day {anchor}")]
    BeforeAnchor { day: TimePoint, anchor: TimePoint },
    #[error("discount factor is not positive: 1 + z*dt <= 0 between day {from} and day {to}")]
    NonPositiveDiscount { from: TimePoint, to: TimePoint },
    #[error("forward period must have start < end (got {start} and {end})")]
    EmptyPeriod { start: TimePoint, end: TimePoint },
    #[error("schedule requires start < end (got start {start}, end {end})")]
    InvalidSchedule { start: TimePoint, end: TimePoint },
    #[error("notional must be non-zero")]
    ZeroNotional,
    #[error("{what} must be finite")]
    NonFinite { what: &'static str },
    #[error("{operation} requires the {expected} phase but the trade is {actual} on day {day}")]
    WrongPhase {
        operation: &'static str,
        expected: &'static str,
        actual: Phase,
        day: TimePoint,
    },
    #[error("floating deposit has already been fixed")]
    AlreadyFixed,
    #[error("floating deposit has no fixing on day {day} although its accrual period has started")]
    MissingFixing { day: TimePoint },
    #[error("floating deposit carries a fixing on day {day}, before its accrual period starts")]
    PrematureFixing { day: TimePoint },
    #[error("{operation} is not defined for a {kind}")]
    Unsupported {
        operation: &'static str,
        kind: &'static str,
    },
    #[error("finite-difference bump must be positive")]
    InvalidBump,
    #[error(
        "trade changes phase from {before} to {after} inside the one-day bump starting day {day}"
    )]
    PhaseChange {
        day: TimePoint,
        before: Phase,
        after: Phase,
    },
    #[error("simulation horizon is empty")]
    EmptyHorizon,
    #[error("expected {expected} market states for the horizon, got {actual}")]
    MarketLengthMismatch { expected: usize, actual: usize },
    #[error("attribution needs at least two rows")]
    TooFewRows,
}
