//! `price`, `simulate` and `greeks`.

use irpnl_core::pnlsim::simulate_constant;
use irpnl_core::risk::{fd_rho, fd_theta, risk_report, DEFAULT_RATE_BUMP};
use irpnl_core::valuation::{pv_breakdown, spread_pv_at};
use irpnl_core::{Error, Phase, TimePoint, Trade};
use thiserror::Error;

use crate::config::{ConfigError, OutputFormat, RunConfig};
use crate::format::{NumberFormat, Table};

/// Header of the simulation CSV.
pub const SIMULATION_COLUMNS: [&str; 6] = [
    "days",
    "PV",
    "accrued",
    "mtmAdj",
    "PV_Taylor",
    "unexplained",
];

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("{0}")]
    Domain(#[from] Error),
}

impl CliError {
    /// 1 for configuration problems, 2 for violated pricing preconditions.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 1,
            CliError::Domain(_) => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderOptions {
    pub format: OutputFormat,
    pub number: NumberFormat,
}

impl RenderOptions {
    pub fn from_config(
        config: &RunConfig,
        format: Option<OutputFormat>,
        full_precision: bool,
    ) -> Self {
        RenderOptions {
            format: format.unwrap_or(config.output.format),
            number: NumberFormat {
                precision: config.output.precision,
                full_precision,
            },
        }
    }
}

fn field_table(rows: Vec<(&str, String)>) -> Table {
    let mut table = Table::new(["field", "value"]);
    for (name, value) in rows {
        table.push(vec![name.to_string(), value]);
    }
    table
}

pub fn price(config: &RunConfig, opts: RenderOptions) -> Result<String, CliError> {
    let trade = config.build_trade()?;
    let day = config.valuation_day();
    let market = config.build_market()?.rolled_to(day);
    let b = pv_breakdown(&trade, &market, day)?;
    let phase = irpnl_core::trade_phase(&trade, day);
    let num = |v: f64| opts.number.format(v);
    let mut rows = vec![
        ("trade", trade.kind().to_string()),
        ("valuation_day", day.to_string()),
        ("phase", phase.to_string()),
        ("notional_leg", num(b.notional_leg)),
        ("accrued", num(b.accrued)),
        ("mtm_adjustment", num(b.mtm_adjustment)),
        ("pv_taylor", num(b.pv_taylor)),
        ("pv_dcf", num(b.pv_dcf)),
        ("unexplained", num(b.unexplained)),
    ];
    if let (Trade::Fixed(d), Phase::Forward) = (&trade, phase) {
        rows.push(("spread_pv", num(spread_pv_at(d, &market.discount, day)?)));
    }
    Ok(field_table(rows).render(opts.format))
}

pub fn simulate(config: &RunConfig, opts: RenderOptions) -> Result<String, CliError> {
    let sim = config.simulation.ok_or(ConfigError::NoSimulation)?;
    let trade = config.build_trade()?;
    let market = config.build_market()?;
    let rows = simulate_constant(
        &trade,
        &market,
        TimePoint(sim.from_day),
        TimePoint(sim.to_day),
    )?;
    let with_deferral = matches!(trade, Trade::Fra(_));
    let mut header: Vec<&str> = SIMULATION_COLUMNS.to_vec();
    if with_deferral {
        header.push("deferral");
    }
    let mut table = Table::new(header);
    let num = |v: f64| opts.number.format(v);
    for r in &rows {
        let mut cells = vec![
            r.day.to_string(),
            num(r.pv_dcf),
            num(r.accrued),
            num(r.mtm_adj),
            num(r.pv_taylor),
            num(r.unexplained),
        ];
        if with_deferral {
            cells.push(num(r.deferral));
        }
        table.push(cells);
    }
    Ok(table.render(opts.format))
}

pub fn greeks(config: &RunConfig, opts: RenderOptions) -> Result<String, CliError> {
    let trade = config.build_trade()?;
    let day = config.valuation_day();
    let market = config.build_market()?.rolled_to(day);
    let report = risk_report(&trade, &market, day)?;
    let fd_t = match fd_theta(&trade, &market, day) {
        Ok(v) => Some(v),
        Err(Error::PhaseChange { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let fd_r = fd_rho(&trade, &market, day, DEFAULT_RATE_BUMP)?;
    let num = |v: f64| opts.number.format(v);
    let opt = |v: Option<f64>| v.map_or_else(|| "n/a".to_string(), num);
    let rows = vec![
        ("theta", num(report.theta)),
        ("theta_accrual", num(report.theta_accrual)),
        ("theta_mtm", num(report.theta_mtm)),
        ("rho", num(report.rho)),
        ("rho_per_bp", num(report.rho_per_bp())),
        ("duration_days", report.duration_days.to_string()),
        ("fd_theta", opt(fd_t)),
        ("theta_gap", opt(fd_t.map(|v| v - report.theta))),
        ("fd_rho", num(fd_r)),
        ("rho_gap", num(fd_r - report.rho)),
    ];
    Ok(field_table(rows).render(opts.format))
}
