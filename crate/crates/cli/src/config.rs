//! Line-oriented run configuration: `[section]` headers and `key = value`
//! lines, `#` starts a comment.
//!
//! ```text
//! [trade]
//! kind = fixed          # fixed | floating | fra | call
//! notional = 1000000
//! rate = 0.05           # spread = ... for floating, plus optional fixing
//! start_day = 1
//! end_day = 2           # omitted for call accounts
//!
//! [curve]
//! anchor_day = 0
//! pillar = 1, 0.02      # zero rate to day 1
//! forward = 2, 0.03     # forward rate from the previous pillar to day 2
//!
//! [forecast_curve]      # optional, floating deposits only
//! [valuation]           # optional: day = <valuation day>, default anchor_day
//! [simulation]          # from_day = ..., to_day = ...
//! [output]              # format = table | csv, precision = 2
//! ```

use std::path::Path;
use std::str::FromStr;

use irpnl_core::{
    CallAccount, FixedDeposit, FloatingDeposit, ForwardRateAgreement, Market, TimePoint, Trade,
    ZeroCurve,
};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing [{0}] section")]
    MissingSection(&'static str),
    #[error("[{section}] is missing required key `{key}`")]
    MissingKey {
        section: &'static str,
        key: &'static str,
    },
    #[error("invalid {what}: {source}")]
    Invalid {
        what: &'static str,
        source: irpnl_core::Error,
    },
    #[error("simulation range requires from_day <= to_day (got {from} > {to})")]
    ReversedSimulation { from: i64, to: i64 },
    #[error("config has no [simulation] section")]
    NoSimulation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TradeKind {
    Fixed,
    Floating,
    Fra,
    Call,
}

impl FromStr for TradeKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "fixed" => Ok(TradeKind::Fixed),
            "floating" => Ok(TradeKind::Floating),
            "fra" => Ok(TradeKind::Fra),
            "call" => Ok(TradeKind::Call),
            other => Err(format!(
                "unknown trade kind `{other}` (expected fixed, floating, fra or call)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Table,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "table" => Ok(OutputFormat::Table),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(format!(
                "unknown output format `{other}` (expected table or csv)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TradeSpec {
    pub kind: TradeKind,
    pub notional: f64,
    pub rate: Option<f64>,
    pub spread: Option<f64>,
    pub fixing: Option<f64>,
    pub start_day: i64,
    pub end_day: Option<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CurvePoint {
    Pillar { day: i64, rate: f64 },
    Forward { day: i64, rate: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct CurveSpec {
    pub anchor_day: i64,
    pub points: Vec<CurvePoint>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimulationSpec {
    pub from_day: i64,
    pub to_day: i64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OutputSpec {
    pub format: OutputFormat,
    pub precision: usize,
}

impl Default for OutputSpec {
    fn default() -> Self {
        OutputSpec {
            format: OutputFormat::Table,
            precision: 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub trade: TradeSpec,
    pub curve: CurveSpec,
    pub forecast_curve: Option<CurveSpec>,
    pub valuation_day: Option<i64>,
    pub simulation: Option<SimulationSpec>,
    pub output: OutputSpec,
}

#[derive(Debug, Default)]
struct Section {
    name: String,
    entries: Vec<(usize, String, String)>,
}

impl Section {
    fn get(&self, key: &str) -> Result<Option<(usize, &str)>, ConfigError> {
        let mut found = None;
        for (line, k, v) in &self.entries {
            if k == key {
                if found.is_some() {
                    return Err(ConfigError::Syntax {
                        line: *line,
                        message: format!("duplicate key `{key}` in [{}]", self.name),
                    });
                }
                found = Some((*line, v.as_str()));
            }
        }
        Ok(found)
    }

    fn parse<T: FromStr>(&self, key: &str) -> Result<Option<T>, ConfigError>
    where
        T::Err: std::fmt::Display,
    {
        match self.get(key)? {
            None => Ok(None),
            Some((line, raw)) => raw.parse::<T>().map(Some).map_err(|e| ConfigError::Syntax {
                line,
                message: format!("invalid value `{raw}` for `{key}`: {e}"),
            }),
        }
    }

    fn require<T: FromStr>(
        &self,
        section: &'static str,
        key: &'static str,
    ) -> Result<T, ConfigError>
    where
        T::Err: std::fmt::Display,
    {
        self.parse(key)?
            .ok_or(ConfigError::MissingKey { section, key })
    }

    fn check_keys(&self, allowed: &[&str]) -> Result<(), ConfigError> {
        for (line, k, _) in &self.entries {
            if !allowed.contains(&k.as_str()) {
                return Err(ConfigError::Syntax {
                    line: *line,
                    message: format!("unknown key `{k}` in [{}]", self.name),
                });
            }
        }
        Ok(())
    }
}

fn parse_number(raw: &str, line: usize, what: &str) -> Result<f64, ConfigError> {
    raw.trim()
        .parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| ConfigError::Syntax {
            line,
            message: format!("invalid {what} `{}`", raw.trim()),
        })
}

fn parse_curve(section: &Section, name: &'static str) -> Result<CurveSpec, ConfigError> {
    section.check_keys(&["anchor_day", "pillar", "forward"])?;
    let anchor_day = section.require(name, "anchor_day")?;
    let mut points = Vec::new();
    for (line, key, value) in &section.entries {
        if key != "pillar" && key != "forward" {
            continue;
        }
        let (day, rate) = value.split_once(',').ok_or_else(|| ConfigError::Syntax {
            line: *line,
            message: format!("`{key}` expects `day, rate`"),
        })?;
        let day = day.trim().parse::<i64>().map_err(|_| ConfigError::Syntax {
            line: *line,
            message: format!("invalid day `{}`", day.trim()),
        })?;
        let rate = parse_number(rate, *line, "rate")?;
        points.push(if key == "pillar" {
            CurvePoint::Pillar { day, rate }
        } else {
            CurvePoint::Forward { day, rate }
        });
    }
    Ok(CurveSpec { anchor_day, points })
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut sections: Vec<Section> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            if let Some(name) = content.strip_prefix('[') {
                let name = name.strip_suffix(']').ok_or_else(|| ConfigError::Syntax {
                    line,
                    message: "unterminated section header".into(),
                })?;
                let name = name.trim().to_string();
                if !matches!(
                    name.as_str(),
                    "trade" | "curve" | "forecast_curve" | "valuation" | "simulation" | "output"
                ) {
                    return Err(ConfigError::Syntax {
                        line,
                        message: format!("unknown section [{name}]"),
                    });
                }
                if sections.iter().any(|s| s.name == name) {
                    return Err(ConfigError::Syntax {
                        line,
                        message: format!("section [{name}] appears twice"),
                    });
                }
                sections.push(Section {
                    name,
                    entries: Vec::new(),
                });
                continue;
            }
            let (key, value) = content.split_once('=').ok_or_else(|| ConfigError::Syntax {
                line,
                message: format!("expected `key = value`, got `{content}`"),
            })?;
            let section = sections.last_mut().ok_or_else(|| ConfigError::Syntax {
                line,
                message: "key outside of any section".into(),
            })?;
            section
                .entries
                .push((line, key.trim().to_string(), value.trim().to_string()));
        }
        let find = |name: &str| sections.iter().find(|s| s.name == name);

        let trade = find("trade").ok_or(ConfigError::MissingSection("trade"))?;
        trade.check_keys(&[
            "kind",
            "notional",
            "rate",
            "spread",
            "fixing",
            "start_day",
            "end_day",
        ])?;
        let trade = TradeSpec {
            kind: trade.require("trade", "kind")?,
            notional: trade.require("trade", "notional")?,
            rate: trade.parse("rate")?,
            spread: trade.parse("spread")?,
            fixing: trade.parse("fixing")?,
            start_day: trade.require("trade", "start_day")?,
            end_day: trade.parse("end_day")?,
        };

        let curve = parse_curve(
            find("curve").ok_or(ConfigError::MissingSection("curve"))?,
            "curve",
        )?;
        let forecast_curve = find("forecast_curve")
            .map(|s| parse_curve(s, "forecast_curve"))
            .transpose()?;

        let valuation_day = match find("valuation") {
            Some(s) => {
                s.check_keys(&["day"])?;
                s.parse("day")?
            }
            None => None,
        };

        let simulation = match find("simulation") {
            Some(s) => {
                s.check_keys(&["from_day", "to_day"])?;
                let from_day = s.require("simulation", "from_day")?;
                let to_day = s.require("simulation", "to_day")?;
                if from_day > to_day {
                    return Err(ConfigError::ReversedSimulation {
                        from: from_day,
                        to: to_day,
                    });
                }
                Some(SimulationSpec { from_day, to_day })
            }
            None => None,
        };

        let output = match find("output") {
            Some(s) => {
                s.check_keys(&["format", "precision"])?;
                OutputSpec {
                    format: s.parse("format")?.unwrap_or_default(),
                    precision: s.parse("precision")?.unwrap_or(2),
                }
            }
            None => OutputSpec::default(),
        };

        let config = RunConfig {
            trade,
            curve,
            forecast_curve,
            valuation_day,
            simulation,
            output,
        };
        // Surface trade and curve invariant violations as config errors.
        config.build_trade()?;
        config.build_market()?;
        Ok(config)
    }

    pub fn build_trade(&self) -> Result<Trade<f64>, ConfigError> {
        let spec = &self.trade;
        let invalid = |source| ConfigError::Invalid {
            what: "trade",
            source,
        };
        let start = TimePoint(spec.start_day);
        let need_end = || {
            spec.end_day.map(TimePoint).ok_or(ConfigError::MissingKey {
                section: "trade",
                key: "end_day",
            })
        };
        let need_rate = || {
            spec.rate.ok_or(ConfigError::MissingKey {
                section: "trade",
                key: "rate",
            })
        };
        Ok(match spec.kind {
            TradeKind::Fixed => FixedDeposit::new(spec.notional, need_rate()?, start, need_end()?)
                .map_err(invalid)?
                .into(),
            TradeKind::Fra => {
                ForwardRateAgreement::new(spec.notional, need_rate()?, start, need_end()?)
                    .map_err(invalid)?
                    .into()
            }
            TradeKind::Call => CallAccount::new(spec.notional, need_rate()?, start)
                .map_err(invalid)?
                .into(),
            TradeKind::Floating => {
                let spread = spec.spread.ok_or(ConfigError::MissingKey {
                    section: "trade",
                    key: "spread",
                })?;
                let mut d = FloatingDeposit::new(spec.notional, spread, start, need_end()?)
                    .map_err(invalid)?;
                if let Some(f) = spec.fixing {
                    d.fix(f).map_err(invalid)?;
                }
                d.into()
            }
        })
    }

    pub fn build_market(&self) -> Result<Market<f64>, ConfigError> {
        let discount = build_curve(&self.curve)?;
        Ok(match &self.forecast_curve {
            Some(spec) => Market::with_forecast(discount, build_curve(spec)?),
            None => Market::single(discount),
        })
    }

    pub fn valuation_day(&self) -> TimePoint {
        TimePoint(self.valuation_day.unwrap_or(self.curve.anchor_day))
    }
}

fn build_curve(spec: &CurveSpec) -> Result<ZeroCurve<f64>, ConfigError> {
    let mut builder = ZeroCurve::builder(TimePoint(spec.anchor_day));
    for point in &spec.points {
        builder = match *point {
            CurvePoint::Pillar { day, rate } => builder.pillar(TimePoint(day), rate),
            CurvePoint::Forward { day, rate } => builder.forward(TimePoint(day), rate),
        };
    }
    builder.build().map_err(|source| ConfigError::Invalid {
        what: "curve",
        source,
    })
}
