//! Presentation: number formatting, aligned tables and CSV.

use crate::config::OutputFormat;

/// Number formatting shared by every report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NumberFormat {
    pub precision: usize,
    /// Shortest representation that parses back to the same `f64`.
    pub full_precision: bool,
}

impl NumberFormat {
    /// Rounds half to even on the exact binary value, never prints `-0`.
    pub fn format(&self, value: f64) -> String {
        let text = if self.full_precision {
            format!("{value}")
        } else {
            format!("{value:.*}", self.precision)
        };
        match text.strip_prefix('-') {
            Some(rest) if rest.chars().all(|c| c == '0' || c == '.') => rest.to_string(),
            _ => text,
        }
    }
}

/// A rectangular report: header plus rows of already formatted cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<I, S>(header: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Table {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Table => self.to_aligned(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer
            .write_record(&self.header)
            .and_then(|_| self.rows.iter().try_for_each(|r| writer.write_record(r)))
            .expect("writing CSV to memory cannot fail");
        let bytes = writer.into_inner().expect("in-memory CSV flush");
        String::from_utf8(bytes).expect("CSV output is UTF-8")
    }

    /// First column left-aligned, the rest right-aligned.
    pub fn to_aligned(&self) -> String {
        let mut widths: Vec<usize> = self.header.iter().map(String::len).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let line = |cells: &[String]| {
            cells
                .iter()
                .zip(&widths)
                .enumerate()
                .map(|(i, (c, w))| {
                    if i == 0 {
                        format!("{c:<w$}")
                    } else {
                        format!("{c:>w$}")
                    }
                })
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        };
        let mut out = line(&self.header);
        out.push('\n');
        for row in &self.rows {
            out.push_str(&line(row));
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TWO_DP: NumberFormat = NumberFormat {
        precision: 2,
        full_precision: false,
    };

    #[test]
    fn half_even_on_exact_ties() {
        assert_eq!(TWO_DP.format(0.125), "0.12");
        assert_eq!(TWO_DP.format(0.375), "0.38");
        assert_eq!(TWO_DP.format(55.5478), "55.55");
        assert_eq!(
            NumberFormat {
                precision: 0,
                full_precision: false
            }
            .format(2.5),
            "2"
        );
    }

    #[test]
    fn no_negative_zero() {
        assert_eq!(TWO_DP.format(-0.001), "0.00");
        assert_eq!(TWO_DP.format(-0.0), "0.00");
        assert_eq!(TWO_DP.format(-500.0), "-500.00");
        let full = NumberFormat {
            precision: 2,
            full_precision: true,
        };
        assert_eq!(full.format(-0.0), "0");
    }

    #[test]
    fn full_precision_round_trips() {
        let full = NumberFormat {
            precision: 2,
            full_precision: true,
        };
        let v = 999_639.519_729_362_6_f64;
        assert_eq!(full.format(v).parse::<f64>().unwrap(), v);
    }

    #[test]
    fn aligned_table() {
        let mut t = Table::new(["days", "PV"]);
        t.push(vec!["1".into(), "10.00".into()]);
        t.push(vec!["10".into(), "1000.00".into()]);
        assert_eq!(
            t.to_aligned(),
            "days       PV\n1       10.00\n10    1000.00\n"
        );
        assert_eq!(t.to_csv(), "days,PV\n1,10.00\n10,1000.00\n");
    }
}
