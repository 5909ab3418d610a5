//! Data model: ordered (x, y) samples, CSV ingestion/serialization, and the
//! two bundled example datasets.

use crate::error::{Error, Result};

/// Whether the dependent variable is a real value or a 0/1 label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Continuous,
    Binary,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Continuous => "continuous",
            Kind::Binary => "binary",
        }
    }
}

/// An ordered, immutable set of (x, y) samples.
///
/// Order is meaningful: sequential training cycles through points in exactly
/// this order, so two datasets with the same points in different orders are
/// not interchangeable.
#[derive(Debug, Clone, PartialEq)]
pub struct DataSet {
    points: Vec<(f64, f64)>,
    kind: Kind,
}

impl DataSet {
    /// Builds a dataset from raw points, rejecting empty input and
    /// non-finite values. The kind is inferred: Binary iff every y is
    /// exactly 0 or 1.
    pub fn new(points: Vec<(f64, f64)>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyDataset);
        }
        for (i, &(x, y)) in points.iter().enumerate() {
            if !x.is_finite() {
                return Err(Error::NonFiniteValue { index: i + 1, value: x });
            }
            if !y.is_finite() {
                return Err(Error::NonFiniteValue { index: i + 1, value: y });
            }
        }
        let binary = points.iter().all(|&(_, y)| y == 0.0 || y == 1.0);
        Ok(DataSet {
            points,
            kind: if binary { Kind::Binary } else { Kind::Continuous },
        })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty point lists
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    pub fn xs(&self) -> impl Iterator<Item = f64> + '_ {
        self.points.iter().map(|&(x, _)| x)
    }

    pub fn ys(&self) -> impl Iterator<Item = f64> + '_ {
        self.points.iter().map(|&(_, y)| y)
    }

    /// Largest explanatory value in the dataset.
    pub fn x_max(&self) -> f64 {
        self.xs().fold(f64::NEG_INFINITY, f64::max)
    }

    /// Parses CSV text: one `x,y` pair per line, `.` decimal point, optional
    /// single `x,y` header, no quoting. Errors carry 1-based physical line
    /// numbers.
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut points = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if idx == 0 && line == "x,y" {
                continue;
            }
            let mut fields = line.split(',');
            let (Some(xs), Some(ys), None) = (fields.next(), fields.next(), fields.next())
            else {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("expected two comma-separated values, got `{line}`"),
                });
            };
            let parse = |tok: &str, what: &str| -> Result<f64> {
                let v: f64 = tok.trim().parse().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("{what} `{}` is not a number", tok.trim()),
                })?;
                if !v.is_finite() {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("{what} `{}` is not finite", tok.trim()),
                    });
                }
                Ok(v)
            };
            points.push((parse(xs, "x value")?, parse(ys, "y value")?));
        }
        DataSet::new(points)
    }

    /// Serializes to the same CSV dialect `from_csv` reads. Values use the
    /// shortest representation that round-trips exactly, so
    /// `from_csv(to_csv(ds)) == ds`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,y\n");
        for &(x, y) in &self.points {
            out.push_str(&format!("{x},{y}\n"));
        }
        out
    }

    /// Looks up a compiled-in example dataset by name.
    pub fn builtin(name: &str) -> Result<Self> {
        match name {
            "grades" => DataSet::new(GRADES.to_vec()),
            "passfail" => DataSet::new(PASSFAIL.to_vec()),
            _ => Err(Error::UnknownBuiltin {
                name: name.to_string(),
                valid: "grades, passfail",
            }),
        }
    }

    /// Names accepted by [`DataSet::builtin`].
    pub fn builtin_names() -> &'static [&'static str] {
        &["grades", "passfail"]
    }
}

/// 9-point continuous sample: study effort vs. attained grade.
const GRADES: [(f64, f64); 9] = [
    (1.0, 1.2),
    (1.7, 2.8),
    (2.5, 1.2),
    (3.4, 3.6),
    (3.8, 5.3),
    (4.1, 3.5),
    (5.0, 3.2),
    (5.5, 4.7),
    (6.2, 6.5),
];

/// 19-point binary sample: study effort vs. pass (1) / fail (0).
const PASSFAIL: [(f64, f64); 19] = [
    (0.5, 0.0),
    (0.7, 0.0),
    (1.0, 0.0),
    (1.25, 0.0),
    (1.5, 0.0),
    (1.75, 0.0),
    (2.0, 0.0),
    (2.25, 1.0),
    (2.5, 0.0),
    (2.75, 1.0),
    (3.0, 0.0),
    (3.25, 1.0),
    (4.0, 0.0),
    (4.25, 1.0),
    (4.5, 1.0),
    (4.75, 1.0),
    (5.0, 1.0),
    (5.5, 1.0),
    (5.75, 1.0),
];
