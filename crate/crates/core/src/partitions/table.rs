use std::io::Write;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::qseries::TruncatedSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    GeneratingFunction,
    Recurrence,
    Enumeration,
}

impl Source {
    pub fn as_str(self) -> &'static str {
        match self {
            Source::GeneratingFunction => "generating-function",
            Source::Recurrence => "recurrence",
            Source::Enumeration => "enumeration",
        }
    }
}

/// Values of one sequence at `0..=n_max`, tagged with how they were obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceTable<T> {
    pub name: String,
    pub source: Source,
    /// Which formula or algorithm produced the values, e.g. `"theta-sum"`.
    pub method: &'static str,
    pub values: Vec<T>,
}

impl<T: Coeff> SequenceTable<T> {
    pub fn new(name: &str, source: Source, method: &'static str, values: Vec<T>) -> Self {
        Self {
            name: name.to_owned(),
            source,
            method,
            values,
        }
    }

    pub fn from_series(name: &str, method: &'static str, s: &TruncatedSeries<T>) -> Self {
        Self::new(
            name,
            Source::GeneratingFunction,
            method,
            s.coeffs().to_vec(),
        )
    }

    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> &T {
        &self.values[n]
    }

    /// Value at a possibly negative argument; zero for `n < 0`.
    ///
    /// Panics above `n_max`.
    pub fn at(&self, n: i64) -> T {
        if n < 0 {
            T::zero()
        } else {
            self.values[n as usize].clone()
        }
    }

    /// The values as a series truncated at `order`; the table must reach that far.
    pub fn to_series(&self, order: usize) -> Result<TruncatedSeries<T>> {
        if self.n_max() < order {
            return Err(Error::OrderMismatch {
                left: self.n_max(),
                right: order,
            });
        }
        TruncatedSeries::from_coeffs(self.values[..=order].to_vec())
    }

    /// Writes `n,value,source` rows with a header.
    pub fn write_csv<W: Write>(&self, out: W) -> std::io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["n", "value", "source"])?;
        for (n, v) in self.values.iter().enumerate() {
            w.write_record([
                n.to_string(),
                v.to_string(),
                self.source.as_str().to_owned(),
            ])?;
        }
        w.flush()
    }
}

impl<T: Coeff> Serialize for SequenceTable<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("SequenceTable", 4)?;
        st.serialize_field("name", &self.name)?;
        st.serialize_field("source", &self.source)?;
        st.serialize_field("method", self.method)?;
        let values: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        st.serialize_field("values", &values)?;
        st.end()
    }
}

/// First disagreement between two tables of a [`TableSet`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disagreement<T> {
    pub n: usize,
    pub left: (&'static str, T),
    pub right: (&'static str, T),
}

/// Several computations of the same sequence. `tables[0]` is canonical.
#[derive(Debug, Clone)]
pub struct TableSet<T> {
    pub name: String,
    pub tables: Vec<SequenceTable<T>>,
}

impl<T: Coeff> TableSet<T> {
    pub fn canonical(&self) -> &SequenceTable<T> {
        &self.tables[0]
    }

    pub fn by_method(&self, method: &str) -> Option<&SequenceTable<T>> {
        self.tables.iter().find(|t| t.method == method)
    }

    /// Compares every table against the canonical one on their common range,
    /// skipping the arguments in `excluded`.
    pub fn agreement(&self, excluded: &[usize]) -> std::result::Result<(), Disagreement<T>> {
        let base = self.canonical();
        for other in &self.tables[1..] {
            let upto = base.n_max().min(other.n_max());
            for n in (0..=upto).filter(|n| !excluded.contains(n)) {
                if base.values[n] != other.values[n] {
                    return Err(Disagreement {
                        n,
                        left: (base.method, base.values[n].clone()),
                        right: (other.method, other.values[n].clone()),
                    });
                }
            }
        }
        Ok(())
    }
}
