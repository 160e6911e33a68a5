//! Output helpers shared by the library and the command-line frontend:
//! exact/approximate value pairs, canonical JSON, and CSV assembly.

use serde::Serialize;

use crate::scalar::{rational_string, Rat, Scalar};

/// A number carried in two forms: an exact rational rendering ("n" or "n/d")
/// and an f64 approximation for quick reading.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExactValue {
    pub exact: String,
    pub approx: f64,
}

impl ExactValue {
    pub fn from_rat(x: &Rat) -> Self {
        ExactValue {
            exact: rational_string(x),
            approx: x.to_f64_approx(),
        }
    }

    pub fn new(exact: impl Into<String>, approx: f64) -> Self {
        ExactValue {
            exact: exact.into(),
            approx,
        }
    }
}

/// Serializes any value to a canonical JSON string: object keys sorted,
/// no insignificant whitespace. The same value always yields the same bytes,
/// which the deterministic-output tests rely on.
pub fn canonical_json<T: Serialize>(value: &T) -> crate::Result<String> {
    let tree = serde_json::to_value(value)
        .map_err(|e| crate::Error::InvalidConfig(format!("serialize: {e}")))?;
    serde_json::to_string(&tree).map_err(|e| crate::Error::InvalidConfig(format!("render: {e}")))
}

/// Row-oriented CSV assembly (RFC 4180 quoting, trailing newline).
pub struct CsvTable {
    writer: csv::Writer<Vec<u8>>,
}

impl CsvTable {
    pub fn new(header: &[&str]) -> Self {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record(header).expect("in-memory write");
        CsvTable { writer }
    }

    pub fn push<S: AsRef<[u8]>>(&mut self, row: impl IntoIterator<Item = S>) {
        self.writer.write_record(row).expect("in-memory write");
    }

    pub fn finish(self) -> String {
        let bytes = self.writer.into_inner().expect("in-memory flush");
        String::from_utf8(bytes).expect("csv output is utf-8")
    }
}

/// Renders an f64 with enough digits to round-trip exactly.
pub fn float_field(x: f64) -> String {
    let mut s = format!("{x}");
    if s.parse::<f64>() != Ok(x) {
        s = format!("{x:?}");
    }
    s
}
