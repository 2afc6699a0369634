use serde::Serialize;
use serde_json::{Map, Value};
use taut_core::rational::to_num_den;
use taut_core::Rational;

/// Output of one command before it is rendered in the requested format.
pub struct Report {
    pub params: Map<String, Value>,
    pub result: Value,
    pub methods: Vec<String>,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    /// Set when an internal self-check disagreed; the report is still
    /// printed but the process exits 1.
    pub inconsistent: bool,
}

impl Report {
    pub fn new(header: Vec<&'static str>) -> Self {
        Report {
            params: Map::new(),
            result: Value::Null,
            methods: Vec::new(),
            header,
            rows: Vec::new(),
            inconsistent: false,
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) {
        self.params.insert(key.to_string(), value.into());
    }
}

// Field order here is the serialized order.
#[derive(Serialize)]
struct ReportEnvelope<'a> {
    command: &'a str,
    params: &'a Map<String, Value>,
    result: &'a Value,
    methods: &'a [String],
    exact: bool,
    version: &'static str,
}

pub fn rational(q: &Rational) -> Value {
    Value::String(to_num_den(q))
}

pub fn partition(parts: &[u32]) -> Value {
    Value::Array(parts.iter().map(|&p| Value::from(p)).collect())
}

pub fn join_parts(parts: &[u32]) -> String {
    parts
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn render_json(command: &str, report: &Report) -> String {
    let envelope = ReportEnvelope {
        command,
        params: &report.params,
        result: &report.result,
        methods: &report.methods,
        exact: true,
        version: env!("CARGO_PKG_VERSION"),
    };
    let mut out = serde_json::to_string_pretty(&envelope).expect("report serializes");
    out.push('\n');
    out
}

pub fn render_csv(report: &Report) -> Result<String, String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&report.header).map_err(|e| e.to_string())?;
    for row in &report.rows {
        w.write_record(row).map_err(|e| e.to_string())?;
    }
    let bytes = w.into_inner().map_err(|e| e.to_string())?;
    String::from_utf8(bytes).map_err(|e| e.to_string())
}

pub fn render_text(command: &str, report: &Report) -> String {
    let mut out = command.to_string();
    for (k, v) in &report.params {
        out.push_str(&format!(" {k}={}", plain(v)));
    }
    out.push('\n');
    let width = report
        .header
        .iter()
        .map(|h| h.chars().count())
        .max()
        .unwrap_or(0);
    for (i, row) in report.rows.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        for (h, cell) in report.header.iter().zip(row) {
            out.push_str(&format!("  {h:<width$}  {cell}\n"));
        }
    }
    out
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(plain).collect::<Vec<_>>().join(","),
        other => other.to_string(),
    }
}
