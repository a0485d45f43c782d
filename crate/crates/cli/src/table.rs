//! Ordered tabular output with reproducible CSV formatting: header row
//! mandatory, '.' decimal separator, 17 significant digits for floats.

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Int(i64),
    Float(f64),
    Str(String),
}

impl Value {
    fn render(&self) -> String {
        match self {
            Value::Int(v) => v.to_string(),
            Value::Float(v) => format_float(*v),
            Value::Str(s) => s.clone(),
        }
    }
}

/// 17 significant digits; enough to round-trip any f64 bit pattern.
pub fn format_float(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Self {
        Table {
            headers: headers.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        assert_eq!(row.len(), self.headers.len(), "row width mismatch");
        self.rows.push(row);
    }

    /// Prefix every row with fixed (name, value) columns, e.g. sweep
    /// coordinates. Columns the table already carries are not duplicated.
    pub fn with_prefix(mut self, prefix: &[(String, Value)]) -> Self {
        let prefix: Vec<(String, Value)> = prefix
            .iter()
            .filter(|(n, _)| !self.headers.contains(n))
            .cloned()
            .collect();
        let mut headers: Vec<String> = prefix.iter().map(|(n, _)| n.clone()).collect();
        headers.append(&mut self.headers);
        self.headers = headers;
        for row in &mut self.rows {
            let mut full: Vec<Value> = prefix.iter().map(|(_, v)| v.clone()).collect();
            full.append(row);
            *row = full;
        }
        self
    }

    pub fn concat(tables: Vec<Table>) -> Table {
        let mut out = Table::default();
        for t in tables {
            if out.headers.is_empty() {
                out.headers = t.headers;
            } else {
                assert_eq!(out.headers, t.headers, "sweep table header mismatch");
            }
            out.rows.extend(t.rows);
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut s = self.headers.join(",");
        s.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(Value::render).collect();
            s.push_str(&line.join(","));
            s.push('\n');
        }
        s
    }
}
