//! Deterministic machine-readable reports.
//!
//! A report is rendered as a fixed-order key/value document. Real numbers are
//! printed with 12 significant digits, lists keep construction order, and the
//! same (command, seed, version) always renders to identical bytes.

/// Renders a real number with 12 significant digits.
pub fn fmt_real(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x }; // collapse -0.0
    format!("{x:.11e}")
}

/// How a check's pass verdict is computed from (lhs, rhs, tolerance).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    /// |lhs − rhs| ≤ tolerance.
    Eq,
    /// lhs ≤ rhs + tolerance.
    Le,
    /// lhs > rhs + tolerance (used for expected violations).
    Gt,
}

impl std::fmt::Display for CheckKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CheckKind::Eq => write!(f, "eq"),
            CheckKind::Le => write!(f, "le"),
            CheckKind::Gt => write!(f, "gt"),
        }
    }
}

/// A single named numeric check; every check carries its own tolerance.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub kind: CheckKind,
    pub lhs: f64,
    pub rhs: f64,
    pub tolerance: f64,
}

impl Check {
    pub fn eq(name: impl Into<String>, lhs: f64, rhs: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            kind: CheckKind::Eq,
            lhs,
            rhs,
            tolerance,
        }
    }

    pub fn le(name: impl Into<String>, lhs: f64, rhs: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            kind: CheckKind::Le,
            lhs,
            rhs,
            tolerance,
        }
    }

    pub fn gt(name: impl Into<String>, lhs: f64, rhs: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            kind: CheckKind::Gt,
            lhs,
            rhs,
            tolerance,
        }
    }

    pub fn pass(&self) -> bool {
        match self.kind {
            CheckKind::Eq => (self.lhs - self.rhs).abs() <= self.tolerance,
            CheckKind::Le => self.lhs <= self.rhs + self.tolerance,
            CheckKind::Gt => self.lhs > self.rhs + self.tolerance,
        }
    }
}

/// A rectangular table of pre-formatted cells.
#[derive(Debug, Clone)]
pub struct ReportTable {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl ReportTable {
    pub fn new(name: impl Into<String>, columns: &[&str]) -> Self {
        Self {
            name: name.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push_row(&mut self, cells: Vec<String>) {
        assert_eq!(
            cells.len(),
            self.columns.len(),
            "row width must match columns"
        );
        self.rows.push(cells);
    }
}

/// A complete command report.
#[derive(Debug, Clone)]
pub struct Report {
    /// Canonical echo of the command with resolved defaults.
    pub command: String,
    pub seed: u64,
    /// Generator and stream-splitting scheme used for any sampling.
    pub rng: String,
    pub version: String,
    pub checks: Vec<Check>,
    pub tables: Vec<ReportTable>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(command: impl Into<String>, seed: u64, rng: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            seed,
            rng: rng.into(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            checks: Vec::new(),
            tables: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::pass)
    }

    /// Renders the fixed-order textual form.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        out.push_str(&format!("seed: {}\n", self.seed));
        out.push_str(&format!("rng: {}\n", self.rng));
        out.push_str(&format!("version: {}\n", self.version));
        if !self.checks.is_empty() {
            out.push_str("checks:\n");
            for check in &self.checks {
                out.push_str(&format!("  - name: {}\n", check.name));
                out.push_str(&format!("    kind: {}\n", check.kind));
                out.push_str(&format!("    lhs: {}\n", fmt_real(check.lhs)));
                out.push_str(&format!("    rhs: {}\n", fmt_real(check.rhs)));
                out.push_str(&format!("    tolerance: {}\n", fmt_real(check.tolerance)));
                out.push_str(&format!("    pass: {}\n", check.pass()));
            }
        }
        if !self.tables.is_empty() {
            out.push_str("tables:\n");
            for table in &self.tables {
                out.push_str(&format!("  - name: {}\n", table.name));
                out.push_str(&format!("    columns: {}\n", table.columns.join(" | ")));
                out.push_str("    rows:\n");
                for row in &table.rows {
                    out.push_str(&format!("      {}\n", row.join(" | ")));
                }
            }
        }
        if !self.notes.is_empty() {
            out.push_str("notes:\n");
            for note in &self.notes {
                out.push_str(&format!("  - {note}\n"));
            }
        }
        out.push_str(&format!(
            "result: {}\n",
            if self.passed() { "pass" } else { "fail" }
        ));
        out
    }
}
