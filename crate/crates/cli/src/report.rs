use serde::Serialize;
use serde_json::Value;

/// Outcome of a verification command. Contains no timings, so identical
/// inputs and seed give identical bytes.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub seed: u64,
    pub passed: usize,
    pub failed: usize,
    pub counterexamples: Vec<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
    /// Extra lines for the text rendering only.
    #[serde(skip)]
    pub summary: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct Counterexample {
    pub check: String,
    pub inputs: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
}

const MAX_COUNTEREXAMPLES: usize = 20;

impl RunReport {
    pub fn new(command: Vec<String>, seed: u64) -> Self {
        RunReport {
            command,
            seed,
            passed: 0,
            failed: 0,
            counterexamples: Vec::new(),
            details: None,
            summary: None,
        }
    }

    pub fn pass(&mut self) {
        self.passed += 1;
    }

    pub fn fail(&mut self, c: Counterexample) {
        self.failed += 1;
        if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
            self.counterexamples.push(c);
        }
    }

    /// Records `lhs == rhs`.
    pub fn check_eq(&mut self, check: &str, inputs: impl FnOnce() -> Vec<String>, lhs: String, rhs: String) {
        if lhs == rhs {
            self.pass();
        } else {
            self.fail(Counterexample {
                check: check.into(),
                inputs: inputs(),
                lhs: Some(lhs),
                rhs: Some(rhs),
            });
        }
    }

    /// Tallies checked by the library, with its counterexample messages.
    pub fn absorb(&mut self, check: &str, passed: usize, failed: usize, messages: &[String]) {
        self.passed += passed;
        self.failed += failed;
        for m in messages.iter().take(MAX_COUNTEREXAMPLES.saturating_sub(self.counterexamples.len())) {
            self.counterexamples.push(Counterexample {
                check: check.into(),
                inputs: vec![m.clone()],
                lhs: None,
                rhs: None,
            });
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command  {}\n", self.command.join(" ")));
        out.push_str(&format!("seed     {}\n", self.seed));
        out.push_str(&format!("passed   {}\n", self.passed));
        out.push_str(&format!("failed   {}\n", self.failed));
        if let Some(s) = &self.summary {
            out.push('\n');
            out.push_str(s);
        }
        for c in &self.counterexamples {
            out.push_str(&format!("\ncounterexample ({})\n", c.check));
            for i in &c.inputs {
                out.push_str(&format!("  input  {i}\n"));
            }
            if let (Some(l), Some(r)) = (&c.lhs, &c.rhs) {
                out.push_str(&format!("  lhs    {l}\n  rhs    {r}\n"));
            }
        }
        out
    }
}

/// Plain column-aligned table.
pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }

    pub fn render(&self) -> String {
        let mut width: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
        for r in &self.rows {
            for (i, c) in r.iter().enumerate() {
                width[i] = width[i].max(c.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let mut s = String::new();
            for (i, c) in cells.iter().enumerate() {
                if i + 1 == cells.len() {
                    s.push_str(c);
                } else {
                    s.push_str(c);
                    s.push_str(&" ".repeat(width[i] - c.chars().count() + 2));
                }
            }
            s.trim_end().to_string() + "\n"
        };
        let mut out = line(&self.header);
        for r in &self.rows {
            out.push_str(&line(r));
        }
        out
    }
}
