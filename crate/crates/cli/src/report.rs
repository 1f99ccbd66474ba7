use std::fmt::Write;
use std::time::Instant;

use serde::Serialize;
use serde_json::{Map, Value as Json};

/// One asserted check inside a run.
#[derive(Debug, Clone, Serialize)]
pub struct Assertion {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// `pass` is true iff every assertion passed.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Json,
    pub results: Map<String, Json>,
    pub assertions: Vec<Assertion>,
    pub pass: bool,
    pub elapsed_ms: u64,
}

pub struct Outcome {
    pub report: RunReport,
    pub dot: Option<String>,
}

pub struct Builder {
    command: &'static str,
    inputs: Json,
    results: Map<String, Json>,
    assertions: Vec<Assertion>,
    start: Instant,
}

impl Builder {
    pub fn new(command: &'static str, inputs: Json) -> Self {
        Builder {
            command,
            inputs,
            results: Map::new(),
            assertions: Vec::new(),
            start: Instant::now(),
        }
    }

    pub fn result(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("result serializes");
        self.results.insert(key.to_string(), v);
    }

    pub fn assert(&mut self, name: impl Into<String>, pass: bool, witness: Option<String>) {
        self.assertions.push(Assertion {
            name: name.into(),
            pass,
            witness: if pass { None } else { witness },
        });
    }

    pub fn finish(self, dot: Option<String>) -> Outcome {
        let pass = self.assertions.iter().all(|a| a.pass);
        Outcome {
            report: RunReport {
                command: self.command.to_string(),
                inputs: self.inputs,
                results: self.results,
                assertions: self.assertions,
                pass,
                elapsed_ms: self.start.elapsed().as_millis() as u64,
            },
            dot,
        }
    }
}

impl RunReport {
    pub fn failures(&self) -> Vec<String> {
        self.assertions
            .iter()
            .filter(|a| !a.pass)
            .map(|a| match &a.witness {
                Some(w) => format!("{} (witness: {w})", a.name),
                None => a.name.clone(),
            })
            .collect()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.command, self.inputs);
        for (k, v) in &self.results {
            writeln!(out, "  {k}: {v}").unwrap();
        }
        for a in &self.assertions {
            let mark = if a.pass { "ok  " } else { "FAIL" };
            write!(out, "  [{mark}] {}", a.name).unwrap();
            match &a.witness {
                Some(w) => writeln!(out, "  witness: {w}").unwrap(),
                None => out.push('\n'),
            }
        }
        writeln!(out, "  pass: {}  ({} ms)", self.pass, self.elapsed_ms).unwrap();
        out
    }
}
