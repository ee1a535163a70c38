use std::fmt::Write;

use serde::Serialize;

/// One verified instance.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    /// The offending element when the check fails.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, witness: impl FnOnce() -> String) -> Self {
        Check { name: name.into(), pass, witness: (!pass).then(witness) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Structured,
}

/// What a subcommand prints: its configuration, free-form output lines and checks.
#[derive(Debug, Clone, Serialize, Default)]
pub struct Report {
    pub command: String,
    pub config: Vec<(String, String)>,
    pub output: Vec<String>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report { command: command.into(), ..Default::default() }
    }

    pub fn config(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.config.push((key.to_string(), value.to_string()));
        self
    }

    pub fn line(&mut self, line: impl Into<String>) {
        self.output.push(line.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Structured => {
                let value = serde_json::json!({
                    "command": self.command,
                    "config": self.config.iter().map(|(k, v)| serde_json::json!([k, v])).collect::<Vec<_>>(),
                    "output": self.output,
                    "checks": self.checks,
                    "passed": self.passed(),
                });
                serde_json::to_string_pretty(&value).expect("serializable") + "\n"
            }
            Format::Text => {
                let mut out = String::new();
                for (k, v) in &self.config {
                    writeln!(out, "# {k}: {v}").unwrap();
                }
                for l in &self.output {
                    writeln!(out, "{l}").unwrap();
                }
                for c in &self.checks {
                    match &c.witness {
                        None => writeln!(out, "{} {}", if c.pass { "PASS" } else { "FAIL" }, c.name).unwrap(),
                        Some(w) => writeln!(out, "FAIL {}: {w}", c.name).unwrap(),
                    }
                }
                if !self.checks.is_empty() {
                    let ok = self.checks.iter().filter(|c| c.pass).count();
                    writeln!(out, "{ok}/{} passed", self.checks.len()).unwrap();
                }
                out
            }
        }
    }
}
