//! Key/value reports with stable field order. Identical inputs and flags
//! produce byte-identical output; everything numeric prints as an exact
//! rational or an integer.

use std::fmt::Write as _;

#[derive(Debug, Clone)]
enum Line {
    Kv(String, String),
    Section(String),
    Item(String, String),
    Raw(String),
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    lines: Vec<Line>,
    warnings: Vec<String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut r = Report::default();
        r.kv("command", command);
        r
    }

    pub fn kv(&mut self, key: &str, value: impl Into<String>) {
        self.lines.push(Line::Kv(key.to_string(), value.into()));
    }

    pub fn section(&mut self, name: &str) {
        self.lines.push(Line::Section(name.to_string()));
    }

    pub fn item(&mut self, key: &str, value: impl Into<String>) {
        self.lines.push(Line::Item(key.to_string(), value.into()));
    }

    pub fn raw(&mut self, text: impl Into<String>) {
        self.lines.push(Line::Raw(text.into()));
    }

    /// Multi-line block, indented as items under the current section.
    pub fn block(&mut self, text: &str) {
        for l in text.lines() {
            self.lines.push(Line::Raw(format!("  {l}")));
        }
    }

    pub fn warn(&mut self, message: impl Into<String>) {
        self.warnings.push(message.into());
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for line in &self.lines {
            match line {
                Line::Kv(k, v) => {
                    let _ = writeln!(out, "{k}: {v}");
                }
                Line::Section(s) => {
                    let _ = writeln!(out, "{s}:");
                }
                Line::Item(k, v) => {
                    let _ = writeln!(out, "  {k}: {v}");
                }
                Line::Raw(r) => {
                    let _ = writeln!(out, "{r}");
                }
            }
        }
        out.push_str("warnings:\n");
        if self.warnings.is_empty() {
            out.push_str("  (none)\n");
        } else {
            for w in &self.warnings {
                let _ = writeln!(out, "  - {w}");
            }
        }
        out
    }
}

impl std::fmt::Display for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_text())
    }
}
