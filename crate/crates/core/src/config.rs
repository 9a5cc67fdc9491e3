//! Flat key-value configuration format with `[section]` headers.
//!
//! ```text
//! # run settings
//! [model]
//! model = rational
//!
//! [run]
//! eps = 0.01, 2
//! nodes = 2001
//! ```
//!
//! Keys are addressed as `section.key` (or bare `key` before any section
//! header). Values are uninterpreted strings at this layer; typed accessors
//! convert on demand. Later assignments to the same key override earlier
//! ones, so a CLI can append overrides by concatenation. Input is untrusted;
//! every line either parses or produces a [`ConfigError`] with its line
//! number.

use thiserror::Error;

/// Parse failure with 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("config parse error at line {line}: {message}")]
pub struct ConfigError {
    pub line: usize,
    pub message: String,
}

/// One `key = value` entry.
#[derive(Debug, Clone, PartialEq)]
pub struct ConfigEntry {
    /// Fully-qualified key, `section.key` or bare `key`.
    pub key: String,
    /// Raw value text, trimmed.
    pub value: String,
    /// 1-based source line.
    pub line: usize,
}

/// Parsed configuration document, preserving entry order.
#[derive(Debug, Clone, Default)]
pub struct ConfigDoc {
    entries: Vec<ConfigEntry>,
}

impl ConfigDoc {
    /// Parse the full document.
    pub fn parse(text: &str) -> Result<ConfigDoc, ConfigError> {
        let mut section = String::new();
        let mut entries = Vec::new();
        for (idx, raw_line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = strip_comment(raw_line).trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('[') {
                let Some(name) = rest.strip_suffix(']') else {
                    return Err(ConfigError {
                        line: line_no,
                        message: "unterminated section header".into(),
                    });
                };
                let name = name.trim();
                if name.is_empty() || !name.chars().all(is_key_char) {
                    return Err(ConfigError {
                        line: line_no,
                        message: format!("invalid section name `{name}`"),
                    });
                }
                section = name.to_string();
                continue;
            }
            let Some(eq) = line.find('=') else {
                return Err(ConfigError {
                    line: line_no,
                    message: "expected `key = value` or `[section]`".into(),
                });
            };
            let key = line[..eq].trim();
            let value = line[eq + 1..].trim();
            if key.is_empty() || !key.chars().all(is_key_char) {
                return Err(ConfigError { line: line_no, message: format!("invalid key `{key}`") });
            }
            let full = if section.is_empty() { key.to_string() } else { format!("{section}.{key}") };
            entries.push(ConfigEntry { key: full, value: value.to_string(), line: line_no });
        }
        Ok(ConfigDoc { entries })
    }

    /// All entries in source order.
    pub fn entries(&self) -> &[ConfigEntry] {
        &self.entries
    }

    /// Append or override a key programmatically (CLI flag overrides).
    pub fn set(&mut self, key: &str, value: &str) {
        self.entries.push(ConfigEntry { key: key.to_string(), value: value.to_string(), line: 0 });
    }

    /// Last value for `key`, if present.
    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().rev().find(|e| e.key == key).map(|e| e.value.as_str())
    }

    pub fn get_f64(&self, key: &str) -> Result<Option<f64>, ConfigError> {
        self.typed(key, "number", |s| s.parse::<f64>().ok().filter(|v| v.is_finite()))
    }

    pub fn get_usize(&self, key: &str) -> Result<Option<usize>, ConfigError> {
        self.typed(key, "integer", |s| s.parse::<usize>().ok())
    }

    /// Comma-separated list of numbers.
    pub fn get_f64_list(&self, key: &str) -> Result<Option<Vec<f64>>, ConfigError> {
        self.typed(key, "number list", |s| {
            s.split(',')
                .map(|part| part.trim().parse::<f64>().ok().filter(|v| v.is_finite()))
                .collect::<Option<Vec<f64>>>()
                .filter(|v| !v.is_empty())
        })
    }

    /// Comma-separated list of integers.
    pub fn get_usize_list(&self, key: &str) -> Result<Option<Vec<usize>>, ConfigError> {
        self.typed(key, "integer list", |s| {
            s.split(',')
                .map(|part| part.trim().parse::<usize>().ok())
                .collect::<Option<Vec<usize>>>()
                .filter(|v| !v.is_empty())
        })
    }

    fn typed<T>(
        &self,
        key: &str,
        kind: &str,
        convert: impl Fn(&str) -> Option<T>,
    ) -> Result<Option<T>, ConfigError> {
        let Some(entry) = self.entries.iter().rev().find(|e| e.key == key) else {
            return Ok(None);
        };
        match convert(&entry.value) {
            Some(v) => Ok(Some(v)),
            None => Err(ConfigError {
                line: entry.line,
                message: format!("key `{key}`: expected {kind}, got `{}`", entry.value),
            }),
        }
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(pos) => &line[..pos],
        None => line,
    }
}

fn is_key_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '-'
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_sections_and_lists() {
        let doc = ConfigDoc::parse(
            "top = 1\n[model]\nmodel = rational\n[run]\n# comment\neps = 0.01, 2\nnodes = 2001\n",
        )
        .unwrap();
        assert_eq!(doc.get("top"), Some("1"));
        assert_eq!(doc.get("model.model"), Some("rational"));
        assert_eq!(doc.get_f64_list("run.eps").unwrap().unwrap(), vec![0.01, 2.0]);
        assert_eq!(doc.get_usize("run.nodes").unwrap(), Some(2001));
        assert_eq!(doc.get("missing"), None);
    }

    #[test]
    fn later_keys_override() {
        let mut doc = ConfigDoc::parse("[run]\neps = 1\neps = 2\n").unwrap();
        assert_eq!(doc.get_f64("run.eps").unwrap(), Some(2.0));
        doc.set("run.eps", "3");
        assert_eq!(doc.get_f64("run.eps").unwrap(), Some(3.0));
    }

    #[test]
    fn reports_line_numbers() {
        let err = ConfigDoc::parse("a = 1\nbogus line\n").unwrap_err();
        assert_eq!(err.line, 2);
        let err = ConfigDoc::parse("[unclosed\n").unwrap_err();
        assert_eq!(err.line, 1);
        let err = ConfigDoc::parse("[run]\neps = notanumber\n")
            .unwrap()
            .get_f64("run.eps")
            .unwrap_err();
        assert_eq!(err.line, 2);
    }

    #[test]
    fn expression_values_pass_through_comments_aside() {
        let doc = ConfigDoc::parse("[model]\nW = (1-1/F)^2\n").unwrap();
        assert_eq!(doc.get("model.W"), Some("(1-1/F)^2"));
    }
}
