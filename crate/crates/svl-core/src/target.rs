//! Target configuration: the facts about the execution platform that both
//! the solver and the interpreter depend on. Getting these wrong makes
//! analysis work with an incorrect premise, so the loader is strict about
//! unknown keys and (optionally) about missing ones.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Float representation used by the target. Only binary32 is modeled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FloatFormat {
    Binary32,
}

impl fmt::Display for FloatFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "binary32")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TargetConfig {
    /// Width of the base integer type in bits.
    pub int_width: u32,
    /// Whether the target implements subnormal floats.
    pub denorm: bool,
    pub float_format: FloatFormat,
    /// Upper bound on the tuple-space size accepted by oracle enumeration.
    pub max_enum_domain: u64,
    /// Keys that were explicitly present in the config file.
    #[serde(default)]
    pub explicit: Vec<String>,
    /// Config file path, when loaded from one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
    /// Line of each key in the config file, for audit evidence.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub key_lines: BTreeMap<String, u32>,
}

impl Default for TargetConfig {
    fn default() -> Self {
        TargetConfig {
            int_width: 32,
            denorm: false,
            float_format: FloatFormat::Binary32,
            max_enum_domain: 100_000,
            explicit: Vec::new(),
            path: None,
            key_lines: BTreeMap::new(),
        }
    }
}

impl TargetConfig {
    /// Inclusive bounds of the base signed integer type.
    pub fn int_bounds(&self) -> (i128, i128) {
        let w = self.int_width;
        let max = (1i128 << (w - 1)) - 1;
        (-max - 1, max)
    }

    pub fn has_key(&self, key: &str) -> bool {
        self.explicit.iter().any(|k| k == key)
    }

    /// Location to cite for a key, falling back to line 1 of the file.
    pub fn key_loc(&self, key: &str) -> crate::loc::Loc {
        let file: Arc<str> = Arc::from(self.path.as_deref().unwrap_or("<target-config>"));
        let line = self.key_lines.get(key).copied().unwrap_or(1);
        crate::loc::Loc { file, line, col: 1 }
    }
}

#[derive(Debug, Error)]
pub enum TargetError {
    #[error("cannot read target config {0}: {1}")]
    Io(String, std::io::Error),
    #[error("{file}:{line}: unknown key `{key}`")]
    UnknownKey { file: String, line: u32, key: String },
    #[error("{file}:{line}: malformed value for `{key}`: {value}")]
    Malformed { file: String, line: u32, key: String, value: String },
    #[error("{file}:{line}: unsupported width {width} (expected 8, 16, 32 or 64)")]
    UnsupportedWidth { file: String, line: u32, width: String },
    #[error("{file}: missing key `{key}` (all keys must be explicit in strict mode)")]
    MissingKey { file: String, key: String },
}

/// Parse a line-based `key = value` target description.
///
/// Recognized keys: `int_width`, `denorm`, `float_format`,
/// `max_enum_domain`. `#` starts a comment. In strict mode every key must
/// be present; otherwise missing keys fall back to defaults.
pub fn load_target(path: &Path, strict: bool) -> Result<TargetConfig, TargetError> {
    let display = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| TargetError::Io(display.clone(), e))?;
    parse_target(&display, &text, strict)
}

pub fn parse_target(file: &str, text: &str, strict: bool) -> Result<TargetConfig, TargetError> {
    let mut cfg = TargetConfig { path: Some(file.to_string()), ..TargetConfig::default() };
    for (idx, raw) in text.lines().enumerate() {
        let line_no = (idx + 1) as u32;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(TargetError::Malformed {
                file: file.to_string(),
                line: line_no,
                key: line.to_string(),
                value: "expected `key = value`".to_string(),
            });
        };
        let key = key.trim().to_ascii_lowercase();
        let value = value.trim();
        let malformed = || TargetError::Malformed {
            file: file.to_string(),
            line: line_no,
            key: key.clone(),
            value: value.to_string(),
        };
        match key.as_str() {
            "int_width" => {
                let w: u32 = value.parse().map_err(|_| malformed())?;
                if ![8, 16, 32, 64].contains(&w) {
                    return Err(TargetError::UnsupportedWidth {
                        file: file.to_string(),
                        line: line_no,
                        width: value.to_string(),
                    });
                }
                cfg.int_width = w;
            }
            "denorm" => {
                cfg.denorm = match value.to_ascii_lowercase().as_str() {
                    "true" => true,
                    "false" => false,
                    _ => return Err(malformed()),
                };
            }
            "float_format" => {
                if !value.eq_ignore_ascii_case("binary32") {
                    return Err(malformed());
                }
                cfg.float_format = FloatFormat::Binary32;
            }
            "max_enum_domain" => {
                let n: u64 = value.parse().map_err(|_| malformed())?;
                if n == 0 {
                    return Err(malformed());
                }
                cfg.max_enum_domain = n;
            }
            _ => {
                return Err(TargetError::UnknownKey {
                    file: file.to_string(),
                    line: line_no,
                    key,
                })
            }
        }
        cfg.explicit.push(key);
        cfg.key_lines.insert(cfg.explicit.last().unwrap().clone(), line_no);
    }
    if strict {
        for key in ["int_width", "denorm", "float_format", "max_enum_domain"] {
            if !cfg.has_key(key) {
                return Err(TargetError::MissingKey {
                    file: file.to_string(),
                    key: key.to_string(),
                });
            }
        }
    }
    Ok(cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_basic_config() {
        let cfg = parse_target("t.cfg", "denorm = false\nint_width = 32\n", false).unwrap();
        assert!(!cfg.denorm);
        assert_eq!(cfg.int_width, 32);
        assert_eq!(cfg.int_bounds(), (i32::MIN as i128, i32::MAX as i128));
        assert!(cfg.has_key("denorm"));
        assert!(!cfg.has_key("max_enum_domain"));
        assert_eq!(cfg.key_loc("int_width").line, 2);
    }

    #[test]
    fn denorm_true_parses() {
        let cfg = parse_target("t.cfg", "denorm = true", false).unwrap();
        assert!(cfg.denorm);
    }

    #[test]
    fn rejects_unsupported_width() {
        let err = parse_target("t.cfg", "int_width = 7", false).unwrap_err();
        assert!(err.to_string().contains("unsupported width"));
    }

    #[test]
    fn rejects_unknown_key_and_bad_value() {
        assert!(parse_target("t.cfg", "frobnicate = 1", false).is_err());
        assert!(parse_target("t.cfg", "denorm = maybe", false).is_err());
    }

    #[test]
    fn strict_requires_all_keys() {
        let err = parse_target("t.cfg", "denorm = true", true).unwrap_err();
        assert!(err.to_string().contains("missing key"));
        let full = "int_width = 64\ndenorm = true\nfloat_format = binary32\nmax_enum_domain = 10\n";
        let cfg = parse_target("t.cfg", full, true).unwrap();
        assert_eq!(cfg.int_width, 64);
        assert_eq!(cfg.int_bounds().1, i64::MAX as i128);
    }
}
