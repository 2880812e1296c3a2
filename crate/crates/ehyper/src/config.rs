//! Flat `key = value` experiment files, expanded into command-line words.
//!
//! ```text
//! # density sweep
//! command = density params
//! t = 3
//! n = 1000000
//! ```
//!
//! `command` names the subcommand path, `args` holds positional arguments,
//! and every other key becomes `--key value`. A value of `true` becomes a
//! bare flag and `false` drops the key.

use std::path::Path;

use crate::format::ParseError;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExperimentConfig {
    pub command: Vec<String>,
    pub args: Vec<String>,
    /// Options in file order.
    pub options: Vec<(String, String)>,
}

impl ExperimentConfig {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut cfg = ExperimentConfig::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((k, v)) = line.split_once('=') else {
                return Err(ParseError {
                    line: i + 1,
                    msg: "expected `key = value`".into(),
                });
            };
            let (k, v) = (k.trim(), v.trim());
            if k.is_empty() || k.contains(char::is_whitespace) {
                return Err(ParseError {
                    line: i + 1,
                    msg: format!("bad key {k:?}"),
                });
            }
            match k {
                "command" => cfg.command = v.split_whitespace().map(String::from).collect(),
                "args" => cfg.args = v.split_whitespace().map(String::from).collect(),
                "config" => {
                    return Err(ParseError {
                        line: i + 1,
                        msg: "config files cannot include other config files".into(),
                    })
                }
                _ => cfg.options.push((k.to_string(), v.to_string())),
            }
        }
        if cfg.command.is_empty() {
            return Err(ParseError {
                line: text.lines().count().max(1),
                msg: "missing `command` key".into(),
            });
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text).map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))
    }

    /// Command words, then options, then positional arguments.
    pub fn to_args(&self) -> Vec<String> {
        let mut out = self.command.clone();
        for (k, v) in &self.options {
            match v.as_str() {
                "false" => {}
                "true" => out.push(format!("--{k}")),
                _ => {
                    out.push(format!("--{k}"));
                    out.push(v.clone());
                }
            }
        }
        if !self.args.is_empty() {
            out.push("--".into());
            out.extend(self.args.iter().cloned());
        }
        out
    }
}

/// Replaces `--config FILE` in `argv` by the file's expansion. Flags left
/// on the command line follow the expansion and so take precedence.
pub fn expand_argv(argv: Vec<String>) -> anyhow::Result<Vec<String>> {
    let mut path = None;
    let mut rest = Vec::with_capacity(argv.len());
    let mut it = argv.into_iter();
    if let Some(p) = it.next() {
        rest.push(p);
    }
    while let Some(a) = it.next() {
        if a == "--" {
            rest.push(a);
            rest.extend(it.by_ref());
            break;
        }
        if a == "--config" {
            path = Some(it.next().ok_or_else(|| anyhow::anyhow!("--config needs a file"))?);
        } else if let Some(p) = a.strip_prefix("--config=") {
            path = Some(p.to_string());
        } else {
            rest.push(a);
        }
    }
    let Some(path) = path else { return Ok(rest) };
    let cfg = ExperimentConfig::load(Path::new(&path))?;
    let mut words = cfg.to_args();
    // positional arguments from the file must stay last
    let tail = match words.iter().position(|w| w == "--") {
        Some(i) => words.split_off(i),
        None => Vec::new(),
    };
    let mut out = vec![rest.remove(0)];
    out.extend(words);
    out.extend(rest);
    out.extend(tail);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expands_keys() {
        let c = ExperimentConfig::parse("# x\ncommand = density params\nt = 3\ntrace = true\nquiet = false\nargs = a.txt\n").unwrap();
        assert_eq!(c.to_args(), ["density", "params", "--t", "3", "--trace", "--", "a.txt"]);
    }

    #[test]
    fn reports_bad_line() {
        let e = ExperimentConfig::parse("command = x\noops\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(ExperimentConfig::parse("t = 3\n").is_err());
    }
}
