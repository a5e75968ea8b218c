//! `key = value` config files. Keys are the long flag names without the
//! leading dashes; command-line flags always win.

use std::collections::HashMap;
use std::path::Path;

use anyhow::{bail, Context, Result};

const KNOWN_KEYS: &[&str] = &[
    "p",
    "r",
    "alpha2",
    "phase",
    "figure",
    "p-grid",
    "r-grid",
    "alpha2-grid",
    "out",
    "measure-side",
    "threads",
];

#[derive(Debug, Default, Clone)]
pub struct Config {
    values: HashMap<String, (usize, String)>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read --config {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("in --config {}", path.display()))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut values = HashMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                bail!("line {}: expected `key = value`, got {raw:?}", n + 1);
            };
            let key = key.trim().replace('_', "-");
            if !KNOWN_KEYS.contains(&key.as_str()) {
                bail!("line {}: unknown key {key:?}", n + 1);
            }
            values.insert(key, (n + 1, value.trim().to_string()));
        }
        Ok(Self { values })
    }

    /// `flag` if given, else the parsed config value for `key`.
    pub fn merge<T>(
        &self,
        flag: Option<T>,
        key: &str,
        parse: impl Fn(&str) -> Result<T, String>,
    ) -> Result<Option<T>> {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.values.get(key) {
            None => Ok(None),
            Some((line, raw)) => parse(raw)
                .map(Some)
                .map_err(|e| anyhow::anyhow!("config line {line}: invalid --{key}: {e}")),
        }
    }
}
