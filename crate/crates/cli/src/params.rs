//! `key=value` parameters, given positionally or with `--param`.

use std::ops::RangeInclusive;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Default)]
pub struct Params {
    pairs: Vec<(String, String)>,
}

impl Params {
    pub fn parse<'a>(raw: impl IntoIterator<Item = &'a String>) -> Result<Self> {
        let mut pairs: Vec<(String, String)> = Vec::new();
        for item in raw {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| CliError::usage(format!("expected key=value, got `{item}`")))?;
            let (k, v) = (k.trim(), v.trim());
            if k.is_empty() || v.is_empty() {
                return Err(CliError::usage(format!("expected key=value, got `{item}`")));
            }
            if pairs.iter().any(|(seen, _)| seen == k) {
                return Err(CliError::usage(format!("parameter `{k}` given twice")));
            }
            pairs.push((k.to_string(), v.to_string()));
        }
        Ok(Params { pairs })
    }

    /// Rejects any key outside `allowed`.
    pub fn restrict(&self, context: &str, allowed: &[&str]) -> Result<()> {
        for (k, _) in &self.pairs {
            if !allowed.contains(&k.as_str()) {
                let expected = if allowed.is_empty() {
                    "none".to_string()
                } else {
                    allowed.join(", ")
                };
                return Err(CliError::usage(format!(
                    "{context}: unknown parameter `{k}` (expected: {expected})"
                )));
            }
        }
        Ok(())
    }

    pub fn raw(&self, key: &str) -> Option<&str> {
        self.pairs.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn real(&self, key: &str) -> Result<Option<f64>> {
        self.raw(key)
            .map(|v| {
                v.parse::<f64>()
                    .map_err(|_| CliError::usage(format!("parameter `{key}`: `{v}` is not a number")))
            })
            .transpose()
    }

    /// Inclusive integer range written `lo..hi`, or a single `n` meaning `1..n`.
    pub fn range(&self, key: &str, default: RangeInclusive<u64>) -> Result<RangeInclusive<u64>> {
        let Some(v) = self.raw(key) else {
            return Ok(default);
        };
        let bad = || CliError::usage(format!("parameter `{key}`: `{v}` is not a range lo..hi"));
        let parse = |s: &str| s.trim().parse::<u64>().map_err(|_| bad());
        let (lo, hi) = match v.split_once("..") {
            Some((lo, hi)) => (parse(lo)?, parse(hi.trim_start_matches('='))?),
            None => (1, parse(v)?),
        };
        if lo == 0 || lo > hi {
            return Err(bad());
        }
        Ok(lo..=hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(items: &[&str]) -> Result<Params> {
        let owned: Vec<String> = items.iter().map(|s| s.to_string()).collect();
        Params::parse(&owned)
    }

    #[test]
    fn parses_pairs() {
        let p = params(&["x=0.5", "K = 2"]).unwrap();
        assert_eq!(p.real("x").unwrap(), Some(0.5));
        assert_eq!(p.real("K").unwrap(), Some(2.0));
        assert_eq!(p.real("y").unwrap(), None);
    }

    #[test]
    fn rejects_malformed() {
        assert!(params(&["x"]).is_err());
        assert!(params(&["=1"]).is_err());
        assert!(params(&["x=1", "x=2"]).is_err());
        assert!(params(&["x=abc"]).unwrap().real("x").is_err());
        assert!(params(&["x=1"]).unwrap().restrict("t", &["y"]).is_err());
    }

    #[test]
    fn ranges() {
        let p = params(&["n=3..7", "m=5", "k=1..=4", "bad=4..2"]).unwrap();
        assert_eq!(p.range("n", 1..=10).unwrap(), 3..=7);
        assert_eq!(p.range("m", 1..=10).unwrap(), 1..=5);
        assert_eq!(p.range("k", 1..=10).unwrap(), 1..=4);
        assert_eq!(p.range("z", 1..=10).unwrap(), 1..=10);
        assert!(p.range("bad", 1..=10).is_err());
    }
}
