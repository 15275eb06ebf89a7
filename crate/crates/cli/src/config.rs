//! Run configuration: defaults, then a flat `key = value` file, then environment variables,
//! then command-line flags. Flags and environment variables are merged by clap, so a flag
//! always wins over its variable.

use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QSpec {
    Symbolic,
    Rational(BigRational),
}

impl QSpec {
    pub fn parse(s: &str) -> Result<Self, CliError> {
        let s = s.trim();
        if s == "sym" {
            return Ok(QSpec::Symbolic);
        }
        let bad = || CliError::Input(format!("q must be \"sym\" or a positive rational, got {s:?}"));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        let q = BigRational::new(n, d);
        if !q.is_positive() {
            return Err(bad());
        }
        Ok(QSpec::Rational(q))
    }

    pub fn label(&self) -> String {
        match self {
            QSpec::Symbolic => "sym".into(),
            QSpec::Rational(q) => q.to_string(),
        }
    }
}

/// `vmin:vmax` or a bare `vmax`. Only `vmax` bounds the computation.
pub fn parse_vwindow(s: &str) -> Result<(i32, i32), CliError> {
    let bad = || CliError::Input(format!("vwindow must be vmin:vmax or vmax, got {s:?}"));
    let (lo, hi) = match s.split_once(':') {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => (0, s.trim().parse().map_err(|_| bad())?),
    };
    if lo > hi || hi < 0 {
        return Err(bad());
    }
    Ok((lo, hi))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub cartan_type: String,
    pub depth: u32,
    pub vmin: i32,
    pub vmax: i32,
    pub shell_budget: u32,
    pub q: QSpec,
    pub seed: u64,
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            cartan_type: "A1".into(),
            depth: 4,
            vmin: 0,
            vmax: 12,
            shell_budget: 30,
            q: QSpec::Symbolic,
            seed: 0,
            out: None,
        }
    }
}

/// Values given on the command line or through the environment.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub cartan_type: Option<String>,
    pub depth: Option<u32>,
    pub vwindow: Option<String>,
    pub q: Option<String>,
    pub shells: Option<u32>,
    pub seed: Option<u64>,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn load(file: Option<&Path>, over: &Overrides) -> Result<Self, CliError> {
        let mut cfg = RunConfig::default();
        if let Some(path) = file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            cfg.apply_file(&text)?;
        }
        if let Some(t) = &over.cartan_type {
            cfg.cartan_type = t.clone();
        }
        if let Some(d) = over.depth {
            cfg.depth = d;
        }
        if let Some(w) = &over.vwindow {
            (cfg.vmin, cfg.vmax) = parse_vwindow(w)?;
        }
        if let Some(q) = &over.q {
            cfg.q = QSpec::parse(q)?;
        }
        if let Some(s) = over.shells {
            cfg.shell_budget = s;
        }
        if let Some(s) = over.seed {
            cfg.seed = s;
        }
        if over.out.is_some() {
            cfg.out = over.out.clone();
        }
        cfg.validate()?;
        Ok(cfg)
    }

    /// Keys: `type`, `depth`, `vmin`, `vmax`, `shells`, `q`, `seed`, `out`.
    pub fn apply_file(&mut self, text: &str) -> Result<(), CliError> {
        let table: toml::Table = text.parse().map_err(|e: toml::de::Error| CliError::Input(format!("config: {e}")))?;
        for (key, value) in &table {
            let int = || {
                value.as_integer().ok_or_else(|| CliError::Input(format!("config: {key} must be an integer")))
            };
            let nonneg = |x: i64| {
                u32::try_from(x).map_err(|_| CliError::Input(format!("config: {key} must be nonnegative")))
            };
            match key.as_str() {
                "type" => {
                    self.cartan_type = value
                        .as_str()
                        .ok_or_else(|| CliError::Input("config: type must be a string".into()))?
                        .to_string()
                }
                "depth" => self.depth = nonneg(int()?)?,
                "vmin" => self.vmin = int()? as i32,
                "vmax" => self.vmax = int()? as i32,
                "shells" => self.shell_budget = nonneg(int()?)?,
                "seed" => self.seed = int()? as u64,
                "q" => {
                    self.q = match value {
                        toml::Value::String(s) => QSpec::parse(s)?,
                        toml::Value::Integer(k) => QSpec::parse(&k.to_string())?,
                        _ => return Err(CliError::Input("config: q must be \"sym\" or a rational".into())),
                    }
                }
                "out" => {
                    self.out = Some(PathBuf::from(
                        value.as_str().ok_or_else(|| CliError::Input("config: out must be a string".into()))?,
                    ))
                }
                other => return Err(CliError::Input(format!("config: unknown key {other:?}"))),
            }
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.shell_budget < 2 {
            return Err(CliError::Input("shells must be at least 2".into()));
        }
        if self.vmin > self.vmax || self.vmax < 0 {
            return Err(CliError::Input(format!("bad v-window {}:{}", self.vmin, self.vmax)));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_values() {
        assert_eq!(QSpec::parse("sym").unwrap(), QSpec::Symbolic);
        assert_eq!(QSpec::parse("3").unwrap().label(), "3");
        assert_eq!(QSpec::parse("6/4").unwrap().label(), "3/2");
        assert!(QSpec::parse("0").is_err());
        assert!(QSpec::parse("-2").is_err());
        assert!(QSpec::parse("x").is_err());
    }

    #[test]
    fn windows() {
        assert_eq!(parse_vwindow("14").unwrap(), (0, 14));
        assert_eq!(parse_vwindow("-2:10").unwrap(), (-2, 10));
        assert!(parse_vwindow("5:3").is_err());
    }

    #[test]
    fn file_then_overrides() {
        let mut cfg = RunConfig::default();
        cfg.apply_file("type = \"A2\"\ndepth = 6\nq = 3\nvmax = 10\n").unwrap();
        assert_eq!((cfg.cartan_type.as_str(), cfg.depth, cfg.vmax), ("A2", 6, 10));
        assert_eq!(cfg.q, QSpec::parse("3").unwrap());
        assert!(cfg.apply_file("colour = 1").is_err());
        let over = Overrides { depth: Some(2), ..Default::default() };
        let dir = std::env::temp_dir().join(format!("affine-cfg-{}", std::process::id()));
        std::fs::write(&dir, "depth = 7\nshells = 9\n").unwrap();
        let cfg = RunConfig::load(Some(&dir), &over).unwrap();
        std::fs::remove_file(&dir).ok();
        assert_eq!((cfg.depth, cfg.shell_budget), (2, 9));
    }
}
