//! Flat key=value configuration with dotted section names
//! (e.g. `bump.a=0.5`), overridable by command-line flags of the same names.

use crate::arith;
use crate::bump::BumpFunction;
use crate::error::{Error, Result};
use crate::lfunc::EvalParams;
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Config {
    map: BTreeMap<String, String>,
}

impl Config {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text).map_err(|e| match e {
            Error::Config(msg) => Error::Config(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Config(format!("line {}: expected key=value, got '{line}'", lineno + 1))
            })?;
            map.insert(key.trim().to_string(), value.trim().to_string());
        }
        Ok(Self { map })
    }

    /// canonical text form; `parse(render(c)) == c`
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.map {
            out.push_str(k);
            out.push('=');
            out.push_str(v);
            out.push('\n');
        }
        out
    }

    pub fn set(&mut self, key: &str, value: &str) {
        self.map.insert(key.trim().to_string(), value.trim().to_string());
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.map.get(key).map(|s| s.as_str())
    }

    pub fn get_f64(&self, key: &str, default: f64) -> Result<f64> {
        match self.map.get(key) {
            None => Ok(default),
            Some(v) => v
                .parse()
                .map_err(|e| Error::Config(format!("key {key}: {e}"))),
        }
    }

    pub fn get_u64(&self, key: &str, default: u64) -> Result<u64> {
        match self.map.get(key) {
            None => Ok(default),
            Some(v) => v
                .parse()
                .map_err(|e| Error::Config(format!("key {key}: {e}"))),
        }
    }

    pub fn get_usize(&self, key: &str, default: usize) -> Result<usize> {
        Ok(self.get_u64(key, default as u64)? as usize)
    }

    /// comma-separated float list
    pub fn get_grid(&self, key: &str, default: &[f64]) -> Result<Vec<f64>> {
        match self.map.get(key) {
            None => Ok(default.to_vec()),
            Some(v) => v
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<f64>()
                        .map_err(|e| Error::Config(format!("key {key}: {e}")))
                })
                .collect(),
        }
    }

    // ---- typed views over the documented keys ----

    pub fn eval_params(&self) -> Result<EvalParams> {
        let d = EvalParams::default();
        Ok(EvalParams {
            em_shift: self.get_usize("eval.em_shift", d.em_shift)?,
            em_order: self.get_usize("eval.em_order", d.em_order)?,
            deriv_radius: self.get_f64("eval.deriv_radius", d.deriv_radius)?,
            deriv_nodes: self.get_usize("eval.deriv_nodes", d.deriv_nodes)?,
            target_abs_err: self.get_f64("eval.target_abs_err", d.target_abs_err)?,
        })
    }

    /// bump from `bump.a`/`bump.b`/`bump.amplitude` around the given defaults
    pub fn bump_or(&self, default_support: (f64, f64)) -> Result<BumpFunction> {
        BumpFunction::new(
            self.get_f64("bump.a", default_support.0)?,
            self.get_f64("bump.b", default_support.1)?,
            self.get_f64("bump.amplitude", 1.0)?,
        )
    }

    pub fn sieve_cap(&self) -> Result<u64> {
        self.get_u64("arith.max_sieve", arith::DEFAULT_SIEVE_CAP)
    }

    pub fn out_dir(&self) -> PathBuf {
        PathBuf::from(self.get("run.out_dir").unwrap_or("reports"))
    }

    pub fn cache_dir(&self) -> PathBuf {
        PathBuf::from(self.get("run.cache_dir").unwrap_or("cache"))
    }

    pub fn parallelism(&self) -> Result<usize> {
        self.get_usize("run.parallelism", 0) // 0 = rayon default
    }

    pub fn selftest_seed(&self) -> Result<u64> {
        self.get_u64("selftest.seed", 1)
    }

    pub fn selftest_points(&self) -> Result<usize> {
        self.get_usize("selftest.points", 20)
    }

    pub fn zero_source_url(&self) -> Option<&str> {
        self.get("zeros.source_url")
    }
}
