//! Run configuration: optional JSON file, flag overrides, canonical hash.

use std::f64::consts::PI;
use std::fs;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use hyperladder::family::FamilyConfig;
use hyperladder::{Error, FamilyName, FamilySpec, Result};

/// Every knob of one invocation. All fields are optional so a partial
/// config file and command-line overrides merge cleanly; commands apply
/// their own defaults afterwards. Rationals stay strings ("p/q") here.
#[derive(Clone, Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields, default)]
pub struct RunConfig {
    pub family: Option<String>,
    pub alpha: Option<String>,
    pub beta: Option<String>,
    pub lmax: Option<usize>,
    pub mmax: Option<usize>,
    pub tol: Option<f64>,
    pub grid: Option<usize>,
    pub sign: Option<i32>,
    pub z: Option<String>,
    pub levels: Option<usize>,
    pub clip: Option<String>,
    pub format: Option<String>,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    /// Loads a JSON config file; unknown keys are rejected.
    pub fn from_file(path: &PathBuf) -> Result<RunConfig> {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::domain(format!("cannot read config {}: {e}", path.display())))?;
        serde_json::from_str(&text)
            .map_err(|e| Error::domain(format!("malformed config {}: {e}", path.display())))
    }

    /// Field-by-field override: anything set in `flags` wins.
    pub fn merged(file: RunConfig, flags: RunConfig) -> RunConfig {
        macro_rules! pick {
            ($field:ident) => {
                flags.$field.or(file.$field)
            };
        }
        RunConfig {
            family: pick!(family),
            alpha: pick!(alpha),
            beta: pick!(beta),
            lmax: pick!(lmax),
            mmax: pick!(mmax),
            tol: pick!(tol),
            grid: pick!(grid),
            sign: pick!(sign),
            z: pick!(z),
            levels: pick!(levels),
            clip: pick!(clip),
            format: pick!(format),
            out: pick!(out),
        }
    }

    /// Builds the family, flagging bad parameters as such.
    pub fn family(&self) -> Result<FamilySpec> {
        let name = self
            .family
            .as_deref()
            .ok_or_else(|| Error::domain("a family is required (--family or config file)"))?;
        name.parse::<FamilyName>()?;
        let config = FamilyConfig {
            family: name.to_string(),
            alpha: self.alpha.clone(),
            beta: self.beta.clone(),
        };
        config.to_family().map_err(|e| match e {
            Error::Domain(msg) => Error::domain(format!("parameter out of range: {msg}")),
            other => other,
        })
    }

    /// Tolerance with a command default; must be positive.
    pub fn tol_or(&self, default: f64) -> Result<f64> {
        let tol = self.tol.unwrap_or(default);
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(Error::domain(format!("tolerance must be positive, got {tol}")));
        }
        Ok(tol)
    }

    /// Sign convention of the change of variable, defaulting per family.
    pub fn sign_for(&self, family: &FamilySpec) -> i32 {
        self.sign
            .unwrap_or_else(|| hyperladder::schrodinger::default_sign(family.name()))
    }

    /// Sampling window in x: an explicit `--clip lo,hi` or the family's
    /// standard finite window.
    pub fn x_window(&self, family: &FamilySpec) -> Result<(f64, f64)> {
        if let Some(spec) = &self.clip {
            let (lo, hi) = parse_pair(spec, "clip")?;
            if !(lo < hi) {
                return Err(Error::domain(format!("clip window is empty: {spec}")));
            }
            return Ok((lo, hi));
        }
        Ok(match family.name() {
            FamilyName::Hypergeometric | FamilyName::Jacobi => (0.0, PI),
            FamilyName::Laguerre => (0.0, 20.0),
            FamilyName::Hermite => (-12.0, 12.0),
        })
    }

    /// Coherent-state label `--z re,im` (or a bare real part).
    pub fn z_value(&self) -> Result<(f64, f64)> {
        match &self.z {
            None => Ok((0.0, 0.0)),
            Some(spec) if spec.contains(',') => parse_pair(spec, "z"),
            Some(spec) => {
                let re = parse_float(spec, "z")?;
                Ok((re, 0.0))
            }
        }
    }

    /// Hex SHA-256 over the command name and the payload-relevant fields.
    /// The output path is excluded: the same data written elsewhere must
    /// hash identically.
    pub fn digest(&self, command: &str) -> String {
        let mut hashed = self.clone();
        hashed.out = None;
        let body = serde_json::json!({ "command": command, "config": hashed });
        let mut hasher = Sha256::new();
        hasher.update(body.to_string().as_bytes());
        hex::encode(hasher.finalize())
    }
}

fn parse_float(text: &str, what: &str) -> Result<f64> {
    let v: f64 = text
        .trim()
        .parse()
        .map_err(|_| Error::domain(format!("cannot parse {what} component '{text}'")))?;
    if !v.is_finite() {
        return Err(Error::domain(format!("{what} must be finite, got {text}")));
    }
    Ok(v)
}

/// Parses "a,b" into two finite floats.
pub fn parse_pair(text: &str, what: &str) -> Result<(f64, f64)> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(Error::domain(format!("{what} expects 'a,b', got '{text}'")));
    }
    Ok((parse_float(parts[0], what)?, parse_float(parts[1], what)?))
}
