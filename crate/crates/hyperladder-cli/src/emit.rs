//! `emit`: deterministic datasets in JSON or CSV. JSON output is a single
//! document `{"meta": ..., "data": ...}`; CSV output is a `# meta` comment
//! line, a header line, then rows. Identical configs give identical bytes.

use std::io::Write;

use serde_json::{json, Value};

use hyperladder::ladder::asf;
use hyperladder::schrodinger::numerov::{analytic_levels, numerov_eigenvalues};
use hyperladder::schrodinger::{change_of_variable, potential, uniform_grid, wavefunction};
use hyperladder::coherent::{self, Complex64};
use hyperladder::{Error, FamilySpec, Result};

use crate::config::RunConfig;

/// The datasets `emit` knows how to produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum What {
    /// Classical polynomial coefficients, lowest order first.
    Poly,
    /// Associated-function parts `scale * kappa^m * part(s)`.
    Asf,
    /// Partner potential V_m on a grid in x.
    Potential,
    /// Normalized bound state Psi_{l,m} on a grid in x.
    Wavefunction,
    /// Coherent-state coefficients for a sector and label z.
    Coherent,
    /// Numerov eigenvalues next to the analytic levels.
    Spectrum,
}

impl What {
    fn name(self) -> &'static str {
        match self {
            What::Poly => "poly",
            What::Asf => "asf",
            What::Potential => "potential",
            What::Wavefunction => "wavefunction",
            What::Coherent => "coherent",
            What::Spectrum => "spectrum",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
}

fn format_of(config: &RunConfig) -> Result<Format> {
    match config.format.as_deref() {
        None | Some("json") => Ok(Format::Json),
        Some("csv") => Ok(Format::Csv),
        Some(other) => Err(Error::domain(format!(
            "unknown format '{other}' (expected json or csv)"
        ))),
    }
}

/// CSV cell for a float: shortest round-trip form, `nan` when flagged.
fn cell(v: Option<f64>) -> String {
    match v {
        Some(x) => format!("{x}"),
        None => "nan".to_string(),
    }
}

fn finite(v: f64) -> Option<f64> {
    v.is_finite().then_some(v)
}

struct Dataset {
    data: Value,
    header: &'static str,
    rows: Vec<String>,
}

fn poly_dataset(family: &FamilySpec, config: &RunConfig) -> Result<Dataset> {
    let lmax = config.lmax.unwrap_or(8);
    let mut data = Vec::new();
    let mut rows = Vec::new();
    for l in 0..=lmax {
        let poly = family.classical_polynomial(l);
        let coeffs: Vec<String> = poly.coeffs().iter().map(|c| c.to_string()).collect();
        for (i, c) in coeffs.iter().enumerate() {
            rows.push(format!("{l},{i},{c}"));
        }
        data.push(json!({ "l": l, "coefficients": coeffs }));
    }
    Ok(Dataset {
        data: json!(data),
        header: "l,index,coefficient",
        rows,
    })
}

fn asf_dataset(family: &FamilySpec, config: &RunConfig) -> Result<Dataset> {
    let lmax = config.lmax.unwrap_or(8);
    let mmax = config.mmax.unwrap_or(lmax);
    let mut data = Vec::new();
    let mut rows = Vec::new();
    for l in 0..=lmax {
        for m in 0..=l.min(mmax) {
            let phi = asf(family, l, m)?;
            let scale = phi.scale().to_string();
            let coeffs: Vec<String> = phi.part().coeffs().iter().map(|c| c.to_string()).collect();
            for (i, c) in coeffs.iter().enumerate() {
                rows.push(format!("{l},{m},{scale},{i},{c}"));
            }
            data.push(json!({ "l": l, "m": m, "scale": scale, "coefficients": coeffs }));
        }
    }
    Ok(Dataset {
        data: json!(data),
        header: "l,m,scale,index,coefficient",
        rows,
    })
}

fn potential_dataset(family: &FamilySpec, config: &RunConfig) -> Result<Dataset> {
    let m = config.mmax.unwrap_or(0);
    let sign = config.sign_for(family);
    let cov = change_of_variable(family, sign)?;
    let (lo, hi) = config.x_window(family)?;
    let grid = uniform_grid(lo, hi, config.grid.unwrap_or(512));
    let profile = potential(&cov, m, &grid)?;
    let values: Vec<Option<f64>> = profile.values.iter().map(|&v| finite(v)).collect();
    let rows = profile
        .grid
        .iter()
        .zip(&values)
        .enumerate()
        .map(|(i, (x, v))| {
            let flag = usize::from(profile.flagged.contains(&i));
            format!("{x},{},{flag}", cell(*v))
        })
        .collect();
    Ok(Dataset {
        data: json!({
            "m": m,
            "sign": sign,
            "lambda_m": profile.lambda_m.to_string(),
            "x": profile.grid,
            "v": values,
            "flagged": profile.flagged,
        }),
        header: "x,v,flagged",
        rows,
    })
}

fn wavefunction_dataset(family: &FamilySpec, config: &RunConfig) -> Result<Dataset> {
    let l = config.lmax.unwrap_or(2);
    let m = config.mmax.unwrap_or(0);
    let sign = config.sign_for(family);
    let cov = change_of_variable(family, sign)?;
    let (lo, hi) = config.x_window(family)?;
    let grid = uniform_grid(lo, hi, config.grid.unwrap_or(512));
    let wf = wavefunction(&cov, l, m, &grid)?;
    let rows = wf
        .grid
        .iter()
        .zip(&wf.values)
        .map(|(x, p)| format!("{x},{p}"))
        .collect();
    Ok(Dataset {
        data: json!({
            "l": wf.l,
            "m": wf.m,
            "sign": sign,
            "x": wf.grid,
            "psi": wf.values,
        }),
        header: "x,psi",
        rows,
    })
}

fn coherent_dataset(family: &FamilySpec, config: &RunConfig) -> Result<Dataset> {
    let m = config.mmax.unwrap_or(0);
    let tol = config.tol_or(1e-12)?;
    let (re, im) = config.z_value()?;
    let state = coherent::coherent_state(family, m, Complex64::new(re, im), tol)?;
    let coeffs: Vec<[f64; 2]> = state.coeffs.iter().map(|c| [c.re, c.im]).collect();
    let rows = coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| format!("{i},{},{}", c[0], c[1]))
        .collect();
    Ok(Dataset {
        data: json!({
            "m": m,
            "z": [re, im],
            "tol": tol,
            "truncation": state.truncation,
            "tail_bound": state.tail_bound,
            "normalization_sq": state.normalization_sq(),
            "coefficient_norm_sq": state.coefficient_norm_sq(),
            "coefficients": coeffs,
        }),
        header: "index,re,im",
        rows,
    })
}

fn spectrum_dataset(family: &FamilySpec, config: &RunConfig) -> Result<Dataset> {
    let m = config.mmax.unwrap_or(0);
    let count = config.levels.unwrap_or(3);
    let sign = config.sign_for(family);
    let cov = change_of_variable(family, sign)?;
    let (lo, hi) = config.x_window(family)?;
    let grid = uniform_grid(lo, hi, config.grid.unwrap_or(8001));
    let profile = potential(&cov, m, &grid)?;
    // An explicit --clip narrows both the sampling window and the Dirichlet
    // walls, matching how singular potentials are actually solved.
    let clip = config.clip.as_ref().map(|_| (lo, hi));
    let levels = numerov_eigenvalues(&profile, count, clip)?;
    let analytic = analytic_levels(family, m, count);
    let abs_err: Vec<f64> = levels
        .iter()
        .zip(&analytic)
        .map(|(e, a)| (e - a).abs())
        .collect();
    let rows = levels
        .iter()
        .zip(&analytic)
        .zip(&abs_err)
        .enumerate()
        .map(|(i, ((e, a), err))| format!("{i},{e},{a},{err}"))
        .collect();
    Ok(Dataset {
        data: json!({
            "m": m,
            "sign": sign,
            "count": count,
            "levels": levels,
            "analytic": analytic,
            "abs_err": abs_err,
        }),
        header: "index,numerov,analytic,abs_err",
        rows,
    })
}

/// Builds the dataset and writes it in the requested format.
pub fn run(what: What, config: &RunConfig, out: &mut dyn Write) -> Result<()> {
    let family = config.family()?;
    let format = format_of(config)?;
    let dataset = match what {
        What::Poly => poly_dataset(&family, config)?,
        What::Asf => asf_dataset(&family, config)?,
        What::Potential => potential_dataset(&family, config)?,
        What::Wavefunction => wavefunction_dataset(&family, config)?,
        What::Coherent => coherent_dataset(&family, config)?,
        What::Spectrum => spectrum_dataset(&family, config)?,
    };
    let command = format!("emit {}", what.name());
    let meta = json!({
        "command": command,
        "family": family.id(),
        "config_sha256": config.digest(&command),
    });
    let io_err = |e: std::io::Error| Error::domain(format!("cannot write output: {e}"));
    match format {
        Format::Json => {
            let doc = json!({ "meta": meta, "data": dataset.data });
            let text = serde_json::to_string_pretty(&doc)
                .map_err(|e| Error::internal(format!("emit serialization failed: {e}")))?;
            writeln!(out, "{text}").map_err(io_err)?;
        }
        Format::Csv => {
            writeln!(out, "# {meta}").map_err(io_err)?;
            writeln!(out, "{}", dataset.header).map_err(io_err)?;
            for row in dataset.rows {
                writeln!(out, "{row}").map_err(io_err)?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn legendre() -> RunConfig {
        RunConfig {
            family: Some("jacobi".into()),
            alpha: Some("0".into()),
            beta: Some("0".into()),
            ..RunConfig::default()
        }
    }

    #[test]
    fn legendre_degree_two_coefficients() {
        let mut config = legendre();
        config.lmax = Some(2);
        let mut buf = Vec::new();
        run(What::Poly, &config, &mut buf).unwrap();
        let doc: Value = serde_json::from_slice(&buf).unwrap();
        let rows = doc["data"].as_array().unwrap();
        assert_eq!(rows[2]["coefficients"], json!(["-1/2", "0", "3/2"]));
    }

    #[test]
    fn coherent_at_origin_is_the_ground_state() {
        let mut config = legendre();
        config.z = Some("0".into());
        let mut buf = Vec::new();
        run(What::Coherent, &config, &mut buf).unwrap();
        let doc: Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(doc["data"]["coefficients"], json!([[1.0, 0.0]]));
    }

    #[test]
    fn csv_has_meta_comment_then_header() {
        let mut config = legendre();
        config.lmax = Some(1);
        config.format = Some("csv".into());
        let mut buf = Vec::new();
        run(What::Poly, &config, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        let meta = lines.next().unwrap();
        assert!(meta.starts_with("# {"));
        assert!(meta.contains("config_sha256"));
        assert_eq!(lines.next(), Some("l,index,coefficient"));
        assert_eq!(lines.next(), Some("0,0,1"));
    }

    #[test]
    fn unknown_format_is_rejected() {
        let mut config = legendre();
        config.format = Some("yaml".into());
        let mut buf = Vec::new();
        let err = run(What::Poly, &config, &mut buf).unwrap_err();
        assert!(err.to_string().contains("unknown format"));
    }
}
