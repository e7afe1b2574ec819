//! `verify`: exact ladder sweeps plus numeric orthogonality, norm-ladder
//! and commutator checks for one family, reported as JSON lines.

use std::io::Write;

use rayon::prelude::*;
use serde_json::{json, Value};

use hyperladder::hilbert::{classify_algebra, commutator_checks, AlgebraClass, HilbertSpace};
use hyperladder::ladder::{
    factorization_check, hamiltonian_check, intertwining_check, lowering_check, raising_check,
    three_term_check, LadderReport,
};
use hyperladder::{Error, FamilySpec, Result};

use crate::config::RunConfig;

/// Default depth of the sweep when no range is given.
const DEFAULT_LMAX: usize = 10;
const DEFAULT_TOL: f64 = 1e-10;

/// All exact identities for one l, in a fixed order.
fn exact_reports(family: &FamilySpec, l: usize, mmax: usize) -> Result<Vec<LadderReport>> {
    let mut reports = Vec::new();
    for m in 0..=l.min(mmax) {
        reports.push(hamiltonian_check(family, l, m)?);
        if m >= 1 {
            reports.push(lowering_check(family, l, m)?);
        }
        if m < l {
            reports.push(raising_check(family, l, m)?);
            reports.push(factorization_check(family, l, m)?);
            reports.push(intertwining_check(family, l, m)?);
        }
        if m >= 1 && m < l {
            reports.push(three_term_check(family, l, m)?);
        }
    }
    Ok(reports)
}

fn tagged(check: &str, payload: Value) -> Result<Value> {
    let mut value = payload;
    let map = value
        .as_object_mut()
        .ok_or_else(|| Error::internal("report payload must be a JSON object"))?;
    map.insert("check".to_string(), json!(check));
    Ok(value)
}

/// Runs the sweep and streams one JSON object per line. Returns whether
/// every check passed; the first failure is echoed to stderr by the caller.
pub fn run(config: &RunConfig, out: &mut dyn Write) -> Result<Option<String>> {
    let family = config.family()?;
    let lmax = config.lmax.unwrap_or(DEFAULT_LMAX);
    let mmax = config.mmax.unwrap_or(lmax);
    let tol = config.tol_or(DEFAULT_TOL)?;

    let mut lines: Vec<Value> = Vec::new();
    lines.push(json!({
        "check": "meta",
        "command": "verify",
        "family": family.id(),
        "lmax": lmax,
        "mmax": mmax,
        "tol": tol,
        "config_sha256": config.digest("verify"),
    }));

    let mut first_failure: Option<String> = None;
    let mut failures = 0usize;

    // The exact sweep is the bulk of the work; fan out over l and keep the
    // per-l order so the report stream is deterministic.
    let per_l: Vec<Result<Vec<LadderReport>>> = (0..=lmax)
        .into_par_iter()
        .map(|l| exact_reports(&family, l, mmax))
        .collect();
    let mut checks = 0usize;
    for batch in per_l {
        for report in batch? {
            if !report.passed() {
                failures += 1;
                first_failure.get_or_insert_with(|| {
                    format!(
                        "{} {} failed at l={} m={} (residual {})",
                        report.family, report.identity, report.l, report.m, report.residual
                    )
                });
            }
            checks += 1;
            lines.push(tagged("ladder", serde_json::to_value(&report).map_err(json_err)?)?);
        }
    }

    let space = HilbertSpace::new(family.clone());
    let ortho = space.orthogonality_max(lmax, mmax.min(lmax))?;
    let ortho_pass = ortho <= tol;
    lines.push(json!({
        "check": "orthogonality",
        "family": family.id(),
        "lmax": lmax,
        "mmax": mmax.min(lmax),
        "max_abs": ortho,
        "tol": tol,
        "status": if ortho_pass { "pass" } else { "fail" },
    }));
    checks += 1;

    let ladder_dev = space.norm_ladder_max_dev(lmax, mmax.min(lmax))?;
    let ladder_pass = ladder_dev <= tol;
    lines.push(json!({
        "check": "norm_ladder",
        "family": family.id(),
        "lmax": lmax,
        "mmax": mmax.min(lmax),
        "max_rel_dev": ladder_dev,
        "tol": tol,
        "status": if ladder_pass { "pass" } else { "fail" },
    }));
    checks += 1;

    for (name, pass, detail) in [
        ("orthogonality", ortho_pass, format!("max |<l,k>| = {ortho:.3e}")),
        ("norm_ladder", ladder_pass, format!("max relative deviation {ladder_dev:.3e}")),
    ] {
        if !pass {
            failures += 1;
            first_failure
                .get_or_insert_with(|| format!("{} {name} exceeded tol {tol:.1e}: {detail}", family.id()));
        }
    }

    for m in 0..=mmax.min(3) {
        let report = commutator_checks(&family, m, lmax)?;
        for identity in &report.identities {
            let pass = identity.exact && identity.max_coeff_dev <= tol;
            if !pass {
                failures += 1;
                first_failure.get_or_insert_with(|| {
                    format!(
                        "{} commutator {} failed at m={m} (coeff dev {:.3e})",
                        family.id(),
                        identity.name,
                        identity.max_coeff_dev
                    )
                });
            }
            checks += 1;
            lines.push(json!({
                "check": "commutator",
                "family": family.id(),
                "m": m,
                "lmax": lmax,
                "identity": identity.name,
                "exact": identity.exact,
                "max_coeff_dev": identity.max_coeff_dev,
                "tol": tol,
                "status": if pass { "pass" } else { "fail" },
            }));
        }
    }

    let class = match classify_algebra(&family)? {
        AlgebraClass::SuOneOne => "su(1,1)",
        AlgebraClass::HeisenbergWeyl => "heisenberg-weyl",
    };
    lines.push(json!({
        "check": "algebra",
        "family": family.id(),
        "class": class,
    }));

    lines.push(json!({
        "check": "summary",
        "family": family.id(),
        "checks": checks,
        "failures": failures,
        "status": if failures == 0 { "pass" } else { "fail" },
    }));

    for line in &lines {
        writeln!(out, "{line}").map_err(|e| Error::domain(format!("cannot write report: {e}")))?;
    }
    Ok(first_failure)
}

fn json_err(e: serde_json::Error) -> Error {
    Error::internal(format!("report serialization failed: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_sweep_passes_and_reports_every_kind() {
        let config = RunConfig {
            family: Some("jacobi".into()),
            alpha: Some("0".into()),
            beta: Some("0".into()),
            lmax: Some(6),
            ..RunConfig::default()
        };
        let mut buf = Vec::new();
        let failure = run(&config, &mut buf).unwrap();
        assert!(failure.is_none());
        let text = String::from_utf8(buf).unwrap();
        let kinds: Vec<String> = text
            .lines()
            .map(|line| {
                serde_json::from_str::<Value>(line).unwrap()["check"]
                    .as_str()
                    .unwrap()
                    .to_string()
            })
            .collect();
        for kind in ["meta", "ladder", "orthogonality", "norm_ladder", "commutator", "algebra", "summary"] {
            assert!(kinds.iter().any(|k| k == kind), "missing {kind}");
        }
        assert_eq!(kinds.first().map(String::as_str), Some("meta"));
        assert_eq!(kinds.last().map(String::as_str), Some("summary"));
    }

    #[test]
    fn hermite_sweep_is_clean() {
        let config = RunConfig {
            family: Some("hermite".into()),
            lmax: Some(8),
            ..RunConfig::default()
        };
        let mut buf = Vec::new();
        assert!(run(&config, &mut buf).unwrap().is_none());
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("heisenberg-weyl"));
        assert!(!text.contains("\"fail\""));
    }
}
