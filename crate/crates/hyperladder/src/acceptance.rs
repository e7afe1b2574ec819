//! The eight release criteria behind both `cargo test --test acceptance`
//! and the command line `acceptance` subcommand: fixed family matrix,
//! fixed tolerances, one outcome per criterion.

use std::f64::consts::PI;
use std::time::Instant;

use num_complex::Complex64;
use serde::Serialize;

use crate::coherent::{coherent_state, eigen_residual};
use crate::error::Result;
use crate::family::{FamilyName, FamilySpec};
use crate::hilbert::{classify_algebra, commutator_checks, AlgebraClass, HilbertSpace};
use crate::ladder::{
    factorization_check, hamiltonian_check, intertwining_check, lowering_check, raising_check,
    three_term_check,
};
use crate::rational::Rational;
use crate::schrodinger::numerov::numerov_eigenvalues;
use crate::schrodinger::{
    change_of_variable, default_sign, poschl_teller_potential, poschl_teller_superpotential,
    potential, riccati_partner_dev, superpotential, uniform_grid,
};

/// Result of one criterion: `detail` names the margin on a pass and the
/// first offender on a fail.
#[derive(Clone, Debug, Serialize)]
pub struct CriterionOutcome {
    pub number: u8,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CriterionOutcome {
    fn pass(number: u8, name: &str, detail: String) -> Self {
        CriterionOutcome {
            number,
            name: name.to_string(),
            passed: true,
            detail,
        }
    }

    fn fail(number: u8, name: &str, detail: String) -> Self {
        CriterionOutcome {
            number,
            name: name.to_string(),
            passed: false,
            detail,
        }
    }
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// The parameter matrix every sweep runs over.
pub fn family_matrix() -> Vec<FamilySpec> {
    let vals = [q(0, 1), q(1, 2), q(3, 2)];
    let mut fams = Vec::new();
    for a in &vals {
        for b in &vals {
            fams.push(FamilySpec::jacobi(a.clone(), b.clone()).unwrap());
        }
    }
    fams.push(FamilySpec::hypergeometric(q(0, 1), q(0, 1)).unwrap());
    fams.push(FamilySpec::hypergeometric(q(1, 2), q(1, 2)).unwrap());
    for a in [q(0, 1), q(1, 1), q(5, 2)] {
        fams.push(FamilySpec::laguerre(a).unwrap());
    }
    fams.push(FamilySpec::hermite().unwrap());
    fams
}

/// Criterion 1: every ladder identity holds with exactly zero rational
/// residual over the matrix, l <= 15.
pub fn criterion_1() -> Result<CriterionOutcome> {
    const NAME: &str = "exact factorization";
    let mut checks = 0usize;
    for family in family_matrix() {
        for l in 0..=15usize {
            for m in 0..=l {
                let mut reports = vec![hamiltonian_check(&family, l, m)?];
                if m < l {
                    reports.push(raising_check(&family, l, m)?);
                    reports.push(factorization_check(&family, l, m)?);
                    reports.push(intertwining_check(&family, l, m)?);
                }
                if m >= 1 {
                    reports.push(lowering_check(&family, l, m)?);
                }
                if m >= 1 && m < l {
                    reports.push(three_term_check(&family, l, m)?);
                }
                for rep in reports {
                    if !rep.passed() {
                        return Ok(CriterionOutcome::fail(
                            1,
                            NAME,
                            format!(
                                "{} {} l={l} m={m} residual {}",
                                family.id(),
                                rep.identity,
                                rep.residual
                            ),
                        ));
                    }
                    checks += 1;
                }
            }
        }
    }
    Ok(CriterionOutcome::pass(
        1,
        NAME,
        format!("{checks} identities, zero residual"),
    ))
}

/// Criterion 2: sector shifts match `-m sigma'' - tau'` and telescope to
/// `lambda_l`, exactly, l and m up to 40.
pub fn criterion_2() -> Result<CriterionOutcome> {
    const NAME: &str = "shape invariance";
    for family in family_matrix() {
        let spp = family.sigma_pp();
        let tp = family.tau_p();
        for m in 0..=40usize {
            let r = &family.eigenvalue(m + 1) - &family.eigenvalue(m);
            let closed = -(&(Rational::from(m) * spp.clone())) - tp.clone();
            if r != closed {
                return Ok(CriterionOutcome::fail(
                    2,
                    NAME,
                    format!("sector shift mismatch at {} m={m}", family.id()),
                ));
            }
        }
        let mut telescoped = Rational::zero();
        for l in 1..=40usize {
            telescoped = telescoped + (&family.eigenvalue(l) - &family.eigenvalue(l - 1));
            if telescoped != family.eigenvalue(l) {
                return Ok(CriterionOutcome::fail(
                    2,
                    NAME,
                    format!("telescoping failed at {} l={l}", family.id()),
                ));
            }
        }
    }
    Ok(CriterionOutcome::pass(
        2,
        NAME,
        "sector shifts exact to l, m = 40".to_string(),
    ))
}

/// Criterion 3: normalized off-diagonal inner products below 1e-11 and the
/// norm ladder within 1e-10 relative, l <= 15, m <= 10.
pub fn criterion_3() -> Result<CriterionOutcome> {
    const NAME: &str = "orthogonality and norm ladder";
    let mut worst_ortho = 0.0f64;
    let mut worst_ladder = 0.0f64;
    for family in family_matrix() {
        let space = HilbertSpace::new(family.clone());
        let ortho = space.orthogonality_max(15, 10)?;
        let ladder = space.norm_ladder_max_dev(15, 10)?;
        if ortho > 1e-11 {
            return Ok(CriterionOutcome::fail(
                3,
                NAME,
                format!("orthogonality {ortho:.2e} at {}", family.id()),
            ));
        }
        if ladder > 1e-10 {
            return Ok(CriterionOutcome::fail(
                3,
                NAME,
                format!("norm ladder {ladder:.2e} at {}", family.id()),
            ));
        }
        worst_ortho = worst_ortho.max(ortho);
        worst_ladder = worst_ladder.max(ladder);
    }
    Ok(CriterionOutcome::pass(
        3,
        NAME,
        format!("ortho {worst_ortho:.2e}, ladder {worst_ladder:.2e}"),
    ))
}

/// Criterion 4: commutator identities on basis states l <= 30 (scalars
/// exact, coefficients <= 1e-12) and the algebra classification.
pub fn criterion_4() -> Result<CriterionOutcome> {
    const NAME: &str = "operator algebra";
    for family in family_matrix() {
        for m in 0..=3usize {
            let rep = commutator_checks(&family, m, 30)?;
            if !rep.passed(1e-12) {
                return Ok(CriterionOutcome::fail(
                    4,
                    NAME,
                    format!("commutator identity failed at {} m={m}", family.id()),
                ));
            }
        }
        let class = classify_algebra(&family)?;
        let want = if family.sigma_pp().is_zero() {
            AlgebraClass::HeisenbergWeyl
        } else {
            AlgebraClass::SuOneOne
        };
        if class != want {
            return Ok(CriterionOutcome::fail(
                4,
                NAME,
                format!("misclassified {}", family.id()),
            ));
        }
    }
    Ok(CriterionOutcome::pass(
        4,
        NAME,
        "scalar identities exact, coefficients <= 1e-12".to_string(),
    ))
}

/// Criterion 5: the trigonometric closed forms of V_0 and W_0 match the
/// pipeline within 1e-10 (relative above magnitude 1) on 512 interior
/// points, (mu, eta) in {1, 3/2, 2}^2.
pub fn criterion_5() -> Result<CriterionOutcome> {
    const NAME: &str = "poschl-teller reproduction";
    let grid = uniform_grid(0.0, PI, 512);
    let mut worst = 0.0f64;
    for mu_num in [2i64, 3, 4] {
        for eta_num in [2i64, 3, 4] {
            let mu = mu_num as f64 / 2.0;
            let eta = eta_num as f64 / 2.0;
            let family = FamilySpec::jacobi(q(mu_num - 1, 2), q(eta_num - 1, 2))?;
            let cov = change_of_variable(&family, -1)?;
            let prof = potential(&cov, 0, &grid)?;
            for (x, v) in grid.iter().zip(&prof.values) {
                let closed = poschl_teller_potential(mu, eta, *x);
                let dev = (v - closed).abs() / closed.abs().max(1.0);
                let w = superpotential(&cov, 0, *x)?;
                let w_closed = poschl_teller_superpotential(mu, eta, *x);
                let wdev = (w - w_closed).abs() / w_closed.abs().max(1.0);
                if dev > 1e-10 || wdev > 1e-10 {
                    return Ok(CriterionOutcome::fail(
                        5,
                        NAME,
                        format!("mu={mu} eta={eta} x={x}: V dev {dev:.2e}, W dev {wdev:.2e}"),
                    ));
                }
                worst = worst.max(dev).max(wdev);
            }
        }
    }
    Ok(CriterionOutcome::pass(
        5,
        NAME,
        format!("max dev {worst:.2e} over 512-point grids"),
    ))
}

/// Criterion 6: Numerov levels {0, 5, 12} (trigonometric well) and
/// {0, 2, 4} (oscillator) within 1e-5 on 8001-point grids, under 10 s.
pub fn criterion_6() -> Result<CriterionOutcome> {
    const NAME: &str = "spectral oracle";
    let start = Instant::now();
    let mut worst = 0.0f64;

    let trig = FamilySpec::jacobi(q(3, 2), q(3, 2))?;
    let cov = change_of_variable(&trig, -1)?;
    let grid = uniform_grid(0.0, PI, 8001);
    let prof = potential(&cov, 0, &grid)?;
    let levels = numerov_eigenvalues(&prof, 3, Some((2e-3, PI - 2e-3)))?;
    for (e, want) in levels.iter().zip([0.0, 5.0, 12.0]) {
        let err = (e - want).abs();
        if err > 1e-5 {
            return Ok(CriterionOutcome::fail(
                6,
                NAME,
                format!("trigonometric level {e} vs {want}"),
            ));
        }
        worst = worst.max(err);
    }

    let osc = FamilySpec::hermite()?;
    let cov = change_of_variable(&osc, 1)?;
    let grid = uniform_grid(-12.0, 12.0, 8001);
    let prof = potential(&cov, 0, &grid)?;
    let levels = numerov_eigenvalues(&prof, 3, None)?;
    for (e, want) in levels.iter().zip([0.0, 2.0, 4.0]) {
        let err = (e - want).abs();
        if err > 1e-5 {
            return Ok(CriterionOutcome::fail(
                6,
                NAME,
                format!("oscillator level {e} vs {want}"),
            ));
        }
        worst = worst.max(err);
    }

    let elapsed = start.elapsed().as_secs_f64();
    if elapsed >= 10.0 {
        return Ok(CriterionOutcome::fail(
            6,
            NAME,
            format!("runtime {elapsed:.2}s"),
        ));
    }
    Ok(CriterionOutcome::pass(
        6,
        NAME,
        format!("max err {worst:.2e} in {elapsed:.2}s"),
    ))
}

/// Criterion 7: coherent states for z in {0, 1, 2+i} are unit vectors
/// within 1e-10 with eigen residual below 1e-8; the oscillator z=1
/// normalization equals e^(1/2) within 1e-10.
pub fn criterion_7() -> Result<CriterionOutcome> {
    const NAME: &str = "coherent states";
    let hermite = FamilySpec::hermite()?;
    let legendre = FamilySpec::jacobi(q(0, 1), q(0, 1))?;
    let zs = [
        Complex64::new(0.0, 0.0),
        Complex64::new(1.0, 0.0),
        Complex64::new(2.0, 1.0),
    ];
    let cases: Vec<(&FamilySpec, usize)> = vec![(&hermite, 0), (&legendre, 0), (&legendre, 1)];
    let mut worst = 0.0f64;
    for (family, m) in cases {
        for z in zs {
            let state = coherent_state(family, m, z, 1e-12)?;
            let unit = (state.coefficient_norm_sq() - 1.0).abs();
            if unit > 1e-10 {
                return Ok(CriterionOutcome::fail(
                    7,
                    NAME,
                    format!("unit norm off by {unit:.2e} at {} m={m} z={z}", family.id()),
                ));
            }
            let res = eigen_residual(&state);
            if res > 1e-8 {
                return Ok(CriterionOutcome::fail(
                    7,
                    NAME,
                    format!("residual {res:.2e} at {} m={m} z={z}", family.id()),
                ));
            }
            worst = worst.max(res);
        }
    }
    let probe = coherent_state(&hermite, 0, Complex64::new(1.0, 0.0), 1e-12)?;
    let dev = (probe.normalization_sq() - 0.5f64.exp()).abs();
    if dev > 1e-10 {
        return Ok(CriterionOutcome::fail(
            7,
            NAME,
            format!("oscillator z=1 normalization off by {dev:.2e}"),
        ));
    }
    Ok(CriterionOutcome::pass(
        7,
        NAME,
        format!("max residual {worst:.2e}"),
    ))
}

/// Criterion 8: both constructions of the partner potential agree within
/// 1e-7 for m <= 3 on the closed-form change of variable of every family.
pub fn criterion_8() -> Result<CriterionOutcome> {
    const NAME: &str = "riccati partner consistency";
    let mut worst = 0.0f64;
    for family in family_matrix() {
        let cov = change_of_variable(&family, default_sign(family.name()))?;
        let grid = match family.name() {
            FamilyName::Jacobi | FamilyName::Hypergeometric => uniform_grid(0.0, PI, 512),
            FamilyName::Laguerre => uniform_grid(0.0, 20.0, 512),
            FamilyName::Hermite => uniform_grid(-8.0, 8.0, 512),
        };
        for m in 0..=3usize {
            let dev = riccati_partner_dev(&cov, m, &grid)?;
            if dev > 1e-7 {
                return Ok(CriterionOutcome::fail(
                    8,
                    NAME,
                    format!("{} m={m}: {dev:.2e}", family.id()),
                ));
            }
            worst = worst.max(dev);
        }
    }
    Ok(CriterionOutcome::pass(
        8,
        NAME,
        format!("max dev {worst:.2e}"),
    ))
}

/// All eight criteria in order.
pub fn run_all() -> Result<Vec<CriterionOutcome>> {
    Ok(vec![
        criterion_1()?,
        criterion_2()?,
        criterion_3()?,
        criterion_4()?,
        criterion_5()?,
        criterion_6()?,
        criterion_7()?,
        criterion_8()?,
    ])
}
