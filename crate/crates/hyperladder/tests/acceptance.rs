//! Release gate: one test per criterion, each printing a pass/fail line.

use hyperladder::acceptance;
use hyperladder::acceptance::CriterionOutcome;

fn assert_criterion(outcome: CriterionOutcome) {
    let status = if outcome.passed { "PASS" } else { "FAIL" };
    println!(
        "acceptance {} ({}): {} ({})",
        outcome.number, outcome.name, status, outcome.detail
    );
    assert!(
        outcome.passed,
        "criterion {} ({}) failed: {}",
        outcome.number, outcome.name, outcome.detail
    );
}

#[test]
fn acceptance_1_exact_factorization() {
    assert_criterion(acceptance::criterion_1().unwrap());
}

#[test]
fn acceptance_2_shape_invariance() {
    assert_criterion(acceptance::criterion_2().unwrap());
}

#[test]
fn acceptance_3_orthogonality_and_norm_ladder() {
    assert_criterion(acceptance::criterion_3().unwrap());
}

#[test]
fn acceptance_4_operator_algebra() {
    assert_criterion(acceptance::criterion_4().unwrap());
}

#[test]
fn acceptance_5_poschl_teller_reproduction() {
    assert_criterion(acceptance::criterion_5().unwrap());
}

#[test]
fn acceptance_6_spectral_oracle() {
    assert_criterion(acceptance::criterion_6().unwrap());
}

#[test]
fn acceptance_7_coherent_states() {
    assert_criterion(acceptance::criterion_7().unwrap());
}

#[test]
fn acceptance_8_riccati_partner_consistency() {
    assert_criterion(acceptance::criterion_8().unwrap());
}
