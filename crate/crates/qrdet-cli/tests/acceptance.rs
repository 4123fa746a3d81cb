//! The acceptance suite as a test target: one test per criterion, each
//! printing its pass/fail line (visible with `--nocapture`) and asserting
//! the verdict. `qrdet selftest` runs the same criteria from the CLI.

use qrdet_cli::selftest::{
    criterion_1, criterion_10, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
    criterion_7, criterion_8, criterion_9, CriterionOutcome,
};
use qrdet_cli::CliError;

fn jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn assert_criterion(result: Result<CriterionOutcome, CliError>) {
    let outcome = result.expect("criterion ran");
    println!("{}", outcome.line());
    assert!(outcome.passed, "{}", outcome.line());
}

#[test]
fn criterion_01_thm11_divisibility_sweep() {
    assert_criterion(criterion_1(jobs()));
}

#[test]
fn criterion_02_remark11_fixture() {
    assert_criterion(criterion_2(jobs()));
}

#[test]
fn criterion_03_thm12_integrality_divisibility_signs() {
    assert_criterion(criterion_3(jobs()));
}

#[test]
fn criterion_04_thm31_oracle_equivalence() {
    assert_criterion(criterion_4(jobs()));
}

#[test]
fn criterion_05_eqp_equivalence_and_monomial_case() {
    assert_criterion(criterion_5(jobs()));
}

#[test]
fn criterion_06_thm13_symbol_table() {
    assert_criterion(criterion_6(jobs()));
}

#[test]
fn criterion_07_power_sum_and_half_factorial_lemmas() {
    assert_criterion(criterion_7(jobs()));
}

#[test]
fn criterion_08_proof_congruence() {
    assert_criterion(criterion_8(jobs()));
}

#[test]
fn criterion_09_s0_dichotomy() {
    assert_criterion(criterion_9(jobs()));
}

#[test]
fn criterion_10_report_determinism_across_worker_counts() {
    assert_criterion(criterion_10(jobs()));
}
