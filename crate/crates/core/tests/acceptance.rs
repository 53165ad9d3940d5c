//! Acceptance suite: one test per criterion of the built-in verification
//! matrix. Every comparison is an exact set equality or boolean claim; the
//! only tunables are the pinned search bounds and seeds below, which match
//! the defaults the command-line `corpus` run uses.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see one
//! pass/fail line per criterion.

use amalg_core::corpus::{self, CheckResult, Verdict};

const SEED: u64 = 0;
const EXACT_SAMPLE_BOUND: i64 = 50;
const WITNESS_SEARCH_BOUND: u64 = 20;
const LIFT_LISTS_PER_INSTANCE: usize = 20;

fn gate(number: u8, name: &str, result: &CheckResult) {
    let ok = result.verdict == Verdict::Pass;
    println!(
        "[acceptance] criterion {number} ({name}): {}",
        if ok { "PASS" } else { "FAIL" }
    );
    if !ok {
        for line in &result.details {
            println!("    {line}");
        }
    }
    assert!(ok, "criterion {number} ({name}) failed");
}

#[test]
fn criterion_01_zero_divisor_formula_finite_corpus() {
    let result = corpus::check_formula_corpus().unwrap();
    gate(1, "zero-divisor formula, finite corpus", &result);
}

#[test]
fn criterion_02_zero_divisor_formula_exact_torsion() {
    let result = corpus::check_exact_formula(EXACT_SAMPLE_BOUND).unwrap();
    gate(2, "zero-divisor formula, exact torsion instances", &result);
}

#[test]
fn criterion_03_locality_transfer_and_max_spectrum() {
    let result = corpus::check_locality_corpus().unwrap();
    gate(3, "locality biconditional", &result);
    let spectrum = corpus::check_max_spectrum_corpus().unwrap();
    gate(3, "maximal-spectrum pattern", &spectrum);
}

#[test]
fn criterion_04_two_stage_duplication_end_to_end() {
    let result = corpus::check_two_stage().unwrap();
    gate(4, "two-stage duplication of Z/8 along (2)", &result);
}

#[test]
fn criterion_05_duplication_transfer_grid() {
    let condition = corpus::check_scaling_condition_grid(WITNESS_SEARCH_BOUND).unwrap();
    gate(5, "scaling condition over the (p,k) grid", &condition);
    let transfer = corpus::check_duplication_grid(WITNESS_SEARCH_BOUND).unwrap();
    gate(5, "witness/condition consistency incl. zero-ideal sentinel", &transfer);
}

#[test]
fn criterion_06_property_hierarchy_over_ring_corpus() {
    let result = corpus::check_hierarchy_corpus().unwrap();
    gate(6, "arithmetical ⇒ Gaussian ⇒ Prüfer over the corpus", &result);
}

#[test]
fn criterion_07_gaussian_decider_vs_content_oracle() {
    let result = corpus::check_oracle_corpus(SEED).unwrap();
    gate(7, "content oracle sound against the pair-criterion decider", &result);
}

#[test]
fn criterion_08_content_lifting_consistency() {
    let result = corpus::check_lift_corpus(SEED, LIFT_LISTS_PER_INSTANCE).unwrap();
    gate(8, "lifted-to-base bounded-Gaussian implication", &result);
}

#[test]
fn criterion_09_quotient_isomorphism() {
    let result = corpus::check_quotient_iso_corpus().unwrap();
    gate(9, "base ring recovered as amalgam mod {0}×J", &result);
}

#[test]
fn criterion_10_idealization_instance() {
    let result = corpus::check_idealization().unwrap();
    gate(10, "idealization embedding claims at p = 2, 3", &result);
}
