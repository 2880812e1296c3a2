use ehyper::acceptance::{run_criterion, Mutation, SuiteOptions};

fn mutated() -> SuiteOptions {
    SuiteOptions {
        mutate: Some(Mutation::SwapExtrema),
        ..SuiteOptions::default()
    }
}

#[test]
fn swapped_extrema_break_pattern_determination() {
    let r = run_criterion(2, &mutated());
    assert!(!r.passed, "{}", r.line());
}

#[test]
fn swapped_extrema_break_clique_agreement() {
    let r = run_criterion(10, &mutated());
    assert!(!r.passed, "{}", r.line());
}

#[test]
fn mutation_leaves_other_criteria_alone() {
    for id in [1, 3] {
        let r = run_criterion(id, &mutated());
        assert!(r.passed, "{}", r.line());
    }
}
