use diperfect_core::harness::{validate_theorem, TheoremClass};
use diperfect_core::Mode;

fn assert_clean(class: TheoremClass, n: usize, mode: Mode, samples: Option<usize>) {
    let r = validate_theorem(class, n, mode, samples, 42).unwrap();
    assert!(r.members > 0, "{class} n={n} {mode}: no members");
    assert!(
        r.failures.is_empty(),
        "{class} n={n} {mode}: {:#?}",
        &r.failures[..r.failures.len().min(3)]
    );
}

#[test]
fn every_class_sampled_at_six() {
    for class in TheoremClass::ALL {
        for mode in [Mode::Alpha, Mode::Be] {
            assert_clean(class, 6, mode, Some(60));
        }
    }
}

#[test]
fn every_class_exhaustive_at_four() {
    for class in TheoremClass::ALL {
        for mode in [Mode::Alpha, Mode::Be] {
            let r = validate_theorem(class, 4, mode, None, 0).unwrap();
            assert!(r.failures.is_empty(), "{class} {mode}: {:#?}", r.failures);
        }
    }
}

#[test]
fn odd_cycles_sampled() {
    for n in [5, 7, 9] {
        for mode in [Mode::Alpha, Mode::Be] {
            assert_clean(TheoremClass::Cycle, n, mode, Some(100));
        }
    }
}

#[test]
fn three_disjoint_lonely_arcs_at_seven() {
    assert_clean(TheoremClass::SemiSymmetric3, 7, Mode::Be, Some(100));
}
