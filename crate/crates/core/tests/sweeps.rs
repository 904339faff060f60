use diperfect::constructive::{theorem4_decide, verify_theorem4, SweepMode, TraceStep};
use diperfect::diperfection::check_theorem3;
use diperfect::explorer::{explore, Filter, Space};
use diperfect::generators::{gen_dvec, LabeledCoc};

#[test]
fn theorem4_sampled_sweeps_k4_k5() {
    for (k, count) in [(4, 400), (5, 40)] {
        let r = verify_theorem4(k, SweepMode::Sampled { seed: 9, count }, 0).unwrap();
        assert_eq!(r.instances, count as u64);
        assert_eq!(r.discrepancy_count, 0, "{:?}", r.discrepancies);
        assert_eq!(r.fallback_instances, 0);
    }
}

#[test]
fn sweeps_do_not_depend_on_thread_count() {
    let mode = SweepMode::Sampled {
        seed: 4,
        count: 300,
    };
    let mut a = verify_theorem4(3, mode, 1).unwrap();
    let mut b = verify_theorem4(3, mode, 3).unwrap();
    a.elapsed_ms = 0;
    b.elapsed_ms = 0;
    assert_eq!(a, b);
}

#[test]
fn dvec_trace_descends_to_base_case() {
    for k in 2..=5 {
        let d = gen_dvec(k).unwrap();
        let out = theorem4_decide(&d).unwrap();
        assert_eq!(
            out.isomorphism(),
            Some(&(0..2 * k + 1).collect::<Vec<_>>()[..])
        );
        assert!(out.verify(&d));
        assert_eq!(out.fallback_count(), 0);
        if k > 2 {
            assert!(out.trace.contains(&TraceStep::AllForward { k }));
        }
        let conv: LabeledCoc = d.converse();
        let out = theorem4_decide(&conv).unwrap();
        assert_eq!(
            out.isomorphism(),
            Some(&(0..2 * k + 1).rev().collect::<Vec<_>>()[..])
        );
        assert!(out.verify(&conv));
    }
}

#[test]
fn outcomes_serialise() {
    let d = gen_dvec(3).unwrap();
    let out = theorem4_decide(&d).unwrap();
    let json = serde_json::to_string(&out).unwrap();
    assert_eq!(
        serde_json::from_str::<diperfect::constructive::Theorem4Outcome>(&json).unwrap(),
        out
    );
}

#[test]
fn theorem3_on_c7_orientations() {
    let r = check_theorem3(3, true).unwrap();
    assert_eq!(r.instances, 128);
    assert!(r.discrepancies.is_empty(), "{:?}", r.discrepancies);
    assert_eq!(r.anti_directed, r.not_alpha_diperfect);
}

#[test]
fn exploration_is_deterministic() {
    let run = |threads| explore(Space::Random { n: 6 }, &Filter::ALL, 42, 120, threads).unwrap();
    let a = run(1);
    assert_eq!(a, run(2));
    assert_eq!(a.generated, 120);
    assert_eq!(a.filtered + a.checked, 120);
    assert!(a.hits.is_empty());
}
