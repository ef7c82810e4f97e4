use qdouble_core::braiding::Braiding;
use qdouble_core::heckerep::Partition;
use qdouble_core::report::VerificationReport;
use qdouble_core::suites::{
    braiding_checks, conjecture_checks, guard_checks, heckerep_checks, orbit_checks, spectrum_checks, weyl_rank_checks,
};
use qdouble_core::{Field, Rat, Scalar};

fn report(name: &str, records: Vec<qdouble_core::report::CheckRecord>) -> VerificationReport {
    let mut r = VerificationReport::new(name);
    for x in records {
        r.push(x);
    }
    r
}

#[test]
fn guard_passes_and_records_characters() {
    let r = Braiding::standard_hecke(2, Scalar::q()).unwrap();
    let rep = report("guard", guard_checks(&r, 3));
    assert!(rep.passed());
    // Trace property plus λ ⊢ 1, 2, 3 with at most two rows.
    assert_eq!(rep.records.len(), 1 + 1 + 2 + 2);
    assert!(rep.records[1..].iter().all(|x| x.values[0].0 == "chi"));
}

#[test]
fn spectrum_for_a_single_partition() {
    let r = Braiding::standard_hecke(3, Scalar::q()).unwrap();
    let lambda = Partition::new(vec![2, 1]);
    let recs = spectrum_checks(&r, 3, Some(&lambda));
    assert_eq!(recs.len(), 1);
    assert!(recs[0].passed);
    assert_eq!(recs[0].id, "spectrum/N=3/lambda=(2,1)");
}

#[test]
fn sampled_spectrum_agrees_with_the_evaluated_character() {
    let q = Rat::new(-4, 3);
    let exact = spectrum_checks(&Braiding::standard_hecke(2, Scalar::q()).unwrap(), 2, None);
    let sampled = spectrum_checks(&Braiding::standard_hecke(2, q.clone()).unwrap(), 2, None);
    assert_eq!(exact.len(), sampled.len());
    for (e, s) in exact.iter().zip(&sampled) {
        assert!(e.passed && s.passed);
        assert_eq!(e.id, s.id);
    }
}

#[test]
fn heckerep_and_weyl_records_pass() {
    let r = Braiding::standard_hecke(2, Scalar::q()).unwrap();
    let rep = report("heckerep", heckerep_checks(&r, 3));
    assert!(rep.passed());
    assert_eq!(rep.records.len(), 3 * 4 + 1);
    let weyl = weyl_rank_checks(2, 3);
    assert!(weyl.iter().all(|x| x.passed));
}

#[test]
fn braiding_records_pass_at_q_equal_one() {
    // At q = 1 the standard braiding is the flip.
    let r = Braiding::standard_hecke(2, Rat::one()).unwrap();
    assert!(braiding_checks(&r).iter().all(|x| x.passed));
}

#[test]
fn conjecture_records_are_marked() {
    let r = Braiding::standard_hecke(2, Scalar::q()).unwrap();
    let rep = report("conjecture", conjecture_checks(&r, 4, 2));
    assert!(rep.records.iter().all(|x| x.conjecture));
    assert_eq!(rep.hard_failures().count(), 0);
    assert_eq!(rep.conjecture_failures().count(), 0);
}

#[test]
fn orbit_dimension_matches_the_flip() {
    let r = Braiding::standard_hecke(2, Scalar::q()).unwrap();
    let recs = orbit_checks(&r, &[Scalar::from_i64(1), Scalar::from_i64(5)], 2);
    assert!(recs.iter().all(|x| x.passed));
    assert_eq!(recs[0].values[0], (String::from("dimension"), String::from("9")));
}
