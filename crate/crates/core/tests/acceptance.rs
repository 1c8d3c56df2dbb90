//! Acceptance suite: one test per criterion, each printing a PASS line and
//! holding its runtime budget. Run with `--nocapture` to see the lines.

mod common;

use quadcheck::conjecture::{batch_suite, BatchReport, SuiteConfig, Verdict};
use quadcheck::maxclass::{catalog, profile, Family};
use quadcheck::modrep::Representation;
use quadcheck::offender::{best_offenders, enumerate_ea, timmesfeld_replace};
use quadcheck::pcgroup::{Caps, Element, PcGroup, Subgroup};
use rand::{Rng, SeedableRng};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

fn caps() -> Caps {
    Caps::default()
}

fn default_report() -> &'static BatchReport {
    static REPORT: OnceLock<BatchReport> = OnceLock::new();
    REPORT.get_or_init(|| {
        let config = SuiteConfig::default_suite(3, 6, 42);
        batch_suite(&config).expect("default suite runs")
    })
}

fn budget(start: Instant, limit: Duration, what: &str) {
    let elapsed = start.elapsed();
    assert!(elapsed < limit, "{what} took {elapsed:?}, budget {limit:?}");
}

#[test]
fn criterion_01_engine_matches_naive_oracle() {
    let start = Instant::now();
    let g = catalog(Family::Heisenberg, 3, 3, &caps()).unwrap().group;
    let pres = g.presentation();
    let elems: Vec<Element> = g.elements().collect();
    for a in &elems {
        for b in &elems {
            assert_eq!(g.mul(a, b).0, common::mul_naive(pres, &a.0, &b.0));
        }
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
    let mut groups =
        vec![g, catalog(Family::Wreath, 3, 4, &caps()).unwrap().group];
    for n in 3..=6 {
        groups.push(catalog(Family::Padic, 3, n, &caps()).unwrap().group);
    }
    for g in &groups {
        let elems: Vec<Element> = g.elements().collect();
        for _ in 0..1000 {
            let u = &elems[rng.gen_range(0..elems.len())];
            let v = &elems[rng.gen_range(0..elems.len())];
            let w = &elems[rng.gen_range(0..elems.len())];
            assert_eq!(g.mul(&g.mul(u, v), w), g.mul(u, &g.mul(v, w)));
            assert!(g.mul(u, &g.inv(u)).is_identity());
        }
    }
    budget(start, Duration::from_secs(10), "criterion 1");
    println!("ACCEPTANCE 01 PASS: 27x27 table equals the naive oracle; 1000 random triples associate in every catalog group up to 3^6");
}

#[test]
fn criterion_02_maximal_class_invariants() {
    let start = Instant::now();
    for n in 4..=7u32 {
        let cg = catalog(Family::Padic, 3, n, &caps()).unwrap();
        let prof = profile(&cg.group, &caps()).unwrap();
        assert!(prof.is_maximal_class, "n = {n}");
        assert_eq!(prof.class, n - 1, "n = {n}");
        for (idx, term) in prof.series.lower.iter().enumerate().skip(1) {
            let i = (idx + 1) as u32;
            if i <= n {
                assert_eq!(term.order(), 3u64.pow(n - i), "n = {n}, lcs_{i}");
            }
        }
        assert!(prof.g1_abelian, "n = {n}");
        assert_eq!(prof.degree_of_commutativity, Some(n - 3), "n = {n}");
        assert!(!prof.exceptional, "n = {n}");
        assert_eq!(
            prof.degree_of_commutativity.unwrap() > 0,
            !prof.exceptional || n < 5,
            "n = {n}: positivity vs exceptionality"
        );
        if n >= 5 {
            assert_eq!(prof.degree_of_commutativity.unwrap() > 0, !prof.exceptional);
        }
    }
    budget(start, Duration::from_secs(120), "criterion 2");
    println!("ACCEPTANCE 02 PASS: padic(3,n) for n in 4..=7 has class n-1, |lcs_i| = 3^(n-i), degree of commutativity n-3, and positivity matches non-exceptionality");
}

#[test]
fn criterion_03_omega1_of_g1_is_a_series_term() {
    for n in 5..=7u32 {
        let cg = catalog(Family::Padic, 3, n, &caps()).unwrap();
        let prof = profile(&cg.group, &caps()).unwrap();
        let expected = prof.series.lower_term(&cg.group, (n - 2) as usize);
        assert_eq!(prof.omega1_g1, expected, "n = {n}");
    }
    println!("ACCEPTANCE 03 PASS: Omega_1(G_1) equals G_(n-p+1) exactly for p = 3, n in 5..=7");
}

#[test]
fn criterion_04_offender_analytics_match_bruteforce() {
    let start = Instant::now();
    let cg = catalog(Family::Heisenberg, 3, 3, &caps()).unwrap();
    let g = &cg.group;
    let rho = Representation::natural_unitriangular(&cg).unwrap();

    let oracle = common::offender_oracle(g, &rho, &caps());
    let poset = enumerate_ea(g, &caps()).unwrap();
    let report = best_offenders(g, &poset, &rho, &caps()).unwrap();

    assert_eq!(oracle.len(), poset.members.len(), "poset size");
    for brute in &oracle {
        let idx = poset
            .members
            .iter()
            .position(|m| *m == brute.subgroup)
            .expect("oracle member in poset");
        assert_eq!(report.j_exponents[idx].exponent, brute.j_exponent);
        assert_eq!(poset.ranks[idx], brute.rank, "rank");
        let engine_entry = report.offenders.iter().find(|e| e.member == idx);
        assert_eq!(engine_entry.is_some(), brute.j_exponent >= 0, "offender status");
        if let Some(e) = engine_entry {
            assert_eq!(e.best, brute.best, "best-offender status");
        }
    }
    let brute_j0 = oracle.iter().filter(|b| b.j_exponent >= 0).map(|b| b.j_exponent).max();
    assert_eq!(report.j0, brute_j0);
    assert_eq!(report.j0, Some(1));
    budget(start, Duration::from_secs(5), "criterion 4");
    println!("ACCEPTANCE 04 PASS: offender list, j-exponents, best offenders and j0 = p^1 match the all-subgroups all-vectors oracle");
}

#[test]
fn criterion_05_replacement_succeeds_on_every_fmodule() {
    let report = default_report();
    let mut fmodules = 0;
    for inst in &report.instances {
        for check in &inst.checks {
            assert!(
                !matches!(check.verdict, Verdict::InternalInconsistency { .. }),
                "{} {:?} {}: internal inconsistency",
                inst.group,
                inst.module,
                check.name
            );
        }
        if inst.fmodule == Some(true) {
            fmodules += 1;
            let replacement = inst
                .checks
                .iter()
                .find(|c| c.name == "replacement")
                .expect("replacement check present");
            match &replacement.verdict {
                Verdict::Witness { detail, .. } => {
                    assert!(detail.contains("refinement"), "{detail}");
                }
                v => panic!("replacement on an F-module must pass, got {v:?}"),
            }
        }
    }
    assert!(fmodules >= 3, "expected at least the three natural modules, got {fmodules}");
    // j-preservation spelled out on the heisenberg instance
    let cg = catalog(Family::Heisenberg, 3, 3, &caps()).unwrap();
    let rho = Representation::natural_unitriangular(&cg).unwrap();
    let poset = enumerate_ea(&cg.group, &caps()).unwrap();
    let rep = best_offenders(&cg.group, &poset, &rho, &caps()).unwrap();
    for e in rep.best_members() {
        let f = timmesfeld_replace(&poset, &rep, e, &rho).unwrap();
        assert_eq!(rep.j_exponents[f].exponent, rep.j_exponents[e].exponent);
    }
    println!("ACCEPTANCE 05 PASS: quadratic replacement with equal j-exponent and a weakly closed quadratic offender at j0 (with normal-closure refinement) on all {fmodules} F-modules; zero internal inconsistencies");
}

#[test]
fn criterion_06_default_suite_has_witnesses_and_no_counterexamples() {
    let start = Instant::now();
    let report = default_report();
    let mut witnesses = 0;
    for inst in &report.instances {
        for check in &inst.checks {
            if check.name == "quadratic" || check.name == "oliver" {
                assert!(
                    !check.verdict.is_failure(),
                    "{} {:?}: {} failed",
                    inst.group,
                    inst.module,
                    check.name
                );
            }
        }
        if inst.faithful == Some(true) && inst.fmodule == Some(true) {
            assert_eq!(
                inst.conjecture_status.as_deref(),
                Some("witness"),
                "{} {:?}",
                inst.group,
                inst.module
            );
            witnesses += 1;
        }
        // p = 3: the two checkers coincide
        let quad = inst.checks.iter().find(|c| c.name == "quadratic");
        let oliver = inst.checks.iter().find(|c| c.name == "oliver");
        if let (Some(q), Some(o)) = (quad, oliver) {
            assert_eq!(q.verdict.status_name(), o.verdict.status_name());
        }
    }
    assert!(witnesses >= 3);
    assert_eq!(report.summary.failures, 0);
    budget(start, Duration::from_secs(30 * 60), "criterion 6");
    println!("ACCEPTANCE 06 PASS: default p=3 suite (n <= 6; regular, maximal-subgroup permutation and natural modules) has zero counterexamples and a witness on each of the {witnesses} faithful F-modules");
}

#[test]
fn criterion_07_pair_identities_hold() {
    // exhaustive instance: all 81 coefficient tuples on the heisenberg module
    let report = default_report();
    let mut exhaustive_seen = false;
    for inst in &report.instances {
        if let Some(check) = inst.checks.iter().find(|c| c.name == "quadratic-pairs") {
            assert!(
                !check.verdict.is_failure(),
                "{} {:?}: pair identity failed: {:?}",
                inst.group,
                inst.module,
                check.verdict
            );
            if let Verdict::Witness { detail, .. } = &check.verdict {
                if detail.contains("exhaustive") {
                    exhaustive_seen = true;
                }
            }
        }
    }
    assert!(exhaustive_seen, "at least one instance must check all pairs and tuples");
    println!("ACCEPTANCE 07 PASS: coefficient law (il+jk) over all tuples on exhaustive instances and [v,e,e] = -4[v,a,d] across the suite, zero failures");
}

#[test]
fn criterion_08_commutator_quotient_invariants() {
    for n in 3..=6u32 {
        let cg = catalog(Family::Padic, 3, n, &caps()).unwrap();
        match quadcheck::conjecture::commutator_quotient_suite(&cg.group, &caps()).unwrap() {
            Verdict::Witness { detail, .. } => {
                assert!(detail.contains("pairs verified"), "n = {n}: {detail}")
            }
            v => panic!("n = {n}: expected verified pairs, got {v:?}"),
        }
    }
    println!("ACCEPTANCE 08 PASS: [B,G] and B/(B meet Z(G)) have equal abelian invariants for every normal B inside the abelian maximal subgroup of padic(3,n), n <= 6");
}

#[test]
fn criterion_09_structure_suites_report_zero_failures() {
    let report = default_report();
    let suite_names = [
        "offender-order-bounds",
        "second-center-quadratic-free",
        "weakly-closed-action",
        "low-class-fmodule",
        "abelian-normal-offender-free",
        "offenders-move-derived",
        "closure-splitting-center",
    ];
    let mut vacuous = 0;
    let mut verified = 0;
    for inst in &report.instances {
        for check in &inst.checks {
            if suite_names.contains(&check.name.as_str()) {
                assert!(
                    !check.verdict.is_failure(),
                    "{} {:?} {}: {:?}",
                    inst.group,
                    inst.module,
                    check.name,
                    check.verdict
                );
                match check.verdict {
                    Verdict::Vacuous { .. } => vacuous += 1,
                    Verdict::Witness { .. } => verified += 1,
                    _ => {}
                }
            }
        }
    }
    assert!(vacuous > 0, "vacuous outcomes must be tallied, not hidden");
    assert!(verified > 0, "some hypotheses must actually fire");
    assert!(report.summary.vacuous as usize >= vacuous);
    println!("ACCEPTANCE 09 PASS: structural suites report zero conclusion failures ({verified} verified, {vacuous} vacuous outcomes tallied)");
}

#[test]
fn criterion_10_default_suite_is_byte_deterministic() {
    let first = default_report().to_json_string();
    let config = SuiteConfig::default_suite(3, 6, 42);
    let second = batch_suite(&config).unwrap().to_json_string();
    assert_eq!(first, second, "same seed must give byte-identical JSON");
    println!("ACCEPTANCE 10 PASS: two runs of the default suite with seed 42 produce byte-identical JSON ({} bytes)", first.len());
}

#[test]
fn acceptance_smoke_group_count() {
    // the default suite covers heisenberg, wreath and padic(3, 3..=6)
    let report = default_report();
    let groups: std::collections::BTreeSet<&str> =
        report.instances.iter().map(|i| i.group.as_str()).collect();
    assert_eq!(groups.len(), 6);
    let g = PcGroup::parse_validate("3 2").unwrap().0;
    assert_eq!(Subgroup::full(&g, &caps()).unwrap().order(), 9);
}
