use proptest::prelude::*;
use serde_json::{json, Map, Value};
use trigva_core::fock::Trunc;
use trigva_core::suite::{
    emit_report, parse_report, run_suite, CheckRecord, Fault, Format, Report, Status, Suite,
    SuiteConfig,
};

/// Small parameters so every suite runs in a few seconds.
fn small() -> SuiteConfig {
    SuiteConfig {
        jacobi_triples: 40,
        r#box: 2,
        trunc: Trunc { k: 6, d: 6, n: 4 },
        tensor_trunc: Trunc { k: 4, d: 4, n: 4 },
        fock_alpha_bound: 1,
        fock_window: 1,
        ope_alpha_bound: 2,
        r_bound: 1,
        r_modes: (-1, 2),
        r_degree: 2,
        timing: false,
        ..SuiteConfig::default()
    }
}

#[test]
fn every_fault_breaks_its_suite() {
    for fault in Fault::ALL {
        let clean = run_suite(&small(), fault.target()).unwrap();
        assert!(
            clean.all_passed(),
            "{} fails without faults",
            fault.target()
        );
        let c = SuiteConfig {
            perturb: Some(fault),
            ..small()
        };
        let r = run_suite(&c, fault.target()).unwrap();
        let fails: Vec<&CheckRecord> = r
            .records
            .iter()
            .filter(|x| x.status == Status::Fail)
            .collect();
        assert!(
            !fails.is_empty(),
            "{fault} leaves {} passing",
            fault.target()
        );
        assert!(fails.iter().all(|x| x.witness.is_some()));
        assert!(
            r.records.iter().all(|x| x.status != Status::Error),
            "{fault} caused an error"
        );
    }
}

#[test]
fn reports_are_deterministic() {
    for suite in [Suite::Jacobi, Suite::Dims, Suite::Weights] {
        let a = emit_report(&run_suite(&small(), suite).unwrap(), Format::Json);
        let b = emit_report(&run_suite(&small(), suite).unwrap(), Format::Json);
        assert_eq!(a, b);
    }
    let mut other = small();
    other.seed += 1;
    let a = run_suite(&small(), Suite::Jacobi).unwrap();
    let b = run_suite(&other, Suite::Jacobi).unwrap();
    assert_ne!(a, b, "the seed is recorded in the parameters");
}

#[test]
fn records_are_sorted_and_witnessed_iff_failing() {
    let c = SuiteConfig {
        perturb: Some(Fault::DropFactor),
        ..small()
    };
    let r = run_suite(&c, Suite::Vanish).unwrap();
    assert!(r.records.windows(2).all(|w| w[0].check_id < w[1].check_id));
    for rec in &r.records {
        assert_eq!(
            rec.witness.is_some(),
            rec.status != Status::Pass,
            "{}",
            rec.check_id
        );
        assert!(!rec.paper_anchor.is_empty());
        assert_eq!(rec.elapsed_ms, 0);
    }
}

#[test]
fn iso_suite_examples() {
    let r = run_suite(&SuiteConfig::default(), Suite::Iso).unwrap();
    assert_eq!(r.records.len(), 5);
    assert!(r.all_passed());
    let c = SuiteConfig {
        perturb: Some(Fault::CharacterSquare),
        ..SuiteConfig::default()
    };
    let r = run_suite(&c, Suite::Iso).unwrap();
    let a = r.get("iso/A").unwrap();
    assert_eq!(a.status, Status::Fail);
    assert!(a.witness.as_deref().unwrap().contains("pair"));
}

#[test]
fn invalid_configuration_is_rejected() {
    let c = SuiteConfig {
        q_specs: vec!["7/5".into(), "-1".into()],
        ..small()
    };
    assert!(run_suite(&c, Suite::Dims).is_err());
}

#[test]
fn single_pass_record_json() {
    let mut params = Map::new();
    params.insert("box".into(), json!(3));
    let r = Report::new(vec![CheckRecord {
        check_id: "iso/A".into(),
        paper_anchor: "sine algebra as covariant algebra".into(),
        params,
        status: Status::Pass,
        witness: None,
        elapsed_ms: 0,
    }]);
    let v: Value = serde_json::from_str(&emit_report(&r, Format::Json)).unwrap();
    assert_eq!(v[0]["status"], json!("pass"));
    assert_eq!(v[0]["witness"], Value::Null);
    assert_eq!(emit_report(&Report::default(), Format::Json), "[]");
}

fn record() -> impl Strategy<Value = CheckRecord> {
    (
        "[a-z-]{1,8}/[a-zA-Z0-9=,\\[\\]+-]{1,10}",
        "[ -~]{0,20}",
        prop::collection::btree_map(
            "[a-z_]{1,6}",
            prop_oneof![
                any::<i64>().prop_map(Value::from),
                "[ -~]{0,8}".prop_map(Value::from),
                any::<bool>().prop_map(Value::from),
                prop::collection::vec(-50i32..50, 0..4).prop_map(|v| json!(v)),
            ],
            0..4,
        ),
        prop_oneof![Just(Status::Pass), Just(Status::Fail), Just(Status::Error)],
        "[ -~]{1,30}",
        any::<u32>(),
    )
        .prop_map(|(id, anchor, params, status, w, ms)| CheckRecord {
            check_id: id,
            paper_anchor: anchor,
            params: params.into_iter().collect(),
            witness: (status != Status::Pass).then_some(w),
            status,
            elapsed_ms: ms as u64,
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn json_round_trip(recs in prop::collection::vec(record(), 0..6)) {
        let r = Report::new(recs);
        let text = emit_report(&r, Format::Json);
        prop_assert_eq!(parse_report(&text).unwrap(), r.clone());
        let md = emit_report(&r, Format::Markdown);
        for rec in &r.records {
            let header = format!("## {}", rec.suite());
            prop_assert!(md.contains(&header));
        }
    }
}

#[test]
fn all_covers_every_suite() {
    let r = run_suite(&small(), Suite::All).unwrap();
    assert!(r.all_passed(), "{:?}", r.failures().next());
    for s in Suite::CONCRETE {
        assert!(
            r.records.iter().any(|x| x.suite() == s.name()),
            "no records for {s}"
        );
    }
}
