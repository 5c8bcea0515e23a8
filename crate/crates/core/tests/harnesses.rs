use hookgame::closedforms::{verify, PredictionReport, TheoremId, VerifyRange};
use hookgame::Error;

#[test]
fn every_harness_passes_on_its_default_range() {
    for id in TheoremId::ALL {
        let report = verify(id, VerifyRange::default()).unwrap();
        assert!(report.passed(), "{id}: {:?}", &report.mismatches[..report.mismatches.len().min(5)]);
        assert!(report.checked > 0, "{id} checked nothing");
    }
}

#[test]
fn single_board_widening() {
    let report = verify(TheoremId::IsoE, VerifyRange { m: Some(2), n: Some(4) }).unwrap();
    assert!(report.passed());
    assert_eq!(report.range, "2x4 -> 2x5");
}

#[test]
fn reports_round_trip_through_json() {
    let report = verify(TheoremId::Nim, VerifyRange { m: None, n: Some(4) }).unwrap();
    let text = serde_json::to_string(&report).unwrap();
    let back: PredictionReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, report);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["checked"], 16);
    assert_eq!(value["mismatches"], serde_json::json!([]));
}

#[test]
fn bounds_are_named_in_refusals() {
    match verify(TheoremId::Symmetry, VerifyRange { m: None, n: Some(9) }) {
        Err(Error::RangeTooLarge { bound, .. }) => assert_eq!(bound, 8),
        other => panic!("unexpected {other:?}"),
    }
}
