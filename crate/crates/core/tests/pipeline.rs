use std::collections::BTreeMap;

use klcellkit::pipeline::golden::{DIRECT_RESIDUALS_S6, HARD_RESIDUALS_S6};
use klcellkit::pipeline::{Pipeline, PipelineReport, Status};

#[test]
fn no_residuals_below_rank_6() {
    for n in 2..=5 {
        let p = Pipeline::new(n).unwrap();
        let traces = p.scan();
        assert!(!traces.is_empty());
        assert!(p.direct_residuals(&traces).is_empty(), "n={n}");
        assert!(p.residual_cases(&traces).is_empty(), "n={n}");
        assert!(p.golden_diff(&traces).is_empty());
        assert!(traces.iter().all(|t| !t.status.is_residual()));
    }
}

#[test]
fn rank_6_residual_lists() {
    let p = Pipeline::new(6).unwrap();
    let g = p.cells().group().clone();
    let traces = p.scan();
    assert!(p.golden_diff(&traces).is_empty(), "{:?}", p.golden_diff(&traces));

    let direct: BTreeMap<String, (usize, usize)> = p
        .direct_residuals(&traces)
        .into_iter()
        .map(|c| (c.label.unwrap(), c.pair))
        .collect();
    assert_eq!(direct.len(), 13);
    for (label, x, y) in DIRECT_RESIDUALS_S6 {
        assert_eq!(direct[label], (g.parse(x).unwrap(), g.parse(y).unwrap()), "{label}");
    }

    let hard = p.residual_cases(&traces);
    assert_eq!(hard.len(), 5);
    let by_label: BTreeMap<String, _> = hard.into_iter().map(|c| (c.label.clone().unwrap(), c)).collect();
    for (label, x, y) in HARD_RESIDUALS_S6 {
        assert_eq!(
            by_label[label].pair,
            (g.parse(x).unwrap(), g.parse(y).unwrap()),
            "{label}"
        );
    }
    let kinds: Vec<(&str, &str)> = ["XIV", "XV", "XVI", "XVII", "XVIII"]
        .iter()
        .map(|&l| (l, by_label[l].status.kind()))
        .collect();
    assert_eq!(
        kinds,
        vec![
            ("XIV", "reduced_to_rank"),
            ("XV", "residual_hard"),
            ("XVI", "reduced_to_rank"),
            ("XVII", "residual_hard"),
            ("XVIII", "residual_hard"),
        ]
    );
    assert!(by_label["XVIII"].verdict.contains("XV"));
}

#[test]
fn zero_verdicts_match_exact_vanishing() {
    for n in 2..=4 {
        let p = Pipeline::new(n).unwrap();
        let order = p.cells().group().order();
        for x in 0..order {
            for y in 0..order {
                let t = p.trace(x, y);
                assert_eq!(
                    t.status == Status::Zero,
                    !p.category().theta_nonzero(x, y),
                    "n={n} ({x},{y})"
                );
            }
        }
    }
    let p = Pipeline::new(6).unwrap();
    for t in p.scan() {
        let (x, y) = t.original;
        assert_eq!(t.status == Status::Zero, !p.category().theta_nonzero(x, y));
    }
}

#[test]
fn normalization_and_duality_are_consistent() {
    for n in 2..=5 {
        let p = Pipeline::new(n).unwrap();
        let order = p.cells().group().order();
        for x in 0..order {
            for y in 0..order {
                let norm = p.normalize_pair(x, y);
                assert_eq!(p.normalize_pair(norm.0, norm.1), norm);
                let flip = p.duality_flip(x, y);
                assert_eq!(p.duality_flip(flip.0, flip.1), (x, y));
                let status = p.trace(x, y).status;
                assert_eq!(p.trace(norm.0, norm.1).status, status);
                assert_eq!(p.trace(flip.0, flip.1).status == Status::Zero, status == Status::Zero);
            }
        }
    }
}

#[test]
fn scans_are_deterministic() {
    let a = Pipeline::new(6).unwrap();
    let b = Pipeline::new(6).unwrap();
    let (ta, tb) = (a.scan(), b.scan());
    assert_eq!(ta, tb);
    let ja = PipelineReport::new(&a, &ta, true).to_json().unwrap();
    let jb = PipelineReport::new(&b, &tb, true).to_json().unwrap();
    assert_eq!(ja, jb);
}

#[test]
fn wall_crossing_rewrites_of_the_hard_cases() {
    let p = Pipeline::new(6).unwrap();
    let g = p.cells().group().clone();
    let e = |w: &str| g.parse(w).unwrap();

    let r = p
        .wall_crossing_rewrite(e("45231"), e("232432"), &[4, 5, 2, 3, 1])
        .unwrap();
    assert_eq!(r.moves[0], (4, 5, (e("45231"), e("232432")), (e("5231"), e("2324325"))));
    assert_eq!(r.result, (e("5231"), e("2324325")));
    assert!(p.parabolic_components(r.result.0, r.result.1).is_some());

    let r = p
        .wall_crossing_rewrite(e("345231"), e("1343"), &[3, 2, 1, 4, 5, 3])
        .unwrap();
    assert_eq!(r.moves[0].3 .1, e("13432"));
    assert_eq!(r.moves[1].3 .1, e("1343"));
    assert!(p.parabolic_components(r.result.0, r.result.1).is_some());

    assert!(p.wall_crossing_rewrite(e("45231"), e("232432"), &[4, 5, 2, 3]).is_err());
}
