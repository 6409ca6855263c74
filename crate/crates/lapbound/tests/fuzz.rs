use lapbound::edgelist::read_edge_list;
use lapbound::fuzz::{run_fuzz, FuzzConfig, FuzzReport, Model};
use lapbound::report::ParamValue;
use lapbound_core::{evaluate_bound, BoundId, Param, Profile};

fn run(model: Model, count: usize, seed: u64, n_max: usize) -> FuzzReport {
    run_fuzz(&FuzzConfig {
        model,
        count,
        seed,
        n_max,
        ..FuzzConfig::default()
    })
    .unwrap()
}

fn param(p: Option<ParamValue>) -> Param {
    match p {
        None => Param::None,
        Some(ParamValue::K(k)) => Param::K(k),
        Some(ParamValue::Alpha(a)) => Param::Alpha(a),
    }
}

#[test]
fn trees_satisfy_tree_bounds_except_negative_alpha_upper() {
    let r = run(Model::Tree, 100, 7, 10);
    assert!(r.errors.is_empty());
    for id in [BoundId::R1TreeLow, BoundId::LeeTree] {
        assert_eq!(r.tally(id).unwrap().counts.violated, 0, "{id}");
        assert_eq!(r.tally(id).unwrap().counts.not_applicable, 0, "{id}");
    }
    // The conjugate-degree upper bound only survives positive exponents.
    for pt in &r.tally(BoundId::R1TreeHigh).unwrap().by_param {
        match pt.param {
            Some(ParamValue::Alpha(a)) if a > 1.0 => assert_eq!(pt.counts.violated, 0),
            _ => {}
        }
    }
    for v in r.violations.iter().filter(|v| v.bound_id == "R1_TREE_HIGH") {
        assert!(matches!(v.param, Some(ParamValue::Alpha(a)) if a < 0.0));
        let mut deg = vec![0; v.n];
        for &(a, b) in &v.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        assert!(!deg.contains(&(v.n - 1)), "stars attain the bound: {v:?}");
    }
    assert_eq!(r.grone_merris_trees.checked, 100);
    assert_eq!(r.grone_merris_trees.holds, 100);
}

#[test]
fn gnp_corpus_violations_are_confined() {
    let r = run(Model::Gnp, 200, 1, 10);
    assert!(r.errors.is_empty());
    let clean = [
        BoundId::P1Lower,
        BoundId::P1Upper,
        BoundId::RpMoment,
        BoundId::KfZt,
        BoundId::LeeDegree,
        BoundId::LeeTree,
        BoundId::LeeClique,
        BoundId::LeeR2aM,
        BoundId::LeeR2aT,
        BoundId::LeeR2b,
        BoundId::LeeR2cM1,
        BoundId::LeeR2cT,
    ];
    for id in clean {
        assert_eq!(r.tally(id).unwrap().counts.violated, 0, "{id}");
    }
    for v in &r.violations {
        assert!(
            matches!(v.bound_id, "P2_LOWER" | "KF_NEW" | "R1_TREE_HIGH"),
            "{v:?}"
        );
        if v.bound_id == "P2_LOWER" {
            assert_eq!(v.merged_monotone, Some(false), "{v:?}");
        }
    }
    assert_eq!(r.grone.checked, 200);
    assert_eq!(r.grone.holds, 200);
}

#[test]
fn clique_unions_attain_moment_and_lee_equality() {
    let r = run(Model::CliqueUnion, 50, 3, 12);
    for pt in &r.tally(BoundId::RpMoment).unwrap().by_param {
        assert_eq!(pt.counts.equality, 50, "{:?}", pt.param);
    }
    assert_eq!(r.tally(BoundId::LeeClique).unwrap().counts.equality, 50);
    assert!(r
        .agreement_failures
        .iter()
        .all(|f| f.bound_id != "RP_MOMENT" && f.bound_id != "LEE_CLIQUE"));
}

#[test]
fn persisted_violations_reproduce() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = FuzzConfig {
        seed: 1,
        count: 150,
        out_dir: Some(dir.path().to_path_buf()),
        ..FuzzConfig::default()
    };
    let r = run_fuzz(&cfg).unwrap();
    assert!(
        !r.violations.is_empty(),
        "the default corpus contains P2 counterexamples"
    );
    for v in &r.violations {
        let g = read_edge_list(&dir.path().join(&v.file)).unwrap();
        assert_eq!(g.edges(), &v.edges[..]);
        let p = Profile::new(g).unwrap();
        let id: BoundId = v.bound_id.parse().unwrap();
        let again = evaluate_bound(id, &p, param(v.param), false).unwrap();
        for (x, y) in [(again.lhs.unwrap(), v.lhs), (again.rhs.unwrap(), v.rhs)] {
            assert!(
                (x - y).abs() <= 1e-12 * x.abs().max(y.abs()).max(1.0),
                "{x} vs {y}"
            );
        }
    }
    let files = std::fs::read_dir(dir.path()).unwrap().count();
    let mut names: Vec<&str> = r.violations.iter().map(|v| v.file.as_str()).collect();
    names.dedup();
    assert_eq!(files, names.len());
}

#[test]
fn strict_applicability_removes_p2_violations() {
    let cfg = FuzzConfig {
        seed: 1,
        count: 150,
        eval: lapbound_core::EvalConfig {
            strict_applicability: true,
            ..Default::default()
        },
        ..FuzzConfig::default()
    };
    let r = run_fuzz(&cfg).unwrap();
    assert_eq!(r.tally(BoundId::P2Lower).unwrap().counts.violated, 0);
    assert_eq!(r.tally(BoundId::KfNew).unwrap().counts.violated, 0);
}
