//! Values computed by an independent exhaustive search over all
//! mono / non-mono assignments and frozen here.

use sparing_core::formulas::{FormulaEvaluation, Status, TheoremId};
use sparing_core::spec_string::{Instance, SpecExpr};
use sparing_core::{sparing_bruteforce, sparing_corona, sparing_mwis, SolverConfig};

const CORONAS: &[(&str, usize, usize, usize)] = &[
    ("corona(cycle:3,cycle:3)", 12, 21, 10),
    ("corona(cycle:3,complete:2)", 9, 12, 4),
    ("corona(path:2,path:2)", 12, 17, 4),
    ("corona(path:2,path:1)", 9, 11, 3),
    ("corona(cycle:3,path:3)", 15, 24, 8),
    ("corona(cycle:4,path:2)", 16, 24, 6),
    ("corona(path:1,path:1)", 6, 7, 2),
    ("corona(complete:2,complete:2)", 6, 7, 2),
    ("corona(complete:3,complete:2)", 9, 12, 4),
    ("corona(path:1,cycle:3)", 8, 13, 6),
    ("corona(biclique:1,2,biclique:1,1)", 9, 11, 3),
    ("corona(complete:2,cycle:3)", 8, 13, 6),
    ("corona(biclique:1,1,complete:2)", 6, 7, 2),
    ("corona(complete:2,biclique:1,1)", 6, 7, 2),
    ("corona(path:1,complete:2)", 6, 7, 2),
    ("corona(complete:2,path:1)", 6, 7, 2),
    ("corona(cycle:4,path:3)", 20, 32, 10),
    ("corona(path:1,cycle:4)", 10, 17, 5),
    ("corona(path:2,cycle:4)", 15, 26, 8),
    ("corona(cycle:3,cycle:4)", 15, 27, 9),
    ("corona(complete:3,complete:3)", 12, 21, 10),
    ("corona(complete:3,path:2)", 12, 18, 5),
    ("corona(cycle:4,complete:2)", 12, 16, 4),
    ("corona(cycle:5,biclique:1,2)", 20, 30, 8),
    ("corona(complete:3,biclique:1,2)", 12, 18, 5),
];

#[test]
fn all_solvers_reproduce_frozen_values() {
    let cfg = SolverConfig::default();
    for &(spec, vertices, edges, phi) in CORONAS {
        let Instance::Corona(layout) = SpecExpr::parse(spec).unwrap().resolve().unwrap() else {
            panic!("{spec} is not a corona");
        };
        let g = &layout.product;
        assert_eq!(
            (g.vertex_count(), g.edge_count()),
            (vertices, edges),
            "{spec}"
        );
        assert_eq!(sparing_bruteforce(g, &cfg).unwrap().value, phi, "{spec} bf");
        assert_eq!(sparing_mwis(g, &cfg).value, phi, "{spec} mwis");
        assert_eq!(sparing_corona(&layout, &cfg).value, phi, "{spec} corona");
    }
}

#[test]
fn complete_graphs() {
    let cfg = SolverConfig::default();
    for (n, phi) in [(2, 0), (3, 1), (4, 3), (5, 6), (6, 10), (7, 15), (8, 21)] {
        let g = SpecExpr::parse(&format!("complete:{n}"))
            .unwrap()
            .resolve()
            .unwrap();
        assert_eq!(
            sparing_bruteforce(g.graph(), &cfg).unwrap().value,
            phi,
            "K{n}"
        );
    }
}

#[test]
fn statuses_against_frozen_values() {
    let cases: &[(TheoremId, &[i64], u64, Status)] = &[
        (TheoremId::CC, &[3, 3], 10, Status::ExactMatch),
        (TheoremId::CC, &[3, 4], 9, Status::ExactMatch),
        (TheoremId::CK, &[3, 2], 4, Status::Underestimate),
        (TheoremId::KC, &[2, 3], 6, Status::Underestimate),
        (TheoremId::BipK, &[2, 1, 1, 1], 2, Status::Underestimate),
        (TheoremId::KBip, &[2, 1, 1, 1], 2, Status::ExactMatch),
        (TheoremId::PP, &[2, 2], 4, Status::UpperBound),
        (TheoremId::PP, &[2, 1], 3, Status::NonInteger),
        (TheoremId::CP, &[3, 3], 8, Status::NonInteger),
        (TheoremId::PC, &[1, 4], 5, Status::UpperBound),
        (
            TheoremId::OddCycleBip,
            &[5, 1, 2, 2],
            8,
            Status::Underestimate,
        ),
        (TheoremId::KK, &[3, 3], 10, Status::ExactMatch),
        (
            TheoremId::BicliqueBiclique,
            &[1, 2, 1, 1],
            3,
            Status::ExactMatch,
        ),
    ];
    for &(id, params, oracle, status) in cases {
        let e = FormulaEvaluation::new(id, params, Some(oracle)).unwrap();
        assert_eq!(e.status, status, "{id} {params:?}");
    }
}
