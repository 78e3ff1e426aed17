//! The procedure on double wheels and triangulation variants.

mod common;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use trunc_choice::choosability::ListAssignment;
use trunc_choice::generate::{
    double_wheel, procedure_suite, random_triangulation_faces, triangulation_variant,
};
use trunc_choice::graph::{connectivity_at_least, PlaneGraph};
use trunc_choice::procedure::{
    build_order, check_properly_connected, color, partition_by_degree, properly_connected_shortcut,
    ProcedureConfig, ProcedureError,
};

use common::proper_from_lists;

#[test]
fn suite_colours_and_respects_budget() {
    let cfg = ProcedureConfig {
        diagnostics: true,
        ..ProcedureConfig::default()
    };
    let mut ok = 0;
    for inst in procedure_suite(50, 12, 2026) {
        match color(&inst.graph, &inst.lists, 12, None, cfg) {
            Ok(run) => {
                assert!(
                    proper_from_lists(&inst.graph, &inst.lists, &run.coloring),
                    "{}",
                    inst.name
                );
                for b in run.budget.iter().filter(|b| b.all_saviors) {
                    assert!(
                        b.list_size >= 7 && b.avoid_size <= 6,
                        "{}: {b:?}",
                        inst.name
                    );
                }
                assert!(run.protects.iter().all(|q| q.len() <= 2));
                ok += 1;
            }
            Err(ProcedureError::Failed { reason, .. }) => {
                assert!(!reason.starts_with("audit"), "{}: {reason}", inst.name)
            }
            Err(ProcedureError::Capped { .. }) => {}
            Err(e) => panic!("{}: {e}", inst.name),
        }
    }
    assert!(ok >= 45, "{ok} of 50 completed");
}

#[test]
fn order_back_degree_at_most_five() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let g = triangulation_variant(&mut rng);
        let p = partition_by_degree(&g, 12).unwrap();
        let order = build_order(&p, p.default_v_star());
        assert_eq!(order[0], p.default_v_star());
        let mut pos = vec![usize::MAX; g.n()];
        order.iter().enumerate().for_each(|(i, &v)| pos[v] = i);
        for &u in &order {
            assert!(g.neighbors(u).iter().filter(|&&w| pos[w] < pos[u]).count() <= 5);
        }
    }
}

#[test]
fn icosahedron_order() {
    let faces = [
        [0, 1, 2],
        [0, 2, 3],
        [0, 3, 4],
        [0, 4, 5],
        [0, 5, 1],
        [1, 6, 2],
        [2, 7, 3],
        [3, 8, 4],
        [4, 9, 5],
        [5, 10, 1],
        [6, 7, 2],
        [7, 8, 3],
        [8, 9, 4],
        [9, 10, 5],
        [10, 6, 1],
        [11, 7, 6],
        [11, 8, 7],
        [11, 9, 8],
        [11, 10, 9],
        [11, 6, 10],
    ];
    let mut edges: Vec<(usize, usize)> = faces
        .iter()
        .flat_map(|f| [(f[0], f[1]), (f[1], f[2]), (f[2], f[0])])
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    edges.sort();
    edges.dedup();
    let g = trunc_choice::generate::embed_with_outer(&PlaneGraph::from_edges(12, &edges).unwrap());
    let p = partition_by_degree(&g, 5).unwrap();
    assert_eq!(p.v2.len(), 12);
    let order = build_order(&p, 0);
    let mut pos = vec![0; 12];
    order.iter().enumerate().for_each(|(i, &v)| pos[v] = i);
    assert!(order
        .iter()
        .all(|&u| g.neighbors(u).iter().filter(|&&w| pos[w] < pos[u]).count() <= 5));
}

#[test]
fn shortcut_agrees_with_direct_check() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut checked = 0;
    while checked < 20 {
        let g = triangulation_variant(&mut rng);
        if g.n() > 30 {
            continue;
        }
        assert!(connectivity_at_least(&g, 3));
        let p = partition_by_degree(&g, 12).unwrap();
        let short = properly_connected_shortcut(&g, &p).unwrap();
        let direct: Vec<bool> = check_properly_connected(&g, &p, 100_000)
            .unwrap()
            .iter()
            .map(|v| v.pass())
            .collect();
        assert_eq!(short, direct);
        checked += 1;
    }
    let tris = random_triangulation_faces(20, 40, &mut rng);
    assert_eq!(tris.len(), 36);
}

#[test]
fn double_wheels_all_rims() {
    let cfg = ProcedureConfig::default();
    for rim in 12..=20 {
        let g = double_wheel(rim);
        let l = ListAssignment::new(
            24,
            (0..g.n())
                .map(|v| trunc_choice::choosability::ColorSet::range(g.degree(v).min(12)))
                .collect(),
        )
        .unwrap();
        let run = color(&g, &l, 12, None, cfg).unwrap();
        assert!(proper_from_lists(&g, &l, &run.coloring), "rim {rim}");
    }
}
