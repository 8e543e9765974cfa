//! Property tests over random labellings and random subgraphs.

use proptest::prelude::*;

use cgg::{
    arc_split, edges_disjoint, free_arcs, lies_behind, max_disjoint_bruteforce, max_disjoint_set,
    parse, serialize, Cgg, Edge, Labelling, Parity,
};

fn arb_labelling(max_n: u32) -> impl Strategy<Value = Labelling> {
    (4u32..=max_n, any::<bool>()).prop_map(|(n, odd)| {
        Labelling::new(n, if odd { Parity::Odd } else { Parity::Even }).unwrap()
    })
}

fn arb_graph(max_n: u32) -> impl Strategy<Value = Cgg> {
    arb_labelling(max_n).prop_flat_map(|lab| {
        let all: Vec<Edge> = Cgg::complete(lab).edges().cloned().collect();
        let len = all.len();
        prop::collection::vec(any::<bool>(), len).prop_map(move |mask| {
            let edges: Vec<Edge> = all
                .iter()
                .zip(&mask)
                .filter(|(_, &keep)| keep)
                .map(|(e, _)| *e)
                .collect();
            Cgg::new(lab, edges).unwrap()
        })
    })
}

fn arb_edge(lab: Labelling) -> impl Strategy<Value = Edge> {
    let n = lab.n();
    (0..n, 1..n).prop_map(move |(i, off)| {
        let a = lab.vertex_at_cyclic(i);
        let b = lab.vertex_at_cyclic((i + off) % n);
        Edge::new(&lab, a.value() as i64, b.value() as i64).unwrap()
    })
}

proptest! {
    #[test]
    fn cyclic_index_round_trips(lab in arb_labelling(64), i in 0u32..64) {
        let i = i % lab.n();
        let v = lab.vertex_at_cyclic(i);
        prop_assert_eq!(lab.cyclic_index(v), i);
        prop_assert!(lab.contains_label(v.value() as i64));
    }

    #[test]
    fn edge_order_bounds_and_direction_congruence(
        (lab, e) in arb_labelling(32).prop_flat_map(|lab| (Just(lab), arb_edge(lab)))
    ) {
        let r = e.order(&lab);
        prop_assert!(r >= 1 && r <= lab.n() / 2);
        let (a, b) = e.endpoints();
        let sum = (a.value() + b.value()).rem_euclid(2 * lab.n() as i32);
        let twice = (2 * e.direction(&lab).rep() as i32).rem_euclid(2 * lab.n() as i32);
        prop_assert_eq!(sum, twice);
    }

    #[test]
    fn disjointness_is_symmetric_and_irreflexive(
        (lab, e1, e2) in arb_labelling(24)
            .prop_flat_map(|lab| (Just(lab), arb_edge(lab), arb_edge(lab)))
    ) {
        prop_assert_eq!(
            edges_disjoint(&lab, &e1, &e2),
            edges_disjoint(&lab, &e2, &e1)
        );
        prop_assert!(!edges_disjoint(&lab, &e1, &e1));
    }

    #[test]
    fn lies_behind_transitivity_sample(
        (lab, e1, e2, e3) in arb_labelling(24)
            .prop_flat_map(|lab| (Just(lab), arb_edge(lab), arb_edge(lab), arb_edge(lab)))
    ) {
        prop_assert!(lies_behind(&lab, &e1, &e1));
        if lies_behind(&lab, &e3, &e2) && lies_behind(&lab, &e2, &e1) {
            prop_assert!(lies_behind(&lab, &e3, &e1));
        }
        if e1 != e2 && lies_behind(&lab, &e2, &e1) {
            prop_assert!(!lies_behind(&lab, &e1, &e2));
        }
    }

    #[test]
    fn arc_split_partitions(
        (lab, e) in arb_labelling(24).prop_flat_map(|lab| (Just(lab), arb_edge(lab)))
    ) {
        let s = arc_split(&lab, &e).unwrap();
        prop_assert_eq!(s.behind.len() + s.front.len(), lab.n() as usize - 2);
    }

    #[test]
    fn dp_equals_bruteforce_on_random_subgraphs(g in arb_graph(10)) {
        let dp = max_disjoint_set(&g);
        let bf = max_disjoint_bruteforce(&g, g.n() as usize);
        prop_assert_eq!(dp.size, bf.size);
        // Witness validity for both solvers.
        for w in [&dp, &bf] {
            for i in 0..w.edges.len() {
                for j in (i + 1)..w.edges.len() {
                    prop_assert!(edges_disjoint(g.labelling(), &w.edges[i], &w.edges[j]));
                }
            }
        }
    }

    #[test]
    fn free_arc_runs_are_independent_and_maximal(g in arb_graph(12)) {
        let fa = free_arcs(&g);
        prop_assert!(!fa.runs.is_empty());
        prop_assert_eq!(fa.max_len, fa.runs.iter().map(|r| r.len()).max().unwrap());
        for run in &fa.runs {
            for i in 0..run.len() {
                for j in (i + 1)..run.len() {
                    prop_assert!(!g.contains_pair(
                        run[i].value() as i64,
                        run[j].value() as i64
                    ));
                }
            }
        }
    }

    #[test]
    fn document_round_trip(g in arb_graph(12)) {
        let text = serialize(&g, None);
        let (parsed, meta) = parse(&text).unwrap();
        prop_assert_eq!(&parsed, &g);
        prop_assert!(meta.is_none());
        prop_assert_eq!(serialize(&parsed, None), text);
    }
}
