use fanramsey_core::bigraphic::{is_bigraphic, realize_bigraphic, DegreePairSpec};
use fanramsey_core::fans::{find_fan, multipartite_matching, multipartite_matching_bound};
use fanramsey_core::gallai::edmonds_gallai;
use fanramsey_core::graph::build_complete_multipartite;
use fanramsey_core::io::{from_graph6, parse_edgelist, to_edgelist, to_graph6};
use fanramsey_core::matching::{brute_matching, max_matching, Matching};
use fanramsey_core::{Graph, MultipartiteSpec};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut it = bits.into_iter();
            let mut edges = Vec::new();
            for v in 1..n {
                for u in 0..v {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// Whether `g` contains `F_k`, by trying every centre and every choice of
/// `k` disjoint edges among its neighbours.
fn has_fan_brute(g: &Graph, k: usize) -> bool {
    fn pick(edges: &[(usize, usize)], used: u64, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        edges.iter().enumerate().any(|(i, &(u, v))| {
            used & (1 << u | 1 << v) == 0 && pick(&edges[i + 1..], used | 1 << u | 1 << v, k - 1)
        })
    }
    (0..g.n()).any(|c| {
        let hood = g.neighbors(c);
        let edges: Vec<_> = g
            .edges()
            .filter(|&(u, v)| hood.contains(&u) && hood.contains(&v))
            .collect();
        pick(&edges, 1 << c, k)
    })
}

/// Whether some bipartite graph has exactly these degrees.
fn bigraphic_brute(xs: &[usize], ys: &[usize]) -> bool {
    let (a, b) = (xs.len(), ys.len());
    (0u32..1 << (a * b)).any(|mask| {
        let bit = |i: usize, j: usize| mask >> (i * b + j) & 1 == 1;
        (0..a).all(|i| (0..b).filter(|&j| bit(i, j)).count() == xs[i])
            && (0..b).all(|j| (0..a).filter(|&i| bit(i, j)).count() == ys[j])
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn graph6_round_trip(g in graph_strategy(20)) {
        let text = to_graph6(&g);
        prop_assert_eq!(from_graph6(&text).unwrap(), g);
    }

    #[test]
    fn edgelist_round_trip(g in graph_strategy(15)) {
        prop_assert_eq!(parse_edgelist(&to_edgelist(&g)).unwrap(), g);
    }

    #[test]
    fn json_round_trip(g in graph_strategy(12)) {
        let text = serde_json::to_string(&g).unwrap();
        prop_assert_eq!(serde_json::from_str::<Graph>(&text).unwrap(), g);
    }

    #[test]
    fn complement_is_involution(g in graph_strategy(12)) {
        let c = g.complement();
        prop_assert_eq!(c.edge_count() + g.edge_count(), g.n() * g.n().saturating_sub(1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn blossom_matches_brute_force(g in graph_strategy(14)) {
        let m = max_matching(&g);
        m.validate(&g).unwrap();
        prop_assert_eq!(m.size(), brute_matching(&g).unwrap().size());
    }

    #[test]
    fn gallai_partition_is_consistent(g in graph_strategy(11)) {
        let eg = edmonds_gallai(&g);
        let m = max_matching(&g);
        prop_assert!(eg.check(&g, &m).is_ok(), "{:?}", eg.check(&g, &m));
    }

    #[test]
    fn find_fan_is_exact(g in graph_strategy(9), k in 1usize..4) {
        let found = find_fan(&g, k);
        if let Some(w) = &found {
            prop_assert_eq!(w.size(), k);
            w.validate(&g).unwrap();
        }
        prop_assert_eq!(found.is_some(), has_fan_brute(&g, k));
    }

    #[test]
    fn gale_ryser_matches_enumeration(
        xs in prop::collection::vec(0usize..5, 1..4),
        ys in prop::collection::vec(0usize..5, 1..4),
    ) {
        let spec = DegreePairSpec::new(xs.clone(), ys.clone());
        let verdict = is_bigraphic(&spec);
        prop_assert_eq!(verdict.holds(), bigraphic_brute(&xs, &ys));
        if verdict.holds() {
            let r = realize_bigraphic(&spec).unwrap();
            prop_assert_eq!(r.x_degrees(), xs);
            prop_assert_eq!(r.y_degrees(), ys);
        }
    }

    #[test]
    fn multipartite_matching_reaches_bound(parts in prop::collection::vec(1usize..6, 2..6)) {
        let spec = MultipartiteSpec::new(parts).unwrap();
        let g = build_complete_multipartite(&spec);
        let blocks: Vec<Vec<usize>> = spec.blocks().into_iter().map(|r| r.collect()).collect();
        let m = Matching::new(multipartite_matching(&blocks));
        m.validate(&g).unwrap();
        let bound = multipartite_matching_bound(&spec).unwrap();
        prop_assert_eq!(2 * m.size(), bound);
        prop_assert_eq!(2 * max_matching(&g).size(), bound);
    }
}
