//! Containment checks against brute force and each other.

mod common;

use common::random_coloring;
use ramseylab::arrowing::validate::{naive_contains, validate_witness};
use ramseylab::arrowing::{
    contains_blue_fan, contains_blue_subgraph, contains_red, BlueTarget, Color, HostGraph, TwoColoring,
};
use ramseylab::graph::{complete, cycle, fan, FanSpec};
use ramseylab::graph6::{emit_graph6, parse_graph6};
use ramseylab::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn graph6_round_trip_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..1000 {
        let n = rng.gen_range(0..=12);
        let p = rng.gen_range(0.0..1.0);
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
    }
}

#[test]
fn red_triangles_on_all_k5_colorings() {
    let host = HostGraph::Complete { n: 5 };
    let edges = host.edges();
    let k3 = complete(3);
    for code in 0u32..1 << 10 {
        let c = TwoColoring::from_fn(host, |u, v| {
            let i = edges.iter().position(|&e| e == (u, v)).unwrap();
            if code >> i & 1 == 1 {
                Color::Red
            } else {
                Color::Blue
            }
        })
        .unwrap();
        let mut scan = false;
        for a in 0..5 {
            for b in a + 1..5 {
                for d in b + 1..5 {
                    scan |= [(a, b), (a, d), (b, d)].iter().all(|&(x, y)| c.color(x, y) == Some(Color::Red));
                }
            }
        }
        let w = contains_red(&c, &k3);
        assert_eq!(!w.is_neither(), scan, "red edges {}", code.count_ones());
        if scan {
            validate_witness(&c, &w, &k3, &BlueTarget::from_graph(&k3)).unwrap();
        }
    }
}

#[test]
fn fan_detector_matches_generic_search_on_many_hosts() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 1..=3 {
        for t in 1..=3 {
            let spec = FanSpec::new(n, t).unwrap();
            let pattern = fan(spec);
            let target = BlueTarget::Fan(spec);
            for order in (spec.order()..=13).step_by(2) {
                for _ in 0..6 {
                    let p = rng.gen_range(0.3..0.9);
                    let c = random_coloring(&mut rng, order, p);
                    let fast = contains_blue_fan(&c, spec);
                    let slow = contains_blue_subgraph(&c, &pattern).unwrap();
                    assert_eq!(fast.is_neither(), slow.is_neither(), "fan({n},{t}) on K{order}");
                    assert_eq!(fast.is_neither(), !naive_contains(&c, &pattern, Color::Blue));
                    if !fast.is_neither() {
                        validate_witness(&c, &fast, &complete(2), &target).unwrap();
                    }
                }
            }
        }
    }
}

#[test]
fn witnesses_survive_more_edges_of_their_colour() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let spec = FanSpec::new(2, 2).unwrap();
    let c5 = cycle(5).unwrap();
    for _ in 0..100 {
        let c = random_coloring(&mut rng, 9, 0.5);
        let (u, v) = {
            let a = rng.gen_range(0..9);
            let b = (a + rng.gen_range(1..9)) % 9;
            (a.min(b), a.max(b))
        };
        let mut blue = c.clone();
        blue.set(u, v, Color::Blue).unwrap();
        if let w @ ramseylab::arrowing::Witness::BlueFan { .. } = contains_blue_fan(&c, spec) {
            assert!(!contains_blue_fan(&blue, spec).is_neither());
            validate_witness(&blue, &w, &c5, &BlueTarget::Fan(spec)).unwrap();
        }
        let mut red = c.clone();
        red.set(u, v, Color::Red).unwrap();
        if let w @ ramseylab::arrowing::Witness::RedEmbedding { .. } = contains_red(&c, &c5) {
            assert!(!contains_red(&red, &c5).is_neither());
            validate_witness(&red, &w, &c5, &BlueTarget::Fan(spec)).unwrap();
        }
    }
}
