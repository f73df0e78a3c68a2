//! Naive reference implementations shared by the integration tests.
#![allow(dead_code)]

use ramseylab::arrowing::validate::naive_contains;
use ramseylab::arrowing::{Color, HostGraph, TwoColoring};
use ramseylab::Graph;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Every proper colouring with labels below `k`, as label vectors.
pub fn proper_colorings(g: &Graph, k: usize, visit: &mut dyn FnMut(&[usize])) {
    fn rec(g: &Graph, k: usize, v: usize, labels: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if v == g.order() {
            visit(labels);
            return;
        }
        for c in 0..k {
            if (0..v).all(|u| !g.has_edge(u, v) || labels[u] != c) {
                labels.push(c);
                rec(g, k, v + 1, labels, visit);
                labels.pop();
            }
        }
    }
    rec(g, k, 0, &mut Vec::new(), visit);
}

pub fn naive_chi(g: &Graph) -> usize {
    (0..=g.order())
        .find(|&k| {
            let mut any = false;
            proper_colorings(g, k, &mut |_| any = true);
            any
        })
        .unwrap()
}

/// `(s, τ)` by scanning all proper `χ`-colourings.
pub fn naive_s_tau(g: &Graph, chi: usize) -> (usize, usize) {
    let mut all = Vec::new();
    proper_colorings(g, chi, &mut |l| all.push(l.to_vec()));
    let classes = |l: &[usize]| -> Vec<Vec<usize>> { (0..chi).map(|c| (0..l.len()).filter(|&v| l[v] == c).collect()).collect() };
    let s = all.iter().flat_map(|l| classes(l).into_iter().map(|c| c.len())).min().unwrap();
    let mut tau = usize::MAX;
    for l in &all {
        let cls = classes(l);
        for (i, last) in cls.iter().enumerate().filter(|(_, c)| c.len() == s) {
            for &v in last {
                for (j, other) in cls.iter().enumerate() {
                    if j != i {
                        tau = tau.min(other.iter().filter(|&&u| g.has_edge(u, v)).count());
                    }
                }
            }
        }
    }
    (s, tau)
}

pub fn random_coloring(rng: &mut ChaCha8Rng, n: usize, p_blue: f64) -> TwoColoring {
    TwoColoring::from_fn(HostGraph::Complete { n }, |_, _| {
        if rng.gen_bool(p_blue) {
            Color::Blue
        } else {
            Color::Red
        }
    })
    .unwrap()
}


/// Decides arrowing by listing every colouring of the host.
pub fn brute_arrows(host: HostGraph, g: &Graph, blue: &Graph) -> bool {
    let edges = host.edges();
    (0..1u64 << edges.len()).all(|code| {
        let c = TwoColoring::from_fn(host, |u, v| {
            let i = edges.iter().position(|&e| e == (u, v)).unwrap();
            if code >> i & 1 == 1 {
                Color::Red
            } else {
                Color::Blue
            }
        })
        .unwrap();
        naive_contains(&c, g, Color::Red) || naive_contains(&c, blue, Color::Blue)
    })
}

/// Least deficiency over all 2-partitions, counted pair by pair.
pub fn brute_bipartition(c: &TwoColoring) -> u64 {
    let n = c.order();
    if n < 2 {
        return 0;
    }
    (0..1u64 << (n - 1))
        .map(|side| {
            let mut d = 0;
            for u in 0..n {
                for v in u + 1..n {
                    let same = (side >> u & 1) == (side >> v & 1);
                    let red = c.color(u, v) == Some(Color::Red);
                    if same == red {
                        d += 1;
                    }
                }
            }
            d
        })
        .min()
        .unwrap()
}
