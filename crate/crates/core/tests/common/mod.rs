//! Shared generators and independent oracles for the integration suites.
#![allow(dead_code)]

use bshopf_core::building::{BuildingSet, SetFamily};
use bshopf_core::chromatic::ChromaticPolynomial;
use bshopf_core::graphs::SimpleGraph;
use bshopf_core::subset::{card, full_mask, Mask};
use rand::Rng;

/// All antichains (the empty one included) of subsets of `{0,..,n-1}` with
/// at least two elements each.
pub fn all_antichains(n: usize) -> Vec<SetFamily> {
    let sets: Vec<Mask> = (0..=full_mask(n)).filter(|&m| card(m) >= 2).collect();
    let mut out = Vec::new();
    let mut chosen: Vec<Mask> = Vec::new();
    fn rec(start: usize, sets: &[Mask], chosen: &mut Vec<Mask>, n: usize, out: &mut Vec<SetFamily>) {
        out.push(SetFamily::new(n, chosen.clone()).unwrap());
        for i in start..sets.len() {
            let s = sets[i];
            if chosen.iter().all(|&t| t & s != t && t & s != s) {
                chosen.push(s);
                rec(i + 1, sets, chosen, n, out);
                chosen.pop();
            }
        }
    }
    rec(0, &sets, &mut chosen, n, &mut out);
    out
}

/// A random antichain of sets with at least two elements on `{0,..,n-1}`:
/// random sets reduced to their inclusion-minimal members.
pub fn random_antichain<R: Rng>(rng: &mut R, n: usize) -> SetFamily {
    let k = if n < 2 { 0 } else { rng.gen_range(0..=4) };
    let mut sets: Vec<Mask> = Vec::new();
    for _ in 0..k {
        let mut s = rng.gen_range(0..=full_mask(n));
        while card(s) < 2 {
            s = rng.gen_range(0..=full_mask(n));
        }
        sets.push(s);
    }
    sets.sort_unstable();
    sets.dedup();
    let minimal: Vec<Mask> = sets
        .iter()
        .filter(|&&s| !sets.iter().any(|&t| t != s && t & s == t))
        .copied()
        .collect();
    SetFamily::new(n, minimal).unwrap()
}

/// Every building set on `{0,..,n-1}`: families of size->=2 members closed
/// under overlapping unions, with singletons supplied. Exhaustive, so keep
/// n at 4 or below.
pub fn all_building_sets(n: usize) -> Vec<BuildingSet> {
    assert!(n <= 4, "exhaustive building-set enumeration is desk scale");
    let candidates: Vec<Mask> = (0..=full_mask(n)).filter(|&m| card(m) >= 2).collect();
    let mut out = Vec::new();
    'family: for pick in 0..(1u64 << candidates.len()) {
        let members: Vec<Mask> = candidates
            .iter()
            .enumerate()
            .filter(|&(i, _)| pick >> i & 1 == 1)
            .map(|(_, &m)| m)
            .collect();
        for (i, &s) in members.iter().enumerate() {
            for &t in &members[i + 1..] {
                if s & t != 0 && !members.contains(&(s | t)) {
                    continue 'family;
                }
            }
        }
        let mut all: Vec<Mask> = (0..n).map(|i| 1 << i).collect();
        all.extend(members);
        out.push(BuildingSet::new(n, all).unwrap());
    }
    out
}

/// All labeled graphs on `v` vertices.
pub fn all_labeled_graphs(v: usize) -> Vec<SimpleGraph> {
    let pairs: Vec<(usize, usize)> = (0..v)
        .flat_map(|a| (a + 1..v).map(move |b| (a, b)))
        .collect();
    (0..(1u64 << pairs.len()))
        .map(|pick| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| pick >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            SimpleGraph::new(v, &edges).unwrap()
        })
        .collect()
}

/// Edge-set encoding minimized over all vertex permutations.
pub fn canonical_graph_key(g: &SimpleGraph) -> Vec<(usize, usize)> {
    let v = g.vertex_count();
    let mut best: Option<Vec<(usize, usize)>> = None;
    let mut perm: Vec<usize> = (0..v).collect();
    loop {
        let mut edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (perm[a], perm[b]);
                (x.min(y), x.max(y))
            })
            .collect();
        edges.sort_unstable();
        if best.as_ref().is_none_or(|b| edges < *b) {
            best = Some(edges);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap()
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Connected graphs on exactly `v` vertices, one representative per
/// isomorphism class.
pub fn connected_graph_classes(v: usize) -> Vec<SimpleGraph> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for g in all_labeled_graphs(v) {
        if !g.is_connected() {
            continue;
        }
        if seen.insert(canonical_graph_key(&g)) {
            out.push(g);
        }
    }
    out
}

/// All graphs on exactly `v` vertices, one representative per isomorphism
/// class, connected or not.
pub fn graph_classes(v: usize) -> Vec<SimpleGraph> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for g in all_labeled_graphs(v) {
        if seen.insert(canonical_graph_key(&g)) {
            out.push(g);
        }
    }
    out
}

/// Classical chromatic polynomial of a graph by deletion-contraction with
/// parallel edges merged; edgeless graphs contribute one monomial of
/// degree equal to the vertex count. Independent of the building-set
/// pipeline.
pub fn graph_chromatic_oracle(g: &SimpleGraph) -> ChromaticPolynomial {
    if g.edge_count() == 0 {
        let mut coeffs = vec![0i64; g.vertex_count() + 1];
        coeffs[g.vertex_count()] = 1;
        return ChromaticPolynomial::new(coeffs);
    }
    let &(a, b) = &g.edges()[0];
    let deleted = SimpleGraph::new(g.vertex_count(), &g.edges()[1..]).unwrap();
    // contract b into a, re-pack indices above b, drop loops and parallels
    let contracted_edges: Vec<(usize, usize)> = g.edges()[1..]
        .iter()
        .filter_map(|&(x, y)| {
            let map = |z: usize| {
                let z = if z == b { a } else { z };
                if z > b {
                    z - 1
                } else {
                    z
                }
            };
            let (x, y) = (map(x), map(y));
            if x == y {
                None
            } else {
                Some((x.min(y), x.max(y)))
            }
        })
        .collect();
    let contracted = SimpleGraph::new(g.vertex_count() - 1, &dedup(contracted_edges)).unwrap();
    graph_chromatic_oracle(&deleted).sub(&graph_chromatic_oracle(&contracted))
}

fn dedup(mut edges: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
    edges.sort_unstable();
    edges.dedup();
    edges
}
