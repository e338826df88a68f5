//! Single-source shortest paths with negative weights.
//!
//! Queue-based Bellman-Ford. Each vertex counts how often it is relaxed; once
//! some vertex has been relaxed more than `n` times the predecessor graph is
//! scanned for a cycle (and rescanned every `n` relaxations after that). A
//! cycle in the predecessor graph always has negative weight, so it is
//! returned as the witness.

use std::collections::VecDeque;
use std::fmt::Debug;

use num_traits::{Num, Signed};

/// Scalar usable as an arc weight.
pub trait Weight: Num + Signed + Copy + PartialOrd + Debug {}

impl<T: Num + Signed + Copy + PartialOrd + Debug> Weight for T {}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WeightedArc<W> {
    pub from: usize,
    pub to: usize,
    pub weight: W,
}

impl<W> WeightedArc<W> {
    pub fn new(from: usize, to: usize, weight: W) -> Self {
        WeightedArc { from, to, weight }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ShortestPaths<W> {
    /// `None` for vertices unreachable from the source.
    pub dist: Vec<Option<W>>,
    /// Index of the last arc on a shortest path to each vertex.
    pub pred: Vec<Option<usize>>,
}

/// A cycle of negative total weight.
#[derive(Clone, Debug, PartialEq)]
pub struct NegativeCycle<W> {
    /// Vertices in cycle order; the last one has an arc back to the first.
    pub nodes: Vec<usize>,
    /// Arc indices, `arcs[i]` goes from `nodes[i]` to `nodes[i + 1]`.
    pub arcs: Vec<usize>,
    pub total: W,
}

/// Shortest distances from `source`, or a negative cycle reachable from it.
pub fn shortest_paths<W: Weight>(
    n: usize,
    arcs: &[WeightedArc<W>],
    source: usize,
) -> Result<ShortestPaths<W>, NegativeCycle<W>> {
    assert!(source < n, "source {source} out of range for {n} vertices");
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (k, a) in arcs.iter().enumerate() {
        out[a.from].push(k);
    }
    let mut dist: Vec<Option<W>> = vec![None; n];
    let mut pred: Vec<Option<usize>> = vec![None; n];
    let mut relaxed = vec![0usize; n];
    let mut queued = vec![false; n];
    let mut queue = VecDeque::from([source]);
    dist[source] = Some(W::zero());
    queued[source] = true;

    let mut checking = false;
    let mut since_check = 0usize;
    while let Some(v) = queue.pop_front() {
        queued[v] = false;
        let dv = dist[v].expect("queued vertices have a distance");
        for &k in &out[v] {
            let a = &arcs[k];
            let cand = dv + a.weight;
            let better = match dist[a.to] {
                None => true,
                Some(d) => cand < d,
            };
            if !better {
                continue;
            }
            dist[a.to] = Some(cand);
            pred[a.to] = Some(k);
            relaxed[a.to] += 1;
            if relaxed[a.to] > n {
                checking = true;
            }
            if checking {
                since_check += 1;
                if since_check >= n.max(1) || relaxed[a.to] == n + 1 {
                    since_check = 0;
                    if let Some(cycle) = predecessor_cycle(arcs, &pred) {
                        return Err(cycle);
                    }
                }
            }
            if !queued[a.to] {
                queued[a.to] = true;
                queue.push_back(a.to);
            }
        }
    }
    Ok(ShortestPaths { dist, pred })
}

fn predecessor_cycle<W: Weight>(arcs: &[WeightedArc<W>], pred: &[Option<usize>]) -> Option<NegativeCycle<W>> {
    let n = pred.len();
    // 0 = unvisited, otherwise the walk id that first reached the vertex
    let mut mark = vec![0usize; n];
    for start in 0..n {
        if mark[start] != 0 {
            continue;
        }
        let walk = start + 1;
        let mut v = start;
        loop {
            if mark[v] == walk {
                return Some(extract(arcs, pred, v));
            }
            if mark[v] != 0 {
                break;
            }
            mark[v] = walk;
            match pred[v] {
                Some(k) => v = arcs[k].from,
                None => break,
            }
        }
    }
    None
}

fn extract<W: Weight>(arcs: &[WeightedArc<W>], pred: &[Option<usize>], on_cycle: usize) -> NegativeCycle<W> {
    let mut rev_arcs = Vec::new();
    let mut v = on_cycle;
    loop {
        let k = pred[v].expect("cycle vertices have predecessors");
        rev_arcs.push(k);
        v = arcs[k].from;
        if v == on_cycle {
            break;
        }
    }
    rev_arcs.reverse();
    let nodes: Vec<usize> = rev_arcs.iter().map(|&k| arcs[k].from).collect();
    let total = rev_arcs.iter().fold(W::zero(), |acc, &k| acc + arcs[k].weight);
    debug_assert!(total < W::zero(), "predecessor cycles have negative weight");
    NegativeCycle { nodes, arcs: rev_arcs, total }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arcs(list: &[(usize, usize, i64)]) -> Vec<WeightedArc<i64>> {
        list.iter().map(|&(a, b, w)| WeightedArc::new(a, b, w)).collect()
    }

    /// Textbook Bellman-Ford: n-1 rounds, then one detection round.
    fn textbook(n: usize, arcs: &[WeightedArc<i64>], s: usize) -> Option<Vec<Option<i64>>> {
        let mut d = vec![None; n];
        d[s] = Some(0);
        for _ in 0..n {
            for a in arcs {
                if let Some(x) = d[a.from] {
                    if d[a.to].is_none_or(|y| x + a.weight < y) {
                        d[a.to] = Some(x + a.weight);
                    }
                }
            }
        }
        for a in arcs {
            if let (Some(x), Some(y)) = (d[a.from], d[a.to]) {
                if x + a.weight < y {
                    return None;
                }
            }
        }
        Some(d)
    }

    #[test]
    fn simple_distances() {
        let g = arcs(&[(0, 1, 2), (0, 3, 4), (1, 2, 1), (1, 5, 7), (2, 4, 5), (4, 5, 1), (3, 4, 1)]);
        let p = shortest_paths(6, &g, 0).unwrap();
        assert_eq!(p.dist, vec![Some(0), Some(2), Some(3), Some(4), Some(5), Some(6)]);
    }

    #[test]
    fn negative_cycle_is_extracted() {
        let g = arcs(&[(0, 1, 1), (1, 2, -1), (2, 3, -1), (3, 1, 1), (3, 4, 0)]);
        let c = shortest_paths(5, &g, 0).unwrap_err();
        assert_eq!(c.total, -1);
        let mut nodes = c.nodes.clone();
        nodes.sort();
        assert_eq!(nodes, vec![1, 2, 3]);
        let total: i64 = c.arcs.iter().map(|&k| g[k].weight).sum();
        assert_eq!(total, c.total);
        for (i, &k) in c.arcs.iter().enumerate() {
            assert_eq!(g[k].from, c.nodes[i]);
            assert_eq!(g[k].to, c.nodes[(i + 1) % c.nodes.len()]);
        }
    }

    #[test]
    fn unreachable_cycle_is_ignored() {
        let g = arcs(&[(0, 1, 1), (2, 3, -1), (3, 2, -1)]);
        let p = shortest_paths(4, &g, 0).unwrap();
        assert_eq!(p.dist, vec![Some(0), Some(1), None, None]);
    }

    proptest! {
        #[test]
        fn agrees_with_textbook(
            n in 1usize..8,
            raw in proptest::collection::vec((0usize..8, 0usize..8, -3i64..6), 0..24),
        ) {
            let g: Vec<_> = raw.into_iter().filter(|(a, b, _)| *a < n && *b < n)
                .map(|(a, b, w)| WeightedArc::new(a, b, w)).collect();
            let ours = shortest_paths(n, &g, 0);
            match textbook(n, &g, 0) {
                Some(d) => prop_assert_eq!(ours.unwrap().dist, d),
                None => {
                    let c = ours.unwrap_err();
                    let total: i64 = c.arcs.iter().map(|&k| g[k].weight).sum();
                    prop_assert!(total < 0);
                }
            }
        }

        #[test]
        fn float_and_integer_weights_agree(
            n in 1usize..7,
            raw in proptest::collection::vec((0usize..7, 0usize..7, -2i64..5), 0..20),
        ) {
            let gi: Vec<_> = raw.iter().filter(|(a, b, _)| *a < n && *b < n)
                .map(|&(a, b, w)| WeightedArc::new(a, b, w)).collect();
            let gf: Vec<_> = gi.iter().map(|a| WeightedArc::new(a.from, a.to, a.weight as f64)).collect();
            match (shortest_paths(n, &gi, 0), shortest_paths(n, &gf, 0)) {
                (Ok(a), Ok(b)) => {
                    let conv: Vec<_> = a.dist.iter().map(|d| d.map(|x| x as f64)).collect();
                    prop_assert_eq!(conv, b.dist);
                }
                (Err(_), Err(_)) => {}
                (a, b) => prop_assert!(false, "verdicts differ: {:?} vs {:?}", a.is_ok(), b.is_ok()),
            }
        }
    }
}
