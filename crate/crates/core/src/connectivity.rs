//! Vertex connectivity under the removal definition: `G` is `kappa`-connected
//! when `G \ Y` is connected for every `Y` with `|Y| < kappa`.
//!
//! Graphs on zero or one vertex count as connected, so removals that leave at
//! most one vertex never witness a failure. Under that convention a finite
//! graph is highly connected (`|G|`-connected) exactly when it is complete.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::palette::ColorSet;

/// A finite simple graph on an ascending list of vertex labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<usize>,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    /// Edges may be given in either orientation; duplicates collapse.
    pub fn new(vertices: Vec<usize>, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotAscending);
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::SelfPair(a));
            }
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            for v in [a, b] {
                if vertices.binary_search(&v).is_err() {
                    return Err(Error::VertexOutOfRange { vertex: v, n: vertices.len() });
                }
            }
            set.insert((a, b));
        }
        Ok(Graph { vertices, edges: set })
    }

    pub fn complete(vertices: Vec<usize>) -> Self {
        let mut edges = BTreeSet::new();
        for (i, &a) in vertices.iter().enumerate() {
            for &b in &vertices[i + 1..] {
                edges.insert((a, b));
            }
        }
        Graph { vertices, edges }
    }

    /// The graph on `x` whose edges are the pairs colored in `palette`.
    pub fn palette_subgraph(c: &Coloring, x: &[usize], palette: ColorSet) -> Self {
        let mut edges = BTreeSet::new();
        for (i, &a) in x.iter().enumerate() {
            for &b in &x[i + 1..] {
                if palette.contains(c.color(a, b)) {
                    edges.insert((a, b));
                }
            }
        }
        Graph { vertices: x.to_vec(), edges }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let key = if a < b { (a, b) } else { (b, a) };
        self.edges.contains(&key)
    }

    pub fn is_complete(&self) -> bool {
        let k = self.vertices.len();
        self.edges.len() == k * k.saturating_sub(1) / 2
    }

    /// Dense adjacency over local indices `0..order()`.
    fn local_adjacency(&self) -> Vec<Vec<bool>> {
        let k = self.vertices.len();
        let mut adj = vec![vec![false; k]; k];
        for &(a, b) in &self.edges {
            let i = self.vertices.binary_search(&a).unwrap();
            let j = self.vertices.binary_search(&b).unwrap();
            adj[i][j] = true;
            adj[j][i] = true;
        }
        adj
    }
}

/// Connected on the vertices not flagged in `removed`.
fn connected_without(adj: &[Vec<bool>], removed: &[bool]) -> bool {
    let k = adj.len();
    let Some(start) = (0..k).find(|&v| !removed[v]) else {
        return true;
    };
    let mut seen = removed.to_vec();
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for w in 0..k {
            if adj[v][w] && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// Every two vertices are joined by a path.
pub fn is_connected(g: &Graph) -> bool {
    let adj = g.local_adjacency();
    connected_without(&adj, &vec![false; adj.len()])
}

/// Exhaustive check over every removal set of size `< kappa`.
pub fn kappa_connected_bruteforce(g: &Graph, kappa: usize) -> bool {
    if kappa == 0 {
        return true;
    }
    let adj = g.local_adjacency();
    let k = adj.len();
    let max_removed = kappa.saturating_sub(1).min(k);
    let mut removed = vec![false; k];
    (0..=max_removed).all(|size| all_removals(&adj, &mut removed, 0, size))
}

fn all_removals(adj: &[Vec<bool>], removed: &mut [bool], from: usize, left: usize) -> bool {
    if left == 0 {
        return connected_without(adj, removed);
    }
    for v in from..=adj.len() - left {
        removed[v] = true;
        let ok = all_removals(adj, removed, v + 1, left - 1);
        removed[v] = false;
        if !ok {
            return false;
        }
    }
    true
}

/// Min-vertex-cut decision: a complete graph is `kappa`-connected for every
/// `kappa`; otherwise the graph is `kappa`-connected iff every non-adjacent
/// pair is joined by at least `kappa` internally disjoint paths.
pub fn kappa_connected_fast(g: &Graph, kappa: usize) -> bool {
    if g.is_complete() || kappa == 0 {
        return true;
    }
    let adj = g.local_adjacency();
    let k = adj.len();
    // A non-universal vertex of degree < kappa is cut off by its neighborhood.
    for row in &adj {
        let degree = row.iter().filter(|&&e| e).count();
        if degree < kappa && degree < k - 1 {
            return false;
        }
    }
    let mut flow = UnitFlow::new(&adj);
    for s in 0..k {
        for t in s + 1..k {
            if !adj[s][t] && flow.disjoint_paths(s, t, kappa) < kappa {
                return false;
            }
        }
    }
    true
}

/// `|G|`-connected.
pub fn is_highly_connected(g: &Graph) -> bool {
    kappa_connected_fast(g, g.order())
}

/// Vertex-split unit-capacity flow network. Node `2v` is the entry of `v`,
/// `2v + 1` its exit; the internal arc carries one unit.
struct UnitFlow {
    size: usize,
    base: Vec<i32>,
    cap: Vec<i32>,
    adj: Vec<Vec<usize>>,
}

const INF: i32 = i32::MAX / 4;

impl UnitFlow {
    fn new(graph: &[Vec<bool>]) -> Self {
        let k = graph.len();
        let size = 2 * k;
        let mut base = vec![0; size * size];
        let mut adj = vec![Vec::new(); size];
        let link = |base: &mut Vec<i32>, adj: &mut Vec<Vec<usize>>, u: usize, w: usize, c: i32| {
            base[u * size + w] = c;
            adj[u].push(w);
            adj[w].push(u);
        };
        for v in 0..k {
            link(&mut base, &mut adj, 2 * v, 2 * v + 1, 1);
            for w in 0..k {
                if graph[v][w] {
                    link(&mut base, &mut adj, 2 * v + 1, 2 * w, INF);
                }
            }
        }
        let cap = base.clone();
        UnitFlow { size, base, cap, adj }
    }

    /// Internally disjoint `s`-`t` paths, counted up to `limit`.
    fn disjoint_paths(&mut self, s: usize, t: usize, limit: usize) -> usize {
        self.cap.copy_from_slice(&self.base);
        let source = 2 * s + 1;
        let sink = 2 * t;
        let mut parent = vec![usize::MAX; self.size];
        let mut found = 0;
        while found < limit {
            parent.iter_mut().for_each(|p| *p = usize::MAX);
            parent[source] = source;
            let mut queue = VecDeque::from([source]);
            while let Some(u) = queue.pop_front() {
                if u == sink {
                    break;
                }
                for &w in &self.adj[u] {
                    if parent[w] == usize::MAX && self.cap[u * self.size + w] > 0 {
                        parent[w] = u;
                        queue.push_back(w);
                    }
                }
            }
            if parent[sink] == usize::MAX {
                break;
            }
            let mut w = sink;
            while w != source {
                let u = parent[w];
                self.cap[u * self.size + w] -= 1;
                self.cap[w * self.size + u] += 1;
                w = u;
            }
            found += 1;
        }
        found
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(k: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new((0..k).collect(), edges.iter().copied()).unwrap()
    }

    fn cycle(k: usize) -> Graph {
        graph(k, &(0..k).map(|i| (i, (i + 1) % k)).collect::<Vec<_>>())
    }

    #[test]
    fn connectedness_examples() {
        assert!(is_connected(&graph(1, &[])));
        assert!(is_connected(&graph(0, &[])));
        assert!(!is_connected(&graph(2, &[])));
        assert!(is_connected(&cycle(4)));
    }

    #[test]
    fn bruteforce_examples() {
        let k4 = Graph::complete((0..4).collect());
        assert!(kappa_connected_bruteforce(&k4, 4));
        assert!(!kappa_connected_bruteforce(&cycle(4), 3));
        assert!(kappa_connected_bruteforce(&cycle(4), 2));
        assert!(kappa_connected_bruteforce(&graph(1, &[]), 1));
    }

    #[test]
    fn fast_examples() {
        let k4 = Graph::complete((0..4).collect());
        assert!(kappa_connected_fast(&k4, 4));
        assert!(!kappa_connected_fast(&graph(3, &[(0, 1), (1, 2)]), 2));
        assert!(kappa_connected_fast(&cycle(4), 2));
        assert!(!kappa_connected_fast(&cycle(4), 3));
        // K2 with its edge: removals leave single vertices.
        assert!(kappa_connected_fast(&graph(2, &[(0, 1)]), 2));
        assert!(!kappa_connected_fast(&graph(2, &[]), 1));
    }

    #[test]
    fn highly_connected_examples() {
        assert!(is_highly_connected(&Graph::complete((0..5).collect())));
        assert!(!is_highly_connected(&cycle(4)));
        let k4_minus = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]);
        assert!(!is_highly_connected(&k4_minus));
        assert!(!kappa_connected_bruteforce(&k4_minus, 4));
    }

    #[test]
    fn labels_need_not_be_dense() {
        let g = Graph::new(vec![2, 5, 9], [(2, 5), (9, 5), (2, 9)]).unwrap();
        assert!(is_highly_connected(&g));
        assert!(Graph::new(vec![2, 5], [(2, 3)]).is_err());
        assert!(Graph::new(vec![5, 2], []).is_err());
        assert!(Graph::new(vec![2, 5], [(5, 5)]).is_err());
    }

    #[test]
    fn petersen_is_three_connected() {
        let outer: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let spokes: Vec<_> = (0..5).map(|i| (i, i + 5)).collect();
        let inner: Vec<_> = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5)).collect();
        let g = graph(10, &[outer, spokes, inner].concat());
        assert!(kappa_connected_fast(&g, 3));
        assert!(!kappa_connected_fast(&g, 4));
        assert!(kappa_connected_bruteforce(&g, 3));
        assert!(!kappa_connected_bruteforce(&g, 4));
    }
}
