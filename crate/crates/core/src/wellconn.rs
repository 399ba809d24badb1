//! Well-connectedness in a palette and the induced order `<_Λ`.
//!
//! `{a, b}` with `a < b` is well-connected in `Λ` when `b` is reachable from
//! `a` by a path whose vertices are all `>= a` and whose edges are all colored
//! in `Λ`. Paths may leave any ambient set; only the coloring's vertex range
//! bounds them. Reachability decides the question; BFS parents then give a
//! path with pairwise distinct vertices.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::certificate::WcCertificate;
use crate::coloring::{check_ascending, Coloring};
use crate::error::{Error, Result};
use crate::palette::{ColorSet, Palette};

/// BFS parents from `source` over vertices `>= source` and `palette` edges.
/// `parent[v] == usize::MAX` marks unreached vertices.
fn search_from(c: &Coloring, source: usize, palette: ColorSet) -> Vec<usize> {
    let n = c.n();
    let mut parent = vec![usize::MAX; n];
    parent[source] = source;
    if palette.is_empty() {
        return parent;
    }
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for w in source..n {
            if w != u && parent[w] == usize::MAX && palette.contains(c.color(u, w)) {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    parent
}

fn trace(parent: &[usize], source: usize, target: usize) -> Vec<usize> {
    let mut path = vec![target];
    let mut v = target;
    while v != source {
        v = parent[v];
        path.push(v);
    }
    path.reverse();
    path
}

/// A witnessing path from `alpha` to `beta`, if the pair is well-connected.
pub fn wc_pair(c: &Coloring, alpha: usize, beta: usize, palette: ColorSet) -> Result<Option<Vec<usize>>> {
    if beta >= c.n() {
        return Err(Error::VertexOutOfRange { vertex: beta, n: c.n() });
    }
    if alpha >= beta {
        return Err(Error::NotAscending);
    }
    let parent = search_from(c, alpha, palette);
    Ok((parent[beta] != usize::MAX).then(|| trace(&parent, alpha, beta)))
}

/// Certificate that every pair of `x` is well-connected in `palette`, or
/// `None` when some pair is not. Sets of size at most one qualify vacuously.
pub fn is_wc_set(c: &Coloring, x: &[usize], palette: &Palette) -> Result<Option<WcCertificate>> {
    check_ascending(x, c.n())?;
    palette.check_lambda(c.lambda())?;
    let mut paths = BTreeMap::new();
    for (i, &alpha) in x.iter().enumerate() {
        if i + 1 == x.len() {
            break;
        }
        let parent = search_from(c, alpha, palette.members());
        for &beta in &x[i + 1..] {
            if parent[beta] == usize::MAX {
                return Ok(None);
            }
            paths.insert((alpha, beta), trace(&parent, alpha, beta));
        }
    }
    Ok(Some(WcCertificate {
        n: c.n(),
        lambda: c.lambda(),
        x: x.to_vec(),
        palette: *palette,
        paths,
    }))
}

/// The relation `a <_Λ b` materialized as a dense matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WcOrder {
    n: usize,
    palette: ColorSet,
    rel: Vec<bool>,
}

impl WcOrder {
    pub fn new(c: &Coloring, palette: ColorSet) -> Self {
        let n = c.n();
        let mut rel = vec![false; n * n];
        for a in 0..n {
            let parent = search_from(c, a, palette);
            for b in a + 1..n {
                rel[a * n + b] = parent[b] != usize::MAX;
            }
        }
        WcOrder { n, palette, rel }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn palette(&self) -> ColorSet {
        self.palette
    }

    #[inline]
    pub fn related(&self, a: usize, b: usize) -> bool {
        self.rel[a * self.n + b]
    }

    /// All related pairs `(a, b)`, lexicographically.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |a| (a + 1..n).filter(move |&b| self.related(a, b)).map(move |b| (a, b)))
    }

    /// `<_Λ`-predecessors of `b`, ascending.
    pub fn predecessors(&self, b: usize) -> Vec<usize> {
        (0..b).filter(|&a| self.related(a, b)).collect()
    }

    /// Every pair of the ascending list `x` is related.
    pub fn is_chain(&self, x: &[usize]) -> bool {
        x.iter()
            .enumerate()
            .all(|(i, &a)| x[i + 1..].iter().all(|&b| self.related(a, b)))
    }

    /// Longest chain, lexicographically least among those of maximum size.
    ///
    /// Relies on transitivity of the relation: a path in the DAG of related
    /// pairs is then a chain.
    pub fn longest_chain(&self) -> Vec<usize> {
        let n = self.n;
        // height[v] = longest chain starting at v
        let mut height = vec![1usize; n];
        for v in (0..n).rev() {
            for w in v + 1..n {
                if self.related(v, w) && height[w] + 1 > height[v] {
                    height[v] = height[w] + 1;
                }
            }
        }
        let Some(&best) = height.iter().max() else {
            return Vec::new();
        };
        let mut chain = Vec::with_capacity(best);
        let mut v = height.iter().position(|&h| h == best).unwrap();
        chain.push(v);
        while height[v] > 1 {
            v = (v + 1..n).find(|&w| self.related(v, w) && height[w] == height[v] - 1).unwrap();
            chain.push(v);
        }
        chain
    }

    /// Strict partial order whose predecessor sets are linearly ordered.
    pub fn is_tree(&self) -> bool {
        let n = self.n;
        for a in 0..n {
            for b in a + 1..n {
                if !self.related(a, b) {
                    continue;
                }
                for c in b + 1..n {
                    if self.related(b, c) && !self.related(a, c) {
                        return false;
                    }
                    // a and b both below c must be comparable
                    if self.related(a, c) && self.related(b, c) && !self.related(a, b) {
                        return false;
                    }
                }
            }
        }
        for c in 0..n {
            let preds = self.predecessors(c);
            if !self.is_chain(&preds) {
                return false;
            }
        }
        true
    }
}

pub fn wc_order(c: &Coloring, palette: ColorSet) -> WcOrder {
    WcOrder::new(c, palette)
}

/// A maximum-size set well-connected in `palette`.
pub fn longest_wc_set(c: &Coloring, palette: ColorSet) -> Vec<usize> {
    WcOrder::new(c, palette).longest_chain()
}

pub fn tree_check(c: &Coloring, palette: ColorSet) -> bool {
    WcOrder::new(c, palette).is_tree()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{constant_coloring, delta_coloring};

    fn tri(c01: u32, c02: u32, c12: u32) -> Coloring {
        Coloring::new(3, 2, &[(0, 1, c01), (0, 2, c02), (1, 2, c12)]).unwrap()
    }

    #[test]
    fn pair_examples() {
        let c = tri(1, 0, 0);
        assert_eq!(wc_pair(&c, 0, 1, ColorSet::single(0)).unwrap(), Some(vec![0, 2, 1]));
        let c = tri(0, 0, 1);
        assert_eq!(wc_pair(&c, 1, 2, ColorSet::single(0)).unwrap(), None);
        assert_eq!(wc_pair(&c, 1, 2, ColorSet::single(1)).unwrap(), Some(vec![1, 2]));
        assert!(wc_pair(&c, 2, 1, ColorSet::single(0)).is_err());
        assert!(wc_pair(&c, 1, 3, ColorSet::single(0)).is_err());
    }

    #[test]
    fn set_examples() {
        let k = constant_coloring(5, 0, 1).unwrap();
        let cert = is_wc_set(&k, &[0, 2, 4], &Palette::from_colors(&[0])).unwrap().unwrap();
        assert!(cert.paths.values().all(|p| p.len() == 2));

        let d = delta_coloring(2).unwrap();
        let zero = Palette::from_colors(&[0]);
        let cert = is_wc_set(&d, &[0, 1, 2], &zero).unwrap().unwrap();
        assert_eq!(cert.paths[&(0, 1)], [0, 2, 1]);
        assert!(is_wc_set(&d, &[0, 1, 2, 3], &zero).unwrap().is_none());
        assert!(is_wc_set(&d, &[3], &zero).unwrap().is_some());
        assert!(is_wc_set(&d, &[], &Palette::from_colors(&[])).unwrap().is_some());
        assert!(is_wc_set(&d, &[2, 1], &zero).is_err());
    }

    #[test]
    fn order_examples() {
        let k = constant_coloring(4, 0, 1).unwrap();
        assert_eq!(wc_order(&k, ColorSet::single(0)).pairs().count(), 6);
        let d = delta_coloring(2).unwrap();
        let rel: Vec<_> = wc_order(&d, ColorSet::single(0)).pairs().collect();
        assert_eq!(rel, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]);
        assert_eq!(wc_order(&d, ColorSet::EMPTY).pairs().count(), 0);
    }

    #[test]
    fn longest_examples() {
        let k = constant_coloring(5, 0, 1).unwrap();
        assert_eq!(longest_wc_set(&k, ColorSet::single(0)), [0, 1, 2, 3, 4]);
        let d = delta_coloring(2).unwrap();
        assert_eq!(longest_wc_set(&d, ColorSet::single(0)), [0, 1, 2]);
        let one = constant_coloring(1, 0, 1).unwrap();
        assert_eq!(longest_wc_set(&one, ColorSet::single(0)), [0]);
        let none = constant_coloring(0, 0, 1).unwrap();
        assert!(longest_wc_set(&none, ColorSet::single(0)).is_empty());
        // Empty palette: singletons only.
        assert_eq!(longest_wc_set(&k, ColorSet::EMPTY), [0]);
    }

    #[test]
    fn tree_examples() {
        assert!(tree_check(&constant_coloring(5, 0, 1).unwrap(), ColorSet::single(0)));
        let d = delta_coloring(2).unwrap();
        for bits in 0..4 {
            assert!(tree_check(&d, ColorSet::from_bits(bits)));
        }
    }
}
