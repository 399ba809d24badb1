//! Symmetric edge colorings of the complete graph on `0..n`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::palette::{ColorSet, MAX_COLORS};

/// Number of unordered pairs on `n` vertices.
#[inline]
pub const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// A total coloring `[n]^2 -> lambda`.
///
/// Colors are stored once per unordered pair in lexicographic order, so
/// `color(a, b) == color(b, a)` holds by construction.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Coloring {
    n: usize,
    lambda: u32,
    colors: Vec<u8>,
}

impl Coloring {
    /// Builds a coloring from an explicit list of `(a, b, color)` entries that
    /// must cover every pair exactly once.
    pub fn new(n: usize, lambda: u32, entries: &[(usize, usize, u32)]) -> Result<Self> {
        check_lambda(lambda)?;
        let mut colors: Vec<Option<u8>> = vec![None; pair_count(n)];
        for &(a, b, color) in entries {
            if a == b {
                return Err(Error::SelfPair(a));
            }
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            if b >= n {
                return Err(Error::VertexOutOfRange { vertex: b, n });
            }
            if color >= lambda {
                return Err(Error::ColorOutOfRange { color, lambda });
            }
            let slot = &mut colors[pair_index(n, a, b)];
            if slot.is_some() {
                return Err(Error::DuplicatePair(a, b));
            }
            *slot = Some(color as u8);
        }
        let mut out = Vec::with_capacity(colors.len());
        let mut pairs = lex_pairs(n);
        for slot in colors {
            let (a, b) = pairs.next().unwrap();
            out.push(slot.ok_or(Error::MissingPair(a, b))?);
        }
        Ok(Coloring { n, lambda, colors: out })
    }

    /// Builds a coloring by evaluating `f(a, b)` for every `a < b`.
    pub fn from_fn(n: usize, lambda: u32, mut f: impl FnMut(usize, usize) -> u32) -> Result<Self> {
        check_lambda(lambda)?;
        let mut colors = Vec::with_capacity(pair_count(n));
        for (a, b) in lex_pairs(n) {
            let color = f(a, b);
            if color >= lambda {
                return Err(Error::ColorOutOfRange { color, lambda });
            }
            colors.push(color as u8);
        }
        Ok(Coloring { n, lambda, colors })
    }

    /// Builds a coloring from its colors listed in lexicographic pair order.
    pub fn from_lex_colors(n: usize, lambda: u32, lex: &[u8]) -> Result<Self> {
        check_lambda(lambda)?;
        if lex.len() != pair_count(n) {
            return Err(Error::Parameter("color list length is not n(n-1)/2"));
        }
        if let Some(&c) = lex.iter().find(|&&c| u32::from(c) >= lambda) {
            return Err(Error::ColorOutOfRange { color: c.into(), lambda });
        }
        Ok(Coloring { n, lambda, colors: lex.to_vec() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    /// Color of the pair `{a, b}`.
    ///
    /// Panics if `a == b` or either vertex is out of range.
    #[inline]
    pub fn color(&self, a: usize, b: usize) -> u32 {
        assert!(a != b && a < self.n && b < self.n, "bad pair ({a},{b})");
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        u32::from(self.colors[pair_index(self.n, a, b)])
    }

    /// Colors in lexicographic pair order.
    pub fn lex_colors(&self) -> &[u8] {
        &self.colors
    }

    /// `(a, b, color)` for every `a < b`, lexicographically.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        lex_pairs(self.n).zip(self.colors.iter()).map(|((a, b), &c)| (a, b, u32::from(c)))
    }

    /// Colors realized on the pairs of `set`.
    pub fn colors_on(&self, set: &[usize]) -> ColorSet {
        let mut seen = ColorSet::EMPTY;
        for (i, &a) in set.iter().enumerate() {
            for &b in &set[i + 1..] {
                seen.insert(self.color(a, b));
            }
        }
        seen
    }

    /// Restricts to the ascending vertex list `universe`; new vertex `i`
    /// stands for `universe[i]`. Returns the restriction and that index map.
    pub fn restrict(&self, universe: &[usize]) -> Result<(Coloring, Vec<usize>)> {
        check_ascending(universe, self.n)?;
        let sub = Coloring::from_fn(universe.len(), self.lambda, |i, j| {
            self.color(universe[i], universe[j])
        })?;
        Ok((sub, universe.to_vec()))
    }

    /// Maps every color through the bijection `perm` on `0..lambda`.
    pub fn permute_colors(&self, perm: &[u32]) -> Result<Coloring> {
        if perm.len() != self.lambda as usize {
            return Err(Error::NotBijective);
        }
        let mut hit = ColorSet::EMPTY;
        for &p in perm {
            if p >= self.lambda || hit.contains(p) {
                return Err(Error::NotBijective);
            }
            hit.insert(p);
        }
        let colors = self.colors.iter().map(|&c| perm[c as usize] as u8).collect();
        Ok(Coloring { n: self.n, lambda: self.lambda, colors })
    }

    /// Relabels colors by order of first appearance in lexicographic pair
    /// order (a restricted-growth string). Constant on color-permutation
    /// orbits and idempotent.
    pub fn canonical_color_form(&self) -> Coloring {
        let mut relabel = [u8::MAX; MAX_COLORS as usize];
        let mut next = 0u8;
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                let slot = &mut relabel[c as usize];
                if *slot == u8::MAX {
                    *slot = next;
                    next += 1;
                }
                *slot
            })
            .collect();
        Coloring { n: self.n, lambda: self.lambda, colors }
    }

    pub fn is_canonical(&self) -> bool {
        let mut next = 0u8;
        for &c in &self.colors {
            if c > next {
                return false;
            }
            if c == next {
                next += 1;
            }
        }
        true
    }
}

#[inline]
pub(crate) fn pair_index(n: usize, a: usize, b: usize) -> usize {
    debug_assert!(a < b && b < n);
    a * (2 * n - a - 1) / 2 + (b - a - 1)
}

/// Pairs `a < b < n` in lexicographic order.
pub fn lex_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| (a + 1..n).map(move |b| (a, b)))
}

fn check_lambda(lambda: u32) -> Result<()> {
    if lambda == 0 || lambda > MAX_COLORS {
        return Err(Error::BadColorCount(lambda));
    }
    Ok(())
}

/// Checks that `set` is strictly ascending and below `n`.
pub fn check_ascending(set: &[usize], n: usize) -> Result<()> {
    if set.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NotAscending);
    }
    match set.last() {
        Some(&v) if v >= n => Err(Error::VertexOutOfRange { vertex: v, n }),
        _ => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_pairs(n: usize, color: u32) -> Vec<(usize, usize, u32)> {
        lex_pairs(n).map(|(a, b)| (a, b, color)).collect()
    }

    #[test]
    fn single_edge() {
        let c = Coloring::new(2, 2, &[(0, 1, 1)]).unwrap();
        assert_eq!(c.color(0, 1), 1);
        assert_eq!(c.color(1, 0), 1);
    }

    #[test]
    fn constant() {
        let c = Coloring::new(3, 1, &all_pairs(3, 0)).unwrap();
        assert!(c.pairs().all(|(_, _, col)| col == 0));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Coloring::new(3, 2, &[(0, 1, 0), (0, 2, 1)]),
            Err(Error::MissingPair(1, 2))
        );
        assert_eq!(
            Coloring::new(2, 2, &[(0, 1, 0), (1, 0, 1)]),
            Err(Error::DuplicatePair(0, 1))
        );
        assert_eq!(
            Coloring::new(2, 2, &[(0, 1, 2)]),
            Err(Error::ColorOutOfRange { color: 2, lambda: 2 })
        );
        assert_eq!(Coloring::new(2, 2, &[(1, 1, 0)]), Err(Error::SelfPair(1)));
        assert_eq!(Coloring::new(2, 0, &[]), Err(Error::BadColorCount(0)));
        assert!(matches!(
            Coloring::new(2, 2, &[(0, 2, 0)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn empty_and_single_vertex() {
        assert_eq!(Coloring::new(0, 1, &[]).unwrap().pairs().count(), 0);
        assert_eq!(Coloring::new(1, 3, &[]).unwrap().pairs().count(), 0);
    }

    #[test]
    fn pair_index_is_lex_rank() {
        for n in 0..9 {
            for (rank, (a, b)) in lex_pairs(n).enumerate() {
                assert_eq!(pair_index(n, a, b), rank);
            }
        }
    }

    #[test]
    fn restrict_examples() {
        let c = Coloring::from_fn(5, 3, |a, b| ((a * 7 + b) % 3) as u32).unwrap();
        let (same, map) = c.restrict(&[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(same, c);
        assert_eq!(map, [0, 1, 2, 3, 4]);
        let (two, map) = c.restrict(&[1, 3]).unwrap();
        assert_eq!(two.n(), 2);
        assert_eq!(two.color(0, 1), c.color(1, 3));
        assert_eq!(map, [1, 3]);
        assert_eq!(c.restrict(&[3, 1]), Err(Error::NotAscending));
        assert!(c.restrict(&[1, 5]).is_err());
    }

    #[test]
    fn permute_examples() {
        let c = Coloring::new(2, 2, &[(0, 1, 0)]).unwrap();
        assert_eq!(c.permute_colors(&[0, 1]).unwrap(), c);
        assert_eq!(c.permute_colors(&[1, 0]).unwrap().color(0, 1), 1);
        assert_eq!(c.permute_colors(&[1, 1]), Err(Error::NotBijective));
        assert_eq!(c.permute_colors(&[0]), Err(Error::NotBijective));
    }

    #[test]
    fn canonical_examples() {
        let c = Coloring::new(3, 4, &all_pairs(3, 3)).unwrap();
        let canon = c.canonical_color_form();
        assert!(canon.pairs().all(|(_, _, col)| col == 0));
        assert_eq!(canon.canonical_color_form(), canon);
        assert!(canon.is_canonical());
        assert!(!c.is_canonical());
    }

    fn permutations(k: u32) -> Vec<Vec<u32>> {
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(k - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, k - 1);
                out.push(q);
            }
        }
        out
    }

    // Every coloring with n <= 4 and lambda <= 3, all permutations, plus a
    // seeded sweep for lambda = 4, n = 5.
    #[test]
    fn canonical_form_constant_on_orbits() {
        for lambda in 1..=3u32 {
            for n in 2..=4usize {
                let pairs = pair_count(n);
                let total = (lambda as usize).pow(pairs as u32);
                for code in 0..total {
                    let mut x = code;
                    let lex: Vec<u8> = (0..pairs)
                        .map(|_| {
                            let d = (x % lambda as usize) as u8;
                            x /= lambda as usize;
                            d
                        })
                        .collect();
                    let c = Coloring::from_lex_colors(n, lambda, &lex).unwrap();
                    let canon = c.canonical_color_form();
                    assert_eq!(canon.canonical_color_form(), canon);
                    for p in permutations(lambda) {
                        let moved = c.permute_colors(&p).unwrap();
                        assert_eq!(moved.canonical_color_form(), canon);
                    }
                }
            }
        }
        let perms = permutations(4);
        for seed in 0..200u64 {
            let c = Coloring::from_fn(5, 4, |a, b| {
                ((seed.wrapping_mul(2654435761) >> ((a * 5 + b) % 29)) % 4) as u32
            })
            .unwrap();
            let canon = c.canonical_color_form();
            for p in &perms {
                assert_eq!(c.permute_colors(p).unwrap().canonical_color_form(), canon);
            }
        }
    }
}
