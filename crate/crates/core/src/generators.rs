//! Coloring constructors and set-family utilities.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::Coloring;
use crate::error::{Error, Result};

/// Largest string length accepted by [`delta_coloring`].
pub const MAX_DELTA_LEN: u32 = 12;

/// Vertex `v` of a Δ coloring read as a binary string of length `ell`, most
/// significant bit at position 0, so vertex order is lexicographic string
/// order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StringVertexMap {
    pub ell: u32,
}

impl StringVertexMap {
    pub fn len(&self) -> usize {
        1usize << self.ell
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Bit of `v` at string position `i`.
    pub fn bit(&self, v: usize, i: u32) -> bool {
        debug_assert!(i < self.ell);
        v >> (self.ell - 1 - i) & 1 == 1
    }

    pub fn string(&self, v: usize) -> Vec<bool> {
        (0..self.ell).map(|i| self.bit(v, i)).collect()
    }

    pub fn vertex(&self, bits: &[bool]) -> Option<usize> {
        if bits.len() != self.ell as usize {
            return None;
        }
        Some(bits.iter().fold(0, |acc, &b| acc << 1 | usize::from(b)))
    }

    /// First position where the strings of `u != v` differ.
    pub fn first_difference(&self, u: usize, v: usize) -> u32 {
        debug_assert!(u != v);
        self.ell - 1 - (usize::BITS - 1 - (u ^ v).leading_zeros())
    }
}

/// The coloring of pairs of binary strings of length `ell` by their first
/// differing position: `2^ell` vertices, `ell` colors.
pub fn delta_coloring(ell: u32) -> Result<Coloring> {
    if ell == 0 {
        return Err(Error::Parameter("string length must be positive"));
    }
    if ell > MAX_DELTA_LEN {
        return Err(Error::Parameter("string length too large"));
    }
    let map = StringVertexMap { ell };
    Coloring::from_fn(map.len(), ell, |u, v| map.first_difference(u, v))
}

/// Uniform coloring driven by a ChaCha8 stream seeded with `seed`; pairs are
/// drawn in lexicographic order.
pub fn random_coloring(n: usize, lambda: u32, seed: u64) -> Result<Coloring> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if lambda == 0 {
        return Err(Error::BadColorCount(0));
    }
    Coloring::from_fn(n, lambda, |_, _| rng.gen_range(0..lambda))
}

pub fn constant_coloring(n: usize, color: u32, lambda: u32) -> Result<Coloring> {
    if color >= lambda {
        return Err(Error::ColorOutOfRange { color, lambda });
    }
    Coloring::from_fn(n, lambda, |_, _| color)
}

/// Class of each position in a hub coloring: positions alternate between
/// class 0 and class 1 until one class is used up; the rest go to the other.
pub fn hub_classes(n0: usize, n1: usize) -> Vec<u8> {
    let mut left = [n0, n1];
    let mut out = Vec::with_capacity(n0 + n1);
    let mut turn = 0usize;
    while left[0] + left[1] > 0 {
        if left[turn] == 0 {
            turn ^= 1;
        }
        out.push(turn as u8);
        left[turn] -= 1;
        turn ^= 1;
    }
    out
}

fn index_bits(size: usize) -> u32 {
    // ceil(log2(size)), at least 1
    let mut bits = 1;
    while (1usize << bits) < size {
        bits += 1;
    }
    bits
}

/// Two interleaved classes: crossing pairs get color 0, pairs inside a class
/// get `1 + Δ` of their class-local indices. `lambda = 1 + max` local string
/// length.
pub fn hub_coloring(n0: usize, n1: usize) -> Result<Coloring> {
    if n0 == 0 || n1 == 0 {
        return Err(Error::Parameter("hub classes must be nonempty"));
    }
    let classes = hub_classes(n0, n1);
    let widths = [index_bits(n0), index_bits(n1)];
    let mut local = vec![0usize; classes.len()];
    let mut seen = [0usize; 2];
    for (p, &k) in classes.iter().enumerate() {
        local[p] = seen[k as usize];
        seen[k as usize] += 1;
    }
    let lambda = 1 + widths[0].max(widths[1]);
    Coloring::from_fn(classes.len(), lambda, |a, b| {
        let (ka, kb) = (classes[a], classes[b]);
        if ka != kb {
            0
        } else {
            let map = StringVertexMap { ell: widths[ka as usize] };
            1 + map.first_difference(local[a], local[b])
        }
    })
}

/// `u` and `v` have the same size and every common element sits at the same
/// index in both. Inputs are ascending.
pub fn aligned(u: &[usize], v: &[usize]) -> bool {
    if u.len() != v.len() {
        return false;
    }
    u.iter()
        .enumerate()
        .all(|(i, x)| v.binary_search(x).map_or(true, |j| i == j))
}

/// A Δ-subsystem: indices into the family plus the common root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaSystem {
    pub members: Vec<usize>,
    pub root: Vec<usize>,
}

impl DeltaSystem {
    pub fn sets<'a>(&self, family: &'a [Vec<usize>]) -> Vec<&'a [usize]> {
        self.members.iter().map(|&i| family[i].as_slice()).collect()
    }
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|x| b.binary_search(x).is_ok()).collect()
}

fn disjoint(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_err())
}

/// Searches `family` for a Δ-system with at least `t` members.
///
/// Every Δ-system with two or more members has as root the intersection of
/// any two of its members, so the candidate roots are the pairwise
/// intersections, tried smallest first (then lexicographically). For each root
/// an exhaustive search finds a largest subfamily with pairwise disjoint
/// petals; the first root reaching `t` wins, members listed by index.
pub fn find_delta_subsystem(family: &[Vec<usize>], t: usize) -> Result<Option<DeltaSystem>> {
    if t < 2 {
        return Err(Error::Parameter("target size must be at least 2"));
    }
    let sets: Vec<Vec<usize>> = family
        .iter()
        .map(|s| {
            let mut s = s.clone();
            s.sort_unstable();
            s.dedup();
            s
        })
        .collect();
    if sets.windows(2).any(|w| w[0].len() != w[1].len()) {
        return Err(Error::UnequalSizes);
    }
    let mut roots = Vec::new();
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            roots.push(intersect(&sets[i], &sets[j]));
        }
    }
    roots.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    roots.dedup();

    for root in roots {
        let candidates: Vec<usize> = (0..sets.len())
            .filter(|&i| root.iter().all(|r| sets[i].binary_search(r).is_ok()))
            .collect();
        if candidates.len() < t {
            continue;
        }
        let petals: Vec<Vec<usize>> = candidates
            .iter()
            .map(|&i| sets[i].iter().copied().filter(|x| root.binary_search(x).is_err()).collect())
            .collect();
        let mut best = Vec::new();
        let mut current = Vec::new();
        pack(&petals, 0, &mut current, &mut best);
        if best.len() >= t {
            let members = best.into_iter().map(|k| candidates[k]).collect();
            return Ok(Some(DeltaSystem { members, root }));
        }
    }
    Ok(None)
}

/// Largest set of pairwise disjoint petals, first found in index order.
fn pack(petals: &[Vec<usize>], from: usize, current: &mut Vec<usize>, best: &mut Vec<usize>) {
    if current.len() > best.len() {
        best.clone_from(current);
    }
    if current.len() + (petals.len() - from) <= best.len() {
        return;
    }
    for k in from..petals.len() {
        if current.iter().all(|&c| disjoint(&petals[c], &petals[k])) {
            current.push(k);
            pack(petals, k + 1, current, best);
            current.pop();
        }
    }
}
