//! Deciding relation instances for a fixed coloring, and least-`n`
//! thresholds over all colorings.
//!
//! A palette of at most `kappa` colors can always be enlarged to exactly
//! `min(kappa, lambda)` colors without losing a witness, so only palettes of
//! that size are tried, in lexicographic order; the first witness wins.

use alloc::vec;
use alloc::vec::Vec;

use crate::certificate::{Certificate, HcCertificate};
use crate::coloring::{pair_count, Coloring};
use crate::connectivity::{kappa_connected_fast, Graph};
use crate::error::{Error, Result};
use crate::palette::{Budget, ColorSet, Mode, Palette, RelationQuery};
use crate::wellconn::{is_wc_set, WcOrder};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
}

/// One palette tried during a decision. `best` is the largest witness size
/// found under it, when the mode computes one (`wc` does).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PaletteRecord {
    pub palette: ColorSet,
    pub best: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecisionOutcome {
    pub verdict: Verdict,
    pub certificate: Option<Certificate>,
    /// Palettes exhausted without a witness, in the order tried.
    pub exhausted: Vec<PaletteRecord>,
}

impl DecisionOutcome {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }
}

/// All `k`-subsets of `0..lambda` with `k = min(kappa, lambda)`,
/// lexicographically.
pub fn palettes(lambda: u32, kappa: usize) -> Vec<ColorSet> {
    let k = kappa.min(lambda as usize);
    let mut out = Vec::new();
    let mut pick = Vec::with_capacity(k);
    fn rec(lambda: u32, k: usize, from: u32, pick: &mut Vec<u32>, out: &mut Vec<ColorSet>) {
        if pick.len() == k {
            out.push(pick.iter().copied().collect());
            return;
        }
        for c in from..lambda {
            if ((lambda - c) as usize) < k - pick.len() {
                break;
            }
            pick.push(c);
            rec(lambda, k, c + 1, pick, out);
            pick.pop();
        }
    }
    rec(lambda, k, 0, &mut pick, &mut out);
    out
}

fn certificate_palette(members: ColorSet, kappa: usize) -> Palette {
    Palette::new(members, Budget::AtMost(kappa)).unwrap_or_else(|_| Palette::exact(members))
}

fn hc_certificate(c: &Coloring, x: Vec<usize>, members: ColorSet, kappa: usize, j: usize) -> Certificate {
    let edges = Graph::palette_subgraph(c, &x, members).edges().collect();
    Certificate::Hc(HcCertificate {
        n: c.n(),
        lambda: c.lambda(),
        x,
        palette: certificate_palette(members, kappa),
        edges,
        j,
    })
}

/// Some `m`-set whose pairs all take colors from a palette of at most
/// `kappa` colors. The certificate is an `hc` certificate with `E = [X]^2`
/// and `j = m`.
pub fn decide_classical(c: &Coloring, m: usize, kappa: usize) -> Result<DecisionOutcome> {
    RelationQuery::classical(m, kappa).validate(c.n())?;
    let mut exhausted = Vec::new();
    for members in palettes(c.lambda(), kappa) {
        if let Some(x) = find_clique(c, members, m) {
            return Ok(DecisionOutcome {
                verdict: Verdict::Holds,
                certificate: Some(hc_certificate(c, x, members, kappa, m)),
                exhausted,
            });
        }
        exhausted.push(PaletteRecord { palette: members, best: None });
    }
    Ok(DecisionOutcome { verdict: Verdict::Fails, certificate: None, exhausted })
}

/// Lexicographically least `m`-clique of the `members`-colored graph.
fn find_clique(c: &Coloring, members: ColorSet, m: usize) -> Option<Vec<usize>> {
    fn grow(c: &Coloring, members: ColorSet, m: usize, chosen: &mut Vec<usize>, candidates: &[usize]) -> bool {
        if chosen.len() == m {
            return true;
        }
        for (k, &v) in candidates.iter().enumerate() {
            if chosen.len() + candidates.len() - k < m {
                return false;
            }
            let next: Vec<usize> = candidates[k + 1..]
                .iter()
                .copied()
                .filter(|&w| members.contains(c.color(v, w)))
                .collect();
            chosen.push(v);
            if grow(c, members, m, chosen, &next) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let all: Vec<usize> = (0..c.n()).collect();
    let mut chosen = Vec::with_capacity(m);
    grow(c, members, m, &mut chosen, &all).then_some(chosen)
}

/// Some `m`-set `X` and palette `Λ` of at most `kappa` colors such that `X`
/// with all its `Λ`-colored pairs as edges is `j`-connected. Taking every
/// `Λ`-colored pair as an edge loses nothing: adding edges preserves
/// connectivity.
pub fn decide_hc(c: &Coloring, m: usize, kappa: usize, j: usize) -> Result<DecisionOutcome> {
    RelationQuery::hc(m, kappa, j).validate(c.n())?;
    let mut exhausted = Vec::new();
    // In a j-connected graph on m vertices every vertex has degree at least
    // min(j, m - 1).
    let need = j.min(m - 1);
    for members in palettes(c.lambda(), kappa) {
        let mut search = HcSearch { c, members, m, j, need, chosen: Vec::with_capacity(m), degree: vec![0; m] };
        if search.run(0) {
            let x = search.chosen;
            return Ok(DecisionOutcome {
                verdict: Verdict::Holds,
                certificate: Some(hc_certificate(c, x, members, kappa, j)),
                exhausted,
            });
        }
        exhausted.push(PaletteRecord { palette: members, best: None });
    }
    Ok(DecisionOutcome { verdict: Verdict::Fails, certificate: None, exhausted })
}

struct HcSearch<'a> {
    c: &'a Coloring,
    members: ColorSet,
    m: usize,
    j: usize,
    need: usize,
    chosen: Vec<usize>,
    degree: Vec<usize>,
}

impl HcSearch<'_> {
    fn run(&mut self, from: usize) -> bool {
        let size = self.chosen.len();
        if size == self.m {
            let g = Graph::palette_subgraph(self.c, &self.chosen, self.members);
            return kappa_connected_fast(&g, self.j);
        }
        let slots = self.m - size;
        if self.degree[..size].iter().any(|&d| d + slots < self.need) {
            return false;
        }
        for v in from..=self.c.n() - slots {
            let mut own = 0;
            for (k, &u) in self.chosen.iter().enumerate() {
                if self.members.contains(self.c.color(u, v)) {
                    self.degree[k] += 1;
                    own += 1;
                }
            }
            self.degree[size] = own;
            self.chosen.push(v);
            let found = own + slots > self.need && self.run(v + 1);
            if found {
                return true;
            }
            self.chosen.pop();
            for (k, &u) in self.chosen.iter().enumerate() {
                if self.members.contains(self.c.color(u, v)) {
                    self.degree[k] -= 1;
                }
            }
        }
        false
    }
}

/// Some palette of at most `kappa` colors in which an `m`-set is
/// well-connected; the witness is the first `m` elements of the longest
/// `<_Λ` chain.
pub fn decide_wc(c: &Coloring, m: usize, kappa: usize) -> Result<DecisionOutcome> {
    RelationQuery::wc(m, kappa).validate(c.n())?;
    let mut exhausted = Vec::new();
    for members in palettes(c.lambda(), kappa) {
        let chain = WcOrder::new(c, members).longest_chain();
        if chain.len() >= m {
            let palette = certificate_palette(members, kappa);
            let cert = is_wc_set(c, &chain[..m], &palette)?.expect("chains are well-connected");
            return Ok(DecisionOutcome {
                verdict: Verdict::Holds,
                certificate: Some(Certificate::Wc(cert)),
                exhausted,
            });
        }
        exhausted.push(PaletteRecord { palette: members, best: Some(chain.len()) });
    }
    Ok(DecisionOutcome { verdict: Verdict::Fails, certificate: None, exhausted })
}

pub fn decide(c: &Coloring, query: &RelationQuery) -> Result<DecisionOutcome> {
    match query.mode {
        Mode::Classical => decide_classical(c, query.m, query.kappa),
        Mode::Hc => decide_hc(c, query.m, query.kappa, query.j),
        Mode::Wc => decide_wc(c, query.m, query.kappa),
    }
}

/// Colorings of `[n]^2` with at most `lambda` colors, one per
/// color-permutation orbit: the restricted-growth strings over the pairs in
/// lexicographic order, themselves in lexicographic order. Vertex
/// permutations are not quotiented.
#[derive(Clone, Debug)]
pub struct CanonicalColorings {
    n: usize,
    lambda: u32,
    digits: Vec<u8>,
    done: bool,
}

impl CanonicalColorings {
    pub fn new(n: usize, lambda: u32) -> Result<Self> {
        if lambda == 0 || lambda > crate::palette::MAX_COLORS {
            return Err(Error::BadColorCount(lambda));
        }
        Ok(CanonicalColorings { n, lambda, digits: vec![0; pair_count(n)], done: false })
    }

    fn advance(&mut self) {
        let len = self.digits.len();
        let mut prefix_max = vec![0u8; len];
        let mut running = 0u8;
        for (k, &d) in self.digits.iter().enumerate() {
            prefix_max[k] = running;
            running = running.max(d);
        }
        for k in (1..len).rev() {
            let next = self.digits[k] + 1;
            if next <= prefix_max[k] + 1 && u32::from(next) < self.lambda {
                self.digits[k] = next;
                self.digits[k + 1..].iter_mut().for_each(|d| *d = 0);
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for CanonicalColorings {
    type Item = Coloring;

    fn next(&mut self) -> Option<Coloring> {
        if self.done {
            return None;
        }
        let out = Coloring::from_lex_colors(self.n, self.lambda, &self.digits).ok()?;
        self.advance();
        Some(out)
    }
}

pub fn enumerate_colorings_canonical(n: usize, lambda: u32) -> Result<CanonicalColorings> {
    if n < 2 {
        return Err(Error::Parameter("n must be at least 2"));
    }
    CanonicalColorings::new(n, lambda)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamseyOutcome {
    /// Least `n` at which every coloring satisfies the relation.
    pub threshold: Option<usize>,
    /// With a threshold: the first failing coloring at `threshold - 1`.
    /// Without: the first failing coloring at `n_max`.
    pub extremal: Coloring,
    pub colorings_checked: u64,
}

/// Least `n <= n_max` such that every `lambda`-coloring of `[n]^2` satisfies
/// `query`, scanning canonical colorings level by level. `cap` bounds the
/// total number of colorings examined.
pub fn ramsey_number(query: &RelationQuery, lambda: u32, n_max: usize, cap: Option<u64>) -> Result<RamseyOutcome> {
    query.validate(query.m)?;
    if n_max < query.m {
        return Err(Error::Parameter("n_max must be at least m"));
    }
    let mut checked = 0u64;
    // Below m no set of size m exists, so the all-zero coloring fails.
    let mut failing = Coloring::from_fn(query.m - 1, lambda, |_, _| 0)?;
    for n in query.m..=n_max {
        let mut failure = None;
        for c in CanonicalColorings::new(n, lambda)? {
            if cap.is_some_and(|cap| checked >= cap) {
                return Err(Error::ResourceCap { checked });
            }
            checked += 1;
            if !decide(&c, query)?.holds() {
                failure = Some(c);
                break;
            }
        }
        match failure {
            Some(c) => failing = c,
            None => {
                return Ok(RamseyOutcome { threshold: Some(n), extremal: failing, colorings_checked: checked });
            }
        }
    }
    Ok(RamseyOutcome { threshold: None, extremal: failing, colorings_checked: checked })
}
