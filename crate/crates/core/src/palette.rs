//! Color palettes and relation queries.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Most colors a [`ColorSet`] (and hence a coloring) can carry.
pub const MAX_COLORS: u32 = 64;

/// A set of colors `< 64`, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorSet(u64);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        ColorSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// All colors `0..lambda`.
    pub fn below(lambda: u32) -> Self {
        if lambda >= 64 {
            ColorSet(u64::MAX)
        } else {
            ColorSet((1u64 << lambda) - 1)
        }
    }

    pub fn single(color: u32) -> Self {
        debug_assert!(color < MAX_COLORS);
        ColorSet(1u64 << color)
    }

    #[inline]
    pub fn contains(self, color: u32) -> bool {
        color < MAX_COLORS && self.0 >> color & 1 == 1
    }

    pub fn insert(&mut self, color: u32) {
        debug_assert!(color < MAX_COLORS);
        self.0 |= 1u64 << color;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ColorSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Largest member plus one, or 0 when empty.
    pub fn span(self) -> u32 {
        64 - self.0.leading_zeros()
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = u32> {
        let mut bits = self.0;
        core::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let c = bits.trailing_zeros();
            bits &= bits - 1;
            Some(c)
        })
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.iter().collect()
    }
}

impl FromIterator<u32> for ColorSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        let mut set = ColorSet::EMPTY;
        for c in iter {
            set.insert(c);
        }
        set
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Size constraint attached to a palette.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Budget {
    /// `|members| <= k`
    AtMost(usize),
    /// `|members| < k`
    Below(usize),
    /// `members ⊆ 0..i`
    InitialSegment(u32),
}

impl Budget {
    pub fn admits(self, members: ColorSet) -> bool {
        match self {
            Budget::AtMost(k) => members.len() <= k,
            Budget::Below(k) => members.len() < k,
            Budget::InitialSegment(i) => members.is_subset(ColorSet::below(i)),
        }
    }
}

/// A set of colors together with the budget it was drawn under.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Palette {
    members: ColorSet,
    budget: Budget,
}

impl Palette {
    pub fn new(members: ColorSet, budget: Budget) -> Result<Self> {
        if !budget.admits(members) {
            return Err(Error::BudgetViolated);
        }
        Ok(Palette { members, budget })
    }

    /// Palette whose budget is exactly its own size.
    pub fn exact(members: ColorSet) -> Self {
        Palette {
            members,
            budget: Budget::AtMost(members.len()),
        }
    }

    pub fn from_colors(colors: &[u32]) -> Self {
        Palette::exact(colors.iter().copied().collect())
    }

    pub fn members(&self) -> ColorSet {
        self.members
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    #[inline]
    pub fn contains(&self, color: u32) -> bool {
        self.members.contains(color)
    }

    /// Checks the palette against the color count of an ambient coloring.
    pub fn check_lambda(&self, lambda: u32) -> Result<()> {
        match self.members.iter().find(|&c| c >= lambda) {
            Some(color) => Err(Error::ColorOutOfRange { color, lambda }),
            None => Ok(()),
        }
    }
}

/// Which relation a query asks about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Classical,
    Hc,
    Wc,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Classical => "classical",
            Mode::Hc => "hc",
            Mode::Wc => "wc",
        }
    }
}

/// Parameters of a square-bracket relation instance: target size `m`,
/// palette budget `kappa` (palettes of at most `kappa` colors) and, for
/// `hc`, the connectivity demand `j` (`j == m` is "highly connected").
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RelationQuery {
    pub mode: Mode,
    pub m: usize,
    pub kappa: usize,
    pub j: usize,
}

impl RelationQuery {
    pub fn classical(m: usize, kappa: usize) -> Self {
        RelationQuery { mode: Mode::Classical, m, kappa, j: m }
    }

    pub fn hc(m: usize, kappa: usize, j: usize) -> Self {
        RelationQuery { mode: Mode::Hc, m, kappa, j }
    }

    pub fn wc(m: usize, kappa: usize) -> Self {
        RelationQuery { mode: Mode::Wc, m, kappa, j: m }
    }

    /// Validates the query against a vertex count.
    pub fn validate(&self, n: usize) -> Result<()> {
        if self.m < 2 {
            return Err(Error::Parameter("m must be at least 2"));
        }
        if self.m > n {
            return Err(Error::Parameter("m exceeds the vertex count"));
        }
        if self.mode == Mode::Hc && (self.j < 1 || self.j > self.m) {
            return Err(Error::Parameter("j must lie in 1..=m"));
        }
        Ok(())
    }
}
