//! Ordinals below `w^d` in Cantor normal form and a coherent indexed club
//! system on their limit points.
//!
//! The clubs are final-segment intervals: `C(a, i) = [floor(a, i + 1), a)`
//! where `floor(a, k) = w^k * (a div w^k)` drops every CNF term of `a` with
//! exponent below `k`. The index floor `i(a)` is the least `i` with `C(a, i)`
//! nonempty, the index range is `i < d`, and `otp(C(a, i)) < w^(i+1)` plays
//! the part of the size bound.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coloring::Coloring;
use crate::error::{Error, Result};

/// An ordinal `w^e1*c1 + ... + w^ek*ck` with `e1 > ... > ek` and `ci >= 1`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct CnfOrdinal {
    terms: Vec<(u32, u64)>,
}

impl CnfOrdinal {
    pub fn zero() -> Self {
        CnfOrdinal { terms: Vec::new() }
    }

    pub fn finite(k: u64) -> Self {
        Self::term(0, k)
    }

    /// `w^exponent * coefficient`.
    pub fn term(exponent: u32, coefficient: u64) -> Self {
        if coefficient == 0 {
            return Self::zero();
        }
        CnfOrdinal { terms: Vec::from([(exponent, coefficient)]) }
    }

    pub fn from_terms(terms: Vec<(u32, u64)>) -> Result<Self> {
        if terms.iter().any(|&(_, c)| c == 0) {
            return Err(Error::Ordinal("zero coefficient"));
        }
        if terms.windows(2).any(|w| w[0].0 <= w[1].0) {
            return Err(Error::Ordinal("exponents not strictly descending"));
        }
        Ok(CnfOrdinal { terms })
    }

    /// Builds from per-exponent coefficients, `coefficients[e]` for `w^e`.
    pub fn from_coefficients(coefficients: &[u64]) -> Self {
        let terms = coefficients
            .iter()
            .enumerate()
            .rev()
            .filter(|&(_, &c)| c > 0)
            .map(|(e, &c)| (e as u32, c))
            .collect();
        CnfOrdinal { terms }
    }

    pub fn terms(&self) -> &[(u32, u64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_limit(&self) -> bool {
        matches!(self.terms.last(), Some(&(e, _)) if e > 0)
    }

    pub fn is_successor(&self) -> bool {
        matches!(self.terms.last(), Some(&(0, _)))
    }

    pub fn leading_exponent(&self) -> Option<u32> {
        self.terms.first().map(|t| t.0)
    }

    pub fn least_exponent(&self) -> Option<u32> {
        self.terms.last().map(|t| t.0)
    }

    /// `self < w^d`.
    pub fn below_power(&self, d: u32) -> bool {
        self.leading_exponent().is_none_or(|e| e < d)
    }

    pub fn successor(&self) -> Self {
        let mut terms = self.terms.clone();
        match terms.last_mut() {
            Some((0, c)) => *c += 1,
            _ => terms.push((0, 1)),
        }
        CnfOrdinal { terms }
    }

    /// `w^k * (self div w^k)`: the terms with exponent `>= k`.
    pub fn block_floor(&self, k: u32) -> Self {
        CnfOrdinal {
            terms: self.terms.iter().copied().take_while(|&(e, _)| e >= k).collect(),
        }
    }

    /// Ordinal sum `self + rhs`.
    pub fn add(&self, rhs: &CnfOrdinal) -> Self {
        let Some(lead) = rhs.leading_exponent() else {
            return self.clone();
        };
        let mut terms: Vec<(u32, u64)> =
            self.terms.iter().copied().take_while(|&(e, _)| e >= lead).collect();
        let mut rest = rhs.terms.iter().copied();
        if let Some(last) = terms.last_mut() {
            if last.0 == lead {
                last.1 += rest.next().unwrap().1;
            }
        }
        terms.extend(rest);
        CnfOrdinal { terms }
    }

    /// The `s` with `prefix + s == self`, when `prefix` is a CNF prefix of
    /// `self` (as block floors are).
    pub fn minus_prefix(&self, prefix: &CnfOrdinal) -> Option<Self> {
        if !self.terms.starts_with(&prefix.terms) {
            return None;
        }
        Some(CnfOrdinal { terms: self.terms[prefix.terms.len()..].to_vec() })
    }

    /// Parses `0` or `+`-joined terms `w^e*c`, `w*c`, `w^e`, `w` or `c`.
    pub fn parse(text: &str, d: u32) -> Result<Self> {
        let text = text.trim();
        if text == "0" {
            return Ok(Self::zero());
        }
        let mut terms = Vec::new();
        for raw in text.split('+') {
            let (base, coefficient) = match raw.split_once('*') {
                Some((b, c)) => (b, parse_num(c)?),
                None if raw.starts_with('w') => (raw, 1),
                None => ("", parse_num(raw)?),
            };
            let exponent = match base {
                "" => 0,
                "w" => 1,
                b => match b.strip_prefix("w^") {
                    Some(e) => u32::try_from(parse_num(e)?).map_err(|_| Error::Ordinal("exponent too large"))?,
                    None => return Err(Error::Ordinal("malformed term")),
                },
            };
            if exponent >= d {
                return Err(Error::Ordinal("exponent not below d"));
            }
            terms.push((exponent, coefficient));
        }
        Self::from_terms(terms)
    }
}

fn parse_num(s: &str) -> Result<u64> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Ordinal("malformed number"));
    }
    s.parse().map_err(|_| Error::Ordinal("number too large"))
}

impl Ord for CnfOrdinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(&other.terms) {
            let ord = a.0.cmp(&b.0).then(a.1.cmp(&b.1));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for CnfOrdinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CnfOrdinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, &(e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str("+")?;
            }
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "w*{c}")?,
                _ => write!(f, "w^{e}*{c}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CnfOrdinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The interval `[left, right)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub left: CnfOrdinal,
    pub right: CnfOrdinal,
}

impl Interval {
    pub fn contains(&self, x: &CnfOrdinal) -> bool {
        &self.left <= x && x < &self.right
    }

    pub fn is_empty(&self) -> bool {
        self.left >= self.right
    }

    /// Order type of the interval when `left` is a CNF prefix of `right`.
    pub fn order_type(&self) -> Option<CnfOrdinal> {
        self.right.minus_prefix(&self.left)
    }
}

/// Interval clubs on the limit ordinals below `w^d`, indices `0..d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClubSystem {
    d: u32,
}

impl ClubSystem {
    pub fn new(d: u32) -> Result<Self> {
        if d == 0 || d > crate::palette::MAX_COLORS {
            return Err(Error::Parameter("d must lie in 1..=64"));
        }
        Ok(ClubSystem { d })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    fn check_limit(&self, alpha: &CnfOrdinal) -> Result<()> {
        if !alpha.below_power(self.d) {
            return Err(Error::Ordinal("ordinal not below w^d"));
        }
        if !alpha.is_limit() {
            return Err(Error::Ordinal("not a limit ordinal"));
        }
        Ok(())
    }

    /// `C(alpha, i)` without range checks; empty below the index floor.
    fn raw_club(&self, alpha: &CnfOrdinal, i: u32) -> Interval {
        Interval { left: alpha.block_floor(i + 1), right: alpha.clone() }
    }

    /// Least index whose club is nonempty.
    pub fn i_min(&self, alpha: &CnfOrdinal) -> Result<u32> {
        self.check_limit(alpha)?;
        (0..self.d)
            .find(|&i| !self.raw_club(alpha, i).is_empty())
            .ok_or(Error::Ordinal("no nonempty club"))
    }

    pub fn club_interval(&self, alpha: &CnfOrdinal, i: u32) -> Result<Interval> {
        if i >= self.d {
            return Err(Error::Parameter("index not below d"));
        }
        if i < self.i_min(alpha)? {
            return Err(Error::Parameter("index below i(alpha)"));
        }
        Ok(self.raw_club(alpha, i))
    }

    /// `gamma` is an accumulation point of `C(alpha, i)`: a limit inside the
    /// interval strictly above its left endpoint, so `sup(C ∩ gamma) = gamma`.
    pub fn acc_member(&self, gamma: &CnfOrdinal, alpha: &CnfOrdinal, i: u32) -> Result<bool> {
        if i >= self.d {
            return Err(Error::Parameter("index not below d"));
        }
        if !alpha.below_power(self.d) {
            return Err(Error::Ordinal("ordinal not below w^d"));
        }
        if gamma >= alpha {
            return Err(Error::NotAscending);
        }
        let club = self.raw_club(alpha, i);
        Ok(gamma.is_limit() && club.left < *gamma)
    }

    /// Least `i` in `i(beta)..d` with `alpha ∈ acc(C(beta, i))`.
    pub fn derived_color(&self, alpha: &CnfOrdinal, beta: &CnfOrdinal) -> Result<u32> {
        self.check_limit(alpha)?;
        let floor = self.i_min(beta)?;
        if alpha >= beta {
            return Err(Error::NotAscending);
        }
        for i in floor..self.d {
            if self.acc_member(alpha, beta, i)? {
                return Ok(i);
            }
        }
        Err(Error::Ordinal("covering failed"))
    }

    /// Every ordinal below `w^d` with all coefficients `<= coeff_max`,
    /// ascending.
    pub fn ordinals(&self, coeff_max: u64) -> Vec<CnfOrdinal> {
        let base = coeff_max + 1;
        let count = base.pow(self.d);
        let mut out: Vec<CnfOrdinal> = (0..count)
            .map(|mut code| {
                let coefficients: Vec<u64> = (0..self.d)
                    .map(|_| {
                        let c = code % base;
                        code /= base;
                        c
                    })
                    .collect();
                CnfOrdinal::from_coefficients(&coefficients)
            })
            .collect();
        out.sort();
        out
    }

    /// The limit ordinals among [`ClubSystem::ordinals`].
    pub fn limits(&self, coeff_max: u64) -> Vec<CnfOrdinal> {
        self.ordinals(coeff_max).into_iter().filter(CnfOrdinal::is_limit).collect()
    }

    /// Colors the pairs of an ascending universe of limits by
    /// [`ClubSystem::derived_color`]; `lambda = d`.
    pub fn coloring(&self, universe: &[CnfOrdinal]) -> Result<Coloring> {
        for alpha in universe {
            self.check_limit(alpha)?;
        }
        if universe.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotAscending);
        }
        let mut err = None;
        let c = Coloring::from_fn(universe.len(), self.d, |a, b| {
            self.derived_color(&universe[a], &universe[b]).unwrap_or_else(|e| {
                err = Some(e);
                0
            })
        })?;
        match err {
            Some(e) => Err(e),
            None => Ok(c),
        }
    }

    /// Seeded sample of `size` distinct limits with coefficients `<=
    /// coeff_max`, ascending.
    pub fn sample_universe(&self, coeff_max: u64, size: usize, seed: u64) -> Result<Vec<CnfOrdinal>> {
        if size == 0 {
            return Err(Error::Parameter("universe size must be positive"));
        }
        let limits = self.limits(coeff_max);
        if limits.len() < size {
            return Err(Error::Parameter("not enough distinct limits"));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut picked = rand::seq::index::sample(&mut rng, limits.len(), size).into_vec();
        picked.sort_unstable();
        Ok(picked.into_iter().map(|k| limits[k].clone()).collect())
    }

    /// Exhaustively checks the club-system axioms over every limit with
    /// coefficients `<= coeff_max`. Set-level claims are evaluated pointwise
    /// over all ordinals with coefficients `<= coeff_max + 1`.
    pub fn check_axioms(&self, coeff_max: u64) -> AxiomReport {
        let mut report = AxiomReport {
            d: self.d,
            coeff_max,
            limits: 0,
            points: 0,
            checks: [0; 6],
            violation: None,
        };
        if let Err(v) = self.run_axioms(coeff_max, &mut report) {
            report.violation = Some(v);
        }
        report
    }

    fn run_axioms(&self, coeff_max: u64, report: &mut AxiomReport) -> core::result::Result<(), AxiomViolation> {
        let limits = self.limits(coeff_max);
        let points = self.ordinals(coeff_max + 1);
        report.limits = limits.len();
        report.points = points.len();
        let fail = |clause: u8, detail: String| AxiomViolation { clause, detail };

        let mut floors = Vec::with_capacity(limits.len());
        for alpha in &limits {
            // (1) index floor below d
            report.checks[0] += 1;
            let floor = self.i_min(alpha).map_err(|_| fail(1, format!("i({alpha}) undefined")))?;
            if Some(floor) != alpha.least_exponent() {
                return Err(fail(1, format!("i({alpha}) = {floor} is not the least exponent")));
            }
            floors.push(floor);

            for i in floor..self.d {
                let club = self.raw_club(alpha, i);
                // (2) club in alpha
                report.checks[1] += 1;
                if club.is_empty() {
                    return Err(fail(2, format!("C({alpha},{i}) empty")));
                }
                for p in points.iter().filter(|p| *p < alpha) {
                    let next = if *p < club.left { club.left.clone() } else { p.clone() };
                    if !club.contains(&next) {
                        return Err(fail(2, format!("C({alpha},{i}) bounded below {p}")));
                    }
                    if accumulates(&club, p, &points) && !club.contains(p) {
                        return Err(fail(2, format!("C({alpha},{i}) not closed at {p}")));
                    }
                    if accumulates(&club, p, &points) != self.acc_member(p, alpha, i).unwrap() {
                        return Err(fail(2, format!("acc(C({alpha},{i})) disagrees at {p}")));
                    }
                }
                if points.iter().any(|p| club.contains(p) && p >= alpha) {
                    return Err(fail(2, format!("C({alpha},{i}) not below {alpha}")));
                }
                // (3) nesting
                for j in i + 1..self.d {
                    report.checks[2] += 1;
                    let wider = self.raw_club(alpha, j);
                    if let Some(p) = points.iter().find(|p| club.contains(p) && !wider.contains(p)) {
                        return Err(fail(3, format!("{p} in C({alpha},{i}) but not C({alpha},{j})")));
                    }
                }
                // (6b) order type bound
                report.checks[5] += 1;
                let otp = club.order_type().ok_or_else(|| fail(6, format!("otp(C({alpha},{i})) undefined")))?;
                if club.left.add(&otp) != *alpha || otp.leading_exponent().is_some_and(|e| e > i) {
                    return Err(fail(6, format!("otp(C({alpha},{i})) = {otp} not below w^{}", i + 1)));
                }
            }
        }

        for (b, beta) in limits.iter().enumerate() {
            for (a, alpha) in limits[..b].iter().enumerate() {
                let mut covered = false;
                for i in floors[b]..self.d {
                    if !self.acc_member(alpha, beta, i).unwrap() {
                        continue;
                    }
                    covered = true;
                    // (4) coherence
                    report.checks[3] += 1;
                    if floors[a] > i {
                        return Err(fail(4, format!("{alpha} in acc(C({beta},{i})) but i({alpha}) > {i}")));
                    }
                    let lower = self.raw_club(alpha, i);
                    let upper = self.raw_club(beta, i);
                    if let Some(p) = points.iter().find(|p| lower.contains(p) != (upper.contains(p) && *p < alpha)) {
                        return Err(fail(4, format!("C({alpha},{i}) != C({beta},{i}) ∩ {alpha} at {p}")));
                    }
                }
                // (5) covering
                report.checks[4] += 1;
                if !covered {
                    return Err(fail(5, format!("{alpha} not in acc(C({beta},i)) for any i")));
                }
            }
        }
        Ok(())
    }
}

/// `sup(club ∩ gamma) = gamma`, evaluated over the sample `points`: `gamma`
/// is a limit and every sample point below it has a club member at or above
/// it that is still below `gamma`.
fn accumulates(club: &Interval, gamma: &CnfOrdinal, points: &[CnfOrdinal]) -> bool {
    gamma.is_limit()
        && points.iter().filter(|p| *p < gamma).all(|p| {
            let q = if *p < club.left { &club.left } else { p };
            club.contains(q) && q < gamma
        })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    /// 1..=5 for the coherence clauses, 6 for the order-type bound.
    pub clause: u8,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub d: u32,
    pub coeff_max: u64,
    pub limits: usize,
    pub points: usize,
    /// Instances checked per clause, index `k` for clause `k + 1`.
    pub checks: [u64; 6],
    pub violation: Option<AxiomViolation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}
