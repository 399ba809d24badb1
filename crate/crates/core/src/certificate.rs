//! Witnesses for positive relation instances.
//!
//! Certificates carry everything needed to re-check them against the
//! coloring: the set, the palette, and either one path per pair (`wc`) or the
//! edge set whose connectivity is claimed (`hc`). Checking them is the job of
//! the independent verifier in the `partrel` crate.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::palette::Palette;

/// `X` is well-connected in `palette`: for every `a < b` in `X`, `paths`
/// holds a path from `a` to `b` through vertices `>= a` whose edges are all
/// colored in the palette.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WcCertificate {
    pub n: usize,
    pub lambda: u32,
    pub x: Vec<usize>,
    pub palette: Palette,
    pub paths: BTreeMap<(usize, usize), Vec<usize>>,
}

/// `(X, edges)` is `j`-connected and every edge is colored in `palette`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HcCertificate {
    pub n: usize,
    pub lambda: u32,
    pub x: Vec<usize>,
    pub palette: Palette,
    pub edges: Vec<(usize, usize)>,
    pub j: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Wc(WcCertificate),
    Hc(HcCertificate),
}

impl Certificate {
    pub fn x(&self) -> &[usize] {
        match self {
            Certificate::Wc(c) => &c.x,
            Certificate::Hc(c) => &c.x,
        }
    }

    pub fn palette(&self) -> &Palette {
        match self {
            Certificate::Wc(c) => &c.palette,
            Certificate::Hc(c) => &c.palette,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Wc(_) => "wc",
            Certificate::Hc(_) => "hc",
        }
    }
}
