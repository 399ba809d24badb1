//! Independent certificate checking.
//!
//! Nothing here calls the deciders. Paths are walked edge by edge against
//! the coloring, and `hc` connectivity is re-established by exhaustive
//! removal (the brute-force route), never by the min-cut route the
//! deciders use.

use std::collections::BTreeSet;
use std::fmt;

use partrel_core::connectivity::kappa_connected_bruteforce;
use partrel_core::{Coloring, Graph};

use crate::certfile::CertificateFile;

/// Optional claims the certificate must additionally support.
#[derive(Clone, Copy, Debug, Default)]
pub struct Expectations {
    /// Exact size of `X`.
    pub m: Option<usize>,
    /// Palette budget: `|Lambda| <= kappa`.
    pub kappa: Option<usize>,
    /// Minimum certified connectivity for `hc`.
    pub j: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation(pub String);

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Violation {}

macro_rules! reject {
    ($($arg:tt)*) => {
        return Err(Violation(format!($($arg)*)))
    };
}

pub fn verify(cert: &CertificateFile, c: &Coloring, expect: &Expectations) -> Result<(), Violation> {
    if cert.n != c.n() || cert.lambda != c.lambda() {
        reject!(
            "certificate is for n={} lambda={}, coloring has n={} lambda={}",
            cert.n, cert.lambda, c.n(), c.lambda()
        );
    }
    let x = &cert.x;
    if x.windows(2).any(|w| w[0] >= w[1]) {
        reject!("X is not strictly ascending");
    }
    if let Some(&v) = x.iter().find(|&&v| v >= c.n()) {
        reject!("X contains vertex {v} outside 0..{}", c.n());
    }
    if let Some(m) = expect.m {
        if x.len() != m {
            reject!("X has {} elements, expected {m}", x.len());
        }
    }
    let palette = &cert.palette;
    if palette.windows(2).any(|w| w[0] >= w[1]) {
        reject!("Lambda is not strictly ascending");
    }
    if let Some(&color) = palette.iter().find(|&&k| k >= c.lambda()) {
        reject!("Lambda contains color {color} outside 0..{}", c.lambda());
    }
    if let Some(kappa) = expect.kappa {
        if palette.len() > kappa {
            reject!("Lambda has {} colors, budget is {kappa}", palette.len());
        }
    }
    let in_palette = |color: u32| palette.contains(&color);

    match cert.kind.as_str() {
        "wc" => {
            if cert.edges.is_some() || cert.j.is_some() {
                reject!("wc certificate carries hc fields");
            }
            let Some(paths) = &cert.paths else {
                reject!("wc certificate without paths");
            };
            let mut listed = BTreeSet::new();
            for ((a, b), path) in &paths.0 {
                if !listed.insert((*a, *b)) {
                    reject!("path for ({a},{b}) listed twice");
                }
                if a >= b || x.binary_search(a).is_err() || x.binary_search(b).is_err() {
                    reject!("path key ({a},{b}) is not a pair of X");
                }
                check_path(c, *a, *b, path, &in_palette)?;
            }
            for (i, &a) in x.iter().enumerate() {
                for &b in &x[i + 1..] {
                    if !listed.contains(&(a, b)) {
                        reject!("missing path for ({a},{b})");
                    }
                }
            }
        }
        "hc" => {
            if cert.paths.is_some() {
                reject!("hc certificate carries paths");
            }
            let (Some(edges), Some(j)) = (&cert.edges, cert.j) else {
                reject!("hc certificate needs E and j");
            };
            if j == 0 || j > x.len() {
                reject!("j = {j} outside 1..={}", x.len());
            }
            if let Some(want) = expect.j {
                if j < want {
                    reject!("certified connectivity {j} below required {want}");
                }
            }
            let mut seen = BTreeSet::new();
            for &[a, b] in edges {
                if a == b {
                    reject!("loop at {a}");
                }
                let (a, b) = (a.min(b), a.max(b));
                if x.binary_search(&a).is_err() || x.binary_search(&b).is_err() {
                    reject!("edge ({a},{b}) leaves X");
                }
                if !seen.insert((a, b)) {
                    reject!("edge ({a},{b}) listed twice");
                }
                let color = c.color(a, b);
                if !in_palette(color) {
                    reject!("edge ({a},{b}) has color {color} outside Lambda");
                }
            }
            let g = Graph::new(x.clone(), seen).map_err(|e| Violation(e.to_string()))?;
            if !kappa_connected_bruteforce(&g, j) {
                reject!("(X, E) is not {j}-connected");
            }
        }
        other => reject!("unknown certificate kind `{other}`"),
    }
    Ok(())
}

fn check_path(c: &Coloring, a: usize, b: usize, path: &[usize], in_palette: &impl Fn(u32) -> bool) -> Result<(), Violation> {
    if path.first() != Some(&a) || path.last() != Some(&b) {
        reject!("path for ({a},{b}) does not run from {a} to {b}");
    }
    let mut seen = BTreeSet::new();
    for &v in path {
        if v >= c.n() {
            reject!("path for ({a},{b}) leaves the vertex range at {v}");
        }
        if v < a {
            reject!("path dips below source: ({a},{b}) visits {v}");
        }
        if !seen.insert(v) {
            reject!("path for ({a},{b}) repeats vertex {v}");
        }
    }
    for w in path.windows(2) {
        let color = c.color(w[0], w[1]);
        if !in_palette(color) {
            reject!("path for ({a},{b}) uses edge ({},{}) of color {color} outside Lambda", w[0], w[1]);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certfile::PathMap;
    use partrel_core::generators::delta_coloring;

    fn wc(paths: Vec<((usize, usize), Vec<usize>)>, x: Vec<usize>) -> CertificateFile {
        CertificateFile {
            kind: "wc".into(),
            n: 4,
            lambda: 2,
            x,
            palette: vec![0],
            paths: Some(PathMap(paths)),
            edges: None,
            j: None,
        }
    }

    #[test]
    fn accepts_hand_written_wc() {
        let d = delta_coloring(2).unwrap();
        let cert = wc(vec![((0, 1), vec![0, 2, 1]), ((0, 2), vec![0, 2]), ((1, 2), vec![1, 2])], vec![0, 1, 2]);
        assert_eq!(verify(&cert, &d, &Expectations { m: Some(3), kappa: Some(1), j: None }), Ok(()));
        assert!(verify(&cert, &d, &Expectations { m: Some(4), ..Default::default() }).is_err());
    }

    #[test]
    fn rejects_dip_below_source() {
        let d = delta_coloring(2).unwrap();
        // (2,3) has color 1; 2-0-3 uses color 0 twice but visits 0 < 2.
        let cert = wc(vec![((2, 3), vec![2, 0, 3])], vec![2, 3]);
        let err = verify(&cert, &d, &Expectations::default()).unwrap_err();
        assert!(err.0.starts_with("path dips below source"), "{err}");
    }

    #[test]
    fn rejects_off_palette_and_missing() {
        let d = delta_coloring(2).unwrap();
        let cert = wc(vec![((2, 3), vec![2, 3])], vec![2, 3]);
        assert!(verify(&cert, &d, &Expectations::default()).unwrap_err().0.contains("outside Lambda"));
        let cert = wc(vec![], vec![2, 3]);
        assert!(verify(&cert, &d, &Expectations::default()).unwrap_err().0.contains("missing path"));
    }

    #[test]
    fn hc_checks() {
        let d = delta_coloring(2).unwrap();
        let mut cert = CertificateFile {
            kind: "hc".into(),
            n: 4,
            lambda: 2,
            x: vec![0, 1, 2, 3],
            palette: vec![0],
            paths: None,
            edges: Some(vec![[0, 2], [0, 3], [1, 2], [1, 3]]),
            j: Some(2),
        };
        assert_eq!(verify(&cert, &d, &Expectations::default()), Ok(()));
        cert.j = Some(3);
        assert!(verify(&cert, &d, &Expectations::default()).unwrap_err().0.contains("not 3-connected"));
        cert.j = Some(2);
        cert.edges.as_mut().unwrap().push([0, 1]);
        assert!(verify(&cert, &d, &Expectations::default()).unwrap_err().0.contains("outside Lambda"));
        cert.edges.as_mut().unwrap().pop();
        cert.kind = "xx".into();
        assert!(verify(&cert, &d, &Expectations::default()).is_err());
    }
}
