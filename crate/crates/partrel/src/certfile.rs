//! JSON certificate files.
//!
//! ```json
//! {"kind":"wc","n":4,"lambda":2,"X":[0,1,2],"Lambda":[0],"paths":{"0,1":[0,2,1],"0,2":[0,2],"1,2":[1,2]}}
//! {"kind":"hc","n":4,"lambda":2,"X":[0,1,2,3],"Lambda":[0],"E":[[0,1],[0,3],[1,2],[2,3]],"j":2}
//! ```
//!
//! The file form is deliberately loose (plain vectors, no invariants) so the
//! verifier can report a malformed witness as a violation rather than fail to
//! load it.

use std::collections::BTreeMap;

use partrel_core::Certificate;
use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFile {
    pub kind: String,
    pub n: usize,
    pub lambda: u32,
    #[serde(rename = "X")]
    pub x: Vec<usize>,
    #[serde(rename = "Lambda")]
    pub palette: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub paths: Option<PathMap>,
    #[serde(rename = "E", default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<usize>,
}

/// Paths keyed by `"a,b"`, serialized in numeric pair order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathMap(pub Vec<((usize, usize), Vec<usize>)>);

impl Serialize for PathMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for ((a, b), path) in &self.0 {
            map.serialize_entry(&format!("{a},{b}"), path)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for PathMap {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = BTreeMap::<String, Vec<usize>>::deserialize(deserializer)?;
        let mut out = Vec::with_capacity(raw.len());
        for (key, path) in raw {
            let (a, b) = key
                .split_once(',')
                .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
                .ok_or_else(|| D::Error::custom(format!("bad path key `{key}`")))?;
            out.push(((a, b), path));
        }
        out.sort_by_key(|(k, _)| *k);
        Ok(PathMap(out))
    }
}

impl From<&Certificate> for CertificateFile {
    fn from(cert: &Certificate) -> Self {
        match cert {
            Certificate::Wc(c) => CertificateFile {
                kind: "wc".into(),
                n: c.n,
                lambda: c.lambda,
                x: c.x.clone(),
                palette: c.palette.members().to_vec(),
                paths: Some(PathMap(c.paths.iter().map(|(k, p)| (*k, p.clone())).collect())),
                edges: None,
                j: None,
            },
            Certificate::Hc(c) => CertificateFile {
                kind: "hc".into(),
                n: c.n,
                lambda: c.lambda,
                x: c.x.clone(),
                palette: c.palette.members().to_vec(),
                paths: None,
                edges: Some(c.edges.iter().map(|&(a, b)| [a, b]).collect()),
                j: Some(c.j),
            },
        }
    }
}

impl CertificateFile {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}
