//! Persisted census of triples modulo isomorphism.
//!
//! File format (UTF-8 JSON, 1-indexed pairs):
//!
//! ```json
//! {"n":3,"count":2,"triples":[[],[[2,1]]]}
//! ```

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::triple::{self, BdTriple};

/// Canonical orbit representatives for one `n`, in enumeration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleCatalog {
    n: usize,
    triples: Vec<BdTriple>,
}

#[derive(Serialize, Deserialize)]
struct CatalogFile {
    n: usize,
    count: usize,
    triples: Vec<Vec<[usize; 2]>>,
}

pub(crate) fn pairs_json(t: &BdTriple) -> Vec<[usize; 2]> {
    t.pairs().into_iter().map(|(s, d)| [s, d]).collect()
}

impl TripleCatalog {
    pub fn enumerate(n: usize) -> Result<Self> {
        Ok(Self {
            n,
            triples: triple::enumerate_canonical(n)?,
        })
    }

    /// Builds a catalog from arbitrary valid triples: each is replaced by its
    /// canonical form, then the list is sorted and deduplicated.
    pub fn from_triples(n: usize, triples: impl IntoIterator<Item = BdTriple>) -> Result<Self> {
        let mut out = Vec::new();
        for t in triples {
            if t.n() != n {
                return Err(Error::Input(format!("triple {t} has n = {}, expected {n}", t.n())));
            }
            out.push(t.canonical_form()?);
        }
        out.sort();
        out.dedup();
        Ok(Self { n, triples: out })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn count(&self) -> usize {
        self.triples.len()
    }

    pub fn triples(&self) -> &[BdTriple] {
        &self.triples
    }

    pub fn get(&self, index: usize) -> Option<&BdTriple> {
        self.triples.get(index)
    }

    pub fn to_json(&self) -> String {
        let file = CatalogFile {
            n: self.n,
            count: self.triples.len(),
            triples: self.triples.iter().map(pairs_json).collect(),
        };
        serde_json::to_string(&file).expect("catalog serializes")
    }

    /// Parses and re-validates a catalog: every triple must be valid and
    /// canonical, with no repeats and a matching `count`.
    pub fn from_json(s: &str) -> Result<Self> {
        let file: CatalogFile = serde_json::from_str(s)?;
        let mut triples = Vec::with_capacity(file.triples.len());
        for raw in &file.triples {
            let pairs: Vec<(usize, usize)> = raw.iter().map(|p| (p[0], p[1])).collect();
            let t = BdTriple::validated(file.n, &pairs)?;
            if !t.is_canonical() {
                return Err(Error::Input(format!("catalog triple {t} is not in canonical form")));
            }
            triples.push(t);
        }
        let mut sorted = triples.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Input("catalog contains a repeated triple".into()));
        }
        if file.count != triples.len() {
            return Err(Error::Input(format!(
                "catalog count {} disagrees with {} listed triples",
                file.count,
                triples.len()
            )));
        }
        Ok(Self { n: file.n, triples })
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_json())?;
        Ok(())
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::from_json(&fs::read_to_string(path)?)
    }
}
