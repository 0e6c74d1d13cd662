//! The JSON algebra file format.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::{BrouwerSpec, FiniteAlgebra};
use crate::error::{Error, Result};
use crate::lattice::FiniteBoundedLattice;

/// On-disk shape. `brouwer` is a table, the string "trivial", or null.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub n: usize,
    pub bottom: usize,
    pub top: usize,
    pub covers: Vec<(usize, usize)>,
    #[serde(default)]
    pub kleene: Option<Vec<usize>>,
    #[serde(default)]
    pub brouwer: Option<BrouwerField>,
    #[serde(default)]
    pub labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BrouwerField {
    Keyword(String),
    Table(Vec<usize>),
}

impl AlgebraFile {
    pub fn from_algebra(a: &FiniteAlgebra) -> Self {
        let l = a.lattice();
        let brouwer = a.brouwer_table().map(|t| {
            let trivial = (0..a.n())
                .all(|x| a.brouwer(x) == if x == l.bottom() { l.top() } else { l.bottom() });
            if trivial {
                BrouwerField::Keyword("trivial".into())
            } else {
                BrouwerField::Table(t.to_vec())
            }
        });
        AlgebraFile {
            n: a.n(),
            bottom: l.bottom(),
            top: l.top(),
            covers: l.covers(),
            kleene: a.kleene_table().map(|t| t.to_vec()),
            brouwer,
            labels: l.labels().map(|ls| ls.to_vec()),
        }
    }

    /// Validates through the ordinary constructors, so a bad file reports
    /// the same error the construction would.
    pub fn to_algebra(&self) -> Result<FiniteAlgebra> {
        let lattice = FiniteBoundedLattice::from_covers(self.n, self.bottom, self.top, &self.covers)?;
        let mut a = match &self.kleene {
            Some(table) => FiniteAlgebra::attach_involution(lattice, table.clone())?,
            None => {
                if self.brouwer.is_some() {
                    return Err(Error::InvalidFile(
                        "brouwer table without a kleene table".into(),
                    ));
                }
                FiniteAlgebra::from_lattice(lattice)
            }
        };
        a = match &self.brouwer {
            Some(BrouwerField::Keyword(kw)) if kw == "trivial" => {
                a.attach_brouwer(BrouwerSpec::Trivial)?
            }
            Some(BrouwerField::Keyword(kw)) => {
                return Err(Error::InvalidFile(format!("unknown brouwer keyword {kw:?}")))
            }
            Some(BrouwerField::Table(t)) => a.attach_brouwer(BrouwerSpec::Table(t.clone()))?,
            None => a,
        };
        if let Some(labels) = &self.labels {
            if labels.len() != self.n {
                return Err(Error::InvalidFile(format!(
                    "{} labels for {} elements",
                    labels.len(),
                    self.n
                )));
            }
            a.set_labels(labels.clone());
        }
        Ok(a)
    }
}

pub fn load(path: &Path) -> Result<FiniteAlgebra> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidFile(format!("{}: {e}", path.display())))?;
    let file: AlgebraFile =
        serde_json::from_str(&text).map_err(|e| Error::InvalidFile(e.to_string()))?;
    file.to_algebra()
}

pub fn save(a: &FiniteAlgebra, path: &Path) -> Result<()> {
    let text = serde_json::to_string_pretty(&AlgebraFile::from_algebra(a))
        .expect("algebra file serialization");
    std::fs::write(path, text).map_err(|e| Error::InvalidFile(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{bz_chain, catalog, CatalogName};

    fn round_trip(a: &FiniteAlgebra) {
        let file = AlgebraFile::from_algebra(a);
        let text = serde_json::to_string(&file).unwrap();
        let back: AlgebraFile = serde_json::from_str(&text).unwrap();
        let b = back.to_algebra().unwrap();
        assert_eq!(a.n(), b.n());
        assert_eq!(a.lattice().covers(), b.lattice().covers());
        assert_eq!(a.kleene_table(), b.kleene_table());
        assert_eq!(a.brouwer_table(), b.brouwer_table());
    }

    #[test]
    fn catalog_round_trips_elementwise() {
        for name in ["D:4", "MO:2", "M3", "B6", "OMLNM", "GD:2", "GDM:2", "CompAOL11"] {
            let a = catalog(&name.parse::<CatalogName>().unwrap()).unwrap();
            round_trip(&a);
        }
    }

    #[test]
    fn trivial_brouwer_uses_the_keyword() {
        let file = AlgebraFile::from_algebra(&bz_chain(4));
        assert!(matches!(file.brouwer, Some(BrouwerField::Keyword(ref k)) if k == "trivial"));
        let text = serde_json::to_string(&file).unwrap();
        assert!(text.contains("\"trivial\""));
    }

    #[test]
    fn bad_files_report_construction_errors() {
        let mut file = AlgebraFile::from_algebra(&bz_chain(3));
        file.kleene = Some(vec![0, 1, 2]);
        assert!(file.to_algebra().is_err());
        file.kleene = None;
        assert!(matches!(file.to_algebra(), Err(Error::InvalidFile(_))));
    }
}
