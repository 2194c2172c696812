use serde::{Deserialize, Serialize};

use crate::error::{precondition, Error, Result};
use crate::graph::{CoverKind, Graph, OddCover};
use crate::solver::Subdivision;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub lower: usize,
    pub upper: usize,
    pub method: String,
}

/// The JSON form of a cover. `n` is the universe of the covered graph,
/// which includes subdivision vertices and added isolated vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub n: usize,
    pub kind: CoverKind,
    pub members: Vec<Vec<usize>>,
    pub valid: bool,
    pub count: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<Bounds>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subdivision: Option<serde_json::Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub added_vertices: Option<usize>,
}

impl Witness {
    pub fn from_cover(cover: &OddCover) -> Self {
        Witness {
            n: cover.target.n(),
            kind: cover.kind,
            members: cover.members.clone(),
            valid: cover.verify().is_valid(),
            count: cover.count(),
            bounds: None,
            subdivision: None,
            added_vertices: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("witness serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })
    }

    /// The graph this witness claims to cover, derived from `g`.
    pub fn target(&self, g: &Graph) -> Result<Graph> {
        let mut t = match &self.subdivision {
            Some(v) => {
                let sub = Subdivision::from_entries(v)?;
                sub.validate(g.n())?;
                if sub.chains.len() != g.edge_count() || sub.chains.keys().any(|&e| !g.has_edge(e)) {
                    return Err(precondition("subdivision does not match the graph's edges"));
                }
                sub.graph(self.n)?
            }
            None => g.clone(),
        };
        if let Some(a) = self.added_vertices {
            if self.subdivision.is_none() {
                t = t.with_isolated(a);
            }
        }
        if t.n() != self.n {
            return Err(Error::UniverseMismatch { left: self.n, right: t.n() });
        }
        Ok(t)
    }

    /// Recomputes validity against `g`; the stored `valid` flag is ignored.
    pub fn check(&self, g: &Graph) -> Result<bool> {
        let target = self.target(g)?;
        let cover = OddCover { target, kind: self.kind, members: self.members.clone() };
        Ok(cover.verify().is_valid() && self.count == self.members.len())
    }
}
