//! Property reports: every computed invariant of one graph, serialized as
//! JSON lines with a fixed field order so repeated runs are byte-identical.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::clique::{self, CliqueList};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::io as gio;
use crate::perm;
use crate::strong;

/// Invariants of one graph. Field order is the serialization order.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PropertyReport {
    pub graph_id: String,
    pub graph6: String,
    pub n: usize,
    pub valency: Option<usize>,
    pub omega: usize,
    pub alpha: usize,
    pub chi: Option<usize>,
    pub theta: Option<usize>,
    pub n_max_cliques: usize,
    pub n_mis: usize,
    pub vertex_transitive: bool,
    pub well_covered: bool,
    pub co_well_covered: bool,
    pub cis: bool,
    pub has_strong_clique: bool,
    pub localizable: bool,
    pub witnesses: Option<Witnesses>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq, Default)]
pub struct Witnesses {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strong_clique: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<Vec<Vec<usize>>>,
}

/// Shared per-graph analysis: the clique and independent-set lists are
/// computed once and reused by every predicate.
pub struct Analysis {
    pub id: String,
    pub graph: Graph,
    pub cliques: CliqueList,
    pub mis: CliqueList,
    pub vertex_transitive: bool,
    /// Strong verdict per maximal clique, in CliqueList order; both
    /// methods are run and must agree.
    pub strong: Vec<bool>,
    pub strong_clique: Option<VertexSet>,
    pub localizable: Option<Vec<VertexSet>>,
}

impl Analysis {
    pub fn run(id: &str, g: &Graph) -> Analysis {
        let cliques = clique::maximal_cliques(g);
        let mis = clique::maximal_independent_sets(g);
        let vt = perm::is_vertex_transitive(g);
        let strong: Vec<bool> = cliques
            .iter()
            .map(|c| {
                strong::is_strong_clique_with(g, c, &mis)
                    .expect("members of the clique list are cliques")
                    .is_strong
            })
            .collect();
        let omega = cliques.max_size();
        let strong_clique = cliques
            .iter()
            .zip(strong.iter())
            .find(|(c, &s)| s && (!vt || c.len() == omega))
            .map(|(c, _)| c.clone());
        let localizable = strong::is_localizable(g);
        Analysis {
            id: id.to_string(),
            graph: g.clone(),
            cliques,
            mis,
            vertex_transitive: vt,
            strong,
            strong_clique,
            localizable,
        }
    }

    pub fn omega(&self) -> usize {
        self.cliques.max_size()
    }

    pub fn alpha(&self) -> usize {
        self.mis.max_size()
    }

    pub fn is_cis(&self) -> bool {
        strong::cis_by_pair_scan(&self.cliques, &self.mis)
    }

    pub fn is_well_covered(&self) -> bool {
        self.mis.uniform_size()
    }

    pub fn is_co_well_covered(&self) -> bool {
        self.cliques.uniform_size()
    }

    /// Strong maximal cliques, in canonical order.
    pub fn strong_cliques(&self) -> Vec<&VertexSet> {
        self.cliques
            .iter()
            .zip(self.strong.iter())
            .filter(|(_, &s)| s)
            .map(|(c, _)| c)
            .collect()
    }

    pub fn report(&self) -> PropertyReport {
        let g = &self.graph;
        let chi = clique::chromatic_number(g).ok();
        let theta = clique::clique_cover_number(g).ok();
        let witnesses = match (&self.strong_clique, &self.localizable) {
            (None, None) => None,
            (sc, parts) => Some(Witnesses {
                strong_clique: sc.as_ref().map(|c| c.members().to_vec()),
                partition: parts
                    .as_ref()
                    .map(|p| p.iter().map(|s| s.members().to_vec()).collect()),
            }),
        };
        let report = PropertyReport {
            graph_id: self.id.clone(),
            graph6: gio::to_graph6(g),
            n: g.n(),
            valency: g.valency(),
            omega: self.omega(),
            alpha: self.alpha(),
            chi,
            theta,
            n_max_cliques: self.cliques.len(),
            n_mis: self.mis.len(),
            vertex_transitive: self.vertex_transitive,
            well_covered: self.is_well_covered(),
            co_well_covered: self.is_co_well_covered(),
            cis: self.is_cis(),
            has_strong_clique: self.strong_clique.is_some(),
            localizable: self.localizable.is_some(),
            witnesses,
        };
        report.check_consistency();
        report
    }
}

impl PropertyReport {
    /// Internal consistency: a localizable graph has a strong clique, and
    /// a vertex-transitive CIS graph is well-covered and co-well-covered.
    /// The empty graph is exempt: it has no cliques but partitions
    /// vacuously.
    pub fn check_consistency(&self) {
        if self.n == 0 {
            return;
        }
        if self.localizable {
            assert!(
                self.has_strong_clique,
                "{}: localizable graphs have strong cliques",
                self.graph_id
            );
        }
        if self.cis && self.vertex_transitive {
            assert!(
                self.well_covered && self.co_well_covered,
                "{}: vertex-transitive CIS graphs are well-covered both ways",
                self.graph_id
            );
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}

/// Writes reports as JSON lines, one object per line, in the given order.
pub fn emit_reports<W: Write>(reports: &[PropertyReport], mut out: W) -> Result<()> {
    for r in reports {
        writeln!(out, "{}", r.to_json_line()).map_err(|e| {
            crate::error::Error::InvalidParameter(format!("report write failed: {e}"))
        })?;
    }
    Ok(())
}
