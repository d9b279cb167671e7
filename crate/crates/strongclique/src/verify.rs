//! Suites that re-derive the classification claims over the corpus.
//!
//! The classification suites quantify over the corpus of
//! [`crate::corpus::build_corpus`]: Cayley graphs over small cyclic,
//! two-factor abelian and dihedral groups plus the named families. That is
//! a falsification probe, not a proof: a passing suite means the claim
//! holds for every corpus graph and that every listed graph qualifies.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;

use crate::clique;
use crate::corpus::{self, CorpusGraph, CorpusSpec};
use crate::error::{Error, Result};
use crate::families::{self, standard, L1Family};
use crate::graph::{Graph, VertexSet};
use crate::io as gio;
use crate::perm;
use crate::report::{Analysis, PropertyReport};
use crate::strong;

/// Suite ids in canonical order.
pub const SUITES: &[&str] = &[
    "thm-3.1",
    "prop-2.2",
    "cor-3.2",
    "cor-3.3",
    "cor-3.4",
    "prop-3.6",
    "lem-3.8",
    "ex-3.5",
    "lem-4.2",
    "thm-4.3",
    "thm-5.1",
    "thm-5.3",
    "prop-5.5",
    "lem-5.8",
    "lem-5.9",
    "lem-5.10",
    "lem-5.11",
    "ex-5.12",
    "prop-5.13",
    "prop-5.14",
];

#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    /// Overrides the suite's default corpus order bound. The per-valency
    /// design caps still apply (32 for valency <= 4, 24 for valency 5).
    pub corpus_max: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub id: String,
    pub passed: bool,
    pub lines: Vec<String>,
    pub reports: Vec<PropertyReport>,
}

struct Checker {
    lines: Vec<String>,
    failed: bool,
}

impl Checker {
    fn new() -> Checker {
        Checker {
            lines: Vec::new(),
            failed: false,
        }
    }

    fn ok(&mut self, msg: String) {
        self.lines.push(format!("ok: {msg}"));
    }

    fn fail(&mut self, msg: String) {
        self.failed = true;
        self.lines.push(format!("FAIL: {msg}"));
    }

    fn check(&mut self, cond: bool, msg: String) {
        if cond {
            self.ok(msg);
        } else {
            self.fail(msg);
        }
    }

    /// Records one summary line for a bulk claim: the ok line carries the
    /// count, each violation gets its own FAIL line with a graph6 witness.
    fn bulk(&mut self, what: &str, total: usize, failures: Vec<String>) {
        if failures.is_empty() {
            self.ok(format!("{what} ({total} checked)"));
        } else {
            for f in failures {
                self.fail(f);
            }
        }
    }
}

fn witness(g: &Graph) -> String {
    format!("graph6={}", gio::to_graph6(g))
}

type CorpusCache = Mutex<HashMap<(usize, usize), Arc<Vec<Arc<Analysis>>>>>;

/// Runs verification suites, caching corpus analyses across suites.
pub struct Verifier {
    corpus_cache: CorpusCache,
    named_cache: Mutex<HashMap<String, Arc<Analysis>>>,
}

impl Default for Verifier {
    fn default() -> Self {
        Self::new()
    }
}

impl Verifier {
    pub fn new() -> Verifier {
        Verifier {
            corpus_cache: Mutex::new(HashMap::new()),
            named_cache: Mutex::new(HashMap::new()),
        }
    }

    /// Analyses of the corpus with the given valency, order-capped per the
    /// corpus design (32 for valency <= 4, 24 for valency 5).
    fn corpus_analyses(&self, valency: usize, max_order: usize) -> Result<Arc<Vec<Arc<Analysis>>>> {
        let cap = if valency >= 5 { 24 } else { 32 };
        let max_order = max_order.min(cap);
        if let Some(hit) = self
            .corpus_cache
            .lock()
            .unwrap()
            .get(&(valency, max_order))
        {
            return Ok(hit.clone());
        }
        let spec = CorpusSpec::standard(&[valency], max_order);
        let members: Vec<CorpusGraph> = corpus::build_corpus(&spec)?;
        let analyses: Vec<Arc<Analysis>> = members
            .par_iter()
            .map(|m| Arc::new(Analysis::run(&m.id, &m.graph)))
            .collect();
        let arc = Arc::new(analyses);
        self.corpus_cache
            .lock()
            .unwrap()
            .insert((valency, max_order), arc.clone());
        Ok(arc)
    }

    fn multi(&self, valencies: &[usize], max_order: usize) -> Result<Vec<Arc<Analysis>>> {
        let mut out = Vec::new();
        for &k in valencies {
            out.extend(self.corpus_analyses(k, max_order)?.iter().cloned());
        }
        Ok(out)
    }

    /// Cached per-graph analyses of the corpus, for callers that want to
    /// inspect the raw clique and independent-set data.
    pub fn analyses(&self, valencies: &[usize], max_order: usize) -> Result<Vec<Arc<Analysis>>> {
        self.multi(valencies, max_order)
    }

    fn named(&self, id: &str, build: impl FnOnce() -> Result<Graph>) -> Result<Arc<Analysis>> {
        if let Some(hit) = self.named_cache.lock().unwrap().get(id) {
            return Ok(hit.clone());
        }
        let g = build()?;
        let a = Arc::new(Analysis::run(id, &g));
        self.named_cache
            .lock()
            .unwrap()
            .insert(id.to_string(), a.clone());
        Ok(a)
    }

    pub fn run(&self, suite: &str, opts: &SuiteOptions) -> Result<SuiteOutcome> {
        let id = suite.trim().to_lowercase().replace("lemma-", "lem-");
        match id.as_str() {
            "thm-3.1" => self.thm_3_1(opts),
            "prop-2.2" => self.prop_2_2(opts),
            "cor-3.2" => self.cor_3_2(opts),
            "cor-3.3" => self.cor_3_3(opts),
            "cor-3.4" => self.cor_3_4(opts),
            "prop-3.6" => self.prop_3_6(opts),
            "lem-3.8" => self.lem_3_8(opts),
            "ex-3.5" => self.ex_3_5(),
            "lem-4.2" => self.lem_4_2(opts),
            "thm-4.3" => self.thm_4_3(),
            "thm-5.1" => self.thm_5_1(opts),
            "thm-5.3" => self.thm_5_3(opts),
            "prop-5.5" => self.prop_5_5(opts),
            "lem-5.8" => self.lem_5_8(opts),
            "lem-5.9" => self.lem_5_9(opts),
            "lem-5.10" => self.lem_5_10(opts),
            "lem-5.11" => self.lem_5_11(opts),
            "ex-5.12" => self.ex_5_12(),
            "prop-5.13" => self.prop_5_13(opts),
            "prop-5.14" => self.prop_5_14(opts),
            _ => Err(Error::UnknownSuite(suite.to_string())),
        }
    }

    pub fn run_all(&self, opts: &SuiteOptions) -> Result<Vec<SuiteOutcome>> {
        SUITES.iter().map(|s| self.run(s, opts)).collect()
    }

    fn finish(&self, id: &str, checker: Checker, analyses: &[Arc<Analysis>]) -> SuiteOutcome {
        let mut reports: Vec<PropertyReport> = analyses.iter().map(|a| a.report()).collect();
        reports.sort_by(|a, b| a.graph_id.cmp(&b.graph_id));
        SuiteOutcome {
            id: id.to_string(),
            passed: !checker.failed,
            lines: checker.lines,
            reports,
        }
    }

    // -- the cardinality characterization and its corollaries ---------------

    /// For every vertex-transitive corpus graph and every maximal clique,
    /// the direct strong test agrees with the cardinality criterion
    /// |C| * |I| = |V|.
    fn thm_3_1(&self, opts: &SuiteOptions) -> Result<SuiteOutcome> {
        let max = opts.corpus_max.unwrap_or(24);
        let analyses = self.multi(&[0, 1, 2, 3, 4, 5], max)?;
        let mut ck = Checker::new();
        ck.check(
            analyses.len() >= 40,
            format!("corpus has {} graphs (needs >= 40)", analyses.len()),
        );
        let failures: Vec<String> = analyses
            .par_iter()
            .flat_map(|a| {
                let mut bad = Vec::new();
                for (i, c) in a.cliques.iter().enumerate() {
                    let direct = a.strong[i];
                    let criterion = strong::vt_strong_criterion_with(&a.graph, c, &a.mis)
                        .expect("clique list members are cliques");
                    if direct != criterion {
                        bad.push(format!(
                            "{}: clique {:?} direct={} criterion={} {}",
                            a.id,
                            c.members(),
                            direct,
                            criterion,
                            witness(&a.graph)
                        ));
                    }
                }
                bad
            })
            .collect();
        let total: usize = analyses.iter().map(|a| a.cliques.len()).sum();
        ck.bulk(
            &format!(
                "direct strong test = cardinality criterion on every maximal clique of {} graphs",
                analyses.len()
            ),
            total,
            failures,
        );
        Ok(self.finish("thm-3.1", ck, &analyses))
    }

    /// A connected m-regular graph has a strong clique of size 2 iff it is
    /// the complete bipartite graph K_{m,m}.
    fn prop_2_2(&self, opts: &SuiteOptions) -> Result<SuiteOutcome> {
        let max = opts.corpus_max.unwrap_or(24);
        let analyses = self.multi(&[1, 2, 3, 4, 5], max)?;
        let mut ck = Checker::new();
        let failures: Vec<String> = analyses
            .par_iter()
            .filter_map(|a| {
                let m = a.graph.valency().expect("corpus graphs are regular");
                let has_strong_edge = a
                    .cliques
                    .iter()
                    .zip(a.strong.iter())
                    .any(|(c, &s)| s && c.len() == 2);
                let is_kmm =
                    perm::are_isomorphic(&a.graph, &standard::complete_bipartite(m, m));
                (has_strong_edge != is_kmm).then(|| {
                    format!(
                        "{}: strong 2-clique={} but K_{{{m},{m}}}-isomorphic={} {}",
                        a.id,
                        has_strong_edge,
                        is_kmm,
                        witness(&a.graph)
                    )
                })
            })
            .collect();
        ck.bulk(
            "strong 2-clique exists iff the graph is K_{m,m}",
            analyses.len(),
            failures,
        );
        Ok(self.finish("prop-2.2", ck, &analyses))
    }

    /// A vertex-transitive graph with a strong clique is well-covered, and
    /// all of its strong cliques are maximum.
    fn cor_3_2(&self, opts: &SuiteOptions) -> Result<SuiteOutcome> {
        let max = opts.corpus_max.unwrap_or(24);
        let analyses = self.multi(&[0, 1, 2, 3, 4, 5], max)?;
        let mut ck = Checker::new();
        let mut relevant = 0;
        let mut failures = Vec::new();
        for a in &analyses {
            if a.strong_clique.is_none() {
                continue;
            }
            relevant += 1;
            if !a.is_well_covered() {
                failures.push(format!("{}: not well-covered {}", a.id, witness(&a.graph)));
            }
            let omega = a.omega();
            for (c, &s) in a.cliques.iter().zip(a.strong.iter()) {
                if s && c.len() != omega {
                    failures.push(format!(
                        "{}: strong clique {:?} is not maximum {}",
                        a.id,
                        c.members(),
                        witness(&a.graph)
                    ));
                }
            }
        }
        ck.bulk(
            "graphs with a strong clique are well-covered and their strong cliques are maximum",
            relevant,
            failures,
        );
        Ok(self.finish("cor-3.2", ck, &analyses))
    }

    /// A vertex-transitive graph with a strong clique is localizable iff
    /// the chromatic number of its complement equals the clique number of
    /// its complement.
    fn cor_3_3(&self, opts: &SuiteOptions) -> Result<SuiteOutcome> {
        let max = opts.corpus_max.unwrap_or(24);
        let mut analyses = self.multi(&[0, 1, 2, 3, 4, 5], max)?;
        analyses.push(self.named("J(7,3,1)", || families::johnson(7, 3, 1))?);
        analyses.push(self.named("L(K6)", || standard::complete(6).line_graph())?);
        analyses.push(self.named("L(K8)", || standard::complete(8).line_graph())?);
        let mut ck = Checker::new();
        let failures: Vec<String> = analyses
            .par_iter()
            .filter_map(|a| {
                a.strong_clique.as_ref()?;
                let comp = a.graph.complement();
                // chi(comp) >= omega(comp) always; equality iff
                // omega(comp)-colorable
                let omega_comp = a.alpha();
                let chi_matches = clique::is_k_colorable(&comp, omega_comp)
                    .expect("corpus orders are under the solver cap");
                let localizable = a.localizable.is_some();
                (localizable != chi_matches).then(|| {
                    format!(
                        "{}: localizable={} but chi(comp)=omega(comp) is {} {}",
                        a.id,
                        localizable,
                        chi_matches,
                        witness(&a.graph)
                    )
                })
            })
            .collect();
        let relevant = analyses
            .iter()
            .filter(|a| a.strong_clique.is_some())
            .count();
        ck.bulk(
            "localizable iff chi(complement) = omega(complement), over graphs with a strong clique",
            relevant,
            failures,
        );
        Ok(self.finish("cor-3.3", ck, &analyses))
    }

    /// A vertex-transitive graph with a maximal clique of half the order
    /// splits into two strong cliques.
    fn cor_3_4(&self, opts: &SuiteOptions) -> Result<SuiteOutcome> {
        let max = opts.corpus_max.unwrap_or(24);
        let analyses = self.multi(&[1, 2, 3, 4, 5], max)?;
        let mut ck = Checker::new();
        let mut relevant = 0;
        let mut failures = Vec::new();
        for a in &analyses {
            let n = a.graph.n();
            if n == 0 || n % 2 != 0 || !a.cliques.iter().any(|c| c.len() == n / 2) {
                continue;
            }
            relevant += 1;
            match strong::half_order_clique_check(&a.graph) {
                Ok(parts) => {
                    let union: usize = parts.iter().map(|p| p.len()).sum();
                    if parts.len() != 2 || union != n {
                        failures.push(format!(
                            "{}: expected a two-part partition {}",
                            a.id,
                            witness(&a.graph)
                        ));
                    }
                }
                Err(e) => {
                    failures.push(format!("{}: {} {}", a.id, e, witness(&a.graph)));
                }
            }
        }
        ck.bulk(
            "graphs with a maximal clique of size |V|/2 split into two strong cliques",
            relevant,
            failures,
        );
        Ok(self.finish("cor-3.4", ck, &analyses))
    }

    /// A vertex-transitive graph is CIS iff it admits both a strong clique
    /// and a strong independent set.
    fn prop_3_6(&self, opts: &SuiteOptions) -> Result<SuiteOutcome> {
        let max = opts.corpus_max.unwrap_or(24);
        let analyses = self.multi(&[0, 1, 2, 3, 4, 5], max)?;
        let mut ck = Checker::new();
        let failures: Vec<String> = analyses
            .par_iter()
            .filter_map(|a| {
                let cis = a.is_cis();
                let both = strong::cis_by_strong_pair(&a.graph, &a.cliques, &a.mis);
                (cis != both).then(|| {
                    format!(
                        "{}: CIS={} but strong clique and strong independent set={} {}",
                        a.id,
                        cis,
                        both,
                        witness(&a.graph)
                    )
                })
            })
            .collect();
        ck.bulk(
            "CIS iff a strong clique and a strong independent set exist",
            analyses.len(),
            failures,
        );
        Ok(self.finish("prop-3.6", ck, &analyses))
    }

    /// In an irreducible vertex-transitive graph, a strong clique meets any
    /// other maximal clique in fewer than |C| - 1 vertices.
    fn lem_3_8(&self, opts: &SuiteOptions) -> Result<SuiteOutcome> {
        let max = opts.corpus_max.unwrap_or(24);
        let mut analyses = self.multi(&[1, 2, 3, 4, 5], max)?;
        analyses.push(self.named("J(7,3,1)", || families::johnson(7, 3, 1))?);
        let mut ck = Checker::new();
        let mut relevant = 0;
        let mut failures = Vec::new();
        for a in &analyses {
            if !a.graph.twins(false).is_empty() {
                continue; // reducible graphs are outside the hypothesis
            }
            relevant += 1;
            match strong::irreducible_intersection_check(&a.graph) {
                Ok(true) => {}
                Ok(false) => failures.push(format!(
                    "{}: intersection bound violated {}",
                    a.id,
                    witness(&a.graph)
                )),
                Err(e) => failures.push(format!("{}: {} {}", a.id, e, witness(&a.graph))),
            }
        }
        ck.bulk(
            "strong cliques meet other maximal cliques in < |C|-1 vertices (irreducible graphs)",
            relevant,
            failures,
        );
        Ok(self.finish("lem-3.8", ck, &analyses))
    }

    /// L(K6) and L(K8): vertex-transitive, strong cliques exist,
    /// omega = |V|/n, and not localizable.
    fn ex_3_5(&self) -> Result<SuiteOutcome> {
        let mut ck = Checker::new();
        let mut analyses = Vec::new();
        for half in [3usize, 4] {
            let id = format!("L(K{})", 2 * half);
            let a = self.named(&id, || standard::complete(2 * half).line_graph())?;
            ck.check(a.vertex_transitive, format!("{id} is vertex-transitive"));
            ck.check(
                a.strong_clique.is_some(),
                format!("{id} admits a strong clique"),
            );
            ck.check(
                a.omega() * half == a.graph.n(),
                format!("omega({id}) = |V|/{half}"),
            );
            ck.check(
                a.localizable.is_none(),
                format!("{id} is not localizable"),
            );
            analyses.push(a);
        }
        Ok(self.finish("ex-3.5", ck, &analyses))
    }

    /// A vertex-transitive CIS graph is localizable iff the independence
    /// number of its clique graph equals its independence number.
    fn lem_4_2(&self, opts: &SuiteOptions) -> Result<SuiteOutcome> {
        let max = opts.corpus_max.unwrap_or(24);
        let mut analyses = self.multi(&[0, 1, 2, 3, 4, 5], max)?;
        analyses.push(self.named("J(7,3,1)", || families::johnson(7, 3, 1))?);
        let mut ck = Checker::new();
        let failures: Vec<String> = analyses
            .par_iter()
            .filter_map(|a| {
                if !a.is_cis() {
                    return None;
                }
                let by_cover = a.localizable.is_some();
                let by_clique_graph = strong::localizable_by_clique_graph(&a.cliques, &a.mis);
                (by_cover != by_clique_graph).then(|| {
                    format!(
                        "{}: exact cover says {} but alpha(clique graph) criterion says {} {}",
                        a.id,
                        by_cover,
                        by_clique_graph,
                        witness(&a.graph)
                    )
                })
            })
            .collect();
        let relevant = analyses.iter().filter(|a| a.is_cis()).count();
        ck.bulk(
            "localizable iff alpha(clique graph) = alpha, over CIS graphs",
            relevant,
            failures,
        );
        Ok(self.finish("lem-4.2", ck, &analyses))
    }

    /// Full replay of the J(7,3,1) analysis: the graph is a
    /// vertex-transitive CIS graph that is not localizable.
    fn thm_4_3(&self) -> Result<SuiteOutcome> {
        let a = self.named("J(7,3,1)", || families::johnson(7, 3, 1))?;
        let mut ck = Checker::new();
        let g = &a.graph;
        ck.check(g.n() == 35, format!("order is 35 (got {})", g.n()));
        ck.check(
            g.valency() == Some(18),
            format!("valency is 18 (got {:?})", g.valency()),
        );
        ck.check(a.vertex_transitive, "vertex-transitive".into());
        ck.check(
            a.cliques.len() == 30,
            format!("30 maximal cliques (got {})", a.cliques.len()),
        );
        ck.check(
            a.cliques.iter().all(|c| c.len() == 7),
            "every maximal clique has size 7".into(),
        );
        ck.check(
            a.mis.iter().all(|s| s.len() == 5),
            "every maximal independent set has size 5".into(),
        );
        let mut edge_ok = true;
        for (u, v) in g.edges() {
            let count = a
                .cliques
                .iter()
                .filter(|c| c.contains(u) && c.contains(v))
                .count();
            if count != 2 {
                edge_ok = false;
                ck.fail(format!(
                    "edge ({u},{v}) lies in {count} maximal cliques, expected 2"
                ));
            }
        }
        if edge_ok {
            ck.ok("every edge lies in exactly 2 maximal cliques".into());
        }
        ck.check(a.is_cis(), "the graph is CIS".into());
        ck.check(a.localizable.is_none(), "the graph is not localizable".into());
        let q = clique::clique_graph_of(&a.cliques)?;
        ck.check(
            q.n() == 30,
            format!("clique graph has 30 vertices (got {})", q.n()),
        );
        ck.check(
            perm::is_vertex_transitive(&q),
            "clique graph is vertex-transitive".into(),
        );
        let omega_q = clique::clique_number(&q);
        let alpha_q = clique::independence_number(&q);
        ck.check(omega_q >= 7, format!("omega(clique graph) >= 7 (got {omega_q})"));
        ck.check(alpha_q <= 4, format!("alpha(clique graph) <= 4 (got {alpha_q})"));
        Ok(self.finish("thm-4.3", ck, &[a]))
    }

    // -- classifications at small valencies ---------------------------------

    /// Cubic classification: the connected cubic vertex-transitive graphs
    /// admitting a strong clique are K4, K_{3,3} and the complement of C6,
    /// and each is localizable.
    fn thm_5_1(&self, opts: &SuiteOptions) -> Result<SuiteOutcome> {
        let max = opts.corpus_max.unwrap_or(20);
        let analyses = self.corpus_analyses(3, max)?;
        let targets: Vec<(String, Graph)> = vec![
            ("K4".into(), standard::complete(4)),
            ("K3,3".into(), standard::complete_bipartite(3, 3)),
            ("C6-bar".into(), standard::cycle(6).complement()),
        ];
        self.classification("thm-5.1", &analyses, &targets, max)
    }

    /// 4-valent classification: the connected 4-valent vertex-transitive
    /// graphs admitting a strong clique are K_{4,4}, K5, K3[2K1],
    /// L(K_{3,3}), H_n, Cay(Z_{3k}, {±1, ±k}) and C3 □ C_n, and each is
    /// localizable.
    fn thm_5_3(&self, opts: &SuiteOptions) -> Result<SuiteOutcome> {
        let max = opts.corpus_max.unwrap_or(24).min(32);
        let analyses = self.corpus_analyses(4, max)?;
        let mut targets: Vec<(String, Graph)> = vec![
            ("K4,4".into(), standard::complete_bipartite(4, 4)),
            ("K5".into(), standard::complete(5)),
            (
                "K3[2K1]".into(),
                standard::complete(3).lexicographic_product(&standard::empty(2))?,
            ),
            (
                "L(K3,3)".into(),
                standard::complete_bipartite(3, 3).line_graph()?,
            ),
        ];
        for n in 2..=max / 4 {
            targets.push((format!("H{n}"), families::h_graph(n)?));
        }
        for k in 2..=max / 3 {
            targets.push((
                format!("Cay(Z{},±{{1,{}}})", 3 * k, k),
                families::circulant(3 * k, &[1, k])?,
            ));
        }
        for n in 3..=max / 3 {
            targets.push((
                format!("C3xC{n}"),
                standard::complete(3).cartesian_product(&standard::cycle(n))?,
            ));
        }
        self.classification("thm-5.3", &analyses, &targets, max)
    }

    /// Shared engine for the classification suites: every target admits a
    /// strong clique and is localizable; every corpus graph with a strong
    /// clique is isomorphic to a target.
    fn classification(
        &self,
        id: &str,
        analyses: &[Arc<Analysis>],
        targets: &[(String, Graph)],
        max: usize,
    ) -> Result<SuiteOutcome> {
        let mut ck = Checker::new();
        let target_checks: Vec<(String, bool, bool)> = targets
            .par_iter()
            .map(|(tid, g)| {
                let a = Analysis::run(tid, g);
                (
                    tid.clone(),
                    a.strong_clique.is_some(),
                    a.localizable.is_some(),
                )
            })
            .collect();
        for (tid, has_strong, localizable) in &target_checks {
            ck.check(
                *has_strong && *localizable,
                format!("{tid} admits a strong clique and is localizable"),
            );
        }
        let failures: Vec<String> = analyses
            .par_iter()
            .filter_map(|a| {
                a.strong_clique.as_ref()?;
                let matched = targets
                    .iter()
                    .any(|(_, t)| t.n() == a.graph.n() && perm::are_isomorphic(t, &a.graph));
                (!matched).then(|| {
                    format!(
                        "{}: admits a strong clique but is not a listed graph {}",
                        a.id,
                        witness(&a.graph)
                    )
                })
            })
            .collect();
        ck.bulk(
            &format!(
                "every corpus graph (order <= {max}) with a strong clique is a listed graph"
            ),
            analyses.len(),
            failures,
        );
        let strong_count = analyses
            .iter()
            .filter(|a| a.strong_clique.is_some())
            .count();
        ck.ok(format!(
            "{strong_count} of {} corpus graphs admit a strong clique",
            analyses.len()
        ));
        Ok(self.finish(id, ck, analyses))
    }

    /// 5-valent, clique number != 4: unique examples K_{5,5} (omega 2),
    /// Cay(Z12, {±1, ±4, 6}) (omega 3), K5 □ K2 (omega 5), K6 (omega 6).
    fn prop_5_5(&self, opts: &SuiteOptions) -> Result<SuiteOutcome> {
        let max = opts.corpus_max.unwrap_or(24);
        let analyses = self.corpus_analyses(5, max)?;
        let targets: Vec<(usize, String, Graph)> = vec![
            (2, "K5,5".into(), standard::complete_bipartite(5, 5)),
            (
                3,
                "Cay(Z12,{1,4,6,8,11})".into(),
                families::circulant(12, &[1, 4, 6])?,
            ),
            (
                5,
                "K5xK2".into(),
                standard::complete(5).cartesian_product(&standard::complete(2))?,
            ),
            (6, "K6".into(), standard::complete(6)),
        ];
        let mut ck = Checker::new();
        for (omega, tid, g) in &targets {
            let a = Analysis::run(tid, g);
            ck.check(
                a.omega() == *omega && a.strong_clique.is_some(),
                format!("{tid} has omega {omega} and a strong clique"),
            );
        }
        let failures: Vec<String> = analyses
            .par_iter()
            .filter_map(|a| {
                if a.strong_clique.is_none() || a.omega() == 4 {
                    return None;
                }
                let expected = targets.iter().find(|(w, _, _)| *w == a.omega());
                let ok = expected
                    .map(|(_, _, t)| t.n() == a.graph.n() && perm::are_isomorphic(t, &a.graph))
                    .unwrap_or(false);
                (!ok).then(|| {
                    format!(
                        "{}: strong clique with omega {} but not the listed graph {}",
                        a.id,
                        a.omega(),
                        witness(&a.graph)
                    )
                })
            })
            .collect();
        ck.bulk(
            "every 5-valent corpus graph with a strong clique and omega != 4 is the unique listed graph",
            analyses.len(),
            failures,
        );
        Ok(self.finish("prop-5.5", ck, &analyses))
    }

    /// No vertex-transitive graph has a local graph X with a unique
    /// maximum clique C, an edge outside C, and every edge meeting C.
    /// Probed over all five-vertex X against the 5-valent corpus.
    fn lem_5_8(&self, opts: &SuiteOptions) -> Result<SuiteOutcome> {
        let max = opts.corpus_max.unwrap_or(24);
        let analyses = self.corpus_analyses(5, max)?;
        let mut ck = Checker::new();
        let hypotheses: Vec<Graph> = five_vertex_classes()
            .into_iter()
            .filter(matches_lem_5_8_hypothesis)
            .collect();
        ck.check(
            !hypotheses.is_empty(),
            format!("{} five-vertex graphs match the hypothesis", hypotheses.len()),
        );
        for l in [2usize, 3] {
            let lg = standard::local_graph_l(l)?;
            ck.check(
                hypotheses.iter().any(|x| perm::are_isomorphic(x, &lg)),
                format!("L{l} matches the hypothesis"),
            );
        }
        let failures: Vec<String> = analyses
            .par_iter()
            .filter_map(|a| {
                let local = a.graph.local_graph(0).expect("corpus graphs are regular");
                hypotheses
                    .iter()
                    .any(|x| perm::are_isomorphic(x, &local))
                    .then(|| {
                        format!(
                            "{}: local graph matches a forbidden shape {}",
                            a.id,
                            witness(&a.graph)
                        )
                    })
            })
            .collect();
        ck.bulk(
            "no 5-valent corpus graph has a forbidden local graph",
            analyses.len(),
            failures,
        );
        Ok(self.finish("lem-5.8", ck, &analyses))
    }

    /// No vertex-transitive graph has local graph L5.
    fn lem_5_9(&self, opts: &SuiteOptions) -> Result<SuiteOutcome> {
        let max = opts.corpus_max.unwrap_or(24);
        let analyses = self.corpus_analyses(5, max)?;
        let l5 = standard::local_graph_l(5)?;
        let mut ck = Checker::new();
        let failures: Vec<String> = analyses
            .par_iter()
            .filter_map(|a| {
                let local = a.graph.local_graph(0).expect("corpus graphs are regular");
                perm::are_isomorphic(&local, &l5).then(|| {
                    format!("{}: local graph is L5 {}", a.id, witness(&a.graph))
                })
            })
            .collect();
        ck.bulk(
            "no 5-valent corpus graph has local graph L5",
            analyses.len(),
            failures,
        );
        Ok(self.finish("lem-5.9", ck, &analyses))
    }

    /// The only connected vertex-transitive graph with local graph L6 is
    /// the complement of C8.
    fn lem_5_10(&self, opts: &SuiteOptions) -> Result<SuiteOutcome> {
        let max = opts.corpus_max.unwrap_or(24);
        let analyses = self.corpus_analyses(5, max)?;
        let l6 = standard::local_graph_l(6)?;
        let c8bar = standard::cycle(8).complement();
        let mut ck = Checker::new();
        ck.check(
            perm::are_isomorphic(&c8bar.local_graph(0)?, &l6),
            "the local graph of C8-bar is L6".into(),
        );
        let failures: Vec<String> = analyses
            .par_iter()
            .filter_map(|a| {
                let local = a.graph.local_graph(0).expect("corpus graphs are regular");
                let has_l6 = perm::are_isomorphic(&local, &l6);
                let is_c8bar = a.graph.n() == 8 && perm::are_isomorphic(&a.graph, &c8bar);
                (has_l6 != is_c8bar).then(|| {
                    format!(
                        "{}: local graph L6 = {} but C8-bar-isomorphic = {} {}",
                        a.id,
                        has_l6,
                        is_c8bar,
                        witness(&a.graph)
                    )
                })
            })
            .collect();
        ck.bulk(
            "local graph is L6 iff the graph is C8-bar",
            analyses.len(),
            failures,
        );
        Ok(self.finish("lem-5.10", ck, &analyses))
    }

    /// Among graphs with local graph L4, exactly K3 □ K4 admits a strong
    /// clique.
    fn lem_5_11(&self, opts: &SuiteOptions) -> Result<SuiteOutcome> {
        let max = opts.corpus_max.unwrap_or(24);
        let analyses = self.corpus_analyses(5, max)?;
        let l4 = standard::local_graph_l(4)?;
        let k3xk4 = standard::complete(3).cartesian_product(&standard::complete(4))?;
        let mut ck = Checker::new();
        ck.check(
            perm::are_isomorphic(&k3xk4.local_graph(0)?, &l4),
            "the local graph of K3xK4 is L4".into(),
        );
        let mut with_l4 = 0;
        let mut failures = Vec::new();
        for a in analyses.iter() {
            let local = a.graph.local_graph(0).expect("corpus graphs are regular");
            if !perm::are_isomorphic(&local, &l4) {
                continue;
            }
            with_l4 += 1;
            let has_strong = a.strong_clique.is_some();
            let is_k3xk4 = a.graph.n() == 12 && perm::are_isomorphic(&a.graph, &k3xk4);
            if has_strong != is_k3xk4 {
                failures.push(format!(
                    "{}: local graph L4, strong clique = {}, K3xK4-isomorphic = {} {}",
                    a.id,
                    has_strong,
                    is_k3xk4,
                    witness(&a.graph)
                ));
            }
        }
        ck.check(with_l4 >= 1, format!("{with_l4} corpus graphs have local graph L4"));
        ck.bulk(
            "among graphs with local graph L4, exactly K3xK4 has a strong clique",
            with_l4,
            failures,
        );
        Ok(self.finish("lem-5.11", ck, &analyses))
    }

    /// The four 5-valent families with local graph L1: each member is
    /// 5-regular, vertex-transitive, has every local graph isomorphic to
    /// L1, a strong clique of size 4, and is localizable.
    fn ex_5_12(&self) -> Result<SuiteOutcome> {
        let l1 = standard::local_graph_l(1)?;
        let mut ck = Checker::new();
        let mut analyses = Vec::new();
        let members: Vec<(String, Graph)> = {
            let mut v = Vec::new();
            for n in 4..=6 {
                for which in [L1Family::A, L1Family::B, L1Family::C, L1Family::D] {
                    v.push((
                        format!("L1-family-{which:?}-{n}"),
                        families::family_l1(which, n)?,
                    ));
                }
            }
            v
        };
        let results: Vec<(Arc<Analysis>, bool, bool, bool, bool)> = members
            .par_iter()
            .map(|(id, g)| {
                let a = Arc::new(Analysis::run(id, g));
                let regular = g.valency() == Some(5);
                let locals_l1 = (0..g.n()).all(|v| {
                    perm::are_isomorphic(&g.local_graph(v).expect("5-regular"), &l1)
                });
                let strong4 = a.strong_clique.as_ref().map(|c| c.len()) == Some(4);
                let localizable = a.localizable.is_some();
                (a, regular, locals_l1, strong4, localizable)
            })
            .collect();
        for (a, regular, locals_l1, strong4, localizable) in results {
            ck.check(regular, format!("{} is 5-regular", a.id));
            ck.check(a.vertex_transitive, format!("{} is vertex-transitive", a.id));
            ck.check(locals_l1, format!("{} has every local graph L1", a.id));
            ck.check(strong4, format!("{} has a strong clique of size 4", a.id));
            ck.check(localizable, format!("{} is localizable", a.id));
            analyses.push(a);
        }
        Ok(self.finish("ex-5.12", ck, &analyses))
    }

    /// 5-valent classification away from L1: a graph with local graph not
    /// isomorphic to L1 admits a strong clique iff it is one of the seven
    /// listed graphs.
    fn prop_5_13(&self, opts: &SuiteOptions) -> Result<SuiteOutcome> {
        let max = opts.corpus_max.unwrap_or(24);
        let analyses = self.corpus_analyses(5, max)?;
        let l1 = standard::local_graph_l(1)?;
        let targets: Vec<(String, Graph)> = vec![
            ("K6".into(), standard::complete(6)),
            ("C8-bar".into(), standard::cycle(8).complement()),
            (
                "C4[K2]".into(),
                standard::cycle(4).lexicographic_product(&standard::complete(2))?,
            ),
            ("K5,5".into(), standard::complete_bipartite(5, 5)),
            (
                "K5xK2".into(),
                standard::complete(5).cartesian_product(&standard::complete(2))?,
            ),
            (
                "K3xK4".into(),
                standard::complete(3).cartesian_product(&standard::complete(4))?,
            ),
            (
                "Cay(Z12,{1,4,6,8,11})".into(),
                families::circulant(12, &[1, 4, 6])?,
            ),
        ];
        let mut ck = Checker::new();
        for (tid, g) in &targets {
            let a = Analysis::run(tid, g);
            ck.check(
                a.strong_clique.is_some(),
                format!("{tid} admits a strong clique"),
            );
        }
        let failures: Vec<String> = analyses
            .par_iter()
            .filter_map(|a| {
                let local = a.graph.local_graph(0).expect("corpus graphs are regular");
                if perm::are_isomorphic(&local, &l1) {
                    return None;
                }
                let has_strong = a.strong_clique.is_some();
                let listed = targets
                    .iter()
                    .any(|(_, t)| t.n() == a.graph.n() && perm::are_isomorphic(t, &a.graph));
                (has_strong != listed).then(|| {
                    format!(
                        "{}: local graph != L1, strong clique = {}, listed = {} {}",
                        a.id,
                        has_strong,
                        listed,
                        witness(&a.graph)
                    )
                })
            })
            .collect();
        ck.bulk(
            "away from L1, a strong clique exists iff the graph is one of the seven listed",
            analyses.len(),
            failures,
        );
        Ok(self.finish("prop-5.13", ck, &analyses))
    }

    /// Valency at most 5: a strong clique exists iff the graph is
    /// localizable.
    fn prop_5_14(&self, opts: &SuiteOptions) -> Result<SuiteOutcome> {
        let max = opts.corpus_max.unwrap_or(24);
        let analyses = self.multi(&[0, 1, 2, 3, 4, 5], max)?;
        let mut ck = Checker::new();
        let failures: Vec<String> = analyses
            .par_iter()
            .filter_map(|a| {
                let has_strong = a.strong_clique.is_some();
                let localizable = a.localizable.is_some();
                (has_strong != localizable).then(|| {
                    format!(
                        "{}: strong clique = {} but localizable = {} {}",
                        a.id,
                        has_strong,
                        localizable,
                        witness(&a.graph)
                    )
                })
            })
            .collect();
        ck.bulk(
            "a strong clique exists iff the graph is localizable (valency <= 5 corpus)",
            analyses.len(),
            failures,
        );
        Ok(self.finish("prop-5.14", ck, &analyses))
    }
}

/// All graphs on five vertices, one representative per isomorphism class.
fn five_vertex_classes() -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..5)
        .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
        .collect();
    let all: Vec<Graph> = (0u32..1 << 10)
        .map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::from_edges(5, &edges).expect("valid five-vertex edges")
        })
        .collect();
    let tagged: Vec<CorpusGraph> = all
        .into_iter()
        .enumerate()
        .map(|(i, graph)| CorpusGraph {
            id: format!("g{i}"),
            graph,
            vertex_transitive: false,
        })
        .collect();
    corpus::dedup_isomorphic(tagged)
        .into_iter()
        .map(|c| c.graph)
        .collect()
}

/// Hypothesis of the forbidden-local-graph lemma: a unique maximum clique
/// C, at least one edge not inside C, and every edge meeting C.
fn matches_lem_5_8_hypothesis(x: &Graph) -> bool {
    let cliques = clique::maximal_cliques(x);
    let omega = cliques.max_size();
    if omega < 2 {
        return false;
    }
    let maxima: Vec<&VertexSet> = cliques.iter().filter(|c| c.len() == omega).collect();
    if maxima.len() != 1 {
        return false;
    }
    let c = maxima[0];
    let mut outside_edge = false;
    for (u, v) in x.edges() {
        let in_c = c.contains(u) && c.contains(v);
        if !in_c {
            outside_edge = true;
        }
        if !c.contains(u) && !c.contains(v) {
            return false; // an edge disjoint from C
        }
    }
    outside_edge
}
