//! Randomized property suite tying the fast solver, the brute-force
//! oracles, and the gadget constructions to each other.
//!
//! Every property is a pure function of (config, trial index), so trials can
//! run in any order — in parallel under the `parallel` feature — and the
//! report is still deterministic: the recorded witness is always the one
//! from the lowest failing trial index.
//!
//! `Fault` exists for testing the harness itself: it corrupts solver output
//! before the checks run, and a correct harness must then fail the
//! structural property with a witness naming the damage.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::generate::{connected_catalog, random_block_graph, random_bounded_degree_graph};
use crate::graph::Graph;
use crate::oracle::{
    min_dominating_set, min_paired_dominating, min_semipaired_dominating, min_vertex_cover,
    OracleBudget,
};
use crate::reductions::{
    apx_reduction, degree_split, gp4, gp5, lift_semipd_degree_split, project_semipd_degree_split,
    satisfies_split_property, semipd_from_vertex_cover, split_reduction, vertex_cover_from_semipd,
};
use crate::solver::{solve_block_graph, verify_solution, SemipairedSolution};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Replace the solver's first pair (a, b) with the self-pair (a, a).
    CorruptPairing,
}

#[derive(Debug, Clone)]
pub struct HarnessConfig {
    pub seed: u64,
    pub trials: usize,
    pub n_max: usize,
    pub fault: Option<Fault>,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig {
            seed: 7,
            trials: 100,
            n_max: 12,
            fault: None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct PropertyReport {
    pub name: &'static str,
    pub trials: usize,
    pub passed: bool,
    /// Counterexample description from the lowest failing trial.
    pub witness: Option<String>,
}

struct Property {
    name: &'static str,
    trials: fn(&HarnessConfig) -> usize,
    check: fn(&HarnessConfig, usize) -> Result<(), String>,
}

fn trial_rng(cfg: &HarnessConfig, salt: u64, trial: usize) -> ChaCha8Rng {
    let stream = cfg
        .seed
        .wrapping_mul(0x9e37_79b9_7f4a_7c15)
        .wrapping_add(salt)
        .wrapping_add((trial as u64).wrapping_mul(0x2545_f491_4f6c_dd1d));
    ChaCha8Rng::seed_from_u64(stream)
}

fn edge_dump(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(a, b)| format!("{a}-{b}")).collect();
    format!("n={} edges[{}]", g.n(), edges.join(","))
}

fn apply_fault(cfg: &HarnessConfig, s: SemipairedSolution) -> SemipairedSolution {
    match cfg.fault {
        Some(Fault::CorruptPairing) if !s.pairs().is_empty() => {
            let mut pairs = s.pairs().to_vec();
            pairs[0] = (pairs[0].0, pairs[0].0);
            SemipairedSolution::from_pairs(s.n(), pairs)
        }
        _ => s,
    }
}

// ---- properties ------------------------------------------------------

/// Fast solver output has the oracle's optimal size on random block graphs.
fn solver_matches_oracle(cfg: &HarnessConfig, trial: usize) -> Result<(), String> {
    let mut rng = trial_rng(cfg, 0x01, trial);
    let n = rng.gen_range(2..=cfg.n_max.clamp(2, 14));
    let max_clique = rng.gen_range(2..=5);
    let g = random_block_graph(rng.gen(), n, max_clique).map_err(|e| e.to_string())?;
    let fast = solve_block_graph(&g).map_err(|e| format!("solver: {e} on {}", edge_dump(&g)))?;
    let best = min_semipaired_dominating(&g, &OracleBudget::default())
        .map_err(|e| format!("oracle: {e} on {}", edge_dump(&g)))?;
    if fast.size() != best.size() {
        return Err(format!(
            "trial {trial}: solver found {} vertices, oracle {} on {}",
            fast.size(),
            best.size(),
            edge_dump(&g)
        ));
    }
    Ok(())
}

/// Solver output passes the structural verifier on random block graphs.
/// This is where an injected pairing fault must surface.
fn solutions_verify(cfg: &HarnessConfig, trial: usize) -> Result<(), String> {
    let mut rng = trial_rng(cfg, 0x02, trial);
    let n = rng.gen_range(2..=cfg.n_max.clamp(2, 14));
    let max_clique = rng.gen_range(2..=5);
    let g = random_block_graph(rng.gen(), n, max_clique).map_err(|e| e.to_string())?;
    let s = solve_block_graph(&g).map_err(|e| format!("solver: {e} on {}", edge_dump(&g)))?;
    let s = apply_fault(cfg, s);
    verify_solution(&g, &s).map_err(|viols| {
        format!(
            "trial {trial}: solution {:?} fails on {}: {}",
            s.pairs(),
            edge_dump(&g),
            viols[0]
        )
    })
}

/// gamma <= gamma_pr2 <= gamma_pr on random connected graphs.
fn domination_chain(cfg: &HarnessConfig, trial: usize) -> Result<(), String> {
    let mut rng = trial_rng(cfg, 0x03, trial);
    let n = rng.gen_range(2..=cfg.n_max.clamp(2, 12));
    let max_deg = if n == 2 { 1 } else { rng.gen_range(2..n) };
    let g = random_bounded_degree_graph(rng.gen(), n, max_deg).map_err(|e| e.to_string())?;
    let budget = OracleBudget::default();
    let dom = min_dominating_set(&g, &budget).map_err(|e| e.to_string())?;
    let semi = min_semipaired_dominating(&g, &budget).map_err(|e| e.to_string())?;
    let paired = min_paired_dominating(&g, &budget).map_err(|e| e.to_string())?;
    if dom.len() <= semi.size() && semi.size() <= paired.size() {
        Ok(())
    } else {
        Err(format!(
            "trial {trial}: chain broken ({} / {} / {}) on {}",
            dom.len(),
            semi.size(),
            paired.size(),
            edge_dump(&g)
        ))
    }
}

/// Hanging a 4-edge path on every vertex forces the semipaired domination
/// number to exactly twice the source order.
fn pendant_path_identity(cfg: &HarnessConfig, trial: usize) -> Result<(), String> {
    let catalog = connected_catalog(1, 4);
    let h = &catalog[trial % catalog.len()];
    let gg = gp4(h).map_err(|e| e.to_string())?;
    let best = min_semipaired_dominating(&gg.graph, &OracleBudget::default())
        .map_err(|e| e.to_string())?;
    let _ = cfg;
    if best.size() == 2 * h.n() {
        Ok(())
    } else {
        Err(format!(
            "gp4 of {} has minimum {} instead of {}",
            edge_dump(h),
            best.size(),
            2 * h.n()
        ))
    }
}

/// Joining a fresh 5-path at its center to every vertex forces the paired
/// domination number to exactly four times the source order.
fn branch_path_identity(cfg: &HarnessConfig, trial: usize) -> Result<(), String> {
    let catalog = connected_catalog(1, 3);
    let h = &catalog[trial % catalog.len()];
    let gg = gp5(h).map_err(|e| e.to_string())?;
    let best =
        min_paired_dominating(&gg.graph, &OracleBudget::default()).map_err(|e| e.to_string())?;
    let _ = cfg;
    if best.size() == 4 * h.n() {
        Ok(())
    } else {
        Err(format!(
            "gp5 of {} has paired minimum {} instead of {}",
            edge_dump(h),
            best.size(),
            4 * h.n()
        ))
    }
}

/// Paired domination of the pendant-path gadget exceeds the source's by
/// exactly 2 per source vertex.
fn pendant_path_offset(cfg: &HarnessConfig, trial: usize) -> Result<(), String> {
    let catalog = connected_catalog(2, 3);
    let h = &catalog[trial % catalog.len()];
    let gg = gp4(h).map_err(|e| e.to_string())?;
    let budget = OracleBudget::default();
    let inner = min_paired_dominating(h, &budget).map_err(|e| e.to_string())?;
    let outer = min_paired_dominating(&gg.graph, &budget).map_err(|e| e.to_string())?;
    let _ = cfg;
    if outer.size() == 2 * h.n() + inner.size() {
        Ok(())
    } else {
        Err(format!(
            "gp4 of {}: paired minimum {} != 2*{} + {}",
            edge_dump(h),
            outer.size(),
            h.n(),
            inner.size()
        ))
    }
}

/// Semipaired domination of the branch-path gadget exceeds the source's by
/// exactly 2 per source vertex.
fn branch_path_offset(cfg: &HarnessConfig, trial: usize) -> Result<(), String> {
    let catalog = connected_catalog(2, 3);
    let h = &catalog[trial % catalog.len()];
    let gg = gp5(h).map_err(|e| e.to_string())?;
    let budget = OracleBudget::default();
    let inner = min_semipaired_dominating(h, &budget).map_err(|e| e.to_string())?;
    let outer = min_semipaired_dominating(&gg.graph, &budget).map_err(|e| e.to_string())?;
    let _ = cfg;
    if outer.size() == 2 * h.n() + inner.size() {
        Ok(())
    } else {
        Err(format!(
            "gp5 of {}: semipaired minimum {} != 2*{} + {}",
            edge_dump(h),
            outer.size(),
            h.n(),
            inner.size()
        ))
    }
}

/// The split construction doubles the domination number, and its output has
/// the promised clique / independent-set shape.
fn split_identity(cfg: &HarnessConfig, trial: usize) -> Result<(), String> {
    let catalog = connected_catalog(2, 5);
    let g = &catalog[trial % catalog.len()];
    let gg = split_reduction(g).map_err(|e| e.to_string())?;
    if !satisfies_split_property(&gg) {
        return Err(format!("split of {} is not a split graph", edge_dump(g)));
    }
    let budget = OracleBudget::default();
    let dom = min_dominating_set(g, &budget).map_err(|e| e.to_string())?;
    let semi = min_semipaired_dominating(&gg.graph, &budget).map_err(|e| e.to_string())?;
    if semi.size() != 2 * dom.len() {
        return Err(format!(
            "split of {}: semipaired minimum {} != 2*{}",
            edge_dump(g),
            semi.size(),
            dom.len()
        ));
    }
    let back = dominating_from(&gg, &semi)?;
    let _ = cfg;
    if back > semi.size() / 2 {
        return Err(format!(
            "split of {}: pulled-back dominating set has {} > {}",
            edge_dump(g),
            back,
            semi.size() / 2
        ));
    }
    Ok(())
}

fn dominating_from(
    gg: &crate::reductions::GadgetGraph,
    s: &SemipairedSolution,
) -> Result<usize, String> {
    crate::reductions::dominating_from_semipd(gg, s)
        .map(|d| d.len())
        .map_err(|e| e.to_string())
}

/// The bipartite bounded-degree construction pins the semipaired domination
/// number at twice the cover number plus twice the order, and the solution
/// maps land within their size contracts.
fn apx_identity(cfg: &HarnessConfig, trial: usize) -> Result<(), String> {
    let sources = [Graph::path(2), Graph::path(3), Graph::cycle(3)];
    let g = &sources[trial % sources.len()];
    let gg = apx_reduction(g).map_err(|e| e.to_string())?;
    if !gg.graph.is_bipartite() || gg.graph.max_degree() > 4 {
        return Err(format!("apx of {} has the wrong shape", edge_dump(g)));
    }
    let budget = OracleBudget::with_max_n(24);
    let cover = min_vertex_cover(g, &budget).map_err(|e| e.to_string())?;
    let semi = min_semipaired_dominating(&gg.graph, &budget).map_err(|e| e.to_string())?;
    let want = 2 * cover.len() + 2 * g.n();
    if semi.size() != want {
        return Err(format!(
            "apx of {}: semipaired minimum {} != {}",
            edge_dump(g),
            semi.size(),
            want
        ));
    }
    let forward = semipd_from_vertex_cover(&gg, &cover).map_err(|e| e.to_string())?;
    if forward.size() != want || verify_solution(&gg.graph, &forward).is_err() {
        return Err(format!(
            "apx of {}: forward-mapped cover is not a valid solution of size {want}",
            edge_dump(g)
        ));
    }
    let back = vertex_cover_from_semipd(&gg, &semi).map_err(|e| e.to_string())?;
    let _ = cfg;
    if back.len() != cover.len() {
        return Err(format!(
            "apx of {}: pulled-back cover has {} vertices, optimum is {}",
            edge_dump(g),
            back.len(),
            cover.len()
        ));
    }
    Ok(())
}

/// Rewiring every degree-4 vertex through the 7-vertex widget raises the
/// semipaired domination number by exactly 2 per widget, the lift meets
/// that size, and the projection comes back no bigger than it left.
fn degsplit_identity(cfg: &HarnessConfig, trial: usize) -> Result<(), String> {
    let mut rng = trial_rng(cfg, 0x0a, trial);
    // keep the widget graph inside the oracle cap: n + 6k <= 22
    let (g, k) = loop {
        let n = rng.gen_range(5..=9);
        let g = random_bounded_degree_graph(rng.gen(), n, 4).map_err(|e| e.to_string())?;
        let k = (0..g.n()).filter(|&v| g.degree(v) == 4).count();
        if n + 6 * k <= 22 {
            break (g, k);
        }
    };
    let gg = degree_split(&g).map_err(|e| e.to_string())?;
    if gg.graph.max_degree() > 3 {
        return Err(format!(
            "degree split of {} kept a degree-4 vertex",
            edge_dump(&g)
        ));
    }
    let budget = OracleBudget::default();
    let before = min_semipaired_dominating(&g, &budget).map_err(|e| e.to_string())?;
    let after = min_semipaired_dominating(&gg.graph, &budget).map_err(|e| e.to_string())?;
    if after.size() != before.size() + 2 * k {
        return Err(format!(
            "trial {trial}: widget graph minimum {} != {} + 2*{k} on {}",
            after.size(),
            before.size(),
            edge_dump(&g)
        ));
    }
    let lifted = lift_semipd_degree_split(&g, &gg, &before).map_err(|e| e.to_string())?;
    if lifted.size() != before.size() + 2 * k || verify_solution(&gg.graph, &lifted).is_err() {
        return Err(format!(
            "trial {trial}: lifted solution invalid or off-size on {}",
            edge_dump(&g)
        ));
    }
    let back = project_semipd_degree_split(&g, &gg, &lifted).map_err(|e| e.to_string())?;
    if back.size() > before.size() || verify_solution(&g, &back).is_err() {
        return Err(format!(
            "trial {trial}: projected solution invalid or too big on {}",
            edge_dump(&g)
        ));
    }
    Ok(())
}

fn capped_to(catalog_len: usize) -> impl Fn(&HarnessConfig) -> usize {
    move |cfg| cfg.trials.min(catalog_len)
}

fn properties() -> Vec<Property> {
    fn all(cfg: &HarnessConfig) -> usize {
        cfg.trials
    }
    // catalog sizes: connected graphs on 1..=4 vertices: 1+1+2+6 = 10;
    // on 1..=3: 4; on 2..=3: 3; on 2..=5: 30
    vec![
        Property {
            name: "solver-matches-oracle",
            trials: all,
            check: solver_matches_oracle,
        },
        Property {
            name: "solutions-verify",
            trials: all,
            check: solutions_verify,
        },
        Property {
            name: "domination-chain",
            trials: all,
            check: domination_chain,
        },
        Property {
            name: "pendant-path-identity",
            trials: |cfg| capped_to(10)(cfg),
            check: pendant_path_identity,
        },
        Property {
            name: "branch-path-identity",
            trials: |cfg| capped_to(4)(cfg),
            check: branch_path_identity,
        },
        Property {
            name: "pendant-path-offset",
            trials: |cfg| capped_to(3)(cfg),
            check: pendant_path_offset,
        },
        Property {
            name: "branch-path-offset",
            trials: |cfg| capped_to(3)(cfg),
            check: branch_path_offset,
        },
        Property {
            name: "split-identity",
            trials: |cfg| capped_to(30)(cfg),
            check: split_identity,
        },
        Property {
            name: "apx-identity",
            trials: |cfg| capped_to(3)(cfg),
            check: apx_identity,
        },
        Property {
            name: "degsplit-identity",
            trials: all,
            check: degsplit_identity,
        },
    ]
}

fn first_failure(results: Vec<(usize, Result<(), String>)>) -> Option<String> {
    results
        .into_iter()
        .filter_map(|(i, r)| r.err().map(|w| (i, w)))
        .min_by_key(|&(i, _)| i)
        .map(|(_, w)| w)
}

fn run_property_seq(p: &Property, cfg: &HarnessConfig) -> PropertyReport {
    let trials = (p.trials)(cfg);
    let results: Vec<(usize, Result<(), String>)> =
        (0..trials).map(|t| (t, (p.check)(cfg, t))).collect();
    let witness = first_failure(results);
    PropertyReport {
        name: p.name,
        trials,
        passed: witness.is_none(),
        witness,
    }
}

#[cfg(feature = "parallel")]
fn run_property(p: &Property, cfg: &HarnessConfig) -> PropertyReport {
    use rayon::prelude::*;
    let trials = (p.trials)(cfg);
    let results: Vec<(usize, Result<(), String>)> = (0..trials)
        .into_par_iter()
        .map(|t| (t, (p.check)(cfg, t)))
        .collect();
    let witness = first_failure(results);
    PropertyReport {
        name: p.name,
        trials,
        passed: witness.is_none(),
        witness,
    }
}

#[cfg(not(feature = "parallel"))]
fn run_property(p: &Property, cfg: &HarnessConfig) -> PropertyReport {
    run_property_seq(p, cfg)
}

/// Run every property, trials in parallel when the `parallel` feature is on.
pub fn run(cfg: &HarnessConfig) -> Vec<PropertyReport> {
    properties().iter().map(|p| run_property(p, cfg)).collect()
}

/// Strictly sequential variant, for benchmarking and determinism checks.
pub fn run_seq(cfg: &HarnessConfig) -> Vec<PropertyReport> {
    properties().iter().map(|p| run_property_seq(p, cfg)).collect()
}
