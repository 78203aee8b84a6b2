//! Exhaustive checkers for open conjectures and proven theorems about square
//! energies, plus family sweeps.
//!
//! Each check evaluates one or more clauses per graph. A clause yields a
//! margin (`value − bound` unless stated otherwise) and a violation flag.
//! Reports are sorted so that identical inputs give identical output.

use std::cmp::Ordering;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerate::connected_graphs;
use crate::error::{Error, Result};
use crate::family::{FamilySpec, Figure};
use crate::graph::Graph;
use crate::graph6;
use crate::invariants::{invariants, matching_number, InvariantSet};
use crate::removal::{p3_lemma_margin, p3_strip};
use crate::spectral::{graph_energies, zero_tol_factor, Energies, Sign, EIG_TOL_ENV};

pub const VIOLATION_TOL: f64 = 1e-7;
pub const NEAR_MISS_KEEP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CheckId {
    C1,
    C2,
    Unicyclic,
    TreeEq,
    Omega3,
    Theorems,
}

impl CheckId {
    pub const ALL: [CheckId; 6] = [
        CheckId::C1,
        CheckId::C2,
        CheckId::Unicyclic,
        CheckId::TreeEq,
        CheckId::Omega3,
        CheckId::Theorems,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::C1 => "c1",
            CheckId::C2 => "c2",
            CheckId::Unicyclic => "unicyclic",
            CheckId::TreeEq => "tree-eq",
            CheckId::Omega3 => "omega3",
            CheckId::Theorems => "theorems",
        }
    }

    pub fn from_name(s: &str) -> Option<CheckId> {
        CheckId::ALL.into_iter().find(|c| c.name() == s)
    }

    /// Proven statements: a violation means a bug.
    pub fn is_theorem(self) -> bool {
        self == CheckId::Theorems
    }

    pub fn clauses(self) -> &'static [(&'static str, &'static str)] {
        match self {
            CheckId::C1 => &[("min-energy", "min(s+, s-) >= n - 1")],
            CheckId::C2 => &[("dense-splus", "m >= n + 1 implies s+ >= n")],
            CheckId::Unicyclic => &[
                ("odd-cycle-3mod4", "cycle length 3 mod 4 implies s+ > n > s-"),
                ("odd-cycle-1mod4", "cycle length 1 mod 4 implies s+ < n < s-"),
            ],
            CheckId::TreeEq => &[
                ("splus-tree", "s+ = n - 1 iff tree"),
                ("sminus-tree-complete", "s- = n - 1 iff tree or complete"),
                ("splus-n-bipartite-unicyclic", "s+ = n implies bipartite unicyclic"),
            ],
            CheckId::Omega3 => &[("omega3", "omega >= 3 implies s+ >= n")],
            CheckId::Theorems => &[
                ("claw-free", "claw-free with max degree >= 3 implies s+ >= n"),
                ("diameter-2", "diameter 2, not a star, not C5 implies s+ >= n"),
                ("dominating-vertex", "dominating vertex, n >= 3, not a star implies s+ >= n"),
                ("domination-2", "domination number <= 2 implies s+ >= n - 1"),
                ("n-minus-gamma", "min(s+, s-) >= n - gamma"),
                ("two-positive", "exactly two positive eigenvalues implies s+ >= m"),
                ("super-additivity", "vertex and edge splits are super-additive and not both tight"),
                ("twin-inertia", "deleting one of two twins keeps n+ and n-"),
                ("p3-removal", "every induced P3 has a vertex dropping s+/s- by >= 17/16"),
                ("claw-free-clique-components", "claw-free: removing a k-clique leaves <= k + 1 components"),
                ("tree-rank", "tree: rank = 2 * matching number"),
            ],
        }
    }
}

#[derive(Clone, Debug)]
pub enum Universe {
    /// Every connected graph with order in `n_min..=n_max`.
    Connected { n_min: usize, n_max: usize },
    Graphs { description: String, graphs: Vec<Graph> },
}

impl Universe {
    pub fn connected(n_max: usize) -> Universe {
        Universe::Connected { n_min: 1, n_max }
    }

    pub fn from_file(path: &std::path::Path) -> Result<Universe> {
        Ok(Universe::Graphs {
            description: format!("graph6 file {}", path.display()),
            graphs: graph6::read_file(path)?,
        })
    }

    pub fn description(&self) -> String {
        match self {
            Universe::Connected { n_min, n_max } => format!("connected graphs, n in [{n_min}, {n_max}]"),
            Universe::Graphs { description, .. } => description.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Violation {
    pub clause: String,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub s_plus: f64,
    pub s_minus: f64,
    pub margin: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ClauseSummary {
    pub clause: String,
    pub statement: String,
    pub applicable: u64,
    pub violations: u64,
    pub min_margin: Option<f64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ConjectureReport {
    pub conjecture_id: String,
    pub kind: String,
    pub universe: String,
    /// Graphs per order, ascending.
    pub graphs_per_order: Vec<(usize, u64)>,
    pub graphs_checked: u64,
    pub skipped_disconnected: u64,
    pub clauses: Vec<ClauseSummary>,
    pub violations: Vec<Violation>,
    pub near_misses: Vec<Violation>,
    pub tolerance_used: f64,
    pub zero_tol_factor: f64,
    pub eig_tol_env: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time: Option<f64>,
}

impl ConjectureReport {
    pub fn clean(&self) -> bool {
        self.violations.is_empty()
    }

    /// Columns `clause,graph6,n,m,sPlus,sMinus,margin`: violations, then
    /// near misses.
    pub fn write_csv<W: std::io::Write>(&self, out: W) -> Result<()> {
        let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
        w.write_record(["kind", "clause", "graph6", "n", "m", "sPlus", "sMinus", "margin"])?;
        for (kind, list) in [("violation", &self.violations), ("near-miss", &self.near_misses)] {
            for v in list {
                w.write_record([
                    kind.to_string(),
                    v.clause.clone(),
                    v.graph6.clone(),
                    v.n.to_string(),
                    v.m.to_string(),
                    format!("{:.12}", v.s_plus),
                    format!("{:.12}", v.s_minus),
                    format!("{:.3e}", v.margin),
                ])?;
            }
        }
        w.flush()?;
        Ok(())
    }
}

/// One clause evaluated on one graph.
#[derive(Clone, Debug)]
struct Outcome {
    clause: usize,
    margin: f64,
    violated: bool,
    /// Whether the margin is meaningful for near-miss ranking.
    rank: bool,
}

impl Outcome {
    fn bound(clause: usize, margin: f64) -> Outcome {
        Outcome {
            clause,
            margin,
            violated: margin < -VIOLATION_TOL,
            rank: true,
        }
    }
}

/// Cycle length of a connected unicyclic graph, by peeling leaves.
pub fn unicyclic_cycle_length(g: &Graph) -> Option<usize> {
    if g.m() != g.n() || !g.is_connected() {
        return None;
    }
    let mut deg = g.degrees();
    let mut stack: Vec<usize> = (0..g.n()).filter(|&v| deg[v] == 1).collect();
    let mut removed = 0;
    while let Some(v) = stack.pop() {
        removed += 1;
        deg[v] = 0;
        for w in g.neighbors(v) {
            if deg[w] > 0 {
                deg[w] -= 1;
                if deg[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    Some(g.n() - removed)
}

fn is_star(g: &Graph) -> bool {
    let n = g.n();
    n >= 2 && g.m() == n - 1 && g.degrees().iter().any(|&d| d == n - 1)
}

fn is_c5(g: &Graph) -> bool {
    g.n() == 5 && g.m() == 5 && g.degrees().iter().all(|&d| d == 2)
}

fn is_complete(g: &Graph) -> bool {
    let n = g.n();
    g.m() == n * (n - 1) / 2
}

/// Every nonempty clique as a bitmask; `n ≤ 64`.
fn all_cliques(g: &Graph) -> Vec<u64> {
    let rows = g.masks64().expect("order ≤ 64");
    let mut out = Vec::new();
    fn grow(rows: &[u64], clique: u64, cand: u64, out: &mut Vec<u64>) {
        let mut c = cand;
        while c != 0 {
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            let k = clique | 1 << v;
            out.push(k);
            grow(rows, k, c & rows[v], out);
        }
    }
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    grow(&rows, 0, all, &mut out);
    out
}

struct Ctx<'a> {
    g: &'a Graph,
    e: Energies,
    inv: Option<InvariantSet>,
}

impl Ctx<'_> {
    fn inv(&mut self) -> &InvariantSet {
        let g = self.g;
        self.inv.get_or_insert_with(|| invariants(g))
    }
}

fn evaluate(id: CheckId, g: &Graph) -> Result<Vec<Outcome>> {
    let n = g.n();
    let nf = n as f64;
    let e = graph_energies(g)?;
    let (sp, sm) = (e.s_plus, e.s_minus);
    let mut ctx = Ctx { g, e, inv: None };
    let mut out = Vec::new();
    match id {
        CheckId::C1 => out.push(Outcome::bound(0, sp.min(sm) - (nf - 1.0))),
        CheckId::C2 => {
            if g.m() > n {
                out.push(Outcome::bound(0, sp - nf));
            }
        }
        CheckId::Unicyclic => match unicyclic_cycle_length(g) {
            Some(k) if k % 4 == 3 => out.push(Outcome::bound(0, (sp - nf).min(nf - sm))),
            Some(k) if k % 4 == 1 => out.push(Outcome::bound(1, (nf - sp).min(sm - nf))),
            _ => {}
        },
        CheckId::TreeEq => {
            let tree = g.m() + 1 == n;
            let eq = |clause, value: f64, target: f64, expected: bool| {
                let d = (value - target).abs();
                if expected {
                    Outcome {
                        clause,
                        margin: -d,
                        violated: d > VIOLATION_TOL,
                        rank: false,
                    }
                } else {
                    Outcome {
                        clause,
                        margin: d,
                        violated: d <= VIOLATION_TOL,
                        rank: true,
                    }
                }
            };
            out.push(eq(0, sp, nf - 1.0, tree));
            out.push(eq(1, sm, nf - 1.0, tree || is_complete(g)));
            let bip_uni = g.m() == n && ctx.inv().bipartite;
            if !bip_uni {
                out.push(eq(2, sp, nf, false));
            }
        }
        CheckId::Omega3 => {
            if ctx.inv().omega.is_some_and(|w| w >= 3) {
                out.push(Outcome::bound(0, sp - nf));
            }
        }
        CheckId::Theorems => theorems(&mut ctx, &mut out)?,
    }
    Ok(out)
}

fn theorems(ctx: &mut Ctx, out: &mut Vec<Outcome>) -> Result<()> {
    let g = ctx.g;
    let n = g.n();
    let m = g.m();
    let nf = n as f64;
    let (sp, sm) = (ctx.e.s_plus, ctx.e.s_minus);
    let inv = ctx.inv().clone();
    let exact = |v: Option<usize>, what: &'static str| {
        v.ok_or(Error::Capacity {
            what,
            limit: crate::invariants::EXACT_CAP,
            got: n,
        })
    };

    if inv.claw_free && inv.max_degree >= 3 {
        out.push(Outcome::bound(0, sp - nf));
    }
    if inv.diam == Some(2) && !is_star(g) && !is_c5(g) {
        out.push(Outcome::bound(1, sp - nf));
    }
    if n >= 3 && inv.max_degree == n - 1 && !is_star(g) {
        out.push(Outcome::bound(2, sp - nf));
    }
    let gamma = exact(inv.gamma, "domination number order")?;
    if gamma <= 2 {
        out.push(Outcome::bound(3, sp - (nf - 1.0)));
    }
    out.push(Outcome::bound(4, sp.min(sm) - (nf - gamma as f64)));
    if ctx.e.inertia.positive == 2 {
        out.push(Outcome::bound(5, sp - m as f64));
    }

    if n >= 2 {
        let mut margin = f64::INFINITY;
        let mut tight = false;
        let mut split = |parts: f64, pm: f64, rest: &Graph| -> Result<()> {
            let r = graph_energies(rest)?;
            let (dp, dm) = (sp - parts - r.s_plus, sm - pm - r.s_minus);
            margin = margin.min(dp).min(dm);
            tight |= dp.max(dm) <= VIOLATION_TOL;
            Ok(())
        };
        for v in 0..n {
            split(0.0, 0.0, &g.delete_vertex(v)?)?;
        }
        if n >= 3 {
            for (u, w) in g.edges() {
                split(1.0, 1.0, &g.delete_vertices(&[u, w])?)?;
            }
        }
        out.push(Outcome {
            clause: 6,
            margin,
            violated: margin < -VIOLATION_TOL || tight,
            rank: true,
        });
    }

    let mut twins_ok = true;
    let mut had_twins = false;
    for u in 0..n {
        for v in u + 1..n {
            if g.same_neighborhood(u, v) {
                had_twins = true;
                let r = graph_energies(&g.delete_vertex(v)?)?;
                twins_ok &= r.inertia.positive == ctx.e.inertia.positive && r.inertia.negative == ctx.e.inertia.negative;
            }
        }
    }
    if had_twins {
        out.push(Outcome {
            clause: 7,
            margin: if twins_ok { 0.0 } else { -1.0 },
            violated: !twins_ok,
            rank: false,
        });
    }

    let mut p3 = f64::INFINITY;
    let mut strip_ok = true;
    for sign in [Sign::Plus, Sign::Minus] {
        if let Some(mg) = p3_lemma_margin(g, sign)? {
            p3 = p3.min(mg);
            strip_ok &= p3_strip(g, sign)?.all_valid();
        }
    }
    if p3.is_finite() {
        out.push(Outcome {
            clause: 8,
            margin: p3,
            violated: p3 < -VIOLATION_TOL || !strip_ok,
            rank: true,
        });
    }

    if inv.claw_free && n <= 64 {
        let mut slack = i64::MAX;
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        for k in all_cliques(g) {
            if k == full {
                continue;
            }
            let remove: Vec<usize> = (0..n).filter(|&v| k >> v & 1 == 1).collect();
            let comps = g.delete_vertices(&remove)?.component_sets().len() as i64;
            slack = slack.min(remove.len() as i64 + 1 - comps);
        }
        if slack != i64::MAX {
            out.push(Outcome {
                clause: 9,
                margin: slack as f64,
                violated: slack < 0,
                rank: false,
            });
        }
    }

    if m + 1 == n {
        let rank = n - ctx.e.inertia.zero;
        let diff = rank as i64 - 2 * matching_number(g) as i64;
        out.push(Outcome {
            clause: 10,
            margin: -(diff.abs() as f64),
            violated: diff != 0,
            rank: false,
        });
    }
    Ok(())
}

fn cmp_f64(a: f64, b: f64) -> Ordering {
    a.total_cmp(&b)
}

/// Runs one check over a universe. Disconnected graphs are skipped.
pub fn run_check(id: CheckId, universe: &Universe, timing: bool) -> Result<ConjectureReport> {
    let start = Instant::now();
    let owned;
    let mut per_order: Vec<(usize, u64)> = Vec::new();
    let graphs: &[Graph] = match universe {
        Universe::Connected { n_min, n_max } => {
            if *n_min == 0 || n_min > n_max {
                return Err(Error::param("universe", format!("need 1 ≤ n_min ≤ n_max, got [{n_min}, {n_max}]")));
            }
            let mut all = Vec::new();
            for n in *n_min..=*n_max {
                let level = connected_graphs(n)?;
                per_order.push((n, level.len() as u64));
                all.extend(level);
            }
            owned = all;
            &owned
        }
        Universe::Graphs { graphs, .. } => graphs,
    };
    let results: Vec<Option<Vec<Outcome>>> = graphs
        .par_iter()
        .map(|g| if g.is_connected() { evaluate(id, g).map(Some) } else { Ok(None) })
        .collect::<Result<_>>()?;

    let clauses = id.clauses();
    let mut summaries: Vec<ClauseSummary> = clauses
        .iter()
        .map(|(c, s)| ClauseSummary {
            clause: c.to_string(),
            statement: s.to_string(),
            applicable: 0,
            violations: 0,
            min_margin: None,
        })
        .collect();
    let mut violations = Vec::new();
    let mut near = Vec::new();
    let mut checked = 0u64;
    let mut skipped = 0u64;
    let mut orders = std::collections::BTreeMap::new();
    for (g, res) in graphs.iter().zip(&results) {
        let Some(outcomes) = res else {
            skipped += 1;
            continue;
        };
        checked += 1;
        *orders.entry(g.n()).or_insert(0u64) += 1;
        let record = |o: &Outcome| {
            let e = graph_energies(g).expect("evaluated before");
            Violation {
                clause: clauses[o.clause].0.to_string(),
                graph6: graph6::encode(g),
                n: g.n(),
                m: g.m(),
                s_plus: e.s_plus,
                s_minus: e.s_minus,
                margin: o.margin,
            }
        };
        for o in outcomes {
            let s = &mut summaries[o.clause];
            s.applicable += 1;
            if o.rank {
                s.min_margin = Some(s.min_margin.map_or(o.margin, |x: f64| x.min(o.margin)));
            }
            if o.violated {
                s.violations += 1;
                violations.push(record(o));
            } else if o.rank {
                near.push((o.margin, o.clause, g));
            }
        }
    }
    violations.sort_by(|a, b| a.graph6.cmp(&b.graph6).then_with(|| a.clause.cmp(&b.clause)));
    near.sort_by(|a, b| {
        cmp_f64(a.0, b.0)
            .then_with(|| a.1.cmp(&b.1))
            .then_with(|| graph6::encode(a.2).cmp(&graph6::encode(b.2)))
    });
    near.truncate(NEAR_MISS_KEEP);
    let near_misses = near
        .into_iter()
        .map(|(margin, clause, g)| {
            let e = graph_energies(g)?;
            Ok(Violation {
                clause: clauses[clause].0.to_string(),
                graph6: graph6::encode(g),
                n: g.n(),
                m: g.m(),
                s_plus: e.s_plus,
                s_minus: e.s_minus,
                margin,
            })
        })
        .collect::<Result<_>>()?;
    if per_order.is_empty() {
        per_order = orders.into_iter().collect();
    }
    Ok(ConjectureReport {
        conjecture_id: id.name().to_string(),
        kind: if id.is_theorem() { "theorem" } else { "conjecture" }.to_string(),
        universe: universe.description(),
        graphs_per_order: per_order,
        graphs_checked: checked,
        skipped_disconnected: skipped,
        clauses: summaries,
        violations,
        near_misses,
        tolerance_used: VIOLATION_TOL,
        zero_tol_factor: zero_tol_factor(),
        eig_tol_env: std::env::var(EIG_TOL_ENV).ok(),
        wall_time: timing.then(|| start.elapsed().as_secs_f64()),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SweepFamily {
    /// `P(j,k,ℓ)`, `j ≥ k ≥ ℓ`; bound `s⁺ ≥ n`.
    TrianglePaths,
    /// `C(k,ℓ)`, `k ≥ 4`; bound `s⁺ ≥ n`.
    CycleChord,
    /// `H(k,ℓ)`, `k ≥ ℓ`; bound `s⁺ ≥ n − 1`.
    Pentagon,
    /// Squares of cycles (`s⁺ ≥ 4n/3`) and 16th powers (`s⁻ ≥ n − 1`).
    CyclePower,
    /// `C_{n−2} ∨ K̄₂` against `3n`, reported without pass/fail.
    PlanarJoin,
    /// `K₁ ∨ P_{n−1}` against the upper bound `n − 1 + (1 + √n)²`.
    Fan,
}

impl SweepFamily {
    pub const ALL: [SweepFamily; 6] = [
        SweepFamily::TrianglePaths,
        SweepFamily::CycleChord,
        SweepFamily::Pentagon,
        SweepFamily::CyclePower,
        SweepFamily::PlanarJoin,
        SweepFamily::Fan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SweepFamily::TrianglePaths => "triangle-paths",
            SweepFamily::CycleChord => "cycle-chord",
            SweepFamily::Pentagon => "pentagon",
            SweepFamily::CyclePower => "cycle-power",
            SweepFamily::PlanarJoin => "planar-join",
            SweepFamily::Fan => "fan",
        }
    }

    pub fn from_name(s: &str) -> Option<SweepFamily> {
        SweepFamily::ALL.into_iter().find(|f| f.name() == s)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct FamilyRow {
    pub graph: String,
    pub n: usize,
    pub s_plus: f64,
    pub s_minus: f64,
    pub quantity: String,
    pub bound: f64,
    /// Positive when the bound holds (lower bounds: value − bound; upper
    /// bounds: bound − value).
    pub margin: f64,
    pub holds: Option<bool>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilySweep {
    pub family: String,
    pub rows: Vec<FamilyRow>,
    pub failures: usize,
    pub min_margin: Option<f64>,
}

impl FamilySweep {
    pub fn write_csv<W: std::io::Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        for r in &self.rows {
            w.serialize(r)?;
        }
        w.flush()?;
        Ok(())
    }
}

fn family_row(spec: FamilySpec, quantity: &str, lower: bool, bound: f64, judged: bool) -> Result<FamilyRow> {
    let g = spec.build()?;
    let e = graph_energies(&g)?;
    let value = match quantity {
        "s-" => e.s_minus,
        _ => e.s_plus,
    };
    let margin = if lower { value - bound } else { bound - value };
    Ok(FamilyRow {
        graph: spec.to_string(),
        n: g.n(),
        s_plus: e.s_plus,
        s_minus: e.s_minus,
        quantity: quantity.to_string(),
        bound,
        margin,
        holds: judged.then_some(margin >= -VIOLATION_TOL),
    })
}

/// Sweeps a family over a parameter range, in parallel, rows in parameter
/// order.
pub fn family_sweep(family: SweepFamily, range: std::ops::RangeInclusive<usize>) -> Result<FamilySweep> {
    let (a, b) = (*range.start(), *range.end());
    let mut jobs: Vec<(FamilySpec, &str, bool, f64, bool)> = Vec::new();
    match family {
        SweepFamily::TrianglePaths => {
            for j in a..=b {
                for k in a..=j {
                    for l in a..=k {
                        jobs.push((FamilySpec::TrianglePaths(j, k, l), "s+", true, (j + k + l + 3) as f64, true));
                    }
                }
            }
        }
        SweepFamily::CycleChord => {
            for k in a.max(4)..=b.max(4) {
                for l in a..=b {
                    jobs.push((FamilySpec::CycleChord(k, l), "s+", true, (k + l) as f64, true));
                }
            }
        }
        SweepFamily::Pentagon => {
            for k in a..=b {
                for l in a..=k {
                    jobs.push((FamilySpec::Pentagon(k, l), "s+", true, (k + l + 4) as f64, true));
                }
            }
        }
        SweepFamily::CyclePower => {
            for n in a.max(5)..=b {
                jobs.push((FamilySpec::CyclePower(n, 2), "s+", true, 4.0 * n as f64 / 3.0, true));
                if n >= 33 {
                    jobs.push((FamilySpec::CyclePower(n, 16), "s-", true, n as f64 - 1.0, true));
                }
            }
        }
        SweepFamily::PlanarJoin => {
            for n in a.max(5)..=b {
                let spec = FamilySpec::Join(Box::new(FamilySpec::Cycle(n - 2)), Box::new(FamilySpec::Empty(2)));
                jobs.push((spec, "s+", true, 3.0 * n as f64, false));
            }
        }
        SweepFamily::Fan => {
            for n in a.max(2)..=b {
                let spec = FamilySpec::Join(Box::new(FamilySpec::Complete(1)), Box::new(FamilySpec::Path(n - 1)));
                let upper = n as f64 - 1.0 + (1.0 + (n as f64).sqrt()).powi(2);
                jobs.push((spec, "s+", false, upper, true));
            }
        }
    }
    let rows: Vec<FamilyRow> = jobs
        .into_par_iter()
        .map(|(spec, q, lower, bound, judged)| family_row(spec, q, lower, bound, judged))
        .collect::<Result<_>>()?;
    let failures = rows.iter().filter(|r| r.holds == Some(false)).count();
    let min_margin = rows.iter().filter(|r| r.holds.is_some()).map(|r| r.margin).reduce(f64::min);
    Ok(FamilySweep {
        family: family.name().to_string(),
        rows,
        failures,
        min_margin,
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpotValue {
    pub name: String,
    pub value: f64,
    pub bound: f64,
    pub holds: bool,
}

/// Numerical constants used by case analyses: square energies of small
/// cycle-with-chord graphs and a few leading eigenvalues.
pub fn spot_values() -> Result<Vec<SpotValue>> {
    let e = |s: FamilySpec| s.build().and_then(|g| graph_energies(&g));
    let mut out = Vec::new();
    let mut push = |name: &str, value: f64, bound: f64| {
        out.push(SpotValue {
            name: name.to_string(),
            value,
            bound,
            holds: value >= bound - VIOLATION_TOL,
        })
    };
    push("s+ C(4,0)", e(FamilySpec::CycleChord(4, 0))?.s_plus, 6.5);
    push("s+ C(5,0)", e(FamilySpec::CycleChord(5, 0))?.s_plus, 6.63);
    push("s+ C(6,0)", e(FamilySpec::CycleChord(6, 0))?.s_plus, 7.6);
    push("lambda1^2 P(1,2,2)", e(FamilySpec::TrianglePaths(1, 2, 2))?.lambda(0).powi(2), 6.0);
    push("lambda3 H(1,1)", e(FamilySpec::Pentagon(1, 1))?.lambda(2), 0.71);
    push("lambda1^2 bowtie with pendants", e(FamilySpec::Figure(Figure::Bowtie))?.lambda(0).powi(2), 7.2);
    Ok(out)
}
