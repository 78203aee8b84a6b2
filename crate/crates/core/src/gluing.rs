//! Gluing attachments onto a base graph and the resulting lower bound
//! `s⁺(G) ≥ Σ s⁺(Gᵢ) + s⁺(Γ)`.
//!
//! `Γ` is `A(G₀)` with the diagonal entry at each glue point `uᵢ` replaced by
//! `−dᵢ`, where `dᵢ = (A⁻(Gᵢ))_{vᵢ,vᵢ}`. A larger shift (more negative
//! diagonal) may be supplied; a smaller one is rejected.
//!
//! Glued numbering: base vertices keep their ids, then each attachment's
//! non-distinguished vertices follow in attachment order, each block in the
//! attachment's own vertex order.

use std::io::Write;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{FamilySpec, Figure};
use crate::graph::Graph;
use crate::spectral::{energies, graph_energies, graph_split, SymMatrix};

/// Slack allowed when comparing a supplied shift with its default.
const SHIFT_SLACK: f64 = 1e-12;

#[derive(Clone, Debug)]
pub struct Attachment {
    pub graph: Graph,
    /// Distinguished vertex `vᵢ`, identified with the glue point.
    pub vertex: usize,
    /// `None` uses the default `dᵢ`.
    pub shift: Option<f64>,
}

impl Attachment {
    pub fn new(graph: Graph, vertex: usize) -> Attachment {
        Attachment {
            graph,
            vertex,
            shift: None,
        }
    }

    pub fn with_shift(mut self, shift: f64) -> Attachment {
        self.shift = Some(shift);
        self
    }
}

#[derive(Clone, Debug)]
pub struct GluingSpec {
    pub base: Graph,
    pub glue_points: Vec<usize>,
    pub attachments: Vec<Attachment>,
}

#[derive(Clone, Debug)]
pub struct Glued {
    pub graph: Graph,
    pub gamma: SymMatrix,
    /// Default `dᵢ = (A⁻(Gᵢ))_{vᵢ,vᵢ}`.
    pub default_shifts: Vec<f64>,
    /// Shifts actually placed on the diagonal (negated).
    pub shifts: Vec<f64>,
    /// `embed[i][w]`: glued id of vertex `w` of attachment `i`.
    pub embed: Vec<Vec<usize>>,
    /// `A⁻(Gᵢ)` in each attachment's own numbering.
    pub part_a_minus: Vec<SymMatrix>,
    pub part_s_plus: Vec<f64>,
    pub glue_points: Vec<usize>,
    pub base_order: usize,
}

pub fn glue(spec: &GluingSpec) -> Result<Glued> {
    let n0 = spec.base.n();
    if spec.glue_points.len() != spec.attachments.len() {
        return Err(Error::Gluing(format!(
            "{} glue points for {} attachments",
            spec.glue_points.len(),
            spec.attachments.len()
        )));
    }
    let mut seen = vec![false; n0];
    for &u in &spec.glue_points {
        if u >= n0 {
            return Err(Error::Gluing(format!("glue point {u} is not a vertex of the base (order {n0})")));
        }
        if seen[u] {
            return Err(Error::Gluing(format!("duplicate glue point {u}")));
        }
        seen[u] = true;
    }
    for (i, a) in spec.attachments.iter().enumerate() {
        if a.vertex >= a.graph.n() {
            return Err(Error::Gluing(format!(
                "attachment {i}: distinguished vertex {} out of range (order {})",
                a.vertex,
                a.graph.n()
            )));
        }
    }

    let total = n0 + spec.attachments.iter().map(|a| a.graph.n() - 1).sum::<usize>();
    let mut embed = Vec::with_capacity(spec.attachments.len());
    let mut next = n0;
    for (a, &u) in spec.attachments.iter().zip(&spec.glue_points) {
        let map: Vec<usize> = (0..a.graph.n())
            .map(|w| {
                if w == a.vertex {
                    u
                } else {
                    next += 1;
                    next - 1
                }
            })
            .collect();
        embed.push(map);
    }

    let mut edges = spec.base.edges();
    for (a, map) in spec.attachments.iter().zip(&embed) {
        edges.extend(a.graph.edges().into_iter().map(|(x, y)| (map[x], map[y])));
    }
    let graph = Graph::from_edges(total, &edges)?;

    let mut default_shifts = Vec::new();
    let mut shifts = Vec::new();
    let mut part_a_minus = Vec::new();
    let mut part_s_plus = Vec::new();
    for (i, a) in spec.attachments.iter().enumerate() {
        let split = graph_split(&a.graph)?;
        let d = split.a_minus.get(a.vertex, a.vertex);
        let s = match a.shift {
            None => d,
            Some(s) if !s.is_finite() => return Err(Error::Gluing(format!("attachment {i}: shift {s} is not finite"))),
            Some(s) if s < d - SHIFT_SLACK => {
                return Err(Error::Gluing(format!(
                    "attachment {i}: shift {s} is below the default d = {d}; the diagonal must be ≤ −d"
                )))
            }
            Some(s) => s,
        };
        default_shifts.push(d);
        shifts.push(s);
        part_s_plus.push(split.s_plus());
        part_a_minus.push(split.a_minus);
    }

    let mut gamma = spec.base.adjacency_matrix();
    for (&u, &s) in spec.glue_points.iter().zip(&shifts) {
        gamma.set(u, u, -s);
    }

    Ok(Glued {
        graph,
        gamma,
        default_shifts,
        shifts,
        embed,
        part_a_minus,
        part_s_plus,
        glue_points: spec.glue_points.clone(),
        base_order: n0,
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GluingBound {
    pub part_s_plus: Vec<f64>,
    pub gamma_s_plus: f64,
    pub bound: f64,
    pub glued_s_plus: f64,
    /// `glued_s_plus − bound`.
    pub margin: f64,
    pub shifts: Vec<f64>,
    pub default_shifts: Vec<f64>,
    pub order: usize,
}

impl Glued {
    pub fn bound(&self) -> Result<GluingBound> {
        let gamma_s_plus = energies(&self.gamma)?.s_plus;
        let bound = self.part_s_plus.iter().sum::<f64>() + gamma_s_plus;
        let glued_s_plus = graph_energies(&self.graph)?.s_plus;
        Ok(GluingBound {
            part_s_plus: self.part_s_plus.clone(),
            gamma_s_plus,
            bound,
            glued_s_plus,
            margin: glued_s_plus - bound,
            shifts: self.shifts.clone(),
            default_shifts: self.default_shifts.clone(),
            order: self.graph.n(),
        })
    }

    /// `(R₁(M), R₂(M))` for a PSD `M` on the glued vertex set.
    ///
    /// `R₁ = Σᵢ Σ_{(w,w') ≠ (vᵢ,vᵢ)} ((A⁻(Gᵢ))_{w,w'} − M_{w,w'})²` over
    /// ordered pairs inside each attachment;
    /// `R₂ = 2 Σᵢ Σ_{w ∈ Gᵢ−vᵢ, u ∈ G₀−uᵢ} M_{w,u}²`.
    pub fn r_terms(&self, m: &SymMatrix) -> Result<(f64, f64)> {
        if m.dim() != self.graph.n() {
            return Err(Error::DimensionMismatch {
                expected: self.graph.n(),
                got: m.dim(),
            });
        }
        let mut r1 = 0.0;
        let mut r2 = 0.0;
        for (i, map) in self.embed.iter().enumerate() {
            let am = &self.part_a_minus[i];
            let u_i = self.glue_points[i];
            for (w, &gw) in map.iter().enumerate() {
                for (w2, &gw2) in map.iter().enumerate() {
                    if gw == u_i && gw2 == u_i {
                        continue;
                    }
                    r1 += (am.get(w, w2) - m.get(gw, gw2)).powi(2);
                }
                if gw == u_i {
                    continue;
                }
                for u in (0..self.base_order).filter(|&u| u != u_i) {
                    r2 += m.get(gw, u).powi(2);
                }
            }
        }
        Ok((r1, 2.0 * r2))
    }
}

pub fn gluing_lower_bound(spec: &GluingSpec) -> Result<GluingBound> {
    glue(spec)?.bound()
}

/// Named base matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Preset {
    /// Triangle plus pendant, `−0.5` at vertices 1 and 3.
    Fig1,
    /// `TriBase(1)`, `−0.5` at all three path ends.
    Case1,
    /// 9-vertex base, `−0.5` at vertices 7 and 8.
    Ga,
    /// 5-vertex base, `−0.5` at vertex 2.
    Gb,
    /// `TriBase(t)`, `−0.5` at the ends of the paths on vertices 1 and 2.
    Gt2,
    /// `TriBase(t)`, `−0.44` at all three path ends.
    Gt3,
}

impl Preset {
    pub const ALL: [Preset; 6] = [Preset::Fig1, Preset::Case1, Preset::Ga, Preset::Gb, Preset::Gt2, Preset::Gt3];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Fig1 => "fig1",
            Preset::Case1 => "case1",
            Preset::Ga => "ga",
            Preset::Gb => "gb",
            Preset::Gt2 => "gt2",
            Preset::Gt3 => "gt3",
        }
    }

    pub fn from_name(s: &str) -> Option<Preset> {
        Preset::ALL.into_iter().find(|p| p.name() == s)
    }

    pub fn diagonal(self) -> f64 {
        match self {
            Preset::Gt3 => -0.44,
            _ => -0.5,
        }
    }

    /// Base family; `t` only matters for the `TriBase` presets.
    pub fn base(self, t: usize) -> FamilySpec {
        match self {
            Preset::Fig1 => FamilySpec::Figure(Figure::BaseTriangle),
            Preset::Case1 => FamilySpec::TriBase(1, 3),
            Preset::Ga => FamilySpec::Figure(Figure::CaseTwoA),
            Preset::Gb => FamilySpec::Figure(Figure::CaseTwoB),
            Preset::Gt2 => FamilySpec::TriBase(t, 2),
            Preset::Gt3 => FamilySpec::TriBase(t, 3),
        }
    }

    /// The shifted base matrix `Γ`.
    pub fn gamma(self, t: usize) -> Result<SymMatrix> {
        let spec = self.base(t);
        let g = spec.build()?;
        let mut a = g.adjacency_matrix();
        for v in spec.marked() {
            a.set(v, v, self.diagonal());
        }
        Ok(a)
    }

    /// Glues a path of order `attach` at every marked vertex (by an endpoint),
    /// using the preset diagonal as the shift.
    pub fn gluing(self, t: usize, attach: usize) -> Result<GluingSpec> {
        let spec = self.base(t);
        let base = spec.build()?;
        let path = FamilySpec::Path(attach).build()?;
        let marked = spec.marked();
        Ok(GluingSpec {
            base,
            attachments: marked
                .iter()
                .map(|_| Attachment::new(path.clone(), 0).with_shift(-self.diagonal()))
                .collect(),
            glue_points: marked,
        })
    }
}

/// Stated lower bound on `s⁺(Γ_{t,variant})`.
pub fn gamma_target(variant: u8, t: usize) -> f64 {
    let base = 3.0 * (t + 1) as f64;
    if variant == 3 {
        base - 0.2
    } else {
        base
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepRow {
    pub t: usize,
    pub order: usize,
    pub s_plus: f64,
    pub bound: f64,
    pub margin: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GammaSweep {
    pub variant: u8,
    pub rows: Vec<SweepRow>,
    pub min_margin: f64,
    pub violations: Vec<usize>,
}

/// `s⁺(Γ_{t,variant})` against its stated bound for every `t` in range,
/// parallel over `t`. Violations are reported, not raised.
pub fn gamma_sweep(variant: u8, ts: RangeInclusive<usize>) -> Result<GammaSweep> {
    let preset = match variant {
        2 => Preset::Gt2,
        3 => Preset::Gt3,
        v => return Err(Error::param("gamma_sweep", format!("variant must be 2 or 3, got {v}"))),
    };
    let rows: Vec<SweepRow> = ts
        .into_par_iter()
        .map(|t| {
            let gamma = preset.gamma(t)?;
            let s_plus = energies(&gamma)?.s_plus;
            let bound = gamma_target(variant, t);
            Ok(SweepRow {
                t,
                order: gamma.dim(),
                s_plus,
                bound,
                margin: s_plus - bound,
            })
        })
        .collect::<Result<_>>()?;
    let min_margin = rows.iter().map(|r| r.margin).fold(f64::INFINITY, f64::min);
    let violations = rows.iter().filter(|r| r.margin < -1e-7).map(|r| r.t).collect();
    Ok(GammaSweep {
        variant,
        rows,
        min_margin,
        violations,
    })
}

impl GammaSweep {
    /// Columns `t,order,sPlus,bound,margin`.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        for r in &self.rows {
            w.serialize(r)?;
        }
        w.flush()?;
        Ok(())
    }
}
