//! One-stop analysis of a graph.

use std::fmt::Write as _;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::closed_forms;
use crate::error::Result;
use crate::fixing::{FixingAnalysis, UpperFixing, DEFAULT_EXHAUSTIVE_CAP};
use crate::graph::Graph;
use crate::lp::{fractional_metric_dimension, parse_rational, rational, rational_to_string, WeightFunction};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnalysisOptions {
    pub upper_fixing: bool,
    pub fixed_number: bool,
    pub dim_f: bool,
    /// Vertex cap for the exhaustive `fix⁺` and `fxd` computations.
    pub cap: usize,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            upper_fixing: false,
            fixed_number: false,
            dim_f: false,
            cap: DEFAULT_EXHAUSTIVE_CAP,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub name: Option<String>,
    pub n: usize,
    pub m: usize,
    pub group_order: String,
    pub orbits: Vec<Vec<usize>>,
    pub active: Vec<usize>,
    pub core: Vec<usize>,
    pub twin_classes: Vec<Vec<usize>>,
    pub active_pairs: usize,
    /// `f(G)`; absent for rigid graphs.
    pub f_min: Option<usize>,
    pub fix: usize,
    pub fix_witness: Vec<usize>,
    /// 0/1 optimum of the cover program over `B`, when small enough to run.
    pub cover_optimum: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub fix_plus: Option<UpperFixing>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub fxd: Option<usize>,
    pub fix_f: String,
    pub fix_f_weights: WeightFunction,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub dim_f: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub dim_f_weights: Option<WeightFunction>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

/// If `g` is a wheel `W_n` with `n ≥ 5`, returns `n`.
pub fn wheel_order(g: &Graph) -> Option<usize> {
    let n = g.order();
    if n < 5 || g.size() != 2 * (n - 1) {
        return None;
    }
    let hub = (0..n).find(|&v| g.degree(v) == n - 1)?;
    let (rim, _) = g.delete_vertex(hub).ok()?;
    (rim.is_connected() && (0..n - 1).all(|v| rim.degree(v) == 2)).then_some(n)
}

pub fn analyze(g: &Graph, opts: &AnalysisOptions) -> Result<AnalysisReport> {
    let fa = FixingAnalysis::new(g);
    let (active, core) = fa.active_and_core();
    let fix = fa.fixing_number();
    let fix_f = fa.fractional_fixing_number();
    let fix_plus = if opts.upper_fixing {
        Some(fa.upper_fixing_number(opts.cap)?)
    } else {
        None
    };
    let fxd = if opts.fixed_number {
        Some(fa.fixed_number(opts.cap)?)
    } else {
        None
    };
    let dim = if opts.dim_f && g.is_connected() {
        Some(fractional_metric_dimension(g)?)
    } else {
        None
    };

    let mut notes = Vec::new();
    if opts.dim_f && !g.is_connected() {
        notes.push("dim_f omitted: the graph is disconnected".to_string());
    }
    if let Some(agrees) = fix.cover_agrees() {
        if !agrees {
            notes.push(format!(
                "0/1 cover optimum of B is {} but fix(G) is {}",
                fix.cover_optimum.unwrap_or(0),
                fix.value
            ));
        }
    }
    if let Some(n) = wheel_order(g) {
        let printed = closed_forms::wheel_fix_f_printed(n);
        if printed != fix_f.value {
            notes.push(format!(
                "wheel W{n}: LP value {} differs from the closed form {} given for wheels; \
                 it equals (n-1)/f(C_(n-1)) = {}",
                rational_to_string(&fix_f.value),
                rational_to_string(&printed),
                rational_to_string(&closed_forms::wheel_fix_f_rim(n)),
            ));
        }
    }

    Ok(AnalysisReport {
        name: g.name().map(str::to_string),
        n: g.order(),
        m: g.size(),
        group_order: fa.group().order().to_string(),
        orbits: fa.group().orbits(),
        active,
        core,
        twin_classes: g.twin_partition(),
        active_pairs: fa.active_pairs().len(),
        f_min: fa.f_min().ok(),
        fix: fix.value,
        fix_witness: fix.witness,
        cover_optimum: fix.cover_optimum,
        fix_plus,
        fxd,
        fix_f: rational_to_string(&fix_f.value),
        fix_f_weights: fix_f.weights,
        dim_f: dim.as_ref().map(|d| rational_to_string(&d.value)),
        dim_f_weights: dim.map(|d| d.weights),
        notes,
    })
}

impl AnalysisReport {
    /// Violations of the relations every report must satisfy.
    pub fn consistency_errors(&self) -> Vec<String> {
        let mut out = Vec::new();
        let fix_f = parse_rational(&self.fix_f).expect("well-formed");
        if fix_f > rational(self.fix as i64, 1) {
            out.push(format!("fix_f = {} exceeds fix = {}", self.fix_f, self.fix));
        }
        if fix_f > rational(self.n as i64, 2) {
            out.push(format!("fix_f = {} exceeds n/2", self.fix_f));
        }
        if self.fix == 0 && !fix_f.is_zero() {
            out.push("rigid graph with non-zero fix_f".to_string());
        }
        if let Some(d) = &self.dim_f {
            if fix_f > parse_rational(d).expect("well-formed") {
                out.push(format!("fix_f = {} exceeds dim_f = {d}", self.fix_f));
            }
        }
        if let Some(c) = self.cover_optimum {
            if c < self.fix {
                out.push(format!("0/1 cover of B = {c} below fix = {}", self.fix));
            }
        }
        if let Some(p) = &self.fix_plus {
            if p.value < self.fix {
                out.push(format!("fix+ = {} below fix = {}", p.value, self.fix));
            }
        }
        if let Some(x) = self.fxd {
            if x < self.fix {
                out.push(format!("fxd = {x} below fix = {}", self.fix));
            }
        }
        out
    }

    pub fn to_table(&self) -> String {
        let mut t = String::new();
        let mut row = |k: &str, v: String| {
            let _ = writeln!(t, "{k:<14} {v}");
        };
        row("graph", self.name.clone().unwrap_or_else(|| "-".into()));
        row("order", self.n.to_string());
        row("size", self.m.to_string());
        row("|Aut|", self.group_order.clone());
        row("orbits", format!("{:?}", self.orbits));
        row("A(G)", format!("{:?}", self.active));
        row("C(G)", format!("{:?}", self.core));
        row("twin classes", format!("{:?}", self.twin_classes));
        row("|V_a|", self.active_pairs.to_string());
        row("f(G)", self.f_min.map_or("-".into(), |f| f.to_string()));
        row("fix", format!("{} {:?}", self.fix, self.fix_witness));
        if let Some(c) = self.cover_optimum {
            row("cover of B", c.to_string());
        }
        if let Some(p) = &self.fix_plus {
            row("fix+", format!("{} {:?}", p.value, p.witness));
        }
        if let Some(x) = self.fxd {
            row("fxd", x.to_string());
        }
        row("fix_f", format!("{} {:?}", self.fix_f, self.fix_f_weights.to_strings()));
        if let (Some(d), Some(w)) = (&self.dim_f, &self.dim_f_weights) {
            row("dim_f", format!("{d} {:?}", w.to_strings()));
        }
        for note in &self.notes {
            row("note", note.clone());
        }
        t
    }
}
