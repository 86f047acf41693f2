//! Runs every check a construction's claims call for and collects the
//! verdicts into one report.
//!
//! The battery looks only at the [`ConstructionResult`]'s claims and
//! witnesses, never at how the graph was built. A malformed witness counts
//! as a failed check, not an error: the construction promised a witness
//! that fits.

use num_bigint::BigInt;

use crate::certify::arboricity::arboricity_at_most;
use crate::certify::chordal::{verify_chordal_witness, ChordalVerdict};
use crate::certify::coloring::{verify_proper_coloring, ColoringVerdict};
use crate::certify::forest::{verify_forest_decomposition, ForestVerdict};
use crate::certify::separation::{separator_from_witness, verify_separation, SeparationVerdict};
use crate::constructions::ConstructionResult;
use crate::graph::Diameter;

#[derive(Debug, Clone)]
pub struct CheckLine {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct CertificationReport {
    pub lines: Vec<CheckLine>,
    /// True iff every line passed.
    pub pass: bool,
}

impl CertificationReport {
    pub fn line(&self, name: &str) -> Option<&CheckLine> {
        self.lines.iter().find(|l| l.name == name)
    }
}

/// Re-derives every claimed property of `res` from the graph alone.
pub fn certify_result(res: &ConstructionResult) -> CertificationReport {
    let g = &res.graph;
    let mut lines = Vec::new();
    let mut push = |name: &'static str, pass: bool, detail: String| {
        lines.push(CheckLine { name, pass, detail });
    };

    let measured_delta = g.max_degree() as u64;
    push(
        "max-degree",
        measured_delta <= res.claimed_max_degree,
        format!("measured {measured_delta}, claimed at most {}", res.claimed_max_degree),
    );

    let diameter = g.diameter();
    let (diam_pass, diam_detail) = if res.diameter_is_exact {
        (
            diameter == Diameter::Finite(res.claimed_diameter),
            format!("measured {diameter}, claimed exactly {}", res.claimed_diameter),
        )
    } else {
        let ok = match diameter {
            Diameter::Finite(d) => d <= res.claimed_diameter,
            Diameter::Infinite => false,
        };
        (ok, format!("measured {diameter}, claimed at most {}", res.claimed_diameter))
    };
    push("diameter", diam_pass, diam_detail);

    if let Some(goal) = &res.guaranteed_vertices {
        let n = BigInt::from(g.vertex_count());
        push(
            "vertex-guarantee",
            &n >= goal,
            format!("built {n} vertices, guaranteed {goal}"),
        );
    }

    if let Some(q) = &res.claimed_average_degree_max {
        let d = g.average_degree();
        push("average-degree", &d <= q, format!("measured {d}, claimed at most {q}"));
    }

    if res.claimed_triangle_free {
        match g.has_triangle() {
            None => push("triangle-free", true, "no triangle".to_string()),
            Some([a, b, c]) => {
                push("triangle-free", false, format!("triangle on {a}, {b}, {c}"))
            }
        }
    }

    if let Some(c) = &res.coloring {
        match verify_proper_coloring(g, c) {
            Ok(ColoringVerdict::Proper { colors_used }) => push(
                "coloring",
                true,
                format!("proper with {colors_used} of {} colours", c.num_colors),
            ),
            Ok(ColoringVerdict::MonochromaticEdge { u, v, color }) => push(
                "coloring",
                false,
                format!("edge ({u}, {v}) has both ends coloured {color}"),
            ),
            Err(e) => push("coloring", false, format!("malformed witness: {e}")),
        }
    }

    if let Some(f) = &res.forest {
        match verify_forest_decomposition(g, f) {
            Ok(ForestVerdict::AllForests) => {
                push("forest-decomposition", true, format!("{} acyclic classes", f.classes))
            }
            Ok(ForestVerdict::CycleFound { color, cycle }) => push(
                "forest-decomposition",
                false,
                format!("class {color} contains a cycle through {} vertices", cycle.len()),
            ),
            Err(e) => push("forest-decomposition", false, format!("malformed witness: {e}")),
        }
    }

    if let Some(b) = res.claimed_arboricity {
        match arboricity_at_most(g, b as usize) {
            None => push("arboricity", true, format!("no subgraph denser than {b} forests")),
            Some(violator) => push(
                "arboricity",
                false,
                format!(
                    "{} vertices induce {} edges, too dense for {b} forests",
                    violator.vertices.len(),
                    violator.induced_edges
                ),
            ),
        }
    }

    if let Some(w) = &res.chordal {
        match verify_chordal_witness(g, w) {
            Ok(ChordalVerdict::EliminationOrder { width }) => {
                let (pass, detail) = match res.claimed_treewidth {
                    Some(t) => (
                        width as u64 <= t,
                        format!("elimination width {width}, claimed at most {t}"),
                    ),
                    None => (true, format!("elimination width {width}")),
                };
                push("elimination-order", pass, detail);
                match separator_from_witness(g, w) {
                    Some(sep) => match verify_separation(g, &sep) {
                        Ok(SeparationVerdict::Balanced { separator_size }) => push(
                            "balanced-separation",
                            separator_size <= width + 1,
                            format!(
                                "separator of {separator_size} vertices from a width {width} witness"
                            ),
                        ),
                        Ok(other) => push(
                            "balanced-separation",
                            false,
                            format!("extracted separation does not verify: {other:?}"),
                        ),
                        Err(e) => {
                            push("balanced-separation", false, format!("malformed extraction: {e}"))
                        }
                    },
                    None => push(
                        "balanced-separation",
                        false,
                        "no bag of the witness balances the graph".to_string(),
                    ),
                }
            }
            Ok(ChordalVerdict::NotEliminationOrder { vertex, earliest, unmatched }) => push(
                "elimination-order",
                false,
                format!(
                    "later neighbours of {vertex} miss the edge ({earliest}, {unmatched})"
                ),
            ),
            Err(e) => push("elimination-order", false, format!("malformed witness: {e}")),
        }
    }

    if let Some(cover) = &res.cover {
        match cover.verify(g) {
            Ok(()) => push(
                "cover-family",
                true,
                format!("{} sets cover every edge, two per vertex", cover.sets.len()),
            ),
            Err(v) => push("cover-family", false, format!("{v:?}")),
        }
    }

    let pass = lines.iter().all(|l| l.pass);
    CertificationReport { lines, pass }
}
