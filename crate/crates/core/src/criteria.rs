//! Cohen-Macaulay, Eulerian and Gorenstein decision procedures.
//!
//! Every verdict is relative to a coefficient field. Cohen-Macaulayness
//! uses Reisner's link criterion and Gorensteinness uses Stanley's: the
//! core must be Eulerian and Cohen-Macaulay. Cohen-Macaulayness of
//! `I(G)^2` is decided by the edge-localization criterion (see
//! [`is_second_power_cm`]); no free resolution is ever computed.

use std::collections::HashMap;

use crate::complex::{independence_complex, Face, SimplicialComplex};
use crate::error::Result;
use crate::graph::Graph;
use crate::homology::{reduced_betti, BettiTable, FieldSpec};

fn sign(d: isize) -> i64 {
    if d.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// First face (in sorted face order) whose link has homology below its
/// top dimension, or `None` when Reisner's criterion holds.
pub fn reisner_witness(c: &SimplicialComplex, field: FieldSpec) -> Result<Option<Face>> {
    c.require_nonvoid()?;
    let mut memo: HashMap<Vec<Face>, BettiTable> = HashMap::new();
    for f in c.faces() {
        let lk = c.link(f)?;
        let top = lk.dim();
        if top <= -1 {
            continue;
        }
        let betti = match memo.get(lk.facets()) {
            Some(b) => b.clone(),
            None => {
                let b = reduced_betti(&lk, field)?;
                memo.insert(lk.facets().to_vec(), b.clone());
                b
            }
        };
        if (-1..top).any(|i| betti.get(i) != 0) {
            return Ok(Some(f.clone()));
        }
    }
    Ok(None)
}

pub fn is_cohen_macaulay(c: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    Ok(reisner_witness(c, field)?.is_none())
}

/// Pure, and every link satisfies `χ̃(lk F) = (-1)^{dim lk F}`, the empty
/// face included.
pub fn is_eulerian(c: &SimplicialComplex) -> Result<bool> {
    c.require_nonvoid()?;
    if !c.is_pure() {
        return Ok(false);
    }
    for f in c.faces() {
        let lk = c.link(f)?;
        if lk.reduced_euler_characteristic()? != sign(lk.dim()) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_gorenstein(c: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    let core = c.core_of()?.complex;
    Ok(is_eulerian(&core)? && is_cohen_macaulay(&core, field)?)
}

/// Cohen-Macaulay, and every vertex deletion is Cohen-Macaulay of the same
/// dimension.
pub fn is_doubly_cm(c: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    if !is_cohen_macaulay(c, field)? {
        return Ok(false);
    }
    for &x in c.vertices() {
        let d = c.delete_set(&Face::from([x]))?;
        if d.is_void() || d.dim() != c.dim() || !is_cohen_macaulay(&d, field)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_cm_graph(g: &Graph, field: FieldSpec) -> Result<bool> {
    is_cohen_macaulay(&independence_complex(g), field)
}

pub fn is_gorenstein_graph(g: &Graph, field: FieldSpec) -> Result<bool> {
    is_gorenstein(&independence_complex(g), field)
}

/// Edge-localization criterion standing in for Cohen-Macaulayness of
/// `I(G)^2`: `G` is triangle-free and Cohen-Macaulay, and for every edge
/// `ab` the graph `G_ab` is Cohen-Macaulay with `α(G_ab) = α(G) - 1`.
///
/// Triangle-freeness is part of the test because it is exactly when
/// `I(G)^2` equals the second symbolic power, which is what the
/// localization condition characterizes.
pub fn is_second_power_cm(g: &Graph, field: FieldSpec) -> Result<bool> {
    if !g.is_triangle_free() || !is_cm_graph(g, field)? {
        return Ok(false);
    }
    let alpha = g.independence_number();
    for (a, b) in g.edges() {
        let local = g.edge_localize(a, b)?.graph;
        if local.independence_number() + 1 != alpha || !is_cm_graph(&local, field)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of checking the triangle-free Gorenstein / W2 / `I(G)^2`
/// equivalence on one graph over one field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TheoremVerdict {
    pub field: FieldSpec,
    pub triangle_free: bool,
    pub no_isolated: bool,
    pub is_w2: bool,
    pub gorenstein: bool,
    pub second_power_cm: bool,
    /// Triangle-free without isolated vertices; only then must all three
    /// conditions coincide.
    pub in_hypothesis: bool,
    pub consistent: bool,
}

impl TheoremVerdict {
    /// Triangle-free Gorenstein, triangle-free W2, second-power criterion.
    pub fn conditions(&self) -> [bool; 3] {
        [
            self.triangle_free && self.gorenstein,
            self.triangle_free && self.is_w2,
            self.second_power_cm,
        ]
    }

    /// The consistency rule as a function of the other fields.
    pub fn expected_consistency(&self) -> bool {
        let [tf_gor, tf_w2, sq] = self.conditions();
        if self.in_hypothesis {
            tf_gor == tf_w2 && tf_w2 == sq
        } else if !self.triangle_free {
            !tf_gor && !sq
        } else {
            // triangle-free with isolated vertices: outside the theorem
            true
        }
    }
}

pub fn check_theorem(g: &Graph, field: FieldSpec) -> Result<TheoremVerdict> {
    let triangle_free = g.is_triangle_free();
    let no_isolated = !g.has_isolated_vertices();
    let mut v = TheoremVerdict {
        field,
        triangle_free,
        no_isolated,
        is_w2: g.is_in_w2(),
        gorenstein: is_gorenstein_graph(g, field)?,
        second_power_cm: is_second_power_cm(g, field)?,
        in_hypothesis: triangle_free && no_isolated,
        consistent: false,
    };
    v.consistent = v.expected_consistency();
    Ok(v)
}
