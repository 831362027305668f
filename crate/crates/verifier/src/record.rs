use std::collections::BTreeMap;

use gorenstein::{check_theorem, independence_complex, to_graph6, FieldSpec, Graph, Result};
use serde::{Deserialize, Serialize};

/// Classification of one graph, with field-tagged algebraic verdicts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub index: usize,
    pub graph6: String,
    pub n: usize,
    pub edge_count: usize,
    /// `null` for forests.
    pub girth: Option<usize>,
    pub connected: bool,
    pub no_isolated: bool,
    pub alpha: usize,
    pub well_covered: bool,
    pub w2: bool,
    pub alpha_critical: bool,
    /// Reduced Euler characteristic of the independence complex.
    pub euler_char: i64,
    pub gorenstein: BTreeMap<String, bool>,
    pub second_power_cm: BTreeMap<String, bool>,
    pub consistent: bool,
    /// Has a triangle or an isolated vertex, so the equivalence is not
    /// required to hold.
    pub out_of_hypothesis: bool,
}

impl GraphRecord {
    pub fn build(index: usize, g: &Graph, fields: &[FieldSpec]) -> Result<Self> {
        let mut gorenstein = BTreeMap::new();
        let mut second_power_cm = BTreeMap::new();
        let mut consistent = true;
        let mut out_of_hypothesis = false;
        for &field in fields {
            let v = check_theorem(g, field)?;
            gorenstein.insert(field.label(), v.gorenstein);
            second_power_cm.insert(field.label(), v.second_power_cm);
            consistent &= v.consistent;
            out_of_hypothesis = !v.in_hypothesis;
        }
        Ok(GraphRecord {
            index,
            graph6: to_graph6(g),
            n: g.order(),
            edge_count: g.edge_count(),
            girth: g.girth().finite(),
            connected: g.is_connected(),
            no_isolated: !g.has_isolated_vertices(),
            alpha: g.independence_number(),
            well_covered: g.is_well_covered(),
            w2: g.is_in_w2(),
            alpha_critical: g.is_alpha_critical(),
            euler_char: independence_complex(g)
                .reduced_euler_characteristic()
                .expect("independence complexes are nonvoid"),
            gorenstein,
            second_power_cm,
            consistent,
            out_of_hypothesis,
        })
    }

    /// Gorenstein or second-power verdicts differ between two fields.
    pub fn field_disagreement(&self) -> bool {
        let differs = |m: &BTreeMap<String, bool>| {
            let mut it = m.values();
            it.next().is_some_and(|first| it.any(|v| v != first))
        };
        differs(&self.gorenstein) || differs(&self.second_power_cm)
    }
}
