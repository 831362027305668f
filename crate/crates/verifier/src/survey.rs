//! Exhaustive classification of a graph6 corpus.

use std::fmt;
use std::str::FromStr;

use gorenstein::{parse_graph6, FieldSpec, Graph};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::record::GraphRecord;

#[derive(Debug, Error)]
pub enum SurveyError {
    #[error("corpus line {line}: {source}")]
    Malformed {
        line: usize,
        source: gorenstein::Error,
    },
    #[error("unknown filter {0:?}")]
    UnknownFilter(String),
    #[error(transparent)]
    Core(#[from] gorenstein::Error),
    #[error("thread pool: {0}")]
    Pool(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Filter {
    TriangleFree,
    Connected,
    NoIsolated,
    GirthGe5,
}

impl Filter {
    pub fn admits(self, g: &Graph) -> bool {
        match self {
            Filter::TriangleFree => g.is_triangle_free(),
            Filter::Connected => g.is_connected(),
            Filter::NoIsolated => !g.has_isolated_vertices(),
            Filter::GirthGe5 => g.girth().at_least(5),
        }
    }

    /// Parses a comma-separated list.
    pub fn parse_list(s: &str) -> Result<Vec<Filter>, SurveyError> {
        s.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect()
    }
}

impl FromStr for Filter {
    type Err = SurveyError;
    fn from_str(s: &str) -> Result<Self, SurveyError> {
        match s {
            "triangle-free" => Ok(Filter::TriangleFree),
            "connected" => Ok(Filter::Connected),
            "no-isolated" => Ok(Filter::NoIsolated),
            "girth-ge-5" => Ok(Filter::GirthGe5),
            other => Err(SurveyError::UnknownFilter(other.to_string())),
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Filter::TriangleFree => "triangle-free",
            Filter::Connected => "connected",
            Filter::NoIsolated => "no-isolated",
            Filter::GirthGe5 => "girth-ge-5",
        })
    }
}

#[derive(Clone, Debug)]
pub struct SurveyOptions {
    pub filters: Vec<Filter>,
    pub max_n: Option<usize>,
    pub fields: Vec<FieldSpec>,
    /// Worker threads; `0` lets rayon decide.
    pub jobs: usize,
    /// Abort on the first malformed corpus line.
    pub strict: bool,
}

impl Default for SurveyOptions {
    fn default() -> Self {
        SurveyOptions {
            filters: Vec::new(),
            max_n: None,
            fields: vec![FieldSpec::Rationals],
            jobs: 0,
            strict: false,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    /// Graph lines in the corpus, malformed ones included.
    pub total: usize,
    pub admitted: usize,
    pub consistent: usize,
    pub counterexamples: usize,
    pub field_disagreements: usize,
    pub malformed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyReport {
    pub version: String,
    pub corpus_digest: String,
    pub filters: Vec<String>,
    pub fields: Vec<String>,
    pub summary: Summary,
    /// Corpus indices of records with `consistent = false`.
    pub counterexamples: Vec<usize>,
    pub records: Vec<GraphRecord>,
}

/// A malformed corpus line skipped in non-strict mode.
#[derive(Debug)]
pub struct Skipped {
    pub line: usize,
    pub error: gorenstein::Error,
}

impl SurveyReport {
    /// Recomputes the summary from the records.
    pub fn tally(&self) -> Summary {
        Summary {
            total: self.summary.total,
            admitted: self.records.len(),
            consistent: self.records.iter().filter(|r| r.consistent).count(),
            counterexamples: self.records.iter().filter(|r| !r.consistent).count(),
            field_disagreements: self
                .records
                .iter()
                .filter(|r| r.field_disagreement())
                .count(),
            malformed: self.summary.malformed,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Flat projection; booleans as 0/1, one column per field and verdict.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header: Vec<String> = [
            "index",
            "graph6",
            "n",
            "edge_count",
            "girth",
            "connected",
            "no_isolated",
            "alpha",
            "well_covered",
            "w2",
            "alpha_critical",
            "euler_char",
        ]
        .map(String::from)
        .to_vec();
        for f in &self.fields {
            header.push(format!("gorenstein_{f}"));
        }
        for f in &self.fields {
            header.push(format!("second_power_cm_{f}"));
        }
        header.extend(["consistent".into(), "out_of_hypothesis".into()]);
        w.write_record(&header).expect("in-memory write");
        let b = |x: bool| if x { "1".to_string() } else { "0".to_string() };
        for r in &self.records {
            let mut row = vec![
                r.index.to_string(),
                r.graph6.clone(),
                r.n.to_string(),
                r.edge_count.to_string(),
                r.girth.map_or("inf".into(), |g| g.to_string()),
                b(r.connected),
                b(r.no_isolated),
                r.alpha.to_string(),
                b(r.well_covered),
                b(r.w2),
                b(r.alpha_critical),
                r.euler_char.to_string(),
            ];
            for f in &self.fields {
                row.push(b(r.gorenstein[f]));
            }
            for f in &self.fields {
                row.push(b(r.second_power_cm[f]));
            }
            row.push(b(r.consistent));
            row.push(b(r.out_of_hypothesis));
            w.write_record(&row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }
}

pub fn corpus_digest(corpus: &str) -> String {
    hex::encode(Sha256::digest(corpus.as_bytes()))
}

/// Graph lines of a corpus as `(1-based line number, text)`; blank lines
/// and a bare `>>graph6<<` header are skipped.
fn graph_lines(corpus: &str) -> impl Iterator<Item = (usize, &str)> {
    corpus
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && *l != ">>graph6<<")
}

/// Classifies every admitted graph of `corpus` under every requested field.
///
/// Records keep corpus order whatever the number of workers.
pub fn survey(
    corpus: &str,
    opts: &SurveyOptions,
) -> Result<(SurveyReport, Vec<Skipped>), SurveyError> {
    let mut skipped = Vec::new();
    let mut admitted: Vec<(usize, Graph)> = Vec::new();
    let mut total = 0;
    for (index, (line, text)) in graph_lines(corpus).enumerate() {
        total += 1;
        let g = match parse_graph6(text) {
            Ok(g) => g,
            Err(source) if opts.strict => return Err(SurveyError::Malformed { line, source }),
            Err(error) => {
                skipped.push(Skipped { line, error });
                continue;
            }
        };
        if opts.max_n.is_some_and(|m| g.order() > m) {
            continue;
        }
        if opts.filters.iter().all(|f| f.admits(&g)) {
            admitted.push((index, g));
        }
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| SurveyError::Pool(e.to_string()))?;
    let records: Vec<GraphRecord> = pool.install(|| {
        admitted
            .par_iter()
            .map(|(i, g)| GraphRecord::build(*i, g, &opts.fields))
            .collect::<Result<_, _>>()
    })?;

    let mut filters = opts.filters.clone();
    filters.sort();
    filters.dedup();
    let mut report = SurveyReport {
        version: env!("CARGO_PKG_VERSION").to_string(),
        corpus_digest: corpus_digest(corpus),
        filters: filters.iter().map(Filter::to_string).collect(),
        fields: opts.fields.iter().map(|f| f.label()).collect(),
        summary: Summary {
            total,
            malformed: skipped.len(),
            ..Summary::default()
        },
        counterexamples: records
            .iter()
            .filter(|r| !r.consistent)
            .map(|r| r.index)
            .collect(),
        records,
    };
    report.summary = report.tally();
    Ok((report, skipped))
}
