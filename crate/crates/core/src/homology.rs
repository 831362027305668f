//! Reduced simplicial homology over ℚ and prime fields.
//!
//! Chains use the ascending-vertex wedge basis: the boundary of
//! `e_{j0} ∧ … ∧ e_{ji}` drops the `s`-th smallest vertex with sign
//! `(-1)^s`, and `∂_0` sends every vertex to the empty face. Ranks are
//! computed exactly by sparse elimination over an [`EliminationScalar`];
//! over ℚ that is fraction-free elimination on [`BigInt`] rows, which has
//! the same rank as the rational matrix.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::scalar::{EliminationScalar, Zp};

/// Coefficient field for homology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum FieldSpec {
    #[default]
    Rationals,
    PrimeField(u32),
}

fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Primes with a compiled-in `Zp<P>` instantiation.
pub const SUPPORTED_PRIMES: [u32; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        match SUPPORTED_PRIMES.iter().find(|&&q| q as u64 == p) {
            Some(&q) => Ok(FieldSpec::PrimeField(q)),
            None => Err(Error::UnsupportedPrime(p)),
        }
    }

    pub fn characteristic(self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => p,
        }
    }

    /// Short tag: `q`, `f2`, `f3`, ...
    pub fn label(self) -> String {
        self.to_string()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("q"),
            FieldSpec::PrimeField(p) => write!(f, "f{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        match t.as_str() {
            "q" | "qq" | "rationals" => Ok(FieldSpec::Rationals),
            _ => {
                let p = t
                    .strip_prefix('f')
                    .and_then(|d| d.parse::<u64>().ok())
                    .ok_or_else(|| Error::UnknownField(s.to_string()))?;
                FieldSpec::prime(p)
            }
        }
    }
}

/// Sparse matrix as `(row, col, value)` triples with no stored zeros,
/// sorted by column then row.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, T)>,
}

impl<T: Clone + Zero> SparseMatrix<T> {
    /// Drops zeros; panics on out-of-range or duplicate positions.
    pub fn new(rows: usize, cols: usize, mut entries: Vec<(usize, usize, T)>) -> Self {
        entries.retain(|(_, _, v)| !v.is_zero());
        entries.sort_by_key(|&(r, c, _)| (c, r));
        for w in entries.windows(2) {
            assert!((w[0].0, w[0].1) != (w[1].0, w[1].1), "duplicate entry");
        }
        assert!(
            entries.iter().all(|&(r, c, _)| r < rows && c < cols),
            "index out of range"
        );
        SparseMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: Vec::new(),
        }
    }

    pub fn identity(n: usize) -> Self
    where
        T: num_traits::One,
    {
        Self::new(n, n, (0..n).map(|i| (i, i, T::one())).collect())
    }

    pub fn map<U: Clone + Zero>(&self, f: impl Fn(&T) -> U) -> SparseMatrix<U> {
        SparseMatrix::new(
            self.rows,
            self.cols,
            self.entries
                .iter()
                .map(|(r, c, v)| (*r, *c, f(v)))
                .collect(),
        )
    }
}

impl<T> SparseMatrix<T> {
    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[(usize, usize, T)] {
        &self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&T> {
        self.entries
            .binary_search_by_key(&(c, r), |&(rr, cc, _)| (cc, rr))
            .ok()
            .map(|k| &self.entries[k].2)
    }
}

fn check_degree(c: &SimplicialComplex, i: isize) -> Result<()> {
    c.require_nonvoid()?;
    let dim = c.dim();
    if i < -1 || i > dim + 1 {
        return Err(Error::DegreeOutOfRange { degree: i, dim });
    }
    Ok(())
}

fn signed_boundary(c: &SimplicialComplex, i: isize) -> Result<SparseMatrix<i64>> {
    check_degree(c, i)?;
    let cols = c.faces_of_dim(i);
    if i == -1 {
        return Ok(SparseMatrix::zeros(0, cols.len()));
    }
    let rows = c.faces_of_dim(i - 1);
    let index: HashMap<&Face, usize> = rows.iter().enumerate().map(|(k, f)| (f, k)).collect();
    let mut entries = Vec::with_capacity(cols.len() * (i as usize + 1));
    for (col, face) in cols.iter().enumerate() {
        let vs = face.vertices();
        for s in 0..vs.len() {
            let mut sub = vs.to_vec();
            sub.remove(s);
            let row = index[&Face::new(sub)];
            entries.push((row, col, if s % 2 == 0 { 1 } else { -1 }));
        }
    }
    Ok(SparseMatrix::new(rows.len(), cols.len(), entries))
}

/// Matrix of `∂_i` from `i`-faces (columns) to `(i-1)`-faces (rows), both
/// in sorted face order, with entries in `T`.
pub fn boundary_matrix<T: EliminationScalar>(
    c: &SimplicialComplex,
    i: isize,
) -> Result<SparseMatrix<T>> {
    Ok(signed_boundary(c, i)?.map(|&v| T::from_i64(v).expect("±1 fits every scalar")))
}

/// `∂_i` over `field`, entries as canonical representatives: `±1` over ℚ,
/// residues in `0..p` over `F_p`.
pub fn boundary_matrix_over(
    c: &SimplicialComplex,
    i: isize,
    field: FieldSpec,
) -> Result<SparseMatrix<i64>> {
    let m = signed_boundary(c, i)?;
    Ok(match field {
        FieldSpec::Rationals => m,
        FieldSpec::PrimeField(p) => m.map(|&v| v.rem_euclid(p as i64)),
    })
}

struct Row<T> {
    cols: Vec<usize>,
    vals: Vec<T>,
}

impl<T: EliminationScalar> Row<T> {
    fn value_at(&self, c: usize) -> &T {
        &self.vals[self.cols.binary_search(&c).expect("pivot column present")]
    }

    /// `a * self - b * other`, zeros dropped.
    fn combine(&self, a: &T, other: &Row<T>, b: &T) -> Row<T> {
        let mut cols = Vec::with_capacity(self.cols.len() + other.cols.len());
        let mut vals = Vec::with_capacity(cols.capacity());
        let (mut i, mut j) = (0, 0);
        while i < self.cols.len() || j < other.cols.len() {
            let ci = self.cols.get(i).copied().unwrap_or(usize::MAX);
            let cj = other.cols.get(j).copied().unwrap_or(usize::MAX);
            let (c, v) = if ci < cj {
                i += 1;
                (ci, a.clone() * self.vals[i - 1].clone())
            } else if cj < ci {
                j += 1;
                (cj, -(b.clone() * other.vals[j - 1].clone()))
            } else {
                i += 1;
                j += 1;
                (
                    ci,
                    a.clone() * self.vals[i - 1].clone() - b.clone() * other.vals[j - 1].clone(),
                )
            };
            if !v.is_zero() {
                cols.push(c);
                vals.push(v);
            }
        }
        T::normalize(&mut vals);
        Row { cols, vals }
    }
}

/// Exact rank by sparse elimination.
///
/// Pivots are chosen by Markowitz cost `(r - 1)(c - 1)` over the active
/// submatrix, ties broken by lowest `(row, col)`.
pub fn rank<T: EliminationScalar>(m: &SparseMatrix<T>) -> usize {
    let mut rows: Vec<Row<T>> = (0..m.rows)
        .map(|_| Row {
            cols: Vec::new(),
            vals: Vec::new(),
        })
        .collect();
    let mut by_row: Vec<(usize, usize, &T)> =
        m.entries.iter().map(|(r, c, v)| (*r, *c, v)).collect();
    by_row.sort_by_key(|&(r, c, _)| (r, c));
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m.cols];
    for (r, c, v) in by_row {
        rows[r].cols.push(c);
        rows[r].vals.push(v.clone());
        col_rows[c].insert(r);
    }
    let mut active: BTreeSet<usize> = (0..m.rows).filter(|&r| !rows[r].cols.is_empty()).collect();
    let mut rank = 0;
    loop {
        let mut best: Option<(usize, usize, usize)> = None;
        'scan: for &r in &active {
            let rl = rows[r].cols.len() - 1;
            for &c in &rows[r].cols {
                let cost = rl * (col_rows[c].len() - 1);
                if best.is_none_or(|(b, _, _)| cost < b) {
                    best = Some((cost, r, c));
                    if cost == 0 {
                        break 'scan;
                    }
                }
            }
        }
        let Some((_, pr, pc)) = best else { break };
        rank += 1;
        active.remove(&pr);
        let pivot = std::mem::replace(
            &mut rows[pr],
            Row {
                cols: Vec::new(),
                vals: Vec::new(),
            },
        );
        for &c in &pivot.cols {
            col_rows[c].remove(&pr);
        }
        let lead = pivot.value_at(pc).clone();
        let targets: Vec<usize> = col_rows[pc].iter().copied().collect();
        for t in targets {
            let coeff = rows[t].value_at(pc).clone();
            let updated = rows[t].combine(&lead, &pivot, &coeff);
            for &c in &rows[t].cols {
                col_rows[c].remove(&t);
            }
            for &c in &updated.cols {
                col_rows[c].insert(t);
            }
            if updated.cols.is_empty() {
                active.remove(&t);
            }
            rows[t] = updated;
        }
    }
    rank
}

/// Runs a scalar-generic computation over the scalar type of `field`.
pub trait FieldDispatch {
    type Output;
    fn run<T: EliminationScalar>(self) -> Self::Output;
}

pub fn with_field<D: FieldDispatch>(field: FieldSpec, d: D) -> Result<D::Output> {
    macro_rules! over_primes {
        ($p:expr, $($q:literal),*) => {
            match $p {
                $($q => Ok(d.run::<Zp<$q>>()),)*
                other => Err(Error::UnsupportedPrime(other as u64)),
            }
        };
    }
    match field {
        FieldSpec::Rationals => Ok(d.run::<BigInt>()),
        FieldSpec::PrimeField(p) => over_primes!(
            p, 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79,
            83, 89, 97
        ),
    }
}

struct RankOf<'a>(&'a SparseMatrix<i64>);

impl FieldDispatch for RankOf<'_> {
    type Output = usize;
    fn run<T: EliminationScalar>(self) -> usize {
        rank(&self.0.map(|&v| T::from_i64(v).expect("integer embeds")))
    }
}

/// Exact rank of an integer matrix over `field`.
pub fn matrix_rank(m: &SparseMatrix<i64>, field: FieldSpec) -> Result<usize> {
    with_field(field, RankOf(m))
}

/// `dim H̃_i` for `-1 <= i <= dim`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BettiTable {
    values: Vec<usize>,
}

impl BettiTable {
    /// `values[k]` is the Betti number in degree `k - 1`.
    pub fn from_values(values: Vec<usize>) -> Self {
        BettiTable { values }
    }

    pub fn get(&self, degree: isize) -> usize {
        usize::try_from(degree + 1)
            .ok()
            .and_then(|k| self.values.get(k).copied())
            .unwrap_or(0)
    }

    pub fn top_degree(&self) -> isize {
        self.values.len() as isize - 2
    }

    /// `(degree, betti)` pairs from degree `-1` up.
    pub fn iter(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(|(k, &b)| (k as isize - 1, b))
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&b| b == 0)
    }

    /// `Σ_i (-1)^i dim H̃_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.iter()
            .map(|(i, b)| {
                if i.rem_euclid(2) == 0 {
                    b as i64
                } else {
                    -(b as i64)
                }
            })
            .sum()
    }
}

impl fmt::Debug for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.iter()).finish()
    }
}

/// Reduced Betti numbers with coefficients in `T`.
pub fn reduced_betti_in<T: EliminationScalar>(c: &SimplicialComplex) -> Result<BettiTable> {
    c.require_nonvoid()?;
    let dim = c.dim();
    // ranks[k] = rank ∂_{k-1}, for degrees -1 ..= dim + 1
    let mut ranks = Vec::with_capacity((dim + 3) as usize);
    for i in -1..=dim + 1 {
        ranks.push(rank(&boundary_matrix::<T>(c, i)?));
    }
    let values = (-1..=dim)
        .map(|i| {
            let k = (i + 1) as usize;
            c.faces_of_dim(i).len() - ranks[k] - ranks[k + 1]
        })
        .collect();
    Ok(BettiTable { values })
}

struct BettiOf<'a>(&'a SimplicialComplex);

impl FieldDispatch for BettiOf<'_> {
    type Output = Result<BettiTable>;
    fn run<T: EliminationScalar>(self) -> Result<BettiTable> {
        reduced_betti_in::<T>(self.0)
    }
}

pub fn reduced_betti(c: &SimplicialComplex, field: FieldSpec) -> Result<BettiTable> {
    with_field(field, BettiOf(c))?
}

/// All reduced homology vanishes. `{∅}` is not acyclic.
pub fn is_k_acyclic(c: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    Ok(reduced_betti(c, field)?.is_zero())
}
