//! Independent oracles shared by the integration and acceptance tests.
//!
//! Nothing here calls the library's enumeration, link, boundary or rank
//! code: graphs are read only through `order` and `has_edge`, complexes
//! only through their facet lists.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use gorenstein::{parse_graph6, Graph, SimplicialComplex};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

// ---------- graphs ----------

pub fn mask_to_vec(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

fn adjacency_masks(g: &Graph) -> Vec<u64> {
    let n = g.order();
    assert!(n <= 20, "brute-force oracle is for small graphs");
    (0..n)
        .map(|u| {
            (0..n)
                .filter(|&v| g.has_edge(u, v))
                .fold(0, |m, v| m | 1 << v)
        })
        .collect()
}

/// Independent subsets of `allowed`, as bitmasks.
pub fn independent_within(g: &Graph, allowed: u64) -> Vec<u64> {
    let adj = adjacency_masks(g);
    let n = g.order();
    (0u64..1 << n)
        .filter(|&m| m & !allowed == 0)
        .filter(|&m| (0..n).all(|v| m >> v & 1 == 0 || adj[v] & m == 0))
        .collect()
}

/// Maximal independent subsets of the induced subgraph on `allowed`.
pub fn maximal_within(g: &Graph, allowed: u64) -> Vec<u64> {
    let ind = independent_within(g, allowed);
    let set: BTreeSet<u64> = ind.iter().copied().collect();
    let n = g.order();
    ind.into_iter()
        .filter(|&m| {
            (0..n).all(|v| allowed >> v & 1 == 0 || m >> v & 1 == 1 || !set.contains(&(m | 1 << v)))
        })
        .collect()
}

pub fn full_mask(n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        u64::MAX >> (64 - n)
    }
}

pub fn brute_mis(g: &Graph) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = maximal_within(g, full_mask(g.order()))
        .into_iter()
        .map(mask_to_vec)
        .collect();
    v.sort();
    v
}

fn alpha_within(g: &Graph, allowed: u64) -> usize {
    independent_within(g, allowed)
        .iter()
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn brute_alpha(g: &Graph) -> usize {
    alpha_within(g, full_mask(g.order()))
}

/// Constant size of the maximal independent sets inside `allowed`, if any.
fn well_covered_within(g: &Graph, allowed: u64) -> Option<usize> {
    let sizes: BTreeSet<u32> = maximal_within(g, allowed)
        .iter()
        .map(|m| m.count_ones())
        .collect();
    (sizes.len() == 1).then(|| *sizes.iter().next().unwrap() as usize)
}

pub fn brute_well_covered(g: &Graph) -> bool {
    well_covered_within(g, full_mask(g.order())).is_some()
}

pub fn brute_w2(g: &Graph) -> bool {
    let full = full_mask(g.order());
    let Some(a) = well_covered_within(g, full) else {
        return false;
    };
    (0..g.order()).all(|x| well_covered_within(g, full & !(1 << x)) == Some(a))
}

fn alpha_of_adj(adj: &[u64]) -> usize {
    let n = adj.len();
    (0u64..1 << n)
        .filter(|&m| (0..n).all(|v| m >> v & 1 == 0 || adj[v] & m == 0))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn brute_alpha_critical(g: &Graph) -> bool {
    let adj = adjacency_masks(g);
    let a = alpha_of_adj(&adj);
    let n = g.order();
    (0..n).all(|u| {
        (u + 1..n).filter(|&v| g.has_edge(u, v)).all(|v| {
            let mut minus = adj.clone();
            minus[u] &= !(1 << v);
            minus[v] &= !(1 << u);
            alpha_of_adj(&minus) > a
        })
    })
}

/// Vertex set of `G_S` as a mask: everything outside `S ∪ N(S)`.
pub fn brute_localize_mask(g: &Graph, s: &[usize]) -> u64 {
    let n = g.order();
    let mut closed = 0u64;
    for &x in s {
        closed |= 1 << x;
        for y in 0..n {
            if g.has_edge(x, y) {
                closed |= 1 << y;
            }
        }
    }
    full_mask(n) & !closed
}

pub fn brute_triangle_free(g: &Graph) -> bool {
    let n = g.order();
    (0..n).all(|a| {
        (a + 1..n).all(|b| {
            (b + 1..n).all(|c| !(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)))
        })
    })
}

/// Random graph as a proptest strategy.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

// ---------- corpora ----------

pub fn corpus_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpus")
        .join(name)
}

pub fn corpus_text(name: &str) -> String {
    std::fs::read_to_string(corpus_path(name)).expect("corpus fixture present")
}

pub fn load_corpus(name: &str) -> Vec<Graph> {
    corpus_text(name)
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| parse_graph6(l.trim()).expect("valid corpus line"))
        .collect()
}

pub const TRIANGLE_FREE_LE9: &str = "triangle_free_connected_le9.g6";
pub const GIRTH5_LE10: &str = "girth5_connected_le10.g6";

// ---------- complexes ----------

pub type RawFace = Vec<u32>;

pub fn raw_facets(c: &SimplicialComplex) -> Vec<RawFace> {
    c.facets().iter().map(|f| f.vertices().to_vec()).collect()
}

/// Every subset of every generator, the empty face included.
pub fn all_faces(generators: &[RawFace]) -> BTreeSet<RawFace> {
    let mut out = BTreeSet::new();
    out.insert(Vec::new());
    for g in generators {
        for m in 0u64..1 << g.len() {
            out.insert(
                g.iter()
                    .enumerate()
                    .filter(|(i, _)| m >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect(),
            );
        }
    }
    out
}

/// Faces grouped by size, sorted lexicographically within each size.
fn faces_by_size(generators: &[RawFace]) -> Vec<Vec<RawFace>> {
    let faces = all_faces(generators);
    let top = faces.iter().map(Vec::len).max().unwrap_or(0);
    let mut by = vec![Vec::new(); top + 1];
    for f in faces {
        by[f.len()].push(f);
    }
    by
}

/// Dense integer boundary from size-`k` faces to size-`k-1` faces.
fn dense_boundary(rows: &[RawFace], cols: &[RawFace]) -> Vec<Vec<i64>> {
    let index: BTreeMap<&RawFace, usize> = rows.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let mut m = vec![vec![0i64; cols.len()]; rows.len()];
    for (j, f) in cols.iter().enumerate() {
        for s in 0..f.len() {
            let mut sub = f.clone();
            sub.remove(s);
            m[index[&sub]][j] = if s % 2 == 0 { 1 } else { -1 };
        }
    }
    m
}

/// Rank over ℚ by Gaussian elimination on dense rationals.
pub fn dense_rank_q(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| {
            r.iter()
                .map(|&v| BigRational::from_integer(v.into()))
                .collect()
        })
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][c].clone();
        for r in 0..rows {
            if r != rank && !a[r][c].is_zero() {
                let f = a[r][c].clone() / pivot.clone();
                for k in c..cols {
                    let d = f.clone() * a[rank][k].clone();
                    a[r][k] -= d;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank over `F_p` by dense elimination.
pub fn dense_rank_p(m: &[Vec<i64>], p: i64) -> usize {
    let mut a: Vec<Vec<i64>> = m
        .iter()
        .map(|r| r.iter().map(|v| v.rem_euclid(p)).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let inv = |x: i64| (1..p).find(|y| x * y % p == 1).unwrap();
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let s = inv(a[rank][c]);
        for k in c..cols {
            a[rank][k] = a[rank][k] * s % p;
        }
        for r in 0..rows {
            if r != rank && a[r][c] != 0 {
                let f = a[r][c];
                for k in c..cols {
                    a[r][k] = (a[r][k] - f * a[rank][k]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Nonzero diagonal of the Smith normal form of an integer matrix.
pub fn smith_divisors(m: &[Vec<i64>]) -> Vec<BigInt> {
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry of the remaining block as pivot
        let mut best: Option<(usize, usize)> = None;
        for r in t..rows {
            for c in t..cols {
                if !a[r][c].is_zero() && best.is_none_or(|(br, bc)| a[r][c].abs() < a[br][bc].abs())
                {
                    best = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = best else { break };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        let mut clean = true;
        for r in t + 1..rows {
            let q = &a[r][t] / &a[t][t];
            if !q.is_zero() {
                for c in t..cols {
                    let d = &q * &a[t][c];
                    a[r][c] -= d;
                }
            }
            clean &= a[r][t].is_zero();
        }
        for c in t + 1..cols {
            let q = &a[t][c] / &a[t][t];
            if !q.is_zero() {
                for r in t..rows {
                    let d = &q * &a[r][t];
                    a[r][c] -= d;
                }
            }
            clean &= a[t][c].is_zero();
        }
        if !clean {
            continue;
        }
        // divisibility: fold any non-multiple into the pivot row and retry
        let bad = (t + 1..rows)
            .flat_map(|r| (t + 1..cols).map(move |c| (r, c)))
            .find(|&(r, c)| !(&a[r][c] % &a[t][t]).is_zero());
        if let Some((r, _)) = bad {
            for c in t..cols {
                let v = a[r][c].clone();
                a[t][c] += v;
            }
            continue;
        }
        out.push(a[t][t].abs());
        t += 1;
    }
    out
}

/// Rank over the field of characteristic `p` (0 for ℚ) from Smith divisors.
pub fn smith_rank(m: &[Vec<i64>], p: u32) -> usize {
    let d = smith_divisors(m);
    if p == 0 {
        d.len()
    } else {
        d.iter()
            .filter(|x| !(*x % BigInt::from(p)).is_zero())
            .count()
    }
}

/// Reduced Betti numbers, degrees `-1..=dim`, from a rank function.
pub fn betti_with(generators: &[RawFace], rank: impl Fn(&[Vec<i64>]) -> usize) -> Vec<usize> {
    let by = faces_by_size(generators);
    // ranks[k] = rank of the map from size-k faces to size-(k-1) faces
    let mut ranks = vec![0; by.len() + 1];
    for k in 1..by.len() {
        ranks[k] = rank(&dense_boundary(&by[k - 1], &by[k]));
    }
    (0..by.len())
        .map(|k| by[k].len() - ranks[k] - ranks[k + 1])
        .collect()
}

pub fn oracle_betti_q(generators: &[RawFace]) -> Vec<usize> {
    betti_with(generators, dense_rank_q)
}

pub fn oracle_betti_p(generators: &[RawFace], p: i64) -> Vec<usize> {
    betti_with(generators, |m| dense_rank_p(m, p))
}

pub fn snf_betti(generators: &[RawFace], p: u32) -> Vec<usize> {
    betti_with(generators, |m| smith_rank(m, p))
}

pub fn oracle_euler(generators: &[RawFace]) -> i64 {
    all_faces(generators)
        .iter()
        .map(|f| if f.len() % 2 == 1 { 1 } else { -1 })
        .sum()
}

/// Faces of the link of `f`, from the face set alone.
pub fn oracle_link(faces: &BTreeSet<RawFace>, f: &[u32]) -> Vec<RawFace> {
    faces
        .iter()
        .filter(|h| h.iter().all(|v| !f.contains(v)))
        .filter(|h| {
            let mut u: Vec<u32> = h.iter().chain(f).copied().collect();
            u.sort();
            faces.contains(&u)
        })
        .cloned()
        .collect()
}

/// Reisner's criterion over ℚ evaluated from first principles.
pub fn oracle_cm_q(generators: &[RawFace]) -> bool {
    let faces = all_faces(generators);
    faces.iter().all(|f| {
        let lk = oracle_link(&faces, f);
        let b = oracle_betti_q(&lk);
        // b[k] is degree k-1; dim lk = b.len() - 2
        b.iter().take(b.len().saturating_sub(1)).all(|&x| x == 0)
    })
}

// ---------- random complexes and fixtures ----------

/// Up to `max_facets` generators of size at most `max_size` on `0..nv`.
pub fn arb_generators(
    nv: u32,
    max_facets: usize,
    max_size: usize,
) -> impl Strategy<Value = Vec<RawFace>> {
    proptest::collection::vec(
        proptest::collection::btree_set(0..nv, 0..=max_size).prop_map(|s| s.into_iter().collect()),
        1..=max_facets,
    )
}

pub fn random_generators(
    rng: &mut impl Rng,
    nv: u32,
    max_facets: usize,
    max_size: usize,
) -> Vec<RawFace> {
    let k = rng.gen_range(1..=max_facets);
    (0..k)
        .map(|_| {
            let size = rng.gen_range(0..=max_size);
            let mut s = BTreeSet::new();
            while s.len() < size.min(nv as usize) {
                s.insert(rng.gen_range(0..nv));
            }
            s.into_iter().collect()
        })
        .collect()
}

/// `count` reproducible random complexes on at most 12 vertices.
pub fn random_complexes(seed: u64, count: usize) -> Vec<Vec<RawFace>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let nv = rng.gen_range(1..=12);
            random_generators(&mut rng, nv, 7, 6)
        })
        .collect()
}

pub fn complex_of(generators: &[RawFace]) -> SimplicialComplex {
    SimplicialComplex::from_facets(generators.iter().map(|g| g.clone().into()).collect())
}

/// Six-vertex projective plane, 0-based.
pub fn projective_plane() -> Vec<RawFace> {
    [
        [1, 2, 3],
        [1, 3, 4],
        [1, 4, 5],
        [1, 5, 6],
        [1, 6, 2],
        [2, 3, 5],
        [3, 4, 6],
        [4, 5, 2],
        [5, 6, 3],
        [6, 2, 4],
    ]
    .iter()
    .map(|f| {
        let mut v: Vec<u32> = f.iter().map(|x| x - 1).collect();
        v.sort();
        v
    })
    .collect()
}

/// Seven-vertex torus.
pub fn torus() -> Vec<RawFace> {
    (0..7u32)
        .flat_map(|i| {
            [[i, i + 1, i + 3], [i, i + 2, i + 3]].map(|f| {
                let mut v: Vec<u32> = f.iter().map(|x| x % 7).collect();
                v.sort();
                v
            })
        })
        .collect()
}

pub fn sphere(d: u32) -> Vec<RawFace> {
    (0..=d + 1)
        .map(|skip| (0..=d + 1).filter(|&v| v != skip).collect())
        .collect()
}

/// Small complexes with known torsion or none.
pub fn fixture_set() -> Vec<(&'static str, Vec<RawFace>)> {
    vec![
        ("projective plane", projective_plane()),
        ("torus", torus()),
        ("hollow triangle", sphere(1)),
        ("2-sphere", sphere(2)),
        ("point", vec![vec![0]]),
        ("empty", vec![vec![]]),
        ("two points", vec![vec![0], vec![1]]),
        ("bowtie", vec![vec![0, 1, 2], vec![2, 3, 4]]),
    ]
}

/// Maximal elements of a face set.
pub fn oracle_facets(faces: &std::collections::BTreeSet<RawFace>) -> Vec<RawFace> {
    faces
        .iter()
        .filter(|f| {
            !faces
                .iter()
                .any(|g| g.len() > f.len() && f.iter().all(|v| g.contains(v)))
        })
        .cloned()
        .collect()
}

pub fn oracle_eulerian(generators: &[RawFace]) -> bool {
    let faces = all_faces(generators);
    let facets = oracle_facets(&faces);
    let top = facets.iter().map(Vec::len).max().unwrap_or(0);
    if facets.iter().any(|f| f.len() != top) {
        return false;
    }
    faces.iter().all(|f| {
        let lk = oracle_link(&faces, f);
        let dim = lk.iter().map(Vec::len).max().unwrap_or(0) as i64 - 1;
        oracle_euler(&lk) == if dim.rem_euclid(2) == 0 { 1 } else { -1 }
    })
}

pub fn oracle_gorenstein_q(generators: &[RawFace]) -> bool {
    let facets = oracle_facets(&all_faces(generators));
    let apexes: Vec<u32> = facets[0]
        .iter()
        .copied()
        .filter(|v| facets.iter().all(|f| f.contains(v)))
        .collect();
    let core: Vec<RawFace> = facets
        .iter()
        .map(|f| f.iter().copied().filter(|v| !apexes.contains(v)).collect())
        .collect();
    oracle_eulerian(&core) && oracle_cm_q(&core)
}
