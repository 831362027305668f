//! Simplicial complexes stored by their facets.
//!
//! A complex carries an explicit ground set, which may contain vertices
//! lying in no face: links, deletions and restrictions keep track of the
//! labels they were computed on. The complex `{∅}` (one empty face) is an
//! ordinary value; the void complex with no faces at all is a flagged
//! special case that homology and the Cohen-Macaulay tests reject.

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A face: strictly increasing vertex labels. The empty face is valid.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Face(Vec<u32>);

impl Face {
    pub fn new(mut labels: Vec<u32>) -> Self {
        labels.sort_unstable();
        labels.dedup();
        Face(labels)
    }

    pub fn empty() -> Self {
        Face(Vec::new())
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.any(|w| w == v))
    }

    pub fn is_disjoint(&self, other: &Face) -> bool {
        self.0.iter().all(|&v| !other.contains(v))
    }

    pub fn minus(&self, other: &Face) -> Face {
        Face(
            self.0
                .iter()
                .copied()
                .filter(|&v| !other.contains(v))
                .collect(),
        )
    }

    pub fn union(&self, other: &Face) -> Face {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Face::new(v)
    }

    fn retain(&self, keep: impl Fn(u32) -> bool) -> Face {
        Face(self.0.iter().copied().filter(|&v| keep(v)).collect())
    }
}

impl<const N: usize> From<[u32; N]> for Face {
    fn from(v: [u32; N]) -> Self {
        Face::new(v.to_vec())
    }
}

impl From<Vec<u32>> for Face {
    fn from(v: Vec<u32>) -> Self {
        Face::new(v)
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

/// Face counts by dimension: `counts[0]` is `f_{-1}`, `counts[i + 1]` is `f_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    /// `f_i` for `i >= -1`; zero beyond the top dimension.
    pub fn get(&self, i: isize) -> u64 {
        usize::try_from(i + 1)
            .ok()
            .and_then(|k| self.0.get(k).copied())
            .unwrap_or(0)
    }

    /// `Σ_i (-1)^i f_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &f)| if k % 2 == 1 { f as i64 } else { -(f as i64) })
            .sum()
    }
}

#[derive(Clone, Default)]
pub struct SimplicialComplex {
    vertices: Vec<u32>,
    facets: Vec<Face>,
    void: bool,
    faces: OnceLock<Vec<Face>>,
}

/// The core of a complex and the cone apexes removed to obtain it.
#[derive(Clone, Debug, PartialEq)]
pub struct Core {
    pub complex: SimplicialComplex,
    /// Vertices whose star is the whole complex.
    pub apexes: Vec<u32>,
}

impl Core {
    pub fn is_cone(&self) -> bool {
        !self.apexes.is_empty()
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.void == other.void && self.vertices == other.vertices && self.facets == other.facets
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.void {
            return write!(f, "Void(V={:?})", self.vertices);
        }
        write!(
            f,
            "Complex(V={:?}, facets={:?})",
            self.vertices, self.facets
        )
    }
}

fn sorted_labels(v: impl IntoIterator<Item = u32>) -> Vec<u32> {
    let mut v: Vec<u32> = v.into_iter().collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// Keeps only inclusion-maximal faces, sorted and deduplicated.
fn maximal(mut gens: Vec<Face>) -> Vec<Face> {
    gens.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| g.is_subset(k)) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

impl SimplicialComplex {
    /// The complex generated by `generators` on an explicit ground set.
    pub fn new(vertices: impl IntoIterator<Item = u32>, generators: Vec<Face>) -> Result<Self> {
        let vertices = sorted_labels(vertices);
        for g in &generators {
            if let Some(&v) = g
                .vertices()
                .iter()
                .find(|v| vertices.binary_search(v).is_err())
            {
                return Err(Error::NotInGroundSet(v));
            }
        }
        Ok(Self::build(vertices, generators))
    }

    /// Ground set taken to be the union of the generators.
    pub fn from_facets(generators: Vec<Face>) -> Self {
        let vertices = sorted_labels(generators.iter().flat_map(|g| g.0.iter().copied()));
        Self::build(vertices, generators)
    }

    fn build(vertices: Vec<u32>, mut generators: Vec<Face>) -> Self {
        if generators.is_empty() {
            generators.push(Face::empty());
        }
        SimplicialComplex {
            vertices,
            facets: maximal(generators),
            void: false,
            faces: OnceLock::new(),
        }
    }

    /// `{∅}` on an empty ground set.
    pub fn empty() -> Self {
        Self::build(Vec::new(), Vec::new())
    }

    /// The complex with no faces at all.
    pub fn void(vertices: impl IntoIterator<Item = u32>) -> Self {
        SimplicialComplex {
            vertices: sorted_labels(vertices),
            facets: Vec::new(),
            void: true,
            faces: OnceLock::new(),
        }
    }

    /// The full simplex `<P>`.
    pub fn simplex(vertices: impl IntoIterator<Item = u32>) -> Self {
        let v = sorted_labels(vertices);
        Self::build(v.clone(), vec![Face(v)])
    }

    pub fn is_void(&self) -> bool {
        self.void
    }

    pub(crate) fn require_nonvoid(&self) -> Result<()> {
        if self.void {
            Err(Error::VoidComplex)
        } else {
            Ok(())
        }
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// Largest face dimension; `-1` for `{∅}` and for the void complex.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(Face::dim).max().unwrap_or(-1)
    }

    pub fn contains(&self, f: &Face) -> bool {
        self.facets.iter().any(|g| f.is_subset(g))
    }

    /// Every face including `∅`, sorted by dimension then lexicographically.
    pub fn faces(&self) -> &[Face] {
        self.faces.get_or_init(|| {
            let mut seen: HashSet<Face> = HashSet::new();
            for g in &self.facets {
                let k = g.len();
                assert!(k < 64, "facet too large to enumerate");
                for mask in 0u64..(1u64 << k) {
                    let sub = Face(
                        (0..k)
                            .filter(|i| mask >> i & 1 == 1)
                            .map(|i| g.0[i])
                            .collect(),
                    );
                    seen.insert(sub);
                }
            }
            let mut all: Vec<Face> = seen.into_iter().collect();
            all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
            all
        })
    }

    /// Faces of dimension `i`, in sorted order.
    pub fn faces_of_dim(&self, i: isize) -> &[Face] {
        let faces = self.faces();
        if i < -1 {
            return &faces[..0];
        }
        let k = (i + 1) as usize;
        let start = faces.partition_point(|f| f.len() < k);
        let end = faces.partition_point(|f| f.len() <= k);
        &faces[start..end]
    }

    pub fn f_vector(&self) -> FVector {
        let mut counts = vec![0u64; (self.dim() + 2) as usize];
        for f in self.faces() {
            counts[f.len()] += 1;
        }
        FVector(counts)
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// `χ̃ = Σ_F (-1)^{|F|-1}`.
    pub fn reduced_euler_characteristic(&self) -> Result<i64> {
        self.require_nonvoid()?;
        Ok(self
            .faces()
            .iter()
            .map(|f| if f.len() % 2 == 1 { 1 } else { -1 })
            .sum())
    }

    fn check_ground(&self, labels: &[u32]) -> Result<()> {
        match labels
            .iter()
            .find(|v| self.vertices.binary_search(v).is_err())
        {
            Some(&v) => Err(Error::NotInGroundSet(v)),
            None => Ok(()),
        }
    }

    fn derived(&self, vertices: Vec<u32>, generators: Vec<Face>) -> Self {
        if generators.is_empty() {
            return Self::void(vertices);
        }
        Self::build(vertices, generators)
    }

    /// `lk(F) = {H : H ∩ F = ∅, H ∪ F ∈ Δ}` on ground set `V \ F`.
    pub fn link(&self, f: &Face) -> Result<Self> {
        self.require_nonvoid()?;
        if !self.contains(f) {
            return Err(Error::NotAFace(f.0.clone()));
        }
        let gens = self
            .facets
            .iter()
            .filter(|g| f.is_subset(g))
            .map(|g| g.minus(f))
            .collect();
        let ground = self
            .vertices
            .iter()
            .copied()
            .filter(|&v| !f.contains(v))
            .collect();
        Ok(self.derived(ground, gens))
    }

    /// `Δ \ S`: faces avoiding `S`, on ground set `V \ S`.
    pub fn delete_set(&self, s: &Face) -> Result<Self> {
        self.check_ground(s.vertices())?;
        let gens = self.facets.iter().map(|g| g.minus(s)).collect();
        let ground = self
            .vertices
            .iter()
            .copied()
            .filter(|&v| !s.contains(v))
            .collect();
        Ok(self.derived(ground, gens))
    }

    /// `Δ_S`: faces inside `S`, on ground set `S`.
    pub fn restrict(&self, s: &Face) -> Result<Self> {
        self.check_ground(s.vertices())?;
        let gens = self
            .facets
            .iter()
            .map(|g| g.retain(|v| s.contains(v)))
            .collect();
        Ok(self.derived(s.0.clone(), gens))
    }

    /// `st(v) = {F : F ∪ {v} ∈ Δ}`; void when `v` lies in no face.
    pub fn star(&self, v: u32) -> Result<Self> {
        self.check_ground(&[v])?;
        let gens = self
            .facets
            .iter()
            .filter(|g| g.contains(v))
            .cloned()
            .collect();
        Ok(self.derived(self.vertices.clone(), gens))
    }

    /// Restriction to the vertices whose star is a proper subcomplex.
    pub fn core_of(&self) -> Result<Core> {
        self.require_nonvoid()?;
        // st(x) = Δ exactly when x lies in every facet
        let apexes: Vec<u32> = self.facets[0]
            .vertices()
            .iter()
            .copied()
            .filter(|&x| self.facets.iter().all(|g| g.contains(x)))
            .collect();
        let keep = Face(
            self.vertices
                .iter()
                .copied()
                .filter(|v| apexes.binary_search(v).is_err())
                .collect(),
        );
        Ok(Core {
            complex: self.restrict(&keep)?,
            apexes,
        })
    }

    /// Join with `other`, whose labels are shifted past this ground set.
    pub fn join(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let shift = self.vertices.last().map_or(0, |&m| m + 1);
        let other = other.map_labels(|v| v + shift);
        if self.void || other.void {
            return Self::void(self.vertices.iter().chain(&other.vertices).copied());
        }
        let gens = self
            .facets
            .iter()
            .flat_map(|f| other.facets.iter().map(move |h| f.union(h)))
            .collect();
        Self::build(
            sorted_labels(self.vertices.iter().chain(&other.vertices).copied()),
            gens,
        )
    }

    /// Applies an injective relabeling.
    pub fn map_labels(&self, map: impl Fn(u32) -> u32) -> SimplicialComplex {
        let vertices = sorted_labels(self.vertices.iter().map(|&v| map(v)));
        if self.void {
            return Self::void(vertices);
        }
        let gens = self
            .facets
            .iter()
            .map(|f| Face::new(f.0.iter().map(|&v| map(v)).collect()))
            .collect();
        Self::build(vertices, gens)
    }

    /// Same faces, regardless of ground set.
    pub fn same_faces(&self, other: &SimplicialComplex) -> bool {
        self.void == other.void && self.facets == other.facets
    }

    /// Reads one facet per line; `#` starts a comment line.
    pub fn parse_facets(text: &str) -> Result<Self> {
        let mut gens = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: String| Error::FacetList { line: i + 1, msg };
            let mut labels = Vec::new();
            for tok in line.split_whitespace() {
                let v: u32 = tok
                    .parse()
                    .map_err(|_| err(format!("bad vertex label {tok:?}")))?;
                labels.push(v);
            }
            let face = Face::new(labels.clone());
            if face.len() != labels.len() {
                return Err(err("duplicate vertex".into()));
            }
            gens.push(face);
        }
        Ok(Self::from_facets(gens))
    }

    pub fn to_facet_text(&self) -> String {
        let mut s = String::new();
        for f in &self.facets {
            let line: Vec<String> = f.0.iter().map(u32::to_string).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }
}

/// `Δ(G)`: faces are the independent sets of `G`, ground set `V(G)`.
pub fn independence_complex(g: &Graph) -> SimplicialComplex {
    let gens = g
        .maximal_independent_sets()
        .into_iter()
        .map(|s| Face(s.iter().map(|v| v as u32).collect()))
        .collect();
    SimplicialComplex::build((0..g.order() as u32).collect(), gens)
}
