//! Pure simplicial complexes and their purely combinatorial queries.
//!
//! A pure `k`-dimensional complex on vertex set `{0, …, n-1}` is determined by
//! its set of `k`-faces (each a `(k+1)`-subset); all lower faces are obtained
//! by downward closure. Orientations are always the ones induced by the global
//! vertex order `0 < 1 < … < n-1`, which fixes every incidence sign and makes
//! all derived matrices reproducible byte for byte.

use std::collections::BTreeSet;
use std::fmt;
use std::io::{Read, Write};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::ComplexError;
use crate::graph::Graph;

/// A face: a strictly increasing tuple of vertices. The empty face is allowed
/// and has dimension -1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Face {
    vertices: Vec<usize>,
}

impl Face {
    /// Builds a face from a vertex list, sorting it and rejecting repeats.
    pub fn new(mut vertices: Vec<usize>) -> Result<Self, ComplexError> {
        vertices.sort_unstable();
        for w in vertices.windows(2) {
            if w[0] == w[1] {
                return Err(ComplexError::RepeatedVertex { vertex: w[0] });
            }
        }
        Ok(Face { vertices })
    }

    /// The empty face (dimension -1).
    pub fn empty() -> Self {
        Face { vertices: Vec::new() }
    }

    /// Builds a face from vertices known to be strictly increasing.
    pub(crate) fn from_sorted(vertices: Vec<usize>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Face { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Dimension = cardinality - 1; the empty face has dimension -1.
    pub fn dim(&self) -> i32 {
        self.vertices.len() as i32 - 1
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// True when every vertex of `self` belongs to `other`.
    pub fn is_subset_of(&self, other: &Face) -> bool {
        let mut it = other.vertices.iter();
        self.vertices
            .iter()
            .all(|v| it.by_ref().any(|w| w == v))
    }

    pub fn intersection_len(&self, other: &Face) -> usize {
        let (mut i, mut j, mut c) = (0, 0, 0);
        while i < self.vertices.len() && j < other.vertices.len() {
            match self.vertices[i].cmp(&other.vertices[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    c += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        c
    }

    pub fn intersection(&self, other: &Face) -> Face {
        let set: Vec<usize> = self
            .vertices
            .iter()
            .copied()
            .filter(|v| other.contains(*v))
            .collect();
        Face::from_sorted(set)
    }

    pub fn union(&self, other: &Face) -> Face {
        let mut vs: Vec<usize> = self
            .vertices
            .iter()
            .chain(other.vertices.iter())
            .copied()
            .collect();
        vs.sort_unstable();
        vs.dedup();
        Face { vertices: vs }
    }

    /// Face with vertex `v` adjoined (which must not already be present).
    pub fn extended(&self, v: usize) -> Face {
        debug_assert!(!self.contains(v));
        let mut vs = self.vertices.clone();
        vs.push(v);
        vs.sort_unstable();
        Face { vertices: vs }
    }

    /// All facets (faces of one dimension lower).
    pub fn facets(&self) -> Vec<Face> {
        (0..self.vertices.len())
            .map(|i| {
                let mut vs = self.vertices.clone();
                vs.remove(i);
                Face { vertices: vs }
            })
            .collect()
    }

    /// Label used in CSV headers: vertices joined by `-`.
    pub fn label(&self) -> String {
        if self.vertices.is_empty() {
            "()".to_string()
        } else {
            self.vertices.iter().join("-")
        }
    }

    /// Parses a `-`-joined label back into a face.
    pub fn parse_label(s: &str) -> Result<Face, ComplexError> {
        if s == "()" {
            return Ok(Face::empty());
        }
        let vs: Result<Vec<usize>, _> = s.split('-').map(str::parse).collect();
        match vs {
            Ok(v) => Face::new(v),
            Err(_) => Err(ComplexError::Format(format!("bad face label {s:?}"))),
        }
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.vertices.iter().join(","))
    }
}

/// Oriented incidence number `[h : f]` of a face and one of its facets,
/// with orientations induced by the global vertex order: if `f ⊂ h` and
/// `h \ f = {x_j}` with `x_j` in sorted position `j` of `h`, the sign is
/// `(-1)^j`; if `f` is not a facet of `h` the number is 0.
///
/// Panics when `dim h != dim f + 1`.
pub fn incidence(h: &Face, f: &Face) -> i64 {
    assert_eq!(
        h.dim(),
        f.dim() + 1,
        "incidence requires dim h = dim f + 1, got {} and {}",
        h.dim(),
        f.dim()
    );
    let mut missing = None;
    let mut j = 0;
    let hv = h.vertices();
    let fv = f.vertices();
    let mut fi = 0;
    for (hi, &v) in hv.iter().enumerate() {
        if fi < fv.len() && fv[fi] == v {
            fi += 1;
        } else if missing.is_none() {
            missing = Some(hi);
            j = hi;
        } else {
            return 0; // two vertices of h missing from f
        }
    }
    if fi != fv.len() || missing.is_none() {
        return 0;
    }
    if j % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The sign `ε(f, f') = [f : f∩f'] · [f' : f∩f']` for two faces of the same
/// dimension `i` sharing `i` vertices; 0 when `|f ∩ f'| != i`. In particular
/// `ε(f, f) = 0`: diagonal entries of Laplacians are set by their builders,
/// never through this function.
pub fn epsilon(f: &Face, g: &Face) -> i64 {
    assert_eq!(f.dim(), g.dim(), "epsilon requires equal dimensions");
    let i = f.dim();
    if f.intersection_len(g) as i32 != i {
        return 0;
    }
    let common = f.intersection(g);
    incidence(f, &common) * incidence(g, &common)
}

/// A bijection between the `d`-faces of some family and contiguous indices
/// `0..len`, in lexicographic order of the sorted vertex tuples. Every matrix
/// in the crate derives its row/column order from one of these.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceIndex {
    dim: i32,
    faces: Vec<Face>,
}

impl FaceIndex {
    /// Indexes the given faces (all of dimension `dim`) lexicographically.
    pub fn new(dim: i32, mut faces: Vec<Face>) -> Self {
        faces.sort();
        faces.dedup();
        assert!(faces.iter().all(|f| f.dim() == dim));
        FaceIndex { dim, faces }
    }

    /// Indexes all `(d+1)`-subsets of `{0, …, n-1}`.
    pub fn all_subsets(n: usize, dim: i32) -> Self {
        assert!(dim >= -1);
        let size = (dim + 1) as usize;
        let faces: Vec<Face> = (0..n)
            .combinations(size)
            .map(Face::from_sorted)
            .collect();
        FaceIndex { dim, faces }
    }

    pub fn dim(&self) -> i32 {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn face(&self, i: usize) -> &Face {
        &self.faces[i]
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// Index of a face, if present.
    pub fn position(&self, f: &Face) -> Option<usize> {
        self.faces.binary_search(f).ok()
    }

    pub fn labels(&self) -> Vec<String> {
        self.faces.iter().map(Face::label).collect()
    }
}

/// Serialized form of a complex: `{"n": …, "k": …, "k_faces": [[…], …]}`,
/// 0-based vertices. Faces need not be sorted on input; they are canonicalized.
#[derive(Serialize, Deserialize)]
struct ComplexFile {
    n: usize,
    k: usize,
    k_faces: Vec<Vec<usize>>,
}

/// A pure `k`-dimensional simplicial complex with a fixed global vertex order.
///
/// `faces(i)` for `i < k` is exactly the set of `i`-faces contained in at
/// least one `k`-face; vertices appearing in no `k`-face still count towards
/// `n`. The empty complex (no `k`-faces) is allowed and is treated as pure of
/// dimension `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    n: usize,
    k: usize,
    /// `faces_by_dim[d + 1]` holds the faces of dimension `d`, sorted
    /// lexicographically; index 0 is the empty face.
    faces_by_dim: Vec<Vec<Face>>,
}

impl Complex {
    /// Builds a pure complex on `n` vertices from its `k`-faces; lower faces
    /// are computed by downward closure and duplicates collapse.
    pub fn from_k_faces<I>(n: usize, k: usize, faces: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = Face>,
    {
        let mut top: BTreeSet<Face> = BTreeSet::new();
        for f in faces {
            if f.vertices().len() != k + 1 {
                return Err(ComplexError::FaceCardinality {
                    face: f.vertices().to_vec(),
                    got: f.vertices().len(),
                    expected: k + 1,
                });
            }
            if let Some(&v) = f.vertices().iter().find(|&&v| v >= n) {
                return Err(ComplexError::VertexOutOfRange { vertex: v, n });
            }
            top.insert(f);
        }
        let mut faces_by_dim: Vec<BTreeSet<Face>> = vec![BTreeSet::new(); k + 2];
        faces_by_dim[0].insert(Face::empty());
        for f in &top {
            for size in 1..=k + 1 {
                for sub in f.vertices().iter().copied().combinations(size) {
                    faces_by_dim[size].insert(Face::from_sorted(sub));
                }
            }
        }
        Ok(Complex {
            n,
            k,
            faces_by_dim: faces_by_dim
                .into_iter()
                .map(|s| s.into_iter().collect())
                .collect(),
        })
    }

    /// The complete `k`-complex on `n` vertices: every `(k+1)`-subset is a face.
    pub fn complete(n: usize, k: usize) -> Result<Self, ComplexError> {
        if n < k + 1 {
            return Err(ComplexError::TooFewVertices { n, k });
        }
        let faces = (0..n).combinations(k + 1).map(Face::from_sorted);
        Complex::from_k_faces(n, k, faces)
    }

    /// The empty pure `k`-complex on `n` vertices.
    pub fn empty(n: usize, k: usize) -> Self {
        Complex::from_k_faces(n, k, std::iter::empty()).expect("empty complex")
    }

    /// The complete tripartite 2-complex on parts `{0..m}`, `{m..2m}`,
    /// `{2m..3m}`: the 2-faces are the triangles with one vertex in each part.
    pub fn tripartite(m: usize) -> Self {
        assert!(m >= 1);
        let faces = (0..m).flat_map(move |a| {
            (m..2 * m).flat_map(move |b| {
                (2 * m..3 * m).map(move |c| Face::from_sorted(vec![a, b, c]))
            })
        });
        Complex::from_k_faces(3 * m, 2, faces).expect("tripartite complex")
    }

    /// The complete bipartite 2-complex on parts `{0..m}`, `{m..2m}`: the
    /// 2-faces are the triangles meeting both parts.
    pub fn bipartite(m: usize) -> Self {
        assert!(m >= 1);
        let n = 2 * m;
        let faces = (0..n)
            .combinations(3)
            .map(Face::from_sorted)
            .filter(|f| {
                let in_a = f.vertices().iter().filter(|&&v| v < m).count();
                in_a >= 1 && in_a <= 2
            });
        Complex::from_k_faces(n, 2, faces).expect("bipartite complex")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The faces of dimension `dim`, sorted lexicographically (`-1 <= dim <= k`).
    pub fn faces(&self, dim: i32) -> &[Face] {
        assert!(
            dim >= -1 && dim <= self.k as i32,
            "dimension {dim} out of range for k = {}",
            self.k
        );
        &self.faces_by_dim[(dim + 1) as usize]
    }

    pub fn k_faces(&self) -> &[Face] {
        self.faces(self.k as i32)
    }

    pub fn face_count(&self, dim: i32) -> usize {
        self.faces(dim).len()
    }

    pub fn contains(&self, f: &Face) -> bool {
        if f.dim() > self.k as i32 {
            return false;
        }
        self.faces(f.dim()).binary_search(f).is_ok()
    }

    /// Index over the faces of dimension `dim` actually present.
    pub fn face_index(&self, dim: i32) -> FaceIndex {
        FaceIndex::new(dim, self.faces(dim).to_vec())
    }

    /// The complementary complex: its `k`-faces are the `(k+1)`-subsets absent
    /// from this one. An involution over fixed `(n, k)`.
    pub fn complement(&self) -> Complex {
        let present: BTreeSet<&Face> = self.k_faces().iter().collect();
        let faces = (0..self.n)
            .combinations(self.k + 1)
            .map(Face::from_sorted)
            .filter(|f| !present.contains(f));
        Complex::from_k_faces(self.n, self.k, faces).expect("complement")
    }

    /// Number of `(dim(f)+1)`-faces containing `f`.
    pub fn degree(&self, f: &Face) -> usize {
        let up = f.dim() + 1;
        if up > self.k as i32 {
            return 0;
        }
        self.faces(up).iter().filter(|h| f.is_subset_of(h)).count()
    }

    /// True when the `(k-1)`-skeleton is complete, i.e. every `k`-subset of
    /// the vertex set is a face.
    pub fn has_complete_skeleton(&self) -> bool {
        self.face_count(self.k as i32 - 1) == binomial(self.n, self.k)
    }

    /// A vertex set is independent when it contains no `k`-face.
    pub fn is_independent(&self, s: &[usize]) -> bool {
        let set: BTreeSet<usize> = s.iter().copied().collect();
        if set.len() <= self.k {
            return true;
        }
        !self
            .k_faces()
            .iter()
            .any(|f| f.vertices().iter().all(|v| set.contains(v)))
    }

    /// The independent sets of dimension `dim` (i.e. independent
    /// `(dim+1)`-subsets of the whole vertex set), sorted lexicographically.
    pub fn independent_faces(&self, dim: i32) -> Vec<Face> {
        assert!(dim >= -1);
        let size = (dim + 1) as usize;
        (0..self.n)
            .combinations(size)
            .filter(|s| self.is_independent(s))
            .map(Face::from_sorted)
            .collect()
    }

    /// The independence complex up to dimension `up_to`: entry `i` of the
    /// returned vector holds the independent sets of dimension `i - 1`
    /// (starting from the empty set). Its `(k-1)`-skeleton is complete.
    pub fn independence_complex(&self, up_to: i32) -> Vec<Vec<Face>> {
        (-1..=up_to).map(|d| self.independent_faces(d)).collect()
    }

    /// The link of a `(k-2)`-face `K`: the graph with vertices
    /// `{v : K ∪ {v} ∈ X_{k-1}}` and edges `{v, w}` with `K ∪ {v,w} ∈ X_k`.
    /// Vertices are relabeled to `0..m` in increasing original order.
    pub fn link(&self, kf: &Face) -> Result<Graph, ComplexError> {
        if kf.dim() != self.k as i32 - 2 || !self.contains(kf) {
            return Err(ComplexError::NotAFace(kf.vertices().to_vec()));
        }
        let verts: Vec<usize> = (0..self.n)
            .filter(|&v| !kf.contains(v) && self.contains(&kf.extended(v)))
            .collect();
        Ok(self.link_on(kf, &verts))
    }

    /// The link of `K` taken in the complex with its `(k-1)`-skeleton
    /// completed: vertices are all of `V \ K`, edges still come from the
    /// `k`-faces. Used by bounds that index over every `k`-subset, where
    /// completing the skeleton leaves the theta program unchanged.
    pub fn link_completed(&self, kf: &Face) -> Graph {
        assert_eq!(kf.dim(), self.k as i32 - 2);
        let verts: Vec<usize> = (0..self.n).filter(|&v| !kf.contains(v)).collect();
        self.link_on(kf, &verts)
    }

    fn link_on(&self, kf: &Face, verts: &[usize]) -> Graph {
        let mut edges = Vec::new();
        for (i, &v) in verts.iter().enumerate() {
            for (j, &w) in verts.iter().enumerate().skip(i + 1) {
                let f = kf.extended(v).extended(w);
                if self.contains(&f) {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(verts.len(), edges).expect("link edges are valid")
    }

    /// The graph on the vertex set whose edges are the 1-faces.
    pub fn one_skeleton(&self) -> Graph {
        let edges = self
            .faces(1)
            .iter()
            .map(|f| (f.vertices()[0], f.vertices()[1]))
            .collect();
        Graph::new(self.n, edges).expect("1-faces are valid edges")
    }

    /// Partition of the `k`-faces into connected components: two `k`-faces are
    /// adjacent when they share a `(k-1)`-face. Returns lists of positions
    /// into `k_faces()`.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let kf = self.k_faces();
        let mut parent: Vec<usize> = (0..kf.len()).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        // group k-faces by each facet they contain
        let mut by_facet: std::collections::BTreeMap<Face, Vec<usize>> = Default::default();
        for (i, f) in kf.iter().enumerate() {
            for facet in f.facets() {
                by_facet.entry(facet).or_default().push(i);
            }
        }
        for group in by_facet.values() {
            for w in group.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let mut comps: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for i in 0..kf.len() {
            let r = find(&mut parent, i);
            comps.entry(r).or_default().push(i);
        }
        comps.into_values().collect()
    }

    /// The subcomplex generated by the `k`-faces at the given positions.
    pub fn subcomplex(&self, positions: &[usize]) -> Complex {
        let faces = positions.iter().map(|&i| self.k_faces()[i].clone());
        Complex::from_k_faces(self.n, self.k, faces).expect("faces come from self")
    }

    /// Serializes to the JSON file format.
    pub fn to_json(&self) -> String {
        let file = ComplexFile {
            n: self.n,
            k: self.k,
            k_faces: self
                .k_faces()
                .iter()
                .map(|f| f.vertices().to_vec())
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("serializable")
    }

    /// Parses the JSON file format, canonicalizing faces.
    pub fn from_json(s: &str) -> Result<Self, ComplexError> {
        let file: ComplexFile =
            serde_json::from_str(s).map_err(|e| ComplexError::Format(e.to_string()))?;
        let faces: Result<Vec<Face>, ComplexError> =
            file.k_faces.into_iter().map(Face::new).collect();
        Complex::from_k_faces(file.n, file.k, faces?)
    }

    pub fn write_to<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        w.write_all(self.to_json().as_bytes())
    }

    pub fn read_from<R: Read>(mut r: R) -> Result<Self, ComplexError> {
        let mut s = String::new();
        r.read_to_string(&mut s)
            .map_err(|e| ComplexError::Format(e.to_string()))?;
        Complex::from_json(&s)
    }
}

/// Binomial coefficient as usize; saturates only far beyond desk scale.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    fn face(vs: &[usize]) -> Face {
        Face::new(vs.to_vec()).unwrap()
    }

    #[test]
    fn complete_complex_face_counts() {
        let k4 = Complex::complete(4, 1).unwrap();
        assert_eq!(k4.k_faces().len(), 6);
        let k52 = Complex::complete(5, 2).unwrap();
        assert_eq!(k52.k_faces().len(), 10);
        let k32 = Complex::complete(3, 2).unwrap();
        assert_eq!(k32.k_faces(), &[face(&[0, 1, 2])]);
        assert!(Complex::complete(2, 2).is_err());
    }

    #[test]
    fn from_k_faces_downward_closure() {
        let x = Complex::from_k_faces(3, 2, vec![face(&[0, 1, 2])]).unwrap();
        assert_eq!(x, Complex::complete(3, 2).unwrap());
        assert_eq!(x.face_count(1), 3);
        assert_eq!(x.face_count(0), 3);
        assert_eq!(x.faces(-1), &[Face::empty()]);
    }

    #[test]
    fn tripartite_counts() {
        let x = Complex::tripartite(2);
        assert_eq!(x.n(), 6);
        assert_eq!(x.face_count(2), 8);
        assert_eq!(x.face_count(1), 12);
        assert_eq!(x.face_count(0), 6);
    }

    #[test]
    fn empty_complex_has_no_lower_faces() {
        let x = Complex::from_k_faces(4, 2, vec![]).unwrap();
        assert_eq!(x.face_count(2), 0);
        assert_eq!(x.face_count(1), 0);
        assert_eq!(x.face_count(0), 0);
    }

    #[test]
    fn from_k_faces_rejects_bad_input() {
        assert!(matches!(
            Complex::from_k_faces(4, 2, vec![face(&[0, 1])]),
            Err(ComplexError::FaceCardinality { .. })
        ));
        assert!(matches!(
            Complex::from_k_faces(3, 2, vec![face(&[0, 1, 5])]),
            Err(ComplexError::VertexOutOfRange { vertex: 5, n: 3 })
        ));
    }

    #[test]
    fn complement_examples() {
        let kn = Complex::complete(5, 2).unwrap();
        assert_eq!(kn.complement().k_faces().len(), 0);
        let empty = Complex::empty(5, 2);
        assert_eq!(empty.complement(), kn);

        // complement of the bipartite complex: triangles inside one part
        let x = Complex::bipartite(3);
        let comp = x.complement();
        assert_eq!(comp.face_count(2), 2); // one K_3^2 inside each part
        for f in comp.k_faces() {
            let in_a = f.vertices().iter().filter(|&&v| v < 3).count();
            assert!(in_a == 0 || in_a == 3);
        }
    }

    #[test]
    fn complement_is_involution() {
        for x in [
            Complex::tripartite(2),
            Complex::bipartite(2),
            Complex::complete(5, 2).unwrap(),
            Complex::empty(4, 2),
        ] {
            assert_eq!(x.complement().complement(), x);
        }
    }

    #[test]
    fn incidence_signs() {
        let h = face(&[0, 1, 2]);
        assert_eq!(incidence(&h, &face(&[1, 2])), 1);
        assert_eq!(incidence(&h, &face(&[0, 2])), -1);
        assert_eq!(incidence(&h, &face(&[0, 1])), 1);
        assert_eq!(incidence(&h, &face(&[3, 4])), 0);
        // each vertex contains the empty face with sign +1
        assert_eq!(incidence(&face(&[7]), &Face::empty()), 1);
    }

    #[test]
    #[should_panic(expected = "incidence requires")]
    fn incidence_dimension_mismatch_panics() {
        incidence(&face(&[0, 1, 2]), &face(&[0]));
    }

    #[test]
    fn alternating_sign_rule() {
        // removing the vertex at position j of h gives sign (-1)^j
        for h in [face(&[0, 1, 2]), face(&[1, 3, 4, 6])] {
            let m = h.vertices().len();
            for j in 0..m {
                let mut vs = h.vertices().to_vec();
                vs.remove(j);
                let f = Face::from_sorted(vs);
                let expect = if j % 2 == 0 { 1 } else { -1 };
                assert_eq!(incidence(&h, &f), expect);
            }
        }
    }

    #[test]
    fn epsilon_examples() {
        let f = face(&[0, 1]);
        let g = face(&[1, 2]);
        assert_eq!(epsilon(&f, &g), -1);
        assert_eq!(epsilon(&f, &face(&[2, 3])), 0);
        assert_eq!(epsilon(&f, &f), 0); // callers branch on equality first
        // singleton faces always have epsilon +1
        assert_eq!(epsilon(&face(&[0]), &face(&[3])), 1);
    }

    #[test]
    fn epsilon_two_formulas_agree_exhaustively() {
        // ε(F,F') = -[F∪F' : F]·[F∪F' : F'] whenever the union is one vertex larger
        for n in 2..=7usize {
            for i in 0..=3i32 {
                let size = (i + 1) as usize;
                if size + 1 > n {
                    continue;
                }
                let faces: Vec<Face> = (0..n).combinations(size).map(Face::from_sorted).collect();
                for f in &faces {
                    for g in &faces {
                        if f == g || f.intersection_len(g) as i32 != i {
                            continue;
                        }
                        let u = f.union(g);
                        assert_eq!(u.vertices().len(), size + 1);
                        let via_union = -incidence(&u, f) * incidence(&u, g);
                        assert_eq!(epsilon(f, g), via_union, "f={f} g={g}");
                    }
                }
            }
        }
    }

    #[test]
    fn link_examples() {
        // complete complex: link of any (k-2)-face is complete on n-k+1 vertices
        let x = Complex::complete(6, 2).unwrap();
        let g = x.link(&face(&[3])).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges().len(), 10);

        // tripartite complex, link of a vertex in part A: bipartite between B and C
        let x = Complex::tripartite(2);
        let g = x.link(&face(&[0])).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges().len(), 4);
        let degs = g.degrees();
        assert!(degs.iter().all(|&d| d == 2));

        // empty complex has no (k-2)-faces
        let empty = Complex::empty(5, 2);
        assert!(empty.link(&face(&[0])).is_err());
    }

    #[test]
    fn independence_basics() {
        let x = Complex::tripartite(2);
        // A ∪ B is independent
        assert!(x.is_independent(&[0, 1, 2, 3]));
        // any 3 vertices of a complete complex span a face
        let kn = Complex::complete(5, 2).unwrap();
        assert!(!kn.is_independent(&[0, 2, 4]));
        assert!(kn.is_independent(&[0, 2]));
        // crossing edges of the tripartite complex have degree m
        for m in [2usize, 3] {
            let x = Complex::tripartite(m);
            let e = face(&[0, m]);
            assert_eq!(x.degree(&e), m);
        }
    }

    #[test]
    fn independence_complex_counts() {
        // complete complex: Ind_{k-1} has binom(n,k) sets, Ind_k is empty
        let kn = Complex::complete(5, 2).unwrap();
        assert_eq!(kn.independent_faces(1).len(), binomial(5, 2));
        assert_eq!(kn.independent_faces(2).len(), 0);

        // bipartite m=2: all 6 pairs independent, no independent triple
        let x = Complex::bipartite(2);
        assert_eq!(x.independent_faces(1).len(), 6);
        assert_eq!(x.independent_faces(2).len(), 0);

        // empty complex: everything independent
        let e = Complex::empty(5, 2);
        for d in -1..5 {
            assert_eq!(
                e.independent_faces(d).len(),
                binomial(5, (d + 1) as usize)
            );
        }
    }

    #[test]
    fn components_of_two_triangles_sharing_a_vertex() {
        let x = Complex::from_k_faces(5, 2, vec![face(&[0, 1, 2]), face(&[2, 3, 4])]).unwrap();
        assert_eq!(x.connected_components().len(), 2);
        let y = Complex::from_k_faces(4, 2, vec![face(&[0, 1, 2]), face(&[1, 2, 3])]).unwrap();
        assert_eq!(y.connected_components().len(), 1);
    }

    #[test]
    fn json_round_trip_and_canonicalization() {
        let x = Complex::tripartite(2);
        let y = Complex::from_json(&x.to_json()).unwrap();
        assert_eq!(x, y);

        let z = Complex::from_json(r#"{"n":3,"k":2,"k_faces":[[2,0,1],[0,1,2]]}"#).unwrap();
        assert_eq!(z, Complex::complete(3, 2).unwrap());
        assert!(Complex::from_json(r#"{"n":3,"k":2,"k_faces":[[0,1]]}"#).is_err());
    }

    #[test]
    fn skeleton_completeness() {
        assert!(Complex::complete(5, 2).unwrap().has_complete_skeleton());
        assert!(Complex::bipartite(3).has_complete_skeleton());
        assert!(!Complex::tripartite(2).has_complete_skeleton());
        assert!(!Complex::empty(4, 2).has_complete_skeleton());
    }
}
