//! Exact combinatorial invariants at desk scale: independence number, weak
//! chromatic number, orientation-respecting homomorphisms between pure
//! complexes, and the associated chromatic number.
//!
//! The searches are exponential-time branch and bound / backtracking and are
//! intended for `n ≲ 25` vertices (independence) and `|X_{k-1}| ≲ 15` faces
//! (homomorphism chromatic number).

use std::collections::BTreeMap;

use serde::Serialize;

use crate::chain;
use crate::complex::{incidence, Complex, Face};
use crate::error::SearchError;
use crate::graph::Graph;
use crate::linalg;

/// Exact independence number with a maximum independent set as witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaWitness {
    pub value: usize,
    pub set: Vec<usize>,
}

/// Maximum independent set by branch and bound over vertex subsets, pruning
/// any branch that completes a `k`-face or cannot beat the incumbent.
pub fn alpha(x: &Complex) -> AlphaWitness {
    let n = x.n();
    assert!(n <= 64, "independence search uses 64-bit vertex masks");
    let face_masks: Vec<u64> = x
        .k_faces()
        .iter()
        .map(|f| f.vertices().iter().fold(0u64, |m, &v| m | (1 << v)))
        .collect();
    // faces grouped by their largest vertex: adding vertex v can only
    // complete faces whose maximum is v
    let mut by_max: Vec<Vec<u64>> = vec![Vec::new(); n];
    for (f, &mask) in x.k_faces().iter().zip(&face_masks) {
        let top = *f.vertices().last().unwrap();
        by_max[top].push(mask);
    }
    let mut best = AlphaWitness {
        value: 0,
        set: Vec::new(),
    };
    fn descend(
        v: usize,
        n: usize,
        chosen: u64,
        count: usize,
        by_max: &[Vec<u64>],
        best: &mut AlphaWitness,
    ) {
        if count + (n - v) <= best.value {
            return;
        }
        if v == n {
            if count > best.value {
                best.value = count;
                best.set = (0..n).filter(|&i| chosen & (1 << i) != 0).collect();
            }
            return;
        }
        let with_v = chosen | (1 << v);
        let violates = by_max[v].iter().any(|&m| m & !with_v == 0);
        if !violates {
            descend(v + 1, n, with_v, count + 1, by_max, best);
        }
        descend(v + 1, n, chosen, count, by_max, best);
    }
    descend(0, n, 0, 0, &by_max, &mut best);
    best
}

/// Exact weak chromatic number: the least number of colors such that no
/// `k`-face is monochromatic, with a coloring as witness. Equivalently the
/// smallest partition of the vertices into independent sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColoringWitness {
    pub value: usize,
    pub colors: Vec<usize>,
}

pub fn chi_weak(x: &Complex) -> ColoringWitness {
    let n = x.n();
    if x.k_faces().is_empty() || n == 0 {
        return ColoringWitness {
            value: 1,
            colors: vec![0; n],
        };
    }
    // faces keyed by their largest vertex: a face is fully colored exactly
    // when its largest vertex receives a color
    let mut by_max: Vec<Vec<&Face>> = vec![Vec::new(); n];
    for f in x.k_faces() {
        by_max[*f.vertices().last().unwrap()].push(f);
    }
    for c in 1..=n {
        let mut colors = vec![usize::MAX; n];
        if try_color(0, c, &mut colors, &by_max) {
            return ColoringWitness { value: c, colors };
        }
    }
    unreachable!("n colors always suffice");
}

fn try_color(v: usize, c: usize, colors: &mut Vec<usize>, by_max: &[Vec<&Face>]) -> bool {
    if v == colors.len() {
        return true;
    }
    // symmetry breaking: vertex v may only open one fresh color
    let used = colors[..v].iter().copied().filter(|&x| x != usize::MAX).max();
    let limit = match used {
        Some(u) => (u + 1).min(c - 1),
        None => 0,
    };
    for color in 0..=limit {
        colors[v] = color;
        let mono = by_max[v].iter().any(|f| {
            f.vertices().iter().all(|&w| colors[w] == color)
        });
        if !mono && try_color(v + 1, c, colors, by_max) {
            return true;
        }
    }
    colors[v] = usize::MAX;
    false
}

/// Chromatic number of a graph (weak chromatic number of its 1-complex).
pub fn graph_chromatic(g: &Graph) -> ColoringWitness {
    chi_weak(&g.as_complex())
}

/// Bound from connectivity: the homomorphism chromatic number is at most the
/// largest 1-skeleton chromatic number over the connected components.
pub fn component_chromatic_bound(x: &Complex) -> usize {
    let comps = x.connected_components();
    comps
        .iter()
        .map(|c| graph_chromatic(&x.subcomplex(c).one_skeleton()).value)
        .max()
        .unwrap_or(1)
}

/// Linear system over the two-element field, kept in reduced form so rows can
/// be added incrementally and contradictions surface immediately.
#[derive(Clone, Debug)]
struct Gf2 {
    nvars: usize,
    words: usize,
    /// reduced rows: (bitmask, rhs); each has a unique pivot column
    rows: Vec<(Vec<u64>, bool)>,
}

impl Gf2 {
    fn new(nvars: usize) -> Self {
        Gf2 {
            nvars,
            words: nvars.div_ceil(64),
            rows: Vec::new(),
        }
    }

    fn pivot(mask: &[u64]) -> Option<usize> {
        for (w, &bits) in mask.iter().enumerate() {
            if bits != 0 {
                return Some(w * 64 + bits.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Adds `Σ vars = rhs`; returns false on contradiction.
    fn add_row(&mut self, vars: &[usize], mut rhs: bool) -> bool {
        let mut mask = vec![0u64; self.words];
        for &v in vars {
            debug_assert!(v < self.nvars);
            mask[v / 64] ^= 1 << (v % 64);
        }
        for (rm, rr) in &self.rows {
            let p = Self::pivot(rm).unwrap();
            if mask[p / 64] & (1 << (p % 64)) != 0 {
                for (a, b) in mask.iter_mut().zip(rm) {
                    *a ^= b;
                }
                rhs ^= rr;
            }
        }
        match Self::pivot(&mask) {
            None => !rhs,
            Some(p) => {
                // eliminate the new pivot from older rows (Gauss-Jordan)
                for (rm, rr) in self.rows.iter_mut() {
                    if rm[p / 64] & (1 << (p % 64)) != 0 {
                        for (a, b) in rm.iter_mut().zip(&mask) {
                            *a ^= b;
                        }
                        *rr ^= rhs;
                    }
                }
                self.rows.push((mask, rhs));
                true
            }
        }
    }

    /// One solution with all free variables set to 0.
    fn solution(&self) -> Vec<bool> {
        let mut sol = vec![false; self.nvars];
        for (rm, rr) in &self.rows {
            let p = Self::pivot(rm).unwrap();
            sol[p] = *rr;
        }
        sol
    }
}

/// Orientation signs witnessing an orientation-respecting homomorphism, in
/// face-index order of each complex (`+1`/`-1` relative to the orientations
/// induced by the vertex order).
#[derive(Clone, Debug, Serialize)]
pub struct HomWitness {
    pub source_facet_signs: Vec<i8>,
    pub source_face_signs: Vec<i8>,
    pub target_facet_signs: Vec<i8>,
    pub target_face_signs: Vec<i8>,
    /// Position in the target's `k`-face list assigned to each source `k`-face.
    pub target_assignment: Vec<usize>,
}

fn g_bit(sign: i64) -> bool {
    debug_assert!(sign == 1 || sign == -1);
    sign < 0
}

/// Checks whether a map on `(k-1)`-faces is a homomorphism from `x` to `xp`:
/// the facets of every `k`-face must map bijectively onto the facet set of
/// some target `k`-face, and there must exist face orientations of both
/// complexes under which all incidence numbers are preserved. The existential
/// over orientations is a linear system over the two-element field (flipping
/// one face negates all its incidence numbers), solved by elimination.
pub fn check_homomorphism(
    x: &Complex,
    xp: &Complex,
    f: &BTreeMap<Face, Face>,
) -> Result<Option<HomWitness>, SearchError> {
    if x.k() != xp.k() {
        return Err(SearchError::MalformedMap(format!(
            "source has dimension {}, target {}",
            x.k(),
            xp.k()
        )));
    }
    let k = x.k() as i32;
    let src_facets = x.face_index(k - 1);
    let tgt_facets = xp.face_index(k - 1);
    let mut map = vec![usize::MAX; src_facets.len()];
    for (from, to) in f {
        let i = src_facets
            .position(from)
            .ok_or_else(|| SearchError::MalformedMap(format!("{from} is not a source face")))?;
        let j = tgt_facets
            .position(to)
            .ok_or_else(|| SearchError::MalformedMap(format!("{to} is not a target face")))?;
        map[i] = j;
    }
    if let Some(miss) = map.iter().position(|&v| v == usize::MAX) {
        return Err(SearchError::MalformedMap(format!(
            "no image for face {}",
            src_facets.face(miss)
        )));
    }
    // derive the per-face target and check the bijection condition
    let src_faces = x.face_index(k);
    let tgt_faces = xp.face_index(k);
    let mut assignment = Vec::with_capacity(src_faces.len());
    for h in src_faces.faces() {
        let mut images: Vec<usize> = h
            .facets()
            .iter()
            .map(|fc| map[src_facets.position(fc).expect("facet of a face")])
            .collect();
        images.sort_unstable();
        let before = images.len();
        images.dedup();
        if images.len() != before {
            return Ok(None); // images not distinct
        }
        let union = images
            .iter()
            .map(|&i| tgt_facets.face(i).clone())
            .reduce(|a, b| a.union(&b))
            .expect("faces have facets");
        if union.vertices().len() != x.k() + 1 {
            return Ok(None);
        }
        match tgt_faces.position(&union) {
            Some(pos) => assignment.push(pos),
            None => return Ok(None),
        }
    }
    // orientation system
    let witness = solve_orientations(
        x,
        xp,
        &src_facets,
        &src_faces,
        &tgt_facets,
        &tgt_faces,
        &map,
        &assignment,
    );
    Ok(witness)
}

#[allow(clippy::too_many_arguments)]
fn solve_orientations(
    x: &Complex,
    xp: &Complex,
    src_facets: &crate::complex::FaceIndex,
    src_faces: &crate::complex::FaceIndex,
    tgt_facets: &crate::complex::FaceIndex,
    tgt_faces: &crate::complex::FaceIndex,
    map: &[usize],
    assignment: &[usize],
) -> Option<HomWitness> {
    let _ = (x, xp);
    let nsf = src_facets.len();
    let nsh = src_faces.len();
    let ntf = tgt_facets.len();
    let nth = tgt_faces.len();
    let var_src_facet = |i: usize| i;
    let var_src_face = |i: usize| nsf + i;
    let var_tgt_facet = |i: usize| nsf + nsh + i;
    let var_tgt_face = |i: usize| nsf + nsh + ntf + i;
    let mut sys = Gf2::new(nsf + nsh + ntf + nth);
    for (hi, h) in src_faces.faces().iter().enumerate() {
        let hp = tgt_faces.face(assignment[hi]);
        for fc in h.facets() {
            let fi = src_facets.position(&fc).expect("facet of a face");
            let fpi = map[fi];
            let lhs = incidence(h, &fc);
            let rhs = incidence(hp, tgt_facets.face(fpi));
            let ok = sys.add_row(
                &[
                    var_src_face(hi),
                    var_src_facet(fi),
                    var_tgt_face(assignment[hi]),
                    var_tgt_facet(fpi),
                ],
                g_bit(lhs) ^ g_bit(rhs),
            );
            if !ok {
                return None;
            }
        }
    }
    let sol = sys.solution();
    let signs = |range: std::ops::Range<usize>| -> Vec<i8> {
        range.map(|v| if sol[v] { -1 } else { 1 }).collect()
    };
    Some(HomWitness {
        source_facet_signs: signs(0..nsf),
        source_face_signs: signs(nsf..nsf + nsh),
        target_facet_signs: signs(nsf + nsh..nsf + nsh + ntf),
        target_face_signs: signs(nsf + nsh + ntf..nsf + nsh + ntf + nth),
        target_assignment: assignment.to_vec(),
    })
}

/// Lifts a proper coloring of the 1-skeleton to the face map
/// `F ↦ {colors of F}` into the complete complex on the color set.
pub fn lift_coloring(
    x: &Complex,
    colors: &[usize],
) -> Result<BTreeMap<Face, Face>, SearchError> {
    if colors.len() != x.n() {
        return Err(SearchError::MalformedMap(format!(
            "{} colors for {} vertices",
            colors.len(),
            x.n()
        )));
    }
    for e in x.faces(1) {
        let (u, v) = (e.vertices()[0], e.vertices()[1]);
        if colors[u] == colors[v] {
            return Err(SearchError::MalformedMap(format!(
                "coloring is not proper on edge {e}"
            )));
        }
    }
    let k = x.k() as i32;
    let mut out = BTreeMap::new();
    for fc in x.faces(k - 1) {
        let image: Vec<usize> = fc.vertices().iter().map(|&v| colors[v]).collect();
        let face = Face::new(image)
            .map_err(|_| SearchError::MalformedMap("coloring repeats on a face".into()))?;
        out.insert(fc.clone(), face);
    }
    Ok(out)
}

/// Result of the homomorphism chromatic number search.
#[derive(Clone, Debug, Serialize)]
pub struct ChiKResult {
    pub value: usize,
    /// The face map realizing the minimum, as label pairs.
    pub face_map: Vec<(String, String)>,
    pub witness: HomWitness,
}

/// The smallest `ℓ` admitting an orientation-respecting homomorphism into the
/// complete `k`-complex on `ℓ` vertices, by backtracking over face images
/// with the orientation system as incremental constraint propagation.
///
/// `budget` caps the number of search nodes; exhaustion is reported
/// distinctly from nonexistence. The search always terminates at the
/// 1-skeleton chromatic number, where the lifted coloring is a homomorphism.
pub fn chi_k(x: &Complex, budget: u64) -> Result<ChiKResult, SearchError> {
    if x.k_faces().is_empty() {
        return Ok(ChiKResult {
            value: 1,
            face_map: Vec::new(),
            witness: HomWitness {
                source_facet_signs: Vec::new(),
                source_face_signs: Vec::new(),
                target_facet_signs: Vec::new(),
                target_face_signs: Vec::new(),
                target_assignment: Vec::new(),
            },
        });
    }
    let upper = graph_chromatic(&x.one_skeleton()).value.max(x.k() + 1);
    let mut nodes = 0u64;
    for ell in x.k() + 1..=upper {
        if let Some(result) = search_hom_to_complete(x, ell, budget, &mut nodes)? {
            return Ok(result);
        }
    }
    unreachable!("the lifted 1-skeleton coloring is always a homomorphism");
}

fn search_hom_to_complete(
    x: &Complex,
    ell: usize,
    budget: u64,
    nodes: &mut u64,
) -> Result<Option<ChiKResult>, SearchError> {
    let k = x.k();
    let target = Complex::complete(ell, k).expect("ell >= k+1");
    let src_facets = x.face_index(k as i32 - 1);
    let src_faces = x.face_index(k as i32);
    let tgt_facets = target.face_index(k as i32 - 1);
    let tgt_faces = target.face_index(k as i32);

    // per source k-face: its facet positions
    let face_facets: Vec<Vec<usize>> = src_faces
        .faces()
        .iter()
        .map(|h| {
            h.facets()
                .iter()
                .map(|fc| src_facets.position(fc).expect("facet of face"))
                .collect()
        })
        .collect();
    // facets containing each source facet position
    let mut faces_of_facet: Vec<Vec<usize>> = vec![Vec::new(); src_facets.len()];
    for (hi, ff) in face_facets.iter().enumerate() {
        for &fi in ff {
            faces_of_facet[fi].push(hi);
        }
    }
    // assignment order: descending degree, then lexicographic
    let mut order: Vec<usize> = (0..src_facets.len()).collect();
    order.sort_by_key(|&i| (usize::MAX - faces_of_facet[i].len(), i));

    struct State<'a> {
        map: Vec<usize>,
        assignment: Vec<usize>,
        sys_stack: Vec<Gf2>,
        order: &'a [usize],
        face_facets: &'a [Vec<usize>],
        faces_of_facet: &'a [Vec<usize>],
        src_faces: &'a crate::complex::FaceIndex,
        src_facets: &'a crate::complex::FaceIndex,
        tgt_facets: &'a crate::complex::FaceIndex,
        tgt_faces: &'a crate::complex::FaceIndex,
        budget: u64,
    }

    let nsf = src_facets.len();
    let nsh = src_faces.len();
    let ntf = tgt_facets.len();
    let nth = tgt_faces.len();
    let mut st = State {
        map: vec![usize::MAX; nsf],
        assignment: vec![usize::MAX; nsh],
        sys_stack: vec![Gf2::new(nsf + nsh + ntf + nth)],
        order: &order,
        face_facets: &face_facets,
        faces_of_facet: &faces_of_facet,
        src_faces: &src_faces,
        src_facets: &src_facets,
        tgt_facets: &tgt_facets,
        tgt_faces: &tgt_faces,
        budget,
    };

    fn descend(depth: usize, st: &mut State, nodes: &mut u64) -> Result<bool, SearchError> {
        if depth == st.order.len() {
            return Ok(true);
        }
        let fi = st.order[depth];
        for cand in 0..st.tgt_facets.len() {
            *nodes += 1;
            if *nodes > st.budget {
                return Err(SearchError::BudgetExhausted { budget: st.budget });
            }
            st.map[fi] = cand;
            if propagate(fi, depth, st) && descend(depth + 1, st, nodes)? {
                return Ok(true);
            }
            // rollback the orientation snapshots; face targets are rewritten
            // whenever a face completes again
            st.sys_stack.truncate(depth + 1);
        }
        st.map[fi] = usize::MAX;
        Ok(false)
    }

    /// Checks condition (1) incrementally for every face containing the newly
    /// assigned facet and, when a face becomes fully assigned, extends the
    /// orientation system. Pushes one system snapshot per node.
    fn propagate(fi: usize, depth: usize, st: &mut State) -> bool {
        let mut sys = st.sys_stack[depth].clone();
        let nsf = st.src_facets.len();
        let nsh = st.src_faces.len();
        let ntf = st.tgt_facets.len();
        for &hi in st.faces_of_facet[fi].iter() {
            let assigned: Vec<(usize, usize)> = st.face_facets[hi]
                .iter()
                .filter(|&&o| st.map[o] != usize::MAX)
                .map(|&o| (o, st.map[o]))
                .collect();
            // distinctness of images within the face
            for a in 0..assigned.len() {
                for b in a + 1..assigned.len() {
                    if assigned[a].1 == assigned[b].1 {
                        return false;
                    }
                }
            }
            let union = assigned
                .iter()
                .map(|&(_, img)| st.tgt_facets.face(img).clone())
                .reduce(|a, b| a.union(&b))
                .expect("at least the new facet");
            if union.vertices().len() > st.src_faces.face(hi).vertices().len() {
                return false;
            }
            if assigned.len() == st.face_facets[hi].len() {
                // face complete: derive the target and add sign equations
                let pos = match st.tgt_faces.position(&union) {
                    Some(p) => p,
                    None => return false,
                };
                st.assignment[hi] = pos;
                let h = st.src_faces.face(hi);
                let hp = st.tgt_faces.face(pos);
                for fc in h.facets() {
                    let fidx = st.src_facets.position(&fc).expect("facet");
                    let img = st.map[fidx];
                    let lhs = incidence(h, &fc);
                    let rhs = incidence(hp, st.tgt_facets.face(img));
                    let ok = sys.add_row(
                        &[fidx, nsf + hi, nsf + nsh + ntf + pos, nsf + nsh + img],
                        g_bit(lhs) ^ g_bit(rhs),
                    );
                    if !ok {
                        return false;
                    }
                }
            }
        }
        st.sys_stack.push(sys);
        true
    }

    match descend(0, &mut st, nodes)? {
        false => Ok(None),
        true => {
            let sys = st.sys_stack.last().unwrap();
            let sol = sys.solution();
            let signs = |offset: usize, len: usize| -> Vec<i8> {
                (offset..offset + len)
                    .map(|v| if sol[v] { -1 } else { 1 })
                    .collect()
            };
            let face_map = (0..nsf)
                .map(|i| {
                    (
                        src_facets.face(i).label(),
                        tgt_facets.face(st.map[i]).label(),
                    )
                })
                .collect();
            Ok(Some(ChiKResult {
                value: ell,
                face_map,
                witness: HomWitness {
                    source_facet_signs: signs(0, nsf),
                    source_face_signs: signs(nsf, nsh),
                    target_facet_signs: signs(nsf + nsh, ntf),
                    target_face_signs: signs(nsf + nsh + ntf, nth),
                    target_assignment: st.assignment.clone(),
                },
            }))
        }
    }
}

/// For a `d`-regular complex (all `(k-1)`-face degrees equal), checks the
/// spectral consequence of `χ_k(X) = k+1`: the largest up-Laplacian eigenvalue
/// must be `(k+1)d` (within `1e-6`). Vacuously true when `χ_k(X) ≠ k+1`.
pub fn regular_eigenvalue_check(x: &Complex, budget: u64) -> Result<bool, SearchError> {
    let degs: Vec<usize> = x
        .faces(x.k() as i32 - 1)
        .iter()
        .map(|f| x.degree(f))
        .collect();
    let d = match degs.first() {
        None => return Ok(true),
        Some(&d0) => {
            if let Some(&other) = degs.iter().find(|&&x| x != d0) {
                return Err(SearchError::NotRegular(d0, other));
            }
            d0
        }
    };
    let chik = chi_k(x, budget)?.value;
    if chik != x.k() + 1 {
        return Ok(true);
    }
    let lam = linalg::lambda_max(
        &chain::up_laplacian(x, x.k() as i32 - 1).expect("valid dimension"),
    );
    Ok((lam - ((x.k() + 1) * d) as f64).abs() <= 1e-6)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn face(vs: &[usize]) -> Face {
        Face::new(vs.to_vec()).unwrap()
    }

    #[test]
    fn alpha_examples() {
        for m in [2usize, 3] {
            assert_eq!(alpha(&Complex::tripartite(m)).value, 2 * m);
            assert_eq!(alpha(&Complex::bipartite(m)).value, m);
            assert_eq!(alpha(&Complex::bipartite(m).complement()).value, 4.min(2 * m));
        }
        assert_eq!(alpha(&Complex::complete(6, 2).unwrap()).value, 2);
        assert_eq!(alpha(&Complex::complete(6, 3).unwrap()).value, 3);
        // the witness really is independent and has the claimed size
        let x = Complex::tripartite(2);
        let w = alpha(&x);
        assert_eq!(w.set.len(), w.value);
        assert!(x.is_independent(&w.set));
    }

    #[test]
    fn alpha_matches_naive_enumeration() {
        // brute force over all subsets for a few deterministic complexes
        fn naive(x: &Complex) -> usize {
            let n = x.n();
            (0..1u32 << n)
                .filter(|&mask| {
                    let s: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
                    x.is_independent(&s)
                })
                .map(|mask| mask.count_ones() as usize)
                .max()
                .unwrap()
        }
        for x in [
            Complex::tripartite(2),
            Complex::bipartite(3),
            Complex::complete(7, 2).unwrap(),
            Complex::empty(6, 2),
            crate::graph::Graph::cycle(7).as_complex(),
        ] {
            assert_eq!(alpha(&x).value, naive(&x), "complex mismatch");
        }
    }

    #[test]
    fn chi_weak_examples() {
        // complete complex: ceil(n/k)
        for (n, k) in [(5usize, 2usize), (6, 2), (7, 3), (6, 3)] {
            let x = Complex::complete(n, k).unwrap();
            assert_eq!(chi_weak(&x).value, n.div_ceil(k), "n={n} k={k}");
        }
        for m in [2usize, 3] {
            assert_eq!(chi_weak(&Complex::bipartite(m)).value, 2);
        }
        assert_eq!(chi_weak(&Complex::empty(5, 2)).value, 1);
        // witness validity: no monochromatic face
        let x = Complex::tripartite(3);
        let w = chi_weak(&x);
        for f in x.k_faces() {
            let cs: Vec<usize> = f.vertices().iter().map(|&v| w.colors[v]).collect();
            assert!(!cs.windows(2).all(|p| p[0] == p[1]));
        }
    }

    #[test]
    fn graph_chromatic_examples() {
        assert_eq!(graph_chromatic(&Graph::cycle(5)).value, 3);
        assert_eq!(graph_chromatic(&Graph::cycle(6)).value, 2);
        assert_eq!(graph_chromatic(&Graph::complete(4)).value, 4);
    }

    #[test]
    fn identity_homomorphism() {
        let x = Complex::tripartite(2);
        let id: BTreeMap<Face, Face> = x
            .faces(1)
            .iter()
            .map(|f| (f.clone(), f.clone()))
            .collect();
        let w = check_homomorphism(&x, &x, &id).unwrap().unwrap();
        // identity admits the all-positive orientation
        assert!(w.source_facet_signs.iter().all(|&s| s == 1));
        assert!(w.source_face_signs.iter().all(|&s| s == 1));
    }

    #[test]
    fn lifted_coloring_is_homomorphism() {
        for x in [Complex::tripartite(2), Complex::complete(5, 2).unwrap()] {
            let coloring = graph_chromatic(&x.one_skeleton());
            let f = lift_coloring(&x, &coloring.colors).unwrap();
            let target = Complex::complete(coloring.value, x.k()).unwrap();
            assert!(check_homomorphism(&x, &target, &f).unwrap().is_some());
        }
    }

    #[test]
    fn condition_one_without_orientations() {
        // K_4^2 admits a facet map to K_3^2 through a proper 3-edge-coloring
        // (each triangle sees all three classes), but no homomorphism exists:
        // one would force theta of the complement of K_4^2 (the empty complex,
        // value 4) below 3.
        let x = Complex::complete(4, 2).unwrap();
        let target = Complex::complete(3, 2).unwrap();
        // perfect matchings of K_4: {01,23} -> image 0-1, {02,13} -> 0-2,
        // {03,12} -> 1-2
        let mut f = BTreeMap::new();
        f.insert(face(&[0, 1]), face(&[0, 1]));
        f.insert(face(&[2, 3]), face(&[0, 1]));
        f.insert(face(&[0, 2]), face(&[0, 2]));
        f.insert(face(&[1, 3]), face(&[0, 2]));
        f.insert(face(&[0, 3]), face(&[1, 2]));
        f.insert(face(&[1, 2]), face(&[1, 2]));
        // condition (1) holds for every face, so only orientations can fail
        assert!(check_homomorphism(&x, &target, &f).unwrap().is_none());
    }

    #[test]
    fn malformed_maps_are_rejected() {
        let x = Complex::tripartite(2);
        let target = Complex::complete(3, 2).unwrap();
        let empty = BTreeMap::new();
        assert!(matches!(
            check_homomorphism(&x, &target, &empty),
            Err(SearchError::MalformedMap(_))
        ));
    }

    #[test]
    fn chi_k_examples() {
        let budget = 50_000_000;
        // single triangle: it is the complete complex on 3 vertices
        assert_eq!(chi_k(&Complex::complete(3, 2).unwrap(), budget).unwrap().value, 3);
        // complete complexes: identity is optimal
        assert_eq!(chi_k(&Complex::complete(4, 2).unwrap(), budget).unwrap().value, 4);
        // tripartite complexes have chi_k = 3
        assert_eq!(chi_k(&Complex::tripartite(2), budget).unwrap().value, 3);
        // bipartite complement is two disjoint complete complexes on m vertices
        let x = Complex::bipartite(3).complement();
        assert_eq!(chi_k(&x, budget).unwrap().value, 3);
    }

    #[test]
    fn chi_k_within_skeleton_bound() {
        for x in [
            Complex::tripartite(2),
            Complex::bipartite(2),
            Complex::complete(5, 2).unwrap(),
        ] {
            let c = chi_k(&x, 50_000_000).unwrap().value;
            assert!(c <= graph_chromatic(&x.one_skeleton()).value);
        }
    }

    #[test]
    fn component_bound_examples() {
        // two triangles sharing one vertex: two components, bound 3
        let x = Complex::from_k_faces(5, 2, vec![face(&[0, 1, 2]), face(&[2, 3, 4])]).unwrap();
        assert_eq!(x.connected_components().len(), 2);
        assert_eq!(component_chromatic_bound(&x), 3);
        let c = chi_k(&x, 50_000_000).unwrap().value;
        assert!(c <= 3);
    }

    #[test]
    fn regular_eigenvalue_examples() {
        let budget = 50_000_000;
        // K_3^2: chi_2 = 3 = k+1, d = 1, largest eigenvalue 3 = (k+1)d
        assert!(regular_eigenvalue_check(&Complex::complete(3, 2).unwrap(), budget).unwrap());
        // K_4^2: chi_2 = 4 != k+1, vacuously true
        assert!(regular_eigenvalue_check(&Complex::complete(4, 2).unwrap(), budget).unwrap());
        // irregular input is rejected
        let x = Complex::from_k_faces(4, 2, vec![face(&[0, 1, 2]), face(&[1, 2, 3])]).unwrap();
        assert!(matches!(
            regular_eigenvalue_check(&x, budget),
            Err(SearchError::NotRegular(_, _))
        ));
    }

    #[test]
    fn gf2_elimination() {
        let mut sys = Gf2::new(3);
        assert!(sys.add_row(&[0, 1], true));
        assert!(sys.add_row(&[1, 2], false));
        assert!(sys.add_row(&[0, 2], true)); // consistent: sum of the others
        assert!(!sys.add_row(&[0, 2], false)); // contradiction
    }
}
