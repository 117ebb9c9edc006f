//! Simple graphs and the combinatorics feeding building-set invariants:
//! graphical building sets, edge inflations, Tutte evaluations,
//! orientation counts, nerves of antichains with intersection labels,
//! flag/chordal/fully-acyclic predicates and intersection posets.

use std::collections::BTreeMap;

use crate::building::{BuildingSet, SetFamily};
use crate::error::{cadd, cmul, guard, Error, Result};
use crate::subset::{card, elements, full_mask, merge_components, submasks, Mask};

/// Undirected graph without loops or multiple edges, on vertices
/// `0..v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    v: usize,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(v: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut norm = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == b {
                return Err(Error::InvalidInput(format!("loop at vertex {a}")));
            }
            if a >= v || b >= v {
                return Err(Error::InvalidInput(format!(
                    "edge ({a},{b}) outside vertex range 0..{v}"
                )));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        let before = norm.len();
        norm.dedup();
        if norm.len() != before {
            return Err(Error::InvalidInput("duplicate edge".into()));
        }
        Ok(SimpleGraph { v, edges: norm })
    }

    pub fn discrete(v: usize) -> Self {
        SimpleGraph { v, edges: Vec::new() }
    }

    pub fn complete(v: usize) -> Self {
        let mut edges = Vec::new();
        for a in 0..v {
            for b in a + 1..v {
                edges.push((a, b));
            }
        }
        SimpleGraph { v, edges }
    }

    pub fn path(v: usize) -> Self {
        SimpleGraph { v, edges: (1..v).map(|i| (i - 1, i)).collect() }
    }

    pub fn cycle(v: usize) -> Self {
        assert!(v >= 3, "cycles need at least 3 vertices");
        let mut g = SimpleGraph::path(v);
        g.edges.push((0, v - 1));
        g.edges.sort_unstable();
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.v
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    /// Neighbor mask per vertex.
    pub fn adjacency(&self) -> Vec<Mask> {
        let mut adj = vec![0u64; self.v];
        for &(a, b) in &self.edges {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        adj
    }

    /// Vertex masks of the connected components.
    pub fn component_masks(&self) -> Vec<Mask> {
        merge_components(self.v, self.edges.iter().map(|&(a, b)| (1 << a) | (1 << b)))
    }

    pub fn component_count(&self) -> usize {
        self.component_masks().len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn is_forest(&self) -> bool {
        self.edges.len() + self.component_count() == self.v
    }

    /// Whether the subgraph induced on `keep` is connected (true for
    /// singletons, false for the empty set).
    pub fn induced_connected(&self, keep: Mask, adj: &[Mask]) -> bool {
        if keep == 0 {
            return false;
        }
        let start = keep & keep.wrapping_neg();
        let mut seen = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0;
            for i in elements(frontier) {
                next |= adj[i] & keep;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == keep
    }

    pub fn induced(&self, keep: Mask) -> SimpleGraph {
        let verts: Vec<usize> = elements(keep).collect();
        let pos: BTreeMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(a, b)| keep >> a & 1 == 1 && keep >> b & 1 == 1)
            .map(|&(a, b)| (pos[&a], pos[&b]))
            .collect();
        SimpleGraph { v: verts.len(), edges }
    }
}

/// All vertex subsets inducing connected subgraphs, singletons included.
///
/// The family satisfies the axioms by construction (overlapping connected
/// subgraphs have connected unions), so validation is skipped.
pub fn graphical(g: &SimpleGraph) -> Result<BuildingSet> {
    guard("graphical building set vertices", 16, g.vertex_count())?;
    let adj = g.adjacency();
    let mut members = Vec::new();
    for mask in 1..=full_mask(g.vertex_count()) {
        if g.induced_connected(mask, &adj) {
            members.push(mask);
        }
    }
    Ok(BuildingSet::from_members_unvalidated(g.vertex_count(), members))
}

/// The generator family of the edge inflation: each edge becomes a set of
/// its two endpoints plus `n - 2` fresh elements private to the edge.
///
/// Fresh elements are indexed after the vertices, grouped by edge in edge
/// order. Requires `n >= 2`; at `n = 2` the family is the edge set itself.
pub fn beta_family(g: &SimpleGraph, n: usize) -> Result<SetFamily> {
    if n < 2 {
        return Err(Error::InvalidInput("edge inflation needs n >= 2".into()));
    }
    let extra = n - 2;
    let ground = g.vertex_count() + extra * g.edge_count();
    guard("ground-set size", crate::subset::MAX_GROUND, ground)?;
    let mut sets = Vec::with_capacity(g.edge_count());
    for (j, &(a, b)) in g.edges().iter().enumerate() {
        let mut s: Mask = (1 << a) | (1 << b);
        for i in 0..extra {
            s |= 1 << (g.vertex_count() + j * extra + i);
        }
        sets.push(s);
    }
    SetFamily::new(ground, sets)
}

/// The building set generated by the edge inflation; at `n = 2` this is
/// the graphical building set.
pub fn beta_n(g: &SimpleGraph, n: usize) -> Result<BuildingSet> {
    let family = beta_family(g, n)?;
    guard("edge inflation rank", 20, family.ground_size())?;
    BuildingSet::closure(&family)
}

/// Bivariate integer polynomial, sparse in (x-degree, y-degree).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TuttePolynomial {
    coeffs: BTreeMap<(usize, usize), i64>,
}

impl TuttePolynomial {
    pub fn coefficient(&self, x_deg: usize, y_deg: usize) -> i64 {
        self.coeffs.get(&(x_deg, y_deg)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), i64)> + '_ {
        self.coeffs.iter().map(|(&k, &c)| (k, c))
    }

    pub fn eval(&self, x: i64, y: i64) -> Result<i64> {
        let mut acc = 0i64;
        for (&(i, j), &c) in &self.coeffs {
            let mut term = c;
            for _ in 0..i {
                term = cmul(term, x, "tutte evaluation")?;
            }
            for _ in 0..j {
                term = cmul(term, y, "tutte evaluation")?;
            }
            acc = cadd(acc, term, "tutte evaluation")?;
        }
        Ok(acc)
    }

    fn add_term(&mut self, key: (usize, usize), coeff: i64) -> Result<()> {
        let updated = cadd(self.coefficient(key.0, key.1), coeff, "tutte coefficient")?;
        if updated == 0 {
            self.coeffs.remove(&key);
        } else {
            self.coeffs.insert(key, updated);
        }
        Ok(())
    }
}

/// Exact coefficients of the edge-subset expansion
/// sum over S of (x-1)^(c(S)-c(E)) (y-1)^(c(S)+|S|-|V|).
pub fn tutte(g: &SimpleGraph) -> Result<TuttePolynomial> {
    guard("tutte edge count", 20, g.edge_count())?;
    let e = g.edge_count();
    let edge_masks: Vec<Mask> = g.edges().iter().map(|&(a, b)| (1 << a) | (1 << b)).collect();
    let c_full = g.component_count();
    let mut out = TuttePolynomial::default();
    for s in submasks(full_mask(e)) {
        let c_s = merge_components(g.vertex_count(), elements(s).map(|i| edge_masks[i])).len();
        let p = c_s - c_full;
        let q = c_s + card(s) - g.vertex_count();
        // expand (x-1)^p (y-1)^q
        for i in 0..=p {
            for j in 0..=q {
                let sign = if (p - i + q - j).is_multiple_of(2) { 1 } else { -1 };
                let coeff = cmul(
                    cmul(
                        crate::symfunc::binomial(p as i64, i)?,
                        crate::symfunc::binomial(q as i64, j)?,
                        "tutte expansion",
                    )?,
                    sign,
                    "tutte expansion",
                )?;
                out.add_term((i, j), coeff)?;
            }
        }
    }
    Ok(out)
}

/// Brute-force counts of (acyclic, totally cyclic) orientations.
pub fn orientation_counts(g: &SimpleGraph) -> Result<(i64, i64)> {
    guard("orientation edge count", 16, g.edge_count())?;
    let e = g.edge_count();
    let mut acyclic = 0i64;
    let mut totally_cyclic = 0i64;
    for orient in 0..(1u64 << e) {
        // reach[u]: vertices reachable from u along at least one arc
        let mut reach = vec![0u64; g.vertex_count()];
        for (j, &(a, b)) in g.edges().iter().enumerate() {
            let (from, to) = if orient >> j & 1 == 0 { (a, b) } else { (b, a) };
            reach[from] |= 1 << to;
        }
        for k in 0..g.vertex_count() {
            for u in 0..g.vertex_count() {
                if reach[u] >> k & 1 == 1 {
                    reach[u] |= reach[k];
                }
            }
        }
        if (0..g.vertex_count()).all(|u| reach[u] >> u & 1 == 0) {
            acyclic += 1;
        }
        let cyclic = g.edges().iter().enumerate().all(|(j, &(a, b))| {
            let (from, to) = if orient >> j & 1 == 0 { (a, b) } else { (b, a) };
            reach[to] >> from & 1 == 1
        });
        if cyclic {
            totally_cyclic += 1;
        }
    }
    Ok((acyclic, totally_cyclic))
}

/// A finite abstract simplicial complex with optional positive integer
/// labels on faces.
///
/// Faces are stored as nonempty vertex masks; the family is closed under
/// nonempty subsets and contains every singleton. Labels, when present,
/// are weakly decreasing along inclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: usize,
    faces: Vec<Mask>,
    labels: Option<BTreeMap<Mask, usize>>,
}

impl SimplicialComplex {
    pub fn new(vertices: usize, mut faces: Vec<Mask>) -> Result<Self> {
        guard("complex vertices", 20, vertices)?;
        faces.sort_unstable();
        faces.dedup();
        let k = SimplicialComplex { vertices, faces, labels: None };
        for i in 0..vertices {
            if !k.has_face(1 << i) {
                return Err(Error::InvalidInput(format!("missing vertex {{{i}}}")));
            }
        }
        for &f in &k.faces {
            if f == 0 || f & !full_mask(vertices) != 0 {
                return Err(Error::InvalidInput("face outside the vertex set".into()));
            }
            for i in elements(f) {
                if card(f) > 1 && !k.has_face(f & !(1 << i)) {
                    return Err(Error::InvalidInput(
                        "face family is not downward closed".into(),
                    ));
                }
            }
        }
        Ok(k)
    }

    pub fn with_labels(mut self, labels: BTreeMap<Mask, usize>) -> Result<Self> {
        for &f in &self.faces {
            let l = *labels
                .get(&f)
                .ok_or_else(|| Error::InvalidInput("label missing for a face".into()))?;
            for i in elements(f) {
                if card(f) > 1 && labels[&(f & !(1 << i))] < l {
                    return Err(Error::InvalidInput(
                        "labels must weakly decrease along inclusion".into(),
                    ));
                }
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    /// Nonempty faces, ascending as masks.
    pub fn faces(&self) -> &[Mask] {
        &self.faces
    }

    pub fn has_face(&self, f: Mask) -> bool {
        self.faces.binary_search(&f).is_ok()
    }

    pub fn label(&self, f: Mask) -> Option<usize> {
        self.labels.as_ref().and_then(|l| l.get(&f)).copied()
    }

    pub fn labels(&self) -> Option<&BTreeMap<Mask, usize>> {
        self.labels.as_ref()
    }

    /// Largest face size minus one.
    pub fn dimension(&self) -> Option<usize> {
        self.faces.iter().map(|&f| card(f) - 1).max()
    }

    /// Graph on the same vertices whose edges are the 2-element faces.
    pub fn skeleton_graph(&self) -> SimpleGraph {
        let edges: Vec<(usize, usize)> = self
            .faces
            .iter()
            .filter(|&&f| card(f) == 2)
            .map(|&f| {
                let a = f.trailing_zeros() as usize;
                let b = (63 - f.leading_zeros()) as usize;
                (a, b)
            })
            .collect();
        SimpleGraph::new(self.vertices, &edges).expect("faces are valid edges")
    }

    /// All nonempty cliques of a graph as a complex.
    pub fn clique_complex(g: &SimpleGraph) -> Result<Self> {
        guard("complex vertices", 20, g.vertex_count())?;
        let adj = g.adjacency();
        let size = 1usize << g.vertex_count();
        let mut is_clique = vec![false; size];
        let mut faces = Vec::new();
        for mask in 1..size as u64 {
            let top = (63 - mask.leading_zeros()) as usize;
            let rest = mask & !(1 << top);
            let ok = if rest == 0 {
                true
            } else {
                is_clique[rest as usize] && adj[top] & rest == rest
            };
            is_clique[mask as usize] = ok;
            if ok {
                faces.push(mask);
            }
        }
        Ok(SimplicialComplex { vertices: g.vertex_count(), faces, labels: None })
    }

    /// The subcomplex of faces inside `keep`, re-packed onto dense
    /// indices; labels restrict along.
    pub fn full_subcomplex(&self, keep: Mask) -> SimplicialComplex {
        let faces: Vec<Mask> = self
            .faces
            .iter()
            .filter(|&&f| f & !keep == 0)
            .map(|&f| crate::subset::pack_into(f, keep))
            .collect();
        let labels = self.labels.as_ref().map(|l| {
            l.iter()
                .filter(|(&f, _)| f & !keep == 0)
                .map(|(&f, &v)| (crate::subset::pack_into(f, keep), v))
                .collect()
        });
        SimplicialComplex { vertices: card(keep), faces, labels }
    }
}

/// The nerve of an antichain: faces are the subfamilies with nonempty
/// intersection, labelled by the intersection size.
pub fn nerve(l: &SetFamily) -> Result<SimplicialComplex> {
    guard("nerve family size", 20, l.len())?;
    if !l.is_antichain() {
        return Err(Error::InvalidInput("nerve requires an antichain".into()));
    }
    if l.sets().contains(&0) {
        return Err(Error::InvalidInput("nerve requires nonempty sets".into()));
    }
    let m = l.len();
    let mut inter: Vec<Mask> = vec![0; 1 << m];
    let mut faces = Vec::new();
    let mut labels = BTreeMap::new();
    for mask in 1..(1u64 << m) {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let value = if rest == 0 {
            l.sets()[low]
        } else if inter[rest as usize] == 0 {
            0
        } else {
            inter[rest as usize] & l.sets()[low]
        };
        inter[mask as usize] = value;
        if value != 0 {
            faces.push(mask);
            labels.insert(mask, card(value));
        }
    }
    SimplicialComplex::new(m, faces)?.with_labels(labels)
}

/// Whether every face of the nerve has an odd intersection size.
pub fn is_odd_collection(l: &SetFamily) -> Result<bool> {
    let k = nerve(l)?;
    Ok(k.faces().iter().all(|&f| k.label(f).unwrap() % 2 == 1))
}

/// Whether every minimal non-face has exactly two vertices, i.e. the
/// complex equals the clique complex of its own 1-skeleton.
pub fn is_flag(k: &SimplicialComplex) -> bool {
    let cliques = SimplicialComplex::clique_complex(&k.skeleton_graph())
        .expect("vertex count already guarded");
    cliques.faces().len() == k.faces().len()
}

/// Chordality via maximum cardinality search: the reverse visit order must
/// be a perfect elimination ordering.
pub fn is_chordal(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    if n <= 3 {
        return true;
    }
    let adj = g.adjacency();
    let mut weight = vec![0usize; n];
    let mut visited: Mask = 0;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let u = (0..n)
            .filter(|&u| visited >> u & 1 == 0)
            .max_by_key(|&u| weight[u])
            .unwrap();
        visited |= 1 << u;
        order.push(u);
        for w in elements(adj[u] & !visited) {
            weight[w] += 1;
        }
    }
    // check perfect elimination in reverse visit order: earlier-visited
    // neighbors of each vertex must form a clique
    let mut position = vec![0usize; n];
    for (i, &u) in order.iter().enumerate() {
        position[u] = i;
    }
    for &u in &order {
        let earlier: Vec<usize> = elements(adj[u]).filter(|&w| position[w] < position[u]).collect();
        for (i, &a) in earlier.iter().enumerate() {
            for &b in &earlier[i + 1..] {
                if adj[a] >> b & 1 == 0 {
                    return false;
                }
            }
        }
    }
    true
}

/// Whether a vertex subset carries a full subcomplex that is a cycle made
/// of vertices and edges only: at least 3 vertices, every vertex in
/// exactly two edges, connected, and no larger face inside.
fn is_full_cycle(k: &SimplicialComplex, keep: Mask) -> bool {
    if card(keep) < 3 {
        return false;
    }
    let mut degree = vec![0usize; k.vertex_count()];
    let mut edge_masks = Vec::new();
    for &f in k.faces() {
        if f & !keep != 0 {
            continue;
        }
        match card(f) {
            1 => {}
            2 => {
                for i in elements(f) {
                    degree[i] += 1;
                }
                edge_masks.push(f);
            }
            _ => return false,
        }
    }
    if elements(keep).any(|i| degree[i] != 2) {
        return false;
    }
    merge_components(k.vertex_count(), edge_masks)
        .iter()
        .filter(|&&c| card(c) > 1)
        .count()
        == 1
}

/// No full subcomplex is a 1-dimensional cycle: direct search over vertex
/// subsets.
pub fn is_fully_acyclic(k: &SimplicialComplex) -> Result<bool> {
    guard("fully-acyclic search vertices", 16, k.vertex_count())?;
    for keep in submasks(full_mask(k.vertex_count())) {
        if is_full_cycle(k, keep) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Graph on the family: sets are vertices, intersecting pairs are edges.
pub fn intersection_graph(l: &SetFamily) -> SimpleGraph {
    let mut edges = Vec::new();
    for (i, &s) in l.sets().iter().enumerate() {
        for (j, &t) in l.sets().iter().enumerate().skip(i + 1) {
            if s & t != 0 {
                edges.push((i, j));
            }
        }
    }
    SimpleGraph::new(l.len(), &edges).expect("index pairs are valid edges")
}

/// Index subsets of the family with nonempty intersection, ordered by
/// inclusion, with the intersection sizes recorded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionPoset {
    family_size: usize,
    elements: BTreeMap<Mask, usize>,
}

impl IntersectionPoset {
    pub fn family_size(&self) -> usize {
        self.family_size
    }

    /// Nonempty index sets with nonempty intersection and their sizes.
    pub fn elements(&self) -> &BTreeMap<Mask, usize> {
        &self.elements
    }

    pub fn size_of(&self, index_set: Mask) -> Option<usize> {
        self.elements.get(&index_set).copied()
    }

    /// The element sets with all sizes reduced mod 2; equal parity data
    /// with an equal poset forces equal (-1)-evaluations downstream.
    pub fn parity_profile(&self) -> BTreeMap<Mask, bool> {
        self.elements.iter().map(|(&k, &v)| (k, v % 2 == 1)).collect()
    }
}

pub fn intersection_poset(l: &SetFamily) -> Result<IntersectionPoset> {
    guard("intersection poset family size", 16, l.len())?;
    let m = l.len();
    let mut inter: Vec<Mask> = vec![0; 1 << m];
    let mut elements = BTreeMap::new();
    for mask in 1..(1u64 << m) {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let value = if rest == 0 {
            l.sets()[low]
        } else if inter[rest as usize] == 0 {
            0
        } else {
            inter[rest as usize] & l.sets()[low]
        };
        inter[mask as usize] = value;
        if value != 0 {
            elements.insert(mask, card(value));
        }
    }
    Ok(IntersectionPoset { family_size: m, elements })
}
