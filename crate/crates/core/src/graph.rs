//! Paths, cycles and star trees with exact vertex values.
//!
//! Vertices are 0-based. A star has its central vertex at 0, followed by each
//! branch in turn listed root (next to the center) to leaf. With that
//! numbering, vertex-index order is also the canonical traversal order used
//! for critical value sequences.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::{Error, Result, Value};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Shape {
    Path(usize),
    Cycle(usize),
    /// Branch lengths, in branch order.
    Star(Vec<usize>),
}

impl Shape {
    pub fn tag(&self) -> &'static str {
        match self {
            Shape::Path(_) => "path",
            Shape::Cycle(_) => "cycle",
            Shape::Star(_) => "star",
        }
    }

    pub fn params(&self) -> Vec<usize> {
        match self {
            Shape::Path(n) | Shape::Cycle(n) => vec![*n],
            Shape::Star(lengths) => lengths.clone(),
        }
    }

    pub fn from_tag(tag: &str, params: &[usize]) -> Result<Shape> {
        match (tag, params) {
            ("path", [n]) => Ok(Shape::Path(*n)),
            ("cycle", [n]) => Ok(Shape::Cycle(*n)),
            ("star", lengths) => Ok(Shape::Star(lengths.to_vec())),
            ("path" | "cycle", _) => Err(Error::InvalidShape(format!(
                "{tag} takes exactly one size parameter"
            ))),
            _ => Err(Error::InvalidShape(format!("unknown shape {tag:?}"))),
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Path(n) => write!(f, "path({n})"),
            Shape::Cycle(n) => write!(f, "cycle({n})"),
            Shape::Star(l) => write!(f, "star({l:?})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    shape: Shape,
    vertex_count: usize,
    edges: Vec<[usize; 2]>,
    adjacency: Vec<Vec<usize>>,
    // Star only: branches[q] lists branch q root to leaf.
    branches: Vec<Vec<usize>>,
}

/// Builds the graph described by `shape`.
///
/// Paths and cycles need at least 3 vertices; stars need at least 3 branches,
/// each of length at least 2.
pub fn build_graph(shape: &Shape) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut branches = Vec::new();
    let vertex_count = match shape {
        Shape::Path(n) | Shape::Cycle(n) => {
            if *n < 3 {
                return Err(Error::InvalidShape(format!(
                    "{} needs at least 3 vertices, got {n}",
                    shape.tag()
                )));
            }
            edges.extend((0..n - 1).map(|i| [i, i + 1]));
            if matches!(shape, Shape::Cycle(_)) {
                edges.push([0, n - 1]);
            }
            *n
        }
        Shape::Star(lengths) => {
            if lengths.len() < 3 {
                return Err(Error::InvalidShape(format!(
                    "a star needs at least 3 branches, got {}",
                    lengths.len()
                )));
            }
            if let Some(&l) = lengths.iter().find(|&&l| l < 2) {
                return Err(Error::InvalidShape(format!(
                    "star branches need length at least 2, got {l}"
                )));
            }
            let mut next = 1;
            for &l in lengths {
                let branch: Vec<usize> = (next..next + l).collect();
                edges.push([0, next]);
                edges.extend(branch.windows(2).map(|w| [w[0], w[1]]));
                next += l;
                branches.push(branch);
            }
            next
        }
    };
    let mut adjacency = vec![Vec::new(); vertex_count];
    for &[a, b] in &edges {
        adjacency[a].push(b);
        adjacency[b].push(a);
    }
    for nbrs in &mut adjacency {
        nbrs.sort_unstable();
    }
    Ok(Graph {
        shape: shape.clone(),
        vertex_count,
        edges,
        adjacency,
        branches,
    })
}

impl Graph {
    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Edges as `[a, b]` with `a < b`.
    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn is_cycle(&self) -> bool {
        matches!(self.shape, Shape::Cycle(_))
    }

    pub fn is_tree(&self) -> bool {
        !self.is_cycle()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// The central vertex of a star.
    pub fn center(&self) -> Option<usize> {
        matches!(self.shape, Shape::Star(_)).then_some(0)
    }

    /// Number of star branches; 0 for paths and cycles.
    pub fn branch_count(&self) -> usize {
        self.branches.len()
    }

    /// Vertices of star branch `q`, root to leaf. The center is not included.
    pub fn branch(&self, q: usize) -> Result<&[usize]> {
        self.branches
            .get(q)
            .map(Vec::as_slice)
            .ok_or(Error::InvalidBranch(q))
    }

    /// `(branch, depth)` of a non-central star vertex, depth 1 at the root.
    pub fn branch_of(&self, v: usize) -> Option<(usize, usize)> {
        self.branches
            .iter()
            .enumerate()
            .find_map(|(q, b)| b.iter().position(|&w| w == v).map(|d| (q, d + 1)))
    }

    /// Vertices on the unique path from `a` to `b`, both included. Trees only.
    pub fn tree_path(&self, a: usize, b: usize) -> Vec<usize> {
        debug_assert!(self.is_tree());
        let parent = self.bfs_parents(b);
        let mut out = vec![a];
        let mut v = a;
        while v != b {
            v = parent[v].expect("tree is connected");
            out.push(v);
        }
        out
    }

    /// BFS parent pointers towards `root`; `parent[root] == None`.
    pub fn bfs_parents(&self, root: usize) -> Vec<Option<usize>> {
        let mut parent = vec![None; self.vertex_count];
        let mut seen = vec![false; self.vertex_count];
        let mut queue = std::collections::VecDeque::from([root]);
        seen[root] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(v);
                    queue.push_back(w);
                }
            }
        }
        parent
    }
}

/// A graph together with one exact value per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexFunction {
    graph: Arc<Graph>,
    values: Vec<Value>,
}

impl VertexFunction {
    pub fn new(graph: Arc<Graph>, values: Vec<Value>) -> Result<Self> {
        if values.len() != graph.vertex_count() {
            return Err(Error::ValueCount {
                expected: graph.vertex_count(),
                got: values.len(),
            });
        }
        Ok(VertexFunction { graph, values })
    }

    /// Builds the graph for `shape` and attaches `values`.
    pub fn on(shape: &Shape, values: Vec<Value>) -> Result<Self> {
        Self::new(Arc::new(build_graph(shape)?), values)
    }

    /// Same graph, new values.
    pub fn with_values(&self, values: Vec<Value>) -> Result<Self> {
        Self::new(Arc::clone(&self.graph), values)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn graph_arc(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn values(&self) -> &[Value] {
        &self.values
    }

    pub fn value(&self, v: usize) -> Value {
        self.values[v]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Two vertices sharing a value, if any.
    pub fn first_tie(&self) -> Option<(usize, usize)> {
        let mut order: Vec<usize> = (0..self.values.len()).collect();
        order.sort_by(|&a, &b| self.values[a].cmp(&self.values[b]).then(a.cmp(&b)));
        order
            .windows(2)
            .find(|w| self.values[w[0]] == self.values[w[1]])
            .map(|w| (w[0], w[1]))
    }

    fn require_typical(&self) -> Result<()> {
        match self.first_tie() {
            Some((a, b)) => Err(Error::NotTypical(a, b)),
            None => Ok(()),
        }
    }
}

/// True iff all values are pairwise distinct.
pub fn is_typical(z: &VertexFunction) -> bool {
    z.first_tie().is_none()
}

/// The value digraph: `v -> w` for adjacent `v, w` with `z_v >= z_w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    vertex_count: usize,
    // Sorted.
    arcs: Vec<(usize, usize)>,
}

impl Digraph {
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn has_arc(&self, v: usize, w: usize) -> bool {
        self.arcs.binary_search(&(v, w)).is_ok()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|a| a.0 == v).count()
    }

    /// Edges carrying arcs in both directions.
    pub fn two_sided_edges(&self) -> Vec<[usize; 2]> {
        self.arcs
            .iter()
            .filter(|&&(v, w)| v < w && self.has_arc(w, v))
            .map(|&(v, w)| [v, w])
            .collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }
}

pub fn digraph_of(z: &VertexFunction) -> Digraph {
    let mut arcs = Vec::with_capacity(z.graph().edges().len() + 1);
    for &[a, b] in z.graph().edges() {
        if z.values[a] >= z.values[b] {
            arcs.push((a, b));
        }
        if z.values[b] >= z.values[a] {
            arcs.push((b, a));
        }
    }
    arcs.sort_unstable();
    Digraph {
        vertex_count: z.len(),
        arcs,
    }
}

/// Local maxima and minima of a typical vertex function, each sorted.
pub fn local_extrema(z: &VertexFunction) -> Result<(Vec<usize>, Vec<usize>)> {
    z.require_typical()?;
    let g = z.graph();
    let mut maxima = Vec::new();
    let mut minima = Vec::new();
    for v in 0..z.len() {
        let nbrs = g.neighbors(v);
        if nbrs.iter().all(|&w| z.values[v] >= z.values[w]) {
            maxima.push(v);
        }
        if nbrs.iter().all(|&w| z.values[v] <= z.values[w]) {
            minima.push(v);
        }
    }
    Ok((maxima, minima))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Extremum {
    Max,
    Min,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CriticalEntry {
    pub vertex: usize,
    pub value: Value,
    pub kind: Extremum,
}

/// Local extrema in traversal order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalValueSequence {
    pub entries: Vec<CriticalEntry>,
}

impl CriticalValueSequence {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn values(&self) -> Vec<Value> {
        self.entries.iter().map(|e| e.value).collect()
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.vertex).collect()
    }

    /// Consecutive entries, including last-to-first, differ in kind.
    pub fn alternates_cyclically(&self) -> bool {
        let n = self.entries.len();
        n % 2 == 0 && (0..n).all(|i| self.entries[i].kind != self.entries[(i + 1) % n].kind)
    }

    /// Consecutive entries differ in kind.
    pub fn alternates(&self) -> bool {
        self.entries.windows(2).all(|w| w[0].kind != w[1].kind)
    }
}

/// Local extrema listed in vertex-index order (the cycle order for an N-gon,
/// center then branches root to leaf for a star).
pub fn critical_value_sequence(z: &VertexFunction) -> Result<CriticalValueSequence> {
    let (maxima, minima) = local_extrema(z)?;
    let mut entries: Vec<CriticalEntry> = maxima
        .iter()
        .map(|&v| (v, Extremum::Max))
        .chain(minima.iter().map(|&v| (v, Extremum::Min)))
        .map(|(vertex, kind)| CriticalEntry {
            vertex,
            value: z.values[vertex],
            kind,
        })
        .collect();
    entries.sort_by_key(|e| e.vertex);
    Ok(CriticalValueSequence { entries })
}

/// Vertices whose out-degree is not 1 once two-sided edges are contracted.
///
/// Each edge between distinct contracted classes contributes one arc, so on a
/// cycle the class holding the global maximum has out-degree 2.
pub fn critical_coordinates(z: &VertexFunction) -> Vec<usize> {
    let g = z.graph();
    let n = z.len();
    let mut class: Vec<usize> = (0..n).collect();
    fn find(class: &mut [usize], mut v: usize) -> usize {
        while class[v] != v {
            class[v] = class[class[v]];
            v = class[v];
        }
        v
    }
    for &[a, b] in g.edges() {
        if z.values[a] == z.values[b] {
            let (ra, rb) = (find(&mut class, a), find(&mut class, b));
            class[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut out_degree = vec![0usize; n];
    for &[a, b] in g.edges() {
        let (ra, rb) = (find(&mut class, a), find(&mut class, b));
        if ra == rb {
            continue;
        }
        if z.values[a] > z.values[b] {
            out_degree[ra] += 1;
        } else {
            out_degree[rb] += 1;
        }
    }
    let critical_roots: BTreeSet<usize> = (0..n)
        .filter(|&v| find(&mut class, v) == v && out_degree[v] != 1)
        .collect();
    (0..n)
        .filter(|&v| critical_roots.contains(&find(&mut class, v)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int;

    fn ints(v: &[i64]) -> Vec<Value> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn cycle_edges() {
        let g = build_graph(&Shape::Cycle(5)).unwrap();
        assert_eq!(g.edges(), &[[0, 1], [1, 2], [2, 3], [3, 4], [0, 4]]);
        assert!(g.is_connected());
    }

    #[test]
    fn y_tree_layout() {
        let g = build_graph(&Shape::Star(vec![2, 2, 2])).unwrap();
        assert_eq!(g.vertex_count(), 7);
        assert_eq!(g.edges().len(), 6);
        assert_eq!(g.neighbors(0), &[1, 3, 5]);
        assert_eq!(g.branch(1).unwrap(), &[3, 4]);
        assert_eq!(g.branch_of(4), Some((1, 2)));
        assert_eq!(g.branch_of(0), None);
        assert_eq!(g.tree_path(2, 6), vec![2, 1, 0, 5, 6]);
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(build_graph(&Shape::Path(2)).is_err());
        assert!(build_graph(&Shape::Cycle(2)).is_err());
        assert!(build_graph(&Shape::Star(vec![2, 2])).is_err());
        assert!(build_graph(&Shape::Star(vec![2, 1, 2])).is_err());
    }

    #[test]
    fn two_sided_edge() {
        let z = VertexFunction::on(&Shape::Path(3), ints(&[5, 5, 1])).unwrap();
        let d = digraph_of(&z);
        assert_eq!(d.arcs(), &[(0, 1), (1, 0), (1, 2)]);
        assert_eq!(d.two_sided_edges(), vec![[0, 1]]);
        assert_eq!(critical_coordinates(&z), vec![2]);
    }

    #[test]
    fn extrema_need_typical() {
        let z = VertexFunction::on(&Shape::Path(3), ints(&[0, 4, 4])).unwrap();
        assert!(!is_typical(&z));
        assert!(local_extrema(&z).is_err());
        assert!(critical_value_sequence(&z).is_err());
    }
}
