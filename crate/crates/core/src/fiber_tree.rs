//! The fiber of `P = {(v0, inf), (v1, v2)}` over a star tree: the cover by
//! the subspaces `Br_q`, its nerve, the K-turn loop, the contraction of
//! `Br_q`, and seeded sampling.
//!
//! Branches are 0-based. The central vertex belongs to every branch.

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{build_graph, Graph, Shape, VertexFunction};
use crate::homology::{betti, order_complex, BettiVector, FinitePoset, SimplicialComplex};
use crate::persistence::{in_fiber, PersistenceDiagram};
use crate::{int, Error, Result, Value};

/// A star tree and the diagram `{(v0, inf), (v1, v2)}`, `v0 < v1 < v2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarFiberProblem {
    tree: Arc<Graph>,
    v0: Value,
    v1: Value,
    v2: Value,
}

impl StarFiberProblem {
    /// `P = {(0, inf), (1, 4)}` on the star with the given branch lengths.
    pub fn new(lengths: &[usize]) -> Result<Self> {
        Self::with_values(lengths, int(0), int(1), int(4))
    }

    pub fn with_values(lengths: &[usize], v0: Value, v1: Value, v2: Value) -> Result<Self> {
        if !(v0 < v1 && v1 < v2) {
            return Err(Error::InvalidParameters(format!(
                "need v0 < v1 < v2, got {v0}, {v1}, {v2}"
            )));
        }
        let tree = Arc::new(build_graph(&Shape::Star(lengths.to_vec()))?);
        Ok(StarFiberProblem { tree, v0, v1, v2 })
    }

    pub fn tree(&self) -> &Arc<Graph> {
        &self.tree
    }

    pub fn branch_count(&self) -> usize {
        self.tree.branch_count()
    }

    /// `(v0, v1, v2)`.
    pub fn values(&self) -> (Value, Value, Value) {
        (self.v0, self.v1, self.v2)
    }

    pub fn diagram(&self) -> PersistenceDiagram {
        PersistenceDiagram::ph0(self.v0, &[(self.v1, self.v2)])
    }

    pub fn function(&self, values: Vec<Value>) -> Result<VertexFunction> {
        VertexFunction::new(Arc::clone(&self.tree), values)
    }

    /// The center followed by branch `q`, root to leaf.
    pub fn ray(&self, q: usize) -> Result<Vec<usize>> {
        let mut ray = vec![0];
        ray.extend_from_slice(self.tree.branch(q)?);
        Ok(ray)
    }
}

/// Some vertex `i` of branch `q` (center included) has `z_i = v0`, and no
/// vertex of branch `q` farther from the center than `i` has value `v2`.
pub fn in_br(problem: &StarFiberProblem, q: usize, z: &VertexFunction) -> Result<bool> {
    let ray = problem.ray(q)?;
    let mut seen_v2 = false;
    for &v in ray.iter().rev() {
        let x = z.value(v);
        if x == problem.v0 && !seen_v2 {
            return Ok(true);
        }
        if x == problem.v2 {
            seen_v2 = true;
        }
    }
    Ok(false)
}

/// `Br'_q`: membership in every `Br_p` with `p != q`.
pub fn in_br_prime(problem: &StarFiberProblem, q: usize, z: &VertexFunction) -> Result<bool> {
    if q >= problem.branch_count() {
        return Err(Error::InvalidBranch(q));
    }
    for p in (0..problem.branch_count()).filter(|&p| p != q) {
        if !in_br(problem, p, z)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Br'_q` described directly: `v0` at the center, `v1` and `v2` on branch `q`.
pub fn in_br_prime_direct(
    problem: &StarFiberProblem,
    q: usize,
    z: &VertexFunction,
) -> Result<bool> {
    let branch = problem.tree.branch(q)?;
    Ok(z.value(0) == problem.v0
        && branch.iter().any(|&v| z.value(v) == problem.v1)
        && branch.iter().any(|&v| z.value(v) == problem.v2))
}

/// Branches `q` with `z ∈ Br_q`.
pub fn membership(problem: &StarFiberProblem, z: &VertexFunction) -> Vec<usize> {
    (0..problem.branch_count())
        .filter(|&q| in_br(problem, q, z).expect("q is in range"))
        .collect()
}

/// A vertex of the nerve graph Γ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NerveVertex {
    Br(usize),
    BrPrime(usize),
}

impl NerveVertex {
    /// The nerve vertex whose subspace is exactly cut out by `members`: a
    /// single branch, or all branches but one.
    pub fn from_membership(n: usize, members: &[usize]) -> Option<NerveVertex> {
        match members.len() {
            1 => Some(NerveVertex::Br(members[0])),
            k if k + 1 == n => (0..n)
                .find(|q| !members.contains(q))
                .map(NerveVertex::BrPrime),
            _ => None,
        }
    }

    pub fn adjacent(self, other: NerveVertex) -> bool {
        match (self, other) {
            (NerveVertex::Br(p), NerveVertex::BrPrime(q))
            | (NerveVertex::BrPrime(q), NerveVertex::Br(p)) => p != q,
            _ => false,
        }
    }
}

impl fmt::Display for NerveVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NerveVertex::Br(q) => write!(f, "Br{q}"),
            NerveVertex::BrPrime(q) => write!(f, "Br'{q}"),
        }
    }
}

/// The poset `{Br_q} ∪ {Br'_q}` with `Br'_q < Br_p` for `p != q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NervePoset {
    n: usize,
}

impl NervePoset {
    pub fn new(n: usize) -> Self {
        NervePoset { n }
    }

    pub fn branch_count(&self) -> usize {
        self.n
    }

    /// `Br_0..Br_{n-1}` then `Br'_0..Br'_{n-1}`.
    pub fn elements(&self) -> Vec<NerveVertex> {
        (0..self.n)
            .map(NerveVertex::Br)
            .chain((0..self.n).map(NerveVertex::BrPrime))
            .collect()
    }

    pub fn index(&self, v: NerveVertex) -> usize {
        match v {
            NerveVertex::Br(q) => q,
            NerveVertex::BrPrime(q) => self.n + q,
        }
    }

    pub fn less(&self, a: NerveVertex, b: NerveVertex) -> bool {
        matches!((a, b), (NerveVertex::BrPrime(q), NerveVertex::Br(p)) if p != q)
    }

    pub fn to_finite_poset(&self) -> FinitePoset {
        let elements = self.elements();
        let labels = elements.iter().map(ToString::to_string).collect();
        FinitePoset::from_relation(labels, |a, b| self.less(elements[a], elements[b]))
            .expect("the nerve relation is a strict order")
    }

    /// Γ, the order complex.
    pub fn gamma(&self) -> SimplicialComplex {
        order_complex(&self.to_finite_poset()).expect("Γ is small")
    }
}

pub fn nerve(problem: &StarFiberProblem) -> NervePoset {
    NervePoset::new(problem.branch_count())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaMetrics {
    pub vertices: usize,
    pub edges: usize,
    /// The common vertex degree, if all degrees agree.
    pub degree: Option<usize>,
    pub euler: i64,
    pub betti: BettiVector,
    pub dimension: usize,
}

pub fn gamma_metrics(nerve: &NervePoset) -> GammaMetrics {
    let gamma = nerve.gamma();
    let mut degree = vec![0usize; gamma.vertex_count()];
    for e in gamma.simplices(1) {
        degree[e[0] as usize] += 1;
        degree[e[1] as usize] += 1;
    }
    let uniform = degree
        .first()
        .copied()
        .filter(|d| degree.iter().all(|x| x == d));
    GammaMetrics {
        vertices: gamma.count(0),
        edges: gamma.count(1),
        degree: uniform,
        euler: gamma.euler_characteristic(),
        betti: betti(&gamma),
        dimension: gamma.dimension().unwrap_or(0),
    }
}

/// A piecewise-linear path through vertex functions on one tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PLPath {
    tree: Arc<Graph>,
    waypoints: Vec<Vec<Value>>,
    checkpoints: Vec<(String, usize)>,
}

impl PLPath {
    pub fn new(tree: Arc<Graph>, start: Vec<Value>) -> Self {
        PLPath {
            tree,
            waypoints: vec![start],
            checkpoints: Vec::new(),
        }
    }

    /// Builds a path from explicit waypoints; consecutive repeats are dropped.
    pub fn from_waypoints(tree: Arc<Graph>, waypoints: Vec<Vec<Value>>) -> Result<Self> {
        let mut it = waypoints.into_iter();
        let first = it
            .next()
            .ok_or_else(|| Error::InvalidParameters("a path needs a waypoint".into()))?;
        let mut path = PLPath::new(tree, first);
        for w in it {
            path.push(w)?;
        }
        Ok(path)
    }

    /// Appends a waypoint unless it equals the last one.
    pub fn push(&mut self, values: Vec<Value>) -> Result<()> {
        if values.len() != self.tree.vertex_count() {
            return Err(Error::ValueCount {
                expected: self.tree.vertex_count(),
                got: values.len(),
            });
        }
        if self.waypoints.last() != Some(&values) {
            self.waypoints.push(values);
        }
        Ok(())
    }

    /// Names the current last waypoint.
    pub fn mark(&mut self, label: impl Into<String>) {
        self.checkpoints
            .push((label.into(), self.waypoints.len() - 1));
    }

    pub fn tree(&self) -> &Arc<Graph> {
        &self.tree
    }

    pub fn waypoints(&self) -> &[Vec<Value>] {
        &self.waypoints
    }

    pub fn checkpoints(&self) -> &[(String, usize)] {
        &self.checkpoints
    }

    pub(crate) fn checkpoints_mut(&mut self) -> &mut Vec<(String, usize)> {
        &mut self.checkpoints
    }

    /// Waypoint index of the checkpoint called `label` (the first one).
    pub fn checkpoint(&self, label: &str) -> Option<usize> {
        self.checkpoints
            .iter()
            .find(|(l, _)| l == label)
            .map(|&(_, i)| i)
    }

    pub fn len(&self) -> usize {
        self.waypoints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.waypoints.is_empty()
    }

    pub fn first(&self) -> &[Value] {
        &self.waypoints[0]
    }

    pub fn last(&self) -> &[Value] {
        &self.waypoints[self.waypoints.len() - 1]
    }

    pub fn is_closed(&self) -> bool {
        self.first() == self.last()
    }

    pub fn waypoint(&self, i: usize) -> VertexFunction {
        VertexFunction::new(Arc::clone(&self.tree), self.waypoints[i].clone())
            .expect("waypoints have the tree's length")
    }

    /// `w_seg + (w_{seg+1} - w_seg) * k / steps`.
    pub fn point(&self, seg: usize, k: usize, steps: usize) -> Vec<Value> {
        let (a, b) = (&self.waypoints[seg], &self.waypoints[seg + 1]);
        let t = Value::new(k as i64, steps as i64);
        a.iter().zip(b).map(|(&x, &y)| x + (y - x) * t).collect()
    }

    /// Appends `other`, which must start where `self` ends.
    pub fn extend(&mut self, other: &PLPath) -> Result<()> {
        if other.first() != self.last() {
            return Err(Error::InvalidParameters("paths do not meet".into()));
        }
        let offset = self.waypoints.len() - 1;
        for w in &other.waypoints[1..] {
            self.waypoints.push(w.clone());
        }
        self.checkpoints.extend(
            other
                .checkpoints
                .iter()
                .map(|(l, i)| (l.clone(), i + offset)),
        );
        Ok(())
    }
}

/// Where a path left the target set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathFailure {
    pub segment: usize,
    pub step: usize,
    /// Position in the sequence of all checked points.
    pub index: usize,
    pub values: Vec<Value>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCheck {
    pub pass: bool,
    pub checked: usize,
    pub first_failure: Option<PathFailure>,
}

/// Evaluates `accept` at `k / steps` along every segment (segment starts are
/// shared with the previous segment's end and checked once).
pub fn verify_path(
    path: &PLPath,
    steps: usize,
    mut accept: impl FnMut(&VertexFunction) -> bool,
) -> PathCheck {
    let steps = steps.max(1);
    let mut checked = 0;
    let mut probe = |segment: usize, step: usize, values: Vec<Value>| {
        let z = VertexFunction::new(Arc::clone(&path.tree), values).expect("length matches");
        checked += 1;
        if accept(&z) {
            None
        } else {
            Some(PathFailure {
                segment,
                step,
                index: checked - 1,
                values: z.values().to_vec(),
            })
        }
    };
    let mut failure = probe(0, 0, path.waypoints[0].clone());
    'outer: for seg in 0..path.len() - 1 {
        if failure.is_some() {
            break;
        }
        for k in 1..=steps {
            failure = probe(seg, k, path.point(seg, k, steps));
            if failure.is_some() {
                break 'outer;
            }
        }
    }
    PathCheck {
        pass: failure.is_none(),
        checked,
        first_failure: failure,
    }
}

/// [`verify_path`] with fiber membership as the test.
pub fn verify_path_in_fiber(path: &PLPath, p: &PersistenceDiagram, steps: usize) -> PathCheck {
    verify_path(path, steps, |z| in_fiber(z, p))
}

/// BFS distances from `root` in the tree with `blocked` removed.
fn distances_avoiding(tree: &Graph, root: usize, blocked: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; tree.vertex_count()];
    dist[root] = Some(0);
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &w in tree.neighbors(v) {
            if w != blocked && dist[w].is_none() {
                dist[w] = Some(dist[v].expect("visited") + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Canonical point with `v0` at `low`, `v2` at `top`, `v1` at `high`.
///
/// Removing `top` leaves the basins of `low` and `high`, where values rise
/// with distance `d` as `v1 + (v2 - v1) d/(d+1)`, and any parts hanging off
/// `top`, which rise from `v2` the same way. A per-vertex offset smaller than
/// every gap between consecutive levels keeps the values distinct. Returns
/// the values and each vertex's distance to its root.
fn canonical(
    p: &StarFiberProblem,
    low: usize,
    top: usize,
    high: usize,
) -> (Vec<Value>, Vec<usize>) {
    let tree = &p.tree;
    let n = tree.vertex_count();
    let from_low = distances_avoiding(tree, low, top);
    let from_high = distances_avoiding(tree, high, top);
    let span = p.v2 - p.v1;
    let nn = n as i64;
    let unit = span / Value::from_integer((nn + 1) * (nn + 2) * (nn + 2));
    let level = |d: usize| {
        let d = d as i64;
        span * Value::new(d, d + 1)
    };
    let mut values = vec![p.v1; n];
    let mut depth = vec![0usize; n];
    for v in 0..n {
        let offset = unit * Value::from_integer(v as i64 + 1);
        let (value, d) = if v == top {
            (p.v2, 0)
        } else if v == low {
            (p.v0, 0)
        } else if v == high {
            (p.v1, 0)
        } else if let Some(d) = from_low[v] {
            (p.v1 + level(d) + offset, d)
        } else if let Some(d) = from_high[v] {
            (p.v1 + level(d) + offset, d)
        } else {
            // Hanging off `top`: the route to `top` avoids both sinks.
            let d = tree.tree_path(v, top).len() - 1;
            (p.v2 + level(d) + offset, d)
        };
        values[v] = value;
        depth[v] = d;
    }
    (values, depth)
}

fn set_value(path: &mut PLPath, cur: &mut [Value], v: usize, value: Value) {
    if cur[v] != value {
        cur[v] = value;
        path.push(cur.to_vec()).expect("length matches");
    }
}

/// Moves the triple `(u, v, w)` (trail sink, `v2` vertex, lead sink) one
/// place onto `(v, w, x)`. Every waypoint changes one coordinate.
fn slide_step(
    p: &StarFiberProblem,
    path: &mut PLPath,
    cur: &mut [Value],
    [u, v, w, x]: [usize; 4],
) {
    let trail = cur[u];
    let lead = cur[w];
    let (low, high) = if trail == p.v0 { (v, x) } else { (x, v) };
    let (target, depth) = canonical(p, low, w, high);

    // Parts hanging off w go above v2 first, outermost vertex first.
    let mut side: Vec<usize> = (0..cur.len())
        .filter(|&y| {
            y != w && y != v && y != x && {
                let route = p.tree.tree_path(y, w);
                !route.contains(&v) && !route.contains(&x)
            }
        })
        .collect();
    side.sort_by_key(|&y| std::cmp::Reverse(depth[y]));
    for y in side {
        set_value(path, cur, y, target[y]);
    }

    set_value(path, cur, x, lead);
    set_value(path, cur, w, p.v2);
    set_value(path, cur, v, trail);

    let mut raise: Vec<usize> = (0..cur.len()).filter(|&y| target[y] > cur[y]).collect();
    raise.sort_by_key(|&y| std::cmp::Reverse(depth[y]));
    for y in raise {
        set_value(path, cur, y, target[y]);
    }
    let mut lower: Vec<usize> = (0..cur.len()).filter(|&y| target[y] < cur[y]).collect();
    lower.sort_by_key(|&y| depth[y]);
    for y in lower {
        set_value(path, cur, y, target[y]);
    }
    debug_assert_eq!(cur, &target[..]);
}

/// The loop `A → B → C → A' → B' → C' → A` on branches `[α, β, γ]`.
///
/// Each stage slides the pattern `v0 v2 v1` (or its reverse) from the outer
/// end of one branch through the center to the outer end of the next. Half
/// the loop exchanges the vertices carrying `v0` and `v1`.
pub fn kturn_loop(problem: &StarFiberProblem, branches: [usize; 3]) -> Result<PLPath> {
    let [a, b, c] = branches;
    for q in branches {
        problem.tree.branch(q)?;
    }
    if a == b || b == c || a == c {
        return Err(Error::InvalidParameters(
            "K-turn branches must be distinct".into(),
        ));
    }
    let outer = |q: usize| -> Vec<usize> {
        let mut ray = problem.ray(q).expect("checked");
        ray.reverse();
        ray
    };
    let start_ray = outer(a);
    let (init, _) = canonical(problem, start_ray[0], start_ray[1], start_ray[2]);
    let mut cur = init.clone();
    let mut path = PLPath::new(Arc::clone(&problem.tree), init);
    path.mark("A");
    let stages = [
        (a, b, "B"),
        (b, c, "C"),
        (c, a, "A'"),
        (a, b, "B'"),
        (b, c, "C'"),
        (c, a, "A"),
    ];
    for (from, to, label) in stages {
        let mut seq = outer(from);
        let mut inward = problem.ray(to).expect("checked");
        inward.remove(0);
        seq.extend(inward);
        for i in 0..seq.len() - 3 {
            slide_step(
                problem,
                &mut path,
                &mut cur,
                [seq[i], seq[i + 1], seq[i + 2], seq[i + 3]],
            );
        }
        path.mark(label);
    }
    debug_assert!(path.is_closed());
    Ok(path)
}

/// The Γ-vertices visited by the waypoints, consecutive repeats merged.
/// `Err(i)` if waypoint `i` belongs to no single nerve vertex.
pub fn signature_walk(
    problem: &StarFiberProblem,
    path: &PLPath,
) -> std::result::Result<Vec<NerveVertex>, usize> {
    let n = problem.branch_count();
    let mut walk: Vec<NerveVertex> = Vec::new();
    for i in 0..path.len() {
        let members = membership(problem, &path.waypoint(i));
        let v = NerveVertex::from_membership(n, &members).ok_or(i)?;
        if walk.last() != Some(&v) {
            walk.push(v);
        }
    }
    Ok(walk)
}

/// A closed walk of `len` steps through `len` distinct, pairwise adjacent
/// consecutive Γ-vertices.
pub fn is_simple_cycle(walk: &[NerveVertex], len: usize) -> bool {
    if walk.len() != len + 1 || walk.first() != walk.last() {
        return false;
    }
    let mut distinct = walk[..len].to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    distinct.len() == len && walk.windows(2).all(|e| e[0].adjacent(e[1]))
}

/// One stage of the contraction of `Br_q` to `(v0 at the leaf, v2 next to it,
/// v1 elsewhere)`, starting from the result of the earlier stages applied to
/// `z`:
///
/// 1. vertices of branch `q` beyond the outermost admissible `v0` drop to `v0`;
/// 2. vertices other than the leaf reachable from it without meeting a `v1`
///    value move to `v2`;
/// 3. everything except the leaf and its neighbor moves to `v1`.
///
/// Each stage is a single straight segment.
pub fn retract_br(
    problem: &StarFiberProblem,
    q: usize,
    z: &VertexFunction,
    stage: u8,
) -> Result<PLPath> {
    if !(1..=3).contains(&stage) {
        return Err(Error::InvalidParameters(format!(
            "stage must be 1, 2 or 3, got {stage}"
        )));
    }
    let ends = retraction_stages(problem, q, z)?;
    let start = ends[stage as usize - 1].clone();
    let end = ends[stage as usize].clone();
    PLPath::from_waypoints(Arc::clone(&problem.tree), vec![start, end])
}

/// Stages 1 to 3 of [`retract_br`] as one path.
pub fn retract_br_full(problem: &StarFiberProblem, q: usize, z: &VertexFunction) -> Result<PLPath> {
    let ends = retraction_stages(problem, q, z)?;
    PLPath::from_waypoints(Arc::clone(&problem.tree), ends)
}

fn retraction_stages(
    problem: &StarFiberProblem,
    q: usize,
    z: &VertexFunction,
) -> Result<Vec<Vec<Value>>> {
    if !in_br(problem, q, z)? {
        return Err(Error::InvalidParameters(format!("point is not in Br{q}")));
    }
    let (v0, v1, v2) = problem.values();
    let ray = problem.ray(q)?;
    let leaf = *ray.last().expect("branches are non-empty");

    let mut s1 = z.values().to_vec();
    let mut seen_v2 = false;
    let mut i0 = None;
    for (pos, &v) in ray.iter().enumerate().rev() {
        if s1[v] == v0 && !seen_v2 {
            i0 = Some(pos);
            break;
        }
        if s1[v] == v2 {
            seen_v2 = true;
        }
    }
    let i0 = i0.expect("in_br holds");
    for &v in &ray[i0 + 1..] {
        s1[v] = v0;
    }

    let mut s2 = s1.clone();
    let mut seen = vec![false; s1.len()];
    seen[leaf] = true;
    let mut queue = VecDeque::from([leaf]);
    while let Some(v) = queue.pop_front() {
        for &w in problem.tree.neighbors(v) {
            if !seen[w] && s1[w] != v1 {
                seen[w] = true;
                s2[w] = v2;
                queue.push_back(w);
            }
        }
    }

    let neighbor = problem.tree.neighbors(leaf)[0];
    let s3: Vec<Value> = (0..s2.len())
        .map(|v| {
            if v == leaf || v == neighbor {
                s2[v]
            } else {
                v1
            }
        })
        .collect();
    Ok(vec![z.values().to_vec(), s1, s2, s3])
}

/// `count` seeded members of the fiber.
///
/// Each proposal picks distinct vertices `a` (value `v0`) and `b` (value
/// `v1`) and a vertex `c` strictly between them (value `v2`). Other values
/// come from a grid with denominator 16, increasing away from the root of
/// their part of the tree minus `c`. Proposals outside the fiber are dropped.
pub fn sample_fiber(
    problem: &StarFiberProblem,
    count: usize,
    seed: u64,
) -> Result<Vec<VertexFunction>> {
    if count == 0 {
        return Err(Error::InvalidParameters("count must be positive".into()));
    }
    let (v0, v1, v2) = problem.values();
    let tree = &problem.tree;
    let n = tree.vertex_count();
    let steps = |lo: Value, hi: Value, from: i64, to: i64| -> Vec<Value> {
        (from..=to)
            .map(|j| lo + (hi - lo) * Value::new(j, 16))
            .collect()
    };
    let high: Vec<Value> = steps(v2, v2 + (v2 - v1), 1, 32);
    let mid: Vec<Value> = steps(v1, v2, 1, 15)
        .into_iter()
        .chain(high.iter().copied())
        .collect();
    let low: Vec<Value> = steps(v0, v1, 1, 15)
        .into_iter()
        .chain(mid.iter().copied())
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let max_proposals = count * 64 + 1024;
    let mut proposals = 0;
    while out.len() < count {
        if proposals == max_proposals {
            return Err(Error::SamplingExhausted {
                proposals,
                accepted: out.len(),
            });
        }
        proposals += 1;
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a == b {
            continue;
        }
        let route = tree.tree_path(a, b);
        if route.len() < 3 {
            continue;
        }
        let c = route[rng.gen_range(1..route.len() - 1)];
        let mut values = vec![v0; n];
        values[a] = v0;
        values[b] = v1;
        values[c] = v2;
        let mut assigned = vec![false; n];
        assigned[a] = true;
        assigned[b] = true;
        assigned[c] = true;
        let mut ok = true;
        for (root, pool) in [(a, &low), (b, &mid), (c, &high)] {
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &w in tree.neighbors(v) {
                    if assigned[w] {
                        continue;
                    }
                    assigned[w] = true;
                    let above = pool.partition_point(|&g| g <= values[v]);
                    if above == pool.len() {
                        ok = false;
                        continue;
                    }
                    values[w] = pool[rng.gen_range(above..pool.len())];
                    queue.push_back(w);
                }
            }
        }
        if !ok {
            continue;
        }
        let z = problem.function(values)?;
        if in_fiber(&z, &problem.diagram()) {
            out.push(z);
        }
    }
    Ok(out)
}
