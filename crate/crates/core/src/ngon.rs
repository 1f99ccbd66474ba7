//! Components of the fiber over an `N`-gon with `N = 2M + 1`.
//!
//! A point of the fiber has `2M` extrema and one extra vertex whose value lies
//! between its neighbours'. Fixing the cyclic sequence of extremal values
//! (up to rotation), the extra vertex's position and the rotation give
//! `2M · N` closed intervals, glued at their endpoints where the extra value
//! ties a neighbour. Each class of sequences is one component.

use std::collections::HashMap;
use std::sync::Arc;

use crate::graph::{build_graph, Graph, Shape, VertexFunction};
use crate::homology::BettiVector;
use crate::persistence::{diagram_is_typical, in_fiber, sublevel_ph0, PersistenceDiagram};
use crate::{int, Error, Result, Value};

/// `{(0, inf)} ∪ {(m, 2M + m - 1) : 1 <= m < M}`, with maximum one above the
/// largest death.
pub fn default_diagram(m: usize) -> Result<(PersistenceDiagram, Value)> {
    if m == 0 {
        return Err(Error::InvalidParameters("M must be at least 1".into()));
    }
    let m = m as i64;
    let finite: Vec<(Value, Value)> = (1..m).map(|k| (int(k), int(2 * m + k - 1))).collect();
    let max = finite.last().map_or(int(1), |&(_, d)| d + int(1));
    Ok((PersistenceDiagram::ph0(int(0), &finite), max))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentCheck {
    /// Critical values in cyclic order, starting at the global minimum.
    pub sequence: Vec<Value>,
    pub vertices: usize,
    pub edges: usize,
    pub betti: BettiVector,
    /// First cell midpoint or endpoint outside the fiber.
    pub failure: Option<Vec<Value>>,
}

impl ComponentCheck {
    pub fn pass(&self) -> bool {
        self.failure.is_none() && self.betti.is_circle_like()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NgonReport {
    pub n: usize,
    pub m: usize,
    pub diagram: PersistenceDiagram,
    pub max: Value,
    pub components: Vec<ComponentCheck>,
}

impl NgonReport {
    /// Number of critical value sequences modulo rotation.
    pub fn class_count(&self) -> usize {
        self.components.len()
    }

    pub fn pass(&self) -> bool {
        !self.components.is_empty() && self.components.iter().all(ComponentCheck::pass)
    }
}

/// Enumerates the components over `p` (with `M = |p|` points, `N = 2M + 1`)
/// when the global maximum is `max`, and computes the homology of each.
pub fn ngon_components(p: &PersistenceDiagram, max: Value) -> Result<NgonReport> {
    let m = p.len();
    let essential: Vec<_> = p
        .points()
        .iter()
        .filter(|q| q.death.is_infinite())
        .collect();
    if p.dim() != 0 || m == 0 || essential.len() != 1 {
        return Err(Error::InvalidParameters(
            "need a PH0 diagram with exactly one essential point".into(),
        ));
    }
    if !diagram_is_typical(p) {
        return Err(Error::InvalidParameters(
            "diagram values must be distinct".into(),
        ));
    }
    let deaths: Vec<Value> = p.points().iter().filter_map(|q| q.death.finite()).collect();
    if deaths.iter().any(|&d| d >= max) || p.points().iter().any(|q| q.birth >= max) {
        return Err(Error::InvalidParameters(
            "the maximum must exceed every diagram value".into(),
        ));
    }
    let n = 2 * m + 1;
    let cycle = Arc::new(build_graph(&Shape::Cycle(n))?);
    let components = critical_sequences(p, max)?
        .into_iter()
        .map(|seq| component(&cycle, p, seq))
        .collect();
    Ok(NgonReport {
        n,
        m,
        diagram: p.clone(),
        max,
        components,
    })
}

/// Alternating min/max sequences on the `2M`-cycle, global minimum first,
/// whose PH0 is `p`.
pub fn critical_sequences(p: &PersistenceDiagram, max: Value) -> Result<Vec<Vec<Value>>> {
    let m = p.len();
    let mut births: Vec<Value> = p.points().iter().map(|q| q.birth).collect();
    births.sort();
    let mut maxima: Vec<Value> = p.points().iter().filter_map(|q| q.death.finite()).collect();
    maxima.push(max);
    let global_min = births.remove(0);

    let mut out = Vec::new();
    if m == 1 {
        // The 2-cycle degenerates to an edge; the 3-gon has a single class.
        out.push(vec![global_min, max]);
        return Ok(out);
    }
    let cycle = Arc::new(build_graph(&Shape::Cycle(2 * m))?);
    for mins in permutations(&births) {
        for maxs in permutations(&maxima) {
            let mut seq = Vec::with_capacity(2 * m);
            seq.push(global_min);
            seq.push(maxs[0]);
            for i in 1..m {
                seq.push(mins[i - 1]);
                seq.push(maxs[i]);
            }
            let alternates = (0..2 * m).step_by(2).all(|i| {
                seq[i] < seq[(i + 1) % (2 * m)] && seq[i] < seq[(i + 2 * m - 1) % (2 * m)]
            });
            if !alternates {
                continue;
            }
            let z = VertexFunction::new(Arc::clone(&cycle), seq.clone())?;
            if sublevel_ph0(&z)? == *p {
                out.push(seq);
            }
        }
    }
    Ok(out)
}

fn permutations(items: &[Value]) -> Vec<Vec<Value>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Cell `(e, k)`: extra vertex `e`, the others carry `seq` rotated by `k`
/// starting after `e`. Returns the vector with `v[e]` unset (zero).
pub fn cell_frame(seq: &[Value], n: usize, e: usize, k: usize) -> Vec<Value> {
    let len = seq.len();
    let mut v = vec![int(0); n];
    for j in 0..len {
        v[(e + 1 + j) % n] = seq[(k + j) % len];
    }
    v
}

fn component(cycle: &Arc<Graph>, p: &PersistenceDiagram, seq: Vec<Value>) -> ComponentCheck {
    let n = cycle.vertex_count();
    let len = seq.len();
    let mut ids: HashMap<Vec<Value>, usize> = HashMap::new();
    let mut parent: Vec<usize> = Vec::new();
    let mut failure = None;
    let mut edges = 0;
    let check = |v: &Vec<Value>, failure: &mut Option<Vec<Value>>| {
        if failure.is_none() {
            let z = VertexFunction::new(Arc::clone(cycle), v.clone()).expect("length n");
            if !in_fiber(&z, p) {
                *failure = Some(v.clone());
            }
        }
    };
    for e in 0..n {
        for k in 0..len {
            let mut v = cell_frame(&seq, n, e, k);
            let (left, right) = (v[(e + n - 1) % n], v[(e + 1) % n]);
            let mut ends = [0usize; 2];
            for (slot, value) in [left, right].into_iter().enumerate() {
                v[e] = value;
                check(&v, &mut failure);
                let next = ids.len();
                let id = *ids.entry(v.clone()).or_insert(next);
                if id == parent.len() {
                    parent.push(id);
                }
                ends[slot] = id;
            }
            v[e] = (left + right) / int(2);
            check(&v, &mut failure);
            edges += 1;
            let (a, b) = (find(&mut parent, ends[0]), find(&mut parent, ends[1]));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let vertices = parent.len();
    let b0 = (0..vertices).filter(|&i| find(&mut parent, i) == i).count();
    let b1 = edges + b0 - vertices;
    ComponentCheck {
        sequence: seq,
        vertices,
        edges,
        betti: BettiVector::new(vec![b0, b1]),
        failure,
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}
