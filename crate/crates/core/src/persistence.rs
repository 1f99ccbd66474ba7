//! PH₀ and PH₁ of the sublevel filtration `K_r = {v : z_v <= r}` (an edge
//! enters at the larger of its endpoint values).

use std::fmt;

use crate::graph::VertexFunction;
use crate::{Error, Result, Value};

/// Death coordinate of a persistence point. `Finite < Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Death {
    Finite(Value),
    Infinite,
}

impl Death {
    pub fn finite(self) -> Option<Value> {
        match self {
            Death::Finite(v) => Some(v),
            Death::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Death::Infinite
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PersistencePoint {
    pub birth: Value,
    pub death: Death,
}

impl PersistencePoint {
    pub fn finite(birth: Value, death: Value) -> Self {
        PersistencePoint {
            birth,
            death: Death::Finite(death),
        }
    }

    pub fn essential(birth: Value) -> Self {
        PersistencePoint {
            birth,
            death: Death::Infinite,
        }
    }
}

impl fmt::Display for PersistencePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.death {
            Death::Finite(d) => write!(f, "({}, {})", self.birth, d),
            Death::Infinite => write!(f, "({}, inf)", self.birth),
        }
    }
}

/// A multiset of persistence points in one homological degree.
///
/// Points are kept sorted, so `==` is multiset equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PersistenceDiagram {
    dim: u8,
    points: Vec<PersistencePoint>,
}

impl PersistenceDiagram {
    pub fn new(dim: u8, mut points: Vec<PersistencePoint>) -> Self {
        points.sort_unstable();
        PersistenceDiagram { dim, points }
    }

    pub fn empty(dim: u8) -> Self {
        PersistenceDiagram {
            dim,
            points: Vec::new(),
        }
    }

    /// `{(b0, inf)} ∪ {(b, d)}` in degree 0.
    pub fn ph0(essential: Value, finite: &[(Value, Value)]) -> Self {
        let mut points = vec![PersistencePoint::essential(essential)];
        points.extend(finite.iter().map(|&(b, d)| PersistencePoint::finite(b, d)));
        Self::new(0, points)
    }

    pub fn dim(&self) -> u8 {
        self.dim
    }

    pub fn points(&self) -> &[PersistencePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Births, then finite deaths, in point order.
    pub fn coordinates(&self) -> Vec<Value> {
        let mut out: Vec<Value> = self.points.iter().map(|p| p.birth).collect();
        out.extend(self.points.iter().filter_map(|p| p.death.finite()));
        out
    }
}

impl fmt::Display for PersistenceDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PH{}{{", self.dim)?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

/// PH₀ by the elder rule.
///
/// Vertices enter in `(value, index)` order. On a merge the component whose
/// birth vertex entered first survives; the other dies at the current value.
/// Pairs with `birth == death` are not reported.
pub fn sublevel_ph0(z: &VertexFunction) -> Result<PersistenceDiagram> {
    let g = z.graph();
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = z.len();
    let values = z.values();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[a].cmp(&values[b]).then(a.cmp(&b)));
    let mut rank = vec![0usize; n];
    for (r, &v) in order.iter().enumerate() {
        rank[v] = r;
    }

    // Each root carries the rank of its birth vertex; the smaller rank is elder.
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }

    let mut points = Vec::with_capacity(n);
    for &v in &order {
        let r = values[v];
        for &w in g.neighbors(v) {
            if rank[w] > rank[v] {
                continue;
            }
            let (rv, rw) = (find(&mut parent, v), find(&mut parent, w));
            if rv == rw {
                continue;
            }
            // Roots are always birth vertices, so ranks compare births.
            let (elder, younger) = if rank[rv] < rank[rw] {
                (rv, rw)
            } else {
                (rw, rv)
            };
            parent[younger] = elder;
            if values[younger] < r {
                points.push(PersistencePoint::finite(values[younger], r));
            }
        }
    }
    points.push(PersistencePoint::essential(values[order[0]]));
    Ok(PersistenceDiagram::new(0, points))
}

/// PH₁: `{(max z, inf)}` on a cycle, empty on a tree.
pub fn ph1_cycle(z: &VertexFunction) -> PersistenceDiagram {
    if z.graph().is_cycle() {
        let max = *z.values().iter().max().expect("graphs are non-empty");
        PersistenceDiagram::new(1, vec![PersistencePoint::essential(max)])
    } else {
        PersistenceDiagram::empty(1)
    }
}

/// All births and finite deaths pairwise distinct.
pub fn diagram_is_typical(p: &PersistenceDiagram) -> bool {
    let mut coords = p.coordinates();
    coords.sort_unstable();
    coords.windows(2).all(|w| w[0] != w[1])
}

/// `sublevel_ph0(z) == p`.
pub fn in_fiber(z: &VertexFunction, p: &PersistenceDiagram) -> bool {
    p.dim() == 0 && sublevel_ph0(z).is_ok_and(|q| &q == p)
}
