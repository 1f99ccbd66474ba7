//! Finite posets, order complexes, and simplicial homology over F₂.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};

use crate::{Error, Result};

/// Default cap on the number of simplices [`order_complex`] will build.
pub const DEFAULT_MAX_SIMPLICES: u64 = 5_000_000;

/// A finite poset stored as strict up-sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    labels: Vec<String>,
    // up[i]: sorted indices j with i < j.
    up: Vec<Vec<u32>>,
    // A linear extension: every element precedes everything above it.
    linear: Vec<u32>,
}

impl FinitePoset {
    /// The order generated by `covers` (pairs `(lower, upper)`).
    pub fn from_covers(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut above: Vec<Vec<u32>> = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        for &(a, b) in covers {
            if a >= n || b >= n || a == b {
                return Err(Error::NotAPoset(format!("bad cover ({a}, {b})")));
            }
            above[a].push(b as u32);
            indegree[b] += 1;
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
        let mut linear = Vec::with_capacity(n);
        while let Some(v) = queue.pop_front() {
            linear.push(v as u32);
            for &w in &above[v] {
                indegree[w as usize] -= 1;
                if indegree[w as usize] == 0 {
                    queue.push_back(w as usize);
                }
            }
        }
        if linear.len() != n {
            return Err(Error::NotAPoset("covers contain a cycle".into()));
        }
        let mut up: Vec<Vec<u32>> = vec![Vec::new(); n];
        for &v in linear.iter().rev() {
            let v = v as usize;
            let mut set: Vec<u32> = Vec::new();
            for &w in &above[v] {
                set.push(w);
                set.extend_from_slice(&up[w as usize]);
            }
            set.sort_unstable();
            set.dedup();
            up[v] = set;
        }
        Ok(FinitePoset { labels, up, linear })
    }

    /// The order given by a strict-comparison predicate, which must be
    /// irreflexive, antisymmetric and transitive.
    pub fn from_relation(labels: Vec<String>, less: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = labels.len();
        let mut covers = Vec::new();
        for (a, label) in labels.iter().enumerate() {
            if less(a, a) {
                return Err(Error::NotAPoset(format!("{label} < itself")));
            }
            for b in 0..n {
                if a != b && less(a, b) {
                    covers.push((a, b));
                }
            }
        }
        let p = Self::from_covers(labels, &covers)?;
        let edges: usize = p.up.iter().map(Vec::len).sum();
        if edges != covers.len() {
            return Err(Error::NotAPoset("relation is not transitive".into()));
        }
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        self.up[a].binary_search(&(b as u32)).is_ok()
    }

    /// Strict up-set of `a`, sorted.
    pub fn above(&self, a: usize) -> &[u32] {
        &self.up[a]
    }

    /// Number of strict chains (non-empty), saturating.
    pub fn chain_count(&self) -> u64 {
        let mut from = vec![0u64; self.len()];
        for &v in self.linear.iter().rev() {
            let v = v as usize;
            from[v] = self.up[v]
                .iter()
                .fold(1u64, |acc, &w| acc.saturating_add(from[w as usize]));
        }
        from.into_iter().fold(0u64, u64::saturating_add)
    }

    /// Length (number of strict steps) of the longest chain, if non-empty.
    pub fn height(&self) -> Option<usize> {
        let mut h = vec![0usize; self.len()];
        for &v in self.linear.iter().rev() {
            let v = v as usize;
            h[v] = self.up[v]
                .iter()
                .map(|&w| h[w as usize] + 1)
                .max()
                .unwrap_or(0);
        }
        h.into_iter().max()
    }
}

/// Simplices of one dimension: sorted vertex lists of equal width, stored
/// flat in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
struct Level {
    width: usize,
    data: Vec<u32>,
}

impl Level {
    fn len(&self) -> usize {
        self.data.len() / self.width
    }

    fn get(&self, i: usize) -> &[u32] {
        &self.data[i * self.width..(i + 1) * self.width]
    }

    fn find(&self, key: &[u32]) -> Option<usize> {
        let (mut lo, mut hi) = (0, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.get(mid).cmp(key) {
                Ordering::Less => lo = mid + 1,
                Ordering::Greater => hi = mid,
                Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    fn from_records(width: usize, mut data: Vec<u32>) -> Level {
        let n = data.len() / width;
        let mut order: Vec<u32> = (0..n as u32).collect();
        order.sort_unstable_by(|&a, &b| {
            let (a, b) = (a as usize, b as usize);
            data[a * width..(a + 1) * width].cmp(&data[b * width..(b + 1) * width])
        });
        let mut sorted = Vec::with_capacity(data.len());
        let mut prev: Option<usize> = None;
        for &i in &order {
            let i = i as usize;
            let rec = &data[i * width..(i + 1) * width];
            if prev.is_some_and(|p| &data[p * width..(p + 1) * width] == rec) {
                continue;
            }
            sorted.extend_from_slice(rec);
            prev = Some(i);
        }
        data.clear();
        Level {
            width,
            data: sorted,
        }
    }
}

/// A finite simplicial complex, closed under faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    // levels[k]: the k-simplices.
    levels: Vec<Level>,
}

impl SimplicialComplex {
    /// The complex generated by `simplices` (all their faces are added).
    /// Vertices `0..vertex_count` are always present.
    pub fn from_simplices(
        vertex_count: usize,
        simplices: impl IntoIterator<Item = Vec<u32>>,
    ) -> Result<Self> {
        let mut by_dim: Vec<HashSet<Vec<u32>>> =
            vec![(0..vertex_count as u32).map(|v| vec![v]).collect()];
        for mut s in simplices {
            s.sort_unstable();
            s.dedup();
            if let Some(&v) = s.iter().find(|&&v| v as usize >= vertex_count) {
                return Err(Error::Malformed(format!("vertex {v} out of range")));
            }
            if s.is_empty() {
                continue;
            }
            add_with_faces(&mut by_dim, s);
        }
        let levels = by_dim
            .into_iter()
            .enumerate()
            .map(|(k, set)| {
                let data: Vec<u32> = set.into_iter().flatten().collect();
                Level::from_records(k + 1, data)
            })
            .collect();
        Ok(SimplicialComplex {
            vertex_count,
            levels,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Top dimension, `None` for the empty complex.
    pub fn dimension(&self) -> Option<usize> {
        self.levels.iter().rposition(|l| l.len() > 0)
    }

    /// Number of `k`-simplices.
    pub fn count(&self, k: usize) -> usize {
        self.levels.get(k).map_or(0, Level::len)
    }

    /// Number of simplices of every dimension.
    pub fn counts(&self) -> Vec<usize> {
        self.levels.iter().map(Level::len).collect()
    }

    pub fn total(&self) -> usize {
        self.levels.iter().map(Level::len).sum()
    }

    /// The `k`-simplices, each a sorted vertex list, in lexicographic order.
    pub fn simplices(&self, k: usize) -> impl Iterator<Item = &[u32]> {
        self.levels
            .get(k)
            .map(|l| l.data.chunks_exact(l.width))
            .into_iter()
            .flatten()
    }

    pub fn contains(&self, simplex: &[u32]) -> bool {
        !simplex.is_empty()
            && self
                .levels
                .get(simplex.len() - 1)
                .is_some_and(|l| l.find(simplex).is_some())
    }

    /// `Σ (-1)^k (number of k-simplices)`.
    pub fn euler_characteristic(&self) -> i64 {
        self.levels
            .iter()
            .enumerate()
            .map(|(k, l)| {
                if k % 2 == 0 {
                    l.len() as i64
                } else {
                    -(l.len() as i64)
                }
            })
            .sum()
    }
}

fn add_with_faces(by_dim: &mut Vec<HashSet<Vec<u32>>>, s: Vec<u32>) {
    let k = s.len() - 1;
    while by_dim.len() <= k {
        by_dim.push(HashSet::new());
    }
    if k == 0 || by_dim[k].contains(&s) {
        by_dim[k].insert(s);
        return;
    }
    for i in 0..s.len() {
        let mut face = s.clone();
        face.remove(i);
        add_with_faces(by_dim, face);
    }
    by_dim[k].insert(s);
}

/// The order complex with the default size limit.
pub fn order_complex(poset: &FinitePoset) -> Result<SimplicialComplex> {
    order_complex_with_limit(poset, DEFAULT_MAX_SIMPLICES)
}

/// The order complex: one `k`-simplex per strict chain `q0 < … < qk`.
/// Fails without building anything if there are more than `limit` chains.
pub fn order_complex_with_limit(poset: &FinitePoset, limit: u64) -> Result<SimplicialComplex> {
    let count = poset.chain_count();
    if count > limit {
        return Err(Error::TooLarge { count, limit });
    }
    let n = poset.len();
    let mut raw: Vec<Vec<u32>> = Vec::new();
    let mut chain: Vec<u32> = Vec::new();
    let mut sorted: Vec<u32> = Vec::new();
    // Iterative DFS over chains: stack of (element, next child position).
    let mut stack: Vec<(u32, usize)> = Vec::new();
    for start in 0..n as u32 {
        stack.push((start, 0));
        chain.push(start);
        emit(&mut raw, &chain, &mut sorted);
        while let Some(top) = stack.last_mut() {
            let (v, pos) = *top;
            let children = poset.above(v as usize);
            if pos < children.len() {
                top.1 += 1;
                let w = children[pos];
                stack.push((w, 0));
                chain.push(w);
                emit(&mut raw, &chain, &mut sorted);
            } else {
                stack.pop();
                chain.pop();
            }
        }
    }
    let levels = raw
        .into_iter()
        .enumerate()
        .map(|(k, data)| Level::from_records(k + 1, data))
        .collect();
    Ok(SimplicialComplex {
        vertex_count: n,
        levels,
    })
}

fn emit(raw: &mut Vec<Vec<u32>>, chain: &[u32], scratch: &mut Vec<u32>) {
    let k = chain.len() - 1;
    if raw.len() <= k {
        raw.resize_with(k + 1, Vec::new);
    }
    scratch.clear();
    scratch.extend_from_slice(chain);
    scratch.sort_unstable();
    raw[k].extend_from_slice(scratch);
}

/// Betti numbers over F₂ and the Euler characteristic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BettiVector {
    /// `b_0, b_1, …`, trailing zeros beyond `b_1` removed.
    pub ranks: Vec<usize>,
    pub euler: i64,
}

impl BettiVector {
    pub fn new(mut ranks: Vec<usize>) -> Self {
        while ranks.len() > 2 && ranks.last() == Some(&0) {
            ranks.pop();
        }
        while ranks.len() < 2 {
            ranks.push(0);
        }
        let euler = ranks
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum();
        BettiVector { ranks, euler }
    }

    pub fn b(&self, k: usize) -> usize {
        self.ranks.get(k).copied().unwrap_or(0)
    }

    /// `b = (1, 0, 0, …)`.
    pub fn is_point_like(&self) -> bool {
        self.ranks == [1, 0]
    }

    /// `b = (1, 1, 0, …)`.
    pub fn is_circle_like(&self) -> bool {
        self.ranks == [1, 1]
    }
}

impl std::fmt::Display for BettiVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.ranks.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// F₂ Betti numbers by column reduction of the boundary matrices.
///
/// Dimensions are reduced from the top down. A simplex that is the pivot row
/// of a reduced column one dimension up has a column that reduces to zero, so
/// it is skipped ("clearing").
pub fn betti(complex: &SimplicialComplex) -> BettiVector {
    let top = match complex.dimension() {
        Some(d) => d,
        None => return BettiVector::new(vec![]),
    };
    // rank[k] = rank of ∂_k : C_k -> C_{k-1}; rank[0] = rank[top+1] = 0.
    let mut rank = vec![0usize; top + 2];
    let mut cleared: Vec<bool> = Vec::new();
    for k in (1..=top).rev() {
        let cols = &complex.levels[k];
        let rows = &complex.levels[k - 1];
        let (r, pivots) = reduce(cols, rows, &cleared);
        rank[k] = r;
        cleared = pivots;
    }
    let ranks = (0..=top)
        .map(|k| complex.levels[k].len() - rank[k] - rank[k + 1])
        .collect();
    let b = BettiVector::new(ranks);
    debug_assert_eq!(b.euler, complex.euler_characteristic());
    b
}

/// Reduces `∂ : cols -> rows`. Returns its rank and, per row, whether the row
/// is a pivot.
fn reduce(cols: &Level, rows: &Level, cleared: &[bool]) -> (usize, Vec<bool>) {
    const NONE: u32 = u32::MAX;
    let mut owner = vec![NONE; rows.len()];
    // Reduced column stored under its pivot row.
    let mut stored: Vec<Box<[u32]>> = Vec::new();
    let mut col: Vec<u32> = Vec::new();
    let mut scratch: Vec<u32> = Vec::new();
    let mut face: Vec<u32> = Vec::with_capacity(cols.width);
    let mut rank = 0;
    for j in 0..cols.len() {
        if cleared.get(j).copied().unwrap_or(false) {
            continue;
        }
        col.clear();
        let simplex = cols.get(j);
        for skip in 0..simplex.len() {
            face.clear();
            face.extend(
                simplex
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v),
            );
            col.push(rows.find(&face).expect("complex is closed under faces") as u32);
        }
        col.sort_unstable();
        while let Some(&low) = col.last() {
            let o = owner[low as usize];
            if o == NONE {
                owner[low as usize] = stored.len() as u32;
                stored.push(col.as_slice().into());
                rank += 1;
                break;
            }
            symmetric_difference(&col, &stored[o as usize], &mut scratch);
            std::mem::swap(&mut col, &mut scratch);
        }
    }
    (rank, owner.into_iter().map(|o| o != NONE).collect())
}

fn symmetric_difference(a: &[u32], b: &[u32], out: &mut Vec<u32>) {
    out.clear();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
}

/// Components of the 1-skeleton.
pub fn connected_components(complex: &SimplicialComplex) -> usize {
    let n = complex.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    let mut components = n;
    for e in complex.simplices(1) {
        let (a, b) = (
            find(&mut parent, e[0] as usize),
            find(&mut parent, e[1] as usize),
        );
        if a != b {
            parent[a.max(b)] = a.min(b);
            components -= 1;
        }
    }
    components
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain_poset(k: usize) -> FinitePoset {
        let labels = (0..k).map(|i| i.to_string()).collect();
        FinitePoset::from_relation(labels, |a, b| a < b).unwrap()
    }

    #[test]
    fn simplex_from_chain() {
        let c = order_complex(&chain_poset(3)).unwrap();
        assert_eq!(c.counts(), vec![3, 3, 1]);
        assert!(c.contains(&[0, 1, 2]));
        assert_eq!(betti(&c).ranks, vec![1, 0]);
    }

    #[test]
    fn antichain_is_discrete() {
        let labels = (0..4).map(|i| i.to_string()).collect();
        let p = FinitePoset::from_relation(labels, |_, _| false).unwrap();
        let c = order_complex(&p).unwrap();
        assert_eq!(c.counts(), vec![4]);
        assert_eq!(betti(&c).ranks, vec![4, 0]);
        assert_eq!(connected_components(&c), 4);
    }

    #[test]
    fn hollow_triangle() {
        let c =
            SimplicialComplex::from_simplices(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let b = betti(&c);
        assert_eq!(b.ranks, vec![1, 1]);
        assert_eq!(b.euler, 0);
    }

    #[test]
    fn sphere_has_b2() {
        let tetra = vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]];
        let c = SimplicialComplex::from_simplices(4, tetra).unwrap();
        assert_eq!(betti(&c).ranks, vec![1, 0, 1]);
    }

    #[test]
    fn guardrail() {
        let p = chain_poset(10);
        assert_eq!(p.chain_count(), 1023);
        assert!(matches!(
            order_complex_with_limit(&p, 1000),
            Err(Error::TooLarge {
                count: 1023,
                limit: 1000
            })
        ));
    }

    #[test]
    fn rejects_cycles() {
        let labels = vec!["a".into(), "b".into()];
        assert!(FinitePoset::from_covers(labels, &[(0, 1), (1, 0)]).is_err());
    }
}
