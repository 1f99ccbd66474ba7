//! Sublevel-set persistence on 1-dimensional complexes and the topology of
//! its fibers.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: paths, cycles and star trees, vertex functions, value digraphs
//!   and critical coordinates.
//! * [`persistence`]: PH₀ by the elder rule, PH₁ of a cycle, fiber membership.
//! * [`strings`]: circular cellular strings, the poset `Str(N,M)`, its
//!   sub-posets, the moves `F₁`/`F_ℓ`, the retraction `R` and the map to the
//!   octagon poset.
//! * [`homology`]: finite posets, order complexes and Betti numbers over F₂.
//! * [`fiber_tree`]: the cover of a star-tree fiber by the `Br_q`, its nerve,
//!   the K-turn loop and fiber sampling.
//! * [`ngon`]: components of the fiber over an N-gon with `N = 2M+1`.
//! * [`io`] and [`dot`]: JSON documents and Graphviz output.
//! * [`certify`]: the end-to-end checks run by `fiberscope verify-all`.

pub mod certify;
pub mod dot;
pub mod error;
pub mod fiber_tree;
pub mod graph;
pub mod homology;
pub mod io;
pub mod ngon;
pub mod persistence;
pub mod strings;

/// Exact filtration value.
pub type Value = num_rational::Ratio<i64>;

pub use error::{Error, Result};
pub use fiber_tree::{NervePoset, PLPath, StarFiberProblem};
pub use graph::{CriticalValueSequence, Digraph, Graph, Shape, VertexFunction};
pub use homology::{BettiVector, FinitePoset, SimplicialComplex};
pub use persistence::{Death, PersistenceDiagram, PersistencePoint};
pub use strings::{CellularString, Octagon, Selector, StringPoset, Symbol};

/// Shorthand for an integer-valued [`Value`].
pub fn int(n: i64) -> Value {
    Value::from_integer(n)
}

/// Shorthand for `num / den`.
///
/// # Panics
/// If `den == 0`.
pub fn rat(num: i64, den: i64) -> Value {
    Value::new(num, den)
}
