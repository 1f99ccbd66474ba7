//! Exhaustive and sampled checks of the structural claims, one per criterion,
//! plus a threshold-recomputation reference for PH0 and PH1.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::fiber_tree::{
    gamma_metrics, in_br_prime, in_br_prime_direct, is_simple_cycle, kturn_loop, membership,
    sample_fiber, signature_walk, verify_path_in_fiber, NervePoset, NerveVertex, StarFiberProblem,
};
use crate::graph::{build_graph, critical_value_sequence, Graph, Shape, VertexFunction};
use crate::homology::{betti, order_complex_with_limit, DEFAULT_MAX_SIMPLICES};
use crate::persistence::{ph1_cycle, sublevel_ph0, PersistenceDiagram, PersistencePoint};
use crate::strings::{
    classify_f, comma_fiber, enumerate_strings, glb, leq, move_f1, retraction_r, CellularString,
    Octagon, Selector, StringPoset,
};
use crate::{Result, Value};

/// Outcome of one criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub id: u8,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
    pub witness: Option<String>,
    pub elapsed: Duration,
    pub budget: Duration,
}

/// Criteria whose failure is a property of the mathematics, not of the
/// implementation: `f` is not monotone on `Str`.
pub const KNOWN_UNATTAINABLE: &[u8] = &[5];

/// Runs `body`, then records the time and compares it with `budget`.
fn timed(
    id: u8,
    name: &'static str,
    budget: Duration,
    body: impl FnOnce() -> Result<(bool, String, Option<String>)>,
) -> Check {
    let start = Instant::now();
    let (pass, detail, witness) = match body() {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}"), None),
    };
    let elapsed = start.elapsed();
    let (pass, detail) = if elapsed > budget {
        (false, format!("{detail}; over time budget"))
    } else {
        (pass, detail)
    };
    Check {
        id,
        name,
        pass,
        detail,
        witness,
        elapsed,
        budget,
    }
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

/// `(N, M)` with `M >= 1` and `2M < N <= max_n`.
pub fn parameter_pairs(max_n: usize) -> Vec<(usize, usize)> {
    (3..=max_n)
        .flat_map(|n| (1..).take_while(move |m| 2 * m < n).map(move |m| (n, m)))
        .collect()
}

/// Betti numbers of the order complex of `Str(N, M)` are `(1, 1)`.
pub fn check_str_circle(max_n: usize, limit: u64) -> Check {
    timed(1, "Str(N,M) is homologically a circle", secs(120), || {
        let mut rows = Vec::new();
        for (n, m) in parameter_pairs(max_n) {
            let poset = enumerate_strings(n, m)?;
            let k = order_complex_with_limit(&poset.to_finite_poset(), limit)?;
            let b = betti(&k);
            if !b.is_circle_like() {
                return Ok((
                    false,
                    format!("Str({n},{m}) has Betti {b}"),
                    Some(format!("Str({n},{m})")),
                ));
            }
            rows.push(format!("({n},{m})"));
        }
        Ok((
            true,
            format!("Betti (1,1) for {} pairs, N <= {max_n}", rows.len()),
            None,
        ))
    })
}

/// Betti numbers of the ten contractible sub-posets are `(1, 0)`.
pub fn check_contractible(max_n: usize) -> Check {
    timed(2, "sub-posets are homologically points", secs(120), || {
        let mut count = 0;
        for (n, m) in parameter_pairs(max_n) {
            let poset = enumerate_strings(n, m)?;
            for sel in Selector::CONTRACTIBLE {
                let sub = poset.subposet(sel);
                let b = betti(&order_complex_with_limit(
                    &sub.to_finite_poset(),
                    DEFAULT_MAX_SIMPLICES,
                )?);
                if !b.is_point_like() {
                    let w = format!("{sel} in Str({n},{m}), {} elements", sub.len());
                    return Ok((false, format!("Betti {b}"), Some(w)));
                }
                count += 1;
            }
        }
        Ok((
            true,
            format!("Betti (1,0) for {count} sub-posets, N <= {max_n}"),
            None,
        ))
    })
}

/// Maximal elements, graded chains, and the glb property.
pub fn check_structure(max_n: usize) -> Check {
    timed(3, "maximal elements, chain length, glb", secs(120), || {
        let mut strings = 0;
        for (n, m) in parameter_pairs(max_n) {
            let poset = enumerate_strings(n, m)?;
            let top = n - 2 * m;
            let els = poset.elements();
            let maximal: BTreeSet<usize> = poset.maximal().into_iter().collect();
            for (i, s) in els.iter().enumerate() {
                if maximal.contains(&i) != (s.dim() == top) {
                    return Ok((
                        false,
                        "maximal iff dimension N-2M".into(),
                        Some(s.to_string()),
                    ));
                }
            }
            // Graded by dimension with minima in dimension 0 and maxima in
            // dimension N-2M: every maximal chain has N-2M steps.
            let covers = poset.covers();
            let mut has_lower = vec![false; els.len()];
            for &(a, b) in &covers {
                has_lower[b] = true;
                if els[b].dim() != els[a].dim() + 1 {
                    return Ok((
                        false,
                        "covers raise dimension by one".into(),
                        Some(format!("{} < {}", els[a], els[b])),
                    ));
                }
            }
            if let Some(i) = (0..els.len()).find(|&i| !has_lower[i] && els[i].dim() != 0) {
                return Ok((
                    false,
                    "minimal elements have dimension 0".into(),
                    Some(els[i].to_string()),
                ));
            }
            for s in els {
                let above: Vec<CellularString> = maximal
                    .iter()
                    .map(|&i| els[i].clone())
                    .filter(|t| leq(s, t))
                    .collect();
                if glb(&above).ok().as_ref() != Some(s) {
                    return Ok((
                        false,
                        "s is the glb of the maximal elements above it".into(),
                        Some(s.to_string()),
                    ));
                }
            }
            strings += els.len();
        }
        Ok((true, format!("{strings} strings, N <= {max_n}"), None))
    })
}

/// Iterates `F1` to its fixed point; `None` if no fixed point within `bound` steps.
pub fn f1_limit(s: &CellularString, bound: usize) -> Option<(CellularString, usize)> {
    let mut cur = s.clone();
    for step in 0..=bound {
        let next = move_f1(&cur).ok()?;
        if next == cur {
            return Some((cur, step));
        }
        cur = next;
    }
    None
}

/// `F1` is monotone on `Str00` and `Str0X` and its iterates land on the
/// strings starting `0X`; `R` is idempotent and below the identity.
pub fn check_moves(max_n: usize) -> Check {
    timed(
        4,
        "F1 monotone and stabilizing, R idempotent",
        secs(120),
        || {
            let mut pairs = 0usize;
            for (n, m) in parameter_pairs(max_n) {
                let poset = enumerate_strings(n, m)?;
                for sel in [Selector::Closure00, Selector::Closure11] {
                    for s in poset.subposet(sel).elements() {
                        let r = retraction_r(s)?;
                        if !leq(&r, s) || retraction_r(&r)? != r {
                            return Ok((
                                false,
                                "R(s) <= s and R(R(s)) = R(s)".into(),
                                Some(s.to_string()),
                            ));
                        }
                    }
                }
                if n <= 2 * m + 1 {
                    continue;
                }
                for sel in [Selector::Str00, Selector::Str0X] {
                    let dom = poset.subposet(sel);
                    let image: Vec<CellularString> =
                        dom.elements().iter().map(move_f1).collect::<Result<_>>()?;
                    for (i, s) in dom.elements().iter().enumerate() {
                        if !sel.contains(&image[i]) {
                            return Ok((
                                false,
                                format!("F1 maps {sel} into itself"),
                                Some(s.to_string()),
                            ));
                        }
                        for (j, t) in dom.elements().iter().enumerate() {
                            if i != j && leq(s, t) {
                                pairs += 1;
                                if !leq(&image[i], &image[j]) {
                                    let w =
                                        format!("{s} <= {t} but F1: {} vs {}", image[i], image[j]);
                                    return Ok((false, format!("F1 monotone on {sel}"), Some(w)));
                                }
                            }
                        }
                    }
                    let stable: BTreeSet<CellularString> = dom
                        .elements()
                        .iter()
                        .map(|s| {
                            f1_limit(s, 4 * n * n)
                                .map(|(t, _)| t)
                                .ok_or_else(|| s.to_string())
                        })
                        .collect::<std::result::Result<_, _>>()
                        .unwrap_or_default();
                    let second: BTreeSet<CellularString> = dom
                        .elements()
                        .iter()
                        .filter(|s| s.symbols()[1] == crate::strings::Symbol::X)
                        .cloned()
                        .collect();
                    if stable != second {
                        return Ok((
                            false,
                            format!("image of F1^k on {sel} is {sel}^(2)"),
                            Some(format!("Str({n},{m})")),
                        ));
                    }
                }
            }
            Ok((
                true,
                format!("{pairs} comparable pairs checked, N <= {max_n}"),
                None,
            ))
        },
    )
}

/// The expected comma fiber `f/q` as a sub-poset selector.
pub fn expected_comma(q: Octagon) -> Selector {
    match q {
        Octagon::ZeroX => Selector::Str0X,
        Octagon::X1 => Selector::StrX1,
        Octagon::X0 => Selector::StrX0,
        Octagon::OneX => Selector::Str1X,
        Octagon::ZeroZero => Selector::Closure00,
        Octagon::OneOne => Selector::Closure11,
        Octagon::Zero => Selector::Str0,
        Octagon::One => Selector::Str1,
    }
}

/// First `s < t` with `f(s) > f(t)` or incomparable.
pub fn f_order_violation(poset: &StringPoset) -> Option<(CellularString, CellularString)> {
    let els = poset.elements();
    let fs: Vec<Octagon> = els.iter().map(classify_f).collect();
    for (i, s) in els.iter().enumerate() {
        for (j, t) in els.iter().enumerate() {
            if i != j && leq(s, t) && !fs[i].leq(fs[j]) {
                return Some((s.clone(), t.clone()));
            }
        }
    }
    None
}

type Membership = fn(&CellularString) -> bool;

/// `f` is total, its comma fibers are the expected sub-posets, and it is
/// monotone. The last part fails.
pub fn check_octagon(max_n: usize) -> Check {
    timed(
        5,
        "f: Str -> Q total, monotone, comma fibers",
        secs(120),
        || {
            let class_sels: [(Octagon, Membership); 6] = [
                (Octagon::ZeroX, |s| Selector::Str0X.contains(s)),
                (Octagon::X1, |s| Selector::StrX1.contains(s)),
                (Octagon::X0, |s| Selector::StrX0.contains(s)),
                (Octagon::OneX, |s| Selector::Str1X.contains(s)),
                (Octagon::ZeroZero, |s| Selector::Str00.contains(s)),
                (Octagon::OneOne, |s| Selector::Str11.contains(s)),
            ];
            let mut total = true;
            let mut commas = true;
            let mut violation: Option<(CellularString, CellularString)> = None;
            let mut notes = Vec::new();
            for (n, m) in parameter_pairs(max_n) {
                let poset = enumerate_strings(n, m)?;
                for s in poset.elements() {
                    let hits: Vec<Octagon> = class_sels
                        .iter()
                        .filter(|(_, c)| c(s))
                        .map(|&(q, _)| q)
                        .collect();
                    let expected = match hits.as_slice() {
                        [] if Selector::Str0.contains(s) => Octagon::Zero,
                        [] if Selector::Str1.contains(s) => Octagon::One,
                        [q] => *q,
                        _ => {
                            total = false;
                            notes.push(format!("{s} in {} classes", hits.len()));
                            continue;
                        }
                    };
                    if classify_f(s) != expected {
                        total = false;
                        notes.push(format!("f({s}) = {}", classify_f(s)));
                    }
                }
                for q in Octagon::ALL {
                    let fiber = comma_fiber(q, &poset);
                    let want = poset.subposet(expected_comma(q));
                    if fiber.elements() != want.elements() {
                        commas = false;
                        notes.push(format!(
                            "f/{q} differs from {} in Str({n},{m})",
                            expected_comma(q)
                        ));
                    }
                }
                if violation.is_none() {
                    violation = f_order_violation(&poset);
                }
            }
            let witness = violation
                .as_ref()
                .map(|(s, t)| format!("{s} <= {t} but f: {} vs {}", classify_f(s), classify_f(t)));
            let detail = format!(
                "total: {}, comma fibers: {}, order-preserving: {}{}",
                if total { "yes" } else { "no" },
                if commas { "yes" } else { "no" },
                if violation.is_none() { "yes" } else { "no" },
                if notes.is_empty() {
                    String::new()
                } else {
                    format!(" ({})", notes[0])
                },
            );
            Ok((total && commas && violation.is_none(), detail, witness))
        },
    )
}

/// The K-turn loop lies in the fiber and walks once around the hexagon.
pub fn check_kturn() -> Check {
    timed(
        6,
        "K-turn loop in the fiber, hexagon walk",
        secs(10),
        || {
            let problem = StarFiberProblem::new(&[2, 2, 2])?;
            let path = kturn_loop(&problem, [0, 1, 2])?;
            let check = verify_path_in_fiber(&path, &problem.diagram(), 100);
            if !check.pass {
                let f = check.first_failure.expect("failing check has a witness");
                return Ok((
                    false,
                    format!("left the fiber on segment {} step {}", f.segment, f.step),
                    Some(fmt_values(&f.values)),
                ));
            }
            let walk = match signature_walk(&problem, &path) {
                Ok(w) => w,
                Err(i) => {
                    return Ok((
                        false,
                        format!("waypoint {i} has no nerve signature"),
                        Some(fmt_values(&path.waypoints()[i])),
                    ))
                }
            };
            let names: Vec<String> = walk.iter().map(ToString::to_string).collect();
            let ok = path.len() >= 12 && path.is_closed() && is_simple_cycle(&walk, 6);
            Ok((
                ok,
                format!(
                    "{} waypoints, {} points checked, walk {}",
                    path.len(),
                    check.checked,
                    names.join(" ")
                ),
                None,
            ))
        },
    )
}

/// Γ counts for `n = 3..=8` branches.
pub fn check_star_formula() -> Check {
    timed(
        7,
        "nerve graph counts and b1 = n^2 - 3n + 1",
        secs(5),
        || {
            let mut b1s = Vec::new();
            for n in 3..=8usize {
                let g = gamma_metrics(&NervePoset::new(n));
                let (ni, nn) = (n as i64, n * n);
                let ok = g.vertices == 2 * n
                    && g.edges == nn - n
                    && g.degree == Some(n - 1)
                    && g.euler == 3 * ni - ni * ni
                    && g.betti.ranks == vec![1, nn + 1 - 3 * n]
                    && g.dimension == 1;
                if !ok {
                    return Ok((false, format!("n = {n}: {g:?}"), Some(format!("n = {n}"))));
                }
                b1s.push(g.betti.b(1).to_string());
            }
            Ok((true, format!("b1 = {} for n = 3..8", b1s.join(", ")), None))
        },
    )
}

/// Membership statistics of sampled fiber points.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CoverStats {
    pub samples: usize,
    pub uncovered: usize,
    /// Membership set sizes and how often each occurred.
    pub patterns: BTreeMap<usize, usize>,
    /// Points with an intersection pattern other than one branch or all but one.
    pub unexpected: usize,
    /// Disagreements of `Br'_q` with its direct description.
    pub prime_mismatches: usize,
    pub witness: Option<Vec<Value>>,
}

pub fn cover_stats(problem: &StarFiberProblem, count: usize, seed: u64) -> Result<CoverStats> {
    let n = problem.branch_count();
    let mut stats = CoverStats::default();
    for z in sample_fiber(problem, count, seed)? {
        stats.samples += 1;
        let members = membership(problem, &z);
        *stats.patterns.entry(members.len()).or_default() += 1;
        let bad = if members.is_empty() {
            stats.uncovered += 1;
            true
        } else if NerveVertex::from_membership(n, &members).is_none() {
            stats.unexpected += 1;
            true
        } else {
            false
        };
        for q in 0..n {
            if in_br_prime(problem, q, &z)? != in_br_prime_direct(problem, q, &z)? {
                stats.prime_mismatches += 1;
            }
        }
        if bad && stats.witness.is_none() {
            stats.witness = Some(z.values().to_vec());
        }
    }
    Ok(stats)
}

/// `10^4` samples per `n` in `{3, 4, 5}` are covered with nerve-shaped overlaps.
pub fn check_cover(samples: usize) -> Check {
    timed(
        8,
        "sampled fiber points are covered by the Br_q",
        secs(60),
        || {
            let mut parts = Vec::new();
            for n in 3..=5usize {
                let problem = StarFiberProblem::new(&vec![2; n])?;
                let s = cover_stats(&problem, samples, 0x5eed + n as u64)?;
                if s.uncovered > 0 || s.unexpected > 0 || s.prime_mismatches > 0 {
                    return Ok((
                        false,
                        format!("n = {n}: {s:?}"),
                        s.witness.as_deref().map(fmt_values),
                    ));
                }
                parts.push(format!("n={n}: {:?}", s.patterns));
            }
            Ok((
                true,
                format!(
                    "{samples} samples each; membership sizes {}",
                    parts.join(", ")
                ),
                None,
            ))
        },
    )
}

/// Reference PH0: recompute sublevel components at every threshold. When
/// components meet, the one containing the earliest `(value, index)` vertex
/// survives.
pub fn reference_ph0(z: &VertexFunction) -> PersistenceDiagram {
    let g = z.graph();
    let vals = z.values();
    let mut thresholds = vals.to_vec();
    thresholds.sort();
    thresholds.dedup();
    // Elder vertex of each vertex's component at the previous threshold.
    let mut elder: Vec<Option<usize>> = vec![None; vals.len()];
    let rank = |v: usize| (vals[v], v);
    let mut points = Vec::new();
    for &t in &thresholds {
        let comps = sublevel_components(g, vals, t);
        let mut next = vec![None; vals.len()];
        for comp in comps {
            let olds: BTreeSet<usize> = comp.iter().filter_map(|&v| elder[v]).collect();
            let oldest = comp
                .iter()
                .copied()
                .min_by_key(|&v| rank(v))
                .expect("components are non-empty");
            for &o in &olds {
                if o != oldest && vals[o] < t {
                    points.push(PersistencePoint::finite(vals[o], t));
                }
            }
            for &v in &comp {
                next[v] = Some(oldest);
            }
        }
        elder = next;
    }
    let survivors: BTreeSet<usize> = elder.iter().flatten().copied().collect();
    points.extend(
        survivors
            .into_iter()
            .map(|o| PersistencePoint::essential(vals[o])),
    );
    PersistenceDiagram::new(0, points)
}

/// Reference PH1 of a graph: a class is born whenever `E - V + C` increases.
pub fn reference_ph1(z: &VertexFunction) -> PersistenceDiagram {
    let g = z.graph();
    let vals = z.values();
    let mut thresholds = vals.to_vec();
    thresholds.sort();
    thresholds.dedup();
    let mut prev = 0usize;
    let mut points = Vec::new();
    for &t in &thresholds {
        let v = vals.iter().filter(|&&x| x <= t).count();
        let e = g
            .edges()
            .iter()
            .filter(|[a, b]| vals[*a] <= t && vals[*b] <= t)
            .count();
        let c = sublevel_components(g, vals, t).len();
        let b1 = e + c - v;
        for _ in prev..b1 {
            points.push(PersistencePoint::essential(t));
        }
        prev = b1;
    }
    PersistenceDiagram::new(1, points)
}

fn sublevel_components(g: &Graph, vals: &[Value], t: Value) -> Vec<Vec<usize>> {
    let mut seen = vec![false; vals.len()];
    let mut comps = Vec::new();
    for s in 0..vals.len() {
        if seen[s] || vals[s] > t {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if !seen[w] && vals[w] <= t {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comps.push(comp);
    }
    comps
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    // Heap's algorithm.
    let mut c = vec![0usize; n];
    out.push(perm.clone());
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            out.push(perm.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Shapes with at most `max_n` vertices covered by the oracle comparison.
pub fn oracle_shapes(max_n: usize) -> Vec<Shape> {
    let mut shapes: Vec<Shape> = (3..=max_n).map(Shape::Cycle).collect();
    shapes.extend((3..=max_n).map(Shape::Path));
    // Stars: nondecreasing branch lengths >= 2, at least three branches.
    fn stars(budget: usize, min: usize, acc: &mut Vec<usize>, out: &mut Vec<Shape>) {
        if acc.len() >= 3 {
            out.push(Shape::Star(acc.clone()));
        }
        for len in min..=budget {
            acc.push(len);
            stars(budget - len, len, acc, out);
            acc.pop();
        }
    }
    stars(max_n.saturating_sub(1), 2, &mut Vec::new(), &mut shapes);
    shapes
}

/// The elder-rule engine agrees with the reference on every permutation of
/// `1..=N`.
pub fn check_oracle(max_n: usize) -> Check {
    timed(
        9,
        "elder rule agrees with threshold recomputation",
        secs(300),
        || {
            let mut cases = 0usize;
            let mut names = Vec::new();
            for shape in oracle_shapes(max_n) {
                let graph = Arc::new(build_graph(&shape)?);
                let n = graph.vertex_count();
                for perm in permutations(n) {
                    let values = perm
                        .iter()
                        .map(|&p| Value::from_integer(p as i64 + 1))
                        .collect();
                    let z = VertexFunction::new(Arc::clone(&graph), values)?;
                    let fast = sublevel_ph0(&z)?;
                    let slow = reference_ph0(&z);
                    let ph1_ok = ph1_cycle(&z) == reference_ph1(&z);
                    if fast != slow || !ph1_ok {
                        let w = format!("{shape} {}", fmt_values(z.values()));
                        return Ok((false, format!("engine {fast}, reference {slow}"), Some(w)));
                    }
                    cases += 1;
                }
                names.push(shape.to_string());
            }
            Ok((
                true,
                format!("{cases} functions on {}", names.join(", ")),
                None,
            ))
        },
    )
}

/// Critical value sequences on random typical cycles have length `2|PH0|`
/// and alternate.
pub fn check_extrema_lemma(samples: usize, max_n: usize, seed: u64) -> Check {
    timed(10, "2|PH0| alternating extrema on cycles", secs(60), || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let graphs: Vec<Arc<Graph>> = (3..=max_n)
            .map(|n| build_graph(&Shape::Cycle(n)).map(Arc::new))
            .collect::<Result<_>>()?;
        for _ in 0..samples {
            let g = &graphs[rng.gen_range(0..graphs.len())];
            let n = g.vertex_count();
            let values = sample(&mut rng, 16 * n, n)
                .into_iter()
                .map(|j| Value::new(j as i64, 7))
                .collect();
            let z = VertexFunction::new(Arc::clone(g), values)?;
            let cvs = critical_value_sequence(&z)?;
            let ph0 = sublevel_ph0(&z)?;
            if cvs.len() != 2 * ph0.len() || !cvs.alternates_cyclically() {
                let w = format!("cycle({n}) {}", fmt_values(z.values()));
                return Ok((
                    false,
                    format!("{} extrema, |PH0| = {}", cvs.len(), ph0.len()),
                    Some(w),
                ));
            }
        }
        Ok((
            true,
            format!("{samples} typical points on cycles with 3..={max_n} vertices"),
            None,
        ))
    })
}

pub fn fmt_values(values: &[Value]) -> String {
    let parts: Vec<String> = values.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

/// Parameters of [`run_all`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Suite {
    pub max_simplices: u64,
    pub cover_samples: usize,
    pub lemma_samples: usize,
}

impl Default for Suite {
    fn default() -> Self {
        Suite {
            max_simplices: DEFAULT_MAX_SIMPLICES,
            cover_samples: 10_000,
            lemma_samples: 10_000,
        }
    }
}

/// All ten checks, run on separate threads, reported in order.
pub fn run_all(suite: Suite) -> Vec<Check> {
    let jobs: Vec<Box<dyn FnOnce() -> Check + Send>> = vec![
        Box::new(move || check_str_circle(9, suite.max_simplices)),
        Box::new(|| check_contractible(8)),
        Box::new(|| check_structure(8)),
        Box::new(|| check_moves(8)),
        Box::new(|| check_octagon(8)),
        Box::new(check_kturn),
        Box::new(check_star_formula),
        Box::new(move || check_cover(suite.cover_samples)),
        Box::new(|| check_oracle(7)),
        Box::new(move || check_extrema_lemma(suite.lemma_samples, 12, 0x1e33a)),
    ];
    std::thread::scope(|scope| {
        let handles: Vec<_> = jobs.into_iter().map(|job| scope.spawn(job)).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("check panicked"))
            .collect()
    })
}
