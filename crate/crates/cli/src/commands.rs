use std::collections::BTreeSet;
use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use fiberscope_core::certify::{
    cover_stats, f1_limit, fmt_values, run_all, Suite, KNOWN_UNATTAINABLE,
};
use fiberscope_core::dot::{gamma_dot, hasse_dot};
use fiberscope_core::fiber_tree::{
    gamma_metrics, is_simple_cycle, kturn_loop, nerve, signature_walk, verify_path_in_fiber,
};
use fiberscope_core::homology::{betti, order_complex_with_limit, DEFAULT_MAX_SIMPLICES};
use fiberscope_core::io::{
    parse_value, BettiDoc, DiagramDoc, FunctionDoc, PLPathDoc, PathCheckDoc, Rational,
};
use fiberscope_core::ngon::{default_diagram, ngon_components};
use fiberscope_core::persistence::{ph1_cycle, sublevel_ph0};
use fiberscope_core::strings::{
    enumerate_strings, leq, move_f1, CellularString, Selector, StringPoset, Symbol,
};
use fiberscope_core::StarFiberProblem;
use serde_json::json;

use crate::report::{Builder, Outcome};

const MAX_SIMPLICES_VAR: &str = "FIBERSCOPE_MAX_SIMPLICES";

fn max_simplices() -> Result<u64> {
    match std::env::var(MAX_SIMPLICES_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("{MAX_SIMPLICES_VAR}={v:?} is not a count")),
        Err(_) => Ok(DEFAULT_MAX_SIMPLICES),
    }
}

fn read_input(path: Option<&Path>) -> Result<String> {
    let mut text = String::new();
    match path {
        None => std::io::stdin()
            .read_to_string(&mut text)
            .context("reading stdin")?,
        Some(p) if p == Path::new("-") => std::io::stdin()
            .read_to_string(&mut text)
            .context("reading stdin")?,
        Some(p) => {
            return std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))
        }
    };
    Ok(text)
}

pub fn persistence(input: Option<&Path>) -> Result<Outcome> {
    let text = read_input(input)?;
    let doc: FunctionDoc = serde_json::from_str(&text).context("malformed function document")?;
    let z = doc.to_function()?;
    let mut b = Builder::new("persistence", serde_json::to_value(&doc)?);
    b.result("ph0", DiagramDoc::new(&sublevel_ph0(&z)?));
    if z.graph().is_cycle() {
        b.result("ph1", DiagramDoc::new(&ph1_cycle(&z)));
    }
    b.result("typical", fiberscope_core::graph::is_typical(&z));
    Ok(b.finish(None))
}

fn poset_betti(poset: &StringPoset, limit: u64) -> Result<fiberscope_core::BettiVector> {
    Ok(betti(&order_complex_with_limit(
        &poset.to_finite_poset(),
        limit,
    )?))
}

pub fn strings(
    n: usize,
    m: usize,
    homology: bool,
    subposets: &[String],
    moves: bool,
) -> Result<Outcome> {
    let selectors: Vec<Selector> = subposets
        .iter()
        .map(|s| s.parse())
        .collect::<Result<_, _>>()?;
    let limit = if homology || !selectors.is_empty() {
        max_simplices()?
    } else {
        DEFAULT_MAX_SIMPLICES
    };
    let poset = enumerate_strings(n, m)?;
    let mut b = Builder::new(
        "str",
        json!({"N": n, "M": m, "homology": homology, "subposets": subposets, "moves": moves}),
    );
    b.result("elements", poset.len());
    b.result("maximal", poset.maximal().len());
    b.result("chain_length", poset.to_finite_poset().height());

    let subs: Vec<StringPoset> = selectors.iter().map(|&s| poset.subposet(s)).collect();
    // Independent order complexes; results are collected in argument order.
    let (whole, parts) = std::thread::scope(|scope| {
        let whole = homology.then(|| scope.spawn(|| poset_betti(&poset, limit)));
        let parts: Vec<_> = subs
            .iter()
            .map(|p| scope.spawn(move || poset_betti(p, limit)))
            .collect();
        (
            whole.map(|h| h.join().expect("homology thread")),
            parts
                .into_iter()
                .map(|h| h.join().expect("homology thread"))
                .collect::<Vec<_>>(),
        )
    });
    if let Some(bv) = whole {
        let bv = bv?;
        b.assert(
            format!("Str({n},{m}) has Betti (1,1)"),
            bv.is_circle_like(),
            Some(format!("{:?}", bv.ranks)),
        );
        b.result("betti", BettiDoc::new(&bv));
    }
    let mut rows = Vec::new();
    for ((sel, sub), bv) in selectors.iter().zip(&subs).zip(parts) {
        let bv = bv?;
        if !sub.is_empty() {
            b.assert(
                format!("{sel} has Betti (1,0)"),
                bv.is_point_like(),
                Some(format!("{:?}", bv.ranks)),
            );
        }
        rows.push(json!({"selector": sel.to_string(), "elements": sub.len(), "betti": BettiDoc::new(&bv)}));
    }
    if !selectors.is_empty() {
        b.result("subposets", rows);
    }
    if moves {
        let mut rows = Vec::new();
        if n > 2 * m + 1 {
            for sel in [Selector::Str00, Selector::Str0X] {
                rows.push(f1_report(&mut b, &poset, sel)?);
            }
        }
        b.result("f1", rows);
    }
    Ok(b.finish(Some(hasse_dot(&poset))))
}

fn f1_report(b: &mut Builder, poset: &StringPoset, sel: Selector) -> Result<serde_json::Value> {
    let dom = poset.subposet(sel);
    let n = poset.n();
    let image: Vec<CellularString> = dom
        .elements()
        .iter()
        .map(move_f1)
        .collect::<Result<_, _>>()?;
    let mut violation = None;
    'outer: for (i, s) in dom.elements().iter().enumerate() {
        for (j, t) in dom.elements().iter().enumerate() {
            if i != j && leq(s, t) && !leq(&image[i], &image[j]) {
                violation = Some(format!("{s} <= {t} but F1: {} vs {}", image[i], image[j]));
                break 'outer;
            }
        }
    }
    b.assert(
        format!("F1 is order-preserving on {sel}"),
        violation.is_none(),
        violation,
    );

    let mut steps = 0;
    let mut stable = BTreeSet::new();
    let mut stuck = None;
    for s in dom.elements() {
        match f1_limit(s, 4 * n * n) {
            Some((t, k)) => {
                steps = steps.max(k);
                stable.insert(t);
            }
            None => {
                stuck.get_or_insert_with(|| s.to_string());
            }
        }
    }
    b.assert(format!("F1 stabilizes on {sel}"), stuck.is_none(), stuck);
    let second: BTreeSet<CellularString> = dom
        .elements()
        .iter()
        .filter(|s| s.symbols()[1] == Symbol::X)
        .cloned()
        .collect();
    let extra = stable
        .symmetric_difference(&second)
        .next()
        .map(ToString::to_string);
    b.assert(
        format!("stable image of F1 on {sel} is its level-2 part"),
        extra.is_none(),
        extra,
    );
    Ok(
        json!({"subposet": sel.to_string(), "elements": dom.len(), "max_steps": steps, "stable_image": stable.len()}),
    )
}

pub fn ngon(
    n: Option<usize>,
    m: Option<usize>,
    diagram: Option<&Path>,
    max: Option<&str>,
) -> Result<Outcome> {
    let (p, default_max) = match diagram {
        Some(path) => {
            let doc: DiagramDoc = serde_json::from_str(&read_input(Some(path))?)
                .context("malformed diagram document")?;
            let p = doc.to_diagram()?;
            let top = p
                .points()
                .iter()
                .flat_map(|q| [Some(q.birth), q.death.finite()])
                .flatten()
                .max()
                .context("empty diagram")?;
            (p, top + fiberscope_core::int(1))
        }
        None => default_diagram(m.unwrap_or(2))?,
    };
    let m_eff = p.len();
    if let Some(m) = m {
        if m != m_eff {
            bail!("M = {m} but the diagram has {m_eff} points");
        }
    }
    if let Some(n) = n {
        if n != 2 * m_eff + 1 {
            bail!("N = {n} is not 2M + 1 = {}", 2 * m_eff + 1);
        }
    }
    let max = match max {
        Some(s) => parse_value(s)?,
        None => default_max,
    };
    let report = ngon_components(&p, max)?;
    let mut b = Builder::new(
        "ngon",
        json!({"N": report.n, "M": report.m, "diagram": DiagramDoc::new(&p), "max": Rational(max)}),
    );
    b.result("classes", report.class_count());
    let rows: Vec<_> = report
        .components
        .iter()
        .map(|c| {
            json!({
                "sequence": fiberscope_core::io::rationals(&c.sequence),
                "vertices": c.vertices,
                "edges": c.edges,
                "betti": BettiDoc::new(&c.betti),
            })
        })
        .collect();
    b.result("components", rows);
    b.assert("the diagram is realized", report.class_count() > 0, None);
    for c in &report.components {
        let name = format!("component {} is a circle", fmt_values(&c.sequence));
        let witness = match &c.failure {
            Some(v) => Some(format!("{} is outside the fiber", fmt_values(v))),
            None => Some(format!("{:?}", c.betti.ranks)),
        };
        b.assert(name, c.pass(), witness);
    }
    Ok(b.finish(None))
}

fn parse_lengths(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .with_context(|| format!("bad branch length {t:?}"))
        })
        .collect()
}

pub fn star(
    lengths: &str,
    nerve_flag: bool,
    kturn: bool,
    sample: Option<usize>,
    seed: u64,
) -> Result<Outcome> {
    let lengths = parse_lengths(lengths)?;
    let problem = StarFiberProblem::new(&lengths)?;
    let n = problem.branch_count();
    let mut b = Builder::new(
        "star",
        json!({"lengths": lengths, "nerve": nerve_flag, "kturn": kturn, "sample": sample, "seed": seed}),
    );
    b.result("diagram", DiagramDoc::new(&problem.diagram()));
    let poset = nerve(&problem);
    if nerve_flag || (!kturn && sample.is_none()) {
        let g = gamma_metrics(&poset);
        let expected = (n * n + 1) as i64 - 3 * n as i64;
        b.result(
            "gamma",
            json!({"vertices": g.vertices, "edges": g.edges, "degree": g.degree, "euler": g.euler, "betti": BettiDoc::new(&g.betti)}),
        );
        b.assert(
            format!("b1 of the nerve graph is n^2 - 3n + 1 = {expected}"),
            g.betti.b(1) as i64 == expected && g.betti.b(0) == 1,
            Some(format!("{:?}", g.betti.ranks)),
        );
    }
    if kturn {
        let path = kturn_loop(&problem, [0, 1, 2])?;
        let check = verify_path_in_fiber(&path, &problem.diagram(), 100);
        let witness = check.first_failure.as_ref().map(|f| {
            format!(
                "segment {} step {}: {}",
                f.segment,
                f.step,
                fmt_values(&f.values)
            )
        });
        b.assert("K-turn loop stays in the fiber", check.pass, witness);
        let walk = signature_walk(&problem, &path);
        let names: Option<Vec<String>> = walk
            .as_ref()
            .ok()
            .map(|w| w.iter().map(ToString::to_string).collect());
        let hexagon = walk.as_ref().is_ok_and(|w| is_simple_cycle(w, 6));
        let witness = match &walk {
            Err(i) => Some(format!(
                "waypoint {i} = {} has no nerve signature",
                fmt_values(&path.waypoints()[*i])
            )),
            Ok(_) => names.as_ref().map(|w| w.join(" ")),
        };
        b.assert("K-turn signature walk is a hexagon", hexagon, witness);
        b.result(
            "kturn",
            json!({"waypoints": path.len(), "checkpoints": path.checkpoints(), "check": PathCheckDoc::new(&check), "walk": names}),
        );
        b.result("kturn_path", PLPathDoc::new(&path));
    }
    if let Some(k) = sample {
        let s = cover_stats(&problem, k, seed)?;
        let witness = s.witness.as_deref().map(fmt_values);
        b.assert(
            "sampled points lie in some Br_q",
            s.uncovered == 0,
            witness.clone(),
        );
        b.assert(
            "overlaps are single branches or Br'_q patterns",
            s.unexpected == 0,
            witness,
        );
        b.assert(
            "Br'_q agrees with its direct description",
            s.prime_mismatches == 0,
            None,
        );
        b.result(
            "cover",
            json!({"samples": s.samples, "uncovered": s.uncovered, "unexpected": s.unexpected, "membership_sizes": s.patterns}),
        );
    }
    Ok(b.finish(Some(gamma_dot(&poset))))
}

pub fn verify_all(cover_samples: usize, lemma_samples: usize) -> Result<Outcome> {
    let suite = Suite {
        max_simplices: max_simplices()?,
        cover_samples,
        lemma_samples,
    };
    let mut b = Builder::new(
        "verify-all",
        json!({"max_simplices": suite.max_simplices, "cover_samples": cover_samples, "lemma_samples": lemma_samples}),
    );
    let checks = run_all(suite);
    let rows: Vec<_> = checks
        .iter()
        .map(|c| {
            json!({
                "id": c.id,
                "name": c.name,
                "pass": c.pass,
                "known_unattainable": KNOWN_UNATTAINABLE.contains(&c.id),
                "detail": c.detail,
                "witness": c.witness,
                "elapsed_ms": c.elapsed.as_millis() as u64,
                "budget_ms": c.budget.as_millis() as u64,
            })
        })
        .collect();
    b.result("checks", rows);
    for c in checks {
        b.assert(
            format!("{}. {}", c.id, c.name),
            c.pass,
            c.witness.or(Some(c.detail)),
        );
    }
    Ok(b.finish(None))
}
