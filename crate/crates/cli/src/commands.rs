use std::fmt::Write as _;

use gradarg::instantiate::{
    build_defeat_graph, graded_inference, preferred_subtheories, ps_correspondence_check, Formula, KnowledgeBase,
};
use gradarg::io::{self, Format};
use gradarg::postulates::{standard_report, Outcome};
use gradarg::ranking::{absolute_signature, contextual_signature, JustificationSignature};
use gradarg::semantics::{enumerate_extensions, grounded_by_construction};
use gradarg::{ArgumentSet, ArgumentationFramework, Existence, GradeParams, Mode, Semantics, TripleScope};
use serde::Serialize;
use serde_json::{json, Value};

use crate::Failure;

/// A finished command: the JSON document, its text rendering, an optional DOT
/// rendering and the exit status.
pub struct Report {
    command: &'static str,
    params: Value,
    result: Value,
    witnesses: Vec<Value>,
    pub text: String,
    pub dot: Option<String>,
    pub code: u8,
}

impl Report {
    pub fn json(&self) -> Value {
        json!({
            "command": self.command,
            "params": self.params,
            "result": self.result,
            "witnesses": self.witnesses,
        })
    }
}

fn labels(af: &ArgumentationFramework, set: &ArgumentSet) -> Value {
    json!(af.labels_of(set))
}

pub fn solve(
    af: &ArgumentationFramework,
    sem: Semantics,
    p: GradeParams,
    mode: Option<Mode>,
) -> Result<Report, Failure> {
    // The construction is exact for grounded semantics and needs no bound.
    let family = match sem {
        Semantics::Grounded => grounded_by_construction(af, p),
        _ => enumerate_extensions(af, sem, p)?,
    };
    let mut text = String::new();
    for e in &family.extensions {
        let _ = writeln!(text, "{}", af.format_set(e));
    }
    let mut witnesses = Vec::new();
    if let Some(w) = &family.witness {
        let _ = writeln!(
            text,
            "no {p}-{sem} extension: {} fails `{}`",
            af.format_set(&w.set),
            w.clause
        );
        witnesses.push(json!({ "set": labels(af, &w.set), "clause": w.clause }));
    } else if family.extensions.is_empty() {
        let _ = writeln!(text, "no {p}-{sem} extension");
    }
    let mut result = json!({
        "existence": family.existence,
        "extensions": family.extensions.iter().map(|e| labels(af, e)).collect::<Vec<_>>(),
    });
    if let Some(mode) = mode {
        let j = family.justified(af.len(), mode);
        let _ = writeln!(text, "justified ({}): {}", mode_name(mode), af.format_set(&j));
        result["justified"] = labels(af, &j);
    }
    Ok(Report {
        command: "solve",
        params: json!({ "semantics": sem, "l": p.l, "m": p.m, "n": p.n, "mode": mode }),
        result,
        witnesses,
        text,
        dot: None,
        code: if family.existence == Existence::Found { 0 } else { 1 },
    })
}

fn mode_name(mode: Mode) -> &'static str {
    match mode {
        Mode::Credulous => "credulous",
        Mode::Sceptical => "sceptical",
    }
}

fn ranking_report<P: Copy + PartialEq + Serialize>(
    af: &ArgumentationFramework,
    sig: &JustificationSignature<P>,
    params: Value,
) -> Report {
    let order = sig.order();
    let n = af.len();
    let classes = order.classes();
    let hasse = order.hasse_edges();
    let rep = |c: usize| classes[c].iter().next().unwrap();
    let matrix: Vec<Vec<u8>> = (0..n)
        .map(|x| sig.points.iter().map(|&pt| sig.contains(x, pt) as u8).collect())
        .collect();
    let relations: Vec<Vec<Value>> = (0..n)
        .map(|a| (0..n).map(|b| json!(order.relation(a, b))).collect())
        .collect();
    let witnesses = hasse
        .iter()
        .map(|&(hi, lo)| {
            json!({
                "above": af.label(rep(hi)),
                "below": af.label(rep(lo)),
                "point": sig.separating_point(rep(hi), rep(lo)),
            })
        })
        .collect();
    let mut text = String::new();
    for (i, c) in classes.iter().enumerate() {
        let _ = writeln!(text, "c{i}: {}", af.format_set(c));
    }
    for &(hi, lo) in &hasse {
        let _ = writeln!(text, "c{hi} > c{lo}");
    }
    Report {
        command: "rank",
        params,
        result: json!({
            "arguments": af.labels().collect::<Vec<_>>(),
            "points": sig.points,
            "signature": matrix,
            "relations": relations,
            "classes": classes.iter().map(|c| labels(af, c)).collect::<Vec<_>>(),
            "hasse": hasse,
        }),
        witnesses,
        text,
        dot: Some(order.to_dot(af)),
        code: 0,
    }
}

pub fn rank_contextual(af: &ArgumentationFramework, context: &str) -> Result<Report, Failure> {
    let names: Vec<&str> = context.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    let x = af.set_from_labels(names.iter().copied())?;
    let sig = contextual_signature(af, &x);
    Ok(ranking_report(
        af,
        &sig,
        json!({ "kind": "contextual", "context": labels(af, &x), "bound": sig.bound }),
    ))
}

pub fn rank_absolute(af: &ArgumentationFramework, sem: Semantics, scope: TripleScope) -> Result<Report, Failure> {
    let sig = absolute_signature(af, sem, scope)?;
    Ok(ranking_report(
        af,
        &sig,
        json!({ "kind": "absolute", "semantics": sem, "scope": scope, "bound": sig.bound }),
    ))
}

pub fn postulates(corpus: usize, seed: u64, scope: TripleScope) -> Result<Report, Failure> {
    let rows = standard_report(corpus, seed, scope)?;
    let mut text = String::new();
    let mut witnesses = Vec::new();
    let mut table = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        let v = &r.verdict;
        let _ = writeln!(
            text,
            "{:<5} {:<10} {:<34} {:<9} expected {:<9} {}",
            if r.matches() { "ok" } else { "DIFF" },
            v.semantics.name(),
            r.name,
            outcome_name(v.outcome),
            outcome_name(r.expected),
            v.postulate
        );
        table.push(json!({
            "name": r.name,
            "postulate": v.postulate,
            "semantics": v.semantics,
            "expected": r.expected,
            "outcome": v.outcome,
            "matches": r.matches(),
        }));
        if let Some(w) = &v.witness {
            let (a, b) = w.pair;
            witnesses.push(json!({
                "row": i,
                "pair": [w.framework.label(a), w.framework.label(b)],
                "relation": w.relation,
                "grade_point": w.grade_point,
                "detail": w.detail,
                "framework": io::write_apx(&w.framework),
            }));
        }
    }
    let all_match = rows.iter().all(|r| r.matches());
    Ok(Report {
        command: "postulates",
        params: json!({ "corpus": corpus, "seed": seed, "scope": scope }),
        result: json!({ "rows": table, "all_match": all_match }),
        witnesses,
        text,
        dot: None,
        code: if all_match { 0 } else { 1 },
    })
}

fn outcome_name(o: Outcome) -> &'static str {
    match o {
        Outcome::Holds => "holds",
        Outcome::Violated => "violated",
    }
}

fn premise_texts(kb: &KnowledgeBase, p: gradarg::instantiate::PremiseSet) -> Value {
    json!(kb.formulas_of(p).iter().map(|f| f.to_string()).collect::<Vec<_>>())
}

pub fn emit_graph(kb: &KnowledgeBase, format: Format) -> Result<Report, Failure> {
    let g = build_defeat_graph(kb)?;
    let af = &g.framework;
    let pair = |&(a, b): &(usize, usize)| json!([af.label(a), af.label(b)]);
    let arguments: Vec<Value> = g
        .arguments
        .iter()
        .enumerate()
        .map(|(i, a)| {
            json!({
                "label": af.label(i),
                "premises": premise_texts(kb, a.premises),
                "claim": a.claim.to_string(),
                "premise_argument": a.is_premise_arg,
            })
        })
        .collect();
    Ok(Report {
        command: "instantiate",
        params: json!({ "emit": "graph" }),
        result: json!({
            "arguments": arguments,
            "attacks": g.attacks.iter().map(pair).collect::<Vec<_>>(),
            "defeats": af.attacks().iter().map(pair).collect::<Vec<_>>(),
        }),
        witnesses: Vec::new(),
        text: io::write(af, format),
        dot: None,
        code: 0,
    })
}

pub fn emit_ps(kb: &KnowledgeBase) -> Result<Report, Failure> {
    let ps = preferred_subtheories(kb)?;
    let text = ps.iter().map(|&s| format!("{}\n", kb.format_set(s))).collect();
    Ok(Report {
        command: "instantiate",
        params: json!({ "emit": "ps" }),
        result: json!({ "subtheories": ps.iter().map(|&s| premise_texts(kb, s)).collect::<Vec<_>>() }),
        witnesses: Vec::new(),
        text,
        dot: None,
        code: 0,
    })
}

pub fn emit_check(kb: &KnowledgeBase) -> Result<Report, Failure> {
    let c = ps_correspondence_check(kb)?;
    let sets = |v: &[gradarg::instantiate::PremiseSet]| v.iter().map(|&s| premise_texts(kb, s)).collect::<Vec<_>>();
    let mut text = format!("{}\n", c.holds);
    let witnesses = match c.witness {
        Some(w) => {
            let _ = writeln!(text, "found on one side only: {}", kb.format_set(w));
            vec![json!({ "premises": premise_texts(kb, w) })]
        }
        None => Vec::new(),
    };
    Ok(Report {
        command: "instantiate",
        params: json!({ "emit": "check" }),
        result: json!({
            "holds": c.holds,
            "subtheories": sets(&c.subtheories),
            "stable_premises": sets(&c.stable_premises),
            "stable_equals_preferred": c.stable_equals_preferred,
        }),
        witnesses,
        text,
        dot: None,
        code: if c.holds { 0 } else { 1 },
    })
}

pub fn emit_infer(kb: &KnowledgeBase, goal: &str, p: GradeParams, mode: Mode) -> Result<Report, Failure> {
    let formula: Formula = goal
        .parse()
        .map_err(|e: gradarg::Error| Failure::Usage(e.to_string()))?;
    let entailed = graded_inference(kb, p, &formula, mode)?;
    Ok(Report {
        command: "instantiate",
        params: json!({ "emit": "infer", "goal": formula.to_string(), "l": p.l, "m": p.m, "n": p.n, "mode": mode }),
        result: json!({ "entailed": entailed }),
        witnesses: Vec::new(),
        text: format!("{entailed}\n"),
        dot: None,
        code: 0,
    })
}
