//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

mod common;

use std::time::{Duration, Instant};

use common::*;
use gradarg::instantiate::{
    build_defeat_graph, preferred_subtheories, ps_correspondence_check, random_knowledge_base, Formula, KnowledgeBase,
    PremiseSet,
};
use gradarg::kernel::{gfp_from, graded_defense, graded_neutrality, lfp_from, saturation_bound, unattacked_closure};
use gradarg::postulates::{standard_report, Outcome};
use gradarg::random::{corpus, random_framework};
use gradarg::ranking::{absolute_rank, contextual_equals_grounded, contextual_rank, contextual_signature};
use gradarg::semantics::{complete_closure, enumerate_extensions, grounded_by_construction};
use gradarg::{
    ArgumentSet, ArgumentationFramework, DefenseGrade, Existence, GradeParams, Relation, Semantics, TripleScope,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Shared corpus: 200 seeded frameworks of 1 to 8 arguments.
const CORPUS_SIZE: usize = 200;
const CORPUS_MAX_ARGS: usize = 8;
const CORPUS_SEED: u64 = 2024;
/// Default time limit per criterion.
const LIMIT: Duration = Duration::from_secs(5);
const ORACLE_LIMIT: Duration = Duration::from_secs(60);
const KERNEL_EXHAUSTIVE_MAX_ARGS: usize = 6;
const RANDOM_BASES: u64 = 50;

fn p(l: usize, m: usize, n: usize) -> GradeParams {
    GradeParams::new(l, m, n).unwrap()
}

fn shared_corpus() -> Vec<ArgumentationFramework> {
    corpus(CORPUS_SIZE, CORPUS_MAX_ARGS, CORPUS_SEED)
}

fn family(af: &ArgumentationFramework, sem: Semantics, g: GradeParams) -> Vec<ArgumentSet> {
    enumerate_extensions(af, sem, g).unwrap().extensions
}

fn show(af: &ArgumentationFramework, sets: &[ArgumentSet]) -> String {
    let parts: Vec<String> = sets.iter().map(|s| af.format_set(s)).collect();
    format!("[{}]", parts.join(" "))
}

struct Report {
    failed: usize,
}

impl Report {
    fn run(&mut self, id: usize, name: &str, limit: Duration, check: impl FnOnce() -> (bool, String)) {
        let start = Instant::now();
        let (ok, detail) = check();
        let elapsed = start.elapsed();
        let ok = ok && elapsed <= limit;
        if !ok {
            self.failed += 1;
        }
        println!(
            "{} [{id:>2}] {name} ({:.2}s, limit {}s): {detail}",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
}

fn three_cycle_values() -> (bool, String) {
    let af = three_cycle();
    let all = vec![af.full_set()];
    let complete = family(&af, Semantics::Complete, p(1, 1, 1));
    let grounded = family(&af, Semantics::Grounded, p(2, 2, 1));
    let preferred = family(&af, Semantics::Preferred, p(2, 2, 1));
    let stable = family(&af, Semantics::Stable, p(2, 2, 1));
    let ok = complete == vec![af.empty_set()] && grounded == all && preferred == all && stable == all;
    let detail = format!(
        "111-complete {} | 221-grounded {} | 221-preferred {} | 221-stable {} (want [{{a,b,c}}])",
        show(&af, &complete),
        show(&af, &grounded),
        show(&af, &preferred),
        show(&af, &stable)
    );
    (ok, detail)
}

fn fig2_right_values() -> (bool, String) {
    let af = fig2_right();
    let one = p(1, 1, 1);
    let grounded = grounded_by_construction(&af, one).extensions;
    let ad = set(&af, &["a", "d"]);
    let closure = complete_closure(&af, one, &set(&af, &["a"]));
    let preferred = family(&af, Semantics::Preferred, one);
    let gfp = gfp_from(&af, 1, 1, &af.empty_set()).unwrap().limit;
    let ok = grounded == vec![af.empty_set()]
        && closure.as_ref() == Ok(&ad)
        && preferred.contains(&ad)
        && gfp == af.full_set();
    let detail = format!(
        "grounded {} | closure({{a}}) {} | preferred {} | gfp(∅) {}",
        show(&af, &grounded),
        closure.map(|c| af.format_set(&c)).unwrap_or_else(|e| e.to_string()),
        show(&af, &preferred),
        af.format_set(&gfp)
    );
    (ok, detail)
}

fn g3_values() -> (bool, String) {
    let af = g3();
    let s = lfp_from(&af, 2, 1, &af.empty_set()).unwrap();
    let want = [af.empty_set(), set(&af, &["b3", "c3", "d3", "e3"]), af.full_set()];
    let complete = enumerate_extensions(&af, Semantics::Complete, p(2, 2, 1)).unwrap();
    let ok = s.stabilized_at == 2 && s.stages[..3] == want && complete.existence == Existence::NoneExists;
    let detail = format!(
        "d21 stages {} | 221-complete {:?}",
        show(&af, &s.stages),
        complete.existence
    );
    (ok, detail)
}

fn g2_values() -> (bool, String) {
    let af = g2();
    let x = set(&af, &["d2", "c2", "a2"]);
    let got: Vec<ArgumentSet> = (1..=3).map(|n| graded_defense(&af, 1, n, &x)).collect();
    let want = vec![x.clone(), x.clone(), set(&af, &["d2", "c2"])];
    (
        got == want,
        format!("d11, d12, d13 of {{a2,c2,d2}}: {}", show(&af, &got)),
    )
}

fn iterated_defense_ranking() -> (bool, String) {
    let af = union(&[g1(), g2(), g3()]);
    let r = contextual_rank(&af, &af.empty_set());
    let ix = |l| af.index_of(l).unwrap();
    let unattacked = ["c1", "c2", "d2", "d3", "e3"];
    let top = unattacked
        .iter()
        .all(|&u| r.strictly_above(ix(u), ix("a2")) && r.equivalent(ix(u), ix("c1")));
    let sig = contextual_signature(&af, &af.empty_set());
    let a3 = (
        sig.contains(ix("a3"), DefenseGrade { m: 3, n: 3 }),
        sig.contains(ix("a3"), DefenseGrade { m: 2, n: 2 }),
    );
    let ok = top
        && r.strictly_above(ix("a2"), ix("a1"))
        && r.strictly_above(ix("a1"), ix("a3"))
        && r.strictly_above(ix("b1"), ix("b2"))
        && a3 == (true, false);
    let detail = format!(
        "unattacked top {top} | a2 {} a1 | a1 {} a3 | b1 {} b2 | a3 at (3,3) {}, at (2,2) {}",
        r.relation(ix("a2"), ix("a1")),
        r.relation(ix("a1"), ix("a3")),
        r.relation(ix("b1"), ix("b2")),
        a3.0,
        a3.1
    );
    (ok, detail)
}

fn oracle_equivalence() -> (bool, String) {
    let (mut triples, mut mismatches) = (0usize, 0usize);
    let mut first = None;
    let one = p(1, 1, 1);
    for af in shared_corpus() {
        for g in GradeParams::sweep(saturation_bound(&af)).filter(GradeParams::existence_safe) {
            triples += 1;
            let built = grounded_by_construction(&af, g);
            let listed = enumerate_extensions(&af, Semantics::Grounded, g).unwrap();
            if built.extensions != listed.extensions || built.existence != listed.existence {
                mismatches += 1;
                first.get_or_insert(format!("{af:?} at {g}"));
            }
        }
        let o = Matrix::of(&af);
        let dung = [
            (Semantics::Admissible, sorted(o.dung_admissible())),
            (Semantics::Complete, sorted(o.dung_complete())),
            (Semantics::Grounded, vec![o.dung_grounded()]),
            (Semantics::Preferred, sorted(o.dung_preferred())),
            (Semantics::Stable, sorted(o.dung_stable())),
        ];
        for (sem, want) in dung {
            if masks(&enumerate_extensions(&af, sem, one).unwrap()) != want {
                mismatches += 1;
                first.get_or_insert(format!("{af:?} {sem} at (1,1,1)"));
            }
        }
    }
    let detail = format!(
        "{CORPUS_SIZE} frameworks, {triples} constrained triples, {mismatches} mismatches{}",
        first.map(|f| format!(", first {f}")).unwrap_or_default()
    );
    (mismatches == 0, detail)
}

fn kernel_violations(af: &ArgumentationFramework, x: &ArgumentSet, y: &ArgumentSet, k: usize) -> usize {
    let mut bad = 0;
    for l in 1..=k {
        bad += !graded_neutrality(af, l, y).is_subset(&graded_neutrality(af, l, x)) as usize;
    }
    for m in 1..=k {
        for n in 1..=k {
            let dx = graded_defense(af, m, n, x);
            bad += (dx != graded_neutrality(af, m, &graded_neutrality(af, n, x))) as usize;
            bad += !dx.is_subset(&graded_defense(af, m, n, y)) as usize;
            bad += !graded_defense(af, m, n + 1, x).is_subset(&dx) as usize;
            bad += !dx.is_subset(&graded_defense(af, m + 1, n, x)) as usize;
        }
    }
    bad
}

fn kernel_properties() -> (bool, String) {
    let (mut pairs, mut bad) = (0usize, 0usize);
    for af in corpus(100, KERNEL_EXHAUSTIVE_MAX_ARGS, 7) {
        let u = af.len();
        let k = saturation_bound(&af) + 1;
        for y in 0..1u64 << u {
            // Every X ⊆ Y, by submask enumeration.
            let mut x = y;
            loop {
                pairs += 1;
                bad += kernel_violations(&af, &ArgumentSet::from_mask(u, x), &ArgumentSet::from_mask(u, y), k);
                if x == 0 {
                    break;
                }
                x = (x - 1) & y;
            }
        }
    }
    let exhaustive = pairs;
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for seed in 0..200 {
        let n = rng.gen_range(7..=14);
        let af = random_framework(n, rng.gen_range(0.05..0.45), seed);
        let k = saturation_bound(&af).min(6);
        for _ in 0..25 {
            let y: u64 = rng.gen::<u64>() & ((1 << n) - 1);
            let x = y & rng.gen::<u64>();
            pairs += 1;
            bad += kernel_violations(&af, &ArgumentSet::from_mask(n, x), &ArgumentSet::from_mask(n, y), k);
        }
    }
    let detail = format!(
        "{exhaustive} exhaustive pairs X ⊆ Y on ≤ {KERNEL_EXHAUSTIVE_MAX_ARGS} args, {} sampled pairs on 7-14 args, {bad} violations",
        pairs - exhaustive
    );
    (bad == 0, detail)
}

fn lattice_facts() -> (bool, String) {
    let (mut stable_bad, mut preferred_bad, mut grounded_bad) = (0usize, 0usize, 0usize);
    let mut first = None;
    for af in shared_corpus() {
        let floor = unattacked_closure(&af);
        for g in GradeParams::sweep(saturation_bound(&af)).filter(GradeParams::existence_safe) {
            let st = family(&af, Semantics::Stable, g);
            let pr = family(&af, Semantics::Preferred, g);
            let co = family(&af, Semantics::Complete, g);
            for e in st.iter().filter(|e| !pr.contains(e)) {
                stable_bad += 1;
                first.get_or_insert(format!("{} stable, not preferred, in {af:?} at {g}", af.format_set(e)));
            }
            preferred_bad += pr.iter().filter(|e| !co.contains(e)).count();
            grounded_bad += family(&af, Semantics::Grounded, g)
                .iter()
                .filter(|e| !floor.is_subset(e))
                .count();
        }
    }
    let detail = format!(
        "stable ⊄ preferred {stable_bad}, preferred ⊄ complete {preferred_bad}, unattacked ⊄ grounded {grounded_bad}{}",
        first.map(|f| format!("; first: {f}")).unwrap_or_default()
    );
    (stable_bad + preferred_bad + grounded_bad == 0, detail)
}

fn ranking_bridge() -> (bool, String) {
    let mut first = None;
    let mut bad = 0;
    for af in shared_corpus() {
        let b = contextual_equals_grounded(&af, TripleScope::default());
        if !b.holds {
            bad += 1;
            first.get_or_insert(format!("{af:?} {:?}", b.counterexample));
        }
    }
    let detail = format!(
        "{CORPUS_SIZE} frameworks, {bad} disagreements{}",
        first.map(|f| format!(", first {f}")).unwrap_or_default()
    );
    (bad == 0, detail)
}

fn postulate_table() -> (bool, String) {
    let report = standard_report(50, 1, TripleScope::default()).unwrap();
    let mut ok = report.iter().all(|c| c.matches());
    let pair = |name: &str, sem: Semantics| {
        report
            .iter()
            .find(|c| c.name == name && c.verdict.semantics == sem)
            .and_then(|c| c.verdict.witness.as_ref())
            .map(|w| (w.pair_labels().0.to_string(), w.pair_labels().1.to_string(), w.relation))
    };
    let indep = gradarg::postulates::fixtures::independence_stable();
    let stable = absolute_rank(&indep, Semantics::Stable, TripleScope::default()).unwrap();
    let void = stable.relation(1, 2);
    let quality = pair("quality", Semantics::Grounded);
    ok &= void == Relation::Equivalent;
    ok &= matches!(&quality, Some((a, b, Relation::Incomparable)) if a == "a" && b == "b");
    let mismatched: Vec<String> = report
        .iter()
        .filter(|c| !c.matches())
        .map(|c| format!("{} under {}", c.name, c.verdict.semantics))
        .collect();
    let violated = report.iter().filter(|c| c.verdict.outcome == Outcome::Violated).count();
    let detail = format!(
        "{} rows, {violated} violated with witnesses, mismatches {mismatched:?}, stable b {void} c on IndepStable, quality pair {quality:?}",
        report.len()
    );
    (ok, detail)
}

fn preferred_subtheories_check() -> (bool, String) {
    let b = KnowledgeBase::parse("1: !a | !b\n2: a\n2: b\n").unwrap();
    let ps = preferred_subtheories(&b).unwrap();
    let shown: Vec<String> = ps.iter().map(|&s| b.format_set(s)).collect();
    let mut ok = ps == vec![PremiseSet(0b011), PremiseSet(0b101)];
    ok &= ps_correspondence_check(&b).unwrap().holds;
    let mut failures = 0;
    for seed in 0..RANDOM_BASES {
        let kb = random_knowledge_base(seed, 5, 4, 3);
        let c = ps_correspondence_check(&kb).unwrap();
        failures += (!c.holds || !c.stable_equals_preferred) as usize;
    }
    ok &= failures == 0;
    (
        ok,
        format!("ps {shown:?} | {RANDOM_BASES} random bases, {failures} failures"),
    )
}

fn accrual() -> (bool, String) {
    let f = |s: &str| s.parse::<Formula>().unwrap();
    let roles = |text: &str| {
        let g = build_defeat_graph(&KnowledgeBase::parse(text).unwrap()).unwrap();
        let find = |mask, claim: &str| g.find(PremiseSet(mask), &f(claim)).unwrap();
        let strong = vec![
            find(0b1000, "!a"),
            find(0b0110, "!a"),
            find(0b0010, "b"),
            find(0b0100, "!a | !b"),
        ];
        let weak = vec![find(0b0001, "a"), find(0b0101, "!b"), find(0b0011, "!(!a | !b)")];
        (g, strong, weak)
    };
    let (g1, strong, weak) = roles("1: a\n1: b\n1: !a | !b\n1: !a\n");
    let r1 = absolute_rank(&g1.framework, Semantics::Preferred, TripleScope::default()).unwrap();
    let af1 = strong.iter().all(|&x| weak.iter().all(|&y| r1.strictly_above(x, y)));
    let (g2, strong, weak) = roles("1: a\n1: b\n1: !a | !b\n2: !a\n");
    let r2 = absolute_rank(&g2.framework, Semantics::Preferred, TripleScope::default()).unwrap();
    let seven: Vec<usize> = strong.iter().chain(&weak).copied().collect();
    let af2 = seven.iter().all(|&x| seven.iter().all(|&y| r2.equivalent(x, y)));
    let classes = |g: &gradarg::instantiate::DefeatGraph, r: &gradarg::ArgumentPartialOrder| -> Vec<String> {
        r.classes()
            .iter()
            .map(|c| {
                let parts: Vec<String> = c.iter().map(|i| g.arguments[i].claim.to_string()).collect();
                format!("{{{}}}", parts.join("; "))
            })
            .collect()
    };
    let detail = format!(
        "AF1 strong ≻ weak {af1} | AF2 single class {af2}, classes by claim {:?}",
        classes(&g2, &r2)
    );
    (af1 && af2, detail)
}

fn main() {
    let mut r = Report { failed: 0 };
    r.run(1, "3-cycle graded families", LIMIT, three_cycle_values);
    r.run(2, "two-component values at (1,1,1)", LIMIT, fig2_right_values);
    r.run(3, "G3 iterates and non-existence", LIMIT, g3_values);
    r.run(4, "G2 defense grades", LIMIT, g2_values);
    r.run(
        5,
        "iterated defense ranking on G1+G2+G3",
        LIMIT,
        iterated_defense_ranking,
    );
    r.run(6, "oracle equivalence", ORACLE_LIMIT, oracle_equivalence);
    r.run(7, "kernel property suite", LIMIT, kernel_properties);
    r.run(8, "lattice facts on the corpus", LIMIT, lattice_facts);
    r.run(9, "contextual equals grounded on the corpus", LIMIT, ranking_bridge);
    r.run(10, "postulate verdict table", LIMIT, postulate_table);
    r.run(
        11,
        "preferred subtheories correspondence",
        LIMIT,
        preferred_subtheories_check,
    );
    r.run(12, "accrual rankings", LIMIT, accrual);
    println!("{} of 12 criteria pass", 12 - r.failed);
    if r.failed > 0 {
        std::process::exit(1);
    }
}
