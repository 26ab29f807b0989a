//! Checkers for ranking postulates over the absolute graded rankings.

use std::fmt;

use serde::Serialize;

use crate::af::ArgumentationFramework;
use crate::components::connected_components;
use crate::error::Result;
use crate::kernel::GradeParams;
use crate::ranking::{absolute_signature, AbsoluteSignature, ArgumentPartialOrder, Relation, TripleScope};
use crate::semantics::Semantics;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Postulate {
    Abstraction,
    Independence,
    StrictIndependence,
    VoidPrecedence,
    EqualUnattacked,
    SelfContradiction,
    CardinalityPrecedence,
    QualityPrecedence,
    StrictCounterTransitivity,
    DefensePrecedence,
    StrictAdditionOfDefensePath,
    AdditionOfAttackPath,
    IncreaseOfAttackPath,
    IncreaseOfDefensePath,
}

impl Postulate {
    pub fn name(self) -> &'static str {
        match self {
            Postulate::Abstraction => "abstraction",
            Postulate::Independence => "independence",
            Postulate::StrictIndependence => "strict independence",
            Postulate::VoidPrecedence => "void precedence",
            Postulate::EqualUnattacked => "equal unattacked",
            Postulate::SelfContradiction => "self contradiction",
            Postulate::CardinalityPrecedence => "cardinality precedence",
            Postulate::QualityPrecedence => "quality precedence",
            Postulate::StrictCounterTransitivity => "strict counter-transitivity",
            Postulate::DefensePrecedence => "defense precedence",
            Postulate::StrictAdditionOfDefensePath => "strict addition of a defense path",
            Postulate::AdditionOfAttackPath => "addition of an attack path",
            Postulate::IncreaseOfAttackPath => "increase of an attack path",
            Postulate::IncreaseOfDefensePath => "increase of a defense path",
        }
    }
}

impl fmt::Display for Postulate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Holds,
    Violated,
}

/// The framework, ordered pair and observed relation showing a violation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PostulateWitness {
    pub framework: ArgumentationFramework,
    pub pair: (usize, usize),
    /// Relation of `pair.0` to `pair.1` under the absolute ranking of `framework`.
    pub relation: Relation,
    /// A triple at which exactly one of the pair is justified, if any.
    pub grade_point: Option<GradeParams>,
    pub detail: String,
}

impl PostulateWitness {
    /// Recomputes the ranking of the witness framework and compares the
    /// relation of the pair with the recorded one.
    pub fn recheck(&self, sem: Semantics, scope: TripleScope) -> Result<bool> {
        let order = absolute_signature(&self.framework, sem, scope)?.order();
        Ok(order.relation(self.pair.0, self.pair.1) == self.relation)
    }

    pub fn pair_labels(&self) -> (&str, &str) {
        (self.framework.label(self.pair.0), self.framework.label(self.pair.1))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PostulateVerdict {
    pub postulate: Postulate,
    pub semantics: Semantics,
    pub outcome: Outcome,
    pub witness: Option<PostulateWitness>,
}

/// A ranking together with the signature it came from, for one framework.
struct Ranked<'a> {
    af: &'a ArgumentationFramework,
    sig: AbsoluteSignature,
    order: ArgumentPartialOrder,
}

impl<'a> Ranked<'a> {
    fn new(af: &'a ArgumentationFramework, sem: Semantics, scope: TripleScope) -> Result<Self> {
        let sig = absolute_signature(af, sem, scope)?;
        let order = sig.order();
        Ok(Ranked { af, sig, order })
    }

    fn witness(&self, a: usize, b: usize, detail: String) -> PostulateWitness {
        PostulateWitness {
            framework: self.af.clone(),
            pair: (a, b),
            relation: self.order.relation(a, b),
            grade_point: self
                .sig
                .separating_point(a, b)
                .or_else(|| self.sig.separating_point(b, a)),
            detail,
        }
    }
}

fn verdict(postulate: Postulate, semantics: Semantics, witness: Option<PostulateWitness>) -> PostulateVerdict {
    PostulateVerdict {
        postulate,
        semantics,
        outcome: if witness.is_some() {
            Outcome::Violated
        } else {
            Outcome::Holds
        },
        witness,
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
}

/// Rankings are preserved under `perm` (argument `i` moves to `perm[i]`).
pub fn check_abstraction(
    af: &ArgumentationFramework,
    perm: &[usize],
    sem: Semantics,
    scope: TripleScope,
) -> Result<PostulateVerdict> {
    let moved = af.permute(perm)?;
    let before = Ranked::new(af, sem, scope)?;
    let after = Ranked::new(&moved, sem, scope)?;
    let bad = pairs(af.len()).find(|&(a, b)| before.order.relation(a, b) != after.order.relation(perm[a], perm[b]));
    let witness = bad.map(|(a, b)| {
        before.witness(
            a,
            b,
            format!(
                "relation becomes {} after relabelling",
                after.order.relation(perm[a], perm[b])
            ),
        )
    });
    Ok(verdict(Postulate::Abstraction, sem, witness))
}

/// For every connected component and every pair in it, `x ⪰ y` in the
/// component implies `x ⪰ y` in the whole framework; with `strict`, the same
/// for `≻`.
pub fn check_independence(
    af: &ArgumentationFramework,
    sem: Semantics,
    scope: TripleScope,
    strict: bool,
) -> Result<PostulateVerdict> {
    let whole = Ranked::new(af, sem, scope)?;
    let postulate = if strict {
        Postulate::StrictIndependence
    } else {
        Postulate::Independence
    };
    for block in connected_components(af) {
        let (sub, map) = af.sub_framework(&block);
        let part = Ranked::new(&sub, sem, scope)?;
        for (x, y) in pairs(sub.len()) {
            let (gx, gy) = (map[x], map[y]);
            let broken = if strict {
                part.order.strictly_above(x, y) && !whole.order.strictly_above(gx, gy)
            } else {
                part.order.at_least(x, y) && !whole.order.at_least(gx, gy)
            };
            if broken {
                let w = whole.witness(
                    gx,
                    gy,
                    format!(
                        "{} in its component {}",
                        part.order.relation(x, y),
                        af.format_set(&block)
                    ),
                );
                return Ok(verdict(postulate, sem, Some(w)));
            }
        }
    }
    Ok(verdict(postulate, sem, None))
}

/// Every unattacked argument is strictly above every attacked one.
pub fn check_void_precedence(
    af: &ArgumentationFramework,
    sem: Semantics,
    scope: TripleScope,
) -> Result<PostulateVerdict> {
    let r = Ranked::new(af, sem, scope)?;
    let bad = pairs(af.len())
        .filter(|&(x, y)| af.in_degree(x) == 0 && af.in_degree(y) > 0)
        .find(|&(x, y)| !r.order.strictly_above(x, y));
    let w = bad.map(|(x, y)| r.witness(x, y, "unattacked argument not strictly above an attacked one".into()));
    Ok(verdict(Postulate::VoidPrecedence, sem, w))
}

/// All unattacked arguments are equivalent.
pub fn check_equal_unattacked(
    af: &ArgumentationFramework,
    sem: Semantics,
    scope: TripleScope,
) -> Result<PostulateVerdict> {
    let r = Ranked::new(af, sem, scope)?;
    let bad = pairs(af.len())
        .filter(|&(x, y)| af.in_degree(x) == 0 && af.in_degree(y) == 0)
        .find(|&(x, y)| !r.order.equivalent(x, y));
    let w = bad.map(|(x, y)| r.witness(x, y, "unattacked arguments ranked apart".into()));
    Ok(verdict(Postulate::EqualUnattacked, sem, w))
}

/// A self-attacking argument is strictly below every argument that does not
/// attack itself.
pub fn check_self_contradiction(
    af: &ArgumentationFramework,
    sem: Semantics,
    scope: TripleScope,
) -> Result<PostulateVerdict> {
    let r = Ranked::new(af, sem, scope)?;
    let bad = pairs(af.len())
        .filter(|&(a, b)| af.attacks_pair(a, a) && !af.attacks_pair(b, b))
        .find(|&(a, b)| !r.order.strictly_above(b, a));
    let w = bad.map(|(a, b)| r.witness(a, b, "self-attacking argument not strictly below".into()));
    Ok(verdict(Postulate::SelfContradiction, sem, w))
}

/// Fewer attackers implies strictly higher rank.
pub fn check_cardinality_precedence(
    af: &ArgumentationFramework,
    sem: Semantics,
    scope: TripleScope,
) -> Result<PostulateVerdict> {
    let r = Ranked::new(af, sem, scope)?;
    let bad = pairs(af.len())
        .filter(|&(a, b)| af.in_degree(a) < af.in_degree(b))
        .find(|&(a, b)| !r.order.strictly_above(a, b));
    let w = bad.map(|(a, b)| r.witness(a, b, "fewer attackers but not strictly above".into()));
    Ok(verdict(Postulate::CardinalityPrecedence, sem, w))
}

/// If some attacker of `b` is strictly above every attacker of `a`, then
/// `a` is strictly above `b`.
pub fn check_quality_precedence(
    af: &ArgumentationFramework,
    sem: Semantics,
    scope: TripleScope,
) -> Result<PostulateVerdict> {
    let r = Ranked::new(af, sem, scope)?;
    let bad = pairs(af.len())
        .filter(|&(a, b)| {
            af.attacker_list(b)
                .iter()
                .any(|&c| af.attacker_list(a).iter().all(|&d| r.order.strictly_above(c, d)))
        })
        .find(|&(a, b)| !r.order.strictly_above(a, b));
    let w = bad.map(|(a, b)| {
        r.witness(
            a,
            b,
            "an attacker of the second dominates all attackers of the first".into(),
        )
    });
    Ok(verdict(Postulate::QualityPrecedence, sem, w))
}

/// More attackers on `b`, or as many with an attacker of `b` strictly above
/// one of `a` and not conversely, implies `a` strictly above `b`.
pub fn check_strict_counter_transitivity(
    af: &ArgumentationFramework,
    sem: Semantics,
    scope: TripleScope,
) -> Result<PostulateVerdict> {
    let r = Ranked::new(af, sem, scope)?;
    let dominates = |x: usize, y: usize| {
        af.attacker_list(x)
            .iter()
            .any(|&c| af.attacker_list(y).iter().any(|&d| r.order.strictly_above(c, d)))
    };
    let bad = pairs(af.len())
        .filter(|&(a, b)| {
            af.in_degree(b) > af.in_degree(a)
                || (af.in_degree(b) == af.in_degree(a) && dominates(b, a) && !dominates(a, b))
        })
        .find(|&(a, b)| !r.order.strictly_above(a, b));
    let w = bad.map(|(a, b)| r.witness(a, b, "attackers of the second are stronger".into()));
    Ok(verdict(Postulate::StrictCounterTransitivity, sem, w))
}

/// With equally many attackers, a defended argument is strictly above an
/// undefended one.
pub fn check_defense_precedence(
    af: &ArgumentationFramework,
    sem: Semantics,
    scope: TripleScope,
) -> Result<PostulateVerdict> {
    let r = Ranked::new(af, sem, scope)?;
    let bad = pairs(af.len())
        .filter(|&(a, b)| {
            af.in_degree(a) > 0
                && af.in_degree(a) == af.in_degree(b)
                && !af.defenders_of(a).is_empty()
                && af.defenders_of(b).is_empty()
        })
        .find(|&(a, b)| !r.order.strictly_above(a, b));
    let w = bad.map(|(a, b)| r.witness(a, b, "defended argument not strictly above undefended one".into()));
    Ok(verdict(Postulate::DefensePrecedence, sem, w))
}

/// Two copies of `base`; the copy's arguments get a `'` suffix. Returns the
/// union and the index of the copied `target`.
fn doubled(base: &ArgumentationFramework, target: usize) -> (Vec<String>, Vec<(usize, usize)>, usize) {
    let n = base.len();
    let mut labels: Vec<String> = base.labels().map(str::to_string).collect();
    labels.extend(base.labels().map(|l| format!("{l}'")));
    let mut attacks: Vec<(usize, usize)> = base.attacks().to_vec();
    attacks.extend(base.attacks().iter().map(|&(a, b)| (a + n, b + n)));
    (labels, attacks, target + n)
}

/// Appends a fresh path of `len` attacks ending in `onto`.
fn attach_path(labels: &mut Vec<String>, attacks: &mut Vec<(usize, usize)>, onto: usize, len: usize, tag: &str) {
    let mut prev = onto;
    for i in 1..=len {
        let mut label = format!("{tag}{i}");
        while labels.contains(&label) {
            label.insert(0, '_');
        }
        labels.push(label);
        let node = labels.len() - 1;
        attacks.push((node, prev));
        prev = node;
    }
}

/// How a path transformation is applied and what it should do to the target.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathChange {
    /// Adds a path of `len` attacks to the copy of the target.
    Add,
    /// Adds paths of `len` and `len + 2` attacks to the target and its copy.
    Increase,
}

/// Builds the compared framework for a path postulate: the disjoint union of
/// `base` and a primed copy, with paths attached. Returns the framework, the
/// original target and its copy.
pub fn path_transform(
    base: &ArgumentationFramework,
    target: usize,
    change: PathChange,
    len: usize,
) -> Result<(ArgumentationFramework, usize, usize)> {
    let (mut labels, mut attacks, copy) = doubled(base, target);
    match change {
        PathChange::Add => attach_path(&mut labels, &mut attacks, copy, len, "x"),
        PathChange::Increase => {
            attach_path(&mut labels, &mut attacks, target, len, "x");
            attach_path(&mut labels, &mut attacks, copy, len + 2, "y");
        }
    }
    Ok((ArgumentationFramework::new(labels, attacks)?, target, copy))
}

fn check_path(
    postulate: Postulate,
    base: &ArgumentationFramework,
    target: usize,
    len: usize,
    sem: Semantics,
    scope: TripleScope,
) -> Result<PostulateVerdict> {
    let (change, want_odd) = match postulate {
        Postulate::StrictAdditionOfDefensePath => (PathChange::Add, false),
        Postulate::AdditionOfAttackPath => (PathChange::Add, true),
        Postulate::IncreaseOfAttackPath => (PathChange::Increase, true),
        Postulate::IncreaseOfDefensePath => (PathChange::Increase, false),
        other => panic!("{other} is not a path postulate"),
    };
    assert!(
        len > 0 && (len % 2 == 1) == want_odd,
        "path length {len} has the wrong parity for {postulate}"
    );
    let (af, t, c) = path_transform(base, target, change, len)?;
    let r = Ranked::new(&af, sem, scope)?;
    // Attack paths weaken and defense paths strengthen when added; an
    // increase weakens the path and so reverses its effect.
    let (hi, lo) = match postulate {
        Postulate::AdditionOfAttackPath | Postulate::IncreaseOfDefensePath => (t, c),
        _ => (c, t),
    };
    let w = (!r.order.strictly_above(hi, lo))
        .then(|| r.witness(hi, lo, format!("expected {} ≻ {}", af.label(hi), af.label(lo))));
    Ok(verdict(postulate, sem, w))
}

/// Adding a defense path (even length) to the copy of `target` should raise it.
pub fn check_strict_addition_of_defense_path(
    base: &ArgumentationFramework,
    target: usize,
    len: usize,
    sem: Semantics,
    scope: TripleScope,
) -> Result<PostulateVerdict> {
    check_path(Postulate::StrictAdditionOfDefensePath, base, target, len, sem, scope)
}

/// Adding an attack path (odd length) to the copy of `target` should lower it.
pub fn check_addition_of_attack_path(
    base: &ArgumentationFramework,
    target: usize,
    len: usize,
    sem: Semantics,
    scope: TripleScope,
) -> Result<PostulateVerdict> {
    check_path(Postulate::AdditionOfAttackPath, base, target, len, sem, scope)
}

/// Lengthening an attack path by two should raise the target.
pub fn check_increase_of_attack_path(
    base: &ArgumentationFramework,
    target: usize,
    len: usize,
    sem: Semantics,
    scope: TripleScope,
) -> Result<PostulateVerdict> {
    check_path(Postulate::IncreaseOfAttackPath, base, target, len, sem, scope)
}

/// Lengthening a defense path by two should lower the target.
pub fn check_increase_of_defense_path(
    base: &ArgumentationFramework,
    target: usize,
    len: usize,
    sem: Semantics,
    scope: TripleScope,
) -> Result<PostulateVerdict> {
    check_path(Postulate::IncreaseOfDefensePath, base, target, len, sem, scope)
}

/// Built-in frameworks used as counterexamples.
pub mod fixtures {
    use crate::af::ArgumentationFramework;

    fn build(labels: &[&str], attacks: &[(&str, &str)]) -> ArgumentationFramework {
        ArgumentationFramework::from_labels(labels, attacks).expect("fixture is well formed")
    }

    pub fn self_contradiction() -> ArgumentationFramework {
        build(&["a", "a1", "a2", "b"], &[("a", "a"), ("a1", "b"), ("a2", "b")])
    }

    pub fn quality_precedence() -> ArgumentationFramework {
        build(
            &["a", "b", "c", "d1", "d2", "e", "e1", "e2", "e3", "e4"],
            &[
                ("e", "c"),
                ("c", "b"),
                ("e1", "d1"),
                ("d1", "a"),
                ("e2", "d1"),
                ("e3", "d2"),
                ("d2", "a"),
                ("e4", "d2"),
            ],
        )
    }

    pub fn independence_stable() -> ArgumentationFramework {
        build(&["a", "b", "c"], &[("a", "a"), ("b", "c")])
    }

    /// `a3` has two attackers each defended once; `a4` has three attackers
    /// defended twice, twice and once.
    pub fn cardinality() -> ArgumentationFramework {
        build(
            &[
                "a3", "b3", "c3", "d3", "e3", "a4", "b4", "c4", "d4", "p1", "p2", "q1", "q2", "r",
            ],
            &[
                ("b3", "a3"),
                ("c3", "a3"),
                ("d3", "b3"),
                ("e3", "c3"),
                ("b4", "a4"),
                ("c4", "a4"),
                ("d4", "a4"),
                ("p1", "b4"),
                ("p2", "b4"),
                ("q1", "d4"),
                ("q2", "d4"),
                ("r", "c4"),
            ],
        )
    }

    /// `a` and `b` have one attacker each; `c` is unattacked while `d` is
    /// defended only through the undefended `e1`.
    pub fn counter_transitivity() -> ArgumentationFramework {
        build(
            &["a", "b", "c", "d", "e1", "f"],
            &[("d", "a"), ("e1", "d"), ("f", "e1"), ("c", "b")],
        )
    }

    /// `a` is defended by `d`, which is itself attacked; `b` is undefended.
    pub fn defense_precedence() -> ArgumentationFramework {
        build(
            &["a", "b", "c", "d", "e", "f"],
            &[("c", "a"), ("d", "c"), ("e", "d"), ("f", "b")],
        )
    }

    /// `t` is defended by the unattacked `u` inside a mutual-attack triangle.
    pub fn defended_triangle() -> ArgumentationFramework {
        build(
            &["t", "s1", "s2", "u"],
            &[
                ("t", "s1"),
                ("s1", "t"),
                ("t", "s2"),
                ("s2", "t"),
                ("s1", "s2"),
                ("s2", "s1"),
                ("u", "s1"),
                ("u", "s2"),
            ],
        )
    }

    /// A single unattacked argument.
    pub fn lone() -> ArgumentationFramework {
        build(&["a"], &[])
    }
}

/// A named postulate run on a built-in framework, with the expected outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedCheck {
    pub name: &'static str,
    pub expected: Outcome,
    pub verdict: PostulateVerdict,
}

impl NamedCheck {
    pub fn matches(&self) -> bool {
        self.verdict.outcome == self.expected
    }
}

/// Runs every built-in counterexample under grounded and preferred semantics.
///
/// Attack-path addition is only run under preferred semantics, the one for
/// which a counterexample is known.
pub fn check_named_counterexamples(scope: TripleScope) -> Result<Vec<NamedCheck>> {
    use fixtures::*;
    let mut out = Vec::new();
    for sem in [Semantics::Grounded, Semantics::Preferred] {
        let mut push = |name, v: PostulateVerdict| {
            out.push(NamedCheck {
                name,
                expected: Outcome::Violated,
                verdict: v,
            })
        };
        push(
            "self-attacker",
            check_self_contradiction(&self_contradiction(), sem, scope)?,
        );
        push("quality", check_quality_precedence(&quality_precedence(), sem, scope)?);
        push("cardinality", check_cardinality_precedence(&cardinality(), sem, scope)?);
        push(
            "counter-transitivity",
            check_strict_counter_transitivity(&counter_transitivity(), sem, scope)?,
        );
        push("defense", check_defense_precedence(&defense_precedence(), sem, scope)?);
        push(
            "lone defense path",
            check_strict_addition_of_defense_path(&lone(), 0, 2, sem, scope)?,
        );
        if sem == Semantics::Preferred {
            push(
                "triangle attack path",
                check_addition_of_attack_path(&defended_triangle(), 0, 1, sem, scope)?,
            );
        }
        push(
            "lone attack increase",
            check_increase_of_attack_path(&lone(), 0, 1, sem, scope)?,
        );
        push(
            "lone defense increase",
            check_increase_of_defense_path(&lone(), 0, 2, sem, scope)?,
        );
    }
    Ok(out)
}

/// Folds a per-framework check over a corpus: the first violation, or Holds.
fn over_corpus(
    corpus: &[ArgumentationFramework],
    postulate: Postulate,
    sem: Semantics,
    mut check: impl FnMut(&ArgumentationFramework) -> Result<PostulateVerdict>,
) -> Result<PostulateVerdict> {
    for af in corpus {
        let v = check(af)?;
        if v.outcome == Outcome::Violated {
            return Ok(v);
        }
    }
    Ok(verdict(postulate, sem, None))
}

/// The full verdict table: properties expected to hold, checked on the
/// built-in frameworks plus `corpus_size` seeded random frameworks of up to 6
/// arguments, followed by the named counterexamples.
pub fn standard_report(corpus_size: usize, seed: u64, scope: TripleScope) -> Result<Vec<NamedCheck>> {
    use crate::random::corpus;
    use rand::{seq::SliceRandom, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    let mut frameworks = vec![
        fixtures::independence_stable(),
        fixtures::self_contradiction(),
        fixtures::quality_precedence(),
    ];
    frameworks.extend(corpus(corpus_size, 6, seed));
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let mut out = Vec::new();
    let holds = |name, verdict| NamedCheck {
        name,
        expected: Outcome::Holds,
        verdict,
    };
    for sem in [Semantics::Grounded, Semantics::Preferred] {
        out.push(holds(
            "abstraction",
            over_corpus(&frameworks, Postulate::Abstraction, sem, |af| {
                let mut perm: Vec<usize> = (0..af.len()).collect();
                perm.shuffle(&mut rng);
                check_abstraction(af, &perm, sem, scope)
            })?,
        ));
        out.push(holds(
            "independence",
            over_corpus(&frameworks, Postulate::Independence, sem, |af| {
                check_independence(af, sem, scope, false)
            })?,
        ));
        out.push(holds(
            "void precedence",
            over_corpus(&frameworks, Postulate::VoidPrecedence, sem, |af| {
                check_void_precedence(af, sem, scope)
            })?,
        ));
        out.push(holds(
            "equal unattacked",
            over_corpus(&frameworks, Postulate::EqualUnattacked, sem, |af| {
                check_equal_unattacked(af, sem, scope)
            })?,
        ));
    }
    let indep = fixtures::independence_stable();
    out.push(holds(
        "independence",
        check_independence(&indep, Semantics::Stable, scope, false)?,
    ));
    out.push(NamedCheck {
        name: "strict independence",
        expected: Outcome::Violated,
        verdict: check_independence(&indep, Semantics::Stable, scope, true)?,
    });
    out.push(NamedCheck {
        name: "void precedence",
        expected: Outcome::Violated,
        verdict: check_void_precedence(&indep, Semantics::Stable, scope)?,
    });
    out.extend(check_named_counterexamples(scope)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const C: TripleScope = TripleScope::Constrained;

    #[test]
    fn self_contradiction_is_violated() {
        let v = check_self_contradiction(&fixtures::self_contradiction(), Semantics::Preferred, C).unwrap();
        assert_eq!(v.outcome, Outcome::Violated);
        let w = v.witness.unwrap();
        assert_eq!(w.pair_labels(), ("a", "b"));
        assert!(w.recheck(Semantics::Preferred, C).unwrap());
    }

    #[test]
    fn independence_on_self_loop_graph() {
        let f = fixtures::independence_stable();
        for sem in [Semantics::Grounded, Semantics::Preferred, Semantics::Stable] {
            assert_eq!(check_independence(&f, sem, C, false).unwrap().outcome, Outcome::Holds);
        }
        let v = check_independence(&f, Semantics::Stable, C, true).unwrap();
        assert_eq!(v.outcome, Outcome::Violated);
        assert_eq!(v.witness.as_ref().unwrap().pair_labels(), ("b", "c"));
        assert_eq!(v.witness.unwrap().relation, Relation::Equivalent);
    }

    #[test]
    fn void_precedence_stable_violation() {
        let f = fixtures::independence_stable();
        let v = check_void_precedence(&f, Semantics::Stable, C).unwrap();
        assert_eq!(v.outcome, Outcome::Violated);
        let r = crate::ranking::absolute_rank(&f, Semantics::Stable, C).unwrap();
        assert!(r.equivalent(1, 2));
        for sem in [Semantics::Grounded, Semantics::Preferred] {
            assert_eq!(check_void_precedence(&f, sem, C).unwrap().outcome, Outcome::Holds);
        }
    }

    #[test]
    fn path_transform_shapes() {
        let (af, t, c) = path_transform(&fixtures::lone(), 0, PathChange::Increase, 1).unwrap();
        assert_eq!((af.label(t), af.label(c)), ("a", "a'"));
        assert_eq!(af.len(), 2 + 1 + 3);
        assert_eq!(af.in_degree(t), 1);
        assert_eq!(af.in_degree(c), 1);
    }

    #[test]
    fn named_table_matches() {
        for c in check_named_counterexamples(C).unwrap() {
            assert!(c.matches(), "{} under {}", c.name, c.verdict.semantics);
            let w = c.verdict.witness.unwrap();
            assert!(w.recheck(c.verdict.semantics, C).unwrap());
        }
    }

    #[test]
    fn triangle_attack_path_is_incomparable() {
        let v = check_addition_of_attack_path(&fixtures::defended_triangle(), 0, 1, Semantics::Preferred, C).unwrap();
        let w = v.witness.unwrap();
        assert_eq!(w.pair_labels(), ("t", "t'"));
        assert_eq!(w.relation, Relation::Incomparable);
    }
}
