//! Contextual and absolute argument rankings by parameter sweeps.

use std::fmt::{self, Write as _};

use rayon::prelude::*;
use serde::Serialize;

use crate::af::ArgumentationFramework;
use crate::error::Result;
use crate::kernel::{iterate_union, saturation_bound, DefenseGrade, GradeParams};
use crate::semantics::{enumerate_extensions, grounded_by_construction, Mode, Semantics, SubsetScan};
use crate::set::ArgumentSet;

/// Which triples an absolute ranking quantifies over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TripleScope {
    /// Every triple in `[1, K]^3`.
    #[default]
    All,
    /// Only triples with `n >= m` and `l >= m`.
    Constrained,
}

impl TripleScope {
    pub fn admits(self, p: GradeParams) -> bool {
        match self {
            TripleScope::All => true,
            TripleScope::Constrained => p.existence_safe(),
        }
    }
}

/// For each argument, the set of grade points at which it is justified.
///
/// Point sets are stored as bitsets over indices into `points`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JustificationSignature<P> {
    pub bound: usize,
    pub points: Vec<P>,
    per_argument: Vec<ArgumentSet>,
}

pub type ContextualSignature = JustificationSignature<DefenseGrade>;
pub type AbsoluteSignature = JustificationSignature<GradeParams>;

impl<P: Copy + PartialEq> JustificationSignature<P> {
    fn from_members(bound: usize, points: Vec<P>, members: Vec<ArgumentSet>, universe: usize) -> Self {
        let mut per_argument = vec![ArgumentSet::empty(points.len()); universe];
        for (i, m) in members.iter().enumerate() {
            for x in m.iter() {
                per_argument[x].insert(i);
            }
        }
        JustificationSignature {
            bound,
            points,
            per_argument,
        }
    }

    pub fn len(&self) -> usize {
        self.per_argument.len()
    }

    pub fn is_empty(&self) -> bool {
        self.per_argument.is_empty()
    }

    /// The grade points at which `x` is justified.
    pub fn points_of(&self, x: usize) -> Vec<P> {
        self.per_argument[x].iter().map(|i| self.points[i]).collect()
    }

    pub fn contains(&self, x: usize, point: P) -> bool {
        self.points
            .iter()
            .position(|&p| p == point)
            .is_some_and(|i| self.per_argument[x].contains(i))
    }

    /// A point where `a` is justified and `b` is not.
    pub fn separating_point(&self, a: usize, b: usize) -> Option<P> {
        self.per_argument[a]
            .difference(&self.per_argument[b])
            .iter()
            .next()
            .map(|i| self.points[i])
    }

    pub fn order(&self) -> ArgumentPartialOrder {
        let n = self.len();
        let geq = (0..n)
            .map(|a| {
                ArgumentSet::from_indices(
                    n,
                    (0..n).filter(|&b| self.per_argument[b].is_subset(&self.per_argument[a])),
                )
            })
            .collect();
        ArgumentPartialOrder { geq }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    StrictlyAbove,
    StrictlyBelow,
    Equivalent,
    Incomparable,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::StrictlyAbove => "≻",
            Relation::StrictlyBelow => "≺",
            Relation::Equivalent => "≈",
            Relation::Incomparable => "incomparable",
        })
    }
}

/// A preorder on arguments: `a ⪰ b` iff `b`'s signature is contained in `a`'s.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArgumentPartialOrder {
    geq: Vec<ArgumentSet>,
}

impl ArgumentPartialOrder {
    pub fn len(&self) -> usize {
        self.geq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.geq.is_empty()
    }

    pub fn at_least(&self, a: usize, b: usize) -> bool {
        self.geq[a].contains(b)
    }

    pub fn strictly_above(&self, a: usize, b: usize) -> bool {
        self.at_least(a, b) && !self.at_least(b, a)
    }

    pub fn equivalent(&self, a: usize, b: usize) -> bool {
        self.at_least(a, b) && self.at_least(b, a)
    }

    pub fn relation(&self, a: usize, b: usize) -> Relation {
        match (self.at_least(a, b), self.at_least(b, a)) {
            (true, true) => Relation::Equivalent,
            (true, false) => Relation::StrictlyAbove,
            (false, true) => Relation::StrictlyBelow,
            (false, false) => Relation::Incomparable,
        }
    }

    /// Equivalence classes, ordered by least member.
    pub fn classes(&self) -> Vec<ArgumentSet> {
        let n = self.len();
        let mut seen = ArgumentSet::empty(n);
        let mut out = Vec::new();
        for a in 0..n {
            if seen.contains(a) {
                continue;
            }
            let class = ArgumentSet::from_indices(n, (0..n).filter(|&b| self.equivalent(a, b)));
            seen = seen.union(&class);
            out.push(class);
        }
        out
    }

    /// Covering pairs `(upper, lower)` between classes.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let classes = self.classes();
        let rep: Vec<usize> = classes.iter().map(|c| c.iter().next().unwrap()).collect();
        let k = classes.len();
        let mut edges = Vec::new();
        for i in 0..k {
            for j in 0..k {
                if i == j || !self.strictly_above(rep[i], rep[j]) {
                    continue;
                }
                let covered = (0..k).any(|h| {
                    h != i && h != j && self.strictly_above(rep[i], rep[h]) && self.strictly_above(rep[h], rep[j])
                });
                if !covered {
                    edges.push((i, j));
                }
            }
        }
        edges
    }

    /// The Hasse diagram of the classes as DOT, stronger classes on top.
    pub fn to_dot(&self, af: &ArgumentationFramework) -> String {
        let classes = self.classes();
        let mut out = String::from("digraph ranking {\n  rankdir=TB;\n  node [shape=box];\n");
        for (i, c) in classes.iter().enumerate() {
            let _ = writeln!(out, "  c{i} [label=\"{}\"];", af.labels_of(c).join(", "));
        }
        for (i, j) in self.hasse_edges() {
            let _ = writeln!(out, "  c{i} -> c{j};");
        }
        out.push_str("}\n");
        out
    }
}

/// Membership of `∪_k d_mn^k(X)` for every `(m,n)` in `[1, K]^2`.
pub fn contextual_signature(af: &ArgumentationFramework, x: &ArgumentSet) -> ContextualSignature {
    contextual_signature_with_bound(af, x, saturation_bound(af))
}

pub fn contextual_signature_with_bound(
    af: &ArgumentationFramework,
    x: &ArgumentSet,
    bound: usize,
) -> ContextualSignature {
    let points: Vec<DefenseGrade> = DefenseGrade::sweep(bound).collect();
    let members = points.par_iter().map(|g| iterate_union(af, g.m, g.n, x)).collect();
    JustificationSignature::from_members(bound, points, members, af.len())
}

pub fn contextual_rank(af: &ArgumentationFramework, x: &ArgumentSet) -> ArgumentPartialOrder {
    contextual_signature(af, x).order()
}

/// Sceptical justification under `sem` at every admitted triple in `[1, K]^3`.
///
/// Grounded triples use the fixpoint construction, which is exact at every
/// triple; the other semantics enumerate subsets, one scan per `(m,n)`.
pub fn absolute_signature(
    af: &ArgumentationFramework,
    sem: Semantics,
    scope: TripleScope,
) -> Result<AbsoluteSignature> {
    absolute_signature_with_bound(af, sem, scope, saturation_bound(af))
}

pub fn absolute_signature_with_bound(
    af: &ArgumentationFramework,
    sem: Semantics,
    scope: TripleScope,
    bound: usize,
) -> Result<AbsoluteSignature> {
    let points: Vec<GradeParams> = GradeParams::sweep(bound).filter(|&p| scope.admits(p)).collect();
    let universe = af.len();
    let members: Vec<ArgumentSet> = match sem {
        Semantics::Grounded => points
            .par_iter()
            .map(|&p| grounded_by_construction(af, p).justified(universe, Mode::Sceptical))
            .collect(),
        Semantics::Admissible => points
            .par_iter()
            .map(|&p| enumerate_extensions(af, sem, p).map(|f| f.justified(universe, Mode::Sceptical)))
            .collect::<Result<_>>()?,
        _ => {
            let grades: Vec<DefenseGrade> = DefenseGrade::sweep(bound).collect();
            let scans: Vec<(DefenseGrade, SubsetScan)> = grades
                .par_iter()
                .filter(|g| points.iter().any(|p| p.defense() == **g))
                .map(|&g| SubsetScan::new(af, g.m, g.n).map(|s| (g, s)))
                .collect::<Result<_>>()?;
            points
                .par_iter()
                .map(|p| {
                    let (_, scan) = scans
                        .iter()
                        .find(|(g, _)| *g == p.defense())
                        .expect("scan for every grade");
                    scan.family(sem, p.l).justified(universe, Mode::Sceptical)
                })
                .collect()
        }
    };
    Ok(JustificationSignature::from_members(bound, points, members, universe))
}

pub fn absolute_rank(af: &ArgumentationFramework, sem: Semantics, scope: TripleScope) -> Result<ArgumentPartialOrder> {
    Ok(absolute_signature(af, sem, scope)?.order())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BridgeCheck {
    pub holds: bool,
    /// First pair `(a, b)` on which the two orders disagree about `a ⪰ b`.
    pub counterexample: Option<(usize, usize)>,
}

/// Compares `⪰^∅` with the absolute grounded ranking over `scope`.
pub fn contextual_equals_grounded(af: &ArgumentationFramework, scope: TripleScope) -> BridgeCheck {
    let ctx = contextual_rank(af, &af.empty_set());
    let grd = absolute_signature(af, Semantics::Grounded, scope)
        .expect("grounded signatures do not enumerate")
        .order();
    let n = af.len();
    let counterexample = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .find(|&(a, b)| ctx.at_least(a, b) != grd.at_least(a, b));
    BridgeCheck {
        holds: counterexample.is_none(),
        counterexample,
    }
}
