use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use super::formula::{entails, Formula, Models, TruthTable};
use super::kb::{KnowledgeBase, PremiseSet};
use crate::af::ArgumentationFramework;
use crate::error::{Error, Result};
use crate::kernel::GradeParams;
use crate::semantics::{enumerate_extensions, enumeration_bound, Mode, Semantics};
use crate::set::ArgumentSet;

/// A classical argument `(premises, claim)` over base formulas.
///
/// Premises are consistent and entail the claim, and no proper subset does,
/// except for the premise argument of a valid formula.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassicalArgument {
    #[serde(serialize_with = "serialize_premises")]
    pub premises: PremiseSet,
    pub claim: Formula,
    pub is_premise_arg: bool,
}

fn serialize_premises<S: serde::Serializer>(p: &PremiseSet, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(p.iter())
}

/// Defeat graph of a base, with the node to argument mapping.
#[derive(Debug, Clone)]
pub struct DefeatGraph {
    pub framework: ArgumentationFramework,
    pub arguments: Vec<ClassicalArgument>,
    /// All attacks, defeated or not, as (attacker, target) node pairs.
    pub attacks: Vec<(usize, usize)>,
}

impl DefeatGraph {
    /// Union of the premises of the arguments in `set`.
    pub fn premises_of(&self, set: &ArgumentSet) -> PremiseSet {
        set.iter()
            .fold(PremiseSet::default(), |acc, i| acc.union(self.arguments[i].premises))
    }

    /// Node whose premises and claim match.
    pub fn find(&self, premises: PremiseSet, claim: &Formula) -> Option<usize> {
        self.arguments
            .iter()
            .position(|a| a.premises == premises && &a.claim == claim)
    }
}

struct Oracle<'a> {
    kb: &'a KnowledgeBase,
    models: Vec<Models>,
    table: TruthTable,
}

impl<'a> Oracle<'a> {
    fn new(kb: &'a KnowledgeBase) -> Result<Oracle<'a>> {
        let table = TruthTable::new(kb.formulas())?;
        let models = kb.formulas().iter().map(|f| table.models(f)).collect();
        Ok(Oracle { kb, models, table })
    }

    fn models_of(&self, p: PremiseSet) -> Models {
        p.iter().fold(self.table.tautology(), |acc, i| acc.and(&self.models[i]))
    }

    fn consistent(&self, p: PremiseSet) -> bool {
        !self.models_of(p).is_empty()
    }

    fn entails(&self, p: PremiseSet, goal: &Models) -> bool {
        self.models_of(p).is_subset(goal)
    }

    /// Consistent, entails `goal`, and no subset missing one premise does.
    fn minimal_support(&self, p: PremiseSet, goal: &Models) -> bool {
        self.consistent(p)
            && self.entails(p, goal)
            && p.iter().all(|i| !self.entails(PremiseSet(p.0 & !(1 << i)), goal))
    }

    fn subsets(&self) -> impl Iterator<Item = PremiseSet> + '_ {
        (0..=self.kb.all().0).map(PremiseSet)
    }
}

/// Preferred subtheories: maximal consistent subsets taken stratum by
/// stratum, most preferred first. Sorted by premise mask.
pub fn preferred_subtheories(kb: &KnowledgeBase) -> Result<Vec<PremiseSet>> {
    let oracle = Oracle::new(kb)?;
    let mut family = vec![PremiseSet::default()];
    for s in 0..kb.strata_count() {
        let stratum = kb.stratum(s).0;
        let mut next = BTreeSet::new();
        for base in &family {
            let mut fits = Vec::new();
            let mut sub = stratum;
            loop {
                let cand = base.union(PremiseSet(sub));
                if oracle.consistent(cand) {
                    fits.push(sub);
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & stratum;
            }
            for &t in &fits {
                if !fits.iter().any(|&u| u != t && t & !u == 0) {
                    next.insert(base.union(PremiseSet(t)));
                }
            }
        }
        family = next.into_iter().collect();
    }
    Ok(family)
}

/// `α1` attacks the premise `β` when `α1 = ¬β` or `β = ¬α1`, comparing modulo
/// leading double negations.
fn contradicts(claim: &Formula, premise: &Formula) -> bool {
    claim.strip_double_negation() == premise.negate().strip_double_negation()
}

/// Builds the defeat graph: every premise argument `({β},β)` plus every
/// minimal consistent `Δ` entailing `¬β` for some base formula `β`.
///
/// An attack on premise `β` defeats unless some premise of the attacker is
/// strictly less preferred than `β`. Nodes are ordered by premise mask, then
/// claim text, and labelled `A0`, `A1`, ...
pub fn build_defeat_graph(kb: &KnowledgeBase) -> Result<DefeatGraph> {
    let oracle = Oracle::new(kb)?;
    let mut args: Vec<ClassicalArgument> = (0..kb.len())
        .filter(|&i| oracle.consistent(PremiseSet::singleton(i)))
        .map(|i| ClassicalArgument {
            premises: PremiseSet::singleton(i),
            claim: kb.formula(i).clone(),
            is_premise_arg: true,
        })
        .collect();
    let generated: Vec<ClassicalArgument> = (0..kb.len())
        .into_par_iter()
        .flat_map_iter(|b| {
            let claim = kb.formula(b).negate().strip_double_negation().clone();
            let goal = oracle.table.models(&kb.formula(b).negate());
            let oracle = &oracle;
            oracle
                .subsets()
                .filter(move |&p| oracle.minimal_support(p, &goal))
                .map(move |p| ClassicalArgument {
                    premises: p,
                    claim: claim.clone(),
                    is_premise_arg: false,
                })
                .collect::<Vec<_>>()
        })
        .collect();
    for g in generated {
        if !args.iter().any(|a| a.premises == g.premises && a.claim == g.claim) {
            args.push(g);
        }
    }
    let bound = enumeration_bound();
    if args.len() > bound {
        return Err(Error::TooManyArguments {
            count: args.len(),
            bound,
        });
    }
    let mut keyed: Vec<(u32, String, ClassicalArgument)> = args
        .into_iter()
        .map(|a| (a.premises.0, a.claim.to_string(), a))
        .collect();
    keyed.sort_by(|x, y| (x.0, &x.1).cmp(&(y.0, &y.1)));
    let args: Vec<ClassicalArgument> = keyed.into_iter().map(|k| k.2).collect();

    let mut attacks = Vec::new();
    let mut defeats = Vec::new();
    for (i, a) in args.iter().enumerate() {
        for (j, t) in args.iter().enumerate() {
            let hits: Vec<usize> = t
                .premises
                .iter()
                .filter(|&b| contradicts(&a.claim, kb.formula(b)))
                .collect();
            if hits.is_empty() {
                continue;
            }
            attacks.push((i, j));
            let succeeds = hits
                .iter()
                .any(|&b| !a.premises.iter().any(|g| kb.less_preferred(g, b)));
            if succeeds {
                defeats.push((i, j));
            }
        }
    }
    let labels = (0..args.len()).map(|i| format!("A{i}")).collect();
    let framework = ArgumentationFramework::new(labels, defeats)?;
    Ok(DefeatGraph {
        framework,
        arguments: args,
        attacks,
    })
}

/// Outcome of comparing preferred subtheories with stable extensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrespondenceCheck {
    pub holds: bool,
    pub subtheories: Vec<PremiseSet>,
    /// Premise sets of the (1,1,1)-stable extensions, sorted and deduplicated.
    pub stable_premises: Vec<PremiseSet>,
    pub stable_equals_preferred: bool,
    /// A premise set found on one side only.
    pub witness: Option<PremiseSet>,
}

/// Checks that the premise sets of the stable extensions of the defeat graph
/// are exactly the preferred subtheories, and that stable and preferred
/// extensions coincide on the graph.
pub fn ps_correspondence_check(kb: &KnowledgeBase) -> Result<CorrespondenceCheck> {
    let subtheories = preferred_subtheories(kb)?;
    let graph = build_defeat_graph(kb)?;
    let p = GradeParams::new(1, 1, 1)?;
    let stable = enumerate_extensions(&graph.framework, Semantics::Stable, p)?;
    let preferred = enumerate_extensions(&graph.framework, Semantics::Preferred, p)?;
    let stable_premises: Vec<PremiseSet> = stable
        .extensions
        .iter()
        .map(|e| graph.premises_of(e))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let witness = stable_premises
        .iter()
        .find(|s| !subtheories.contains(s))
        .or_else(|| subtheories.iter().find(|s| !stable_premises.contains(s)))
        .copied();
    let stable_equals_preferred = stable.extensions == preferred.extensions;
    Ok(CorrespondenceCheck {
        holds: witness.is_none() && stable_equals_preferred,
        subtheories,
        stable_premises,
        stable_equals_preferred,
        witness,
    })
}

/// Whether `goal` follows from the premises of every (sceptical) or some
/// (credulous) graded preferred extension of the defeat graph.
pub fn graded_inference(kb: &KnowledgeBase, params: GradeParams, goal: &Formula, mode: Mode) -> Result<bool> {
    let graph = build_defeat_graph(kb)?;
    let family = enumerate_extensions(&graph.framework, Semantics::Preferred, params)?;
    let mut verdicts = family.extensions.iter().map(|e| -> Result<bool> {
        let premises = kb.formulas_of(graph.premises_of(e));
        entails(&premises, goal)
    });
    match mode {
        Mode::Sceptical => verdicts.try_fold(true, |acc, v| Ok(acc && v?)),
        Mode::Credulous => verdicts.try_fold(false, |acc, v| Ok(acc || v?)),
    }
}
