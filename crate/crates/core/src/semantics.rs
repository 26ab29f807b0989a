//! Graded extensions: predicates, brute-force enumeration and the fixpoint
//! constructions.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::af::ArgumentationFramework;
use crate::error::{Error, Result};
use crate::kernel::{graded_defense, graded_neutrality, lfp_from, GradeParams};
use crate::set::ArgumentSet;

/// Default subset-enumeration bound.
pub const DEFAULT_MAX_ARGS: usize = 24;
const HARD_MAX_ARGS: usize = 63;

/// The enumeration bound, overridable through `GRADARG_MAX_ARGS` (capped at 63).
pub fn enumeration_bound() -> usize {
    std::env::var("GRADARG_MAX_ARGS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map(|v| v.min(HARD_MAX_ARGS))
        .unwrap_or(DEFAULT_MAX_ARGS)
}

fn check_bound(af: &ArgumentationFramework) -> Result<()> {
    let bound = enumeration_bound();
    if af.len() > bound {
        Err(Error::TooLarge { args: af.len(), bound })
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Semantics {
    Admissible,
    Complete,
    Grounded,
    Preferred,
    Stable,
}

impl Semantics {
    pub fn name(self) -> &'static str {
        match self {
            Semantics::Admissible => "admissible",
            Semantics::Complete => "complete",
            Semantics::Grounded => "grounded",
            Semantics::Preferred => "preferred",
            Semantics::Stable => "stable",
        }
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Semantics {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "admissible" => Ok(Semantics::Admissible),
            "complete" => Ok(Semantics::Complete),
            "grounded" => Ok(Semantics::Grounded),
            "preferred" => Ok(Semantics::Preferred),
            "stable" => Ok(Semantics::Stable),
            other => Err(format!("unknown semantics `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Existence {
    Found,
    NoneExists,
    NoUniqueMinimum,
}

/// A set that explains a negative existence verdict, with the predicate
/// clause it fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub set: ArgumentSet,
    pub clause: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionFamily {
    pub semantics: Semantics,
    pub params: GradeParams,
    pub extensions: Vec<ArgumentSet>,
    pub existence: Existence,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Credulous,
    Sceptical,
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "credulous" => Ok(Mode::Credulous),
            "sceptical" | "skeptical" => Ok(Mode::Sceptical),
            other => Err(format!("unknown mode `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JustifiedReport {
    pub mode: Mode,
    pub params: GradeParams,
    pub semantics: Semantics,
    pub arguments: ArgumentSet,
}

impl ExtensionFamily {
    /// Union (credulous) or intersection (sceptical) of the family. An empty
    /// family justifies nothing credulously and everything sceptically.
    pub fn justified(&self, universe: usize, mode: Mode) -> ArgumentSet {
        match mode {
            Mode::Credulous => self
                .extensions
                .iter()
                .fold(ArgumentSet::empty(universe), |acc, e| acc.union(e)),
            Mode::Sceptical => self
                .extensions
                .iter()
                .fold(ArgumentSet::full(universe), |acc, e| acc.intersection(e)),
        }
    }
}

pub fn is_l_conflict_free(af: &ArgumentationFramework, l: usize, x: &ArgumentSet) -> bool {
    x.is_subset(&graded_neutrality(af, l, x))
}

pub fn is_lmn_admissible(af: &ArgumentationFramework, p: GradeParams, x: &ArgumentSet) -> bool {
    is_l_conflict_free(af, p.l, x) && x.is_subset(&graded_defense(af, p.m, p.n, x))
}

pub fn is_lmn_complete(af: &ArgumentationFramework, p: GradeParams, x: &ArgumentSet) -> bool {
    is_l_conflict_free(af, p.l, x) && *x == graded_defense(af, p.m, p.n, x)
}

/// `X = n_n(X) = n_m(X) ⊆ n_l(X)`
pub fn is_lmn_stable(af: &ArgumentationFramework, p: GradeParams, x: &ArgumentSet) -> bool {
    *x == graded_neutrality(af, p.n, x) && *x == graded_neutrality(af, p.m, x) && is_l_conflict_free(af, p.l, x)
}

/// Attacker masks for frameworks small enough to enumerate.
struct MaskKernel {
    attackers: Vec<u64>,
}

impl MaskKernel {
    fn new(af: &ArgumentationFramework) -> Self {
        let attackers = (0..af.len())
            .map(|x| af.attackers_of(x).to_mask().expect("enumerable framework"))
            .collect();
        MaskKernel { attackers }
    }

    fn neutral(&self, l: usize, x: u64) -> u64 {
        let mut out = 0;
        for (i, &a) in self.attackers.iter().enumerate() {
            if ((a & x).count_ones() as usize) < l {
                out |= 1 << i;
            }
        }
        out
    }

    fn conflict_free(&self, l: usize, x: u64) -> bool {
        let mut rest = x;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            if (self.attackers[i] & x).count_ones() as usize >= l {
                return false;
            }
            rest &= rest - 1;
        }
        true
    }

    fn defense(&self, m: usize, n: usize, x: u64) -> u64 {
        self.neutral(m, self.neutral(n, x))
    }

    fn lfp(&self, m: usize, n: usize) -> u64 {
        let mut cur = 0;
        loop {
            let next = self.defense(m, n, cur);
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }
}

fn all_masks(n: usize) -> impl ParallelIterator<Item = u64> {
    (0..1u64 << n).into_par_iter()
}

/// Result of one exhaustive subset scan at a defense grade `(m,n)`.
///
/// Complete, grounded, preferred and stable families at every `l` follow from
/// the fixpoints of `d_mn` by filtering for `l`-conflict-freeness, so one scan
/// serves a whole column of a parameter sweep.
pub struct SubsetScan {
    universe: usize,
    m: usize,
    n: usize,
    kernel: MaskKernel,
    /// Fixpoints of `d_mn`, ascending by mask.
    fixpoints: Vec<u64>,
    /// Fixpoints with `X = n_n(X) = n_m(X)`.
    stable_candidates: Vec<u64>,
}

impl SubsetScan {
    pub fn new(af: &ArgumentationFramework, m: usize, n: usize) -> Result<Self> {
        check_bound(af)?;
        let kernel = MaskKernel::new(af);
        let fixpoints: Vec<u64> = all_masks(af.len()).filter(|&x| kernel.defense(m, n, x) == x).collect();
        let stable_candidates = fixpoints
            .iter()
            .copied()
            .filter(|&x| kernel.neutral(n, x) == x && kernel.neutral(m, x) == x)
            .collect();
        Ok(SubsetScan {
            universe: af.len(),
            m,
            n,
            kernel,
            fixpoints,
            stable_candidates,
        })
    }

    fn set(&self, mask: u64) -> ArgumentSet {
        ArgumentSet::from_mask(self.universe, mask)
    }

    fn complete_masks(&self, l: usize) -> Vec<u64> {
        self.fixpoints
            .iter()
            .copied()
            .filter(|&x| self.kernel.conflict_free(l, x))
            .collect()
    }

    fn lfp_witness(&self, l: usize) -> Witness {
        let lfp = self.kernel.lfp(self.m, self.n);
        debug_assert!(!self.kernel.conflict_free(l, lfp));
        Witness {
            set: self.set(lfp),
            clause: "X ⊆ n_l(X)".to_string(),
        }
    }

    /// The family for `sem` at `(l, m, n)`. Admissible sets are not covered
    /// by a fixpoint scan; use [`enumerate_extensions`] for them.
    pub fn family(&self, sem: Semantics, l: usize) -> ExtensionFamily {
        let params = GradeParams {
            l,
            m: self.m,
            n: self.n,
        };
        let (masks, existence, witness) = match sem {
            Semantics::Admissible => panic!("admissible sets need a full scan"),
            Semantics::Complete => {
                let c = self.complete_masks(l);
                if c.is_empty() {
                    (c, Existence::NoneExists, Some(self.lfp_witness(l)))
                } else {
                    (c, Existence::Found, None)
                }
            }
            Semantics::Grounded => {
                let c = self.complete_masks(l);
                if c.is_empty() {
                    (c, Existence::NoneExists, Some(self.lfp_witness(l)))
                } else {
                    let least = c.iter().copied().min_by_key(|x| (x.count_ones(), *x)).unwrap();
                    if c.iter().all(|&y| least & !y == 0) {
                        (vec![least], Existence::Found, None)
                    } else {
                        let w = Witness {
                            set: self.set(least),
                            clause: "contained in every complete extension".to_string(),
                        };
                        (Vec::new(), Existence::NoUniqueMinimum, Some(w))
                    }
                }
            }
            Semantics::Preferred => {
                let c = self.complete_masks(l);
                if c.is_empty() {
                    (c, Existence::NoneExists, Some(self.lfp_witness(l)))
                } else {
                    let maximal = c
                        .iter()
                        .copied()
                        .filter(|&x| !c.iter().any(|&y| y != x && x & !y == 0))
                        .collect();
                    (maximal, Existence::Found, None)
                }
            }
            Semantics::Stable => {
                let s: Vec<u64> = self
                    .stable_candidates
                    .iter()
                    .copied()
                    .filter(|&x| self.kernel.conflict_free(l, x))
                    .collect();
                if s.is_empty() {
                    (s, Existence::NoneExists, Some(self.stable_witness(l)))
                } else {
                    (s, Existence::Found, None)
                }
            }
        };
        ExtensionFamily {
            semantics: sem,
            params,
            extensions: masks.into_iter().map(|x| self.set(x)).collect(),
            existence,
            witness,
        }
    }

    fn stable_witness(&self, l: usize) -> Witness {
        let lfp = self.kernel.lfp(self.m, self.n);
        let clause = if self.kernel.neutral(self.n, lfp) != lfp {
            "X = n_n(X)"
        } else if self.kernel.neutral(self.m, lfp) != lfp {
            "X = n_m(X)"
        } else {
            debug_assert!(!self.kernel.conflict_free(l, lfp));
            "X ⊆ n_l(X)"
        };
        Witness {
            set: self.set(lfp),
            clause: clause.to_string(),
        }
    }
}

/// Brute force over all subsets, keeping those that satisfy the predicate
/// for `sem` at `params`.
pub fn enumerate_extensions(
    af: &ArgumentationFramework,
    sem: Semantics,
    params: GradeParams,
) -> Result<ExtensionFamily> {
    check_bound(af)?;
    if sem == Semantics::Admissible {
        let k = MaskKernel::new(af);
        let GradeParams { l, m, n } = params;
        let masks: Vec<u64> = all_masks(af.len())
            .filter(|&x| k.conflict_free(l, x) && x & !k.defense(m, n, x) == 0)
            .collect();
        return Ok(ExtensionFamily {
            semantics: sem,
            params,
            extensions: masks.into_iter().map(|x| ArgumentSet::from_mask(af.len(), x)).collect(),
            existence: Existence::Found,
            witness: None,
        });
    }
    Ok(SubsetScan::new(af, params.m, params.n)?.family(sem, params.l))
}

/// The grounded extension as the least fixpoint of `d_mn`.
///
/// Every complete extension is a fixpoint of `d_mn` and so contains the
/// least one, and supersets of a set that is not `l`-conflict-free are not
/// either. The least fixpoint is therefore the grounded extension when it is
/// `l`-conflict-free and no complete extension exists otherwise, for every
/// choice of parameters. Under `n >= m, l >= m` the check never fails.
pub fn grounded_by_construction(af: &ArgumentationFramework, params: GradeParams) -> ExtensionFamily {
    let stream = lfp_from(af, params.m, params.n, &af.empty_set()).expect("the empty set is always expandable");
    let limit = stream.limit;
    if is_l_conflict_free(af, params.l, &limit) {
        ExtensionFamily {
            semantics: Semantics::Grounded,
            params,
            extensions: vec![limit],
            existence: Existence::Found,
            witness: None,
        }
    } else {
        ExtensionFamily {
            semantics: Semantics::Grounded,
            params,
            extensions: Vec::new(),
            existence: Existence::NoneExists,
            witness: Some(Witness {
                set: limit,
                clause: "X ⊆ n_l(X)".to_string(),
            }),
        }
    }
}

fn require_admissible(af: &ArgumentationFramework, params: GradeParams, x: &ArgumentSet) -> Result<()> {
    if is_lmn_admissible(af, params, x) {
        Ok(())
    } else {
        Err(Error::NotAdmissible(params))
    }
}

fn closure_limit(af: &ArgumentationFramework, params: GradeParams, x: &ArgumentSet) -> Result<ArgumentSet> {
    require_admissible(af, params, x)?;
    let limit = lfp_from(af, params.m, params.n, x)?.limit;
    if is_l_conflict_free(af, params.l, &limit) {
        Ok(limit)
    } else {
        Err(Error::NoCompleteSuperset(params))
    }
}

/// The smallest complete extension containing the admissible set `X`.
///
/// Fails with `NoCompleteSuperset` when the least fixpoint above `X` is not
/// `l`-conflict-free. Under `n >= m, l >= m` that needs `X` itself not to be
/// `m`-conflict-free, as with a self-attacker `X = {a}` at `(2,1,1)`.
pub fn complete_closure(af: &ArgumentationFramework, params: GradeParams, x: &ArgumentSet) -> Result<ArgumentSet> {
    closure_limit(af, params, x)
}

/// The fixpoint closure of an admissible `X` from which every argument is
/// reachable along a non-empty attack path.
///
/// The result is the least complete extension containing `X` but need not be
/// preferred: with `a0 <-> a1`, `a2 <-> a3`, `a2 -> a1` and `X = {a3}`
/// everything is reachable from `a3`, the closure is `{a3}`, and `{a1,a3}`
/// is admissible.
pub fn preferred_by_reachability(
    af: &ArgumentationFramework,
    params: GradeParams,
    x: &ArgumentSet,
) -> Result<ArgumentSet> {
    require_admissible(af, params, x)?;
    if !af.full_set().is_subset(&af.reachable_from(x)) {
        return Err(Error::NotReaching);
    }
    closure_limit(af, params, x)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableCheck {
    /// Whether the lower and upper streams meet.
    pub converged: bool,
    pub lower: ArgumentSet,
    pub upper: ArgumentSet,
    /// Whether the lower limit satisfies the stable predicate directly.
    pub lower_is_stable: bool,
}

impl StableCheck {
    /// The smallest stable extension containing the start set, when the
    /// streams converge on a set that passes the stable predicate.
    pub fn extension(&self) -> Option<&ArgumentSet> {
        (self.converged && self.lower_is_stable).then_some(&self.lower)
    }
}

/// Compares the limit of `d_mn` iterated from `X` with the limit of the
/// upper stream `n_n(d_mn^k(X))`, which is the `gfp_from` stream.
pub fn stable_convergence_check(
    af: &ArgumentationFramework,
    params: GradeParams,
    x: &ArgumentSet,
) -> Result<StableCheck> {
    require_admissible(af, params, x)?;
    let lower = lfp_from(af, params.m, params.n, x)?.limit;
    let upper = crate::kernel::gfp_from(af, params.m, params.n, x)?.limit;
    Ok(StableCheck {
        converged: lower == upper,
        lower_is_stable: is_lmn_stable(af, params, &lower),
        lower,
        upper,
    })
}

pub fn justified(
    af: &ArgumentationFramework,
    sem: Semantics,
    params: GradeParams,
    mode: Mode,
) -> Result<JustifiedReport> {
    let family = enumerate_extensions(af, sem, params)?;
    Ok(JustifiedReport {
        mode,
        params,
        semantics: sem,
        arguments: family.justified(af.len(), mode),
    })
}
