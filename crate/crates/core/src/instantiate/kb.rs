use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::formula::{Formula, TruthTable};
use crate::error::{Error, Result};

/// Most formulas a base may hold; subsets are enumerated as 32-bit masks.
pub const MAX_FORMULAS: usize = 16;

/// A set of base formulas, as a bitmask over formula indices.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PremiseSet(pub u32);

impl PremiseSet {
    pub fn singleton(i: usize) -> PremiseSet {
        PremiseSet(1 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn union(self, other: PremiseSet) -> PremiseSet {
        PremiseSet(self.0 | other.0)
    }

    pub fn is_subset(self, other: PremiseSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.contains(i))
    }
}

impl fmt::Debug for PremiseSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A stratified base. Stratum 0 is the most preferred.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnowledgeBase {
    formulas: Vec<Formula>,
    stratum: Vec<usize>,
    strata: usize,
}

impl KnowledgeBase {
    /// Builds a base from strata ordered from most to least preferred.
    pub fn from_strata(strata: Vec<Vec<Formula>>) -> Result<KnowledgeBase> {
        let mut formulas = Vec::new();
        let mut stratum = Vec::new();
        for (i, s) in strata.iter().enumerate() {
            if s.is_empty() {
                return Err(Error::Formula(format!("stratum {} is empty", i + 1)));
            }
            for f in s {
                if formulas.contains(f) {
                    return Err(Error::Formula(format!("formula `{f}` appears twice")));
                }
                formulas.push(f.clone());
                stratum.push(i);
            }
        }
        if formulas.len() > MAX_FORMULAS {
            return Err(Error::KnowledgeBaseTooLarge {
                count: formulas.len(),
                bound: MAX_FORMULAS,
            });
        }
        TruthTable::new(&formulas)?;
        Ok(KnowledgeBase {
            formulas,
            stratum,
            strata: strata.len(),
        })
    }

    /// Parses lines `k: formula`, where `k >= 1` and 1 is the strongest
    /// stratum. Blank lines and lines starting with `%` are skipped. Stratum
    /// numbers need not be contiguous; only their order matters.
    pub fn parse(text: &str) -> Result<KnowledgeBase> {
        let mut by_rank: BTreeMap<u64, Vec<Formula>> = BTreeMap::new();
        let mut seen: Vec<Formula> = Vec::new();
        for (no, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('%') {
                continue;
            }
            let err = |m: String| Error::Formula(format!("line {}: {m}", no + 1));
            let (k, body) = line
                .split_once(':')
                .ok_or_else(|| err("expected `stratum: formula`".into()))?;
            let k: u64 = k
                .trim()
                .parse()
                .ok()
                .filter(|&k| k >= 1)
                .ok_or_else(|| err(format!("bad stratum `{}`", k.trim())))?;
            let f: Formula = body.parse().map_err(|e: Error| err(e.to_string()))?;
            if seen.contains(&f) {
                return Err(err(format!("formula `{f}` appears twice")));
            }
            seen.push(f.clone());
            by_rank.entry(k).or_default().push(f);
        }
        KnowledgeBase::from_strata(by_rank.into_values().collect())
    }

    pub fn len(&self) -> usize {
        self.formulas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.formulas.is_empty()
    }

    pub fn formulas(&self) -> &[Formula] {
        &self.formulas
    }

    pub fn formula(&self, i: usize) -> &Formula {
        &self.formulas[i]
    }

    /// Zero-based stratum of formula `i`.
    pub fn stratum_of(&self, i: usize) -> usize {
        self.stratum[i]
    }

    pub fn strata_count(&self) -> usize {
        self.strata
    }

    /// Formula indices of stratum `s`.
    pub fn stratum(&self, s: usize) -> PremiseSet {
        let mut p = PremiseSet::default();
        for i in (0..self.len()).filter(|&i| self.stratum[i] == s) {
            p.insert(i);
        }
        p
    }

    /// Strictly less preferred, `formula(i) < formula(j)`.
    pub fn less_preferred(&self, i: usize, j: usize) -> bool {
        self.stratum[i] > self.stratum[j]
    }

    pub fn all(&self) -> PremiseSet {
        PremiseSet(((1u64 << self.len()) - 1) as u32)
    }

    pub fn formulas_of(&self, p: PremiseSet) -> Vec<Formula> {
        p.iter().map(|i| self.formulas[i].clone()).collect()
    }

    pub fn format_set(&self, p: PremiseSet) -> String {
        let parts: Vec<String> = p.iter().map(|i| self.formulas[i].to_string()).collect();
        format!("{{{}}}", parts.join(", "))
    }

    /// Text that `parse` reads back to the same base.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (f, s) in self.formulas.iter().zip(&self.stratum) {
            out.push_str(&format!("{}: {f}\n", s + 1));
        }
        out
    }
}

fn random_formula(rng: &mut ChaCha8Rng, atoms: usize, depth: usize) -> Formula {
    let leaf = depth == 0 || rng.gen_bool(0.35);
    if leaf {
        let a = Formula::Atom(((b'a' + rng.gen_range(0..atoms) as u8) as char).to_string());
        return if rng.gen_bool(0.4) { a.negate() } else { a };
    }
    let a = random_formula(rng, atoms, depth - 1);
    match rng.gen_range(0..4) {
        0 => a.negate(),
        1 => Formula::and(a, random_formula(rng, atoms, depth - 1)),
        2 => Formula::or(a, random_formula(rng, atoms, depth - 1)),
        _ => Formula::implies(a, random_formula(rng, atoms, depth - 1)),
    }
}

/// Seeded random base with 1..=`max_formulas` distinct formulas over at most
/// `max_atoms` atoms (named a, b, ...) in at most `max_strata` strata.
pub fn random_knowledge_base(seed: u64, max_formulas: usize, max_atoms: usize, max_strata: usize) -> KnowledgeBase {
    assert!((1..=MAX_FORMULAS).contains(&max_formulas));
    assert!((1..=26).contains(&max_atoms) && max_strata >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = rng.gen_range(1..=max_formulas);
    let atoms = rng.gen_range(1..=max_atoms);
    let mut formulas: Vec<Formula> = Vec::new();
    while formulas.len() < count {
        let f = random_formula(&mut rng, atoms, 2);
        if !formulas.contains(&f) {
            formulas.push(f);
        }
    }
    let strata = rng.gen_range(1..=max_strata.min(count));
    let mut ranks: Vec<usize> = (0..count)
        .map(|i| if i < strata { i } else { rng.gen_range(0..strata) })
        .collect();
    ranks.sort_unstable();
    let mut grouped = vec![Vec::new(); strata];
    for (f, r) in formulas.into_iter().zip(ranks) {
        grouped[r].push(f);
    }
    KnowledgeBase::from_strata(grouped).expect("generated base is within bounds")
}
