//! The argumentation framework data model.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::set::ArgumentSet;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArgumentId {
    pub index: usize,
    pub label: String,
}

/// A finite attack graph. Immutable once built.
///
/// Neighbourhoods are precomputed: `attackers_of(x)` is the set of direct
/// attackers of `x` and `defenders_of(x)` the attackers of those attackers.
#[derive(Clone)]
pub struct ArgumentationFramework {
    arguments: Vec<ArgumentId>,
    index: HashMap<String, usize>,
    attacks: Vec<(usize, usize)>,
    attackers: Vec<ArgumentSet>,
    attacker_lists: Vec<Vec<usize>>,
    targets: Vec<ArgumentSet>,
    defenders: Vec<ArgumentSet>,
    max_in_degree: usize,
}

pub(crate) fn valid_label(label: &str) -> bool {
    !label.is_empty() && !label.chars().any(char::is_whitespace)
}

impl ArgumentationFramework {
    /// Builds a framework from labels and index pairs. Duplicate attacks are merged.
    pub fn new(labels: Vec<String>, attacks: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let n = labels.len();
        let mut index = HashMap::with_capacity(n);
        let mut arguments = Vec::with_capacity(n);
        for (i, label) in labels.into_iter().enumerate() {
            if !valid_label(&label) {
                return Err(Error::InvalidLabel(label));
            }
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label));
            }
            arguments.push(ArgumentId { index: i, label });
        }
        let mut attacks: Vec<(usize, usize)> = attacks.into_iter().collect();
        if let Some(&(a, b)) = attacks.iter().find(|&&(a, b)| a >= n || b >= n) {
            return Err(Error::AttackOutOfRange(a, b));
        }
        attacks.sort_unstable();
        attacks.dedup();

        let mut attackers = vec![ArgumentSet::empty(n); n];
        let mut targets = vec![ArgumentSet::empty(n); n];
        let mut attacker_lists = vec![Vec::new(); n];
        for &(a, b) in &attacks {
            attackers[b].insert(a);
            targets[a].insert(b);
            attacker_lists[b].push(a);
        }
        let defenders = (0..n)
            .map(|x| {
                attacker_lists[x]
                    .iter()
                    .fold(ArgumentSet::empty(n), |acc, &y| acc.union(&attackers[y]))
            })
            .collect();
        let max_in_degree = attacker_lists.iter().map(Vec::len).max().unwrap_or(0);
        Ok(ArgumentationFramework {
            arguments,
            index,
            attacks,
            attackers,
            attacker_lists,
            targets,
            defenders,
            max_in_degree,
        })
    }

    /// Convenience constructor from label pairs.
    pub fn from_labels(labels: &[&str], attacks: &[(&str, &str)]) -> Result<Self> {
        let owned: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        let pos: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let mut pairs = Vec::with_capacity(attacks.len());
        for &(a, b) in attacks {
            let ia = *pos.get(a).ok_or_else(|| Error::UnknownArgument(a.to_string()))?;
            let ib = *pos.get(b).ok_or_else(|| Error::UnknownArgument(b.to_string()))?;
            pairs.push((ia, ib));
        }
        Self::new(owned, pairs)
    }

    pub fn len(&self) -> usize {
        self.arguments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arguments.is_empty()
    }

    pub fn arguments(&self) -> &[ArgumentId] {
        &self.arguments
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.arguments.iter().map(|a| a.label.as_str())
    }

    pub fn label(&self, index: usize) -> &str {
        &self.arguments[index].label
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Sorted, duplicate-free attack pairs.
    pub fn attacks(&self) -> &[(usize, usize)] {
        &self.attacks
    }

    pub fn attacks_pair(&self, a: usize, b: usize) -> bool {
        self.attackers[b].contains(a)
    }

    pub fn attackers_of(&self, x: usize) -> &ArgumentSet {
        &self.attackers[x]
    }

    /// Attackers of `x` as an index slice, in increasing order.
    pub fn attacker_list(&self, x: usize) -> &[usize] {
        &self.attacker_lists[x]
    }

    pub fn targets_of(&self, x: usize) -> &ArgumentSet {
        &self.targets[x]
    }

    pub fn defenders_of(&self, x: usize) -> &ArgumentSet {
        &self.defenders[x]
    }

    pub fn in_degree(&self, x: usize) -> usize {
        self.attacker_lists[x].len()
    }

    pub fn max_in_degree(&self) -> usize {
        self.max_in_degree
    }

    pub fn empty_set(&self) -> ArgumentSet {
        ArgumentSet::empty(self.len())
    }

    pub fn full_set(&self) -> ArgumentSet {
        ArgumentSet::full(self.len())
    }

    pub fn set_from_labels<'a>(&self, labels: impl IntoIterator<Item = &'a str>) -> Result<ArgumentSet> {
        let mut set = self.empty_set();
        for l in labels {
            set.insert(self.index_of(l).ok_or_else(|| Error::UnknownArgument(l.to_string()))?);
        }
        Ok(set)
    }

    /// Labels of the members of `set`, sorted alphabetically.
    pub fn labels_of(&self, set: &ArgumentSet) -> Vec<String> {
        let mut v: Vec<String> = set.iter().map(|i| self.label(i).to_string()).collect();
        v.sort();
        v
    }

    /// `{a,b,c}` rendering with labels sorted.
    pub fn format_set(&self, set: &ArgumentSet) -> String {
        format!("{{{}}}", self.labels_of(set).join(","))
    }

    /// The sub-framework induced by `keep`, together with the original
    /// index of each new argument.
    pub fn sub_framework(&self, keep: &ArgumentSet) -> (ArgumentationFramework, Vec<usize>) {
        let old: Vec<usize> = keep.iter().collect();
        let mut new_of = vec![usize::MAX; self.len()];
        for (i, &o) in old.iter().enumerate() {
            new_of[o] = i;
        }
        let labels = old.iter().map(|&o| self.label(o).to_string()).collect();
        let attacks = self
            .attacks
            .iter()
            .filter(|&&(a, b)| keep.contains(a) && keep.contains(b))
            .map(|&(a, b)| (new_of[a], new_of[b]));
        let af = ArgumentationFramework::new(labels, attacks).expect("induced sub-framework is valid");
        (af, old)
    }

    /// Places `other` after `self`; labels must not clash.
    pub fn disjoint_union(&self, other: &ArgumentationFramework) -> Result<ArgumentationFramework> {
        let off = self.len();
        let labels = self.labels().chain(other.labels()).map(str::to_string).collect();
        let attacks = self
            .attacks
            .iter()
            .copied()
            .chain(other.attacks.iter().map(|&(a, b)| (a + off, b + off)));
        ArgumentationFramework::new(labels, attacks)
    }

    /// Relabels positions: argument `i` moves to position `perm[i]`, keeping its label.
    pub fn permute(&self, perm: &[usize]) -> Result<ArgumentationFramework> {
        let n = self.len();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidPermutation(n));
        }
        let mut labels = vec![String::new(); n];
        for (i, &p) in perm.iter().enumerate() {
            labels[p] = self.label(i).to_string();
        }
        let attacks = self.attacks.iter().map(|&(a, b)| (perm[a], perm[b]));
        ArgumentationFramework::new(labels, attacks)
    }

    /// Every argument reachable from `from` by a non-empty attack path.
    pub fn reachable_from(&self, from: &ArgumentSet) -> ArgumentSet {
        let mut seen = self.empty_set();
        let mut stack: Vec<usize> = from.iter().collect();
        while let Some(x) = stack.pop() {
            for y in self.targets[x].iter() {
                if !seen.contains(y) {
                    seen.insert(y);
                    stack.push(y);
                }
            }
        }
        seen
    }

    /// True when both frameworks carry the same labels in the same order and
    /// the same attacks.
    pub fn same_as(&self, other: &ArgumentationFramework) -> bool {
        self.arguments == other.arguments && self.attacks == other.attacks
    }
}

impl fmt::Debug for ArgumentationFramework {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let attacks: Vec<String> = self
            .attacks
            .iter()
            .map(|&(a, b)| format!("{}->{}", self.label(a), self.label(b)))
            .collect();
        f.debug_struct("ArgumentationFramework")
            .field("arguments", &self.labels().collect::<Vec<_>>())
            .field("attacks", &attacks)
            .finish()
    }
}

impl PartialEq for ArgumentationFramework {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for ArgumentationFramework {}
