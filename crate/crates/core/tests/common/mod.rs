//! Fixtures and brute-force oracles shared by the integration tests. The
//! oracles work on adjacency matrices and plain masks and share no code with
//! the library kernel.
#![allow(dead_code)]

use gradarg::{ArgumentSet, ArgumentationFramework};

pub fn af(args: &[&str], attacks: &[(&str, &str)]) -> ArgumentationFramework {
    ArgumentationFramework::from_labels(args, attacks).unwrap()
}

pub fn set(af: &ArgumentationFramework, labels: &[&str]) -> ArgumentSet {
    af.set_from_labels(labels.iter().copied()).unwrap()
}

pub fn fig2_left() -> ArgumentationFramework {
    af(&["a", "b"], &[("a", "b"), ("b", "a")])
}

pub fn three_cycle() -> ArgumentationFramework {
    af(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")])
}

pub fn fig2_right() -> ArgumentationFramework {
    af(
        &["a", "b", "c", "d", "e"],
        &[("a", "b"), ("b", "a"), ("a", "c"), ("b", "c"), ("c", "d"), ("d", "e")],
    )
}

pub fn g1() -> ArgumentationFramework {
    af(&["a1", "b1", "c1"], &[("c1", "b1"), ("b1", "a1")])
}

pub fn g2() -> ArgumentationFramework {
    af(&["a2", "b2", "c2", "d2"], &[("c2", "b2"), ("d2", "b2"), ("b2", "a2")])
}

pub fn g3() -> ArgumentationFramework {
    af(
        &["a3", "b3", "c3", "d3", "e3"],
        &[("b3", "a3"), ("c3", "a3"), ("d3", "b3"), ("e3", "c3")],
    )
}

pub fn union(parts: &[ArgumentationFramework]) -> ArgumentationFramework {
    parts[1..]
        .iter()
        .fold(parts[0].clone(), |acc, p| acc.disjoint_union(p).unwrap())
}

pub fn to_mask(s: &ArgumentSet) -> u64 {
    s.iter().fold(0, |m, i| m | 1 << i)
}

/// `attacks[y][x]` iff `y` attacks `x`.
pub struct Matrix {
    pub n: usize,
    pub attacks: Vec<Vec<bool>>,
}

impl Matrix {
    pub fn of(af: &ArgumentationFramework) -> Matrix {
        let n = af.len();
        let mut attacks = vec![vec![false; n]; n];
        for &(y, x) in af.attacks() {
            attacks[y][x] = true;
        }
        Matrix { n, attacks }
    }

    fn members(&self, s: u64) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |i| s >> i & 1 == 1)
    }

    fn all(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Number of members of `s` attacking `x`.
    fn hits(&self, s: u64, x: usize) -> usize {
        self.members(s).filter(|&y| self.attacks[y][x]).count()
    }

    // Textbook Dung semantics.

    pub fn conflict_free(&self, s: u64) -> bool {
        self.members(s).all(|x| self.hits(s, x) == 0)
    }

    /// Arguments all of whose attackers are attacked by `s`.
    pub fn acceptable(&self, s: u64) -> u64 {
        (0..self.n)
            .filter(|&x| (0..self.n).filter(|&y| self.attacks[y][x]).all(|y| self.hits(s, y) > 0))
            .fold(0, |m, x| m | 1 << x)
    }

    pub fn dung_admissible(&self) -> Vec<u64> {
        (0..=self.all())
            .filter(|&s| self.conflict_free(s) && s & !self.acceptable(s) == 0)
            .collect()
    }

    pub fn dung_complete(&self) -> Vec<u64> {
        (0..=self.all())
            .filter(|&s| self.conflict_free(s) && self.acceptable(s) == s)
            .collect()
    }

    pub fn dung_grounded(&self) -> u64 {
        let mut s = 0;
        loop {
            let next = self.acceptable(s);
            if next == s {
                return s;
            }
            s = next;
        }
    }

    pub fn dung_preferred(&self) -> Vec<u64> {
        maximal(&self.dung_admissible())
    }

    pub fn dung_stable(&self) -> Vec<u64> {
        (0..=self.all())
            .filter(|&s| self.conflict_free(s) && (0..self.n).filter(|x| s >> x & 1 == 0).all(|x| self.hits(s, x) > 0))
            .collect()
    }

    // Graded functions, written from their counting definitions.

    /// Arguments attacked by fewer than `l` members of `s`.
    pub fn neutral(&self, l: usize, s: u64) -> u64 {
        (0..self.n).filter(|&x| self.hits(s, x) < l).fold(0, |m, x| m | 1 << x)
    }

    /// Arguments with fewer than `m` attackers that are attacked by fewer
    /// than `n` members of `s`.
    pub fn defended(&self, m: usize, n: usize, s: u64) -> u64 {
        (0..self.n)
            .filter(|&x| {
                (0..self.n)
                    .filter(|&y| self.attacks[y][x] && self.hits(s, y) < n)
                    .count()
                    < m
            })
            .fold(0, |acc, x| acc | 1 << x)
    }

    pub fn graded_complete(&self, l: usize, m: usize, n: usize) -> Vec<u64> {
        (0..=self.all())
            .filter(|&s| s & !self.neutral(l, s) == 0 && self.defended(m, n, s) == s)
            .collect()
    }

    pub fn graded_admissible(&self, l: usize, m: usize, n: usize) -> Vec<u64> {
        (0..=self.all())
            .filter(|&s| s & !self.neutral(l, s) == 0 && s & !self.defended(m, n, s) == 0)
            .collect()
    }

    pub fn graded_stable(&self, l: usize, m: usize, n: usize) -> Vec<u64> {
        (0..=self.all())
            .filter(|&s| self.neutral(n, s) == s && self.neutral(m, s) == s && s & !self.neutral(l, s) == 0)
            .collect()
    }

    pub fn graded_grounded(&self, l: usize, m: usize, n: usize) -> Vec<u64> {
        let complete = self.graded_complete(l, m, n);
        complete
            .iter()
            .copied()
            .filter(|&s| complete.iter().all(|&t| s & !t == 0))
            .collect()
    }

    pub fn graded_preferred(&self, l: usize, m: usize, n: usize) -> Vec<u64> {
        maximal(&self.graded_complete(l, m, n))
    }
}

pub fn maximal(sets: &[u64]) -> Vec<u64> {
    sets.iter()
        .copied()
        .filter(|&s| !sets.iter().any(|&t| t != s && s & !t == 0))
        .collect()
}

pub fn masks(family: &gradarg::ExtensionFamily) -> Vec<u64> {
    let mut v: Vec<u64> = family.extensions.iter().map(to_mask).collect();
    v.sort_unstable();
    v
}

pub fn sorted(mut v: Vec<u64>) -> Vec<u64> {
    v.sort_unstable();
    v
}
