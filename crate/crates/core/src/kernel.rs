//! Graded neutrality and defense, the grade order, and fixpoint streams.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::af::ArgumentationFramework;
use crate::error::{Error, Result};
use crate::set::ArgumentSet;

/// The triple (l, m, n): conflict tolerance, tolerated undefended attackers,
/// and required counter-attackers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GradeParams {
    pub l: usize,
    pub m: usize,
    pub n: usize,
}

impl GradeParams {
    pub fn new(l: usize, m: usize, n: usize) -> Result<Self> {
        if l == 0 || m == 0 || n == 0 {
            return Err(Error::ZeroGrade { l, m, n });
        }
        Ok(GradeParams { l, m, n })
    }

    /// `n >= m` and `l >= m`, under which grounded and complete extensions
    /// are built by iteration.
    pub fn existence_safe(&self) -> bool {
        self.n >= self.m && self.l >= self.m
    }

    pub fn defense(&self) -> DefenseGrade {
        DefenseGrade { m: self.m, n: self.n }
    }

    /// Every triple in `[1, k]^3`, in lexicographic order.
    pub fn sweep(k: usize) -> impl Iterator<Item = GradeParams> {
        (1..=k).flat_map(move |l| (1..=k).flat_map(move |m| (1..=k).map(move |n| GradeParams { l, m, n })))
    }
}

impl fmt::Display for GradeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.l, self.m, self.n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DefenseGrade {
    pub m: usize,
    pub n: usize,
}

impl DefenseGrade {
    pub fn sweep(k: usize) -> impl Iterator<Item = DefenseGrade> {
        (1..=k).flat_map(move |m| (1..=k).map(move |n| DefenseGrade { m, n }))
    }
}

impl fmt::Display for DefenseGrade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GradeOrdering {
    Stronger,
    Weaker,
    Equal,
    Incomparable,
}

/// `(m,n)` is at least as strong as `(s,t)` iff `m <= s` and `t <= n`.
pub fn compare_grades(g1: DefenseGrade, g2: DefenseGrade) -> GradeOrdering {
    let ge = g1.m <= g2.m && g2.n <= g1.n;
    let le = g2.m <= g1.m && g1.n <= g2.n;
    match (ge, le) {
        (true, true) => GradeOrdering::Equal,
        (true, false) => GradeOrdering::Stronger,
        (false, true) => GradeOrdering::Weaker,
        (false, false) => GradeOrdering::Incomparable,
    }
}

/// Total refinement giving priority to `m`: smaller `m` is stronger, ties
/// broken by larger `n`. `Greater` means `g1` is stronger.
pub fn compare_grades_lexicographic(g1: DefenseGrade, g2: DefenseGrade) -> Ordering {
    g2.m.cmp(&g1.m).then(g1.n.cmp(&g2.n))
}

/// `{ x | |attackers(x) ∩ X| < l }`
pub fn graded_neutrality(af: &ArgumentationFramework, l: usize, x: &ArgumentSet) -> ArgumentSet {
    let mut out = af.empty_set();
    for a in 0..af.len() {
        if af.attackers_of(a).intersection_len(x) < l {
            out.insert(a);
        }
    }
    out
}

/// `{ x | fewer than m attackers of x have fewer than n attackers in X }`.
///
/// The attackers with fewer than `n` attackers in `X` are exactly `n_n(X)`,
/// so this is `n_m(n_n(X))`.
pub fn graded_defense(af: &ArgumentationFramework, m: usize, n: usize, x: &ArgumentSet) -> ArgumentSet {
    let weak = graded_neutrality(af, n, x);
    graded_neutrality(af, m, &weak)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum StreamDirection {
    /// Iterates `d_mn` upwards from the start set.
    Lower,
    /// Iterates `d_nm` downwards from `n_n(start)`.
    Upper,
}

/// A finite iteration of a defense function, ending with the first
/// repeated stage. `stages[stabilized_at] == stages[stabilized_at + 1] == limit`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IterationStream {
    pub start: ArgumentSet,
    pub grade: DefenseGrade,
    pub direction: StreamDirection,
    pub stages: Vec<ArgumentSet>,
    pub limit: ArgumentSet,
    pub stabilized_at: usize,
}

fn iterate(af: &ArgumentationFramework, m: usize, n: usize, first: ArgumentSet) -> (Vec<ArgumentSet>, usize) {
    let mut stages = vec![first];
    loop {
        let next = graded_defense(af, m, n, stages.last().unwrap());
        let done = &next == stages.last().unwrap();
        stages.push(next);
        if done {
            let k = stages.len() - 2;
            return (stages, k);
        }
    }
}

fn check_expandable(af: &ArgumentationFramework, m: usize, n: usize, x: &ArgumentSet) -> Result<()> {
    if x.is_subset(&graded_defense(af, m, n, x)) {
        Ok(())
    } else {
        Err(Error::NotExpandable { m, n })
    }
}

/// Iterates `d_mn` from `X`; the limit is the least fixpoint containing `X`.
pub fn lfp_from(af: &ArgumentationFramework, m: usize, n: usize, x: &ArgumentSet) -> Result<IterationStream> {
    check_expandable(af, m, n, x)?;
    let (stages, k) = iterate(af, m, n, x.clone());
    Ok(IterationStream {
        start: x.clone(),
        grade: DefenseGrade { m, n },
        direction: StreamDirection::Lower,
        limit: stages[k].clone(),
        stages,
        stabilized_at: k,
    })
}

/// Iterates `d_nm` (parameters swapped) from `n_n(X)`; the stream is
/// non-increasing.
pub fn gfp_from(af: &ArgumentationFramework, m: usize, n: usize, x: &ArgumentSet) -> Result<IterationStream> {
    check_expandable(af, m, n, x)?;
    let top = graded_neutrality(af, n, x);
    let (stages, k) = iterate(af, n, m, top);
    Ok(IterationStream {
        start: x.clone(),
        grade: DefenseGrade { m, n },
        direction: StreamDirection::Upper,
        limit: stages[k].clone(),
        stages,
        stabilized_at: k,
    })
}

/// `∪_k d_mn^k(X)` for `k >= 0`, without requiring `X` to be self-defended.
/// The iterates of a finite map are eventually periodic, so the union is
/// taken up to the first repeat.
pub fn iterate_union(af: &ArgumentationFramework, m: usize, n: usize, x: &ArgumentSet) -> ArgumentSet {
    let mut acc = x.clone();
    let mut cur = x.clone();
    let mut seen = HashSet::new();
    while seen.insert(cur.clone()) {
        cur = graded_defense(af, m, n, &cur);
        acc = acc.union(&cur);
    }
    acc
}

/// `max_in_degree + 1`: no grade beyond this changes any graded function.
pub fn saturation_bound(af: &ArgumentationFramework) -> usize {
    af.max_in_degree() + 1
}

pub fn unattacked_closure(af: &ArgumentationFramework) -> ArgumentSet {
    let mut out = af.empty_set();
    for a in 0..af.len() {
        if af.in_degree(a) == 0 {
            out.insert(a);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn af(labels: &[&str], attacks: &[(&str, &str)]) -> ArgumentationFramework {
        ArgumentationFramework::from_labels(labels, attacks).unwrap()
    }

    fn cycle3() -> ArgumentationFramework {
        af(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")])
    }

    fn fig2_right() -> ArgumentationFramework {
        af(
            &["a", "b", "c", "d", "e"],
            &[("a", "b"), ("b", "a"), ("a", "c"), ("b", "c"), ("c", "d"), ("d", "e")],
        )
    }

    fn g2() -> ArgumentationFramework {
        af(&["a2", "b2", "c2", "d2"], &[("c2", "b2"), ("d2", "b2"), ("b2", "a2")])
    }

    fn g3() -> ArgumentationFramework {
        af(
            &["a3", "b3", "c3", "d3", "e3"],
            &[("b3", "a3"), ("c3", "a3"), ("d3", "b3"), ("e3", "c3")],
        )
    }

    fn set(f: &ArgumentationFramework, labels: &[&str]) -> ArgumentSet {
        f.set_from_labels(labels.iter().copied()).unwrap()
    }

    #[test]
    fn neutrality_examples() {
        let left = af(&["a", "b"], &[("a", "b"), ("b", "a")]);
        assert!(graded_neutrality(&left, 1, &set(&left, &["a", "b"])).is_empty());
        let r = fig2_right();
        for l in 1..4 {
            assert_eq!(graded_neutrality(&r, l, &r.empty_set()), r.full_set());
        }
        assert_eq!(
            r.format_set(&graded_neutrality(&r, 2, &set(&r, &["a", "b"]))),
            "{a,b,d,e}"
        );
    }

    #[test]
    fn defense_examples() {
        let c = cycle3();
        assert_eq!(graded_defense(&c, 2, 1, &c.empty_set()), c.full_set());
        let r = fig2_right();
        assert_eq!(r.format_set(&graded_defense(&r, 1, 1, &set(&r, &["a"]))), "{a,d}");
        let g = g2();
        let x = set(&g, &["d2", "c2", "a2"]);
        assert_eq!(g.format_set(&graded_defense(&g, 1, 3, &x)), "{c2,d2}");
        let k = saturation_bound(&g);
        assert_eq!(graded_defense(&g, k, 1, &g.empty_set()), g.full_set());
    }

    #[test]
    fn grade_comparison() {
        let g = |m, n| DefenseGrade { m, n };
        assert_eq!(compare_grades(g(1, 1), g(2, 1)), GradeOrdering::Stronger);
        assert_eq!(compare_grades(g(2, 1), g(1, 1)), GradeOrdering::Weaker);
        assert_eq!(compare_grades(g(1, 1), g(2, 2)), GradeOrdering::Incomparable);
        assert_eq!(compare_grades(g(3, 2), g(3, 2)), GradeOrdering::Equal);
        assert_eq!(compare_grades_lexicographic(g(1, 1), g(2, 2)), Ordering::Greater);
        assert_eq!(compare_grades_lexicographic(g(2, 3), g(2, 2)), Ordering::Greater);
    }

    #[test]
    fn lower_streams() {
        let c = cycle3();
        let s = lfp_from(&c, 2, 1, &c.empty_set()).unwrap();
        assert_eq!(s.stages, vec![c.empty_set(), c.full_set(), c.full_set()]);
        assert_eq!(s.stabilized_at, 1);

        let r = fig2_right();
        let s = lfp_from(&r, 1, 1, &set(&r, &["a"])).unwrap();
        let names: Vec<String> = s.stages.iter().map(|x| r.format_set(x)).collect();
        assert_eq!(names, vec!["{a}", "{a,d}", "{a,d}"]);

        let g = g3();
        let s = lfp_from(&g, 2, 1, &g.empty_set()).unwrap();
        assert_eq!(g.format_set(&s.stages[1]), "{b3,c3,d3,e3}");
        assert_eq!(s.limit, g.full_set());
        assert_eq!(s.stabilized_at, 2);
    }

    #[test]
    fn upper_streams() {
        let r = fig2_right();
        let s = gfp_from(&r, 1, 1, &set(&r, &["a"])).unwrap();
        let names: Vec<String> = s.stages.iter().map(|x| r.format_set(x)).collect();
        assert_eq!(names, vec!["{a,d,e}", "{a,d}", "{a,d}"]);
        assert_eq!(gfp_from(&r, 1, 1, &r.empty_set()).unwrap().limit, r.full_set());
        let c = cycle3();
        assert_eq!(gfp_from(&c, 1, 1, &c.empty_set()).unwrap().limit, c.full_set());
    }

    #[test]
    fn not_expandable() {
        let r = fig2_right();
        assert!(matches!(
            lfp_from(&r, 1, 1, &set(&r, &["c"])),
            Err(Error::NotExpandable { .. })
        ));
    }

    #[test]
    fn union_of_iterates_handles_oscillation() {
        // d({b}) = {a} on a <- b is not self-defended; iterates oscillate.
        let f = af(&["a", "b"], &[("a", "b"), ("b", "a")]);
        let u = iterate_union(&f, 1, 1, &set(&f, &["a"]));
        assert_eq!(u, set(&f, &["a"]));
        let c = cycle3();
        let u = iterate_union(&c, 1, 1, &set(&c, &["a"]));
        assert_eq!(u, c.full_set());
    }

    #[test]
    fn bounds_and_unattacked() {
        assert_eq!(saturation_bound(&cycle3()), 2);
        assert_eq!(saturation_bound(&g2()), 3);
        assert_eq!(saturation_bound(&af(&["x"], &[])), 1);
        let g = g3();
        assert_eq!(g.format_set(&unattacked_closure(&g)), "{d3,e3}");
        assert!(unattacked_closure(&cycle3()).is_empty());
    }

    #[test]
    fn sweep_sizes() {
        assert_eq!(GradeParams::sweep(3).count(), 27);
        assert_eq!(DefenseGrade::sweep(2).count(), 4);
        assert!(GradeParams::new(0, 1, 1).is_err());
        assert!(!GradeParams::new(2, 2, 1).unwrap().existence_safe());
    }
}
