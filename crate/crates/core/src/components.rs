use crate::af::ArgumentationFramework;
use crate::set::ArgumentSet;

/// Weakly connected components, each as a set, ordered by least member.
pub fn connected_components(af: &ArgumentationFramework) -> Vec<ArgumentSet> {
    let n = af.len();
    let mut assigned = af.empty_set();
    let mut blocks = Vec::new();
    for start in 0..n {
        if assigned.contains(start) {
            continue;
        }
        let mut block = af.empty_set();
        block.insert(start);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            let next = af.attackers_of(x).union(af.targets_of(x)).difference(&block);
            for y in next.iter() {
                block.insert(y);
                stack.push(y);
            }
        }
        assigned = assigned.union(&block);
        blocks.push(block);
    }
    blocks
}
