//! Brute-force reference computations for test cross-checks.
//!
//! Everything here works from the full multiplication-table closure of a
//! generator set and pays no attention to how the engine organizes its
//! stabilizer chains. Deliberately simple, deliberately quadratic.

use std::collections::{BTreeSet, HashSet, VecDeque};

use fusionlab_core::perm::Permutation;

/// Full closure of a generator set under composition, sorted.
pub fn closure(degree: usize, gens: &[Permutation]) -> Vec<Permutation> {
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut queue: VecDeque<Permutation> = VecDeque::new();
    let id = Permutation::identity(degree);
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = g.compose(s);
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    let mut out: Vec<Permutation> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

/// Conjugacy classes as sorted element sets, one `BTreeSet` per class,
/// ordered by least member.
pub fn conjugacy_classes(elements: &[Permutation]) -> Vec<BTreeSet<Permutation>> {
    let mut remaining: BTreeSet<Permutation> = elements.iter().cloned().collect();
    let mut classes = Vec::new();
    while let Some(x) = remaining.iter().next().cloned() {
        let class: BTreeSet<Permutation> =
            elements.iter().map(|g| x.conjugate(g)).collect();
        for y in &class {
            remaining.remove(y);
        }
        classes.push(class);
    }
    classes
}

/// All elements commuting with `x`, sorted.
pub fn centralizer(elements: &[Permutation], x: &Permutation) -> Vec<Permutation> {
    elements
        .iter()
        .filter(|g| g.compose(x) == x.compose(g))
        .cloned()
        .collect()
}

/// Checks that `candidate` is a Sylow p-subgroup of the group given by
/// `elements`: closed under composition, of order the full p-part, with
/// every member of p-power order.
pub fn is_sylow_p_subgroup(
    elements: &[Permutation],
    candidate: &[Permutation],
    p: u32,
) -> bool {
    let group: HashSet<&Permutation> = elements.iter().collect();
    let cand: HashSet<&Permutation> = candidate.iter().collect();
    if !cand.iter().all(|g| group.contains(*g)) {
        return false;
    }
    for a in candidate {
        for b in candidate {
            if !cand.contains(&a.compose(b)) {
                return false;
            }
        }
    }
    if !candidate.iter().all(|g| g.is_p_element(p)) {
        return false;
    }
    let mut p_part: usize = 1;
    let mut n = elements.len();
    while n % p as usize == 0 {
        n /= p as usize;
        p_part *= p as usize;
    }
    candidate.len() == p_part
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_of_s3() {
        let gens = vec![
            Permutation::from_cycles(3, &[&[0, 1]]).unwrap(),
            Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap(),
        ];
        let elems = closure(3, &gens);
        assert_eq!(elems.len(), 6);
        let classes = conjugacy_classes(&elems);
        let mut sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
    }

    #[test]
    fn centralizer_of_transposition_in_s3() {
        let gens = vec![
            Permutation::from_cycles(3, &[&[0, 1]]).unwrap(),
            Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap(),
        ];
        let elems = closure(3, &gens);
        let t = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        assert_eq!(centralizer(&elems, &t).len(), 2);
    }
}
