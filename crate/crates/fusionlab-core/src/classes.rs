//! Conjugacy classes, computed as conjugation orbits over the full
//! element list. Every class is cross-checked against the centralizer
//! order, so a wrong partition cannot survive silently.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::limits::Limits;
use crate::perm::Permutation;

#[derive(Debug, Clone)]
pub struct ConjugacyClass {
    representative: Permutation,
    size: usize,
    element_order: u64,
    members: Vec<Permutation>,
}

impl ConjugacyClass {
    /// Lexicographically least member.
    pub fn representative(&self) -> &Permutation {
        &self.representative
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn element_order(&self) -> u64 {
        self.element_order
    }

    /// Members, sorted.
    pub fn members(&self) -> &[Permutation] {
        &self.members
    }

    pub fn contains(&self, x: &Permutation) -> bool {
        self.members.binary_search(x).is_ok()
    }

    pub fn is_identity_class(&self) -> bool {
        self.element_order == 1
    }
}

/// The conjugacy classes of `g`, ordered by element order, then size,
/// then representative.
pub fn conjugacy_classes(g: &PermGroup, limits: &Limits) -> Result<Vec<ConjugacyClass>> {
    let elems = g.elements(limits)?;
    let index: HashMap<&Permutation, usize> =
        elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut seen = vec![false; elems.len()];
    let mut classes = Vec::new();

    for start in 0..elems.len() {
        if seen[start] {
            continue;
        }
        let mut orbit_idx = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < orbit_idx.len() {
            let x = &elems[orbit_idx[head]];
            head += 1;
            for s in g.generators() {
                let y = x.conjugate(s);
                let yi = index[&y];
                if !seen[yi] {
                    seen[yi] = true;
                    orbit_idx.push(yi);
                }
            }
        }
        orbit_idx.sort_unstable();
        let members: Vec<Permutation> =
            orbit_idx.iter().map(|&i| elems[i].clone()).collect();
        let representative = members[0].clone();
        let element_order = representative.order();

        let centralizer_order = elems
            .iter()
            .filter(|c| c.compose(&representative) == representative.compose(c))
            .count();
        if members.len() as u128 * centralizer_order as u128 != g.order() {
            return Err(Error::Internal(format!(
                "class equation violated: |class| {} * |centralizer| {} != |G| {}",
                members.len(),
                centralizer_order,
                g.order()
            )));
        }

        classes.push(ConjugacyClass {
            representative,
            size: members.len(),
            element_order,
            members,
        });
    }

    classes.sort_by(|a, b| {
        (a.element_order, a.size, &a.representative).cmp(&(
            b.element_order,
            b.size,
            &b.representative,
        ))
    });
    Ok(classes)
}

/// Index of the class containing `x`, if any.
pub fn class_of<'a>(
    classes: &'a [ConjugacyClass],
    x: &Permutation,
) -> Option<&'a ConjugacyClass> {
    classes.iter().find(|c| c.contains(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym3() -> PermGroup {
        PermGroup::from_generators(
            3,
            vec![
                Permutation::from_cycles(3, &[&[0, 1]]).unwrap(),
                Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn classes_of_sym3() {
        let classes = conjugacy_classes(&sym3(), &Limits::default()).unwrap();
        let sizes: Vec<usize> = classes.iter().map(|c| c.size()).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        let orders: Vec<u64> = classes.iter().map(|c| c.element_order()).collect();
        assert_eq!(orders, vec![1, 2, 3]);
    }

    #[test]
    fn abelian_group_has_singleton_classes() {
        let c6 = PermGroup::from_generators(
            6,
            vec![Permutation::from_cycles(6, &[&[0, 1, 2, 3, 4, 5]]).unwrap()],
        )
        .unwrap();
        let classes = conjugacy_classes(&c6, &Limits::default()).unwrap();
        assert_eq!(classes.len(), 6);
        assert!(classes.iter().all(|c| c.size() == 1));
    }

    #[test]
    fn classes_of_alt5() {
        let a5 = PermGroup::from_generators(
            5,
            vec![
                Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap(),
                Permutation::from_cycles(5, &[&[2, 3, 4]]).unwrap(),
            ],
        )
        .unwrap();
        let classes = conjugacy_classes(&a5, &Limits::default()).unwrap();
        let mut sizes: Vec<usize> = classes.iter().map(|c| c.size()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 12, 12, 15, 20]);
        let total: usize = classes.iter().map(|c| c.size()).sum();
        assert_eq!(total as u128, a5.order());
    }
}
