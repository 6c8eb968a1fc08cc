//! Actions on right cosets and quotient construction.
//!
//! Cosets are canonicalized by their lexicographically least element, so
//! coset numbering (first-definition BFS order) and every projected
//! permutation are reproducible.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::{subgroup_from_elements, PermGroup};
use crate::limits::Limits;
use crate::perm::Permutation;

/// A right coset `N·rep` of a subgroup inside a shared parent group.
#[derive(Debug, Clone)]
pub struct Coset<'a> {
    subgroup: &'a PermGroup,
    representative: Permutation,
}

impl<'a> Coset<'a> {
    pub fn new(subgroup: &'a PermGroup, representative: Permutation) -> Self {
        Coset {
            subgroup,
            representative,
        }
    }

    pub fn representative(&self) -> &Permutation {
        &self.representative
    }
}

impl PartialEq for Coset<'_> {
    /// `N·a = N·b` exactly when `a·b^{-1}` lies in `N`.
    fn eq(&self, other: &Self) -> bool {
        if self.representative.degree() != other.representative.degree() {
            return false;
        }
        let diff = self.representative.compose(&other.representative.inverse());
        self.subgroup.contains(&diff)
    }
}

/// The permutation action of a group on the right cosets of a subgroup,
/// together with the projection map.
#[derive(Debug, Clone)]
pub struct CosetAction {
    parent_degree: usize,
    subgroup_elements: Vec<Permutation>,
    /// Canonical (lex-least) coset representatives, indexed by coset.
    reps: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    image: PermGroup,
}

impl CosetAction {
    /// Image of the parent group acting on the cosets.
    pub fn image(&self) -> &PermGroup {
        &self.image
    }

    pub fn coset_count(&self) -> usize {
        self.reps.len()
    }

    pub fn representatives(&self) -> &[Permutation] {
        &self.reps
    }

    fn canonical(&self, x: &Permutation) -> Permutation {
        canonical_rep(&self.subgroup_elements, x)
    }

    /// Maps a parent-group element to its induced permutation on cosets.
    pub fn project(&self, x: &Permutation) -> Result<Permutation> {
        if x.degree() != self.parent_degree {
            return Err(Error::DegreeMismatch {
                expected: self.parent_degree,
                got: x.degree(),
            });
        }
        let mut images = Vec::with_capacity(self.reps.len());
        for rep in &self.reps {
            let target = self.canonical(&rep.compose(x));
            match self.index.get(&target) {
                Some(&i) => images.push(i as u32),
                None => return Err(Error::NotAMember),
            }
        }
        Permutation::new(images)
    }

    /// Full preimage of a subgroup of the image, as a subgroup of the
    /// parent. Sound when the projection kernel equals the subgroup the
    /// action was built from (true quotients).
    pub fn preimage(&self, s: &PermGroup, limits: &Limits) -> Result<PermGroup> {
        if s.degree() != self.reps.len() {
            return Err(Error::DegreeMismatch {
                expected: self.reps.len(),
                got: s.degree(),
            });
        }
        let mut gens: Vec<Permutation> = self.subgroup_elements.clone();
        for rep in &self.reps {
            if s.contains(&self.project(rep)?) {
                gens.push(rep.clone());
            }
        }
        subgroup_from_elements(self.parent_degree, gens, limits)
    }
}

fn canonical_rep(subgroup_elements: &[Permutation], x: &Permutation) -> Permutation {
    subgroup_elements
        .iter()
        .map(|n| n.compose(x))
        .min()
        .expect("subgroup has at least the identity")
}

/// The action of `g` on the right cosets of `n`; `n` need not be normal.
///
/// The image has degree `|G : N|`. The projection is a homomorphism
/// whose kernel is the core of `n` in `g` (equal to `n` when normal).
pub fn coset_action(g: &PermGroup, n: &PermGroup, limits: &Limits) -> Result<CosetAction> {
    if !n.is_subgroup_of(g) {
        return Err(Error::NotASubgroup);
    }
    let sub_elems: Vec<Permutation> = n.elements(limits)?.to_vec();
    let id = Permutation::identity(g.degree());

    let mut reps: Vec<Permutation> = vec![canonical_rep(&sub_elems, &id)];
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    index.insert(reps[0].clone(), 0);
    let mut head = 0;
    while head < reps.len() {
        let rep = reps[head].clone();
        head += 1;
        for gen in g.generators() {
            let target = canonical_rep(&sub_elems, &rep.compose(gen));
            if !index.contains_key(&target) {
                index.insert(target.clone(), reps.len());
                reps.push(target);
            }
        }
    }

    let coset_count = reps.len();
    let mut partial = CosetAction {
        parent_degree: g.degree(),
        subgroup_elements: sub_elems,
        reps,
        index,
        image: PermGroup::trivial(coset_count.max(1)),
    };
    let image_gens: Vec<Permutation> = g
        .generators()
        .iter()
        .map(|gen| partial.project(gen))
        .collect::<Result<_>>()?;
    partial.image = PermGroup::from_generators_with(coset_count, image_gens, limits)?;
    Ok(partial)
}

/// True quotient `G/N`: requires `n` normal in `g`. The image group has
/// order `|G| / |N|` and the projection is a surjective homomorphism
/// with kernel `n`.
pub fn quotient(g: &PermGroup, n: &PermGroup, limits: &Limits) -> Result<CosetAction> {
    if !n.is_subgroup_of(g) {
        return Err(Error::NotASubgroup);
    }
    if !n.is_normal_in(g) {
        return Err(Error::NotNormal);
    }
    let action = coset_action(g, n, limits)?;
    let expected = g.order() / n.order();
    if action.image().order() != expected {
        return Err(Error::Internal(format!(
            "quotient image order {} differs from index {}",
            action.image().order(),
            expected
        )));
    }
    Ok(action)
}
