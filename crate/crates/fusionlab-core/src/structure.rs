//! Characteristic and relative subgroups: centralizers, normalizers,
//! center, derived series, cores and residuals, the alternating upper
//! p-series, the normal-subgroup lattice, radical/Fitting/socle, and
//! p-group structure predicates.

use crate::classes::conjugacy_classes;
use crate::coset::quotient;
use crate::error::{Error, Result};
use crate::group::{subgroup_from_elements, PermGroup};
use crate::limits::Limits;
use crate::perm::Permutation;

/// An ascending chain of subgroups; strict containment between
/// consecutive terms except for a terminal repeat, which signals
/// stabilization short of the ambient group.
#[derive(Debug, Clone)]
pub struct SubgroupChain {
    pub terms: Vec<PermGroup>,
}

impl SubgroupChain {
    pub fn last(&self) -> &PermGroup {
        self.terms.last().expect("chain is never empty")
    }

    pub fn orders(&self) -> Vec<u128> {
        self.terms.iter().map(|t| t.order()).collect()
    }
}

/// Structure flags of a p-group.
#[derive(Debug, Clone)]
pub struct PGroupProfile {
    pub is_abelian: bool,
    pub is_elementary_abelian: bool,
    pub is_extraspecial: bool,
    pub nilpotency_class: usize,
    pub frattini: PermGroup,
    pub center: PermGroup,
    pub derived: PermGroup,
}

/// True when every prime factor of `n` lies in `pi`.
pub fn is_pi_number(mut n: u128, pi: &[u32]) -> bool {
    for &p in pi {
        while n % p as u128 == 0 {
            n /= p as u128;
        }
    }
    n == 1
}

/// `C_G(x)`, the elements of `g` commuting with `x`.
pub fn centralizer(g: &PermGroup, x: &Permutation, limits: &Limits) -> Result<PermGroup> {
    if !g.membership(x)? {
        return Err(Error::NotAMember);
    }
    let commuting = g
        .elements(limits)?
        .iter()
        .filter(|c| c.compose(x) == x.compose(c))
        .cloned();
    subgroup_from_elements(g.degree(), commuting, limits)
}

/// `C_G(H)`, the elements of `g` commuting with every element of `h`.
pub fn centralizer_of_subgroup(
    g: &PermGroup,
    h: &PermGroup,
    limits: &Limits,
) -> Result<PermGroup> {
    if !h.is_subgroup_of(g) {
        return Err(Error::NotASubgroup);
    }
    let commuting = g
        .elements(limits)?
        .iter()
        .filter(|c| h.generators().iter().all(|x| c.compose(x) == x.compose(c)))
        .cloned();
    subgroup_from_elements(g.degree(), commuting, limits)
}

/// `N_G(H)`, the elements of `g` conjugating `h` to itself.
pub fn normalizer(g: &PermGroup, h: &PermGroup, limits: &Limits) -> Result<PermGroup> {
    if !h.is_subgroup_of(g) {
        return Err(Error::NotASubgroup);
    }
    let normalizing = g
        .elements(limits)?
        .iter()
        .filter(|c| h.generators().iter().all(|x| h.contains(&x.conjugate(c))))
        .cloned();
    subgroup_from_elements(g.degree(), normalizing, limits)
}

/// `Z(G)`.
pub fn center(g: &PermGroup, limits: &Limits) -> Result<PermGroup> {
    let central = g
        .elements(limits)?
        .iter()
        .filter(|c| g.generators().iter().all(|x| c.compose(x) == x.compose(c)))
        .cloned();
    subgroup_from_elements(g.degree(), central, limits)
}

/// Smallest normal subgroup of `g` containing `seed`.
pub fn normal_closure(
    g: &PermGroup,
    seed: &[Permutation],
    limits: &Limits,
) -> Result<PermGroup> {
    for x in seed {
        if !g.membership(x)? {
            return Err(Error::NotAMember);
        }
    }
    let mut gens: Vec<Permutation> = Vec::new();
    let mut group = PermGroup::trivial(g.degree());
    let mut queue: Vec<Permutation> = Vec::new();
    for x in seed {
        if !group.contains(x) {
            gens.push(x.clone());
            group = PermGroup::from_generators_with(g.degree(), gens.clone(), limits)?;
            queue.push(x.clone());
        }
    }
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head].clone();
        head += 1;
        for s in g.generators() {
            let y = x.conjugate(s);
            if !group.contains(&y) {
                gens.push(y.clone());
                group = PermGroup::from_generators_with(g.degree(), gens.clone(), limits)?;
                queue.push(y);
            }
        }
    }
    Ok(group)
}

/// `[A, B]` inside `<A, B>`: the normal closure there of the generator
/// commutators. With `a = b = g` this is the derived subgroup.
pub fn commutator_subgroup(
    g: &PermGroup,
    a: &PermGroup,
    b: &PermGroup,
    limits: &Limits,
) -> Result<PermGroup> {
    if !a.is_subgroup_of(g) || !b.is_subgroup_of(g) {
        return Err(Error::NotASubgroup);
    }
    let mut ambient_gens: Vec<Permutation> = a.generators().to_vec();
    ambient_gens.extend(b.generators().iter().cloned());
    let ambient = PermGroup::from_generators_with(g.degree(), ambient_gens, limits)?;
    let mut comms = Vec::new();
    for x in a.generators() {
        for y in b.generators() {
            let c = Permutation::commutator(x, y);
            if !c.is_identity() {
                comms.push(c);
            }
        }
    }
    normal_closure(&ambient, &comms, limits)
}

/// Derived series with perfection and solvability flags.
pub fn derived_series(g: &PermGroup, limits: &Limits) -> Result<(SubgroupChain, bool, bool)> {
    let mut terms = vec![g.clone()];
    loop {
        let last = terms.last().unwrap();
        if last.is_trivial() {
            break;
        }
        let next = commutator_subgroup(last, last, last, limits)?;
        let stabilized = next.order() == last.order();
        terms.push(next);
        if stabilized {
            break;
        }
    }
    let is_solvable = terms.last().unwrap().is_trivial();
    let is_perfect = if terms.len() == 1 {
        true
    } else {
        terms[1].order() == terms[0].order()
    };
    Ok((SubgroupChain { terms }, is_perfect, is_solvable))
}

/// `O_pi(G)`: the largest normal subgroup all of whose element orders are
/// pi-numbers. Computed as the join of the single-class normal closures
/// that stay pi-groups; the join of normal pi-subgroups is again one.
pub fn o_pi_core(g: &PermGroup, pi: &[u32], limits: &Limits) -> Result<PermGroup> {
    let classes = conjugacy_classes(g, limits)?;
    let mut core_gens: Vec<Permutation> = Vec::new();
    let mut core = PermGroup::trivial(g.degree());
    for class in &classes {
        if class.is_identity_class() {
            continue;
        }
        if !is_pi_number(class.element_order() as u128, pi) {
            continue;
        }
        if core.contains(class.representative()) {
            continue;
        }
        let closed = normal_closure(g, &[class.representative().clone()], limits)?;
        if !is_pi_number(closed.order(), pi) {
            continue;
        }
        let mut gens = core_gens.clone();
        gens.extend(closed.generators().iter().cloned());
        let joined = PermGroup::from_generators_with(g.degree(), gens.clone(), limits)?;
        debug_assert!(is_pi_number(joined.order(), pi));
        core_gens = gens;
        core = joined;
    }
    Ok(core)
}

/// `O^pi(G)`: the smallest normal subgroup with pi-group quotient,
/// the normal closure of the pi'-parts of all elements. `G` has a normal
/// pi-complement exactly when this residual is a pi'-group.
pub fn residual(g: &PermGroup, pi: &[u32], limits: &Limits) -> Result<PermGroup> {
    let classes = conjugacy_classes(g, limits)?;
    let mut seeds = Vec::new();
    for class in &classes {
        let coprime_part = class.representative().pi_part_complement(pi);
        if !coprime_part.is_identity() {
            seeds.push(coprime_part);
        }
    }
    normal_closure(g, &seeds, limits)
}

/// The alternating series `1 <= O_p <= O_{p,p'} <= O_{p,p',p} <= ...`,
/// each term the preimage of the relevant core of the quotient. Stops at
/// the full group, or with a terminal repeat if it stabilizes below it.
pub fn upper_p_series(g: &PermGroup, p: u32, limits: &Limits) -> Result<SubgroupChain> {
    let mut terms = vec![PermGroup::trivial(g.degree())];
    let mut want_p = true;
    loop {
        let current = terms.last().unwrap().clone();
        if current.order() == g.order() {
            break;
        }
        let mut grown = None;
        for _ in 0..2 {
            let next = series_step(g, &current, p, want_p, limits)?;
            want_p = !want_p;
            if next.order() > current.order() {
                grown = Some(next);
                break;
            }
        }
        match grown {
            Some(next) => terms.push(next),
            None => {
                terms.push(current);
                break;
            }
        }
    }
    Ok(SubgroupChain { terms })
}

fn series_step(
    g: &PermGroup,
    below: &PermGroup,
    p: u32,
    want_p: bool,
    limits: &Limits,
) -> Result<PermGroup> {
    let pi_of = |group: &PermGroup| -> Vec<u32> {
        if want_p {
            vec![p]
        } else {
            group.order_primes().into_iter().filter(|&q| q != p).collect()
        }
    };
    if below.is_trivial() {
        return o_pi_core(g, &pi_of(g), limits);
    }
    let action = quotient(g, below, limits)?;
    let core = o_pi_core(action.image(), &pi_of(action.image()), limits)?;
    action.preimage(&core, limits)
}

/// All normal subgroups, sorted by order then element list.
///
/// Every normal subgroup is a join of single-class normal closures, so
/// the lattice is the join-closure of those; the class-count cap guards
/// the search.
pub fn normal_subgroups(g: &PermGroup, limits: &Limits) -> Result<Vec<PermGroup>> {
    let classes = conjugacy_classes(g, limits)?;
    if classes.len() > limits.max_classes {
        return Err(Error::ClassCapExceeded {
            count: classes.len(),
            cap: limits.max_classes,
        });
    }
    let mut found: Vec<PermGroup> = vec![PermGroup::trivial(g.degree())];
    let mut push_new = |list: &mut Vec<PermGroup>, n: PermGroup| {
        if !list.iter().any(|m| m.same_group_as(&n)) {
            list.push(n);
        }
    };
    for class in &classes {
        if class.is_identity_class() {
            continue;
        }
        let n = normal_closure(g, &[class.representative().clone()], limits)?;
        push_new(&mut found, n);
    }
    // join-closure: the product of two normal subgroups is normal
    let mut i = 0;
    while i < found.len() {
        let mut j = 0;
        while j <= i {
            let mut gens = found[i].generators().to_vec();
            gens.extend(found[j].generators().iter().cloned());
            let join = PermGroup::from_generators_with(g.degree(), gens, limits)?;
            push_new(&mut found, join);
            j += 1;
        }
        i += 1;
    }
    let mut keyed: Vec<(u128, Vec<Permutation>, PermGroup)> = found
        .into_iter()
        .map(|n| {
            let elems = n.elements(limits).map(|e| e.to_vec())?;
            Ok((n.order(), elems, n))
        })
        .collect::<Result<_>>()?;
    keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    Ok(keyed.into_iter().map(|(_, _, n)| n).collect())
}

/// `Sol(G)`: the largest solvable normal subgroup, the join of all
/// solvable members of the normal-subgroup lattice.
pub fn solvable_radical(g: &PermGroup, limits: &Limits) -> Result<PermGroup> {
    let normals = normal_subgroups(g, limits)?;
    let mut rad = PermGroup::trivial(g.degree());
    for n in &normals {
        let (_, _, solvable) = derived_series(n, limits)?;
        if solvable && !n.is_subgroup_of(&rad) {
            let mut gens = rad.generators().to_vec();
            gens.extend(n.generators().iter().cloned());
            rad = PermGroup::from_generators_with(g.degree(), gens, limits)?;
        }
    }
    Ok(rad)
}

/// `F(G)`: the product of the cores `O_p(G)` over primes dividing the
/// order.
pub fn fitting_subgroup(g: &PermGroup, limits: &Limits) -> Result<PermGroup> {
    let mut gens: Vec<Permutation> = Vec::new();
    for p in g.order_primes() {
        let core = o_pi_core(g, &[p], limits)?;
        gens.extend(core.generators().iter().cloned());
    }
    PermGroup::from_generators_with(g.degree(), gens, limits)
}

/// The minimal normal subgroups of `g`.
pub fn minimal_normal_subgroups(g: &PermGroup, limits: &Limits) -> Result<Vec<PermGroup>> {
    let normals = normal_subgroups(g, limits)?;
    let nontrivial: Vec<&PermGroup> =
        normals.iter().filter(|n| !n.is_trivial()).collect();
    let mut minimal = Vec::new();
    for n in &nontrivial {
        let has_smaller = nontrivial
            .iter()
            .any(|m| m.order() < n.order() && m.is_subgroup_of(n));
        if !has_smaller {
            minimal.push((*n).clone());
        }
    }
    Ok(minimal)
}

/// The socle: product of all minimal normal subgroups.
pub fn socle(g: &PermGroup, limits: &Limits) -> Result<PermGroup> {
    let mut gens: Vec<Permutation> = Vec::new();
    for n in minimal_normal_subgroups(g, limits)? {
        gens.extend(n.generators().iter().cloned());
    }
    PermGroup::from_generators_with(g.degree(), gens, limits)
}

/// True when `g` is simple: nontrivial with no proper nontrivial normal
/// subgroup.
pub fn is_simple(g: &PermGroup, limits: &Limits) -> Result<bool> {
    if g.is_trivial() {
        return Ok(false);
    }
    Ok(normal_subgroups(g, limits)?.len() == 2)
}

/// Structure profile of a p-group.
pub fn p_group_profile(p_grp: &PermGroup, p: u32, limits: &Limits) -> Result<PGroupProfile> {
    if !is_pi_number(p_grp.order(), &[p]) {
        return Err(Error::NotAPGroup {
            p,
            order: p_grp.order(),
        });
    }
    let is_abelian = p_grp.is_abelian();
    let is_elementary_abelian = is_abelian
        && p_grp
            .generators()
            .iter()
            .all(|g| g.pow(p as i64).is_identity());
    let derived = commutator_subgroup(p_grp, p_grp, p_grp, limits)?;
    let center = center(p_grp, limits)?;

    // Frattini subgroup of a p-group: P' * P^p, with the power part
    // generated by generator p-th powers (enough modulo P').
    let mut frattini_gens = derived.generators().to_vec();
    frattini_gens.extend(p_grp.generators().iter().map(|g| g.pow(p as i64)));
    let frattini = PermGroup::from_generators_with(p_grp.degree(), frattini_gens, limits)?;

    let nilpotency_class = nilpotency_class(p_grp, limits)?;
    let is_extraspecial = center.order() == p as u128
        && derived.same_group_as(&center)
        && frattini.same_group_as(&center);

    Ok(PGroupProfile {
        is_abelian,
        is_elementary_abelian,
        is_extraspecial,
        nilpotency_class,
        frattini,
        center,
        derived,
    })
}

/// Lower-central-series length; 0 for the trivial group, 1 for abelian.
pub fn nilpotency_class(g: &PermGroup, limits: &Limits) -> Result<usize> {
    if g.is_trivial() {
        return Ok(0);
    }
    let mut gamma = g.clone();
    let mut class = 0;
    loop {
        gamma = commutator_subgroup(g, &gamma, g, limits)?;
        class += 1;
        if gamma.is_trivial() {
            return Ok(class);
        }
        if class > limits.nilpotency_cap {
            return Err(Error::NilpotencyCapExceeded {
                cap: limits.nilpotency_cap,
            });
        }
    }
}

/// Searches for generators realizing `<a, b : a^3 = b^(2^m) = 1,
/// a^b = a^(-1)>`; a group of order `3 * 2^m` satisfying the relations on
/// a full generating pair is isomorphic to that presentation's group.
/// Returns `m` on success.
pub fn matches_gm(g: &PermGroup, limits: &Limits) -> Result<Option<u32>> {
    let order = g.order();
    if order % 3 != 0 || order < 6 {
        return Ok(None);
    }
    let two_part = order / 3;
    if !two_part.is_power_of_two() {
        return Ok(None);
    }
    let m = two_part.trailing_zeros();
    let elems = g.elements(limits)?;
    let order_three: Vec<&Permutation> =
        elems.iter().filter(|x| x.order() == 3).collect();
    let order_two_m: Vec<&Permutation> = elems
        .iter()
        .filter(|x| x.order() as u128 == two_part)
        .collect();
    for a in &order_three {
        for b in &order_two_m {
            if a.conjugate(b) != a.inverse() {
                continue;
            }
            let gen =
                PermGroup::from_generators_with(g.degree(), vec![(*a).clone(), (*b).clone()], limits)?;
            if gen.order() == order {
                return Ok(Some(m));
            }
        }
    }
    Ok(None)
}
