//! Sylow subgroups, fusion control, the `Z_p^*` subgroup, and normal
//! pi-complement detection.
//!
//! The complement detection is computed three independent ways for a
//! single prime (core order, class counts, Sylow self-fusion); any
//! disagreement is an engine bug and surfaces as an internal error,
//! never as a verdict.

use std::collections::HashSet;

use crate::classes::conjugacy_classes;
use crate::coset::quotient;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::limits::Limits;
use crate::perm::Permutation;
use crate::structure::{center, normalizer, o_pi_core};

/// Fusion data for one conjugacy class of p-elements.
#[derive(Debug, Clone)]
pub struct FusionReport {
    /// Class representative chosen inside the fixed Sylow subgroup.
    pub element: Permutation,
    /// `x^G` intersected with the Sylow subgroup, sorted.
    pub class_meet_sylow: Vec<Permutation>,
    /// `|x^G ∩ P| = 1`.
    pub is_isolated: bool,
    pub in_z_p_star: bool,
}

/// Outcome of the normal pi-complement detection.
#[derive(Debug, Clone)]
pub struct ComplementVerdict {
    pub exists: bool,
    pub complement: Option<PermGroup>,
    /// Whether `G/N` (an isomorphic image of a Hall pi-subgroup) is
    /// abelian; present only when the complement exists.
    pub hall_quotient_abelian: Option<bool>,
}

/// A Sylow p-subgroup, deterministically constructed.
///
/// Ascent: start from the cyclic group on the lexicographically least
/// p-element of maximal p-power order; while short of the full p-part,
/// adjoin the least p-element of the normalizer lying outside. The
/// intermediate group stays a p-group because it normalizes the previous
/// step and extends it by p-power order.
pub fn sylow_subgroup(g: &PermGroup, p: u32, limits: &Limits) -> Result<PermGroup> {
    let target = g.order_p_part(p);
    if target == 1 {
        return Ok(PermGroup::trivial(g.degree()));
    }
    let elems = g.elements(limits)?;
    let max_order = elems
        .iter()
        .filter(|x| x.is_p_element(p))
        .map(|x| x.order())
        .max()
        .expect("p divides the order, so a p-element exists");
    let seed = elems
        .iter()
        .find(|x| x.is_p_element(p) && x.order() == max_order)
        .expect("element of maximal p-power order");
    let mut gens = vec![seed.clone()];
    let mut part = PermGroup::from_generators_with(g.degree(), gens.clone(), limits)?;
    while part.order() < target {
        let norm = normalizer(g, &part, limits)?;
        let next = norm
            .elements(limits)?
            .iter()
            .find(|x| !x.is_identity() && x.is_p_element(p) && !part.contains(x))
            .cloned()
            .ok_or_else(|| {
                Error::Internal(
                    "Sylow ascent stalled: normalizer holds no new p-element".into(),
                )
            })?;
        gens.push(next);
        part = PermGroup::from_generators_with(g.degree(), gens.clone(), limits)?;
    }
    Ok(part)
}

/// `x^G ∩ P` for a p-element `x` and Sylow p-subgroup `P`, sorted.
pub fn class_intersect_sylow(
    g: &PermGroup,
    p: u32,
    x: &Permutation,
    sylow: &PermGroup,
    limits: &Limits,
) -> Result<Vec<Permutation>> {
    if !x.is_p_element(p) {
        return Err(Error::NotAPElement {
            p,
            order: x.order(),
        });
    }
    if !g.membership(x)? {
        return Err(Error::NotAMember);
    }
    if !sylow.is_subgroup_of(g) || sylow.order() != g.order_p_part(p) {
        return Err(Error::NotSylow {
            p,
            order: sylow.order(),
            expected: g.order_p_part(p),
        });
    }
    let mut meet: Vec<Permutation> = conjugation_orbit(g, x)
        .into_iter()
        .filter(|y| sylow.contains(y))
        .collect();
    meet.sort_unstable();
    Ok(meet)
}

fn conjugation_orbit(g: &PermGroup, x: &Permutation) -> Vec<Permutation> {
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut queue = vec![x.clone()];
    seen.insert(x.clone());
    let mut head = 0;
    while head < queue.len() {
        let y = queue[head].clone();
        head += 1;
        for s in g.generators() {
            let z = y.conjugate(s);
            if seen.insert(z.clone()) {
                queue.push(z);
            }
        }
    }
    queue
}

/// True when `h` controls `g`-fusion in `k`: any two `g`-conjugate
/// elements of `k` are already `h`-conjugate.
pub fn controls_fusion(
    g: &PermGroup,
    h: &PermGroup,
    k: &PermGroup,
    limits: &Limits,
) -> Result<bool> {
    if !k.is_subgroup_of(h) || !h.is_subgroup_of(g) {
        return Err(Error::NotASubgroup);
    }
    let mut settled: HashSet<Permutation> = HashSet::new();
    for x in k.elements(limits)? {
        if settled.contains(x) {
            continue;
        }
        let h_class: HashSet<Permutation> =
            conjugation_orbit(h, x).into_iter().collect();
        for y in conjugation_orbit(g, x) {
            if !k.contains(&y) {
                continue;
            }
            if !h_class.contains(&y) {
                return Ok(false);
            }
            settled.insert(y);
        }
    }
    Ok(true)
}

/// Number of conjugacy classes of pi-elements (identity included).
pub fn count_pi_classes(g: &PermGroup, pi: &[u32], limits: &Limits) -> Result<usize> {
    let classes = conjugacy_classes(g, limits)?;
    Ok(classes
        .iter()
        .filter(|c| crate::structure::is_pi_number(c.element_order() as u128, pi))
        .count())
}

/// Detects a normal pi-complement: a normal subgroup of order the full
/// pi'-part. For a single prime the verdict is cross-checked against the
/// class-count criterion `k_p(G) = k(P)` and against Sylow self-fusion
/// control; disagreement escalates as an internal error.
pub fn has_normal_pi_complement(
    g: &PermGroup,
    pi: &[u32],
    limits: &Limits,
) -> Result<ComplementVerdict> {
    let complement_primes: Vec<u32> = g
        .order_primes()
        .into_iter()
        .filter(|p| !pi.contains(p))
        .collect();
    let target = g.order_pi_part(&complement_primes);
    let core = o_pi_core(g, &complement_primes, limits)?;
    let exists = core.order() == target;

    if let [p] = pi {
        let sylow = sylow_subgroup(g, *p, limits)?;
        let k_p = count_pi_classes(g, pi, limits)?;
        let k_of_sylow = conjugacy_classes(&sylow, limits)?.len();
        let by_classes = k_p == k_of_sylow;
        let by_fusion = controls_fusion(g, &sylow, &sylow, limits)?;
        if by_classes != exists || by_fusion != exists {
            return Err(Error::Internal(format!(
                "normal {p}-complement detections disagree: core={exists} classes={by_classes} fusion={by_fusion}"
            )));
        }
    }

    if exists {
        let abelian = if core.order() == g.order() {
            true
        } else {
            quotient(g, &core, limits)?.image().is_abelian()
        };
        Ok(ComplementVerdict {
            exists,
            complement: Some(core),
            hall_quotient_abelian: Some(abelian),
        })
    } else {
        Ok(ComplementVerdict {
            exists,
            complement: None,
            hall_quotient_abelian: None,
        })
    }
}

/// `Z_p^*(G)`: the preimage of the center of `G / O_{p'}(G)`.
pub fn z_p_star(g: &PermGroup, p: u32, limits: &Limits) -> Result<PermGroup> {
    let complement_primes: Vec<u32> = g
        .order_primes()
        .into_iter()
        .filter(|&q| q != p)
        .collect();
    let core = o_pi_core(g, &complement_primes, limits)?;
    if core.is_trivial() {
        return center(g, limits);
    }
    if core.order() == g.order() {
        return Ok(g.clone());
    }
    let action = quotient(g, &core, limits)?;
    let z = center(action.image(), limits)?;
    action.preimage(&z, limits)
}

/// One fusion report per nontrivial class of p-elements, with the class
/// representative re-chosen inside the given Sylow subgroup.
pub fn glauberman_witnesses(
    g: &PermGroup,
    p: u32,
    limits: &Limits,
) -> Result<Vec<FusionReport>> {
    let sylow = sylow_subgroup(g, p, limits)?;
    let star = z_p_star(g, p, limits)?;
    let classes = conjugacy_classes(g, limits)?;
    let mut reports = Vec::new();
    for class in &classes {
        if class.is_identity_class() || !class.representative().is_p_element(p) {
            continue;
        }
        let meet: Vec<Permutation> = class
            .members()
            .iter()
            .filter(|m| sylow.contains(m))
            .cloned()
            .collect();
        let element = meet
            .first()
            .cloned()
            .ok_or_else(|| {
                Error::Internal("class of p-elements misses the Sylow subgroup".into())
            })?;
        let is_isolated = meet.len() == 1;
        let in_z_p_star = star.contains(&element);
        reports.push(FusionReport {
            element,
            class_meet_sylow: meet,
            is_isolated,
            in_z_p_star,
        });
    }
    Ok(reports)
}
