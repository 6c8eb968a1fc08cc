//! Exact class-counting invariants: k(G), k_pi(G), commuting degrees
//! d(G) and d_pi(G), and the classification of groups with d(G) >= 1/2.

use crate::classes::conjugacy_classes;
use crate::coset::quotient;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::limits::Limits;
use crate::ratio::ExactRatio;
use crate::structure::{center, commutator_subgroup, is_pi_number, matches_gm, normal_subgroups, o_pi_core};
use crate::sylow::{has_normal_pi_complement, sylow_subgroup};

/// `(k(G), k_pi(G))`: total class count and the count of classes of
/// pi-elements, identity included.
pub fn class_counts(g: &PermGroup, pi: &[u32], limits: &Limits) -> Result<(usize, usize)> {
    let classes = conjugacy_classes(g, limits)?;
    let k = classes.len();
    let k_pi = classes
        .iter()
        .filter(|c| is_pi_number(c.element_order() as u128, pi))
        .count();
    Ok((k, k_pi))
}

/// `d(G) = k(G)/|G|`, or `d_pi(G) = k_pi(G)/|G|_pi` when `pi` is given.
pub fn commuting_degree(
    g: &PermGroup,
    pi: Option<&[u32]>,
    limits: &Limits,
) -> Result<ExactRatio> {
    match pi {
        None => {
            let (k, _) = class_counts(g, &[], limits)?;
            Ok(ExactRatio::new(k as u64, g.order() as u64))
        }
        Some(pi) => {
            let (_, k_pi) = class_counts(g, pi, limits)?;
            Ok(ExactRatio::new(k_pi as u64, g.order_pi_part(pi) as u64))
        }
    }
}

/// Per-prime invariant data for one group.
#[derive(Debug, Clone)]
pub struct PrimeInvariants {
    pub p: u32,
    pub p_part: u128,
    pub k_p: usize,
    pub d_p: ExactRatio,
    pub p_nilpotent: bool,
    pub sylow_abelian: bool,
    pub k_of_sylow: usize,
}

/// The full invariant record of a group.
#[derive(Debug, Clone)]
pub struct InvariantRecord {
    pub order: u128,
    pub k: usize,
    pub d: ExactRatio,
    pub primes: Vec<PrimeInvariants>,
}

pub fn invariant_record(g: &PermGroup, limits: &Limits) -> Result<InvariantRecord> {
    let (k, _) = class_counts(g, &[], limits)?;
    let d = ExactRatio::new(k as u64, g.order() as u64);
    let mut primes = Vec::new();
    for p in g.order_primes() {
        let (_, k_p) = class_counts(g, &[p], limits)?;
        let p_part = g.order_p_part(p);
        let sylow = sylow_subgroup(g, p, limits)?;
        let verdict = has_normal_pi_complement(g, &[p], limits)?;
        primes.push(PrimeInvariants {
            p,
            p_part,
            k_p,
            d_p: ExactRatio::new(k_p as u64, p_part as u64),
            p_nilpotent: verdict.exists,
            sylow_abelian: sylow.is_abelian(),
            k_of_sylow: conjugacy_classes(&sylow, limits)?.len(),
        });
    }
    Ok(InvariantRecord { order: g.order(), k, d, primes })
}

/// Classification of groups with `d(G) >= 1/2`, verified structurally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LescotType {
    /// `d(G) = 1`.
    Abelian,
    /// `G = P x A`, `A` abelian of odd order, `P` the Sylow 2-subgroup
    /// with `|G'| = |P'| = 2` and `d(G) = (1 + 4^-m)/2`.
    TwoCentral {
        m: u32,
        two_part_order: u128,
        abelian_part_order: u128,
    },
    /// `G = G_m x A` with `A` abelian and `d(G) = 1/2`, where `G_m` is
    /// `<a, b : a^3 = b^(2^m) = 1, a^b = a^(-1)>`.
    GmFamily { m: u32, abelian_factor_order: u128 },
    /// `d(G) < 1/2`.
    Below,
}

fn classification_failure(g: &PermGroup, what: &str) -> Error {
    Error::Internal(format!(
        "trichotomy violated for group of order {}: {what}",
        g.order()
    ))
}

/// Classifies `g` by its commuting degree. Groups at or above 1/2 must
/// land in exactly one structural case; anything else is a loud failure,
/// never a silent fallthrough.
pub fn lescot_classify(g: &PermGroup, limits: &Limits) -> Result<LescotType> {
    let d = commuting_degree(g, None, limits)?;
    let half = ExactRatio::new(1, 2);
    if d < half {
        return Ok(LescotType::Below);
    }
    if g.is_abelian() {
        if !d.is_one() {
            return Err(classification_failure(g, "abelian group with d < 1"));
        }
        return Ok(LescotType::Abelian);
    }
    if d == half {
        return classify_gm_family(g, limits);
    }
    classify_two_central(g, d, limits)
}

fn classify_gm_family(g: &PermGroup, limits: &Limits) -> Result<LescotType> {
    if let Some(m) = matches_gm(g, limits)? {
        return Ok(LescotType::GmFamily {
            m,
            abelian_factor_order: 1,
        });
    }
    // direct-factor search over the normal-subgroup lattice
    let normals = normal_subgroups(g, limits)?;
    for n1 in &normals {
        let Some(m) = matches_gm(n1, limits)? else {
            continue;
        };
        for n2 in &normals {
            if n1.order() * n2.order() != g.order() || !n2.is_abelian() {
                continue;
            }
            if !trivial_intersection(n1, n2, limits)? {
                continue;
            }
            return Ok(LescotType::GmFamily {
                m,
                abelian_factor_order: n2.order(),
            });
        }
    }
    Err(classification_failure(
        g,
        "d = 1/2 but no G_m x abelian decomposition found",
    ))
}

fn classify_two_central(g: &PermGroup, d: ExactRatio, limits: &Limits) -> Result<LescotType> {
    if d > ExactRatio::new(5, 8) {
        return Err(classification_failure(g, "nonabelian group with d > 5/8"));
    }
    let two_core = o_pi_core(g, &[2], limits)?;
    if two_core.order() != g.order_p_part(2) {
        return Err(classification_failure(g, "Sylow 2-subgroup is not normal"));
    }
    let odd_primes: Vec<u32> = g.order_primes().into_iter().filter(|&p| p != 2).collect();
    let odd_core = o_pi_core(g, &odd_primes, limits)?;
    if odd_core.order() * two_core.order() != g.order() || !odd_core.is_abelian() {
        return Err(classification_failure(
            g,
            "no abelian odd direct complement to the Sylow 2-subgroup",
        ));
    }
    let derived_g = commutator_subgroup(g, g, g, limits)?;
    let derived_p = commutator_subgroup(&two_core, &two_core, &two_core, limits)?;
    if derived_g.order() != 2 || derived_p.order() != 2 {
        return Err(classification_failure(g, "derived subgroup order is not 2"));
    }
    let z = center(g, limits)?;
    let index = g.order() / z.order();
    let m = match power_of_four(index) {
        Some(m) => m,
        None => {
            return Err(classification_failure(
                g,
                "central quotient order is not a power of 4",
            ))
        }
    };
    let central_quotient = quotient(g, &z, limits)?;
    let elementary = central_quotient.image().is_abelian()
        && central_quotient
            .image()
            .generators()
            .iter()
            .all(|x| x.pow(2).is_identity());
    if !elementary {
        return Err(classification_failure(
            g,
            "central quotient is not elementary abelian",
        ));
    }
    let four_m = 4u64.pow(m);
    if d != ExactRatio::new(four_m + 1, 2 * four_m) {
        return Err(classification_failure(g, "d does not equal (1 + 4^-m)/2"));
    }
    let d_of_p = commuting_degree(&two_core, None, limits)?;
    if d_of_p != d {
        return Err(classification_failure(g, "d(P) differs from d(G)"));
    }
    Ok(LescotType::TwoCentral {
        m,
        two_part_order: two_core.order(),
        abelian_part_order: odd_core.order(),
    })
}

fn power_of_four(n: u128) -> Option<u32> {
    if n < 4 || !n.is_power_of_two() {
        return None;
    }
    let tz = n.trailing_zeros();
    if tz % 2 == 0 {
        Some(tz / 2)
    } else {
        None
    }
}

/// True when the two subgroups meet only in the identity.
pub fn trivial_intersection(a: &PermGroup, b: &PermGroup, limits: &Limits) -> Result<bool> {
    let (small, large) = if a.order() <= b.order() { (a, b) } else { (b, a) };
    if gcd_u128(small.order(), large.order()) == 1 {
        return Ok(true);
    }
    Ok(small
        .elements(limits)?
        .iter()
        .filter(|x| large.contains(x))
        .count()
        == 1)
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
