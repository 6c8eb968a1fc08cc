//! Permutation groups backed by a stabilizer chain.
//!
//! Construction runs a deterministic Schreier-Sims: Schreier generators
//! are processed in (generator index, orbit discovery order), so the
//! chain, the element enumeration and everything downstream are
//! reproducible run to run.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::perm::Permutation;

/// One level of the stabilizer chain: strong generators fixing all
/// earlier base points, the fundamental orbit of this level's base point,
/// and a transversal mapping each orbit point to a representative.
#[derive(Debug, Clone)]
pub struct ChainLevel {
    base_point: u32,
    gens: Vec<Permutation>,
    orbit: Vec<u32>,
    transversal: HashMap<u32, Permutation>,
}

impl ChainLevel {
    fn new(base_point: u32, degree: usize) -> Self {
        let mut transversal = HashMap::new();
        transversal.insert(base_point, Permutation::identity(degree));
        ChainLevel {
            base_point,
            gens: Vec::new(),
            orbit: vec![base_point],
            transversal,
        }
    }

    pub fn base_point(&self) -> u32 {
        self.base_point
    }

    pub fn orbit(&self) -> &[u32] {
        &self.orbit
    }

    /// Representative taking the base point to `point`, if in the orbit.
    pub fn representative(&self, point: u32) -> Option<&Permutation> {
        self.transversal.get(&point)
    }

    fn recompute_orbit(&mut self, degree: usize) {
        self.orbit.clear();
        self.transversal.clear();
        self.orbit.push(self.base_point);
        self.transversal
            .insert(self.base_point, Permutation::identity(degree));
        let mut head = 0;
        while head < self.orbit.len() {
            let pt = self.orbit[head];
            head += 1;
            for g in &self.gens {
                let image = g.apply(pt);
                if !self.transversal.contains_key(&image) {
                    let rep = self.transversal[&pt].compose(g);
                    self.transversal.insert(image, rep);
                    self.orbit.push(image);
                }
            }
        }
    }
}

/// A finite permutation group with an order/membership certificate.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    levels: Vec<ChainLevel>,
    order: u128,
    elements_cache: OnceLock<Vec<Permutation>>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup::from_generators(degree, Vec::new()).expect("trivial group")
    }

    pub fn from_generators(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        PermGroup::from_generators_with(degree, gens, &Limits::default())
    }

    pub fn from_generators_with(
        degree: usize,
        gens: Vec<Permutation>,
        limits: &Limits,
    ) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidParameter(
                "degree must be positive".into(),
            ));
        }
        let mut kept: Vec<Permutation> = Vec::new();
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    got: g.degree(),
                });
            }
            if !g.is_identity() && !kept.contains(&g) {
                kept.push(g);
            }
        }
        let mut builder = Builder::new(degree, limits.max_order);
        builder.run(&kept)?;
        let levels = builder.finish();
        let order = levels.iter().map(|l| l.orbit.len() as u128).product();
        Ok(PermGroup {
            degree,
            generators: kept,
            levels,
            order,
            elements_cache: OnceLock::new(),
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn chain(&self) -> &[ChainLevel] {
        &self.levels
    }

    /// All strong generators, level by level.
    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for level in &self.levels {
            for g in &level.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Strips `g` through the chain; the residue is the identity exactly
    /// when `g` is a member.
    pub fn sift(&self, g: &Permutation) -> Permutation {
        let mut h = g.clone();
        for level in &self.levels {
            let image = h.apply(level.base_point);
            match level.transversal.get(&image) {
                Some(u) => h = h.compose(&u.inverse()),
                None => return h,
            }
        }
        h
    }

    /// Membership via sifting; degrees are assumed equal.
    pub fn contains(&self, g: &Permutation) -> bool {
        debug_assert_eq!(g.degree(), self.degree);
        self.sift(g).is_identity()
    }

    /// Degree-checked membership test.
    pub fn membership(&self, g: &Permutation) -> Result<bool> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                got: g.degree(),
            });
        }
        Ok(self.contains(g))
    }

    /// Every element, sorted lexicographically by image array.
    ///
    /// Refuses explicitly when the order exceeds the enumeration cap.
    /// The list is computed once per group and shared afterwards.
    pub fn elements(&self, limits: &Limits) -> Result<&[Permutation]> {
        if self.order > limits.max_enumeration as u128 {
            return Err(Error::EnumerationCapExceeded {
                order: self.order,
                cap: limits.max_enumeration,
            });
        }
        Ok(self
            .elements_cache
            .get_or_init(|| self.enumerate_unchecked()))
    }

    fn enumerate_unchecked(&self) -> Vec<Permutation> {
        let mut elems = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(elems.len() * level.orbit.len());
            for deep in &elems {
                for pt in &level.orbit {
                    next.push(deep.compose(&level.transversal[pt]));
                }
            }
            elems = next;
        }
        elems.sort_unstable();
        debug_assert_eq!(elems.len() as u128, self.order);
        elems
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree
            && self.generators.iter().all(|g| other.contains(g))
    }

    /// True when conjugation by every generator of `g` maps this group to
    /// itself (for subgroups of `g`, this is normality).
    pub fn is_normal_in(&self, g: &PermGroup) -> bool {
        g.generators.iter().all(|c| {
            self.generators
                .iter()
                .all(|h| self.contains(&h.conjugate(c)))
        })
    }

    pub fn same_group_as(&self, other: &PermGroup) -> bool {
        self.order == other.order && self.is_subgroup_of(other)
    }

    pub fn is_abelian(&self) -> bool {
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                if a.compose(b) != b.compose(a) {
                    return false;
                }
            }
        }
        true
    }

    /// Primes dividing the order, ascending.
    pub fn order_primes(&self) -> Vec<u32> {
        factorize(self.order).into_iter().map(|(p, _)| p).collect()
    }

    /// The p-part of the order.
    pub fn order_p_part(&self, p: u32) -> u128 {
        let mut part: u128 = 1;
        let mut n = self.order;
        while n % p as u128 == 0 {
            n /= p as u128;
            part *= p as u128;
        }
        part
    }

    /// The pi-part of the order.
    pub fn order_pi_part(&self, pi: &[u32]) -> u128 {
        pi.iter().map(|&p| self.order_p_part(p)).product()
    }
}

/// Prime factorization of a group order, ascending.
pub fn factorize(mut n: u128) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    let mut p: u128 = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p as u32, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n as u32, 1));
    }
    out
}

/// Builds the subgroup generated by the given elements, adding a new
/// generator only when it is not already contained. Input order fixes
/// the result's generator list, keeping everything deterministic.
pub fn subgroup_from_elements<I>(degree: usize, elems: I, limits: &Limits) -> Result<PermGroup>
where
    I: IntoIterator<Item = Permutation>,
{
    let mut group = PermGroup::from_generators_with(degree, Vec::new(), limits)?;
    let mut gens: Vec<Permutation> = Vec::new();
    for e in elems {
        if e.degree() != degree {
            return Err(Error::DegreeMismatch {
                expected: degree,
                got: e.degree(),
            });
        }
        if !group.contains(&e) {
            gens.push(e);
            group = PermGroup::from_generators_with(degree, gens.clone(), limits)?;
        }
    }
    Ok(group)
}

/// Deterministic Schreier-Sims driver.
///
/// `inserted[j]` holds the strong generators whose first moved base point
/// is `base[j]`; the effective generating set of level `i` is the union
/// of `inserted[j]` for `j >= i` (every such generator fixes the first
/// `i` base points). After any insertion the whole verification restarts,
/// which is wasteful in the abstract but cheap at catalog degrees and
/// keeps the processing order trivially reproducible.
struct Builder {
    degree: usize,
    max_order: u128,
    base: Vec<u32>,
    inserted: Vec<Vec<Permutation>>,
    levels: Vec<ChainLevel>,
}

impl Builder {
    fn new(degree: usize, max_order: u128) -> Self {
        Builder {
            degree,
            max_order,
            base: Vec::new(),
            inserted: Vec::new(),
            levels: Vec::new(),
        }
    }

    fn level_gens(&self, i: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        for j in i..self.inserted.len() {
            out.extend(self.inserted[j].iter().cloned());
        }
        out
    }

    fn insert(&mut self, g: Permutation) {
        debug_assert!(!g.is_identity());
        let level = match self.base.iter().position(|&b| g.apply(b) != b) {
            Some(i) => i,
            None => {
                let moved = g
                    .images()
                    .iter()
                    .enumerate()
                    .position(|(i, &x)| i as u32 != x)
                    .expect("non-identity moves a point") as u32;
                self.base.push(moved);
                self.inserted.push(Vec::new());
                self.base.len() - 1
            }
        };
        self.inserted[level].push(g);
    }

    fn rebuild_levels(&mut self) -> Result<()> {
        self.levels.clear();
        let mut order: u128 = 1;
        for (i, &bp) in self.base.iter().enumerate() {
            let mut level = ChainLevel::new(bp, self.degree);
            level.gens = self.level_gens(i);
            level.recompute_orbit(self.degree);
            order = order.saturating_mul(level.orbit.len() as u128);
            if order > self.max_order {
                return Err(Error::OrderCapExceeded {
                    cap: self.max_order,
                });
            }
            self.levels.push(level);
        }
        Ok(())
    }

    fn sift_from(&self, start: usize, g: Permutation) -> Permutation {
        let mut h = g;
        for level in &self.levels[start..] {
            if h.is_identity() {
                break;
            }
            let image = h.apply(level.base_point);
            match level.transversal.get(&image) {
                Some(u) => h = h.compose(&u.inverse()),
                None => break,
            }
        }
        h
    }

    fn run(&mut self, gens: &[Permutation]) -> Result<()> {
        for g in gens {
            self.insert(g.clone());
        }
        self.rebuild_levels()?;
        'verify: loop {
            for i in (0..self.levels.len()).rev() {
                let level = &self.levels[i];
                for &beta in &level.orbit {
                    for s in &level.gens {
                        let u = &level.transversal[&beta];
                        let v = &level.transversal[&s.apply(beta)];
                        let schreier = u.compose(s).compose(&v.inverse());
                        if schreier.is_identity() {
                            continue;
                        }
                        let residue = self.sift_from(i + 1, schreier);
                        if !residue.is_identity() {
                            self.insert(residue);
                            self.rebuild_levels()?;
                            continue 'verify;
                        }
                    }
                }
            }
            return Ok(());
        }
    }

    fn finish(self) -> Vec<ChainLevel> {
        self.levels
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, cycles: &[&[u32]]) -> Permutation {
        Permutation::from_cycles(degree, cycles).unwrap()
    }

    #[test]
    fn symmetric_group_on_three_points() {
        let g = PermGroup::from_generators(
            3,
            vec![cyc(3, &[&[0, 1]]), cyc(3, &[&[0, 1, 2]])],
        )
        .unwrap();
        assert_eq!(g.order(), 6);
        let elems = g.elements(&Limits::default()).unwrap();
        assert_eq!(elems.len(), 6);
        assert!(elems.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn empty_generators_give_trivial_group() {
        let g = PermGroup::from_generators(5, vec![]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(
            g.elements(&Limits::default()).unwrap(),
            &[Permutation::identity(5)]
        );
    }

    #[test]
    fn alternating_group_on_five_points() {
        let g = PermGroup::from_generators(
            5,
            vec![cyc(5, &[&[0, 1, 2, 3, 4]]), cyc(5, &[&[2, 3, 4]])],
        )
        .unwrap();
        assert_eq!(g.order(), 60);
        // membership: even permutations in, odd out
        assert!(g.contains(&cyc(5, &[&[0, 1, 2]])));
        assert!(!g.contains(&cyc(5, &[&[0, 1]])));
        assert!(g.contains(&Permutation::identity(5)));
    }

    #[test]
    fn chain_certificate_is_consistent() {
        let g = PermGroup::from_generators(
            4,
            vec![cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 1]])],
        )
        .unwrap();
        assert_eq!(g.order(), 24);
        let orbit_product: u128 = g.chain().iter().map(|l| l.orbit().len() as u128).product();
        assert_eq!(orbit_product, g.order());
        for gen in g.generators() {
            assert!(g.sift(gen).is_identity());
        }
        assert_eq!(g.elements(&Limits::default()).unwrap().len(), 24);
    }

    #[test]
    fn order_cap_refuses() {
        let limits = Limits {
            max_order: 100,
            ..Limits::default()
        };
        let err = PermGroup::from_generators_with(
            6,
            vec![cyc(6, &[&[0, 1, 2, 3, 4, 5]]), cyc(6, &[&[0, 1]])],
            &limits,
        )
        .unwrap_err();
        assert!(matches!(err, Error::OrderCapExceeded { .. }));
    }

    #[test]
    fn enumeration_cap_refuses_not_truncates() {
        let g = PermGroup::from_generators(
            4,
            vec![cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 1]])],
        )
        .unwrap();
        let limits = Limits {
            max_enumeration: 10,
            ..Limits::default()
        };
        assert!(matches!(
            g.elements(&limits),
            Err(Error::EnumerationCapExceeded { .. })
        ));
    }

    #[test]
    fn factorize_small_orders() {
        assert_eq!(factorize(12180), vec![(2, 2), (3, 1), (5, 1), (7, 1), (29, 1)]);
        assert_eq!(factorize(1), vec![]);
    }
}
