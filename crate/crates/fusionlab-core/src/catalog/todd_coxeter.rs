//! Todd-Coxeter coset enumeration over the trivial subgroup (HLT
//! strategy, no lookahead), yielding the group order and a faithful
//! regular permutation representation when the presentation is finite.
//!
//! Coset numbering follows first-definition order, so enumeration output
//! is reproducible.

use crate::catalog::presentation::Presentation;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::limits::Limits;
use crate::perm::Permutation;

const UNDEF: u32 = u32::MAX;

/// A closed coset table. Row `i` is coset `i + 1` (coset 1 is the
/// subgroup); columns alternate generator and inverse.
#[derive(Debug, Clone)]
pub struct CosetTable {
    generators: Vec<String>,
    rows: Vec<Vec<u32>>,
}

impl CosetTable {
    pub fn coset_count(&self) -> usize {
        self.rows.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generators
    }

    /// Image of 1-based `coset` under the action of generator `gen`
    /// (or its inverse), 1-based.
    pub fn apply(&self, coset: usize, gen: usize, inverse: bool) -> usize {
        let col = 2 * gen + usize::from(inverse);
        self.rows[coset - 1][col] as usize + 1
    }
}

/// Result of a successful enumeration.
#[derive(Debug, Clone)]
pub struct Enumeration {
    pub order: usize,
    pub table: CosetTable,
    /// The regular representation: each generator acting on cosets.
    pub regular: PermGroup,
}

struct Tables {
    cols: usize,
    table: Vec<Vec<u32>>,
    parent: Vec<u32>,
    defined: usize,
    max_cosets: usize,
    pending: Vec<(u32, u32)>,
}

impl Tables {
    fn find(&self, mut a: u32) -> u32 {
        while self.parent[a as usize] != a {
            a = self.parent[a as usize];
        }
        a
    }

    fn alive(&self, a: u32) -> bool {
        self.parent[a as usize] == a
    }

    fn lookup(&self, a: u32, col: usize) -> u32 {
        let v = self.table[self.find(a) as usize][col];
        if v == UNDEF {
            UNDEF
        } else {
            self.find(v)
        }
    }

    fn define(&mut self, a: u32, col: usize) -> Result<u32> {
        if self.defined >= self.max_cosets {
            return Err(Error::CosetLimitExceeded {
                max_cosets: self.max_cosets,
            });
        }
        let fresh = self.table.len() as u32;
        self.table.push(vec![UNDEF; self.cols]);
        self.parent.push(fresh);
        self.defined += 1;
        let ar = self.find(a);
        self.table[ar as usize][col] = fresh;
        self.table[fresh as usize][col ^ 1] = ar;
        Ok(fresh)
    }

    fn process_coincidences(&mut self) {
        while let Some((a, b)) = self.pending.pop() {
            let ra = self.find(a);
            let rb = self.find(b);
            if ra == rb {
                continue;
            }
            let (keep, dead) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[dead as usize] = keep;
            for col in 0..self.cols {
                let delta = self.table[dead as usize][col];
                if delta == UNDEF {
                    continue;
                }
                self.table[dead as usize][col] = UNDEF;
                let dr = self.find(delta);
                let kr = self.find(keep);
                let existing = self.table[kr as usize][col];
                if existing == UNDEF {
                    self.table[kr as usize][col] = dr;
                    let back = self.table[dr as usize][col ^ 1];
                    if back == UNDEF {
                        self.table[dr as usize][col ^ 1] = kr;
                    } else {
                        self.pending.push((back, kr));
                    }
                } else {
                    self.pending.push((existing, dr));
                }
            }
        }
    }

    /// Traces `word` cyclically from `start`, filling gaps one coset at
    /// a time; a mismatched closure queues a coincidence.
    fn scan_and_fill(&mut self, start: u32, word: &[usize]) -> Result<()> {
        'rescan: loop {
            let alpha = self.find(start);
            let mut f = alpha;
            let mut i = 0;
            while i < word.len() {
                let next = self.lookup(f, word[i]);
                if next == UNDEF {
                    break;
                }
                f = next;
                i += 1;
            }
            if i == word.len() {
                if f != alpha {
                    self.pending.push((f, alpha));
                    self.process_coincidences();
                }
                return Ok(());
            }
            let mut b = alpha;
            let mut j = word.len();
            while j > i {
                let prev = self.lookup(b, word[j - 1] ^ 1);
                if prev == UNDEF {
                    break;
                }
                b = prev;
                j -= 1;
            }
            match j - i {
                0 => {
                    if f != b {
                        self.pending.push((f, b));
                        self.process_coincidences();
                    }
                    return Ok(());
                }
                1 => {
                    // deduction: both facing entries are undefined here
                    let fr = self.find(f);
                    let br = self.find(b);
                    self.table[fr as usize][word[i]] = br;
                    self.table[br as usize][word[i] ^ 1] = fr;
                    return Ok(());
                }
                _ => {
                    self.define(f, word[i])?;
                    continue 'rescan;
                }
            }
        }
    }
}

/// Enumerates the cosets of the trivial subgroup. On success the table
/// is closed and compatible with every relator, and the permutation
/// action of the generators on cosets is a faithful regular
/// representation. Exceeding `max_cosets` is reported as inconclusive,
/// never as "infinite".
pub fn todd_coxeter(
    presentation: &Presentation,
    max_cosets: usize,
    limits: &Limits,
) -> Result<Enumeration> {
    if max_cosets == 0 {
        return Err(Error::InvalidParameter("max_cosets must be at least 1".into()));
    }
    let n_gens = presentation.generators.len();
    let cols = 2 * n_gens;
    let words: Vec<Vec<usize>> = presentation
        .relators
        .iter()
        .map(|rel| {
            rel.iter()
                .map(|&letter| {
                    let gen = letter.unsigned_abs() as usize - 1;
                    2 * gen + usize::from(letter < 0)
                })
                .collect()
        })
        .collect();

    let mut t = Tables {
        cols,
        table: vec![vec![UNDEF; cols]],
        parent: vec![0],
        defined: 1,
        max_cosets,
        pending: Vec::new(),
    };

    let mut alpha: u32 = 0;
    while (alpha as usize) < t.table.len() {
        if t.alive(alpha) {
            for word in &words {
                t.scan_and_fill(alpha, word)?;
                if !t.alive(alpha) {
                    break;
                }
            }
            if t.alive(alpha) {
                for col in 0..cols {
                    if t.lookup(alpha, col) == UNDEF {
                        t.define(alpha, col)?;
                    }
                }
            }
        }
        alpha += 1;
    }

    // compact live cosets in first-definition order
    let mut live: Vec<u32> = (0..t.table.len() as u32).filter(|&a| t.alive(a)).collect();
    live.sort_unstable();
    let renumber: std::collections::HashMap<u32, u32> = live
        .iter()
        .enumerate()
        .map(|(new, &old)| (old, new as u32))
        .collect();
    let rows: Vec<Vec<u32>> = live
        .iter()
        .map(|&old| {
            (0..cols)
                .map(|col| {
                    let v = t.lookup(old, col);
                    debug_assert!(v != UNDEF, "closed table has no gaps");
                    renumber[&v]
                })
                .collect()
        })
        .collect();

    verify_closed(&rows, &words)?;

    let order = rows.len();
    let perm_gens: Vec<Permutation> = (0..n_gens)
        .map(|g| {
            let images: Vec<u32> = rows.iter().map(|row| row[2 * g]).collect();
            Permutation::new(images)
        })
        .collect::<Result<_>>()?;
    let regular = PermGroup::from_generators_with(order, perm_gens, limits)?;
    if regular.order() != order as u128 {
        return Err(Error::Internal(format!(
            "regular representation order {} differs from coset count {order}",
            regular.order()
        )));
    }

    Ok(Enumeration {
        order,
        table: CosetTable {
            generators: presentation.generators.clone(),
            rows,
        },
        regular,
    })
}

fn verify_closed(rows: &[Vec<u32>], words: &[Vec<usize>]) -> Result<()> {
    let cols = rows.first().map_or(0, Vec::len);
    for (i, row) in rows.iter().enumerate() {
        for col in (0..cols).step_by(2) {
            let fwd = row[col] as usize;
            if rows[fwd][col ^ 1] as usize != i {
                return Err(Error::Internal(
                    "generator and inverse columns are not mutually inverse".into(),
                ));
            }
        }
        for word in words {
            let mut c = i;
            for &col in word {
                c = rows[c][col] as usize;
            }
            if c != i {
                return Err(Error::Internal(
                    "relator does not trace to the starting coset".into(),
                ));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::presentation::parse_presentation;

    #[test]
    fn trivial_presentation_has_one_coset() {
        let p = parse_presentation("gens: a\nrels: a").unwrap();
        let e = todd_coxeter(&p, 100, &Limits::default()).unwrap();
        assert_eq!(e.order, 1);
    }

    #[test]
    fn sym3_presentation_enumerates_to_six() {
        let p = parse_presentation("gens: a b\nrels: a^2, b^3, (a b)^2").unwrap();
        let e = todd_coxeter(&p, 1000, &Limits::default()).unwrap();
        assert_eq!(e.order, 6);
        assert_eq!(e.regular.order(), 6);
        assert!(!e.regular.is_abelian());
    }

    #[test]
    fn twisted_presentation_orders() {
        for m in 1..=4u32 {
            let p = Presentation::binary_twisted(m);
            let e = todd_coxeter(&p, 10_000, &Limits::default()).unwrap();
            assert_eq!(e.order as u32, 3 * (1 << m), "m = {m}");
        }
    }

    #[test]
    fn quaternion_presentation() {
        // <a, b : a^4, a^2 = b^2, b^-1 a b = a^-1>
        let p = parse_presentation("gens: a b\nrels: a^4, a^2 = b^2, b^-1 a b = a^-1").unwrap();
        let e = todd_coxeter(&p, 1000, &Limits::default()).unwrap();
        assert_eq!(e.order, 8);
        // exactly one involution in Q8
        let invs = e
            .regular
            .elements(&Limits::default())
            .unwrap()
            .iter()
            .filter(|x| x.order() == 2)
            .count();
        assert_eq!(invs, 1);
    }

    #[test]
    fn coset_limit_is_inconclusive_error() {
        // free group on one generator: never closes
        let p = parse_presentation("gens: a b\nrels: a^2").unwrap();
        let err = todd_coxeter(&p, 50, &Limits::default()).unwrap_err();
        assert!(matches!(err, Error::CosetLimitExceeded { max_cosets: 50 }));
    }

    #[test]
    fn table_is_closed_and_compatible() {
        let p = parse_presentation("gens: a b\nrels: a^2, b^3, (a b)^2").unwrap();
        let e = todd_coxeter(&p, 1000, &Limits::default()).unwrap();
        // every row entry defined and generator columns invert each other
        for coset in 1..=e.table.coset_count() {
            for g in 0..2 {
                let img = e.table.apply(coset, g, false);
                assert_eq!(e.table.apply(img, g, true), coset);
            }
        }
    }
}
