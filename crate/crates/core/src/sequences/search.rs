//! Exhaustive backtracking search for `B_t[l](G)` sequences.

use crate::error::{Error, Result};
use crate::sphere::{sphere_size, CodeParams};

use super::bh::BhSequence;
use super::group::{AbelianGroup, GroupElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Largest group order the search will accept.
    pub max_group_order: u128,
    /// Candidate placements tried before giving up.
    pub max_nodes: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { max_group_order: 1 << 20, max_nodes: 50_000_000 }
    }
}

/// The lexicographically first nondecreasing `B_t[l](G)` sequence of
/// length `n`, or `None` if there is none.
///
/// Elements are walked in coordinate-lexicographic order; zero is never a
/// candidate since it collides with the empty sum. A prefix is extended
/// only while all of its sums stay distinct, which is necessary for every
/// extension.
pub fn search_bh(
    group: &AbelianGroup,
    n: usize,
    t: usize,
    ell: u64,
    limits: SearchLimits,
) -> Result<Option<BhSequence>> {
    let params = CodeParams::new(n, t, ell)?;
    params.require_correcting()?;
    let order = group.order();
    if order > limits.max_group_order {
        return Err(Error::EnumerationCap { needed: order, cap: limits.max_group_order });
    }
    if sphere_size(&params)? > order {
        return Ok(None);
    }
    let mut search = Search::new(group, t, ell, limits);
    let found = search.run(n)?;
    match found {
        None => Ok(None),
        Some(indices) => {
            let elements: Vec<GroupElement> = indices.iter().map(|&i| group.element_at(i as u128)).collect();
            Ok(Some(BhSequence::new(group.clone(), elements, t, ell)?))
        }
    }
}

struct Search<'a> {
    group: &'a AbelianGroup,
    t: usize,
    ell: u64,
    limits: SearchLimits,
    nodes: u64,
    occupied: Vec<bool>,
    /// Sums of the current prefix, bucketed by Hamming weight `0..=t`.
    by_weight: Vec<Vec<u64>>,
    chosen: Vec<u64>,
}

impl<'a> Search<'a> {
    fn new(group: &'a AbelianGroup, t: usize, ell: u64, limits: SearchLimits) -> Self {
        let mut by_weight = vec![Vec::new(); t + 1];
        by_weight[0].push(0);
        let mut occupied = vec![false; group.order() as usize];
        occupied[0] = true;
        Search { group, t, ell, limits, nodes: 0, occupied, by_weight, chosen: Vec::new() }
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        let g = self.group;
        if g.is_cyclic() {
            let m = g.order() as u64;
            let s = a + b;
            return if s >= m { s - m } else { s };
        }
        let sum = g.add(&g.element_at(a as u128), &g.element_at(b as u128));
        g.index_of(&sum) as u64
    }

    fn run(&mut self, n: usize) -> Result<Option<Vec<u64>>> {
        if self.extend(n, 1)? {
            Ok(Some(self.chosen.clone()))
        } else {
            Ok(None)
        }
    }

    fn extend(&mut self, n: usize, first_candidate: u64) -> Result<bool> {
        if self.chosen.len() == n {
            return Ok(true);
        }
        let order = self.group.order() as u64;
        for c in first_candidate..order {
            self.nodes += 1;
            if self.nodes > self.limits.max_nodes {
                return Err(Error::SearchCap { nodes: self.limits.max_nodes });
            }
            let Some(added) = self.try_place(c) else { continue };
            self.chosen.push(c);
            if self.extend(n, c)? {
                return Ok(true);
            }
            self.chosen.pop();
            self.remove(&added);
        }
        Ok(false)
    }

    /// Places `c` after the current prefix if no new sum collides. Returns
    /// the added `(weight, sum)` pairs for rollback.
    fn try_place(&mut self, c: u64) -> Option<Vec<(usize, u64)>> {
        let multiples: Vec<u64> = {
            let mut v = Vec::with_capacity(self.ell as usize);
            let mut acc = 0u64;
            for _ in 0..self.ell {
                acc = self.add(acc, c);
                v.push(acc);
            }
            v
        };
        let mut added: Vec<(usize, u64)> = Vec::new();
        for w in 0..self.t {
            for i in 0..self.by_weight[w].len() {
                let s = self.by_weight[w][i];
                for &m in &multiples {
                    let x = self.add(s, m);
                    if self.occupied[x as usize] {
                        for &(_, y) in &added {
                            self.occupied[y as usize] = false;
                        }
                        return None;
                    }
                    self.occupied[x as usize] = true;
                    added.push((w + 1, x));
                }
            }
        }
        for &(w, x) in &added {
            self.by_weight[w].push(x);
        }
        Some(added)
    }

    fn remove(&mut self, added: &[(usize, u64)]) {
        for &(w, x) in added.iter().rev() {
            self.occupied[x as usize] = false;
            let popped = self.by_weight[w].pop();
            debug_assert_eq!(popped, Some(x));
        }
    }
}
