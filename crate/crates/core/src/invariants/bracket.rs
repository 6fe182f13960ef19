//! Kauffman bracket by frontier dynamic programming.
//!
//! Crossings are absorbed one at a time. A state records how the edges that
//! leave the absorbed region ("frontier" edges) are paired up by the arcs of
//! the smoothings chosen so far; states with equal pairings are merged and
//! their polynomials summed. Closed loops contribute a factor `d = -A^2 - A^-2`
//! as they appear; the single surplus factor is divided out at the end.

use std::collections::HashMap;

use crate::diagram::{OverPair, PlanarDiagram};
use crate::error::{Error, Result};
use crate::poly::LaurentPolynomial;

/// Default crossing-count guard for [`kauffman_bracket`].
pub const BRACKET_LIMIT: usize = 16;

pub fn kauffman_bracket(d: &PlanarDiagram) -> Result<LaurentPolynomial> {
    kauffman_bracket_with_limit(d, BRACKET_LIMIT)
}

fn loop_factor() -> LaurentPolynomial {
    LaurentPolynomial::from_terms([(2, -1), (-2, -1)])
}

pub fn kauffman_bracket_with_limit(d: &PlanarDiagram, limit: usize) -> Result<LaurentPolynomial> {
    let n = d.crossing_count();
    if n > limit {
        return Err(Error::TooManyCrossings { n, limit });
    }
    if n == 0 {
        return Ok(LaurentPolynomial::one());
    }
    let delta = loop_factor();
    let mut frontier: Vec<u32> = Vec::new();
    let mut states: HashMap<Vec<u8>, LaurentPolynomial> = HashMap::new();
    states.insert(Vec::new(), LaurentPolynomial::one());

    for c in absorption_order(d) {
        let x = d.crossings()[c];
        let step = Step::new(&frontier, x.ports);
        let under = match x.over {
            OverPair::Even => 1,
            OverPair::Odd => 0,
        };
        // A-smoothing joins (u, u+1) and (u+2, u+3); B joins (u, u+3) and (u+1, u+2).
        let smoothings = [
            ([(under, under + 1), ((under + 2) % 4, (under + 3) % 4)], 1),
            ([(under, (under + 3) % 4), (under + 1, (under + 2) % 4)], -1),
        ];
        let mut next: HashMap<Vec<u8>, LaurentPolynomial> = HashMap::new();
        for (matching, poly) in &states {
            for (arcs, exp) in &smoothings {
                let (key, loops) = step.apply(matching, arcs);
                let mut term = poly.shift(*exp);
                for _ in 0..loops {
                    term = &term * &delta;
                }
                let slot = next.entry(key).or_default();
                *slot = &*slot + &term;
            }
        }
        states = next;
        frontier = step.new_frontier;
    }
    debug_assert!(frontier.is_empty());
    let total = states.remove(&Vec::new()).unwrap_or_default();
    Ok(total.div_exact(&delta).expect("every state closes at least one loop"))
}

/// Greedy order keeping the frontier small: next is the crossing with the
/// most edges into the absorbed set.
fn absorption_order(d: &PlanarDiagram) -> Vec<usize> {
    let partners = d.partners();
    let n = d.crossing_count();
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let best = (0..n)
            .filter(|&c| !done[c])
            .max_by_key(|&c| {
                let links = partners[c].iter().filter(|&&(c2, _)| done[c2]).count();
                (links, std::cmp::Reverse(c))
            })
            .unwrap();
        done[best] = true;
        order.push(best);
    }
    order
}

/// Absorption of one crossing, independent of the state it is applied to.
struct Step {
    /// Node ids: old frontier edges first, then edges new at this crossing.
    node_count: usize,
    /// (node, end) occupied by each port slot.
    slot_end: [(usize, usize); 4],
    /// Dangling ends, in new-frontier order.
    dangling: Vec<(usize, usize)>,
    new_frontier: Vec<u32>,
}

impl Step {
    fn new(frontier: &[u32], ports: [u32; 4]) -> Self {
        let old_len = frontier.len();
        let mut extra: Vec<u32> = Vec::new();
        let mut slot_end = [(0, 0); 4];
        let mut used_end: HashMap<usize, usize> = HashMap::new();
        for (s, &e) in ports.iter().enumerate() {
            let node = match frontier.iter().position(|&f| f == e) {
                Some(i) => i,
                None => match extra.iter().position(|&f| f == e) {
                    Some(j) => old_len + j,
                    None => {
                        extra.push(e);
                        old_len + extra.len() - 1
                    }
                },
            };
            // Old frontier edges use end 0 for their absorbed side.
            let end = if node < old_len {
                1
            } else {
                let k = used_end.entry(node).or_insert(0);
                *k += 1;
                *k - 1
            };
            slot_end[s] = (node, end);
        }
        let node_count = old_len + extra.len();
        let at_crossing = |node: usize| slot_end.iter().filter(|&&(v, _)| v == node).count();

        let mut entries: Vec<(u32, (usize, usize))> = Vec::new();
        for (i, &e) in frontier.iter().enumerate() {
            if at_crossing(i) == 0 {
                entries.push((e, (i, 1)));
            }
        }
        for (j, &e) in extra.iter().enumerate() {
            if at_crossing(old_len + j) == 1 {
                entries.push((e, (old_len + j, 1)));
            }
        }
        entries.sort_unstable_by_key(|&(e, _)| e);
        Self {
            node_count,
            slot_end,
            dangling: entries.iter().map(|&(_, end)| end).collect(),
            new_frontier: entries.into_iter().map(|(e, _)| e).collect(),
        }
    }

    /// New pairing and number of closed loops for one state and smoothing.
    fn apply(&self, matching: &[u8], arcs: &[(usize, usize); 2]) -> (Vec<u8>, usize) {
        const NONE: (usize, usize) = (usize::MAX, 0);
        let mut link = vec![[NONE; 2]; self.node_count];
        for (i, &m) in matching.iter().enumerate() {
            link[i][0] = (m as usize, 0);
        }
        for &(a, b) in arcs {
            let (ea, eb) = (self.slot_end[a], self.slot_end[b]);
            link[ea.0][ea.1] = eb;
            link[eb.0][eb.1] = ea;
        }
        let mut seen = vec![false; self.node_count];
        let mut dangling_index: HashMap<(usize, usize), u8> = HashMap::new();
        for (k, &end) in self.dangling.iter().enumerate() {
            dangling_index.insert(end, k as u8);
        }
        let mut key = vec![0u8; self.dangling.len()];
        for (k, &(v0, x0)) in self.dangling.iter().enumerate() {
            if seen[v0] {
                continue;
            }
            let (mut v, mut x) = (v0, x0);
            loop {
                seen[v] = true;
                let out = link[v][1 - x];
                if let Some(&j) = dangling_index.get(&(v, 1 - x)) {
                    key[k] = j;
                    key[j as usize] = k as u8;
                    break;
                }
                debug_assert!(out != NONE);
                (v, x) = out;
            }
        }
        let mut loops = 0;
        for v0 in 0..self.node_count {
            if seen[v0] {
                continue;
            }
            loops += 1;
            let (mut v, mut x) = (v0, 0);
            while !seen[v] {
                seen[v] = true;
                (v, x) = link[v][1 - x];
            }
        }
        (key, loops)
    }
}
