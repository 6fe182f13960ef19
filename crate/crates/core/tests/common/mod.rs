//! Test oracles and fixtures shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

use cca_core::corpus;
use cca_core::{parse_dt, realize_dt, KnotTable, LaurentPolynomial, OverPair, PlanarDiagram};

pub fn knot(dt: &str) -> PlanarDiagram {
    realize_dt(&parse_dt(dt).unwrap()).unwrap()
}

/// The 20 corpus codes, realized.
pub fn corpus_diagrams() -> Vec<(&'static str, PlanarDiagram)> {
    corpus::cca_rows().map(|r| (r.name, knot(r.dt))).collect()
}

/// Realized census records with at most `max_n` crossings.
pub fn census_diagrams(max_n: usize) -> Vec<(String, bool, PlanarDiagram)> {
    KnotTable::bundled()
        .records()
        .iter()
        .filter(|r| r.crossing_number <= max_n)
        .map(|r| (r.name.clone(), r.alternating, realize_dt(&r.dt).unwrap()))
        .collect()
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Kauffman bracket as the plain sum over all 2^n states:
/// `sum A^(a - b) d^(loops - 1)`, `d = -A^2 - A^-2`.
///
/// With `u` an under slot, the A-smoothing joins ports (u, u+1) and
/// (u+2, u+3): the arcs hug the two B-regions.
pub fn naive_bracket(d: &PlanarDiagram) -> LaurentPolynomial {
    let xs = d.crossings();
    let n = xs.len();
    if n == 0 {
        return LaurentPolynomial::one();
    }
    let mut ids: HashMap<u32, usize> = HashMap::new();
    for x in xs {
        for &e in &x.ports {
            let next = ids.len();
            ids.entry(e).or_insert(next);
        }
    }
    let delta = LaurentPolynomial::from_terms([(2, -1), (-2, -1)]);
    let mut total = LaurentPolynomial::zero();
    for state in 0u32..(1 << n) {
        let mut parent: Vec<usize> = (0..ids.len()).collect();
        let mut a_minus_b = 0i32;
        for (c, x) in xs.iter().enumerate() {
            let u = match x.over {
                OverPair::Even => 1,
                OverPair::Odd => 0,
            };
            let is_a = state >> c & 1 == 0;
            let pairs = if is_a {
                a_minus_b += 1;
                [(u, u + 1), ((u + 2) % 4, (u + 3) % 4)]
            } else {
                a_minus_b -= 1;
                [(u, (u + 3) % 4), (u + 1, (u + 2) % 4)]
            };
            for (p, q) in pairs {
                let (a, b) = (find(&mut parent, ids[&x.ports[p]]), find(&mut parent, ids[&x.ports[q]]));
                parent[a] = b;
            }
        }
        let loops = (0..ids.len()).filter(|&i| find(&mut parent, i) == i).count();
        let mut term = LaurentPolynomial::monomial(1, a_minus_b);
        for _ in 1..loops {
            term = &term * &delta;
        }
        total = &total + &term;
    }
    total
}

/// A crossing is nugatory when one face meets it at two corners.
pub fn has_nugatory_crossing(d: &PlanarDiagram) -> bool {
    let mut corner_face = vec![[usize::MAX; 4]; d.crossing_count()];
    for (f, face) in d.faces().iter().enumerate() {
        for &(c, i) in face {
            corner_face[c][i] = f;
        }
    }
    corner_face.iter().any(|fs| (0..4).any(|i| (i + 1..4).any(|j| fs[i] == fs[j])))
}

/// All compositions of `n` into positive parts.
pub fn compositions(n: i32) -> Vec<Vec<i32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    (1..=n)
        .flat_map(|first| {
            compositions(n - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}
