//! Goeritz matrix and the Gordon–Litherland signature.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::diagram::PlanarDiagram;
use crate::error::Result;

/// Which checkerboard class of faces is shaded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shading {
    /// The class not containing face 0, which plays the unbounded face.
    Bounded,
    /// The class containing face 0.
    Unbounded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoeritzData {
    /// Color of every face; `true` is shaded.
    pub shaded: Vec<bool>,
    /// Goeritz matrix with the row and column of the first shaded face
    /// removed.
    pub matrix: Vec<Vec<i64>>,
    /// Gordon–Litherland correction: sum of the incidence numbers of the
    /// type II crossings.
    pub mu: i64,
}

impl GoeritzData {
    pub fn signature(&self) -> i64 {
        matrix_signature(&self.matrix) - self.mu
    }

    pub fn determinant(&self) -> u64 {
        let det = matrix_det(&self.matrix);
        det.abs().try_into().expect("determinant fits in u64")
    }
}

pub fn goeritz(d: &PlanarDiagram, shading: Shading) -> Result<GoeritzData> {
    let passages = d.knot_passages()?;
    let (corner_face, face_count) = d.corner_faces();

    let mut color = vec![None; face_count];
    if face_count > 0 {
        color[0] = Some(shading == Shading::Unbounded);
    } else {
        return Ok(GoeritzData { shaded: Vec::new(), matrix: Vec::new(), mu: 0 });
    }
    // Faces across an edge get opposite colors.
    let mut changed = true;
    while changed {
        changed = false;
        for faces in &corner_face {
            for i in 0..4 {
                let (a, b) = (faces[i], faces[(i + 1) % 4]);
                match (color[a], color[b]) {
                    (Some(ca), None) => {
                        color[b] = Some(!ca);
                        changed = true;
                    }
                    (None, Some(cb)) => {
                        color[a] = Some(!cb);
                        changed = true;
                    }
                    _ => {}
                }
            }
        }
    }
    let shaded: Vec<bool> = color.into_iter().map(|c| c.unwrap_or(false)).collect();
    let shaded_index: Vec<Option<usize>> = {
        let mut k = 0;
        shaded
            .iter()
            .map(|&s| {
                if s {
                    k += 1;
                    Some(k - 1)
                } else {
                    None
                }
            })
            .collect()
    };
    let m = shaded.iter().filter(|&&s| s).count();

    let mut under_in = vec![0; d.crossing_count()];
    let mut over_in = vec![0; d.crossing_count()];
    for p in passages {
        if p.over {
            over_in[p.crossing] = p.in_slot;
        } else {
            under_in[p.crossing] = p.in_slot;
        }
    }

    let mut full = vec![vec![0i64; m]; m];
    let mut mu = 0;
    for (c, x) in d.crossings().iter().enumerate() {
        let faces = corner_face[c];
        let shaded_parity = if shaded[faces[0]] { 0 } else { 1 };
        let under_slot = if x.is_over_slot(0) { 1 } else { 0 };
        // The A-smoothing merges the corners after each under slot.
        let a_merged = (under_slot + 1) % 2;
        let eta: i64 = if a_merged == shaded_parity { -1 } else { 1 };

        // The oriented smoothing merges the corner between the two incoming
        // slots with its opposite corner; type II when those are unshaded.
        let (u, o) = (under_in[c], over_in[c]);
        let between_ins = if o == (u + 3) % 4 { o } else { u };
        if between_ins % 2 != shaded_parity {
            mu += eta;
        }

        let fa = shaded_index[faces[shaded_parity]].unwrap();
        let fb = shaded_index[faces[shaded_parity + 2]].unwrap();
        if fa != fb {
            full[fa][fb] -= eta;
            full[fb][fa] -= eta;
        }
    }
    for (i, row) in full.iter_mut().enumerate() {
        let off: i64 = row.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, v)| v).sum();
        row[i] = -off;
    }
    let matrix = full.into_iter().skip(1).map(|row| row.into_iter().skip(1).collect()).collect();
    Ok(GoeritzData { shaded, matrix, mu })
}

/// Gordon–Litherland signature from the bounded shading.
pub fn signature(d: &PlanarDiagram) -> Result<i64> {
    Ok(goeritz(d, Shading::Bounded)?.signature())
}

fn to_rational(m: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    m.iter()
        .map(|row| row.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect())
        .collect()
}

/// Signature of a symmetric integer matrix by symmetric elimination.
pub(crate) fn matrix_signature(m: &[Vec<i64>]) -> i64 {
    let mut a = to_rational(m);
    let mut sig = 0;
    while !a.is_empty() {
        let n = a.len();
        let pivot = match (0..n).find(|&i| !a[i][i].is_zero()) {
            Some(p) => p,
            None => {
                // Zero diagonal: add a row/column with a nonzero off-diagonal
                // entry to make one, or stop if the matrix is zero.
                let Some((i, j)) = (0..n)
                    .flat_map(|i| (0..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[i][j].is_zero())
                else {
                    break;
                };
                let row_j = a[j].clone();
                for (x, v) in a[i].iter_mut().zip(row_j) {
                    *x += v;
                }
                for k in 0..n {
                    let v = a[k][j].clone();
                    a[k][i] += v;
                }
                i
            }
        };
        let p = a[pivot][pivot].clone();
        sig += if p.is_positive() { 1 } else { -1 };
        let mut rest = Vec::with_capacity(n - 1);
        for i in (0..n).filter(|&i| i != pivot) {
            let f = &a[i][pivot] / &p;
            let row = (0..n)
                .filter(|&j| j != pivot)
                .map(|j| &a[i][j] - &f * &a[pivot][j])
                .collect();
            rest.push(row);
        }
        a = rest;
    }
    sig
}

pub(crate) fn matrix_det(m: &[Vec<i64>]) -> BigInt {
    let mut a = to_rational(m);
    let n = a.len();
    let mut det = BigRational::from_integer(BigInt::from(1));
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigInt::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let pv = a[col][col].clone();
        det *= &pv;
        for r in col + 1..n {
            let f = &a[r][col] / &pv;
            for k in col..n {
                let v = &f * &a[col][k];
                a[r][k] -= v;
            }
        }
    }
    det.to_integer()
}
