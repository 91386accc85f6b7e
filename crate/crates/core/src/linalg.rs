//! Row reduction over the scalar field: rank, nullspace, span membership.
//! Exact on the rational backend; on the complex backend pivots are chosen
//! by magnitude and "zero" means within eps.

use crate::scalar::Scalar;

/// Reduce in place to row echelon form; returns the pivot column of each
/// pivot row, in order.
pub fn row_echelon(m: &mut [Vec<Scalar>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row >= rows {
            break;
        }
        // best pivot: any nonzero for rationals, max modulus for complex
        let mut best: Option<usize> = None;
        for r in row..rows {
            if !m[r][col].is_zero() {
                match (&best, &m[r][col]) {
                    (None, _) => best = Some(r),
                    (Some(b), Scalar::Complex { value, .. }) => {
                        if let Scalar::Complex { value: bv, .. } = &m[*b][col] {
                            if value.norm() > bv.norm() {
                                best = Some(r);
                            }
                        }
                    }
                    _ => {}
                }
            }
        }
        let Some(p) = best else { continue };
        m.swap(row, p);
        let inv = m[row][col].inverse().expect("pivot nonzero");
        for c in col..cols {
            m[row][c] = &m[row][c] * &inv;
        }
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..cols {
                    let delta = &m[row][c] * &factor;
                    m[r][c] = &m[r][c] - &delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<Scalar>]) -> usize {
    let mut work: Vec<Vec<Scalar>> = m.to_vec();
    row_echelon(&mut work).len()
}

/// Basis of {v : M v = 0}, one vector per free column.
pub fn nullspace(m: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    if m.is_empty() {
        return vec![];
    }
    let cols = m[0].len();
    let zero = m[0][0].zero_like();
    let one = m[0][0].one_like();
    let mut work: Vec<Vec<Scalar>> = m.to_vec();
    let pivots = row_echelon(&mut work);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![zero.clone(); cols];
            v[fc] = one.clone();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -&work[r][fc];
            }
            v
        })
        .collect()
}

/// Do the two column families span the same subspace?
pub fn same_span(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> bool {
    if a.is_empty() && b.is_empty() {
        return true;
    }
    let stacked: Vec<Vec<Scalar>> = a.iter().chain(b.iter()).cloned().collect();
    let ra = rank(a);
    let rb = rank(b);
    ra == rb && rank(&stacked) == ra
}

/// Is `v` in the span of `basis` (vectors given as rows)?
pub fn in_span(basis: &[Vec<Scalar>], v: &[Scalar]) -> bool {
    if v.iter().all(Scalar::is_zero) {
        return true;
    }
    let base_rank = rank(basis);
    let mut stacked = basis.to_vec();
    stacked.push(v.to_vec());
    rank(&stacked) == base_rank
}
