//! Minimal commutative-ring interface shared by scalars, algebra elements,
//! dense polynomials and symbolic polynomials, plus a division-free
//! determinant over any of them.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub trait RingElem: Clone + PartialEq + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Multiply by an integer.
    fn scale_int(&self, k: i64) -> Self;
    /// Exact division by a nonzero integer; panics if the ring cannot divide.
    fn div_int(&self, k: i64) -> Self;

    fn is_zero(&self) -> bool {
        *self == self.zero_like()
    }
}

impl RingElem for Scalar {
    fn zero_like(&self) -> Self {
        Scalar::zero_like(self)
    }
    fn one_like(&self) -> Self {
        Scalar::one_like(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale_int(&self, k: i64) -> Self {
        Scalar::scale_int(self, k)
    }
    fn div_int(&self, k: i64) -> Self {
        Scalar::div_int(self, k)
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

/// Division-free determinant by cofactor expansion along the first column.
/// Matrix sizes in this crate never exceed n+1 <= 8.
pub fn ring_determinant<T: RingElem>(m: &[Vec<T>]) -> Result<T> {
    let n = m.len();
    if n == 0 {
        return Err(Error::NonSquare);
    }
    for row in m {
        if row.len() != n {
            return Err(Error::NonSquare);
        }
    }
    Ok(det_rec(m))
}

fn det_rec<T: RingElem>(m: &[Vec<T>]) -> T {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc: Option<T> = None;
    for i in 0..n {
        if m[i][0].is_zero() {
            continue;
        }
        let minor: Vec<Vec<T>> = m
            .iter()
            .enumerate()
            .filter(|(r, _)| *r != i)
            .map(|(_, row)| row[1..].to_vec())
            .collect();
        let mut term = m[i][0].mul_ref(&det_rec(&minor));
        if i % 2 == 1 {
            term = term.neg_ref();
        }
        acc = Some(match acc {
            None => term,
            Some(a) => a.add_ref(&term),
        });
    }
    acc.unwrap_or_else(|| m[0][0].zero_like())
}

/// Naive signed permutation-sum determinant. Independent oracle for
/// `ring_determinant`; only used at sizes <= 4.
pub fn determinant_permutation_sum<T: RingElem>(m: &[Vec<T>]) -> Result<T> {
    let n = m.len();
    if n == 0 || m.iter().any(|r| r.len() != n) {
        return Err(Error::NonSquare);
    }
    let mut acc = m[0][0].zero_like();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let sign = permutation_sign(&perm);
        let mut term = m[0][perm[0]].clone();
        for (i, &j) in perm.iter().enumerate().skip(1) {
            term = term.mul_ref(&m[i][j]);
        }
        if sign < 0 {
            term = term.neg_ref();
        }
        acc = acc.add_ref(&term);
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(acc)
}

pub fn permutation_sign(perm: &[usize]) -> i32 {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    #[test]
    fn one_by_one() {
        let m = vec![vec![s(7)]];
        assert_eq!(ring_determinant(&m).unwrap(), s(7));
    }

    #[test]
    fn two_by_two_cofactor() {
        // [[a,1],[b,a]] -> a^2 - b with a=3, b=2
        let m = vec![vec![s(3), s(1)], vec![s(2), s(3)]];
        assert_eq!(ring_determinant(&m).unwrap(), s(7));
    }

    #[test]
    fn non_square_rejected() {
        let m = vec![vec![s(1), s(2)]];
        assert!(ring_determinant(&m).is_err());
        assert!(ring_determinant::<Scalar>(&[]).is_err());
    }

    #[test]
    fn agrees_with_permutation_sum_on_random_rationals() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for size in 1..=4usize {
            for _ in 0..20 {
                let m: Vec<Vec<Scalar>> = (0..size)
                    .map(|_| {
                        (0..size)
                            .map(|_| Scalar::ratio(rng.gen_range(-9..=9), rng.gen_range(1..=9)))
                            .collect()
                    })
                    .collect();
                assert_eq!(
                    ring_determinant(&m).unwrap(),
                    determinant_permutation_sum(&m).unwrap()
                );
            }
        }
    }
}
