//! Dense univariate polynomials over any `RingElem`, truncated series in
//! 1/t, the formal log-derivative expansion and the Newton transforms
//! between power sums and elementary symmetric functions.

use crate::error::{Error, Result};
use crate::ring::RingElem;
use crate::scalar::Scalar;

/// Coefficients low to high; always holds at least one coefficient so a
/// zero/one prototype of the coefficient ring is available.
#[derive(Debug, Clone, PartialEq)]
pub struct RingPoly<T: RingElem> {
    coeffs: Vec<T>,
}

pub type Polynomial = RingPoly<Scalar>;

impl<T: RingElem> RingPoly<T> {
    pub fn new(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "polynomial needs at least one coefficient");
        let mut p = RingPoly { coeffs };
        p.trim();
        p
    }

    pub fn constant(c: T) -> Self {
        RingPoly { coeffs: vec![c] }
    }

    /// c * t^k
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![c.zero_like(); k + 1];
        coeffs[k] = c;
        RingPoly::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.len() > 1 && self.coeffs.last().unwrap().is_zero() {
            self.coeffs.pop();
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.coeffs[0].zero_like())
    }

    pub fn leading(&self) -> &T {
        self.coeffs.last().unwrap()
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = self.coeffs.last().unwrap().clone();
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc.mul_ref(x).add_ref(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return RingPoly::constant(self.coeffs[0].zero_like());
        }
        let coeffs: Vec<T> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale_int(k as i64))
            .collect();
        RingPoly::new(coeffs)
    }

    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = RingPoly::constant(self.coeffs.last().unwrap().clone());
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc.mul_ref(inner).add_ref(&RingPoly::constant(c.clone()));
        }
        acc
    }

    pub fn map_coeffs<U: RingElem>(&self, f: impl Fn(&T) -> U) -> RingPoly<U> {
        RingPoly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: RingElem> RingElem for RingPoly<T> {
    fn zero_like(&self) -> Self {
        RingPoly::constant(self.coeffs[0].zero_like())
    }
    fn one_like(&self) -> Self {
        RingPoly::constant(self.coeffs[0].one_like())
    }
    fn add_ref(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = self.coeffs[0].zero_like();
        let coeffs = (0..len)
            .map(|k| {
                let a = self.coeffs.get(k).unwrap_or(&zero);
                let b = other.coeffs.get(k).unwrap_or(&zero);
                a.add_ref(b)
            })
            .collect();
        RingPoly::new(coeffs)
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }
    fn mul_ref(&self, other: &Self) -> Self {
        let zero = self.coeffs[0].zero_like();
        let mut coeffs = vec![zero; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add_ref(&a.mul_ref(b));
            }
        }
        RingPoly::new(coeffs)
    }
    fn neg_ref(&self) -> Self {
        RingPoly { coeffs: self.coeffs.iter().map(|c| c.neg_ref()).collect() }
    }
    fn scale_int(&self, k: i64) -> Self {
        RingPoly::new(self.coeffs.iter().map(|c| c.scale_int(k)).collect())
    }
    fn div_int(&self, k: i64) -> Self {
        RingPoly { coeffs: self.coeffs.iter().map(|c| c.div_int(k)).collect() }
    }
}

/// Formal series in 1/t: `coeffs[q]` multiplies `1/t^{q+1}`, for q = 0..=order.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<T: RingElem> {
    pub coeffs: Vec<T>,
    pub order: usize,
}

impl<T: RingElem> TruncatedSeries<T> {
    pub fn new(coeffs: Vec<T>, order: usize) -> Self {
        assert_eq!(coeffs.len(), order + 1);
        TruncatedSeries { coeffs, order }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let coeffs = (0..=order)
            .map(|q| self.coeffs[q].add_ref(&other.coeffs[q]))
            .collect();
        TruncatedSeries { coeffs, order }
    }

    /// Index of the first coefficient where the two series differ, up to the
    /// shared truncation order.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let order = self.order.min(other.order);
        (0..=order).find(|&q| self.coeffs[q] != other.coeffs[q])
    }
}

/// p'(t)/p(t) expanded in powers of 1/t, for monic p. The coefficients are
/// the power sums of the roots of p, generated by the Newton recurrence
/// from the elementary symmetric functions e_r = (-1)^r [t^{n-r}] p.
pub fn log_derivative_monic<T: RingElem>(p: &RingPoly<T>, order: usize) -> TruncatedSeries<T> {
    assert!(
        *p.leading() == p.leading().one_like(),
        "log_derivative_monic requires a monic polynomial"
    );
    let n = p.degree();
    if n == 0 {
        let zero = p.leading().zero_like();
        return TruncatedSeries::new(vec![zero; order + 1], order);
    }
    let e: Vec<T> = (1..=n)
        .map(|r| {
            let c = p.coeff(n - r);
            if r % 2 == 1 {
                c.neg_ref()
            } else {
                c
            }
        })
        .collect();
    let s = elementary_to_power_sums(&e, n, order.max(1));
    // series coefficient of 1/t^{q+1} is s_q, with s_0 = n
    let one = p.leading().one_like();
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(one.scale_int(n as i64));
    for q in 1..=order {
        coeffs.push(s[q - 1].clone());
    }
    TruncatedSeries::new(coeffs, order)
}

/// p'(t)/p(t) for a scalar polynomial, normalizing by the leading
/// coefficient first. Errors on a non-invertible leading coefficient.
pub fn series_log_derivative(p: &Polynomial, order: usize) -> Result<TruncatedSeries<Scalar>> {
    let lead = p.leading();
    if lead.is_zero() {
        return Err(Error::NonInvertibleLeading);
    }
    let inv = lead.inverse()?;
    let monic = p.map_coeffs(|c| c * &inv);
    Ok(log_derivative_monic(&monic, order))
}

/// Newton step: e_r = (1/r) * sum_{i=0}^{r-1} (-1)^{r+1+i} s_{r-i} e_i,  e_0 = 1.
/// Requires division by the integers 1..=len(s) (exact over rationals).
pub fn power_sums_to_elementary<T: RingElem>(s: &[T]) -> Vec<T> {
    if s.is_empty() {
        return vec![];
    }
    let one = s[0].one_like();
    let mut e: Vec<T> = vec![one];
    for r in 1..=s.len() {
        let mut acc = s[0].zero_like();
        for i in 0..r {
            let mut term = s[r - i - 1].mul_ref(&e[i]);
            if (r + 1 + i) % 2 == 1 {
                term = term.neg_ref();
            }
            acc = acc.add_ref(&term);
        }
        e.push(acc.div_int(r as i64));
    }
    e.remove(0);
    e
}

/// Inverse Newton: power sums s_1..s_count of n values whose elementary
/// symmetric functions are e_1..e_len (zero beyond).
pub fn elementary_to_power_sums<T: RingElem>(e: &[T], n: usize, count: usize) -> Vec<T> {
    if count == 0 {
        return vec![];
    }
    assert!(!e.is_empty(), "need a ring prototype");
    let zero = e[0].zero_like();
    let e_at = |r: usize| -> T {
        if r >= 1 && r <= e.len() {
            e[r - 1].clone()
        } else {
            zero.clone()
        }
    };
    let mut s: Vec<T> = Vec::with_capacity(count);
    for q in 1..=count {
        let mut acc = zero.clone();
        let upper = q.min(n).min(e.len() + 1);
        for i in 1..=upper.min(q.saturating_sub(1)) {
            let mut term = e_at(i).mul_ref(&s[q - i - 1]);
            if i % 2 == 0 {
                term = term.neg_ref();
            }
            acc = acc.add_ref(&term);
        }
        if q <= n {
            let mut lead = e_at(q).scale_int(q as i64);
            if q % 2 == 0 {
                lead = lead.neg_ref();
            }
            acc = acc.add_ref(&lead);
        }
        s.push(acc);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    fn poly(v: &[i64]) -> Polynomial {
        RingPoly::new(v.iter().map(|&c| s(c)).collect())
    }

    #[test]
    fn degree_and_trim() {
        let p = poly(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), 1);
        assert_eq!(poly(&[0]).degree(), 0);
    }

    #[test]
    fn log_derivative_linear_factor() {
        // p = t - 3: expansion 1/t + 3/t^2 + 9/t^3 + 27/t^4
        let p = poly(&[-3, 1]);
        let series = series_log_derivative(&p, 3).unwrap();
        assert_eq!(series.coeffs, vec![s(1), s(3), s(9), s(27)]);
    }

    #[test]
    fn log_derivative_pure_power() {
        // p = t^4: n/t and nothing else
        let p = RingPoly::monomial(s(1), 4);
        let series = series_log_derivative(&p, 4).unwrap();
        assert_eq!(series.coeffs, vec![s(4), s(0), s(0), s(0), s(0)]);
    }

    #[test]
    fn log_derivative_two_roots_gives_power_sums() {
        // p = (t-1)(t-2): coefficients are 2, 3, 5, 9, 17 (1^q + 2^q)
        let p = poly(&[2, -3, 1]);
        let series = series_log_derivative(&p, 4).unwrap();
        assert_eq!(series.coeffs, vec![s(2), s(3), s(5), s(9), s(17)]);
    }

    #[test]
    fn log_derivative_zero_leading_rejected() {
        let p = RingPoly { coeffs: vec![s(1), s(0)] };
        assert!(series_log_derivative(&p, 2).is_err());
    }

    #[test]
    fn newton_round_trip() {
        // roots {1, 2, 3}: s = (6, 14, 36), e = (6, 11, 6)
        let sums = vec![s(6), s(14), s(36)];
        let e = power_sums_to_elementary(&sums);
        assert_eq!(e, vec![s(6), s(11), s(6)]);
        let back = elementary_to_power_sums(&e, 3, 5);
        assert_eq!(back[..3], sums[..]);
        // s_4 = 1 + 16 + 81, s_5 = 1 + 32 + 243
        assert_eq!(back[3], s(98));
        assert_eq!(back[4], s(276));
    }

    #[test]
    fn composition() {
        // (t^2 + 1) o (t - 1) = t^2 - 2t + 2
        let outer = poly(&[1, 0, 1]);
        let inner = poly(&[-1, 1]);
        assert_eq!(outer.compose(&inner), poly(&[2, -2, 1]));
    }
}
