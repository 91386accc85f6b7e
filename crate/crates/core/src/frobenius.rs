//! The Phi_n engines and everything built directly on them: the Frobenius
//! condition, the scalar-target unit range, the characteristic polynomial
//! with its series identity, and the Gugnin kernel.
//!
//! Three equivalent definitions of Phi_n are implemented: the signed sum
//! over cycle decompositions, the inductive definition, and (on the
//! diagonal) a determinant. They are cross-checked in the test suites.

use itertools::Itertools;

use crate::algebra::{AlgebraElement, AlgebraOps, LinearMap};
use crate::error::{Error, Result};
use crate::linalg::nullspace;
use crate::poly::{log_derivative_monic, RingPoly, TruncatedSeries};
use crate::ring::{permutation_sign, ring_determinant, RingElem};
use crate::sweep;

/// Enumeration caps. Verification cost grows like C(d+n, n+1), so the caps
/// keep desk-scale runs bounded; all are overridable.
#[derive(Debug, Clone, Copy)]
pub struct Caps {
    pub max_n: usize,
    pub max_dim: usize,
    pub max_tuples: usize,
    pub cycle_cap: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_n: 6, max_dim: 8, max_tuples: 200_000, cycle_cap: 7 }
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Phi_n(f)(a_1..a_n) as the signed sum over all permutations, one term per
/// cycle decomposition. Hard-capped: n! terms.
pub fn phi_cycle_sum(f: &LinearMap, args: &[AlgebraElement]) -> Result<AlgebraElement> {
    let n = args.len();
    let caps = Caps::default();
    if n > caps.cycle_cap {
        return Err(Error::CycleCapExceeded(n));
    }
    if n == 0 {
        return Ok(f.codomain().unit_element());
    }
    let mut acc = f.codomain().zero_element();
    for perm in (0..n).permutations(n) {
        let sign = permutation_sign(&perm);
        let mut term = f.codomain().unit_element();
        for cycle in cycles_of(&perm) {
            let mut prod = args[cycle[0]].clone();
            for &i in &cycle[1..] {
                prod = prod.mul(&args[i])?;
            }
            term = term.mul(&f.apply(&prod)?)?;
        }
        if sign < 0 {
            term = term.neg();
        }
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

fn cycles_of(perm: &[usize]) -> Vec<Vec<usize>> {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut next = perm[start];
        while next != start {
            seen[next] = true;
            cycle.push(next);
            next = perm[next];
        }
        cycles.push(cycle);
    }
    cycles
}

/// Phi_n(f) by the inductive definition:
/// Phi_{n+1}(a_0..a_n) = f(a_0) Phi_n(a_1..a_n) - sum_r Phi_n(a_1,..,a_0*a_r,..,a_n).
pub fn phi_recursive(f: &LinearMap, args: &[AlgebraElement]) -> Result<AlgebraElement> {
    if args.is_empty() {
        return Ok(f.codomain().unit_element());
    }
    if args.len() == 1 {
        return f.apply(&args[0]);
    }
    let head = &args[0];
    let tail = &args[1..];
    let mut acc = f.apply(head)?.mul(&phi_recursive(f, tail)?)?;
    for r in 0..tail.len() {
        let mut modified = tail.to_vec();
        modified[r] = head.mul(&tail[r])?;
        acc = acc.sub(&phi_recursive(f, &modified)?)?;
    }
    Ok(acc)
}

/// Diagonal value Phi_n(f)(a,..,a) as the determinant of the n x n matrix
/// with rows (f(a^r), f(a^{r-1}), ..., f(a), r, 0, ..., 0).
pub fn phi_diagonal_determinant(f: &LinearMap, n: usize, a: &AlgebraElement) -> Result<AlgebraElement> {
    if n == 0 {
        return Ok(f.codomain().unit_element());
    }
    let powers: Vec<AlgebraElement> = (1..=n).map(|k| f.apply(&a.pow(k))).collect::<Result<_>>()?;
    let zero = f.codomain().zero_element();
    let unit = f.codomain().unit_element();
    let m: Vec<Vec<AlgebraElement>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if j <= i {
                        powers[i - j].clone()
                    } else if j == i + 1 {
                        unit.scale_int((i + 1) as i64)
                    } else {
                        zero.clone()
                    }
                })
                .collect()
        })
        .collect();
    ring_determinant(&m)
}

#[derive(Debug, Clone)]
pub struct FrobeniusCandidate {
    pub map: LinearMap,
    pub claimed_n: usize,
}

/// Outcome of the Definition 1.1 check: f(1) = n and Phi_{n+1}(f) == 0.
#[derive(Debug, Clone, serde::Serialize)]
pub struct FrobeniusReport {
    pub n: usize,
    pub unit_ok: bool,
    /// Lexicographically first multiset of basis indices on which
    /// Phi_{n+1}(f) fails to vanish, if any.
    pub vanishing_witness: Option<Vec<usize>>,
    pub witness_value: Option<String>,
}

impl FrobeniusReport {
    pub fn pass(&self) -> bool {
        self.unit_ok && self.vanishing_witness.is_none()
    }
}

/// Checks the two Frobenius conditions. The vanishing of Phi_{n+1}(f) is
/// tested on every multiset of n+1 basis vectors; by multilinearity and
/// symmetry of Phi_{n+1} this is equivalent to vanishing everywhere.
pub fn is_frobenius(f: &LinearMap, n: usize, caps: &Caps) -> Result<FrobeniusReport> {
    let d = f.domain().dim();
    if n > caps.max_n {
        return Err(Error::CapExceeded { what: "frobenius order n", size: n, cap: caps.max_n });
    }
    if d > caps.max_dim {
        return Err(Error::CapExceeded { what: "algebra dimension", size: d, cap: caps.max_dim });
    }
    let tuple_count = binomial(d + n, n + 1);
    if tuple_count > caps.max_tuples {
        return Err(Error::CapExceeded { what: "basis multisets", size: tuple_count, cap: caps.max_tuples });
    }

    let unit_image = f.apply(&f.domain().unit_element())?;
    let unit_ok = unit_image == f.codomain().unit_element().scale_int(n as i64);

    let tuples: Vec<Vec<usize>> = (0..d).combinations_with_replacement(n + 1).collect();
    let basis: Vec<AlgebraElement> = (0..d).map(|i| f.domain().basis_element(i)).collect();
    let values: Vec<AlgebraElement> = sweep::map_items(&tuples, |tuple| {
        let args: Vec<AlgebraElement> = tuple.iter().map(|&i| basis[i].clone()).collect();
        phi_recursive(f, &args).expect("domain elements")
    });
    let failing = values.iter().position(|v| !v.is_zero());
    let (vanishing_witness, witness_value) = match failing {
        Some(idx) => (Some(tuples[idx].clone()), Some(values[idx].to_string())),
        None => (None, None),
    };
    Ok(FrobeniusReport { n, unit_ok, vanishing_witness, witness_value })
}

pub fn check_candidate(c: &FrobeniusCandidate, caps: &Caps) -> Result<FrobeniusReport> {
    is_frobenius(&c.map, c.claimed_n, caps)
}

/// For a map into the scalar algebra with Phi_{n+1}(f) == 0 already
/// verified, f(1) must be an integer in {0, ..., n}.
pub fn scalar_target_unit_range(f: &LinearMap, n: usize) -> Result<u64> {
    if f.codomain().dim() != 1 {
        return Err(Error::Invalid("codomain is not the scalar algebra".into()));
    }
    let value = f.apply(&f.domain().unit_element())?;
    let coord = &value.coords()[0];
    let tol = f.codomain().eps() * 10.0;
    let int = coord
        .to_integer(tol)
        .ok_or_else(|| Error::Invalid(format!("f(1) = {coord} is not an integer")))?;
    let int: i64 = i64::try_from(&int).map_err(|_| Error::Invalid("f(1) out of i64 range".into()))?;
    if int < 0 || int as usize > n {
        return Err(Error::Invalid(format!("f(1) = {int} outside {{0,..,{n}}}")));
    }
    Ok(int as u64)
}

/// The characteristic polynomial of `a` under `f`: the determinant d(t) of
/// the (n+1) x (n+1) matrix with the f(a^k) rows, superdiagonal 1..n and
/// last row t^n, ..., t, 1, together with the monic normalization
/// p(t) = sum_r (-1)^r Phi_r(f)(a)/r! t^{n-r}. The relation
/// d(t) = (-1)^n n! p(t) is verified on construction.
#[derive(Debug, Clone)]
pub struct CharPoly {
    pub det: RingPoly<AlgebraElement>,
    pub monic: RingPoly<AlgebraElement>,
    /// Observed ratio det/monic as a signed integer multiple of the unit.
    pub ratio: i64,
}

pub fn char_poly(f: &LinearMap, n: usize, a: &AlgebraElement) -> Result<CharPoly> {
    let b = f.codomain();
    let unit = b.unit_element();
    let zero = b.zero_element();
    let const_poly = |e: AlgebraElement| RingPoly::constant(e);
    let powers: Vec<AlgebraElement> = (1..=n).map(|k| f.apply(&a.pow(k))).collect::<Result<_>>()?;

    let size = n + 1;
    let mut m: Vec<Vec<RingPoly<AlgebraElement>>> = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = Vec::with_capacity(size);
        for j in 0..size {
            if j <= i {
                row.push(const_poly(powers[i - j].clone()));
            } else if j == i + 1 {
                row.push(const_poly(unit.scale_int((i + 1) as i64)));
            } else {
                row.push(const_poly(zero.clone()));
            }
        }
        m.push(row);
    }
    let t_row: Vec<RingPoly<AlgebraElement>> =
        (0..size).map(|j| RingPoly::monomial(unit.clone(), n - j)).collect();
    m.push(t_row);

    let det = ring_determinant(&m)?;

    // monic normalization from the Phi_r diagonal values
    let mut factorial: i64 = 1;
    let mut coeffs = vec![zero.clone(); n + 1];
    coeffs[n] = unit.clone();
    for r in 1..=n {
        factorial *= r as i64;
        let mut c = phi_diagonal_determinant(f, r, a)?.div_int(factorial);
        if r % 2 == 1 {
            c = c.neg();
        }
        coeffs[n - r] = c;
    }
    let monic = RingPoly::new(coeffs);

    let sign = if n % 2 == 0 { 1 } else { -1 };
    let ratio = sign * factorial.max(1);
    if det != monic.scale_int(ratio) {
        return Err(Error::Invalid(format!(
            "characteristic determinant is not {ratio} times the monic normalization"
        )));
    }
    Ok(CharPoly { det, monic, ratio })
}

/// Proposition-1.7 style identity: the power series sum_q f(a^q)/t^{q+1}
/// must equal d/dt log p_a(t) coefficientwise up to the truncation order.
/// Returns the index of the first differing coefficient, or None on pass.
pub fn series_identity_check(
    f: &LinearMap,
    n: usize,
    a: &AlgebraElement,
    order: usize,
) -> Result<Option<usize>> {
    let cp = char_poly(f, n, a)?;
    let rhs = log_derivative_monic(&cp.monic, order);
    let lhs_coeffs: Vec<AlgebraElement> =
        (0..=order).map(|q| f.apply(&a.pow(q))).collect::<Result<_>>()?;
    let lhs = TruncatedSeries::new(lhs_coeffs, order);
    Ok(lhs.first_difference(&rhs))
}

/// Gugnin kernel K_f = {a : f(a x) = 0 for all x}, computed as the exact
/// nullspace of the stacked system f(a * e_j) = 0.
pub fn gugnin_kernel(f: &LinearMap) -> Result<Vec<AlgebraElement>> {
    let d = f.domain().dim();
    let cod = f.codomain().dim();
    let mut rows: Vec<Vec<crate::scalar::Scalar>> = Vec::with_capacity(d * cod);
    // column i of the block for basis vector j: f(e_i * e_j)
    for j in 0..d {
        let ej = f.domain().basis_element(j);
        let images: Vec<AlgebraElement> = (0..d)
            .map(|i| f.apply(&f.domain().basis_element(i).mul(&ej)?))
            .collect::<Result<_>>()?;
        for r in 0..cod {
            rows.push(images.iter().map(|img| img.coords()[r].clone()).collect());
        }
    }
    let ns = nullspace(&rows);
    ns.into_iter().map(|coords| f.domain().element(coords)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::CommutativeAlgebra;
    use crate::scalar::{Backend, Scalar};
    use rand::{Rng, SeedableRng};

    fn fa(labels: &[&str]) -> crate::algebra::AlgebraRef {
        CommutativeAlgebra::function_algebra(labels.to_vec(), Backend::Rational, 0.0).unwrap()
    }

    /// Sum of evaluation homomorphisms over a multiset of points.
    fn sum_of_evaluations(x: &crate::algebra::AlgebraRef, mults: &[i64]) -> LinearMap {
        let scalars = CommutativeAlgebra::scalars(Backend::Rational, 0.0);
        let matrix = vec![mults.iter().map(|&m| Scalar::from_int(m)).collect()];
        LinearMap::new(x.clone(), scalars, matrix).unwrap()
    }

    #[test]
    fn phi_one_is_f() {
        let a = fa(&["p", "q"]);
        let f = LinearMap::identity(&a).scale(&Scalar::from_int(3));
        let v = a.element_from_ints(&[2, 5]);
        assert_eq!(phi_cycle_sum(&f, &[v.clone()]).unwrap(), f.apply(&v).unwrap());
    }

    #[test]
    fn phi_two_formula() {
        // Phi_2(f)(a,b) = f(a)f(b) - f(ab)
        let alg = fa(&["p", "q", "r"]);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let matrix: Vec<Vec<Scalar>> = (0..3)
                .map(|_| (0..3).map(|_| Scalar::from_int(rng.gen_range(-4..=4))).collect())
                .collect();
            let f = LinearMap::new(alg.clone(), alg.clone(), matrix).unwrap();
            let a = alg.element_from_ints(&[rng.gen_range(-3..=3), rng.gen_range(-3..=3), 1]);
            let b = alg.element_from_ints(&[1, rng.gen_range(-3..=3), rng.gen_range(-3..=3)]);
            let expect = f
                .apply(&a)
                .unwrap()
                .mul(&f.apply(&b).unwrap())
                .unwrap()
                .sub(&f.apply(&a.mul(&b).unwrap()).unwrap())
                .unwrap();
            assert_eq!(phi_cycle_sum(&f, &[a.clone(), b.clone()]).unwrap(), expect);
            assert_eq!(phi_recursive(&f, &[a, b]).unwrap(), expect);
        }
    }

    #[test]
    fn engines_agree_on_random_tuples() {
        let alg = fa(&["p", "q"]);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in 1..=4usize {
            for _ in 0..5 {
                let matrix: Vec<Vec<Scalar>> = (0..2)
                    .map(|_| (0..2).map(|_| Scalar::ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3))).collect())
                    .collect();
                let f = LinearMap::new(alg.clone(), alg.clone(), matrix).unwrap();
                let args: Vec<_> = (0..n)
                    .map(|_| alg.element_from_ints(&[rng.gen_range(-3..=3), rng.gen_range(-3..=3)]))
                    .collect();
                assert_eq!(phi_cycle_sum(&f, &args).unwrap(), phi_recursive(&f, &args).unwrap());
                let a = &args[0];
                let diag = vec![a.clone(); n];
                assert_eq!(
                    phi_recursive(&f, &diag).unwrap(),
                    phi_diagonal_determinant(&f, n, a).unwrap()
                );
            }
        }
    }

    #[test]
    fn cycle_cap() {
        let a = fa(&["p"]);
        let f = LinearMap::identity(&a);
        let args = vec![a.unit_element(); 8];
        assert!(matches!(phi_cycle_sum(&f, &args), Err(Error::CycleCapExceeded(8))));
    }

    #[test]
    fn sum_of_evaluations_is_frobenius() {
        let x = fa(&["x1", "x2", "x3"]);
        let f = sum_of_evaluations(&x, &[1, 1, 1]);
        let report = is_frobenius(&f, 3, &Caps::default()).unwrap();
        assert!(report.pass(), "{report:?}");
        // and it is not Frobenius at the wrong order
        let wrong = is_frobenius(&f, 2, &Caps::default()).unwrap();
        assert!(!wrong.pass());
    }

    #[test]
    fn ring_hom_claimed_at_two_fails_unit_check() {
        let x = fa(&["x1", "x2"]);
        let f = sum_of_evaluations(&x, &[1, 0]);
        let report = is_frobenius(&f, 2, &Caps::default()).unwrap();
        assert!(!report.unit_ok);
    }

    #[test]
    fn n_times_ring_hom_is_frobenius() {
        let x = fa(&["x1", "x2"]);
        let f = LinearMap::identity(&x).scale(&Scalar::from_int(3));
        assert!(is_frobenius(&f, 3, &Caps::default()).unwrap().pass());
    }

    #[test]
    fn lemma_1_3_for_arbitrary_linear_maps() {
        // Phi_{n+1}(f)(a,1,..,1) = f(a) (f(1)-1)(f(1)-2)...(f(1)-n)
        let alg = fa(&["p", "q"]);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        for n in 1..=3usize {
            for _ in 0..5 {
                let matrix: Vec<Vec<Scalar>> = (0..2)
                    .map(|_| (0..2).map(|_| Scalar::from_int(rng.gen_range(-4..=4))).collect())
                    .collect();
                let f = LinearMap::new(alg.clone(), alg.clone(), matrix).unwrap();
                let a = alg.element_from_ints(&[rng.gen_range(-3..=3), rng.gen_range(-3..=3)]);
                let mut args = vec![a.clone()];
                args.extend(std::iter::repeat(alg.unit_element()).take(n));
                let lhs = phi_recursive(&f, &args).unwrap();
                let f1 = f.apply(&alg.unit_element()).unwrap();
                let mut rhs = f.apply(&a).unwrap();
                for j in 1..=n {
                    rhs = rhs.mul(&f1.sub(&alg.unit_element().scale_int(j as i64)).unwrap()).unwrap();
                }
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn scalar_target_range() {
        let x = fa(&["x1", "x2", "x3"]);
        let f = sum_of_evaluations(&x, &[1, 1, 0]);
        assert_eq!(scalar_target_unit_range(&f, 3).unwrap(), 2);
        let zero = sum_of_evaluations(&x, &[0, 0, 0]);
        assert_eq!(scalar_target_unit_range(&zero, 3).unwrap(), 0);
        // Prop 1.5: f(1) = k implies Phi_{k+1}(f) == 0 as well
        assert!(is_frobenius(&f, 2, &Caps::default()).unwrap().pass());
    }

    #[test]
    fn char_poly_of_doubled_identity_on_scalars() {
        // scalar algebra, f = 2*id, a = 1: power sums all 2, so
        // p(t) = (t-1)^2 and det = 2! (t-1)^2
        let s = CommutativeAlgebra::scalars(Backend::Rational, 0.0);
        let f = LinearMap::identity(&s).scale(&Scalar::from_int(2));
        let cp = char_poly(&f, 2, &s.unit_element()).unwrap();
        let unit = s.unit_element();
        let expect_monic = RingPoly::new(vec![unit.clone(), unit.scale_int(-2), unit.clone()]);
        assert_eq!(cp.monic, expect_monic);
        assert_eq!(cp.det, expect_monic.scale_int(2));
        assert_eq!(cp.ratio, 2);
    }

    #[test]
    fn char_poly_at_zero() {
        let s = CommutativeAlgebra::scalars(Backend::Rational, 0.0);
        let f = LinearMap::identity(&s).scale(&Scalar::from_int(3));
        let cp = char_poly(&f, 3, &s.zero_element()).unwrap();
        // all power sums vanish: monic = t^3, det = -3! t^3
        assert_eq!(cp.monic, RingPoly::monomial(s.unit_element(), 3));
        assert_eq!(cp.ratio, -6);
    }

    #[test]
    fn series_identity_for_sum_of_evaluations() {
        let x = fa(&["x1", "x2"]);
        let f = sum_of_evaluations(&x, &[1, 1]);
        let a = x.element_from_ints(&[2, -3]);
        assert_eq!(series_identity_check(&f, 2, &a, 6).unwrap(), None);
        // a = unit: series n/t + n/t^2 + ...
        assert_eq!(series_identity_check(&f, 2, &x.unit_element(), 6).unwrap(), None);
        // a = 0: series n/t only
        assert_eq!(series_identity_check(&f, 2, &x.zero_element(), 6).unwrap(), None);
    }

    #[test]
    fn phi_equals_newton_elementary() {
        // Phi_n(f)(a) = n! e_n where s_k = f(a^k)
        use crate::poly::power_sums_to_elementary;
        let x = fa(&["x1", "x2", "x3"]);
        let f = sum_of_evaluations(&x, &[1, 1, 1]);
        let a = x.element_from_ints(&[1, 4, -2]);
        for n in 1..=3usize {
            let s: Vec<AlgebraElement> =
                (1..=n).map(|k| f.apply(&a.pow(k)).unwrap()).collect();
            let e = power_sums_to_elementary(&s);
            let mut fact = 1i64;
            for r in 1..=n {
                fact *= r as i64;
            }
            assert_eq!(phi_diagonal_determinant(&f, n, &a).unwrap(), e[n - 1].scale_int(fact));
        }
    }

    #[test]
    fn gugnin_kernel_of_partial_evaluation_sum() {
        // f = evaluation sum supported on {x1, x2} inside a 3-point space:
        // kernel = functions vanishing on the support, dimension 1
        let x = fa(&["x1", "x2", "x3"]);
        let f = sum_of_evaluations(&x, &[1, 2, 0]);
        let kernel = gugnin_kernel(&f).unwrap();
        assert_eq!(kernel.len(), 1);
        let k = &kernel[0];
        assert!(k.coords()[0].is_zero() && k.coords()[1].is_zero());
        // reduced codomain: each kernel element has f(a^r) = 0 for r <= n
        for r in 1..=3 {
            assert!(f.apply(&k.pow(r)).unwrap().is_zero());
        }
        // full support: trivial kernel
        let full = sum_of_evaluations(&x, &[1, 1, 1]);
        assert!(gugnin_kernel(&full).unwrap().is_empty());
    }
}
