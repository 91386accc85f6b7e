//! Symmetric powers S^nA of a structure-constant algebra in the orbit-sum
//! basis m_lambda, the diagonal map Delta_n, and the induced ring
//! homomorphism Phi_n(f)/n! : S^nA -> B of a Frobenius n-homomorphism.
//!
//! Basis multisets keep integral structure constants (no division by
//! stabilizer orders); the 1/n! enters only in the induced homomorphism.

use std::collections::HashMap;

use itertools::Itertools;

use crate::algebra::{AlgebraOps, AlgebraRef, CommutativeAlgebra, LinearMap};
use crate::error::{Error, Result};
use crate::frobenius::{phi_recursive, Caps};
use crate::ring::RingElem;
use crate::scalar::Scalar;

/// S^nA together with its m_lambda basis bookkeeping.
#[derive(Debug, Clone)]
pub struct SymmetricPower {
    pub base: AlgebraRef,
    pub n: usize,
    pub algebra: AlgebraRef,
    /// Sorted index multisets of total size n, in enumeration order.
    pub basis: Vec<Vec<usize>>,
}

type Tensor = HashMap<Vec<usize>, Scalar>;

fn add_term(t: &mut Tensor, key: Vec<usize>, value: Scalar) {
    if value.is_zero() {
        return;
    }
    match t.entry(key) {
        std::collections::hash_map::Entry::Vacant(e) => {
            e.insert(value);
        }
        std::collections::hash_map::Entry::Occupied(mut e) => {
            let sum = &*e.get() + &value;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

fn distinct_arrangements(lambda: &[usize]) -> Vec<Vec<usize>> {
    lambda
        .iter()
        .copied()
        .permutations(lambda.len())
        .unique()
        .collect()
}

/// Expand the slotwise product of two pure tensors into the tensor basis.
fn pure_tensor_product(base: &AlgebraRef, p: &[usize], q: &[usize]) -> Tensor {
    let d = base.dim();
    let one = base.one_scalar();
    let mut acc: Tensor = HashMap::new();
    acc.insert(vec![], one);
    for (&i, &j) in p.iter().zip(q) {
        let ei = base.basis_element(i);
        let ej = base.basis_element(j);
        let prod = ei.mul(&ej).expect("same algebra");
        let mut next: Tensor = HashMap::new();
        for (prefix, coeff) in &acc {
            for (k, c) in prod.coords().iter().enumerate().take(d) {
                if c.is_zero() {
                    continue;
                }
                let mut key = prefix.clone();
                key.push(k);
                add_term(&mut next, key, coeff * c);
            }
        }
        acc = next;
    }
    acc
}

/// Read a symmetric tensor off in the m_lambda basis: the coefficient of
/// m_lambda is the tensor coefficient at the sorted representative tuple.
fn symmetric_tensor_coords(t: &Tensor, basis: &[Vec<usize>], zero: &Scalar) -> Vec<Scalar> {
    basis
        .iter()
        .map(|lambda| t.get(lambda).cloned().unwrap_or_else(|| zero.clone()))
        .collect()
}

/// Construct S^nA with the orbit-sum basis. Costs grow with
/// C(dim A + n - 1, n); capped by `caps.max_tuples`.
pub fn symmetric_power(base: &AlgebraRef, n: usize, caps: &Caps) -> Result<SymmetricPower> {
    if n == 0 {
        return Err(Error::Invalid("symmetric power needs n >= 1".into()));
    }
    let d = base.dim();
    let basis: Vec<Vec<usize>> = (0..d).combinations_with_replacement(n).collect();
    let dim = basis.len();
    if dim * dim > caps.max_tuples {
        return Err(Error::CapExceeded { what: "symmetric power basis pairs", size: dim * dim, cap: caps.max_tuples });
    }
    let zero = base.zero_scalar();

    // m_lambda as tensors
    let m_tensors: Vec<Tensor> = basis
        .iter()
        .map(|lambda| {
            let mut t = HashMap::new();
            for arr in distinct_arrangements(lambda) {
                t.insert(arr, base.one_scalar());
            }
            t
        })
        .collect();

    let mut structure = vec![zero.clone(); dim * dim * dim];
    for a in 0..dim {
        for b in a..dim {
            let mut product: Tensor = HashMap::new();
            for p in m_tensors[a].keys() {
                for q in m_tensors[b].keys() {
                    for (key, value) in pure_tensor_product(base, p, q) {
                        add_term(&mut product, key, value);
                    }
                }
            }
            let coords = symmetric_tensor_coords(&product, &basis, &zero);
            for (k, c) in coords.into_iter().enumerate() {
                structure[(a * dim + b) * dim + k] = c.clone();
                structure[(b * dim + a) * dim + k] = c;
            }
        }
    }

    // unit tensor u (x) u (x) ... (x) u
    let mut unit_tensor: Tensor = HashMap::new();
    unit_tensor.insert(vec![], base.one_scalar());
    for _ in 0..n {
        let mut next: Tensor = HashMap::new();
        for (prefix, coeff) in &unit_tensor {
            for (k, c) in base.unit_coords().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut key = prefix.clone();
                key.push(k);
                add_term(&mut next, key, coeff * c);
            }
        }
        unit_tensor = next;
    }
    let unit = symmetric_tensor_coords(&unit_tensor, &basis, &zero);

    let labels: Vec<String> = basis
        .iter()
        .map(|lambda| {
            let parts: Vec<&str> = lambda.iter().map(|&i| base.labels()[i].as_str()).collect();
            format!("m[{}]", parts.join(","))
        })
        .collect();
    let algebra = CommutativeAlgebra::new(labels, structure, unit)?;
    Ok(SymmetricPower { base: base.clone(), n, algebra, basis })
}

/// Delta_n(a) = sum_i 1 (x) ... (x) a (x) ... (x) 1, in the m basis.
pub fn diagonal_map(sp: &SymmetricPower) -> Result<LinearMap> {
    let base = &sp.base;
    let d = base.dim();
    let zero = base.zero_scalar();
    let images: Vec<crate::algebra::AlgebraElement> = (0..d)
        .map(|i| {
            let mut tensor: Tensor = HashMap::new();
            for pos in 0..sp.n {
                let mut partial: Tensor = HashMap::new();
                partial.insert(vec![], base.one_scalar());
                for slot in 0..sp.n {
                    let mut next: Tensor = HashMap::new();
                    for (prefix, coeff) in &partial {
                        if slot == pos {
                            let mut key = prefix.clone();
                            key.push(i);
                            add_term(&mut next, key, coeff.clone());
                        } else {
                            for (k, c) in base.unit_coords().iter().enumerate() {
                                if c.is_zero() {
                                    continue;
                                }
                                let mut key = prefix.clone();
                                key.push(k);
                                add_term(&mut next, key, coeff * c);
                            }
                        }
                    }
                    partial = next;
                }
                for (key, value) in partial {
                    add_term(&mut tensor, key, value);
                }
            }
            let coords = symmetric_tensor_coords(&tensor, &sp.basis, &zero);
            sp.algebra.element(coords)
        })
        .collect::<Result<_>>()?;
    LinearMap::from_images(base.clone(), sp.algebra.clone(), &images)
}

/// Outcome of constructing Phi_n(f)/n! : S^nA -> B.
#[derive(Debug, Clone)]
pub struct InducedHom {
    pub map: LinearMap,
    pub multiplicative: bool,
    pub unital: bool,
    /// Does the factorization f = induced o Delta_n hold?
    pub factors_through_diagonal: bool,
}

impl InducedHom {
    pub fn pass(&self) -> bool {
        self.multiplicative && self.unital && self.factors_through_diagonal
    }
}

/// The induced map on the orbit-sum basis:
/// m_lambda maps to Phi_n(f)(e_{l1},..,e_{ln}) / prod_i mult_i!
/// (orbit size over n! equals one over the product of multiplicities).
pub fn induced_ring_hom(f: &LinearMap, sp: &SymmetricPower) -> Result<InducedHom> {
    let base = &sp.base;
    let images: Vec<crate::algebra::AlgebraElement> = sp
        .basis
        .iter()
        .map(|lambda| {
            let args: Vec<_> = lambda.iter().map(|&i| base.basis_element(i)).collect();
            let phi = phi_recursive(f, &args)?;
            let mut stab: i64 = 1;
            let mut run = 1i64;
            for w in lambda.windows(2) {
                if w[0] == w[1] {
                    run += 1;
                    stab *= run;
                } else {
                    run = 1;
                }
            }
            Ok(phi.div_int(stab))
        })
        .collect::<Result<_>>()?;
    let map = LinearMap::from_images(sp.algebra.clone(), f.codomain().clone(), &images)?;

    let multiplicative = map.is_multiplicative();
    let unital = map.is_unital();
    let delta = diagonal_map(sp)?;
    let factors_through_diagonal = map.compose(&delta)? == *f;
    Ok(InducedHom { map, multiplicative, unital, factors_through_diagonal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraOps;
    use crate::frobenius::is_frobenius;
    use crate::scalar::Backend;

    fn fa(labels: &[&str]) -> AlgebraRef {
        CommutativeAlgebra::function_algebra(labels.to_vec(), Backend::Rational, 0.0).unwrap()
    }

    #[test]
    fn dimension_is_multiset_count() {
        let a = fa(&["x1", "x2"]);
        let sp = symmetric_power(&a, 2, &Caps::default()).unwrap();
        assert_eq!(sp.algebra.dim(), 3);
        // and S^1 A = A
        let sp1 = symmetric_power(&a, 1, &Caps::default()).unwrap();
        assert_eq!(sp1.algebra.dim(), a.dim());
        assert!(diagonal_map(&sp1).unwrap().is_ring_homomorphism());
    }

    #[test]
    fn sym_power_of_function_algebra_is_function_algebra() {
        // S^n C(X) = C(Sym^n X): diagonal structure, dimensions match
        for (labels, n) in [(vec!["a", "b"], 2usize), (vec!["a", "b", "c"], 3), (vec!["a"], 2)] {
            let a = fa(&labels.iter().map(|s| *s).collect::<Vec<_>>());
            let sp = symmetric_power(&a, n, &Caps::default()).unwrap();
            assert!(sp.algebra.is_function_algebra());
            let multisets = crate::multiset::enumerate_multisets(
                &labels.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                n,
            );
            assert_eq!(sp.algebra.dim(), multisets.len());
        }
    }

    #[test]
    fn sym_power_of_nondiagonal_algebra_passes_invariants() {
        let a = CommutativeAlgebra::truncated_polynomial_algebra(3, Backend::Rational, 0.0).unwrap();
        let sp = symmetric_power(&a, 2, &Caps::default()).unwrap();
        assert!(sp.algebra.verify_invariants().is_ok());
        assert_eq!(sp.algebra.dim(), 6);
    }

    #[test]
    fn diagonal_map_is_frobenius() {
        for n in 2..=3usize {
            for labels in [vec!["a", "b"], vec!["a", "b", "c"]] {
                let a = fa(&labels);
                let sp = symmetric_power(&a, n, &Caps::default()).unwrap();
                let delta = diagonal_map(&sp).unwrap();
                // Delta_n(1) = n * unit
                assert_eq!(
                    delta.apply(&a.unit_element()).unwrap(),
                    sp.algebra.unit_element().scale_int(n as i64)
                );
                let report = is_frobenius(&delta, n, &Caps::default()).unwrap();
                assert!(report.pass(), "n={n} labels={labels:?}: {report:?}");
            }
        }
    }

    #[test]
    fn induced_hom_of_diagonal_is_identity() {
        let a = fa(&["a", "b"]);
        let sp = symmetric_power(&a, 2, &Caps::default()).unwrap();
        let delta = diagonal_map(&sp).unwrap();
        // Delta_n is Frobenius n; its induced hom must be the identity on S^nA
        let sp2 = symmetric_power(&sp.algebra, 1, &Caps::default());
        drop(sp2);
        let induced = induced_ring_hom(&delta, &sp).unwrap();
        assert!(induced.pass());
        assert_eq!(induced.map, LinearMap::identity(&sp.algebra));
    }

    #[test]
    fn induced_hom_of_sum_of_evaluations() {
        // f = evaluation sum over the multiset {x1, x1, x2} in C({x1,x2}) -> scalars
        let x = fa(&["x1", "x2"]);
        let scalars = CommutativeAlgebra::scalars(Backend::Rational, 0.0);
        let matrix = vec![vec![Scalar::from_int(2), Scalar::from_int(1)]];
        let f = LinearMap::new(x.clone(), scalars, matrix).unwrap();
        let sp = symmetric_power(&x, 3, &Caps::default()).unwrap();
        let induced = induced_ring_hom(&f, &sp).unwrap();
        assert!(induced.pass(), "{induced:?}");
        // f~(Delta_n(a)) = f(a) on a sample element
        let a = x.element_from_ints(&[5, -3]);
        let delta = diagonal_map(&sp).unwrap();
        assert_eq!(
            induced.map.apply(&delta.apply(&a).unwrap()).unwrap(),
            f.apply(&a).unwrap()
        );
    }
}
