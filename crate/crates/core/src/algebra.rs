//! Finite-dimensional commutative associative unital algebras presented by
//! structure constants, their elements, and linear maps between them.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ring::RingElem;
use crate::scalar::{Backend, Scalar, DEFAULT_EPS};

#[derive(Debug, Clone)]
pub struct CommutativeAlgebra {
    dim: usize,
    labels: Vec<String>,
    /// Flat d^3 tensor, e_i * e_j = sum_k structure[idx(i,j,k)] e_k.
    structure: Vec<Scalar>,
    unit: Vec<Scalar>,
    backend: Backend,
    eps: f64,
}

pub type AlgebraRef = Arc<CommutativeAlgebra>;

impl CommutativeAlgebra {
    pub fn new(
        labels: Vec<String>,
        structure: Vec<Scalar>,
        unit: Vec<Scalar>,
    ) -> Result<AlgebraRef> {
        let dim = labels.len();
        if dim == 0 {
            return Err(Error::EmptySpace);
        }
        if structure.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch { expected: dim * dim * dim, got: structure.len() });
        }
        if unit.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, got: unit.len() });
        }
        let backend = structure
            .first()
            .map(|s| s.backend())
            .unwrap_or(Backend::Rational);
        let eps = match structure.first() {
            Some(Scalar::Complex { eps, .. }) => *eps,
            _ => DEFAULT_EPS,
        };
        let alg = CommutativeAlgebra { dim, labels, structure, unit, backend, eps };
        alg.verify_invariants()?;
        let alg = Arc::new(alg);
        alg.verify_unit()?;
        Ok(alg)
    }

    /// The diagonal algebra of functions on a finite label set: basis are
    /// indicator functions, products are pointwise, unit is all ones.
    pub fn function_algebra<S: Into<String>>(
        points: impl IntoIterator<Item = S>,
        backend: Backend,
        eps: f64,
    ) -> Result<AlgebraRef> {
        let labels: Vec<String> = points.into_iter().map(Into::into).collect();
        let dim = labels.len();
        if dim == 0 {
            return Err(Error::EmptySpace);
        }
        let zero = Scalar::zero(backend, eps);
        let one = Scalar::one(backend, eps);
        let mut structure = vec![zero; dim * dim * dim];
        for i in 0..dim {
            structure[(i * dim + i) * dim + i] = one.clone();
        }
        let unit = vec![one; dim];
        CommutativeAlgebra::new(labels, structure, unit)
    }

    /// One-dimensional scalar algebra (functions on a point).
    pub fn scalars(backend: Backend, eps: f64) -> AlgebraRef {
        CommutativeAlgebra::function_algebra(["pt"], backend, eps).unwrap()
    }

    /// Q[x]/(x^d): basis 1, x, ..., x^{d-1}. Not reduced for d >= 2; used
    /// as a non-diagonal test algebra.
    pub fn truncated_polynomial_algebra(d: usize, backend: Backend, eps: f64) -> Result<AlgebraRef> {
        if d == 0 {
            return Err(Error::EmptySpace);
        }
        let zero = Scalar::zero(backend, eps);
        let one = Scalar::one(backend, eps);
        let labels: Vec<String> = (0..d).map(|k| format!("x^{k}")).collect();
        let mut structure = vec![zero.clone(); d * d * d];
        for i in 0..d {
            for j in 0..d {
                if i + j < d {
                    structure[(i * d + j) * d + (i + j)] = one.clone();
                }
            }
        }
        let mut unit = vec![zero; d];
        unit[0] = one;
        CommutativeAlgebra::new(labels, structure, unit)
    }

    fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.structure[(i * self.dim + j) * self.dim + k]
    }

    pub fn verify_invariants(&self) -> Result<()> {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    if self.c(i, j, k) != self.c(j, i, k) {
                        return Err(Error::Invalid(format!(
                            "structure constants not commutative at ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        let mut lhs = self.c(i, j, 0).zero_like();
                        let mut rhs = lhs.clone();
                        for m in 0..d {
                            lhs = &lhs + &(self.c(i, j, m) * self.c(m, k, l));
                            rhs = &rhs + &(self.c(j, k, m) * self.c(i, m, l));
                        }
                        if lhs != rhs {
                            return Err(Error::Invalid(format!(
                                "structure constants not associative at ({i},{j},{k},{l})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn verify_unit(self: &AlgebraRef) -> Result<()> {
        let unit = self.unit_element();
        for i in 0..self.dim {
            let e = self.basis_element(i);
            if unit.mul(&e)? != e {
                return Err(Error::Invalid(format!("unit law fails on basis vector {i}")));
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn unit_coords(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn structure_constants(&self) -> &[Scalar] {
        &self.structure
    }

    pub fn zero_scalar(&self) -> Scalar {
        Scalar::zero(self.backend, self.eps)
    }

    pub fn one_scalar(&self) -> Scalar {
        Scalar::one(self.backend, self.eps)
    }
}

pub trait AlgebraOps {
    fn element(&self, coords: Vec<Scalar>) -> Result<AlgebraElement>;
    fn element_from_ints(&self, coords: &[i64]) -> AlgebraElement;
    fn basis_element(&self, i: usize) -> AlgebraElement;
    fn unit_element(&self) -> AlgebraElement;
    fn zero_element(&self) -> AlgebraElement;
    fn is_function_algebra(&self) -> bool;
}

impl AlgebraOps for AlgebraRef {
    fn element(&self, coords: Vec<Scalar>) -> Result<AlgebraElement> {
        if coords.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: coords.len() });
        }
        Ok(AlgebraElement { algebra: self.clone(), coords })
    }

    fn element_from_ints(&self, coords: &[i64]) -> AlgebraElement {
        let coords = coords.iter().map(|&v| Scalar::int(self.backend, self.eps, v)).collect();
        self.element(coords).expect("coordinate count")
    }

    fn basis_element(&self, i: usize) -> AlgebraElement {
        let mut coords = vec![self.zero_scalar(); self.dim];
        coords[i] = self.one_scalar();
        AlgebraElement { algebra: self.clone(), coords }
    }

    fn unit_element(&self) -> AlgebraElement {
        AlgebraElement { algebra: self.clone(), coords: self.unit.clone() }
    }

    fn zero_element(&self) -> AlgebraElement {
        AlgebraElement { algebra: self.clone(), coords: vec![self.zero_scalar(); self.dim] }
    }

    /// Diagonal structure constants: c[i][j][k] = 1 iff i=j=k.
    fn is_function_algebra(&self) -> bool {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let expect = if i == j && j == k { self.one_scalar() } else { self.zero_scalar() };
                    if *self.c(i, j, k) != expect {
                        return false;
                    }
                }
            }
        }
        self.unit.iter().all(|u| *u == self.one_scalar())
    }
}

#[derive(Debug, Clone)]
pub struct AlgebraElement {
    algebra: AlgebraRef,
    coords: Vec<Scalar>,
}

impl AlgebraElement {
    pub fn algebra(&self) -> &AlgebraRef {
        &self.algebra
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn same_algebra(&self, other: &AlgebraElement) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra)
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        if !self.same_algebra(other) {
            return Err(Error::AlgebraMismatch);
        }
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Ok(AlgebraElement { algebra: self.algebra.clone(), coords })
    }

    pub fn sub(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> AlgebraElement {
        AlgebraElement {
            algebra: self.algebra.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> AlgebraElement {
        AlgebraElement {
            algebra: self.algebra.clone(),
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    /// Structure-constant contraction: coords_k = sum_{i,j} a_i b_j c[i][j][k].
    pub fn mul(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        if !self.same_algebra(other) {
            return Err(Error::AlgebraMismatch);
        }
        let d = self.algebra.dim;
        let mut coords = vec![self.algebra.zero_scalar(); d];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, coord) in coords.iter_mut().enumerate() {
                    let c = self.algebra.c(i, j, k);
                    if !c.is_zero() {
                        *coord = &*coord + &(&ab * c);
                    }
                }
            }
        }
        Ok(AlgebraElement { algebra: self.algebra.clone(), coords })
    }

    pub fn pow(&self, k: usize) -> AlgebraElement {
        let mut acc = self.algebra.unit_element();
        for _ in 0..k {
            acc = acc.mul(self).expect("same algebra");
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.same_algebra(other) && self.coords == other.coords
    }
}

impl RingElem for AlgebraElement {
    fn zero_like(&self) -> Self {
        self.algebra.zero_element()
    }
    fn one_like(&self) -> Self {
        self.algebra.unit_element()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.add(other).expect("algebra mismatch")
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.sub(other).expect("algebra mismatch")
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul(other).expect("algebra mismatch")
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
    fn scale_int(&self, k: i64) -> Self {
        let s = Scalar::int(self.algebra.backend, self.algebra.eps, k);
        self.scale(&s)
    }
    fn div_int(&self, k: i64) -> Self {
        AlgebraElement {
            algebra: self.algebra.clone(),
            coords: self.coords.iter().map(|c| c.div_int(k)).collect(),
        }
    }
    fn is_zero(&self) -> bool {
        AlgebraElement::is_zero(self)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Matrix of a linear map between two algebras; rows indexed by the
/// codomain basis, columns by the domain basis.
#[derive(Debug, Clone)]
pub struct LinearMap {
    domain: AlgebraRef,
    codomain: AlgebraRef,
    matrix: Vec<Vec<Scalar>>,
}

impl LinearMap {
    pub fn new(domain: AlgebraRef, codomain: AlgebraRef, matrix: Vec<Vec<Scalar>>) -> Result<Self> {
        if matrix.len() != codomain.dim() {
            return Err(Error::DimensionMismatch { expected: codomain.dim(), got: matrix.len() });
        }
        for row in &matrix {
            if row.len() != domain.dim() {
                return Err(Error::DimensionMismatch { expected: domain.dim(), got: row.len() });
            }
        }
        Ok(LinearMap { domain, codomain, matrix })
    }

    /// Build from the images of the domain basis vectors.
    pub fn from_images(domain: AlgebraRef, codomain: AlgebraRef, images: &[AlgebraElement]) -> Result<Self> {
        if images.len() != domain.dim() {
            return Err(Error::DimensionMismatch { expected: domain.dim(), got: images.len() });
        }
        let matrix = (0..codomain.dim())
            .map(|r| images.iter().map(|img| img.coords()[r].clone()).collect())
            .collect();
        LinearMap::new(domain, codomain, matrix)
    }

    pub fn identity(algebra: &AlgebraRef) -> Self {
        let d = algebra.dim();
        let matrix = (0..d)
            .map(|r| {
                (0..d)
                    .map(|c| if r == c { algebra.one_scalar() } else { algebra.zero_scalar() })
                    .collect()
            })
            .collect();
        LinearMap { domain: algebra.clone(), codomain: algebra.clone(), matrix }
    }

    pub fn zero(domain: AlgebraRef, codomain: AlgebraRef) -> Self {
        let matrix = vec![vec![domain.zero_scalar(); domain.dim()]; codomain.dim()];
        LinearMap { domain, codomain, matrix }
    }

    pub fn domain(&self) -> &AlgebraRef {
        &self.domain
    }

    pub fn codomain(&self) -> &AlgebraRef {
        &self.codomain
    }

    pub fn matrix(&self) -> &[Vec<Scalar>] {
        &self.matrix
    }

    pub fn apply(&self, a: &AlgebraElement) -> Result<AlgebraElement> {
        if !Arc::ptr_eq(a.algebra(), &self.domain) {
            return Err(Error::AlgebraMismatch);
        }
        let coords = self
            .matrix
            .iter()
            .map(|row| {
                let mut acc = self.codomain.zero_scalar();
                for (m, c) in row.iter().zip(a.coords()) {
                    if !m.is_zero() && !c.is_zero() {
                        acc = &acc + &(m * c);
                    }
                }
                acc
            })
            .collect();
        Ok(AlgebraElement { algebra: self.codomain.clone(), coords })
    }

    /// self o other
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        if !Arc::ptr_eq(&self.domain, &other.codomain) {
            return Err(Error::AlgebraMismatch);
        }
        let images: Vec<AlgebraElement> = (0..other.domain.dim())
            .map(|i| self.apply(&other.apply(&other.domain.basis_element(i))?))
            .collect::<Result<_>>()?;
        LinearMap::from_images(other.domain.clone(), self.codomain.clone(), &images)
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap> {
        if !Arc::ptr_eq(&self.domain, &other.domain) || !Arc::ptr_eq(&self.codomain, &other.codomain) {
            return Err(Error::AlgebraMismatch);
        }
        let matrix = self
            .matrix
            .iter()
            .zip(&other.matrix)
            .map(|(r1, r2)| r1.iter().zip(r2).map(|(a, b)| a + b).collect())
            .collect();
        LinearMap::new(self.domain.clone(), self.codomain.clone(), matrix)
    }

    pub fn sub(&self, other: &LinearMap) -> Result<LinearMap> {
        self.add(&other.scale(&Scalar::int(self.domain.backend(), self.domain.eps(), -1)))
    }

    pub fn scale(&self, s: &Scalar) -> LinearMap {
        let matrix = self
            .matrix
            .iter()
            .map(|row| row.iter().map(|m| m * s).collect())
            .collect();
        LinearMap { domain: self.domain.clone(), codomain: self.codomain.clone(), matrix }
    }

    pub fn apply_basis(&self, i: usize) -> AlgebraElement {
        let coords = self.matrix.iter().map(|row| row[i].clone()).collect();
        AlgebraElement { algebra: self.codomain.clone(), coords }
    }

    pub fn is_unital(&self) -> bool {
        match self.apply(&self.domain.unit_element()) {
            Ok(img) => img == self.codomain.unit_element(),
            Err(_) => false,
        }
    }

    /// Multiplicativity on all basis pairs (enough by bilinearity).
    pub fn is_multiplicative(&self) -> bool {
        let d = self.domain.dim();
        for i in 0..d {
            for j in i..d {
                let ei = self.domain.basis_element(i);
                let ej = self.domain.basis_element(j);
                let lhs = self.apply(&ei.mul_ref(&ej)).unwrap();
                let rhs = self.apply(&ei).unwrap().mul_ref(&self.apply(&ej).unwrap());
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_ring_homomorphism(&self) -> bool {
        self.is_unital() && self.is_multiplicative()
    }
}

impl PartialEq for LinearMap {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.domain, &other.domain)
            && Arc::ptr_eq(&self.codomain, &other.codomain)
            && self.matrix == other.matrix
    }
}
