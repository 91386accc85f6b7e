//! Numeric fibers of polynomial coverings z -> p(z): simultaneous-iteration
//! root finding followed by clustering into roots with multiplicities.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Two roots closer than this are treated as one root of higher
/// multiplicity. Separate from the scalar comparison tolerance: near a
/// branch point the simple roots of a perturbed polynomial sit much further
/// apart than machine epsilon.
pub const DEFAULT_CLUSTER_RADIUS: f64 = 1e-6;

const MAX_ITERATIONS: usize = 500;
const RESIDUAL_TOL: f64 = 1e-8;

pub fn complex_coeffs(p: &Polynomial) -> Vec<Complex64> {
    (0..=p.degree()).map(|k| p.coeff(k).as_complex()).collect()
}

fn eval(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

/// All roots of the polynomial with the given coefficients (low to high) by
/// Weierstrass simultaneous iteration. Fails with the worst residual if the
/// iteration does not converge.
pub fn durand_kerner(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    let n = coeffs.len().saturating_sub(1);
    if n == 0 {
        return Err(Error::Invalid("constant polynomial has no roots".into()));
    }
    let lead = coeffs[n];
    if lead.norm() == 0.0 {
        return Err(Error::NonInvertibleLeading);
    }
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();

    // Cauchy bound on root moduli; offset angle avoids symmetry locking
    let radius = 1.0 + monic[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4;
            radius * Complex64::new(angle.cos(), angle.sin())
        })
        .collect();

    for _ in 0..MAX_ITERATIONS {
        let mut max_step = 0.0f64;
        for k in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if j != k {
                    let diff = z[k] - z[j];
                    denom *= if diff.norm() < 1e-30 { Complex64::new(1e-30, 1e-30) } else { diff };
                }
            }
            let step = eval(&monic, z[k]) / denom;
            z[k] -= step;
            max_step = max_step.max(step.norm());
        }
        if max_step < 1e-14 * radius {
            break;
        }
    }

    let worst = z.iter().map(|&r| eval(&monic, r).norm()).fold(0.0, f64::max);
    let scale = radius.powi(n as i32).max(1.0);
    if worst > RESIDUAL_TOL * scale {
        return Err(Error::RootFinding { residual: worst });
    }
    Ok(z)
}

/// Single-linkage clustering: roots within `radius` of each other collapse
/// to their centroid, counted with multiplicity.
pub fn cluster_roots(roots: &[Complex64], radius: f64) -> Vec<(Complex64, usize)> {
    let n = roots.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let root = find(parent, parent[i]);
            parent[i] = root;
        }
        parent[i]
    }
    for i in 0..n {
        for j in i + 1..n {
            if (roots[i] - roots[j]).norm() <= radius {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
    }
    let mut clusters: std::collections::BTreeMap<usize, (Complex64, usize)> = Default::default();
    for i in 0..n {
        let root = find(&mut parent, i);
        let entry = clusters.entry(root).or_insert((Complex64::new(0.0, 0.0), 0));
        entry.0 += roots[i];
        entry.1 += 1;
    }
    let mut out: Vec<(Complex64, usize)> = clusters
        .into_values()
        .map(|(sum, count)| (sum / count as f64, count))
        .collect();
    out.sort_by(|a, b| {
        (a.0.re, a.0.im)
            .partial_cmp(&(b.0.re, b.0.im))
            .expect("finite roots")
    });
    out
}

/// The fiber of the covering z -> p(z) over w: roots of p(z) - w with
/// multiplicities. Total multiplicity is always deg p.
pub fn polynomial_fiber(
    p: &Polynomial,
    w: Complex64,
    cluster_radius: f64,
) -> Result<Vec<(Complex64, usize)>> {
    let mut coeffs = complex_coeffs(p);
    coeffs[0] -= w;
    let roots = durand_kerner(&coeffs)?;
    Ok(cluster_roots(&roots, cluster_radius))
}

/// The n-branched covering of the plane defined by a degree-n polynomial.
#[derive(Debug, Clone)]
pub struct PolynomialCovering {
    pub p: Polynomial,
    pub tolerance: f64,
    pub cluster_radius: f64,
}

impl PolynomialCovering {
    pub fn new(p: Polynomial, tolerance: f64, cluster_radius: f64) -> Result<Self> {
        if p.degree() == 0 {
            return Err(Error::Invalid("covering polynomial must have degree >= 1".into()));
        }
        if p.leading().as_complex().norm() <= tolerance {
            return Err(Error::NonInvertibleLeading);
        }
        Ok(PolynomialCovering { p, tolerance, cluster_radius })
    }

    pub fn n(&self) -> usize {
        self.p.degree()
    }

    pub fn fiber(&self, w: Complex64) -> Result<Vec<(Complex64, usize)>> {
        polynomial_fiber(&self.p, w, self.cluster_radius)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn poly_int(coeffs: &[i64]) -> Polynomial {
        Polynomial::new(coeffs.iter().map(|&v| Scalar::complex(v as f64, 0.0, 1e-9)).collect())
    }

    #[test]
    fn simple_quadratic_roots() {
        // z^2 - 1
        let roots = durand_kerner(&[c(-1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]).unwrap();
        let clustered = cluster_roots(&roots, DEFAULT_CLUSTER_RADIUS);
        assert_eq!(clustered.len(), 2);
        assert!((clustered[0].0 - c(-1.0, 0.0)).norm() < 1e-9);
        assert!((clustered[1].0 - c(1.0, 0.0)).norm() < 1e-9);
    }

    #[test]
    fn chebyshev_cubic_branch_fibers() {
        // p(z) = z^3 - 3z; over w = 2 the fiber is (z+1)^2 (z-2)
        let p = poly_int(&[0, -3, 0, 1]);
        let fiber = polynomial_fiber(&p, c(2.0, 0.0), DEFAULT_CLUSTER_RADIUS).unwrap();
        assert_eq!(fiber.len(), 2);
        assert_eq!(fiber[0].1, 2);
        assert!((fiber[0].0 - c(-1.0, 0.0)).norm() < 1e-6);
        assert_eq!(fiber[1].1, 1);
        assert!((fiber[1].0 - c(2.0, 0.0)).norm() < 1e-6);

        // over w = -2 it mirrors: (z-1)^2 (z+2)
        let fiber = polynomial_fiber(&p, c(-2.0, 0.0), DEFAULT_CLUSTER_RADIUS).unwrap();
        assert_eq!(fiber.iter().map(|f| f.1).collect::<Vec<_>>(), vec![1, 2]);
        assert!((fiber[0].0 - c(-2.0, 0.0)).norm() < 1e-6);
        assert!((fiber[1].0 - c(1.0, 0.0)).norm() < 1e-6);

        // a regular value has three simple points
        let fiber = polynomial_fiber(&p, c(0.5, 0.3), DEFAULT_CLUSTER_RADIUS).unwrap();
        assert_eq!(fiber.len(), 3);
        assert_eq!(fiber.iter().map(|f| f.1).sum::<usize>(), 3);
    }

    #[test]
    fn total_multiplicity_equals_degree() {
        let p = poly_int(&[7, 0, -5, 1, 2]);
        for w in [c(0.0, 0.0), c(3.0, -1.0), c(-11.0, 4.5)] {
            let fiber = polynomial_fiber(&p, w, DEFAULT_CLUSTER_RADIUS).unwrap();
            assert_eq!(fiber.iter().map(|f| f.1).sum::<usize>(), 4);
            for (z, _) in &fiber {
                assert!((eval(&complex_coeffs(&p), *z) - w).norm() < 1e-6);
            }
        }
    }

    #[test]
    fn constant_polynomial_rejected() {
        assert!(durand_kerner(&[c(3.0, 0.0)]).is_err());
    }
}
