//! Rayon vs sequential sweeps on the two hot paths: the Phi_{n+1}
//! vanishing sweep behind is_frobenius, and the bulk multiset-map
//! enumeration behind the round-trip checks. Run with and without the
//! `parallel` feature to compare dispatch; the *_seq entries give the
//! sequential floor inside a single build.

use criterion::{criterion_group, criterion_main, Criterion};
use itertools::Itertools;

use frobenius::algebra::{AlgebraOps, CommutativeAlgebra, LinearMap};
use frobenius::frobenius::phi_recursive;
use frobenius::multiset::{enumerate_multisets, Multiset};
use frobenius::scalar::{Backend, Scalar};
use frobenius::sweep;
use frobenius::transfer::frobenius_to_map;

/// The Phi_4 vanishing sweep for a 3-sheeted covering transfer on a
/// six-point total space: 126 basis multisets, one Phi per multiset.
fn phi_sweep(c: &mut Criterion) {
    let x = CommutativeAlgebra::function_algebra(
        (0..6).map(|i| format!("x{i}")).collect::<Vec<_>>(),
        Backend::Rational,
        0.0,
    )
    .unwrap();
    let y = CommutativeAlgebra::function_algebra(["y0", "y1"], Backend::Rational, 0.0).unwrap();
    let matrix: Vec<Vec<Scalar>> = vec![
        [1, 2, 0, 0, 0, 0].iter().map(|&v| Scalar::from_int(v)).collect(),
        [0, 0, 1, 1, 1, 0].iter().map(|&v| Scalar::from_int(v)).collect(),
    ];
    let tau = LinearMap::new(x.clone(), y, matrix).unwrap();
    let n = 3usize;
    let tuples: Vec<Vec<usize>> = (0..x.dim()).combinations_with_replacement(n + 1).collect();
    let basis: Vec<_> = (0..x.dim()).map(|i| x.basis_element(i)).collect();
    let phi_all_zero = |tuple: &Vec<usize>| {
        let args: Vec<_> = tuple.iter().map(|&i| basis[i].clone()).collect();
        phi_recursive(&tau, &args).unwrap().is_zero()
    };

    let mut group = c.benchmark_group("phi-vanishing-sweep");
    group.bench_function("dispatch", |b| {
        b.iter(|| sweep::first_failure(&tuples, phi_all_zero))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| sweep::first_failure_seq(&tuples, phi_all_zero))
    });
    group.finish();
}

/// Bulk round-trip enumeration: every multiset map t: Y -> Sym^2(X) with
/// |X| = 4, |Y| = 4 (10^4 maps), inverted back through frobenius_to_map.
fn enumeration_sweep(c: &mut Criterion) {
    let x_labels: Vec<String> = (0..4).map(|i| format!("x{i}")).collect();
    let y_labels: Vec<String> = (0..4).map(|j| format!("y{j}")).collect();
    let cx = CommutativeAlgebra::function_algebra(x_labels.clone(), Backend::Rational, 0.0).unwrap();
    let cy = CommutativeAlgebra::function_algebra(y_labels, Backend::Rational, 0.0).unwrap();
    let n = 2usize;
    let multisets = enumerate_multisets(&x_labels, n);
    let count = multisets.len().pow(4);
    let assignments: Vec<usize> = (0..count).collect();
    let round_trips = |&idx: &usize| {
        let mut code = idx;
        let t: Vec<&Multiset> = (0..4)
            .map(|_| {
                let ms = &multisets[code % multisets.len()];
                code /= multisets.len();
                ms
            })
            .collect();
        let matrix: Vec<Vec<Scalar>> = t
            .iter()
            .map(|ms| {
                x_labels.iter().map(|xl| Scalar::from_int(ms.multiplicity(xl) as i64)).collect()
            })
            .collect();
        let f = LinearMap::new(cx.clone(), cy.clone(), matrix).unwrap();
        match frobenius_to_map(&f, n) {
            Ok(recovered) => recovered.iter().zip(&t).all(|(a, b)| &a == b),
            Err(_) => false,
        }
    };

    let mut group = c.benchmark_group("round-trip-enumeration");
    group.sample_size(10);
    group.bench_function("dispatch", |b| {
        b.iter(|| sweep::first_failure(&assignments, round_trips))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| sweep::first_failure_seq(&assignments, round_trips))
    });
    group.finish();
}

criterion_group!(benches, phi_sweep, enumeration_sweep);
criterion_main!(benches);
