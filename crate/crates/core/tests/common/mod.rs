//! Random matrix generators shared by the property suites.
#![allow(dead_code)]

use noninertial_core::{ComplexMatrix, DensityMatrix};
use num_complex::Complex64;
use proptest::prelude::*;

pub fn complex_vec(len: usize) -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), len)
        .prop_map(|v| v.into_iter().map(|(re, im)| Complex64::new(re, im)).collect())
}

fn square(dim: usize, data: &[Complex64]) -> ComplexMatrix {
    let rows: Vec<Vec<Complex64>> = data.chunks(dim).map(<[_]>::to_vec).collect();
    ComplexMatrix::from_rows(&rows).unwrap()
}

pub fn hermitian(dim: usize) -> impl Strategy<Value = ComplexMatrix> {
    complex_vec(dim * dim).prop_map(move |v| square(dim, &v).hermitian_part())
}

/// Ginibre-style density matrix G G† / Tr(G G†), full rank with probability 1.
pub fn density(qubits: usize) -> impl Strategy<Value = DensityMatrix> {
    let dim = 1 << qubits;
    complex_vec(dim * dim)
        .prop_filter("non-degenerate", |v| {
            v.iter().map(|z| z.norm_sqr()).sum::<f64>() > 1e-3
        })
        .prop_map(move |v| {
            let g = square(dim, &v);
            let gg = g.matmul(&g.adjoint());
            let tr = gg.trace().re;
            DensityMatrix::new(gg.scale_real(1.0 / tr).hermitian_part()).unwrap()
        })
}

pub fn householder(v: &[Complex64]) -> ComplexMatrix {
    let n = v.len();
    let norm2: f64 = v.iter().map(|z| z.norm_sqr()).sum();
    let outer = ComplexMatrix::outer(v).scale_real(2.0 / norm2);
    &ComplexMatrix::identity(n) - &outer
}

/// Product of two Householder reflections times a diagonal phase.
pub fn unitary(dim: usize) -> impl Strategy<Value = ComplexMatrix> {
    (
        complex_vec(dim),
        complex_vec(dim),
        prop::collection::vec(0.0f64..std::f64::consts::TAU, dim),
    )
        .prop_filter("non-zero reflectors", |(a, b, _)| {
            a.iter().map(|z| z.norm_sqr()).sum::<f64>() > 1e-3
                && b.iter().map(|z| z.norm_sqr()).sum::<f64>() > 1e-3
        })
        .prop_map(|(a, b, phases)| {
            let mut d = ComplexMatrix::zeros(phases.len(), phases.len());
            for (k, ph) in phases.iter().enumerate() {
                d[(k, k)] = Complex64::from_polar(1.0, *ph);
            }
            householder(&a).matmul(&householder(&b)).matmul(&d)
        })
}

pub fn assert_valid(rho: &DensityMatrix) {
    let m = rho.matrix();
    assert!(
        m.hermitian_deviation() <= 1e-12,
        "hermitian deviation {}",
        m.hermitian_deviation()
    );
    assert!((m.trace().re - 1.0).abs() <= 1e-12, "trace {}", m.trace());
    let min = rho.eigenvalues()[0];
    assert!(min >= -1e-10, "min eigenvalue {min}");
}
