//! Closed-form spin-3/2 components of the Penrose rays in the angular
//! momentum basis, as published, used only to validate the construction.
//!
//! P, M, Q and R are omitted: their printed second components group the
//! imaginary term ambiguously against the 1/(4√2) prefactor.

use num_complex::Complex64;

use super::geometry::{RayLabel, VertexLabel};
use crate::numerics::{omega, tau, FloatRay};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn ray(v: [Complex64; 4]) -> FloatRay {
    FloatRay::new(v.to_vec()).expect("published rays are finite and nonzero")
}

/// The sixteen explicit rays with unambiguous closed forms, exactly as printed.
///
/// The printed `I` carries a sign error in the imaginary part of its second
/// component (it repeats `H`'s value); see [`explicit_i_corrected`].
pub fn explicit_rays_as_printed() -> Vec<(RayLabel, FloatRay)> {
    use VertexLabel::*;
    let t = tau();
    let w = omega();
    let w2 = w * w;
    let r2 = 2f64.sqrt();
    let r3 = 3f64.sqrt();
    let r5 = 5f64.sqrt();
    let s53 = (5.0f64 / 3.0).sqrt();
    let one = c(1.0, 0.0);
    let zero = c(0.0, 0.0);
    let re = |x: f64| c(x, 0.0);
    let rows: Vec<(VertexLabel, [Complex64; 4])> = vec![
        (A, [zero, one, zero, zero]),
        (T, [zero, zero, one, zero]),
        (
            F,
            [re(t / 3.0), re(-1.0 / r3), re(-1.0 / r3), re(-1.0 / (3.0 * t))],
        ),
        (B, [re(t / 3.0), -w / r3, -w2 / r3, re(-1.0 / (3.0 * t))]),
        (E, [re(t / 3.0), -w2 / r3, -w / r3, re(-1.0 / (3.0 * t))]),
        (
            L,
            [
                re(2.0 / 3.0),
                zero,
                -0.25 * c(1.0 / r3, r5),
                0.25 * c(r5 / 3.0, -r3),
            ],
        ),
        (
            K,
            [
                re(2.0 / 3.0),
                zero,
                -0.25 * c(1.0 / r3, -r5),
                0.25 * c(r5 / 3.0, r3),
            ],
        ),
        (
            G,
            [
                re(2.0 / 3.0),
                zero,
                c(r3 / 8.0 * (1.0 / 3.0 + r5), (1.0 - r5) / 8.0),
                0.25 * c(r5 / 3.0, r3),
            ],
        ),
        (
            J,
            [
                re(2.0 / 3.0),
                zero,
                c(r3 / 8.0 * (1.0 / 3.0 + r5), -(1.0 - r5) / 8.0),
                0.25 * c(r5 / 3.0, -r3),
            ],
        ),
        (
            C,
            [
                re(2.0 / 3.0),
                zero,
                c(r3 / 8.0 * (1.0 / 3.0 - r5), (1.0 + r5) / 8.0),
                0.25 * c(r5 / 3.0, -r3),
            ],
        ),
        (
            D,
            [
                re(2.0 / 3.0),
                zero,
                c(r3 / 8.0 * (1.0 / 3.0 - r5), -(1.0 + r5) / 8.0),
                0.25 * c(r5 / 3.0, r3),
            ],
        ),
        (N, [re(1.0 / (3.0 * t)), re(-1.0 / r3), re(1.0 / r3), re(t / 3.0)]),
        (U, [re(1.0 / (3.0 * t)), -w / r3, w2 / r3, re(t / 3.0)]),
        (S, [re(1.0 / (3.0 * t)), -w2 / r3, w / r3, re(t / 3.0)]),
        (
            I,
            [
                re(r2 / 3.0),
                c(-s53, 1.0) / (2.0 * r2),
                zero,
                -c(r5 / 3.0, -r3) / (2.0 * r2),
            ],
        ),
        (
            H,
            [
                re(r2 / 3.0),
                c(-s53, 1.0) / (2.0 * r2),
                zero,
                -c(r5 / 3.0, r3) / (2.0 * r2),
            ],
        ),
    ];
    rows.into_iter()
        .map(|(v, comps)| (RayLabel::explicit(v), ray(comps)))
        .collect()
}

/// `I` with the imaginary part of its second component negated.
pub fn explicit_i_corrected() -> FloatRay {
    let r2 = 2f64.sqrt();
    let r3 = 3f64.sqrt();
    let r5 = 5f64.sqrt();
    ray([
        c(r2 / 3.0, 0.0),
        c(-(5.0f64 / 3.0).sqrt(), -1.0) / (2.0 * r2),
        c(0.0, 0.0),
        -c(r5 / 3.0, -r3) / (2.0 * r2),
    ])
}

/// The normalized implicit ray A′ = [i/(√3τ), 0, 0, iτ/√3].
pub fn implicit_a_prime() -> FloatRay {
    let t = tau();
    let r3 = 3f64.sqrt();
    ray([c(0.0, 1.0 / (r3 * t)), c(0.0, 0.0), c(0.0, 0.0), c(0.0, t / r3)])
}

/// The basis-change matrix rows as printed: F, B, E (unconjugated) and conj(A′).
pub fn basis_change_as_printed() -> [[Complex64; 4]; 4] {
    let t = tau();
    let w = omega();
    let w2 = w * w;
    let r3 = 3f64.sqrt();
    let re = |x: f64| c(x, 0.0);
    [
        [re(t / 3.0), re(-1.0 / r3), re(-1.0 / r3), re(-1.0 / (3.0 * t))],
        [re(t / 3.0), -w / r3, -w2 / r3, re(-1.0 / (3.0 * t))],
        [re(t / 3.0), -w2 / r3, -w / r3, re(-1.0 / (3.0 * t))],
        [c(0.0, -1.0 / (r3 * t)), c(0.0, 0.0), c(0.0, 0.0), c(0.0, -t / r3)],
    ]
}
