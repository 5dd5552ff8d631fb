//! Property-based checks for the algebraic laws of the complex field,
//! the belief measures, and the generalized combination rule.

use std::f64::consts::PI;

use gds_core::{
    classical_combine, combine, conflict, Bba, Cbba, Complex, Frame, Polar, Proposition,
};
use num_complex::Complex64;
use proptest::prelude::*;

// =============================================================================
// STRATEGIES
// =============================================================================

fn complex_in(bound: f64) -> impl Strategy<Value = Complex> {
    (-bound..bound, -bound..bound).prop_map(|(re, im)| Complex::new(re, im))
}

fn unit_polar() -> impl Strategy<Value = Polar> {
    (0.0..=1.0f64, -PI..=PI).prop_map(|(r, t)| Polar::new(r, t).unwrap())
}

fn frame(n: usize) -> Frame {
    Frame::new((0..n).map(|i| format!("E{}", i + 1))).unwrap()
}

/// Complex masses on a random subset of non-empty propositions.
///
/// All but one focal mass are drawn in polar form; the last one absorbs
/// `1 - Σ`. When the remainder would exceed unit magnitude, the drawn
/// masses are rotated so their sum is real and positive, which brings it
/// back inside the unit disk around 1.
fn cbba_on(n: usize) -> impl Strategy<Value = Cbba> {
    let subsets = (1u32 << n) - 1;
    (
        prop::collection::vec((any::<bool>(), 0.0..1.0f64, -PI..PI), subsets as usize),
        1..=subsets,
    )
        .prop_map(move |(draws, sink)| build_cbba(&frame(n), &draws, sink))
}

fn build_cbba(f: &Frame, draws: &[(bool, f64, f64)], sink: u32) -> Cbba {
    let chosen: Vec<(u32, f64, f64)> = draws
        .iter()
        .enumerate()
        .map(|(i, &(keep, r, t))| (i as u32 + 1, keep, r, t))
        .filter(|&(bits, keep, _, _)| keep && bits != sink)
        .map(|(bits, _, r, t)| (bits, r, t))
        .collect();
    let scale = if chosen.len() > 2 {
        2.0 / chosen.len() as f64
    } else {
        1.0
    };
    let mut masses: Vec<(u32, Complex)> = chosen
        .iter()
        .map(|&(bits, r, t)| (bits, Polar::new(r * scale, t).unwrap().to_complex()))
        .collect();
    let s: Complex = masses.iter().map(|(_, m)| *m).sum();
    if (Complex::ONE - s).modulus() > 1.0 && s.modulus() > 0.0 {
        let rot = s.conj().scale(1.0 / s.modulus());
        for (_, m) in &mut masses {
            *m = *m * rot;
        }
    }
    let s: Complex = masses.iter().map(|(_, m)| *m).sum();
    masses.push((sink, Complex::ONE - s));
    Cbba::new(
        f,
        masses
            .into_iter()
            .map(|(bits, m)| (f.proposition_from_bits(bits).unwrap(), m)),
    )
    .expect("generator yields valid CBBAs")
}

fn bba_on(n: usize) -> impl Strategy<Value = Bba> {
    let subsets = (1u32 << n) - 1;
    prop::collection::vec(prop_oneof![Just(0.0), 0.01..1.0f64], subsets as usize)
        .prop_filter("some positive weight", |w| w.iter().any(|&x| x > 0.0))
        .prop_map(move |w| {
            let f = frame(n);
            let total: f64 = w.iter().sum();
            Bba::new(
                &f,
                w.iter()
                    .enumerate()
                    .map(|(i, &x)| (f.proposition_from_bits(i as u32 + 1).unwrap(), x / total)),
            )
            .unwrap()
        })
}

fn cbba_pair() -> impl Strategy<Value = (Cbba, Cbba)> {
    (2usize..=4).prop_flat_map(|n| (cbba_on(n), cbba_on(n)))
}

fn cbba_triple() -> impl Strategy<Value = (Cbba, Cbba, Cbba)> {
    (2usize..=4).prop_flat_map(|n| (cbba_on(n), cbba_on(n), cbba_on(n)))
}

fn cbba_any() -> impl Strategy<Value = Cbba> {
    (2usize..=4).prop_flat_map(cbba_on)
}

fn same_masses(a: &Cbba, b: &Cbba, tol: f64) -> Result<(), TestCaseError> {
    for p in a.frame().powerset() {
        let (x, y) = (a.mass(&p).unwrap(), b.mass(&p).unwrap());
        prop_assert!(x.max_abs_diff(y) <= tol, "{p}: {x} vs {y}");
    }
    Ok(())
}

// =============================================================================
// INDEPENDENT ORACLE
// =============================================================================

/// Dense 2^N × 2^N evaluation of the combination rule with `num_complex`.
fn oracle_combine(m1: &Cbba, m2: &Cbba) -> Option<Vec<Complex64>> {
    let props: Vec<Proposition> = m1.frame().powerset().collect();
    let to64 = |z: Complex| Complex64::new(z.re(), z.im());
    let size = props.len();
    let mut acc = vec![Complex64::new(0.0, 0.0); size];
    let mut k = Complex64::new(0.0, 0.0);
    for a in &props {
        for b in &props {
            let c = a.intersect(b).unwrap();
            let prod = to64(m1.mass(a).unwrap()) * to64(m2.mass(b).unwrap());
            if c.is_empty() {
                k += prod;
            } else {
                acc[c.bits() as usize] += prod;
            }
        }
    }
    let denom = Complex64::new(1.0, 0.0) - k;
    if denom.norm() < 1e-9 {
        return None;
    }
    Some(acc.into_iter().map(|z| z / denom).collect())
}

// =============================================================================
// COMPLEX FIELD
// =============================================================================

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn polar_round_trip(p in unit_polar()) {
        let q = Complex::from_polar(p).to_polar();
        prop_assert!((q.magnitude() - p.magnitude()).abs() <= 1e-12);
        prop_assert!((q.phase() - p.phase()).abs() <= 1e-12, "{p:?} -> {q:?}");
    }

    #[test]
    fn rectangular_round_trip(z in complex_in(1.0)) {
        let back = Complex::from_polar(z.to_polar());
        prop_assert!(back.max_abs_diff(z) <= 1e-12);
    }

    #[test]
    fn field_axioms(a in complex_in(2.0), b in complex_in(2.0), c in complex_in(2.0)) {
        prop_assert!((a + b).max_abs_diff(b + a) <= 1e-12);
        prop_assert!((a * b).max_abs_diff(b * a) <= 1e-12);
        prop_assert!(((a + b) + c).max_abs_diff(a + (b + c)) <= 1e-12);
        prop_assert!(((a * b) * c).max_abs_diff(a * (b * c)) <= 1e-12);
        prop_assert!((a * (b + c)).max_abs_diff(a * b + a * c) <= 1e-12);
    }

    #[test]
    fn arithmetic_matches_num_complex(a in complex_in(2.0), b in complex_in(2.0)) {
        let (x, y) = (Complex64::new(a.re(), a.im()), Complex64::new(b.re(), b.im()));
        let close = |z: Complex, w: Complex64| (z.re() - w.re).abs().max((z.im() - w.im).abs());
        prop_assert!(close(a + b, x + y) <= 1e-12);
        prop_assert!(close(a - b, x - y) <= 1e-12);
        prop_assert!(close(a * b, x * y) <= 1e-12);
        prop_assume!(b.modulus() > 1e-3);
        prop_assert!(close(a.checked_div(b).unwrap(), x / y) <= 1e-9);
    }

    #[test]
    fn modulus_laws(a in complex_in(2.0), b in complex_in(2.0)) {
        prop_assert!(((a * b).modulus() - a.modulus() * b.modulus()).abs() <= 1e-12);
        prop_assert!((a.modulus_sq() - a.modulus().powi(2)).abs() <= 1e-12);
        prop_assert!(((a * a.conj()).re() - a.modulus_sq()).abs() <= 1e-12);
    }

    #[test]
    fn division_inverts_multiplication(a in complex_in(2.0), b in complex_in(2.0)) {
        prop_assume!(b.modulus() > 1e-9);
        let back = (a * b).checked_div(b).unwrap();
        prop_assert!(back.max_abs_diff(a) <= 1e-10);
    }
}

// =============================================================================
// MASS FUNCTIONS
// =============================================================================

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn belief_bounds_plausibility(m in cbba_any()) {
        let f = m.frame().clone();
        let total: f64 = m.focal_elements().iter().map(|(_, z)| z.modulus()).sum();
        prop_assert!((m.bel_c(&f.omega()).unwrap() - total).abs() <= 1e-12);
        prop_assert!((m.pl_c(&f.omega()).unwrap() - total).abs() <= 1e-12);
        for a in f.powerset() {
            let (bel, pl) = (m.bel_c(&a).unwrap(), m.pl_c(&a).unwrap());
            prop_assert!(pl >= bel - 1e-12);
            for b in f.powerset() {
                if a.is_subset(&b).unwrap() {
                    prop_assert!(bel <= m.bel_c(&b).unwrap() + 1e-12);
                    prop_assert!(pl <= m.pl_c(&b).unwrap() + 1e-12);
                }
            }
        }
    }

    #[test]
    fn lift_preserves_validity_and_beliefs(b in (2usize..=4).prop_flat_map(bba_on)) {
        let lifted = b.lift();
        let f = b.frame().clone();
        let revalidated = Cbba::new(&f, lifted.iter());
        prop_assert!(revalidated.is_ok());
        for a in f.powerset() {
            prop_assert_eq!(lifted.bel_c(&a).unwrap(), b.bel(&a).unwrap());
            prop_assert_eq!(lifted.pl_c(&a).unwrap(), b.pl(&a).unwrap());
        }
    }
}

// =============================================================================
// COMBINATION RULE
// =============================================================================

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn combination_is_normalized((m1, m2) in cbba_pair()) {
        let r = conflict(&m1, &m2).unwrap();
        prop_assume!(!r.singular);
        let fused = combine(&m1, &m2).unwrap();
        prop_assert!(fused.total().max_abs_diff(Complex::ONE) <= 1e-9);
        prop_assert_eq!(fused.mass(&fused.frame().empty_set()).unwrap(), Complex::ZERO);
    }

    #[test]
    fn conflict_partitions_product_mass((m1, m2) in cbba_pair()) {
        let r = conflict(&m1, &m2).unwrap();
        let f = m1.frame().clone();
        let mut joint = Complex::ZERO;
        for a in f.powerset() {
            for b in f.powerset() {
                if !a.intersect(&b).unwrap().is_empty() {
                    joint += m1.mass(&a).unwrap() * m2.mass(&b).unwrap();
                }
            }
        }
        prop_assert!((r.k + joint).max_abs_diff(Complex::ONE) <= 1e-12);
    }

    #[test]
    fn combination_commutes((m1, m2) in cbba_pair()) {
        prop_assume!(!conflict(&m1, &m2).unwrap().singular);
        same_masses(&combine(&m1, &m2).unwrap(), &combine(&m2, &m1).unwrap(), 1e-12)?;
    }

    #[test]
    fn combination_associates((m1, m2, m3) in cbba_triple()) {
        let (Ok(l12), Ok(r23)) = (combine(&m1, &m2), combine(&m2, &m3)) else {
            return Err(TestCaseError::reject("singular first step"));
        };
        let (Ok(left), Ok(right)) = (combine(&l12, &m3), combine(&m1, &r23)) else {
            return Err(TestCaseError::reject("singular second step"));
        };
        same_masses(&left, &right, 1e-9)?;
    }

    #[test]
    fn vacuous_is_two_sided_identity(m in cbba_any()) {
        let v = Cbba::vacuous(m.frame());
        same_masses(&combine(&v, &m).unwrap(), &m, 1e-12)?;
        same_masses(&combine(&m, &v).unwrap(), &m, 1e-12)?;
    }

    #[test]
    fn degenerates_to_classical_rule(
        (b1, b2) in (2usize..=4).prop_flat_map(|n| (bba_on(n), bba_on(n)))
    ) {
        let Ok(classical) = classical_combine(&b1, &b2) else {
            return Err(TestCaseError::reject("total conflict"));
        };
        let fused = combine(&b1.lift(), &b2.lift()).unwrap();
        for p in b1.frame().powerset() {
            let z = fused.mass(&p).unwrap();
            prop_assert!(z.im().abs() < 1e-12);
            prop_assert!((z.re() - classical.mass(&p).unwrap()).abs() <= 1e-12);
        }
    }

    #[test]
    fn matches_dense_oracle((m1, m2) in (2usize..=3).prop_flat_map(|n| (cbba_on(n), cbba_on(n)))) {
        let Some(expected) = oracle_combine(&m1, &m2) else {
            return Err(TestCaseError::reject("singular"));
        };
        let fused = combine(&m1, &m2).unwrap();
        for p in m1.frame().powerset() {
            let z = fused.mass(&p).unwrap();
            let w = expected[p.bits() as usize];
            prop_assert!((z.re() - w.re).abs().max((z.im() - w.im).abs()) <= 1e-12);
        }
    }
}
