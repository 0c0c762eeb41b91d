use critballs::balls::{
    log_volume_schatten2, log_volume_schatten_inf, schatten_dimension, threshold_lp_inf, threshold_schatten,
};
use critballs::estimators::MCEstimate;
use critballs::sampling::{lp_norm, sample_uniform_lp_ball, symmetric_tridiagonal_eigenvalues, RandomStream};
use critballs::specfun::log_gamma;
use critballs::{Beta, Exponent};
use nalgebra::DMatrix;
use proptest::prelude::*;

fn exponent() -> impl Strategy<Value = Exponent> {
    prop_oneof![(1.0f64..20.0).prop_map(Exponent::Finite), Just(Exponent::Infinite)]
}

proptest! {
    #[test]
    fn log_gamma_recurrence(u in -1.0f64..6.0) {
        let x = 10f64.powf(u);
        let lhs = log_gamma(x + 1.0).unwrap();
        let rhs = log_gamma(x).unwrap() + x.ln();
        prop_assert!((lhs - rhs).abs() <= 1e-11 * lhs.abs().max(1.0), "x = {x}: {lhs} vs {rhs}");
    }

    #[test]
    fn log_gamma_duplication(x in 0.5f64..100.0) {
        let lhs = log_gamma(2.0 * x).unwrap();
        let rhs = log_gamma(x).unwrap() + log_gamma(x + 0.5).unwrap() + (2.0 * x - 1.0) * std::f64::consts::LN_2
            - 0.5 * std::f64::consts::PI.ln();
        prop_assert!((lhs - rhs).abs() <= 1e-10, "x = {x}: {lhs} vs {rhs}");
    }

    #[test]
    fn schatten_threshold_ignores_beta(p in 1.0f64..20.0, q in exponent()) {
        let p = Exponent::Finite(p);
        let t1 = threshold_schatten(p, q, Beta::One).unwrap();
        prop_assert_eq!(t1, threshold_schatten(p, q, Beta::Two).unwrap());
        prop_assert_eq!(t1, threshold_schatten(p, q, Beta::Four).unwrap());
    }

    #[test]
    fn lp_samples_in_ball(p in exponent(), n in 1usize..60, seed: u64, index: u64) {
        let s = sample_uniform_lp_ball(p, n, &RandomStream::new(seed, index)).unwrap();
        prop_assert_eq!(s.coordinates.len(), n);
        prop_assert!(lp_norm(&s.coordinates, p) <= 1.0 + 1e-12);
    }

    #[test]
    fn streams_reproduce(seed: u64, index: u64, j: u64) {
        use rand::Rng;
        let s = RandomStream::new(seed, index);
        let a: [u64; 4] = s.split(j).rng().random();
        let b: [u64; 4] = RandomStream::new(seed, index).split(j).rng().random();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn tridiagonal_matches_dense_oracle(
        diag in prop::collection::vec(-10.0f64..10.0, 1..40),
        seed in prop::collection::vec(-5.0f64..5.0, 39),
    ) {
        let n = diag.len();
        let sub = &seed[..n - 1];
        let ev = symmetric_tridiagonal_eigenvalues(&diag, sub).unwrap();
        let dense = DMatrix::from_fn(n, n, |i, j| {
            if i == j { diag[i] } else if i + 1 == j { sub[i] } else if j + 1 == i { sub[j] } else { 0.0 }
        });
        let mut oracle: Vec<f64> = dense.symmetric_eigenvalues().iter().copied().collect();
        oracle.sort_by(f64::total_cmp);
        let scale = dense.norm().max(1.0);
        prop_assert!(ev.windows(2).all(|w| w[0] <= w[1]));
        for (a, b) in ev.iter().zip(&oracle) {
            prop_assert!((a - b).abs() <= 1e-10 * scale, "{a} vs {b}");
        }
    }

    #[test]
    fn bernoulli_estimate_bounds(count in 1u64..100_000, frac in 0.0f64..=1.0) {
        let successes = (frac * count as f64).floor() as u64;
        let e = MCEstimate::from_counts(successes, count, 0).unwrap();
        prop_assert!((0.0..=1.0).contains(&e.value));
        prop_assert!(e.stderr <= 0.5 / (count as f64).sqrt() + 1e-15);
    }
}

#[test]
fn schatten_two_ball_inside_operator_ball() {
    for beta in Beta::ALL {
        for n in 1..=200 {
            let d = schatten_dimension(beta, n) as f64;
            let two = log_volume_schatten2(beta, n).unwrap().value;
            let inf = log_volume_schatten_inf(beta, n).unwrap().value;
            assert!(two <= inf, "beta {beta}, n {n}");
            let (r2, rinf) = ((two / d).exp(), (inf / d).exp());
            assert!(r2.is_finite() && r2 > 0.0 && rinf.is_finite() && rinf > 0.0);
            assert!(r2 <= rinf * (n as f64).sqrt() * 1.5);
        }
    }
}

#[test]
fn lp_threshold_increases_to_one() {
    let grid = [1.0, 1.5, 2.0, 4.0, 10.0];
    let vals: Vec<f64> = grid
        .iter()
        .map(|&p| threshold_lp_inf(Exponent::Finite(p)).unwrap())
        .chain(std::iter::once(threshold_lp_inf(Exponent::Infinite).unwrap()))
        .collect();
    assert!(vals.windows(2).all(|w| w[0] < w[1]), "{vals:?}");
    assert_eq!(*vals.last().unwrap(), 1.0);
}
