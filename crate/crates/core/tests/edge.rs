//! Sampled extreme-eigenvalue statistics against the tabulated Tracy–Widom
//! and Gumbel laws.

use critballs::estimators::{
    gumbel_check, ks_distance, max_abs_scaling, sample_extremal_pairs, EmpiricalCDF,
};
use critballs::sampling::{sample_uniform_schatten2_ball, RandomStream};
use critballs::tracywidom::{tw_cdf_table, TWTable};
use critballs::Beta;

fn table(beta: Beta) -> TWTable {
    tw_cdf_table(beta, -10.0, 8.0, 0.01).unwrap()
}

fn xmax_ecdf(beta: Beta, n: usize, count: usize, seed: u64) -> EmpiricalCDF {
    let pairs = sample_extremal_pairs(beta, n, count, &RandomStream::new(seed, 0)).unwrap();
    EmpiricalCDF::new(pairs.iter().map(|p| p.xmax).collect()).unwrap()
}

#[test]
fn largest_eigenvalue_follows_f2() {
    let t = table(Beta::Two);
    let ks = ks_distance(&xmax_ecdf(Beta::Two, 200, 2000, 11), |x| t.cdf(x));
    assert!(ks <= 0.06, "KS = {ks}");
}

#[test]
fn largest_eigenvalue_follows_f1() {
    let t = table(Beta::One);
    let ks = ks_distance(&xmax_ecdf(Beta::One, 200, 2000, 12), |x| t.cdf(x));
    assert!(ks <= 0.06, "KS = {ks}");
}

#[test]
fn largest_eigenvalue_follows_rescaled_f4() {
    // the β = 4 edge law in this scaling is F_4(2^{2/3} x)
    let t = table(Beta::Four);
    let c = 2f64.powf(2.0 / 3.0);
    let ks = ks_distance(&xmax_ecdf(Beta::Four, 200, 2000, 13), |x| t.cdf(c * x));
    assert!(ks <= 0.06, "KS = {ks}");
}

fn sup_norm_ecdf(n: usize, count: u64, seed: u64) -> EmpiricalCDF {
    let v = (0..count)
        .map(|j| max_abs_scaling(&sample_uniform_schatten2_ball(Beta::Two, n, &RandomStream::new(seed, j)).unwrap()).unwrap())
        .collect();
    EmpiricalCDF::new(v).unwrap()
}

#[test]
fn schatten_ball_sup_norm_law() {
    let t = table(Beta::Two);
    let limit = |x: f64| t.cdf(x / 2f64.sqrt()).powi(2);

    let e100 = sup_norm_ecdf(100, 2000, 21);
    assert!((e100.eval(0.0) - 0.939684).abs() <= 0.08, "{}", e100.eval(0.0));
    assert!((-3.0..=2.0).contains(&e100.median()), "{}", e100.median());

    let ks = ks_distance(&sup_norm_ecdf(200, 2000, 22), limit);
    assert!(ks <= 0.08, "KS = {ks}");
}

#[test]
fn gumbel_distance_shrinks_with_dimension() {
    let ks: Vec<f64> = [100, 1000, 10_000]
        .iter()
        .map(|&n| gumbel_check(1.0, n, 10_000, &RandomStream::new(31, 0)).unwrap().ks)
        .collect();
    assert!(ks[0] >= ks[1] && ks[1] >= ks[2], "{ks:?}");
    assert!(ks[2] <= 0.05);
}
