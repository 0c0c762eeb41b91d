//! Monte Carlo estimators and empirical statistics.
//!
//! Sample `j` of every estimator is drawn from `stream.split(j)`, and only
//! integer counts or order-preserving collections are reduced, so results
//! are bit-identical for any number of worker threads.

mod ecdf;
mod extremal;
mod independence;
mod intersection;
mod mc;

pub use ecdf::{ks_distance, ks_two_sample, EmpiricalCDF};
pub use extremal::{
    extremal_scalings, gumbel_check, gumbel_cdf, max_abs_scaling, sample_extremal_pairs, ExtremalPair, GumbelCheck,
};
pub use independence::{default_independence_grid, independence_probe, norm_clt_check, CltSummary, IndependenceReport};
pub use intersection::{
    critical_scan, empirical_threshold, intersection_statistics, intersection_volume_mc, scan, Dilation, ScanRow,
    THRESHOLD_BRACKET, THRESHOLD_TOL,
};
pub use mc::{normal_quantile, MCEstimate, DEFAULT_CI_LEVEL};

use rayon::prelude::*;

use crate::error::Result;
use crate::sampling::RandomStream;

/// Evaluates `f` on the streams `stream.split(0..count)`, in parallel,
/// returning results in sample order.
pub fn par_samples<T, F>(count: usize, stream: &RandomStream, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&RandomStream) -> Result<T> + Sync + Send,
{
    (0..count as u64).into_par_iter().map(|j| f(&stream.split(j))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn par_samples_independent_of_pool_size() {
        let run = |threads| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| par_samples(1000, &RandomStream::new(5, 1), |s| Ok(s.rng().random::<u64>())).unwrap())
        };
        let one = run(1);
        assert_eq!(one, run(3));
        assert_eq!(one, run(8));
    }
}
