use crate::error::{domain, Result};

/// Empirical distribution function of a finite sample.
#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalCDF {
    sorted: Vec<f64>,
}

impl EmpiricalCDF {
    pub fn new(mut sample: Vec<f64>) -> Result<Self> {
        if sample.is_empty() {
            return domain("empirical CDF of an empty sample");
        }
        if sample.iter().any(|v| v.is_nan()) {
            return domain("NaN in sample");
        }
        sample.sort_by(f64::total_cmp);
        Ok(Self { sorted: sample })
    }

    pub fn count(&self) -> usize {
        self.sorted.len()
    }

    pub fn sorted(&self) -> &[f64] {
        &self.sorted
    }

    /// Fraction of the sample `<= x`.
    pub fn eval(&self, x: f64) -> f64 {
        self.sorted.partition_point(|&v| v <= x) as f64 / self.count() as f64
    }

    /// Lower empirical quantile, `q` in `[0, 1]`.
    pub fn quantile(&self, q: f64) -> f64 {
        let k = ((q.clamp(0.0, 1.0) * self.count() as f64).ceil() as usize).clamp(1, self.count());
        self.sorted[k - 1]
    }

    pub fn median(&self) -> f64 {
        self.quantile(0.5)
    }
}

/// `sup_x |F_emp(x) - F(x)|`, checking both sides of every jump.
pub fn ks_distance(emp: &EmpiricalCDF, reference: impl Fn(f64) -> f64) -> f64 {
    let n = emp.count() as f64;
    let s = emp.sorted();
    let mut d = 0f64;
    let mut i = 0;
    while i < s.len() {
        let x = s[i];
        let mut j = i;
        while j < s.len() && s[j] == x {
            j += 1;
        }
        let f = reference(x);
        d = d.max((f - i as f64 / n).abs()).max((j as f64 / n - f).abs());
        i = j;
    }
    d
}

/// Two-sample Kolmogorov–Smirnov statistic.
pub fn ks_two_sample(a: &EmpiricalCDF, b: &EmpiricalCDF) -> f64 {
    let (sa, sb) = (a.sorted(), b.sorted());
    let (na, nb) = (sa.len() as f64, sb.len() as f64);
    let (mut i, mut j, mut d) = (0usize, 0usize, 0f64);
    while i < sa.len() && j < sb.len() {
        let x = sa[i].min(sb[j]);
        while i < sa.len() && sa[i] <= x {
            i += 1;
        }
        while j < sb.len() && sb[j] <= x {
            j += 1;
        }
        d = d.max((i as f64 / na - j as f64 / nb).abs());
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::RandomStream;
    use rand::Rng;

    #[test]
    fn edges() {
        let e = EmpiricalCDF::new(vec![3.0, 1.0, 2.0]).unwrap();
        assert_eq!(e.eval(f64::NEG_INFINITY), 0.0);
        assert_eq!(e.eval(f64::INFINITY), 1.0);
        assert_eq!(e.eval(2.0), 2.0 / 3.0);
        assert_eq!(e.median(), 2.0);
        assert!(EmpiricalCDF::new(vec![]).is_err());
        assert!(EmpiricalCDF::new(vec![f64::NAN]).is_err());
    }

    #[test]
    fn own_quantiles() {
        let n = 1000;
        let e = EmpiricalCDF::new((1..=n).map(|i| (i as f64 - 0.5) / n as f64).collect()).unwrap();
        assert!(ks_distance(&e, |x| x.clamp(0.0, 1.0)) <= 1.0 / n as f64 + 1e-15);
    }

    #[test]
    fn single_sample_at_median() {
        let e = EmpiricalCDF::new(vec![0.5]).unwrap();
        assert_eq!(ks_distance(&e, |x| x.clamp(0.0, 1.0)), 0.5);
    }

    #[test]
    fn uniform_sample() {
        let mut rng = RandomStream::new(2, 0).rng();
        let e = EmpiricalCDF::new((0..100_000).map(|_| rng.random::<f64>()).collect()).unwrap();
        assert!(ks_distance(&e, |x| x.clamp(0.0, 1.0)) <= 0.01);
    }

    #[test]
    fn two_sample() {
        let a = EmpiricalCDF::new(vec![1.0, 2.0, 3.0]).unwrap();
        assert_eq!(ks_two_sample(&a, &a), 0.0);
        let b = EmpiricalCDF::new(vec![4.0, 5.0]).unwrap();
        assert_eq!(ks_two_sample(&a, &b), 1.0);
        let c = EmpiricalCDF::new(vec![1.5, 2.5, 3.5]).unwrap();
        assert!((ks_two_sample(&a, &c) - 1.0 / 3.0).abs() < 1e-15);
    }
}
