//! Sample m-th Gini index.
//!
//! For observations X₁,…,X_n and 2 ≤ m ≤ n the estimator is
//!
//! ```text
//!            (m−1)!           Σ over m-subsets (max − min)
//! ÎG_m = ─────────────────── · ────────────────────────────
//!        (n−1)(n−2)⋯(n−m+1)            Σ_i X_i
//! ```
//!
//! `ig_hat_naive` evaluates this by literal subset enumeration and serves as
//! the test oracle. `ig_hat_fast` sorts the sample once and collapses the
//! subset sum through order statistics: x₍ᵢ₎ is the maximum of C(i−1, m−1)
//! subsets and the minimum of C(n−i, m−1), so the whole numerator is a single
//! weighted pass. With the normalization above the weights reduce to
//! [C(i−1,m−1) − C(n−i,m−1)] / C(n−1,m−1), which keeps everything in [−1, 1].

use crate::error::{Error, Result};
use crate::population::GiniOrder;
use crate::special::binomial;

/// Subset-enumeration guard for the oracle path.
const MAX_NAIVE_SUBSETS: f64 = 1e7;

/// An observed sample: at least two finite, non-negative values.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    values: Vec<f64>,
}

impl Sample {
    /// Validates and wraps raw observations.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::Sample(format!(
                "need at least 2 observations, got {}",
                values.len()
            )));
        }
        for (i, v) in values.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::Sample(format!("observation {i} is not finite: {v}")));
            }
            if *v < 0.0 {
                return Err(Error::Sample(format!("observation {i} is negative: {v}")));
            }
        }
        Ok(Sample { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

fn check_order(sample: &Sample, m: GiniOrder) -> Result<(usize, usize)> {
    let n = sample.len();
    let m = m.get() as usize;
    if m > n {
        return Err(Error::Sample(format!(
            "order m = {m} exceeds sample size n = {n}"
        )));
    }
    Ok((n, m))
}

/// Sample m-th Gini index by literal enumeration of all m-subsets.
///
/// Intended as an oracle: the subset count C(n, m) must stay below 10⁷.
pub fn ig_hat_naive(sample: &Sample, m: GiniOrder) -> Result<f64> {
    let (n, m) = check_order(sample, m)?;

    let mut subset_count = 1.0f64;
    for i in 1..=m {
        subset_count *= (n - m + i) as f64 / i as f64;
    }
    if subset_count > MAX_NAIVE_SUBSETS {
        return Err(Error::Domain(format!(
            "C({n}, {m}) ~ {subset_count:.3e} subsets exceeds the enumeration guard"
        )));
    }

    let values = sample.values();
    let total: f64 = values.iter().sum();
    if total == 0.0 {
        return Err(Error::Sample(
            "all observations are zero; the estimator is undefined".into(),
        ));
    }

    // Lexicographic walk over index subsets of size m.
    let mut idx: Vec<usize> = (0..m).collect();
    let mut range_sum = 0.0f64;
    loop {
        let mut max = f64::MIN;
        let mut min = f64::MAX;
        for &i in &idx {
            max = max.max(values[i]);
            min = min.min(values[i]);
        }
        range_sum += max - min;

        // Advance to the next combination.
        let mut pos = m;
        while pos > 0 {
            pos -= 1;
            if idx[pos] != pos + n - m {
                idx[pos] += 1;
                for j in pos + 1..m {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
            if pos == 0 {
                let coeff: f64 = (1..m).map(|j| j as f64 / (n - j) as f64).product();
                return Ok(coeff * range_sum / total);
            }
        }
    }
}

/// Normalized order-statistic weights [C(i−1,m−1) − C(n−i,m−1)] / C(n−1,m−1)
/// for i = 1..n. Exact integer arithmetic up to n = 64; beyond that the
/// ratios are built by a downward recurrence in log space,
/// ln r(i) = ln r(i+1) + ln(i−m+1) − ln(i), which never overflows.
fn normalized_weights(n: usize, m: usize) -> Vec<f64> {
    let mut max_ratio = vec![0.0f64; n + 1];
    if n <= 64 {
        let denom =
            binomial(n as u32 - 1, m as u32 - 1).expect("n <= 64 stays on the exact path") as f64;
        for (i, ratio) in max_ratio.iter_mut().enumerate().skip(m) {
            let num = binomial(i as u32 - 1, m as u32 - 1)
                .expect("i <= n <= 64 stays on the exact path") as f64;
            *ratio = num / denom;
        }
    } else {
        let mut log_r = 0.0f64;
        max_ratio[n] = 1.0;
        for i in (m..n).rev() {
            // r(i) = r(i+1) · (i − m + 1) / i
            log_r += ((i - m + 1) as f64).ln() - (i as f64).ln();
            max_ratio[i] = log_r.exp();
        }
    }
    (1..=n)
        .map(|i| max_ratio[i] - max_ratio[n + 1 - i])
        .collect()
}

/// Sample m-th Gini index in O(n log n): sort ascending, then take one
/// weighted pass over the order statistics. Agrees with `ig_hat_naive` to
/// floating-point accuracy, including on tied data.
pub fn ig_hat_fast(sample: &Sample, m: GiniOrder) -> Result<f64> {
    let (n, m) = check_order(sample, m)?;

    let mut sorted = sample.values().to_vec();
    sorted.sort_by(f64::total_cmp);
    let total: f64 = sorted.iter().sum();
    if total == 0.0 {
        return Err(Error::Sample(
            "all observations are zero; the estimator is undefined".into(),
        ));
    }
    if sorted[0] == sorted[n - 1] {
        // Constant sample: every subset has max = min.
        return Ok(0.0);
    }

    let weights = normalized_weights(n, m);
    let numerator: f64 = sorted.iter().zip(&weights).map(|(x, w)| w * x).sum();
    Ok(numerator / total)
}

/// Classical sample Gini coefficient, the m = 2 case:
/// (1/(n−1)) Σ_{i<j} |Xᵢ − Xⱼ| / Σ_i Xᵢ.
pub fn gini_hat(sample: &Sample) -> Result<f64> {
    ig_hat_fast(sample, GiniOrder::new(2).expect("2 is a valid order"))
}
