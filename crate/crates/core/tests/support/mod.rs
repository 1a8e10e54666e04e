//! Helpers shared by the integration test binaries: the (expensive)
//! Monte Carlo limit-law cache and Kolmogorov-Smirnov distances.

// not every test binary uses every helper
#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::OnceLock;

use rankdep::{NullDist, NullDistSpec};

/// The default 2M-sample null distribution, built once and persisted
/// under the target tmp directory so every test binary in the workspace
/// reuses the same cache file.
pub fn shared_null_dist() -> &'static NullDist {
    static DIST: OnceLock<NullDist> = OnceLock::new();
    DIST.get_or_init(|| {
        let spec = NullDistSpec::default();
        let path = cache_path(&spec);
        NullDist::load_or_build(&path, &spec).expect("null distribution cache")
    })
}

fn cache_path(spec: &NullDistSpec) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(format!(
        "nulldist-j{}-k{}-m{}-s{}.bin",
        spec.j_max, spec.k_max, spec.mc_samples, spec.seed
    ))
}

/// Kolmogorov-Smirnov distance of a sample from U(0,1).
pub fn ks_uniform(vals: &[f64]) -> f64 {
    let mut v = vals.to_vec();
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = v.len() as f64;
    let mut d = 0.0f64;
    for (i, x) in v.iter().enumerate() {
        d = d.max((x - i as f64 / n).abs());
        d = d.max((x - (i + 1) as f64 / n).abs());
    }
    d
}

/// Two-sample Kolmogorov-Smirnov distance.
pub fn ks_two_sample(a: &[f64], b: &[f64]) -> f64 {
    let mut sa = a.to_vec();
    let mut sb = b.to_vec();
    sa.sort_by(|x, y| x.partial_cmp(y).unwrap());
    sb.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let (na, nb) = (sa.len() as f64, sb.len() as f64);
    let (mut i, mut j) = (0usize, 0usize);
    let mut d = 0.0f64;
    while i < sa.len() && j < sb.len() {
        if sa[i] <= sb[j] {
            i += 1;
        } else {
            j += 1;
        }
        d = d.max((i as f64 / na - j as f64 / nb).abs());
    }
    d
}

/// Two-sample KS rejection threshold at level `alpha`,
/// `c(alpha) * sqrt((m+n)/(m n))` with
/// `c(alpha) = sqrt(-ln(alpha/2)/2)`.
pub fn ks_two_sample_threshold(alpha: f64, m: usize, n: usize) -> f64 {
    let c = (-(alpha / 2.0).ln() / 2.0).sqrt();
    c * (((m + n) as f64) / ((m * n) as f64)).sqrt()
}
