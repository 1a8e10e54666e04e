//! The benchmark subcommand: wall-clock times of the statistic
//! computations on one uniform random permutation per size, after a
//! warm-up run, plus a fitted log-log slope per statistic.

use std::fmt::Write as _;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rankdep::{Permutation, Statistic};

pub fn run_benchmark(
    sizes: &[usize],
    stats: &[Statistic],
    seed: u64,
) -> Result<String, rankdep::Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = String::from("n\tstatistic\tseconds\n");
    let mut times = vec![Vec::with_capacity(sizes.len()); stats.len()];
    for &n in sizes {
        let p = Permutation::random(n, &mut rng);
        for (k, stat) in stats.iter().enumerate() {
            std::hint::black_box(stat.compute(&p)?); // warm-up
            let t0 = Instant::now();
            std::hint::black_box(stat.compute(&p)?);
            let secs = t0.elapsed().as_secs_f64();
            times[k].push(secs);
            writeln!(out, "{n}\t{}\t{secs:.6}", stat.name()).unwrap();
        }
    }
    if sizes.len() >= 2 {
        for (k, stat) in stats.iter().enumerate() {
            writeln!(out, "slope\t{}\t{:.4}", stat.name(), slope(sizes, &times[k])).unwrap();
        }
    }
    Ok(out)
}

/// Least-squares slope of log10(seconds) against log10(n).
fn slope(sizes: &[usize], times: &[f64]) -> f64 {
    let xs: Vec<f64> = sizes.iter().map(|&n| (n as f64).log10()).collect();
    let ys: Vec<f64> = times.iter().map(|&t| t.max(1e-9).log10()).collect();
    let m = xs.len() as f64;
    let (mx, my) = (xs.iter().sum::<f64>() / m, ys.iter().sum::<f64>() / m);
    let num: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let den: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_has_rows_and_slopes() {
        let out = run_benchmark(&[500, 1000], &[Statistic::TauStar], 1).unwrap();
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "n\tstatistic\tseconds");
        assert!(lines[1].starts_with("500\ttau_star\t"));
        assert!(lines[2].starts_with("1000\ttau_star\t"));
        assert!(lines[3].starts_with("slope\ttau_star\t"));
    }

    #[test]
    fn slope_of_exact_linear_times_is_one() {
        let s = slope(&[1000, 10_000, 100_000], &[0.001, 0.01, 0.1]);
        assert!((s - 1.0).abs() < 1e-12);
    }
}
