//! Monte Carlo behavior of the statistics under the null and on the
//! dependent generators. These tests are statistical but deterministic:
//! every random stream is seeded.

mod support;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rankdep::{
    hoeffding_d, permutation_pvalue, rank_permutation, refined_r, t_statistic, tau_star,
    Generator, Permutation, Statistic, TiePolicy,
};
use support::{ks_two_sample, ks_two_sample_threshold, shared_null_dist};

fn mean_and_sd(vals: &[f64]) -> (f64, f64) {
    let m = vals.len() as f64;
    let mean = vals.iter().sum::<f64>() / m;
    let var = vals.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (m - 1.0);
    (mean, var.sqrt())
}

#[test]
fn hoeffding_d_is_mean_zero_under_null() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let draws = 100_000;
    let vals: Vec<f64> = (0..draws)
        .map(|_| hoeffding_d(&Permutation::random(50, &mut rng)).unwrap())
        .collect();
    let (mean, sd) = mean_and_sd(&vals);
    let se = sd / (draws as f64).sqrt();
    assert!(mean.abs() < 4.0 * se, "mean {mean:.3e}, se {se:.3e}");
}

#[test]
fn t_statistic_is_mean_zero_under_null() {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    for n in [100usize, 1000] {
        let draws = 100_000;
        let vals: Vec<f64> = (0..draws)
            .map(|_| t_statistic(&Permutation::random(n, &mut rng)).unwrap())
            .collect();
        let (mean, sd) = mean_and_sd(&vals);
        let se = sd / (draws as f64).sqrt();
        assert!(
            mean.abs() < 4.0 * se,
            "n = {n}: mean {mean:.3e}, se {se:.3e}"
        );
    }
}

#[test]
fn scaled_statistics_share_a_null_distribution() {
    // n*D_n, n*R_n, n*T_n/3 at n = 1000 over 10^4 draws: pairwise
    // two-sample KS at level 0.001
    let n = 1000usize;
    let draws = 10_000;
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    let mut nd = Vec::with_capacity(draws);
    let mut nr = Vec::with_capacity(draws);
    let mut nt3 = Vec::with_capacity(draws);
    for _ in 0..draws {
        let p = Permutation::random(n, &mut rng);
        let d = hoeffding_d(&p).unwrap();
        let t = t_statistic(&p).unwrap();
        let r = (t - d) / 2.0;
        nd.push(n as f64 * d);
        nr.push(n as f64 * r);
        nt3.push(n as f64 * t / 3.0);
    }
    let thresh = ks_two_sample_threshold(0.001, draws, draws);
    for (name, a, b) in [
        ("nD vs nR", &nd, &nr),
        ("nD vs nT/3", &nd, &nt3),
        ("nR vs nT/3", &nr, &nt3),
    ] {
        let d = ks_two_sample(a, b);
        assert!(d < thresh, "{name}: KS {d:.4} >= {thresh:.4}");
    }
}

#[test]
fn asymptotic_and_permutation_pvalues_agree() {
    let dist = shared_null_dist();
    let mut rng = ChaCha8Rng::seed_from_u64(104);
    let n = 1000usize;
    for case in 0..100u64 {
        let p = Permutation::random(n, &mut rng);
        let d = hoeffding_d(&p).unwrap();
        let asym = dist.p_value(n as f64 * d).unwrap();
        let perm = permutation_pvalue(Statistic::HoeffdingD, &p, 10_000, 7000 + case).unwrap();
        if (0.01..=0.99).contains(&asym) && (0.01..=0.99).contains(&perm) {
            assert!(
                (asym - perm).abs() <= 0.05,
                "case {case}: asymptotic {asym:.4} vs permutation {perm:.4}"
            );
        }
    }
}

#[test]
fn dependent_generators_fool_hoeffding_but_not_the_refinements() {
    let dist = shared_null_dist();
    let n = 2000usize;
    let seeds = 200u64;
    for gen in [
        Generator::Yanagimoto,
        Generator::Hyperbola,
        Generator::BinaryExpansion { depth: 53 },
    ] {
        let mut d_pvals = Vec::new();
        let mut small_refined = 0usize;
        let mut small_tau = 0usize;
        for seed in 0..seeds {
            let s = gen.sample(n, 5000 + seed, false);
            let p = rank_permutation(&s.xs, &s.ys, TiePolicy::Error).unwrap();
            let d = hoeffding_d(&p).unwrap();
            let r = refined_r(&p).unwrap();
            let t = tau_star(&p).unwrap();
            d_pvals.push(dist.p_value(n as f64 * d).unwrap());
            if dist.p_value(n as f64 * r).unwrap() < 1e-3 {
                small_refined += 1;
            }
            if dist.p_value(n as f64 * t / 36.0).unwrap() < 1e-3 {
                small_tau += 1;
            }
        }
        let mean_d: f64 = d_pvals.iter().sum::<f64>() / seeds as f64;
        assert!(mean_d > 0.2, "{}: mean D p-value {mean_d:.3}", gen.name());
        let need = (seeds as f64 * 0.95).ceil() as usize;
        assert!(
            small_refined >= need,
            "{}: refined rejected in only {small_refined}/{seeds}",
            gen.name()
        );
        assert!(
            small_tau >= need,
            "{}: tau-star rejected in only {small_tau}/{seeds}",
            gen.name()
        );
    }
}

#[test]
fn independent_samples_rarely_reject() {
    let dist = shared_null_dist();
    let n = 10_000usize;
    let seeds = 100u64;
    let mut accept = 0usize;
    for seed in 0..seeds {
        let s = Generator::Independent.sample(n, 9000 + seed, false);
        let p = rank_permutation(&s.xs, &s.ys, TiePolicy::Error).unwrap();
        let t = tau_star(&p).unwrap();
        if dist.p_value(n as f64 * t / 36.0).unwrap() > 0.01 {
            accept += 1;
        }
    }
    assert!(accept >= 98, "tau-star p > 0.01 in only {accept}/{seeds}");
}

#[test]
fn binary_expansion_keeps_d_null_sized_but_not_tau_star() {
    // empirical null scales at n = 10^4
    let n = 10_000usize;
    let mut rng = ChaCha8Rng::seed_from_u64(105);
    let mut d_null = Vec::new();
    let mut t_null = Vec::new();
    for _ in 0..200 {
        let p = Permutation::random(n, &mut rng);
        d_null.push(hoeffding_d(&p).unwrap());
        t_null.push(tau_star(&p).unwrap());
    }
    let (_, sd_d) = mean_and_sd(&d_null);
    let (_, sd_t) = mean_and_sd(&t_null);

    let s = Generator::BinaryExpansion { depth: 53 }.sample(n, 31, false);
    let p = rank_permutation(&s.xs, &s.ys, TiePolicy::Error).unwrap();
    let d = hoeffding_d(&p).unwrap();
    let t = tau_star(&p).unwrap();
    assert!(d.abs() < 3.0 * sd_d, "D {d:.3e} vs null sd {sd_d:.3e}");
    assert!(t > 10.0 * sd_t, "tau-star {t:.3e} vs null sd {sd_t:.3e}");
}
