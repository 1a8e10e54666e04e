//! Brute-force reference implementations. Polynomial but slow: these
//! enumerate point subsets directly and exist to validate the fast paths
//! and to pin expected values in tests. Size guards are hard errors so
//! an oracle can never masquerade as a production path.

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Bound for the O(n^4) oracles.
pub const MAX_ORACLE_N: usize = 200;
/// Bound for the O(n^5) Hoeffding oracle.
pub const MAX_HOEFFDING_ORACLE_N: usize = 60;

/// The 8 concordant 4-patterns; the 16 remaining elements of S_4 are
/// discordant.
pub fn concordant_patterns() -> Vec<Permutation> {
    [
        [1, 2, 3, 4],
        [1, 2, 4, 3],
        [2, 1, 3, 4],
        [2, 1, 4, 3],
        [3, 4, 1, 2],
        [3, 4, 2, 1],
        [4, 3, 1, 2],
        [4, 3, 2, 1],
    ]
    .iter()
    .map(|e| Permutation::new(e.to_vec()).unwrap())
    .collect()
}

/// A quadruple of distinct values is concordant when its first two
/// values and last two values separate into a low pair and a high pair.
#[inline]
fn is_concordant(v1: u32, v2: u32, v3: u32, v4: u32) -> bool {
    v1.max(v2) < v3.min(v4) || v1.min(v2) > v3.max(v4)
}

/// The order-isomorphic pattern of `k` points given by their values in
/// position order.
pub fn pattern_of(values: &[u32]) -> Permutation {
    let k = values.len();
    let mut ranks = Vec::with_capacity(k);
    for &v in values {
        let r = values.iter().filter(|&&w| w < v).count() as u32 + 1;
        ranks.push(r);
    }
    Permutation::new(ranks).unwrap()
}

/// Number of `k`-subsets of positions of `p` inducing the pattern
/// `sigma`, by enumeration over all C(n,k) subsets.
pub fn count_pattern(p: &Permutation, sigma: &Permutation) -> u64 {
    let n = p.len();
    let k = sigma.len();
    if k > n {
        return 0;
    }
    let mut count = 0u64;
    let mut chosen = vec![0usize; k];
    count_rec(p, sigma, 0, 1, &mut chosen, &mut count);
    count
}

fn count_rec(
    p: &Permutation,
    sigma: &Permutation,
    depth: usize,
    from: usize,
    chosen: &mut [usize],
    count: &mut u64,
) {
    let k = sigma.len();
    if depth == k {
        let values: Vec<u32> = chosen.iter().map(|&i| p.get(i)).collect();
        if pattern_of(&values) == *sigma {
            *count += 1;
        }
        return;
    }
    for i in from..=p.len() - (k - depth - 1) {
        chosen[depth] = i;
        count_rec(p, sigma, depth + 1, i + 1, chosen, count);
    }
}

/// Brute-force tau-star: classifies every 4-subset as concordant or
/// discordant and returns `12 * T_n`.
pub fn tau_star_bruteforce(p: &Permutation) -> Result<f64> {
    let n = p.len();
    if n < 4 {
        return Err(Error::SampleTooSmall { n, min: 4 });
    }
    if n > MAX_ORACLE_N {
        return Err(Error::TooLargeForOracle { n, max: MAX_ORACLE_N });
    }
    let v = p.as_slice();
    let mut concordant = 0u64;
    let mut total = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    total += 1;
                    if is_concordant(v[i], v[j], v[k], v[l]) {
                        concordant += 1;
                    }
                }
            }
        }
    }
    let discordant = total - concordant;
    let t = (concordant as f64 / 18.0 - discordant as f64 / 36.0) / total as f64;
    Ok(12.0 * t)
}

/// The 11-term pattern combination computed by the fast `quad` sweep,
/// evaluated by subset enumeration.
pub fn quad_pattern_combination(p: &Permutation) -> Result<i128> {
    let n = p.len();
    if n > MAX_ORACLE_N {
        return Err(Error::TooLargeForOracle { n, max: MAX_ORACLE_N });
    }
    // coefficient per 4-pattern, keyed by rank code
    let coeffs: [([u32; 4], i128); 11] = [
        ([1, 3, 2, 4], 2),
        ([1, 3, 4, 2], 1),
        ([1, 4, 2, 3], 3),
        ([1, 4, 3, 2], 2),
        ([2, 1, 4, 3], -1),
        ([2, 3, 1, 4], 2),
        ([2, 4, 1, 3], 2),
        ([3, 4, 1, 2], 1),
        ([4, 1, 2, 3], 2),
        ([4, 1, 3, 2], 1),
        ([4, 2, 1, 3], 1),
    ];
    let mut table = [0i128; 256];
    for (pat, c) in coeffs {
        table[pattern_code(&pat)] = c;
    }
    let v = p.as_slice();
    let mut acc = 0i128;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    acc += table[quad_code(v[i], v[j], v[k], v[l])];
                }
            }
        }
    }
    Ok(acc)
}

#[inline]
fn quad_code(a: u32, b: u32, c: u32, d: u32) -> usize {
    let ra = (b < a) as usize + (c < a) as usize + (d < a) as usize;
    let rb = (a < b) as usize + (c < b) as usize + (d < b) as usize;
    let rc = (a < c) as usize + (b < c) as usize + (d < c) as usize;
    let rd = (a < d) as usize + (b < d) as usize + (c < d) as usize;
    (((ra << 2) | rb) << 4) | (rc << 2) | rd
}

fn pattern_code(pat: &[u32; 4]) -> usize {
    quad_code(pat[0], pat[1], pat[2], pat[3])
}

/// The 5-point kernel of Hoeffding's D_n, evaluated by enumerating all
/// 5-subsets. A subset whose induced pattern has middle value 3
/// contributes +4 when the outer pairs split values {1,2} and {4,5}
/// (either way around), and -2 otherwise.
pub fn hoeffding_d_bruteforce(p: &Permutation) -> Result<f64> {
    let n = p.len();
    if n < 5 {
        return Err(Error::SampleTooSmall { n, min: 5 });
    }
    if n > MAX_HOEFFDING_ORACLE_N {
        return Err(Error::TooLargeForOracle {
            n,
            max: MAX_HOEFFDING_ORACLE_N,
        });
    }
    let v = p.as_slice();
    let mut acc = 0i64;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    for m in l + 1..n {
                        acc += d_kernel(v[i], v[j], v[k], v[l], v[m]);
                    }
                }
            }
        }
    }
    let nf = n as f64;
    let denom = nf * (nf - 1.0) * (nf - 2.0) * (nf - 3.0) * (nf - 4.0);
    Ok(acc as f64 / denom)
}

#[inline]
fn d_kernel(v1: u32, v2: u32, v3: u32, v4: u32, v5: u32) -> i64 {
    let below = (v1 < v3) as u32 + (v2 < v3) as u32 + (v4 < v3) as u32 + (v5 < v3) as u32;
    if below != 2 {
        return 0; // middle value is not the median of the five
    }
    let outer_low = v1.max(v2) < v3 && v4.min(v5) > v3;
    let outer_high = v1.min(v2) > v3 && v4.max(v5) < v3;
    if outer_low || outer_high {
        4
    } else {
        -2
    }
}

/// The added (+4) and subtracted (-2) 5-patterns of the D_n kernel,
/// generated programmatically from the kernel rule.
pub fn d_kernel_patterns() -> (Vec<Permutation>, Vec<Permutation>) {
    let mut added = Vec::new();
    let mut subtracted = Vec::new();
    let mut vals = [1u32, 2, 3, 4, 5];
    permute(&mut vals, 0, &mut |v| match d_kernel(v[0], v[1], v[2], v[3], v[4]) {
        4 => added.push(Permutation::new(v.to_vec()).unwrap()),
        -2 => subtracted.push(Permutation::new(v.to_vec()).unwrap()),
        _ => {}
    });
    (added, subtracted)
}

fn permute<F: FnMut(&[u32; 5])>(vals: &mut [u32; 5], k: usize, f: &mut F) {
    if k == 5 {
        f(vals);
        return;
    }
    for i in k..5 {
        vals.swap(k, i);
        permute(vals, k + 1, f);
        vals.swap(k, i);
    }
}
