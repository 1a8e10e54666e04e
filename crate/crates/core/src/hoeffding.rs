//! Quadrant counts and the classical statistics: Hoeffding's D_n and the
//! Blum--Kiefer--Rosenblatt B_n, both in O(n log n).

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::sumarray::SumArray;

/// Per-point counts of the other points in the four open quadrants
/// around point `(i, p(i))`: `a` north-west, `b` north-east, `c`
/// south-west, `d` south-east.
#[derive(Debug, Clone)]
pub struct QuadrantCounts {
    pub a: Vec<u32>,
    pub b: Vec<u32>,
    pub c: Vec<u32>,
    pub d: Vec<u32>,
}

/// Computes all four quadrant count sequences with a single left-to-right
/// sweep over one sum-array; the other two counts follow by complement:
/// `b_i = (n - p(i)) - a_i`, `d_i = (p(i) - 1) - c_i`.
pub fn quadrant_counts(p: &Permutation) -> QuadrantCounts {
    let n = p.len();
    let mut seen: SumArray<i64> = SumArray::new(n);
    let mut a = Vec::with_capacity(n);
    let mut b = Vec::with_capacity(n);
    let mut c = Vec::with_capacity(n);
    let mut d = Vec::with_capacity(n);
    for i in 1..=n {
        let v = p.get(i) as usize;
        if i < n {
            let next = p.get(i + 1) as usize;
            seen.prefetch_query(next);
            seen.prefetch_assign(next);
        }
        // cell v is still 0, so this counts j < i with p(j) < p(i)
        let ci = seen.prefix_sum(v) as u32;
        let ai = (i as u32 - 1) - ci;
        a.push(ai);
        b.push((n as u32 - v as u32) - ai);
        c.push(ci);
        d.push((v as u32 - 1) - ci);
        seen.assign(v, 1);
    }
    QuadrantCounts { a, b, c, d }
}

/// Hoeffding's D_n: the 5-point U-statistic in its quadrant-count form,
///
/// ```text
/// D_n = 1/(n(n-1)...(n-4)) * sum_i [ a(a-1)d(d-1) + b(b-1)c(c-1) - 2abcd ]
/// ```
///
/// The per-point terms are exact integers; a single floating division
/// happens at the end. Requires `n >= 5`.
pub fn hoeffding_d(p: &Permutation) -> Result<f64> {
    let n = p.len();
    if n < 5 {
        return Err(Error::SampleTooSmall { n, min: 5 });
    }
    let q = quadrant_counts(p);
    let mut acc = 0.0f64;
    for i in 0..n {
        let (a, b, c, d) = (
            q.a[i] as i64,
            q.b[i] as i64,
            q.c[i] as i64,
            q.d[i] as i64,
        );
        let term = (a * (a - 1)) as i128 * (d * (d - 1)) as i128
            + (b * (b - 1)) as i128 * (c * (c - 1)) as i128
            - 2 * (a * b) as i128 * (c * d) as i128;
        acc += term as f64;
    }
    let nf = n as f64;
    let denom = nf * (nf - 1.0) * (nf - 2.0) * (nf - 3.0) * (nf - 4.0);
    Ok(acc / denom)
}

/// The Blum--Kiefer--Rosenblatt statistic
/// `B_n = (1/n^5) * sum_i (a_i d_i - b_i c_i)^2`. Always non-negative.
pub fn bkr_b(p: &Permutation) -> f64 {
    let n = p.len();
    let q = quadrant_counts(p);
    let mut acc = 0.0f64;
    for i in 0..n {
        let ad = q.a[i] as i64 * q.d[i] as i64;
        let bc = q.b[i] as i64 * q.c[i] as i64;
        let diff = (ad - bc) as i128;
        acc += (diff * diff) as f64;
    }
    acc / (n as f64).powi(5)
}
