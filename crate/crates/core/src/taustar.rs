//! The O(n log n) computation of the sign-covariance tau-star via the
//! QUAD sweep over four sum-arrays, plus the derived statistics T_n and
//! the refined statistic R_n.

use crate::error::{Error, Result};
use crate::hoeffding::hoeffding_d;
use crate::perm::Permutation;
use crate::sumarray::{prefetch_ascend, prefetch_descend, zeroed_vec};

/// The three per-value accumulators whose queries and updates walk the
/// same tree-index chains, fused into one node so a sweep touches one
/// cache line per node instead of three. 32 bytes, so two nodes share a
/// line.
#[repr(C)]
#[derive(Clone, Copy)]
struct FusedNode {
    /// 1 per value already placed.
    seen: i64,
    /// falling-pair counts ending at this value
    down: i64,
    /// rise-then-fall triple counts ending at this value
    updown: i128,
}

const ZERO_NODE: FusedNode = FusedNode {
    seen: 0,
    down: 0,
    updown: 0,
};

/// One sweep of the pattern-counting recurrence.
///
/// Returns the integer combination
/// `2#1324 + #1342 + 3#1423 + 2#1432 - #2143 + 2#2314 + 2#2413 + #3412
///  + 2#4123 + #4132 + #4213`
/// of 4-pattern occurrence counts in `p`.
///
/// Four logical sum-arrays are maintained over the value axis: `seen`
/// marks the values already placed, `up`/`down` hold per-value counts of
/// rising and falling pairs ending there, and `updown` holds
/// rise-then-fall triple counts. They are laid out as Fenwick trees,
/// with the three arrays queried at the same index fused node-wise (see
/// [`FusedNode`]); `up`, queried one cell lower, stays separate. All
/// queries at value `p(x)` happen before the assignments to cell `p(x)`,
/// so a point never counts itself.
pub fn quad(p: &Permutation) -> i128 {
    let n = p.len();
    let mut fused = zeroed_vec(n + 1, ZERO_NODE);
    let mut up = zeroed_vec(n + 1, 0i64);
    let mut up_total = 0i64;
    let mut total: i128 = 0;
    for x in 1..=n {
        let v = p.get(x) as usize;
        if x < n {
            let next = p.get(x + 1) as usize;
            prefetch_descend(&fused, next);
            prefetch_ascend(&fused, next);
            prefetch_descend(&up, next - 1);
            prefetch_ascend(&up, next);
        }

        // prefix sums at v; cell v itself is still zero
        let mut n_u = 0i64;
        let mut n_du = 0i64;
        let mut n_udu = 0i128;
        let mut i = v;
        while i > 0 {
            let node = &fused[i];
            n_u += node.seen;
            n_du += node.down;
            n_udu += node.updown;
            i &= i - 1;
        }
        // points before x split into risers and fallers
        let n_d = (x as i64 - 1) - n_u;
        // suffix sum over cells >= v, as total minus prefix(v-1)
        let mut n_ud = up_total;
        let mut i = v - 1;
        while i > 0 {
            n_ud -= up[i];
            i &= i - 1;
        }

        // first and only write to cell v, so assignment is a plain add
        let mut i = v;
        while i <= n {
            let node = &mut fused[i];
            node.seen += 1;
            node.down += n_d;
            node.updown += n_ud as i128;
            i += i & i.wrapping_neg();
        }
        let mut i = v;
        while i <= n {
            up[i] += n_u;
            i += i & i.wrapping_neg();
        }
        up_total += n_u;

        let delta = 2 * n_udu - (n_du as i128) * (n_d as i128) - (n_ud as i128) * (n_u as i128)
            + (x as i128 - 2) * (n_u as i128) * (n_d as i128);
        total += delta;
    }
    total
}

/// The sum of `quad` over the four reflections of `p`, which counts every
/// discordant quadruple exactly four times.
pub fn quad_reflection_sum(p: &Permutation) -> i128 {
    let inv = p.inverse();
    quad(p) + quad(&p.reverse()) + quad(&inv.reverse()) + quad(&inv)
}

/// Bergsma--Dassios--Yanagimoto tau-star, in `[-1/3, 2/3]`.
///
/// Computed as `2/3 - (S/4) / C(n,4)` with `S = quad_reflection_sum(p)`,
/// evaluated as the single exact rational `(8 C(n,4) - 3 S) / (12 C(n,4))`
/// so one correctly-rounded division produces the result; in particular
/// the extreme values -1/3 and 2/3 are hit exactly. Requires `n >= 4`.
pub fn tau_star(p: &Permutation) -> Result<f64> {
    let n = p.len();
    if n < 4 {
        return Err(Error::SampleTooSmall { n, min: 4 });
    }
    let s = quad_reflection_sum(p);
    let b = binom4(n);
    Ok((8 * b - 3 * s) as f64 / (12 * b) as f64)
}

/// The 4-point U-statistic `T_n = tau_star / 12`.
pub fn t_statistic(p: &Permutation) -> Result<f64> {
    Ok(tau_star(p)? / 12.0)
}

/// The refined statistic `R_n = (T_n - D_n) / 2`, from the identity
/// `T_n = D_n + 2 R_n`. Requires `n >= 5` because of `D_n`.
pub fn refined_r(p: &Permutation) -> Result<f64> {
    let d = hoeffding_d(p)?;
    Ok((t_statistic(p)? - d) / 2.0)
}

/// `C(n, 4)` exactly.
pub(crate) fn binom4(n: usize) -> i128 {
    let n = n as i128;
    n * (n - 1) * (n - 2) * (n - 3) / 24
}
