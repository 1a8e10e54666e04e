//! Distribution-free rank-based independence statistics in O(n log n):
//! Hoeffding's D_n, the refined statistic R_n, and the
//! Bergsma--Dassios--Yanagimoto sign covariance tau-star, together with
//! asymptotic and permutation p-values, brute-force verification
//! oracles, and samplers for dependent distributions that Hoeffding's
//! test cannot detect.
//!
//! The entry point for paired data is [`rank_permutation`], which turns
//! two numeric columns into the ranking [`Permutation`]; every statistic
//! is a function of that permutation alone.
//!
//! ```
//! use rankdep::{rank_permutation, tau_star, TiePolicy};
//!
//! let xs = [0.2, 0.9, 0.4, 0.6, 0.1];
//! let ys = [1.0, 4.0, 2.0, 3.0, 0.5];
//! let p = rank_permutation(&xs, &ys, TiePolicy::Error).unwrap();
//! assert_eq!(tau_star(&p).unwrap(), 2.0 / 3.0);
//! ```

mod error;
pub mod generators;
pub mod hoeffding;
pub mod nulldist;
pub mod oracle;
mod perm;
mod result;
mod sumarray;
pub mod taustar;

pub use error::{Error, Result};
pub use generators::{Generator, SampleSet};
pub use hoeffding::{bkr_b, hoeffding_d, quadrant_counts, QuadrantCounts};
pub use nulldist::{
    limit_eigenvalues, permutation_pvalue, sample_limit_law, NullDist, NullDistSpec,
};
pub use perm::{rank_permutation, Permutation, TiePolicy};
pub use result::{PValueMethod, Statistic, TestResult};
pub use sumarray::{SumArray, SumValue};
pub use taustar::{quad, refined_r, t_statistic, tau_star};
