//! Statistic selectors and the result record shared by the library and
//! the command line tool.

use crate::error::Result;
use crate::hoeffding::{bkr_b, hoeffding_d};
use crate::perm::Permutation;
use crate::taustar::{refined_r, tau_star};

/// The statistics this crate computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Statistic {
    HoeffdingD,
    BkrB,
    RefinedR,
    TauStar,
}

impl Statistic {
    pub fn name(&self) -> &'static str {
        match self {
            Statistic::HoeffdingD => "hoeffding_d",
            Statistic::BkrB => "bkr_b",
            Statistic::RefinedR => "refined_r",
            Statistic::TauStar => "tau_star",
        }
    }

    /// Smallest sample size the statistic is defined for.
    pub fn min_n(&self) -> usize {
        match self {
            Statistic::HoeffdingD | Statistic::RefinedR => 5,
            Statistic::BkrB => 1,
            Statistic::TauStar => 4,
        }
    }

    pub fn compute(&self, p: &Permutation) -> Result<f64> {
        match self {
            Statistic::HoeffdingD => hoeffding_d(p),
            Statistic::BkrB => Ok(bkr_b(p)),
            Statistic::RefinedR => refined_r(p),
            Statistic::TauStar => tau_star(p),
        }
    }

    /// The scaling under which the statistic converges to the shared
    /// limit null law: `n*D_n`, `n*R_n`, and `n*tau_star/36 = n*T_n/3`.
    /// B_n has no asymptotic scaling here (permutation p-values only);
    /// `n*B_n` is reported for symmetry.
    pub fn scaled(&self, value: f64, n: usize) -> f64 {
        match self {
            Statistic::HoeffdingD | Statistic::RefinedR | Statistic::BkrB => n as f64 * value,
            Statistic::TauStar => n as f64 * value / 36.0,
        }
    }
}

/// How a p-value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PValueMethod {
    None,
    Asymptotic,
    Permutation,
}

impl PValueMethod {
    pub fn name(&self) -> &'static str {
        match self {
            PValueMethod::None => "none",
            PValueMethod::Asymptotic => "asymptotic",
            PValueMethod::Permutation => "permutation",
        }
    }
}

/// One computed statistic with its scaling and optional p-value.
#[derive(Debug, Clone)]
pub struct TestResult {
    pub statistic: Statistic,
    pub value: f64,
    pub scaled: f64,
    pub n: usize,
    pub p_value: Option<f64>,
    pub p_method: PValueMethod,
}

impl TestResult {
    pub fn without_pvalue(statistic: Statistic, p: &Permutation) -> Result<Self> {
        let value = statistic.compute(p)?;
        Ok(TestResult {
            statistic,
            value,
            scaled: statistic.scaled(value, p.len()),
            n: p.len(),
            p_value: None,
            p_method: PValueMethod::None,
        })
    }
}
