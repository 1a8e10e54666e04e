//! Samplers for dependent bivariate distributions with uniform margins
//! on which Hoeffding's D vanishes, plus independent and monotone
//! baselines. Used for demos, power experiments, and the fooling tests.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// An (x, y) sample with its provenance. Base generators produce values
/// in [0, 1]; the mirror transform extends x to [-1, 1].
#[derive(Debug, Clone)]
pub struct SampleSet {
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
    pub name: String,
    pub seed: u64,
}

/// The available bivariate samplers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    /// iid U(0,1) pairs (null model).
    Independent,
    /// Parallelogram sweep: mass inside two right triangles moved onto
    /// their diagonal edges.
    Yanagimoto,
    /// Mass between two hyperbola branches swept onto them.
    Hyperbola,
    /// First-run digit resampling of the binary expansion.
    BinaryExpansion { depth: u32 },
    /// y = x exactly.
    Monotone,
}

pub const DEFAULT_BINARY_DEPTH: u32 = 53;

impl Generator {
    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "independent" => Some(Generator::Independent),
            "yanagimoto" => Some(Generator::Yanagimoto),
            "hyperbola" => Some(Generator::Hyperbola),
            "binary" => Some(Generator::BinaryExpansion {
                depth: DEFAULT_BINARY_DEPTH,
            }),
            "monotone" => Some(Generator::Monotone),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Generator::Independent => "independent",
            Generator::Yanagimoto => "yanagimoto",
            Generator::Hyperbola => "hyperbola",
            Generator::BinaryExpansion { .. } => "binary",
            Generator::Monotone => "monotone",
        }
    }

    /// Draws `n` pairs, deterministic in the seed. With `mirror`, the
    /// sign of each x is flipped by an independent fair coin.
    pub fn sample(&self, n: usize, seed: u64, mirror: bool) -> SampleSet {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (mut xs, mut ys) = (Vec::with_capacity(n), Vec::with_capacity(n));
        match self {
            Generator::Independent => {
                for _ in 0..n {
                    xs.push(rng.random::<f64>());
                    ys.push(rng.random::<f64>());
                }
            }
            Generator::Yanagimoto => {
                for _ in 0..n {
                    let x = rng.random::<f64>();
                    let b = rng.random::<f64>();
                    xs.push(x);
                    ys.push(yanagimoto_map(x, b));
                }
            }
            Generator::Hyperbola => {
                for _ in 0..n {
                    let (x, y) = hyperbola_sweep(rng.random::<f64>(), rng.random::<f64>());
                    xs.push(x);
                    ys.push(y);
                }
            }
            Generator::BinaryExpansion { depth } => {
                assert!((8..=62).contains(depth), "binary depth must be in 8..=62");
                let scale = (1u64 << depth) as f64;
                let mut seen_x: HashSet<u64> = HashSet::with_capacity(n);
                let mut seen_y: HashSet<u64> = HashSet::with_capacity(n);
                while xs.len() < n {
                    let Some((xb, yb)) = binary_expansion_bits(&mut rng, *depth) else {
                        continue;
                    };
                    // collisions would be ties in the ranking; redraw
                    if !seen_x.insert(xb) {
                        continue;
                    }
                    if !seen_y.insert(yb) {
                        seen_x.remove(&xb);
                        continue;
                    }
                    xs.push(xb as f64 / scale);
                    ys.push(yb as f64 / scale);
                }
            }
            Generator::Monotone => {
                for _ in 0..n {
                    let x = rng.random::<f64>();
                    xs.push(x);
                    ys.push(x);
                }
            }
        }
        if mirror {
            for x in xs.iter_mut() {
                if rng.random::<bool>() {
                    *x = -*x;
                }
            }
        }
        SampleSet {
            xs,
            ys,
            name: self.name().to_string(),
            seed,
        }
    }
}

/// The sweep map of the parallelogram construction:
/// `f(a, b) = min(b, a/2)` when `a > b`, else `max(b, (a+1)/2)`.
pub fn yanagimoto_map(a: f64, b: f64) -> f64 {
    if a > b {
        b.min(a / 2.0)
    } else {
        b.max((a + 1.0) / 2.0)
    }
}

/// Sweeps the mass between the branches `2y(1-x) = 1` and
/// `2x(1-y) = 1` onto them: points under the upper branch (x < 1/2)
/// move up onto it, points over the lower branch (x > 1/2) move down.
pub fn hyperbola_sweep(x: f64, y: f64) -> (f64, f64) {
    if x < 0.5 {
        let upper = 1.0 / (2.0 * (1.0 - x));
        if y < upper {
            return (x, upper);
        }
    } else if x > 0.5 {
        let lower = 1.0 - 1.0 / (2.0 * x);
        if y > lower {
            return (x, lower);
        }
    }
    (x, y)
}

/// One draw of the binary-expansion pair as fixed-point bit strings of
/// length `depth` (bit `depth-1` is the leading digit). The first run of
/// x's digits is resampled to produce y. Returns None when the run
/// nearly exhausts the depth, which the caller redraws.
fn binary_expansion_bits<R: Rng>(rng: &mut R, depth: u32) -> Option<(u64, u64)> {
    let mask = (1u64 << depth) - 1;
    let x = rng.random::<u64>() & mask;
    let run = first_run_length(x, depth);
    if run >= depth - 1 {
        return None;
    }
    let keep = depth - run; // low bits shared by x and y
    let resampled = rng.random::<u64>() & ((1u64 << run) - 1);
    let y = (resampled << keep) | (x & ((1u64 << keep) - 1));
    Some((x, y))
}

/// Length of the leading run of equal digits in the top `depth` bits.
fn first_run_length(x: u64, depth: u32) -> u32 {
    let first = (x >> (depth - 1)) & 1;
    let mut run = 1;
    while run < depth && (x >> (depth - 1 - run)) & 1 == first {
        run += 1;
    }
    run
}
