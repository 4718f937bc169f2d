use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Radii and caps for the cut-based algorithms.
///
/// The radii stand in for class-dependent constants that are only known to
/// exist; they are plain tunables here.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(default)]
pub struct AlgorithmConfig {
    /// Radius of the local 1-cut test.
    pub r1: usize,
    /// Radius of the local 2-cut and interesting-vertex tests.
    pub r2: usize,
    /// Largest residual-component diameter the exact phase will handle.
    pub diam_cap: usize,
    /// Largest residual instance (in vertices) handed to the exact solver.
    pub brute_cap: usize,
    pub seed: u64,
}

impl Default for AlgorithmConfig {
    fn default() -> Self {
        AlgorithmConfig { r1: 7, r2: 13, diam_cap: 40, brute_cap: 64, seed: 0 }
    }
}

impl AlgorithmConfig {
    pub fn validate(&self) -> Result<()> {
        if self.r1 < 1 {
            return Err(Error::InvalidArgument("r1 must be at least 1".into()));
        }
        if self.r2 < 2 {
            return Err(Error::InvalidArgument("r2 must be at least 2".into()));
        }
        if self.diam_cap < 1 {
            return Err(Error::InvalidArgument("diam_cap must be at least 1".into()));
        }
        Ok(())
    }

    /// Radius of the combined cut-detection phase: 2-cut partners lie within
    /// `r2` and their balls within `2·r2`.
    pub fn cut_phase_radius(&self) -> usize {
        self.r1.max(2 * self.r2)
    }

    /// Exact round count of the dominating-set pipeline: twin detection (2),
    /// cut detection, domination status (2), residual solve (`diam_cap + 1`).
    pub fn mds_rounds(&self) -> usize {
        2 + self.cut_phase_radius() + 2 + self.diam_cap + 1
    }

    pub fn mvc_rounds(&self) -> usize {
        self.cut_phase_radius() + self.diam_cap + 1
    }
}

/// Control function `f` of a class of bounded asymptotic dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ControlFunction {
    /// `f(r) = slope·r + intercept`.
    Affine { slope: usize, intercept: usize },
    /// Step function through sorted `(r, f(r))` breakpoints: `f(r)` is the
    /// value of the first breakpoint at or beyond `r`, or the last value.
    Steps(Vec<(usize, usize)>),
}

impl ControlFunction {
    pub fn eval(&self, r: usize) -> usize {
        match self {
            ControlFunction::Affine { slope, intercept } => slope * r + intercept,
            ControlFunction::Steps(points) => {
                points.iter().find(|&&(x, _)| x >= r).or(points.last()).map_or(0, |&(_, y)| y)
            }
        }
    }
}

/// Parameters of the dimension-driven variant: no bound on the excluded
/// `K_{2,t}` is needed, only the dimension and its control function.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AsdimConfig {
    pub dimension: usize,
    pub control: ControlFunction,
    pub diam_cap: usize,
    pub brute_cap: usize,
}

impl AsdimConfig {
    /// `r1 = f(5) + 2`, `r2 = f(11) + 5`.
    pub fn radii(&self) -> (usize, usize) {
        (self.control.eval(5) + 2, self.control.eval(11) + 5)
    }

    pub fn to_algorithm_config(&self) -> AlgorithmConfig {
        let (r1, r2) = self.radii();
        AlgorithmConfig { r1, r2, diam_cap: self.diam_cap, brute_cap: self.brute_cap, seed: 0 }
    }

    /// Approximation guarantee `3(d+1) + 22(d+1) + 1` for the configured
    /// dimension.
    pub fn ratio_bound(&self) -> usize {
        25 * (self.dimension + 1) + 1
    }

    /// Dimension-1 configuration whose derived radii equal `cfg`'s.
    pub fn matching(cfg: &AlgorithmConfig) -> Result<AsdimConfig> {
        if cfg.r1 < 2 || cfg.r2 < 5 {
            return Err(Error::InvalidArgument(format!(
                "radii r1 = {}, r2 = {} are not of the form f(5) + 2, f(11) + 5",
                cfg.r1, cfg.r2
            )));
        }
        Ok(AsdimConfig {
            dimension: 1,
            control: ControlFunction::Steps(vec![(5, cfg.r1 - 2), (11, cfg.r2 - 5)]),
            diam_cap: cfg.diam_cap,
            brute_cap: cfg.brute_cap,
        })
    }
}
