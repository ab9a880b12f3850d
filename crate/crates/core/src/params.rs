//! Model parameters, validation, regime classification, and seed placement.

use alloc::vec::Vec;

use rand::Rng;

use crate::math;
use crate::rng::RngStream;

/// A finite problem instance: graph size and density, activation threshold,
/// seed counts, and the master RNG seed.
///
/// `n` nodes, each unordered pair linked independently with probability `p`;
/// `a_r` red and `a_b` black seeds placed uniformly at random; a white node
/// activates with color `S` once its `S`-neighbors exceed its opposite-color
/// neighbors by at least `r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    /// Node count (>= 3).
    pub n: u64,
    /// Edge probability, in (0, 1).
    pub p: f64,
    /// Activation threshold (>= 2).
    pub r: u32,
    /// Red seed count.
    pub a_r: u64,
    /// Black seed count.
    pub a_b: u64,
    /// Master RNG seed.
    pub seed: u64,
}

/// Hard parameter violations.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ParamsError {
    /// `a_r + a_b > n`.
    #[error("seed counts exceed node count: a_r={a_r} + a_b={a_b} > n={n}")]
    SeedCountExceedsN {
        /// Red seed count.
        a_r: u64,
        /// Black seed count.
        a_b: u64,
        /// Node count.
        n: u64,
    },
    /// `p` outside the open interval (0, 1).
    #[error("edge probability p={p} not in (0, 1)")]
    EdgeProbabilityOutOfRange {
        /// Offending value.
        p: f64,
    },
    /// `r < 2`; the r = 1 process behaves qualitatively differently and is
    /// unsupported.
    #[error("threshold r={r} must be >= 2")]
    ThresholdTooSmall {
        /// Offending value.
        r: u32,
    },
    /// No non-seed node left (`n - a_r - a_b < 1`).
    #[error("no white node left: n={n}, a_r={a_r}, a_b={a_b}")]
    NoWhiteNodes {
        /// Node count.
        n: u64,
        /// Red seed count.
        a_r: u64,
        /// Black seed count.
        a_b: u64,
    },
    /// `n < 3`.
    #[error("node count n={n} must be >= 3")]
    NTooSmall {
        /// Offending value.
        n: u64,
    },
    /// Scaling exponents must satisfy `alpha_r > alpha_b > 0`; equality (to
    /// within 1e-12 relative) is rejected.
    #[error("invalid scaling exponents: alpha_r={alpha_r}, alpha_b={alpha_b}")]
    InvalidAlphas {
        /// Red exponent.
        alpha_r: f64,
        /// Black exponent.
        alpha_b: f64,
    },
    /// Time-scale `q` must be positive and, for [`Regime::QEqualsG`], match
    /// the critical size.
    #[error("invalid time-scale q={q}: {reason}")]
    InvalidQ {
        /// Offending value.
        q: f64,
        /// Why it was rejected.
        reason: &'static str,
    },
}

/// Soft diagnostics from [`ModelParams::validate`]. The asymptotic density
/// window `1/n << p << 1/(n^{1/r} log n)` concerns sequences, not instances,
/// so finite-n instances near the boundary only warn.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValidationWarning {
    /// `n * p <= 1`: below the usual connectivity/density window.
    DensityBelowWindow,
    /// `p * n^{1/r} * ln(n) >= 1`: above the bootstrap scaling window.
    DensityAboveWindow,
}

impl ModelParams {
    /// Number of non-seed (initially white) nodes.
    pub fn n_white(&self) -> u64 {
        self.n - self.a_r - self.a_b
    }

    /// Checks hard invariants; returns soft warnings on the asymptotic
    /// density window.
    pub fn validate(&self) -> Result<Vec<ValidationWarning>, ParamsError> {
        if self.n < 3 {
            return Err(ParamsError::NTooSmall { n: self.n });
        }
        if !(self.p > 0.0 && self.p < 1.0) {
            return Err(ParamsError::EdgeProbabilityOutOfRange { p: self.p });
        }
        if self.r < 2 {
            return Err(ParamsError::ThresholdTooSmall { r: self.r });
        }
        if self.a_r + self.a_b > self.n {
            return Err(ParamsError::SeedCountExceedsN {
                a_r: self.a_r,
                a_b: self.a_b,
                n: self.n,
            });
        }
        if self.n - self.a_r - self.a_b < 1 {
            return Err(ParamsError::NoWhiteNodes {
                n: self.n,
                a_r: self.a_r,
                a_b: self.a_b,
            });
        }
        let mut warnings = Vec::new();
        let n = self.n as f64;
        if n * self.p <= 1.0 {
            warnings.push(ValidationWarning::DensityBelowWindow);
        }
        if self.p * math::powf(n, 1.0 / self.r as f64) * math::ln(n) >= 1.0 {
            warnings.push(ValidationWarning::DensityAboveWindow);
        }
        Ok(warnings)
    }
}

/// Node colors. Transitions are irreversible: White -> Red or White -> Black.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeColor {
    /// Inactive.
    White,
    /// Red-active.
    Red,
    /// Black-active.
    Black,
}

impl NodeColor {
    /// The competing color (Red <-> Black). Panics on White.
    pub fn opposite(self) -> NodeColor {
        match self {
            NodeColor::Red => NodeColor::Black,
            NodeColor::Black => NodeColor::Red,
            NodeColor::White => panic!("white has no opposite color"),
        }
    }
}

/// The four time-scale regimes for `q` relative to the critical size `g` and
/// to `1/p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    /// `q = g`.
    QEqualsG,
    /// `g << q << 1/p`.
    GLlQLlPInv,
    /// `q = 1/p`.
    QEqualsPInv,
    /// `1/p << q << n`.
    PInvLlQLlN,
}

/// Asymptotic scaling declaration: the regime, the exponents
/// `alpha_r > alpha_b > 0` with `a_S ~ alpha_S * q`, and the concrete
/// time-scale value `q` for an instance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegimeSpec {
    /// Which of the four q-regimes.
    pub regime: Regime,
    /// Red scaling exponent.
    pub alpha_r: f64,
    /// Black scaling exponent.
    pub alpha_b: f64,
    /// Concrete time-scale value for this instance.
    pub q: f64,
}

/// Relative tolerance at which `alpha_r` and `alpha_b` count as equal (the
/// balanced case is out of scope) and at which a supplied `q` must match the
/// critical size in the `q = g` regime.
const REL_TOL: f64 = 1e-12;

impl RegimeSpec {
    /// Builds a spec, rejecting `alpha_r <= alpha_b` (equality within 1e-12
    /// relative counts as equal) and non-positive `q`.
    pub fn new(regime: Regime, alpha_r: f64, alpha_b: f64, q: f64) -> Result<Self, ParamsError> {
        if !(alpha_b > 0.0) || !alpha_r.is_finite() || !alpha_b.is_finite() {
            return Err(ParamsError::InvalidAlphas { alpha_r, alpha_b });
        }
        let rel_gap = (alpha_r - alpha_b) / alpha_r.max(alpha_b);
        if rel_gap <= REL_TOL {
            return Err(ParamsError::InvalidAlphas { alpha_r, alpha_b });
        }
        if !(q > 0.0) || !q.is_finite() {
            return Err(ParamsError::InvalidQ {
                q,
                reason: "q must be positive and finite",
            });
        }
        Ok(RegimeSpec {
            regime,
            alpha_r,
            alpha_b,
            q,
        })
    }

    /// Builds a spec for an instance, checking that `q` is consistent with
    /// the regime: for `q = g` the supplied `q` must equal
    /// [`g_critical`]`(n, p, r)` to within 1e-12 relative.
    pub fn for_instance(
        regime: Regime,
        alpha_r: f64,
        alpha_b: f64,
        q: f64,
        n: u64,
        p: f64,
        r: u32,
    ) -> Result<Self, ParamsError> {
        if regime == Regime::QEqualsG {
            let g = g_critical(n, p, r);
            if ((q - g) / g).abs() > REL_TOL {
                return Err(ParamsError::InvalidQ {
                    q,
                    reason: "regime q_equals_g requires q = g_critical(n, p, r)",
                });
            }
        }
        Self::new(regime, alpha_r, alpha_b, q)
    }

    /// Seed count for exponent `alpha`: `floor(alpha * q)`.
    pub fn seed_count(&self, alpha: f64) -> u64 {
        math::floor(alpha * self.q) as u64
    }
}

/// Critical seed-set size of classical single-color bootstrap percolation:
/// `g = (1 - 1/r) * ((r-1)! / (n p^r))^(1/(r-1))`.
///
/// Above `g` (in the `q = g` scaling) the process percolates almost the
/// whole graph; below it stalls after activating `O(g)` nodes.
pub fn g_critical(n: u64, p: f64, r: u32) -> f64 {
    debug_assert!(r >= 2 && p > 0.0 && p < 1.0);
    let r = r as f64;
    let mut fact = 1.0; // (r-1)!
    let mut k = 2.0;
    while k <= r - 1.0 {
        fact *= k;
        k += 1.0;
    }
    let g = (1.0 - 1.0 / r) * math::powf(fact / (n as f64 * math::powf(p, r)), 1.0 / (r - 1.0));
    debug_assert!(g > 0.0);
    g
}

/// Draws the red seed set uniformly at random, then the black seed set
/// uniformly from the remainder. Returns disjoint sorted id lists of sizes
/// `a_r` and `a_b` over nodes `0..n`.
pub fn make_seeds(params: &ModelParams, rng: &mut RngStream) -> (Vec<u32>, Vec<u32>) {
    let n = params.n as usize;
    let take = (params.a_r + params.a_b) as usize;
    let mut pool: Vec<u32> = (0..n as u32).collect();
    // Partial Fisher-Yates: the first `take` slots end up uniform without
    // replacement.
    for i in 0..take {
        let j = rng.random_range(i..n);
        pool.swap(i, j);
    }
    let mut red: Vec<u32> = pool[..params.a_r as usize].to_vec();
    let mut black: Vec<u32> = pool[params.a_r as usize..take].to_vec();
    red.sort_unstable();
    black.sort_unstable();
    (red, black)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: u64, p: f64, r: u32, a_r: u64, a_b: u64) -> ModelParams {
        ModelParams {
            n,
            p,
            r,
            a_r,
            a_b,
            seed: 1,
        }
    }

    #[test]
    fn validate_accepts_plain_instance() {
        let w = params(100, 0.05, 2, 5, 3).validate().unwrap();
        // n*p = 5 > 1, p*sqrt(n)*ln(n) = 0.05*10*4.6 = 2.3 >= 1: dense side warns.
        assert_eq!(w, alloc::vec![ValidationWarning::DensityAboveWindow]);
    }

    #[test]
    fn validate_rejects_seed_overflow() {
        let err = params(10, 0.05, 2, 8, 3).validate().unwrap_err();
        assert!(matches!(err, ParamsError::SeedCountExceedsN { .. }));
    }

    #[test]
    fn validate_clean_window_instance() {
        let w = params(100_000, 1e-4, 2, 1000, 375).validate().unwrap();
        assert!(w.is_empty());
    }

    #[test]
    fn validate_rejects_bad_p_and_r() {
        assert!(matches!(
            params(10, 0.0, 2, 1, 1).validate(),
            Err(ParamsError::EdgeProbabilityOutOfRange { .. })
        ));
        assert!(matches!(
            params(10, 1.0, 2, 1, 1).validate(),
            Err(ParamsError::EdgeProbabilityOutOfRange { .. })
        ));
        assert!(matches!(
            params(10, 0.5, 1, 1, 1).validate(),
            Err(ParamsError::ThresholdTooSmall { .. })
        ));
        assert!(matches!(
            params(10, 0.5, 2, 5, 5).validate(),
            Err(ParamsError::NoWhiteNodes { .. })
        ));
    }

    #[test]
    fn g_critical_reference_values() {
        assert!((g_critical(1_000_000, 1e-4, 2) - 50.0).abs() < 1e-9);
        assert!((g_critical(100_000, 1e-4, 2) - 500.0).abs() < 1e-9);
        // r=2 with n*p^2 = 1 reduces to 1/2.
        assert!((g_critical(400, 0.05, 2) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn g_critical_sanity_pg_small() {
        let g = g_critical(100_000, 1e-4, 2);
        assert!(1e-4 * g < 1.0);
    }

    #[test]
    fn regime_spec_rejects_equal_alphas() {
        assert!(RegimeSpec::new(Regime::QEqualsG, 1.0, 1.0, 10.0).is_err());
        assert!(RegimeSpec::new(Regime::QEqualsG, 1.0, 1.0 - 1e-14, 10.0).is_err());
        assert!(RegimeSpec::new(Regime::QEqualsG, 1.0, 0.5, 10.0).is_ok());
        assert!(RegimeSpec::new(Regime::QEqualsG, 0.5, 1.0, 10.0).is_err());
    }

    #[test]
    fn regime_spec_checks_q_against_g() {
        let ok = RegimeSpec::for_instance(Regime::QEqualsG, 2.0, 0.75, 500.0, 100_000, 1e-4, 2);
        assert!(ok.is_ok());
        let bad = RegimeSpec::for_instance(Regime::QEqualsG, 2.0, 0.75, 501.0, 100_000, 1e-4, 2);
        assert!(matches!(bad, Err(ParamsError::InvalidQ { .. })));
    }

    #[test]
    fn seed_count_floors() {
        let spec = RegimeSpec::new(Regime::QEqualsG, 0.8, 0.5, 500.0).unwrap();
        assert_eq!(spec.seed_count(0.8), 400);
        assert_eq!(spec.seed_count(0.5), 250);
    }

    #[test]
    fn make_seeds_edge_cases() {
        let mut rng = RngStream::new(7, 0);
        let (r, b) = make_seeds(&params(12, 0.1, 2, 0, 0), &mut rng);
        assert!(r.is_empty() && b.is_empty());

        // Full red set is forced (validate() would reject it, but the draw
        // itself is well-defined).
        let mut rng = RngStream::new(7, 1);
        let (r, b) = make_seeds(&params(12, 0.1, 2, 12, 0), &mut rng);
        assert_eq!(r, (0..12).collect::<Vec<u32>>());
        assert!(b.is_empty());
    }

    #[test]
    fn make_seeds_deterministic() {
        let p = params(50, 0.1, 2, 7, 5);
        let a = make_seeds(&p, &mut RngStream::new(42, 3));
        let b = make_seeds(&p, &mut RngStream::new(42, 3));
        assert_eq!(a, b);
    }
}
