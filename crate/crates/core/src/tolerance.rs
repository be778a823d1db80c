/// Numerical thresholds shared by every kernel.
///
/// `eps_entry` is a relative entrywise threshold, normalised by
/// `1 + max-norm` of the operands being compared. `eps_eig` decides when two
/// eigenvalues are the same point of the spectrum. `eps_rank` is the relative
/// singular-value cut for numerical rank.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub eps_entry: f64,
    pub eps_eig: f64,
    pub eps_rank: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            eps_entry: 1e-9,
            eps_eig: 1e-7,
            eps_rank: 1e-9,
        }
    }
}

impl Tolerances {
    pub fn with_entry(mut self, eps_entry: f64) -> Self {
        self.eps_entry = eps_entry;
        self
    }

    pub fn is_valid(&self) -> bool {
        [self.eps_entry, self.eps_eig, self.eps_rank]
            .iter()
            .all(|e| e.is_finite() && *e > 0.0)
    }

    /// Coincidence radius for a cluster of `k` eigenvalues.
    ///
    /// A `k`-fold root of a polynomial whose coefficients carry a backward
    /// error `eta` splits into roots spread over `eta^(1/k)`. With
    /// `eta = eps_eig^2` a double root is resolved at `eps_eig`, a triple one at
    /// `eps_eig^(2/3)`. `shifted` is the size of the trace-free part, `scale`
    /// the size of the full matrix.
    pub(crate) fn cluster_radius(&self, k: usize, shifted: f64, scale: f64) -> f64 {
        let rel = match k {
            0 | 1 => 0.0,
            2 => self.eps_eig,
            _ => self.eps_eig.powf(2.0 / k as f64),
        };
        rel * shifted + self.eps_eig * scale
    }
}
