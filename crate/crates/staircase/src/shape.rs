use serde::{Deserialize, Serialize};

use crate::exact::ExactError;

/// The truncated staircase `(n, n-1, ..., n-b+1)`: at most `b` distinct parts,
/// each of size at most `n`.
///
/// Shapes with `b > n` are accepted but behave like `b = n` (at most `n`
/// distinct positive parts fit under the diagonal); [`Self::effective_b`]
/// exposes the clamp so reports can surface it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StaircaseShape {
    n: u32,
    b: u32,
}

impl StaircaseShape {
    pub fn new(n: u32, b: u32) -> Result<Self, ExactError> {
        if n == 0 || b == 0 {
            return Err(ExactError::InvalidShape { n, b });
        }
        Ok(StaircaseShape { n, b })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    /// Number of parts actually usable: `min(b, n)`.
    pub fn effective_b(&self) -> u32 {
        self.b.min(self.n)
    }

    pub fn is_clamped(&self) -> bool {
        self.b > self.n
    }

    /// Largest `l` with `c(l) > 0`: `b*n - b*(b-1)/2` (with the clamped `b`).
    pub fn degree_bound(&self) -> usize {
        let n = self.n as usize;
        let b = self.effective_b() as usize;
        b * n - b * (b - 1) / 2
    }
}

impl std::fmt::Display for StaircaseShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "lambda({}, {})", self.n, self.b)
    }
}
