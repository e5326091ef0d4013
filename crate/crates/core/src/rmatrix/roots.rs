//! Positive roots of `A_{n-1}`, the additive extension of `τ`, and the
//! relation `α ≺ β` with its sign.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::triple::BdTriple;

/// `e_i − e_j` with `i < j`, i.e. `α_i + α_{i+1} + … + α_{j−1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PositiveRoot {
    pub i: usize,
    pub j: usize,
}

impl PositiveRoot {
    pub fn new(i: usize, j: usize) -> Self {
        assert!(i < j, "positive root needs i < j, got ({i}, {j})");
        Self { i, j }
    }

    /// Number of simple roots in the sum minus one.
    pub fn height_minus_one(&self) -> usize {
        self.j - self.i - 1
    }

    /// Index of the leftmost simple summand.
    pub fn left(&self) -> usize {
        self.i
    }

    /// Index of the rightmost simple summand.
    pub fn right(&self) -> usize {
        self.j - 1
    }

    pub fn simple_indices(&self) -> std::ops::Range<usize> {
        self.i..self.j
    }
}

impl fmt::Display for PositiveRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}-e{}", self.i, self.j)
    }
}

/// `α ≺ β` together with `sign(α, β)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PrecPair {
    pub alpha: PositiveRoot,
    pub beta: PositiveRoot,
    pub sign: i8,
}

/// `τ` extended additively to every positive root whose simple summands all
/// lie in `Γ₁`. Roots outside that set are absent from the map.
pub fn extend_tau(t: &BdTriple) -> Result<BTreeMap<PositiveRoot, PositiveRoot>> {
    let n = t.n();
    let mut out = BTreeMap::new();
    for i in 1..n {
        for j in (i + 1)..=n {
            let root = PositiveRoot::new(i, j);
            let images: Option<Vec<usize>> = root.simple_indices().map(|s| t.image(s)).collect();
            let Some(images) = images else { continue };
            let lo = *images.iter().min().expect("root has a summand");
            let hi = *images.iter().max().expect("root has a summand");
            if hi - lo + 1 != images.len() {
                return Err(Error::Internal(format!(
                    "τ({root}) is not a root for {t}: images {images:?}"
                )));
            }
            out.insert(root, PositiveRoot::new(lo, hi + 1));
        }
    }
    Ok(out)
}

/// All pairs `α ≺ β`, i.e. `β = τᵏ(α)` for some `k ≥ 1`.
///
/// The sign is `(−1)^p` (`p + 1` the number of simple summands) when `τᵏ`
/// carries the left endpoint of `α` to the right endpoint of `β`, else `+1`.
/// The endpoint is tracked one application of `τ` at a time.
pub fn prec_pairs(t: &BdTriple) -> Result<Vec<PrecPair>> {
    let ext = extend_tau(t)?;
    let mut out = Vec::new();
    for &alpha in ext.keys() {
        let p = alpha.height_minus_one();
        let mut cur = alpha;
        let mut left = alpha.left();
        let mut steps = 0;
        while let Some(&next) = ext.get(&cur) {
            // nilpotency bounds the chain by n − 1 steps
            steps += 1;
            if steps >= t.n() {
                return Err(Error::Internal(format!("τ chain from {alpha} does not terminate")));
            }
            left = t
                .image(left)
                .ok_or_else(|| Error::Internal(format!("endpoint α_{left} left Γ₁ inside {cur}")))?;
            cur = next;
            let sign = if left == cur.right() && p % 2 == 1 { -1 } else { 1 };
            out.push(PrecPair { alpha, beta: cur, sign });
        }
    }
    Ok(out)
}
