//! Belavin–Drinfeld triples of type `A_{n-1}`.
//!
//! A triple is stored as the partial map `τ` on simple-root indices
//! `1..=n-1` (`α_i = e_i − e_{i+1}`); `Γ₁` is its domain and `Γ₂` its image.
//! Two triples related by index reversal, inversion, or both are isomorphic;
//! [`BdTriple::canonical_form`] picks the lexicographically smallest member
//! of that orbit.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Largest supported `n`; subsets of simple roots are handled as `u64` masks.
pub const MAX_N: usize = 64;

/// Cartan inner product `(α_i, α_j)` of simple roots of `A_{n-1}`.
pub fn inner_product(i: usize, j: usize, n: usize) -> Result<i32> {
    for idx in [i, j] {
        if idx < 1 || idx >= n {
            return Err(Error::Input(format!(
                "simple root index {idx} outside 1..={}",
                n.saturating_sub(1)
            )));
        }
    }
    Ok(cartan(i, j))
}

pub(crate) fn cartan(i: usize, j: usize) -> i32 {
    match i.abs_diff(j) {
        0 => 2,
        1 => -1,
        _ => 0,
    }
}

/// A partial map `τ` on the simple roots of `A_{n-1}`.
///
/// Ordering is lexicographic on `(n, τ)` with an undefined image sorting
/// before any defined one; canonical forms are minima under this order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BdTriple {
    n: usize,
    /// `tau[i - 1] = Some(k)` encodes `τ(α_i) = α_k`.
    tau: Vec<Option<u8>>,
}

impl BdTriple {
    /// The triple with `Γ₁ = Γ₂ = ∅`.
    pub fn empty(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Self {
            n,
            tau: vec![None; n - 1],
        })
    }

    /// Builds the partial map from 1-indexed `(source, target)` pairs.
    ///
    /// Only ranges and single-valuedness are checked here; use
    /// [`BdTriple::is_valid`] or [`BdTriple::validated`] for the
    /// Belavin–Drinfeld conditions.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut t = Self::empty(n)?;
        for &(s, d) in pairs {
            for idx in [s, d] {
                if idx < 1 || idx >= n {
                    return Err(Error::Input(format!(
                        "simple root index {idx} outside 1..={} for n = {n}",
                        n - 1
                    )));
                }
            }
            if t.tau[s - 1].is_some() {
                return Err(Error::Input(format!("α_{s} mapped twice")));
            }
            t.tau[s - 1] = Some(d as u8);
        }
        Ok(t)
    }

    /// Like [`BdTriple::from_pairs`] but rejects maps failing the
    /// Belavin–Drinfeld conditions.
    pub fn validated(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let t = Self::from_pairs(n, pairs)?;
        t.check()?;
        Ok(t)
    }

    pub(crate) fn from_raw(n: usize, tau: &[Option<u8>]) -> Self {
        debug_assert_eq!(tau.len(), n - 1);
        Self { n, tau: tau.to_vec() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `τ(α_i)` as an index, `None` when `α_i ∉ Γ₁` or `i` is out of range.
    pub fn image(&self, i: usize) -> Option<usize> {
        if i < 1 || i >= self.n {
            return None;
        }
        self.tau[i - 1].map(usize::from)
    }

    pub fn in_gamma1(&self, i: usize) -> bool {
        self.image(i).is_some()
    }

    pub fn gamma1(&self) -> Vec<usize> {
        (1..self.n).filter(|&i| self.in_gamma1(i)).collect()
    }

    pub fn gamma2(&self) -> Vec<usize> {
        let mut g: Vec<usize> = self.tau.iter().flatten().map(|&k| k as usize).collect();
        g.sort_unstable();
        g
    }

    /// `|Γ₁|`.
    pub fn size(&self) -> usize {
        self.tau.iter().filter(|x| x.is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// 1-indexed `(source, target)` pairs in increasing source order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (1..self.n).filter_map(|i| self.image(i).map(|k| (i, k))).collect()
    }

    pub fn is_valid(&self) -> bool {
        self.check().is_ok()
    }

    fn check(&self) -> Result<()> {
        let n = self.n;
        for i in 1..n {
            let Some(ti) = self.image(i) else { continue };
            for j in i..n {
                let Some(tj) = self.image(j) else { continue };
                if cartan(ti, tj) != cartan(i, j) {
                    return Err(Error::InvalidTriple(format!(
                        "(τα_{i}, τα_{j}) = {} but (α_{i}, α_{j}) = {}",
                        cartan(ti, tj),
                        cartan(i, j)
                    )));
                }
            }
        }
        if !is_nilpotent(&self.tau) {
            return Err(Error::InvalidTriple("τ has a cycle".into()));
        }
        Ok(())
    }

    /// Index reversal `m ↦ n − m`: `τ'(α_m) = α_k` whenever `τ(α_{n−m}) = α_{n−k}`.
    pub fn reflect(&self) -> Self {
        Self {
            n: self.n,
            tau: reflect_raw(self.n, &self.tau),
        }
    }

    /// `(τ⁻¹, Γ₂, Γ₁)`. Assumes `τ` injective, which every valid triple is.
    pub fn inverse(&self) -> Self {
        Self {
            n: self.n,
            tau: inverse_raw(&self.tau),
        }
    }

    /// `[t, a(t), b(t), a(b(t))]` for reflection `a` and inversion `b`.
    pub fn orbit(&self) -> [Self; 4] {
        let inv = self.inverse();
        [self.clone(), self.reflect(), inv.reflect(), inv]
    }

    /// Minimum of the isomorphism orbit. Errors on an invalid triple.
    pub fn canonical_form(&self) -> Result<Self> {
        self.check()?;
        Ok(self.orbit().into_iter().min().expect("orbit is non-empty"))
    }

    pub fn is_canonical(&self) -> bool {
        is_canonical_raw(self.n, &self.tau)
    }
}

impl fmt::Display for BdTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (idx, (s, d)) in self.pairs().into_iter().enumerate() {
            if idx > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{s}->{d}")?;
        }
        f.write_str("}")
    }
}

fn check_n(n: usize) -> Result<()> {
    if !(2..=MAX_N).contains(&n) {
        return Err(Error::Input(format!("n = {n} outside 2..={MAX_N}")));
    }
    Ok(())
}

/// No index stays in `Γ₁` after `n − 1` applications of `τ`.
fn is_nilpotent(tau: &[Option<u8>]) -> bool {
    let len = tau.len();
    (0..len).all(|start| {
        let mut cur = start;
        for _ in 0..=len {
            match tau[cur] {
                Some(k) => cur = k as usize - 1,
                None => return true,
            }
        }
        false
    })
}

fn reflect_raw(n: usize, tau: &[Option<u8>]) -> Vec<Option<u8>> {
    (1..n).map(|m| tau[n - m - 1].map(|k| (n - k as usize) as u8)).collect()
}

fn inverse_raw(tau: &[Option<u8>]) -> Vec<Option<u8>> {
    let mut inv = vec![None; tau.len()];
    for (i, k) in tau.iter().enumerate() {
        if let Some(k) = k {
            inv[*k as usize - 1] = Some((i + 1) as u8);
        }
    }
    inv
}

fn is_canonical_raw(n: usize, tau: &[Option<u8>]) -> bool {
    let inv = inverse_raw(tau);
    let inv_tau = inv.as_slice();
    tau <= reflect_raw(n, tau).as_slice() && tau <= inv_tau && tau <= reflect_raw(n, inv_tau).as_slice()
}

/// Maximal runs of consecutive indices in `mask` as `(start, len)`, 1-indexed.
fn runs(mask: u64, n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut i = 1;
    while i < n {
        if mask >> (i - 1) & 1 == 1 {
            let start = i;
            while i < n && mask >> (i - 1) & 1 == 1 {
                i += 1;
            }
            out.push((start, i - start));
        } else {
            i += 1;
        }
    }
    out
}

/// Calls `visit` on every valid `τ` with domain `mask`, in run-assignment
/// order: runs left to right, target start ascending, forward before reversed.
///
/// Isometry forces each maximal run of `Γ₁` onto a run of the same length,
/// preserving or reversing order, with distinct image runs never adjacent.
fn for_each_with_domain(n: usize, mask: u64, visit: &mut impl FnMut(&[Option<u8>])) {
    let rs = runs(mask, n);
    let mut tau = vec![None; n - 1];
    assign(n, &rs, 0, 0, &mut tau, visit);
}

fn assign(
    n: usize,
    rs: &[(usize, usize)],
    idx: usize,
    blocked: u64,
    tau: &mut Vec<Option<u8>>,
    visit: &mut impl FnMut(&[Option<u8>]),
) {
    let Some(&(start, len)) = rs.get(idx) else {
        if is_nilpotent(tau) {
            visit(tau);
        }
        return;
    };
    for target in 1..=(n - len) {
        let bits = ((1u64 << len) - 1) << (target - 1);
        if bits & blocked != 0 {
            continue;
        }
        // image bits plus both neighbours
        let next_blocked = blocked | bits | (bits << 1) | (bits >> 1);
        let orientations: &[bool] = if len == 1 { &[false] } else { &[false, true] };
        for &reversed in orientations {
            for off in 0..len {
                let img = if reversed { target + len - 1 - off } else { target + off };
                tau[start + off - 1] = Some(img as u8);
            }
            assign(n, rs, idx + 1, next_blocked, tau, visit);
        }
        for off in 0..len {
            tau[start + off - 1] = None;
        }
    }
}

/// Every valid triple for `n`, not reduced modulo isomorphism.
///
/// Order: `Γ₁` by increasing bitmask (bit `i − 1` for `α_i`), then
/// run-assignment order within each `Γ₁`.
pub fn enumerate_all(n: usize) -> Result<Vec<BdTriple>> {
    check_n(n)?;
    Ok(domains(n)
        .into_par_iter()
        .map(|mask| {
            let mut out = Vec::new();
            for_each_with_domain(n, mask, &mut |tau| out.push(BdTriple::from_raw(n, tau)));
            out
        })
        .flatten()
        .collect())
}

/// Orbit representatives, in the same order as [`enumerate_all`].
pub fn enumerate_canonical(n: usize) -> Result<Vec<BdTriple>> {
    check_n(n)?;
    Ok(domains(n)
        .into_par_iter()
        .map(|mask| {
            let mut out = Vec::new();
            for_each_with_domain(n, mask, &mut |tau| {
                if is_canonical_raw(n, tau) {
                    out.push(BdTriple::from_raw(n, tau));
                }
            });
            out
        })
        .flatten()
        .collect())
}

/// Number of triples modulo isomorphism, without materializing them.
pub fn count_canonical(n: usize) -> Result<u64> {
    check_n(n)?;
    Ok(domains(n)
        .into_par_iter()
        .map(|mask| {
            let mut count = 0u64;
            for_each_with_domain(n, mask, &mut |tau| {
                if is_canonical_raw(n, tau) {
                    count += 1;
                }
            });
            count
        })
        .sum())
}

fn domains(n: usize) -> Vec<u64> {
    let bits = n - 1;
    if bits >= 64 {
        // 2^63 domains is far beyond any feasible enumeration anyway.
        panic!("enumeration over {bits} simple roots is not supported");
    }
    (0..(1u64 << bits)).collect()
}
