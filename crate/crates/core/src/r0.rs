//! The Cartan component `r̃⁰ ∈ h ⊗ h` of a triple.
//!
//! `r̃⁰` must be skew (`r̃⁰₁₂ + r̃⁰₂₁ = 0`) and satisfy, for every `α ∈ Γ₁`,
//!
//! ```text
//! ((α − τα) ⊗ 1) r̃⁰ = ½ ((α + τα) ⊗ 1) P⁰
//! ```
//!
//! In the basis `(f_i)` dual to `(α_i − τα_i)` these conditions fix every
//! row of the coefficient matrix indexed by `Γ₁`; the remaining block is
//! free and set to zero. The result is then carried to the basis `(g_i)`
//! dual to the simple roots, and finally to the diagonal matrix units
//! `e_ii` through the fundamental coweights of `sl(n)`.

use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::matrix::{ensure_shape, SmallMatrix};
use crate::triple::BdTriple;

/// An element `Σ x_ik e_ii ⊗ e_kk` of `h ⊗ h`, stored densely as the `n × n`
/// matrix `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanTensor {
    entries: SmallMatrix,
}

impl CartanTensor {
    pub fn zero(n: usize) -> Self {
        Self {
            entries: SmallMatrix::zeros(n, n),
        }
    }

    pub fn from_matrix(entries: SmallMatrix) -> Result<Self> {
        if !entries.is_square() {
            return Err(Error::Input(format!(
                "Cartan tensor needs a square matrix, got {}x{}",
                entries.rows(),
                entries.cols()
            )));
        }
        Ok(Self { entries })
    }

    pub fn n(&self) -> usize {
        self.entries.rows()
    }

    /// Coefficient of `e_ii ⊗ e_kk`, 1-indexed.
    pub fn get(&self, i: usize, k: usize) -> &Rational {
        &self.entries[(i - 1, k - 1)]
    }

    pub fn matrix(&self) -> &SmallMatrix {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_zero()
    }

    /// `entries[i][k] = −entries[k][i]`.
    pub fn is_skew(&self) -> bool {
        self.entries.is_skew_symmetric()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n(), "Cartan tensor size mismatch");
        let n = self.n();
        Self {
            entries: SmallMatrix::from_fn(n, n, |r, c| &self.entries[(r, c)] + &other.entries[(r, c)]),
        }
    }

    pub fn scale(&self, f: &Rational) -> Self {
        let n = self.n();
        Self {
            entries: SmallMatrix::from_fn(n, n, |r, c| &self.entries[(r, c)] * f),
        }
    }

    /// Applies the functional `λ = Σ λ_a e_a` to the first tensor leg:
    /// `k ↦ Σ_a λ_a x_ak`.
    pub fn contract_first_leg(&self, lambda: &[Rational]) -> Vec<Rational> {
        let n = self.n();
        assert_eq!(lambda.len(), n);
        (0..n)
            .map(|k| {
                lambda
                    .iter()
                    .enumerate()
                    .filter(|(_, l)| !l.is_zero())
                    .map(|(a, l)| l * &self.entries[(a, k)])
                    .sum()
            })
            .collect()
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.entries.to_strings()
    }
}

/// Projection of the swap element to `h ⊗ h`: `(n−1)/n` on the diagonal and
/// `−1/n` elsewhere.
pub fn p0(n: usize) -> CartanTensor {
    let nn = n as i64;
    let diag = Rational::new(nn - 1, nn);
    let off = Rational::new(-1, nn);
    CartanTensor {
        entries: SmallMatrix::from_fn(n, n, |r, c| if r == c { diag.clone() } else { off.clone() }),
    }
}

/// `α_i = e_i − e_{i+1}` in coordinates of `(e_1, …, e_n)`.
fn simple_root(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i - 1] = Rational::one();
    v[i] = Rational::from_integer(-1);
    v
}

/// `τα_i`, with `τα = 0` outside `Γ₁`.
fn tau_root(t: &BdTriple, i: usize) -> Vec<Rational> {
    match t.image(i) {
        Some(k) => simple_root(t.n(), k),
        None => vec![Rational::zero(); t.n()],
    }
}

fn combine(a: &[Rational], b: &[Rational], sign: i64) -> Vec<Rational> {
    let s = Rational::from_integer(sign);
    a.iter().zip(b).map(|(x, y)| x + &(y * &s)).collect()
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `r̃⁰` in the basis `(f_i)` with the free block chosen as zero.
///
/// For `α_i ∈ Γ₁`, `b_ij = ½(α_i + τα_i, α_j − τα_j)`; rows outside `Γ₁` are
/// filled by skew-symmetry.
pub fn r0_tilde_f_basis(t: &BdTriple) -> Result<SmallMatrix> {
    let n = t.n();
    let m = n - 1;
    let half = Rational::new(1, 2);
    let plus: Vec<Vec<Rational>> = (1..n)
        .map(|i| combine(&simple_root(n, i), &tau_root(t, i), 1))
        .collect();
    let minus: Vec<Vec<Rational>> = (1..n)
        .map(|i| combine(&simple_root(n, i), &tau_root(t, i), -1))
        .collect();
    let mut b = SmallMatrix::zeros(m, m);
    for i in 1..n {
        if !t.in_gamma1(i) {
            continue;
        }
        for j in 1..n {
            b[(i - 1, j - 1)] = &dot(&plus[i - 1], &minus[j - 1]) * &half;
        }
    }
    for i in 1..n {
        for j in 1..n {
            match (t.in_gamma1(i), t.in_gamma1(j)) {
                (false, true) => b[(i - 1, j - 1)] = -&b[(j - 1, i - 1)],
                (true, true) if i < j && b[(i - 1, j - 1)] != -&b[(j - 1, i - 1)] => {
                    return Err(Error::Internal(format!(
                        "b_{i}{j} = {} and b_{j}{i} = {} are not skew for {t}",
                        b[(i - 1, j - 1)],
                        b[(j - 1, i - 1)]
                    )));
                }
                _ => {}
            }
        }
    }
    Ok(b)
}

/// Matrix of `1 − τ` on `h*` in the basis of simple roots; column `i` holds
/// the coordinates of `α_i − τα_i`.
pub fn one_minus_tau_matrix(t: &BdTriple) -> SmallMatrix {
    let m = t.n() - 1;
    let mut a = SmallMatrix::identity(m);
    for i in 1..=m {
        if let Some(k) = t.image(i) {
            a[(k - 1, i - 1)] -= &Rational::one();
        }
    }
    a
}

fn one_minus_tau_inverse(t: &BdTriple) -> Result<SmallMatrix> {
    one_minus_tau_matrix(t)
        .inverse()
        .ok_or_else(|| Error::Internal(format!("1 − τ is singular for {t}; τ cannot be nilpotent")))
}

/// `b' = M⁻ᵀ b M⁻¹` with `M = 1 − τ`: from the `(f_i)` basis to `(g_i)`.
pub fn change_to_g_basis(b: &SmallMatrix, t: &BdTriple) -> Result<SmallMatrix> {
    let m = t.n() - 1;
    ensure_shape("change_to_g_basis", b, m, m)?;
    let inv = one_minus_tau_inverse(t)?;
    Ok(&(&inv.transpose() * b) * &inv)
}

/// Row `i` holds the fundamental coweight `g_i` in coordinates of `e_jj`:
/// `g_i = ((n−i)(e_11+…+e_ii) − i(e_{i+1,i+1}+…+e_nn)) / n`.
pub fn coweight_matrix(n: usize) -> SmallMatrix {
    let nn = n as i64;
    SmallMatrix::from_fn(n - 1, n, |r, c| {
        let i = r as i64 + 1;
        let j = c as i64 + 1;
        if j <= i {
            Rational::new(nn - i, nn)
        } else {
            Rational::new(-i, nn)
        }
    })
}

/// `Wᵀ b' W`: from `(g_i)` coordinates to the `n × n` tensor over `e_ii`.
///
/// The half-way product `b'' = b' W` is checked against the closed form for
/// its first column, `b''_{i1} = ((n−1)b'_{i1} + (n−2)b'_{i2} + … + b'_{i,n−1}) / n`.
pub fn expand_to_weight_basis(bp: &SmallMatrix, n: usize) -> Result<CartanTensor> {
    ensure_shape("expand_to_weight_basis", bp, n - 1, n - 1)?;
    let w = coweight_matrix(n);
    let half_way = bp * &w;
    let nn = Rational::from_integer(n as i64);
    for i in 0..n - 1 {
        let expected: Rational = (0..n - 1)
            .map(|j| bp[(i, j)].clone() * Rational::from_integer((n - 1 - j) as i64))
            .sum::<Rational>()
            / nn.clone();
        if half_way[(i, 0)] != expected {
            return Err(Error::Internal(format!(
                "b''_{{{},1}} = {} disagrees with the first-column formula {}",
                i + 1,
                half_way[(i, 0)],
                expected
            )));
        }
    }
    CartanTensor::from_matrix(&w.transpose() * &half_way)
}

/// The canonical `r̃⁰` for `t` (free block zero).
pub fn solve_r0(t: &BdTriple) -> Result<CartanTensor> {
    let b = r0_tilde_f_basis(t)?;
    let bp = change_to_g_basis(&b, t)?;
    if !bp.is_skew_symmetric() {
        return Err(Error::Internal(format!("b' lost skew-symmetry for {t}")));
    }
    let r = expand_to_weight_basis(&bp, t.n())?;
    if !r.is_skew() {
        return Err(Error::Internal(format!("r̃⁰ lost skew-symmetry for {t}")));
    }
    Ok(r)
}

fn check_tensor_size(t: &BdTriple, r: &CartanTensor) -> Result<()> {
    if r.n() != t.n() {
        return Err(Error::Input(format!(
            "Cartan tensor is {0}x{0} but the triple has n = {1}",
            r.n(),
            t.n()
        )));
    }
    Ok(())
}

/// Checks skewness and `((α − τα) ⊗ 1) r = ½((α + τα) ⊗ 1) P⁰` for every
/// `α ∈ Γ₁`.
pub fn validate_r0(t: &BdTriple, r: &CartanTensor) -> Result<bool> {
    check_tensor_size(t, r)?;
    if !r.is_skew() {
        return Ok(false);
    }
    let n = t.n();
    let p = p0(n);
    let half = Rational::new(1, 2);
    for i in t.gamma1() {
        let alpha = simple_root(n, i);
        let tau_alpha = tau_root(t, i);
        let lhs = r.contract_first_leg(&combine(&alpha, &tau_alpha, -1));
        let rhs_functional: Vec<Rational> = combine(&alpha, &tau_alpha, 1).iter().map(|x| x * &half).collect();
        let rhs = p.contract_first_leg(&rhs_functional);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Skew and `((α − τα) ⊗ 1) r' = 0` for every `α ∈ Γ₁`: the directions in
/// which `r̃⁰` may be shifted.
pub fn in_free_space(t: &BdTriple, r: &CartanTensor) -> Result<bool> {
    check_tensor_size(t, r)?;
    if !r.is_skew() {
        return Ok(false);
    }
    let n = t.n();
    Ok(t.gamma1().into_iter().all(|i| {
        r.contract_first_leg(&combine(&simple_root(n, i), &tau_root(t, i), -1))
            .iter()
            .all(Rational::is_zero)
    }))
}

/// A basis of the free space, one element per pair `i < j` with
/// `α_i, α_j ∉ Γ₁`; its size is `C(n − |Γ₁| − 1, 2)`.
pub fn free_space_basis(t: &BdTriple) -> Result<Vec<CartanTensor>> {
    let n = t.n();
    let free: Vec<usize> = (1..n).filter(|&i| !t.in_gamma1(i)).collect();
    let mut out = Vec::new();
    for (a, &i) in free.iter().enumerate() {
        for &j in &free[a + 1..] {
            let mut e = SmallMatrix::zeros(n - 1, n - 1);
            e[(i - 1, j - 1)] = Rational::one();
            e[(j - 1, i - 1)] = Rational::from_integer(-1);
            let bp = change_to_g_basis(&e, t)?;
            out.push(expand_to_weight_basis(&bp, n)?);
        }
    }
    Ok(out)
}
