//! Construction of `R = q^{r̃⁰} (R_s + q̂ ã) q^{r̃⁰}` for a triple.
//!
//! Matrix units follow `e_α = e_ij` for `α = e_i − e_j`, so for a positive
//! root `α` the unit `e_{−α}` is strictly lower triangular.

mod banded;
mod roots;

pub(crate) use banded::fourth;
pub use banded::BandedOperator;
pub use roots::{extend_tau, prec_pairs, PositiveRoot, PrecPair};

use crate::algebra::{LaurentPoly, Rational};
use crate::error::{Error, Result};
use crate::r0::{self, CartanTensor};
use crate::triple::BdTriple;

/// `a = Σ_{α ≺ β} sign(α, β) (e_{−α} ⊗ e_β − e_β ⊗ e_{−α})`.
///
/// The factor 2 in front of the wedge sum cancels the wedge's ½, so every
/// entry is `±1`.
pub fn build_a(t: &BdTriple) -> Result<BandedOperator> {
    let n = t.n();
    let mut a = BandedOperator::zero(n);
    for pp in prec_pairs(t)? {
        let s = LaurentPoly::constant(Rational::from_integer(pp.sign as i64));
        let (ai, aj) = (pp.alpha.i, pp.alpha.j);
        let (bk, bl) = (pp.beta.i, pp.beta.j);
        a.add_unit(aj, ai, bk, bl, &s)?;
        a.add_unit(bk, bl, aj, ai, &-&s)?;
    }
    Ok(a)
}

/// `c = Σ_{α > 0} e_{−α} ∧ e_α = ½ Σ_{i<j} (e_ji ⊗ e_ij − e_ij ⊗ e_ji)`.
pub fn build_c(n: usize) -> BandedOperator {
    let half = LaurentPoly::constant(Rational::new(1, 2));
    let mut c = BandedOperator::zero(n);
    for i in 1..=n {
        for j in (i + 1)..=n {
            c.add_unit(j, i, i, j, &half).expect("on band");
            c.add_unit(i, j, j, i, &-&half).expect("on band");
        }
    }
    c
}

/// `ε = ac + ca + a²`.
pub fn build_epsilon(a: &BandedOperator, c: &BandedOperator) -> Result<BandedOperator> {
    a.mul(c)?.add(&c.mul(a)?)?.add(&a.mul(a)?)
}

/// Entrywise `ã = a · q^{a ε}` on the support of `a`.
pub fn build_a_tilde(a: &BandedOperator, eps: &BandedOperator) -> Result<BandedOperator> {
    let mut out = BandedOperator::zero(a.n());
    for ((i, k, j), entry) in a.iter() {
        let av = entry
            .as_constant()
            .ok_or_else(|| Error::Internal(format!("a_({i},{k},{j}) = {entry} is not constant")))?;
        let ev = match eps.get(i, k, j) {
            Some(p) => p
                .as_constant()
                .ok_or_else(|| Error::Internal(format!("ε_({i},{k},{j}) = {p} is not constant")))?,
            None => Rational::zero(),
        };
        out.set(i, k, j, LaurentPoly::monomial(av.clone(), &av * &ev))?;
    }
    Ok(out)
}

/// The standard R-matrix
/// `R_s = q Σ e_ii ⊗ e_ii + Σ_{i≠j} e_ii ⊗ e_jj + q̂ Σ_{i>j} e_ij ⊗ e_ji`.
pub fn build_rs(n: usize) -> BandedOperator {
    let q = LaurentPoly::q_power(Rational::one());
    let qh = LaurentPoly::q_hat();
    let mut r = BandedOperator::zero(n);
    for i in 1..=n {
        for k in 1..=n {
            let v = if i == k { q.clone() } else { LaurentPoly::one() };
            r.set(i, k, i, v).expect("on band");
            if i > k {
                r.set(i, k, k, qh.clone()).expect("on band");
            }
        }
    }
    r
}

/// `q^{r} x q^{r}`: entry `(i, k, j)` gains the factor
/// `q^{r_ik + r_{j,i+k−j}}`.
pub fn conjugate_by_q_r0(x: &BandedOperator, r: &CartanTensor) -> Result<BandedOperator> {
    if r.n() != x.n() {
        return Err(Error::Input(format!(
            "conjugating an n = {} operator by an n = {} Cartan tensor",
            x.n(),
            r.n()
        )));
    }
    Ok(x.map_entries(|(i, k, j), v| {
        let l = i + k - j;
        v.shift(&(r.get(i, k) + r.get(j, l)))
    }))
}

/// `R` for a triple and a valid `r̃⁰`.
pub fn build_r(t: &BdTriple, r: &CartanTensor) -> Result<BandedOperator> {
    if !r0::validate_r0(t, r)? {
        return Err(Error::Input(format!("r̃⁰ does not solve the Cartan equations for {t}")));
    }
    let a = build_a(t)?;
    let eps = build_epsilon(&a, &build_c(t.n()))?;
    let a_tilde = build_a_tilde(&a, &eps)?;
    let inner = build_rs(t.n()).add(&a_tilde.scale(&LaurentPoly::q_hat()))?;
    conjugate_by_q_r0(&inner, r)
}

/// `r̃⁰` and `R` for a triple, with the canonical choice of `r̃⁰`.
#[derive(Clone, Debug)]
pub struct Construction {
    pub r0: CartanTensor,
    pub r: BandedOperator,
}

pub fn construct(t: &BdTriple) -> Result<Construction> {
    let r0 = r0::solve_r0(t)?;
    let r = build_r(t, &r0)?;
    Ok(Construction { r0, r })
}
