//! Naive dense arithmetic on `V^{⊗2}` and `V^{⊗3}`, used only to cross-check
//! the banded code at small `n`.

use crate::algebra::{LaurentPoly, Rational};
use crate::error::{Error, Result};
use crate::rmatrix::BandedOperator;

/// Largest `n` the dense oracle accepts; `V^{⊗3}` has `n³` rows.
pub const DENSE_MAX_N: usize = 4;

/// Square matrix of Laurent polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMatrix {
    dim: usize,
    data: Vec<LaurentPoly>,
}

impl DenseMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![LaurentPoly::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = LaurentPoly::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &LaurentPoly {
        &self.data[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: LaurentPoly) {
        self.data[r * self.dim + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(LaurentPoly::is_zero)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let d = self.dim;
        let mut out = Self::zeros(d);
        for r in 0..d {
            for m in 0..d {
                let x = self.get(r, m);
                if x.is_zero() {
                    continue;
                }
                for c in 0..d {
                    let y = other.get(m, c);
                    if !y.is_zero() {
                        out.data[r * d + c] += &(x * y);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        Self {
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, p: &LaurentPoly) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|a| a * p).collect(),
        }
    }
}

fn guard(n: usize) -> Result<()> {
    if n > DENSE_MAX_N {
        return Err(Error::TooLarge { n, limit: DENSE_MAX_N });
    }
    Ok(())
}

/// `e_ij ⊗ e_kl` sits at row `(i, k)`, column `(j, l)`.
pub fn to_dense(x: &BandedOperator) -> DenseMatrix {
    let n = x.n();
    let mut m = DenseMatrix::zeros(n * n);
    for (i, j, k, l, v) in x.unit_entries() {
        m.set((i - 1) * n + (k - 1), (j - 1) * n + (l - 1), v.clone());
    }
    m
}

/// Rebuilds a banded operator, failing if anything lies off the band.
pub fn from_dense(m: &DenseMatrix, n: usize) -> Result<BandedOperator> {
    let mut x = BandedOperator::zero(n);
    for r in 0..m.dim() {
        for c in 0..m.dim() {
            let v = m.get(r, c);
            if v.is_zero() {
                continue;
            }
            let (i, k) = (r / n + 1, r % n + 1);
            let (j, l) = (c / n + 1, c % n + 1);
            x.add_unit(i, j, k, l, v)?;
        }
    }
    Ok(x)
}

/// Which two of the three tensor legs an operator acts on.
#[derive(Clone, Copy, Debug)]
pub enum Legs {
    L12,
    L13,
    L23,
}

/// Embeds a two-leg operator into `End(V^{⊗3})`.
pub fn embed(x: &BandedOperator, legs: Legs) -> DenseMatrix {
    let n = x.n();
    let idx = |a: usize, b: usize, c: usize| ((a - 1) * n + (b - 1)) * n + (c - 1);
    let mut m = DenseMatrix::zeros(n * n * n);
    for (i, j, k, l, v) in x.unit_entries() {
        for f in 1..=n {
            let (r, c) = match legs {
                Legs::L12 => (idx(i, k, f), idx(j, l, f)),
                Legs::L13 => (idx(i, f, k), idx(j, f, l)),
                Legs::L23 => (idx(f, i, k), idx(f, j, l)),
            };
            m.set(r, c, v.clone());
        }
    }
    m
}

/// Dense product of two banded operators, returned in banded form.
pub fn dense_mul(x: &BandedOperator, y: &BandedOperator) -> Result<BandedOperator> {
    guard(x.n())?;
    from_dense(&to_dense(x).mul(&to_dense(y)), x.n())
}

/// `q^{r} X q^{r}` with `q^{r}` built as a diagonal matrix.
pub fn dense_conjugate(x: &BandedOperator, r0: &crate::r0::CartanTensor) -> Result<BandedOperator> {
    let n = x.n();
    guard(n)?;
    let mut d = DenseMatrix::zeros(n * n);
    for i in 1..=n {
        for k in 1..=n {
            let row = (i - 1) * n + (k - 1);
            d.set(row, row, LaurentPoly::q_power(r0.get(i, k).clone()));
        }
    }
    from_dense(&d.mul(&to_dense(x)).mul(&d), n)
}

/// `(R₁₂R₁₃R₂₃ = R₂₃R₁₃R₁₂, (PR − q)(PR + q⁻¹) = 0)` by dense products.
pub fn dense_check(r: &BandedOperator) -> Result<(bool, bool)> {
    let n = r.n();
    guard(n)?;
    let r12 = embed(r, Legs::L12);
    let r13 = embed(r, Legs::L13);
    let r23 = embed(r, Legs::L23);
    let qybe = r12.mul(&r13).mul(&r23) == r23.mul(&r13).mul(&r12);

    let mut p = DenseMatrix::zeros(n * n);
    for a in 0..n {
        for b in 0..n {
            p.set(a * n + b, b * n + a, LaurentPoly::one());
        }
    }
    let pr = p.mul(&to_dense(r));
    let id = DenseMatrix::identity(n * n);
    let q = LaurentPoly::q_power(Rational::one());
    let q_inv = LaurentPoly::q_power(Rational::from_integer(-1));
    let left = pr.add(&id.scale(&-&q));
    let right = pr.add(&id.scale(&q_inv));
    let hecke = left.mul(&right).is_zero();
    Ok((qybe, hecke))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rmatrix::build_rs;

    #[test]
    fn round_trip() {
        let rs = build_rs(3);
        assert_eq!(from_dense(&to_dense(&rs), 3).unwrap(), rs);
    }

    #[test]
    fn off_band_dense_is_rejected() {
        let mut m = DenseMatrix::zeros(4);
        m.set(0, 1, LaurentPoly::one()); // e11 ⊗ e12
        assert!(from_dense(&m, 2).is_err());
    }

    #[test]
    fn standard_r_passes_dense() {
        for n in 2..=3 {
            assert_eq!(dense_check(&build_rs(n)).unwrap(), (true, true));
        }
    }

    #[test]
    fn identity_fails_hecke_but_satisfies_qybe() {
        let id = BandedOperator::identity(2);
        assert_eq!(dense_check(&id).unwrap(), (true, false));
    }

    #[test]
    fn size_guard() {
        assert!(matches!(dense_check(&build_rs(5)), Err(Error::TooLarge { n: 5, .. })));
    }
}
