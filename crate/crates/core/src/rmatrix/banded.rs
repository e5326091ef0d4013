use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::algebra::{LaurentPoly, Rational};
use crate::error::{Error, Result};

/// An element `Σ x_{ik}^j e_ij ⊗ e_{k,i+k−j}` of `Mat_n ⊗ Mat_n`.
///
/// These are exactly the operators commuting with the diagonal weight
/// grading. Keys are `(i, k, j)`, 1-indexed; the fourth index
/// `l = i + k − j` is implied and always lies in `1..=n`. Zero entries are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BandedOperator {
    n: usize,
    entries: BTreeMap<(usize, usize, usize), LaurentPoly>,
}

/// `i + k − j` if it is a valid index.
pub(crate) fn fourth(n: usize, i: usize, k: usize, j: usize) -> Option<usize> {
    let l = (i + k).checked_sub(j)?;
    (1..=n).contains(&l).then_some(l)
}

impl BandedOperator {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            entries: BTreeMap::new(),
        }
    }

    /// `Σ_{i,k} e_ii ⊗ e_kk`.
    pub fn identity(n: usize) -> Self {
        let mut x = Self::zero(n);
        for i in 1..=n {
            for k in 1..=n {
                x.entries.insert((i, k, i), LaurentPoly::one());
            }
        }
        x
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `x_{ik}^j`, 1-indexed.
    pub fn get(&self, i: usize, k: usize, j: usize) -> Option<&LaurentPoly> {
        self.entries.get(&(i, k, j))
    }

    /// Coefficient of `e_ij ⊗ e_kl`; zero off the band.
    pub fn unit_coeff(&self, i: usize, j: usize, k: usize, l: usize) -> LaurentPoly {
        if i + k != j + l {
            return LaurentPoly::zero();
        }
        self.get(i, k, j).cloned().unwrap_or_default()
    }

    fn check_key(&self, i: usize, k: usize, j: usize) -> Result<()> {
        let in_range = |x: usize| (1..=self.n).contains(&x);
        if !(in_range(i) && in_range(k) && in_range(j)) || fourth(self.n, i, k, j).is_none() {
            return Err(Error::Input(format!(
                "({i}, {k}, {j}) is off the band for n = {}",
                self.n
            )));
        }
        Ok(())
    }

    /// Replaces `x_{ik}^j`; a zero value removes the entry.
    pub fn set(&mut self, i: usize, k: usize, j: usize, value: LaurentPoly) -> Result<()> {
        self.check_key(i, k, j)?;
        if value.is_zero() {
            self.entries.remove(&(i, k, j));
        } else {
            self.entries.insert((i, k, j), value);
        }
        Ok(())
    }

    /// `x_{ik}^j += value`.
    pub fn add_at(&mut self, i: usize, k: usize, j: usize, value: &LaurentPoly) -> Result<()> {
        self.check_key(i, k, j)?;
        let slot = self.entries.entry((i, k, j)).or_default();
        *slot += value;
        if slot.is_zero() {
            self.entries.remove(&(i, k, j));
        }
        Ok(())
    }

    /// Adds `value · e_ij ⊗ e_kl`; errors unless `i + k = j + l`.
    pub fn add_unit(&mut self, i: usize, j: usize, k: usize, l: usize, value: &LaurentPoly) -> Result<()> {
        if i + k != j + l {
            return Err(Error::Input(format!("e_{i}{j} ⊗ e_{k}{l} is off the band")));
        }
        self.add_at(i, k, j, value)
    }

    /// Entries in `(i, k, j)` order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize, usize), &LaurentPoly)> {
        self.entries.iter().map(|(&k, v)| (k, v))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_n(other)?;
        let mut out = self.clone();
        for (&(i, k, j), v) in &other.entries {
            out.add_at(i, k, j, v)?;
        }
        Ok(out)
    }

    /// Multiplies every entry by `p`.
    pub fn scale(&self, p: &LaurentPoly) -> Self {
        Self {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|(&key, v)| (key, v * p))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        self.scale(&LaurentPoly::constant(c.clone()))
    }

    /// Applies `f` to each `(key, entry)`, dropping zero results.
    pub fn map_entries(&self, mut f: impl FnMut((usize, usize, usize), &LaurentPoly) -> LaurentPoly) -> Self {
        Self {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|(&key, v)| (key, f(key, v)))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    fn same_n(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Input(format!(
                "banded operators of different sizes ({} and {})",
                self.n, other.n
            )));
        }
        Ok(())
    }

    /// Composition `xy`: `(xy)_{ik}^j = Σ_p x_{ik}^p y_{p,i+k−p}^j`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_n(other)?;
        let mut by_rows: HashMap<(usize, usize), Vec<(usize, &LaurentPoly)>> = HashMap::new();
        for (&(p, kk, j), v) in &other.entries {
            by_rows.entry((p, kk)).or_default().push((j, v));
        }
        let mut out = Self::zero(self.n);
        for (&(i, k, p), x) in &self.entries {
            let l = i + k - p;
            let Some(row) = by_rows.get(&(p, l)) else { continue };
            for &(j, y) in row {
                out.add_at(i, k, j, &(x * y))?;
            }
        }
        Ok(out)
    }

    /// Lines `i j k l : <poly>` for each entry `e_ij ⊗ e_kl`, sorted by
    /// `(i, j, k, l)`.
    pub fn render_lines(&self) -> Vec<String> {
        self.unit_entries()
            .into_iter()
            .map(|(i, j, k, l, p)| format!("{i} {j} {k} {l} : {p}"))
            .collect()
    }

    /// `(i, j, k, l, coefficient)` for each `e_ij ⊗ e_kl`, sorted.
    pub fn unit_entries(&self) -> Vec<(usize, usize, usize, usize, &LaurentPoly)> {
        let mut out: Vec<_> = self
            .entries
            .iter()
            .map(|(&(i, k, j), v)| (i, j, k, i + k - j, v))
            .collect();
        out.sort_by_key(|e| (e.0, e.1, e.2, e.3));
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.unit_entries()
                .into_iter()
                .map(|(i, j, k, l, p)| serde_json::json!([i, j, k, l, p.to_string()]))
                .collect(),
        )
    }
}

impl fmt::Display for BandedOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in self.render_lines() {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: i64) -> LaurentPoly {
        LaurentPoly::constant(Rational::from_integer(x))
    }

    #[test]
    fn band_is_enforced() {
        let mut x = BandedOperator::zero(3);
        assert!(x.set(1, 1, 3, c(1)).is_err()); // l = -1
        assert!(x.set(3, 3, 1, c(1)).is_err()); // l = 5
        assert!(x.set(0, 1, 1, c(1)).is_err());
        assert!(x.add_unit(1, 2, 2, 2, &c(1)).is_err());
        x.add_unit(1, 2, 2, 1, &c(1)).unwrap();
        assert_eq!(x.get(1, 2, 2), Some(&c(1)));
    }

    #[test]
    fn zero_entries_are_dropped() {
        let mut x = BandedOperator::zero(2);
        x.add_at(1, 1, 1, &c(2)).unwrap();
        x.add_at(1, 1, 1, &c(-2)).unwrap();
        assert!(x.is_empty());
        x.set(2, 2, 2, c(3)).unwrap();
        x.set(2, 2, 2, LaurentPoly::zero()).unwrap();
        assert!(x.is_empty());
    }

    #[test]
    fn identity_is_neutral() {
        let mut y = BandedOperator::zero(3);
        y.set(2, 1, 1, LaurentPoly::q_hat()).unwrap();
        y.set(1, 3, 2, c(5)).unwrap();
        let id = BandedOperator::identity(3);
        assert_eq!(id.mul(&y).unwrap(), y);
        assert_eq!(y.mul(&id).unwrap(), y);
    }

    #[test]
    fn size_mismatch_is_an_error() {
        assert!(BandedOperator::zero(2).mul(&BandedOperator::zero(3)).is_err());
        assert!(BandedOperator::zero(2).add(&BandedOperator::zero(3)).is_err());
    }

    #[test]
    fn rendering() {
        let mut x = BandedOperator::zero(2);
        x.set(2, 1, 1, LaurentPoly::q_hat()).unwrap();
        x.set(1, 1, 1, LaurentPoly::q_power(Rational::one())).unwrap();
        assert_eq!(
            x.render_lines(),
            vec!["1 1 1 1 : 1*q^(1)", "2 1 1 2 : 1*q^(1) + -1*q^(-1)"]
        );
        assert_eq!(x.to_json()[1], serde_json::json!([2, 1, 1, 2, "1*q^(1) + -1*q^(-1)"]));
    }
}
