//! Laurent polynomials in `q` with rational exponents and rational
//! coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use super::Rational;

/// A finite sum `Σ c·q^e`.
///
/// Terms are kept sorted by increasing exponent with no zero coefficient, so
/// the zero polynomial is the empty list and `==` is exact equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: Vec<(Rational, Rational)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, Rational::zero())
    }

    /// `c·q^e`.
    pub fn monomial(c: Rational, e: Rational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(e, c)] }
        }
    }

    /// `q^e`.
    pub fn q_power(e: Rational) -> Self {
        Self::monomial(Rational::one(), e)
    }

    /// `q̂ = q − q⁻¹`.
    pub fn q_hat() -> Self {
        Self {
            terms: vec![
                (Rational::from_integer(-1), Rational::from_integer(-1)),
                (Rational::one(), Rational::one()),
            ],
        }
    }

    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs,
    /// combining like terms.
    pub fn from_terms(terms: impl IntoIterator<Item = (Rational, Rational)>) -> Self {
        let mut terms: Vec<_> = terms.into_iter().collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        Self {
            terms: combine_sorted(terms),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> &[(Rational, Rational)] {
        &self.terms
    }

    /// The coefficient when the polynomial is a constant (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(e, c)] if e.is_zero() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: &Rational) -> Self {
        if e.is_zero() {
            return self.clone();
        }
        Self {
            terms: self.terms.iter().map(|(x, c)| (x + e, c.clone())).collect(),
        }
    }
}

fn combine_sorted(sorted: Vec<(Rational, Rational)>) -> Vec<(Rational, Rational)> {
    let mut out: Vec<(Rational, Rational)> = Vec::with_capacity(sorted.len());
    for (e, c) in sorted {
        match out.last_mut() {
            Some((le, lc)) if *le == e => *lc += &c,
            _ => {
                if let Some((_, lc)) = out.last() {
                    if lc.is_zero() {
                        out.pop();
                    }
                }
                out.push((e, c));
            }
        }
    }
    if out.last().is_some_and(|(_, c)| c.is_zero()) {
        out.pop();
    }
    out
}

fn merge(a: &[(Rational, Rational)], b: &[(Rational, Rational)], negate_b: bool) -> Vec<(Rational, Rational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let rhs = |c: &Rational| if negate_b { -c } else { c.clone() };
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((b[j].0.clone(), rhs(&b[j].1)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(b[j..].iter().map(|(e, c)| (e.clone(), rhs(c))));
    out
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly {
            terms: merge(&self.terms, &rhs.terms, false),
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly {
            terms: merge(&self.terms, &rhs.terms, true),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if rhs.terms.len() == 1 {
            let (e, c) = &rhs.terms[0];
            return self.scale(c).shift(e);
        }
        if self.terms.len() == 1 {
            let (e, c) = &self.terms[0];
            return rhs.scale(c).shift(e);
        }
        let mut prods = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                prods.push((ea + eb, ca * cb));
            }
        }
        prods.sort_by(|a, b| a.0.cmp(&b.0));
        LaurentPoly {
            terms: combine_sorted(prods),
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;

            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs.clone();
            return;
        }
        self.terms = merge(&self.terms, &rhs.terms, false);
    }
}

impl From<Rational> for LaurentPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

/// Terms by decreasing exponent as `c*q^(e)` joined with ` + `; a `q^0`
/// factor is dropped and the zero polynomial prints as `0`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            if e.is_zero() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*q^({e})")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn q_power_constructor() {
        assert_eq!(LaurentPoly::q_power(Rational::zero()), LaurentPoly::one());
        let p = LaurentPoly::q_power(r(-3, 2));
        assert_eq!(p.terms(), &[(r(-3, 2), Rational::one())]);
    }

    #[test]
    fn q_hat_squared() {
        let qh = LaurentPoly::q_hat();
        let expect = LaurentPoly::from_terms([(r(2, 1), r(1, 1)), (r(0, 1), r(-2, 1)), (r(-2, 1), r(1, 1))]);
        assert_eq!(&qh * &qh, expect);
    }

    #[test]
    fn half_powers_multiply_to_q() {
        let h = LaurentPoly::q_power(r(1, 2));
        assert_eq!(&h * &h, LaurentPoly::q_power(Rational::one()));
    }

    #[test]
    fn additive_inverse_is_empty() {
        let p = LaurentPoly::from_terms([(r(1, 3), r(5, 1)), (r(-1, 1), r(-2, 7))]);
        assert!((&p + &(-&p)).is_zero());
        assert!((&p - &p).terms().is_empty());
    }

    #[test]
    fn from_terms_drops_cancelling_terms() {
        let p = LaurentPoly::from_terms([(r(1, 1), r(1, 1)), (r(1, 1), r(-1, 1)), (r(2, 1), r(3, 1))]);
        assert_eq!(p, LaurentPoly::monomial(r(3, 1), r(2, 1)));
        let z = LaurentPoly::from_terms([(r(0, 1), r(1, 1)), (r(0, 1), r(-1, 1))]);
        assert!(z.is_zero());
    }

    #[test]
    fn display_format() {
        assert_eq!(LaurentPoly::q_hat().to_string(), "1*q^(1) + -1*q^(-1)");
        let p = LaurentPoly::from_terms([(r(0, 1), r(2, 1)), (r(-3, 2), r(1, 2))]);
        assert_eq!(p.to_string(), "2 + 1/2*q^(-3/2)");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn constants() {
        assert_eq!(LaurentPoly::zero().as_constant(), Some(Rational::zero()));
        assert_eq!(LaurentPoly::constant(r(1, 2)).as_constant(), Some(r(1, 2)));
        assert_eq!(LaurentPoly::q_hat().as_constant(), None);
    }
}
