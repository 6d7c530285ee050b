//! Integer Laurent polynomials in the bracket variable `A`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A Laurent polynomial with `i64` coefficients. Zero coefficients are never
/// stored, so structural equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coeff: i64, exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i32, i64)>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c)?;
        }
        Ok(p)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0) == Some(&1)
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, exp: i32, coeff: i64) -> Result<()> {
        if coeff == 0 {
            return Ok(());
        }
        let entry = self.terms.entry(exp).or_insert(0);
        *entry = entry.checked_add(coeff).ok_or(Error::CoefficientOverflow)?;
        if *entry == 0 {
            self.terms.remove(&exp);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c)?;
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                let c = c1.checked_mul(c2).ok_or(Error::CoefficientOverflow)?;
                let e = e1.checked_add(e2).ok_or(Error::CoefficientOverflow)?;
                out.add_term(e, c)?;
            }
        }
        Ok(out)
    }

    pub fn checked_scale(&self, k: i64) -> Result<Self> {
        let mut out = Self::zero();
        for (e, c) in self.terms() {
            out.add_term(e, c.checked_mul(k).ok_or(Error::CoefficientOverflow)?)?;
        }
        Ok(out)
    }

    pub fn checked_pow(&self, k: u32) -> Result<Self> {
        let mut out = Self::one();
        for _ in 0..k {
            out = out.checked_mul(self)?;
        }
        Ok(out)
    }

    /// Multiplies by `A^shift`.
    pub fn shift(&self, shift: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, &c)| (e + shift, c)).collect(),
        }
    }

    /// The substitution `A -> A^-1`.
    pub fn negate_exponents(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }

    /// Rewrites a polynomial in `A` whose exponents are all multiples of 4 in
    /// the Jones variable `t = A^-4`. Returns `None` if some exponent is not
    /// divisible by 4.
    pub fn to_jones_t(&self) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (e, c) in self.terms() {
            if e % 4 != 0 {
                return None;
            }
            terms.insert(-e / 4, c);
        }
        Some(Self { terms })
    }

    /// Formats the polynomial with an arbitrary variable name.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (e, c)) in self.terms().rev().enumerate() {
            let neg = c < 0;
            let abs = c.unsigned_abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            match e {
                0 => s.push_str(&abs.to_string()),
                _ => {
                    if abs != 1 {
                        s.push_str(&abs.to_string());
                    }
                    s.push_str(var);
                    if e != 1 {
                        s.push('^');
                        s.push_str(&e.to_string());
                    }
                }
            }
        }
        s
    }
}

/// Descending-exponent form, e.g. `-A^5 - A^-3 + A^-7`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("A"))
    }
}
