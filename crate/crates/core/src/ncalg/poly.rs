use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::GaussRat;

use super::tensor::TensorPoly;

/// Index of a formal self-adjoint indeterminate in a dense alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u32);

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}", self.0 + 1)
    }
}

/// A monomial; the empty word is the unit.
pub type Word = Vec<Letter>;

/// Noncommutative polynomial with exact Gaussian-rational coefficients,
/// kept in normal form (no zero coefficients).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct NcPoly {
    terms: BTreeMap<Word, GaussRat>,
}

impl NcPoly {
    pub fn zero() -> Self {
        NcPoly::default()
    }

    pub fn one() -> Self {
        NcPoly::constant(GaussRat::one())
    }

    pub fn constant(c: GaussRat) -> Self {
        NcPoly::monomial(Vec::new(), c)
    }

    pub fn letter(l: Letter) -> Self {
        NcPoly::monomial(vec![l], GaussRat::one())
    }

    pub fn monomial(word: Word, c: GaussRat) -> Self {
        let mut p = NcPoly::zero();
        p.add_term(word, c);
        p
    }

    pub fn word(letters: &[Letter]) -> Self {
        NcPoly::monomial(letters.to_vec(), GaussRat::one())
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

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &GaussRat)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, word: &[Letter]) -> GaussRat {
        self.terms.get(word).cloned().unwrap_or_else(GaussRat::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Vec::len).max()
    }

    /// Adds `c·word` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, word: Word, c: GaussRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &GaussRat) -> NcPoly {
        if c.is_zero() {
            return NcPoly::zero();
        }
        NcPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, a)| (w.clone(), a * c))
                .collect(),
        }
    }

    /// The involution: reverses every word and conjugates coefficients.
    pub fn star(&self) -> NcPoly {
        NcPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, a)| (w.iter().rev().copied().collect(), a.conj()))
                .collect(),
        }
    }

    /// Free partial derivative with respect to `g`: every occurrence of `g`
    /// in a word splits it into `prefix ⊗ suffix`.
    pub fn free_derive(&self, g: Letter) -> TensorPoly {
        let mut out = TensorPoly::zero();
        for (w, c) in &self.terms {
            for (pos, l) in w.iter().enumerate() {
                if *l == g {
                    out.add_term(w[..pos].to_vec(), w[pos + 1..].to_vec(), c.clone());
                }
            }
        }
        out
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.terms.keys().flatten().copied()
    }

    /// Sum over a collection, without intermediate clones of the accumulator.
    pub fn sum<'a>(items: impl IntoIterator<Item = &'a NcPoly>) -> NcPoly {
        let mut acc = NcPoly::zero();
        for p in items {
            acc += p;
        }
        acc
    }
}

impl std::ops::AddAssign<&NcPoly> for NcPoly {
    fn add_assign(&mut self, rhs: &NcPoly) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl Add for &NcPoly {
    type Output = NcPoly;
    fn add(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        NcPoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul for &NcPoly {
    type Output = NcPoly;
    fn mul(self, rhs: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                let mut w = Vec::with_capacity(w1.len() + w2.len());
                w.extend_from_slice(w1);
                w.extend_from_slice(w2);
                out.add_term(w, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for NcPoly {
            type Output = NcPoly;
            fn $m(self, rhs: NcPoly) -> NcPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Debug for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for l in w {
                write!(f, "·{l}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::gauss;

    const X: Letter = Letter(0);
    const Y: Letter = Letter(1);

    #[test]
    fn star_of_product_reverses_and_conjugates() {
        let p = NcPoly::monomial(vec![X, Y], gauss(2, 3));
        let s = p.star();
        assert_eq!(s, NcPoly::monomial(vec![Y, X], gauss(2, -3)));
        assert_eq!(NcPoly::word(&[X, Y]).star(), NcPoly::word(&[Y, X]));
        assert_eq!(s.star(), p);
    }

    #[test]
    fn cancellation_normalizes_to_empty() {
        let p = NcPoly::word(&[X, Y]);
        let z = &p - &p;
        assert!(z.is_zero());
        assert_eq!(z, NcPoly::zero());
        assert_eq!(format!("{z}"), "0");
    }

    #[test]
    fn unit_is_multiplicative_identity() {
        let p = &NcPoly::word(&[X, Y]) + &NcPoly::constant(gauss(0, 1));
        assert_eq!(&p * &NcPoly::one(), p);
        assert_eq!(&NcPoly::one() * &p, p);
    }

    #[test]
    fn derivative_of_unrelated_letter_is_zero() {
        assert!(NcPoly::letter(X).free_derive(Y).is_zero());
        assert!(NcPoly::zero().free_derive(X).is_zero());
        assert!(NcPoly::one().free_derive(X).is_zero());
    }
}
