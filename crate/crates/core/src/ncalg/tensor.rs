use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::scalar::GaussRat;

use super::poly::{NcPoly, Word};

/// Element of `C<T> ⊗ C<T>` in bilinear normal form.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TensorPoly {
    terms: BTreeMap<(Word, Word), GaussRat>,
}

impl TensorPoly {
    pub fn zero() -> Self {
        TensorPoly::default()
    }

    /// `1 ⊗ 1`.
    pub fn unit() -> Self {
        let mut t = TensorPoly::zero();
        t.add_term(Vec::new(), Vec::new(), GaussRat::one());
        t
    }

    /// `a ⊗ b`, expanded bilinearly.
    pub fn elementary(a: &NcPoly, b: &NcPoly) -> Self {
        let mut t = TensorPoly::zero();
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                t.add_term(wa.clone(), wb.clone(), ca * cb);
            }
        }
        t
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

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Word, &GaussRat)> {
        self.terms.iter().map(|((l, r), c)| (l, r, c))
    }

    pub fn add_term(&mut self, left: Word, right: Word, c: GaussRat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((left, right)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_assign(&mut self, rhs: &TensorPoly) {
        for ((l, r), c) in &rhs.terms {
            self.add_term(l.clone(), r.clone(), c.clone());
        }
    }

    /// `self + c·rhs`.
    pub fn add_scaled(&mut self, rhs: &TensorPoly, c: &GaussRat) {
        if c.is_zero() {
            return;
        }
        for ((l, r), a) in &rhs.terms {
            self.add_term(l.clone(), r.clone(), a * c);
        }
    }

    pub fn scale(&self, c: &GaussRat) -> TensorPoly {
        let mut out = TensorPoly::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn sub(&self, rhs: &TensorPoly) -> TensorPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &-GaussRat::one());
        out
    }

    /// Bimodule action `p · (a ⊗ b) · q = (p a ⊗ b q)`.
    pub fn bimodule(&self, p: &NcPoly, q: &NcPoly) -> TensorPoly {
        let mut out = TensorPoly::zero();
        for ((l, r), c) in &self.terms {
            for (wp, cp) in p.terms() {
                for (wq, cq) in q.terms() {
                    let mut left = wp.clone();
                    left.extend_from_slice(l);
                    let mut right = r.clone();
                    right.extend_from_slice(wq);
                    out.add_term(left, right, c * cp * cq);
                }
            }
        }
        out
    }

    /// `a ⊗ b ↦ b* ⊗ a*`, conjugating coefficients once.
    pub fn star_flip(&self) -> TensorPoly {
        let mut out = TensorPoly::zero();
        for ((l, r), c) in &self.terms {
            out.add_term(
                r.iter().rev().copied().collect(),
                l.iter().rev().copied().collect(),
                c.conj(),
            );
        }
        out
    }

    /// Total degree of each term across both legs.
    pub fn term_degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.terms.keys().map(|(l, r)| l.len() + r.len())
    }
}

impl fmt::Debug for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let show = |f: &mut fmt::Formatter<'_>, w: &Word| -> fmt::Result {
            if w.is_empty() {
                return write!(f, "1");
            }
            for (k, l) in w.iter().enumerate() {
                if k > 0 {
                    write!(f, "·")?;
                }
                write!(f, "{l}")?;
            }
            Ok(())
        };
        for (k, ((l, r), c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            show(f, l)?;
            write!(f, "⊗")?;
            show(f, r)?;
        }
        Ok(())
    }
}
