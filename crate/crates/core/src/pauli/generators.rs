use num_traits::Zero;

use super::basis::{Alphabet, Family, Generator, Kind, TauBasis};
use crate::error::Result;
use crate::ncalg::NcPoly;
use crate::scalar::{gauss, gauss_frac, GaussRat, Scalar};

/// Square matrix with polynomial entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    size: usize,
    entries: Vec<NcPoly>,
}

impl PolyMatrix {
    pub fn zeros(size: usize) -> Self {
        PolyMatrix {
            size,
            entries: vec![NcPoly::zero(); size * size],
        }
    }

    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> NcPoly) -> Self {
        let mut m = PolyMatrix::zeros(size);
        for i in 0..size {
            for j in 0..size {
                m.entries[i * size + j] = f(i, j);
            }
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &NcPoly {
        &self.entries[i * self.size + j]
    }

    pub fn entries(&self) -> &[NcPoly] {
        &self.entries
    }

    pub fn mul(&self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.size, rhs.size);
        let n = self.size;
        PolyMatrix::from_fn(n, |i, j| {
            let mut acc = NcPoly::zero();
            for k in 0..n {
                acc += &(self.get(i, k) * rhs.get(k, j));
            }
            acc
        })
    }

    /// Entrywise star of the transpose.
    pub fn star_transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.size, |i, j| self.get(j, i).star())
    }

    pub fn add(&self, rhs: &PolyMatrix) -> PolyMatrix {
        PolyMatrix::from_fn(self.size, |i, j| self.get(i, j) + rhs.get(i, j))
    }

    pub fn sub_identity(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.size, |i, j| {
            if i == j {
                self.get(i, j) - &NcPoly::one()
            } else {
                self.get(i, j).clone()
            }
        })
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.size, |i, j| self.get(j, i).clone())
    }

    /// `τ ⊗ self` for an `m x m` coefficient matrix.
    pub fn kron_left(&self, tau: &crate::matrix::Mat<GaussRat>) -> PolyMatrix {
        let n = self.size;
        let m = tau.rows();
        PolyMatrix::from_fn(m * n, |p, q| self.get(p % n, q % n).scale(&tau[(p / n, q / n)]))
    }

    /// Evaluates every entry at a scalar point (`values[letter]`).
    pub fn eval_scalar(&self, values: &[f64]) -> crate::matrix::CMat {
        crate::matrix::CMat::from_fn(self.size, self.size, |i, j| {
            crate::ncalg::eval_poly_scalar(self.get(i, j), values)
        })
    }

    /// E-basis coordinates `(α, i, j)` of an `mN x mN` polynomial matrix.
    pub fn coordinates(&self, alpha: &Alphabet, taus: &TauBasis) -> Vec<NcPoly> {
        let n = alpha.n();
        let m = taus.leg();
        let inv_m = gauss_frac((1, m as i64), (0, 1));
        alpha
            .generators()
            .map(|g| {
                let tau = taus.tau(g.family);
                let mut acc = NcPoly::zero();
                for s in 0..m {
                    for t in 0..m {
                        let c = tau[(s, t)].conjugate();
                        if !c.is_zero() {
                            acc += &self.get(s * n + g.row, t * n + g.col).scale(&c);
                        }
                    }
                }
                acc.scale(&inv_m)
            })
            .collect()
    }
}

/// `u = Σ_α τ_α ⊗ A_α` with `A_α = (α_ij)`.
#[derive(Clone, Debug)]
pub struct GeneratorMatrix {
    pub alphabet: Alphabet,
    pub u: PolyMatrix,
}

impl GeneratorMatrix {
    /// The `N x N` block of generators belonging to one family.
    pub fn block(&self, f: Family) -> Vec<Vec<Generator>> {
        let n = self.alphabet.n();
        (0..n)
            .map(|i| (0..n).map(|j| Generator::new(f, i, j)).collect())
            .collect()
    }

    pub fn block_poly(&self, f: Family) -> PolyMatrix {
        block_poly(&self.alphabet, f, false)
    }
}

fn block_poly(alpha: &Alphabet, f: Family, transposed: bool) -> PolyMatrix {
    PolyMatrix::from_fn(alpha.n(), |i, j| {
        let (r, c) = if transposed { (j, i) } else { (i, j) };
        NcPoly::letter(alpha.letter(Generator::new(f, r, c)))
    })
}

pub fn build_u(n: usize) -> Result<GeneratorMatrix> {
    build_u_kind(Kind::Symplectic, n)
}

pub fn build_u_kind(kind: Kind, n: usize) -> Result<GeneratorMatrix> {
    let alphabet = Alphabet::new(kind, n)?;
    let taus = TauBasis::new(kind);
    let mut u = PolyMatrix::zeros(kind.leg() * n);
    for &f in kind.families() {
        u = u.add(&block_poly(&alphabet, f, false).kron_left(taus.tau(f)));
    }
    Ok(GeneratorMatrix { alphabet, u })
}

/// `u* = τ_a A^t - τ_b B^t - τ_c C^t - τ_d D^t`, assembled directly from the
/// block form rather than by starring `u`.
pub fn build_u_star(n: usize) -> Result<PolyMatrix> {
    build_u_star_kind(Kind::Symplectic, n)
}

pub fn build_u_star_kind(kind: Kind, n: usize) -> Result<PolyMatrix> {
    let alphabet = Alphabet::new(kind, n)?;
    let taus = TauBasis::new(kind);
    let mut u = PolyMatrix::zeros(kind.leg() * n);
    for &f in kind.families() {
        let tau = taus.tau(f).scale(&gauss(f.sign(), 0));
        u = u.add(&block_poly(&alphabet, f, true).kron_left(&tau));
    }
    Ok(u)
}

/// The antipode on self-adjoint generators: `S(a_ij) = a_ji`,
/// `S(β_ij) = -β_ji` for `β = b, c, d`. Returns `(sign, generator)`.
pub fn antipode(g: Generator) -> (i64, Generator) {
    (g.family.sign(), Generator::new(g.family, g.col, g.row))
}

/// Defining relations `F1 = u*u - I`, `F2 = uu* - I`, plus the printed
/// quaternionic blocks of `F2` (symplectic case only).
#[derive(Clone, Debug)]
pub struct RelationVector {
    pub alphabet: Alphabet,
    pub f1: PolyMatrix,
    pub f2: PolyMatrix,
    /// `F2_a, F2_b, F2_c, F2_d`, empty for the orthogonal kind.
    pub f2_blocks: Vec<PolyMatrix>,
}

impl RelationVector {
    /// `F2_a τ_a - F2_b τ_b - F2_c τ_c - F2_d τ_d - I`.
    pub fn reassemble_f2(&self) -> PolyMatrix {
        let taus = TauBasis::new(self.alphabet.kind());
        let mut acc = PolyMatrix::zeros(self.f2.size());
        for (k, block) in self.f2_blocks.iter().enumerate() {
            let f = Family::from_index(k);
            let tau = taus.tau(f).scale(&gauss(f.sign(), 0));
            acc = acc.add(&block.kron_left(&tau));
        }
        acc.sub_identity()
    }

    /// E-basis coordinate polynomials of `F1` and `F2`.
    pub fn coordinates(&self) -> (Vec<NcPoly>, Vec<NcPoly>) {
        let taus = TauBasis::new(self.alphabet.kind());
        (
            self.f1.coordinates(&self.alphabet, &taus),
            self.f2.coordinates(&self.alphabet, &taus),
        )
    }
}

pub fn build_relations(n: usize) -> Result<RelationVector> {
    build_relations_kind(Kind::Symplectic, n)
}

pub fn build_relations_kind(kind: Kind, n: usize) -> Result<RelationVector> {
    let gm = build_u_kind(kind, n)?;
    let u_star = build_u_star_kind(kind, n)?;
    let f1 = u_star.mul(&gm.u).sub_identity();
    let f2 = gm.u.mul(&u_star).sub_identity();

    let f2_blocks = if kind == Kind::Symplectic {
        let alpha = gm.alphabet;
        let m = |f| block_poly(&alpha, f, false);
        let t = |f| block_poly(&alpha, f, true);
        let (a, b, c, d) = (Family::A, Family::B, Family::C, Family::D);
        let prod = |x: Family, y: Family| m(x).mul(&t(y));
        let sum = |plus: [(Family, Family); 2], minus: [(Family, Family); 2]| {
            let p = prod(plus[0].0, plus[0].1).add(&prod(plus[1].0, plus[1].1));
            let q = prod(minus[0].0, minus[0].1).add(&prod(minus[1].0, minus[1].1));
            PolyMatrix::from_fn(n, |i, j| p.get(i, j) - q.get(i, j))
        };
        vec![
            prod(a, a).add(&prod(b, b)).add(&prod(c, c)).add(&prod(d, d)),
            sum([(a, b), (d, c)], [(b, a), (c, d)]),
            sum([(a, c), (b, d)], [(c, a), (d, b)]),
            sum([(a, d), (c, b)], [(d, a), (b, c)]),
        ]
    } else {
        Vec::new()
    };

    Ok(RelationVector {
        alphabet: gm.alphabet,
        f1,
        f2,
        f2_blocks,
    })
}
