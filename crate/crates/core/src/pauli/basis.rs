use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::ncalg::Letter;
use crate::scalar::{gauss, gauss_frac, GaussRat};

/// Quaternionic component label `a, b, c, d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::A, Family::B, Family::C, Family::D];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Family {
        Family::ALL[i]
    }

    /// `+1` for `a`, `-1` for `b, c, d`: the sign map `Γ` on `τ_α`.
    pub fn sign(self) -> i64 {
        if self == Family::A {
            1
        } else {
            -1
        }
    }

    pub fn symbol(self) -> char {
        ['a', 'b', 'c', 'd'][self.index()]
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Which unimodular free orthogonal quantum group the generators describe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    /// `FO(J_2N)`: `u` is `2N x 2N` with four real blocks `A, B, C, D`.
    Symplectic,
    /// `FO_N`: `u` is `N x N` with self-adjoint entries, a single block `A`.
    Orthogonal,
}

impl Kind {
    pub fn families(self) -> &'static [Family] {
        match self {
            Kind::Symplectic => &Family::ALL,
            Kind::Orthogonal => &Family::ALL[..1],
        }
    }

    /// Size of the auxiliary leg: `M_2` for symplectic, `M_1` otherwise.
    pub fn leg(self) -> usize {
        match self {
            Kind::Symplectic => 2,
            Kind::Orthogonal => 1,
        }
    }
}

/// Self-adjoint generator `α_ij` (zero-based indices, printed one-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub family: Family,
    pub row: usize,
    pub col: usize,
}

impl Generator {
    pub fn new(family: Family, row: usize, col: usize) -> Self {
        Generator { family, row, col }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}{}", self.family, self.row + 1, self.col + 1)
    }
}

/// Dense dictionary between generators and letters. The letter index of
/// `α_ij` is also the index of the basis vector `E^α_ij` of `M_m ⊗ M_N`
/// (family outer, then row, then column).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Alphabet {
    kind: Kind,
    n: usize,
}

impl Alphabet {
    pub fn new(kind: Kind, n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameter(format!("N must be at least 1, got {n}")));
        }
        Ok(Alphabet { kind, n })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn families(&self) -> &'static [Family] {
        self.kind.families()
    }

    /// Number of generators, equal to the dimension of `M_m ⊗ M_N`.
    pub fn len(&self) -> usize {
        self.families().len() * self.n * self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn index(&self, g: Generator) -> usize {
        debug_assert!(g.row < self.n && g.col < self.n);
        (g.family.index() * self.n + g.row) * self.n + g.col
    }

    pub fn letter(&self, g: Generator) -> Letter {
        Letter(self.index(g) as u32)
    }

    pub fn generator(&self, index: usize) -> Generator {
        let nn = self.n * self.n;
        Generator::new(Family::from_index(index / nn), (index % nn) / self.n, index % self.n)
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> + '_ {
        (0..self.len()).map(|k| self.generator(k))
    }

    pub fn letters(&self) -> Vec<Letter> {
        (0..self.len()).map(|k| Letter(k as u32)).collect()
    }

    pub fn basis_label(&self, index: usize) -> String {
        let g = self.generator(index);
        format!("E^{}_{}{}", g.family, g.row + 1, g.col + 1)
    }
}

/// The matrices `τ_a = I_2`, `τ_b = iσ_y`, `τ_c = iσ_z`, `τ_d = iσ_x`
/// (or `τ_a = [1]` for the orthogonal case).
#[derive(Debug, Clone)]
pub struct TauBasis {
    taus: Vec<Mat<GaussRat>>,
}

pub fn sigma_x() -> Mat<GaussRat> {
    m2([[(0, 0), (1, 0)], [(1, 0), (0, 0)]])
}

pub fn sigma_y() -> Mat<GaussRat> {
    m2([[(0, 0), (0, -1)], [(0, 1), (0, 0)]])
}

pub fn sigma_z() -> Mat<GaussRat> {
    m2([[(1, 0), (0, 0)], [(0, 0), (-1, 0)]])
}

fn m2(e: [[(i64, i64); 2]; 2]) -> Mat<GaussRat> {
    Mat::from_fn(2, 2, |i, j| gauss(e[i][j].0, e[i][j].1))
}

impl TauBasis {
    pub fn new(kind: Kind) -> Self {
        let taus = match kind {
            Kind::Symplectic => {
                let i = gauss(0, 1);
                vec![
                    Mat::identity(2),
                    sigma_y().scale(&i),
                    sigma_z().scale(&i),
                    sigma_x().scale(&i),
                ]
            }
            Kind::Orthogonal => vec![Mat::identity(1)],
        };
        TauBasis { taus }
    }

    pub fn tau(&self, f: Family) -> &Mat<GaussRat> {
        &self.taus[f.index()]
    }

    pub fn len(&self) -> usize {
        self.taus.len()
    }

    pub fn is_empty(&self) -> bool {
        self.taus.is_empty()
    }

    pub fn leg(&self) -> usize {
        self.taus[0].rows()
    }

    /// Coordinate of `τ_f` in an `m x m` matrix: `tr(τ_f* M) / m`.
    pub fn coordinate(&self, f: Family, m: impl Fn(usize, usize) -> GaussRat) -> GaussRat {
        let t = self.tau(f);
        let k = t.rows();
        let mut acc = GaussRat::zero();
        for s in 0..k {
            for u in 0..k {
                acc += t[(s, u)].conj() * m(s, u);
            }
        }
        acc * gauss_frac((1, k as i64), (0, 1))
    }
}

/// `E^α_ij = τ_α ⊗ E_ij` as an `mN x mN` matrix.
pub fn basis_matrix(alpha: &Alphabet, taus: &TauBasis, index: usize) -> Mat<GaussRat> {
    let g = alpha.generator(index);
    let n = alpha.n();
    let mut eij = Mat::zeros(n, n);
    eij[(g.row, g.col)] = GaussRat::one();
    taus.tau(g.family).kron(&eij)
}

/// Coordinates of an `mN x mN` matrix in the `E^α_ij` basis.
pub fn coordinates(alpha: &Alphabet, taus: &TauBasis, x: &Mat<GaussRat>) -> Vec<GaussRat> {
    let n = alpha.n();
    alpha
        .generators()
        .map(|g| taus.coordinate(g.family, |s, t| x[(s * n + g.row, t * n + g.col)].clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_relations() {
        let t = TauBasis::new(Kind::Symplectic);
        let id = Mat::identity(2);
        let minus = id.neg();
        assert_eq!(*t.tau(Family::A), id);
        for f in [Family::B, Family::C, Family::D] {
            assert_eq!(t.tau(f).dot(t.tau(f)), minus, "{f}^2");
            assert_eq!(t.tau(f).dot(&t.tau(f).adjoint()), id, "{f} unitary");
        }
        // τ_b τ_c = -τ_d, τ_c τ_d = -τ_b, τ_d τ_b = -τ_c, and anticommutation
        let (b, c, d) = (t.tau(Family::B), t.tau(Family::C), t.tau(Family::D));
        assert_eq!(b.dot(c), d.neg());
        assert_eq!(c.dot(d), b.neg());
        assert_eq!(d.dot(b), c.neg());
        assert_eq!(c.dot(b), *d);
    }

    #[test]
    fn alphabet_round_trip() {
        let a = Alphabet::new(Kind::Symplectic, 3).unwrap();
        assert_eq!(a.len(), 36);
        for k in 0..a.len() {
            assert_eq!(a.index(a.generator(k)), k);
        }
        assert_eq!(a.generator(9 + 1).to_string(), "b_12");
        assert!(Alphabet::new(Kind::Symplectic, 0).is_err());
        assert_eq!(Alphabet::new(Kind::Orthogonal, 4).unwrap().len(), 16);
    }

    #[test]
    fn coordinates_invert_basis() {
        let a = Alphabet::new(Kind::Symplectic, 2).unwrap();
        let t = TauBasis::new(Kind::Symplectic);
        for k in 0..a.len() {
            let c = coordinates(&a, &t, &basis_matrix(&a, &t, k));
            for (j, v) in c.iter().enumerate() {
                assert_eq!(*v, if j == k { GaussRat::one() } else { GaussRat::zero() });
            }
        }
    }
}
