use num_traits::{One, Zero};

use super::basis::{Alphabet, Family, Generator, Kind, TauBasis};
use crate::error::Result;
use crate::matrix::Mat;
use crate::scalar::{gauss, GaussRat};

/// Operators on the `τ` leg, in the coordinates of `τ_a, τ_b, τ_c, τ_d`.
#[derive(Clone, Debug)]
pub struct TauOps {
    taus: TauBasis,
}

impl TauOps {
    pub fn new(kind: Kind) -> Self {
        TauOps {
            taus: TauBasis::new(kind),
        }
    }

    pub fn dim(&self) -> usize {
        self.taus.len()
    }

    pub fn basis(&self) -> &TauBasis {
        &self.taus
    }

    /// `Γτ_a = τ_a`, `Γτ_{b,c,d} = -τ_{b,c,d}`.
    pub fn gamma(&self) -> Mat<GaussRat> {
        let k = self.dim();
        Mat::from_fn(k, k, |r, c| {
            if r == c {
                gauss(Family::from_index(r).sign(), 0)
            } else {
                GaussRat::zero()
            }
        })
    }

    /// Projection onto `τ_f`.
    pub fn p(&self, f: Family) -> Mat<GaussRat> {
        let k = self.dim();
        let i = f.index();
        Mat::from_fn(k, k, |r, c| {
            if r == i && c == i {
                GaussRat::one()
            } else {
                GaussRat::zero()
            }
        })
    }

    /// Left multiplication by `τ_f`.
    pub fn lambda(&self, f: Family) -> Mat<GaussRat> {
        let k = self.dim();
        let t = self.taus.tau(f);
        let mut out = Mat::zeros(k, k);
        for c in 0..k {
            let prod = t.dot(self.taus.tau(Family::from_index(c)));
            for r in 0..k {
                out[(r, c)] = self
                    .taus
                    .coordinate(Family::from_index(r), |s, u| prod[(s, u)].clone());
            }
        }
        out
    }

    /// The rank one operator `ϑ_{α,β}` sending `τ_β` to `τ_α`.
    pub fn theta(&self, alpha: Family, beta: Family) -> Mat<GaussRat> {
        let k = self.dim();
        Mat::from_fn(k, k, |r, c| {
            if r == alpha.index() && c == beta.index() {
                GaussRat::one()
            } else {
                GaussRat::zero()
            }
        })
    }
}

/// Operators on the `M_N` leg in the basis `E_ij` (row-major).
#[derive(Clone, Copy, Debug)]
pub struct MatrixOps {
    n: usize,
}

impl MatrixOps {
    pub fn new(n: usize) -> Self {
        MatrixOps { n }
    }

    pub fn dim(&self) -> usize {
        self.n * self.n
    }

    /// Transpose `T`.
    pub fn t(&self) -> Mat<GaussRat> {
        let n = self.n;
        Mat::from_fn(n * n, n * n, |r, c| {
            if r == (c % n) * n + c / n {
                GaussRat::one()
            } else {
                GaussRat::zero()
            }
        })
    }

    /// Left multiplication `λ_ij` by `E_ij`: `E_kl ↦ δ_jk E_il`.
    pub fn lambda(&self, i: usize, j: usize) -> Mat<GaussRat> {
        let n = self.n;
        let mut out = Mat::zeros(n * n, n * n);
        for l in 0..n {
            out[(i * n + l, j * n + l)] = GaussRat::one();
        }
        out
    }
}

/// The finite-dimensional operators on `M_m ⊗ M_N` in the `E^α_ij` basis.
#[derive(Clone, Debug)]
pub struct SmallOps {
    alphabet: Alphabet,
    tau: TauOps,
    mat: MatrixOps,
}

impl SmallOps {
    pub fn new(kind: Kind, n: usize) -> Result<Self> {
        Ok(SmallOps {
            alphabet: Alphabet::new(kind, n)?,
            tau: TauOps::new(kind),
            mat: MatrixOps::new(n),
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn dim(&self) -> usize {
        self.alphabet.len()
    }

    pub fn tau_ops(&self) -> &TauOps {
        &self.tau
    }

    pub fn matrix_ops(&self) -> &MatrixOps {
        &self.mat
    }

    /// `τ-leg ⊗ M_N-leg`, matching the family-outer basis order.
    pub fn tensor(&self, tau_op: &Mat<GaussRat>, mat_op: &Mat<GaussRat>) -> Mat<GaussRat> {
        tau_op.kron(mat_op)
    }

    pub fn identity(&self) -> Mat<GaussRat> {
        Mat::identity(self.dim())
    }

    pub fn t(&self) -> Mat<GaussRat> {
        self.tensor(&Mat::identity(self.tau.dim()), &self.mat.t())
    }

    pub fn gamma(&self) -> Mat<GaussRat> {
        self.tensor(&self.tau.gamma(), &Mat::identity(self.mat.dim()))
    }

    pub fn p(&self, f: Family) -> Mat<GaussRat> {
        self.tensor(&self.tau.p(f), &Mat::identity(self.mat.dim()))
    }

    /// `U = T ⊗ Γ`.
    pub fn u(&self) -> Mat<GaussRat> {
        self.tensor(&self.tau.gamma(), &self.mat.t())
    }

    /// `λ^α_ij = λ_ij ⊗ λ_α`, left multiplication by `E^α_ij`.
    pub fn lambda(&self, g: Generator) -> Mat<GaussRat> {
        self.tensor(&self.tau.lambda(g.family), &self.mat.lambda(g.row, g.col))
    }

    pub fn theta(&self, alpha: Family, beta: Family) -> Mat<GaussRat> {
        self.tensor(&self.tau.theta(alpha, beta), &Mat::identity(self.mat.dim()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::basis::{basis_matrix, coordinates};

    fn ops(kind: Kind, n: usize) -> SmallOps {
        SmallOps::new(kind, n).unwrap()
    }

    #[test]
    fn gamma_signs() {
        let t = TauOps::new(Kind::Symplectic);
        let g = t.gamma();
        assert_eq!(g[(0, 0)], gauss(1, 0));
        for k in 1..4 {
            assert_eq!(g[(k, k)], gauss(-1, 0));
        }
    }

    #[test]
    fn u_is_a_self_adjoint_involution() {
        for n in 1..=3 {
            for kind in [Kind::Symplectic, Kind::Orthogonal] {
                let o = ops(kind, n);
                let u = o.u();
                assert_eq!(u.dot(&u), o.identity());
                assert_eq!(u.adjoint(), u);
                assert_eq!(o.t().dot(&o.gamma()), u);
            }
        }
    }

    #[test]
    fn u_eigenspace_dimensions() {
        for n in 1..=4 {
            let o = ops(Kind::Symplectic, n);
            let d = o.dim() as i64;
            let tr = o.u().trace();
            // dim(+1) = (d + tr U) / 2
            let plus = (gauss(d, 0) + tr) * crate::scalar::gauss_frac((1, 2), (0, 1));
            let n = n as i64;
            assert_eq!(plus, gauss(2 * n * n - n, 0));
            assert_eq!(gauss(d, 0) - plus, gauss(2 * n * n + n, 0));
        }
    }

    #[test]
    fn u_sends_basis_elements_to_adjoints() {
        let o = ops(Kind::Symplectic, 2);
        let al = *o.alphabet();
        let taus = TauBasis::new(Kind::Symplectic);
        let u = o.u();
        for k in 0..al.len() {
            let adj = basis_matrix(&al, &taus, k).adjoint();
            let col: Vec<GaussRat> = (0..al.len()).map(|r| u[(r, k)].clone()).collect();
            assert_eq!(col, coordinates(&al, &taus, &adj));
        }
    }

    #[test]
    fn lambda_is_left_multiplication() {
        for kind in [Kind::Symplectic, Kind::Orthogonal] {
            let o = ops(kind, 2);
            let al = *o.alphabet();
            let taus = TauBasis::new(kind);
            for g in al.generators() {
                let e = basis_matrix(&al, &taus, al.index(g));
                let lam = o.lambda(g);
                for k in 0..al.len() {
                    let prod = e.dot(&basis_matrix(&al, &taus, k));
                    let col: Vec<GaussRat> = (0..al.len()).map(|r| lam[(r, k)].clone()).collect();
                    assert_eq!(col, coordinates(&al, &taus, &prod), "{g}");
                }
            }
        }
    }

    #[test]
    fn theta_d_b_rewrites() {
        let t = TauOps::new(Kind::Symplectic);
        let (g, lc, pb) = (t.gamma(), t.lambda(Family::C), t.p(Family::B));
        let theta = t.theta(Family::D, Family::B);
        assert_eq!(g.dot(&lc).dot(&g).dot(&pb), theta);
        assert_eq!(lc.dot(&g).dot(&pb).neg(), theta);
        let pa = t.p(Family::A);
        assert_eq!(g.dot(&t.lambda(Family::A)).dot(&g).dot(&pa), pa);
    }

    #[test]
    fn transpose_matrix() {
        let m = MatrixOps::new(3);
        let t = m.t();
        assert_eq!(t.dot(&t), Mat::identity(9));
        assert_eq!(t[(5, 7)], GaussRat::one());
        // λ_ij E_kl = δ_jk E_il, indices (row, col) ↦ 3·row + col
        let l = m.lambda(0, 1);
        assert_eq!(l[(2, 5)], GaussRat::one());
        assert_eq!(l.iter_nonzero().count(), 3);
    }
}
