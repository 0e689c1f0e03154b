use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::eigen::hermitian_eigen;
use crate::error::Result;
use crate::matrix::CMat;
use crate::pauli::{Alphabet, Family, Generator, Kind, TauBasis};
use crate::scalar::to_complex64;

/// A scalar solution of the defining relations: a unitary `g` (compact
/// symplectic, or real orthogonal) and the real values of the generators.
#[derive(Clone, Debug)]
pub struct ClassicalPoint {
    pub kind: Kind,
    pub n: usize,
    pub g: CMat,
    /// Generator values indexed like the [`Alphabet`].
    pub gen_values: Vec<f64>,
    pub seed: u64,
}

impl ClassicalPoint {
    pub fn alphabet(&self) -> Alphabet {
        Alphabet::new(self.kind, self.n).expect("point has N >= 1")
    }

    pub fn value(&self, g: Generator) -> f64 {
        self.gen_values[self.alphabet().index(g)]
    }

    /// `g = I`.
    pub fn identity(kind: Kind, n: usize) -> Result<Self> {
        let m = kind.leg() * n;
        Self::from_matrix(kind, n, CMat::identity(m), 0)
    }

    /// Reads the generator values off `g` as the real parts of its
    /// `τ_α ⊗ E_ij` coordinates.
    pub fn from_matrix(kind: Kind, n: usize, g: CMat, seed: u64) -> Result<Self> {
        let alpha = Alphabet::new(kind, n)?;
        let m = kind.leg();
        if g.rows() != m * n || g.cols() != m * n {
            return Err(crate::Error::DimensionMismatch {
                expected: m * n,
                found: g.rows(),
            });
        }
        let taus = TauBasis::new(kind);
        let gen_values = alpha
            .generators()
            .map(|gen| {
                let t = taus.tau(gen.family);
                let mut acc = Complex64::new(0.0, 0.0);
                for s in 0..m {
                    for u in 0..m {
                        acc += to_complex64(&t[(s, u)]).conj()
                            * g[(s * n + gen.row, u * n + gen.col)];
                    }
                }
                acc.re / m as f64
            })
            .collect();
        Ok(ClassicalPoint {
            kind,
            n,
            g,
            gen_values,
            seed,
        })
    }

    /// `Σ τ_α ⊗ A_α` rebuilt from the generator values.
    pub fn reconstruct(&self) -> CMat {
        let n = self.n;
        let m = self.kind.leg();
        let taus = TauBasis::new(self.kind);
        let al = self.alphabet();
        let mut out = CMat::zeros(m * n, m * n);
        for gen in al.generators() {
            let v = self.gen_values[al.index(gen)];
            let t = taus.tau(gen.family);
            for s in 0..m {
                for u in 0..m {
                    out[(s * n + gen.row, u * n + gen.col)] += to_complex64(&t[(s, u)]) * v;
                }
            }
        }
        out
    }

    /// `‖g*g - I‖_max`.
    pub fn unitarity_defect(&self) -> f64 {
        let k = self.g.rows();
        self.g.adjoint().dot(&self.g).max_abs_diff(&CMat::identity(k))
    }

    /// `‖J ḡ J⁻¹ - g‖_max` with `J = τ_b ⊗ I_N` (zero for the orthogonal
    /// kind, where the condition is `ḡ = g`).
    pub fn reality_defect(&self) -> f64 {
        let gbar = self.g.map(|z| z.conj());
        match self.kind {
            Kind::Orthogonal => gbar.max_abs_diff(&self.g),
            Kind::Symplectic => {
                let j = j_matrix(self.n);
                // J⁻¹ = -J
                j.dot(&gbar).dot(&j.neg()).max_abs_diff(&self.g)
            }
        }
    }
}

/// `J_2N = τ_b ⊗ I_N`.
pub fn j_matrix(n: usize) -> CMat {
    let tb = TauBasis::new(Kind::Symplectic).tau(Family::B).map(to_complex64);
    tb.kron(&CMat::identity(n))
}

/// Samples one classical point, deterministic in `seed`.
///
/// Symplectic: `g = exp(X)` for a Gaussian `X = τ_a⊗A_0 + Σ τ_β⊗S_β` with
/// `A_0` antisymmetric and `S_β` symmetric (the compact Lie algebra, of
/// real dimension `2N² + N`), computed as `exp(iH)` with `H = -iX` through
/// the Hermitian eigensolver. Orthogonal: the `Q` factor of a real Gaussian
/// matrix with the signs of `diag(R)` absorbed.
pub fn sample_point(n: usize, kind: Kind, seed: u64) -> Result<ClassicalPoint> {
    Alphabet::new(kind, n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut normal = || -> f64 { StandardNormal.sample(&mut rng) };
    let g = match kind {
        Kind::Symplectic => {
            let taus = TauBasis::new(kind);
            let mut x = CMat::zeros(2 * n, 2 * n);
            for f in Family::ALL {
                let t = taus.tau(f).map(to_complex64);
                let mut block = vec![vec![0.0; n]; n];
                for i in 0..n {
                    for j in i..n {
                        if f == Family::A {
                            if i != j {
                                let v = normal();
                                block[i][j] = v;
                                block[j][i] = -v;
                            }
                        } else {
                            let v = normal();
                            block[i][j] = v;
                            block[j][i] = v;
                        }
                    }
                }
                let b = CMat::from_fn(n, n, |i, j| Complex64::new(block[i][j], 0.0));
                x = x.add(&t.kron(&b));
            }
            let h = x.scale(&Complex64::new(0.0, -1.0));
            // exact Hermitian symmetrization before the solver
            let h = h.add(&h.adjoint()).scale(&Complex64::new(0.5, 0.0));
            hermitian_eigen(&h)?.apply_fn(|l| Complex64::new(0.0, l).exp())
        }
        Kind::Orthogonal => {
            let a = DMatrix::<f64>::from_fn(n, n, |_, _| normal());
            let qr = a.qr();
            let (q, r) = (qr.q(), qr.r());
            CMat::from_fn(n, n, |i, j| {
                let s = if r[(j, j)] < 0.0 { -1.0 } else { 1.0 };
                Complex64::new(q[(i, j)] * s, 0.0)
            })
        }
    };
    ClassicalPoint::from_matrix(kind, n, g, seed)
}

/// `count` points with seeds `seed, seed + 1, ...`.
pub fn sample_points(n: usize, kind: Kind, seed: u64, count: usize) -> Result<Vec<ClassicalPoint>> {
    (0..count as u64)
        .map(|k| sample_point(n, kind, seed.wrapping_add(k)))
        .collect()
}
