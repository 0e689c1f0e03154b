//! Classical (one-dimensional) points of `FO(J_2N)` and `FO_N`, and the
//! derivative operators of the defining relations evaluated there.
//!
//! At a classical point both tensor legs are scalars, so `∂F` becomes an
//! operator on `M_m ⊗ M_N` and the identity `∂F*∂F = 2 + 2 Re W` can be
//! checked numerically. Kernel dimensions seen here are data about these
//! points only. At the identity the kernel of `D` has dimension `2N² + N`,
//! which says nothing about the rank of `∂F` over the quantum group
//! algebra.

mod operator;
mod point;

pub use operator::{
    check_relations, derivative_at, spectral_summary, verify_identity, DerivativeEngine,
    DerivativeOperator, IdentityReport, RelationDerivative, SpectralSummary, DEFAULT_KERNEL_TOL,
    RELATION_WARN_TOL,
};
pub use point::{j_matrix, sample_point, sample_points, ClassicalPoint};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::CMat;
    use crate::pauli::{Kind, SmallOps};
    use crate::scalar::to_complex64;
    use num_complex::Complex64;

    #[test]
    fn sampling_is_deterministic() {
        for kind in [Kind::Symplectic, Kind::Orthogonal] {
            let a = sample_point(2, kind, 42).unwrap();
            let b = sample_point(2, kind, 42).unwrap();
            assert_eq!(a.g, b.g);
            assert_eq!(a.gen_values, b.gen_values);
            assert_ne!(sample_point(2, kind, 43).unwrap().g, a.g);
        }
    }

    #[test]
    fn symplectic_samples_are_unitary_and_real_structured() {
        for p in sample_points(2, Kind::Symplectic, 1000, 100).unwrap() {
            assert!(p.unitarity_defect() <= 1e-12, "{}", p.unitarity_defect());
            assert!(p.reality_defect() <= 1e-12, "{}", p.reality_defect());
            assert!(p.reconstruct().max_abs_diff(&p.g) <= 1e-12);
        }
    }

    #[test]
    fn orthogonal_samples() {
        for p in sample_points(4, Kind::Orthogonal, 5, 20).unwrap() {
            assert!(p.unitarity_defect() <= 1e-12);
            assert_eq!(p.reality_defect(), 0.0);
            assert_eq!(p.reconstruct(), p.g);
        }
    }

    #[test]
    fn relation_residuals() {
        let id = ClassicalPoint::identity(Kind::Symplectic, 2).unwrap();
        assert_eq!(check_relations(&id).unwrap(), 0.0);
        let p = sample_point(2, Kind::Symplectic, 3).unwrap();
        assert!(check_relations(&p).unwrap() <= 1e-11);

        let mut g = CMat::identity(4);
        g[(0, 0)] += Complex64::new(1.0, 0.0);
        let bad = ClassicalPoint::from_matrix(Kind::Symplectic, 2, g, 0).unwrap();
        assert!(check_relations(&bad).unwrap() >= 1.0);
        assert!(derivative_at(&bad).unwrap().warning.is_some());
    }

    #[test]
    fn identity_point_operator() {
        let n = 2;
        let id = ClassicalPoint::identity(Kind::Symplectic, n).unwrap();
        let op = derivative_at(&id).unwrap();
        let ops = SmallOps::new(Kind::Symplectic, n).unwrap();
        let u = ops.u().map(to_complex64);
        let one = CMat::identity(u.rows());
        assert_eq!(op.f1.df, u.add(&one));
        let two = Complex64::new(2.0, 0.0);
        assert_eq!(*op.d(), one.scale(&two).add(&u.scale(&two)));
        assert!(op.warning.is_none());

        let s = spectral_summary(op.d(), DEFAULT_KERNEL_TOL).unwrap();
        assert_eq!(s.kernel_dim, 10);
        assert_eq!(s.eigenvalues.iter().filter(|&&l| (l - 4.0).abs() < 1e-11).count(), 6);
        assert!((s.fkl_nonzero - 4f64.powf(6.0 / 16.0)).abs() < 1e-10);
        assert!((s.fkl_nonzero - 1.6818).abs() < 1e-4);
    }

    #[test]
    fn summands_are_unitary_and_identity_holds() {
        let engine = DerivativeEngine::new(Kind::Symplectic, 2).unwrap();
        for p in sample_points(2, Kind::Symplectic, 77, 20).unwrap() {
            let r = engine.verify_identity(&p, 1e-10).unwrap();
            assert!(r.unitarity_defect <= 1e-10);
            assert!(r.residual <= 1e-10, "{r:?}");
            assert!(r.path_agreement <= 1e-10);
            assert!(r.spectrum_ok);
        }
    }

    #[test]
    fn orthogonal_identity_holds() {
        let engine = DerivativeEngine::new(Kind::Orthogonal, 4).unwrap();
        for p in sample_points(4, Kind::Orthogonal, 9, 10).unwrap() {
            let r = engine.verify_identity(&p, 1e-10).unwrap();
            assert!(r.residual <= 1e-10 && r.path_agreement <= 1e-10, "{r:?}");
        }
        let id = ClassicalPoint::identity(Kind::Orthogonal, 3).unwrap();
        let r = verify_identity(&id, 1e-10).unwrap();
        // D = 2 + 2T: kernel is the antisymmetric part
        assert_eq!(r.kernel_dim, 3);
    }

    #[test]
    fn engine_rejects_wrong_point() {
        let engine = DerivativeEngine::new(Kind::Symplectic, 2).unwrap();
        let p = ClassicalPoint::identity(Kind::Symplectic, 3).unwrap();
        assert!(engine.check_relations(&p).is_err());
    }

    #[test]
    fn spectral_summary_edge_cases() {
        let four = CMat::identity(16).scale(&Complex64::new(4.0, 0.0));
        let s = spectral_summary(&four, DEFAULT_KERNEL_TOL).unwrap();
        assert_eq!(s.kernel_dim, 0);
        assert!((s.fkl_nonzero - 4.0).abs() < 1e-12);
        let s = spectral_summary(&CMat::zeros(16, 16), DEFAULT_KERNEL_TOL).unwrap();
        assert_eq!((s.kernel_dim, s.fkl_nonzero), (16, 1.0));
        let mut bad = CMat::zeros(2, 2);
        bad[(0, 1)] = Complex64::new(1.0, 0.0);
        assert!(spectral_summary(&bad, DEFAULT_KERNEL_TOL).is_err());
    }
}
