//! Peirce decomposition relative to a partial isometry and the scalar
//! functional φ_e on the one-dimensional Peirce-2 space of a minimal e.

use num_complex::Complex;

use crate::error::Error;
use crate::matrix::ComplexMatrix;
use crate::partial_isometry::PartialIsometry;
use crate::scalar::Real;

/// The three blocks `p2 = ee* x e*e`, `p0 = (1−ee*) x (1−e*e)`,
/// `p1 = x − p2 − p0`, anchored at `e`.
#[derive(Clone, Debug)]
pub struct PeirceDecomposition<T> {
    pub p2: ComplexMatrix<T>,
    pub p1: ComplexMatrix<T>,
    pub p0: ComplexMatrix<T>,
    pub anchor: PartialIsometry<T>,
}

pub fn peirce<T: Real>(
    x: &ComplexMatrix<T>,
    e: &PartialIsometry<T>,
) -> Result<PeirceDecomposition<T>, Error> {
    if !x.is_square() {
        return Err(Error::invalid("peirce: x must be square"));
    }
    let n = x.rows();
    if e.matrix().rows() != n || e.matrix().cols() != n {
        return Err(Error::invalid("peirce: dimension mismatch with anchor"));
    }
    let lp = e.left_projection();
    let rp = e.right_projection();
    let id = ComplexMatrix::identity(n);
    let lc = &id - &lp;
    let rc = &id - &rp;
    let p2 = lp.matmul(x).matmul(&rp);
    let p0 = lc.matmul(x).matmul(&rc);
    let p1 = &(x - &p2) - &p0;
    Ok(PeirceDecomposition {
        p2,
        p1,
        p0,
        anchor: e.clone(),
    })
}

/// The unique scalar with `ee* x e*e = φ · e` for minimal `e`; equals
/// `tr(e* x)` since the Peirce-2 space of a minimal isometry is ℂ·e.
pub fn varphi<T: Real>(e: &PartialIsometry<T>, x: &ComplexMatrix<T>) -> Result<Complex<T>, Error> {
    if !e.is_minimal() {
        return Err(Error::invalid("varphi: anchor must be minimal"));
    }
    if (e.matrix().rows(), e.matrix().cols()) != (x.rows(), x.cols()) {
        return Err(Error::invalid("varphi: dimension mismatch"));
    }
    Ok(e.matrix().hs_inner(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::basis_vector;
    use crate::partial_isometry::rank_one;

    #[test]
    fn anchor_decomposes_as_p2() {
        let e1 = basis_vector::<f64>(2, 0);
        let e = rank_one(&e1, &e1).unwrap();
        let d = peirce(e.matrix(), &e).unwrap();
        assert!((&d.p2 - e.matrix()).operator_norm() < 1e-14);
        assert!(d.p1.operator_norm() < 1e-14);
        assert!(d.p0.operator_norm() < 1e-14);
    }

    #[test]
    fn varphi_of_anchor_is_one() {
        let e1 = basis_vector::<f64>(3, 0);
        let e = rank_one(&e1, &e1).unwrap();
        let phi = varphi(&e, e.matrix()).unwrap();
        assert!((phi - Complex::new(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn varphi_requires_minimal() {
        let id = ComplexMatrix::<f64>::identity(2);
        let e = PartialIsometry::certify(id.clone()).unwrap();
        assert!(varphi(&e, &id).is_err());
    }

    #[test]
    fn peirce_rejects_mismatch() {
        let e1 = basis_vector::<f64>(2, 0);
        let e = rank_one(&e1, &e1).unwrap();
        let x = ComplexMatrix::<f64>::identity(3);
        assert!(peirce(&x, &e).is_err());
    }
}
