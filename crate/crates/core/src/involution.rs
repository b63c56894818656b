//! Form-preserving transformations, the reflections `t_X`, eigenlattices,
//! SSD/RSSD tests, and the dihedral analysis of a pair of lattices.
//!
//! Everything acts on the right: vectors are rows, and `v * g` is the image
//! of `v` under `g`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exactmat::RatMatrix;
use crate::lattice::{Form, Lattice, LatticeError};
use crate::shortvec;

/// A rational matrix preserving the ambient form (`g Φ g^T = Φ`), acting on
/// row vectors from the right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isometry {
    form: Form,
    matrix: RatMatrix,
}

impl Isometry {
    /// Checks form preservation exactly.
    pub fn new(form: Form, matrix: RatMatrix) -> Result<Self, LatticeError> {
        assert_eq!(matrix.rows(), form.dim());
        assert_eq!(matrix.cols(), form.dim());
        let phi = form.matrix();
        if matrix.mul(&phi).mul(&matrix.transpose()) != phi {
            return Err(LatticeError::AmbientMismatch);
        }
        Ok(Isometry { form, matrix })
    }

    pub fn identity(form: Form) -> Self {
        let n = form.dim();
        Isometry {
            form,
            matrix: RatMatrix::identity(n),
        }
    }

    pub fn negation(form: Form) -> Self {
        let n = form.dim();
        let mut m = RatMatrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = -BigRational::one();
        }
        Isometry { form, matrix: m }
    }

    pub fn form(&self) -> &Form {
        &self.form
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == RatMatrix::identity(self.form.dim())
    }

    /// `self` followed by `other`: `v (a b) = (v a) b`.
    pub fn compose(&self, other: &Isometry) -> Isometry {
        assert!(self.form == other.form, "isometries over different forms");
        Isometry {
            form: self.form.clone(),
            matrix: self.matrix.mul(&other.matrix),
        }
    }

    pub fn apply(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.form.dim());
        let mut out = vec![BigRational::zero(); self.form.dim()];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (j, slot) in out.iter_mut().enumerate() {
                let m = self.matrix.at(i, j);
                if !m.is_zero() {
                    *slot += vi * m;
                }
            }
        }
        out
    }

    pub fn apply_lattice(&self, l: &Lattice) -> Lattice {
        assert!(l.form() == &self.form);
        l.transformed(&self.matrix)
    }
}

/// Least `n >= 1` with `g^n = 1`, or `None` once `cap` is exceeded (which
/// signals a bug: every isometry stabilizing a lattice has finite order).
pub fn order_of(g: &Isometry, cap: usize) -> Option<usize> {
    let id = RatMatrix::identity(g.form.dim());
    let mut acc = g.matrix.clone();
    for n in 1..=cap {
        if acc == id {
            return Some(n);
        }
        acc = acc.mul(&g.matrix);
    }
    None
}

/// The orthogonal transformation that negates `span(X)` and fixes its
/// orthogonal complement.  A rank-0 input gives the identity (check
/// [`Isometry::is_identity`] when that case must be flagged).
pub fn reflection_in(x: &Lattice) -> Isometry {
    let n = x.ambient_dim();
    if x.rank() == 0 {
        return Isometry::identity(x.form().clone());
    }
    // t = I - 2 P with P the orthogonal projection onto span(X):
    // P = Phi B^T G^-1 B  (acting on row vectors from the right).
    let b = x.rational_basis_matrix();
    let proj = x
        .form()
        .matrix()
        .mul(&b.transpose())
        .mul(&x.gram().inverse().expect("independent rows"))
        .mul(&b);
    let mut m = RatMatrix::identity(n);
    let two = BigRational::from_integer(BigInt::from(2));
    for r in 0..n {
        for c in 0..n {
            let v = m.at(r, c) - &two * proj.at(r, c);
            *m.at_mut(r, c) = v;
        }
    }
    Isometry::new(x.form().clone(), m).expect("orthogonal reflection preserves the form")
}

/// `true` iff `L g = L` as subgroups of the ambient.
pub fn stabilizes(g: &Isometry, l: &Lattice) -> bool {
    assert!(l.form() == g.form());
    g.apply_lattice(l).eq_lattice(l)
}

/// RSSD test: `2L ⊆ M + ann_L(M)` for a sublattice `M` of the integral
/// lattice `L`.
pub fn is_rssd(l: &Lattice, m: &Lattice) -> Result<bool, LatticeError> {
    if !l.contains(m)? {
        return Err(LatticeError::NotASublattice);
    }
    if !l.is_integral() {
        return Err(LatticeError::NotIntegral);
    }
    let ann = l.annihilator(m)?;
    let s = m.sum(&ann)?;
    let two_l = l.scaled_copy(&BigInt::from(2));
    s.contains(&two_l)
}

/// SSD test: `2 M* ⊆ M`.
pub fn is_ssd(m: &Lattice) -> Result<bool, LatticeError> {
    if !m.is_integral() {
        return Err(LatticeError::NotIntegral);
    }
    if m.rank() == 0 {
        return Ok(true);
    }
    let two_dual = m.dual().scaled_copy(&BigInt::from(2));
    m.contains(&two_dual)
}

/// Saturated eigenlattice `{x ∈ L : x t = sign * x}`.
pub fn eigenlattice(l: &Lattice, t: &Isometry, sign: i8) -> Result<Lattice, LatticeError> {
    assert!(sign == 1 || sign == -1);
    if !stabilizes(t, l) {
        return Err(LatticeError::NotASublattice);
    }
    kernel_sublattice(l, t, sign)
}

fn kernel_sublattice(l: &Lattice, g: &Isometry, sign: i8) -> Result<Lattice, LatticeError> {
    // x * B * (g - sign*I) = 0 over integer coordinate vectors x.
    let n = l.ambient_dim();
    let mut gm = g.matrix().clone();
    let s = BigRational::from_integer(BigInt::from(sign));
    for i in 0..n {
        let v = gm.at(i, i) - &s;
        *gm.at_mut(i, i) = v;
    }
    let test = l.rational_basis_matrix().mul(&gm);
    let (test_int, _) = test.clear_denominators();
    let kernel = crate::exactmat::integer_kernel(&test_int);
    l.sublattice_from_coordinate_rows(&kernel)
}

/// Fixed sublattice `{x ∈ L : x g = x}` of an arbitrary isometry
/// stabilizing `L`.
pub fn fixed_sublattice(l: &Lattice, g: &Isometry) -> Result<Lattice, LatticeError> {
    if !stabilizes(g, l) {
        return Err(LatticeError::NotASublattice);
    }
    kernel_sublattice(l, g, 1)
}

/// Total eigenlattice: the sum of the joint eigenlattices of a list of
/// pairwise commuting involutions stabilizing `L`.  The empty list gives
/// `L` itself.
pub fn total_eigenlattice(l: &Lattice, invs: &[Isometry]) -> Result<Lattice, LatticeError> {
    for t in invs {
        if order_of(t, 4) != Some(2) && !t.is_identity() {
            return Err(LatticeError::AmbientMismatch);
        }
        if !stabilizes(t, l) {
            return Err(LatticeError::NotASublattice);
        }
    }
    for (i, a) in invs.iter().enumerate() {
        for b in invs.iter().skip(i + 1) {
            if a.compose(b) != b.compose(a) {
                return Err(LatticeError::AmbientMismatch);
            }
        }
    }
    if invs.is_empty() {
        return Ok(l.clone());
    }
    let mut total = Lattice::zero(l.form().clone());
    let s = invs.len();
    for mask in 0u32..(1 << s) {
        let mut joint: Option<Lattice> = None;
        for (i, t) in invs.iter().enumerate() {
            let sign = if mask & (1 << i) != 0 { -1 } else { 1 };
            let e = eigenlattice(l, t, sign)?;
            joint = Some(match joint {
                None => e,
                Some(j) => j.intersect(&e)?,
            });
        }
        if let Some(j) = joint {
            total = total.sum(&j)?;
        }
    }
    Ok(total)
}

/// The classification record of a pair `(M, N)`.
#[derive(Clone, Debug)]
pub struct DihedralReport {
    pub is_integral: bool,
    /// Complete enumeration up to norm 2; `false` whenever `L` is not
    /// integral (rootlessness is then undefined).
    pub is_rootless: bool,
    pub rank: usize,
    /// `|t_M t_N|` on the span of `L` (computed on the ambient, where the
    /// product acts trivially off the span).
    pub product_order: usize,
    /// `2 * product_order`; the degenerate case `t_M = t_N` lands on 2.
    pub dihedral_order: usize,
    /// Smith divisors of the Gram of `L` when integral, else empty.
    pub smith: Vec<BigInt>,
    pub det: BigRational,
    pub f_rank: usize,
    pub f_det: BigRational,
    pub f_smith: Vec<BigInt>,
    /// EE8 certificates of the inputs (reports for non-EE8 inputs are still
    /// produced, flagged here).
    pub inputs_ee8: (bool, bool),
    pub degenerate_equal: bool,
    /// Identification of `F = M ∩ N` among the named candidates, filled in
    /// by the verification layer.
    pub f_label: Option<String>,
    pub case_name: Option<String>,
}

/// Cap for `order_of` products; the accepted cases stay at or below 6, so
/// hitting this means a bug upstream.
pub const PRODUCT_ORDER_CAP: usize = 1000;

/// Builds `L = M + N` and computes every report field exactly.
pub fn dihedral_report(m: &Lattice, n: &Lattice) -> Result<DihedralReport, LatticeError> {
    if !m.same_ambient(n) {
        return Err(LatticeError::AmbientMismatch);
    }
    let l = m.sum(n)?;
    let f = m.intersect(n)?;
    let t_m = reflection_in(m);
    let t_n = reflection_in(n);
    let product = t_m.compose(&t_n);
    let product_order =
        order_of(&product, PRODUCT_ORDER_CAP).expect("finite order product of reflections");
    let degenerate_equal = t_m == t_n;
    let is_integral = l.is_integral();
    let is_rootless = if is_integral {
        shortvec::is_rootless(&l)?
    } else {
        false
    };
    let smith = if is_integral {
        l.discriminant_group()?
    } else {
        Vec::new()
    };
    let f_smith = if f.rank() > 0 && f.is_integral() {
        f.discriminant_group()?
    } else {
        Vec::new()
    };
    let ee8_m = crate::verify::is_ee8(m);
    let ee8_n = crate::verify::is_ee8(n);
    Ok(DihedralReport {
        is_integral,
        is_rootless,
        rank: l.rank(),
        product_order,
        dihedral_order: 2 * product_order,
        smith,
        det: l.determinant(),
        f_rank: f.rank(),
        f_det: f.determinant(),
        f_smith,
        inputs_ee8: (ee8_m, ee8_n),
        degenerate_equal,
        f_label: None,
        case_name: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::IntMatrix;
    use crate::SplitMix64;

    fn br(x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }

    fn z4() -> Lattice {
        Lattice::from_int_basis(Form::identity(4), IntMatrix::identity(4))
    }

    #[test]
    fn reflection_is_involution() {
        let mut rng = SplitMix64::new(11);
        for _ in 0..10 {
            // Random sublattice X of Z^6 of rank 2.
            let x = loop {
                let m = IntMatrix::from_rows(
                    (0..2)
                        .map(|_| (0..6).map(|_| BigInt::from(rng.small_int(3))).collect())
                        .collect(),
                );
                let (h, _) = crate::exactmat::hnf(&m);
                if h.without_zero_rows().rows() == 2 {
                    break Lattice::from_int_generators(Form::identity(6), m);
                }
            };
            let t = reflection_in(&x);
            assert!(t.compose(&t).is_identity());
            assert_eq!(order_of(&t, 10), Some(2));
            // t negates X.
            for r in 0..x.rank() {
                let v = x.basis_row(r);
                let image = t.apply(&v);
                let neg: Vec<BigRational> = v.iter().map(|e| -e.clone()).collect();
                assert_eq!(image, neg);
            }
        }
    }

    #[test]
    fn reflection_in_whole_ambient_is_negation() {
        let l = z4();
        let t = reflection_in(&l);
        assert_eq!(t, Isometry::negation(l.form().clone()));
    }

    #[test]
    fn reflection_in_zero_rank_is_identity() {
        let z = Lattice::zero(Form::identity(3));
        assert!(reflection_in(&z).is_identity());
    }

    #[test]
    fn identity_stabilizes_everything() {
        let l = z4();
        let id = Isometry::identity(l.form().clone());
        assert!(stabilizes(&id, &l));
    }

    #[test]
    fn sqrt2_unimodular_is_ssd() {
        // sqrt2 Z^4: basis I, form 2I.
        let l = Lattice::from_int_basis(Form::scaled_identity(4, br(2)), IntMatrix::identity(4));
        assert!(is_ssd(&l).unwrap());
        // Whole lattice is trivially RSSD in itself.
        assert!(is_rssd(&l, &l).unwrap());
    }

    #[test]
    fn ssd_examples() {
        // Any unimodular lattice is SSD (2 M* = 2M ⊆ M) ...
        let l = Lattice::from_int_basis(Form::identity(1), IntMatrix::identity(1));
        assert!(is_ssd(&l).unwrap());
        // ... but A2 is not: its dual has a class of order 3.
        let a2 = Lattice::from_int_basis(
            Form::identity(3),
            IntMatrix::from_i64_rows(&[&[1, -1, 0], &[0, 1, -1]]),
        );
        assert!(!is_ssd(&a2).unwrap());
    }

    #[test]
    fn eigenlattices_of_coordinate_swap() {
        // Swap of the two coordinates of Z^2: eigenlattices are the
        // diagonal and antidiagonal.
        let l = Lattice::from_int_basis(Form::identity(2), IntMatrix::identity(2));
        let swap = Isometry::new(
            Form::identity(2),
            IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]).to_rational(),
        )
        .unwrap();
        let plus = eigenlattice(&l, &swap, 1).unwrap();
        let minus = eigenlattice(&l, &swap, -1).unwrap();
        assert_eq!(plus.rank(), 1);
        assert_eq!(minus.rank(), 1);
        assert!(plus.contains_vector(&[br(1), br(1)]));
        assert!(minus.contains_vector(&[br(1), br(-1)]));
        // Tel = plus ⟂ minus has index 2 in L, an elementary abelian
        // 2-group quotient.
        let tel = total_eigenlattice(&l, &[swap]).unwrap();
        assert_eq!(l.index_of(&tel).unwrap(), BigInt::from(2));
        let inv = l.quotient_invariants(&tel).unwrap();
        assert!(inv
            .iter()
            .all(|d| d == &BigInt::one() || d == &BigInt::from(2)));
        // det(L^+) det(L^-) = 2^(2c) det(L) with c = 1.
        assert_eq!(
            plus.determinant() * minus.determinant(),
            br(4) * l.determinant()
        );
    }

    #[test]
    fn total_eigenlattice_empty_list() {
        let l = z4();
        assert!(total_eigenlattice(&l, &[]).unwrap().eq_lattice(&l));
    }

    #[test]
    fn rssd_implies_reflection_stabilizes() {
        // Random sign-permutation involutions sigma on stable lattices:
        // M = L^-(sigma) is RSSD in L, and t_M then stabilizes L.
        let mut rng = SplitMix64::new(303);
        let mut checked = 0;
        while checked < 30 {
            let n = 4 + rng.below(3) as usize;
            let sigma = random_signed_involution(&mut rng, n);
            let l = random_stable_lattice(&mut rng, n, &sigma);
            let m = eigenlattice(&l, &sigma, -1).unwrap();
            if m.rank() == 0 {
                continue;
            }
            assert!(is_rssd(&l, &m).unwrap(), "eigenlattice is RSSD");
            let t = reflection_in(&m);
            assert!(stabilizes(&t, &l), "t_M stabilizes L");
            checked += 1;
        }
    }

    fn random_signed_involution(rng: &mut SplitMix64, n: usize) -> Isometry {
        // Product of disjoint transpositions and sign flips.
        let mut perm: Vec<usize> = (0..n).collect();
        let mut i = 0;
        while i + 1 < n {
            if rng.below(2) == 0 {
                perm.swap(i, i + 1);
                i += 2;
            } else {
                i += 1;
            }
        }
        let mut m = RatMatrix::zero(n, n);
        for (i, &j) in perm.iter().enumerate() {
            let sign = if rng.below(2) == 0 { 1 } else { -1 };
            *m.at_mut(i, j) = br(sign);
            if i != j {
                // Keep it an involution: the partner entry uses the same sign.
                *m.at_mut(j, i) = br(sign);
            }
        }
        // Fix the diagonal of swapped pairs (both entries were set twice).
        let iso = Isometry::new(Form::identity(n), m).expect("signed permutation");
        assert!(iso.compose(&iso).is_identity());
        iso
    }

    fn random_stable_lattice(rng: &mut SplitMix64, n: usize, sigma: &Isometry) -> Lattice {
        // span{x_i, x_i sigma} + 4 Z^n is sigma-stable and full rank.
        let mut rows: Vec<Vec<BigRational>> = Vec::new();
        for _ in 0..n {
            let x: Vec<BigRational> = (0..n).map(|_| br(rng.small_int(2))).collect();
            rows.push(sigma.apply(&x));
            rows.push(x);
        }
        for i in 0..n {
            let mut v = vec![BigRational::zero(); n];
            v[i] = br(4);
            rows.push(v);
        }
        Lattice::from_rational_generators(Form::identity(n), RatMatrix::from_rows(rows))
    }

    #[test]
    fn dihedral_report_equal_inputs() {
        let l = Lattice::from_int_basis(Form::scaled_identity(4, br(2)), IntMatrix::identity(4));
        let rep = dihedral_report(&l, &l).unwrap();
        assert_eq!(rep.product_order, 1);
        assert_eq!(rep.dihedral_order, 2);
        assert!(rep.degenerate_equal);
        assert_eq!(rep.rank, 4);
        assert_eq!(rep.f_rank, 4);
        // Non-EE8 inputs still yield a report, flagged.
        assert_eq!(rep.inputs_ee8, (false, false));
    }
}
