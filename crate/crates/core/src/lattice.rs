//! Lattices in a fixed rational quadratic space and their algebra.
//!
//! A [`Lattice`] is a finitely generated subgroup of `Q^m` together with a
//! symmetric positive definite rational form on the ambient space.  The
//! basis is stored as an integer matrix over a common positive denominator,
//! so every normal-form computation runs in exact integer arithmetic.
//! Two lattices are comparable only when they live in the same ambient
//! space with the same form; lattices over different ambients are related
//! through invariants (rank, determinant, Smith divisors), never equality.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exactmat::{det_rat, hnf, integer_kernel, snf, IntMatrix, RatMatrix};

/// Errors from lattice operations whose preconditions involve caller data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeError {
    /// The two lattices do not share an ambient space and form.
    AmbientMismatch,
    /// A claimed sublattice is not contained in the ambient lattice.
    NotASublattice,
    /// Operation requires equal ranks (finite index).
    RankMismatch,
    /// The argument is not inside the required rational span.
    NotInSpan,
    /// Operation requires an integral lattice.
    NotIntegral,
    /// A glue vector has no positive multiple inside the base lattice.
    NotCommensurable,
    /// Operation requires positive rank.
    ZeroRank,
    /// Invalid parameters for a named construction.
    InvalidConstruction,
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            LatticeError::AmbientMismatch => "ambient space or form mismatch",
            LatticeError::NotASublattice => "not a sublattice",
            LatticeError::RankMismatch => "rank mismatch",
            LatticeError::NotInSpan => "vector outside the rational span",
            LatticeError::NotIntegral => "lattice is not integral",
            LatticeError::NotCommensurable => "glue vector not commensurable with base lattice",
            LatticeError::ZeroRank => "operation undefined on the zero lattice",
            LatticeError::InvalidConstruction => "invalid parameters for a named construction",
        };
        f.write_str(msg)
    }
}

/// The bilinear form on the ambient space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormKind {
    /// `q * I` for a positive rational `q`.
    ScaledIdentity(BigRational),
    /// An explicit symmetric positive definite Gram matrix.
    Gram(RatMatrix),
}

/// A rational quadratic space: dimension plus form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form {
    dim: usize,
    kind: FormKind,
}

impl Form {
    pub fn scaled_identity(dim: usize, scale: BigRational) -> Self {
        assert!(scale.is_positive(), "form scale must be positive");
        Form {
            dim,
            kind: FormKind::ScaledIdentity(scale),
        }
    }

    pub fn identity(dim: usize) -> Self {
        Form::scaled_identity(dim, BigRational::one())
    }

    pub fn gram(matrix: RatMatrix) -> Self {
        assert_eq!(matrix.rows(), matrix.cols());
        assert!(matrix.is_symmetric(), "form must be symmetric");
        Form {
            dim: matrix.rows(),
            kind: FormKind::Gram(matrix),
        }
    }

    /// Block-diagonal join of two forms.
    pub fn orthogonal_join(&self, other: &Form) -> Form {
        if let (FormKind::ScaledIdentity(a), FormKind::ScaledIdentity(b)) =
            (&self.kind, &other.kind)
        {
            if a == b {
                return Form::scaled_identity(self.dim + other.dim, a.clone());
            }
        }
        let m = self.dim + other.dim;
        let a = self.matrix();
        let b = other.matrix();
        let mut g = RatMatrix::zero(m, m);
        for r in 0..self.dim {
            for c in 0..self.dim {
                *g.at_mut(r, c) = a.at(r, c).clone();
            }
        }
        for r in 0..other.dim {
            for c in 0..other.dim {
                *g.at_mut(self.dim + r, self.dim + c) = b.at(r, c).clone();
            }
        }
        Form::gram(g)
    }

    pub fn rescaled(&self, r: &BigRational) -> Form {
        assert!(r.is_positive(), "rescale factor must be positive");
        match &self.kind {
            FormKind::ScaledIdentity(q) => Form::scaled_identity(self.dim, q * r),
            FormKind::Gram(g) => {
                let mut m = g.clone();
                for i in 0..m.rows() {
                    for j in 0..m.cols() {
                        let v = m.at(i, j) * r;
                        *m.at_mut(i, j) = v;
                    }
                }
                Form::gram(m)
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> &FormKind {
        &self.kind
    }

    /// The form as an explicit matrix.
    pub fn matrix(&self) -> RatMatrix {
        match &self.kind {
            FormKind::ScaledIdentity(q) => {
                let mut m = RatMatrix::zero(self.dim, self.dim);
                for i in 0..self.dim {
                    *m.at_mut(i, i) = q.clone();
                }
                m
            }
            FormKind::Gram(g) => g.clone(),
        }
    }

    /// Inner product of two ambient row vectors.
    pub fn inner(&self, u: &[BigRational], v: &[BigRational]) -> BigRational {
        assert_eq!(u.len(), self.dim);
        assert_eq!(v.len(), self.dim);
        match &self.kind {
            FormKind::ScaledIdentity(q) => {
                let mut acc = BigRational::zero();
                for i in 0..self.dim {
                    if !u[i].is_zero() && !v[i].is_zero() {
                        acc += &u[i] * &v[i];
                    }
                }
                acc * q
            }
            FormKind::Gram(g) => {
                let mut acc = BigRational::zero();
                for i in 0..self.dim {
                    if u[i].is_zero() {
                        continue;
                    }
                    for j in 0..self.dim {
                        if !v[j].is_zero() {
                            acc += &u[i] * g.at(i, j) * &v[j];
                        }
                    }
                }
                acc
            }
        }
    }

    pub fn norm(&self, v: &[BigRational]) -> BigRational {
        self.inner(v, v)
    }
}

/// A rational vector adjoined to a lattice to build a finite-index
/// overlattice; some positive integer multiple must lie in the base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlueVector(pub Vec<BigRational>);

impl GlueVector {
    pub fn from_i64(coords: &[i64], den: i64) -> Self {
        GlueVector(
            coords
                .iter()
                .map(|&x| BigRational::new(BigInt::from(x), BigInt::from(den)))
                .collect(),
        )
    }
}

/// Result of glueing: the generated lattice plus integrality flags.
///
/// Glueing deliberately accepts non-integral results; the dihedral-pair
/// analysis treats failed integrality as meaningful data, so the flags are
/// reported rather than raised as errors.
#[derive(Clone, Debug)]
pub struct Glued {
    pub lattice: Lattice,
    pub integral: bool,
    pub even: bool,
}

/// Rank-`k` lattice in a rational quadratic space of dimension `m`.
///
/// Immutable after construction; the Gram matrix of the stored basis is
/// computed eagerly.  The stored basis is whatever the constructor was
/// given (after independence trimming); canonical comparison happens in
/// [`Lattice::eq_lattice`] and [`Lattice::canonical_basis`].
#[derive(Clone)]
pub struct Lattice {
    form: Form,
    /// k×m integer matrix; actual basis rows are `basis_num / den`.
    basis_num: IntMatrix,
    den: BigInt,
    gram: RatMatrix,
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Lattice(rank {} in dim {}, den {})",
            self.rank(),
            self.ambient_dim(),
            self.den
        )
    }
}

impl Lattice {
    /// Lattice spanned by integer basis rows (rows must be independent).
    pub fn from_int_basis(form: Form, basis: IntMatrix) -> Self {
        assert_eq!(basis.cols(), form.dim(), "basis/ambient dimension mismatch");
        let rows = basis.rows();
        let lat = Self::build(form, basis, BigInt::one());
        let (h, _) = hnf(&lat.basis_num);
        assert_eq!(
            h.without_zero_rows().rows(),
            rows,
            "basis rows must be linearly independent"
        );
        lat
    }

    /// Lattice generated by possibly dependent integer rows.
    pub fn from_int_generators(form: Form, gens: IntMatrix) -> Self {
        assert_eq!(
            gens.cols(),
            form.dim(),
            "generators/ambient dimension mismatch"
        );
        let (h, _) = hnf(&gens);
        Self::build(form, h.without_zero_rows(), BigInt::one())
    }

    /// Lattice generated by rational rows.
    pub fn from_rational_generators(form: Form, gens: RatMatrix) -> Self {
        assert_eq!(
            gens.cols(),
            form.dim(),
            "generators/ambient dimension mismatch"
        );
        let (num, den) = gens.clear_denominators();
        let (h, _) = hnf(&num);
        Self::build(form, h.without_zero_rows(), den)
    }

    /// Keeps the given independent rows as the working basis (used by LLL,
    /// whose whole point is a particular basis, not the canonical one).
    pub fn with_basis_unchecked(form: Form, basis_num: IntMatrix, den: BigInt) -> Self {
        Self::build(form, basis_num, den)
    }

    pub fn zero(form: Form) -> Self {
        let dim = form.dim();
        Self::build(form, IntMatrix::zero(0, dim), BigInt::one())
    }

    fn build(form: Form, basis_num: IntMatrix, den: BigInt) -> Self {
        assert!(den.is_positive());
        // Normalize the scale: factor out gcd(content, den).
        let g = basis_num.content().gcd(&den);
        let (basis_num, den) = if g > BigInt::one() {
            let mut b = basis_num;
            for r in 0..b.rows() {
                for c in 0..b.cols() {
                    let v = b.at(r, c) / &g;
                    *b.at_mut(r, c) = v;
                }
            }
            (b, &den / &g)
        } else {
            (basis_num, den)
        };
        let gram = Self::compute_gram(&form, &basis_num, &den);
        Lattice {
            form,
            basis_num,
            den,
            gram,
        }
    }

    fn compute_gram(form: &Form, basis_num: &IntMatrix, den: &BigInt) -> RatMatrix {
        let k = basis_num.rows();
        let den2 = BigRational::from_integer(den * den);
        let mut g = RatMatrix::zero(k, k);
        match form.kind() {
            FormKind::ScaledIdentity(q) => {
                for i in 0..k {
                    for j in 0..=i {
                        let mut acc = BigInt::zero();
                        for c in 0..basis_num.cols() {
                            acc += basis_num.at(i, c) * basis_num.at(j, c);
                        }
                        let v = BigRational::from_integer(acc) * q / &den2;
                        *g.at_mut(i, j) = v.clone();
                        *g.at_mut(j, i) = v;
                    }
                }
            }
            FormKind::Gram(phi) => {
                let b = basis_num.to_rational();
                let full = b.mul(phi).mul(&b.transpose());
                for i in 0..k {
                    for j in 0..k {
                        *g.at_mut(i, j) = full.at(i, j) / &den2;
                    }
                }
            }
        }
        g
    }

    pub fn form(&self) -> &Form {
        &self.form
    }

    pub fn ambient_dim(&self) -> usize {
        self.form.dim()
    }

    pub fn rank(&self) -> usize {
        self.basis_num.rows()
    }

    /// Gram matrix of the stored basis.
    pub fn gram(&self) -> &RatMatrix {
        &self.gram
    }

    /// `det(gram)`; positive for positive definite forms.
    pub fn determinant(&self) -> BigRational {
        det_rat(&self.gram)
    }

    /// Integer numerator matrix and denominator of the stored basis.
    pub fn scaled_basis(&self) -> (&IntMatrix, &BigInt) {
        (&self.basis_num, &self.den)
    }

    /// Basis rows as rational ambient vectors.
    pub fn basis_rows(&self) -> Vec<Vec<BigRational>> {
        (0..self.rank()).map(|r| self.basis_row(r)).collect()
    }

    pub fn basis_row(&self, r: usize) -> Vec<BigRational> {
        self.basis_num
            .row(r)
            .iter()
            .map(|x| BigRational::new(x.clone(), self.den.clone()))
            .collect()
    }

    /// The ambient vector with the given coordinates in the stored basis.
    pub fn vector(&self, coeffs: &[BigInt]) -> Vec<BigRational> {
        assert_eq!(coeffs.len(), self.rank());
        let mut out = vec![BigRational::zero(); self.ambient_dim()];
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, out_j) in out.iter_mut().enumerate() {
                *out_j += BigRational::new(c * self.basis_num.at(i, j), self.den.clone());
            }
        }
        out
    }

    pub fn is_integral(&self) -> bool {
        self.gram.is_integral()
    }

    /// Even: integral with all basis norms in `2Z` (this forces every norm
    /// into `2Z`).
    pub fn is_even(&self) -> bool {
        if !self.is_integral() {
            return false;
        }
        (0..self.rank()).all(|i| {
            let d = self.gram.at(i, i);
            (d.numer() % BigInt::from(2)).is_zero()
        })
    }

    /// Canonical HNF basis over the reduced denominator; equal lattices in
    /// the same ambient produce identical output.
    pub fn canonical_basis(&self) -> (IntMatrix, BigInt) {
        let (h, _) = hnf(&self.basis_num);
        let h = h.without_zero_rows();
        (h, self.den.clone())
    }

    pub fn same_ambient(&self, other: &Lattice) -> bool {
        self.form == other.form
    }

    /// Exact lattice equality (same ambient, same subgroup).
    pub fn eq_lattice(&self, other: &Lattice) -> bool {
        if !self.same_ambient(other) || self.rank() != other.rank() || self.den != other.den {
            // Denominators are normalized in `build`, so equal lattices
            // always carry equal `den`.
            return false;
        }
        self.canonical_basis().0 == other.canonical_basis().0
    }

    /// Does this lattice contain `other` (as subgroups of the ambient)?
    pub fn contains(&self, other: &Lattice) -> Result<bool, LatticeError> {
        if !self.same_ambient(other) {
            return Err(LatticeError::AmbientMismatch);
        }
        let coords = match self.coordinates_of(other) {
            Some(c) => c,
            None => return Ok(false),
        };
        Ok(coords.is_integral())
    }

    /// Rational coordinates of `other`'s basis rows in this basis, if
    /// `other` lies in the rational span.
    pub fn coordinates_of(&self, other: &Lattice) -> Option<RatMatrix> {
        let b = self.rational_basis_matrix();
        let mut rows = Vec::with_capacity(other.rank());
        for r in 0..other.rank() {
            let target = other.basis_row(r);
            let x = crate::exactmat::solve_rational(&b, &target)?;
            rows.push(x);
        }
        Some(if rows.is_empty() {
            RatMatrix::zero(0, self.rank())
        } else {
            RatMatrix::from_rows(rows)
        })
    }

    pub fn rational_basis_matrix(&self) -> RatMatrix {
        let mut m = RatMatrix::zero(self.rank(), self.ambient_dim());
        for r in 0..self.rank() {
            for c in 0..self.ambient_dim() {
                *m.at_mut(r, c) =
                    BigRational::new(self.basis_num.at(r, c).clone(), self.den.clone());
            }
        }
        m
    }

    /// Membership test for a single rational ambient vector.
    pub fn contains_vector(&self, v: &[BigRational]) -> bool {
        let b = self.rational_basis_matrix();
        match crate::exactmat::solve_rational(&b, v) {
            Some(x) => x.iter().all(|e| e.is_integer()),
            None => false,
        }
    }

    /// Dual lattice `{u ∈ Q-span(L) : (u, L) ⊆ Z}` in the same ambient.
    pub fn dual(&self) -> Lattice {
        let ginv = self
            .gram
            .inverse()
            .expect("positive definite Gram is invertible");
        let dual_basis = ginv.mul(&self.rational_basis_matrix());
        Lattice::from_rational_generators(self.form.clone(), dual_basis)
    }

    /// Same basis, form multiplied by `r` (the lattice `sqrt(r) * L`).
    pub fn rescale(&self, r: &BigRational) -> Lattice {
        Lattice::build(
            self.form.rescaled(r),
            self.basis_num.clone(),
            self.den.clone(),
        )
    }

    /// The sublattice `n * L` (same ambient).
    pub fn scaled_copy(&self, n: &BigInt) -> Lattice {
        assert!(!n.is_zero());
        Lattice::build(
            self.form.clone(),
            self.basis_num.scale(&n.abs()),
            self.den.clone(),
        )
    }

    /// `L1 + L2` inside a common ambient.
    pub fn sum(&self, other: &Lattice) -> Result<Lattice, LatticeError> {
        if !self.same_ambient(other) {
            return Err(LatticeError::AmbientMismatch);
        }
        let l = self.den.lcm(&other.den);
        let a = self.basis_num.scale(&(&l / &self.den));
        let b = other.basis_num.scale(&(&l / &other.den));
        let stacked = a.stack(&b);
        let (h, _) = hnf(&stacked);
        Ok(Lattice::build(self.form.clone(), h.without_zero_rows(), l))
    }

    /// `L1 ∩ L2` inside a common ambient.
    pub fn intersect(&self, other: &Lattice) -> Result<Lattice, LatticeError> {
        if !self.same_ambient(other) {
            return Err(LatticeError::AmbientMismatch);
        }
        let l = self.den.lcm(&other.den);
        let a = self.basis_num.scale(&(&l / &self.den));
        let b = other.basis_num.scale(&(&l / &other.den));
        // Pairs (x, y) with x*a = y*b <=> (x | -y) in the left kernel of
        // the stacked matrix.
        let stacked = a.stack(&b);
        let kernel = integer_kernel(&stacked);
        let ka = kernel.rows();
        if ka == 0 {
            return Ok(Lattice::zero(self.form.clone()));
        }
        let mut rows = Vec::with_capacity(ka);
        for r in 0..ka {
            let x = &kernel.row(r)[0..a.rows()];
            let mut v = vec![BigInt::zero(); self.ambient_dim()];
            for (i, xi) in x.iter().enumerate() {
                if xi.is_zero() {
                    continue;
                }
                for (c, vc) in v.iter_mut().enumerate() {
                    *vc += xi * a.at(i, c);
                }
            }
            rows.push(v);
        }
        let (h, _) = hnf(&IntMatrix::from_rows(rows));
        Ok(Lattice::build(self.form.clone(), h.without_zero_rows(), l))
    }

    /// `{v ∈ L : (v, s) = 0 for all s ∈ S}`.
    pub fn annihilator(&self, s: &Lattice) -> Result<Lattice, LatticeError> {
        if !self.same_ambient(s) {
            return Err(LatticeError::AmbientMismatch);
        }
        if s.rank() == 0 {
            return Ok(self.clone());
        }
        // x * (B_L Phi B_S^T) = 0 over integer x.
        let pairing = self
            .rational_basis_matrix()
            .mul(&self.form.matrix())
            .mul(&s.rational_basis_matrix().transpose());
        let (pairing_int, _) = pairing.clear_denominators();
        let kernel = integer_kernel(&pairing_int);
        self.sublattice_from_coordinate_rows(&kernel)
    }

    pub(crate) fn sublattice_from_coordinate_rows(
        &self,
        coords: &IntMatrix,
    ) -> Result<Lattice, LatticeError> {
        if coords.rows() == 0 {
            return Ok(Lattice::zero(self.form.clone()));
        }
        let num = coords.mul(&self.basis_num);
        let (h, _) = hnf(&num);
        Ok(Lattice::build(
            self.form.clone(),
            h.without_zero_rows(),
            self.den.clone(),
        ))
    }

    /// The summand of `L` determined by `S`: `L ∩ Q-span(S)`, i.e. the
    /// saturation of `S` in `L`.
    pub fn summand(&self, s: &Lattice) -> Result<Lattice, LatticeError> {
        if !self.same_ambient(s) {
            return Err(LatticeError::AmbientMismatch);
        }
        if s.rank() == 0 {
            return Ok(Lattice::zero(self.form.clone()));
        }
        // Require S within the rational span of L.
        if self.coordinates_of(s).is_none() {
            return Err(LatticeError::NotInSpan);
        }
        // v ∈ span(S)  <=>  v = v * P, with P the orthogonal projection
        // onto span(S): P = Phi B_S^T G_S^-1 B_S.
        let proj = self.projection_matrix(s);
        let mut id_minus = RatMatrix::identity(self.ambient_dim());
        for r in 0..id_minus.rows() {
            for c in 0..id_minus.cols() {
                let v = id_minus.at(r, c) - proj.at(r, c);
                *id_minus.at_mut(r, c) = v;
            }
        }
        let test = self.rational_basis_matrix().mul(&id_minus);
        let (test_int, _) = test.clear_denominators();
        let kernel = integer_kernel(&test_int);
        self.sublattice_from_coordinate_rows(&kernel)
    }

    fn projection_matrix(&self, s: &Lattice) -> RatMatrix {
        let bs = s.rational_basis_matrix();
        let gs_inv = s.gram().inverse().expect("S has independent rows");
        self.form
            .matrix()
            .mul(&bs.transpose())
            .mul(&gs_inv)
            .mul(&bs)
    }

    /// Orthogonal projection of `v` onto the rational span of `S`.
    pub fn project_onto(v: &[BigRational], s: &Lattice) -> Vec<BigRational> {
        assert_eq!(v.len(), s.ambient_dim());
        if s.rank() == 0 {
            return vec![BigRational::zero(); v.len()];
        }
        // proj(v) = (v Phi B_S^T) G_S^-1 B_S
        let bs = s.rational_basis_matrix();
        let phi = s.form.matrix();
        let vm = RatMatrix::from_rows(vec![v.to_vec()]);
        let out = vm
            .mul(&phi)
            .mul(&bs.transpose())
            .mul(&s.gram().inverse().expect("S has independent rows"))
            .mul(&bs);
        out.row(0).to_vec()
    }

    /// Index `|L : M|` for a full-rank sublattice `M ⊆ L`.
    pub fn index_of(&self, m: &Lattice) -> Result<BigInt, LatticeError> {
        let coords = self.integral_coordinates_of(m)?;
        if m.rank() != self.rank() {
            return Err(LatticeError::RankMismatch);
        }
        let d = crate::exactmat::det_int(&coords);
        if d.is_zero() {
            return Err(LatticeError::RankMismatch);
        }
        Ok(d.abs())
    }

    /// Smith divisors of `L / M` (including unit entries; length = rank).
    pub fn quotient_invariants(&self, m: &Lattice) -> Result<Vec<BigInt>, LatticeError> {
        let coords = self.integral_coordinates_of(m)?;
        if m.rank() != self.rank() {
            return Err(LatticeError::RankMismatch);
        }
        Ok(snf(&coords).divisors)
    }

    fn integral_coordinates_of(&self, m: &Lattice) -> Result<IntMatrix, LatticeError> {
        if !self.same_ambient(m) {
            return Err(LatticeError::AmbientMismatch);
        }
        let coords = self.coordinates_of(m).ok_or(LatticeError::NotASublattice)?;
        coords.to_integer().ok_or(LatticeError::NotASublattice)
    }

    /// Smith divisors of the Gram matrix: the invariant factors of the
    /// discriminant group `L*/L`, unit entries included.
    pub fn discriminant_group(&self) -> Result<Vec<BigInt>, LatticeError> {
        let g = self.gram.to_integer().ok_or(LatticeError::NotIntegral)?;
        Ok(snf(&g).divisors)
    }

    /// Orthogonal direct sum in a fresh ambient of dimension `m1 + m2`.
    pub fn orthogonal_sum(&self, other: &Lattice) -> Lattice {
        let form = self.form.orthogonal_join(&other.form);
        let m = form.dim();
        let l = self.den.lcm(&other.den);
        let mut rows = Vec::with_capacity(self.rank() + other.rank());
        let fa = &l / &self.den;
        for r in 0..self.rank() {
            let mut v = vec![BigInt::zero(); m];
            for c in 0..self.ambient_dim() {
                v[c] = self.basis_num.at(r, c) * &fa;
            }
            rows.push(v);
        }
        let fb = &l / &other.den;
        for r in 0..other.rank() {
            let mut v = vec![BigInt::zero(); m];
            for c in 0..other.ambient_dim() {
                v[self.ambient_dim() + c] = other.basis_num.at(r, c) * &fb;
            }
            rows.push(v);
        }
        let basis = if rows.is_empty() {
            IntMatrix::zero(0, m)
        } else {
            IntMatrix::from_rows(rows)
        };
        Lattice::build(form, basis, l)
    }

    /// Embeds an ambient vector into a larger ambient at the given offset.
    pub fn pad_vector(v: &[BigRational], offset: usize, total: usize) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); total];
        out[offset..offset + v.len()].clone_from_slice(v);
        out
    }

    /// Lattice generated by `L0` and the glue vectors; reports integrality
    /// flags rather than failing on non-integral results.
    pub fn glue(&self, glue: &[GlueVector]) -> Result<Glued, LatticeError> {
        let b = self.rational_basis_matrix();
        for g in glue {
            if g.0.len() != self.ambient_dim() {
                return Err(LatticeError::AmbientMismatch);
            }
            // Commensurable <=> inside the rational span.
            if crate::exactmat::solve_rational(&b, &g.0).is_none() {
                return Err(LatticeError::NotCommensurable);
            }
        }
        let mut rows: Vec<Vec<BigRational>> = self.basis_rows();
        rows.extend(glue.iter().map(|g| g.0.clone()));
        let lattice =
            Lattice::from_rational_generators(self.form.clone(), RatMatrix::from_rows(rows));
        let integral = lattice.is_integral();
        let even = lattice.is_even();
        Ok(Glued {
            lattice,
            integral,
            even,
        })
    }

    /// An isometric copy with integral ambient coordinates: the basis
    /// numerators become the basis and the form absorbs `1/den^2`.  The
    /// Gram matrix is unchanged.
    pub fn denominator_cleared(&self) -> Lattice {
        if self.den == BigInt::one() {
            return self.clone();
        }
        let scale = BigRational::new(BigInt::one(), &self.den * &self.den);
        Lattice::build(
            self.form.rescaled(&scale),
            self.basis_num.clone(),
            BigInt::one(),
        )
    }

    /// Applies an ambient transformation (rows act from the right:
    /// `basis * g`).
    pub fn transformed(&self, g: &RatMatrix) -> Lattice {
        assert_eq!(g.rows(), self.ambient_dim());
        assert_eq!(g.cols(), self.ambient_dim());
        let b = self.rational_basis_matrix().mul(g);
        Lattice::from_rational_generators(self.form.clone(), b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::SplitMix64;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn br(x: i64) -> BigRational {
        BigRational::from_integer(bi(x))
    }

    /// A2 as zero-sum vectors in Z^3 under the identity form.
    fn a2() -> Lattice {
        Lattice::from_int_basis(
            Form::identity(3),
            IntMatrix::from_i64_rows(&[&[1, -1, 0], &[0, 1, -1]]),
        )
    }

    #[test]
    fn a2_invariants() {
        let l = a2();
        assert_eq!(l.rank(), 2);
        assert_eq!(l.determinant(), br(3));
        assert!(l.is_integral());
        assert!(l.is_even());
        assert_eq!(l.discriminant_group().unwrap(), vec![bi(1), bi(3)]);
    }

    #[test]
    fn dual_of_a2() {
        let l = a2();
        let d = l.dual();
        assert!(!d.is_integral());
        assert_eq!(d.determinant(), BigRational::new(bi(1), bi(3)));
        assert!(d.dual().eq_lattice(&l));
        assert!(d.contains(&l).unwrap());
    }

    #[test]
    fn det_reciprocity_and_double_dual_random() {
        let mut rng = SplitMix64::new(5);
        for _ in 0..50 {
            let l = random_full_sublattice(&mut rng, 4);
            let d = l.dual();
            assert_eq!(l.determinant() * d.determinant(), br(1));
            assert!(d.dual().eq_lattice(&l));
        }
    }

    fn random_full_sublattice(rng: &mut SplitMix64, n: usize) -> Lattice {
        loop {
            let m = IntMatrix::from_rows(
                (0..n)
                    .map(|_| (0..n).map(|_| bi(rng.small_int(4))).collect())
                    .collect(),
            );
            if !crate::exactmat::det_int(&m).is_zero() {
                return Lattice::from_int_basis(Form::identity(n), m);
            }
        }
    }

    #[test]
    fn sum_intersect_index() {
        let z2 = Lattice::from_int_basis(Form::identity(2), IntMatrix::identity(2));
        let two_z2 = z2.scaled_copy(&bi(2));
        assert!(z2.sum(&two_z2).unwrap().eq_lattice(&z2));
        assert!(z2.intersect(&two_z2).unwrap().eq_lattice(&two_z2));
        assert_eq!(z2.index_of(&two_z2).unwrap(), bi(4));
        assert_eq!(z2.quotient_invariants(&two_z2).unwrap(), vec![bi(2), bi(2)]);
        // Index-squared determinant law: det(M) = |L:M|^2 det(L).
        assert_eq!(two_z2.determinant(), br(16));
    }

    #[test]
    fn sum_is_idempotent() {
        let l = a2();
        assert!(l.sum(&l).unwrap().eq_lattice(&l));
    }

    #[test]
    fn annihilator_orthogonal() {
        let z3 = Lattice::from_int_basis(Form::identity(3), IntMatrix::identity(3));
        let axis =
            Lattice::from_int_basis(Form::identity(3), IntMatrix::from_i64_rows(&[&[1, 1, 0]]));
        let ann = z3.annihilator(&axis).unwrap();
        assert_eq!(ann.rank(), 2);
        for r in 0..ann.rank() {
            let v = ann.basis_row(r);
            let w = axis.basis_row(0);
            assert!(z3.form().inner(&v, &w).is_zero());
        }
        assert_eq!(z3.annihilator(&z3).unwrap().rank(), 0);
    }

    #[test]
    fn summand_saturates() {
        let z2 = Lattice::from_int_basis(Form::identity(2), IntMatrix::identity(2));
        let sub = Lattice::from_int_basis(Form::identity(2), IntMatrix::from_i64_rows(&[&[2, 4]]));
        let sat = z2.summand(&sub).unwrap();
        assert_eq!(sat.rank(), 1);
        // Saturation of span{(2,4)} in Z^2 is span{(1,2)}.
        assert!(sat.contains_vector(&[br(1), br(2)]));
        assert!(z2.summand(&z2).unwrap().eq_lattice(&z2));
    }

    #[test]
    fn glue_and_project() {
        let base = Lattice::from_int_basis(
            Form::identity(2),
            IntMatrix::from_i64_rows(&[&[2, 0], &[0, 2]]),
        );
        let glued = base.glue(&[GlueVector::from_i64(&[1, 1], 1)]).unwrap();
        assert!(glued.integral);
        assert_eq!(glued.lattice.index_of(&base).unwrap(), bi(2));
        // Projection of (1,1) onto span{(2,0)} is (1,0).
        let s = Lattice::from_int_basis(Form::identity(2), IntMatrix::from_i64_rows(&[&[2, 0]]));
        assert_eq!(
            Lattice::project_onto(&[br(1), br(1)], &s),
            vec![br(1), br(0)]
        );
        // Vector in span projects to itself; orthogonal vector to zero.
        assert_eq!(
            Lattice::project_onto(&[br(3), br(0)], &s),
            vec![br(3), br(0)]
        );
        assert_eq!(
            Lattice::project_onto(&[br(0), br(7)], &s),
            vec![br(0), br(0)]
        );
    }

    #[test]
    fn glue_rejects_incommensurable() {
        let base = Lattice::from_int_basis(Form::identity(2), IntMatrix::from_i64_rows(&[&[1, 0]]));
        let err = base.glue(&[GlueVector::from_i64(&[0, 1], 2)]).unwrap_err();
        assert_eq!(err, LatticeError::NotCommensurable);
    }

    #[test]
    fn orthogonal_sum_block_structure() {
        let a = a2();
        let s = a.orthogonal_sum(&a);
        assert_eq!(s.rank(), 4);
        assert_eq!(s.ambient_dim(), 6);
        assert_eq!(s.determinant(), br(9));
        let zero = Lattice::zero(Form::identity(2));
        let t = a.orthogonal_sum(&zero);
        assert_eq!(t.rank(), 2);
        assert_eq!(t.determinant(), br(3));
    }

    #[test]
    fn rescale_law() {
        let a = a2();
        let r = a.rescale(&br(2));
        assert_eq!(r.determinant(), br(12)); // 2^2 * 3
        assert!(a.rescale(&br(1)).eq_lattice(&a));
        // sqrt3 A2 and 3 dual(A2): same determinant and Smith divisors.
        let s3 = a.rescale(&br(3));
        let d3 = a.dual().scaled_copy(&bi(3));
        assert_eq!(s3.determinant(), d3.determinant());
        assert_eq!(
            s3.discriminant_group().unwrap(),
            d3.discriminant_group().unwrap()
        );
    }

    #[test]
    fn no_sublattice_of_z2_with_3x3_quotient() {
        // All four index-3 sublattices of Z^2: none has discriminant 3x3.
        let z2 = Lattice::from_int_basis(Form::identity(2), IntMatrix::identity(2));
        let sublats = [
            IntMatrix::from_i64_rows(&[&[1, 0], &[0, 3]]),
            IntMatrix::from_i64_rows(&[&[3, 0], &[0, 1]]),
            IntMatrix::from_i64_rows(&[&[3, 0], &[1, 1]]),
            IntMatrix::from_i64_rows(&[&[3, 0], &[2, 1]]),
        ];
        for b in sublats {
            let l = Lattice::from_int_basis(Form::identity(2), b);
            assert_eq!(z2.index_of(&l).unwrap(), bi(3));
            let dg = l.discriminant_group().unwrap();
            assert_ne!(dg, vec![bi(3), bi(3)]);
        }
    }
}
