//! Constructions of the named lattices: root lattices and their doubled
//! (`sqrt 2`) copies, half-spin lattices, the two special rank-4 lattices
//! of determinant 125 and 25, tensor products, the Coxeter–Todd lattice,
//! and the rank-15 dihedral pair that does not embed in the Leech lattice.
//!
//! Coordinate conventions: `A_n` lives in the zero-sum hyperplane of
//! `Z^(n+1)` and `D_n` in `Z^n`, both under the identity form.  `E6`, `E7`,
//! `E8` and the half-spin lattices use doubled coordinates under the form
//! `I/4`, so half-integer vectors of the usual models become integer rows
//! here and all arithmetic stays integral.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::exactmat::{IntMatrix, RatMatrix};
use crate::involution::{order_of, Isometry};
use crate::lattice::{Form, GlueVector, Lattice, LatticeError};
use crate::shortvec;

fn bi(x: i64) -> BigInt {
    BigInt::from(x)
}

fn br(x: i64) -> BigRational {
    BigRational::from_integer(bi(x))
}

fn brf(n: i64, d: i64) -> BigRational {
    BigRational::new(bi(n), bi(d))
}

/// Root lattice families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootKind {
    A,
    D,
    E,
}

/// The standard model of a root lattice.
pub fn root_lattice(kind: RootKind, n: usize) -> Result<Lattice, LatticeError> {
    match kind {
        RootKind::A => {
            if n < 1 {
                return Err(LatticeError::InvalidConstruction);
            }
            let mut rows = Vec::with_capacity(n);
            for i in 0..n {
                let mut v = vec![bi(0); n + 1];
                v[i] = bi(1);
                v[i + 1] = bi(-1);
                rows.push(v);
            }
            Ok(Lattice::from_int_basis(
                Form::identity(n + 1),
                IntMatrix::from_rows(rows),
            ))
        }
        RootKind::D => {
            if n < 2 {
                return Err(LatticeError::InvalidConstruction);
            }
            let mut rows = Vec::with_capacity(n);
            let mut first = vec![bi(0); n];
            first[0] = bi(1);
            first[1] = bi(1);
            rows.push(first);
            for i in 0..n - 1 {
                let mut v = vec![bi(0); n];
                v[i] = bi(1);
                v[i + 1] = bi(-1);
                rows.push(v);
            }
            Ok(Lattice::from_int_basis(
                Form::identity(n),
                IntMatrix::from_rows(rows),
            ))
        }
        RootKind::E => match n {
            8 => Ok(e8()),
            7 => {
                let e8 = e8();
                let r = doubled_root_sub(&e8, &[&[2, -2, 0, 0, 0, 0, 0, 0]]);
                e8.annihilator(&r)
            }
            6 => {
                // Annihilator of two chained roots: the E8 vectors with
                // equal first three coordinates.
                let e8 = e8();
                let r = doubled_root_sub(
                    &e8,
                    &[&[2, -2, 0, 0, 0, 0, 0, 0], &[0, 2, -2, 0, 0, 0, 0, 0]],
                );
                e8.annihilator(&r)
            }
            _ => Err(LatticeError::InvalidConstruction),
        },
    }
}

fn doubled_root_sub(e8: &Lattice, rows: &[&[i64]]) -> Lattice {
    Lattice::from_int_basis(e8.form().clone(), IntMatrix::from_i64_rows(rows))
}

/// `E8` in doubled coordinates: `D8` plus the all-ones glue row.
fn e8() -> Lattice {
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    let mut first = vec![bi(0); 8];
    first[0] = bi(2);
    first[1] = bi(2);
    rows.push(first);
    for i in 0..7 {
        let mut v = vec![bi(0); 8];
        v[i] = bi(2);
        v[i + 1] = bi(-2);
        rows.push(v);
    }
    rows.push(vec![bi(1); 8]);
    Lattice::from_int_generators(
        Form::scaled_identity(8, brf(1, 4)),
        IntMatrix::from_rows(rows),
    )
}

/// `sqrt 2` times a root lattice (the doubled-norm families).
pub fn scaled(kind: RootKind, n: usize) -> Result<Lattice, LatticeError> {
    Ok(root_lattice(kind, n)?.rescale(&br(2)))
}

/// Half-spin lattice: `D_n` extended by the all-halves vector, in doubled
/// coordinates.  Unimodular for `n ≡ 0 (mod 8)`; the checks used here take
/// `n` divisible by 4.
pub fn half_spin(n: usize) -> Result<Lattice, LatticeError> {
    if n < 4 || n % 2 != 0 {
        return Err(LatticeError::InvalidConstruction);
    }
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    let mut first = vec![bi(0); n];
    first[0] = bi(2);
    first[1] = bi(2);
    rows.push(first);
    for i in 0..n - 1 {
        let mut v = vec![bi(0); n];
        v[i] = bi(2);
        v[i + 1] = bi(-2);
        rows.push(v);
    }
    rows.push(vec![bi(1); n]);
    Ok(Lattice::from_int_generators(
        Form::scaled_identity(n, brf(1, 4)),
        IntMatrix::from_rows(rows),
    ))
}

/// The rank-4 lattice with Gram `4I - (J - I)`: ten norm-4 vectors,
/// rootless, elementary abelian discriminant group of order 125.
pub fn a4_1() -> Lattice {
    let gram = IntMatrix::from_i64_rows(&[
        &[4, -1, -1, -1],
        &[-1, 4, -1, -1],
        &[-1, -1, 4, -1],
        &[-1, -1, -1, 4],
    ]);
    Lattice::from_int_basis(Form::gram(gram.to_rational()), IntMatrix::identity(4))
}

/// The even rank-4 determinant-25 lattice: `A2 ⟂ sqrt5 A2` glued by a
/// vector of shape `u + v` with norms 2/3 and 10/3.
pub fn m_4_25() -> Lattice {
    let a2 = root_lattice(RootKind::A, 2).expect("A2");
    let sqrt5_a2 = a2.rescale(&br(5));
    let base = a2.orthogonal_sum(&sqrt5_a2);
    // u = (2r + s)/3 in the first copy, v its twin in the second; both are
    // dual vectors generating the order-3 part.
    let g = GlueVector([2, -1, -1, 2, -1, -1].iter().map(|&x| brf(x, 3)).collect());
    let glued = base.glue(&[g]).expect("commensurable glue");
    assert!(glued.even, "M(4,25) must be even");
    let l = glued.lattice;
    assert_eq!(l.determinant(), br(25));
    l
}

/// Tensor product lattice: Gram is the Kronecker product of the Grams,
/// basis vectors indexed `a_i ⊗ b_j` with `i` major.
pub fn tensor(a: &Lattice, b: &Lattice) -> Lattice {
    let ka = a.rank();
    let kb = b.rank();
    let n = ka * kb;
    let ga = a.gram();
    let gb = b.gram();
    let mut g = RatMatrix::zero(n, n);
    for i in 0..ka {
        for j in 0..kb {
            for k in 0..ka {
                for l in 0..kb {
                    *g.at_mut(i * kb + j, k * kb + l) = ga.at(i, k) * gb.at(j, l);
                }
            }
        }
    }
    Lattice::from_int_basis(Form::gram(g), IntMatrix::identity(n))
}

/// Verifies the tensor-shape identity for a lattice `A` inside a space
/// carrying an order-3 fixed-point-free isometry `g` that moves `A` off
/// itself: the Gram of the rows `(a_1, ..., a_k, a_1 g, ..., a_k g)` must
/// equal `[[1, -1/2], [-1/2, 1]] ⊗ Gram(A)`, and `ann_{A+Ag}(A)` must have
/// the invariants of `sqrt3 A`.
pub fn tensor_embedding_check(a: &Lattice, g: &Isometry) -> Result<bool, LatticeError> {
    if a.rank() == 0 {
        return Ok(true);
    }
    if order_of(g, 4) != Some(3) {
        return Err(LatticeError::InvalidConstruction);
    }
    let ag = g.apply_lattice(a);
    let k = a.rank();
    let mut rows = a.basis_rows();
    for r in a.basis_rows() {
        rows.push(g.apply(&r));
    }
    let stacked =
        Lattice::from_rational_generators(a.form().clone(), RatMatrix::from_rows(rows.clone()));
    if stacked.rank() != 2 * k {
        return Ok(false);
    }
    // Gram of the explicit row sequence (not of the canonicalized basis).
    let phi = a.form().matrix();
    let rm = RatMatrix::from_rows(rows);
    let gram = rm.mul(&phi).mul(&rm.transpose());
    let ga = a.gram();
    let half = brf(1, 2);
    for i in 0..2 * k {
        for j in 0..2 * k {
            let factor = if (i < k) == (j < k) {
                br(1)
            } else {
                -half.clone()
            };
            let expected = factor * ga.at(i % k, j % k);
            if gram.at(i, j) != &expected {
                return Ok(false);
            }
        }
    }
    // ann_{A+Ag}(A) invariants match sqrt3 A.
    let sum = a.sum(&ag)?;
    let ann = sum.annihilator(a)?;
    let sqrt3a = a.rescale(&br(3));
    if ann.rank() != sqrt3a.rank() || ann.determinant() != sqrt3a.determinant() {
        return Ok(false);
    }
    if a.is_integral() {
        let d1 = ann.discriminant_group()?;
        let d2 = sqrt3a.discriminant_group()?;
        if d1 != d2 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The Coxeter–Todd lattice, realized the way the rank-14 order-6 case
/// produces it inside the Leech lattice: `J = ann_L(F)` for `L = M + N`
/// and `F = M ∩ N`.
pub fn coxeter_todd() -> Lattice {
    let (m, n) = crate::leech::case_data(crate::leech::CaseName::Dih6_14).expect("case data");
    let l = m.sum(&n).expect("same ambient");
    let f = m.intersect(&n).expect("same ambient");
    let j = l.annihilator(&f).expect("same ambient");
    assert_eq!(j.rank(), 12);
    assert_eq!(j.determinant(), br(729));
    assert!(j.is_even());
    assert!(shortvec::is_rootless(&j).expect("integral"));
    j
}

/// The rank-15 pair: `F = Z alpha` of norm 4, `P ≅ Q ≅ EE7`, with glue
/// vectors `alpha/2 + xi` built from the deep hole `(1,1,1,1,1,1,-3,-3)/4`
/// of the dual `E7`.  Returns `(M, N, L)` with `L = M + N`.
///
/// Ambient: 17 coordinates; axis 0 carries the form scale 4, the two
/// blocks of 8 carry `I/2` (doubled `E7` coordinates rescaled by 2).
pub fn dih4_15() -> (Lattice, Lattice, Lattice) {
    let mut phi = RatMatrix::zero(17, 17);
    *phi.at_mut(0, 0) = br(4);
    for i in 1..17 {
        *phi.at_mut(i, i) = brf(1, 2);
    }
    let form = Form::gram(phi);

    // Doubled E7 rows (zero-sum model): six chain roots and the
    // half-integer root.
    let mut e7_rows: Vec<Vec<i64>> = Vec::new();
    for i in 0..6 {
        let mut v = vec![0i64; 8];
        v[i] = 2;
        v[i + 1] = -2;
        e7_rows.push(v);
    }
    e7_rows.push(vec![1, 1, 1, 1, -1, -1, -1, -1]);

    let mut f_row = vec![bi(0); 17];
    f_row[0] = bi(1);
    let mut base_m_rows: Vec<Vec<BigInt>> = vec![f_row.clone()];
    let mut base_n_rows: Vec<Vec<BigInt>> = vec![f_row];
    for row in &e7_rows {
        let mut vm = vec![bi(0); 17];
        let mut vn = vec![bi(0); 17];
        for (i, &x) in row.iter().enumerate() {
            vm[1 + i] = bi(x);
            vn[9 + i] = bi(x);
        }
        base_m_rows.push(vm);
        base_n_rows.push(vn);
    }
    let base_m = Lattice::from_int_basis(form.clone(), IntMatrix::from_rows(base_m_rows));
    let base_n = Lattice::from_int_basis(form.clone(), IntMatrix::from_rows(base_n_rows));

    // Glue alpha/2 + xi with xi the doubled deep hole over denominator 2.
    let deep = [1i64, 1, 1, 1, 1, 1, -3, -3];
    let mut gm = vec![BigRational::zero(); 17];
    let mut gn = vec![BigRational::zero(); 17];
    gm[0] = brf(1, 2);
    gn[0] = brf(1, 2);
    for (i, &x) in deep.iter().enumerate() {
        gm[1 + i] = brf(x, 2);
        gn[9 + i] = brf(x, 2);
    }
    let m = base_m
        .glue(&[GlueVector(gm)])
        .expect("commensurable")
        .lattice;
    let n = base_n
        .glue(&[GlueVector(gn)])
        .expect("commensurable")
        .lattice;
    let l = m.sum(&n).expect("same ambient");
    (m, n, l)
}

/// Rank/determinant/evenness/minimum certificate carried by every named
/// lattice.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub rank: usize,
    pub det: BigRational,
    pub even: bool,
    pub integral: bool,
    pub min_norm: BigRational,
    pub smith: Vec<BigInt>,
}

/// A lattice from the atlas together with its construction-time
/// certificate.
#[derive(Clone, Debug)]
pub struct NamedLattice {
    pub name: String,
    pub lattice: Lattice,
    pub certificate: Certificate,
}

/// Minimum norm of an even lattice, found by stepping the exact
/// existence search through 2, 4, 6, ...; cheap even in rank 24.
pub fn even_min_norm(l: &Lattice) -> Result<BigRational, LatticeError> {
    if l.rank() == 0 {
        return Err(LatticeError::ZeroRank);
    }
    assert!(l.is_even(), "stepped minimum requires an even lattice");
    let mut n = br(2);
    loop {
        if shortvec::count_norm_exists(l, &n) {
            return Ok(n);
        }
        n += br(2);
    }
}

fn certificate(l: &Lattice) -> Certificate {
    let min_norm = if l.rank() == 0 {
        BigRational::zero()
    } else if l.is_even() {
        even_min_norm(l).expect("positive rank")
    } else {
        shortvec::min_norm(l).expect("positive rank")
    };
    let smith = if l.is_integral() {
        l.discriminant_group().expect("integral")
    } else {
        Vec::new()
    };
    Certificate {
        rank: l.rank(),
        det: l.determinant(),
        even: l.is_even(),
        integral: l.is_integral(),
        min_norm,
        smith,
    }
}

/// Names accepted by [`by_name`].
pub const NAMES: &[&str] = &[
    "a1", "a2", "a3", "a4", "d4", "d6", "d8", "e6", "e7", "e8", "aa1", "aa2", "aa4", "dd4", "dd6",
    "ee6", "ee7", "ee8", "hs8", "hs12", "hs16", "a4_1", "m_4_25", "a2xe6", "a2xe8", "a4xa4", "k12",
    "bw16", "leech",
];

/// Looks up a named lattice and certifies it.
pub fn by_name(name: &str) -> Result<NamedLattice, LatticeError> {
    let lattice = match name {
        "a1" => root_lattice(RootKind::A, 1)?,
        "a2" => root_lattice(RootKind::A, 2)?,
        "a3" => root_lattice(RootKind::A, 3)?,
        "a4" => root_lattice(RootKind::A, 4)?,
        "d4" => root_lattice(RootKind::D, 4)?,
        "d6" => root_lattice(RootKind::D, 6)?,
        "d8" => root_lattice(RootKind::D, 8)?,
        "e6" => root_lattice(RootKind::E, 6)?,
        "e7" => root_lattice(RootKind::E, 7)?,
        "e8" => root_lattice(RootKind::E, 8)?,
        "aa1" => scaled(RootKind::A, 1)?,
        "aa2" => scaled(RootKind::A, 2)?,
        "aa4" => scaled(RootKind::A, 4)?,
        "dd4" => scaled(RootKind::D, 4)?,
        "dd6" => scaled(RootKind::D, 6)?,
        "ee6" => scaled(RootKind::E, 6)?,
        "ee7" => scaled(RootKind::E, 7)?,
        "ee8" => scaled(RootKind::E, 8)?,
        "hs8" => half_spin(8)?,
        "hs12" => half_spin(12)?,
        "hs16" => half_spin(16)?,
        "a4_1" => a4_1(),
        "m_4_25" => m_4_25(),
        "a2xe6" => tensor(
            &root_lattice(RootKind::A, 2)?,
            &root_lattice(RootKind::E, 6)?,
        ),
        "a2xe8" => tensor(
            &root_lattice(RootKind::A, 2)?,
            &root_lattice(RootKind::E, 8)?,
        ),
        "a4xa4" => tensor(
            &root_lattice(RootKind::A, 4)?,
            &root_lattice(RootKind::A, 4)?,
        ),
        "k12" => coxeter_todd(),
        "bw16" => crate::leech::barnes_wall_16(),
        "leech" => crate::leech::leech().lattice,
        _ => return Err(LatticeError::InvalidConstruction),
    };
    Ok(NamedLattice {
        name: String::from(name),
        certificate: certificate(&lattice),
        lattice,
    })
}

/// All atlas entries cheap enough for blanket property sweeps (everything
/// except the rank-24 Leech lattice).
pub fn sweep_names() -> Vec<String> {
    NAMES
        .iter()
        .filter(|n| **n != "leech")
        .map(|n| format!("{}", n))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn root_lattice_certificates() {
        let e8 = root_lattice(RootKind::E, 8).unwrap();
        assert_eq!(e8.rank(), 8);
        assert_eq!(e8.determinant(), br(1));
        assert!(e8.is_even());
        assert_eq!(shortvec::count_norm(&e8, &br(2)), 240);

        let e7 = root_lattice(RootKind::E, 7).unwrap();
        assert_eq!(e7.determinant(), br(2));
        assert_eq!(shortvec::count_norm(&e7, &br(2)), 126);

        let e6 = root_lattice(RootKind::E, 6).unwrap();
        assert_eq!(e6.determinant(), br(3));
        assert_eq!(shortvec::count_norm(&e6, &br(2)), 72);

        let d4 = root_lattice(RootKind::D, 4).unwrap();
        assert_eq!(d4.determinant(), br(4));
        assert_eq!(shortvec::count_norm(&d4, &br(2)), 24);

        let a4 = root_lattice(RootKind::A, 4).unwrap();
        assert_eq!(a4.determinant(), br(5));
        assert_eq!(shortvec::count_norm(&a4, &br(2)), 20);
    }

    #[test]
    fn invalid_names_rejected() {
        assert!(root_lattice(RootKind::E, 5).is_err());
        assert!(root_lattice(RootKind::A, 0).is_err());
        assert!(by_name("zz9").is_err());
    }

    #[test]
    fn scaled_families() {
        let ee8 = scaled(RootKind::E, 8).unwrap();
        assert!(ee8.is_even());
        assert_eq!(ee8.determinant(), br(256));
        assert_eq!(even_min_norm(&ee8).unwrap(), br(4));
        assert_eq!(shortvec::count_norm(&ee8, &br(4)), 240);

        let aa2 = scaled(RootKind::A, 2).unwrap();
        assert_eq!(aa2.discriminant_group().unwrap(), vec![bi(2), bi(6)]);

        let aa1 = scaled(RootKind::A, 1).unwrap();
        assert_eq!(aa1.rank(), 1);
        assert_eq!(aa1.determinant(), br(4));
    }

    #[test]
    fn half_spin_certificates() {
        let hs16 = half_spin(16).unwrap();
        assert!(hs16.is_even());
        assert_eq!(hs16.determinant(), br(1));

        // HS8 has the E8 invariants.
        let hs8 = half_spin(8).unwrap();
        assert_eq!(hs8.determinant(), br(1));
        assert!(hs8.is_even());
        assert_eq!(shortvec::count_norm(&hs8, &br(2)), 240);

        // |HS_n : D_n| = 2 (doubled coordinates for D_n here).
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        let mut first = vec![bi(0); 16];
        first[0] = bi(2);
        first[1] = bi(2);
        rows.push(first);
        for i in 0..15 {
            let mut v = vec![bi(0); 16];
            v[i] = bi(2);
            v[i + 1] = bi(-2);
            rows.push(v);
        }
        let d16 = Lattice::from_int_generators(
            Form::scaled_identity(16, brf(1, 4)),
            IntMatrix::from_rows(rows),
        );
        assert_eq!(hs16.index_of(&d16).unwrap(), bi(2));
    }

    #[test]
    fn a4_1_certificate() {
        let x = a4_1();
        assert!(shortvec::is_rootless(&x).unwrap());
        assert_eq!(shortvec::count_norm(&x, &br(4)), 10);
        assert_eq!(
            x.discriminant_group().unwrap(),
            vec![bi(1), bi(5), bi(5), bi(5)]
        );
    }

    #[test]
    fn m_4_25_certificate() {
        let l = m_4_25();
        assert!(l.is_even());
        assert_eq!(l.determinant(), br(25));
        let roots = shortvec::vectors_of_norm(&l, &br(2));
        assert_eq!(roots.count(), 6);
        // The roots form an A2 system: no orthogonal pair.
        for u in &roots.vectors {
            for v in &roots.vectors {
                if u == v {
                    continue;
                }
                let uu = l.vector(u);
                let vv = l.vector(v);
                let ip = l.form().inner(&uu, &vv);
                assert!(!ip.is_zero(), "orthogonal pair of roots found");
            }
        }
        assert_eq!(shortvec::count_norm(&l, &br(4)), 18);
    }

    #[test]
    fn two_m_4_25_glue_to_e8() {
        let e = super::glue_two_m425();
        assert_eq!(e.rank(), 8);
        assert!(e.is_even());
        assert_eq!(e.determinant(), br(1));
    }

    #[test]
    fn tensor_products() {
        let a2 = root_lattice(RootKind::A, 2).unwrap();
        let t = tensor(&a2, &a2);
        assert_eq!(t.determinant(), br(81));

        let z1 = Lattice::from_int_basis(Form::identity(1), IntMatrix::identity(1));
        let tb = tensor(&z1, &a2);
        assert_eq!(tb.gram(), a2.gram());

        // Determinant law det(A⊗B) = det A^rk B * det B^rk A on random pairs.
        let mut rng = crate::SplitMix64::new(8);
        for _ in 0..20 {
            let na = 1 + rng.below(3) as usize;
            let a = random_pd(&mut rng, na);
            let nb = 1 + rng.below(3) as usize;
            let b = random_pd(&mut rng, nb);
            let t = tensor(&a, &b);
            let mut expect = BigRational::one();
            for _ in 0..b.rank() {
                expect *= a.determinant();
            }
            for _ in 0..a.rank() {
                expect *= b.determinant();
            }
            assert_eq!(t.determinant(), expect);
        }
    }

    fn random_pd(rng: &mut crate::SplitMix64, n: usize) -> Lattice {
        loop {
            let m = IntMatrix::from_rows(
                (0..n)
                    .map(|_| (0..n).map(|_| bi(rng.small_int(2))).collect())
                    .collect(),
            );
            if !crate::exactmat::det_int(&m).is_zero() {
                return Lattice::from_int_basis(Form::identity(n), m);
            }
        }
    }

    #[test]
    fn a2_rotation_annihilator_of_root() {
        // The order-3 rotation of A2 is the coordinate 3-cycle of the
        // zero-sum model; ann_{A2}(x) = Z(xg - xg^2) of norm 6.
        let a2 = root_lattice(RootKind::A, 2).unwrap();
        let g = Isometry::new(
            Form::identity(3),
            IntMatrix::from_i64_rows(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]).to_rational(),
        )
        .unwrap();
        assert_eq!(order_of(&g, 5), Some(3));
        let roots = shortvec::vectors_of_norm(&a2, &br(2));
        for x in &roots.vectors {
            let xv = a2.vector(x);
            let xg = g.apply(&xv);
            let xg2 = g.apply(&xg);
            let w: Vec<BigRational> = xg.iter().zip(&xg2).map(|(a, b)| a - b).collect();
            assert_eq!(a2.form().norm(&w), br(6));
            let xl = Lattice::from_rational_generators(
                Form::identity(3),
                RatMatrix::from_rows(vec![xv]),
            );
            let ann = a2.annihilator(&xl).unwrap();
            assert_eq!(ann.rank(), 1);
            assert!(ann.contains_vector(&w));
            let wl =
                Lattice::from_rational_generators(Form::identity(3), RatMatrix::from_rows(vec![w]));
            assert!(ann.eq_lattice(&wl));
        }
    }

    #[test]
    fn ssd_examples_in_e8_and_dual_a2_minimum() {
        // The SSD sublattices of E8 are unscaled: D4 has a 2-elementary
        // discriminant group, its doubled copy does not.
        let d4 = root_lattice(RootKind::D, 4).unwrap();
        assert!(crate::involution::is_ssd(&d4).unwrap());
        let two_dual = d4.dual().scaled_copy(&bi(2));
        assert!(d4.contains(&two_dual).unwrap());
        let dd4 = scaled(RootKind::D, 4).unwrap();
        assert!(!crate::involution::is_ssd(&dd4).unwrap());
        let two_dual = dd4.dual().scaled_copy(&bi(2));
        assert!(!dd4.contains(&two_dual).unwrap());
        // dual(A2) has minimum norm 2/3.
        let a2 = root_lattice(RootKind::A, 2).unwrap();
        assert_eq!(shortvec::min_norm(&a2.dual()).unwrap(), brf(2, 3));
    }

    #[test]
    fn dih4_15_projection_norms() {
        // The glue vector alpha/2 + xi splits as a norm-1 projection onto
        // span(F) and a norm-3 deep-hole part, so every vector outside the
        // orthogonal base has norm at least 4.
        let (m, _, l) = dih4_15();
        let f_basis = IntMatrix::from_rows(vec![{
            let mut v = vec![bi(0); 17];
            v[0] = bi(1);
            v
        }]);
        let f = Lattice::from_int_basis(l.form().clone(), f_basis);
        let mut glue = vec![BigRational::zero(); 17];
        glue[0] = brf(1, 2);
        for (i, &x) in [1i64, 1, 1, 1, 1, 1, -3, -3].iter().enumerate() {
            glue[1 + i] = brf(x, 2);
        }
        assert!(m.contains_vector(&glue));
        let onto_f = Lattice::project_onto(&glue, &f);
        assert_eq!(l.form().norm(&onto_f), br(1));
        let residual: Vec<BigRational> = glue.iter().zip(&onto_f).map(|(a, b)| a - b).collect();
        assert_eq!(l.form().norm(&residual), br(3));
        assert_eq!(atlas_min(&l), br(4));
    }

    fn atlas_min(l: &Lattice) -> BigRational {
        even_min_norm(l).unwrap()
    }

    #[test]
    fn tensor_embedding_on_a2() {
        // A = one root line of A2 under the rotation: A + Ag ≅ A ⊗ B.
        let a2 = root_lattice(RootKind::A, 2).unwrap();
        let g = Isometry::new(
            Form::identity(3),
            IntMatrix::from_i64_rows(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]).to_rational(),
        )
        .unwrap();
        let a =
            Lattice::from_int_basis(Form::identity(3), IntMatrix::from_i64_rows(&[&[1, -1, 0]]));
        assert!(tensor_embedding_check(&a, &g).unwrap());
        let _ = a2;
    }
}

/// Glues two orthogonal copies of `M(4,25)` into a unimodular even rank-8
/// lattice, following the norm-(2,4,10,20) frame recipe.
///
/// The glue vectors are `(w + x + x')/5` and `(x ± w' ± x')/5`; the frame
/// search fixes an arbitrary orientation per copy, so the compatible signs
/// for the second vector are found by trying the four choices (the frame
/// transitivity of the isometry group guarantees one works).
pub fn glue_two_m425() -> Lattice {
    let m = m_4_25();
    // Orthogonal frame u, v, w, x of norms 2, 4, 10, 20.
    let frame = orthogonal_frame(&m, &[2, 4, 10, 20]);
    let two = m.orthogonal_sum(&m);
    let total = two.ambient_dim();
    let off = m.ambient_dim();
    let w1 = Lattice::pad_vector(&frame[2], 0, total);
    let x1 = Lattice::pad_vector(&frame[3], 0, total);
    let w2 = Lattice::pad_vector(&frame[2], off, total);
    let x2 = Lattice::pad_vector(&frame[3], off, total);
    let fifth = brf(1, 5);
    let gamma: Vec<BigRational> = (0..total)
        .map(|i| (&w1[i] + &x1[i] + &x2[i]) * &fifth)
        .collect();
    for b in [1i64, -1] {
        for c in [1i64, -1] {
            for d in [1i64, -1] {
                let gamma_p: Vec<BigRational> = (0..total)
                    .map(|i| (&x1[i] * br(b) + &w2[i] * br(c) + &x2[i] * br(d)) * &fifth)
                    .collect();
                if two.form().inner(&gamma, &gamma_p).is_integer() {
                    let glued = two
                        .glue(&[GlueVector(gamma.clone()), GlueVector(gamma_p)])
                        .expect("commensurable glue");
                    if glued.even && glued.lattice.determinant() == br(1) {
                        return glued.lattice;
                    }
                }
            }
        }
    }
    panic!("no sign orientation glues the two copies to a unimodular lattice");
}

/// Finds pairwise orthogonal vectors of the prescribed norms by greedy
/// search over the exact norm slices (deterministic: slices are sorted).
fn orthogonal_frame(l: &Lattice, norms: &[i64]) -> Vec<Vec<BigRational>> {
    let mut found: Vec<Vec<BigRational>> = Vec::new();
    'outer: for &n in norms {
        let slice = shortvec::vectors_of_norm(l, &br(n));
        'cand: for cand in &slice.vectors {
            let v = l.vector(cand);
            for prev in &found {
                if !l.form().inner(&v, prev).is_zero() {
                    continue 'cand;
                }
            }
            found.push(v);
            continue 'outer;
        }
        panic!("no vector of norm {} orthogonal to the current frame", n);
    }
    found
}
