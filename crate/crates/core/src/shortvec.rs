//! Short-vector machinery: exact LLL reduction, complete enumeration of
//! vectors by norm, minimum computation, rootlessness, and the Hermite
//! bound.
//!
//! Enumeration is Schnorr–Euchner over an exact rational Gram–Schmidt
//! decomposition.  Every bound comparison and every acceptance test is an
//! exact rational comparison; floating point never decides anything here.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exactmat::{IntMatrix, RatMatrix};
use crate::lattice::{Lattice, LatticeError};

/// All lattice vectors of one fixed norm, in coordinates of the queried
/// lattice's own stored basis.  Closed under negation, sorted
/// lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormSlice {
    pub norm: BigRational,
    pub vectors: Vec<Vec<BigInt>>,
}

impl NormSlice {
    pub fn count(&self) -> usize {
        self.vectors.len()
    }
}

/// Exact Gram–Schmidt data of a basis Gram matrix: `mu` strictly lower
/// triangular, `b_star` the squared lengths of the orthogonalized vectors.
struct GramSchmidt {
    mu: Vec<Vec<BigRational>>,
    b_star: Vec<BigRational>,
}

fn gs_row(
    gram: &RatMatrix,
    mu: &[Vec<BigRational>],
    b_star: &[BigRational],
    r: usize,
) -> (Vec<BigRational>, BigRational) {
    let mut row = vec![BigRational::zero(); r];
    for j in 0..r {
        let mut v = gram.at(r, j).clone();
        for l in 0..j {
            v -= &row[l] * &mu[j][l] * &b_star[l];
        }
        row[j] = v / &b_star[j];
    }
    let mut b = gram.at(r, r).clone();
    for l in 0..r {
        b -= &row[l] * &row[l] * &b_star[l];
    }
    (row, b)
}

fn gram_schmidt(gram: &RatMatrix) -> GramSchmidt {
    let k = gram.rows();
    let mut mu: Vec<Vec<BigRational>> = Vec::with_capacity(k);
    let mut b_star: Vec<BigRational> = Vec::with_capacity(k);
    for r in 0..k {
        let (row, b) = gs_row(gram, &mu, &b_star, r);
        assert!(b.is_positive(), "form is not positive definite");
        mu.push(row);
        b_star.push(b);
    }
    GramSchmidt { mu, b_star }
}

fn round_nearest(x: &BigRational) -> BigInt {
    // floor(x + 1/2)
    (x + BigRational::new(BigInt::one(), BigInt::from(2)))
        .floor()
        .to_integer()
}

/// LLL (delta = 3/4) on a Gram matrix; returns the unimodular transform
/// `T` such that `T * gram * T^T` is reduced, along with that reduced Gram.
pub fn lll_transform(gram: &RatMatrix) -> (IntMatrix, RatMatrix) {
    let k = gram.rows();
    let mut g = gram.clone();
    let mut t = IntMatrix::identity(k);
    if k < 2 {
        return (t, g);
    }
    let delta = BigRational::new(BigInt::from(3), BigInt::from(4));

    let mut mu: Vec<Vec<BigRational>> = Vec::new();
    let mut b_star: Vec<BigRational> = Vec::new();
    let mut valid = 0usize; // rows [0, valid) of mu/b_star are current

    fn ensure(
        g: &RatMatrix,
        mu: &mut Vec<Vec<BigRational>>,
        b_star: &mut Vec<BigRational>,
        valid: &mut usize,
        upto: usize,
    ) {
        while *valid <= upto {
            let (row, b) = gs_row(g, mu, b_star, *valid);
            assert!(b.is_positive(), "form is not positive definite");
            if mu.len() > *valid {
                mu[*valid] = row;
                b_star[*valid] = b;
            } else {
                mu.push(row);
                b_star.push(b);
            }
            *valid += 1;
        }
    }

    let mut i = 1usize;
    while i < k {
        ensure(&g, &mut mu, &mut b_star, &mut valid, i);
        // Size-reduce row i against rows i-1 .. 0.
        for j in (0..i).rev() {
            let q = round_nearest(&mu[i][j]);
            if q.is_zero() {
                continue;
            }
            // b_i <- b_i - q b_j
            row_op(&mut t, i, j, &q);
            gram_row_op(&mut g, i, j, &q);
            let qr = BigRational::from_integer(q);
            for l in 0..j {
                let v = &mu[i][l] - &qr * &mu[j][l];
                mu[i][l] = v;
            }
            let v = &mu[i][j] - &qr;
            mu[i][j] = v;
        }
        // Lovász condition.
        let lhs = &b_star[i];
        let rhs = (&delta - &mu[i][i - 1] * &mu[i][i - 1]) * &b_star[i - 1];
        if *lhs >= rhs {
            i += 1;
        } else {
            swap_basis_rows(&mut t, &mut g, i - 1, i);
            valid = i - 1;
            i = if i > 1 { i - 1 } else { 1 };
        }
    }
    (t, g)
}

fn row_op(t: &mut IntMatrix, i: usize, j: usize, q: &BigInt) {
    for c in 0..t.cols() {
        let v = t.at(i, c) - q * t.at(j, c);
        *t.at_mut(i, c) = v;
    }
}

fn gram_row_op(g: &mut RatMatrix, i: usize, j: usize, q: &BigInt) {
    let qr = BigRational::from_integer(q.clone());
    let n = g.rows();
    for c in 0..n {
        let v = g.at(i, c) - &qr * g.at(j, c);
        *g.at_mut(i, c) = v;
    }
    for r in 0..n {
        let v = g.at(r, i) - &qr * g.at(r, j);
        *g.at_mut(r, i) = v;
    }
}

fn swap_basis_rows(t: &mut IntMatrix, g: &mut RatMatrix, a: usize, b: usize) {
    for c in 0..t.cols() {
        let tmp = t.at(a, c).clone();
        *t.at_mut(a, c) = t.at(b, c).clone();
        *t.at_mut(b, c) = tmp;
    }
    let n = g.rows();
    for c in 0..n {
        let tmp = g.at(a, c).clone();
        *g.at_mut(a, c) = g.at(b, c).clone();
        *g.at_mut(b, c) = tmp;
    }
    for r in 0..n {
        let tmp = g.at(r, a).clone();
        *g.at_mut(r, a) = g.at(r, b).clone();
        *g.at_mut(r, b) = tmp;
    }
}

/// LLL-reduces the stored basis; the returned lattice is the same subgroup
/// (HNF-equal) with a reduced working basis.
pub fn lll_reduce(l: &Lattice) -> Lattice {
    if l.rank() < 2 {
        return l.clone();
    }
    let (t, _) = lll_transform(l.gram());
    let (num, den) = l.scaled_basis();
    Lattice::with_basis_unchecked(l.form().clone(), t.mul(num), den.clone())
}

enum Search {
    /// Collect every solution of exact norm `target`.
    Collect,
    /// Stop at the first solution of exact norm `target`.
    Exists,
    /// Track the smallest nonzero norm found, shrinking the bound.
    Minimum,
}

struct Enumerator<'a> {
    gs: &'a GramSchmidt,
    /// Rational offset per coordinate (zero for plain short vectors).
    offset: Option<&'a [BigRational]>,
    bound: BigRational,
    target: BigRational,
    mode: Search,
    found: Vec<Vec<i64>>,
    hit: bool,
    best: Option<BigRational>,
}

impl<'a> Enumerator<'a> {
    /// Depth-first Schnorr–Euchner descent.  `level` runs from k-1 down to
    /// -1 (leaf); `x` holds chosen coefficients; `partial` is the norm
    /// contribution of levels above `level`.
    fn descend(&mut self, level: isize, x: &mut [i64], partial: BigRational, zero_above: bool) {
        if level < 0 {
            self.leaf(x, partial);
            return;
        }
        let i = level as usize;
        // Center offset: c = sum_{t>i} mu[t][i] * (x_t + w_t) + w_i.
        let mut c = BigRational::zero();
        for t in i + 1..self.gs.mu.len() {
            let mut xt = BigRational::from_integer(BigInt::from(x[t]));
            if let Some(w) = self.offset {
                xt += &w[t];
            }
            if !xt.is_zero() {
                c += &self.gs.mu[t][i] * xt;
            }
        }
        if let Some(w) = self.offset {
            c += &w[i];
        }

        let symmetric_half = zero_above && self.offset.is_none();
        let start = if symmetric_half {
            BigInt::zero()
        } else {
            round_nearest(&(-&c))
        };

        // Walk outward from the center while the partial norm fits; the
        // contribution is unimodal in x_i, so each direction stops at the
        // first failure.
        for dir in 0..2 {
            let mut step = if dir == 0 {
                BigInt::zero()
            } else {
                -BigInt::one()
            };
            loop {
                let xi = &start + &step;
                if symmetric_half && xi.is_negative() {
                    break;
                }
                let xi_r = BigRational::from_integer(xi.clone()) + &c;
                let contrib = &self.gs.b_star[i] * &xi_r * &xi_r;
                let total = &partial + &contrib;
                if total > self.bound {
                    break;
                }
                x[i] = xi.to_i64().expect("coefficient fits i64");
                let zero_here = zero_above && xi.is_zero();
                self.descend(level - 1, x, total, zero_here);
                if self.hit {
                    return;
                }
                if dir == 0 {
                    step += 1;
                } else {
                    step -= 1;
                }
            }
        }
        x[i] = 0;
    }

    fn leaf(&mut self, x: &[i64], norm: BigRational) {
        let nonzero = x.iter().any(|&v| v != 0) || self.offset.is_some();
        if !nonzero {
            return;
        }
        match self.mode {
            Search::Collect => {
                if norm == self.target {
                    self.found.push(x.to_vec());
                }
            }
            Search::Exists => {
                if norm == self.target {
                    self.hit = true;
                }
            }
            Search::Minimum => {
                if norm.is_zero() {
                    return; // offset landed exactly on a lattice point
                }
                match &self.best {
                    Some(b) if &norm >= b => {}
                    _ => {
                        self.best = Some(norm.clone());
                        self.bound = norm;
                    }
                }
            }
        }
    }
}

fn prepared(l: &Lattice) -> (IntMatrix, GramSchmidt) {
    let (t, g) = lll_transform(l.gram());
    let gs = gram_schmidt(&g);
    (t, gs)
}

/// Complete list of lattice vectors of exact norm `n`, in coordinates of
/// the stored basis of `l`.  For `n = 0` the list is empty (the zero
/// vector is not listed).
pub fn vectors_of_norm(l: &Lattice, n: &BigRational) -> NormSlice {
    assert!(!n.is_negative(), "norm must be nonnegative");
    if l.rank() == 0 || n.is_zero() {
        return NormSlice {
            norm: n.clone(),
            vectors: Vec::new(),
        };
    }
    let (t, gs) = prepared(l);
    let k = l.rank();
    let mut e = Enumerator {
        gs: &gs,
        offset: None,
        bound: n.clone(),
        target: n.clone(),
        mode: Search::Collect,
        found: Vec::new(),
        hit: false,
        best: None,
    };
    let mut x = vec![0i64; k];
    e.descend(k as isize - 1, &mut x, BigRational::zero(), true);

    let mut vectors: Vec<Vec<BigInt>> = Vec::with_capacity(2 * e.found.len());
    for half in e.found {
        // Convert from reduced-basis coordinates to stored-basis ones.
        let mut v = vec![BigInt::zero(); k];
        for (i, &xi) in half.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            let xi = BigInt::from(xi);
            for (c, vc) in v.iter_mut().enumerate() {
                *vc += &xi * t.at(i, c);
            }
        }
        let neg: Vec<BigInt> = v.iter().map(|e| -e.clone()).collect();
        vectors.push(v);
        vectors.push(neg);
    }
    vectors.sort();
    NormSlice {
        norm: n.clone(),
        vectors,
    }
}

pub fn count_norm(l: &Lattice, n: &BigRational) -> usize {
    vectors_of_norm(l, n).count()
}

/// Does any lattice vector of exact norm `n` exist?  Early-exits at the
/// first witness, so this is much cheaper than counting.
pub fn count_norm_exists(l: &Lattice, n: &BigRational) -> bool {
    if l.rank() == 0 || !n.is_positive() {
        return false;
    }
    let (_, gs) = prepared(l);
    let k = l.rank();
    let mut e = Enumerator {
        gs: &gs,
        offset: None,
        bound: n.clone(),
        target: n.clone(),
        mode: Search::Exists,
        found: Vec::new(),
        hit: false,
        best: None,
    };
    let mut x = vec![0i64; k];
    e.descend(k as isize - 1, &mut x, BigRational::zero(), true);
    e.hit
}

/// Exact minimum norm over nonzero vectors.
pub fn min_norm(l: &Lattice) -> Result<BigRational, LatticeError> {
    if l.rank() == 0 {
        return Err(LatticeError::ZeroRank);
    }
    let (_, gs) = prepared(l);
    let k = gs.b_star.len();
    // The first reduced basis vector gives an attained upper bound.
    let start = gs.b_star[0].clone();
    let mut e = Enumerator {
        gs: &gs,
        offset: None,
        bound: start.clone(),
        target: BigRational::zero(),
        mode: Search::Minimum,
        found: Vec::new(),
        hit: false,
        best: Some(start),
    };
    let mut x = vec![0i64; k];
    e.descend(k as isize - 1, &mut x, BigRational::zero(), true);
    Ok(e.best.expect("nonzero lattice has a minimum"))
}

/// Does the coset `w + L` (offset `w` in stored-basis coordinates) contain
/// a vector of exact norm `n`?
pub fn coset_has_norm(l: &Lattice, w: &[BigRational], n: &BigRational) -> bool {
    assert_eq!(w.len(), l.rank());
    if l.rank() == 0 {
        return false;
    }
    let (t, gs) = prepared(l);
    // Re-express the offset in the reduced basis: reduced = t * stored, so
    // stored-basis coordinates w become w * t^{-1}.
    let t_inv = t.to_rational().inverse().expect("unimodular transform");
    let mut w_red = vec![BigRational::zero(); w.len()];
    for (j, slot) in w_red.iter_mut().enumerate() {
        for (i, wi) in w.iter().enumerate() {
            if !wi.is_zero() {
                *slot += wi * t_inv.at(i, j);
            }
        }
    }
    let k = l.rank();
    let mut e = Enumerator {
        gs: &gs,
        offset: Some(&w_red),
        bound: n.clone(),
        target: n.clone(),
        mode: Search::Exists,
        found: Vec::new(),
        hit: false,
        best: None,
    };
    let mut x = vec![0i64; k];
    e.descend(k as isize - 1, &mut x, BigRational::zero(), false);
    e.hit
}

/// `true` iff the integral lattice has no vectors of norm 2.
pub fn is_rootless(l: &Lattice) -> Result<bool, LatticeError> {
    if !l.is_integral() {
        return Err(LatticeError::NotIntegral);
    }
    if l.rank() == 0 {
        return Ok(true);
    }
    let two = BigRational::from_integer(BigInt::from(2));
    Ok(count_norm(l, &two) == 0)
}

/// Hermite function `H(n, d) = (4/3)^((n-1)/2) * d^(1/n)` as a float.
pub fn hermite(n: usize, d: f64) -> f64 {
    assert!(n >= 1 && d > 0.0);
    let base = libm::pow(4.0 / 3.0, (n as f64 - 1.0) / 2.0);
    base * libm::pow(d, 1.0 / (n as f64))
}

/// Exact rational witness of the Hermite bound: `min_norm(L)^n <= B` with
/// `B = (4/3)^(n(n-1)/2) * det(L)` is equivalent to
/// `min_norm(L) <= H(n, det L)`.
pub fn hermite_guarantee(l: &Lattice) -> Result<BigRational, LatticeError> {
    if l.rank() == 0 {
        return Err(LatticeError::ZeroRank);
    }
    let n = l.rank();
    let four_thirds = BigRational::new(BigInt::from(4), BigInt::from(3));
    let mut b = l.determinant();
    for _ in 0..n * (n - 1) / 2 {
        b *= &four_thirds;
    }
    Ok(b)
}

/// Checks `min_norm(L) <= H(rank, det)` exactly.
pub fn hermite_holds(l: &Lattice) -> Result<bool, LatticeError> {
    let b = hermite_guarantee(l)?;
    let m = min_norm(l)?;
    let mut pow = BigRational::one();
    for _ in 0..l.rank() {
        pow *= &m;
    }
    Ok(pow <= b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Form;
    use crate::SplitMix64;

    fn br(x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }

    fn a2() -> Lattice {
        Lattice::from_int_basis(
            Form::identity(3),
            IntMatrix::from_i64_rows(&[&[1, -1, 0], &[0, 1, -1]]),
        )
    }

    #[test]
    fn a2_roots() {
        let l = a2();
        let roots = vectors_of_norm(&l, &br(2));
        assert_eq!(roots.count(), 6);
        for v in &roots.vectors {
            let neg: Vec<BigInt> = v.iter().map(|e| -e.clone()).collect();
            assert!(roots.vectors.contains(&neg));
        }
        assert_eq!(min_norm(&l).unwrap(), br(2));
        assert!(!is_rootless(&l).unwrap());
    }

    #[test]
    fn scrambled_a2_still_min_two() {
        // A unimodular scramble of the A2 basis: same lattice.
        let l = Lattice::from_int_basis(
            Form::identity(3),
            IntMatrix::from_i64_rows(&[&[7, -12, 5], &[4, -7, 3]]),
        );
        let red = lll_reduce(&l);
        assert!(red.eq_lattice(&l));
        assert_eq!(red.gram().at(0, 0), &br(2));
        assert_eq!(min_norm(&l).unwrap(), br(2));
    }

    #[test]
    fn lll_rank_one_unchanged() {
        let l = Lattice::from_int_basis(Form::identity(2), IntMatrix::from_i64_rows(&[&[3, 4]]));
        assert!(lll_reduce(&l).eq_lattice(&l));
    }

    #[test]
    fn zn_min_norm() {
        let l = Lattice::from_int_basis(Form::identity(1), IntMatrix::identity(1));
        assert_eq!(min_norm(&l).unwrap(), br(1));
        assert_eq!(count_norm(&l, &br(1)), 2);
        assert_eq!(count_norm(&l, &br(4)), 2);
        assert_eq!(count_norm(&l, &br(3)), 0);
    }

    #[test]
    fn brute_force_oracle_small_lattices() {
        // Completeness: compare against box enumeration on random small
        // lattices; the two smallest realized norms are certainly complete
        // within the box.
        let mut rng = SplitMix64::new(42);
        for _ in 0..10 {
            let n = 2 + rng.below(3) as usize;
            let l = random_pd_lattice(&mut rng, n);
            let mut by_norm: alloc::collections::BTreeMap<BigRational, Vec<Vec<BigInt>>> =
                alloc::collections::BTreeMap::new();
            let mut c = vec![-6i64; n];
            loop {
                if c.iter().any(|&x| x != 0) {
                    let coeffs: Vec<BigInt> = c.iter().map(|&x| BigInt::from(x)).collect();
                    let v = l.vector(&coeffs);
                    let norm = l.form().norm(&v);
                    by_norm.entry(norm).or_default().push(coeffs);
                }
                let mut i = 0;
                loop {
                    if i == n {
                        break;
                    }
                    c[i] += 1;
                    if c[i] <= 6 {
                        break;
                    }
                    c[i] = -6;
                    i += 1;
                }
                if i == n {
                    break;
                }
            }
            let norms: Vec<BigRational> = by_norm.keys().take(2).cloned().collect();
            for norm in norms {
                let ours = vectors_of_norm(&l, &norm);
                let mut brute = by_norm.remove(&norm).unwrap();
                brute.sort();
                brute.dedup();
                assert_eq!(ours.vectors, brute, "complete at norm {}", norm);
            }
        }
    }

    fn random_pd_lattice(rng: &mut SplitMix64, n: usize) -> Lattice {
        loop {
            let m = IntMatrix::from_rows(
                (0..n)
                    .map(|_| (0..n).map(|_| BigInt::from(rng.small_int(2))).collect())
                    .collect(),
            );
            if !crate::exactmat::det_int(&m).is_zero() {
                return Lattice::from_int_basis(Form::identity(n), m);
            }
        }
    }

    #[test]
    fn determinism() {
        let l = a2();
        let a = vectors_of_norm(&l, &br(6));
        let b = vectors_of_norm(&l, &br(6));
        assert_eq!(a, b);
        assert_eq!(a.count(), 6);
    }

    #[test]
    fn hermite_values() {
        assert!((hermite(2, 3.0) - 2.0).abs() < 1e-12);
        assert!((hermite(4, 25.0) - 3.442651865).abs() < 5e-9);
        assert!((hermite(1, 1.0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn hermite_guarantee_on_small_lattices() {
        let mut rng = SplitMix64::new(77);
        for _ in 0..10 {
            let l = random_pd_lattice(&mut rng, 3);
            assert!(hermite_holds(&l).unwrap());
        }
        assert!(hermite_holds(&a2()).unwrap());
    }

    #[test]
    fn coset_search_finds_known_vector() {
        // Vectors of (1/2, 0) + Z^2 have norms (1/2 + a)^2 + b^2.
        let l = Lattice::from_int_basis(Form::identity(2), IntMatrix::identity(2));
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        assert!(coset_has_norm(
            &l,
            &[half.clone(), BigRational::zero()],
            &BigRational::new(BigInt::one(), BigInt::from(4))
        ));
        assert!(!coset_has_norm(
            &l,
            &[half.clone(), BigRational::zero()],
            &BigRational::new(BigInt::one(), BigInt::from(2))
        ));
        assert!(coset_has_norm(
            &l,
            &[half, BigRational::zero()],
            &BigRational::new(BigInt::from(5), BigInt::from(4))
        ));
    }
}
