//! Exact integer and rational matrices with the normal forms every lattice
//! operation is built on.
//!
//! All matrices are dense and row-major.  Entries are arbitrary precision
//! ([`BigInt`] / [`BigRational`]); nothing here ever rounds.  The inputs this
//! crate cares about are at most 24×24, so the algorithms favour simplicity
//! and predictable exactness over asymptotics: fraction-free Bareiss for
//! determinants, pivot-minimizing elimination for the Smith form.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  [")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut BigInt {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<BigInt> {
        self.row(r).to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *t.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if !b.is_zero() {
                        *out.at_mut(r, c) += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, s: &BigInt) -> IntMatrix {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e *= s;
        }
        out
    }

    pub fn stack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.cols, "column mismatch");
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        IntMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn submatrix_rows(&self, lo: usize, hi: usize) -> IntMatrix {
        IntMatrix {
            rows: hi - lo,
            cols: self.cols,
            entries: self.entries[lo * self.cols..hi * self.cols].to_vec(),
        }
    }

    /// Drop all-zero rows (used after HNF).
    pub fn without_zero_rows(&self) -> IntMatrix {
        let rows: Vec<Vec<BigInt>> = (0..self.rows)
            .filter(|&r| self.row(r).iter().any(|e| !e.is_zero()))
            .map(|r| self.row_vec(r))
            .collect();
        if rows.is_empty() {
            IntMatrix::zero(0, self.cols)
        } else {
            IntMatrix::from_rows(rows)
        }
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|e| BigRational::from_integer(e.clone()))
                .collect(),
        }
    }

    /// gcd of all entries; zero for the zero matrix.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for e in &self.entries {
            g = g.gcd(e);
        }
        g
    }
}

/// Dense rational matrix, row-major, entries always in lowest terms
/// (guaranteed by `BigRational`).
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  [")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = BigRational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &BigRational {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut BigRational {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[BigRational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *t.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = RatMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if !b.is_zero() {
                        let prod = a * b;
                        let cur = out.at(r, c) + prod;
                        *out.at_mut(r, c) = cur;
                    }
                }
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for r in 0..self.rows {
            for c in 0..r {
                if self.at(r, c) != self.at(c, r) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|e| e.is_integer())
    }

    /// Least common multiple of entry denominators (1 for the empty matrix).
    pub fn denominator_lcm(&self) -> BigInt {
        let mut l = BigInt::one();
        for e in &self.entries {
            l = l.lcm(e.denom());
        }
        l
    }

    /// Writes the matrix as `(1/d) * N` with `N` integral.
    pub fn clear_denominators(&self) -> (IntMatrix, BigInt) {
        let d = self.denominator_lcm();
        let entries = self
            .entries
            .iter()
            .map(|e| e.numer() * (&d / e.denom()))
            .collect();
        (
            IntMatrix {
                rows: self.rows,
                cols: self.cols,
                entries,
            },
            d,
        )
    }

    pub fn to_integer(&self) -> Option<IntMatrix> {
        if !self.is_integral() {
            return None;
        }
        Some(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.numer().clone()).collect(),
        })
    }

    /// Inverse of a square nonsingular matrix via Gauss–Jordan.
    pub fn inverse(&self) -> Option<RatMatrix> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = RatMatrix::identity(n);
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| !a.at(r, col).is_zero())?;
            if pivot_row != col {
                for c in 0..n {
                    let tmp = a.at(pivot_row, c).clone();
                    *a.at_mut(pivot_row, c) = a.at(col, c).clone();
                    *a.at_mut(col, c) = tmp;
                    let tmp = inv.at(pivot_row, c).clone();
                    *inv.at_mut(pivot_row, c) = inv.at(col, c).clone();
                    *inv.at_mut(col, c) = tmp;
                }
            }
            let p = a.at(col, col).clone();
            for c in 0..n {
                let v = a.at(col, c) / &p;
                *a.at_mut(col, c) = v;
                let v = inv.at(col, c) / &p;
                *inv.at_mut(col, c) = v;
            }
            for r in 0..n {
                if r == col || a.at(r, col).is_zero() {
                    continue;
                }
                let f = a.at(r, col).clone();
                for c in 0..n {
                    let v = a.at(r, c) - &f * a.at(col, c);
                    *a.at_mut(r, c) = v;
                    let v = inv.at(r, c) - &f * inv.at(col, c);
                    *inv.at_mut(r, c) = v;
                }
            }
        }
        Some(inv)
    }
}

/// Smith normal form `U * A * V = S` with `U`, `V` unimodular and `S`
/// diagonal, the diagonal entries forming a divisibility chain.
///
/// `divisors` lists the nonzero diagonal entries `d_1 | d_2 | ... | d_r`
/// (all positive); `r` is the rank of `A`.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub divisors: Vec<BigInt>,
}

/// Row-style Hermite normal form `H = U * A`.
///
/// Convention (fixed so that lattice equality is plain matrix equality):
/// nonzero rows first; the pivot of a row is its *rightmost* nonzero entry;
/// pivot columns strictly increase down the rows; pivots are positive; in a
/// pivot's column every entry in the rows *below* lies in `[0, pivot)`.
/// Equivalently this is the lower-triangular HNF.
pub fn hnf(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let rows = a.rows();
    let cols = a.cols();
    let mut h = a.clone();
    let mut u = IntMatrix::identity(rows);

    // Eliminate from the rightmost column towards the left, so pivots are
    // rightmost-nonzero entries.  Unfinished rows live in [0, rows - placed);
    // each finished pivot row is swapped to the end of that range.
    let mut placed = 0usize;
    for col in (0..cols).rev() {
        let limit = rows - placed;
        // Gcd-eliminate all entries of `col` among unfinished rows into one.
        let mut pivot: Option<usize> = None;
        for r in 0..limit {
            if !h.at(r, col).is_zero() {
                pivot = Some(r);
                break;
            }
        }
        let Some(p) = pivot else { continue };
        // Clear the other unfinished rows using extended gcd row ops.
        for r in 0..limit {
            if r == p || h.at(r, col).is_zero() {
                continue;
            }
            let (g, x, y) = ext_gcd(h.at(p, col), h.at(r, col));
            let a_div = h.at(p, col) / &g;
            let b_div = h.at(r, col) / &g;
            // (row_p, row_r) <- (x*row_p + y*row_r, -b_div*row_p + a_div*row_r)
            combine_rows(&mut h, p, r, &x, &y, &a_div, &b_div);
            combine_rows(&mut u, p, r, &x, &y, &a_div, &b_div);
        }
        // Normalize pivot sign.
        if h.at(p, col).is_negative() {
            negate_row(&mut h, p);
            negate_row(&mut u, p);
        }
        // Move the pivot row to the last unfinished slot.
        let dest = limit - 1;
        if p != dest {
            swap_rows(&mut h, p, dest);
            swap_rows(&mut u, p, dest);
        }
        placed += 1;
    }

    // Rows are currently: zero rows in [0, rows-placed), pivot rows stacked
    // bottom-up with increasing pivot column going *down*... The loop above
    // pushed pivots at rows (rows-1, rows-2, ...) for decreasing columns, so
    // pivot columns increase with row index already.  Move zero rows to the
    // end, preserving pivot order.
    let zero_count = rows - placed;
    if zero_count > 0 {
        let mut perm: Vec<usize> = Vec::with_capacity(rows);
        perm.extend(zero_count..rows); // pivot rows first, in order
        perm.extend(0..zero_count); // then zero rows
        h = permute_rows(&h, &perm);
        u = permute_rows(&u, &perm);
    }

    // Reduce entries below each pivot into [0, pivot).  Subtracting pivot
    // row r only touches columns <= its pivot column, so processing pivots
    // bottom-up leaves already-normalized (larger) pivot columns intact.
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    for r in 0..placed {
        let col = (0..cols)
            .rev()
            .find(|&c| !h.at(r, c).is_zero())
            .expect("pivot row became zero");
        pivots.push((r, col));
    }
    for &(r, col) in pivots.iter().rev() {
        let p = h.at(r, col).clone();
        for below in r + 1..placed {
            let e = h.at(below, col);
            if e.is_zero() {
                continue;
            }
            let q = e.div_floor(&p);
            if q.is_zero() {
                continue;
            }
            sub_multiple(&mut h, below, r, &q);
            sub_multiple(&mut u, below, r, &q);
        }
    }
    (h, u)
}

fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    (e.gcd, e.x, e.y)
}

/// Applies the unimodular 2x2 transform
/// `(row_p, row_r) <- (x*row_p + y*row_r, -b*row_p + a*row_r)`.
fn combine_rows(
    m: &mut IntMatrix,
    p: usize,
    r: usize,
    x: &BigInt,
    y: &BigInt,
    a: &BigInt,
    b: &BigInt,
) {
    let cols = m.cols();
    for c in 0..cols {
        let vp = m.at(p, c).clone();
        let vr = m.at(r, c).clone();
        *m.at_mut(p, c) = x * &vp + y * &vr;
        *m.at_mut(r, c) = a * &vr - b * &vp;
    }
}

fn negate_row(m: &mut IntMatrix, r: usize) {
    for c in 0..m.cols() {
        let v = -m.at(r, c).clone();
        *m.at_mut(r, c) = v;
    }
}

fn swap_rows(m: &mut IntMatrix, a: usize, b: usize) {
    for c in 0..m.cols() {
        let tmp = m.at(a, c).clone();
        *m.at_mut(a, c) = m.at(b, c).clone();
        *m.at_mut(b, c) = tmp;
    }
}

fn sub_multiple(m: &mut IntMatrix, target: usize, source: usize, q: &BigInt) {
    for c in 0..m.cols() {
        let v = m.at(target, c) - q * m.at(source, c);
        *m.at_mut(target, c) = v;
    }
}

fn permute_rows(m: &IntMatrix, perm: &[usize]) -> IntMatrix {
    IntMatrix::from_rows(perm.iter().map(|&r| m.row_vec(r)).collect())
}

/// Smith normal form.  Always succeeds; the divisor chain of the zero
/// matrix is empty.
pub fn snf(a: &IntMatrix) -> SmithDecomposition {
    let rows = a.rows();
    let cols = a.cols();
    let mut s = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    let n = rows.min(cols);
    let mut t = 0usize;
    while t < n {
        // Pick the nonzero entry of smallest magnitude in the trailing block
        // as pivot; this keeps intermediate entries small in practice.
        let mut best: Option<(usize, usize)> = None;
        for r in t..rows {
            for c in t..cols {
                if s.at(r, c).is_zero() {
                    continue;
                }
                match &best {
                    None => best = Some((r, c)),
                    Some((br, bc)) => {
                        if s.at(r, c).magnitude() < s.at(*br, *bc).magnitude() {
                            best = Some((r, c));
                        }
                    }
                }
            }
        }
        let Some((pr, pc)) = best else { break };
        if pr != t {
            swap_rows(&mut s, pr, t);
            swap_rows(&mut u, pr, t);
        }
        if pc != t {
            swap_cols(&mut s, pc, t);
            swap_cols(&mut v, pc, t);
        }

        // Clear row and column t; restart if clearing one disturbs the other.
        loop {
            let mut clean = true;
            for r in t + 1..rows {
                if s.at(r, t).is_zero() {
                    continue;
                }
                if (s.at(r, t) % s.at(t, t)).is_zero() {
                    let q = s.at(r, t) / s.at(t, t);
                    sub_multiple(&mut s, r, t, &q);
                    sub_multiple(&mut u, r, t, &q);
                } else {
                    let (g, x, y) = ext_gcd(s.at(t, t), s.at(r, t));
                    let a_div = s.at(t, t) / &g;
                    let b_div = s.at(r, t) / &g;
                    combine_rows(&mut s, t, r, &x, &y, &a_div, &b_div);
                    combine_rows(&mut u, t, r, &x, &y, &a_div, &b_div);
                    clean = false;
                }
            }
            for c in t + 1..cols {
                if s.at(t, c).is_zero() {
                    continue;
                }
                if (s.at(t, c) % s.at(t, t)).is_zero() {
                    let q = s.at(t, c) / s.at(t, t);
                    sub_col_multiple(&mut s, c, t, &q);
                    sub_col_multiple(&mut v, c, t, &q);
                } else {
                    let (g, x, y) = ext_gcd(s.at(t, t), s.at(t, c));
                    let a_div = s.at(t, t) / &g;
                    let b_div = s.at(t, c) / &g;
                    combine_cols(&mut s, t, c, &x, &y, &a_div, &b_div);
                    combine_cols(&mut v, t, c, &x, &y, &a_div, &b_div);
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        t += 1;
    }

    // Enforce the divisibility chain d_i | d_{i+1}.
    let rank = t;
    loop {
        let mut fixed = true;
        for i in 0..rank.saturating_sub(1) {
            if !(s.at(i + 1, i + 1) % s.at(i, i)).is_zero() {
                fixed = false;
                // Fold entry (i+1, i+1) into position (i, i): add column i+1
                // to column i, then re-eliminate the 2x2 block.
                add_col(&mut s, i, i + 1);
                add_col(&mut v, i, i + 1);
                let (g, x, y) = ext_gcd(s.at(i, i), s.at(i + 1, i));
                let a_div = s.at(i, i) / &g;
                let b_div = s.at(i + 1, i) / &g;
                combine_rows(&mut s, i, i + 1, &x, &y, &a_div, &b_div);
                combine_rows(&mut u, i, i + 1, &x, &y, &a_div, &b_div);
                // Clear the off-diagonal fill-in in row i.
                let q = s.at(i, i + 1) / s.at(i, i);
                sub_col_multiple(&mut s, i + 1, i, &q);
                sub_col_multiple(&mut v, i + 1, i, &q);
            }
        }
        if fixed {
            break;
        }
    }

    // Positive diagonal.
    for i in 0..rank {
        if s.at(i, i).is_negative() {
            negate_row(&mut s, i);
            negate_row(&mut u, i);
        }
    }

    let divisors = (0..rank).map(|i| s.at(i, i).clone()).collect();
    SmithDecomposition { s, u, v, divisors }
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
    for r in 0..m.rows() {
        let tmp = m.at(r, a).clone();
        *m.at_mut(r, a) = m.at(r, b).clone();
        *m.at_mut(r, b) = tmp;
    }
}

fn sub_col_multiple(m: &mut IntMatrix, target: usize, source: usize, q: &BigInt) {
    for r in 0..m.rows() {
        let v = m.at(r, target) - q * m.at(r, source);
        *m.at_mut(r, target) = v;
    }
}

fn add_col(m: &mut IntMatrix, target: usize, source: usize) {
    for r in 0..m.rows() {
        let v = m.at(r, target) + m.at(r, source);
        *m.at_mut(r, target) = v;
    }
}

/// Applies the unimodular column transform
/// `(col_p, col_c) <- (x*col_p + y*col_c, -b*col_p + a*col_c)`.
fn combine_cols(
    m: &mut IntMatrix,
    p: usize,
    c: usize,
    x: &BigInt,
    y: &BigInt,
    a: &BigInt,
    b: &BigInt,
) {
    for r in 0..m.rows() {
        let vp = m.at(r, p).clone();
        let vc = m.at(r, c).clone();
        *m.at_mut(r, p) = x * &vp + y * &vc;
        *m.at_mut(r, c) = a * &vc - b * &vp;
    }
}

/// Determinant of a square integer matrix by fraction-free Bareiss
/// elimination.
pub fn det_int(a: &IntMatrix) -> BigInt {
    assert_eq!(a.rows(), a.cols(), "determinant of non-square matrix");
    let n = a.rows();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = a.clone();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m.at(k, k).is_zero() {
            match (k + 1..n).find(|&r| !m.at(r, k).is_zero()) {
                Some(r) => {
                    swap_rows(&mut m, k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                *m.at_mut(i, j) = num / &prev; // exact division (Bareiss)
            }
            *m.at_mut(i, k) = BigInt::zero();
        }
        prev = m.at(k, k).clone();
    }
    let d = m.at(n - 1, n - 1).clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Determinant of a square rational matrix (clears denominators, then
/// Bareiss).
pub fn det_rat(a: &RatMatrix) -> BigRational {
    assert_eq!(a.rows(), a.cols(), "determinant of non-square matrix");
    let n = a.rows();
    if n == 0 {
        return BigRational::one();
    }
    let (num, d) = a.clear_denominators();
    let det_num = det_int(&num);
    let mut denom = BigInt::one();
    for _ in 0..n {
        denom *= &d;
    }
    BigRational::new(det_num, denom)
}

/// Exact solution `x` of `x * A = b` (row vector times matrix), if one
/// exists.  `A` need not be square.
pub fn solve_rational(a: &RatMatrix, b: &[BigRational]) -> Option<Vec<BigRational>> {
    assert_eq!(a.cols(), b.len(), "dimension mismatch");
    // Solve A^T x^T = b^T by Gaussian elimination on the augmented system.
    let at = a.transpose();
    let rows = at.rows();
    let cols = at.cols();
    let mut m = at;
    let mut rhs: Vec<BigRational> = b.to_vec();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut r = 0usize;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m.at(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for cc in 0..cols {
                let tmp = m.at(p, cc).clone();
                *m.at_mut(p, cc) = m.at(r, cc).clone();
                *m.at_mut(r, cc) = tmp;
            }
            rhs.swap(p, r);
        }
        let piv = m.at(r, c).clone();
        for cc in 0..cols {
            let v = m.at(r, cc) / &piv;
            *m.at_mut(r, cc) = v;
        }
        rhs[r] = &rhs[r] / &piv;
        for i in 0..rows {
            if i == r || m.at(i, c).is_zero() {
                continue;
            }
            let f = m.at(i, c).clone();
            for cc in 0..cols {
                let v = m.at(i, cc) - &f * m.at(r, cc);
                *m.at_mut(i, cc) = v;
            }
            rhs[i] = &rhs[i] - &f * &rhs[r];
        }
        pivot_of_col[c] = Some(r);
        r += 1;
        if r == rows {
            break;
        }
    }
    // Consistency: any zero row of m must have zero rhs.
    for i in 0..rows {
        if m.row(i).iter().all(|e| e.is_zero()) && !rhs[i].is_zero() {
            return None;
        }
    }
    let mut x = vec![BigRational::zero(); cols];
    for (c, p) in pivot_of_col.iter().enumerate() {
        if let Some(p) = p {
            x[c] = rhs[*p].clone();
        }
    }
    // Verify (guards the consistency bookkeeping above).
    for c in 0..a.cols() {
        let mut acc = BigRational::zero();
        for k in 0..a.rows() {
            acc += &x[k] * a.at(k, c);
        }
        if acc != b[c] {
            return None;
        }
    }
    Some(x)
}

/// Basis of the left integer kernel `{x in Z^rows : x * A = 0}`, returned
/// as rows of a matrix in HNF.  The basis is saturated: the kernel is a
/// direct summand of `Z^rows`, so any primitive kernel vector appears with
/// content 1.
pub fn integer_kernel(a: &IntMatrix) -> IntMatrix {
    // x * A = 0  <=>  A^T x^T = 0; compute via HNF of A with transform U:
    // rows of U aligned with zero rows of H form a kernel basis.
    let (h, u) = hnf(a);
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for r in 0..h.rows() {
        if h.row(r).iter().all(|e| e.is_zero()) {
            rows.push(u.row_vec(r));
        }
    }
    if rows.is_empty() {
        return IntMatrix::zero(0, a.rows());
    }
    let (kh, _) = hnf(&IntMatrix::from_rows(rows));
    kh.without_zero_rows()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::SplitMix64;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows)
    }

    #[test]
    fn hnf_already_canonical() {
        let a = m(&[&[2, 0], &[0, 2]]);
        let (h, u) = hnf(&a);
        assert_eq!(h, a);
        assert_eq!(u, IntMatrix::identity(2));
    }

    #[test]
    fn hnf_transform_identity() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let (h, u) = hnf(&a);
        assert_eq!(u.mul(&a), h);
        assert_eq!(det_int(&u).magnitude(), BigInt::one().magnitude());
    }

    #[test]
    fn hnf_zero_matrix() {
        let a = IntMatrix::zero(3, 2);
        let (h, u) = hnf(&a);
        assert!(h.is_zero());
        assert_eq!(u, IntMatrix::identity(3));
    }

    #[test]
    fn hnf_idempotent() {
        let mut rng = SplitMix64::new(7);
        for _ in 0..40 {
            let rows = 1 + rng.below(5) as usize;
            let cols = 1 + rng.below(5) as usize;
            let a = IntMatrix::from_rows(
                (0..rows)
                    .map(|_| (0..cols).map(|_| BigInt::from(rng.small_int(9))).collect())
                    .collect(),
            );
            let (h, _) = hnf(&a);
            let (h2, _) = hnf(&h);
            assert_eq!(h, h2);
        }
    }

    #[test]
    fn snf_a2_gram() {
        let a = m(&[&[2, -1], &[-1, 2]]);
        let d = snf(&a);
        assert_eq!(d.divisors, vec![BigInt::from(1), BigInt::from(3)]);
        assert_eq!(d.u.mul(&a).mul(&d.v), d.s);
    }

    #[test]
    fn snf_identity() {
        let a = IntMatrix::identity(5);
        let d = snf(&a);
        assert!(d.divisors.iter().all(|x| x == &BigInt::one()));
        assert_eq!(d.divisors.len(), 5);
    }

    #[test]
    fn snf_transform_and_unimodular_invariance() {
        let mut rng = SplitMix64::new(99);
        for _ in 0..30 {
            let n = 2 + rng.below(4) as usize;
            let a = IntMatrix::from_rows(
                (0..n)
                    .map(|_| (0..n).map(|_| BigInt::from(rng.small_int(6))).collect())
                    .collect(),
            );
            let d = snf(&a);
            assert_eq!(d.u.mul(&a).mul(&d.v), d.s, "U*A*V = S");
            assert_eq!(det_int(&d.u).magnitude(), BigInt::one().magnitude());
            assert_eq!(det_int(&d.v).magnitude(), BigInt::one().magnitude());
            for w in d.divisors.windows(2) {
                assert!((&w[1] % &w[0]).is_zero(), "divisor chain");
            }
            // Invariance under random unimodular pre/post multiplication.
            let l = random_unimodular(n, &mut rng);
            let r = random_unimodular(n, &mut rng);
            let d2 = snf(&l.mul(&a).mul(&r));
            assert_eq!(d.divisors, d2.divisors);
        }
    }

    fn random_unimodular(n: usize, rng: &mut SplitMix64) -> IntMatrix {
        let mut u = IntMatrix::identity(n);
        for _ in 0..3 * n {
            let i = rng.below(n as u64) as usize;
            let j = rng.below(n as u64) as usize;
            if i == j {
                continue;
            }
            let q = BigInt::from(rng.small_int(3));
            sub_multiple(&mut u, i, j, &q);
        }
        u
    }

    #[test]
    fn det_small_cases() {
        assert_eq!(det_int(&IntMatrix::zero(0, 0)), BigInt::one());
        let a = m(&[&[2, -1], &[-1, 2]]);
        assert_eq!(det_int(&a), BigInt::from(3));
        let b = m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(det_int(&b), BigInt::zero());
    }

    #[test]
    fn det_multiplicative() {
        let mut rng = SplitMix64::new(2024);
        for _ in 0..25 {
            let n = 1 + rng.below(4) as usize;
            let gen = |rng: &mut SplitMix64| {
                IntMatrix::from_rows(
                    (0..n)
                        .map(|_| (0..n).map(|_| BigInt::from(rng.small_int(5))).collect())
                        .collect(),
                )
            };
            let a = gen(&mut rng);
            let b = gen(&mut rng);
            assert_eq!(det_int(&a.mul(&b)), det_int(&a) * det_int(&b));
        }
    }

    #[test]
    fn solve_identity_and_gram() {
        let id = RatMatrix::identity(3);
        let b: Vec<BigRational> = [5, -2, 7]
            .iter()
            .map(|&x| BigRational::from_integer(BigInt::from(x)))
            .collect();
        assert_eq!(solve_rational(&id, &b).unwrap(), b);

        // Gram(A2) * (1,1)^T = (1,1)^T, so x = (1,1) solves x*A = (1,1).
        let a = m(&[&[2, -1], &[-1, 2]]).to_rational();
        let ones: Vec<BigRational> = (0..2)
            .map(|_| BigRational::from_integer(BigInt::one()))
            .collect();
        assert_eq!(solve_rational(&a, &ones).unwrap(), ones);
    }

    #[test]
    fn solve_inconsistent() {
        // x * [[1,1]] = (1, 2) has no solution.
        let a = m(&[&[1, 1]]).to_rational();
        let b: Vec<BigRational> = [1, 2]
            .iter()
            .map(|&x| BigRational::from_integer(BigInt::from(x)))
            .collect();
        assert!(solve_rational(&a, &b).is_none());
    }

    #[test]
    fn kernel_cases() {
        let a = m(&[&[1], &[-1]]);
        let k = integer_kernel(&a);
        assert_eq!(k, m(&[&[1, 1]]));

        assert_eq!(integer_kernel(&IntMatrix::identity(4)).rows(), 0);

        // Verify by substitution on a rectangular input.
        let a = m(&[&[2, 4], &[1, 2], &[3, 6]]);
        let k = integer_kernel(&a);
        assert_eq!(k.rows(), 2);
        assert!(k.mul(&a).is_zero());
        // Saturation: content of each kernel row is 1.
        for r in 0..k.rows() {
            let mut g = BigInt::zero();
            for e in k.row(r) {
                g = g.gcd(e);
            }
            assert_eq!(g, BigInt::one());
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(&[&[2, -1], &[-1, 2]]).to_rational();
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), RatMatrix::identity(2));
    }
}
