//! The binary Golay code in the 4×6 array convention, the standard Leech
//! lattice, octad sublattices, the `xi` isometry, and the hard-coded
//! dihedral-pair case data.
//!
//! Coordinates: the 24 positions are arranged in a 4×6 array column-major,
//! position `(r, c) -> 4c + r` with `r` the row.  Lattice vectors are
//! integer 24-tuples under the ambient form `I/8`, so the integer entries
//! absorb the usual `1/sqrt 8` prefactor.  The hard-coded vectors below
//! are stored in the visual 4×6 layout and flattened by that rule.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exactmat::{IntMatrix, RatMatrix};
use crate::involution::Isometry;
use crate::lattice::{Form, Lattice, LatticeError};
use crate::shortvec;

fn bi(x: i64) -> BigInt {
    BigInt::from(x)
}

fn brf(n: i64, d: i64) -> BigRational {
    BigRational::new(bi(n), bi(d))
}

/// A vector stored as a 4×6 array: `ARRAY[r][c]` is coordinate `4c + r`.
pub type Array4x6 = [[i32; 6]; 4];

fn flatten(a: &Array4x6) -> Vec<BigInt> {
    let mut v = vec![bi(0); 24];
    for (r, row) in a.iter().enumerate() {
        for (c, &x) in row.iter().enumerate() {
            v[4 * c + r] = bi(x as i64);
        }
    }
    v
}

fn flatten_rat(a: &Array4x6) -> Vec<BigRational> {
    flatten(a)
        .into_iter()
        .map(BigRational::from_integer)
        .collect()
}

/// GF(4) as {0, 1, w, w^2} encoded 0..3; addition is XOR.
fn gf4_mul(a: u8, b: u8) -> u8 {
    const MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];
    MUL[a as usize][b as usize]
}

/// The hexacode: `(a, b, c, f(1), f(w), f(w^2))` with `f(x) = ax^2+bx+c`.
fn hexacode_words() -> Vec<[u8; 6]> {
    let mut words = Vec::with_capacity(64);
    for a in 0..4u8 {
        for b in 0..4u8 {
            for c in 0..4u8 {
                let f = |x: u8| gf4_mul(a, gf4_mul(x, x)) ^ gf4_mul(b, x) ^ c;
                words.push([a, b, c, f(1), f(2), f(3)]);
            }
        }
    }
    words
}

/// A weight-8 Golay codeword over the 24 positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Octad(u32);

impl Octad {
    pub fn mask(&self) -> u32 {
        self.0
    }

    pub fn members(&self) -> Vec<usize> {
        (0..24).filter(|i| self.0 & (1 << i) != 0).collect()
    }

    pub fn intersection_size(&self, other: &Octad) -> usize {
        (self.0 & other.0).count_ones() as usize
    }
}

/// The four fixed octads used throughout the case data, as bit masks over
/// the column-major 4×6 arrangement: the first two columns; the top row of
/// columns 1..5 plus the rest of column 0; the last two columns; the top
/// two rows of columns 2..5.
pub const OCTAD_1: u32 = 0x0000_00ff;
pub const OCTAD_2: u32 =
    (1 << 1) | (1 << 2) | (1 << 3) | (1 << 4) | (1 << 8) | (1 << 12) | (1 << 16) | (1 << 20);
pub const OCTAD_3: u32 = 0x00ff_0000;
pub const OCTAD_4: u32 =
    (1 << 8) | (1 << 9) | (1 << 12) | (1 << 13) | (1 << 16) | (1 << 17) | (1 << 20) | (1 << 21);

/// The length-24 Golay code, built from the hexacode description: a 4×6
/// binary array is a codeword iff every column parity equals the top-row
/// parity and the column scores form a hexacode word.
#[derive(Clone, Debug)]
pub struct GolayCode {
    /// All 4096 codewords as sorted bit masks.
    codewords: Vec<u32>,
    /// The 759 weight-8 codewords, sorted by mask.
    octads: Vec<u32>,
    /// A 12-row generator set.
    generator: Vec<u32>,
}

impl GolayCode {
    pub fn contains(&self, mask: u32) -> bool {
        self.codewords.binary_search(&mask).is_ok()
    }

    pub fn octads(&self) -> impl Iterator<Item = Octad> + '_ {
        self.octads.iter().map(|&m| Octad(m))
    }

    pub fn octad(&self, mask: u32) -> Result<Octad, LatticeError> {
        if mask.count_ones() == 8 && self.contains(mask) {
            Ok(Octad(mask))
        } else {
            Err(LatticeError::InvalidConstruction)
        }
    }

    pub fn generator_rows(&self) -> &[u32] {
        &self.generator
    }

    pub fn codeword_count(&self) -> usize {
        self.codewords.len()
    }

    /// Octads sorted by their member tuples (ascending positions compared
    /// lexicographically).
    pub fn octads_lex(&self) -> Vec<Octad> {
        let mut v: Vec<(Vec<usize>, u32)> = self
            .octads
            .iter()
            .map(|&m| (Octad(m).members(), m))
            .collect();
        v.sort();
        v.into_iter().map(|(_, m)| Octad(m)).collect()
    }
}

/// Builds the Golay code and runs its construction self-checks (fatal on
/// failure: everything downstream depends on them).
pub fn golay() -> GolayCode {
    let hexa = hexacode_words();
    // Column choices: for each (score, parity) there are exactly two 4-bit
    // column vectors, differing in the top bit.
    let mut options = [[[0u8; 2]; 2]; 4]; // [score][parity][choice]
    let mut counts = [[0usize; 2]; 4];
    for bits in 0u8..16 {
        let parity = (bits.count_ones() & 1) as usize;
        let mut score = 0u8;
        for r in 1..4u8 {
            if bits & (1 << r) != 0 {
                score ^= r;
            }
        }
        let slot = &mut counts[score as usize][parity];
        options[score as usize][parity][*slot] = bits;
        *slot += 1;
    }
    assert!(counts.iter().all(|p| p[0] == 2 && p[1] == 2));

    let mut codewords: Vec<u32> = Vec::with_capacity(4096);
    for word in &hexa {
        for parity in 0..2usize {
            for combo in 0u32..64 {
                let mut mask = 0u32;
                let mut top = 0u32;
                for c in 0..6 {
                    let choice = ((combo >> c) & 1) as usize;
                    let col = options[word[c] as usize][parity][choice] as u32;
                    mask |= col << (4 * c);
                    top ^= col & 1;
                }
                if top as usize == parity {
                    codewords.push(mask);
                }
            }
        }
    }
    codewords.sort_unstable();
    codewords.dedup();
    assert_eq!(codewords.len(), 4096, "Golay self-check: size");

    // Weight distribution (1, 759, 2576, 759, 1) at (0, 8, 12, 16, 24).
    let mut dist = [0usize; 25];
    for &w in &codewords {
        dist[w.count_ones() as usize] += 1;
    }
    assert_eq!(dist[0], 1, "Golay self-check: weight 0");
    assert_eq!(dist[8], 759, "Golay self-check: weight 8");
    assert_eq!(dist[12], 2576, "Golay self-check: weight 12");
    assert_eq!(dist[16], 759, "Golay self-check: weight 16");
    assert_eq!(dist[24], 1, "Golay self-check: weight 24");
    assert!(
        dist.iter().enumerate().all(|(w, &c)| c == 0 || w % 4 == 0),
        "Golay self-check: doubly even"
    );

    // Generator rows via F2 elimination.
    let mut basis: Vec<u32> = Vec::new();
    let mut pivots: Vec<u32> = Vec::new();
    for &w in &codewords {
        let mut v = w;
        for (b, p) in basis.iter().zip(&pivots) {
            if v & p != 0 {
                v ^= b;
            }
        }
        if v != 0 {
            let p = 1u32 << v.trailing_zeros();
            basis.push(v);
            pivots.push(p);
            if basis.len() == 12 {
                break;
            }
        }
    }
    assert_eq!(basis.len(), 12, "Golay self-check: dimension");

    // Self-dual: all pairwise generator intersections even.
    for &a in &basis {
        for &b in &basis {
            assert!((a & b).count_ones() % 2 == 0, "Golay self-check: self-dual");
        }
    }

    let octads: Vec<u32> = codewords
        .iter()
        .copied()
        .filter(|m| m.count_ones() == 8)
        .collect();

    let code = GolayCode {
        codewords,
        octads,
        generator: basis,
    };
    for fixed in [OCTAD_1, OCTAD_2, OCTAD_3, OCTAD_4] {
        assert!(
            code.contains(fixed) && fixed.count_ones() == 8,
            "Golay self-check: fixed octad membership"
        );
    }
    assert!(code.contains(0x00ff_ffff), "Golay self-check: all-ones");
    code
}

/// The Leech lattice with its Golay code.
#[derive(Clone, Debug)]
pub struct LeechContext {
    pub lattice: Lattice,
    pub golay: GolayCode,
}

/// Ambient form of all Leech-coordinate lattices.
pub fn leech_form() -> Form {
    Form::scaled_identity(24, brf(1, 8))
}

/// Builds the standard Leech lattice from the Golay generators, the
/// `(-3, 1, ..., 1)` vector, and the `e_i ± e_j` family.  Fatal if the
/// certificate (rank 24, det 1, even, rootless) fails.
pub fn leech() -> LeechContext {
    let golay = golay();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for &g in golay.generator_rows() {
        let mut v = vec![bi(0); 24];
        for (i, slot) in v.iter_mut().enumerate() {
            if g & (1 << i) != 0 {
                *slot = bi(2);
            }
        }
        rows.push(v);
    }
    let mut special = vec![bi(1); 24];
    special[0] = bi(-3);
    rows.push(special);
    let mut pair = vec![bi(0); 24];
    pair[0] = bi(4);
    pair[1] = bi(4);
    rows.push(pair);
    for i in 0..23 {
        let mut v = vec![bi(0); 24];
        v[i] = bi(4);
        v[i + 1] = bi(-4);
        rows.push(v);
    }
    let lattice = Lattice::from_int_generators(leech_form(), IntMatrix::from_rows(rows));
    assert_eq!(lattice.rank(), 24, "Leech self-check: rank");
    assert!(lattice.is_even(), "Leech self-check: even");
    assert_eq!(
        lattice.determinant(),
        BigRational::one(),
        "Leech self-check: determinant"
    );
    assert!(
        shortvec::is_rootless(&lattice).expect("integral"),
        "Leech self-check: rootless"
    );
    LeechContext { lattice, golay }
}

/// A frame: 24 pairwise orthogonal norm-8 vectors (rows).  The standard
/// frame is `{2 e_i}`, i.e. `8 u_i` in integer coordinates.
#[derive(Clone, Debug)]
pub struct Frame {
    rows: RatMatrix,
}

impl Frame {
    pub fn standard() -> Frame {
        let mut m = RatMatrix::zero(24, 24);
        for i in 0..24 {
            *m.at_mut(i, i) = BigRational::from_integer(bi(8));
        }
        Frame { rows: m }
    }

    /// The image frame under an isometry.
    pub fn transformed(&self, g: &Isometry) -> Frame {
        Frame {
            rows: self.rows.mul(g.matrix()),
        }
    }

    pub fn vector(&self, i: usize) -> Vec<BigRational> {
        self.rows.row(i).to_vec()
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.rows
    }
}

/// Octad sublattice `E_F(O) = span{a_i ± a_j, (1/2) sum_{i in O} a_i}`
/// with `a_i` half the frame vectors; isometric to `EE8` inside the Leech
/// lattice.
pub fn e_octad_frame(frame: &Frame, octad: Octad) -> Lattice {
    let members = octad.members();
    let half = brf(1, 2);
    let quarter = brf(1, 4);
    let a = |i: usize| -> Vec<BigRational> {
        frame.vector(members[i]).iter().map(|x| x * &half).collect()
    };
    let combine = |u: &[BigRational], v: &[BigRational], s: i64| -> Vec<BigRational> {
        u.iter()
            .zip(v)
            .map(|(x, y)| x + BigRational::from_integer(bi(s)) * y)
            .collect()
    };
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    rows.push(combine(&a(0), &a(1), 1));
    for i in 0..7 {
        rows.push(combine(&a(i), &a(i + 1), -1));
    }
    let mut half_sum = vec![BigRational::zero(); 24];
    for &m in &members {
        for (c, slot) in half_sum.iter_mut().enumerate() {
            *slot += frame.vector(m)[c].clone() * &quarter;
        }
    }
    rows.push(half_sum);
    Lattice::from_rational_generators(leech_form(), RatMatrix::from_rows(rows))
}

/// Octad sublattice on the standard frame.
pub fn e_octad(octad: Octad) -> Lattice {
    e_octad_frame(&Frame::standard(), octad)
}

/// The isometry `xi`: on each 4-entry column the symmetric orthogonal
/// matrix `(1/2)(J - 2I)` acts, with the first column additionally
/// negated.
pub fn xi() -> Isometry {
    let mut m = RatMatrix::zero(24, 24);
    let half = brf(1, 2);
    for c in 0..6 {
        let sign = if c == 0 {
            -BigRational::one()
        } else {
            BigRational::one()
        };
        for r in 0..4 {
            for s in 0..4 {
                let a = if r == s { brf(-1, 2) } else { half.clone() };
                *m.at_mut(4 * c + s, 4 * c + r) = a * &sign;
            }
        }
    }
    Isometry::new(leech_form(), m).expect("xi preserves the form")
}

/// Frame involution: negates the frame axes indexed by `mask`, fixes the
/// rest.  It stabilizes the Leech lattice iff the mask is a Golay word.
pub fn eps(frame: &Frame, mask: u32) -> Isometry {
    let f = frame.matrix();
    let finv = f.inverse().expect("frame is a basis");
    let mut d = RatMatrix::zero(24, 24);
    for i in 0..24 {
        *d.at_mut(i, i) = if mask & (1 << i) != 0 {
            -BigRational::one()
        } else {
            BigRational::one()
        };
    }
    let m = finv.mul(&d).mul(f);
    Isometry::new(leech_form(), m).expect("eps preserves the form")
}

/// `BW16` as it arises here: the annihilator in the Leech lattice of the
/// octad sublattice on the last two columns.
pub fn barnes_wall_16() -> Lattice {
    let ctx = leech();
    let e3 = e_octad(ctx.golay.octad(OCTAD_3).expect("octad"));
    ctx.lattice.annihilator(&e3).expect("same ambient")
}

/// The ten dihedral-pair cases with explicit Leech-lattice data.  The
/// rank-15 order-2-product pair deliberately does not appear: it has no
/// Leech embedding and is served by `atlas::dih4_15`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[allow(non_camel_case_types)]
pub enum CaseName {
    Dih4_12,
    Dih4_14,
    Dih4_16,
    Dih6_14,
    Dih6_16,
    Dih8_15,
    Dih8_16_0,
    Dih8_16_Dd4,
    Dih10_16,
    Dih12_16,
}

impl CaseName {
    pub const ALL: [CaseName; 10] = [
        CaseName::Dih4_12,
        CaseName::Dih4_14,
        CaseName::Dih4_16,
        CaseName::Dih6_14,
        CaseName::Dih6_16,
        CaseName::Dih8_15,
        CaseName::Dih8_16_0,
        CaseName::Dih8_16_Dd4,
        CaseName::Dih10_16,
        CaseName::Dih12_16,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CaseName::Dih4_12 => "dih4_12",
            CaseName::Dih4_14 => "dih4_14",
            CaseName::Dih4_16 => "dih4_16",
            CaseName::Dih6_14 => "dih6_14",
            CaseName::Dih6_16 => "dih6_16",
            CaseName::Dih8_15 => "dih8_15",
            CaseName::Dih8_16_0 => "dih8_16_0",
            CaseName::Dih8_16_Dd4 => "dih8_16_dd4",
            CaseName::Dih10_16 => "dih10_16",
            CaseName::Dih12_16 => "dih12_16",
        }
    }

    pub fn parse(s: &str) -> Option<CaseName> {
        CaseName::ALL.iter().copied().find(|c| c.as_str() == s)
    }
}

// --- case basis data ------------------------------------------------------
//
// Stored in the visual 4×6 layout; `flatten` maps (r, c) -> 4c + r.

/// Basis of `E(O1)` on the standard frame (the beta vectors).
pub const E_O1_BASIS: [Array4x6; 8] = [
    [
        [4, -4, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 4, 0, 0, 0, 0],
        [-4, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, 0, 0, 0],
        [4, -4, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, 0, 0, 0],
        [0, 4, 0, 0, 0, 0],
        [-4, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [4, -4, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 4, 0, 0, 0, 0],
        [-4, 0, 0, 0, 0, 0],
    ],
    [
        [-4, -4, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [2, 2, 0, 0, 0, 0],
        [2, 2, 0, 0, 0, 0],
        [2, 2, 0, 0, 0, 0],
        [2, 2, 0, 0, 0, 0],
    ],
];

/// Basis of `E(O2)` on the standard frame (the gamma vectors).
pub const E_O2_BASIS: [Array4x6; 8] = [
    [
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [-4, 0, 0, 0, 0, 0],
        [4, 0, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, 0, 0, 0],
        [-4, 0, 0, 0, 0, 0],
        [4, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [0, -4, 0, 0, 0, 0],
        [4, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 4, -4, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 0, 4, -4, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, 4, -4, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [-4, 0, 0, 0, 0, 0],
        [-4, 0, 0, 0, 0, 0],
    ],
    [
        [0, 2, 2, 2, 2, 2],
        [2, 0, 0, 0, 0, 0],
        [2, 0, 0, 0, 0, 0],
        [2, 0, 0, 0, 0, 0],
    ],
];

/// The order-3 partner of `E(O1)` (the rank-16 order-6 case).
pub const DIH6_16_N: [Array4x6; 8] = [
    [
        [2, -2, 2, -2, 2, 0],
        [0, 0, 0, 0, 0, 2],
        [0, 0, 0, 0, 0, 2],
        [0, 0, 0, 0, 0, 2],
    ],
    [
        [0, 2, 0, 2, 0, 2],
        [-2, 0, -2, 0, 0, -2],
        [0, 0, 0, 0, 2, -2],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, 0, 0, -2],
        [2, -2, 2, -2, 2, 0],
        [0, 0, 0, 0, -2, 0],
        [0, 0, 0, 0, 2, 0],
    ],
    [
        [0, 0, 0, 0, 0, 2],
        [0, 2, 0, 2, -2, 2],
        [-2, 0, -2, 0, 0, 0],
        [0, 0, 0, 0, 0, -2],
    ],
    [
        [0, 0, 0, 0, 0, -2],
        [0, 0, 0, 0, 2, 0],
        [2, -2, 2, -2, 2, 0],
        [0, 0, 0, 0, -2, 0],
    ],
    [
        [0, 0, 0, 0, 0, 2],
        [0, 0, 0, 0, 0, -2],
        [0, 2, 0, 2, -2, 2],
        [-2, 0, -2, 0, 0, 0],
    ],
    [
        [-2, -2, -2, -2, 0, -2],
        [0, 0, 0, 0, -2, 0],
        [0, 0, 0, 0, -2, 0],
        [0, 0, 0, 0, -2, 0],
    ],
    [
        [1, 1, 1, 1, -3, 1],
        [1, 1, 1, 1, 1, 1],
        [1, 1, 1, 1, 1, 1],
        [1, 1, 1, 1, 1, 1],
    ],
];

/// The order-4 partner of `E(O1)` with zero annihilators (the BW16 case).
pub const DIH8_16_0_N: [Array4x6; 8] = [
    [
        [0, 0, 0, 0, 0, 0],
        [-2, -2, -2, -2, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [-2, -2, -2, -2, 0, 0],
    ],
    [
        [0, 0, 0, 0, 0, 0],
        [4, 0, 4, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [-4, 0, -4, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [2, 0, 2, 0, 0, 0],
        [-2, 0, -2, 0, 0, 0],
        [2, 0, 2, 0, 0, 0],
        [2, 0, 2, 0, 0, 0],
    ],
    [
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [-4, 0, -4, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 2, 0, 2, 0, 0],
        [0, 2, 0, 2, 0, 0],
        [2, 0, 2, 0, 0, 0],
        [-2, 0, -2, 0, 0, 0],
    ],
    [
        [0, -4, 0, -4, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 2, 0, 2, 0, 0],
        [0, -2, 0, -2, 0, 0],
        [0, 2, 0, 2, 0, 0],
        [0, 2, 0, 2, 0, 0],
    ],
];

/// Basis of `E(O4)` (partner in the order-4 rank-16 case with `DD4`
/// annihilators).
pub const E_O4_BASIS: [Array4x6; 8] = [
    [
        [0, 0, 4, 0, 0, 0],
        [0, 0, -4, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, -4, 0, 0],
        [0, 0, 4, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, 4, 0, 0],
        [0, 0, 0, -4, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, 0, -4, 0],
        [0, 0, 0, 4, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, 0, 4, 0],
        [0, 0, 0, 0, -4, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, 0, 0, -4],
        [0, 0, 0, 0, 4, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 0, 4, 0, 0, 0],
        [0, 0, 4, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 0, -2, -2, -2, -2],
        [0, 0, -2, -2, -2, -2],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
];

/// The rank-15 order-4 case: basis of `M`.
pub const DIH8_15_M: [Array4x6; 8] = [
    [
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, -4],
        [0, 0, 0, 0, 4, 0],
    ],
    [
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, -2, 2, -2, 2],
        [0, 0, 2, -2, -2, 2],
    ],
    [
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 4, 0, 0, 0],
        [0, 0, -4, 0, 0, 0],
    ],
    [
        [0, 0, 0, 0, -2, 2],
        [0, 0, 0, 0, 2, -2],
        [0, 0, -2, -2, 0, 0],
        [0, 0, 2, 2, 0, 0],
    ],
    [
        [0, 0, 0, 0, 4, -4],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, 0, -2, 2],
        [0, 0, 0, 0, -2, 2],
        [-2, 2, 0, 0, 0, 0],
        [2, -2, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [4, 0, 0, 0, 0, 0],
        [-4, 0, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, -2, 2],
        [0, -2, -2, 0, 2, 0],
        [0, 2, 2, 0, 0, -2],
    ],
];

/// The rank-15 order-4 case: the rows of `N` other than the shared second
/// vector of `M`.
pub const DIH8_15_N_EXTRA: [Array4x6; 7] = [
    [
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, -4, 4, 0, 0],
    ],
    [
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 4, 0, 0, -4],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, 0, 0, 0],
        [0, 0, -2, 2, 2, -2],
        [0, 0, -2, -2, 2, 2],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, 0, 0, 0],
        [0, 0, 4, 0, -4, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [2, 0, 0, 0, 0, 0],
        [0, -2, -2, -2, 2, 2],
        [0, 2, 0, 0, 0, 0],
        [0, -2, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, 0, 0, 0],
        [0, 4, 0, 0, 0, 0],
        [0, -4, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [-2, 0, 0, 0, 0, 0],
        [0, 0, 0, -2, 0, 2],
        [0, 0, -2, 0, 0, 2],
        [0, 2, 0, 0, 2, -2],
    ],
];

/// The rank-16 order-5 case: basis of `M`.
pub const DIH10_16_M: [Array4x6; 8] = [
    [
        [4, -4, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [-2, 2, 0, -2, 0, 0],
        [0, 0, 2, 0, 0, 0],
        [0, 2, 0, 0, 0, -2],
        [0, -2, 0, 0, 2, 0],
    ],
    [
        [0, 0, 0, 4, 0, 0],
        [0, 0, -4, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, -2, -2, 0],
        [0, 0, 2, 0, 0, -2],
        [0, 0, 2, 0, 0, 2],
        [0, 0, 0, 2, -2, 0],
    ],
    [
        [0, 0, 0, 0, 4, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, -4, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, 0, -2, -2],
        [0, 0, 0, 0, -2, 2],
        [0, 0, 2, 2, 0, 0],
        [0, 0, 2, -2, 0, 0],
    ],
    [
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 4, 0],
        [0, 0, 0, -4, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, 0, -2, 2],
        [0, 0, 0, 0, 0, 0],
        [0, -2, 2, 0, 0, -2],
        [0, 2, -2, 0, 2, 0],
    ],
];

/// The rank-16 order-5 case: basis of `N`.
pub const DIH10_16_N: [Array4x6; 8] = [
    [
        [4, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, -4, 0, 0, 0, 0],
    ],
    [
        [-2, 0, 0, 0, 0, 0],
        [0, 2, -2, -2, 2, 2],
        [0, -2, 0, 0, 0, 0],
        [0, 2, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, 0, 0, 0],
        [0, 0, 4, 0, -4, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, 0, 0, 0],
        [0, 0, -2, 2, 2, -2],
        [0, 0, -2, -2, 2, 2],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 4, 0, 0, -4],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, -2, 2, -2, 2],
        [0, 0, -2, 2, -2, 2],
    ],
    [
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 4, -4],
    ],
    [
        [0, 0, 0, 0, 0, 0],
        [0, -2, 0, -2, 0, 2],
        [0, 2, -2, 0, 0, 2],
        [0, 0, 2, -2, 0, 0],
    ],
];

/// The rank-16 order-6 case: basis of `M`.
pub const DIH12_16_M: [Array4x6; 8] = [
    [
        [4, -4, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [-2, 2, 0, -2, 0, 0],
        [0, 0, 2, 0, 0, 0],
        [2, 0, 0, 0, -2, 0],
        [-2, 0, 0, 0, 0, 2],
    ],
    [
        [0, 0, 0, 4, 0, 0],
        [0, 0, -4, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, -2, 2, 0],
        [0, 0, 2, 0, 0, 2],
        [0, 0, 0, -2, 2, 0],
        [0, 0, -2, 0, 0, -2],
    ],
    [
        [0, 0, 0, 0, -4, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 4, 0, 0, 0],
    ],
    [
        [0, 0, 0, 0, 2, 2],
        [0, 0, 0, 0, 2, -2],
        [0, 0, -2, 2, 0, 0],
        [0, 0, -2, -2, 0, 0],
    ],
    [
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, -4, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 4, 0, 0],
    ],
    [
        [0, 0, 0, 0, 2, -2],
        [0, 0, 0, 0, 0, 0],
        [-2, 0, 2, 0, -2, 0],
        [2, 0, -2, 0, 0, 2],
    ],
];

/// The rank-16 order-6 case: basis of `N`.
pub const DIH12_16_N: [Array4x6; 8] = [
    [
        [4, 0, 0, 0, 0, 0],
        [0, -4, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [-2, 0, 0, 0, 0, 0],
        [0, 2, -2, 2, -2, 2],
        [0, 2, 0, 0, 0, 0],
        [0, -2, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, 0, 0, 0],
        [0, 0, 4, -4, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, 0, 0, 0],
        [0, 0, -2, 2, 2, -2],
        [0, 0, -2, -2, 2, 2],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 4, 0, -4, 0],
        [0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, -2, 2, 2, -2],
        [0, 0, -2, -2, 2, 2],
    ],
    [
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 4, -4, 0],
    ],
    [
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, -2, 2],
        [0, -2, -2, 0, 2, 0],
        [0, 2, 2, 0, 0, -2],
    ],
];

/// Ordered basis realizing the reference Gram matrix of the order-4
/// rank-16 case with zero annihilators.  The reference matrix is not the
/// Gram of the generator rows above under any signed reordering, so this
/// basis of the same lattice was recovered by constraint search over its
/// norm-4 vectors; it reproduces the matrix entry for entry.
pub const DIH8_16_0_L_REFERENCE: [[i64; 24]; 16] = [
    [
        0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 2, -2, 2, -2, -2, -2, 0, 0, 0, 0, 0, 0, 0, 0,
    ],
    [
        -2, 2, 2, 2, -2, -2, -2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    ],
    [
        0, 0, 0, 0, 2, 2, 2, -2, -2, -2, -2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    ],
    [
        0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 2, -2, -2, 2, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0,
    ],
    [
        0, 0, -2, -2, -2, -2, 0, 0, -2, -2, 0, 0, 0, 0, -2, -2, 0, 0, 0, 0, 0, 0, 0, 0,
    ],
    [
        0, 0, 0, 0, 0, 0, 0, 0, 2, 2, -2, 2, 2, -2, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0,
    ],
    [
        0, 0, 0, 0, 2, 2, -2, 2, -2, -2, 2, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    ],
    [
        2, -2, 0, 0, 0, 0, -2, 2, 0, 0, -2, 2, -2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    ],
    [
        0, 2, 2, 0, -2, 0, 0, -2, 2, 0, 0, -2, 0, -2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    ],
    [
        0, -2, -2, 0, 0, 2, 2, 0, -2, 0, 0, 2, -2, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0,
    ],
    [
        0, -2, -2, 0, 0, 2, 2, 0, 2, 0, 0, -2, 2, 0, 0, -2, 0, 0, 0, 0, 0, 0, 0, 0,
    ],
    [
        0, 0, 0, 0, 0, -4, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    ],
    [
        0, 2, 2, 0, 0, 2, 2, 0, -2, 0, 0, 2, 2, 0, 0, -2, 0, 0, 0, 0, 0, 0, 0, 0,
    ],
    [
        2, 0, 0, 2, 2, 0, 0, 2, 2, 0, 0, -2, -2, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0,
    ],
    [
        -2, 0, 0, -2, -2, 0, 0, -2, 0, -2, 2, 0, 0, 2, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    ],
    [
        0, 0, 0, 0, 0, 0, 0, 0, 0, 4, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    ],
];

/// Ordered basis realizing the reference Gram matrix of the order-4
/// rank-16 case with `DD4` annihilators; recovered the same way as
/// [`DIH8_16_0_L_REFERENCE`].
pub const DIH8_16_DD4_L_REFERENCE: [[i64; 24]; 16] = [
    [
        0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 2, 2, 0, 0, 2, 2, 0, 0, -2, -2,
    ],
    [
        0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, -2, -2, -2, -2, 2, 2,
    ],
    [
        0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, -2, 0, 0, -2, -2, 0, 0, 2, 2, 0, 0, -2, -2,
    ],
    [
        0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 2, 2, 0, 0, -2, -2, 0, 0, 0, 0, 2, 2,
    ],
    [
        0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, -2, 0, 0, 2, 2, 0, 0, -2, -2, 0, 0, -2, -2,
    ],
    [
        0, 0, 0, 0, 0, 0, 0, 0, -2, -2, 0, 0, -2, -2, 0, 0, 0, 0, 2, 2, 0, 0, 2, 2,
    ],
    [
        0, 0, 0, 0, 0, 0, 0, 0, -2, -2, 0, 0, 2, 2, 0, 0, 2, 2, 0, 0, -2, -2, 0, 0,
    ],
    [
        0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, -2, -2, 0, 0, -2, -2, 0, 0, -2, -2, 0, 0,
    ],
    [
        2, 2, 2, -2, -2, 2, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    ],
    [
        -2, -2, 2, -2, 2, -2, -2, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    ],
    [
        0, 4, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    ],
    [
        -1, -3, 1, 1, -1, 1, 1, 1, 1, -1, 1, 1, 1, -1, 1, 1, 1, -1, 1, 1, -1, 1, -1, -1,
    ],
    [
        0, 0, 0, 0, 0, 0, 0, 0, -2, 2, -2, -2, -2, 2, -2, -2, 0, 0, 0, 0, 0, 0, 0, 0,
    ],
    [
        0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, -2, 2, 2, -2, 2, -2, -2, 0, 0, 0, 0,
    ],
    [
        0, 0, 0, 0, 0, 0, 0, 0, 2, -2, 2, 2, -2, 2, -2, -2, 0, 0, 0, 0, 0, 0, 0, 0,
    ],
    [
        -3, -1, -1, -1, -1, 1, 1, 1, -1, 1, -1, -1, -1, 1, -1, -1, -1, 1, -1, -1, -1, 1, -1, -1,
    ],
];

pub(crate) fn rows_to_lattice(rows: &[Array4x6]) -> Lattice {
    let m = IntMatrix::from_rows(rows.iter().map(flatten).collect());
    Lattice::from_int_basis(leech_form(), m)
}

/// Ordering of an octad used by the case bases: intersection members
/// first (ascending), then the rest (ascending).
pub fn octad_ordering(octad: &Octad, intersection: u32) -> Vec<usize> {
    let mut first: Vec<usize> = octad
        .members()
        .into_iter()
        .filter(|i| intersection & (1 << i) != 0)
        .collect();
    let rest: Vec<usize> = octad
        .members()
        .into_iter()
        .filter(|i| intersection & (1 << i) == 0)
        .collect();
    first.extend(rest);
    first
}

/// The deterministic octad pair for the order-2-product cases: the first
/// octad is the two-column block, the second is the lexicographically
/// least octad meeting it in `overlap` points.
pub fn dih4_octad_pair(code: &GolayCode, overlap: usize) -> (Octad, Octad) {
    let o1 = code.octad(OCTAD_1).expect("fixed octad");
    let o2 = code
        .octads_lex()
        .into_iter()
        .find(|o| o.mask() != o1.mask() && o1.intersection_size(o) == overlap)
        .expect("octad with requested overlap");
    (o1, o2)
}

/// The explicit `(M, N)` pair of a named case, both sublattices of the
/// Leech lattice (checked).
pub fn case_data(name: CaseName) -> Result<(Lattice, Lattice), LatticeError> {
    let ctx = leech();
    case_data_in(&ctx, name)
}

/// As [`case_data`], reusing an already-built context.
pub fn case_data_in(
    ctx: &LeechContext,
    name: CaseName,
) -> Result<(Lattice, Lattice), LatticeError> {
    let pair = match name {
        CaseName::Dih4_16 => {
            let (o, o2) = dih4_octad_pair(&ctx.golay, 0);
            (e_octad(o), e_octad(o2))
        }
        CaseName::Dih4_14 => {
            let (o, o2) = dih4_octad_pair(&ctx.golay, 2);
            (e_octad(o), e_octad(o2))
        }
        CaseName::Dih4_12 => {
            let (o, o2) = dih4_octad_pair(&ctx.golay, 4);
            (e_octad(o), e_octad(o2))
        }
        CaseName::Dih6_14 => {
            let m = rows_to_lattice(&E_O2_BASIS);
            let n = xi().apply_lattice(&m);
            (m, n)
        }
        CaseName::Dih6_16 => (rows_to_lattice(&E_O1_BASIS), rows_to_lattice(&DIH6_16_N)),
        CaseName::Dih8_15 => {
            let m = rows_to_lattice(&DIH8_15_M);
            let mut n_rows: Vec<Array4x6> = Vec::with_capacity(8);
            n_rows.push(DIH8_15_N_EXTRA[0]);
            n_rows.push(DIH8_15_M[1]); // the shared vector
            n_rows.extend_from_slice(&DIH8_15_N_EXTRA[1..]);
            (m, rows_to_lattice(&n_rows))
        }
        CaseName::Dih8_16_0 => (rows_to_lattice(&E_O1_BASIS), rows_to_lattice(&DIH8_16_0_N)),
        CaseName::Dih8_16_Dd4 => {
            let m = xi().apply_lattice(&rows_to_lattice(&E_O2_BASIS));
            let n = rows_to_lattice(&E_O4_BASIS);
            (m, n)
        }
        CaseName::Dih10_16 => (rows_to_lattice(&DIH10_16_M), rows_to_lattice(&DIH10_16_N)),
        CaseName::Dih12_16 => (rows_to_lattice(&DIH12_16_M), rows_to_lattice(&DIH12_16_N)),
    };
    if !(ctx.lattice.contains(&pair.0)? && ctx.lattice.contains(&pair.1)?) {
        return Err(LatticeError::NotASublattice);
    }
    Ok(pair)
}

/// The ordered basis of `L = M + N` whose Gram is compared entry by
/// entry against the reference matrix of the case.  `Dih4_16` has no
/// reference Gram and yields `None`.
pub fn case_l_basis(ctx: &LeechContext, name: CaseName) -> Option<RatMatrix> {
    let half = brf(1, 2);
    let e = |i: usize| -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); 24];
        v[i] = BigRational::from_integer(bi(4));
        v
    };
    let scaled_sum = |idx: &[usize], s: &BigRational| -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); 24];
        for &i in idx {
            v[i] = BigRational::from_integer(bi(4)) * s;
        }
        v
    };
    let sub = |a: &[BigRational], b: &[BigRational]| -> Vec<BigRational> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    };
    let add = |a: &[BigRational], b: &[BigRational]| -> Vec<BigRational> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    };
    let neg = |a: &[BigRational]| -> Vec<BigRational> { a.iter().map(|x| -x.clone()).collect() };

    let rows: Vec<Vec<BigRational>> = match name {
        CaseName::Dih4_12 => {
            let (o, o2) = dih4_octad_pair(&ctx.golay, 4);
            let inter = o.mask() & o2.mask();
            let i = octad_ordering(&o, inter);
            let j = octad_ordering(&o2, inter);
            let mut rows = Vec::with_capacity(12);
            rows.push(add(&e(i[0]), &e(i[1])));
            rows.push(sub(&e(i[0]), &e(i[1])));
            rows.push(sub(&e(i[1]), &e(i[2])));
            rows.push(sub(&e(i[2]), &e(i[3])));
            rows.push(sub(&e(i[3]), &e(i[4])));
            rows.push(sub(&e(i[4]), &e(i[5])));
            rows.push(sub(&e(i[5]), &e(i[6])));
            rows.push(neg(&scaled_sum(&i, &half)));
            rows.push(sub(&e(j[3]), &e(j[4])));
            rows.push(sub(&e(j[4]), &e(j[5])));
            rows.push(sub(&e(j[5]), &e(j[6])));
            rows.push(neg(&scaled_sum(&j, &half)));
            rows
        }
        CaseName::Dih4_14 => {
            let (o, o2) = dih4_octad_pair(&ctx.golay, 2);
            let inter = o.mask() & o2.mask();
            let i = octad_ordering(&o, inter);
            let j = octad_ordering(&o2, inter);
            let mut rows = Vec::with_capacity(14);
            rows.push(scaled_sum(&i, &half));
            for k in (3..=7).rev() {
                // -e_{i_k} + e_{i_{k-1}} over the 1-based octad ordering
                rows.push(sub(&e(i[k - 2]), &e(i[k - 1])));
            }
            rows.push(sub(&e(i[0]), &e(i[1])));
            rows.push(neg(&add(&e(i[0]), &e(i[1]))));
            for k in 3..=7 {
                // e_{j_{k-1}} - e_{j_k} likewise
                rows.push(sub(&e(j[k - 2]), &e(j[k - 1])));
            }
            rows.push(scaled_sum(&j, &half));
            rows
        }
        CaseName::Dih6_16 => stack_rows(&E_O1_BASIS, &DIH6_16_N),
        CaseName::Dih6_14 => {
            // gamma_1, gamma_2, gamma_3..gamma_8, then the xi images of
            // gamma_3..gamma_8, with the image of gamma_7 negated (the
            // reference matrix fixes that sign choice).
            let xi = xi();
            let mut rows: Vec<Vec<BigRational>> = E_O2_BASIS.iter().map(flatten_rat).collect();
            for (k, r) in E_O2_BASIS[2..].iter().enumerate() {
                let mut v = xi.apply(&flatten_rat(r));
                if k == 4 {
                    for x in &mut v {
                        *x = -x.clone();
                    }
                }
                rows.push(v);
            }
            rows
        }
        CaseName::Dih8_16_0 => int64_rows(&DIH8_16_0_L_REFERENCE),
        CaseName::Dih8_16_Dd4 => int64_rows(&DIH8_16_DD4_L_REFERENCE),
        CaseName::Dih8_15 => {
            let mut rows: Vec<Vec<BigRational>> = DIH8_15_M.iter().map(flatten_rat).collect();
            rows.extend(DIH8_15_N_EXTRA.iter().map(flatten_rat));
            rows
        }
        CaseName::Dih10_16 => stack_rows(&DIH10_16_M, &DIH10_16_N),
        CaseName::Dih12_16 => stack_rows(&DIH12_16_M, &DIH12_16_N),
        CaseName::Dih4_16 => return None,
    };
    Some(RatMatrix::from_rows(rows))
}

fn stack_rows(a: &[Array4x6; 8], b: &[Array4x6; 8]) -> Vec<Vec<BigRational>> {
    let mut rows: Vec<Vec<BigRational>> = a.iter().map(flatten_rat).collect();
    rows.extend(b.iter().map(flatten_rat));
    rows
}

fn int64_rows(rows: &[[i64; 24]; 16]) -> Vec<Vec<BigRational>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|&x| BigRational::from_integer(bi(x)))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::involution::{order_of, reflection_in, stabilizes};

    fn br(x: i64) -> BigRational {
        BigRational::from_integer(bi(x))
    }

    #[test]
    fn stored_vectors_have_norm_four() {
        let all: Vec<&[Array4x6]> = vec![
            &E_O1_BASIS,
            &E_O2_BASIS,
            &DIH6_16_N,
            &DIH8_16_0_N,
            &E_O4_BASIS,
            &DIH8_15_M,
            &DIH8_15_N_EXTRA,
            &DIH10_16_M,
            &DIH10_16_N,
            &DIH12_16_M,
            &DIH12_16_N,
        ];
        for table in all {
            for a in table {
                let sq: i32 = a.iter().flatten().map(|x| x * x).sum();
                assert_eq!(sq, 32, "stored case vector must have norm 4");
            }
        }
    }

    #[test]
    fn golay_self_checks_pass() {
        let code = golay();
        assert_eq!(code.codeword_count(), 4096);
        assert_eq!(code.octads().count(), 759);
        // The six columns form a sextet: every pair of columns is an octad.
        for c1 in 0..6u32 {
            for c2 in 0..c1 {
                let mask = (0xfu32 << (4 * c1)) | (0xfu32 << (4 * c2));
                assert!(code.contains(mask));
            }
        }
    }

    #[test]
    fn leech_certificate() {
        let ctx = leech();
        assert_eq!(ctx.lattice.rank(), 24);
        assert_eq!(ctx.lattice.determinant(), br(1));
        assert!(ctx.lattice.is_even());
        // The special generator has norm 4 and lies inside.
        let special: Vec<BigRational> = (0..24).map(|i| br(if i == 0 { -3 } else { 1 })).collect();
        assert_eq!(ctx.lattice.form().norm(&special), br(4));
        assert!(ctx.lattice.contains_vector(&special));
        // All Golay half-words lie inside.
        for &g in ctx.golay.generator_rows() {
            let v: Vec<BigRational> = (0..24)
                .map(|i| br(if g & (1 << i) != 0 { 2 } else { 0 }))
                .collect();
            assert!(ctx.lattice.contains_vector(&v));
        }
    }

    #[test]
    fn e_octads_match_stored_bases() {
        let ctx = leech();
        let o1 = ctx.golay.octad(OCTAD_1).unwrap();
        let e = e_octad(o1);
        assert_eq!(e.rank(), 8);
        assert_eq!(e.determinant(), br(256));
        assert!(e.is_even());
        assert!(ctx.lattice.contains(&e).unwrap());
        assert!(e.eq_lattice(&rows_to_lattice(&E_O1_BASIS)));
        assert!(
            e_octad(ctx.golay.octad(OCTAD_2).unwrap()).eq_lattice(&rows_to_lattice(&E_O2_BASIS))
        );
        assert!(
            e_octad(ctx.golay.octad(OCTAD_4).unwrap()).eq_lattice(&rows_to_lattice(&E_O4_BASIS))
        );
    }

    #[test]
    fn xi_is_an_involution_of_leech() {
        let ctx = leech();
        let x = xi();
        assert_eq!(order_of(&x, 5), Some(2));
        assert!(stabilizes(&x, &ctx.lattice));
    }

    #[test]
    fn eps_octad_equals_octad_reflection() {
        let ctx = leech();
        let frame = Frame::standard();
        let t = eps(&frame, OCTAD_1);
        assert!(stabilizes(&t, &ctx.lattice));
        let e = e_octad(ctx.golay.octad(OCTAD_1).unwrap());
        let r = reflection_in(&e);
        assert_eq!(t, r);
        // eps of the full set is -1; a non-codeword does not stabilize.
        let all = eps(&frame, 0x00ff_ffff);
        assert_eq!(all, Isometry::negation(leech_form()));
        let bad = eps(&frame, 0b1);
        assert!(!stabilizes(&bad, &ctx.lattice));
    }

    #[test]
    fn eps_eigenlattices_by_codeword_weight() {
        let ctx = leech();
        let frame = Frame::standard();
        // Octad: negated eigenlattice is the octad EE8.
        let t8 = eps(&frame, OCTAD_3);
        let minus8 = crate::involution::eigenlattice(&ctx.lattice, &t8, -1).unwrap();
        assert!(minus8.eq_lattice(&e_octad(ctx.golay.octad(OCTAD_3).unwrap())));
        // Complement of an octad: negated eigenlattice is the rank-16
        // annihilator (the BW16 realization).
        let t16 = eps(&frame, 0x00ff_ffff ^ OCTAD_3);
        let minus16 = crate::involution::eigenlattice(&ctx.lattice, &t16, -1).unwrap();
        assert!(minus16.eq_lattice(&barnes_wall_16()));
        // Dodecad: rank 12, determinant 2^12 (the doubled half-spin shape).
        let dodecad = ctx
            .golay
            .codewords
            .iter()
            .copied()
            .find(|m| m.count_ones() == 12)
            .unwrap();
        let t12 = eps(&frame, dodecad);
        assert!(crate::involution::stabilizes(&t12, &ctx.lattice));
        let minus12 = crate::involution::eigenlattice(&ctx.lattice, &t12, -1).unwrap();
        assert_eq!(minus12.rank(), 12);
        assert_eq!(minus12.determinant(), br(4096));
    }

    #[test]
    fn octad_pairs_for_order_two_cases() {
        let code = golay();
        let (o, o0) = dih4_octad_pair(&code, 0);
        assert_eq!(o.intersection_size(&o0), 0);
        let (_, o2) = dih4_octad_pair(&code, 2);
        assert_eq!(o.intersection_size(&o2), 2);
        let (_, o4) = dih4_octad_pair(&code, 4);
        assert_eq!(o.intersection_size(&o4), 4);
    }

    #[test]
    fn case_pairs_live_in_leech() {
        let ctx = leech();
        for name in CaseName::ALL {
            let (m, n) = case_data_in(&ctx, name).expect("case data");
            assert_eq!(m.rank(), 8, "{}", name.as_str());
            assert_eq!(n.rank(), 8, "{}", name.as_str());
            assert_eq!(m.determinant(), br(256), "{}", name.as_str());
            assert_eq!(n.determinant(), br(256), "{}", name.as_str());
        }
    }
}
