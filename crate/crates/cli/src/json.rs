//! JSON models for the CLI: the lattice file format, pair files, and the
//! report shapes emitted by the subcommands.
//!
//! Rationals are serialized as `"p"` or `"p/q"` strings (both accepted on
//! input); bases are integer row matrices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use latcore::exactmat::{IntMatrix, RatMatrix};
use latcore::lattice::{Form, FormKind, Lattice};
use latcore::verify::{
    CaseResult, ContainmentReport, PropertyResult, ScanReport, SlowReport, VerifySummary,
};
use latcore::DihedralReport;

pub fn rational_to_string(r: &BigRational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| format!("bad numerator in {:?}", s))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| format!("bad denominator in {:?}", s))?;
        if d.is_zero_denominator() {
            return Err(format!("zero denominator in {:?}", s));
        }
        Ok(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().map_err(|_| format!("bad integer {:?}", s))?;
        Ok(BigRational::from_integer(n))
    }
}

trait ZeroDen {
    fn is_zero_denominator(&self) -> bool;
}

impl ZeroDen for BigInt {
    fn is_zero_denominator(&self) -> bool {
        use num_traits::Zero;
        self.is_zero()
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FormJson {
    ScaledIdentity { num: i64, den: i64 },
    Gram { matrix: Vec<Vec<String>> },
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct LatticeJson {
    pub ambient_dim: usize,
    pub form: FormJson,
    pub basis: Vec<Vec<i64>>,
}

impl LatticeJson {
    pub fn from_lattice(lattice: &Lattice) -> Result<Self, String> {
        // The file format carries integer bases; lattices with fractional
        // coordinates are emitted in cleared coordinates (same Gram).
        let cleared = lattice.denominator_cleared();
        let l = &cleared;
        let (num, den) = l.scaled_basis();
        if den != &BigInt::from(1) {
            return Err("lattice basis is not integral in ambient coordinates".into());
        }
        let basis = (0..num.rows())
            .map(|r| {
                num.row(r)
                    .iter()
                    .map(|x| {
                        x.to_i64()
                            .ok_or_else(|| "basis entry overflows i64".to_string())
                    })
                    .collect::<Result<Vec<i64>, String>>()
            })
            .collect::<Result<Vec<_>, String>>()?;
        let form = match l.form().kind() {
            FormKind::ScaledIdentity(q) => FormJson::ScaledIdentity {
                num: q.numer().to_i64().ok_or("form scale overflows i64")?,
                den: q.denom().to_i64().ok_or("form scale overflows i64")?,
            },
            FormKind::Gram(g) => FormJson::Gram {
                matrix: (0..g.rows())
                    .map(|r| g.row(r).iter().map(rational_to_string).collect())
                    .collect(),
            },
        };
        Ok(LatticeJson {
            ambient_dim: l.ambient_dim(),
            form,
            basis,
        })
    }

    pub fn to_lattice(&self) -> Result<Lattice, String> {
        let form = match &self.form {
            FormJson::ScaledIdentity { num, den } => {
                if *den == 0 || *num <= 0 {
                    return Err("form scale must be a positive rational".into());
                }
                Form::scaled_identity(
                    self.ambient_dim,
                    BigRational::new(BigInt::from(*num), BigInt::from(*den)),
                )
            }
            FormJson::Gram { matrix } => {
                if matrix.len() != self.ambient_dim
                    || matrix.iter().any(|r| r.len() != self.ambient_dim)
                {
                    return Err("gram matrix dimensions do not match ambient_dim".into());
                }
                let mut g = RatMatrix::zero(self.ambient_dim, self.ambient_dim);
                for (r, row) in matrix.iter().enumerate() {
                    for (c, s) in row.iter().enumerate() {
                        *g.at_mut(r, c) = parse_rational(s)?;
                    }
                }
                if !g.is_symmetric() {
                    return Err("gram matrix must be symmetric".into());
                }
                Form::gram(g)
            }
        };
        if self.basis.iter().any(|r| r.len() != self.ambient_dim) {
            return Err("basis rows must have ambient_dim entries".into());
        }
        let rows = IntMatrix::from_rows(
            self.basis
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        );
        Ok(Lattice::from_int_generators(form, rows))
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct PairJson {
    pub m: LatticeJson,
    pub n: LatticeJson,
}

#[derive(Serialize, Clone, Debug)]
pub struct DihedralReportJson {
    pub is_integral: bool,
    pub is_rootless: bool,
    pub rank: usize,
    pub product_order: usize,
    pub dihedral_order: usize,
    pub det: String,
    pub smith: Vec<String>,
    pub f_rank: usize,
    pub f_det: String,
    pub f_smith: Vec<String>,
    pub f_label: Option<String>,
    pub inputs_ee8: (bool, bool),
    pub degenerate_equal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_sha256: Option<String>,
}

impl DihedralReportJson {
    pub fn from_report(r: &DihedralReport, input_sha256: Option<String>) -> Self {
        DihedralReportJson {
            is_integral: r.is_integral,
            is_rootless: r.is_rootless,
            rank: r.rank,
            product_order: r.product_order,
            dihedral_order: r.dihedral_order,
            det: rational_to_string(&r.det),
            smith: r.smith.iter().map(|x| x.to_string()).collect(),
            f_rank: r.f_rank,
            f_det: rational_to_string(&r.f_det),
            f_smith: r.f_smith.iter().map(|x| x.to_string()).collect(),
            f_label: r.f_label.clone(),
            inputs_ee8: r.inputs_ee8,
            degenerate_equal: r.degenerate_equal,
            input_sha256,
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct CaseResultJson {
    pub name: String,
    pub pass: bool,
    pub gram_match: bool,
    pub integral: bool,
    pub rootless: bool,
    pub rank: usize,
    pub rank_expected: usize,
    pub product_order: usize,
    pub product_order_expected: usize,
    pub det: String,
    pub smith: Vec<String>,
    pub smith_expected: Vec<String>,
    pub f_label: Option<String>,
}

impl CaseResultJson {
    pub fn from_result(c: &CaseResult) -> Self {
        CaseResultJson {
            name: c.name.clone(),
            pass: c.pass,
            gram_match: c.gram_match,
            integral: c.integral,
            rootless: c.rootless,
            rank: c.rank_computed,
            rank_expected: c.rank_expected,
            product_order: c.product_order_computed,
            product_order_expected: c.product_order_expected,
            det: rational_to_string(&c.det),
            smith: c.smith_computed.iter().map(|x| x.to_string()).collect(),
            smith_expected: c.smith_expected.iter().map(|x| x.to_string()).collect(),
            f_label: c.f_label.clone(),
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct PropertyJson {
    pub name: String,
    pub pass: bool,
}

impl PropertyJson {
    pub fn from_result(p: &PropertyResult) -> Self {
        PropertyJson {
            name: p.name.clone(),
            pass: p.pass,
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct ContainmentJson {
    pub pass: bool,
    pub dih12_sub_order: usize,
    pub dih12_sub_f: Option<String>,
    pub dih8_sub_order: usize,
    pub dih8_sub_f_rank: usize,
}

impl ContainmentJson {
    pub fn from_report(t: &ContainmentReport) -> Self {
        ContainmentJson {
            pass: t.pass,
            dih12_sub_order: t.dih12_sub_order,
            dih12_sub_f: t.dih12_sub_f.clone(),
            dih8_sub_order: t.dih8_sub_order,
            dih8_sub_f_rank: t.dih8_sub_f_rank,
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct ScanJson {
    pub classes: usize,
    pub singular_classes: usize,
    pub odd_integral_classes: usize,
    pub all_singular_have_roots: bool,
    pub base_rootless: bool,
    pub pass: bool,
}

impl ScanJson {
    pub fn from_report(s: &ScanReport) -> Self {
        ScanJson {
            classes: s.classes,
            singular_classes: s.singular_classes,
            odd_integral_classes: s.odd_integral_classes,
            all_singular_have_roots: s.all_singular_have_roots,
            base_rootless: s.base_rootless,
            pass: s.pass,
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct SlowJson {
    pub leech_kissing: usize,
    pub kissing_ok: bool,
    pub scan: ScanJson,
    pub dih10_blocks_ok: bool,
    pub dih10_tensor_ok: bool,
    pub m4_pattern_ok: bool,
    pub pass: bool,
}

impl SlowJson {
    pub fn from_report(s: &SlowReport) -> Self {
        SlowJson {
            leech_kissing: s.leech_kissing,
            kissing_ok: s.kissing_ok,
            scan: ScanJson::from_report(&s.scan),
            dih10_blocks_ok: s.dih10_blocks_ok,
            dih10_tensor_ok: s.dih10_tensor_ok,
            m4_pattern_ok: s.m4_pattern_ok,
            pass: s.pass,
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct SummaryJson {
    pub all_pass: bool,
    pub cases: Vec<CaseResultJson>,
    pub containments: ContainmentJson,
    pub bw16_identity: bool,
    pub named_certificates_ok: bool,
    pub properties: Vec<PropertyJson>,
    pub hermite_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub slow: Option<SlowJson>,
}

impl SummaryJson {
    pub fn from_summary(s: &VerifySummary) -> Self {
        SummaryJson {
            all_pass: s.all_pass,
            cases: s.cases.iter().map(CaseResultJson::from_result).collect(),
            containments: ContainmentJson::from_report(&s.containments),
            bw16_identity: s.bw16_identity,
            named_certificates_ok: s.named_certificates_ok,
            properties: s.properties.iter().map(PropertyJson::from_result).collect(),
            hermite_ok: s.hermite_ok,
            slow: s.slow.as_ref().map(SlowJson::from_report),
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct CertificateJson {
    pub rank: usize,
    pub det: String,
    pub integral: bool,
    pub even: bool,
    pub min_norm: String,
    pub smith: Vec<String>,
}

#[derive(Serialize, Clone, Debug)]
pub struct NamedLatticeJson {
    pub name: String,
    pub certificate: CertificateJson,
    pub lattice: LatticeJson,
}

#[derive(Serialize, Clone, Debug)]
pub struct SnfJson {
    pub rank: usize,
    pub det: String,
    pub divisors: Vec<String>,
}

#[derive(Serialize, Clone, Debug)]
pub struct NormSliceJson {
    pub norm: String,
    pub count: usize,
    pub vectors: Vec<Vec<String>>,
}

pub fn signed_i64(x: &BigInt) -> String {
    x.to_string()
}
