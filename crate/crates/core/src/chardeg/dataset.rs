//! The embedded tables: sporadic rows, Lie-type family rows, small-case
//! values and character-row fixtures.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::CharDegError;

const RAW: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/prop21_tables.json"));
const CHECKSUM: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/prop21_tables.json.sha256"));

/// The dataset text exactly as shipped.
pub fn raw_tables() -> &'static str {
    RAW
}

pub fn sha256_hex(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// Parses `text` after checking it against `expected_sha256`.
pub fn load_tables_checked(text: &str, expected_sha256: &str) -> Result<Tables, CharDegError> {
    let found = sha256_hex(text);
    let expected = expected_sha256.trim();
    if found != expected {
        return Err(CharDegError::Checksum {
            expected: expected.to_string(),
            found,
        });
    }
    serde_json::from_str(text).map_err(|e| CharDegError::Dataset(e.to_string()))
}

/// The embedded dataset, checksum verified.
pub fn tables() -> Result<Tables, CharDegError> {
    load_tables_checked(RAW, CHECKSUM)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Tables {
    pub version: u32,
    pub constants: Constants,
    pub sporadic: Vec<SporadicRow>,
    pub exceptional: Vec<FamilyRow>,
    pub exceptional_points: Vec<PointRow>,
    pub classical: Vec<FamilyRow>,
    pub psl2_exceptional: Vec<Psl2SmallRow>,
    pub psl2_tight: Psl2Tight,
    pub psl3_4: Psl34,
    pub alternating: Vec<AltRow>,
    pub fixtures: Fixtures,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Constants {
    pub mu: MuConstant,
    pub lambda: LambdaConstant,
}

/// `coef · ln(num) / ln(base)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MuConstant {
    pub coef: u64,
    pub num: u64,
    pub base: u64,
    pub approx: String,
    pub paper_location: String,
}

/// `base^(1/root)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LambdaConstant {
    pub base: u64,
    pub root: u64,
    pub approx: String,
    pub paper_location: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SporadicRow {
    pub name: String,
    #[serde(with = "decimal")]
    pub s_aut: BigUint,
    #[serde(with = "decimal")]
    pub b: BigUint,
    pub paper_location: String,
}

/// `(Σ coeffs[i]·n^i) / den`, integral for every admissible rank `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankPoly {
    pub coeffs: Vec<i64>,
    pub den: i64,
}

impl RankPoly {
    pub fn eval(&self, n: u64) -> i64 {
        let n = n as i64;
        let total: i64 = self.coeffs.iter().rev().fold(0, |acc, &c| acc * n + c);
        total / self.den
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RankVar {
    #[serde(rename = "n")]
    N,
}

/// A literal or the rank `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RankParam {
    Const(u64),
    Rank(RankVar),
}

impl RankParam {
    pub fn eval(&self, n: u64) -> u64 {
        match self {
            RankParam::Const(c) => *c,
            RankParam::Rank(_) => n,
        }
    }
}

/// `gcd(k, q^q_exp + offset)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GcdExpr {
    pub k: RankParam,
    pub q_exp: RankParam,
    pub offset: i64,
}

impl GcdExpr {
    pub fn eval(&self, q: u64, n: u64) -> u64 {
        let k = self.k.eval(n);
        // q^e + offset mod k without overflow
        let e = self.q_exp.eval(n);
        let mut r = 1u64 % k;
        for _ in 0..e {
            r = r * (q % k) % k;
        }
        let r = (r as i64 + self.offset).rem_euclid(k as i64) as u64;
        num_integer::gcd(k, r)
    }

    /// Largest value over all `q`, for fixed rank.
    pub fn max(&self, n: u64) -> u64 {
        self.k.eval(n)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conditions {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub p_odd: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f_odd_min: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q_min: Option<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub q_exclude: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_min: Option<u64>,
    /// Excluded `(n, q)` pairs.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub exclude: Vec<(u64, u64)>,
}

impl Conditions {
    pub fn admits(&self, p: u64, f: u32, n: u64) -> bool {
        let q = p.pow(f);
        self.p.is_none_or(|want| want == p)
            && (!self.p_odd || p % 2 == 1)
            && self.f_odd_min.is_none_or(|m| f >= m && f % 2 == 1)
            && self.q_min.is_none_or(|m| q >= m)
            && !self.q_exclude.contains(&q)
            && !self.exclude.contains(&(n, q))
    }

    pub fn has_rank(&self) -> bool {
        self.n_min.is_some()
    }
}

/// A Lie-type family: proper subgroups below `q^m_exp / m_gcd`, outer
/// automorphisms at most `out_coef · f · out_gcd`, Steinberg degree
/// `q^st_exp`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilyRow {
    pub name: String,
    pub label: String,
    pub m_exp: RankPoly,
    pub m_gcd: Option<GcdExpr>,
    pub out_coef: u64,
    pub out_gcd: Option<GcdExpr>,
    pub st_exp: RankPoly,
    pub conditions: Conditions,
    pub paper_location: String,
}

/// A single group given by exact values.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PointRow {
    pub name: String,
    #[serde(with = "decimal")]
    pub m: BigUint,
    #[serde(with = "decimal")]
    pub out: BigUint,
    #[serde(with = "decimal")]
    pub st: BigUint,
    pub paper_location: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Psl2SmallRow {
    pub q: u64,
    pub s_aut: u64,
    pub degrees: [u64; 3],
    pub rhs_lower: u64,
    pub paper_location: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Psl2Tight {
    pub q: u64,
    pub lhs: u64,
    pub product: u64,
    pub s_aut: u64,
    pub paper_location: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Psl34 {
    pub s_aut: u64,
    pub b: u64,
    pub paper_location: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AltRow {
    pub n: u64,
    pub b: u64,
    pub paper_location: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Fixtures {
    pub psl2_16_rows: FixtureRows,
    pub psl2_8_rows: FixtureRows,
}

/// Character-table rows kept verbatim as strings.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FixtureRows {
    pub paper_location: String,
    pub rows: Vec<Vec<String>>,
}

mod decimal {
    use num_bigint::BigUint;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(|_| D::Error::custom(format!("bad integer {text:?}")))
    }
}
