//! Closed-form sparing numbers of coronas.
//!
//! Every theorem is evaluated in two variants. `Printed` is the formula as it
//! is typeset, including its case guards, even where it is visibly wrong (a
//! non-integer value, a variable used twice). `Derived` re-adds the case sums
//! that the proofs build the formula from. The two only differ for `PP` and
//! `CP`; for every other theorem the proof arithmetic simplifies to the
//! printed expression and both variants return the same value.
//!
//! Values are exact rationals so that non-integer results are detected
//! instead of being rounded away.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub type Value = Ratio<i64>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),
    #[error("unknown variant `{0}` (expected printed or derived)")]
    UnknownVariant(String),
    #[error("{theorem} takes {expected} parameters ({names}), got {found}")]
    Arity {
        theorem: TheoremId,
        expected: usize,
        names: String,
        found: usize,
    },
    #[error("{theorem}: {message}")]
    Domain {
        theorem: TheoremId,
        message: &'static str,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    PP,
    CP,
    PC,
    CC,
    KK,
    PK,
    KP,
    CK,
    KC,
    BicliqueBiclique,
    BipartiteBipartite,
    OddCycleBip,
    BipOddCycle,
    KBip,
    BipK,
}

impl TheoremId {
    pub const ALL: [TheoremId; 15] = [
        TheoremId::PP,
        TheoremId::CP,
        TheoremId::PC,
        TheoremId::CC,
        TheoremId::KK,
        TheoremId::PK,
        TheoremId::KP,
        TheoremId::CK,
        TheoremId::KC,
        TheoremId::BicliqueBiclique,
        TheoremId::BipartiteBipartite,
        TheoremId::OddCycleBip,
        TheoremId::BipOddCycle,
        TheoremId::KBip,
        TheoremId::BipK,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::PP => "PP",
            TheoremId::CP => "CP",
            TheoremId::PC => "PC",
            TheoremId::CC => "CC",
            TheoremId::KK => "KK",
            TheoremId::PK => "PK",
            TheoremId::KP => "KP",
            TheoremId::CK => "CK",
            TheoremId::KC => "KC",
            TheoremId::BicliqueBiclique => "BicliqueBiclique",
            TheoremId::BipartiteBipartite => "BipartiteBipartite",
            TheoremId::OddCycleBip => "OddCycleBip",
            TheoremId::BipOddCycle => "BipOddCycle",
            TheoremId::KBip => "KBip",
            TheoremId::BipK => "BipK",
        }
    }

    pub fn info(self) -> &'static TheoremInfo {
        REGISTRY.iter().find(|t| t.id == self).unwrap()
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = FormulaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| FormulaError::UnknownTheorem(s.to_string()))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for TheoremId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Printed,
    Derived,
}

impl FromStr for Variant {
    type Err = FormulaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "printed" => Ok(Variant::Printed),
            "derived" => Ok(Variant::Derived),
            other => Err(FormulaError::UnknownVariant(other.to_string())),
        }
    }
}

/// One row of the theorem table.
#[derive(Debug, Clone, Serialize)]
pub struct TheoremInfo {
    pub id: TheoremId,
    /// The product the theorem is about.
    pub product: &'static str,
    /// The printed closed form(s), case by case.
    pub anchor: &'static str,
    pub params: &'static [&'static str],
    /// Variants that can give different values.
    pub variants: &'static [Variant],
}

const BOTH: &[Variant] = &[Variant::Printed, Variant::Derived];
const PRINTED: &[Variant] = &[Variant::Printed];

static REGISTRY: [TheoremInfo; 15] = [
    TheoremInfo {
        id: TheoremId::PP,
        product: "P_m ⊙ P_n",
        anchor: "m,n odd: (m+1)(3n+1)/4; m odd,n even: 3(m+1)n/4; m even,n odd: (3mn+2n+m)/4; m,n even: n(3m+4)/4",
        params: &["m", "n"],
        variants: BOTH,
    },
    TheoremInfo {
        id: TheoremId::CP,
        product: "C_m ⊙ P_n",
        anchor: "m,n odd: 3mn/4; m odd,n even: m(3n+1)/4; m even,n odd: 1+m(3m-1)/4; m,n even: [n(3m+1)+(m+5)]/4",
        params: &["m", "n"],
        variants: BOTH,
    },
    TheoremInfo {
        id: TheoremId::PC,
        product: "P_n ⊙ C_m",
        anchor: "m,n odd: 3(m+1)(n+1)/4; m even,n odd: 3m(n+1)/4; m odd,n even: [3n(m+1)+2(m+3)]/4; m,n even: m(3n+2)/4",
        params: &["n", "m"],
        variants: PRINTED,
    },
    TheoremInfo {
        id: TheoremId::CC,
        product: "C_m ⊙ C_n",
        anchor: "m,n even: 3mn/4; m even,n odd: 3m(n+1)/4; m odd,n even: 1+(3m-1)n/4; m,n odd: 2+(3m-1)(n+1)/4",
        params: &["m", "n"],
        variants: PRINTED,
    },
    TheoremInfo {
        id: TheoremId::KK,
        product: "K_m ⊙ K_n",
        anchor: "[(m-1)(m-2)+mn(n-1)]/2",
        params: &["m", "n"],
        variants: PRINTED,
    },
    TheoremInfo {
        id: TheoremId::PK,
        product: "P_m ⊙ K_n",
        anchor: "n(n-1)(m+1)/2",
        params: &["m", "n"],
        variants: PRINTED,
    },
    TheoremInfo {
        id: TheoremId::KP,
        product: "K_n ⊙ P_m",
        anchor: "m odd: [(n-1)^2+m(n+1)]/2; m even: [(n-1)(n-2)+m(n+1)]/2",
        params: &["n", "m"],
        variants: PRINTED,
    },
    TheoremInfo {
        id: TheoremId::CK,
        product: "C_m ⊙ K_n",
        anchor: "mn(n-1)/2",
        params: &["m", "n"],
        variants: PRINTED,
    },
    TheoremInfo {
        id: TheoremId::KC,
        product: "K_n ⊙ C_m",
        anchor: "m odd: [(n-1)^2+m(n+1)]/2; m even: [(n-1)(n-2)+m(n+1)]/2",
        params: &["n", "m"],
        variants: PRINTED,
    },
    TheoremInfo {
        id: TheoremId::BicliqueBiclique,
        product: "K_{m1,n1} ⊙ K_{m2,n2}, m_i <= n_i",
        anchor: "m2(m1n2+n1)",
        params: &["m1", "n1", "m2", "n2"],
        variants: PRINTED,
    },
    TheoremInfo {
        id: TheoremId::BipartiteBipartite,
        product: "G1(U1,V1,E1) ⊙ G2(U2,V2,E2), |U_i| <= |V_i|",
        anchor: "|U1||E2|+|V1||U2|",
        params: &["u1", "v1", "u2", "v2", "e2"],
        variants: PRINTED,
    },
    TheoremInfo {
        id: TheoremId::OddCycleBip,
        product: "C_n ⊙ G, n odd, G bipartite with parts r <= s and q edges",
        anchor: "[(n-1)q+(n+1)r]/2",
        params: &["n", "r", "s", "q"],
        variants: PRINTED,
    },
    TheoremInfo {
        id: TheoremId::BipOddCycle,
        product: "G ⊙ C_n, n odd, G bipartite with parts r <= s and q edges",
        anchor: "[2rn+s(n+1)]/2",
        params: &["n", "r", "s", "q"],
        variants: PRINTED,
    },
    TheoremInfo {
        id: TheoremId::KBip,
        product: "K_n ⊙ G, G bipartite with parts r <= s and q edges",
        anchor: "[(n-1)(n-2)+2q+2r(n-1)]/2",
        params: &["n", "r", "s", "q"],
        variants: PRINTED,
    },
    TheoremInfo {
        id: TheoremId::BipK,
        product: "G ⊙ K_n, G bipartite with parts r <= s and q edges",
        anchor: "(n-1)[rn+s(n-2)]/2",
        params: &["n", "r", "s", "q"],
        variants: PRINTED,
    },
];

pub fn registry() -> &'static [TheoremInfo] {
    &REGISTRY
}

fn q(num: i64, den: i64) -> Value {
    Ratio::new(num, den)
}

fn even(x: i64) -> bool {
    x % 2 == 0
}

fn require(ok: bool, theorem: TheoremId, message: &'static str) -> Result<(), FormulaError> {
    if ok {
        Ok(())
    } else {
        Err(FormulaError::Domain { theorem, message })
    }
}

/// `P_m ⊙ P_n`, path lengths counted in edges.
pub fn phi_pp(m: i64, n: i64, variant: Variant) -> Result<Value, FormulaError> {
    require(m >= 1 && n >= 1, TheoremId::PP, "m, n >= 1")?;
    Ok(match (even(m), even(n), variant) {
        (false, false, _) => q((m + 1) * (3 * n + 1), 4),
        (false, true, _) => q(3 * (m + 1) * n, 4),
        (true, false, Variant::Printed) => q(3 * m * n + 2 * n + m, 4),
        // m/2 uniform copies of n edges each, plus (m+2)/2 copies with
        // (n+1)/2 mono join edges
        (true, false, Variant::Derived) => q(m, 2) * n + q(m + 2, 2) * q(n + 1, 2),
        (true, true, _) => q(n * (3 * m + 4), 4),
    })
}

/// `C_m ⊙ P_n`.
///
/// The printed guards pair the formulas with the wrong parities; the derived
/// variant follows the proof's cases instead.
pub fn phi_cp(m: i64, n: i64, variant: Variant) -> Result<Value, FormulaError> {
    require(m >= 3 && n >= 1, TheoremId::CP, "m >= 3, n >= 1")?;
    Ok(match variant {
        Variant::Printed => match (even(m), even(n)) {
            (false, false) => q(3 * m * n, 4),
            (false, true) => q(m * (3 * n + 1), 4),
            (true, false) => Value::from(1) + q(m * (3 * m - 1), 4),
            (true, true) => q(n * (3 * m + 1) + (m + 5), 4),
        },
        Variant::Derived => match (even(m), even(n)) {
            (true, true) => q(3 * m * n, 4),
            (true, false) => q(m * (3 * n + 1), 4),
            (false, true) => Value::from(1) + q(n * (3 * m - 1), 4),
            (false, false) => Value::from(1) + q(m - 1, 2) * n + q(m + 1, 2) * q(n + 1, 2),
        },
    })
}

/// `P_n ⊙ C_m`.
pub fn phi_pc(n: i64, m: i64, _variant: Variant) -> Result<Value, FormulaError> {
    require(n >= 1 && m >= 3, TheoremId::PC, "n >= 1, m >= 3")?;
    Ok(match (even(m), even(n)) {
        (false, false) => q(3 * (m + 1) * (n + 1), 4),
        (true, false) => q(3 * m * (n + 1), 4),
        (false, true) => q(3 * n * (m + 1) + 2 * (m + 3), 4),
        (true, true) => q(m * (3 * n + 2), 4),
    })
}

/// `C_m ⊙ C_n`.
pub fn phi_cc(m: i64, n: i64, _variant: Variant) -> Result<Value, FormulaError> {
    require(m >= 3 && n >= 3, TheoremId::CC, "m, n >= 3")?;
    Ok(match (even(m), even(n)) {
        (true, true) => q(3 * m * n, 4),
        (true, false) => q(3 * m * (n + 1), 4),
        (false, true) => Value::from(1) + q((3 * m - 1) * n, 4),
        (false, false) => Value::from(2) + q((3 * m - 1) * (n + 1), 4),
    })
}

/// `K_m ⊙ K_n`.
pub fn phi_kk(m: i64, n: i64) -> Result<Value, FormulaError> {
    require(m >= 1 && n >= 1, TheoremId::KK, "m, n >= 1")?;
    Ok(q((m - 1) * (m - 2) + m * n * (n - 1), 2))
}

/// `P_m ⊙ K_n`.
pub fn phi_pk(m: i64, n: i64) -> Result<Value, FormulaError> {
    require(m >= 1 && n >= 1, TheoremId::PK, "m, n >= 1")?;
    Ok(q(n * (n - 1) * (m + 1), 2))
}

/// `K_n ⊙ P_m`.
pub fn phi_kp(n: i64, m: i64) -> Result<Value, FormulaError> {
    require(n >= 1 && m >= 1, TheoremId::KP, "n, m >= 1")?;
    Ok(complete_then_sparse(n, m))
}

/// `C_m ⊙ K_n`.
pub fn phi_ck(m: i64, n: i64) -> Result<Value, FormulaError> {
    require(m >= 3 && n >= 1, TheoremId::CK, "m >= 3, n >= 1")?;
    Ok(q(m * n * (n - 1), 2))
}

/// `K_n ⊙ C_m`.
pub fn phi_kc(n: i64, m: i64) -> Result<Value, FormulaError> {
    require(n >= 1 && m >= 3, TheoremId::KC, "n >= 1, m >= 3")?;
    Ok(complete_then_sparse(n, m))
}

// K_n ⊙ P_m and K_n ⊙ C_m share one printed expression.
fn complete_then_sparse(n: i64, m: i64) -> Value {
    if even(m) {
        q((n - 1) * (n - 2) + m * (n + 1), 2)
    } else {
        q((n - 1) * (n - 1) + m * (n + 1), 2)
    }
}

/// `K_{m1,n1} ⊙ K_{m2,n2}` with `m_i <= n_i`.
pub fn phi_biclique(m1: i64, n1: i64, m2: i64, n2: i64) -> Result<Value, FormulaError> {
    let id = TheoremId::BicliqueBiclique;
    require(m1 >= 1 && m2 >= 1, id, "part sizes must be >= 1")?;
    require(m1 <= n1 && m2 <= n2, id, "requires m_i <= n_i")?;
    Ok(Value::from(m2 * (m1 * n2 + n1)))
}

/// Bipartite `G1 ⊙ G2` given `|U1|, |V1|, |U2|, |V2|, |E2|` with `|U_i| <= |V_i|`.
pub fn phi_bipartite(u1: i64, v1: i64, u2: i64, v2: i64, e2: i64) -> Result<Value, FormulaError> {
    let id = TheoremId::BipartiteBipartite;
    require(u1 >= 1 && u2 >= 1, id, "part sizes must be >= 1")?;
    require(u1 <= v1 && u2 <= v2, id, "requires |U_i| <= |V_i|")?;
    require(
        e2 >= 1 && e2 <= u2 * v2,
        id,
        "requires 1 <= |E2| <= |U2||V2|",
    )?;
    Ok(Value::from(u1 * e2 + v1 * u2))
}

fn check_bipartite_stats(id: TheoremId, r: i64, s: i64, e: i64) -> Result<(), FormulaError> {
    require(r >= 1 && r <= s, id, "requires 1 <= r <= s")?;
    require(e >= 1 && e <= r * s, id, "requires 1 <= q <= rs")
}

/// `C_n ⊙ G` (`cycle_first`) or `G ⊙ C_n` for an odd cycle and a bipartite
/// `G` with parts `r <= s` and `q` edges.
pub fn phi_oddcycle_bip(
    n: i64,
    r: i64,
    s: i64,
    e: i64,
    cycle_first: bool,
) -> Result<Value, FormulaError> {
    let id = if cycle_first {
        TheoremId::OddCycleBip
    } else {
        TheoremId::BipOddCycle
    };
    require(n >= 3 && !even(n), id, "n must be an odd cycle length")?;
    check_bipartite_stats(id, r, s, e)?;
    Ok(if cycle_first {
        q((n - 1) * e + (n + 1) * r, 2)
    } else {
        q(2 * r * n + s * (n + 1), 2)
    })
}

/// `K_n ⊙ G` (`complete_first`) or `G ⊙ K_n` for a bipartite `G` with parts
/// `r <= s` and `q` edges.
pub fn phi_k_bip(
    n: i64,
    r: i64,
    s: i64,
    e: i64,
    complete_first: bool,
) -> Result<Value, FormulaError> {
    let id = if complete_first {
        TheoremId::KBip
    } else {
        TheoremId::BipK
    };
    require(n >= 1, id, "n >= 1")?;
    check_bipartite_stats(id, r, s, e)?;
    Ok(if complete_first {
        q((n - 1) * (n - 2) + 2 * e + 2 * r * (n - 1), 2)
    } else {
        q((n - 1) * (r * n + s * (n - 2)), 2)
    })
}

/// Evaluates a theorem with positional parameters in registry order.
pub fn evaluate(id: TheoremId, params: &[i64], variant: Variant) -> Result<Value, FormulaError> {
    let info = id.info();
    if params.len() != info.params.len() {
        return Err(FormulaError::Arity {
            theorem: id,
            expected: info.params.len(),
            names: info.params.join(", "),
            found: params.len(),
        });
    }
    let p = params;
    match id {
        TheoremId::PP => phi_pp(p[0], p[1], variant),
        TheoremId::CP => phi_cp(p[0], p[1], variant),
        TheoremId::PC => phi_pc(p[0], p[1], variant),
        TheoremId::CC => phi_cc(p[0], p[1], variant),
        TheoremId::KK => phi_kk(p[0], p[1]),
        TheoremId::PK => phi_pk(p[0], p[1]),
        TheoremId::KP => phi_kp(p[0], p[1]),
        TheoremId::CK => phi_ck(p[0], p[1]),
        TheoremId::KC => phi_kc(p[0], p[1]),
        TheoremId::BicliqueBiclique => phi_biclique(p[0], p[1], p[2], p[3]),
        TheoremId::BipartiteBipartite => phi_bipartite(p[0], p[1], p[2], p[3], p[4]),
        TheoremId::OddCycleBip => phi_oddcycle_bip(p[0], p[1], p[2], p[3], true),
        TheoremId::BipOddCycle => phi_oddcycle_bip(p[0], p[1], p[2], p[3], false),
        TheoremId::KBip => phi_k_bip(p[0], p[1], p[2], p[3], true),
        TheoremId::BipK => phi_k_bip(p[0], p[1], p[2], p[3], false),
    }
}

/// How a closed-form value relates to the exact sparing number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Status {
    ExactMatch,
    /// Above the optimum: a valid labeling exists but is not the best one.
    UpperBound,
    /// Below the optimum, which no valid labeling can reach.
    Underestimate,
    NonInteger,
    NotCompared,
}

impl Status {
    pub const ALL: [Status; 5] = [
        Status::ExactMatch,
        Status::UpperBound,
        Status::Underestimate,
        Status::NonInteger,
        Status::NotCompared,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Status::ExactMatch => "ExactMatch",
            Status::UpperBound => "UpperBound",
            Status::Underestimate => "Underestimate",
            Status::NonInteger => "NonInteger",
            Status::NotCompared => "NotCompared",
        }
    }

    /// Statuses that mean the printed claim is wrong.
    pub fn is_failure(self) -> bool {
        matches!(self, Status::Underestimate | Status::NonInteger)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Non-integer values take precedence; otherwise the value is compared with
/// the oracle when there is one.
pub fn classify(value: Value, oracle: Option<u64>) -> Status {
    if !value.is_integer() {
        return Status::NonInteger;
    }
    let Some(oracle) = oracle else {
        return Status::NotCompared;
    };
    match value.to_integer().cmp(&(oracle as i64)) {
        std::cmp::Ordering::Equal => Status::ExactMatch,
        std::cmp::Ordering::Greater => Status::UpperBound,
        std::cmp::Ordering::Less => Status::Underestimate,
    }
}

/// Exact decimal text when the value has one (all values here have
/// denominator 1, 2 or 4), `p/q` otherwise.
pub fn format_value(v: &Value) -> String {
    if v.is_integer() {
        return v.to_integer().to_string();
    }
    let (mut den, mut twos, mut fives) = (*v.denom(), 0u32, 0u32);
    while den % 2 == 0 {
        den /= 2;
        twos += 1;
    }
    while den % 5 == 0 {
        den /= 5;
        fives += 1;
    }
    if den != 1 {
        return format!("{}/{}", v.numer(), v.denom());
    }
    let digits = twos.max(fives);
    let scaled = v * Value::from(10i64.pow(digits));
    let n = scaled.to_integer();
    let sign = if n < 0 { "-" } else { "" };
    let n = n.unsigned_abs();
    let unit = 10u64.pow(digits);
    format!(
        "{sign}{}.{:0width$}",
        n / unit,
        n % unit,
        width = digits as usize
    )
}

pub(crate) fn serialize_value<S: Serializer>(v: &Value, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_value(v))
}

pub(crate) fn serialize_opt_value<S: Serializer>(
    v: &Option<Value>,
    s: S,
) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_some(&format_value(v)),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaEvaluation {
    pub theorem: TheoremId,
    pub params: Vec<(String, i64)>,
    #[serde(serialize_with = "serialize_value")]
    pub as_printed: Value,
    /// Present only where it differs from `as_printed`.
    #[serde(serialize_with = "serialize_opt_value")]
    pub proof_derived: Option<Value>,
    pub oracle: Option<u64>,
    /// Classification of `as_printed`.
    pub status: Status,
    /// Classification of `proof_derived`, when present.
    pub derived_status: Option<Status>,
}

impl FormulaEvaluation {
    pub fn new(id: TheoremId, params: &[i64], oracle: Option<u64>) -> Result<Self, FormulaError> {
        let as_printed = evaluate(id, params, Variant::Printed)?;
        let derived = evaluate(id, params, Variant::Derived)?;
        let proof_derived = (derived != as_printed).then_some(derived);
        Ok(FormulaEvaluation {
            theorem: id,
            params: id
                .info()
                .params
                .iter()
                .map(|s| s.to_string())
                .zip(params.iter().copied())
                .collect(),
            as_printed,
            proof_derived,
            oracle,
            status: classify(as_printed, oracle),
            derived_status: proof_derived.map(|d| classify(d, oracle)),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Variant::{Derived, Printed};

    fn v(x: i64) -> Value {
        Value::from(x)
    }

    #[test]
    fn pp_values() {
        assert_eq!(phi_pp(1, 1, Printed).unwrap(), v(2));
        assert_eq!(phi_pp(2, 1, Printed).unwrap(), q(5, 2));
        assert_eq!(phi_pp(2, 1, Derived).unwrap(), v(3));
        assert_eq!(phi_pp(2, 2, Printed).unwrap(), v(5));
        // (even m, odd n) is the only case where the variants differ
        assert_eq!(
            phi_pp(4, 3, Derived).unwrap() - phi_pp(4, 3, Printed).unwrap(),
            q(1, 2)
        );
        assert_eq!(
            phi_pp(3, 3, Derived).unwrap(),
            phi_pp(3, 3, Printed).unwrap()
        );
    }

    #[test]
    fn cp_values() {
        assert_eq!(phi_cp(3, 3, Printed).unwrap(), q(27, 4));
        assert_eq!(phi_cp(3, 3, Derived).unwrap(), v(8));
        assert_eq!(phi_cp(4, 2, Derived).unwrap(), v(6));
        assert_eq!(phi_cp(4, 3, Derived).unwrap(), v(10));
        // the printed (even, odd) case uses m twice
        assert_eq!(phi_cp(4, 1, Printed).unwrap(), v(12));
    }

    #[test]
    fn pc_cc_values() {
        assert_eq!(phi_pc(1, 3, Printed).unwrap(), v(6));
        assert_eq!(phi_pc(1, 4, Printed).unwrap(), v(6));
        assert_eq!(phi_pc(2, 4, Printed).unwrap(), v(8));
        assert_eq!(phi_cc(4, 4, Printed).unwrap(), v(12));
        assert_eq!(phi_cc(3, 3, Printed).unwrap(), v(10));
        assert_eq!(phi_cc(3, 4, Printed).unwrap(), v(9));
    }

    #[test]
    fn complete_values() {
        assert_eq!(phi_kk(2, 2).unwrap(), v(2));
        assert_eq!(phi_kk(3, 2).unwrap(), v(4));
        assert_eq!(phi_kk(3, 3).unwrap(), v(10));
        assert_eq!(phi_pk(1, 2).unwrap(), v(2));
        assert_eq!(phi_kp(2, 1).unwrap(), v(2));
        assert_eq!(phi_kp(3, 2).unwrap(), v(5));
        assert_eq!(phi_ck(3, 2).unwrap(), v(3));
        assert_eq!(phi_ck(4, 2).unwrap(), v(4));
        assert_eq!(phi_kc(2, 3).unwrap(), v(5));
    }

    #[test]
    fn bipartite_values() {
        assert_eq!(phi_biclique(1, 1, 1, 1).unwrap(), v(2));
        assert_eq!(phi_biclique(1, 2, 1, 1).unwrap(), v(3));
        assert_eq!(phi_bipartite(1, 2, 1, 1, 1).unwrap(), v(3));
        assert_eq!(phi_oddcycle_bip(3, 1, 1, 1, true).unwrap(), v(3));
        assert_eq!(phi_oddcycle_bip(3, 1, 1, 1, false).unwrap(), v(5));
        assert_eq!(phi_oddcycle_bip(5, 1, 2, 2, true).unwrap(), v(7));
        assert_eq!(phi_k_bip(2, 1, 1, 1, true).unwrap(), v(2));
        assert_eq!(phi_k_bip(1, 1, 1, 1, false).unwrap(), v(0));
        assert_eq!(phi_k_bip(2, 1, 1, 1, false).unwrap(), v(1));
        assert_eq!(phi_k_bip(3, 1, 2, 2, true).unwrap(), v(5));
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(
            phi_biclique(2, 1, 1, 1),
            Err(FormulaError::Domain {
                theorem: TheoremId::BicliqueBiclique,
                ..
            })
        ));
        assert!(phi_oddcycle_bip(4, 1, 1, 1, true).is_err());
        assert!(phi_oddcycle_bip(3, 2, 1, 1, false).is_err());
        assert!(phi_k_bip(3, 1, 2, 3, true).is_err());
        assert!(phi_cc(2, 3, Printed).is_err());
        assert!(phi_pp(0, 1, Printed).is_err());
        assert!(matches!(
            evaluate(TheoremId::KK, &[3], Printed),
            Err(FormulaError::Arity {
                expected: 2,
                found: 1,
                ..
            })
        ));
    }

    #[test]
    fn classification() {
        assert_eq!(classify(v(4), Some(4)), Status::ExactMatch);
        assert_eq!(classify(v(5), Some(4)), Status::UpperBound);
        assert_eq!(classify(v(3), Some(4)), Status::Underestimate);
        assert_eq!(classify(q(5, 2), Some(3)), Status::NonInteger);
        assert_eq!(classify(q(27, 4), Some(8)), Status::NonInteger);
        assert_eq!(classify(v(3), None), Status::NotCompared);
    }

    #[test]
    fn evaluation_record() {
        let e = FormulaEvaluation::new(TheoremId::PP, &[2, 1], Some(3)).unwrap();
        assert_eq!(e.status, Status::NonInteger);
        assert_eq!(e.proof_derived, Some(v(3)));
        assert_eq!(e.derived_status, Some(Status::ExactMatch));
        let e = FormulaEvaluation::new(TheoremId::CC, &[3, 3], Some(10)).unwrap();
        assert_eq!(e.status, Status::ExactMatch);
        assert_eq!(e.proof_derived, None);
        assert_eq!(e.derived_status, None);
        let json = serde_json::to_string(&e).unwrap();
        assert!(json.contains(r#""as_printed":"10""#), "{json}");
    }

    #[test]
    fn value_text() {
        assert_eq!(format_value(&v(7)), "7");
        assert_eq!(format_value(&q(5, 2)), "2.5");
        assert_eq!(format_value(&q(27, 4)), "6.75");
        assert_eq!(format_value(&q(-1, 4)), "-0.25");
        assert_eq!(format_value(&q(1, 3)), "1/3");
    }

    #[test]
    fn theorem_names_round_trip() {
        for id in TheoremId::ALL {
            assert_eq!(id.as_str().parse::<TheoremId>().unwrap(), id);
            assert_eq!(id.info().id, id);
        }
        assert_eq!("kk".parse::<TheoremId>().unwrap(), TheoremId::KK);
        assert!("XY".parse::<TheoremId>().is_err());
    }
}
