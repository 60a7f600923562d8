//! Invariant reports and their human and JSON renderings.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Signed;
use seifert_core::smale::smale_of_projection;
use seifert_core::SeifertSurfaceModel;
use serde::{Deserialize, Serialize};

/// Everything the CLI prints about one Seifert surface.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub label: String,
    pub rank: usize,
    #[serde(with = "json_int")]
    pub sigma: BigInt,
    #[serde(with = "json_int")]
    pub cup_square: BigInt,
    #[serde(with = "json_int")]
    pub hopf: BigInt,
    #[serde(with = "json_int")]
    pub haefliger: BigInt,
    #[serde(with = "json_int")]
    pub smale_of_projection: BigInt,
    pub even_form: bool,
}

impl InvariantReport {
    pub fn of(surface: &SeifertSurfaceModel) -> Self {
        InvariantReport {
            label: surface.label().to_owned(),
            rank: surface.rank(),
            sigma: BigInt::from(surface.signature()),
            cup_square: surface.cup_square(),
            hopf: surface.hopf_invariant(),
            haefliger: surface.haefliger_invariant(),
            smale_of_projection: smale_of_projection(surface),
            even_form: surface.form().is_even(),
        }
    }

    /// Checks the identities tying the fields together:
    /// `H = -e.e`, `Omega = -(sigma + H)/8`, `omega = (3 sigma - H)/2`.
    pub fn validate(&self) -> Result<(), String> {
        if self.hopf != -&self.cup_square {
            return Err(format!("hopf {} != -cup_square {}", self.hopf, self.cup_square));
        }
        let eight = BigInt::from(8);
        if -(&self.sigma + &self.hopf) != &self.haefliger * &eight {
            return Err(format!(
                "haefliger {} != -(sigma + hopf)/8 with sigma {} and hopf {}",
                self.haefliger, self.sigma, self.hopf
            ));
        }
        let twice: BigInt = &self.sigma * 3 - &self.hopf;
        if twice != &self.smale_of_projection * 2 {
            return Err(format!(
                "smale_of_projection {} != (3 sigma - hopf)/2 = {twice}/2",
                self.smale_of_projection
            ));
        }
        if BigInt::from(self.rank) < self.sigma.abs() {
            return Err(format!("|sigma| {} exceeds rank {}", self.sigma, self.rank));
        }
        Ok(())
    }
}

pub const COLUMNS: [&str; 8] = ["label", "rank", "sigma", "e.e", "H", "Omega", "omega_proj", "parity"];

/// Fixed-column text table, one row per report.
pub fn render_table(reports: &[InvariantReport]) -> String {
    let rows: Vec<[String; 8]> = reports
        .iter()
        .map(|r| {
            [
                r.label.clone(),
                r.rank.to_string(),
                r.sigma.to_string(),
                r.cup_square.to_string(),
                r.hopf.to_string(),
                r.haefliger.to_string(),
                r.smale_of_projection.to_string(),
                if r.even_form { "even" } else { "odd" }.to_owned(),
            ]
        })
        .collect();
    let mut widths = COLUMNS.map(|c| c.chars().count());
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &[String]| {
        let mut s = String::new();
        for (i, (cell, w)) in cells.iter().zip(widths).enumerate() {
            let pad = w - cell.chars().count();
            if i == 0 {
                let _ = write!(s, "{cell}{}", " ".repeat(pad));
            } else {
                let _ = write!(s, "  {}{cell}", " ".repeat(pad));
            }
        }
        out.push_str(s.trim_end());
        out.push('\n');
    };
    line(&COLUMNS.map(String::from));
    for row in &rows {
        line(row);
    }
    out
}

/// Serializes integers as JSON numbers when exactly representable in an
/// IEEE double (`|x| <= 2^53`) and as decimal strings otherwise. Accepts
/// either form when reading.
pub mod json_int {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::de::{self, Deserializer, Visitor};
    use serde::Serializer;
    use std::fmt;

    const SAFE: i64 = 1 << 53;

    pub fn to_value(x: &BigInt) -> serde_json::Value {
        match x.to_i64() {
            Some(i) if i.abs() <= SAFE => serde_json::Value::from(i),
            _ => serde_json::Value::from(x.to_string()),
        }
    }

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        match x.to_i64() {
            Some(i) if i.abs() <= SAFE => s.serialize_i64(i),
            _ => s.serialize_str(&x.to_string()),
        }
    }

    struct IntVisitor;

    impl Visitor<'_> for IntVisitor {
        type Value = BigInt;

        fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            f.write_str("an integer or a decimal string")
        }

        fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigInt, E> {
            Ok(BigInt::from(v))
        }

        fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigInt, E> {
            Ok(BigInt::from(v))
        }

        fn visit_str<E: de::Error>(self, v: &str) -> Result<BigInt, E> {
            v.parse()
                .map_err(|_| E::custom(format!("{v:?} is not a decimal integer")))
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        d.deserialize_any(IntVisitor)
    }
}
