//! Canonical JSON. Object keys are sorted (serde_json's default map), and series terms are
//! listed by height below the anchor, then lexicographically in `(c, fin, d)`.

use std::collections::BTreeMap;

use affine_cartan::{AffineCartanData, Coweight, RootAff};
use affine_roots::AffinizedRoot;
use affine_series::{Series, VCoeff};
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::CliError;

pub fn canonical_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn int_field(obj: &serde_json::Map<String, Value>, key: &str, what: &str) -> Result<i64, CliError> {
    obj.get(key)
        .and_then(Value::as_i64)
        .ok_or_else(|| CliError::Input(format!("{what}: field {key:?} must be an integer")))
}

/// `{"c": int, "fin": [int; ℓ], "d": int}`.
pub fn parse_coweight(text: &str, rank: usize, what: &str) -> Result<Coweight, CliError> {
    let v: Value = serde_json::from_str(text).map_err(|e| CliError::Input(format!("{what}: {e}")))?;
    coweight_from_value(&v, rank, what)
}

pub fn coweight_from_value(v: &Value, rank: usize, what: &str) -> Result<Coweight, CliError> {
    let obj = v.as_object().ok_or_else(|| CliError::Input(format!("{what}: expected an object")))?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "c" | "fin" | "d") {
            return Err(CliError::Input(format!("{what}: unknown field {key:?}")));
        }
    }
    let fin: Vec<i64> = obj
        .get("fin")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Input(format!("{what}: field \"fin\" must be an array")))?
        .iter()
        .map(|x| x.as_i64().ok_or_else(|| CliError::Input(format!("{what}: \"fin\" entries must be integers"))))
        .collect::<Result<_, _>>()?;
    if fin.len() != rank {
        return Err(CliError::Input(format!("{what}: \"fin\" has {} entries, rank is {rank}", fin.len())));
    }
    Ok(Coweight::new(int_field(obj, "c", what)?, &fin, int_field(obj, "d", what)?))
}

pub fn coweight(cw: &Coweight) -> Value {
    json!({"c": cw.c, "fin": cw.finite(), "d": cw.d})
}

pub fn root(r: &RootAff) -> Value {
    json!({"fin": r.finite(), "m": r.m})
}

pub fn affinized(a: &AffinizedRoot) -> Value {
    json!({"root": root(&a.root), "k": a.k})
}

/// Canonical order of coweights below `anchor`.
pub fn term_key(data: &AffineCartanData, anchor: &Coweight, cw: &Coweight) -> (i64, i64, Vec<i64>, i64) {
    (data.rho_pairing(anchor) - data.rho_pairing(cw), cw.c, cw.finite().to_vec(), cw.d)
}

pub fn sorted_coweights<'a>(
    data: &AffineCartanData,
    anchor: &Coweight,
    cws: impl Iterator<Item = &'a Coweight>,
) -> Vec<Coweight> {
    let mut out: Vec<Coweight> = cws.copied().collect();
    out.sort_by_key(|cw| term_key(data, anchor, cw));
    out
}

pub fn coeff(c: &VCoeff) -> Value {
    Value::String(c.to_string())
}

/// Terms of `series` in canonical order, with values at `q` when given.
pub fn terms(
    data: &AffineCartanData,
    anchor: &Coweight,
    series: &Series,
    values: Option<&BTreeMap<Coweight, BigRational>>,
) -> Vec<Value> {
    let map: BTreeMap<Coweight, VCoeff> = series.terms().map(|(k, v)| (*k, v.clone())).collect();
    sorted_coweights(data, anchor, map.keys())
        .iter()
        .map(|cw| {
            let mut t = json!({"mu": coweight(cw), "height": data.rho_pairing(anchor) - data.rho_pairing(cw), "coeff": coeff(&map[cw])});
            if let Some(vals) = values {
                t["value"] = Value::String(vals[cw].to_string());
            }
            t
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coweight_round_trip() {
        let cw = Coweight::new(1, &[2, -3], 4);
        let s = coweight(&cw).to_string();
        assert_eq!(parse_coweight(&s, 2, "λ").unwrap(), cw);
    }

    #[test]
    fn parse_errors_carry_a_position() {
        let e = parse_coweight("{\"c\": 0, \"fin\": [1,, \"d\": 1}", 1, "λ").unwrap_err();
        assert!(e.to_string().contains("line 1 column"), "{e}");
        assert!(parse_coweight("{\"c\": 0, \"fin\": [1, 2], \"d\": 1}", 1, "λ").is_err());
        assert!(parse_coweight("{\"c\": 0, \"fin\": [1], \"d\": 1, \"x\": 0}", 1, "λ").is_err());
    }

    #[test]
    fn keys_come_out_sorted() {
        let v = json!({"z": 1, "a": {"y": 2, "b": 3}});
        assert_eq!(canonical_string(&v), "{\n  \"a\": {\n    \"b\": 3,\n    \"y\": 2\n  },\n  \"z\": 1\n}\n");
    }
}
