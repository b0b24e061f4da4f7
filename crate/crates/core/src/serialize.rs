//! JSON form of a number system and external catalog files.
//!
//! Schema: `{name, n, hold: {exponent -> [digit, ...]}, embedding: {re,
//! im}?}`. Digits are JSON integers (0, 1, -1) for alphabet orders 1 and
//! 2 and `"w^k"` / `"0"` string tokens otherwise. An external catalog
//! file is a JSON array of such objects; the `HOLDRING_CATALOG`
//! environment variable points the CLI at one.

use std::collections::BTreeMap;
use std::path::Path;

use num_complex::Complex64;
use serde_json::{json, Map, Value};

use crate::digit::{Digit, DigitString};
use crate::error::{Error, Result};
use crate::system::NumberSystem;

fn digit_to_value(d: Digit, n: u32) -> Value {
    if n <= 2 {
        match d {
            Digit::Zero => json!(0),
            Digit::Root(e) => {
                if e % n == 0 {
                    json!(1)
                } else {
                    json!(-1)
                }
            }
        }
    } else {
        Value::String(d.to_text(n))
    }
}

fn digit_from_value(v: &Value, n: u32) -> Result<Digit> {
    match v {
        Value::Number(num) => match num.as_i64() {
            Some(0) => Ok(Digit::Zero),
            Some(1) => Ok(Digit::Root(0)),
            Some(-1) if n % 2 == 0 => Ok(Digit::Root(n / 2)),
            _ => Err(Error::Parse(format!("bad digit {num} for order {n}"))),
        },
        Value::String(s) => Digit::parse(s, n),
        other => Err(Error::Parse(format!("bad digit value {other}"))),
    }
}

/// Serialize a system to the JSON schema.
pub fn system_to_json(sys: &NumberSystem) -> Value {
    let n = sys.order();
    let mut hold = Map::new();
    let ordered: BTreeMap<u32, &DigitString> = (0..n).map(|e| (e, sys.hold(e))).collect();
    for (e, s) in ordered {
        let arr: Vec<Value> = s.digits().iter().map(|&d| digit_to_value(d, n)).collect();
        hold.insert(e.to_string(), Value::Array(arr));
    }
    let mut obj = Map::new();
    obj.insert("name".into(), json!(sys.name()));
    obj.insert("n".into(), json!(n));
    obj.insert("hold".into(), Value::Object(hold));
    if let Some(x) = sys.embedding() {
        obj.insert("embedding".into(), json!({"re": x.re, "im": x.im}));
    }
    Value::Object(obj)
}

/// Parse a system from the JSON schema.
pub fn system_from_json(v: &Value) -> Result<NumberSystem> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("system must be a JSON object".into()))?;
    let name = obj
        .get("name")
        .and_then(|x| x.as_str())
        .ok_or_else(|| Error::Parse("missing name".into()))?;
    let n = obj
        .get("n")
        .and_then(|x| x.as_u64())
        .ok_or_else(|| Error::Parse("missing n".into()))? as u32;
    let hold_obj = obj
        .get("hold")
        .and_then(|x| x.as_object())
        .ok_or_else(|| Error::Parse("missing hold table".into()))?;
    let mut hold = vec![DigitString::empty(); n as usize];
    for (key, arr) in hold_obj {
        let e: u32 = key
            .parse()
            .map_err(|_| Error::Parse(format!("bad hold exponent {key:?}")))?;
        if e >= n {
            return Err(Error::Parse(format!("hold exponent {e} out of range")));
        }
        let digits = arr
            .as_array()
            .ok_or_else(|| Error::Parse("hold entry must be an array".into()))?
            .iter()
            .map(|d| digit_from_value(d, n))
            .collect::<Result<Vec<_>>>()?;
        hold[e as usize] = DigitString::from_digits(digits);
    }
    let mut sys = NumberSystem::new(name, n, hold)?;
    if let Some(emb) = obj.get("embedding").and_then(|x| x.as_object()) {
        let re = emb.get("re").and_then(|x| x.as_f64()).unwrap_or(0.0);
        let im = emb.get("im").and_then(|x| x.as_f64()).unwrap_or(0.0);
        sys = sys.with_embedding(Complex64::new(re, im));
    }
    Ok(sys)
}

/// Load an external catalog: a JSON array of system objects.
pub fn load_catalog_file(path: &Path) -> Result<Vec<NumberSystem>> {
    let text = std::fs::read_to_string(path)?;
    let v: Value =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("catalog JSON: {e}")))?;
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse("catalog must be a JSON array".into()))?;
    arr.iter().map(system_from_json).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn round_trip_all_catalog_systems() {
        for b in catalog::builtin() {
            let sys = b.system();
            let v = system_to_json(sys);
            let back = system_from_json(&v).unwrap();
            assert_eq!(back.order(), sys.order());
            for e in 0..sys.order() {
                assert_eq!(back.hold(e), sys.hold(e), "{} hold({e})", sys.name());
            }
        }
    }

    #[test]
    fn schema_shape() {
        let sys = catalog::find("bal3").unwrap().system().clone();
        let v = system_to_json(&sys);
        assert_eq!(v["n"], json!(2));
        assert_eq!(v["hold"]["0"], json!([-1, 1]));
        assert_eq!(v["hold"]["1"], json!([]));
        // n >= 3 uses tokens
        let mu3 = catalog::find("mu3").unwrap().system().clone();
        let v = system_to_json(&mu3);
        assert_eq!(v["hold"]["1"], json!(["w^2", "w^2"]));
    }

    #[test]
    fn external_catalog_file() {
        let dir = std::env::temp_dir().join("holdring-serialize-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("catalog.json");
        let text = r#"[
          {"name": "zneg3", "n": 2, "hold": {"0": [-1, -1], "1": []},
           "embedding": {"re": -3.0, "im": 0.0}}
        ]"#;
        std::fs::write(&path, text).unwrap();
        let systems = load_catalog_file(&path).unwrap();
        assert_eq!(systems.len(), 1);
        assert_eq!(systems[0].name(), "zneg3");
        // 1 + 1 = -1 - X at X = -3
        let two = systems[0]
            .add(&DigitString::one(), &DigitString::one(), 16)
            .unwrap();
        assert_eq!(two.to_text(2), "-1,-1");
    }

    #[test]
    fn rejects_malformed() {
        assert!(system_from_json(&json!({"name": "x", "n": 5, "hold": {}})).is_err());
        assert!(system_from_json(&json!({"name": "x"})).is_err());
    }
}
