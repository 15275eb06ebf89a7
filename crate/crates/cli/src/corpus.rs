//! Golden `satake` outputs: recompute each file and compare bytes.

use std::collections::BTreeMap;
use std::path::Path;

use serde_json::{json, Value};

use crate::commands::satake;
use crate::config::{QSpec, RunConfig};
use crate::json::{canonical_string, coweight_from_value};
use crate::{CliError, Outcome};

fn field<'a>(v: &'a Value, path: &[&str], file: &str) -> Result<&'a Value, CliError> {
    let mut cur = v;
    for p in path {
        cur = cur.get(p).ok_or_else(|| CliError::Input(format!("{file}: missing field {}", path.join("."))))?;
    }
    Ok(cur)
}

fn int(v: &Value, path: &[&str], file: &str) -> Result<i64, CliError> {
    field(v, path, file)?.as_i64().ok_or_else(|| CliError::Input(format!("{file}: {} must be an integer", path.join("."))))
}

/// Rebuilds the run that produced a golden file.
pub fn recompute(text: &str, file: &str) -> Result<String, CliError> {
    let v: Value = serde_json::from_str(text).map_err(|e| CliError::Input(format!("{file}: {e}")))?;
    let ty = field(&v, &["type"], file)?.as_str().ok_or_else(|| CliError::Input(format!("{file}: bad type")))?;
    let q = field(&v, &["q"], file)?.as_str().ok_or_else(|| CliError::Input(format!("{file}: bad q")))?;
    let cfg = RunConfig {
        cartan_type: ty.to_string(),
        depth: int(&v, &["window", "depth"], file)? as u32,
        vmin: int(&v, &["window", "vmin"], file)? as i32,
        vmax: int(&v, &["window", "vmax"], file)? as i32,
        shell_budget: int(&v, &["window", "shells"], file)? as u32,
        q: QSpec::parse(q)?,
        seed: 0,
        out: None,
    };
    cfg.validate()?;
    let g = crate::commands::group(&cfg)?;
    let lam = coweight_from_value(field(&v, &["lambda"], file)?, g.rank(), file)?;
    Ok(canonical_string(&satake(&cfg, &lam)?.report))
}

/// Coweights (as JSON text) whose terms differ between two reports, per route.
fn differing_terms(old: &Value, new: &Value) -> Vec<String> {
    let index = |v: &Value, route: &str| -> BTreeMap<String, String> {
        v.pointer(&format!("/routes/{route}/terms"))
            .and_then(Value::as_array)
            .map(|ts| ts.iter().map(|t| (t["mu"].to_string(), t.to_string())).collect())
            .unwrap_or_default()
    };
    let mut out = Vec::new();
    for route in ["disassembly", "macdonald"] {
        let (a, b) = (index(old, route), index(new, route));
        for k in a.keys().chain(b.keys()) {
            if a.get(k) != b.get(k) && !out.contains(k) {
                out.push(k.clone());
            }
        }
    }
    out
}

pub fn check(dir: &Path, regenerate: bool) -> Result<Outcome, CliError> {
    let mut files: Vec<_> = std::fs::read_dir(dir)
        .map_err(|e| CliError::Input(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    let mut results = Vec::new();
    let mut ok = true;
    for path in files {
        let name = path.file_name().unwrap().to_string_lossy().to_string();
        let text = std::fs::read_to_string(&path).map_err(|e| CliError::Input(format!("{name}: {e}")))?;
        let fresh = recompute(&text, &name)?;
        if fresh == text {
            results.push(json!({"file": name, "status": "ok"}));
        } else if regenerate {
            std::fs::write(&path, &fresh).map_err(|e| CliError::Input(format!("{name}: {e}")))?;
            results.push(json!({"file": name, "status": "regenerated"}));
        } else {
            ok = false;
            let old: Value = serde_json::from_str(&text).unwrap_or(Value::Null);
            let new: Value = serde_json::from_str(&fresh).expect("own output parses");
            results.push(json!({"file": name, "status": "stale", "differing": differing_terms(&old, &new)}));
        }
    }
    let report = json!({"command": "corpus-check", "dir": dir.display().to_string(), "files": results, "pass": ok});
    Ok(Outcome { report, ok })
}
