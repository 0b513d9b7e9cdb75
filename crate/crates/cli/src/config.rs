//! `--config file.json` support. The file is a flat JSON object whose keys
//! are long option names (`max_degree` and `max-degree` both work) plus an
//! optional `command`. Keys become argv tokens unless the same option was
//! given on the command line, so explicit arguments always win.

use std::fs;

use anyhow::{bail, Context, Result};
use serde_json::Value;

pub const SUBCOMMANDS: &[&str] = &[
    "braid",
    "nf",
    "eq",
    "leq",
    "rev-homology",
    "pw-homology",
    "nerve",
    "joinmeet",
    "classify",
    "chi",
];

fn config_path(args: &[String]) -> Option<String> {
    let mut it = args.iter();
    while let Some(a) = it.next() {
        if a == "--config" {
            return it.next().cloned();
        }
        if let Some(p) = a.strip_prefix("--config=") {
            return Some(p.to_string());
        }
    }
    None
}

fn has_option(args: &[String], name: &str) -> bool {
    let flag = format!("--{name}");
    let prefixed = format!("--{name}=");
    args.iter().any(|a| *a == flag || a.starts_with(&prefixed))
}

fn scalar_text(key: &str, v: &Value) -> Result<String> {
    Ok(match v {
        Value::String(s) => s.clone(),
        Value::Number(x) => x.to_string(),
        Value::Array(items) => {
            let sep = if key == "set" || key == "sigma" {
                ";"
            } else {
                ","
            };
            items
                .iter()
                .map(|item| match item {
                    Value::Array(_) => Ok(item.to_string()),
                    other => scalar_text(key, other),
                })
                .collect::<Result<Vec<_>>>()?
                .join(sep)
        }
        other => bail!("config key `{key}` has unsupported value {other}"),
    })
}

/// Returns argv with config-file options spliced in.
pub fn merge_config(args: Vec<String>) -> Result<Vec<String>> {
    let Some(path) = config_path(&args) else {
        return Ok(args);
    };
    let text = fs::read_to_string(&path).with_context(|| format!("reading config {path}"))?;
    let Value::Object(map) =
        serde_json::from_str::<Value>(&text).with_context(|| format!("parsing config {path}"))?
    else {
        bail!("config {path} must contain a JSON object");
    };

    let mut out = args.clone();
    let sub_pos = out.iter().position(|a| SUBCOMMANDS.contains(&a.as_str()));
    if sub_pos.is_none() {
        match map.get("command") {
            Some(Value::String(c)) if SUBCOMMANDS.contains(&c.as_str()) => {
                out.insert(1.min(out.len()), c.clone())
            }
            Some(other) => bail!("config `command` must name a subcommand, got {other}"),
            None => bail!("no subcommand given on the command line or in {path}"),
        }
    }
    for (key, value) in &map {
        let name = key.replace('_', "-");
        if name == "command" || name == "config" || has_option(&args, &name) {
            continue;
        }
        match value {
            Value::Bool(true) => out.push(format!("--{name}")),
            Value::Bool(false) | Value::Null => {}
            v => {
                out.push(format!("--{name}"));
                out.push(scalar_text(&name, v)?);
            }
        }
    }
    Ok(out)
}
