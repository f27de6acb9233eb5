use std::io::Write;

use anyhow::{bail, Context, Result};
use rck_core::{Dims, Partition, Path};
use serde::Serialize;

pub const MAX_OBJECTS_VAR: &str = "RCK_MAX_OBJECTS";
const DEFAULT_MAX_OBJECTS: u64 = 10_000_000;

/// Writes one JSON object per line. Keys come out sorted because every value
/// passes through `serde_json::Value`, whose maps are ordered.
pub fn write_json(out: &mut impl Write, value: &impl Serialize) -> Result<()> {
    let value = serde_json::to_value(value)?;
    serde_json::to_writer(&mut *out, &value)?;
    writeln!(out)?;
    Ok(())
}

/// `-` stands for the empty path.
pub fn parse_path(dims: Dims, text: &str) -> Result<Path> {
    let text = if text == "-" { "" } else { text };
    Ok(Path::parse(dims, text)?)
}

pub fn path_text(path: &Path) -> String {
    if path.steps().is_empty() {
        "-".to_string()
    } else {
        path.to_string()
    }
}

pub fn parse_partition(text: &str) -> Result<Partition> {
    Ok(text.parse()?)
}

pub fn join<T: ToString>(values: &[T]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn max_objects() -> Result<u64> {
    match std::env::var(MAX_OBJECTS_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("{MAX_OBJECTS_VAR} must be a nonnegative integer, got {v:?}")),
        Err(_) => Ok(DEFAULT_MAX_OBJECTS),
    }
}

/// Refuses work that would walk more than the configured number of objects.
pub fn check_budget(objects: u128) -> Result<()> {
    let limit = max_objects()?;
    if objects > u128::from(limit) {
        bail!(
            "{} (set {MAX_OBJECTS_VAR} to raise it)",
            rck_core::Error::LimitExceeded { limit }
        );
    }
    Ok(())
}
