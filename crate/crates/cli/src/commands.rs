use std::io::Write;

use anyhow::{bail, Context, Result};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use rck_core::anderson::{anderson, anderson_inverse};
use rck_core::enumerate::{closed_form, enumerate, EnumerationSpec, Family, Item};
use rck_core::paths::{psi, psi_inverse};
use rck_core::qpoly::{core_sum_poly, path_sum_poly, rational_catalan_poly};
use rck_core::stats::{coarea, codinv, dinv, skew_length, sweep, sweep_injectivity_report};
use rck_core::verify::{
    coprime_pairs_up_to, verify_pair, Status, VerificationReport, VerifyOptions,
};
use rck_core::{binomial, rational_catalan_number, Dims, Error, Path};

use crate::output::{check_budget, join, parse_partition, parse_path, path_text, write_json};
use crate::{Command, Format, Outcome, Pair, StreamFormat};

pub fn run(command: Command, out: &mut impl Write) -> Result<Outcome> {
    match command {
        Command::Stats { pair, path, format } => stats(out, pair, &path, format),
        Command::Anderson {
            pair,
            path,
            core,
            format,
        } => anderson_cmd(out, pair, path.as_deref(), core.as_deref(), format),
        Command::Sweep {
            pair,
            path,
            report,
            format,
        } => sweep_cmd(out, pair, path.as_deref(), report, format),
        Command::Enumerate {
            pair,
            family,
            format,
        } => enumerate_cmd(out, pair, family, format),
        Command::Count {
            pair,
            family,
            format,
        } => count_cmd(out, pair, family, format),
        Command::Catpoly { pair, sums, format } => catpoly(out, pair, sums, format),
        Command::Verify {
            upto,
            m,
            n,
            out: file,
            format,
            timing,
        } => verify(out, upto, m.zip(n), file, format, timing),
        Command::Psi {
            pair,
            path,
            inverse,
            format,
        } => psi_cmd(out, pair, &path, inverse, format),
    }
}

fn dims(pair: Pair) -> Result<Dims> {
    Ok(Dims::new(pair.m, pair.n)?)
}

fn coprime(pair: Pair) -> Result<Dims> {
    Ok(Dims::coprime(pair.m, pair.n)?)
}

fn stats(out: &mut impl Write, pair: Pair, text: &str, format: Format) -> Result<Outcome> {
    let p = parse_path(dims(pair)?, text)?;
    let mut fields = Map::new();
    let mut errors = Map::new();
    let mut not_dyck = false;
    let mut put = |name: &str, value: rck_core::Result<Value>| match value {
        Ok(v) => {
            fields.insert(name.into(), v);
        }
        Err(e) => {
            not_dyck |= e == Error::NotDyck;
            fields.insert(name.into(), Value::Null);
            errors.insert(name.into(), e.to_string().into());
        }
    };
    put("m", Ok(pair.m.into()));
    put("n", Ok(pair.n.into()));
    put("steps", Ok(path_text(&p).into()));
    put("ranks", Ok(json!(p.ranks())));
    put("rank_set", p.rank_set().map(|r| json!(r)));
    match p.end_sets() {
        Ok(e) => {
            for (name, set) in [
                ("south", e.south),
                ("east", e.east),
                ("north", e.north),
                ("west", e.west),
            ] {
                put(name, Ok(json!(set)));
            }
        }
        Err(e) => {
            for name in ["south", "east", "north", "west"] {
                put(name, Err(e.clone()));
            }
        }
    }
    put("area", p.area().map(Value::from));
    put("coarea", coarea(&p).map(Value::from));
    put("dinv", dinv(&p).map(Value::from));
    put("codinv", codinv(&p).map(Value::from));
    put("sweep", sweep(&p).map(|s| path_text(&s).into()));

    match format {
        Format::Json => {
            if !errors.is_empty() {
                fields.insert("errors".into(), Value::Object(errors.clone()));
            }
            write_json(out, &fields)?;
        }
        Format::Text => {
            let order = [
                "m", "n", "steps", "ranks", "rank_set", "south", "east", "north", "west", "area",
                "coarea", "dinv", "codinv", "sweep",
            ];
            for name in order {
                let shown = match (&fields[name], errors.get(name)) {
                    (_, Some(e)) => format!("n/a ({})", e.as_str().unwrap_or_default()),
                    (Value::Array(a), None) => join(a),
                    (Value::String(s), None) => s.clone(),
                    (v, None) => v.to_string(),
                };
                writeln!(out, "{name}: {shown}")?;
            }
        }
    }
    if not_dyck {
        bail!(Error::NotDyck);
    }
    Ok(Outcome::Success)
}

fn anderson_cmd(
    out: &mut impl Write,
    pair: Pair,
    path: Option<&str>,
    core: Option<&str>,
    format: Format,
) -> Result<Outcome> {
    let d = coprime(pair)?;
    let (p, lambda) = match (path, core) {
        (Some(text), _) => {
            let p = parse_path(d, text)?;
            let lambda = anderson(&p)?;
            (p, lambda)
        }
        (None, Some(text)) => {
            let lambda = parse_partition(text)?;
            (anderson_inverse(&lambda, d)?, lambda)
        }
        (None, None) => bail!("give a path or --core"),
    };
    match format {
        Format::Json => write_json(
            out,
            &json!({"m": pair.m, "n": pair.n, "steps": path_text(&p), "core": lambda}),
        )?,
        Format::Text => {
            let ends = p.end_sets()?;
            writeln!(out, "path: {}", path_text(&p))?;
            writeln!(out, "core: {lambda}")?;
            writeln!(out, "hooks: {}", join(lambda.first_column_hooks().values()))?;
            writeln!(out, "south: {}", join(&ends.south))?;
            writeln!(out, "east: {}", join(&ends.east))?;
            writeln!(out, "length: {}", lambda.len())?;
            writeln!(
                out,
                "skew_length: {}",
                skew_length(&lambda, pair.m, pair.n)?
            )?;
        }
    }
    Ok(Outcome::Success)
}

fn sweep_cmd(
    out: &mut impl Write,
    pair: Pair,
    path: Option<&str>,
    report: bool,
    format: Format,
) -> Result<Outcome> {
    let d = coprime(pair)?;
    if !report {
        let text = path.context("give a path or --report")?;
        let p = parse_path(d, text)?;
        let image = sweep(&p)?;
        match format {
            Format::Json => write_json(
                out,
                &json!({"m": pair.m, "n": pair.n, "steps": path_text(&p), "sweep": path_text(&image)}),
            )?,
            Format::Text => writeln!(out, "{}", path_text(&image))?,
        }
        return Ok(Outcome::Success);
    }
    check_budget(rational_catalan_number(pair.m, pair.n))?;
    let r = sweep_injectivity_report(d)?;
    match format {
        Format::Json => write_json(
            out,
            &json!({
                "m": r.m,
                "n": r.n,
                "count": r.count,
                "injective": r.injective,
                "collisions": r.collisions,
            }),
        )?,
        Format::Text => {
            writeln!(out, "paths: {}", r.count)?;
            writeln!(out, "injective: {}", r.injective)?;
            writeln!(out, "closed: {}", r.closed)?;
            if let Some(c) = r.cycles {
                writeln!(out, "cycles: {c}")?;
            }
            for c in &r.collisions {
                let pre: Vec<String> = c.preimages.iter().map(path_text).collect();
                writeln!(
                    out,
                    "collision: {} <- {}",
                    path_text(&c.image),
                    pre.join(" ")
                )?;
            }
        }
    }
    Ok(if r.injective && r.closed {
        Outcome::Success
    } else {
        Outcome::Findings
    })
}

fn family_size(d: Dims, family: Family) -> Result<u128> {
    closed_form(d, family).ok_or_else(|| Error::NonCoprime { m: d.m(), n: d.n() }.into())
}

fn enumerate_cmd(
    out: &mut impl Write,
    pair: Pair,
    family: Family,
    format: StreamFormat,
) -> Result<Outcome> {
    let d = dims(pair)?;
    let spec = EnumerationSpec::new(d, family);
    // the core families are produced from all Dyck paths
    let walked = if family.yields_cores() {
        rational_catalan_number(pair.m, pair.n)
    } else {
        family_size(d, Family::Free)?
    };
    if family.requires_coprime() {
        d.require_coprime()?;
    }
    check_budget(walked)?;
    let items = enumerate(&spec)?;
    let rows = items.map(|item| -> rck_core::Result<_> {
        match item {
            Item::Path(p) => Ok((p, None)),
            Item::Core(l) => Ok((anderson_inverse(&l, d)?, Some(l))),
        }
    });
    if format == StreamFormat::Csv {
        let mut w = csv::Writer::from_writer(&mut *out);
        if family.yields_cores() {
            w.write_record(["m", "n", "steps", "core"])?;
        } else {
            w.write_record(["m", "n", "steps"])?;
        }
        let (m, n) = (pair.m.to_string(), pair.n.to_string());
        for row in rows {
            let (p, core) = row?;
            let steps = path_text(&p);
            match core {
                Some(l) => w.write_record([&m, &n, &steps, &l.to_string()])?,
                None => w.write_record([&m, &n, &steps])?,
            }
        }
        w.flush()?;
        return Ok(Outcome::Success);
    }
    for row in rows {
        let (p, core) = row?;
        match (format, core) {
            (StreamFormat::Json, Some(l)) => write_json(
                out,
                &json!({"m": pair.m, "n": pair.n, "steps": path_text(&p), "core": l}),
            )?,
            (StreamFormat::Json, None) => write_json(
                out,
                &json!({"m": pair.m, "n": pair.n, "steps": path_text(&p)}),
            )?,
            (_, Some(l)) => writeln!(out, "{l}")?,
            (_, None) => writeln!(out, "{}", path_text(&p))?,
        }
    }
    Ok(Outcome::Success)
}

fn count_cmd(out: &mut impl Write, pair: Pair, family: Family, format: Format) -> Result<Outcome> {
    let d = dims(pair)?;
    let expected = family_size(d, family)?;
    let walked = if family.yields_cores() {
        rational_catalan_number(pair.m, pair.n)
    } else {
        binomial(u64::from(pair.m + pair.n), u64::from(pair.n))
    };
    check_budget(walked)?;
    let found = rck_core::enumerate::count(&EnumerationSpec::new(d, family))?;
    match format {
        Format::Json => write_json(
            out,
            &json!({
                "m": pair.m,
                "n": pair.n,
                "family": family.name(),
                "count": found,
                "closed_form": expected.to_string(),
            }),
        )?,
        Format::Text => writeln!(out, "{found}")?,
    }
    if u128::from(found) != expected {
        eprintln!("count {found} differs from the closed form {expected}");
        return Ok(Outcome::Findings);
    }
    Ok(Outcome::Success)
}

fn catpoly(out: &mut impl Write, pair: Pair, sums: bool, format: Format) -> Result<Outcome> {
    coprime(pair)?;
    let (m, n) = (pair.m, pair.n);
    let cat = rational_catalan_poly(m, n)?;
    if !sums {
        match format {
            Format::Json => write_json(out, &json!({"m": m, "n": n, "catalan": cat}))?,
            Format::Text => writeln!(out, "{cat}")?,
        }
        return Ok(Outcome::Success);
    }
    check_budget(rational_catalan_number(m, n))?;
    let paths = path_sum_poly(m, n)?;
    let cores = core_sum_poly(m, n)?;
    match format {
        Format::Json => write_json(
            out,
            &json!({"m": m, "n": n, "catalan": cat, "path_sum": paths, "core_sum": cores}),
        )?,
        Format::Text => {
            writeln!(out, "catalan: {cat}")?;
            writeln!(out, "path_sum: {paths}")?;
            writeln!(out, "core_sum: {cores}")?;
        }
    }
    if paths == cat && cores == cat {
        Ok(Outcome::Success)
    } else {
        eprintln!("finding: the sums differ from the Catalan polynomial");
        Ok(Outcome::Findings)
    }
}

fn verify(
    out: &mut impl Write,
    upto: Option<u32>,
    single: Option<(u32, u32)>,
    file: Option<std::path::PathBuf>,
    format: Format,
    timing: bool,
) -> Result<Outcome> {
    let pairs = match (upto, single) {
        (Some(k), _) => coprime_pairs_up_to(k),
        (None, Some((m, n))) => vec![Dims::coprime(m, n)?],
        (None, None) => bail!("give --upto K or -m M -n N"),
    };
    for d in &pairs {
        check_budget(binomial(u64::from(d.m() + d.n()), u64::from(d.n())))?;
    }
    let options = VerifyOptions { timing };
    let reports = pairs
        .par_iter()
        .map(|&d| verify_pair(d, options))
        .collect::<rck_core::Result<Vec<VerificationReport>>>()?;

    match format {
        Format::Json => {
            for r in &reports {
                write_json(out, r)?;
            }
        }
        Format::Text => write_text_reports(out, &reports)?,
    }
    if let Some(path) = file {
        let value = serde_json::to_value(&reports)?;
        let mut text = serde_json::to_string_pretty(&value)?;
        text.push('\n');
        std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(if reports.iter().all(VerificationReport::all_passed) {
        Outcome::Success
    } else {
        Outcome::Findings
    })
}

fn write_text_reports(out: &mut impl Write, reports: &[VerificationReport]) -> Result<()> {
    let (mut checks, mut failures, mut findings) = (0, 0, 0);
    for r in reports {
        let passed = r.checks.iter().filter(|c| c.status == Status::Pass).count();
        writeln!(
            out,
            "({}, {}): {passed}/{} passed",
            r.m,
            r.n,
            r.checks.len()
        )?;
        for c in &r.checks {
            checks += 1;
            let label = match c.status {
                Status::Pass => {
                    if let Some(ms) = c.millis {
                        writeln!(out, "  pass {} ({ms} ms)", c.name)?;
                    }
                    continue;
                }
                Status::Fail => {
                    failures += 1;
                    "FAIL"
                }
                Status::Finding => {
                    findings += 1;
                    "FINDING"
                }
            };
            writeln!(out, "  {label} {}: {}", c.name, c.details)?;
        }
    }
    writeln!(
        out,
        "{} pairs, {checks} checks, {failures} failures, {findings} findings",
        reports.len()
    )?;
    Ok(())
}

fn psi_cmd(
    out: &mut impl Write,
    pair: Pair,
    text: &str,
    inverse: bool,
    format: Format,
) -> Result<Outcome> {
    let d = coprime(pair)?;
    let (big, small): (Path, Path) = if inverse {
        let small = parse_path(Dims::grid(pair.m / 2, pair.n / 2), text)?;
        (psi_inverse(&small, d)?, small)
    } else {
        let big = parse_path(d, text)?;
        let small = psi(&big)?;
        (big, small)
    };
    match format {
        Format::Json => write_json(
            out,
            &json!({"m": pair.m, "n": pair.n, "steps": path_text(&big), "psi": path_text(&small)}),
        )?,
        Format::Text => {
            let shown = if inverse { &big } else { &small };
            writeln!(out, "{}", path_text(shown))?;
        }
    }
    Ok(Outcome::Success)
}
