//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Expected values come from closed forms computed here
//! independently of the library, or from fixed worked examples.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::Instant;

use rck_core::anderson::anderson;
use rck_core::enumerate::{
    dyck_paths, free_paths, oracle_partitions_up_to, self_complement_paths, self_conjugate_cores,
};
use rck_core::partitions::{is_n_core, is_n_core_by_hooks, sh_complement_check};
use rck_core::paths::{psi, psi_inverse};
use rck_core::qpoly::{core_sum_poly, path_sum_poly, rational_catalan_poly};
use rck_core::stats::{
    codinv, dinv, dinv_geometric, dinv_rank, skew_length, sweep, sweep_injectivity_report,
};
use rck_core::{Dims, Partition, Path, QPoly};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn factorial(k: u32) -> u128 {
    (1..=u128::from(k)).product()
}

/// `C(a, b)` from factorials; only used with `a <= 20`.
fn choose(a: u32, b: u32) -> u128 {
    factorial(a) / (factorial(b) * factorial(a - b))
}

fn coprime_pairs(max_m: u32, max_n: u32, max_sum: u32) -> Vec<Dims> {
    let mut out = Vec::new();
    for m in 1..=max_m {
        for n in 1..=max_n {
            if m + n <= max_sum {
                if let Ok(d) = Dims::coprime(m, n) {
                    out.push(d);
                }
            }
        }
    }
    out
}

fn fail(dims: Dims, what: impl std::fmt::Display) -> String {
    format!("({}, {}): {what}", dims.m(), dims.n())
}

/// Runs `check` on every Dyck path of every pair; stops at the first miss.
fn every_dyck_path(
    pairs: &[Dims],
    mut check: impl FnMut(&Path) -> Result<bool, rck_core::Error>,
) -> Outcome {
    let mut total = 0u64;
    for &d in pairs {
        for p in dyck_paths(d) {
            match check(&p) {
                Ok(true) => total += 1,
                Ok(false) => return Err(fail(d, format!("fails at {p}"))),
                Err(e) => return Err(fail(d, format!("error at {p}: {e}"))),
            }
        }
    }
    Ok(format!("{total} paths over {} pairs", pairs.len()))
}

fn counting() -> Outcome {
    let pairs = coprime_pairs(14, 14, 15);
    for &d in &pairs {
        let (m, n) = (d.m(), d.n());
        let expected = factorial(m + n - 1) / (factorial(m) * factorial(n));
        let found = dyck_paths(d).count() as u128;
        if found != expected {
            return Err(fail(d, format!("{found} paths, expected {expected}")));
        }
    }
    let d75 = dyck_paths(Dims::new(7, 5).unwrap()).count();
    let d85 = dyck_paths(Dims::new(8, 5).unwrap()).count();
    if (d75, d85) != (66, 99) {
        return Err(format!("(7,5) -> {d75}, (8,5) -> {d85}"));
    }
    Ok(format!("{} pairs", pairs.len()))
}

fn sweep_example() -> Outcome {
    let p = Path::parse(Dims::new(7, 5).unwrap(), "NNEENNENEEEE").map_err(|e| e.to_string())?;
    let image = sweep(&p).map_err(|e| e.to_string())?.to_string();
    let row = p
        .rank_set()
        .map_err(|e| e.to_string())?
        .as_slice()
        .iter()
        .map(|r| r.to_string())
        .collect::<Vec<_>>()
        .join(",");
    if image == "NNENEENNEEEE" && row == "0,4,5,7,9,10,11,13,14,15,18,20" {
        Ok(format!("{image} / {row}"))
    } else {
        Err(format!("{image} / {row}"))
    }
}

fn skew_length_example() -> Outcome {
    let lambda: Partition = "9,5,3,2,1,1"
        .parse()
        .map_err(|e: rck_core::Error| e.to_string())?;
    let hooks = lambda.first_column_hooks().values().to_vec();
    let sl = skew_length(&lambda, 8, 5).map_err(|e| e.to_string())?;
    if hooks == [14, 9, 6, 4, 2, 1] && sl == 10 {
        Ok("sl = 10".into())
    } else {
        Err(format!("hooks {hooks:?}, sl = {sl}"))
    }
}

fn codinv_skew_length() -> Outcome {
    let pairs = coprime_pairs(8, 8, 16);
    every_dyck_path(&pairs, |p| {
        let d = p.dims();
        Ok(codinv(p)? == skew_length(&anderson(p)?, d.m(), d.n())?)
    })
}

fn conjugation() -> Outcome {
    let pairs = coprime_pairs(8, 8, 16);
    every_dyck_path(&pairs, |p| {
        Ok(anderson(&p.rank_complement()?)? == anderson(p)?.conjugate())
    })
}

fn dinv_identities() -> Outcome {
    let pairs = coprime_pairs(8, 8, 16);
    every_dyck_path(&pairs, |p| {
        let v = dinv(p)?;
        Ok(v == sweep(p)?.area()?
            && v == dinv(&p.transpose())?
            && v == dinv(&p.rank_complement()?)?
            && dinv_geometric(p)? == dinv_rank(p)?)
    })
}

fn self_complement() -> Outcome {
    let pairs = coprime_pairs(12, 12, 24);
    let mut fixed_total = 0;
    for &d in &pairs {
        let expected = choose(d.m() / 2 + d.n() / 2, d.m() / 2);
        let mut run = || -> Result<Option<String>, rck_core::Error> {
            let fixed: Vec<Path> = self_complement_paths(d)?.collect();
            let conj = self_conjugate_cores(d)?.count() as u128;
            if fixed.len() as u128 != expected || conj != expected {
                return Ok(Some(format!(
                    "{} fixed paths, {conj} self-conjugate cores, expected {expected}",
                    fixed.len()
                )));
            }
            let mut images = HashSet::new();
            for p in &fixed {
                let q = psi(p)?;
                if psi_inverse(&q, d)? != *p {
                    return Ok(Some(format!("psi does not round-trip at {p}")));
                }
                images.insert(q);
            }
            if images.len() != fixed.len() {
                return Ok(Some("psi is not injective".into()));
            }
            fixed_total += fixed.len();
            Ok(None)
        };
        match run() {
            Ok(None) => {}
            Ok(Some(msg)) => return Err(fail(d, msg)),
            Err(e) => return Err(fail(d, e)),
        }
    }
    Ok(format!(
        "{fixed_total} fixed points over {} pairs",
        pairs.len()
    ))
}

fn flush_oracle() -> Outcome {
    let mut cores = 0;
    let mut partitions = 0;
    for lambda in oracle_partitions_up_to(20).map_err(|e| e.to_string())? {
        partitions += 1;
        for n in 1..=8 {
            let flush = is_n_core(&lambda, n);
            if flush != is_n_core_by_hooks(&lambda, n) {
                return Err(format!(
                    "{lambda}, n = {n}: flush {flush} disagrees with hook scan"
                ));
            }
            if flush && !lambda.is_empty() {
                cores += 1;
                match sh_complement_check(&lambda, n) {
                    Ok(true) => {}
                    Ok(false) => return Err(format!("{lambda}, n = {n}: S-vector complement")),
                    Err(e) => return Err(format!("{lambda}, n = {n}: {e}")),
                }
            }
        }
    }
    Ok(format!(
        "{partitions} partitions, {cores} nonempty (lambda, n) cores"
    ))
}

fn catalan_sums() -> Outcome {
    let pin = rational_catalan_poly(3, 2).map_err(|e| e.to_string())?;
    if pin != QPoly::from_coeffs([1, 0, 1]) || pin.to_string() != "1 + q^2" {
        return Err(format!("(3,2) -> {pin}"));
    }
    let pairs = coprime_pairs(12, 12, 13);
    for &d in &pairs {
        let (m, n) = (d.m(), d.n());
        let polys = (|| {
            Ok::<_, rck_core::Error>((
                path_sum_poly(m, n)?,
                core_sum_poly(m, n)?,
                rational_catalan_poly(m, n)?,
            ))
        })();
        let (paths, cores, cat) = polys.map_err(|e| fail(d, e))?;
        if paths != cores {
            return Err(fail(d, format!("path sum {paths} != core sum {cores}")));
        }
        if paths != cat {
            return Err(fail(
                d,
                format!("finding: path sum {paths} != Cat(q) {cat}"),
            ));
        }
    }
    Ok(format!("{} pairs", pairs.len()))
}

fn sweep_bijectivity() -> Outcome {
    let pairs = coprime_pairs(12, 12, 13);
    let mut findings = Vec::new();
    for &d in &pairs {
        let r = sweep_injectivity_report(d).map_err(|e| fail(d, e))?;
        if !r.injective || !r.closed {
            findings.push(fail(
                d,
                format!(
                    "finding: {} collisions, closed = {}",
                    r.collisions.len(),
                    r.closed
                ),
            ));
        }
    }
    if findings.is_empty() {
        Ok(format!("injective on {} pairs", pairs.len()))
    } else {
        Err(findings.join("; "))
    }
}

fn self_reversing() -> Outcome {
    let mut pairs = 0;
    for m in 1..=10 {
        for n in 1..=10 {
            let d = Dims::new(m, n).unwrap();
            let expected = if m % 2 == 1 && n % 2 == 1 {
                0
            } else {
                choose(m / 2 + n / 2, m / 2)
            };
            let found = free_paths(d).filter(|p| p.reverse() == *p).count() as u128;
            if found != expected {
                return Err(fail(
                    d,
                    format!("{found} self-reversing, expected {expected}"),
                ));
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("counting", counting),
        ("sweep worked example", sweep_example),
        ("skew-length worked example", skew_length_example),
        ("codinv = skew-length", codinv_skew_length),
        ("rank complement <-> conjugation", conjugation),
        ("dinv identities", dinv_identities),
        (
            "self-complement and self-conjugate counts, psi",
            self_complement,
        ),
        ("flush <-> hook scan, S-vector complement", flush_oracle),
        ("path sum = core sum = Cat(q)", catalan_sums),
        ("sweep injectivity", sweep_bijectivity),
        ("self-reversing counts", self_reversing),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(details) => println!("PASS {:>2} {name}: {details} ({secs:.2}s)", i + 1),
            Err(details) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {details} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
