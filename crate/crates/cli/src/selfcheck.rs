//! Quick consistency checks at a single level.

use std::fmt::Write as _;

use serde_json::json;

use bmw_core::blocks::{is_semisimple, verify_block_theorem};
use bmw_core::center::separation_classes;
use bmw_core::idempotents::orthogonality_check;
use bmw_core::scalars::Regime;
use bmw_core::tableaux::{enumerate_lambda, enumerate_paths, path_counts};
use bmw_core::wheelpoly::{newton_check, DegreeCap};

use crate::{render, Failure};

/// Idempotent checks interpolate on every path, so they stop here.
const IDEMPOTENT_LIMIT: usize = 4;

pub fn run(n: usize, as_json: bool) -> Result<String, Failure> {
    let mut checks: Vec<(&str, bool)> = Vec::new();

    let counts = path_counts(n);
    let lambda = enumerate_lambda(n);
    let mut counted = true;
    for l in &lambda {
        let paths = enumerate_paths(n, &l.shape)?;
        counted &= counts.get(&l.shape).copied() == Some(paths.len() as u128);
    }
    checks.push(("path counts match enumeration", counted));
    let squares: u128 = counts.values().map(|c| c * c).sum();
    checks.push(("sum of squared path counts is (2n-1)!!", squares == (1..=n as u128).map(|k| 2 * k - 1).product::<u128>()));

    let order = n.max(1);
    checks.push(("Newton identity", newton_check(n, order, DegreeCap::default_for(n))?));
    checks.push(("generic signatures separate", separation_classes(n, Regime::Generic).separates));
    let mut blocks_ok = true;
    for a in -(n as i64)..=n as i64 {
        for sign in [1, -1] {
            let t = Regime::power(sign, 2 * a);
            if !is_semisimple(n, t) {
                blocks_ok &= verify_block_theorem(n, t)?;
            }
        }
    }
    checks.push(("blocks match signature classes at non-semisimple t = ±q^(2a)", blocks_ok));
    if n <= IDEMPOTENT_LIMIT {
        checks.push(("spectral idempotents are orthogonal", orthogonality_check(n)?));
    }

    let ok = checks.iter().all(|(_, b)| *b);
    if as_json {
        let list: Vec<_> = checks.iter().map(|(name, b)| json!({"check": name, "passed": b})).collect();
        return Ok(render(json!({"n": n, "checks": list, "passed": ok})));
    }
    let mut out = String::new();
    for (name, passed) in &checks {
        writeln!(out, "[{}] {name}", if *passed { "ok" } else { "FAIL" }).unwrap();
    }
    writeln!(out, "{}", if ok { "all checks passed" } else { "some checks failed" }).unwrap();
    Ok(out)
}
