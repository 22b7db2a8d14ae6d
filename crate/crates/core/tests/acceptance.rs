//! Exit criteria. Prints one PASS/FAIL line per criterion and exits non-zero
//! if any criterion fails or exceeds its time limit.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use num_rational::BigRational;

use bmw_core::blocks::{admissibility, block_check, block_equivalent, is_admissible, is_semisimple, verify_block_theorem};
use bmw_core::center::{adaptive_rank, evaluation_matrix, separation_classes, theorem1_predicate};
use bmw_core::contentfn::{drunk_contents, pairing_set, signature};
use bmw_core::idempotents::{all_paths, orthogonality_check, spectral_idempotent_on};
use bmw_core::partitions::{diagonal_datum, Partition};
use bmw_core::scalars::{ContentValue, Regime};
use bmw_core::tableaux::{
    drunk_path, enumerate_lambda, path_counts, restriction_shapes, sum_of_squares, LabeledPartition, UpDownTableau,
};
use bmw_core::wheelpoly::{
    convolution_check, elementary_wheels, inverse_coeffs_direct, is_wheel, newton_check, power_sum, DegreeCap,
    MultiLaurent,
};

type Outcome = Result<(), Vec<String>>;

fn p(s: &str) -> Partition {
    s.parse().expect("partition literal")
}

fn lp(s: &str, n: usize) -> LabeledPartition {
    LabeledPartition::at_level(p(s), n).expect("shape fits level")
}

/// Collects failure messages.
#[derive(Default)]
struct Check(Vec<String>);

impl Check {
    fn that(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.0.push(what());
        }
    }

    fn done(self) -> Outcome {
        if self.0.is_empty() {
            Ok(())
        } else {
            Err(self.0)
        }
    }
}

fn worked_examples() -> Outcome {
    let mut c = Check::default();

    let path = UpDownTableau::new(vec![p("0"), p("1"), p("2"), p("1"), p("1,1")]).unwrap();
    let seq: Vec<String> = path.content_values(Regime::Generic).iter().map(|v| v.pretty()).collect();
    c.that(seq == ["t", "tq²", "t⁻¹q⁻²", "tq⁻²"], || format!("content sequence {seq:?}"));

    let w = elementary_wheels(2, 2, DegreeCap(8)).unwrap();
    c.that(w[1] == power_sum(2, 1), || "w1 != p1-".into());
    let int = |k: i64| BigRational::from_integer(k.into());
    let two_w2_minus_w1sq = &w[2].scale(&int(2)) - &(&w[1] * &w[1]);
    c.that(power_sum(2, 2) == two_w2_minus_w1sq, || "p2- != 2 w2 - w1^2".into());
    let explicit = [((2, 0), 1), ((0, 2), 1), ((1, 1), 1), ((0, 0), -2), ((-1, -1), 1), ((-1, 1), -1), ((1, -1), -1)]
        .into_iter()
        .fold(MultiLaurent::zero(2), |acc, ((a, b), k)| &acc + &MultiLaurent::monomial(2, vec![a, b], int(k)));
    c.that(w[2] == explicit, || format!("w2 = {}", w[2].to_text()));

    let q2 = Regime::power(1, 2);
    let forms = [
        ("0", "1"),
        ("2", "(1−q⁻²T)(1−q⁻⁴T)/((1−q²T)(1−q⁴T))"),
        ("1,1", "(1−q⁻²T)/(1−q²T)"),
        ("4", "(1−q⁻²T)(1−q⁻⁴T)(1−q⁻⁶T)(1−q⁻⁸T)/((1−q²T)(1−q⁴T)(1−q⁶T)(1−q⁸T))"),
        ("1,1,1,1", "(1−q⁴T)/(1−q⁻⁴T)"),
        ("2,1,1", "(1−q⁻⁴T)/(1−q⁴T)"),
        ("2,2", "(1−q⁻²T)²(1−q⁻⁴T)/((1−q²T)²(1−q⁴T))"),
        ("3,1", "(1−q⁻²T)(1−q⁻⁴T)(1−q⁻⁶T)/((1−q²T)(1−q⁴T)(1−q⁶T))"),
    ];
    for (shape, want) in forms {
        let got = signature(4, &p(shape), q2).unwrap().pretty();
        c.that(got == want, || format!("W({shape}) at n=4, t=q^2: {got}"));
    }

    let q8 = Regime::power(1, 8);
    let hook = p("2,1,1,1,1,1,1,1");
    let paired = pairing_set(&hook, q8).unwrap();
    let want: BTreeSet<i64> = [-4, -5, -3, -6, -2, -7, -1].into_iter().collect();
    c.that(paired == want, || format!("P({hook}) = {paired:?}"));
    let sig = signature(hook.size(), &hook, q8).unwrap();
    let surviving: BTreeMap<ContentValue, i64> =
        [(8, -1), (10, -1), (-8, 1), (-10, 1)].into_iter().map(|(exp, e)| (ContentValue::Power { sign: 1, exp }, e)).collect();
    c.that(sig.exponents() == &surviving, || format!("W({hook}) = {}", sig.pretty()));
    c.that(sig.pretty() == "(1−q⁻⁸T)(1−q⁻¹⁰T)/((1−q⁸T)(1−q¹⁰T))", || sig.pretty());
    c.done()
}

/// |Λ_n| from partition counts, independent of `enumerate_lambda`.
fn lambda_size(n: usize) -> usize {
    (0..=n / 2).map(|f| Partition::all_of_size(n - 2 * f).len()).sum()
}

fn generic_separation() -> Outcome {
    let mut c = Check::default();
    for n in 1..=6 {
        let expected = lambda_size(n);
        let rep = separation_classes(n, Regime::Generic);
        c.that(rep.separates && rep.classes.len() == expected, || {
            format!("n={n}: {} classes, expected {expected} singletons", rep.classes.len())
        });
        let order = adaptive_rank(n, Regime::Generic).order;
        let m = evaluation_matrix(n, Regime::Generic, order, DegreeCap(order.max(4 * n))).unwrap();
        c.that(m.rank == expected, || format!("n={n}: rank {} at K={order}, expected {expected}", m.rank));
    }
    c.done()
}

/// Pairs with equal signature at `t = q^{2a-1}` for `1 ≤ a ≤ n-1`.
fn odd_power_witness(n: usize, a: usize) -> Option<(LabeledPartition, LabeledPartition)> {
    let column = |k: usize| vec!["1"; k].join(",");
    match (n, a) {
        (3, 1) => None,
        (2, 1) => Some((lp("1,1", 2), lp("0", 2))),
        (_, 1) => Some((lp(&format!("{},2", n - 2), n), lp(&(n - 2).to_string(), n))),
        _ if a < n => {
            let head = (n - a).to_string();
            let short = if a == 2 { head.clone() } else { format!("{head},{}", column(a - 2)) };
            Some((lp(&format!("{head},{}", column(a)), n), lp(&short, n)))
        }
        _ => None,
    }
}

fn regime_grid() -> Outcome {
    let mut c = Check::default();
    for n in 2..=5usize {
        let n_i = n as i64;
        for sign in [1i8, -1] {
            for exp in -(2 * n_i + 1)..=(2 * n_i + 1) {
                let r = Regime::power(sign, exp);
                if !is_semisimple(n, r) {
                    continue;
                }
                let rep = separation_classes(n, r);
                let predicted = theorem1_predicate(n, r);
                c.that(rep.separates == predicted, || {
                    format!("n={n} t={r}: separates={} but predicate={predicted}", rep.separates)
                });
            }
        }
        for a in 1..n {
            let Some((x, y)) = odd_power_witness(n, a) else { continue };
            let r = Regime::power(1, 2 * a as i64 - 1);
            let rep = separation_classes(n, r);
            let found = rep.witnesses.iter().any(|(u, v)| (u == &x && v == &y) || (u == &y && v == &x));
            c.that(found, || format!("n={n} t={r}: missing witness {x} ~ {y}"));
        }
    }
    for r in [Regime::power(1, 1), Regime::power(1, -1), Regime::power(-1, 1)] {
        c.that(separation_classes(3, r).separates, || format!("n=3 t={r} should separate"));
    }
    c.done()
}

fn drunk_oracle() -> Outcome {
    let mut c = Check::default();
    for n in 0..=8 {
        for l in enumerate_lambda(n) {
            let mut stepped = drunk_path(n, &l.shape).unwrap().contents();
            stepped.sort();
            let closed = drunk_contents(n, &l.shape).unwrap();
            c.that(stepped == closed, || format!("n={n} {l}"));
        }
    }
    c.done()
}

fn path_independence() -> Outcome {
    let mut c = Check::default();
    for n in 1..=5 {
        let wheels = elementary_wheels(n, 4, DegreeCap(4 * n)).unwrap();
        let by_shape = all_paths(n).into_iter().fold(BTreeMap::<Partition, Vec<UpDownTableau>>::new(), |mut m, t| {
            m.entry(t.shape().clone()).or_default().push(t);
            m
        });
        for (shape, paths) in by_shape {
            for (k, w) in wheels.iter().enumerate() {
                let values: BTreeSet<String> = paths
                    .iter()
                    .map(|t| w.evaluate(&t.content_values(Regime::Generic), Regime::Generic).unwrap().to_text())
                    .collect();
                c.that(values.len() == 1, || format!("n={n} λ={shape} w{k}: {} values", values.len()));
            }
        }
    }
    c.done()
}

fn newton_and_inverse() -> Outcome {
    let mut c = Check::default();
    for n in 1..=4 {
        let w = elementary_wheels(n, 8, DegreeCap(8)).unwrap();
        c.that(convolution_check(&w, &inverse_coeffs_direct(n, 8)), || format!("n={n}: Σ w_i v_(k-i) != δ"));
        c.that(newton_check(n, 8, DegreeCap(8)).unwrap(), || format!("n={n}: Newton identity"));
        for (k, wk) in w.iter().enumerate() {
            c.that(is_wheel(wk), || format!("n={n}: w{k} is not a wheel polynomial"));
        }
    }
    c.done()
}

fn block_theorem() -> Outcome {
    let mut c = Check::default();
    for n in 1..=6usize {
        for a in 0..(n / 2).saturating_sub(1) {
            for sign in [1i8, -1] {
                let r = Regime::power(sign, 2 * a as i64);
                if is_semisimple(n, r) {
                    continue;
                }
                c.that(verify_block_theorem(n, r).unwrap(), || format!("n={n} t={r}: blocks differ from W classes"));
            }
        }
    }
    let r = Regime::power(1, -1);
    let (empty, two) = (lp("0", 2), lp("2", 2));
    let equal_w = signature(2, &empty.shape, r).unwrap() == signature(2, &two.shape, r).unwrap();
    c.that(equal_w, || "W(∅) != W((2)) at n=2, t=q^-1".into());
    c.that(!block_equivalent(&empty, &two, r).unwrap(), || "∅ and (2) reported in one block".into());
    let fail = admissibility(&two.shape, 1, &empty.shape, r).unwrap();
    c.that(fail.as_ref().map(|f| f.condition) == Some(3), || format!("failing condition {fail:?}"));
    let reason = block_check(&empty, &two, r).unwrap().reason.unwrap_or_default();
    c.that(reason.contains("condition (3)"), || format!("reason: {reason}"));
    c.done()
}

fn admissibility_cases() -> Outcome {
    let mut c = Check::default();
    let fail = admissibility(&p("4,2,2"), 1, &p("4,1,1"), Regime::power(1, 1)).unwrap();
    c.that(fail.is_some(), || "(4,2,2) reported (1,(4,1,1))-admissible at t=q".into());
    c.that(is_admissible(&p("4,2,2"), 2, &p("4"), Regime::power(1, 2)).unwrap(), || {
        "(4,2,2) not (2,(4))-admissible at t=q^2".into()
    });
    c.done()
}

fn idempotent_selection() -> Outcome {
    let mut c = Check::default();
    for n in 1..=5 {
        let paths = all_paths(n);
        let total: u128 = path_counts(n).values().sum();
        c.that(paths.len() as u128 == total, || format!("n={n}: {} paths, expected {total}", paths.len()));
        for l in enumerate_lambda(n) {
            let d = spectral_idempotent_on(n, &l.shape, Regime::Generic, &paths, true).unwrap();
            let drunk = drunk_path(n, &l.shape).unwrap();
            let ok = d.values.iter().all(|(t, v)| *v == u8::from(*t == drunk));
            c.that(ok, || format!("n={n} {l}: selected {:?}", d.selected().iter().map(|t| t.to_string()).collect::<Vec<_>>()));
        }
    }
    for n in 1..=4 {
        c.that(orthogonality_check(n).unwrap(), || format!("n={n}: diagonals not orthogonal"));
    }
    c.done()
}

fn combinatorics() -> Outcome {
    let mut c = Check::default();
    for n in 0..=7u128 {
        let double_factorial: u128 = (1..=2 * n).filter(|k| k % 2 == 1).product();
        let got = sum_of_squares(n as usize);
        c.that(got == double_factorial, || format!("n={n}: Σ|T|² = {got}, (2n-1)!! = {double_factorial}"));
    }
    for size in 0..=12 {
        for l in Partition::all_of_size(size) {
            c.that(diagonal_datum(&l).to_partition() == l, || format!("round trip of {l}"));
        }
    }
    for n in 1..=6 {
        let below: BTreeSet<Partition> = enumerate_lambda(n - 1).into_iter().map(|l| l.shape).collect();
        for l in enumerate_lambda(n) {
            let expected: BTreeSet<Partition> = (1..=l.shape.rows() + 1)
                .flat_map(|r| [l.shape.add_box(r), l.shape.remove_box(r)])
                .flatten()
                .filter(|m| below.contains(m))
                .collect();
            c.that(restriction_shapes(n, &l.shape).unwrap() == expected, || format!("restriction of {l}"));
        }
    }
    c.done()
}

fn main() {
    let criteria: [(u8, &str, u64, fn() -> Outcome); 10] = [
        (1, "worked-example golden values", 5, worked_examples),
        (2, "generic separation, n = 1..6", 60, generic_separation),
        (3, "regime grid against the classification", 120, regime_grid),
        (4, "drunk multiset closed form", 30, drunk_oracle),
        (5, "path independence of w_k", 120, path_independence),
        (6, "Newton and inverse-series identities", 60, newton_and_inverse),
        (7, "block partition equals W classes", 120, block_theorem),
        (8, "admissibility golden cases", 1, admissibility_cases),
        (9, "idempotent selects the drunk path", 120, idempotent_selection),
        (10, "combinatorial sanity", 30, combinatorics),
    ];
    let mut failed = 0;
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let slow = elapsed > Duration::from_secs(limit);
        let pass = outcome.is_ok() && !slow;
        println!(
            "[{}] criterion {id:>2}: {name} ({:.2}s, limit {limit}s)",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
        if let Err(details) = outcome {
            for d in details {
                println!("       {d}");
            }
        }
        if slow {
            println!("       exceeded time limit");
        }
        failed += usize::from(!pass);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
