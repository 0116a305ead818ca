//! Acceptance suite. Runs every exit criterion, prints one PASS/FAIL line
//! each, and fails the process if any criterion fails.

use std::time::{Duration, Instant};

use abelaut::cli::run;
use abelaut::parse_group;
use abelaut_core::arith::{factor, is_prime};
use abelaut_core::enumeration::{groups_of_order, groups_up_to, partitions};
use abelaut_core::oracle::{count_automorphisms, OracleBudget};
use abelaut_core::search::{realize_until, SearchBounds, SearchVerdict, UnrealizableReason};
use abelaut_core::{
    aut_order_p, classify, p_valuation_of_aut, ratio, ratio_p, BigRational, BigUint, FactorBound,
    GroupShape, PGroupClass, PGroupShape,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let el = start.elapsed();
    check(el <= limit, || format!("{what} took {el:?}, limit {limit:?}"))
}

fn is_zero(n: &BigUint) -> bool {
    n.bits() == 0
}

fn pg(p: u64, e: &[u32]) -> PGroupShape {
    PGroupShape::new(p, e).unwrap()
}

fn int(n: impl Into<BigUint>) -> BigRational {
    BigRational::from_integer(n)
}

fn frac(a: u64, b: u64) -> BigRational {
    BigRational::new(a.into(), b.into()).unwrap()
}

/// p(n) by the recurrence over the largest allowed part.
fn partition_counts(limit: usize) -> Vec<u64> {
    let mut ways = vec![0u64; limit + 1];
    ways[0] = 1;
    for part in 1..=limit {
        for n in part..=limit {
            ways[n] += ways[n - part];
        }
    }
    ways
}

fn c1_formula_oracle() -> Outcome {
    let start = Instant::now();
    let budget = OracleBudget::new(1_000_000).unwrap();
    let mut shapes = Vec::new();
    for p in (2..=64u64).filter(|&p| is_prime(p)) {
        let mut a = 1;
        while p.pow(a) <= 64 {
            for e in partitions(a) {
                let s = pg(p, &e);
                if budget.admits(&s) {
                    shapes.push(s);
                }
            }
            a += 1;
        }
    }
    let required = [
        pg(2, &[1]),
        pg(2, &[1, 1]),
        pg(3, &[1, 2]),
        pg(2, &[1, 1, 1]),
        pg(2, &[2, 2]),
        pg(2, &[1, 2]),
        pg(2, &[2, 3]),
        pg(2, &[1, 1, 2]),
    ];
    for r in &required {
        check(shapes.contains(r), || format!("{r} missing from the sweep"))?;
    }
    let classes: std::collections::HashSet<_> =
        shapes.iter().map(|s| std::mem::discriminant(&classify(s))).collect();
    check(classes.len() == 5, || format!("only {} classes covered", classes.len()))?;
    let mut mismatches = Vec::new();
    for s in &shapes {
        let oracle = count_automorphisms(s, &budget).map_err(|e| format!("{s}: {e}"))?;
        let formula = aut_order_p(s);
        if oracle != formula {
            mismatches.push(format!("{s}: formula {formula}, oracle {oracle}"));
        }
    }
    check(mismatches.is_empty(), || mismatches.join("; "))?;
    within(start, Duration::from_secs(120), "oracle sweep")?;
    Ok(format!("{} shapes, 0 mismatches, {:.2?}", shapes.len(), start.elapsed()))
}

fn c2_witness_values() -> Outcome {
    let b = FactorBound::default();
    let g = |s: &str| parse_group(s, &b).unwrap();
    check(ratio(&g("Z2xZ3xZ9")) == int(2u32), || "Z2xZ3xZ9".into())?;
    check(ratio(&g("Z2xZ5xZ25")) == int(8u32), || "Z2xZ5xZ25".into())?;
    let two = |k: u32| int(BigUint::from(2u32).pow(k));
    for i in 1..=10u32 {
        let r = ratio(&GroupShape::from_factors([pg(2, &[i, i + 1])]));
        check(r == two(2 * (i - 1)), || format!("Z_2^{i} x Z_2^{}: {r}", i + 1))?;
    }
    for i in 2..=10u32 {
        let r = ratio(&GroupShape::from_factors([pg(2, &[1, i, i + 1])]));
        check(r == two(2 * i + 1), || format!("Z2 x Z_2^{i} x Z_2^{}: {r}", i + 1))?;
    }
    Ok("4 items, 21 groups".into())
}

fn c3_closed_forms() -> Outcome {
    let primes: Vec<u64> = (2..=97).filter(|&p| is_prime(p)).collect();
    let mut exact = 0;
    for &p in &primes {
        let pb = BigUint::from(p);
        let pm1 = &pb - 1u32;
        let cyclic = BigRational::new(pm1.clone(), pb.clone()).unwrap();
        let rank2 = BigRational::new(&pm1 * &pm1 * (&pb + 1u32), pb.clone()).unwrap();
        let higher = int(&pm1 * &pm1);
        let rank3 = int(&pm1 * &pm1 * &pm1 * (&pb + 1u32) * (&pb * &pb + &pb + 1u32));
        let mut cases = vec![(pg(p, &[1, 1]), rank2), (pg(p, &[1, 1, 1]), rank3)];
        for e in 1..=6 {
            cases.push((pg(p, &[e]), cyclic.clone()));
        }
        for i in 2..=6 {
            cases.push((pg(p, &[1, i]), higher.clone()));
        }
        for (s, expected) in cases {
            let r = ratio_p(&s);
            check(r == expected, || format!("{s}: formula {r}, closed form {expected}"))?;
            exact += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    let mut general = 0;
    while general < 500 {
        let p = primes[rng.gen_range(0..primes.len())];
        let n = rng.gen_range(1..=5);
        let e: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=6)).collect();
        let s = pg(p, &e);
        if classify(&s) != PGroupClass::General {
            continue;
        }
        let r = ratio_p(&s);
        check(r.is_integer(), || format!("{s}: {r} is not an integer"))?;
        let divisor = BigUint::from(p) * BigUint::from(p - 1).pow(2);
        check(is_zero(&(r.numer() % &divisor)), || format!("{s}: {divisor} does not divide {r}"))?;
        general += 1;
    }
    Ok(format!("{exact} closed-form shapes, {general} general shapes"))
}

fn c4_c5_sweep() -> (Outcome, Outcome) {
    let start = Instant::now();
    let b = FactorBound::default();
    let mut groups = 0u64;
    let mut bad_den = Vec::new();
    let mut odd_prime = Vec::new();
    for (_, g) in groups_up_to(5000, &b).unwrap() {
        groups += 1;
        let r = ratio(&g);
        // squarefree: trial division over the denominator
        let mut d = r.denom().clone();
        let mut q = 2u32;
        let mut squarefree = true;
        while BigUint::from(q) * BigUint::from(q) <= d {
            if is_zero(&(&d % q)) {
                d /= q;
                if is_zero(&(&d % q)) {
                    squarefree = false;
                    break;
                }
            }
            q += 1;
        }
        if !squarefree {
            bad_den.push(format!("{g}: {r}"));
        }
        if r.is_integer() {
            if let Ok(n) = u64::try_from(r.numer()) {
                if n % 2 == 1 && is_prime(n) {
                    odd_prime.push(format!("{g}: {r}"));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let c4 = check(bad_den.is_empty(), || bad_den.join("; "))
        .and_then(|_| within(start, Duration::from_secs(60), "order <= 5000 sweep"))
        .map(|_| format!("{groups} groups, 0 violations, {elapsed:.2?}"));
    let c5 = check(odd_prime.is_empty(), || odd_prime.join("; "))
        .map(|_| format!("{groups} groups, 0 violations"));
    (c4, c5)
}

fn c6_valuation() -> Outcome {
    let mut n = 0;
    for p in [2u64, 3, 5] {
        for a in 1..=8 {
            for e in partitions(a) {
                let s = pg(p, &e);
                let mut rest = aut_order_p(&s);
                let mut k = 0;
                while is_zero(&(&rest % p)) {
                    rest /= p;
                    k += 1;
                }
                let v = p_valuation_of_aut(&s);
                check(v.total == k, || format!("{s}: formula {} vs division {k}", v.total))?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} shapes"))
}

fn cli(args: &[&str]) -> Result<String, String> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("abelaut").chain(args.iter().copied()), &mut out, &mut err);
    if code != 0 {
        return Err(format!("{args:?} exited {code}: {}", String::from_utf8_lossy(&err)));
    }
    Ok(String::from_utf8(out).unwrap().trim().to_string())
}

fn witness_ratio(line: &str) -> Result<(GroupShape, BigRational), String> {
    let group = line
        .strip_prefix("Witness ")
        .and_then(|s| s.rsplit_once(" (order "))
        .map(|(g, _)| g)
        .ok_or_else(|| format!("not a witness: {line}"))?;
    let g = parse_group(group, &FactorBound::default()).map_err(|e| e.to_string())?;
    let r = ratio(&g);
    Ok((g, r))
}

fn c7_search() -> Outcome {
    let b = FactorBound::default();
    // screened targets never reach the scan
    for (t, reason) in [
        ("3", UnrealizableReason::OddPrimeTarget),
        ("1/4", UnrealizableReason::NonSquarefreeDenominator),
    ] {
        let mut scanned = 0;
        let v = realize_until(&t.parse().unwrap(), &SearchBounds::default(), &b, |_| {
            scanned += 1;
            false
        })
        .map_err(|e| e.to_string())?;
        check(v == SearchVerdict::Unrealizable(reason), || format!("{t}: {v:?}"))?;
        check(scanned == 0, || format!("{t}: scanned {scanned} orders"))?;
    }
    let out = cli(&["search", "3"])?;
    check(out == "Unrealizable(OddPrimeTarget)", || out.clone())?;
    let out = cli(&["search", "1/4"])?;
    check(out == "Unrealizable(NonSquarefreeDenominator)", || out.clone())?;

    let out = cli(&["search", "1/2"])?;
    let (g, r) = witness_ratio(&out)?;
    check(g.to_string() == "Z2" && r == frac(1, 2), || out.clone())?;

    let out = cli(&["search", "2", "--max-order", "54"])?;
    let (g, r) = witness_ratio(&out)?;
    check(r == int(2u32) && g.order() <= BigUint::from(54u32), || out.clone())?;

    let out = cli(&["search", "3/2"])?;
    let (g, r) = witness_ratio(&out)?;
    check(g.to_string() == "Z2 x Z2" && r == frac(3, 2), || out.clone())?;
    Ok("5 targets, witnesses recomputed from printed groups".into())
}

fn c8_enumeration_counts() -> Outcome {
    let b = FactorBound::default();
    let pn = partition_counts(64);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    let mut total = 0;
    for _ in 0..50 {
        let n: u64 = rng.gen_range(1..=10_000);
        let expected: u64 = factor(n, &b).unwrap().iter().map(|&(_, a)| pn[a as usize]).product();
        let got = groups_of_order(n, &b).unwrap().count() as u64;
        check(got == expected, || format!("order {n}: {got} groups, expected {expected}"))?;
        total += got;
    }
    Ok(format!("50 orders, {total} groups"))
}

fn main() {
    let (c4, c5) = c4_c5_sweep();
    let results: Vec<(&str, Outcome)> = vec![
        ("1 formula-oracle equivalence (|G| <= 64, |G|^n <= 10^6)", c1_formula_oracle()),
        ("2 witness values reproduced exactly", c2_witness_values()),
        ("3 closed-form classification and general divisibility", c3_closed_forms()),
        ("4 squarefree denominators up to order 5000", c4),
        ("5 no odd prime ratio up to order 5000", c5),
        ("6 valuation equals repeated division", c6_valuation()),
        ("7 search verdicts", c7_search()),
        ("8 enumeration count equals product of partition numbers", c8_enumeration_counts()),
    ];
    let mut failed = 0;
    for (name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
