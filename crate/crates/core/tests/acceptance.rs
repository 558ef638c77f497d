//! Acceptance criteria 1 to 11, one line per criterion.

use std::fs;
use std::process::ExitCode;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};

use chardeg::atlas::{self, CLAIM2_GROUPS};
use chardeg::degree::{cache_file_name, default_workers};
use chardeg::lemmas::{self, A14_CASE1, A14_CASE1A, A14_CASE5, A14_CASE6, A14_CASE7};
use chardeg::number_theory::{self, eq5_solutions, integer_solutions, min_n_satisfying, D2, D3, D4, D6};
use chardeg::spin::spin_degrees;
use chardeg::{cdset, divide_filter, DegreeEngine, GroupTag, LemmaVerdict, Status};

fn engine() -> &'static DegreeEngine {
    static ENGINE: OnceLock<DegreeEngine> = OnceLock::new();
    ENGINE.get_or_init(|| DegreeEngine::new(default_workers()))
}

type Outcome = Result<(), String>;

fn ensure(ok: bool, what: impl Into<String>) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn passed(v: LemmaVerdict) -> Outcome {
    if v.is_pass() {
        return Ok(());
    }
    let mut text = String::new();
    v.write_to(&mut text, false);
    Err(text.trim_end().to_string())
}

fn within(start: Instant, limit: Duration) -> Outcome {
    let spent = start.elapsed();
    ensure(spent < limit, format!("took {spent:?}, limit {limit:?}"))
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn bigs(values: &[u64]) -> Vec<BigUint> {
    values.iter().map(|&v| big(v)).collect()
}

fn a(n: u32) -> GroupTag {
    GroupTag::alternating(n).unwrap()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    passed(lemmas::verify_completeness(engine(), 1, 25))?;
    within(start, Duration::from_secs(60))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    passed(lemmas::verify_minimal_degrees(engine(), 15, 50))?;
    within(start, Duration::from_secs(15 * 60))
}

fn criterion_3() -> Outcome {
    let v = lemmas::verify_exclusion_33(engine(), 4, 42);
    ensure(
        v.witnesses.len() == lemmas::LEMMA33_EXCEPTIONS.len(),
        format!("{} exceptions recorded", v.witnesses.len()),
    )?;
    passed(v)
}

fn criterion_4() -> Outcome {
    let e = engine();
    let case1 = e.quotient_set(14, 14).map_err(|e| e.to_string())?.values;
    ensure(case1 == bigs(&A14_CASE1), "case 1 set")?;
    ensure(divide_filter(&case1, &big(13)) == bigs(&A14_CASE1A), "case 1a set")?;
    for (index, expected) in [(2002, &A14_CASE5[..]), (3003, &A14_CASE6[..]), (1716, &A14_CASE7[..])] {
        let q = e.quotient_set(14, index).map_err(|e| e.to_string())?;
        ensure(q.values == bigs(expected), format!("index {index}: {:?}", q.values))?;
    }
    let case2 = e.quotient_set(14, 91).map_err(|e| e.to_string())?;
    ensure(case2.max() == Some(&big(704)), "case 2 maximum")
}

fn criterion_5() -> Outcome {
    let e = engine();
    let is = |n: u32, v: u64| e.is_degree(a(n), &big(v)).unwrap();
    ensure(is(14, 560), "560 in cd(A_14)")?;
    ensure(!is(14, 7280), "7280 not in cd(A_14)")?;
    ensure(is(14, 1001), "1001 in cd(A_14)")?;
    ensure(is(13, 21450), "21450 in cd(A_13)")?;
    ensure(is(12, 5775), "5775 in cd(A_12)")
}

fn criterion_6() -> Outcome {
    let records = spin_degrees(GroupTag::cover_alternating(5).unwrap()).map_err(|e| e.to_string())?;
    let mut multiset: Vec<BigUint> = records
        .iter()
        .flat_map(|r| std::iter::repeat_n(r.degree.clone(), usize::from(r.multiplicity)))
        .collect();
    multiset.sort();
    ensure(multiset == bigs(&[2, 2, 4, 6]), format!("2.A_5 multiset {multiset:?}"))?;
    passed(lemmas::verify_spin(engine(), 30, 15))
}

fn criterion_7() -> Outcome {
    let nine: Vec<String> = CLAIM2_GROUPS.iter().map(|s| s.to_string()).collect();
    ensure(atlas::filter_aut_by_d2(77) == nine, "filter_aut_by_d2(77)")?;
    let claim1 = atlas::claim1_arithmetic();
    let notes: Vec<&str> = claim1.witnesses.iter().map(|w| w.actual.as_str()).collect();
    ensure(notes == ["n=23", "n=13"], format!("claim1 solutions {notes:?}"))?;
    let inputs: Vec<&str> = claim1.witnesses.iter().map(|w| w.input.as_str()).collect();
    ensure(inputs[0].starts_with("McL") && inputs[1].starts_with("Fi22"), "McL and Fi22")?;
    passed(claim1)?;
    passed(atlas::claim2_arithmetic())?;
    ensure(min_n_satisfying(&D6, &BigInt::from(26752), 31) == 46, "O'N bound 46")?;
    ensure(min_n_satisfying(&D6, &BigInt::from(8671), 29) == 32, "Fi24' bound 32")?;
    for poly in [D2, D3, D4] {
        let sols = integer_solutions(&poly, &BigInt::from(8671), 32, 133);
        ensure(sols.is_empty(), format!("{poly} = 8671 solved by {sols:?}"))?;
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    ensure(eq5_solutions(14, 1024).is_empty(), "eq5 on [14,1024]")?;
    let small = eq5_solutions(5, 13);
    ensure(small.contains(&(9, 0, 0)), format!("eq5 on [5,13]: {small:?}"))?;
    passed(lemmas::verify_legendre(10_000))?;
    passed(lemmas::verify_bertrand(100_000))?;
    passed(lemmas::verify_gcd_pairs(10_000))?;
    passed(number_theory::verify_lemma41b(50, 12))?;
    within(start, Duration::from_secs(30))
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    passed(lemmas::verify_prime_power_claim(engine(), 15, 40))?;
    within(start, Duration::from_secs(5 * 60))
}

fn criterion_10() -> Outcome {
    passed(lemmas::verify_debaene_witnesses(engine(), 14, 40))
}

fn criterion_11() -> Outcome {
    let serial = DegreeEngine::new(1).compute(a(30));
    let parallel = DegreeEngine::new(4).compute(a(30));
    ensure(cdset::encode(&serial) == cdset::encode(&parallel), "A_30 bytes differ across worker counts")?;

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let s20 = engine()
        .degree_set(GroupTag::symmetric(20).unwrap(), true)
        .map_err(|e| e.to_string())?;
    let path = dir.path().join("s20.cdset");
    cdset::write(&s20, &path).map_err(|e| e.to_string())?;
    ensure(cdset::read(&path).map_err(|e| e.to_string())? == *s20, "S_20 round trip")?;

    let cached = DegreeEngine::new(1).with_cache_dir(dir.path());
    let file = dir.path().join(cache_file_name(a(14), false));
    cdset::write(&engine().compute(a(14)).without_multiplicities(), &file).map_err(|e| e.to_string())?;
    passed(lemmas::verify_exclusion_33(&cached, 4, 16))?;

    let text = fs::read_to_string(&file).map_err(|e| e.to_string())?;
    fs::write(&file, text.replacen("\n560\n", "\n561\n", 1)).map_err(|e| e.to_string())?;
    let fresh = DegreeEngine::new(1).with_cache_dir(dir.path());
    let err = fresh.degree_set(a(14), false).err().ok_or("tampered cache accepted")?;
    ensure(err.to_string().starts_with("corrupt cache"), format!("error text {err}"))?;
    let v = lemmas::verify_exclusion_33(&fresh, 4, 16);
    ensure(v.status == Status::Fail, format!("tampered cache gave {}", v.status))?;

    fs::write(&file, &text[..text.len() / 2]).map_err(|e| e.to_string())?;
    let fresh = DegreeEngine::new(1).with_cache_dir(dir.path());
    let v = lemmas::verify_theorem43_facts(&fresh, 15, 16);
    ensure(v.status == Status::Fail, format!("truncated cache gave {}", v.status))
}

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Outcome); 11] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
        (11, criterion_11),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failures = 0;
    for (id, run) in criteria {
        let name = format!("criterion {id}");
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        match run() {
            Ok(()) => println!("[{name}] PASS ({} ms)", start.elapsed().as_millis()),
            Err(why) => {
                failures += 1;
                println!("[{name}] FAIL: {why}");
            }
        }
    }
    println!("acceptance: {} failed", failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
