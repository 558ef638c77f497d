//! Embedded sporadic-group and maximal-subgroup tables, and the arithmetic
//! eliminations that run on them.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::AtlasError;
use crate::number_theory::{
    integer_solutions, is_prime, min_n_satisfying, Factorization, PolynomialSpec, D2, D3, D4,
    D5, D6, D7,
};
use crate::verdict::{CheckBuilder, LemmaVerdict};

const ATLAS_DATA: &str = include_str!("../data/atlas.dat");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SporadicRecord {
    pub name: String,
    /// Largest prime dividing `|S|`.
    pub p_s: u64,
    pub theta1: BigUint,
    pub theta1_factorization: Factorization,
    pub theta2: BigUint,
    pub theta2_factorization: Factorization,
    pub theta_labels: (String, String),
    /// `d_1(S.2)` and `d_2(S.2)`.
    pub aut_d1: Option<BigUint>,
    pub aut_d2: Option<BigUint>,
    /// Further degrees `j → d_j(S.2)`.
    pub aut_extra: BTreeMap<u32, BigUint>,
    pub has_outer: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxSubgroupRecord {
    pub ambient: String,
    pub structure: String,
    pub index: u64,
}

#[derive(Debug)]
pub struct Atlas {
    sporadic: Vec<SporadicRecord>,
    max_subgroups: Vec<MaxSubgroupRecord>,
}

fn malformed(line: usize, reason: impl Into<String>) -> AtlasError {
    AtlasError::Malformed {
        line,
        reason: reason.into(),
    }
}

fn parse_big(field: &str, line: usize) -> Result<BigUint, AtlasError> {
    field
        .parse()
        .map_err(|_| malformed(line, format!("{field:?} is not a positive integer")))
}

fn parse_u64(field: &str, line: usize) -> Result<u64, AtlasError> {
    field
        .parse()
        .map_err(|_| malformed(line, format!("{field:?} is not a positive integer")))
}

fn parse_theta(value: &str, fact: &str, line: usize) -> Result<(BigUint, Factorization), AtlasError> {
    let v = parse_big(value, line)?;
    let f: Factorization = fact
        .parse()
        .map_err(|e| malformed(line, format!("{e}")))?;
    if f.value() != &v {
        return Err(malformed(
            line,
            format!("factorization {fact} multiplies to {}, not {v}", f.value()),
        ));
    }
    Ok((v, f))
}

/// Normalizes `A_14` to `A14`.
pub fn normalize_ambient(label: &str) -> String {
    label.replace('_', "")
}

impl Atlas {
    /// The embedded tables; any inconsistency in them is a build defect.
    pub fn embedded() -> &'static Atlas {
        static ATLAS: OnceLock<Atlas> = OnceLock::new();
        ATLAS.get_or_init(|| {
            Atlas::parse(ATLAS_DATA).unwrap_or_else(|e| panic!("embedded atlas data: {e}"))
        })
    }

    pub fn parse(text: &str) -> Result<Atlas, AtlasError> {
        let mut sporadic: Vec<SporadicRecord> = Vec::new();
        let mut max_subgroups = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            match fields[0] {
                "SPORADIC" => {
                    if fields.len() != 7 && fields.len() != 9 {
                        return Err(malformed(line, "SPORADIC takes 6 or 8 fields"));
                    }
                    let p_s = parse_u64(fields[2], line)?;
                    if !is_prime(p_s) {
                        return Err(malformed(line, format!("p(S) = {p_s} is not prime")));
                    }
                    let (theta1, theta1_factorization) = parse_theta(fields[3], fields[4], line)?;
                    let (theta2, theta2_factorization) = parse_theta(fields[5], fields[6], line)?;
                    if theta1 >= theta2 {
                        return Err(malformed(line, "theta1 must be below theta2"));
                    }
                    if theta1 < BigUint::from(11u32) {
                        return Err(malformed(line, "theta1 must be at least 11"));
                    }
                    let (aut_d1, aut_d2) = if fields.len() == 9 {
                        let d1 = parse_big(fields[7], line)?;
                        let d2 = parse_big(fields[8], line)?;
                        if d1 >= d2 {
                            return Err(malformed(line, "d1(S.2) must be below d2(S.2)"));
                        }
                        (Some(d1), Some(d2))
                    } else {
                        (None, None)
                    };
                    if sporadic.iter().any(|r| r.name == fields[1]) {
                        return Err(malformed(line, format!("duplicate group {}", fields[1])));
                    }
                    sporadic.push(SporadicRecord {
                        name: fields[1].to_string(),
                        p_s,
                        theta1,
                        theta1_factorization,
                        theta2,
                        theta2_factorization,
                        theta_labels: (String::new(), String::new()),
                        has_outer: aut_d1.is_some(),
                        aut_d1,
                        aut_d2,
                        aut_extra: BTreeMap::new(),
                    });
                }
                "LABELS" => {
                    if fields.len() != 4 {
                        return Err(malformed(line, "LABELS takes 3 fields"));
                    }
                    let rec = sporadic
                        .iter_mut()
                        .find(|r| r.name == fields[1])
                        .ok_or_else(|| malformed(line, format!("LABELS before SPORADIC {}", fields[1])))?;
                    rec.theta_labels = (fields[2].to_string(), fields[3].to_string());
                }
                "AUTDEG" => {
                    if fields.len() != 4 {
                        return Err(malformed(line, "AUTDEG takes 3 fields"));
                    }
                    let j = u32::try_from(parse_u64(fields[2], line)?)
                        .map_err(|_| malformed(line, "degree position out of range"))?;
                    let d = parse_big(fields[3], line)?;
                    let rec = sporadic
                        .iter_mut()
                        .find(|r| r.name == fields[1] && r.has_outer)
                        .ok_or_else(|| malformed(line, format!("no S.2 row for {}", fields[1])))?;
                    rec.aut_extra.insert(j, d);
                }
                "MAXSUB" => {
                    if fields.len() < 4 {
                        return Err(malformed(line, "MAXSUB takes 3 fields"));
                    }
                    let index = parse_u64(fields[2], line)?;
                    if index < 2 {
                        return Err(malformed(line, "index must be at least 2"));
                    }
                    max_subgroups.push(MaxSubgroupRecord {
                        ambient: normalize_ambient(fields[1]),
                        structure: fields[3..].join(" "),
                        index,
                    });
                }
                other => return Err(malformed(line, format!("unknown directive {other:?}"))),
            }
        }
        if let Some(r) = sporadic.iter().find(|r| r.theta_labels.0.is_empty()) {
            return Err(malformed(0, format!("no LABELS row for {}", r.name)));
        }
        Ok(Atlas {
            sporadic,
            max_subgroups,
        })
    }

    pub fn sporadic_records(&self) -> &[SporadicRecord] {
        &self.sporadic
    }

    pub fn sporadic(&self, name: &str) -> Option<&SporadicRecord> {
        self.sporadic.iter().find(|r| r.name == name)
    }

    pub fn ambients(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for r in &self.max_subgroups {
            if !out.contains(&r.ambient) {
                out.push(r.ambient.clone());
            }
        }
        out
    }

    pub fn max_subgroups(&self, ambient: &str) -> Result<Vec<MaxSubgroupRecord>, AtlasError> {
        let key = normalize_ambient(ambient);
        let rows: Vec<_> = self
            .max_subgroups
            .iter()
            .filter(|r| r.ambient == key)
            .cloned()
            .collect();
        if rows.is_empty() {
            Err(AtlasError::UnknownAmbient(ambient.to_string()))
        } else {
            Ok(rows)
        }
    }

    /// Names of the `S.2` rows with `d_2(S.2) ≥ bound`, in table order.
    pub fn filter_aut_by_d2(&self, bound: &BigUint) -> Vec<String> {
        self.sporadic
            .iter()
            .filter(|r| r.aut_d2.as_ref().is_some_and(|d2| d2 >= bound))
            .map(|r| r.name.clone())
            .collect()
    }
}

pub fn sporadic_records() -> &'static [SporadicRecord] {
    Atlas::embedded().sporadic_records()
}

pub fn max_subgroups(ambient: &str) -> Result<Vec<MaxSubgroupRecord>, AtlasError> {
    Atlas::embedded().max_subgroups(ambient)
}

pub fn filter_aut_by_d2(bound: u64) -> Vec<String> {
    Atlas::embedded().filter_aut_by_d2(&BigUint::from(bound))
}

pub const CASE_I: [&str; 12] = [
    "M11", "M12", "J1", "M22", "M23", "HS", "M24", "Ru", "2F4(2)'", "Co1", "Co2", "Co3",
];
pub const CASE_II: [&str; 12] = [
    "J2", "J3", "McL", "He", "Suz", "Fi22", "HN", "Ly", "Th", "Fi23", "Fi24'", "B",
];
pub const CASE_III: [&str; 3] = ["O'N", "J4", "M"];
pub const CLAIM2_GROUPS: [&str; 9] = [
    "HS", "J3", "McL", "He", "Suz", "O'N", "Fi22", "HN", "Fi24'",
];

fn int(v: &BigUint) -> BigInt {
    BigInt::from(v.clone())
}

fn at(poly: &PolynomialSpec, n: u64) -> BigInt {
    poly.evaluate(n)
}

fn record<'a>(atlas: &'a Atlas, check: &mut CheckBuilder, name: &str) -> Option<&'a SporadicRecord> {
    let r = atlas.sporadic(name);
    if r.is_none() {
        check.fail(name, "table row", "missing");
    }
    r
}

/// Re-derives the sporadic eliminations that only need the tables.
pub fn claim1_arithmetic() -> LemmaVerdict {
    claim1_arithmetic_with(Atlas::embedded())
}

pub fn claim1_arithmetic_with(atlas: &Atlas) -> LemmaVerdict {
    let mut check = CheckBuilder::new("claim1");
    check.param("groups", atlas.sporadic_records().len());
    let grouped: Vec<&str> = CASE_I.iter().chain(&CASE_II).chain(&CASE_III).copied().collect();
    let mut names: Vec<&str> = atlas.sporadic_records().iter().map(|r| r.name.as_str()).collect();
    let mut sorted_grouped = grouped.clone();
    names.sort_unstable();
    sorted_grouped.sort_unstable();
    check.expect_eq("case partition of the table", names, sorted_grouped);

    // (2p−1)(2p−5)/6 > θ1/(p−1) for every row
    for r in atlas.sporadic_records() {
        let p = BigInt::from(r.p_s);
        let lhs = (&p * 2 - 1) * (&p * 2 - 5) * (&p - 1);
        check.expect(
            format!("{}: (2p-1)(2p-5)(p-1) > 6*theta1", r.name),
            lhs > int(&r.theta1) * 6,
        );
    }

    for name in CASE_I {
        let Some(r) = record(atlas, &mut check, name) else { continue };
        let p = BigInt::from(r.p_s);
        check.expect(
            format!("{name}: 2*theta2 < (2p-3)(p-1)"),
            int(&r.theta2) * 2 < (&p * 2 - 3) * (&p - 1),
        );
    }

    // θ2/(p−1) < (n−1)(n−5)/6 at n = 2p, except Fi24' and B
    for name in CASE_II {
        let Some(r) = record(atlas, &mut check, name) else { continue };
        let p = BigInt::from(r.p_s);
        let holds = (&p * 2 - 1) * (&p * 2 - 5) * (&p - 1) > int(&r.theta2) * 6;
        let exceptional = matches!(name, "Fi24'" | "B");
        check.expect_eq(
            format!("{name}: theta2 bound at n=2p fails"),
            exceptional,
            !holds,
        );
        let g = r.theta1.gcd(&r.theta2);
        check.expect(format!("{name}: gcd(theta1,theta2) >= 2 (gcd={g})"), g >= BigUint::from(2u32));
    }

    let eq3 = PolynomialSpec::new("(n-1)(n-2)/2", &[1, 2], 2);
    for (name, expected) in [("B", 134u64), ("Fi24'", 188), ("O'N", 211), ("M", 889)] {
        let Some(r) = record(atlas, &mut check, name) else { continue };
        let n = min_n_satisfying(&eq3, &(int(&r.theta1) * 2), 3);
        check.expect_eq(format!("{name}: least n with (n-1)(n-2)/2 >= 2*theta1"), expected, n);
        if matches!(name, "B" | "Fi24'") {
            let p = BigInt::from(r.p_s);
            let nb = BigInt::from(n);
            check.expect(
                format!("{name}: theta2/(p-1) < (n-1)(n-5)/6 at n={n}"),
                (&nb - 1) * (&nb - 5) * (&p - 1) > int(&r.theta2) * 6,
            );
        }
    }

    let mut solutions = Vec::new();
    for name in CASE_II {
        let Some(r) = atlas.sporadic(name) else { continue };
        let (q, rem) = (&r.theta2 * 2u32).div_rem(&r.theta1);
        if rem.is_zero() {
            let n = q + 2u32;
            check.note(format!("{name}: 2*theta2 = (n-2)*theta1"), "solution", format!("n={n}"));
            solutions.push((name.to_string(), n.to_u64().unwrap_or(u64::MAX)));
        }
    }
    check.expect_eq(
        "case (ii) solutions of 2*theta2 = (n-2)*theta1",
        vec![("McL".to_string(), 23u64), ("Fi22".to_string(), 13)],
        solutions,
    );

    // Case (iii): n(n−5)θ1 ≤ 3θ2(n−2) never holds from the stated lower bound on.
    if let Some(j4) = record(atlas, &mut check, "J4") {
        check.expect_eq("J4: 2p", 86u64, 2 * j4.p_s);
        let n_j4 = &j4.theta1 * 2u32 + 1u32;
        check.expect_eq("J4: 1 + 2*theta1", BigUint::from(2667u32), n_j4.clone());
        let p1 = BigUint::from(j4.p_s - 1);
        // n(n−3)/2 ≤ nθ1/(p−1)  ⇔  n ≤ 2θ1/(p−1) + 3
        let n_max = (&j4.theta1 * 2u32) / &p1 + 3u32;
        check.expect_eq("J4: largest n with n(n-3)/2 <= n*theta1/42", BigUint::from(66u32), n_max);
    }
    for (name, n0) in [("O'N", 211u64), ("M", 889), ("J4", 2667)] {
        let Some(r) = atlas.sporadic(name) else { continue };
        let n = BigInt::from(n0);
        let (t1, t2) = (int(&r.theta1), int(&r.theta2));
        let fails_at_start = &n * (&n - 5) * &t1 > (&t2 * 3) * (&n - 2);
        let growing = (&n * 2 - 5) * &t1 > &t2 * 3;
        check.expect(format!("{name}: n(n-5)theta1 > 3theta2(n-2) for n >= {n0}"), fails_at_start && growing);
    }
    check.finish()
}

/// Arithmetic of the `S.2` eliminations. The `Suz.2` step for `n ∈ {14, 15}`
/// needs the full degree set of `Suz.2` and is not part of this check.
pub fn claim2_arithmetic() -> LemmaVerdict {
    claim2_arithmetic_with(Atlas::embedded())
}

pub fn claim2_arithmetic_with(atlas: &Atlas) -> LemmaVerdict {
    let mut check = CheckBuilder::new("claim2");
    let bound = BigUint::from(D2.evaluate(14).to_u64().expect("small"));
    check.param("d2_bound", &bound);
    let filtered = atlas.filter_aut_by_d2(&bound);
    check.expect_eq(
        "groups with d2(S.2) >= 77",
        CLAIM2_GROUPS.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        filtered,
    );

    let aut = |check: &mut CheckBuilder, name: &str| -> Option<(BigInt, BigInt, u64)> {
        let r = record(atlas, check, name)?;
        Some((int(r.aut_d1.as_ref()?), int(r.aut_d2.as_ref()?), r.p_s))
    };

    for name in ["J3", "McL", "He", "HN"] {
        let Some((d1, d2, p)) = aut(&mut check, name) else { continue };
        let n0 = p.max(14);
        check.expect(format!("{name}: d4(n0={n0}) > d2(S.2)"), at(&D4, n0) > d2);
        check.expect(format!("{name}: d2(S.2) != d1(S.2)+1"), d2 != d1 + 1);
    }
    for name in ["Suz", "Fi22"] {
        let Some((d1, d2, _)) = aut(&mut check, name) else { continue };
        check.expect(format!("{name}: d4(16) > d2(S.2)"), at(&D4, 16) > d2);
        check.expect(format!("{name}: d2(S.2) != d1(S.2)+1"), d2 != d1 + 1);
    }

    if let Some((_, d2, p)) = aut(&mut check, "O'N") {
        check.expect_eq("O'N: n0", 31u64, p.max(14));
        check.expect_eq("O'N: d7(31)", BigInt::from(26970), at(&D7, 31));
        check.expect("O'N: d7(31) > d2(S.2)", at(&D7, 31) > d2);
        let n = min_n_satisfying(&D6, &d2, 31);
        check.expect_eq("O'N: least n with d6 >= 26752", 46, n);
        let d7_aut = atlas
            .sporadic("O'N")
            .and_then(|r| r.aut_extra.get(&7))
            .map(int);
        match d7_aut {
            Some(v) => {
                check.expect_eq("O'N: d7(S.2)", BigInt::from(58653), v.clone());
                check.expect(format!("O'N: d7(S.2) < d7({n})"), v < at(&D7, n));
            }
            None => check.fail("O'N: d7(S.2)", "58653", "missing"),
        }
    }

    if let Some((d1, _, p)) = aut(&mut check, "Fi24'") {
        check.expect_eq("Fi24': n0", 29u64, p.max(14));
        check.expect_eq("Fi24': d7(29)", BigInt::from(20097), at(&D7, 29));
        check.expect("Fi24': d7(29) > d1(S.2)", at(&D7, 29) > d1);
        let lo = min_n_satisfying(&D6, &d1, 29);
        check.expect_eq("Fi24': least n with d6 >= 8671", 32, lo);
        let hi = (lo..)
            .take_while(|&n| at(&D2, n) <= d1)
            .last()
            .unwrap_or(lo);
        check.expect_eq("Fi24': largest n with d2 <= 8671", 133, hi);
        let d5 = at(&D5, lo);
        if d5 <= d1 {
            check.note(
                format!("Fi24': d5({lo})"),
                "8990",
                format!("{d5}; d5 and d6 scanned as well"),
            );
        }
        for poly in [D2, D3, D4, D5, D6] {
            let sols = integer_solutions(&poly, &d1, lo, hi);
            check.expect_eq(
                format!("Fi24': {poly} = 8671 on [{lo},{hi}]"),
                Vec::<u64>::new(),
                sols,
            );
        }
    }
    check.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loads_all_rows() {
        let recs = sporadic_records();
        assert_eq!(recs.len(), 27);
        let mcl = Atlas::embedded().sporadic("McL").unwrap();
        assert_eq!(mcl.p_s, 11);
        assert_eq!(mcl.theta1, BigUint::from(22u32));
        assert_eq!(mcl.theta2_factorization.to_string(), "3·7·11");
        let m11 = Atlas::embedded().sporadic("M11").unwrap();
        assert_eq!(m11.theta2, BigUint::from(16u32));
        assert!(!m11.has_outer);
        let on = Atlas::embedded().sporadic("O'N").unwrap();
        assert_eq!(on.aut_d1, Some(BigUint::from(10944u32)));
        assert_eq!(on.aut_d2, Some(BigUint::from(26752u32)));
        assert_eq!(recs.iter().filter(|r| r.has_outer).count(), 13);
    }

    #[test]
    fn max_subgroup_tables() {
        let a14: Vec<u64> = max_subgroups("A_14").unwrap().iter().map(|r| r.index).collect();
        assert_eq!(a14, vec![14, 91, 364, 1001, 2002, 3003, 1716]);
        assert!(max_subgroups("A16")
            .unwrap()
            .iter()
            .any(|r| r.structure == "(A8×A8):2^2" && r.index == 6435));
        assert!(max_subgroups("S12")
            .unwrap()
            .iter()
            .any(|r| r.structure == "S6≀S2" && r.index == 462));
        assert!(matches!(max_subgroups("A17"), Err(AtlasError::UnknownAmbient(_))));
    }

    #[test]
    fn aut_filter() {
        assert_eq!(filter_aut_by_d2(77), CLAIM2_GROUPS.to_vec());
        assert!(filter_aut_by_d2(1_000_000_000).is_empty());
        assert!(filter_aut_by_d2(22).contains(&"M12".to_string()));
    }

    #[test]
    fn claims_pass() {
        let c1 = claim1_arithmetic();
        assert!(c1.is_pass(), "{c1:?}");
        assert_eq!(c1.witnesses.len(), 2);
        let c2 = claim2_arithmetic();
        assert!(c2.is_pass(), "{c2:?}");
    }

    #[test]
    fn rejects_bad_rows() {
        let bad_fact = "SPORADIC X 11 12 2^2·5 16 2^4\nLABELS X a b\n";
        assert!(matches!(Atlas::parse(bad_fact), Err(AtlasError::Malformed { line: 1, .. })));
        let order = "SPORADIC X 11 16 2^4 12 2^2·3\nLABELS X a b\n";
        assert!(Atlas::parse(order).is_err());
        assert!(Atlas::parse("MAXSUB A5 1 A5\n").is_err());
        assert!(Atlas::parse("BOGUS\n").is_err());
        assert!(Atlas::parse("SPORADIC X 11 12 2^2·3 16 2^4\n").is_err());
    }
}
