//! Primes, valuations, degree polynomials and small Diophantine scans.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::NumberTheoryError;
use crate::verdict::{CheckBuilder, LemmaVerdict};

/// Sieve of Eratosthenes.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = usize::try_from(n).expect("sieve bound fits in memory");
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (u128::from(a) * u128::from(b) % u128::from(m)) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for the whole `u64` range.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    if n < 37 * 37 {
        return true;
    }
    let bases: &[u64] = if n < 3_215_031_751 { &BASES[..4] } else { &BASES };
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in bases {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn domain(name: &'static str, constraint: &'static str, value: impl fmt::Display) -> NumberTheoryError {
    NumberTheoryError::Domain {
        name,
        constraint,
        value: value.to_string(),
    }
}

/// The largest prime `p` with `m/2 < p ≤ m`.
pub fn bertrand_prime(m: u64) -> Result<u64, NumberTheoryError> {
    if m < 7 {
        return Err(domain("bertrand_prime", "m >= 7", m));
    }
    (m / 2 + 1..=m)
        .rev()
        .find(|&p| is_prime(p))
        .ok_or_else(|| domain("bertrand_prime", "a prime in (m/2, m]", m))
}

/// `ν_p(n!) = Σ ⌊n/p^i⌋`.
pub fn legendre_valuation(n: u64, p: u64) -> Result<u64, NumberTheoryError> {
    if !is_prime(p) {
        return Err(NumberTheoryError::NotPrime(p));
    }
    if n == 0 {
        return Err(domain("legendre_valuation", "n >= 1", n));
    }
    let mut v = 0;
    let mut q = n;
    while q >= p {
        q /= p;
        v += q;
    }
    Ok(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GcdCase {
    Normal,
    FourKPlusThree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GcdPair {
    pub g: u64,
    pub case: GcdCase,
}

/// `gcd(n−1, n(n−3)/2)` with its residue class.
pub fn classify_gcd_pair(n: u64) -> Result<GcdPair, NumberTheoryError> {
    if n < 5 {
        return Err(domain("classify_gcd_pair", "n >= 5", n));
    }
    let g = (n - 1).gcd(&(n * (n - 3) / 2));
    let case = if n % 4 == 3 {
        GcdCase::FourKPlusThree
    } else {
        GcdCase::Normal
    };
    Ok(GcdPair { g, case })
}

fn pollard_rho(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = x.abs_diff(y).gcd(&n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

fn factor_u64_into(n: u64, out: &mut BTreeMap<u64, u32>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        *out.entry(n).or_insert(0) += 1;
        return;
    }
    for p in [2u64, 3, 5, 7, 11, 13] {
        if n.is_multiple_of(p) {
            *out.entry(p).or_insert(0) += 1;
            factor_u64_into(n / p, out);
            return;
        }
    }
    let d = pollard_rho(n);
    factor_u64_into(d, out);
    factor_u64_into(n / d, out);
}

/// Complete factorization of a machine word.
pub fn factorize_u64(n: u64) -> BTreeMap<u64, u32> {
    let mut out = BTreeMap::new();
    factor_u64_into(n, &mut out);
    out
}

/// Factorization of `p^a − 1` assembled from word-sized pieces.
fn factor_prime_power_minus_one(p: u64, a: u32) -> Option<BTreeMap<u64, u32>> {
    u128::from(p).checked_pow(a)?;
    let mut out = BTreeMap::new();
    let mut rest = a;
    while rest.is_multiple_of(2) && rest > 0 {
        rest /= 2;
        let half = p.checked_pow(rest)?.checked_add(1)?;
        factor_u64_into(half, &mut out);
    }
    // p^rest − 1 = (p − 1)(1 + p + … + p^(rest−1))
    factor_u64_into(p - 1, &mut out);
    let geometric: u128 = (0..rest).map(|i| u128::from(p).pow(i)).sum();
    factor_u64_into(u64::try_from(geometric).ok()?, &mut out);
    Some(out)
}

fn divisors_u128(factors: &BTreeMap<u64, u32>) -> Vec<u128> {
    let mut divs = vec![1u128];
    for (&p, &e) in factors {
        let len = divs.len();
        let mut pk = 1u128;
        for _ in 0..e {
            pk *= u128::from(p);
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

/// All `(s, n)` with `s(n−1) = p^a − 1`, `p^b | n`, `s ≥ 1`, `n ≥ 2`.
///
/// `None` when `p^a − 1` cannot be factored in machine words.
pub fn lemma41b_solutions(p: u64, a: u32, b: u32) -> Option<Vec<(u128, u128)>> {
    let factors = factor_prime_power_minus_one(p, a)?;
    let pa = u128::from(p).pow(a);
    let pb = u128::from(p).pow(b);
    Some(
        divisors_u128(&factors)
            .into_iter()
            .filter_map(|n_minus_1| {
                let n = n_minus_1 + 1;
                (n % pb == 0).then(|| ((pa - 1) / n_minus_1, n))
            })
            .collect(),
    )
}

/// Exhaustive check that every solution has `n = p^a` or `n = p^b`.
pub fn verify_lemma41b(p_bound: u64, a_bound: u32) -> LemmaVerdict {
    let mut check = CheckBuilder::new("lemma41b");
    check.param("p_max", p_bound).param("a_max", a_bound);
    if p_bound < 2 || a_bound < 1 {
        return check.skip("p_max >= 2 and a_max >= 1");
    }
    let mut solutions = 0usize;
    for p in primes_up_to(p_bound) {
        for a in 1..=a_bound {
            let mut bs = vec![a];
            if a % 2 == 0 {
                bs.push(a / 2);
            }
            for b in bs {
                let Some(found) = lemma41b_solutions(p, a, b) else {
                    check.fail(format!("p={p},a={a}"), "searchable", "p^a out of range");
                    continue;
                };
                let pa = u128::from(p).pow(a);
                let pb = u128::from(p).pow(b);
                for (s, n) in found {
                    solutions += 1;
                    if n != pa && n != pb {
                        check.fail(
                            format!("p={p},a={a},b={b},s={s}"),
                            format!("n in {{{pa},{pb}}}"),
                            format!("n={n}"),
                        );
                    }
                }
            }
        }
    }
    check.param("solutions", solutions);
    check.finish()
}

/// `∏(n − c_i) / divisor`, one of the degree polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolynomialSpec {
    pub name: &'static str,
    pub offsets: &'static [u32],
    pub divisor: u64,
}

macro_rules! poly {
    ($id:ident, $name:expr, [$($c:expr),*], $div:expr) => {
        pub const $id: PolynomialSpec = PolynomialSpec {
            name: $name,
            offsets: &[$($c),*],
            divisor: $div,
        };
    };
}

poly!(D1, "n-1", [1], 1);
poly!(D2, "n(n-3)/2", [0, 3], 2);
poly!(D3, "(n-1)(n-2)/2", [1, 2], 2);
poly!(D4, "n(n-1)(n-5)/6", [0, 1, 5], 6);
poly!(D5, "(n-1)(n-2)(n-3)/6", [1, 2, 3], 6);
poly!(D6, "n(n-2)(n-4)/3", [0, 2, 4], 3);
poly!(D7, "n(n-1)(n-2)(n-7)/24", [0, 1, 2, 7], 24);
poly!(D8, "(n-1)(n-2)(n-3)(n-4)/24", [1, 2, 3, 4], 24);
poly!(D9, "n(n-1)(n-4)(n-5)/12", [0, 1, 4, 5], 12);
poly!(D10, "n(n-1)(n-3)(n-6)/8", [0, 1, 3, 6], 8);
poly!(D11, "n(n-2)(n-3)(n-5)/8", [0, 2, 3, 5], 8);
poly!(D12, "n(n-1)(n-2)(n-3)(n-9)/120", [0, 1, 2, 3, 9], 120);
poly!(S13, "(n-1)(n-2)(n-3)(n-4)(n-5)/120", [1, 2, 3, 4, 5], 120);
poly!(S14, "n(n-1)(n-2)(n-4)(n-8)/30", [0, 1, 2, 4, 8], 30);
/// `χ^{(n−3,2,1)}(1)`.
pub const ZETA: PolynomialSpec = D6;

/// `d_1 … d_12` of `A_n`, each with the least `n` from which the formula is claimed.
pub const ALTERNATING_MINIMAL: [(PolynomialSpec, u32); 12] = [
    (D1, 15),
    (D2, 15),
    (D3, 15),
    (D4, 15),
    (D5, 22),
    (D6, 22),
    (D7, 22),
    (D8, 22),
    (D9, 43),
    (D10, 43),
    (D11, 43),
    (D12, 43),
];

impl PolynomialSpec {
    pub const fn new(name: &'static str, offsets: &'static [u32], divisor: u64) -> Self {
        PolynomialSpec {
            name,
            offsets,
            divisor,
        }
    }

    /// All factors are non-negative from here on, so values never decrease.
    pub fn monotone_from(&self) -> u64 {
        self.offsets.iter().copied().max().map_or(0, u64::from)
    }

    fn numerator(&self, n: u64) -> BigInt {
        self.offsets
            .iter()
            .map(|&c| BigInt::from(n) - BigInt::from(c))
            .product()
    }

    /// `None` when the divisor does not divide the product at this `n`.
    pub fn try_evaluate(&self, n: u64) -> Option<BigInt> {
        let (q, r) = self.numerator(n).div_rem(&BigInt::from(self.divisor));
        r.is_zero().then_some(q)
    }

    pub fn evaluate(&self, n: u64) -> BigInt {
        self.try_evaluate(n)
            .unwrap_or_else(|| panic!("{} is not integral at n={n}", self.name))
    }

    /// The value at `n` when it is a positive integer.
    pub fn positive_value(&self, n: u64) -> Option<BigUint> {
        self.try_evaluate(n)
            .and_then(|v| v.to_biguint())
            .filter(|v| !v.is_zero())
    }
}

impl fmt::Display for PolynomialSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name)
    }
}

/// Least `n ≥ n_start` with `poly(n) ≥ bound`.
pub fn min_n_satisfying(poly: &PolynomialSpec, bound: &BigInt, n_start: u64) -> u64 {
    assert!(!poly.offsets.is_empty(), "constant polynomial never grows");
    let mut n = n_start;
    loop {
        if n >= poly.monotone_from() && poly.numerator(n) >= bound * BigInt::from(poly.divisor) {
            return n;
        }
        n += 1;
    }
}

/// All `n ∈ [lo, hi]` with `poly(n) = rhs`.
pub fn integer_solutions(poly: &PolynomialSpec, rhs: &BigInt, lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi)
        .filter(|&n| poly.try_evaluate(n).as_ref() == Some(rhs))
        .collect()
}

/// All `(n, ε, a)` with `n − 1 = 2^(ε + a + ⌊(n−2)/2⌋)`, `ε ∈ {0,1}`, `a ≥ 0`.
pub fn eq5_solutions(lo: u64, hi: u64) -> Vec<(u64, u8, u32)> {
    let mut out = Vec::new();
    for n in lo.max(2)..=hi {
        let m = n - 1;
        if !m.is_power_of_two() {
            continue;
        }
        let e = u64::from(m.trailing_zeros());
        let floor = (n - 2) / 2;
        if e < floor {
            continue;
        }
        let k = (e - floor) as u32;
        out.push((n, 0, k));
        if k >= 1 {
            out.push((n, 1, k - 1));
        }
    }
    out
}

/// Returns `(q, e)` when `d = q^e` with `q` among `primes` and `e ≥ 1`.
pub fn prime_power_base(d: &BigUint, primes: &[u64]) -> Option<(u64, u32)> {
    if d <= &BigUint::one() {
        return None;
    }
    for &q in primes {
        let qb = BigUint::from(q);
        if !(d % &qb).is_zero() {
            continue;
        }
        let mut rest = d.clone();
        let mut e = 0u32;
        while (&rest % &qb).is_zero() {
            rest /= &qb;
            e += 1;
        }
        return rest.is_one().then_some((q, e));
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    value: BigUint,
    factors: BTreeMap<u64, u32>,
}

impl Factorization {
    pub fn from_factors(factors: BTreeMap<u64, u32>) -> Result<Self, NumberTheoryError> {
        if let Some(&p) = factors.keys().find(|&&p| !is_prime(p)) {
            return Err(NumberTheoryError::NotPrime(p));
        }
        let factors: BTreeMap<u64, u32> = factors.into_iter().filter(|&(_, e)| e > 0).collect();
        let value = factors
            .iter()
            .map(|(&p, &e)| BigUint::from(p).pow(e))
            .product();
        Ok(Factorization { value, factors })
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn factors(&self) -> &BTreeMap<u64, u32> {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.keys().copied()
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        for (&p, &e) in &self.factors {
            if !first {
                f.write_str("·")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Factorization {
    type Err = NumberTheoryError;

    /// Parses `2^4·5·7`; `*` and `.` are accepted as separators and a bare
    /// `1` is the empty product.
    fn from_str(s: &str) -> Result<Self, NumberTheoryError> {
        let bad = || NumberTheoryError::BadFactorization(s.to_string());
        let s = s.trim();
        if s == "1" {
            return Factorization::from_factors(BTreeMap::new());
        }
        let mut factors = BTreeMap::new();
        for term in s.split(['·', '*', '.']) {
            let (p, e) = match term.split_once('^') {
                Some((p, e)) => (p, e.parse::<u32>().map_err(|_| bad())?),
                None => (term, 1),
            };
            let p: u64 = p.parse().map_err(|_| bad())?;
            if e == 0 {
                return Err(bad());
            }
            *factors.entry(p).or_insert(0) += e;
        }
        Factorization::from_factors(factors)
    }
}

pub const DEFAULT_TRIAL_BOUND: u64 = 1_000_000;

pub fn factorize(value: &BigUint) -> Result<Factorization, NumberTheoryError> {
    factorize_with_bound(value, DEFAULT_TRIAL_BOUND)
}

/// Trial division up to `trial_bound`, then a certified finish for a
/// word-sized cofactor. Larger cofactors are reported as incomplete.
pub fn factorize_with_bound(
    value: &BigUint,
    trial_bound: u64,
) -> Result<Factorization, NumberTheoryError> {
    if value.is_zero() {
        return Err(domain("factorize", "value >= 1", 0));
    }
    let mut rest = value.clone();
    let mut factors = BTreeMap::new();
    for p in primes_up_to(trial_bound) {
        if let Some(small) = rest.to_u64() {
            if small < p.saturating_mul(p) {
                break;
            }
        }
        let pb = BigUint::from(p);
        while (&rest % &pb).is_zero() {
            rest /= &pb;
            *factors.entry(p).or_insert(0) += 1;
        }
    }
    if !rest.is_one() {
        match rest.to_u64() {
            Some(word) => {
                for (p, e) in factorize_u64(word) {
                    *factors.entry(p).or_insert(0) += e;
                }
            }
            None => {
                return Err(NumberTheoryError::Incomplete {
                    value: value.to_string(),
                    cofactor: rest.to_string(),
                })
            }
        }
    }
    let f = Factorization::from_factors(factors)?;
    debug_assert_eq!(f.value(), value);
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bertrand_examples() {
        assert_eq!(bertrand_prime(14), Ok(13));
        assert_eq!(bertrand_prime(7), Ok(7));
        assert_eq!(bertrand_prime(100), Ok(97));
        assert!(bertrand_prime(6).is_err());
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre_valuation(10, 2), Ok(8));
        assert_eq!(legendre_valuation(14, 13), Ok(1));
        assert_eq!(legendre_valuation(5, 7), Ok(0));
        assert_eq!(legendre_valuation(5, 6), Err(NumberTheoryError::NotPrime(6)));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(
            classify_gcd_pair(15),
            Ok(GcdPair { g: 2, case: GcdCase::FourKPlusThree })
        );
        assert_eq!(
            classify_gcd_pair(14),
            Ok(GcdPair { g: 1, case: GcdCase::Normal })
        );
        assert_eq!(classify_gcd_pair(19).unwrap().g, 2);
    }

    #[test]
    fn primality() {
        let sieve = primes_up_to(10_000);
        let mr: Vec<u64> = (0..=10_000).filter(|&n| is_prime(n)).collect();
        assert_eq!(sieve, mr);
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(3_215_031_751));
    }

    #[test]
    fn lemma41b_examples() {
        assert!(lemma41b_solutions(2, 4, 4).unwrap().contains(&(1, 16)));
        assert!(lemma41b_solutions(2, 4, 2).unwrap().contains(&(5, 4)));
        assert!(verify_lemma41b(50, 12).is_pass());
    }

    #[test]
    fn polynomial_scans() {
        assert_eq!(min_n_satisfying(&D6, &BigInt::from(26752), 31), 46);
        assert_eq!(min_n_satisfying(&D6, &BigInt::from(8671), 29), 32);
        assert_eq!(min_n_satisfying(&D1, &BigInt::from(1), 2), 2);
        for poly in [D2, D3, D4] {
            assert!(integer_solutions(&poly, &BigInt::from(8671), 32, 133).is_empty());
        }
        assert_eq!(integer_solutions(&D2, &BigInt::from(77), 5, 20), vec![14]);
        assert_eq!(D2.evaluate(14), BigInt::from(77));
        assert_eq!(D4.evaluate(14), BigInt::from(273));
    }

    #[test]
    fn eq5_examples() {
        assert!(eq5_solutions(14, 128).is_empty());
        assert_eq!(eq5_solutions(9, 9), vec![(9, 0, 0)]);
        assert_eq!(eq5_solutions(5, 5), vec![(5, 0, 1), (5, 1, 0)]);
    }

    #[test]
    fn factorization_examples() {
        assert_eq!(factorize(&BigUint::from(560u32)).unwrap().to_string(), "2^4·5·7");
        assert!(factorize(&BigUint::one()).unwrap().factors().is_empty());
        assert_eq!(
            factorize(&BigUint::from(26752u32)).unwrap().to_string(),
            "2^7·11·19"
        );
        let f: Factorization = "2^2·31·41·59·71".parse().unwrap();
        assert_eq!(f.value(), &BigUint::from(21_296_876u32));
        assert!("2^2·4".parse::<Factorization>().is_err());
        let big = BigUint::from(1_000_003u64) * BigUint::from(1_000_033u64) * BigUint::from(u64::MAX);
        assert!(matches!(
            factorize_with_bound(&big, 100),
            Err(NumberTheoryError::Incomplete { .. })
        ));
    }

    #[test]
    fn prime_power_detection() {
        let primes = primes_up_to(20);
        assert_eq!(prime_power_base(&BigUint::from(16u32), &primes), Some((2, 4)));
        assert_eq!(prime_power_base(&BigUint::from(15u32), &primes), None);
        assert_eq!(prime_power_base(&BigUint::one(), &primes), None);
    }
}
