//! Determinant magnitude budgets for 0/1 matrices and the descending 31-bit
//! prime schedules sized against them.
//!
//! A residue argument turns modular facts into integer facts: if an integer
//! determinant is bounded by `B` in absolute value and vanishes modulo a set
//! of distinct primes whose product exceeds `B`, it is zero. The budget here
//! is the exact maximum for orders up to twenty and a Hadamard-style bound
//! with exact integer ceiling beyond that, so every certificate stays a
//! statement about integers.

use num_bigint::BigUint;
use num_traits::One;

/// Largest prime below `2^31`; schedules start here and walk downwards.
pub const FIRST_PRIME: u64 = 2_147_483_647;

/// Exact maximum of |det| over n-by-n 0/1 matrices, n = 1..=20.
const MAX_DET_01: [u64; 20] = [
    1,
    1,
    2,
    3,
    5,
    9,
    32,
    56,
    144,
    320,
    1_458,
    3_645,
    9_477,
    25_515,
    131_072,
    327_680,
    1_114_112,
    3_411_968,
    19_531_250,
    56_640_625,
];

/// An upper bound on |det| of any n-by-n 0/1 matrix: exact for `n <= 20`,
/// the bound `2 ((n+1)/4)^((n+1)/2)` rounded up to an integer beyond that.
/// Panics for `n == 0`.
pub fn determinant_budget(n: usize) -> BigUint {
    assert!(n >= 1, "budget is defined for positive orders");
    if n <= 20 {
        return BigUint::from(MAX_DET_01[n - 1]);
    }
    let m = n + 1;
    if m % 2 == 0 {
        // ceil(2 * m^(m/2) / 2^m) = ceil(m^(m/2) / 2^(m-1))
        let x = BigUint::from(m).pow(m as u32 / 2);
        let d = BigUint::one() << (m - 1);
        (&x + &d - BigUint::one()) / d
    } else {
        // ceil(sqrt(m^m) / 2^(m-1)), computed from the floor square root and
        // corrected upwards until the square clears m^m.
        let t = BigUint::from(m).pow(m as u32);
        let d = BigUint::one() << (m - 1);
        let mut q = t.sqrt() / &d;
        while (&q * &d) * (&q * &d) < t {
            q += 1u32;
        }
        q
    }
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc: u64 = 1;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = (u128::from(acc) * u128::from(a) % u128::from(m)) as u64;
        }
        a = (u128::from(a) * u128::from(a) % u128::from(m)) as u64;
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, valid for all `x < 3_215_031_751`. Values
/// beyond that range are rejected outright; schedule primes never leave it.
pub(crate) fn is_prime(x: u64) -> bool {
    if x >= 3_215_031_751 {
        return false;
    }
    if x < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7] {
        if x == p {
            return true;
        }
        if x % p == 0 {
            return false;
        }
    }
    let d = x - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for a in [2u64, 3, 5, 7] {
        let mut y = pow_mod(a, d, x);
        if y == 1 || y == x - 1 {
            continue;
        }
        for _ in 1..s {
            y = (u128::from(y) * u128::from(y) % u128::from(x)) as u64;
            if y == x - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Largest prime strictly below `p`. Panics if `p <= 2`.
pub fn next_prime_below(p: u64) -> u64 {
    assert!(p > 2, "no prime below {p}");
    let mut q = p - 1;
    if q % 2 == 0 && q > 2 {
        q -= 1;
    }
    while !is_prime(q) {
        q -= 2;
    }
    q
}

/// The primes and counts a nullity certificate for a given order relies on.
#[derive(Clone, Debug)]
pub struct PrimeSchedule {
    n: usize,
    budget: BigUint,
    primes: Vec<u64>,
    required: usize,
}

impl PrimeSchedule {
    /// Builds the schedule for adjacency matrices of order `n`: descending
    /// primes from [`FIRST_PRIME`], cut off as soon as their product strictly
    /// exceeds [`determinant_budget`]`(n)`.
    pub fn for_order(n: usize) -> PrimeSchedule {
        let budget = determinant_budget(n);
        let mut primes = Vec::new();
        let mut product = BigUint::one();
        let mut p = FIRST_PRIME;
        loop {
            primes.push(p);
            product *= p;
            if product > budget {
                break;
            }
            p = next_prime_below(p);
        }
        let required = primes.len();
        PrimeSchedule {
            n,
            budget,
            primes,
            required,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn budget(&self) -> &BigUint {
        &self.budget
    }

    /// The first `required_count` primes, descending.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Number of primes whose joint product first exceeds the budget.
    pub fn required_count(&self) -> usize {
        self.required
    }

    /// True iff the leading prime alone exceeds the budget, so a single
    /// residue settles singularity and kernel support at this order.
    pub fn single_prime_suffices(&self) -> bool {
        BigUint::from(self.primes[0]) > self.budget
    }
}
