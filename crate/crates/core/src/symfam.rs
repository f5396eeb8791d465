//! Newton power sums `s_n` written in elementary symmetric variables
//! `x_i`, their Girard closed form, and the gauge-group relation
//! polynomials `h_i`.
//!
//! Sign convention for the recursion:
//!
//! `s_n = (-1)^(n+1) n x_n + sum_{i=1}^{n-1} (-1)^(n+i+1) x_(n-i) s_i`
//!
//! which is the unique choice making `s_n = t_1^n + ... + t_N^n` when `x_i`
//! is the `i`-th elementary symmetric polynomial in `t_1..t_N`.
//! [`powersum_oracle`] checks exactly that.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::polyring::{GradedVariable, Homomorphism, Monomial, PolyError, Polynomial, RingSpec};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymError {
    #[error("power-sum identity needs at least n = {n} symmetric variables, got {count}")]
    TooFewVariables { n: u32, count: u32 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("index must be at least 1")]
    ZeroIndex,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

fn x(i: u32) -> Polynomial {
    Polynomial::var(GradedVariable::x(i))
}

fn c(i: u32) -> Polynomial {
    Polynomial::var(GradedVariable::c(i))
}

fn sign(e: u32) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn newton_cache() -> &'static RwLock<Vec<Polynomial>> {
    static CACHE: OnceLock<RwLock<Vec<Polynomial>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(vec![Polynomial::one()]))
}

/// The power sum `s_n` as a polynomial in `x_1..x_n`; `s_0 = 1`.
pub fn newton_s(n: u32) -> Polynomial {
    let n = n as usize;
    if let Some(p) = newton_cache().read().expect("newton cache poisoned").get(n) {
        return p.clone();
    }
    let mut cache = newton_cache().write().expect("newton cache poisoned");
    while cache.len() <= n {
        let m = cache.len() as u32;
        let mut s = (sign(m + 1) * m as i64) * &x(m);
        for i in 1..m {
            let t = sign(m + i + 1) * &(&x(m - i) * &cache[i as usize]);
            s = &s + &t;
        }
        cache.push(s);
    }
    cache[n].clone()
}

/// Handle on the cached family `s_0, s_1, ...`.
#[derive(Clone, Copy, Debug, Default)]
pub struct NewtonFamily;

impl NewtonFamily {
    pub fn get(&self, n: u32) -> Polynomial {
        newton_s(n)
    }
}

/// Girard–Newton closed form:
/// `s_n = (-1)^n n sum_{r_1 + 2 r_2 + .. + n r_n = n} (r-1)!/(r_1!..r_n!) prod (-x_i)^(r_i)`
/// with `r = r_1 + .. + r_n`.
pub fn girard_s(n: u32) -> Result<Polynomial, SymError> {
    if n == 0 {
        return Err(SymError::ZeroIndex);
    }
    let mut out = Polynomial::zero();
    let mut tuple = vec![0u32; n as usize + 1];
    for_each_weighted_tuple(n, n, &mut tuple, &mut |r| {
        let total: u32 = r.iter().sum();
        let mut num = BigInt::from(n) * factorial(total - 1);
        let mut den = BigInt::one();
        let mut mono = Monomial::one();
        for (i, &ri) in r.iter().enumerate().skip(1) {
            den *= factorial(ri);
            mono = mono.mul(&Monomial::pow(GradedVariable::x(i as u32), ri));
        }
        let (q, rem) = num.div_rem(&den);
        assert!(rem.is_zero(), "Girard coefficient is not integral");
        num = q;
        // (-1)^n from the prefactor and (-1)^r from prod (-x_i)^(r_i).
        if (n + total) % 2 == 1 {
            num = -num;
        }
        out.add_term(num, mono);
    });
    Ok(out)
}

/// Visits every `(r_1..r_n)` with `sum i r_i = remaining`, choosing indices `<= max_index`.
fn for_each_weighted_tuple(
    remaining: u32,
    max_index: u32,
    tuple: &mut Vec<u32>,
    visit: &mut dyn FnMut(&[u32]),
) {
    if remaining == 0 {
        visit(tuple);
        return;
    }
    if max_index == 0 {
        return;
    }
    let i = max_index;
    for r in (0..=remaining / i).rev() {
        tuple[i as usize] = r;
        for_each_weighted_tuple(remaining - r * i, i - 1, tuple, visit);
    }
    tuple[i as usize] = 0;
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `e_i(t_1..t_N)`
pub fn elementary_symmetric(i: u32, count: u32) -> Polynomial {
    let mut out = Polynomial::zero();
    let mut chosen = Vec::new();
    subsets(1, count, i, &mut chosen, &mut |set| {
        let m = Monomial::from_exponents(set.iter().map(|&j| (GradedVariable::t(j), 1)));
        out.add_term(BigInt::one(), m);
    });
    out
}

fn subsets(from: u32, count: u32, size: u32, chosen: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
    if chosen.len() as u32 == size {
        visit(chosen);
        return;
    }
    for j in from..=count {
        chosen.push(j);
        subsets(j + 1, count, size, chosen, visit);
        chosen.pop();
    }
}

/// `t_1^n + .. + t_N^n`
pub fn power_sum(n: u32, count: u32) -> Polynomial {
    let mut out = Polynomial::zero();
    for j in 1..=count {
        out.add_term(BigInt::one(), Monomial::pow(GradedVariable::t(j), n));
    }
    out
}

/// `newton_s(n)` with `x_i` replaced by `e_i(t_1..t_N)`. Equals `power_sum(n, N)` when `N >= n`.
pub fn powersum_oracle(n: u32, count: u32) -> Result<Polynomial, SymError> {
    if n == 0 {
        return Err(SymError::ZeroIndex);
    }
    if count < n {
        return Err(SymError::TooFewVariables { n, count });
    }
    let source = RingSpec::loop_space(2 * n);
    let target = RingSpec::symmetric(count, 2 * n);
    let hom = Homomorphism::new(
        source,
        target,
        (1..=n).map(|i| (GradedVariable::x(i), elementary_symmetric(i, count))),
    )?;
    Ok(hom.apply(&newton_s(n))?)
}

type HCache = RwLock<HashMap<(u32, u32, i64), Polynomial>>;

fn h_cache() -> &'static HCache {
    static CACHE: OnceLock<HCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `h_i = k c_i + sum_{j=1}^i (-1)^j s_j c_(i-j)` with `c_0 = 1` and `c_j = 0` for `j > n`.
pub fn h_poly(i: u32, n: u32, k: i64) -> Result<Polynomial, SymError> {
    if i == 0 {
        return Err(SymError::ZeroIndex);
    }
    if let Some(p) = h_cache().read().expect("h cache poisoned").get(&(i, n, k)) {
        return Ok(p.clone());
    }
    let chern = |j: u32| -> Option<Polynomial> {
        match j {
            0 => Some(Polynomial::one()),
            j if j <= n => Some(c(j)),
            _ => None,
        }
    };
    let mut h = Polynomial::zero();
    if i <= n {
        h = k * &c(i);
    }
    for j in 1..=i {
        if let Some(cj) = chern(i - j) {
            h = &h + &(sign(j) * &(&newton_s(j) * &cj));
        }
    }
    h_cache()
        .write()
        .expect("h cache poisoned")
        .insert((i, n, k), h.clone());
    Ok(h)
}

/// The relation family `h_1, h_2, ..` for fixed rank `n` and bundle class `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HFamily {
    pub n: u32,
    pub k: i64,
}

impl HFamily {
    pub fn get(&self, i: u32) -> Polynomial {
        h_poly(i.max(1), self.n, self.k).expect("index is positive")
    }
}

pub fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Whether every coefficient of `s_p - x_1^p` is divisible by the prime `p`.
pub fn check_p_divisibility(p: u64) -> Result<bool, SymError> {
    if !is_prime(p) {
        return Err(SymError::NotPrime(p));
    }
    let e = u32::try_from(p).map_err(|_| SymError::NotPrime(p))?;
    let diff = &newton_s(e) - &x(1).pow(e);
    let modulus = BigInt::from(p);
    let divisible = diff.terms().all(|(_, coef)| (coef % &modulus).is_zero());
    Ok(divisible)
}
