//! Multi-prime agreement for counts computed modulo primes.
//!
//! A count is first computed at every requested prime. If the values
//! disagree, more primes are drawn (walking down from the smallest one used)
//! and the value held by a strict majority wins. Primes that divide a
//! denominator of the input are skipped and replaced the same way.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::is_prime;
use crate::groebner::Caps;

/// Default primes: large enough for random linear forms to separate points,
/// small enough for `u32` arithmetic without overflow concerns.
pub const DEFAULT_PRIMES: [u32; 3] = [32003, 31013, 30011];

/// How many primes escalation may add.
const MAX_EXTRA_PRIMES: usize = 4;

/// Shared knobs of every modular pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Settings {
    pub primes: Vec<u32>,
    /// Random separating forms tried per zero-dimensional system.
    pub trials: usize,
    pub caps: Caps,
    /// Seed for separating forms and root finding.
    pub seed: u64,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { primes: DEFAULT_PRIMES.to_vec(), trials: 5, caps: Caps::default(), seed: 0 }
    }
}

impl Settings {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::Trials);
        }
        if self.primes.is_empty() {
            return Err(Error::BadModulus(0));
        }
        for (i, &p) in self.primes.iter().enumerate() {
            if p <= 3 || !is_prime(p as u64) || self.primes[..i].contains(&p) {
                return Err(Error::BadModulus(p as u64));
            }
        }
        Ok(())
    }

    /// Deterministic per-task seed.
    pub fn task_seed(&self, prime: u32, tag: u64) -> u64 {
        let mut h = self.seed ^ 0x9e37_79b9_7f4a_7c15;
        for x in [prime as u64, tag] {
            h ^= x.wrapping_mul(0xbf58_476d_1ce4_e5b9);
            h = h.rotate_left(31).wrapping_mul(0x94d0_49bb_1331_11eb);
        }
        h
    }
}

/// The agreed value and which primes produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Consensus<T> {
    pub value: T,
    /// Every prime that produced a value, in evaluation order.
    pub primes_used: Vec<u32>,
    /// Primes whose value equals the consensus.
    pub agreeing: Vec<u32>,
    pub unanimous: bool,
}

fn next_prime_below(mut n: u32, used: &[u32]) -> Option<u32> {
    while n > 5 {
        n -= 1;
        if is_prime(n as u64) && !used.contains(&n) {
            return Some(n);
        }
    }
    None
}

/// Evaluates `f` at each prime and reconciles the results.
pub fn agree<T: Clone + PartialEq>(primes: &[u32], mut f: impl FnMut(u32) -> Result<T>) -> Result<Consensus<T>> {
    let mut results: Vec<(u32, T)> = Vec::new();
    let mut tried: Vec<u32> = Vec::new();
    let mut extra = 0;
    // evaluates one prime, replacing it while it divides a denominator
    let mut run = |p: u32, tried: &mut Vec<u32>, extra: &mut usize, results: &mut Vec<(u32, T)>| -> Result<()> {
        let mut p = p;
        loop {
            tried.push(p);
            match f(p) {
                Ok(v) => {
                    results.push((p, v));
                    return Ok(());
                }
                Err(Error::BadPrime(_)) if *extra < MAX_EXTRA_PRIMES => {
                    let start = *tried.iter().chain(primes).min().unwrap();
                    match next_prime_below(start, tried) {
                        Some(q) => {
                            *extra += 1;
                            p = q;
                        }
                        None => return Ok(()),
                    }
                }
                Err(Error::BadPrime(_)) => return Ok(()),
                Err(e) => return Err(e),
            }
        }
    };
    for &p in primes {
        run(p, &mut tried, &mut extra, &mut results)?;
    }
    let finish = |results: &[(u32, T)], value: &T| {
        let agreeing: Vec<u32> = results.iter().filter(|(_, v)| v == value).map(|(p, _)| *p).collect();
        Consensus {
            value: value.clone(),
            primes_used: results.iter().map(|(p, _)| *p).collect(),
            unanimous: agreeing.len() == results.len(),
            agreeing,
        }
    };
    match results.first() {
        None => return Err(Error::NoConsensus(tried)),
        Some((_, first)) if results.iter().all(|(_, v)| v == first) => return Ok(finish(&results, first)),
        _ => {}
    }
    // disagreement: add primes until one value holds a strict majority of at
    // least the requested number of primes plus two
    loop {
        if results.len() >= primes.len() + 2 {
            let winner = results
                .iter()
                .map(|(_, v)| v)
                .find(|v| 2 * results.iter().filter(|(_, w)| w == *v).count() > results.len());
            if let Some(v) = winner {
                return Ok(finish(&results, &v.clone()));
            }
        }
        if extra >= MAX_EXTRA_PRIMES {
            return Err(Error::NoConsensus(tried));
        }
        let start = *tried.iter().chain(primes).min().unwrap();
        let Some(q) = next_prime_below(start, &tried) else {
            return Err(Error::NoConsensus(tried));
        };
        extra += 1;
        run(q, &mut tried, &mut extra, &mut results)?;
    }
}
