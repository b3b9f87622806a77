//! Dense univariate polynomials over a [`Field`], lowest degree first.
//!
//! Used for extension-field arithmetic, minimal polynomials and the
//! distinct-root counting that backs every geometric count.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand_core::RngCore;

use crate::error::{Error, Result};
use crate::field::{Field, FiniteField};

/// Univariate arithmetic over a borrowed field. Polynomials are `Vec<E>`
/// without trailing zeros; the zero polynomial is empty.
#[derive(Debug, Clone, Copy)]
pub struct Uni<'a, F: Field> {
    pub field: &'a F,
}

impl<'a, F: Field> Uni<'a, F> {
    pub fn new(field: &'a F) -> Self {
        Uni { field }
    }

    pub fn trim(&self, a: &mut Vec<F::Elem>) {
        while a.last().is_some_and(|c| self.field.is_zero(c)) {
            a.pop();
        }
    }

    pub fn degree(&self, a: &[F::Elem]) -> Option<usize> {
        if a.is_empty() {
            None
        } else {
            Some(a.len() - 1)
        }
    }

    pub fn x(&self) -> Vec<F::Elem> {
        vec![self.field.zero(), self.field.one()]
    }

    pub fn constant(&self, c: F::Elem) -> Vec<F::Elem> {
        let mut v = vec![c];
        self.trim(&mut v);
        v
    }

    pub fn add(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let n = a.len().max(b.len());
        let z = self.field.zero();
        let mut out: Vec<F::Elem> = (0..n)
            .map(|i| self.field.add(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
            .collect();
        self.trim(&mut out);
        out
    }

    pub fn sub(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let n = a.len().max(b.len());
        let z = self.field.zero();
        let mut out: Vec<F::Elem> = (0..n)
            .map(|i| self.field.sub(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
            .collect();
        self.trim(&mut out);
        out
    }

    pub fn scale(&self, a: &[F::Elem], c: &F::Elem) -> Vec<F::Elem> {
        let mut out: Vec<F::Elem> = a.iter().map(|x| self.field.mul(x, c)).collect();
        self.trim(&mut out);
        out
    }

    pub fn mul(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![self.field.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if self.field.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] = self.field.add(&out[i + j], &self.field.mul(x, y));
            }
        }
        self.trim(&mut out);
        out
    }

    /// Quotient and remainder; `b` must be nonzero.
    pub fn divrem(&self, a: &[F::Elem], b: &[F::Elem]) -> (Vec<F::Elem>, Vec<F::Elem>) {
        assert!(!b.is_empty(), "division by the zero polynomial");
        let mut r = a.to_vec();
        self.trim(&mut r);
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let lead_inv = self.field.inv(b.last().unwrap()).unwrap();
        let mut q = vec![self.field.zero(); r.len() - b.len() + 1];
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let c = self.field.mul(r.last().unwrap(), &lead_inv);
            for (j, bj) in b.iter().enumerate() {
                r[shift + j] = self.field.sub_mul(&r[shift + j], &c, bj);
            }
            q[shift] = c;
            r.pop();
            self.trim(&mut r);
        }
        self.trim(&mut q);
        (q, r)
    }

    pub fn rem(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        self.divrem(a, b).1
    }

    pub fn monic(&self, a: &[F::Elem]) -> Vec<F::Elem> {
        match a.last() {
            None => Vec::new(),
            Some(l) => {
                let li = self.field.inv(l).unwrap();
                self.scale(a, &li)
            }
        }
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        self.trim(&mut x);
        self.trim(&mut y);
        while !y.is_empty() {
            let r = self.rem(&x, &y);
            x = y;
            y = r;
        }
        self.monic(&x)
    }

    /// Extended gcd: returns `(g, s)` with `s*a ≡ g (mod b)`, `g` monic.
    pub fn gcdinv(&self, a: &[F::Elem], b: &[F::Elem]) -> (Vec<F::Elem>, Vec<F::Elem>) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        self.trim(&mut r0);
        self.trim(&mut r1);
        let (mut s0, mut s1) = (self.constant(self.field.one()), Vec::new());
        while !r1.is_empty() {
            let (q, r) = self.divrem(&r0, &r1);
            let s = self.sub(&s0, &self.mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        match r0.last() {
            None => (Vec::new(), Vec::new()),
            Some(l) => {
                let li = self.field.inv(l).unwrap();
                (self.scale(&r0, &li), self.scale(&s0, &li))
            }
        }
    }

    pub fn deriv(&self, a: &[F::Elem]) -> Vec<F::Elem> {
        let mut out: Vec<F::Elem> = a
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| self.field.mul(c, &self.field.from_i64(i as i64)))
            .collect();
        self.trim(&mut out);
        out
    }

    pub fn eval(&self, a: &[F::Elem], x: &F::Elem) -> F::Elem {
        let mut acc = self.field.zero();
        for c in a.iter().rev() {
            acc = self.field.add(&self.field.mul(&acc, x), c);
        }
        acc
    }

    pub fn mulmod(&self, a: &[F::Elem], b: &[F::Elem], m: &[F::Elem]) -> Vec<F::Elem> {
        self.rem(&self.mul(a, b), m)
    }

    pub fn powmod(&self, base: &[F::Elem], mut e: u128, m: &[F::Elem]) -> Vec<F::Elem> {
        let mut acc = self.rem(&self.constant(self.field.one()), m);
        let mut b = self.rem(base, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mulmod(&acc, &b, m);
            }
            e >>= 1;
            if e > 0 {
                b = self.mulmod(&b, &b, m);
            }
        }
        acc
    }

    pub fn exact_div(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let (q, r) = self.divrem(a, b);
        debug_assert!(r.is_empty());
        q
    }
}

impl<'a, F: FiniteField> Uni<'a, F> {
    /// `a(t)^(1/p)` for a polynomial in `t^p` (coefficientwise inverse Frobenius).
    fn pth_root(&self, a: &[F::Elem]) -> Vec<F::Elem> {
        let p = self.field.prime() as usize;
        // inverse Frobenius on F_{p^k} is Frobenius^(k-1)
        let k = self.field.degree();
        let mut out: Vec<F::Elem> = a
            .iter()
            .step_by(p)
            .map(|c| {
                let mut x = c.clone();
                for _ in 1..k {
                    x = self.field.frobenius(&x);
                }
                x
            })
            .collect();
        self.trim(&mut out);
        out
    }

    /// Degree of the radical of `u`, i.e. the number of distinct roots in
    /// the algebraic closure. Handles `u' = 0` by p-th root descent.
    pub fn squarefree_degree(&self, u: &[F::Elem]) -> Result<usize> {
        if u.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.radical_degree(u))
    }

    fn radical_degree(&self, u: &[F::Elem]) -> usize {
        if u.len() <= 1 {
            return 0;
        }
        let du = self.deriv(u);
        if du.is_empty() {
            return self.radical_degree(&self.pth_root(u));
        }
        let g = self.gcd(u, &du);
        let w = self.exact_div(u, &g);
        // strip from g every factor shared with w; what remains has all
        // multiplicities divisible by p
        let mut rest = g;
        loop {
            let y = self.gcd(&rest, &w);
            if y.len() <= 1 {
                break;
            }
            rest = self.exact_div(&rest, &y);
        }
        let w_deg = w.len() - 1;
        w_deg + self.radical_degree(&rest)
    }

    /// Squarefree part (radical), monic.
    pub fn radical(&self, u: &[F::Elem]) -> Vec<F::Elem> {
        if u.len() <= 1 {
            return self.constant(self.field.one());
        }
        let du = self.deriv(u);
        if du.is_empty() {
            return self.radical(&self.pth_root(u));
        }
        let g = self.gcd(u, &du);
        let w = self.exact_div(u, &g);
        let mut rest = g;
        loop {
            let y = self.gcd(&rest, &w);
            if y.len() <= 1 {
                break;
            }
            rest = self.exact_div(&rest, &y);
        }
        let tail = self.radical(&rest);
        self.monic(&self.mul(&w, &tail))
    }

    /// `t^(q^k) mod m`, by repeated q-th powers.
    pub fn frobenius_power_of_x(&self, k: usize, m: &[F::Elem]) -> Vec<F::Elem> {
        let q = self.field.order();
        let mut x = self.rem(&self.x(), m);
        for _ in 0..k {
            x = self.powmod(&x, q, m);
        }
        x
    }

    /// Product of the distinct linear factors of `u` over this field.
    pub fn split_part(&self, u: &[F::Elem]) -> Vec<F::Elem> {
        let xq = self.frobenius_power_of_x(1, u);
        self.gcd(u, &self.sub(&xq, &self.x()))
    }

    /// All distinct roots of `u` lying in this field, in no particular order.
    pub fn roots<R: RngCore>(&self, u: &[F::Elem], rng: &mut R) -> Vec<F::Elem> {
        if u.len() <= 1 {
            return Vec::new();
        }
        let h = self.split_part(u);
        let mut out = Vec::new();
        self.equal_degree_split(&h, rng, &mut out);
        out
    }

    fn equal_degree_split<R: RngCore>(&self, h: &[F::Elem], rng: &mut R, out: &mut Vec<F::Elem>) {
        match h.len() {
            0 | 1 => {}
            2 => {
                let r = self.field.neg(&self.field.div(&h[0], &h[1]).unwrap());
                out.push(r);
            }
            _ => {
                let q = self.field.order();
                if q.is_multiple_of(2) {
                    unreachable!("odd characteristic only");
                }
                loop {
                    let c = self.field.random(rng);
                    let a = vec![c, self.field.one()];
                    let pw = self.powmod(&a, (q - 1) / 2, h);
                    let g = self.gcd(h, &self.sub(&pw, &self.constant(self.field.one())));
                    if g.len() > 1 && g.len() < h.len() {
                        let cofactor = self.exact_div(h, &g);
                        self.equal_degree_split(&g, rng, out);
                        self.equal_degree_split(&cofactor, rng, out);
                        return;
                    }
                }
            }
        }
    }

    /// Distinct-degree factorization of a squarefree monic `u`: pairs
    /// `(d, product of all irreducible factors of degree d)`.
    pub fn distinct_degree(&self, u: &[F::Elem]) -> Vec<(usize, Vec<F::Elem>)> {
        let mut out = Vec::new();
        let mut rest = self.monic(u);
        let q = self.field.order();
        let mut xp = self.rem(&self.x(), &rest);
        let mut d = 0;
        while rest.len() > 1 {
            d += 1;
            if 2 * d > rest.len() - 1 {
                out.push((rest.len() - 1, rest.clone()));
                break;
            }
            xp = self.powmod(&xp, q, &rest);
            let g = self.gcd(&rest, &self.sub(&xp, &self.x()));
            if g.len() > 1 {
                rest = self.exact_div(&rest, &g);
                xp = self.rem(&xp, &rest);
                out.push((d, g));
            }
        }
        out
    }

    /// Rabin's irreducibility test.
    pub fn is_irreducible(&self, m: &[F::Elem]) -> bool {
        let n = match self.degree(m) {
            None | Some(0) => return false,
            Some(n) => n,
        };
        if n == 1 {
            return true;
        }
        let m = self.monic(m);
        let x = self.x();
        let xqn = self.frobenius_power_of_x(n, &m);
        if !self.sub(&xqn, &self.rem(&x, &m)).is_empty() {
            return false;
        }
        for r in prime_divisors(n) {
            let h = self.frobenius_power_of_x(n / r, &m);
            let g = self.gcd(&m, &self.sub(&h, &x));
            if g.len() > 1 {
                return false;
            }
        }
        true
    }
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rational roots of a polynomial over `Q` (distinct, ascending).
pub fn rational_roots(u: &[BigRational]) -> Vec<BigRational> {
    let mut coeffs: Vec<BigRational> = u.to_vec();
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    if coeffs.len() <= 1 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    // strip factors of t
    let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
    if lead_zeros > 0 {
        roots.push(BigRational::zero());
        coeffs.drain(..lead_zeros);
    }
    if coeffs.len() > 1 {
        // clear denominators
        let l = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect();
        let a0 = ints[0].abs();
        let an = ints.last().unwrap().abs();
        for num in divisors(&a0) {
            for den in divisors(&an) {
                for sign in [1i32, -1] {
                    let cand = BigRational::new(BigInt::from(sign) * num.clone(), den.clone());
                    if roots.contains(&cand) {
                        continue;
                    }
                    let mut acc = BigRational::zero();
                    for c in coeffs.iter().rev() {
                        acc = acc * &cand + c;
                    }
                    if acc.is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
    }
    roots.sort();
    roots
}

/// Positive divisors of `n > 0` by trial division.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut m = n.clone();
    let mut d = BigInt::from(2);
    while &d * &d <= m {
        let mut e = 0;
        while (&m % &d).is_zero() {
            m /= &d;
            e += 1;
        }
        if e > 0 {
            primes.push((d.clone(), e));
        }
        d += 1;
    }
    if m > BigInt::one() {
        primes.push((m, 1));
    }
    let mut out = vec![BigInt::one()];
    for (pr, e) in primes {
        let mut next = Vec::new();
        for x in &out {
            let mut pw = BigInt::one();
            for _ in 0..=e {
                next.push(x * &pw);
                pw *= &pr;
            }
        }
        out = next;
    }
    out
}
