use core::cmp::Ordering;

/// Largest ambient variable count supported by [`Monomial`].
pub const MAX_VARS: usize = 16;

/// Largest exponent a single variable may carry. Keeping exponents below
/// 128 lets divisibility run as one 128-bit subtraction.
pub const MAX_EXPONENT: u8 = 127;

const HIGH_BITS: u128 = 0x8080_8080_8080_8080_8080_8080_8080_8080;

/// Dense exponent vector. Unused trailing slots are zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Monomial {
    deg: u16,
    exps: [u8; MAX_VARS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { deg: 0, exps: [0; MAX_VARS] };

    pub fn from_exponents(exps: &[u8]) -> Monomial {
        assert!(exps.len() <= MAX_VARS);
        let mut m = Monomial::ONE;
        for (i, &e) in exps.iter().enumerate() {
            assert!(e <= MAX_EXPONENT, "exponent {e} out of range");
            m.exps[i] = e;
            m.deg += e as u16;
        }
        m
    }

    pub fn var(i: usize) -> Monomial {
        let mut m = Monomial::ONE;
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg as u32
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u8 {
        self.exps[i]
    }

    #[inline]
    pub fn exponents(&self) -> &[u8; MAX_VARS] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Sum of exponents over `range` of variables.
    pub fn partial_degree(&self, vars: core::ops::Range<usize>) -> u32 {
        self.exps[vars].iter().map(|&e| e as u32).sum()
    }

    #[inline]
    fn packed(&self) -> u128 {
        u128::from_le_bytes(self.exps)
    }

    /// `self | other`
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.deg > other.deg {
            return false;
        }
        ((other.packed() | HIGH_BITS).wrapping_sub(self.packed()) & HIGH_BITS) == HIGH_BITS
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for i in 0..MAX_VARS {
            out.exps[i] += other.exps[i];
        }
        debug_assert!(out.exps.iter().all(|&e| e <= MAX_EXPONENT));
        out.deg += other.deg;
        out
    }

    /// `self / other`, assuming `other | self`.
    #[inline]
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        let mut out = *self;
        for i in 0..MAX_VARS {
            out.exps[i] -= other.exps[i];
        }
        out.deg -= other.deg;
        out
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = Monomial::ONE;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].max(other.exps[i]);
            out.deg += out.exps[i] as u16;
        }
        out
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Index of the variable if this is a pure power `x_i^k`, `k >= 1`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    /// Sets exponent `i` to `e`.
    pub fn with_exp(&self, i: usize, e: u8) -> Monomial {
        let mut out = *self;
        out.deg = out.deg - out.exps[i] as u16 + e as u16;
        out.exps[i] = e;
        out
    }

    /// Checked product; `None` if some exponent would exceed [`MAX_EXPONENT`].
    pub fn checked_mul(&self, other: &Monomial) -> Option<Monomial> {
        for i in 0..MAX_VARS {
            if self.exps[i] as u16 + other.exps[i] as u16 > MAX_EXPONENT as u16 {
                return None;
            }
        }
        Some(self.mul(other))
    }
}

/// Second-block order inside a [`MonomialOrder::Block`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InnerOrder {
    GrevLex,
    Lex,
}

/// Monomial orders. Variable 0 is the largest variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
    /// Eliminates the first `k` variables: any monomial containing one of
    /// them exceeds every monomial free of them. Each block is ordered by
    /// `inner`.
    Block { k: usize, inner: InnerOrder },
}

#[inline]
fn grevlex_range(a: &Monomial, b: &Monomial, vars: core::ops::Range<usize>) -> Ordering {
    let da = a.partial_degree(vars.clone());
    let db = b.partial_degree(vars.clone());
    if da != db {
        return da.cmp(&db);
    }
    for i in vars.rev() {
        if a.exps[i] != b.exps[i] {
            return b.exps[i].cmp(&a.exps[i]);
        }
    }
    Ordering::Equal
}

#[inline]
fn lex_range(a: &Monomial, b: &Monomial, vars: core::ops::Range<usize>) -> Ordering {
    for i in vars {
        if a.exps[i] != b.exps[i] {
            return a.exps[i].cmp(&b.exps[i]);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::GrevLex => {
                if a.deg != b.deg {
                    return a.deg.cmp(&b.deg);
                }
                for i in (0..MAX_VARS).rev() {
                    if a.exps[i] != b.exps[i] {
                        return b.exps[i].cmp(&a.exps[i]);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Lex => lex_range(a, b, 0..MAX_VARS),
            MonomialOrder::Block { k, inner } => {
                let f = match inner {
                    InnerOrder::GrevLex => grevlex_range,
                    InnerOrder::Lex => lex_range,
                };
                f(a, b, 0..k).then_with(|| f(a, b, k..MAX_VARS))
            }
        }
    }

    /// Orders where every polynomial's leading monomial has maximal degree
    /// (the sugar-free "normal" pair selection relies on this for speed,
    /// not for correctness).
    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::GrevLex)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u8]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn divisibility() {
        assert!(m(&[1, 0, 2]).divides(&m(&[1, 1, 2])));
        assert!(!m(&[1, 0, 3]).divides(&m(&[1, 1, 2])));
        assert!(Monomial::ONE.divides(&m(&[0, 4])));
        assert!(m(&[127]).divides(&m(&[127])));
        assert!(!m(&[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]).divides(&m(&[5])));
        assert_eq!(m(&[2, 1]).lcm(&m(&[1, 3])), m(&[2, 3]));
        assert_eq!(m(&[2, 3]).div(&m(&[1, 3])), m(&[1]));
        assert!(m(&[1, 0]).coprime(&m(&[0, 2])));
        assert!(!m(&[1, 1]).coprime(&m(&[0, 2])));
    }

    #[test]
    fn orders() {
        let g = MonomialOrder::GrevLex;
        // x0 x2 < x1^2 in grevlex (x2 present is smaller)
        assert_eq!(g.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(MonomialOrder::Lex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Greater);
        let b = MonomialOrder::Block { k: 1, inner: InnerOrder::GrevLex };
        // anything with x0 beats anything without it
        assert_eq!(b.cmp(&m(&[1]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(b.cmp(&m(&[0, 2]), &m(&[0, 1, 1])), Ordering::Greater);
    }
}
