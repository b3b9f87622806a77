use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::monomial::{Monomial, MonomialOrder, MAX_EXPONENT, MAX_VARS};
use crate::error::{Error, Result};
use crate::field::Field;

/// Sparse polynomial: terms sorted strictly descending under the owning
/// ring's order, no zero coefficients. The zero polynomial has no terms.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiPoly<E> {
    pub(crate) terms: Vec<(Monomial, E)>,
}

impl<E> MultiPoly<E> {
    pub fn zero() -> Self {
        MultiPoly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, E)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, E)> {
        self.terms
    }

    pub fn leading(&self) -> Option<&(Monomial, E)> {
        self.terms.first()
    }

    pub fn lm(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.0)
    }

    pub fn lc(&self) -> Option<&E> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Largest total degree of a term.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    /// Variables that occur in some term.
    pub fn support_vars(&self) -> Vec<usize> {
        let mut seen = [false; MAX_VARS];
        for (m, _) in &self.terms {
            for (i, s) in seen.iter_mut().enumerate() {
                *s |= m.exp(i) > 0;
            }
        }
        (0..MAX_VARS).filter(|&i| seen[i]).collect()
    }

    pub fn coeff_of(&self, m: &Monomial) -> Option<&E> {
        self.terms.iter().find(|(t, _)| t == m).map(|(_, c)| c)
    }
}

/// Polynomial ring `F[x_0, ..., x_{n-1}]` with a fixed monomial order.
#[derive(Debug, Clone)]
pub struct PolyRing<F: Field> {
    field: F,
    nvars: usize,
    order: MonomialOrder,
    names: Arc<Vec<String>>,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, names: Vec<String>, order: MonomialOrder) -> Result<Self> {
        if names.len() > MAX_VARS {
            return Err(Error::TooManyVariables(names.len()));
        }
        if let MonomialOrder::Block { k, .. } = order {
            if k > names.len() {
                return Err(Error::TooManyVariables(k));
            }
        }
        Ok(PolyRing { nvars: names.len(), field, order, names: Arc::new(names) })
    }

    /// Variables named `prefix0, prefix1, ...`.
    pub fn with_prefix(field: F, prefix: &str, n: usize, order: MonomialOrder) -> Result<Self> {
        let names = (0..n).map(|i| alloc::format!("{prefix}{i}")).collect();
        Self::new(field, names, order)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same variables, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        PolyRing { field: self.field.clone(), nvars: self.nvars, order, names: self.names.clone() }
    }

    /// Same variables and order over another field.
    pub fn over<G: Field>(&self, field: G) -> PolyRing<G> {
        PolyRing { field, nvars: self.nvars, order: self.order, names: self.names.clone() }
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    /// Builds the canonical polynomial from arbitrary terms.
    pub fn from_terms(&self, mut terms: Vec<(Monomial, F::Elem)>) -> MultiPoly<F::Elem> {
        terms.sort_by(|a, b| self.order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = self.field.add(lc, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !self.field.is_zero(c));
        MultiPoly { terms: out }
    }

    /// Wraps terms already sorted descending with no zero coefficients;
    /// zeros are dropped, the order is checked in debug builds.
    pub fn from_sorted_terms(&self, mut terms: Vec<(Monomial, F::Elem)>) -> MultiPoly<F::Elem> {
        terms.retain(|(_, c)| !self.field.is_zero(c));
        debug_assert!(terms.windows(2).all(|w| self.order.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        MultiPoly { terms }
    }

    pub fn zero(&self) -> MultiPoly<F::Elem> {
        MultiPoly::zero()
    }

    pub fn one(&self) -> MultiPoly<F::Elem> {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: F::Elem) -> MultiPoly<F::Elem> {
        self.term(Monomial::ONE, c)
    }

    pub fn from_i64(&self, n: i64) -> MultiPoly<F::Elem> {
        self.constant(self.field.from_i64(n))
    }

    pub fn term(&self, m: Monomial, c: F::Elem) -> MultiPoly<F::Elem> {
        if self.field.is_zero(&c) {
            MultiPoly::zero()
        } else {
            MultiPoly { terms: vec![(m, c)] }
        }
    }

    pub fn var(&self, i: usize) -> MultiPoly<F::Elem> {
        assert!(i < self.nvars, "variable index out of range");
        self.term(Monomial::var(i), self.field.one())
    }

    pub fn vars(&self) -> Vec<MultiPoly<F::Elem>> {
        (0..self.nvars).map(|i| self.var(i)).collect()
    }

    fn merge(&self, a: &MultiPoly<F::Elem>, b: &MultiPoly<F::Elem>, negate_b: bool) -> MultiPoly<F::Elem> {
        let f = &self.field;
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() && j < b.terms.len() {
            let (ma, ca) = &a.terms[i];
            let (mb, cb) = &b.terms[j];
            match self.order.cmp(ma, mb) {
                Ordering::Greater => {
                    out.push((*ma, ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((*mb, if negate_b { f.neg(cb) } else { cb.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_b { f.sub(ca, cb) } else { f.add(ca, cb) };
                    if !f.is_zero(&c) {
                        out.push((*ma, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a.terms[i..].iter().cloned());
        out.extend(b.terms[j..].iter().map(|(m, c)| (*m, if negate_b { f.neg(c) } else { c.clone() })));
        MultiPoly { terms: out }
    }

    pub fn add(&self, a: &MultiPoly<F::Elem>, b: &MultiPoly<F::Elem>) -> MultiPoly<F::Elem> {
        self.merge(a, b, false)
    }

    pub fn sub(&self, a: &MultiPoly<F::Elem>, b: &MultiPoly<F::Elem>) -> MultiPoly<F::Elem> {
        self.merge(a, b, true)
    }

    pub fn neg(&self, a: &MultiPoly<F::Elem>) -> MultiPoly<F::Elem> {
        MultiPoly { terms: a.terms.iter().map(|(m, c)| (*m, self.field.neg(c))).collect() }
    }

    pub fn scale(&self, a: &MultiPoly<F::Elem>, c: &F::Elem) -> MultiPoly<F::Elem> {
        if self.field.is_zero(c) {
            return MultiPoly::zero();
        }
        MultiPoly { terms: a.terms.iter().map(|(m, x)| (*m, self.field.mul(x, c))).collect() }
    }

    /// `c * m * a`
    pub fn mul_term(&self, a: &MultiPoly<F::Elem>, m: &Monomial, c: &F::Elem) -> MultiPoly<F::Elem> {
        if self.field.is_zero(c) {
            return MultiPoly::zero();
        }
        MultiPoly { terms: a.terms.iter().map(|(t, x)| (t.mul(m), self.field.mul(x, c))).collect() }
    }

    pub fn mul(&self, a: &MultiPoly<F::Elem>, b: &MultiPoly<F::Elem>) -> MultiPoly<F::Elem> {
        if a.is_zero() || b.is_zero() {
            return MultiPoly::zero();
        }
        let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
        let mut acc = MultiPoly::zero();
        for (m, c) in &small.terms {
            acc = self.add(&acc, &self.mul_term(large, m, c));
        }
        acc
    }

    pub fn pow(&self, a: &MultiPoly<F::Elem>, e: u32) -> MultiPoly<F::Elem> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    pub fn sum<'b>(&self, items: impl IntoIterator<Item = &'b MultiPoly<F::Elem>>) -> MultiPoly<F::Elem>
    where
        F::Elem: 'b,
    {
        items.into_iter().fold(self.zero(), |acc, p| self.add(&acc, p))
    }

    /// Leading coefficient 1 (zero stays zero).
    pub fn monic(&self, a: &MultiPoly<F::Elem>) -> MultiPoly<F::Elem> {
        match a.lc() {
            None => MultiPoly::zero(),
            Some(c) if self.field.is_one(c) => a.clone(),
            Some(c) => {
                let ci = self.field.inv(c).unwrap();
                self.scale(a, &ci)
            }
        }
    }

    /// Exact value at `point`.
    pub fn eval(&self, a: &MultiPoly<F::Elem>, point: &[F::Elem]) -> F::Elem {
        assert_eq!(point.len(), self.nvars, "point length must equal the variable count");
        let f = &self.field;
        // power tables per variable up to the largest exponent used
        let mut maxe = [0u8; MAX_VARS];
        for (m, _) in &a.terms {
            for (i, e) in maxe.iter_mut().enumerate().take(self.nvars) {
                *e = (*e).max(m.exp(i));
            }
        }
        let tables: Vec<Vec<F::Elem>> = (0..self.nvars)
            .map(|i| {
                let mut t = vec![f.one()];
                for k in 1..=maxe[i] as usize {
                    let next = f.mul(&t[k - 1], &point[i]);
                    t.push(next);
                }
                t
            })
            .collect();
        let mut acc = f.zero();
        for (m, c) in &a.terms {
            let mut v = c.clone();
            for (i, table) in tables.iter().enumerate() {
                let e = m.exp(i) as usize;
                if e > 0 {
                    v = f.mul(&v, &table[e]);
                }
            }
            acc = f.add(&acc, &v);
        }
        acc
    }

    /// Formal partial derivative in variable `var`.
    pub fn diff(&self, a: &MultiPoly<F::Elem>, var: usize) -> MultiPoly<F::Elem> {
        assert!(var < self.nvars, "variable index out of range");
        let terms = a
            .terms
            .iter()
            .filter(|(m, _)| m.exp(var) > 0)
            .filter_map(|(m, c)| {
                let e = m.exp(var);
                let c2 = self.field.mul(c, &self.field.from_i64(e as i64));
                if self.field.is_zero(&c2) {
                    None
                } else {
                    Some((m.with_exp(var, e - 1), c2))
                }
            })
            .collect();
        // lowering one exponent can reorder terms under non-graded orders
        self.from_terms(terms)
    }

    pub fn gradient(&self, a: &MultiPoly<F::Elem>) -> Vec<MultiPoly<F::Elem>> {
        (0..self.nvars).map(|i| self.diff(a, i)).collect()
    }

    /// `a(images[0], ..., images[n-1])` computed in `target`.
    pub fn compose(
        &self,
        a: &MultiPoly<F::Elem>,
        target: &PolyRing<F>,
        images: &[MultiPoly<F::Elem>],
    ) -> MultiPoly<F::Elem> {
        assert_eq!(images.len(), self.nvars);
        let mut maxe = [0u8; MAX_VARS];
        for (m, _) in &a.terms {
            for (i, e) in maxe.iter_mut().enumerate().take(self.nvars) {
                *e = (*e).max(m.exp(i));
            }
        }
        let powers: Vec<Vec<MultiPoly<F::Elem>>> = (0..self.nvars)
            .map(|i| {
                let mut t = vec![target.one()];
                for k in 1..=maxe[i] as usize {
                    let next = target.mul(&t[k - 1], &images[i]);
                    t.push(next);
                }
                t
            })
            .collect();
        let mut acc = target.zero();
        for (m, c) in &a.terms {
            let mut v = target.constant(c.clone());
            for (i, table) in powers.iter().enumerate() {
                let e = m.exp(i) as usize;
                if e > 0 {
                    v = target.mul(&v, &table[e]);
                }
            }
            acc = target.add(&acc, &v);
        }
        acc
    }

    /// Moves `a` into `target`, sending variable `i` to `var_map[i]` and
    /// mapping coefficients with `coeff`. `None` if a coefficient fails to map.
    pub fn transfer<G: Field>(
        &self,
        a: &MultiPoly<F::Elem>,
        target: &PolyRing<G>,
        var_map: &[usize],
        coeff: impl Fn(&F::Elem) -> Option<G::Elem>,
    ) -> Option<MultiPoly<G::Elem>> {
        let mut terms = Vec::with_capacity(a.len());
        for (m, c) in &a.terms {
            let mut e = [0u8; MAX_VARS];
            for i in 0..self.nvars {
                if m.exp(i) > 0 {
                    e[var_map[i]] += m.exp(i);
                }
            }
            terms.push((Monomial::from_exponents(&e), coeff(c)?));
        }
        Some(target.from_terms(terms))
    }

    /// Same field: re-sorts `a` (possibly from a ring with another order or
    /// more variables that are unused) into this ring.
    pub fn import(&self, a: &MultiPoly<F::Elem>) -> MultiPoly<F::Elem> {
        self.from_terms(a.terms.clone())
    }

    /// Coefficient of `x_var^e` viewed as a polynomial in the other variables.
    pub fn coeff_in(&self, a: &MultiPoly<F::Elem>, var: usize, e: u8) -> MultiPoly<F::Elem> {
        let terms = a
            .terms
            .iter()
            .filter(|(m, _)| m.exp(var) == e)
            .map(|(m, c)| (m.with_exp(var, 0), c.clone()))
            .collect();
        self.from_terms(terms)
    }

    /// Determinant of a small square matrix of polynomials (Laplace
    /// expansion along the first row).
    pub fn det(&self, m: &[Vec<MultiPoly<F::Elem>>]) -> MultiPoly<F::Elem> {
        let n = m.len();
        match n {
            0 => self.one(),
            1 => m[0][0].clone(),
            2 => self.sub(&self.mul(&m[0][0], &m[1][1]), &self.mul(&m[0][1], &m[1][0])),
            _ => {
                let mut acc = self.zero();
                for j in 0..n {
                    if m[0][j].is_zero() {
                        continue;
                    }
                    let minor: Vec<Vec<MultiPoly<F::Elem>>> = m[1..]
                        .iter()
                        .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
                        .collect();
                    let term = self.mul(&m[0][j], &self.det(&minor));
                    acc = if j % 2 == 0 { self.add(&acc, &term) } else { self.sub(&acc, &term) };
                }
                acc
            }
        }
    }

    /// Canonical text: graded reverse lexicographic descending, explicit
    /// `*` and `^`.
    pub fn display(&self, a: &MultiPoly<F::Elem>) -> String {
        if a.is_zero() {
            return String::from("0");
        }
        let mut terms: Vec<&(Monomial, F::Elem)> = a.terms.iter().collect();
        terms.sort_by(|x, y| MonomialOrder::GrevLex.cmp(&y.0, &x.0));
        let mut out = String::new();
        for (idx, (m, c)) in terms.into_iter().enumerate() {
            let negative = self.field.is_negative(c);
            let abs = if negative { self.field.neg(c) } else { c.clone() };
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mono = self.display_monomial(m);
            if m.is_one() {
                out.push_str(&self.field.display(&abs));
            } else if self.field.is_one(&abs) {
                out.push_str(&mono);
            } else {
                out.push_str(&self.field.display(&abs));
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }

    pub fn display_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for i in 0..self.nvars {
            match m.exp(i) {
                0 => {}
                1 => parts.push(self.names[i].clone()),
                e => parts.push(alloc::format!("{}^{}", self.names[i], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// Largest exponent usable before [`Monomial`] overflows.
    pub fn max_exponent(&self) -> u8 {
        MAX_EXPONENT
    }
}
