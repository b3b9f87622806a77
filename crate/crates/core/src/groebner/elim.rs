use alloc::string::String;
use alloc::vec::Vec;

use super::{Caps, Ideal};
use crate::algebra::{InnerOrder, MonomialOrder, MultiPoly, PolyRing};
use crate::error::{Error, Result};
use crate::field::Field;

/// `I ∩ k[x_k, ..., x_{n-1}]`, expressed in the ring of the surviving
/// variables. The ideal's ring must use a block order eliminating exactly
/// the first `k` variables.
pub fn eliminate<F: Field>(ideal: &Ideal<F>, k: usize, caps: &Caps) -> Result<Ideal<F>> {
    let ring = ideal.ring();
    let inner = match ring.order() {
        MonomialOrder::Block { k: bk, inner } if bk == k => inner,
        _ => return Err(Error::Internal(alloc::format!("elimination of {k} variables needs a matching block order"))),
    };
    let gb = ideal.groebner(caps)?;
    let sub = PolyRing::new(
        ring.field().clone(),
        ring.names()[k..].to_vec(),
        match inner {
            InnerOrder::GrevLex => MonomialOrder::GrevLex,
            InnerOrder::Lex => MonomialOrder::Lex,
        },
    )?;
    let var_map: Vec<usize> = (0..ring.nvars()).map(|i| i.saturating_sub(k)).collect();
    let gens = gb
        .basis()
        .iter()
        .filter(|g| g.support_vars().iter().all(|&v| v >= k))
        .map(|g| ring.transfer(g, &sub, &var_map, |c| Some(c.clone())).unwrap())
        .collect();
    Ok(Ideal::new(sub, gens))
}

/// `ring` with one fresh variable prepended and a block order eliminating it.
fn with_tag<F: Field>(ring: &PolyRing<F>, tag: &str) -> Result<PolyRing<F>> {
    let mut names = Vec::with_capacity(ring.nvars() + 1);
    names.push(String::from(tag));
    names.extend(ring.names().iter().cloned());
    PolyRing::new(ring.field().clone(), names, MonomialOrder::Block { k: 1, inner: InnerOrder::GrevLex })
}

fn shift<F: Field>(ring: &PolyRing<F>, tagged: &PolyRing<F>, g: &MultiPoly<F::Elem>) -> MultiPoly<F::Elem> {
    let var_map: Vec<usize> = (1..=ring.nvars()).collect();
    ring.transfer(g, tagged, &var_map, |c| Some(c.clone())).unwrap()
}

/// Brings an eliminated ideal back into `ring` (same variables, original order).
fn restore<F: Field>(ring: &PolyRing<F>, ideal: Ideal<F>) -> Ideal<F> {
    let gens = ideal.gens().iter().map(|g| ring.import(g)).collect();
    Ideal::new(ring.clone(), gens)
}

/// `I ∩ J` via `t I + (1 - t) J` with `t` eliminated.
pub fn intersect<F: Field>(i: &Ideal<F>, j: &Ideal<F>, caps: &Caps) -> Result<Ideal<F>> {
    let ring = i.ring();
    let tagged = with_tag(ring, "_t")?;
    let t = tagged.var(0);
    let one_minus_t = tagged.sub(&tagged.one(), &t);
    let mut gens = Vec::with_capacity(i.gens().len() + j.gens().len());
    for g in i.gens() {
        gens.push(tagged.mul(&t, &shift(ring, &tagged, g)));
    }
    for g in j.gens() {
        gens.push(tagged.mul(&one_minus_t, &shift(ring, &tagged, g)));
    }
    let elim = eliminate(&Ideal::new(tagged, gens), 1, caps)?;
    Ok(restore(ring, elim))
}

/// Exact quotient `a / g` when `g` divides `a`.
fn exact_divide<F: Field>(ring: &PolyRing<F>, a: &MultiPoly<F::Elem>, g: &MultiPoly<F::Elem>) -> Result<MultiPoly<F::Elem>> {
    let field = ring.field();
    let (gm, gc) = g.leading().unwrap();
    let gci = field.inv(gc).unwrap();
    let mut rem = a.clone();
    let mut quot = Vec::new();
    while let Some((m, c)) = rem.leading().cloned() {
        if !gm.divides(&m) {
            return Err(Error::Internal(String::from("quotient generator is not divisible")));
        }
        let qm = m.div(gm);
        let qc = field.mul(&c, &gci);
        rem = ring.sub(&rem, &ring.mul_term(g, &qm, &qc));
        quot.push((qm, qc));
    }
    Ok(ring.from_terms(quot))
}

/// `(I : g)`, computed as `(I ∩ <g>) / g`.
pub fn ideal_quotient<F: Field>(i: &Ideal<F>, g: &MultiPoly<F::Elem>, caps: &Caps) -> Result<Ideal<F>> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ring = i.ring();
    let meet = intersect(i, &Ideal::new(ring.clone(), alloc::vec![g.clone()]), caps)?;
    let gens = meet.gens().iter().map(|h| exact_divide(ring, h, g)).collect::<Result<Vec<_>>>()?;
    Ok(Ideal::new(ring.clone(), gens))
}

/// `(I : h^∞)` via `I + <1 - y h>` with `y` eliminated.
pub fn saturate_by<F: Field>(i: &Ideal<F>, h: &MultiPoly<F::Elem>, caps: &Caps) -> Result<Ideal<F>> {
    if h.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ring = i.ring();
    let tagged = with_tag(ring, "_y")?;
    let mut gens: Vec<MultiPoly<F::Elem>> = i.gens().iter().map(|g| shift(ring, &tagged, g)).collect();
    let yh = tagged.mul(&tagged.var(0), &shift(ring, &tagged, h));
    gens.push(tagged.sub(&tagged.one(), &yh));
    let elim = eliminate(&Ideal::new(tagged, gens), 1, caps)?;
    Ok(restore(ring, elim))
}

/// `(I : J^∞) = ∩_h (I : h^∞)` over the generators `h` of `J`. Generators
/// already in `I` contribute the unit ideal and are skipped.
pub fn saturate<F: Field>(i: &Ideal<F>, j: &Ideal<F>, caps: &Caps) -> Result<Ideal<F>> {
    if j.gens().is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let gb = i.groebner(caps)?;
    let mut acc: Option<Ideal<F>> = None;
    for h in j.gens().iter().filter(|h| !gb.contains(h)) {
        let next = saturate_by(i, h, caps)?;
        acc = Some(match acc {
            None => next,
            Some(a) => intersect(&a, &next, caps)?,
        });
    }
    Ok(acc.unwrap_or_else(|| Ideal::new(i.ring().clone(), alloc::vec![i.ring().one()])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn ring(names: &[&str], order: MonomialOrder) -> PolyRing<Rationals> {
        PolyRing::new(Rationals, names.iter().map(|s| String::from(*s)).collect(), order).unwrap()
    }

    fn ideal(r: &PolyRing<Rationals>, gens: &[&str]) -> Ideal<Rationals> {
        Ideal::new(r.clone(), gens.iter().map(|g| r.parse(g).unwrap()).collect())
    }

    fn same(a: &Ideal<Rationals>, b: &Ideal<Rationals>) -> bool {
        let caps = Caps::default();
        let ga = a.groebner(&caps).unwrap();
        let gb = b.groebner(&caps).unwrap();
        ga.basis() == gb.basis()
    }

    #[test]
    fn elimination_examples() {
        let caps = Caps::default();
        let block = MonomialOrder::Block { k: 1, inner: InnerOrder::GrevLex };
        let r = ring(&["t", "x", "y"], block);
        let sub = ring(&["x", "y"], MonomialOrder::GrevLex);
        let e = eliminate(&ideal(&r, &["x - t", "y - t^2"]), 1, &caps).unwrap();
        assert!(same(&e, &ideal(&sub, &["y - x^2"])));
        let e = eliminate(&ideal(&r, &["t"]), 1, &caps).unwrap();
        assert!(e.gens().is_empty());
        let e = eliminate(&ideal(&r, &["t*x - 1", "t*y"]), 1, &caps).unwrap();
        assert!(same(&e, &ideal(&sub, &["y"])));
    }

    #[test]
    fn quotient_and_saturation_examples() {
        let caps = Caps::default();
        let r = ring(&["x", "y"], MonomialOrder::GrevLex);
        let x = r.parse("x").unwrap();
        let y = r.parse("y").unwrap();
        assert!(same(&ideal_quotient(&ideal(&r, &["x*y"]), &x, &caps).unwrap(), &ideal(&r, &["y"])));
        assert!(same(&ideal_quotient(&ideal(&r, &["x"]), &y, &caps).unwrap(), &ideal(&r, &["x"])));
        let sat = saturate(&ideal(&r, &["x^2*y"]), &ideal(&r, &["x"]), &caps).unwrap();
        assert!(same(&sat, &ideal(&r, &["y"])));
        // saturating by a two-generator ideal is not the same as saturating by each in turn
        let i = ideal(&r, &["x*y"]);
        let j = ideal(&r, &["x", "y"]);
        assert!(same(&saturate(&i, &j, &caps).unwrap(), &i));
        assert!(same(&saturate(&saturate(&i, &j, &caps).unwrap(), &j, &caps).unwrap(), &saturate(&i, &j, &caps).unwrap()));
        let meet = intersect(&ideal(&r, &["x"]), &ideal(&r, &["y"]), &caps).unwrap();
        assert!(same(&meet, &ideal(&r, &["x*y"])));
    }
}
