//! Monomials, term orders, and sparse module elements.
//!
//! A [`Vector`] is an element of a graded free module `⊕ P·e_i`; polynomials
//! are vectors supported on component 0. Terms are kept strictly descending
//! in a [`ModOrder`], and every arithmetic routine takes the order explicitly
//! through a [`Ctx`] so that elimination and module orders share one code path.

use std::cmp::Ordering;

use smallvec::SmallVec;

use crate::field::Field;

pub type Mono = SmallVec<[u16; 12]>;

pub fn mono_one(n: usize) -> Mono {
    SmallVec::from_elem(0, n)
}

pub fn mono_var(n: usize, i: usize, e: u16) -> Mono {
    let mut m = mono_one(n);
    m[i] = e;
    m
}

pub fn mono_mul(a: &Mono, b: &Mono) -> Mono {
    a.iter().zip(b.iter()).map(|(x, y)| x + y).collect()
}

pub fn mono_divides(a: &Mono, b: &Mono) -> bool {
    a.iter().zip(b.iter()).all(|(x, y)| x <= y)
}

/// `b / a`, assuming `a | b`.
pub fn mono_div(b: &Mono, a: &Mono) -> Mono {
    b.iter().zip(a.iter()).map(|(x, y)| x - y).collect()
}

pub fn mono_lcm(a: &Mono, b: &Mono) -> Mono {
    a.iter().zip(b.iter()).map(|(x, y)| *x.max(y)).collect()
}

pub fn mono_coprime(a: &Mono, b: &Mono) -> bool {
    a.iter().zip(b.iter()).all(|(x, y)| *x == 0 || *y == 0)
}

pub fn mono_is_one(a: &Mono) -> bool {
    a.iter().all(|&x| x == 0)
}

pub fn mono_weight(a: &Mono, weights: &[i64]) -> i64 {
    a.iter().zip(weights).map(|(e, w)| *e as i64 * w).sum()
}

/// Monomial orders on the polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonoOrder {
    /// Weighted degree, ties broken reverse-lexicographically.
    Degrevlex,
    /// Pure lexicographic with `x_0 > x_1 > ...`.
    Lex,
    /// Block order: the flagged variables are eliminated (compared first by
    /// plain total degree), the rest compared by weighted degrevlex.
    Elim(Vec<bool>),
}

fn revlex(a: &Mono, b: &Mono, mask: Option<(&[bool], bool)>) -> Ordering {
    for i in (0..a.len()).rev() {
        if let Some((m, want)) = mask {
            if m[i] != want {
                continue;
            }
        }
        if a[i] != b[i] {
            // smaller exponent in the last differing variable is larger
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

impl MonoOrder {
    pub fn cmp(&self, a: &Mono, b: &Mono, weights: &[i64]) -> Ordering {
        match self {
            MonoOrder::Degrevlex => mono_weight(a, weights)
                .cmp(&mono_weight(b, weights))
                .then_with(|| revlex(a, b, None)),
            MonoOrder::Lex => {
                for i in 0..a.len() {
                    if a[i] != b[i] {
                        return a[i].cmp(&b[i]);
                    }
                }
                Ordering::Equal
            }
            MonoOrder::Elim(mask) => {
                let elim = |m: &Mono| -> u32 {
                    m.iter().zip(mask).filter(|(_, f)| **f).map(|(e, _)| *e as u32).sum()
                };
                let rest = |m: &Mono| -> i64 {
                    m.iter()
                        .zip(mask)
                        .zip(weights)
                        .filter(|((_, f), _)| !**f)
                        .map(|((e, _), w)| *e as i64 * w)
                        .sum()
                };
                elim(a)
                    .cmp(&elim(b))
                    .then_with(|| rest(a).cmp(&rest(b)))
                    .then_with(|| revlex(a, b, Some((mask, false))))
                    .then_with(|| revlex(a, b, Some((mask, true))))
            }
        }
    }
}

/// Term order on a free module: block of the component first (lower block
/// dominates), then shifted weight, then the monomial order, then the
/// component index (lower index dominates).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModOrder {
    pub mono: MonoOrder,
    pub wshift: Vec<i64>,
    pub block: Vec<u8>,
}

impl ModOrder {
    pub fn new(mono: MonoOrder, wshift: Vec<i64>) -> Self {
        let block = vec![0; wshift.len()];
        ModOrder { mono, wshift, block }
    }

    pub fn rank(&self) -> usize {
        self.wshift.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term<E> {
    pub comp: u32,
    pub mono: Mono,
    pub coef: E,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector<E> {
    pub terms: Vec<Term<E>>,
}

impl<E> Default for Vector<E> {
    fn default() -> Self {
        Vector { terms: Vec::new() }
    }
}

impl<E: Clone> Vector<E> {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term<E>> {
        self.terms.first()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Keeps only components in `keep`, renumbering by `map`.
    pub fn remap_components(&self, map: impl Fn(u32) -> Option<u32>) -> Self {
        Vector {
            terms: self
                .terms
                .iter()
                .filter_map(|t| map(t.comp).map(|c| Term { comp: c, mono: t.mono.clone(), coef: t.coef.clone() }))
                .collect(),
        }
    }

    /// Entry at component `c` as a polynomial on component 0.
    pub fn component(&self, c: u32) -> Vector<E> {
        Vector {
            terms: self
                .terms
                .iter()
                .filter(|t| t.comp == c)
                .map(|t| Term { comp: 0, mono: t.mono.clone(), coef: t.coef.clone() })
                .collect(),
        }
    }
}

/// Arithmetic context: field, variable weights and module term order.
#[derive(Clone, Copy)]
pub struct Ctx<'a, F: Field> {
    pub field: &'a F,
    pub weights: &'a [i64],
    pub ord: &'a ModOrder,
}

impl<'a, F: Field> Ctx<'a, F> {
    pub fn new(field: &'a F, weights: &'a [i64], ord: &'a ModOrder) -> Self {
        Ctx { field, weights, ord }
    }

    pub fn cmp_term(&self, ac: u32, am: &Mono, bc: u32, bm: &Mono) -> Ordering {
        let o = self.ord;
        o.block[bc as usize]
            .cmp(&o.block[ac as usize])
            .then_with(|| {
                let wa = mono_weight(am, self.weights) + o.wshift[ac as usize];
                let wb = mono_weight(bm, self.weights) + o.wshift[bc as usize];
                wa.cmp(&wb)
            })
            .then_with(|| o.mono.cmp(am, bm, self.weights))
            .then_with(|| bc.cmp(&ac))
    }

    /// Sorts terms descending and combines duplicates.
    pub fn normalize(&self, mut terms: Vec<Term<F::Elem>>) -> Vector<F::Elem> {
        terms.sort_by(|a, b| self.cmp_term(b.comp, &b.mono, a.comp, &a.mono));
        let mut out: Vec<Term<F::Elem>> = Vec::with_capacity(terms.len());
        for t in terms {
            if let Some(last) = out.last_mut() {
                if last.comp == t.comp && last.mono == t.mono {
                    last.coef = self.field.add(&last.coef, &t.coef);
                    continue;
                }
            }
            out.push(t);
        }
        out.retain(|t| !self.field.is_zero(&t.coef));
        Vector { terms: out }
    }

    pub fn add(&self, a: &Vector<F::Elem>, b: &Vector<F::Elem>) -> Vector<F::Elem> {
        self.axpy(a, &self.field.one(), &mono_one(self.weights.len()), b)
    }

    pub fn sub(&self, a: &Vector<F::Elem>, b: &Vector<F::Elem>) -> Vector<F::Elem> {
        self.axpy(a, &self.field.neg(&self.field.one()), &mono_one(self.weights.len()), b)
    }

    /// `a + c·m·b` by a single merge pass.
    pub fn axpy(
        &self,
        a: &Vector<F::Elem>,
        c: &F::Elem,
        m: &Mono,
        b: &Vector<F::Elem>,
    ) -> Vector<F::Elem> {
        let f = self.field;
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let mut i = 0;
        let mut j = 0;
        let bm: Vec<Mono> = b.terms.iter().map(|t| mono_mul(&t.mono, m)).collect();
        while i < a.terms.len() || j < b.terms.len() {
            let ord = if i == a.terms.len() {
                Ordering::Less
            } else if j == b.terms.len() {
                Ordering::Greater
            } else {
                self.cmp_term(a.terms[i].comp, &a.terms[i].mono, b.terms[j].comp, &bm[j])
            };
            match ord {
                Ordering::Greater => {
                    out.push(a.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let coef = f.mul(c, &b.terms[j].coef);
                    if !f.is_zero(&coef) {
                        out.push(Term { comp: b.terms[j].comp, mono: bm[j].clone(), coef });
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let coef = f.add(&a.terms[i].coef, &f.mul(c, &b.terms[j].coef));
                    if !f.is_zero(&coef) {
                        out.push(Term { comp: a.terms[i].comp, mono: a.terms[i].mono.clone(), coef });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Vector { terms: out }
    }

    /// `c·m·a`; the order is compatible with multiplication so no resort.
    pub fn scale_mono(&self, a: &Vector<F::Elem>, c: &F::Elem, m: &Mono) -> Vector<F::Elem> {
        if self.field.is_zero(c) {
            return Vector::zero();
        }
        Vector {
            terms: a
                .terms
                .iter()
                .map(|t| Term { comp: t.comp, mono: mono_mul(&t.mono, m), coef: self.field.mul(c, &t.coef) })
                .collect(),
        }
    }

    pub fn scale(&self, a: &Vector<F::Elem>, c: &F::Elem) -> Vector<F::Elem> {
        self.scale_mono(a, c, &mono_one(self.weights.len()))
    }

    pub fn neg(&self, a: &Vector<F::Elem>) -> Vector<F::Elem> {
        self.scale(a, &self.field.neg(&self.field.one()))
    }

    /// Polynomial `p` (component 0) times module element `a`.
    pub fn mul_poly(&self, p: &Vector<F::Elem>, a: &Vector<F::Elem>) -> Vector<F::Elem> {
        let mut acc = Vector::zero();
        for t in &p.terms {
            acc = self.axpy(&acc, &t.coef, &t.mono, a);
        }
        acc
    }

    pub fn monic(&self, a: &Vector<F::Elem>) -> Vector<F::Elem> {
        match a.lead() {
            None => Vector::zero(),
            Some(t) => {
                let inv = self.field.inv(&t.coef).expect("lead coefficient is nonzero");
                self.scale(a, &inv)
            }
        }
    }

    /// Re-sorts a vector that was ordered under a different context.
    pub fn resort(&self, a: &Vector<F::Elem>) -> Vector<F::Elem> {
        self.normalize(a.terms.clone())
    }

    pub fn constant(&self, c: F::Elem, comp: u32) -> Vector<F::Elem> {
        if self.field.is_zero(&c) {
            return Vector::zero();
        }
        Vector { terms: vec![Term { comp, mono: mono_one(self.weights.len()), coef: c }] }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn m(v: &[u16]) -> Mono {
        v.iter().copied().collect()
    }

    #[test]
    fn degrevlex_examples() {
        let w = [1, 1, 1];
        let o = MonoOrder::Degrevlex;
        // x^2 > xy > y^2 > xz
        assert_eq!(o.cmp(&m(&[2, 0, 0]), &m(&[1, 1, 0]), &w), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[1, 0, 1]), &w), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 0, 1]), &m(&[1, 1, 0]), &w), Ordering::Less);
    }

    #[test]
    fn elimination_order_puts_eliminated_first() {
        let w = [1, 1, 0];
        let o = MonoOrder::Elim(vec![false, false, true]);
        assert_eq!(o.cmp(&m(&[0, 0, 1]), &m(&[5, 5, 0]), &w), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 1, 1]), &w), Ordering::Greater);
    }

    #[test]
    fn axpy_cancels() {
        let f = PrimeField::new(7).unwrap();
        let w = [1, 1];
        let ord = ModOrder::new(MonoOrder::Degrevlex, vec![0]);
        let ctx = Ctx::new(&f, &w, &ord);
        let a = ctx.normalize(vec![
            Term { comp: 0, mono: m(&[1, 0]), coef: 1 },
            Term { comp: 0, mono: m(&[0, 1]), coef: 3 },
        ]);
        let z = ctx.sub(&a, &a);
        assert!(z.is_zero());
    }
}
