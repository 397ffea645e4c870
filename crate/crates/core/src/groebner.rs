//! Buchberger's algorithm for submodules of graded free modules, plus the
//! derived operations: normal forms, syzygies, kernels, elimination,
//! intersections and colons.
//!
//! Pairs are processed in order of (sugar, kind, creation index). Inputs are
//! queued like pairs, after the S-pairs of the same degree, so for
//! homogeneous input an input generator reduces to zero exactly when it lies
//! in the span of the generators before it. That gives minimal generating
//! sets for free.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{
    mono_coprime, mono_div, mono_divides, mono_lcm, mono_weight, Ctx, ModOrder, Mono, MonoOrder, Vector,
};
use crate::ring::{Poly, PolyRing};

#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    pub ring: Arc<PolyRing<F>>,
    pub ord: ModOrder,
    /// Monic, reduced, sorted by ascending leading term.
    pub gens: Vec<Vector<F::Elem>>,
}

#[derive(Clone, Copy, Debug)]
enum Job {
    Input(usize),
    Pair(usize, usize),
}

struct Lead {
    comp: u32,
    mono: Mono,
    mask: u64,
}

fn support_mask(m: &Mono) -> u64 {
    m.iter().enumerate().filter(|(_, e)| **e > 0).fold(0u64, |acc, (i, _)| acc | (1 << (i % 64)))
}

struct Builder<'a, F: Field> {
    ctx: Ctx<'a, F>,
    basis: Vec<Vector<F::Elem>>,
    leads: Vec<Lead>,
    alive: Vec<bool>,
    queue: BTreeMap<(i64, u8, u64), (Job, u32, Mono)>,
    seq: u64,
}

impl<'a, F: Field> Builder<'a, F> {
    fn sugar(&self, comp: u32, m: &Mono) -> i64 {
        mono_weight(m, self.ctx.weights) + self.ctx.ord.wshift[comp as usize]
    }

    fn find_divisor(&self, comp: u32, m: &Mono, skip: Option<usize>) -> Option<usize> {
        let mask = support_mask(m);
        (0..self.basis.len()).find(|&i| {
            self.alive[i]
                && Some(i) != skip
                && self.leads[i].comp == comp
                && self.leads[i].mask & !mask == 0
                && mono_divides(&self.leads[i].mono, m)
        })
    }

    /// Reduces `f`; with `full` unset only the leading term is cleared.
    fn reduce(&self, mut f: Vector<F::Elem>, full: bool, skip: Option<usize>) -> Vector<F::Elem> {
        let field = self.ctx.field;
        let mut start = 0;
        while start < f.terms.len() {
            let t = &f.terms[start];
            match self.find_divisor(t.comp, &t.mono, skip) {
                Some(i) => {
                    let g = &self.basis[i];
                    let m = mono_div(&t.mono, &self.leads[i].mono);
                    let c = field.neg(&t.coef);
                    let tail = Vector { terms: f.terms.split_off(start) };
                    let reduced = self.ctx.axpy(&tail, &c, &m, g);
                    f.terms.extend(reduced.terms);
                }
                None => {
                    if !full {
                        break;
                    }
                    start += 1;
                }
            }
        }
        f
    }

    fn push(&mut self, key: (i64, u8), job: Job, comp: u32, lcm: Mono) {
        self.queue.insert((key.0, key.1, self.seq), (job, comp, lcm));
        self.seq += 1;
    }

    /// Adds a monic, top-reduced element and updates the pair queue with the
    /// Gebauer–Möller criteria.
    fn add(&mut self, h: Vector<F::Elem>) {
        let lt = h.lead().expect("nonzero");
        let (comp, m) = (lt.comp, lt.mono.clone());
        let n = self.basis.len();
        let rank_one = self.ctx.ord.rank() == 1;

        let mut cand: Vec<(usize, Mono, bool)> = (0..n)
            .filter(|&i| self.alive[i] && self.leads[i].comp == comp)
            .map(|i| {
                let l = mono_lcm(&self.leads[i].mono, &m);
                (i, l, rank_one && mono_coprime(&self.leads[i].mono, &m))
            })
            .collect();
        let mut kept: Vec<(usize, Mono, bool)> = Vec::new();
        while !cand.is_empty() {
            let p = cand.remove(0);
            let dominated = cand.iter().chain(kept.iter()).any(|q| mono_divides(&q.1, &p.1));
            if p.2 || !dominated {
                kept.push(p);
            }
        }
        kept.retain(|p| !p.2);

        let leads = &self.leads;
        self.queue.retain(|_, (job, c, lcm)| {
            let Job::Pair(i, j) = *job else { return true };
            if *c != comp || !mono_divides(&m, lcm) {
                return true;
            }
            mono_lcm(&leads[i].mono, &m) == *lcm || mono_lcm(&leads[j].mono, &m) == *lcm
        });

        for i in 0..n {
            if self.alive[i] && self.leads[i].comp == comp && mono_divides(&m, &self.leads[i].mono) {
                self.alive[i] = false;
            }
        }
        self.leads.push(Lead { comp, mask: support_mask(&m), mono: m });
        self.basis.push(h);
        self.alive.push(true);
        for (i, l, _) in kept {
            let s = self.sugar(comp, &l);
            self.push((s, 0), Job::Pair(i, n), comp, l);
        }
    }

    fn spoly(&self, i: usize, j: usize, lcm: &Mono) -> Vector<F::Elem> {
        let f = self.ctx.field;
        let a = self.ctx.scale_mono(&self.basis[i], &f.one(), &mono_div(lcm, &self.leads[i].mono));
        self.ctx.axpy(&a, &f.neg(&f.one()), &mono_div(lcm, &self.leads[j].mono), &self.basis[j])
    }

    fn run(&mut self, inputs: &[Vector<F::Elem>]) -> Vec<bool> {
        let mut minimal = vec![false; inputs.len()];
        for (k, g) in inputs.iter().enumerate() {
            if let Some(t) = g.lead() {
                let s = self.sugar(t.comp, &t.mono);
                let (c, m) = (t.comp, t.mono.clone());
                self.push((s, 1), Job::Input(k), c, m);
            }
        }
        while let Some((_, (job, _, lcm))) = self.queue.pop_first() {
            let f = match job {
                Job::Input(k) => inputs[k].clone(),
                Job::Pair(i, j) => self.spoly(i, j, &lcm),
            };
            let h = self.reduce(f, false, None);
            if h.is_zero() {
                continue;
            }
            if let Job::Input(k) = job {
                minimal[k] = true;
            }
            let h = self.ctx.monic(&h);
            self.add(h);
        }
        minimal
    }

    fn finish(mut self) -> Vec<Vector<F::Elem>> {
        let idx: Vec<usize> = (0..self.basis.len()).filter(|&i| self.alive[i]).collect();
        let mut out = Vec::with_capacity(idx.len());
        for &i in &idx {
            let g = std::mem::take(&mut self.basis[i]);
            let head = Vector { terms: g.terms[..1].to_vec() };
            let tail = Vector { terms: g.terms[1..].to_vec() };
            let tail = self.reduce(tail, true, Some(i));
            self.basis[i] = g;
            out.push(self.ctx.add(&head, &tail));
        }
        let ctx = self.ctx;
        out.sort_by(|a, b| {
            let (x, y) = (a.lead().unwrap(), b.lead().unwrap());
            ctx.cmp_term(x.comp, &x.mono, y.comp, &y.mono)
        });
        out
    }
}

impl<F: Field> GroebnerBasis<F> {
    /// Computes a reduced basis. Inputs are assumed homogeneous with respect
    /// to the weight grading shifted by `ord.wshift`; callers validate.
    pub fn compute(ring: &Arc<PolyRing<F>>, ord: ModOrder, inputs: &[Vector<F::Elem>]) -> Self {
        Self::compute_tracked(ring, ord, inputs).0
    }

    /// Also reports which inputs are needed: `flags[k]` is false exactly
    /// when input `k` lies in the span of the earlier, lower-degree inputs.
    pub fn compute_tracked(
        ring: &Arc<PolyRing<F>>,
        ord: ModOrder,
        inputs: &[Vector<F::Elem>],
    ) -> (Self, Vec<bool>) {
        let (gens, flags) = {
            let ctx = Ctx::new(&ring.field, &ring.weights, &ord);
            let inputs: Vec<_> = inputs.iter().map(|v| ctx.resort(v)).collect();
            let mut b = Builder {
                ctx,
                basis: Vec::new(),
                leads: Vec::new(),
                alive: Vec::new(),
                queue: BTreeMap::new(),
                seq: 0,
            };
            let flags = b.run(&inputs);
            (b.finish(), flags)
        };
        (GroebnerBasis { ring: Arc::clone(ring), ord, gens }, flags)
    }

    pub fn of_ideal(ring: &Arc<PolyRing<F>>, gens: &[Poly<F::Elem>]) -> Result<Self> {
        Self::of_submodule(ring, &[Degree::zero(ring.rank)], gens)
    }

    /// Validates homogeneity against the generator degrees `shifts` and
    /// computes in the default module order.
    pub fn of_submodule(ring: &Arc<PolyRing<F>>, shifts: &[Degree], gens: &[Vector<F::Elem>]) -> Result<Self> {
        for g in gens {
            check_components(g, shifts.len())?;
            ring.vector_degree(g, shifts)?;
        }
        Ok(Self::compute(ring, ring.module_order(shifts), gens))
    }

    pub fn ctx(&self) -> Ctx<'_, F> {
        Ctx::new(&self.ring.field, &self.ring.weights, &self.ord)
    }

    pub fn rank(&self) -> usize {
        self.ord.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    fn builder(&self) -> Builder<'_, F> {
        let leads = self
            .gens
            .iter()
            .map(|g| {
                let t = g.lead().unwrap();
                Lead { comp: t.comp, mask: support_mask(&t.mono), mono: t.mono.clone() }
            })
            .collect();
        Builder {
            ctx: self.ctx(),
            basis: self.gens.clone(),
            leads,
            alive: vec![true; self.gens.len()],
            queue: BTreeMap::new(),
            seq: 0,
        }
    }

    /// Fully reduced remainder; `f` may be ordered under any order.
    pub fn normal_form(&self, f: &Vector<F::Elem>) -> Vector<F::Elem> {
        let f = self.ctx().resort(f);
        self.builder().reduce(f, true, None)
    }

    pub fn checked_normal_form(&self, f: &Vector<F::Elem>) -> Result<Vector<F::Elem>> {
        check_components(f, self.rank())?;
        Ok(self.normal_form(f))
    }

    pub fn contains(&self, f: &Vector<F::Elem>) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Leading (component, monomial) pairs.
    pub fn leads(&self) -> Vec<(u32, Mono)> {
        self.gens.iter().map(|g| g.lead().map(|t| (t.comp, t.mono.clone())).unwrap()).collect()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.gens.iter().any(|g| g.lead().is_some_and(|t| t.mono.iter().all(|&e| e == 0)))
    }

    /// Buchberger criterion with an independent plain reducer: every S-pair
    /// of leads in the same component reduces to zero, and no lead divides
    /// another.
    pub fn certify(&self) -> bool {
        let ctx = self.ctx();
        let f = ctx.field;
        let leads = self.leads();
        for i in 0..leads.len() {
            for j in 0..leads.len() {
                if i != j && leads[i].0 == leads[j].0 && mono_divides(&leads[i].1, &leads[j].1) {
                    return false;
                }
            }
        }
        for i in 0..self.gens.len() {
            for j in (i + 1)..self.gens.len() {
                if leads[i].0 != leads[j].0 {
                    continue;
                }
                let l = mono_lcm(&leads[i].1, &leads[j].1);
                let ci = f.inv(&self.gens[i].terms[0].coef).unwrap();
                let cj = f.inv(&self.gens[j].terms[0].coef).unwrap();
                let a = ctx.scale_mono(&self.gens[i], &ci, &mono_div(&l, &leads[i].1));
                let s = ctx.axpy(&a, &f.neg(&cj), &mono_div(&l, &leads[j].1), &self.gens[j]);
                if !plain_reduce(&ctx, &self.gens, s).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Textbook multivariate division, kept separate from the builder so that
/// certification does not share code with construction.
fn plain_reduce<F: Field>(ctx: &Ctx<'_, F>, gens: &[Vector<F::Elem>], mut f: Vector<F::Elem>) -> Vector<F::Elem> {
    let field = ctx.field;
    let mut rem: Vec<_> = Vec::new();
    while let Some(t) = f.terms.first().cloned() {
        let hit = gens.iter().find(|g| {
            let l = &g.terms[0];
            l.comp == t.comp && mono_divides(&l.mono, &t.mono)
        });
        match hit {
            Some(g) => {
                let l = &g.terms[0];
                let c = field.neg(&field.mul(&t.coef, &field.inv(&l.coef).unwrap()));
                f = ctx.axpy(&f, &c, &mono_div(&t.mono, &l.mono), g);
            }
            None => {
                rem.push(t);
                f.terms.remove(0);
            }
        }
    }
    Vector { terms: rem }
}

fn check_components<E: Clone>(v: &Vector<E>, rank: usize) -> Result<()> {
    if let Some(t) = v.terms.iter().find(|t| t.comp as usize >= rank) {
        return Err(Error::ModuleMismatch(format!("component {} in a module of rank {rank}", t.comp)));
    }
    Ok(())
}

/// Shifted weight of a homogeneous vector.
pub fn vector_weight<E: Clone>(v: &Vector<E>, weights: &[i64], wshift: &[i64]) -> Option<i64> {
    v.lead().map(|t| mono_weight(&t.mono, weights) + wshift[t.comp as usize])
}

/// Kernel of `P^s -> F`, `e_i ↦ cols[i]`, where `F` carries `ord` and the
/// source basis element `e_i` has weight `src_wshift[i]`.
///
/// The result is a Gröbner basis of the kernel for the order on `P^s` with
/// weights `src_wshift` and the ring's monomial order.
pub fn syzygies<F: Field>(
    ring: &Arc<PolyRing<F>>,
    ord: &ModOrder,
    cols: &[Vector<F::Elem>],
    src_wshift: &[i64],
) -> Vec<Vector<F::Elem>> {
    let t = ord.rank();
    let s = cols.len();
    let mut wshift = ord.wshift.clone();
    wshift.extend_from_slice(src_wshift);
    let mut block = vec![0u8; t];
    block.extend(std::iter::repeat_n(1, s));
    let big = ModOrder { mono: ord.mono.clone(), wshift, block };
    let one = ring.field.one();
    let inputs: Vec<Vector<F::Elem>> = cols
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let mut terms = c.terms.clone();
            terms.push(crate::poly::Term { comp: (t + i) as u32, mono: ring.one_mono(), coef: one.clone() });
            terms
        })
        .map(|terms| Ctx::new(&ring.field, &ring.weights, &big).normalize(terms))
        .collect();
    let gb = GroebnerBasis::compute(ring, big, &inputs);
    let small = ModOrder::new(ord.mono.clone(), src_wshift.to_vec());
    let ctx = Ctx::new(&ring.field, &ring.weights, &small);
    gb.gens
        .iter()
        .filter(|g| g.lead().is_some_and(|l| l.comp as usize >= t))
        .map(|g| ctx.resort(&g.remap_components(|c| c.checked_sub(t as u32))))
        .collect()
}

/// Minimal generators of the submodule spanned by homogeneous `gens`,
/// scanned in degree order; returns a subset of the inputs.
pub fn minimal_generators<F: Field>(
    ring: &Arc<PolyRing<F>>,
    ord: &ModOrder,
    gens: &[Vector<F::Elem>],
) -> Vec<Vector<F::Elem>> {
    let (_, flags) = GroebnerBasis::compute_tracked(ring, ord.clone(), gens);
    gens.iter().zip(flags).filter(|(_, keep)| *keep).map(|(g, _)| g.clone()).collect()
}

/// Linear combination `Σ c_i · gens[i]` with polynomial coefficients read
/// from the components of `coefs`.
pub fn combine<F: Field>(ctx: &Ctx<'_, F>, coefs: &Vector<F::Elem>, gens: &[Vector<F::Elem>]) -> Vector<F::Elem> {
    let mut acc = Vector::zero();
    for t in &coefs.terms {
        acc = ctx.axpy(&acc, &t.coef, &t.mono, &gens[t.comp as usize]);
    }
    acc
}

fn wshifts_of<F: Field>(ring: &PolyRing<F>, ord: &ModOrder, gens: &[Vector<F::Elem>]) -> Vec<i64> {
    gens.iter().map(|g| vector_weight(g, &ring.weights, &ord.wshift).unwrap_or(0)).collect()
}

/// Sorts by descending leading term.
pub fn sort_desc<F: Field>(ctx: &Ctx<'_, F>, v: &mut [Vector<F::Elem>]) {
    v.sort_by(|a, b| match (a.lead(), b.lead()) {
        (Some(x), Some(y)) => ctx.cmp_term(y.comp, &y.mono, x.comp, &x.mono),
        (a, b) => b.is_some().cmp(&a.is_some()),
    });
}

/// `U ∩ V` inside the free module carrying `ord`.
pub fn intersect<F: Field>(
    ring: &Arc<PolyRing<F>>,
    ord: &ModOrder,
    u: &[Vector<F::Elem>],
    v: &[Vector<F::Elem>],
) -> Vec<Vector<F::Elem>> {
    let u: Vec<_> = u.iter().filter(|g| !g.is_zero()).cloned().collect();
    let v: Vec<_> = v.iter().filter(|g| !g.is_zero()).cloned().collect();
    if u.is_empty() || v.is_empty() {
        return Vec::new();
    }
    let mut cols = u.clone();
    cols.extend(v.iter().cloned());
    let ws = wshifts_of(ring, ord, &cols);
    let ctx = Ctx::new(&ring.field, &ring.weights, ord);
    let k = u.len() as u32;
    let out: Vec<_> = syzygies(ring, ord, &cols, &ws)
        .iter()
        .map(|s| ctx.monic(&combine(&ctx, &s.remap_components(|c| (c < k).then_some(c)), &u)))
        .filter(|g| !g.is_zero())
        .collect();
    minimal_generators(ring, ord, &out)
}

/// `U :_F f = {m : f·m ∈ U}` for a single polynomial `f ≠ 0`.
pub fn colon_element<F: Field>(
    ring: &Arc<PolyRing<F>>,
    ord: &ModOrder,
    u: &[Vector<F::Elem>],
    f: &Poly<F::Elem>,
) -> Vec<Vector<F::Elem>> {
    let t = ord.rank();
    let ctx = Ctx::new(&ring.field, &ring.weights, ord);
    let wf = mono_weight(&f.lead().expect("nonzero").mono, &ring.weights);
    let mut cols = Vec::with_capacity(t + u.len());
    let mut ws = Vec::with_capacity(t + u.len());
    for c in 0..t {
        let fe: Vector<F::Elem> = f.remap_components(|_| Some(c as u32));
        cols.push(ctx.resort(&fe));
        ws.push(ord.wshift[c] + wf);
    }
    let u: Vec<_> = u.iter().filter(|g| !g.is_zero()).cloned().collect();
    ws.extend(wshifts_of(ring, ord, &u));
    cols.extend(u);
    let out: Vec<_> = syzygies(ring, ord, &cols, &ws)
        .iter()
        .map(|s| ctx.monic(&ctx.resort(&s.remap_components(|c| ((c as usize) < t).then_some(c)))))
        .filter(|g| !g.is_zero())
        .collect();
    minimal_generators(ring, ord, &out)
}

/// `U :_F I`, intersecting the colons by each generator of `I`.
pub fn colon<F: Field>(
    ring: &Arc<PolyRing<F>>,
    ord: &ModOrder,
    u: &[Vector<F::Elem>],
    ideal: &[Poly<F::Elem>],
) -> Result<Vec<Vector<F::Elem>>> {
    let mut acc: Option<Vec<Vector<F::Elem>>> = None;
    for f in ideal.iter().filter(|f| !f.is_zero()) {
        let c = colon_element(ring, ord, u, f);
        acc = Some(match acc {
            None => c,
            Some(prev) => intersect(ring, ord, &prev, &c),
        });
    }
    acc.ok_or(Error::ColonByZero)
}

/// Generators of the contraction of the submodule to the subring without
/// the variables flagged in `mask`, returned in `ord`.
pub fn eliminate<F: Field>(
    ring: &Arc<PolyRing<F>>,
    ord: &ModOrder,
    gens: &[Vector<F::Elem>],
    mask: &[bool],
) -> Vec<Vector<F::Elem>> {
    if !mask.iter().any(|&b| b) {
        return gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    }
    let elim = ModOrder { mono: MonoOrder::Elim(mask.to_vec()), wshift: ord.wshift.clone(), block: ord.block.clone() };
    let gb = GroebnerBasis::compute(ring, elim, gens);
    let ctx = Ctx::new(&ring.field, &ring.weights, ord);
    gb.gens
        .iter()
        .filter(|g| g.terms.iter().all(|t| t.mono.iter().zip(mask).all(|(e, m)| !*m || *e == 0)))
        .map(|g| ctx.resort(g))
        .collect()
}

/// Generators of `I_1^{n_1} ⋯ I_r^{n_r}`, pruned to a minimal set.
pub fn ideal_power_product<F: Field>(
    ring: &Arc<PolyRing<F>>,
    ideals: &[Vec<Poly<F::Elem>>],
    exps: &[i64],
) -> Result<Vec<Poly<F::Elem>>> {
    if exps.len() != ideals.len() {
        return Err(Error::LengthMismatch { expected: ideals.len(), got: exps.len() });
    }
    if exps.iter().any(|&e| e < 0) {
        return Err(Error::NegativeExponent);
    }
    let mut acc = vec![ring.one()];
    for (gens, &e) in ideals.iter().zip(exps) {
        let gens: Vec<_> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        for _ in 0..e {
            let mut next = Vec::with_capacity(acc.len() * gens.len());
            for a in &acc {
                for g in &gens {
                    next.push(ring.mul(a, g));
                }
            }
            next.sort_by(|x, y| format!("{x:?}").cmp(&format!("{y:?}")));
            next.dedup();
            acc = next;
        }
    }
    let ctx = ring.ctx();
    let acc: Vec<_> = acc.into_iter().map(|p| ctx.monic(&p)).collect();
    let mut out = minimal_generators(ring, &ModOrder::new(ring.order.clone(), vec![0]), &acc);
    sort_desc(&ctx, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degree::Multidegree;
    use crate::field::{PrimeField, Rationals};

    fn ring<F: Field>(field: F, names: &[&str]) -> Arc<PolyRing<F>> {
        Arc::new(
            PolyRing::new(
                field,
                names.iter().map(|n| (n.to_string(), Multidegree(vec![1]), 1)).collect(),
                MonoOrder::Degrevlex,
            )
            .unwrap(),
        )
    }

    fn polys<F: Field>(r: &PolyRing<F>, s: &[&str]) -> Vec<Poly<F::Elem>> {
        s.iter().map(|p| r.parse(p).unwrap()).collect()
    }

    fn render<F: Field>(r: &PolyRing<F>, v: &[Vector<F::Elem>]) -> Vec<String> {
        v.iter().map(|p| r.render_vector(p)).collect()
    }

    #[test]
    fn basis_example() {
        let r = ring(Rationals, &["x", "y"]);
        let gb = GroebnerBasis::of_ideal(&r, &polys(&r, &["x^2 - y^2", "x*y"])).unwrap();
        let mut got = render(&r, &gb.gens);
        got.sort();
        assert_eq!(got, vec!["x*y", "x^2 - y^2", "y^3"]);
        assert!(gb.certify());
        assert!(gb.normal_form(&r.parse("x^2*y").unwrap()).is_zero());
        assert_eq!(gb.normal_form(&r.one()), r.one());
        assert!(gb.normal_form(&Vector::zero()).is_zero());
    }

    #[test]
    fn trivial_bases() {
        let r = ring(PrimeField::default(), &["x", "y"]);
        let gb = GroebnerBasis::of_ideal(&r, &polys(&r, &["x", "y"])).unwrap();
        assert_eq!(render(&r, &gb.gens), vec!["y", "x"]);
        let gb = GroebnerBasis::of_ideal(&r, &[]).unwrap();
        assert!(gb.is_zero());
        assert!(GroebnerBasis::of_ideal(&r, &polys(&r, &["x^2 + y"])).is_err());
    }

    #[test]
    fn syzygy_examples() {
        let r = ring(PrimeField::default(), &["x", "y"]);
        let ord = ModOrder::new(MonoOrder::Degrevlex, vec![0]);
        let s = syzygies(&r, &ord, &polys(&r, &["x", "y"]), &[1, 1]);
        assert_eq!(s.len(), 1);
        assert_eq!(r.render_vector(&s[0]), "x[1] - y[0]");
        let s = syzygies(&r, &ord, &polys(&r, &["x^2", "x*y"]), &[2, 2]);
        assert_eq!(s.len(), 1);
        assert_eq!(r.render_vector(&s[0]), "x[1] - y[0]");
        // unit columns have no syzygies
        let ord2 = ModOrder::new(MonoOrder::Degrevlex, vec![0, 0]);
        let e0 = r.one();
        let e1 = r.one().remap_components(|_| Some(1));
        assert!(syzygies(&r, &ord2, &[e0, e1], &[0, 0]).is_empty());
    }

    #[test]
    fn elimination_example() {
        let r = Arc::new(PolyRing::new_unchecked(
            Rationals,
            vec![
                ("a".into(), Multidegree(vec![]), 1),
                ("b".into(), Multidegree(vec![]), 1),
                ("T".into(), Multidegree(vec![]), 2),
                ("U".into(), Multidegree(vec![]), 2),
                ("t".into(), Multidegree(vec![]), 0),
            ],
            MonoOrder::Degrevlex,
            0,
        ));
        let ord = ModOrder::new(MonoOrder::Degrevlex, vec![0]);
        let gens = polys(&r, &["T - a^2*t", "U - a*b*t"]);
        let out = eliminate(&r, &ord, &gens, &[false, false, false, false, true]);
        assert_eq!(out.len(), 1);
        let expect = r.parse("b*T - a*U").unwrap();
        let c = r.ctx();
        assert!(c.sub(&c.monic(&out[0]), &c.monic(&expect)).is_zero());
        assert_eq!(eliminate(&r, &ord, &gens, &[false; 5]), gens);
        assert!(eliminate(&r, &ord, &polys(&r, &["t"]), &[false, false, false, false, true]).is_empty());
    }

    #[test]
    fn colon_examples() {
        let r = ring(PrimeField::default(), &["a", "b"]);
        let ord = ModOrder::new(MonoOrder::Degrevlex, vec![0]);
        let c = colon(&r, &ord, &polys(&r, &["a^2", "a*b"]), &polys(&r, &["a"])).unwrap();
        let gb = GroebnerBasis::of_ideal(&r, &c).unwrap();
        assert_eq!(render(&r, &gb.gens), vec!["b", "a"]);
        let c = colon(&r, &ord, &polys(&r, &["a*b"]), &polys(&r, &["b"])).unwrap();
        assert_eq!(render(&r, &c), vec!["a"]);
        let j = polys(&r, &["a^2", "b^3"]);
        let c = colon(&r, &ord, &j, &[r.one()]).unwrap();
        let g1 = GroebnerBasis::of_ideal(&r, &c).unwrap();
        let g2 = GroebnerBasis::of_ideal(&r, &j).unwrap();
        assert_eq!(g1.gens, g2.gens);
        assert_eq!(colon(&r, &ord, &j, &[]), Err(Error::ColonByZero));
    }

    #[test]
    fn power_products() {
        let r = ring(PrimeField::default(), &["a", "b"]);
        let i1 = polys(&r, &["a"]);
        let i2 = polys(&r, &["a", "b"]);
        let p = ideal_power_product(&r, &[i1.clone(), i2.clone()], &[1, 1]).unwrap();
        assert_eq!(render(&r, &p), vec!["a^2", "a*b"]);
        let p = ideal_power_product(&r, &[i1.clone(), i2.clone()], &[0, 0]).unwrap();
        assert_eq!(render(&r, &p), vec!["1"]);
        let p = ideal_power_product(&r, &[i2.clone()], &[2]).unwrap();
        assert_eq!(render(&r, &p), vec!["a^2", "a*b", "b^2"]);
        assert_eq!(ideal_power_product(&r, &[i1], &[-1]), Err(Error::NegativeExponent));
    }

    #[test]
    fn intersection_of_monomial_ideals() {
        let r = ring(PrimeField::default(), &["a", "b"]);
        let ord = ModOrder::new(MonoOrder::Degrevlex, vec![0]);
        let out = intersect(&r, &ord, &polys(&r, &["a"]), &polys(&r, &["b"]));
        assert_eq!(render(&r, &out), vec!["a*b"]);
    }
}
