//! Finitely presented graded modules over a free multigraded polynomial ring.
//!
//! A [`Presentation`] is the cokernel of a homogeneous map `⊕ P(-r_j) → ⊕ P(-g_i)`:
//! generator degrees `g_i` and relation columns. Modules over a quotient
//! `P/I` are re-presented over `P` by adding `I·e_i` to the relations, so all
//! homological work happens over the polynomial ring.

use std::sync::{Arc, OnceLock};

use crate::degree::{DegSel, Degree, GradingMap};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{combine, minimal_generators, syzygies, vector_weight, GroebnerBasis};
use crate::poly::{mono_divides, mono_is_one, mono_one, Ctx, ModOrder, Mono, Term, Vector};
use crate::ring::{GradedRing, Poly, PolyRing};

#[derive(Clone, Debug)]
pub struct Presentation<F: Field> {
    pub ring: Arc<PolyRing<F>>,
    pub gens: Vec<Degree>,
    pub rels: Vec<Vector<F::Elem>>,
    ord: ModOrder,
    gb: OnceLock<GroebnerBasis<F>>,
}

impl<F: Field> PartialEq for Presentation<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_shape(&other.ring) && self.gens == other.gens && self.rels == other.rels
    }
}

impl<F: Field> Presentation<F> {
    pub fn new(ring: Arc<PolyRing<F>>, gens: Vec<Degree>, rels: Vec<Vector<F::Elem>>) -> Result<Self> {
        for g in &gens {
            if g.md.rank() != ring.rank {
                return Err(Error::LengthMismatch { expected: ring.rank, got: g.md.rank() });
            }
        }
        for r in &rels {
            if let Some(t) = r.terms.iter().find(|t| t.comp as usize >= gens.len()) {
                return Err(Error::ModuleMismatch(format!(
                    "relation uses component {} of a free module of rank {}",
                    t.comp,
                    gens.len()
                )));
            }
            ring.vector_degree(r, &gens)?;
        }
        Ok(Self::new_unchecked(ring, gens, rels))
    }

    pub(crate) fn new_unchecked(ring: Arc<PolyRing<F>>, gens: Vec<Degree>, rels: Vec<Vector<F::Elem>>) -> Self {
        let ord = ring.module_order(&gens);
        let rels = {
            let ctx = Ctx::new(&ring.field, &ring.weights, &ord);
            rels.iter().filter(|r| !r.is_zero()).map(|r| ctx.resort(r)).collect()
        };
        Presentation { ring, gens, rels, ord, gb: OnceLock::new() }
    }

    pub fn free(ring: Arc<PolyRing<F>>, gens: Vec<Degree>) -> Self {
        Self::new_unchecked(ring, gens, Vec::new())
    }

    /// `P / I` with its generator in degree zero.
    pub fn cyclic(ring: Arc<PolyRing<F>>, ideal: &[Poly<F::Elem>]) -> Result<Self> {
        let z = Degree::zero(ring.rank);
        Self::new(ring, vec![z], ideal.to_vec())
    }

    /// A module over `R = P/I`, given by generators and relations over `R`.
    pub fn over_quotient(ring: &GradedRing<F>, gens: Vec<Degree>, rels: Vec<Vector<F::Elem>>) -> Result<Self> {
        let mut all = rels;
        for i in 0..gens.len() {
            for f in &ring.ideal {
                all.push(f.remap_components(|_| Some(i as u32)));
            }
        }
        Self::new(Arc::clone(&ring.poly), gens, all)
    }

    pub fn zero(ring: Arc<PolyRing<F>>) -> Self {
        Self::free(ring, Vec::new())
    }

    pub fn order(&self) -> &ModOrder {
        &self.ord
    }

    pub fn ctx(&self) -> Ctx<'_, F> {
        Ctx::new(&self.ring.field, &self.ring.weights, &self.ord)
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    pub fn wshift(&self) -> &[i64] {
        &self.ord.wshift
    }

    pub fn rels_gb(&self) -> &GroebnerBasis<F> {
        self.gb.get_or_init(|| GroebnerBasis::compute(&self.ring, self.ord.clone(), &self.rels))
    }

    pub fn unit(&self, i: usize) -> Vector<F::Elem> {
        Vector { terms: vec![Term { comp: i as u32, mono: self.ring.one_mono(), coef: self.ring.field.one() }] }
    }

    pub fn is_zero(&self) -> bool {
        let gb = self.rels_gb();
        (0..self.rank()).all(|i| gb.contains(&self.unit(i)))
    }

    /// `M(d)`: generator degrees move down by `d`.
    pub fn twist(&self, d: &Degree) -> Self {
        let gens = self.gens.iter().map(|g| g - d).collect();
        Self::new_unchecked(Arc::clone(&self.ring), gens, self.rels.clone())
    }

    /// `M(-s)`: generator degrees move up by `s`.
    pub fn shift_up(&self, s: &Degree) -> Self {
        self.twist(&-s)
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if !self.ring.same_shape(&other.ring) {
            return Err(Error::RingMismatch);
        }
        let k = self.rank() as u32;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        let mut rels = self.rels.clone();
        rels.extend(other.rels.iter().map(|r| r.remap_components(|c| Some(c + k))));
        Ok(Self::new_unchecked(Arc::clone(&self.ring), gens, rels))
    }

    pub fn coarsen(&self, phi: &GradingMap) -> Result<Self> {
        let ring = Arc::new(self.ring.coarsen(phi)?);
        let gens = self
            .gens
            .iter()
            .map(|g| Ok(Degree { md: phi.apply(&g.md)?, wt: g.wt }))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new_unchecked(ring, gens, self.rels.clone()))
    }

    /// Same module over the same variables with another monomial order.
    pub fn with_ring(&self, ring: Arc<PolyRing<F>>) -> Self {
        Self::new_unchecked(ring, self.gens.clone(), self.rels.clone())
    }

    /// Minimal presentation: cancels unit entries (lexicographically smallest
    /// (row, column) first), then keeps a minimal set of relations.
    pub fn prune(&self) -> Self {
        let ring = &self.ring;
        let f = &ring.field;
        let mut gens = self.gens.clone();
        let mut rels: Vec<Vector<F::Elem>> = self.rels.clone();
        loop {
            let mut best: Option<(u32, usize)> = None;
            for (q, col) in rels.iter().enumerate() {
                for t in &col.terms {
                    if mono_is_one(&t.mono) && best.is_none_or(|b| (t.comp, q) < b) {
                        best = Some((t.comp, q));
                    }
                }
            }
            let Some((p, q)) = best else { break };
            let ord = ring.module_order(&gens);
            let ctx = Ctx::new(f, &ring.weights, &ord);
            let colq = rels.remove(q);
            let u = colq.terms.iter().find(|t| t.comp == p).unwrap().coef.clone();
            let uinv = f.inv(&u).unwrap();
            let mut next = Vec::with_capacity(rels.len());
            for c in rels {
                let cp = c.component(p);
                let c = if cp.is_zero() {
                    c
                } else {
                    let factor = ctx.scale(&cp, &uinv);
                    ctx.sub(&c, &ctx.mul_poly(&factor, &colq))
                };
                let c = c.remap_components(|k| match k.cmp(&p) {
                    std::cmp::Ordering::Less => Some(k),
                    std::cmp::Ordering::Equal => None,
                    std::cmp::Ordering::Greater => Some(k - 1),
                });
                if !c.is_zero() {
                    next.push(c);
                }
            }
            gens.remove(p as usize);
            rels = next;
        }
        let ord = ring.module_order(&gens);
        let rels = minimal_generators(ring, &ord, &rels);
        Self::new_unchecked(Arc::clone(ring), gens, rels)
    }

    /// Degrees of a minimal generating set.
    pub fn minimal_gen_degrees(&self) -> Vec<Degree> {
        self.prune().gens
    }

    /// Standard monomials `(component, monomial)` spanning the piece `sel`.
    pub fn piece_basis(&self, sel: &DegSel) -> Result<Vec<(u32, Mono)>> {
        self.piece_basis_in(sel, &vec![true; self.ring.nvars()])
    }

    /// As [`Self::piece_basis`], enumerating only monomials in the allowed
    /// variables. Callers guarantee the excluded variables kill the module.
    pub fn piece_basis_in(&self, sel: &DegSel, allowed: &[bool]) -> Result<Vec<(u32, Mono)>> {
        if sel.md.rank() != self.ring.rank {
            return Err(Error::LengthMismatch { expected: self.ring.rank, got: sel.md.rank() });
        }
        let gb = self.rels_gb();
        let leads = gb.leads();
        let mut out = Vec::new();
        for (i, g) in self.gens.iter().enumerate() {
            let target = sel.minus(g);
            for m in monomials_of_degree(&self.ring, &target, allowed)? {
                if !leads.iter().any(|(c, l)| *c == i as u32 && mono_divides(l, &m)) {
                    out.push((i as u32, m));
                }
            }
        }
        Ok(out)
    }

    pub fn piece_dim(&self, sel: &DegSel) -> Result<usize> {
        Ok(self.piece_basis(sel)?.len())
    }

    /// `M / mM` where `m` is generated by the base variables.
    pub fn fiber(&self) -> Self {
        let base = self.ring.base_vars();
        let mut rels = self.rels.clone();
        for i in 0..self.rank() {
            for &b in &base {
                rels.push(self.ring.var(b).remap_components(|_| Some(i as u32)));
            }
        }
        Self::new_unchecked(Arc::clone(&self.ring), self.gens.clone(), rels)
    }

    /// Coordinates of `v` on a piece basis after reduction.
    pub fn coordinates(&self, v: &Vector<F::Elem>, index: &std::collections::HashMap<(u32, Mono), usize>) -> Vec<(usize, F::Elem)> {
        let nf = self.rels_gb().normal_form(v);
        let mut row: Vec<(usize, F::Elem)> = nf
            .terms
            .into_iter()
            .map(|t| (*index.get(&(t.comp, t.mono)).expect("normal form stays in the piece"), t.coef))
            .collect();
        row.sort_by_key(|e| e.0);
        row
    }
}

/// Dimension of the multidegree-`n` piece: the vector-space dimension over a
/// field base, and the fiber dimension `dim_k (M/mM)_n` over a graded-local
/// base (where the full piece is infinite-dimensional).
pub fn graded_piece_dim<F: Field>(m: &Presentation<F>, n: &crate::degree::Multidegree) -> Result<usize> {
    let sel = DegSel::multi(n.clone());
    if m.ring.has_field_base() {
        return m.piece_dim(&sel);
    }
    let allowed: Vec<bool> = m.ring.mdeg.iter().map(|d| !d.is_zero()).collect();
    Ok(m.fiber().piece_basis_in(&sel, &allowed)?.len())
}

/// All monomials in the allowed variables with the given degree. Without a
/// weight, every allowed variable must have nonzero multidegree.
pub fn monomials_of_degree<F: Field>(ring: &PolyRing<F>, sel: &DegSel, allowed: &[bool]) -> Result<Vec<Mono>> {
    let n = ring.nvars();
    if sel.wt.is_none() && (0..n).any(|i| allowed[i] && ring.mdeg[i].is_zero()) {
        return Err(Error::InfinitePiece(sel.md.to_string()));
    }
    if !sel.md.is_nonnegative() || sel.wt.is_some_and(|w| w < 0) {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut cur = mono_one(n);
    let rem: Vec<i64> = sel.md.0.clone();
    enumerate(ring, allowed, None, 0, rem, sel.wt, &mut cur, &mut out);
    Ok(out)
}

/// Monomials of the given degree with every exponent below `cap`; always
/// finite.
pub fn monomials_bounded<F: Field>(ring: &PolyRing<F>, sel: &DegSel, cap: u16) -> Vec<Mono> {
    let mut out = Vec::new();
    if !sel.md.is_nonnegative() || sel.wt.is_some_and(|w| w < 0) || cap == 0 {
        return out;
    }
    let mut cur = mono_one(ring.nvars());
    let allowed = vec![true; ring.nvars()];
    enumerate(ring, &allowed, Some(cap), 0, sel.md.0.clone(), sel.wt, &mut cur, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn enumerate<F: Field>(
    ring: &PolyRing<F>,
    allowed: &[bool],
    cap: Option<u16>,
    i: usize,
    rem: Vec<i64>,
    wt: Option<i64>,
    cur: &mut Mono,
    out: &mut Vec<Mono>,
) {
    if i == ring.nvars() {
        if rem.iter().all(|&c| c == 0) && wt.is_none_or(|w| w == 0) {
            out.push(cur.clone());
        }
        return;
    }
    if !allowed[i] {
        enumerate(ring, allowed, cap, i + 1, rem, wt, cur, out);
        return;
    }
    let d = &ring.mdeg[i].0;
    let w = ring.weights[i];
    let mut e: i64 = 0;
    let mut r = rem;
    let mut wr = wt;
    loop {
        cur[i] = e as u16;
        enumerate(ring, allowed, cap, i + 1, r.clone(), wr, cur, out);
        for (a, b) in r.iter_mut().zip(d) {
            *a -= b;
        }
        wr = wr.map(|x| x - w);
        e += 1;
        if r.iter().any(|&c| c < 0) || wr.is_some_and(|x| x < 0) {
            break;
        }
        if d.iter().all(|&c| c == 0) && wr.is_none() {
            break;
        }
        if cap.is_some_and(|c| e >= c as i64) {
            break;
        }
    }
    cur[i] = 0;
}

/// The submodule of `ambient` generated by `elems`, as a presentation in its
/// own right: generators `elems` and relations the syzygies modulo the
/// ambient relations.
pub fn submodule<F: Field>(ambient: &Presentation<F>, elems: &[Vector<F::Elem>]) -> Result<Presentation<F>> {
    let ring = &ambient.ring;
    let elems: Vec<_> = elems.iter().filter(|e| !e.is_zero()).cloned().collect();
    let mut gens = Vec::with_capacity(elems.len());
    for e in &elems {
        gens.push(ring.vector_degree(e, &ambient.gens)?.unwrap());
    }
    let mut cols = elems.clone();
    cols.extend(ambient.rels.iter().cloned());
    let ws: Vec<i64> = cols
        .iter()
        .map(|c| vector_weight(c, &ring.weights, ambient.wshift()).unwrap())
        .collect();
    let k = elems.len() as u32;
    let rels = syzygies(ring, ambient.order(), &cols, &ws)
        .into_iter()
        .map(|s| s.remap_components(|c| (c < k).then_some(c)))
        .collect();
    Ok(Presentation::new_unchecked(Arc::clone(ring), gens, rels))
}

/// Generators (in `src`'s free cover) of the kernel of the map
/// `coker(src) → coker(tgt)` sending generator `j` of `src` to `phi[j]`.
pub fn kernel_elements<F: Field>(
    src: &Presentation<F>,
    tgt: &Presentation<F>,
    phi: &[Vector<F::Elem>],
) -> Result<Vec<Vector<F::Elem>>> {
    if phi.len() != src.rank() {
        return Err(Error::LengthMismatch { expected: src.rank(), got: phi.len() });
    }
    let ring = &src.ring;
    for (j, v) in phi.iter().enumerate() {
        if let Some(d) = ring.vector_degree(v, &tgt.gens)? {
            if d != src.gens[j] {
                return Err(Error::Inhomogeneous(format!("image of generator {j} has degree {d}")));
            }
        }
    }
    let tctx = tgt.ctx();
    let mut cols: Vec<Vector<F::Elem>> = phi.iter().map(|v| tctx.resort(v)).collect();
    let mut ws: Vec<i64> = src.wshift().to_vec();
    cols.extend(tgt.rels.iter().cloned());
    ws.extend(tgt.rels.iter().map(|r| vector_weight(r, &ring.weights, tgt.wshift()).unwrap()));
    let k = src.rank() as u32;
    let sctx = src.ctx();
    let elems: Vec<_> = syzygies(ring, tgt.order(), &cols, &ws)
        .into_iter()
        .map(|s| sctx.resort(&s.remap_components(|c| (c < k).then_some(c))))
        .filter(|v| !v.is_zero())
        .collect();
    Ok(minimal_generators(ring, src.order(), &elems))
}

/// Kernel of `coker(src) → coker(tgt)`, presented as a submodule of `src`.
pub fn module_kernel<F: Field>(
    src: &Presentation<F>,
    tgt: &Presentation<F>,
    phi: &[Vector<F::Elem>],
) -> Result<Presentation<F>> {
    let elems = kernel_elements(src, tgt, phi)?;
    submodule(src, &elems)
}

/// Maps a vector through the matrix whose columns are `cols`.
pub fn apply_matrix<F: Field>(ctx: &Ctx<'_, F>, cols: &[Vector<F::Elem>], v: &Vector<F::Elem>) -> Vector<F::Elem> {
    ctx.resort(&combine(ctx, v, cols))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degree::Multidegree;
    use crate::field::PrimeField;
    use crate::poly::MonoOrder;

    fn bigraded() -> Arc<PolyRing<PrimeField>> {
        Arc::new(
            PolyRing::new(
                PrimeField::default(),
                vec![
                    ("x0".into(), Multidegree(vec![1, 0]), 1),
                    ("x1".into(), Multidegree(vec![1, 0]), 1),
                    ("y0".into(), Multidegree(vec![0, 1]), 1),
                    ("y1".into(), Multidegree(vec![0, 1]), 1),
                ],
                MonoOrder::Degrevlex,
            )
            .unwrap(),
        )
    }

    fn single(names: &[&str]) -> Arc<PolyRing<PrimeField>> {
        Arc::new(
            PolyRing::new(
                PrimeField::default(),
                names.iter().map(|n| (n.to_string(), Multidegree(vec![1]), 1)).collect(),
                MonoOrder::Degrevlex,
            )
            .unwrap(),
        )
    }

    #[test]
    fn piece_dims() {
        let r = bigraded();
        let s = Presentation::free(Arc::clone(&r), vec![Degree::zero(2)]);
        assert_eq!(graded_piece_dim(&s, &Multidegree(vec![1, 1])).unwrap(), 4);
        let r1 = single(&["x", "y"]);
        let s1 = Presentation::free(Arc::clone(&r1), vec![Degree::zero(1)]);
        for n in -2..6 {
            let expect = if n < 0 { 0 } else { n as usize + 1 };
            assert_eq!(graded_piece_dim(&s1, &Multidegree(vec![n])).unwrap(), expect);
        }
    }

    #[test]
    fn prune_cancels_units() {
        let r = single(&["x", "y"]);
        let z = Degree::zero(1);
        // coker of (1, x)^T and (0, y)^T is P(1)/(y) after cancelling e_0
        let mut c1 = r.one();
        c1.terms.extend(r.var(0).remap_components(|_| Some(1)).terms);
        let c2 = r.var(1).remap_components(|_| Some(1));
        let m = Presentation::new(Arc::clone(&r), vec![z.clone(), -&Degree::new(Multidegree(vec![1]), 1)], vec![c1, c2])
            .unwrap();
        let p = m.prune();
        assert_eq!(p.rank(), 1);
        assert_eq!(p.rels.len(), 1);
        assert_eq!(r.render_vector(&p.rels[0]), "y");
        for n in -1..4 {
            let sel = DegSel::multi(Multidegree(vec![n]));
            assert_eq!(m.piece_dim(&sel).unwrap(), p.piece_dim(&sel).unwrap());
        }
    }

    #[test]
    fn kernel_examples() {
        let r = single(&["x"]);
        let z = Degree::zero(1);
        let s = Presentation::free(Arc::clone(&r), vec![z.clone()]);
        let q = Presentation::cyclic(Arc::clone(&r), &[r.var(0)]).unwrap();
        let k = module_kernel(&s, &q, &[r.one()]).unwrap();
        assert_eq!(k.rank(), 1);
        assert_eq!(k.gens[0].md, Multidegree(vec![1]));
        assert!(k.rels.is_empty());
        let k = module_kernel(&s, &s, &[r.one()]).unwrap();
        assert!(k.is_zero());

        let r = single(&["x", "y"]);
        let f2 = Presentation::free(Arc::clone(&r), vec![Degree::new(Multidegree(vec![1]), 1); 2]);
        let s = Presentation::free(Arc::clone(&r), vec![z]);
        let k = module_kernel(&f2, &s, &[r.var(0), r.var(1)]).unwrap();
        assert_eq!(k.rank(), 1);
        let g = &k.gens[0];
        assert_eq!(g.md, Multidegree(vec![2]));
    }

    #[test]
    fn zero_module_detection() {
        let r = single(&["x"]);
        let m = Presentation::cyclic(Arc::clone(&r), &[r.one()]).unwrap();
        assert!(m.is_zero());
        assert_eq!(m.prune().rank(), 0);
        assert!(!Presentation::cyclic(Arc::clone(&r), &[r.var(0)]).unwrap().is_zero());
    }

    #[test]
    fn infinite_piece_needs_weight() {
        let r = Arc::new(
            PolyRing::new(
                PrimeField::default(),
                vec![("a".into(), Multidegree(vec![0]), 1), ("x".into(), Multidegree(vec![1]), 1)],
                MonoOrder::Degrevlex,
            )
            .unwrap(),
        );
        let s = Presentation::free(Arc::clone(&r), vec![Degree::zero(1)]);
        assert!(matches!(s.piece_dim(&DegSel::multi(Multidegree(vec![1]))), Err(Error::InfinitePiece(_))));
        assert_eq!(s.piece_dim(&DegSel { md: Multidegree(vec![1]), wt: Some(3) }).unwrap(), 1);
        assert_eq!(graded_piece_dim(&s, &Multidegree(vec![2])).unwrap(), 1);
    }
}
