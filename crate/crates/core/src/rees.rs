//! Rees and multi-Rees algebras and modules, their diagonals, fiber cones,
//! and the Rees module of a module along the irrelevant ideal.
//!
//! Everything is computed through the image of `N ⊗ P → N[t_1, …, t_r]`:
//! the tag ring carries the base variables, one `T` per ideal generator and
//! the tags `t_j`; the relations are `(T_{j,i} - f_{j,i} t_j)·e_c` together
//! with the relations of `N`, and the tags are eliminated.

use std::sync::Arc;

use serde::Serialize;

use crate::cohomology::SupportSpec;
use crate::degree::{DegSel, Degree, Multidegree};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{eliminate, ideal_power_product, minimal_generators, GroebnerBasis};
use crate::homological::{grade_of, krull_dim};
use crate::linalg::Echelon;
use crate::module::{monomials_of_degree, Presentation};
use crate::poly::{mono_mul, ModOrder, Mono, MonoOrder, Term, Vector};
use crate::ring::{GradedRing, Poly, PolyRing};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReesKind {
    /// `⊕ I_1^{n_1} ⋯ I_r^{n_r} t^n`, graded by `N^r`.
    Multi,
    /// `⊕ S_{n+k·1} t^k` along `S_+`, graded by `Z^{r+1}`.
    Irrelevant,
}

/// Presentation `P/J` of a (multi-)Rees algebra.
#[derive(Clone, Debug)]
pub struct ReesPresentation<F: Field> {
    pub kind: ReesKind,
    /// The base polynomial ring.
    pub base: Arc<PolyRing<F>>,
    /// Defining ideal of the base, in `base`.
    pub base_ideal: Vec<Poly<F::Elem>>,
    /// Ambient ring: base variables followed by the `T` variables.
    pub ring: Arc<PolyRing<F>>,
    /// Ideal generators per block, in `base`.
    pub ideals: Vec<Vec<Poly<F::Elem>>>,
    /// Index in `ring` of the `T` variable of each generator.
    pub t_vars: Vec<Vec<usize>>,
    pub defining_ideal: Vec<Poly<F::Elem>>,
    tag_ring: Arc<PolyRing<F>>,
}

/// A Rees module together with the algebra it lives over.
#[derive(Clone, Debug)]
pub struct ReesModule<F: Field> {
    pub rees: ReesPresentation<F>,
    /// The module `N` (over the base polynomial ring).
    pub base_module: Presentation<F>,
    /// `R_N(I_•)` presented over `rees.ring`.
    pub module: Presentation<F>,
}

fn fresh(taken: &[String], want: String) -> String {
    let mut name = want;
    while taken.contains(&name) {
        name.push('_');
    }
    name
}

fn lift_mono(m: &Mono, n: usize) -> Mono {
    let mut out = m.clone();
    out.resize(n, 0);
    out
}

fn lift<E: Clone>(v: &Vector<E>, n: usize) -> Vector<E> {
    Vector {
        terms: v.terms.iter().map(|t| Term { comp: t.comp, mono: lift_mono(&t.mono, n), coef: t.coef.clone() }).collect(),
    }
}

fn truncate<E: Clone>(v: &Vector<E>, n: usize) -> Vector<E> {
    Vector {
        terms: v
            .terms
            .iter()
            .map(|t| Term { comp: t.comp, mono: t.mono[..n].iter().copied().collect(), coef: t.coef.clone() })
            .collect(),
    }
}

fn clean_ideals<F: Field>(base: &PolyRing<F>, ideals: &[Vec<Poly<F::Elem>>]) -> Result<Vec<Vec<Poly<F::Elem>>>> {
    let mut out = Vec::new();
    for gens in ideals {
        let mut g = Vec::new();
        for f in gens.iter().filter(|f| !f.is_zero()) {
            base.poly_degree(f)?;
            g.push(base.ctx().monic(f));
        }
        out.push(g);
    }
    Ok(out)
}

/// Grade gate: each ideal proper and of positive grade on `n`.
fn gate<F: Field>(ideals: &[Vec<Poly<F::Elem>>], n: &Presentation<F>) -> Result<()> {
    for (j, gens) in ideals.iter().enumerate() {
        if gens.is_empty() {
            return Err(Error::Gate(format!("ideal {} is zero", j + 1)));
        }
        match grade_of(gens, n)? {
            None => return Err(Error::ZeroModule("Rees module of the zero module")),
            Some(0) => return Err(Error::Gate(format!("ideal {} has grade 0 on the module", j + 1))),
            Some(_) => {}
        }
    }
    Ok(())
}

struct Layout<F: Field> {
    ring: Arc<PolyRing<F>>,
    tag_ring: Arc<PolyRing<F>>,
    t_vars: Vec<Vec<usize>>,
    /// `(T index, tag index, generator)` for every `T`.
    subst: Vec<(usize, usize, Poly<F::Elem>)>,
    gen_degree: Box<dyn Fn(&Degree) -> Degree + Send + Sync>,
}

fn layout<F: Field>(base: &Arc<PolyRing<F>>, ideals: &[Vec<Poly<F::Elem>>], kind: ReesKind) -> Result<Layout<F>> {
    let nb = base.nvars();
    let r = ideals.len();
    let (rank, tag_deg): (usize, Vec<Multidegree>) = match kind {
        ReesKind::Multi => {
            if let Some(i) = base.mdeg.iter().position(|d| !d.is_zero()) {
                return Err(Error::Unsupported(format!(
                    "base variable `{}` has nonzero multidegree; Rees bases must be graded by weight only",
                    base.names[i]
                )));
            }
            (r, (0..r).map(|j| Multidegree::unit(r, j)).collect())
        }
        ReesKind::Irrelevant => {
            let mut d = vec![-1; base.rank];
            d.push(1);
            (base.rank + 1, vec![Multidegree(d)])
        }
    };
    let base_md = |d: &Multidegree| -> Multidegree {
        match kind {
            ReesKind::Multi => Multidegree::zero(rank),
            ReesKind::Irrelevant => {
                let mut v = d.0.clone();
                v.push(0);
                Multidegree(v)
            }
        }
    };
    let mut vars: Vec<(String, Multidegree, i64)> =
        (0..nb).map(|i| (base.names[i].clone(), base_md(&base.mdeg[i]), base.weights[i])).collect();
    let mut t_vars = Vec::new();
    let mut subst = Vec::new();
    for (j, gens) in ideals.iter().enumerate() {
        let mut idx = Vec::new();
        for (i, f) in gens.iter().enumerate() {
            let d = base.poly_degree(f)?.expect("nonzero generator");
            let want = match (kind, r) {
                (ReesKind::Irrelevant, _) => format!("U{}", i + 1),
                (_, 1) => format!("T{}", i + 1),
                _ => format!("T{}_{}", j + 1, i + 1),
            };
            let taken: Vec<String> = vars.iter().map(|v| v.0.clone()).collect();
            let name = fresh(&taken, want);
            let md = &base_md(&d.md) + &tag_deg[j];
            idx.push(vars.len());
            subst.push((vars.len(), j, f.clone()));
            vars.push((name, md, d.wt));
        }
        t_vars.push(idx);
    }
    let order = match &base.order {
        MonoOrder::Elim(_) => MonoOrder::Degrevlex,
        o => o.clone(),
    };
    let ring = Arc::new(PolyRing::new(base.field.clone(), vars.clone(), order.clone())?);
    let np = vars.len();
    for (j, d) in tag_deg.iter().enumerate() {
        let taken: Vec<String> = vars.iter().map(|v| v.0.clone()).collect();
        vars.push((fresh(&taken, format!("t{}", j + 1)), d.clone(), 0));
    }
    let tag_ring = Arc::new(PolyRing::new_unchecked(base.field.clone(), vars, order, rank));
    let subst = subst.into_iter().map(|(t, j, f)| (t, np + j, lift(&f, tag_ring.nvars()))).collect();
    let gen_degree: Box<dyn Fn(&Degree) -> Degree + Send + Sync> = match kind {
        ReesKind::Multi => Box::new(move |g: &Degree| Degree::new(Multidegree::zero(rank), g.wt)),
        ReesKind::Irrelevant => Box::new(move |g: &Degree| {
            let mut v = g.md.0.clone();
            v.push(0);
            Degree::new(Multidegree(v), g.wt)
        }),
    };
    Ok(Layout { ring, tag_ring, t_vars, subst, gen_degree })
}

/// Image of `coker(n) ⊗ P` in `coker(n)[t]`, presented over the Rees ring.
fn image_presentation<F: Field>(lay: &Layout<F>, n: &Presentation<F>) -> Result<Presentation<F>> {
    let q = &lay.tag_ring;
    let nq = q.nvars();
    let np = lay.ring.nvars();
    let gens: Vec<Degree> = n.gens.iter().map(|g| (lay.gen_degree)(g)).collect();
    let ord = ModOrder::new(q.order.clone(), n.wshift().to_vec());
    let ctx = q.ctx_with(&ord);
    let mut inputs: Vec<Vector<F::Elem>> = n.rels.iter().map(|r| ctx.resort(&lift(r, nq))).collect();
    for (t, tag, f) in &lay.subst {
        let ft = q.mul(f, &q.var(*tag));
        let rel = q.sub(&q.var(*t), &ft);
        for c in 0..n.rank() as u32 {
            inputs.push(ctx.resort(&rel.remap_components(|_| Some(c))));
        }
    }
    let mask: Vec<bool> = (0..nq).map(|i| i >= np).collect();
    let elim = eliminate(q, &ord, &inputs, &mask);
    let pord = ModOrder::new(lay.ring.order.clone(), n.wshift().to_vec());
    let pctx = lay.ring.ctx_with(&pord);
    let rels: Vec<_> = elim.iter().map(|v| pctx.monic(&pctx.resort(&truncate(v, np)))).collect();
    let rels = minimal_generators(&lay.ring, &pord, &rels);
    Presentation::new(Arc::clone(&lay.ring), gens, rels)
}

fn build_algebra<F: Field>(
    base: &GradedRing<F>,
    ideals: &[Vec<Poly<F::Elem>>],
    kind: ReesKind,
    check_grade: bool,
) -> Result<ReesPresentation<F>> {
    let bring = &base.poly;
    let ideals = clean_ideals(bring, ideals)?;
    for gens in &ideals {
        if GroebnerBasis::of_ideal(bring, gens)?.is_unit_ideal() {
            return Err(Error::UnitIdeal);
        }
    }
    let a = Presentation::cyclic(Arc::clone(bring), &base.ideal)?;
    if check_grade {
        gate(&ideals, &a)?;
    }
    let lay = layout(bring, &ideals, kind)?;
    let pres = image_presentation(&lay, &a)?;
    let defining_ideal = pres.rels.iter().map(|v| v.component(0)).collect();
    Ok(ReesPresentation {
        kind,
        base: Arc::clone(bring),
        base_ideal: base.ideal.clone(),
        ring: lay.ring,
        ideals,
        t_vars: lay.t_vars,
        defining_ideal,
        tag_ring: lay.tag_ring,
    })
}

/// `R_B(I_1, …, I_r) = P/J`.
pub fn multi_rees_algebra_presentation<F: Field>(
    base: &GradedRing<F>,
    ideals: &[Vec<Poly<F::Elem>>],
) -> Result<ReesPresentation<F>> {
    build_algebra(base, ideals, ReesKind::Multi, true)
}

fn build_module<F: Field>(
    n: &Presentation<F>,
    ideals: &[Vec<Poly<F::Elem>>],
    kind: ReesKind,
) -> Result<ReesModule<F>> {
    let base = GradedRing::free(Arc::clone(&n.ring));
    let rees = build_algebra(&base, ideals, kind, false)?;
    gate(&rees.ideals, n)?;
    let lay = layout(&n.ring, &rees.ideals, kind)?;
    let module = image_presentation(&lay, n)?;
    Ok(ReesModule { rees, base_module: n.clone(), module })
}

/// `R_N(I_1, …, I_r)` over the Rees algebra of the base polynomial ring.
pub fn rees_module_presentation<F: Field>(n: &Presentation<F>, ideals: &[Vec<Poly<F::Elem>>]) -> Result<ReesModule<F>> {
    build_module(n, ideals, ReesKind::Multi)
}

/// `T = R_M(S_+)` over `R = R_S(S_+)`, graded by `(n; k)`.
pub fn irrelevant_rees<F: Field>(m: &Presentation<F>) -> Result<ReesModule<F>> {
    let sp = SupportSpec::irrelevant(&m.ring)?;
    if !m.ring.has_field_base() {
        return Err(Error::Unsupported("the irrelevant Rees module needs a field base".into()));
    }
    build_module(m, &[sp.gens], ReesKind::Irrelevant)
}

impl<F: Field> ReesPresentation<F> {
    pub fn r(&self) -> usize {
        self.ideals.len()
    }

    /// `P/J` as a module over `P`.
    pub fn as_module(&self) -> Result<Presentation<F>> {
        Presentation::cyclic(Arc::clone(&self.ring), &self.defining_ideal)
    }

    fn substitute(&self, p: &Poly<F::Elem>) -> Poly<F::Elem> {
        let q = &self.tag_ring;
        let nq = q.nvars();
        let nb = self.base.nvars();
        let np = self.ring.nvars();
        let images: Vec<(usize, Poly<F::Elem>)> = self
            .t_vars
            .iter()
            .enumerate()
            .flat_map(|(j, idx)| {
                idx.iter().zip(&self.ideals[j]).map(move |(&t, f)| (t, j, f))
            })
            .map(|(t, j, f)| {
                let tag = match self.kind {
                    ReesKind::Multi => np + j,
                    ReesKind::Irrelevant => np,
                };
                (t, q.mul(&lift(f, nq), &q.var(tag)))
            })
            .collect();
        let mut acc = Vector::zero();
        for term in &p.terms {
            let mut base_mono = term.mono.clone();
            base_mono.resize(nq, 0);
            for e in base_mono.iter_mut().skip(nb) {
                *e = 0;
            }
            let mut prod = q.monomial(base_mono);
            for (t, img) in &images {
                let e = term.mono[*t];
                if e > 0 {
                    prod = q.mul(&prod, &q.pow(img, e as u32));
                }
            }
            prod = q.ctx().scale(&prod, &term.coef);
            acc = q.add(&acc, &prod);
        }
        acc
    }

    /// Checks that `T_{j,i} ↦ f_{j,i} t_j` kills every generator of `J`
    /// (modulo the base ideal).
    pub fn check_substitution(&self) -> bool {
        let q = &self.tag_ring;
        let nq = q.nvars();
        let mask: Vec<bool> = (0..nq).map(|i| i >= self.ring.nvars()).collect();
        let ord = ModOrder::new(MonoOrder::Elim(mask), vec![0]);
        let lifted: Vec<_> = self.base_ideal.iter().map(|f| q.ctx_with(&ord).resort(&lift(f, nq))).collect();
        let gb = GroebnerBasis::compute(q, ord, &lifted);
        self.defining_ideal.iter().all(|g| gb.normal_form(&self.substitute(&lift(g, nq))).is_zero())
    }
}

impl<F: Field> ReesModule<F> {
    /// Checks `dim_k R_N(I)_{(n, w)} = dim_k (I^n N)_w` for `n ∈ [0, n_max]^r`
    /// and weights `w` in `[w0, w0 + w_span]`, `w0` the least generator
    /// weight. `(I^n N)_w` is computed as `N_w - (N / I^n N)_w`.
    pub fn hilbert_certificate(&self, n_max: i64, w_span: i64) -> Result<()> {
        if self.rees.kind != ReesKind::Multi {
            return Err(Error::Unsupported("Hilbert certificate of the irrelevant Rees module".into()));
        }
        let n = &self.base_module;
        let b = &n.ring;
        let r = self.rees.r();
        let w0 = n.gens.iter().map(|g| g.wt).min().unwrap_or(0);
        let zero_b = Multidegree::zero(b.rank);
        let mut exps = vec![vec![]];
        for _ in 0..r {
            exps = exps.into_iter().flat_map(|e: Vec<i64>| (0..=n_max).map(move |k| [e.clone(), vec![k]].concat())).collect();
        }
        for e in exps {
            let prod = ideal_power_product(b, &self.rees.ideals, &e)?;
            let mut rels = n.rels.clone();
            for c in 0..n.rank() as u32 {
                rels.extend(prod.iter().map(|f| f.remap_components(|_| Some(c))));
            }
            let quot = Presentation::new(Arc::clone(b), n.gens.clone(), rels)?;
            for w in w0..=w0 + w_span {
                let sb = DegSel { md: zero_b.clone(), wt: Some(w) };
                let expect = n.piece_dim(&sb)? - quot.piece_dim(&sb)?;
                let got = self.module.piece_dim(&DegSel { md: Multidegree(e.clone()), wt: Some(w) })?;
                if got != expect {
                    return Err(Error::Certificate(format!(
                        "Rees piece at {} weight {w}: {got} != {expect}",
                        Multidegree(e.clone())
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Window certificate recorded by [`diagonal_of`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagonalCertificate {
    /// `(n, dim of the diagonal at n, dim of the original at (n, …, n))`.
    pub rows: Vec<(i64, usize, usize)>,
}

fn certify_diagonal<F: Field>(
    orig: &Presentation<F>,
    diag: &Presentation<F>,
    r: usize,
    n_max: i64,
) -> Result<DiagonalCertificate> {
    let mut rows = Vec::new();
    for n in 0..=n_max {
        let a = crate::module::graded_piece_dim(diag, &Multidegree(vec![n]))?;
        let b = crate::module::graded_piece_dim(orig, &Multidegree(vec![n; r]))?;
        if a != b {
            return Err(Error::Certificate(format!("diagonal at {n}: {a} != {b}")));
        }
        rows.push((n, a, b));
    }
    Ok(DiagonalCertificate { rows })
}

/// Rees module of the product ideal `I_1 ⋯ I_r`, certified against the
/// diagonal pieces of `x` for `n = 0, 1, 2`.
pub fn diagonal_of<F: Field>(x: &ReesModule<F>) -> Result<(ReesModule<F>, DiagonalCertificate)> {
    if x.rees.kind != ReesKind::Multi {
        return Err(Error::Unsupported("diagonal of the irrelevant Rees module".into()));
    }
    let r = x.rees.r();
    if r == 1 {
        let cert = certify_diagonal(&x.module, &x.module, 1, 2)?;
        return Ok((x.clone(), cert));
    }
    let prod = ideal_power_product(&x.rees.base, &x.rees.ideals, &vec![1; r])?;
    let d = rees_module_presentation(&x.base_module, &[prod])?;
    let cert = certify_diagonal(&x.module, &d.module, r, 2)?;
    Ok((d, cert))
}

/// Algebra version of [`diagonal_of`].
pub fn diagonal_of_algebra<F: Field>(x: &ReesPresentation<F>) -> Result<(ReesPresentation<F>, DiagonalCertificate)> {
    let r = x.r();
    let base = GradedRing::quotient(Arc::clone(&x.base), x.base_ideal.clone())?;
    let d = if r == 1 {
        x.clone()
    } else {
        let prod = ideal_power_product(&x.base, &x.ideals, &vec![1; r])?;
        multi_rees_algebra_presentation(&base, &[prod])?
    };
    let cert = certify_diagonal(&x.as_module()?, &d.as_module()?, r, 2)?;
    Ok((d, cert))
}

/// Analytic spread: Krull dimension of the fiber cone `R_B(I) ⊗ B/m`.
pub fn fiber_cone_spread<F: Field>(base: &GradedRing<F>, ideal: &[Poly<F::Elem>]) -> Result<i64> {
    let rp = build_algebra(base, &[ideal.to_vec()], ReesKind::Multi, false)?;
    if rp.ideals[0].is_empty() {
        return Ok(0);
    }
    let mut gens = rp.defining_ideal.clone();
    gens.extend(rp.ring.base_vars().into_iter().map(|i| rp.ring.var(i)));
    let fiber = Presentation::cyclic(Arc::clone(&rp.ring), &gens)?;
    Ok(krull_dim(&fiber).unwrap_or(0))
}

/// `dim_k M_n · S_{(k, …, k)}` inside `M_{n + k·1}`, by direct expansion.
pub fn irrelevant_piece_oracle<F: Field>(m: &Presentation<F>, n: &Multidegree, k: i64) -> Result<usize> {
    let ring = &m.ring;
    let sel = DegSel::multi(n.clone());
    let src = m.piece_basis(&sel)?;
    if src.is_empty() {
        return Ok(0);
    }
    let kk = Multidegree(vec![k; ring.rank]);
    let mults = monomials_of_degree(ring, &DegSel::multi(kk.clone()), &vec![true; ring.nvars()])?;
    let tgt = m.piece_basis(&DegSel::multi(n + &kk))?;
    let index = tgt.into_iter().enumerate().map(|(i, b)| (b, i)).collect();
    let gb = m.rels_gb();
    let mut ech = Echelon::new(&ring.field);
    for (c, mono) in &src {
        for s in &mults {
            let v = Vector { terms: vec![Term { comp: *c, mono: mono_mul(mono, s), coef: ring.field.one() }] };
            let nf = gb.normal_form(&v);
            let mut row = m.coordinates(&nf, &index);
            row.sort_by_key(|e| e.0);
            ech.insert(row);
        }
    }
    Ok(ech.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::homological::{a_invariant, is_cohen_macaulay, v_of};

    fn base<F: Field>(f: F, names: &[&str]) -> Arc<PolyRing<F>> {
        Arc::new(
            PolyRing::new(
                f,
                names.iter().map(|n| (n.to_string(), Multidegree(vec![0]), 1)).collect(),
                MonoOrder::Degrevlex,
            )
            .unwrap(),
        )
    }

    fn ids<F: Field>(r: &PolyRing<F>, spec: &[&[&str]]) -> Vec<Vec<Poly<F::Elem>>> {
        spec.iter().map(|g| g.iter().map(|s| r.parse(s).unwrap()).collect()).collect()
    }

    fn rendered<F: Field>(rp: &ReesPresentation<F>) -> Vec<String> {
        rp.defining_ideal.iter().map(|p| rp.ring.render_vector(p)).collect()
    }

    #[test]
    fn algebra_examples() {
        let b = base(Rationals, &["a", "b"]);
        let g = GradedRing::free(Arc::clone(&b));
        let rp = multi_rees_algebra_presentation(&g, &ids(&b, &[&["a"], &["a", "b"]])).unwrap();
        assert_eq!(rendered(&rp), vec!["b*T2_1 - a*T2_2"]);
        assert!(rp.check_substitution());
        let rp = multi_rees_algebra_presentation(&g, &ids(&b, &[&["a"]])).unwrap();
        assert!(rp.defining_ideal.is_empty());
        let rp = multi_rees_algebra_presentation(&g, &ids(&b, &[&["a", "b"]])).unwrap();
        assert_eq!(rendered(&rp), vec!["b*T1 - a*T2"]);
        assert!(rp.check_substitution());
        assert_eq!(multi_rees_algebra_presentation(&g, &ids(&b, &[&["1"]])).unwrap_err(), Error::UnitIdeal);
    }

    #[test]
    fn grade_gate() {
        let b = base(PrimeField::default(), &["a", "b"]);
        let n = Presentation::cyclic(Arc::clone(&b), &[b.parse("a").unwrap()]).unwrap();
        let e = rees_module_presentation(&n, &ids(&b, &[&["a"]])).unwrap_err();
        assert!(matches!(e, Error::Gate(_)));
    }

    #[test]
    fn module_examples() {
        let b = base(PrimeField::default(), &["a", "b"]);
        let free = Presentation::cyclic(Arc::clone(&b), &[]).unwrap();
        let rm = rees_module_presentation(&free, &ids(&b, &[&["a"], &["a", "b"]])).unwrap();
        assert_eq!(rm.module.rels.len(), 1);
        assert_eq!(crate::module::graded_piece_dim(&rm.module, &Multidegree(vec![1, 1])).unwrap(), 2);
        rm.hilbert_certificate(2, 4).unwrap();
        assert_eq!(a_invariant(&rm.module).unwrap(), Multidegree(vec![-1, -1]));
        assert_eq!(v_of(&rm.module).unwrap(), Multidegree(vec![0, 0]));
        let rec = is_cohen_macaulay(&rm.module).unwrap();
        assert_eq!(rec.dim, Some(4));
        assert!(rec.cm);

        let n = Presentation::cyclic(Arc::clone(&b), &[b.parse("b").unwrap()]).unwrap();
        let rm = rees_module_presentation(&n, &ids(&b, &[&["a"]])).unwrap();
        for k in 0..4 {
            assert_eq!(crate::module::graded_piece_dim(&rm.module, &Multidegree(vec![k])).unwrap(), 1);
        }
        rm.hilbert_certificate(3, 4).unwrap();
        assert_eq!(a_invariant(&rm.module).unwrap(), Multidegree(vec![-1]));
    }

    #[test]
    fn diagonal_example() {
        let b = base(PrimeField::default(), &["a", "b"]);
        let free = Presentation::cyclic(Arc::clone(&b), &[]).unwrap();
        let rm = rees_module_presentation(&free, &ids(&b, &[&["a"], &["a", "b"]])).unwrap();
        let (d, cert) = diagonal_of(&rm).unwrap();
        assert_eq!(cert.rows.iter().map(|r| r.1).collect::<Vec<_>>(), vec![1, 2, 3]);
        assert!(is_cohen_macaulay(&d.module).unwrap().cm);
        let g = GradedRing::free(Arc::clone(&b));
        let rp = multi_rees_algebra_presentation(&g, &ids(&b, &[&["a"], &["a", "b"]])).unwrap();
        let (da, _) = diagonal_of_algebra(&rp).unwrap();
        assert_eq!(da.defining_ideal.len(), 1);
        let single = rees_module_presentation(&free, &ids(&b, &[&["a", "b"]])).unwrap();
        assert_eq!(diagonal_of(&single).unwrap().0.module, single.module);
    }

    #[test]
    fn spreads() {
        let b = base(PrimeField::default(), &["a", "b"]);
        let g = GradedRing::free(Arc::clone(&b));
        let sp = |s: &[&str]| fiber_cone_spread(&g, &ids(&b, &[s])[0]).unwrap();
        assert_eq!(sp(&["a"]), 1);
        assert_eq!(sp(&["a", "b"]), 2);
        assert_eq!(sp(&["a^2", "a*b"]), 2);
        assert_eq!(sp(&["a^2", "a*b", "b^2"]), 2);
    }

    #[test]
    fn irrelevant_module() {
        let s = Arc::new(
            PolyRing::new(PrimeField::default(), vec![("x".into(), Multidegree(vec![1]), 1)], MonoOrder::Degrevlex)
                .unwrap(),
        );
        let m = Presentation::cyclic(Arc::clone(&s), &[]).unwrap();
        let t = irrelevant_rees(&m).unwrap();
        assert_eq!(t.module.piece_dim(&DegSel::multi(Multidegree(vec![1, 2]))).unwrap(), 1);
        assert_eq!(irrelevant_piece_oracle(&m, &Multidegree(vec![1]), 2).unwrap(), 1);
        assert_eq!(t.module.piece_dim(&DegSel::multi(Multidegree(vec![-1, 2]))).unwrap(), 0);

        let s2 = Arc::new(
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
        );
        let m = Presentation::cyclic(Arc::clone(&s2), &[s2.parse("x0*y0 - x1*y1").unwrap()]).unwrap();
        let t = irrelevant_rees(&m).unwrap();
        for n in [[0, 0], [1, 0], [1, 1], [2, 1], [-1, 0]] {
            for k in 0..3 {
                let mut d = n.to_vec();
                d.push(k);
                let got = t.module.piece_dim(&DegSel::multi(Multidegree(d))).unwrap();
                assert_eq!(got, irrelevant_piece_oracle(&m, &Multidegree(n.to_vec()), k).unwrap(), "{n:?} {k}");
            }
        }
    }
}
