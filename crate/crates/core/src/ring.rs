//! Multigraded polynomial rings and their quotients.
//!
//! Every variable carries a multidegree in `N^r` and a positive weight. The
//! weight grading is positive, so the degree-0 piece of the auxiliary total
//! grading is the coefficient field and graded Nakayama arguments apply.
//! Variables of multidegree zero are the base variables modelling the
//! graded-local base ring.

use std::sync::{Arc, OnceLock};

use crate::degree::{Degree, GradingMap, Multidegree};
use crate::error::{Error, Result};
use crate::expr::{eval_rational, parse_expr, Expr};
use crate::field::Field;
use crate::groebner::GroebnerBasis;
use crate::poly::{mono_one, mono_var, mono_weight, Ctx, ModOrder, Mono, MonoOrder, Term, Vector};

pub type Poly<E> = Vector<E>;

#[derive(Clone, Debug, PartialEq)]
pub struct PolyRing<F: Field> {
    pub field: F,
    pub names: Vec<String>,
    pub mdeg: Vec<Multidegree>,
    pub weights: Vec<i64>,
    pub rank: usize,
    pub order: MonoOrder,
    poly_ord: ModOrder,
}

/// Declarative description of a graded ring, validated by [`make_graded_ring`].
#[derive(Clone, Debug)]
pub struct GradedRingSpec<F: Field> {
    pub field: F,
    pub variables: Vec<(String, Multidegree, i64)>,
    pub order: MonoOrder,
    pub defining_ideal: Vec<Expr>,
    pub reduce_on_multiply: bool,
}

impl<F: Field> PolyRing<F> {
    /// Builds a ring after checking weights and multidegrees.
    pub fn new(field: F, vars: Vec<(String, Multidegree, i64)>, order: MonoOrder) -> Result<Self> {
        let rank = vars.first().map_or(0, |v| v.1.rank());
        for (name, d, w) in &vars {
            if *w < 1 {
                return Err(Error::ZeroWeight(name.clone()));
            }
            if d.rank() != rank {
                return Err(Error::LengthMismatch { expected: rank, got: d.rank() });
            }
            if !d.is_nonnegative() {
                return Err(Error::NegativeVariableDegree(name.clone()));
            }
        }
        Ok(Self::new_unchecked(field, vars, order, rank))
    }

    /// Skips validation; used for internal auxiliary rings whose tag
    /// variables carry weight 0 or negative multidegree.
    pub(crate) fn new_unchecked(
        field: F,
        vars: Vec<(String, Multidegree, i64)>,
        order: MonoOrder,
        rank: usize,
    ) -> Self {
        let (names, rest): (Vec<_>, Vec<_>) = vars.into_iter().map(|(n, d, w)| (n, (d, w))).unzip();
        let (mdeg, weights): (Vec<_>, Vec<_>) = rest.into_iter().unzip();
        let poly_ord = ModOrder::new(order.clone(), vec![0]);
        PolyRing { field, names, mdeg, weights, rank, order, poly_ord }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Context for polynomial (rank-one) arithmetic in the ring's order.
    pub fn ctx(&self) -> Ctx<'_, F> {
        Ctx::new(&self.field, &self.weights, &self.poly_ord)
    }

    pub fn ctx_with<'a>(&'a self, ord: &'a ModOrder) -> Ctx<'a, F> {
        Ctx::new(&self.field, &self.weights, ord)
    }

    /// Default module order for generators with the given degrees.
    pub fn module_order(&self, shifts: &[Degree]) -> ModOrder {
        ModOrder::new(self.order.clone(), shifts.iter().map(|d| d.wt).collect())
    }

    pub fn mono_degree(&self, m: &Mono) -> Degree {
        let mut md = vec![0i64; self.rank];
        for (i, &e) in m.iter().enumerate() {
            if e > 0 {
                for (c, d) in md.iter_mut().zip(&self.mdeg[i].0) {
                    *c += e as i64 * d;
                }
            }
        }
        Degree { md: Multidegree(md), wt: mono_weight(m, &self.weights) }
    }

    pub fn var(&self, i: usize) -> Poly<F::Elem> {
        Vector {
            terms: vec![Term { comp: 0, mono: mono_var(self.nvars(), i, 1), coef: self.field.one() }],
        }
    }

    pub fn one(&self) -> Poly<F::Elem> {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F::Elem> {
        self.ctx().constant(c, 0)
    }

    pub fn monomial(&self, m: Mono) -> Poly<F::Elem> {
        Vector { terms: vec![Term { comp: 0, mono: m, coef: self.field.one() }] }
    }

    pub fn add(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.ctx().add(a, b)
    }

    pub fn sub(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.ctx().sub(a, b)
    }

    pub fn mul(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.ctx().mul_poly(a, b)
    }

    pub fn pow(&self, a: &Poly<F::Elem>, k: u32) -> Poly<F::Elem> {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Degree of a homogeneous module element with the given generator
    /// degrees; `Ok(None)` for zero.
    pub fn vector_degree(&self, v: &Vector<F::Elem>, shifts: &[Degree]) -> Result<Option<Degree>> {
        let mut deg: Option<Degree> = None;
        for t in &v.terms {
            let d = &self.mono_degree(&t.mono) + &shifts[t.comp as usize];
            match &deg {
                None => deg = Some(d),
                Some(d0) if *d0 != d => {
                    return Err(Error::Inhomogeneous(format!(
                        "{} has terms of degrees {d0} and {d}",
                        self.render_vector(v)
                    )))
                }
                _ => {}
            }
        }
        Ok(deg)
    }

    pub fn poly_degree(&self, p: &Poly<F::Elem>) -> Result<Option<Degree>> {
        self.vector_degree(p, &[Degree::zero(self.rank)])
    }

    pub fn from_expr(&self, e: &Expr) -> Result<Poly<F::Elem>> {
        if let Some((n, d)) = eval_rational(e) {
            return Ok(self.constant(self.field.from_ratio(&n, &d)?));
        }
        Ok(match e {
            Expr::Int(_) => unreachable!("handled by eval_rational"),
            Expr::Var(v) => {
                let i = self
                    .var_index(v)
                    .ok_or_else(|| Error::Parse { line: 0, col: 0, msg: format!("unknown variable `{v}`") })?;
                self.var(i)
            }
            Expr::Neg(a) => self.ctx().neg(&self.from_expr(a)?),
            Expr::Add(a, b) => self.add(&self.from_expr(a)?, &self.from_expr(b)?),
            Expr::Sub(a, b) => self.sub(&self.from_expr(a)?, &self.from_expr(b)?),
            Expr::Mul(a, b) => self.mul(&self.from_expr(a)?, &self.from_expr(b)?),
            Expr::Div(a, b) => {
                let (n, d) = eval_rational(b).ok_or_else(|| {
                    Error::Unsupported("division by a non-constant polynomial".into())
                })?;
                let c = self.field.from_ratio(&d, &n)?;
                self.ctx().scale(&self.from_expr(a)?, &c)
            }
            Expr::Pow(a, k) => self.pow(&self.from_expr(a)?, *k),
        })
    }

    pub fn parse(&self, s: &str) -> Result<Poly<F::Elem>> {
        self.from_expr(&parse_expr(s)?)
    }

    fn render_mono(&self, m: &Mono) -> String {
        let parts: Vec<String> = m
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, e)| if *e == 1 { self.names[i].clone() } else { format!("{}^{}", self.names[i], e) })
            .collect();
        parts.join("*")
    }

    /// Human-readable form; components are printed as `[c]` suffixes for
    /// module elements of rank above one.
    pub fn render_vector(&self, v: &Vector<F::Elem>) -> String {
        if v.is_zero() {
            return "0".into();
        }
        let multi = v.terms.iter().any(|t| t.comp != 0);
        let mut s = String::new();
        for (k, t) in v.terms.iter().enumerate() {
            let c = self.field.render(&t.coef);
            let (neg, mag) = match c.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, c),
            };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = self.render_mono(&t.mono);
            match (mono.is_empty(), mag == "1") {
                (true, _) => s.push_str(&mag),
                (false, true) => s.push_str(&mono),
                (false, false) => s.push_str(&format!("{mag}*{mono}")),
            }
            if multi {
                s.push_str(&format!("[{}]", t.comp));
            }
        }
        s
    }

    /// Regrades every variable through `phi`.
    pub fn coarsen(&self, phi: &GradingMap) -> Result<Self> {
        let mut vars = Vec::with_capacity(self.nvars());
        for i in 0..self.nvars() {
            let d = phi.apply(&self.mdeg[i])?;
            if !d.is_nonnegative() {
                return Err(Error::BadGradingMap(self.names[i].clone()));
            }
            vars.push((self.names[i].clone(), d, self.weights[i]));
        }
        Ok(Self::new_unchecked(self.field.clone(), vars, self.order.clone(), phi.target_rank()))
    }

    /// Base variables: those of multidegree zero.
    pub fn base_vars(&self) -> Vec<usize> {
        (0..self.nvars()).filter(|&i| self.mdeg[i].is_zero()).collect()
    }

    pub fn has_field_base(&self) -> bool {
        self.base_vars().is_empty()
    }

    /// Canonical twist `w`: the sum of all variable degrees.
    pub fn canonical_twist(&self) -> Degree {
        let mut d = Degree::zero(self.rank);
        for i in 0..self.nvars() {
            d = &d + &Degree { md: self.mdeg[i].clone(), wt: self.weights[i] };
        }
        d
    }

    pub fn same_shape(&self, other: &Self) -> bool {
        self.names == other.names
            && self.mdeg == other.mdeg
            && self.weights == other.weights
            && self.field == other.field
    }

    pub fn with_order(&self, order: MonoOrder) -> Self {
        let vars = (0..self.nvars())
            .map(|i| (self.names[i].clone(), self.mdeg[i].clone(), self.weights[i]))
            .collect();
        Self::new_unchecked(self.field.clone(), vars, order, self.rank)
    }

    pub fn one_mono(&self) -> Mono {
        mono_one(self.nvars())
    }
}

/// A quotient `P / I` of a multigraded polynomial ring by a homogeneous ideal.
#[derive(Debug)]
pub struct GradedRing<F: Field> {
    pub poly: Arc<PolyRing<F>>,
    pub ideal: Vec<Poly<F::Elem>>,
    pub reduce_on_multiply: bool,
    gb: OnceLock<GroebnerBasis<F>>,
}

pub fn make_graded_ring<F: Field>(spec: GradedRingSpec<F>) -> Result<Arc<GradedRing<F>>> {
    let poly = Arc::new(PolyRing::new(spec.field, spec.variables, spec.order)?);
    let mut ideal = Vec::new();
    for e in &spec.defining_ideal {
        let f = poly.from_expr(e)?;
        poly.poly_degree(&f)?;
        if !f.is_zero() {
            ideal.push(f);
        }
    }
    Ok(Arc::new(GradedRing { poly, ideal, reduce_on_multiply: spec.reduce_on_multiply, gb: OnceLock::new() }))
}

impl<F: Field> GradedRing<F> {
    pub fn free(poly: Arc<PolyRing<F>>) -> Arc<Self> {
        Arc::new(GradedRing { poly, ideal: Vec::new(), reduce_on_multiply: false, gb: OnceLock::new() })
    }

    pub fn quotient(poly: Arc<PolyRing<F>>, ideal: Vec<Poly<F::Elem>>) -> Result<Arc<Self>> {
        for f in &ideal {
            poly.poly_degree(f)?;
        }
        let ideal = ideal.into_iter().filter(|f| !f.is_zero()).collect();
        Ok(Arc::new(GradedRing { poly, ideal, reduce_on_multiply: false, gb: OnceLock::new() }))
    }

    pub fn ideal_gb(&self) -> &GroebnerBasis<F> {
        self.gb.get_or_init(|| {
            GroebnerBasis::of_ideal(&self.poly, &self.ideal).expect("defining ideal validated as homogeneous")
        })
    }

    pub fn coarsen(&self, phi: &GradingMap) -> Result<Arc<Self>> {
        let poly = Arc::new(self.poly.coarsen(phi)?);
        Ok(Arc::new(GradedRing {
            poly,
            ideal: self.ideal.clone(),
            reduce_on_multiply: self.reduce_on_multiply,
            gb: OnceLock::new(),
        }))
    }

    pub fn element(self: &Arc<Self>, p: Poly<F::Elem>) -> RingElem<F> {
        RingElem { ring: Arc::clone(self), poly: p }
    }
}

/// A polynomial tagged with the ring it lives in.
#[derive(Clone, Debug)]
pub struct RingElem<F: Field> {
    pub ring: Arc<GradedRing<F>>,
    pub poly: Poly<F::Elem>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Mul,
}

pub fn ring_arithmetic<F: Field>(f: &RingElem<F>, g: &RingElem<F>, op: RingOp) -> Result<RingElem<F>> {
    if !Arc::ptr_eq(&f.ring, &g.ring) {
        return Err(Error::RingMismatch);
    }
    let ring = &f.ring;
    let p = match op {
        RingOp::Add => ring.poly.add(&f.poly, &g.poly),
        RingOp::Mul => {
            let prod = ring.poly.mul(&f.poly, &g.poly);
            if ring.reduce_on_multiply && !ring.ideal.is_empty() {
                ring.ideal_gb().normal_form(&prod)
            } else {
                prod
            }
        }
    };
    Ok(RingElem { ring: Arc::clone(ring), poly: p })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn md(v: &[i64]) -> Multidegree {
        Multidegree(v.to_vec())
    }

    fn spec<F: Field>(field: F, vars: &[(&str, &[i64])], ideal: &[&str]) -> GradedRingSpec<F> {
        GradedRingSpec {
            field,
            variables: vars.iter().map(|(n, d)| (n.to_string(), md(d), 1)).collect(),
            order: MonoOrder::Degrevlex,
            defining_ideal: ideal.iter().map(|s| parse_expr(s).unwrap()).collect(),
            reduce_on_multiply: true,
        }
    }

    #[test]
    fn valid_cox_rings() {
        let r = make_graded_ring(spec(PrimeField::default(), &[("x", &[1]), ("y", &[1])], &[])).unwrap();
        assert_eq!(r.poly.nvars(), 2);
        let r = make_graded_ring(spec(
            Rationals,
            &[("x0", &[1, 0]), ("x1", &[1, 0]), ("y0", &[0, 1]), ("y1", &[0, 1])],
            &["x0*y0 - x1*y1"],
        ))
        .unwrap();
        assert_eq!(r.ideal.len(), 1);
    }

    #[test]
    fn inhomogeneous_generator_rejected() {
        let err = make_graded_ring(spec(PrimeField::default(), &[("x", &[1, 0]), ("y", &[0, 1])], &["x^2 + y"]))
            .unwrap_err();
        assert!(matches!(err, Error::Inhomogeneous(_)));
    }

    #[test]
    fn zero_weight_rejected() {
        let mut s = spec(PrimeField::default(), &[("x", &[1])], &[]);
        s.variables[0].2 = 0;
        assert!(matches!(make_graded_ring(s), Err(Error::ZeroWeight(_))));
    }

    #[test]
    fn arithmetic_examples() {
        let r = make_graded_ring(spec(PrimeField::default(), &[("x", &[1]), ("y", &[1])], &[])).unwrap();
        let p = &r.poly;
        let x = r.element(p.parse("x").unwrap());
        let y = r.element(p.parse("y").unwrap());
        let xy = ring_arithmetic(&x, &y, RingOp::Mul).unwrap();
        assert_eq!(p.render_vector(&xy.poly), "x*y");
        assert_eq!(p.poly_degree(&xy.poly).unwrap().unwrap().md, md(&[2]));
        let f = r.element(p.parse("x^2 - 3*y").unwrap());
        let nf = r.element(p.ctx().neg(&f.poly));
        assert!(ring_arithmetic(&f, &nf, RingOp::Add).unwrap().poly.is_zero());
        let a = r.element(p.parse("x + y").unwrap());
        let b = r.element(p.parse("x - y").unwrap());
        let prod = ring_arithmetic(&a, &b, RingOp::Mul).unwrap();
        assert_eq!(prod.poly, p.parse("x^2 - y^2").unwrap());
    }

    #[test]
    fn ring_mismatch() {
        let r1 = make_graded_ring(spec(PrimeField::default(), &[("x", &[1])], &[])).unwrap();
        let r2 = make_graded_ring(spec(PrimeField::default(), &[("x", &[1])], &[])).unwrap();
        let a = r1.element(r1.poly.var(0));
        let b = r2.element(r2.poly.var(0));
        assert!(matches!(ring_arithmetic(&a, &b, RingOp::Add), Err(Error::RingMismatch)));
    }

    #[test]
    fn reduce_on_multiply_uses_defining_ideal() {
        let r = make_graded_ring(spec(PrimeField::default(), &[("x", &[1]), ("y", &[1])], &["x*y"])).unwrap();
        let x = r.element(r.poly.var(0));
        let y = r.element(r.poly.var(1));
        assert!(ring_arithmetic(&x, &y, RingOp::Mul).unwrap().poly.is_zero());
    }

    #[test]
    fn coarsen_to_total_degree() {
        let r = PolyRing::new(
            PrimeField::default(),
            vec![("x".into(), md(&[1, 0]), 1), ("y".into(), md(&[0, 1]), 1)],
            MonoOrder::Degrevlex,
        )
        .unwrap();
        let c = r.coarsen(&GradingMap::total(2)).unwrap();
        assert_eq!(c.mdeg, vec![md(&[1]), md(&[1])]);
        let bad = GradingMap::new(vec![vec![1, -1]]).unwrap();
        assert!(matches!(r.coarsen(&bad), Err(Error::BadGradingMap(_))));
        assert_eq!(r.coarsen(&GradingMap::identity(2)).unwrap(), r);
    }
}
