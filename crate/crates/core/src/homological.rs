//! Minimal free resolutions and the invariants read off them: Betti
//! numbers, projective dimension, depth, Krull dimension, Ext against the
//! canonical module, the multigraded a-invariant and v(M).

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::degree::{DegSel, Degree, Multidegree};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{minimal_generators, syzygies, GroebnerBasis};
use crate::module::{kernel_elements, monomials_of_degree, submodule, Presentation};
use crate::poly::{Term, Vector};
use crate::ring::{Poly, PolyRing};

/// `F_0 ← F_1 ← …` with `maps[i]: F_{i+1} → F_i` given by columns.
#[derive(Clone, Debug)]
pub struct Resolution<F: Field> {
    pub ring: Arc<PolyRing<F>>,
    pub degrees: Vec<Vec<Degree>>,
    pub maps: Vec<Vec<Vector<F::Elem>>>,
    pub minimal: bool,
    pub bound: usize,
}

pub fn minimal_free_resolution<F: Field>(m: &Presentation<F>, bound: Option<usize>) -> Resolution<F> {
    let ring = Arc::clone(&m.ring);
    let bound = bound.unwrap_or(ring.nvars() + 1);
    let p = m.prune();
    let mut degrees = vec![p.gens.clone()];
    let mut maps: Vec<Vec<Vector<F::Elem>>> = Vec::new();
    let mut cols = p.rels.clone();
    while !cols.is_empty() && maps.len() < bound {
        let src = &degrees[maps.len()];
        let degs: Vec<Degree> = cols.iter().map(|c| ring.vector_degree(c, src).unwrap().unwrap()).collect();
        let ord = ring.module_order(src);
        let next_ord = ring.module_order(&degs);
        let ws: Vec<i64> = degs.iter().map(|d| d.wt).collect();
        let ker = syzygies(&ring, &ord, &cols, &ws);
        let ker = minimal_generators(&ring, &next_ord, &ker);
        degrees.push(degs);
        maps.push(cols);
        cols = ker;
    }
    Resolution { ring, degrees, maps, minimal: true, bound }
}

impl<F: Field> Resolution<F> {
    /// Number of nonzero maps.
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    pub fn is_zero_module(&self) -> bool {
        self.degrees[0].is_empty()
    }

    /// Betti numbers keyed by homological index and degree.
    pub fn betti(&self) -> BTreeMap<(usize, Degree), usize> {
        let mut out = BTreeMap::new();
        for (i, ds) in self.degrees.iter().enumerate() {
            for d in ds {
                *out.entry((i, d.clone())).or_insert(0) += 1;
            }
        }
        out
    }

    pub fn total_betti(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.len()).collect()
    }

    /// Numerator `K(t)` of the weight Hilbert series as (lowest exponent,
    /// coefficients).
    pub fn k_polynomial(&self) -> (i64, Vec<i128>) {
        let all: Vec<i64> = self.degrees.iter().flatten().map(|d| d.wt).collect();
        let lo = all.iter().copied().min().unwrap_or(0);
        let hi = all.iter().copied().max().unwrap_or(0);
        let mut coef = vec![0i128; (hi - lo + 1) as usize];
        for (i, ds) in self.degrees.iter().enumerate() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            for d in ds {
                coef[(d.wt - lo) as usize] += sign;
            }
        }
        (lo, coef)
    }

    /// Largest spread between twists in the resolution, per coordinate.
    pub fn twist_spread(&self) -> i64 {
        let all: Vec<&Degree> = self.degrees.iter().flatten().collect();
        let r = self.ring.rank;
        (0..r)
            .map(|j| {
                let lo = all.iter().map(|d| d.md.0[j]).min().unwrap_or(0);
                let hi = all.iter().map(|d| d.md.0[j]).max().unwrap_or(0);
                hi - lo
            })
            .max()
            .unwrap_or(0)
    }

    /// Hilbert function by the alternating sum over the resolution.
    pub fn hilbert(&self, sel: &DegSel) -> Result<i64> {
        let all = vec![true; self.ring.nvars()];
        let mut total = 0i64;
        for (i, ds) in self.degrees.iter().enumerate() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            for d in ds {
                total += sign * monomials_of_degree(&self.ring, &sel.minus(d), &all)?.len() as i64;
            }
        }
        Ok(total)
    }

    /// Columns of each map have no nonzero constant entries.
    pub fn check_minimal(&self) -> bool {
        self.maps.iter().flatten().all(|c| c.terms.iter().all(|t| t.mono.iter().any(|&e| e > 0)))
    }

    /// Consecutive maps compose to zero.
    pub fn check_complex(&self) -> bool {
        for i in 1..self.maps.len() {
            let ord = self.ring.module_order(&self.degrees[i - 1]);
            let ctx = self.ring.ctx_with(&ord);
            for c in &self.maps[i] {
                if !crate::module::apply_matrix(&ctx, &self.maps[i - 1], c).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Multiplicity of `t = 1` as a root of the Laurent polynomial.
fn order_at_one(coef: &[i128]) -> Option<usize> {
    let mut c: Vec<i128> = coef.to_vec();
    if c.iter().all(|&x| x == 0) {
        return None;
    }
    let mut k = 0;
    loop {
        if c.iter().sum::<i128>() != 0 {
            return Some(k);
        }
        // divide by (t - 1): synthetic division from the top
        let n = c.len();
        let mut q = vec![0i128; n - 1];
        let mut carry = 0i128;
        for i in (1..n).rev() {
            carry += c[i];
            q[i - 1] = carry;
        }
        c = q;
        k += 1;
    }
}

pub fn krull_dim<F: Field>(m: &Presentation<F>) -> Option<i64> {
    krull_dim_from(&minimal_free_resolution(m, None))
}

pub fn krull_dim_from<F: Field>(res: &Resolution<F>) -> Option<i64> {
    let (_, k) = res.k_polynomial();
    order_at_one(&k).map(|o| res.ring.nvars() as i64 - o as i64)
}

pub fn projective_dim<F: Field>(res: &Resolution<F>) -> Option<i64> {
    (!res.is_zero_module()).then(|| res.length() as i64)
}

/// Graded Auslander–Buchsbaum over the polynomial ambient.
pub fn depth_of<F: Field>(m: &Presentation<F>) -> Option<i64> {
    let res = minimal_free_resolution(m, None);
    projective_dim(&res).map(|pd| m.ring.nvars() as i64 - pd)
}

/// Coordinatewise minimum of the minimal generator degrees.
pub fn v_of<F: Field>(m: &Presentation<F>) -> Result<Multidegree> {
    let gens = m.minimal_gen_degrees();
    meet_all(&gens).ok_or(Error::ZeroModule("v-invariant"))
}

fn meet_all(gens: &[Degree]) -> Option<Multidegree> {
    let mut it = gens.iter();
    let first = it.next()?.md.clone();
    Some(it.fold(first, |acc, d| acc.meet(&d.md)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantRecord {
    pub dim: Option<i64>,
    pub depth: Option<i64>,
    pub pd: Option<i64>,
    pub cm: bool,
    pub v: Option<Multidegree>,
    pub a: Option<Multidegree>,
    pub characteristic: u64,
}

impl InvariantRecord {
    pub fn render_opt(x: &Option<i64>) -> String {
        x.map_or_else(|| "empty".to_string(), |v| v.to_string())
    }
}

pub fn is_cohen_macaulay<F: Field>(m: &Presentation<F>) -> Result<InvariantRecord> {
    let res = minimal_free_resolution(m, None);
    invariants_from(m, &res)
}

pub fn invariants_from<F: Field>(m: &Presentation<F>, res: &Resolution<F>) -> Result<InvariantRecord> {
    let characteristic = m.ring.field.characteristic();
    if res.is_zero_module() {
        return Ok(InvariantRecord { dim: None, depth: None, pd: None, cm: true, v: None, a: None, characteristic });
    }
    let n = m.ring.nvars() as i64;
    let dim = krull_dim_from(res).expect("nonzero module");
    let pd = res.length() as i64;
    let depth = n - pd;
    let v = meet_all(&res.degrees[0]);
    let a = Some(a_invariant_from(res, dim)?);
    Ok(InvariantRecord { dim: Some(dim), depth: Some(depth), pd: Some(pd), cm: dim == depth, v, a, characteristic })
}

/// `Ext^i_P(M, P(-w))` with `w` the sum of all variable degrees.
pub fn ext_dual_module<F: Field>(m: &Presentation<F>, i: i64) -> Result<Presentation<F>> {
    let res = minimal_free_resolution(m, None);
    ext_dual_from(&res, i)
}

pub fn ext_dual_from<F: Field>(res: &Resolution<F>, i: i64) -> Result<Presentation<F>> {
    let ring = &res.ring;
    let n = ring.nvars() as i64;
    if i < 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    let i = i as usize;
    if i >= res.degrees.len() {
        return Ok(Presentation::zero(Arc::clone(ring)));
    }
    let w = ring.canonical_twist();
    let dual = |k: usize| -> Vec<Degree> { res.degrees[k].iter().map(|d| &w - d).collect() };
    let gi = Presentation::free(Arc::clone(ring), dual(i));
    let ker = if i < res.maps.len() {
        let gnext = Presentation::free(Arc::clone(ring), dual(i + 1));
        let rows = transpose(&res.maps[i], res.degrees[i].len());
        kernel_elements(&gi, &gnext, &rows)?
    } else {
        (0..gi.rank()).map(|k| gi.unit(k)).collect()
    };
    let im = if i > 0 { transpose(&res.maps[i - 1], res.degrees[i - 1].len()) } else { Vec::new() };
    let ambient = Presentation::new_unchecked(Arc::clone(ring), gi.gens.clone(), im);
    Ok(submodule(&ambient, &ker)?.prune())
}

/// Rows of a matrix given by columns, as vectors indexed by column.
fn transpose<E: Clone>(cols: &[Vector<E>], nrows: usize) -> Vec<Vector<E>> {
    let mut rows: Vec<Vec<Term<E>>> = vec![Vec::new(); nrows];
    for (l, c) in cols.iter().enumerate() {
        for t in &c.terms {
            rows[t.comp as usize].push(Term { comp: l as u32, mono: t.mono.clone(), coef: t.coef.clone() });
        }
    }
    rows.into_iter().map(|terms| Vector { terms }).collect()
}

/// `a_j(M) = -min_j` over the minimal generator degrees of
/// `Ext^{N - dim M}(M, P(-w))`.
///
/// Every variable has multidegree in `N^r`, so each graded piece of a
/// finitely generated module sits coordinatewise above some generator
/// degree; the minimum over generators is therefore the minimum over the
/// support, which by graded local duality is minus the top degree of
/// `H^{dim M}_m(M)`.
pub fn a_invariant<F: Field>(m: &Presentation<F>) -> Result<Multidegree> {
    let res = minimal_free_resolution(m, None);
    let dim = krull_dim_from(&res).ok_or(Error::ZeroModule("a-invariant"))?;
    a_invariant_from(&res, dim)
}

fn a_invariant_from<F: Field>(res: &Resolution<F>, dim: i64) -> Result<Multidegree> {
    let n = res.ring.nvars() as i64;
    let ext = ext_dual_from(res, n - dim)?;
    let low = meet_all(&ext.gens).ok_or(Error::ZeroModule("a-invariant"))?;
    Ok(-&low)
}

/// Grade of `I` on `N`: the least `i` with `Ext^i_P(P/I, N) ≠ 0`.
/// `Ok(None)` when `N = IN`, i.e. the grade is infinite.
pub fn grade_of<F: Field>(ideal: &[Poly<F::Elem>], n: &Presentation<F>) -> Result<Option<usize>> {
    let ring = &n.ring;
    let gb = GroebnerBasis::of_ideal(ring, ideal)?;
    if gb.is_unit_ideal() {
        return Err(Error::UnitIdeal);
    }
    if n.is_zero() {
        return Ok(None);
    }
    let pi = Presentation::cyclic(Arc::clone(ring), ideal)?;
    let res = minimal_free_resolution(&pi, None);
    let hom = |k: usize| -> Presentation<F> {
        let mut gens = Vec::new();
        let mut rels = Vec::new();
        let r = n.rank() as u32;
        for (b, d) in res.degrees[k].iter().enumerate() {
            gens.extend(n.gens.iter().map(|g| g - d));
            let off = b as u32 * r;
            rels.extend(n.rels.iter().map(|v| v.remap_components(|c| Some(c + off))));
        }
        Presentation::new_unchecked(Arc::clone(ring), gens, rels)
    };
    // image of generator (k, g) of Hom(F_j, N) in Hom(F_{j+1}, N)
    let delta = |j: usize| -> Vec<Vector<F::Elem>> {
        let r = n.rank();
        let rows = transpose(&res.maps[j], res.degrees[j].len());
        let mut out = Vec::new();
        for row in &rows {
            for g in 0..r {
                out.push(Vector {
                    terms: row
                        .terms
                        .iter()
                        .map(|t| Term { comp: t.comp * r as u32 + g as u32, mono: t.mono.clone(), coef: t.coef.clone() })
                        .collect(),
                });
            }
        }
        out
    };
    for i in 0..res.degrees.len() {
        let hi = hom(i);
        let ker = if i < res.maps.len() { kernel_elements(&hi, &hom(i + 1), &delta(i))? } else {
            (0..hi.rank()).map(|k| hi.unit(k)).collect()
        };
        let mut span = hi.rels.clone();
        if i > 0 {
            let ctx = hi.ctx();
            span.extend(delta(i - 1).iter().map(|v| ctx.resort(v)));
        }
        let gb = GroebnerBasis::compute(ring, hi.order().clone(), &span);
        if ker.iter().any(|k| !gb.contains(k)) {
            return Ok(Some(i));
        }
    }
    Ok(None)
}
