//! Graded pieces of local cohomology and of sheaf cohomology on `Proj`.
//!
//! Three routes are implemented:
//!
//! * duality, for the maximal ideal: `H^i_m(M)_D ≅ Ext^{N-i}(M, P(-w))_{-D}`;
//! * the Koszul colimit `lim_k H^i(K^•(g_1^k, …, g_s^k; M))_D` over any
//!   homogeneous generators;
//! * for the maximal ideal on larger rings, the same colimit evaluated through
//!   `H^i(K^•(x^k; M))_D ≅ Tor_{N-i}(P/(x^k), M)_{D + kΣ deg x}`, which only
//!   touches monomials with exponents below `k`.
//!
//! The colimit is read off at the first `k` whose value repeats for
//! `margin + 1` further steps, starting from a `k` that clears the degree
//! and the resolution twists.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::Serialize;

use crate::degree::{DegSel, Degree, Multidegree};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homological::{ext_dual_from, krull_dim_from, minimal_free_resolution, Resolution};
use crate::linalg::Echelon;
use crate::module::{monomials_bounded, Presentation};
use crate::poly::{mono_divides, mono_mul, Mono, Term, Vector};
use crate::ring::{Poly, PolyRing};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SupportKind {
    Irrelevant,
    Maximal,
    Custom,
}

#[derive(Clone, Debug)]
pub struct SupportSpec<F: Field> {
    pub kind: SupportKind,
    pub gens: Vec<Poly<F::Elem>>,
}

/// Variables of multidegree `e_j`, one list per coordinate. Fails when some
/// variable has a multidegree that is neither zero nor a unit vector.
pub fn coordinate_blocks<F: Field>(ring: &PolyRing<F>) -> Result<Vec<Vec<usize>>> {
    let r = ring.rank;
    let mut blocks = vec![Vec::new(); r];
    for (i, d) in ring.mdeg.iter().enumerate() {
        if d.is_zero() {
            continue;
        }
        match (0..r).find(|&j| *d == Multidegree::unit(r, j)) {
            Some(j) => blocks[j].push(i),
            None => {
                return Err(Error::Unsupported(format!(
                    "variable `{}` of degree {d} is not a standard generator",
                    ring.names[i]
                )))
            }
        }
    }
    Ok(blocks)
}

impl<F: Field> SupportSpec<F> {
    /// `S_+` through the products `x_{1,i_1} ⋯ x_{r,i_r}`.
    pub fn irrelevant(ring: &PolyRing<F>) -> Result<Self> {
        let blocks = coordinate_blocks(ring)?;
        if blocks.iter().any(|b| b.is_empty()) {
            return Err(Error::Gate("S_+ is zero: some coordinate has no variables".into()));
        }
        let mut gens = vec![ring.one()];
        for b in &blocks {
            let mut next = Vec::new();
            for g in &gens {
                for &v in b {
                    next.push(ring.mul(g, &ring.var(v)));
                }
            }
            gens = next;
        }
        Ok(SupportSpec { kind: SupportKind::Irrelevant, gens })
    }

    pub fn maximal(ring: &PolyRing<F>) -> Self {
        SupportSpec { kind: SupportKind::Maximal, gens: (0..ring.nvars()).map(|i| ring.var(i)).collect() }
    }

    pub fn custom(ring: &PolyRing<F>, gens: Vec<Poly<F::Elem>>) -> Result<Self> {
        for g in &gens {
            ring.poly_degree(g)?;
        }
        Ok(SupportSpec { kind: SupportKind::Custom, gens: gens.into_iter().filter(|g| !g.is_zero()).collect() })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Duality,
    KoszulColimit,
    TorColimit,
    Direct,
    PaperIdentity,
}

impl Mode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::Duality => "duality",
            Mode::KoszulColimit => "koszul-colimit",
            Mode::TorColimit => "tor-colimit",
            Mode::Direct => "direct",
            Mode::PaperIdentity => "paper-identity",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LcValue {
    pub dim: usize,
    /// Exponent at which the colimit was read, if one was needed.
    pub k: Option<u32>,
    pub mode: Mode,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SheafValue {
    pub dim: usize,
    pub k: Option<u32>,
    /// For `i = 0`: whether `M_n → Γ(Z, M(n))` is an isomorphism.
    pub natural_iso: Option<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Duality,
    Colimit,
}

struct Piece {
    basis: Vec<(u32, Mono)>,
    index: HashMap<(u32, Mono), usize>,
}

/// Per-module cache of the resolution, Ext modules and graded pieces.
pub struct CohomologyEngine<F: Field> {
    pub module: Presentation<F>,
    pub res: Resolution<F>,
    pub margin: u32,
    pub max_k: u32,
    ext: Vec<OnceLock<std::result::Result<Presentation<F>, Error>>>,
    pieces: Mutex<HashMap<DegSel, Arc<Piece>>>,
    irrelevant: OnceLock<std::result::Result<SupportSpec<F>, Error>>,
}

impl<F: Field> CohomologyEngine<F> {
    pub fn new(m: &Presentation<F>, margin: u32) -> Self {
        let module = m.prune();
        let res = minimal_free_resolution(&module, None);
        let n = module.ring.nvars();
        CohomologyEngine {
            module,
            res,
            margin,
            max_k: 24,
            ext: (0..=n).map(|_| OnceLock::new()).collect(),
            pieces: Mutex::new(HashMap::new()),
            irrelevant: OnceLock::new(),
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.module.ring
    }

    pub fn dim(&self) -> Option<i64> {
        krull_dim_from(&self.res)
    }

    pub fn ext(&self, j: usize) -> Result<&Presentation<F>> {
        self.ext[j].get_or_init(|| ext_dual_from(&self.res, j as i64)).as_ref().map_err(|e| e.clone())
    }

    pub fn irrelevant(&self) -> Result<&SupportSpec<F>> {
        self.irrelevant.get_or_init(|| SupportSpec::irrelevant(self.ring())).as_ref().map_err(|e| e.clone())
    }

    fn piece(&self, sel: &DegSel) -> Result<Arc<Piece>> {
        if let Some(p) = self.pieces.lock().unwrap().get(sel) {
            return Ok(Arc::clone(p));
        }
        let basis = self.module.piece_basis(sel)?;
        let index = basis.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
        let p = Arc::new(Piece { basis, index });
        self.pieces.lock().unwrap().insert(sel.clone(), Arc::clone(&p));
        Ok(p)
    }

    fn start_k(&self, sel: &DegSel) -> u32 {
        let mut m = sel.md.0.iter().map(|c| c.abs()).max().unwrap_or(0);
        if let Some(w) = sel.wt {
            m = m.max(w.abs());
        }
        let twists = self
            .res
            .degrees
            .iter()
            .flatten()
            .flat_map(|d| d.md.0.iter().copied().chain(std::iter::once(d.wt)))
            .map(|c| c.abs())
            .max()
            .unwrap_or(0);
        (1 + m + twists) as u32
    }

    fn colimit(&self, sel: &DegSel, f: impl Fn(u32) -> Result<usize>) -> Result<(usize, u32)> {
        let k0 = self.start_k(sel);
        let need = self.margin + 1;
        let mut k = k0;
        let mut prev = f(k)?;
        let mut run = 0;
        let mut run_start = k;
        while k < k0 + self.max_k {
            let next = f(k + 1)?;
            if next == prev {
                run += 1;
                if run >= need {
                    return Ok((prev, run_start));
                }
            } else {
                run = 0;
                run_start = k + 1;
            }
            prev = next;
            k += 1;
        }
        Err(Error::ResourceLimit(format!("Koszul colimit did not stabilize at {sel} by k = {k}")))
    }

    /// `dim H^i(K^•(g^k; M))_sel`.
    pub fn koszul_dim(&self, gens: &[Poly<F::Elem>], i: usize, sel: &DegSel, k: u32) -> Result<usize> {
        let s = gens.len();
        if i > s {
            return Ok(0);
        }
        let ring = self.ring();
        let pows: Vec<Poly<F::Elem>> = gens.iter().map(|g| ring.pow(g, k)).collect();
        let degs: Vec<Degree> = gens
            .iter()
            .map(|g| ring.poly_degree(g).map(|d| d.expect("nonzero generator").scale(k as i64)))
            .collect::<Result<_>>()?;
        let subsets = |j: usize| -> Vec<u32> { (0u32..(1u32 << s)).filter(|m| m.count_ones() as usize == j).collect() };
        let sel_of = |mask: u32| -> DegSel {
            let mut d = sel.clone();
            for (l, dl) in degs.iter().enumerate() {
                if mask & (1 << l) != 0 {
                    d = d.shifted(dl);
                }
            }
            d
        };
        // dimension and offsets of K^j
        let layout = |j: usize| -> Result<(Vec<(u32, Arc<Piece>)>, HashMap<u32, usize>, usize)> {
            let mut comps = Vec::new();
            let mut off = HashMap::new();
            let mut total = 0;
            for m in subsets(j) {
                let p = self.piece(&sel_of(m))?;
                off.insert(m, total);
                total += p.basis.len();
                comps.push((m, p));
            }
            Ok((comps, off, total))
        };
        let rank_of = |j: usize| -> Result<usize> {
            if j >= s {
                return Ok(0);
            }
            let (src, _, n_src) = layout(j)?;
            if n_src == 0 {
                return Ok(0);
            }
            let (_, toff, _) = layout(j + 1)?;
            let ctx = self.module.ctx();
            let mut ech = Echelon::new(&ring.field);
            for (mask, piece) in &src {
                for (c, m) in &piece.basis {
                    let v = Vector { terms: vec![Term { comp: *c, mono: m.clone(), coef: ring.field.one() }] };
                    let mut row = Vec::new();
                    for l in 0..s {
                        if mask & (1 << l) != 0 {
                            continue;
                        }
                        let tmask = mask | (1 << l);
                        let sign_neg = (mask & ((1 << l) - 1)).count_ones() % 2 == 1;
                        let tp = self.piece(&sel_of(tmask))?;
                        let prod = ctx.mul_poly(&pows[l], &v);
                        let coords = self.module.coordinates(&prod, &tp.index);
                        let base = toff[&tmask];
                        for (idx, coef) in coords {
                            let coef = if sign_neg { ring.field.neg(&coef) } else { coef };
                            row.push((base + idx, coef));
                        }
                    }
                    row.sort_by_key(|e| e.0);
                    ech.insert(row);
                }
            }
            Ok(ech.rank())
        };
        let (_, _, dim_i) = layout(i)?;
        if dim_i == 0 {
            return Ok(0);
        }
        let r_out = rank_of(i)?;
        let r_in = if i > 0 { rank_of(i - 1)? } else { 0 };
        Ok(dim_i - r_out - r_in)
    }

    /// `dim H_j(F_• ⊗ P/(x_1^k, …, x_N^k))_sel`.
    pub fn tor_dim(&self, j: usize, sel: &DegSel, k: u32) -> Result<usize> {
        let ring = self.ring();
        let res = &self.res;
        if j >= res.degrees.len() {
            return Ok(0);
        }
        let basis = |h: usize| -> Vec<(u32, Mono)> {
            let mut out = Vec::new();
            for (b, d) in res.degrees[h].iter().enumerate() {
                for m in monomials_bounded(ring, &sel.minus(d), k as u16) {
                    out.push((b as u32, m));
                }
            }
            out
        };
        let rank_of = |h: usize| -> usize {
            // d_h: C_h → C_{h-1}
            if h == 0 || h >= res.degrees.len() {
                return 0;
            }
            let src = basis(h);
            if src.is_empty() {
                return 0;
            }
            let tgt: HashMap<(u32, Mono), usize> = basis(h - 1).into_iter().enumerate().map(|(i, b)| (b, i)).collect();
            let mut ech = Echelon::new(&ring.field);
            for (b, m) in &src {
                let col = &res.maps[h - 1][*b as usize];
                let mut row: Vec<(usize, F::Elem)> = col
                    .terms
                    .iter()
                    .filter_map(|t| {
                        let mm = mono_mul(&t.mono, m);
                        if mm.iter().any(|&e| e as u32 >= k) {
                            return None;
                        }
                        Some((tgt[&(t.comp, mm)], t.coef.clone()))
                    })
                    .collect();
                row.sort_by_key(|e| e.0);
                ech.insert(row);
            }
            ech.rank()
        };
        let n = basis(j).len();
        if n == 0 {
            return Ok(0);
        }
        Ok(n - rank_of(j) - rank_of(j + 1))
    }

    fn lc_duality(&self, i: usize, sel: &DegSel) -> Result<LcValue> {
        let n = self.ring().nvars();
        if i > n {
            return Ok(LcValue { dim: 0, k: None, mode: Mode::Duality });
        }
        let e = self.ext(n - i)?;
        Ok(LcValue { dim: e.piece_dim(&sel.negated())?, k: None, mode: Mode::Duality })
    }

    fn lc_colimit(&self, gens: &[Poly<F::Elem>], i: usize, sel: &DegSel, maximal: bool) -> Result<LcValue> {
        let n = self.ring().nvars();
        if maximal && n > 4 {
            if i > n {
                return Ok(LcValue { dim: 0, k: None, mode: Mode::TorColimit });
            }
            let total = self.ring().canonical_twist();
            let (dim, k) = self.colimit(sel, |k| {
                let shifted = sel.shifted(&total.scale(k as i64));
                self.tor_dim(n - i, &shifted, k)
            })?;
            return Ok(LcValue { dim, k: Some(k), mode: Mode::TorColimit });
        }
        let (dim, k) = self.colimit(sel, |k| self.koszul_dim(gens, i, sel, k))?;
        Ok(LcValue { dim, k: Some(k), mode: Mode::KoszulColimit })
    }

    pub fn local_cohomology(&self, support: &SupportSpec<F>, i: i64, sel: &DegSel) -> Result<LcValue> {
        if i < 0 {
            return Err(Error::NegativeIndex(i));
        }
        match support.kind {
            SupportKind::Maximal => self.lc_duality(i as usize, sel),
            _ => self.lc_colimit(&support.gens, i as usize, sel, false),
        }
    }

    /// Local cohomology at the maximal ideal by the chosen route.
    pub fn local_maximal(&self, route: Route, i: i64, sel: &DegSel) -> Result<LcValue> {
        if i < 0 {
            return Err(Error::NegativeIndex(i));
        }
        match route {
            Route::Duality => self.lc_duality(i as usize, sel),
            Route::Colimit => {
                let gens = SupportSpec::maximal(self.ring()).gens;
                self.lc_colimit(&gens, i as usize, sel, true)
            }
        }
    }

    pub fn sheaf(&self, i: i64, sel: &DegSel) -> Result<SheafValue> {
        if i < 0 {
            return Err(Error::NegativeIndex(i));
        }
        let sp = self.irrelevant()?;
        if i >= 1 {
            let v = self.local_cohomology(sp, i + 1, sel)?;
            return Ok(SheafValue { dim: v.dim, k: v.k, natural_iso: None });
        }
        let h0 = self.local_cohomology(sp, 0, sel)?;
        let h1 = self.local_cohomology(sp, 1, sel)?;
        let mn = self.module.piece_dim(sel)?;
        Ok(SheafValue {
            dim: mn + h1.dim - h0.dim,
            k: h0.k.max(h1.k),
            natural_iso: Some(h0.dim == 0 && h1.dim == 0),
        })
    }

    /// `H^i_E(Z, M(n))`: directly when the base is a field (`E = Z`),
    /// otherwise through `H^{i+r}_m(M)_n`, which is only available below
    /// `v(M)`.
    pub fn support_e(&self, i: i64, sel: &DegSel) -> Result<(usize, Mode)> {
        if i < 0 {
            return Err(Error::NegativeIndex(i));
        }
        if self.ring().has_field_base() {
            return Ok((self.sheaf(i, sel)?.dim, Mode::Direct));
        }
        let v = self.v().ok_or(Error::ZeroModule("v-invariant"))?;
        if !v.gt(&sel.md) {
            return Err(Error::IdentityOutOfRange(format!("{} is not below v(M) = {v}", sel.md)));
        }
        let r = self.ring().rank as i64;
        Ok((self.lc_duality((i + r) as usize, sel)?.dim, Mode::PaperIdentity))
    }

    pub fn v(&self) -> Option<Multidegree> {
        let g = &self.res.degrees[0];
        let first = g.first()?.md.clone();
        Some(g.iter().fold(first, |acc, d| acc.meet(&d.md)))
    }
}

/// A box of multidegrees, optionally with a weight range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Window {
    pub lo: Multidegree,
    pub hi: Multidegree,
    pub wt: Option<(i64, i64)>,
}

impl Window {
    pub fn around(center: &Multidegree, w: i64) -> Self {
        let r = center.rank();
        Window { lo: center - &Multidegree(vec![w; r]), hi: center + &Multidegree(vec![w; r]), wt: None }
    }

    pub fn multidegrees(&self) -> Vec<Multidegree> {
        let r = self.lo.rank();
        let mut out = vec![Vec::new()];
        for j in 0..r {
            let mut next = Vec::new();
            for p in &out {
                for c in self.lo.0[j]..=self.hi.0[j] {
                    let mut q: Vec<i64> = p.clone();
                    q.push(c);
                    next.push(q);
                }
            }
            out = next;
        }
        out.into_iter().map(Multidegree).collect()
    }

    /// Every selector in the window, lexicographic in (multidegree, weight).
    pub fn selectors(&self) -> Vec<DegSel> {
        let mds = self.multidegrees();
        match self.wt {
            None => mds.into_iter().map(DegSel::multi).collect(),
            Some((a, b)) => mds
                .into_iter()
                .flat_map(|md| (a..=b).map(move |w| DegSel { md: md.clone(), wt: Some(w) }))
                .collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.lo.0.iter().zip(&self.hi.0).any(|(a, b)| a > b) || self.wt.is_some_and(|(a, b)| a > b)
    }

    pub fn describe(&self) -> String {
        let mut s = format!("[{},{}]", self.lo, self.hi);
        if let Some((a, b)) = self.wt {
            s.push_str(&format!("@[{a},{b}]"));
        }
        s
    }
}

/// The default window: `v(M) ± w·1` with `w = 3 + twist spread`; over a
/// graded-local base a weight range covering the resolution is added.
pub fn default_window<F: Field>(engine: &CohomologyEngine<F>) -> Window {
    let ring = engine.ring();
    let r = ring.rank;
    let v = engine.v().unwrap_or_else(|| Multidegree::zero(r));
    let w = 3 + engine.res.twist_spread();
    let mut win = Window::around(&v, w);
    if !ring.has_field_base() {
        let tw = ring.canonical_twist().wt;
        let top = engine.res.degrees.iter().flatten().map(|d| d.wt).max().unwrap_or(0);
        win.wt = Some((-tw - 1, top + 2));
    }
    win
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableKind {
    Sheaf,
    LocalIrrelevant,
    LocalMaximal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub dim: usize,
    pub k: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyTable {
    pub kind: TableKind,
    pub window: Window,
    pub mode: Mode,
    pub entries: BTreeMap<(i64, DegSel), Cell>,
}

pub fn cohomology_table<F: Field>(
    engine: &CohomologyEngine<F>,
    kind: TableKind,
    i_range: std::ops::RangeInclusive<i64>,
    window: &Window,
) -> Result<CohomologyTable> {
    if window.is_empty() || i_range.is_empty() {
        return Err(Error::EmptyWindow);
    }
    let cells: Vec<(i64, DegSel)> =
        i_range.clone().flat_map(|i| window.selectors().into_iter().map(move |s| (i, s))).collect();
    let mode = match kind {
        TableKind::LocalMaximal => Mode::Duality,
        _ => Mode::KoszulColimit,
    };
    let results: Vec<Result<((i64, DegSel), Cell)>> = cells
        .into_par_iter()
        .map(|(i, sel)| {
            let cell = match kind {
                TableKind::Sheaf => {
                    let v = engine.sheaf(i, &sel)?;
                    Cell { dim: v.dim, k: v.k }
                }
                TableKind::LocalIrrelevant => {
                    let v = engine.local_cohomology(engine.irrelevant()?, i, &sel)?;
                    Cell { dim: v.dim, k: v.k }
                }
                TableKind::LocalMaximal => {
                    let v = engine.local_maximal(Route::Duality, i, &sel)?;
                    Cell { dim: v.dim, k: v.k }
                }
            };
            Ok(((i, sel), cell))
        })
        .collect();
    let mut entries = BTreeMap::new();
    for r in results {
        let (key, cell) = r?;
        entries.insert(key, cell);
    }
    Ok(CohomologyTable { kind, window: window.clone(), mode, entries })
}

/// One-shot wrapper around [`CohomologyEngine::local_cohomology`].
pub fn local_cohomology_dim<F: Field>(
    m: &Presentation<F>,
    support: &SupportSpec<F>,
    i: i64,
    sel: &DegSel,
) -> Result<LcValue> {
    CohomologyEngine::new(m, 1).local_cohomology(support, i, sel)
}

pub fn sheaf_cohomology_dim<F: Field>(m: &Presentation<F>, i: i64, sel: &DegSel) -> Result<SheafValue> {
    CohomologyEngine::new(m, 1).sheaf(i, sel)
}

pub fn support_e_dim<F: Field>(m: &Presentation<F>, i: i64, sel: &DegSel) -> Result<(usize, Mode)> {
    CohomologyEngine::new(m, 1).support_e(i, sel)
}

/// Whether a module element of the given degree is divisible into the piece
/// (used by tests to cross-check piece bases).
pub fn divides_any(leads: &[(u32, Mono)], c: u32, m: &Mono) -> bool {
    leads.iter().any(|(lc, l)| *lc == c && mono_divides(l, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::MonoOrder;

    fn ring(degs: &[(&str, &[i64])]) -> Arc<PolyRing<PrimeField>> {
        Arc::new(
            PolyRing::new(
                PrimeField::default(),
                degs.iter().map(|(n, d)| (n.to_string(), Multidegree(d.to_vec()), 1)).collect(),
                MonoOrder::Degrevlex,
            )
            .unwrap(),
        )
    }

    fn free(r: &Arc<PolyRing<PrimeField>>) -> Presentation<PrimeField> {
        Presentation::free(Arc::clone(r), vec![Degree::zero(r.rank)])
    }

    fn md(v: &[i64]) -> DegSel {
        DegSel::multi(Multidegree(v.to_vec()))
    }

    #[test]
    fn top_local_cohomology_of_plane() {
        let r = ring(&[("x", &[1]), ("y", &[1])]);
        let e = CohomologyEngine::new(&free(&r), 1);
        let sp = SupportSpec::maximal(&r);
        assert_eq!(e.local_cohomology(&sp, 2, &md(&[-2])).unwrap().dim, 1);
        assert_eq!(e.local_cohomology(&sp, 2, &md(&[-3])).unwrap().dim, 2);
        assert_eq!(e.local_maximal(Route::Colimit, 2, &md(&[-3])).unwrap().dim, 2);
        let irr = SupportSpec::irrelevant(&r).unwrap();
        for n in -3..3 {
            assert_eq!(e.local_cohomology(&irr, 0, &md(&[n])).unwrap().dim, 0);
        }
        let rb = ring(&[("x", &[1, 0]), ("y", &[0, 1])]);
        let eb = CohomologyEngine::new(&free(&rb), 1);
        assert_eq!(eb.local_cohomology(&SupportSpec::maximal(&rb), 2, &md(&[-1, -1])).unwrap().dim, 1);
    }

    #[test]
    fn projective_line_bundles() {
        let r = ring(&[("x0", &[1]), ("x1", &[1])]);
        let e = CohomologyEngine::new(&free(&r), 1);
        assert_eq!(e.sheaf(0, &md(&[2])).unwrap().dim, 3);
        assert_eq!(e.sheaf(1, &md(&[-2])).unwrap().dim, 1);
        assert_eq!(e.sheaf(1, &md(&[-5])).unwrap().dim, 4);
        assert_eq!(e.sheaf(0, &md(&[-1])).unwrap().dim, 0);
        let rb = ring(&[("x0", &[1, 0]), ("x1", &[1, 0]), ("y0", &[0, 1]), ("y1", &[0, 1])]);
        let eb = CohomologyEngine::new(&free(&rb), 1);
        assert_eq!(eb.sheaf(1, &md(&[-2, 0])).unwrap().dim, 1);
        assert_eq!(eb.sheaf(2, &md(&[-2, -2])).unwrap().dim, 1);
    }

    #[test]
    fn table_and_window() {
        let r = ring(&[("x0", &[1]), ("x1", &[1])]);
        let e = CohomologyEngine::new(&free(&r), 1);
        let w = Window { lo: Multidegree(vec![-3]), hi: Multidegree(vec![3]), wt: None };
        let t = cohomology_table(&e, TableKind::Sheaf, 0..=1, &w).unwrap();
        for n in -3i64..=3 {
            let h0 = if n >= 0 { n as usize + 1 } else { 0 };
            let h1 = if n <= -2 { (-n - 1) as usize } else { 0 };
            assert_eq!(t.entries[&(0, md(&[n]))].dim, h0);
            assert_eq!(t.entries[&(1, md(&[n]))].dim, h1);
        }
        let bad = Window { lo: Multidegree(vec![1]), hi: Multidegree(vec![0]), wt: None };
        assert_eq!(cohomology_table(&e, TableKind::Sheaf, 0..=1, &bad), Err(Error::EmptyWindow));
        let zero = Presentation::cyclic(Arc::clone(&r), &[r.one()]).unwrap();
        let ez = CohomologyEngine::new(&zero, 1);
        let t = cohomology_table(&ez, TableKind::Sheaf, 0..=1, &w).unwrap();
        assert!(t.entries.values().all(|c| c.dim == 0));
    }

    #[test]
    fn negative_index_rejected() {
        let r = ring(&[("x0", &[1]), ("x1", &[1])]);
        let e = CohomologyEngine::new(&free(&r), 1);
        assert_eq!(e.sheaf(-1, &md(&[0])), Err(Error::NegativeIndex(-1)));
    }
}
