//! Multidegrees in `Z^r` with the coordinatewise partial order, the full
//! (multidegree, weight) degree used by graded pieces, and grading maps.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Multidegree(pub Vec<i64>);

impl Multidegree {
    pub fn zero(r: usize) -> Self {
        Multidegree(vec![0; r])
    }

    pub fn ones(r: usize) -> Self {
        Multidegree(vec![1; r])
    }

    pub fn unit(r: usize, j: usize) -> Self {
        let mut v = vec![0; r];
        v[j] = 1;
        Multidegree(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn scale(&self, k: i64) -> Self {
        Multidegree(self.0.iter().map(|c| c * k).collect())
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.0.len() != other.0.len() {
            return Err(Error::LengthMismatch { expected: self.0.len(), got: other.0.len() });
        }
        Ok(())
    }

    /// `self >= other` coordinatewise.
    pub fn geq(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    /// `self > other` in every coordinate.
    pub fn gt(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a > b)
    }

    pub fn meet(&self, other: &Self) -> Self {
        Multidegree(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn join(&self, other: &Self) -> Self {
        Multidegree(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Serialized as `(n1|n2|...)` in CSV output.
    pub fn to_csv(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        format!("({})", parts.join("|"))
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Add for &Multidegree {
    type Output = Multidegree;
    fn add(self, rhs: &Multidegree) -> Multidegree {
        Multidegree(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Multidegree {
    type Output = Multidegree;
    fn sub(self, rhs: &Multidegree) -> Multidegree {
        Multidegree(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Multidegree {
    type Output = Multidegree;
    fn neg(self) -> Multidegree {
        Multidegree(self.0.iter().map(|a| -a).collect())
    }
}

impl From<Vec<i64>> for Multidegree {
    fn from(v: Vec<i64>) -> Self {
        Multidegree(v)
    }
}

/// Outcome of comparing two multidegrees under the coordinatewise order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeRelation {
    pub geq: bool,
    pub gt: bool,
    pub leq: bool,
    pub lt: bool,
    pub incomparable: bool,
    pub min: Multidegree,
    pub max: Multidegree,
}

pub fn compare_degrees(n: &Multidegree, m: &Multidegree) -> Result<DegreeRelation> {
    n.check_len(m)?;
    let geq = n.geq(m);
    let leq = m.geq(n);
    Ok(DegreeRelation {
        geq,
        gt: n.gt(m),
        leq,
        lt: m.gt(n),
        incomparable: !geq && !leq,
        min: n.meet(m),
        max: n.join(m),
    })
}

/// Full degree of a homogeneous element: multidegree plus auxiliary weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Degree {
    pub md: Multidegree,
    pub wt: i64,
}

impl Degree {
    pub fn new(md: Multidegree, wt: i64) -> Self {
        Degree { md, wt }
    }

    pub fn zero(r: usize) -> Self {
        Degree { md: Multidegree::zero(r), wt: 0 }
    }

    pub fn scale(&self, k: i64) -> Self {
        Degree { md: self.md.scale(k), wt: self.wt * k }
    }
}

impl Add for &Degree {
    type Output = Degree;
    fn add(self, rhs: &Degree) -> Degree {
        Degree { md: &self.md + &rhs.md, wt: self.wt + rhs.wt }
    }
}

impl Sub for &Degree {
    type Output = Degree;
    fn sub(self, rhs: &Degree) -> Degree {
        Degree { md: &self.md - &rhs.md, wt: self.wt - rhs.wt }
    }
}

impl Neg for &Degree {
    type Output = Degree;
    fn neg(self) -> Degree {
        Degree { md: -&self.md, wt: -self.wt }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.md, self.wt)
    }
}

/// Selects a graded piece: a multidegree, optionally refined by a weight.
///
/// Without a weight the piece is finite only when no ambient variable has
/// multidegree zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DegSel {
    pub md: Multidegree,
    pub wt: Option<i64>,
}

impl DegSel {
    pub fn multi(md: Multidegree) -> Self {
        DegSel { md, wt: None }
    }

    pub fn full(d: Degree) -> Self {
        DegSel { md: d.md, wt: Some(d.wt) }
    }

    pub fn shifted(&self, d: &Degree) -> Self {
        DegSel { md: &self.md + &d.md, wt: self.wt.map(|w| w + d.wt) }
    }

    pub fn minus(&self, d: &Degree) -> Self {
        DegSel { md: &self.md - &d.md, wt: self.wt.map(|w| w - d.wt) }
    }

    pub fn negated(&self) -> Self {
        DegSel { md: -&self.md, wt: self.wt.map(|w| -w) }
    }

    pub fn to_csv(&self) -> String {
        match self.wt {
            None => self.md.to_csv(),
            Some(w) => format!("{}@{}", self.md.to_csv(), w),
        }
    }
}

impl fmt::Display for DegSel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.wt {
            None => write!(f, "{}", self.md),
            Some(w) => write!(f, "{}@{}", self.md, w),
        }
    }
}

/// Integer matrix representing a group homomorphism `Z^k -> Z^l`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradingMap {
    /// `rows.len() == l`, each row of length `k`.
    pub rows: Vec<Vec<i64>>,
}

impl GradingMap {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        if let Some(first) = rows.first() {
            for row in &rows {
                if row.len() != first.len() {
                    return Err(Error::LengthMismatch { expected: first.len(), got: row.len() });
                }
            }
        }
        Ok(GradingMap { rows })
    }

    pub fn identity(k: usize) -> Self {
        GradingMap { rows: (0..k).map(|i| Multidegree::unit(k, i).0).collect() }
    }

    /// `Z^k -> Z`, n ↦ n_1 + ... + n_k.
    pub fn total(k: usize) -> Self {
        GradingMap { rows: vec![vec![1; k]] }
    }

    /// Projection onto the given source coordinates.
    pub fn projection(k: usize, keep: &[usize]) -> Self {
        GradingMap { rows: keep.iter().map(|&i| Multidegree::unit(k, i).0).collect() }
    }

    pub fn source_rank(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    pub fn target_rank(&self) -> usize {
        self.rows.len()
    }

    pub fn apply(&self, n: &Multidegree) -> Result<Multidegree> {
        if n.rank() != self.source_rank() {
            return Err(Error::LengthMismatch { expected: self.source_rank(), got: n.rank() });
        }
        Ok(Multidegree(
            self.rows.iter().map(|row| row.iter().zip(&n.0).map(|(a, b)| a * b).sum()).collect(),
        ))
    }
}
