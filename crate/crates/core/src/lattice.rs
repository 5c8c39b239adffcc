//! Points of ℤ^d, coordinate index sets, the product orders and the
//! Δ-operators.
//!
//! Sets handled by this crate are finite representations of possibly
//! infinite subsets of ℕ^d.  A [`Frame`] fixes a cap `T`; a stored
//! coordinate equal to `T_i` stands for every value `≥ T_i` (a *ray*).
//! All order predicates below are ray aware: they answer whether some
//! choice of representatives satisfies the relation.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Index, IndexMut, Sub};

use serde::{Deserialize, Serialize};

use crate::error::LatticeError;

/// A point of ℤ^d.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(pub Vec<i64>);

pub type PointSet = BTreeSet<Point>;

impl Point {
    pub fn new(coords: impl Into<Vec<i64>>) -> Self {
        Point(coords.into())
    }

    pub fn zero(dim: usize) -> Self {
        Point(vec![0; dim])
    }

    pub fn splat(dim: usize, v: i64) -> Self {
        Point(vec![v; dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut p = Point::zero(dim);
        p.0[i] = 1;
        p
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, i64> {
        self.0.iter()
    }

    /// Coordinatewise minimum.  Panics on dimension mismatch.
    pub fn wedge(&self, other: &Point) -> Point {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        Point(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    /// Coordinatewise maximum.
    pub fn join(&self, other: &Point) -> Point {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        Point(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Product order `self ≤ other`.
    pub fn leq(&self, other: &Point) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self ≤ other` and `self ≠ other`.
    pub fn lneq(&self, other: &Point) -> bool {
        self.leq(other) && self != other
    }

    /// `self ≪ other`: strictly smaller in every coordinate.
    pub fn ll(&self, other: &Point) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a < b)
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|&a| a >= 0)
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&a| a > 0)
    }

    pub fn scale(&self, k: i64) -> Point {
        Point(self.0.iter().map(|a| a * k).collect())
    }

    /// Coordinatewise `min(self_i, cap_i)`.
    pub fn capped(&self, cap: &Point) -> Point {
        self.wedge(cap)
    }

    /// Restriction to the listed coordinates.
    pub fn project(&self, axes: &[usize]) -> Point {
        Point(axes.iter().map(|&i| self.0[i]).collect())
    }

    pub fn concat(&self, other: &Point) -> Point {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Point(v)
    }
}

impl Index<usize> for Point {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl IndexMut<usize> for Point {
    fn index_mut(&mut self, i: usize) -> &mut i64 {
        &mut self.0[i]
    }
}

impl Add for &Point {
    type Output = Point;
    fn add(self, rhs: &Point) -> Point {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
        Point(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Point {
    type Output = Point;
    fn sub(self, rhs: &Point) -> Point {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
        Point(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        &self + &rhs
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        &self - &rhs
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, a) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<i64>> for Point {
    fn from(v: Vec<i64>) -> Self {
        Point(v)
    }
}

impl<const N: usize> From<[i64; N]> for Point {
    fn from(v: [i64; N]) -> Self {
        Point(v.to_vec())
    }
}

fn check_dims(a: &Point, b: &Point) -> Result<(), LatticeError> {
    if a.dim() != b.dim() {
        return Err(LatticeError::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    Ok(())
}

pub fn meet(a: &Point, b: &Point) -> Result<Point, LatticeError> {
    check_dims(a, b)?;
    Ok(a.wedge(b))
}

pub fn leq(a: &Point, b: &Point) -> Result<bool, LatticeError> {
    check_dims(a, b)?;
    Ok(a.leq(b))
}

pub fn dominates(a: &Point, b: &Point) -> Result<bool, LatticeError> {
    check_dims(a, b)?;
    Ok(a.ll(b))
}

/// `a = b` or `a ≪ b`.
pub fn leqleq(a: &Point, b: &Point) -> Result<bool, LatticeError> {
    check_dims(a, b)?;
    Ok(a == b || a.ll(b))
}

/// A subset of `{0, …, d-1}` stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSet {
    bits: u32,
    dim: u8,
}

impl IndexSet {
    pub fn empty(dim: usize) -> Self {
        assert!(dim <= 31, "dimension too large");
        IndexSet { bits: 0, dim: dim as u8 }
    }

    pub fn full(dim: usize) -> Self {
        assert!(dim <= 31, "dimension too large");
        IndexSet { bits: (1u32 << dim) - 1, dim: dim as u8 }
    }

    pub fn from_bits(dim: usize, bits: u32) -> Self {
        let full = Self::full(dim);
        IndexSet { bits: bits & full.bits, dim: dim as u8 }
    }

    pub fn from_indices(dim: usize, idx: &[usize]) -> Self {
        let mut s = Self::empty(dim);
        for &i in idx {
            s = s.with(i);
        }
        s
    }

    pub fn singleton(dim: usize, i: usize) -> Self {
        Self::empty(dim).with(i)
    }

    pub fn with(self, i: usize) -> Self {
        assert!(i < self.dim as usize, "index out of range");
        IndexSet { bits: self.bits | (1 << i), ..self }
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn dim(self) -> usize {
        self.dim as usize
    }

    pub fn contains(self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }

    pub fn complement(self) -> Self {
        IndexSet { bits: !self.bits & Self::full(self.dim()).bits, ..self }
    }

    pub fn union(self, o: Self) -> Self {
        IndexSet { bits: self.bits | o.bits, ..self }
    }

    pub fn intersection(self, o: Self) -> Self {
        IndexSet { bits: self.bits & o.bits, ..self }
    }

    pub fn is_subset(self, o: Self) -> bool {
        self.bits & !o.bits == 0
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn is_full(self) -> bool {
        self == Self::full(self.dim())
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..self.dim()).filter(move |&i| self.contains(i))
    }

    /// All subsets of `{0, …, d-1}`, including ∅ and the full set.
    pub fn all(dim: usize) -> impl Iterator<Item = IndexSet> {
        (0..(1u32 << dim)).map(move |b| IndexSet::from_bits(dim, b))
    }

    /// Nonempty proper subsets.
    pub fn proper_nonempty(dim: usize) -> impl Iterator<Item = IndexSet> {
        Self::all(dim).filter(|s| !s.is_empty() && !s.is_full())
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.indices().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

/// Which Δ-operator to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeltaVariant {
    /// `Δ_F(α)`: equal on `F`, strictly larger off `F`.
    Strict,
    /// `Δ̃_F(α)`: equal on `F`, larger or equal off `F`, minus `α`.
    Tilde,
    /// `Δ(α) = ⋃_i Δ_{{i}}(α)`; the index set argument is ignored.
    Union,
}

/// Capping frame.  A coordinate equal to `cap_i` denotes a ray.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Frame {
    cap: Point,
}

impl Frame {
    pub fn new(cap: Point) -> Self {
        Frame { cap }
    }

    /// A frame without rays.
    pub fn unbounded(dim: usize) -> Self {
        Frame { cap: Point::splat(dim, i64::MAX) }
    }

    pub fn cap(&self) -> &Point {
        &self.cap
    }

    pub fn dim(&self) -> usize {
        self.cap.dim()
    }

    pub fn is_ray(&self, p: &Point, i: usize) -> bool {
        p[i] >= self.cap[i]
    }

    pub fn has_ray(&self, p: &Point) -> bool {
        (0..p.dim()).any(|i| self.is_ray(p, i))
    }

    /// Representative of an arbitrary nonnegative point inside the frame.
    pub fn clamp(&self, p: &Point) -> Point {
        p.capped(&self.cap)
    }

    /// Can the value at `b_i` equal the value at `a_i`?
    pub fn can_eq(&self, b: &Point, a: &Point, i: usize) -> bool {
        let (rb, ra) = (self.is_ray(b, i), self.is_ray(a, i));
        match (rb, ra) {
            (true, true) => true,
            (false, false) => b[i] == a[i],
            _ => false,
        }
    }

    /// Can `b_i > a_i` for some representatives?
    pub fn can_gt(&self, b: &Point, a: &Point, i: usize) -> bool {
        if self.is_ray(b, i) {
            return true;
        }
        if self.is_ray(a, i) {
            return false;
        }
        b[i] > a[i]
    }

    pub fn can_ge(&self, b: &Point, a: &Point, i: usize) -> bool {
        self.can_gt(b, a, i) || self.can_eq(b, a, i)
    }

    /// Can `a ≤ b` (product order)?
    pub fn can_le(&self, a: &Point, b: &Point) -> bool {
        (0..a.dim()).all(|i| self.can_ge(b, a, i))
    }

    /// Can `a < b`, with `a ≠ b` as stored points?
    pub fn can_lt(&self, a: &Point, b: &Point) -> bool {
        a != b && self.can_le(a, b)
    }

    /// Can `a ≪ b`?
    pub fn can_ll(&self, a: &Point, b: &Point) -> bool {
        (0..a.dim()).all(|i| self.can_gt(b, a, i))
    }

    /// `b ∈ Δ_F(a)` for some representatives.
    pub fn in_delta(&self, b: &Point, a: &Point, f: IndexSet) -> bool {
        (0..a.dim()).all(|i| {
            if f.contains(i) {
                self.can_eq(b, a, i)
            } else {
                self.can_gt(b, a, i)
            }
        })
    }

    /// `b ∈ Δ̃_F(a)`, i.e. equal on `F`, `≥` off `F`, and `b ≠ a`.
    pub fn in_delta_tilde(&self, b: &Point, a: &Point, f: IndexSet) -> bool {
        b != a
            && (0..a.dim()).all(|i| {
                if f.contains(i) {
                    self.can_eq(b, a, i)
                } else {
                    self.can_ge(b, a, i)
                }
            })
    }

    pub fn in_delta_union(&self, b: &Point, a: &Point) -> bool {
        (0..a.dim()).any(|i| self.in_delta(b, a, IndexSet::singleton(a.dim(), i)))
    }

    pub fn in_delta_variant(&self, b: &Point, a: &Point, f: IndexSet, v: DeltaVariant) -> bool {
        match v {
            DeltaVariant::Strict => self.in_delta(b, a, f),
            DeltaVariant::Tilde => self.in_delta_tilde(b, a, f),
            DeltaVariant::Union => self.in_delta_union(b, a),
        }
    }

    /// Every point of the box `[0, cap]`.
    pub fn points(&self) -> Vec<Point> {
        box_points(&Point::zero(self.dim()), &self.cap)
    }
}

/// `Δ^X_F(a)` for a finite representation `X` read in `frame`.
pub fn delta(
    set: &PointSet,
    f: IndexSet,
    a: &Point,
    variant: DeltaVariant,
    frame: &Frame,
) -> Result<PointSet, LatticeError> {
    if f.dim() != a.dim() || frame.dim() != a.dim() {
        return Err(LatticeError::DimensionMismatch { left: f.dim(), right: a.dim() });
    }
    Ok(set
        .iter()
        .filter(|b| frame.in_delta_variant(b, a, f, variant))
        .cloned()
        .collect())
}

/// Are `a < b` consecutive in `set`, i.e. no element strictly between?
pub fn consecutive_in(set: &PointSet, a: &Point, b: &Point) -> Result<bool, LatticeError> {
    check_dims(a, b)?;
    if !a.lneq(b) {
        return Ok(false);
    }
    Ok(!set.iter().any(|x| a.lneq(x) && x.lneq(b)))
}

/// All integer points of the box `[lo, hi]` in lexicographic order.
pub fn box_points(lo: &Point, hi: &Point) -> Vec<Point> {
    let d = lo.dim();
    if (0..d).any(|i| lo[i] > hi[i]) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = lo.clone();
    loop {
        out.push(cur.clone());
        let mut k = d;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if cur[k] < hi[k] {
                cur[k] += 1;
                for j in k + 1..d {
                    cur[j] = lo[j];
                }
                break;
            }
        }
    }
}

/// Minimal elements of a finite set under the product order.
pub fn minimal_elements(set: &PointSet) -> PointSet {
    set.iter()
        .filter(|a| !set.iter().any(|b| b.lneq(a)))
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p<const N: usize>(v: [i64; N]) -> Point {
        Point::from(v)
    }

    #[test]
    fn orders() {
        assert!(p([1, 2]).leq(&p([1, 3])));
        assert!(!p([1, 2]).ll(&p([1, 3])));
        assert!(p([0, 2]).ll(&p([1, 3])));
        assert!(leqleq(&p([1, 1]), &p([1, 1])).unwrap());
        assert!(!leqleq(&p([1, 1]), &p([1, 2])).unwrap());
        assert_eq!(meet(&p([3, 1]), &p([2, 5])).unwrap(), p([2, 1]));
        assert!(meet(&p([1]), &p([1, 2])).is_err());
    }

    #[test]
    fn index_sets() {
        let f = IndexSet::from_indices(3, &[0, 2]);
        assert_eq!(f.complement(), IndexSet::singleton(3, 1));
        assert_eq!(IndexSet::proper_nonempty(3).count(), 6);
        assert_eq!(format!("{f:?}"), "{1,3}");
    }

    #[test]
    fn ray_semantics() {
        let fr = Frame::new(p([5, 5]));
        // ray vs ray: both equal and greater are satisfiable
        assert!(fr.can_eq(&p([5, 0]), &p([5, 0]), 0));
        assert!(fr.can_gt(&p([5, 0]), &p([5, 0]), 0));
        // finite never exceeds a ray
        assert!(!fr.can_gt(&p([4, 0]), &p([5, 0]), 0));
        assert!(fr.can_gt(&p([5, 0]), &p([4, 0]), 0));
        assert!(fr.can_ll(&p([4, 4]), &p([5, 5])));
        assert!(!fr.can_ll(&p([5, 4]), &p([4, 5])));
    }

    #[test]
    fn delta_ops() {
        let set: PointSet = [p([1, 3]), p([1, 1]), p([2, 1]), p([3, 3]), p([1, 2])]
            .into_iter()
            .collect();
        let fr = Frame::unbounded(2);
        let a = p([1, 1]);
        let d1 = delta(&set, IndexSet::singleton(2, 0), &a, DeltaVariant::Strict, &fr).unwrap();
        assert_eq!(d1, [p([1, 2]), p([1, 3])].into_iter().collect());
        let du = delta(&set, IndexSet::empty(2), &a, DeltaVariant::Union, &fr).unwrap();
        assert_eq!(du.len(), 3);
        let dt = delta(&set, IndexSet::empty(2), &a, DeltaVariant::Tilde, &fr).unwrap();
        assert_eq!(dt.len(), 4);
        assert!(consecutive_in(&set, &p([1, 1]), &p([1, 2])).unwrap());
        assert!(!consecutive_in(&set, &p([1, 1]), &p([1, 3])).unwrap());
    }

    #[test]
    fn boxes() {
        assert_eq!(box_points(&p([0, 0]), &p([1, 2])).len(), 6);
        assert!(box_points(&p([1, 0]), &p([0, 2])).is_empty());
    }
}
