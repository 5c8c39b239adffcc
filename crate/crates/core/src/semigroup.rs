//! Good semigroups of ℕ^d stored by their small elements, and numerical
//! semigroups.
//!
//! A point `a ≥ 0` belongs to `S` iff `min(a, c) ∈ Small(S)`.

use std::collections::BTreeSet;

use crate::error::SemigroupError;
use crate::lattice::{box_points, Frame, IndexSet, Point, PointSet};

/// Anything whose membership is decided by capping at a fixed point.
pub trait Membership {
    fn dim(&self) -> usize;
    /// Coordinates at or beyond the cap behave like the cap.
    fn cap(&self) -> &Point;
    /// Members inside `[0, cap]`.
    fn small(&self) -> &PointSet;

    fn contains(&self, a: &Point) -> bool {
        a.dim() == self.dim() && a.is_nonneg() && self.small().contains(&a.capped(self.cap()))
    }

    /// Is there a member in the box `lo ≤ x ≤ hi` (`None` = unbounded)?
    fn exists_in_box(&self, lo: &[i64], hi: &[Option<i64>]) -> bool {
        self.small().iter().any(|b| preimage_meets(b, self.cap(), lo, hi).is_some())
    }

    /// `Δ_F(x) ∩ self ≠ ∅` for an arbitrary point `x ∈ ℤ^d`.
    fn delta_nonempty(&self, x: &Point, f: IndexSet) -> bool {
        let (lo, hi) = delta_box(x, f, 1);
        self.exists_in_box(&lo, &hi)
    }

    /// `Δ(x) ∩ self ≠ ∅`.
    fn delta_union_nonempty(&self, x: &Point) -> bool {
        (0..self.dim()).any(|i| self.delta_nonempty(x, IndexSet::singleton(self.dim(), i)))
    }

    /// `Δ̃_F(x) ∩ self ≠ ∅`.
    fn delta_tilde_nonempty(&self, x: &Point, f: IndexSet) -> bool {
        let (lo, hi) = delta_box(x, f, 0);
        self.small().iter().any(|b| match preimage_meets(b, self.cap(), &lo, &hi) {
            None => false,
            Some((l, h)) => !(l == h.iter().map(|v| v.unwrap_or(i64::MAX)).collect::<Vec<_>>()
                && l.as_slice() == x.coords()),
        })
    }

    /// Members of `Δ_F(x)` among the points of `frame` (ray aware).
    fn delta_in_frame(&self, frame: &Frame, x: &Point, f: IndexSet) -> PointSet {
        frame
            .points()
            .into_iter()
            .filter(|p| frame.in_delta(p, x, f) && self.contains(p))
            .collect()
    }

    /// Members of `Δ(x)` among the points of `frame`.
    fn delta_union_in_frame(&self, frame: &Frame, x: &Point) -> PointSet {
        frame
            .points()
            .into_iter()
            .filter(|p| frame.in_delta_union(p, x) && self.contains(p))
            .collect()
    }
}

fn delta_box(x: &Point, f: IndexSet, off: i64) -> (Vec<i64>, Vec<Option<i64>>) {
    let d = x.dim();
    let mut lo = vec![0; d];
    let mut hi = vec![None; d];
    for i in 0..d {
        if f.contains(i) {
            lo[i] = x[i];
            hi[i] = Some(x[i]);
        } else {
            lo[i] = x[i] + off;
        }
    }
    (lo, hi)
}

/// Intersection of the preimage of the capped point `b` with `[lo, hi]`.
fn preimage_meets(
    b: &Point,
    cap: &Point,
    lo: &[i64],
    hi: &[Option<i64>],
) -> Option<(Vec<i64>, Vec<Option<i64>>)> {
    let d = b.dim();
    let mut l = vec![0; d];
    let mut h = vec![None; d];
    for i in 0..d {
        let lo_i = lo[i].max(0);
        if b[i] < cap[i] {
            if b[i] < lo_i || hi[i].is_some_and(|v| b[i] > v) {
                return None;
            }
            l[i] = b[i];
            h[i] = Some(b[i]);
        } else {
            let start = lo_i.max(cap[i]);
            if hi[i].is_some_and(|v| v < start) {
                return None;
            }
            l[i] = start;
            h[i] = hi[i];
        }
    }
    Some((l, h))
}

/// Plain membership data: a cap and the members below it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CappedMembership {
    pub cap: Point,
    pub small: PointSet,
}

impl Membership for CappedMembership {
    fn dim(&self) -> usize {
        self.cap.dim()
    }
    fn cap(&self) -> &Point {
        &self.cap
    }
    fn small(&self) -> &PointSet {
        &self.small
    }
}

/// A good semigroup `S ⊆ ℕ^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodSemigroup {
    conductor: Point,
    small: PointSet,
    multiplicity: Point,
    local: bool,
}

impl Membership for GoodSemigroup {
    fn dim(&self) -> usize {
        self.conductor.dim()
    }
    fn cap(&self) -> &Point {
        &self.conductor
    }
    fn small(&self) -> &PointSet {
        &self.small
    }
}

/// One axiom failure found by [`GoodSemigroup::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    MissingZero,
    Meet { a: Point, b: Point, meet: Point },
    Sum { a: Point, b: Point, sum: Point },
    Exchange { a: Point, b: Point, axis: usize },
    MultiplicityNotMember(Point),
    NonMinimalConductor { axis: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::MissingZero => write!(f, "0 is not an element"),
            Violation::Meet { a, b, meet } => write!(f, "meet {a} ∧ {b} = {meet} is not an element"),
            Violation::Sum { a, b, sum } => write!(f, "sum {a} + {b} = {sum} is not an element"),
            Violation::Exchange { a, b, axis } => write!(
                f,
                "no exchange element for {a}, {b} sharing coordinate {}",
                axis + 1
            ),
            Violation::MultiplicityNotMember(e) => write!(f, "minimal positive point {e} is not an element"),
            Violation::NonMinimalConductor { axis } => {
                write!(f, "conductor can be lowered in coordinate {}", axis + 1)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub box_hi: Point,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_good(&self) -> bool {
        self.violations.is_empty()
    }
}

impl GoodSemigroup {
    /// Builds `S` from its conductor and small elements.  Checks shape only;
    /// call [`validate`](Self::validate) for the axioms.
    pub fn from_small_elements(
        conductor: Point,
        small: impl IntoIterator<Item = Point>,
    ) -> Result<Self, SemigroupError> {
        let d = conductor.dim();
        if d == 0 || d > 31 {
            return Err(SemigroupError::BadDimension(d));
        }
        if !conductor.is_nonneg() {
            return Err(SemigroupError::NegativeConductor(conductor));
        }
        let mut set = PointSet::new();
        for p in small {
            if p.dim() != d {
                return Err(SemigroupError::PointDimension { got: p.dim(), expected: d, point: p });
            }
            if !p.is_nonneg() || !p.leq(&conductor) {
                return Err(SemigroupError::OutOfBox(p));
            }
            set.insert(p);
        }
        if !set.contains(&Point::zero(d)) {
            return Err(SemigroupError::MissingZero);
        }
        if !set.contains(&conductor) {
            return Err(SemigroupError::MissingConductor(conductor));
        }
        let multiplicity = min_positive(&set, &conductor).ok_or(SemigroupError::NoMultiplicity)?;
        let local = compute_local(&set, &conductor);
        Ok(GoodSemigroup { conductor, small: set, multiplicity, local })
    }

    /// Builds `S` from a membership predicate that is constant beyond `cap`,
    /// lowering the conductor as far as possible.
    pub fn from_membership(cap: &Point, member: impl Fn(&Point) -> bool) -> Result<Self, SemigroupError> {
        let d = cap.dim();
        let box_ok = |c: &Point| box_points(c, cap).iter().all(|p| member(p));
        let mut c = cap.clone();
        loop {
            let mut moved = false;
            for i in 0..d {
                if c[i] > 0 {
                    let mut t = c.clone();
                    t[i] -= 1;
                    if box_ok(&t) {
                        c = t;
                        moved = true;
                    }
                }
            }
            if !moved {
                break;
            }
        }
        let small = box_points(&Point::zero(d), &c).into_iter().filter(|p| member(p));
        Self::from_small_elements(c, small)
    }

    pub fn conductor(&self) -> &Point {
        &self.conductor
    }

    pub fn small_elements(&self) -> &PointSet {
        &self.small
    }

    /// `γ = c − 1`.
    pub fn gamma(&self) -> Point {
        &self.conductor - &Point::splat(self.dim(), 1)
    }

    pub fn multiplicity(&self) -> &Point {
        &self.multiplicity
    }

    pub fn is_local(&self) -> bool {
        self.local
    }

    /// Membership with a dimension check.
    pub fn try_contains(&self, a: &Point) -> Result<bool, SemigroupError> {
        if a.dim() != self.dim() {
            return Err(SemigroupError::PointDimension { point: a.clone(), got: a.dim(), expected: self.dim() });
        }
        Ok(self.contains(a))
    }

    /// Elements of `S` in the box `[0, hi]`.
    pub fn elements_in_box(&self, hi: &Point) -> Vec<Point> {
        box_points(&Point::zero(self.dim()), hi)
            .into_iter()
            .filter(|p| self.contains(p))
            .collect()
    }

    /// Default validation box `[0, c + e + margin]`.
    pub fn validation_box(&self, margin: i64) -> Point {
        &(&self.conductor + &self.multiplicity) + &Point::splat(self.dim(), margin)
    }

    /// Checks the axioms on `[0, c + e + margin]` and reports every failure.
    pub fn validate(&self, margin: i64) -> ValidationReport {
        let hi = self.validation_box(margin);
        let d = self.dim();
        let mut violations = Vec::new();
        if !self.contains(&Point::zero(d)) {
            violations.push(Violation::MissingZero);
        }
        if !self.contains(&self.multiplicity) {
            violations.push(Violation::MultiplicityNotMember(self.multiplicity.clone()));
        }
        for i in 0..d {
            if self.conductor[i] > 0 && self.contains(&(&self.conductor - &Point::unit(d, i))) {
                violations.push(Violation::NonMinimalConductor { axis: i });
            }
        }
        let elems = self.elements_in_box(&hi);
        for (k, a) in elems.iter().enumerate() {
            for b in &elems[k..] {
                let m = a.wedge(b);
                if !self.contains(&m) {
                    violations.push(Violation::Meet { a: a.clone(), b: b.clone(), meet: m });
                }
                let s = a + b;
                if !self.contains(&s) {
                    violations.push(Violation::Sum { a: a.clone(), b: b.clone(), sum: s });
                }
                if a == b {
                    continue;
                }
                for i in 0..d {
                    if a[i] != b[i] {
                        continue;
                    }
                    let mut lo = vec![0; d];
                    let mut up = vec![None; d];
                    for j in 0..d {
                        if j == i {
                            lo[j] = a[j] + 1;
                        } else if a[j] != b[j] {
                            lo[j] = a[j].min(b[j]);
                            up[j] = Some(lo[j]);
                        } else {
                            lo[j] = a[j];
                        }
                    }
                    if !self.exists_in_box(&lo, &up) {
                        violations.push(Violation::Exchange { a: a.clone(), b: b.clone(), axis: i });
                    }
                }
            }
        }
        ValidationReport { box_hi: hi, violations }
    }

    /// `Δ^S(a) = ∅`.
    pub fn is_absolute(&self, a: &Point) -> Result<bool, SemigroupError> {
        if !self.try_contains(a)? {
            return Err(SemigroupError::NotMember(a.clone()));
        }
        Ok(!self.delta_union_nonempty(a))
    }

    pub fn absolute_elements(&self, hi: &Point) -> PointSet {
        self.elements_in_box(hi)
            .into_iter()
            .filter(|a| !self.delta_union_nonempty(a))
            .collect()
    }

    /// Pseudo-Frobenius elements, read in the frame capped at `c`
    /// (a coordinate equal to `c_i` stands for every value `≥ c_i`).
    pub fn pseudo_frobenius(&self) -> PointSet {
        let d = self.dim();
        let mut steps: Vec<Point> = self.small.iter().filter(|b| **b != Point::zero(d)).cloned().collect();
        for i in 0..d {
            for k in 1..=2 {
                steps.push(&self.conductor + &Point::unit(d, i).scale(k));
            }
            if self.conductor[i] == 0 {
                steps.push(Point::unit(d, i));
            }
        }
        box_points(&Point::zero(d), &self.conductor)
            .into_iter()
            .filter(|a| !self.contains(a) && steps.iter().all(|b| self.contains(&(a + b))))
            .collect()
    }

    /// Pseudo-Frobenius elements inside `[0, hi]` as plain points.
    pub fn pseudo_frobenius_in_box(&self, hi: &Point) -> PointSet {
        let pf = self.pseudo_frobenius();
        box_points(&Point::zero(self.dim()), hi)
            .into_iter()
            .filter(|a| pf.contains(&a.capped(&self.conductor)))
            .collect()
    }

    /// `α ∈ S ⟺ Δ^S(γ − α) = ∅` on the box `[−margin, c + margin]`.
    pub fn is_symmetric_on(&self, margin: i64) -> bool {
        let d = self.dim();
        let gamma = self.gamma();
        let lo = Point::splat(d, -margin);
        let hi = &self.conductor + &Point::splat(d, margin);
        box_points(&lo, &hi)
            .iter()
            .all(|a| self.contains(a) == !self.delta_union_nonempty(&(&gamma - a)))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_symmetric_on(1)
    }

    /// `Δ(γ)` over ℕ^d, read in the frame capped at `c`.
    pub fn delta_gamma(&self) -> PointSet {
        let frame = Frame::new(self.conductor.clone());
        let gamma = self.gamma();
        frame
            .points()
            .into_iter()
            .filter(|p| frame.in_delta_union(p, &gamma))
            .collect()
    }

    /// `PF(S) = Δ(γ) ∪ {α ∈ ℕ^d \ S : Δ^S(γ − α) = ∅}`.
    pub fn is_almost_symmetric(&self) -> bool {
        let gamma = self.gamma();
        let mut rhs = self.delta_gamma();
        for a in box_points(&Point::zero(self.dim()), &self.conductor) {
            if !self.contains(&a) && !self.delta_union_nonempty(&(&gamma - &a)) {
                rhs.insert(a);
            }
        }
        self.pseudo_frobenius() == rhs
    }

    /// `S ∪ PF(S)`, the membership used for the dual of `PF(S) ∪ {0}`.
    pub fn with_pseudo_frobenius(&self) -> CappedMembership {
        let mut small = self.small.clone();
        small.extend(self.pseudo_frobenius());
        CappedMembership { cap: self.conductor.clone(), small }
    }

    pub fn direct_product(s1: &GoodSemigroup, s2: &GoodSemigroup) -> Result<GoodSemigroup, SemigroupError> {
        let c = s1.conductor.concat(&s2.conductor);
        let small = s1
            .small
            .iter()
            .flat_map(|a| s2.small.iter().map(move |b| a.concat(b)))
            .collect::<Vec<_>>();
        Self::from_small_elements(c, small)
    }

    /// Image under the projection onto `axes`.
    pub fn projection(&self, axes: IndexSet) -> Result<GoodSemigroup, SemigroupError> {
        if axes.is_empty() || axes.is_full() || axes.dim() != self.dim() {
            return Err(SemigroupError::BadAxes);
        }
        let idx: Vec<usize> = axes.indices().collect();
        let cap = self.conductor.project(&idx);
        let image: BTreeSet<Point> = self.small.iter().map(|b| b.project(&idx)).collect();
        Self::from_membership(&cap, |q| q.is_nonneg() && image.contains(&q.capped(&cap)))
    }

    /// The numerical semigroup with the same elements when `d = 1`.
    pub fn to_numerical(&self) -> Option<NumericalSemigroup> {
        if self.dim() != 1 {
            return None;
        }
        let c = self.conductor[0];
        let elems: Vec<i64> = self.small.iter().map(|p| p[0]).collect();
        NumericalSemigroup::from_elements(&elems, c)
    }
}

fn min_positive(small: &PointSet, c: &Point) -> Option<Point> {
    let d = c.dim();
    let mut best: Option<Point> = None;
    'outer: for b in small {
        let mut cand = b.clone();
        for i in 0..d {
            if b[i] == 0 {
                if c[i] == 0 {
                    cand[i] = 1;
                } else {
                    continue 'outer;
                }
            }
        }
        best = Some(match best {
            None => cand,
            Some(x) => x.wedge(&cand),
        });
    }
    best
}

fn compute_local(small: &PointSet, c: &Point) -> bool {
    let d = c.dim();
    for b in small {
        let can_zero = (0..d).any(|i| b[i] == 0);
        let can_nonzero = (0..d).any(|i| b[i] > 0 || b[i] == c[i]);
        if can_zero && can_nonzero {
            return false;
        }
    }
    true
}

/// A numerical semigroup `⟨g_1, …, g_k⟩ ⊆ ℕ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    conductor: i64,
    member: Vec<bool>,
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl NumericalSemigroup {
    pub fn new(gens: &[i64]) -> Result<Self, SemigroupError> {
        if gens.is_empty() || gens.iter().any(|&g| g <= 0) || gens.iter().fold(0, |a, &g| gcd(a, g)) != 1 {
            return Err(SemigroupError::BadGenerators);
        }
        let m = *gens.iter().min().unwrap();
        // a run of m consecutive elements means everything beyond is in
        let mut member = vec![true];
        let mut run = 0;
        let mut n = 0usize;
        while run < m {
            n += 1;
            let ok = gens.iter().any(|&g| n as i64 >= g && member[n - g as usize]);
            member.push(ok);
            run = if ok { run + 1 } else { 0 };
        }
        let conductor = (0..member.len()).rev().find(|&k| !member[k]).map_or(0, |k| k as i64 + 1);
        member.truncate(conductor as usize + 1);
        let mut s = NumericalSemigroup { generators: Vec::new(), conductor, member };
        s.generators = s.minimal_generators();
        Ok(s)
    }

    /// From the elements in `[0, c]`.
    pub fn from_elements(elems: &[i64], c: i64) -> Option<Self> {
        let mut member = vec![false; c as usize + 1];
        for &e in elems {
            if e < 0 || e > c {
                return None;
            }
            member[e as usize] = true;
        }
        if !member[0] || !member[c as usize] {
            return None;
        }
        let mut s = NumericalSemigroup { generators: Vec::new(), conductor: c, member };
        s.generators = s.minimal_generators();
        Some(s)
    }

    fn minimal_generators(&self) -> Vec<i64> {
        let limit = self.conductor + self.multiplicity();
        (1..=limit)
            .filter(|&n| {
                self.contains(n) && !(1..n).any(|a| self.contains(a) && self.contains(n - a))
            })
            .collect()
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn conductor(&self) -> i64 {
        self.conductor
    }

    pub fn frobenius(&self) -> i64 {
        self.conductor - 1
    }

    pub fn contains(&self, n: i64) -> bool {
        n >= 0 && (n >= self.conductor || self.member[n as usize])
    }

    pub fn multiplicity(&self) -> i64 {
        (1..=self.conductor.max(1)).find(|&n| self.contains(n)).unwrap()
    }

    pub fn elements_up_to(&self, n: i64) -> Vec<i64> {
        (0..=n).filter(|&k| self.contains(k)).collect()
    }

    /// `Ap(S, w) = {s ∈ S : s − w ∉ S}` in ascending order.
    pub fn apery(&self, w: i64) -> Vec<i64> {
        assert!(w > 0 && self.contains(w), "w must be a positive element");
        let mut out = Vec::new();
        let mut n = 0;
        while (out.len() as i64) < w {
            if self.contains(n) && !self.contains(n - w) {
                out.push(n);
            }
            n += 1;
        }
        out
    }

    pub fn as_good(&self) -> GoodSemigroup {
        let small = self.elements_up_to(self.conductor).into_iter().map(|n| Point::new(vec![n]));
        GoodSemigroup::from_small_elements(Point::new(vec![self.conductor]), small)
            .expect("numerical semigroups are good")
    }
}
