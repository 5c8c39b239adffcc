//! Good ideals `E ⊆ S` and the capped complement `A = S \ E`.

use crate::error::IdealError;
use crate::lattice::{box_points, Frame, Point, PointSet};
use crate::semigroup::{GoodSemigroup, Membership};

/// A finite representation of a subset of ℕ^d in a capped frame: a stored
/// coordinate equal to the cap stands for every value at or beyond it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CappedSet {
    pub frame: Frame,
    pub points: PointSet,
}

pub type CappedComplement = CappedSet;

impl CappedSet {
    pub fn new(frame: Frame, points: PointSet) -> Self {
        CappedSet { frame, points }
    }

    pub fn dim(&self) -> usize {
        self.frame.dim()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Membership of an arbitrary point.
    pub fn contains(&self, a: &Point) -> bool {
        a.is_nonneg() && self.points.contains(&self.frame.clamp(a))
    }

    /// The same set in a larger frame.
    pub fn reframe(&self, cap: &Point) -> CappedSet {
        let frame = Frame::new(cap.clone());
        let points = frame
            .points()
            .into_iter()
            .filter(|p| self.contains(&self.frame.clamp(p)))
            .collect();
        CappedSet { frame, points }
    }

    /// The same set in a smaller frame.  Only meaningful if membership is
    /// already constant beyond the smaller cap.
    pub fn restrict(&self, cap: &Point) -> CappedSet {
        let frame = Frame::new(cap.clone());
        let points = self.points.iter().map(|p| frame.clamp(p)).collect();
        CappedSet { frame, points }
    }

    /// Finite points of the set inside `[0, hi]`.
    pub fn expand(&self, hi: &Point) -> PointSet {
        box_points(&Point::zero(self.dim()), hi)
            .into_iter()
            .filter(|p| self.contains(p))
            .collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Point> {
        self.points.iter()
    }
}

/// A good ideal `E` of a good semigroup `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodIdeal {
    parent: GoodSemigroup,
    conductor: Point,
    small: PointSet,
}

impl Membership for GoodIdeal {
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

impl GoodIdeal {
    pub fn from_small_elements(
        parent: &GoodSemigroup,
        conductor: Point,
        small: impl IntoIterator<Item = Point>,
    ) -> Result<Self, IdealError> {
        let small: PointSet = small.into_iter().collect();
        if conductor.dim() != parent.dim() || !parent.conductor().leq(&conductor) {
            return Err(IdealError::NotGoodIdeal(format!("bad conductor {conductor}")));
        }
        if let Some(p) = small.iter().find(|p| !p.is_nonneg() || !p.leq(&conductor)) {
            return Err(IdealError::NotGoodIdeal(format!("{p} outside [0, c_E]")));
        }
        if !small.contains(&conductor) {
            return Err(IdealError::NotGoodIdeal("conductor is not an element".into()));
        }
        Ok(GoodIdeal { parent: parent.clone(), conductor, small })
    }

    /// `E = w + S`, conductor `c + w`.
    pub fn principal(s: &GoodSemigroup, w: &Point) -> Result<Self, IdealError> {
        if !s.try_contains(w)? {
            return Err(IdealError::NotInSemigroup(w.clone()));
        }
        let ce = s.conductor() + w;
        let small = box_points(&Point::zero(s.dim()), &ce)
            .into_iter()
            .filter(|p| s.contains(&(p - w)));
        Self::from_small_elements(s, ce, small)
    }

    /// `E_1 × E_2` inside `S_1 × S_2`.
    pub fn product(e1: &GoodIdeal, e2: &GoodIdeal) -> Result<Self, IdealError> {
        let parent = GoodSemigroup::direct_product(&e1.parent, &e2.parent)?;
        let ce = e1.conductor.concat(&e2.conductor);
        let small: Vec<Point> = e1
            .small
            .iter()
            .flat_map(|a| e2.small.iter().map(move |b| a.concat(b)))
            .collect();
        Self::from_small_elements(&parent, ce, small)
    }

    pub fn parent(&self) -> &GoodSemigroup {
        &self.parent
    }

    pub fn conductor(&self) -> &Point {
        &self.conductor
    }

    /// `γ_E = c_E − 1`.
    pub fn gamma(&self) -> Point {
        &self.conductor - &Point::splat(self.dim(), 1)
    }

    pub fn small_elements(&self) -> &PointSet {
        &self.small
    }

    /// The frame `T = c_E + 1` in which complements are stored.
    pub fn complement_frame(&self) -> Frame {
        Frame::new(&self.conductor + &Point::splat(self.dim(), 1))
    }

    /// `A = S \ E` in the frame `c_E + 1`.
    pub fn complement(&self) -> CappedComplement {
        self.complement_in(self.complement_frame())
    }

    /// `A = S \ E` in an arbitrary frame at or beyond `c_E`.
    pub fn complement_in(&self, frame: Frame) -> CappedComplement {
        let points = frame
            .points()
            .into_iter()
            .filter(|p| self.parent.contains(p) && !self.contains(p))
            .collect();
        CappedSet { frame, points }
    }

    /// Checks `E ⊆ S`, `E + S ⊆ E`, meet closure, the exchange axiom inside
    /// `E`, and minimality of `c_E` on `[0, c_E + e + margin]`.
    pub fn validate(&self, margin: i64) -> Vec<String> {
        let d = self.dim();
        let hi = &(&self.conductor + self.parent.multiplicity()) + &Point::splat(d, margin);
        let mut out = Vec::new();
        for i in 0..d {
            if self.conductor[i] > 0 && self.contains(&(&self.conductor - &Point::unit(d, i))) {
                out.push(format!("conductor can be lowered in coordinate {}", i + 1));
            }
        }
        let elems: Vec<Point> = box_points(&Point::zero(d), &hi)
            .into_iter()
            .filter(|p| self.contains(p))
            .collect();
        let svals = self.parent.elements_in_box(&hi);
        for a in &elems {
            if !self.parent.contains(a) {
                out.push(format!("{a} is in E but not in S"));
            }
            for s in &svals {
                if !self.contains(&(a + s)) {
                    out.push(format!("{a} + {s} is not in E"));
                }
            }
        }
        for (k, a) in elems.iter().enumerate() {
            for b in &elems[k + 1..] {
                if !self.contains(&a.wedge(b)) {
                    out.push(format!("{a} ∧ {b} is not in E"));
                }
                for i in (0..d).filter(|&i| a[i] == b[i]) {
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
                        out.push(format!("no exchange element in E for {a}, {b} at coordinate {}", i + 1));
                    }
                }
            }
        }
        out
    }
}

/// `Ap(S, w) = S \ (w + S)`.
pub fn apery_set(s: &GoodSemigroup, w: &Point) -> Result<CappedComplement, IdealError> {
    if *w == Point::zero(s.dim()) {
        return Err(IdealError::ZeroShift);
    }
    Ok(GoodIdeal::principal(s, w)?.complement())
}
