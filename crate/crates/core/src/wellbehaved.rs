//! Well-behaved complements, their two-dimensional characterizations, and
//! the shape of a single level in the plane.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::PreconditionError;
use crate::ideal::{CappedSet, GoodIdeal};
use crate::lattice::{Frame, IndexSet, Point, PointSet};
use crate::levels::{block_cover, partition, LevelPartition};
use crate::semigroup::{GoodSemigroup, Membership};

fn violated(msg: impl Into<String>) -> PreconditionError {
    PreconditionError::Violated(msg.into())
}

/// Directions `F` with `Δ^S_F(α) ≠ ∅` and `Δ̃^S_F(α) ⊆ A`.
fn inner_directions(s: &GoodSemigroup, e: &GoodIdeal, a: &Point) -> Vec<IndexSet> {
    IndexSet::proper_nonempty(s.dim())
        .filter(|&f| s.delta_nonempty(a, f) && !e.delta_tilde_nonempty(a, f))
        .collect()
}

/// Points of `S \ E` in the frame that are complete infima of elements whose
/// `Δ̃`-sets lie in `A`.
pub fn well_behaved_violations(s: &GoodSemigroup, e: &GoodIdeal, frame: &Frame) -> Vec<Point> {
    frame
        .points()
        .into_iter()
        .filter(|a| s.contains(a) && !e.contains(a))
        .filter(|a| block_cover(&inner_directions(s, e, a)).is_some())
        .collect()
}

pub fn is_well_behaved(s: &GoodSemigroup, e: &GoodIdeal, p: &LevelPartition) -> bool {
    well_behaved_violations(s, e, &p.frame).is_empty()
}

/// Pairs of one level whose meet lies in `A` without being one of them.
pub fn same_level_meet_violations(p: &LevelPartition) -> Vec<(Point, Point)> {
    let mut out = Vec::new();
    for level in &p.levels {
        let v: Vec<&Point> = level.iter().collect();
        for (k, a) in v.iter().enumerate() {
            for b in &v[k + 1..] {
                let m = a.wedge(b);
                if m != **a && m != **b && p.level_of(&m).is_some() {
                    out.push(((*a).clone(), (*b).clone()));
                }
            }
        }
    }
    out
}

/// Elements of `A_i`, `i < N`, not dominated by any element of `A_{i+1}`.
pub fn undominated_violations(p: &LevelPartition) -> Vec<Point> {
    let mut out = Vec::new();
    for i in 1..p.n() {
        for a in p.level(i) {
            if !p.level(i + 1).iter().any(|b| p.frame.can_ll(a, b)) {
                out.push(a.clone());
            }
        }
    }
    out
}

/// Well-behaved, same-level meets, domination by the next level; evaluated
/// separately.
pub fn d2_equivalences(
    s: &GoodSemigroup,
    e: &GoodIdeal,
    p: &LevelPartition,
) -> Result<(bool, bool, bool), PreconditionError> {
    if s.dim() > 2 {
        return Err(violated(format!("dimension {} > 2", s.dim())));
    }
    Ok((
        is_well_behaved(s, e, p),
        same_level_meet_violations(p).is_empty(),
        undominated_violations(p).is_empty(),
    ))
}

/// The level containing `Δ^S_F(w)`, required to be a nonempty subset of `A`
/// lying in one level.
pub fn single_line_level(
    s: &GoodSemigroup,
    e: &GoodIdeal,
    p: &LevelPartition,
    w: &Point,
    f: IndexSet,
) -> Result<usize, PreconditionError> {
    let line = s.delta_in_frame(&p.frame, w, f);
    if line.is_empty() {
        return Err(violated(format!("Δ^S_{f:?}({w}) is empty")));
    }
    if let Some(b) = line.iter().find(|b| e.contains(b)) {
        return Err(violated(format!("Δ^S_{f:?}({w}) meets E at {b}")));
    }
    let levels: std::collections::BTreeSet<usize> = line.iter().filter_map(|b| p.level_of(b)).collect();
    match levels.len() {
        1 => Ok(*levels.iter().next().unwrap()),
        _ => Err(violated(format!("Δ^S_{f:?}({w}) spans levels {levels:?}"))),
    }
}

/// For `Ap(S, w)` in the plane with `S` local: the line `Δ^S_h` through the
/// `i`-th Apéry element of the `h`-th projection lies in `A_i`, and `A_i`
/// stays weakly left of it.
pub fn projection_level_bound(s: &GoodSemigroup, p: &LevelPartition, w: &Point) -> Result<Vec<String>, PreconditionError> {
    if s.dim() != 2 || !s.is_local() {
        return Err(violated("requires a local semigroup of dimension 2"));
    }
    let mut out = Vec::new();
    for h in 0..2 {
        let axis = IndexSet::singleton(2, h);
        let proj = s.projection(axis)?.to_numerical().expect("one-dimensional projection");
        let u = proj.apery(w[h]);
        for (k, &ui) in u.iter().enumerate() {
            let i = k + 1;
            let mut x = Point::splat(2, -1);
            x[h] = ui;
            let line = s.delta_in_frame(&p.frame, &x, axis);
            if line.is_empty() {
                out.push(format!("coordinate {}: line through {ui} is empty", h + 1));
            }
            for b in line.iter().filter(|b| p.level_of(b) != Some(i)) {
                out.push(format!("coordinate {}: {b} on the line through {ui} is not in level {i}", h + 1));
            }
            if i <= p.n() {
                for a in p.level(i).iter().filter(|a| p.frame.is_ray(a, h) || a[h] > ui) {
                    out.push(format!("coordinate {}: {a} in level {i} exceeds {ui}", h + 1));
                }
            }
        }
    }
    Ok(out)
}

/// Levels of the projected complement `S_1 \ E_1` onto `axes`.
pub fn projected_partition(s: &GoodSemigroup, e: &GoodIdeal, frame: &Frame, axes: IndexSet) -> Result<LevelPartition, PreconditionError> {
    let idx: Vec<usize> = axes.indices().collect();
    let s1 = s.projection(axes)?;
    let frame1 = Frame::new(frame.cap().project(&idx));
    let e1: PointSet = frame.points().iter().filter(|x| e.contains(x)).map(|x| x.project(&idx)).collect();
    let points = frame1.points().into_iter().filter(|x| s1.contains(x) && !e1.contains(x)).collect();
    Ok(partition(&CappedSet::new(frame1, points))?)
}

/// For every `α^(1)` in level `i` of the projected complement, the elements
/// of `S` projecting to it lie in `A_i`.
pub fn gamma_line_levels(
    s: &GoodSemigroup,
    e: &GoodIdeal,
    p: &LevelPartition,
    axes: IndexSet,
) -> Result<Vec<String>, PreconditionError> {
    if !s.is_local() {
        return Err(violated("requires a local semigroup"));
    }
    let idx: Vec<usize> = axes.indices().collect();
    let p1 = projected_partition(s, e, &p.frame, axes)?;
    let members: Vec<Point> = p.frame.points().into_iter().filter(|x| s.contains(x)).collect();
    let mut out = Vec::new();
    for (k, level) in p1.levels.iter().enumerate() {
        for a1 in level {
            for x in members.iter().filter(|x| x.project(&idx) == *a1) {
                if p.level_of(x) != Some(k + 1) {
                    out.push(format!("{x} over {a1} (projected level {}) has level {:?}", k + 1, p.level_of(x)));
                }
            }
        }
    }
    Ok(out)
}

/// Clause of the level-shape classification satisfied by an element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Tag {
    /// One of the absolutes `θ^(k)` itself.
    Absolute,
    /// On the ray above `θ^(0)` or to the right of `θ^(r+1)`.
    I,
    /// `θ^(k) ∧ θ^(k+1) < α ≤ θ^(k)`: below an absolute.
    II,
    /// `θ^(k−1) ∧ θ^(k) < α ≤ θ^(k)`: left of a boundary element.
    III,
    /// No horizontal ray and `θ^(r) ∈ Δ_1(α)`.
    IV,
    /// No vertical ray and `θ^(1) ∈ Δ_2(α)`.
    V,
}

impl Tag {
    pub fn roman(self) -> &'static str {
        match self {
            Tag::Absolute => "abs",
            Tag::I => "i",
            Tag::II => "ii",
            Tag::III => "iii",
            Tag::IV => "iv",
            Tag::V => "v",
        }
    }
}

/// A tag with the index `k` of the boundary element it refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classified {
    pub tag: Tag,
    pub k: usize,
}

/// The staircase of one level in the plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelStructure {
    pub level: usize,
    /// `θ^(1)..θ^(r)`, increasing in the first coordinate.
    pub absolutes: Vec<Point>,
    /// Foot of a vertical ray, `(s_1, q_2)`.
    pub theta0: Option<Point>,
    /// Foot of a horizontal ray, `(q_1, s_2)`.
    pub theta_last: Option<Point>,
    pub tags: BTreeMap<Point, Classified>,
    /// Elements whose clause only holds with the staircase reading of the
    /// upper bound in clause ii.
    pub reading_dependent: PointSet,
}

impl LevelStructure {
    /// `θ^(k)` for `0 ≤ k ≤ r + 1`, when present.
    pub fn theta(&self, k: usize) -> Option<&Point> {
        let r = self.absolutes.len();
        match k {
            0 => self.theta0.as_ref(),
            k if k <= r => Some(&self.absolutes[k - 1]),
            k if k == r + 1 => self.theta_last.as_ref(),
            _ => None,
        }
    }

    /// Every element shares a coordinate with some `θ^(k)`.
    pub fn coordinate_sharing_violations(&self) -> Vec<Point> {
        let r = self.absolutes.len();
        self.tags
            .keys()
            .filter(|a| !(0..=r + 1).filter_map(|k| self.theta(k)).any(|t| t[0] == a[0] || t[1] == a[1]))
            .cloned()
            .collect()
    }
}

impl fmt::Display for LevelStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "level {}", self.level)?;
        let r = self.absolutes.len();
        for k in 0..=r + 1 {
            if let Some(t) = self.theta(k) {
                writeln!(f, "  theta{k} = {t}")?;
            }
        }
        for (a, c) in &self.tags {
            let wit: Vec<String> = match c.tag {
                Tag::II => vec![c.k, c.k + 1],
                Tag::III => vec![c.k - 1, c.k],
                _ => vec![c.k],
            }
            .into_iter()
            .filter_map(|k| self.theta(k).map(|t| t.to_string()))
            .collect();
            let flag = if self.reading_dependent.contains(a) { "  *" } else { "" };
            writeln!(f, "  {a}  {}  {}{flag}", c.tag.roman(), wit.join(" "))?;
        }
        Ok(())
    }
}

/// Tags `elements` against the given staircase; returns the first element
/// satisfying no clause as the error.
pub fn classify_points(
    elements: &PointSet,
    absolutes: &[Point],
    theta0: Option<&Point>,
    theta_last: Option<&Point>,
) -> Result<BTreeMap<Point, Classified>, Point> {
    let r = absolutes.len();
    let th = |k: usize| match k {
        0 => theta0,
        k if k <= r => Some(&absolutes[k - 1]),
        k if k == r + 1 => theta_last,
        _ => None,
    };
    let between = |a: &Point, lo: usize, hi: usize, top: usize| match (th(lo), th(hi), th(top)) {
        (Some(x), Some(y), Some(t)) => x.wedge(y).lneq(a) && a.leq(t),
        _ => false,
    };
    let mut out = BTreeMap::new();
    for a in elements {
        let c = if let Some(k) = absolutes.iter().position(|t| t == a) {
            Classified { tag: Tag::Absolute, k: k + 1 }
        } else if theta0.is_some_and(|t| a[0] == t[0] && a[1] > t[1]) {
            Classified { tag: Tag::I, k: 0 }
        } else if theta_last.is_some_and(|t| a[1] == t[1] && a[0] > t[0]) {
            Classified { tag: Tag::I, k: r + 1 }
        } else if let Some(k) = (0..=r).find(|&k| between(a, k, k + 1, k)) {
            Classified { tag: Tag::II, k }
        } else if let Some(k) = (1..=r + 1).find(|&k| between(a, k - 1, k, k)) {
            Classified { tag: Tag::III, k }
        } else if theta0 == Some(a) || theta_last == Some(a) {
            Classified { tag: Tag::I, k: if theta0 == Some(a) { 0 } else { r + 1 } }
        } else if theta_last.is_none() && th(r).is_some_and(|t| a[0] == t[0] && t[1] > a[1]) {
            Classified { tag: Tag::IV, k: r }
        } else if theta0.is_none() && th(1).is_some_and(|t| a[1] == t[1] && t[0] > a[0]) {
            Classified { tag: Tag::V, k: 1 }
        } else {
            return Err(a.clone());
        };
        out.insert(a.clone(), c);
    }
    Ok(out)
}

/// Absolute elements of `S` in level `i`, increasing in the first
/// coordinate.
pub fn level_absolutes(s: &GoodSemigroup, p: &LevelPartition, i: usize) -> Vec<Point> {
    let mut out: Vec<Point> = p
        .level(i)
        .iter()
        .filter(|a| !p.frame.has_ray(a) && !s.delta_union_nonempty(a))
        .cloned()
        .collect();
    out.sort_by_key(|a| a[0]);
    out
}

/// Classification of level `i` (1-based) of a plane complement.
pub fn classify_level(
    s: &GoodSemigroup,
    e: &GoodIdeal,
    p: &LevelPartition,
    i: usize,
) -> Result<LevelStructure, PreconditionError> {
    if s.dim() != 2 {
        return Err(violated("classification is planar"));
    }
    if i == 0 || i > p.n() {
        return Err(violated(format!("no level {i}")));
    }
    let level = p.level(i);
    let q = e.conductor();
    let absolutes = level_absolutes(s, p, i);
    let foot = |h: usize| -> Result<Option<Point>, PreconditionError> {
        let rays: Vec<&Point> = level.iter().filter(|a| p.frame.is_ray(a, h) && !p.frame.is_ray(a, 1 - h)).collect();
        match rays.as_slice() {
            [] => Ok(None),
            [a] => {
                let mut t = (*a).clone();
                t[h] = q[h];
                Ok(Some(t))
            }
            _ => Err(violated(format!("level {i} has {} parallel rays", rays.len()))),
        }
    };
    let theta0 = foot(1)?;
    let theta_last = foot(0)?;
    let tags = classify_points(level, &absolutes, theta0.as_ref(), theta_last.as_ref())
        .map_err(|a| violated(format!("{a} in level {i} satisfies no clause")))?;
    let reading_dependent = tags.iter().filter(|(_, c)| c.tag == Tag::II).map(|(a, _)| a.clone()).collect();
    Ok(LevelStructure { level: i, absolutes, theta0, theta_last, tags, reading_dependent })
}

/// Checks tied to well-behaved complements.
pub mod invariants {
    use super::*;
    use crate::lattice::box_points;

    /// Domination by the next level forces well-behavedness.
    pub fn domination_implies_well_behaved(s: &GoodSemigroup, e: &GoodIdeal, p: &LevelPartition) -> Vec<String> {
        if undominated_violations(p).is_empty() && !is_well_behaved(s, e, p) {
            vec!["every element is dominated by the next level but A is not well-behaved".into()]
        } else {
            Vec::new()
        }
    }

    /// In the plane: all three characterizations agree.
    pub fn three_way_agreement(s: &GoodSemigroup, e: &GoodIdeal, p: &LevelPartition) -> Vec<String> {
        match d2_equivalences(s, e, p) {
            Ok((a, b, c)) if a == b && b == c => Vec::new(),
            Ok(v) => vec![format!("verdicts disagree: {v:?}")],
            Err(_) => Vec::new(),
        }
    }

    /// In the plane with `A` well-behaved: `Δ^S(w) ⊆ A` nonempty lies in a
    /// single level, for every `w` from `−1` up to the frame.
    pub fn union_line_single_level(s: &GoodSemigroup, e: &GoodIdeal, p: &LevelPartition) -> Vec<String> {
        if s.dim() != 2 || !is_well_behaved(s, e, p) {
            return Vec::new();
        }
        let mut out = Vec::new();
        for w in box_points(&Point::splat(2, -1), p.frame.cap()) {
            let line = s.delta_union_in_frame(&p.frame, &w);
            if line.is_empty() || line.iter().any(|b| e.contains(b)) {
                continue;
            }
            let levels: std::collections::BTreeSet<usize> = line.iter().filter_map(|b| p.level_of(b)).collect();
            if levels.len() != 1 {
                out.push(format!("Δ^S({w}) spans levels {levels:?}"));
            }
        }
        out
    }

    /// Every level classifies and every element shares a coordinate with a
    /// boundary element.
    pub fn level_shapes(s: &GoodSemigroup, e: &GoodIdeal, p: &LevelPartition) -> Vec<String> {
        if s.dim() != 2 || !is_well_behaved(s, e, p) {
            return Vec::new();
        }
        let mut out = Vec::new();
        for i in 1..=p.n() {
            match classify_level(s, e, p, i) {
                Ok(ls) => out.extend(
                    ls.coordinate_sharing_violations()
                        .into_iter()
                        .map(|a| format!("{a} in level {i} shares no coordinate with a boundary element")),
                ),
                Err(err) => out.push(err.to_string()),
            }
        }
        out
    }

    /// Tags of finite elements survive enlarging the frame by one, and the
    /// new elements lie on rays.
    pub fn classification_stable(s: &GoodSemigroup, e: &GoodIdeal, p: &LevelPartition) -> Vec<String> {
        if s.dim() != 2 || !is_well_behaved(s, e, p) {
            return Vec::new();
        }
        let big = Frame::new(p.frame.cap() + &Point::splat(2, 1));
        let pb = match partition(&e.complement_in(big)) {
            Ok(pb) => pb,
            Err(err) => return vec![err.to_string()],
        };
        let mut out = Vec::new();
        for i in 1..=p.n() {
            let (Ok(small), Ok(large)) = (classify_level(s, e, p, i), classify_level(s, e, &pb, i)) else {
                out.push(format!("level {i} does not classify in both frames"));
                continue;
            };
            for (a, c) in &large.tags {
                let expected = if a.iter().zip(p.frame.cap().iter()).any(|(x, t)| x >= t) {
                    Some(Tag::I)
                } else {
                    small.tags.get(a).map(|c| c.tag)
                };
                if expected != Some(c.tag) {
                    out.push(format!("{a} in level {i}: {:?} in the larger frame, {expected:?} before", c.tag));
                }
            }
        }
        out
    }

    pub fn all(s: &GoodSemigroup, e: &GoodIdeal, p: &LevelPartition) -> Vec<(&'static str, Vec<String>)> {
        vec![
            ("domination implies well-behaved", domination_implies_well_behaved(s, e, p)),
            ("three characterizations agree", three_way_agreement(s, e, p)),
            ("union line in one level", union_line_single_level(s, e, p)),
            ("level shapes", level_shapes(s, e, p)),
            ("classification stable", classification_stable(s, e, p)),
        ]
    }
}
