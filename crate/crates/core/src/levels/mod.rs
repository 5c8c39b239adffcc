//! Complete infima, the canonical level partition of a complement, the
//! domination partition and the level function.

pub mod invariants;

use std::fmt::Write;

use crate::error::LevelError;
use crate::ideal::{apery_set, CappedSet};
use crate::lattice::{Frame, IndexSet, Point, PointSet};
use crate::semigroup::GoodSemigroup;

/// Directions `F_1..F_r` and witnesses `β^(1)..β^(r)` with
/// `α = β^(1) ∧̃ … ∧̃ β^(r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfimumWitness {
    pub directions: Vec<IndexSet>,
    pub witnesses: Vec<Point>,
}

/// Is `a` a complete infimum of elements of `set`?
///
/// `F_j ∪ F_k = I` for all pairs and `⋂ F_j = ∅` say exactly that the
/// complements `I \ F_j` partition `I` into at least two blocks.
pub fn complete_infimum(set: &PointSet, a: &Point, frame: &Frame) -> Option<InfimumWitness> {
    let d = a.dim();
    if d < 2 {
        return None;
    }
    let mut reps: Vec<(IndexSet, Point)> = Vec::new();
    for f in IndexSet::proper_nonempty(d) {
        if let Some(b) = set.iter().find(|b| *b != a && frame.in_delta(b, a, f)) {
            reps.push((f, b.clone()));
        }
    }
    let dirs: Vec<IndexSet> = reps.iter().map(|r| r.0).collect();
    let chosen = block_cover(&dirs)?;
    Some(InfimumWitness {
        directions: chosen.iter().map(|&k| reps[k].0).collect(),
        witnesses: chosen.iter().map(|&k| reps[k].1.clone()).collect(),
    })
}

/// Indices of directions whose complements partition `I` into at least two
/// blocks, if any.
pub fn block_cover(dirs: &[IndexSet]) -> Option<Vec<usize>> {
    let d = dirs.first()?.dim();
    let mut chosen = Vec::new();
    search_blocks(dirs, IndexSet::empty(d), &mut chosen).then_some(chosen)
}

fn search_blocks(dirs: &[IndexSet], covered: IndexSet, chosen: &mut Vec<usize>) -> bool {
    let d = covered.dim();
    let Some(first) = (0..d).find(|&i| !covered.contains(i)) else {
        return chosen.len() >= 2;
    };
    for (k, f) in dirs.iter().enumerate() {
        let block = f.complement();
        if block.contains(first) && block.intersection(covered).is_empty() {
            chosen.push(k);
            if search_blocks(dirs, covered.union(block), chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Levels `A_1..A_N` of a complement, stored in the complement's frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelPartition {
    pub frame: Frame,
    pub levels: Vec<PointSet>,
}

impl LevelPartition {
    pub fn n(&self) -> usize {
        self.levels.len()
    }

    pub fn dim(&self) -> usize {
        self.frame.dim()
    }

    /// 1-based level of an arbitrary point, if it lies in the complement.
    pub fn level_of(&self, a: &Point) -> Option<usize> {
        if !a.is_nonneg() {
            return None;
        }
        let c = self.frame.clamp(a);
        self.levels.iter().position(|l| l.contains(&c)).map(|i| i + 1)
    }

    /// Level `i` (1-based).
    pub fn level(&self, i: usize) -> &PointSet {
        &self.levels[i - 1]
    }

    pub fn points(&self) -> PointSet {
        self.levels.iter().flatten().cloned().collect()
    }

    pub fn as_set(&self) -> CappedSet {
        CappedSet::new(self.frame.clone(), self.points())
    }

    /// The same partition read in a smaller frame.
    pub fn restrict(&self, cap: &Point) -> LevelPartition {
        let frame = Frame::new(cap.clone());
        let levels = self
            .levels
            .iter()
            .map(|l| l.iter().map(|p| frame.clamp(p)).collect())
            .collect();
        LevelPartition { frame, levels }
    }

    /// Finite points of level `i` inside `[0, hi]`.
    pub fn expand_level(&self, i: usize, hi: &Point) -> PointSet {
        CappedSet::new(self.frame.clone(), self.level(i).clone()).expand(hi)
    }
}

/// Points of `rem` not dominated by another point of `rem`.
fn undominated(rem: &PointSet, frame: &Frame) -> PointSet {
    rem.iter()
        .filter(|a| !rem.iter().any(|b| b != *a && frame.can_ll(a, b)))
        .cloned()
        .collect()
}

/// The canonical level partition.
pub fn partition(a: &CappedSet) -> Result<LevelPartition, LevelError> {
    let frame = &a.frame;
    let mut rem = a.points.clone();
    let mut peeled = Vec::new();
    while !rem.is_empty() {
        let b = undominated(&rem, frame);
        let d: PointSet = b
            .iter()
            .filter(|x| complete_infimum(&b, x, frame).is_none())
            .cloned()
            .collect();
        if d.is_empty() {
            return Err(LevelError::Stuck);
        }
        for x in &d {
            rem.remove(x);
        }
        peeled.push(d);
    }
    peeled.reverse();
    Ok(LevelPartition { frame: frame.clone(), levels: peeled })
}

/// Levels of `Ap(S, w)`; checks that there are `Σ w_i` of them.
pub fn apery_levels(s: &GoodSemigroup, w: &Point) -> Result<LevelPartition, LevelError> {
    let p = partition(&apery_set(s, w)?)?;
    let expected = w.iter().sum::<i64>() as usize;
    if p.n() != expected {
        return Err(LevelError::LevelCount { got: p.n(), expected });
    }
    Ok(p)
}

/// `λ(a)`: the level of `a` if `a` is in the complement, otherwise one more
/// than the highest level having an element strictly below `a`.
pub fn level_function(s: &GoodSemigroup, p: &LevelPartition, a: &Point) -> Result<usize, LevelError> {
    if !s.try_contains(a)? {
        return Err(LevelError::NotInSemigroup(a.clone()));
    }
    if let Some(i) = p.level_of(a) {
        return Ok(i);
    }
    let ca = p.frame.clamp(a);
    let top = (1..=p.n())
        .rev()
        .find(|&i| p.level(i).iter().any(|t| p.frame.can_lt(t, &ca)))
        .unwrap_or(0);
    Ok(top + 1)
}

/// Peels `≪`-maximal elements: returns `B_1..B_M` with `B_M` peeled first.
pub fn domination_partition(a: &CappedSet) -> LevelPartition {
    let mut rem = a.points.clone();
    let mut peeled = Vec::new();
    while !rem.is_empty() {
        let b = undominated(&rem, &a.frame);
        for x in &b {
            rem.remove(x);
        }
        peeled.push(b);
    }
    peeled.reverse();
    LevelPartition { frame: a.frame.clone(), levels: peeled }
}

/// One line per level; ray coordinates are printed as `inf`.
pub fn format_levels(p: &LevelPartition) -> String {
    let mut out = String::new();
    for (i, l) in p.levels.iter().enumerate() {
        let pts: Vec<String> = l
            .iter()
            .map(|q| {
                let cs: Vec<String> = (0..q.dim())
                    .map(|k| if p.frame.is_ray(q, k) { "inf".to_string() } else { q[k].to_string() })
                    .collect();
                format!("[ {} ]", cs.join(", "))
            })
            .collect();
        writeln!(out, "A{}=[ {} ]", i + 1, pts.join(", ")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::GoodIdeal;
    use crate::semigroup::NumericalSemigroup;

    fn p<const N: usize>(v: [i64; N]) -> Point {
        Point::from(v)
    }

    fn num(g: &[i64]) -> GoodSemigroup {
        NumericalSemigroup::new(g).unwrap().as_good()
    }

    fn set(v: &[Point]) -> PointSet {
        v.iter().cloned().collect()
    }

    #[test]
    fn infimum_two_directions() {
        let fr = Frame::unbounded(2);
        let a = p([1, 1]);
        let w = complete_infimum(&set(&[a.clone(), p([1, 2]), p([2, 1])]), &a, &fr).unwrap();
        assert_eq!(w.directions.len(), 2);
        assert!(complete_infimum(&set(&[a.clone(), p([1, 2])]), &a, &fr).is_none());
    }

    #[test]
    fn infimum_three_pairs() {
        let fr = Frame::unbounded(3);
        let a = p([1, 1, 1]);
        // directions {1,2}, {2,3}, {1,3}
        let s = set(&[a.clone(), p([1, 1, 2]), p([2, 1, 1]), p([1, 2, 1])]);
        let w = complete_infimum(&s, &a, &fr).unwrap();
        assert_eq!(w.directions.len(), 3);
        // {1,2} and {1,3} alone share coordinate 1
        let s = set(&[a.clone(), p([1, 1, 2]), p([1, 2, 1])]);
        assert!(complete_infimum(&s, &a, &fr).is_none());
        // {1} and {2,3}
        let s = set(&[a.clone(), p([1, 2, 2]), p([2, 1, 1])]);
        assert_eq!(complete_infimum(&s, &a, &fr).unwrap().directions.len(), 2);
    }

    #[test]
    fn numerical_levels() {
        let s = num(&[2, 3]);
        let part = apery_levels(&s, &p([2])).unwrap();
        assert_eq!(part.levels, vec![set(&[p([0])]), set(&[p([3])])]);
        assert_eq!(level_function(&s, &part, &p([2])).unwrap(), 2);
        assert_eq!(level_function(&s, &part, &p([3])).unwrap(), 2);
        assert_eq!(level_function(&s, &part, &p([100])).unwrap(), 3);
        assert!(level_function(&s, &part, &p([1])).is_err());
    }

    #[test]
    fn product_levels_of_two_numerical_factors() {
        let s = GoodSemigroup::direct_product(&num(&[4, 7]), &num(&[3, 5])).unwrap();
        let part = apery_levels(&s, &p([4, 3])).unwrap();
        assert_eq!(part.n(), 7);
        assert_eq!(part.level(2), &set(&[p([0, 3]), p([0, 5]), p([4, 0]), p([7, 0])]));
        assert_eq!(part.level(7), &set(&[p([21, 11]), p([21, 12]), p([22, 10]), p([23, 10])]));
    }

    #[test]
    fn empty_and_stability() {
        let s = num(&[3, 5]);
        let e = GoodIdeal::principal(&s, &p([0])).unwrap();
        assert_eq!(partition(&e.complement()).unwrap().n(), 0);
        let e = GoodIdeal::principal(&s, &p([3])).unwrap();
        let a = partition(&e.complement()).unwrap();
        let big = partition(&e.complement_in(Frame::new(p([13])))).unwrap();
        assert_eq!(big.restrict(a.frame.cap()), a);
    }

    #[test]
    fn listing() {
        let s = num(&[2, 3]);
        let part = apery_levels(&s, &p([2])).unwrap();
        assert_eq!(format_levels(&part), "A1=[ [ 0 ] ]\nA2=[ [ 3 ] ]\n");
    }
}
