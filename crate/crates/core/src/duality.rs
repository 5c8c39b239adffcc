//! Dual levels `A_i′`, symmetric complements, and the duality of levels
//! for symmetric and almost symmetric semigroups.

use std::fmt;

use crate::error::LevelError;
use crate::ideal::{apery_set, CappedSet, GoodIdeal};
use crate::lattice::{Frame, IndexSet, Point, PointSet};
use crate::levels::{partition, LevelPartition};
use crate::semigroup::{GoodSemigroup, Membership};

/// `A_1′..A_N′` for a partition and an anchor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualPartition {
    pub frame: Frame,
    pub anchor: Point,
    pub duals: Vec<PointSet>,
}

/// `anchor − ω` for a stored point; a ray coordinate of `ω` gives a
/// negative value, and every negative value behaves the same for `Δ`.
fn reflect(anchor: &Point, w: &Point, frame: &Frame) -> Point {
    let mut x = anchor - w;
    for k in 0..x.dim() {
        if frame.is_ray(w, k) {
            x[k] = x[k].min(-1);
        }
    }
    x
}

/// `Δ^X(anchor − ω)` in `frame`, where `X` is `ambient`.
fn dual_delta(ambient: &impl Membership, frame: &Frame, anchor: &Point, w: &Point) -> PointSet {
    ambient.delta_union_in_frame(frame, &reflect(anchor, w, frame))
}

/// `A_i′ = ⋃_{ω∈A_i} Δ^X(anchor − ω)` minus the earlier duals, with `Δ`
/// taken in `ambient` and read in the partition's frame.
pub fn dual_levels(ambient: &impl Membership, p: &LevelPartition, anchor: &Point) -> DualPartition {
    debug_assert!(anchor.lneq(p.frame.cap()));
    let mut seen = PointSet::new();
    let mut duals = Vec::with_capacity(p.n());
    for level in &p.levels {
        let mut d = PointSet::new();
        for w in level {
            d.extend(dual_delta(ambient, &p.frame, anchor, w));
        }
        let fresh: PointSet = d.difference(&seen).cloned().collect();
        seen.extend(d);
        duals.push(fresh);
    }
    DualPartition { frame: p.frame.clone(), anchor: anchor.clone(), duals }
}

/// Failures of the three symmetric-complement conditions for the set
/// partitioned by `p` inside `ambient`, with respect to `anchor`.
pub fn symmetric_complement_violations(ambient: &impl Membership, p: &LevelPartition, anchor: &Point) -> Vec<String> {
    let frame = &p.frame;
    let d = frame.dim();
    let mut out = Vec::new();
    if p.n() == 0 || p.level(1) != &PointSet::from([Point::zero(d)]) {
        out.push("first level is not {0}".to_string());
    }
    for a in frame.points().into_iter().filter(|a| ambient.contains(a)) {
        let x = reflect(anchor, &a, frame);
        let in_a = p.level_of(&a).is_some();
        let dual = ambient.delta_union_in_frame(frame, &x);
        if !in_a && !dual.is_empty() {
            out.push(format!("{a} outside the set but Δ({x}) is nonempty"));
        }
        if in_a && (dual.is_empty() || dual.iter().any(|q| p.level_of(q).is_none())) {
            out.push(format!("{a} in the set but Δ({x}) is empty or leaves the set"));
        }
    }
    out
}

/// `A = S \ E` is a symmetric complement of `E`.
pub fn is_symmetric_complement(s: &GoodSemigroup, e: &GoodIdeal, p: &LevelPartition) -> bool {
    symmetric_complement_violations(s, p, &e.gamma()).is_empty()
}

/// One comparison `A_i′ = A_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityRow {
    pub i: usize,
    pub j: usize,
    pub missing: PointSet,
    pub extra: PointSet,
}

impl DualityRow {
    pub fn passes(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    pub rows: Vec<DualityRow>,
}

impl DualityReport {
    pub fn passes(&self) -> bool {
        self.rows.iter().all(DualityRow::passes)
    }

    /// Rows as text, with `name` for the partitioned set.
    pub fn render(&self, name: &str) -> String {
        let mut out = String::new();
        for r in &self.rows {
            out += &format!("{name}{}' = {name}{}  {}", r.i, r.j, if r.passes() { "PASS" } else { "FAIL" });
            if let Some(x) = r.missing.iter().next() {
                out += &format!("  missing {x}");
            }
            if let Some(x) = r.extra.iter().next() {
                out += &format!("  extra {x}");
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for DualityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("A"))
    }
}

/// Compares `A_i′` with `A_{N−i+1}` for every `i`.
pub fn duality_report(ambient: &impl Membership, p: &LevelPartition, anchor: &Point) -> DualityReport {
    let dual = dual_levels(ambient, p, anchor);
    let n = p.n();
    let rows = (1..=n)
        .map(|i| {
            let lhs = &dual.duals[i - 1];
            let rhs = p.level(n - i + 1);
            DualityRow {
                i,
                j: n - i + 1,
                missing: rhs.difference(lhs).cloned().collect(),
                extra: lhs.difference(rhs).cloned().collect(),
            }
        })
        .collect();
    DualityReport { rows }
}

/// `A_i′ = A_{N−i+1}` for the complement of `E` in `S`, anchored at `γ_E`.
pub fn check_duality(s: &GoodSemigroup, e: &GoodIdeal, p: &LevelPartition) -> DualityReport {
    duality_report(s, p, &e.gamma())
}

/// The sets `Z = PF(S) ∪ {0}` and `W` built from `Ap(S, e)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZwSets {
    /// In the frame `c`.
    pub z: CappedSet,
    /// In the frame of `Ap(S, e)`.
    pub w: CappedSet,
}

/// `Z = PF(S) ∪ {0}` and
/// `W = {0} ∪ Δ(γ + e) ∪ {α ∈ A_2 ∪ … ∪ A_{N−1} : α − e ∉ PF(S)}`.
pub fn build_z_w(s: &GoodSemigroup) -> Result<ZwSets, LevelError> {
    let d = s.dim();
    let e = s.multiplicity();
    let pf = s.pseudo_frobenius();
    let mut z = pf.clone();
    z.insert(Point::zero(d));
    let z = CappedSet::new(Frame::new(s.conductor().clone()), z);

    let ap = partition(&apery_set(s, e)?)?;
    let frame = ap.frame.clone();
    let top = &s.gamma() + e;
    let cfr = Frame::new(s.conductor().clone());
    let mut w: PointSet = frame.points().into_iter().filter(|q| frame.in_delta_union(q, &top)).collect();
    w.insert(Point::zero(d));
    for i in 2..ap.n() {
        for a in ap.level(i) {
            let shifted = a - e;
            if !shifted.is_nonneg() || !pf.contains(&cfr.clamp(&shifted)) {
                w.insert(a.clone());
            }
        }
    }
    Ok(ZwSets { z, w: CappedSet::new(frame, w) })
}

/// Outcome of the `Z`/`W` duality test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlmostSymmetricReport {
    pub z_levels: Option<LevelPartition>,
    pub w_levels: Option<LevelPartition>,
    pub z: Option<DualityReport>,
    pub w: Option<DualityReport>,
}

impl AlmostSymmetricReport {
    pub fn passes(&self) -> bool {
        self.z.as_ref().is_some_and(DualityReport::passes) && self.w.as_ref().is_some_and(DualityReport::passes)
    }
}

impl fmt::Display for AlmostSymmetricReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, r) in [("Z", &self.z), ("W", &self.w)] {
            match r {
                Some(r) => write!(f, "{name}:\n{}", r.render(name))?,
                None => writeln!(f, "{name}: no level partition")?,
            }
        }
        Ok(())
    }
}

/// `Z_h′ = Z_{n−h+1}` with `Δ` in `S ∪ PF(S)` anchored at `γ`, and
/// `W_i′ = W_{m−i+1}` with `Δ` in `S` anchored at `γ + e`.
pub fn almost_symmetric_duality(s: &GoodSemigroup) -> Result<AlmostSymmetricReport, LevelError> {
    let zw = build_z_w(s)?;
    let gamma = s.gamma();
    let z_levels = partition(&zw.z).ok();
    let w_levels = partition(&zw.w).ok();
    let z = z_levels.as_ref().map(|p| duality_report(&s.with_pseudo_frobenius(), p, &gamma));
    let w = w_levels.as_ref().map(|p| duality_report(s, p, &(&gamma + s.multiplicity())));
    Ok(AlmostSymmetricReport { z_levels, w_levels, z, w })
}

/// The `Z`/`W` duality test for an almost symmetric semigroup.
pub fn check_almost_symmetric_duality(s: &GoodSemigroup) -> Result<AlmostSymmetricReport, crate::error::PreconditionError> {
    if !s.is_almost_symmetric() {
        return Err(crate::error::PreconditionError::Violated("the semigroup is not almost symmetric".into()));
    }
    Ok(almost_symmetric_duality(s)?)
}

/// Properties of symmetric complements, as executable checks.
pub mod invariants {
    use super::*;

    /// `α ∈ A_i` gives `Δ^S(γ_E − α) ∩ A_j = ∅` for `j < N − i + 1`.
    pub fn dual_avoids_low_levels(s: &GoodSemigroup, e: &GoodIdeal, p: &LevelPartition) -> Vec<String> {
        let g = e.gamma();
        let n = p.n();
        let mut out = Vec::new();
        for (i, level) in p.levels.iter().enumerate().map(|(k, l)| (k + 1, l)) {
            for a in level {
                for q in dual_delta(s, &p.frame, &g, a) {
                    if let Some(j) = p.level_of(&q).filter(|&j| j < n - i + 1) {
                        out.push(format!("{a} in level {i}: dual element {q} in level {j}"));
                    }
                }
            }
        }
        out
    }

    /// Minimal elements of `Δ^S(γ_E − α)` lie in `A_{N−i+1}`.
    pub fn dual_minima_level(s: &GoodSemigroup, e: &GoodIdeal, p: &LevelPartition) -> Vec<String> {
        let g = e.gamma();
        let n = p.n();
        let mut out = Vec::new();
        for (i, level) in p.levels.iter().enumerate().map(|(k, l)| (k + 1, l)) {
            for a in level {
                let dl = dual_delta(s, &p.frame, &g, a);
                for m in crate::lattice::minimal_elements(&dl) {
                    if p.level_of(&m) != Some(n - i + 1) {
                        out.push(format!("{a} in level {i}: minimal dual {m} in level {:?}", p.level_of(&m)));
                    }
                }
            }
        }
        out
    }

    /// `β ∈ A` with `Δ̃^E_G(β) = ∅` has some `k ∈ G` with
    /// `Δ^S_k(γ_E − β) ≠ ∅`.
    pub fn empty_direction_has_dual(s: &GoodSemigroup, e: &GoodIdeal, p: &LevelPartition) -> Vec<String> {
        let d = s.dim();
        let g = e.gamma();
        let mut out = Vec::new();
        for b in p.frame.points().into_iter().filter(|b| p.level_of(b).is_some()) {
            let x = &g - &b;
            for gs in IndexSet::all(d).filter(|f| !f.is_empty()) {
                if e.delta_tilde_nonempty(&b, gs) {
                    continue;
                }
                if !gs.indices().any(|k| s.delta_nonempty(&x, IndexSet::singleton(d, k))) {
                    out.push(format!("{b}: Δ̃^E_{gs:?} empty but no dual direction in it"));
                }
            }
        }
        out
    }

    pub fn all(s: &GoodSemigroup, e: &GoodIdeal, p: &LevelPartition) -> Vec<(&'static str, Vec<String>)> {
        vec![
            ("dual avoids lower levels", dual_avoids_low_levels(s, e, p)),
            ("minimal duals in the mirrored level", dual_minima_level(s, e, p)),
            ("empty directions have duals", empty_direction_has_dual(s, e, p)),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::levels::apery_levels;
    use crate::semigroup::NumericalSemigroup;

    fn p<const N: usize>(v: [i64; N]) -> Point {
        Point::from(v)
    }

    fn num(g: &[i64]) -> GoodSemigroup {
        NumericalSemigroup::new(g).unwrap().as_good()
    }

    fn ones(v: &[i64]) -> PointSet {
        v.iter().map(|&x| p([x])).collect()
    }

    #[test]
    fn two_level_case() {
        let s = num(&[2, 3]);
        let w = p([2]);
        let part = apery_levels(&s, &w).unwrap();
        let e = GoodIdeal::principal(&s, &w).unwrap();
        let dual = dual_levels(&s, &part, &e.gamma());
        assert_eq!(dual.duals, vec![ones(&[3]), ones(&[0])]);
        assert!(check_duality(&s, &e, &part).passes());
        assert!(is_symmetric_complement(&s, &e, &part));
    }

    #[test]
    fn non_symmetric_fails() {
        let s = num(&[3, 5, 7]);
        let w = p([3]);
        let part = apery_levels(&s, &w).unwrap();
        let e = GoodIdeal::principal(&s, &w).unwrap();
        assert!(!is_symmetric_complement(&s, &e, &part));
        assert!(!check_duality(&s, &e, &part).passes());
    }

    #[test]
    fn empty_complement_is_not_symmetric() {
        let s = num(&[2, 3]);
        let e = GoodIdeal::principal(&s, &p([0])).unwrap();
        let part = partition(&e.complement()).unwrap();
        assert!(!is_symmetric_complement(&s, &e, &part));
    }

    #[test]
    fn z_and_w_numerical() {
        let s = num(&[3, 5, 7]);
        let zw = build_z_w(&s).unwrap();
        assert_eq!(zw.z.points, ones(&[0, 2, 4]));
        assert_eq!(zw.w.points, ones(&[0, 7]));
        let r = check_almost_symmetric_duality(&s).unwrap();
        assert!(r.passes(), "{r}");
    }

    #[test]
    fn not_almost_symmetric() {
        let s = num(&[4, 9, 11, 14]);
        assert!(!s.is_almost_symmetric());
        assert!(check_almost_symmetric_duality(&s).is_err());
        assert!(!almost_symmetric_duality(&s).unwrap().passes());
    }
}
