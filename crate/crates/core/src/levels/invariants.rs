//! Structural properties of good ideals and level partitions, as
//! executable checks.  Each function returns a list of human-readable
//! counterexamples; an empty list means the property holds on the frame.
//!
//! Hypotheses are enumerated over finite points of the frame (no ray
//! coordinates); conclusions are evaluated ray aware.

use std::collections::BTreeMap;

use crate::ideal::GoodIdeal;
use crate::lattice::{box_points, Frame, IndexSet, Point};
use crate::levels::LevelPartition;
use crate::semigroup::{GoodSemigroup, Membership};

/// A semigroup, one of its good ideals and the partition of the complement.
pub struct Setting<'a> {
    pub s: &'a GoodSemigroup,
    pub e: &'a GoodIdeal,
    pub p: &'a LevelPartition,
    frame_pts: Vec<Point>,
}

/// Points `p ≥ a`, `p ≠ a`, grouped by the set of coordinates where `p = a`.
type Buckets = BTreeMap<IndexSet, Vec<Point>>;

impl<'a> Setting<'a> {
    pub fn new(s: &'a GoodSemigroup, e: &'a GoodIdeal, p: &'a LevelPartition) -> Self {
        let frame_pts = p.frame.points();
        Setting { s, e, p, frame_pts }
    }

    fn frame(&self) -> &Frame {
        &self.p.frame
    }

    fn is_finite(&self, a: &Point) -> bool {
        !self.frame().has_ray(a)
    }

    fn finite_points(&self) -> impl Iterator<Item = &Point> {
        self.frame_pts.iter().filter(|a| self.is_finite(a))
    }

    fn in_s(&self, a: &Point) -> bool {
        self.s.contains(a)
    }

    fn in_a(&self, a: &Point) -> bool {
        self.p.level_of(a).is_some()
    }

    /// Members of `member` above the finite point `a`, bucketed by direction.
    fn buckets(&self, a: &Point, member: impl Fn(&Point) -> bool) -> Buckets {
        let mut out = Buckets::new();
        for q in &self.frame_pts {
            if q != a && a.leq(q) && member(q) {
                let f = IndexSet::from_indices(
                    a.dim(),
                    &(0..a.dim()).filter(|&i| q[i] == a[i]).collect::<Vec<_>>(),
                );
                out.entry(f).or_default().push(q.clone());
            }
        }
        out
    }

    fn delta<'b>(b: &'b Buckets, f: IndexSet) -> &'b [Point] {
        b.get(&f).map_or(&[], |v| v.as_slice())
    }

    fn delta_tilde<'b>(b: &'b Buckets, f: IndexSet) -> impl Iterator<Item = &'b Point> {
        b.iter().filter(move |(h, _)| f.is_subset(**h)).flat_map(|(_, v)| v.iter())
    }

    /// Is there an `S`-element strictly between the finite points `a < b`?
    fn gap_in_s(&self, a: &Point, b: &Point) -> bool {
        box_points(a, b).iter().any(|x| x != a && x != b && self.in_s(x))
    }

    fn gap_in_e(&self, a: &Point, b: &Point) -> bool {
        box_points(a, b).iter().any(|x| x != a && x != b && self.e.contains(x))
    }

    /// `α ∈ S \ E` and `Δ^E_F(α) ≠ ∅` imply `Δ̃^E_{F̂}(α) = ∅`.
    pub fn complement_direction_exclusion(&self) -> Vec<String> {
        let d = self.s.dim();
        let mut out = Vec::new();
        for a in self.finite_points().filter(|a| self.in_a(a)) {
            for f in IndexSet::proper_nonempty(d) {
                if self.e.delta_nonempty(a, f) && self.e.delta_tilde_nonempty(a, f.complement()) {
                    out.push(format!("{a}: Δ^E_{f:?} and Δ̃^E of the complement both nonempty"));
                }
            }
        }
        out
    }

    /// For `α ∈ E`, `β ∈ Δ^E_F(α)`, `θ ∈ Δ^E_G(α)`: `β ∧ θ ∈ Δ^E_{F∪G}(α)`
    /// when `F ∪ G ≠ I`, and `β ∧ θ = α` otherwise.
    pub fn meet_of_directions(&self) -> Vec<String> {
        let mut out = Vec::new();
        for a in self.finite_points().filter(|a| self.e.contains(a)) {
            let b = self.buckets(a, |q| self.e.contains(q));
            for (f, bs) in b.iter().filter(|(f, _)| !f.is_empty()) {
                for (g, ts) in b.iter().filter(|(g, _)| !g.is_empty()) {
                    let u = f.union(*g);
                    for x in bs {
                        for y in ts {
                            let m = x.wedge(y);
                            let ok = if u.is_full() {
                                &m == a
                            } else {
                                self.e.contains(&m) && self.frame().in_delta(&m, a, u)
                            };
                            if !ok {
                                out.push(format!("{a}: {x} ∧ {y} = {m} for directions {f:?}, {g:?}"));
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// `β ∈ Δ^E_F(α)` consecutive to `α` in `E` implies `Δ^E_H(α) = ∅` for
    /// every `H ⊋ F`.
    pub fn consecutive_direction_maximality(&self) -> Vec<String> {
        let mut out = Vec::new();
        for a in self.finite_points().filter(|a| self.e.contains(a)) {
            let b = self.buckets(a, |q| self.e.contains(q));
            for (f, bs) in &b {
                let has_larger = b.keys().any(|h| h != f && f.is_subset(*h) && !h.is_full());
                if !has_larger {
                    continue;
                }
                for x in bs.iter().filter(|x| self.is_finite(x)) {
                    if !self.gap_in_e(a, x) {
                        out.push(format!("{a}: {x} consecutive in direction {f:?} but a larger direction is occupied"));
                    }
                }
            }
        }
        out
    }

    /// `Δ^E_F(α) ≠ ∅` and `Δ^E_H(α) ≠ ∅` with `∅ ≠ H ⊊ F` give some `T` with
    /// `F \ H ⊆ T ⊊ F` and `Δ^E_T(α) ≠ ∅`.
    pub fn direction_refinement(&self) -> Vec<String> {
        let d = self.s.dim();
        let mut out = Vec::new();
        for a in self.finite_points() {
            let nonempty: Vec<IndexSet> = IndexSet::all(d)
                .filter(|f| !f.is_full() && self.e.delta_nonempty(a, *f))
                .collect();
            for &f in &nonempty {
                for &h in nonempty.iter().filter(|h| !h.is_empty() && h.is_subset(f) && **h != f) {
                    let need = IndexSet::from_bits(d, f.bits() & !h.bits());
                    let found = nonempty.iter().any(|t| need.is_subset(*t) && t.is_subset(f) && *t != f);
                    if !found {
                        out.push(format!("{a}: no refinement between {h:?} and {f:?}"));
                    }
                }
            }
        }
        out
    }

    /// If `α ∈ A_i`, `θ ∈ Δ^S_G(α)` is consecutive to `α` and
    /// `Δ̃^E_{Ĝ}(α) ≠ ∅`, then `θ ∈ A_i`.
    pub fn consecutive_same_level(&self) -> Vec<String> {
        let mut out = Vec::new();
        for a in self.finite_points() {
            let Some(i) = self.p.level_of(a) else { continue };
            let b = self.buckets(a, |q| self.in_s(q));
            for (g, ts) in b.iter().filter(|(g, _)| !g.is_empty()) {
                if !self.e.delta_tilde_nonempty(a, g.complement()) {
                    continue;
                }
                for t in ts.iter().filter(|t| self.is_finite(t) && !self.gap_in_s(a, t)) {
                    if self.p.level_of(t) != Some(i) {
                        out.push(format!("{a} in level {i} but consecutive {t} in level {:?}", self.p.level_of(t)));
                    }
                }
            }
        }
        out
    }

    /// The two level bounds obtained from a point `δ ∈ S`, a direction `G`
    /// with `θ ∈ Δ^S_G(δ) ∩ A_h` and `Δ^S_{Ĝ}(δ) ⊆ A`:
    /// a consecutive `β ∈ Δ^S_F(δ)`, `F ⊇ Ĝ`, `Δ̃^S_F(δ) ⊆ A` lies in a level
    /// `≤ h`; and `δ ∈ A` with `Δ̃^S_{Ĝ}(δ) ⊆ A` lies in a level `< h`.
    pub fn level_bounds_from_directions(&self) -> Vec<String> {
        let d = self.s.dim();
        let mut out = Vec::new();
        for dl in self.finite_points().filter(|x| self.in_s(x)) {
            let b = self.buckets(dl, |q| self.in_s(q));
            for g in IndexSet::all(d).filter(|g| !g.is_full()) {
                let gh = g.complement();
                let hat_in_a = if gh.is_full() {
                    self.in_a(dl)
                } else {
                    Self::delta(&b, gh).iter().all(|q| self.in_a(q))
                };
                if !hat_in_a {
                    continue;
                }
                let thetas: Vec<usize> = Self::delta(&b, g).iter().filter_map(|t| self.p.level_of(t)).collect();
                let Some(&h_min) = thetas.iter().min() else { continue };
                for f in IndexSet::all(d).filter(|f| !f.is_full() && gh.is_subset(*f)) {
                    if !Self::delta_tilde(&b, f).all(|q| self.in_a(q)) {
                        continue;
                    }
                    for be in Self::delta(&b, f).iter().filter(|x| self.is_finite(x) && !self.gap_in_s(dl, x)) {
                        match self.p.level_of(be) {
                            Some(i) if i <= h_min => {}
                            lv => out.push(format!(
                                "{dl}: consecutive {be} in level {lv:?} exceeds bound {h_min} (direction {f:?})"
                            )),
                        }
                    }
                }
                if let Some(i) = self.p.level_of(dl) {
                    if Self::delta_tilde(&b, gh).all(|q| self.in_a(q)) && i >= h_min {
                        out.push(format!("{dl} in level {i} not below {h_min} (direction {g:?})"));
                    }
                }
            }
        }
        out
    }

    /// `α < δ < β` with `α, β ∈ A_i` and `δ ∈ S` imply `δ ∈ A_i`.
    pub fn between_same_level(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (k, l) in self.p.levels.iter().enumerate() {
            let fin: Vec<&Point> = l.iter().filter(|x| self.is_finite(x)).collect();
            for a in &fin {
                for b in fin.iter().filter(|b| a.lneq(b)) {
                    for x in box_points(a, b) {
                        if &x != *a && &x != *b && self.in_s(&x) && self.p.level_of(&x) != Some(k + 1) {
                            out.push(format!("{x} between {a} and {b} of level {} is not in it", k + 1));
                        }
                    }
                }
            }
        }
        out
    }

    /// `Δ^S(α) ⊆ A` nonempty implies its minimal elements share a level.
    pub fn minimal_delta_same_level(&self) -> Vec<String> {
        let mut out = Vec::new();
        for a in self.finite_points() {
            let b = self.buckets(a, |q| self.in_s(q));
            let dl: Vec<&Point> = b
                .iter()
                .filter(|(f, _)| f.len() == 1)
                .flat_map(|(_, v)| v.iter())
                .collect();
            if dl.is_empty() || !dl.iter().all(|q| self.in_a(q)) {
                continue;
            }
            let mins: Vec<&&Point> = dl.iter().filter(|q| !dl.iter().any(|r| r.lneq(q))).collect();
            let lv: std::collections::BTreeSet<_> = mins.iter().map(|q| self.p.level_of(q)).collect();
            if lv.len() > 1 {
                out.push(format!("{a}: minimal elements of Δ^S span levels {lv:?}"));
            }
        }
        out
    }

    /// Every element of `A_i`, `i > 1`, lies strictly above an element of
    /// `A_{i-1}`.
    pub fn lower_level_below(&self) -> Vec<String> {
        let fr = self.frame();
        let mut out = Vec::new();
        for i in 2..=self.p.n() {
            for a in self.p.level(i) {
                if !self.p.level(i - 1).iter().any(|b| fr.can_lt(b, a)) {
                    out.push(format!("{a} in level {i} has nothing below it in level {}", i - 1));
                }
            }
        }
        out
    }

    /// For `α ∈ A_i`, `i < N`, and every coordinate `k` there is
    /// `β ∈ A_{i+1}` with `β ≥ α` and `β_k > α_k`.
    pub fn upper_level_every_direction(&self) -> Vec<String> {
        let fr = self.frame();
        let mut out = Vec::new();
        for i in 1..self.p.n() {
            for a in self.p.level(i) {
                for k in 0..a.dim() {
                    let ok = self
                        .p
                        .level(i + 1)
                        .iter()
                        .any(|b| fr.can_le(a, b) && fr.can_gt(b, a, k));
                    if !ok {
                        out.push(format!("{a} in level {i}: nothing above in level {} along {}", i + 1, k + 1));
                    }
                }
            }
        }
        out
    }

    /// `α ≪ β` in `A` forces a strictly higher level.
    pub fn domination_raises_level(&self) -> Vec<String> {
        let fr = self.frame();
        let mut out = Vec::new();
        let all: Vec<(Point, usize)> = self
            .p
            .levels
            .iter()
            .enumerate()
            .flat_map(|(k, l)| l.iter().map(move |x| (x.clone(), k + 1)))
            .collect();
        for (a, i) in &all {
            for (b, j) in &all {
                if a != b && fr.can_ll(a, b) && !fr.can_ll(b, a) && j <= i {
                    out.push(format!("{a} ≪ {b} but levels {i} ≥ {j}"));
                }
            }
        }
        out
    }

    /// Every check above, labelled.
    pub fn all(&self) -> Vec<(&'static str, Vec<String>)> {
        vec![
            ("complement direction exclusion", self.complement_direction_exclusion()),
            ("meet of directions", self.meet_of_directions()),
            ("consecutive direction maximality", self.consecutive_direction_maximality()),
            ("direction refinement", self.direction_refinement()),
            ("consecutive element keeps level", self.consecutive_same_level()),
            ("level bounds from directions", self.level_bounds_from_directions()),
            ("between elements keep level", self.between_same_level()),
            ("minimal delta elements share level", self.minimal_delta_same_level()),
            ("lower level below", self.lower_level_below()),
            ("upper level in every direction", self.upper_level_every_direction()),
            ("domination raises level", self.domination_raises_level()),
        ]
    }
}
