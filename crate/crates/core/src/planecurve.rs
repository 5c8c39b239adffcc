//! Plane branches, their blowups, and the Apéry levels of two-branch plane
//! curves whose blowup splits.

use std::fmt;

use crate::error::PreconditionError;
use crate::lattice::{IndexSet, Point, PointSet};
use crate::levels::{apery_levels, domination_partition, partition, LevelPartition};
use crate::ideal::apery_set;
use crate::products::apery_nonlocal_d2;
use crate::semigroup::{GoodSemigroup, Membership, NumericalSemigroup};
use crate::wellbehaved::{is_well_behaved, level_absolutes};
use crate::ideal::GoodIdeal;

fn violated(msg: impl Into<String>) -> PreconditionError {
    PreconditionError::Violated(msg.into())
}

/// Is `n` a sum of elements of `gens` (no coprimality required)?
fn in_monoid(gens: &[i64], n: i64) -> bool {
    if n < 0 {
        return false;
    }
    let mut reach = vec![false; n as usize + 1];
    reach[0] = true;
    for k in 1..=n as usize {
        reach[k] = gens.iter().any(|&g| g as usize <= k && reach[k - g as usize]);
    }
    reach[n as usize]
}

/// `τ_i = min{h ≥ 1 : (h+1) g_i ∈ ⟨g_1..g_{i−1}⟩}` for `i = 2..n`, searched
/// up to `h + 1 = g_1`.
pub fn tau_values(gens: &[i64]) -> Result<Vec<i64>, PreconditionError> {
    if gens.is_empty() || gens.windows(2).any(|w| w[0] >= w[1]) || gens[0] <= 0 {
        return Err(violated("generators must be positive and ascending"));
    }
    let g1 = gens[0];
    (1..gens.len())
        .map(|i| {
            (1..g1)
                .find(|&h| in_monoid(&gens[..i], (h + 1) * gens[i]))
                .ok_or_else(|| violated(format!("no τ for g_{} = {} below g_1 = {g1}", i + 1, gens[i])))
        })
        .collect()
}

/// Generators, `τ_2..τ_n`, and `Ap(S, g_1)` ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneBranchProfile {
    pub generators: Vec<i64>,
    pub tau: Vec<i64>,
    pub apery: Vec<i64>,
}

impl PlaneBranchProfile {
    pub fn new(gens: &[i64]) -> Result<Self, PreconditionError> {
        let s = NumericalSemigroup::new(gens)?;
        Self::of(&s)
    }

    pub fn of(s: &NumericalSemigroup) -> Result<Self, PreconditionError> {
        let generators = s.generators().to_vec();
        if generators == [1] {
            return Ok(PlaneBranchProfile { generators, tau: Vec::new(), apery: vec![0] });
        }
        let tau = tau_values(&generators)?;
        let apery = s.apery(generators[0]);
        let p = PlaneBranchProfile { generators, tau, apery };
        if !p.conditions_hold() {
            return Err(violated(format!("{:?} is not the semigroup of a plane branch", p.generators)));
        }
        Ok(p)
    }

    pub fn e(&self) -> i64 {
        self.generators[0]
    }

    pub fn semigroup(&self) -> NumericalSemigroup {
        NumericalSemigroup::new(&self.generators).expect("valid generators")
    }

    /// `{Σ λ_i g_i : 0 ≤ λ_i ≤ τ_i}` sorted.
    pub fn tau_sums(&self) -> Vec<i64> {
        let mut sums = vec![0];
        for (g, t) in self.generators[1..].iter().zip(&self.tau) {
            sums = sums.iter().flat_map(|s| (0..=*t).map(move |l| s + l * g)).collect();
        }
        sums.sort_unstable();
        sums
    }

    fn conditions_hold(&self) -> bool {
        let g = &self.generators;
        self.tau_sums() == self.apery && (1..g.len() - 1).all(|i| (self.tau[i - 1] + 1) * g[i] < g[i + 1])
    }

    /// Failures of `ω_i > (i−1)e` and `ω_i − ω_{i−1} > e`.
    pub fn apery_gap_violations(&self) -> Vec<String> {
        let e = self.e();
        let w = &self.apery;
        let mut out = Vec::new();
        for i in 1..w.len() {
            if w[i] <= i as i64 * e {
                out.push(format!("ω_{} = {} ≤ {}", i + 1, w[i], i as i64 * e));
            }
            if w[i] - w[i - 1] <= e {
                out.push(format!("ω_{} − ω_{} = {} ≤ {e}", i + 1, i, w[i] - w[i - 1]));
            }
        }
        out
    }

    /// `u_e = u_j + u_{e−j+1}` for all `j`.
    pub fn apery_symmetry_violations(&self) -> Vec<String> {
        let w = &self.apery;
        let n = w.len();
        (0..n)
            .filter(|&j| w[n - 1] != w[j] + w[n - 1 - j])
            .map(|j| format!("u_{n} = {} ≠ u_{} + u_{} = {}", w[n - 1], j + 1, n - j, w[j] + w[n - 1 - j]))
            .collect()
    }
}

pub fn is_plane_branch(gens: &[i64]) -> bool {
    PlaneBranchProfile::new(gens).is_ok()
}

/// The shifted set `A′ = {ω_i − (i−1)e}` and the semigroup it generates
/// with `e`; checks that `A′` is that semigroup's Apéry set.
pub fn blowup_numerical(p: &PlaneBranchProfile) -> Result<NumericalSemigroup, PreconditionError> {
    let e = p.e();
    let shifted: Vec<i64> = p.apery.iter().enumerate().map(|(i, w)| w - i as i64 * e).collect();
    let mut residues: Vec<i64> = shifted.iter().map(|a| a.rem_euclid(e)).collect();
    residues.sort_unstable();
    if shifted.iter().any(|&a| a < 0) || residues != (0..e).collect::<Vec<_>>() {
        return Err(violated(format!("{shifted:?} is not a complete residue system mod {e}")));
    }
    let c = (shifted.iter().max().unwrap() - e + 1).max(0);
    let member = |n: i64| shifted.iter().any(|&a| n >= a && (n - a) % e == 0);
    let elems: Vec<i64> = (0..=c).filter(|&n| member(n)).collect();
    let top = c + shifted.iter().max().unwrap();
    for &a in &elems {
        for &b in &elems {
            if a + b <= top && !member(a + b) {
                return Err(violated(format!("{a} + {b} escapes the shifted set's span")));
            }
        }
    }
    let s = NumericalSemigroup::from_elements(&elems, c).ok_or_else(|| violated("shifted set spans no semigroup"))?;
    let mut sorted = shifted.clone();
    sorted.sort_unstable();
    if s.apery(e) != sorted {
        return Err(violated(format!("{sorted:?} is not the Apéry set of the blowup")));
    }
    Ok(s)
}

/// `(u_j − (j−1)e_1, v_k − (k−1)e_2)`, 1-based indices.
pub fn omega_jk(u: &[i64], v: &[i64], e: &Point, j: usize, k: usize) -> Result<Point, PreconditionError> {
    if j == 0 || k == 0 || j > u.len() || k > v.len() {
        return Err(violated(format!("index ({j},{k}) outside 1..{} × 1..{}", u.len(), v.len())));
    }
    Ok(Point::from([u[j - 1] - (j as i64 - 1) * e[0], v[k - 1] - (k as i64 - 1) * e[1]]))
}

/// Levels `i` and their ray-aware comparison `A_i` against `A_i′ + (i−1)e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftRow {
    pub i: usize,
    pub missing: Vec<Point>,
    pub extra: Vec<Point>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftReport {
    pub e: Point,
    pub rows: Vec<ShiftRow>,
    /// Level counts of `A` and `A′` when they differ.
    pub count_mismatch: Option<(usize, usize)>,
}

impl ShiftReport {
    pub fn passes(&self) -> bool {
        self.count_mismatch.is_none() && self.rows.iter().all(|r| r.missing.is_empty() && r.extra.is_empty())
    }
}

impl fmt::Display for ShiftReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some((n, m)) = self.count_mismatch {
            writeln!(f, "level counts differ: {n} vs {m}")?;
        }
        for r in &self.rows {
            let ok = if r.missing.is_empty() && r.extra.is_empty() { "PASS" } else { "FAIL" };
            write!(f, "A{} = A{}' + {}e  {ok}", r.i, r.i, r.i - 1)?;
            if let Some(m) = r.missing.first() {
                write!(f, "  missing {m}")?;
            }
            if let Some(x) = r.extra.first() {
                write!(f, "  extra {x}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Compares `A_i` with `A_i′ + (i−1)e` on a window past both frames.
pub fn compare_shift(p: &LevelPartition, prime: &LevelPartition, e: &Point) -> ShiftReport {
    let n = p.n().min(prime.n());
    let reach = prime.frame.cap() + &e.scale(n as i64);
    let hi = &p.frame.cap().join(&reach) + &Point::splat(2, 1);
    let rows = (1..=n)
        .map(|i| {
            let shift = e.scale(i as i64 - 1);
            let actual = p.expand_level(i, &hi);
            let expected: PointSet =
                prime.expand_level(i, &(&hi - &shift)).iter().map(|a| a + &shift).collect();
            ShiftRow {
                i,
                missing: expected.difference(&actual).cloned().collect(),
                extra: actual.difference(&expected).cloned().collect(),
            }
        })
        .collect();
    ShiftReport { e: e.clone(), rows, count_mismatch: (p.n() != prime.n()).then_some((p.n(), prime.n())) }
}

/// The data a two-branch plane curve is checked against.
#[derive(Clone, Debug)]
pub struct PlaneCurveData {
    pub e: Point,
    pub profiles: [PlaneBranchProfile; 2],
    pub levels: LevelPartition,
}

fn planar_local(s: &GoodSemigroup) -> Result<(), PreconditionError> {
    if s.dim() != 2 || !s.is_local() {
        return Err(violated("requires a local semigroup of dimension 2"));
    }
    Ok(())
}

fn profiles(s: &GoodSemigroup) -> Result<[PlaneBranchProfile; 2], PreconditionError> {
    let prof = |h| -> Result<PlaneBranchProfile, PreconditionError> {
        let n = s.projection(IndexSet::singleton(2, h))?.to_numerical().ok_or_else(|| violated("projection"))?;
        PlaneBranchProfile::of(&n)
    };
    Ok([prof(0)?, prof(1)?])
}

/// Checks every hypothesis of the shift theorem and returns the data.
pub fn plane_curve_data(s: &GoodSemigroup) -> Result<PlaneCurveData, PreconditionError> {
    planar_local(s)?;
    let e = s.multiplicity().clone();
    if !s.delta_union_nonempty(&e) {
        return Err(violated(format!("Δ^S({e}) is empty: the blowup is local")));
    }
    let profiles = profiles(s)?;
    if profiles[0].e() != e[0] || profiles[1].e() != e[1] {
        return Err(violated("multiplicity differs from the projections' multiplicities"));
    }
    if !s.is_symmetric() {
        return Err(violated("not symmetric"));
    }
    let levels = apery_levels(s, &e)?;
    let ideal = GoodIdeal::principal(s, &e)?;
    if !is_well_behaved(s, &ideal, &levels) {
        return Err(violated("Apéry set is not well-behaved"));
    }
    Ok(PlaneCurveData { e, profiles, levels })
}

/// `A_i = A_i′ + (i−1)e` with `A′` the levels of `Ap(S_1′ × S_2′, e)`.
pub fn verify_apery_shift(s: &GoodSemigroup) -> Result<ShiftReport, PreconditionError> {
    let data = plane_curve_data(s)?;
    let b1 = blowup_numerical(&data.profiles[0])?;
    let b2 = blowup_numerical(&data.profiles[1])?;
    let prime = apery_nonlocal_d2(&b1, &b2, &data.e)?;
    Ok(compare_shift(&data.levels, &prime, &data.e))
}

/// The same comparison against a caller-supplied local blowup `S′`.
pub fn verify_apery_shift_local(s: &GoodSemigroup, blowup: &GoodSemigroup) -> Result<ShiftReport, PreconditionError> {
    planar_local(s)?;
    if blowup.dim() != 2 {
        return Err(violated("blowup must have dimension 2"));
    }
    let e = s.multiplicity().clone();
    let p = apery_levels(s, &e)?;
    let prime = partition(&apery_set(blowup, &e)?)?;
    Ok(compare_shift(&p, &prime, &e))
}

/// Reconstruction from two plane branches whose two-branch blowup splits.
#[derive(Clone, Debug)]
pub struct TwoBranchBlowupResult {
    pub s: GoodSemigroup,
    pub e: Point,
    pub blowups: [NumericalSemigroup; 2],
    pub prime_levels: LevelPartition,
    pub shift: ShiftReport,
}

/// `S = ⋃_k (A + k e)` with `A_i = A_i′ + (i−1)e`; validated as a local
/// symmetric good semigroup whose Apéry set is well-behaved and shifts back.
pub fn reconstruct_from_blowup(
    p1: &PlaneBranchProfile,
    p2: &PlaneBranchProfile,
) -> Result<TwoBranchBlowupResult, PreconditionError> {
    let e = Point::from([p1.e(), p2.e()]);
    let b1 = blowup_numerical(p1)?;
    let b2 = blowup_numerical(p2)?;
    let prime = apery_nonlocal_d2(&b1, &b2, &e)?;
    let n = prime.n() as i64;
    let in_a = |x: &Point| {
        (1..=prime.n()).any(|i| {
            let y = x - &e.scale(i as i64 - 1);
            y.is_nonneg() && prime.level_of(&y) == Some(i)
        })
    };
    let member = |x: &Point| {
        let mut y = x.clone();
        loop {
            if !y.is_nonneg() {
                return false;
            }
            if in_a(&y) {
                return true;
            }
            y = &y - &e;
        }
    };
    let cap = prime.frame.cap() + &e.scale(n + 1);
    let s = GoodSemigroup::from_membership(&cap, member)?;
    let report = s.validate(1);
    if !report.is_good() {
        return Err(violated(format!("reconstruction is not good: {}", report.violations[0])));
    }
    let shift = verify_apery_shift(&s)?;
    if !shift.passes() {
        return Err(violated(format!("reconstruction does not shift back:\n{shift}")));
    }
    Ok(TwoBranchBlowupResult { s, e, blowups: [b1, b2], prime_levels: prime, shift })
}

/// Absolutes of each level against `{ω_{j,k} + (i−1)e : j + k − 1 = i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbsoluteRow {
    pub i: usize,
    pub measured: Vec<Point>,
    pub predicted: Vec<Point>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbsoluteReport {
    pub rows: Vec<AbsoluteRow>,
    /// Absolutes `α ∈ A_{i−1}`, `i < N`, with no absolute of `A_i` in
    /// `Δ^S(α + e)`.
    pub chain_failures: Vec<Point>,
}

impl AbsoluteReport {
    pub fn passes(&self) -> bool {
        self.chain_failures.is_empty() && self.rows.iter().all(|r| r.measured == r.predicted)
    }
}

impl fmt::Display for AbsoluteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &[Point]| v.iter().map(Point::to_string).collect::<Vec<_>>().join(" ");
        for r in &self.rows {
            let ok = if r.measured == r.predicted { "PASS" } else { "FAIL" };
            writeln!(f, "A{}  {ok}  measured {{{}}}  predicted {{{}}}", r.i, show(&r.measured), show(&r.predicted))?;
        }
        for a in &self.chain_failures {
            writeln!(f, "no absolute of the next level in Δ^S({a} + e)")?;
        }
        Ok(())
    }
}

/// The absolute-element comparison without the shift theorem's hypotheses;
/// `u`, `v` are the projections' Apéry sets.
pub fn absolute_levels_report(s: &GoodSemigroup) -> Result<AbsoluteReport, PreconditionError> {
    planar_local(s)?;
    let e = s.multiplicity().clone();
    let p = apery_levels(s, &e)?;
    let u = s.projection(IndexSet::singleton(2, 0))?.to_numerical().unwrap().apery(e[0]);
    let v = s.projection(IndexSet::singleton(2, 1))?.to_numerical().unwrap().apery(e[1]);
    let mut rows = Vec::new();
    let mut chain_failures = Vec::new();
    let abs: Vec<Vec<Point>> = (1..=p.n()).map(|i| level_absolutes(s, &p, i)).collect();
    for i in 1..=p.n() {
        let mut predicted = Vec::new();
        for j in 1..=u.len() {
            for k in 1..=v.len() {
                if j + k - 1 == i {
                    predicted.push(&omega_jk(&u, &v, &e, j, k)? + &e.scale(i as i64 - 1));
                }
            }
        }
        predicted.sort_by_key(|a| a[0]);
        rows.push(AbsoluteRow { i, measured: abs[i - 1].clone(), predicted });
        if i > 1 && i < p.n() {
            for a in &abs[i - 2] {
                let near = s.delta_union_in_frame(&p.frame, &(a + &e));
                if !abs[i - 1].iter().any(|t| near.contains(t)) {
                    chain_failures.push(a.clone());
                }
            }
        }
    }
    Ok(AbsoluteReport { rows, chain_failures })
}

/// The absolute-element description under the shift theorem's hypotheses.
pub fn check_absolute_levels(s: &GoodSemigroup) -> Result<AbsoluteReport, PreconditionError> {
    plane_curve_data(s)?;
    absolute_levels_report(s)
}

/// Levelwise differences between the canonical and the domination
/// partitions of `Ap(S, e)`.
pub fn compare_partitions_planecurve(s: &GoodSemigroup) -> Result<Vec<String>, PreconditionError> {
    let e = s.multiplicity().clone();
    let a = apery_set(s, &e)?;
    let p = partition(&a)?;
    let b = domination_partition(&a);
    let mut out = Vec::new();
    if p.n() != b.n() {
        out.push(format!("{} levels against {}", p.n(), b.n()));
    }
    for (i, (x, y)) in p.levels.iter().zip(&b.levels).enumerate() {
        if x != y {
            let d: Vec<String> = x.symmetric_difference(y).map(Point::to_string).collect();
            out.push(format!("level {} differs at {}", i + 1, d.join(" ")));
        }
    }
    Ok(out)
}

/// Properties of plane-curve semigroups as executable checks.
pub mod invariants {
    use super::*;
    use crate::wellbehaved::{classify_level, Tag};

    /// Absolute elements of `S` lie in `Ap(S, e)`.
    pub fn absolutes_in_apery(s: &GoodSemigroup, data: &PlaneCurveData) -> Vec<String> {
        let hi = data.levels.frame.cap() + &data.e;
        s.absolute_elements(&hi)
            .into_iter()
            .filter(|a| data.levels.level_of(a).is_none())
            .map(|a| format!("absolute {a} outside the Apéry set"))
            .collect()
    }

    /// Below `γ + e`, every element shares a coordinate with an absolute or
    /// a ray foot of its level, and no level needs the clauses for
    /// one-sided staircases.
    pub fn staircase_near_absolutes(s: &GoodSemigroup, data: &PlaneCurveData) -> Vec<String> {
        let top = &s.gamma() + &data.e;
        let ideal = match GoodIdeal::principal(s, &data.e) {
            Ok(i) => i,
            Err(err) => return vec![err.to_string()],
        };
        let mut out = Vec::new();
        for i in 1..=data.levels.n() {
            let ls = match classify_level(s, &ideal, &data.levels, i) {
                Ok(ls) => ls,
                Err(err) => {
                    out.push(err.to_string());
                    continue;
                }
            };
            let marks: Vec<&Point> = ls.absolutes.iter().chain(&ls.theta0).chain(&ls.theta_last).collect();
            for a in data.levels.level(i).iter().filter(|a| data.levels.frame.can_ll(a, &top)) {
                if !marks.iter().any(|t| t[0] == a[0] || t[1] == a[1]) {
                    out.push(format!("{a} in level {i} shares no coordinate with an absolute or a ray"));
                }
            }
            out.extend(
                ls.tags
                    .iter()
                    .filter(|(_, c)| matches!(c.tag, Tag::IV | Tag::V))
                    .map(|(a, c)| format!("{a} in level {i} tagged {}", c.tag.roman())),
            );
        }
        out
    }

    /// Both projections satisfy the Apéry gap and symmetry identities.
    pub fn profile_identities(data: &PlaneCurveData) -> Vec<String> {
        data.profiles
            .iter()
            .flat_map(|p| p.apery_gap_violations().into_iter().chain(p.apery_symmetry_violations()))
            .collect()
    }

    /// A ray of level `i` parallel to axis `h` sits at
    /// `γ_h + e_h − u_{e_h − j + 1}` with `j = i − e_{h'}`.
    pub fn ray_positions(s: &GoodSemigroup, data: &PlaneCurveData) -> Vec<String> {
        let p = &data.levels;
        let g = s.gamma();
        let e = &data.e;
        let mut out = Vec::new();
        for i in 1..=p.n() {
            for h in 0..2 {
                let other = 1 - h;
                let u = &data.profiles[h].apery;
                for a in p.level(i).iter().filter(|a| p.frame.is_ray(a, other) && !p.frame.is_ray(a, h)) {
                    let j = i as i64 - e[other];
                    if j < 1 || j > e[h] {
                        out.push(format!("level {i} has a ray at {a} but j = {j} is out of range"));
                        continue;
                    }
                    let expected = g[h] + e[h] - u[(e[h] - j) as usize];
                    if a[h] != expected {
                        out.push(format!("level {i}: ray at coordinate {} = {}, expected {expected}", h + 1, a[h]));
                    }
                }
            }
        }
        out
    }

    /// `γ = ω_{e_1,e_2} + (e_1 + e_2 − 2) e`.
    pub fn gamma_identity(s: &GoodSemigroup, data: &PlaneCurveData) -> Vec<String> {
        let [p1, p2] = &data.profiles;
        let e = &data.e;
        let w = match omega_jk(&p1.apery, &p2.apery, e, p1.apery.len(), p2.apery.len()) {
            Ok(w) => w,
            Err(err) => return vec![err.to_string()],
        };
        let predicted = &w + &e.scale(e[0] + e[1] - 2);
        if predicted == s.gamma() {
            Vec::new()
        } else {
            vec![format!("γ = {} but ω_(e1,e2) + (e−2)e = {predicted}", s.gamma())]
        }
    }

    pub fn all(s: &GoodSemigroup, data: &PlaneCurveData) -> Vec<(&'static str, Vec<String>)> {
        vec![
            ("absolutes in the Apéry set", absolutes_in_apery(s, data)),
            ("staircase near absolutes", staircase_near_absolutes(s, data)),
            ("projection identities", profile_identities(data)),
            ("ray positions", ray_positions(s, data)),
            ("conductor from the last omega", gamma_identity(s, data)),
        ]
    }
}
