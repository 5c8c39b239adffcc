//! Levels of complements in direct products `S_1 × S_2` with product ideals
//! `E_1 × E_2`.

use crate::error::{IdealError, LevelError};
use crate::ideal::GoodIdeal;
use crate::lattice::{box_points, Frame, Point, PointSet};
use crate::levels::{level_function, partition, LevelPartition};
use crate::semigroup::{GoodSemigroup, Membership, NumericalSemigroup};

/// Factors, their ideals and partitions, and the product data.
#[derive(Clone, Debug)]
pub struct ProductContext {
    pub s1: GoodSemigroup,
    pub s2: GoodSemigroup,
    pub e1: GoodIdeal,
    pub e2: GoodIdeal,
    pub p1: LevelPartition,
    pub p2: LevelPartition,
    pub s: GoodSemigroup,
    pub e: GoodIdeal,
    pub p: LevelPartition,
}

impl ProductContext {
    pub fn new(e1: &GoodIdeal, e2: &GoodIdeal) -> Result<Self, LevelError> {
        let e = GoodIdeal::product(e1, e2)?;
        Ok(ProductContext {
            s1: e1.parent().clone(),
            s2: e2.parent().clone(),
            p1: partition(&e1.complement())?,
            p2: partition(&e2.complement())?,
            p: partition(&e.complement())?,
            s: e.parent().clone(),
            e1: e1.clone(),
            e2: e2.clone(),
            e,
        })
    }

    /// Principal ideals `w_1 + S_1` and `w_2 + S_2`.
    pub fn principal(s1: &GoodSemigroup, w1: &Point, s2: &GoodSemigroup, w2: &Point) -> Result<Self, LevelError> {
        Self::new(&GoodIdeal::principal(s1, w1)?, &GoodIdeal::principal(s2, w2)?)
    }

    pub fn d1(&self) -> usize {
        self.s1.dim()
    }

    pub fn split(&self, a: &Point) -> (Point, Point) {
        let d1 = self.d1();
        let idx1: Vec<usize> = (0..d1).collect();
        let idx2: Vec<usize> = (d1..a.dim()).collect();
        (a.project(&idx1), a.project(&idx2))
    }
}

/// `λ_1(α^(1)) + λ_2(α^(2)) − 1` for `α ∈ A`.
pub fn product_level(ctx: &ProductContext, a: &Point) -> Result<usize, LevelError> {
    if !ctx.s.try_contains(a)? || ctx.e.contains(a) {
        return Err(LevelError::NotInSemigroup(a.clone()));
    }
    let (a1, a2) = ctx.split(a);
    Ok(level_function(&ctx.s1, &ctx.p1, &a1)? + level_function(&ctx.s2, &ctx.p2, &a2)? - 1)
}

/// Closed form of the levels of `Ap(S_1 × S_2, w)` for numerical factors:
/// `A_1 = {(0,0)}` and
/// `A_{i+j} = ({(u_i, b) : v_j < b ≤ v_{j+1}} ∪ {(a, v_j) : u_i < a ≤ u_{i+1}}) ∩ S`,
/// with `u_{w_1+1} = v_{w_2+1} = ∞`.
pub fn apery_nonlocal_d2(
    s1: &NumericalSemigroup,
    s2: &NumericalSemigroup,
    w: &Point,
) -> Result<LevelPartition, IdealError> {
    if w.dim() != 2 || w[0] <= 0 || w[1] <= 0 {
        return Err(IdealError::NotPositive(w.clone()));
    }
    if !s1.contains(w[0]) || !s2.contains(w[1]) {
        return Err(IdealError::NotInSemigroup(w.clone()));
    }
    let cap = Point::from([s1.conductor() + w[0] + 1, s2.conductor() + w[1] + 1]);
    let mut u = s1.apery(w[0]);
    let mut v = s2.apery(w[1]);
    u.push(cap[0]);
    v.push(cap[1]);
    let in_s = |a: i64, b: i64| s1.contains(a) && s2.contains(b);
    let n = (w[0] + w[1]) as usize;
    let mut levels = vec![PointSet::new(); n];
    levels[0].insert(Point::from([0, 0]));
    for i in 0..w[0] as usize {
        for j in 0..w[1] as usize {
            let level = &mut levels[i + j + 1];
            for b in v[j] + 1..=v[j + 1] {
                if in_s(u[i], b) {
                    level.insert(Point::from([u[i], b]));
                }
            }
            for a in u[i] + 1..=u[i + 1] {
                if in_s(a, v[j]) {
                    level.insert(Point::from([a, v[j]]));
                }
            }
        }
    }
    Ok(LevelPartition { frame: Frame::new(cap), levels })
}

/// Product-specific properties as executable checks.
pub mod invariants {
    use super::*;

    /// Every point of a factor frame.
    fn factor_box(p: &LevelPartition) -> Vec<Point> {
        box_points(&Point::zero(p.dim()), p.frame.cap())
    }

    /// The level formula holds at every point of `A` in the product frame.
    pub fn level_sum(ctx: &ProductContext) -> Vec<String> {
        let mut out = Vec::new();
        for (i, level) in ctx.p.levels.iter().enumerate() {
            for a in level {
                match product_level(ctx, a) {
                    Ok(k) if k == i + 1 => {}
                    r => out.push(format!("{a}: level {} but formula gives {r:?}", i + 1)),
                }
            }
        }
        out
    }

    /// `α^(2) ∈ E_2` iff some `η^(1) > α^(1)` has `(η^(1), α^(2)) ∈ E`,
    /// and the same with the factors exchanged.
    pub fn factor_ideal_membership(ctx: &ProductContext) -> Vec<String> {
        let mut out = Vec::new();
        let one = |p: &LevelPartition| p.frame.cap() + &Point::splat(p.dim(), 1);
        for a in ctx.p.frame.points().into_iter().filter(|a| ctx.s.contains(a)) {
            let (a1, a2) = ctx.split(&a);
            let lhs = ctx.e2.contains(&a2);
            let rhs = box_points(&a1, &a1.join(&one(&ctx.p1)))
                .iter()
                .any(|h| *h != a1 && ctx.e.contains(&h.concat(&a2)));
            if lhs != rhs {
                out.push(format!("{a}: second factor membership {lhs}, witness above {rhs}"));
            }
            let lhs = ctx.e1.contains(&a1);
            let rhs = box_points(&a2, &a2.join(&one(&ctx.p2)))
                .iter()
                .any(|h| *h != a2 && ctx.e.contains(&a1.concat(h)));
            if lhs != rhs {
                out.push(format!("{a}: first factor membership {lhs}, witness above {rhs}"));
            }
        }
        out
    }

    /// Some `δ ∈ E` with `δ ∧ α = θ`, for `θ ≤ α`.
    fn meet_witness(e: &GoodIdeal, theta: &Point, alpha: &Point) -> bool {
        let d = theta.dim();
        let mut lo = vec![0; d];
        let mut hi = vec![None; d];
        for k in 0..d {
            if theta[k] < alpha[k] {
                lo[k] = theta[k];
                hi[k] = Some(theta[k]);
            } else {
                lo[k] = alpha[k];
            }
        }
        e.exists_in_box(&lo, &hi)
    }

    /// Consecutive `θ ≤ α` in one factor, with the other coordinate fixed
    /// in that factor's complement: the level stays iff some element of
    /// the ideal meets `α` in `θ`, and rises by one otherwise.
    pub fn consecutive_step(ctx: &ProductContext) -> Vec<String> {
        let mut out = Vec::new();
        let sides = [
            (&ctx.s1, &ctx.e1, &ctx.p1, &ctx.s2, &ctx.e2, &ctx.p2, false),
            (&ctx.s2, &ctx.e2, &ctx.p2, &ctx.s1, &ctx.e1, &ctx.p1, true),
        ];
        for (sf, ef, pf, sm, em, pm, swap) in sides {
            let fixed: Vec<Point> =
                factor_box(pf).into_iter().filter(|a| sf.contains(a) && !ef.contains(a)).collect();
            let moving: Vec<Point> = factor_box(pm).into_iter().filter(|a| sm.contains(a)).collect();
            for t in &moving {
                for al in moving.iter().filter(|al| t.lneq(al)) {
                    if box_points(t, al).iter().any(|x| x != t && x != al && sm.contains(x)) {
                        continue;
                    }
                    let stays = meet_witness(em, t, al);
                    for f in &fixed {
                        let join = |m: &Point| if swap { m.concat(f) } else { f.concat(m) };
                        let (Some(i), Some(j)) = (ctx.p.level_of(&join(t)), ctx.p.level_of(&join(al))) else {
                            out.push(format!("{f} with {t} < {al}: not both in the complement"));
                            continue;
                        };
                        let expected = if stays { i } else { i + 1 };
                        if j != expected {
                            out.push(format!("{f} with {t} < {al}: levels {i} -> {j}, expected {expected}"));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn all(ctx: &ProductContext) -> Vec<(&'static str, Vec<String>)> {
        vec![
            ("level sum formula", level_sum(ctx)),
            ("factor ideal membership", factor_ideal_membership(ctx)),
            ("consecutive step in a factor", consecutive_step(ctx)),
        ]
    }
}
