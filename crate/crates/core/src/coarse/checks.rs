use std::collections::{BTreeMap, BTreeSet};

use serde_json::json;

use super::{ball, Budget, EntourageSpec, Verdict};
use crate::conj::{fg_conjugacy_class, quotient_closure, saturate};
use crate::error::{Error, Result};
use crate::group::{subgroup_ball, Element, Group};

/// Enumerated points and whether the enumeration exhausted the group.
struct Sample {
    points: Vec<Element>,
    exhausted: bool,
}

/// The ball of radius `budget.radius`, grown layer by layer past that radius
/// until at least `budget.witnesses` points lie beyond the skipped prefix.
fn sample(ctx: &dyn Group, budget: &Budget) -> Sample {
    let wanted = budget.skip + budget.witnesses;
    let mut radius = budget.radius;
    loop {
        let layers = ctx.layers(radius, budget.cap);
        let total: usize = layers.iter().map(Vec::len).sum();
        let exhausted = layers.len() <= radius && total < budget.cap;
        if exhausted || total >= budget.cap || total >= wanted {
            return Sample { points: layers.concat(), exhausted };
        }
        radius += 1;
    }
}

fn finite_ctx(ctx: &dyn Group, budget: &Budget) -> Option<Sample> {
    let s = sample(ctx, budget);
    (ctx.is_finite_hint() == Some(true) || s.exhausted).then_some(s)
}

/// A subset of the space is bounded iff it is finite, since every ball `x^F`
/// of a finite set is finite. Inputs are finite by type, so this always holds.
pub fn is_bounded(_ctx: &dyn Group, a: &[Element], budget: &Budget) -> Verdict {
    let distinct: BTreeSet<&Element> = a.iter().collect();
    Verdict::holds(vec![], budget.used()).with_certificate(json!({ "size": distinct.len() }))
}

/// `|E[x]| ≤ n` for every enumerated point beyond the first `budget.skip`.
///
/// Finite groups hold vacuously: the whole space is bounded. `Fails` needs
/// `budget.witnesses` distinct violating points.
pub fn is_n_discrete(ctx: &dyn Group, e: &EntourageSpec, n: usize, budget: &Budget) -> Verdict {
    if let Some(s) = finite_ctx(ctx, budget) {
        let order = s.exhausted.then_some(s.points.len());
        return Verdict::holds(vec![], budget.used()).with_certificate(json!({ "bounded_space": true, "order": order }));
    }
    let points = sample(ctx, budget).points;
    let beyond = points.get(budget.skip..).unwrap_or(&[]);
    if beyond.is_empty() {
        return Verdict::unknown(vec![], budget.used()).with_certificate(json!({ "checked": 0 }));
    }
    let mut violators = Vec::new();
    let mut max_ball = 0;
    for x in beyond {
        let size = ball(ctx, x, e).len();
        max_ball = max_ball.max(size);
        if size > n {
            violators.push(x.clone());
            if violators.len() >= budget.witnesses {
                let sizes: Vec<usize> = violators.iter().map(|v| ball(ctx, v, e).len()).collect();
                return Verdict::fails(violators, budget.used()).with_certificate(json!({ "n": n, "ball_sizes": sizes }));
            }
        }
    }
    let cert = json!({ "n": n, "checked": beyond.len(), "max_ball": max_ball });
    if violators.is_empty() {
        Verdict::holds(vec![], budget.used()).with_certificate(cert)
    } else {
        Verdict::unknown(violators, budget.used()).with_certificate(cert)
    }
}

pub fn is_discrete(ctx: &dyn Group, e: &EntourageSpec, budget: &Budget) -> Verdict {
    is_n_discrete(ctx, e, 1, budget)
}

/// The connected component of `a`, which is its conjugacy class.
pub fn component(ctx: &dyn Group, a: &Element, budget: &Budget) -> Verdict {
    fg_conjugacy_class(ctx, a, budget).0
}

/// Every entourage moves points of only finitely many components.
///
/// Seeds beyond `budget.skip` whose ball is not a singleton are grouped by
/// their (saturated) conjugacy class; `Fails` once `budget.witnesses` distinct
/// moved classes are certified.
pub fn is_direct_union(ctx: &dyn Group, e: &EntourageSpec, seeds: &[Element], budget: &Budget) -> Verdict {
    if finite_ctx(ctx, budget).is_some() {
        return Verdict::holds(vec![], budget.used()).with_certificate(json!({ "bounded_space": true }));
    }
    let beyond = seeds.get(budget.skip..).unwrap_or(&[]);
    let mut classes: Vec<BTreeSet<Element>> = Vec::new();
    let mut witnesses = Vec::new();
    let mut unresolved = 0;
    for x in beyond {
        if ball(ctx, x, e).len() == 1 || classes.iter().any(|c| c.contains(x)) {
            continue;
        }
        let (v, trace) = fg_conjugacy_class(ctx, x, budget);
        if !v.is_holds() {
            unresolved += 1;
            continue;
        }
        classes.push(trace.class().iter().cloned().collect());
        witnesses.push(x.clone());
        if witnesses.len() >= budget.witnesses {
            let sizes: Vec<usize> = classes.iter().map(BTreeSet::len).collect();
            return Verdict::fails(witnesses, budget.used()).with_certificate(json!({ "component_sizes": sizes }));
        }
    }
    let cert = json!({ "checked": beyond.len(), "moved_components": witnesses.len(), "unresolved": unresolved });
    if witnesses.is_empty() && unresolved == 0 && !beyond.is_empty() {
        Verdict::holds(vec![], budget.used()).with_certificate(cert)
    } else {
        Verdict::unknown(witnesses, budget.used()).with_certificate(cert)
    }
}

fn central_fn(ctx: &dyn Group) -> impl Fn(&Element) -> bool + '_ {
    move |x: &Element| ctx.is_central(x).unwrap_or_else(|| ctx.central_by_generators(x))
}

/// Searches a finite `F` with `g^H ⊆ g^F` for every enumerated `g`.
///
/// The candidate is a set of representatives of `H` modulo its central
/// elements; it is verified against an `H`-ball of radius `budget.radius`.
/// Without a finite candidate, looks for elements whose `H`-orbits are
/// unbounded: either non-saturating within `budget.rounds`, or exactly
/// saturated with pairwise distinct sizes above 1. `budget.witnesses` of them give
/// `Fails`.
pub fn cellularity_criterion(ctx: &dyn Group, h_gens: &[Element], budget: &Budget) -> Result<Verdict> {
    let central = central_fn(ctx);
    let rounds = if ctx.is_finite_hint() == Some(true) { budget.cap } else { budget.rounds };
    let q = quotient_closure(ctx, h_gens, &central, rounds, budget.cap);
    let points = ctx.enumerate_capped(budget.radius, budget.cap);
    if q.finite {
        let f = q.representatives;
        let h_ball = subgroup_ball(ctx, h_gens, budget.radius, budget.cap);
        for g in &points {
            let gf = ctx.conj_set(g, &f);
            if let Some(h) = h_ball.iter().find(|h| !gf.contains(&ctx.conj(g, h))) {
                return Ok(Verdict::fails(vec![g.clone(), h.clone()], budget.used())
                    .with_certificate(json!({ "reason": "representatives do not cover the orbit" })));
            }
        }
        let reps: Vec<String> = f.iter().map(|x| ctx.format(x)).collect();
        let cert = json!({ "F": reps, "points": points.len(), "h_sample": h_ball.len() });
        return Ok(Verdict::holds(f, budget.used()).with_certificate(cert));
    }

    let mut steps: BTreeSet<Element> = BTreeSet::from([ctx.identity()]);
    for h in h_gens {
        steps.insert(h.clone());
        steps.insert(ctx.invert(h));
    }
    let steps: Vec<Element> = steps.into_iter().collect();
    let mut exact: BTreeMap<usize, Element> = BTreeMap::new();
    let mut open: Vec<(Element, usize)> = Vec::new();
    for g in &points {
        let trace = saturate(ctx, g, &steps, budget.rounds, budget.cap);
        let size = trace.class().len();
        if !trace.terminated {
            open.push((g.clone(), size));
        } else if size > 1 {
            exact.entry(size).or_insert_with(|| g.clone());
        }
        if open.len() + exact.len() >= budget.witnesses {
            break;
        }
    }
    let count = open.len() + exact.len();
    let mut witnesses: Vec<Element> = exact.values().cloned().collect();
    witnesses.extend(open.iter().map(|(g, _)| g.clone()));
    let cert = json!({
        "exact_orbit_sizes": exact.keys().collect::<Vec<_>>(),
        "orbit_lower_bounds": open.iter().map(|(_, n)| *n).collect::<Vec<_>>(),
        "quotient_lower_bound": q.representatives.len(),
    });
    if count >= budget.witnesses {
        Ok(Verdict::fails(witnesses, budget.used()).with_certificate(cert))
    } else if q.representatives.len() > budget.cap {
        Err(Error::CapExceeded(budget.cap))
    } else {
        Ok(Verdict::unknown(witnesses, budget.used()).with_certificate(cert))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coarse::Status;
    use crate::zoo::{make_group, GroupSpec, Heisenberg, InfiniteDihedral, BlockShift};

    fn ctx(spec: GroupSpec) -> crate::group::GroupRef {
        make_group(&spec).unwrap().ctx
    }

    #[test]
    fn abelian_is_discrete() {
        for k in 1..=3 {
            let g = ctx(GroupSpec::zk(k));
            for r in 0..=2 {
                let e = EntourageSpec::new(g.as_ref(), g.enumerate(r));
                assert!(is_discrete(g.as_ref(), &e, &Budget::default()).is_holds());
            }
        }
    }

    #[test]
    fn infinite_dihedral_is_not_discrete() {
        let e = EntourageSpec::new(&InfiniteDihedral, [InfiniteDihedral::t_pow(1)]);
        let budget = Budget::default().with_radius(20);
        let v = is_discrete(&InfiniteDihedral, &e, &budget);
        assert!(v.is_fails());
        assert_eq!(v.witnesses.len(), 10);
        for w in &v.witnesses {
            assert_eq!(w.0[0], 1);
            let t = InfiniteDihedral::t_pow(1);
            assert_eq!(InfiniteDihedral.conj(w, &t), InfiniteDihedral.compose(w, &InfiniteDihedral::t_pow(2)));
        }
        // the default radius reaches too few reflections past the skip prefix
        assert_eq!(is_discrete(&InfiniteDihedral, &e, &Budget::default()).status, Status::Unknown);
    }

    #[test]
    fn finite_groups_are_vacuously_discrete() {
        let g = ctx(GroupSpec::symmetric(4));
        let e = EntourageSpec::generating(g.as_ref());
        let v = is_discrete(g.as_ref(), &e, &Budget::default());
        assert!(v.is_holds());
        assert_eq!(v.certificate.unwrap()["order"], 24);
    }

    #[test]
    fn heisenberg_powers_of_x_break_n_discreteness() {
        for n in 1..=4i64 {
            let k = n + 1;
            let movers: Vec<Element> = (-k..=k).map(|j| Heisenberg.pow(&Heisenberg::x(), j)).collect();
            let e = EntourageSpec::new(&Heisenberg, movers);
            let ball_y = ball(&Heisenberg, &Heisenberg::y(), &e);
            assert_eq!(ball_y.len() as i64, 2 * k + 1);
            assert!(is_n_discrete(&Heisenberg, &e, n as usize, &Budget::default()).is_fails());
        }
    }

    #[test]
    fn empty_and_finite_sets_are_bounded() {
        assert!(is_bounded(&Heisenberg, &[], &Budget::default()).is_holds());
        let refl: Vec<Element> = (0..100).map(InfiniteDihedral::reflection).collect();
        let v = is_bounded(&InfiniteDihedral, &refl, &Budget::default());
        assert_eq!(v.certificate.unwrap()["size"], 100);
    }

    #[test]
    fn components() {
        let s3 = ctx(GroupSpec::symmetric(3));
        let t = crate::group::PermGroup::symmetric(3).parse_cycles("(1 2)").unwrap();
        let v = component(s3.as_ref(), &t, &Budget::default());
        assert!(v.is_holds());
        assert_eq!(v.witnesses.len(), 3);
        let v = component(&Heisenberg, &Heisenberg::y(), &Budget::default());
        assert_eq!(v.status, Status::Unknown);
        assert!(v.witnesses.len() >= 51);
    }

    #[test]
    fn direct_unions() {
        let z2 = ctx(GroupSpec::zk(2));
        let e = EntourageSpec::generating(z2.as_ref());
        assert!(is_direct_union(z2.as_ref(), &e, &z2.enumerate(8), &Budget::default()).is_holds());

        let e = EntourageSpec::new(&InfiniteDihedral, [InfiniteDihedral::r()]);
        let budget = Budget::default().with_radius(20);
        let v = is_direct_union(&InfiniteDihedral, &e, &InfiniteDihedral.enumerate(20), &budget);
        assert!(v.is_fails());
        let mut seen = BTreeSet::new();
        for w in &v.witnesses {
            assert_eq!(w.0[0], 0);
            assert!(seen.insert(w.0[1].abs()));
        }
    }

    #[test]
    fn cellularity() {
        let z = ctx(GroupSpec::zk(2));
        let v = cellularity_criterion(z.as_ref(), &z.generators(), &Budget::default()).unwrap();
        assert!(v.is_holds());
        assert_eq!(v.witnesses, vec![z.identity()]);

        let v = cellularity_criterion(&Heisenberg, &[Heisenberg::x()], &Budget::default()).unwrap();
        assert!(v.is_fails());

        let g = BlockShift::new(21);
        let v = cellularity_criterion(&g, &[BlockShift::a()], &Budget::default()).unwrap();
        assert!(v.is_fails());

        let q = ctx(GroupSpec::q8xcyclic(&[0, 0]));
        let v = cellularity_criterion(q.as_ref(), &q.generators(), &Budget::default().with_radius(4)).unwrap();
        assert!(v.is_holds());
        assert_eq!(v.witnesses.len(), 4);
    }
}
