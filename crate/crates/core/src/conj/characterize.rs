use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::locally_finite_quotient_check;
use crate::coarse::{cellularity_criterion, is_discrete, is_n_discrete, Budget, EntourageSpec, Status, Verdict};
use crate::group::{generate_finite, Commutant, Element, FiniteGroup, GroupRef};

/// A coarse property of the conjugation space paired with the algebraic
/// condition it is equivalent to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Characterization {
    /// Discrete iff abelian (for infinite groups).
    Discreteness,
    /// `n`-discrete for some `n` iff the commutant is finite.
    BoundedClasses,
    /// Cellular iff the central quotient is locally finite.
    Cellularity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Agreement {
    Agree,
    Disagree,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CharacterizationReport {
    pub characterization: Characterization,
    pub group: String,
    pub algebraic: Status,
    pub algebraic_detail: Value,
    pub definitional: Status,
    pub definitional_detail: Value,
    pub agreement: Agreement,
}

fn agreement(a: Status, d: Status) -> Agreement {
    match (a, d) {
        (Status::Unknown, _) | (_, Status::Unknown) => Agreement::Inconclusive,
        (x, y) if x == y => Agreement::Agree,
        _ => Agreement::Disagree,
    }
}

fn bool_status(b: bool) -> Status {
    if b {
        Status::Holds
    } else {
        Status::Fails
    }
}

/// `Fails` if any verdict fails, `Holds` if all hold, `Unknown` otherwise.
fn combine(verdicts: &[Verdict]) -> Status {
    if verdicts.iter().any(Verdict::is_fails) {
        Status::Fails
    } else if verdicts.iter().all(Verdict::is_holds) {
        Status::Holds
    } else {
        Status::Unknown
    }
}

fn statuses(verdicts: &[Verdict]) -> Vec<Status> {
    verdicts.iter().map(|v| v.status).collect()
}

fn materialize(ctx: &GroupRef, budget: &Budget) -> Option<FiniteGroup> {
    if ctx.is_finite_hint() == Some(false) {
        return None;
    }
    generate_finite(&ctx.generators(), ctx, budget.cap).ok()
}

/// Conjugator sets `{e} ∪ ball(r)` for a few radii up to `budget.radius`.
fn sampled_entourages(ctx: &GroupRef, budget: &Budget) -> Vec<(usize, EntourageSpec)> {
    let mut radii = vec![1, 2, budget.radius];
    radii.retain(|&r| r <= budget.radius);
    radii.dedup();
    radii.into_iter().map(|r| (r, EntourageSpec::new(ctx.as_ref(), ctx.enumerate_capped(r, budget.cap)))).collect()
}

/// Evaluates both sides of a characterization on one group and compares them.
pub fn characterization_suite(which: Characterization, ctx: &GroupRef, budget: &Budget) -> CharacterizationReport {
    let (algebraic, algebraic_detail, definitional, definitional_detail) = match which {
        Characterization::Discreteness => discreteness(ctx, budget),
        Characterization::BoundedClasses => bounded_classes(ctx, budget),
        Characterization::Cellularity => cellularity(ctx, budget),
    };
    CharacterizationReport {
        characterization: which,
        group: ctx.name(),
        algebraic,
        algebraic_detail,
        definitional,
        definitional_detail,
        agreement: agreement(algebraic, definitional),
    }
}

type Sides = (Status, Value, Status, Value);

fn discreteness(ctx: &GroupRef, budget: &Budget) -> Sides {
    if let Some(f) = materialize(ctx, budget) {
        let singletons = f.class_partition().iter().all(|c| c.len() == 1);
        return (
            bool_status(f.is_abelian()),
            json!({ "abelian": f.is_abelian(), "order": f.order() }),
            bool_status(singletons),
            json!({ "all_classes_singletons": singletons }),
        );
    }
    let abelian = ctx.generators_commute();
    let verdicts: Vec<Verdict> =
        sampled_entourages(ctx, budget).iter().map(|(_, e)| is_discrete(ctx.as_ref(), e, budget)).collect();
    let radii: Vec<usize> = sampled_entourages(ctx, budget).iter().map(|(r, _)| *r).collect();
    (
        bool_status(abelian),
        json!({ "abelian": abelian }),
        combine(&verdicts),
        json!({ "entourage_radii": radii, "statuses": statuses(&verdicts) }),
    )
}

fn bounded_classes(ctx: &GroupRef, budget: &Budget) -> Sides {
    if let Some(f) = materialize(ctx, budget) {
        let commutant = f.commutator_subgroup().order();
        let max_class = f.class_partition().iter().map(Vec::len).max().unwrap_or(1);
        return (
            Status::Holds,
            json!({ "commutant_order": commutant }),
            bool_status(max_class <= commutant),
            json!({ "max_class_size": max_class }),
        );
    }
    match ctx.commutant() {
        Commutant::Finite(m) => {
            let verdicts: Vec<Verdict> = sampled_entourages(ctx, budget)
                .iter()
                .map(|(_, e)| is_n_discrete(ctx.as_ref(), e, m, budget))
                .collect();
            (
                Status::Holds,
                json!({ "commutant_order": m }),
                combine(&verdicts),
                json!({ "n": m, "statuses": statuses(&verdicts) }),
            )
        }
        Commutant::Infinite => {
            let probes: Vec<usize> = vec![1, 2, 3];
            let verdicts: Vec<Verdict> = probes
                .iter()
                .map(|&n| {
                    let k = n as i64 + 1;
                    let movers: Vec<Element> = ctx
                        .generators()
                        .iter()
                        .flat_map(|s| (-k..=k).map(|j| ctx.pow(s, j)).collect::<Vec<_>>())
                        .collect();
                    is_n_discrete(ctx.as_ref(), &EntourageSpec::new(ctx.as_ref(), movers), n, budget)
                })
                .collect();
            let definitional = if verdicts.iter().all(Verdict::is_fails) {
                Status::Fails
            } else if verdicts.iter().any(Verdict::is_holds) {
                Status::Holds
            } else {
                Status::Unknown
            };
            (
                Status::Fails,
                json!({ "commutant": "infinite" }),
                definitional,
                json!({ "probed_n": probes, "statuses": statuses(&verdicts) }),
            )
        }
        Commutant::Unknown => (Status::Unknown, json!({ "commutant": "unknown" }), Status::Unknown, Value::Null),
    }
}

fn cellularity(ctx: &GroupRef, budget: &Budget) -> Sides {
    let gens = ctx.generators();
    let (algebraic, algebraic_detail) = match locally_finite_quotient_check(ctx.as_ref(), &gens, budget) {
        Ok(v) => (v.status, json!({ "quotient": v.certificate })),
        Err(e) => (Status::Unknown, json!({ "error": e.to_string() })),
    };
    let mut samples: Vec<Vec<Element>> = gens.iter().map(|g| vec![g.clone()]).collect();
    if gens.len() <= 6 {
        samples.push(gens.clone());
    }
    let mut verdicts = Vec::new();
    let mut errors = 0;
    for h in &samples {
        match cellularity_criterion(ctx.as_ref(), h, budget) {
            Ok(v) => verdicts.push(v),
            Err(_) => errors += 1,
        }
    }
    let mut definitional = combine(&verdicts);
    if errors > 0 && definitional == Status::Holds {
        definitional = Status::Unknown;
    }
    (
        algebraic,
        algebraic_detail,
        definitional,
        json!({ "subgroups": samples.len(), "statuses": statuses(&verdicts), "errors": errors }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo::{finite_catalog, make_group, GroupSpec};

    fn run(which: Characterization, spec: GroupSpec, budget: Budget) -> CharacterizationReport {
        characterization_suite(which, &make_group(&spec).unwrap().ctx, &budget)
    }

    #[test]
    fn free_abelian_is_discrete() {
        let r = run(Characterization::Discreteness, GroupSpec::zk(3), Budget::default().with_radius(4));
        assert_eq!((r.algebraic, r.definitional, r.agreement), (Status::Holds, Status::Holds, Agreement::Agree));
    }

    #[test]
    fn infinite_dihedral_is_not_discrete() {
        let r = run(Characterization::Discreteness, GroupSpec::dinf(), Budget::default().with_radius(20));
        assert_eq!((r.algebraic, r.definitional, r.agreement), (Status::Fails, Status::Fails, Agreement::Agree));
    }

    #[test]
    fn bounded_classes_on_quaternion_times_z() {
        let r = run(Characterization::BoundedClasses, GroupSpec::q8xcyclic(&[0]), Budget::default().with_radius(20));
        assert_eq!(r.algebraic_detail["commutant_order"], 2);
        assert_eq!(r.agreement, Agreement::Agree);
    }

    #[test]
    fn heisenberg_classes_are_unbounded() {
        let r = run(Characterization::BoundedClasses, GroupSpec::heisenberg(), Budget::default().with_radius(5));
        assert_eq!((r.algebraic, r.definitional), (Status::Fails, Status::Fails));
    }

    #[test]
    fn heisenberg_is_not_cellular() {
        let r = run(Characterization::Cellularity, GroupSpec::heisenberg(), Budget::default().with_radius(4));
        assert_eq!((r.algebraic, r.definitional, r.agreement), (Status::Fails, Status::Fails, Agreement::Agree));
    }

    #[test]
    fn finite_groups_never_disagree() {
        for spec in finite_catalog().into_iter().take(12) {
            for which in [Characterization::Discreteness, Characterization::BoundedClasses] {
                let r = run(which, spec.clone(), Budget::default());
                assert_eq!(r.agreement, Agreement::Agree, "{:?} on {}", which, r.group);
            }
        }
    }
}
