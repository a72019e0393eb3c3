//! Named suites that run both sides of each structural result across the zoo.
//!
//! A suite is a fixed list of cases. Each case records what was measured and
//! whether it matched the expected outcome; the aggregate passes when every
//! case does. Reports contain no timings, so equal inputs give equal JSON.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bergman::{
    commuting_conjugates_exhaustive, conjugacy_growth, level_group, level_order, transitivity_witness, BitSeq,
    Isometry, LimitElement,
};
use crate::coarse::{
    cellularity_criterion, compose_relations, entourage_product, invert_relation, is_direct_union, is_discrete,
    Budget, EntourageSpec, IndicatorGroup, Status, Verdict,
};
use crate::conj::{characterization_suite, fg_conjugacy_class, locally_finite_quotient_check, Agreement, Characterization};
use crate::error::{Error, Result};
use crate::group::{generate_finite, Element, FiniteGroup, Group, GroupRef, PermGroup, PermutationAction};
use crate::subgroups::{
    classify, cyclic_subgroup_seeds, hamiltonian_decomposition, is_dedekind, stabilizer_map_check,
    subgroup_space_discrete,
};
use crate::zoo::{block_orbit_size, finite_catalog, make_group, BlockShift, GroupSpec, Heisenberg, InfiniteDihedral};

/// Suite names in the order `all` runs them.
pub const SUITES: [&str; 9] = [
    "entourage-algebra",
    "theorem1",
    "theorem3",
    "theorem5",
    "bergman",
    "theorem7",
    "theorem10",
    "saturation",
    "direct-union",
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Case {
    pub name: String,
    pub group: String,
    pub passed: bool,
    pub detail: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Section {
    pub suite: String,
    pub passed: bool,
    pub cases: Vec<Case>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub budget: Budget,
    pub passed: bool,
    pub sections: Vec<Section>,
}

fn case(name: &str, group: impl Into<String>, passed: bool, detail: Value) -> Case {
    Case { name: name.to_string(), group: group.into(), passed, detail }
}

fn verdict_json(v: &Verdict, ctx: &dyn Group) -> Value {
    json!({
        "status": v.status,
        "witnesses": v.witnesses.iter().map(|w| ctx.format(w)).collect::<Vec<_>>(),
        "certificate": v.certificate,
    })
}

/// Runs one suite, or every suite for `"all"`.
pub fn run_suite(name: &str, seed: u64, budget: &Budget) -> Result<SuiteReport> {
    let names: Vec<&str> = if name == "all" {
        SUITES.to_vec()
    } else if SUITES.contains(&name) {
        vec![name]
    } else {
        return Err(Error::UnknownCheck(format!("suite {name}")));
    };
    let sections = names
        .into_iter()
        .map(|s| {
            let cases = run_section(s, seed, budget)?;
            Ok(Section { suite: s.to_string(), passed: cases.iter().all(|c| c.passed), cases })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SuiteReport {
        suite: name.to_string(),
        seed,
        budget: *budget,
        passed: sections.iter().all(|s| s.passed),
        sections,
    })
}

fn run_section(name: &str, seed: u64, budget: &Budget) -> Result<Vec<Case>> {
    match name {
        "entourage-algebra" => entourage_algebra(seed),
        "theorem1" => discreteness(budget),
        "theorem3" => bounded_classes(budget),
        "theorem5" => cellularity(budget),
        "bergman" => bergman(),
        "theorem7" => indicator(budget),
        "theorem10" => subgroup_space(budget),
        "saturation" => saturation(budget),
        "direct-union" => direct_union(budget),
        other => Err(Error::UnknownCheck(format!("suite {other}"))),
    }
}

fn materialized_catalog(max_order: usize) -> Result<Vec<(GroupSpec, GroupRef, FiniteGroup)>> {
    let mut out = Vec::new();
    for spec in finite_catalog() {
        let ctx = make_group(&spec)?.ctx;
        let f = generate_finite(&ctx.generators(), &ctx, 1 << 16)?;
        if f.order() <= max_order {
            out.push((spec, ctx, f));
        }
    }
    Ok(out)
}

/// Number of seeded `(F, F')` pairs per group.
pub const ALGEBRA_PAIRS: usize = 20;

fn entourage_algebra(seed: u64) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for (i, (_, ctx, f)) in materialized_catalog(48)?.into_iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i as u64));
        let all = f.elements().to_vec();
        let g = ctx.as_ref();
        let mut composition = 0;
        let mut inversion = 0;
        for _ in 0..ALGEBRA_PAIRS {
            let pick = |rng: &mut ChaCha8Rng| {
                let k = rng.gen_range(1..=3.min(all.len()));
                EntourageSpec::new(g, all.choose_multiple(rng, k).cloned())
            };
            let a = pick(&mut rng);
            let b = pick(&mut rng);
            let (ra, rb) = (a.relation(g, &all), b.relation(g, &all));
            composition += (compose_relations(&ra, &rb) == entourage_product(g, &a, &b).relation(g, &all)) as usize;
            inversion += (invert_relation(&ra) == a.inverse(g).relation(g, &all)) as usize;
        }
        cases.push(case(
            "relation algebra",
            ctx.name(),
            composition == ALGEBRA_PAIRS && inversion == ALGEBRA_PAIRS,
            json!({ "order": f.order(), "pairs": ALGEBRA_PAIRS, "composition_equal": composition, "inverse_equal": inversion }),
        ));
    }
    Ok(cases)
}

/// Radius used where the acceptance values need a deeper truncation than the default.
pub const DEEP_RADIUS: usize = 20;

fn deep(budget: &Budget) -> Budget {
    budget.with_radius(budget.radius.max(DEEP_RADIUS))
}

fn discreteness(budget: &Budget) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for k in 1..=3 {
        let ctx = make_group(&GroupSpec::zk(k))?.ctx;
        let statuses: Vec<Status> = (1..=budget.radius)
            .map(|r| is_discrete(ctx.as_ref(), &EntourageSpec::new(ctx.as_ref(), ctx.enumerate_capped(r, budget.cap)), budget).status)
            .collect();
        let passed = statuses.iter().all(|s| *s == Status::Holds);
        cases.push(case("discrete for every ball entourage", ctx.name(), passed, json!({ "radii": budget.radius, "statuses": statuses })));
    }
    let dinf: GroupRef = make_group(&GroupSpec::dinf())?.ctx;
    let v = is_discrete(dinf.as_ref(), &EntourageSpec::new(dinf.as_ref(), [InfiniteDihedral::t_pow(1)]), &deep(budget));
    let passed = v.is_fails() && v.witnesses.len() >= budget.witnesses;
    cases.push(case("not discrete, F = {e,t}", dinf.name(), passed, verdict_json(&v, dinf.as_ref())));

    let heis: GroupRef = make_group(&GroupSpec::heisenberg())?.ctx;
    let v = is_discrete(heis.as_ref(), &EntourageSpec::new(heis.as_ref(), [Heisenberg::x()]), budget);
    let passed = v.is_fails() && v.witnesses.len() >= budget.witnesses;
    cases.push(case("not discrete, F = {e,x}", heis.name(), passed, verdict_json(&v, heis.as_ref())));

    for (_, ctx, _) in materialized_catalog(usize::MAX)? {
        let r = characterization_suite(Characterization::Discreteness, &ctx, budget);
        cases.push(case(
            "abelian iff all classes are singletons",
            ctx.name(),
            r.agreement == Agreement::Agree,
            json!({ "abelian": r.algebraic, "singletons": r.definitional }),
        ));
    }
    Ok(cases)
}

fn bounded_classes(budget: &Budget) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for (_, ctx, _) in materialized_catalog(usize::MAX)? {
        let r = characterization_suite(Characterization::BoundedClasses, &ctx, budget);
        cases.push(case(
            "largest class at most the commutant",
            ctx.name(),
            r.definitional == Status::Holds,
            json!({ "commutant": r.algebraic_detail, "classes": r.definitional_detail }),
        ));
    }
    let ctx = make_group(&GroupSpec::q8xcyclic(&[0]))?.ctx;
    let r = characterization_suite(Characterization::BoundedClasses, &ctx, &deep(budget));
    let passed = r.definitional == Status::Holds && r.algebraic_detail["commutant_order"] == 2;
    cases.push(case(
        "2-discrete for every ball entourage",
        ctx.name(),
        passed,
        json!({ "commutant": r.algebraic_detail, "n_discrete": r.definitional_detail }),
    ));
    Ok(cases)
}

/// Number of conjugates `y^(x^j)`, `j = 0..=k`, counted directly.
pub fn heisenberg_orbit_prefix(k: i64) -> usize {
    let h = Heisenberg;
    (0..=k).map(|j| h.conj(&Heisenberg::y(), &h.pow(&Heisenberg::x(), j))).collect::<BTreeSet<_>>().len()
}

fn cellularity(budget: &Budget) -> Result<Vec<Case>> {
    let mut cases = Vec::new();

    let q: GroupRef = make_group(&GroupSpec::q8xcyclic(&[0, 0]))?.ctx;
    let gens = q.generators();
    let local = budget.with_radius(budget.radius.min(4));
    let mut samples: Vec<Vec<Element>> = gens.iter().map(|g| vec![g.clone()]).collect();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            samples.push(vec![gens[i].clone(), gens[j].clone()]);
        }
    }
    samples.push(gens.clone());
    for h in &samples {
        let v = cellularity_criterion(q.as_ref(), h, &local)?;
        let has_f = v.certificate.as_ref().is_some_and(|c| c.get("F").is_some());
        let label: Vec<String> = h.iter().map(|g| q.format(g)).collect();
        cases.push(case(
            "cellular with coset representatives",
            format!("{} H=<{}>", q.name(), label.join(",")),
            v.is_holds() && has_f,
            verdict_json(&v, q.as_ref()),
        ));
    }
    let lf = locally_finite_quotient_check(q.as_ref(), &gens, &local)?;
    cases.push(case("central quotient locally finite", q.name(), lf.is_holds(), verdict_json(&lf, q.as_ref())));

    let heis: GroupRef = make_group(&GroupSpec::heisenberg())?.ctx;
    let v = cellularity_criterion(heis.as_ref(), &[Heisenberg::x()], budget)?;
    cases.push(case("not cellular, H = <x>", heis.name(), v.is_fails(), verdict_json(&v, heis.as_ref())));
    let k = 100;
    let n = heisenberg_orbit_prefix(k);
    cases.push(case("|y^{x^0..x^k}| = k+1", heis.name(), n == k as usize + 1, json!({ "k": k, "orbit": n })));
    let lf = locally_finite_quotient_check(heis.as_ref(), &heis.generators(), budget)?;
    cases.push(case("central quotient not locally finite", heis.name(), lf.is_fails(), verdict_json(&lf, heis.as_ref())));

    let blocks: GroupRef = make_group(&GroupSpec::block_shift(21))?.ctx;
    let v = cellularity_criterion(blocks.as_ref(), &[BlockShift::a()], budget)?;
    cases.push(case("not cellular, H = <a>", blocks.name(), v.is_fails(), verdict_json(&v, blocks.as_ref())));
    let sizes: Vec<usize> = (0..=20).map(block_orbit_size).collect();
    let exact = sizes.iter().enumerate().all(|(i, s)| *s == i + 1);
    cases.push(case("orbit of block i has size i+1", blocks.name(), exact, json!({ "sizes": sizes })));
    let lf = locally_finite_quotient_check(blocks.as_ref(), &[BlockShift::a()], budget)?;
    cases.push(case("central quotient not locally finite", blocks.name(), lf.is_fails(), verdict_json(&lf, blocks.as_ref())));
    Ok(cases)
}

fn bergman() -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    let expected = [2usize, 8, 128, 32768];
    let orders: Vec<usize> = (1..=4).map(|n| level_group(n, 1 << 16).map(|g| g.order())).collect::<Result<_>>()?;
    let formula: Vec<u128> = (1..=4).map(level_order).collect();
    cases.push(case(
        "level orders",
        "G_1..G_4",
        orders == expected && formula.iter().zip(&expected).all(|(a, b)| *a == *b as u128),
        json!({ "orders": orders, "formula": formula }),
    ));

    let g3 = level_group(3, 1 << 16)?;
    let preserving = g3
        .elements()
        .iter()
        .map(Isometry::from_element)
        .collect::<Result<Vec<_>>>()?
        .iter()
        .filter(|g| g.is_distance_preserving())
        .count();
    cases.push(case("distance preserving", "G_3", preserving == g3.order(), json!({ "checked": g3.order(), "preserving": preserving })));

    let r = commuting_conjugates_exhaustive(3)?;
    cases.push(case(
        "far conjugates commute",
        "G_3",
        r.violations == 0,
        json!({ "triples": r.triples, "violations": r.violations, "forced_commutations": r.forced_commutations, "max_noncommuting": r.max_noncommuting }),
    ));

    let sizes = conjugacy_growth(&LimitElement::generator(1, 1), 4, 1 << 16)?;
    let growing = sizes.len() == 4 && sizes[..2] == [1, 2] && sizes.windows(2).all(|w| w[0] < w[1]);
    cases.push(case("class of the embedded generator grows", "G_1..G_4", growing, json!({ "sizes": sizes })));

    let transitive = (0..16u64).all(|t| {
        let w = transitivity_witness(BitSeq(t));
        w.apply(BitSeq(0)) == BitSeq(t) && w.is_distance_preserving()
    });
    cases.push(case("transitivity witnesses", "G_4", transitive, json!({ "targets": 16 })));
    Ok(cases)
}

fn indicator(budget: &Budget) -> Result<Vec<Case>> {
    let actions: Vec<(&str, PermGroup)> =
        vec![("S3", PermGroup::symmetric(3)), ("C4", PermGroup::cyclic(4)), ("S4", PermGroup::symmetric(4))];
    let mut cases = Vec::new();
    for (label, h) in actions {
        let points = h.degree();
        let hctx: GroupRef = std::sync::Arc::new(h.clone());
        let all_h = generate_finite(&h.generators(), &hctx, budget.cap)?.elements().to_vec();
        let g: IndicatorGroup = crate::coarse::indicator_group(PermutationAction::natural(std::sync::Arc::new(h)));
        let identity = g.conjugation_identity_holds(&all_h);
        let v = g.embedding_check(budget);
        cases.push(case(
            "point embedding is asymorphic",
            format!("{} over {label}", g.name()),
            identity && v.is_holds(),
            json!({ "pairs": points * all_h.len(), "identity_holds": identity, "embedding": verdict_json(&v, &g) }),
        ));
    }
    Ok(cases)
}

fn subgroup_space(budget: &Budget) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for (_, ctx, f) in materialized_catalog(64)? {
        let dedekind = is_dedekind(&f, 64)?;
        let ham = hamiltonian_decomposition(&f, 64)?;
        let consistent = ham.is_some() == (dedekind && !f.is_abelian());
        cases.push(case("decomposes iff nonabelian Dedekind", ctx.name(), consistent, classify(&f, 64)?));
    }
    let spot: Vec<(GroupSpec, bool)> = vec![
        (GroupSpec::quaternion(), true),
        (GroupSpec::q8xcyclic(&[3]), true),
        (GroupSpec::q8xcyclic(&[4]), false),
        (GroupSpec::dihedral(4), false),
        (GroupSpec::symmetric(3), false),
        (GroupSpec::symmetric(4), false),
    ];
    for (spec, expect) in spot {
        let ctx = make_group(&spec)?.ctx;
        let f = generate_finite(&ctx.generators(), &ctx, budget.cap)?;
        let got = hamiltonian_decomposition(&f, 64)?.is_some();
        cases.push(case("decomposition", ctx.name(), got == expect, json!({ "expected": expect, "decomposes": got })));
    }

    let dinf = make_group(&GroupSpec::dinf())?.ctx;
    let b = deep(budget);
    let v = subgroup_space_discrete(
        &dinf,
        &cyclic_subgroup_seeds(dinf.as_ref(), &b),
        &EntourageSpec::new(dinf.as_ref(), [InfiniteDihedral::t_pow(1)]),
        &b,
    );
    let passed = v.is_fails() && v.witnesses.len() >= budget.witnesses;
    cases.push(case("subgroup space not discrete, F = {e,t}", dinf.name(), passed, verdict_json(&v, dinf.as_ref())));

    let z = make_group(&GroupSpec::zk(1))?.ctx;
    let v = subgroup_space_discrete(&z, &cyclic_subgroup_seeds(z.as_ref(), budget), &EntourageSpec::generating(z.as_ref()), budget);
    cases.push(case("subgroup space discrete", z.name(), v.is_holds(), verdict_json(&v, z.as_ref())));

    let s3 = std::sync::Arc::new(PermGroup::symmetric(3));
    let r = stabilizer_map_check(&PermutationAction::natural(s3), budget)?;
    let passed = r.injective && r.equivariant && r.embedding == Status::Holds;
    cases.push(case("stabilizer map, natural action", "S3", passed, serde_json::to_value(&r).unwrap_or(Value::Null)));
    let c4 = make_group(&GroupSpec::cyclic(4))?.ctx;
    let c4 = generate_finite(&c4.generators(), &c4, budget.cap)?;
    let r = stabilizer_map_check(&PermutationAction::regular(c4), budget)?;
    let passed = !r.injective && r.equivariant;
    cases.push(case("stabilizer map, regular action (constant)", "C4", passed, serde_json::to_value(&r).unwrap_or(Value::Null)));
    Ok(cases)
}

fn saturation(budget: &Budget) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for (_, ctx, f) in materialized_catalog(usize::MAX)? {
        let mut mismatches = 0;
        for class in f.conjugacy_classes() {
            let expected: BTreeSet<Element> = class.iter().cloned().collect();
            for g in &class {
                let (v, trace) = fg_conjugacy_class(ctx.as_ref(), g, budget);
                let got: BTreeSet<Element> = trace.class().iter().cloned().collect();
                if !v.is_holds() || got != expected || !trace.verify(ctx.as_ref()) {
                    mismatches += 1;
                }
            }
        }
        cases.push(case(
            "saturation equals the conjugacy class",
            ctx.name(),
            mismatches == 0,
            json!({ "elements": f.order(), "mismatches": mismatches }),
        ));
    }
    Ok(cases)
}

fn direct_union(budget: &Budget) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    let z2 = make_group(&GroupSpec::zk(2))?.ctx;
    let seeds = z2.enumerate_capped(budget.radius, budget.cap);
    let v = is_direct_union(z2.as_ref(), &EntourageSpec::generating(z2.as_ref()), &seeds, budget);
    cases.push(case("direct union", z2.name(), v.is_holds(), verdict_json(&v, z2.as_ref())));
    for (_, ctx, f) in materialized_catalog(usize::MAX)? {
        let v = is_direct_union(ctx.as_ref(), &EntourageSpec::new(ctx.as_ref(), f.elements().to_vec()), f.elements(), budget);
        cases.push(case("direct union", ctx.name(), v.is_holds(), verdict_json(&v, ctx.as_ref())));
    }
    let dinf = make_group(&GroupSpec::dinf())?.ctx;
    let b = deep(budget);
    let seeds = dinf.enumerate_capped(b.radius, b.cap);
    let v = is_direct_union(dinf.as_ref(), &EntourageSpec::new(dinf.as_ref(), [InfiniteDihedral::r()]), &seeds, &b);
    let passed = v.is_fails() && v.witnesses.len() >= budget.witnesses;
    cases.push(case("not a direct union, F = {e,r}", dinf.name(), passed, verdict_json(&v, dinf.as_ref())));
    Ok(cases)
}
