//! One line per acceptance criterion. Values are recomputed from the group
//! law wherever possible rather than read back from the library's own flags.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use conjcoarse::bergman::{
    commuting_conjugates_exhaustive, conjugacy_growth, level_group, transitivity_witness, BitSeq, Isometry,
    LimitElement,
};
use conjcoarse::coarse::{
    cellularity_criterion, compose_relations, entourage_product, indicator_group, is_direct_union, is_discrete,
    is_n_discrete, Budget, EntourageSpec,
};
use conjcoarse::conj::{fg_conjugacy_class, locally_finite_quotient_check};
use conjcoarse::group::{generate_finite, subgroup_ball, Element, FiniteGroup, Group, GroupRef, PermGroup, PermutationAction};
use conjcoarse::subgroups::{all_subgroups, conj_subgroup, cyclic_subgroup_seeds, hamiltonian_decomposition, subgroup_space_discrete};
use conjcoarse::suite::run_suite;
use conjcoarse::zoo::{block_orbit_size, finite_catalog, make_group, BlockShift, GroupSpec, Heisenberg, InfiniteDihedral};

type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn catalog() -> Vec<(GroupRef, FiniteGroup)> {
    finite_catalog()
        .iter()
        .map(|s| {
            let ctx = make_group(s).unwrap().ctx;
            let f = generate_finite(&ctx.generators(), &ctx, 1 << 16).unwrap();
            (ctx, f)
        })
        .collect()
}

fn conj(g: &dyn Group, x: &Element, by: &Element) -> Element {
    g.compose(&g.compose(&g.invert(by), x), by)
}

fn relation(g: &dyn Group, f: &[Element], points: &[Element]) -> BTreeSet<(Element, Element)> {
    points.iter().flat_map(|x| f.iter().map(move |c| (x.clone(), conj(g, x, c)))).collect()
}

fn class_of(g: &dyn Group, x: &Element, all: &[Element]) -> BTreeSet<Element> {
    all.iter().map(|h| conj(g, x, h)).collect()
}

fn criterion_1(cat: &[(GroupRef, FiniteGroup)]) -> Check {
    let mut groups = 0;
    for (i, (ctx, f)) in cat.iter().filter(|(_, f)| f.order() <= 48).enumerate() {
        let g = ctx.as_ref();
        let all = f.elements();
        let mut rng = ChaCha8Rng::seed_from_u64(i as u64);
        for _ in 0..20 {
            let mut pick = || {
                let k = rng.gen_range(1..=3.min(all.len()));
                let mut v: Vec<Element> = all.choose_multiple(&mut rng, k).cloned().collect();
                v.push(g.identity());
                v
            };
            let (a, b) = (pick(), pick());
            let ab: Vec<Element> = a.iter().flat_map(|x| b.iter().map(move |y| g.compose(x, y))).collect();
            let ainv: Vec<Element> = a.iter().map(|x| g.invert(x)).collect();
            let (ra, rb) = (relation(g, &a, all), relation(g, &b, all));
            ensure(compose_relations(&ra, &rb) == relation(g, &ab, all), format!("composition on {}", g.name()))?;
            let inv: BTreeSet<_> = ra.iter().map(|(x, y)| (y.clone(), x.clone())).collect();
            ensure(inv == relation(g, &ainv, all), format!("inverse on {}", g.name()))?;
            let (ea, eb) = (EntourageSpec::new(g, a.clone()), EntourageSpec::new(g, b.clone()));
            ensure(entourage_product(g, &ea, &eb).relation(g, all) == relation(g, &ab, all), "library product")?;
        }
        groups += 1;
    }
    Ok(format!("{groups} groups x 20 pairs"))
}

fn verified_failures(g: &dyn Group, f: &Element, witnesses: &[Element]) -> bool {
    witnesses.len() >= 10 && witnesses.iter().all(|w| conj(g, w, f) != *w)
}

fn criterion_2(cat: &[(GroupRef, FiniteGroup)]) -> Check {
    for k in 1..=3 {
        let ctx = make_group(&GroupSpec::zk(k)).unwrap().ctx;
        for r in 1..=8 {
            let e = EntourageSpec::new(ctx.as_ref(), ctx.enumerate(r));
            ensure(is_discrete(ctx.as_ref(), &e, &Budget::default()).is_holds(), format!("Z^{k} radius {r}"))?;
        }
    }
    let t = InfiniteDihedral::t_pow(1);
    let v = is_discrete(&InfiniteDihedral, &EntourageSpec::new(&InfiniteDihedral, [t.clone()]), &Budget::default().with_radius(20));
    ensure(v.is_fails() && verified_failures(&InfiniteDihedral, &t, &v.witnesses), "D∞ witnesses")?;
    let x = Heisenberg::x();
    let v = is_discrete(&Heisenberg, &EntourageSpec::new(&Heisenberg, [x.clone()]), &Budget::default());
    ensure(v.is_fails() && verified_failures(&Heisenberg, &x, &v.witnesses), "Heisenberg witnesses")?;
    for (ctx, f) in cat {
        let all = f.elements();
        let abelian = all.iter().all(|a| all.iter().all(|b| ctx.compose(a, b) == ctx.compose(b, a)));
        let singletons = all.iter().all(|a| class_of(ctx.as_ref(), a, all).len() == 1);
        ensure(abelian == singletons && abelian == f.is_abelian(), format!("shadow on {}", ctx.name()))?;
    }
    Ok(format!("Z^1..3 hold, D∞ and H3 fail with 10 verified witnesses, {} finite shadows", cat.len()))
}

fn commutant_order(g: &dyn Group, all: &[Element], ctx: &GroupRef) -> usize {
    let comms: Vec<Element> =
        all.iter().flat_map(|a| all.iter().map(move |b| g.compose(&g.compose(&g.invert(a), &g.invert(b)), &g.compose(a, b)))).collect();
    generate_finite(&comms, ctx, 1 << 16).unwrap().order()
}

fn criterion_3(cat: &[(GroupRef, FiniteGroup)]) -> Check {
    for (ctx, f) in cat {
        let all = f.elements();
        let m = commutant_order(ctx.as_ref(), all, ctx);
        let largest = all.iter().map(|a| class_of(ctx.as_ref(), a, all).len()).max().unwrap();
        ensure(largest <= m, format!("{}: class {largest} > commutant {m}", ctx.name()))?;
    }
    let q = make_group(&GroupSpec::q8xcyclic(&[0])).unwrap().ctx;
    let sample = q.enumerate(3);
    let m = commutant_order(q.as_ref(), &sample, &q);
    ensure(m == 2, format!("Q8×Z commutant {m}"))?;
    let budget = Budget::default().with_radius(20);
    for r in 1..=4 {
        let e = EntourageSpec::new(q.as_ref(), q.enumerate(r));
        ensure(is_n_discrete(q.as_ref(), &e, 2, &budget).is_holds(), format!("Q8×Z 2-discrete at E radius {r}"))?;
    }
    Ok(format!("{} finite bounds, Q8×Z 2-discrete with |[G,G]| = 2", cat.len()))
}

fn criterion_4() -> Check {
    let q = make_group(&GroupSpec::q8xcyclic(&[0, 0])).unwrap().ctx;
    let gens = q.generators();
    let budget = Budget::default().with_radius(4);
    let mut samples: Vec<Vec<Element>> = gens.iter().map(|g| vec![g.clone()]).collect();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            samples.push(vec![gens[i].clone(), gens[j].clone()]);
        }
    }
    samples.push(gens.clone());
    let points = q.enumerate(3);
    for h in &samples {
        let v = cellularity_criterion(q.as_ref(), h, &budget).map_err(|e| e.to_string())?;
        ensure(v.is_holds(), "Q8×Z² cellularity")?;
        let f = &v.witnesses;
        for g in &points {
            let gf: BTreeSet<Element> = f.iter().map(|c| conj(q.as_ref(), g, c)).collect();
            for hh in subgroup_ball(q.as_ref(), h, 4, 4096) {
                ensure(gf.contains(&conj(q.as_ref(), g, &hh)), "coset representatives do not cover an orbit")?;
            }
        }
    }
    ensure(locally_finite_quotient_check(q.as_ref(), &gens, &budget).map_err(|e| e.to_string())?.is_holds(), "Q8×Z² quotient")?;

    let h = Heisenberg;
    let v = cellularity_criterion(&h, &[Heisenberg::x()], &Budget::default()).map_err(|e| e.to_string())?;
    ensure(v.is_fails(), "Heisenberg cellularity")?;
    let mut power = h.identity();
    let mut orbit = BTreeSet::new();
    for k in 0..=100 {
        orbit.insert(conj(&h, &Heisenberg::y(), &power));
        ensure(orbit.len() == k + 1, format!("|y^(x^0..x^{k})| = {}", orbit.len()))?;
        power = h.compose(&power, &Heisenberg::x());
    }
    ensure(locally_finite_quotient_check(&h, &h.generators(), &Budget::default()).map_err(|e| e.to_string())?.is_fails(), "H3 quotient")?;

    let b = BlockShift::new(21);
    let v = cellularity_criterion(&b, &[BlockShift::a()], &Budget::default()).map_err(|e| e.to_string())?;
    ensure(v.is_fails(), "block shift cellularity")?;
    for i in 0..=20 {
        let start = BlockShift::basis(BlockShift::block_start(i));
        let mut orbit = BTreeSet::from([start.clone()]);
        let mut x = conj(&b, &start, &BlockShift::a());
        while x != start {
            orbit.insert(x.clone());
            x = conj(&b, &x, &BlockShift::a());
        }
        ensure(orbit.len() == i + 1 && block_orbit_size(i) == i + 1, format!("block {i} orbit {}", orbit.len()))?;
    }
    ensure(locally_finite_quotient_check(&b, &[BlockShift::a()], &Budget::default()).map_err(|e| e.to_string())?.is_fails(), "block quotient")?;
    Ok(format!("{} subgroups of Q8×Z² cellular; H3 orbit 101 at k = 100; block orbits i+1 for i ≤ 20", samples.len()))
}

fn criterion_5() -> Check {
    let orders: Vec<usize> = (1..=4).map(|n| level_group(n, 1 << 16).unwrap().order()).collect();
    ensure(orders == [2, 8, 128, 32768], format!("orders {orders:?}"))?;
    let g3 = level_group(3, 1 << 10).unwrap();
    let isos: Vec<Isometry> = g3.elements().iter().map(|x| Isometry::from_element(x).unwrap()).collect();
    let d = |x: u64, y: u64| 64 - (x ^ y).leading_zeros();
    for g in &isos {
        for x in 0..8u64 {
            for y in 0..8u64 {
                let (gx, gy) = (g.apply(BitSeq(x)).0, g.apply(BitSeq(y)).0);
                ensure(d(gx, gy) == d(x, y), "distance not preserved")?;
            }
        }
    }
    let r = commuting_conjugates_exhaustive(3).map_err(|e| e.to_string())?;
    ensure(r.violations == 0 && r.triples == 127 * 127 * 128, format!("{} violations over {} triples", r.violations, r.triples))?;
    let sizes = conjugacy_growth(&LimitElement::generator(1, 1), 4, 1 << 16).map_err(|e| e.to_string())?;
    ensure(sizes[..2] == [1, 2] && sizes.windows(2).all(|w| w[0] < w[1]), format!("growth {sizes:?}"))?;
    for t in 0..16u64 {
        let w = transitivity_witness(BitSeq(t));
        ensure(w.apply(BitSeq(0)) == BitSeq(t), format!("target {t}"))?;
    }
    Ok(format!("orders {orders:?}, {} triples, growth {sizes:?}, 16 targets", r.triples))
}

fn criterion_6() -> Check {
    let cases = [PermGroup::symmetric(3), PermGroup::cyclic(4), PermGroup::symmetric(4)];
    let mut pairs = 0;
    for h in cases {
        let hctx: GroupRef = Arc::new(h.clone());
        let all_h = generate_finite(&h.generators(), &hctx, 1 << 10).unwrap().elements().to_vec();
        let g = indicator_group(PermutationAction::natural(Arc::new(h.clone())));
        for x in 0..h.degree() {
            for s in &all_h {
                let lhs = conj(&g, &g.embed(x), &g.pure(s));
                let rhs = g.embed(PermGroup::apply(&h.invert(s), x));
                ensure(lhs == rhs, format!("identity fails on {}", h.name()))?;
                pairs += 1;
            }
        }
        ensure(g.embedding_check(&Budget::default()).is_holds(), format!("embedding over {}", h.name()))?;
    }
    Ok(format!("{pairs} (x, g) pairs, three embeddings hold"))
}

fn criterion_7(cat: &[(GroupRef, FiniteGroup)]) -> Check {
    let mut checked = 0;
    for (ctx, f) in cat.iter().filter(|(_, f)| f.order() <= 64) {
        let subs = all_subgroups(f, 64).map_err(|e| e.to_string())?;
        let dedekind = subs.iter().all(|s| (0..f.order()).all(|g| conj_subgroup(f, s, g) == *s));
        let ham = hamiltonian_decomposition(f, 64).map_err(|e| e.to_string())?;
        ensure(ham.is_some() == (dedekind && !f.is_abelian()), format!("classification on {}", ctx.name()))?;
        checked += 1;
    }
    for (spec, expect) in [
        (GroupSpec::quaternion(), true),
        (GroupSpec::q8xcyclic(&[3]), true),
        (GroupSpec::q8xcyclic(&[4]), false),
        (GroupSpec::dihedral(4), false),
        (GroupSpec::symmetric(3), false),
        (GroupSpec::symmetric(4), false),
    ] {
        let ctx = make_group(&spec).unwrap().ctx;
        let f = generate_finite(&ctx.generators(), &ctx, 1 << 10).unwrap();
        ensure(hamiltonian_decomposition(&f, 64).unwrap().is_some() == expect, format!("spot check {}", ctx.name()))?;
    }
    let dinf: GroupRef = Arc::new(InfiniteDihedral);
    let b = Budget::default().with_radius(20);
    let t = InfiniteDihedral::t_pow(1);
    let v = subgroup_space_discrete(&dinf, &cyclic_subgroup_seeds(dinf.as_ref(), &b), &EntourageSpec::new(dinf.as_ref(), [t.clone()]), &b);
    ensure(v.is_fails() && v.witnesses.len() >= 10, "D∞ subgroup space")?;
    let moved: BTreeSet<BTreeSet<Element>> = v
        .witnesses
        .iter()
        .map(|w| {
            let carrier = BTreeSet::from([dinf.identity(), w.clone()]);
            let image: BTreeSet<Element> = carrier.iter().map(|x| conj(dinf.as_ref(), x, &t)).collect();
            assert_eq!(dinf.compose(w, w), dinf.identity());
            assert_ne!(image, carrier);
            carrier
        })
        .collect();
    ensure(moved.len() >= 10, "distinct moved subgroups")?;
    let z = make_group(&GroupSpec::zk(1)).unwrap().ctx;
    let v = subgroup_space_discrete(&z, &cyclic_subgroup_seeds(z.as_ref(), &Budget::default()), &EntourageSpec::generating(z.as_ref()), &Budget::default());
    ensure(v.is_holds(), "Z subgroup space")?;
    Ok(format!("{checked} groups classified, D∞ {} moved subgroups, Z holds", moved.len()))
}

fn criterion_8(cat: &[(GroupRef, FiniteGroup)]) -> Check {
    let mut elements = 0;
    for (ctx, f) in cat {
        for g in f.elements() {
            let (v, trace) = fg_conjugacy_class(ctx.as_ref(), g, &Budget::default());
            let got: BTreeSet<Element> = trace.class().iter().cloned().collect();
            ensure(v.is_holds() && got == class_of(ctx.as_ref(), g, f.elements()), format!("{} on {}", ctx.format(g), ctx.name()))?;
            elements += 1;
        }
    }
    Ok(format!("{elements} elements across {} groups", cat.len()))
}

fn criterion_9(cat: &[(GroupRef, FiniteGroup)]) -> Check {
    let budget = Budget::default();
    let z2 = make_group(&GroupSpec::zk(2)).unwrap().ctx;
    let v = is_direct_union(z2.as_ref(), &EntourageSpec::generating(z2.as_ref()), &z2.enumerate(8), &budget);
    ensure(v.is_holds(), "Z^2")?;
    for (ctx, f) in cat {
        let v = is_direct_union(ctx.as_ref(), &EntourageSpec::new(ctx.as_ref(), f.elements().to_vec()), f.elements(), &budget);
        ensure(v.is_holds(), format!("{}", ctx.name()))?;
    }
    let g = InfiniteDihedral;
    let r = InfiniteDihedral::r();
    let b = budget.with_radius(20);
    let v = is_direct_union(&g, &EntourageSpec::new(&g, [r.clone()]), &g.enumerate(20), &b);
    ensure(v.is_fails(), "D∞ direct union")?;
    let components: BTreeSet<BTreeSet<Element>> = v
        .witnesses
        .iter()
        .filter(|w| conj(&g, w, &r) != **w)
        .map(|w| BTreeSet::from([w.clone(), g.invert(w)]))
        .collect();
    ensure(components.len() >= 10, format!("{} distinct moved components", components.len()))?;
    Ok(format!("Z^2 and {} finite groups hold; D∞ moves {} components", cat.len(), components.len()))
}

fn criterion_10() -> Check {
    let a = serde_json::to_string(&run_suite("all", 0, &Budget::default()).map_err(|e| e.to_string())?).unwrap();
    let b = serde_json::to_string(&run_suite("all", 0, &Budget::default()).map_err(|e| e.to_string())?).unwrap();
    ensure(a == b, "reports differ")?;
    let passed = serde_json::from_str::<serde_json::Value>(&a).unwrap()["passed"].as_bool().unwrap_or(false);
    ensure(passed, "suite(all) has failing cases")?;
    Ok(format!("{} bytes, identical", a.len()))
}

fn main() -> ExitCode {
    let cat = catalog();
    let criteria: Vec<(&str, Box<dyn Fn() -> Check>)> = vec![
        ("entourage algebra", Box::new(|| criterion_1(&cat))),
        ("discreteness", Box::new(|| criterion_2(&cat))),
        ("bounded classes", Box::new(|| criterion_3(&cat))),
        ("cellularity", Box::new(criterion_4)),
        ("Bergman group", Box::new(criterion_5)),
        ("indicator embedding", Box::new(criterion_6)),
        ("subgroup space", Box::new(|| criterion_7(&cat))),
        ("saturation oracle", Box::new(|| criterion_8(&cat))),
        ("direct unions", Box::new(|| criterion_9(&cat))),
        ("determinism", Box::new(criterion_10)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("[PASS] criterion {}: {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] criterion {}: {name} ({why})", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
