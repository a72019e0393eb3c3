//! Subgroup lattices, Dedekind groups, and the conjugation action on the
//! space of subgroups.

use conjcoarse::coarse::{Budget, EntourageSpec};
use conjcoarse::group::PermutationAction;
use conjcoarse::subgroups::{
    all_subgroups, classify, cyclic_subgroup_seeds, order_census, stabilizer_map_check, subgroup_space_discrete,
};
use conjcoarse::zoo::{make_group, GroupSpec};

fn finite(spec: GroupSpec) -> conjcoarse::group::FiniteGroup {
    let z = make_group(&spec).unwrap();
    conjcoarse::group::generate_finite(&z.ctx.generators(), &z.ctx, 4096).unwrap()
}

fn main() {
    for spec in [GroupSpec::quaternion(), GroupSpec::dihedral(4), GroupSpec::symmetric(4)] {
        let g = finite(spec);
        let subs = all_subgroups(&g, 4096).unwrap();
        println!("{}: {} subgroups, orders {:?}", g.ctx().name(), subs.len(), order_census(&subs));
        println!("  {}", classify(&g, 4096).unwrap());
    }

    let budget = Budget::default();
    for (spec, radius) in [(GroupSpec::zk(1), 8), (GroupSpec::dinf(), 20)] {
        let budget = budget.with_radius(radius);
        let ctx = make_group(&spec).unwrap().ctx;
        let seeds = cyclic_subgroup_seeds(ctx.as_ref(), &budget);
        let e = EntourageSpec::generating(ctx.as_ref());
        let v = subgroup_space_discrete(&ctx, &seeds, &e, &budget);
        println!("{}: cyclic subgroups discrete under conjugation: {:?}", ctx.name(), v.status);
    }

    let s3 = make_group(&GroupSpec::symmetric(3)).unwrap();
    let r = stabilizer_map_check(s3.action.as_ref().unwrap(), &budget).unwrap();
    println!("S3 on 3 points: stabilizers {:?}, injective {}, embedding {:?}", r.stabilizers, r.injective, r.embedding);

    let c4 = finite(GroupSpec::cyclic(4));
    let r = stabilizer_map_check(&PermutationAction::regular(c4), &budget).unwrap();
    println!("C4 regular: injective {}, embedding {:?}", r.injective, r.embedding);
}
