//! Cellularity through finitely generated subgroups: Q8 × Z² is cellular,
//! while the Heisenberg group and the block-shift group are not.

use conjcoarse::coarse::{cellularity_criterion, Budget};
use conjcoarse::conj::{central_power_check, locally_finite_quotient_check};
use conjcoarse::group::Group;
use conjcoarse::zoo::{block_noncentral_power, make_group, BlockShift, GroupSpec, Heisenberg};

fn main() {
    let budget = Budget::default().with_radius(4);

    let q = make_group(&GroupSpec::q8xcyclic(&[0, 0])).unwrap().ctx;
    let v = cellularity_criterion(q.as_ref(), &q.generators(), &budget).unwrap();
    println!("{} with H = G: {:?}", q.name(), v.status);
    let v = locally_finite_quotient_check(q.as_ref(), &q.generators(), &budget).unwrap();
    println!("  G/Z locally finite: {:?}", v.status);

    let v = cellularity_criterion(&Heisenberg, &[Heisenberg::x()], &Budget::default()).unwrap();
    println!("H3(Z) with H = <x>: {:?} {}", v.status, v.certificate.unwrap_or_default());
    let v = central_power_check(&Heisenberg, &Heisenberg::x(), 8).unwrap();
    println!("  some x^n central: {:?}", v.status);

    let b = BlockShift::new(21);
    let v = cellularity_criterion(&b, &[BlockShift::a()], &Budget::default()).unwrap();
    println!("{} with H = <a>: {:?}", b.name(), v.status);
    for n in [2, 6, 12] {
        let (x, block) = block_noncentral_power(n).unwrap();
        println!("  a^{n} moves block {block}: {}", b.format(&x));
    }
}
