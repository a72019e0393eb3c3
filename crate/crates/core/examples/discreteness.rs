//! Abelian groups are discrete under conjugation; D∞ and the Heisenberg group
//! are not, and the checker says which points witness it.

use conjcoarse::coarse::{is_discrete, Budget, EntourageSpec};
use conjcoarse::group::Group;
use conjcoarse::zoo::{make_group, GroupSpec, Heisenberg, InfiniteDihedral};

fn main() {
    let z2 = make_group(&GroupSpec::zk(2)).unwrap().ctx;
    let e = EntourageSpec::new(z2.as_ref(), z2.enumerate(3));
    let v = is_discrete(z2.as_ref(), &e, &Budget::default());
    println!("{}: {:?} {}", z2.name(), v.status, v.certificate.unwrap());

    let budget = Budget::default().with_radius(20);
    let e = EntourageSpec::new(&InfiniteDihedral, [InfiniteDihedral::t_pow(1)]);
    let v = is_discrete(&InfiniteDihedral, &e, &budget);
    let w: Vec<String> = v.witnesses.iter().map(|x| InfiniteDihedral.format(x)).collect();
    println!("D∞, F = {{e,t}}: {:?} at {}", v.status, w.join(" "));

    let e = EntourageSpec::new(&Heisenberg, [Heisenberg::x()]);
    let v = is_discrete(&Heisenberg, &e, &Budget::default());
    for x in v.witnesses.iter().take(3) {
        println!("  {} ~ {}", Heisenberg.format(x), Heisenberg.format(&Heisenberg.conj(x, &Heisenberg::x())));
    }
    println!("H3(Z), F = {{e,x}}: {:?}", v.status);
}
