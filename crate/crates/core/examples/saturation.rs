//! Conjugacy classes by saturation: `A_0 = g^F`, `A_{n+1} = A_n^F`, stopping
//! when a round adds nothing.

use conjcoarse::coarse::Budget;
use conjcoarse::conj::fg_conjugacy_class;
use conjcoarse::group::Group;
use conjcoarse::zoo::{make_group, GroupSpec, Heisenberg, Quaternion};

fn main() {
    let (v, trace) = fg_conjugacy_class(&Quaternion, &Quaternion::unit("i"), &Budget::default());
    let class: Vec<String> = trace.class().iter().map(|x| Quaternion.format(x)).collect();
    println!("Q8: class of i = {{{}}} after {} rounds ({:?})", class.join(", "), trace.rounds.len(), v.status);

    let s4 = make_group(&GroupSpec::symmetric(4)).unwrap().ctx;
    for g in s4.generators() {
        let (_, t) = fg_conjugacy_class(s4.as_ref(), &g, &Budget::default());
        println!("S4: |class of {}| = {}, round sizes {:?}, words check out: {}", s4.format(&g), t.class().len(), t.sizes(), t.verify(s4.as_ref()));
    }

    let (v, t) = fg_conjugacy_class(&Heisenberg, &Heisenberg::y(), &Budget::default().with_rounds(10));
    println!("H3(Z): class of y still growing after 10 rounds: {:?} {:?}", v.status, t.sizes());
}
