//! A transitive action `H ↷ X` embeds `X` into `{0,1}^X ⋊ H` via indicator
//! functions, and the embedding is coarse for the conjugation structure.

use std::sync::Arc;

use conjcoarse::coarse::{indicator_group, Budget};
use conjcoarse::group::{Group, PermGroup, PermutationAction};

fn main() {
    for n in [3, 4] {
        let h = Arc::new(PermGroup::symmetric(n));
        let g = indicator_group(PermutationAction::natural(h.clone()));
        let x = g.embed(0);
        let hs = h.enumerate(n);
        println!("{}: 0 -> {}", g.name(), g.format(&x));
        println!("  conjugation carries indicators along: {}", g.conjugation_identity_holds(&hs));
        let v = g.embedding_check(&Budget::default().with_radius(3));
        println!("  embedding: {:?} {}", v.status, v.certificate.unwrap_or_default());
    }
}
