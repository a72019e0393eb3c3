//! Balls `x^F` in S3 and the algebra of conjugation entourages.

use conjcoarse::coarse::{ball, compose_relations, entourage_product, EntourageSpec};
use conjcoarse::group::{Group, PermGroup};

fn main() {
    let s3 = PermGroup::symmetric(3);
    let all = s3.enumerate(3);
    let f = EntourageSpec::new(&s3, [s3.parse_cycles("(1 3)").unwrap()]);
    let g = EntourageSpec::new(&s3, [s3.parse_cycles("(1 2 3)").unwrap()]);

    for x in &all {
        let b: Vec<String> = ball(&s3, x, &f).iter().map(|y| s3.format(y)).collect();
        println!("E_F[{}] = {{{}}}", s3.format(x), b.join(", "));
    }

    let fg = entourage_product(&s3, &f, &g);
    let composed = compose_relations(&f.relation(&s3, &all), &g.relation(&s3, &all));
    println!("|E_F ∘ E_G| = {}, |E_FG| = {}, equal: {}", composed.len(), fg.relation(&s3, &all).len(), composed == fg.relation(&s3, &all));

    let inv = f.inverse(&s3);
    let flipped: std::collections::BTreeSet<_> = f.relation(&s3, &all).into_iter().map(|(x, y)| (y, x)).collect();
    println!("E_F⁻¹ = E_(F⁻¹): {}", flipped == inv.relation(&s3, &all));
}
