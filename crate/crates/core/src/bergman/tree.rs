use super::Isometry;

/// Element of `G_n` in wreath form: level 0 is the trivial group, level `n+1`
/// is `(left, right, swap)` with `left, right ∈ G_n`.
///
/// On a level-`(n+1)` sequence `(x, b)` with prefix `x` and top bit `b` the
/// action is `b' = b XOR swap`, then `x' = (left if b' = 0 else right)(x)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum LimitElement {
    Trivial,
    Node(Box<LimitElement>, Box<LimitElement>, bool),
}

impl LimitElement {
    pub fn identity(level: u32) -> Self {
        if level == 0 {
            LimitElement::Trivial
        } else {
            let child = LimitElement::identity(level - 1);
            LimitElement::Node(Box::new(child.clone()), Box::new(child), false)
        }
    }

    pub fn level(&self) -> u32 {
        match self {
            LimitElement::Trivial => 0,
            LimitElement::Node(l, _, _) => l.level() + 1,
        }
    }

    /// `σ_k` at the given level: the top swap of `G_k`, embedded upward.
    pub fn generator(k: u32, level: u32) -> Self {
        assert!(1 <= k && k <= level);
        let id = LimitElement::identity(k - 1);
        let mut g = LimitElement::Node(Box::new(id.clone()), Box::new(id), true);
        for _ in k..level {
            g = g.embed();
        }
        g
    }

    /// `g ↦ ((g, e), 0)`.
    pub fn embed(&self) -> Self {
        LimitElement::Node(Box::new(self.clone()), Box::new(LimitElement::identity(self.level())), false)
    }

    /// Product in functional order: `self · other` applies `other` first.
    pub fn multiply(&self, other: &LimitElement) -> LimitElement {
        match (self, other) {
            (LimitElement::Trivial, LimitElement::Trivial) => LimitElement::Trivial,
            (LimitElement::Node(l, r, s), LimitElement::Node(l2, r2, s2)) => {
                let (a, b) = if *s { (r2, l2) } else { (l2, r2) };
                LimitElement::Node(Box::new(l.multiply(a)), Box::new(r.multiply(b)), s ^ s2)
            }
            _ => {
                let level = self.level().max(other.level());
                self.raise(level).multiply(&other.raise(level))
            }
        }
    }

    pub fn inverse(&self) -> LimitElement {
        match self {
            LimitElement::Trivial => LimitElement::Trivial,
            LimitElement::Node(l, r, false) => {
                LimitElement::Node(Box::new(l.inverse()), Box::new(r.inverse()), false)
            }
            LimitElement::Node(l, r, true) => {
                LimitElement::Node(Box::new(r.inverse()), Box::new(l.inverse()), true)
            }
        }
    }

    fn raise(&self, level: u32) -> LimitElement {
        let mut g = self.clone();
        while g.level() < level {
            g = g.embed();
        }
        g
    }

    pub fn to_isometry(&self) -> Isometry {
        let level = self.level();
        let table = (0..1u32 << level).map(|x| self.apply_bits(x)).collect();
        Isometry::from_table(level, table).expect("tree action is a permutation")
    }

    fn apply_bits(&self, x: u32) -> u32 {
        match self {
            LimitElement::Trivial => x,
            LimitElement::Node(l, r, s) => {
                let n = l.level();
                let b = (x >> n) & 1 ^ *s as u32;
                let prefix = x & ((1 << n) - 1);
                let y = if b == 0 { l.apply_bits(prefix) } else { r.apply_bits(prefix) };
                y | b << n
            }
        }
    }

    /// Every element of `G_level`, `2^(2^level - 1)` of them.
    pub fn all(level: u32) -> Vec<LimitElement> {
        if level == 0 {
            return vec![LimitElement::Trivial];
        }
        let below = LimitElement::all(level - 1);
        let mut out = Vec::with_capacity(2 * below.len() * below.len());
        for l in &below {
            for r in &below {
                for s in [false, true] {
                    out.push(LimitElement::Node(Box::new(l.clone()), Box::new(r.clone()), s));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bergman::{level_group, BitSeq};
    use std::collections::BTreeSet;

    #[test]
    fn conversion_is_a_bijective_homomorphism() {
        for level in 0..=3 {
            let all = LimitElement::all(level);
            let tables: BTreeSet<Vec<u32>> = all.iter().map(|g| g.to_isometry().table().to_vec()).collect();
            assert_eq!(tables.len(), all.len());
            let grp = level_group(level, 200).unwrap();
            let expected: BTreeSet<Vec<u32>> =
                grp.elements().iter().map(|x| x.0.iter().map(|&v| v as u32).collect()).collect();
            assert_eq!(tables, expected);
            for a in &all {
                assert_eq!(a.multiply(&a.inverse()), LimitElement::identity(level));
                for b in &all {
                    assert_eq!(a.multiply(b).to_isometry(), a.to_isometry().compose(&b.to_isometry()));
                }
            }
        }
    }

    #[test]
    fn embed_identity_and_action() {
        assert_eq!(LimitElement::identity(2).embed(), LimitElement::identity(3));
        let g = LimitElement::generator(1, 1).embed().to_isometry();
        // flips position 1 only when position 2 is 0
        assert_eq!(g.apply(BitSeq(0)), BitSeq::from_support(&[1]));
        assert_eq!(g.apply(BitSeq::from_support(&[2])), BitSeq::from_support(&[2]));
        assert_eq!(g.apply(BitSeq::from_support(&[1, 2])), BitSeq::from_support(&[1, 2]));
        assert_eq!(g.apply(BitSeq::from_support(&[5])), BitSeq::from_support(&[5]));
    }

    #[test]
    fn embed_is_injective_and_multiplicative_g2_to_g3() {
        let all = LimitElement::all(2);
        let images: std::collections::HashSet<LimitElement> = all.iter().map(LimitElement::embed).collect();
        assert_eq!(images.len(), all.len());
        for a in &all {
            for b in &all {
                assert_eq!(a.multiply(b).embed(), a.embed().multiply(&b.embed()));
            }
        }
    }

    #[test]
    fn embedding_agrees_with_lift() {
        for g in LimitElement::all(2) {
            assert_eq!(g.embed().to_isometry(), g.to_isometry().lift(3));
        }
    }

    #[test]
    fn generators_match_table_form() {
        for level in 1..=4 {
            for k in 1..=level {
                assert_eq!(LimitElement::generator(k, level).to_isometry(), crate::bergman::Isometry::generator(k, level));
            }
        }
    }
}
