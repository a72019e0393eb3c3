//! Curated concrete groups with exact normal forms.
//!
//! A [`GroupSpec`] is the JSON input schema of the command-line tool:
//!
//! | family       | params                                                  |
//! |--------------|---------------------------------------------------------|
//! | `zk`         | `k` (rank, 1..=8)                                       |
//! | `cyclic`     | `n` (order, ≥ 1)                                        |
//! | `dihedral`   | `n` (polygon size ≥ 3, order `2n`)                      |
//! | `symmetric`  | `n` (1..=7)                                             |
//! | `quaternion` | none                                                    |
//! | `q8xcyclic`  | `n` (order of the cyclic factor, `0` = Z) or `orders`   |
//! | `dinf`       | none                                                    |
//! | `heisenberg` | none                                                    |
//! | `remark6`    | `blocks` (number of generated blocks, default 21)       |
//! | `bergman`    | `level` (0..=4)                                         |
//! | `theorem7`   | `points` (1..=6), `acting` (`symmetric`/`cyclic`/`trivial`) |

mod families;

pub use families::{Abelian, Heisenberg, InfiniteDihedral, Quaternion, BlockShift};

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::bergman::BergmanGroup;
use crate::coarse::indicator_group;
use crate::error::{Error, Result};
use crate::group::{direct_product, Element, Group, GroupRef, PermGroup, PermutationAction};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub family: String,
    #[serde(default)]
    pub params: Map<String, Value>,
}

impl GroupSpec {
    pub fn new(family: &str, params: Value) -> Self {
        let params = match params {
            Value::Object(m) => m,
            _ => Map::new(),
        };
        GroupSpec { family: family.to_string(), params }
    }

    pub fn zk(k: usize) -> Self {
        Self::new("zk", json!({ "k": k }))
    }
    pub fn cyclic(n: usize) -> Self {
        Self::new("cyclic", json!({ "n": n }))
    }
    pub fn dihedral(n: usize) -> Self {
        Self::new("dihedral", json!({ "n": n }))
    }
    pub fn symmetric(n: usize) -> Self {
        Self::new("symmetric", json!({ "n": n }))
    }
    pub fn quaternion() -> Self {
        Self::new("quaternion", json!({}))
    }
    /// `Q8 × Z_{n1} × …`; an order of `0` is an infinite cyclic factor.
    pub fn q8xcyclic(orders: &[usize]) -> Self {
        Self::new("q8xcyclic", json!({ "orders": orders }))
    }
    pub fn dinf() -> Self {
        Self::new("dinf", json!({}))
    }
    pub fn heisenberg() -> Self {
        Self::new("heisenberg", json!({}))
    }
    pub fn block_shift(blocks: usize) -> Self {
        Self::new("remark6", json!({ "blocks": blocks }))
    }
    pub fn bergman(level: usize) -> Self {
        Self::new("bergman", json!({ "level": level }))
    }
    pub fn indicator(points: usize, acting: &str) -> Self {
        Self::new("theorem7", json!({ "points": points, "acting": acting }))
    }

    fn usize_param(&self, key: &str, default: Option<usize>) -> Result<usize> {
        match self.params.get(key) {
            Some(v) => v
                .as_u64()
                .map(|n| n as usize)
                .ok_or_else(|| Error::BadParameters(format!("{}: `{key}` must be a natural number", self.family))),
            None => default.ok_or_else(|| Error::BadParameters(format!("{}: missing `{key}`", self.family))),
        }
    }

    fn check_range(&self, key: &str, v: usize, lo: usize, hi: usize) -> Result<usize> {
        if (lo..=hi).contains(&v) {
            Ok(v)
        } else {
            Err(Error::BadParameters(format!("{}: `{key}` = {v} outside {lo}..={hi}", self.family)))
        }
    }
}

/// A constructed group plus its natural permutation action, when it has one.
#[derive(Clone)]
pub struct ZooGroup {
    pub spec: GroupSpec,
    pub ctx: GroupRef,
    pub action: Option<PermutationAction>,
}

pub fn make_group(spec: &GroupSpec) -> Result<ZooGroup> {
    let (ctx, action): (GroupRef, Option<PermutationAction>) = match spec.family.as_str() {
        "zk" => {
            let k = spec.usize_param("k", None)?;
            let k = spec.check_range("k", k, 1, 8)?;
            (Arc::new(Abelian::free(k)), None)
        }
        "cyclic" => {
            let n = spec.usize_param("n", None)?;
            let n = spec.check_range("n", n, 1, 1 << 20)?;
            (Arc::new(Abelian::new(vec![n as i64])), None)
        }
        "dihedral" => {
            let n = spec.usize_param("n", None)?;
            let n = spec.check_range("n", n, 3, 64)?;
            let g = Arc::new(PermGroup::dihedral(n));
            (g.clone(), Some(PermutationAction::natural(g)))
        }
        "symmetric" => {
            let n = spec.usize_param("n", None)?;
            let n = spec.check_range("n", n, 1, 7)?;
            let g = Arc::new(PermGroup::symmetric(n));
            (g.clone(), Some(PermutationAction::natural(g)))
        }
        "quaternion" => (Arc::new(Quaternion), None),
        "q8xcyclic" => {
            let orders: Vec<i64> = match (spec.params.get("orders"), spec.params.get("n")) {
                (Some(Value::Array(a)), _) => a
                    .iter()
                    .map(|v| v.as_u64().map(|n| n as i64))
                    .collect::<Option<_>>()
                    .ok_or_else(|| Error::BadParameters("q8xcyclic: `orders` must be naturals".into()))?,
                (None, Some(_)) => vec![spec.usize_param("n", None)? as i64],
                _ => return Err(Error::BadParameters("q8xcyclic: need `n` or `orders`".into())),
            };
            if orders.is_empty() || orders.len() > 4 {
                return Err(Error::BadParameters("q8xcyclic: 1..=4 cyclic factors".into()));
            }
            (Arc::new(direct_product(Arc::new(Quaternion), Arc::new(Abelian::new(orders)))), None)
        }
        "dinf" => (Arc::new(InfiniteDihedral), None),
        "heisenberg" => (Arc::new(Heisenberg), None),
        "remark6" => {
            let b = spec.usize_param("blocks", Some(21))?;
            let b = spec.check_range("blocks", b, 1, 200)?;
            (Arc::new(BlockShift::new(b)), None)
        }
        "bergman" => {
            let level = spec.usize_param("level", None)?;
            let level = spec.check_range("level", level, 0, 4)?;
            let g = Arc::new(BergmanGroup::new(level));
            (g.clone(), Some(g.action()))
        }
        "theorem7" => {
            let n = spec.usize_param("points", None)?;
            let n = spec.check_range("points", n, 1, 6)?;
            let acting = spec.params.get("acting").and_then(Value::as_str).unwrap_or("symmetric");
            let h = match acting {
                "symmetric" => PermGroup::symmetric(n),
                "cyclic" => PermGroup::cyclic(n),
                "trivial" => PermGroup::new("1", n, vec![])?,
                other => return Err(Error::BadParameters(format!("theorem7: unknown acting group `{other}`"))),
            };
            let t7 = indicator_group(PermutationAction::natural(Arc::new(h)));
            let action = t7.base_action().clone();
            (Arc::new(t7), Some(action))
        }
        other => return Err(Error::UnknownFamily(other.to_string())),
    };
    Ok(ZooGroup { spec: spec.clone(), ctx, action })
}

/// The finite members of the zoo used by the exhaustive suites, in a fixed order.
pub fn finite_catalog() -> Vec<GroupSpec> {
    vec![
        GroupSpec::cyclic(1),
        GroupSpec::cyclic(2),
        GroupSpec::cyclic(4),
        GroupSpec::cyclic(6),
        GroupSpec::dihedral(3),
        GroupSpec::dihedral(4),
        GroupSpec::dihedral(5),
        GroupSpec::dihedral(6),
        GroupSpec::symmetric(3),
        GroupSpec::symmetric(4),
        GroupSpec::quaternion(),
        GroupSpec::q8xcyclic(&[2]),
        GroupSpec::q8xcyclic(&[3]),
        GroupSpec::q8xcyclic(&[4]),
        GroupSpec::q8xcyclic(&[6]),
        GroupSpec::bergman(1),
        GroupSpec::bergman(2),
        GroupSpec::bergman(3),
        GroupSpec::indicator(3, "symmetric"),
        GroupSpec::indicator(4, "cyclic"),
        GroupSpec::indicator(4, "symmetric"),
    ]
}

/// Size of the `⟨a⟩`-conjugation orbit of the basis vector at the start of
/// block `W_i`, counted by walking the orbit until it closes.
pub fn block_orbit_size(i: usize) -> usize {
    let g = BlockShift::new(i + 1);
    let a = BlockShift::a();
    let start = BlockShift::basis(BlockShift::block_start(i));
    let mut x = g.conj(&start, &a);
    let mut size = 1;
    while x != start {
        size += 1;
        x = g.conj(&x, &a);
    }
    size
}

/// A basis vector `h` with `h^(a^n) ≠ h`: it sits at the start of block
/// `W_{p-1}` where `p` is the smallest prime not dividing `n`.
pub fn block_noncentral_power(n: u64) -> Result<(Element, usize)> {
    if n == 0 {
        return Err(Error::BadParameters("block_noncentral_power: n ≥ 1".into()));
    }
    let p = (2u64..)
        .filter(|&q| (2..q).all(|d| q % d != 0))
        .find(|&q| n % q != 0)
        .expect("some prime does not divide n") as usize;
    let block = p - 1;
    let g = BlockShift::new(p);
    let h = BlockShift::basis(BlockShift::block_start(block));
    let an = g.pow(&BlockShift::a(), n as i64);
    debug_assert_ne!(g.conj(&h, &an), h);
    if g.conj(&h, &an) == h {
        return Err(Error::BadParameters(format!("no witness found for n = {n}")));
    }
    Ok((h, block))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn infinite_families() -> Vec<GroupSpec> {
        vec![
            GroupSpec::zk(2),
            GroupSpec::q8xcyclic(&[0]),
            GroupSpec::dinf(),
            GroupSpec::heisenberg(),
            GroupSpec::block_shift(5),
        ]
    }

    #[test]
    fn spec_round_trips() {
        for spec in finite_catalog().into_iter().chain(infinite_families()) {
            let s = serde_json::to_string(&spec).unwrap();
            let back: GroupSpec = serde_json::from_str(&s).unwrap();
            assert_eq!(back, spec);
        }
    }

    #[test]
    fn unknown_family_and_bad_params() {
        assert!(matches!(make_group(&GroupSpec::new("lamplighter", json!({}))), Err(Error::UnknownFamily(_))));
        assert!(matches!(make_group(&GroupSpec::symmetric(9)), Err(Error::BadParameters(_))));
        assert!(matches!(make_group(&GroupSpec::new("zk", json!({}))), Err(Error::BadParameters(_))));
    }

    #[test]
    fn block_orbits() {
        assert_eq!(block_orbit_size(0), 1);
        assert_eq!(block_orbit_size(2), 3);
        assert_eq!(block_orbit_size(20), 21);
        for i in 0..=20 {
            assert_eq!(block_orbit_size(i), i + 1);
        }
    }

    #[test]
    fn block_noncentral_witnesses() {
        assert_eq!(block_noncentral_power(1).unwrap(), (BlockShift::basis(1), 1));
        assert_eq!(block_noncentral_power(6).unwrap().1, 4);
        assert_eq!(block_noncentral_power(12).unwrap().1, 4);
        assert_eq!(block_noncentral_power(30).unwrap().1, 6);
    }

    fn axioms_on_sample(ctx: &GroupRef, sample: &[Element], i: usize, j: usize, k: usize) {
        let (a, b, c) = (&sample[i % sample.len()], &sample[j % sample.len()], &sample[k % sample.len()]);
        let e = ctx.identity();
        assert_eq!(ctx.compose(&ctx.compose(a, b), c), ctx.compose(a, &ctx.compose(b, c)));
        assert_eq!(ctx.compose(a, &e), *a);
        assert_eq!(ctx.compose(&e, a), *a);
        assert_eq!(ctx.compose(a, &ctx.invert(a)), e);
        assert_eq!(ctx.compose(&ctx.invert(a), a), e);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn every_family_satisfies_group_axioms(fam in 0usize..26, i in 0usize..10_000, j in 0usize..10_000, k in 0usize..10_000) {
            let specs: Vec<GroupSpec> = finite_catalog().into_iter().chain(infinite_families()).collect();
            let z = make_group(&specs[fam % specs.len()]).unwrap();
            let sample = z.ctx.enumerate(4);
            axioms_on_sample(&z.ctx, &sample, i, j, k);
        }
    }

    #[test]
    fn generating_sets_are_symmetric_with_identity() {
        for spec in finite_catalog().into_iter().chain(infinite_families()) {
            let z = make_group(&spec).unwrap();
            let gs = z.ctx.generating_set();
            assert!(gs.contains(&z.ctx.identity()));
            assert!(gs.iter().all(|g| gs.contains(&z.ctx.invert(g))));
            assert!(z.ctx.enumerate(2).iter().all(|x| z.ctx.contains(x)));
        }
    }
}
