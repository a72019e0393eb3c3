//! The space of subgroups under conjugation: enumeration, normality,
//! the structure of nonabelian groups all of whose subgroups are normal, and
//! the point-stabilizer map of a transitive action.

use std::collections::{BTreeMap, BTreeSet};

use fixedbitset::FixedBitSet;
use serde::Serialize;
use serde_json::{json, Value};

use crate::coarse::{asymorphic_embedding_check, ActionSpace, Budget, CoarseSpace, EntourageSpec, Status, Verdict};
use crate::error::{Error, Result};
use crate::group::{generate_finite, word_search, Element, FiniteGroup, Group, GroupRef, PermutationAction};

/// A subgroup of a [`FiniteGroup`], as the sorted indices of its members.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    pub fn from_indices(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        Subgroup { members }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn elements(&self, g: &FiniteGroup) -> Vec<Element> {
        let mut v: Vec<Element> = self.members.iter().map(|&i| g.element(i).clone()).collect();
        v.sort();
        v
    }

    /// Sorted element strings.
    pub fn render(&self, g: &FiniteGroup) -> Vec<String> {
        let mut v: Vec<String> = self.members.iter().map(|&i| g.format_idx(i)).collect();
        v.sort();
        v
    }

    pub fn is_abelian(&self, g: &FiniteGroup) -> bool {
        self.members.iter().all(|&a| self.members.iter().all(|&b| g.commute_idx(a, b)))
    }

    fn bits(&self, n: usize) -> FixedBitSet {
        let mut b = FixedBitSet::with_capacity(n);
        b.extend(self.members.iter().copied());
        b
    }
}

/// Every subgroup of `g`: cyclic subgroups, closed under joins with cyclic
/// subgroups until nothing new appears. Sorted by (order, members).
pub fn all_subgroups(g: &FiniteGroup, cap: usize) -> Result<Vec<Subgroup>> {
    if g.order() > cap {
        return Err(Error::CapExceeded(cap));
    }
    let n = g.order();
    let cyclic: BTreeSet<Subgroup> = (0..n).map(|i| Subgroup::from_indices(g.closure_indices(&[i]))).collect();
    let mut found: BTreeSet<Subgroup> = cyclic.clone();
    let mut frontier: Vec<Subgroup> = cyclic.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for s in &frontier {
            let bits = s.bits(n);
            for c in &cyclic {
                let gen = c.members.iter().copied().find(|&i| g.closure_indices(&[i]).len() == c.order());
                let gen = gen.expect("cyclic subgroup has a generator");
                if bits.contains(gen) {
                    continue;
                }
                let mut gens = s.members.clone();
                gens.push(gen);
                let join = Subgroup::from_indices(g.closure_indices(&gens));
                if found.insert(join.clone()) {
                    next.push(join);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Subgroup> = found.into_iter().collect();
    out.sort_by_key(|s| (s.order(), s.members.clone()));
    Ok(out)
}

/// `g⁻¹ X g`.
pub fn conj_subgroup(g: &FiniteGroup, x: &Subgroup, by: usize) -> Subgroup {
    Subgroup::from_indices(x.members.iter().map(|&m| g.conj_idx(m, by)).collect())
}

fn is_normal(g: &FiniteGroup, x: &Subgroup) -> bool {
    g.generator_indices().iter().all(|&s| conj_subgroup(g, x, s) == *x)
}

/// Every subgroup is normal. Invariance under conjugation by generators
/// suffices, since conjugation by a product is the composite.
pub fn is_dedekind(g: &FiniteGroup, cap: usize) -> Result<bool> {
    Ok(all_subgroups(g, cap)?.iter().all(|x| is_normal(g, x)))
}

fn element_order(g: &FiniteGroup, i: usize) -> usize {
    let mut x = i;
    let mut k = 1;
    while x != 0 {
        x = g.mul(x, i);
        k += 1;
    }
    k
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hamiltonian {
    pub q8: Subgroup,
    pub p: Subgroup,
}

impl Hamiltonian {
    pub fn to_json(&self, g: &FiniteGroup) -> Value {
        json!({ "q8": self.q8.render(g), "p": self.p.render(g) })
    }
}

/// For a nonabelian group with every subgroup normal, a splitting `Q × P`
/// with `Q` quaternion and `P` abelian without elements of order 4.
/// `None` for every other group.
pub fn hamiltonian_decomposition(g: &FiniteGroup, cap: usize) -> Result<Option<Hamiltonian>> {
    let subs = all_subgroups(g, cap)?;
    if g.is_abelian() || !subs.iter().all(|x| is_normal(g, x)) || g.order() % 8 != 0 {
        return Ok(None);
    }
    let quaternion = |x: &Subgroup| {
        x.order() == 8 && x.members.iter().filter(|&&i| element_order(g, i) == 2).count() == 1 && !x.is_abelian(g)
    };
    let complement = |p: &Subgroup, q: &Subgroup| {
        p.order() * 8 == g.order()
            && p.is_abelian(g)
            && p.members.iter().all(|&i| element_order(g, i) != 4)
            && p.members.iter().all(|&i| i == 0 || !q.contains(i))
            && p.members.iter().all(|&a| q.members.iter().all(|&b| g.commute_idx(a, b)))
    };
    for q in subs.iter().filter(|x| quaternion(x)) {
        if let Some(p) = subs.iter().find(|p| complement(p, q)) {
            return Ok(Some(Hamiltonian { q8: q.clone(), p: p.clone() }));
        }
    }
    Ok(None)
}

/// A subgroup of an arbitrary group given by generators, with its carrier when
/// it is small enough to materialize.
struct Probe {
    gens: Vec<Element>,
    carrier: Option<BTreeSet<Element>>,
}

const CARRIER_CAP: usize = 1024;

fn probe(ctx: &GroupRef, gens: Vec<Element>) -> Probe {
    let carrier = generate_finite(&gens, ctx, CARRIER_CAP).ok().map(|f| f.elements().iter().cloned().collect());
    Probe { gens, carrier }
}

/// `Some(true)` if `X^f = X` is certain, `Some(false)` if `X^f ≠ X` is certain.
fn fixed_by(ctx: &GroupRef, x: &Probe, f: &Element, budget: &Budget) -> Option<bool> {
    let conj: Vec<Element> = x.gens.iter().map(|g| ctx.conj(g, f)).collect();
    if let Some(carrier) = &x.carrier {
        let image: BTreeSet<Element> = carrier.iter().map(|g| ctx.conj(g, f)).collect();
        return Some(image == *carrier);
    }
    let inside = |target: &Element, gens: &[Element]| word_search(ctx.as_ref(), gens, target, budget.radius, budget.cap);
    if conj.iter().all(|c| inside(c, &x.gens)) && x.gens.iter().all(|g| inside(g, &conj)) {
        Some(true)
    } else {
        None
    }
}

/// Cyclic subgroups `⟨g⟩` for `g` in the ball of radius `budget.radius`,
/// without repeats (`⟨g⟩ = ⟨g⁻¹⟩`). The ball grows past that radius until
/// `budget.witnesses` subgroups lie beyond the first `budget.skip`.
pub fn cyclic_subgroup_seeds(ctx: &dyn Group, budget: &Budget) -> Vec<Vec<Element>> {
    let wanted = budget.skip + budget.witnesses;
    let mut radius = budget.radius;
    loop {
        let ball = ctx.enumerate_capped(radius, budget.cap);
        let mut seen: BTreeSet<Element> = BTreeSet::new();
        let mut out = Vec::new();
        for g in &ball {
            if seen.insert(g.clone()) {
                seen.insert(ctx.invert(g));
                out.push(vec![g.clone()]);
            }
        }
        let exhausted = ctx.enumerate_capped(radius + 1, budget.cap).len() == ball.len();
        if out.len() >= wanted || exhausted || ball.len() >= budget.cap {
            return out;
        }
        radius += 1;
    }
}

/// Discreteness of the subgroup space at the entourage `E`: past the first
/// `budget.skip` subgroups, `X^F = {X}` for each enumerated `X`.
pub fn subgroup_space_discrete(ctx: &GroupRef, subgroups: &[Vec<Element>], e: &EntourageSpec, budget: &Budget) -> Verdict {
    if ctx.is_finite_hint() == Some(true) || generate_finite(&ctx.generators(), ctx, budget.cap).is_ok() {
        return Verdict::holds(vec![], budget.used()).with_certificate(json!({ "bounded_space": true }));
    }
    let beyond = subgroups.get(budget.skip..).unwrap_or(&[]);
    let mut moved: Vec<Element> = Vec::new();
    let mut moved_carriers: BTreeSet<BTreeSet<Element>> = BTreeSet::new();
    let mut undetermined = 0;
    for gens in beyond {
        let x = probe(ctx, gens.clone());
        let results: Vec<Option<bool>> = e.conjugators().iter().map(|f| fixed_by(ctx, &x, f, budget)).collect();
        if results.contains(&Some(false)) {
            let fresh = match &x.carrier {
                Some(c) => moved_carriers.insert(c.clone()),
                None => true,
            };
            if fresh {
                moved.push(gens[0].clone());
            }
            if moved.len() >= budget.witnesses {
                return Verdict::fails(moved, budget.used()).with_certificate(json!({ "moved_subgroups": budget.witnesses }));
            }
        } else if results.contains(&None) {
            undetermined += 1;
        }
    }
    let cert = json!({ "checked": beyond.len(), "moved": moved.len(), "undetermined": undetermined });
    if moved.is_empty() && undetermined == 0 && !beyond.is_empty() {
        Verdict::holds(vec![], budget.used()).with_certificate(cert)
    } else {
        Verdict::unknown(moved, budget.used()).with_certificate(cert)
    }
}

/// Subgroups of a finite group under conjugation.
pub struct SubgroupSpace<'a> {
    group: &'a FiniteGroup,
}

impl<'a> SubgroupSpace<'a> {
    pub fn new(group: &'a FiniteGroup) -> Self {
        SubgroupSpace { group }
    }
}

impl CoarseSpace for SubgroupSpace<'_> {
    type Point = Subgroup;

    fn acting(&self) -> &dyn Group {
        self.group
    }

    fn ball(&self, x: &Subgroup, movers: &[Element]) -> BTreeSet<Subgroup> {
        let mut b: BTreeSet<Subgroup> = movers
            .iter()
            .filter_map(|m| self.group.index_of(m))
            .map(|i| conj_subgroup(self.group, x, i))
            .collect();
        b.insert(x.clone());
        b
    }

    fn render(&self, x: &Subgroup) -> String {
        format!("[{}]", x.render(self.group).join(", "))
    }

    fn encode(&self, x: &Subgroup) -> Element {
        Element(x.members.iter().map(|&i| i as i64).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StabilizerReport {
    pub points: usize,
    pub stabilizers: Vec<Vec<String>>,
    pub injective: bool,
    pub equivariant: bool,
    pub pairs_checked: usize,
    pub embedding: Status,
    pub embedding_certificate: Value,
}

/// Measures the map `x ↦ St(x)` from a transitive action into the subgroup
/// space: injectivity, the identity `St(x)^g = St(g⁻¹x)`, and the
/// asymorphic-embedding check on the image.
pub fn stabilizer_map_check(action: &PermutationAction, budget: &Budget) -> Result<StabilizerReport> {
    if !action.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let g = generate_finite(&action.group().generators(), action.group(), budget.cap)?;
    let stab: Vec<Subgroup> = (0..action.len())
        .map(|x| Subgroup::from_indices((0..g.order()).filter(|&i| action.apply(g.element(i), x) == x).collect()))
        .collect();
    let distinct: BTreeSet<&Subgroup> = stab.iter().collect();
    let injective = distinct.len() == stab.len();
    let mut pairs = 0;
    let mut equivariant = true;
    for (x, s) in stab.iter().enumerate() {
        for i in 0..g.order() {
            pairs += 1;
            let y = action.apply(g.element(g.inv(i)), x);
            equivariant &= conj_subgroup(&g, s, i) == stab[y];
        }
    }
    let src = ActionSpace::new(action.clone());
    let dst = SubgroupSpace::new(&g);
    let ents = vec![vec![g.identity()], g.generating_set(), g.elements().to_vec()];
    let sample: Vec<usize> = (0..action.len()).collect();
    let f = |x: &usize| stab[*x].clone();
    let v = asymorphic_embedding_check(&f, &src, &dst, &ents, &ents, &sample, budget);
    Ok(StabilizerReport {
        points: action.len(),
        stabilizers: stab.iter().map(|s| s.render(&g)).collect(),
        injective,
        equivariant,
        pairs_checked: pairs,
        embedding: v.status,
        embedding_certificate: v.certificate.unwrap_or(Value::Null),
    })
}

/// Dedekind flag and decomposition as a JSON object.
pub fn classify(g: &FiniteGroup, cap: usize) -> Result<Value> {
    let dedekind = is_dedekind(g, cap)?;
    let ham = hamiltonian_decomposition(g, cap)?;
    Ok(json!({ "dedekind": dedekind, "hamiltonian": ham.map(|h| h.to_json(g)) }))
}

/// Number of subgroups of each order.
pub fn order_census(subs: &[Subgroup]) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for s in subs {
        *m.entry(s.order()).or_insert(0) += 1;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::PermGroup;
    use crate::zoo::{make_group, GroupSpec, InfiniteDihedral};
    use std::sync::Arc;

    fn finite(spec: GroupSpec) -> FiniteGroup {
        let ctx = make_group(&spec).unwrap().ctx;
        generate_finite(&ctx.generators(), &ctx, 4096).unwrap()
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(all_subgroups(&finite(GroupSpec::cyclic(4)), 64).unwrap().len(), 3);
        let q8 = finite(GroupSpec::quaternion());
        let subs = all_subgroups(&q8, 64).unwrap();
        assert_eq!(order_census(&subs), BTreeMap::from([(1, 1), (2, 1), (4, 3), (8, 1)]));
        assert_eq!(all_subgroups(&finite(GroupSpec::symmetric(3)), 64).unwrap().len(), 6);
        assert_eq!(all_subgroups(&finite(GroupSpec::dihedral(4)), 64).unwrap().len(), 10);
        assert_eq!(all_subgroups(&finite(GroupSpec::symmetric(4)), 64).unwrap().len(), 30);
        assert!(matches!(all_subgroups(&finite(GroupSpec::symmetric(5)), 64), Err(Error::CapExceeded(64))));
    }

    #[test]
    fn conjugating_a_subgroup_in_s3() {
        let s3 = PermGroup::symmetric(3);
        let g = finite(GroupSpec::symmetric(3));
        let idx = |c: &str| g.index_of(&s3.parse_cycles(c).unwrap()).unwrap();
        let x = Subgroup::from_indices(g.closure_indices(&[idx("(1 2)")]));
        let y = Subgroup::from_indices(g.closure_indices(&[idx("(2 3)")]));
        assert_eq!(conj_subgroup(&g, &x, idx("(1 3)")), y);
        assert_eq!(conj_subgroup(&g, &x, 0), x);
    }

    #[test]
    fn dedekind_and_decomposition() {
        let q8 = finite(GroupSpec::quaternion());
        assert!(is_dedekind(&q8, 64).unwrap());
        let h = hamiltonian_decomposition(&q8, 64).unwrap().unwrap();
        assert_eq!((h.q8.order(), h.p.order()), (8, 1));

        let q8z3 = finite(GroupSpec::q8xcyclic(&[3]));
        let h = hamiltonian_decomposition(&q8z3, 64).unwrap().unwrap();
        assert_eq!((h.q8.order(), h.p.order()), (8, 3));

        let q8z4 = finite(GroupSpec::q8xcyclic(&[4]));
        assert!(!is_dedekind(&q8z4, 64).unwrap());
        assert!(hamiltonian_decomposition(&q8z4, 64).unwrap().is_none());

        assert!(!is_dedekind(&finite(GroupSpec::dihedral(4)), 64).unwrap());
        assert!(is_dedekind(&finite(GroupSpec::cyclic(6)), 64).unwrap());
    }

    #[test]
    fn infinite_dihedral_subgroups_move() {
        let ctx: GroupRef = Arc::new(InfiniteDihedral);
        let budget = Budget::default().with_radius(20);
        let e = EntourageSpec::new(ctx.as_ref(), [InfiniteDihedral::t_pow(1)]);
        let v = subgroup_space_discrete(&ctx, &cyclic_subgroup_seeds(ctx.as_ref(), &budget), &e, &budget);
        assert!(v.is_fails());
        assert!(v.witnesses.iter().all(|w| w.0[0] == 1));
    }

    #[test]
    fn integer_subgroups_are_fixed() {
        let ctx = make_group(&GroupSpec::zk(1)).unwrap().ctx;
        let e = EntourageSpec::generating(ctx.as_ref());
        let budget = Budget::default();
        let v = subgroup_space_discrete(&ctx, &cyclic_subgroup_seeds(ctx.as_ref(), &budget), &e, &budget);
        assert!(v.is_holds());
    }

    #[test]
    fn stabilizers_of_s3() {
        let s3 = Arc::new(PermGroup::symmetric(3));
        let r = stabilizer_map_check(&PermutationAction::natural(s3), &Budget::default()).unwrap();
        assert_eq!(r.stabilizers[0], vec!["()", "(2 3)"]);
        assert!(r.injective && r.equivariant);
        assert_eq!(r.pairs_checked, 18);
        assert_eq!(r.embedding, Status::Holds);
    }

    #[test]
    fn regular_action_is_not_injective() {
        let c4 = finite(GroupSpec::cyclic(4));
        let r = stabilizer_map_check(&PermutationAction::regular(c4), &Budget::default()).unwrap();
        assert!(!r.injective);
        assert!(r.equivariant);
        assert_eq!(r.embedding, Status::Fails);
    }

    #[test]
    fn non_transitive_is_rejected() {
        let g = Arc::new(PermGroup::new("<(1 2)>", 3, vec![Element::new(vec![2, 1, 3])]).unwrap());
        assert!(matches!(stabilizer_map_check(&PermutationAction::natural(g), &Budget::default()), Err(Error::NotTransitive)));
    }
}
