//! Abstract groups, materialized finite groups, products and permutation actions.
//!
//! Every group is accessed through the [`Group`] trait. Elements carry a
//! canonical integer encoding, so equality and hashing are exact and never
//! need an isomorphism or word-problem test.
//!
//! Composition is written in functional order throughout the crate: for
//! permutations `compose(g, h)` applies `h` first, then `g`. Conjugation is
//! `x^g = g⁻¹ x g`.

mod action;
mod finite;
mod perm;
mod product;

pub use action::PermutationAction;
pub use finite::{generate_finite, FiniteGroup};
pub use perm::{cycle_string, PermGroup};
pub use product::{direct_product, semidirect_product, ActionFn, DirectProduct, SemidirectProduct};

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

/// Canonical encoding of a group element. Two elements of the same group are
/// equal iff their encodings are identical.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(pub Vec<i64>);

impl Element {
    pub fn new(code: Vec<i64>) -> Self {
        Element(code)
    }

    pub fn code(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<i64>> for Element {
    fn from(v: Vec<i64>) -> Self {
        Element(v)
    }
}

/// What a family knows about its commutator subgroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Commutant {
    Finite(usize),
    Infinite,
    Unknown,
}

pub type GroupRef = Arc<dyn Group>;

/// A group realization: identity, composition, inversion, a finite generating
/// list and a canonical string rendering of elements.
pub trait Group: Send + Sync {
    fn name(&self) -> String;
    fn identity(&self) -> Element;
    fn compose(&self, a: &Element, b: &Element) -> Element;
    fn invert(&self, a: &Element) -> Element;
    /// Family generators as exposed to users. Not necessarily symmetric;
    /// see [`Group::generating_set`].
    fn generators(&self) -> Vec<Element>;

    fn is_finite_hint(&self) -> Option<bool> {
        None
    }

    /// Pieces of the element rendering; products flatten these into one tuple.
    fn format_components(&self, a: &Element) -> Vec<String> {
        a.0.iter().map(|v| v.to_string()).collect()
    }

    fn format(&self, a: &Element) -> String {
        format!("({})", self.format_components(a).join(";"))
    }

    /// Exact membership in the center `Z_G`, when the family knows it.
    fn is_central(&self, _a: &Element) -> Option<bool> {
        None
    }

    /// A canonical label of the coset `a·Z_G`, when the family has one.
    /// Two elements share a label iff they differ by a central factor.
    fn center_key(&self, _a: &Element) -> Option<Element> {
        None
    }

    fn commutant(&self) -> Commutant {
        Commutant::Unknown
    }

    /// Checks that `a` is a well-formed element of this group.
    fn contains(&self, _a: &Element) -> bool {
        true
    }

    // ---- provided operations ----

    fn conj(&self, x: &Element, g: &Element) -> Element {
        self.compose(&self.compose(&self.invert(g), x), g)
    }

    fn conj_set(&self, x: &Element, conjugators: &[Element]) -> BTreeSet<Element> {
        conjugators.iter().map(|g| self.conj(x, g)).collect()
    }

    fn commutator(&self, a: &Element, b: &Element) -> Element {
        let ab = self.compose(a, b);
        let ba = self.compose(b, a);
        self.compose(&self.invert(&ba), &ab)
    }

    fn commutes(&self, a: &Element, b: &Element) -> bool {
        self.compose(a, b) == self.compose(b, a)
    }

    fn pow(&self, a: &Element, n: i64) -> Element {
        let base = if n < 0 { self.invert(a) } else { a.clone() };
        let mut acc = self.identity();
        for _ in 0..n.unsigned_abs() {
            acc = self.compose(&acc, &base);
        }
        acc
    }

    /// `{e} ∪ gens ∪ gens⁻¹`, sorted and deduplicated.
    fn generating_set(&self) -> Vec<Element> {
        let mut set: BTreeSet<Element> = BTreeSet::new();
        set.insert(self.identity());
        for g in self.generators() {
            set.insert(self.invert(&g));
            set.insert(g);
        }
        set.into_iter().collect()
    }

    /// Breadth-first layers of the Cayley ball: layer `k` holds the elements of
    /// word length exactly `k`, each layer sorted by encoding. Stops early once
    /// `cap` elements are collected (the last layer is then truncated in
    /// encoding order) or the group is exhausted.
    fn layers(&self, radius: usize, cap: usize) -> Vec<Vec<Element>> {
        let gens = self.generating_set();
        let e = self.identity();
        let mut seen: HashSet<Element> = HashSet::from([e.clone()]);
        let mut layers = vec![vec![e]];
        let mut total = 1;
        for _ in 1..=radius {
            if total >= cap {
                break;
            }
            let mut next = Vec::new();
            for x in layers.last().expect("nonempty") {
                for s in &gens {
                    let y = self.compose(x, s);
                    if seen.insert(y.clone()) {
                        next.push(y);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort();
            next.truncate(cap - total);
            total += next.len();
            layers.push(next);
        }
        layers
    }

    /// All products of at most `radius` generators, with their word length,
    /// sorted by (word length, encoding).
    fn enumerate_with_lengths(&self, radius: usize) -> Vec<(Element, usize)> {
        self.layers(radius, usize::MAX)
            .into_iter()
            .enumerate()
            .flat_map(|(k, layer)| layer.into_iter().map(move |x| (x, k)))
            .collect()
    }

    /// Like [`Group::enumerate`] but never returns more than `cap` elements.
    fn enumerate_capped(&self, radius: usize, cap: usize) -> Vec<Element> {
        self.layers(radius, cap).concat()
    }

    fn enumerate(&self, radius: usize) -> Vec<Element> {
        self.enumerate_with_lengths(radius)
            .into_iter()
            .map(|(e, _)| e)
            .collect()
    }

    /// Whether all generators pairwise commute, i.e. the group is abelian.
    fn generators_commute(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .all(|a| gens.iter().all(|b| self.commutes(a, b)))
    }

    /// `z` is central iff it commutes with every generator.
    fn central_by_generators(&self, z: &Element) -> bool {
        self.generators().iter().all(|g| self.commutes(z, g))
    }
}

/// Breadth-first search for `target` among products of `gens` (and their
/// inverses) of length at most `radius`. Used as a one-sided membership test.
pub fn word_search(
    ctx: &dyn Group,
    gens: &[Element],
    target: &Element,
    radius: usize,
    cap: usize,
) -> bool {
    let mut steps: Vec<Element> = gens.to_vec();
    steps.extend(gens.iter().map(|g| ctx.invert(g)));
    let e = ctx.identity();
    if *target == e {
        return true;
    }
    let mut seen: BTreeSet<Element> = BTreeSet::new();
    seen.insert(e.clone());
    let mut queue = VecDeque::from([(e, 0usize)]);
    while let Some((x, d)) = queue.pop_front() {
        if d == radius {
            continue;
        }
        for s in &steps {
            let y = ctx.compose(&x, s);
            if y == *target {
                return true;
            }
            if seen.len() < cap && seen.insert(y.clone()) {
                queue.push_back((y, d + 1));
            }
        }
    }
    false
}

/// Elements of `⟨gens⟩` of word length at most `radius`, breadth-first and
/// sorted within each layer, at most `cap` of them.
pub fn subgroup_ball(ctx: &dyn Group, gens: &[Element], radius: usize, cap: usize) -> Vec<Element> {
    let mut steps: BTreeSet<Element> = gens.iter().cloned().collect();
    steps.extend(gens.iter().map(|g| ctx.invert(g)));
    let e = ctx.identity();
    let mut seen: HashSet<Element> = HashSet::from([e.clone()]);
    let mut out = vec![e.clone()];
    let mut layer = vec![e];
    for _ in 0..radius {
        let mut next = Vec::new();
        for x in &layer {
            for s in &steps {
                let y = ctx.compose(x, s);
                if seen.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        next.sort();
        next.truncate(cap.saturating_sub(out.len()));
        if next.is_empty() {
            break;
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}
