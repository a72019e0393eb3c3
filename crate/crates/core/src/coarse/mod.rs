//! The conjugation coarse space of a group and its definitional checkers.
//!
//! An entourage of the space is determined by a finite conjugator set `F`
//! containing the identity: `E_F = {(x, y) : y ∈ x^F}`, so the ball of radius
//! `E_F` around `x` is the set of conjugates `x^F`. Every connected component
//! is a conjugacy class.
//!
//! Checks that quantify over infinitely many points take a [`Budget`] and
//! answer with a three-valued [`Verdict`].

mod checks;
mod indicator;
mod macro_uniform;
mod partition;
mod verdict;

pub use checks::{cellularity_criterion, component, is_bounded, is_direct_union, is_discrete, is_n_discrete};
pub use indicator::{indicator_group, IndicatorGroup};
pub use macro_uniform::{
    asymorphic_embedding_check, macro_uniform_check, ActionSpace, CoarseSpace, ConjugationSpace, Restricted,
};
pub use partition::{partition_n_discrete, verify_partition, Partition};
pub use verdict::{Budget, BudgetUsed, Status, Verdict, VerdictReport};

use std::collections::{BTreeMap, BTreeSet};

use crate::group::{Element, Group};

/// A finite conjugator set `F ∋ e`, denoting `E_F`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EntourageSpec {
    conjugators: Vec<Element>,
}

impl EntourageSpec {
    /// Adds the identity if missing; stores `F` sorted and deduplicated.
    pub fn new(ctx: &dyn Group, conjugators: impl IntoIterator<Item = Element>) -> Self {
        let mut set: BTreeSet<Element> = conjugators.into_iter().collect();
        set.insert(ctx.identity());
        EntourageSpec { conjugators: set.into_iter().collect() }
    }

    /// The diagonal `E_{e}`.
    pub fn diagonal(ctx: &dyn Group) -> Self {
        Self::new(ctx, [])
    }

    /// `E_{e} ∪ E_S` for the symmetric generating set `S`.
    pub fn generating(ctx: &dyn Group) -> Self {
        Self::new(ctx, ctx.generating_set())
    }

    pub fn conjugators(&self) -> &[Element] {
        &self.conjugators
    }

    pub fn len(&self) -> usize {
        self.conjugators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.conjugators.is_empty()
    }

    /// `E_{F⁻¹}`, the inverse relation.
    pub fn inverse(&self, ctx: &dyn Group) -> Self {
        Self::new(ctx, self.conjugators.iter().map(|f| ctx.invert(f)))
    }

    /// The graph of `E_F` restricted to `points × points`.
    pub fn relation(&self, ctx: &dyn Group, points: &[Element]) -> BTreeSet<(Element, Element)> {
        let inside: BTreeSet<&Element> = points.iter().collect();
        points
            .iter()
            .flat_map(|x| ball(ctx, x, self).into_iter().filter(|y| inside.contains(y)).map(move |y| (x.clone(), y)))
            .collect()
    }
}

/// `E[x] = x^F`.
pub fn ball(ctx: &dyn Group, x: &Element, e: &EntourageSpec) -> BTreeSet<Element> {
    ctx.conj_set(x, &e.conjugators)
}

/// `E_F ∘ E_{F'} = E_{FF'}`: a point reaches `(x^f)^{f'} = x^{ff'}`.
pub fn entourage_product(ctx: &dyn Group, e: &EntourageSpec, f: &EntourageSpec) -> EntourageSpec {
    EntourageSpec::new(
        ctx,
        e.conjugators.iter().flat_map(|a| f.conjugators.iter().map(move |b| ctx.compose(a, b))),
    )
}

/// Relational composition `{(x, z) : (x, y) ∈ r, (y, z) ∈ s}`.
pub fn compose_relations<T: Ord + Clone>(r: &BTreeSet<(T, T)>, s: &BTreeSet<(T, T)>) -> BTreeSet<(T, T)> {
    let mut out_of: BTreeMap<&T, Vec<&T>> = BTreeMap::new();
    for (y, z) in s {
        out_of.entry(y).or_default().push(z);
    }
    r.iter()
        .flat_map(|(x, y)| out_of.get(y).into_iter().flatten().map(move |z| (x.clone(), (*z).clone())))
        .collect()
}

pub fn invert_relation<T: Ord + Clone>(r: &BTreeSet<(T, T)>) -> BTreeSet<(T, T)> {
    r.iter().map(|(x, y)| (y.clone(), x.clone())).collect()
}
