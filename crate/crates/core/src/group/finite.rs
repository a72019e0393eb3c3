use std::collections::HashMap;

use super::{Element, Group, GroupRef};
use crate::error::{Error, Result};

/// Orders up to this size get a full multiplication table.
const TABLE_LIMIT: usize = 1024;

/// A fully materialized finite group: every element indexed, with inverse
/// table and (for small orders) a multiplication table. Index 0 is the identity.
#[derive(Clone)]
pub struct FiniteGroup {
    ctx: GroupRef,
    elements: Vec<Element>,
    index: HashMap<Element, usize>,
    table: Option<Vec<u32>>,
    inv: Vec<usize>,
    gens: Vec<usize>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup").field("group", &self.ctx.name()).field("order", &self.elements.len()).finish()
    }
}

/// Breadth-first Cayley closure of `gens` inside `ctx`.
///
/// Fails with [`Error::CapExceeded`] as soon as more than `cap` elements are
/// found, so infinite subgroups fail loudly instead of looping.
pub fn generate_finite(gens: &[Element], ctx: &GroupRef, cap: usize) -> Result<FiniteGroup> {
    let e = ctx.identity();
    let mut steps: Vec<Element> = Vec::new();
    for g in gens {
        for s in [g.clone(), ctx.invert(g)] {
            if s != e && !steps.contains(&s) {
                steps.push(s);
            }
        }
    }
    let mut elements = vec![e.clone()];
    let mut index = HashMap::from([(e, 0usize)]);
    if cap == 0 {
        return Err(Error::CapExceeded(cap));
    }
    let mut i = 0;
    while i < elements.len() {
        let x = elements[i].clone();
        for s in &steps {
            let y = ctx.compose(&x, s);
            if !index.contains_key(&y) {
                if elements.len() == cap {
                    return Err(Error::CapExceeded(cap));
                }
                index.insert(y.clone(), elements.len());
                elements.push(y);
            }
        }
        i += 1;
    }
    let gens: Vec<usize> = gens.iter().map(|g| index[g]).collect();
    Ok(FiniteGroup::from_parts(ctx.clone(), elements, index, gens))
}

impl FiniteGroup {
    fn from_parts(
        ctx: GroupRef,
        elements: Vec<Element>,
        index: HashMap<Element, usize>,
        gens: Vec<usize>,
    ) -> Self {
        let n = elements.len();
        let inv = elements.iter().map(|x| index[&ctx.invert(x)]).collect();
        let table = (n <= TABLE_LIMIT).then(|| {
            let mut t = Vec::with_capacity(n * n);
            for a in &elements {
                for b in &elements {
                    t.push(index[&ctx.compose(a, b)] as u32);
                }
            }
            t
        });
        FiniteGroup { ctx, elements, index, table, inv, gens }
    }

    pub fn ctx(&self) -> &GroupRef {
        &self.ctx
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Element {
        &self.elements[i]
    }

    pub fn index_of(&self, x: &Element) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.gens
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.index[&self.ctx.compose(&self.elements[a], &self.elements[b])],
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `g⁻¹ x g` on indices.
    pub fn conj_idx(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn commute_idx(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        self.gens
            .iter()
            .all(|&a| self.gens.iter().all(|&b| self.commute_idx(a, b)))
    }

    pub fn format_idx(&self, i: usize) -> String {
        self.ctx.format(&self.elements[i])
    }

    /// Subgroup generated by the given element indices, as its own group.
    pub fn subgroup(&self, gens: &[usize]) -> FiniteGroup {
        let g: Vec<Element> = gens.iter().map(|&i| self.elements[i].clone()).collect();
        generate_finite(&g, &self.ctx, self.order()).expect("subgroup of a finite group is finite")
    }

    /// Index set of the subgroup generated by `gens` (sorted).
    pub fn closure_indices(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut list = vec![0usize];
        let mut i = 0;
        while i < list.len() {
            let x = list[i];
            for &s in gens {
                let y = self.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    list.push(y);
                }
            }
            i += 1;
        }
        list.sort_unstable();
        list
    }

    pub fn center(&self) -> FiniteGroup {
        let z: Vec<usize> = (0..self.order())
            .filter(|&x| self.gens.iter().all(|&g| self.commute_idx(x, g)))
            .collect();
        self.subgroup(&z)
    }

    pub fn centralizer_order(&self, a: usize) -> usize {
        (0..self.order()).filter(|&g| self.commute_idx(a, g)).count()
    }

    /// Subgroup generated by all commutators `a⁻¹b⁻¹ab`, computed as the normal
    /// closure of commutators of generators.
    pub fn commutator_subgroup(&self) -> FiniteGroup {
        let mut gens: Vec<usize> = Vec::new();
        for &a in &self.gens {
            for &b in &self.gens {
                let c = self.commutator_idx(a, b);
                if c != 0 && !gens.contains(&c) {
                    gens.push(c);
                }
            }
        }
        let mut members = self.closure_indices(&gens);
        loop {
            let mut grew = false;
            let snapshot = members.clone();
            for &x in &snapshot {
                for &g in &self.gens {
                    let y = self.conj_idx(x, g);
                    if members.binary_search(&y).is_err() {
                        gens.push(y);
                        members = self.closure_indices(&gens);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        self.subgroup(&members)
    }

    pub fn commutator_idx(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    /// Conjugacy classes as sorted index lists, ordered by smallest index.
    pub fn class_partition(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            class_of[start] = id;
            let mut orbit = vec![start];
            let mut i = 0;
            while i < orbit.len() {
                let x = orbit[i];
                for &g in &self.gens {
                    let y = self.conj_idx(x, g);
                    if class_of[y] == usize::MAX {
                        class_of[y] = id;
                        orbit.push(y);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            classes.push(orbit);
        }
        classes
    }

    /// Orbits of the conjugation action, each sorted by encoding.
    pub fn conjugacy_classes(&self) -> Vec<Vec<Element>> {
        self.class_partition()
            .into_iter()
            .map(|c| {
                let mut v: Vec<Element> = c.into_iter().map(|i| self.elements[i].clone()).collect();
                v.sort();
                v
            })
            .collect()
    }
}

impl Group for FiniteGroup {
    fn name(&self) -> String {
        self.ctx.name()
    }

    fn identity(&self) -> Element {
        self.elements[0].clone()
    }

    fn compose(&self, a: &Element, b: &Element) -> Element {
        match (self.index.get(a), self.index.get(b)) {
            (Some(&i), Some(&j)) if self.table.is_some() => self.elements[self.mul(i, j)].clone(),
            _ => self.ctx.compose(a, b),
        }
    }

    fn invert(&self, a: &Element) -> Element {
        match self.index.get(a) {
            Some(&i) => self.elements[self.inv[i]].clone(),
            None => self.ctx.invert(a),
        }
    }

    fn generators(&self) -> Vec<Element> {
        self.gens.iter().map(|&i| self.elements[i].clone()).collect()
    }

    fn is_finite_hint(&self) -> Option<bool> {
        Some(true)
    }

    fn format_components(&self, a: &Element) -> Vec<String> {
        self.ctx.format_components(a)
    }

    fn format(&self, a: &Element) -> String {
        self.ctx.format(a)
    }

    fn is_central(&self, a: &Element) -> Option<bool> {
        Some(self.central_by_generators(a))
    }

    fn contains(&self, a: &Element) -> bool {
        self.index.contains_key(a)
    }
}
