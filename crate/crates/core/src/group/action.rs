use std::collections::BTreeSet;
use std::sync::Arc;

use super::{Element, FiniteGroup, Group, GroupRef, PermGroup};

type ApplyFn = Arc<dyn Fn(&Element, usize) -> usize + Send + Sync>;

/// A left action of a group on the finite point set `0..labels.len()`.
#[derive(Clone)]
pub struct PermutationAction {
    group: GroupRef,
    labels: Vec<String>,
    apply: ApplyFn,
}

impl PermutationAction {
    pub fn new(group: GroupRef, labels: Vec<String>, apply: ApplyFn) -> Self {
        PermutationAction { group, labels, apply }
    }

    /// Natural action of a permutation group on `{1..degree}`.
    pub fn natural(group: Arc<PermGroup>) -> Self {
        let labels = (1..=group.degree()).map(|i| i.to_string()).collect();
        PermutationAction {
            group,
            labels,
            apply: Arc::new(|g: &Element, x: usize| PermGroup::apply(g, x)),
        }
    }

    /// Left-regular action of a finite group on itself.
    pub fn regular(group: FiniteGroup) -> Self {
        let labels = group.elements().iter().map(|x| group.format(x)).collect();
        let g = Arc::new(group);
        let inner = g.clone();
        PermutationAction {
            group: g,
            labels,
            apply: Arc::new(move |a: &Element, x: usize| {
                let i = inner.index_of(a).expect("element of the acting group");
                inner.mul(i, x)
            }),
        }
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn apply(&self, g: &Element, x: usize) -> usize {
        (self.apply)(g, x)
    }

    pub fn orbit(&self, x: usize) -> BTreeSet<usize> {
        let gens = self.group.generating_set();
        let mut orbit = BTreeSet::from([x]);
        let mut stack = vec![x];
        while let Some(y) = stack.pop() {
            for g in &gens {
                let z = self.apply(g, y);
                if orbit.insert(z) {
                    stack.push(z);
                }
            }
        }
        orbit
    }

    pub fn is_transitive(&self) -> bool {
        self.is_empty() || self.orbit(0).len() == self.len()
    }

    /// Checks `e·x = x` and `(gh)·x = g·(h·x)` on the given group sample.
    pub fn check_laws(&self, sample: &[Element]) -> bool {
        let e = self.group.identity();
        (0..self.len()).all(|x| self.apply(&e, x) == x)
            && sample.iter().all(|g| {
                sample.iter().all(|h| {
                    let gh = self.group.compose(g, h);
                    (0..self.len()).all(|x| self.apply(&gh, x) == self.apply(g, self.apply(h, x)))
                })
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::generate_finite;

    #[test]
    fn natural_action_laws() {
        let s4 = Arc::new(PermGroup::symmetric(4));
        let act = PermutationAction::natural(s4.clone());
        assert!(act.check_laws(&s4.enumerate(3)));
        assert!(act.is_transitive());
    }

    #[test]
    fn regular_action_laws() {
        let c4: GroupRef = Arc::new(PermGroup::cyclic(4));
        let f = generate_finite(&c4.generators(), &c4, 10).unwrap();
        let sample = f.elements().to_vec();
        let act = PermutationAction::regular(f);
        assert_eq!(act.len(), 4);
        assert!(act.check_laws(&sample));
        assert!(act.is_transitive());
    }
}
