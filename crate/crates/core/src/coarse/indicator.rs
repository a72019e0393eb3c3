use serde_json::json;

use super::{ActionSpace, Budget, ConjugationSpace, Verdict};
use crate::group::{Commutant, Element, Group, PermutationAction};

/// `{0,1}^X ⋊ H` for a permutation group `H` of a finite set `X`, with
/// `(χ, h)(χ', h') = (χ + χ'_h, hh')` where `χ_h(y) = χ(h⁻¹y)`.
///
/// Elements are encoded as `[mask, h..]`, bit `x` of `mask` being `χ(x)`.
#[derive(Clone)]
pub struct IndicatorGroup {
    action: PermutationAction,
}

pub fn indicator_group(action: PermutationAction) -> IndicatorGroup {
    assert!(action.len() <= 62, "at most 62 points");
    IndicatorGroup { action }
}

impl IndicatorGroup {
    pub fn base_action(&self) -> &PermutationAction {
        &self.action
    }

    pub fn acting(&self) -> &dyn Group {
        self.action.group().as_ref()
    }

    pub fn pack(&self, mask: u64, h: &Element) -> Element {
        let mut v = vec![mask as i64];
        v.extend_from_slice(&h.0);
        Element(v)
    }

    pub fn split(&self, x: &Element) -> (u64, Element) {
        (x.0[0] as u64, Element(x.0[1..].to_vec()))
    }

    /// `χ ↦ χ_h`: the support is carried along by `h`.
    fn twist(&self, mask: u64, h: &Element) -> u64 {
        (0..self.action.len())
            .filter(|&x| mask >> x & 1 == 1)
            .fold(0, |acc, x| acc | 1 << self.action.apply(h, x))
    }

    /// `f(x) = (δ_x, e)`.
    pub fn embed(&self, x: usize) -> Element {
        self.pack(1 << x, &self.acting().identity())
    }

    /// `(0, h)`.
    pub fn pure(&self, h: &Element) -> Element {
        self.pack(0, h)
    }

    /// Checks `f(x)^{(0,g)} = f(g⁻¹x)` for every point and every `g` given.
    pub fn conjugation_identity_holds(&self, hs: &[Element]) -> bool {
        let h = self.acting();
        hs.iter().all(|g| {
            let gi = h.invert(g);
            (0..self.action.len()).all(|x| self.conj(&self.embed(x), &self.pure(g)) == self.embed(self.action.apply(&gi, x)))
        })
    }

    /// Asymorphic-embedding check of `f: X_H → ↔G` with entourages sampled
    /// from balls of the two groups up to `budget.radius`.
    pub fn embedding_check(&self, budget: &Budget) -> Verdict {
        let src = ActionSpace::new(self.action.clone());
        let dst = ConjugationSpace::new(self);
        let h = self.acting();
        let src_entourages: Vec<Vec<Element>> =
            vec![vec![h.identity()], h.generating_set(), h.enumerate(budget.radius)];
        let dst_entourages: Vec<Vec<Element>> =
            vec![vec![self.identity()], self.generating_set(), self.enumerate(2)];
        let sample: Vec<usize> = (0..self.action.len()).collect();
        let v = super::asymorphic_embedding_check(
            &|x: &usize| self.embed(*x),
            &src,
            &dst,
            &src_entourages,
            &dst_entourages,
            &sample,
            budget,
        );
        let pairs = self.action.len() * h.enumerate(budget.radius).len();
        let cert = json!({ "points": self.action.len(), "pairs_checked": pairs, "embedding": v.certificate });
        Verdict { certificate: Some(cert), ..v }
    }
}

impl Group for IndicatorGroup {
    fn name(&self) -> String {
        format!("Z2^{}⋊{}", self.action.len(), self.acting().name())
    }

    fn identity(&self) -> Element {
        self.pack(0, &self.acting().identity())
    }

    fn compose(&self, a: &Element, b: &Element) -> Element {
        let (m, h) = self.split(a);
        let (m2, h2) = self.split(b);
        self.pack(m ^ self.twist(m2, &h), &self.acting().compose(&h, &h2))
    }

    fn invert(&self, a: &Element) -> Element {
        let (m, h) = self.split(a);
        let hi = self.acting().invert(&h);
        self.pack(self.twist(m, &hi), &hi)
    }

    fn generators(&self) -> Vec<Element> {
        let mut gens: Vec<Element> = (0..self.action.len()).map(|x| self.embed(x)).collect();
        gens.extend(self.acting().generators().iter().map(|s| self.pure(s)));
        gens
    }

    fn is_finite_hint(&self) -> Option<bool> {
        self.acting().is_finite_hint()
    }

    fn format_components(&self, a: &Element) -> Vec<String> {
        let (m, h) = self.split(a);
        let labels: Vec<&str> = (0..self.action.len()).filter(|&x| m >> x & 1 == 1).map(|x| self.action.label(x)).collect();
        vec![format!("{{{}}}", labels.join(",")), self.acting().format(&h)]
    }

    fn is_central(&self, a: &Element) -> Option<bool> {
        Some(self.central_by_generators(a))
    }

    fn commutant(&self) -> Commutant {
        Commutant::Unknown
    }

    fn contains(&self, a: &Element) -> bool {
        let (m, h) = self.split(a);
        m >> self.action.len() == 0 && self.acting().contains(&h)
    }
}
