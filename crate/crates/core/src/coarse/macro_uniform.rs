use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Debug;

use serde_json::{json, Value};

use super::{Budget, Verdict};
use crate::group::{Element, Group, PermutationAction};

/// A coarse space whose entourages are indexed by finite subsets of an acting
/// group: the ball of `x` for movers `F` is `{x} ∪ {g·x : g ∈ F}` in the
/// space's own sense of `g·x`.
pub trait CoarseSpace {
    type Point: Clone + Ord + Debug;

    fn acting(&self) -> &dyn Group;
    fn ball(&self, x: &Self::Point, movers: &[Element]) -> BTreeSet<Self::Point>;
    fn render(&self, x: &Self::Point) -> String;
    /// An element encoding of the point, used for verdict witnesses.
    fn encode(&self, x: &Self::Point) -> Element;
}

/// The group under conjugation.
pub struct ConjugationSpace<'a> {
    ctx: &'a dyn Group,
}

impl<'a> ConjugationSpace<'a> {
    pub fn new(ctx: &'a dyn Group) -> Self {
        ConjugationSpace { ctx }
    }
}

impl CoarseSpace for ConjugationSpace<'_> {
    type Point = Element;

    fn acting(&self) -> &dyn Group {
        self.ctx
    }

    fn ball(&self, x: &Element, movers: &[Element]) -> BTreeSet<Element> {
        let mut b = self.ctx.conj_set(x, movers);
        b.insert(x.clone());
        b
    }

    fn render(&self, x: &Element) -> String {
        self.ctx.format(x)
    }

    fn encode(&self, x: &Element) -> Element {
        x.clone()
    }
}

/// A finite set `X` with the coarse structure induced by a permutation group.
pub struct ActionSpace {
    action: PermutationAction,
}

impl ActionSpace {
    pub fn new(action: PermutationAction) -> Self {
        ActionSpace { action }
    }
}

impl CoarseSpace for ActionSpace {
    type Point = usize;

    fn acting(&self) -> &dyn Group {
        self.action.group().as_ref()
    }

    fn ball(&self, x: &usize, movers: &[Element]) -> BTreeSet<usize> {
        let mut b: BTreeSet<usize> = movers.iter().map(|g| self.action.apply(g, *x)).collect();
        b.insert(*x);
        b
    }

    fn render(&self, x: &usize) -> String {
        self.action.label(*x).to_string()
    }

    fn encode(&self, x: &usize) -> Element {
        Element(vec![*x as i64])
    }
}

/// A subspace: balls are intersected with `points`.
pub struct Restricted<'a, S: CoarseSpace> {
    inner: &'a S,
    points: BTreeSet<S::Point>,
}

impl<'a, S: CoarseSpace> Restricted<'a, S> {
    pub fn new(inner: &'a S, points: impl IntoIterator<Item = S::Point>) -> Self {
        Restricted { inner, points: points.into_iter().collect() }
    }
}

impl<S: CoarseSpace> CoarseSpace for Restricted<'_, S> {
    type Point = S::Point;

    fn acting(&self) -> &dyn Group {
        self.inner.acting()
    }

    fn ball(&self, x: &S::Point, movers: &[Element]) -> BTreeSet<S::Point> {
        self.inner.ball(x, movers).into_iter().filter(|y| self.points.contains(y)).collect()
    }

    fn render(&self, x: &S::Point) -> String {
        self.inner.render(x)
    }

    fn encode(&self, x: &S::Point) -> Element {
        self.inner.encode(x)
    }
}

/// For each source mover set `E`, looks for target movers `E'` among the
/// target group's balls of radius `0..=budget.radius` with
/// `f(E[x]) ⊆ E'[f(x)]` on every sampled `x`.
///
/// When the target group is exhausted by its ball, failing the largest
/// candidate refutes macro-uniformity on the sample, since every ball is
/// contained in the ball of the whole group.
pub fn macro_uniform_check<S: CoarseSpace, D: CoarseSpace>(
    f: &dyn Fn(&S::Point) -> D::Point,
    src: &S,
    dst: &D,
    src_entourages: &[Vec<Element>],
    sample: &[S::Point],
    budget: &Budget,
) -> Verdict {
    let layers = dst.acting().layers(budget.radius, budget.cap);
    let total: usize = layers.iter().map(Vec::len).sum();
    let exhausted = layers.len() <= budget.radius && total < budget.cap;
    let images: Vec<D::Point> = sample.iter().map(f).collect();
    let mut found = Vec::new();
    for movers in src_entourages {
        let pushed: Vec<Vec<D::Point>> =
            sample.iter().map(|x| src.ball(x, movers).iter().map(f).collect()).collect();
        let covers = |cand: &[Element]| -> Option<usize> {
            (0..sample.len()).find(|&i| {
                let b = dst.ball(&images[i], cand);
                !pushed[i].iter().all(|y| b.contains(y))
            })
        };
        let mut cand: Vec<Element> = Vec::new();
        let mut hit = None;
        let mut last_bad = None;
        for (r, layer) in layers.iter().enumerate() {
            cand.extend(layer.iter().cloned());
            match covers(&cand) {
                None => {
                    hit = Some((r, cand.len()));
                    break;
                }
                Some(i) => last_bad = Some(i),
            }
        }
        match hit {
            Some((r, size)) => found.push(json!({ "source_size": movers.len(), "target_radius": r, "target_size": size })),
            None => {
                let i = last_bad.unwrap_or(0);
                let cert = json!({ "source_size": movers.len(), "point": src.render(&sample[i]), "searched": cand.len() });
                let w = vec![src.encode(&sample[i])];
                return if exhausted {
                    Verdict::fails(w, budget.used()).with_certificate(cert)
                } else {
                    Verdict::unknown(w, budget.used()).with_certificate(cert)
                };
            }
        }
    }
    Verdict::holds(vec![], budget.used()).with_certificate(Value::Array(found))
}

/// Injectivity on the sample, then macro-uniformity of `f` and of `f⁻¹` on
/// the image (a subspace of `dst`).
pub fn asymorphic_embedding_check<S: CoarseSpace, D: CoarseSpace>(
    f: &dyn Fn(&S::Point) -> D::Point,
    src: &S,
    dst: &D,
    src_entourages: &[Vec<Element>],
    dst_entourages: &[Vec<Element>],
    sample: &[S::Point],
    budget: &Budget,
) -> Verdict {
    let mut inverse: BTreeMap<D::Point, S::Point> = BTreeMap::new();
    for x in sample {
        let y = f(x);
        if let Some(prev) = inverse.get(&y) {
            let cert = json!({ "reason": "not injective", "points": [src.render(prev), src.render(x)], "image": dst.render(&y) });
            return Verdict::fails(vec![src.encode(prev), src.encode(x)], budget.used()).with_certificate(cert);
        }
        inverse.insert(y, x.clone());
    }
    let forward = macro_uniform_check(f, src, dst, src_entourages, sample, budget);
    if !forward.is_holds() {
        let cert = json!({ "direction": "forward", "detail": forward.certificate });
        return Verdict { certificate: Some(cert), ..forward };
    }
    let image = Restricted::new(dst, inverse.keys().cloned());
    let image_sample: Vec<D::Point> = inverse.keys().cloned().collect();
    let back = |y: &D::Point| inverse[y].clone();
    let backward = macro_uniform_check(&back, &image, src, dst_entourages, &image_sample, budget);
    let cert = json!({ "forward": forward.certificate, "backward": backward.certificate });
    Verdict { certificate: Some(cert), ..backward }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coarse::Status;
    use crate::group::PermGroup;
    use crate::zoo::{make_group, GroupSpec, InfiniteDihedral};
    use std::sync::Arc;

    #[test]
    fn identity_and_constant_maps() {
        let g = make_group(&GroupSpec::symmetric(3)).unwrap().ctx;
        let space = ConjugationSpace::new(g.as_ref());
        let ents = vec![vec![g.identity()], g.generating_set(), g.enumerate(3)];
        let sample = g.enumerate(3);
        let id = |x: &Element| x.clone();
        assert!(macro_uniform_check(&id, &space, &space, &ents, &sample, &Budget::default()).is_holds());
        assert!(asymorphic_embedding_check(&id, &space, &space, &ents, &ents, &sample, &Budget::default()).is_holds());

        let e = g.identity();
        let constant = move |_: &Element| e.clone();
        let v = macro_uniform_check(&constant, &space, &space, &ents, &sample, &Budget::default());
        assert!(v.is_holds());
        assert_eq!(v.certificate.unwrap()[2]["target_radius"], 0);
        let v = asymorphic_embedding_check(&constant, &space, &space, &ents, &ents, &sample, &Budget::default());
        assert!(v.is_fails());
        assert_eq!(v.certificate.unwrap()["reason"], "not injective");
    }

    #[test]
    fn a_map_that_tears_balls_apart() {
        // distinct translations are never conjugate, so no finite E' joins them
        let s3 = Arc::new(PermGroup::symmetric(3));
        let src = ActionSpace::new(PermutationAction::natural(s3.clone()));
        let dst = ConjugationSpace::new(&InfiniteDihedral);
        let f = |x: &usize| InfiniteDihedral::t_pow(10 * *x as i64 + 10);
        let ents = vec![s3.generating_set()];
        let v = macro_uniform_check(&f, &src, &dst, &ents, &[0, 1, 2], &Budget::default());
        assert_eq!(v.status, Status::Unknown);
    }

    #[test]
    fn a_finite_target_refutes() {
        let s3 = Arc::new(PermGroup::symmetric(3));
        let src = ActionSpace::new(PermutationAction::natural(s3.clone()));
        let c2 = make_group(&GroupSpec::cyclic(2)).unwrap().ctx;
        let dst = ConjugationSpace::new(c2.as_ref());
        let f = |x: &usize| Element::new(vec![(*x == 0) as i64]);
        let v = macro_uniform_check(&f, &src, &dst, &[s3.generating_set()], &[0, 1, 2], &Budget::default());
        assert!(v.is_fails());
    }
}
