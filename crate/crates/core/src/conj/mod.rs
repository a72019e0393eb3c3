//! Conjugacy-class saturation for finitely generated groups, FC and
//! center-quotient checks, and the characterization suites that pair each
//! coarse-geometric property with its algebraic counterpart.

mod characterize;

pub use characterize::{characterization_suite, Agreement, Characterization, CharacterizationReport};

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde_json::json;

use crate::coarse::{Budget, Verdict};
use crate::error::{Error, Result};
use crate::group::{Element, Group};

/// Rounds `A₀ ⊆ A₁ ⊆ …` of the saturation procedure together with, for each
/// element, the generator word that first produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct SaturationTrace {
    pub seed: Element,
    /// Conjugating set used: symmetric, contains the identity.
    pub generators: Vec<Element>,
    pub rounds: Vec<Vec<Element>>,
    pub terminated: bool,
    /// Word (indices into `generators`) whose conjugate produced the element.
    pub words: BTreeMap<Element, Vec<usize>>,
}

impl SaturationTrace {
    /// The last round: the full class when terminated, a partial orbit otherwise.
    pub fn class(&self) -> &[Element] {
        self.rounds.last().map(Vec::as_slice).unwrap_or(&[])
    }

    /// Word length at which each element was discovered.
    pub fn frontier_words(&self) -> BTreeMap<Element, usize> {
        self.words.iter().map(|(x, w)| (x.clone(), w.len())).collect()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.rounds.iter().map(Vec::len).collect()
    }

    /// Recomputes every element as `w⁻¹ g w` from its recorded word.
    pub fn verify(&self, ctx: &dyn Group) -> bool {
        self.words.iter().all(|(x, word)| {
            let w = word
                .iter()
                .fold(ctx.identity(), |acc, &i| ctx.compose(&acc, &self.generators[i]));
            ctx.conj(&self.seed, &w) == *x
        }) && self.rounds.iter().flatten().all(|x| self.words.contains_key(x))
            && self.rounds.windows(2).all(|w| w[0].iter().all(|x| w[1].binary_search(x).is_ok()))
    }

    /// One more round from the last one, without recording it.
    pub fn step(&self, ctx: &dyn Group) -> Vec<Element> {
        let mut next: BTreeSet<Element> = self.class().iter().cloned().collect();
        for a in self.class() {
            for x in &self.generators {
                next.insert(ctx.conj(a, x));
            }
        }
        next.into_iter().collect()
    }
}

/// Saturates `seed` under conjugation by `generators` (symmetric, with
/// identity): `A₀ = seed^F`, `A_{k+1} = A_k ∪ A_k^F`, until two consecutive
/// rounds agree, `max_rounds` expansions were made, or more than `cap`
/// elements were found.
pub fn saturate(
    ctx: &dyn Group,
    seed: &Element,
    generators: &[Element],
    max_rounds: usize,
    cap: usize,
) -> SaturationTrace {
    let mut words: BTreeMap<Element, Vec<usize>> = BTreeMap::new();
    let mut frontier = Vec::new();
    for (i, x) in generators.iter().enumerate() {
        let y = ctx.conj(seed, x);
        if !words.contains_key(&y) {
            words.insert(y.clone(), vec![i]);
            frontier.push(y);
        }
    }
    let mut rounds = vec![sorted_keys(&words)];
    let mut terminated = false;
    for _ in 0..max_rounds {
        let mut next_frontier = Vec::new();
        for a in &frontier {
            let wa = words[a].clone();
            for (i, x) in generators.iter().enumerate() {
                let y = ctx.conj(a, x);
                if !words.contains_key(&y) {
                    let mut w = wa.clone();
                    w.push(i);
                    words.insert(y.clone(), w);
                    next_frontier.push(y);
                }
            }
        }
        rounds.push(sorted_keys(&words));
        if next_frontier.is_empty() {
            terminated = true;
            break;
        }
        if words.len() > cap {
            break;
        }
        frontier = next_frontier;
    }
    SaturationTrace { seed: seed.clone(), generators: generators.to_vec(), rounds, terminated, words }
}

fn sorted_keys(words: &BTreeMap<Element, Vec<usize>>) -> Vec<Element> {
    words.keys().cloned().collect()
}

/// The saturation procedure over the group's own generating set.
///
/// `Holds` carries the whole class `g^G` (rounds reached a fixpoint within
/// budget); `Unknown` carries the partial orbit, whose size is a lower bound.
pub fn fg_conjugacy_class(ctx: &dyn Group, g: &Element, budget: &Budget) -> (Verdict, SaturationTrace) {
    let trace = saturate(ctx, g, &ctx.generating_set(), budget.rounds, budget.cap);
    let class = trace.class().to_vec();
    let size = class.len();
    let verdict = if trace.terminated {
        Verdict::holds(class, budget.used())
            .with_certificate(json!({ "class_size": size, "rounds": trace.rounds.len() }))
    } else {
        Verdict::unknown(class, budget.used())
            .with_certificate(json!({ "lower_bound": size, "rounds": trace.rounds.len() }))
    };
    (verdict, trace)
}

/// Runs the saturation on each seed. Never `Fails`: a non-saturating seed only
/// gives a lower bound on its class size.
pub fn fc_check(ctx: &dyn Group, seeds: &[Element], budget: &Budget) -> Verdict {
    let mut sizes = Vec::new();
    for s in seeds {
        let (v, trace) = fg_conjugacy_class(ctx, s, budget);
        if !v.is_holds() {
            return Verdict::unknown(vec![s.clone()], budget.used())
                .with_certificate(json!({ "seed": ctx.format(s), "lower_bound": trace.class().len() }));
        }
        sizes.push(trace.class().len());
    }
    Verdict::holds(seeds.to_vec(), budget.used())
        .with_certificate(json!({ "class_sizes": sizes, "max_class_size": sizes.iter().max() }))
}

/// Coset representatives of `⟨gens⟩` modulo the center, grown by layers.
#[derive(Debug, Clone)]
pub struct QuotientClosure {
    pub representatives: Vec<Element>,
    /// Closed: no layer added a new class before the round limit.
    pub finite: bool,
}

/// Cayley closure of `gens` where `x ≡ y` iff `x y⁻¹` is central. Uses the
/// family's coset labels when available, pairwise tests otherwise.
pub fn quotient_closure(
    ctx: &dyn Group,
    gens: &[Element],
    central: &dyn Fn(&Element) -> bool,
    rounds: usize,
    cap: usize,
) -> QuotientClosure {
    let mut steps: Vec<Element> = Vec::new();
    for g in gens {
        for s in [g.clone(), ctx.invert(g)] {
            if !steps.contains(&s) {
                steps.push(s);
            }
        }
    }
    let e = ctx.identity();
    let keyed = ctx.center_key(&e).is_some();
    let mut keys: HashSet<Element> = HashSet::new();
    if keyed {
        keys.insert(ctx.center_key(&e).expect("keyed"));
    }
    let mut reps = vec![e];
    let mut frontier = reps.clone();
    for _ in 0..rounds {
        let mut next = Vec::new();
        for x in &frontier {
            for s in &steps {
                let y = ctx.compose(x, s);
                let new = if keyed {
                    keys.insert(ctx.center_key(&y).expect("keyed"))
                } else {
                    !reps.iter().any(|q| central(&ctx.compose(&y, &ctx.invert(q))))
                };
                if new {
                    reps.push(y.clone());
                    next.push(y);
                }
            }
            if reps.len() > cap {
                return QuotientClosure { representatives: reps, finite: false };
            }
        }
        if next.is_empty() {
            return QuotientClosure { representatives: reps, finite: true };
        }
        frontier = next;
    }
    QuotientClosure { representatives: reps, finite: false }
}

fn central_oracle(ctx: &dyn Group) -> Result<impl Fn(&Element) -> bool + '_> {
    if ctx.is_central(&ctx.identity()).is_none() {
        return Err(Error::PredicateUnavailable(ctx.name()));
    }
    Ok(move |x: &Element| ctx.is_central(x).unwrap_or(false))
}

/// Nonempty subsets of the sample: all of them for up to six elements,
/// otherwise the singletons and the whole sample.
fn sample_subsets(sample: &[Element]) -> Vec<Vec<Element>> {
    if sample.len() <= 6 {
        (1u32..1 << sample.len())
            .map(|mask| {
                sample.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, x)| x.clone()).collect()
            })
            .collect()
    } else {
        let mut out: Vec<Vec<Element>> = sample.iter().map(|x| vec![x.clone()]).collect();
        out.push(sample.to_vec());
        out
    }
}

/// For each subset `S` of `gens_sample`, closes `S` modulo the center.
/// `Holds` if every closure is finite; `Fails` with the first subset whose
/// closure is still growing after `budget.rounds` layers and has at least
/// `budget.witnesses` pairwise inequivalent elements.
pub fn locally_finite_quotient_check(ctx: &dyn Group, gens_sample: &[Element], budget: &Budget) -> Result<Verdict> {
    let central = central_oracle(ctx)?;
    let mut max_order = 1;
    let mut subsets_checked = 0;
    for s in sample_subsets(gens_sample) {
        let q = quotient_closure(ctx, &s, &central, budget.rounds, budget.cap);
        subsets_checked += 1;
        if !q.finite {
            let subset: Vec<String> = s.iter().map(|x| ctx.format(x)).collect();
            let n = q.representatives.len();
            let cert = json!({ "subset": subset, "inequivalent": n });
            let v = if n >= budget.witnesses {
                Verdict::fails(q.representatives, budget.used())
            } else {
                Verdict::unknown(q.representatives, budget.used())
            };
            return Ok(v.with_certificate(cert));
        }
        max_order = max_order.max(q.representatives.len());
    }
    Ok(Verdict::holds(vec![], budget.used())
        .with_certificate(json!({ "subsets": subsets_checked, "max_quotient_order": max_order })))
}

/// Least `n ≤ n_max` with `aⁿ` central.
pub fn central_power_check(ctx: &dyn Group, a: &Element, n_max: usize) -> Result<Verdict> {
    let central = central_oracle(ctx)?;
    let budget = Budget::default().used();
    let mut p = ctx.identity();
    for n in 1..=n_max {
        p = ctx.compose(&p, a);
        if central(&p) {
            return Ok(Verdict::holds(vec![p], budget).with_certificate(json!({ "n": n })));
        }
    }
    Ok(Verdict::fails(vec![a.clone()], budget).with_certificate(json!({ "n_max": n_max })))
}
