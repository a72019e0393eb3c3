use std::collections::{BTreeMap, BTreeSet};

use super::{ball, EntourageSpec};
use crate::error::{Error, Result};
use crate::group::{Element, Group};

/// `n` parts covering a finite set, each discrete outside `exceptional`.
#[derive(Debug, Clone, PartialEq)]
pub struct Partition {
    pub parts: Vec<Vec<Element>>,
    pub exceptional: Vec<Element>,
}

/// Splits `a` into `n` parts with `E[x] ∩ P = {x}` for every `x ∈ P` outside
/// the exceptional set `{x : |E[x] ∩ A| > n}`.
///
/// Greedy coloring of the graph joining `x` and `y` when either lies in the
/// other's ball, in encoding order. The result is always re-checked.
pub fn partition_n_discrete(ctx: &dyn Group, a: &[Element], e: &EntourageSpec, n: usize) -> Result<Partition> {
    if n == 0 {
        return Err(Error::BadParameters("partition into zero parts".into()));
    }
    let points: BTreeSet<Element> = a.iter().cloned().collect();
    let balls: BTreeMap<&Element, BTreeSet<Element>> = points
        .iter()
        .map(|x| (x, ball(ctx, x, e).into_iter().filter(|y| points.contains(y)).collect()))
        .collect();
    let exceptional: BTreeSet<&Element> = balls.iter().filter(|(_, b)| b.len() > n).map(|(x, _)| *x).collect();

    let mut adj: BTreeMap<&Element, BTreeSet<&Element>> = BTreeMap::new();
    for (x, b) in &balls {
        for y in b.iter().filter(|y| *y != *x) {
            let y = points.get(y).expect("point");
            adj.entry(*x).or_default().insert(y);
            adj.entry(y).or_default().insert(*x);
        }
    }

    let mut color: BTreeMap<&Element, usize> = BTreeMap::new();
    for x in &points {
        if exceptional.contains(x) {
            color.insert(x, 0);
            continue;
        }
        let used: BTreeSet<usize> = adj
            .get(x)
            .into_iter()
            .flatten()
            .filter(|y| !exceptional.contains(*y))
            .filter_map(|y| color.get(y).copied())
            .collect();
        let c = (0..n).find(|c| !used.contains(c)).ok_or_else(|| {
            Error::PartitionFailed(format!("{} has neighbours in all {n} parts", ctx.format(x)))
        })?;
        color.insert(x, c);
    }
    // exceptional points may sit anywhere; keep them out of parts where they
    // would land inside a regular point's ball when another part is free
    for x in &exceptional {
        let blocked: BTreeSet<usize> = adj
            .get(x)
            .into_iter()
            .flatten()
            .filter(|y| !exceptional.contains(*y))
            .filter_map(|y| color.get(y).copied())
            .collect();
        if let Some(c) = (0..n).find(|c| !blocked.contains(c)) {
            color.insert(x, c);
        }
    }

    let mut parts = vec![Vec::new(); n];
    let mut placed: BTreeSet<&Element> = BTreeSet::new();
    for x in a {
        if placed.insert(x) {
            parts[color[x]].push(x.clone());
        }
    }
    let partition = Partition { parts, exceptional: exceptional.into_iter().cloned().collect() };
    if !verify_partition(ctx, a, e, &partition) {
        return Err(Error::PartitionFailed("an exceptional point lies in a regular point's ball in every part".into()));
    }
    Ok(partition)
}

/// Parts are disjoint, cover `a`, and `E[x] ∩ P = {x}` for each regular `x ∈ P`.
pub fn verify_partition(ctx: &dyn Group, a: &[Element], e: &EntourageSpec, p: &Partition) -> bool {
    let all: BTreeSet<&Element> = a.iter().collect();
    let mut seen: BTreeSet<&Element> = BTreeSet::new();
    for part in &p.parts {
        for x in part {
            if !all.contains(x) || !seen.insert(x) {
                return false;
            }
        }
    }
    if seen.len() != all.len() {
        return false;
    }
    let exceptional: BTreeSet<&Element> = p.exceptional.iter().collect();
    p.parts.iter().all(|part| {
        let inside: BTreeSet<&Element> = part.iter().collect();
        part.iter()
            .filter(|x| !exceptional.contains(x))
            .all(|x| ball(ctx, x, e).iter().all(|y| y == x || !inside.contains(y)))
    })
}
