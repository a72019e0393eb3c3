//! Bergman's group: distance-preserving, finitely supported permutations of
//! the finite-support binary sequences under the greatest-differing-index
//! metric, in table form ([`Isometry`]) and as the direct limit
//! `G₀ → G₁ → …`, `G_{n+1} = (G_n × G_n) ⋊ Z₂` ([`LimitElement`]).
//!
//! A sequence supported in positions `1..=n` is stored as an `n`-bit mask,
//! bit `p - 1` holding position `p`. An isometry of level `n` permutes those
//! `2ⁿ` sequences and fixes every sequence with a 1 beyond position `n`.

mod tree;

pub use tree::LimitElement;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde_json::json;

use crate::coarse::{BudgetUsed, Verdict};
use crate::error::{Error, Result};
use crate::group::{generate_finite, Element, FiniteGroup, Group, GroupRef, PermutationAction};

/// Largest level materialized as explicit tables (`2¹⁶` entries per element
/// would already be too many; level 4 has 16-entry tables and 32768 elements).
pub const MAX_TABLE_LEVEL: u32 = 4;

/// A 0/1 sequence with finitely many ones, positions `1..=64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BitSeq(pub u64);

impl BitSeq {
    pub fn from_support(positions: &[u32]) -> Self {
        BitSeq(positions.iter().fold(0, |m, &p| m | 1 << (p - 1)))
    }

    pub fn support(&self) -> Vec<u32> {
        (1..=64).filter(|&p| self.0 >> (p - 1) & 1 == 1).collect()
    }

    /// Largest position carrying a 1, or 0 for the zero sequence.
    pub fn max_position(&self) -> u32 {
        64 - self.0.leading_zeros()
    }
}

impl fmt::Display for BitSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.support().iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", s.join(","))
    }
}

impl fmt::Debug for BitSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Greatest position where the sequences differ, 0 if equal.
pub fn dist(x: BitSeq, y: BitSeq) -> u32 {
    BitSeq(x.0 ^ y.0).max_position()
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Isometry {
    level: u32,
    table: Vec<u32>,
}

impl Isometry {
    pub fn identity(level: u32) -> Self {
        Isometry { level, table: (0..1u32 << level).collect() }
    }

    pub fn from_table(level: u32, table: Vec<u32>) -> Result<Self> {
        let n = 1usize << level;
        let mut seen = vec![false; n];
        if table.len() != n || table.iter().any(|&v| v as usize >= n || std::mem::replace(&mut seen[v as usize], true)) {
            return Err(Error::BadElement(format!("not a permutation of the level-{level} sequences")));
        }
        Ok(Isometry { level, table })
    }

    /// Flips position `k` exactly when positions `k+1..=level` are all 0.
    pub fn generator(k: u32, level: u32) -> Self {
        assert!(1 <= k && k <= level);
        let table = (0..1u32 << level)
            .map(|x| if x >> k == 0 { x ^ 1 << (k - 1) } else { x })
            .collect();
        Isometry { level, table }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn apply(&self, x: BitSeq) -> BitSeq {
        if x.max_position() > self.level {
            x
        } else {
            BitSeq(self.table[x.0 as usize] as u64)
        }
    }

    /// Same action, tabulated at a higher level.
    pub fn lift(&self, level: u32) -> Self {
        assert!(level >= self.level);
        let table = (0..1u32 << level)
            .map(|x| if x >> self.level == 0 { self.table[x as usize] } else { x })
            .collect();
        Isometry { level, table }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Isometry) -> Isometry {
        let level = self.level.max(other.level);
        let a = self.lift(level);
        let b = other.lift(level);
        Isometry { level, table: b.table.iter().map(|&x| a.table[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Isometry {
        let mut table = vec![0; self.table.len()];
        for (x, &y) in self.table.iter().enumerate() {
            table[y as usize] = x as u32;
        }
        Isometry { level: self.level, table }
    }

    pub fn is_identity(&self) -> bool {
        self.table.iter().enumerate().all(|(x, &y)| x as u32 == y)
    }

    pub fn is_distance_preserving(&self) -> bool {
        let n = self.table.len() as u64;
        (0..n).all(|x| {
            (0..n).all(|y| {
                dist(BitSeq(x), BitSeq(y)) == dist(self.apply(BitSeq(x)), self.apply(BitSeq(y)))
            })
        })
    }

    pub fn moved_set(&self) -> Vec<BitSeq> {
        self.table
            .iter()
            .enumerate()
            .filter(|(x, &y)| *x as u32 != y)
            .map(|(x, _)| BitSeq(x as u64))
            .collect()
    }

    /// `g⁻¹ self g`.
    pub fn conj(&self, g: &Isometry) -> Isometry {
        g.inverse().compose(self).compose(g)
    }

    pub fn commutes(&self, other: &Isometry) -> bool {
        self.compose(other) == other.compose(self)
    }

    pub fn to_element(&self) -> Element {
        Element(self.table.iter().map(|&v| v as i64).collect())
    }

    pub fn from_element(x: &Element) -> Result<Self> {
        let n = x.0.len();
        if !n.is_power_of_two() {
            return Err(Error::BadElement(format!("{x:?} is not a level table")));
        }
        Isometry::from_table(n.trailing_zeros(), x.0.iter().map(|&v| v as u32).collect())
    }
}

impl fmt::Display for Isometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{}:", self.level)?;
        let mut seen = vec![false; self.table.len()];
        let mut any = false;
        for start in 0..self.table.len() {
            if seen[start] || self.table[start] as usize == start {
                continue;
            }
            any = true;
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(BitSeq(x as u64).to_string());
                x = self.table[x] as usize;
            }
            write!(f, "({})", cycle.join(" "))?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Isometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The isometry adding `target` coordinatewise mod 2 to every sequence
/// supported in `1..=max(target)`.
pub fn transitivity_witness(target: BitSeq) -> Isometry {
    let level = target.max_position();
    let t = target.0 as u32;
    Isometry { level, table: (0..1u32 << level).map(|x| x ^ t).collect() }
}

/// `G_level` in table form as a group context, generated by the level
/// generators `σ_1..σ_level`.
#[derive(Debug, Clone, Copy)]
pub struct BergmanGroup {
    level: u32,
}

impl BergmanGroup {
    pub fn new(level: usize) -> Self {
        BergmanGroup { level: level as u32 }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    fn iso(&self, x: &Element) -> Isometry {
        Isometry::from_element(x).expect("level table")
    }

    /// Action on the `2^level` sequences supported in `1..=level`.
    pub fn action(&self) -> PermutationAction {
        let labels = (0..1u64 << self.level).map(|x| BitSeq(x).to_string()).collect();
        PermutationAction::new(
            Arc::new(*self),
            labels,
            Arc::new(|g: &Element, x: usize| g.0[x] as usize),
        )
    }
}

impl Group for BergmanGroup {
    fn name(&self) -> String {
        format!("G{}", self.level)
    }

    fn identity(&self) -> Element {
        Isometry::identity(self.level).to_element()
    }

    fn compose(&self, a: &Element, b: &Element) -> Element {
        Element(b.0.iter().map(|&x| a.0[x as usize]).collect())
    }

    fn invert(&self, a: &Element) -> Element {
        self.iso(a).inverse().to_element()
    }

    fn generators(&self) -> Vec<Element> {
        (1..=self.level).map(|k| Isometry::generator(k, self.level).to_element()).collect()
    }

    fn is_finite_hint(&self) -> Option<bool> {
        Some(true)
    }

    fn format_components(&self, a: &Element) -> Vec<String> {
        vec![self.format(a)]
    }

    fn format(&self, a: &Element) -> String {
        self.iso(a).to_string()
    }

    fn is_central(&self, a: &Element) -> Option<bool> {
        Some(self.central_by_generators(a))
    }

    fn contains(&self, a: &Element) -> bool {
        Isometry::from_element(a).map(|g| g.level == self.level && g.is_distance_preserving()).unwrap_or(false)
    }
}

/// Order of `G_n`: `|G₀| = 1`, `|G_{n+1}| = 2|G_n|²`, i.e. `2^(2ⁿ - 1)`.
pub fn level_order(n: u32) -> u128 {
    1u128 << ((1u32 << n) - 1)
}

/// Materializes `G_n` by Cayley closure of its level generators.
pub fn level_group(n: u32, cap: usize) -> Result<FiniteGroup> {
    if n > MAX_TABLE_LEVEL || level_order(n) > cap as u128 {
        return Err(Error::CapExceeded(cap));
    }
    let ctx: GroupRef = Arc::new(BergmanGroup::new(n as usize));
    generate_finite(&ctx.generators(), &ctx, cap)
}

/// Separation forces commutation, for one pair `(g, h)` over the given conjugators:
/// whenever some point moved by `h^f` is farther than `2C` from every point
/// moved by `g`, then `h^f` commutes with `g`. `C` is the diameter of the
/// union of the moved sets of `g` and `h`.
pub fn commuting_conjugates_check(g: &Isometry, h: &Isometry, conjugators: &[Isometry]) -> Verdict {
    let moved_g = g.moved_set();
    let moved_h = h.moved_set();
    let union: Vec<BitSeq> = moved_g.iter().chain(&moved_h).copied().collect();
    let c = union
        .iter()
        .flat_map(|&x| union.iter().map(move |&y| dist(x, y)))
        .max()
        .unwrap_or(0);
    let mut violations = Vec::new();
    let mut noncommuting: BTreeSet<Vec<u32>> = BTreeSet::new();
    for f in conjugators {
        let hf = h.conj(f);
        let far = hf
            .moved_set()
            .iter()
            .any(|&p| moved_g.iter().all(|&q| dist(p, q) > 2 * c));
        let commute = hf.commutes(g);
        if !commute {
            noncommuting.insert(hf.lift(g.level.max(hf.level)).table);
        }
        if far && !commute {
            violations.push(f.to_element());
        }
    }
    let budget = BudgetUsed { radius: 0, skip: 0, witnesses: conjugators.len() };
    let cert = json!({
        "diameter": c,
        "conjugators": conjugators.len(),
        "noncommuting_conjugates": noncommuting.len(),
    });
    if violations.is_empty() {
        Verdict::holds(vec![], budget).with_certificate(cert)
    } else {
        Verdict::fails(violations, budget).with_certificate(cert)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutingConjugatesReport {
    pub level: u32,
    pub triples: u64,
    pub violations: u64,
    /// Triples where a far-away moved point forced commutation.
    pub forced_commutations: u64,
    /// Largest number of distinct non-commuting conjugates `h^f` for one pair.
    pub max_noncommuting: usize,
}

/// [`commuting_conjugates_check`] over every `(g, h, f)` with `g, h ≠ e` in `G_level`.
pub fn commuting_conjugates_exhaustive(level: u32) -> Result<CommutingConjugatesReport> {
    let grp = level_group(level, 1 << 16)?;
    let n = grp.order();
    let points = 1usize << level;
    let moved: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            let t = &grp.element(i).0;
            (0..points).filter(|&x| t[x] as usize != x).collect()
        })
        .collect();
    let d = |x: usize, y: usize| dist(BitSeq(x as u64), BitSeq(y as u64));
    let mut report = CommutingConjugatesReport { level, triples: 0, violations: 0, forced_commutations: 0, max_noncommuting: 0 };
    for g in 1..n {
        for h in 1..n {
            let union: Vec<usize> = moved[g].iter().chain(&moved[h]).copied().collect();
            let c = union.iter().flat_map(|&x| union.iter().map(move |&y| d(x, y))).max().unwrap_or(0);
            let mut noncommuting = BTreeSet::new();
            for f in 0..n {
                report.triples += 1;
                let hf = grp.conj_idx(h, f);
                let far = moved[hf].iter().any(|&p| moved[g].iter().all(|&q| d(p, q) > 2 * c));
                let commute = grp.commute_idx(g, hf);
                if !commute {
                    noncommuting.insert(hf);
                }
                if far {
                    if commute {
                        report.forced_commutations += 1;
                    } else {
                        report.violations += 1;
                    }
                }
            }
            report.max_noncommuting = report.max_noncommuting.max(noncommuting.len());
        }
    }
    Ok(report)
}

/// Size of the conjugacy class of `g` inside `G_m` for each level `m` from
/// `g`'s own level up to `n_max`, embedding `g` upward.
pub fn conjugacy_growth(g: &LimitElement, n_max: u32, cap: usize) -> Result<Vec<usize>> {
    if n_max > MAX_TABLE_LEVEL {
        return Err(Error::CapExceeded(cap));
    }
    let mut sizes = Vec::new();
    let mut cur = g.clone();
    for m in g.level()..=n_max {
        if m > g.level() {
            cur = cur.embed();
        }
        let ctx = BergmanGroup::new(m as usize);
        let gens = ctx.generating_set();
        let start = cur.to_isometry().to_element();
        let mut class = BTreeSet::from([start.clone()]);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for s in &gens {
                let y = ctx.conj(&x, s);
                if class.insert(y.clone()) {
                    if class.len() > cap {
                        return Err(Error::CapExceeded(cap));
                    }
                    stack.push(y);
                }
            }
        }
        sizes.push(class.len());
    }
    Ok(sizes)
}
