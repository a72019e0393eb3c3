use super::{Element, Group};
use crate::error::{Error, Result};

/// A group of permutations of `{1..degree}` given by generators.
///
/// Elements are image lists: entry `i` holds the image of point `i + 1`.
/// `compose(g, h)` applies `h` first.
#[derive(Debug, Clone)]
pub struct PermGroup {
    name: String,
    degree: usize,
    gens: Vec<Element>,
}

impl PermGroup {
    pub fn new(name: impl Into<String>, degree: usize, gens: Vec<Element>) -> Result<Self> {
        for g in &gens {
            if !is_permutation(g, degree) {
                return Err(Error::BadElement(format!("{g:?} is not a permutation of degree {degree}")));
            }
        }
        Ok(PermGroup { name: name.into(), degree, gens })
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(transposition(n, 1, 2));
        }
        if n >= 3 {
            gens.push(rotation(n));
        }
        PermGroup { name: format!("S{n}"), degree: n, gens }
    }

    /// Symmetries of the regular `n`-gon, order `2n`.
    pub fn dihedral(n: usize) -> Self {
        let reflection = Element((1..=n as i64).rev().collect());
        PermGroup { name: format!("D{n}"), degree: n, gens: vec![rotation(n), reflection] }
    }

    /// Cyclic group generated by the `n`-cycle `(1 2 .. n)`.
    pub fn cyclic(n: usize) -> Self {
        PermGroup { name: format!("C{n}"), degree: n, gens: vec![rotation(n)] }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Image of 0-based point `x` under `g`.
    pub fn apply(g: &Element, x: usize) -> usize {
        g.0[x] as usize - 1
    }

    /// Parses cycle notation such as `"(1 2)(3 4)"` or `"()"`.
    pub fn parse_cycles(&self, s: &str) -> Result<Element> {
        let mut images: Vec<i64> = (1..=self.degree as i64).collect();
        for cycle in s.split(')') {
            let cycle = cycle.trim().trim_start_matches('(');
            if cycle.trim().is_empty() {
                continue;
            }
            let pts: Vec<usize> = cycle
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::BadElement(format!("{s}: {e}")))?;
            for (k, &p) in pts.iter().enumerate() {
                if p == 0 || p > self.degree {
                    return Err(Error::BadElement(format!("{s}: point {p} out of range")));
                }
                images[p - 1] = pts[(k + 1) % pts.len()] as i64;
            }
        }
        let el = Element(images);
        if !is_permutation(&el, self.degree) {
            return Err(Error::BadElement(s.to_string()));
        }
        Ok(el)
    }
}

fn rotation(n: usize) -> Element {
    Element((0..n as i64).map(|i| (i + 1) % n as i64 + 1).collect())
}

fn transposition(n: usize, a: usize, b: usize) -> Element {
    let mut v: Vec<i64> = (1..=n as i64).collect();
    v.swap(a - 1, b - 1);
    Element(v)
}

fn is_permutation(g: &Element, degree: usize) -> bool {
    if g.0.len() != degree {
        return false;
    }
    let mut seen = vec![false; degree];
    for &v in &g.0 {
        if v < 1 || v as usize > degree || seen[v as usize - 1] {
            return false;
        }
        seen[v as usize - 1] = true;
    }
    true
}

/// Cycle notation of an image-list permutation, fixed points omitted.
pub fn cycle_string(g: &Element) -> String {
    let n = g.0.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || g.0[start] as usize == start + 1 {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push((x + 1).to_string());
            x = g.0[x] as usize - 1;
        }
        out.push('(');
        out.push_str(&cycle.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        "()".to_string()
    } else {
        out
    }
}

impl Group for PermGroup {
    fn name(&self) -> String {
        self.name.clone()
    }

    fn identity(&self) -> Element {
        Element((1..=self.degree as i64).collect())
    }

    fn compose(&self, a: &Element, b: &Element) -> Element {
        Element(b.0.iter().map(|&i| a.0[i as usize - 1]).collect())
    }

    fn invert(&self, a: &Element) -> Element {
        let mut inv = vec![0; a.0.len()];
        for (i, &v) in a.0.iter().enumerate() {
            inv[v as usize - 1] = i as i64 + 1;
        }
        Element(inv)
    }

    fn generators(&self) -> Vec<Element> {
        self.gens.clone()
    }

    fn is_finite_hint(&self) -> Option<bool> {
        Some(true)
    }

    fn format_components(&self, a: &Element) -> Vec<String> {
        vec![cycle_string(a)]
    }

    fn format(&self, a: &Element) -> String {
        cycle_string(a)
    }

    fn is_central(&self, a: &Element) -> Option<bool> {
        Some(self.central_by_generators(a))
    }

    fn contains(&self, a: &Element) -> bool {
        is_permutation(a, self.degree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conj_in_s3_moves_transposition() {
        // Oracle: pointwise composition. (1 3)⁻¹ (1 2) (1 3):
        // 1 -> 3 -> 3 -> 1 ; 2 -> 2 -> 1 -> 3 ; 3 -> 1 -> 2 -> 2, i.e. (2 3).
        let s3 = PermGroup::symmetric(3);
        let a = s3.parse_cycles("(1 2)").unwrap();
        let g = s3.parse_cycles("(1 3)").unwrap();
        assert_eq!(s3.format(&s3.conj(&a, &g)), "(2 3)");
    }

    #[test]
    fn conj_set_in_s3() {
        let s3 = PermGroup::symmetric(3);
        let a = s3.parse_cycles("(1 2)").unwrap();
        let f = vec![s3.identity(), s3.parse_cycles("(1 3)").unwrap()];
        let got: Vec<String> = s3.conj_set(&a, &f).iter().map(|x| s3.format(x)).collect();
        let mut got = got;
        got.sort();
        assert_eq!(got, vec!["(1 2)", "(2 3)"]);
    }

    #[test]
    fn composition_applies_right_factor_first() {
        let s3 = PermGroup::symmetric(3);
        let a = s3.parse_cycles("(1 2)").unwrap();
        let b = s3.parse_cycles("(2 3)").unwrap();
        // apply (2 3) then (1 2): 1->1->2, 2->3->3, 3->2->1
        assert_eq!(s3.format(&s3.compose(&a, &b)), "(1 2 3)");
    }

    #[test]
    fn cycle_round_trip() {
        let s4 = PermGroup::symmetric(4);
        for g in s4.enumerate(10) {
            assert_eq!(s4.parse_cycles(&cycle_string(&g)).unwrap(), g);
        }
        assert!(s4.parse_cycles("(1 5)").is_err());
    }
}
