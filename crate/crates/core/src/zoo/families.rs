use std::collections::BTreeSet;

use crate::group::{Commutant, Element, Group};

/// Finitely generated abelian group `Z_{n1} × … × Z_{nk}` where an order of
/// `0` denotes an infinite cyclic factor. Covers `Z^k` and `Z_n`.
#[derive(Debug, Clone)]
pub struct Abelian {
    orders: Vec<i64>,
}

impl Abelian {
    pub fn new(orders: Vec<i64>) -> Self {
        Abelian { orders }
    }

    pub fn free(rank: usize) -> Self {
        Abelian { orders: vec![0; rank] }
    }

    fn reduce(&self, i: usize, v: i64) -> i64 {
        match self.orders[i] {
            0 => v,
            n => v.rem_euclid(n),
        }
    }
}

impl Group for Abelian {
    fn name(&self) -> String {
        if !self.orders.is_empty() && self.orders.iter().all(|&n| n == 0) {
            return if self.orders.len() == 1 { "Z".into() } else { format!("Z^{}", self.orders.len()) };
        }
        let parts: Vec<String> = self
            .orders
            .iter()
            .map(|&n| if n == 0 { "Z".to_string() } else { format!("Z{n}") })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("×")
        }
    }

    fn identity(&self) -> Element {
        Element(vec![0; self.orders.len()])
    }

    fn compose(&self, a: &Element, b: &Element) -> Element {
        Element((0..self.orders.len()).map(|i| self.reduce(i, a.0[i] + b.0[i])).collect())
    }

    fn invert(&self, a: &Element) -> Element {
        Element((0..self.orders.len()).map(|i| self.reduce(i, -a.0[i])).collect())
    }

    fn generators(&self) -> Vec<Element> {
        (0..self.orders.len())
            .filter(|&i| self.orders[i] != 1)
            .map(|i| {
                let mut v = vec![0; self.orders.len()];
                v[i] = 1;
                Element(v)
            })
            .collect()
    }

    fn is_finite_hint(&self) -> Option<bool> {
        Some(self.orders.iter().all(|&n| n > 0))
    }

    fn is_central(&self, _a: &Element) -> Option<bool> {
        Some(true)
    }

    fn center_key(&self, _a: &Element) -> Option<Element> {
        Some(Element(vec![]))
    }

    fn commutant(&self) -> Commutant {
        Commutant::Finite(1)
    }

    fn contains(&self, a: &Element) -> bool {
        a.0.len() == self.orders.len()
            && a.0.iter().zip(&self.orders).all(|(&v, &n)| n == 0 || (0..n).contains(&v))
    }
}

/// Quaternion group `{±1, ±i, ±j, ±k}`, encoded `[sign, unit]` with
/// `unit ∈ {0: 1, 1: i, 2: j, 3: k}`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Quaternion;

impl Quaternion {
    pub fn unit(name: &str) -> Element {
        let (sign, u) = match name.strip_prefix('-') {
            Some(rest) => (1, rest),
            None => (0, name),
        };
        let u = match u {
            "1" => 0,
            "i" => 1,
            "j" => 2,
            "k" => 3,
            _ => panic!("not a quaternion unit: {name}"),
        };
        Element(vec![sign, u])
    }
}

// (sign, unit) of the product of basis units.
const UNIT_MUL: [[(i64, i64); 4]; 4] = [
    [(0, 0), (0, 1), (0, 2), (0, 3)],
    [(0, 1), (1, 0), (0, 3), (1, 2)],
    [(0, 2), (1, 3), (1, 0), (0, 1)],
    [(0, 3), (0, 2), (1, 1), (1, 0)],
];

impl Group for Quaternion {
    fn name(&self) -> String {
        "Q8".into()
    }

    fn identity(&self) -> Element {
        Element(vec![0, 0])
    }

    fn compose(&self, a: &Element, b: &Element) -> Element {
        let (s, u) = UNIT_MUL[a.0[1] as usize][b.0[1] as usize];
        Element(vec![(a.0[0] + b.0[0] + s) % 2, u])
    }

    fn invert(&self, a: &Element) -> Element {
        if a.0[1] == 0 {
            a.clone()
        } else {
            Element(vec![1 - a.0[0], a.0[1]])
        }
    }

    fn generators(&self) -> Vec<Element> {
        vec![Quaternion::unit("i"), Quaternion::unit("j")]
    }

    fn is_finite_hint(&self) -> Option<bool> {
        Some(true)
    }

    fn format_components(&self, a: &Element) -> Vec<String> {
        vec![self.format(a)]
    }

    fn format(&self, a: &Element) -> String {
        let sign = if a.0[0] == 1 { "-" } else { "" };
        format!("{sign}{}", ["1", "i", "j", "k"][a.0[1] as usize])
    }

    fn is_central(&self, a: &Element) -> Option<bool> {
        Some(a.0[1] == 0)
    }

    fn center_key(&self, a: &Element) -> Option<Element> {
        Some(Element(vec![a.0[1]]))
    }

    fn commutant(&self) -> Commutant {
        Commutant::Finite(2)
    }

    fn contains(&self, a: &Element) -> bool {
        a.0.len() == 2 && (0..2).contains(&a.0[0]) && (0..4).contains(&a.0[1])
    }
}

/// Infinite dihedral group `⟨r, t | r² = e, rtr = t⁻¹⟩`, normal form
/// `r^ε t^n` encoded `[ε, n]`.
#[derive(Debug, Clone, Copy, Default)]
pub struct InfiniteDihedral;

impl InfiniteDihedral {
    pub fn r() -> Element {
        Element(vec![1, 0])
    }

    pub fn t_pow(n: i64) -> Element {
        Element(vec![0, n])
    }

    pub fn reflection(n: i64) -> Element {
        Element(vec![1, n])
    }
}

impl Group for InfiniteDihedral {
    fn name(&self) -> String {
        "D∞".into()
    }

    fn identity(&self) -> Element {
        Element(vec![0, 0])
    }

    fn compose(&self, a: &Element, b: &Element) -> Element {
        // t^n r = r t^-n
        let n = if b.0[0] == 1 { -a.0[1] } else { a.0[1] };
        Element(vec![(a.0[0] + b.0[0]) % 2, n + b.0[1]])
    }

    fn invert(&self, a: &Element) -> Element {
        if a.0[0] == 1 {
            a.clone()
        } else {
            Element(vec![0, -a.0[1]])
        }
    }

    fn generators(&self) -> Vec<Element> {
        vec![Self::r(), Self::t_pow(1), Self::t_pow(-1)]
    }

    fn is_finite_hint(&self) -> Option<bool> {
        Some(false)
    }

    fn is_central(&self, a: &Element) -> Option<bool> {
        Some(a.0 == [0, 0])
    }

    fn center_key(&self, a: &Element) -> Option<Element> {
        Some(a.clone())
    }

    fn commutant(&self) -> Commutant {
        Commutant::Infinite
    }

    fn contains(&self, a: &Element) -> bool {
        a.0.len() == 2 && (0..2).contains(&a.0[0])
    }
}

/// Discrete Heisenberg group on `(a, b, c) ∈ Z³` with
/// `(a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Heisenberg;

impl Heisenberg {
    pub fn x() -> Element {
        Element(vec![1, 0, 0])
    }

    pub fn y() -> Element {
        Element(vec![0, 1, 0])
    }

    pub fn z() -> Element {
        Element(vec![0, 0, 1])
    }
}

impl Group for Heisenberg {
    fn name(&self) -> String {
        "H3(Z)".into()
    }

    fn identity(&self) -> Element {
        Element(vec![0, 0, 0])
    }

    fn compose(&self, p: &Element, q: &Element) -> Element {
        Element(vec![p.0[0] + q.0[0], p.0[1] + q.0[1], p.0[2] + q.0[2] + p.0[0] * q.0[1]])
    }

    fn invert(&self, p: &Element) -> Element {
        Element(vec![-p.0[0], -p.0[1], -p.0[2] + p.0[0] * p.0[1]])
    }

    fn generators(&self) -> Vec<Element> {
        vec![Self::x(), Self::y(), Self::z()]
    }

    fn is_finite_hint(&self) -> Option<bool> {
        Some(false)
    }

    fn is_central(&self, p: &Element) -> Option<bool> {
        Some(p.0[0] == 0 && p.0[1] == 0)
    }

    fn center_key(&self, p: &Element) -> Option<Element> {
        Some(Element(vec![p.0[0], p.0[1]]))
    }

    fn commutant(&self) -> Commutant {
        Commutant::Infinite
    }

    fn contains(&self, p: &Element) -> bool {
        p.0.len() == 3
    }
}

/// `H ⋊ ⟨a⟩` where `H` is the finite-support bit vectors over ω, ω is cut into
/// consecutive blocks `W_i` of length `i + 1` starting at `i(i+1)/2`, and `a`
/// cyclically shifts coordinates by one inside each block.
///
/// Encoded `[k, p1, p2, ..]` meaning `h · a^k` with `h` supported on the sorted
/// positions `p*`. The generator list is truncated to `a` and the first basis
/// vector of each of the first `blocks` blocks, so the context enumerates a
/// finitely generated subgroup; the center oracle is that of the full group.
#[derive(Debug, Clone, Copy)]
pub struct BlockShift {
    blocks: usize,
}

impl BlockShift {
    pub fn new(blocks: usize) -> Self {
        BlockShift { blocks }
    }

    pub fn blocks(&self) -> usize {
        self.blocks
    }

    pub fn block_start(i: usize) -> usize {
        i * (i + 1) / 2
    }

    pub fn block_of(p: usize) -> usize {
        let mut i = 0;
        while Self::block_start(i + 1) <= p {
            i += 1;
        }
        i
    }

    pub fn a() -> Element {
        Element(vec![1])
    }

    pub fn basis(p: usize) -> Element {
        Element(vec![0, p as i64])
    }

    /// Image of position `p` under `a^k`.
    pub fn shift(p: usize, k: i64) -> usize {
        let i = Self::block_of(p);
        let s = Self::block_start(i);
        let len = (i + 1) as i64;
        s + (p as i64 - s as i64 + k).rem_euclid(len) as usize
    }

    fn support(x: &Element) -> BTreeSet<usize> {
        x.0[1..].iter().map(|&p| p as usize).collect()
    }

    fn encode(k: i64, support: BTreeSet<usize>) -> Element {
        let mut v = vec![k];
        v.extend(support.into_iter().map(|p| p as i64));
        Element(v)
    }

    fn shifted(support: &BTreeSet<usize>, k: i64) -> BTreeSet<usize> {
        support.iter().map(|&p| Self::shift(p, k)).collect()
    }
}

impl Group for BlockShift {
    fn name(&self) -> String {
        format!("BlockShift[{}]", self.blocks)
    }

    fn identity(&self) -> Element {
        Element(vec![0])
    }

    fn compose(&self, x: &Element, y: &Element) -> Element {
        let k = x.0[0];
        let hy = Self::shifted(&Self::support(y), k);
        let h: BTreeSet<usize> = Self::support(x).symmetric_difference(&hy).copied().collect();
        Self::encode(k + y.0[0], h)
    }

    fn invert(&self, x: &Element) -> Element {
        let k = x.0[0];
        Self::encode(-k, Self::shifted(&Self::support(x), -k))
    }

    fn generators(&self) -> Vec<Element> {
        let mut gens = vec![Self::a()];
        gens.extend((0..self.blocks).map(|i| Self::basis(Self::block_start(i))));
        gens
    }

    fn is_finite_hint(&self) -> Option<bool> {
        Some(false)
    }

    fn format_components(&self, x: &Element) -> Vec<String> {
        let supp: Vec<String> = x.0[1..].iter().map(|p| p.to_string()).collect();
        vec![x.0[0].to_string(), format!("{{{}}}", supp.join(","))]
    }

    /// Central in the full group iff `k = 0` and the support is a union of
    /// whole blocks.
    fn is_central(&self, x: &Element) -> Option<bool> {
        let supp = Self::support(x);
        Some(x.0[0] == 0 && Self::shifted(&supp, 1) == supp)
    }

    /// Complements every block containing its first position, which picks one
    /// member of each coset modulo the whole-block vectors.
    fn center_key(&self, x: &Element) -> Option<Element> {
        let mut supp = Self::support(x);
        let blocks: BTreeSet<usize> = supp.iter().map(|&p| Self::block_of(p)).collect();
        for i in blocks {
            let s = Self::block_start(i);
            if supp.contains(&s) {
                for p in s..s + i + 1 {
                    if !supp.remove(&p) {
                        supp.insert(p);
                    }
                }
            }
        }
        Some(Self::encode(x.0[0], supp))
    }

    fn commutant(&self) -> Commutant {
        Commutant::Infinite
    }

    fn contains(&self, x: &Element) -> bool {
        !x.0.is_empty() && x.0[1..].windows(2).all(|w| w[0] < w[1]) && x.0[1..].iter().all(|&p| p >= 0)
    }
}
