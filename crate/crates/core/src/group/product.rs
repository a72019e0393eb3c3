use std::sync::Arc;

use super::{Commutant, Element, Group, GroupRef};
use crate::error::{Error, Result};

/// Product encodings are `[len(a), a.., b..]`.
fn pack(a: &Element, b: &Element) -> Element {
    let mut v = Vec::with_capacity(1 + a.0.len() + b.0.len());
    v.push(a.0.len() as i64);
    v.extend_from_slice(&a.0);
    v.extend_from_slice(&b.0);
    Element(v)
}

fn unpack(x: &Element) -> (Element, Element) {
    let k = x.0[0] as usize;
    (Element(x.0[1..1 + k].to_vec()), Element(x.0[1 + k..].to_vec()))
}

fn split_ok(x: &Element) -> bool {
    !x.0.is_empty() && x.0[0] >= 0 && (x.0[0] as usize) < x.0.len()
}

pub struct DirectProduct {
    a: GroupRef,
    b: GroupRef,
}

pub fn direct_product(a: GroupRef, b: GroupRef) -> DirectProduct {
    DirectProduct { a, b }
}

impl DirectProduct {
    pub fn pair(&self, a: &Element, b: &Element) -> Element {
        pack(a, b)
    }

    pub fn split(&self, x: &Element) -> (Element, Element) {
        unpack(x)
    }
}

impl Group for DirectProduct {
    fn name(&self) -> String {
        format!("{}×{}", self.a.name(), self.b.name())
    }

    fn identity(&self) -> Element {
        pack(&self.a.identity(), &self.b.identity())
    }

    fn compose(&self, x: &Element, y: &Element) -> Element {
        let (xa, xb) = unpack(x);
        let (ya, yb) = unpack(y);
        pack(&self.a.compose(&xa, &ya), &self.b.compose(&xb, &yb))
    }

    fn invert(&self, x: &Element) -> Element {
        let (xa, xb) = unpack(x);
        pack(&self.a.invert(&xa), &self.b.invert(&xb))
    }

    fn generators(&self) -> Vec<Element> {
        let ea = self.a.identity();
        let eb = self.b.identity();
        let mut gens: Vec<Element> = self.a.generators().iter().map(|g| pack(g, &eb)).collect();
        gens.extend(self.b.generators().iter().map(|h| pack(&ea, h)));
        gens
    }

    fn is_finite_hint(&self) -> Option<bool> {
        match (self.a.is_finite_hint(), self.b.is_finite_hint()) {
            (Some(true), Some(true)) => Some(true),
            (Some(false), _) | (_, Some(false)) => Some(false),
            _ => None,
        }
    }

    fn format_components(&self, x: &Element) -> Vec<String> {
        let (xa, xb) = unpack(x);
        let mut c = self.a.format_components(&xa);
        c.extend(self.b.format_components(&xb));
        c
    }

    fn is_central(&self, x: &Element) -> Option<bool> {
        let (xa, xb) = unpack(x);
        Some(self.a.is_central(&xa)? && self.b.is_central(&xb)?)
    }

    fn center_key(&self, x: &Element) -> Option<Element> {
        let (xa, xb) = unpack(x);
        Some(pack(&self.a.center_key(&xa)?, &self.b.center_key(&xb)?))
    }

    fn commutant(&self) -> Commutant {
        match (self.a.commutant(), self.b.commutant()) {
            (Commutant::Finite(m), Commutant::Finite(n)) => Commutant::Finite(m * n),
            (Commutant::Infinite, _) | (_, Commutant::Infinite) => Commutant::Infinite,
            _ => Commutant::Unknown,
        }
    }

    fn contains(&self, x: &Element) -> bool {
        if !split_ok(x) {
            return false;
        }
        let (xa, xb) = unpack(x);
        self.a.contains(&xa) && self.b.contains(&xb)
    }
}

pub type ActionFn = Arc<dyn Fn(&Element, &Element) -> Element + Send + Sync>;

/// `N ⋊ H` with law `(n, h)(n', h') = (n · act(h, n'), hh')`.
pub struct SemidirectProduct {
    n: GroupRef,
    h: GroupRef,
    act: ActionFn,
}

/// Builds `N ⋊ H`, checking on the radius-2 balls of both factors that `act`
/// is a homomorphism from `H` into the automorphisms of `N`.
pub fn semidirect_product(n: GroupRef, h: GroupRef, act: ActionFn) -> Result<SemidirectProduct> {
    let ns = n.enumerate(2);
    let hs = h.enumerate(2);
    for x in &ns {
        if act(&h.identity(), x) != *x {
            return Err(Error::ActionNotAutomorphism(format!(
                "identity moves {}",
                n.format(x)
            )));
        }
    }
    for g in &hs {
        for x in &ns {
            for y in &ns {
                let lhs = act(g, &n.compose(x, y));
                let rhs = n.compose(&act(g, x), &act(g, y));
                if lhs != rhs {
                    return Err(Error::ActionNotAutomorphism(format!(
                        "{} does not act multiplicatively on ({}, {})",
                        h.format(g),
                        n.format(x),
                        n.format(y)
                    )));
                }
            }
        }
        for g2 in &hs {
            for x in &ns {
                if act(&h.compose(g, g2), x) != act(g, &act(g2, x)) {
                    return Err(Error::ActionNotAutomorphism(format!(
                        "action of {}·{} is not the composite",
                        h.format(g),
                        h.format(g2)
                    )));
                }
            }
        }
    }
    Ok(SemidirectProduct { n, h, act })
}

impl SemidirectProduct {
    pub fn pair(&self, n: &Element, h: &Element) -> Element {
        pack(n, h)
    }

    pub fn split(&self, x: &Element) -> (Element, Element) {
        unpack(x)
    }
}

impl Group for SemidirectProduct {
    fn name(&self) -> String {
        format!("{}⋊{}", self.n.name(), self.h.name())
    }

    fn identity(&self) -> Element {
        pack(&self.n.identity(), &self.h.identity())
    }

    fn compose(&self, x: &Element, y: &Element) -> Element {
        let (xn, xh) = unpack(x);
        let (yn, yh) = unpack(y);
        pack(
            &self.n.compose(&xn, &(self.act)(&xh, &yn)),
            &self.h.compose(&xh, &yh),
        )
    }

    fn invert(&self, x: &Element) -> Element {
        let (xn, xh) = unpack(x);
        let hi = self.h.invert(&xh);
        pack(&(self.act)(&hi, &self.n.invert(&xn)), &hi)
    }

    fn generators(&self) -> Vec<Element> {
        let en = self.n.identity();
        let eh = self.h.identity();
        let mut gens: Vec<Element> = self.n.generators().iter().map(|g| pack(g, &eh)).collect();
        gens.extend(self.h.generators().iter().map(|g| pack(&en, g)));
        gens
    }

    fn is_finite_hint(&self) -> Option<bool> {
        match (self.n.is_finite_hint(), self.h.is_finite_hint()) {
            (Some(true), Some(true)) => Some(true),
            (Some(false), _) | (_, Some(false)) => Some(false),
            _ => None,
        }
    }

    fn format_components(&self, x: &Element) -> Vec<String> {
        let (xn, xh) = unpack(x);
        let mut c = self.n.format_components(&xn);
        c.extend(self.h.format_components(&xh));
        c
    }

    fn contains(&self, x: &Element) -> bool {
        if !split_ok(x) {
            return false;
        }
        let (xn, xh) = unpack(x);
        self.n.contains(&xn) && self.h.contains(&xh)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::generate_finite;
    use crate::zoo::Abelian;

    fn zn(n: i64) -> GroupRef {
        Arc::new(Abelian::new(vec![n]))
    }

    #[test]
    fn klein_four() {
        let g: GroupRef = Arc::new(direct_product(zn(2), zn(2)));
        let f = generate_finite(&g.generators(), &g, 100).unwrap();
        assert_eq!(f.order(), 4);
        assert!(f.is_abelian());
        assert!(f.elements().iter().all(|x| g.compose(x, x) == g.identity()));
    }

    #[test]
    fn z3_by_inversion_is_s3() {
        let act: ActionFn = Arc::new(|h: &Element, n: &Element| {
            if h.0[0] == 1 {
                Element(vec![(3 - n.0[0]) % 3])
            } else {
                n.clone()
            }
        });
        let g: GroupRef = Arc::new(semidirect_product(zn(3), zn(2), act).unwrap());
        let f = generate_finite(&g.generators(), &g, 100).unwrap();
        assert_eq!(f.order(), 6);
        assert!(!f.is_abelian());
        let mut sizes: Vec<usize> = f.class_partition().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
    }

    #[test]
    fn trivial_action_gives_direct_law() {
        let act: ActionFn = Arc::new(|_: &Element, n: &Element| n.clone());
        let s = semidirect_product(zn(4), zn(3), act).unwrap();
        let d = direct_product(zn(4), zn(3));
        for x in d.enumerate(4) {
            for y in d.enumerate(4) {
                assert_eq!(s.compose(&x, &y), d.compose(&x, &y));
            }
        }
    }

    #[test]
    fn rejects_non_automorphism() {
        let act: ActionFn = Arc::new(|h: &Element, n: &Element| {
            if h.0[0] == 1 {
                Element(vec![(n.0[0] + 1) % 3])
            } else {
                n.clone()
            }
        });
        assert!(matches!(
            semidirect_product(zn(3), zn(2), act),
            Err(Error::ActionNotAutomorphism(_))
        ));
    }
}
