//! Formal linear combinations of diagrams with Laurent-polynomial
//! coefficients, merged by canonical key.

use crate::laurent::{LaurentPoly, Rat};
use crate::web::Diagram;
use indexmap::IndexMap;

/// A finite sum  c_1 · D_1 + ... + c_n · D_n  with diagrams deduplicated by
/// canonical key and zero coefficients pruned.
#[derive(Clone, Default)]
pub struct WebCombo {
    terms: IndexMap<String, (Diagram, LaurentPoly)>,
}

impl WebCombo {
    pub fn zero() -> Self {
        WebCombo::default()
    }

    /// The combination 1 · d.
    pub fn from_diagram(d: Diagram) -> Self {
        let mut c = WebCombo::zero();
        c.add_term(d, LaurentPoly::one());
        c
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Add c · d, merging with an existing term for the same key.
    pub fn add_term(&mut self, d: Diagram, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let key = d.canonical_key();
        match self.terms.get_mut(&key) {
            Some((_, c0)) => {
                *c0 += &c;
                if c0.is_zero() {
                    self.terms.shift_remove(&key);
                }
            }
            None => {
                self.terms.insert(key, (d.compact(), c));
            }
        }
    }

    pub fn add(&mut self, other: &WebCombo) {
        for (d, c) in other.iter() {
            self.add_term(d.clone(), c.clone());
        }
    }

    pub fn scale_poly(&mut self, p: &LaurentPoly) {
        if p.is_zero() {
            self.terms.clear();
            return;
        }
        for (_, (_, c)) in self.terms.iter_mut() {
            *c *= p;
        }
    }

    pub fn scale_rat(&mut self, s: &Rat) {
        use num_traits::Zero;
        if s.is_zero() {
            self.terms.clear();
            return;
        }
        for (_, (_, c)) in self.terms.iter_mut() {
            c.scale(s);
        }
    }

    pub fn negate(&mut self) {
        self.scale_rat(&crate::laurent::rat_int(-1));
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Diagram, &LaurentPoly)> {
        self.terms.values().map(|(d, c)| (d, c))
    }

    pub fn keys(&self) -> impl Iterator<Item = &String> {
        self.terms.keys()
    }

    pub fn coeff_of_key(&self, key: &str) -> Option<&LaurentPoly> {
        self.terms.get(key).map(|(_, c)| c)
    }

    pub fn coeff_of(&self, d: &Diagram) -> Option<&LaurentPoly> {
        self.coeff_of_key(&d.canonical_key())
    }

    /// Exact equality: same diagram keys with equal coefficients.
    pub fn equals(&self, other: &WebCombo) -> bool {
        if self.terms.len() != other.terms.len() {
            return false;
        }
        self.terms.iter().all(|(k, (_, c))| other.terms.get(k).map(|(_, c2)| c2 == c).unwrap_or(false))
    }

    /// self - other as a fresh combination.
    pub fn minus(&self, other: &WebCombo) -> WebCombo {
        let mut out = self.clone();
        let mut neg = other.clone();
        neg.negate();
        out.add(&neg);
        out
    }
}

impl std::fmt::Debug for WebCombo {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "WebCombo[{} terms]", self.terms.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::rat;
    use crate::web::Color;

    fn arc() -> Diagram {
        let mut d = Diagram::new();
        let w = d.add_boundary(Color::White);
        let b = d.add_boundary(Color::Black);
        d.connect(w, b);
        d
    }

    #[test]
    fn merge_and_cancel() {
        let mut c = WebCombo::zero();
        c.add_term(arc(), LaurentPoly::v_pow(1));
        c.add_term(arc(), LaurentPoly::v_pow(-1));
        assert_eq!(c.len(), 1);
        let p: LaurentPoly = "v + v^-1".parse().unwrap();
        assert_eq!(c.iter().next().unwrap().1, &p);
        c.add_term(arc(), -p);
        assert!(c.is_zero());
    }

    #[test]
    fn equality_ignores_insertion_order() {
        let other = {
            let mut d = Diagram::new();
            let b = d.add_boundary(Color::Black);
            let w = d.add_boundary(Color::White);
            d.connect(w, b);
            d
        };
        let mut c1 = WebCombo::zero();
        c1.add_term(arc(), LaurentPoly::one());
        c1.add_term(other.clone(), LaurentPoly::from_int(2));
        let mut c2 = WebCombo::zero();
        c2.add_term(other, LaurentPoly::from_int(2));
        c2.add_term(arc(), LaurentPoly::one());
        assert!(c1.equals(&c2));
        assert!(!c1.equals(&WebCombo::zero()));
    }

    #[test]
    fn scaling() {
        let mut c = WebCombo::from_diagram(arc());
        c.scale_rat(&rat(1, 2));
        let half: LaurentPoly = "1/2".parse().unwrap();
        assert_eq!(c.iter().next().unwrap().1, &half);
        let m = c.minus(&c.clone());
        assert!(m.is_zero());
    }
}
