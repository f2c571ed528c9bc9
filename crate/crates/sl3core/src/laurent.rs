//! Laurent polynomials in one variable `v` with exact rational coefficients.
//!
//! A value represents f(v) = sum over k of c_k * v^k with k ranging over
//! (possibly negative) integers and c_k exact rationals. This is the
//! coefficient ring for all quantum computations; the commutative/classical
//! specialization is evaluation at v = -1.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

/// Exact rational scalar used throughout.
pub type Rat = BigRational;

/// Build a rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Build the rational p/q (q must be nonzero).
pub fn rat(p: i64, q: i64) -> Rat {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Sparse Laurent polynomial in `v`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, Rat>,
}

impl LaurentPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::monomial(0, rat_int(1))
    }

    /// The single term c * v^exp (normalized away if c = 0).
    pub fn monomial(exp: i32, coeff: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    /// The constant polynomial with integer value n.
    pub fn from_int(n: i64) -> Self {
        Self::monomial(0, rat_int(n))
    }

    /// v^exp.
    pub fn v_pow(exp: i32) -> Self {
        Self::monomial(exp, rat_int(1))
    }

    /// Quantum integer [n] for n >= 0: [0] = 0, [1] = 1, [2] = -v - v^-1,
    /// [3] = v^2 + 1 + v^-2, and generally (-1)^(n-1) * (v^(n-1) + v^(n-3) + ... + v^(1-n)).
    pub fn quantum_int(n: u32) -> Self {
        let mut p = LaurentPoly::zero();
        if n == 0 {
            return p;
        }
        let sign = if n % 2 == 0 { rat_int(-1) } else { rat_int(1) };
        let n = n as i32;
        for i in 0..n {
            p += LaurentPoly::monomial(n - 1 - 2 * i, sign.clone());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0).is_one()
    }

    /// Coefficient of v^exp (zero if absent).
    pub fn coeff(&self, exp: i32) -> Rat {
        self.terms.get(&exp).cloned().unwrap_or_else(Rat::zero)
    }

    /// Iterator over (exponent, coefficient) pairs in increasing exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (&i32, &Rat)> {
        self.terms.iter()
    }

    /// Lowest exponent present, if nonzero.
    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    /// Highest exponent present, if nonzero.
    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Bar involution: v^k maps to v^(-k).
    pub fn bar(&self) -> Self {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            terms.insert(-e, c.clone());
        }
        LaurentPoly { terms }
    }

    /// Evaluate at v = -1 (the commutative/classical specialization).
    pub fn eval_neg_one(&self) -> Rat {
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            if e.rem_euclid(2) == 0 {
                acc += c;
            } else {
                acc -= c;
            }
        }
        acc
    }

    /// Evaluate at an arbitrary nonzero rational.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut pw = Rat::one();
            let ax = if *e >= 0 { x.clone() } else { x.recip() };
            for _ in 0..e.unsigned_abs() {
                pw *= &ax;
            }
            acc += c * pw;
        }
        acc
    }

    /// Multiply by a rational scalar in place.
    pub fn scale(&mut self, s: &Rat) {
        if s.is_zero() {
            self.terms.clear();
            return;
        }
        for c in self.terms.values_mut() {
            *c *= s;
        }
    }

    /// Multiply by v^k in place (shift all exponents).
    pub fn shift(&mut self, k: i32) {
        if k == 0 {
            return;
        }
        let old = std::mem::take(&mut self.terms);
        for (e, c) in old {
            self.terms.insert(e + k, c);
        }
    }

    /// True when every term has strictly negative exponent.
    pub fn all_exponents_negative(&self) -> bool {
        self.max_exp().map(|e| e < 0).unwrap_or(true)
    }

    /// True when every coefficient is a nonnegative integer.
    pub fn is_nonneg_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer() && !c.is_negative())
    }

    fn insert_add(&mut self, exp: i32, coeff: &Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Rat::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.insert_add(*e, c);
        }
    }
}

impl AddAssign<LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        *self += &rhs;
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.insert_add(*e, &(-c.clone()));
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        let mut out = self;
        out += &rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        let mut out = self;
        out -= &rhs;
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        out -= self;
        out
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.insert_add(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        let out = &*self * rhs;
        *self = out;
    }
}

fn fmt_rat(c: &Rat) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms in descending exponent order, e.g. `v^2 + 1 + v^-2`,
    /// `-v - v^-1`, `1/2*v^3 - 2`. The zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            match (*e, unit) {
                (0, _) => write!(f, "{}", fmt_rat(&mag))?,
                (1, true) => write!(f, "v")?,
                (1, false) => write!(f, "{}*v", fmt_rat(&mag))?,
                (_, true) => write!(f, "v^{}", e)?,
                (_, false) => write!(f, "{}*v^{}", fmt_rat(&mag), e)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Error from parsing the textual polynomial format.
#[derive(Debug, thiserror::Error)]
#[error("invalid Laurent polynomial syntax: {0}")]
pub struct ParseLaurentError(String);

impl FromStr for LaurentPoly {
    type Err = ParseLaurentError;

    /// Parse the `Display` format back. Accepts optional whitespace, explicit
    /// `1*` coefficients, and `+`/`-` separators.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(ParseLaurentError("empty input".into()));
        }
        // split into signed terms
        let bytes = compact.as_bytes();
        let mut terms: Vec<(bool, &str)> = Vec::new();
        let mut start = 0usize;
        let mut sign_neg = false;
        let mut i = 0usize;
        if bytes[0] == b'+' || bytes[0] == b'-' {
            sign_neg = bytes[0] == b'-';
            start = 1;
            i = 1;
        }
        while i < bytes.len() {
            let b = bytes[i];
            // a sign starts a new term unless it follows '^' (exponent sign)
            if (b == b'+' || b == b'-') && i > start && bytes[i - 1] != b'^' {
                terms.push((sign_neg, &compact[start..i]));
                sign_neg = b == b'-';
                start = i + 1;
            }
            i += 1;
        }
        if start >= compact.len() {
            return Err(ParseLaurentError(format!("dangling sign in {:?}", s)));
        }
        terms.push((sign_neg, &compact[start..]));

        let mut out = LaurentPoly::zero();
        for (neg, t) in terms {
            let (coeff_str, var_str) = match t.find('v') {
                Some(p) => (&t[..p], &t[p..]),
                None => (t, ""),
            };
            let coeff_str = coeff_str.strip_suffix('*').unwrap_or(coeff_str);
            let mut coeff: Rat = if coeff_str.is_empty() {
                if var_str.is_empty() {
                    return Err(ParseLaurentError(format!("empty term in {:?}", s)));
                }
                Rat::one()
            } else if let Some((p, q)) = coeff_str.split_once('/') {
                let pn: BigInt = p.parse().map_err(|_| ParseLaurentError(format!("bad numerator {:?}", p)))?;
                let qn: BigInt = q.parse().map_err(|_| ParseLaurentError(format!("bad denominator {:?}", q)))?;
                if qn.is_zero() {
                    return Err(ParseLaurentError("zero denominator".into()));
                }
                BigRational::new(pn, qn)
            } else {
                let n: BigInt = coeff_str
                    .parse()
                    .map_err(|_| ParseLaurentError(format!("bad coefficient {:?}", coeff_str)))?;
                BigRational::from_integer(n)
            };
            let exp: i32 = if var_str.is_empty() {
                0
            } else if var_str == "v" {
                1
            } else if let Some(e) = var_str.strip_prefix("v^") {
                e.parse().map_err(|_| ParseLaurentError(format!("bad exponent {:?}", e)))?
            } else {
                return Err(ParseLaurentError(format!("bad variable part {:?}", var_str)));
            };
            if neg {
                coeff = -coeff;
            }
            out.insert_add(exp, &coeff);
        }
        Ok(out)
    }
}

impl serde::Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn quantum_int_two_is_minus_v_minus_vinv() {
        assert_eq!(LaurentPoly::quantum_int(2), p("-v - v^-1"));
    }

    #[test]
    fn quantum_int_three_is_vsq_plus_one_plus_vinvsq() {
        assert_eq!(LaurentPoly::quantum_int(3), p("v^2 + 1 + v^-2"));
    }

    #[test]
    fn quantum_int_small_values() {
        assert!(LaurentPoly::quantum_int(0).is_zero());
        assert_eq!(LaurentPoly::quantum_int(1), LaurentPoly::one());
    }

    #[test]
    fn quantum_ints_specialize_to_integers_at_minus_one() {
        for n in 0..8u32 {
            assert_eq!(LaurentPoly::quantum_int(n).eval_neg_one(), rat_int(n as i64));
        }
    }

    #[test]
    fn bar_involution_flips_exponents() {
        assert_eq!(LaurentPoly::v_pow(3).bar(), LaurentPoly::v_pow(-3));
        let q3 = LaurentPoly::quantum_int(3);
        assert_eq!(q3.bar(), q3, "[3] is bar-invariant");
        let mixed = p("2*v^4 - 1/3*v^-1");
        assert_eq!(mixed.bar(), p("-1/3*v + 2*v^-4"));
        assert_eq!(mixed.bar().bar(), mixed);
    }

    #[test]
    fn square_of_quantum_two() {
        // (-v - v^-1)^2 = v^2 + 2 + v^-2 = [3] + 1
        let sq = &LaurentPoly::quantum_int(2) * &LaurentPoly::quantum_int(2);
        assert_eq!(sq, &LaurentPoly::quantum_int(3) + &LaurentPoly::one());
    }

    #[test]
    fn display_descending_with_rationals() {
        assert_eq!(p("1/2*v^3 - 2").to_string(), "1/2*v^3 - 2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::quantum_int(2).to_string(), "-v - v^-1");
        assert_eq!(LaurentPoly::quantum_int(3).to_string(), "v^2 + 1 + v^-2");
        assert_eq!(LaurentPoly::monomial(-5, rat(7, 3)).to_string(), "7/3*v^-5");
    }

    #[test]
    fn parse_round_trip() {
        for s in [
            "0",
            "1",
            "-1",
            "v",
            "-v - v^-1",
            "v^2 + 1 + v^-2",
            "1/2*v^3 - 2",
            "7/3*v^-5",
            "3*v^10 - 2*v - 1/6",
        ] {
            let q = p(s);
            assert_eq!(q.to_string(), s, "canonical form of {:?}", s);
            assert_eq!(p(&q.to_string()), q);
        }
        // non-canonical spellings normalize
        assert_eq!(p("1*v^1 + 1*v^-1 + v - v"), p("v + v^-1"));
        assert_eq!(p(" - v  -  v^-1 "), LaurentPoly::quantum_int(2));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<LaurentPoly>().is_err());
        assert!("v^".parse::<LaurentPoly>().is_err());
        assert!("+".parse::<LaurentPoly>().is_err());
        assert!("2w".parse::<LaurentPoly>().is_err());
        assert!("1/0".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn zero_terms_are_pruned() {
        let a = p("v + 1");
        let b = p("-v + 1");
        let s = &a + &b;
        assert_eq!(s, p("2"));
        assert_eq!(s.min_exp(), Some(0));
        assert_eq!(s.max_exp(), Some(0));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn exponent_predicates() {
        assert!(p("v^-1 + 2*v^-3").all_exponents_negative());
        assert!(!p("1 + v^-1").all_exponents_negative());
        assert!(p("v + 2").is_nonneg_integral());
        assert!(!p("v - 2").is_nonneg_integral());
        assert!(!p("1/2").is_nonneg_integral());
    }

    #[test]
    fn eval_general() {
        let q = p("v^2 + 1 + v^-2");
        assert_eq!(q.eval(&rat_int(2)), rat(21, 4));
        assert_eq!(q.eval_neg_one(), rat_int(3));
    }

    #[test]
    fn shift_and_scale() {
        let mut q = p("v + 1");
        q.shift(2);
        assert_eq!(q, p("v^3 + v^2"));
        q.scale(&rat(1, 2));
        assert_eq!(q, p("1/2*v^3 + 1/2*v^2"));
    }
}
