//! Cabling operations on the hexagonal web and their Chebyshev bookkeeping.
//!
//! Superimposing `k` nested copies of the hexagonal web `W` (sharing the six
//! clasps) and rewriting to the web basis realizes the `k`-th power of the
//! invariant `[W]` in the commutative skein algebra; the **thickening**
//! `Thick_k` is the resulting basis expansion, a single web for every `k`.
//! Inserting a cyclic braid into the cable before reducing gives the
//! **bracelet**, and averaging over all braid wirings gives the **band**.
//! These satisfy the Chebyshev recursions in two variables
//!
//! ```text
//! P_k = x P_{k-1} - y P_{k-2},    x = [W],  y = [B(W)],
//! ```
//!
//! with first-kind normalization `T_0 = 2, T_1 = x` for bracelets and
//! second-kind `U_0 = 1, U_1 = x` for bands, where the web `B(W)` is defined
//! by `2 B(W) = W^2 - bracelet_2(W)` and comes out as the cup necklace.
//!
//! The commutative algebra is reached by rewriting with the quantum engine
//! and evaluating every coefficient at `v = -1`; at that point all crossing
//! resolutions agree, so the result does not depend on how the superimposed
//! copies were flattened into the disc.
//!
//! [`ChebPoly`] holds integer polynomials in `x, y`; [`monomial_in_cheb`]
//! inverts the recursion, expanding a power of `x` with the all-positive
//! coefficients `binom(k, m)` (first kind) and
//! `binom(k, m) - binom(k, m-1)` (second kind).

use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeMap;
use std::hash::{Hash, Hasher};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use sl3core::json::{combo_from_json, combo_to_json};
use sl3core::laurent::rat;
use sl3core::{rat_int, Diagram, Rat, WebCombo};
use sl3engine::{reduce_to_basis, SkeinError};

use std::sync::Mutex;

use crate::corpus::{
    cables_with_braid, close_cut, cut_hexagon, cut_layer_outside, hexagon_w, necklace_b,
    nest_b_outside, nest_w_outside,
};

/// Chebyshev normalization: first kind (`T_0 = 2`) or second kind
/// (`U_0 = 1`).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ChebKind {
    First,
    Second,
}

impl ChebKind {
    pub fn letter(self) -> char {
        match self {
            ChebKind::First => 'T',
            ChebKind::Second => 'U',
        }
    }
}

/// Integer polynomial in the commuting variables `x, y`, keyed by exponent
/// pair.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct ChebPoly {
    pub coeffs: BTreeMap<(u32, u32), i64>,
}

impl ChebPoly {
    pub fn zero() -> Self {
        ChebPoly::default()
    }

    pub fn constant(c: i64) -> Self {
        let mut p = ChebPoly::zero();
        p.add_term(0, 0, c);
        p
    }

    pub fn x() -> Self {
        let mut p = ChebPoly::zero();
        p.add_term(1, 0, 1);
        p
    }

    pub fn add_term(&mut self, xpow: u32, ypow: u32, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.coeffs.entry((xpow, ypow)).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.coeffs.remove(&(xpow, ypow));
        }
    }

    pub fn add(&mut self, other: &ChebPoly) {
        for (&(i, j), &c) in &other.coeffs {
            self.add_term(i, j, c);
        }
    }

    pub fn sub(&mut self, other: &ChebPoly) {
        for (&(i, j), &c) in &other.coeffs {
            self.add_term(i, j, -c);
        }
    }

    /// Multiply by `x`.
    pub fn shift_x(&self) -> ChebPoly {
        let mut p = ChebPoly::zero();
        for (&(i, j), &c) in &self.coeffs {
            p.add_term(i + 1, j, c);
        }
        p
    }

    /// Multiply by `y`.
    pub fn shift_y(&self) -> ChebPoly {
        let mut p = ChebPoly::zero();
        for (&(i, j), &c) in &self.coeffs {
            p.add_term(i, j + 1, c);
        }
        p
    }

    /// Formal derivative in `x`.
    pub fn d_dx(&self) -> ChebPoly {
        let mut p = ChebPoly::zero();
        for (&(i, j), &c) in &self.coeffs {
            if i > 0 {
                p.add_term(i - 1, j, c * i as i64);
            }
        }
        p
    }

    /// Render like `x^3 - 2*x*y`.
    pub fn pretty(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        // highest x-degree first
        for (&(i, j), &c) in self.coeffs.iter().rev() {
            let mag = c.abs();
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if mag != 1 || (i == 0 && j == 0) {
                factors.push(mag.to_string());
            }
            if i == 1 {
                factors.push("x".into());
            } else if i > 1 {
                factors.push(format!("x^{}", i));
            }
            if j == 1 {
                factors.push("y".into());
            } else if j > 1 {
                factors.push(format!("y^{}", j));
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

/// The Chebyshev polynomial `T_k` or `U_k` in the variables `x, y`, via the
/// recursion `P_k = x P_{k-1} - y P_{k-2}`.
pub fn cheb(kind: ChebKind, k: usize) -> ChebPoly {
    let mut prev = match kind {
        ChebKind::First => ChebPoly::constant(2),
        ChebKind::Second => ChebPoly::constant(1),
    };
    if k == 0 {
        return prev;
    }
    let mut cur = ChebPoly::x();
    for _ in 1..k {
        let mut next = cur.shift_x();
        next.sub(&prev.shift_y());
        prev = cur;
        cur = next;
    }
    cur
}

/// Expansion of `x^k` in the basis `{ y^((k-j)/2) P_j }`: maps `j` to its
/// (always positive) integer coefficient. Defined for `k >= 1`.
pub fn monomial_in_cheb(kind: ChebKind, k: usize) -> BTreeMap<usize, i64> {
    assert!(k >= 1, "monomial expansion starts at the first power");
    let mut exp: BTreeMap<usize, i64> = BTreeMap::new();
    exp.insert(1, 1);
    for _ in 1..k {
        let mut next: BTreeMap<usize, i64> = BTreeMap::new();
        for (&j, &c) in &exp {
            if j == 0 {
                // x P_0 is 2 P_1 in the first kind, P_1 in the second
                let f = if kind == ChebKind::First { 2 } else { 1 };
                *next.entry(1).or_insert(0) += f * c;
            } else {
                *next.entry(j + 1).or_insert(0) += c;
                *next.entry(j - 1).or_insert(0) += c;
            }
        }
        exp = next;
    }
    exp.retain(|_, c| *c != 0);
    exp
}

/// Check that an expansion map reassembles `x^k` symbolically.
pub fn expansion_reassembles(kind: ChebKind, k: usize, exp: &BTreeMap<usize, i64>) -> bool {
    let mut acc = ChebPoly::zero();
    for (&j, &c) in exp {
        debug_assert_eq!((k - j) % 2, 0, "parity of the expansion");
        let m = ((k - j) / 2) as u32;
        let mut term = cheb(kind, j);
        for _ in 0..m {
            term = term.shift_y();
        }
        term.coeffs.values_mut().for_each(|v| *v *= c);
        acc.add(&term);
    }
    let mut xk = ChebPoly::zero();
    xk.add_term(k as u32, 0, 1);
    acc == xk
}

/// Linear combination of basis webs with exact rational coefficients, keyed
/// by canonical form — the commutative (`v = -1`) counterpart of
/// [`WebCombo`].
#[derive(Clone, Default)]
pub struct RatCombo {
    terms: BTreeMap<String, (Diagram, Rat)>,
}

impl RatCombo {
    pub fn zero() -> Self {
        RatCombo::default()
    }

    pub fn from_web(d: Diagram, c: Rat) -> Self {
        let mut r = RatCombo::zero();
        r.add_term(d, c);
        r
    }

    /// Evaluate a quantum combination at `v = -1`.
    pub fn from_quantum(wc: &WebCombo) -> Self {
        let mut r = RatCombo::zero();
        for (d, coeff) in wc.iter() {
            r.add_term(d.clone(), coeff.eval_neg_one());
        }
        r
    }

    pub fn add_term(&mut self, d: Diagram, c: Rat) {
        if c.is_zero() {
            return;
        }
        let key = d.canonical_key();
        let entry = self.terms.entry(key.clone()).or_insert_with(|| (d, Rat::zero()));
        entry.1 += c;
        if entry.1.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&mut self, other: &RatCombo) {
        for (d, c) in other.iter() {
            self.add_term(d.clone(), c.clone());
        }
    }

    pub fn scale(&mut self, c: &Rat) {
        if c.is_zero() {
            self.terms.clear();
            return;
        }
        for (_, (_, v)) in self.terms.iter_mut() {
            *v *= c;
        }
    }

    pub fn negate(&mut self) {
        self.scale(&-Rat::one());
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Diagram, &Rat)> {
        self.terms.values().map(|(d, c)| (d, c))
    }

    pub fn coeff_of_key(&self, key: &str) -> Rat {
        self.terms.get(key).map(|(_, c)| c.clone()).unwrap_or_else(Rat::zero)
    }

    /// The unique term, if the combination is a single web.
    pub fn single(&self) -> Option<(&Diagram, &Rat)> {
        if self.terms.len() == 1 {
            self.iter().next()
        } else {
            None
        }
    }

    pub fn equals(&self, other: &RatCombo) -> bool {
        if self.terms.len() != other.terms.len() {
            return false;
        }
        self.terms
            .iter()
            .all(|(k, (_, c))| other.terms.get(k).map(|(_, oc)| oc == c).unwrap_or(false))
    }
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    key: String,
    combo: String,
}

/// Rewrite to the web basis, consulting the on-disk cache named by the
/// `SL3WEB_CACHE_DIR` environment variable when it is set. Entries are keyed
/// by the canonical form of the input diagram.
pub fn reduce_cached(d: &Diagram) -> Result<WebCombo, SkeinError> {
    let key = d.canonical_key();
    let dir = match std::env::var_os("SL3WEB_CACHE_DIR") {
        Some(dir) if !dir.is_empty() => std::path::PathBuf::from(dir),
        _ => return reduce_to_basis(d),
    };
    let mut h = DefaultHasher::new();
    key.hash(&mut h);
    let path = dir.join(format!("reduce-{:016x}.json", h.finish()));
    if let Ok(body) = std::fs::read_to_string(&path) {
        if let Ok(entry) = serde_json::from_str::<CacheEntry>(&body) {
            if entry.key == key {
                if let Ok(combo) = combo_from_json(&entry.combo) {
                    return Ok(combo);
                }
            }
        }
    }
    let combo = reduce_to_basis(d)?;
    let entry = CacheEntry { key, combo: combo_to_json(&combo) };
    if std::fs::create_dir_all(&dir).is_ok() {
        let body = serde_json::to_string(&entry).expect("serializable");
        let _ = std::fs::write(&path, body);
    }
    Ok(combo)
}

/// Rewrite to the web basis and evaluate at `v = -1`.
pub fn reduce_commutative(d: &Diagram) -> Result<RatCombo, SkeinError> {
    Ok(RatCombo::from_quantum(&reduce_cached(d)?))
}

/// The `k`-th thickening as a basis expansion: the commutative power
/// `[W]^k`, computed by nesting one hexagon layer at a time and rewriting
/// after each layer.
pub fn thick_combo(k: usize) -> Result<RatCombo, SkeinError> {
    if k == 0 {
        return Ok(RatCombo::from_web(Diagram::empty(), Rat::one()));
    }
    let (mut acc, start) = {
        let cache = THICK_CACHE.lock().unwrap();
        match cache.range(..=k).next_back() {
            Some((&kk, c)) => (c.clone(), kk),
            None => (RatCombo::from_web(hexagon_w(), Rat::one()), 1),
        }
    };
    for m in start..k {
        let mut next = RatCombo::zero();
        for (d, c) in acc.iter() {
            let mut red = reduce_commutative(&nest_w_outside(d))?;
            red.scale(c);
            next.add(&red);
        }
        acc = next;
        THICK_CACHE.lock().unwrap().insert(m + 1, acc.clone());
    }
    Ok(acc)
}

/// The thickening as a single web. Errors if the expansion is not one web
/// with coefficient one (it is, for every `k`, which this checks).
pub fn thick_web(k: usize) -> Result<Diagram, SkeinError> {
    let combo = thick_combo(k)?;
    match combo.single() {
        Some((d, c)) if *c == Rat::one() => Ok(d.clone()),
        _ => Err(SkeinError::Invariant(format!(
            "thickening {} is not a single coefficient-one web ({} terms)",
            k,
            combo.len()
        ))),
    }
}

/// In-process cache of reduced thickening expansions, keyed by layer count.
static THICK_CACHE: Mutex<BTreeMap<usize, RatCombo>> = Mutex::new(BTreeMap::new());

/// In-process cache of reduced cut-cable expansions, keyed by layer count.
static CUT_CACHE: Mutex<BTreeMap<usize, RatCombo>> = Mutex::new(BTreeMap::new());

/// Reduced expansion of the `k`-layer cable severed at the braid channel:
/// every cycle is cut where a braid may later be inserted and its loose ends
/// are routed to `2k` extra boundary points. Unlike the closed braided
/// cable, the cut cable factorizes layer by layer, so rewriting interleaves
/// with nesting exactly as for the thickening and the crossing count per
/// rewrite stays at `6(k-1)` instead of `3k(k-1)` plus braid. Results are
/// cached per `k` for reuse across bracelet and band closures.
pub fn cut_cable_combo(k: usize) -> Result<RatCombo, SkeinError> {
    assert!(k >= 1, "the cut cable needs at least one layer");
    let (mut acc, start) = {
        let cache = CUT_CACHE.lock().unwrap();
        match cache.range(..=k).next_back() {
            Some((&kk, c)) => (c.clone(), kk),
            None => (RatCombo::zero(), 0),
        }
    };
    if start == 0 {
        acc = reduce_commutative(&cut_hexagon())?;
        CUT_CACHE.lock().unwrap().insert(1, acc.clone());
    }
    for m in start.max(1)..k {
        let mut next = RatCombo::zero();
        for (d, c) in acc.iter() {
            let mut red = reduce_commutative(&cut_layer_outside(d))?;
            red.scale(c);
            next.add(&red);
        }
        acc = next;
        CUT_CACHE.lock().unwrap().insert(m + 1, acc.clone());
    }
    Ok(acc)
}

/// Close the reduced cut cable of `k` layers with a positive braid word:
/// glue each term across the channel, rewrite, and weight by the
/// swallowed-loop factor (each closed loop counts the loop value `3`).
pub fn braided_closure_combo(k: usize, word: &[usize]) -> Result<RatCombo, SkeinError> {
    let cut = cut_cable_combo(k)?;
    let mut out = RatCombo::zero();
    for (d, c) in cut.iter() {
        let (closed, loops) = close_cut(d, word);
        let mut red = reduce_commutative(&closed)?;
        red.scale(&(c.clone() * rat_int(3i64.pow(loops as u32))));
        out.add(&red);
    }
    Ok(out)
}

/// Adjacent-transposition word realizing a permutation: applying the swaps in
/// order to the identity arrangement moves the strand starting at position
/// `m` to position `perm[m]`.
pub fn braid_word(perm: &[usize]) -> Vec<usize> {
    let k = perm.len();
    // target[p] = strand that must end at position p
    let mut target = vec![0usize; k];
    for (m, &p) in perm.iter().enumerate() {
        target[p] = m;
    }
    let mut arr: Vec<usize> = (0..k).collect();
    let mut word = Vec::new();
    for p in 0..k {
        let mut q = arr.iter().position(|&s| s == target[p]).expect("strand present");
        while q > p {
            arr.swap(q - 1, q);
            word.push(q - 1);
            q -= 1;
        }
    }
    debug_assert_eq!(arr, target);
    word
}

/// The `k`-th bracelet: the `k`-cable of the hexagonal web closed up with a
/// single cyclic shift, reduced commutatively. Satisfies the first-kind
/// Chebyshev recursion; `bracelet_0` is twice the empty web.
pub fn bracelet_combo(k: usize) -> Result<RatCombo, SkeinError> {
    if k == 0 {
        return Ok(RatCombo::from_web(Diagram::empty(), rat_int(2)));
    }
    // the word (0)(1)...(k-2) realizes a single k-cycle with k-1 crossings
    let word: Vec<usize> = (0..k.saturating_sub(1)).collect();
    braided_closure_combo(k, &word)
}

/// The `k`-th bracelet computed on the closed braided cable in one piece,
/// with no channel cut. Exponential in `k`; kept as an independent
/// cross-check of the cut-and-close route at small sizes.
pub fn bracelet_combo_direct(k: usize) -> Result<RatCombo, SkeinError> {
    if k == 0 {
        return Ok(RatCombo::from_web(Diagram::empty(), rat_int(2)));
    }
    let word: Vec<usize> = (0..k.saturating_sub(1)).collect();
    reduce_commutative(&cables_with_braid(k, &word))
}

/// The `k`-th band: the average over all `k!` wirings of the cable ends,
/// each realized by a positive adjacent-transposition word. Satisfies the
/// second-kind Chebyshev recursion; `band_0` is the empty web.
pub fn band_combo(k: usize) -> Result<RatCombo, SkeinError> {
    if k == 0 {
        return Ok(RatCombo::from_web(Diagram::empty(), Rat::one()));
    }
    let mut acc = RatCombo::zero();
    let mut perm: Vec<usize> = (0..k).collect();
    let mut count = 0u64;
    loop {
        acc.add(&braided_closure_combo(k, &braid_word(&perm))?);
        count += 1;
        if !next_permutation(&mut perm) {
            break;
        }
    }
    let fact: i64 = (1..=k as i64).product();
    debug_assert_eq!(count, fact as u64);
    acc.scale(&rat(1, fact));
    Ok(acc)
}

/// Lexicographic successor in place; false when wrapped around.
fn next_permutation(arr: &mut [usize]) -> bool {
    let n = arr.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && arr[i - 1] >= arr[i] {
        i -= 1;
    }
    if i == 0 {
        arr.reverse();
        return false;
    }
    let mut j = n - 1;
    while arr[j] <= arr[i - 1] {
        j -= 1;
    }
    arr.swap(i - 1, j);
    arr[i..].reverse();
    true
}

/// The web `B(W)` from `2 B(W) = W^2 - bracelet_2`: the basis expansion of
/// the degree-two correction, which comes out as the cup necklace.
pub fn coefficient_web_b() -> Result<RatCombo, SkeinError> {
    let mut b = thick_combo(2)?;
    let mut brac = bracelet_combo(2)?;
    brac.negate();
    b.add(&brac);
    b.scale(&rat(1, 2));
    Ok(b)
}

/// The basis expansion of the monomial `x^i y^j` with `x = [W]`,
/// `y = [B(W)]`: `i` nested hexagon layers reduced, then `j` necklace layers
/// drawn outside (these add no crossings, so no further rewriting is
/// needed).
pub fn monomial_combo(i: usize, j: usize) -> Result<RatCombo, SkeinError> {
    let (base, remaining) = if i > 0 {
        (thick_combo(i)?, j)
    } else if j > 0 {
        (RatCombo::from_web(necklace_b(), Rat::one()), j - 1)
    } else {
        return Ok(RatCombo::from_web(Diagram::empty(), Rat::one()));
    };
    let mut out = base;
    for _ in 0..remaining {
        let mut next = RatCombo::zero();
        for (d, c) in out.iter() {
            next.add_term(nest_b_outside(d), c.clone());
        }
        out = next;
    }
    Ok(out)
}

/// Evaluate an `x, y` polynomial into the web basis via [`monomial_combo`].
pub fn eval_in_webs(p: &ChebPoly) -> Result<RatCombo, SkeinError> {
    let mut acc = RatCombo::zero();
    for (&(i, j), &c) in &p.coeffs {
        let mut m = monomial_combo(i as usize, j as usize)?;
        m.scale(&rat_int(c));
        acc.add(&m);
    }
    Ok(acc)
}

/// Does the `k`-th bracelet equal `T_k([W], [B(W)])` in the web basis?
pub fn verify_bracelet(k: usize) -> Result<bool, SkeinError> {
    Ok(bracelet_combo(k)?.equals(&eval_in_webs(&cheb(ChebKind::First, k))?))
}

/// Does the `k`-th band equal `U_k([W], [B(W)])` in the web basis?
pub fn verify_band(k: usize) -> Result<bool, SkeinError> {
    Ok(band_combo(k)?.equals(&eval_in_webs(&cheb(ChebKind::Second, k))?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use sl3core::web::format_signature;

    #[test]
    fn chebyshev_polynomials_match_hand_values() {
        assert_eq!(cheb(ChebKind::First, 0).pretty(), "2");
        assert_eq!(cheb(ChebKind::First, 1).pretty(), "x");
        assert_eq!(cheb(ChebKind::First, 2).pretty(), "x^2 - 2*y");
        assert_eq!(cheb(ChebKind::First, 3).pretty(), "x^3 - 3*x*y");
        assert_eq!(cheb(ChebKind::First, 4).pretty(), "x^4 - 4*x^2*y + 2*y^2");
        assert_eq!(cheb(ChebKind::Second, 2).pretty(), "x^2 - y");
        assert_eq!(cheb(ChebKind::Second, 3).pretty(), "x^3 - 2*x*y");
        assert_eq!(cheb(ChebKind::Second, 5).pretty(), "x^5 - 4*x^3*y + 3*x*y^2");
    }

    #[test]
    fn monomial_expansions_match_hand_values() {
        let t3 = monomial_in_cheb(ChebKind::First, 3);
        assert_eq!(t3, BTreeMap::from([(3, 1), (1, 3)]));
        let u3 = monomial_in_cheb(ChebKind::Second, 3);
        assert_eq!(u3, BTreeMap::from([(3, 1), (1, 2)]));
    }

    #[test]
    fn monomial_expansions_are_positive_and_reassemble() {
        for k in 1..=12 {
            for kind in [ChebKind::First, ChebKind::Second] {
                let exp = monomial_in_cheb(kind, k);
                assert!(exp.values().all(|&c| c > 0), "{:?} {}", kind, k);
                assert!(expansion_reassembles(kind, k, &exp), "{:?} {}", kind, k);
            }
        }
    }

    #[test]
    fn derivative_of_first_kind_is_k_times_second_kind() {
        for k in 1..=12 {
            let lhs = cheb(ChebKind::First, k).d_dx();
            let mut rhs = cheb(ChebKind::Second, k - 1);
            rhs.coeffs.values_mut().for_each(|c| *c *= k as i64);
            assert_eq!(lhs, rhs, "k = {}", k);
        }
    }

    #[test]
    fn braid_words_realize_their_permutations() {
        // spot check: the cyclic word used by the bracelet
        assert_eq!(braid_word(&[1, 2, 0]), vec![1, 0]);
        // every permutation of four strands
        let mut perm: Vec<usize> = (0..4).collect();
        loop {
            let word = braid_word(&perm);
            let mut arr: Vec<usize> = (0..4).collect();
            for &p in &word {
                arr.swap(p, p + 1);
            }
            for (m, &p) in perm.iter().enumerate() {
                assert_eq!(arr[p], m);
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
    }

    #[test]
    fn double_thickening_is_a_single_web() {
        let t2 = thick_web(2).expect("reduces");
        assert_eq!(format_signature(&t2.signature()), "b2,w2,b2,w2,b2,w2");
        assert!(t2.is_non_elliptic());
    }

    #[test]
    fn degree_two_correction_is_the_necklace() {
        let b = coefficient_web_b().expect("reduces");
        let (web, c) = b.single().expect("single web");
        assert_eq!(c, &Rat::one());
        assert!(web.same_key(&necklace_b()));
    }

    #[test]
    fn small_bracelets_and_bands_satisfy_the_recursions() {
        for k in 0..=2 {
            assert!(verify_bracelet(k).expect("reduces"), "bracelet {}", k);
            assert!(verify_band(k).expect("reduces"), "band {}", k);
        }
    }

    #[test]
    fn identity_closures_reproduce_the_thickenings() {
        for k in 1..=2 {
            let closed = braided_closure_combo(k, &[]).expect("reduces");
            assert!(closed.equals(&thick_combo(k).expect("reduces")), "k = {}", k);
        }
    }

    #[test]
    fn cut_and_close_agrees_with_the_direct_bracelet() {
        for k in 2..=3 {
            let via_cut = bracelet_combo(k).expect("reduces");
            let direct = bracelet_combo_direct(k).expect("reduces");
            assert!(via_cut.equals(&direct), "k = {}", k);
        }
    }
}
