//! Local coefficient tables for the elementary tensor pieces.
//!
//! Every boundary edge of a diagram carries a state in `{1, 0, -1}`. Slicing a
//! planar diagram by a height function decomposes it into elementary pieces —
//! cups, caps, one-in/two-out forks and two-in/one-out joins — and each piece
//! contributes a monomial weight in `v` per compatible state. The tables below
//! are the single source of truth for those weights; both expansion engines
//! (layered contraction and flow enumeration) read them.
//!
//! Conventions: states are listed left-to-right in diagram order. Weights are
//! independent of the black/white colouring of the strands.

use sl3core::LaurentPoly;

/// States a single strand can carry.
pub const STATES: [i8; 3] = [1, 0, -1];

/// Weight of a cup (minimum) whose left end carries state `k` and whose right
/// end carries `-k`: `v^(k-1)`.
pub fn cup_weight(k: i8) -> LaurentPoly {
    LaurentPoly::v_pow(i32::from(k) - 1)
}

/// Weight of a cap (maximum) whose left end carries state `k` and whose right
/// end carries `-k`: `v^(k+1)`.
pub fn cap_weight(k: i8) -> LaurentPoly {
    LaurentPoly::v_pow(i32::from(k) + 1)
}

/// The two output pairs `(p, q)` of a fork (one strand in, two out) whose
/// input carries state `j`. The outputs are the two distinct states with
/// `p + q = j`; they come in both orders.
pub fn fork_pairs(j: i8) -> [(i8, i8); 2] {
    match j {
        1 => [(1, 0), (0, 1)],
        0 => [(1, -1), (-1, 1)],
        -1 => [(0, -1), (-1, 0)],
        _ => panic!("state out of range: {j}"),
    }
}

/// Weight of a fork emitting `(p, q)` left-to-right: `1` if `p > q`,
/// `v^-1` if `p < q`.
pub fn fork_weight(p: i8, q: i8) -> LaurentPoly {
    debug_assert!(p != q);
    if p > q {
        LaurentPoly::one()
    } else {
        LaurentPoly::v_pow(-1)
    }
}

/// Whether a join (two strands in, one out) accepts inputs `(a, b)`; the
/// output state is then `a + b`.
pub fn join_ok(a: i8, b: i8) -> bool {
    a != b
}

/// Weight of a join consuming `(a, b)` left-to-right: `v` if `a > b`, `1` if
/// `a < b`.
pub fn join_weight(a: i8, b: i8) -> LaurentPoly {
    debug_assert!(a != b);
    if a > b {
        LaurentPoly::v_pow(1)
    } else {
        LaurentPoly::one()
    }
}

/// Number of descents-against-order in a triple: pairs `(i, j)`, `i < j`, with
/// `s_i < s_j`. The three-output piece weights its states by `v^-inv`.
pub fn inversions(s: &[i8]) -> u32 {
    let mut n = 0;
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if s[i] < s[j] {
                n += 1;
            }
        }
    }
    n
}
