//! Representation-theoretic dimension oracle for invariant spaces.
//!
//! The invariant space attached to a boundary signature is the multiplicity
//! of the trivial representation inside the tensor product of fundamental
//! sl3 representations, one factor per boundary point: the 3-dimensional
//! vector representation for a white point and its dual for a black point.
//!
//! Dominant weights of sl3 are pairs `(a, b)` of nonnegative integers
//! (coordinates in the fundamental-weight basis). Tensoring an irreducible
//! `V(a,b)` with a fundamental representation splits by the Pieri rule:
//!
//! * `V(a,b) ⊗ V(1,0) = V(a+1,b) ⊕ V(a-1,b+1) ⊕ V(a,b-1)`
//! * `V(a,b) ⊗ V(0,1) = V(a,b+1) ⊕ V(a+1,b-1) ⊕ V(a-1,b)`
//!
//! with summands whose coordinates would go negative dropped. Iterating over
//! the boundary word and reading off the multiplicity of `V(0,0)` gives the
//! dimension. The count certifies completeness of the enumerated web basis.

use std::collections::BTreeMap;

use sl3core::Color;

/// Finitely supported multiset of dominant weights: weight `(a, b)` mapped to
/// its multiplicity.
pub type WeightMultiset = BTreeMap<(u32, u32), u64>;

/// Tensor a weight multiset with the fundamental representation attached to
/// one boundary color.
fn tensor_step(m: &WeightMultiset, c: Color) -> WeightMultiset {
    let mut out = WeightMultiset::new();
    for (&(a, b), &mult) in m {
        let summands: [(i64, i64); 3] = match c {
            Color::White => {
                [(a as i64 + 1, b as i64), (a as i64 - 1, b as i64 + 1), (a as i64, b as i64 - 1)]
            }
            Color::Black => {
                [(a as i64, b as i64 + 1), (a as i64 + 1, b as i64 - 1), (a as i64 - 1, b as i64)]
            }
        };
        for (na, nb) in summands {
            if na >= 0 && nb >= 0 {
                *out.entry((na as u32, nb as u32)).or_insert(0) += mult;
            }
        }
    }
    out
}

/// Decompose the tensor product of fundamentals given by a boundary word into
/// a multiset of dominant weights.
pub fn weight_multiset(word: &[Color]) -> WeightMultiset {
    let mut m = WeightMultiset::new();
    m.insert((0, 0), 1);
    for &c in word {
        m = tensor_step(&m, c);
    }
    m
}

/// Dimension of the invariant space for a boundary word: the multiplicity of
/// the trivial weight in [`weight_multiset`].
pub fn dim_invariants(word: &[Color]) -> u64 {
    weight_multiset(word).get(&(0, 0)).copied().unwrap_or(0)
}

/// Dimension for a clasped signature: each clasp of multiplicity `k`
/// contributes `k` copies of its letter.
pub fn dim_invariants_sig(sig: &[(Color, usize)]) -> u64 {
    let word: Vec<Color> =
        sig.iter().flat_map(|&(c, k)| std::iter::repeat(c).take(k)).collect();
    dim_invariants(&word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Color::{Black, White};

    #[test]
    fn single_cup_space_is_one_dimensional() {
        assert_eq!(dim_invariants(&[White, Black]), 1);
        assert_eq!(dim_invariants(&[Black, White]), 1);
    }

    #[test]
    fn tripod_space_is_one_dimensional() {
        assert_eq!(dim_invariants(&[White, White, White]), 1);
        assert_eq!(dim_invariants(&[Black, Black, Black]), 1);
    }

    #[test]
    fn two_like_points_have_no_invariant() {
        assert_eq!(dim_invariants(&[White, White]), 0);
        assert_eq!(dim_invariants(&[Black, Black]), 0);
        assert_eq!(dim_invariants(&[]), 1);
    }

    #[test]
    fn fundamental_cubed_matches_classical_counts() {
        // V ⊗ V* ⊗ V ⊗ V* has a two-dimensional invariant space.
        assert_eq!(dim_invariants(&[White, Black, White, Black]), 2);
        // The alternating word of length six carries six invariants: five
        // planar cup matchings plus the hexagonal web.
        assert_eq!(dim_invariants(&[White, Black, White, Black, White, Black]), 6);
    }

    #[test]
    fn clasped_signature_expands_multiplicities() {
        let sig = vec![(White, 1), (Black, 1)];
        assert_eq!(dim_invariants_sig(&sig), 1);
        let sig = vec![(White, 3)];
        assert_eq!(dim_invariants_sig(&sig), 1);
    }
}
