//! Numeric evaluation of tensor diagrams on explicit configurations.
//!
//! A diagram whose boundary has `a` white and `b` black vertices defines a
//! polynomial function of `a` covectors and `b` vectors in rational
//! 3-space: the sum over all proper labellings of its strands by `{1, 2, 3}`
//! (the three incident labels distinct at every internal vertex) of
//!
//! * a sign per internal vertex — the parity of its three labels read in
//!   clockwise rotation order, and
//! * a coordinate factor per boundary leg — the labelled coordinate of that
//!   boundary vertex's argument.
//!
//! All legs of one boundary vertex bind the same argument, so a boundary
//! vertex of multiplicity `m` makes the function degree-`m` in that argument.
//! Crossings are invisible here: strands pass straight through them. That is
//! exactly why this evaluator arbitrates the rewriting rules — both sides of
//! every rule must agree numerically on random configurations.
//!
//! Everything is exact rational arithmetic; there is no floating point.

use std::collections::HashMap;

use rand::Rng;
use sl3core::{Color, Diagram, HalfId, Rat, VKind, WebCombo, WebError};
use sl3core::rat_int;
use thiserror::Error;

/// Errors from numeric evaluation.
#[derive(Debug, Error)]
pub enum EvalError {
    #[error("invalid diagram: {0}")]
    Web(#[from] WebError),
    #[error("configuration has {got} {kind}s but the diagram needs {want}")]
    Arity { kind: &'static str, got: usize, want: usize },
}

/// One rational argument tuple for a diagram: a covector per white boundary
/// vertex and a vector per black one, both in boundary order.
#[derive(Debug, Clone)]
pub struct Configuration {
    pub covectors: Vec<[Rat; 3]>,
    pub vectors: Vec<[Rat; 3]>,
}

impl Configuration {
    pub fn new(covectors: Vec<[Rat; 3]>, vectors: Vec<[Rat; 3]>) -> Self {
        Configuration { covectors, vectors }
    }

    /// Uniform random integer entries in `[-9, 9]`, shaped for `d`.
    pub fn random_for(d: &Diagram, rng: &mut impl Rng) -> Self {
        let mut covectors = Vec::new();
        let mut vectors = Vec::new();
        for &b in &d.boundary {
            let mut t = [rat_int(0), rat_int(0), rat_int(0)];
            for x in t.iter_mut() {
                *x = rat_int(rng.gen_range(-9..=9));
            }
            match d.verts[b].color {
                Color::White => covectors.push(t),
                Color::Black => vectors.push(t),
            }
        }
        Configuration { covectors, vectors }
    }

    /// Act by a determinant-one matrix: vectors become `g y`, covectors
    /// `x g^-1` (computed as the adjugate, which is the inverse at
    /// determinant one), so that all pairings are preserved.
    pub fn transformed(&self, g: &[[Rat; 3]; 3]) -> Configuration {
        let adj = adjugate(g);
        let covectors = self
            .covectors
            .iter()
            .map(|x| {
                let mut out = [rat_int(0), rat_int(0), rat_int(0)];
                for (j, o) in out.iter_mut().enumerate() {
                    for i in 0..3 {
                        *o += x[i].clone() * adj[i][j].clone();
                    }
                }
                out
            })
            .collect();
        let vectors = self
            .vectors
            .iter()
            .map(|y| {
                let mut out = [rat_int(0), rat_int(0), rat_int(0)];
                for (i, o) in out.iter_mut().enumerate() {
                    for j in 0..3 {
                        *o += g[i][j].clone() * y[j].clone();
                    }
                }
                out
            })
            .collect();
        Configuration { covectors, vectors }
    }
}

/// The i-th standard basis tuple (0-indexed).
pub fn standard_tuple(i: usize) -> [Rat; 3] {
    let mut t = [rat_int(0), rat_int(0), rat_int(0)];
    t[i] = rat_int(1);
    t
}

/// Determinant of a rational 3x3 matrix.
pub fn det3(m: &[[Rat; 3]; 3]) -> Rat {
    let mut d = rat_int(0);
    for (c, sgn) in [(0usize, 1), (1, -1), (2, 1)] {
        let (c1, c2) = match c {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        let minor = m[1][c1].clone() * m[2][c2].clone() - m[1][c2].clone() * m[2][c1].clone();
        d += rat_int(sgn) * m[0][c].clone() * minor;
    }
    d
}

fn adjugate(m: &[[Rat; 3]; 3]) -> [[Rat; 3]; 3] {
    let mut a = [
        [rat_int(0), rat_int(0), rat_int(0)],
        [rat_int(0), rat_int(0), rat_int(0)],
        [rat_int(0), rat_int(0), rat_int(0)],
    ];
    for i in 0..3 {
        for j in 0..3 {
            let r = [(i + 1) % 3, (i + 2) % 3];
            let c = [(j + 1) % 3, (j + 2) % 3];
            // cofactor with the cyclic index trick absorbing the sign
            a[j][i] = m[r[0]][c[0]].clone() * m[r[1]][c[1]].clone()
                - m[r[0]][c[1]].clone() * m[r[1]][c[0]].clone();
        }
    }
    a
}

/// A random determinant-one matrix: a product of `k` random shears.
pub fn random_unimodular(rng: &mut impl Rng, k: usize) -> [[Rat; 3]; 3] {
    let mut m = [
        [rat_int(1), rat_int(0), rat_int(0)],
        [rat_int(0), rat_int(1), rat_int(0)],
        [rat_int(0), rat_int(0), rat_int(1)],
    ];
    for _ in 0..k {
        let i = rng.gen_range(0..3);
        let mut j = rng.gen_range(0..3);
        if i == j {
            j = (j + 1) % 3;
        }
        let t = rat_int(rng.gen_range(-3..=3));
        // m <- shear(i, j, t) * m : row i += t * row j
        for c in 0..3 {
            let add = t.clone() * m[j][c].clone();
            m[i][c] += add;
        }
    }
    m
}

struct Strand {
    ends: [HalfId; 2],
}

/// Evaluate `d` on `cfg`.
pub fn eval_numeric(d: &Diagram, cfg: &Configuration) -> Result<Rat, EvalError> {
    d.validate()?;
    let d = d.compact();

    // argument slot per boundary vertex
    let mut arg_of: HashMap<usize, (Color, usize)> = HashMap::new();
    let (mut nw, mut nb) = (0usize, 0usize);
    for &b in &d.boundary {
        match d.verts[b].color {
            Color::White => {
                arg_of.insert(b, (Color::White, nw));
                nw += 1;
            }
            Color::Black => {
                arg_of.insert(b, (Color::Black, nb));
                nb += 1;
            }
        }
    }
    if nw != cfg.covectors.len() {
        return Err(EvalError::Arity { kind: "covector", got: cfg.covectors.len(), want: nw });
    }
    if nb != cfg.vectors.len() {
        return Err(EvalError::Arity { kind: "vector", got: cfg.vectors.len(), want: nb });
    }

    // strands: crossings are pass-through
    let mut strand_of: HashMap<HalfId, usize> = HashMap::new();
    let mut strands: Vec<Strand> = Vec::new();
    for h in d.alive_halves() {
        if d.verts[d.vertex_of(h)].kind == VKind::Crossing || strand_of.contains_key(&h) {
            continue;
        }
        let far = d.trace_strand(h).expect("validated diagrams have terminating strands");
        strand_of.insert(h, strands.len());
        strand_of.insert(far, strands.len());
        strands.push(Strand { ends: [h, far] });
    }

    // the boundary coordinate factors of a strand, per label
    let arg_factor = |h: HalfId, label: usize| -> Option<Rat> {
        let v = d.vertex_of(h);
        match arg_of.get(&v) {
            Some((Color::White, i)) => Some(cfg.covectors[*i][label].clone()),
            Some((Color::Black, i)) => Some(cfg.vectors[*i][label].clone()),
            None => None,
        }
    };

    // internal vertices and their rotation-ordered strands
    let internals: Vec<usize> = d
        .alive_vertices()
        .filter(|&v| d.verts[v].kind == VKind::Internal)
        .collect();
    let vertex_strands: HashMap<usize, Vec<usize>> = internals
        .iter()
        .map(|&v| (v, d.verts[v].half.iter().map(|&h| strand_of[&h]).collect()))
        .collect();

    // order strands for backtracking: walk the internal vertices so that
    // consecutive strands share vertices, then append the rest (pure arcs)
    let mut order: Vec<usize> = Vec::new();
    let mut placed = vec![false; strands.len()];
    for &v in &internals {
        for &s in &vertex_strands[&v] {
            if !placed[s] {
                placed[s] = true;
                order.push(s);
            }
        }
    }
    let split = order.len();
    for s in 0..strands.len() {
        if !placed[s] {
            order.push(s);
        }
    }

    // arcs not meeting any internal vertex contribute independent dot-product
    // factors
    let mut arc_part = rat_int(1);
    for &s in &order[split..] {
        let mut dot = rat_int(0);
        for label in 0..3 {
            let mut t = rat_int(1);
            for &h in &strands[s].ends {
                match arg_factor(h, label) {
                    Some(f) => t *= f,
                    None => unreachable!("strand without internal vertex has boundary ends"),
                }
            }
            dot += t;
        }
        arc_part *= dot;
    }
    if arc_part == rat_int(0) {
        return Ok(rat_int(0));
    }

    // backtracking over the constrained strands
    let mut label = vec![usize::MAX; strands.len()];
    let mut used: HashMap<usize, [bool; 3]> = internals.iter().map(|&v| (v, [false; 3])).collect();
    let mut total = rat_int(0);

    fn go(
        pos: usize,
        order: &[usize],
        strands: &[Strand],
        label: &mut Vec<usize>,
        used: &mut HashMap<usize, [bool; 3]>,
        vertex_strands: &HashMap<usize, Vec<usize>>,
        d: &Diagram,
        arg_factor: &dyn Fn(HalfId, usize) -> Option<Rat>,
        acc: Rat,
        total: &mut Rat,
    ) {
        if pos == order.len() {
            // all constrained strands labelled: multiply the vertex signs
            let mut sign = 1i64;
            for (v, ss) in vertex_strands.iter() {
                let _ = v;
                let l: Vec<usize> = ss.iter().map(|&s| label[s]).collect();
                sign *= parity3(l[0], l[1], l[2]);
            }
            *total += rat_int(sign) * acc;
            return;
        }
        let s = order[pos];
        'labels: for lab in 0..3 {
            // distinctness at each internal endpoint
            let mut touched: Vec<usize> = Vec::with_capacity(2);
            for &h in &strands[s].ends {
                let v = d.vertex_of(h);
                if let Some(mask) = used.get_mut(&v) {
                    if mask[lab] {
                        for &t in &touched {
                            used.get_mut(&t).unwrap()[lab] = false;
                        }
                        continue 'labels;
                    }
                    mask[lab] = true;
                    touched.push(v);
                }
            }
            let mut factor = rat_int(1);
            let mut dead = false;
            for &h in &strands[s].ends {
                if let Some(f) = arg_factor(h, lab) {
                    if f == rat_int(0) {
                        dead = true;
                        break;
                    }
                    factor *= f;
                }
            }
            if !dead {
                label[s] = lab;
                go(pos + 1, order, strands, label, used, vertex_strands, d, arg_factor, acc.clone() * factor, total);
                label[s] = usize::MAX;
            }
            for &t in &touched {
                used.get_mut(&t).unwrap()[lab] = false;
            }
        }
    }

    go(
        0,
        &order[..split],
        &strands,
        &mut label,
        &mut used,
        &vertex_strands,
        &d,
        &arg_factor,
        arc_part,
        &mut total,
    );
    Ok(total)
}

/// Parity (+1/-1) of a permutation of {0, 1, 2} given as a triple.
fn parity3(a: usize, b: usize, c: usize) -> i64 {
    debug_assert!(a != b && b != c && a != c);
    let mut inv = 0;
    for (x, y) in [(a, b), (a, c), (b, c)] {
        if x > y {
            inv += 1;
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Evaluate a combination at `v = -1`: sum of numeric coefficients times
/// numeric term values.
pub fn eval_combo_numeric(wc: &WebCombo, cfg: &Configuration) -> Result<Rat, EvalError> {
    let mut total = rat_int(0);
    for (d, coeff) in wc.iter() {
        total += coeff.eval_neg_one() * eval_numeric(d, cfg)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skein::reduce_to_basis;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(42)
    }

    /// Tripod with a white centre: a function of three vectors.
    fn vol_diagram() -> Diagram {
        let mut d = Diagram::new();
        let p1 = d.add_boundary(Color::Black);
        let p2 = d.add_boundary(Color::Black);
        let p3 = d.add_boundary(Color::Black);
        let c = d.add_internal(Color::White);
        d.connect(c, p1);
        d.connect(c, p2);
        d.connect(c, p3);
        d
    }

    /// Tripod with a black centre: a function of three covectors.
    fn vol_dual_diagram() -> Diagram {
        let mut d = Diagram::new();
        let p1 = d.add_boundary(Color::White);
        let p2 = d.add_boundary(Color::White);
        let p3 = d.add_boundary(Color::White);
        let c = d.add_internal(Color::Black);
        d.connect(c, p1);
        d.connect(c, p2);
        d.connect(c, p3);
        d
    }

    fn single_edge() -> Diagram {
        let mut d = Diagram::new();
        let p = d.add_boundary(Color::White);
        let q = d.add_boundary(Color::Black);
        d.connect(p, q);
        d
    }

    fn theta() -> Diagram {
        let mut d = Diagram::new();
        let w = d.add_internal(Color::White);
        let b = d.add_internal(Color::Black);
        d.connect(w, b);
        d.connect(w, b);
        d.connect(w, b);
        let hb: Vec<HalfId> = d.verts[b].half.clone();
        d.verts[b].half = vec![hb[2], hb[1], hb[0]];
        d
    }

    fn empty_cfg() -> Configuration {
        Configuration::new(vec![], vec![])
    }

    #[test]
    fn volume_on_standard_basis_is_one() {
        let d = vol_diagram();
        let cfg = Configuration::new(vec![], vec![standard_tuple(0), standard_tuple(1), standard_tuple(2)]);
        assert_eq!(eval_numeric(&d, &cfg).unwrap(), rat_int(1));
        // antisymmetry: swapping two arguments flips the sign
        let cfg2 = Configuration::new(vec![], vec![standard_tuple(1), standard_tuple(0), standard_tuple(2)]);
        assert_eq!(eval_numeric(&d, &cfg2).unwrap(), rat_int(-1));
        // volume of a random triple is the determinant
        let mut r = rng();
        for _ in 0..5 {
            let cfg3 = Configuration::random_for(&d, &mut r);
            let m = [cfg3.vectors[0].clone(), cfg3.vectors[1].clone(), cfg3.vectors[2].clone()];
            // arguments are the columns
            let mt = [
                [m[0][0].clone(), m[1][0].clone(), m[2][0].clone()],
                [m[0][1].clone(), m[1][1].clone(), m[2][1].clone()],
                [m[0][2].clone(), m[1][2].clone(), m[2][2].clone()],
            ];
            assert_eq!(eval_numeric(&d, &cfg3).unwrap(), det3(&mt));
        }
    }

    #[test]
    fn dual_volume_on_standard_basis_is_one() {
        let d = vol_dual_diagram();
        let cfg = Configuration::new(vec![standard_tuple(0), standard_tuple(1), standard_tuple(2)], vec![]);
        assert_eq!(eval_numeric(&d, &cfg).unwrap(), rat_int(1));
    }

    #[test]
    fn identity_edge_pairs_coordinates() {
        let d = single_edge();
        let hit = Configuration::new(vec![standard_tuple(0)], vec![standard_tuple(0)]);
        let miss = Configuration::new(vec![standard_tuple(0)], vec![standard_tuple(1)]);
        assert_eq!(eval_numeric(&d, &hit).unwrap(), rat_int(1));
        assert_eq!(eval_numeric(&d, &miss).unwrap(), rat_int(0));
    }

    #[test]
    fn closed_theta_value() {
        assert_eq!(eval_numeric(&theta(), &empty_cfg()).unwrap(), rat_int(-6));
    }

    #[test]
    fn disjoint_union_multiplies() {
        let d1 = vol_diagram();
        let d2 = single_edge();
        let u = d1.cup_union(&d2);
        let mut r = rng();
        for _ in 0..5 {
            let cfg = Configuration::random_for(&u, &mut r);
            // union boundary order: d1's three vectors, then d2's covector+vector
            let c1 = Configuration::new(vec![], cfg.vectors[0..3].to_vec());
            let c2 = Configuration::new(cfg.covectors.clone(), vec![cfg.vectors[3].clone()]);
            let lhs = eval_numeric(&u, &cfg).unwrap();
            let rhs = eval_numeric(&d1, &c1).unwrap() * eval_numeric(&d2, &c2).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn special_linear_invariance() {
        let d = vol_diagram();
        let e = single_edge();
        let mut r = rng();
        for _ in 0..5 {
            let g = random_unimodular(&mut r, 6);
            assert_eq!(det3(&g), rat_int(1));
            for dd in [&d, &e] {
                let cfg = Configuration::random_for(dd, &mut r);
                let tcfg = cfg.transformed(&g);
                assert_eq!(eval_numeric(dd, &cfg).unwrap(), eval_numeric(dd, &tcfg).unwrap());
            }
        }
    }

    #[test]
    fn normal_form_preserves_numeric_value() {
        // the engine's pipeline on a closed diagram with crossings must agree
        // with the transparent evaluation of the input
        let mut r = rng();
        let d = theta();
        let nf = reduce_to_basis(&d).unwrap();
        assert_eq!(eval_combo_numeric(&nf, &empty_cfg()).unwrap(), rat_int(-6));
        let _ = &mut r;
    }

    #[test]
    fn turnback_web_vanishes_identically() {
        // a fork with both output legs on one multiplicity-two boundary
        // vertex binds an antisymmetric pair to a single argument
        let mut d = Diagram::new();
        let cl = d.add_boundary(Color::White);
        let p = d.add_boundary(Color::White);
        let b = d.add_internal(Color::Black);
        d.connect(b, cl);
        d.connect(b, cl);
        d.connect(b, p);
        let mut r = rng();
        for _ in 0..10 {
            let cfg = Configuration::random_for(&d, &mut r);
            assert_eq!(eval_numeric(&d, &cfg).unwrap(), rat_int(0));
        }
    }
}
