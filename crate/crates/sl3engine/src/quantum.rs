//! Expansion of crossing-free webs in the tensor-product basis.
//!
//! A web with `n` boundary strand positions determines an element of the
//! `n`-fold tensor product of three-dimensional representations; expanding it
//! there means computing one Laurent coefficient per *state string* — a word
//! in `{1, 0, -1}^n` read along the boundary. Two independent evaluators are
//! implemented and cross-check each other:
//!
//! * contraction ([`expand_by_contraction`]): peel the leftmost boundary
//!   position; an arc peels off with the cup weights, an edge into an
//!   internal vertex peels with the join weights, exposing that vertex's
//!   other two edges as new boundary. Sub-webs are memoized by canonical
//!   key.
//! * flows ([`expand_by_flows`]): enumerate all edge orientations that use
//!   each internal vertex's three edges with values exactly `{1, 0, -1}`;
//!   each such flow contributes one monomial, computed by re-running the
//!   same peel with every state pinned.
//!
//! State words are indexed per boundary *strand* in boundary order (a clasp
//! of multiplicity m owns m consecutive letters). Words compare
//! lexicographically with `1 > 0 > -1`; the greatest word with a nonzero
//! coefficient is the web's dominant path, and its coefficient is 1.
//!
//! Diagrams with crossings are rejected: resolve them with the skein engine
//! first.

use std::collections::{BTreeMap, HashMap};

use sl3core::{Color, Diagram, HalfId, LaurentPoly, VKind, VertexId, WebCombo, WebError};
use thiserror::Error;

use crate::tables::{cup_weight, join_weight};

/// Errors from quantum expansion.
#[derive(Debug, Error)]
pub enum QuantumError {
    #[error("invalid diagram: {0}")]
    Web(#[from] WebError),
    #[error("diagram has unresolved crossings; reduce it first")]
    HasCrossings,
    #[error("diagram has a closed component; reduce it first")]
    ClosedComponent,
    #[error("boundary vertex {0} carries no strand")]
    BareBoundary(VertexId),
    #[error("state word has length {got}, boundary has {want} strand positions")]
    WordLength { got: usize, want: usize },
    #[error("unknown expander '{0}'; available: {1}")]
    UnknownExpander(String, String),
    #[error("web violates the evaluator's hypothesis: {0}")]
    Hypothesis(String),
}

/// A web's expansion in the tensor-product basis: state word -> coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    /// Boundary signature of the expanded web (color, multiplicity) per
    /// boundary vertex.
    pub signature: Vec<(Color, usize)>,
    /// Nonzero coefficients. The map's ascending key order agrees with the
    /// state order (1 > 0 > -1 is plain numeric order on letters), so the
    /// last entry is the lexicographically dominant state.
    pub terms: BTreeMap<Vec<i8>, LaurentPoly>,
}

impl Expansion {
    /// Number of states with nonzero coefficient.
    pub fn state_count(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient at one state (zero if absent).
    pub fn coeff(&self, word: &[i8]) -> LaurentPoly {
        self.terms.get(word).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    /// The lexicographically greatest state with nonzero coefficient.
    pub fn dominant(&self) -> Option<(&Vec<i8>, &LaurentPoly)> {
        self.terms.iter().next_back()
    }
}

fn prepared(d: &Diagram) -> Result<Diagram, QuantumError> {
    d.validate()?;
    if d.crossing_count() > 0 {
        return Err(QuantumError::HasCrossings);
    }
    for &b in &d.boundary {
        if d.verts[b].half.is_empty() {
            return Err(QuantumError::BareBoundary(b));
        }
    }
    Ok(d.unclasp())
}

// ---------------------------------------------------------------------------
// contraction
// ---------------------------------------------------------------------------

/// Expand by peeling boundary positions off the web, contracting the weight
/// tables bottom-up. Sub-webs are shared through a canonical-key memo.
pub fn expand_by_contraction(d: &Diagram) -> Result<Expansion, QuantumError> {
    let u = prepared(d)?;
    let mut memo: HashMap<String, BTreeMap<Vec<i8>, LaurentPoly>> = HashMap::new();
    let terms = peel(&u, &mut memo)?;
    Ok(Expansion { signature: d.signature(), terms })
}

/// One peel step: the web must be unclasped and compact.
fn peel(
    d: &Diagram,
    memo: &mut HashMap<String, BTreeMap<Vec<i8>, LaurentPoly>>,
) -> Result<BTreeMap<Vec<i8>, LaurentPoly>, QuantumError> {
    if d.boundary.is_empty() {
        if d.alive_vertices().next().is_some() {
            return Err(QuantumError::ClosedComponent);
        }
        let mut m = BTreeMap::new();
        m.insert(Vec::new(), LaurentPoly::one());
        return Ok(m);
    }
    let key = d.canonical_key();
    if let Some(t) = memo.get(&key) {
        return Ok(t.clone());
    }

    let b1 = d.boundary[0];
    let leg = d.verts[b1].half[0];
    let entry = d.twin(leg);
    let x = d.vertex_of(entry);

    let out = if d.verts[x].kind == VKind::Boundary {
        // arc peel: the strand closes to boundary position j; its two states
        // are opposite and weighted by the cup table at the left state
        let j = d
            .boundary
            .iter()
            .position(|&v| v == x)
            .expect("arc endpoint is a boundary vertex");
        let mut sub = d.clone();
        sub.remove_and_rewire(&[b1, x], &[]);
        let inner = peel(&sub.compact(), memo)?;
        let mut m: BTreeMap<Vec<i8>, LaurentPoly> = BTreeMap::new();
        for (w, c) in &inner {
            for k in [1i8, 0, -1] {
                let mut word = Vec::with_capacity(w.len() + 2);
                word.push(k);
                word.extend_from_slice(&w[..j - 1]);
                word.push(-k);
                word.extend_from_slice(&w[j - 1..]);
                let add = c.clone() * cup_weight(k);
                *m.entry(word).or_insert_with(LaurentPoly::zero) += add;
            }
        }
        m
    } else {
        // join peel: expose the vertex's other two edges (B to the left of A,
        // so the new arcs nest instead of crossing) and weight by the join
        // table; the peeled position's state is the sum of theirs
        let ha = d.rot_next(entry);
        let hb = d.rot_next(ha);
        let sub = peel_join_subweb(d, b1, x, entry, ha, hb);
        let inner = peel(&sub, memo)?;
        let mut m: BTreeMap<Vec<i8>, LaurentPoly> = BTreeMap::new();
        for (w, c) in &inner {
            let (sb, sa) = (w[0], w[1]);
            if sb == sa {
                continue;
            }
            let mut word = Vec::with_capacity(w.len() - 1);
            word.push(sb + sa);
            word.extend_from_slice(&w[2..]);
            let add = c.clone() * join_weight(sb, sa);
            *m.entry(word).or_insert_with(LaurentPoly::zero) += add;
        }
        m
    };
    memo.insert(key, out.clone());
    Ok(out)
}

/// Remove boundary vertex `b1` and its neighbor `x`, re-ending x's other two
/// edges on fresh boundary vertices at the front of the boundary (B first,
/// then A). Returns a compacted sub-web.
fn peel_join_subweb(
    d: &Diagram,
    b1: VertexId,
    x: VertexId,
    entry: HalfId,
    ha: HalfId,
    hb: HalfId,
) -> Diagram {
    let c = d.verts[x].color;
    let mut sub = d.clone();
    let bb = sub.add_boundary(c);
    let ba = sub.add_boundary(c);
    sub.halfs[ha].vertex = ba;
    sub.verts[ba].half = vec![ha];
    sub.halfs[hb].vertex = bb;
    sub.verts[bb].half = vec![hb];
    sub.verts[x].half = vec![entry];
    sub.remove_and_rewire(&[x, b1], &[]);
    let mut order = vec![bb, ba];
    order.extend(d.boundary.iter().skip(1).copied());
    sub.boundary = order;
    sub.compact()
}

// ---------------------------------------------------------------------------
// flows
// ---------------------------------------------------------------------------

/// One flow: an assignment of a value in `{1, 0, -1}` to every edge such
/// that the three values leaving each internal vertex are pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flow {
    /// Value per edge, keyed by the edge's half pair `(min, max)`; the value
    /// is directed away from the vertex holding the smaller half.
    pub edges: BTreeMap<(HalfId, HalfId), i8>,
    /// Induced boundary state, directed away from the boundary.
    pub word: Vec<i8>,
    /// The flow's weight: a single monomial from the pinned peel.
    pub weight: LaurentPoly,
}

struct FlowProblem {
    /// Unclasped diagram the problem ranges over.
    d: Diagram,
    /// Edges as half pairs (min, max); the variable's value is directed away
    /// from the min half's vertex.
    edges: Vec<(HalfId, HalfId)>,
    edge_index: HashMap<HalfId, (usize, i8)>,
    /// Internal vertices with their incident (edge, direction sign) triples.
    vertices: Vec<[(usize, i8); 3]>,
    /// Edges incident to each vertex constraint, for propagation scheduling.
    edge_vertices: Vec<Vec<usize>>,
    /// Per boundary strand position: (edge, direction sign).
    boundary: Vec<(usize, i8)>,
}

impl FlowProblem {
    fn build(d: &Diagram) -> Result<FlowProblem, QuantumError> {
        let u = prepared(d)?;
        let mut edges = Vec::new();
        let mut edge_index: HashMap<HalfId, (usize, i8)> = HashMap::new();
        for h in u.alive_halves() {
            let t = u.twin(h);
            if h < t {
                edge_index.insert(h, (edges.len(), 1));
                edge_index.insert(t, (edges.len(), -1));
                edges.push((h, t));
            }
        }
        let mut vertices = Vec::new();
        for v in u.alive_vertices() {
            if u.verts[v].kind != VKind::Internal {
                continue;
            }
            let hs = &u.verts[v].half;
            let term = |h: HalfId| edge_index[&h];
            vertices.push([term(hs[0]), term(hs[1]), term(hs[2])]);
        }
        let mut edge_vertices = vec![Vec::new(); edges.len()];
        for (ci, tri) in vertices.iter().enumerate() {
            for (e, _) in tri {
                edge_vertices[*e].push(ci);
            }
        }
        let boundary = u
            .boundary_legs()
            .iter()
            .map(|leg| edge_index[leg])
            .collect();
        Ok(FlowProblem { d: u, edges, edge_index, vertices, edge_vertices, boundary })
    }

    /// Enumerate assignments. `domains` gives the starting candidate sets
    /// (index 0,1,2 <-> value 1,0,-1). Stops after `limit` solutions if set.
    fn solve(&self, mut domains: Vec<[bool; 3]>, limit: Option<usize>) -> Vec<Vec<i8>> {
        let mut out = Vec::new();
        if self.propagate(&mut domains, None) {
            self.backtrack(&mut domains, limit, &mut out);
        }
        out
    }

    fn value_of(idx: usize) -> i8 {
        [1i8, 0, -1][idx]
    }

    fn index_of(val: i8) -> usize {
        match val {
            1 => 0,
            0 => 1,
            _ => 2,
        }
    }

    /// Narrow domains around vertex constraints until stable. Returns false
    /// on a wipe-out. `touched` optionally seeds the agenda.
    fn propagate(&self, domains: &mut [[bool; 3]], touched: Option<usize>) -> bool {
        let mut agenda: Vec<usize> = match touched {
            Some(e) => self.edge_vertices[e].clone(),
            None => (0..self.vertices.len()).collect(),
        };
        while let Some(ci) = agenda.pop() {
            let tri = &self.vertices[ci];
            // values already fixed at this vertex (as directed away from it)
            let mut fixed: Vec<(usize, i8)> = Vec::new();
            for (e, s) in tri {
                let dom = &domains[*e];
                let live: Vec<usize> = (0..3).filter(|&i| dom[i]).collect();
                if live.len() == 1 {
                    fixed.push((*e, s * Self::value_of(live[0])));
                }
            }
            for i in 0..fixed.len() {
                for j in i + 1..fixed.len() {
                    if fixed[i].1 == fixed[j].1 {
                        return false;
                    }
                }
            }
            for (e, s) in tri {
                let mut changed = false;
                for &(fe, fv) in &fixed {
                    if fe == *e {
                        continue;
                    }
                    let forbidden = Self::index_of(s * fv);
                    if domains[*e][forbidden] {
                        domains[*e][forbidden] = false;
                        changed = true;
                    }
                }
                if changed {
                    let live = domains[*e].iter().filter(|&&b| b).count();
                    if live == 0 {
                        return false;
                    }
                    // re-queue every constraint on this edge, the current one
                    // included: a fresh singleton here can clash with another
                    // edge pruned in the same pass
                    for &cj in &self.edge_vertices[*e] {
                        agenda.push(cj);
                    }
                }
            }
        }
        true
    }

    fn backtrack(&self, domains: &mut Vec<[bool; 3]>, limit: Option<usize>, out: &mut Vec<Vec<i8>>) {
        if let Some(l) = limit {
            if out.len() >= l {
                return;
            }
        }
        // most-constrained undecided edge
        let mut pick: Option<(usize, usize)> = None;
        for (e, dom) in domains.iter().enumerate() {
            let live = dom.iter().filter(|&&b| b).count();
            if live > 1 {
                if pick.map_or(true, |(_, best)| live < best) {
                    pick = Some((e, live));
                }
            }
        }
        let e = match pick {
            None => {
                // fully decided: record
                let vals: Vec<i8> = domains
                    .iter()
                    .map(|dom| Self::value_of((0..3).find(|&i| dom[i]).unwrap()))
                    .collect();
                debug_assert!(
                    self.vertices.iter().all(|tri| {
                        tri[0].1 * vals[tri[0].0] != tri[1].1 * vals[tri[1].0]
                            && tri[0].1 * vals[tri[0].0] != tri[2].1 * vals[tri[2].0]
                            && tri[1].1 * vals[tri[1].0] != tri[2].1 * vals[tri[2].0]
                    }),
                    "recorded assignment violates a vertex constraint"
                );
                out.push(vals);
                return;
            }
            Some((e, _)) => e,
        };
        for i in 0..3 {
            if !domains[e][i] {
                continue;
            }
            let mut next = domains.clone();
            next[e] = [false; 3];
            next[e][i] = true;
            if self.propagate(&mut next, Some(e)) {
                self.backtrack(&mut next, limit, out);
            }
            if let Some(l) = limit {
                if out.len() >= l {
                    return;
                }
            }
        }
    }

    fn word_of(&self, vals: &[i8]) -> Vec<i8> {
        self.boundary.iter().map(|&(e, s)| s * vals[e]).collect()
    }

    /// Pin boundary positions: `word[i] = Some(s)` forces position i.
    fn pinned_domains(&self, word: &[Option<i8>]) -> Option<Vec<[bool; 3]>> {
        let mut domains = vec![[true; 3]; self.edges.len()];
        for (i, pin) in word.iter().enumerate() {
            if let Some(s) = pin {
                let (e, sgn) = self.boundary[i];
                let want = Self::index_of(sgn * s);
                if !domains[e][want] {
                    // two pins on one strand (an arc pinned at both ends)
                    // must agree
                    return None;
                }
                domains[e] = [false; 3];
                domains[e][want] = true;
            }
        }
        Some(domains)
    }

    fn flow_from(&self, vals: &[i8]) -> Flow {
        let edges: BTreeMap<(HalfId, HalfId), i8> =
            self.edges.iter().enumerate().map(|(i, &pair)| (pair, vals[i])).collect();
        let word = self.word_of(vals);
        let weight = pinned_weight(&self.d, &self.edge_index, vals);
        Flow { edges, word, weight }
    }
}

/// Weight of one flow: the peel walk with every state pinned. The walk order
/// is the same canonical one the contraction evaluator uses, which makes
/// per-flow weights reproducible.
fn pinned_weight(d: &Diagram, edge_index: &HashMap<HalfId, (usize, i8)>, vals: &[i8]) -> LaurentPoly {
    let val_from = |h: HalfId| -> i8 {
        let (e, s) = edge_index[&h];
        s * vals[e]
    };
    let mut sub = d.clone();
    let mut w = LaurentPoly::one();
    while let Some(&b1) = sub.boundary.first() {
        let leg = sub.verts[b1].half[0];
        let entry = sub.twin(leg);
        let x = sub.vertex_of(entry);
        if sub.verts[x].kind == VKind::Boundary {
            w *= &cup_weight(val_from(leg));
            sub.remove_and_rewire(&[b1, x], &[]);
        } else {
            let ha = sub.rot_next(entry);
            let hb = sub.rot_next(ha);
            let (sb, sa) = (val_from(hb), val_from(ha));
            debug_assert_ne!(sb, sa, "flow violates the vertex constraint");
            w *= &join_weight(sb, sa);
            let c = sub.verts[x].color;
            let bb = sub.add_boundary(c);
            let ba = sub.add_boundary(c);
            sub.halfs[ha].vertex = ba;
            sub.verts[ba].half = vec![ha];
            sub.halfs[hb].vertex = bb;
            sub.verts[bb].half = vec![hb];
            sub.verts[x].half = vec![entry];
            let rest: Vec<VertexId> = sub.boundary.iter().skip(1).copied().filter(|&v| v != bb && v != ba).collect();
            sub.remove_and_rewire(&[x, b1], &[]);
            let mut order = vec![bb, ba];
            order.extend(rest);
            sub.boundary = order;
        }
    }
    debug_assert!(sub.alive_vertices().next().is_none(), "closed component left behind");
    w
}

/// Enumerate every flow on the web.
pub fn enumerate_flows(d: &Diagram) -> Result<Vec<Flow>, QuantumError> {
    let p = FlowProblem::build(d)?;
    let domains = vec![[true; 3]; p.edges.len()];
    Ok(p.solve(domains, None).iter().map(|vals| p.flow_from(vals)).collect())
}

/// Flows whose boundary state is exactly `word`.
pub fn flows_at(d: &Diagram, word: &[i8]) -> Result<Vec<Flow>, QuantumError> {
    let p = FlowProblem::build(d)?;
    if word.len() != p.boundary.len() {
        return Err(QuantumError::WordLength { got: word.len(), want: p.boundary.len() });
    }
    let pins: Vec<Option<i8>> = word.iter().map(|&s| Some(s)).collect();
    let sols = match p.pinned_domains(&pins) {
        Some(domains) => p.solve(domains, None),
        None => Vec::new(),
    };
    Ok(sols.iter().map(|vals| p.flow_from(vals)).collect())
}

/// Expand by full flow enumeration.
pub fn expand_by_flows(d: &Diagram) -> Result<Expansion, QuantumError> {
    let flows = enumerate_flows(d)?;
    let mut terms: BTreeMap<Vec<i8>, LaurentPoly> = BTreeMap::new();
    for f in flows {
        *terms.entry(f.word).or_insert_with(LaurentPoly::zero) += f.weight;
    }
    Ok(Expansion { signature: d.signature(), terms })
}

/// The lexicographically greatest achievable state (1 > 0 > -1), computed
/// greedily position by position; flow weights never cancel, so a state is
/// achievable exactly when a flow with that boundary exists.
pub fn dominant_path(d: &Diagram) -> Result<Vec<i8>, QuantumError> {
    let p = FlowProblem::build(d)?;
    let n = p.boundary.len();
    let mut pins: Vec<Option<i8>> = vec![None; n];
    for i in 0..n {
        let mut chosen = None;
        for s in [1i8, 0, -1] {
            pins[i] = Some(s);
            if let Some(domains) = p.pinned_domains(&pins) {
                if !p.solve(domains, Some(1)).is_empty() {
                    chosen = Some(s);
                    break;
                }
            }
        }
        match chosen {
            Some(_) => {}
            None => {
                return Err(QuantumError::Hypothesis(
                    "web admits no flow at all".into(),
                ))
            }
        }
    }
    Ok(pins.into_iter().map(|p| p.unwrap()).collect())
}

/// The coefficient of one state, by pruned (boundary-pinned) enumeration.
pub fn coefficient_at(d: &Diagram, word: &[i8]) -> Result<LaurentPoly, QuantumError> {
    let mut total = LaurentPoly::zero();
    for f in flows_at(d, word)? {
        total += f.weight;
    }
    Ok(total)
}

/// Coefficient of one state on a combination: coefficient-weighted sum over
/// the terms.
pub fn coefficient_at_combo(wc: &WebCombo, word: &[i8]) -> Result<LaurentPoly, QuantumError> {
    let mut total = LaurentPoly::zero();
    for (d, c) in wc.iter() {
        total += c.clone() * coefficient_at(d, word)?;
    }
    Ok(total)
}

// ---------------------------------------------------------------------------
// expander registry
// ---------------------------------------------------------------------------

/// A named expansion method.
pub trait Expander: Send {
    fn name(&self) -> &'static str;
    fn expand(&self, d: &Diagram) -> Result<Expansion, QuantumError>;
}

struct ContractionExpander;

impl Expander for ContractionExpander {
    fn name(&self) -> &'static str {
        "contraction"
    }
    fn expand(&self, d: &Diagram) -> Result<Expansion, QuantumError> {
        expand_by_contraction(d)
    }
}

struct FlowsExpander;

impl Expander for FlowsExpander {
    fn name(&self) -> &'static str {
        "flows"
    }
    fn expand(&self, d: &Diagram) -> Result<Expansion, QuantumError> {
        expand_by_flows(d)
    }
}

/// Names of the available expansion methods.
pub fn expander_names() -> Vec<&'static str> {
    vec!["contraction", "flows", "discconfig"]
}

/// Look an expansion method up by name.
pub fn make_expander(name: &str) -> Result<Box<dyn Expander>, QuantumError> {
    match name {
        "contraction" => Ok(Box::new(ContractionExpander)),
        "flows" => Ok(Box::new(FlowsExpander)),
        "discconfig" => Ok(Box::new(crate::disc::DiscConfigExpander)),
        other => Err(QuantumError::UnknownExpander(
            other.to_string(),
            expander_names().join(", "),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables::inversions;

    fn arc() -> Diagram {
        let mut d = Diagram::new();
        let p = d.add_boundary(Color::White);
        let q = d.add_boundary(Color::Black);
        d.connect(p, q);
        d
    }

    /// Tripod with three white boundary points and a black centre.
    fn white_tripod() -> Diagram {
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

    /// Tripod with three black boundary points and a white centre.
    fn black_tripod() -> Diagram {
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

    /// Two tripods contracted along one leg: boundary (•, •, ∘, ∘).
    fn two_tripods() -> Diagram {
        let mut d = Diagram::new();
        let b1 = d.add_boundary(Color::Black);
        let b2 = d.add_boundary(Color::Black);
        let w2 = d.add_boundary(Color::White);
        let w3 = d.add_boundary(Color::White);
        let u = d.add_internal(Color::White);
        let v = d.add_internal(Color::Black);
        d.connect(u, b1);
        d.connect(u, b2);
        d.connect(u, v);
        d.connect(v, w2);
        d.connect(v, w3);
        d
    }

    /// The hexagonal single-cycle web: six alternating boundary points, six
    /// internal vertices in a ring.
    fn hexagon() -> Diagram {
        let mut d = Diagram::new();
        let mut ps = Vec::new();
        let mut vs = Vec::new();
        for i in 0..6 {
            let (pc, vc) = if i % 2 == 0 {
                (Color::White, Color::Black)
            } else {
                (Color::Black, Color::White)
            };
            ps.push(d.add_boundary(pc));
            vs.push(d.add_internal(vc));
        }
        for i in 0..6 {
            d.connect(vs[i], ps[i]);
        }
        for i in 0..6 {
            d.connect(vs[i], vs[(i + 1) % 6]);
        }
        for i in 1..6 {
            let h = &mut d.verts[vs[i]].half;
            h.swap(1, 2);
        }
        d
    }

    #[test]
    fn cup_expansion_matches_table() {
        let e = expand_by_contraction(&arc()).unwrap();
        assert_eq!(e.state_count(), 3);
        assert_eq!(e.coeff(&[1, -1]), LaurentPoly::one());
        assert_eq!(e.coeff(&[0, 0]), LaurentPoly::v_pow(-1));
        assert_eq!(e.coeff(&[-1, 1]), LaurentPoly::v_pow(-2));
    }

    #[test]
    fn white_tripod_is_inversion_graded() {
        let e = expand_by_contraction(&white_tripod()).unwrap();
        assert_eq!(e.state_count(), 6);
        for (word, coeff) in &e.terms {
            let inv = inversions(word) as i32;
            assert_eq!(*coeff, LaurentPoly::v_pow(-inv), "state {:?}", word);
        }
        let (dom, c) = e.dominant().unwrap();
        assert_eq!(dom, &vec![1, 0, -1]);
        assert!(c.is_one());
    }

    #[test]
    fn two_tripods_give_twelve_monomials() {
        // independent straight-line contraction of the weight tables:
        // coefficient(j1 j2 j5 j6) = sum over a of
        //   T(j1, j2, a) * cap(a) * T(-a, j5, j6)
        use crate::tables::cap_weight;
        let t = |s: &[i8]| -> Option<LaurentPoly> {
            let mut sorted = s.to_vec();
            sorted.sort_unstable();
            if sorted != vec![-1, 0, 1] {
                return None;
            }
            Some(LaurentPoly::v_pow(-(inversions(s) as i32)))
        };
        let e = expand_by_contraction(&two_tripods()).unwrap();
        let mut expected = 0usize;
        for j1 in [1i8, 0, -1] {
            for j2 in [1i8, 0, -1] {
                for j5 in [1i8, 0, -1] {
                    for j6 in [1i8, 0, -1] {
                        let mut total = LaurentPoly::zero();
                        for a in [1i8, 0, -1] {
                            if let (Some(t1), Some(t2)) = (t(&[j1, j2, a]), t(&[-a, j5, j6])) {
                                total += t1 * cap_weight(a) * t2;
                            }
                        }
                        if !total.is_zero() {
                            expected += 1;
                        }
                        assert_eq!(e.coeff(&[j1, j2, j5, j6]), total, "state {:?}", (j1, j2, j5, j6));
                    }
                }
            }
        }
        assert_eq!(expected, 12);
        assert_eq!(e.state_count(), 12);
    }

    #[test]
    fn flows_agree_with_contraction_on_small_webs() {
        for d in [arc(), white_tripod(), black_tripod(), two_tripods(), hexagon()] {
            let a = expand_by_contraction(&d).unwrap();
            let b = expand_by_flows(&d).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn expansions_are_nonnegative_integral() {
        for d in [arc(), white_tripod(), black_tripod(), two_tripods(), hexagon()] {
            let e = expand_by_contraction(&d).unwrap();
            for (word, c) in &e.terms {
                assert!(c.is_nonneg_integral(), "state {:?} has coefficient {}", word, c);
            }
        }
    }

    #[test]
    fn dominant_state_has_unit_coefficient() {
        for d in [arc(), white_tripod(), black_tripod(), two_tripods(), hexagon()] {
            let e = expand_by_contraction(&d).unwrap();
            let (dom, c) = e.dominant().unwrap();
            assert!(c.is_one(), "dominant {:?} has coefficient {}", dom, c);
            let greedy = dominant_path(&d).unwrap();
            assert_eq!(&greedy, dom);
            assert!(coefficient_at(&d, &greedy).unwrap().is_one());
        }
    }

    #[test]
    fn coefficient_at_matches_full_expansion() {
        let d = hexagon();
        let e = expand_by_flows(&d).unwrap();
        for (word, c) in &e.terms {
            assert_eq!(&coefficient_at(&d, word).unwrap(), c);
        }
        // a state beyond the dominant one has coefficient zero
        let mut beyond = e.dominant().unwrap().0.clone();
        beyond[0] = 1;
        beyond[1] = 1;
        if &beyond > e.dominant().unwrap().0 {
            assert!(coefficient_at(&d, &beyond).unwrap().is_zero());
        }
    }

    #[test]
    fn empty_flow_feeds_the_all_zero_state() {
        // on the bare arc the valueless flow is the all-zero state with the
        // 0-state cup weight
        let e = expand_by_flows(&arc()).unwrap();
        assert_eq!(e.coeff(&[0, 0]), LaurentPoly::v_pow(-1));
    }

    #[test]
    fn state_count_is_rotation_invariant() {
        let d = hexagon();
        let n0 = expand_by_contraction(&d).unwrap().state_count();
        let mut r = d.clone();
        for _ in 0..6 {
            r = r.rotate_marked(1);
            let nk = expand_by_contraction(&r).unwrap().state_count();
            assert_eq!(n0, nk);
        }
    }

    #[test]
    fn clasped_boundary_expands_per_strand() {
        // a clasp of multiplicity two over a pair of arcs
        let mut d = Diagram::new();
        let cl = d.add_boundary(Color::White);
        let q2 = d.add_boundary(Color::Black);
        let q1 = d.add_boundary(Color::Black);
        d.connect(cl, q1);
        d.connect(cl, q2);
        // the clasp's first position pairs with the farther point q1 and the
        // second with q2, so the two arcs nest: strands (1, 2, 3, 4) join as
        // (1-4) around (2-3)
        let e = expand_by_contraction(&d).unwrap();
        assert_eq!(e.signature, d.signature());
        // four boundary strands -> words of length 4
        for word in e.terms.keys() {
            assert_eq!(word.len(), 4);
        }
        // leading term: both cups at their top state
        assert_eq!(e.coeff(&[1, 1, -1, -1]), LaurentPoly::one());
    }

    #[test]
    fn word_length_errors_are_reported() {
        let d = arc();
        match coefficient_at(&d, &[1]) {
            Err(QuantumError::WordLength { got: 1, want: 2 }) => {}
            other => panic!("unexpected: {:?}", other),
        }
    }

    #[test]
    fn crossings_are_rejected() {
        let mut d = Diagram::new();
        let tl = d.add_boundary(Color::White);
        let tr = d.add_boundary(Color::White);
        let br = d.add_boundary(Color::Black);
        let bl = d.add_boundary(Color::Black);
        let c = d.add_crossing(1);
        d.connect(c, tl);
        d.connect(c, tr);
        d.connect(c, br);
        d.connect(c, bl);
        match expand_by_contraction(&d) {
            Err(QuantumError::HasCrossings) => {}
            other => panic!("unexpected: {:?}", other),
        }
    }

    #[test]
    fn unknown_expander_is_rejected() {
        match make_expander("nope") {
            Err(QuantumError::UnknownExpander(name, list)) => {
                assert_eq!(name, "nope");
                assert!(list.contains("contraction"));
            }
            Err(other) => panic!("unexpected error: {:?}", other),
            Ok(_) => panic!("unknown expander was accepted"),
        }
    }
}
