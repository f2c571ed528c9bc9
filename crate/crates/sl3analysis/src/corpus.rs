//! Constructors for the clasped hexagonal web family.
//!
//! Everything downstream of the thickening and bracelet operations works on a
//! fixed disc layout: six boundary clasps in clockwise order, alternating
//! black/white starting from clasp 0, with clasp `i` sitting at the compass
//! position `S, SW, NW, N, NE, SE` for `i = 0..5`. The core objects are
//!
//! * the **hexagonal web** `W`: one internal hexagon whose vertices send one
//!   leg each to the six clasps;
//! * the **cup necklace** `B`: six boundary-to-boundary arcs, each joining two
//!   neighbouring clasps, together homotopic to the boundary circle;
//! * **nested layers**: a diagram drawn in an annulus around an inner diagram
//!   with the same six clasps. A necklace layer adds no crossings. A hexagon
//!   layer forces every inner leg to cross the new cycle exactly once, which
//!   is the diagrammatic superimposition used by the thickening, bracelet and
//!   band operations.
//!
//! Rotation bookkeeping follows the global convention: half-edge lists are
//! clockwise, and the slots of a boundary clasp run clockwise along the
//! circle, so slot 0 faces the previous clasp. All constructors finish with a
//! planarity check via the face census (Euler characteristic 2), which is
//! exactly the condition the rotation system must satisfy for the diagram to
//! be drawable in the disc.

use sl3core::web::Half;
use sl3core::{Color, Diagram, HalfId, VKind, VertexId};

/// Color of boundary clasp `i` in the fixed layout: black for even `i`.
pub fn clasp_color(i: usize) -> Color {
    if i % 2 == 0 {
        Color::Black
    } else {
        Color::White
    }
}

/// Assert that the rotation system describes a disc drawing: the face census
/// (boundary arcs included) must satisfy V - E + F = 2.
pub fn assert_planar_disc(d: &Diagram) {
    let c = d.compact();
    let v = c.alive_vertices().count() as i64;
    let e_real = c.edge_count() as i64;
    let arcs = c.boundary.len() as i64;
    let f = c.faces().len() as i64;
    assert_eq!(
        v - (e_real + arcs) + f,
        2,
        "rotation system is not a disc embedding (V={}, E={}, arcs={}, F={})",
        v,
        e_real,
        arcs,
        f
    );
}

/// The hexagonal web `W` on six clasps of multiplicity one: internal cycle
/// vertices `u_i` (color opposite clasp `i`) joined in a hexagon, each with
/// one leg to its clasp.
pub fn hexagon_w() -> Diagram {
    let mut d = Diagram::new();
    let b: Vec<VertexId> = (0..6).map(|i| d.add_boundary(clasp_color(i))).collect();
    let u: Vec<VertexId> = (0..6).map(|i| d.add_internal(clasp_color(i).flip())).collect();
    let legs: Vec<HalfId> = (0..6).map(|i| d.connect(u[i], b[i]).0).collect();
    let mut nxt = vec![0usize; 6];
    let mut prv = vec![0usize; 6];
    for i in 0..6 {
        let j = (i + 1) % 6;
        let (hu, hv) = d.connect(u[i], u[j]);
        nxt[i] = hu;
        prv[j] = hv;
    }
    for i in 0..6 {
        // clockwise at a cycle vertex: leg outward, edge toward the next
        // (clockwise) neighbour, edge toward the previous one
        d.verts[u[i]].half = vec![legs[i], nxt[i], prv[i]];
    }
    d.validate().expect("hexagonal web is well formed");
    assert_planar_disc(&d);
    d
}

/// The cup necklace `B`: six clasps of multiplicity two, neighbouring clasps
/// joined by boundary-to-boundary arcs hugging the circle.
pub fn necklace_b() -> Diagram {
    let mut d = Diagram::new();
    let b: Vec<VertexId> = (0..6).map(|i| d.add_boundary(clasp_color(i))).collect();
    let mut toward_prev = vec![0usize; 6];
    let mut toward_next = vec![0usize; 6];
    for i in 0..6 {
        let j = (i + 1) % 6;
        let (hi, hj) = d.connect(b[i], b[j]);
        toward_next[i] = hi;
        toward_prev[j] = hj;
    }
    for i in 0..6 {
        // slot 0 faces the previous clasp
        d.verts[b[i]].half = vec![toward_prev[i], toward_next[i]];
    }
    d.validate().expect("cup necklace is well formed");
    assert_planar_disc(&d);
    d
}

/// Draw a cup necklace in an annulus around `inner`, sharing its clasps. The
/// new arcs take the outermost slots on each clasp; no crossings appear, and
/// a reduced inner diagram stays reduced.
pub fn nest_b_outside(inner: &Diagram) -> Diagram {
    let mut d = inner.compact();
    let n = d.boundary.len();
    assert!(n >= 2 && n % 2 == 0, "necklace layer needs an even clasp count");
    let bverts = d.boundary.clone();
    for i in 0..n {
        let j = (i + 1) % n;
        assert_ne!(
            d.verts[bverts[i]].color,
            d.verts[bverts[j]].color,
            "necklace layer needs alternating clasp colors"
        );
    }
    let mut toward_prev = vec![0usize; n];
    let mut toward_next = vec![0usize; n];
    for i in 0..n {
        let j = (i + 1) % n;
        let (hi, hj) = d.connect(bverts[i], bverts[j]);
        toward_next[i] = hi;
        toward_prev[j] = hj;
    }
    for i in 0..n {
        let mut slots = vec![toward_prev[i]];
        let old: Vec<HalfId> = d.verts[bverts[i]].half.clone();
        // connect() appended the two new halves; keep the original interior
        // stubs in slot order between the two arcs
        slots.extend(old.into_iter().filter(|h| *h != toward_prev[i] && *h != toward_next[i]));
        slots.push(toward_next[i]);
        d.verts[bverts[i]].half = slots;
    }
    d.validate().expect("necklace layer is well formed");
    assert_planar_disc(&d);
    d
}

/// Draw a hexagonal cycle in an annulus around `inner`, sharing its six
/// clasps. Every interior stub of `inner` gets rerouted through one fresh
/// positive crossing with the new cycle: the stub bundle of clasp `i` crosses
/// the cycle edge between the new vertices at positions `i-1` and `i`. The
/// new leg takes the last (most clockwise) slot of each clasp.
pub fn nest_w_outside(inner: &Diagram) -> Diagram {
    let mut d = inner.compact();
    let n = d.boundary.len();
    assert_eq!(n, 6, "hexagon layer needs the six-clasp layout");
    let bverts = d.boundary.clone();
    for (i, &b) in bverts.iter().enumerate() {
        assert_eq!(
            d.verts[b].color,
            clasp_color(i),
            "hexagon layer needs the alternating clasp coloring"
        );
    }
    let w: Vec<VertexId> = (0..n).map(|i| d.add_internal(clasp_color(i).flip())).collect();

    // reroute every clasp stub through a fresh crossing
    let mut cross: Vec<Vec<VertexId>> = Vec::with_capacity(n);
    let mut stub_in: Vec<Vec<HalfId>> = Vec::with_capacity(n);
    let mut out_pair: Vec<Vec<(HalfId, HalfId)>> = Vec::with_capacity(n);
    for &bv in &bverts {
        let stubs: Vec<HalfId> = d.verts[bv].half.clone();
        let cs: Vec<VertexId> = stubs.iter().map(|_| d.add_crossing(1)).collect();
        for (s, &h) in stubs.iter().enumerate() {
            d.halfs[h].vertex = cs[s];
        }
        let outs: Vec<(HalfId, HalfId)> = cs.iter().map(|&c| d.connect(c, bv)).collect();
        cross.push(cs);
        stub_in.push(stubs);
        out_pair.push(outs);
    }
    let legs: Vec<(HalfId, HalfId)> = (0..n).map(|i| d.connect(w[i], bverts[i])).collect();

    // cycle chains: the edge from w[j] to w[j+1] threads the crossings of
    // clasp j+1, nearest-to-w[j] first (slot order of the bundle)
    let mut chains: Vec<Vec<(HalfId, HalfId)>> = Vec::with_capacity(n);
    for j in 0..n {
        let jp = (j + 1) % n;
        let mut nodes: Vec<VertexId> = vec![w[j]];
        nodes.extend(cross[jp].iter().copied());
        nodes.push(w[jp]);
        let hs: Vec<(HalfId, HalfId)> =
            nodes.windows(2).map(|pr| d.connect(pr[0], pr[1])).collect();
        chains.push(hs);
    }

    for i in 0..n {
        let mut slots: Vec<HalfId> = out_pair[i].iter().map(|&(_, hb)| hb).collect();
        slots.push(legs[i].1);
        d.verts[bverts[i]].half = slots;

        let toward_next = chains[i][0].0;
        let toward_prev = chains[(i + n - 1) % n].last().expect("chain nonempty").1;
        d.verts[w[i]].half = vec![legs[i].0, toward_next, toward_prev];

        let ch = &chains[(i + n - 1) % n];
        for (s, &c) in cross[i].iter().enumerate() {
            let toward_wprev = ch[s].1;
            let toward_wi = ch[s + 1].0;
            // clockwise at a leg/cycle crossing: radial out, cycle toward
            // w[i], radial in, cycle toward w[i-1]; opposite slots share a
            // strand as the crossing contract requires
            d.verts[c].half = vec![out_pair[i][s].0, toward_wi, stub_in[i][s], toward_wprev];
        }
    }
    d.validate().expect("hexagon layer is well formed");
    assert_planar_disc(&d);
    d
}

/// `k` nested hexagon layers sharing the six clasps, with a braid inserted on
/// the cycle segments between positions 5 and 0 (before any leg crossings).
/// `swaps` lists adjacent transpositions bottom-to-top along the travel
/// direction: swap `p` crosses the strands currently at radial positions `p`
/// and `p+1` (0 innermost). All crossings are positive.
pub fn cables_with_braid(k: usize, swaps: &[usize]) -> Diagram {
    assert!(k >= 1, "cable needs at least one layer");
    let mut d = hexagon_w();
    for _ in 1..k {
        d = nest_w_outside(&d);
    }
    // seg[m] = the cycle edge of layer m on the 5 -> 0 segment adjacent to
    // the layer's vertex at position 5, as (half there, its twin). Recovered
    // structurally: slot m of clasp 5 is the radial strand of layer m
    // (innermost first); following it inward through its crossings lands on
    // the layer's cycle vertex, whose slot 1 starts the 5 -> 0 segment.
    let mut seg: Vec<(HalfId, HalfId)> = Vec::with_capacity(k);
    let b5 = d.boundary[5];
    let slots = d.verts[b5].half.clone();
    for &slot in &slots {
        let mut hh = d.twin(slot);
        while d.verts[d.vertex_of(hh)].kind == VKind::Crossing {
            let c = d.vertex_of(hh);
            let s = d.slot_of(hh);
            let opp = d.verts[c].half[(s + 2) % 4];
            hh = d.twin(opp);
        }
        let uv = d.vertex_of(hh);
        debug_assert_eq!(d.slot_of(hh), 0, "radial strand ends at a leg slot");
        let start = d.verts[uv].half[1];
        seg.push((start, d.twin(start)));
    }
    assert_eq!(seg.len(), k, "one braid segment per layer");

    // braid surgery: open[p] = half of the open strand end at radial
    // position p, still twinned to its eventual continuation; right[p] = the
    // original continuation halves in position order
    let mut open: Vec<HalfId> = seg.iter().map(|&(l, _)| l).collect();
    let right: Vec<HalfId> = seg.iter().map(|&(_, r)| r).collect();
    insert_braid(&mut d, &mut open, swaps);
    for p in 0..k {
        d.halfs[open[p]].twin = right[p];
        d.halfs[right[p]].twin = open[p];
    }
    d.validate().expect("braided cable is well formed");
    assert_planar_disc(&d);
    d
}

/// Braid surgery on open strand ends: `open[p]` is a half-edge at lateral
/// position `p` whose onward link will be re-routed; each entry `p` of `word`
/// adds one positive crossing between the strands currently at positions `p`
/// and `p+1`, updating `open` to the new front. Callers finish by twinning
/// the final `open` ends onto their continuations.
fn insert_braid(d: &mut Diagram, open: &mut [HalfId], word: &[usize]) {
    for &p in word {
        assert!(p + 1 < open.len(), "swap position out of range");
        let c = d.add_crossing(1);
        let a_in = d.halfs.len();
        d.halfs.push(Half { twin: open[p], vertex: c, alive: true });
        d.halfs[open[p]].twin = a_in;
        let b_in = d.halfs.len();
        d.halfs.push(Half { twin: open[p + 1], vertex: c, alive: true });
        d.halfs[open[p + 1]].twin = b_in;
        let a_out = d.halfs.len();
        d.halfs.push(Half { twin: usize::MAX, vertex: c, alive: true });
        let b_out = d.halfs.len();
        d.halfs.push(Half { twin: usize::MAX, vertex: c, alive: true });
        // clockwise in the local travel frame: the strand entering at the
        // inner position exits outward (a_out), the outer one exits inward
        d.verts[c].half = vec![a_out, b_out, a_in, b_in];
        open[p] = b_out;
        open[p + 1] = a_out;
    }
}

/// The hexagonal web with its cycle severed at the channel between clasps 5
/// and 0: the loose ends are routed to two extra boundary points flanking
/// the channel, upstream end (attached at position 5) first in clockwise
/// order. Closing the channel with a trivial braid restores the hexagon.
pub fn cut_hexagon() -> Diagram {
    let mut d = Diagram::new();
    let b: Vec<VertexId> = (0..6).map(|i| d.add_boundary(clasp_color(i))).collect();
    let u: Vec<VertexId> = (0..6).map(|i| d.add_internal(clasp_color(i).flip())).collect();
    let legs: Vec<HalfId> = (0..6).map(|i| d.connect(u[i], b[i]).0).collect();
    let mut nxt = vec![usize::MAX; 6];
    let mut prv = vec![usize::MAX; 6];
    for i in 0..5 {
        let (hu, hv) = d.connect(u[i], u[i + 1]);
        nxt[i] = hu;
        prv[i + 1] = hv;
    }
    let upstream = d.add_boundary(Color::White);
    let downstream = d.add_boundary(Color::Black);
    nxt[5] = d.connect(u[5], upstream).0;
    prv[0] = d.connect(downstream, u[0]).1;
    for i in 0..6 {
        d.verts[u[i]].half = vec![legs[i], nxt[i], prv[i]];
    }
    d.validate().expect("cut hexagon is well formed");
    assert_planar_disc(&d);
    d
}

/// Draw a severed hexagon layer in the annulus around a cut diagram: as
/// [`nest_w_outside`] on the six clasps, but the new cycle is cut at the
/// same channel, its loose ends joining the boundary just outside the inner
/// cut points. Inner cut stubs pass through the channel untouched, so the
/// only new crossings are the clasp bundles against the new cycle.
pub fn cut_layer_outside(inner: &Diagram) -> Diagram {
    let mut d = inner.compact();
    let nb = d.boundary.len();
    assert!(nb >= 8 && nb % 2 == 0, "cut layer needs six clasps plus paired cut points");
    let m = (nb - 6) / 2;
    let bverts: Vec<VertexId> = d.boundary[..6].to_vec();
    for (i, &b) in bverts.iter().enumerate() {
        assert_eq!(
            d.verts[b].color,
            clasp_color(i),
            "cut layer needs the alternating clasp coloring"
        );
    }
    for j in 0..m {
        assert_eq!(d.verts[d.boundary[6 + j]].color, Color::White, "upstream cut points are white");
        assert_eq!(
            d.verts[d.boundary[6 + m + j]].color,
            Color::Black,
            "downstream cut points are black"
        );
    }
    let w: Vec<VertexId> = (0..6).map(|i| d.add_internal(clasp_color(i).flip())).collect();

    // reroute the six clasp bundles through fresh crossings; cut stubs stay
    let mut cross: Vec<Vec<VertexId>> = Vec::with_capacity(6);
    let mut stub_in: Vec<Vec<HalfId>> = Vec::with_capacity(6);
    let mut out_pair: Vec<Vec<(HalfId, HalfId)>> = Vec::with_capacity(6);
    for &bv in &bverts {
        let stubs: Vec<HalfId> = d.verts[bv].half.clone();
        let cs: Vec<VertexId> = stubs.iter().map(|_| d.add_crossing(1)).collect();
        for (s, &h) in stubs.iter().enumerate() {
            d.halfs[h].vertex = cs[s];
        }
        let outs: Vec<(HalfId, HalfId)> = cs.iter().map(|&c| d.connect(c, bv)).collect();
        cross.push(cs);
        stub_in.push(stubs);
        out_pair.push(outs);
    }
    let legs: Vec<(HalfId, HalfId)> = (0..6).map(|i| d.connect(w[i], bverts[i])).collect();
    let upstream = d.add_boundary(Color::White);
    let downstream = d.add_boundary(Color::Black);

    // bundle_chain[i] = the cycle run entering clasp i's crossings: from
    // w[i-1] for i > 0, from the re-entry point for i = 0. The exit edge
    // w[5] -> upstream carries no crossings.
    let mut bundle_chain: Vec<Vec<(HalfId, HalfId)>> = Vec::with_capacity(6);
    for i in 0..6 {
        let mut nodes: Vec<VertexId> = if i == 0 { vec![downstream] } else { vec![w[i - 1]] };
        nodes.extend(cross[i].iter().copied());
        nodes.push(w[i]);
        bundle_chain.push(nodes.windows(2).map(|pr| d.connect(pr[0], pr[1])).collect());
    }
    let exit = d.connect(w[5], upstream);

    for i in 0..6 {
        let mut slots: Vec<HalfId> = out_pair[i].iter().map(|&(_, hb)| hb).collect();
        slots.push(legs[i].1);
        d.verts[bverts[i]].half = slots;

        let toward_next =
            if i == 5 { exit.0 } else { bundle_chain[i + 1][0].0 };
        let toward_prev = bundle_chain[i].last().expect("chain nonempty").1;
        d.verts[w[i]].half = vec![legs[i].0, toward_next, toward_prev];

        let ch = &bundle_chain[i];
        for (s, &c) in cross[i].iter().enumerate() {
            let toward_wprev = ch[s].1;
            let toward_wi = ch[s + 1].0;
            d.verts[c].half = vec![out_pair[i][s].0, toward_wi, stub_in[i][s], toward_wprev];
        }
    }

    // boundary: clasps, then the channel from outermost upstream to
    // outermost downstream
    let olds: Vec<VertexId> = d.boundary[6..6 + 2 * m].to_vec();
    let mut bd = bverts.clone();
    bd.push(upstream);
    bd.extend(olds);
    bd.push(downstream);
    d.boundary = bd;

    d.validate().expect("cut layer is well formed");
    assert_planar_disc(&d);
    d
}

/// A positive braid on `k` strands as a disc diagram: white entry points
/// `0..k-1` in clockwise boundary order, then the black exit points in
/// reverse, so with an empty word strand `p` runs straight from entry `p` to
/// exit `p`. Swaps in `word` apply along the travel direction.
pub fn braid_tangle(k: usize, word: &[usize]) -> Diagram {
    assert!(k >= 1, "braid tangle needs at least one strand");
    let mut d = Diagram::new();
    let entries: Vec<VertexId> = (0..k).map(|_| d.add_boundary(Color::White)).collect();
    let exits: Vec<VertexId> = (0..k).map(|_| d.add_boundary(Color::Black)).collect();
    let mut bd = entries.clone();
    bd.extend(exits.iter().rev());
    d.boundary = bd;
    let strands: Vec<(HalfId, HalfId)> =
        (0..k).map(|p| d.connect(entries[p], exits[p])).collect();
    let mut open: Vec<HalfId> = strands.iter().map(|&(h, _)| h).collect();
    let right: Vec<HalfId> = strands.iter().map(|&(_, h)| h).collect();
    insert_braid(&mut d, &mut open, word);
    for p in 0..k {
        d.halfs[open[p]].twin = right[p];
        d.halfs[right[p]].twin = open[p];
    }
    d.validate().expect("braid tangle is well formed");
    assert_planar_disc(&d);
    d
}

/// Close a cut diagram by gluing a braid tangle across the channel: each
/// upstream end reconnects through the braid to a downstream end, wiring the
/// severed cycles back up with the permutation of `word` (up to a fixed
/// relabeling of positions). Returns the closed diagram, whose boundary is
/// the six clasps again, and the number of swallowed loops.
pub fn close_cut(web: &Diagram, word: &[usize]) -> (Diagram, usize) {
    let nb = web.boundary.len();
    assert!(nb >= 8 && nb % 2 == 0, "closing needs six clasps plus paired cut points");
    let k = (nb - 6) / 2;
    let u = web.cup_union(&braid_tangle(k, word));
    let bd = u.boundary.clone();
    debug_assert_eq!(bd.len(), 6 + 4 * k);
    let mut pairs = Vec::with_capacity(2 * k);
    for p in 0..k {
        // upstream end p to tangle exit k-1-p, downstream end p to tangle
        // entry k-1-p: these chords of the combined circle nest, so the
        // gluing stays planar
        pairs.push((bd[6 + k - 1 - p], bd[6 + 3 * k + p]));
        pairs.push((bd[6 + k + p], bd[6 + 2 * k + k - 1 - p]));
    }
    let (closed, loops) = u.plug(&pairs).expect("channel gluing is well formed");
    closed.validate().expect("closed diagram is well formed");
    assert_planar_disc(&closed);
    (closed, loops)
}

/// The union of the hexagonal web with one necklace layer (clasps of
/// multiplicity three).
pub fn w_cup_b() -> Diagram {
    nest_b_outside(&hexagon_w())
}

/// The union of the hexagonal web with two necklace layers (clasps of
/// multiplicity five).
pub fn w_cup_b_b() -> Diagram {
    nest_b_outside(&w_cup_b())
}

/// Split the clasps and move the marked point to the canonical reading
/// position for clasp multiplicity `k`: the reading starts `ceil(k/2)`
/// positions into clasp 0.
pub fn unclasp_reading(d: &Diagram) -> Diagram {
    let k = d.signature().first().map(|&(_, m)| m).unwrap_or(1);
    d.unclasp().rotate_marked(k.div_ceil(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use sl3core::web::format_signature;
    use sl3core::FaceKind;

    #[test]
    fn hexagonal_web_shape() {
        let w = hexagon_w();
        assert_eq!(w.internal_vertex_count(), 6);
        assert_eq!(w.edge_count(), 12);
        assert_eq!(format_signature(&w.signature()), "b,w,b,w,b,w");
        assert!(w.is_non_elliptic());
        let interior: Vec<_> = w.interior_faces();
        assert_eq!(interior.len(), 1);
        assert_eq!(interior[0].len, 6);
    }

    #[test]
    fn necklace_shape() {
        let b = necklace_b();
        assert_eq!(b.internal_vertex_count(), 0);
        assert_eq!(b.edge_count(), 6);
        assert_eq!(format_signature(&b.signature()), "b2,w2,b2,w2,b2,w2");
        assert!(b.is_non_elliptic());
        // the centre face touches the boundary only at clasp pinch points
        let pinch = b.faces().iter().filter(|f| f.kind == FaceKind::ClaspPinch).count();
        assert_eq!(pinch, 1);
    }

    #[test]
    fn necklace_layers_stack_without_crossings() {
        let wb = w_cup_b();
        assert_eq!(format_signature(&wb.signature()), "b3,w3,b3,w3,b3,w3");
        assert_eq!(wb.crossing_count(), 0);
        assert!(wb.is_non_elliptic());
        let wbb = w_cup_b_b();
        assert_eq!(format_signature(&wbb.signature()), "b5,w5,b5,w5,b5,w5");
        assert_eq!(wbb.internal_vertex_count(), 6);
        assert_eq!(wbb.edge_count(), 12 + 6 + 6);
        assert!(wbb.is_non_elliptic());
    }

    #[test]
    fn hexagon_layer_crosses_every_stub_once() {
        let t2 = nest_w_outside(&hexagon_w());
        assert_eq!(t2.crossing_count(), 6);
        assert_eq!(format_signature(&t2.signature()), "b2,w2,b2,w2,b2,w2");
        let t3 = nest_w_outside(&t2);
        assert_eq!(t3.crossing_count(), 6 + 12);
        assert_eq!(format_signature(&t3.signature()), "b3,w3,b3,w3,b3,w3");
    }

    #[test]
    fn braided_cable_counts() {
        let plain = cables_with_braid(2, &[]);
        assert_eq!(plain.crossing_count(), 6);
        let brac2 = cables_with_braid(2, &[0]);
        assert_eq!(brac2.crossing_count(), 7);
        assert_eq!(format_signature(&brac2.signature()), "b2,w2,b2,w2,b2,w2");
        let brac3 = cables_with_braid(3, &[0, 1]);
        assert_eq!(brac3.crossing_count(), 18 + 2);
    }

    #[test]
    fn cut_hexagon_closes_back_to_the_hexagon() {
        let cut = cut_hexagon();
        assert_eq!(cut.boundary.len(), 8);
        assert_eq!(cut.internal_vertex_count(), 6);
        assert_eq!(cut.crossing_count(), 0);
        let (closed, loops) = close_cut(&cut, &[]);
        assert_eq!(loops, 0);
        assert!(closed.same_key(&hexagon_w()), "trivial closure restores the hexagon");
    }

    #[test]
    fn cut_layers_close_back_to_the_plain_cable() {
        let cut2 = cut_layer_outside(&cut_hexagon());
        assert_eq!(cut2.boundary.len(), 10);
        assert_eq!(cut2.crossing_count(), 6);
        let (closed, loops) = close_cut(&cut2, &[]);
        assert_eq!(loops, 0);
        assert!(closed.same_key(&cables_with_braid(2, &[])), "trivial closure restores the cable");
        let cut3 = cut_layer_outside(&cut2);
        assert_eq!(cut3.boundary.len(), 12);
        assert_eq!(cut3.crossing_count(), 6 + 12);
        let (closed3, loops3) = close_cut(&cut3, &[]);
        assert_eq!(loops3, 0);
        assert!(closed3.same_key(&cables_with_braid(3, &[])));
    }

    #[test]
    fn braid_tangle_shapes() {
        let t = braid_tangle(3, &[0, 1]);
        assert_eq!(t.boundary_width(), 6);
        assert_eq!(t.crossing_count(), 2);
        let id = braid_tangle(2, &[]);
        assert_eq!(id.crossing_count(), 0);
        assert_eq!(id.edge_count(), 2);
    }

    #[test]
    fn braided_closure_matches_the_direct_braided_cable() {
        let cut2 = cut_layer_outside(&cut_hexagon());
        let (closed, loops) = close_cut(&cut2, &[0]);
        assert_eq!(loops, 0);
        assert_eq!(closed.crossing_count(), 7);
        assert!(closed.same_key(&cables_with_braid(2, &[0])), "one-swap closure matches");
    }

    #[test]
    fn unclasp_reading_rotation() {
        let wbb = w_cup_b_b();
        let open = unclasp_reading(&wbb);
        assert_eq!(open.boundary_width(), 30);
        // reading starts three points into clasp 0: two black points remain
        // before the first white clasp
        let word = open.boundary_word();
        let letters: String = word.iter().map(|c| c.letter()).collect();
        assert!(letters.starts_with("bbwwwww"), "got {}", letters);
        assert!(letters.ends_with("bbb"), "got {}", letters);
    }
}
