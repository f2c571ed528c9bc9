//! JSON interchange for diagrams and linear combinations.
//!
//! A diagram serializes as
//! ```json
//! {
//!   "signature": [{"color":"white","mult":1}, ...],
//!   "marked": 0,
//!   "vertices": [{"id":0,"color":"white","kind":"boundary"},
//!                {"id":3,"kind":"crossing","sign":1}, ...],
//!   "halfEdges": [{"id":0,"twin":5,"next":2,"vertex":0,"arc":false}, ...],
//!   "boundary": [0,1,2],
//!   "multiplicities": {"0":1,"1":2}
//! }
//! ```
//! `next` is the clockwise rotation successor around the half-edge's vertex.
//! The boundary circle is materialized as half-edges flagged `"arc": true`;
//! at a boundary vertex the rotation cycle reads (arc to previous, arc to
//! next, legs in reverse position order). Files without arc half-edges are
//! accepted only when every boundary vertex has multiplicity 1 (otherwise the
//! clasp position order would be ambiguous).

use crate::combo::WebCombo;
use crate::laurent::LaurentPoly;
use crate::web::{Color, Diagram, VKind, WebError};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, thiserror::Error)]
pub enum JsonError {
    #[error("JSON syntax: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("web structure: {0}")]
    Web(#[from] WebError),
    #[error("schema: {0}")]
    Schema(String),
}

#[derive(Serialize, Deserialize, Clone)]
struct SigEntry {
    color: String,
    mult: usize,
}

#[derive(Serialize, Deserialize, Clone)]
struct VertexDto {
    id: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    color: Option<String>,
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    sign: Option<i8>,
}

#[derive(Serialize, Deserialize, Clone)]
struct HalfDto {
    id: usize,
    twin: usize,
    next: usize,
    vertex: usize,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    arc: bool,
}

#[derive(Serialize, Deserialize, Clone)]
struct WebDto {
    signature: Vec<SigEntry>,
    marked: usize,
    vertices: Vec<VertexDto>,
    #[serde(rename = "halfEdges")]
    half_edges: Vec<HalfDto>,
    boundary: Vec<usize>,
    multiplicities: BTreeMap<String, usize>,
}

fn color_name(c: Color) -> &'static str {
    match c {
        Color::White => "white",
        Color::Black => "black",
    }
}

fn color_from_name(s: &str) -> Result<Color, JsonError> {
    match s {
        "white" | "w" => Ok(Color::White),
        "black" | "b" => Ok(Color::Black),
        _ => Err(JsonError::Schema(format!("unknown color {:?}", s))),
    }
}

fn diagram_to_dto(d: &Diagram) -> WebDto {
    let d = d.compact();
    let nh = d.halfs.len();
    let nb = d.boundary.len();
    let mut vertices = Vec::new();
    for (id, v) in d.verts.iter().enumerate() {
        vertices.push(VertexDto {
            id,
            color: if v.kind == VKind::Crossing { None } else { Some(color_name(v.color).into()) },
            kind: match v.kind {
                VKind::Boundary => "boundary",
                VKind::Internal => "internal",
                VKind::Crossing => "crossing",
            }
            .into(),
            sign: if v.kind == VKind::Crossing { Some(v.sign) } else { None },
        });
    }
    // arc ids: fwd(i) = nh + 2i (toward next boundary vertex), bwd(i) = nh + 2i + 1
    let fwd = |i: usize| nh + 2 * i;
    let bwd = |i: usize| nh + 2 * i + 1;
    let mut half_edges = Vec::new();
    // next pointers
    let mut next = vec![usize::MAX; nh + 2 * nb];
    for v in 0..d.verts.len() {
        match d.verts[v].kind {
            VKind::Boundary => {}
            _ => {
                let cyc = &d.verts[v].half;
                for (k, &h) in cyc.iter().enumerate() {
                    next[h] = cyc[(k + 1) % cyc.len()];
                }
            }
        }
    }
    for (i, &b) in d.boundary.iter().enumerate() {
        let mut cyc = vec![bwd(i), fwd(i)];
        cyc.extend(d.verts[b].half.iter().rev().copied());
        for (k, &h) in cyc.iter().enumerate() {
            next[h] = cyc[(k + 1) % cyc.len()];
        }
    }
    for h in 0..nh {
        half_edges.push(HalfDto {
            id: h,
            twin: d.halfs[h].twin,
            next: next[h],
            vertex: d.halfs[h].vertex,
            arc: false,
        });
    }
    for i in 0..nb {
        let j = (i + 1) % nb;
        half_edges.push(HalfDto { id: fwd(i), twin: bwd(j), next: next[fwd(i)], vertex: d.boundary[i], arc: true });
        half_edges.push(HalfDto { id: bwd(i), twin: fwd((i + nb - 1) % nb), next: next[bwd(i)], vertex: d.boundary[i], arc: true });
    }
    let signature = d
        .signature()
        .iter()
        .map(|&(c, m)| SigEntry { color: color_name(c).into(), mult: m })
        .collect();
    let multiplicities = d
        .boundary
        .iter()
        .map(|&b| (b.to_string(), d.verts[b].half.len().max(1)))
        .collect();
    WebDto { signature, marked: 0, vertices, half_edges, boundary: d.boundary.clone(), multiplicities }
}

fn dto_to_diagram(dto: &WebDto) -> Result<Diagram, JsonError> {
    use std::collections::HashMap;
    let vmap: HashMap<usize, &VertexDto> = dto.vertices.iter().map(|v| (v.id, v)).collect();
    if vmap.len() != dto.vertices.len() {
        return Err(JsonError::Schema("duplicate vertex id".into()));
    }
    let hmap: HashMap<usize, &HalfDto> = dto.half_edges.iter().map(|h| (h.id, h)).collect();
    if hmap.len() != dto.half_edges.len() {
        return Err(JsonError::Schema("duplicate half-edge id".into()));
    }
    for h in dto.half_edges.iter() {
        let t = hmap.get(&h.twin).ok_or_else(|| JsonError::Schema(format!("half {} twin missing", h.id)))?;
        if t.twin != h.id {
            return Err(JsonError::Schema(format!("twin of {} is not an involution", h.id)));
        }
        if t.arc != h.arc {
            return Err(JsonError::Schema(format!("arc flag mismatch on half {}", h.id)));
        }
        if !vmap.contains_key(&h.vertex) {
            return Err(JsonError::Schema(format!("half {} at unknown vertex", h.id)));
        }
        if !hmap.contains_key(&h.next) {
            return Err(JsonError::Schema(format!("half {} next missing", h.id)));
        }
    }
    // per-vertex incident halves and next-cycles
    let mut incident: HashMap<usize, Vec<usize>> = HashMap::new();
    for h in dto.half_edges.iter() {
        incident.entry(h.vertex).or_default().push(h.id);
    }
    // follow next-cycle from a half
    let cycle_from = |start: usize| -> Result<Vec<usize>, JsonError> {
        let mut out = vec![start];
        let mut cur = hmap[&start].next;
        while cur != start {
            if out.len() > dto.half_edges.len() {
                return Err(JsonError::Schema("next pointers do not close into a cycle".into()));
            }
            if hmap[&cur].vertex != hmap[&start].vertex {
                return Err(JsonError::Schema(format!("next pointer of half {} leaves its vertex", cur)));
            }
            out.push(cur);
            cur = hmap[&cur].next;
        }
        Ok(out)
    };
    let has_arcs = dto.half_edges.iter().any(|h| h.arc);
    // boundary order (apply marking rotation)
    let mut boundary_ids = dto.boundary.clone();
    if boundary_ids.is_empty() && !dto.signature.is_empty() {
        return Err(JsonError::Schema("nonempty signature with empty boundary".into()));
    }
    if !boundary_ids.is_empty() {
        let k = dto.marked % boundary_ids.len();
        boundary_ids.rotate_left(k);
    }
    // build the diagram: boundary vertices first (in boundary order), then others by id
    let mut d = Diagram::new();
    let mut new_vid: HashMap<usize, usize> = HashMap::new();
    for &b in &boundary_ids {
        let vd = vmap.get(&b).ok_or_else(|| JsonError::Schema(format!("boundary vertex {} missing", b)))?;
        if vd.kind != "boundary" {
            return Err(JsonError::Schema(format!("vertex {} in boundary list is {:?}", b, vd.kind)));
        }
        let color = color_from_name(vd.color.as_deref().unwrap_or(""))?;
        new_vid.insert(b, d.add_boundary(color));
    }
    let mut others: Vec<&VertexDto> = dto.vertices.iter().filter(|v| !new_vid.contains_key(&v.id)).collect();
    others.sort_by_key(|v| v.id);
    for vd in others {
        let nid = match vd.kind.as_str() {
            "internal" => d.add_internal(color_from_name(vd.color.as_deref().unwrap_or(""))?),
            "crossing" => d.add_crossing(vd.sign.unwrap_or(1)),
            "boundary" => return Err(JsonError::Schema(format!("boundary vertex {} not in boundary list", vd.id))),
            other => return Err(JsonError::Schema(format!("unknown vertex kind {:?}", other))),
        };
        new_vid.insert(vd.id, nid);
    }
    // real halves: allocate new ids in sorted order
    let mut real_halves: Vec<usize> = dto.half_edges.iter().filter(|h| !h.arc).map(|h| h.id).collect();
    real_halves.sort_unstable();
    let mut new_hid: HashMap<usize, usize> = HashMap::new();
    for &h in &real_halves {
        let nid = d.halfs.len();
        d.halfs.push(crate::web::Half { twin: 0, vertex: new_vid[&hmap[&h].vertex], alive: true });
        new_hid.insert(h, nid);
    }
    for &h in &real_halves {
        let t = hmap[&h].twin;
        if hmap[&t].arc {
            return Err(JsonError::Schema(format!("real half {} twinned with arc {}", h, t)));
        }
        d.halfs[new_hid[&h]].twin = new_hid[&t];
    }
    // rotations
    for (old_vid, halves) in incident.iter() {
        let vd = &vmap[old_vid];
        let nv = new_vid[old_vid];
        match vd.kind.as_str() {
            "boundary" => {
                let arc_halves: Vec<usize> = halves.iter().copied().filter(|h| hmap[h].arc).collect();
                let legs_unordered: Vec<usize> = halves.iter().copied().filter(|h| !hmap[h].arc).collect();
                if arc_halves.is_empty() {
                    if legs_unordered.len() > 1 {
                        return Err(JsonError::Schema(format!(
                            "boundary vertex {} has multiplicity {} but no arc half-edges; clasp order ambiguous",
                            old_vid,
                            legs_unordered.len()
                        )));
                    }
                    d.verts[nv].half = legs_unordered.iter().map(|h| new_hid[h]).collect();
                } else {
                    if arc_halves.len() != 2 {
                        return Err(JsonError::Schema(format!(
                            "boundary vertex {} has {} arc half-edges, expected 2",
                            old_vid,
                            arc_halves.len()
                        )));
                    }
                    // identify (bwd, fwd): bwd's next is fwd in the rotation cycle
                    let cyc = cycle_from(arc_halves[0])?;
                    if cyc.len() != halves.len() {
                        return Err(JsonError::Schema(format!(
                            "rotation cycle at vertex {} misses half-edges",
                            old_vid
                        )));
                    }
                    let a0 = arc_halves[0];
                    let a1 = arc_halves[1];
                    let (bwd_h, fwd_h) = if hmap[&a0].next == a1 {
                        (a0, a1)
                    } else if hmap[&a1].next == a0 {
                        (a1, a0)
                    } else {
                        return Err(JsonError::Schema(format!(
                            "arc half-edges at vertex {} are not adjacent in rotation",
                            old_vid
                        )));
                    };
                    // cycle starting at bwd: [bwd, fwd, pm, ..., p1]
                    let cyc = cycle_from(bwd_h)?;
                    if cyc[1] != fwd_h {
                        return Err(JsonError::Schema(format!("bad arc order at vertex {}", old_vid)));
                    }
                    let mut legs: Vec<usize> = cyc[2..].to_vec();
                    legs.reverse(); // recover p1..pm
                    d.verts[nv].half = legs.iter().map(|h| new_hid[h]).collect();
                }
            }
            _ => {
                let cyc = cycle_from(halves[0])?;
                if cyc.len() != halves.len() {
                    return Err(JsonError::Schema(format!("rotation cycle at vertex {} misses half-edges", old_vid)));
                }
                // normalize start to the smallest new id
                let pos = cyc
                    .iter()
                    .enumerate()
                    .min_by_key(|(_, h)| new_hid[*h])
                    .map(|(i, _)| i)
                    .unwrap();
                let rotated: Vec<usize> = (0..cyc.len()).map(|k| cyc[(pos + k) % cyc.len()]).collect();
                d.verts[nv].half = rotated.iter().map(|h| new_hid[h]).collect();
            }
        }
    }
    // arc circle consistency when present
    if has_arcs && !boundary_ids.is_empty() {
        // every boundary vertex must carry exactly two arc halves; the twin
        // structure must connect consecutive boundary vertices
        for w in 0..boundary_ids.len() {
            let b = boundary_ids[w];
            let nb_next = boundary_ids[(w + 1) % boundary_ids.len()];
            let arcs: Vec<usize> = incident[&b].iter().copied().filter(|h| hmap[h].arc).collect();
            if arcs.len() != 2 {
                return Err(JsonError::Schema(format!(
                    "boundary vertex {} has {} arc half-edges, expected 2",
                    b,
                    arcs.len()
                )));
            }
            // the forward arc is the one the backward arc points at (bwd.next == fwd)
            let a0 = arcs[0];
            let a1 = arcs[1];
            let fwd_h = if hmap[&a0].next == a1 { a1 } else { a0 };
            let target = hmap[&hmap[&fwd_h].twin].vertex;
            if target != nb_next {
                return Err(JsonError::Schema(format!(
                    "boundary arc from vertex {} should reach {} but reaches {}",
                    b, nb_next, target
                )));
            }
        }
    }
    // cross-check declared signature/multiplicities when present
    if !dto.signature.is_empty() {
        let declared: Vec<(Color, usize)> = dto
            .signature
            .iter()
            .map(|e| color_from_name(&e.color).map(|c| (c, e.mult)))
            .collect::<Result<_, _>>()?;
        let mut derived = d.signature();
        // marked rotation applied to boundary already; declared signature is
        // stored unrotated relative to the original file order
        let k = if boundary_ids.is_empty() { 0 } else { dto.marked % boundary_ids.len() };
        derived.rotate_right(k);
        if declared != derived {
            return Err(JsonError::Schema("declared signature does not match structure".into()));
        }
    }
    d.validate()?;
    Ok(d)
}

/// Serialize a diagram to pretty JSON.
pub fn diagram_to_json(d: &Diagram) -> String {
    serde_json::to_string_pretty(&diagram_to_dto(d)).expect("serializable")
}

/// Parse a diagram from JSON, validating structure.
pub fn diagram_from_json(s: &str) -> Result<Diagram, JsonError> {
    let dto: WebDto = serde_json::from_str(s)?;
    dto_to_diagram(&dto)
}

#[derive(Serialize, Deserialize)]
struct ComboTermDto {
    coeff: LaurentPoly,
    web: WebDto,
}

#[derive(Serialize, Deserialize)]
struct ComboDto {
    terms: Vec<ComboTermDto>,
}

/// Serialize a linear combination to pretty JSON.
pub fn combo_to_json(c: &WebCombo) -> String {
    let dto = ComboDto {
        terms: c
            .iter()
            .map(|(d, coeff)| ComboTermDto { coeff: coeff.clone(), web: diagram_to_dto(d) })
            .collect(),
    };
    serde_json::to_string_pretty(&dto).expect("serializable")
}

/// Parse a linear combination from JSON.
pub fn combo_from_json(s: &str) -> Result<WebCombo, JsonError> {
    let dto: ComboDto = serde_json::from_str(s)?;
    let mut out = WebCombo::zero();
    for t in dto.terms {
        out.add_term(dto_to_diagram(&t.web)?, t.coeff);
    }
    Ok(out)
}
