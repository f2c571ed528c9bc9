//! Exhaustive catalogs of the non-elliptic web basis for a boundary word.
//!
//! Non-elliptic webs with a fixed boundary form a basis of the invariant
//! space of the corresponding tensor product of fundamental representations,
//! and each basis web is indexed by its dominant lattice path — the
//! lexicographically greatest boundary state its flows achieve. A catalog
//! pairs every basis web with that path and is certified complete against a
//! representation-theoretic dimension count.
//!
//! Generation expands the first open stub of each disc region: the stub
//! either arcs to a later stub of opposite color, splitting the region in
//! two, or feeds a fresh internal trivalent vertex whose two remaining legs
//! take its place. Every planar web arises from exactly one expansion
//! history, so the search is duplicate-free by construction; an internal
//! vertex budget bounds the depth and is raised until the non-elliptic count
//! reaches the dimension. The growth map (dominant path back to web) is
//! realized extensionally: catalog lookup at desk scale, and recognition of
//! the thickening family for the larger boundaries where it is the only
//! implemented family.

use std::collections::BTreeMap;

use sl3core::web::{format_signature, Half};
use sl3core::{Color, Diagram, HalfId};
use sl3engine::quantum::dominant_path;

use crate::chebops::thick_web;
use crate::corpus::{assert_planar_disc, unclasp_reading};
use crate::dimension::dim_invariants;

/// Errors from catalog construction and growth lookup.
#[derive(Debug, thiserror::Error)]
pub enum EnumError {
    #[error("dimension {dim} of {sig} exceeds the desk-scale cap {cap}")]
    TooLarge { sig: String, dim: u64, cap: u64 },
    #[error("spanning family saturated at {found} webs below dimension {dim} for {sig}")]
    GeneratorGap { sig: String, found: usize, dim: u64 },
    #[error("two basis webs share the dominant path {0:?}")]
    PathCollision(String),
    #[error("state {state} is not the dominant path of any known web for {sig}")]
    UnknownPath { sig: String, state: String },
    #[error("rewriting failed: {0}")]
    Skein(#[from] sl3engine::SkeinError),
    #[error("flow analysis failed: {0}")]
    Quantum(#[from] sl3engine::QuantumError),
}

/// A complete basis catalog for one boundary word: every non-elliptic web,
/// keyed by its dominant path.
pub struct BasisCatalog {
    pub word: Vec<Color>,
    pub entries: BTreeMap<Vec<i8>, Diagram>,
}

impl BasisCatalog {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The web with the given dominant path.
    pub fn lookup(&self, state: &[i8]) -> Option<&Diagram> {
        self.entries.get(state)
    }
}

/// Render a state word like `(1,0,-1)` for error messages.
pub fn format_state(state: &[i8]) -> String {
    let body: Vec<String> = state.iter().map(|s| s.to_string()).collect();
    format!("({})", body.join(","))
}

/// All webs on `word` with at most `budget` internal vertices, elliptic ones
/// included; callers filter. The expansion history of every web is unique,
/// so no two results are isomorphic.
fn enumerate_words(word: &[Color], budget: usize) -> Vec<Diagram> {
    let mut base = Diagram::new();
    let mut stubs: Vec<HalfId> = Vec::with_capacity(word.len());
    for &c in word {
        let b = base.add_boundary(c);
        let h = base.halfs.len();
        base.halfs.push(Half { twin: usize::MAX, vertex: b, alive: true });
        base.verts[b].half.push(h);
        stubs.push(h);
    }
    let mut out = Vec::new();
    let regions = if stubs.is_empty() { Vec::new() } else { vec![stubs] };
    expand_region(&base, regions, budget, &mut out);
    out
}

/// Are two internal vertices already joined by an edge? A second parallel
/// edge would close an elliptic bigon, so such arcs are pruned at the source.
fn joined(d: &Diagram, u: usize, v: usize) -> bool {
    d.verts[u].half.iter().any(|&h| {
        let t = d.halfs[h].twin;
        t != usize::MAX && d.halfs[t].vertex == v
    })
}

fn expand_region(d: &Diagram, mut regions: Vec<Vec<HalfId>>, budget: usize, out: &mut Vec<Diagram>) {
    while regions.last().map(|r| r.is_empty()).unwrap_or(false) {
        regions.pop();
    }
    let Some(region) = regions.last().cloned() else {
        let done = d.compact();
        done.validate().expect("completed web is well formed");
        if !done.boundary.is_empty() {
            assert_planar_disc(&done);
        }
        out.push(done);
        return;
    };
    let s0 = region[0];
    let o0 = d.halfs[s0].vertex;
    let c0 = d.verts[o0].color;

    // arc from the first stub to a later one of opposite color; the two
    // sides of the chord become independent regions
    for (j, &sj) in region.iter().enumerate().skip(1) {
        let oj = d.halfs[sj].vertex;
        if d.verts[oj].color == c0 {
            continue;
        }
        if d.verts[o0].kind != sl3core::VKind::Boundary
            && d.verts[oj].kind != sl3core::VKind::Boundary
            && joined(d, o0, oj)
        {
            continue;
        }
        let mut nd = d.clone();
        nd.halfs[s0].twin = sj;
        nd.halfs[sj].twin = s0;
        let mut nregions = regions.clone();
        nregions.pop();
        let far = region[j + 1..].to_vec();
        let near = region[1..j].to_vec();
        if !far.is_empty() {
            nregions.push(far);
        }
        if !near.is_empty() {
            nregions.push(near);
        }
        expand_region(&nd, nregions, budget, out);
    }

    // or feed a fresh internal vertex: its two free legs replace the stub
    if budget > 0 {
        let mut nd = d.clone();
        let v = nd.add_internal(c0.flip());
        let parent = nd.halfs.len();
        nd.halfs.push(Half { twin: s0, vertex: v, alive: true });
        nd.halfs[s0].twin = parent;
        let ca = nd.halfs.len();
        nd.halfs.push(Half { twin: usize::MAX, vertex: v, alive: true });
        let cb = nd.halfs.len();
        nd.halfs.push(Half { twin: usize::MAX, vertex: v, alive: true });
        // clockwise at the new vertex: parent edge, then the leg facing the
        // near end of the region, then the leg facing the far end
        nd.verts[v].half = vec![parent, cb, ca];
        let mut nregions = regions.clone();
        let last = nregions.last_mut().expect("region present");
        last[0] = ca;
        last.insert(1, cb);
        expand_region(&nd, nregions, budget - 1, out);
    }
}

/// Desk-scale cap on catalog dimension.
pub const CATALOG_DIM_CAP: u64 = 200;

/// Enumerate the complete non-elliptic basis for a boundary word and attach
/// dominant paths, certifying the count against the dimension oracle. The
/// internal vertex budget is raised until the count is reached; saturation
/// below the dimension is a loud failure.
pub fn enumerate_basis_word(word: &[Color]) -> Result<BasisCatalog, EnumError> {
    let sig: Vec<(Color, usize)> = word.iter().map(|&c| (c, 1)).collect();
    let signame = if word.is_empty() { "(empty)".to_string() } else { format_signature(&sig) };
    let dim = dim_invariants(word);
    if dim > CATALOG_DIM_CAP {
        return Err(EnumError::TooLarge { sig: signame, dim, cap: CATALOG_DIM_CAP });
    }
    let cap = 3 * word.len() + 6;
    let mut budget = 0usize;
    let webs = loop {
        let mut webs: BTreeMap<String, Diagram> = BTreeMap::new();
        for d in enumerate_words(word, budget) {
            if !d.is_non_elliptic() {
                continue;
            }
            let prev = webs.insert(d.canonical_key(), d);
            assert!(prev.is_none(), "expansion histories generated a duplicate web");
        }
        if webs.len() as u64 == dim {
            break webs;
        }
        assert!(
            (webs.len() as u64) < dim,
            "enumerated {} webs but the invariant space has dimension {}",
            webs.len(),
            dim
        );
        if budget >= cap {
            return Err(EnumError::GeneratorGap { sig: signame, found: webs.len(), dim });
        }
        budget += 1;
    };
    let mut entries: BTreeMap<Vec<i8>, Diagram> = BTreeMap::new();
    for (_, d) in webs {
        let path = dominant_path(&d)?;
        if let Some(_clash) = entries.insert(path.clone(), d) {
            return Err(EnumError::PathCollision(format_state(&path)));
        }
    }
    Ok(BasisCatalog { word: word.to_vec(), entries })
}

/// Enumerate the basis for a signature by expanding clasp multiplicities
/// into single boundary points.
pub fn enumerate_basis(sig: &[(Color, usize)]) -> Result<BasisCatalog, EnumError> {
    let mut word = Vec::new();
    for &(c, m) in sig {
        word.extend(std::iter::repeat(c).take(m));
    }
    enumerate_basis_word(&word)
}

/// The growth map: recover the unique basis web whose dominant path is
/// `state`. Desk-scale signatures go through the catalog; the larger
/// boundaries of the thickening family (six equal clasps, fully split) are
/// recognized by rebuilding the thickening and matching its path. Anything
/// else is an unknown-path error.
pub fn growth_inverse(word: &[Color], state: &[i8]) -> Result<Diagram, EnumError> {
    let sig: Vec<(Color, usize)> = word.iter().map(|&c| (c, 1)).collect();
    let signame = format_signature(&sig);
    let dim = dim_invariants(word);
    if dim <= CATALOG_DIM_CAP {
        let cat = enumerate_basis_word(word)?;
        return cat.lookup(state).cloned().ok_or_else(|| EnumError::UnknownPath {
            sig: signame,
            state: format_state(state),
        });
    }
    if word.len() % 6 == 0 {
        let k = word.len() / 6;
        let t = unclasp_reading(&thick_web(k)?);
        if t.boundary_word() == word && dominant_path(&t)? == state {
            return Ok(t);
        }
    }
    Err(EnumError::UnknownPath { sig: signame, state: format_state(state) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use sl3core::web::parse_signature;

    fn word_of(s: &str) -> Vec<Color> {
        if s.is_empty() {
            return Vec::new();
        }
        parse_signature(s)
            .expect("parses")
            .into_iter()
            .flat_map(|(c, m)| std::iter::repeat(c).take(m))
            .collect()
    }

    #[test]
    fn empty_word_has_the_empty_web() {
        let cat = enumerate_basis_word(&[]).expect("complete");
        assert_eq!(cat.len(), 1);
        let (path, web) = cat.entries.iter().next().expect("entry");
        assert!(path.is_empty());
        assert_eq!(web.alive_vertices().count(), 0);
    }

    #[test]
    fn cup_catalog_is_the_single_arc() {
        let cat = enumerate_basis_word(&word_of("w,b")).expect("complete");
        assert_eq!(cat.len(), 1);
        let (path, web) = cat.entries.iter().next().expect("entry");
        assert_eq!(path, &vec![1, -1], "cup dominant path");
        assert_eq!(web.edge_count(), 1);
        assert_eq!(web.internal_vertex_count(), 0);
    }

    #[test]
    fn tripod_catalog_is_the_single_vertex() {
        let cat = enumerate_basis_word(&word_of("w,w,w")).expect("complete");
        assert_eq!(cat.len(), 1);
        let web = cat.entries.values().next().expect("entry");
        assert_eq!(web.internal_vertex_count(), 1);
        assert_eq!(web.edge_count(), 3);
    }

    #[test]
    fn like_colored_pair_has_no_web() {
        let cat = enumerate_basis_word(&word_of("w,w")).expect("complete");
        assert_eq!(cat.len(), 0);
    }

    #[test]
    fn alternating_hexagon_catalog() {
        let cat = enumerate_basis_word(&word_of("b,w,b,w,b,w")).expect("complete");
        assert_eq!(cat.len(), 6, "five cup matchings plus the hexagonal web");
        let hexes: Vec<_> =
            cat.entries.values().filter(|d| d.internal_vertex_count() == 6).collect();
        assert_eq!(hexes.len(), 1, "exactly one entry is the hexagonal web");
        assert!(hexes[0].same_key(&crate::corpus::hexagon_w()));
    }

    #[test]
    fn growth_recovers_catalog_webs() {
        for s in ["w,b", "b,w,b,w,b,w", "w,w,w,b,b,b"] {
            let w = word_of(s);
            let cat = enumerate_basis_word(&w).expect("complete");
            for (path, web) in &cat.entries {
                let got = growth_inverse(&w, path).expect("growth succeeds");
                assert!(got.same_key(web), "growth inverts the path index on {}", s);
            }
        }
    }

    #[test]
    fn growth_rejects_a_non_dominant_state() {
        let w = word_of("w,b");
        let err = growth_inverse(&w, &[0, 0]);
        assert!(matches!(err, Err(EnumError::UnknownPath { .. })));
    }
}
