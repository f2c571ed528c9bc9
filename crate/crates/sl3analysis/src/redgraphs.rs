//! Red graphs on crossingless webs.
//!
//! A red graph is a non-empty induced subgraph of the dual graph on a web's
//! interior faces, subject to the triple condition: three faces meeting at a
//! common vertex never all belong to the graph. Each red face has an external
//! degree `ed(f)` — the number of half-edges hanging off its boundary
//! vertices whose edges bound neither the face itself nor any other red face
//! — and the level of the graph is `I(G) = 2|V| − |E| − ½·Σ ed(f)`. A graph
//! is admissible when its dual edges can be oriented so that every face
//! receives at most `2 − ½ed(f)` of them, and exact when it is admissible
//! with level zero. Exact red graphs certify that the projective module
//! attached to the web decomposes, so a web with no exact red graph spans a
//! dual canonical invariant; the witnesses matter too, because cutting the
//! red faces out and rejoining the hanging half-edges along a pairing — the
//! G-reduction — produces the webs appearing in the correction terms.
//!
//! Levels are half-integers in general, so the code works with doubled
//! levels (`level2`, `vertex_level2`) to stay in integers.
//!
//! Faces pinched at clasps are not interior faces; red-graph analysis is
//! meant for fully split (unclasped) webs, where the question does not
//! arise. Interior faces of disc-embedded webs with every component
//! attached to the boundary are automatically discs.

use std::collections::{BTreeMap, BTreeSet};

use sl3core::web::Face;
use sl3core::{Diagram, FaceKind, HalfId, VKind, VertexId, WebCombo, WebError};
use sl3engine::skein::loop_factor;
use sl3engine::{reduce_to_basis, SkeinError};

/// Errors from red-graph analysis.
#[derive(Debug, thiserror::Error)]
pub enum RedError {
    #[error("web is malformed: {0}")]
    Web(#[from] WebError),
    #[error("red graphs are defined for crossingless webs")]
    HasCrossings,
    #[error("{0} interior faces exceed the exhaustive search cap")]
    TooLarge(usize),
    #[error("invalid pairing: {0}")]
    Pairing(String),
    #[error("rewriting failed: {0}")]
    Skein(#[from] SkeinError),
}

/// A candidate gray half-edge of one red face: a half at a vertex of the
/// face's boundary whose edge does not bound the face. `flanks` are the two
/// global faces of the web on either side of that edge.
#[derive(Clone, Debug)]
struct Leg {
    half: HalfId,
    flanks: [usize; 2],
}

/// Precomputed face-dual context for one web: faces, the interior-face dual
/// multigraph, the forbidden triples, and per-face gray-half candidates.
pub struct FaceDual {
    pub web: Diagram,
    pub faces: Vec<Face>,
    /// Local interior-face id → global face index.
    pub interior: Vec<usize>,
    /// Global face index → local interior id.
    face_local: Vec<Option<usize>>,
    /// Half-edge → global face whose walk contains it.
    half_face: Vec<usize>,
    /// Local id → vertices on the face walk.
    verts_of: Vec<Vec<VertexId>>,
    /// Local id → candidate gray halves.
    legs: Vec<Vec<Leg>>,
    /// Unordered local pair → number of shared edges (dual multigraph).
    pair_count: BTreeMap<(usize, usize), usize>,
    /// Sorted local id triples meeting at a common vertex.
    triples: Vec<[usize; 3]>,
}

/// A red graph: a set of interior faces (local ids in the owning
/// [`FaceDual`]), kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RedGraph {
    pub faces: Vec<usize>,
}

impl RedGraph {
    pub fn new(mut faces: Vec<usize>) -> Self {
        faces.sort_unstable();
        faces.dedup();
        RedGraph { faces }
    }
}

/// An orientation of a red graph's dual edges: one `(tail, head)` per edge
/// of [`FaceDual::edge_list`], in the same order.
#[derive(Clone, Debug)]
pub struct Orientation {
    pub arcs: Vec<(usize, usize)>,
}

/// A pairing of the gray half-edges: each pair is rejoined in the
/// G-reduction.
pub type Pairing = Vec<(HalfId, HalfId)>;

impl FaceDual {
    /// Analyze a crossingless web. The diagram is compacted internally.
    pub fn build(w: &Diagram) -> Result<FaceDual, RedError> {
        let web = w.compact();
        web.validate()?;
        if web.crossing_count() > 0 {
            return Err(RedError::HasCrossings);
        }
        let faces = web.faces();
        let mut interior = Vec::new();
        let mut face_local = vec![None; faces.len()];
        for (i, f) in faces.iter().enumerate() {
            if f.kind == FaceKind::Interior {
                face_local[i] = Some(interior.len());
                interior.push(i);
            }
        }
        let mut half_face = vec![usize::MAX; web.halfs.len()];
        for (i, f) in faces.iter().enumerate() {
            for &h in &f.halves {
                half_face[h] = i;
            }
        }
        let verts_of: Vec<Vec<VertexId>> =
            interior.iter().map(|&g| faces[g].vertices(&web)).collect();
        // dual adjacencies: one entry per shared edge, counted from the
        // lower-id side
        let mut pair_count: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (lid, &g) in interior.iter().enumerate() {
            for &h in &faces[g].halves {
                let og = half_face[web.halfs[h].twin];
                if let Some(olid) = face_local[og] {
                    if olid > lid {
                        *pair_count.entry((lid, olid)).or_insert(0) += 1;
                    }
                }
            }
        }
        // gray-half candidates: halves at walk vertices whose edge does not
        // bound the face
        let mut legs: Vec<Vec<Leg>> = Vec::with_capacity(interior.len());
        for (lid, &g) in interior.iter().enumerate() {
            let mut out = Vec::new();
            for &v in &verts_of[lid] {
                for &h in &web.verts[v].half {
                    let t = web.halfs[h].twin;
                    if half_face[h] == g || half_face[t] == g {
                        continue;
                    }
                    out.push(Leg { half: h, flanks: [half_face[h], half_face[t]] });
                }
            }
            legs.push(out);
        }
        // triples of interior faces meeting at a common internal vertex
        let mut triples = Vec::new();
        for v in web.alive_vertices() {
            if web.verts[v].kind != VKind::Internal {
                continue;
            }
            let mut around: Vec<usize> = web.verts[v]
                .half
                .iter()
                .filter_map(|&h| face_local[half_face[h]])
                .collect();
            around.sort_unstable();
            around.dedup();
            if around.len() == 3 {
                triples.push([around[0], around[1], around[2]]);
            }
        }
        triples.sort_unstable();
        triples.dedup();
        Ok(FaceDual {
            web,
            faces,
            interior,
            face_local,
            half_face,
            verts_of,
            legs,
            pair_count,
            triples,
        })
    }

    /// Number of interior faces.
    pub fn interior_count(&self) -> usize {
        self.interior.len()
    }

    /// Is this face set a valid red graph: non-empty, in range, and clear of
    /// the triple condition?
    pub fn is_red_graph(&self, g: &RedGraph) -> bool {
        if g.faces.is_empty() || g.faces.iter().any(|&f| f >= self.interior.len()) {
            return false;
        }
        let set: BTreeSet<usize> = g.faces.iter().copied().collect();
        if set.len() != g.faces.len() {
            return false;
        }
        !self.triples.iter().any(|t| t.iter().all(|f| set.contains(f)))
    }

    /// All red graphs of the web: every non-empty interior-face subset
    /// passing the triple condition. Exhaustive, so capped at 20 interior
    /// faces.
    pub fn enumerate_red_graphs(&self) -> Result<Vec<RedGraph>, RedError> {
        let n = self.interior.len();
        if n > 20 {
            return Err(RedError::TooLarge(n));
        }
        let triple_masks: Vec<u32> =
            self.triples.iter().map(|t| t.iter().fold(0u32, |m, &f| m | 1 << f)).collect();
        let mut out = Vec::new();
        for mask in 1u32..(1u32 << n) {
            if triple_masks.iter().any(|&t| mask & t == t) {
                continue;
            }
            out.push(RedGraph {
                faces: (0..n).filter(|&f| mask & (1 << f) != 0).collect(),
            });
        }
        Ok(out)
    }

    /// The dual edges induced by the red graph, one entry per shared edge of
    /// the web (parallel adjacencies repeat), as sorted local face pairs.
    pub fn edge_list(&self, g: &RedGraph) -> Vec<(usize, usize)> {
        let set: BTreeSet<usize> = g.faces.iter().copied().collect();
        let mut out = Vec::new();
        for (&(a, b), &m) in &self.pair_count {
            if set.contains(&a) && set.contains(&b) {
                for _ in 0..m {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// External degree of one red face: gray halves at its boundary vertices
    /// whose edges bound neither the face nor any other face of the graph.
    pub fn external_degree(&self, g: &RedGraph, f: usize) -> usize {
        let set: BTreeSet<usize> = g.faces.iter().copied().collect();
        self.legs[f]
            .iter()
            .filter(|leg| {
                leg.flanks
                    .iter()
                    .all(|&gf| self.face_local[gf].map_or(true, |lid| !set.contains(&lid)))
            })
            .count()
    }

    /// The gray half-edges of the whole graph, tagged with their owning face.
    pub fn gray_halves(&self, g: &RedGraph) -> Vec<(usize, HalfId)> {
        let set: BTreeSet<usize> = g.faces.iter().copied().collect();
        let mut out = Vec::new();
        for &f in &g.faces {
            for leg in &self.legs[f] {
                if leg
                    .flanks
                    .iter()
                    .all(|&gf| self.face_local[gf].map_or(true, |lid| !set.contains(&lid)))
                {
                    out.push((f, leg.half));
                }
            }
        }
        debug_assert!(
            {
                let halves: BTreeSet<HalfId> = out.iter().map(|&(_, h)| h).collect();
                halves.len() == out.len()
            },
            "a gray half belongs to exactly one red face in a trivalent web"
        );
        out
    }

    /// Doubled level of the graph: `2·I(G) = 2(2|V| − |E|) − Σ ed(f)`.
    pub fn level2(&self, g: &RedGraph) -> i64 {
        let v = g.faces.len() as i64;
        let e = self.edge_list(g).len() as i64;
        let ed: i64 = g.faces.iter().map(|&f| self.external_degree(g, f) as i64).sum();
        2 * (2 * v - e) - ed
    }

    /// Doubled level of one face under an orientation:
    /// `2·i_o(f) = 4 − ed(f) − 2·indegree(f)`.
    pub fn vertex_level2(&self, g: &RedGraph, o: &Orientation, f: usize) -> i64 {
        let indeg = o.arcs.iter().filter(|&&(_, head)| head == f).count() as i64;
        4 - self.external_degree(g, f) as i64 - 2 * indeg
    }

    /// Doubled per-face levels for every face of the graph.
    pub fn vertex_levels2(&self, g: &RedGraph, o: &Orientation) -> BTreeMap<usize, i64> {
        g.faces.iter().map(|&f| (f, self.vertex_level2(g, o, f))).collect()
    }

    /// Is the graph admissible: can its dual edges be oriented so every face
    /// keeps a non-negative level? Returns a fitting orientation as witness.
    /// Decided as a degree-constrained orientation problem by max-flow.
    pub fn is_admissible(&self, g: &RedGraph) -> Option<Orientation> {
        let edges = self.edge_list(g);
        let mut caps = BTreeMap::new();
        for &f in &g.faces {
            let c2 = 4i64 - self.external_degree(g, f) as i64;
            if c2 < 0 {
                return None;
            }
            caps.insert(f, c2 / 2);
        }
        // flow network: source → each edge (1) → its two endpoint faces (1)
        // → sink (cap)
        let m = edges.len();
        let k = g.faces.len();
        let fidx: BTreeMap<usize, usize> = g.faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let n = m + k + 2;
        let (s, t) = (n - 2, n - 1);
        let mut cap = vec![vec![0i64; n]; n];
        for (i, &(a, b)) in edges.iter().enumerate() {
            cap[s][i] = 1;
            cap[i][m + fidx[&a]] += 1;
            cap[i][m + fidx[&b]] += 1;
        }
        for (&f, &c) in &caps {
            cap[m + fidx[&f]][t] = c;
        }
        let flow = max_flow(&mut cap, s, t);
        if flow != m as i64 {
            return None;
        }
        // residual capacity 0 on edge→face means the unit went there: the
        // dual edge points to that face (each parallel edge has its own node)
        let mut arcs = Vec::with_capacity(m);
        for (i, &(a, b)) in edges.iter().enumerate() {
            if cap[i][m + fidx[&a]] == 0 {
                arcs.push((b, a));
            } else {
                debug_assert_eq!(cap[i][m + fidx[&b]], 0, "edge {i} sent its unit nowhere");
                arcs.push((a, b));
            }
        }
        let o = Orientation { arcs };
        debug_assert!(g.faces.iter().all(|&f| self.vertex_level2(g, &o, f) >= 0));
        Some(o)
    }

    /// Is the graph exact: admissible with level zero? For an exact graph
    /// every fitting orientation has all per-face levels zero.
    pub fn is_exact(&self, g: &RedGraph) -> bool {
        self.level2(g) == 0 && self.is_admissible(g).is_some()
    }

    /// Does the graph contain a cycle (parallel dual edges count)?
    pub fn has_cycle(&self, g: &RedGraph) -> bool {
        let mut parent: BTreeMap<usize, usize> = g.faces.iter().map(|&f| (f, f)).collect();
        fn find(parent: &mut BTreeMap<usize, usize>, x: usize) -> usize {
            let p = parent[&x];
            if p == x {
                return x;
            }
            let r = find(parent, p);
            parent.insert(x, r);
            r
        }
        for (a, b) in self.edge_list(g) {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return true;
            }
            parent.insert(ra, rb);
        }
        false
    }

    /// Length of the shortest cycle in the graph, if any. Parallel dual
    /// edges form a cycle of length 2.
    pub fn girth(&self, g: &RedGraph) -> Option<usize> {
        let edges = self.edge_list(g);
        let mut simple: BTreeSet<(usize, usize)> = BTreeSet::new();
        for &e in &edges {
            if !simple.insert(e) {
                return Some(2);
            }
        }
        let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(a, b) in &simple {
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
        let mut best: Option<usize> = None;
        for &(a, b) in &simple {
            // shortest a→b path avoiding the edge itself, plus the edge
            let mut dist: BTreeMap<usize, usize> = BTreeMap::new();
            dist.insert(a, 0);
            let mut queue = std::collections::VecDeque::from([a]);
            while let Some(x) = queue.pop_front() {
                for &y in adj.get(&x).into_iter().flatten() {
                    if (x == a && y == b) || (x == b && y == a) {
                        continue;
                    }
                    if !dist.contains_key(&y) {
                        dist.insert(y, dist[&x] + 1);
                        queue.push_back(y);
                    }
                }
            }
            if let Some(&d) = dist.get(&b) {
                let c = d + 1;
                if best.map_or(true, |cur| c < cur) {
                    best = Some(c);
                }
            }
        }
        best
    }

    /// All exact red graphs, by exhaustive subset search (capped at 20
    /// interior faces).
    pub fn exact_red_graphs(&self) -> Result<Vec<RedGraph>, RedError> {
        let n = self.interior.len();
        if n > 20 {
            return Err(RedError::TooLarge(n));
        }
        let triple_masks: Vec<u32> =
            self.triples.iter().map(|t| t.iter().fold(0u32, |m, &f| m | 1 << f)).collect();
        // flank masks per face: for each candidate gray half, the interior
        // faces flanking its edge
        let leg_masks: Vec<Vec<u32>> = (0..n)
            .map(|f| {
                self.legs[f]
                    .iter()
                    .map(|leg| {
                        leg.flanks
                            .iter()
                            .filter_map(|&gf| self.face_local[gf])
                            .fold(0u32, |m, lid| m | 1 << lid)
                    })
                    .collect()
            })
            .collect();
        let mut adj = vec![vec![0i64; n]; n];
        for (&(a, b), &m) in &self.pair_count {
            adj[a][b] = m as i64;
        }
        let mut out = Vec::new();
        for mask in 1u32..(1u32 << n) {
            if triple_masks.iter().any(|&t| mask & t == t) {
                continue;
            }
            let members: Vec<usize> = (0..n).filter(|&f| mask & (1 << f) != 0).collect();
            let mut e = 0i64;
            for (i, &a) in members.iter().enumerate() {
                for &b in &members[i + 1..] {
                    e += adj[a][b];
                }
            }
            let ed: i64 = members
                .iter()
                .map(|&f| leg_masks[f].iter().filter(|&&fm| fm & mask == 0).count() as i64)
                .sum();
            if 2 * (2 * members.len() as i64 - e) - ed != 0 {
                continue;
            }
            let g = RedGraph { faces: members };
            if self.is_admissible(&g).is_some() {
                out.push(g);
            }
        }
        Ok(out)
    }

    /// Exact red graphs that are single chordless cycles, found by cycle
    /// search instead of subset search; works on webs of any size. Every
    /// such graph the exhaustive search finds, this search finds too.
    pub fn exact_cycle_graphs(&self) -> Vec<RedGraph> {
        let n = self.interior.len();
        let mut adj = vec![vec![0usize; n]; n];
        for (&(a, b), &m) in &self.pair_count {
            adj[a][b] = m;
            adj[b][a] = m;
        }
        let mut out = Vec::new();
        let mut path = Vec::new();
        for start in 0..n {
            path.push(start);
            self.cycle_dfs(start, &adj, &mut path, &mut out);
            path.pop();
        }
        out
    }

    fn cycle_dfs(
        &self,
        start: usize,
        adj: &[Vec<usize>],
        path: &mut Vec<usize>,
        out: &mut Vec<RedGraph>,
    ) {
        let last = *path.last().unwrap();
        for next in start + 1..adj.len() {
            if adj[last][next] == 0 || path.contains(&next) {
                continue;
            }
            // chordless: the new face may touch only its predecessor (and
            // the start face when closing)
            if path[..path.len() - 1].iter().skip(1).any(|&p| adj[p][next] != 0) {
                continue;
            }
            let closes = adj[next][start] != 0;
            if closes && path.len() >= 2 {
                // canonical direction: second face below last face
                if path[1] < next && adj[last][next] == 1 && adj[next][start] == 1 {
                    let mut faces = path.clone();
                    faces.push(next);
                    let g = RedGraph::new(faces);
                    if self.is_red_graph(&g) && self.is_exact(&g) {
                        out.push(g);
                    }
                }
                continue;
            }
            if adj[last][next] != 1 {
                continue;
            }
            path.push(next);
            self.cycle_dfs(start, adj, path, out);
            path.pop();
        }
    }

    /// All valid pairings of the graph's gray half-edges: partitions into
    /// pairs flanking a common face of the web with opposite strand
    /// directions, kept only when the rejoined diagram is a planar web of
    /// the same signature.
    pub fn enumerate_pairings(&self, g: &RedGraph) -> Vec<Pairing> {
        let gray: Vec<HalfId> = self.gray_halves(g).into_iter().map(|(_, h)| h).collect();
        if gray.len() % 2 != 0 {
            return Vec::new();
        }
        let color_of = |h: HalfId| self.web.verts[self.web.halfs[h].vertex].color;
        let faces_of = |h: HalfId| -> [usize; 2] {
            [self.half_face[h], self.half_face[self.web.halfs[h].twin]]
        };
        let compatible = |a: HalfId, b: HalfId| -> bool {
            let (fa, fb) = (faces_of(a), faces_of(b));
            color_of(a) != color_of(b) && fa.iter().any(|x| fb.contains(x))
        };
        let mut candidates = Vec::new();
        let mut current: Pairing = Vec::new();
        let mut used = vec![false; gray.len()];
        fn matchings(
            gray: &[HalfId],
            used: &mut Vec<bool>,
            compatible: &dyn Fn(HalfId, HalfId) -> bool,
            current: &mut Pairing,
            out: &mut Vec<Pairing>,
        ) {
            let Some(i) = used.iter().position(|&u| !u) else {
                out.push(current.clone());
                return;
            };
            used[i] = true;
            for j in i + 1..gray.len() {
                if used[j] || !compatible(gray[i], gray[j]) {
                    continue;
                }
                used[j] = true;
                current.push((gray[i], gray[j]));
                matchings(gray, used, compatible, current, out);
                current.pop();
                used[j] = false;
            }
            used[i] = false;
        }
        matchings(&gray, &mut used, &compatible, &mut current, &mut candidates);
        candidates
            .into_iter()
            .filter(|p| self.reduction_web(g, p).is_ok())
            .collect()
    }

    /// The vertices removed by a G-reduction: everything on the boundary
    /// walk of a red face.
    fn removed_vertices(&self, g: &RedGraph) -> Vec<VertexId> {
        let mut dead: BTreeSet<VertexId> = BTreeSet::new();
        for &f in &g.faces {
            dead.extend(self.verts_of[f].iter().copied());
        }
        dead.into_iter().collect()
    }

    /// Build the G-reduction web: cut out the red faces and rejoin the gray
    /// half-edges along the pairing. Returns the (possibly elliptic) web and
    /// the number of closed loops swallowed. Errors on pairings that do not
    /// partition the gray halves or whose rejoining is not a planar web of
    /// the original signature.
    pub fn reduction_web(&self, g: &RedGraph, pairing: &Pairing) -> Result<(Diagram, usize), RedError> {
        let gray: BTreeSet<HalfId> = self.gray_halves(g).into_iter().map(|(_, h)| h).collect();
        let mut seen = BTreeSet::new();
        for &(a, b) in pairing {
            for h in [a, b] {
                if !gray.contains(&h) {
                    return Err(RedError::Pairing(format!("half {h} is not gray")));
                }
                if !seen.insert(h) {
                    return Err(RedError::Pairing(format!("half {h} paired twice")));
                }
            }
        }
        if seen.len() != gray.len() {
            return Err(RedError::Pairing(format!(
                "pairing covers {} of {} gray halves",
                seen.len(),
                gray.len()
            )));
        }
        let dead = self.removed_vertices(g);
        let (wg, loops) = self.web.excise(&dead, pairing).map_err(|e| match e {
            WebError::Malformed(m) => RedError::Pairing(m),
            other => RedError::Web(other),
        })?;
        wg.validate().map_err(|e| RedError::Pairing(format!("rejoined web invalid: {e}")))?;
        // planarity: the rotation system must still triangulate a disc
        let v = wg.alive_vertices().count() as i64;
        let e = wg.edge_count() as i64 + wg.boundary.len() as i64;
        let f = wg.faces().len() as i64;
        if v - e + f != 2 {
            return Err(RedError::Pairing("rejoined diagram is not planar".into()));
        }
        if wg.signature() != self.web.signature() {
            return Err(RedError::Pairing("reduction changed the signature".into()));
        }
        Ok((wg, loops))
    }

    /// The G-reduction as an invariant: build the reduction web, reduce it
    /// in the skein calculus, and account swallowed loops with the loop
    /// factor.
    pub fn reduce_by_red_graph(&self, g: &RedGraph, pairing: &Pairing) -> Result<WebCombo, RedError> {
        let (wg, loops) = self.reduction_web(g, pairing)?;
        let mut combo = reduce_to_basis(&wg)?;
        for _ in 0..loops {
            combo.scale_poly(&loop_factor());
        }
        Ok(combo)
    }
}

/// Does the web admit any exact red graph? Exhaustive over interior-face
/// subsets; a `false` certifies the web invariant dual canonical.
pub fn has_exact_red_graph(w: &Diagram) -> Result<bool, RedError> {
    let ctx = FaceDual::build(w)?;
    if ctx.interior_count() == 0 {
        return Ok(false);
    }
    Ok(!ctx.exact_red_graphs()?.is_empty())
}

/// Edmonds–Karp max-flow on a dense capacity matrix; `cap` is left holding
/// residual capacities, which the caller reads to extract the witness.
fn max_flow(cap: &mut [Vec<i64>], s: usize, t: usize) -> i64 {
    let n = cap.len();
    let mut total = 0;
    loop {
        let mut prev = vec![usize::MAX; n];
        prev[s] = s;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for y in 0..n {
                if prev[y] == usize::MAX && cap[x][y] > 0 {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[t] == usize::MAX {
            return total;
        }
        let mut push = i64::MAX;
        let mut y = t;
        while y != s {
            let x = prev[y];
            push = push.min(cap[x][y]);
            y = x;
        }
        let mut y = t;
        while y != s {
            let x = prev[y];
            cap[x][y] -= push;
            cap[y][x] += push;
            y = x;
        }
        total += push;
    }
}
