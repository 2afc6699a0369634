//! Stable graphs: the dual graphs indexing boundary strata of `M̄_{g,n}`.
//!
//! A [`StableGraph`] has genus-labeled vertices, an edge multiset (loops and
//! parallel edges allowed) and `n` legs labeled `1..=n`. Isomorphism classes
//! are represented by a canonical form computed with colour refinement and
//! individualization; the same search yields the vertex automorphism group
//! order, from which the half-edge automorphism count follows.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::{Error, Result};

/// Dual graph of a stratum. Vertex indices are `u8`; desk-scale graphs never
/// come close to that bound and the compact form keeps large enumerations
/// cheap.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StableGraph {
    genera: Vec<u8>,
    /// Normalized `(a, b)` with `a <= b`, sorted.
    edges: Vec<(u8, u8)>,
    /// `legs[i]` is the vertex carrying marking `i + 1`.
    legs: Vec<u8>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StratumStats {
    pub codimension: u32,
    pub dimension: u32,
    pub genus_zero_count: u32,
}

impl StableGraph {
    /// Builds a graph without checking stability; see [`StableGraph::validate`].
    pub fn new(genera: Vec<u32>, edges: Vec<(usize, usize)>, legs: Vec<usize>) -> Result<Self> {
        let narrow = |x: usize, what: &str| {
            u8::try_from(x).map_err(|_| Error::InvalidInput(format!("{what} {x} exceeds 255")))
        };
        let genera = genera
            .into_iter()
            .map(|g| narrow(g as usize, "vertex genus"))
            .collect::<Result<Vec<_>>>()?;
        let edges = edges
            .into_iter()
            .map(|(a, b)| Ok((narrow(a, "vertex index")?, narrow(b, "vertex index")?)))
            .collect::<Result<Vec<_>>>()?;
        let legs = legs
            .into_iter()
            .map(|v| narrow(v, "vertex index"))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_raw(genera, edges, legs))
    }

    fn from_raw(genera: Vec<u8>, mut edges: Vec<(u8, u8)>, legs: Vec<u8>) -> Self {
        for e in edges.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        StableGraph {
            genera,
            edges,
            legs,
        }
    }

    /// The open stratum: one vertex of genus `g` carrying every leg.
    pub fn smooth(g: u32, n: usize) -> Result<Self> {
        check_stable(g as i64, n as i64)?;
        Self::new(vec![g], Vec::new(), vec![0; n])
    }

    pub fn num_vertices(&self) -> usize {
        self.genera.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_legs(&self) -> usize {
        self.legs.len()
    }

    pub fn genus_of(&self, v: usize) -> u32 {
        self.genera[v] as u32
    }

    pub fn genera(&self) -> impl Iterator<Item = u32> + '_ {
        self.genera.iter().map(|&g| g as u32)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|&(a, b)| (a as usize, b as usize))
    }

    /// Vertex carrying marking `label` (1-based).
    pub fn leg_vertex(&self, label: usize) -> usize {
        self.legs[label - 1] as usize
    }

    /// Leg-ends plus edge-ends at `v`; a loop contributes two.
    pub fn valence(&self, v: usize) -> u32 {
        let v = v as u8;
        let legs = self.legs.iter().filter(|&&w| w == v).count();
        let ends: usize = self
            .edges
            .iter()
            .map(|&(a, b)| (a == v) as usize + (b == v) as usize)
            .sum();
        (legs + ends) as u32
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|(a, b)| a == b).count()
    }

    /// First Betti number `#E - #V + 1` (assumes connectivity).
    pub fn betti(&self) -> i64 {
        self.edges.len() as i64 - self.genera.len() as i64 + 1
    }

    /// `Σ g_v + b_1`.
    pub fn total_genus(&self) -> i64 {
        self.genera.iter().map(|&g| g as i64).sum::<i64>() + self.betti()
    }

    pub fn genus_zero_count(&self) -> u32 {
        self.genera.iter().filter(|&&g| g == 0).count() as u32
    }

    /// `(g_v, valence(v))` for every vertex.
    pub fn vertex_profile(&self) -> Vec<(u32, u32)> {
        (0..self.num_vertices())
            .map(|v| (self.genus_of(v), self.valence(v)))
            .collect()
    }

    fn is_connected(&self) -> bool {
        let nv = self.num_vertices();
        if nv == 0 {
            return false;
        }
        let mut parent: Vec<usize> = (0..nv).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a as usize), find(&mut parent, b as usize));
            parent[ra] = rb;
        }
        let root = find(&mut parent, 0);
        (1..nv).all(|v| find(&mut parent, v) == root)
    }

    /// Checks every stable-graph invariant against the ambient `(g, n)`,
    /// collecting all violations.
    pub fn validate(&self, g: u32, n: usize) -> Result<()> {
        let mut errors = Vec::new();
        let nv = self.num_vertices();
        if nv == 0 {
            errors.push("graph has no vertices".to_string());
            return Err(Error::InvalidGraph(errors));
        }
        let mut indices_ok = true;
        for &(a, b) in &self.edges {
            if a as usize >= nv || b as usize >= nv {
                errors.push(format!("edge {a}-{b} references a missing vertex"));
                indices_ok = false;
            }
        }
        for (i, &v) in self.legs.iter().enumerate() {
            if v as usize >= nv {
                errors.push(format!("leg {} references missing vertex {v}", i + 1));
                indices_ok = false;
            }
        }
        if self.legs.len() < n {
            for label in self.legs.len() + 1..=n {
                errors.push(format!("missing leg label {label}"));
            }
        } else if self.legs.len() > n {
            for label in n + 1..=self.legs.len() {
                errors.push(format!("leg label {label} out of range 1..={n}"));
            }
        }
        if !indices_ok {
            return Err(Error::InvalidGraph(errors));
        }
        if !self.is_connected() {
            errors.push("disconnected graph".to_string());
        }
        for v in 0..nv {
            let stab = 2 * self.genus_of(v) as i64 - 2 + self.valence(v) as i64;
            if stab <= 0 {
                errors.push(format!(
                    "unstable vertex {v} (genus {}, valence {})",
                    self.genus_of(v),
                    self.valence(v)
                ));
            }
        }
        if self.total_genus() != g as i64 {
            errors.push(format!(
                "genus mismatch: graph has genus {}, ambient genus is {g}",
                self.total_genus()
            ));
        }
        if errors.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidGraph(errors))
        }
    }

    pub fn stats(&self, g: u32, n: usize) -> StratumStats {
        let codim = self.num_edges() as u32;
        StratumStats {
            codimension: codim,
            dimension: (3 * g + n as u32 - 3) - codim,
            genus_zero_count: self.genus_zero_count(),
        }
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> StableGraph {
        let mut genera = vec![0u8; self.genera.len()];
        for (v, &g) in self.genera.iter().enumerate() {
            genera[perm[v]] = g;
        }
        let edges = self
            .edges
            .iter()
            .map(|&(a, b)| (perm[a as usize] as u8, perm[b as usize] as u8))
            .collect();
        let legs = self.legs.iter().map(|&v| perm[v as usize] as u8).collect();
        StableGraph::from_raw(genera, edges, legs)
    }

    /// Canonical representative of the isomorphism class.
    pub fn canonical(&self) -> StableGraph {
        Canonizer::new(self).run().0
    }

    /// Canonical key string, `g;n;V=(..);E=(i-j,..);L=(l:v,..)`.
    pub fn canonical_key(&self) -> String {
        self.canonical().key_string()
    }

    /// Serializes this exact labeling (call on a canonical graph to get the
    /// canonical key).
    pub fn key_string(&self) -> String {
        let join = |items: Vec<String>| items.join(",");
        format!(
            "{};{};V=({});E=({});L=({})",
            self.total_genus(),
            self.num_legs(),
            join(self.genera.iter().map(|g| g.to_string()).collect()),
            join(self.edges.iter().map(|(a, b)| format!("{a}-{b}")).collect()),
            join(
                self.legs
                    .iter()
                    .enumerate()
                    .map(|(i, v)| format!("{}:{v}", i + 1))
                    .collect()
            ),
        )
    }

    /// Order of the automorphism group acting on half-edges, legs fixed
    /// pointwise and vertex genera preserved. A loop contributes its flip.
    pub fn automorphism_count(&self) -> u64 {
        let vertex_auts = Canonizer::new(self).run().1;
        let mut count = vertex_auts;
        let mut i = 0;
        while i < self.edges.len() {
            let mut j = i;
            while j < self.edges.len() && self.edges[j] == self.edges[i] {
                j += 1;
            }
            let mult = (j - i) as u64;
            count *= (1..=mult).product::<u64>();
            if self.edges[i].0 == self.edges[i].1 {
                count *= 1u64 << mult;
            }
            i = j;
        }
        count
    }

    /// Contracts edge `index`: a loop raises its vertex genus by one, any
    /// other edge merges its endpoints. Result is not canonicalized.
    pub fn contract_edge(&self, index: usize) -> StableGraph {
        let (a, b) = self.edges[index];
        let mut edges = self.edges.clone();
        edges.remove(index);
        if a == b {
            let mut genera = self.genera.clone();
            genera[a as usize] += 1;
            return StableGraph::from_raw(genera, edges, self.legs.clone());
        }
        // merge b into a, then close the gap left by b
        let shift = |v: u8| {
            let v = if v == b { a } else { v };
            if v > b {
                v - 1
            } else {
                v
            }
        };
        let mut genera = self.genera.clone();
        genera[a as usize] += genera[b as usize];
        genera.remove(b as usize);
        let edges = edges
            .into_iter()
            .map(|(x, y)| (shift(x), shift(y)))
            .collect();
        let legs = self.legs.iter().map(|&v| shift(v)).collect();
        StableGraph::from_raw(genera, edges, legs)
    }

    /// Canonical forms of all one-edge contractions (the strata this one
    /// lies in the closure of, one codimension up).
    pub fn one_step_contractions(&self) -> Vec<StableGraph> {
        let mut out: Vec<StableGraph> = (0..self.num_edges())
            .map(|e| self.contract_edge(e).canonical())
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Canonical forms of every stratum obtained by one degeneration:
    /// splitting a vertex in two joined by a new edge, or trading one genus
    /// of a vertex for a loop.
    pub fn one_step_degenerations(&self) -> Vec<StableGraph> {
        let mut seen = HashSet::new();
        self.for_each_degeneration(|h| {
            seen.insert(h.canonical());
        });
        let mut out: Vec<_> = seen.into_iter().collect();
        out.sort();
        out
    }

    fn for_each_degeneration(&self, mut emit: impl FnMut(StableGraph)) {
        let nv = self.num_vertices();
        for v in 0..nv {
            let gv = self.genera[v];
            if gv >= 1 {
                let mut genera = self.genera.clone();
                genera[v] -= 1;
                let mut edges = self.edges.clone();
                edges.push((v as u8, v as u8));
                emit(StableGraph::from_raw(genera, edges, self.legs.clone()));
            }

            // half-edges at v: legs, then edge ends (a loop has two)
            let mut items: Vec<HalfEdge> = Vec::new();
            for (i, &w) in self.legs.iter().enumerate() {
                if w as usize == v {
                    items.push(HalfEdge::Leg(i));
                }
            }
            for (e, &(a, b)) in self.edges.iter().enumerate() {
                if a as usize == v {
                    items.push(HalfEdge::End(e, 0));
                }
                if b as usize == v {
                    items.push(HalfEdge::End(e, 1));
                }
            }
            let k = items.len();
            let new_v = nv as u8;
            // item 0 (if any) always stays on the old vertex: each unordered
            // split is produced once per genus assignment
            let mask_limit: u32 = if k == 0 { 1 } else { 1 << (k - 1) };
            for half in 0..mask_limit {
                let mask = half << 1;
                let moved = mask.count_ones() as i64;
                let stay = k as i64 - moved;
                for h in 0..=gv {
                    let (g_stay, g_move) = (h as i64, (gv - h) as i64);
                    if 2 * g_stay - 2 + stay < 0 || 2 * g_move - 2 + moved < 0 {
                        continue;
                    }
                    let mut genera = self.genera.clone();
                    genera[v] = h;
                    genera.push(gv - h);
                    let mut legs = self.legs.clone();
                    let mut edges = self.edges.clone();
                    for (bit, item) in items.iter().enumerate() {
                        if mask & (1 << bit) == 0 {
                            continue;
                        }
                        match *item {
                            HalfEdge::Leg(i) => legs[i] = new_v,
                            HalfEdge::End(e, 0) => edges[e].0 = new_v,
                            HalfEdge::End(e, _) => edges[e].1 = new_v,
                        }
                    }
                    edges.push((v as u8, new_v));
                    emit(StableGraph::from_raw(genera, edges, legs));
                }
            }
        }
    }
}

#[derive(Clone, Copy)]
enum HalfEdge {
    Leg(usize),
    End(usize, u8),
}

pub(crate) fn check_stable(g: i64, n: i64) -> Result<()> {
    if g < 0 || n < 0 || 2 * g - 2 + n <= 0 {
        Err(Error::Unstable { g, n })
    } else {
        Ok(())
    }
}

/// Every isomorphism class of stable graph of type `(g, n)` with at most
/// `max_codim` edges (default: all, `3g - 3 + n`), open stratum included.
///
/// Built as the closure of the open stratum under
/// [`StableGraph::one_step_degenerations`], one codimension at a time. The
/// result is sorted by codimension, then by canonical form.
pub fn enumerate_strata(g: u32, n: usize, max_codim: Option<u32>) -> Result<Vec<StableGraph>> {
    check_stable(g as i64, n as i64)?;
    let top = 3 * g + n as u32 - 3;
    let max_codim = max_codim.unwrap_or(top).min(top);
    let mut all = Vec::new();
    let mut level = vec![StableGraph::smooth(g, n)?];
    for _ in 0..max_codim {
        let mut next: HashSet<StableGraph> = HashSet::new();
        let batches: Vec<Vec<StableGraph>> = level
            .par_iter()
            .map(|s| {
                let mut out = Vec::new();
                s.for_each_degeneration(|h| out.push(h.canonical()));
                out
            })
            .collect();
        for batch in batches {
            next.extend(batch);
        }
        let mut next: Vec<_> = next.into_iter().collect();
        next.sort_unstable();
        all.append(&mut level);
        level = next;
        if level.is_empty() {
            break;
        }
    }
    all.append(&mut level);
    Ok(all)
}

impl fmt::Display for StableGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key_string())
    }
}

/// Parses the key format. Labels may appear in any order; missing and
/// duplicate labels are reported, and the declared genus is checked.
impl FromStr for StableGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidInput(format!("bad graph key {s:?}: {msg}"));
        let parts: Vec<&str> = s.trim().split(';').collect();
        if parts.len() != 5 {
            return Err(bad("expected 5 ';'-separated fields"));
        }
        let g: u32 = parts[0].parse().map_err(|_| bad("genus"))?;
        let n: usize = parts[1].parse().map_err(|_| bad("marking count"))?;
        let list = |field: &str, prefix: &str| -> Result<Vec<String>> {
            let inner = field
                .strip_prefix(prefix)
                .and_then(|r| r.strip_prefix('('))
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| bad(prefix))?;
            Ok(if inner.is_empty() {
                Vec::new()
            } else {
                inner.split(',').map(|x| x.trim().to_string()).collect()
            })
        };
        let genera = list(parts[2], "V=")?
            .iter()
            .map(|x| x.parse::<u32>().map_err(|_| bad("vertex genus")))
            .collect::<Result<Vec<_>>>()?;
        let edges = list(parts[3], "E=")?
            .iter()
            .map(|x| {
                let (a, b) = x.split_once('-').ok_or_else(|| bad("edge"))?;
                Ok((
                    a.parse::<usize>().map_err(|_| bad("edge"))?,
                    b.parse::<usize>().map_err(|_| bad("edge"))?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut legs: Vec<Option<usize>> = vec![None; n];
        let mut errors = Vec::new();
        for item in list(parts[4], "L=")? {
            let (l, v) = item.split_once(':').ok_or_else(|| bad("leg"))?;
            let l: usize = l.parse().map_err(|_| bad("leg label"))?;
            let v: usize = v.parse().map_err(|_| bad("leg vertex"))?;
            if l == 0 || l > n {
                errors.push(format!("leg label {l} out of range 1..={n}"));
            } else if legs[l - 1].is_some() {
                errors.push(format!("duplicate leg label {l}"));
            } else {
                legs[l - 1] = Some(v);
            }
        }
        for (i, l) in legs.iter().enumerate() {
            if l.is_none() {
                errors.push(format!("missing leg label {}", i + 1));
            }
        }
        if !errors.is_empty() {
            return Err(Error::InvalidGraph(errors));
        }
        let graph = StableGraph::new(genera, edges, legs.into_iter().flatten().collect())?;
        graph.validate(g, n)?;
        Ok(graph)
    }
}

/// Individualization-refinement search over vertex orderings. Colours are
/// numbered from sorted invariant signatures only, so the search tree, and
/// hence the minimal leaf, is isomorphism invariant. Every leaf reaching the
/// minimum differs from the first by a vertex automorphism.
struct Canonizer<'a> {
    graph: &'a StableGraph,
    /// `mult[v * nv + w]`: number of edges between `v` and `w` (`v != w`).
    mult: Vec<u8>,
    best: Option<Vec<u8>>,
    best_order: Vec<usize>,
    ties: u64,
}

impl<'a> Canonizer<'a> {
    fn new(graph: &'a StableGraph) -> Self {
        let nv = graph.num_vertices();
        let mut mult = vec![0u8; nv * nv];
        for &(a, b) in &graph.edges {
            if a != b {
                mult[a as usize * nv + b as usize] += 1;
                mult[b as usize * nv + a as usize] += 1;
            }
        }
        Canonizer {
            graph,
            mult,
            best: None,
            best_order: Vec::new(),
            ties: 0,
        }
    }

    fn run(mut self) -> (StableGraph, u64) {
        let g = self.graph;
        let nv = g.num_vertices();
        let mut loops = vec![0u32; nv];
        let mut degree = vec![0u32; nv];
        for &(a, b) in &g.edges {
            if a == b {
                loops[a as usize] += 1;
            } else {
                degree[a as usize] += 1;
                degree[b as usize] += 1;
            }
        }
        let mut leg_sets: Vec<Vec<u32>> = vec![Vec::new(); nv];
        for (i, &v) in g.legs.iter().enumerate() {
            leg_sets[v as usize].push(i as u32 + 1);
        }
        let signatures: Vec<Vec<u32>> = (0..nv)
            .map(|v| {
                let mut s = vec![
                    g.genera[v] as u32,
                    loops[v],
                    degree[v],
                    leg_sets[v].len() as u32,
                ];
                s.extend_from_slice(&leg_sets[v]);
                s
            })
            .collect();
        let colours = renumber(&signatures);
        self.search(colours);

        let order = &self.best_order;
        let mut perm = vec![0usize; nv];
        for (pos, &v) in order.iter().enumerate() {
            perm[v] = pos;
        }
        (g.relabel(&perm), self.ties)
    }

    fn refine(&self, mut colours: Vec<u32>) -> Vec<u32> {
        let nv = colours.len();
        let mut count = distinct(&colours);
        loop {
            if count == nv {
                return colours;
            }
            let signatures: Vec<Vec<u32>> = (0..nv)
                .map(|v| {
                    let mut nbrs: Vec<u32> = (0..nv)
                        .filter(|&w| w != v && self.mult[v * nv + w] > 0)
                        .map(|w| colours[w] * 256 + self.mult[v * nv + w] as u32)
                        .collect();
                    nbrs.sort_unstable();
                    let mut s = Vec::with_capacity(nbrs.len() + 1);
                    s.push(colours[v]);
                    s.extend(nbrs);
                    s
                })
                .collect();
            let refined = renumber(&signatures);
            let new_count = distinct(&refined);
            colours = refined;
            if new_count == count {
                return colours;
            }
            count = new_count;
        }
    }

    fn search(&mut self, colours: Vec<u32>) {
        let colours = self.refine(colours);
        let nv = colours.len();
        // smallest colour shared by more than one vertex
        let mut sizes = vec![0u32; nv];
        for &c in &colours {
            sizes[c as usize] += 1;
        }
        let target = sizes.iter().position(|&s| s > 1);
        match target {
            None => self.leaf(&colours),
            Some(cell) => {
                let members: Vec<usize> = (0..nv).filter(|&v| colours[v] == cell as u32).collect();
                for chosen in members {
                    let signatures: Vec<Vec<u32>> = (0..nv)
                        .map(|v| {
                            vec![
                                colours[v],
                                (colours[v] == cell as u32 && v != chosen) as u32,
                            ]
                        })
                        .collect();
                    self.search(renumber(&signatures));
                }
            }
        }
    }

    fn leaf(&mut self, colours: &[u32]) {
        let g = self.graph;
        let nv = colours.len();
        let mut order = vec![0usize; nv];
        for (v, &c) in colours.iter().enumerate() {
            order[c as usize] = v;
        }
        let mut code: Vec<u8> = Vec::with_capacity(nv + 2 * g.edges.len() + g.legs.len());
        code.extend(order.iter().map(|&v| g.genera[v]));
        let mut edges: Vec<(u8, u8)> = g
            .edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (colours[a as usize] as u8, colours[b as usize] as u8);
                (x.min(y), x.max(y))
            })
            .collect();
        edges.sort_unstable();
        for (a, b) in edges {
            code.push(a);
            code.push(b);
        }
        code.extend(g.legs.iter().map(|&v| colours[v as usize] as u8));
        match &self.best {
            Some(best) if code > *best => {}
            Some(best) if code == *best => self.ties += 1,
            _ => {
                self.best = Some(code);
                self.best_order = order;
                self.ties = 1;
            }
        }
    }
}

fn distinct(colours: &[u32]) -> usize {
    let mut seen = vec![false; colours.len()];
    for &c in colours {
        seen[c as usize] = true;
    }
    seen.iter().filter(|&&s| s).count()
}

/// Replaces each signature by its rank among the distinct signatures.
fn renumber(signatures: &[Vec<u32>]) -> Vec<u32> {
    let mut sorted: Vec<&Vec<u32>> = signatures.iter().collect();
    sorted.sort_unstable();
    sorted.dedup();
    signatures
        .iter()
        .map(|s| sorted.binary_search(&s).unwrap() as u32)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(genera: &[u32], edges: &[(usize, usize)], legs: &[usize]) -> StableGraph {
        StableGraph::new(genera.to_vec(), edges.to_vec(), legs.to_vec()).unwrap()
    }

    #[test]
    fn validate_open_and_loop_strata() {
        assert!(graph(&[1], &[], &[0]).validate(1, 1).is_ok());
        assert!(graph(&[0], &[(0, 0)], &[0]).validate(1, 1).is_ok());
    }

    #[test]
    fn validate_reports_unstable_vertex() {
        let err = graph(&[0], &[], &[0]).validate(0, 1).unwrap_err();
        let Error::InvalidGraph(msgs) = err else {
            panic!()
        };
        assert!(msgs.iter().any(|m| m.starts_with("unstable vertex")));
    }

    #[test]
    fn validate_reports_every_violation() {
        // two components, wrong genus, one leg short
        let h = graph(&[0, 1], &[], &[0, 0, 0]);
        let Error::InvalidGraph(msgs) = h.validate(2, 4).unwrap_err() else {
            panic!()
        };
        assert!(msgs.iter().any(|m| m == "disconnected graph"));
        assert!(msgs.iter().any(|m| m.starts_with("genus mismatch")));
        assert!(msgs.iter().any(|m| m == "missing leg label 4"));
        assert!(msgs.iter().any(|m| m.starts_with("unstable vertex 1")));
    }

    #[test]
    fn key_parse_reports_duplicate_labels() {
        let err = "0;3;V=(0);E=();L=(1:0,1:0,2:0)"
            .parse::<StableGraph>()
            .unwrap_err();
        let Error::InvalidGraph(msgs) = err else {
            panic!()
        };
        assert_eq!(msgs, vec!["duplicate leg label 1", "missing leg label 3"]);
    }

    #[test]
    fn key_round_trips() {
        for h in enumerate_strata(1, 3, None).unwrap() {
            let key = h.key_string();
            let back: StableGraph = key.parse().unwrap();
            assert_eq!(back, h);
        }
    }

    #[test]
    fn canonical_key_ignores_vertex_order() {
        let ab = graph(&[0, 1], &[(0, 1)], &[0, 0]);
        let ba = graph(&[1, 0], &[(0, 1)], &[1, 1]);
        assert_eq!(ab.canonical_key(), ba.canonical_key());
    }

    #[test]
    fn canonical_key_separates_genus_placement() {
        let first = graph(&[1, 0], &[(0, 1)], &[0, 1, 1]);
        let second = graph(&[0, 1], &[(0, 1)], &[0, 1, 1]);
        assert_ne!(first.canonical_key(), second.canonical_key());
    }

    #[test]
    fn trivial_key_is_fixed() {
        assert_eq!(
            StableGraph::smooth(1, 1).unwrap().canonical_key(),
            "1;1;V=(1);E=();L=(1:0)"
        );
        assert_eq!(
            graph(&[0], &[(0, 0)], &[0]).canonical_key(),
            "1;1;V=(0);E=(0-0);L=(1:0)"
        );
    }

    #[test]
    fn automorphism_examples() {
        assert_eq!(StableGraph::smooth(2, 0).unwrap().automorphism_count(), 1);
        assert_eq!(graph(&[0], &[(0, 0)], &[0]).automorphism_count(), 2);
        assert_eq!(graph(&[1, 1], &[(0, 1)], &[]).automorphism_count(), 2);
        // banana: two genus-0 vertices, three parallel edges
        assert_eq!(graph(&[0, 0], &[(0, 1); 3], &[]).automorphism_count(), 12);
        // figure eight on a genus-0 vertex: 2! * 2^2
        assert_eq!(graph(&[0], &[(0, 0), (0, 0)], &[]).automorphism_count(), 8);
    }

    #[test]
    fn degenerations_of_small_open_strata() {
        assert!(StableGraph::smooth(0, 3)
            .unwrap()
            .one_step_degenerations()
            .is_empty());
        assert_eq!(
            StableGraph::smooth(0, 4)
                .unwrap()
                .one_step_degenerations()
                .len(),
            3
        );
        let from_11 = StableGraph::smooth(1, 1).unwrap().one_step_degenerations();
        assert_eq!(from_11, vec![graph(&[0], &[(0, 0)], &[0]).canonical()]);
    }

    #[test]
    fn contraction_inverts_degeneration() {
        let s = StableGraph::smooth(2, 1).unwrap();
        for child in s.one_step_degenerations() {
            assert_eq!(child.one_step_contractions(), vec![s.canonical()]);
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_strata(1, 1, None).unwrap().len(), 2);
        assert_eq!(enumerate_strata(0, 4, None).unwrap().len(), 4);
        assert_eq!(enumerate_strata(0, 5, None).unwrap().len(), 26);
        assert_eq!(enumerate_strata(2, 0, None).unwrap().len(), 7);
        assert_eq!(enumerate_strata(2, 0, Some(1)).unwrap().len(), 3);
    }

    #[test]
    fn unstable_enumeration_is_an_error() {
        assert!(matches!(
            enumerate_strata(0, 2, None),
            Err(Error::Unstable { .. })
        ));
    }

    #[test]
    fn stats_examples() {
        let s = StableGraph::smooth(2, 0).unwrap().stats(2, 0);
        assert_eq!((s.codimension, s.dimension, s.genus_zero_count), (0, 3, 0));
        let s = graph(&[0], &[(0, 0)], &[0]).stats(1, 1);
        assert_eq!((s.codimension, s.dimension, s.genus_zero_count), (1, 0, 1));
        let tree = graph(&[0, 0, 0], &[(0, 1), (1, 2)], &[0, 0, 1, 2, 2]);
        let s = tree.stats(0, 5);
        assert_eq!((s.codimension, s.dimension, s.genus_zero_count), (2, 0, 3));
    }
}
