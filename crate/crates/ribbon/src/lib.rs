//! Ribbon graphs as combinatorial maps: a cyclic order of half-edges at
//! each vertex (σ), a fixed-point-free pairing of the internal half-edges
//! (α), and the remaining half-edges as external legs. Faces are the
//! cycles of σ∘α (external half-edges are fixed by α, so a boundary
//! component simply runs past them); a face meeting at least one external
//! leg is broken. The genus comes from the Euler characteristic
//! χ = n − I + F = 2 − 2g, and the superficial divergence degrees are
//!
//!   d_c  = D + (D−4)n + (2−D)N/2,
//!   d_nc = d_c − D(2g + B − 1),
//!
//! for a φ⁴-type graph with n vertices, I internal lines, N external legs,
//! genus g and B broken faces. Orientability (every internal line joining
//! two corners of opposite sign, after optionally flipping whole vertices)
//! is decided by brute force over the 2^n vertex orientations.

use serde::Serialize;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RibbonError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
}

/// A ribbon graph. Half-edges are indexed densely; `vertices[v]` lists the
/// half-edges of vertex `v` in cyclic order, `sign` carries the per-corner
/// sign, and `partner[h]` is the internal pairing (None for external legs).
#[derive(Debug, Clone)]
pub struct RibbonGraph {
    pub names: Vec<String>,
    pub vertices: Vec<Vec<usize>>,
    pub sign: Vec<i8>,
    pub partner: Vec<Option<usize>>,
    vertex_of: Vec<usize>,
    next_at_vertex: Vec<usize>,
}

/// Face census of a ribbon graph.
#[derive(Debug, Clone, Serialize)]
pub struct Topology {
    /// total number of faces F
    pub faces: usize,
    /// number of broken faces B (faces meeting ≥ 1 external leg)
    pub broken: usize,
    /// genus g from χ = n − I + F = 2 − 2g
    pub genus: usize,
    /// the face cycles themselves, as half-edge index lists
    #[serde(skip)]
    pub cycles: Vec<Vec<usize>>,
}

impl RibbonGraph {
    /// Build from explicit data: per-vertex cyclic half-edge lists with
    /// signs, plus the internal pairing, all by half-edge name.
    pub fn new(
        vertices: &[Vec<(String, i8)>],
        pairs: &[(String, String)],
    ) -> Result<Self, RibbonError> {
        let mut names = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut sign = Vec::new();
        let mut vertex_of = Vec::new();
        let mut vlists = Vec::new();
        for (v, list) in vertices.iter().enumerate() {
            if list.is_empty() {
                return Err(RibbonError::Domain(format!("vertex {v} has no half-edges")));
            }
            let mut vl = Vec::new();
            for (name, s) in list {
                if *s != 1 && *s != -1 {
                    return Err(RibbonError::Domain(format!("bad sign for {name}")));
                }
                if index.contains_key(name) {
                    return Err(RibbonError::Domain(format!(
                        "half-edge {name} appears more than once"
                    )));
                }
                let h = names.len();
                index.insert(name.clone(), h);
                names.push(name.clone());
                sign.push(*s);
                vertex_of.push(v);
                vl.push(h);
            }
            vlists.push(vl);
        }
        let mut next_at_vertex = vec![0usize; names.len()];
        for vl in &vlists {
            for (i, &h) in vl.iter().enumerate() {
                next_at_vertex[h] = vl[(i + 1) % vl.len()];
            }
        }
        let mut partner: Vec<Option<usize>> = vec![None; names.len()];
        for (a, b) in pairs {
            let ha = *index
                .get(a)
                .ok_or_else(|| RibbonError::Domain(format!("unknown half-edge {a}")))?;
            let hb = *index
                .get(b)
                .ok_or_else(|| RibbonError::Domain(format!("unknown half-edge {b}")))?;
            if ha == hb {
                return Err(RibbonError::Domain(format!("{a} paired with itself")));
            }
            if partner[ha].is_some() || partner[hb].is_some() {
                return Err(RibbonError::Domain(format!(
                    "half-edge in pair ({a}, {b}) already paired"
                )));
            }
            partner[ha] = Some(hb);
            partner[hb] = Some(ha);
        }
        Ok(RibbonGraph {
            names,
            vertices: vlists,
            sign,
            partner,
            vertex_of,
            next_at_vertex,
        })
    }

    /// Parse the text format: one `v:` line per vertex listing half-edges
    /// in cyclic order with a +/− sign suffix, one `e:` line per internal
    /// pairing; unpaired half-edges are the external legs. Blank lines and
    /// `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self, RibbonError> {
        let mut vertices: Vec<Vec<(String, i8)>> = Vec::new();
        let mut pairs: Vec<(String, String)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| RibbonError::Parse(format!("line {}: {msg}", lineno + 1));
            let (kind, rest) = line
                .split_once(':')
                .ok_or_else(|| err("expected `v:` or `e:` line"))?;
            match kind.trim() {
                "v" => {
                    let mut list = Vec::new();
                    for tok in rest.split_whitespace() {
                        let (name, s) = if let Some(n) = tok.strip_suffix('+') {
                            (n, 1i8)
                        } else if let Some(n) = tok.strip_suffix('-') {
                            (n, -1i8)
                        } else {
                            return Err(err(&format!("half-edge `{tok}` lacks a +/- sign")));
                        };
                        if name.is_empty() {
                            return Err(err("empty half-edge name"));
                        }
                        list.push((name.to_string(), s));
                    }
                    if list.is_empty() {
                        return Err(err("vertex with no half-edges"));
                    }
                    vertices.push(list);
                }
                "e" => {
                    let toks: Vec<&str> = rest.split_whitespace().collect();
                    if toks.len() != 2 {
                        return Err(err("pairing line needs exactly two half-edges"));
                    }
                    pairs.push((toks[0].to_string(), toks[1].to_string()));
                }
                other => return Err(err(&format!("unknown line kind `{other}`"))),
            }
        }
        if vertices.is_empty() {
            return Err(RibbonError::Parse("no vertices".into()));
        }
        RibbonGraph::new(&vertices, &pairs)
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn internal_lines(&self) -> usize {
        self.partner.iter().filter(|p| p.is_some()).count() / 2
    }

    pub fn external_legs(&self) -> usize {
        self.partner.iter().filter(|p| p.is_none()).count()
    }

    fn check_connected(&self) -> Result<(), RibbonError> {
        let n = self.vertices.len();
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &h in &self.vertices[v] {
                if let Some(p) = self.partner[h] {
                    let u = self.vertex_of[p];
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
        }
        if seen.iter().all(|&s| s) {
            Ok(())
        } else {
            Err(RibbonError::Domain(
                "graph is disconnected (internal lines do not reach every vertex)".into(),
            ))
        }
    }

    /// Faces, broken faces and genus by boundary traversal.
    pub fn topology(&self) -> Result<Topology, RibbonError> {
        self.check_connected()?;
        let nh = self.names.len();
        // face successor: follow the edge (identity on external legs),
        // then take the next half-edge in the vertex cycle
        let succ = |h: usize| self.next_at_vertex[self.partner[h].unwrap_or(h)];
        let mut visited = vec![false; nh];
        let mut cycles = Vec::new();
        let mut broken = 0usize;
        for start in 0..nh {
            if visited[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut h = start;
            let mut has_external = false;
            loop {
                visited[h] = true;
                cycle.push(h);
                has_external |= self.partner[h].is_none();
                h = succ(h);
                if h == start {
                    break;
                }
            }
            if has_external {
                broken += 1;
            }
            cycles.push(cycle);
        }
        let chi = self.n_vertices() as i64 - self.internal_lines() as i64 + cycles.len() as i64;
        if chi > 2 || (2 - chi) % 2 != 0 {
            return Err(RibbonError::Domain(format!(
                "Euler characteristic {chi} does not give a genus"
            )));
        }
        Ok(Topology {
            faces: cycles.len(),
            broken,
            genus: ((2 - chi) / 2) as usize,
            cycles,
        })
    }

    /// Superficial divergence degrees (d_c, d_nc) of a φ⁴-type graph in
    /// dimension `dim`.
    pub fn degrees(&self, dim: usize) -> Result<(i64, i64), RibbonError> {
        if let Some(v) = self.vertices.iter().position(|vl| vl.len() != 4) {
            return Err(RibbonError::Domain(format!(
                "vertex {v} is not 4-valent; power counting needs a phi^4 graph"
            )));
        }
        let top = self.topology()?;
        let d = dim as i64;
        let n = self.n_vertices() as i64;
        let nn = self.external_legs() as i64;
        if nn % 2 != 0 {
            return Err(RibbonError::Domain(
                "phi^4 graph must have an even number of external legs".into(),
            ));
        }
        let d_c = d + (d - 4) * n + (2 - d) * nn / 2;
        let d_nc = d_c - d * (2 * top.genus as i64 + top.broken as i64 - 1);
        Ok((d_c, d_nc))
    }

    /// Search for vertex orientations (each vertex kept or globally
    /// flipped) such that every internal line joins two corners of
    /// opposite sign. Returns the flip assignment as a witness, or None.
    pub fn orientable(&self) -> Option<Vec<bool>> {
        let n = self.vertices.len();
        assert!(n <= 24, "orientation brute force limited to 24 vertices");
        'outer: for mask in 0u64..(1u64 << n) {
            let flip = |v: usize| (mask >> v) & 1 == 1;
            for h in 0..self.names.len() {
                if let Some(p) = self.partner[h] {
                    if p < h {
                        continue; // each line once
                    }
                    let sh = self.sign[h] as i64 * if flip(self.vertex_of[h]) { -1 } else { 1 };
                    let sp = self.sign[p] as i64 * if flip(self.vertex_of[p]) { -1 } else { 1 };
                    if sh == sp {
                        continue 'outer;
                    }
                }
            }
            return Some((0..n).map(|v| (mask >> v) & 1 == 1).collect());
        }
        None
    }
}
