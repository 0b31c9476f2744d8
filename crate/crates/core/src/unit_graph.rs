//! The unit graph `G(Z_n)` and its invariants.
//!
//! Vertices are the residues `0..n`; distinct `x`, `y` are adjacent exactly
//! when `x + y` is a unit mod n. Edges are stored lexicographically as
//! `(u, v)` with `u < v`, which fixes the column order of every incidence
//! matrix built downstream.
//!
//! Invariants are computed from scratch (BFS sweeps, 2-coloring, max flow),
//! never read off the closed-form predictions; [`predict`] produces those
//! separately so callers can compare the two routes.

use std::io::{self, Write};

use crate::flow::MinCutSolver;
use crate::ring_zn::{classify, Factorization};
use crate::{Error, Result};

/// Diameter of a graph; `Infinite` for disconnected input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(u32),
    Infinite,
}

/// Girth of a graph; `Acyclic` when no cycle exists (reported as a sentinel,
/// never as 0 or a made-up numeral).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Girth {
    Finite(u32),
    Acyclic,
}

/// The unit graph on `Z_n`.
#[derive(Debug, Clone)]
pub struct UnitGraph {
    n: usize,
    edges: Vec<(u32, u32)>,
    adj: Vec<Vec<u32>>,
}

/// Build `G(Z_n)` for `n ≥ 2` by scanning all residue pairs.
pub fn build(n: u64) -> Result<UnitGraph> {
    let classification = classify(n)?;
    let n = n as usize;
    let unit: Vec<bool> = (0..n).map(|x| classification.is_unit(x as u64)).collect();
    let mut edges = Vec::new();
    let mut adj = vec![Vec::new(); n];
    for u in 0..n {
        for v in (u + 1)..n {
            let s = u + v;
            let s = if s >= n { s - n } else { s };
            if unit[s] {
                edges.push((u as u32, v as u32));
                adj[u].push(v as u32);
                adj[v].push(u as u32);
            }
        }
    }
    Ok(UnitGraph { n, edges, adj })
}

impl UnitGraph {
    pub fn n(&self) -> u64 {
        self.n as u64
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order, `u < v`.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.adj[v].len()).min().unwrap_or(0)
    }

    /// First vertex attaining the minimum degree.
    pub fn min_degree_vertex(&self) -> usize {
        (0..self.n)
            .min_by_key(|&v| self.adj[v].len())
            .expect("n >= 2")
    }

    /// Per-vertex neighbor bitsets, `n.div_ceil(64)` words each.
    pub(crate) fn neighbor_bitsets(&self) -> Vec<Vec<u64>> {
        let words = self.n.div_ceil(64);
        let mut sets = vec![vec![0u64; words]; self.n];
        for &(u, v) in &self.edges {
            sets[u as usize][v as usize / 64] |= 1 << (v % 64);
            sets[v as usize][u as usize / 64] |= 1 << (u % 64);
        }
        sets
    }

    fn bfs_levels(&self, root: usize, level: &mut [u32], queue: &mut Vec<u32>) -> usize {
        level.fill(u32::MAX);
        level[root] = 0;
        queue.clear();
        queue.push(root as u32);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head] as usize;
            head += 1;
            for &v in &self.adj[u] {
                if level[v as usize] == u32::MAX {
                    level[v as usize] = level[u] + 1;
                    queue.push(v);
                }
            }
        }
        queue.len()
    }

    pub fn is_connected(&self) -> bool {
        let mut level = vec![u32::MAX; self.n];
        let mut queue = Vec::with_capacity(self.n);
        self.bfs_levels(0, &mut level, &mut queue) == self.n
    }

    /// Exact diameter via a BFS sweep from every vertex.
    pub fn diameter(&self) -> Diameter {
        let mut level = vec![u32::MAX; self.n];
        let mut queue = Vec::with_capacity(self.n);
        let mut max = 0u32;
        for root in 0..self.n {
            if self.bfs_levels(root, &mut level, &mut queue) != self.n {
                return Diameter::Infinite;
            }
            let ecc = *level.iter().max().expect("n >= 2");
            max = max.max(ecc);
        }
        Diameter::Finite(max)
    }

    /// Exact girth: for every root, BFS records the first non-tree edge
    /// closing a walk of length `level(u) + level(v) + 1`. Each such walk
    /// contains a cycle no longer than itself, and a root on a shortest
    /// cycle realizes its length, so the minimum over roots is exact. The
    /// scan from a root stops once `2·level(u) ≥ best`, which cannot hide
    /// anything shorter.
    pub fn girth(&self) -> Girth {
        let mut best = u32::MAX;
        let mut level = vec![u32::MAX; self.n];
        let mut parent = vec![u32::MAX; self.n];
        let mut queue: Vec<u32> = Vec::with_capacity(self.n);
        for root in 0..self.n {
            level.fill(u32::MAX);
            level[root] = 0;
            parent[root] = root as u32;
            queue.clear();
            queue.push(root as u32);
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head] as usize;
                head += 1;
                if best != u32::MAX && 2 * level[u] >= best {
                    break;
                }
                for &v in &self.adj[u] {
                    let vz = v as usize;
                    if level[vz] == u32::MAX {
                        level[vz] = level[u] + 1;
                        parent[vz] = u as u32;
                        queue.push(v);
                    } else if parent[u] != v {
                        best = best.min(level[u] + level[vz] + 1);
                    }
                }
            }
            if best == 3 {
                break;
            }
        }
        if best == u32::MAX {
            Girth::Acyclic
        } else {
            Girth::Finite(best)
        }
    }

    /// The two color classes of a proper 2-coloring, or `None` when an odd
    /// cycle makes one impossible. Vertex 0's side is listed first; both
    /// sides are sorted.
    pub fn bipartition(&self) -> Option<(Vec<u32>, Vec<u32>)> {
        let mut color = vec![u8::MAX; self.n];
        let mut queue: Vec<u32> = Vec::new();
        for root in 0..self.n {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            queue.clear();
            queue.push(root as u32);
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head] as usize;
                head += 1;
                for &v in &self.adj[u] {
                    let vz = v as usize;
                    if color[vz] == u8::MAX {
                        color[vz] = 1 - color[u];
                        queue.push(v);
                    } else if color[vz] == color[u] {
                        return None;
                    }
                }
            }
        }
        let side_a = (0..self.n as u32).filter(|&v| color[v as usize] == 0).collect();
        let side_b = (0..self.n as u32).filter(|&v| color[v as usize] == 1).collect();
        Some((side_a, side_b))
    }

    /// Edge connectivity `λ(G)` as the minimum over `t ≠ s` of the exact
    /// `s`-`t` max flow with unit capacities in both directions.
    pub fn edge_connectivity(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::NotConnected);
        }
        Ok(MinCutSolver::new(self.n, &self.edges).global_min_cut())
    }

    /// The full invariant bundle. Disconnected graphs get `λ = 0` (no edge
    /// set at all needs removing) and an infinite diameter.
    pub fn invariants(&self) -> GraphInvariants {
        let connected = self.is_connected();
        GraphInvariants {
            connected,
            diameter: self.diameter(),
            girth: self.girth(),
            min_degree: self.min_degree(),
            edge_connectivity: if connected {
                MinCutSolver::new(self.n, &self.edges).global_min_cut()
            } else {
                0
            },
            bipartition: self.bipartition(),
        }
    }

    /// Plain-text serialization: `n <vertexCount> <edgeCount>` then one
    /// `u v` line per edge in lexicographic order.
    pub fn write_text<W: Write>(&self, w: &mut W) -> io::Result<()> {
        writeln!(w, "n {} {}", self.n, self.edges.len())?;
        for &(u, v) in &self.edges {
            writeln!(w, "{u} {v}")?;
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut buf = Vec::new();
        self.write_text(&mut buf).expect("write to Vec cannot fail");
        String::from_utf8(buf).expect("text export is ASCII")
    }
}

/// Invariants computed directly from the graph structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphInvariants {
    pub connected: bool,
    pub diameter: Diameter,
    pub girth: Girth,
    pub min_degree: usize,
    pub edge_connectivity: usize,
    pub bipartition: Option<(Vec<u32>, Vec<u32>)>,
}

/// Moduli classes with distinct closed-form invariant predictions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shape {
    OddPrimePower,
    PowerOfTwo,
    TwoOddPrimes,
    TwoWithEven,
    ThreeOddPrimes,
    ThreeWithEven,
    General,
}

impl Shape {
    /// Stable identifier used in reports.
    pub fn as_str(&self) -> &'static str {
        match self {
            Shape::OddPrimePower => "ODD_PRIME_POWER",
            Shape::PowerOfTwo => "POWER_OF_TWO",
            Shape::TwoOddPrimes => "TWO_ODD_PRIMES",
            Shape::TwoWithEven => "TWO_WITH_EVEN",
            Shape::ThreeOddPrimes => "THREE_ODD_PRIMES",
            Shape::ThreeWithEven => "THREE_WITH_EVEN",
            Shape::General => "GENERAL",
        }
    }
}

/// Classify a factored modulus by parity and distinct prime count.
pub fn shape_of(f: &Factorization) -> Shape {
    match (f.two_is_unit(), f.distinct_prime_count()) {
        (true, 1) => Shape::OddPrimePower,
        (false, 1) => Shape::PowerOfTwo,
        (true, 2) => Shape::TwoOddPrimes,
        (false, 2) => Shape::TwoWithEven,
        (true, 3) => Shape::ThreeOddPrimes,
        (false, 3) => Shape::ThreeWithEven,
        _ => Shape::General,
    }
}

/// Predicted edge count, valid for every `n ≥ 2`:
/// `(n-1)·φ(n)/2` when 2 is a unit, `n·φ(n)/2` otherwise.
pub fn predicted_edge_count(f: &Factorization) -> u64 {
    let (n, phi) = (f.n(), f.euler_phi());
    if f.two_is_unit() {
        (n - 1) * phi / 2
    } else {
        n * phi / 2
    }
}

/// Closed-form invariant predictions for a modulus. Fields are `None` where
/// no closed form is claimed for the shape (or where a small modulus is
/// explicitly excluded from one).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredictedInvariants {
    pub shape: Shape,
    pub edges: u64,
    pub lambda: Option<u64>,
    /// Upper bound on the diameter (the graph is predicted connected).
    pub diameter_bound: Option<u32>,
    pub girth: Option<u32>,
}

/// Predictions for `n ≥ 2`.
///
/// Shapes with at most three distinct primes get the full set: λ is
/// `φ(n)-1` when 2 is a unit and `φ(n)` otherwise, diameter is bounded by 2
/// (2 a unit) or 3 (2 a non-unit, with powers of two at 2 since they are
/// complete bipartite), and girth is 3 or 4 except the listed special
/// moduli: girth is unpredicted for acyclic `n ∈ {2, 3}` and equals 6 for
/// `n = 6`. Four or more distinct primes (`General`) keep the edge count,
/// which holds for every `n`, and the diameter bound, which beyond three
/// primes is conjectural; λ and girth are unpredicted there.
pub fn predict(f: &Factorization) -> Result<PredictedInvariants> {
    let n = f.n();
    if n < 2 {
        return Err(if n == 0 {
            Error::ZeroModulus
        } else {
            Error::ModulusTooSmall
        });
    }
    let shape = shape_of(f);
    let phi = f.euler_phi();
    let edges = predicted_edge_count(f);
    let (lambda, diameter_bound, girth) = match shape {
        Shape::OddPrimePower => (
            Some(phi - 1),
            Some(2),
            if n == 3 { None } else { Some(3) },
        ),
        Shape::PowerOfTwo => (
            Some(phi),
            Some(if n == 2 { 1 } else { 2 }),
            if n == 2 { None } else { Some(4) },
        ),
        Shape::TwoOddPrimes | Shape::ThreeOddPrimes => (Some(phi - 1), Some(2), Some(3)),
        Shape::TwoWithEven => (
            Some(phi),
            Some(3),
            Some(if n == 6 { 6 } else { 4 }),
        ),
        Shape::ThreeWithEven => (Some(phi), Some(3), Some(4)),
        // Beyond three distinct primes only the diameter bound survives as
        // a prediction (conjectured, not proved): 2 when 2 is a unit, 3
        // otherwise.
        Shape::General => (None, Some(if f.two_is_unit() { 2 } else { 3 }), None),
    };
    Ok(PredictedInvariants {
        shape,
        edges,
        lambda,
        diameter_bound,
        girth,
    })
}
