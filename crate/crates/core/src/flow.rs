//! Global edge connectivity of an undirected graph by repeated `s`-`t`
//! maximum flow.
//!
//! Every undirected edge becomes a pair of antiparallel unit-capacity arcs
//! sharing residuals, the standard undirected max-flow construction. Each
//! max flow runs level-graph phases with blocking augmentation, capped at
//! the best cut seen so far (the cap only skips work that cannot lower the
//! minimum). Seeding the cap with `δ(G)` is itself a cut (isolate a
//! minimum-degree vertex), so the result is still an exact max-flow answer.
//!
//! Instead of flowing to every other vertex, targets range over a greedy
//! dominating set `D` containing the source: if `λ < δ`, each side of a
//! minimum cut `(A, B)` holds more than `δ` vertices (a side with `|B| ≤ δ`
//! would satisfy `δ|B| ≤ |B|(|B|-1) + λ`, forcing `λ ≥ δ`), so if `D`
//! avoided `B` entirely, every vertex of `B` would contribute a distinct
//! cut edge towards its dominator, giving `λ ≥ |B| > δ`, a contradiction.
//! Hence some `t ∈ D` lies across the cut, and
//! `λ = min(δ, min over t in D \ {s} of maxflow(s, t))`.

pub(crate) struct MinCutSolver {
    n: usize,
    /// CSR adjacency: arc ids for vertex `u` live in
    /// `arc_ids[offsets[u]..offsets[u+1]]`.
    offsets: Vec<u32>,
    arc_ids: Vec<u32>,
    /// Arc `2e` is `u -> v`, arc `2e+1` is `v -> u`; `rev(a) = a ^ 1`.
    to: Vec<u32>,
    cap: Vec<u8>,
    level: Vec<i32>,
    cursor: Vec<u32>,
    queue: Vec<u32>,
}

impl MinCutSolver {
    pub(crate) fn new(n: usize, edges: &[(u32, u32)]) -> Self {
        let mut deg = vec![0u32; n];
        for &(u, v) in edges {
            deg[u as usize] += 1;
            deg[v as usize] += 1;
        }
        let mut offsets = vec![0u32; n + 1];
        for v in 0..n {
            offsets[v + 1] = offsets[v] + deg[v];
        }
        let mut fill = offsets.clone();
        let mut arc_ids = vec![0u32; 2 * edges.len()];
        let mut to = vec![0u32; 2 * edges.len()];
        for (e, &(u, v)) in edges.iter().enumerate() {
            let (a, b) = (2 * e as u32, 2 * e as u32 + 1);
            to[a as usize] = v;
            to[b as usize] = u;
            arc_ids[fill[u as usize] as usize] = a;
            fill[u as usize] += 1;
            arc_ids[fill[v as usize] as usize] = b;
            fill[v as usize] += 1;
        }
        Self {
            n,
            offsets,
            arc_ids,
            to,
            cap: vec![1; 2 * edges.len()],
            level: vec![-1; n],
            cursor: vec![0; n],
            queue: Vec::with_capacity(n),
        }
    }

    /// Exact `λ(G)` for a connected graph; the caller guarantees
    /// connectivity and `n ≥ 2`.
    pub(crate) fn global_min_cut(&mut self) -> usize {
        let min_deg_vertex = (0..self.n)
            .min_by_key(|&v| self.offsets[v + 1] - self.offsets[v])
            .expect("nonempty graph");
        let s = min_deg_vertex as u32;
        let mut best =
            (self.offsets[min_deg_vertex + 1] - self.offsets[min_deg_vertex]) as u64;
        for t in self.dominating_targets(s) {
            if best == 0 {
                break;
            }
            self.cap.fill(1);
            let f = self.max_flow(s, t, best);
            best = best.min(f);
        }
        best as usize
    }

    /// Members other than `s` of a greedy dominating set containing `s`.
    fn dominating_targets(&self, s: u32) -> Vec<u32> {
        let mut dominated = vec![false; self.n];
        let add = |v: usize, dominated: &mut Vec<bool>| {
            dominated[v] = true;
            for i in self.offsets[v]..self.offsets[v + 1] {
                dominated[self.to[self.arc_ids[i as usize] as usize] as usize] = true;
            }
        };
        add(s as usize, &mut dominated);
        let mut targets = Vec::new();
        for v in 0..self.n {
            if !dominated[v] {
                targets.push(v as u32);
                add(v, &mut dominated);
            }
        }
        targets
    }

    /// Max flow from `s` to `t`, abandoning the search once `limit` is
    /// reached (the true value is then `≥ limit`).
    fn max_flow(&mut self, s: u32, t: u32, limit: u64) -> u64 {
        let mut flow = 0u64;
        while flow < limit && self.build_levels(s, t) {
            for v in 0..self.n {
                self.cursor[v] = self.offsets[v];
            }
            while flow < limit && self.augment(s, t) {
                flow += 1;
            }
        }
        flow
    }

    /// BFS on the residual graph; true when `t` is reachable.
    fn build_levels(&mut self, s: u32, t: u32) -> bool {
        self.level.fill(-1);
        self.level[s as usize] = 0;
        self.queue.clear();
        self.queue.push(s);
        let mut head = 0;
        while head < self.queue.len() {
            let u = self.queue[head] as usize;
            head += 1;
            for i in self.offsets[u]..self.offsets[u + 1] {
                let a = self.arc_ids[i as usize] as usize;
                let v = self.to[a] as usize;
                if self.cap[a] > 0 && self.level[v] < 0 {
                    self.level[v] = self.level[u] + 1;
                    self.queue.push(v as u32);
                }
            }
        }
        self.level[t as usize] >= 0
    }

    /// Push one unit of flow along a level-increasing path, advancing the
    /// per-vertex arc cursors so dead ends are visited once per phase.
    fn augment(&mut self, u: u32, t: u32) -> bool {
        if u == t {
            return true;
        }
        let un = u as usize;
        while self.cursor[un] < self.offsets[un + 1] {
            let a = self.arc_ids[self.cursor[un] as usize] as usize;
            let v = self.to[a];
            if self.cap[a] > 0 && self.level[v as usize] == self.level[un] + 1 {
                if self.augment(v, t) {
                    self.cap[a] -= 1;
                    self.cap[a ^ 1] += 1;
                    return true;
                }
            }
            self.cursor[un] += 1;
        }
        false
    }
}
