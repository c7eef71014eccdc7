//! Small simple graphs: Petersen graph, line graphs, induced cycles and
//! isomorphism search.

use serde::Serialize;

/// Simple undirected graph on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Graph {
    adj: Vec<Vec<bool>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![vec![false; n]; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert_ne!(a, b, "no loops");
        self.adj[a][b] = true;
        self.adj[b][a] = true;
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a][b]
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.order()).filter(|&w| self.adj[v][w]).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&e| e).count()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.order();
        (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|&(a, b)| self.adj[a][b]).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    pub fn is_regular(&self, d: usize) -> bool {
        (0..self.order()).all(|v| self.degree(v) == d)
    }

    /// Whether the cyclically ordered vertices form a chordless cycle.
    pub fn is_induced_cycle(&self, cycle: &[usize]) -> bool {
        let n = cycle.len();
        if n < 3 {
            return false;
        }
        for i in 0..n {
            for j in i + 1..n {
                let consecutive = j == i + 1 || (i == 0 && j == n - 1);
                if self.adj[cycle[i]][cycle[j]] != consecutive {
                    return false;
                }
            }
        }
        true
    }

    /// Chordless cycles of the given length, each once: the first vertex is
    /// the smallest and the second is smaller than the last.
    pub fn induced_cycles(&self, len: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for start in 0..self.order() {
            let mut path = vec![start];
            self.grow_cycles(len, &mut path, &mut out);
        }
        out
    }

    fn grow_cycles(&self, len: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let start = path[0];
        if path.len() == len {
            if path[1] < path[len - 1] && self.is_induced_cycle(path) {
                out.push(path.clone());
            }
            return;
        }
        let last = *path.last().expect("nonempty path");
        for w in self.neighbors(last) {
            if w > start && !path.contains(&w) {
                path.push(w);
                self.grow_cycles(len, path, out);
                path.pop();
            }
        }
    }

    /// Whether no edge joins the two vertex sets.
    pub fn no_edges_between(&self, a: &[usize], b: &[usize]) -> bool {
        a.iter().all(|&x| b.iter().all(|&y| !self.adj[x][y]))
    }
}

/// The Petersen graph on the 2-subsets of `{1..5}`, adjacent when disjoint.
pub fn petersen() -> (Graph, Vec<[usize; 2]>) {
    let mut vertices = Vec::new();
    for a in 1..=5 {
        for b in a + 1..=5 {
            vertices.push([a, b]);
        }
    }
    let mut g = Graph::new(vertices.len());
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            if vertices[i].iter().all(|x| !vertices[j].contains(x)) {
                g.add_edge(i, j);
            }
        }
    }
    (g, vertices)
}

/// Line graph with its vertices listed as edges of `g`.
pub fn line_graph(g: &Graph) -> (Graph, Vec<(usize, usize)>) {
    let edges = g.edges();
    let mut lg = Graph::new(edges.len());
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            if a == c || a == d || b == c || b == d {
                lg.add_edge(i, j);
            }
        }
    }
    (lg, edges)
}

/// Whether `map` (vertex `i` of `a` to `map[i]` of `b`) is an isomorphism.
pub fn is_isomorphism(a: &Graph, b: &Graph, map: &[usize]) -> bool {
    let n = a.order();
    if b.order() != n || map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &m in map {
        if m >= n || seen[m] {
            return false;
        }
        seen[m] = true;
    }
    (0..n).all(|i| (0..n).all(|j| a.has_edge(i, j) == b.has_edge(map[i], map[j])))
}

/// An isomorphism `a -> b` by backtracking over degree-compatible images,
/// assigning vertices of `a` in breadth-first order.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    let n = a.order();
    if b.order() != n || a.edge_count() != b.edge_count() {
        return None;
    }
    let mut order = Vec::with_capacity(n);
    let mut queued = vec![false; n];
    for root in 0..n {
        if queued[root] {
            continue;
        }
        queued[root] = true;
        let mut head = order.len();
        order.push(root);
        while head < order.len() {
            let v = order[head];
            head += 1;
            for w in a.neighbors(v) {
                if !queued[w] {
                    queued[w] = true;
                    order.push(w);
                }
            }
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if assign(a, b, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn assign(a: &Graph, b: &Graph, order: &[usize], k: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if k == order.len() {
        return true;
    }
    let v = order[k];
    for w in 0..b.order() {
        if used[w] || a.degree(v) != b.degree(w) {
            continue;
        }
        let consistent = order[..k].iter().all(|&u| a.has_edge(u, v) == b.has_edge(map[u], w));
        if consistent {
            map[v] = w;
            used[w] = true;
            if assign(a, b, order, k + 1, map, used) {
                return true;
            }
            used[w] = false;
        }
    }
    map[v] = usize::MAX;
    false
}
