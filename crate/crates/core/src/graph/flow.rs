//! Integer-capacity flow networks and an exact max-flow / min-cut solver
//! (Dinic's algorithm).

use std::collections::VecDeque;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FlowEdge {
    pub from: usize,
    pub to: usize,
    pub capacity: u64,
}

/// Directed capacitated graph with a distinguished source and sink.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowNetwork {
    node_count: usize,
    source: usize,
    sink: usize,
    edges: Vec<FlowEdge>,
}

/// A minimum s-t cut: its capacity and the nodes on the source side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinCut {
    pub value: u64,
    pub source_side: Vec<bool>,
}

impl FlowNetwork {
    pub fn new(node_count: usize, source: usize, sink: usize) -> Result<Self> {
        if source >= node_count || sink >= node_count {
            return Err(Error::InvalidParameter(format!(
                "source {source} / sink {sink} outside {node_count} nodes"
            )));
        }
        if source == sink {
            return Err(Error::InvalidParameter(
                "source and sink must differ".into(),
            ));
        }
        Ok(Self {
            node_count,
            source,
            sink,
            edges: Vec::new(),
        })
    }

    /// Adds a directed edge. Edges into the source or out of the sink are
    /// rejected.
    pub fn add_edge(&mut self, from: usize, to: usize, capacity: u64) -> Result<()> {
        for index in [from, to] {
            if index >= self.node_count {
                return Err(Error::IndexOutOfRange {
                    index,
                    k: self.node_count,
                });
            }
        }
        if to == self.source || from == self.sink {
            return Err(Error::InvalidParameter(format!(
                "edge {from}->{to} enters the source or leaves the sink"
            )));
        }
        self.edges.push(FlowEdge { from, to, capacity });
        Ok(())
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn edges(&self) -> &[FlowEdge] {
        &self.edges
    }

    /// Total capacity of edges leaving `source_side`.
    pub fn cut_capacity(&self, source_side: &[bool]) -> u64 {
        self.edges
            .iter()
            .filter(|e| source_side[e.from] && !source_side[e.to])
            .map(|e| e.capacity)
            .sum()
    }

    /// Maximum flow value together with the minimum cut found from the
    /// final residual graph (nodes reachable from the source).
    pub fn min_cut(&self) -> MinCut {
        let mut dinic = Dinic::new(self.node_count);
        for e in &self.edges {
            dinic.add_edge(e.from, e.to, e.capacity);
        }
        let value = dinic.max_flow(self.source, self.sink);
        let source_side = dinic.reachable(self.source);
        MinCut { value, source_side }
    }

    pub fn max_flow(&self) -> u64 {
        self.min_cut().value
    }
}

#[derive(Debug, Clone, Copy)]
struct Arc {
    to: usize,
    residual: u64,
    rev: usize,
}

struct Dinic {
    graph: Vec<Vec<Arc>>,
    level: Vec<usize>,
    next: Vec<usize>,
}

impl Dinic {
    fn new(n: usize) -> Self {
        Self {
            graph: vec![Vec::new(); n],
            level: vec![usize::MAX; n],
            next: vec![0; n],
        }
    }

    fn add_edge(&mut self, from: usize, to: usize, capacity: u64) {
        let rev_from = self.graph[to].len() + usize::from(from == to);
        let rev_to = self.graph[from].len();
        self.graph[from].push(Arc {
            to,
            residual: capacity,
            rev: rev_from,
        });
        self.graph[to].push(Arc {
            to: from,
            residual: 0,
            rev: rev_to,
        });
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.fill(usize::MAX);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for arc in &self.graph[u] {
                if arc.residual > 0 && self.level[arc.to] == usize::MAX {
                    self.level[arc.to] = self.level[u] + 1;
                    queue.push_back(arc.to);
                }
            }
        }
        self.level[t] != usize::MAX
    }

    fn dfs(&mut self, u: usize, t: usize, limit: u64) -> u64 {
        if u == t {
            return limit;
        }
        while self.next[u] < self.graph[u].len() {
            let Arc { to, residual, rev } = self.graph[u][self.next[u]];
            if residual > 0 && self.level[to] == self.level[u] + 1 {
                let pushed = self.dfs(to, t, limit.min(residual));
                if pushed > 0 {
                    let i = self.next[u];
                    self.graph[u][i].residual -= pushed;
                    self.graph[to][rev].residual += pushed;
                    return pushed;
                }
            }
            self.next[u] += 1;
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> u64 {
        let mut total = 0u64;
        while self.bfs(s, t) {
            self.next.fill(0);
            loop {
                let pushed = self.dfs(s, t, u64::MAX);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
        total
    }

    fn reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.graph.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for arc in &self.graph[u] {
                if arc.residual > 0 && !seen[arc.to] {
                    seen[arc.to] = true;
                    stack.push(arc.to);
                }
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classic_network() {
        // CLRS figure 26.1, max flow 23
        let mut net = FlowNetwork::new(6, 0, 5).unwrap();
        for (u, v, c) in [
            (0, 1, 16),
            (0, 2, 13),
            (1, 3, 12),
            (2, 1, 4),
            (2, 4, 14),
            (3, 2, 9),
            (3, 5, 20),
            (4, 3, 7),
            (4, 5, 4),
        ] {
            net.add_edge(u, v, c).unwrap();
        }
        let cut = net.min_cut();
        assert_eq!(cut.value, 23);
        assert_eq!(net.cut_capacity(&cut.source_side), 23);
        assert!(cut.source_side[0] && !cut.source_side[5]);
    }

    #[test]
    fn disconnected_sink_has_zero_flow() {
        let mut net = FlowNetwork::new(3, 0, 2).unwrap();
        net.add_edge(0, 1, 5).unwrap();
        assert_eq!(net.max_flow(), 0);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(FlowNetwork::new(2, 0, 0).is_err());
        let mut net = FlowNetwork::new(3, 0, 2).unwrap();
        assert!(net.add_edge(1, 0, 1).is_err());
        assert!(net.add_edge(2, 1, 1).is_err());
        assert!(net.add_edge(0, 3, 1).is_err());
    }
}
