//! JSON input files.
//!
//! Topology: `{"K": 4, "M": 1, "L": [[1, 0, ...], ...]}` with receivers as rows.
//! Backhaul: `{"K": 4, "links": [{"from": 0, "to": 1, "capacity": 1.0}, ...]}`.

use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::model::{BackhaulGraph, NetworkTopology};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct TopologyFile {
    #[serde(rename = "K")]
    k: usize,
    #[serde(rename = "M")]
    m: usize,
    #[serde(rename = "L")]
    l: Vec<Vec<i64>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct LinkEntry {
    from: usize,
    to: usize,
    capacity: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct BackhaulFile {
    #[serde(rename = "K")]
    k: usize,
    #[serde(default)]
    links: Vec<LinkEntry>,
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn parse_topology(text: &str) -> Result<NetworkTopology> {
    let f: TopologyFile = parse(text)?;
    NetworkTopology::new(f.k, f.m, &f.l)
}

pub fn parse_backhaul(text: &str) -> Result<BackhaulGraph> {
    let f: BackhaulFile = parse(text)?;
    BackhaulGraph::from_links(f.k, f.links.into_iter().map(|l| (l.from, l.to, l.capacity)))
}

pub fn load_topology(path: impl AsRef<Path>) -> Result<NetworkTopology> {
    parse_topology(&read(path.as_ref())?)
}

pub fn load_backhaul(path: impl AsRef<Path>) -> Result<BackhaulGraph> {
    parse_backhaul(&read(path.as_ref())?)
}

pub fn topology_to_json(topology: &NetworkTopology) -> String {
    serde_json::json!({ "K": topology.k(), "M": topology.m(), "L": topology.rows() }).to_string()
}

pub fn backhaul_to_json(backhaul: &BackhaulGraph) -> String {
    let links: Vec<_> = backhaul
        .links()
        .map(|(from, to, capacity)| serde_json::json!({ "from": from, "to": to, "capacity": capacity }))
        .collect();
    serde_json::json!({ "K": backhaul.k(), "links": links }).to_string()
}
