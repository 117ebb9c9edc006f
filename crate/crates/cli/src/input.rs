//! Input documents: building sets and graphs with named elements.
//!
//! Building sets arrive as `{"ground_set": [names], "generators": [[names]]}`
//! and are closed; graphs as `{"vertices": [names], "edges": [[u, v]]}` or
//! as plain edge-list lines "u v". Names are arbitrary strings, densified
//! to indices with the label table retained for output.

use std::collections::BTreeMap;

use bshopf_core::building::{BuildingSet, SetFamily};
use bshopf_core::graphs::SimpleGraph;
use serde_json::Value;

use crate::CliError;

pub enum Input {
    Building(BuildingSet),
    Graph(SimpleGraph, Vec<String>),
}

impl Input {
    /// Graphs turn into their graphical building sets (vertex subsets
    /// inducing connected subgraphs); building sets pass through.
    pub fn into_building_set(self) -> Result<BuildingSet, CliError> {
        match self {
            Input::Building(b) => Ok(b),
            Input::Graph(g, labels) => {
                let b = bshopf_core::graphs::graphical(&g).map_err(CliError::from)?;
                b.with_labels(labels).map_err(CliError::from)
            }
        }
    }

    pub fn into_graph(self) -> Result<(SimpleGraph, Vec<String>), CliError> {
        match self {
            Input::Graph(g, labels) => Ok((g, labels)),
            Input::Building(_) => Err(CliError::input(
                "this command needs a graph document, not a building set",
            )),
        }
    }
}

pub fn parse_document(text: &str) -> Result<Input, CliError> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let value: Value = serde_json::from_str(text)
            .map_err(|e| CliError::input(&format!("malformed JSON: {e}")))?;
        let obj = value
            .as_object()
            .ok_or_else(|| CliError::input("top-level JSON value must be an object"))?;
        if obj.contains_key("ground_set") {
            parse_building_set(obj)
        } else if obj.contains_key("vertices") {
            parse_graph(obj)
        } else {
            Err(CliError::input(
                "document must contain either \"ground_set\" or \"vertices\"",
            ))
        }
    } else {
        parse_edge_lines(text)
    }
}

fn name_list(value: &Value, what: &str) -> Result<Vec<String>, CliError> {
    let arr = value
        .as_array()
        .ok_or_else(|| CliError::input(&format!("{what} must be an array of names")))?;
    arr.iter()
        .map(|v| {
            v.as_str()
                .map(str::to_owned)
                .ok_or_else(|| CliError::input(&format!("{what} entries must be strings")))
        })
        .collect()
}

fn index_names(names: &[String], what: &str) -> Result<BTreeMap<String, usize>, CliError> {
    let mut index = BTreeMap::new();
    for (i, name) in names.iter().enumerate() {
        if index.insert(name.clone(), i).is_some() {
            return Err(CliError::input(&format!("duplicate name \"{name}\" in {what}")));
        }
    }
    Ok(index)
}

fn parse_building_set(obj: &serde_json::Map<String, Value>) -> Result<Input, CliError> {
    let names = name_list(&obj["ground_set"], "\"ground_set\"")?;
    let index = index_names(&names, "\"ground_set\"")?;
    let generators = match obj.get("generators") {
        None => Vec::new(),
        Some(v) => v
            .as_array()
            .ok_or_else(|| CliError::input("\"generators\" must be an array of name arrays"))?
            .clone(),
    };
    let mut sets = Vec::with_capacity(generators.len());
    for gen in &generators {
        let members = name_list(gen, "generator")?;
        let mut mask = 0u64;
        for name in &members {
            let &i = index
                .get(name)
                .ok_or_else(|| CliError::input(&format!("unknown name \"{name}\" in generator")))?;
            if mask >> i & 1 == 1 {
                return Err(CliError::input(&format!(
                    "duplicate name \"{name}\" within a generator"
                )));
            }
            mask |= 1 << i;
        }
        if members.len() < 2 {
            return Err(CliError::input("generator must have at least 2 elements"));
        }
        sets.push(mask);
    }
    let family = SetFamily::new(names.len(), sets)?;
    let b = BuildingSet::closure(&family)?.with_labels(names)?;
    Ok(Input::Building(b))
}

fn parse_graph(obj: &serde_json::Map<String, Value>) -> Result<Input, CliError> {
    let names = name_list(&obj["vertices"], "\"vertices\"")?;
    let index = index_names(&names, "\"vertices\"")?;
    let edges_value = match obj.get("edges") {
        None => Vec::new(),
        Some(v) => v
            .as_array()
            .ok_or_else(|| CliError::input("\"edges\" must be an array of 2-element arrays"))?
            .clone(),
    };
    let mut edges = Vec::with_capacity(edges_value.len());
    for e in &edges_value {
        let pair = name_list(e, "edge")?;
        if pair.len() != 2 {
            return Err(CliError::input("edge must have exactly 2 endpoints"));
        }
        let mut ends = [0usize; 2];
        for (slot, name) in ends.iter_mut().zip(&pair) {
            *slot = *index
                .get(name)
                .ok_or_else(|| CliError::input(&format!("unknown name \"{name}\" in edge")))?;
        }
        edges.push((ends[0], ends[1]));
    }
    let g = SimpleGraph::new(names.len(), &edges)?;
    Ok(Input::Graph(g, names))
}

/// One edge per line, "u v", names separated by whitespace; vertex order
/// follows first appearance.
fn parse_edge_lines(text: &str) -> Result<Input, CliError> {
    let mut names: Vec<String> = Vec::new();
    let mut index: BTreeMap<String, usize> = BTreeMap::new();
    let mut edges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        if tokens.len() != 2 {
            return Err(CliError::input(&format!(
                "line {}: expected \"u v\", found {} tokens",
                lineno + 1,
                tokens.len()
            )));
        }
        let mut ends = [0usize; 2];
        for (slot, token) in ends.iter_mut().zip(&tokens) {
            *slot = *index.entry(token.to_string()).or_insert_with(|| {
                names.push(token.to_string());
                names.len() - 1
            });
        }
        edges.push((ends[0], ends[1]));
    }
    if edges.is_empty() {
        return Err(CliError::input("edge-list input contains no edges"));
    }
    let g = SimpleGraph::new(names.len(), &edges)?;
    Ok(Input::Graph(g, names))
}
