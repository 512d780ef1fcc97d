//! Rendering of search results.
//!
//! Text output lists one line per cycle type with the undirected count and
//! the shortest length found. CSV and JSON carry no timing in the rows, so
//! two runs that differ only in worker count produce the same bytes once
//! `wall_time_ms` is left out.

use std::fmt::Write as _;

use serde::Serialize;

use crate::search::{SearchOptions, TypeTable};

pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Debug, Serialize)]
pub struct RowReport {
    #[serde(rename = "type")]
    pub cycle_type: usize,
    pub nsc: u64,
    pub directed: u64,
    pub min_length: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub report_version: u32,
    pub embedding: String,
    pub n: usize,
    pub genus: usize,
    pub root: usize,
    pub rows: Vec<RowReport>,
    pub visited: u64,
    pub closed: u64,
    pub contractible_directed: u64,
    pub splitting_directed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
    pub options: SearchOptions,
}

impl SearchReport {
    pub fn new(embedding: &str, n: usize, root: usize, table: &TypeTable, options: &SearchOptions) -> Self {
        SearchReport {
            report_version: REPORT_VERSION,
            embedding: embedding.to_string(),
            n,
            genus: table.genus,
            root,
            rows: table
                .rows
                .iter()
                .map(|r| RowReport { cycle_type: r.cycle_type, nsc: r.nsc(), directed: r.directed, min_length: r.min_length })
                .collect(),
            visited: table.visited,
            closed: table.closed,
            contractible_directed: table.contractible_directed,
            splitting_directed: table.splitting_directed,
            wall_time_ms: None,
            options: options.clone(),
        }
    }

    pub fn with_wall_time(mut self, ms: u64) -> Self {
        self.wall_time_ms = Some(ms);
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}: n = {}, genus {}, root {}", self.embedding, self.n, self.genus, self.root);
        let _ = writeln!(out, "{:>4} {:>8} {:>10}", "type", "NSC", "min length");
        for r in &self.rows {
            let min = r.min_length.map_or("-".to_string(), |m| m.to_string());
            let _ = writeln!(out, "{:>4} {:>8} {:>10}", r.cycle_type, r.nsc, min);
        }
        let _ = writeln!(out, "visited nodes        {}", self.visited);
        let _ = writeln!(out, "contractible (dir.)  {}", self.contractible_directed);
        let _ = writeln!(out, "splitting (dir.)     {}", self.splitting_directed);
        if let Some(ms) = self.wall_time_ms {
            let _ = writeln!(out, "wall time            {ms} ms");
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["embedding", "type", "nsc", "directed", "min_length"]).expect("in-memory write");
        for r in &self.rows {
            let min = r.min_length.map_or(String::new(), |m| m.to_string());
            w.write_record([&self.embedding, &r.cycle_type.to_string(), &r.nsc.to_string(), &r.directed.to_string(), &min])
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
