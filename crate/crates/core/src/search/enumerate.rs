use rayon::prelude::*;
use serde::Serialize;

use super::{Closure, Extension, SearchError, SearchOptions, SearchState, SplitVerdict};
use crate::map::{RotationMap, Vertex};
use crate::voltage::check_translation_automorphism;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TypeRow {
    pub cycle_type: usize,
    /// Splitting cycles of this type through the root, each direction counted.
    pub directed: u64,
    pub min_length: Option<usize>,
}

impl TypeRow {
    /// Undirected count.
    pub fn nsc(&self) -> u64 {
        self.directed / 2
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeTable {
    pub genus: usize,
    pub rows: Vec<TypeRow>,
    /// Path nodes that survived every test, the root excluded.
    pub visited: u64,
    /// Closure attempts that reached a verdict.
    pub closed: u64,
    pub contractible_directed: u64,
    pub splitting_directed: u64,
}

impl TypeTable {
    pub fn new(genus: usize) -> Self {
        TypeTable {
            genus,
            rows: (1..=genus / 2)
                .map(|t| TypeRow { cycle_type: t, directed: 0, min_length: None })
                .collect(),
            visited: 0,
            closed: 0,
            contractible_directed: 0,
            splitting_directed: 0,
        }
    }

    pub fn row(&self, cycle_type: usize) -> Option<&TypeRow> {
        self.rows.get(cycle_type.checked_sub(1)?)
    }

    pub fn nsc(&self) -> Vec<u64> {
        self.rows.iter().map(TypeRow::nsc).collect()
    }

    pub fn min_lengths(&self) -> Vec<Option<usize>> {
        self.rows.iter().map(|r| r.min_length).collect()
    }

    pub fn record(&mut self, verdict: &SplitVerdict) {
        self.closed += 1;
        let SplitVerdict::Separating(sep) = verdict else { return };
        match sep.cycle_type() {
            0 => self.contractible_directed += 1,
            t => {
                self.splitting_directed += 1;
                let row = &mut self.rows[t - 1];
                row.directed += 1;
                row.min_length = Some(row.min_length.map_or(sep.length, |m| m.min(sep.length)));
            }
        }
    }

    pub fn merge(mut self, other: TypeTable) -> TypeTable {
        debug_assert_eq!(self.genus, other.genus);
        for (a, b) in self.rows.iter_mut().zip(other.rows) {
            a.directed += b.directed;
            a.min_length = match (a.min_length, b.min_length) {
                (Some(x), Some(y)) => Some(x.min(y)),
                (x, y) => x.or(y),
            };
        }
        self.visited += other.visited;
        self.closed += other.closed;
        self.contractible_directed += other.contractible_directed;
        self.splitting_directed += other.splitting_directed;
        self
    }
}

fn check_input(map: &RotationMap, root: Vertex, options: &SearchOptions) -> Result<usize, SearchError> {
    if root >= map.vertex_count() {
        return Err(SearchError::RootOutOfRange(root));
    }
    if !map.is_simplicial_triangulation() {
        return Err(SearchError::NotTriangulation);
    }
    if options.assume_transitive && !check_translation_automorphism(map) {
        return Err(SearchError::NotTransitive);
    }
    Ok(map.genus()?)
}

struct Walker<'s, 'm, F> {
    state: &'s mut SearchState<'m>,
    max_length: usize,
    table: TypeTable,
    visit: F,
}

impl<F: FnMut(&SearchState, &Closure)> Walker<'_, '_, F> {
    fn descend(&mut self) -> Result<(), SearchError> {
        let path = self.state.path();
        let (root, end, len) = (path[0], *path.last().unwrap(), path.len());
        let map = self.state.map();
        if len >= 3 && map.has_edge(end, root) {
            let closure = self.state.close()?;
            if let Closure::Verdict(v) = &closure {
                self.table.record(v);
            }
            (self.visit)(self.state, &closure);
        }
        if len >= self.max_length {
            return Ok(());
        }
        for &v in map.rotation(end) {
            if self.state.is_on_path(v) {
                continue;
            }
            if self.state.extend(v)? == Extension::Extended {
                self.table.visited += 1;
                self.descend()?;
                self.state.retract()?;
            }
        }
        Ok(())
    }
}

/// Counts splitting cycles through `root` by type. With more than one
/// worker the cycle tree is split by its first two path vertices.
pub fn enumerate(map: &RotationMap, root: Vertex, options: &SearchOptions) -> Result<TypeTable, SearchError> {
    let genus = check_input(map, root, options)?;
    let max_length = options.max_length.unwrap_or(usize::MAX);
    if options.workers <= 1 {
        return run(map, genus, &[root], max_length, options, |_, _| {});
    }

    // the first level is cheap, so walk it here and hand out its children
    let mut top = TypeTable::new(genus);
    let mut prefixes = Vec::new();
    let mut state = SearchState::with_genus(map, genus, root, options)?;
    if max_length >= 2 {
        for &v1 in map.rotation(root) {
            state.extend(v1)?;
            top.visited += 1;
            if max_length >= 3 {
                for &v2 in map.rotation(v1) {
                    if v2 != root && state.extend(v2)? == Extension::Extended {
                        top.visited += 1;
                        state.retract()?;
                        prefixes.push([root, v1, v2]);
                    }
                }
            }
            state.retract()?;
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.workers)
        .build()
        .expect("thread pool");
    let parts: Result<Vec<TypeTable>, SearchError> = pool.install(|| {
        prefixes
            .par_iter()
            .map(|p| run(map, genus, p, max_length, options, |_, _| {}))
            .collect()
    });
    Ok(parts?.into_iter().fold(top, TypeTable::merge))
}

/// Sequential enumeration that also reports every closure to `visit`.
pub fn enumerate_with<F>(
    map: &RotationMap,
    root: Vertex,
    options: &SearchOptions,
    visit: F,
) -> Result<TypeTable, SearchError>
where
    F: FnMut(&SearchState, &Closure),
{
    let genus = check_input(map, root, options)?;
    run(map, genus, &[root], options.max_length.unwrap_or(usize::MAX), options, visit)
}

fn run<F>(
    map: &RotationMap,
    genus: usize,
    prefix: &[Vertex],
    max_length: usize,
    options: &SearchOptions,
    visit: F,
) -> Result<TypeTable, SearchError>
where
    F: FnMut(&SearchState, &Closure),
{
    let mut state = SearchState::with_genus(map, genus, prefix[0], options)?;
    for &v in &prefix[1..] {
        state.extend(v)?;
    }
    let mut walker = Walker { state: &mut state, max_length, table: TypeTable::new(genus), visit };
    walker.descend()?;
    let table = walker.table;
    for _ in 1..prefix.len() {
        state.retract()?;
    }
    debug_assert!(state.is_clean());
    Ok(table)
}
