//! Pruned depth-first search of the cycle tree rooted at one vertex.
//!
//! Going down from `(v_0, ..., v_k)` to `(v_0, ..., v_k, v)` colours every
//! dart leaving `v_k` red or blue according to the side of the subpath
//! `(v_{k-1}, v_k, v)` it lies on. A splitting cycle induces a colouring in
//! which opposite darts agree and the coloured darts entering any vertex form
//! at most one red and one blue block, so partial colourings violating that
//! are cut off. Closing a cycle colours the two seam vertices, and the cycle
//! separates iff every vertex off the cycle sees a single colour, the same
//! for all of them (complete graphs only; general maps fall back to a
//! per-component check).

mod enumerate;
mod ledger;
mod state;

use serde::Serialize;
use thiserror::Error;

use crate::map::{MapError, Vertex};

pub use enumerate::{enumerate, enumerate_with, TypeRow, TypeTable};
pub use ledger::Ledger;
pub use state::{verify_cycle, Closure, Extension, PruneReason, SearchState};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Color {
    Red = 0,
    Blue = 1,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("{0} is not adjacent to the end of the path ({1})")]
    NotAdjacent(Vertex, Vertex),
    #[error("{0} is already on the path")]
    AlreadyOnPath(Vertex),
    #[error("cannot retract a path of length one")]
    PathTooShort,
    #[error("path cannot be closed into a cycle")]
    NotClosable,
    #[error("side genus is not integral (cycle length {length}, {arcs} arcs)")]
    NonIntegralGenus { length: usize, arcs: usize },
    #[error("root {0} is not a vertex")]
    RootOutOfRange(Vertex),
    #[error("the map is not a simplicial triangulation")]
    NotTriangulation,
    #[error("translation by one is not an automorphism of the map")]
    NotTransitive,
    #[error(transparent)]
    Map(#[from] MapError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchOptions {
    /// Longest cycle (in vertices) to explore.
    pub max_length: Option<usize>,
    /// Skip paths with two consecutive edges on a common face.
    pub prune_facial: bool,
    /// Apply the same filter to the two corners at the closing seam.
    pub prune_facial_seam: bool,
    /// Reject colourings with more than one red and one blue block at a vertex.
    pub test4: bool,
    /// Require `i -> i + 1` to be a map automorphism.
    pub assume_transitive: bool,
    #[serde(skip)]
    pub workers: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_length: None,
            prune_facial: true,
            prune_facial_seam: true,
            test4: true,
            assume_transitive: false,
            workers: 1,
        }
    }
}

/// A separating cycle and the genus of the side chosen for the count.
///
/// `side_color` is the colour of the side with no interior vertex when one
/// exists; `side_arcs` counts the darts of that colour.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Separation {
    pub length: usize,
    pub side_color: Color,
    pub side_arcs: usize,
    pub side_genus: usize,
    pub genus: usize,
}

impl Separation {
    pub fn cycle_type(&self) -> usize {
        self.side_genus.min(self.genus - self.side_genus)
    }

    pub fn is_contractible(&self) -> bool {
        self.cycle_type() == 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SplitVerdict {
    NonSeparating,
    Separating(Separation),
}

impl SplitVerdict {
    pub fn is_separating(&self) -> bool {
        matches!(self, SplitVerdict::Separating(_))
    }

    pub fn cycle_type(&self) -> Option<usize> {
        match self {
            SplitVerdict::Separating(s) => Some(s.cycle_type()),
            SplitVerdict::NonSeparating => None,
        }
    }

    pub fn is_splitting(&self) -> bool {
        matches!(self.cycle_type(), Some(t) if t > 0)
    }
}

/// Shortest cycle that can bound a side of genus `g_side` with no interior
/// vertex: such a side on `k` boundary vertices has `2k - 3 + 6 g_side`
/// edges, all among those `k` vertices.
pub fn no_interior_bound(g_side: usize) -> usize {
    let need = |k: usize| 2 * k - 3 + 6 * g_side;
    (3..).find(|&k| need(k) <= k * (k - 1) / 2).unwrap()
}
