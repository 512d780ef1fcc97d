//! Splitting cycles on triangular embeddings of complete graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`map`] holds orientable rotation systems, face tracing, genus, edge
//!   contraction and gluing, plus [`map::RotationMap::cut_along`], the slow
//!   but independent separation oracle.
//! * [`voltage`] builds the cyclic (index one) coverings of one-vertex base
//!   maps with voltages in `Z_n`, including the Gross–Tucker family
//!   `M_{12s+7}` and the three bundled `K_19` base maps.
//! * [`search`] is the pruned depth-first traversal of the cycle tree with
//!   incremental red/blue dart colouring.
//! * [`families`] constructs the explicit type-1 (and type-`j`) splitting
//!   cycles of the Gross–Tucker embeddings and verifies them.
//! * [`report`] renders search results as text, CSV or JSON.

pub mod families;
pub mod format;
pub mod map;
pub mod report;
pub mod search;
pub mod voltage;

pub use map::{Dart, RotationMap, Subsurface};
pub use search::{enumerate, no_interior_bound, SearchOptions, SearchState, SplitVerdict, TypeTable};
pub use voltage::VoltageBaseMap;
