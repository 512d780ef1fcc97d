use serde::Serialize;

use super::{Color, Ledger, SearchError, SearchOptions, Separation, SplitVerdict};
use crate::map::{DartId, RotationMap, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PruneReason {
    /// Two consecutive path edges bound a common face.
    FacialCorner,
    /// A dart and its opposite got different colours.
    OppositeColor,
    /// The dart before the new one around its head has the other colour.
    PredecessorColor,
    /// The dart after the new one around its head has the other colour.
    SuccessorColor,
    /// Coloured darts at a vertex no longer form one red and one blue block.
    Interleaved,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extension {
    Extended,
    Pruned(PruneReason),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Closure {
    Verdict(SplitVerdict),
    Rejected(PruneReason),
}

/// A node of the cycle tree together with its colouring.
///
/// Every coloured dart is recorded in the journal under the path step that
/// coloured it, so retracting a step restores the previous state exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchState<'m> {
    map: &'m RotationMap,
    genus: usize,
    complete: bool,
    prune_facial: bool,
    prune_facial_seam: bool,
    test4: bool,
    path: Vec<Vertex>,
    on_path: Vec<bool>,
    colors: Vec<Option<Color>>,
    ledgers: Vec<Ledger>,
    totals: [usize; 2],
    journal: Vec<DartId>,
    frames: Vec<usize>,
}

impl<'m> SearchState<'m> {
    pub fn new(map: &'m RotationMap, root: Vertex, options: &SearchOptions) -> Result<Self, SearchError> {
        let genus = map.genus()?;
        Self::with_genus(map, genus, root, options)
    }

    pub(crate) fn with_genus(
        map: &'m RotationMap,
        genus: usize,
        root: Vertex,
        options: &SearchOptions,
    ) -> Result<Self, SearchError> {
        let n = map.vertex_count();
        if root >= n {
            return Err(SearchError::RootOutOfRange(root));
        }
        let mut on_path = vec![false; n];
        on_path[root] = true;
        Ok(SearchState {
            map,
            genus,
            complete: map.is_complete_graph(),
            prune_facial: options.prune_facial,
            prune_facial_seam: options.prune_facial && options.prune_facial_seam,
            test4: options.test4,
            path: vec![root],
            on_path,
            colors: vec![None; map.dart_count()],
            ledgers: (0..n).map(|v| Ledger::new(map.degree(v))).collect(),
            totals: [0; 2],
            journal: Vec::new(),
            frames: Vec::new(),
        })
    }

    pub fn path(&self) -> &[Vertex] {
        &self.path
    }

    pub fn map(&self) -> &'m RotationMap {
        self.map
    }

    pub fn is_on_path(&self, v: Vertex) -> bool {
        self.on_path[v]
    }

    pub fn dart_color(&self, d: DartId) -> Option<Color> {
        self.colors[d]
    }

    pub fn ledger(&self, v: Vertex) -> &Ledger {
        &self.ledgers[v]
    }

    pub fn colored_count(&self, c: Color) -> usize {
        self.totals[c as usize]
    }

    /// True when no dart is coloured and no journal frame is open.
    pub fn is_clean(&self) -> bool {
        self.journal.is_empty()
            && self.frames.is_empty()
            && self.totals == [0, 0]
            && self.ledgers.iter().all(Ledger::is_empty)
    }

    fn last(&self) -> Vertex {
        *self.path.last().unwrap()
    }

    /// Whether `(a, b, c)` has both edges on one face around `b`.
    fn facial_corner(&self, a: Vertex, b: Vertex, c: Vertex) -> bool {
        let rot = self.map.rotation(b);
        let k = rot.len();
        let pa = self.map.position(b, a).unwrap();
        rot[(pa + 1) % k] == c || rot[(pa + k - 1) % k] == c
    }

    fn color_dart(&mut self, d: DartId, c: Color) -> Result<(), PruneReason> {
        let map = self.map;
        self.colors[d] = Some(c);
        self.totals[c as usize] += 1;
        self.journal.push(d);

        let back = map.opposite(d);
        let w = map.tail(back);
        let pos = map.index_of(back);
        if matches!(self.colors[back], Some(o) if o != c) {
            self.ledgers[w].insert(pos, c);
            return Err(PruneReason::OppositeColor);
        }
        let ledger = &mut self.ledgers[w];
        ledger.insert(pos, c);
        let deg = map.degree(w);
        if ledger.color_at((pos + deg - 1) % deg) == Some(c.other()) {
            return Err(PruneReason::PredecessorColor);
        }
        if ledger.color_at((pos + 1) % deg) == Some(c.other()) {
            return Err(PruneReason::SuccessorColor);
        }
        if self.test4 && ledger.alternations() > 2 {
            return Err(PruneReason::Interleaved);
        }
        Ok(())
    }

    /// Colours the darts around `center` for the subpath `(prev, center,
    /// next)`: those strictly after `next` and before `prev` counterclockwise
    /// are red, the rest blue.
    fn color_vertex(&mut self, prev: Vertex, center: Vertex, next: Vertex) -> Result<(), PruneReason> {
        let map = self.map;
        let deg = map.degree(center);
        let ip = map.position(center, prev).unwrap();
        let iq = map.position(center, next).unwrap();
        let mut i = (iq + 1) % deg;
        let mut c = Color::Red;
        while i != iq {
            if i == ip {
                c = Color::Blue;
            } else {
                self.color_dart(map.dart_at(center, i), c)?;
            }
            i = (i + 1) % deg;
        }
        Ok(())
    }

    fn rollback_frame(&mut self) {
        let start = self.frames.pop().expect("no open frame");
        while self.journal.len() > start {
            let d = self.journal.pop().unwrap();
            let c = self.colors[d].take().unwrap();
            self.totals[c as usize] -= 1;
            let back = self.map.opposite(d);
            self.ledgers[self.map.tail(back)].remove(self.map.index_of(back));
        }
    }

    /// Appends `v` to the path, colouring the darts of the current end.
    pub fn extend(&mut self, v: Vertex) -> Result<Extension, SearchError> {
        let end = self.last();
        if v >= self.on_path.len() || !self.map.has_edge(end, v) {
            return Err(SearchError::NotAdjacent(v, end));
        }
        if self.on_path[v] {
            return Err(SearchError::AlreadyOnPath(v));
        }
        let k = self.path.len();
        if k >= 2 && self.prune_facial && self.facial_corner(self.path[k - 2], end, v) {
            return Ok(Extension::Pruned(PruneReason::FacialCorner));
        }
        self.frames.push(self.journal.len());
        if k >= 2 {
            if let Err(reason) = self.color_vertex(self.path[k - 2], end, v) {
                self.rollback_frame();
                return Ok(Extension::Pruned(reason));
            }
        }
        self.path.push(v);
        self.on_path[v] = true;
        Ok(Extension::Extended)
    }

    /// Drops the last vertex and uncolours what its step coloured.
    pub fn retract(&mut self) -> Result<Vertex, SearchError> {
        if self.path.len() < 2 {
            return Err(SearchError::PathTooShort);
        }
        self.rollback_frame();
        let v = self.path.pop().unwrap();
        self.on_path[v] = false;
        Ok(v)
    }

    /// Closes the path into a cycle and decides whether it separates. All
    /// temporary colours are removed before returning.
    pub fn close(&mut self) -> Result<Closure, SearchError> {
        let m = self.path.len();
        let (root, end) = (self.path[0], self.last());
        if m < 3 || !self.map.has_edge(end, root) {
            return Err(SearchError::NotClosable);
        }
        let (before_end, after_root) = (self.path[m - 2], self.path[1]);
        if self.prune_facial_seam
            && (self.facial_corner(before_end, end, root) || self.facial_corner(end, root, after_root))
        {
            return Ok(Closure::Rejected(PruneReason::FacialCorner));
        }
        self.frames.push(self.journal.len());
        if let Err(reason) = self.color_vertex(before_end, end, root) {
            self.rollback_frame();
            return Ok(Closure::Rejected(reason));
        }
        self.frames.push(self.journal.len());
        if let Err(reason) = self.color_vertex(end, root, after_root) {
            self.rollback_frame();
            self.rollback_frame();
            return Ok(Closure::Rejected(reason));
        }
        let verdict = if self.complete { self.complete_verdict() } else { self.general_verdict() };
        self.rollback_frame();
        self.rollback_frame();
        verdict.map(Closure::Verdict)
    }

    fn side_genus(&self, arcs: usize) -> Result<usize, SearchError> {
        let len = self.path.len();
        let num = arcs as i64 - 2 * len as i64 + 6;
        if num < 0 || num % 12 != 0 {
            return Err(SearchError::NonIntegralGenus { length: len, arcs });
        }
        Ok((num / 12) as usize)
    }

    /// Separation test for complete graphs: every vertex off the cycle must
    /// see one colour, the same for all of them; the other side then has no
    /// interior vertex.
    fn complete_verdict(&self) -> Result<SplitVerdict, SearchError> {
        let len = self.path.len();
        let mut seen: Option<Color> = None;
        for w in 0..self.on_path.len() {
            if self.on_path[w] {
                continue;
            }
            let l = &self.ledgers[w];
            let c = match (l.count(Color::Red) > 0, l.count(Color::Blue) > 0) {
                (true, true) => return Ok(SplitVerdict::NonSeparating),
                (true, false) => Color::Red,
                (false, true) => Color::Blue,
                (false, false) => unreachable!("vertex off a cycle of a complete graph"),
            };
            match seen {
                Some(s) if s != c => return Ok(SplitVerdict::NonSeparating),
                _ => seen = Some(c),
            }
        }
        let side_color = match seen {
            Some(d) => d.other(),
            None => {
                // Hamiltonian: both sides are free of interior vertices
                let red = self.side_genus(self.totals[Color::Red as usize])?;
                let blue = self.side_genus(self.totals[Color::Blue as usize])?;
                if red + blue != self.genus {
                    return Err(SearchError::NonIntegralGenus {
                        length: len,
                        arcs: self.totals[0] + self.totals[1],
                    });
                }
                Color::Red
            }
        };
        let arcs = self.totals[side_color as usize];
        let side_genus = self.side_genus(arcs)?;
        if side_genus > self.genus {
            return Err(SearchError::NonIntegralGenus { length: len, arcs });
        }
        Ok(SplitVerdict::Separating(Separation {
            length: len,
            side_color,
            side_arcs: arcs,
            side_genus,
            genus: self.genus,
        }))
    }

    /// Separation test for arbitrary triangulations: each component of the
    /// graph minus the cycle must see one colour; side genera then follow
    /// from Euler's formula on each side.
    fn general_verdict(&self) -> Result<SplitVerdict, SearchError> {
        let map = self.map;
        let n = map.vertex_count();
        let len = self.path.len();
        let mut comp_color: Vec<Option<Color>> = vec![None; n];
        let mut visited = vec![false; n];
        let mut interior = [0usize; 2];
        let mut degree_sum = [0usize; 2];
        for start in 0..n {
            if self.on_path[start] || visited[start] {
                continue;
            }
            let mut members = vec![start];
            visited[start] = true;
            let mut color: Option<Color> = None;
            let mut i = 0;
            while i < members.len() {
                let w = members[i];
                i += 1;
                let l = &self.ledgers[w];
                for c in [Color::Red, Color::Blue] {
                    if l.count(c) > 0 {
                        match color {
                            Some(o) if o != c => return Ok(SplitVerdict::NonSeparating),
                            _ => color = Some(c),
                        }
                    }
                }
                for &u in map.rotation(w) {
                    if !self.on_path[u] && !visited[u] {
                        visited[u] = true;
                        members.push(u);
                    }
                }
            }
            let c = color.expect("every component touches the cycle");
            for &w in &members {
                comp_color[w] = Some(c);
                degree_sum[c as usize] += map.degree(w);
            }
            interior[c as usize] += members.len();
        }
        let mut genera = [0usize; 2];
        for c in [Color::Red, Color::Blue] {
            let i = c as usize;
            let arcs = self.totals[i];
            let bad = SearchError::NonIntegralGenus { length: len, arcs };
            let twice_edges = 2 * len + arcs + degree_sum[i];
            if !twice_edges.is_multiple_of(2) {
                return Err(bad);
            }
            let edges = twice_edges / 2;
            if !(2 * edges - len).is_multiple_of(3) {
                return Err(bad);
            }
            let faces = (2 * edges - len) / 3;
            let chi = (len + interior[i]) as i64 - edges as i64 + faces as i64;
            if chi > 1 || (1 - chi) % 2 != 0 {
                return Err(bad);
            }
            genera[i] = ((1 - chi) / 2) as usize;
        }
        if genera[0] + genera[1] != self.genus {
            return Err(SearchError::NonIntegralGenus { length: len, arcs: self.totals[0] + self.totals[1] });
        }
        // prefer a side without interior vertices, as in the complete case
        let side_color = if interior[Color::Red as usize] > 0 && interior[Color::Blue as usize] == 0 {
            Color::Blue
        } else {
            Color::Red
        };
        Ok(SplitVerdict::Separating(Separation {
            length: len,
            side_color,
            side_arcs: self.totals[side_color as usize],
            side_genus: genera[side_color as usize],
            genus: self.genus,
        }))
    }
}

/// Walks `cycle` from its first vertex with the colouring tests and closes
/// it. Pruning at any step comes back as [`Closure::Rejected`].
pub fn verify_cycle(
    map: &RotationMap,
    cycle: &[Vertex],
    options: &SearchOptions,
) -> Result<Closure, SearchError> {
    map.check_cycle(cycle)?;
    let mut state = SearchState::new(map, cycle[0], options)?;
    for &v in &cycle[1..] {
        if let Extension::Pruned(reason) = state.extend(v)? {
            return Ok(Closure::Rejected(reason));
        }
    }
    state.close()
}
