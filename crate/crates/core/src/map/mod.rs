//! Orientable combinatorial maps encoded as rotation systems.
//!
//! A dart is addressed by the pair (tail vertex, index in the tail's
//! rotation) and flattened into a single `usize` id. Rotations are read as
//! counterclockwise. Faces are traced with one fixed convention: the dart
//! following `u -> v` in its face is `v -> w`, where `w` immediately follows
//! `u` in the rotation at `v`.

mod cut;
mod surgery;

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

pub use cut::Subsurface;

pub type Vertex = usize;
pub type DartId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("vertex {0} has an empty rotation")]
    EmptyRotation(Vertex),
    #[error("vertex {vertex} lists neighbor {neighbor} more than once")]
    RepeatedNeighbor { vertex: Vertex, neighbor: Vertex },
    #[error("vertex {vertex} lists itself as a neighbor")]
    SelfLoop { vertex: Vertex },
    #[error("vertex {vertex} lists neighbor {neighbor}, which is out of range")]
    VertexOutOfRange { vertex: Vertex, neighbor: Vertex },
    #[error("{u} lists {v} as a neighbor but {v} does not list {u}")]
    AsymmetricAdjacency { u: Vertex, v: Vertex },
    #[error("the map is not connected")]
    Disconnected,
    #[error("Euler characteristic {0} is odd")]
    OddChi(i64),
    #[error("walk is not a simple closed cycle: {0}")]
    NotACycle(String),
    #[error("no edge between {0} and {1}")]
    EdgeMissing(Vertex, Vertex),
    #[error("({0}, {1}, {2}) is not a face")]
    NotAFace(Vertex, Vertex, Vertex),
    #[error("the glued map is not simple")]
    ResultNotSimple,
    #[error("edge ({0}, {1}) cannot be contracted")]
    NotContractible(Vertex, Vertex),
    #[error("K4 on the sphere has no contractible edge")]
    IsK4Sphere,
    #[error("the map is not a simplicial triangulation")]
    NotTriangulation,
}

/// A directed edge `tail -> head`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub tail: Vertex,
    pub head: Vertex,
}

impl Dart {
    pub fn new(tail: Vertex, head: Vertex) -> Self {
        Dart { tail, head }
    }

    pub fn reversed(self) -> Self {
        Dart { tail: self.head, head: self.tail }
    }
}

/// An orientable map, immutable once validated.
#[derive(Clone)]
pub struct RotationMap {
    rotations: Vec<Vec<Vertex>>,
    offsets: Vec<DartId>,
    tails: Vec<Vertex>,
    opposite: Vec<DartId>,
    // per vertex: (neighbor, rotation index), sorted by neighbor
    lookup: Vec<Vec<(Vertex, usize)>>,
}

impl PartialEq for RotationMap {
    fn eq(&self, other: &Self) -> bool {
        self.rotations == other.rotations
    }
}

impl Eq for RotationMap {}

impl fmt::Debug for RotationMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RotationMap")
            .field("vertices", &self.vertex_count())
            .field("rotations", &self.rotations)
            .finish()
    }
}

impl RotationMap {
    /// Validates per-vertex rotations and builds the dart tables.
    pub fn from_rotations(rotations: Vec<Vec<Vertex>>) -> Result<Self, MapError> {
        let n = rotations.len();
        let mut lookup = Vec::with_capacity(n);
        for (v, rot) in rotations.iter().enumerate() {
            if rot.is_empty() {
                return Err(MapError::EmptyRotation(v));
            }
            let mut sorted: Vec<(Vertex, usize)> = rot.iter().copied().zip(0..).collect();
            sorted.sort_unstable();
            for w in sorted.windows(2) {
                if w[0].0 == w[1].0 {
                    return Err(MapError::RepeatedNeighbor { vertex: v, neighbor: w[0].0 });
                }
            }
            for &(u, _) in &sorted {
                if u >= n {
                    return Err(MapError::VertexOutOfRange { vertex: v, neighbor: u });
                }
                if u == v {
                    return Err(MapError::SelfLoop { vertex: v });
                }
            }
            lookup.push(sorted);
        }

        let mut offsets = Vec::with_capacity(n + 1);
        let mut total = 0;
        for rot in &rotations {
            offsets.push(total);
            total += rot.len();
        }
        offsets.push(total);

        let mut tails = Vec::with_capacity(total);
        let mut opposite = vec![0; total];
        for (v, rot) in rotations.iter().enumerate() {
            for (i, &u) in rot.iter().enumerate() {
                tails.push(v);
                let back = match lookup[u].binary_search_by_key(&v, |&(w, _)| w) {
                    Ok(k) => lookup[u][k].1,
                    Err(_) => return Err(MapError::AsymmetricAdjacency { u: v, v: u }),
                };
                opposite[offsets[v] + i] = offsets[u] + back;
            }
        }

        let map = RotationMap { rotations, offsets, tails, opposite, lookup };
        if !map.is_connected() {
            return Err(MapError::Disconnected);
        }
        Ok(map)
    }

    /// Builds a map from consistently oriented triangles: `(a, b, c)` is
    /// traversed `a -> b -> c -> a` by face tracing.
    pub fn from_triangles(vertex_count: usize, triangles: &[[Vertex; 3]]) -> Result<Self, MapError> {
        // at vertex b of face (a, b, c), c immediately follows a
        let mut follow: Vec<Vec<(Vertex, Vertex)>> = vec![Vec::new(); vertex_count];
        for t in triangles {
            for k in 0..3 {
                let (a, b, c) = (t[k], t[(k + 1) % 3], t[(k + 2) % 3]);
                if b >= vertex_count {
                    return Err(MapError::VertexOutOfRange { vertex: b, neighbor: b });
                }
                follow[b].push((a, c));
            }
        }
        let mut rotations = Vec::with_capacity(vertex_count);
        for (v, pairs) in follow.iter().enumerate() {
            if pairs.is_empty() {
                return Err(MapError::EmptyRotation(v));
            }
            let mut rot = vec![pairs[0].0];
            let mut cur = pairs[0].0;
            loop {
                let next = pairs
                    .iter()
                    .find(|p| p.0 == cur)
                    .map(|p| p.1)
                    .ok_or(MapError::NotTriangulation)?;
                if next == rot[0] {
                    break;
                }
                if rot.len() > pairs.len() {
                    return Err(MapError::NotTriangulation);
                }
                rot.push(next);
                cur = next;
            }
            if rot.len() != pairs.len() {
                // the corners at v do not form a single disk
                return Err(MapError::NotTriangulation);
            }
            rotations.push(rot);
        }
        RotationMap::from_rotations(rotations)
    }

    fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in &self.rotations[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == n
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn dart_count(&self) -> usize {
        self.tails.len()
    }

    pub fn edge_count(&self) -> usize {
        self.tails.len() / 2
    }

    pub fn rotations(&self) -> &[Vec<Vertex>] {
        &self.rotations
    }

    pub fn rotation(&self, v: Vertex) -> &[Vertex] {
        &self.rotations[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.rotations[v].len()
    }

    /// Id of the dart leaving `v` at rotation index `index`.
    #[inline]
    pub fn dart_at(&self, v: Vertex, index: usize) -> DartId {
        self.offsets[v] + index
    }

    #[inline]
    pub fn tail(&self, d: DartId) -> Vertex {
        self.tails[d]
    }

    #[inline]
    pub fn head(&self, d: DartId) -> Vertex {
        self.tails[self.opposite[d]]
    }

    /// Index of `d` in the rotation at its tail.
    #[inline]
    pub fn index_of(&self, d: DartId) -> usize {
        d - self.offsets[self.tails[d]]
    }

    #[inline]
    pub fn opposite(&self, d: DartId) -> DartId {
        self.opposite[d]
    }

    pub fn dart(&self, d: DartId) -> Dart {
        Dart::new(self.tail(d), self.head(d))
    }

    /// Next dart counterclockwise around the tail of `d`.
    #[inline]
    pub fn rot_next(&self, d: DartId) -> DartId {
        let v = self.tails[d];
        let i = d - self.offsets[v] + 1;
        if i == self.rotations[v].len() {
            self.offsets[v]
        } else {
            self.offsets[v] + i
        }
    }

    #[inline]
    pub fn rot_prev(&self, d: DartId) -> DartId {
        let v = self.tails[d];
        let i = d - self.offsets[v];
        if i == 0 {
            self.offsets[v] + self.rotations[v].len() - 1
        } else {
            d - 1
        }
    }

    /// The dart after `d` along its face.
    #[inline]
    pub fn face_next(&self, d: DartId) -> DartId {
        self.rot_next(self.opposite[d])
    }

    pub fn find_dart(&self, tail: Vertex, head: Vertex) -> Option<DartId> {
        let row = self.lookup.get(tail)?;
        row.binary_search_by_key(&head, |&(w, _)| w)
            .ok()
            .map(|k| self.offsets[tail] + row[k].1)
    }

    /// Rotation index of `neighbor` at `v`.
    pub fn position(&self, v: Vertex, neighbor: Vertex) -> Option<usize> {
        self.find_dart(v, neighbor).map(|d| d - self.offsets[v])
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.find_dart(u, v).is_some()
    }

    pub fn darts(&self) -> impl Iterator<Item = Dart> + '_ {
        (0..self.dart_count()).map(move |d| self.dart(d))
    }

    /// Undirected edges as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.darts().filter(|d| d.tail < d.head).map(|d| (d.tail, d.head))
    }

    /// Face id of every dart, and the number of faces.
    pub fn face_labels(&self) -> (Vec<usize>, usize) {
        let mut label = vec![usize::MAX; self.dart_count()];
        let mut count = 0;
        for start in 0..self.dart_count() {
            if label[start] != usize::MAX {
                continue;
            }
            let mut d = start;
            loop {
                label[d] = count;
                d = self.face_next(d);
                if d == start {
                    break;
                }
            }
            count += 1;
        }
        (label, count)
    }

    /// Faces as cycles of dart ids, in order of their smallest dart.
    pub fn face_darts(&self) -> Vec<Vec<DartId>> {
        let mut seen = vec![false; self.dart_count()];
        let mut faces = Vec::new();
        for start in 0..self.dart_count() {
            if seen[start] {
                continue;
            }
            let mut face = Vec::new();
            let mut d = start;
            loop {
                seen[d] = true;
                face.push(d);
                d = self.face_next(d);
                if d == start {
                    break;
                }
            }
            faces.push(face);
        }
        faces
    }

    /// Faces as vertex cycles (tail of each dart, in traversal order).
    pub fn faces(&self) -> Vec<Vec<Vertex>> {
        self.face_darts()
            .into_iter()
            .map(|f| f.into_iter().map(|d| self.tail(d)).collect())
            .collect()
    }

    pub fn face_count(&self) -> usize {
        self.face_labels().1
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    pub fn genus(&self) -> Result<usize, MapError> {
        let chi = self.euler_characteristic();
        if chi % 2 != 0 || chi > 2 {
            return Err(MapError::OddChi(chi));
        }
        Ok(((2 - chi) / 2) as usize)
    }

    /// Whether `(a, b, c)` is traced as a face, in this orientation.
    pub fn is_oriented_face(&self, a: Vertex, b: Vertex, c: Vertex) -> bool {
        match self.find_dart(a, b) {
            Some(d) => {
                let e = self.face_next(d);
                self.head(e) == c && self.head(self.face_next(e)) == a
            }
            None => false,
        }
    }

    /// Whether `{a, b, c}` bounds a face in either orientation.
    pub fn is_face(&self, a: Vertex, b: Vertex, c: Vertex) -> bool {
        self.is_oriented_face(a, b, c) || self.is_oriented_face(a, c, b)
    }

    /// Simple graph, every face a triangle, and not the 3-cycle on a sphere.
    pub fn is_simplicial_triangulation(&self) -> bool {
        if self.vertex_count() <= 3 {
            return false;
        }
        self.face_darts().iter().all(|f| f.len() == 3)
    }

    pub fn is_complete_graph(&self) -> bool {
        let n = self.vertex_count();
        self.rotations.iter().all(|r| r.len() + 1 == n)
    }

    /// Checks that `cycle` is a simple closed walk along edges of the map.
    pub fn check_cycle(&self, cycle: &[Vertex]) -> Result<(), MapError> {
        if cycle.len() < 3 {
            return Err(MapError::NotACycle(format!("length {} is below 3", cycle.len())));
        }
        let mut seen = HashSet::new();
        for &v in cycle {
            if v >= self.vertex_count() {
                return Err(MapError::NotACycle(format!("vertex {v} out of range")));
            }
            if !seen.insert(v) {
                return Err(MapError::NotACycle(format!("vertex {v} repeats")));
            }
        }
        for (i, &u) in cycle.iter().enumerate() {
            let v = cycle[(i + 1) % cycle.len()];
            if !self.has_edge(u, v) {
                return Err(MapError::EdgeMissing(u, v));
            }
        }
        Ok(())
    }

    /// Maps every vertex label through `f`; `f` must be a permutation.
    pub fn relabeled(&self, f: impl Fn(Vertex) -> Vertex) -> Result<Self, MapError> {
        let mut rotations = vec![Vec::new(); self.vertex_count()];
        for (v, rot) in self.rotations.iter().enumerate() {
            rotations[f(v)] = rot.iter().map(|&u| f(u)).collect();
        }
        RotationMap::from_rotations(rotations)
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn tetrahedron_counts() {
        let m = tetrahedron();
        assert_eq!((m.vertex_count(), m.edge_count(), m.face_count()), (4, 6, 4));
        assert_eq!(m.genus().unwrap(), 0);
        assert!(m.is_simplicial_triangulation());
        assert!(m.faces().iter().all(|f| f.len() == 3));
    }

    #[test]
    fn k7_is_a_torus() {
        let m = k7();
        assert_eq!((m.vertex_count(), m.edge_count(), m.face_count()), (7, 21, 14));
        assert_eq!(m.euler_characteristic(), 0);
        assert_eq!(m.genus().unwrap(), 1);
        assert!(m.is_simplicial_triangulation());
        assert!(m.is_complete_graph());
    }

    #[test]
    fn icosahedron_is_a_sphere() {
        let m = icosahedron();
        assert_eq!((m.vertex_count(), m.edge_count(), m.face_count()), (12, 30, 20));
        assert_eq!(m.genus().unwrap(), 0);
        assert!(m.is_simplicial_triangulation());
    }

    #[test]
    fn asymmetric_adjacency_rejected() {
        let err = RotationMap::from_rotations(vec![vec![1, 2], vec![2], vec![0, 1]]).unwrap_err();
        assert!(matches!(err, MapError::AsymmetricAdjacency { .. }));
    }

    #[test]
    fn repeated_and_empty_rejected() {
        assert_eq!(
            RotationMap::from_rotations(vec![vec![1, 1], vec![0]]).unwrap_err(),
            MapError::RepeatedNeighbor { vertex: 0, neighbor: 1 }
        );
        assert_eq!(
            RotationMap::from_rotations(vec![vec![1], vec![0], vec![]]).unwrap_err(),
            MapError::EmptyRotation(2)
        );
        assert_eq!(
            RotationMap::from_rotations(vec![vec![1], vec![0], vec![3], vec![2]]).unwrap_err(),
            MapError::Disconnected
        );
    }

    #[test]
    fn quadrilateral_face_is_not_a_triangulation() {
        // square on the sphere: two quadrilateral faces
        let m = RotationMap::from_rotations(vec![vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]])
            .unwrap();
        assert_eq!(m.genus().unwrap(), 0);
        assert!(!m.is_simplicial_triangulation());
        // triangle on the sphere is excluded too
        let t = RotationMap::from_rotations(vec![vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap();
        assert!(!t.is_simplicial_triangulation());
    }

    #[test]
    fn darts_are_an_involution_and_faces_partition() {
        for m in [tetrahedron(), k7(), icosahedron()] {
            let (labels, count) = m.face_labels();
            assert!(labels.iter().all(|&l| l < count));
            for d in 0..m.dart_count() {
                assert_eq!(m.opposite(m.opposite(d)), d);
                assert_eq!(m.dart(m.opposite(d)), m.dart(d).reversed());
                assert_eq!(m.rot_prev(m.rot_next(d)), d);
            }
            let total: usize = m.face_darts().iter().map(Vec::len).sum();
            assert_eq!(total, m.dart_count());
        }
    }

    #[test]
    fn face_orientation_follows_convention() {
        let m = tetrahedron();
        // at vertex 1, 3 follows 0, so 0 -> 1 -> 3 is a face
        assert!(m.is_oriented_face(0, 1, 3));
        assert!(!m.is_oriented_face(0, 3, 1));
        assert!(m.is_face(0, 3, 1));
    }

    #[test]
    fn check_cycle_errors() {
        let m = k7();
        assert!(m.check_cycle(&[0, 1, 2]).is_ok());
        assert!(matches!(m.check_cycle(&[0, 1]), Err(MapError::NotACycle(_))));
        assert!(matches!(m.check_cycle(&[0, 1, 0, 2]), Err(MapError::NotACycle(_))));
        let ico = icosahedron();
        assert!(matches!(ico.check_cycle(&[0, 11, 1]), Err(MapError::EdgeMissing(0, 11))));
    }
}
