use std::collections::HashSet;

use serde::Serialize;

use super::{MapError, RotationMap, Vertex};

/// One connected piece of the surface after cutting along a cycle.
///
/// Counts refer to the cut surface: a cycle vertex or edge bordering the
/// piece from both sides is counted twice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Subsurface {
    pub faces: Vec<usize>,
    pub boundary_cycles: usize,
    pub vertices: usize,
    pub edges: usize,
    pub face_count: usize,
    pub chi: i64,
    pub genus: usize,
}

impl Subsurface {
    /// Number of vertices of the piece that are not on the cutting cycle.
    pub fn interior_vertices(&self, cycle_len: usize) -> usize {
        self.vertices - self.boundary_cycles * cycle_len
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl RotationMap {
    /// Cuts the surface along `cycle` and returns its pieces.
    ///
    /// Faces are joined across every edge that is not a cycle edge; the
    /// cycle separates the surface iff more than one piece comes back. This
    /// is a plain union-find over faces and shares nothing with the colouring
    /// search, so it serves as its oracle.
    pub fn cut_along(&self, cycle: &[Vertex]) -> Result<Vec<Subsurface>, MapError> {
        self.check_cycle(cycle)?;
        let len = cycle.len();
        let (face_of, face_count) = self.face_labels();

        let mut cycle_edges = HashSet::with_capacity(len);
        for i in 0..len {
            let (u, v) = (cycle[i], cycle[(i + 1) % len]);
            cycle_edges.insert((u.min(v), u.max(v)));
        }
        let mut on_cycle = vec![false; self.vertex_count()];
        for &v in cycle {
            on_cycle[v] = true;
        }

        let mut parent: Vec<usize> = (0..face_count).collect();
        for d in 0..self.dart_count() {
            let (u, v) = (self.tail(d), self.head(d));
            if u < v && !cycle_edges.contains(&(u, v)) {
                let a = find(&mut parent, face_of[d]);
                let b = find(&mut parent, face_of[self.opposite(d)]);
                parent[a] = b;
            }
        }
        let roots: Vec<usize> = (0..face_count).map(|f| find(&mut parent, f)).collect();
        let mut ids: Vec<usize> = roots.clone();
        ids.sort_unstable();
        ids.dedup();
        let comp_of = |f: usize| ids.binary_search(&roots[f]).unwrap();
        let k = ids.len();

        let mut faces = vec![Vec::new(); k];
        for f in 0..face_count {
            faces[comp_of(f)].push(f);
        }

        // each edge side and each vertex wedge belongs to exactly one piece
        let mut edge_sides = vec![0i64; k];
        for d in 0..self.dart_count() {
            let (u, v) = (self.tail(d), self.head(d));
            let c = comp_of(face_of[d]);
            // a cycle edge borders the cut from both of its sides
            if u < v || cycle_edges.contains(&(v, u)) {
                edge_sides[c] += 1;
            }
        }

        let mut vertex_wedges = vec![0i64; k];
        for v in 0..self.vertex_count() {
            if !on_cycle[v] {
                // the corner at v in face f is carried by the dart leaving v
                let d = self.dart_at(v, 0);
                vertex_wedges[comp_of(face_of[d])] += 1;
            }
        }
        let mut sides = vec![HashSet::new(); k];
        for i in 0..len {
            let v = cycle[i];
            let prev = cycle[(i + len - 1) % len];
            let next = cycle[(i + 1) % len];
            for (from, to, side) in [(next, prev, 0u8), (prev, next, 1u8)] {
                // corners strictly after `from` up to `to`, counterclockwise
                let mut d = self.rot_next(self.find_dart(v, from).unwrap());
                let c = comp_of(face_of[d]);
                vertex_wedges[c] += 1;
                sides[c].insert(side);
                while self.head(d) != to {
                    d = self.rot_next(d);
                    debug_assert_eq!(comp_of(face_of[d]), c);
                }
            }
        }

        Ok((0..k)
            .map(|c| {
                let chi = vertex_wedges[c] - edge_sides[c] + faces[c].len() as i64;
                let b = sides[c].len();
                let genus = ((2 - b as i64 - chi) / 2) as usize;
                Subsurface {
                    face_count: faces[c].len(),
                    faces: std::mem::take(&mut faces[c]),
                    boundary_cycles: b,
                    vertices: vertex_wedges[c] as usize,
                    edges: edge_sides[c] as usize,
                    chi,
                    genus,
                }
            })
            .collect())
    }
}
