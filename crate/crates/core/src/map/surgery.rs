use super::{MapError, RotationMap, Vertex};

impl RotationMap {
    fn common_neighbors(&self, u: Vertex, v: Vertex) -> usize {
        self.rotation(u).iter().filter(|&&w| self.has_edge(v, w)).count()
    }

    fn contraction_check(&self, u: Vertex, v: Vertex) -> Result<(), MapError> {
        if !self.is_simplicial_triangulation() {
            return Err(MapError::NotTriangulation);
        }
        if !self.has_edge(u, v) {
            return Err(MapError::EdgeMissing(u, v));
        }
        if self.vertex_count() == 4 && self.genus()? == 0 {
            return Err(MapError::IsK4Sphere);
        }
        // the two incident faces must be the only triangles through uv
        if self.common_neighbors(u, v) != 2 {
            return Err(MapError::NotContractible(u, v));
        }
        Ok(())
    }

    /// Contracts edge `uv` into `u`; vertices above `v` shift down by one.
    pub fn contract_edge(&self, u: Vertex, v: Vertex) -> Result<RotationMap, MapError> {
        self.contraction_check(u, v)?;
        let pu = self.position(u, v).unwrap();
        let rot_u = self.rotation(u);
        let a = rot_u[(pu + rot_u.len() - 1) % rot_u.len()];
        let b = rot_u[(pu + 1) % rot_u.len()];
        // around v: u, a, r1 .. rk, b
        let rot_v = self.rotation(v);
        let pv = self.position(v, u).unwrap();
        debug_assert_eq!(rot_v[(pv + 1) % rot_v.len()], a);
        let inner: Vec<Vertex> =
            (2..rot_v.len() - 1).map(|k| rot_v[(pv + k) % rot_v.len()]).collect();

        let mut rotations: Vec<Vec<Vertex>> = Vec::with_capacity(self.vertex_count());
        for (w, rot) in self.rotations().iter().enumerate() {
            if w == v {
                rotations.push(Vec::new());
                continue;
            }
            let mut out = Vec::with_capacity(rot.len() + inner.len());
            for &x in rot {
                if x == v {
                    if w == u {
                        out.extend_from_slice(&inner);
                    } else if w != a && w != b {
                        out.push(u);
                    }
                } else {
                    out.push(x);
                }
            }
            rotations.push(out);
        }
        rotations.remove(v);
        let shift = |x: Vertex| if x > v { x - 1 } else { x };
        for rot in &mut rotations {
            for x in rot.iter_mut() {
                *x = shift(*x);
            }
        }
        RotationMap::from_rotations(rotations)
    }

    /// Every edge satisfying the contraction precondition; empty means irreducible.
    pub fn contractible_edges(&self) -> Vec<(Vertex, Vertex)> {
        if !self.is_simplicial_triangulation() {
            return Vec::new();
        }
        self.edges().filter(|&(u, v)| self.contraction_check(u, v).is_ok()).collect()
    }

    /// Removes face `face_a` of `self` and `face_b` of `other` and glues the
    /// two holes together, reversing `other`'s triangle so that the result
    /// stays oriented. Vertices of `other` not on `face_b` are appended after
    /// those of `self`.
    pub fn glue_along_triangle(
        &self,
        face_a: [Vertex; 3],
        other: &RotationMap,
        face_b: [Vertex; 3],
    ) -> Result<RotationMap, MapError> {
        let [a0, a1, a2] = face_a;
        let [b0, b1, b2] = face_b;
        if !self.is_oriented_face(a0, a1, a2) {
            return Err(MapError::NotAFace(a0, a1, a2));
        }
        if !other.is_oriented_face(b0, b1, b2) {
            return Err(MapError::NotAFace(b0, b1, b2));
        }
        let n = self.vertex_count();
        let mut image = vec![usize::MAX; other.vertex_count()];
        image[b0] = a0;
        image[b1] = a2;
        image[b2] = a1;
        let mut next = n;
        for slot in image.iter_mut() {
            if *slot == usize::MAX {
                *slot = next;
                next += 1;
            }
        }

        let mut rotations: Vec<Vec<Vertex>> = self.rotations().to_vec();
        rotations.resize(next, Vec::new());
        for (w, rot) in other.rotations().iter().enumerate() {
            if !face_b.contains(&w) {
                rotations[image[w]] = rot.iter().map(|&x| image[x]).collect();
            }
        }
        // at a_i, the corner (a_{i-1}, a_{i+1}) is replaced by the rotation
        // of the matching b vertex strictly between its two face neighbours
        for (ai, bj) in [(a0, b0), (a1, b2), (a2, b1)] {
            let rot_b = other.rotation(bj);
            let k = rot_b.len();
            // b's corner (prev, next) in face_b: next follows prev at bj
            let pos = (0..k).find(|&t| {
                face_b.contains(&rot_b[t]) && face_b.contains(&rot_b[(t + 1) % k])
            });
            let start = pos.ok_or(MapError::NotAFace(b0, b1, b2))?;
            let inner: Vec<Vertex> = (2..k).map(|t| image[rot_b[(start + t) % k]]).collect();

            let rot_a = &rotations[ai];
            let m = rot_a.len();
            let pa = (0..m)
                .find(|&t| {
                    let (x, y) = (rot_a[t], rot_a[(t + 1) % m]);
                    face_a.contains(&x) && face_a.contains(&y)
                })
                .ok_or(MapError::NotAFace(a0, a1, a2))?;
            let mut out = Vec::with_capacity(m + inner.len());
            for t in 0..m {
                out.push(rot_a[(pa + t) % m]);
                if t == 0 {
                    out.extend_from_slice(&inner);
                }
            }
            rotations[ai] = out;
        }
        let glued = RotationMap::from_rotations(rotations).map_err(|e| match e {
            MapError::RepeatedNeighbor { .. } => MapError::ResultNotSimple,
            other => other,
        })?;
        Ok(glued)
    }
}
