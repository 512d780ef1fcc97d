//! One-vertex voltage base maps over `Z_n` and their derived coverings.
//!
//! A base map is stored as the cyclic sequence of dart voltages around its
//! single vertex. Voltages are injective, so the dart with voltage `a` has
//! opposite `n - a`, and face tracing on the base follows the same
//! convention as [`RotationMap`]: the face successor of `a` is the voltage
//! right after `n - a` in the sequence.
//!
//! The derived map has vertex set `Z_n` and rotation `i + a_1, ..., i +
//! a_{n-1}` at `i`; `(i, j, k)` is a face iff `(j - i, k - j, i - k)` is a
//! base face.

use thiserror::Error;

use crate::map::{MapError, RotationMap};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VoltageError {
    #[error("modulus {0} must be odd and at least 3")]
    BadModulus(u32),
    #[error("sequence is not a permutation of the nonzero residues mod {0}")]
    NotAPermutation(u32),
    #[error("base face {0:?} is not a triangle")]
    NonTriangularFace(Vec<u32>),
    #[error("base face {0:?} has nonzero voltage sum")]
    NonzeroFaceSum(Vec<u32>),
    #[error("derived map is not triangular")]
    DerivedNotTriangular,
    #[error("derived map is not simple: {0}")]
    DerivedNotSimple(MapError),
    #[error("unknown bundled base map `{0}`")]
    UnknownBase(String),
    #[error("parameter s must be at least 1")]
    BadFamilyParameter,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VoltageBaseMap {
    modulus: u32,
    sequence: Vec<u32>,
}

impl VoltageBaseMap {
    pub fn new(modulus: u32, sequence: Vec<u32>) -> Result<Self, VoltageError> {
        if modulus < 3 || modulus.is_multiple_of(2) {
            return Err(VoltageError::BadModulus(modulus));
        }
        let mut seen = vec![false; modulus as usize];
        if sequence.len() + 1 != modulus as usize {
            return Err(VoltageError::NotAPermutation(modulus));
        }
        for &a in &sequence {
            if a == 0 || a >= modulus || seen[a as usize] {
                return Err(VoltageError::NotAPermutation(modulus));
            }
            seen[a as usize] = true;
        }
        Ok(VoltageBaseMap { modulus, sequence })
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn sequence(&self) -> &[u32] {
        &self.sequence
    }

    /// The family parameter `s` when `n = 12s + 7`.
    pub fn family_parameter(&self) -> Option<u32> {
        (self.modulus >= 19 && self.modulus % 12 == 7).then(|| (self.modulus - 7) / 12)
    }

    /// Faces of the one-vertex base map as voltage cycles, each starting at
    /// its smallest voltage, in order of that voltage.
    pub fn traced_faces(&self) -> Vec<Vec<u32>> {
        let n = self.modulus;
        let len = self.sequence.len();
        let mut pos = vec![0usize; n as usize];
        for (i, &a) in self.sequence.iter().enumerate() {
            pos[a as usize] = i;
        }
        let succ = |a: u32| self.sequence[(pos[(n - a) as usize] + 1) % len];
        let mut seen = vec![false; n as usize];
        let mut faces = Vec::new();
        for start in 1..n {
            if seen[start as usize] {
                continue;
            }
            let mut face = Vec::new();
            let mut a = start;
            while !seen[a as usize] {
                seen[a as usize] = true;
                face.push(a);
                a = succ(a);
            }
            faces.push(face);
        }
        faces
    }

    /// The base faces as voltage triples, checking the Kirchhoff condition
    /// and triangularity.
    pub fn base_faces(&self) -> Result<Vec<[u32; 3]>, VoltageError> {
        let n = self.modulus as u64;
        self.traced_faces()
            .into_iter()
            .map(|f| {
                if f.iter().map(|&a| a as u64).sum::<u64>() % n != 0 {
                    Err(VoltageError::NonzeroFaceSum(f))
                } else if f.len() != 3 {
                    Err(VoltageError::NonTriangularFace(f))
                } else {
                    Ok([f[0], f[1], f[2]])
                }
            })
            .collect()
    }

    /// Euler characteristic of the one-vertex base surface.
    pub fn base_chi(&self) -> i64 {
        1 - self.sequence.len() as i64 / 2 + self.traced_faces().len() as i64
    }

    /// The covering map on `Z_n`.
    pub fn derive(&self) -> Result<RotationMap, VoltageError> {
        match self.base_faces() {
            Ok(_) => {}
            Err(VoltageError::NonTriangularFace(_)) | Err(VoltageError::NonzeroFaceSum(_)) => {
                return Err(VoltageError::DerivedNotTriangular)
            }
            Err(e) => return Err(e),
        }
        let map = self.derive_unchecked().map_err(VoltageError::DerivedNotSimple)?;
        if !map.is_simplicial_triangulation() {
            return Err(VoltageError::DerivedNotTriangular);
        }
        Ok(map)
    }

    fn derive_unchecked(&self) -> Result<RotationMap, MapError> {
        let n = self.modulus as usize;
        let rotations = (0..n)
            .map(|i| self.sequence.iter().map(|&a| (i + a as usize) % n).collect())
            .collect();
        RotationMap::from_rotations(rotations)
    }
}

/// Whether `i -> i + 1 (mod V)` is an automorphism of the rotation system.
pub fn check_translation_automorphism(map: &RotationMap) -> bool {
    let n = map.vertex_count();
    (0..n).all(|i| {
        let here = map.rotation(i);
        let there = map.rotation((i + 1) % n);
        if here.len() != there.len() || here.is_empty() {
            return false;
        }
        let shifted: Vec<usize> = here.iter().map(|&u| (u + 1) % n).collect();
        match there.iter().position(|&u| u == shifted[0]) {
            Some(off) => (0..there.len()).all(|k| there[(off + k) % there.len()] == shifted[k]),
            None => false,
        }
    })
}

/// Apex voltages `d_0, ..., d_{4s+2}` of the Gross–Tucker fan for
/// `K_{12s+7}`: a zigzag of `2s + 1` voltages closing in on `7s + 4`, the
/// voltage `10s + 6`, then a zigzag of `2s + 1` voltages closing in on
/// `3s + 2`. Triangle `m` of the fan is `(-d_m, d_{m+1}, d_m - d_{m+1})`.
pub fn gross_tucker_fan(s: u32) -> Result<Vec<u32>, VoltageError> {
    if s == 0 {
        return Err(VoltageError::BadFamilyParameter);
    }
    let n = (12 * s + 7) as i64;
    let zigzag = |start: i64, first: i64| {
        let mut z = vec![start];
        let mut sign = first;
        for span in (1..=2 * s as i64).rev() {
            z.push(z.last().unwrap() + sign * span);
            sign = -sign;
        }
        z
    };
    let s64 = s as i64;
    let mut d = zigzag(6 * s64 + 4, 1);
    d.push(10 * s64 + 6);
    d.extend(zigzag(4 * s64 + 2, -1));
    Ok(d.into_iter().map(|x| x.rem_euclid(n) as u32).collect())
}

/// The one-vertex base map of the Gross–Tucker embedding of `K_{12s+7}`,
/// a fan of `4s + 2` triangles, with its rotation read off from the faces
/// starting at the first apex dart.
pub fn gross_tucker_base(s: u32) -> Result<VoltageBaseMap, VoltageError> {
    let d = gross_tucker_fan(s)?;
    let n = 12 * s + 7;
    let mut succ = vec![0u32; n as usize];
    for w in d.windows(2) {
        let face = [(n - w[0]) % n, w[1], (w[0] + n - w[1]) % n];
        for t in 0..3 {
            succ[face[t] as usize] = face[(t + 1) % 3];
        }
    }
    // rot_next(x) = succ(-x)
    let mut sequence = vec![d[0]];
    loop {
        let next = succ[(n - sequence.last().unwrap()) as usize];
        if next == d[0] || sequence.len() == n as usize {
            break;
        }
        sequence.push(next);
    }
    VoltageBaseMap::new(n, sequence)
}

const BASE_A: &str = include_str!("../data/k19_a.volt");
const BASE_B: &str = include_str!("../data/k19_b.volt");
const BASE_C: &str = include_str!("../data/k19_c.volt");

/// One of the three bundled `Z_19` base maps, `A`, `B` or `C`.
pub fn bundled_base(name: &str) -> Result<VoltageBaseMap, VoltageError> {
    let text = match name.to_ascii_uppercase().as_str() {
        "A" => BASE_A,
        "B" => BASE_B,
        "C" => BASE_C,
        _ => return Err(VoltageError::UnknownBase(name.to_string())),
    };
    match crate::format::parse_voltmap(text) {
        Ok(b) => Ok(b),
        Err(crate::format::FormatError::Voltage(e)) => Err(e),
        Err(e) => panic!("bundled base {name} is malformed: {e}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k7() -> VoltageBaseMap {
        VoltageBaseMap::new(7, vec![1, 3, 2, 6, 4, 5]).unwrap()
    }

    #[test]
    fn k7_base() {
        let base = k7();
        let faces = base.base_faces().unwrap();
        assert_eq!(faces.len(), 2);
        for f in &faces {
            assert_eq!(f.iter().sum::<u32>() % 7, 0);
        }
        let map = base.derive().unwrap();
        assert_eq!((map.vertex_count(), map.edge_count(), map.face_count()), (7, 21, 14));
        assert_eq!(map.genus().unwrap(), 1);
        assert!(check_translation_automorphism(&map));
    }

    #[test]
    fn rejects_bad_sequences() {
        assert_eq!(VoltageBaseMap::new(8, vec![1; 7]), Err(VoltageError::BadModulus(8)));
        assert_eq!(
            VoltageBaseMap::new(7, vec![1, 3, 2, 6, 4, 4]),
            Err(VoltageError::NotAPermutation(7))
        );
        // swapping two voltages breaks the zero-sum condition
        let swapped = VoltageBaseMap::new(7, vec![3, 1, 2, 6, 4, 5]).unwrap();
        assert!(matches!(swapped.base_faces(), Err(VoltageError::NonzeroFaceSum(_))));
        assert_eq!(swapped.derive(), Err(VoltageError::DerivedNotTriangular));
    }

    #[test]
    fn derived_faces_follow_the_triangle_rule() {
        let base = gross_tucker_base(1).unwrap();
        let map = base.derive().unwrap();
        let n = 19usize;
        let mut triples: Vec<[u32; 3]> = base.base_faces().unwrap();
        let canon = |t: [u32; 3]| {
            let r = (0..3).min_by_key(|&i| t[i]).unwrap();
            [t[r], t[(r + 1) % 3], t[(r + 2) % 3]]
        };
        triples = triples.into_iter().map(canon).collect();
        for face in map.faces() {
            let (i, j, k) = (face[0], face[1], face[2]);
            let t = [(j + n - i) % n, (k + n - j) % n, (i + n - k) % n].map(|x| x as u32);
            assert!(triples.contains(&canon(t)), "{face:?}");
        }
        assert_eq!(map.face_count(), n * triples.len());
    }

    #[test]
    fn gross_tucker_family() {
        for s in 1..=5u32 {
            let base = gross_tucker_base(s).unwrap();
            let n = 12 * s + 7;
            assert_eq!(base.base_faces().unwrap().len() as u32, 4 * s + 2);
            assert!(base.sequence().contains(&(3 * s + 3)));
            let map = base.derive().unwrap();
            assert_eq!(map.edge_count() as u32, n * (n - 1) / 2);
            assert_eq!(3 * map.face_count(), 2 * map.edge_count());
            assert_eq!(map.genus().unwrap() as u32, 1 + s * (12 * s + 7));
            assert!(map.is_simplicial_triangulation());
            assert!(check_translation_automorphism(&map));
        }
        assert_eq!(gross_tucker_base(0), Err(VoltageError::BadFamilyParameter));
    }

    #[test]
    fn fan_is_consecutive_in_the_rotation() {
        for s in 1..=4u32 {
            let fan = gross_tucker_fan(s).unwrap();
            let base = gross_tucker_base(s).unwrap();
            assert_eq!(&base.sequence()[..fan.len()], &fan[..]);
        }
    }

    #[test]
    fn scrambled_rotation_is_not_translation_invariant() {
        let map = bundled_base("B").unwrap().derive().unwrap();
        assert!(check_translation_automorphism(&map));
        let mut rotations = map.rotations().to_vec();
        rotations[3].swap(0, 1);
        let scrambled = RotationMap::from_rotations(rotations).unwrap();
        assert!(!check_translation_automorphism(&scrambled));
        assert!(!check_translation_automorphism(&crate::map::fixtures::tetrahedron()));
    }

    #[test]
    fn bundled_bases() {
        for name in ["A", "B", "c"] {
            let map = bundled_base(name).unwrap().derive().unwrap();
            assert_eq!(map.genus().unwrap(), 20);
        }
        assert!(matches!(bundled_base("D"), Err(VoltageError::UnknownBase(_))));
        let b = bundled_base("B").unwrap();
        let gt = gross_tucker_base(1).unwrap();
        let k = gt.sequence().iter().position(|&x| x == b.sequence()[0]).unwrap();
        let rotated: Vec<u32> = (0..18).map(|t| gt.sequence()[(k + t) % 18]).collect();
        assert_eq!(rotated, b.sequence());
    }
}
