//! Explicit splitting cycles on the Gross–Tucker embeddings of `K_{12s+7}`.
//!
//! `γ_s` and the two translated families `γ_{s,i,k}`, `γ'_{s,i,k}` are given
//! by closed formulas. Cycles of higher type are read off a subsurface made
//! of two fans of the base rotation glued along their shared voltages: the
//! fan triangles at `p` and at `q` cover a punctured surface of genus `j`,
//! and the edges used by exactly one of them form its boundary.

use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::map::{MapError, RotationMap, Vertex};
use crate::search::{verify_cycle, Closure, SearchError, SearchOptions, SplitVerdict};
use crate::voltage::{gross_tucker_base, gross_tucker_fan, VoltageError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("family parameter s = {0} is out of range")]
    SOutOfRange(u32),
    #[error("{name} = {value} is out of range for s = {s}")]
    ParamOutOfRange { name: &'static str, value: u32, s: u32 },
    #[error("no glued-fan subsurface of genus {j} fits the base rotation for s = {s}")]
    Unconstructible { s: u32, j: u32 },
    #[error("the fan triangles do not bound a single cycle")]
    BadBoundary,
    #[error(transparent)]
    Voltage(#[from] VoltageError),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Search(#[from] SearchError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Variant {
    Plain,
    Prime,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilyKind {
    Gamma,
    GammaIk { i: u32, k: u32 },
    GammaPrimeIk { i: u32, k: u32 },
    TypeJ { j: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyCycle {
    pub s: u32,
    #[serde(flatten)]
    pub kind: FamilyKind,
    pub vertices: Vec<Vertex>,
    pub claimed_type: usize,
}

impl FamilyCycle {
    fn new(s: u32, kind: FamilyKind, raw: &[u32], claimed_type: usize) -> Self {
        let n = 12 * s + 7;
        let vertices = raw.iter().map(|&x| (x % n) as Vertex).collect();
        FamilyCycle { s, kind, vertices, claimed_type }
    }

    /// Same cycle with every vertex shifted by `t`.
    pub fn translated(&self, t: u32) -> FamilyCycle {
        let n = (12 * self.s + 7) as usize;
        FamilyCycle {
            vertices: self.vertices.iter().map(|&v| (v + t as usize) % n).collect(),
            ..self.clone()
        }
    }

    /// Key shared by all rotations and reversals of the cycle.
    pub fn undirected_key(&self) -> Vec<Vertex> {
        canonical_cycle(&self.vertices)
    }
}

pub fn canonical_cycle(cycle: &[Vertex]) -> Vec<Vertex> {
    let len = cycle.len();
    let start = (0..len).min_by_key(|&i| cycle[i]).unwrap_or(0);
    let forward: Vec<Vertex> = (0..len).map(|t| cycle[(start + t) % len]).collect();
    let backward: Vec<Vertex> = (0..len).map(|t| cycle[(start + len - t) % len]).collect();
    forward.min(backward)
}

pub fn gamma(s: u32) -> Result<FamilyCycle, FamilyError> {
    if s < 3 {
        return Err(FamilyError::SOutOfRange(s));
    }
    Ok(FamilyCycle::new(s, FamilyKind::Gamma, &[0, 5, 2, 9 * s + 8, 6, 1, 4, 5 * s + 6], 1))
}

pub fn gamma_family(s: u32, i: u32, k: u32, variant: Variant) -> Result<FamilyCycle, FamilyError> {
    if s < 2 {
        return Err(FamilyError::SOutOfRange(s));
    }
    let n = 12 * s + 7;
    if !(1..s).contains(&i) {
        return Err(FamilyError::ParamOutOfRange { name: "i", value: i, s });
    }
    if k >= n {
        return Err(FamilyError::ParamOutOfRange { name: "k", value: k, s });
    }
    let (kind, raw) = match variant {
        Variant::Plain => (
            FamilyKind::GammaIk { i, k },
            [0, 2 * i + 3, 2, 9 * s + 7 + i, 2 * i + 4, 1, 2 * i + 2, 5 * s + 5 + i],
        ),
        Variant::Prime => (
            FamilyKind::GammaPrimeIk { i, k },
            [0, 2 * i + 2, 2, 5 * s + 4 + i, 2 * i + 3, 1, 2 * i + 1, 9 * s + 7 + i],
        ),
    };
    Ok(FamilyCycle::new(s, kind, &raw.map(|x| x + k), 1))
}

/// Every `γ_{s,i,k}` and `γ'_{s,i,k}`, ordered by variant, then `i`, then `k`.
pub fn all_family_members(s: u32) -> Result<Vec<FamilyCycle>, FamilyError> {
    let n = 12 * s + 7;
    let mut out = Vec::new();
    for variant in [Variant::Plain, Variant::Prime] {
        for i in 1..s {
            for k in 0..n {
                out.push(gamma_family(s, i, k, variant)?);
            }
        }
    }
    Ok(out)
}

/// Triangles of the glued pair of fans bounding a punctured genus-`j` surface.
///
/// Both fans are windows of `4j + 2` consecutive voltages of the base
/// rotation, one from each zigzag run. They match up when the second window
/// shifted by `q - p` equals the first with neighbouring entries swapped.
pub fn type_j_triangles(s: u32, j: u32) -> Result<Vec<[Vertex; 3]>, FamilyError> {
    check_type_j(s, j)?;
    let n = 12 * s + 7;
    let fan = gross_tucker_fan(s)?;
    // the two zigzags sit on either side of the voltage 10s + 6
    let (z1, z2) = (&fan[..2 * s as usize + 1], &fan[2 * s as usize + 2..]);
    let w = 4 * j as usize + 2;
    let a = (2 * s as usize + 2)
        .checked_sub(w + 2)
        .ok_or(FamilyError::Unconstructible { s, j })?;
    let (r, rq) = (&z1[a..a + w], &z2[a..a + w]);
    let delta = (r[1] + n - rq[0]) % n;
    if (0..w).any(|k| (rq[k] + delta) % n != r[k ^ 1]) {
        return Err(FamilyError::Unconstructible { s, j });
    }
    let p = (n - r[0]) % n;
    let q = (p + delta) % n;
    let mut triangles = Vec::with_capacity(2 * (w - 1));
    for (apex, window) in [(p, r), (q, rq)] {
        for k in 0..w - 1 {
            triangles.push([apex, apex + window[k], apex + window[k + 1]].map(|x| (x % n) as Vertex));
        }
    }
    Ok(triangles)
}

fn check_type_j(s: u32, j: u32) -> Result<(), FamilyError> {
    if s < 1 {
        return Err(FamilyError::SOutOfRange(s));
    }
    if j < 1 || j > s / 2 {
        return Err(FamilyError::ParamOutOfRange { name: "j", value: j, s });
    }
    // a window of 4j + 2 voltages starting two short of the zigzag's end
    if j > (s - 1) / 2 {
        return Err(FamilyError::Unconstructible { s, j });
    }
    Ok(())
}

/// Boundary of the type-`j` subsurface, starting at the first fan's apex.
pub fn type_j_boundary(s: u32, j: u32) -> Result<FamilyCycle, FamilyError> {
    let triangles = type_j_triangles(s, j)?;
    let mut uses: BTreeMap<(Vertex, Vertex), usize> = BTreeMap::new();
    for t in &triangles {
        for e in 0..3 {
            let (u, v) = (t[e], t[(e + 1) % 3]);
            *uses.entry((u.min(v), u.max(v))).or_default() += 1;
        }
    }
    let mut adjacent: HashMap<Vertex, Vec<Vertex>> = HashMap::new();
    for (&(u, v), _) in uses.iter().filter(|(_, &c)| c == 1) {
        adjacent.entry(u).or_default().push(v);
        adjacent.entry(v).or_default().push(u);
    }
    if adjacent.values().any(|nb| nb.len() != 2) {
        return Err(FamilyError::BadBoundary);
    }
    let start = triangles[0][0];
    let first = *adjacent.get(&start).ok_or(FamilyError::BadBoundary)?.iter().min().unwrap();
    let mut cycle = vec![start];
    let (mut prev, mut cur) = (start, first);
    while cur != start {
        cycle.push(cur);
        let nb = &adjacent[&cur];
        let next = if nb[0] == prev { nb[1] } else { nb[0] };
        (prev, cur) = (cur, next);
        if cycle.len() > adjacent.len() {
            return Err(FamilyError::BadBoundary);
        }
    }
    if cycle.len() != adjacent.len() {
        return Err(FamilyError::BadBoundary);
    }
    Ok(FamilyCycle {
        s,
        kind: FamilyKind::TypeJ { j },
        vertices: cycle.iter().map(|&v| v as Vertex).collect(),
        claimed_type: j as usize,
    })
}

/// How one family cycle fared under the fast check and the cut oracle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MemberCheck {
    pub cycle: FamilyCycle,
    /// Type from the colouring closure, `None` if not separating.
    pub fast_type: Option<usize>,
    /// Genera of the pieces left by cutting along the cycle.
    pub oracle_genera: Vec<usize>,
    pub oracle_type: Option<usize>,
}

impl MemberCheck {
    pub fn agrees(&self) -> bool {
        self.fast_type == self.oracle_type
    }

    pub fn verified(&self) -> bool {
        self.agrees() && self.oracle_type == Some(self.cycle.claimed_type)
    }
}

/// Checks one cycle against both verdicts.
pub fn check_member(map: &RotationMap, cycle: FamilyCycle) -> Result<MemberCheck, FamilyError> {
    let options = SearchOptions { prune_facial: false, prune_facial_seam: false, ..SearchOptions::default() };
    let fast_type = match verify_cycle(map, &cycle.vertices, &options)? {
        Closure::Verdict(SplitVerdict::Separating(sep)) => Some(sep.cycle_type()),
        Closure::Verdict(SplitVerdict::NonSeparating) | Closure::Rejected(_) => None,
    };
    let pieces = map.cut_along(&cycle.vertices)?;
    let oracle_genera: Vec<usize> = pieces.iter().map(|p| p.genus).collect();
    let oracle_type = match oracle_genera[..] {
        [a, b] => Some(a.min(b)),
        _ => None,
    };
    Ok(MemberCheck { cycle, fast_type, oracle_genera, oracle_type })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeJCheck {
    pub j: u32,
    pub check: Option<MemberCheck>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub s: u32,
    pub n: usize,
    pub genus: usize,
    pub gamma: Option<MemberCheck>,
    /// Triangles and interior edges of the side of `γ_s` with no interior vertex.
    pub gamma_empty_side: Option<(usize, usize)>,
    pub members: Vec<MemberCheck>,
    pub distinct_members: usize,
    pub gamma_in_family: bool,
    pub type_j: Vec<TypeJCheck>,
    pub irreducible: bool,
}

impl FamilyReport {
    pub fn claimed_members(&self) -> usize {
        2 * (self.s as usize - 1) * self.n
    }

    pub fn verified_members(&self) -> usize {
        self.members.iter().filter(|m| m.verified()).count()
    }

    /// Family members where the colouring closure and the oracle disagree.
    pub fn disagreements(&self) -> impl Iterator<Item = &MemberCheck> {
        self.members
            .iter()
            .chain(self.gamma.iter())
            .chain(self.type_j.iter().filter_map(|t| t.check.as_ref()))
            .filter(|m| !m.agrees())
    }

    pub fn all_verified(&self) -> bool {
        self.gamma.as_ref().is_none_or(MemberCheck::verified)
            && self.verified_members() == self.members.len()
            && self.distinct_members == self.claimed_members()
            && self.type_j.iter().all(|t| t.check.as_ref().is_some_and(MemberCheck::verified))
    }
}

pub fn verify_families(s: u32) -> Result<FamilyReport, FamilyError> {
    if s < 2 {
        return Err(FamilyError::SOutOfRange(s));
    }
    let map = gross_tucker_base(s)?.derive()?;
    let genus = map.genus()?;

    let gamma = match gamma(s) {
        Ok(c) => Some(check_member(&map, c)?),
        Err(FamilyError::SOutOfRange(_)) => None,
        Err(e) => return Err(e),
    };
    let gamma_empty_side = match &gamma {
        Some(g) => {
            let len = g.cycle.vertices.len();
            map.cut_along(&g.cycle.vertices)?
                .iter()
                .find(|p| p.interior_vertices(len) == 0)
                .map(|p| (p.face_count, p.edges - len))
        }
        None => None,
    };

    let members: Vec<MemberCheck> = all_family_members(s)?
        .into_par_iter()
        .map(|c| check_member(&map, c))
        .collect::<Result<_, _>>()?;
    let keys: HashSet<Vec<Vertex>> = members.iter().map(|m| m.cycle.undirected_key()).collect();
    let gamma_in_family = gamma.as_ref().is_some_and(|g| keys.contains(&g.cycle.undirected_key()));

    let mut type_j = Vec::new();
    for j in 1..=s / 2 {
        let entry = match type_j_boundary(s, j) {
            Ok(c) => TypeJCheck { j, check: Some(check_member(&map, c)?), error: None },
            Err(e) => TypeJCheck { j, check: None, error: Some(e.to_string()) },
        };
        type_j.push(entry);
    }

    Ok(FamilyReport {
        s,
        n: map.vertex_count(),
        genus,
        gamma,
        gamma_empty_side,
        distinct_members: keys.len(),
        members,
        gamma_in_family,
        type_j,
        irreducible: map.contractible_edges().is_empty(),
    })
}
