#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use splitcycles::search::{enumerate_with, Closure, PruneReason, SearchOptions};
use splitcycles::voltage::bundled_base;
use splitcycles::{RotationMap, VoltageBaseMap};

pub fn k7() -> RotationMap {
    VoltageBaseMap::new(7, vec![1, 3, 2, 6, 4, 5]).unwrap().derive().unwrap()
}

/// Two tori glued along a triangle: genus 2 on 11 vertices, not complete.
pub fn double_k7() -> RotationMap {
    let t = k7();
    let face = t.faces().into_iter().next().unwrap();
    let face = [face[0], face[1], face[2]];
    t.glue_along_triangle(face, &t, face).unwrap()
}

pub fn embedding(name: &str) -> RotationMap {
    bundled_base(name).unwrap().derive().unwrap()
}

/// Type read off the cut: `None` unless exactly two pieces come back.
pub fn oracle_type(map: &RotationMap, cycle: &[usize]) -> Option<usize> {
    match map.cut_along(cycle).unwrap()[..] {
        [ref a, ref b] => Some(a.genus.min(b.genus)),
        _ => None,
    }
}

pub fn face_set(map: &RotationMap) -> HashSet<[usize; 3]> {
    map.faces()
        .into_iter()
        .map(|f| {
            let mut t = [f[0], f[1], f[2]];
            t.sort_unstable();
            t
        })
        .collect()
}

/// No two cyclically consecutive edges lie on a common triangle.
pub fn is_reduced(faces: &HashSet<[usize; 3]>, cycle: &[usize]) -> bool {
    let len = cycle.len();
    (0..len).all(|i| {
        let mut t = [cycle[(i + len - 1) % len], cycle[i], cycle[(i + 1) % len]];
        t.sort_unstable();
        !faces.contains(&t)
    })
}

/// Every directed simple cycle through `root` with at most `max_len`
/// vertices, by plain backtracking over sorted adjacency lists.
pub fn brute_force_cycles(map: &RotationMap, root: usize, max_len: usize) -> Vec<Vec<usize>> {
    let adjacency: Vec<Vec<usize>> = map
        .rotations()
        .iter()
        .map(|r| {
            let mut r = r.clone();
            r.sort_unstable();
            r
        })
        .collect();
    let mut out = Vec::new();
    let mut path = vec![root];
    let mut used = vec![false; map.vertex_count()];
    used[root] = true;
    fn go(
        adj: &[Vec<usize>],
        path: &mut Vec<usize>,
        used: &mut [bool],
        max_len: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        let end = *path.last().unwrap();
        if path.len() >= 3 && adj[end].binary_search(&path[0]).is_ok() {
            out.push(path.clone());
        }
        if path.len() == max_len {
            return;
        }
        for &v in &adj[end] {
            if !used[v] {
                used[v] = true;
                path.push(v);
                go(adj, path, used, max_len, out);
                path.pop();
                used[v] = false;
            }
        }
    }
    go(&adjacency, &mut path, &mut used, max_len, &mut out);
    out
}

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct OracleTally {
    pub cycles: usize,
    pub reduced: usize,
    pub separating: usize,
    pub splitting: usize,
    pub mismatches: Vec<String>,
}

/// Compares every closure of the search from `root` with the cut oracle,
/// and checks that every reduced separating cycle was reached.
pub fn compare_with_oracle(map: &RotationMap, root: usize, max_len: usize) -> OracleTally {
    let options = SearchOptions { max_length: Some(max_len), ..SearchOptions::default() };
    let mut closures: HashMap<Vec<usize>, Closure> = HashMap::new();
    enumerate_with(map, root, &options, |state, closure| {
        closures.insert(state.path().to_vec(), *closure);
    })
    .unwrap();

    let faces = face_set(map);
    let mut tally = OracleTally::default();
    for cycle in brute_force_cycles(map, root, max_len) {
        tally.cycles += 1;
        let reduced = is_reduced(&faces, &cycle);
        let oracle = oracle_type(map, &cycle);
        let closure = closures.get(&cycle);
        if !reduced {
            if let Some(Closure::Verdict(_)) = closure {
                tally.mismatches.push(format!("{cycle:?}: unreduced cycle got a verdict"));
            }
            continue;
        }
        tally.reduced += 1;
        if oracle.is_some() {
            tally.separating += 1;
        }
        if oracle.is_some_and(|t| t > 0) {
            tally.splitting += 1;
        }
        let fast = match closure {
            Some(Closure::Verdict(v)) => v.cycle_type(),
            Some(Closure::Rejected(PruneReason::FacialCorner)) => {
                tally.mismatches.push(format!("{cycle:?}: reduced cycle rejected as facial"));
                continue;
            }
            // pruned by a colouring test, on the way down or at the seam
            Some(Closure::Rejected(_)) | None => None,
        };
        if fast != oracle {
            tally.mismatches.push(format!("{cycle:?}: fast {fast:?}, oracle {oracle:?}"));
        }
    }
    tally
}

/// Checks every verdict the search reaches from `root` against the cut.
/// Returns the number of verdicts and the disagreeing cycles.
pub fn closures_against_oracle(map: &RotationMap, root: usize, max_len: usize) -> (u64, Vec<Vec<usize>>) {
    let options = SearchOptions { max_length: Some(max_len), ..SearchOptions::default() };
    let mut verdicts = 0;
    let mut bad = Vec::new();
    enumerate_with(map, root, &options, |state, closure| {
        if let Closure::Verdict(v) = closure {
            verdicts += 1;
            if v.cycle_type() != oracle_type(map, state.path()) {
                bad.push(state.path().to_vec());
            }
        }
    })
    .unwrap();
    (verdicts, bad)
}
