use splitcycles::families::{type_j_boundary, type_j_triangles, verify_families, FamilyKind};

#[test]
fn gamma_bounds_a_ten_triangle_torus() {
    for s in 3..=5 {
        let r = verify_families(s).unwrap();
        assert_eq!(r.genus as u32, 1 + s * (12 * s + 7));
        assert!(r.gamma.as_ref().unwrap().verified(), "s = {s}");
        assert_eq!(r.gamma_empty_side, Some((10, 11)));
        assert!(r.gamma_in_family);
        assert!(r.irreducible);
        assert_eq!(r.disagreements().count(), 0);
        assert_eq!(r.distinct_members, r.claimed_members());
    }
}

#[test]
fn members_below_the_last_index_split() {
    for s in 3..=5 {
        let r = verify_families(s).unwrap();
        for m in &r.members {
            let (FamilyKind::GammaIk { i, .. } | FamilyKind::GammaPrimeIk { i, .. }) = m.cycle.kind else {
                unreachable!()
            };
            if i + 2 <= s {
                assert!(m.verified(), "{:?}", m.cycle);
            } else {
                // i = s - 1 does not give a splitting cycle on these maps
                assert_eq!(m.oracle_type, None, "{:?}", m.cycle);
            }
        }
        assert_eq!(r.verified_members() as u32, 2 * (s - 2) * (12 * s + 7));
    }
}

#[test]
fn s2_has_no_gamma_and_no_type_one_fan() {
    let r = verify_families(2).unwrap();
    assert!(r.gamma.is_none());
    assert_eq!(r.members.len(), 62);
    assert!(r.irreducible);
    assert!(r.type_j[0].check.is_none());
}

#[test]
fn type_two_cycle_on_k67() {
    let r = verify_families(5).unwrap();
    let j2 = r.type_j.iter().find(|t| t.j == 2).unwrap().check.as_ref().unwrap();
    assert!(j2.verified());
    assert_eq!(j2.fast_type, Some(2));
    assert_eq!(j2.oracle_genera.iter().min(), Some(&2));
    assert_eq!(j2.cycle.vertices.len(), 12);
}

#[test]
fn type_j_subsurface_has_genus_j() {
    for (s, j) in [(3, 1), (5, 2), (7, 3), (9, 4)] {
        let triangles = type_j_triangles(s, j).unwrap();
        let boundary = type_j_boundary(s, j).unwrap();
        let mut vertices: Vec<usize> = triangles.iter().flatten().copied().collect();
        vertices.sort_unstable();
        vertices.dedup();
        let mut edges: Vec<(usize, usize)> =
            triangles.iter().flat_map(|t| (0..3).map(move |e| (t[e].min(t[(e + 1) % 3]), t[e].max(t[(e + 1) % 3])))).collect();
        edges.sort_unstable();
        edges.dedup();
        // one boundary circle: chi = 2 - 2j - 1
        let chi = vertices.len() as i64 - edges.len() as i64 + triangles.len() as i64;
        assert_eq!(chi, 1 - 2 * j as i64, "s = {s}, j = {j}");
        assert_eq!(boundary.vertices.len(), vertices.len());
        assert_eq!(boundary.vertices.len() as u32, 4 * j + 4);
    }
}
