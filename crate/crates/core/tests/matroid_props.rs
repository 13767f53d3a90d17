use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spectra::fixtures::{random_representable_matroid, random_sparse_paving};
use spectra::jumpsys::{check_axiom_j, maximal_constant_sum_check, ConstantSum, LatticePointSet};
use spectra::polymat::{
    check_polymatroid, hyperbolic_rank_table, ingleton_check, ingleton_scan, standard_basis, support_rank, IngletonQuadruple,
    ScanMode,
};
use spectra::realcheck::{hyperbolic_rank, ones};
use spectra::{Matroid, RankTable, SubsetMask};

fn fixtures() -> Vec<Matroid> {
    let mut out = vec![Matroid::vamos(), Matroid::uniform(2, 3).unwrap(), Matroid::uniform(4, 8).unwrap()];
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..6 {
        let n = rng.random_range(3..=7);
        let r = rng.random_range(1..=n.min(4));
        out.push(if i % 2 == 0 { random_representable_matroid(&mut rng, n, r) } else { random_sparse_paving(&mut rng, n, r) });
    }
    out
}

#[test]
fn rank_formulas_agree_exhaustively() {
    for m in fixtures() {
        let h = m.bases_polynomial();
        let support = h.support();
        for s in (0u32..1 << m.n()).map(SubsetMask) {
            let r = m.rank(s);
            assert_eq!(m.rank_via_degree_of(&h, s), r, "{m:?} {s:?}");
            assert_eq!(support_rank(&support, s).unwrap(), r as i64, "{m:?} {s:?}");
        }
    }
}

#[test]
fn support_is_the_basis_incidence_vectors() {
    for m in fixtures() {
        let expected = LatticePointSet::from_points(
            m.n(),
            m.bases().iter().map(|b| (1..=m.n()).map(|e| b.contains(e) as i64).collect::<Vec<_>>()),
        )
        .unwrap();
        let support = m.bases_polynomial().support();
        assert_eq!(support, expected);
        assert!(support.iter().all(|p| p.iter().sum::<i64>() == m.rank_of_matroid() as i64));
    }
}

#[test]
fn rank_tables_are_polymatroids() {
    for m in fixtures() {
        let r = RankTable::of_matroid(&m);
        assert!(check_polymatroid(&r).is_empty(), "{m:?}");
        for e in 1..=m.n() {
            assert!(r.get(SubsetMask::from_elements(&[e])) <= 1);
        }
    }
}

#[test]
fn hyperbolic_rank_table_is_matroid_rank() {
    for m in fixtures() {
        let h = m.bases_polynomial();
        let table = hyperbolic_rank_table(&h, &standard_basis(m.n()), &ones(m.n())).unwrap();
        assert_eq!(table, RankTable::of_matroid(&m));
        // and the per-subset degree computed directly
        for s in (0u32..1 << m.n()).step_by(7).map(SubsetMask) {
            let x: Vec<_> = (1..=m.n()).map(|e| spectra::scalar::int(s.contains(e) as i64)).collect();
            assert_eq!(hyperbolic_rank(&h, &ones(m.n()), &x).unwrap() as u32, table.get(s));
        }
    }
}

#[test]
fn powers_scale_the_rank_table() {
    let h = Matroid::vamos().bases_polynomial();
    let base = hyperbolic_rank_table(&h, &standard_basis(8), &ones(8)).unwrap();
    let mut hn = h.clone();
    for n in 1..=3 {
        if n > 1 {
            hn = hn.checked_mul(&h).unwrap();
        }
        let table = hyperbolic_rank_table(&hn, &standard_basis(8), &ones(8)).unwrap();
        assert_eq!(table, base.scale(n), "N = {n}");
    }
}

#[test]
fn deficit_is_linear_in_scaling() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for m in fixtures().into_iter().filter(|m| m.n() >= 4) {
        let r = RankTable::of_matroid(&m);
        for _ in 0..5 {
            let pick = |rng: &mut ChaCha8Rng| SubsetMask(rng.random_range(0..1u32 << m.n()));
            let q = IngletonQuadruple([pick(&mut rng), pick(&mut rng), pick(&mut rng), pick(&mut rng)]);
            let d1 = ingleton_check(&r, q).unwrap().deficit;
            for n in 1..=4 {
                assert_eq!(ingleton_check(&r.scale(n), q).unwrap().deficit, n as i64 * d1);
            }
        }
    }
}

#[test]
fn bases_supports_are_jump_systems_with_constant_maxima() {
    for m in fixtures() {
        let support = m.bases_polynomial().support();
        assert!(check_axiom_j(&support).is_empty(), "{m:?}");
        assert_eq!(maximal_constant_sum_check(&support).unwrap(), ConstantSum::Constant(m.rank_of_matroid() as i64));
    }
}

#[test]
fn non_constant_maxima_imply_axiom_failure() {
    // random small sets in {0..2}^2 and {0..1}^3
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut witnessed = 0;
    for _ in 0..300 {
        let dim = rng.random_range(2..=3);
        let top = if dim == 2 { 3 } else { 2 };
        let pts: Vec<Vec<i64>> = (0..rng.random_range(1..=5))
            .map(|_| (0..dim).map(|_| rng.random_range(0..top)).collect())
            .collect();
        let set = LatticePointSet::from_points(dim, pts).unwrap();
        if let ConstantSum::Witness { .. } = maximal_constant_sum_check(&set).unwrap() {
            witnessed += 1;
            assert!(!check_axiom_j(&set).is_empty(), "{set:?}");
        }
    }
    assert!(witnessed > 20);
}

#[test]
fn disjoint_pair_scan_finds_only_the_vamos_violations() {
    let found = ingleton_scan(&RankTable::of_matroid(&Matroid::vamos()), ScanMode::DisjointPairs, 5).unwrap();
    assert!(!found.is_empty());
    assert!(found.iter().all(|r| r.deficit == 1));
    let witness = IngletonQuadruple::vamos().canonical();
    assert!(found.iter().any(|r| r.quadruple == witness));
    // uniform and column matroids are representable, so Ingleton holds
    let all = fixtures();
    for m in [&all[1], &all[2], &all[3], &all[5], &all[7]] {
        assert!(ingleton_scan(&RankTable::of_matroid(m), ScanMode::DisjointPairs, 5).unwrap().is_empty(), "{m:?}");
    }
}
