//! Library results against independent oracles on the seeded corpus.

mod common;

use common::buchberger::{groebner, saturate, Poly};
use common::corpus::random_systems;
use common::geometry::{lattice_count, mixed_volume_2d, weighted_sum_candidates};
use common::{from_oracle, laurent, planar, simplex_context, to_oracle};
use num_traits::One;
use sgb_core::rational::int;
use sgb_core::{
    mixed_volume, newton_polytope, weighted_minkowski_lattice_points, MonomialOrder, MultiDegree, Rational,
    TorusSolver,
};

fn degree_grid(len: usize, max: u32) -> Vec<MultiDegree> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                (0..=max).map(move |k| {
                    let mut w = v.clone();
                    w.push(k);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(MultiDegree::new).collect()
}

#[test]
fn buchberger_oracle_sanity() {
    // <x^2 - y, x*y - 1> in lex x > y: {x - y^2, y^3 - 1}
    let p = |t: &[(&[u32], i64)]| Poly::new(t.iter().map(|(e, c)| (e.to_vec(), int(*c))));
    let gb = groebner(&[p(&[(&[2, 0], 1), (&[0, 1], -1)]), p(&[(&[1, 1], 1), (&[0, 0], -1)])]);
    assert_eq!(gb, vec![p(&[(&[1, 0], 1), (&[0, 2], -1)]), p(&[(&[0, 3], 1), (&[0, 0], -1)])]);
    // saturating <x*y> by x*y gives the unit ideal
    let sat = saturate(&[p(&[(&[1, 1], 1)])], 2);
    assert_eq!(sat, vec![Poly::new([(vec![0, 0], Rational::one())])]);
}

#[test]
fn lattice_counts_match_hull_enumeration() {
    for system in random_systems(20) {
        let ctx = simplex_context(&system);
        let family = ctx.family();
        let polys: Vec<Vec<(i64, i64)>> = family.polytopes().iter().map(|p| planar(p.generators())).collect();
        for d in degree_grid(3, 2) {
            let ours = weighted_minkowski_lattice_points(family, &d).unwrap();
            let expected = if d.total() == 0 {
                1
            } else {
                lattice_count(&weighted_sum_candidates(&polys, d.as_slice()))
            };
            assert_eq!(ours.len(), expected, "degree {d:?}");
        }
    }
}

#[test]
fn mixed_volumes_match_area_formula() {
    for system in random_systems(30) {
        let p = newton_polytope(system[0].support().cloned()).unwrap();
        let q = newton_polytope(system[1].support().cloned()).unwrap();
        let expected = mixed_volume_2d(&planar(p.generators()), &planar(q.generators()));
        assert_eq!(mixed_volume(&[p, q]).unwrap() as i64, expected);
    }
}

#[test]
fn solver_matches_saturation_oracle_on_corpus() {
    let lex = MonomialOrder::lex(2);
    for system in random_systems(24) {
        let mut solver = TorusSolver::new(&system).unwrap();
        let ours = solver.zero_dim_gb(&lex).unwrap();
        let oracle: Vec<_> = saturate(&system.iter().map(to_oracle).collect::<Vec<_>>(), 2)
            .iter()
            .map(from_oracle)
            .collect();
        assert_eq!(ours.basis.elements(), oracle.as_slice(), "system {system:?}");
    }
}

#[test]
fn named_instances_match_oracle() {
    let lex = MonomialOrder::lex(2);
    let cases = [
        vec![laurent(&[(&[1, 1], 1), (&[0, 0], -1)]), laurent(&[(&[1, 0], 1), (&[0, 1], 1), (&[0, 0], -2)])],
        vec![laurent(&[(&[2, 0], 1), (&[1, 0], -1)]), laurent(&[(&[0, 1], 1), (&[0, 0], -1)])],
        vec![laurent(&[(&[1, 0], 1), (&[0, 0], -1)]), laurent(&[(&[0, 1], 1), (&[0, 0], -1)])],
        vec![
            laurent(&[(&[2, 0], 1), (&[0, 2], 1), (&[0, 0], -5)]),
            laurent(&[(&[1, 1], 1), (&[0, 0], -2)]),
        ],
    ];
    for system in cases {
        let mut solver = TorusSolver::new(&system).unwrap();
        let ours = solver.zero_dim_gb(&lex).unwrap();
        let oracle: Vec<_> = saturate(&system.iter().map(to_oracle).collect::<Vec<_>>(), 2)
            .iter()
            .map(from_oracle)
            .collect();
        assert_eq!(ours.basis.elements(), oracle.as_slice());
        assert_eq!(ours.l_size as u64, ours.mixed_volume);
    }
}
