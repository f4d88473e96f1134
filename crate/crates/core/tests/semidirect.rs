use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rigidlab_core::chartab::character_table;
use rigidlab_core::cyclotomic::Cyclotomic;
use rigidlab_core::semidirect::{
    build_group, character_field, count_rank_r_irreps, dual_character_orbits, gamma_presentation,
    little_groups_irreps, orbit_permutation_image, verify_torsion_claim, Case, QElement, SemidirectGroup,
};
use rigidlab_core::symgroup::Permutation;
use rigidlab_core::Error;

fn sorted<T: Ord>(mut v: Vec<T>) -> Vec<T> {
    v.sort();
    v
}

#[test]
fn quotient_orders() {
    assert_eq!(build_group(2, Case::Quasi, 3).unwrap().order(), Some(BigUint::from(54u32)));
    assert_eq!(build_group(2, Case::Projective, 3).unwrap().order(), Some(BigUint::from(486u32)));
    assert_eq!(build_group(2, Case::Quasi, 1).unwrap().order(), Some(BigUint::from(6u32)));
    assert_eq!(build_group(2, Case::Quasi, 0).unwrap().order(), None);
    assert_eq!(build_group(3, Case::Quasi, 3).unwrap_err(), Error::OddRank(3));
}

#[test]
fn enumeration_matches_order() {
    let q = build_group(2, Case::Quasi, 3).unwrap();
    let elements = q.elements().unwrap();
    assert_eq!(elements.len(), 54);
    let unique: std::collections::HashSet<_> = elements.iter().collect();
    assert_eq!(unique.len(), 54);
}

#[test]
fn group_laws_on_1000_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for r in [2, 4] {
        for case in [Case::Quasi, Case::Projective] {
            for m in [0, r as u64 + 1] {
                build_group(r, case, m).unwrap().check_group_laws(&mut rng, 1000).unwrap();
            }
        }
    }
}

#[test]
fn presentation_shapes() {
    let p = gamma_presentation(2, Case::Quasi).unwrap();
    assert_eq!(p.generator_count(), 4);
    assert_eq!(p.relators.len(), 8);
    assert_eq!(p.abelianization().unwrap(), vec![BigInt::from(2)]);
    assert_eq!(gamma_presentation(3, Case::Quasi).unwrap_err(), Error::OddRank(3));
}

/// Homomorphisms Γ → Z/n counted by brute force over generator images.
fn count_homs_to_cyclic(r: usize, case: Case, n: i64) -> usize {
    let p = gamma_presentation(r, case).unwrap();
    let g = p.generator_count();
    let sums: Vec<Vec<i64>> = p.relators.iter().map(|w| w.exponent_sums(g)).collect();
    let total = (n as usize).pow(g as u32);
    (0..total)
        .filter(|&code| {
            let images: Vec<i64> = (0..g).map(|i| (code / (n as usize).pow(i as u32)) as i64 % n).collect();
            sums.iter().all(|s| s.iter().zip(&images).map(|(a, b)| a * b).sum::<i64>().rem_euclid(n) == 0)
        })
        .count()
}

#[test]
fn abelianization_against_homomorphism_counts() {
    for n in 2..=6 {
        // |Hom(Z/2, Z/n)| = gcd(2, n)
        assert_eq!(count_homs_to_cyclic(2, Case::Quasi, n), num_integer::gcd(2, n) as usize, "n = {n}");
    }
}

#[test]
fn relators_hold_in_the_finite_quotient() {
    for case in [Case::Quasi, Case::Projective] {
        let p = gamma_presentation(2, case).unwrap();
        let q = build_group(2, case, 3).unwrap();
        let gens = q.generators();
        let inverses: Vec<QElement> = gens.iter().map(|g| q.inv(g)).collect();
        for w in &p.relators {
            let value = w.evaluate(&gens, &inverses, &q.identity(), |a, b| q.mul(a, b));
            assert_eq!(value, q.identity(), "{}", w.render(&p.generator_names));
        }
    }
}

fn orbit_sizes(q: &SemidirectGroup) -> Vec<usize> {
    sorted(dual_character_orbits(q).unwrap().iter().map(|o| o.size()).collect())
}

#[test]
fn dual_orbits() {
    let q = build_group(2, Case::Quasi, 3).unwrap();
    assert_eq!(orbit_sizes(&q), vec![1, 2, 3, 3]);
    let p = build_group(2, Case::Projective, 3).unwrap();
    let orbits = dual_character_orbits(&p).unwrap();
    let fixed: Vec<usize> = sorted(orbits.iter().filter(|o| o.sigma_fixed).map(|o| o.size()).collect());
    assert_eq!(fixed, vec![1, 2, 2, 2, 2]);
    for r in [2, 4] {
        for case in [Case::Quasi, Case::Projective] {
            for m in 1..=4u64 {
                if r == 4 && case == Case::Projective && m > 3 {
                    continue;
                }
                let q = build_group(r, case, m).unwrap();
                let orbits = dual_character_orbits(&q).unwrap();
                assert_eq!(orbits[0].size(), 1);
                assert!(orbits[0].representative().iter().all(|&x| x == 0));
                let total: usize = orbits.iter().map(|o| o.size()).sum();
                assert_eq!(total as u64, m.pow(q.lattice_rank() as u32));
            }
        }
    }
}

#[test]
fn sigma_fixed_count_is_m_torsion_of_coinvariants() {
    // Λ_r/(σ-1)Λ_r ≅ Z/(r+1), so σ-fixed characters of (Z/m)^r number gcd(m, r+1)
    for r in [2, 4] {
        for m in 1..=7u64 {
            let q = build_group(r, Case::Quasi, m).unwrap();
            let sigma = q.sigma();
            let fixed = q
                .lattice_vectors()
                .unwrap()
                .into_iter()
                .filter(|u| q.act_on_dual(&sigma, u) == *u)
                .count() as u64;
            assert_eq!(fixed, num_integer::gcd(m, r as u64 + 1), "r = {r}, m = {m}");
        }
    }
}

#[test]
fn torsion_examples() {
    let t = verify_torsion_claim(2, Case::Quasi, 3).unwrap();
    assert!(t.pass);
    assert_eq!(sorted(t.sigma_fixed.iter().map(|(c, _)| c.order()).collect()), vec![1, 3, 3]);
    let t = verify_torsion_claim(2, Case::Quasi, 2).unwrap();
    assert!(t.pass);
    assert_eq!(t.sigma_fixed.len(), 1);
    assert!(verify_torsion_claim(4, Case::Quasi, 5).unwrap().pass);
    assert_eq!(verify_torsion_claim(3, Case::Quasi, 4).unwrap_err(), Error::OddRank(3));
}

#[test]
fn permutation_images() {
    let q = build_group(2, Case::Quasi, 3).unwrap();
    for orbit in dual_character_orbits(&q).unwrap() {
        let img = orbit_permutation_image(&q, &orbit).unwrap();
        match orbit.size() {
            1 => assert_eq!(img.image_order, 1),
            2 => {
                assert_eq!(img.image_order, 2);
                assert!(img.sigma_image_is_identity);
            }
            _ => assert_eq!(img.image_order, 6),
        }
    }
}

fn degrees(r: usize, case: Case, m: u64) -> Vec<u64> {
    sorted(little_groups_irreps(&build_group(r, case, m).unwrap()).unwrap().iter().map(|d| d.degree).collect())
}

#[test]
fn irreducible_degrees() {
    assert_eq!(degrees(2, Case::Quasi, 3), vec![1, 1, 2, 2, 2, 2, 3, 3, 3, 3]);
    for r in [2, 4] {
        let table: Vec<u64> = sorted(character_table(r + 1).unwrap().degrees().iter().map(|&d| d as u64).collect());
        assert_eq!(degrees(r, Case::Quasi, 1), table);
    }
    let sum: u64 = degrees(2, Case::Projective, 3).iter().map(|d| d * d).sum();
    assert_eq!(sum, 486);
}

#[test]
fn rank_two_counts() {
    let q = count_rank_r_irreps(2, Case::Quasi).unwrap();
    assert_eq!(q.count, 4);
    assert_eq!(q.linear_count, 2);
    let p = count_rank_r_irreps(2, Case::Projective).unwrap();
    assert_eq!(p.count, 13);
    let histogram: BTreeMap<u64, usize> = p.degree_histogram.clone();
    assert_eq!(histogram.get(&2), Some(&13));
    // one through S_3, the rest induced from size-2 orbits
    assert_eq!(p.descriptors.iter().filter(|d| d.orbit_size == 1).count(), 1);
    assert_eq!(p.descriptors.iter().filter(|d| d.orbit_size == 2).count(), 12);
}

#[test]
fn the_representation_through_s3_is_trivial_on_the_lattice() {
    let q = build_group(2, Case::Quasi, 3).unwrap();
    let field = character_field(&q);
    let irreps = little_groups_irreps(&q).unwrap();
    let m = irreps.iter().find(|d| d.degree == 2 && d.lattice_acts_trivially()).unwrap();
    let id = Permutation::identity(3);
    for v in q.lattice_vectors().unwrap() {
        let x = q.element(v, id.clone());
        assert_eq!(m.character_at(&q, &x, &field), Cyclotomic::from_integer(&field, 2));
    }
}

fn check_character_table(r: usize, case: Case, m: u64) {
    let q = build_group(r, case, m).unwrap();
    let order = q.order().unwrap();
    let classes = q.conjugacy_classes().unwrap();
    let irreps = little_groups_irreps(&q).unwrap();
    assert_eq!(irreps.len(), classes.len());
    let field = character_field(&q);
    let table: Vec<Vec<Cyclotomic>> = irreps
        .iter()
        .map(|d| classes.iter().map(|c| d.character_at(&q, &c[0], &field)).collect())
        .collect();
    for (i, a) in table.iter().enumerate() {
        for (j, b) in table.iter().enumerate().skip(i) {
            let mut acc = Cyclotomic::zero(&field);
            for (k, c) in classes.iter().enumerate() {
                let size = num_rational::BigRational::from_integer(BigInt::from(c.len()));
                acc = &acc + &(&a[k] * &b[k].conj()).scale(&size);
            }
            let expected = if i == j { BigInt::from(order.clone()) } else { BigInt::from(0) };
            assert_eq!(acc.to_integer(), Some(expected), "rows {i}, {j}");
        }
    }
    // class functions: constant on each class
    for d in irreps.iter().take(4) {
        for c in classes.iter().take(6) {
            let v = d.character_at(&q, &c[0], &field);
            for x in c.iter().take(5) {
                assert_eq!(d.character_at(&q, x, &field), v);
            }
        }
    }
}

#[test]
fn characters_are_orthonormal_and_complete() {
    check_character_table(2, Case::Quasi, 3);
    check_character_table(2, Case::Quasi, 2);
    check_character_table(2, Case::Projective, 3);
}

#[test]
fn little_groups_cap() {
    let q = build_group(4, Case::Projective, 5).unwrap();
    assert!(matches!(little_groups_irreps(&q), Err(Error::SizeLimit { .. })));
    let infinite = build_group(2, Case::Quasi, 0).unwrap();
    assert!(matches!(little_groups_irreps(&infinite), Err(Error::Input(_))));
}

#[test]
fn descriptor_json() {
    let q = count_rank_r_irreps(2, Case::Quasi).unwrap();
    let j = q.descriptors_json();
    let first = &j[0];
    for key in ["orbit_rep", "orbit_size", "stabilizer_order", "stab_irrep_degree", "degree"] {
        assert!(first.get(key).is_some(), "missing {key}");
    }
}
