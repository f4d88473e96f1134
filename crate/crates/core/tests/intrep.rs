use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rigidlab_core::chartab::ClassFunction;
use rigidlab_core::intrep::{
    end0_action, multiplicity, rep_character, sigma_coinvariants, standard_rep, verify_sigma_formula, IntegerRep,
};
use rigidlab_core::linalg::{smith_normal_form, IntegerMatrix};
use rigidlab_core::symgroup::{enumerate_partitions, Partition, Permutation};
use rigidlab_core::Error;

fn m(rows: &[Vec<i64>]) -> IntegerMatrix {
    IntegerMatrix::from_rows(rows).unwrap()
}

/// `g` on `ε_j = e_j - e_{r+1}`: column `j` holds the first `r` coordinates of
/// `e_{g(j)} - e_{g(r+1)}`.
fn standard_oracle(g: &Permutation) -> IntegerMatrix {
    let n = g.degree();
    let r = n - 1;
    let mut out = IntegerMatrix::zeros(r, r);
    for j in 0..r {
        let (a, b) = (g.apply(j), g.apply(r));
        if a < r {
            out[(a, j)] += BigInt::one();
        }
        if b < r {
            out[(b, j)] -= BigInt::one();
        }
    }
    out
}

#[test]
fn standard_rep_matches_definition() {
    for r in 1..=5 {
        let rho = standard_rep(r).unwrap();
        for g in Permutation::all(r + 1) {
            assert_eq!(rho.evaluate(&g), standard_oracle(&g), "r = {r}, g = {g}");
        }
    }
}

#[test]
fn standard_rep_examples() {
    let rho = standard_rep(2).unwrap();
    assert!(rho.evaluate(&Permutation::identity(3)).is_identity());
    assert_eq!(rho.evaluate(&Permutation::adjacent(3, 1)), m(&[vec![0, 1], vec![1, 0]]));
    assert_eq!(rho.evaluate(&Permutation::long_cycle(3)), m(&[vec![-1, -1], vec![1, 0]]));
    assert!(!rho.is_odd_rank());
    assert!(standard_rep(3).unwrap().is_odd_rank());
}

#[test]
fn sigma_formula() {
    for r in 2..=10 {
        assert!(verify_sigma_formula(&standard_rep(r).unwrap()), "r = {r}");
    }
    let rho = standard_rep(4).unwrap();
    let mut gens = rho.generators().to_vec();
    gens[0] = IntegerMatrix::identity(4);
    let broken = IntegerRep::unchecked(5, gens.clone()).unwrap();
    assert!(!verify_sigma_formula(&broken));
    assert!(IntegerRep::new(5, gens).is_err());
}

#[test]
fn well_defined_on_random_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for r in 2..=6 {
        standard_rep(r).unwrap().spot_check_well_defined(&mut rng, 50).unwrap();
        end0_action(&standard_rep(r).unwrap()).unwrap().spot_check_well_defined(&mut rng, 20).unwrap();
    }
}

#[test]
fn characters() {
    let chi = rep_character(&standard_rep(2).unwrap()).unwrap();
    assert_eq!(chi, ClassFunction::from_integers(3, &[2, 0, -1]).unwrap());
    assert_eq!(rep_character(&IntegerRep::trivial(4).unwrap()).unwrap(), ClassFunction::constant(4, 1).unwrap());
    let chi4 = rep_character(&standard_rep(4).unwrap()).unwrap();
    assert_eq!(chi4.value_at(&Partition::row(5)).unwrap(), &BigInt::from(-1).into());
}

#[test]
fn end0_characters() {
    let e2 = end0_action(&standard_rep(2).unwrap()).unwrap();
    assert_eq!(e2.degree(), 3);
    assert_eq!(rep_character(&e2).unwrap(), ClassFunction::from_integers(3, &[3, -1, 0]).unwrap());
    assert!(e2.evaluate(&Permutation::identity(3)).is_identity());
    for r in 2..=6 {
        let rho = standard_rep(r).unwrap();
        let chi = rep_character(&rho).unwrap();
        let e = rep_character(&end0_action(&rho).unwrap()).unwrap();
        let expected = chi.mul(&chi).unwrap().sub(&ClassFunction::constant(r + 1, 1).unwrap()).unwrap();
        assert_eq!(e, expected, "r = {r}");
    }
    let e4 = rep_character(&end0_action(&standard_rep(4).unwrap()).unwrap()).unwrap();
    assert_eq!(e4.dimension(), &BigInt::from(15).into());
}

#[test]
fn end0_is_conjugation() {
    // X ↦ ρ(g) X ρ(g)⁻¹ on trace-zero matrices, read back in the documented basis
    let r = 3;
    let rho = standard_rep(r).unwrap();
    let e = end0_action(&rho).unwrap();
    let basis = |k: usize| -> IntegerMatrix {
        let mut x = IntegerMatrix::zeros(r, r);
        let off = r * (r - 1);
        if k < off {
            let i = k / (r - 1);
            let j = k % (r - 1);
            x[(i, if j >= i { j + 1 } else { j })] = BigInt::one();
        } else {
            x[(k - off, k - off)] = BigInt::one();
            x[(k - off + 1, k - off + 1)] = -BigInt::one();
        }
        x
    };
    for g in Permutation::all(r + 1) {
        let a = rho.evaluate(&g);
        let a_inv = a.inverse_unimodular().unwrap();
        let eg = e.evaluate(&g);
        for k in 0..r * r - 1 {
            let conj = &(&a * &basis(k)) * &a_inv;
            let mut rebuilt = IntegerMatrix::zeros(r, r);
            for l in 0..r * r - 1 {
                let c = eg[(l, k)].clone();
                let b = basis(l);
                for i in 0..r {
                    for j in 0..r {
                        rebuilt[(i, j)] += &c * &b[(i, j)];
                    }
                }
            }
            assert_eq!(rebuilt, conj);
        }
    }
}

#[test]
fn multiplicities() {
    let chi = rep_character(&standard_rep(2).unwrap()).unwrap();
    let e = rep_character(&end0_action(&standard_rep(2).unwrap()).unwrap()).unwrap();
    assert_eq!(multiplicity(&chi, &e).unwrap(), BigInt::one());
    assert_eq!(multiplicity(&chi, &chi).unwrap(), BigInt::one());
    for r in 2..=6 {
        let rho = standard_rep(r).unwrap();
        let e = rep_character(&end0_action(&rho).unwrap()).unwrap();
        assert_eq!(multiplicity(&ClassFunction::constant(r + 1, 1).unwrap(), &e).unwrap(), BigInt::zero());
    }
    let odd = ClassFunction::from_integers(3, &[1, 0, 0]).unwrap();
    assert!(matches!(multiplicity(&chi, &odd), Err(Error::Input(_))));
}

#[test]
fn snf_examples() {
    let id = smith_normal_form(&IntegerMatrix::identity(4)).unwrap();
    assert_eq!(id.elementary_divisors, vec![BigInt::one(); 4]);
    let d = smith_normal_form(&IntegerMatrix::diagonal(&[2, 3])).unwrap();
    assert_eq!(d.elementary_divisors, vec![BigInt::from(1), BigInt::from(6)]);
    let z = smith_normal_form(&IntegerMatrix::zeros(3, 2)).unwrap();
    assert!(z.elementary_divisors.iter().all(Zero::is_zero));
    assert!(matches!(
        smith_normal_form(&IntegerMatrix::zeros(201, 1)),
        Err(Error::SizeLimit { .. })
    ));
}

#[test]
fn z2_mod_diag_2_3_is_cyclic_of_order_6() {
    // the quotient Z/2 × Z/3, enumerated: some element has order 6
    let elements: Vec<(i64, i64)> = (0..2).flat_map(|a| (0..3).map(move |b| (a, b))).collect();
    assert_eq!(elements.len(), 6);
    let order = |(a, b): (i64, i64)| (1..=6).find(|k| (k * a) % 2 == 0 && (k * b) % 3 == 0).unwrap();
    assert_eq!(elements.iter().map(|&e| order(e)).max(), Some(6));
}

#[test]
fn coinvariants() {
    let c2 = sigma_coinvariants(2).unwrap();
    assert_eq!(c2.elementary_divisors(), &[BigInt::from(1), BigInt::from(3)]);
    assert_eq!(c2.quotient_order(), BigInt::from(3));
    let c4 = sigma_coinvariants(4).unwrap();
    let expected: Vec<BigInt> = [1, 1, 1, 5].iter().map(|&x| BigInt::from(x)).collect();
    assert_eq!(c4.elementary_divisors(), expected.as_slice());
    for r in (2..=10).step_by(2) {
        let c = sigma_coinvariants(r).unwrap();
        assert_eq!(c.quotient_order(), BigInt::from(r + 1));
        assert_eq!(c.determinant, BigInt::from(r + 1));
        assert_eq!(c.elementary_divisors().iter().filter(|d| !d.is_one()).count(), 1);
    }
    assert_eq!(sigma_coinvariants(3).unwrap_err(), Error::OddRank(3));
}

#[test]
fn matrix_json_is_decimal_strings() {
    let v = serde_json::to_value(m(&[vec![1, -2], vec![30, 4]])).unwrap();
    assert_eq!(v, serde_json::json!([["1", "-2"], ["30", "4"]]));
    let back: IntegerMatrix = serde_json::from_value(v).unwrap();
    assert_eq!(back, m(&[vec![1, -2], vec![30, 4]]));
}

fn random_matrix(rows: usize, cols: usize, seed: u64) -> IntegerMatrix {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let data: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-9..=9)).collect()).collect();
    m(&data)
}

#[test]
fn snf_round_trip_on_200_random_matrices() {
    for seed in 0..200u64 {
        let (rows, cols) = (1 + (seed % 6) as usize, 1 + ((seed / 6) % 6) as usize);
        let a = random_matrix(rows, cols, seed);
        let s = smith_normal_form(&a).unwrap();
        assert_eq!(&(&s.u * &a) * &s.v, s.d, "seed {seed}");
        assert!(s.u.is_unimodular() && s.v.is_unimodular());
        for w in s.elementary_divisors.windows(2) {
            assert!(w[0] >= BigInt::zero());
            assert!(w[1].is_zero() || (w[1].clone() % &w[0]).is_zero() && !w[0].is_zero());
        }
        // d_1 is the gcd of the entries
        let g = (0..rows)
            .flat_map(|i| (0..cols).map(move |j| (i, j)))
            .fold(BigInt::zero(), |acc, (i, j)| acc.gcd(&a[(i, j)]));
        assert_eq!(s.elementary_divisors[0], g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn snf_of_square_matrix_multiplies_to_det(n in 1usize..=5, seed in any::<u64>()) {
        let a = random_matrix(n, n, seed);
        let s = smith_normal_form(&a).unwrap();
        let prod = s.elementary_divisors.iter().fold(BigInt::one(), |acc, d| acc * d);
        prop_assert_eq!(prod, a.determinant().abs());
    }

    #[test]
    fn determinant_is_multiplicative(n in 1usize..=4, s1 in any::<u64>(), s2 in any::<u64>()) {
        let (a, b) = (random_matrix(n, n, s1), random_matrix(n, n, s2));
        prop_assert_eq!((&a * &b).determinant(), a.determinant() * b.determinant());
    }

    #[test]
    fn standard_rep_is_a_homomorphism(r in 1usize..=6, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rho = standard_rep(r).unwrap();
        let (g, h) = (Permutation::random(r + 1, &mut rng), Permutation::random(r + 1, &mut rng));
        prop_assert_eq!(rho.evaluate(&g.compose(&h)), &rho.evaluate(&g) * &rho.evaluate(&h));
    }
}

#[test]
fn every_class_has_a_value() {
    for r in 2..=7 {
        let chi = rep_character(&standard_rep(r).unwrap()).unwrap();
        assert_eq!(chi.values().len(), enumerate_partitions(r + 1).unwrap().len());
    }
}
