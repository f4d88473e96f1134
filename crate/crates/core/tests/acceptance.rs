//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::panic;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use rigidlab_core::chartab::{character_table, inner_product};
use rigidlab_core::cohomology::{
    boundary_tangent_dim, fox_cocycle_h1, h1_dim_hs, restrict_to_loop, DEFAULT_BOUNDARY_LOOPS,
};
use rigidlab_core::intrep::{end0_action, multiplicity, rep_character, sigma_coinvariants, standard_rep};
use rigidlab_core::registry::{coefficient_modules, h1_solvers};
use rigidlab_core::semidirect::{
    build_group, count_rank_r_irreps, dual_character_orbits, gamma_presentation, little_groups_irreps,
    orbit_permutation_image, verify_torsion_claim, Case,
};
use rigidlab_core::symgroup::{enumerate_partitions, Partition, Permutation};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

static SUITE_START: OnceLock<Instant> = OnceLock::new();

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("{what} took {took:.2?}, limit {limit:?}"))
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// `dim H¹` by each registered method.
fn h1_by_both(r: usize, case: Case, module: &str) -> Result<(usize, usize), String> {
    let p = gamma_presentation(r, case).map_err(err)?;
    let m = coefficient_modules().get(module).map_err(err)?.build(&p).map_err(err)?;
    let solvers = h1_solvers();
    let hs = solvers.get("hs").map_err(err)?.solve(&p, &m).map_err(err)?;
    let fox = solvers.get("fox").map_err(err)?.solve(&p, &m).map_err(err)?;
    Ok((hs.dimension, fox.dimension))
}

/// Fixed points minus one: the character of Λ_r, by brute force over S_{r+1}.
fn standard_character_oracle(g: &Permutation) -> i64 {
    (0..g.degree()).filter(|&i| g.apply(i) == i).count() as i64 - 1
}

fn brute_force_average(n: usize, f: impl Fn(&Permutation) -> i64) -> BigRational {
    let all = Permutation::all(n);
    let total: i64 = all.iter().map(f).sum();
    BigRational::new(BigInt::from(total), BigInt::from(all.len()))
}

fn hook_length_dimension(lambda: &Partition) -> BigInt {
    let parts = lambda.parts();
    let conj = lambda.conjugate();
    let mut hooks = BigInt::one();
    for (i, &row) in parts.iter().enumerate() {
        for j in 0..row {
            hooks *= BigInt::from(row - j + conj.parts()[j] - i - 1);
        }
    }
    (1..=lambda.n()).fold(BigInt::one(), |acc, k| acc * BigInt::from(k)) / hooks
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let (hs, fox) = h1_by_both(2, Case::Quasi, "end0")?;
    ensure(hs == 1 && fox == 1, || format!("hs {hs}, fox {fox}, expected 1 and 1"))?;
    within(start, Duration::from_secs(10), "rank-2 quasi H¹")?;
    Ok(format!("dim H¹ = {hs} (hs) / {fox} (fox)"))
}

fn criterion_2() -> Outcome {
    let mut values = Vec::new();
    for r in [2, 4, 6] {
        let start = Instant::now();
        let lambda = standard_rep(r).map_err(err)?;
        let chi = rep_character(&lambda).map_err(err)?;
        let e = rep_character(&end0_action(&lambda).map_err(err)?).map_err(err)?;
        let mult = multiplicity(&chi, &e).map_err(err)?;
        let (hs, fox) = h1_by_both(r, Case::Projective, "end0")?;
        ensure(hs == fox, || format!("r={r}: methods disagree, {hs} vs {fox}"))?;
        ensure(BigInt::from(hs) == BigInt::from(2) * &mult && hs >= 1, || {
            format!("r={r}: dim {hs}, multiplicity {mult}")
        })?;
        if r == 2 {
            ensure(hs == 2, || format!("r=2: dim {hs}, expected 2"))?;
        }
        if r == 4 {
            within(start, Duration::from_secs(60), "rank-4 projective H¹")?;
        }
        values.push(format!("r={r}: {hs}"));
    }
    Ok(values.join(", "))
}

fn criterion_3() -> Outcome {
    for r in 2..=7 {
        let chi = rep_character(&standard_rep(r).map_err(err)?).map_err(err)?;
        let ip = inner_product(&chi, &chi).map_err(err)?;
        ensure(ip.is_one(), || format!("r={r}: ⟨χ, χ⟩ = {ip}"))?;
        let oracle = brute_force_average(r + 1, |g| standard_character_oracle(g).pow(2));
        ensure(oracle == ip, || format!("r={r}: brute force gives {oracle}"))?;
    }
    Ok("⟨χ, χ⟩ = 1 for r = 2..7".to_string())
}

fn criterion_4() -> Outcome {
    let mut values = Vec::new();
    for r in 2..=7 {
        let lambda = standard_rep(r).map_err(err)?;
        let chi = rep_character(&lambda).map_err(err)?;
        let e = rep_character(&end0_action(&lambda).map_err(err)?).map_err(err)?;
        let mult = multiplicity(&chi, &e).map_err(err)?;
        let oracle = brute_force_average(r + 1, |g| {
            let c = standard_character_oracle(g);
            (c * c - 1) * c
        });
        ensure(oracle == BigRational::from_integer(mult.clone()), || {
            format!("r={r}: multiplicity {mult}, brute force {oracle}")
        })?;
        ensure(mult >= BigInt::one(), || format!("r={r}: multiplicity {mult}"))?;
        values.push(format!("r={r}: {mult}"));
    }
    Ok(format!("multiplicities {}", values.join(", ")))
}

fn criterion_5() -> Outcome {
    for r in (2..=10).step_by(2) {
        let c = sigma_coinvariants(r).map_err(err)?;
        let d = c.elementary_divisors();
        let mut expected = vec![BigInt::one(); r - 1];
        expected.push(BigInt::from(r + 1));
        ensure(d == expected.as_slice(), || format!("r={r}: divisors {d:?}"))?;
    }
    let mut torsion_runs = 0;
    for r in [2, 4] {
        for m in 2..=6 {
            let t = verify_torsion_claim(r, Case::Quasi, m).map_err(err)?;
            ensure(t.pass, || format!("torsion claim fails at r={r}, m={m}"))?;
            torsion_runs += 1;
        }
    }
    let mut orbits_checked = 0;
    for r in [2, 4] {
        for case in [Case::Quasi, Case::Projective] {
            let q = build_group(r, case, r as u64 + 1).map_err(err)?;
            for orbit in dual_character_orbits(&q).map_err(err)?.iter().filter(|o| o.size() <= r) {
                let img = orbit_permutation_image(&q, orbit).map_err(err)?;
                ensure(img.image_order <= 2 && img.sigma_image_is_identity, || {
                    format!("r={r} {case}: orbit {:?} has image order {}", orbit.representative(), img.image_order)
                })?;
                orbits_checked += 1;
            }
        }
    }
    Ok(format!(
        "divisors (1,…,1,r+1) for r = 2..10, {torsion_runs} torsion runs, {orbits_checked} small orbits"
    ))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let quasi = count_rank_r_irreps(2, Case::Quasi).map_err(err)?;
    let proj = count_rank_r_irreps(2, Case::Projective).map_err(err)?;
    ensure(quasi.count == 4, || format!("quasi count {}", quasi.count))?;
    ensure(proj.count == 13, || format!("projective count {}", proj.count))?;
    for (case, order) in [(Case::Quasi, 54u64), (Case::Projective, 486)] {
        let q = build_group(2, case, 3).map_err(err)?;
        let sum: u64 = little_groups_irreps(&q).map_err(err)?.iter().map(|d| d.degree * d.degree).sum();
        ensure(sum == order, || format!("{case}: Σ degree² = {sum}, |Q| = {order}"))?;
    }
    within(start, Duration::from_secs(30), "rank-2 irreducible enumeration")?;
    Ok(format!("{} (quasi), {} (projective)", quasi.count, proj.count))
}

fn criterion_7() -> Outcome {
    let p = gamma_presentation(2, Case::Quasi).map_err(err)?;
    let m = coefficient_modules().get("end0").map_err(err)?.build(&p).map_err(err)?;
    let loops: Vec<Vec<i64>> = DEFAULT_BOUNDARY_LOOPS.iter().map(|g| g.to_vec()).collect();
    let mut primitive = 0;
    let mut nonzero = 0;
    for h1 in [h1_dim_hs(&p, &m).map_err(err)?, fox_cocycle_h1(&p, &m).map_err(err)?] {
        let k = boundary_tangent_dim(&m, &h1, &loops).map_err(err)?;
        ensure(k == 0, || format!("{}: boundary kernel {k}", h1.method))?;
        primitive = 0;
        nonzero = 0;
        for a in -5i64..=5 {
            for b in -5i64..=5 {
                if a == 0 && b == 0 {
                    continue;
                }
                let rep = restrict_to_loop(&m, &h1, &[a, b]).map_err(err)?;
                ensure(rep.kernel_dimension == 0, || format!("{}: kernel at ({a},{b})", h1.method))?;
                nonzero += 1;
                if num_integer::gcd(a, b) == 1 {
                    primitive += 1;
                }
            }
        }
    }
    Ok(format!(
        "boundary kernel 0; injective on all {nonzero} non-zero loops ({primitive} primitive)"
    ))
}

fn criterion_8() -> Outcome {
    let mut n = 0;
    for r in [2, 4] {
        for case in [Case::Quasi, Case::Projective] {
            for module in ["end0", "standard", "trivial"] {
                let (hs, fox) = h1_by_both(r, case, module)?;
                ensure(hs == fox, || format!("r={r} {case} {module}: hs {hs}, fox {fox}"))?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} combinations agree"))
}

fn criterion_9() -> Outcome {
    for n in 1..=8 {
        let t = character_table(n).map_err(err)?;
        t.check_orthogonality().map_err(err)?;
        let order = t.order() as i128;
        let rows = t.rows();
        let sizes = t.class_sizes();
        let k = rows.len();
        ensure(k == enumerate_partitions(n).map_err(err)?.len(), || format!("n={n}: not square"))?;
        // recomputed here from the raw integer table
        for i in 0..k {
            for j in 0..k {
                let s: i128 = (0..k).map(|c| sizes[c] as i128 * (rows[i][c] * rows[j][c]) as i128).sum();
                ensure(s == if i == j { order } else { 0 }, || format!("n={n}: rows {i},{j} give {s}"))?;
                let col: i128 = (0..k).map(|x| (rows[x][i] * rows[x][j]) as i128).sum();
                let expected = if i == j { order / sizes[i] as i128 } else { 0 };
                ensure(col == expected, || format!("n={n}: columns {i},{j} give {col}"))?;
            }
        }
        for (lambda, row) in t.irreducibles().iter().zip(rows) {
            let identity = t.classes().iter().position(|c| c.parts().iter().all(|&p| p == 1)).ok_or("no identity class")?;
            let hook = hook_length_dimension(lambda);
            ensure(BigInt::from(row[identity]) == hook, || {
                format!("n={n}: χ^{lambda}(1) = {}, hook length {hook}", row[identity])
            })?;
        }
    }
    let total = SUITE_START.get().map_or(Duration::ZERO, Instant::elapsed);
    ensure(total < Duration::from_secs(120), || format!("suite took {total:.2?}"))?;
    Ok(format!("n = 1..8 orthogonal, hook lengths match; suite {total:.2?}"))
}

fn main() {
    SUITE_START.get_or_init(Instant::now);
    let criteria: [Criterion; 9] = [
        ("H¹(Γ_2, End⁰) = 1 by both methods", criterion_1),
        ("projective H¹(End⁰) = 2 × multiplicity, r = 2, 4, 6", criterion_2),
        ("standard representation absolutely irreducible", criterion_3),
        ("standard representation inside End⁰", criterion_4),
        ("coinvariants, torsion characters, orbit images", criterion_5),
        ("rank-2 irreducible counts 4 and 13", criterion_6),
        ("boundary restriction injective", criterion_7),
        ("Fox calculus equals equivariant-Hom formula", criterion_8),
        ("S_n character tables, n ≤ 8", criterion_9),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(check).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail} [{took:.2?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why} [{took:.2?}]", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
