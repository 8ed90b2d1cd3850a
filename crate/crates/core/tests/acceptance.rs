//! Acceptance criteria, one test per criterion. Each test prints a single
//! `criterion N: PASS|FAIL` line.

use std::time::{Duration, Instant};

use num_traits::{One, Signed};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use zonalkit::rational::{self, double_factorial_odd, frac, int};
use zonalkit::{
    anisotropic_cumulants, canonical_couple, couples_of_type_count, enumerate_pair_partitions, evaluate_kerov,
    jack_oracle, kerov_integrality_report, kerov_oracle, kerov_polynomial_combinatorial, loop_structure, n1_bruteforce,
    n2_bruteforce, pfun_coefficient, stanley_polynomial, stanley_positivity_report, symplectic_kerov, zonal_character,
    zonal_character_oracle, zonal_character_orbit_formula, zonal_polynomial, MultiRect, PQPolynomial, PairPartition,
    Partition,
};

fn report(n: u32, what: &str, outcome: Result<(), String>) {
    match &outcome {
        Ok(()) => println!("criterion {n:>2}: PASS  {what}"),
        Err(e) => println!("criterion {n:>2}: FAIL  {what}: {e}"),
    }
    if let Err(e) = outcome {
        panic!("criterion {n} failed: {e}");
    }
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    check(t < limit, || format!("took {t:?}, limit {limit:?}"))
}

fn part(v: &[u32]) -> Partition {
    Partition::new(v.to_vec())
}

#[test]
fn criterion_01_zonal_two_one() {
    let run = || {
        let start = Instant::now();
        let z = zonal_polynomial(&part(&[2, 1])).map_err(|e| e.to_string())?;
        let text = z.to_text();
        check(text == "p[1,1,1] + p[2,1] - 2*p[3]", || format!("got {text}"))?;
        within(start, Duration::from_secs(1))
    };
    report(1, "Z_(2,1) = p_(1,1,1) + p_(2,1) - 2 p_(3)", run());
}

#[test]
fn criterion_02_zonal_matches_jack_oracle() {
    let run = || {
        let start = Instant::now();
        let all: Vec<_> = (1..=5).flat_map(Partition::all).collect();
        check(all.len() == 18, || format!("{} partitions", all.len()))?;
        for lambda in &all {
            let a = zonal_polynomial(lambda).map_err(|e| e.to_string())?;
            let b = jack_oracle(lambda).map_err(|e| e.to_string())?;
            check(a == b, || format!("{lambda}: {a} vs {b}"))?;
        }
        within(start, Duration::from_secs(30))
    };
    report(
        2,
        "zonal_polynomial = jack_oracle for the 18 partitions of size 1..5",
        run(),
    );
}

#[test]
fn criterion_03_normalisation() {
    let run = || {
        for lambda in Partition::all_up_to(5) {
            let z = zonal_polynomial(&lambda).map_err(|e| e.to_string())?;
            let c = pfun_coefficient(&z, &Partition::new(vec![1; lambda.size()]));
            check(c.is_one(), || format!("{lambda}: [p_1^n] = {c}"))?;
        }
        Ok(())
    };
    report(3, "[p_(1^n)] Z_lambda = 1 for |lambda| <= 5", run());
}

#[test]
fn criterion_04_sigma_two_closed_form() {
    let run = || {
        for lambda in Partition::all_up_to(6) {
            let v = zonal_character(&part(&[2]), &lambda).map_err(|e| e.to_string())?;
            let expected = int(2 * lambda.sum_of_squares() as i64
                - lambda.conjugate().sum_of_squares() as i64
                - lambda.size() as i64);
            check(v == expected, || format!("{lambda}: {v} vs {expected}"))?;
        }
        Ok(())
    };
    report(
        4,
        "Sigma_(2)(lambda) = 2 sum lambda_i^2 - sum lambda'_i^2 - |lambda| for |lambda| <= 6",
        run(),
    );
}

#[test]
fn criterion_05_stanley_mu_two() {
    let run = || {
        let m = 3;
        let p = |i| PQPolynomial::p(m, i);
        let q = |i| PQPolynomial::q(m, i);
        let mut expected = PQPolynomial::zero(m);
        for i in 1..=m {
            expected = &expected + &(&p(i) * &q(i).pow(2)).scale(&int(2));
            expected = &expected - &(&p(i) * &q(i));
            for j in 1..=m {
                expected = &expected - &(&(&p(i) * &p(j)) * &q(i.max(j)));
            }
        }
        let f = stanley_polynomial(&part(&[2]), m).map_err(|e| e.to_string())?;
        check(f == expected, || format!("{f} vs {expected}"))
    };
    report(5, "Stanley polynomial of (2) in 3 rectangles", run());
}

#[test]
fn criterion_06_character_routes_agree() {
    let run = || {
        let start = Instant::now();
        let mut cases = 0;
        for mu in Partition::all_up_to(4).into_iter().filter(|m| !m.is_empty()) {
            for lambda in Partition::all_up_to(5).into_iter().filter(|l| l.size() >= mu.size()) {
                let a = zonal_character(&mu, &lambda).map_err(|e| e.to_string())?;
                let b = zonal_character_oracle(&mu, &lambda).map_err(|e| e.to_string())?;
                let c = zonal_character_orbit_formula(&mu, &lambda).map_err(|e| e.to_string())?;
                check(a == b && b == c, || format!("mu={mu} lambda={lambda}: {a}, {b}, {c}"))?;
                cases += 1;
            }
        }
        check(cases > 0, || "no cases".into())?;
        within(start, Duration::from_secs(300))
    };
    report(
        6,
        "direct = coefficient extraction = orbit formula, |mu| <= 4, |lambda| <= 5",
        run(),
    );
}

#[test]
fn criterion_07_n2_equals_power_of_two_n1() {
    let run = || {
        let lambdas = [part(&[1]), part(&[2]), part(&[1, 1]), part(&[2, 1])];
        fn relation(a: &PairPartition, b: &PairPartition, c: &PairPartition, l: &Partition) -> Result<(), String> {
            let loops = loop_structure(a, b).map_err(|e| e.to_string())?.count();
            let n1 = n1_bruteforce(a, b, c, l).map_err(|e| e.to_string())?;
            let n2 = n2_bruteforce(a, b, c, l).map_err(|e| e.to_string())?;
            check(n2 == n1 << loops, || {
                format!("{a} {b} {c} on {l}: {n2} vs 2^{loops} * {n1}")
            })
        }
        for k in 1..=2 {
            let all: Vec<_> = enumerate_pair_partitions(k).map_err(|e| e.to_string())?.collect();
            for l in &lambdas {
                for a in &all {
                    for b in &all {
                        for c in &all {
                            relation(a, b, c, l)?;
                        }
                    }
                }
            }
        }
        let all: Vec<_> = enumerate_pair_partitions(3).map_err(|e| e.to_string())?.collect();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let (a, b, c) = (
                all.choose(&mut rng).unwrap(),
                all.choose(&mut rng).unwrap(),
                all.choose(&mut rng).unwrap(),
            );
            relation(a, b, c, lambdas.choose(&mut rng).unwrap())?;
        }
        Ok(())
    };
    report(7, "N2 = 2^|L(S0,S1)| N1, exhaustive k <= 2 and 200 random k = 3", run());
}

#[test]
fn criterion_08_kerov_count_and_oracle() {
    let run = || {
        let start = Instant::now();
        let count = kerov_polynomial_combinatorial(&part(&[2])).map_err(|e| e.to_string())?;
        let oracle = kerov_oracle(2).map_err(|e| e.to_string())?;
        for f in [&count, &oracle] {
            check(f.to_text() == "4*R3 - 2*R2", || format!("K_(2) = {f}"))?;
        }
        for k in 1..=4u32 {
            let a = kerov_polynomial_combinatorial(&Partition::row(k)).map_err(|e| e.to_string())?;
            let b = kerov_oracle(k as usize).map_err(|e| e.to_string())?;
            check(a == b, || format!("k={k}: {a} vs {b}"))?;
        }
        within(start, Duration::from_secs(300))
    };
    report(
        8,
        "K_(2) = 4 R3 - 2 R2 by counting and by the oracle; count = oracle for k <= 4",
        run(),
    );
}

#[test]
fn criterion_09_kerov_evaluation() {
    let run = || {
        let two = int(2);
        let r = anisotropic_cumulants(&MultiRect::of_partition(&part(&[2, 1])), &two, 3).map_err(|e| e.to_string())?;
        check(r[2] == frac(5, 4), || format!("R3^(2)((2,1)) = {}", r[2]))?;
        for k in 1..=3u32 {
            let f = kerov_polynomial_combinatorial(&Partition::row(k)).map_err(|e| e.to_string())?;
            for lambda in Partition::all_up_to(5) {
                let v = evaluate_kerov(&f, &MultiRect::of_partition(&lambda), &two).map_err(|e| e.to_string())?;
                let s = zonal_character(&Partition::row(k), &lambda).map_err(|e| e.to_string())?;
                check(v == s, || format!("k={k} lambda={lambda}: {v} vs {s}"))?;
            }
        }
        Ok(())
    };
    report(
        9,
        "K_(k)(R^(2)(lambda)) = Sigma_(k)(lambda) for k <= 3, |lambda| <= 5",
        run(),
    );
}

#[test]
fn criterion_10_integrality_and_positivity() {
    let run = || {
        for n in 1..=4 {
            for mu in Partition::all(n) {
                let s = stanley_positivity_report(&mu).map_err(|e| e.to_string())?;
                check(s.is_poly_nonneg_int, || format!("Stanley {mu}: {:?}", s.witness))?;
                let k = kerov_integrality_report(&mu).map_err(|e| e.to_string())?;
                check(k.passed, || format!("Kerov {mu}: {:?}", k.violation))?;
                let h = symplectic_kerov(&mu).map_err(|e| e.to_string())?;
                check(h.terms().all(|(_, c)| !c.is_negative()), || {
                    format!("K^(1/2)_{mu} = {h}")
                })?;
            }
        }
        Ok(())
    };
    report(
        10,
        "Stanley positivity, Kerov integrality and divisibility, symplectic Kerov positivity, |mu| <= 4",
        run(),
    );
}

#[test]
fn criterion_11_cumulant_duality() {
    let run = || {
        let (two, half) = (int(2), frac(1, 2));
        for lambda in Partition::all_up_to(6) {
            let m = MultiRect::of_partition(&lambda);
            let a = anisotropic_cumulants(&m, &half, 6).map_err(|e| e.to_string())?;
            let b = anisotropic_cumulants(&m.conjugate(), &two, 6).map_err(|e| e.to_string())?;
            for k in 0..6 {
                let rhs = &b[k] * rational::pow(&int(-2), k as i64 + 1);
                check(a[k] == rhs, || format!("{lambda} k={}: {} vs {rhs}", k + 1, a[k]))?;
            }
        }
        Ok(())
    };
    report(
        11,
        "R_k^(1/2)(lambda) = (-2)^k R_k^(2)(lambda') for k <= 6, |lambda| <= 6",
        run(),
    );
}

#[test]
fn criterion_12_counting() {
    let run = || {
        for k in 1..=6 {
            let n = enumerate_pair_partitions(k).map_err(|e| e.to_string())?.count();
            let expected = double_factorial_odd(k as u64);
            check(expected == n.into(), || format!("k={k}: {n} vs {expected}"))?;
        }
        for n in 1..=4 {
            for mu in Partition::all(n) {
                let all: Vec<_> = enumerate_pair_partitions(n).map_err(|e| e.to_string())?.collect();
                let (s1, s2) = canonical_couple(&mu).map_err(|e| e.to_string())?;
                let target = loop_structure(&s1, &s2).map_err(|e| e.to_string())?.loop_type().clone();
                let mut found = 0u64;
                for a in &all {
                    for b in &all {
                        if loop_structure(a, b).map_err(|e| e.to_string())?.loop_type() == &target {
                            found += 1;
                        }
                    }
                }
                let formula = couples_of_type_count(&mu);
                check(formula == found.into(), || format!("{mu}: {formula} vs {found}"))?;
            }
        }
        Ok(())
    };
    report(
        12,
        "(2k-1)!! pair-partitions for k <= 6; couples of each type for n <= 4",
        run(),
    );
}
