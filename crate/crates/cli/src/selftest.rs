//! Built-in verification suite.

use std::time::Instant;

use zonalkit::rational::{self, double_factorial_odd, frac, int};
use zonalkit::{
    anisotropic_cumulants, enumerate_pair_partitions, evaluate_kerov, jack_oracle, kerov_integrality_report,
    kerov_oracle, kerov_polynomial_combinatorial, loop_structure, n1_bruteforce, n1_graph, n2_bruteforce,
    stanley_positivity_report, symplectic_character, symplectic_kerov, triplet_graph, zonal_character,
    zonal_character_oracle, zonal_character_orbit_formula, zonal_polynomial, MultiRect, Partition,
};

use crate::args::Level;

type Check = Result<(), String>;
type CheckFn = fn(&Bounds) -> Check;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: zonalkit::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn nonempty(n: usize) -> impl Iterator<Item = Partition> {
    Partition::all_up_to(n).into_iter().filter(|p| !p.is_empty())
}

struct Bounds {
    zonal: usize,
    mu: usize,
    lambda: usize,
    kerov: usize,
    triplets: usize,
}

fn zonal_example() -> Check {
    let z = lib(zonal_polynomial(&Partition::new(vec![2, 1])))?;
    ensure(z.to_text() == "p[1,1,1] + p[2,1] - 2*p[3]", || format!("Z_(2,1) = {z}"))
}

fn zonal_vs_jack(b: &Bounds) -> Check {
    for lambda in nonempty(b.zonal) {
        let (x, y) = (lib(zonal_polynomial(&lambda))?, lib(jack_oracle(&lambda))?);
        ensure(x == y, || format!("{lambda}: {x} vs {y}"))?;
    }
    Ok(())
}

fn character_routes(b: &Bounds) -> Check {
    for mu in nonempty(b.mu) {
        for lambda in Partition::all_up_to(b.lambda)
            .into_iter()
            .filter(|l| l.size() >= mu.size())
        {
            let x = lib(zonal_character(&mu, &lambda))?;
            let y = lib(zonal_character_oracle(&mu, &lambda))?;
            let z = lib(zonal_character_orbit_formula(&mu, &lambda))?;
            ensure(x == y && y == z, || format!("mu={mu} lambda={lambda}: {x}, {y}, {z}"))?;
        }
    }
    Ok(())
}

fn sigma_two(b: &Bounds) -> Check {
    for lambda in Partition::all_up_to(b.lambda + 1) {
        let v = lib(zonal_character(&Partition::row(2), &lambda))?;
        let e =
            int(2 * lambda.sum_of_squares() as i64 - lambda.conjugate().sum_of_squares() as i64 - lambda.size() as i64);
        ensure(v == e, || format!("{lambda}: {v} vs {e}"))?;
    }
    Ok(())
}

fn n_functions(b: &Bounds) -> Check {
    let lambdas = [
        Partition::new(vec![1]),
        Partition::new(vec![2]),
        Partition::new(vec![1, 1]),
        Partition::new(vec![2, 1]),
    ];
    for k in 1..=b.triplets {
        let all: Vec<_> = lib(enumerate_pair_partitions(k))?.collect();
        for l in &lambdas {
            let mr = MultiRect::of_partition(l);
            for a in &all {
                for c in &all {
                    for d in &all {
                        let n1 = lib(n1_bruteforce(a, c, d, l))?;
                        let g = lib(triplet_graph(a, c, d))?;
                        ensure(n1_graph(g.graph(), &mr) == int(n1 as i64), || {
                            format!("graph count {a} {c} {d} on {l}")
                        })?;
                        let loops = lib(loop_structure(a, c))?.count();
                        let n2 = lib(n2_bruteforce(a, c, d, l))?;
                        ensure(n2 == n1 << loops, || format!("N2 {a} {c} {d} on {l}"))?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn kerov_routes(b: &Bounds) -> Check {
    let f = lib(kerov_polynomial_combinatorial(&Partition::row(2)))?;
    ensure(f.to_text() == "4*R3 - 2*R2", || format!("K_(2) = {f}"))?;
    for k in 1..=b.kerov {
        let x = lib(kerov_polynomial_combinatorial(&Partition::row(k as u32)))?;
        let y = lib(kerov_oracle(k))?;
        ensure(x == y, || format!("k={k}: {x} vs {y}"))?;
    }
    Ok(())
}

fn kerov_evaluation(b: &Bounds) -> Check {
    let (two, half) = (int(2), frac(1, 2));
    for k in 1..=3u32 {
        let mu = Partition::row(k);
        let f = lib(kerov_polynomial_combinatorial(&mu))?;
        let h = lib(symplectic_kerov(&mu))?;
        for lambda in Partition::all_up_to(b.lambda) {
            let m = MultiRect::of_partition(&lambda);
            let (v, s) = (lib(evaluate_kerov(&f, &m, &two))?, lib(zonal_character(&mu, &lambda))?);
            ensure(v == s, || format!("K_{mu}({lambda}) = {v}, Sigma = {s}"))?;
            let (v, s) = (
                lib(evaluate_kerov(&h, &m, &half))?,
                lib(symplectic_character(&mu, &lambda))?,
            );
            ensure(v == s, || format!("K^(1/2)_{mu}({lambda}) = {v}, Sigma = {s}"))?;
        }
    }
    Ok(())
}

fn positivity(b: &Bounds) -> Check {
    for mu in nonempty(b.mu) {
        let s = lib(stanley_positivity_report(&mu))?;
        ensure(s.is_poly_nonneg_int, || format!("Stanley {mu}: {:?}", s.witness))?;
        let k = lib(kerov_integrality_report(&mu))?;
        ensure(k.passed, || format!("Kerov {mu}: {:?}", k.violation))?;
        lib(symplectic_kerov(&mu))?;
    }
    Ok(())
}

fn duality(b: &Bounds) -> Check {
    let (two, half) = (int(2), frac(1, 2));
    for lambda in Partition::all_up_to(b.lambda + 1) {
        let m = MultiRect::of_partition(&lambda);
        let x = lib(anisotropic_cumulants(&m, &half, 6))?;
        let y = lib(anisotropic_cumulants(&m.conjugate(), &two, 6))?;
        for k in 0..6 {
            let rhs = &y[k] * rational::pow(&int(-2), k as i64 + 1);
            ensure(x[k] == rhs, || format!("{lambda} k={}", k + 1))?;
        }
    }
    Ok(())
}

fn counting(b: &Bounds) -> Check {
    for k in 1..=b.mu + 1 {
        let n = lib(enumerate_pair_partitions(k))?.count();
        ensure(double_factorial_odd(k as u64) == n.into(), || format!("k={k}: {n}"))?;
    }
    Ok(())
}

/// Runs every check, printing one line each; true if all passed.
pub fn run(level: Level) -> bool {
    let b = match level {
        Level::Quick => Bounds {
            zonal: 4,
            mu: 3,
            lambda: 4,
            kerov: 3,
            triplets: 2,
        },
        Level::Full => Bounds {
            zonal: 5,
            mu: 5,
            lambda: 5,
            kerov: 4,
            triplets: 3,
        },
    };
    let checks: [(&str, CheckFn); 10] = [
        ("zonal example Z_(2,1)", |_| zonal_example()),
        ("zonal polynomial vs Jack oracle", zonal_vs_jack),
        ("Sigma_(2) closed form", sigma_two),
        ("character: direct, oracle, orbit", character_routes),
        ("N-functions: graph count and N2 relation", n_functions),
        ("Kerov: counting vs oracle", kerov_routes),
        ("Kerov evaluation, alpha 2 and 1/2", kerov_evaluation),
        ("integrality and positivity", positivity),
        ("cumulant duality", duality),
        ("pair-partition counts", counting),
    ];
    let mut ok = true;
    for (name, check) in checks {
        let start = Instant::now();
        match check(&b) {
            Ok(()) => println!("ok    {name} ({:.2?})", start.elapsed()),
            Err(e) => {
                ok = false;
                println!("FAIL  {name}: {e}");
            }
        }
    }
    ok
}
