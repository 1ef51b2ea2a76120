//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails or runs over its time limit.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use spnil::cherednik::{check_hc_relation, dunkl_commute, h_registry, radial_match, radial_match_with, Params};
use spnil::exactcore::{monomials_of_degree, MultiPoly, Scalar};
use spnil::orbits::{census, enum_partitions, nilpotent_rep, sl2_lowest_coefficient_check, verify_sl2_square_lemma, Partition};
use spnil::sampling::{Sampler, DEFAULT_SEED};
use spnil::splie::{sp_basis, sp_dim, RootDatumC};
use spnil::varieties::{
    component_tangent, embedding_pullback_check, hilbert_compare, lagrangian_check, sample_xnil_point,
    theta1_kills_minors,
};
use spnil::weylosc::{theta1, weight_zero_scalar};

type Outcome = Result<String, String>;

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn err(e: spnil::Error) -> String {
    format!("error: {e}")
}

fn c1() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for n in 1..=4 {
        for r in RootDatumC::new(n).roots {
            let want = if r.is_long() { Scalar::frac(-3, 16) } else { Scalar::frac(-1, 8) };
            let got = weight_zero_scalar(n, r).map_err(err)?;
            count += 1;
            if got != want {
                bad.push(format!("n={n} {r}: {got}"));
            }
        }
    }
    check(bad.is_empty(), format!("{count} roots, mismatches {bad:?}"))
}

fn c2() -> Outcome {
    let mut ok = true;
    for n in 1..=4 {
        ok &= radial_match(n).map_err(err)?;
        ok &= !radial_match_with(n, &Params::zero()).map_err(err)?;
    }
    check(ok, "n=1..4 match at (-1/4,-1/2), no match at (0,0)".into())
}

fn c3() -> Outcome {
    let mut pairs = 0;
    let mut bad = 0;
    for n in 1..=3 {
        let basis = sp_basis(n);
        for a in &basis {
            let ta = theta1(a).map_err(err)?;
            for b in &basis {
                pairs += 1;
                let lhs = theta1(&a.commutator(b)).map_err(err)?;
                if lhs != ta.commutator(&theta1(b).map_err(err)?).map_err(err)? {
                    bad += 1;
                }
            }
        }
    }
    check(bad == 0 && pairs == 9 + 100 + 441, format!("{pairs} pairs, {bad} failures"))
}

fn c4() -> Outcome {
    let mut ok = true;
    for n in 1..=3 {
        ok &= theta1_kills_minors(n).map_err(err)?;
    }
    check(ok, "n=1..3".into())
}

/// `dim g + #{positive h-eigenvalues}`, with the `h`-spectrum of a part `m`
/// being `m−1, m−3, …, 1−m`.
fn xlambda_oracle(lambda: &Partition, n: usize) -> usize {
    sp_dim(n) + lambda.parts().iter().map(|m| m / 2).sum::<usize>()
}

/// `dim g − (½ Σ (λ*_i)² + ½ #{odd parts})`.
fn orbit_oracle(lambda: &Partition, n: usize) -> usize {
    let sq: usize = lambda.conjugate().iter().map(|c| c * c).sum();
    let odd = lambda.parts().iter().filter(|p| *p % 2 == 1).count();
    sp_dim(n) - (sq + odd) / 2
}

fn c5() -> Outcome {
    let mut bad = Vec::new();
    let mut n2 = Vec::new();
    for n in 1..=4 {
        let top = 2 * n * n + 2 * n;
        for row in census(n).map_err(err)? {
            let even = row.lambda.is_even();
            let dim_ok = if even { row.xlambda_dim == top } else { row.xlambda_dim < top };
            if !dim_ok
                || row.is_component != even
                || row.xlambda_dim != xlambda_oracle(&row.lambda, n)
                || row.orbit_dim != orbit_oracle(&row.lambda, n)
            {
                bad.push(format!("n={n} {}", row.lambda));
            }
            if n == 2 {
                n2.push(format!("{}->{}", row.lambda, row.xlambda_dim));
            }
        }
    }
    let table_ok = n2 == ["(4)->12", "(2,2)->12", "(2,1,1)->11", "(1,1,1,1)->10"];
    check(bad.is_empty() && table_ok, format!("n=2 table {}; mismatches {bad:?}", n2.join(" ")))
}

fn c6() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    let mut evidence = Vec::new();
    for n in 1..=2 {
        let half = 2 * n * n + 2 * n;
        for lambda in enum_partitions(n).1 {
            let mut ranks = BTreeSet::new();
            let mut iso = 0;
            let mut comp = 0;
            for k in 0..20u64 {
                let p = sample_xnil_point(&lambda, DEFAULT_SEED + k).map_err(err)?;
                let r = lagrangian_check(&p).map_err(err)?;
                ranks.insert(r.jacobian_rank);
                iso += usize::from(r.isotropic);
                let c = component_tangent(&p).map_err(err)?;
                comp += usize::from(c.dim == half && c.isotropic && c.in_zariski_tangent);
            }
            ok &= ranks.len() == 1 && ranks.contains(&half) && iso == 20;
            parts.push(format!("n={n} {lambda}: rank {ranks:?} (want {half}), isotropic {iso}/20"));
            evidence.push(format!("{lambda}: {comp}/20"));
        }
    }
    check(
        ok,
        format!(
            "{}; component tangent lagrangian {}",
            parts.join("; "),
            evidence.join(", ")
        ),
    )
}

fn c7() -> Outcome {
    let rows = hilbert_compare(1, 6).map_err(err)?;
    let ok = rows.len() == 7 && rows.iter().all(|r| r.equal && r.left == r.right);
    let dims: Vec<String> = rows.iter().map(|r| format!("{}:{}/{}", r.degree, r.left, r.right)).collect();
    check(ok, dims.join(" "))
}

fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::from_int(0); n];
    v[i] = Scalar::from_int(1);
    v
}

fn c8() -> Outcome {
    let mut s = Sampler::new(DEFAULT_SEED);
    let mut params = vec![Params::distinguished()];
    for _ in 0..3 {
        params.push(Params::new(s.rational(), s.rational()));
    }
    let (mut checks, mut bad) = (0, 0);
    for n in 1..=3 {
        let reg = h_registry(n);
        for c in &params {
            for d in 0..=5 {
                for m in monomials_of_degree(n, d) {
                    let p = MultiPoly::monomial(&reg, m, Scalar::from_int(1));
                    for i in 0..n {
                        for j in 0..n {
                            checks += 1;
                            bad += usize::from(!check_hc_relation(&unit(n, i), &unit(n, j), &p, c).map_err(err)?);
                            if i < j {
                                checks += 1;
                                bad += usize::from(!dunkl_commute(&unit(n, i), &unit(n, j), &p, c).map_err(err)?);
                            }
                        }
                    }
                }
            }
        }
    }
    check(bad == 0, format!("{checks} checks over 4 parameters, {bad} failures"))
}

fn c9() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for n in 1..=3 {
        for lambda in enum_partitions(n).0 {
            let y = nilpotent_rep(&lambda).map_err(err)?;
            count += 1;
            if !verify_sl2_square_lemma(&y, 20, DEFAULT_SEED).map_err(err)? {
                bad.push(lambda.to_string());
            }
        }
    }
    for d in 1..=6 {
        for k in 0..d {
            if !sl2_lowest_coefficient_check(&[d], k).map_err(err)? {
                bad.push(format!("V({d}) k={k}"));
            }
        }
    }
    check(bad.is_empty(), format!("{count} partitions, dims 1..=6, failures {bad:?}"))
}

fn c10() -> Outcome {
    let ok = (1..=3).all(embedding_pullback_check);
    check(ok, "n=1..3".into())
}

fn main() {
    let criteria: [(&str, Duration, fn() -> Outcome); 10] = [
        ("weight-zero scalars", Duration::from_secs(10), c1),
        ("radial match", Duration::from_secs(10), c2),
        ("theta1 homomorphism", Duration::from_secs(60), c3),
        ("minor annihilation", Duration::from_secs(300), c4),
        ("component census", Duration::from_secs(60), c5),
        ("lagrangian evidence", Duration::from_secs(300), c6),
        ("hilbert comparison", Duration::from_secs(300), c7),
        ("cherednik relation", Duration::from_secs(300), c8),
        ("sl2 lemma", Duration::from_secs(300), c9),
        ("embedding pullback", Duration::from_secs(300), c10),
    ];
    let mut failed = 0;
    for (k, (name, limit, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let within = elapsed <= *limit;
        let (pass, detail) = match outcome {
            Ok(d) => (within, d),
            Err(d) => (false, d),
        };
        if !pass {
            failed += 1;
        }
        println!(
            "criterion {:>2} {:<20} {} [{:.2}s / {}s] {}",
            k + 1,
            name,
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            limit.as_secs(),
            detail
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
