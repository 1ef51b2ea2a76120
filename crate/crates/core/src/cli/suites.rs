use std::collections::BTreeSet;

use num_traits::Zero;

use super::report::Record;
use crate::cherednik::{
    build_lc, check_hc_relation, dunkl_commute, h_registry, radial_match_with, radial_operator,
    Params,
};
use crate::error::Result;
use crate::exactcore::{monomials_of_degree, MultiPoly, Scalar};
use crate::orbits::{census, enum_partitions, nilpotent_rep, sl2_lowest_coefficient_check, verify_sl2_square_lemma};
use crate::sampling::Sampler;
use crate::splie::{sp_basis, sp_dim, RootDatumC};
use crate::varieties::{
    component_tangent, embedding_pullback_check, lagrangian_check, moment2, sample_xnil_point,
    theta1_kills_minors, SchemePoint,
};
use crate::weylosc::{theta0, theta1, weight_zero_scalar, WeylElement, WeylMonomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    #[value(name = "theta1-hom")]
    Theta1Hom,
    #[value(name = "theta0-hom")]
    Theta0Hom,
    Minors,
    Weyl,
    Dunkl,
    Relation,
    Lagrangian,
    Equivariance,
    Embedding,
    All,
}

impl Suite {
    pub const EACH: [Suite; 9] = [
        Suite::Theta1Hom,
        Suite::Theta0Hom,
        Suite::Minors,
        Suite::Weyl,
        Suite::Dunkl,
        Suite::Relation,
        Suite::Lagrangian,
        Suite::Equivariance,
        Suite::Embedding,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theta1Hom => "theta1-hom",
            Suite::Theta0Hom => "theta0-hom",
            Suite::Minors => "minors",
            Suite::Weyl => "weyl",
            Suite::Dunkl => "dunkl",
            Suite::Relation => "relation",
            Suite::Lagrangian => "lagrangian",
            Suite::Equivariance => "equivariance",
            Suite::Embedding => "embedding",
            Suite::All => "all",
        }
    }
}

fn ratio(ok: usize, total: usize) -> String {
    format!("{ok}/{total}")
}

pub fn run_suite(suite: Suite, n: usize, seed: u64, trials: usize) -> Result<Vec<Record>> {
    let p = format!("n={n}");
    Ok(match suite {
        Suite::All => {
            let mut out = Vec::new();
            for s in Suite::EACH {
                out.extend(run_suite(s, n, seed, trials)?);
            }
            out
        }
        Suite::Theta1Hom => {
            let basis = sp_basis(n);
            let mut ok = 0;
            for a in &basis {
                let ta = theta1(a)?;
                for b in &basis {
                    if theta1(&a.commutator(b))? == ta.commutator(&theta1(b)?)? {
                        ok += 1;
                    }
                }
            }
            let total = basis.len() * basis.len();
            vec![Record::new("theta1-hom", p, ratio(total, total), ratio(ok, total))]
        }
        Suite::Theta0Hom => {
            let basis = sp_basis(n);
            let mut ok = 0;
            for a in &basis {
                let ta = theta0(a)?;
                for b in &basis {
                    if theta0(&a.commutator(b))? == ta.commutator(&theta0(b)?)? {
                        ok += 1;
                    }
                }
            }
            let total = basis.len() * basis.len();
            vec![Record::new("theta0-hom", p, ratio(total, total), ratio(ok, total))]
        }
        Suite::Minors => vec![Record::new("theta1-kills-minors", p, true, theta1_kills_minors(n)?)],
        Suite::Weyl => weyl_records(n, seed, trials)?,
        Suite::Dunkl | Suite::Relation => cherednik_records(suite, n, seed)?,
        Suite::Lagrangian => lagrangian_records(n, seed, trials)?,
        Suite::Equivariance => {
            let mut s = Sampler::new(seed);
            let mut ok = 0;
            for _ in 0..trials {
                let pt = SchemePoint {
                    x: s.sp_element(n),
                    y: s.sp_element(n),
                    i: s.vector(n),
                };
                let count = 1 + s.index(3);
                let (g, gi) = s.unipotent(n, count);
                let lhs = moment2(&pt.conjugate(&g, &gi))?;
                let rhs = &(&g * &moment2(&pt)?) * &gi;
                if lhs == rhs {
                    ok += 1;
                }
            }
            vec![Record::new(
                "moment2-equivariance",
                format!("{p};seed={seed}"),
                ratio(trials, trials),
                ratio(ok, trials),
            )]
        }
        Suite::Embedding => vec![Record::new("embedding-pullback", p, true, embedding_pullback_check(n))],
    })
}

fn random_weyl(s: &mut Sampler, n: usize) -> WeylElement {
    let mut w = WeylElement::zero(n);
    for _ in 0..3 {
        let m = WeylMonomial {
            x: (0..n).map(|_| s.int(0, 2) as u32).collect(),
            y: (0..n).map(|_| s.int(0, 2) as u32).collect(),
        };
        w.add_term(m, s.scalar());
    }
    w
}

fn weyl_records(n: usize, seed: u64, trials: usize) -> Result<Vec<Record>> {
    let p = format!("n={n}");
    let mut relations = true;
    for i in 0..n {
        for j in 0..n {
            let (xi, xj) = (WeylElement::x(n, i), WeylElement::x(n, j));
            let (yi, yj) = (WeylElement::y(n, i), WeylElement::y(n, j));
            let delta = if i == j { WeylElement::one(n) } else { WeylElement::zero(n) };
            relations &= yi.commutator(&xj)? == delta;
            relations &= xi.commutator(&xj)?.is_zero() && yi.commutator(&yj)?.is_zero();
        }
    }
    let mut s = Sampler::new(seed);
    let mut assoc = 0;
    for _ in 0..trials {
        let (u, v, w) = (random_weyl(&mut s, n), random_weyl(&mut s, n), random_weyl(&mut s, n));
        if &(&u * &v) * &w == &u * &(&v * &w) {
            assoc += 1;
        }
    }
    let mut even = true;
    for b in sp_basis(n) {
        let t = theta1(&b)?;
        even &= t.is_even() && t.degree().map_or(true, |d| d <= 2);
    }
    Ok(vec![
        Record::new("weyl-relations", p.clone(), true, relations),
        Record::new(
            "weyl-associativity",
            format!("{p};seed={seed}"),
            ratio(trials, trials),
            ratio(assoc, trials),
        ),
        Record::new("theta1-even-quadratic", p, true, even),
    ])
}

/// The distinguished parameter and three seeded random rational ones.
fn parameter_grid(seed: u64) -> Vec<Params> {
    let mut s = Sampler::new(seed);
    let mut out = vec![Params::distinguished()];
    for _ in 0..3 {
        out.push(Params::new(s.rational(), s.rational()));
    }
    out
}

fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::from_int(1);
    v
}

/// Degree bound for the monomial grid of the Dunkl checks.
pub const DUNKL_MAX_DEGREE: u32 = 5;

fn cherednik_records(suite: Suite, n: usize, seed: u64) -> Result<Vec<Record>> {
    let reg = h_registry(n);
    let monomials: Vec<MultiPoly> = (0..=DUNKL_MAX_DEGREE)
        .flat_map(|d| monomials_of_degree(n, d))
        .map(|m| MultiPoly::monomial(&reg, m, Scalar::from_int(1)))
        .collect();
    let mut out = Vec::new();
    for c in parameter_grid(seed) {
        let (mut ok, mut total) = (0, 0);
        for p in &monomials {
            for i in 0..n {
                for j in 0..n {
                    let holds = match suite {
                        Suite::Relation => check_hc_relation(&unit(n, i), &unit(n, j), p, &c)?,
                        _ if i < j => dunkl_commute(&unit(n, i), &unit(n, j), p, &c)?,
                        _ => continue,
                    };
                    total += 1;
                    ok += usize::from(holds);
                }
            }
        }
        let name = if suite == Suite::Relation { "hc-relation" } else { "dunkl-commute" };
        out.push(Record::new(
            name,
            format!("n={n};c=({},{});max_degree={DUNKL_MAX_DEGREE}", c.c_long, c.c_short),
            ratio(total, total),
            ratio(ok, total),
        ));
    }
    Ok(out)
}

fn join(values: &BTreeSet<usize>) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join("|")
}

fn lagrangian_records(n: usize, seed: u64, trials: usize) -> Result<Vec<Record>> {
    let half = sp_dim(n) + n;
    let mut out = Vec::new();
    for lambda in enum_partitions(n).1 {
        let mut ranks = BTreeSet::new();
        let mut dims = BTreeSet::new();
        let (mut iso, mut comp_iso) = (0, 0);
        for k in 0..trials {
            let pt = sample_xnil_point(&lambda, seed.wrapping_add(k as u64))?;
            let r = lagrangian_check(&pt)?;
            ranks.insert(r.jacobian_rank);
            iso += usize::from(r.isotropic);
            let c = component_tangent(&pt)?;
            dims.insert(c.dim);
            comp_iso += usize::from(c.isotropic && c.in_zariski_tangent);
        }
        let p = format!("n={n};lambda={lambda};points={trials};seed={seed}");
        out.push(Record::new("jacobian-rank", p.clone(), half, join(&ranks)));
        out.push(Record::new("tangent-isotropic", p.clone(), ratio(trials, trials), ratio(iso, trials)));
        out.push(Record::new("component-tangent-dim", p.clone(), half, join(&dims)));
        out.push(Record::new(
            "component-tangent-isotropic",
            p,
            ratio(trials, trials),
            ratio(comp_iso, trials),
        ));
    }
    Ok(out)
}

pub fn census_records(n: usize) -> Result<Vec<Record>> {
    let g = sp_dim(n);
    census(n)?
        .into_iter()
        .map(|row| {
            let even = row.lambda.is_even();
            let expected = if even {
                format!("xlambda_dim={};component=true", g + n)
            } else {
                format!("xlambda_dim<{};component=false", g + n)
            };
            let actual = format!("xlambda_dim={};component={}", row.xlambda_dim, row.is_component);
            let pass = row.is_component == even
                && if even { row.xlambda_dim == g + n } else { row.xlambda_dim < g + n };
            Ok(Record::judged(
                "census",
                format!(
                    "n={n};lambda={};orbit_dim={};vplus_dim={}",
                    row.lambda, row.orbit_dim, row.vplus_dim
                ),
                expected,
                actual,
                pass,
            ))
        })
        .collect()
}

pub fn radial_records(n: usize) -> Result<Vec<Record>> {
    let mut out = Vec::new();
    for r in RootDatumC::new(n).roots {
        let want = if r.is_long() { Scalar::frac(-3, 16) } else { Scalar::frac(-1, 8) };
        out.push(Record::new(
            "weight-zero-scalar",
            format!("n={n};root={r}"),
            want,
            weight_zero_scalar(n, r)?,
        ));
    }
    let c = Params::distinguished();
    out.push(Record::new("radial-match", format!("n={n};c=(-1/4,-1/2)"), true, radial_match_with(n, &c)?));
    out.push(Record::new("radial-match", format!("n={n};c=(0,0)"), false, radial_match_with(n, &Params::zero())?));
    out.push(Record::new("radial-w-invariant", format!("n={n}"), true, radial_operator(n)?.is_w_invariant()));
    out.push(Record::new("lc-w-invariant", format!("n={n}"), true, build_lc(&c, n).is_w_invariant()));
    Ok(out)
}

pub fn lemma_records(dim: usize, n: Option<usize>, seed: u64, trials: usize) -> Result<Vec<Record>> {
    let mut out = Vec::new();
    for d in 1..=dim {
        for k in 0..d {
            out.push(Record::new(
                "lowest-coefficient",
                format!("dims=[{d}];k={k};positive={}", 2 * k + 1 > d),
                true,
                sl2_lowest_coefficient_check(&[d], k)?,
            ));
        }
    }
    if let Some(n) = n {
        for lambda in enum_partitions(n).0 {
            let y = nilpotent_rep(&lambda)?;
            out.push(Record::new(
                "square-lemma",
                format!("n={n};lambda={lambda};trials={trials};seed={seed}"),
                true,
                verify_sl2_square_lemma(&y, trials, seed)?,
            ));
        }
    }
    Ok(out)
}
