//! Acceptance batteries behind `algcomb suite <name>`.

use crate::commands::{three_regular, SuiteName};
use crate::{Ctx, Outcome};
use algcomb::exactla::{binomial, parse_rational};
use algcomb::ffpoly::{self, MultiPoly};
use algcomb::geomx::{self, PointConfig};
use algcomb::nullsatz::{self, GridSets, Group};
use algcomb::ramsey;
use algcomb::setfam::{self, FamilyKind};
use algcomb::specgraph::{self as sg, Graph};
use algcomb::Result;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Serialize)]
struct Check {
    name: &'static str,
    pass: bool,
    detail: Value,
}

/// Collects checks; an `Err` from a check body counts as a failure with its message.
struct Battery<'a> {
    ctx: &'a Ctx,
    checks: Vec<Check>,
}

impl Battery<'_> {
    fn run(&mut self, name: &'static str, body: impl FnOnce(&Ctx) -> Result<(bool, Value)>) {
        let (pass, detail) = match body(self.ctx) {
            Ok(r) => r,
            Err(e) => (false, json!({ "error": e.to_string() })),
        };
        self.checks.push(Check { name, pass, detail });
    }
}

pub fn run(name: SuiteName, ctx: &Ctx) -> Result<Outcome> {
    let order: &[SuiteName] = match name {
        SuiteName::All => &[
            SuiteName::Setfam,
            SuiteName::Ffpoly,
            SuiteName::Nullsatz,
            SuiteName::Specgraph,
            SuiteName::Ramsey,
            SuiteName::Geomx,
        ],
        _ => std::slice::from_ref(&name),
    };
    let mut b = Battery { ctx, checks: Vec::new() };
    let mut modules = Vec::new();
    for &m in order {
        let start = b.checks.len();
        match m {
            SuiteName::Setfam => setfam_battery(&mut b),
            SuiteName::Ffpoly => ffpoly_battery(&mut b),
            SuiteName::Nullsatz => nullsatz_battery(&mut b),
            SuiteName::Specgraph => specgraph_battery(&mut b),
            SuiteName::Ramsey => ramsey_battery(&mut b),
            SuiteName::Geomx => geomx_battery(&mut b),
            SuiteName::All => unreachable!("expanded above"),
        }
        let label = format!("{m:?}").to_lowercase();
        let checks: Vec<&Check> = b.checks[start..].iter().collect();
        modules.push(json!({ "module": label, "checks": checks }));
    }
    let failures: Vec<&str> = b.checks.iter().filter(|c| !c.pass).map(|c| c.name).collect();
    let ok = failures.is_empty();
    Outcome::new(&json!({ "passed": b.checks.len() - failures.len(), "failed": failures, "modules": modules }), ok)
}

fn sample_kinds() -> Vec<FamilyKind> {
    vec![
        FamilyKind::Oddtown,
        FamilyKind::Separated,
        FamilyKind::WeaklySeparated,
        FamilyKind::LambdaFischer { lambda: 1 },
        FamilyKind::LFischerModp { l: vec![0, 1], p: 3 },
        FamilyKind::LFischerInt { l: vec![0, 1] },
        FamilyKind::UniformIntersecting { lambda: 2 },
        FamilyKind::UniformLFischerInt { l: vec![1], size: 2 },
        FamilyKind::UniformLFischerModp { l: vec![0, 1], p: 3, size: 2 },
    ]
}

fn setfam_battery(b: &mut Battery) {
    b.run("setfam_random_families_within_bound", |ctx| {
        let mut rng = algcomb::rng(ctx.seed);
        let mut per_kind = Vec::new();
        let mut pass = true;
        for kind in sample_kinds() {
            let m = 6;
            let bound = setfam::theorem_bound(&kind, m)?;
            let mut largest = 0;
            for _ in 0..200 {
                let f = setfam::random_valid_family(&kind, m, &mut rng, &ctx.guards)?;
                pass &= setfam::check_family(&f, &kind, &ctx.guards)?.valid && f.len() as u128 <= bound;
                largest = largest.max(f.len());
            }
            per_kind.push(json!({ "kind": kind.name(), "bound": bound.to_string(), "largest": largest }));
        }
        Ok((pass, json!(per_kind)))
    });
    b.run("setfam_oddtown_extremal", |ctx| {
        let sizes = (1..=5)
            .map(|m| setfam::max_family_brute(m, &FamilyKind::Oddtown, &ctx.guards).map(|e| e.max_size))
            .collect::<Result<Vec<_>>>()?;
        Ok((sizes == [1, 2, 3, 4, 5], json!({ "m_1_to_5": sizes })))
    });
}

fn ffpoly_battery(b: &mut Battery) {
    b.run("ffpoly_kakeya_min_f3_plane", |ctx| {
        let r = ffpoly::kakeya_min_brute(3, 2, &ctx.guards)?;
        Ok((r.minimum >= 6, json!({ "minimum": r.minimum, "lower_bound": r.lower_bound })))
    });
    b.run("ffpoly_chevalley_warning_random", |ctx| {
        let mut rng = algcomb::rng(ctx.seed);
        let mut bad = Vec::new();
        for (p, n) in [(2u64, 4usize), (3, 3), (5, 2)] {
            for trial in 0..200 {
                let polys = random_cw_system(p, n, &mut rng);
                let r = ffpoly::chevalley_warning_count(&polys, p, n, &ctx.guards)?;
                if !(r.degree_condition && r.divisible) {
                    bad.push(json!({ "p": p, "n": n, "trial": trial, "count": r.count.to_string() }));
                }
            }
        }
        Ok((bad.is_empty(), json!({ "systems": 600, "failures": bad })))
    });
    b.run("ffpoly_lucas_matches_binomial", |_| {
        let mut checked = 0;
        for p in [2u64, 3, 5, 7] {
            for a in 0..40u64 {
                for bb in 0..=a {
                    if ffpoly::lucas_binom(a, bb, p)?.to_string() != (binomial(a, bb) % p).to_string() {
                        return Ok((false, json!({ "a": a, "b": bb, "p": p })));
                    }
                    checked += 1;
                }
            }
        }
        Ok((true, json!({ "pairs": checked })))
    });
}

/// Polynomials with total degrees summing to less than n.
pub fn random_cw_system(p: u64, n: usize, rng: &mut impl Rng) -> Vec<MultiPoly> {
    let mut budget = n as u32 - 1;
    let mut polys = Vec::new();
    while budget > 0 && (polys.is_empty() || rng.gen_bool(0.5)) {
        let d = rng.gen_range(1..=budget);
        budget -= d;
        polys.push(ffpoly::random_poly(p, n, d, 4, rng));
    }
    polys
}

fn nullsatz_battery(b: &mut Battery) {
    b.run("nullsatz_certificate_round_trip", |ctx| {
        let mut rng = algcomb::rng(ctx.seed);
        let mut bad = 0;
        for _ in 0..100 {
            let (f, grid) = random_grid_vanishing(5, &mut rng)?;
            let c = nullsatz::cn_certificate(&f, &grid, &ctx.guards)?;
            if !(c.residual.is_zero() && c.remainder(&f).is_zero() && c.degrees_ok(&f)) {
                bad += 1;
            }
        }
        Ok((bad == 0, json!({ "instances": 100, "failures": bad })))
    });
    b.run("nullsatz_witness_found", |ctx| {
        let mut rng = algcomb::rng(ctx.seed ^ 1);
        let mut bad = 0;
        for _ in 0..100 {
            let (f, grid, t) = random_witness_instance(5, &mut rng)?;
            let x = nullsatz::cn_witness(&f, &grid, &t, &ctx.guards)?;
            if f.eval(&x)? == 0 || !x.iter().zip(grid.sets()).all(|(v, s)| s.contains(v)) {
                bad += 1;
            }
        }
        Ok((bad == 0, json!({ "instances": 100, "failures": bad })))
    });
    b.run("nullsatz_sumset_bounds", |ctx| {
        let mut rows = Vec::new();
        let mut pass = true;
        for p in [3u64, 5, 7] {
            let r = nullsatz::sumset_bound_check(p, &ctx.guards)?;
            pass &= r.cd_violations == 0 && r.sh_violations == 0;
            rows.push(json!({ "p": p, "cd_pairs": r.cd_pairs, "sh_sets": r.sh_sets }));
        }
        Ok((pass, json!(rows)))
    });
    b.run("nullsatz_zero_sum_constants", |ctx| {
        let g = &ctx.guards;
        let mut found = Vec::new();
        let mut pass = true;
        for n in 2..=4u64 {
            let f = nullsatz::f_const_brute(&Group::cyclic(n)?, n, g)?.f;
            pass &= f == 2 * n - 1;
            found.push(json!({ "group": [n], "n": n, "f": f }));
        }
        let f = nullsatz::f_const_brute(&Group::elementary(2, 2)?, 2, g)?.f;
        pass &= f == 5;
        found.push(json!({ "group": [2, 2], "n": 2, "f": f }));
        for (p, k) in [(2u64, 1usize), (2, 2), (2, 3), (3, 1), (3, 2)] {
            let d = nullsatz::davenport_g(&Group::elementary(p, k)?, g)?.g;
            pass &= d == k as u64 * (p - 1) + 1;
            found.push(json!({ "p": p, "k": k, "g": d }));
        }
        Ok((pass, json!(found)))
    });
    b.run("nullsatz_egz_random", |ctx| {
        let mut rng = algcomb::rng(ctx.seed);
        for _ in 0..1000 {
            let n = rng.gen_range(1..=12u64);
            let values: Vec<u64> = (0..2 * n - 1).map(|_| rng.gen_range(0..1000)).collect();
            let w = nullsatz::egz_find(&values, n)?;
            let sum: u64 = w.indices.iter().map(|&i| values[i]).sum();
            let mut idx = w.indices.clone();
            idx.dedup();
            if idx.len() as u64 != n || w.indices.len() as u64 != n || !sum.is_multiple_of(n) {
                return Ok((false, json!({ "n": n, "values": values })));
            }
        }
        Ok((true, json!({ "instances": 1000 })))
    });
    b.run("nullsatz_berge_sauer", |ctx| {
        let mut e = Graph::complete(5).edges().to_vec();
        e.push((0, 1));
        let mut graphs = vec![Graph::new(5, e)?];
        let mut rng = algcomb::rng(ctx.seed);
        graphs.extend((0..5).map(|_| nullsatz::random_four_regular_plus_edge(6, &mut rng)));
        let mut pass = true;
        let mut sizes = Vec::new();
        for g in &graphs {
            let r = nullsatz::berge_sauer_find(g, &ctx.guards)?;
            pass &= g.m() <= 13 && three_regular(g, &r.edges);
            sizes.push(json!({ "edges": g.m(), "subgraph_edges": r.edges.len(), "route": r.route }));
        }
        Ok((pass, json!(sizes)))
    });
}

/// f = Σ r_i g_i over a random grid in F_p^n, n ≤ 3.
pub fn random_grid_vanishing(p: u64, rng: &mut impl Rng) -> Result<(MultiPoly, GridSets)> {
    let n = rng.gen_range(1..=3usize);
    let sets = random_sets(p, n, rng);
    let grid = GridSets::new(p, sets.clone())?;
    let mut f = MultiPoly::zero(p, n)?;
    for (i, s) in sets.iter().enumerate() {
        let g = MultiPoly::grid_factor(p, n, i, s)?;
        let r = ffpoly::random_poly(p, n, 3, 3, rng);
        f = &f + &(&r * &g);
    }
    Ok((f, grid))
}

/// c·x^t plus lower-degree noise, with t_i < |S_i|.
pub fn random_witness_instance(p: u64, rng: &mut impl Rng) -> Result<(MultiPoly, GridSets, Vec<u32>)> {
    let n = rng.gen_range(1..=3usize);
    let sets = random_sets(p, n, rng);
    let t: Vec<u32> = sets.iter().map(|s| rng.gen_range(0..s.len() as u32)).collect();
    let deg: u32 = t.iter().sum();
    let mut f = MultiPoly::monomial(p, n, t.clone(), rng.gen_range(1..p as i64))?;
    if deg > 0 {
        f = &f + &ffpoly::random_poly(p, n, deg - 1, 4, rng);
    }
    Ok((f, GridSets::new(p, sets)?, t))
}

fn random_sets(p: u64, n: usize, rng: &mut impl Rng) -> Vec<Vec<u64>> {
    (0..n)
        .map(|_| {
            let mut all: Vec<u64> = (0..p).collect();
            all.shuffle(rng);
            all.truncate(rng.gen_range(1..=p as usize));
            all
        })
        .collect()
}

fn specgraph_battery(b: &mut Battery) {
    b.run("specgraph_petersen_spectrum", |ctx| {
        let s = sg::spectrum(&sg::petersen(), &ctx.guards)?;
        let expected = [3.0, 1.0, 1.0, 1.0, 1.0, 1.0, -2.0, -2.0, -2.0, -2.0];
        let pass = s.eigenvalues.len() == 10 && s.eigenvalues.iter().zip(expected).all(|(a, b)| (a - b).abs() < 1e-6);
        let iso = sg::isomorphic(&sg::kneser(5, 2)?, &sg::petersen());
        Ok((pass && iso, json!({ "eigenvalues": s.eigenvalues.iter().map(|&x| crate::commands::clean(x)).collect::<Vec<_>>(), "kneser_5_2_isomorphic": iso })))
    });
    b.run("specgraph_kneser_spectra", |ctx| {
        let mut cases = 0;
        for m in 2..=8 {
            for r in 1..=m / 2 {
                if !sg::kneser_spectrum_check(m, r, &ctx.guards)?.matches {
                    return Ok((false, json!({ "m": m, "r": r })));
                }
                cases += 1;
            }
        }
        Ok((true, json!({ "cases": cases })))
    });
    b.run("specgraph_hoffman_and_ekr", |ctx| {
        let p = sg::petersen();
        let (alpha, _) = sg::independence_brute(&p, &ctx.guards)?;
        let h = sg::hoffman_bound(&p, &ctx.guards)?;
        let mut pass = alpha == 4 && (h.bound - 4.0).abs() < 1e-6;
        for (m, r) in [(5, 2), (6, 3)] {
            let e = sg::ekr_via_kneser(m, r, &ctx.guards)?;
            pass &= e.holds && e.bound == e.expected.to_string();
        }
        Ok((pass, json!({ "alpha": alpha, "hoffman": h.bound })))
    });
    b.run("specgraph_maxcut_petersen", |ctx| {
        let r = sg::maxcut_brute(&sg::petersen(), &ctx.guards)?;
        let pass = r.maxcut == 12 && r.lower_bound <= 7.5 + 1e-9 && r.upper_bound >= 12.0 && r.upper_bound <= 12.5 + 1e-9;
        Ok((pass, json!({ "maxcut": r.maxcut, "lower": r.lower_bound, "upper": r.upper_bound })))
    });
    b.run("specgraph_sensitivity", |ctx| {
        let mut pass = true;
        let mut scans = Vec::new();
        for n in 1..=10u32 {
            let r = sg::sensitivity_check(n, &ctx.guards)?;
            pass &= r.square_identity && r.holds;
            if (2..=4).contains(&n) {
                pass &= r.min_max_degree.is_some_and(|d| d as f64 >= r.sqrt_n);
                scans.push(json!({ "n": n, "subsets": r.subsets_scanned, "min_max_degree": r.min_max_degree }));
            }
        }
        Ok((pass, json!(scans)))
    });
    b.run("specgraph_chromatic", |ctx| {
        let mut graphs = 0u64;
        for n in 0..=6usize {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
            for mask in 0u32..1 << pairs.len() {
                let g = Graph::new(n, pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect())?;
                let poly = sg::chromatic_polynomial(&g, &ctx.guards)?;
                for k in 1..=4 {
                    if poly.eval(k as i64) != sg::count_colourings_brute(&g, k) as i128 {
                        return Ok((false, json!({ "n": n, "edges": g.edges(), "k": k })));
                    }
                }
                graphs += 1;
            }
        }
        let p = sg::petersen();
        let chi = sg::chromatic_number(&p, &ctx.guards)?;
        let p3 = sg::count_colourings_brute(&p, 3);
        let pass = chi == Some(3) && p3 == 120 && sg::chromatic_polynomial(&p, &ctx.guards)?.eval(3) == 120;
        Ok((pass, json!({ "graphs": graphs, "chi_petersen": chi, "petersen_3_colourings": p3 })))
    });
}

fn ramsey_battery(b: &mut Battery) {
    b.run("ramsey_verify_r33", |_| {
        let r = ramsey::verify_r33();
        let pass = r.k5_valid && r.k6_all_fail && r.k6_colourings == 32768 && r.r33 == Some(6);
        Ok((pass, serde_json::to_value(&r).unwrap_or(Value::Null)))
    });
    b.run("ramsey_sampler_reproducible", |ctx| {
        let a = ramsey::probabilistic_lower_sample(6, 200, ctx.seed, &ctx.guards)?;
        let c = ramsey::probabilistic_lower_sample(6, 200, ctx.seed, &ctx.guards)?;
        let (ja, jc) = (algcomb::io::to_json(&a), algcomb::io::to_json(&c));
        let expected = ramsey::sampler_bound(a.vertices as u64, 6);
        let pass = ja == jc && parse_rational(&a.bound)? == expected;
        Ok((pass, serde_json::to_value(&a).unwrap_or(Value::Null)))
    });
    b.run("ramsey_constructions", |ctx| {
        let mut rows = Vec::new();
        let mut pass = true;
        for kind in [ramsey::Construction::Naive { n: 4 }, ramsey::Construction::Nagy { n: 5 }] {
            let c = ramsey::construct(kind, &ctx.guards)?;
            let v = ramsey::is_ramsey_coloring(&c.coloring, c.avoids, c.avoids, &ctx.guards)?.valid;
            pass &= v;
            rows.push(json!({ "construction": kind, "vertices": c.coloring.n(), "avoids": c.avoids, "valid": v }));
        }
        Ok((pass, json!(rows)))
    });
}

fn random_config(rng: &mut impl Rng, d: usize, n: usize) -> Result<PointConfig> {
    let pts: Vec<Vec<String>> =
        (0..n).map(|_| (0..d).map(|_| format!("{}/{}", rng.gen_range(-20..=20), rng.gen_range(1..=4))).collect()).collect();
    PointConfig::from_strings(d, &pts)
}

fn geomx_battery(b: &mut Battery) {
    b.run("geomx_radon_certificates", |ctx| {
        let mut rng = algcomb::rng(ctx.seed);
        for trial in 0..500 {
            let d = rng.gen_range(1..=4);
            let extra = rng.gen_range(0..3);
            let p = random_config(&mut rng, d, d + 2 + extra)?;
            let r = geomx::radon_partition(&p)?;
            if !(r.left_certificate.verify(&p, &r.witness) && r.right_certificate.verify(&p, &r.witness)) {
                return Ok((false, json!({ "trial": trial })));
            }
        }
        Ok((true, json!({ "instances": 500 })))
    });
    b.run("geomx_tverberg_certificates", |ctx| {
        let mut rng = algcomb::rng(ctx.seed);
        for trial in 0..100 {
            let d = rng.gen_range(1..=2);
            let p = random_config(&mut rng, d, 2 * (d + 1) + 1)?;
            if !geomx::tverberg_partition(&p, 3, &ctx.guards)?.verify(&p) {
                return Ok((false, json!({ "trial": trial })));
            }
        }
        Ok((true, json!({ "instances": 100 })))
    });
    b.run("geomx_joints_grid", |ctx| {
        let mut rows = Vec::new();
        let mut pass = true;
        for n in 1..=3 {
            let (lines, expected) = geomx::joints_grid(n);
            let r = geomx::joints(&lines, &ctx.guards)?;
            pass &= r.lines == 3 * (n * n) as usize && r.joints as u64 == expected;
            rows.push(json!({ "n": n, "lines": r.lines, "joints": r.joints }));
        }
        Ok((pass, json!(rows)))
    });
    b.run("geomx_two_distance_examples", |_| {
        let mut pass = true;
        for n in 1..=6 {
            let r = geomx::two_distance_check(&geomx::two_distance_example(n))?;
            pass &= r.is_two_distance && r.within_bound;
        }
        Ok((pass, json!({ "n_max": 6 })))
    });
    b.run("geomx_centerpoints", |ctx| {
        let grid: Vec<Vec<i64>> = (0..3).flat_map(|a| (0..3).map(move |b| vec![a, b])).collect();
        let r = geomx::centerpoint(&PointConfig::from_i64(2, &grid)?, &ctx.guards)?;
        let mut pass = r.holds && r.depth >= 3;
        let mut rng = algcomb::rng(ctx.seed);
        for _ in 0..20 {
            let n = rng.gen_range(3..=15);
            let x = random_config(&mut rng, 2, n)?;
            let c = geomx::centerpoint(&x, &ctx.guards)?;
            pass &= c.holds && geomx::halfspace_depth(&c.point, &x)?.depth >= c.required;
        }
        Ok((pass, json!({ "grid_depth": r.depth, "random_sets": 20 })))
    });
    b.run("geomx_jl_rank_inequalities", |ctx| {
        let eps = parse_rational("1/10")?;
        let r = geomx::jl_rank_checks(10, &eps, ctx.seed, 100)?;
        Ok((r.jl1_holds && r.jl2_holds, json!({ "jl1_bound": r.jl1_bound, "jl1_min_rank": r.jl1_min_rank })))
    });
}
