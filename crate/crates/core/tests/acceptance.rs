//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. All comparisons are exact rational equality; each criterion
//! also has a wall-clock budget.

use std::collections::{BTreeMap, HashSet};
use std::process::ExitCode;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use taut_core::elsv::{elsv_number, elsv_prefactor, fit_polynomial, normalized_elsv};
use taut_core::hurwitz::{cut_and_join, hurwitz_bruteforce, hurwitz_character, HurwitzSpec};
use taut_core::intersection::{genus0_psi, lambda_g_integral, psi_integral};
use taut_core::partitions::{compositions, weak_compositions};
use taut_core::rational::{double_factorial, frac, int};
use taut_core::stable_graphs::{enumerate_strata, StableGraph};
use taut_core::strata_theorems::{
    impcor_band_in, lowdim_generators, socle_integral_ct, support_threshold,
    theorem_star_support_in, GeneratorKind,
};
use taut_core::Rational;

type Check = Result<String, String>;
type StrataByModuli = Vec<((u32, usize), Vec<StableGraph>)>;
type Criterion = (u32, &'static str, Duration, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>, ctx: impl FnOnce() -> String) -> Result<T, String> {
    r.map_err(|e| format!("{}: {e}", ctx()))
}

/// Stable `(g, n)` with `3g - 3 + n <= 6`.
fn small_moduli() -> Vec<(u32, usize)> {
    let mut out = Vec::new();
    for g in 0..=3u32 {
        for n in 0..=9usize {
            let (gi, ni) = (g as i64, n as i64);
            if 2 * gi - 2 + ni > 0 && 3 * gi - 3 + ni <= 6 {
                out.push((g, n));
            }
        }
    }
    out
}

/// Every stratum of every small moduli space, enumerated once.
fn all_strata() -> &'static StrataByModuli {
    static STRATA: OnceLock<StrataByModuli> = OnceLock::new();
    STRATA.get_or_init(|| {
        small_moduli()
            .into_iter()
            .map(|(g, n)| ((g, n), enumerate_strata(g, n, None).expect("stable")))
            .collect()
    })
}

fn elsv_cross_validation() -> Check {
    let mut checked = 0;
    for d in 1..=5u32 {
        for alpha in compositions(d) {
            for g in 0..=1u32 {
                if g == 0 && alpha.len() < 3 {
                    continue;
                }
                let spec = HurwitzSpec::single(g as i64, &alpha);
                let ctx = || format!("g={g} α={alpha:?}");
                let elsv = ok(elsv_number(g, &alpha), ctx)?;
                let character = ok(hurwitz_character(&spec), ctx)?;
                let cutjoin = ok(cut_and_join(&spec), ctx)?;
                ensure(elsv == character && elsv == cutjoin, || {
                    format!(
                        "{}: elsv {elsv}, character {character}, cut-and-join {cutjoin}",
                        ctx()
                    )
                })?;
                if d <= 4 {
                    let brute = ok(hurwitz_bruteforce(&spec), ctx)?;
                    ensure(elsv == brute, || {
                        format!("{}: elsv {elsv}, brute force {brute}", ctx())
                    })?;
                }
                checked += 1;
            }
        }
    }
    let spots: [(u32, &[u32], Rational); 4] = [
        (0, &[1, 1, 1], int(24)),
        (1, &[2], frac(1, 2)),
        (1, &[1], int(0)),
        (1, &[1, 1], int(1)),
    ];
    for (g, alpha, want) in spots {
        let brute = ok(
            hurwitz_bruteforce(&HurwitzSpec::single(g as i64, alpha)),
            || format!("brute force g={g} α={alpha:?}"),
        )?;
        let elsv = ok(elsv_number(g, alpha), || format!("elsv g={g} α={alpha:?}"))?;
        ensure(brute == want && elsv == want, || {
            format!("spot g={g} α={alpha:?}: brute force {brute}, elsv {elsv}, expected {want}")
        })?;
    }
    Ok(format!("{checked} (g, α) cases, 4 spot values"))
}

fn intersection_properties() -> Check {
    let mut rng = StdRng::seed_from_u64(0x7a07);
    let mut samples = 0;
    while samples < 200 {
        let g = rng.gen_range(0..=3u32);
        let n = rng.gen_range(1..=12usize);
        let (gi, ni) = (g as i64, n as i64);
        // (g, n) stable and (g, n + 1) inside the size bound
        if 2 * gi - 2 + ni <= 0 || 3 * gi - 2 + ni > 10 {
            continue;
        }
        let dilaton = rng.gen_bool(0.5);
        let total = if dilaton {
            3 * g + n as u32 - 3
        } else {
            3 * g + n as u32 - 2
        };
        let a = random_composition(&mut rng, total, n);
        let ctx = || format!("g={g} a={a:?}");
        let mut extended = a.clone();
        if dilaton {
            extended.push(1);
            let lhs = ok(psi_integral(g, &extended), ctx)?;
            let rhs = int(2 * gi - 2 + ni) * ok(psi_integral(g, &a), ctx)?;
            ensure(lhs == rhs, || {
                format!("dilaton fails at {}: {lhs} vs {rhs}", ctx())
            })?;
        } else {
            extended.push(0);
            let lhs = ok(psi_integral(g, &extended), ctx)?;
            let mut rhs = int(0);
            for j in 0..n {
                if a[j] > 0 {
                    let mut b = a.clone();
                    b[j] -= 1;
                    rhs += ok(psi_integral(g, &b), ctx)?;
                }
            }
            ensure(lhs == rhs, || {
                format!("string fails at {}: {lhs} vs {rhs}", ctx())
            })?;
        }
        samples += 1;
    }
    let mut genus0 = 0;
    for n in 3..=8usize {
        for a in weak_compositions(n as u32 - 3, n) {
            let closed = ok(genus0_psi(&a), || format!("genus0_psi {a:?}"))?;
            let rec = ok(psi_integral(0, &a), || format!("psi {a:?}"))?;
            ensure(closed == rec, || {
                format!("genus 0 {a:?}: {closed} vs {rec}")
            })?;
            genus0 += 1;
        }
    }
    ensure(psi_integral(0, &[0, 0, 0]) == Ok(int(1)), || {
        "<τ_0^3>_0 != 1".into()
    })?;
    ensure(psi_integral(1, &[1]) == Ok(frac(1, 24)), || {
        "<τ_1>_1 != 1/24".into()
    })?;
    Ok(format!(
        "{samples} string/dilaton samples, {genus0} genus-0 vectors"
    ))
}

fn random_composition(rng: &mut StdRng, total: u32, n: usize) -> Vec<u32> {
    let mut cuts: Vec<u32> = (0..n - 1).map(|_| rng.gen_range(0..=total)).collect();
    cuts.sort_unstable();
    let mut parts = Vec::with_capacity(n);
    let mut prev = 0;
    for c in cuts {
        parts.push(c - prev);
        prev = c;
    }
    parts.push(total - prev);
    parts
}

fn constants() -> Check {
    let leaf = ok(lambda_g_integral(1, &[0]), || "λ_1 on M̄_{1,1}".into())?;
    ensure(leaf == frac(1, 24), || format!("∫λ_1 = {leaf}"))?;
    let mut expected = int(1);
    for g in 0..=5u32 {
        let got = ok(socle_integral_ct(g), || format!("socle g={g}"))?;
        ensure(got == expected, || format!("g={g}: {got} vs {expected}"))?;
        expected *= frac(1, 24);
    }
    Ok("∫λ_1 = 1/24, compact-type socle degree (1/24)^g for g <= 5".into())
}

fn strata_enumeration() -> Check {
    for (g, n, want) in [(1u32, 1usize, 2usize), (0, 4, 4), (0, 5, 26), (2, 0, 7)] {
        let got = ok(enumerate_strata(g, n, None), || format!("({g},{n})"))?.len();
        ensure(got == want, || {
            format!("({g},{n}): {got} strata, expected {want}")
        })?;
    }
    let mut points = 0;
    for ((g, n), strata) in all_strata() {
        let (g, n) = (*g, *n);
        let dim = 3 * g + n as u32 - 3;
        let zero_dim: Vec<&StableGraph> = strata
            .iter()
            .filter(|s| s.num_edges() as u32 == dim)
            .collect();
        if g == 0 && (4..=8).contains(&n) {
            let want = double_factorial(2 * n as i64 - 5);
            ensure(want == zero_dim.len().into(), || {
                format!("(0,{n}): {} points, expected {want}", zero_dim.len())
            })?;
        }
        for s in zero_dim {
            let trivalent = s.vertex_profile().iter().filter(|&&p| p == (0, 3)).count();
            ensure(
                trivalent as u32 == 2 * g + n as u32 - 2 && trivalent == s.num_vertices(),
                || format!("({g},{n}) point {s} has {trivalent} trivalent genus-0 vertices"),
            )?;
            points += 1;
        }
    }
    Ok(format!(
        "{points} zero-dimensional strata over {} moduli spaces",
        all_strata().len()
    ))
}

fn band_support_consistency() -> Check {
    let mut pairs = 0;
    for ((g, n), strata) in all_strata() {
        let (g, n) = (*g, *n);
        let dim = 3 * g + n as u32 - 3;
        for j in 0..=dim {
            let i = dim - j;
            let support = theorem_star_support_in(strata, g, i);
            if g >= 1 && i >= g {
                for s in &support {
                    ensure(s.graph.genus_zero_count() >= 1, || {
                        format!(
                            "({g},{n}) i={i}: support stratum {} has no genus-0 vertex",
                            s.graph
                        )
                    })?;
                }
            }
            if support_threshold(g, i) <= 0 {
                continue;
            }
            let members: HashSet<&StableGraph> = support.iter().map(|s| &s.graph).collect();
            for b in impcor_band_in(strata, j) {
                ensure(members.contains(&b), || {
                    format!("({g},{n}) j={j}: band stratum {b} outside the codimension-{i} support")
                })?;
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} (g, n, j) triples with positive threshold"))
}

fn polynomiality() -> Check {
    let value = |p: &[u32]| -> Result<Rational, String> {
        let direct = ok(normalized_elsv(1, p), || format!("normalized {p:?}"))?;
        let h = ok(hurwitz_character(&HurwitzSpec::single(1, p)), || {
            format!("character {p:?}")
        })?;
        let pre = ok(elsv_prefactor(1, p), || format!("prefactor {p:?}"))?;
        ensure(direct == &h / &pre, || {
            format!("{p:?}: {direct} vs {}", h / &pre)
        })?;
        Ok(direct)
    };
    let collect = |pts: &[[u32; 2]]| -> Result<BTreeMap<Vec<u32>, Rational>, String> {
        pts.iter().map(|p| Ok((p.to_vec(), value(p)?))).collect()
    };
    let sample = collect(&[[1, 1], [2, 1], [1, 2], [3, 1], [2, 2], [1, 3]])?;
    let held = collect(&[[4, 1], [3, 2], [2, 3], [1, 4], [5, 1]])?;
    let fit = ok(fit_polynomial(2, &sample, &held, 2), || "fit".into())?;
    ensure(fit.residuals_vanish(), || {
        format!("nonzero residuals {:?}", fit.residuals)
    })?;
    Ok(format!(
        "degree-2 fit with {} terms predicts 5 held-out points",
        fit.coefficients.len()
    ))
}

fn double_hurwitz() -> Check {
    let mut checked = 0;
    for d in 1..=4u32 {
        for alpha in compositions(d) {
            for beta in compositions(d) {
                for g in 0..=1i64 {
                    let spec = HurwitzSpec::double(g, &alpha, &beta);
                    let ctx = || format!("g={g} α={alpha:?} β={beta:?}");
                    let c = ok(hurwitz_character(&spec), ctx)?;
                    let b = ok(hurwitz_bruteforce(&spec), ctx)?;
                    ensure(c == b, || {
                        format!("{}: character {c}, brute force {b}", ctx())
                    })?;
                    checked += 1;
                }
            }
        }
    }
    let spot = ok(
        hurwitz_bruteforce(&HurwitzSpec::double(0, &[2], &[1, 1])),
        || "spot".into(),
    )?;
    ensure(spot == int(1), || format!("(0,(2),(1,1)) = {spot}"))?;
    let spot = ok(
        hurwitz_character(&HurwitzSpec::double(0, &[2], &[1, 1])),
        || "spot".into(),
    )?;
    ensure(spot == int(1), || {
        format!("(0,(2),(1,1)) = {spot} by characters")
    })?;
    Ok(format!("{checked} (g, α, β) cases"))
}

fn lowdim_classification() -> Check {
    let gens = ok(lowdim_generators(2, 2, 3), || "lowdim (2,2,3)".into())?;
    let psi: Vec<_> = gens
        .iter()
        .filter(|d| d.kind == GeneratorKind::Psi1OnFactor)
        .collect();
    let boundary = gens
        .iter()
        .filter(|d| d.kind == GeneratorKind::BoundaryStratum)
        .count();
    ensure(psi.len() == 1 && boundary + 1 == gens.len(), || {
        format!(
            "(2,2), j=3: {} ψ_1 descriptors, {boundary} boundary, {} total",
            psi.len(),
            gens.len()
        )
    })?;
    let v = psi[0]
        .decorated_vertex
        .ok_or("ψ_1 descriptor without a vertex")?;
    ensure(psi[0].stratum.genus_of(v) == 2, || {
        "ψ_1 not on a genus-2 vertex".into()
    })?;
    for d in &gens {
        if d.kind == GeneratorKind::BoundaryStratum {
            let st = d.stratum.stats(2, 2);
            ensure(st.dimension == 3, || {
                format!(
                    "boundary generator {} has dimension {}",
                    d.stratum, st.dimension
                )
            })?;
        }
    }
    let gens = ok(lowdim_generators(3, 2, 6), || "lowdim (3,2,6)".into())?;
    ensure(
        gens.iter().any(|d| d.kind == GeneratorKind::UnknownFlag),
        || "(3,2), j=6: no unknown_flag descriptor".into(),
    )?;
    Ok(format!(
        "(2,2,3): {boundary} boundary + 1 ψ_1; (3,2,6) flagged"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (
            1,
            "ELSV cross-validation",
            Duration::from_secs(60),
            elsv_cross_validation,
        ),
        (
            2,
            "intersection-engine properties",
            Duration::from_secs(30),
            intersection_properties,
        ),
        (
            3,
            "λ_1 and compact-type socle constants",
            Duration::from_secs(1),
            constants,
        ),
        (
            4,
            "strata enumeration",
            Duration::from_secs(60),
            strata_enumeration,
        ),
        (
            5,
            "band within support",
            Duration::from_secs(60),
            band_support_consistency,
        ),
        (
            6,
            "polynomiality of normalized ELSV values",
            Duration::from_secs(30),
            polynomiality,
        ),
        (
            7,
            "double Hurwitz numbers",
            Duration::from_secs(60),
            double_hurwitz,
        ),
        (
            8,
            "low-dimensional generators",
            Duration::from_secs(1),
            lowdim_classification,
        ),
    ];
    let mut failures = 0;
    for (n, name, budget, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let line = match outcome {
            Ok(detail) if elapsed <= budget => {
                format!("PASS [{n}] {name}: {detail} ({elapsed:.2?})")
            }
            Ok(detail) => {
                format!("FAIL [{n}] {name}: {detail}, but took {elapsed:.2?} > {budget:?}")
            }
            Err(e) => format!("FAIL [{n}] {name}: {e} ({elapsed:.2?})"),
        };
        if line.starts_with("FAIL") {
            failures += 1;
        }
        println!("{line}");
    }
    println!("{} of 8 criteria passed", 8 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
