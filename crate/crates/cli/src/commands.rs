use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde_json::{json, Map, Value};
use taut_core::elsv::elsv_number;
use taut_core::hurwitz::{cut_and_join, hurwitz_bruteforce, hurwitz_character, HurwitzSpec};
use taut_core::intersection::{lambda_g_integral, psi_integral};
use taut_core::rational::to_num_den;
use taut_core::stable_graphs::{enumerate_strata, StableGraph};
use taut_core::strata_theorems::{
    band_bounds, diaz_bound, impcor_band, lowdim_generators, socle_integral_ct, socle_strata,
    support_threshold, theorem_star_support, DiazVariant, SocleVariant,
};
use taut_core::{Error, Rational};

use crate::report::{join_parts, partition, rational, Report};
use crate::{
    Command, DiazArgs, DiazKind, DimArgs, ElsvCheckArgs, Failure, HurwitzArgs, IntegralArgs,
    Method, SocleArgs, SocleKind, StrataArgs, SupportArgs,
};

pub fn dispatch(command: &Command) -> Result<(&'static str, Report), Failure> {
    Ok(match command {
        Command::Strata(a) => ("strata", strata(a)?),
        Command::Psi(a) => ("psi", integral(a, false)?),
        Command::LambdaG(a) => ("lambda-g", integral(a, true)?),
        Command::Hurwitz(a) => ("hurwitz", hurwitz(a)?),
        Command::ElsvCheck(a) => ("elsv-check", elsv_check(a)?),
        Command::Support(a) => ("support", support(a)?),
        Command::Band(a) => ("band", band(a)?),
        Command::Socle(a) => ("socle", socle(a)?),
        Command::Lowdim(a) => ("lowdim", lowdim(a)?),
        Command::Diaz(a) => ("diaz", diaz(a)?),
    })
}

fn strata(a: &StrataArgs) -> Result<Report, Failure> {
    let strata = enumerate_strata(a.genus, a.markings, a.max_codim)?;
    let mut r = Report::new(vec![
        "key",
        "codimension",
        "dimension",
        "genus_zero_vertices",
        "automorphisms",
    ]);
    r.param("genus", a.genus);
    r.param("markings", a.markings);
    r.param("max_codim", a.max_codim);
    r.param("seed", a.seed);
    r.methods.push("degeneration_closure".into());

    let mut items = Vec::with_capacity(strata.len());
    for s in &strata {
        let st = s.stats(a.genus, a.markings);
        let key = s.key_string();
        let aut = s.automorphism_count();
        items.push(json!({
            "key": key,
            "codimension": st.codimension,
            "dimension": st.dimension,
            "genus_zero_vertices": st.genus_zero_count,
            "automorphisms": aut,
        }));
        r.rows.push(vec![
            key,
            st.codimension.to_string(),
            st.dimension.to_string(),
            st.genus_zero_count.to_string(),
            aut.to_string(),
        ]);
    }
    let mut result = Map::new();
    result.insert("count".into(), strata.len().into());
    result.insert("strata".into(), Value::Array(items));
    if let Some(seed) = a.seed {
        let mismatches = relabel_mismatches(&strata, seed);
        r.methods.push("relabel_self_check".into());
        r.inconsistent = !mismatches.is_empty();
        result.insert(
            "relabel_check".into(),
            json!({ "passed": mismatches.is_empty(), "mismatches": mismatches }),
        );
    }
    r.result = Value::Object(result);
    Ok(r)
}

/// Keys of strata whose canonical key changes under a random relabeling.
fn relabel_mismatches(strata: &[StableGraph], seed: u64) -> Vec<String> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut bad = Vec::new();
    for s in strata {
        let mut perm: Vec<usize> = (0..s.num_vertices()).collect();
        perm.shuffle(&mut rng);
        let key = s.canonical_key();
        if s.relabel(&perm).canonical_key() != key {
            bad.push(key);
        }
    }
    bad
}

fn integral(a: &IntegralArgs, lambda: bool) -> Result<Report, Failure> {
    if let Some(n) = a.markings {
        if n != a.partition.0.len() {
            return Err(Failure::Input(format!(
                "--markings {n} but --partition has {} exponents",
                a.partition.0.len()
            )));
        }
    }
    let value = if lambda {
        lambda_g_integral(a.genus, &a.partition.0)?
    } else {
        psi_integral(a.genus, &a.partition.0)?
    };
    let mut r = Report::new(vec!["genus", "exponents", "value"]);
    r.param("genus", a.genus);
    r.param("partition", partition(&a.partition.0));
    r.methods.push(
        if lambda {
            "lambda_g_formula"
        } else {
            "dvv_recursion"
        }
        .into(),
    );
    r.result = json!({ "value": to_num_den(&value) });
    r.rows.push(vec![
        a.genus.to_string(),
        join_parts(&a.partition.0),
        to_num_den(&value),
    ]);
    Ok(r)
}

const ALL_METHODS: [Method; 4] = [
    Method::Bruteforce,
    Method::Character,
    Method::Cutjoin,
    Method::Elsv,
];

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Bruteforce => "bruteforce",
        Method::Character => "character",
        Method::Cutjoin => "cutjoin",
        Method::Elsv => "elsv",
        Method::All => "all",
    }
}

fn run_method(m: Method, spec: &HurwitzSpec) -> Result<Rational, Failure> {
    match m {
        Method::Bruteforce => Ok(hurwitz_bruteforce(spec)?),
        Method::Character => Ok(hurwitz_character(spec)?),
        Method::Cutjoin => Ok(cut_and_join(spec)?),
        Method::Elsv => {
            if spec.beta.is_some() || !spec.connected || spec.g < 0 {
                return Err(Failure::Domain(
                    "the ELSV method covers connected single Hurwitz numbers with g >= 0 only"
                        .into(),
                ));
            }
            elsv_number(spec.g as u32, &spec.alpha).map_err(elsv_failure)
        }
        Method::All => unreachable!("expanded by the caller"),
    }
}

fn elsv_failure(e: Error) -> Failure {
    match Failure::from(e) {
        Failure::Domain(m) => Failure::Domain(format!(
            "ELSV evaluation is supported for g <= 1 only (it needs linear Hodge integrals of λ_k with 0 < k < g beyond that): {m}"
        )),
        other => other,
    }
}

type Values = Vec<(&'static str, Rational)>;
type Skipped = Vec<(&'static str, String)>;

/// Runs each method, keeping values in method order; methods outside their
/// domain are listed as skipped.
fn run_methods(methods: &[Method], spec: &HurwitzSpec) -> Result<(Values, Skipped), Failure> {
    let mut values = Vec::new();
    let mut skipped = Vec::new();
    for &m in methods {
        match run_method(m, spec) {
            Ok(v) => values.push((method_name(m), v)),
            Err(Failure::Domain(reason)) if methods.len() > 1 => {
                skipped.push((method_name(m), reason))
            }
            Err(f) => return Err(f),
        }
    }
    if values.is_empty() {
        let reasons: Vec<String> = skipped
            .iter()
            .map(|(m, why)| format!("{m}: {why}"))
            .collect();
        return Err(Failure::Domain(format!(
            "no method applies; {}",
            reasons.join("; ")
        )));
    }
    Ok((values, skipped))
}

fn value_rows(r: &mut Report, values: &[(&'static str, Rational)]) {
    for (m, v) in values {
        r.rows.push(vec![m.to_string(), to_num_den(v)]);
    }
}

fn hurwitz(a: &HurwitzArgs) -> Result<Report, Failure> {
    let mut spec = match &a.partition2 {
        Some(beta) => HurwitzSpec::double(a.genus, &a.partition.0, &beta.0),
        None => HurwitzSpec::single(a.genus, &a.partition.0),
    };
    spec.connected = a.connected;
    spec.validate()?;

    let methods: Vec<Method> = match a.method {
        Method::All => ALL_METHODS.to_vec(),
        m => vec![m],
    };
    let (values, skipped) = run_methods(&methods, &spec)?;
    let agree = values.windows(2).all(|w| w[0].1 == w[1].1);

    let mut r = Report::new(vec!["method", "value"]);
    r.param("genus", a.genus);
    r.param("partition", partition(&a.partition.0));
    r.param("partition2", a.partition2.as_ref().map(|b| partition(&b.0)));
    r.param("connected", a.connected);
    r.param("method", method_name(a.method));
    r.methods = values.iter().map(|(m, _)| m.to_string()).collect();
    r.inconsistent = !agree;
    r.result = json!({
        "value": to_num_den(&values[0].1),
        "values": values_object(&values),
        "agree": agree,
        "skipped": skipped.iter().map(|(m, why)| ((*m).to_string(), Value::String(why.clone()))).collect::<Map<_, _>>(),
    });
    value_rows(&mut r, &values);
    Ok(r)
}

fn values_object(values: &[(&'static str, Rational)]) -> Value {
    Value::Object(
        values
            .iter()
            .map(|(m, v)| (m.to_string(), rational(v)))
            .collect(),
    )
}

fn elsv_check(a: &ElsvCheckArgs) -> Result<Report, Failure> {
    let spec = HurwitzSpec::single(a.genus as i64, &a.partition.0);
    spec.validate()?;
    // ELSV first: outside its domain the whole check is meaningless
    let elsv = run_method(Method::Elsv, &spec)?;
    let (mut values, skipped) = run_methods(
        &[Method::Character, Method::Cutjoin, Method::Bruteforce],
        &spec,
    )?;
    values.insert(0, ("elsv", elsv));

    let mut equal = Map::new();
    for (i, (m1, v1)) in values.iter().enumerate() {
        for (m2, v2) in &values[i + 1..] {
            equal.insert(format!("{m1}={m2}"), Value::Bool(v1 == v2));
        }
    }
    let all_equal = equal.values().all(|v| v == &Value::Bool(true));

    let mut r = Report::new(vec!["method", "value"]);
    r.param("genus", a.genus);
    r.param("partition", partition(&a.partition.0));
    r.methods = values.iter().map(|(m, _)| m.to_string()).collect();
    r.inconsistent = !all_equal;
    r.result = json!({
        "values": values_object(&values),
        "equal": equal,
        "all_equal": all_equal,
        "skipped": skipped.iter().map(|(m, why)| ((*m).to_string(), Value::String(why.clone()))).collect::<Map<_, _>>(),
    });
    value_rows(&mut r, &values);
    Ok(r)
}

fn support(a: &SupportArgs) -> Result<Report, Failure> {
    let list = theorem_star_support(a.genus, a.markings, a.codim)?;
    let mut r = Report::new(vec!["key", "genus_zero_vertices", "maximal"]);
    r.param("genus", a.genus);
    r.param("markings", a.markings);
    r.param("codim", a.codim);
    r.methods.push("genus_zero_threshold".into());
    let mut items = Vec::new();
    for s in &list {
        let key = s.graph.key_string();
        let g0 = s.graph.genus_zero_count();
        items.push(json!({ "key": key, "genus_zero_vertices": g0, "maximal": s.maximal }));
        r.rows
            .push(vec![key, g0.to_string(), s.maximal.to_string()]);
    }
    r.result = json!({
        "threshold": support_threshold(a.genus, a.codim),
        "count": list.len(),
        "strata": items,
    });
    Ok(r)
}

fn band(a: &DimArgs) -> Result<Report, Failure> {
    let list = impcor_band(a.genus, a.markings, a.dim)?;
    let mut r = Report::new(vec!["key", "dimension", "lower_bound"]);
    r.param("genus", a.genus);
    r.param("markings", a.markings);
    r.param("dim", a.dim);
    r.methods.push("band_filter".into());
    let mut items = Vec::new();
    for s in &list {
        let (dim, lower) = band_bounds(s);
        let key = s.key_string();
        items.push(json!({ "key": key, "dimension": dim, "lower_bound": lower }));
        r.rows.push(vec![key, dim.to_string(), lower.to_string()]);
    }
    r.result = json!({ "count": list.len(), "strata": items });
    Ok(r)
}

fn socle(a: &SocleArgs) -> Result<Report, Failure> {
    let (variant, name) = match a.variant {
        SocleKind::Full => (SocleVariant::Full, "full"),
        SocleKind::CompactType => (SocleVariant::CompactType, "compact_type"),
        SocleKind::RationalTails => (SocleVariant::RationalTails, "rational_tails"),
    };
    let list = socle_strata(variant, a.genus, a.markings)?;
    let mut r = Report::new(vec!["key", "automorphisms"]);
    r.param("variant", name);
    r.param("genus", a.genus);
    r.param("markings", a.markings);
    r.methods.push("stratum_filter".into());
    let mut items = Vec::new();
    for s in &list {
        let key = s.key_string();
        let aut = s.automorphism_count();
        items.push(json!({ "key": key, "automorphisms": aut }));
        r.rows.push(vec![key, aut.to_string()]);
    }
    let mut result = Map::new();
    result.insert("count".into(), list.len().into());
    result.insert("strata".into(), Value::Array(items));
    if variant == SocleVariant::CompactType {
        result.insert(
            "lambda_g_degree".into(),
            rational(&socle_integral_ct(a.genus)?),
        );
    }
    r.result = Value::Object(result);
    Ok(r)
}

fn lowdim(a: &DimArgs) -> Result<Report, Failure> {
    let gens = lowdim_generators(a.genus, a.markings, a.dim)?;
    let mut r = Report::new(vec!["kind", "key", "decorated_vertex", "note"]);
    r.param("genus", a.genus);
    r.param("markings", a.markings);
    r.param("dim", a.dim);
    r.methods.push("band_filter".into());
    let mut items = Vec::new();
    for d in &gens {
        let key = d.stratum.key_string();
        items.push(json!({
            "kind": d.kind.to_string(),
            "key": key,
            "decorated_vertex": d.decorated_vertex,
            "note": d.note,
        }));
        r.rows.push(vec![
            d.kind.to_string(),
            key,
            d.decorated_vertex
                .map(|v| v.to_string())
                .unwrap_or_default(),
            d.note.clone(),
        ]);
    }
    r.result = json!({ "count": gens.len(), "generators": items });
    Ok(r)
}

fn diaz(a: &DiazArgs) -> Result<Report, Failure> {
    let (variant, name) = match a.variant {
        DiazKind::SLeqS => (DiazVariant::SLeqS, "s_leq_s"),
        DiazKind::RationalTails => (DiazVariant::RationalTails, "rational_tails"),
        DiazKind::CompactType => (DiazVariant::CompactType, "compact_type"),
    };
    let bound = diaz_bound(variant, a.genus, a.markings, a.s)?;
    let mut r = Report::new(vec!["variant", "bound"]);
    r.param("variant", name);
    r.param("genus", a.genus);
    r.param("markings", a.markings);
    r.param("s", a.s);
    r.methods.push("closed_form".into());
    r.result = json!({ "bound": bound });
    r.rows.push(vec![name.to_string(), bound.to_string()]);
    Ok(r)
}
