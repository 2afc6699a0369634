//! Stratum-level consequences of the genus-zero component bound: a
//! codimension-`i` tautological class on `M̄_{g,n}` is pushed forward from
//! strata with at least `i - g + 1` genus-0 vertices.
//!
//! Everything here is a filter over [`enumerate_strata`]; the `_in`
//! variants take a pre-enumerated stratum list so callers sweeping many
//! parameters enumerate once.

use std::fmt;

use num_traits::One;

use crate::intersection::lambda_g_integral;
use crate::stable_graphs::{check_stable, enumerate_strata, StableGraph};
use crate::{Error, Rational, Result};

/// Minimum genus-0 vertex count for support in codimension `i`.
pub fn support_threshold(g: u32, i: u32) -> i64 {
    i as i64 - g as i64 + 1
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportStratum {
    pub graph: StableGraph,
    /// No one-edge contraction of this stratum also meets the threshold.
    pub maximal: bool,
}

pub fn theorem_star_support(g: u32, n: usize, i: u32) -> Result<Vec<SupportStratum>> {
    let strata = enumerate_strata(g, n, None)?;
    Ok(theorem_star_support_in(&strata, g, i))
}

pub fn theorem_star_support_in(strata: &[StableGraph], g: u32, i: u32) -> Vec<SupportStratum> {
    let threshold = support_threshold(g, i);
    let qualifies = |s: &StableGraph| s.genus_zero_count() as i64 >= threshold;
    strata
        .iter()
        .filter(|s| qualifies(s))
        .map(|s| SupportStratum {
            graph: s.clone(),
            maximal: !s
                .edges()
                .any(|e| contracted_genus_zero_count(s, e) as i64 >= threshold),
        })
        .collect()
}

/// Genus-0 vertex count after contracting the edge `(u, v)`.
fn contracted_genus_zero_count(s: &StableGraph, (u, v): (usize, usize)) -> u32 {
    let count = s.genus_zero_count();
    let zero = |w: usize| (s.genus_of(w) == 0) as u32;
    if u == v {
        count - zero(u)
    } else {
        let merged = (s.genus_of(u) + s.genus_of(v) == 0) as u32;
        count - zero(u) - zero(v) + merged
    }
}

/// `(dimension, Σ_k (2g_k - 2 + n_k - δ_{g_k,0}))` for a stratum; the band
/// condition at `j` is `dimension >= j >= lower`.
pub fn band_bounds(graph: &StableGraph) -> (u32, u32) {
    let mut dim = 0i64;
    let mut lower = 0i64;
    for (gk, nk) in graph.vertex_profile() {
        let (gk, nk) = (gk as i64, nk as i64);
        let delta = (gk == 0) as i64;
        dim += (gk - 1 + delta) + (2 * gk - 2 + nk - delta);
        lower += 2 * gk - 2 + nk - delta;
    }
    (dim as u32, lower as u32)
}

pub fn in_band(graph: &StableGraph, j: u32) -> bool {
    let (dim, lower) = band_bounds(graph);
    dim >= j && j >= lower
}

/// Strata whose vertex data satisfy both inequalities of the band at
/// dimension `j`.
pub fn impcor_band(g: u32, n: usize, j: u32) -> Result<Vec<StableGraph>> {
    check_stable(g as i64, n as i64)?;
    let dim = 3 * g + n as u32 - 3;
    if j > dim {
        return Err(Error::InvalidInput(format!(
            "dimension {j} exceeds dim M̄_{{{g},{n}}} = {dim}"
        )));
    }
    // the left inequality caps the codimension at dim - j
    let strata = enumerate_strata(g, n, Some(dim - j))?;
    Ok(impcor_band_in(&strata, j))
}

pub fn impcor_band_in(strata: &[StableGraph], j: u32) -> Vec<StableGraph> {
    strata.iter().filter(|s| in_band(s, j)).cloned().collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SocleVariant {
    Full,
    CompactType,
    RationalTails,
}

pub fn socle_strata(variant: SocleVariant, g: u32, n: usize) -> Result<Vec<StableGraph>> {
    check_stable(g as i64, n as i64)?;
    let dim = 3 * g + n as u32 - 3;
    let strata = match variant {
        SocleVariant::Full => enumerate_strata(g, n, None)?
            .into_iter()
            .filter(|s| s.num_edges() as u32 == dim)
            .collect(),
        SocleVariant::CompactType => {
            let codim = 2 * g + n as u32 - 3;
            enumerate_strata(g, n, Some(codim))?
                .into_iter()
                .filter(|s| is_compact_type_socle(s, g, n))
                .collect()
        }
        SocleVariant::RationalTails => {
            if g == 0 {
                return Err(Error::InvalidInput(
                    "rational tails socle needs g >= 1".into(),
                ));
            }
            let codim = (n as u32).saturating_sub(1);
            enumerate_strata(g, n, Some(codim))?
                .into_iter()
                .filter(|s| is_rational_tails_socle(s, g, n))
                .collect()
        }
    };
    Ok(strata)
}

/// Tree with `g - 2 + n` trivalent genus-0 vertices and `g` genus-1 leaves.
fn is_compact_type_socle(s: &StableGraph, g: u32, n: usize) -> bool {
    if s.betti() != 0 {
        return false;
    }
    let profile = s.vertex_profile();
    let trivalent = profile.iter().filter(|&&p| p == (0, 3)).count() as i64;
    let leaves = profile.iter().filter(|&&p| p == (1, 1)).count() as i64;
    trivalent == g as i64 - 2 + n as i64
        && leaves == g as i64
        && trivalent + leaves == profile.len() as i64
}

/// A genus-`g` vertex of valence one (zero when `n = 0`) attached to a
/// trivalent genus-0 tree carrying every leg.
fn is_rational_tails_socle(s: &StableGraph, g: u32, n: usize) -> bool {
    let profile = s.vertex_profile();
    let want = (g, (n > 0) as u32);
    let heavy = profile.iter().filter(|&&p| p == want).count();
    let trivalent = profile.iter().filter(|&&p| p == (0, 3)).count();
    heavy == 1 && heavy + trivalent == profile.len() && s.betti() == 0
}

/// `(∫_{M̄_{1,1}} λ_1)^g`, the λ_g degree of a compact-type socle stratum,
/// as the product over its `g` genus-1 leaves.
pub fn socle_integral_ct(g: u32) -> Result<Rational> {
    let leaf = lambda_g_integral(1, &[0])?;
    Ok((0..g).fold(Rational::one(), |acc, _| acc * &leaf))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    BoundaryStratum,
    Psi1OnFactor,
    UnknownFlag,
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GeneratorKind::BoundaryStratum => "boundary_stratum",
            GeneratorKind::Psi1OnFactor => "psi1_on_factor",
            GeneratorKind::UnknownFlag => "unknown_flag",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorDescriptor {
    pub kind: GeneratorKind,
    pub stratum: StableGraph,
    pub decorated_vertex: Option<usize>,
    pub note: String,
}

pub const UNKNOWN_A2_M32: &str = "A²(M̄_{3,2}) has not yet been computed";

/// Generators of the dimension-`j` tautological group for `j <= 6`, read
/// off the band at `j`:
///
/// * band strata of dimension exactly `j` give their fundamental classes;
/// * for `j = 3, 4, 5`, band strata of dimension `j + 1` with a genus-2
///   vertex give ψ_1 on that vertex;
/// * for `j = 6`, a band stratum with a genus-3 vertex of valence 2 is
///   flagged: its codimension-2 classes are not known.
///
/// Cases settled by external computations carry a provenance note instead
/// of a recomputation.
pub fn lowdim_generators(g: u32, n: usize, j: u32) -> Result<Vec<GeneratorDescriptor>> {
    if j > 6 {
        return Err(Error::ClassificationUnavailable(j));
    }
    let band = impcor_band(g, n, j)?;
    let provenance = match (j, g, n) {
        (2, 2, 0) => Some("A¹(M̄_2) is generated by boundary strata (Mumford)"),
        (4, 3, 0) => Some("R_4(M̄_3) from Faber's genus-3 computation"),
        (5, 3, 0) | (5, 3, 1) => Some("R_5 from Faber's genus-3/4 computations"),
        _ => None,
    };
    let with_provenance = |note: String| match provenance {
        Some(p) => format!("{note}; {p}"),
        None => note,
    };

    let mut out = Vec::new();
    for s in &band {
        let (dim, _) = band_bounds(s);
        if dim == j {
            out.push(GeneratorDescriptor {
                kind: GeneratorKind::BoundaryStratum,
                stratum: s.clone(),
                decorated_vertex: None,
                note: with_provenance("fundamental class".into()),
            });
        }
    }
    if (3..=5).contains(&j) {
        for s in &band {
            let (dim, _) = band_bounds(s);
            if dim != j + 1 {
                continue;
            }
            if let Some(v) = (0..s.num_vertices()).find(|&v| s.genus_of(v) == 2) {
                out.push(GeneratorDescriptor {
                    kind: GeneratorKind::Psi1OnFactor,
                    stratum: s.clone(),
                    decorated_vertex: Some(v),
                    note: with_provenance(format!("ψ_1 on the M̄_{{2,{}}} factor", s.valence(v))),
                });
            }
        }
    }
    if j == 6 {
        for s in &band {
            let flagged = (0..s.num_vertices()).find(|&v| s.genus_of(v) == 3 && s.valence(v) == 2);
            if let Some(v) = flagged {
                out.push(GeneratorDescriptor {
                    kind: GeneratorKind::UnknownFlag,
                    stratum: s.clone(),
                    decorated_vertex: Some(v),
                    note: format!("codimension-2 class on the M̄_{{3,2}} factor; {UNKNOWN_A2_M32}"),
                });
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiazVariant {
    SLeqS,
    RationalTails,
    CompactType,
}

/// Largest possible dimension of a complete subvariety: `s + g - 1` in the
/// locus with at most `s` rational components, `g - 2 + n` for rational
/// tails, `2g - 3 + n` for compact type.
pub fn diaz_bound(variant: DiazVariant, g: u32, n: usize, s: Option<u32>) -> Result<i64> {
    let (g, n) = (g as i64, n as i64);
    match variant {
        DiazVariant::SLeqS => {
            let s = s.ok_or_else(|| Error::InvalidInput("S_leq_s bound needs s".into()))?;
            Ok(s as i64 + g - 1)
        }
        DiazVariant::RationalTails => Ok(g - 2 + n),
        DiazVariant::CompactType => Ok(2 * g - 3 + n),
    }
}
