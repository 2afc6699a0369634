//! Exact ψ-class intersection numbers and the supported linear Hodge
//! integrals on `M̄_{g,n}`.
//!
//! `∫ ψ^a` is computed by the DVV (Virasoro) recursion from the two seeds
//! `⟨τ₀³⟩₀ = 1` and `⟨τ₁⟩₁ = 1/24`. `∫ ψ^a λ_g` uses the closed λ_g formula.
//! Mixed integrals `∫ ψ^a λ_k` with `0 < k < g` are outside the supported
//! domain and always produce an error.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rational::{binomial, double_factorial, factorial, frac, multinomial, pow};
use crate::stable_graphs::check_stable;
use crate::{Error, Rational, Result};

/// Memo key: genus, exponents sorted descending, λ index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntersectionKey {
    pub g: u32,
    pub a: Vec<u32>,
    pub k: u32,
}

impl IntersectionKey {
    pub fn new(g: u32, a: &[u32], k: u32) -> Self {
        let mut a = a.to_vec();
        a.sort_unstable_by(|x, y| y.cmp(x));
        IntersectionKey { g, a, k }
    }

    /// `psi|g|a1,...` for `k = 0`, `hodge|g|k|a1,...` otherwise.
    pub fn serialize(&self) -> String {
        let a = join(&self.a);
        if self.k == 0 {
            format!("psi|{}|{a}", self.g)
        } else {
            format!("hodge|{}|{}|{a}", self.g, self.k)
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        let fields: Vec<&str> = s.split('|').collect();
        let vector = |v: &str| -> Option<Vec<u32>> {
            if v.is_empty() {
                Some(Vec::new())
            } else {
                v.split(',').map(|x| x.parse().ok()).collect()
            }
        };
        let key = match fields.as_slice() {
            ["psi", g, a] => IntersectionKey::new(g.parse().ok()?, &vector(a)?, 0),
            ["hodge", g, k, a] => {
                IntersectionKey::new(g.parse().ok()?, &vector(a)?, k.parse().ok()?)
            }
            _ => return None,
        };
        (key.serialize() == s).then_some(key)
    }
}

fn join(a: &[u32]) -> String {
    a.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Intersection-number evaluator with an optional shared memo table.
///
/// The table is a concurrent map; entries are inserted only once fully
/// computed, and inserting an already present key keeps the first value.
pub struct Engine {
    memo: Option<DashMap<IntersectionKey, Rational>>,
}

impl Default for Engine {
    fn default() -> Self {
        Self::new()
    }
}

impl Engine {
    pub fn new() -> Self {
        Engine {
            memo: Some(DashMap::new()),
        }
    }

    pub fn without_cache() -> Self {
        Engine { memo: None }
    }

    /// `∫_{M̄_{g,n}} ψ_1^{a_1} ⋯ ψ_n^{a_n}`, zero unless `Σ a_i = 3g - 3 + n`.
    pub fn psi_integral(&self, g: u32, a: &[u32]) -> Result<Rational> {
        check_stable(g as i64, a.len() as i64)?;
        let mut sorted = a.to_vec();
        sorted.sort_unstable_by(|x, y| y.cmp(x));
        Ok(self.psi_sorted(g, &sorted))
    }

    /// `∫ ψ^a λ_g` for `g >= 1`, zero unless `Σ a_i = 2g - 3 + n`.
    pub fn lambda_g_integral(&self, g: u32, a: &[u32]) -> Result<Rational> {
        if g == 0 {
            return Err(Error::InvalidInput("λ_g integral needs g >= 1".into()));
        }
        check_stable(g as i64, a.len() as i64)?;
        let key = IntersectionKey::new(g, a, g);
        if let Some(v) = self.lookup(&key) {
            return Ok(v);
        }
        let n = a.len() as u32;
        let value = if a.iter().sum::<u32>() != 2 * g + n - 3 {
            Rational::zero()
        } else {
            Rational::from_integer(multinomial(a)) * bernoulli_b(g)
        };
        self.store(key, &value);
        Ok(value)
    }

    /// `∫ ψ^a λ_k` on the supported domain `k = 0`, `k = g`, or `g <= 1`.
    pub fn hodge_integral(&self, g: u32, a: &[u32], k: u32) -> Result<Rational> {
        check_stable(g as i64, a.len() as i64)?;
        if k > g {
            return Err(Error::InvalidInput(format!(
                "λ index {k} exceeds genus {g}"
            )));
        }
        if k == 0 {
            return self.psi_integral(g, a);
        }
        if k == g {
            return self.lambda_g_integral(g, a);
        }
        Err(Error::UnsupportedHodgeIndex { g, k })
    }

    /// Linear extension of [`Engine::hodge_integral`].
    pub fn integrate_formal(&self, class: &FormalTautClass) -> Result<Rational> {
        let mut total = Rational::zero();
        for ((a, lambda), coeff) in &class.terms {
            let value = self
                .hodge_integral(class.g, a, *lambda)
                .map_err(|e| match e {
                    Error::UnsupportedHodgeIndex { g, k } => Error::UnsupportedTerm {
                        term: FormalTautClass::term_name(a, k),
                        g,
                        k,
                    },
                    other => other,
                })?;
            total += coeff * value;
        }
        Ok(total)
    }

    /// Every memoized value with its serialized key, sorted by key.
    pub fn entries(&self) -> Vec<(String, Rational)> {
        let mut out: Vec<(String, Rational)> = match &self.memo {
            Some(m) => m
                .iter()
                .map(|e| (e.key().serialize(), e.value().clone()))
                .collect(),
            None => Vec::new(),
        };
        out.sort_by(|x, y| x.0.cmp(&y.0));
        out
    }

    /// Seeds the memo from serialized entries; keys owned by other modules
    /// are skipped and their count returned.
    pub fn preload<'a>(&self, entries: impl IntoIterator<Item = (&'a str, &'a Rational)>) -> usize {
        let mut skipped = 0;
        for (key, value) in entries {
            match IntersectionKey::parse(key) {
                Some(k) => self.store(k, value),
                None => skipped += 1,
            }
        }
        skipped
    }

    fn lookup(&self, key: &IntersectionKey) -> Option<Rational> {
        self.memo.as_ref()?.get(key).map(|v| v.clone())
    }

    fn store(&self, key: IntersectionKey, value: &Rational) {
        if let Some(m) = &self.memo {
            m.entry(key).or_insert_with(|| value.clone());
        }
    }

    /// `a` sorted descending. Unstable `(g, n)` evaluate to zero here, which
    /// is what the recursion needs for its boundary terms.
    fn psi_sorted(&self, g: u32, a: &[u32]) -> Rational {
        let n = a.len() as u32;
        if 2 * g + n <= 2 {
            return Rational::zero();
        }
        if a.iter().sum::<u32>() != 3 * g + n - 3 {
            return Rational::zero();
        }
        if g == 0 && n == 3 {
            return Rational::one();
        }
        if g == 1 && n == 1 {
            return frac(1, 24);
        }
        let key = IntersectionKey {
            g,
            a: a.to_vec(),
            k: 0,
        };
        if let Some(v) = self.lookup(&key) {
            return v;
        }
        let value = self.dvv(g, a);
        self.store(key, &value);
        value
    }

    fn psi_unsorted(&self, g: u32, mut a: Vec<u32>) -> Rational {
        a.sort_unstable_by(|x, y| y.cmp(x));
        self.psi_sorted(g, &a)
    }

    /// DVV recursion on the largest exponent `a[0] = k + 1 >= 1`.
    fn dvv(&self, g: u32, a: &[u32]) -> Rational {
        let k = a[0] - 1;
        let rest = &a[1..];
        let df = |m: i64| Rational::from_integer(double_factorial(m));
        let mut total = Rational::zero();

        for j in 0..rest.len() {
            let dj = rest[j] as i64;
            let mut b = rest.to_vec();
            b[j] += k;
            let weight = df(2 * k as i64 + 2 * dj + 1) / df(2 * dj - 1);
            total += weight * self.psi_unsorted(g, b);
        }

        if k >= 1 {
            let mut split = Rational::zero();
            for r in 0..k {
                let s = k - 1 - r;
                let weight = df(2 * r as i64 + 1) * df(2 * s as i64 + 1);
                let mut inner = Rational::zero();
                if g >= 1 {
                    let mut b = Vec::with_capacity(rest.len() + 2);
                    b.extend_from_slice(&[r, s]);
                    b.extend_from_slice(rest);
                    inner += self.psi_unsorted(g - 1, b);
                }
                let m = rest.len();
                for mask in 0u32..(1 << m) {
                    let mut left = vec![r];
                    let mut right = vec![s];
                    for (i, &x) in rest.iter().enumerate() {
                        if mask & (1 << i) != 0 {
                            left.push(x);
                        } else {
                            right.push(x);
                        }
                    }
                    for g1 in 0..=g {
                        let lv = self.psi_unsorted(g1, left.clone());
                        if lv.is_zero() {
                            continue;
                        }
                        inner += lv * self.psi_unsorted(g - g1, right.clone());
                    }
                }
                split += weight * inner;
            }
            total += split / Rational::from_integer(BigInt::from(2));
        }

        total / df(2 * k as i64 + 3)
    }
}

/// Shared process-wide engine.
pub fn global() -> &'static Engine {
    static ENGINE: OnceLock<Engine> = OnceLock::new();
    ENGINE.get_or_init(Engine::new)
}

pub fn psi_integral(g: u32, a: &[u32]) -> Result<Rational> {
    global().psi_integral(g, a)
}

pub fn lambda_g_integral(g: u32, a: &[u32]) -> Result<Rational> {
    global().lambda_g_integral(g, a)
}

pub fn hodge_integral(g: u32, a: &[u32], k: u32) -> Result<Rational> {
    global().hodge_integral(g, a, k)
}

pub fn integrate_formal(class: &FormalTautClass) -> Result<Rational> {
    global().integrate_formal(class)
}

/// Genus-zero closed form `(n - 3)! / Π a_i!`; zero on degree mismatch.
pub fn genus0_psi(a: &[u32]) -> Result<Rational> {
    let n = a.len() as u32;
    if n < 3 {
        return Err(Error::Unstable { g: 0, n: n as i64 });
    }
    if a.iter().sum::<u32>() != n - 3 {
        return Ok(Rational::zero());
    }
    Ok(Rational::from_integer(multinomial(a)))
}

/// Bernoulli number `B_m` (with `B_1 = -1/2`).
pub fn bernoulli(m: u32) -> Rational {
    let mut b: Vec<Rational> = vec![Rational::one()];
    for j in 1..=m {
        let mut acc = Rational::zero();
        for (i, bi) in b.iter().enumerate() {
            acc += Rational::from_integer(binomial(j + 1, i as u32)) * bi;
        }
        b.push(-acc / Rational::from_integer(BigInt::from(j + 1)));
    }
    b.pop().unwrap()
}

/// λ_g constant: `b_0 = 1`, `b_g = (2^{2g-1} - 1)/2^{2g-1} · |B_{2g}| / (2g)!`.
pub fn bernoulli_b(g: u32) -> Rational {
    if g == 0 {
        return Rational::one();
    }
    let two_pow = Rational::from_integer(pow(2, 2 * g - 1));
    let ratio = (two_pow.clone() - Rational::one()) / two_pow;
    ratio * bernoulli(2 * g).abs() / Rational::from_integer(factorial(2 * g))
}

/// Finite rational combination of monomials `ψ^a λ_k` on a fixed `(g, n)`.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalTautClass {
    pub g: u32,
    pub n: usize,
    terms: BTreeMap<(Vec<u32>, u32), Rational>,
}

impl FormalTautClass {
    pub fn new(g: u32, n: usize) -> Self {
        FormalTautClass {
            g,
            n,
            terms: BTreeMap::new(),
        }
    }

    /// Adds `coeff · ψ^a λ_k`, merging with an existing term.
    pub fn add_term(&mut self, a: Vec<u32>, k: u32, coeff: Rational) -> Result<()> {
        if a.len() != self.n {
            return Err(Error::InvalidInput(format!(
                "exponent vector of length {} on a class with n = {}",
                a.len(),
                self.n
            )));
        }
        if k > self.g {
            return Err(Error::InvalidInput(format!(
                "λ index {k} exceeds genus {}",
                self.g
            )));
        }
        let key = (a, k);
        let updated = self.terms.get(&key).cloned().unwrap_or_default() + coeff;
        if updated.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, updated);
        }
        Ok(())
    }

    pub fn with_term(mut self, a: &[u32], k: u32, coeff: Rational) -> Result<Self> {
        self.add_term(a.to_vec(), k, coeff)?;
        Ok(self)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], u32, &Rational)> {
        self.terms.iter().map(|((a, k), c)| (a.as_slice(), *k, c))
    }

    pub fn coefficient(&self, a: &[u32], k: u32) -> Rational {
        self.terms
            .get(&(a.to_vec(), k))
            .cloned()
            .unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn term_name(a: &[u32], k: u32) -> String {
        format!("ψ^({}) λ_{k}", join(a))
    }
}

impl fmt::Display for FormalTautClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((a, k), c)| format!("({c})·{}", Self::term_name(a, *k)))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
