//! Single and double Hurwitz numbers with labeled parts, computed three
//! independent ways.
//!
//! Counting convention (shared by every method): for `α ⊢ d` with parts
//! labeled `1..n`,
//!
//! ```text
//! H = (1/d!) · #{ (η, labeling of the cycles of η by 1..n with |cycle i| = α_i,
//!                  τ_1, …, τ_r transpositions [, η' labeled by β]) :
//!                 η τ_1 ⋯ τ_r [η'] = 1, and ⟨η, τ⟩ transitive if connected }
//! ```
//!
//! * [`hurwitz_bruteforce`] enumerates these tuples literally.
//! * [`hurwitz_character`] uses the Frobenius class-product formula with
//!   Murnaghan–Nakayama characters, then extracts the connected count by
//!   inclusion–exclusion over how the labeled parts split between orbits.
//! * [`cut_and_join`] recurses on the first transposition, joining or
//!   cutting cycles.

use std::collections::HashMap;
use std::sync::OnceLock;

use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::partitions::{multiplicities, partitions};
use crate::rational::{binomial, factorial, int};
use crate::{Error, Rational, Result};

/// Which Hurwitz count to compute. `g` is the arithmetic genus of the
/// source and may be negative for disconnected sources.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HurwitzSpec {
    pub g: i64,
    pub alpha: Vec<u32>,
    pub beta: Option<Vec<u32>>,
    pub connected: bool,
}

impl HurwitzSpec {
    pub fn single(g: i64, alpha: &[u32]) -> Self {
        HurwitzSpec {
            g,
            alpha: alpha.to_vec(),
            beta: None,
            connected: true,
        }
    }

    pub fn double(g: i64, alpha: &[u32], beta: &[u32]) -> Self {
        HurwitzSpec {
            g,
            alpha: alpha.to_vec(),
            beta: Some(beta.to_vec()),
            connected: true,
        }
    }

    pub fn disconnected(mut self) -> Self {
        self.connected = false;
        self
    }

    pub fn degree(&self) -> u32 {
        self.alpha.iter().sum()
    }

    pub fn validate(&self) -> Result<()> {
        if self.alpha.is_empty() {
            return Err(Error::InvalidInput(
                "partition must have at least one part".into(),
            ));
        }
        let check = |parts: &[u32], name: &str| {
            if parts.contains(&0) {
                Err(Error::InvalidInput(format!("{name} has a zero part")))
            } else {
                Ok(())
            }
        };
        check(&self.alpha, "alpha")?;
        if let Some(beta) = &self.beta {
            check(beta, "beta")?;
            let db: u32 = beta.iter().sum();
            if db != self.degree() {
                return Err(Error::InvalidInput(format!(
                    "|alpha| = {} but |beta| = {db}",
                    self.degree()
                )));
            }
        }
        Ok(())
    }

    /// `r` as a signed integer; negative means the count is empty.
    fn raw_branch_count(&self) -> i64 {
        let n = self.alpha.len() as i64;
        match &self.beta {
            None => self.degree() as i64 + n + 2 * self.g - 2,
            Some(beta) => 2 * self.g - 2 + n + beta.len() as i64,
        }
    }
}

/// Unordered shadow of a partition: parts sorted descending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionShape(Vec<u32>);

impl PartitionShape {
    pub fn new(parts: &[u32]) -> Self {
        let mut p: Vec<u32> = parts.iter().copied().filter(|&x| x > 0).collect();
        p.sort_unstable_by(|a, b| b.cmp(a));
        PartitionShape(p)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `(k, m_k)` pairs.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        multiplicities(&self.0)
    }

    /// `Π_k m_k!`: the number of ways to label cycles of this type.
    pub fn labelings(&self) -> BigInt {
        self.multiplicities()
            .iter()
            .map(|&(_, m)| factorial(m))
            .product()
    }

    /// Size of the conjugacy class in `S_d`.
    pub fn class_size(&self) -> BigInt {
        let z: BigInt = self
            .multiplicities()
            .iter()
            .map(|&(k, m)| num_traits::pow(BigInt::from(k), m as usize) * factorial(m))
            .product();
        factorial(self.size()) / z
    }
}

/// Number of simple branch points: `d + n + 2g - 2` for single Hurwitz,
/// `2g - 2 + ℓ(α) + ℓ(β)` for double.
pub fn transposition_count(spec: &HurwitzSpec) -> Result<u32> {
    spec.validate()?;
    let r = spec.raw_branch_count();
    u32::try_from(r).map_err(|_| Error::NegativeBranchCount(r))
}

/// Hard limits for exhaustive enumeration.
#[derive(Clone, Copy, Debug)]
pub struct BruteForceCaps {
    pub max_degree: u32,
    pub max_transpositions: u32,
}

impl Default for BruteForceCaps {
    fn default() -> Self {
        BruteForceCaps {
            max_degree: 4,
            max_transpositions: 8,
        }
    }
}

pub fn hurwitz_bruteforce(spec: &HurwitzSpec) -> Result<Rational> {
    hurwitz_bruteforce_with(spec, BruteForceCaps::default())
}

const MAX_DEGREE: usize = 8;
type Perm = [u8; MAX_DEGREE];

/// Exhaustive enumeration of the tuples in the module-level definition.
pub fn hurwitz_bruteforce_with(spec: &HurwitzSpec, caps: BruteForceCaps) -> Result<Rational> {
    spec.validate()?;
    let r = spec.raw_branch_count();
    if r < 0 {
        return Ok(Rational::zero());
    }
    let d = spec.degree();
    if d > caps.max_degree || d as usize > MAX_DEGREE {
        return Err(Error::CapExceeded(format!(
            "brute force degree {d} > {}",
            caps.max_degree.min(MAX_DEGREE as u32)
        )));
    }
    if r > caps.max_transpositions as i64 {
        return Err(Error::CapExceeded(format!(
            "brute force transposition count {r} > {}",
            caps.max_transpositions
        )));
    }
    let d = d as usize;
    let alpha = PartitionShape::new(&spec.alpha);
    let beta = spec.beta.as_ref().map(|b| PartitionShape::new(b));

    let etas: Vec<Perm> = all_perms(d)
        .into_iter()
        .filter(|p| cycle_type(p, d) == alpha)
        .collect();
    let transpositions: Vec<(u8, u8)> = (0..d as u8)
        .flat_map(|a| (a + 1..d as u8).map(move |b| (a, b)))
        .collect();
    let search = Search {
        d,
        r: r as usize,
        transpositions: &transpositions,
        beta: beta.as_ref(),
        connected: spec.connected,
    };
    let tuples: u64 = etas
        .par_iter()
        .map(|eta| {
            let mut chosen = Vec::with_capacity(search.r);
            search.count(eta, *eta, &mut chosen)
        })
        .sum();

    let mut labeled = BigInt::from(tuples) * alpha.labelings();
    if let Some(b) = &beta {
        labeled *= b.labelings();
    }
    Ok(Rational::new(labeled, factorial(d as u32)))
}

struct Search<'a> {
    d: usize,
    r: usize,
    transpositions: &'a [(u8, u8)],
    beta: Option<&'a PartitionShape>,
    connected: bool,
}

impl Search<'_> {
    /// `product = η τ_1 ⋯ τ_i` with `i = chosen.len()`.
    fn count(&self, eta: &Perm, product: Perm, chosen: &mut Vec<(u8, u8)>) -> u64 {
        let remaining = (self.r - chosen.len()) as i64;
        let cycles = count_cycles(&product, self.d) as i64;
        // each transposition moves the cycle count by exactly one
        let target = match self.beta {
            None => self.d as i64,
            Some(b) => b.parts().len() as i64,
        };
        let gap = (cycles - target).abs();
        if gap > remaining || (remaining - gap) % 2 != 0 {
            return 0;
        }
        if remaining == 0 {
            let closes = match self.beta {
                None => true,
                Some(b) => cycle_type(&product, self.d) == *b,
            };
            return (closes && (!self.connected || self.transitive(eta, chosen))) as u64;
        }
        let mut total = 0;
        for &(a, b) in self.transpositions {
            let mut next = product;
            next.swap(a as usize, b as usize);
            chosen.push((a, b));
            total += self.count(eta, next, chosen);
            chosen.pop();
        }
        total
    }

    fn transitive(&self, eta: &Perm, chosen: &[(u8, u8)]) -> bool {
        let mut parent: Vec<usize> = (0..self.d).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        let union = |p: &mut Vec<usize>, a: usize, b: usize| {
            let (ra, rb) = (find(p, a), find(p, b));
            p[ra] = rb;
        };
        for (x, &y) in eta.iter().enumerate().take(self.d) {
            union(&mut parent, x, y as usize);
        }
        for &(a, b) in chosen {
            union(&mut parent, a as usize, b as usize);
        }
        let root = find(&mut parent, 0);
        (1..self.d).all(|x| find(&mut parent, x) == root)
    }
}

fn all_perms(d: usize) -> Vec<Perm> {
    fn go(d: usize, cur: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Perm>) {
        if cur.len() == d {
            let mut p = [0u8; MAX_DEGREE];
            p[..d].copy_from_slice(cur);
            out.push(p);
            return;
        }
        for x in 0..d {
            if !used[x] {
                used[x] = true;
                cur.push(x as u8);
                go(d, cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(d, &mut Vec::new(), &mut [false; MAX_DEGREE], &mut out);
    out
}

fn cycle_lengths(p: &Perm, d: usize) -> Vec<u32> {
    let mut seen = [false; MAX_DEGREE];
    let mut out = Vec::new();
    for start in 0..d {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x] as usize;
            len += 1;
        }
        out.push(len);
    }
    out
}

fn count_cycles(p: &Perm, d: usize) -> usize {
    cycle_lengths(p, d).len()
}

fn cycle_type(p: &Perm, d: usize) -> PartitionShape {
    PartitionShape::new(&cycle_lengths(p, d))
}

fn character_memo() -> &'static DashMap<(PartitionShape, PartitionShape), i64> {
    static MEMO: OnceLock<DashMap<(PartitionShape, PartitionShape), i64>> = OnceLock::new();
    MEMO.get_or_init(DashMap::new)
}

/// Irreducible character `χ^λ(μ)` by the Murnaghan–Nakayama rule, removing
/// rim hooks on the abacus (β-set) of `λ`.
pub fn mn_character(lambda: &PartitionShape, mu: &PartitionShape) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::InvalidInput(format!(
            "character size mismatch: |λ| = {} but |μ| = {}",
            lambda.size(),
            mu.size()
        )));
    }
    Ok(mn_rec(lambda, mu.parts()))
}

fn mn_rec(lambda: &PartitionShape, mu: &[u32]) -> i64 {
    let Some((&hook, rest)) = mu.split_first() else {
        return 1;
    };
    let key = (lambda.clone(), PartitionShape::new(mu));
    if let Some(v) = character_memo().get(&key) {
        return *v;
    }
    let len = lambda.parts().len() as i64;
    let beads: Vec<i64> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i64 + len - 1 - i as i64)
        .collect();
    let mut total = 0;
    for (i, &b) in beads.iter().enumerate() {
        let to = b - hook as i64;
        if to < 0 || beads.contains(&to) {
            continue;
        }
        let between = beads.iter().filter(|&&x| x > to && x < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut moved = beads.clone();
        moved[i] = to;
        moved.sort_unstable_by(|x, y| y.cmp(x));
        let parts: Vec<u32> = moved
            .iter()
            .enumerate()
            .map(|(j, &x)| (x - (len - 1 - j as i64)) as u32)
            .collect();
        total += sign * mn_rec(&PartitionShape::new(&parts), rest);
    }
    character_memo().entry(key).or_insert(total);
    total
}

/// Memoized characters as `chi|λ|μ` cache entries.
pub fn character_entries() -> Vec<(String, Rational)> {
    let render = |p: &PartitionShape| {
        p.parts()
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    let mut out: Vec<(String, Rational)> = character_memo()
        .iter()
        .map(|e| {
            let (l, m) = e.key();
            (format!("chi|{}|{}", render(l), render(m)), int(*e.value()))
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Seeds the character memo from `chi|λ|μ` entries, skipping other keys
/// and any value that is not an integer.
pub fn preload_characters<'a>(entries: impl IntoIterator<Item = (&'a str, &'a Rational)>) {
    let parse = |s: &str| -> Option<PartitionShape> {
        let parts: Option<Vec<u32>> = s.split(',').map(|x| x.parse().ok()).collect();
        let shape = PartitionShape::new(&parts?);
        (shape.size() > 0).then_some(shape)
    };
    for (key, value) in entries {
        let fields: Vec<&str> = key.split('|').collect();
        if let ["chi", l, m] = fields.as_slice() {
            if let (Some(l), Some(m)) = (parse(l), parse(m)) {
                if value.is_integer() {
                    if let Ok(v) = i64::try_from(value.to_integer()) {
                        character_memo().entry((l, m)).or_insert(v);
                    }
                }
            }
        }
    }
}

/// Soft degree cap for the character and cut-and-join methods.
pub const CHARACTER_MAX_DEGREE: u32 = 8;

/// Frobenius formula, with the connected count peeled off by
/// inclusion–exclusion on the orbit containing the first labeled part.
pub fn hurwitz_character(spec: &HurwitzSpec) -> Result<Rational> {
    spec.validate()?;
    let d = spec.degree();
    if d > CHARACTER_MAX_DEGREE {
        return Err(Error::CapExceeded(format!(
            "character method degree {d} > {CHARACTER_MAX_DEGREE}"
        )));
    }
    let r = spec.raw_branch_count();
    if r < 0 {
        return Ok(Rational::zero());
    }
    let r = r as u32;
    let mut labels: Vec<(u32, bool)> = spec.alpha.iter().map(|&p| (p, false)).collect();
    if let Some(beta) = &spec.beta {
        labels.extend(beta.iter().map(|&p| (p, true)));
    }
    let full = (1u32 << labels.len()) - 1;
    let mut split = OrbitSplitting {
        labels,
        double: spec.beta.is_some(),
        disconnected: HashMap::new(),
        connected: HashMap::new(),
    };
    Ok(if spec.connected {
        split.connected(full, r)
    } else {
        split.disconnected(full, r)
    })
}

struct OrbitSplitting {
    /// Part size and whether it belongs to `β`.
    labels: Vec<(u32, bool)>,
    double: bool,
    disconnected: HashMap<(u32, u32), Rational>,
    connected: HashMap<(u32, u32), Rational>,
}

impl OrbitSplitting {
    fn sides(&self, mask: u32) -> (Vec<u32>, Vec<u32>) {
        let mut alpha = Vec::new();
        let mut beta = Vec::new();
        for (i, &(p, is_beta)) in self.labels.iter().enumerate() {
            if mask & (1 << i) != 0 {
                if is_beta {
                    beta.push(p);
                } else {
                    alpha.push(p);
                }
            }
        }
        (alpha, beta)
    }

    /// A set of labels that can form one orbit on its own.
    fn admissible(&self, mask: u32) -> bool {
        if mask == 0 {
            return false;
        }
        if !self.double {
            return true;
        }
        let (a, b) = self.sides(mask);
        !a.is_empty() && !b.is_empty() && a.iter().sum::<u32>() == b.iter().sum::<u32>()
    }

    fn disconnected(&mut self, mask: u32, r: u32) -> Rational {
        if let Some(v) = self.disconnected.get(&(mask, r)) {
            return v.clone();
        }
        let (alpha, beta) = self.sides(mask);
        let beta = self.double.then_some(beta);
        let value = frobenius_count(&alpha, beta.as_deref(), r);
        self.disconnected.insert((mask, r), value.clone());
        value
    }

    fn connected(&mut self, mask: u32, r: u32) -> Rational {
        if let Some(v) = self.connected.get(&(mask, r)) {
            return v.clone();
        }
        let mut value = self.disconnected(mask, r);
        let lowest = mask & mask.wrapping_neg();
        let others = mask & !lowest;
        // orbit containing the lowest label: lowest ∪ sub, sub ⊊ others
        let mut sub = others;
        loop {
            sub = sub.wrapping_sub(1) & others;
            let block = lowest | sub;
            let rest = mask & !block;
            if rest != 0 && self.admissible(block) && self.admissible(rest) {
                for r1 in 0..=r {
                    let c = self.connected(block, r1);
                    if c.is_zero() {
                        continue;
                    }
                    let rest_value = self.disconnected(rest, r - r1);
                    value -= Rational::from_integer(binomial(r, r1)) * c * rest_value;
                }
            }
            if sub == 0 {
                break;
            }
        }
        self.connected.insert((mask, r), value.clone());
        value
    }
}

/// Disconnected labeled count `Π m_k! [Π m_k!(β)] · N / d!` where
/// `N = (Π|C_i| / d!) Σ_λ Π χ^λ(C_i) / (dim λ)^{k-2}` counts factorizations
/// of the identity through the `k` classes.
fn frobenius_count(alpha: &[u32], beta: Option<&[u32]>, r: u32) -> Rational {
    let alpha = PartitionShape::new(alpha);
    let beta = beta.map(PartitionShape::new);
    let d = alpha.size();
    if d == 0 {
        return if r == 0 {
            Rational::one()
        } else {
            Rational::zero()
        };
    }
    if d == 1 && r > 0 {
        return Rational::zero();
    }
    let identity = PartitionShape::new(&vec![1; d as usize]);
    let mut transposition_parts = vec![1; d as usize - 1];
    if d >= 2 {
        transposition_parts[0] = 2;
    }
    let transposition = PartitionShape::new(&transposition_parts);
    let classes = r as i64 + 1 + beta.is_some() as i64;

    let mut sum = Rational::zero();
    for parts in partitions(d) {
        let lambda = PartitionShape::new(&parts);
        let dim = Rational::from_integer(BigInt::from(mn_rec(&lambda, identity.parts())));
        let mut term = Rational::from_integer(BigInt::from(mn_rec(&lambda, alpha.parts())));
        if let Some(b) = &beta {
            term *= Rational::from_integer(BigInt::from(mn_rec(&lambda, b.parts())));
        }
        if r > 0 {
            let chi_t =
                Rational::from_integer(BigInt::from(mn_rec(&lambda, transposition.parts())));
            term *= num_traits::pow(chi_t, r as usize);
        }
        let power = classes - 2;
        if power >= 0 {
            term /= num_traits::pow(dim, power as usize);
        } else {
            term *= dim;
        }
        sum += term;
    }

    let d_fact = Rational::from_integer(factorial(d));
    let mut sizes = Rational::from_integer(alpha.class_size() * alpha.labelings());
    sizes *= num_traits::pow(
        Rational::from_integer(transposition.class_size()),
        r as usize,
    );
    if let Some(b) = &beta {
        sizes *= Rational::from_integer(b.class_size() * b.labelings());
    }
    sizes * sum / d_fact.clone() / d_fact
}

/// Cut-and-join recursion for single Hurwitz numbers.
///
/// Counts `c_r(η)` = number of transposition tuples with `η τ_1 ⋯ τ_r = 1`
/// (transitive when connected) for a fixed `η` of the given cycle type;
/// then `H = c_r(α) / Π α_i`.
pub fn cut_and_join(spec: &HurwitzSpec) -> Result<Rational> {
    spec.validate()?;
    if spec.beta.is_some() {
        return Err(Error::SingleHurwitzOnly);
    }
    let d = spec.degree();
    if d > CHARACTER_MAX_DEGREE {
        return Err(Error::CapExceeded(format!(
            "cut-and-join degree {d} > {CHARACTER_MAX_DEGREE}"
        )));
    }
    let r = spec.raw_branch_count();
    if r < 0 {
        return Ok(Rational::zero());
    }
    let mut rec = CutJoin::default();
    let shape = PartitionShape::new(&spec.alpha);
    let count = if spec.connected {
        rec.connected(shape.parts(), r as u32)
    } else {
        rec.disconnected(shape.parts(), r as u32)
    };
    let prod: BigInt = spec.alpha.iter().map(|&p| BigInt::from(p)).product();
    Ok(Rational::new(count, prod))
}

#[derive(Default)]
struct CutJoin {
    disconnected: HashMap<(Vec<u32>, u32), BigInt>,
    connected: HashMap<(Vec<u32>, u32), BigInt>,
}

/// Transpositions cutting a `p`-cycle into `(k, p - k)`, for `k <= p - k`.
fn cut_weights(p: u32) -> impl Iterator<Item = (u32, BigInt)> {
    (1..=p / 2).map(move |k| {
        let w = if 2 * k == p { p / 2 } else { p };
        (k, BigInt::from(w))
    })
}

fn sorted_desc(mut v: Vec<u32>) -> Vec<u32> {
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

impl CutJoin {
    fn disconnected(&mut self, mu: &[u32], r: u32) -> BigInt {
        if r == 0 {
            return BigInt::from(mu.iter().all(|&p| p == 1) as u8);
        }
        let key = (mu.to_vec(), r);
        if let Some(v) = self.disconnected.get(&key) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for i in 0..mu.len() {
            for j in i + 1..mu.len() {
                let mut joined: Vec<u32> = remove_indices(mu, &[i, j]);
                joined.push(mu[i] + mu[j]);
                total +=
                    BigInt::from(mu[i] * mu[j]) * self.disconnected(&sorted_desc(joined), r - 1);
            }
            for (k, w) in cut_weights(mu[i]) {
                let mut cut = remove_indices(mu, &[i]);
                cut.extend([k, mu[i] - k]);
                total += w * self.disconnected(&sorted_desc(cut), r - 1);
            }
        }
        self.disconnected.insert(key, total.clone());
        total
    }

    fn connected(&mut self, mu: &[u32], r: u32) -> BigInt {
        if r == 0 {
            return BigInt::from((mu == [1]) as u8);
        }
        let key = (mu.to_vec(), r);
        if let Some(v) = self.connected.get(&key) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for i in 0..mu.len() {
            for j in i + 1..mu.len() {
                let mut joined = remove_indices(mu, &[i, j]);
                joined.push(mu[i] + mu[j]);
                total += BigInt::from(mu[i] * mu[j]) * self.connected(&sorted_desc(joined), r - 1);
            }
            let others = remove_indices(mu, &[i]);
            for (k, w) in cut_weights(mu[i]) {
                let mut cut = others.clone();
                cut.extend([k, mu[i] - k]);
                let mut ways = self.connected(&sorted_desc(cut), r - 1);
                // the cut leaves two orbits: the k-cycle with the parts in A,
                // the (p-k)-cycle with the rest
                for mask in 0u32..(1 << others.len()) {
                    let mut left = vec![k];
                    let mut right = vec![mu[i] - k];
                    for (t, &p) in others.iter().enumerate() {
                        if mask & (1 << t) != 0 {
                            left.push(p);
                        } else {
                            right.push(p);
                        }
                    }
                    let (left, right) = (sorted_desc(left), sorted_desc(right));
                    for s in 0..r {
                        let a = self.connected(&left, s);
                        if a.is_zero() {
                            continue;
                        }
                        let b = self.connected(&right, r - 1 - s);
                        ways += binomial(r - 1, s) * a * b;
                    }
                }
                total += w * ways;
            }
        }
        self.connected.insert(key, total.clone());
        total
    }
}

fn remove_indices(mu: &[u32], idx: &[usize]) -> Vec<u32> {
    mu.iter()
        .enumerate()
        .filter(|(i, _)| !idx.contains(i))
        .map(|(_, &p)| p)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn shape(p: &[u32]) -> PartitionShape {
        PartitionShape::new(p)
    }

    #[test]
    fn branch_counts() {
        assert_eq!(
            transposition_count(&HurwitzSpec::single(0, &[1, 1, 1])).unwrap(),
            4
        );
        assert_eq!(
            transposition_count(&HurwitzSpec::single(1, &[2])).unwrap(),
            3
        );
        assert_eq!(
            transposition_count(&HurwitzSpec::double(0, &[2], &[1, 1])).unwrap(),
            1
        );
        assert_eq!(
            transposition_count(&HurwitzSpec::single(-3, &[1]).disconnected()),
            Err(Error::NegativeBranchCount(-6))
        );
    }

    #[test]
    fn rejects_malformed_specs() {
        assert!(transposition_count(&HurwitzSpec::single(0, &[2, 0])).is_err());
        assert!(hurwitz_character(&HurwitzSpec::double(0, &[2], &[1])).is_err());
        assert!(hurwitz_character(&HurwitzSpec::single(0, &[])).is_err());
    }

    #[test]
    fn character_examples() {
        assert_eq!(mn_character(&shape(&[4]), &shape(&[2, 1, 1])).unwrap(), 1);
        assert_eq!(mn_character(&shape(&[1, 1]), &shape(&[2])).unwrap(), -1);
        assert_eq!(mn_character(&shape(&[2, 1]), &shape(&[3])).unwrap(), -1);
        assert_eq!(
            mn_character(&shape(&[2, 1]), &shape(&[1, 1, 1])).unwrap(),
            2
        );
        assert_eq!(mn_character(&shape(&[2, 2]), &shape(&[2, 2])).unwrap(), 2);
        assert_eq!(
            mn_character(&shape(&[3, 1]), &shape(&[2, 1, 1])).unwrap(),
            1
        );
        assert!(mn_character(&shape(&[2]), &shape(&[1])).is_err());
    }

    #[test]
    fn character_column_orthogonality() {
        // Σ_λ χ^λ(μ)² = z_μ
        for d in 1..=7 {
            for mu in partitions(d) {
                let mu = shape(&mu);
                let sum: i64 = partitions(d)
                    .iter()
                    .map(|l| mn_character(&shape(l), &mu).unwrap().pow(2))
                    .sum();
                let z = factorial(d) / mu.class_size();
                assert_eq!(BigInt::from(sum), z, "μ = {mu:?}");
            }
        }
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(
            hurwitz_bruteforce(&HurwitzSpec::single(0, &[1, 1, 1])).unwrap(),
            int(24)
        );
        assert_eq!(
            hurwitz_bruteforce(&HurwitzSpec::single(1, &[2])).unwrap(),
            frac(1, 2)
        );
        assert_eq!(
            hurwitz_bruteforce(&HurwitzSpec::single(1, &[1])).unwrap(),
            int(0)
        );
    }

    #[test]
    fn bruteforce_caps() {
        assert!(matches!(
            hurwitz_bruteforce(&HurwitzSpec::single(0, &[5])),
            Err(Error::CapExceeded(_))
        ));
        assert!(matches!(
            hurwitz_bruteforce(&HurwitzSpec::single(3, &[1, 1, 1])),
            Err(Error::CapExceeded(_))
        ));
    }

    #[test]
    fn character_method_examples() {
        assert_eq!(
            hurwitz_character(&HurwitzSpec::single(0, &[1, 1, 1])).unwrap(),
            int(24)
        );
        assert_eq!(
            hurwitz_character(&HurwitzSpec::single(1, &[1, 1])).unwrap(),
            int(1)
        );
        assert_eq!(
            hurwitz_character(&HurwitzSpec::double(0, &[2], &[1, 1])).unwrap(),
            int(1)
        );
    }

    #[test]
    fn cut_and_join_examples() {
        assert_eq!(cut_and_join(&HurwitzSpec::single(0, &[1])).unwrap(), int(1));
        assert_eq!(
            cut_and_join(&HurwitzSpec::single(0, &[1, 1, 1])).unwrap(),
            int(24)
        );
        assert_eq!(
            cut_and_join(&HurwitzSpec::single(1, &[2])).unwrap(),
            frac(1, 2)
        );
        assert_eq!(
            cut_and_join(&HurwitzSpec::double(0, &[2], &[1, 1])),
            Err(Error::SingleHurwitzOnly)
        );
    }

    #[test]
    fn negative_branch_count_is_zero_everywhere() {
        let spec = HurwitzSpec::single(-2, &[1, 1]).disconnected();
        assert_eq!(hurwitz_bruteforce(&spec).unwrap(), int(0));
        assert_eq!(hurwitz_character(&spec).unwrap(), int(0));
        assert_eq!(cut_and_join(&spec).unwrap(), int(0));
    }

    #[test]
    fn disconnected_trivial_cover() {
        // two sheets, no branching: η = id, 2 labelings, / 2!
        let spec = HurwitzSpec::single(-1, &[1, 1]).disconnected();
        assert_eq!(hurwitz_bruteforce(&spec).unwrap(), int(1));
        assert_eq!(hurwitz_character(&spec).unwrap(), int(1));
        assert_eq!(cut_and_join(&spec).unwrap(), int(1));
        assert_eq!(
            hurwitz_character(&HurwitzSpec::single(-1, &[1, 1])).unwrap(),
            int(0)
        );
    }

    #[test]
    fn class_sizes() {
        assert_eq!(shape(&[2, 1, 1]).class_size(), BigInt::from(6));
        assert_eq!(shape(&[2, 2]).class_size(), BigInt::from(3));
        assert_eq!(shape(&[1, 1, 1]).labelings(), BigInt::from(6));
    }
}
