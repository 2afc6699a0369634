//! Integer partitions and compositions.

/// All partitions of `d`, parts weakly decreasing, in reverse
/// lexicographic order (`[d]` first).
pub fn partitions(d: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(d, d, &mut Vec::new(), &mut out);
    out
}

/// All compositions (ordered partitions) of `d`.
pub fn compositions(d: u32) -> Vec<Vec<u32>> {
    if d == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=d {
        for mut tail in compositions(d - first) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

/// All vectors of `n` nonnegative integers summing to `total`.
pub fn weak_compositions(total: u32, n: usize) -> Vec<Vec<u32>> {
    fn go(rest: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            cur.push(rest);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for a in (0..=rest).rev() {
            cur.push(a);
            go(rest - a, slots - 1, cur, out);
            cur.pop();
        }
    }
    if n == 0 {
        return if total == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    go(total, n, &mut Vec::new(), &mut out);
    out
}

/// Multiplicities `m_k` of each part size, as `(k, m_k)` for increasing `k`.
pub fn multiplicities(parts: &[u32]) -> Vec<(u32, u32)> {
    let mut sorted = parts.to_vec();
    sorted.sort_unstable();
    let mut out: Vec<(u32, u32)> = Vec::new();
    for p in sorted {
        match out.last_mut() {
            Some((k, m)) if *k == p => *m += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}
