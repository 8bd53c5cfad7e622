//! Permutations, subsets, multisets and partitions.

use alloc::vec;
use alloc::vec::Vec;

/// All permutations of `0..k` in lexicographic order, with their signs.
pub fn permutations(k: usize) -> Vec<(Vec<usize>, i32)> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..k).collect();
    loop {
        out.push((p.clone(), perm_sign(&p)));
        // next lexicographic permutation
        let Some(i) = (1..k).rev().find(|&i| p[i - 1] < p[i]) else { break };
        let j = (i..k).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
    out
}

/// Sign of a permutation of `0..k`.
pub fn perm_sign(p: &[usize]) -> i32 {
    let mut seen = vec![false; p.len()];
    let mut sign = 1;
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut c = s;
        while !seen[c] {
            seen[c] = true;
            c = p[c];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// Sign of the permutation sorting `seq` ascending; 0 if entries repeat.
pub fn sort_sign<T: Ord>(seq: &[T]) -> i32 {
    let mut sign = 1;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            match seq[i].cmp(&seq[j]) {
                core::cmp::Ordering::Greater => sign = -sign,
                core::cmp::Ordering::Equal => return 0,
                core::cmp::Ordering::Less => {}
            }
        }
    }
    sign
}

/// Strictly increasing `k`-subsets of `0..n`.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        out.push(c.clone());
        let Some(i) = (0..k).rev().find(|&i| c[i] < n - k + i) else { break };
        c[i] += 1;
        for j in i + 1..k {
            c[j] = c[j - 1] + 1;
        }
    }
    out
}

/// Weakly increasing sequences of length `k` over `0..n`.
pub fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if n == 0 {
        if k == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut c = vec![0usize; k];
    loop {
        out.push(c.clone());
        let Some(i) = (0..k).rev().find(|&i| c[i] < n - 1) else { break };
        c[i] += 1;
        for j in i + 1..k {
            c[j] = c[i];
        }
    }
    out
}

/// All sequences of length `k` over `0..n`, lexicographically.
pub fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if n == 0 && k > 0 {
        return out;
    }
    let mut c = vec![0usize; k];
    loop {
        out.push(c.clone());
        let Some(i) = (0..k).rev().find(|&i| c[i] < n - 1) else { break };
        c[i] += 1;
        for x in c.iter_mut().skip(i + 1) {
            *x = 0;
        }
    }
    out
}

/// Product of factorials of the multiplicities in a sorted sequence.
pub fn multiplicity_factorials<T: PartialEq>(seq: &[T]) -> u64 {
    let mut acc = 1u64;
    let mut run = 0u64;
    for i in 0..seq.len() {
        if i > 0 && seq[i] == seq[i - 1] {
            run += 1;
        } else {
            run = 1;
        }
        acc *= run;
    }
    acc
}

/// Partitions of `size` with at most `max_len` parts, each at most `max_part`,
/// in reverse lexicographic order.
pub fn partitions(size: usize, max_len: usize, max_part: usize) -> Vec<Vec<usize>> {
    fn rec(rem: usize, max_len: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        if cur.len() == max_len {
            return;
        }
        for p in (1..=cap.min(rem)).rev() {
            cur.push(p);
            rec(rem - p, max_len, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(size, max_len, max_part, &mut Vec::new(), &mut out);
    out
}
