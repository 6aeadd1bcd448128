use num_bigint::BigUint;
use num_traits::One;

/// `C(n, k)` as an exact integer; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

/// Number of distinct orderings of a multiset with the given multiplicities.
pub fn multinomial(mults: &[usize]) -> BigUint {
    let mut total = 0;
    let mut out = BigUint::one();
    for &m in mults {
        total += m;
        out *= binomial(total, m);
    }
    out
}

/// Integer partitions of `n` with parts in descending order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Multiplicities of equal parts in a sorted partition.
pub fn part_multiplicities(parts: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::new();
    for (i, p) in parts.iter().enumerate() {
        if i > 0 && parts[i - 1] == *p {
            *out.last_mut().unwrap() += 1;
        } else {
            out.push(1);
        }
    }
    out
}
