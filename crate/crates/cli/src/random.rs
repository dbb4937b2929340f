//! Uniform random partitions for the benchmark harness.

use num_bigint::BigUint;
use rand::RngCore;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ferrotile_core::Partition;

/// Draws one partition of `n`, exactly uniform over all partitions of `n`.
///
/// The sampler precomputes the count table `ways[m][k]` (partitions of `m`
/// with parts at most `k`) and then picks each part largest-first with
/// probability proportional to the number of completions. Deterministic for
/// a fixed `(n, seed)` pair.
pub fn random_partition(n: usize, seed: u64) -> Partition {
    assert!(n >= 1, "n must be positive");
    let ways = count_table(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut parts = Vec::new();
    let mut remaining = n;
    let mut cap = n;
    while remaining > 0 {
        let total = &ways[remaining][cap.min(remaining)];
        let mut draw = uniform_below(&mut rng, total);
        let mut chosen = 0;
        for part in (1..=cap.min(remaining)).rev() {
            let completions = &ways[remaining - part][part];
            if draw < *completions {
                chosen = part;
                break;
            }
            draw -= completions;
        }
        debug_assert!(chosen >= 1);
        parts.push(chosen);
        remaining -= chosen;
        cap = chosen;
    }
    Partition::new(parts).expect("sampled parts are positive and non-increasing")
}

/// `table[m][k]` = number of partitions of `m` into parts of size at most `k`.
fn count_table(n: usize) -> Vec<Vec<BigUint>> {
    let mut table = vec![vec![BigUint::ZERO; n + 1]; n + 1];
    for k in 0..=n {
        table[0][k] = BigUint::from(1u32);
    }
    for m in 1..=n {
        for k in 1..=n {
            let mut ways = table[m][k - 1].clone();
            if k <= m {
                ways += &table[m - k][k];
            }
            table[m][k] = ways;
        }
    }
    table
}

/// Uniform value in `[0, bound)` by masked rejection over the RNG stream.
fn uniform_below(rng: &mut ChaCha8Rng, bound: &BigUint) -> BigUint {
    debug_assert!(*bound > BigUint::ZERO);
    let bits = bound.bits();
    let bytes = bits.div_ceil(8) as usize;
    let excess = (bytes as u64) * 8 - bits;
    loop {
        let mut buf = vec![0u8; bytes];
        rng.fill_bytes(&mut buf);
        // Mask the surplus high bits so the candidate is a uniform
        // `bits`-bit value; then at most half the candidates get rejected.
        if excess > 0 {
            buf[bytes - 1] &= 0xff >> excess;
        }
        let candidate = BigUint::from_bytes_le(&buf);
        if candidate < *bound {
            return candidate;
        }
    }
}

#[cfg(test)]
mod tests {
    use std::collections::HashMap;

    use super::*;

    #[test]
    fn the_only_partition_of_one() {
        for seed in 0..20 {
            assert_eq!(
                random_partition(1, seed),
                Partition::new(vec![1]).unwrap()
            );
        }
    }

    #[test]
    fn same_seed_means_same_partition() {
        for n in [5usize, 17, 40] {
            assert_eq!(random_partition(n, 99), random_partition(n, 99));
        }
    }

    #[test]
    fn sampled_partitions_are_valid_and_sum_to_n() {
        for n in [3usize, 11, 30, 64] {
            for seed in 0..25 {
                let p = random_partition(n, seed);
                assert_eq!(p.total(), n);
            }
        }
    }

    #[test]
    fn count_table_matches_known_partition_numbers() {
        let table = count_table(10);
        let p: Vec<u32> = (0..=10)
            .map(|m| table[m][m.max(1)].to_string().parse().unwrap())
            .collect();
        assert_eq!(p, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn draws_of_five_are_close_to_uniform() {
        let mut seen: HashMap<String, usize> = HashMap::new();
        let draws = 7000usize;
        for seed in 0..draws {
            let p = random_partition(5, seed as u64);
            *seen.entry(p.to_string()).or_default() += 1;
        }
        assert_eq!(seen.len(), 7, "all partitions of 5 should appear");
        for (partition, count) in &seen {
            let freq = *count as f64 / draws as f64;
            assert!(
                (freq - 1.0 / 7.0).abs() < 0.02,
                "partition {partition} has frequency {freq:.4}"
            );
        }
    }
}
