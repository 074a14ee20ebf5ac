//! Shared workloads for the criterion benches.

use symop_core::{partitions_of, Partition, SkewShape};

/// Every pair `(λ, μ)` with `|λ| = a`, `|μ| = b`.
pub fn product_pairs(a: usize, b: usize) -> Vec<(Partition, Partition)> {
    let right = partitions_of(b);
    partitions_of(a)
        .into_iter()
        .flat_map(|l| right.iter().map(move |m| (l.clone(), m.clone())))
        .collect()
}

/// Skew shapes `outer/inner` with `|outer| = n` and `|inner| = k`.
pub fn skew_shapes(n: usize, k: usize) -> Vec<SkewShape> {
    let inners = partitions_of(k);
    partitions_of(n)
        .into_iter()
        .flat_map(|o| {
            inners
                .iter()
                .filter(|i| o.contains(i))
                .map(|i| SkewShape::new(o.clone(), i.clone()).expect("contained"))
                .collect::<Vec<_>>()
        })
        .collect()
}
