//! Deterministic parallel reduction over per-source vectors.
//!
//! Sources are processed in fixed-size blocks on the ambient rayon pool.
//! Within a block the per-source vectors are collected in source order and
//! then added into the accumulator sequentially, so the floating-point sum
//! is the same for every worker count.

use rayon::prelude::*;

const BLOCK: usize = 32;

/// Returns `sum_{x in items} f(x)` (componentwise, length `n`), adding the
/// terms in the order of `items`.
pub fn ordered_sum<T, F>(items: &[T], n: usize, f: F) -> Vec<f64>
where
    T: Sync,
    F: Fn(&T) -> Vec<f64> + Sync,
{
    let mut total = vec![0.0; n];
    for block in items.chunks(BLOCK) {
        let parts: Vec<Vec<f64>> = block.par_iter().map(&f).collect();
        for part in parts {
            debug_assert_eq!(part.len(), n);
            for (t, p) in total.iter_mut().zip(part) {
                *t += p;
            }
        }
    }
    total
}

/// Runs `f` on a dedicated pool with `threads` workers (0 means the rayon
/// default).
pub fn with_threads<R: Send>(threads: usize, f: impl FnOnce() -> R + Send) -> R {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("failed to build thread pool");
    pool.install(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sum_is_thread_count_independent() {
        let items: Vec<u32> = (0..200).collect();
        let f = |&i: &u32| vec![1.0 / (i as f64 + 1.0), (i as f64).sqrt() * 1e-3, 0.1];
        let one = with_threads(1, || ordered_sum(&items, 3, f));
        let four = with_threads(4, || ordered_sum(&items, 3, f));
        assert_eq!(one, four);
        let serial = items.iter().fold(vec![0.0; 3], |mut acc, i| {
            for (a, x) in acc.iter_mut().zip(f(i)) {
                *a += x;
            }
            acc
        });
        assert_eq!(one, serial);
    }
}
