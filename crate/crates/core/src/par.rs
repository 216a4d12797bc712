//! Deterministic data parallelism with a sequential fallback.
//!
//! With the `parallel` feature and `jobs != 1`, work runs on a rayon pool of
//! `jobs` threads (`0` means rayon's default). Results never depend on the
//! schedule: searches return the least index that succeeds, maps preserve
//! order.

/// Least `i < n` with `f(i) = Some(r)`.
pub fn find_first<R: Send>(
    n: u64,
    jobs: usize,
    f: impl Fn(u64) -> Option<R> + Sync,
) -> Option<(u64, R)> {
    #[cfg(feature = "parallel")]
    if jobs != 1 {
        use rayon::prelude::*;
        return with_pool(jobs, || {
            (0..n)
                .into_par_iter()
                .find_map_first(|i| f(i).map(|r| (i, r)))
        });
    }
    let _ = jobs;
    (0..n).find_map(|i| f(i).map(|r| (i, r)))
}

/// `f` applied to every index in `0..n`, in index order.
pub fn map<R: Send>(n: u64, jobs: usize, f: impl Fn(u64) -> R + Sync) -> Vec<R> {
    #[cfg(feature = "parallel")]
    if jobs != 1 {
        use rayon::prelude::*;
        return with_pool(jobs, || (0..n).into_par_iter().map(&f).collect());
    }
    let _ = jobs;
    (0..n).map(f).collect()
}

#[cfg(feature = "parallel")]
fn with_pool<R: Send>(jobs: usize, op: impl FnOnce() -> R + Send) -> R {
    if jobs == 0 {
        return op();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(op),
        Err(_) => op(),
    }
}

/// True when this build can run work in parallel.
pub fn parallel_enabled() -> bool {
    cfg!(feature = "parallel")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_success_is_least_index() {
        for jobs in [0, 1, 2] {
            let hit = find_first(1000, jobs, |i| (i % 7 == 3 && i > 100).then_some(i * 2));
            assert_eq!(hit, Some((101, 202)));
            assert_eq!(find_first(10, jobs, |_| None::<()>), None);
        }
    }

    #[test]
    fn map_preserves_order() {
        assert_eq!(map(5, 0, |i| i * i), vec![0, 1, 4, 9, 16]);
        assert_eq!(map(5, 1, |i| i * i), vec![0, 1, 4, 9, 16]);
    }
}
