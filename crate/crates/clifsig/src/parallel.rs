//! Thin dispatch layer between rayon and plain sequential loops.
//!
//! Everything in the crate funnels data-parallel work through these helpers,
//! so building with `--no-default-features` yields a fully sequential crate
//! with identical results. With the `parallel` feature on, running inside a
//! one-thread `rayon` pool (`ThreadPoolBuilder::new().num_threads(1)`) gives
//! a sequential baseline for benchmarks without a separate build.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Splitting floor: keep at least this many scalar elements in one task so
/// stealing overhead cannot swamp the tiny per-cell kernels.
#[cfg(feature = "parallel")]
const MIN_TASK_ELEMENTS: usize = 16 * 1024;

#[cfg(feature = "parallel")]
fn min_chunks(chunk: usize) -> usize {
    (MIN_TASK_ELEMENTS / chunk).max(1)
}

/// Apply `f` to equal-size mutable chunks of `data`, passing the chunk index.
pub fn for_each_chunk_mut<T, F>(data: &mut [T], chunk: usize, f: F)
where
    T: Send,
    F: Fn(usize, &mut [T]) + Sync + Send,
{
    debug_assert!(chunk > 0);
    #[cfg(feature = "parallel")]
    {
        data.par_chunks_mut(chunk)
            .enumerate()
            .with_min_len(min_chunks(chunk))
            .for_each(|(i, c)| f(i, c));
    }
    #[cfg(not(feature = "parallel"))]
    {
        data.chunks_mut(chunk).enumerate().for_each(|(i, c)| f(i, c));
    }
}

/// Apply `f` to each mutable chunk with a per-worker scratch value.
pub fn for_each_chunk_mut_with<T, S, F>(
    data: &mut [T],
    chunk: usize,
    init: impl Fn() -> S + Sync + Send,
    f: F,
) where
    T: Send,
    F: Fn(&mut S, usize, &mut [T]) + Sync + Send,
{
    debug_assert!(chunk > 0);
    #[cfg(feature = "parallel")]
    {
        data.par_chunks_mut(chunk)
            .enumerate()
            .with_min_len(min_chunks(chunk))
            .for_each_init(&init, |s, (i, c)| f(s, i, c));
    }
    #[cfg(not(feature = "parallel"))]
    {
        let mut s = init();
        data.chunks_mut(chunk)
            .enumerate()
            .for_each(|(i, c)| f(&mut s, i, c));
    }
}

/// Map over a small slice of independent work items (the four transform
/// planes); each item is a fat task.
pub fn map_slice<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Map each index in `0..n` to an `f64` and collect.
pub fn map_index(n: usize, f: impl Fn(usize) -> f64 + Sync + Send) -> Vec<f64> {
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// Fold `0..n` with a per-index f64 contribution, reducing by `max`.
pub fn max_over(n: usize, f: impl Fn(usize) -> f64 + Sync + Send) -> f64 {
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).reduce(|| f64::NEG_INFINITY, f64::max)
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).fold(f64::NEG_INFINITY, f64::max)
    }
}
