//! Data-parallel helpers. With the `parallel` feature these run on the
//! ambient rayon pool; without it they fall back to plain iterators with the
//! same results.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How a batch computation is executed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Uses rayon when the `parallel` feature is enabled, sequential otherwise.
    #[default]
    Parallel,
}

impl Execution {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// First `Some` in slice order, whatever order workers finish in.
pub fn find_map_first<T, R, F>(items: &[T], f: F) -> Option<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().find_map_first(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().find_map(f)
    }
}

/// Maps every index in `0..len` and folds the results with an associative,
/// commutative `merge`.
pub fn map_reduce<R, M, G>(exec: Execution, len: u64, identity: fn() -> R, map: M, merge: G) -> R
where
    R: Send,
    M: Fn(&mut R, u64) + Sync + Send,
    G: Fn(R, R) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (0..len)
            .into_par_iter()
            .fold(identity, |mut acc, i| {
                map(&mut acc, i);
                acc
            })
            .reduce(identity, merge);
    }
    let _ = (exec, &merge);
    let mut acc = identity();
    for i in 0..len {
        map(&mut acc, i);
    }
    acc
}

/// Like [`map_reduce`] over a slice.
pub fn map_reduce_slice<T, R, M, G>(
    exec: Execution,
    items: &[T],
    identity: fn() -> R,
    map: M,
    merge: G,
) -> R
where
    T: Sync,
    R: Send,
    M: Fn(&mut R, &T) + Sync + Send,
    G: Fn(R, R) -> R + Sync + Send,
{
    map_reduce(exec, items.len() as u64, identity, |acc, i| map(acc, &items[i as usize]), merge)
}
