//! Data-parallel helpers. With the `parallel` feature the loops run on the
//! rayon pool; without it (or after `set_parallel(false)`) they run on the
//! calling thread. Every helper returns results in input order so callers
//! see identical output either way.

use std::sync::atomic::{AtomicBool, Ordering};

static ENABLED: AtomicBool = AtomicBool::new(true);

/// Runtime switch; has no effect when the crate is built without `parallel`.
pub fn set_parallel(on: bool) {
    ENABLED.store(on, Ordering::Relaxed);
}

pub fn is_parallel() -> bool {
    cfg!(feature = "parallel") && ENABLED.load(Ordering::Relaxed)
}

/// `range.map(f).collect()`, order preserving.
pub fn map_range<T, F>(n: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if is_parallel() {
        use rayon::prelude::*;
        return (0..n).into_par_iter().map(f).collect();
    }
    (0..n).map(f).collect()
}

/// `items.iter().map(f).collect()`, order preserving.
pub fn map<I, T, F>(items: &[I], f: F) -> Vec<T>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    items.iter().map(f).collect()
}

/// `range.filter_map(f).collect()`, order preserving.
pub fn filter_map_range<T, F>(n: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if is_parallel() {
        use rayon::prelude::*;
        return (0..n).into_par_iter().filter_map(f).collect();
    }
    (0..n).filter_map(f).collect()
}

/// The first index (in range order) for which `f` yields `Some`.
pub fn find_first_range<T, F>(n: u64, f: F) -> Option<T>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if is_parallel() {
        use rayon::prelude::*;
        return (0..n).into_par_iter().filter_map(f).find_first(|_| true);
    }
    (0..n).find_map(f)
}

/// The first item (in slice order) for which `f` yields `Some`.
pub fn find_first<I, T, F>(items: &[I], f: F) -> Option<T>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().filter_map(f).find_first(|_| true);
    }
    items.iter().find_map(f)
}

/// True when `f` holds for every index.
pub fn all_range<F>(n: u64, f: F) -> bool
where
    F: Fn(u64) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if is_parallel() {
        use rayon::prelude::*;
        return (0..n).into_par_iter().all(f);
    }
    (0..n).all(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn helpers_agree_with_sequential_iterators() {
        let sq = map_range(50, |i| i * i);
        assert_eq!(sq, (0..50).map(|i| i * i).collect::<Vec<_>>());
        let odd = filter_map_range(50, |i| (i % 2 == 1).then_some(i));
        assert_eq!(odd.len(), 25);
        assert_eq!(
            find_first_range(1000, |i| (i > 10 && i % 7 == 0).then_some(i)),
            Some(14)
        );
        assert!(all_range(100, |i| i < 100));
        assert_eq!(
            find_first(&[3, 5, 8, 10], |&x| (x % 2 == 0).then_some(x)),
            Some(8)
        );
    }
}
