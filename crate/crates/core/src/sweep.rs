//! Data-parallel sweep helpers. With the `parallel` feature (default) the
//! sweeps run on rayon; without it they fall back to the sequential
//! versions below. Results are identical either way: failure witnesses are
//! always the first item in input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Index of the first item failing `pred`, or None if all pass.
pub fn first_failure<T, F>(items: &[T], pred: F) -> Option<usize>
where
    T: Sync,
    F: Fn(&T) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().position_first(|item| !pred(item))
    }
    #[cfg(not(feature = "parallel"))]
    {
        first_failure_seq(items, pred)
    }
}

/// Sequential reference implementation, kept callable for benchmarks.
pub fn first_failure_seq<T, F>(items: &[T], pred: F) -> Option<usize>
where
    F: Fn(&T) -> bool,
{
    items.iter().position(|item| !pred(item))
}

/// Map over items, preserving order.
pub fn map_items<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_items_seq(items, f)
    }
}

pub fn map_items_seq<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_is_first_in_input_order() {
        let items: Vec<u32> = (0..10_000).collect();
        // many failures; must still report the earliest
        let par = first_failure(&items, |&x| x % 97 != 41);
        let seq = first_failure_seq(&items, |&x| x % 97 != 41);
        assert_eq!(par, Some(41));
        assert_eq!(par, seq);
    }

    #[test]
    fn all_passing_returns_none() {
        let items = vec![1, 2, 3];
        assert_eq!(first_failure(&items, |_| true), None);
    }
}
