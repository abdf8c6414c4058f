//! Data-parallel helpers.
//!
//! With the `parallel` feature (the default) these dispatch to rayon; without
//! it they run as plain sequential iterators. Output order always matches
//! input order, so results never depend on scheduling.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `items`, preserving order.
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    return items.par_iter().map(f).collect();
    #[cfg(not(feature = "parallel"))]
    return items.iter().map(f).collect();
}

/// Returns the first item (in input order) for which `f` yields `Some`.
pub fn find_first<T, R, F>(items: &[T], f: F) -> Option<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    return items.par_iter().map(f).find_first(|r| r.is_some()).flatten();
    #[cfg(not(feature = "parallel"))]
    return items.iter().find_map(f);
}

/// True when `f` holds for every item.
pub fn all<T, F>(items: &[T], f: F) -> bool
where
    T: Sync,
    F: Fn(&T) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    return items.par_iter().all(f);
    #[cfg(not(feature = "parallel"))]
    return items.iter().all(f);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let v: Vec<u32> = (0..1000).collect();
        let out = map(&v, |x| x * 2);
        assert!(out.iter().enumerate().all(|(i, &x)| x == 2 * i as u32));
    }

    #[test]
    fn first_match_is_lowest_index() {
        let v: Vec<u32> = (0..1000).collect();
        let hit = find_first(&v, |&x| (x % 7 == 3 && x > 100).then_some(x));
        assert_eq!(hit, Some(101));
        assert!(all(&v, |&x| x < 1000));
    }
}
