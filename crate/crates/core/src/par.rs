//! Data-parallel helpers.
//!
//! With the `parallel` feature these fan out over rayon's global pool;
//! without it every call runs sequentially. Results are always returned in
//! input order, so callers see the same output either way.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    Parallel,
    Sequential,
}

impl Default for Strategy {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Strategy::Parallel
        } else {
            Strategy::Sequential
        }
    }
}

pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    map_with(Strategy::default(), items, f)
}

pub fn map_with<T, R, F>(strategy: Strategy, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match strategy {
        #[cfg(feature = "parallel")]
        Strategy::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}

/// Maps over `0..len` in order.
pub fn map_indices<R, F>(strategy: Strategy, len: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    match strategy {
        #[cfg(feature = "parallel")]
        Strategy::Parallel => {
            use rayon::prelude::*;
            (0..len).into_par_iter().map(f).collect()
        }
        _ => (0..len).map(f).collect(),
    }
}

/// Index of some item satisfying `pred`. The parallel path may return any
/// satisfying index; callers needing the first one must use `position_first`.
pub fn position_first<T, F>(strategy: Strategy, items: &[T], pred: F) -> Option<usize>
where
    T: Sync,
    F: Fn(&T) -> bool + Sync + Send,
{
    match strategy {
        #[cfg(feature = "parallel")]
        Strategy::Parallel => {
            use rayon::prelude::*;
            items.par_iter().position_first(pred)
        }
        _ => items.iter().position(pred),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        let items: Vec<u64> = (0..1000).collect();
        let a = map_with(Strategy::Parallel, &items, |x| x * x);
        let b = map_with(Strategy::Sequential, &items, |x| x * x);
        assert_eq!(a, b);
        let c = map_indices(Strategy::Parallel, 10, |i| i + 1);
        assert_eq!(c, (1..=10).collect::<Vec<_>>());
        assert_eq!(
            position_first(Strategy::Parallel, &items, |&x| x > 500 && x % 7 == 0),
            position_first(Strategy::Sequential, &items, |&x| x > 500 && x % 7 == 0)
        );
    }
}
