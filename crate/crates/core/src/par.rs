//! Order-preserving map over independent work items, parallel when the
//! `parallel` feature is enabled.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

/// Applies `f` to every item and returns the results in input order.
/// `Execution::Parallel` falls back to sequential without the `parallel`
/// feature.
pub fn map_ordered<T, R, F>(items: Vec<T>, execution: Execution, f: F) -> Vec<R>
where
    T: Send + Sync,
    R: Send,
    F: Fn(&T) -> R + Send + Sync,
{
    match execution {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}
