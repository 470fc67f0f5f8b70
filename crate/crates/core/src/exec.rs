//! Serial / parallel dispatch for the data-parallel loops in the crate.
//!
//! With the `parallel` feature (default) [`Exec::Parallel`] fans work out on
//! the current rayon pool. Without it the variant does not exist and all work
//! runs on the calling thread. Reductions are always performed in input
//! order, so both modes produce identical results.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Serial,
    #[cfg(feature = "parallel")]
    Parallel,
}

impl Default for Exec {
    #[cfg(feature = "parallel")]
    fn default() -> Self {
        Exec::Parallel
    }

    #[cfg(not(feature = "parallel"))]
    fn default() -> Self {
        Exec::Serial
    }
}

impl Exec {
    /// Map every item and return the results in input order.
    pub fn map<T, U, F>(self, items: Vec<T>, f: F) -> Vec<U>
    where
        T: Send,
        U: Send,
        F: Fn(T) -> U + Sync + Send,
    {
        match self {
            Exec::Serial => items.into_iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.into_par_iter().map(f).collect(),
        }
    }

    pub fn is_parallel(self) -> bool {
        !matches!(self, Exec::Serial)
    }
}
