//! Execution mode switch: rayon when the `parallel` feature is on, plain
//! iterators otherwise. Results are always returned in input order.

use std::sync::atomic::{AtomicBool, Ordering};

static SEQUENTIAL: AtomicBool = AtomicBool::new(false);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

/// Forces sequential execution process-wide (used by benches and for
/// reproducing timings). Has no effect on results.
pub fn set_exec(mode: Exec) {
    SEQUENTIAL.store(mode == Exec::Sequential, Ordering::Relaxed);
}

pub fn current_exec() -> Exec {
    if cfg!(feature = "parallel") && !SEQUENTIAL.load(Ordering::Relaxed) {
        Exec::Parallel
    } else {
        Exec::Sequential
    }
}

pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if current_exec() == Exec::Parallel {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    items.iter().map(f).collect()
}
