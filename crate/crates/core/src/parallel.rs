//! Worker-pool plumbing. `NILIDEAL_THREADS` caps the number of threads used
//! by parallel enumerations; unset or unparsable means rayon's default.

use std::sync::OnceLock;

use rayon::{ThreadPool, ThreadPoolBuilder};

pub const THREADS_ENV: &str = "NILIDEAL_THREADS";

pub fn thread_cap() -> Option<usize> {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
}

fn pool() -> Option<&'static ThreadPool> {
    static POOL: OnceLock<Option<ThreadPool>> = OnceLock::new();
    POOL.get_or_init(|| {
        thread_cap().and_then(|n| ThreadPoolBuilder::new().num_threads(n).build().ok())
    })
    .as_ref()
}

/// Run `f` inside the capped pool when one is configured.
pub fn install<R: Send>(f: impl FnOnce() -> R + Send) -> R {
    match pool() {
        Some(p) => p.install(f),
        None => f(),
    }
}
