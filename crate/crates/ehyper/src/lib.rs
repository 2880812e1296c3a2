//! Files, threads, clocks and the command line around `ehyper-core`.

pub mod acceptance;
pub mod cli;
pub mod config;
pub mod format;
pub mod parallel;
pub mod record;

use std::time::{Duration, Instant};

use ehyper_core::budget::Deadline;

/// Expires a fixed time after creation.
#[derive(Clone, Copy, Debug)]
pub struct WallClock {
    start: Instant,
    limit: Duration,
}

impl WallClock {
    pub fn new(limit: Duration) -> Self {
        WallClock {
            start: Instant::now(),
            limit,
        }
    }
}

impl Deadline for WallClock {
    fn expired(&self) -> bool {
        self.start.elapsed() >= self.limit
    }
}
