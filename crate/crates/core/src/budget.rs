use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

/// Search limits shared by the exact solvers. `None` means unlimited.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget {
        max_nodes: None,
        max_time: None,
    };

    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes: Some(max_nodes),
            max_time: None,
        }
    }

    /// Default for induced-path searches on the core graphs.
    pub fn snake_default() -> Self {
        Budget {
            max_nodes: Some(1_000_000_000),
            max_time: Some(Duration::from_secs(2 * 3600)),
        }
    }

    pub fn with_time(mut self, t: Duration) -> Self {
        self.max_time = Some(t);
        self
    }

    pub(crate) fn deadline(&self, start: Instant) -> Option<Instant> {
        self.max_time.map(|t| start + t)
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::UNLIMITED
    }
}
