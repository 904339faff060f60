//! Size limits for the exponential procedures.

use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Absolute vertex limit imposed by the 64-bit adjacency rows.
pub const MAX_VERTICES: usize = 64;

/// Default limit for procedures that walk all 2ⁿ vertex subsets.
pub const DEFAULT_DESK_CAP: usize = 15;

/// Limit for the generic backtracking isomorphism test.
pub const ISO_CAP: usize = 12;

/// Environment variable overriding [`DEFAULT_DESK_CAP`].
pub const CAP_ENV: &str = "DIPERFECT_CAP";

/// The vertex limit for 2ⁿ procedures, read once from `DIPERFECT_CAP`.
pub fn desk_cap() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var(CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .map(|v| v.clamp(1, MAX_VERTICES))
            .unwrap_or(DEFAULT_DESK_CAP)
    })
}

pub(crate) fn check_desk_cap(n: usize, what: &str) -> Result<()> {
    let cap = desk_cap();
    if n > cap {
        return Err(Error::Capability(format!(
            "{what} is exponential in the vertex count; n = {n} exceeds the cap of {cap} (set {CAP_ENV} to raise it)"
        )));
    }
    Ok(())
}
