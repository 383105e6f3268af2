//! Enumeration caps. `BOTTOMFORGE_CAP` overrides the default for every
//! bounded search in the crate.

use std::sync::OnceLock;

pub const DEFAULT_CAP: u64 = 2_000_000;
pub const DEFAULT_T_CAP: u64 = 1 << 20;

static CAP: OnceLock<u64> = OnceLock::new();

/// Global enumeration cap (lattice-point scans, search nodes).
pub fn enumeration_cap() -> u64 {
    *CAP.get_or_init(|| {
        std::env::var("BOTTOMFORGE_CAP")
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_CAP)
    })
}
