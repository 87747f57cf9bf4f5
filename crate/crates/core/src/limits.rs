//! Process-wide bounds on powerset enumeration.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};

/// Universe size above which collection operations refuse to run, unless raised.
pub const DEFAULT_MAX_N: usize = 20;

/// Collections are bitmaps over all `2^n` subsets; past this they stop fitting in memory.
pub const HARD_MAX_N: usize = 24;

static MAX_N: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_N);

pub fn max_enumeration_n() -> usize {
    MAX_N.load(Ordering::Relaxed)
}

/// Sets the enumeration bound. Values above [`HARD_MAX_N`] are rejected.
pub fn set_max_enumeration_n(n: usize) -> Result<()> {
    if n > HARD_MAX_N {
        return Err(Error::UniverseTooLarge { n, max: HARD_MAX_N });
    }
    MAX_N.store(n, Ordering::Relaxed);
    Ok(())
}

pub(crate) fn check_enumerable(n: usize) -> Result<()> {
    let max = max_enumeration_n();
    if n > max {
        Err(Error::UniverseTooLarge { n, max })
    } else {
        Ok(())
    }
}
