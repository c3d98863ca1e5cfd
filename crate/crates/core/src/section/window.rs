//! The adaptive unrolling window.

/// Default cap on the window, in periods.
pub const DEFAULT_WINDOW_CAP: i64 = 48;

/// Initial window, in periods.
pub const INITIAL_WINDOW: i64 = 3;

/// The cap, overridden by `VEERLAT_WINDOW`.
pub fn window_cap() -> i64 {
    std::env::var("VEERLAT_WINDOW").ok().and_then(|v| v.parse().ok()).filter(|&w: &i64| w > 0).unwrap_or(DEFAULT_WINDOW_CAP)
}

/// Runs `f` on windows `3, 6, 12, …` until two consecutive answers agree.
pub fn stabilize<T: PartialEq>(mut f: impl FnMut(i64) -> crate::Result<T>) -> crate::Result<T> {
    let cap = window_cap();
    let mut w = INITIAL_WINDOW.min(cap);
    let mut prev = f(w)?;
    loop {
        let next = 2 * w;
        if next > cap {
            return Err(crate::Error::WindowExceeded(cap));
        }
        let cur = f(next)?;
        if cur == prev {
            return Ok(cur);
        }
        prev = cur;
        w = next;
    }
}
