//! Instrumentation for the working-storage guarantees.
//!
//! Solvers and the sketch register their large buffers with a [`StorageMeter`]
//! so tests can assert that peak usage stays within the advertised bounds
//! (no hidden n-by-n allocation, Lanczos working set O(n + q), solver state
//! O(d + Rn)).

use std::sync::atomic::{AtomicI64, Ordering};
use std::sync::Arc;

/// Tracks the number of live f64 scalars held by instrumented buffers.
///
/// Cheap to clone; clones share the same counters.
#[derive(Clone, Debug, Default)]
pub struct StorageMeter {
    inner: Arc<MeterInner>,
}

#[derive(Debug, Default)]
struct MeterInner {
    current: AtomicI64,
    peak: AtomicI64,
}

impl StorageMeter {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registers `scalars` newly allocated f64 values.
    pub fn charge(&self, scalars: usize) {
        let cur = self
            .inner
            .current
            .fetch_add(scalars as i64, Ordering::Relaxed)
            + scalars as i64;
        self.inner.peak.fetch_max(cur, Ordering::Relaxed);
    }

    /// Registers that `scalars` previously charged values were dropped.
    pub fn release(&self, scalars: usize) {
        self.inner
            .current
            .fetch_sub(scalars as i64, Ordering::Relaxed);
    }

    /// Scalars currently live.
    pub fn current_scalars(&self) -> usize {
        self.inner.current.load(Ordering::Relaxed).max(0) as usize
    }

    /// High-water mark over the meter's lifetime.
    pub fn peak_scalars(&self) -> usize {
        self.inner.peak.load(Ordering::Relaxed).max(0) as usize
    }

    /// Peak usage in bytes, assuming 8-byte scalars.
    pub fn peak_bytes(&self) -> usize {
        self.peak_scalars() * 8
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn peak_tracks_high_water_mark() {
        let m = StorageMeter::new();
        m.charge(100);
        m.charge(50);
        m.release(120);
        m.charge(10);
        assert_eq!(m.current_scalars(), 40);
        assert_eq!(m.peak_scalars(), 150);
        assert_eq!(m.peak_bytes(), 1200);
    }

    #[test]
    fn clones_share_counters() {
        let m = StorageMeter::new();
        let m2 = m.clone();
        m2.charge(7);
        assert_eq!(m.peak_scalars(), 7);
    }
}
