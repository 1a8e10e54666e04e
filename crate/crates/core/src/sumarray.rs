//! Fixed-size numeric array with point assignment and prefix/suffix
//! range sums in O(log n), backed by a binary indexed tree.
//!
//! Indices are one-based, matching the permutation values stored in it.
//! Out-of-range indices and a zero size are programmer errors and panic,
//! like slice indexing.

use std::ops::{AddAssign, Sub, SubAssign};

/// Value types the array can hold. Signed, so that overwriting a cell
/// with a smaller value is representable as a delta.
pub trait SumValue:
    Copy + Default + AddAssign + SubAssign + Sub<Output = Self> + PartialEq
{
}

impl SumValue for i64 {}
impl SumValue for i128 {}

#[derive(Debug, Clone)]
pub struct SumArray<T: SumValue> {
    tree: Vec<T>, // 1-based Fenwick tree of deltas
    vals: Vec<T>, // 1-based current cell values
    total: T,
}

impl<T: SumValue> SumArray<T> {
    /// A fresh array of `n` zero cells.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "SumArray size must be positive");
        Self {
            tree: zeroed_vec(n + 1, T::default()),
            vals: zeroed_vec(n + 1, T::default()),
            total: T::default(),
        }
    }

    pub fn len(&self) -> usize {
        self.vals.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false // n >= 1 by construction
    }

    /// Current value of cell `index`.
    pub fn get(&self, index: usize) -> T {
        assert!(index >= 1 && index <= self.len(), "index out of range");
        self.vals[index]
    }

    /// Overwrites cell `index` with `value` (assignment, not increment).
    pub fn assign(&mut self, index: usize, value: T) {
        assert!(index >= 1 && index <= self.len(), "index out of range");
        let delta = value - self.vals[index];
        if delta == T::default() {
            return;
        }
        self.vals[index] = value;
        self.total += delta;
        let mut i = index;
        while i <= self.len() {
            self.tree[i] += delta;
            i += i & i.wrapping_neg();
        }
    }

    /// `cell[1] + ... + cell[y]`.
    pub fn prefix_sum(&self, y: usize) -> T {
        assert!(y >= 1 && y <= self.len(), "index out of range");
        self.prefix_inclusive(y)
    }

    /// `cell[y] + ... + cell[n]`, computed as `total - prefix_sum(y-1)`.
    pub fn suffix_sum(&self, y: usize) -> T {
        assert!(y >= 1 && y <= self.len(), "index out of range");
        self.total - self.prefix_inclusive(y - 1)
    }

    /// Sum of all cells.
    pub fn total(&self) -> T {
        self.total
    }

    #[inline]
    fn prefix_inclusive(&self, y: usize) -> T {
        let mut acc = T::default();
        let mut i = y;
        while i > 0 {
            acc += self.tree[i];
            i &= i - 1;
        }
        acc
    }

    /// Performance hint: pulls the tree nodes a prefix or suffix query
    /// at `y` will touch into cache. Useful one step ahead of a sweep.
    #[inline]
    pub fn prefetch_query(&self, y: usize) {
        prefetch_descend(&self.tree, y.min(self.len()));
    }

    /// Performance hint: pulls the tree nodes an `assign` at `index`
    /// will touch into cache.
    #[inline]
    pub fn prefetch_assign(&self, index: usize) {
        if index >= 1 && index <= self.len() {
            prefetch_ascend(&self.tree, index);
            prefetch_one(&self.vals, index);
        }
    }
}

/// Allocates a vector of `len` copies of `zero`, asking the kernel to
/// back large buffers with huge pages before first touch. Fenwick sweeps
/// over multi-hundred-megabyte trees are TLB-bound with 4 KiB pages, so
/// this matters at the largest sample sizes; small buffers and non-Linux
/// targets just get a plain vector.
pub(crate) fn zeroed_vec<T: Copy>(len: usize, zero: T) -> Vec<T> {
    let mut v = Vec::with_capacity(len);
    advise_huge(v.as_ptr(), len * std::mem::size_of::<T>());
    v.resize(len, zero);
    v
}

#[cfg(target_os = "linux")]
fn advise_huge<T>(ptr: *const T, bytes: usize) {
    const PAGE: usize = 4096;
    const HUGE: usize = 2 << 20;
    let start = ptr as usize;
    let lo = (start + PAGE - 1) & !(PAGE - 1);
    let hi = start.saturating_add(bytes) & !(PAGE - 1);
    if hi > lo && hi - lo >= HUGE {
        // Advisory only; ignore the result, the plain pages still work.
        unsafe {
            libc::madvise(lo as *mut libc::c_void, hi - lo, libc::MADV_HUGEPAGE);
        }
    }
}

#[cfg(not(target_os = "linux"))]
fn advise_huge<T>(_ptr: *const T, _bytes: usize) {}

/// Hints one slice element into cache; no-op off x86_64.
#[inline(always)]
pub(crate) fn prefetch_one<T>(slice: &[T], i: usize) {
    #[cfg(target_arch = "x86_64")]
    unsafe {
        use core::arch::x86_64::{_mm_prefetch, _MM_HINT_T0};
        _mm_prefetch(slice.as_ptr().add(i) as *const i8, _MM_HINT_T0);
    }
    #[cfg(not(target_arch = "x86_64"))]
    {
        let _ = (slice, i);
    }
}

/// Hints the whole descending Fenwick chain of `start` into cache. The
/// chain indices depend only on `start`, so these loads can be issued
/// long before a query walk consumes them; without the hint a sweep over
/// a large tree is bound by serial memory latency.
#[inline(always)]
pub(crate) fn prefetch_descend<T>(slice: &[T], start: usize) {
    let mut i = start;
    while i > 0 {
        prefetch_one(slice, i);
        i &= i - 1;
    }
}

/// Same for the ascending update chain of `start`.
#[inline(always)]
pub(crate) fn prefetch_ascend<T>(slice: &[T], start: usize) {
    let n = slice.len() - 1;
    let mut i = start;
    while i <= n {
        prefetch_one(slice, i);
        i += i & i.wrapping_neg();
    }
}
