//! Shared inputs for the criterion benchmarks in `benches/`.

use pentaseries_core::{closed_form_series, TruncatedSeries};

/// Orders swept by every benchmark group.
pub const SIZES: [usize; 3] = [500, 1000, 2000];

/// The closed-form series at each benchmark order, built once up front.
pub fn closed_forms() -> Vec<(usize, TruncatedSeries)> {
    SIZES.iter().map(|&n| (n, closed_form_series(n))).collect()
}
