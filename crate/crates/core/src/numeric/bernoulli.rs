use std::sync::OnceLock;

use super::{rational_to_dd, Dd};
use crate::exact::bernoulli_numbers;

/// Number of even-index Bernoulli numbers kept in double-double form.
pub(crate) const EVEN_TERMS: usize = 80;

/// `B_{2j}` for j = 0..EVEN_TERMS.
pub(crate) fn even_bernoulli() -> &'static [Dd] {
    static TABLE: OnceLock<Vec<Dd>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let b = bernoulli_numbers(2 * EVEN_TERMS);
        (0..EVEN_TERMS).map(|j| rational_to_dd(&b[2 * j])).collect()
    })
}

/// `B_{2j} / (2j)!` for j = 0..EVEN_TERMS.
pub(crate) fn even_bernoulli_over_factorial() -> &'static [Dd] {
    static TABLE: OnceLock<Vec<Dd>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let b = even_bernoulli();
        let mut fact = Dd::ONE;
        let mut out = Vec::with_capacity(EVEN_TERMS);
        for (j, bj) in b.iter().enumerate() {
            if j > 0 {
                fact = fact * Dd::from((2 * j - 1) as f64) * Dd::from((2 * j) as f64);
            }
            out.push(*bj / fact);
        }
        out
    })
}
