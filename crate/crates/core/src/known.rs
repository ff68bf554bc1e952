//! Small named groupoids used as fixtures and in the CLI.

use crate::groupoid::Groupoid;

/// The six-element AG-groupoid on `{1,..,6}` from the intra-regularity
/// literature. It has no left identity but is intra-regular.
pub fn example3() -> Groupoid {
    const ROWS: [[usize; 6]; 6] = [
        [1, 1, 1, 1, 1, 1],
        [1, 2, 1, 1, 1, 1],
        [1, 1, 5, 6, 3, 4],
        [1, 1, 4, 5, 6, 3],
        [1, 1, 3, 4, 5, 6],
        [1, 1, 6, 3, 4, 5],
    ];
    let rows: Vec<Vec<usize>> = ROWS
        .iter()
        .map(|r| r.iter().map(|&v| v - 1).collect())
        .collect();
    let labels = (1..=6).map(|i| i.to_string()).collect();
    Groupoid::new(&rows, labels).expect("valid fixture")
}

pub fn trivial() -> Groupoid {
    Groupoid::from_rows(&[vec![0]]).expect("valid fixture")
}

/// `(Z_n, +)`.
pub fn cyclic_group(n: usize) -> Groupoid {
    Groupoid::from_fn(n, |a, b| (a + b) % n).expect("valid fixture")
}

/// `(Z_n, ·)`, a commutative monoid.
pub fn mult_mod(n: usize) -> Groupoid {
    Groupoid::from_fn(n, |a, b| (a * b) % n).expect("valid fixture")
}

/// `Z_2 × Z_2` with elements encoded as two bits.
pub fn klein_four() -> Groupoid {
    Groupoid::from_fn(4, |a, b| a ^ b).expect("valid fixture")
}
