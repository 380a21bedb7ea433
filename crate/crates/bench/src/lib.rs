//! Benchmark inputs shared by the bench targets.

use nearirr_core::{parse_polynomial, Polynomial};

/// Named inputs for `check`, from small to moderately dense.
pub const CHECK_INPUTS: &[(&str, &str)] = &[
    ("example1", "X^3*Y^2 + X^2*Y^3 - X - Y"),
    ("example2", "X^3 + X^2*Y - X - Y"),
    ("example3", "Y + X^2 + X*Y^3 + X^3*Y^4 + X^5*Y^3"),
    ("dense6", "(X^2 + Y + 1)^2*(X + Y^2 - 2) + X^6 + Y^6 - 3"),
    ("power8", "(X^2 + X*Y + Y^3 + 1)^3 - 2*X^7*Y + 5"),
];

/// Coprime pairs for the intersection count.
pub const PAIR_INPUTS: &[(&str, &str, &str)] = &[
    ("circle_line", "X^2 + Y^2 - 1", "X + Y"),
    ("cubics", "X^3 + Y^2 - X*Y + 1", "Y^3 - X^2 + 2*X + 3"),
    ("quartics", "X^4 + X*Y^2 - Y^3 + 2", "Y^4 + X^2*Y - 3*X + 1"),
];

/// Pairs with a planted common factor for the gcd.
pub const GCD_INPUTS: &[(&str, &str, &str)] = &[
    ("linear", "(X + Y + 1)*(X - Y)", "(X + Y + 1)*(X*Y + 2)"),
    (
        "quadratic",
        "(X^2 + Y^2 - 1)*(X*Y - 3)^2",
        "(X^2 + Y^2 - 1)*(X^3 + Y)",
    ),
    (
        "cubic",
        "(X^3 - X*Y + Y^2 + 1)*(X + 2*Y^3)",
        "(X^3 - X*Y + Y^2 + 1)*(Y^2 - X + 7)",
    ),
];

pub fn poly(src: &str) -> Polynomial {
    parse_polynomial(src).expect("benchmark inputs parse")
}
