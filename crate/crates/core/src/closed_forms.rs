//! Closed-form values of `fix_f` and `dim_f` for named families, used as
//! expected values by the verification suite.

use crate::lp::{rational, Rational};

fn q(p: usize, d: usize) -> Rational {
    rational(p as i64, d as i64)
}

/// `f(C_n)`: `n − 1` for odd `n`, `n − 2` for even `n`.
pub fn cycle_f(n: usize) -> usize {
    if n % 2 == 1 {
        n - 1
    } else {
        n - 2
    }
}

/// `fix_f(C_n) = n / f(C_n)`, `n ≥ 3`.
pub fn cycle_fix_f(n: usize) -> Rational {
    q(n, cycle_f(n))
}

/// `fix_f(W_n)` as printed for wheels: `n/(n−2)` when `n − 1` is even,
/// `n/(n−3)` when `n − 1` is odd.
pub fn wheel_fix_f_printed(n: usize) -> Rational {
    if (n - 1) % 2 == 0 {
        q(n, n - 2)
    } else {
        q(n, n - 3)
    }
}

/// `(n − 1) / f(C_{n−1})`: the value obtained by carrying the cycle
/// argument over to the rim of `W_n`.
pub fn wheel_fix_f_rim(n: usize) -> Rational {
    q(n - 1, cycle_f(n - 1))
}

/// `dim_f(W_n) = (n − 1)/4` for `n ≥ 7`.
pub fn wheel_dim_f(n: usize) -> Rational {
    q(n - 1, 4)
}

/// `fix_f(H(n, k))`: 2 when `k = 2`, `k/2` otherwise.
pub fn hamming_fix_f(k: usize) -> Rational {
    if k == 2 {
        q(2, 1)
    } else {
        q(k, 2)
    }
}

/// `fix_f(J(n, k))` for `n ≥ 2k`, `k ≥ 2`.
pub fn johnson_fix_f(n: usize, k: usize) -> Rational {
    match (n, k) {
        (4, 2) => q(3, 1),
        (8, 4) => q(35, 17),
        _ => q(n * n - n, 2 * k * n - 2 * k * k),
    }
}

/// `fix_f(F_n) = n`.
pub fn friendship_fix_f(n: usize) -> Rational {
    q(n, 1)
}

/// `fix_f(F_{1,n})` for `n ≥ 3`: 2 when `n = 3`, otherwise 1.
pub fn fan_fix_f(n: usize) -> Rational {
    if n == 3 {
        q(2, 1)
    } else {
        q(1, 1)
    }
}
