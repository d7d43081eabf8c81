//! Brute-force lattice-path oracles.
//!
//! Each enumerator walks every path explicitly, depth first, pruning
//! branches that can no longer reach the target height. They are slow on
//! purpose: their only job is to be obviously correct.

use num_traits::{One, Zero};

use crate::combinat::{binomial, catalan};
use crate::error::SizeLimit;
use crate::scalar::Ring;
use crate::{Poly, Rational};

/// Largest `n` accepted by [`motzkin_weight_sum`].
pub const MOTZKIN_LIMIT: usize = 14;
/// Largest `n` accepted by [`schroder_path_sum`].
pub const SCHRODER_LIMIT: usize = 8;

fn int_poly(v: num_bigint::BigInt) -> Poly {
    Poly::constant(Rational::from_integer(v))
}

/// `Σ_k C(n+k, 2k) C_k x^(n-k) y^k`.
pub fn binomial_catalan_sum(n: usize) -> Poly {
    let n64 = n as u64;
    (0..=n64)
        .map(|k| {
            let coeff = binomial(n64 + k, 2 * k) * catalan(k);
            int_poly(coeff) * Poly::x().pow((n64 - k) as u32) * Poly::y().pow(k as u32)
        })
        .sum()
}

/// `Σ_k C(2n-k, k) C_(n-k) x^k y^(n-k)`, the second rendering of the same sum.
pub fn binomial_catalan_sum_alt(n: usize) -> Poly {
    let n64 = n as u64;
    (0..=n64)
        .map(|k| {
            let coeff = binomial(2 * n64 - k, k) * catalan(n64 - k);
            int_poly(coeff) * Poly::x().pow(k as u32) * Poly::y().pow((n64 - k) as u32)
        })
        .sum()
}

/// Sum of the weights of all Motzkin paths from `(0,0)` to `(n,k)` that
/// stay at height `>= 0`. An up step weighs 1, a level step at height `h`
/// weighs `s[h]` and a down step ending at height `h` weighs `t[h]`.
///
/// Panics if `s` or `t` is too short for the heights the paths reach
/// (`s` needs `(n+k)/2 + 1` entries, `t` needs `(n+k)/2`).
pub fn motzkin_weight_sum<R: Ring>(s: &[R], t: &[R], n: usize, k: usize) -> Result<R, SizeLimit> {
    if n > MOTZKIN_LIMIT {
        return Err(SizeLimit { what: "Motzkin path length", requested: n, limit: MOTZKIN_LIMIT });
    }
    if k > n {
        return Ok(R::zero());
    }
    let mut total = R::zero();
    motzkin_dfs(s, t, n, k, 0, &R::one(), &mut total);
    Ok(total)
}

fn motzkin_dfs<R: Ring>(s: &[R], t: &[R], remaining: usize, target: usize, h: usize, w: &R, total: &mut R) {
    if remaining == 0 {
        if h == target {
            *total = total.plus(w);
        }
        return;
    }
    let reachable = |h2: usize| h2.abs_diff(target) < remaining;
    if reachable(h + 1) {
        motzkin_dfs(s, t, remaining - 1, target, h + 1, w, total);
    }
    if reachable(h) {
        motzkin_dfs(s, t, remaining - 1, target, h, &w.times(&s[h]), total);
    }
    if h > 0 && reachable(h - 1) {
        motzkin_dfs(s, t, remaining - 1, target, h - 1, &w.times(&t[h - 1]), total);
    }
}

/// Weight sum of the non-negative paths from `(0,0)` to `(2n,0)` with unit
/// up and down steps and horizontal steps of length 2, where a path weighs
/// `x^(#horizontal) * y^(#down)`.
pub fn schroder_path_sum(n: usize) -> Result<Poly, SizeLimit> {
    if n > SCHRODER_LIMIT {
        return Err(SizeLimit { what: "Schröder path size", requested: n, limit: SCHRODER_LIMIT });
    }
    // counts[h][d] = number of paths with h horizontal and d down steps
    let mut counts = vec![vec![0u64; n + 1]; n + 1];
    schroder_dfs(2 * n, 0, 0, 0, &mut counts);
    let mut total = Poly::zero();
    for (h, row) in counts.iter().enumerate() {
        for (d, &c) in row.iter().enumerate() {
            if c != 0 {
                total = total
                    + int_poly(c.into()) * Poly::x().pow(h as u32) * Poly::y().pow(d as u32);
            }
        }
    }
    Ok(total)
}

fn schroder_dfs(remaining: usize, height: usize, hor: usize, down: usize, counts: &mut [Vec<u64>]) {
    if remaining == 0 {
        if height == 0 {
            counts[hor][down] += 1;
        }
        return;
    }
    if height < remaining - 1 {
        schroder_dfs(remaining - 1, height + 1, hor, down, counts);
    }
    if height > 0 {
        schroder_dfs(remaining - 1, height - 1, hor, down + 1, counts);
    }
    if remaining >= 2 && height <= remaining - 2 {
        schroder_dfs(remaining - 2, height, hor + 1, down, counts);
    }
}

/// Number of Dyck paths of semilength `n`, counted by walking them.
pub fn dyck_count(n: usize) -> Result<Rational, SizeLimit> {
    let zero = vec![Rational::zero(); n + 1];
    let one = vec![Rational::one(); n + 1];
    motzkin_weight_sum(&zero, &one, 2 * n, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Point;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn binomial_catalan_low_orders() {
        assert_eq!(binomial_catalan_sum(0), Poly::one());
        assert_eq!(binomial_catalan_sum(1), p("x + y"));
        assert_eq!(binomial_catalan_sum(2), p("x^2 + 3*x*y + 2*y^2"));
        let at11 = Point::new(r(1), r(1), r(1));
        assert_eq!(binomial_catalan_sum(4).eval(&at11), r(90));
    }

    #[test]
    fn both_renderings_agree() {
        for n in 0..=10 {
            assert_eq!(binomial_catalan_sum(n), binomial_catalan_sum_alt(n), "n = {n}");
        }
    }

    #[test]
    fn schroder_paths_small() {
        assert_eq!(schroder_path_sum(1).unwrap(), p("x + y"));
        assert_eq!(schroder_path_sum(2).unwrap(), p("x^2 + 3*x*y + 2*y^2"));
        let at11 = Point::new(r(1), r(1), r(1));
        assert_eq!(schroder_path_sum(3).unwrap().eval(&at11), r(22));
        assert!(schroder_path_sum(9).is_err());
    }

    #[test]
    fn motzkin_schroder_triangle_entry() {
        let s: Vec<Rational> = [2, 3, 3, 3].iter().map(|&v| r(v)).collect();
        let t: Vec<Rational> = [2, 2, 2, 2].iter().map(|&v| r(v)).collect();
        assert_eq!(motzkin_weight_sum(&s, &t, 3, 0).unwrap(), r(22));
        assert_eq!(motzkin_weight_sum(&s, &t, 3, 1).unwrap(), r(23));
        assert_eq!(motzkin_weight_sum(&s, &t, 3, 3).unwrap(), r(1));
        assert!(motzkin_weight_sum(&s, &t, 15, 0).is_err());
    }

    #[test]
    fn motzkin_symbolic_two_steps() {
        // level-level weighs s(0)^2 = y^2, up-down weighs t(0) = y(x+y)
        let s = vec![p("y"), p("x + 2*y")];
        let t = vec![p("x*y + y^2")];
        assert_eq!(motzkin_weight_sum(&s, &t, 2, 0).unwrap(), p("x*y + 2*y^2"));
    }

    #[test]
    fn dyck_counts_are_catalan() {
        for n in 0..=7 {
            assert_eq!(dyck_count(n).unwrap(), Rational::from_integer(catalan(n as u64)));
        }
    }
}
