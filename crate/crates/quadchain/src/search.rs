//! Brute-force oracles: exhaustive solution-pair scans over boxes, the
//! exact enumeration of equal-consecutive-term chains, and the
//! palindromic-triple (elliptic point) scan.
//!
//! The box scan tests the defining divisibilities directly in fixed-width
//! arithmetic, independent of the bigint chain machinery it serves as
//! ground truth for.

use rayon::prelude::*;

use crate::arith::Int;
use crate::chain::{
    check_system, same_chain, ChainError, ChainWindow, SolutionPair, SystemLabel,
};

/// Result of an exhaustive box scan: every pair within the box that solves
/// one of the requested systems, in ascending (x, y) order with ties in
/// requested-system order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub box_bound: i64,
    pub systems: Vec<SystemLabel>,
    pub pairs: Vec<SolutionPair>,
}

fn divides(d: i128, n: i128) -> bool {
    n % d == 0
}

fn cubic_i128(v: i128, e: u32) -> i128 {
    v * v * v + v.pow(e) + 1
}

fn scan_rows(xs: &[i64], bound: i64, systems: &[SystemLabel]) -> Vec<SolutionPair> {
    let mut found = Vec::new();
    for &x in xs {
        if x == 0 {
            continue;
        }
        for y in -bound..=bound {
            if y == 0 {
                continue;
            }
            for &s in systems {
                if divides(x as i128, cubic_i128(y as i128, s.lambda_a()))
                    && divides(y as i128, cubic_i128(x as i128, s.lambda_b()))
                {
                    found.push(
                        SolutionPair::new(Int::from(x), Int::from(y), s)
                            .expect("scan found a pair the checker rejects"),
                    );
                }
            }
        }
    }
    found
}

/// Exhaustive scan of all (x, y) with 1 <= |x|, |y| <= bound for each
/// requested system. `jobs` only partitions the work; the output is
/// identical for every partition count.
pub fn search_box(bound: i64, systems: &[SystemLabel], jobs: usize) -> SearchResult {
    assert!(bound >= 1, "box bound must be at least 1");
    assert!(bound <= 3_000_000, "box bound too large for i128 scanning");
    let xs: Vec<i64> = (-bound..=bound).collect();
    let jobs = jobs.max(1);
    let chunk = xs.len().div_ceil(jobs);
    let pairs: Vec<SolutionPair> = xs
        .chunks(chunk)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|rows| scan_rows(rows, bound, systems))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    SearchResult {
        box_bound: bound,
        systems: systems.to_vec(),
        pairs,
    }
}

/// Exact solutions of `x * y = x^3 + x^e + 1` with `x != y`: the equation
/// forces `x | 1`, so only `x = 1` and `x = -1` can occur.
pub fn equal_consecutive_pairs(exponent: u32) -> Vec<(Int, Int)> {
    assert!(exponent == 1 || exponent == 2);
    let mut out = Vec::new();
    for x in [1i64, -1] {
        let rhs = x.pow(3) + x.pow(exponent) + 1;
        // x is 1 or -1, so the division is always exact.
        let y = rhs / x;
        if y != x && y != 0 {
            out.push((Int::from(x), Int::from(y)));
        }
    }
    out
}

/// A chain with exactly two equal consecutive terms, together with the
/// solution and system it was generated from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualConsecutiveChain {
    pub x: Int,
    pub y: Int,
    pub equation_exponent: u32,
    pub system: SystemLabel,
    pub window: ChainWindow,
}

/// Grows a window from the seed until three non-unit terms flank the run
/// of absolute-value-1 terms on each side.
pub(crate) fn window_past_units(seed: &SolutionPair, cap: usize) -> Result<ChainWindow, ChainError> {
    use num_traits::{One, Signed};
    let mut w = ChainWindow::generate(seed, 0, 0);
    let flanked = |terms: &[Int]| {
        terms.len() >= 3 && terms.iter().take(3).all(|t| !t.abs().is_one())
    };
    let mut steps = 0usize;
    loop {
        let rev: Vec<Int> = w.terms().iter().rev().cloned().collect();
        let left_ok = flanked(w.terms());
        let right_ok = flanked(&rev);
        if left_ok && right_ok {
            return Ok(w);
        }
        if steps >= cap {
            return Err(ChainError::StepBudgetExceeded);
        }
        steps += 1;
        w = w.extended(usize::from(!left_ok), usize::from(!right_ok));
    }
}

fn has_three_equal_consecutive(w: &ChainWindow) -> bool {
    w.terms()
        .windows(3)
        .any(|t| t[0] == t[1] && t[1] == t[2])
}

/// Generates every chain containing exactly two equal consecutive terms:
/// for each solution of `xy = x^3 + x^e + 1` and each system with
/// `lambda_a = e` admitting the pair `(x, x)`, builds the chain around it,
/// drops chains where the equal run is longer than two, and deduplicates
/// up to shift and reflection. Windows are returned in the deterministic
/// lexicographic orientation.
pub fn equal_consecutive_chains() -> Vec<EqualConsecutiveChain> {
    let mut out: Vec<EqualConsecutiveChain> = Vec::new();
    for exponent in [1u32, 2] {
        for (x, y) in equal_consecutive_pairs(exponent) {
            for lb in [1u8, 2] {
                let s = SystemLabel::new(exponent as u8, lb).unwrap();
                if !check_system(&x, &x, s) || !check_system(&x, &y, s.rotate_right()) {
                    continue;
                }
                let seed = SolutionPair::new(x.clone(), x.clone(), s).unwrap();
                let window = window_past_units(&seed, 32).expect("unit runs are finite");
                if has_three_equal_consecutive(&window) {
                    continue;
                }
                if out
                    .iter()
                    .any(|c| same_chain(&c.window, &window, 6).unwrap_or(false))
                {
                    continue;
                }
                out.push(EqualConsecutiveChain {
                    x: x.clone(),
                    y: y.clone(),
                    equation_exponent: exponent,
                    system: s,
                    window: window.lex_canonical(),
                });
            }
        }
    }
    out
}

/// An integral point (x, y) with `y^2 = x^3 + x^e + 1`, and whether the
/// palindromic triple (y, x, y) extends to a 4-chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PalindromicSolution {
    pub x: Int,
    pub y: Int,
    pub curve_exponent: u32,
    pub generates_chain: bool,
    pub window: Option<ChainWindow>,
}

/// Scans `|x| <= bound` for perfect-square values of `x^3 + x^e + 1`,
/// reporting the representative with y >= 0. Completeness holds within
/// the box only; callers must not read the output as a full list of
/// integral points.
pub fn palindromic_solutions(bound: i64, curve_exponent: u32) -> Vec<PalindromicSolution> {
    assert!(bound >= 1);
    assert!(curve_exponent == 1 || curve_exponent == 2);
    let mut out = Vec::new();
    for x in -bound..=bound {
        let rhs = (x as i128).pow(3) + (x as i128).pow(curve_exponent) + 1;
        if rhs < 0 {
            continue;
        }
        let y = integer_sqrt(rhs);
        if y * y != rhs {
            continue;
        }
        let (x_int, y_int) = (Int::from(x), Int::from(y));
        let mut window = None;
        let mut generates = false;
        if x != 0 && y != 0 {
            for lb in [1u8, 2] {
                let s = SystemLabel::new(curve_exponent as u8, lb).unwrap();
                if check_system(&y_int, &x_int, s) {
                    generates = true;
                    let seed = SolutionPair::new(y_int.clone(), x_int.clone(), s).unwrap();
                    window = Some(window_past_units(&seed, 32).expect("unit runs are finite"));
                    break;
                }
            }
        }
        out.push(PalindromicSolution {
            x: x_int,
            y: y_int,
            curve_exponent,
            generates_chain: generates,
            window,
        });
    }
    out
}

fn integer_sqrt(n: i128) -> i128 {
    if n < 2 {
        return n.max(0);
    }
    let mut r = (n as f64).sqrt() as i128;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}
