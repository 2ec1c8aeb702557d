//! Modular structure of chains: root scans of the two cubics, forbidden
//! moduli, and the mod-3 zero-free run bound.
//!
//! If `m` divides a chain term, its neighbor is a root of one of
//! `x^3 + x + 1` or `x^3 + x^2 + 1` modulo `m`; a modulus where neither
//! cubic has a root therefore never divides any chain term.

use thiserror::Error;

use crate::chain::{ChainWindow, SystemLabel};
use num_traits::Zero;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ResidueError {
    #[error("a cycle of nonzero residues exists in the mod-3 transition graph")]
    UnboundedRun,
}

/// Residue roots of the two cubics modulo `m`, and whether `m` is
/// forbidden (no roots for either).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModulusReport {
    pub m: u64,
    pub roots_p1: Vec<u64>,
    pub roots_p2: Vec<u64>,
    pub forbidden: bool,
}

fn cubic_mod(r: u64, e: u32, m: u64) -> u64 {
    let r = r as u128;
    let m = m as u128;
    ((r * r % m * r + r.pow(e) + 1) % m) as u64
}

/// Exhaustive residue scan of both cubics modulo `m >= 2`.
pub fn modulus_report(m: u64) -> ModulusReport {
    assert!(m >= 2, "modulus must be at least 2");
    let roots_p1: Vec<u64> = (0..m).filter(|&r| cubic_mod(r, 1, m) == 0).collect();
    let roots_p2: Vec<u64> = (0..m).filter(|&r| cubic_mod(r, 2, m) == 0).collect();
    let forbidden = roots_p1.is_empty() && roots_p2.is_empty();
    ModulusReport {
        m,
        roots_p1,
        roots_p2,
        forbidden,
    }
}

/// All forbidden moduli in `[2, limit]`, ascending.
pub fn forbidden_moduli(limit: u64) -> Vec<u64> {
    (2..=limit)
        .filter(|&m| modulus_report(m).forbidden)
        .collect()
}

/// Longest possible run of consecutive chain terms not divisible by 3,
/// established by exhausting the transition graph over nonzero residue
/// pairs mod 3 and the period-4 exponent schedule. The step from pair
/// `(a, b)` under system `s` is forced: `c = a^{-1} (b^3 + b^{lambda_a} + 1)`
/// mod 3. Returns the run length in terms; a nonzero cycle would
/// contradict the divisibility theorem and is reported as an error.
pub fn mod3_run_bound() -> Result<usize, ResidueError> {
    let inv = |a: u64| a; // 1 and 2 are self-inverse mod 3
    let mut best = 0usize;
    for a0 in 1..3u64 {
        for b0 in 1..3u64 {
            for s0 in SystemLabel::ALL {
                let mut run = 2usize;
                let mut state = (a0, b0, s0);
                let mut seen = std::collections::HashSet::new();
                loop {
                    if !seen.insert(state) {
                        return Err(ResidueError::UnboundedRun);
                    }
                    let (a, b, s) = state;
                    let c = inv(a) * (b.pow(3) + b.pow(s.lambda_a()) + 1) % 3;
                    if c == 0 {
                        break;
                    }
                    run += 1;
                    state = (b, c, s.rotate_right());
                }
                best = best.max(run);
            }
        }
    }
    Ok(best)
}

/// Longest run of consecutive window terms not divisible by `m`.
pub fn max_zero_free_run(window: &ChainWindow, m: u64) -> usize {
    let m_int = crate::arith::Int::from(m);
    let mut best = 0usize;
    let mut current = 0usize;
    for t in window.terms() {
        if (t % &m_int).is_zero() {
            current = 0;
        } else {
            current += 1;
            best = best.max(current);
        }
    }
    best
}
