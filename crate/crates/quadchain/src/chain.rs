//! The 4-chain data model: system labels, pair checking, bidirectional
//! extension, least elements, and chain equivalence.
//!
//! A chain is a bi-infinite integer sequence in which consecutive pairs
//! solve one of the four simultaneous cubic divisibility systems
//! `x | y^3 + y^a + 1`, `y | x^3 + x^b + 1` with a, b in {1, 2}. We only
//! ever hold a finite window of a chain, together with the system of its
//! first pair; every other pair's system follows from the rotation cycle.

use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith::{exact_div, Int};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("({x}, {y}) is not a solution pair of {system}")]
    NotASolutionPair { x: Int, y: Int, system: SystemLabel },
    #[error("zero term at index {index}")]
    ZeroTerm { index: usize },
    #[error("a chain window needs at least two terms")]
    TooShort,
    #[error("pair at index {index} fails its system check")]
    PairCheckFailed { index: usize },
    #[error("recurrence violated at interior index {index}")]
    RecurrenceFailed { index: usize },
    #[error("step budget exceeded")]
    StepBudgetExceeded,
    #[error("system components must lie in {{1, 2}}")]
    BadSystemLabel,
}

/// One of the four system labels `S_{a,b}` with a, b in {1, 2}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SystemLabel {
    a: u8,
    b: u8,
}

impl SystemLabel {
    pub const S11: SystemLabel = SystemLabel { a: 1, b: 1 };
    pub const S21: SystemLabel = SystemLabel { a: 2, b: 1 };
    pub const S22: SystemLabel = SystemLabel { a: 2, b: 2 };
    pub const S12: SystemLabel = SystemLabel { a: 1, b: 2 };

    pub const ALL: [SystemLabel; 4] = [Self::S11, Self::S21, Self::S22, Self::S12];

    pub fn new(a: u8, b: u8) -> Result<SystemLabel, ChainError> {
        if (1..=2).contains(&a) && (1..=2).contains(&b) {
            Ok(SystemLabel { a, b })
        } else {
            Err(ChainError::BadSystemLabel)
        }
    }

    pub fn lambda_a(self) -> u32 {
        self.a as u32
    }

    pub fn lambda_b(self) -> u32 {
        self.b as u32
    }

    /// System of the next pair along a chain: `S_{a,b} -> S_{3-b,a}`.
    pub fn rotate_right(self) -> SystemLabel {
        SystemLabel {
            a: 3 - self.b,
            b: self.a,
        }
    }

    /// System of the previous pair: `S_{a,b} -> S_{b,3-a}`. Inverse of
    /// `rotate_right`.
    pub fn rotate_left(self) -> SystemLabel {
        SystemLabel {
            a: self.b,
            b: 3 - self.a,
        }
    }

    /// System satisfied by the reversed pair: `(x, y)` in `S_{a,b}` iff
    /// `(y, x)` in `S_{b,a}`.
    pub fn swapped(self) -> SystemLabel {
        SystemLabel {
            a: self.b,
            b: self.a,
        }
    }

    fn rotated_right_by(self, steps: usize) -> SystemLabel {
        let mut s = self;
        for _ in 0..steps % 4 {
            s = s.rotate_right();
        }
        s
    }
}

impl fmt::Display for SystemLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S_{{{},{}}}", self.a, self.b)
    }
}

/// `v^3 + v^e + 1`, the polynomial driving every divisibility condition.
pub fn cubic(v: &Int, e: u32) -> Int {
    v.pow(3) + v.pow(e) + 1
}

/// True iff `(x, y)` solves the system `s`: both coordinates nonzero,
/// `x | y^3 + y^a + 1`, and `y | x^3 + x^b + 1`. Coprimality of |x| and
/// |y| follows from the two divisibilities and needs no separate check.
pub fn check_system(x: &Int, y: &Int, s: SystemLabel) -> bool {
    if x.is_zero() || y.is_zero() {
        return false;
    }
    (cubic(y, s.lambda_a()) % x).is_zero() && (cubic(x, s.lambda_b()) % y).is_zero()
}

/// A validated solution pair of one of the four systems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionPair {
    x: Int,
    y: Int,
    system: SystemLabel,
}

impl SolutionPair {
    pub fn new(x: Int, y: Int, system: SystemLabel) -> Result<SolutionPair, ChainError> {
        if check_system(&x, &y, system) {
            Ok(SolutionPair { x, y, system })
        } else {
            Err(ChainError::NotASolutionPair { x, y, system })
        }
    }

    pub fn x(&self) -> &Int {
        &self.x
    }

    pub fn y(&self) -> &Int {
        &self.y
    }

    pub fn system(&self) -> SystemLabel {
        self.system
    }

    /// The next pair along the chain: `(y, (y^3 + y^a + 1) / x)` under the
    /// rotated system. Always exact for a validated pair.
    pub fn extend_right(&self) -> SolutionPair {
        let w = exact_div(&cubic(&self.y, self.system.lambda_a()), &self.x)
            .expect("extension of a valid pair is exact");
        SolutionPair {
            x: self.y.clone(),
            y: w,
            system: self.system.rotate_right(),
        }
    }

    /// The previous pair: `((x^3 + x^b + 1) / y, x)` under the rotated
    /// system.
    pub fn extend_left(&self) -> SolutionPair {
        let v = exact_div(&cubic(&self.x, self.system.lambda_b()), &self.y)
            .expect("extension of a valid pair is exact");
        SolutionPair {
            x: v,
            y: self.x.clone(),
            system: self.system.rotate_left(),
        }
    }

    /// The z-quotient of the equivalent cubic equation
    /// `x^3 + y^3 + x^b + y^a + 1 = xyz`. Exact for every valid pair.
    pub fn quotient_z(&self) -> Int {
        let sum = self.x.pow(3)
            + self.y.pow(3)
            + self.x.pow(self.system.lambda_b())
            + self.y.pow(self.system.lambda_a())
            + 1;
        exact_div(&sum, &(&self.x * &self.y)).expect("z-quotient of a valid pair is exact")
    }
}

/// Three consecutive chain terms together with the system of the pair
/// `(left, center)`. The type invariant is the recurrence
/// `left * right = center^3 + center^a + 1`; full chain membership is a
/// stronger property checked by [`Triple::verify_chain`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triple {
    left: Int,
    center: Int,
    right: Int,
    system: SystemLabel,
}

impl Triple {
    pub fn new(
        left: Int,
        center: Int,
        right: Int,
        system: SystemLabel,
    ) -> Result<Triple, ChainError> {
        for (i, t) in [&left, &center, &right].into_iter().enumerate() {
            if t.is_zero() {
                return Err(ChainError::ZeroTerm { index: i });
            }
        }
        if &left * &right != cubic(&center, system.lambda_a()) {
            return Err(ChainError::RecurrenceFailed { index: 1 });
        }
        Ok(Triple {
            left,
            center,
            right,
            system,
        })
    }

    pub fn left(&self) -> &Int {
        &self.left
    }

    pub fn center(&self) -> &Int {
        &self.center
    }

    pub fn right(&self) -> &Int {
        &self.right
    }

    pub fn system(&self) -> SystemLabel {
        self.system
    }

    /// Product of the outer terms, `left * right`.
    pub fn outer_product(&self) -> Int {
        &self.left * &self.right
    }

    /// True iff the triple really is a run of three consecutive terms of a
    /// 4-chain: both pairs pass their system checks in addition to the
    /// recurrence enforced at construction.
    pub fn verify_chain(&self) -> bool {
        check_system(&self.left, &self.center, self.system)
            && check_system(&self.center, &self.right, self.system.rotate_right())
    }

    /// Two triples match when their systems are equal.
    pub fn matches(&self, other: &Triple) -> bool {
        self.system == other.system
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}) under {}",
            self.left, self.center, self.right, self.system
        )
    }
}

/// A finite contiguous slice of a chain, at least two terms long.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainWindow {
    terms: Vec<Int>,
    first_system: SystemLabel,
}

impl ChainWindow {
    /// Validates every invariant: nonzero terms, every adjacent pair under
    /// its rotated system, and the interior recurrence.
    pub fn new(terms: Vec<Int>, first_system: SystemLabel) -> Result<ChainWindow, ChainError> {
        if terms.len() < 2 {
            return Err(ChainError::TooShort);
        }
        for (i, t) in terms.iter().enumerate() {
            if t.is_zero() {
                return Err(ChainError::ZeroTerm { index: i });
            }
        }
        let mut sys = first_system;
        for i in 0..terms.len() - 1 {
            if !check_system(&terms[i], &terms[i + 1], sys) {
                return Err(ChainError::PairCheckFailed { index: i });
            }
            sys = sys.rotate_right();
        }
        for i in 1..terms.len() - 1 {
            // Exponent of the interior recurrence at i: lambda_b of the
            // system of the pair (terms[i], terms[i+1]).
            let e = first_system.rotated_right_by(i).lambda_b();
            if &terms[i - 1] * &terms[i + 1] != cubic(&terms[i], e) {
                return Err(ChainError::RecurrenceFailed { index: i });
            }
        }
        Ok(ChainWindow {
            terms,
            first_system,
        })
    }

    /// Builds a window by iterated extension around a seed pair:
    /// `left_steps` terms prepended and `right_steps` appended.
    pub fn generate(seed: &SolutionPair, left_steps: usize, right_steps: usize) -> ChainWindow {
        let mut terms = vec![seed.x().clone(), seed.y().clone()];
        let mut cursor = seed.clone();
        for _ in 0..right_steps {
            cursor = cursor.extend_right();
            terms.push(cursor.y().clone());
        }
        let mut cursor = seed.clone();
        for _ in 0..left_steps {
            cursor = cursor.extend_left();
            terms.insert(0, cursor.x().clone());
        }
        ChainWindow {
            terms,
            first_system: cursor.system(),
        }
    }

    pub fn terms(&self) -> &[Int] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        false // at least two terms by construction
    }

    pub fn first_system(&self) -> SystemLabel {
        self.first_system
    }

    /// System of the pair `(terms[i], terms[i+1])`.
    pub fn pair_system(&self, i: usize) -> SystemLabel {
        self.first_system.rotated_right_by(i)
    }

    pub fn pair(&self, i: usize) -> SolutionPair {
        SolutionPair {
            x: self.terms[i].clone(),
            y: self.terms[i + 1].clone(),
            system: self.pair_system(i),
        }
    }

    pub fn first_pair(&self) -> SolutionPair {
        self.pair(0)
    }

    pub fn last_pair(&self) -> SolutionPair {
        self.pair(self.terms.len() - 2)
    }

    pub fn triple(&self, i: usize) -> Triple {
        Triple {
            left: self.terms[i].clone(),
            center: self.terms[i + 1].clone(),
            right: self.terms[i + 2].clone(),
            system: self.pair_system(i),
        }
    }

    pub fn triples(&self) -> impl Iterator<Item = Triple> + '_ {
        (0..self.terms.len().saturating_sub(2)).map(|i| self.triple(i))
    }

    /// The same window extended by the given step counts on each side.
    pub fn extended(&self, left_steps: usize, right_steps: usize) -> ChainWindow {
        let mut terms = self.terms.clone();
        let mut cursor = self.last_pair();
        for _ in 0..right_steps {
            cursor = cursor.extend_right();
            terms.push(cursor.y().clone());
        }
        let mut cursor = self.first_pair();
        for _ in 0..left_steps {
            cursor = cursor.extend_left();
            terms.insert(0, cursor.x().clone());
        }
        ChainWindow {
            terms,
            first_system: cursor.system(),
        }
    }

    /// The reversed window. Any 4-chain is reversible: the reversed first
    /// pair is the old last pair swapped, under the swapped system.
    pub fn reversed(&self) -> ChainWindow {
        let last_sys = self.pair_system(self.terms.len() - 2);
        let mut terms = self.terms.clone();
        terms.reverse();
        ChainWindow {
            terms,
            first_system: last_sys.swapped(),
        }
    }

    /// Lexicographically smaller of the window and its reversal. Gives a
    /// deterministic orientation for display and dedup of trivial chains.
    pub fn lex_canonical(&self) -> ChainWindow {
        let rev = self.reversed();
        if (&rev.terms, rev.first_system) < (&self.terms, self.first_system) {
            rev
        } else {
            self.clone()
        }
    }
}

/// Location of a chain's least element relative to the examined window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeastElementReport {
    pub value: Int,
    pub offset: usize,
    pub trivial: bool,
}

/// Walks from the seed in the direction of decreasing absolute value until
/// the minimum is bracketed. Returns the examined window, the index range
/// of the anchor (the least element, or the whole run of absolute value 1
/// for trivial chains), and the trivial flag.
pub(crate) fn locate_least(
    seed: &SolutionPair,
    max_steps: usize,
) -> Result<(ChainWindow, std::ops::Range<usize>, bool), ChainError> {
    let mut w = ChainWindow::generate(seed, 0, 0);
    let mut steps = 0usize;
    let budget = |steps: &mut usize| -> Result<(), ChainError> {
        *steps += 1;
        if *steps > max_steps {
            Err(ChainError::StepBudgetExceeded)
        } else {
            Ok(())
        }
    };

    if w.terms.iter().any(|t| t.abs().is_one()) {
        // Trivial chain: expose the whole run of absolute value 1.
        while w.terms[0].abs().is_one() {
            budget(&mut steps)?;
            w = w.extended(1, 0);
        }
        while w.terms[w.len() - 1].abs().is_one() {
            budget(&mut steps)?;
            w = w.extended(0, 1);
        }
        let start = w.terms.iter().position(|t| t.abs().is_one()).unwrap();
        let end = w.terms.iter().rposition(|t| t.abs().is_one()).unwrap() + 1;
        return Ok((w, start..end, true));
    }

    loop {
        let k = (0..w.len())
            .min_by_key(|&i| w.terms[i].abs())
            .expect("window is nonempty");
        if w.terms[k].abs().is_one() {
            // A unit appeared mid-descent; restart through the trivial path.
            return locate_least(&w.pair(k.min(w.len() - 2)), max_steps.saturating_sub(steps));
        }
        if k == 0 {
            budget(&mut steps)?;
            w = w.extended(1, 0);
        } else if k == w.len() - 1 {
            budget(&mut steps)?;
            w = w.extended(0, 1);
        } else {
            return Ok((w, k..k + 1, false));
        }
    }
}

/// Finds the term of least absolute value in the chain through `seed`.
/// Strict growth away from the least element guarantees termination well
/// inside `max_steps` for any valid pair.
pub fn least_element(
    seed: &SolutionPair,
    max_steps: usize,
) -> Result<LeastElementReport, ChainError> {
    let (w, anchor, trivial) = locate_least(seed, max_steps)?;
    let offset = if trivial {
        // Canonical representative: the unit nearest the window center.
        let center = w.len() / 2;
        anchor
            .clone()
            .min_by_key(|&i| (i as isize - center as isize).abs())
            .unwrap()
    } else {
        anchor.start
    };
    Ok(LeastElementReport {
        value: w.terms[offset].clone(),
        offset,
        trivial,
    })
}

/// Window of `radius` terms on each side of the least-element anchor, in
/// the orientation fixed by the canonical rule: the least element's right
/// neighbor has absolute value at most the left neighbor's, with
/// lexicographic tie-breaking; trivial chains compare lexicographically in
/// both orientations.
fn canonical_window(w: &ChainWindow, radius: usize) -> Result<ChainWindow, ChainError> {
    let budget = radius + w.len() + 64;
    let (mut win, mut anchor, trivial) = locate_least(&w.first_pair(), budget)?;
    if anchor.start < radius {
        let grow = radius - anchor.start;
        win = win.extended(grow, 0);
        anchor = anchor.start + grow..anchor.end + grow;
    }
    if win.len() - anchor.end < radius {
        win = win.extended(0, radius - (win.len() - anchor.end));
    }
    let slice: Vec<Int> = win.terms[anchor.start - radius..anchor.end + radius].to_vec();
    let forward = ChainWindow {
        terms: slice,
        first_system: win.pair_system(anchor.start - radius),
    };
    let backward = forward.reversed();
    if trivial {
        return Ok(forward.lex_canonical());
    }
    let left = forward.terms[radius - 1].abs();
    let right = forward.terms[radius + 1].abs();
    Ok(match right.cmp(&left) {
        std::cmp::Ordering::Less => forward,
        std::cmp::Ordering::Greater => backward,
        std::cmp::Ordering::Equal => forward.lex_canonical(),
    })
}

/// Decides whether two windows belong to the same chain, up to shift and
/// reflection, by comparing canonical windows of the given radius around
/// their least-element anchors. Sound whenever the least region of both
/// chains fits inside the radius.
pub fn same_chain(a: &ChainWindow, b: &ChainWindow, radius: usize) -> Result<bool, ChainError> {
    let ca = canonical_window(a, radius)?;
    let cb = canonical_window(b, radius)?;
    Ok(ca == cb)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> Int {
        Int::from(v)
    }

    fn ints(vs: &[i64]) -> Vec<Int> {
        vs.iter().map(|&v| Int::from(v)).collect()
    }

    fn pair(x: i64, y: i64, s: SystemLabel) -> SolutionPair {
        SolutionPair::new(int(x), int(y), s).unwrap()
    }

    #[test]
    fn check_system_examples() {
        assert!(check_system(&int(-1), &int(-1), SystemLabel::S11));
        assert!(check_system(&int(3), &int(31), SystemLabel::S21));
        assert!(!check_system(&int(2), &int(3), SystemLabel::S11));
        assert!(!check_system(&int(0), &int(3), SystemLabel::S11));
        assert!(!check_system(&int(3), &int(0), SystemLabel::S11));
    }

    #[test]
    fn rotation_cycle() {
        assert_eq!(SystemLabel::S22.rotate_right(), SystemLabel::S12);
        assert_eq!(SystemLabel::S11.rotate_right(), SystemLabel::S21);
        assert_eq!(SystemLabel::S11.rotate_left(), SystemLabel::S12);
        assert_eq!(SystemLabel::S22.rotate_left(), SystemLabel::S21);
        for s in SystemLabel::ALL {
            assert_eq!(s.rotated_right_by(4), s);
            assert_eq!(s.rotate_right().rotate_left(), s);
            assert_eq!(s.rotate_left().rotate_right(), s);
        }
    }

    #[test]
    fn extend_right_examples() {
        let p = pair(-1, -1, SystemLabel::S22).extend_right();
        assert_eq!((p.x(), p.y(), p.system()), (&int(-1), &int(-1), SystemLabel::S12));

        let p = pair(1, -3, SystemLabel::S21).extend_right();
        assert_eq!((p.x(), p.y(), p.system()), (&int(-3), &int(-17), SystemLabel::S22));

        let p = pair(-3, -17, SystemLabel::S22).extend_right();
        assert_eq!((p.x(), p.y(), p.system()), (&int(-17), &int(1541), SystemLabel::S12));
    }

    #[test]
    fn extend_left_examples() {
        let p = pair(-1, -1, SystemLabel::S22).extend_left();
        assert_eq!((p.x(), p.y(), p.system()), (&int(-1), &int(-1), SystemLabel::S21));

        let p = pair(1, -1, SystemLabel::S12).extend_left();
        assert_eq!((p.x(), p.y(), p.system()), (&int(-3), &int(1), SystemLabel::S22));
    }

    #[test]
    fn extension_round_trips() {
        for (x, y, s) in [
            (-1i64, -1, SystemLabel::S22),
            (-1, -1, SystemLabel::S11),
            (-31, -11, SystemLabel::S21),
            (3, 31, SystemLabel::S21),
        ] {
            let p = pair(x, y, s);
            assert_eq!(p.extend_right().extend_left(), p);
            assert_eq!(p.extend_left().extend_right(), p);
        }
    }

    #[test]
    fn generate_window_reproduces_tables() {
        let w = ChainWindow::generate(&pair(-1, -1, SystemLabel::S22), 5, 5);
        assert_eq!(
            w.terms(),
            ints(&[1541, -17, -3, 1, -1, -1, -1, -1, 1, -3, -17, 1541]).as_slice()
        );

        let w = ChainWindow::generate(&pair(-1, -1, SystemLabel::S11), 4, 4);
        assert_eq!(
            w.terms(),
            ints(&[1643, -17, -3, 1, -1, -1, 1, -3, -17, 1643]).as_slice()
        );

        let w = ChainWindow::generate(&pair(-1, 1, SystemLabel::S22), 4, 3);
        assert_eq!(
            w.terms(),
            ints(&[7849, -29, -3, 1, -1, 1, -3, -29, 8139]).as_slice()
        );
    }

    #[test]
    fn generated_windows_validate() {
        let w = ChainWindow::generate(&pair(-31, -11, SystemLabel::S21), 3, 3);
        assert!(ChainWindow::new(w.terms().to_vec(), w.first_system()).is_ok());
        // Corrupting one term must be caught.
        let mut bad = w.terms().to_vec();
        bad[2] += 1;
        assert!(ChainWindow::new(bad, w.first_system()).is_err());
    }

    #[test]
    fn window_rejects_zero_and_short_inputs() {
        assert_eq!(
            ChainWindow::new(vec![int(3)], SystemLabel::S11),
            Err(ChainError::TooShort)
        );
        assert_eq!(
            ChainWindow::new(ints(&[1, 0, 1]), SystemLabel::S11),
            Err(ChainError::ZeroTerm { index: 1 })
        );
    }

    #[test]
    fn quotient_z_examples() {
        assert_eq!(pair(-1, -1, SystemLabel::S11).quotient_z(), int(-3));
        assert_eq!(pair(-1, -1, SystemLabel::S22).quotient_z(), int(1));
        // Direct evaluation: (27 + 29791 + 3 + 961 + 1) / 93 = 331.
        assert_eq!(pair(3, 31, SystemLabel::S21).quotient_z(), int(331));
    }

    #[test]
    fn least_element_examples() {
        let r = least_element(&pair(-31, -11, SystemLabel::S21), 64).unwrap();
        assert_eq!(r.value, int(-11));
        assert!(!r.trivial);

        let r = least_element(&pair(13, -11, SystemLabel::S21), 64).unwrap();
        assert_eq!(r.value, int(-11));
        assert!(!r.trivial);

        let r = least_element(&pair(-1, -1, SystemLabel::S11), 64).unwrap();
        assert!(r.trivial);
        assert!(r.value.abs().is_one());

        // Seeded far from the least element, descending from either side.
        let w = ChainWindow::generate(&pair(-31, -11, SystemLabel::S21), 3, 3);
        let r = least_element(&w.first_pair(), 64).unwrap();
        assert_eq!(r.value, int(-11));
        let r = least_element(&w.last_pair(), 64).unwrap();
        assert_eq!(r.value, int(-11));
    }

    #[test]
    fn reversal_is_valid_and_involutive() {
        for (x, y, s, l, r) in [
            (-31i64, -11, SystemLabel::S21, 3, 3),
            (-1, -1, SystemLabel::S22, 5, 5),
            (3, 31, SystemLabel::S21, 2, 2),
        ] {
            let w = ChainWindow::generate(&pair(x, y, s), l, r);
            let rev = w.reversed();
            assert!(ChainWindow::new(rev.terms().to_vec(), rev.first_system()).is_ok());
            assert_eq!(rev.reversed(), w);
        }
    }

    #[test]
    fn same_chain_examples() {
        let w1541 = ChainWindow::generate(&pair(-1, -1, SystemLabel::S22), 5, 5);
        assert!(same_chain(&w1541, &w1541.reversed(), 6).unwrap());

        let a = ChainWindow::generate(&pair(-31, -11, SystemLabel::S21), 1, 1);
        let b = ChainWindow::generate(&pair(13, -11, SystemLabel::S21), 1, 1);
        assert!(!same_chain(&a, &b, 6).unwrap());

        // Shift invariance: a window vs a shifted copy of itself.
        let shifted = ChainWindow::generate(&a.pair(1), 1, 2);
        assert!(same_chain(&a, &shifted, 6).unwrap());

        let w1643 = ChainWindow::generate(&pair(-1, -1, SystemLabel::S11), 4, 4);
        assert!(!same_chain(&w1541, &w1643, 6).unwrap());
        assert!(same_chain(&w1643, &w1643.reversed(), 6).unwrap());
    }

    #[test]
    fn triple_construction() {
        let t = Triple::new(int(-31), int(-11), int(39), SystemLabel::S21).unwrap();
        assert!(t.verify_chain());
        assert!(Triple::new(int(-31), int(-11), int(40), SystemLabel::S21).is_err());
        assert!(Triple::new(int(-31), int(0), int(39), SystemLabel::S21).is_err());
    }
}
