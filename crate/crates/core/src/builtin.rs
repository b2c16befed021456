//! Bundled reference instances.

use alloc::vec;
use alloc::vec::Vec;

use crate::{rat, ratio, PiInstance, Rational};

fn ints(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
    rows.iter()
        .map(|r| r.iter().map(|&v| rat(v)).collect())
        .collect()
}

fn demands(rows: &[&[u64]]) -> Vec<Vec<u64>> {
    rows.iter().map(|r| r.to_vec()).collect()
}

fn example1_with(p2_last: Rational) -> PiInstance {
    PiInstance::new(
        demands(&[&[10, 10, 5], &[8, 12, 6], &[6, 5, 2]]),
        vec![
            vec![rat(1), rat(2), rat(1)],
            vec![rat(2), rat(1), p2_last],
            vec![rat(3), rat(1), rat(1)],
        ],
        ints(&[&[1, 1], &[1, 1], &[1, 1]]),
        ints(&[&[1, 1], &[1, 1], &[2, 2]]),
    )
    .expect("valid instance")
}

/// Three players, three periods, a single essential player (player 0).
///
/// Player 1 produces at `4/3` in the last period. With the printed cost of 1
/// its stand-alone cost is 34, not the published 36; `4/3` is the smallest
/// change that reproduces the whole published table (35, 36, 25, 51, 38, 53,
/// 64) while leaving every dual price of the other coalitions untouched.
pub fn example1() -> PiInstance {
    example1_with(ratio(4, 3))
}

/// [`example1`] with the cost data exactly as printed.
pub fn example1_printed() -> PiInstance {
    example1_with(rat(1))
}

/// Four players, four periods; every player is the cheap producer of exactly
/// one period.
pub fn example3() -> PiInstance {
    PiInstance::new(
        demands(&[&[2, 1, 2, 2], &[2, 2, 1, 2], &[2, 1, 2, 2], &[2, 1, 1, 2]]),
        ints(&[&[1, 2, 2, 2], &[2, 1, 2, 2], &[2, 2, 1, 2], &[2, 2, 2, 1]]),
        ints(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]),
        ints(&[&[2, 2, 2], &[2, 2, 2], &[2, 2, 2], &[2, 2, 2]]),
    )
    .expect("valid instance")
}

/// Three players, three periods; a concave game whose Shapley value and
/// nucleolus differ.
///
/// Player 0 demands `(10, 10, 5)` and player 1 holds at `(1, 1)`: these are
/// the values that reproduce the published coalition costs
/// (45, 50, 70, 70, 75, 80, 85).
pub fn example4() -> PiInstance {
    PiInstance::new(
        demands(&[&[10, 10, 5], &[10, 10, 10], &[10, 10, 10]]),
        ints(&[&[1, 2, 3], &[2, 1, 3], &[3, 3, 1]]),
        ints(&[&[1, 2], &[1, 1], &[1, 2]]),
        ints(&[&[1, 1], &[1, 1], &[2, 2]]),
    )
    .expect("valid instance")
}

/// [`example4`] with the cost data exactly as printed.
pub fn example4_printed() -> PiInstance {
    PiInstance::new(
        demands(&[&[10, 10, 10], &[10, 10, 10], &[10, 10, 10]]),
        ints(&[&[1, 2, 3], &[2, 1, 3], &[3, 3, 1]]),
        ints(&[&[1, 2], &[1, 2], &[1, 2]]),
        ints(&[&[1, 1], &[1, 1], &[2, 2]]),
    )
    .expect("valid instance")
}

/// `n` players over `n` periods, unit demands, holding and backlogging at 2;
/// player 0 produces at `1/n`, everyone else at 1. The core has exponentially
/// many vertices in `n`.
///
/// # Panics
/// When `n == 0`.
pub fn exponential_family(n: usize) -> PiInstance {
    assert!(n >= 1);
    let cheap = ratio(1, n as i64);
    let production = (0..n)
        .map(|i| {
            if i == 0 {
                vec![cheap.clone(); n]
            } else {
                vec![rat(1); n]
            }
        })
        .collect();
    PiInstance::new(
        vec![vec![1; n]; n],
        production,
        vec![vec![rat(2); n - 1]; n],
        vec![vec![rat(2); n - 1]; n],
    )
    .expect("valid instance")
}

/// Resolves `example1`, `example3`, `example4`, `example1-printed`,
/// `example4-printed` or `expfamily:<n>` with `2 <= n <= 8`.
pub fn by_name(name: &str) -> Option<PiInstance> {
    match name {
        "example1" => Some(example1()),
        "example3" => Some(example3()),
        "example4" => Some(example4()),
        "example1-printed" => Some(example1_printed()),
        "example4-printed" => Some(example4_printed()),
        _ => {
            let n: usize = name.strip_prefix("expfamily:")?.parse().ok()?;
            (2..=8).contains(&n).then(|| exponential_family(n))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_resolve() {
        assert_eq!(by_name("example1"), Some(example1()));
        assert_eq!(by_name("example4-printed"), Some(example4_printed()));
        assert_eq!(by_name("expfamily:3"), Some(exponential_family(3)));
        for bad in ["expfamily:1", "expfamily:9", "expfamily:", "example2", ""] {
            assert!(by_name(bad).is_none(), "{bad}");
        }
    }

    #[test]
    fn encodings() {
        let e1 = example1();
        assert_eq!((e1.players(), e1.periods()), (3, 3));
        assert_eq!(e1.demand()[0], [10, 10, 5]);

        let f3 = exponential_family(3);
        assert!(f3.production()[0].iter().all(|p| *p == ratio(1, 3)));
        assert!(f3.demand().iter().flatten().all(|&d| d == 1));

        let e3 = example3();
        assert_eq!((e3.players(), e3.periods()), (4, 4));
        assert!(e3.backlog().iter().flatten().all(|b| *b == rat(2)));
    }
}
