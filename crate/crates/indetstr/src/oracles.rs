//! Brute-force reference implementations, written straight from the
//! definitions and sharing no code with the fast paths they check. They are
//! exponential or cubic and meant for small inputs only; the CLI reaches
//! them through `--oracle`.

use crate::error::{Error, Result};
use crate::letter::letters_match;
use crate::palindrome::{star_cells_match, PalindromeArray, StarString};
use crate::regularity::RegularWitness;
use crate::string::IndetString;

/// Checks every triple of distinct positions `(i, j1, j2)` with
/// `x[j1] ≈ x[i] ≈ x[j2]` for `x[j1] ≈ x[j2]`. O(n^3) after an O(n^2)
/// match table.
pub fn oracle_is_regular(x: &IndetString) -> bool {
    let letters = x.letters();
    let n = letters.len();
    let mut matches = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            matches[i * n + j] = letters_match(&letters[i], &letters[j]);
        }
    }
    for i in 0..n {
        for j1 in 0..n {
            if j1 == i || !matches[i * n + j1] {
                continue;
            }
            for j2 in j1 + 1..n {
                if j2 == i || !matches[i * n + j2] {
                    continue;
                }
                if !matches[j1 * n + j2] {
                    return false;
                }
            }
        }
    }
    true
}

/// Per-centre outward expansion with no reuse of earlier radii.
pub fn oracle_mp(xs: &StarString) -> PalindromeArray {
    let cells = xs.cells();
    let m = cells.len();
    let mut values = vec![0u32; m];
    for c in 0..m {
        let mut r = 0usize;
        loop {
            if c < r + 1 || c + r + 1 >= m {
                break;
            }
            if !star_cells_match(&cells[c - r - 1], &cells[c + r + 1]) {
                break;
            }
            r += 1;
        }
        values[c] = r as u32;
    }
    PalindromeArray::new(values)
}

/// Exhaustive lex-least witness: enumerates every labelling of the distinct
/// letters and keeps the smallest full relabelling consistent with the match
/// relation. Only defined for regular strings with at most six distinct
/// letters.
pub fn oracle_lex_least(x: &IndetString) -> Result<RegularWitness> {
    if !oracle_is_regular(x) {
        return Err(Error::InvalidMatrix);
    }
    let letters = x.letters();
    // Distinct letters in first-occurrence order, by direct comparison.
    let mut distinct: Vec<usize> = Vec::new();
    let mut index_of: Vec<usize> = Vec::with_capacity(letters.len());
    for (i, letter) in letters.iter().enumerate() {
        match distinct.iter().position(|&d| letters[d] == *letter) {
            Some(idx) => index_of.push(idx),
            None => {
                index_of.push(distinct.len());
                distinct.push(i);
            }
        }
    }
    let m = distinct.len();
    if m > 6 {
        return Err(Error::CapacityExceeded {
            distinct: m as u32,
            sigma_star: 6,
        });
    }
    let mut best: Option<Vec<u32>> = None;
    let mut labels = vec![1u32; m];
    loop {
        let consistent = (0..m).all(|i| {
            (i + 1..m).all(|j| {
                let matched = letters_match(&letters[distinct[i]], &letters[distinct[j]]);
                matched == (labels[i] == labels[j])
            })
        });
        if consistent {
            let y: Vec<u32> = index_of.iter().map(|&d| labels[d]).collect();
            if best.as_ref().is_none_or(|b| y < *b) {
                best = Some(y);
            }
        }
        // Odometer over {1..=m}^m.
        let mut pos = m;
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            if labels[pos] < m as u32 {
                labels[pos] += 1;
                break;
            }
            labels[pos] = 1;
        }
        if pos == 0 && labels[0] == 1 {
            break;
        }
    }
    let y = best.expect("a regular string always has a consistent labelling");
    let sigma_prime = y.iter().copied().max().unwrap_or(0);
    Ok(RegularWitness { y, sigma_prime })
}
