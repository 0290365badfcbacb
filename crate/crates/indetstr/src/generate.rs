//! Seeded generators for the property suites and the fuzz command.

use rand::Rng;

use crate::alphabet::Alphabet;
use crate::error::Result;
use crate::letter::Letter;
use crate::palindrome::PalindromeArray;
use crate::string::IndetString;

/// Uniformly random feasible palindrome array with 1..=max_n letters.
/// The bound and parity conditions are independent per position, so sampling
/// each position from its allowed set suffices.
pub fn random_feasible_mp<R: Rng>(rng: &mut R, max_n: usize) -> PalindromeArray {
    let n = rng.gen_range(1..=max_n);
    let m = 2 * n + 1;
    let mut values = vec![0u32; m];
    for j in 2..m {
        let lower = 1 - (j % 2);
        let upper = (j - 1).min(m - j);
        let choices = (upper - lower) / 2 + 1;
        values[j - 1] = (lower + 2 * rng.gen_range(0..choices)) as u32;
    }
    PalindromeArray::new(values)
}

/// Random string of length `n`; each position is a don't-care with
/// probability `dont_care_prob`, otherwise a uniformly random nonempty
/// character set of size at most `max_scope`.
pub fn random_string<R: Rng>(
    rng: &mut R,
    alphabet: &Alphabet,
    n: usize,
    max_scope: u32,
    dont_care_prob: f64,
) -> Result<IndetString> {
    let sigma = alphabet.sigma();
    let max_scope = max_scope.min(sigma).max(1);
    let letters = (0..n)
        .map(|_| {
            if rng.gen_bool(dont_care_prob) {
                return Ok(Letter::DontCare);
            }
            let scope = rng.gen_range(1..=max_scope);
            let mut ranks: Vec<u32> = Vec::with_capacity(scope as usize);
            while ranks.len() < scope as usize {
                let r = rng.gen_range(1..=sigma);
                if !ranks.contains(&r) {
                    ranks.push(r);
                }
            }
            Letter::from_ranks(ranks)
        })
        .collect::<Result<Vec<_>>>()?;
    IndetString::new(alphabet.clone(), letters)
}

/// Random scope-1 string of length `n`.
pub fn random_scope1_string<R: Rng>(
    rng: &mut R,
    alphabet: &Alphabet,
    n: usize,
) -> Result<IndetString> {
    let sigma = alphabet.sigma();
    let letters = (0..n)
        .map(|_| Letter::Regular(rng.gen_range(1..=sigma)))
        .collect();
    IndetString::new(alphabet.clone(), letters)
}

/// Random regular string drawn from a vocabulary of `vocab` pairwise
/// disjoint two-character letters, so the string has scope 2 but no
/// intransitive triple. Useful for timing the full check path.
pub fn random_disjoint_vocab_string<R: Rng>(
    rng: &mut R,
    vocab: u32,
    n: usize,
) -> Result<IndetString> {
    let sigma = 2 * vocab;
    let chars = (0..sigma).map(|i| {
        char::from_u32(0x100 + i).expect("valid scalar range")
    });
    let alphabet = Alphabet::with_config(chars, 16, None)?;
    let letters = (0..n)
        .map(|_| {
            let i = rng.gen_range(0..vocab);
            Letter::Indeterminate(vec![2 * i + 1, 2 * i + 2])
        })
        .collect();
    IndetString::new(alphabet, letters)
}
