//! Regularity testing: a string is regular when every triple of positions
//! `(i, j1, j2)` with `x[j1] ≈ x[i] ≈ x[j2]` also has `x[j1] ≈ x[j2]`.
//! Regular strings come with a lex-least scope-1 witness on an integer
//! alphabet; matching in a regular string is an equivalence relation, so the
//! same machinery computes transitive closures of reflexive-symmetric
//! relations.

use std::collections::HashMap;
use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::letter::{letters_match, Letter};
use crate::string::IndetString;

/// The distinct letters of a string in first-occurrence order, plus the map
/// from original positions back to reduced indices (0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedString {
    letters: Vec<Letter>,
    pos_map: Vec<usize>,
}

impl ReducedString {
    pub fn from_letters(letters: Vec<Letter>) -> Self {
        let mut seen: HashMap<Letter, usize> = HashMap::new();
        let mut distinct = Vec::new();
        let mut pos_map = Vec::with_capacity(letters.len());
        for letter in letters {
            let next = distinct.len();
            let idx = *seen.entry(letter.clone()).or_insert_with(|| {
                distinct.push(letter);
                next
            });
            pos_map.push(idx);
        }
        ReducedString {
            letters: distinct,
            pos_map,
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// For each original position, the index of its letter in [`Self::letters`].
    pub fn pos_map(&self) -> &[usize] {
        &self.pos_map
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// Single-scan reduction, deduplicating by exact normal-form equality (the
/// letter codes make this a hash of integers, not of character lists).
pub fn reduce(x: &IndetString) -> ReducedString {
    let codes = &x.encoding().codes;
    let mut index_of_code: HashMap<u32, usize> = HashMap::new();
    let mut letters = Vec::new();
    let mut pos_map = Vec::with_capacity(x.len());
    for (i, &code) in codes.iter().enumerate() {
        let next = letters.len();
        let idx = *index_of_code.entry(code).or_insert_with(|| {
            letters.push(x.letters()[i].clone());
            next
        });
        pos_map.push(idx);
    }
    ReducedString { letters, pos_map }
}

/// A scope-1 string on the integer alphabet `{1..=sigma_prime}`, isomorphic
/// to the string it witnesses. Class ids appear in first-occurrence order,
/// which makes the witness the lexicographically least among all isomorphic
/// scope-1 integer strings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularWitness {
    pub y: Vec<u32>,
    pub sigma_prime: u32,
}

impl RegularWitness {
    pub fn render(&self) -> String {
        let parts: Vec<String> = self.y.iter().map(u32::to_string).collect();
        parts.join(",")
    }
}

/// Left-to-right scan assigning class ids at each first unmatched position
/// and bailing out on the first intransitive triple. Returns the witness for
/// the reduced string, or `None` when it is indeterminate.
pub fn regular_min(xr: &ReducedString) -> Option<RegularWitness> {
    let letters = xr.letters();
    let m = letters.len();
    let mut y = vec![0u32; m];
    let mut sigma_prime = 0u32;
    for i in 0..m {
        if y[i] == 0 {
            sigma_prime += 1;
            y[i] = sigma_prime;
            for j in i + 1..m {
                if letters_match(&letters[j], &letters[i]) {
                    if y[j] == 0 {
                        y[j] = sigma_prime;
                    } else {
                        return None;
                    }
                }
            }
        } else {
            for j in i + 1..m {
                if y[j] == y[i] {
                    if !letters_match(&letters[j], &letters[i]) {
                        return None;
                    }
                } else if letters_match(&letters[j], &letters[i]) {
                    return None;
                }
            }
        }
    }
    Some(RegularWitness { y, sigma_prime })
}

/// Symmetric reflexive bit matrix of pairwise letter matches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchMatrix {
    m: usize,
    bits: Vec<bool>,
}

impl MatchMatrix {
    /// Wraps a row-major bit matrix, rejecting anything that is not
    /// reflexive and symmetric.
    pub fn new(m: usize, bits: Vec<bool>) -> Result<Self> {
        if bits.len() != m * m {
            return Err(Error::InvalidMatrix);
        }
        let mat = MatchMatrix { m, bits };
        for i in 0..m {
            if !mat.get(i, i) {
                return Err(Error::InvalidMatrix);
            }
            for j in i + 1..m {
                if mat.get(i, j) != mat.get(j, i) {
                    return Err(Error::InvalidMatrix);
                }
            }
        }
        Ok(mat)
    }

    /// The match matrix of a reduced string: entry `(i, j)` is set when the
    /// letters at reduced indices `i` and `j` match.
    pub fn from_reduced(xr: &ReducedString) -> Self {
        let letters = xr.letters();
        let m = letters.len();
        let mut bits = vec![false; m * m];
        for i in 0..m {
            bits[i * m + i] = true;
            for j in i + 1..m {
                let v = letters_match(&letters[i], &letters[j]);
                bits[i * m + j] = v;
                bits[j * m + i] = v;
            }
        }
        MatchMatrix { m, bits }
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    /// 0-based entry access.
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.m + j]
    }
}

/// Same contract and witness as [`regular_min`], reading the precomputed
/// matrix instead of comparing letters; O(m^2) with no letter work.
pub fn regular_min_matrix(mat: &MatchMatrix) -> Option<RegularWitness> {
    let m = mat.dim();
    let mut y = vec![0u32; m];
    let mut sigma_prime = 0u32;
    for i in 0..m {
        if y[i] == 0 {
            sigma_prime += 1;
            y[i] = sigma_prime;
            for j in i + 1..m {
                if mat.get(i, j) {
                    if y[j] == 0 {
                        y[j] = sigma_prime;
                    } else {
                        return None;
                    }
                }
            }
        } else {
            for j in i + 1..m {
                if y[j] == y[i] {
                    if !mat.get(i, j) {
                        return None;
                    }
                } else if mat.get(i, j) {
                    return None;
                }
            }
        }
    }
    Some(RegularWitness { y, sigma_prime })
}

/// Full regularity check. Scope-1 strings short-circuit to a first-occurrence
/// relabelling; everything else reduces, runs [`regular_min`], and maps the
/// reduced witness back through the position map.
pub fn regular_check(x: &IndetString) -> Option<RegularWitness> {
    if x.letters().iter().all(Letter::is_regular) {
        let mut class_of: HashMap<u32, u32> = HashMap::new();
        let mut sigma_prime = 0u32;
        let y = x
            .letters()
            .iter()
            .map(|l| match l {
                Letter::Regular(r) => *class_of.entry(*r).or_insert_with(|| {
                    sigma_prime += 1;
                    sigma_prime
                }),
                _ => unreachable!(),
            })
            .collect();
        return Some(RegularWitness { y, sigma_prime });
    }
    let xr = reduce(x);
    let w = regular_min(&xr)?;
    let y = xr.pos_map().iter().map(|&p| w.y[p]).collect();
    Some(RegularWitness {
        y,
        sigma_prime: w.sigma_prime,
    })
}

/// Which early-exit condition identified the string as indeterminate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScreenRule {
    /// All `sigma` regular letters occur together with an indeterminate letter.
    AllRegularPlusIndeterminate,
    /// A don't-care occurs together with two distinct regular letters.
    DontCareWithTwoRegular,
    /// An indeterminate letter occurs together with two of its own characters
    /// as regular letters.
    IndeterminateWithTwoOwnChars,
}

/// Single-pass screen for strings that are certainly indeterminate.
/// Returns `None` when no rule fires; that is not a claim of regularity.
pub fn quick_screen(x: &IndetString) -> Option<ScreenRule> {
    let sigma = x.alphabet().sigma() as usize;
    let mut regular_present = vec![false; sigma + 1];
    let mut distinct_regular = 0u32;
    let mut has_dont_care = false;
    let mut has_indeterminate = false;
    for letter in x.letters() {
        match letter {
            Letter::Regular(r) => {
                if !regular_present[*r as usize] {
                    regular_present[*r as usize] = true;
                    distinct_regular += 1;
                }
            }
            Letter::DontCare => has_dont_care = true,
            Letter::Indeterminate(_) => has_indeterminate = true,
        }
    }
    if has_indeterminate && distinct_regular == sigma as u32 {
        return Some(ScreenRule::AllRegularPlusIndeterminate);
    }
    if has_dont_care && distinct_regular >= 2 {
        return Some(ScreenRule::DontCareWithTwoRegular);
    }
    if has_indeterminate {
        for letter in x.letters() {
            if let Letter::Indeterminate(ranks) = letter {
                let hits = ranks
                    .iter()
                    .filter(|&&r| regular_present[r as usize])
                    .count();
                if hits >= 2 {
                    return Some(ScreenRule::IndeterminateWithTwoOwnChars);
                }
            }
        }
    }
    None
}

/// A partition of `m` items into classes `1..=k`, ids in first-occurrence
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    class_of: Vec<u32>,
}

impl Partition {
    pub fn class_of(&self) -> &[u32] {
        &self.class_of
    }

    pub fn class_count(&self) -> u32 {
        self.class_of.iter().copied().max().unwrap_or(0)
    }
}

/// Transitive closure of a reflexive-symmetric relation, as the partition
/// into connected components of its graph. Each row is scanned once per
/// dequeued vertex, so the whole computation is O(m^2).
pub fn transitive_closure(mat: &MatchMatrix) -> Partition {
    let m = mat.dim();
    let mut class_of = vec![0u32; m];
    let mut next = 0u32;
    let mut queue = VecDeque::new();
    for start in 0..m {
        if class_of[start] != 0 {
            continue;
        }
        next += 1;
        class_of[start] = next;
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            for j in 0..m {
                if mat.get(v, j) && class_of[j] == 0 {
                    class_of[j] = next;
                    queue.push_back(j);
                }
            }
        }
    }
    Partition { class_of }
}
