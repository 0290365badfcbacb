use std::collections::HashMap;

use crate::error::{Error, Result};

/// Characters that cannot appear in an alphabet because the text format
/// claims them.
pub const RESERVED_CHARS: [char; 5] = ['{', '}', ',', '*', '#'];

/// An ordered base alphabet plus the storage budget for letter codes.
///
/// Characters are ranked `1..=sigma` in declaration order; the order is what
/// defines the normal form of indeterminate letters and the lex-least
/// witness. Code `0` is reserved for the don't-care, codes `1..=sigma` for
/// regular letters, and up to `sigma_star` further codes for distinct
/// indeterminate letters, so `sigma + sigma_star + 1` must fit in
/// `code_width_bits` bits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    chars: Vec<char>,
    rank_of: HashMap<char, u32>,
    sigma_star: u32,
    code_width_bits: u8,
}

impl Alphabet {
    /// Alphabet with an 8-bit code budget and the maximum indeterminate
    /// capacity that fits.
    pub fn new<I: IntoIterator<Item = char>>(chars: I) -> Result<Self> {
        Self::with_config(chars, 8, None)
    }

    /// Alphabet with an explicit code width (1..=32 bits) and optional
    /// indeterminate capacity. `None` takes the full remaining code space:
    /// `2^width - 1 - sigma`.
    pub fn with_config<I: IntoIterator<Item = char>>(
        chars: I,
        code_width_bits: u8,
        sigma_star: Option<u32>,
    ) -> Result<Self> {
        let chars: Vec<char> = chars.into_iter().collect();
        if chars.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        let mut rank_of = HashMap::with_capacity(chars.len());
        for (i, &ch) in chars.iter().enumerate() {
            if RESERVED_CHARS.contains(&ch) {
                return Err(Error::ReservedChar { ch });
            }
            if rank_of.insert(ch, (i + 1) as u32).is_some() {
                return Err(Error::DuplicateAlphabetChar { ch });
            }
        }
        if code_width_bits == 0 || code_width_bits > 32 {
            return Err(Error::CodeWidthOverflow {
                width: code_width_bits,
                needed: chars.len() as u64 + 1,
            });
        }
        let space = 1u64 << code_width_bits;
        let sigma = chars.len() as u64;
        let sigma_star = match sigma_star {
            Some(s) => {
                let needed = sigma + s as u64 + 1;
                if needed > space {
                    return Err(Error::CodeWidthOverflow {
                        width: code_width_bits,
                        needed,
                    });
                }
                s
            }
            None => {
                if sigma + 1 > space {
                    return Err(Error::CodeWidthOverflow {
                        width: code_width_bits,
                        needed: sigma + 1,
                    });
                }
                (space - 1 - sigma) as u32
            }
        };
        Ok(Alphabet {
            chars,
            rank_of,
            sigma_star,
            code_width_bits,
        })
    }

    /// The DNA preset: `a,c,g,t` with half-byte codes, leaving room for all
    /// eleven multi-character subsets.
    pub fn dna() -> Self {
        Self::with_config("acgt".chars(), 4, None).expect("dna preset is valid")
    }

    /// Number of base characters.
    pub fn sigma(&self) -> u32 {
        self.chars.len() as u32
    }

    /// Maximum number of distinct indeterminate letters a string may use.
    pub fn sigma_star(&self) -> u32 {
        self.sigma_star
    }

    pub fn code_width_bits(&self) -> u8 {
        self.code_width_bits
    }

    /// 1-based rank of a character, if it belongs to the alphabet.
    pub fn rank(&self, ch: char) -> Option<u32> {
        self.rank_of.get(&ch).copied()
    }

    /// Character with the given 1-based rank.
    pub fn char_at(&self, rank: u32) -> Option<char> {
        if rank == 0 {
            return None;
        }
        self.chars.get(rank as usize - 1).copied()
    }

    /// Characters in rank order.
    pub fn chars(&self) -> &[char] {
        &self.chars
    }
}
