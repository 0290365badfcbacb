use std::collections::HashMap;
use std::fmt;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::letter::Letter;

/// The compact integer-code form of a string.
///
/// `codes[i]` is 0 for the don't-care, the character rank for a regular
/// letter, or `sigma + slot` for the `slot`-th distinct indeterminate letter
/// in first-occurrence order. `i_table[slot-1] = (scope, loc)` points at the
/// letter's characters, which sit contiguously and in ascending order at
/// `l_pool[loc-1 .. loc-1+scope]` (`loc` is 1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Encoding {
    pub codes: Vec<u32>,
    pub i_table: Vec<(u32, u32)>,
    pub l_pool: Vec<u32>,
}

/// A nonempty sequence of letters over a fixed alphabet, stored together
/// with its integer-code form.
///
/// Values are immutable after construction; every operation on them is a
/// pure function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndetString {
    alphabet: Alphabet,
    letters: Vec<Letter>,
    encoding: Encoding,
}

impl IndetString {
    /// Validates the letters against the alphabet and builds the encoding.
    ///
    /// Fails if the string is empty, a rank exceeds `sigma`, or the number
    /// of distinct indeterminate letters exceeds `sigma_star`.
    pub fn new(alphabet: Alphabet, letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::EmptyString);
        }
        let sigma = alphabet.sigma();
        for letter in &letters {
            if let Some(max) = letter.max_rank() {
                if max > sigma {
                    return Err(Error::RankOutOfRange { rank: max, sigma });
                }
            }
        }
        let encoding = encode(&alphabet, &letters)?;
        Ok(IndetString {
            alphabet,
            letters,
            encoding,
        })
    }

    /// Parses the text format: regular letters as single characters,
    /// indeterminate letters as `{c1,c2,...}`, the don't-care as `*`.
    ///
    /// Brace contents are normalized to ascending order; `{c}` collapses to
    /// the regular letter `c`; `{}`, duplicate characters and characters
    /// outside the alphabet are rejected with a 1-based position.
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self> {
        let letters = parse_letters(text, alphabet, false)?
            .into_iter()
            .map(|(_, letter)| letter.expect("'#' is rejected outside star strings"))
            .collect();
        Self::new(alphabet.clone(), letters)
    }

    /// Rebuilds a string from its integer-code form. Exact inverse of the
    /// encoding for every valid input.
    pub fn decode(
        alphabet: &Alphabet,
        codes: &[u32],
        i_table: &[(u32, u32)],
        l_pool: &[u32],
    ) -> Result<Self> {
        let sigma = alphabet.sigma();
        let mut cache: HashMap<u32, Letter> = HashMap::new();
        let mut letters = Vec::with_capacity(codes.len());
        for &code in codes {
            let letter = if code == 0 {
                Letter::DontCare
            } else if code <= sigma {
                Letter::Regular(code)
            } else {
                let slot = (code - sigma) as usize;
                if slot > i_table.len() {
                    return Err(Error::DanglingCode { code });
                }
                if let Some(cached) = cache.get(&code) {
                    cached.clone()
                } else {
                    let letter = decode_slot(sigma, i_table, l_pool, slot)?;
                    cache.insert(code, letter.clone());
                    letter
                }
            };
            letters.push(letter);
        }
        Self::new(alphabet.clone(), letters)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty strings
    }

    /// String scope: the maximum letter scope over all positions.
    pub fn scope(&self) -> u32 {
        let sigma = self.alphabet.sigma();
        self.letters
            .iter()
            .map(|l| l.scope(sigma))
            .max()
            .unwrap_or(0)
    }

    /// The integer-code form, built at construction time.
    pub fn encoding(&self) -> &Encoding {
        &self.encoding
    }

    /// Renders the text format; inverse of [`IndetString::parse`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for letter in &self.letters {
            render_letter(&mut out, letter, &self.alphabet);
        }
        out
    }
}

impl fmt::Display for IndetString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

pub(crate) fn render_letter(out: &mut String, letter: &Letter, alphabet: &Alphabet) {
    match letter {
        Letter::DontCare => out.push('*'),
        Letter::Regular(r) => out.push(alphabet.char_at(*r).expect("rank in range")),
        Letter::Indeterminate(ranks) => {
            out.push('{');
            for (i, r) in ranks.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push(alphabet.char_at(*r).expect("rank in range"));
            }
            out.push('}');
        }
    }
}

fn encode(alphabet: &Alphabet, letters: &[Letter]) -> Result<Encoding> {
    let sigma = alphabet.sigma();
    let mut codes = Vec::with_capacity(letters.len());
    let mut i_table: Vec<(u32, u32)> = Vec::new();
    let mut l_pool: Vec<u32> = Vec::new();
    let mut slot_of: HashMap<&[u32], u32> = HashMap::new();
    for letter in letters {
        let code = match letter {
            Letter::DontCare => 0,
            Letter::Regular(r) => *r,
            Letter::Indeterminate(ranks) => {
                if let Some(&code) = slot_of.get(ranks.as_slice()) {
                    code
                } else {
                    let slot = i_table.len() as u32 + 1;
                    if slot > alphabet.sigma_star() {
                        return Err(Error::CapacityExceeded {
                            distinct: slot,
                            sigma_star: alphabet.sigma_star(),
                        });
                    }
                    let loc = l_pool.len() as u32 + 1;
                    i_table.push((ranks.len() as u32, loc));
                    l_pool.extend_from_slice(ranks);
                    let code = sigma + slot;
                    slot_of.insert(ranks.as_slice(), code);
                    code
                }
            }
        };
        codes.push(code);
    }
    Ok(Encoding {
        codes,
        i_table,
        l_pool,
    })
}

fn decode_slot(sigma: u32, i_table: &[(u32, u32)], l_pool: &[u32], slot: usize) -> Result<Letter> {
    let (scope, loc) = i_table[slot - 1];
    if scope < 2 {
        return Err(Error::PoolScope { slot, scope });
    }
    if loc == 0 || (loc - 1 + scope) as usize > l_pool.len() {
        return Err(Error::PoolRange { slot });
    }
    let seg = &l_pool[(loc - 1) as usize..(loc - 1 + scope) as usize];
    for pair in seg.windows(2) {
        if pair[0] >= pair[1] {
            return Err(Error::PoolOrder { slot });
        }
    }
    if seg[0] == 0 || *seg.last().unwrap() > sigma {
        return Err(Error::PoolOrder { slot });
    }
    Ok(Letter::Indeterminate(seg.to_vec()))
}

/// Shared letter lexer for plain strings and separator-expanded strings.
/// Yields `(position, letter)` pairs with 1-based character positions;
/// `allow_hash` admits `#` and reports it as a `None` letter via the
/// sentinel below.
pub(crate) fn parse_letters(
    text: &str,
    alphabet: &Alphabet,
    allow_hash: bool,
) -> Result<Vec<(usize, Option<Letter>)>> {
    let mut out = Vec::new();
    let mut chars = text.chars().enumerate().peekable();
    while let Some((idx, ch)) = chars.next() {
        let pos = idx + 1;
        match ch {
            '#' if allow_hash => out.push((pos, None)),
            '*' => out.push((pos, Some(Letter::DontCare))),
            '{' => {
                let mut ranks: Vec<u32> = Vec::new();
                loop {
                    match chars.next() {
                        Some((cidx, '}')) => {
                            if ranks.is_empty() {
                                return Err(Error::Parse {
                                    pos: cidx + 1,
                                    msg: "empty letter {}".into(),
                                });
                            }
                            return Err(Error::Parse {
                                pos: cidx + 1,
                                msg: "expected a character before '}'".into(),
                            });
                        }
                        Some((cidx, c)) => {
                            let rank = alphabet.rank(c).ok_or(Error::Parse {
                                pos: cidx + 1,
                                msg: format!("character {c:?} is not in the alphabet"),
                            })?;
                            if ranks.contains(&rank) {
                                return Err(Error::Parse {
                                    pos: cidx + 1,
                                    msg: format!("duplicate character {c:?} in letter"),
                                });
                            }
                            ranks.push(rank);
                        }
                        None => {
                            return Err(Error::Parse {
                                pos: text.chars().count(),
                                msg: "unclosed '{'".into(),
                            })
                        }
                    }
                    match chars.next() {
                        Some((_, ',')) => continue,
                        Some((_, '}')) => break,
                        Some((cidx, c)) => {
                            return Err(Error::Parse {
                                pos: cidx + 1,
                                msg: format!("expected ',' or '}}', found {c:?}"),
                            })
                        }
                        None => {
                            return Err(Error::Parse {
                                pos: text.chars().count(),
                                msg: "unclosed '{'".into(),
                            })
                        }
                    }
                }
                ranks.sort_unstable();
                let letter = if ranks.len() == 1 {
                    Letter::Regular(ranks[0])
                } else {
                    Letter::Indeterminate(ranks)
                };
                out.push((pos, Some(letter)));
            }
            '}' | ',' => {
                return Err(Error::Parse {
                    pos,
                    msg: format!("unexpected {ch:?}"),
                })
            }
            c => {
                let rank = alphabet.rank(c).ok_or(Error::Parse {
                    pos,
                    msg: format!("character {c:?} is not in the alphabet"),
                })?;
                out.push((pos, Some(Letter::Regular(rank))));
            }
        }
    }
    if out.is_empty() {
        return Err(Error::EmptyString);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abcd() -> Alphabet {
        Alphabet::new("abcd".chars()).unwrap()
    }

    #[test]
    fn parses_running_example() {
        let x = IndetString::parse("a{a,c}b{a,d}bb", &abcd()).unwrap();
        assert_eq!(x.len(), 6);
        assert!(x.letters()[1].is_indeterminate());
        assert!(x.letters()[3].is_indeterminate());
        assert_eq!(x.scope(), 2);
        assert_eq!(x.to_text(), "a{a,c}b{a,d}bb");
    }

    #[test]
    fn all_regular_string_has_scope_one() {
        let x = IndetString::parse("aaa", &abcd()).unwrap();
        assert_eq!(x.scope(), 1);
        assert!(x.letters().iter().all(Letter::is_regular));
    }

    #[test]
    fn braces_normalize_to_ascending_order() {
        let x = IndetString::parse("a{c,a}b", &abcd()).unwrap();
        assert_eq!(x.letters()[1], Letter::Indeterminate(vec![1, 3]));
        assert_eq!(x.to_text(), "a{a,c}b");
    }

    #[test]
    fn singleton_brace_collapses_to_regular() {
        let x = IndetString::parse("{a}b", &abcd()).unwrap();
        assert_eq!(x.letters()[0], Letter::Regular(1));
    }

    #[test]
    fn single_letter_scope_is_its_size() {
        let a = Alphabet::new("acg".chars()).unwrap();
        let x = IndetString::parse("{a,c,g}", &a).unwrap();
        assert_eq!(x.scope(), 3);
    }

    #[test]
    fn dont_care_scope_is_sigma() {
        let x = IndetString::parse("a*b", &abcd()).unwrap();
        assert_eq!(x.scope(), 4);
    }

    #[test]
    fn parse_errors_carry_positions() {
        let a = abcd();
        assert!(matches!(
            IndetString::parse("a{}b", &a),
            Err(Error::Parse { pos: 3, .. })
        ));
        assert!(matches!(
            IndetString::parse("axb", &a),
            Err(Error::Parse { pos: 2, .. })
        ));
        assert!(matches!(
            IndetString::parse("{a,a}", &a),
            Err(Error::Parse { pos: 4, .. })
        ));
        assert!(matches!(
            IndetString::parse("{a,b", &a),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            IndetString::parse("{ab}", &a),
            Err(Error::Parse { pos: 3, .. })
        ));
        assert_eq!(IndetString::parse("", &a), Err(Error::EmptyString));
    }

    #[test]
    fn dna_worked_example_encoding() {
        let a = Alphabet::dna();
        let x = IndetString::parse("aac{a,c}gta{g,t}{a,c}{g,t}", &a).unwrap();
        let enc = x.encoding();
        assert_eq!(enc.codes, vec![1, 1, 2, 5, 3, 4, 1, 6, 5, 6]);
        assert_eq!(enc.i_table, vec![(2, 1), (2, 3)]);
        assert_eq!(enc.l_pool, vec![1, 2, 3, 4]);
    }

    #[test]
    fn all_regular_encoding_has_empty_tables() {
        let x = IndetString::parse("acgt", &Alphabet::dna()).unwrap();
        assert_eq!(x.encoding().codes, vec![1, 2, 3, 4]);
        assert!(x.encoding().i_table.is_empty());
        assert!(x.encoding().l_pool.is_empty());
    }

    #[test]
    fn dont_care_encodes_as_zero() {
        let x = IndetString::parse("*", &Alphabet::dna()).unwrap();
        assert_eq!(x.encoding().codes, vec![0]);
    }

    #[test]
    fn decode_inverts_encode() {
        let a = Alphabet::dna();
        let x = IndetString::parse("aac{a,c}gta{g,t}{a,c}{g,t}", &a).unwrap();
        let enc = x.encoding().clone();
        let back = IndetString::decode(&a, &enc.codes, &enc.i_table, &enc.l_pool).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn decode_hand_layout() {
        let a = Alphabet::dna();
        let x = IndetString::decode(&a, &[5], &[(2, 1)], &[1, 2]).unwrap();
        assert_eq!(x.letters(), &[Letter::Indeterminate(vec![1, 2])]);
        assert_eq!(x.to_text(), "{a,c}");

        let x = IndetString::decode(&a, &[1, 1, 1], &[], &[]).unwrap();
        assert_eq!(x.to_text(), "aaa");
    }

    #[test]
    fn decode_rejects_bad_tables() {
        let a = Alphabet::dna();
        assert_eq!(
            IndetString::decode(&a, &[7], &[(2, 1)], &[1, 2]),
            Err(Error::DanglingCode { code: 7 })
        );
        assert_eq!(
            IndetString::decode(&a, &[5], &[(2, 2)], &[1, 2]),
            Err(Error::PoolRange { slot: 1 })
        );
        assert_eq!(
            IndetString::decode(&a, &[5], &[(2, 1)], &[2, 1]),
            Err(Error::PoolOrder { slot: 1 })
        );
        assert_eq!(
            IndetString::decode(&a, &[5], &[(1, 1)], &[1]),
            Err(Error::PoolScope { slot: 1, scope: 1 })
        );
    }

    #[test]
    fn capacity_is_enforced() {
        let a = Alphabet::with_config("abcd".chars(), 8, Some(1)).unwrap();
        assert!(IndetString::parse("{a,b}{a,b}", &a).is_ok());
        assert_eq!(
            IndetString::parse("{a,b}{c,d}", &a),
            Err(Error::CapacityExceeded {
                distinct: 2,
                sigma_star: 1
            })
        );
    }

    #[test]
    fn values_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Alphabet>();
        assert_send_sync::<Letter>();
        assert_send_sync::<IndetString>();
        assert_send_sync::<Encoding>();
    }

    #[test]
    fn reparse_is_identity() {
        let a = abcd();
        for text in ["a{a,c}b{a,d}bb", "*a{b,c,d}", "{d,a}c"] {
            let x = IndetString::parse(text, &a).unwrap();
            let y = IndetString::parse(&x.to_text(), &a).unwrap();
            assert_eq!(x, y);
            assert_eq!(x.to_text(), y.to_text());
        }
    }
}
