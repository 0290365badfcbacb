//! Maximal palindrome arrays and their reverse engineering.
//!
//! A string `x[1..n]` is analysed through its separator expansion
//! `x*[1..m] = # x1 # x2 # ... # xn #` with `m = 2n+1`, so every palindrome
//! has an integral centre. `MP[c]` is the radius of the maximal palindrome
//! centred at `c`: the largest `r` such that `x*[c-h] ≈ x*[c+h]` for all
//! `1 <= h <= r` and the extension is blocked by a mismatch or a boundary.
//!
//! Going the other way, any array satisfying the feasibility bounds
//! corresponds to some string. [`construct`] produces the lexicographically
//! least scope-1 string whenever the array admits one (verified through
//! Manacher's consistency condition between nested radii) and otherwise
//! falls back to an indeterminate string, repairing each violated match
//! with a fresh character shared by the two positions.

use std::fmt;

use crate::alphabet::Alphabet;
use crate::error::{Error, Infeasibility, Result};
use crate::letter::{letters_match, Letter};
use crate::string::{parse_letters, render_letter, IndetString};

/// One position of a separator-expanded string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StarCell {
    /// The `#` separator; matches only itself.
    Separator,
    Letter(Letter),
}

/// A separator-expanded string: odd length `m = 2n+1 >= 3`, separators at
/// odd positions (1-based), letters at even positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarString {
    cells: Vec<StarCell>,
}

impl StarString {
    pub fn new(cells: Vec<StarCell>) -> Result<Self> {
        if cells.len() < 3 || cells.len() % 2 == 0 {
            return Err(Error::MalformedStar {
                msg: format!("length {} is not an odd number >= 3", cells.len()),
            });
        }
        for (i, cell) in cells.iter().enumerate() {
            let want_sep = i % 2 == 0;
            match (want_sep, cell) {
                (true, StarCell::Separator) | (false, StarCell::Letter(_)) => {}
                (true, _) => {
                    return Err(Error::MalformedStar {
                        msg: format!("expected '#' at position {}", i + 1),
                    })
                }
                (false, _) => {
                    return Err(Error::MalformedStar {
                        msg: format!("expected a letter at position {}", i + 1),
                    })
                }
            }
        }
        Ok(StarString { cells })
    }

    /// Parses the text format with `#` separators, e.g. `#a#{a,b}#c#`.
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self> {
        let cells = parse_letters(text, alphabet, true)?
            .into_iter()
            .map(|(_, letter)| match letter {
                Some(l) => StarCell::Letter(l),
                None => StarCell::Separator,
            })
            .collect();
        Self::new(cells)
    }

    pub fn cells(&self) -> &[StarCell] {
        &self.cells
    }

    /// Length `m` of the expanded string.
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        false // at least `#x#`
    }

    /// 1-based cell access.
    pub fn cell(&self, pos: usize) -> &StarCell {
        &self.cells[pos - 1]
    }

    /// True when every letter is a single character (and so matching within
    /// the star string is plain equality).
    pub fn is_scope_one(&self) -> bool {
        self.cells.iter().all(|c| match c {
            StarCell::Separator => true,
            StarCell::Letter(l) => l.is_regular(),
        })
    }

    /// Renders against a character alphabet; fails if a rank exceeds it.
    pub fn to_text(&self, alphabet: &Alphabet) -> Result<String> {
        let mut out = String::new();
        for cell in &self.cells {
            match cell {
                StarCell::Separator => out.push('#'),
                StarCell::Letter(l) => {
                    if let Some(max) = l.max_rank() {
                        if max > alphabet.sigma() {
                            return Err(Error::RankOutOfRange {
                                rank: max,
                                sigma: alphabet.sigma(),
                            });
                        }
                    }
                    render_letter(&mut out, l, alphabet);
                }
            }
        }
        Ok(out)
    }

    /// Renders ranks as decimal integers, the native form of constructed
    /// strings: `#1#{2,3}#...#`.
    pub fn to_int_text(&self) -> String {
        let mut out = String::new();
        for cell in &self.cells {
            match cell {
                StarCell::Separator => out.push('#'),
                StarCell::Letter(Letter::DontCare) => out.push('*'),
                StarCell::Letter(Letter::Regular(r)) => out.push_str(&r.to_string()),
                StarCell::Letter(Letter::Indeterminate(ranks)) => {
                    out.push('{');
                    for (i, r) in ranks.iter().enumerate() {
                        if i > 0 {
                            out.push(',');
                        }
                        out.push_str(&r.to_string());
                    }
                    out.push('}');
                }
            }
        }
        out
    }
}

/// `# x1 # x2 # ... # xn #`.
pub fn expand(x: &IndetString) -> StarString {
    let mut cells = Vec::with_capacity(2 * x.len() + 1);
    cells.push(StarCell::Separator);
    for letter in x.letters() {
        cells.push(StarCell::Letter(letter.clone()));
        cells.push(StarCell::Separator);
    }
    StarString { cells }
}

/// Exact inverse of [`expand`]; the alphabet supplies the character context
/// the star string itself does not carry.
pub fn strip(xs: &StarString, alphabet: &Alphabet) -> Result<IndetString> {
    let letters = xs
        .cells
        .iter()
        .filter_map(|c| match c {
            StarCell::Letter(l) => Some(l.clone()),
            StarCell::Separator => None,
        })
        .collect();
    IndetString::new(alphabet.clone(), letters)
}

/// Match relation lifted to star cells: `#` matches only `#`.
pub fn star_cells_match(a: &StarCell, b: &StarCell) -> bool {
    match (a, b) {
        (StarCell::Separator, StarCell::Separator) => true,
        (StarCell::Letter(x), StarCell::Letter(y)) => letters_match(x, y),
        _ => false,
    }
}

/// A maximal palindrome array; values use 1-based position semantics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PalindromeArray {
    values: Vec<u32>,
}

impl PalindromeArray {
    pub fn new(values: Vec<u32>) -> Self {
        PalindromeArray { values }
    }

    /// Parses one line of whitespace-separated non-negative integers.
    pub fn parse_line(line: &str) -> Result<Self> {
        let mut values = Vec::new();
        for (i, token) in line.split_whitespace().enumerate() {
            let v: u32 = token.parse().map_err(|_| Error::Parse {
                pos: i + 1,
                msg: format!("{token:?} is not a non-negative integer"),
            })?;
            values.push(v);
        }
        if values.is_empty() {
            return Err(Error::EmptyString);
        }
        Ok(PalindromeArray { values })
    }

    pub fn to_line(&self) -> String {
        let parts: Vec<String> = self.values.iter().map(u32::to_string).collect();
        parts.join(" ")
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Radius at a 1-based position.
    pub fn radius(&self, pos: usize) -> u32 {
        self.values[pos - 1]
    }

    /// Checks the general-form conditions and reports the first violation by
    /// ascending position, the parity condition (b) before the bound (a).
    pub fn check_feasible(&self) -> std::result::Result<(), Infeasibility> {
        let m = self.values.len();
        if m % 2 == 0 {
            return Err(Infeasibility::EvenLength { m });
        }
        for j in 1..=m {
            let v = self.values[j - 1] as usize;
            if (v % 2 == 1) != (j % 2 == 0) {
                return Err(Infeasibility::ConditionB { j });
            }
            let lower = 1 - (j % 2);
            let upper = (j - 1).min(m - j);
            if v < lower || v > upper {
                return Err(Infeasibility::ConditionA { j });
            }
        }
        Ok(())
    }

    pub fn is_feasible(&self) -> bool {
        self.check_feasible().is_ok()
    }
}

impl fmt::Display for PalindromeArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_line())
    }
}

/// Maximal palindrome array of a star string.
///
/// Scope-1 strings take the linear-time scan; anything with an indeterminate
/// letter or don't-care falls back to plain centre expansion, because the
/// scan's reuse of mirrored radii is only sound when matching is transitive.
pub fn mp_array(xs: &StarString) -> PalindromeArray {
    let values = if xs.is_scope_one() {
        manacher_radii(xs.cells())
    } else {
        expansion_radii(xs.cells())
    };
    PalindromeArray::new(values)
}

fn cell_eq(a: &StarCell, b: &StarCell) -> bool {
    match (a, b) {
        (StarCell::Separator, StarCell::Separator) => true,
        (StarCell::Letter(Letter::Regular(x)), StarCell::Letter(Letter::Regular(y))) => x == y,
        _ => false,
    }
}

fn manacher_radii(cells: &[StarCell]) -> Vec<u32> {
    let m = cells.len();
    let mut radii = vec![0u32; m];
    let mut centre = 0usize;
    let mut right = 0usize; // centre + radius of the rightmost-reaching palindrome
    for i in 0..m {
        let mut r = if i < right {
            (radii[2 * centre - i] as usize).min(right - i)
        } else {
            0
        };
        while i > r && i + r + 1 < m && cell_eq(&cells[i - r - 1], &cells[i + r + 1]) {
            r += 1;
        }
        radii[i] = r as u32;
        if i + r > right {
            centre = i;
            right = i + r;
        }
    }
    radii
}

fn expansion_radii(cells: &[StarCell]) -> Vec<u32> {
    let m = cells.len();
    let mut radii = vec![0u32; m];
    for i in 0..m {
        let mut r = 0usize;
        while i > r && i + r + 1 < m && star_cells_match(&cells[i - r - 1], &cells[i + r + 1])
        {
            r += 1;
        }
        radii[i] = r as u32;
    }
    radii
}

/// For centre `c`, the positions `(c - MP[c] - 1, c + MP[c] + 1)` just
/// outside the maximal palindrome. When both lie inside `1..=m` the letters
/// there must not match, else the palindrome would extend.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ForbiddenPair {
    pub centre: usize,
    pub left: usize,
    pub right: usize,
}

impl ForbiddenPair {
    pub fn is_effective(&self, m: usize) -> bool {
        self.left > 0 && self.right < m + 1
    }
}

/// One pair per centre `1..=m`. Expects a feasible array.
pub fn forbidden_pairs(mp: &PalindromeArray) -> Vec<ForbiddenPair> {
    let m = mp.len();
    (1..=m)
        .map(|c| {
            let r = mp.radius(c) as usize;
            ForbiddenPair {
                centre: c,
                left: c.saturating_sub(r + 1),
                right: c + r + 1,
            }
        })
        .collect()
}

fn probe_holds(r: usize, r_left: usize, r_right: usize, k: usize) -> bool {
    let a = if r_left != r - k {
        r_right == r_left.min(r - k)
    } else {
        r_right >= r_left
    };
    let b = if r_right != r - k {
        r_left == r_right.min(r - k)
    } else {
        r_left >= r_right
    };
    a && b
}

/// Manacher's consistency condition for the probe `(centre, range)`: with
/// `r = MP[centre]`, `rl = MP[centre-range]` and `rr = MP[centre+range]`,
/// both of
///
/// - if `rl != r-k` then `rr = min(rl, r-k)` else `rr >= rl`,
/// - if `rr != r-k` then `rl = min(rr, r-k)` else `rl >= rr`
///
/// must hold. Every probe of an array realizable by a scope-1 string passes.
pub fn manacher_condition(mp: &PalindromeArray, centre: usize, range: usize) -> Result<bool> {
    let m = mp.len();
    if centre < 1 || centre > m {
        return Err(Error::ProbeOutOfRange { centre, range });
    }
    let r = mp.radius(centre) as usize;
    if range < 1 || range > r || range >= centre || centre + range > m {
        return Err(Error::ProbeOutOfRange { centre, range });
    }
    Ok(probe_holds(
        r,
        mp.radius(centre - range) as usize,
        mp.radius(centre + range) as usize,
        range,
    ))
}

/// Every in-bounds probe of every centre.
pub fn all_probes_hold(mp: &PalindromeArray) -> bool {
    let m = mp.len();
    for c in 1..=m {
        let r = mp.radius(c) as usize;
        for k in 1..=r.min(c.saturating_sub(1)).min(m - c) {
            if !manacher_condition(mp, c, k).expect("probe in range") {
                return false;
            }
        }
    }
    true
}

/// Existence construction: a (possibly indeterminate) string whose maximal
/// palindrome array equals the given feasible array.
///
/// Every centre of radius `r >= 2` stamps a fresh character onto each letter
/// pair inside its palindrome; positions still empty afterwards each get
/// their own fresh character, so no unintended matches arise.
pub fn any_string_from_mp(mp: &PalindromeArray) -> Result<StarString> {
    mp.check_feasible().map_err(Error::Infeasible)?;
    let m = mp.len();
    if m < 3 {
        return Err(Error::EmptyString);
    }
    let mut cells: Vec<Vec<u32>> = vec![Vec::new(); m + 1];
    let mut sigma = 0u32;
    for c in 3..=m - 2 {
        let r = mp.radius(c) as usize;
        if r < 2 {
            continue;
        }
        // Letter pairs sit at even positions: offsets 2,4,.. for even
        // centres, 1,3,.. for odd ones.
        let mut k = if c % 2 == 0 { 2 } else { 1 };
        while k < r {
            sigma += 1;
            cells[c - k].push(sigma);
            cells[c + k].push(sigma);
            k += 2;
        }
    }
    let mut out = Vec::with_capacity(m);
    for p in 1..=m {
        if p % 2 == 1 {
            out.push(StarCell::Separator);
        } else {
            let ranks = &mut cells[p];
            if ranks.is_empty() {
                sigma += 1;
                ranks.push(sigma);
            }
            out.push(StarCell::Letter(if ranks.len() == 1 {
                Letter::Regular(ranks[0])
            } else {
                Letter::Indeterminate(std::mem::take(ranks))
            }));
        }
    }
    Ok(StarString { cells: out })
}

/// Result of [`construct`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub star: StarString,
    /// Number of distinct characters used.
    pub sigma: u32,
    /// True when the array is realizable by a scope-1 string; the output is
    /// then the lex-least such string.
    pub regular: bool,
    /// Per position (index `pos - 1`), the sorted positions whose characters
    /// were forbidden when choosing a fill at that centre.
    pub forbidden_sets: Vec<Vec<u32>>,
}

/// Reverse engineering of a feasible palindrome array.
///
/// While every probe passes, the scan copies mirrored letters, records
/// forbidden positions, fills each empty centre with the least character not
/// forbidden there, and skips centres the way the linear-time palindrome
/// scan does. On the first failed probe the string is marked indeterminate;
/// from then on every centre is examined and each violated letter-pair match
/// is repaired by pushing one fresh character onto both letters.
///
/// The scan alone does not settle every input. Centre skipping can jump
/// over the one probe that fails, and mirror copies made before a failure
/// is noticed can transitively equate two positions that a forbidden pair
/// requires to differ; appending characters can never undo an equality.
/// Both cases are caught by re-deriving the output's palindrome array and
/// falling back: first to a scan that examines every centre (finding the
/// earliest failure before its copies poison anything), and, should its
/// repairs still be off, to the per-pair existence construction, which
/// always realizes the array. The returned flag is therefore true exactly
/// when every probe of the input passes.
///
/// `strict` examines every centre and every probe up front instead, at
/// quadratic cost.
pub fn construct(mp: &PalindromeArray, strict: bool) -> Result<Construction> {
    mp.check_feasible().map_err(Error::Infeasible)?;
    let m = mp.len();
    if m < 3 {
        return Err(Error::EmptyString);
    }
    let first = run_flow(mp, strict);
    if flow_output_correct(mp, &first) {
        return Ok(first.construction);
    }
    let last = if strict { first } else { run_flow(mp, true) };
    if flow_output_correct(mp, &last) {
        return Ok(last.construction);
    }
    let star = any_string_from_mp(mp)?;
    let sigma = star
        .cells
        .iter()
        .filter_map(|c| match c {
            StarCell::Letter(l) => l.max_rank(),
            StarCell::Separator => None,
        })
        .max()
        .unwrap_or(0);
    Ok(Construction {
        star,
        sigma,
        regular: false,
        forbidden_sets: last.construction.forbidden_sets,
    })
}

struct FlowOutput {
    construction: Construction,
    /// First character each letter position received; all later additions
    /// are pair-unique fresh characters.
    base: Vec<Option<u32>>,
    /// Position pairs that were welded with a shared fresh character.
    stamps: Vec<(u32, u32)>,
}

fn flow_output_correct(mp: &PalindromeArray, out: &FlowOutput) -> bool {
    if out.construction.regular {
        // Scope-1 output: linear re-derivation.
        mp_array(&out.construction.star) == *mp
    } else {
        indeterminate_radii_match(mp, &out.base, &out.stamps)
    }
}

/// Centre-expansion check of a repaired output against the input, with the
/// letter matches answered in O(1): two letters intersect exactly when
/// their first characters coincide or the pair was stamped with a shared
/// fresh character.
fn indeterminate_radii_match(
    mp: &PalindromeArray,
    base: &[Option<u32>],
    stamps: &[(u32, u32)],
) -> bool {
    use std::collections::HashSet;
    let m = mp.len();
    let stamped: HashSet<(u32, u32)> = stamps.iter().copied().collect();
    let cells_match = |a: usize, b: usize| -> bool {
        match (a % 2, b % 2) {
            (1, 1) => true,
            (0, 0) => {
                (base[a].is_some() && base[a] == base[b])
                    || stamped.contains(&((a.min(b)) as u32, (a.max(b)) as u32))
            }
            _ => false,
        }
    };
    for c in 1..=m {
        let mut r = 0usize;
        while c > r + 1 && c + r < m && cells_match(c - r - 1, c + r + 1) {
            r += 1;
        }
        if r as u32 != mp.radius(c) {
            return false;
        }
    }
    true
}

fn run_flow(mp: &PalindromeArray, examine_all: bool) -> FlowOutput {
    let m = mp.len();
    let radius = |p: usize| mp.radius(p) as usize;
    // 1-based working arrays; even positions hold ascending character sets.
    let mut cells: Vec<Option<Vec<u32>>> = vec![None; m + 1];
    let mut base: Vec<Option<u32>> = vec![None; m + 1];
    let mut fs: Vec<Vec<u32>> = vec![Vec::new(); m + 1];
    let mut not_yet_recorded = vec![true; m + 1];
    not_yet_recorded[1] = false;
    not_yet_recorded[2] = false;
    let mut regular = true;
    let mut sigma = 1u32;
    let mut stamps: Vec<(u32, u32)> = Vec::new();
    cells[2] = Some(vec![1]);
    base[2] = Some(1);
    let mut fill_scratch: Vec<bool> = Vec::new();
    // Set when a centre is reached by a jump to an inner palindrome that
    // crosses the right edge: its first `verified` ranges were already
    // handled around the previous centre.
    let mut pending_skip: Option<(usize, usize)> = None;
    let mut c = 3usize;
    while c < m {
        let r = radius(c);
        if regular && not_yet_recorded[c] {
            not_yet_recorded[c] = false;
            record_forbidden(c, r, m, &mut fs);
        }
        let mut nextc = c + r + 1;
        if r >= 1 {
            let verified = match pending_skip {
                Some((target, v)) if target == c => v,
                _ => 0,
            };
            // Downward pass: verify probes, record forbidden pairs, copy
            // mirrored letters; after a failure, force the remaining letter
            // pairs to match.
            let mut k = r;
            while k >= 1 {
                if regular {
                    if k <= verified {
                        break;
                    }
                    let r_left = radius(c - k);
                    let r_right = radius(c + k);
                    if probe_holds(r, r_left, r_right, k) {
                        if not_yet_recorded[c + k] {
                            not_yet_recorded[c + k] = false;
                            record_forbidden(c + k, r_right, m, &mut fs);
                        }
                        if (c + k) % 2 == 0 && cells[c + k].is_none() {
                            cells[c + k] = cells[c - k].clone();
                            base[c + k] = base[c - k];
                        }
                    } else {
                        regular = false;
                        if (c + k) % 2 == 0 {
                            repair_pair(&mut cells, &mut base, &mut stamps, c - k, c + k, &mut sigma);
                        }
                    }
                } else if (c + k) % 2 == 0 {
                    repair_pair(&mut cells, &mut base, &mut stamps, c - k, c + k, &mut sigma);
                }
                k -= 1;
            }
            // Upward pass: the next centre to evaluate is the smallest k
            // whose mirrored palindrome touches our left edge while the
            // right one crosses beyond; scanning stops there, which keeps
            // the whole regular branch linear.
            if regular && !examine_all {
                for k in 1..=r {
                    let r_left = radius(c - k);
                    if r_left == r - k && radius(c + k) > r_left {
                        nextc = c + k;
                        break;
                    }
                }
            }
        }
        if c % 2 == 0 && cells[c].is_none() {
            if regular {
                let v = least_unforbidden(&fs[c], &cells, &mut fill_scratch);
                sigma = sigma.max(v);
                cells[c] = Some(vec![v]);
                base[c] = Some(v);
            } else {
                sigma += 1;
                cells[c] = Some(vec![sigma]);
                base[c] = Some(sigma);
            }
        }
        if regular && !examine_all {
            pending_skip = if nextc <= c + r {
                Some((nextc, r - (nextc - c)))
            } else {
                None
            };
            c = nextc;
        } else {
            pending_skip = None;
            c += 1;
        }
    }
    let mut out = Vec::with_capacity(m);
    for p in 1..=m {
        if p % 2 == 1 {
            out.push(StarCell::Separator);
        } else {
            let ranks = cells[p].take().expect("every letter position is filled");
            out.push(StarCell::Letter(if ranks.len() == 1 {
                Letter::Regular(ranks[0])
            } else {
                Letter::Indeterminate(ranks)
            }));
        }
    }
    let mut forbidden_sets: Vec<Vec<u32>> = fs[1..].to_vec();
    for set in &mut forbidden_sets {
        set.sort_unstable();
    }
    FlowOutput {
        construction: Construction {
            star: StarString { cells: out },
            sigma,
            regular,
            forbidden_sets,
        },
        base,
        stamps,
    }
}

/// Adds the left end of centre `c`'s forbidden pair to the set of its right
/// end, when both ends are real positions.
fn record_forbidden(c: usize, r: usize, m: usize, fs: &mut [Vec<u32>]) {
    let left = c - r - 1;
    let right = c + r + 1;
    if left != 0 && right != m + 1 {
        fs[right].push(left as u32);
    }
}

/// Forces the letters at `a` and `b` to match by stamping one fresh
/// character onto both, unless they already do. An unfilled position
/// matches nothing. Each pair is visited at most once (its midpoint is the
/// one centre that can reach it), so two letters can only intersect through
/// equal first characters, which makes the test O(1).
fn repair_pair(
    cells: &mut [Option<Vec<u32>>],
    base: &mut [Option<u32>],
    stamps: &mut Vec<(u32, u32)>,
    a: usize,
    b: usize,
    sigma: &mut u32,
) {
    let already = base[a].is_some() && base[a] == base[b];
    if !already {
        *sigma += 1;
        cells[a].get_or_insert_with(Vec::new).push(*sigma);
        cells[b].get_or_insert_with(Vec::new).push(*sigma);
        stamps.push((a.min(b) as u32, a.max(b) as u32));
        if base[a].is_none() {
            base[a] = Some(*sigma);
        }
        if base[b].is_none() {
            base[b] = Some(*sigma);
        }
    }
}

/// Smallest character not used at any forbidden position, found through a
/// reusable bit vector: mark, scan from 1, unmark. Unfilled positions and
/// repaired multi-character letters contribute nothing.
fn least_unforbidden(
    fs_c: &[u32],
    cells: &[Option<Vec<u32>>],
    scratch: &mut Vec<bool>,
) -> u32 {
    let mut marked: Vec<usize> = Vec::with_capacity(fs_c.len());
    for &p in fs_c {
        if let Some(cell) = &cells[p as usize] {
            if let [v] = cell.as_slice() {
                let v = *v as usize;
                if scratch.len() <= v {
                    scratch.resize(v + 1, false);
                }
                if !scratch[v] {
                    scratch[v] = true;
                    marked.push(v);
                }
            }
        }
    }
    let mut v = 1usize;
    while v < scratch.len() && scratch[v] {
        v += 1;
    }
    for p in marked {
        scratch[p] = false;
    }
    v as u32
}
