//! End-to-end acceptance suite. Each test covers one numbered criterion and
//! prints a `criterion NN: PASS` line (visible with `--nocapture`).

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use indetstr::generate;
use indetstr::oracles::{oracle_is_regular, oracle_mp};
use indetstr::palindrome::{
    all_probes_hold, any_string_from_mp, construct, expand, forbidden_pairs, manacher_condition,
    mp_array, PalindromeArray, StarCell, StarString,
};
use indetstr::regularity::{regular_check, transitive_closure, MatchMatrix};
use indetstr::{Alphabet, IndetString, Letter};

fn alpha(chars: &str) -> Alphabet {
    Alphabet::new(chars.chars()).unwrap()
}

fn parse(text: &str, chars: &str) -> IndetString {
    IndetString::parse(text, &alpha(chars)).unwrap()
}

fn mp(line: &str) -> PalindromeArray {
    PalindromeArray::parse_line(line).unwrap()
}

struct CliOutput {
    stdout: String,
    status: i32,
}

fn run_cli(args: &[&str]) -> CliOutput {
    let out = Command::new(env!("CARGO_BIN_EXE_indetstr"))
        .args(args)
        .output()
        .expect("binary runs");
    CliOutput {
        stdout: String::from_utf8(out.stdout).expect("utf-8 output"),
        status: out.status.code().expect("exit code"),
    }
}

#[test]
fn criterion_01_mp_of_plain_string() {
    let x = parse("aabac", "abc");
    let xs = expand(&x);
    let mut best = Duration::MAX;
    for _ in 0..10 {
        let t = Instant::now();
        let arr = mp_array(&xs);
        best = best.min(t.elapsed());
        assert_eq!(arr.to_line(), "0 1 2 1 0 3 0 1 0 1 0");
    }
    assert!(best < Duration::from_millis(1), "took {best:?}");

    let out = run_cli(&["mp", "aabac"]);
    assert_eq!(out.stdout, "0 1 2 1 0 3 0 1 0 1 0\n");
    assert_eq!(out.status, 0);
    println!("criterion 01: PASS mp(aabac) exact in {best:?}");
}

#[test]
fn criterion_02_indeterminate_string_shares_the_mp() {
    let regular = mp_array(&expand(&parse("aabac", "abcd")));
    let indet = StarString::parse("#a#{a,b}#c#b#d#", &alpha("abcd")).unwrap();
    assert_eq!(mp_array(&indet), regular);
    assert_eq!(regular.to_line(), "0 1 2 1 0 3 0 1 0 1 0");
    println!("criterion 02: PASS regular/indeterminate pair shares one MP array");
}

#[test]
fn criterion_03_intransitive_array_diagnostics() {
    let xs = StarString::parse("#1#{2,3}#{1,3}#", &alpha("123")).unwrap();
    let arr = mp_array(&xs);
    assert_eq!(arr.to_line(), "0 1 0 3 2 1 0");

    let pairs: Vec<(usize, usize)> = forbidden_pairs(&arr)
        .iter()
        .map(|p| (p.left, p.right))
        .collect();
    assert_eq!(
        pairs,
        vec![(0, 2), (0, 4), (2, 4), (0, 8), (2, 8), (4, 8), (6, 8)]
    );

    assert_eq!(manacher_condition(&arr, 4, 1).unwrap(), false);
    println!("criterion 03: PASS mp, forbidden pairs and failing probe reproduced");
}

#[test]
fn criterion_04_reverse_engineering_regular_example() {
    let arr = mp("0 1 0 3 0 1 0 7 0 1 0 3 0 1 0");
    let got = construct(&arr, false).unwrap();
    assert!(got.regular);
    assert_eq!(got.sigma, 3);
    assert_eq!(got.star.to_int_text(), "#1#2#1#3#1#2#1#");
    let fs = |pos: usize| got.forbidden_sets[pos - 1].clone();
    assert_eq!(fs(4), vec![2]);
    assert_eq!(fs(6), vec![4]);
    assert_eq!(fs(8), vec![4, 6]);
    assert_eq!(fs(10), vec![8]);
    assert_eq!(fs(12), vec![8, 10]);
    assert_eq!(fs(14), vec![12]);

    let out = run_cli(&["reverse", "0 1 0 3 0 1 0 7 0 1 0 3 0 1 0"]);
    assert_eq!(out.stdout, "#1#2#1#3#1#2#1# REGULAR sigma=3\n");
    assert_eq!(out.status, 0);
    println!("criterion 04: PASS lex-least regular string and forbidden sets exact");
}

#[test]
fn criterion_05_reverse_engineering_indeterminate_example() {
    let arr = mp("0 1 0 3 0 1 0 7 0 1 0 1 0 1 0");
    let got = construct(&arr, false).unwrap();
    assert!(!got.regular);
    // Exact target; the round trip below is the mandatory fallback check.
    assert_eq!(got.star.to_int_text(), "#1#{2,3}#{1,4}#5#4#3#1#");
    assert_eq!(mp_array(&got.star), arr);

    let out = run_cli(&["reverse", "0 1 0 3 0 1 0 7 0 1 0 1 0 1 0"]);
    assert_eq!(out.stdout, "#1#{2,3}#{1,4}#5#4#3#1# INDETERMINATE sigma=5\n");
    assert_eq!(out.status, 1);
    println!("criterion 05: PASS indeterminate output exact and round-trips");
}

#[test]
fn criterion_06_reverse_engineering_heavily_indeterminate_example() {
    let arr = mp("0 1 0 3 2 3 6 3 4 1 2 1 0");
    let got = construct(&arr, false).unwrap();
    assert!(!got.regular);
    assert_eq!(mp_array(&got.star), arr);
    assert_eq!(
        got.star.to_int_text(),
        "#{1,5}#{2,3,4,6}#{1,3,7,8,9}#{4,7,10}#{6,8,10,11}#{5,9,11}#"
    );
    println!("criterion 06: PASS dense indeterminate output exact and round-trips");
}

#[test]
fn criterion_07_dna_encoding() {
    let out = run_cli(&[
        "encode",
        "aac{a,c}gta{g,t}{a,c}{g,t}",
        "--preset",
        "dna",
        "--show-tables",
    ]);
    assert_eq!(
        out.stdout,
        "codes=1,1,2,5,3,4,1,6,5,6 I=[(2,1),(2,3)] L=[1,2,3,4]\n"
    );
    assert_eq!(out.status, 0);

    let x = IndetString::parse("aac{a,c}gta{g,t}{a,c}{g,t}", &Alphabet::dna()).unwrap();
    let enc = x.encoding();
    assert_eq!(enc.codes, vec![1, 1, 2, 5, 3, 4, 1, 6, 5, 6]);
    assert_eq!(enc.i_table, vec![(2, 1), (2, 3)]);
    assert_eq!(enc.l_pool, vec![1, 2, 3, 4]);
    println!("criterion 07: PASS half-byte DNA encoding exact");
}

#[test]
fn criterion_08_regularity_witnesses() {
    let w = regular_check(&parse("a{a,c}b{a,d}bb", "abcd")).unwrap();
    assert_eq!((w.y, w.sigma_prime), (vec![1, 1, 2, 1, 2, 2], 2));

    let w = regular_check(&parse("{a,b}{b,c}{a,c}", "abc")).unwrap();
    assert_eq!((w.y, w.sigma_prime), (vec![1, 1, 1], 1));

    assert!(regular_check(&parse("a{a,c}c", "abc")).is_none());
    println!("criterion 08: PASS witnesses exact");
}

#[test]
fn criterion_09_exhaustive_oracle_equivalence() {
    let started = Instant::now();
    let alphabet = alpha("abc");
    // Every letter over three characters: the don't-care plus all seven
    // nonempty subsets.
    let letters: Vec<Letter> = (0..8).map(letter_from_mask).collect();
    let mut count = 0u64;
    let mut disagreements = 0u64;
    for n in 1..=6usize {
        let total = 8u64.pow(n as u32);
        for idx in 0..total {
            let mut digits = idx;
            let picked: Vec<Letter> = (0..n)
                .map(|_| {
                    let d = (digits % 8) as usize;
                    digits /= 8;
                    letters[d].clone()
                })
                .collect();
            let x = IndetString::new(alphabet.clone(), picked).unwrap();
            count += 1;
            if regular_check(&x).is_some() != oracle_is_regular(&x) {
                disagreements += 1;
            }
            let xs = expand(&x);
            if mp_array(&xs) != oracle_mp(&xs) {
                disagreements += 1;
            }
        }
    }
    let elapsed = started.elapsed();
    assert_eq!(disagreements, 0);
    assert_eq!(count, 8 + 64 + 512 + 4096 + 32768 + 262144);
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!("criterion 09: PASS {count} strings exhaustively agree with both oracles in {elapsed:?}");
}

fn letter_from_mask(mask: u64) -> Letter {
    if mask == 0 {
        Letter::DontCare
    } else {
        Letter::from_ranks((0..3).filter(|b| mask & (1 << b) != 0).map(|b| b as u32 + 1))
            .unwrap()
    }
}

#[test]
fn criterion_10_reverse_round_trips() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for trial in 0..1000 {
        let arr = generate::random_feasible_mp(&mut rng, 12);
        assert!(arr.len() <= 25);
        assert!(arr.is_feasible(), "trial {trial}");

        let any = any_string_from_mp(&arr).unwrap();
        assert_eq!(mp_array(&any), arr, "existence trial {trial}: {}", arr.to_line());

        let got = construct(&arr, false).unwrap();
        assert_eq!(mp_array(&got.star), arr, "construct trial {trial}: {}", arr.to_line());
        assert_eq!(
            got.regular,
            all_probes_hold(&arr),
            "flag trial {trial}: {}",
            arr.to_line()
        );
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    println!("criterion 10: PASS 1000/1000 feasible arrays round-trip in {elapsed:?}");
}

/// All first-occurrence-canonical scope-1 integer strings of length `n`;
/// the lexicographically least string of any equality pattern is canonical,
/// so minima over these are global minima.
fn canonical_strings(n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    fn rec(i: usize, max_used: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == current.len() {
            out.push(current.clone());
            return;
        }
        for v in 1..=max_used + 1 {
            current[i] = v;
            rec(i + 1, max_used.max(v), current, out);
        }
    }
    rec(0, 0, &mut current, &mut out);
    out
}

fn star_of_ranks(ranks: &[u32]) -> StarString {
    let mut cells = vec![StarCell::Separator];
    for &r in ranks {
        cells.push(StarCell::Letter(Letter::Regular(r)));
        cells.push(StarCell::Separator);
    }
    StarString::new(cells).unwrap()
}

fn enumerate_feasible(n: usize) -> Vec<PalindromeArray> {
    let m = 2 * n + 1;
    let mut out = Vec::new();
    let mut values = vec![0u32; m];
    fn rec(j: usize, m: usize, values: &mut Vec<u32>, out: &mut Vec<PalindromeArray>) {
        if j >= m {
            out.push(PalindromeArray::new(values.clone()));
            return;
        }
        let lower = 1 - (j % 2);
        let upper = (j - 1).min(m - j);
        let mut v = lower;
        while v <= upper {
            values[j - 1] = v as u32;
            rec(j + 1, m, values, out);
            v += 2;
        }
    }
    rec(2, m, &mut values, &mut out);
    out
}

#[test]
fn criterion_11_lex_least_minimality() {
    let mut checked = 0usize;
    for n in 1..=6usize {
        // Bucket every realizable array by the least scope-1 string with it.
        let mut minima: BTreeMap<Vec<u32>, Vec<u32>> = BTreeMap::new();
        for ranks in canonical_strings(n) {
            let arr = oracle_mp(&star_of_ranks(&ranks));
            let key = arr.values().to_vec();
            match minima.get(&key) {
                Some(best) if *best <= ranks => {}
                _ => {
                    minima.insert(key, ranks);
                }
            }
        }
        for arr in enumerate_feasible(n) {
            let got = construct(&arr, false).unwrap();
            match minima.get(&arr.values().to_vec()) {
                Some(best) => {
                    assert!(got.regular, "realizable array not flagged: {}", arr.to_line());
                    let produced: Vec<u32> = got
                        .star
                        .cells()
                        .iter()
                        .filter_map(|c| match c {
                            StarCell::Letter(Letter::Regular(r)) => Some(*r),
                            _ => None,
                        })
                        .collect();
                    assert_eq!(
                        &produced,
                        best,
                        "not the least string for {}",
                        arr.to_line()
                    );
                    checked += 1;
                }
                None => {
                    assert!(
                        !got.regular,
                        "array has no scope-1 realization: {}",
                        arr.to_line()
                    );
                }
            }
        }
    }
    println!("criterion 11: PASS lex-least minimality on {checked} regular arrays (n <= 6)");
}

#[test]
fn criterion_12_transitive_closure_against_reachability() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for trial in 0..500 {
        let m = rng.gen_range(1..=40);
        let mut bits = vec![false; m * m];
        for i in 0..m {
            bits[i * m + i] = true;
            for j in 0..i {
                let v = rng.gen_bool(0.15);
                bits[i * m + j] = v;
                bits[j * m + i] = v;
            }
        }
        let mat = MatchMatrix::new(m, bits.clone()).unwrap();
        let got = transitive_closure(&mat);

        // Reachability by repeated relaxation over every pair.
        let mut reach = bits;
        for k in 0..m {
            for i in 0..m {
                if reach[i * m + k] {
                    for j in 0..m {
                        if reach[k * m + j] {
                            reach[i * m + j] = true;
                        }
                    }
                }
            }
        }
        let mut class_of = vec![0u32; m];
        let mut next = 0u32;
        for i in 0..m {
            if class_of[i] != 0 {
                continue;
            }
            next += 1;
            for j in i..m {
                if reach[i * m + j] {
                    class_of[j] = next;
                }
            }
        }
        assert_eq!(got.class_of(), class_of.as_slice(), "trial {trial}");
    }
    println!("criterion 12: PASS closure agrees with reachability on 500 matrices");
}

fn median_time<F: FnMut()>(mut f: F, runs: usize) -> Duration {
    let mut times: Vec<Duration> = (0..runs)
        .map(|_| {
            let t = Instant::now();
            f();
            t.elapsed()
        })
        .collect();
    times.sort();
    times[runs / 2]
}

#[test]
fn criterion_13_linear_scaling() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    // Vocabulary of 100 pairwise disjoint two-character letters: scope 2,
    // regular, so the full reduce + scan + witness path runs.
    let small = generate::random_disjoint_vocab_string(&mut rng, 100, 100_000).unwrap();
    let large = generate::random_disjoint_vocab_string(&mut rng, 100, 1_000_000).unwrap();
    let t_small = median_time(|| assert!(regular_check(&small).is_some()), 5);
    let t_large = median_time(|| assert!(regular_check(&large).is_some()), 5);
    let ratio = t_large.as_secs_f64() / t_small.as_secs_f64();
    assert!(
        (5.0..=20.0).contains(&ratio),
        "regular_check scaled by {ratio:.2} ({t_small:?} -> {t_large:?})"
    );

    let alphabet = alpha("abc");
    let small_arr = mp_array(&expand(
        &generate::random_scope1_string(&mut rng, &alphabet, 100_000).unwrap(),
    ));
    let large_arr = mp_array(&expand(
        &generate::random_scope1_string(&mut rng, &alphabet, 1_000_000).unwrap(),
    ));
    let t_small = median_time(|| assert!(construct(&small_arr, false).unwrap().regular), 5);
    let t_large = median_time(|| assert!(construct(&large_arr, false).unwrap().regular), 5);
    let construct_ratio = t_large.as_secs_f64() / t_small.as_secs_f64();
    assert!(
        (5.0..=20.0).contains(&construct_ratio),
        "construct scaled by {construct_ratio:.2} ({t_small:?} -> {t_large:?})"
    );
    println!(
        "criterion 13: PASS 10x input gives {ratio:.1}x regular_check, {construct_ratio:.1}x construct"
    );
}
