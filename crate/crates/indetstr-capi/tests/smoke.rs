//! Exercises the C entry points the way a foreign caller would: through raw
//! pointers and status codes.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use indetstr_capi::*;

fn c(text: &str) -> CString {
    CString::new(text).unwrap()
}

unsafe fn text_of(ptr: *mut c_char) -> String {
    let s = CStr::from_ptr(ptr).to_str().unwrap().to_string();
    indetstr_text_free(ptr);
    s
}

#[test]
fn parse_check_and_mp_round_trip() {
    unsafe {
        let mut alphabet = ptr::null_mut();
        let status = indetstr_alphabet_new(c("abcd").as_ptr(), 0, u32::MAX, &mut alphabet);
        assert_eq!(status, IndetstrStatus::IndetstrOk);
        assert_eq!(indetstr_alphabet_sigma(alphabet), 4);

        let mut s = ptr::null_mut();
        let status = indetstr_string_parse(alphabet, c("a{a,c}b{a,d}bb").as_ptr(), &mut s);
        assert_eq!(status, IndetstrStatus::IndetstrOk);
        assert_eq!(indetstr_string_len(s), 6);
        assert_eq!(indetstr_string_scope(s), 2);

        let mut regular = false;
        let mut witness = vec![0u32; 6];
        let mut sigma_prime = 0u32;
        let status = indetstr_regular_check(s, &mut regular, witness.as_mut_ptr(), &mut sigma_prime);
        assert_eq!(status, IndetstrStatus::IndetstrOk);
        assert!(regular);
        assert_eq!(witness, vec![1, 1, 2, 1, 2, 2]);
        assert_eq!(sigma_prime, 2);

        let mut mp = vec![0u32; 13];
        let status = indetstr_mp(s, mp.as_mut_ptr(), mp.len());
        assert_eq!(status, IndetstrStatus::IndetstrOk);
        let expected = {
            let alphabet = indetstr::Alphabet::new("abcd".chars()).unwrap();
            let x = indetstr::IndetString::parse("a{a,c}b{a,d}bb", &alphabet).unwrap();
            indetstr::palindrome::mp_array(&indetstr::palindrome::expand(&x))
        };
        assert_eq!(mp, expected.values());

        let mut short = vec![0u32; 3];
        let status = indetstr_mp(s, short.as_mut_ptr(), short.len());
        assert_eq!(status, IndetstrStatus::IndetstrBufferTooSmall);

        let mut rendered = ptr::null_mut();
        assert_eq!(
            indetstr_string_to_text(s, &mut rendered),
            IndetstrStatus::IndetstrOk
        );
        assert_eq!(text_of(rendered), "a{a,c}b{a,d}bb");

        indetstr_string_free(s);
        indetstr_alphabet_free(alphabet);
    }
}

#[test]
fn dna_codes_and_binary_round_trip() {
    unsafe {
        let mut alphabet = ptr::null_mut();
        assert_eq!(
            indetstr_alphabet_dna(&mut alphabet),
            IndetstrStatus::IndetstrOk
        );

        let mut s = ptr::null_mut();
        let status =
            indetstr_string_parse(alphabet, c("aac{a,c}gta{g,t}{a,c}{g,t}").as_ptr(), &mut s);
        assert_eq!(status, IndetstrStatus::IndetstrOk);

        let mut codes = vec![0u32; 10];
        assert_eq!(
            indetstr_string_codes(s, codes.as_mut_ptr(), codes.len()),
            IndetstrStatus::IndetstrOk
        );
        assert_eq!(codes, vec![1, 1, 2, 5, 3, 4, 1, 6, 5, 6]);

        let mut bytes = ptr::null_mut();
        let mut len = 0usize;
        assert_eq!(
            indetstr_string_to_bytes(s, &mut bytes, &mut len),
            IndetstrStatus::IndetstrOk
        );
        let mut back = ptr::null_mut();
        assert_eq!(
            indetstr_string_from_bytes(alphabet, bytes, len, &mut back),
            IndetstrStatus::IndetstrOk
        );
        let mut rendered = ptr::null_mut();
        assert_eq!(
            indetstr_string_to_text(back, &mut rendered),
            IndetstrStatus::IndetstrOk
        );
        assert_eq!(text_of(rendered), "aac{a,c}gta{g,t}{a,c}{g,t}");
        indetstr_bytes_free(bytes, len);
        indetstr_string_free(back);
        indetstr_string_free(s);
        indetstr_alphabet_free(alphabet);
    }
}

#[test]
fn construct_and_feasibility() {
    unsafe {
        let regular_arr: Vec<u32> = vec![0, 1, 0, 3, 0, 1, 0, 7, 0, 1, 0, 3, 0, 1, 0];
        assert_eq!(
            indetstr_mp_feasible(regular_arr.as_ptr(), regular_arr.len()),
            IndetstrStatus::IndetstrOk
        );

        let mut text = ptr::null_mut();
        let mut regular = false;
        let mut sigma = 0u32;
        let status = indetstr_construct(
            regular_arr.as_ptr(),
            regular_arr.len(),
            false,
            &mut text,
            &mut regular,
            &mut sigma,
        );
        assert_eq!(status, IndetstrStatus::IndetstrOk);
        assert!(regular);
        assert_eq!(sigma, 3);
        assert_eq!(text_of(text), "#1#2#1#3#1#2#1#");

        let indet_arr: Vec<u32> = vec![0, 1, 0, 3, 0, 1, 0, 7, 0, 1, 0, 1, 0, 1, 0];
        let mut text = ptr::null_mut();
        let status = indetstr_construct(
            indet_arr.as_ptr(),
            indet_arr.len(),
            false,
            &mut text,
            &mut regular,
            &mut sigma,
        );
        assert_eq!(status, IndetstrStatus::IndetstrOk);
        assert!(!regular);
        assert_eq!(text_of(text), "#1#{2,3}#{1,4}#5#4#3#1#");

        let bad: Vec<u32> = vec![0, 2, 0];
        let status = indetstr_construct(
            bad.as_ptr(),
            bad.len(),
            false,
            &mut text,
            &mut regular,
            &mut sigma,
        );
        assert_eq!(status, IndetstrStatus::IndetstrInfeasible);
        let msg = CStr::from_ptr(indetstr_last_error_message())
            .to_str()
            .unwrap();
        assert!(msg.contains("condition (b) at j=2"), "message: {msg}");

        let mut any = ptr::null_mut();
        let arr: Vec<u32> = vec![0, 1, 2, 1, 0, 3, 0, 1, 0, 1, 0];
        assert_eq!(
            indetstr_any_string(arr.as_ptr(), arr.len(), &mut any),
            IndetstrStatus::IndetstrOk
        );
        assert_eq!(text_of(any), "#1#{1,2}#3#2#4#");
    }
}

#[test]
fn null_arguments_are_rejected() {
    unsafe {
        assert_eq!(
            indetstr_alphabet_new(ptr::null(), 0, u32::MAX, ptr::null_mut()),
            IndetstrStatus::IndetstrNullArgument
        );
        let mut s = ptr::null_mut();
        assert_eq!(
            indetstr_string_parse(ptr::null(), c("a").as_ptr(), &mut s),
            IndetstrStatus::IndetstrNullArgument
        );
        assert_eq!(indetstr_string_len(ptr::null()), 0);
        indetstr_string_free(ptr::null_mut());
        indetstr_alphabet_free(ptr::null_mut());
        indetstr_text_free(ptr::null_mut());

        let mut alphabet = ptr::null_mut();
        indetstr_alphabet_dna(&mut alphabet);
        let status = indetstr_string_parse(alphabet, c("axg").as_ptr(), &mut s);
        assert_eq!(status, IndetstrStatus::IndetstrParseError);
        let msg = CStr::from_ptr(indetstr_last_error_message())
            .to_str()
            .unwrap();
        assert!(msg.contains("position 2"), "message: {msg}");
        indetstr_alphabet_free(alphabet);
    }
}

#[test]
fn version_is_exposed() {
    unsafe {
        let v = CStr::from_ptr(indetstr_version()).to_str().unwrap();
        assert_eq!(v, env!("CARGO_PKG_VERSION"));
    }
}
