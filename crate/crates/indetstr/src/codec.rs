//! Binary file format for encoded strings.
//!
//! Layout, all integers little-endian:
//!
//! ```text
//! offset  size  field
//! 0       4     magic "IDS1"
//! 4       1     code width in bits (1..=32)
//! 5       4     sigma
//! 9       4     sigma_star
//! 13      4     n (number of letters)
//! 17      4     number of indeterminate-table entries
//! 21      4     character-pool length
//! 25      ...   indeterminate table: (u32 scope, u32 loc) per entry
//!         ...   character pool: values packed at the code width, MSB-first
//!         ...   codes: n values packed at the code width, MSB-first
//! ```
//!
//! Both packed sections are zero-padded to a byte boundary. With the DNA
//! preset (4-bit codes) the code section of `aac{a,c}gta{g,t}{a,c}{g,t}`
//! reads `11 25 34 16 56` in hex, one code per nibble.

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::string::IndetString;

const MAGIC: &[u8; 4] = b"IDS1";

pub fn to_bytes(x: &IndetString) -> Vec<u8> {
    let alphabet = x.alphabet();
    let enc = x.encoding();
    let width = alphabet.code_width_bits();
    let mut out = Vec::new();
    out.extend_from_slice(MAGIC);
    out.push(width);
    out.extend_from_slice(&alphabet.sigma().to_le_bytes());
    out.extend_from_slice(&alphabet.sigma_star().to_le_bytes());
    out.extend_from_slice(&(enc.codes.len() as u32).to_le_bytes());
    out.extend_from_slice(&(enc.i_table.len() as u32).to_le_bytes());
    out.extend_from_slice(&(enc.l_pool.len() as u32).to_le_bytes());
    for &(scope, loc) in &enc.i_table {
        out.extend_from_slice(&scope.to_le_bytes());
        out.extend_from_slice(&loc.to_le_bytes());
    }
    pack(&mut out, &enc.l_pool, width);
    pack(&mut out, &enc.codes, width);
    out
}

pub fn from_bytes(alphabet: &Alphabet, data: &[u8]) -> Result<IndetString> {
    let mut r = Reader { data, at: 0 };
    let magic = r.take(4)?;
    if magic != MAGIC {
        return Err(malformed("bad magic"));
    }
    let width = r.take(1)?[0];
    let sigma = r.u32()?;
    let sigma_star = r.u32()?;
    let n = r.u32()? as usize;
    let i_len = r.u32()? as usize;
    let l_len = r.u32()? as usize;
    if width != alphabet.code_width_bits() {
        return Err(malformed(&format!(
            "code width {width} does not match the alphabet ({})",
            alphabet.code_width_bits()
        )));
    }
    if sigma != alphabet.sigma() || sigma_star != alphabet.sigma_star() {
        return Err(malformed(&format!(
            "header alphabet ({sigma}, {sigma_star}) does not match ({}, {})",
            alphabet.sigma(),
            alphabet.sigma_star()
        )));
    }
    let mut i_table = Vec::with_capacity(i_len);
    for _ in 0..i_len {
        let scope = r.u32()?;
        let loc = r.u32()?;
        i_table.push((scope, loc));
    }
    let l_pool = unpack(&mut r, l_len, width)?;
    let codes = unpack(&mut r, n, width)?;
    if r.at != data.len() {
        return Err(malformed("trailing bytes"));
    }
    IndetString::decode(alphabet, &codes, &i_table, &l_pool)
}

fn malformed(msg: &str) -> Error {
    Error::MalformedBinary { msg: msg.into() }
}

fn pack(out: &mut Vec<u8>, values: &[u32], width: u8) {
    let mut acc: u64 = 0;
    let mut bits: u8 = 0;
    for &v in values {
        acc = (acc << width) | u64::from(v);
        bits += width;
        while bits >= 8 {
            bits -= 8;
            out.push((acc >> bits) as u8);
        }
    }
    if bits > 0 {
        out.push((acc << (8 - bits)) as u8);
    }
}

struct Reader<'a> {
    data: &'a [u8],
    at: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, n: usize) -> Result<&'a [u8]> {
        if self.at + n > self.data.len() {
            return Err(malformed("truncated input"));
        }
        let s = &self.data[self.at..self.at + n];
        self.at += n;
        Ok(s)
    }

    fn u32(&mut self) -> Result<u32> {
        let b = self.take(4)?;
        Ok(u32::from_le_bytes([b[0], b[1], b[2], b[3]]))
    }
}

fn unpack(r: &mut Reader, count: usize, width: u8) -> Result<Vec<u32>> {
    let total_bits = count * width as usize;
    let bytes = r.take(total_bits.div_ceil(8))?;
    let mut values = Vec::with_capacity(count);
    let mut acc: u64 = 0;
    let mut bits: u8 = 0;
    let mut it = bytes.iter();
    for _ in 0..count {
        while bits < width {
            acc = (acc << 8) | u64::from(*it.next().expect("sized above"));
            bits += 8;
        }
        bits -= width;
        values.push(((acc >> bits) & ((1u64 << width) - 1)) as u32);
    }
    Ok(values)
}
