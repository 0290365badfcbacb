use std::path::PathBuf;

fn main() {
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");
    let crate_dir = std::env::var("CARGO_MANIFEST_DIR").unwrap();
    let config = cbindgen::Config::from_file("cbindgen.toml")
        .expect("cbindgen.toml is readable");
    let header = PathBuf::from(&crate_dir).join("include").join("indetstr.h");
    cbindgen::generate_with_config(&crate_dir, config)
        .expect("C header generation")
        .write_to_file(header);
}
