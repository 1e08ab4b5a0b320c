// SPDX-License-Identifier: Apache-2.0
//! Embeds the bundled sample app (sources, reports, traces) into the library.

use std::fmt::Write;
use std::path::{Path, PathBuf};

fn files(dir: &Path, ext: &str, out: &mut Vec<PathBuf>) {
    let mut entries: Vec<PathBuf> = std::fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
    entries.sort();
    for p in entries {
        if p.is_dir() {
            files(&p, ext, out);
        } else if p.extension().is_some_and(|x| x == ext) {
            out.push(p);
        }
    }
}

fn table(name: &str, root: &Path, sub: &str, ext: &str, code: &mut String) {
    let dir = root.join(sub);
    let mut found = Vec::new();
    files(&dir, ext, &mut found);
    writeln!(code, "pub static {name}: &[(&str, &str)] = &[").unwrap();
    for p in found {
        let rel = p.strip_prefix(&dir).unwrap().to_str().unwrap().replace('\\', "/");
        writeln!(code, "    ({rel:?}, include_str!({:?})),", p.to_str().unwrap()).unwrap();
    }
    code.push_str("];\n");
}

fn main() {
    let manifest = PathBuf::from(std::env::var("CARGO_MANIFEST_DIR").unwrap());
    let root = manifest.join("../core/fixtures/jotter").canonicalize().unwrap();
    println!("cargo:rerun-if-changed={}", root.display());
    let mut code = String::new();
    table("SOURCES", &root, "app", "java", &mut code);
    table("REPORTS", &root, "reports", "json", &mut code);
    table("TRACES", &root, "traces", "json", &mut code);
    let out = PathBuf::from(std::env::var("OUT_DIR").unwrap()).join("fixture.rs");
    std::fs::write(out, code).unwrap();
}
