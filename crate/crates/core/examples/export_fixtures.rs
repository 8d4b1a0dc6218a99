//! Writes every built-in fixture as a JSON document.
//!
//! `cargo run --example export_fixtures -- [DIR]` (default `fixtures`).

use std::path::PathBuf;

use malcev_super::io::{builtin_fixtures, serialize};

fn main() -> std::io::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "fixtures".into()));
    std::fs::create_dir_all(&dir)?;
    for (name, doc) in builtin_fixtures() {
        let path = dir.join(format!("{name}.json"));
        std::fs::write(&path, serialize(&doc))?;
        println!("{}", path.display());
    }
    Ok(())
}
