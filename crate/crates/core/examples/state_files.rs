//! Load the bundled state documents and summarize each one.

use qfragile::cli::{analyze, load, Format};

fn main() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/states");
    let mut paths: Vec<_> = std::fs::read_dir(&dir).expect("states directory").map(|e| e.unwrap().path()).collect();
    paths.sort();
    for path in paths {
        let name = path.file_name().unwrap().to_string_lossy().into_owned();
        let summary = load(&path, false).and_then(|s| analyze(&s, Format::Text));
        match summary {
            Ok(text) => {
                let set = text.lines().find(|l| l.starts_with("fragile set")).unwrap_or("");
                println!("{name:22} {set}");
            }
            Err(e) => println!("{name:22} exit {}: {e}", e.exit_code()),
        }
    }
}
