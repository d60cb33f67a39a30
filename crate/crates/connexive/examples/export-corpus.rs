//! Write every bundled proof document to the `proofs/` directory as JSON.
//! The files are committed; a test checks they stay in sync with the
//! in-crate corpus.

use std::path::PathBuf;

fn main() -> std::io::Result<()> {
    let out = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("proofs"));
    std::fs::create_dir_all(&out)?;
    for doc in connexive::hilbert::corpus() {
        let path = out.join(format!("{}.json", doc.name));
        let mut text = connexive::hilbert::to_json_string(&doc);
        text.push('\n');
        std::fs::write(&path, text)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
