// SPDX-License-Identifier: Apache-2.0
use std::io::Write;
use std::path::Path;

use guiloc_core::Error;

/// Writes through a temporary file in the target directory, then renames it
/// into place.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), Error> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| Error::io(dir, e))?;
    tmp.write_all(contents.as_bytes()).map_err(|e| Error::io(path, e))?;
    tmp.persist(path).map_err(|e| Error::io(path, e.error))?;
    log::info!("wrote {}", path.display());
    Ok(())
}

/// Machine output to `path`, or to standard output. Both end in a newline.
pub fn emit(path: Option<&Path>, contents: &str) -> Result<(), Error> {
    let mut text = contents.to_owned();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match path {
        Some(p) => write_atomic(p, &text),
        None => {
            std::io::stdout()
                .lock()
                .write_all(text.as_bytes())
                .or_else(|e| match e.kind() {
                    // a closed pipe (`| head`) is not an error for the producer
                    std::io::ErrorKind::BrokenPipe => Ok(()),
                    _ => Err(Error::io(Path::new("<stdout>"), e)),
                })
        }
    }
}
