//! Curated data files shipped with the library.
//!
//! Every file starts with a `# checksum: sha256:<hex>` line covering the rest
//! of the file. Files are embedded at build time and may be overridden by a
//! directory holding files of the same names.

use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::families::FamilyFile;
use crate::reptheory::LabelFile;
use crate::rootsystem::CartanType;

const EMBEDDED: &[(&str, &str)] = &[
    ("labels_A1.toml", include_str!("../data/labels_A1.toml")),
    ("labels_A2.toml", include_str!("../data/labels_A2.toml")),
    ("labels_A3.toml", include_str!("../data/labels_A3.toml")),
    ("labels_B2.toml", include_str!("../data/labels_B2.toml")),
    ("labels_B3.toml", include_str!("../data/labels_B3.toml")),
    ("labels_B4.toml", include_str!("../data/labels_B4.toml")),
    ("labels_C2.toml", include_str!("../data/labels_C2.toml")),
    ("labels_C3.toml", include_str!("../data/labels_C3.toml")),
    ("labels_C4.toml", include_str!("../data/labels_C4.toml")),
    ("labels_D4.toml", include_str!("../data/labels_D4.toml")),
    ("labels_G2.toml", include_str!("../data/labels_G2.toml")),
    ("labels_F4.toml", include_str!("../data/labels_F4.toml")),
    ("families_A1.toml", include_str!("../data/families_A1.toml")),
    ("families_A2.toml", include_str!("../data/families_A2.toml")),
    ("families_A3.toml", include_str!("../data/families_A3.toml")),
    ("families_B2.toml", include_str!("../data/families_B2.toml")),
    ("families_B3.toml", include_str!("../data/families_B3.toml")),
    ("families_B4.toml", include_str!("../data/families_B4.toml")),
    ("families_C2.toml", include_str!("../data/families_C2.toml")),
    ("families_C3.toml", include_str!("../data/families_C3.toml")),
    ("families_C4.toml", include_str!("../data/families_C4.toml")),
    ("families_D4.toml", include_str!("../data/families_D4.toml")),
    ("families_G2.toml", include_str!("../data/families_G2.toml")),
    ("families_F4.toml", include_str!("../data/families_F4.toml")),
];

const CHECKSUM_PREFIX: &str = "# checksum: sha256:";

/// Prefix a body with its checksum line.
pub fn seal(body: &str) -> String {
    format!("{CHECKSUM_PREFIX}{}\n{body}", hex::encode(Sha256::digest(body.as_bytes())))
}

/// Check the checksum line and return the body after it.
pub fn verify_checksum<'a>(name: &str, text: &'a str) -> Result<&'a str> {
    let (first, body) = text.split_once('\n').ok_or_else(|| Error::DataIntegrity(format!("{name}: empty file")))?;
    let expected = first
        .trim_end()
        .strip_prefix(CHECKSUM_PREFIX)
        .ok_or_else(|| Error::DataIntegrity(format!("{name}: missing checksum line")))?;
    let actual = hex::encode(Sha256::digest(body.as_bytes()));
    if actual != expected {
        return Err(Error::DataIntegrity(format!("{name}: checksum mismatch")));
    }
    Ok(body)
}

/// Where curated files are read from.
#[derive(Clone, Debug, Default)]
pub struct DataSource {
    pub dir: Option<PathBuf>,
}

impl DataSource {
    pub fn embedded() -> Self {
        DataSource { dir: None }
    }

    pub fn directory(dir: impl AsRef<Path>) -> Self {
        DataSource { dir: Some(dir.as_ref().to_path_buf()) }
    }

    /// Raw text of a file, or `None` if this source has no such file.
    pub fn read(&self, name: &str) -> Result<Option<String>> {
        match &self.dir {
            Some(dir) => {
                let path = dir.join(name);
                if !path.exists() {
                    return Ok(None);
                }
                std::fs::read_to_string(&path)
                    .map(Some)
                    .map_err(|e| Error::DataIntegrity(format!("{}: {e}", path.display())))
            }
            None => Ok(EMBEDDED.iter().find(|(n, _)| *n == name).map(|(_, t)| t.to_string())),
        }
    }

    fn parse<T: serde::de::DeserializeOwned>(&self, name: &str) -> Result<Option<T>> {
        let Some(text) = self.read(name)? else { return Ok(None) };
        let body = verify_checksum(name, &text)?;
        let value: T = toml::from_str(body).map_err(|e| Error::DataIntegrity(format!("{name}: {e}")))?;
        Ok(Some(value))
    }

    pub fn labels(&self, t: &CartanType) -> Result<Option<LabelFile>> {
        let file: Option<LabelFile> = self.parse(&format!("labels_{t}.toml"))?;
        if let Some(f) = &file {
            check_type(&f.cartan_type, t)?;
        }
        Ok(file)
    }

    pub fn families(&self, t: &CartanType) -> Result<Option<FamilyFile>> {
        let file: Option<FamilyFile> = self.parse(&format!("families_{t}.toml"))?;
        if let Some(f) = &file {
            check_type(&f.cartan_type, t)?;
        }
        Ok(file)
    }
}

fn check_type(declared: &str, t: &CartanType) -> Result<()> {
    let parsed: CartanType = declared.parse()?;
    if parsed != *t {
        return Err(Error::DataIntegrity(format!("file declares type {declared}, expected {t}")));
    }
    Ok(())
}

/// Types with shipped label and family files.
pub fn shipped_types() -> Vec<CartanType> {
    EMBEDDED
        .iter()
        .filter_map(|(n, _)| n.strip_prefix("families_").and_then(|s| s.strip_suffix(".toml")))
        .map(|s| s.parse().expect("shipped type name parses"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_files_verify() {
        for (name, text) in EMBEDDED {
            verify_checksum(name, text).unwrap();
        }
    }

    #[test]
    fn tampering_is_detected() {
        let sealed = seal("type = \"A1\"\n");
        assert!(verify_checksum("x", &sealed).is_ok());
        let tampered = sealed.replace("A1", "B2");
        assert!(matches!(verify_checksum("x", &tampered), Err(Error::DataIntegrity(_))));
        assert!(matches!(verify_checksum("x", "no checksum\nbody"), Err(Error::DataIntegrity(_))));
    }
}
