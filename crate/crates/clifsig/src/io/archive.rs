//! The raw field archive: `CLIFSIG1` magic, a length-prefixed JSON header,
//! then the named component planes as little-endian f64, in header order.
//! Round trips are bitwise.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multipliers::{MultiplierConfig, SymmetryClass};

pub const ARCHIVE_MAGIC: &[u8; 8] = b"CLIFSIG1";

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ArchiveHeader {
    /// Grid shape, rows then columns for images.
    pub shape: Vec<usize>,
    /// Component plane names, in payload order.
    pub components: Vec<String>,
    /// Always "f64-le".
    pub dtype: String,
    /// How the multiplier was built, when the archive came from a
    /// decomposition; enough to rebuild it bin-for-bin.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplier: Option<MultiplierConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<SymmetryClass>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FieldArchive {
    pub header: ArchiveHeader,
    /// One plane per component, each `shape.iter().product()` long.
    pub planes: Vec<Vec<f64>>,
}

impl FieldArchive {
    pub fn new(header: ArchiveHeader, planes: Vec<Vec<f64>>) -> Result<Self> {
        let cells: usize = header.shape.iter().product();
        if header.components.len() != planes.len() {
            return Err(Error::Format(format!(
                "header names {} components but {} planes supplied",
                header.components.len(),
                planes.len()
            )));
        }
        if let Some(bad) = planes.iter().position(|p| p.len() != cells) {
            return Err(Error::Format(format!(
                "plane `{}` has {} cells, shape implies {cells}",
                header.components[bad],
                planes[bad].len()
            )));
        }
        Ok(FieldArchive { header, planes })
    }

    pub fn plane(&self, name: &str) -> Option<&[f64]> {
        self.header
            .components
            .iter()
            .position(|c| c == name)
            .map(|i| self.planes[i].as_slice())
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let header_json = serde_json::to_vec(&self.header)?;
        let mut bytes = Vec::with_capacity(
            ARCHIVE_MAGIC.len() + 4 + header_json.len() + self.planes.len() * 8,
        );
        bytes.extend_from_slice(ARCHIVE_MAGIC);
        bytes.extend_from_slice(&(header_json.len() as u32).to_le_bytes());
        bytes.extend_from_slice(&header_json);
        for plane in &self.planes {
            for v in plane {
                bytes.extend_from_slice(&v.to_le_bytes());
            }
        }
        fs::write(path, bytes)?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<FieldArchive> {
        let bytes = fs::read(path)?;
        if bytes.len() < ARCHIVE_MAGIC.len() + 4 || &bytes[..8] != ARCHIVE_MAGIC {
            return Err(Error::Format("bad magic: not a CLIFSIG1 archive".into()));
        }
        let header_len = u32::from_le_bytes(bytes[8..12].try_into().unwrap()) as usize;
        let payload_start = 12 + header_len;
        if bytes.len() < payload_start {
            return Err(Error::Format("truncated archive header".into()));
        }
        let header: ArchiveHeader = serde_json::from_slice(&bytes[12..payload_start])?;
        if header.dtype != "f64-le" {
            return Err(Error::Format(format!("unsupported dtype {}", header.dtype)));
        }
        let cells: usize = header.shape.iter().product();
        let expected = cells * header.components.len() * 8;
        let payload = &bytes[payload_start..];
        if payload.len() != expected {
            return Err(Error::Format(format!(
                "payload length mismatch: expected {expected} bytes, found {}",
                payload.len()
            )));
        }
        let planes = payload
            .chunks_exact(cells * 8)
            .map(|chunk| {
                chunk
                    .chunks_exact(8)
                    .map(|b| f64::from_le_bytes(b.try_into().unwrap()))
                    .collect()
            })
            .collect();
        Ok(FieldArchive { header, planes })
    }
}
