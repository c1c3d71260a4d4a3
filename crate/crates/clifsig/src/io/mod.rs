//! Data ingestion and persistence: grayscale image loading, the raw field
//! archive, and plot-ready exports of decompositions.
//!
//! Numeric fields are persisted as raw little-endian f64 planes behind a
//! JSON header ([`archive`]); PGM previews are lossy min-max renderings with
//! the normalization constants recorded in a sidecar, so the archive stays
//! the source of truth.

pub mod archive;
pub mod export;
pub mod image;

pub use archive::{ArchiveHeader, FieldArchive, ARCHIVE_MAGIC};
pub use export::export_maps;
pub use image::{load_image, save_pgm, GrayImage};
