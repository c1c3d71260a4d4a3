//! Grayscale image input/output: binary PGM (P5) and grayscale PNG.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

/// A grayscale raster with pixels scaled to [0, 1], row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct GrayImage {
    pub width: usize,
    pub height: usize,
    pub pixels: Vec<f64>,
}

impl GrayImage {
    pub fn new(width: usize, height: usize, pixels: Vec<f64>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::Format("image has a zero dimension".into()));
        }
        if pixels.len() != width * height {
            return Err(Error::Format(format!(
                "pixel count {} does not match {width}x{height}",
                pixels.len()
            )));
        }
        if !pixels.iter().all(|p| p.is_finite()) {
            return Err(Error::Format("image contains non-finite pixels".into()));
        }
        Ok(GrayImage {
            width,
            height,
            pixels,
        })
    }

    /// Grid shape as used by the transform pipelines: rows, then columns.
    pub fn shape(&self) -> [usize; 2] {
        [self.height, self.width]
    }
}

/// Load an 8-bit binary PGM (P5) or an 8/16-bit grayscale PNG. Color images
/// are rejected rather than silently converted.
pub fn load_image(path: &Path) -> Result<GrayImage> {
    let bytes = fs::read(path)?;
    if bytes.starts_with(b"P5") {
        return parse_pgm(&bytes);
    }
    if bytes.starts_with(&[0x89, b'P', b'N', b'G']) {
        return parse_png(&bytes);
    }
    Err(Error::Format(
        "unsupported format: expected binary PGM (P5) or grayscale PNG".into(),
    ))
}

fn parse_png(bytes: &[u8]) -> Result<GrayImage> {
    let decoded = image::load_from_memory_with_format(bytes, image::ImageFormat::Png)
        .map_err(|e| Error::Format(format!("png decode: {e}")))?;
    match decoded {
        image::DynamicImage::ImageLuma8(img) => {
            let (w, h) = (img.width() as usize, img.height() as usize);
            let pixels = img.into_raw().iter().map(|&p| p as f64 / 255.0).collect();
            GrayImage::new(w, h, pixels)
        }
        image::DynamicImage::ImageLuma16(img) => {
            let (w, h) = (img.width() as usize, img.height() as usize);
            let pixels = img
                .into_raw()
                .iter()
                .map(|&p| p as f64 / 65535.0)
                .collect();
            GrayImage::new(w, h, pixels)
        }
        _ => Err(Error::Format(
            "grayscale required: color PNG inputs are not converted".into(),
        )),
    }
}

/// Hand-rolled P5 reader: "P5", whitespace-separated width, height, maxval
/// (with `#` comments), one whitespace byte, then width*height samples.
fn parse_pgm(bytes: &[u8]) -> Result<GrayImage> {
    let mut pos = 2; // past "P5"
    let mut fields = [0usize; 3];
    for field in fields.iter_mut() {
        skip_pgm_whitespace(bytes, &mut pos)?;
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        if start == pos {
            return Err(Error::Format("truncated PGM header".into()));
        }
        let text = std::str::from_utf8(&bytes[start..pos]).expect("digits are utf8");
        *field = text
            .parse()
            .map_err(|_| Error::Format("bad PGM header number".into()))?;
    }
    let [width, height, maxval] = fields;
    if width == 0 || height == 0 {
        return Err(Error::Format("image has a zero dimension".into()));
    }
    if maxval == 0 || maxval > 255 {
        return Err(Error::Format(format!(
            "unsupported PGM maxval {maxval}: 8-bit samples required"
        )));
    }
    // Exactly one whitespace byte separates the header from the samples.
    if pos >= bytes.len() || !bytes[pos].is_ascii_whitespace() {
        return Err(Error::Format("truncated PGM: missing sample separator".into()));
    }
    pos += 1;
    let need = width * height;
    let data = &bytes[pos..];
    if data.len() < need {
        return Err(Error::Format(format!(
            "truncated PGM: expected {need} sample bytes, found {}",
            data.len()
        )));
    }
    let scale = 1.0 / maxval as f64;
    let pixels = data[..need].iter().map(|&b| b as f64 * scale).collect();
    GrayImage::new(width, height, pixels)
}

fn skip_pgm_whitespace(bytes: &[u8], pos: &mut usize) -> Result<()> {
    loop {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
        if *pos < bytes.len() && bytes[*pos] == b'#' {
            while *pos < bytes.len() && bytes[*pos] != b'\n' {
                *pos += 1;
            }
        } else {
            break;
        }
    }
    if *pos >= bytes.len() {
        return Err(Error::Format("truncated PGM header".into()));
    }
    Ok(())
}

/// Write values already scaled to [0, 1] as an 8-bit binary PGM.
pub fn save_pgm(path: &Path, width: usize, height: usize, values: &[f64]) -> Result<()> {
    assert_eq!(values.len(), width * height);
    let mut out = format!("P5\n{width} {height}\n255\n").into_bytes();
    out.extend(
        values
            .iter()
            .map(|&v| (v.clamp(0.0, 1.0) * 255.0).round() as u8),
    );
    fs::write(path, out)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn write_temp(bytes: &[u8]) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(bytes).unwrap();
        f.flush().unwrap();
        f
    }

    #[test]
    fn pgm_2x2_scales_linearly() {
        let f = write_temp(b"P5\n2 2\n255\n\x00\xff\x80\x40");
        let img = load_image(f.path()).unwrap();
        assert_eq!(img.width, 2);
        assert_eq!(img.height, 2);
        assert_eq!(img.pixels, vec![0.0, 1.0, 128.0 / 255.0, 64.0 / 255.0]);
    }

    #[test]
    fn pgm_with_comment_parses() {
        let f = write_temp(b"P5\n# a comment\n2 1\n255\n\x10\x20");
        let img = load_image(f.path()).unwrap();
        assert_eq!(img.width, 2);
        assert_eq!(img.height, 1);
    }

    #[test]
    fn empty_file_is_truncated() {
        let f = write_temp(b"");
        let err = load_image(f.path()).unwrap_err();
        assert!(err.to_string().contains("unsupported format"));
        let f = write_temp(b"P5\n2 2\n255\n\x00\xff");
        let err = load_image(f.path()).unwrap_err();
        assert!(err.to_string().contains("truncated"), "{err}");
    }

    #[test]
    fn zero_dimension_rejected() {
        let f = write_temp(b"P5\n0 2\n255\n");
        assert!(load_image(f.path()).is_err());
    }

    #[test]
    fn color_png_rejected() {
        let rgb = image::RgbImage::from_pixel(2, 2, image::Rgb([1, 2, 3]));
        let mut buf = std::io::Cursor::new(Vec::new());
        image::DynamicImage::ImageRgb8(rgb)
            .write_to(&mut buf, image::ImageFormat::Png)
            .unwrap();
        let f = write_temp(buf.get_ref());
        let err = load_image(f.path()).unwrap_err();
        assert!(err.to_string().contains("grayscale required"), "{err}");
    }

    #[test]
    fn gray_png_roundtrips() {
        let gray = image::GrayImage::from_fn(3, 2, |x, y| image::Luma([(x * 40 + y * 100) as u8]));
        let mut buf = std::io::Cursor::new(Vec::new());
        image::DynamicImage::ImageLuma8(gray)
            .write_to(&mut buf, image::ImageFormat::Png)
            .unwrap();
        let f = write_temp(buf.get_ref());
        let img = load_image(f.path()).unwrap();
        assert_eq!(img.width, 3);
        assert_eq!(img.height, 2);
        assert!((img.pixels[4] - 140.0 / 255.0).abs() < 1e-12);
    }

    #[test]
    fn save_pgm_roundtrips_quantized() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("x.pgm");
        let values = vec![0.0, 0.5, 1.0, 0.25];
        save_pgm(&path, 2, 2, &values).unwrap();
        let img = load_image(&path).unwrap();
        for (a, b) in img.pixels.iter().zip(&values) {
            assert!((a - b).abs() <= 0.5 / 255.0 + 1e-12);
        }
    }
}
