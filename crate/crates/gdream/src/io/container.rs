//! Little-endian binary array container shared by the GDEP / GDSC / GDCK
//! file formats.
//!
//! A container file starts with a 4-byte magic and a `u32` version, followed
//! by format-specific payload. Arrays inside the payload are stored as
//! `dtype (u32) | rank (u32) | dims (u64 each) | data (little-endian,
//! row-major)`. Strings are length-prefixed UTF-8.

use crate::{GdError, Result};
use ndarray::{ArrayD, ArrayViewD, IxDyn};
use std::io::{Read, Write};

pub const CONTAINER_VERSION: u32 = 1;

pub const DTYPE_F64: u32 = 0;
pub const DTYPE_F32: u32 = 1;
pub const DTYPE_U8: u32 = 2;
pub const DTYPE_I64: u32 = 3;

/// Element types that can live inside a container array block.
pub trait Element: Copy + Default {
    const DTYPE: u32;
    const SIZE: usize;
    fn write_le(self, out: &mut Vec<u8>);
    fn read_le(bytes: &[u8]) -> Self;
}

macro_rules! impl_element {
    ($t:ty, $code:expr, $size:expr) => {
        impl Element for $t {
            const DTYPE: u32 = $code;
            const SIZE: usize = $size;
            fn write_le(self, out: &mut Vec<u8>) {
                out.extend_from_slice(&self.to_le_bytes());
            }
            fn read_le(bytes: &[u8]) -> Self {
                <$t>::from_le_bytes(bytes.try_into().expect("sized read"))
            }
        }
    };
}

impl_element!(f64, DTYPE_F64, 8);
impl_element!(f32, DTYPE_F32, 4);
impl_element!(u8, DTYPE_U8, 1);
impl_element!(i64, DTYPE_I64, 8);

fn truncated(what: &str) -> GdError {
    GdError::Truncated(what.to_string())
}

/// Reads exactly `n` bytes, mapping EOF to a `Truncated` error that names
/// the field being read.
fn read_exact(r: &mut impl Read, n: usize, what: &str) -> Result<Vec<u8>> {
    let mut buf = vec![0u8; n];
    r.read_exact(&mut buf).map_err(|_| truncated(what))?;
    Ok(buf)
}

pub fn write_u32(out: &mut Vec<u8>, v: u32) {
    out.extend_from_slice(&v.to_le_bytes());
}

pub fn write_u64(out: &mut Vec<u8>, v: u64) {
    out.extend_from_slice(&v.to_le_bytes());
}

pub fn read_u32(r: &mut impl Read, what: &str) -> Result<u32> {
    let b = read_exact(r, 4, what)?;
    Ok(u32::from_le_bytes(b.try_into().unwrap()))
}

pub fn read_u64(r: &mut impl Read, what: &str) -> Result<u64> {
    let b = read_exact(r, 8, what)?;
    Ok(u64::from_le_bytes(b.try_into().unwrap()))
}

pub fn write_string(out: &mut Vec<u8>, s: &str) {
    write_u32(out, s.len() as u32);
    out.extend_from_slice(s.as_bytes());
}

pub fn read_string(r: &mut impl Read, what: &str) -> Result<String> {
    let len = read_u32(r, what)? as usize;
    let bytes = read_exact(r, len, what)?;
    String::from_utf8(bytes).map_err(|_| GdError::invalid(format!("{what}: invalid UTF-8")))
}

/// Writes the shared file header (magic + version).
pub fn write_header(out: &mut Vec<u8>, magic: &[u8; 4], version: u32) {
    out.extend_from_slice(magic);
    write_u32(out, version);
}

/// Reads and validates magic + version. Mismatches map to the distinct
/// `BadMagic` / `VersionMismatch` error variants.
pub fn read_header(r: &mut impl Read, magic: &[u8; 4], version: u32) -> Result<()> {
    let found = read_exact(r, 4, "magic")?;
    let found: [u8; 4] = found.try_into().unwrap();
    if &found != magic {
        return Err(GdError::BadMagic {
            expected: *magic,
            found,
        });
    }
    let v = read_u32(r, "version")?;
    if v != version {
        return Err(GdError::VersionMismatch {
            expected: version,
            found: v,
        });
    }
    Ok(())
}

/// Appends one array block to `out`.
pub fn write_array<E: Element>(out: &mut Vec<u8>, arr: ArrayViewD<'_, E>) {
    write_u32(out, E::DTYPE);
    write_u32(out, arr.ndim() as u32);
    for &d in arr.shape() {
        write_u64(out, d as u64);
    }
    out.reserve(arr.len() * E::SIZE);
    for &v in arr.iter() {
        v.write_le(out);
    }
}

/// Reads one array block, checking the stored dtype against `E`.
pub fn read_array<E: Element>(r: &mut impl Read, what: &str) -> Result<ArrayD<E>> {
    let dtype = read_u32(r, what)?;
    if dtype != E::DTYPE {
        return Err(GdError::invalid(format!(
            "{what}: dtype code {dtype} does not match expected {}",
            E::DTYPE
        )));
    }
    let rank = read_u32(r, what)? as usize;
    if rank > 8 {
        return Err(GdError::invalid(format!("{what}: rank {rank} too large")));
    }
    let mut dims = Vec::with_capacity(rank);
    let mut total = 1usize;
    for _ in 0..rank {
        let d = read_u64(r, what)? as usize;
        total = total
            .checked_mul(d)
            .ok_or_else(|| GdError::invalid(format!("{what}: dims overflow")))?;
        dims.push(d);
    }
    let bytes = read_exact(r, total * E::SIZE, what)?;
    let mut data = Vec::with_capacity(total);
    for i in 0..total {
        data.push(E::read_le(&bytes[i * E::SIZE..(i + 1) * E::SIZE]));
    }
    ArrayD::from_shape_vec(IxDyn(&dims), data)
        .map_err(|e| GdError::invalid(format!("{what}: {e}")))
}

/// Writes a standalone single-array file: header + one array block.
pub fn write_array_file<E: Element>(
    path: &std::path::Path,
    magic: &[u8; 4],
    arr: ArrayViewD<'_, E>,
) -> Result<()> {
    let mut out = Vec::new();
    write_header(&mut out, magic, CONTAINER_VERSION);
    write_array(&mut out, arr);
    std::fs::write(path, out)?;
    Ok(())
}

/// Reads a standalone single-array file written by [`write_array_file`].
pub fn read_array_file<E: Element>(path: &std::path::Path, magic: &[u8; 4]) -> Result<ArrayD<E>> {
    let bytes = std::fs::read(path)?;
    let mut r = bytes.as_slice();
    read_header(&mut r, magic, CONTAINER_VERSION)?;
    let name = path
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let arr = read_array(&mut r, &name)?;
    let mut rest = [0u8; 1];
    if r.read(&mut rest)? != 0 {
        return Err(GdError::invalid(format!("{name}: trailing bytes")));
    }
    Ok(arr)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::Array2;

    #[test]
    fn array_roundtrip_f64() {
        let a = Array2::from_shape_fn((3, 5), |(i, j)| (i * 7 + j) as f64 * 0.37 - 1.0);
        let mut buf = Vec::new();
        write_array(&mut buf, a.view().into_dyn());
        let b: ArrayD<f64> = read_array(&mut buf.as_slice(), "t").unwrap();
        assert_eq!(a.into_dyn(), b);
    }

    #[test]
    fn header_rejects_bad_magic() {
        let mut buf = Vec::new();
        write_header(&mut buf, b"GDEP", 1);
        let err = read_header(&mut buf.as_slice(), b"GDSC", 1).unwrap_err();
        assert!(matches!(err, GdError::BadMagic { .. }));
    }

    #[test]
    fn header_rejects_version_skew() {
        let mut buf = Vec::new();
        write_header(&mut buf, b"GDCK", 9);
        let err = read_header(&mut buf.as_slice(), b"GDCK", 1).unwrap_err();
        assert!(matches!(
            err,
            GdError::VersionMismatch {
                expected: 1,
                found: 9
            }
        ));
    }

    #[test]
    fn truncation_is_its_own_error() {
        let mut buf = Vec::new();
        write_header(&mut buf, b"GDEP", 1);
        let a = Array2::<f32>::zeros((4, 4));
        write_array(&mut buf, a.view().into_dyn());
        buf.truncate(buf.len() - 3);
        let mut r = buf.as_slice();
        read_header(&mut r, b"GDEP", 1).unwrap();
        let err = read_array::<f32>(&mut r, "t").unwrap_err();
        assert!(matches!(err, GdError::Truncated(_)));
    }

    #[test]
    fn dtype_mismatch_detected() {
        let mut buf = Vec::new();
        let a = Array2::<f32>::zeros((2, 2));
        write_array(&mut buf, a.view().into_dyn());
        let err = read_array::<f64>(&mut buf.as_slice(), "t").unwrap_err();
        assert!(matches!(err, GdError::Invalid(_)));
    }
}
