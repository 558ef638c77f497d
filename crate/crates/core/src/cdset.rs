//! Line-oriented `CDSET 1` degree-set files.
//!
//! ```text
//! CDSET 1
//! group=A
//! n=5
//! count=4
//! multiplicity=0
//! 1
//! 3
//! 4
//! 5
//! sha256=<hex of every preceding byte, newlines included>
//! ```

use std::fs;
use std::io::Write;
use std::path::Path;

use num_bigint::BigUint;
use sha2::{Digest, Sha256};

use crate::degree::{DegreeSet, GroupKind, GroupTag};
use crate::error::CacheError;

const MAGIC: &str = "CDSET 1";

pub fn encode(set: &DegreeSet) -> String {
    let group = set.group();
    let mut out = String::new();
    out.push_str(MAGIC);
    out.push('\n');
    out.push_str(&format!("group={}\n", group.kind().label()));
    out.push_str(&format!("n={}\n", group.n()));
    out.push_str(&format!("count={}\n", set.len()));
    out.push_str(&format!(
        "multiplicity={}\n",
        u8::from(set.has_multiplicities())
    ));
    match set.multiplicities() {
        Some(mult) => {
            for (d, m) in set.degrees().iter().zip(mult) {
                out.push_str(&format!("{d} {m}\n"));
            }
        }
        None => {
            for d in set.degrees() {
                out.push_str(&format!("{d}\n"));
            }
        }
    }
    let digest = hex::encode(Sha256::digest(out.as_bytes()));
    out.push_str(&format!("sha256={digest}\n"));
    out
}

fn header_value<'a>(line: Option<&'a str>, key: &str, lineno: usize) -> Result<&'a str, CacheError> {
    let line = line.ok_or(CacheError::Truncated)?;
    line.strip_prefix(key)
        .and_then(|r| r.strip_prefix('='))
        .ok_or_else(|| CacheError::Malformed {
            line: lineno,
            reason: format!("expected {key}=..., found {line:?}"),
        })
}

fn parse_number<T: std::str::FromStr>(s: &str, lineno: usize) -> Result<T, CacheError> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(CacheError::Malformed {
            line: lineno,
            reason: format!("{s:?} is not a decimal integer"),
        });
    }
    s.parse().map_err(|_| CacheError::Malformed {
        line: lineno,
        reason: format!("{s:?} is out of range"),
    })
}

pub fn decode(text: &str) -> Result<DegreeSet, CacheError> {
    if text.is_empty() {
        return Err(CacheError::Truncated);
    }
    if !text.ends_with('\n') {
        return Err(CacheError::Truncated);
    }
    let body = &text[..text.len() - 1];
    let (payload, last) = match body.rfind('\n') {
        Some(i) => (&text[..=i], &body[i + 1..]),
        None => ("", body),
    };
    let mut lines = payload.lines();
    let magic = lines.next().ok_or(CacheError::Truncated)?;
    if magic != MAGIC {
        return Err(CacheError::Version(magic.to_string()));
    }
    let kind: GroupKind = header_value(lines.next(), "group", 2)?.parse()?;
    let n: u32 = parse_number(header_value(lines.next(), "n", 3)?, 3)?;
    let count: usize = parse_number(header_value(lines.next(), "count", 4)?, 4)?;
    let with_mult = match header_value(lines.next(), "multiplicity", 5)? {
        "0" => false,
        "1" => true,
        other => {
            return Err(CacheError::Malformed {
                line: 5,
                reason: format!("multiplicity must be 0 or 1, found {other:?}"),
            })
        }
    };
    let stored = last.strip_prefix("sha256=").ok_or(CacheError::Truncated)?;
    let computed = hex::encode(Sha256::digest(payload.as_bytes()));
    if stored != computed {
        return Err(CacheError::Digest {
            stored: stored.to_string(),
            computed,
        });
    }

    let mut degrees: Vec<BigUint> = Vec::with_capacity(count);
    let mut mult: Vec<u64> = Vec::new();
    for (i, line) in lines.enumerate() {
        let lineno = i + 6;
        let mut fields = line.split(' ');
        let d: BigUint = parse_number(fields.next().unwrap_or(""), lineno)?;
        match (with_mult, fields.next(), fields.next()) {
            (false, None, _) => {}
            (true, Some(m), None) => mult.push(parse_number(m, lineno)?),
            _ => {
                return Err(CacheError::Malformed {
                    line: lineno,
                    reason: format!("unexpected field layout {line:?}"),
                })
            }
        }
        if degrees.last().is_some_and(|prev| *prev >= d) {
            return Err(CacheError::Unsorted(lineno));
        }
        degrees.push(d);
    }
    if degrees.len() != count {
        return Err(CacheError::Count {
            header: count,
            body: degrees.len(),
        });
    }
    let group = GroupTag::new(kind, n)?;
    Ok(DegreeSet::new(group, degrees, with_mult.then_some(mult))?)
}

pub fn read(path: &Path) -> Result<DegreeSet, CacheError> {
    let text = fs::read_to_string(path).map_err(|source| CacheError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    decode(&text)
}

/// Writes through a temporary sibling file and renames it into place.
pub fn write(set: &DegreeSet, path: &Path) -> Result<(), CacheError> {
    let io = |source| CacheError::Io {
        path: path.to_path_buf(),
        source,
    };
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(io)?;
    }
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    let mut file = fs::File::create(&tmp).map_err(io)?;
    file.write_all(encode(set).as_bytes()).map_err(io)?;
    file.sync_all().map_err(io)?;
    drop(file);
    fs::rename(&tmp, path).map_err(io)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degree::DegreeEngine;

    fn a5(mult: bool) -> DegreeSet {
        let engine = DegreeEngine::new(1);
        (*engine
            .degree_set(GroupTag::alternating(5).unwrap(), mult)
            .unwrap())
        .clone()
    }

    #[test]
    fn layout() {
        let text = encode(&a5(false));
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(
            &lines[..9],
            &["CDSET 1", "group=A", "n=5", "count=4", "multiplicity=0", "1", "3", "4", "5"]
        );
        assert!(lines[9].starts_with("sha256="));
        assert_eq!(lines.len(), 10);
        let with_mult = encode(&a5(true));
        assert!(with_mult.contains("\n3 2\n"));
    }

    #[test]
    fn round_trip() {
        for mult in [false, true] {
            let set = a5(mult);
            assert_eq!(decode(&encode(&set)).unwrap(), set);
        }
    }

    #[test]
    fn rejects_corruption() {
        let text = encode(&a5(false));
        assert!(matches!(
            decode(&text.replace("CDSET 1", "CDSET 2")),
            Err(CacheError::Version(_))
        ));
        assert!(matches!(
            decode(&text.replace("\n4\n", "\n6\n")),
            Err(CacheError::Digest { .. })
        ));
        assert!(matches!(
            decode(&text[..text.len() - 20]),
            Err(CacheError::Truncated | CacheError::Digest { .. })
        ));
        assert!(matches!(decode(""), Err(CacheError::Truncated)));
    }

    #[test]
    fn rejects_unsorted_body_with_valid_digest() {
        let payload = "CDSET 1\ngroup=A\nn=5\ncount=4\nmultiplicity=0\n1\n4\n3\n5\n";
        let text = format!("{payload}sha256={}\n", hex::encode(Sha256::digest(payload)));
        assert!(matches!(decode(&text), Err(CacheError::Unsorted(8))));
    }

    #[test]
    fn rejects_count_mismatch_with_valid_digest() {
        let payload = "CDSET 1\ngroup=A\nn=5\ncount=5\nmultiplicity=0\n1\n3\n4\n5\n";
        let text = format!("{payload}sha256={}\n", hex::encode(Sha256::digest(payload)));
        assert!(matches!(
            decode(&text),
            Err(CacheError::Count { header: 5, body: 4 })
        ));
    }
}
