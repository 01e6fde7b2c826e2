use std::fmt::Write as _;

use super::grid::GridHierarchy;
use super::mask::SignificanceMask;
use super::transform::MRState;
use crate::{Error, Result};

pub const MASK_HEADER: &str = "level,index,x_position,detail_value";

/// One line of a mask dump.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaskRecord {
    pub level: usize,
    pub index: usize,
    pub x: f64,
    pub detail: f64,
}

/// Retained coefficients as `level,index,x_position,detail_value` lines.
pub fn format_mask_dump(
    mr: &MRState,
    mask: &SignificanceMask,
    hierarchy: &GridHierarchy,
) -> String {
    let mut out = String::with_capacity(32 * (mask.count() + 1));
    out.push_str(MASK_HEADER);
    out.push('\n');
    for (k, j) in mask.iter() {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            k,
            j,
            hierarchy.detail_position(k, j),
            mr.detail(k, j)
        );
    }
    out
}

pub fn parse_mask_dump(text: &str) -> Result<Vec<MaskRecord>> {
    let mut records = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || (n == 0 && line == MASK_HEADER) {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            line: n + 1,
            message,
        };
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != 4 {
            return Err(parse_err(format!(
                "expected 4 fields, found {}",
                fields.len()
            )));
        }
        let level: usize = fields[0]
            .parse()
            .map_err(|e| parse_err(format!("level: {e}")))?;
        if level == 0 {
            return Err(parse_err("level must be at least 1".into()));
        }
        let index = fields[1]
            .parse()
            .map_err(|e| parse_err(format!("index: {e}")))?;
        let x = fields[2]
            .parse()
            .map_err(|e| parse_err(format!("x_position: {e}")))?;
        let detail = fields[3]
            .parse()
            .map_err(|e| parse_err(format!("detail_value: {e}")))?;
        records.push(MaskRecord {
            level,
            index,
            x,
            detail,
        });
    }
    Ok(records)
}

/// Rebuild a mask from parsed records, rejecting positions outside the
/// hierarchy.
pub fn mask_from_records(
    records: &[MaskRecord],
    hierarchy: &GridHierarchy,
) -> Result<SignificanceMask> {
    let mut mask = SignificanceMask::empty(hierarchy);
    for r in records {
        if r.level > hierarchy.levels() || r.index >= hierarchy.intervals(r.level) {
            return Err(Error::invalid(
                "mask",
                format!("detail ({}, {}) outside hierarchy", r.level, r.index),
            ));
        }
        mask.set(r.level, r.index);
    }
    Ok(mask)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_malformed_lines() {
        assert!(parse_mask_dump("1,2,3").is_err());
        assert!(parse_mask_dump("a,2,0.5,1e-3").is_err());
        assert!(parse_mask_dump("0,2,0.5,1e-3").is_err());
        let err = parse_mask_dump("level,index,x_position,detail_value\n1,2,0.5,x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn out_of_range_record() {
        let g = GridHierarchy::new(16, 2, 1.0).unwrap();
        let r = parse_mask_dump("3,0,0.1,0.0").unwrap();
        assert!(mask_from_records(&r, &g).is_err());
        let r = parse_mask_dump("1,8,0.1,0.0").unwrap();
        assert!(mask_from_records(&r, &g).is_err());
    }
}
