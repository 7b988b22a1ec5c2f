//! Family descriptors on the command line.
//!
//! ```text
//! descriptor = block , { "+" , block } ;
//! block      = "general" | "ci-cubics" | count , "-" , shape ;
//! shape      = "aligned" | "on-line" | "on-conic" | "on-cubic"
//!            | "on-curve" , degree ;
//! count      = digit , { digit } ;
//! degree     = digit , { digit } ;
//! ```
//!
//! `general` blocks add nothing: points not covered by a constraint are
//! general. `N-aligned` is the same as `N-on-line`. Examples: `general`,
//! `6-on-conic`, `4-aligned+general`, `ci-cubics`, `7-on-curve4`.

use terracini_core::configurations::Constraint;

pub fn parse_descriptor(s: &str) -> Result<Vec<Constraint>, String> {
    let mut out = Vec::new();
    if s.trim().is_empty() {
        return Err("empty descriptor".into());
    }
    for block in s.split('+') {
        let b = block.trim();
        match b {
            "general" => continue,
            "ci-cubics" => {
                out.push(Constraint::CompleteIntersectionCubics);
                continue;
            }
            _ => {}
        }
        let (count, shape) = b
            .split_once('-')
            .ok_or_else(|| format!("block {b:?}: expected <count>-<shape>, general or ci-cubics"))?;
        let u: usize = count
            .parse()
            .ok()
            .filter(|&u| u > 0)
            .ok_or_else(|| format!("block {b:?}: count must be a positive integer"))?;
        let degree = match shape {
            "aligned" | "on-line" => 1,
            "on-conic" => 2,
            "on-cubic" => 3,
            _ => shape
                .strip_prefix("on-curve")
                .and_then(|e| e.parse::<u32>().ok())
                .filter(|&e| e > 0)
                .ok_or_else(|| format!("block {b:?}: unknown shape {shape:?}"))?,
        };
        out.push(Constraint::OnCurve { u, degree });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use terracini_core::configurations::FamilyDescriptor;

    #[test]
    fn grammar() {
        assert_eq!(parse_descriptor("general").unwrap(), vec![]);
        assert_eq!(
            parse_descriptor("4-aligned+general").unwrap(),
            vec![Constraint::OnCurve { u: 4, degree: 1 }]
        );
        assert_eq!(
            parse_descriptor("6-on-conic + 3-on-line").unwrap(),
            vec![Constraint::OnCurve { u: 6, degree: 2 }, Constraint::OnCurve { u: 3, degree: 1 }]
        );
        assert_eq!(parse_descriptor("ci-cubics").unwrap(), vec![Constraint::CompleteIntersectionCubics]);
        assert_eq!(
            parse_descriptor("11-on-curve4").unwrap(),
            vec![Constraint::OnCurve { u: 11, degree: 4 }]
        );
        for bad in ["", "conic", "0-on-line", "3-on-curve", "3-on-curve0", "x-aligned", "3-on-plane"] {
            assert!(parse_descriptor(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn display_round_trip() {
        for (s, r) in [("general", 4), ("6-on-conic", 6), ("4-on-line+3-on-cubic", 7), ("ci-cubics+general", 10), ("12-on-curve5", 12)] {
            let desc = FamilyDescriptor::with(2, r, &parse_descriptor(s).unwrap());
            assert_eq!(desc.to_string(), s);
            assert_eq!(parse_descriptor(&desc.to_string()).unwrap(), desc.constraints);
        }
    }
}
