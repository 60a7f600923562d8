//! The builder-family value table and its golden copy.

use seifert_core::SeifertSurfaceModel;

use crate::report::{render_table, InvariantReport};

/// Golden rendering of [`family_table`], checked in next to the crate.
pub const GOLDEN: &str = include_str!("../golden/table.txt");

/// Every builder family over a fixed parameter range, in a fixed order:
/// `s2xs2(a, b)` for `a, b in [-3, 3]`, `cp2(k)` and `cp2bar(k)` for
/// `k in [-5, 5]`, `kummer(a, b)` for `a, b in [-2, 2]`, then `P` and `Q`.
pub fn family_surfaces() -> Vec<SeifertSurfaceModel> {
    let mut out = Vec::new();
    for a in -3i64..=3 {
        for b in -3i64..=3 {
            out.push(SeifertSurfaceModel::s2xs2(a, b));
        }
    }
    out.extend((-5i64..=5).map(SeifertSurfaceModel::cp2));
    out.extend((-5i64..=5).map(SeifertSurfaceModel::cp2bar));
    for a in -2i64..=2 {
        for b in -2i64..=2 {
            out.push(SeifertSurfaceModel::kummer(a, b));
        }
    }
    out.push(SeifertSurfaceModel::p_block());
    out.push(SeifertSurfaceModel::q_block());
    out
}

pub fn family_table() -> Vec<InvariantReport> {
    family_surfaces().iter().map(InvariantReport::of).collect()
}

pub fn render_family_table() -> String {
    render_table(&family_table())
}

/// Line-by-line differences between the generated table and the golden
/// file, as `(line number, golden, generated)`.
pub fn golden_mismatches(generated: &str, golden: &str) -> Vec<(usize, String, String)> {
    let g: Vec<&str> = golden.lines().collect();
    let n: Vec<&str> = generated.lines().collect();
    (0..g.len().max(n.len()))
        .filter_map(|i| {
            let (a, b) = (g.get(i).copied().unwrap_or(""), n.get(i).copied().unwrap_or(""));
            (a != b).then(|| (i + 1, a.to_owned(), b.to_owned()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_matches_golden() {
        assert_eq!(golden_mismatches(&render_family_table(), GOLDEN), vec![]);
    }

    #[test]
    fn mismatch_detection() {
        let d = golden_mismatches("a\nb\n", "a\nc\nd\n");
        assert_eq!(d, vec![(2, "c".into(), "b".into()), (3, "d".into(), String::new())]);
    }
}
