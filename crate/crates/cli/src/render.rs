//! Plain-text layouts.

use motivic_core::realization::BiPolynomial;

/// Rows of the Hodge diamond, top row `h^{0,0}`. Row `d` lists `h^{p,q}`
/// with `p + q = d` from `h^{d,0}` down to `h^{0,d}` (clipped to the
/// dimension).
pub fn diamond_rows(h: &BiPolynomial) -> Vec<Vec<String>> {
    let n = h.dimension().unwrap_or(0);
    (0..=2 * n)
        .map(|d| {
            let lo = d.saturating_sub(n);
            let hi = d.min(n);
            (lo..=hi)
                .rev()
                .map(|p| h.coefficient(p, d - p).to_string())
                .collect()
        })
        .collect()
}

/// The Hodge diamond as a centred triangle-on-triangle of integers.
pub fn diamond(h: &BiPolynomial) -> String {
    let rows = diamond_rows(h);
    let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
    // Keep the pitch even so that half a cell is a whole number of columns.
    let gap = if width % 2 == 0 { 2 } else { 1 };
    let pitch = width + gap;
    let widest = rows.iter().map(Vec::len).max().unwrap_or(1);
    let mut out = String::new();
    for row in &rows {
        let mut line = " ".repeat((widest - row.len()) * pitch / 2);
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str(&" ".repeat(gap));
            }
            line.push_str(&format!("{cell:^width$}"));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Left-aligned columns separated by two spaces.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let header: Vec<String> = header.iter().map(|h| h.to_string()).collect();
    for row in std::iter::once(&header).chain(rows) {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use motivic_core::formulas::moduli_motive_delbano;
    use motivic_core::realization::hodge_polynomial;
    use motivic_core::Genus;

    #[test]
    fn genus_two_diamond() {
        let h = hodge_polynomial(&moduli_motive_delbano(Genus::new(2).unwrap()));
        let rows = diamond_rows(&h);
        assert_eq!(rows.len(), 7);
        assert_eq!(rows[0], ["1"]);
        assert_eq!(rows[2], ["0", "1", "0"]);
        assert_eq!(rows[3], ["0", "2", "2", "0"]);
        assert_eq!(rows[6], ["1"]);
        let expected = "   1\n  0 0\n 0 1 0\n0 2 2 0\n 0 1 0\n  0 0\n   1\n";
        assert_eq!(diamond(&h), expected);
    }

    #[test]
    fn wide_entries_stay_centred() {
        let h = hodge_polynomial(&moduli_motive_delbano(Genus::new(4).unwrap()));
        let text = diamond(&h);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 19);
        // Duality makes the picture symmetric top to bottom.
        for i in 0..lines.len() {
            assert_eq!(lines[i], lines[lines.len() - 1 - i]);
        }
    }

    #[test]
    fn point_diamond() {
        assert_eq!(diamond(&BiPolynomial::one()), "1\n");
    }

    #[test]
    fn aligned_table() {
        let t = table(
            &["a", "bb"],
            &[
                vec!["xxx".into(), "1".into()],
                vec!["y".into(), "22".into()],
            ],
        );
        assert_eq!(t, "a    bb\nxxx  1\ny    22\n");
    }
}
