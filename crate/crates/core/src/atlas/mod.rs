//! The sixteen binary connectives as Peirce laid them out in January 1902,
//! his X-frame icons, identification of a connective from its values, and
//! the tautology enumerator in [`enumerate`].

pub mod enumerate;

use serde::Serialize;

use crate::bivalent::MatrixTable;
use crate::connective::{pair_label, Connective};
use crate::value::TruthValue;

pub use enumerate::{
    enumerate_tautologies, for_each_tautology, summarize, Emitted, Enumeration, EnumerationSpec, Shape, ShapePolicy,
    SlotSummary,
};

use TruthValue::{F, T};

/// The grid exactly as printed: `PRINTED[row][column - 1]`, rows in input
/// pair order (t,t), (t,f), (f,t), (f,f).
const PRINTED: [[TruthValue; 16]; 4] = [
    [F, F, F, F, T, T, T, F, F, F, F, F, T, T, T, T],
    [F, F, F, T, F, T, F, F, T, T, F, T, F, T, T, T],
    [F, F, T, F, F, F, T, F, T, F, T, T, T, F, T, T],
    [F, T, F, F, F, F, F, T, F, T, T, T, T, T, F, T],
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Annotation {
    pub column: Option<u8>,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PaperTable {
    /// `columns[k - 1]` is printed column `k`, top to bottom.
    pub columns: Vec<[TruthValue; 4]>,
    pub annotations: Vec<Annotation>,
}

impl PaperTable {
    pub fn column(&self, k: u8) -> [TruthValue; 4] {
        self.columns[usize::from(k) - 1]
    }
}

/// The printed 1902 grid, uncorrected, with its anomalies annotated.
///
/// Column 8 is printed as `F F F T`, the same as column 2, and the vector
/// `T F F T` (equivalence) appears nowhere. The annotations are computed
/// from the grid rather than hard-coded.
pub fn paper_table() -> PaperTable {
    let columns: Vec<[TruthValue; 4]> = (0..16).map(|c| [0, 1, 2, 3].map(|r| PRINTED[r][c])).collect();
    let mut annotations = Vec::new();
    for (j, col) in columns.iter().enumerate() {
        if let Some(i) = columns[..j].iter().position(|c| c == col) {
            annotations.push(Annotation {
                column: Some(j as u8 + 1),
                text: format!(
                    "column {} as printed ({}) duplicates column {}",
                    j + 1,
                    vector_text(*col),
                    i + 1
                ),
            });
        }
    }
    for c in Connective::all() {
        if !columns.contains(&c.vector()) {
            annotations.push(Annotation {
                column: None,
                text: format!("vector {} ({}) is absent from the printed grid", vector_text(c.vector()), c.name()),
            });
        }
    }
    PaperTable { columns, annotations }
}

fn vector_text(v: [TruthValue; 4]) -> String {
    v.iter().map(|x| x.letter().to_ascii_uppercase().to_string()).collect::<Vec<_>>().join(" ")
}

/// Tab-separated column numbers and four rows, as printed, then one
/// `note:` line per annotation.
pub fn render_paper_table(table: &PaperTable) -> String {
    let mut out = (1..=16).map(|k| k.to_string()).collect::<Vec<_>>().join("\t");
    out.push('\n');
    for r in 0..4 {
        let row: Vec<String> = table.columns.iter().map(|c| c[r].letter().to_ascii_uppercase().to_string()).collect();
        out.push_str(&row.join("\t"));
        out.push('\n');
    }
    for a in &table.annotations {
        out.push_str(&format!("note: {}\n", a.text));
    }
    out
}

/// Which of the four frame positions are closed (drawn). A position is
/// closed exactly when the connective is false on its input pair.
///
/// Positions are fixed by convention: top = (t,t), right = (t,f),
/// left = (f,t), bottom = (f,f). In the glyph these are the four arms of
/// the X, read like the pair order: upper-left, upper-right, lower-left,
/// lower-right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct XFrame {
    pub closed: [bool; 4],
}

pub const XFRAME_POSITIONS: [&str; 4] = ["top", "right", "left", "bottom"];

impl XFrame {
    pub fn to_connective(self) -> Connective {
        Connective::from_vector(self.closed.map(|c| TruthValue::from_bool(!c)))
    }

    pub fn closed_count(self) -> usize {
        self.closed.iter().filter(|c| **c).count()
    }
}

pub fn xframe_of(c: Connective) -> XFrame {
    XFrame { closed: c.vector().map(|v| v == F) }
}

/// Three-line ascii glyph plus a descriptor line, e.g. for implication:
///
/// ```text
/// |  /|
/// | + |
/// |   |
/// closed: tf
/// ```
pub fn render_xframe(x: XFrame) -> String {
    let arm = |i: usize, stroke: char| if x.closed[i] { stroke } else { ' ' };
    let mut out = String::new();
    out.push_str(&format!("|{} {}|\n", arm(0, '\\'), arm(1, '/')));
    out.push_str("| + |\n");
    out.push_str(&format!("|{} {}|\n", arm(2, '/'), arm(3, '\\')));
    let closed: Vec<String> = (0..4).filter(|&i| x.closed[i]).map(pair_label).collect();
    let closed = if closed.is_empty() { "none".to_string() } else { closed.join(",") };
    out.push_str(&format!("closed: {closed}\n"));
    out
}

/// The connective with these values on (t,t), (t,f), (f,t), (f,f).
pub fn identify(values: [TruthValue; 4]) -> Connective {
    Connective::from_vector(values)
}

pub fn identify_matrix(m: &MatrixTable) -> Connective {
    identify(m.flatten())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bivalent::matrix_table;

    #[test]
    fn printed_columns() {
        let t = paper_table();
        assert_eq!(t.column(1), [F, F, F, F]);
        assert_eq!(t.column(16), [T, T, T, T]);
        assert_eq!(t.column(8), [F, F, F, T]);
        assert_eq!(t.column(8), t.column(2));
    }

    #[test]
    fn printed_grid_agrees_with_catalog_except_column_8() {
        let t = paper_table();
        for k in 1..=16u8 {
            let canonical = Connective::from_column(k).unwrap().vector();
            assert_eq!(t.column(k) == canonical, k != 8, "column {k}");
        }
    }

    #[test]
    fn annotations() {
        let t = paper_table();
        let texts: Vec<&str> = t.annotations.iter().map(|a| a.text.as_str()).collect();
        assert_eq!(
            texts,
            [
                "column 8 as printed (F F F T) duplicates column 2",
                "vector T F F T (equivalence) is absent from the printed grid"
            ]
        );
        assert_eq!(t.annotations[0].column, Some(8));
    }

    #[test]
    fn paper_table_text_starts_with_the_grid() {
        let text = render_paper_table(&paper_table());
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "1\t2\t3\t4\t5\t6\t7\t8\t9\t10\t11\t12\t13\t14\t15\t16");
        assert_eq!(lines[1], "F\tF\tF\tF\tT\tT\tT\tF\tF\tF\tF\tF\tT\tT\tT\tT");
        assert_eq!(lines[4], "F\tT\tF\tF\tF\tF\tF\tT\tF\tT\tT\tT\tT\tT\tF\tT");
        assert!(lines[5].starts_with("note: column 8"));
    }

    #[test]
    fn xframes() {
        assert_eq!(xframe_of(Connective::CONSTANT_FALSE).closed, [true; 4]);
        assert_eq!(xframe_of(Connective::CONSTANT_TRUE).closed, [false; 4]);
        assert_eq!(xframe_of(Connective::IMPLICATION).closed, [false, true, false, false]);
        for c in Connective::all() {
            let x = xframe_of(c);
            assert_eq!(x.to_connective(), c);
            assert_eq!(x.closed_count(), 4 - c.true_count() as usize);
        }
    }

    #[test]
    fn xframe_text() {
        assert_eq!(render_xframe(xframe_of(Connective::CONSTANT_FALSE)), "|\\ /|\n| + |\n|/ \\|\nclosed: tt,tf,ft,ff\n");
        assert_eq!(render_xframe(xframe_of(Connective::CONSTANT_TRUE)), "|   |\n| + |\n|   |\nclosed: none\n");
        assert!(render_xframe(xframe_of(Connective::IMPLICATION)).ends_with("closed: tf\n"));
    }

    #[test]
    fn identification() {
        let v = |s: &str| s.chars().map(|c| TruthValue::parse(&c.to_string()).unwrap()).collect::<Vec<_>>();
        let xyz: [TruthValue; 4] = v("vffv").try_into().unwrap();
        assert_eq!(identify(xyz), Connective::EQUIVALENCE);
        assert_eq!(identify([T, T, T, F]), Connective::DISJUNCTION);
        for c in Connective::all() {
            assert_eq!(identify_matrix(&matrix_table(c)), c);
        }
    }
}
