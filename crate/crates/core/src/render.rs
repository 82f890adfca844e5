//! Plain-text diagrams for projective sums, resolutions, and the two-sided
//! main complex.  Output is pure ASCII and deterministic, so it can be
//! compared byte-for-byte in tests.

use crate::algebra::Algebra;
use crate::gorenstein::MainComplex;
use crate::complexes::{ProjSum, Resolution};

/// Renders a finitely generated projective by its multiplicities: `0`,
/// `A^3` over a local algebra, `P1+P2^2` in general.  Indices are 1-based.
pub fn projective_label(a: &Algebra, mults: &[usize]) -> String {
    if mults.iter().all(|&m| m == 0) {
        return "0".to_string();
    }
    if a.num_idempotents() == 1 {
        let m = mults[0];
        return if m == 1 { "A".to_string() } else { format!("A^{m}") };
    }
    let mut parts = Vec::new();
    for (i, &m) in mults.iter().enumerate() {
        match m {
            0 => {}
            1 => parts.push(format!("P{}", i + 1)),
            _ => parts.push(format!("P{}^{}", i + 1, m)),
        }
    }
    parts.join("+")
}

/// Renders one term of a complex, e.g. `P1+P2^2 (dim 5)`.
pub fn sum_label(s: &ProjSum) -> String {
    format!(
        "{} (dim {})",
        projective_label(s.acting(), &s.multiplicities()),
        s.dim()
    )
}

fn center(text: &str, width: usize) -> String {
    let pad = width.saturating_sub(text.len());
    let left = pad / 2;
    format!("{}{}{}", " ".repeat(left), text, " ".repeat(pad - left))
}

/// Draws the main complex as a three-row ASCII diagram: degrees on top,
/// terms joined by arrows in the middle, and the two potentially nonzero
/// homology spaces (the kernel and cokernel of the evaluation-induced map)
/// annotated below degrees 0 and -1.
pub fn render_main_complex(mc: &MainComplex) -> String {
    let a = mc.module.acting();
    let lo = mc.lowest_degree();
    let hi = mc.highest_degree();
    let mut degrees = Vec::new();
    let mut terms = Vec::new();
    let mut notes = Vec::new();
    // Highest degree on the left; differentials point rightward.
    for d in (lo..=hi).rev() {
        let sum = mc.sum_at(d).expect("degree inside the window");
        degrees.push(d.to_string());
        terms.push(projective_label(a, &sum.multiplicities()));
        notes.push(match d {
            0 => format!("ker(phi)={}", mc.ker_phi_dim),
            -1 => format!("cok(phi)={}", mc.cok_phi_dim),
            _ => String::new(),
        });
    }
    let widths: Vec<usize> = (0..terms.len())
        .map(|i| terms[i].len().max(degrees[i].len()).max(notes[i].len()))
        .collect();
    let arrow = " --> ";
    let gap = " ".repeat(arrow.len());
    let row = |cells: &[String], sep: &str| -> String {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| center(c, w))
            .collect::<Vec<_>>()
            .join(sep)
            .trim_end()
            .to_string()
    };
    let mut out = String::new();
    out.push_str(&row(&degrees, &gap));
    out.push('\n');
    out.push_str(&row(&terms, arrow));
    out.push('\n');
    out.push_str(&row(&notes, &gap));
    out.push('\n');
    out
}

/// Lists a minimal projective resolution one term per line:
/// `P_k = <label>, kernel dim d`.
pub fn render_resolution(r: &Resolution) -> String {
    let a = r.module().acting();
    let mut out = String::new();
    for k in 0..r.num_terms() {
        let term = r.term(k);
        out.push_str(&format!(
            "P_{} = {} (dim {})\n",
            k,
            projective_label(a, &term.multiplicities()),
            term.dim()
        ));
    }
    out
}
