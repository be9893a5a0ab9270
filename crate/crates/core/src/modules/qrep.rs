//! The `.qrep` text format.
//!
//! ```text
//! module over ex3_15.qalg
//! dim 1 1
//! dim 2 0
//! mat a1
//! 0 1
//! ```
//!
//! Every vertex gets a `dim` line and every arrow a `mat` block with one row
//! line per target dimension, or none when the source dimension is zero.
//! Entries are residues in `[0, p)`.

use std::fmt::Write;
use std::sync::Arc;

use crate::field::Field;
use crate::linalg::Mat;
use crate::presentation::Algebra;

use super::{ModuleError, Representation};

pub fn emit_qrep<F: Field>(m: &Representation<F>, algebra_file: &str) -> String {
    let q = m.algebra().quiver();
    let mut out = String::new();
    let _ = writeln!(out, "module over {algebra_file}");
    for (v, name) in q.vertices().iter().enumerate() {
        let _ = writeln!(out, "dim {name} {}", m.dim_at(v));
    }
    for (ai, a) in q.arrows().iter().enumerate() {
        let _ = writeln!(out, "mat {}", a.name);
        let mat = m.mat(ai);
        if mat.cols() == 0 {
            continue;
        }
        for r in 0..mat.rows() {
            let row: Vec<String> = mat.row(r).iter().map(|x| x.residue().to_string()).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
    }
    out
}

/// The algebra file named on the header line.
pub fn qrep_algebra_file(text: &str) -> Option<&str> {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .and_then(|l| l.strip_prefix("module over "))
        .map(str::trim)
}

pub fn parse_qrep<F: Field>(alg: &Arc<Algebra<F>>, text: &str) -> Result<Representation<F>, ModuleError> {
    let q = alg.quiver();
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let err = |line: usize, msg: String| ModuleError::Parse { line, msg };
    match lines.next() {
        Some((_, l)) if l.starts_with("module over") => {}
        Some((n, _)) => return Err(err(n, "expected `module over <file>`".into())),
        None => return Err(err(0, "empty file".into())),
    }
    let mut dims: Vec<Option<usize>> = vec![None; q.num_vertices()];
    let mut mats: Vec<Option<Mat<F>>> = vec![None; q.num_arrows()];
    while let Some((n, l)) = lines.next() {
        let toks: Vec<&str> = l.split_whitespace().collect();
        match toks.as_slice() {
            ["dim", v, d] => {
                let vi = q
                    .vertex_index(v)
                    .ok_or_else(|| err(n, format!("unknown vertex `{v}`")))?;
                let d = d.parse().map_err(|_| err(n, format!("bad dimension `{d}`")))?;
                dims[vi] = Some(d);
            }
            ["mat", a] => {
                let ai = q.arrow_index(a).ok_or_else(|| err(n, format!("unknown arrow `{a}`")))?;
                let arrow = q.arrow(ai);
                let (Some(r), Some(c)) = (dims[arrow.target], dims[arrow.source]) else {
                    return Err(err(n, format!("`mat {a}` before the dims of its endpoints")));
                };
                let mut data = Vec::with_capacity(r * c);
                // matrices without columns have no row lines
                for _ in 0..if c == 0 { 0 } else { r } {
                    let (rn, row) = lines
                        .next()
                        .ok_or_else(|| err(n, format!("matrix `{a}` is missing rows")))?;
                    let vals: Vec<&str> = row.split_whitespace().collect();
                    if vals.len() != c {
                        return Err(err(rn, format!("expected {c} entries")));
                    }
                    for v in vals {
                        let x: i64 = v.parse().map_err(|_| err(rn, format!("bad entry `{v}`")))?;
                        data.push(F::from_i64(x));
                    }
                }
                mats[ai] = Some(Mat::from_vec(r, c, data));
            }
            _ => return Err(err(n, format!("unexpected line `{l}`"))),
        }
    }
    let dims: Vec<usize> = dims.into_iter().map(|d| d.unwrap_or(0)).collect();
    let mats = q
        .arrows()
        .iter()
        .zip(mats)
        .map(|(a, m)| m.unwrap_or_else(|| Mat::zeros(dims[a.target], dims[a.source])))
        .collect();
    Representation::new(alg.clone(), dims, mats)
}
