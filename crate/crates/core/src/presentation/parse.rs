//! The `.qalg` text format.
//!
//! ```text
//! field 32003            # optional, must come first
//! vertices 1 2 3
//! arrow a 1 2
//! arrow b 2 3
//! rel b*a                # composition order: a first, then b
//! rel 2*x*x - y*y
//! maxdeg 12              # optional
//! ```

use crate::field::Field;

use super::algebra::{Presentation, DEFAULT_MAXDEG};
use super::poly::PathPoly;
use super::quiver::{valid_name, Path, Quiver};
use super::PresentationError;

pub const DEFAULT_PRIME: u64 = 32003;

fn at(line: usize, col: usize, inner: PresentationError) -> PresentationError {
    PresentationError::Located {
        line,
        col,
        inner: Box::new(inner),
    }
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> PresentationError {
    PresentationError::Syntax {
        line,
        col,
        msg: msg.into(),
    }
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

/// The prime declared by a `field` line, or the default.
pub fn declared_prime(text: &str) -> Result<u64, PresentationError> {
    for (ln, raw) in text.lines().enumerate() {
        let toks = tokens(strip_comment(raw));
        if let Some(&(_, "field")) = toks.first() {
            return parse_prime(&toks, ln + 1);
        }
    }
    Ok(DEFAULT_PRIME)
}

fn parse_prime(toks: &[(usize, &str)], ln: usize) -> Result<u64, PresentationError> {
    let Some(&(col, v)) = toks.get(1) else {
        return Err(syntax(ln, toks[0].0, "field needs a prime"));
    };
    if toks.len() > 2 {
        return Err(syntax(ln, toks[2].0, "unexpected token"));
    }
    let p: u64 = v.parse().map_err(|_| syntax(ln, col, format!("not an integer: {v}")))?;
    if !crate::field::is_prime(p) {
        return Err(syntax(ln, col, format!("{p} is not prime")));
    }
    Ok(p)
}

pub fn parse_presentation<F: Field>(text: &str) -> Result<Presentation<F>, PresentationError> {
    let mut quiver: Option<Quiver> = None;
    let mut relations = Vec::new();
    let mut maxdeg = None;
    let mut seen_content = false;

    for (ln0, raw) in text.lines().enumerate() {
        let ln = ln0 + 1;
        let body = strip_comment(raw);
        let toks = tokens(body);
        let Some(&(kcol, kw)) = toks.first() else {
            continue;
        };
        match kw {
            "field" => {
                if seen_content {
                    return Err(syntax(ln, kcol, "field must be the first declaration"));
                }
                let p = parse_prime(&toks, ln)?;
                if p != F::characteristic() {
                    return Err(at(
                        ln,
                        toks[1].0,
                        PresentationError::FieldMismatch {
                            declared: p,
                            session: F::characteristic(),
                        },
                    ));
                }
            }
            "vertices" => {
                if quiver.is_some() {
                    return Err(syntax(ln, kcol, "duplicate vertices line"));
                }
                let mut q = Quiver::new();
                for &(c, name) in &toks[1..] {
                    q.add_vertex(name).map_err(|e| at(ln, c, e))?;
                }
                quiver = Some(q);
            }
            "arrow" => {
                let q = quiver
                    .as_mut()
                    .ok_or_else(|| syntax(ln, kcol, "arrow before vertices"))?;
                if toks.len() != 4 {
                    return Err(syntax(ln, kcol, "expected: arrow <name> <source> <target>"));
                }
                let (c1, name) = toks[1];
                q.add_arrow(name, toks[2].1, toks[3].1).map_err(|e| {
                    let col = match &e {
                        PresentationError::UnknownVertex(v) if v == toks[2].1 => toks[2].0,
                        PresentationError::UnknownVertex(_) => toks[3].0,
                        _ => c1,
                    };
                    at(ln, col, e)
                })?;
            }
            "rel" => {
                let q = quiver.as_ref().ok_or_else(|| syntax(ln, kcol, "rel before vertices"))?;
                let off = kcol + 3;
                let rest = &body[off - 1..];
                let poly = parse_relation::<F>(q, rest, ln, off)?;
                super::algebra::validate_relation(q, &poly).map_err(|e| at(ln, kcol, e))?;
                relations.push(poly);
            }
            "maxdeg" => {
                if toks.len() != 2 {
                    return Err(syntax(ln, kcol, "expected: maxdeg <n>"));
                }
                let n: usize = toks[1]
                    .1
                    .parse()
                    .map_err(|_| syntax(ln, toks[1].0, "maxdeg must be a positive integer"))?;
                if n == 0 {
                    return Err(syntax(ln, toks[1].0, "maxdeg must be a positive integer"));
                }
                maxdeg = Some(n);
            }
            other => return Err(syntax(ln, kcol, format!("unknown keyword `{other}`"))),
        }
        seen_content = true;
    }
    let quiver = quiver.ok_or_else(|| syntax(1, 1, "missing vertices line"))?;
    Ok(Presentation {
        quiver,
        relations,
        maxdeg: maxdeg.unwrap_or(DEFAULT_MAXDEG),
    })
}

/// Parses `[-] term (± term)*` where a term is `[coeff*]name(*name)*`.
fn parse_relation<F: Field>(q: &Quiver, s: &str, ln: usize, col0: usize) -> Result<PathPoly<F>, PresentationError> {
    let chars: Vec<(usize, char)> = s.char_indices().collect();
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < chars.len() && chars[*i].1.is_whitespace() {
            *i += 1;
        }
    };
    let col = |i: usize| col0 + chars.get(i).map_or(s.len(), |c| c.0);
    let mut poly = PathPoly::zero();
    let mut first = true;
    loop {
        skip_ws(&mut i);
        if i == chars.len() {
            if first {
                return Err(syntax(ln, col(i), "empty relation"));
            }
            break;
        }
        let mut sign = F::one();
        match chars[i].1 {
            '+' if !first => i += 1,
            '-' => {
                sign = -F::one();
                i += 1;
            }
            _ if !first => return Err(syntax(ln, col(i), "expected + or -")),
            _ => {}
        }
        skip_ws(&mut i);
        let term_col = col(i);
        let mut coeff: Option<F> = None;
        let mut arrows = Vec::new();
        let mut names = Vec::new();
        loop {
            let start = i;
            while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || matches!(chars[i].1, '_' | '\'')) {
                i += 1;
            }
            if start == i {
                return Err(syntax(ln, col(i), "expected a coefficient or arrow name"));
            }
            let tok: String = chars[start..i].iter().map(|c| c.1).collect();
            if tok.chars().all(|c| c.is_ascii_digit()) {
                if coeff.is_some() || !arrows.is_empty() {
                    return Err(syntax(ln, col(start), "coefficient must lead the term"));
                }
                let v: i64 = tok
                    .parse()
                    .map_err(|_| syntax(ln, col(start), "coefficient too large"))?;
                coeff = Some(F::from_i64(v));
            } else {
                debug_assert!(valid_name(&tok));
                let a = q
                    .arrow_index(&tok)
                    .ok_or_else(|| at(ln, col(start), PresentationError::UnknownArrow(tok.clone())))?;
                arrows.push(a);
                names.push(tok);
            }
            skip_ws(&mut i);
            if i < chars.len() && chars[i].1 == '*' {
                i += 1;
                skip_ws(&mut i);
                continue;
            }
            break;
        }
        let word = names.join("*");
        if arrows.len() < 2 {
            let e = if arrows.is_empty() {
                syntax(ln, term_col, "term has no arrows")
            } else {
                at(ln, term_col, PresentationError::ShortTerm(word))
            };
            return Err(e);
        }
        let p = Path::from_arrows(q, arrows).ok_or_else(|| at(ln, term_col, PresentationError::NotComposable(word)))?;
        poly.add_term(p, sign * coeff.unwrap_or(F::one()));
        first = false;
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;
    use crate::presentation::emit::emit_qalg;

    type F = Fp<32003>;

    #[test]
    fn two_cycle() {
        let p = parse_presentation::<F>("vertices 1 2\narrow a 1 2\narrow b 2 1\nrel a*b\nrel b*a\n").unwrap();
        assert_eq!(p.quiver.num_vertices(), 2);
        assert_eq!(p.quiver.num_arrows(), 2);
        assert_eq!(p.relations.len(), 2);
    }

    #[test]
    fn single_vertex() {
        let p = parse_presentation::<F>("vertices x\n").unwrap();
        let alg = p.complete().unwrap();
        assert_eq!(alg.dim(), 1);
    }

    #[test]
    fn commutativity_relation() {
        let p = parse_presentation::<F>(
            "vertices 1 2\narrow al 2 1\narrow eps1 1 1\narrow eps2 2 2\n\
             rel eps1*eps1\nrel eps2*eps2\nrel eps1*al - al*eps2\n",
        )
        .unwrap();
        assert_eq!(p.relations[2].len(), 2);
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_presentation::<F>("vertices 1 2\narrow a 1 2\nrel a\n").unwrap_err();
        assert!(matches!(e, PresentationError::Located { line: 3, col: 5, .. }), "{e}");
        let e = parse_presentation::<F>("vertices 1 2\narrow a 1 2\narrow b 2 1\nrel a*b - b*a\n").unwrap_err();
        match e {
            PresentationError::Located { line: 4, inner, .. } => {
                assert!(matches!(*inner, PresentationError::NonParallel(_)))
            }
            other => panic!("{other}"),
        }
        let e = parse_presentation::<F>("vertices 1\nbogus\n").unwrap_err();
        assert!(matches!(e, PresentationError::Syntax { line: 2, col: 1, .. }));
        let e = parse_presentation::<F>("vertices 1 2\narrow a 1 2\nrel a * + a\n").unwrap_err();
        assert!(matches!(e, PresentationError::Syntax { line: 3, col: 9, .. }), "{e}");
    }

    #[test]
    fn field_line_checked() {
        assert_eq!(declared_prime("# c\nfield 7\nvertices 1").unwrap(), 7);
        assert_eq!(declared_prime("vertices 1").unwrap(), 32003);
        assert!(declared_prime("field 8\n").is_err());
        assert!(parse_presentation::<F>("field 7\nvertices 1\n").is_err());
    }

    #[test]
    fn emit_round_trip() {
        let text = "vertices 1 2\narrow x 1 1\narrow y 1 2\nrel x*x\nrel -3*y*x*x + y*x*x*x # c\nmaxdeg 5\n";
        let p = parse_presentation::<F>(text).unwrap();
        let once = emit_qalg(&p);
        let again = emit_qalg(&parse_presentation::<F>(&once).unwrap());
        assert_eq!(once, again);
        assert!(once.contains("rel y*x*x*x - 3*y*x*x"));
    }
}
