use std::fmt::Write;

use crate::field::Field;

use super::algebra::{Algebra, Presentation};

/// Canonical `.qalg` text.
pub fn emit_qalg<F: Field>(p: &Presentation<F>) -> String {
    let q = &p.quiver;
    let mut s = String::new();
    writeln!(s, "field {}", F::characteristic()).unwrap();
    writeln!(s, "vertices {}", q.vertices().join(" ")).unwrap();
    for a in q.arrows() {
        writeln!(
            s,
            "arrow {} {} {}",
            a.name,
            q.vertex_name(a.source),
            q.vertex_name(a.target)
        )
        .unwrap();
    }
    for r in &p.relations {
        writeln!(s, "rel {}", r.display(q)).unwrap();
    }
    writeln!(s, "maxdeg {}", p.maxdeg).unwrap();
    s
}

/// Graphviz digraph of the quiver.
pub fn emit_dot<F: Field>(alg: &Algebra<F>) -> String {
    quiver_dot(alg.quiver(), "Q", |i| alg.quiver().vertex_name(i).to_string())
}

pub(crate) fn quiver_dot(q: &super::Quiver, name: &str, label: impl Fn(usize) -> String) -> String {
    let mut s = String::new();
    writeln!(s, "digraph {name} {{").unwrap();
    for i in 0..q.num_vertices() {
        writeln!(s, "  v{i} [label=\"{}\"];", escape(&label(i))).unwrap();
    }
    for a in q.arrows() {
        writeln!(s, "  v{} -> v{} [label=\"{}\"];", a.source, a.target, escape(&a.name)).unwrap();
    }
    s.push_str("}\n");
    s
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
