//! Report text in the `.adl` block syntax.

use std::fmt::Write;

use comalg::linalg::sparse;
use comalg::{Algebra, Bimodule, Matrix, Rational};

pub fn vector(v: &[Rational]) -> String {
    v.iter().map(Rational::to_string).collect::<Vec<_>>().join(",")
}

fn rows(out: &mut String, m: &Matrix, indent: &str) {
    for r in 0..m.rows() {
        writeln!(out, "{indent}row {}", vector(m.row(r))).unwrap();
    }
}

/// `dim k` followed by one `row` per basis vector.
pub fn basis(vectors: &[Vec<Rational>]) -> String {
    let mut out = format!("dim {}\n", vectors.len());
    for v in vectors {
        writeln!(out, "row {}", vector(v)).unwrap();
    }
    out
}

/// An `algebra` block listing the nonzero products.
pub fn algebra(name: &str, a: &Algebra) -> String {
    let n = a.dim();
    let mut out = format!("algebra {name} {{\n  dim {n}\n  unit {}\n", vector(a.unit()));
    for i in 0..n {
        for j in 0..n {
            let p = a.basis_product(i, j);
            if !p.is_empty() {
                writeln!(out, "  mul {i} {j} -> {}", vector(&sparse::to_dense(&p, n))).unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

pub fn bimodule(name: &str, left: &str, right: &str, m: &Bimodule) -> String {
    let mut out = format!("bimodule {name} : {left} - {right} {{\n  dim {}\n", m.dim());
    for (side, actions) in [("left", m.left_actions()), ("right", m.right_actions())] {
        for (i, a) in actions.iter().enumerate() {
            writeln!(out, "  {side} {i} {{").unwrap();
            rows(&mut out, a, "    ");
            out.push_str("  }\n");
        }
    }
    out.push_str("}\n");
    out
}

pub fn defect(name: &str, left: &str, right: &str, algebra: &str, phi: &Matrix) -> String {
    let mut out = format!("defect {name} : {left} - {right} {{\n  algebra {algebra}\n  phi {{\n");
    rows(&mut out, phi, "    ");
    out.push_str("  }\n}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adl::Workspace;
    use comalg::algebra::catalog;
    use std::sync::Arc;

    #[test]
    fn algebra_blocks_parse_back() {
        for a in catalog::all() {
            let text = algebra(a.name(), &a);
            let ws = Workspace::parse(&text).unwrap();
            assert_eq!(ws.algebra(a.name()).unwrap().as_ref(), a.as_ref());
        }
    }

    #[test]
    fn ground_field_block() {
        let k = catalog::ground_field();
        assert_eq!(algebra("K", &k), "algebra K {\n  dim 1\n  unit 1\n  mul 0 0 -> 1\n}\n");
        assert_eq!(basis(&[vec![Rational::new(-1, 2), Rational::from_int(3)]]), "dim 1\nrow -1/2,3\n");
    }

    #[test]
    fn bimodule_blocks_parse_back() {
        let z2 = Arc::new(catalog::z2_group_algebra());
        let m = Bimodule::regular(&z2);
        let text = format!("{}{}", algebra("Z2", &z2), bimodule("H", "Z2", "Z2", &m));
        let ws = Workspace::parse(&text).unwrap();
        let (_, item) = &ws.items()[1];
        assert!(matches!(item, crate::adl::Item::Bimodule(b) if b.as_ref() == &m));
    }
}
