//! Canonical model printing. Parsing the output reproduces the same
//! presentation, so parse -> print -> parse is the identity on canonical
//! forms.


use crate::cdga::SullivanAlgebra;
use crate::dgl::FreeDgl;
use std::fmt::Write as _;

pub fn print_algebra(name: &str, alg: &SullivanAlgebra) -> String {
    let gens = alg.gens();
    let mut out = String::new();
    let _ = writeln!(out, "algebra {name}");
    for id in gens.ids() {
        let s = gens.spec(id);
        let _ = writeln!(out, "  {} : {}", s.name, s.degree);
    }
    for id in gens.ids() {
        let d = alg.differential_of(id);
        let _ = writeln!(out, "  d {} = {}", gens.spec(id).name, gens.format_element(d));
    }
    out.push_str("end\n");
    out
}

/// Lie sections print their boundaries from the normalized source
/// expressions (tensor words are not part of the file grammar).
pub fn print_lie(name: &str, dgl: &FreeDgl, boundary_exprs: &[(String, String)]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "algebra {name} lie");
    for g in dgl.generators() {
        let _ = writeln!(out, "  {} : {}", g.name, g.degree);
    }
    for g in dgl.generators() {
        match boundary_exprs.iter().find(|(n, _)| n == &g.name) {
            Some((_, expr)) => {
                let _ = writeln!(out, "  d {} = {}", g.name, expr);
            }
            None => {
                if !dgl.boundary_of(dgl.id_of(&g.name).unwrap()).is_zero() {
                    let _ = writeln!(out, "  # boundary of {} set programmatically", g.name);
                }
            }
        }
    }
    out.push_str("end\n");
    out
}

pub fn print_section(section: &super::parse::Section) -> String {
    match &section.kind {
        super::parse::SectionKind::Algebra(a) => print_algebra(&section.name, a),
        super::parse::SectionKind::Lie(l) => print_lie(&section.name, l, &section.boundary_exprs),
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse::{ModelFile, SectionKind};
    use super::*;

    #[test]
    fn parse_print_parse_is_the_identity_on_canonical_forms() {
        let text = "\
algebra Y
  x1 : 4
  x2 : 4
  y : 7
  d y = x1 * x2
end

algebra L lie
  a : 3
  b : 7
  d b = [a, a]
end
";
        let f1 = ModelFile::parse(text).unwrap();
        let printed: String = f1.sections.iter().map(print_section).collect::<Vec<_>>().join("\n");
        let f2 = ModelFile::parse(&printed).unwrap();
        let printed_again: String =
            f2.sections.iter().map(print_section).collect::<Vec<_>>().join("\n");
        assert_eq!(printed, printed_again);
        // semantic equality of the algebra sections
        match (&f1.sections[0].kind, &f2.sections[0].kind) {
            (SectionKind::Algebra(a), SectionKind::Algebra(b)) => assert_eq!(a, b),
            _ => panic!(),
        }
        match (&f1.sections[1].kind, &f2.sections[1].kind) {
            (SectionKind::Lie(a), SectionKind::Lie(b)) => assert_eq!(a, b),
            _ => panic!(),
        }
    }
}
