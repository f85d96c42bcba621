//! Text formats for map terms and relation sets.
//!
//! Term expressions:
//!
//! ```text
//! zero
//! id(W)
//! gen(name, src, dst)           # name may contain balanced parentheses
//! t1 . t2                       # composition, right to left: t2 applies first
//! t @ sum(psi3, tetra)          # decorate a single atom
//! t @ sum(psi2minus, face, rface)
//! ```
//!
//! A *term file* is a sequence of `gen <name> <src> <dst>` declaration lines
//! followed by one term expression (declared names can then appear bare). A
//! *relation file* holds declarations plus `triangle f g h`,
//! `eq <term> = <term>`, and `square m0 m1 m2 m3` lines. `#` starts a
//! comment anywhere.

use super::rels::RelationSet;
use super::{Atom, CobmapError, Decoration, FaceClass, Locus, MapTerm, Summand};
use std::collections::HashMap;

/// Declared generator names, for resolving bare identifiers in terms.
pub type GenContext = HashMap<String, (String, String)>;

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    gens: &'a GenContext,
}

impl<'a> Parser<'a> {
    fn new(text: &str, gens: &'a GenContext) -> Parser<'a> {
        Parser { chars: text.chars().collect(), pos: 0, gens }
    }

    fn err(&self, msg: impl Into<String>) -> CobmapError {
        let mut line = 1;
        let mut col = 1;
        for &c in self.chars.iter().take(self.pos) {
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        CobmapError::Parse { line, col, msg: msg.into() }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c == '#' {
                while self.peek().is_some_and(|c| c != '\n') {
                    self.bump();
                }
            } else if c.is_whitespace() {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn expect(&mut self, want: char) -> Result<(), CobmapError> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.err(format!("expected `{want}`, found `{c}`"))),
            None => Err(self.err(format!("expected `{want}`, found end of input"))),
        }
    }

    fn is_ident_char(c: char) -> bool {
        c.is_alphanumeric() || c == '_' || c == '\''
    }

    fn ident(&mut self, what: &str) -> Result<String, CobmapError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(Parser::is_ident_char) {
            self.bump();
        }
        if self.pos == start {
            return Err(self.err(format!("expected {what}")));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    /// A generator name inside `gen(...)`: raw text up to a top-level comma,
    /// with balanced parentheses allowed.
    fn raw_name(&mut self) -> Result<String, CobmapError> {
        self.skip_ws();
        let start = self.pos;
        let mut depth = 0usize;
        while let Some(c) = self.peek() {
            match c {
                '(' => depth += 1,
                ')' if depth == 0 => break,
                ')' => depth -= 1,
                ',' if depth == 0 => break,
                '\n' => break,
                _ => {}
            }
            self.bump();
        }
        let name: String = self.chars[start..self.pos].iter().collect::<String>().trim().to_string();
        if name.is_empty() {
            Err(self.err("expected a generator name"))
        } else {
            Ok(name)
        }
    }

    fn term(&mut self) -> Result<MapTerm, CobmapError> {
        // `t1 . t2 . t3` lists the last-applied map first
        let mut written_order = vec![self.decorated()?];
        loop {
            self.skip_ws();
            if self.peek() == Some('.') {
                self.bump();
                written_order.push(self.decorated()?);
            } else {
                break;
            }
        }
        if written_order.iter().any(MapTerm::is_zero) {
            return Ok(MapTerm::Zero);
        }
        let mut atoms = Vec::new();
        for t in written_order.into_iter().rev() {
            atoms.extend(t.atoms().iter().cloned());
        }
        MapTerm::from_atoms(atoms).map_err(|e| self.err(e.to_string()))
    }

    fn decorated(&mut self) -> Result<MapTerm, CobmapError> {
        let mut base = self.primary()?;
        loop {
            self.skip_ws();
            if self.peek() != Some('@') {
                return Ok(base);
            }
            self.bump();
            let kw = self.ident("`sum`")?;
            if kw != "sum" {
                return Err(self.err(format!("expected `sum`, found `{kw}`")));
            }
            self.expect('(')?;
            let summand = self.summand()?;
            self.expect(',')?;
            let locus = self.locus()?;
            self.skip_ws();
            let face_class = if self.peek() == Some(',') {
                self.bump();
                Some(self.face_class()?)
            } else {
                None
            };
            self.expect(')')?;
            let deco = Decoration::new(summand, locus, face_class)
                .map_err(|e| self.err(e.to_string()))?;
            base = match base {
                MapTerm::Zero => MapTerm::Zero,
                MapTerm::Composite(atoms) if atoms.len() == 1 => {
                    MapTerm::atom(atoms.into_iter().next().expect("len 1").decorate(deco))
                }
                MapTerm::Composite(_) => {
                    return Err(
                        self.err("a decoration must attach to a single generator or identity")
                    )
                }
            };
        }
    }

    fn primary(&mut self) -> Result<MapTerm, CobmapError> {
        self.skip_ws();
        if self.peek() == Some('(') {
            self.bump();
            let t = self.term()?;
            self.expect(')')?;
            return Ok(t);
        }
        let name = self.ident("a term")?;
        match name.as_str() {
            "zero" => Ok(MapTerm::Zero),
            "id" => {
                self.expect('(')?;
                let web = self.ident("a web label")?;
                self.expect(')')?;
                Ok(MapTerm::atom(Atom::identity(web)))
            }
            "gen" => {
                self.expect('(')?;
                let gname = self.raw_name()?;
                self.expect(',')?;
                let src = self.ident("a source web label")?;
                self.expect(',')?;
                let dst = self.ident("a target web label")?;
                self.expect(')')?;
                Ok(MapTerm::atom(Atom::generator(gname, src, dst)))
            }
            other => match self.gens.get(other) {
                Some((src, dst)) => {
                    Ok(MapTerm::atom(Atom::generator(other, src.clone(), dst.clone())))
                }
                None => Err(self.err(format!("undeclared generator `{other}`"))),
            },
        }
    }

    fn summand(&mut self) -> Result<Summand, CobmapError> {
        let s = self.ident("a summand")?;
        match s.as_str() {
            "psi0" => Ok(Summand::Psi0),
            "psi1" => Ok(Summand::Psi1),
            "psi2" => Ok(Summand::Psi2),
            "psi3" => Ok(Summand::Psi3),
            "psi2minus" => Ok(Summand::Psi2Minus),
            "doublemobius" => Ok(Summand::DoubleMobius),
            other => Err(self.err(format!("unknown summand `{other}`"))),
        }
    }

    fn locus(&mut self) -> Result<Locus, CobmapError> {
        let s = self.ident("a locus")?;
        match s.as_str() {
            "tetra" => Ok(Locus::Tetra),
            "seam" => Ok(Locus::Seam),
            "face" => Ok(Locus::Face),
            other => Err(self.err(format!("unknown locus `{other}`"))),
        }
    }

    fn face_class(&mut self) -> Result<FaceClass, CobmapError> {
        let s = self.ident("a face class")?;
        match s.as_str() {
            "rface" => Ok(FaceClass::RFace),
            "diskface" => Ok(FaceClass::DiskFace),
            "dplus" => Ok(FaceClass::DPlus),
            "dminus" => Ok(FaceClass::DMinus),
            "mobius" => Ok(FaceClass::Mobius),
            other => Err(self.err(format!("unknown face class `{other}`"))),
        }
    }

    fn finish_term(&mut self) -> Result<MapTerm, CobmapError> {
        let t = self.term()?;
        self.skip_ws();
        if let Some(c) = self.peek() {
            return Err(self.err(format!("unexpected `{c}` after term")));
        }
        Ok(t)
    }
}

/// Parse one term expression against a set of declared generators.
pub fn parse_term(text: &str, gens: &GenContext) -> Result<MapTerm, CobmapError> {
    Parser::new(text, gens).finish_term()
}

/// Is this line a `gen <name> <src> <dst>` declaration?
fn declaration(line: &str) -> Option<(String, String, String)> {
    let content = line.split('#').next().unwrap_or("");
    let toks: Vec<&str> = content.split_whitespace().collect();
    if toks.len() == 4 && toks[0] == "gen" {
        Some((toks[1].to_string(), toks[2].to_string(), toks[3].to_string()))
    } else {
        None
    }
}

/// Parse a term file: `gen` declaration lines followed by one term
/// expression, which may span lines.
pub fn parse_term_file(text: &str) -> Result<MapTerm, CobmapError> {
    let mut gens = GenContext::new();
    // blank out declaration lines so term positions stay exact
    let mut masked = String::with_capacity(text.len());
    for line in text.lines() {
        if let Some((name, src, dst)) = declaration(line) {
            gens.insert(name, (src, dst));
            masked.extend(std::iter::repeat(' ').take(line.chars().count()));
        } else {
            masked.push_str(line);
        }
        masked.push('\n');
    }
    parse_term(&masked, &gens)
}

/// Parse a relation file into a [`RelationSet`].
pub fn parse_relation_file(text: &str) -> Result<RelationSet, CobmapError> {
    let mut rels = RelationSet::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = content.split_whitespace().collect();
        let Some(&kw) = toks.first() else { continue };
        let relerr = |msg: String| CobmapError::Parse { line, col: 1, msg };
        match kw {
            "gen" => {
                if toks.len() != 4 {
                    return Err(relerr("expected `gen <name> <src> <dst>`".into()));
                }
                rels.declare_gen(toks[1], toks[2], toks[3]).map_err(|e| relerr(e.to_string()))?;
            }
            "triangle" => {
                if toks.len() != 4 {
                    return Err(relerr("expected `triangle <f> <g> <h>`".into()));
                }
                let atoms: Vec<Atom> = toks[1..]
                    .iter()
                    .map(|n| {
                        rels.gen_atom(n).ok_or_else(|| {
                            relerr(format!("undeclared generator `{n}` in triangle"))
                        })
                    })
                    .collect::<Result<_, _>>()?;
                rels.add_triangle([atoms[0].clone(), atoms[1].clone(), atoms[2].clone()])
                    .map_err(|e| relerr(e.to_string()))?;
            }
            "square" => {
                if toks.len() != 5 {
                    return Err(relerr("expected `square <m0> <m1> <m2> <m3>`".into()));
                }
                let atoms: Vec<Atom> = toks[1..]
                    .iter()
                    .map(|n| {
                        rels.gen_atom(n)
                            .ok_or_else(|| relerr(format!("undeclared generator `{n}` in square")))
                    })
                    .collect::<Result<_, _>>()?;
                rels.set_square([
                    atoms[0].clone(),
                    atoms[1].clone(),
                    atoms[2].clone(),
                    atoms[3].clone(),
                ])
                .map_err(|e| relerr(e.to_string()))?;
            }
            "eq" => {
                let body = content.trim_start();
                let body = body.strip_prefix("eq").expect("starts with eq");
                let Some(eqpos) = body.find('=') else {
                    return Err(relerr("expected `eq <term> = <term>`".into()));
                };
                let lhs = parse_term(&body[..eqpos], rels.gen_context())
                    .map_err(|e| relerr(e.to_string()))?;
                let rhs = parse_term(&body[eqpos + 1..], rels.gen_context())
                    .map_err(|e| relerr(e.to_string()))?;
                rels.add_equality(lhs, rhs).map_err(|e| relerr(e.to_string()))?;
            }
            other => {
                return Err(relerr(format!(
                    "unknown directive `{other}` (expected gen, triangle, square, or eq)"
                )))
            }
        }
    }
    Ok(rels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_zero_and_identity() {
        let gens = GenContext::new();
        assert_eq!(parse_term("zero", &gens).unwrap(), MapTerm::Zero);
        let id = parse_term("id(K0)", &gens).unwrap();
        assert_eq!(id, MapTerm::atom(Atom::identity("K0")));
    }

    #[test]
    fn parse_gen_with_parenthesized_name() {
        let gens = GenContext::new();
        let t = parse_term("gen(Sigma(L2,L1), L2, L1)", &gens).unwrap();
        let a = &t.atoms()[0];
        assert_eq!(a.name(), "Sigma(L2,L1)");
        assert_eq!(a.src(), "L2");
        assert_eq!(a.dst(), "L1");
    }

    #[test]
    fn composition_is_right_to_left() {
        let gens = GenContext::new();
        let t = parse_term("gen(f, B, C) . gen(g, A, B)", &gens).unwrap();
        // g applies first
        assert_eq!(t.atoms()[0].name(), "g");
        assert_eq!(t.atoms()[1].name(), "f");
        assert_eq!(t.source(), Some("A"));
        assert_eq!(t.target(), Some("C"));
    }

    #[test]
    fn ill_typed_composition_is_an_error() {
        let gens = GenContext::new();
        let err = parse_term("gen(f, B, C) . gen(g, A, X)", &gens).unwrap_err();
        assert!(matches!(err, CobmapError::Parse { .. }), "{err}");
    }

    #[test]
    fn decoration_binds_to_one_atom() {
        let gens = GenContext::new();
        let t = parse_term("gen(f, A, B) @ sum(psi2, tetra)", &gens).unwrap();
        assert_eq!(t.atoms()[0].decorations().len(), 1);
        let err =
            parse_term("(gen(f, B, C) . gen(g, A, B)) @ sum(psi2, tetra)", &gens).unwrap_err();
        assert!(matches!(err, CobmapError::Parse { .. }));
    }

    #[test]
    fn face_class_parses() {
        let gens = GenContext::new();
        let t = parse_term("gen(f, A, B) @ sum(doublemobius, face, dminus)", &gens).unwrap();
        assert_eq!(t.normalize(), MapTerm::Zero);
    }

    #[test]
    fn bare_names_resolve_against_declarations() {
        let t = parse_term_file("gen f A B\ngen g B C\n# composite:\ng . f\n").unwrap();
        assert_eq!(t.atoms().len(), 2);
        assert_eq!(t.source(), Some("A"));
        let err = parse_term_file("g . f").unwrap_err();
        assert!(matches!(err, CobmapError::Parse { .. }));
    }

    #[test]
    fn error_positions_are_reported() {
        let gens = GenContext::new();
        let err = parse_term("id(K0) .\n  ??", &gens).unwrap_err();
        match err {
            CobmapError::Parse { line, col, .. } => {
                assert_eq!(line, 2);
                assert_eq!(col, 3);
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn relation_file_round_trip() {
        let text = "\
gen a K0 K2
gen r K2 L1
gen s L1 K0
triangle a r s
eq s . r . a = zero   # follows from the triangle
";
        let rels = parse_relation_file(text).unwrap();
        assert_eq!(rels.triangles().len(), 1);
        assert_eq!(rels.equalities().len(), 1);
    }
}
