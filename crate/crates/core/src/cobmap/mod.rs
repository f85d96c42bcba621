//! Symbolic foam-cobordism maps over F_2 semantics.
//!
//! A [`MapTerm`] is either the zero map or a composite of atoms. Each atom is
//! a named generator (or an identity) carrying source and target web labels
//! plus a multiset of *decorations*: connected-sum summands attached at a
//! tetrahedral point, a seam point, or an interior face point. Normalization
//! resolves decorations by the closed-foam sum rules and recognizes the
//! standard two-step composite of bar cobordisms, which factors through a
//! one-tetrahedral-point foam summed with `Psi3` and is therefore zero.
//!
//! The rewrite system terminates: writing `a` for the atom count and `d` for
//! the total decoration count, every step either returns the zero map or
//! strictly decreases `2a + d`.

mod parse;
mod rels;

pub use parse::{parse_relation_file, parse_term, parse_term_file};
pub use rels::{
    equal, octahedron_suite, standard_octahedron, CheckStatus, EqualityOptions, OctahedronReport,
    RelationSet, SuiteCheck, Triangle,
};

use std::fmt;

/// Closed-foam summands that can decorate a cobordism map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Summand {
    Psi0,
    Psi1,
    Psi2,
    Psi3,
    Psi2Minus,
    DoubleMobius,
}

impl Summand {
    pub fn label(self) -> &'static str {
        match self {
            Summand::Psi0 => "psi0",
            Summand::Psi1 => "psi1",
            Summand::Psi2 => "psi2",
            Summand::Psi3 => "psi3",
            Summand::Psi2Minus => "psi2minus",
            Summand::DoubleMobius => "doublemobius",
        }
    }

    /// Does the summand have a tetrahedral point to sum at?
    fn has_tetra(self) -> bool {
        matches!(self, Summand::Psi2 | Summand::Psi3 | Summand::Psi2Minus)
    }

    /// Does the summand have a seam to sum at?
    fn has_seam(self) -> bool {
        !matches!(self, Summand::Psi0)
    }
}

/// Where on the foam the connected sum is performed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Locus {
    Tetra,
    Seam,
    Face,
}

impl Locus {
    pub fn label(self) -> &'static str {
        match self {
            Locus::Tetra => "tetra",
            Locus::Seam => "seam",
            Locus::Face => "face",
        }
    }
}

/// Which face of the summand carries the sum point, when it matters.
///
/// `RFace`/`DiskFace` select between the two projective-plane components and
/// the disk faces of `Psi2Minus`; `DPlus`/`DMinus`/`Mobius` select a face of
/// the two-disks-plus-Möbius-band foam.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FaceClass {
    RFace,
    DiskFace,
    DPlus,
    DMinus,
    Mobius,
}

impl FaceClass {
    pub fn label(self) -> &'static str {
        match self {
            FaceClass::RFace => "rface",
            FaceClass::DiskFace => "diskface",
            FaceClass::DPlus => "dplus",
            FaceClass::DMinus => "dminus",
            FaceClass::Mobius => "mobius",
        }
    }
}

/// Errors from term construction, parsing, and equality search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CobmapError {
    /// Composition with mismatched web labels.
    Compose { expected: String, found: String },
    /// A decoration whose summand/locus/face-class combination is malformed.
    Decoration(String),
    Parse { line: usize, col: usize, msg: String },
    /// Equality of terms with different source or target.
    Mismatch { left: String, right: String },
    /// A relation declaration is ill-typed or references unknown names.
    Relation(String),
    /// The bounded equality search gave up before deciding.
    SearchBound { explored: usize },
}

impl fmt::Display for CobmapError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CobmapError::Compose { expected, found } => {
                write!(f, "composition mismatch: expected source `{expected}`, found `{found}`")
            }
            CobmapError::Decoration(msg) => write!(f, "invalid decoration: {msg}"),
            CobmapError::Parse { line, col, msg } => {
                write!(f, "parse error at line {line}, column {col}: {msg}")
            }
            CobmapError::Mismatch { left, right } => {
                write!(f, "terms have different type: {left} vs {right}")
            }
            CobmapError::Relation(msg) => write!(f, "bad relation: {msg}"),
            CobmapError::SearchBound { explored } => {
                write!(f, "equality search bound exceeded after {explored} terms")
            }
        }
    }
}

impl std::error::Error for CobmapError {}

/// A connected-sum decoration on one atom.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Decoration {
    pub summand: Summand,
    pub locus: Locus,
    pub face_class: Option<FaceClass>,
}

impl Decoration {
    pub fn new(
        summand: Summand,
        locus: Locus,
        face_class: Option<FaceClass>,
    ) -> Result<Decoration, CobmapError> {
        match locus {
            Locus::Tetra if !summand.has_tetra() => {
                return Err(CobmapError::Decoration(format!(
                    "{} has no tetrahedral point",
                    summand.label()
                )))
            }
            Locus::Seam if !summand.has_seam() => {
                return Err(CobmapError::Decoration(format!("{} has no seam", summand.label())))
            }
            _ => {}
        }
        let class_ok = match (summand, locus) {
            (Summand::Psi2Minus, Locus::Face) => {
                matches!(face_class, Some(FaceClass::RFace) | Some(FaceClass::DiskFace))
            }
            (Summand::DoubleMobius, Locus::Face) => matches!(
                face_class,
                Some(FaceClass::DPlus) | Some(FaceClass::DMinus) | Some(FaceClass::Mobius)
            ),
            _ => face_class.is_none(),
        };
        if !class_ok {
            return Err(CobmapError::Decoration(format!(
                "face class {:?} does not fit {} at {}",
                face_class.map(FaceClass::label),
                summand.label(),
                locus.label(),
            )));
        }
        Ok(Decoration { summand, locus, face_class })
    }
}

impl fmt::Display for Decoration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sum({}, {}", self.summand.label(), self.locus.label())?;
        if let Some(c) = self.face_class {
            write!(f, ", {}", c.label())?;
        }
        write!(f, ")")
    }
}

/// What a decoration does to the map it sits on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuleAction {
    /// The decorated map equals the undecorated one.
    Drop,
    /// The decorated map is zero.
    Zero,
    /// No reduction is known; the decoration stays in the normal form.
    Keep,
}

/// Size of the gluing fiber for a tetrahedral-point sum with `Psi2`; the map
/// is multiplied by this point count, which is odd, so it survives mod 2.
pub const PSI2_TETRA_GLUING_FIBER: u32 = 1;

/// Size of the gluing fiber for a tetrahedral-point sum with `Psi3`; even,
/// so the map dies in characteristic 2.
pub const PSI3_TETRA_GLUING_FIBER: u32 = 2;

/// The decoration rule table.
pub fn decoration_rule(d: &Decoration) -> RuleAction {
    use FaceClass as F;
    use Locus as L;
    use Summand as S;
    match (d.summand, d.locus) {
        (S::Psi2, L::Tetra) => RuleAction::Drop,
        (S::Psi3, L::Tetra) => RuleAction::Zero,
        (S::Psi2, L::Seam) => RuleAction::Drop,
        (S::Psi1 | S::Psi3, L::Seam) => RuleAction::Zero,
        (S::Psi0, L::Face) => RuleAction::Drop,
        (S::Psi1 | S::Psi2 | S::Psi3, L::Face) => RuleAction::Zero,
        (S::Psi2Minus, L::Face) => match d.face_class {
            Some(F::RFace) => RuleAction::Drop,
            Some(F::DiskFace) => RuleAction::Zero,
            _ => unreachable!("validated at construction"),
        },
        (S::DoubleMobius, L::Face) => match d.face_class {
            Some(F::DPlus) | Some(F::Mobius) => RuleAction::Drop,
            Some(F::DMinus) => RuleAction::Zero,
            _ => unreachable!("validated at construction"),
        },
        // Psi2Minus at tetra or seam, DoubleMobius at seam
        _ => RuleAction::Keep,
    }
}

/// What an atom is, apart from its decorations.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AtomKind {
    Identity(String),
    Gen { name: String, src: String, dst: String },
}

/// One factor in a composite: a generator or identity plus its decorations.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom {
    pub kind: AtomKind,
    /// Sorted, so a decoration multiset compares structurally.
    decorations: Vec<Decoration>,
}

impl Atom {
    pub fn identity(web: impl Into<String>) -> Atom {
        Atom { kind: AtomKind::Identity(web.into()), decorations: Vec::new() }
    }

    pub fn generator(
        name: impl Into<String>,
        src: impl Into<String>,
        dst: impl Into<String>,
    ) -> Atom {
        Atom {
            kind: AtomKind::Gen { name: name.into(), src: src.into(), dst: dst.into() },
            decorations: Vec::new(),
        }
    }

    pub fn decorate(mut self, d: Decoration) -> Atom {
        self.decorations.push(d);
        self.decorations.sort();
        self
    }

    pub fn decorations(&self) -> &[Decoration] {
        &self.decorations
    }

    pub fn src(&self) -> &str {
        match &self.kind {
            AtomKind::Identity(w) => w,
            AtomKind::Gen { src, .. } => src,
        }
    }

    pub fn dst(&self) -> &str {
        match &self.kind {
            AtomKind::Identity(w) => w,
            AtomKind::Gen { dst, .. } => dst,
        }
    }

    pub fn name(&self) -> &str {
        match &self.kind {
            AtomKind::Identity(_) => "id",
            AtomKind::Gen { name, .. } => name,
        }
    }

    fn is_plain_identity(&self) -> bool {
        matches!(self.kind, AtomKind::Identity(_)) && self.decorations.is_empty()
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            AtomKind::Identity(w) => write!(f, "id({w})")?,
            AtomKind::Gen { name, src, dst } => write!(f, "gen({name}, {src}, {dst})")?,
        }
        for d in &self.decorations {
            write!(f, " @ {d}")?;
        }
        Ok(())
    }
}

/// A symbolic cobordism map: zero, or a nonempty composite of atoms stored in
/// application order (the first atom is applied first).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MapTerm {
    Zero,
    Composite(Vec<Atom>),
}

impl MapTerm {
    pub fn zero() -> MapTerm {
        MapTerm::Zero
    }

    pub fn atom(a: Atom) -> MapTerm {
        MapTerm::Composite(vec![a])
    }

    /// Build a composite from atoms in application order, checking that each
    /// atom's target matches the next atom's source.
    pub fn from_atoms(atoms: Vec<Atom>) -> Result<MapTerm, CobmapError> {
        if atoms.is_empty() {
            return Err(CobmapError::Relation("empty composite".into()));
        }
        for pair in atoms.windows(2) {
            if pair[0].dst() != pair[1].src() {
                return Err(CobmapError::Compose {
                    expected: pair[0].dst().to_string(),
                    found: pair[1].src().to_string(),
                });
            }
        }
        Ok(MapTerm::Composite(atoms))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, MapTerm::Zero)
    }

    pub fn atoms(&self) -> &[Atom] {
        match self {
            MapTerm::Zero => &[],
            MapTerm::Composite(atoms) => atoms,
        }
    }

    /// Source web label; `None` for the zero map, which composes with
    /// anything.
    pub fn source(&self) -> Option<&str> {
        self.atoms().first().map(Atom::src)
    }

    pub fn target(&self) -> Option<&str> {
        self.atoms().last().map(Atom::dst)
    }
}

impl fmt::Display for MapTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapTerm::Zero => write!(f, "zero"),
            MapTerm::Composite(atoms) => {
                // printed right-to-left: `f . g` applies g first
                for (i, a) in atoms.iter().rev().enumerate() {
                    if i > 0 {
                        write!(f, " . ")?;
                    }
                    write!(f, "{a}")?;
                }
                Ok(())
            }
        }
    }
}

/// Compose maps: `compose(later, earlier)` applies `earlier` first. The zero
/// map absorbs.
pub fn compose(later: &MapTerm, earlier: &MapTerm) -> Result<MapTerm, CobmapError> {
    match (later, earlier) {
        (MapTerm::Zero, _) | (_, MapTerm::Zero) => Ok(MapTerm::Zero),
        (MapTerm::Composite(l), MapTerm::Composite(e)) => {
            let mut atoms = e.clone();
            atoms.extend(l.iter().cloned());
            MapTerm::from_atoms(atoms)
        }
    }
}

/// Recognize the standard bar-to-bar cobordism names `Sigma(Li,Lj)` with
/// `i = j + 1` cyclically mod 3. Returns the two indices reduced mod 3.
fn sigma_bar_indices(name: &str) -> Option<(u8, u8)> {
    let rest = name.strip_prefix("Sigma(L")?;
    let (i, rest) = split_digits(rest)?;
    let rest = rest.strip_prefix(",L")?;
    let (j, rest) = split_digits(rest)?;
    if rest != ")" {
        return None;
    }
    let (i, j) = ((i % 3) as u8, (j % 3) as u8);
    if (j + 1) % 3 == i {
        Some((i, j))
    } else {
        None
    }
}

fn split_digits(s: &str) -> Option<(u32, &str)> {
    let end = s.find(|c: char| !c.is_ascii_digit()).unwrap_or(s.len());
    if end == 0 {
        return None;
    }
    s[..end].parse().ok().map(|n| (n, &s[end..]))
}

impl MapTerm {
    /// Rewrite to normal form.
    ///
    /// Decoration resolution: a tetrahedral-point sum with `Psi2` is dropped
    /// and with `Psi3` gives zero; a seam sum with `Psi2` is dropped and with
    /// `Psi1` or `Psi3` gives zero; a face sum with `Psi0` is dropped and
    /// with `Psi1`, `Psi2`, `Psi3` gives zero; a face sum with `Psi2Minus`
    /// drops on the projective-plane faces and gives zero on the disk faces;
    /// a face sum with the two-disks-plus-Möbius foam drops on `D+` and the
    /// Möbius face and gives zero on `D-`. A composite of two consecutive
    /// standard bar cobordisms fuses to a one-tetrahedral-point cobordism
    /// summed with `Psi3`, hence zero. Undecorated identity atoms are elided.
    pub fn normalize(&self) -> MapTerm {
        let MapTerm::Composite(start) = self else { return MapTerm::Zero };
        let mut atoms = start.clone();
        loop {
            // decoration rules
            for atom in &mut atoms {
                let mut kept = Vec::with_capacity(atom.decorations.len());
                for d in std::mem::take(&mut atom.decorations) {
                    match decoration_rule(&d) {
                        RuleAction::Zero => return MapTerm::Zero,
                        RuleAction::Drop => {}
                        RuleAction::Keep => kept.push(d),
                    }
                }
                atom.decorations = kept;
            }

            // fuse one consecutive pair of standard bar cobordisms
            let fuse_at = atoms.windows(2).position(|w| {
                match (sigma_bar_indices(w[0].name()), sigma_bar_indices(w[1].name())) {
                    (Some((_, j0)), Some((i1, _))) => j0 == i1,
                    _ => false,
                }
            });
            if let Some(p) = fuse_at {
                let first = atoms[p].clone();
                let second = atoms.remove(p + 1);
                let name = format!("V({},{})", first.src(), second.dst());
                let mut fused = Atom::generator(name, first.src(), second.dst());
                for d in first.decorations.iter().chain(second.decorations.iter()) {
                    fused = fused.decorate(d.clone());
                }
                fused = fused.decorate(
                    Decoration::new(Summand::Psi3, Locus::Tetra, None).expect("valid decoration"),
                );
                atoms[p] = fused;
                continue; // the Psi3 tetra decoration zeroes on the next pass
            }

            // elide undecorated identities (keep a lone identity)
            if atoms.len() > 1 && atoms.iter().any(Atom::is_plain_identity) {
                let mut rest: Vec<Atom> =
                    atoms.iter().filter(|a| !a.is_plain_identity()).cloned().collect();
                if rest.is_empty() {
                    rest.push(atoms[0].clone());
                }
                atoms = rest;
                continue;
            }

            return MapTerm::Composite(atoms);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sigma(i: u8, j: u8) -> Atom {
        Atom::generator(format!("Sigma(L{i},L{j})"), format!("L{i}"), format!("L{j}"))
    }

    fn dec(s: Summand, l: Locus, c: Option<FaceClass>) -> Decoration {
        Decoration::new(s, l, c).unwrap()
    }

    #[test]
    fn consecutive_bar_cobordisms_compose_to_zero() {
        for i in 0u8..3 {
            let first = sigma((i + 2) % 3, (i + 1) % 3);
            let second = sigma((i + 1) % 3, i);
            let t = MapTerm::from_atoms(vec![first, second]).unwrap();
            assert_eq!(t.normalize(), MapTerm::Zero, "i = {i}");
        }
    }

    #[test]
    fn nonconsecutive_sigma_names_do_not_fuse() {
        // an ascending name is not a standard bar cobordism
        let up = Atom::generator("Sigma(L0,L1)", "L0", "L1");
        let down = sigma(1, 0);
        let t = MapTerm::from_atoms(vec![up, down]).unwrap();
        assert_eq!(t.normalize().atoms().len(), 2);
    }

    #[test]
    fn decoration_rule_table() {
        use RuleAction::*;
        let cases: Vec<(Decoration, RuleAction)> = vec![
            (dec(Summand::Psi2, Locus::Tetra, None), Drop),
            (dec(Summand::Psi3, Locus::Tetra, None), Zero),
            (dec(Summand::Psi1, Locus::Seam, None), Zero),
            (dec(Summand::Psi2, Locus::Seam, None), Drop),
            (dec(Summand::Psi3, Locus::Seam, None), Zero),
            (dec(Summand::Psi0, Locus::Face, None), Drop),
            (dec(Summand::Psi1, Locus::Face, None), Zero),
            (dec(Summand::Psi2, Locus::Face, None), Zero),
            (dec(Summand::Psi3, Locus::Face, None), Zero),
            (dec(Summand::Psi2Minus, Locus::Face, Some(FaceClass::RFace)), Drop),
            (dec(Summand::Psi2Minus, Locus::Face, Some(FaceClass::DiskFace)), Zero),
            (dec(Summand::DoubleMobius, Locus::Face, Some(FaceClass::DPlus)), Drop),
            (dec(Summand::DoubleMobius, Locus::Face, Some(FaceClass::Mobius)), Drop),
            (dec(Summand::DoubleMobius, Locus::Face, Some(FaceClass::DMinus)), Zero),
        ];
        for (d, want) in cases {
            assert_eq!(decoration_rule(&d), want, "rule mismatch for {d}");
        }
    }

    #[test]
    fn decorated_atom_normalizes_per_rule() {
        let base = Atom::generator("T(K2,K1)", "K2", "K1");
        let kept = MapTerm::atom(base.clone().decorate(dec(Summand::Psi0, Locus::Face, None)));
        assert_eq!(kept.normalize(), MapTerm::atom(base.clone()));

        let zeroed = MapTerm::atom(base.clone().decorate(dec(Summand::Psi1, Locus::Face, None)));
        assert_eq!(zeroed.normalize(), MapTerm::Zero);

        // a tilde-style handle attachment modeled as the bar cobordism with a
        // Psi2 tetrahedral sum normalizes to the bar cobordism itself
        let tilde = MapTerm::atom(sigma(2, 1).decorate(dec(Summand::Psi2, Locus::Tetra, None)));
        assert_eq!(tilde.normalize(), MapTerm::atom(sigma(2, 1)));
    }

    #[test]
    fn identity_composition_collapses() {
        let id = Atom::identity("W");
        let t = MapTerm::from_atoms(vec![id.clone(), id.clone()]).unwrap();
        assert_eq!(t.normalize(), MapTerm::atom(id));
    }

    #[test]
    fn unresolved_decorations_stay() {
        let a = Atom::generator("g", "A", "B")
            .decorate(dec(Summand::Psi2Minus, Locus::Seam, None));
        let t = MapTerm::atom(a.clone());
        assert_eq!(t.normalize(), MapTerm::atom(a));
    }

    #[test]
    fn zero_absorbs_in_composition() {
        let g = MapTerm::atom(Atom::generator("g", "A", "B"));
        assert_eq!(compose(&MapTerm::Zero, &g).unwrap(), MapTerm::Zero);
        assert_eq!(compose(&g, &MapTerm::Zero).unwrap(), MapTerm::Zero);
    }

    #[test]
    fn compose_checks_web_labels() {
        let f = MapTerm::atom(Atom::generator("f", "A", "B"));
        let h = MapTerm::atom(Atom::generator("h", "C", "D"));
        let err = compose(&h, &f).unwrap_err();
        assert_eq!(err, CobmapError::Compose { expected: "B".into(), found: "C".into() });
    }

    #[test]
    fn invalid_decorations_rejected() {
        assert!(Decoration::new(Summand::Psi0, Locus::Tetra, None).is_err());
        assert!(Decoration::new(Summand::Psi0, Locus::Seam, None).is_err());
        assert!(Decoration::new(Summand::Psi1, Locus::Tetra, None).is_err());
        assert!(Decoration::new(Summand::DoubleMobius, Locus::Tetra, None).is_err());
        assert!(Decoration::new(Summand::Psi2Minus, Locus::Face, None).is_err());
        assert!(Decoration::new(Summand::Psi2, Locus::Face, Some(FaceClass::RFace)).is_err());
        assert!(Decoration::new(Summand::DoubleMobius, Locus::Face, Some(FaceClass::RFace))
            .is_err());
    }

    #[test]
    fn fiber_parity_matches_tetra_rules() {
        // the tetra rules are the mod-2 shadow of the gluing fiber sizes
        assert_eq!(PSI2_TETRA_GLUING_FIBER % 2, 1);
        assert_eq!(PSI3_TETRA_GLUING_FIBER % 2, 0);
        let keep = decoration_rule(&dec(Summand::Psi2, Locus::Tetra, None));
        let kill = decoration_rule(&dec(Summand::Psi3, Locus::Tetra, None));
        assert_eq!(keep == RuleAction::Drop, PSI2_TETRA_GLUING_FIBER % 2 == 1);
        assert_eq!(kill == RuleAction::Zero, PSI3_TETRA_GLUING_FIBER % 2 == 0);
    }

    #[test]
    fn normalize_is_idempotent_on_examples() {
        let t = MapTerm::from_atoms(vec![
            Atom::identity("L2"),
            sigma(2, 1).decorate(dec(Summand::Psi2, Locus::Tetra, None)),
            Atom::identity("L1"),
        ])
        .unwrap();
        let n = t.normalize();
        assert_eq!(n.normalize(), n);
    }
}
