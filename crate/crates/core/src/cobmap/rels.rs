//! Declared relations between cobordism maps, a bounded equality prover, and
//! the octahedral-diagram verification suite.

use super::parse::GenContext;
use super::{Atom, CobmapError, MapTerm};
use std::collections::{HashSet, VecDeque};

/// An exact triangle: three maps, cyclically consecutive. Declaring one adds
/// the derived axioms that each consecutive composite is the zero map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    pub maps: [Atom; 3],
}

impl Triangle {
    /// The three consecutive-composite-is-zero axioms, in application order.
    fn zero_axioms(&self) -> Vec<(MapTerm, MapTerm)> {
        let [f, g, h] = &self.maps;
        [(f, g), (g, h), (h, f)]
            .into_iter()
            .map(|(x, y)| {
                (
                    MapTerm::from_atoms(vec![x.clone(), y.clone()])
                        .expect("triangle maps are cyclically composable"),
                    MapTerm::Zero,
                )
            })
            .collect()
    }

    /// True if `other`'s maps equal ours up to cyclic rotation.
    pub fn matches(&self, maps: &[Atom; 3]) -> bool {
        (0..3).any(|r| (0..3).all(|i| self.maps[(i + r) % 3] == maps[i]))
    }
}

/// A set of declared equalities between map terms, exact-triangle
/// memberships, and optionally the central square of the 4-periodic complex.
#[derive(Clone, Debug, Default)]
pub struct RelationSet {
    gens: GenContext,
    gen_order: Vec<String>,
    equalities: Vec<(MapTerm, MapTerm)>,
    triangles: Vec<Triangle>,
    square: Option<[Atom; 4]>,
}

impl RelationSet {
    pub fn new() -> RelationSet {
        RelationSet::default()
    }

    pub fn declare_gen(&mut self, name: &str, src: &str, dst: &str) -> Result<(), CobmapError> {
        if self.gens.contains_key(name) {
            return Err(CobmapError::Relation(format!("generator `{name}` declared twice")));
        }
        self.gens.insert(name.to_string(), (src.to_string(), dst.to_string()));
        self.gen_order.push(name.to_string());
        Ok(())
    }

    pub fn gen_atom(&self, name: &str) -> Option<Atom> {
        self.gens.get(name).map(|(src, dst)| Atom::generator(name, src.clone(), dst.clone()))
    }

    pub fn gen_context(&self) -> &GenContext {
        &self.gens
    }

    pub fn generator_names(&self) -> &[String] {
        &self.gen_order
    }

    pub fn add_equality(&mut self, lhs: MapTerm, rhs: MapTerm) -> Result<(), CobmapError> {
        if let (MapTerm::Composite(_), MapTerm::Composite(_)) = (&lhs, &rhs) {
            if lhs.source() != rhs.source() || lhs.target() != rhs.target() {
                return Err(CobmapError::Relation(format!(
                    "equality sides have different type: {:?} -> {:?} vs {:?} -> {:?}",
                    lhs.source(),
                    lhs.target(),
                    rhs.source(),
                    rhs.target()
                )));
            }
        }
        self.equalities.push((lhs, rhs));
        Ok(())
    }

    pub fn add_triangle(&mut self, maps: [Atom; 3]) -> Result<(), CobmapError> {
        for i in 0..3 {
            let (a, b) = (&maps[i], &maps[(i + 1) % 3]);
            if a.dst() != b.src() {
                return Err(CobmapError::Relation(format!(
                    "triangle maps `{}` and `{}` do not compose",
                    a.name(),
                    b.name()
                )));
            }
        }
        self.triangles.push(Triangle { maps });
        Ok(())
    }

    pub fn set_square(&mut self, maps: [Atom; 4]) -> Result<(), CobmapError> {
        for i in 0..4 {
            let (a, b) = (&maps[i], &maps[(i + 1) % 4]);
            if a.dst() != b.src() {
                return Err(CobmapError::Relation(format!(
                    "square maps `{}` and `{}` do not compose",
                    a.name(),
                    b.name()
                )));
            }
        }
        self.square = Some(maps);
        Ok(())
    }

    pub fn equalities(&self) -> &[(MapTerm, MapTerm)] {
        &self.equalities
    }

    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    pub fn square(&self) -> Option<&[Atom; 4]> {
        self.square.as_ref()
    }

    /// Declared equalities plus the derived triangle composite-zero axioms.
    pub fn axioms(&self) -> Vec<(MapTerm, MapTerm)> {
        let mut out = self.equalities.clone();
        for t in &self.triangles {
            out.extend(t.zero_axioms());
        }
        out
    }
}

/// Bounds for the equality search.
#[derive(Clone, Copy, Debug)]
pub struct EqualityOptions {
    /// Longest composite (in atoms) the search will keep.
    pub max_atoms: usize,
    /// Cap on distinct terms explored before giving up with an error.
    pub max_explored: usize,
}

impl Default for EqualityOptions {
    fn default() -> EqualityOptions {
        EqualityOptions { max_atoms: 6, max_explored: 50_000 }
    }
}

/// Decide whether two terms are equal under the declared relations.
///
/// Both terms are normalized, then joined by bidirectional search over
/// axiom rewrites on contiguous subcomposites. This is a sound but
/// incomplete prover: `Ok(true)` means joined, `Ok(false)` means the search
/// space within the length bound was exhausted without joining, and
/// `Err(SearchBound)` means the exploration cap was hit first.
pub fn equal(
    t1: &MapTerm,
    t2: &MapTerm,
    rels: &RelationSet,
    opts: EqualityOptions,
) -> Result<bool, CobmapError> {
    if let (MapTerm::Composite(_), MapTerm::Composite(_)) = (t1, t2) {
        if t1.source() != t2.source() || t1.target() != t2.target() {
            return Err(CobmapError::Mismatch {
                left: format!("{:?} -> {:?}", t1.source(), t1.target()),
                right: format!("{:?} -> {:?}", t2.source(), t2.target()),
            });
        }
    }
    let start_a = t1.normalize();
    let start_b = t2.normalize();
    if start_a == start_b {
        return Ok(true);
    }

    // directed rewrite rules from both reading directions of each axiom
    let mut rules: Vec<(Vec<Atom>, MapTerm)> = Vec::new();
    for (l, r) in rels.axioms() {
        if let MapTerm::Composite(pat) = &l {
            rules.push((pat.clone(), r.clone()));
        }
        if let MapTerm::Composite(pat) = &r {
            rules.push((pat.clone(), l.clone()));
        }
    }

    let mut seen_a: HashSet<MapTerm> = HashSet::from([start_a.clone()]);
    let mut seen_b: HashSet<MapTerm> = HashSet::from([start_b.clone()]);
    let mut queue_a: VecDeque<MapTerm> = VecDeque::from([start_a]);
    let mut queue_b: VecDeque<MapTerm> = VecDeque::from([start_b]);

    loop {
        // expand the smaller non-empty side first
        let (queue, seen, other) = if queue_a.is_empty() && queue_b.is_empty() {
            return Ok(false);
        } else if !queue_a.is_empty() && (queue_b.is_empty() || queue_a.len() <= queue_b.len()) {
            (&mut queue_a, &mut seen_a, &seen_b)
        } else {
            (&mut queue_b, &mut seen_b, &seen_a)
        };
        let term = queue.pop_front().expect("chosen queue is non-empty");
        for next in rewrites(&term, &rules, opts.max_atoms) {
            if other.contains(&next) {
                return Ok(true);
            }
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
        if seen_a.len() + seen_b.len() > opts.max_explored {
            return Err(CobmapError::SearchBound { explored: seen_a.len() + seen_b.len() });
        }
    }
}

/// All one-step rewrites of `term`, normalized, within the length bound.
fn rewrites(term: &MapTerm, rules: &[(Vec<Atom>, MapTerm)], max_atoms: usize) -> Vec<MapTerm> {
    let MapTerm::Composite(atoms) = term else { return Vec::new() };
    let mut out = Vec::new();
    for (pat, rep) in rules {
        if pat.len() > atoms.len() {
            continue;
        }
        for i in 0..=atoms.len() - pat.len() {
            if &atoms[i..i + pat.len()] != pat.as_slice() {
                continue;
            }
            let next = match rep {
                MapTerm::Zero => MapTerm::Zero,
                MapTerm::Composite(rep_atoms) => {
                    let mut glued = atoms[..i].to_vec();
                    glued.extend(rep_atoms.iter().cloned());
                    glued.extend(atoms[i + pat.len()..].iter().cloned());
                    MapTerm::Composite(glued)
                }
            }
            .normalize();
            if next.atoms().len() <= max_atoms {
                out.push(next);
            }
        }
    }
    out
}

/// Outcome of one octahedron-suite check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Verified,
    NotDerivable,
    BoundExceeded,
}

/// One labeled check in the suite report.
#[derive(Clone, Debug)]
pub struct SuiteCheck {
    pub label: String,
    pub status: CheckStatus,
}

/// Report of the octahedral-diagram verification.
#[derive(Clone, Debug)]
pub struct OctahedronReport {
    /// Standard declarations absent from the supplied relation set.
    pub missing: Vec<String>,
    /// The four consecutive composites around the central square, each
    /// checked against the zero map.
    pub square_composites: Vec<SuiteCheck>,
    /// The two pairs of composites through the top vertex that must agree.
    pub same_map_checks: Vec<SuiteCheck>,
}

impl OctahedronReport {
    /// True when every composite around the square is verified zero, i.e.
    /// the four spaces form a 4-periodic complex.
    pub fn four_periodic(&self) -> bool {
        self.square_composites.iter().all(|c| c.status == CheckStatus::Verified)
    }

    pub fn all_verified(&self) -> bool {
        self.four_periodic()
            && self.same_map_checks.iter().all(|c| c.status == CheckStatus::Verified)
            && self.missing.is_empty()
    }
}

/// The names, sources and targets of the twelve standard octahedron maps.
///
/// The four central webs are `K0`, `K1`, `L0`, `L1`; `K2` sits below the
/// square and `L2'` above it. Arrow directions follow the prose exact
/// triangles; the central square, read once around, is
/// `K0 -gamma-> K1 -t-> L0 -xi-> L1 -s-> K0`.
pub const STANDARD_GENERATORS: [(&str, &str, &str); 12] = [
    ("a", "K0", "K2"),
    ("r", "K2", "L1"),
    ("s", "L1", "K0"),
    ("b", "K2", "K1"),
    ("t", "K1", "L0"),
    ("q", "L0", "K2"),
    ("gamma", "K0", "K1"),
    ("lambda", "K1", "L2'"),
    ("kappa", "L2'", "K0"),
    ("xi", "L0", "L1"),
    ("eta", "L1", "L2'"),
    ("zeta", "L2'", "L0"),
];

/// Build the standard octahedron relation set: four exact triangles, four
/// commuting faces, and the two same-composite equalities.
pub fn standard_octahedron() -> RelationSet {
    let at = |n: &str| {
        let (_, src, dst) = STANDARD_GENERATORS
            .iter()
            .find(|(m, _, _)| *m == n)
            .expect("standard name");
        Atom::generator(n, *src, *dst)
    };
    let term = |ns: &[&str]| {
        MapTerm::from_atoms(ns.iter().map(|n| at(n)).collect())
            .expect("standard composites are well typed")
    };
    let mut rels = RelationSet::new();
    for (name, src, dst) in STANDARD_GENERATORS {
        rels.declare_gen(name, src, dst).expect("distinct standard names");
    }
    // exact triangles
    rels.add_triangle([at("a"), at("r"), at("s")]).expect("composable");
    rels.add_triangle([at("b"), at("t"), at("q")]).expect("composable");
    rels.add_triangle([at("gamma"), at("lambda"), at("kappa")]).expect("composable");
    rels.add_triangle([at("xi"), at("eta"), at("zeta")]).expect("composable");
    // commuting faces: each square edge factors through an apex
    rels.add_equality(term(&["gamma"]), term(&["a", "b"])).expect("typed");
    rels.add_equality(term(&["xi"]), term(&["q", "r"])).expect("typed");
    rels.add_equality(term(&["t"]), term(&["lambda", "zeta"])).expect("typed");
    rels.add_equality(term(&["s"]), term(&["eta", "kappa"])).expect("typed");
    // the two composites into and out of the top vertex that agree
    rels.add_equality(term(&["b", "lambda"]), term(&["r", "eta"])).expect("typed");
    rels.add_equality(term(&["kappa", "a"]), term(&["zeta", "q"])).expect("typed");
    rels.set_square([at("gamma"), at("t"), at("xi"), at("s")]).expect("composable");
    rels
}

/// Verify the octahedral diagram against a supplied relation set: report
/// which standard declarations are missing, whether the four consecutive
/// composites around the central square are zero, and whether the two
/// composite pairs through the top vertex agree.
pub fn octahedron_suite(rels: &RelationSet) -> OctahedronReport {
    let standard = standard_octahedron();
    let mut missing = Vec::new();

    for (name, src, dst) in STANDARD_GENERATORS {
        match rels.gens.get(name) {
            Some((s, d)) if s == src && d == dst => {}
            Some(_) => missing.push(format!("generator {name} (declared with different type)")),
            None => missing.push(format!("generator {name}")),
        }
    }
    for t in standard.triangles() {
        if !rels.triangles.iter().any(|u| u.matches(&t.maps)) {
            let [f, g, h] = &t.maps;
            missing.push(format!("triangle ({}, {}, {})", f.name(), g.name(), h.name()));
        }
    }
    for (l, r) in standard.equalities() {
        let declared = rels
            .equalities
            .iter()
            .any(|(a, b)| (a == l && b == r) || (a == r && b == l));
        if !declared {
            missing.push(format!("equality {l} = {r}"));
        }
    }
    match (&rels.square, &standard.square) {
        (Some(sq), Some(std_sq)) if (0..4).any(|r| (0..4).all(|i| sq[(i + r) % 4] == std_sq[i])) => {
        }
        _ => missing.push("square (gamma, t, xi, s)".to_string()),
    }

    // resolve atoms from the user's declarations when present so the checks
    // exercise the supplied relation set, falling back to the standard types
    let atom = |name: &str| rels.gen_atom(name).unwrap_or_else(|| {
        standard.gen_atom(name).expect("standard name")
    });
    let opts = EqualityOptions::default();
    let zero_check = |first: &str, then: &str| -> SuiteCheck {
        let label = format!("{then} . {first} = zero");
        let status = match MapTerm::from_atoms(vec![atom(first), atom(then)]) {
            Ok(t) => match equal(&t, &MapTerm::Zero, rels, opts) {
                Ok(true) => CheckStatus::Verified,
                Ok(false) => CheckStatus::NotDerivable,
                Err(CobmapError::SearchBound { .. }) => CheckStatus::BoundExceeded,
                Err(_) => CheckStatus::NotDerivable,
            },
            Err(_) => CheckStatus::NotDerivable,
        };
        SuiteCheck { label, status }
    };
    let square_composites = vec![
        zero_check("gamma", "t"),
        zero_check("t", "xi"),
        zero_check("xi", "s"),
        zero_check("s", "gamma"),
    ];

    let same_map = |l: [&str; 2], r: [&str; 2]| -> SuiteCheck {
        let label = format!("{} . {} = {} . {}", l[1], l[0], r[1], r[0]);
        let lt = MapTerm::from_atoms(vec![atom(l[0]), atom(l[1])]);
        let rt = MapTerm::from_atoms(vec![atom(r[0]), atom(r[1])]);
        let status = match (lt, rt) {
            (Ok(lt), Ok(rt)) => match equal(&lt, &rt, rels, opts) {
                Ok(true) => CheckStatus::Verified,
                Ok(false) => CheckStatus::NotDerivable,
                Err(CobmapError::SearchBound { .. }) => CheckStatus::BoundExceeded,
                Err(_) => CheckStatus::NotDerivable,
            },
            _ => CheckStatus::NotDerivable,
        };
        SuiteCheck { label, status }
    };
    let same_map_checks = vec![
        same_map(["b", "lambda"], ["r", "eta"]),
        same_map(["kappa", "a"], ["zeta", "q"]),
    ];

    OctahedronReport { missing, square_composites, same_map_checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_zero_composites_are_derived_axioms() {
        let mut rels = RelationSet::new();
        rels.declare_gen("b", "K2", "K1").unwrap();
        rels.declare_gen("t", "K1", "L0").unwrap();
        rels.declare_gen("q", "L0", "K2").unwrap();
        rels.add_triangle([
            rels.gen_atom("b").unwrap(),
            rels.gen_atom("t").unwrap(),
            rels.gen_atom("q").unwrap(),
        ])
        .unwrap();
        let tb = MapTerm::from_atoms(vec![
            rels.gen_atom("b").unwrap(),
            rels.gen_atom("t").unwrap(),
        ])
        .unwrap();
        assert_eq!(equal(&tb, &MapTerm::Zero, &rels, EqualityOptions::default()), Ok(true));
    }

    #[test]
    fn t_gamma_vanishes_via_face_substitution() {
        // gamma = b . a together with the (b, t, q) triangle kills t . gamma
        let rels = standard_octahedron();
        let t_gamma = MapTerm::from_atoms(vec![
            rels.gen_atom("gamma").unwrap(),
            rels.gen_atom("t").unwrap(),
        ])
        .unwrap();
        assert_eq!(equal(&t_gamma, &MapTerm::Zero, &rels, EqualityOptions::default()), Ok(true));
    }

    #[test]
    fn one_missing_face_axiom_still_derives_through_the_other_apex() {
        // dropping gamma = b . a alone does not block t . gamma = 0: the
        // substitution t = zeta . lambda and the (gamma, lambda, kappa)
        // triangle give an alternative derivation
        let mut rels = standard_octahedron();
        let gamma = MapTerm::atom(rels.gen_atom("gamma").unwrap());
        rels.equalities.retain(|(l, _)| *l != gamma);
        let t_gamma = MapTerm::from_atoms(vec![
            rels.gen_atom("gamma").unwrap(),
            rels.gen_atom("t").unwrap(),
        ])
        .unwrap();
        assert_eq!(equal(&t_gamma, &MapTerm::Zero, &rels, EqualityOptions::default()), Ok(true));
        let report = octahedron_suite(&rels);
        assert!(report.missing.iter().any(|m| m.contains("gamma")));
    }

    #[test]
    fn missing_face_axioms_block_the_derivation() {
        // with both routes cut (gamma = b . a and t = zeta . lambda),
        // t . gamma is unresolved and reported as such
        let mut rels = standard_octahedron();
        let gamma = MapTerm::atom(rels.gen_atom("gamma").unwrap());
        let t = MapTerm::atom(rels.gen_atom("t").unwrap());
        rels.equalities.retain(|(l, _)| *l != gamma && *l != t);
        let t_gamma = MapTerm::from_atoms(vec![
            rels.gen_atom("gamma").unwrap(),
            rels.gen_atom("t").unwrap(),
        ])
        .unwrap();
        assert_eq!(equal(&t_gamma, &MapTerm::Zero, &rels, EqualityOptions::default()), Ok(false));
        let report = octahedron_suite(&rels);
        assert_eq!(report.square_composites[0].label, "t . gamma = zero");
        assert_eq!(report.square_composites[0].status, CheckStatus::NotDerivable);
        assert!(report.missing.iter().any(|m| m.contains("gamma")));
    }

    #[test]
    fn reflexive_equality_with_no_relations() {
        let rels = RelationSet::new();
        let a = MapTerm::atom(Atom::generator("a", "K0", "K2"));
        assert_eq!(equal(&a, &a, &rels, EqualityOptions::default()), Ok(true));
    }

    #[test]
    fn equality_rejects_mismatched_types() {
        let rels = RelationSet::new();
        let a = MapTerm::atom(Atom::generator("a", "K0", "K2"));
        let b = MapTerm::atom(Atom::generator("b", "K2", "K1"));
        assert!(matches!(
            equal(&a, &b, &rels, EqualityOptions::default()),
            Err(CobmapError::Mismatch { .. })
        ));
    }

    #[test]
    fn full_suite_verifies_and_empty_suite_does_not() {
        let report = octahedron_suite(&standard_octahedron());
        assert!(report.missing.is_empty(), "missing: {:?}", report.missing);
        assert!(report.four_periodic());
        assert!(report.all_verified());

        let empty = octahedron_suite(&RelationSet::new());
        assert!(!empty.missing.is_empty());
        assert!(empty
            .square_composites
            .iter()
            .all(|c| c.status == CheckStatus::NotDerivable));
        assert!(!empty.all_verified());
    }

    #[test]
    fn lemma_style_composite_equalities_confirmed() {
        let rels = standard_octahedron();
        let lb = MapTerm::from_atoms(vec![
            rels.gen_atom("b").unwrap(),
            rels.gen_atom("lambda").unwrap(),
        ])
        .unwrap();
        let er = MapTerm::from_atoms(vec![
            rels.gen_atom("r").unwrap(),
            rels.gen_atom("eta").unwrap(),
        ])
        .unwrap();
        assert_eq!(equal(&lb, &er, &rels, EqualityOptions::default()), Ok(true));
    }
}
