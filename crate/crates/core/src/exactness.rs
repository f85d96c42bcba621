//! Rank and dimension bookkeeping for exact triangles and the 4-periodic
//! complex: rank-nullity constraint propagation, Euler-characteristic
//! identities, and the dodecahedron bound workflow.

use crate::corpus;
use crate::tait::{verify_tutte_capped, TaitError, TutteCheck};
use crate::web::Web;
use num_bigint::{BigInt, BigUint};
use std::collections::HashMap;
use std::fmt;

/// Errors from constraint building and evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactnessError {
    DuplicateVariable(String),
    UnknownVariable(String),
    UnknownTriangle(String),
    /// The target map is not a side of the named triangle.
    MapNotInTriangle { map: String, triangle: String },
    /// A bound came out negative, so the inputs are inconsistent.
    NegativeBound(BigInt),
    UnknownLabel(String),
    Infeasible { var: String, lo: i128, hi: i128 },
}

impl fmt::Display for ExactnessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactnessError::DuplicateVariable(v) => write!(f, "variable `{v}` already declared"),
            ExactnessError::UnknownVariable(v) => write!(f, "unknown variable `{v}`"),
            ExactnessError::UnknownTriangle(t) => write!(f, "unknown triangle `{t}`"),
            ExactnessError::MapNotInTriangle { map, triangle } => {
                write!(f, "map `{map}` is not a side of triangle `{triangle}`")
            }
            ExactnessError::NegativeBound(b) => {
                write!(f, "bound {b} is negative: the inputs are infeasible")
            }
            ExactnessError::UnknownLabel(l) => write!(f, "unknown component label `{l}`"),
            ExactnessError::Infeasible { var, lo, hi } => {
                write!(f, "infeasible: variable `{var}` confined to empty range [{lo}, {hi}]")
            }
        }
    }
}

impl std::error::Error for ExactnessError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Interval {
    lo: i128,
    /// `None` is unbounded above.
    hi: Option<i128>,
}

impl Interval {
    fn nonneg() -> Interval {
        Interval { lo: 0, hi: None }
    }

    fn is_empty(&self) -> bool {
        self.hi.is_some_and(|h| h < self.lo)
    }

    fn solved(&self) -> Option<i128> {
        (self.hi == Some(self.lo)).then_some(self.lo)
    }
}

#[derive(Clone, Debug)]
enum Constraint {
    /// `sum of coef * var == rhs`
    Eq { terms: Vec<(i128, usize)>, rhs: i128 },
    /// `sum of coef * var <= rhs`
    Le { terms: Vec<(i128, usize)>, rhs: i128 },
}

/// A registered exact triangle: spaces `(A, B, C)` and maps
/// `(f: A -> B, g: B -> C, h: C -> A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleRecord {
    pub spaces: [String; 3],
    pub maps: [String; 3],
}

impl TriangleRecord {
    /// The pairs of maps whose composite is forced to vanish by exactness,
    /// in application order: `(first, then)`.
    pub fn zero_composites(&self) -> [(String, String); 3] {
        let [f, g, h] = self.maps.clone();
        [(f.clone(), g.clone()), (g, h.clone()), (h, f)]
    }
}

/// Outcome of interval propagation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    Feasible {
        /// Variables pinned to a single value.
        solved: Vec<(String, i128)>,
        /// Count of variables still ranging.
        open: usize,
    },
    Infeasible {
        var: String,
        lo: i128,
        hi: i128,
    },
}

/// Named nonnegative integer variables (space dimensions and map ranks) with
/// linear equality and inequality constraints, solved by integer interval
/// propagation. All the systems that arise here are triangular, so
/// propagation pins every variable whenever the instance is determined.
#[derive(Clone, Debug, Default)]
pub struct ConstraintSystem {
    names: Vec<String>,
    index: HashMap<String, usize>,
    intervals: Vec<Interval>,
    constraints: Vec<Constraint>,
    triangles: Vec<TriangleRecord>,
}

impl ConstraintSystem {
    pub fn new() -> ConstraintSystem {
        ConstraintSystem::default()
    }

    fn var(&mut self, name: &str) -> usize {
        if let Some(&i) = self.index.get(name) {
            return i;
        }
        let i = self.names.len();
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), i);
        self.intervals.push(Interval::nonneg());
        i
    }

    /// Declare a space dimension variable (idempotent).
    pub fn add_space(&mut self, name: &str) -> &mut Self {
        self.var(name);
        self
    }

    /// Declare a map with its rank variable `rank(name)`, bounded by both
    /// dimensions.
    pub fn add_map(&mut self, name: &str, src: &str, dst: &str) -> &mut Self {
        let r = self.var(&rank_name(name));
        let s = self.var(src);
        let d = self.var(dst);
        self.constraints.push(Constraint::Le { terms: vec![(1, r), (-1, s)], rhs: 0 });
        self.constraints.push(Constraint::Le { terms: vec![(1, r), (-1, d)], rhs: 0 });
        self
    }

    /// Fix a variable to a value.
    pub fn set_value(&mut self, name: &str, value: i128) -> Result<&mut Self, ExactnessError> {
        let i = self.var(name);
        let cur = self.intervals[i];
        let next = Interval {
            lo: cur.lo.max(value),
            hi: Some(cur.hi.map_or(value, |h| h.min(value))),
        };
        self.intervals[i] = next;
        if next.is_empty() {
            return Err(ExactnessError::Infeasible {
                var: name.to_string(),
                lo: next.lo,
                hi: next.hi.expect("set above"),
            });
        }
        Ok(self)
    }

    /// Register an exact triangle over spaces `(A, B, C)` with maps
    /// `(f: A -> B, g: B -> C, h: C -> A)`: adds the rank-nullity equations
    /// `|A| = rank f + rank h`, `|B| = rank g + rank f`,
    /// `|C| = rank h + rank g`, and the rank bounds for each map.
    pub fn add_exact_triangle(
        &mut self,
        spaces: (&str, &str, &str),
        maps: (&str, &str, &str),
    ) -> &mut Self {
        let (a, b, c) = spaces;
        let (f, g, h) = maps;
        self.add_map(f, a, b).add_map(g, b, c).add_map(h, c, a);
        let (va, vb, vc) = (self.var(a), self.var(b), self.var(c));
        let (vf, vg, vh) =
            (self.var(&rank_name(f)), self.var(&rank_name(g)), self.var(&rank_name(h)));
        self.constraints
            .push(Constraint::Eq { terms: vec![(1, vf), (1, vh), (-1, va)], rhs: 0 });
        self.constraints
            .push(Constraint::Eq { terms: vec![(1, vg), (1, vf), (-1, vb)], rhs: 0 });
        self.constraints
            .push(Constraint::Eq { terms: vec![(1, vh), (1, vg), (-1, vc)], rhs: 0 });
        self.triangles.push(TriangleRecord {
            spaces: [a.to_string(), b.to_string(), c.to_string()],
            maps: [f.to_string(), g.to_string(), h.to_string()],
        });
        self
    }

    pub fn triangles(&self) -> &[TriangleRecord] {
        &self.triangles
    }

    pub fn value(&self, name: &str) -> Option<i128> {
        self.index.get(name).and_then(|&i| self.intervals[i].solved())
    }

    /// Closed-form rank extraction for triangles whose three dimensions are
    /// pinned. Returns an error on parity or negativity failures.
    fn extract_triangles(&mut self) -> Result<bool, ExactnessError> {
        let mut changed = false;
        for t in self.triangles.clone() {
            let dims: Vec<Option<i128>> = t.spaces.iter().map(|s| self.value(s)).collect();
            let (Some(a), Some(b), Some(c)) = (dims[0], dims[1], dims[2]) else { continue };
            for (i, (x, y)) in [(a, b), (b, c), (c, a)].into_iter().enumerate() {
                let twice = x + y - [c, a, b][i];
                let name = rank_name(&t.maps[i]);
                if twice % 2 != 0 || twice < 0 {
                    return Err(ExactnessError::Infeasible {
                        var: name,
                        lo: 0,
                        hi: -1,
                    });
                }
                if self.value(&name) != Some(twice / 2) {
                    self.set_value(&name, twice / 2)?;
                    changed = true;
                }
            }
        }
        Ok(changed)
    }

    /// Tighten every interval to a fixed point and report feasibility.
    /// Registered triangles with pinned dimensions are solved outright; the
    /// remaining constraints are narrowed by integer interval arithmetic.
    pub fn propagate(&mut self) -> Feasibility {
        loop {
            let mut changed = match self.extract_triangles() {
                Ok(c) => c,
                Err(ExactnessError::Infeasible { var, lo, hi }) => {
                    return Feasibility::Infeasible { var, lo, hi }
                }
                Err(_) => unreachable!("extraction only reports infeasibility"),
            };
            for cidx in 0..self.constraints.len() {
                let (terms, rhs, is_eq) = match &self.constraints[cidx] {
                    Constraint::Eq { terms, rhs } => (terms.clone(), *rhs, true),
                    Constraint::Le { terms, rhs } => (terms.clone(), *rhs, false),
                };
                for (pos, &(coef, v)) in terms.iter().enumerate() {
                    // bound coef*v by rhs minus the range of the other terms
                    let mut rest_lo: Option<i128> = Some(0);
                    let mut rest_hi: Option<i128> = Some(0);
                    for (opos, &(ocoef, ov)) in terms.iter().enumerate() {
                        if opos == pos {
                            continue;
                        }
                        let iv = self.intervals[ov];
                        let (term_lo, term_hi) = if ocoef >= 0 {
                            (Some(ocoef * iv.lo), iv.hi.map(|h| ocoef * h))
                        } else {
                            (iv.hi.map(|h| ocoef * h), Some(ocoef * iv.lo))
                        };
                        rest_lo = rest_lo.zip(term_lo).map(|(x, y)| x + y);
                        rest_hi = rest_hi.zip(term_hi).map(|(x, y)| x + y);
                    }
                    // coef*v <= rhs - rest_lo, and for equality also
                    // coef*v >= rhs - rest_hi
                    let upper = rest_lo.map(|r| rhs - r);
                    let lower = if is_eq { rest_hi.map(|r| rhs - r) } else { None };
                    let iv = &mut self.intervals[v];
                    if coef > 0 {
                        if let Some(u) = upper {
                            let bound = floor_div(u, coef);
                            if iv.hi.map_or(true, |h| bound < h) {
                                iv.hi = Some(bound);
                                changed = true;
                            }
                        }
                        if let Some(l) = lower {
                            let bound = ceil_div(l, coef);
                            if bound > iv.lo {
                                iv.lo = bound;
                                changed = true;
                            }
                        }
                    } else if coef < 0 {
                        if let Some(u) = upper {
                            let bound = ceil_div(u, coef);
                            if bound > iv.lo {
                                iv.lo = bound;
                                changed = true;
                            }
                        }
                        if let Some(l) = lower {
                            let bound = floor_div(l, coef);
                            if iv.hi.map_or(true, |h| bound < h) {
                                iv.hi = Some(bound);
                                changed = true;
                            }
                        }
                    }
                    if self.intervals[v].is_empty() {
                        let iv = self.intervals[v];
                        return Feasibility::Infeasible {
                            var: self.names[v].clone(),
                            lo: iv.lo,
                            hi: iv.hi.expect("empty needs an upper bound"),
                        };
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let mut solved = Vec::new();
        let mut open = 0;
        for (i, iv) in self.intervals.iter().enumerate() {
            match iv.solved() {
                Some(v) => solved.push((self.names[i].clone(), v)),
                None => open += 1,
            }
        }
        Feasibility::Feasible { solved, open }
    }

    /// The two-rank identity for one side of a registered triangle: for the
    /// map `m: A -> B` in a triangle with third space `C`,
    /// `2 rank(m) = |A| - |C| + |B|`.
    pub fn derive_two_rank(
        &self,
        triangle: usize,
        map: &str,
    ) -> Result<TwoRankIdentity, ExactnessError> {
        let t = self
            .triangles
            .get(triangle)
            .ok_or_else(|| ExactnessError::UnknownTriangle(format!("#{triangle}")))?;
        let side = t.maps.iter().position(|m| m == map).ok_or_else(|| {
            ExactnessError::MapNotInTriangle {
                map: map.to_string(),
                triangle: format!("#{triangle}"),
            }
        })?;
        // maps[i]: spaces[i] -> spaces[(i+1) % 3]; third is spaces[(i+2) % 3]
        Ok(TwoRankIdentity {
            map: map.to_string(),
            src: t.spaces[side].clone(),
            dst: t.spaces[(side + 1) % 3].clone(),
            third: t.spaces[(side + 2) % 3].clone(),
        })
    }
}

fn rank_name(map: &str) -> String {
    format!("rank({map})")
}

fn floor_div(a: i128, b: i128) -> i128 {
    let (a, b) = if b < 0 { (-a, -b) } else { (a, b) };
    a.div_euclid(b)
}

fn ceil_div(a: i128, b: i128) -> i128 {
    let (a, b) = if b < 0 { (-a, -b) } else { (a, b) };
    -((-a).div_euclid(b))
}

/// `2 rank(map) = |src| - |third| + |dst|`, the alternating-dimension form
/// that exactness forces for each side of a triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoRankIdentity {
    pub map: String,
    pub src: String,
    pub dst: String,
    pub third: String,
}

impl TwoRankIdentity {
    /// Evaluate the right-hand side `|src| - |third| + |dst|`.
    pub fn rhs(&self, dim_of: impl Fn(&str) -> i128) -> i128 {
        dim_of(&self.src) - dim_of(&self.third) + dim_of(&self.dst)
    }
}

impl fmt::Display for TwoRankIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "2·rank({}) = |{}| − |{}| + |{}|", self.map, self.src, self.third, self.dst)
    }
}

/// Solve one exact triangle outright: dimensions `(a, b, c)` determine the
/// ranks `(f, g, h)` uniquely when they exist. They exist iff `a + b - c` is
/// even and the three solved values are nonnegative.
pub fn solve_triangle(dims: (u64, u64, u64)) -> Option<(u64, u64, u64)> {
    let (a, b, c) = (dims.0 as i128, dims.1 as i128, dims.2 as i128);
    let twice_f = a + b - c;
    let twice_g = b + c - a;
    let twice_h = c + a - b;
    if twice_f % 2 != 0 {
        return None;
    }
    if twice_f < 0 || twice_g < 0 || twice_h < 0 {
        return None;
    }
    Some(((twice_f / 2) as u64, (twice_g / 2) as u64, (twice_h / 2) as u64))
}

/// Euler characteristic of the 4-periodic complex:
/// `k0 - k1 + l0 - l1`.
pub fn euler_4periodic(k0: &BigInt, k1: &BigInt, l0: &BigInt, l1: &BigInt) -> BigInt {
    k0 - k1 + l0 - l1
}

/// The Euler characteristic expressed through the two composite ranks:
/// `2 (rank(a∘kappa) - rank(lambda∘b))`.
pub fn euler_from_ranks(rank_a_kappa: u64, rank_lambda_b: u64) -> i64 {
    2 * (rank_a_kappa as i64 - rank_lambda_b as i64)
}

/// The same Euler characteristic through single ranks:
/// `2 (rank(a) - rank(b))`.
pub fn euler_from_single_ranks(rank_a: u64, rank_b: u64) -> i64 {
    2 * (rank_a as i64 - rank_b as i64)
}

/// Externally computed lower bound for the dodecahedron dimension.
pub const DODECAHEDRON_LOWER_BOUND: u64 = 58;

/// Upper bound on `|L0|` from the Euler inequality
/// `|K0| - |K1| + |L0| - |L1| <= 2 rank(a∘kappa)` when the other three webs
/// are simple (so their dimensions are their Tait counts, an input
/// assumption): returns `2 rank + tau(K1) + tau(L1) - tau(K0)`.
pub fn dodecahedron_bound(
    tau_k0: &BigUint,
    tau_k1: &BigUint,
    tau_l1: &BigUint,
    rank_a_kappa: u64,
) -> Result<BigInt, ExactnessError> {
    let bound = BigInt::from(2u32) * BigInt::from(rank_a_kappa) + BigInt::from(tau_k1.clone())
        + BigInt::from(tau_l1.clone())
        - BigInt::from(tau_k0.clone());
    if bound < BigInt::from(0) {
        return Err(ExactnessError::NegativeBound(bound));
    }
    Ok(bound)
}

/// Connected components of the critical set, by diffeomorphism type.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CriticalComponent {
    /// The full flag manifold of 3-space; total mod-2 Betti number 6.
    Flag,
    /// The rotation group; total mod-2 Betti number 4.
    So3,
}

impl CriticalComponent {
    pub fn total_betti(self) -> u64 {
        match self {
            CriticalComponent::Flag => 6,
            CriticalComponent::So3 => 4,
        }
    }
}

impl std::str::FromStr for CriticalComponent {
    type Err = ExactnessError;

    fn from_str(s: &str) -> Result<CriticalComponent, ExactnessError> {
        match s.to_ascii_lowercase().as_str() {
            "flag" => Ok(CriticalComponent::Flag),
            "so3" | "so(3)" => Ok(CriticalComponent::So3),
            other => Err(ExactnessError::UnknownLabel(other.to_string())),
        }
    }
}

/// Critical-point count of a Morse-Bott perturbation: the sum of the total
/// mod-2 Betti numbers of the components.
pub fn morse_bott_count(components: &[CriticalComponent]) -> u64 {
    components.iter().map(|c| c.total_betti()).sum()
}

/// The full dodecahedron workflow record.
#[derive(Clone, Debug)]
pub struct DodecahedronReport {
    /// Which edge of the shipped dodecahedron was excised (it is
    /// edge-transitive, so the choice does not matter).
    pub edge: String,
    pub rank_a_kappa: u64,
    pub counts: TutteCheck,
    /// `tau(K1) + tau(L1) - tau(K0)`; the Tutte relation forces this to be
    /// `tau(L0)`.
    pub tutte_combination: BigInt,
    pub tutte_residual: BigInt,
    pub upper_bound: BigInt,
    /// `2 rank(a∘kappa)`, the bound on the Euler characteristic.
    pub euler_bound: i64,
    pub lower_bound: u64,
    pub morse_bott_bound: u64,
    /// The three input webs are asserted, not verified, to be simple.
    pub assumed_simple: bool,
}

/// Run the dodecahedron workflow: excise an edge of the shipped
/// dodecahedron, count the four picture webs, and assemble the dimension
/// bounds.
pub fn dodecahedron_workflow(
    rank_a_kappa: u64,
    state_cap: usize,
) -> Result<DodecahedronReport, TaitError> {
    let web = Web::parse(corpus::DODECAHEDRON).expect("shipped corpus parses");
    let edge = "ring0";
    let counts = verify_tutte_capped(&web, edge, state_cap)?;
    let tutte_combination = BigInt::from(counts.k1.clone()) + BigInt::from(counts.l1.clone())
        - BigInt::from(counts.k0.clone());
    let tutte_residual = counts.residual();
    let upper_bound = BigInt::from(2 * rank_a_kappa) + &tutte_combination;
    Ok(DodecahedronReport {
        edge: edge.to_string(),
        rank_a_kappa,
        tutte_combination,
        tutte_residual,
        upper_bound,
        euler_bound: euler_from_ranks(rank_a_kappa, 0),
        lower_bound: DODECAHEDRON_LOWER_BOUND,
        morse_bott_bound: morse_bott_count(&[CriticalComponent::Flag; 10])
            + morse_bott_count(&[CriticalComponent::So3; 2]),
        assumed_simple: true,
        counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn triangle_solution_unique() {
        assert_eq!(solve_triangle((2, 3, 3)), Some((1, 2, 1)));
        assert_eq!(solve_triangle((0, 0, 0)), Some((0, 0, 0)));
        assert_eq!(solve_triangle((1, 0, 0)), None); // parity
        assert_eq!(solve_triangle((5, 1, 2)), None); // negativity
    }

    #[test]
    fn propagation_solves_a_triangle() {
        let mut sys = ConstraintSystem::new();
        sys.add_exact_triangle(("A", "B", "C"), ("f", "g", "h"));
        sys.set_value("A", 2).unwrap();
        sys.set_value("B", 3).unwrap();
        sys.set_value("C", 3).unwrap();
        match sys.propagate() {
            Feasibility::Feasible { open, .. } => assert_eq!(open, 0),
            other => panic!("expected feasible, got {other:?}"),
        }
        assert_eq!(sys.value("rank(f)"), Some(1));
        assert_eq!(sys.value("rank(g)"), Some(2));
        assert_eq!(sys.value("rank(h)"), Some(1));
    }

    #[test]
    fn propagation_detects_infeasibility() {
        let mut sys = ConstraintSystem::new();
        sys.add_exact_triangle(("A", "B", "C"), ("f", "g", "h"));
        sys.set_value("A", 1).unwrap();
        sys.set_value("B", 0).unwrap();
        sys.set_value("C", 0).unwrap();
        assert!(matches!(sys.propagate(), Feasibility::Infeasible { .. }));
    }

    #[test]
    fn two_rank_identity_orientation() {
        let mut sys = ConstraintSystem::new();
        // the (a, r, s) triangle: a: K0 -> K2, r: K2 -> L1, s: L1 -> K0
        sys.add_exact_triangle(("K0", "K2", "L1"), ("a", "r", "s"));
        let id = sys.derive_two_rank(0, "a").unwrap();
        assert_eq!(id.src, "K0");
        assert_eq!(id.third, "L1");
        assert_eq!(id.dst, "K2");
        let dims: HashMap<&str, i128> = [("K0", 48), ("L1", 60), ("K2", 48)].into();
        assert_eq!(id.rhs(|s| dims[s]), 48 - 60 + 48);

        let err = sys.derive_two_rank(0, "zeta").unwrap_err();
        assert!(matches!(err, ExactnessError::MapNotInTriangle { .. }));
    }

    #[test]
    fn two_rank_matches_solved_triangle() {
        let mut sys = ConstraintSystem::new();
        sys.add_exact_triangle(("A", "B", "C"), ("f", "g", "h"));
        sys.set_value("A", 2).unwrap();
        sys.set_value("B", 3).unwrap();
        sys.set_value("C", 3).unwrap();
        sys.propagate();
        let id = sys.derive_two_rank(0, "f").unwrap();
        let dims: HashMap<&str, i128> = [("A", 2), ("B", 3), ("C", 3)].into();
        assert_eq!(id.rhs(|s| dims[s]), 2 * sys.value("rank(f)").unwrap());
        // all-zero dimensions give the degenerate identity 0 = 0
        assert_eq!(id.rhs(|_| 0), 0);
    }

    #[test]
    fn euler_forms() {
        let b = BigInt::from;
        assert_eq!(euler_4periodic(&b(3), &b(9), &b(6), &b(0)), BigInt::zero());
        assert_eq!(euler_4periodic(&b(0), &b(0), &b(0), &b(0)), BigInt::zero());
        assert_eq!(euler_from_ranks(5, 0), 10);
        assert_eq!(euler_from_ranks(0, 0), 0);
        assert_eq!(euler_from_single_ranks(7, 3), 8);
        // the two-rank difference always lands on an even number
        for ra in 0..5u64 {
            for rb in 0..5u64 {
                assert_eq!(euler_from_single_ranks(ra, rb) % 2, 0);
            }
        }
    }

    #[test]
    fn bound_formula_and_negativity() {
        let n = BigUint::from(0u32);
        assert_eq!(dodecahedron_bound(&n, &n, &n, 0).unwrap(), BigInt::zero());
        let err = dodecahedron_bound(&BigUint::from(5u32), &n, &n, 0).unwrap_err();
        assert!(matches!(err, ExactnessError::NegativeBound(_)));
    }

    #[test]
    fn morse_bott_counts() {
        assert_eq!(morse_bott_count(&[]), 0);
        assert_eq!(morse_bott_count(&[CriticalComponent::So3]), 4);
        let mut comps = vec![CriticalComponent::Flag; 10];
        comps.extend([CriticalComponent::So3; 2]);
        assert_eq!(morse_bott_count(&comps), 68);
        assert!("banana".parse::<CriticalComponent>().is_err());
        assert_eq!("SO(3)".parse::<CriticalComponent>().unwrap(), CriticalComponent::So3);
    }

    #[test]
    fn euler_consistency_between_forms() {
        // two triangles sharing the K2 vertex: ranks of a and b tie the
        // 4-periodic Euler characteristic to the single-rank form
        for (k0, k1, l0, l1, k2) in
            [(2u64, 1, 2, 1, 1), (48, 48, 60, 60, 50), (6, 6, 6, 6, 8), (0, 0, 0, 0, 0)]
        {
            let Some((ra, _, _)) = solve_triangle((k0, k2, l1)) else { continue };
            let Some((rb, _, _)) = solve_triangle((k2, k1, l0)) else { continue };
            let lhs = euler_4periodic(
                &BigInt::from(k0),
                &BigInt::from(k1),
                &BigInt::from(l0),
                &BigInt::from(l1),
            );
            assert_eq!(lhs, BigInt::from(euler_from_single_ranks(ra, rb)));
        }
    }
}
