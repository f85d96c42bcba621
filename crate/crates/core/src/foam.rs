//! Invariant aggregates for closed foams in the 4-sphere, and the
//! moduli-space dimension formula.
//!
//! A closed foam enters every formula here only through three numbers: its
//! Euler characteristic, its framed self-intersection (computed face by
//! face, so it is a half-integer), and its count of tetrahedral points. A
//! [`Foam`] stores exactly that aggregate; no cell structure is kept.
//!
//! All arithmetic is exact rational.

use num_rational::Rational64;
use std::fmt;

/// Invariant aggregate of a closed foam in the 4-sphere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Foam {
    /// Provenance name, e.g. `Psi3`.
    pub tag: String,
    pub euler_char: i64,
    /// Framed self-intersection; denominator divides 2 for the standard
    /// family (each disk contributes -1/2).
    pub self_int: Rational64,
    pub tetra_points: u64,
}

/// An instanton action: an exact nonnegative rational, quantized in 1/32
/// units in all tables shipped here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Action(Rational64);

/// Errors from foam constructors and table lookups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FoamError {
    NegativeAction(Rational64),
    /// `min_action_table` covers n in 0..=3 only.
    TableRange(u64),
    ParseAction(String),
}

impl fmt::Display for FoamError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FoamError::NegativeAction(k) => write!(f, "action must be nonnegative, got {k}"),
            FoamError::TableRange(n) => {
                write!(f, "smallest-action table covers n = 0..=3, got {n}")
            }
            FoamError::ParseAction(s) => write!(f, "cannot parse action `{s}` (expected p or p/q)"),
        }
    }
}

impl std::error::Error for FoamError {}

impl Action {
    pub const ZERO: Action = Action(Rational64::new_raw(0, 1));

    pub fn new(kappa: Rational64) -> Result<Action, FoamError> {
        if kappa < Rational64::from_integer(0) {
            Err(FoamError::NegativeAction(kappa))
        } else {
            Ok(Action(kappa))
        }
    }

    pub fn from_ratio(num: i64, den: i64) -> Result<Action, FoamError> {
        Action::new(Rational64::new(num, den))
    }

    pub fn value(self) -> Rational64 {
        self.0
    }

    /// Parse `p` or `p/q`.
    pub fn parse(s: &str) -> Result<Action, FoamError> {
        let bad = || FoamError::ParseAction(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => {
                (n.trim().parse().map_err(|_| bad())?, d.trim().parse().map_err(|_| bad())?)
            }
            None => (s.trim().parse().map_err(|_| bad())?, 1i64),
        };
        if den == 0 {
            return Err(bad());
        }
        Action::new(Rational64::new(num, den))
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The smallest action that can occur at a bubble. Every action in the
/// smallest-action table below sits strictly under this quantum, which is
/// what rules out bubbling in the one-parameter gluing arguments.
pub const MIN_BUBBLE_ACTION: Rational64 = Rational64::new_raw(1, 8);

/// The standard foam built from a projective plane and `n` disks: Euler
/// characteristic `1 + n`, self-intersection `2 - n/2` (the plane
/// contributes `+2` and each disk `-1/2`), and `n(n-1)/2` tetrahedral points
/// where disk boundaries cross.
///
/// For large `n` the description does not pin down the topology uniquely,
/// but the aggregate stored here is determined by `n` alone.
pub fn make_psi(n: u64) -> Foam {
    Foam {
        tag: format!("Psi{n}"),
        euler_char: 1 + n as i64,
        self_int: Rational64::from_integer(2) - Rational64::new(n as i64, 2),
        tetra_points: n * n.saturating_sub(1) / 2,
    }
}

/// The mirror of `Psi2`: self-intersection -1, Euler number 2, one
/// tetrahedral point. Not the same aggregate as `Psi2` (whose Euler number
/// is 3), so it gets its own constructor.
pub fn make_psi2_minus() -> Foam {
    Foam {
        tag: "Psi2minus".to_string(),
        euler_char: 2,
        self_int: Rational64::from_integer(-1),
        tetra_points: 1,
    }
}

/// Formal dimension of the moduli space of anti-self-dual connections of
/// action `kappa` on the 4-sphere with the given foam:
/// `8*kappa + chi + (self-intersection - tetra)/2 - 3`.
///
/// The half weight on the tetrahedral-point count is forced by the standard
/// family: it is the unique linear weight under which the formula reproduces
/// the closed form `8*kappa - (1 - n/2)^2` on every `Psi_n`.
///
/// Exact; the result may be negative or a non-integer rational, and is
/// returned as-is. Only valid for foams in the 4-sphere.
pub fn moduli_dim(foam: &Foam, kappa: Action) -> Rational64 {
    Rational64::from_integer(8) * kappa.value()
        + Rational64::from_integer(foam.euler_char)
        + (foam.self_int - Rational64::from_integer(foam.tetra_points as i64))
            / Rational64::from_integer(2)
        - Rational64::from_integer(3)
}

/// One row of the smallest-action table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinActionEntry {
    pub n: u64,
    pub action: Action,
    pub holonomy: &'static str,
    pub automorphisms: &'static str,
    pub formal_dim: Rational64,
}

/// The smallest-action non-empty moduli spaces on the standard foams, for
/// `n` in `0..=3`. Pure lookup of recorded constants: flat solutions with
/// `kappa = 0` for even `n`, and `kappa = 1/32` unobstructed solutions for
/// odd `n`.
pub fn min_action_table(n: u64) -> Result<MinActionEntry, FoamError> {
    let entry = match n {
        0 => MinActionEntry {
            n,
            action: Action::ZERO,
            holonomy: "order-2",
            automorphisms: "O(2)",
            formal_dim: Rational64::from_integer(-1),
        },
        1 => MinActionEntry {
            n,
            action: Action(Rational64::new_raw(1, 32)),
            holonomy: "O(2)",
            automorphisms: "unobstructed",
            formal_dim: Rational64::from_integer(0),
        },
        2 => MinActionEntry {
            n,
            action: Action::ZERO,
            holonomy: "Klein V₄",
            automorphisms: "V₄",
            formal_dim: Rational64::from_integer(0),
        },
        3 => MinActionEntry {
            n,
            action: Action(Rational64::new_raw(1, 32)),
            holonomy: "O(2)",
            automorphisms: "unobstructed",
            formal_dim: Rational64::from_integer(0),
        },
        other => return Err(FoamError::TableRange(other)),
    };
    Ok(entry)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn psi_family_aggregates() {
        let p0 = make_psi(0);
        assert_eq!((p0.euler_char, p0.self_int, p0.tetra_points), (1, rat(2, 1), 0));
        let p2 = make_psi(2);
        assert_eq!((p2.euler_char, p2.self_int, p2.tetra_points), (3, rat(1, 1), 1));
        let p3 = make_psi(3);
        assert_eq!((p3.euler_char, p3.self_int, p3.tetra_points), (4, rat(1, 2), 3));
    }

    #[test]
    fn psi2_minus_is_not_psi2() {
        let m = make_psi2_minus();
        assert_eq!((m.euler_char, m.self_int, m.tetra_points), (2, rat(-1, 1), 1));
        assert_eq!(make_psi(2).euler_char, 3);
        assert_ne!(m.euler_char, make_psi(2).euler_char);
    }

    #[test]
    fn dimension_formula_reproduces_the_table() {
        assert_eq!(moduli_dim(&make_psi(0), Action::ZERO), rat(-1, 1));
        assert_eq!(moduli_dim(&make_psi(2), Action::ZERO), rat(0, 1));
        assert_eq!(moduli_dim(&make_psi(1), Action::from_ratio(1, 32).unwrap()), rat(0, 1));
        assert_eq!(moduli_dim(&make_psi(3), Action::from_ratio(1, 32).unwrap()), rat(0, 1));
    }

    #[test]
    fn closed_form_in_kappa_for_small_n() {
        // 8k - (1 - n/2)^2, checked across a sweep of actions
        for n in 0..=8u64 {
            let offset = {
                let half = rat(1, 1) - rat(n as i64, 2);
                half * half
            };
            for (num, den) in [(0, 1), (1, 32), (1, 8), (3, 32), (1, 2), (7, 4)] {
                let kappa = Action::from_ratio(num, den).unwrap();
                assert_eq!(
                    moduli_dim(&make_psi(n), kappa),
                    rat(8, 1) * kappa.value() - offset,
                    "n = {n}, kappa = {kappa}"
                );
            }
        }
    }

    #[test]
    fn psi2_minus_dimension_at_zero_action() {
        // direct substitution into the formula; the aggregate alone does not
        // see the obstruction bundle, so this is the raw index value
        let d = moduli_dim(&make_psi2_minus(), Action::ZERO);
        assert_eq!(d, rat(-2, 1));
    }

    #[test]
    fn dimension_can_be_a_strict_rational() {
        let d = moduli_dim(&make_psi(1), Action::ZERO);
        assert_eq!(d, rat(-1, 4));
        assert!(!d.is_integer());
    }

    #[test]
    fn min_action_table_entries() {
        let e0 = min_action_table(0).unwrap();
        assert_eq!(e0.action, Action::ZERO);
        assert_eq!(e0.formal_dim, rat(-1, 1));
        let e2 = min_action_table(2).unwrap();
        assert_eq!(e2.automorphisms, "V₄");
        assert_eq!(e2.formal_dim, rat(0, 1));
        let e3 = min_action_table(3).unwrap();
        assert_eq!(e3.action, Action::from_ratio(1, 32).unwrap());
        assert_eq!(e3.formal_dim, rat(0, 1));
        assert_eq!(min_action_table(4), Err(FoamError::TableRange(4)));
    }

    #[test]
    fn table_is_consistent_with_the_dimension_formula() {
        for n in 0..=3 {
            let e = min_action_table(n).unwrap();
            assert_eq!(moduli_dim(&make_psi(n), e.action), e.formal_dim, "n = {n}");
        }
    }

    #[test]
    fn table_actions_sit_below_the_bubble_quantum() {
        for n in [1, 3] {
            let e = min_action_table(n).unwrap();
            assert!(e.action.value() < MIN_BUBBLE_ACTION);
        }
        assert_eq!(MIN_BUBBLE_ACTION, rat(1, 8));
    }

    #[test]
    fn action_parsing_and_validation() {
        assert_eq!(Action::parse("1/32").unwrap(), Action::from_ratio(1, 32).unwrap());
        assert_eq!(Action::parse("2").unwrap(), Action::from_ratio(2, 1).unwrap());
        assert!(Action::parse("-1/4").is_err());
        assert!(Action::parse("1/0").is_err());
        assert!(Action::parse("x").is_err());
    }
}
