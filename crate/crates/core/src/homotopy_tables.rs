//! Partial tables of homotopy groups of odd-primary Moore spaces and a few
//! small spheres, plus the smash-product splitting of Moore spaces.
//!
//! Lookups outside the tabulated ranges answer [`PiValue::Unknown`].

use std::fmt;

use thiserror::Error;

use crate::abelian::{FgAbGroup, PrimePower};
use crate::space_expr::{Atom, AtomKind, SpaceError, SpaceExpr};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("Moore order {0} is even; only odd-primary Moore spaces are tabulated")]
    EvenOrder(u64),
    #[error("prime {0} is excluded here; p >= 5 is required")]
    SmallPrime(u64),
    #[error("homotopy degree must be at least 1")]
    ZeroDegree,
    #[error(transparent)]
    Space(#[from] SpaceError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PiValue {
    Group(FgAbGroup),
    Unknown,
}

impl PiValue {
    pub fn group(&self) -> Option<&FgAbGroup> {
        match self {
            PiValue::Group(g) => Some(g),
            PiValue::Unknown => None,
        }
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, PiValue::Unknown)
    }
}

impl fmt::Display for PiValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PiValue::Group(g) => write!(f, "{g}"),
            PiValue::Unknown => write!(f, "UNKNOWN"),
        }
    }
}

/// A request for `π_k` of an atom.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PiQuery {
    pub space: Atom,
    pub k: u32,
}

impl PiQuery {
    pub fn new(space: Atom, k: u32) -> Result<Self, TableError> {
        if k == 0 {
            return Err(TableError::ZeroDegree);
        }
        Ok(PiQuery { space, k })
    }

    /// Dispatches to the Moore tables for `P^n(q)` and the sphere table otherwise.
    pub fn evaluate(&self) -> Result<PiValue, TableError> {
        match *self.space.kind() {
            AtomKind::Moore { n, q } => pi_moore(n + self.space.susp(), q, self.k),
            _ => Ok(pi_small(&self.space, self.k)),
        }
    }
}

fn odd(q: PrimePower) -> Result<PrimePower, TableError> {
    if q.is_odd() {
        Ok(q)
    } else {
        Err(TableError::EvenOrder(q.order_u64().unwrap_or(0)))
    }
}

/// `π_k(P^n(q))` for odd `q = p^r`.
pub fn pi_moore(n: u32, q: PrimePower, k: u32) -> Result<PiValue, TableError> {
    let q = odd(q)?;
    if k == 0 {
        return Err(TableError::ZeroDegree);
    }
    let big_p = q.prime() >= 5;
    let cyclic = (n == 3 && k == 3) || (big_p && n == 5 && k == 7);
    let vanishes = (n >= 4 && k == n) || (n >= 3 && k == n + 1) || (big_p && n >= 6 && k == n + 2);
    let value = if cyclic {
        Some(FgAbGroup::new(0, vec![q]))
    } else if vanishes {
        Some(FgAbGroup::zero())
    } else {
        None
    };
    Ok(value.map_or(PiValue::Unknown, PiValue::Group))
}

/// Description of a homomorphism between homotopy groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomDescriptor {
    pub source: PiValue,
    pub target: PiValue,
    pub is_zero: bool,
}

/// The suspension `E: π_6(P^4(q)) → π_7(P^5(q))`, which is zero for `p >= 5`.
pub fn suspension_on_pi6_p4(q: PrimePower) -> Result<HomDescriptor, TableError> {
    if q.prime() < 5 {
        return Err(TableError::SmallPrime(q.prime()));
    }
    Ok(HomDescriptor {
        source: pi_moore(4, q, 6)?,
        target: pi_moore(5, q, 7)?,
        is_zero: true,
    })
}

/// `P^m(q) ∧ P^n(q) ≃ P^{m+n}(q) v P^{m+n-1}(q)` for odd `q`.
pub fn smash_moore(m: u32, n: u32, q: PrimePower) -> Result<SpaceExpr, TableError> {
    let q = odd(q)?;
    Ok(SpaceExpr::wedge([
        Atom::moore_pp(q, m + n)?,
        Atom::moore_pp(q, m + n - 1)?,
    ]))
}

/// The handful of sphere and `ΣCP^2` groups used to split the top cell.
pub fn pi_small(space: &Atom, k: u32) -> PiValue {
    let (kind, susp) = match *space.kind() {
        AtomKind::Sphere { n } => (
            AtomKind::Sphere {
                n: n + space.susp(),
            },
            0,
        ),
        other => (other, space.susp()),
    };
    let g = match (&kind, susp, k) {
        (AtomKind::Sphere { n: 3 }, 0, 6) => FgAbGroup::cyclic(12),
        (AtomKind::Sphere { n: 5 }, 0, 6) => FgAbGroup::cyclic(2),
        (AtomKind::CP2, 1, 6) => FgAbGroup::cyclic(6),
        _ => return PiValue::Unknown,
    };
    PiValue::Group(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(q: u64) -> PrimePower {
        PrimePower::from_order(q).unwrap()
    }

    #[test]
    fn moore_table_examples() {
        assert_eq!(
            pi_moore(3, pp(25), 3).unwrap(),
            PiValue::Group(FgAbGroup::cyclic(25))
        );
        assert_eq!(
            pi_moore(7, pp(5), 7).unwrap(),
            PiValue::Group(FgAbGroup::zero())
        );
        assert_eq!(
            pi_moore(5, pp(7), 7).unwrap(),
            PiValue::Group(FgAbGroup::cyclic(7))
        );
        assert_eq!(pi_moore(4, pp(3), 6).unwrap(), PiValue::Unknown);
        assert_eq!(
            pi_moore(4, pp(5), 5).unwrap(),
            PiValue::Group(FgAbGroup::zero())
        );
        assert_eq!(pi_moore(5, pp(3), 7).unwrap(), PiValue::Unknown);
        assert_eq!(pi_moore(6, pp(9), 8).unwrap(), PiValue::Unknown);
        assert_eq!(pi_moore(4, pp(8), 4), Err(TableError::EvenOrder(8)));
    }

    #[test]
    fn suspension_is_zero_for_large_primes() {
        let h = suspension_on_pi6_p4(pp(5)).unwrap();
        assert!(h.is_zero);
        assert_eq!(h.target, PiValue::Group(FgAbGroup::cyclic(5)));
        let h = suspension_on_pi6_p4(pp(49)).unwrap();
        assert_eq!(h.target, PiValue::Group(FgAbGroup::cyclic(49)));
        assert!(h.source.is_unknown());
        assert_eq!(suspension_on_pi6_p4(pp(9)), Err(TableError::SmallPrime(3)));
        assert_eq!(suspension_on_pi6_p4(pp(4)), Err(TableError::SmallPrime(2)));
    }

    #[test]
    fn smash_examples() {
        assert_eq!(
            smash_moore(4, 3, pp(5)).unwrap().to_string(),
            "P^6(5) v P^7(5)"
        );
        assert_eq!(
            smash_moore(5, 4, pp(7)).unwrap().to_string(),
            "P^8(7) v P^9(7)"
        );
        assert_eq!(
            smash_moore(3, 3, pp(25)).unwrap().to_string(),
            "P^5(25) v P^6(25)"
        );
        assert_eq!(smash_moore(3, 3, pp(2)), Err(TableError::EvenOrder(2)));
    }

    #[test]
    fn small_table() {
        let s3 = Atom::sphere(3).unwrap();
        assert_eq!(pi_small(&s3, 6), PiValue::Group(FgAbGroup::cyclic(12)));
        assert_eq!(
            pi_small(&Atom::cp2().suspended(1), 6),
            PiValue::Group(FgAbGroup::cyclic(6))
        );
        assert_eq!(
            pi_small(&Atom::sphere(5).unwrap(), 6),
            PiValue::Group(FgAbGroup::cyclic(2))
        );
        assert_eq!(pi_small(&Atom::sphere(5).unwrap(), 7), PiValue::Unknown);
        assert_eq!(pi_small(&Atom::cp2(), 6), PiValue::Unknown);
    }

    #[test]
    fn query_dispatch() {
        let q = PiQuery::new(Atom::moore(7, 5).unwrap(), 7).unwrap();
        assert_eq!(q.evaluate().unwrap().to_string(), "Z/7");
        assert_eq!(PiQuery::new(Atom::cp2(), 0), Err(TableError::ZeroDegree));
    }
}
