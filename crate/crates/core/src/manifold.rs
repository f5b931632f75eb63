//! Invariants of a simply connected closed orientable 6-manifold.
//!
//! The homology of such a manifold is
//!
//! ```text
//! H_0 = Z,  H_2 = Z^d + T,  H_3 = Z^{2m} + T,  H_4 = Z^d,  H_6 = Z
//! ```
//!
//! with `T` finite. The record also carries the rank `c` of
//! `Sq^2: H^2(M;Z/2) -> H^4(M;Z/2)` and, when `d = 1`, the cup-square
//! coefficient `k` of `x^2 = k y`, the spin condition and the η³ invariant `λ`.
//!
//! # Manifest format
//!
//! A flat JSON object. Unknown keys are rejected.
//!
//! | key          | type                    | notes                                   |
//! |--------------|-------------------------|-----------------------------------------|
//! | `name`       | string, optional        | label only                              |
//! | `d`          | integer ≥ 0             | rank of `H^2`                           |
//! | `m`          | integer ≥ 0             | half the third Betti number             |
//! | `torsion`    | list of `[p, r]`        | `T = ⊕ Z/p^r`; defaults to `[]`         |
//! | `c`          | integer, optional       | rank of `Sq^2`                          |
//! | `sq2_matrix` | list of rows of 0/1     | `d×d` matrix of `Sq^2`; wins over `c`   |
//! | `k`          | integer, optional       | `d = 1` only                            |
//! | `spin`       | bool, optional          | `d = 1` only; forced `true` for odd `k` |
//! | `lambda`     | 0 or 1, optional        | `d = 1`, `k` even and spin              |
//!
//! When neither `c` nor `sq2_matrix` is given, `c` is 0 for `d = 0` and
//! `k mod 2` for `d = 1`; other `d` need one of the two.

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::{rank_mod_p, AbelianError, FgAbGroup};
use crate::space_expr::GradedGroups;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub d: u32,
    pub m: u32,
    #[serde(default)]
    pub torsion: Vec<(u64, u32)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sq2_matrix: Option<Vec<Vec<u8>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spin: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<u8>,
}

#[derive(Debug, Error)]
pub enum ManifestError {
    #[error("cannot read manifest: {0}")]
    Io(#[from] std::io::Error),
    #[error("manifest schema error: {0}")]
    Schema(#[from] serde_json::Error),
}

impl Manifest {
    pub fn from_json(text: &str) -> Result<Manifest, ManifestError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Manifest, ManifestError> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("manifest serializes")
    }

    /// A general record with `Sq^2` rank `c`.
    pub fn general(d: u32, m: u32, torsion: &[(u64, u32)], c: u32) -> Manifest {
        Manifest {
            d,
            m,
            torsion: torsion.to_vec(),
            c: Some(c),
            ..Default::default()
        }
    }

    /// A `d = 1` record.
    pub fn rank_one(
        m: u32,
        torsion: &[(u64, u32)],
        k: i64,
        spin: bool,
        lambda: Option<u8>,
    ) -> Manifest {
        Manifest {
            d: 1,
            m,
            torsion: torsion.to_vec(),
            k: Some(k),
            spin: Some(spin),
            lambda,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<ManifoldInvariants, ValidationError> {
        validate(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("Torsion23: torsion group contains Z/{0}^r; 2- and 3-torsion are outside the supported range")]
    Torsion23(u64),
    #[error("InvalidTorsion: {0}")]
    InvalidTorsion(#[from] AbelianError),
    #[error("SpinContradiction: k = {0} is odd, which forces the manifold to be spin")]
    SpinContradiction(i64),
    #[error("RankOutOfRange: c = {c} exceeds d = {d}")]
    RankOutOfRange { c: u32, d: u32 },
    #[error("ParityMismatch: c = {c} but k = {k}; Sq^2 on H^2 is the mod 2 cup square")]
    ParityMismatch { c: u32, k: i64 },
    #[error("MissingLambda: k is even and the manifold is spin, so lambda (0 or 1) is required")]
    MissingLambda,
    #[error("InvalidLambda: lambda must be 0 or 1, got {0}")]
    InvalidLambda(u8),
    #[error("MissingSq2: d = {0} needs either c or sq2_matrix")]
    MissingSq2(u32),
    #[error("Sq2Shape: sq2_matrix must be a {d}x{d} matrix of 0/1 entries")]
    Sq2Shape { d: u32 },
    #[error("Sq2Mismatch: sq2_matrix has rank {matrix} but c = {given}")]
    Sq2Mismatch { matrix: u32, given: u32 },
    #[error("UnexpectedRankOneData: k, spin and lambda only apply when d = 1 (d = {0})")]
    UnexpectedRankOneData(u32),
    #[error("MissingK: spin or lambda given without k")]
    MissingK,
    #[error("MissingSpin: k = {0} is even, so spin must be stated")]
    MissingSpin(i64),
}

/// Extra data available when `H^2(M) = Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RankOneData {
    pub k: i64,
    pub spin: bool,
    /// Only present when `k` is even and the manifold is spin.
    pub lambda: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifoldInvariants {
    d: u32,
    m: u32,
    torsion: FgAbGroup,
    c: u32,
    sq2: Option<Vec<Vec<u8>>>,
    rank_one: Option<RankOneData>,
}

impl ManifoldInvariants {
    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn torsion(&self) -> &FgAbGroup {
        &self.torsion
    }

    pub fn c(&self) -> u32 {
        self.c
    }

    pub fn sq2_matrix(&self) -> Option<&[Vec<u8>]> {
        self.sq2.as_deref()
    }

    pub fn rank_one(&self) -> Option<&RankOneData> {
        self.rank_one.as_ref()
    }

    /// Same record with `m` replaced.
    pub fn with_m(&self, m: u32) -> ManifoldInvariants {
        ManifoldInvariants { m, ..self.clone() }
    }

    /// Same record with the `d = 1` data dropped, so only the general splitting applies.
    pub fn without_rank_one(&self) -> ManifoldInvariants {
        ManifoldInvariants {
            rank_one: None,
            ..self.clone()
        }
    }

    pub fn homology(&self) -> GradedGroups {
        homology_of(self)
    }

    /// Back to a manifest that validates to this record.
    pub fn to_manifest(&self) -> Manifest {
        Manifest {
            name: None,
            d: self.d,
            m: self.m,
            torsion: self
                .torsion
                .torsion()
                .iter()
                .map(|t| (t.prime(), t.exponent()))
                .collect(),
            c: Some(self.c),
            sq2_matrix: self.sq2.clone(),
            k: self.rank_one.map(|r| r.k),
            spin: self.rank_one.map(|r| r.spin),
            lambda: self.rank_one.and_then(|r| r.lambda).map(u8::from),
        }
    }
}

pub fn validate(raw: &Manifest) -> Result<ManifoldInvariants, ValidationError> {
    let torsion = FgAbGroup::from_pairs(0, &raw.torsion)?;
    if let Some(t) = torsion
        .torsion()
        .iter()
        .find(|t| t.prime() == 2 || t.prime() == 3)
    {
        return Err(ValidationError::Torsion23(t.prime()));
    }

    let has_rank_one_keys = raw.k.is_some() || raw.spin.is_some() || raw.lambda.is_some();
    if has_rank_one_keys && raw.d != 1 {
        return Err(ValidationError::UnexpectedRankOneData(raw.d));
    }
    if raw.k.is_none() && (raw.spin.is_some() || raw.lambda.is_some()) {
        return Err(ValidationError::MissingK);
    }

    let matrix_rank = match &raw.sq2_matrix {
        Some(rows) => {
            let d = raw.d as usize;
            let square = rows.len() == d && rows.iter().all(|r| r.len() == d);
            if !square || rows.iter().flatten().any(|&x| x > 1) {
                return Err(ValidationError::Sq2Shape { d: raw.d });
            }
            let rows64: Vec<Vec<u64>> = rows
                .iter()
                .map(|r| r.iter().map(|&x| u64::from(x)).collect())
                .collect();
            Some(rank_mod_p(&rows64, 2) as u32)
        }
        None => None,
    };

    let c = match (matrix_rank, raw.c) {
        (Some(r), Some(given)) if r != given => {
            return Err(ValidationError::Sq2Mismatch { matrix: r, given })
        }
        (Some(r), _) => r,
        (None, Some(given)) => given,
        (None, None) => match (raw.d, raw.k) {
            (0, _) => 0,
            (1, Some(k)) => k.rem_euclid(2) as u32,
            (d, _) => return Err(ValidationError::MissingSq2(d)),
        },
    };
    if c > raw.d {
        return Err(ValidationError::RankOutOfRange { c, d: raw.d });
    }

    let rank_one = match raw.k {
        None => None,
        Some(k) => {
            let odd = k.rem_euclid(2) == 1;
            let spin = match raw.spin {
                Some(false) if odd => return Err(ValidationError::SpinContradiction(k)),
                Some(s) => s,
                None if odd => true,
                None => return Err(ValidationError::MissingSpin(k)),
            };
            if c as i64 != k.rem_euclid(2) {
                return Err(ValidationError::ParityMismatch { c, k });
            }
            let lambda = match raw.lambda {
                Some(l) if l > 1 => return Err(ValidationError::InvalidLambda(l)),
                Some(l) if !odd && spin => Some(l == 1),
                None if !odd && spin => return Err(ValidationError::MissingLambda),
                _ => None,
            };
            Some(RankOneData { k, spin, lambda })
        }
    };

    Ok(ManifoldInvariants {
        d: raw.d,
        m: raw.m,
        torsion,
        c,
        sq2: raw.sq2_matrix.clone(),
        rank_one,
    })
}

/// Integral homology, degree 0 included.
pub fn homology_of(m: &ManifoldInvariants) -> GradedGroups {
    let z = FgAbGroup::free(1);
    let mut h = GradedGroups::new();
    h.add(0, &z);
    h.add(2, &FgAbGroup::free(m.d as usize).direct_sum(&m.torsion));
    h.add(3, &FgAbGroup::free(2 * m.m as usize).direct_sum(&m.torsion));
    h.add(4, &FgAbGroup::free(m.d as usize));
    h.add(6, &z);
    h
}

/// Splits off the `S^3 × S^3` summands: `M ≅ M_1 # m(S^3 × S^3)`.
pub fn wall_split(m: &ManifoldInvariants) -> (ManifoldInvariants, u32) {
    (m.with_m(0), m.m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validate_examples() {
        let m = Manifest::rank_one(0, &[], 1, true, None)
            .validate()
            .unwrap();
        assert_eq!(m.c(), 1);

        let raw = Manifest {
            d: 2,
            m: 1,
            torsion: vec![(5, 1)],
            sq2_matrix: Some(vec![vec![1, 0], vec![0, 1]]),
            ..Default::default()
        };
        assert_eq!(raw.validate().unwrap().c(), 2);

        let raw = Manifest {
            d: 0,
            m: 0,
            torsion: vec![(2, 1)],
            ..Default::default()
        };
        assert_eq!(raw.validate(), Err(ValidationError::Torsion23(2)));
    }

    #[test]
    fn validation_errors() {
        assert_eq!(
            Manifest::rank_one(0, &[], 3, false, None).validate(),
            Err(ValidationError::SpinContradiction(3))
        );
        assert_eq!(
            Manifest::general(2, 0, &[], 3).validate(),
            Err(ValidationError::RankOutOfRange { c: 3, d: 2 })
        );
        let raw = Manifest {
            c: Some(0),
            ..Manifest::rank_one(0, &[], 1, true, None)
        };
        assert_eq!(
            raw.validate(),
            Err(ValidationError::ParityMismatch { c: 0, k: 1 })
        );
        assert_eq!(
            Manifest::rank_one(0, &[], 2, true, None).validate(),
            Err(ValidationError::MissingLambda)
        );
        assert_eq!(
            Manifest::general(0, 0, &[(9, 1)], 0).validate(),
            Err(ValidationError::InvalidTorsion(AbelianError::NotPrime(9)))
        );
        assert_eq!(
            Manifest::general(0, 0, &[(3, 2)], 0).validate(),
            Err(ValidationError::Torsion23(3))
        );
        let raw = Manifest {
            d: 3,
            m: 0,
            ..Default::default()
        };
        assert_eq!(raw.validate(), Err(ValidationError::MissingSq2(3)));
        let raw = Manifest {
            sq2_matrix: Some(vec![vec![1, 1]]),
            ..Manifest::general(2, 0, &[], 1)
        };
        assert_eq!(raw.validate(), Err(ValidationError::Sq2Shape { d: 2 }));
        let raw = Manifest {
            sq2_matrix: Some(vec![vec![1, 1], vec![1, 1]]),
            ..Manifest::general(2, 0, &[], 2)
        };
        assert_eq!(
            raw.validate(),
            Err(ValidationError::Sq2Mismatch {
                matrix: 1,
                given: 2
            })
        );
        let raw = Manifest {
            k: Some(1),
            ..Manifest::general(2, 0, &[], 1)
        };
        assert_eq!(
            raw.validate(),
            Err(ValidationError::UnexpectedRankOneData(2))
        );
        let raw = Manifest {
            spin: Some(true),
            ..Manifest::general(1, 0, &[], 1)
        };
        assert_eq!(raw.validate(), Err(ValidationError::MissingK));
        let raw = Manifest {
            d: 1,
            m: 0,
            k: Some(4),
            ..Default::default()
        };
        assert_eq!(raw.validate(), Err(ValidationError::MissingSpin(4)));
        assert_eq!(
            Manifest::rank_one(0, &[], 0, true, Some(2)).validate(),
            Err(ValidationError::InvalidLambda(2))
        );
    }

    #[test]
    fn lambda_is_kept_only_where_it_matters() {
        let m = Manifest::rank_one(0, &[], 2, false, Some(1))
            .validate()
            .unwrap();
        assert_eq!(m.rank_one().unwrap().lambda, None);
        let m = Manifest::rank_one(0, &[], 5, true, Some(1))
            .validate()
            .unwrap();
        assert_eq!(m.rank_one().unwrap().lambda, None);
        let m = Manifest::rank_one(0, &[], -4, true, Some(1))
            .validate()
            .unwrap();
        assert_eq!(m.rank_one().unwrap().lambda, Some(true));
        assert_eq!(m.c(), 0);
    }

    #[test]
    fn homology_examples() {
        let m = Manifest::rank_one(0, &[], 1, true, None)
            .validate()
            .unwrap();
        let h = homology_of(&m);
        for deg in [0, 2, 4, 6] {
            assert_eq!(h.get(deg), FgAbGroup::free(1));
        }
        assert_eq!(h.degrees().count(), 4);

        let m = Manifest::general(0, 2, &[(5, 1)], 0).validate().unwrap();
        let h = homology_of(&m);
        assert_eq!(h.get(2), FgAbGroup::cyclic(5));
        assert_eq!(h.get(3), FgAbGroup::from_pairs(4, &[(5, 1)]).unwrap());
        assert_eq!(h.get(4), FgAbGroup::zero());

        let m = Manifest::general(3, 0, &[], 1).validate().unwrap();
        let h = homology_of(&m);
        assert_eq!(h.get(2), FgAbGroup::free(3));
        assert_eq!(h.get(4), FgAbGroup::free(3));
    }

    #[test]
    fn wall_split_examples() {
        let m = Manifest::general(2, 3, &[], 1).validate().unwrap();
        let (m1, k) = wall_split(&m);
        assert_eq!((m1.m(), k), (0, 3));
        assert_eq!(m1.d(), 2);

        let m = Manifest::general(2, 0, &[], 1).validate().unwrap();
        assert_eq!(wall_split(&m), (m.clone(), 0));

        let m = Manifest::rank_one(5, &[(7, 1)], 3, true, None)
            .validate()
            .unwrap();
        let (m1, k) = wall_split(&m);
        assert_eq!(k, 5);
        assert_eq!(
            m1,
            Manifest::rank_one(0, &[(7, 1)], 3, true, None)
                .validate()
                .unwrap()
        );
    }

    #[test]
    fn manifest_json() {
        let m = Manifest::from_json(r#"{"d": 1, "m": 0, "k": 3, "spin": true}"#).unwrap();
        assert_eq!(m.validate().unwrap().c(), 1);
        assert!(Manifest::from_json(r#"{"d": 1, "m": 0, "colour": 3}"#).is_err());
        assert!(Manifest::from_json(r#"{"d": -1, "m": 0}"#).is_err());
        assert!(Manifest::from_json(r#"{"m": 0}"#).is_err());
        let round = Manifest::from_json(&m.to_json()).unwrap();
        assert_eq!(round, m);
    }

    #[test]
    fn to_manifest_round_trips() {
        let m = Manifest::rank_one(2, &[(5, 2), (7, 1)], 0, true, Some(1))
            .validate()
            .unwrap();
        assert_eq!(m.to_manifest().validate().unwrap(), m);
    }
}
