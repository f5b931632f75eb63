//! Suspension splittings of 6-manifolds.
//!
//! After one suspension the `S^3 × S^3` summands split off as spheres. After
//! two, the torsion splits off as Moore spaces and the remaining Poincaré
//! complex `V` (cells `S^2`'s, `e^4`'s and one `e^6`) decomposes according to
//! the rank `c` of `Sq^2`, or, when `H^2 = Z`, according to `k`, the spin
//! condition and `λ`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::abelian::FgAbGroup;
use crate::manifold::{wall_split, ManifoldInvariants, RankOneData};
use crate::space_expr::{moore_split, Atom, SpaceExpr};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error("UnknownStage: `{0}` (expected one of M3, M5, SigmaM5, Sigma2V)")]
    UnknownStage(String),
    #[error("ScopeError: rigidity comparison needs d = 1 with k/spin data, got d = {0}")]
    Scope(u32),
}

/// A space the engine names but does not resolve at this stage.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Opaque {
    pub label: &'static str,
    pub susp: u32,
}

impl fmt::Display for Opaque {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.susp {
            0 => write!(f, "{}", self.label),
            1 => write!(f, "Sig {}", self.label),
            j => write!(f, "Sig^{j} {}", self.label),
        }
    }
}

/// A wedge of opaque tokens and an explicit remainder.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PartialExpr {
    pub opaque: Vec<Opaque>,
    pub known: SpaceExpr,
}

impl PartialExpr {
    pub fn known(e: SpaceExpr) -> Self {
        PartialExpr {
            opaque: Vec::new(),
            known: e,
        }
    }

    pub fn is_explicit(&self) -> bool {
        self.opaque.is_empty()
    }

    /// The explicit expression, if nothing opaque remains.
    pub fn explicit(&self) -> Option<&SpaceExpr> {
        self.is_explicit().then_some(&self.known)
    }
}

impl fmt::Display for PartialExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.opaque.iter().map(Opaque::to_string).collect();
        if !self.known.is_point() || parts.is_empty() {
            parts.push(self.known.to_string());
        }
        write!(f, "{}", parts.join(" v "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stage {
    M3,
    M5,
    SigmaM5,
    Sigma2V,
}

impl FromStr for Stage {
    type Err = DecomposeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "M3" => Ok(Stage::M3),
            "M5" => Ok(Stage::M5),
            "SigmaM5" => Ok(Stage::SigmaM5),
            "Sigma2V" => Ok(Stage::Sigma2V),
            other => Err(DecomposeError::UnknownStage(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStage {
    pub name: String,
    pub expr: PartialExpr,
    pub citation: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DerivationTrace {
    pub stages: Vec<TraceStage>,
    pub notes: Vec<String>,
}

impl DerivationTrace {
    fn push(&mut self, name: &str, expr: PartialExpr, citation: &str) {
        self.stages.push(TraceStage {
            name: name.to_string(),
            expr,
            citation: citation.to_string(),
        });
    }

    pub fn last(&self) -> Option<&TraceStage> {
        self.stages.last()
    }
}

impl fmt::Display for DerivationTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.stages.iter().enumerate() {
            writeln!(
                f,
                "{:>2}. {:<10} {}  [{}]",
                i + 1,
                s.name,
                s.expr,
                s.citation
            )?;
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        Ok(())
    }
}

/// Case split of the `d = 1` splitting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Branch {
    /// `k` odd, `k ≡ ±1 mod 6`
    CP3,
    /// `k ≡ 3 mod 6`
    V3,
    NonSpinEven,
    SpinEvenLambda0,
    SpinEvenLambda1,
}

impl Branch {
    pub fn of(data: &RankOneData) -> Branch {
        let k = data.k;
        if k.rem_euclid(2) == 1 {
            if k.rem_euclid(6) == 3 {
                Branch::V3
            } else {
                Branch::CP3
            }
        } else if !data.spin {
            Branch::NonSpinEven
        } else if data.lambda == Some(true) {
            Branch::SpinEvenLambda1
        } else {
            Branch::SpinEvenLambda0
        }
    }

    pub const ALL: [Branch; 5] = [
        Branch::CP3,
        Branch::V3,
        Branch::NonSpinEven,
        Branch::SpinEvenLambda0,
        Branch::SpinEvenLambda1,
    ];
}

/// Which splitting to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Path {
    /// The sharper rank-one splitting whenever `k` data is present.
    #[default]
    Auto,
    /// Always the general splitting keyed on `c`.
    General,
}

/// Decision data for the double-suspension homotopy type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Signature {
    pub d: u32,
    pub m: u32,
    pub c: u32,
    pub torsion: FgAbGroup,
    pub branch: Option<Branch>,
}

fn s(n: u32) -> Atom {
    Atom::sphere(n).expect("positive dimension")
}

/// `Σ^2 V` for the general splitting.
pub fn general_sigma2_v(d: u32, c: u32) -> SpaceExpr {
    assert!(
        d >= 1 && c <= d,
        "general splitting needs 1 <= d and c <= d"
    );
    let pair = SpaceExpr::wedge([s(4), s(6)]);
    let cp2 = SpaceExpr::atom(Atom::cp2().suspended(2));
    let (d, c) = (d as usize, c as usize);
    if c == 0 {
        SpaceExpr::atom(Atom::w0().suspended(1)).join(&pair.repeat(d - 1))
    } else if c == d {
        SpaceExpr::atom(Atom::wd().suspended(1)).join(&cp2.repeat(d - 1))
    } else {
        SpaceExpr::atom(Atom::wmix().suspended(1))
            .join(&cp2.repeat(c - 1))
            .join(&pair.repeat(d - c - 1))
    }
}

/// `Σ^2 V` when `H^2 = Z`.
pub fn rank_one_sigma2_v(branch: Branch) -> SpaceExpr {
    match branch {
        Branch::CP3 => SpaceExpr::atom(Atom::cp3().suspended(2)),
        Branch::V3 => SpaceExpr::atom(Atom::v3().suspended(2)),
        Branch::NonSpinEven => SpaceExpr::wedge([s(4), Atom::cp2().suspended(4)]),
        Branch::SpinEvenLambda0 | Branch::SpinEvenLambda1 => {
            let lambda = branch == Branch::SpinEvenLambda1;
            SpaceExpr::wedge([Atom::eta_cone(4, lambda).expect("stable range"), s(6)])
        }
    }
}

/// `2m S^5 v P^6(T) v P^5(T)`: everything outside `Σ^2 V`.
pub fn sphere_and_moore_tail(m: &ManifoldInvariants) -> SpaceExpr {
    SpaceExpr::atom(s(5))
        .repeat(2 * m.m() as usize)
        .join(&moore_pair(m.torsion(), 6))
}

fn moore_pair(t: &FgAbGroup, top: u32) -> SpaceExpr {
    let hi = moore_split(t, top).expect("torsion group");
    let lo = moore_split(t, top - 1).expect("torsion group");
    hi.join(&lo)
}

fn sigma2_v(m: &ManifoldInvariants, path: Path) -> (SpaceExpr, &'static str) {
    if m.d() == 0 {
        return (
            SpaceExpr::atom(s(8)),
            "V has the homology of S^6, so V ~ S^6 (d = 0 extension)",
        );
    }
    match (path, m.rank_one()) {
        (Path::Auto, Some(data)) => (
            rank_one_sigma2_v(Branch::of(data)),
            "rank-one splitting keyed on k mod 6, spin and lambda",
        ),
        _ => (
            general_sigma2_v(m.d(), m.c()),
            "top cell split over ΣX = c ΣCP^2 v (d-c)(S^3 v S^5)",
        ),
    }
}

/// `ΣM ≃ ΣM_1 v m(S^4 v S^4)`.
pub fn suspension_splitting(m: &ManifoldInvariants) -> PartialExpr {
    PartialExpr {
        opaque: vec![Opaque {
            label: "M1",
            susp: 1,
        }],
        known: SpaceExpr::atom(s(4)).repeat(2 * m.m() as usize),
    }
}

/// One stage of the homology decomposition of the `b_3 = 0` summand.
pub fn stage(m: &ManifoldInvariants, which: Stage) -> PartialExpr {
    stage_with(m, which, Path::Auto)
}

pub fn stage_with(m: &ManifoldInvariants, which: Stage, path: Path) -> PartialExpr {
    let (m1, _) = wall_split(m);
    let t = m1.torsion();
    let d = m1.d() as usize;
    let opaque = |label, susp| {
        if d == 0 {
            vec![]
        } else {
            vec![Opaque { label, susp }]
        }
    };
    match which {
        Stage::M3 => PartialExpr::known(SpaceExpr::atom(s(2)).repeat(d).join(&moore_pair(t, 4))),
        Stage::M5 => {
            // Y is the cofibre of ∨S^3 → ∨S^2 ∨ P^3(T); with d = 0 it is P^3(T) itself
            let known = if d == 0 {
                moore_pair(t, 4)
            } else {
                moore_split(t, 4).expect("torsion")
            };
            PartialExpr {
                opaque: opaque("Y", 0),
                known,
            }
        }
        Stage::SigmaM5 => PartialExpr {
            opaque: opaque("X", 1),
            known: moore_pair(t, 5),
        },
        Stage::Sigma2V => PartialExpr::known(sigma2_v(&m1, path).0),
    }
}

pub fn double_suspension(m: &ManifoldInvariants) -> (SpaceExpr, DerivationTrace) {
    double_suspension_with(m, Path::Auto)
}

pub fn double_suspension_with(m: &ManifoldInvariants, path: Path) -> (SpaceExpr, DerivationTrace) {
    let mut trace = DerivationTrace::default();
    trace.push(
        "ΣM",
        suspension_splitting(m),
        "M = M1 # m(S^3 x S^3) and Σ(S^3 x S^3) retracts onto Σ(S^3 v S^3)",
    );
    trace.push(
        "M(3)",
        stage_with(m, Stage::M3, path),
        "homology decomposition; P^3(T) attaches trivially",
    );
    trace.push(
        "M(5)",
        stage_with(m, Stage::M5, path),
        "H_3-trivial attaching map factors away from P^4(T)",
    );
    trace.push(
        "ΣM(5)",
        stage_with(m, Stage::SigmaM5, path),
        "π_4(P^4(p^r)) = 0 for odd p",
    );
    let (v, why) = sigma2_v(m, path);
    trace.push("Σ²V", PartialExpr::known(v.clone()), why);
    let out = v.join(&sphere_and_moore_tail(m));
    trace.push(
        "Σ²M",
        PartialExpr::known(out.clone()),
        "Σ²M = Σ²V v P^6(T) v P^5(T) v 2m S^5; Moore attaching maps die for p >= 5",
    );
    if m.d() == 0 {
        trace.notes.push(
            "d = 0 lies outside the general statement; V is identified with S^6 from its homology"
                .into(),
        );
    }
    (out, trace)
}

pub fn classify(m: &ManifoldInvariants) -> Signature {
    Signature {
        d: m.d(),
        m: m.m(),
        c: m.c(),
        torsion: m.torsion().clone(),
        branch: m.rank_one().map(Branch::of),
    }
}

/// Whether `Σ^2 M ≃ Σ^2 M'`, decided from signatures. Only defined for `d = 1`.
pub fn compare(a: &ManifoldInvariants, b: &ManifoldInvariants) -> Result<bool, DecomposeError> {
    for m in [a, b] {
        if m.d() != 1 || m.rank_one().is_none() {
            return Err(DecomposeError::Scope(m.d()));
        }
    }
    Ok(classify(a) == classify(b))
}
