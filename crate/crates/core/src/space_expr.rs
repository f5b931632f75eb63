//! Formal wedges of suspended atoms.
//!
//! A [`SpaceExpr`] is a multiset of [`Atom`]s; the empty multiset is the
//! point. Spheres, Moore spaces and η³-cones absorb suspensions into their
//! dimension, everything else keeps a suspension counter.
//!
//! Text form: atoms joined by ` v `, an optional multiplicity `k*`, and an
//! optional suspension prefix `Sig ` / `Sig^j `, for example
//! `S^4 v 2*S^5 v P^6(5) v Sig^2 CP2`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::abelian::{AbelianError, FgAbGroup, PrimePower};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error("sphere dimension must be at least 1")]
    SphereDim,
    #[error("Moore space P^{n}(q) needs n >= 2")]
    MooreDim { n: u32 },
    #[error("Moore space order: {0}")]
    MooreOrder(#[from] AbelianError),
    #[error("eta^3 cone needs base dimension >= 4, got {0}")]
    EtaConeDim(u32),
    #[error("torsion group has a free part of rank {0}")]
    FreePart(usize),
    #[error("cannot parse `{0}`")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AtomKind {
    Sphere {
        n: u32,
    },
    /// `P^n(q)`: cells in dimensions `n-1` and `n`, reduced integral
    /// cohomology `Z/q` in degree `n`.
    Moore {
        n: u32,
        q: PrimePower,
    },
    CP2,
    CP3,
    /// `S^2`-bundle over `S^4` with `p_1 = 12 s_4`.
    V3,
    /// `(S^3 v S^5) u e^7`
    W0,
    /// `ΣCP^2 u e^7`
    Wd,
    /// `(ΣCP^2 v S^3 v S^5) u e^7`
    Wmix,
    /// `S^n u_{λη³} e^{n+4}`
    EtaCone {
        n: u32,
        lambda: bool,
    },
}

impl AtomKind {
    /// Opaque atoms never absorb suspensions.
    pub fn is_opaque(&self) -> bool {
        matches!(
            self,
            AtomKind::CP2
                | AtomKind::CP3
                | AtomKind::V3
                | AtomKind::W0
                | AtomKind::Wd
                | AtomKind::Wmix
        )
    }

    fn opaque_name(&self) -> Option<&'static str> {
        Some(match self {
            AtomKind::CP2 => "CP2",
            AtomKind::CP3 => "CP3",
            AtomKind::V3 => "V3",
            AtomKind::W0 => "W0",
            AtomKind::Wd => "Wd",
            AtomKind::Wmix => "Wmix",
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom {
    kind: AtomKind,
    susp: u32,
}

impl Atom {
    pub fn sphere(n: u32) -> Result<Atom, SpaceError> {
        if n == 0 {
            return Err(SpaceError::SphereDim);
        }
        Ok(Atom {
            kind: AtomKind::Sphere { n },
            susp: 0,
        })
    }

    /// `P^n(q)` with `q` a prime power.
    pub fn moore(q: u64, n: u32) -> Result<Atom, SpaceError> {
        Self::moore_pp(PrimePower::from_order(q)?, n)
    }

    pub fn moore_pp(q: PrimePower, n: u32) -> Result<Atom, SpaceError> {
        if n < 2 {
            return Err(SpaceError::MooreDim { n });
        }
        Ok(Atom {
            kind: AtomKind::Moore { n, q },
            susp: 0,
        })
    }

    pub fn eta_cone(n: u32, lambda: bool) -> Result<Atom, SpaceError> {
        if n < 4 {
            return Err(SpaceError::EtaConeDim(n));
        }
        Ok(Atom {
            kind: AtomKind::EtaCone { n, lambda },
            susp: 0,
        })
    }

    pub fn cp2() -> Atom {
        Atom {
            kind: AtomKind::CP2,
            susp: 0,
        }
    }

    pub fn cp3() -> Atom {
        Atom {
            kind: AtomKind::CP3,
            susp: 0,
        }
    }

    pub fn v3() -> Atom {
        Atom {
            kind: AtomKind::V3,
            susp: 0,
        }
    }

    pub fn w0() -> Atom {
        Atom {
            kind: AtomKind::W0,
            susp: 0,
        }
    }

    pub fn wd() -> Atom {
        Atom {
            kind: AtomKind::Wd,
            susp: 0,
        }
    }

    pub fn wmix() -> Atom {
        Atom {
            kind: AtomKind::Wmix,
            susp: 0,
        }
    }

    pub fn kind(&self) -> &AtomKind {
        &self.kind
    }

    pub fn susp(&self) -> u32 {
        self.susp
    }

    /// Raises the suspension counter without re-basing.
    pub fn suspended(self, times: u32) -> Atom {
        Atom {
            kind: self.kind,
            susp: self.susp + times,
        }
    }

    /// Canonical form of this atom as a wedge of atoms.
    fn normal_form(self) -> Vec<Atom> {
        let j = self.susp;
        match self.kind {
            AtomKind::Sphere { n } => vec![Atom {
                kind: AtomKind::Sphere { n: n + j },
                susp: 0,
            }],
            AtomKind::Moore { n, q } => vec![Atom {
                kind: AtomKind::Moore { n: n + j, q },
                susp: 0,
            }],
            AtomKind::EtaCone { n, lambda: false } => vec![
                Atom {
                    kind: AtomKind::Sphere { n: n + j },
                    susp: 0,
                },
                Atom {
                    kind: AtomKind::Sphere { n: n + j + 4 },
                    susp: 0,
                },
            ],
            AtomKind::EtaCone { n, lambda: true } => {
                vec![Atom {
                    kind: AtomKind::EtaCone {
                        n: n + j,
                        lambda: true,
                    },
                    susp: 0,
                }]
            }
            _ => vec![self],
        }
    }

    /// Reduced integral homology.
    pub fn homology(&self) -> GradedGroups {
        let j = self.susp;
        let z = FgAbGroup::free(1);
        let mut h = GradedGroups::new();
        match self.kind {
            AtomKind::Sphere { n } => h.add(n + j, &z),
            AtomKind::Moore { n, q } => h.add(n + j - 1, &FgAbGroup::new(0, vec![q])),
            AtomKind::CP2 => {
                h.add(j + 2, &z);
                h.add(j + 4, &z);
            }
            AtomKind::CP3 | AtomKind::V3 => {
                h.add(j + 2, &z);
                h.add(j + 4, &z);
                h.add(j + 6, &z);
            }
            AtomKind::W0 | AtomKind::Wd => {
                h.add(j + 3, &z);
                h.add(j + 5, &z);
                h.add(j + 7, &z);
            }
            AtomKind::Wmix => {
                h.add(j + 3, &FgAbGroup::free(2));
                h.add(j + 5, &FgAbGroup::free(2));
                h.add(j + 7, &z);
            }
            AtomKind::EtaCone { n, lambda } => {
                // attaching map is stable η³ (or null), homologically trivial either way
                let _ = lambda;
                h.add(n + j, &z);
                h.add(n + j + 4, &z);
            }
        }
        h
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.susp {
            0 => {}
            1 => write!(f, "Sig ")?,
            j => write!(f, "Sig^{j} ")?,
        }
        match self.kind {
            AtomKind::Sphere { n } => write!(f, "S^{n}"),
            AtomKind::Moore { n, q } => write!(f, "P^{n}({q})"),
            AtomKind::EtaCone { n, lambda: true } => write!(f, "S^{n} u_eta3 e^{}", n + 4),
            AtomKind::EtaCone { n, lambda: false } => write!(f, "S^{n} u_0 e^{}", n + 4),
            k => write!(f, "{}", k.opaque_name().expect("opaque")),
        }
    }
}

impl FromStr for Atom {
    type Err = SpaceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || SpaceError::Parse(s.to_string());
        let mut rest = s.trim();
        let mut susp = 0u32;
        while let Some(r) = rest.strip_prefix("Sig") {
            let (j, r) = if let Some(r) = r.strip_prefix('^') {
                let end = r.find(|c: char| !c.is_ascii_digit()).unwrap_or(r.len());
                (r[..end].parse::<u32>().map_err(|_| err())?, &r[end..])
            } else {
                (1, r)
            };
            if !r.starts_with(' ') {
                return Err(err());
            }
            susp += j;
            rest = r.trim_start();
        }
        let base = if let Some(name) = ["CP2", "CP3", "V3", "W0", "Wd", "Wmix"]
            .iter()
            .find(|n| **n == rest)
        {
            match *name {
                "CP2" => Atom::cp2(),
                "CP3" => Atom::cp3(),
                "V3" => Atom::v3(),
                "W0" => Atom::w0(),
                "Wd" => Atom::wd(),
                _ => Atom::wmix(),
            }
        } else if let Some(r) = rest.strip_prefix("P^") {
            let open = r.find('(').ok_or_else(err)?;
            let n: u32 = r[..open].parse().map_err(|_| err())?;
            let q: u64 = r[open + 1..]
                .strip_suffix(')')
                .ok_or_else(err)?
                .parse()
                .map_err(|_| err())?;
            Atom::moore(q, n)?
        } else if let Some(r) = rest.strip_prefix("S^") {
            let parts: Vec<&str> = r.split_whitespace().collect();
            match parts.as_slice() {
                [n] => Atom::sphere(n.parse().map_err(|_| err())?)?,
                [n, glue, top] => {
                    let n: u32 = n.parse().map_err(|_| err())?;
                    let top: u32 = top
                        .strip_prefix("e^")
                        .ok_or_else(err)?
                        .parse()
                        .map_err(|_| err())?;
                    let lambda = match *glue {
                        "u_eta3" => true,
                        "u_0" => false,
                        _ => return Err(err()),
                    };
                    if top != n + 4 {
                        return Err(err());
                    }
                    Atom::eta_cone(n, lambda)?
                }
                _ => return Err(err()),
            }
        } else {
            return Err(err());
        };
        Ok(base.suspended(susp))
    }
}

/// A finite wedge of atoms.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SpaceExpr {
    atoms: Vec<Atom>,
}

impl SpaceExpr {
    pub fn point() -> Self {
        Self::default()
    }

    /// Normalized wedge of the given atoms.
    pub fn wedge<I: IntoIterator<Item = Atom>>(atoms: I) -> Self {
        Self::raw(atoms).normalize()
    }

    /// Wedge of the given atoms, kept exactly as supplied.
    pub fn raw<I: IntoIterator<Item = Atom>>(atoms: I) -> Self {
        SpaceExpr {
            atoms: atoms.into_iter().collect(),
        }
    }

    pub fn atom(a: Atom) -> Self {
        Self::wedge([a])
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn is_point(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn normalize(&self) -> SpaceExpr {
        let mut atoms: Vec<Atom> = self.atoms.iter().flat_map(|a| a.normal_form()).collect();
        atoms.sort();
        SpaceExpr { atoms }
    }

    pub fn is_normalized(&self) -> bool {
        *self == self.normalize()
    }

    /// `self v other`, normalized.
    pub fn join(&self, other: &SpaceExpr) -> SpaceExpr {
        SpaceExpr::wedge(self.atoms.iter().chain(other.atoms.iter()).copied())
    }

    /// `n` copies of this wedge.
    pub fn repeat(&self, n: usize) -> SpaceExpr {
        SpaceExpr::wedge((0..n).flat_map(|_| self.atoms.iter().copied()))
    }

    pub fn suspend(&self, times: u32) -> SpaceExpr {
        SpaceExpr::wedge(self.atoms.iter().map(|a| a.suspended(times)))
    }

    pub fn homology(&self) -> GradedGroups {
        self.atoms
            .iter()
            .map(Atom::homology)
            .fold(GradedGroups::new(), |a, b| a.direct_sum(&b))
    }

    /// Reduced Euler characteristic.
    pub fn euler(&self) -> i64 {
        self.homology().euler()
    }

    /// Atoms grouped with their multiplicities, in canonical order.
    pub fn multiplicities(&self) -> Vec<(Atom, usize)> {
        let mut out: Vec<(Atom, usize)> = Vec::new();
        for a in self.normalize().atoms {
            match out.last_mut() {
                Some((b, k)) if *b == a => *k += 1,
                _ => out.push((a, 1)),
            }
        }
        out
    }
}

impl fmt::Display for SpaceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self.multiplicities();
        if parts.is_empty() {
            return write!(f, "*");
        }
        let rendered: Vec<String> = parts
            .into_iter()
            .map(|(a, k)| {
                if k == 1 {
                    a.to_string()
                } else {
                    format!("{k}*{a}")
                }
            })
            .collect();
        write!(f, "{}", rendered.join(" v "))
    }
}

impl FromStr for SpaceExpr {
    type Err = SpaceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "*" || s.is_empty() {
            return Ok(SpaceExpr::point());
        }
        let mut atoms = Vec::new();
        for term in s.split(" v ") {
            let term = term.trim();
            let (k, body) = match term.split_once('*') {
                Some((k, body)) => (
                    k.trim()
                        .parse::<usize>()
                        .map_err(|_| SpaceError::Parse(term.to_string()))?,
                    body,
                ),
                None => (1, term),
            };
            let atom: Atom = body.parse()?;
            atoms.extend(std::iter::repeat_n(atom, k));
        }
        Ok(SpaceExpr::wedge(atoms))
    }
}

/// `P^n(T) = v P^n(p^r)` over the primary summands of `T`.
pub fn moore_split(t: &FgAbGroup, n: u32) -> Result<SpaceExpr, SpaceError> {
    if t.free_rank() > 0 {
        return Err(SpaceError::FreePart(t.free_rank()));
    }
    let atoms = t
        .torsion()
        .iter()
        .map(|&q| Atom::moore_pp(q, n))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SpaceExpr::wedge(atoms))
}

/// A finitely supported degree → group map. Zero groups are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GradedGroups {
    groups: BTreeMap<u32, FgAbGroup>,
}

impl GradedGroups {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, degree: u32) -> FgAbGroup {
        self.groups.get(&degree).cloned().unwrap_or_default()
    }

    /// Adds `g` as a direct summand in `degree`.
    pub fn add(&mut self, degree: u32, g: &FgAbGroup) {
        if g.is_zero() {
            return;
        }
        let e = self.groups.entry(degree).or_default();
        *e = e.direct_sum(g);
    }

    pub fn direct_sum(&self, other: &GradedGroups) -> GradedGroups {
        let mut out = self.clone();
        for (&d, g) in &other.groups {
            out.add(d, g);
        }
        out
    }

    /// Moves every group up by `k` degrees.
    pub fn shift_up(&self, k: u32) -> GradedGroups {
        GradedGroups {
            groups: self
                .groups
                .iter()
                .map(|(&d, g)| (d + k, g.clone()))
                .collect(),
        }
    }

    /// Drops degree 0.
    pub fn reduced(&self) -> GradedGroups {
        let mut out = self.clone();
        out.groups.remove(&0);
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &FgAbGroup)> {
        self.groups.iter().map(|(&d, g)| (d, g))
    }

    pub fn degrees(&self) -> impl Iterator<Item = u32> + '_ {
        self.groups.keys().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn euler(&self) -> i64 {
        self.groups
            .iter()
            .map(|(&d, g)| {
                if d % 2 == 0 {
                    g.free_rank() as i64
                } else {
                    -(g.free_rank() as i64)
                }
            })
            .sum()
    }
}

impl fmt::Display for GradedGroups {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.groups.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .groups
            .iter()
            .map(|(d, g)| format!("H{d}={g}"))
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: u32) -> Atom {
        Atom::sphere(n).unwrap()
    }

    fn expr(text: &str) -> SpaceExpr {
        text.parse().unwrap()
    }

    #[test]
    fn suspend_examples() {
        let e = SpaceExpr::wedge([s(3), s(5)]);
        assert_eq!(e.suspend(1), SpaceExpr::wedge([s(4), s(6)]));
        let p = SpaceExpr::atom(Atom::moore(5, 4).unwrap());
        assert_eq!(p.suspend(2), SpaceExpr::atom(Atom::moore(5, 6).unwrap()));
        let c = SpaceExpr::atom(Atom::cp2().suspended(1));
        let c2 = c.suspend(1);
        assert_eq!(c2.atoms()[0].kind(), &AtomKind::CP2);
        assert_eq!(c2.atoms()[0].susp(), 2);
    }

    #[test]
    fn moore_split_examples() {
        let t = FgAbGroup::from_pairs(0, &[(5, 1), (5, 2)]).unwrap();
        assert_eq!(moore_split(&t, 5).unwrap().to_string(), "P^5(5) v P^5(25)");
        assert!(moore_split(&FgAbGroup::zero(), 5).unwrap().is_point());
        let t = FgAbGroup::from_pairs(0, &[(7, 1), (7, 1)]).unwrap();
        assert_eq!(moore_split(&t, 6).unwrap().to_string(), "2*P^6(7)");
        assert_eq!(
            moore_split(&FgAbGroup::free(1), 6),
            Err(SpaceError::FreePart(1))
        );
    }

    #[test]
    fn normalize_examples() {
        let cone = SpaceExpr::atom(Atom::eta_cone(4, false).unwrap());
        assert_eq!(cone, SpaceExpr::wedge([s(4), s(8)]));
        let e = SpaceExpr::raw([s(5), s(4), s(5)]);
        assert_eq!(e.normalize().to_string(), "S^4 v 2*S^5");
        assert_eq!(e.normalize().normalize(), e.normalize());
        let live = SpaceExpr::atom(Atom::eta_cone(4, true).unwrap());
        assert_eq!(live.suspend(1).to_string(), "S^5 u_eta3 e^9");
    }

    #[test]
    fn homology_examples() {
        let h = expr("S^4 v S^6").homology();
        assert_eq!(h.get(4), FgAbGroup::free(1));
        assert_eq!(h.get(6), FgAbGroup::free(1));
        assert_eq!(expr("P^6(5)").homology().get(5), FgAbGroup::cyclic(5));
        let w = SpaceExpr::atom(Atom::wmix().suspended(1)).homology();
        assert_eq!(w.get(4), FgAbGroup::free(2));
        assert_eq!(w.get(6), FgAbGroup::free(2));
        assert_eq!(w.get(8), FgAbGroup::free(1));
        assert_eq!(w.degrees().count(), 3);
    }

    #[test]
    fn euler_examples() {
        assert_eq!(expr("S^4 v S^6").euler(), 2);
        assert_eq!(expr("P^5(7)").euler(), 0);
        assert_eq!(expr("Sig CP2").euler(), -2);
        assert_eq!(SpaceExpr::point().euler(), 0);
    }

    #[test]
    fn atom_guards() {
        assert_eq!(Atom::sphere(0), Err(SpaceError::SphereDim));
        assert_eq!(Atom::moore(5, 1), Err(SpaceError::MooreDim { n: 1 }));
        assert!(matches!(Atom::moore(6, 4), Err(SpaceError::MooreOrder(_))));
        assert_eq!(Atom::eta_cone(3, true), Err(SpaceError::EtaConeDim(3)));
    }

    #[test]
    fn parse_and_render() {
        let text = "S^4 v S^6 v P^6(5) v 2*S^5 v Sig^2 CP2";
        let e = expr(text);
        assert_eq!(e.to_string(), "S^4 v 2*S^5 v S^6 v P^6(5) v Sig^2 CP2");
        assert_eq!(expr(&e.to_string()), e);
        assert_eq!(expr("Sig^2 P^4(5)"), expr("P^6(5)"));
        assert_eq!(expr("Sig Sig CP3"), expr("Sig^2 CP3"));
        assert_eq!(expr("Sig^1 W0").to_string(), "Sig W0");
        assert_eq!(expr("S^4 u_0 e^8"), expr("S^4 v S^8"));
        assert_eq!(expr("*"), SpaceExpr::point());
        assert!("S^4 u_eta3 e^9".parse::<SpaceExpr>().is_err());
        assert!("Sig^2CP2".parse::<SpaceExpr>().is_err());
        assert!("T^3".parse::<SpaceExpr>().is_err());
        assert!("x*S^3".parse::<SpaceExpr>().is_err());
    }
}
