//! Independent checks on decompositions.
//!
//! Every atom gets an explicit reduced cellular chain complex (no basepoint
//! cell) and a table of the mod-2 and mod-3 cohomology operations it is known
//! to carry. Homology is recomputed with Smith normal form, operations are
//! compared by their ranks, and a manifold gets a template complex built
//! straight from its invariants.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::abelian::rank_mod_p;
use crate::abelian::{snf, FgAbGroup, IntMatrix};
use crate::decompose::{
    classify, double_suspension, general_sigma2_v, rank_one_sigma2_v, sphere_and_moore_tail, Branch,
};
use crate::ktheory::{k_group, Theory};
use crate::manifold::{homology_of, ManifoldInvariants};
use crate::space_expr::{Atom, AtomKind, GradedGroups, SpaceExpr};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("cell {cell} has a face {face} of the wrong dimension")]
    FaceDimension { cell: usize, face: usize },
    #[error("boundary of boundary is nonzero on cell {0}")]
    BoundarySquare(usize),
    #[error("face index {0} out of range")]
    FaceIndex(usize),
}

/// A finite CW complex recorded by its cellular boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellComplex {
    cells: Vec<(String, u32)>,
    boundary: Vec<Vec<(usize, i64)>>,
}

impl CellComplex {
    pub fn new(
        cells: Vec<(String, u32)>,
        boundary: Vec<Vec<(usize, i64)>>,
    ) -> Result<Self, OracleError> {
        assert_eq!(cells.len(), boundary.len(), "one boundary per cell");
        for (i, faces) in boundary.iter().enumerate() {
            for &(j, _) in faces {
                let face = cells.get(j).ok_or(OracleError::FaceIndex(j))?;
                if face.1 + 1 != cells[i].1 {
                    return Err(OracleError::FaceDimension { cell: i, face: j });
                }
            }
        }
        let c = CellComplex { cells, boundary };
        for i in 0..c.cells.len() {
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            for &(j, a) in &c.boundary[i] {
                for &(k, b) in &c.boundary[j] {
                    *acc.entry(k).or_default() += a * b;
                }
            }
            if acc.values().any(|&v| v != 0) {
                return Err(OracleError::BoundarySquare(i));
            }
        }
        Ok(c)
    }

    pub fn cells(&self) -> &[(String, u32)] {
        &self.cells
    }

    pub fn boundary(&self, cell: usize) -> &[(usize, i64)] {
        &self.boundary[cell]
    }

    fn cells_in(&self, dim: u32) -> Vec<usize> {
        (0..self.cells.len())
            .filter(|&i| self.cells[i].1 == dim)
            .collect()
    }

    /// `∂_n : C_n → C_{n-1}` as a matrix (rows index `(n-1)`-cells).
    pub fn boundary_matrix(&self, n: u32) -> IntMatrix {
        let cols = self.cells_in(n);
        let rows = if n == 0 {
            Vec::new()
        } else {
            self.cells_in(n - 1)
        };
        let mut m = IntMatrix::zeros(rows.len(), cols.len());
        for (c, &cell) in cols.iter().enumerate() {
            for &(face, a) in &self.boundary[cell] {
                let r = rows
                    .iter()
                    .position(|&x| x == face)
                    .expect("face of dimension n-1");
                let v = m.get(r, c) + a;
                m.set(r, c, v);
            }
        }
        m
    }

    pub fn top_dim(&self) -> u32 {
        self.cells.iter().map(|c| c.1).max().unwrap_or(0)
    }

    /// One-point union of reduced complexes.
    pub fn wedge(parts: &[CellComplex]) -> CellComplex {
        let mut cells = Vec::new();
        let mut boundary = Vec::new();
        for p in parts {
            let offset = cells.len();
            cells.extend(p.cells.iter().cloned());
            boundary.extend(
                p.boundary
                    .iter()
                    .map(|b| b.iter().map(|&(j, a)| (j + offset, a)).collect()),
            );
        }
        CellComplex { cells, boundary }
    }
}

/// Cellular homology via Smith normal form.
pub fn homology_snf(c: &CellComplex) -> GradedGroups {
    let mut h = GradedGroups::new();
    for n in 0..=c.top_dim() {
        let count = c.cells_in(n).len();
        let out = snf(&c.boundary_matrix(n)).rank();
        let inc = snf(&c.boundary_matrix(n + 1));
        let torsion: Vec<u64> = inc
            .invariant_factors()
            .iter()
            .filter(|f| **f > 1.into())
            .map(|f| u64::try_from(f).expect("small torsion"))
            .collect();
        let free = count - out - inc.rank();
        let g = FgAbGroup::free(free).direct_sum(&crate::abelian::primary_decomposition(torsion));
        h.add(n, &g);
    }
    h
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Op {
    Sq2,
    P1,
    TSecondary,
}

impl Op {
    pub fn shift(self) -> u32 {
        match self {
            Op::Sq2 => 2,
            Op::P1 | Op::TSecondary => 4,
        }
    }

    pub fn prime(self) -> u64 {
        match self {
            Op::P1 => 3,
            Op::Sq2 | Op::TSecondary => 2,
        }
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Op::Sq2 => "Sq2",
            Op::P1 => "P1",
            Op::TSecondary => "T",
        })
    }
}

/// A nonzero matrix entry of an operation, in mod-`p` cohomology bases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OpEntry {
    pub op: Op,
    pub degree: u32,
    pub from: usize,
    pub to: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OpTable {
    pub entries: Vec<OpEntry>,
    /// Degrees whose operations into them are not recorded (top cells of `W` atoms).
    pub unknown_targets: BTreeSet<u32>,
}

impl OpTable {
    fn add(&mut self, op: Op, degree: u32, from: usize, to: usize) {
        self.entries.push(OpEntry {
            op,
            degree,
            from,
            to,
        });
    }
}

fn cells_of(atom: &Atom) -> (Vec<u32>, Vec<Vec<(usize, i64)>>) {
    let j = atom.susp();
    let free = |dims: &[u32]| {
        (
            dims.iter().map(|d| d + j).collect::<Vec<_>>(),
            vec![Vec::new(); dims.len()],
        )
    };
    match *atom.kind() {
        AtomKind::Sphere { n } => free(&[n]),
        AtomKind::Moore { n, q } => {
            let q = i64::try_from(q.order_u64().expect("Moore order fits in u64"))
                .expect("Moore order fits in i64");
            (vec![n + j - 1, n + j], vec![vec![], vec![(0, q)]])
        }
        AtomKind::CP2 => free(&[2, 4]),
        AtomKind::CP3 | AtomKind::V3 => free(&[2, 4, 6]),
        AtomKind::W0 | AtomKind::Wd => free(&[3, 5, 7]),
        AtomKind::Wmix => free(&[3, 3, 5, 5, 7]),
        AtomKind::EtaCone { n, .. } => free(&[n, n + 4]),
    }
}

/// Chain complex and operation table of one atom.
pub fn build_complex(atom: &Atom) -> (CellComplex, OpTable) {
    let (dims, boundary) = cells_of(atom);
    let cells = dims
        .iter()
        .enumerate()
        .map(|(i, &d)| (format!("{atom}:e{d}.{i}"), d))
        .collect();
    let complex = CellComplex::new(cells, boundary).expect("atom complexes are valid");
    let j = atom.susp();
    let mut ops = OpTable::default();
    match *atom.kind() {
        AtomKind::CP2 | AtomKind::V3 => ops.add(Op::Sq2, j + 2, 0, 0),
        AtomKind::CP3 => {
            ops.add(Op::Sq2, j + 2, 0, 0);
            ops.add(Op::P1, j + 2, 0, 0);
        }
        AtomKind::Wd | AtomKind::Wmix => {
            // the ΣCP^2 inside is basis vector 0 in degrees j+3 and j+5
            ops.add(Op::Sq2, j + 3, 0, 0);
            ops.unknown_targets.insert(j + 7);
        }
        AtomKind::W0 => {
            ops.unknown_targets.insert(j + 7);
        }
        AtomKind::EtaCone { n, lambda: true } => ops.add(Op::TSecondary, n + j, 0, 0),
        _ => {}
    }
    (complex, ops)
}

/// `dim H^n(X; F_p)` by universal coefficients.
pub fn mod_p_dims(h: &GradedGroups, p: u64) -> BTreeMap<u32, usize> {
    let mut out = BTreeMap::new();
    let top = h.degrees().max().unwrap_or(0);
    for n in 0..=top + 1 {
        let here = h.get(n);
        let below = if n == 0 {
            FgAbGroup::zero()
        } else {
            h.get(n - 1)
        };
        let dim = here.free_rank() + here.p_rank(p) + below.p_rank(p);
        if dim > 0 {
            out.insert(n, dim);
        }
    }
    out
}

/// The whole wedge: complex, homology and operation table in global bases.
#[derive(Debug, Clone)]
pub struct Model {
    pub complex: CellComplex,
    pub homology: GradedGroups,
    pub ops: OpTable,
    pub dims: BTreeMap<u64, BTreeMap<u32, usize>>,
}

pub fn model(e: &SpaceExpr) -> Model {
    let mut parts = Vec::new();
    let mut ops = OpTable::default();
    let mut offsets: BTreeMap<(u64, u32), usize> = BTreeMap::new();
    for atom in e.atoms() {
        let (c, table) = build_complex(atom);
        let h = homology_snf(&c);
        for op in &table.entries {
            let p = op.op.prime();
            let src = offsets.get(&(p, op.degree)).copied().unwrap_or(0);
            let dst = offsets
                .get(&(p, op.degree + op.op.shift()))
                .copied()
                .unwrap_or(0);
            ops.add(op.op, op.degree, op.from + src, op.to + dst);
        }
        ops.unknown_targets.extend(table.unknown_targets);
        for p in [2, 3] {
            for (n, d) in mod_p_dims(&h, p) {
                *offsets.entry((p, n)).or_default() += d;
            }
        }
        parts.push(c);
    }
    let complex = CellComplex::wedge(&parts);
    let homology = homology_snf(&complex);
    let dims = [2, 3]
        .into_iter()
        .map(|p| (p, mod_p_dims(&homology, p)))
        .collect();
    Model {
        complex,
        homology,
        ops,
        dims,
    }
}

impl Model {
    /// Rank of `op` out of `degree`.
    pub fn op_rank(&self, op: Op, degree: u32) -> usize {
        let p = op.prime();
        let rows = self.dims[&p]
            .get(&(degree + op.shift()))
            .copied()
            .unwrap_or(0);
        let cols = self.dims[&p].get(&degree).copied().unwrap_or(0);
        if rows == 0 || cols == 0 {
            return 0;
        }
        let mut m = vec![vec![0u64; cols]; rows];
        for e in self
            .ops
            .entries
            .iter()
            .filter(|e| e.op == op && e.degree == degree)
        {
            m[e.to][e.from] = 1;
        }
        rank_mod_p(&m, p)
    }
}

/// Isomorphism invariants of the cohomology as a module over the operations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModuleSignature {
    /// `(p, degree) → dim H^degree(-; F_p)`
    pub dims: BTreeMap<(u64, u32), usize>,
    /// `(op, source degree) → rank`, nonzero ranks only
    pub ranks: BTreeMap<(Op, u32), usize>,
    pub unknown_targets: BTreeSet<u32>,
}

impl fmt::Display for ModuleSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ranks: Vec<String> = self
            .ranks
            .iter()
            .map(|((op, d), r)| format!("{op}@{d}:{r}"))
            .collect();
        if ranks.is_empty() {
            write!(f, "no operations")
        } else {
            write!(f, "{}", ranks.join(" "))
        }
    }
}

pub fn module_signature(e: &SpaceExpr) -> ModuleSignature {
    let m = model(e);
    let mut dims = BTreeMap::new();
    for (p, by_deg) in &m.dims {
        for (n, d) in by_deg {
            dims.insert((*p, *n), *d);
        }
    }
    let mut ranks = BTreeMap::new();
    let sources: BTreeSet<(Op, u32)> = m.ops.entries.iter().map(|e| (e.op, e.degree)).collect();
    for (op, degree) in sources {
        if m.ops.unknown_targets.contains(&(degree + op.shift())) {
            continue;
        }
        let r = m.op_rank(op, degree);
        if r > 0 {
            ranks.insert((op, degree), r);
        }
    }
    ModuleSignature {
        dims,
        ranks,
        unknown_targets: m.ops.unknown_targets,
    }
}

/// The first invariant telling two wedges apart.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Invariant {
    Homology,
    Sq2,
    TSecondary,
    P1,
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Invariant::Homology => "homology",
            Invariant::Sq2 => "Sq2",
            Invariant::TSecondary => "T-secondary",
            Invariant::P1 => "P1",
        })
    }
}

pub fn distinguishing_invariant(a: &SpaceExpr, b: &SpaceExpr) -> Option<Invariant> {
    if homology_snf(&model(a).complex) != homology_snf(&model(b).complex) {
        return Some(Invariant::Homology);
    }
    let (sa, sb) = (module_signature(a), module_signature(b));
    let by_op = |s: &ModuleSignature, op: Op| -> Vec<(u32, usize)> {
        s.ranks
            .iter()
            .filter(|((o, _), _)| *o == op)
            .map(|((_, d), r)| (*d, *r))
            .collect()
    };
    [
        (Op::Sq2, Invariant::Sq2),
        (Op::TSecondary, Invariant::TSecondary),
        (Op::P1, Invariant::P1),
    ]
    .into_iter()
    .find(|(op, _)| by_op(&sa, *op) != by_op(&sb, *op))
    .map(|(_, inv)| inv)
}

/// Chain complex of `M` read off its invariants: a 0-cell, `d` two-cells,
/// Moore pairs for `T` in dimensions 2–3 and 3–4, `2m` three-cells, `d`
/// four-cells and a top cell.
pub fn manifold_template(m: &ManifoldInvariants) -> CellComplex {
    let mut cells: Vec<(String, u32)> = Vec::new();
    let mut boundary: Vec<Vec<(usize, i64)>> = Vec::new();
    let mut push = |name: String, dim: u32, b: Vec<(usize, i64)>| {
        cells.push((name, dim));
        boundary.push(b);
        cells.len() - 1
    };
    push("e0".into(), 0, vec![]);
    for i in 0..m.d() {
        push(format!("e2.{i}"), 2, vec![]);
    }
    for (i, t) in m.torsion().torsion().iter().enumerate() {
        let q = t.order_u64().expect("torsion order fits in u64") as i64;
        let a = push(format!("t2.{i}"), 2, vec![]);
        push(format!("t3.{i}"), 3, vec![(a, q)]);
        let b = push(format!("u3.{i}"), 3, vec![]);
        push(format!("u4.{i}"), 4, vec![(b, q)]);
    }
    for i in 0..2 * m.m() {
        push(format!("e3.{i}"), 3, vec![]);
    }
    for i in 0..m.d() {
        push(format!("e4.{i}"), 4, vec![]);
    }
    push("e6".into(), 6, vec![]);
    CellComplex::new(cells, boundary).expect("template complex is valid")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    fn check(
        &mut self,
        name: &'static str,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
        ok: bool,
    ) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.checks.push(Check {
            name,
            status,
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    fn skip(&mut self, name: &'static str, why: &str) {
        self.checks.push(Check {
            name,
            status: Status::NotApplicable,
            expected: why.to_string(),
            actual: "-".into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failed(&self) -> Vec<&'static str> {
        self.checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .map(|c| c.name)
            .collect()
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let s = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::NotApplicable => "N/A ",
            };
            writeln!(
                f,
                "{s} {:<16} expected: {} ; actual: {}",
                c.name, c.expected, c.actual
            )?;
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        write!(f, "{}", if self.passed() { "VERIFIED" } else { "FAILED" })
    }
}

/// Checks `e` against everything the invariants of `M` predict for `Σ^2 M`.
pub fn verify_decomposition(m: &ManifoldInvariants, e: &SpaceExpr) -> VerificationReport {
    let mut r = VerificationReport::default();
    let md = model(e);
    let expected_h = homology_of(m).reduced().shift_up(2);
    r.check(
        "homology",
        &expected_h,
        &md.homology,
        md.homology == expected_h,
    );

    let template = homology_snf(&manifold_template(m));
    let h_m = homology_of(m);
    r.check("template", &h_m, &template, template == h_m);

    let chi = h_m.reduced().euler();
    r.check("euler", chi, e.euler(), e.euler() == chi);

    let sq2 = md.op_rank(Op::Sq2, 4);
    r.check("sq2-rank", m.c(), sq2, sq2 == m.c() as usize);

    match m.rank_one() {
        Some(data) if m.d() == 1 => {
            let want = usize::from(!data.spin);
            let got = md.op_rank(Op::Sq2, 6);
            r.check("spin", want, got, want == got);

            if data.k.rem_euclid(2) == 1 {
                let want = usize::from(data.k.rem_euclid(3) != 0);
                let got = md.op_rank(Op::P1, 4);
                r.check("p1", want, got, want == got);
            } else {
                r.skip("p1", "even k: not determined by the splitting");
            }

            let want = usize::from(data.lambda == Some(true));
            let got = md.op_rank(Op::TSecondary, 4);
            r.check("t-secondary", want, got, want == got);
        }
        _ => {
            r.skip("spin", "needs d = 1 with k");
            r.skip("p1", "needs d = 1 with k");
            r.skip("t-secondary", "needs d = 1 with k");
        }
    }

    let t = m.torsion();
    let d = m.d() as usize;
    match k_group(e, Theory::K, 0) {
        Ok(v) => {
            let want = FgAbGroup::free(2 * d + 1).direct_sum(t);
            r.check("k-total", &want, &v.group, v.group == want);
            r.notes.extend(v.provenance_chain(Theory::K, 0));
        }
        Err(err) => r.check("k-total", "a value", err, false),
    }
    match k_group(e, Theory::KO, 2) {
        Ok(v) => {
            // H^4(M) carries T, and odd torsion in H^4 survives into KO
            let want = FgAbGroup::free(1)
                .direct_sum(&FgAbGroup::cyclic(2))
                .repeat(d)
                .direct_sum(t);
            r.check(
                "ko-total",
                crate::ktheory::render_ko(&want),
                crate::ktheory::render_ko(&v.group),
                v.group == want,
            );
            r.notes.extend(v.provenance_chain(Theory::KO, 2));
        }
        Err(err) => r.check("ko-total", "a value", err, false),
    }
    if !t.is_zero() {
        r.notes.push(format!(
            "per atom, K(P^6(q)) = Z/q and K(P^5(q)) = 0 from the cofibre sequence; the opposite labelling gives the same total {t}"
        ));
    }
    r
}

/// Deliberate corruptions of the engine's output, for exercising `verify`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    SwapBranch,
    DropMoore,
    FlipLambda,
    SwapCp3V3,
}

impl Fault {
    pub const ALL: [Fault; 4] = [
        Fault::SwapBranch,
        Fault::DropMoore,
        Fault::FlipLambda,
        Fault::SwapCp3V3,
    ];
}

impl FromStr for Fault {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "swap-branch" => Ok(Fault::SwapBranch),
            "drop-moore" => Ok(Fault::DropMoore),
            "flip-lambda" => Ok(Fault::FlipLambda),
            "swap-cp3-v3" => Ok(Fault::SwapCp3V3),
            other => Err(format!("unknown fault `{other}`")),
        }
    }
}

impl fmt::Display for Fault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Fault::SwapBranch => "swap-branch",
            Fault::DropMoore => "drop-moore",
            Fault::FlipLambda => "flip-lambda",
            Fault::SwapCp3V3 => "swap-cp3-v3",
        })
    }
}

/// The engine's decomposition of `M` with `fault` applied, or `None` when the
/// fault has nothing to act on.
pub fn inject_fault(m: &ManifoldInvariants, fault: Fault) -> Option<SpaceExpr> {
    let (e, _) = double_suspension(m);
    let tail = sphere_and_moore_tail(m);
    let branch = classify(m).branch.filter(|_| m.d() == 1);
    match fault {
        Fault::SwapBranch => match branch {
            Some(b) => {
                let i = Branch::ALL.iter().position(|x| *x == b).expect("listed");
                let other = Branch::ALL[(i + 1) % Branch::ALL.len()];
                Some(rank_one_sigma2_v(other).join(&tail))
            }
            None if m.d() >= 1 => {
                let c = (m.c() + 1) % (m.d() + 1);
                Some(general_sigma2_v(m.d(), c).join(&tail))
            }
            None => None,
        },
        Fault::DropMoore => {
            if m.torsion().is_zero() {
                return None;
            }
            let kept = e
                .atoms()
                .iter()
                .copied()
                .filter(|a| !matches!(a.kind(), AtomKind::Moore { .. }));
            Some(SpaceExpr::wedge(kept))
        }
        Fault::FlipLambda => match branch {
            Some(Branch::SpinEvenLambda0) => {
                Some(rank_one_sigma2_v(Branch::SpinEvenLambda1).join(&tail))
            }
            Some(Branch::SpinEvenLambda1) => {
                Some(rank_one_sigma2_v(Branch::SpinEvenLambda0).join(&tail))
            }
            _ => None,
        },
        Fault::SwapCp3V3 => match branch {
            Some(Branch::CP3) => Some(rank_one_sigma2_v(Branch::V3).join(&tail)),
            Some(Branch::V3) => Some(rank_one_sigma2_v(Branch::CP3).join(&tail)),
            _ => None,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::manifold::Manifest;

    fn e(s: &str) -> SpaceExpr {
        s.parse().unwrap()
    }

    #[test]
    fn atom_complexes() {
        let (c, ops) = build_complex(&Atom::cp2().suspended(2));
        assert_eq!(
            c.cells().iter().map(|c| c.1).collect::<Vec<_>>(),
            vec![4, 6]
        );
        assert_eq!(
            ops.entries,
            vec![OpEntry {
                op: Op::Sq2,
                degree: 4,
                from: 0,
                to: 0
            }]
        );

        let (c, _) = build_complex(&Atom::moore(5, 6).unwrap());
        assert_eq!(c.boundary(1), &[(0, 5)]);
        assert_eq!(homology_snf(&c).to_string(), "H5=Z/5");

        let (c, ops) = build_complex(&Atom::eta_cone(4, true).unwrap());
        assert_eq!(homology_snf(&c).to_string(), "H4=Z, H8=Z");
        assert_eq!(ops.entries[0].op, Op::TSecondary);
    }

    #[test]
    fn bad_complexes_are_rejected() {
        let cells = vec![("a".into(), 1), ("b".into(), 2), ("c".into(), 3)];
        let bad = vec![vec![], vec![(0, 2)], vec![(1, 1)]];
        assert_eq!(
            CellComplex::new(cells.clone(), bad),
            Err(OracleError::BoundarySquare(2))
        );
        let wrong_dim = vec![vec![], vec![], vec![(0, 1)]];
        assert_eq!(
            CellComplex::new(cells, wrong_dim),
            Err(OracleError::FaceDimension { cell: 2, face: 0 })
        );
    }

    #[test]
    fn template_homology() {
        let m = Manifest::rank_one(0, &[], 1, true, None)
            .validate()
            .unwrap();
        assert_eq!(
            homology_snf(&manifold_template(&m)).to_string(),
            "H0=Z, H2=Z, H4=Z, H6=Z"
        );
        let m = Manifest::general(2, 1, &[(5, 1), (7, 2)], 1)
            .validate()
            .unwrap();
        assert_eq!(homology_snf(&manifold_template(&m)), homology_of(&m));
    }

    #[test]
    fn signatures() {
        assert_ne!(
            module_signature(&e("Sig^2 CP3")),
            module_signature(&e("Sig^2 V3"))
        );
        assert_eq!(
            distinguishing_invariant(&e("Sig^2 CP3"), &e("Sig^2 V3")),
            Some(Invariant::P1)
        );
        assert_eq!(
            distinguishing_invariant(&e("S^4 u_eta3 e^8"), &e("S^4 v S^8")),
            Some(Invariant::TSecondary)
        );
        assert_eq!(
            module_signature(&e("S^4 v S^6")),
            module_signature(&e("S^4 v S^6"))
        );
        assert_eq!(
            distinguishing_invariant(&e("S^4"), &e("S^5")),
            Some(Invariant::Homology)
        );
        assert_eq!(
            distinguishing_invariant(&e("S^4 v S^6"), &e("Sig^2 CP2")),
            Some(Invariant::Sq2)
        );
    }

    #[test]
    fn wedge_ranks_add() {
        let m = model(&e("3*Sig^2 CP2 v Sig Wd"));
        assert_eq!(m.op_rank(Op::Sq2, 4), 4);
        let sig = module_signature(&e("Sig Wd"));
        assert!(sig.unknown_targets.contains(&8));
    }

    #[test]
    fn verify_examples() {
        let m = Manifest::rank_one(0, &[], 1, true, None)
            .validate()
            .unwrap();
        let r = verify_decomposition(&m, &e("Sig^2 CP3"));
        assert!(r.passed(), "{r}");
        let r = verify_decomposition(&m, &e("Sig^2 V3"));
        assert_eq!(r.get("homology").unwrap().status, Status::Pass);
        assert_eq!(r.failed(), vec!["p1"]);
        let r = verify_decomposition(&m, &SpaceExpr::point());
        assert_eq!(r.get("homology").unwrap().status, Status::Fail);
    }

    #[test]
    fn faults_are_caught() {
        let cases = [
            Manifest::rank_one(1, &[(5, 1)], 7, true, None),
            Manifest::rank_one(0, &[(7, 1)], 3, true, None),
            Manifest::rank_one(0, &[], 2, false, None),
            Manifest::rank_one(0, &[], 4, true, Some(0)),
            Manifest::rank_one(0, &[], 0, true, Some(1)),
            Manifest::general(3, 1, &[(5, 2)], 2),
        ];
        for raw in cases {
            let m = raw.validate().unwrap();
            assert!(verify_decomposition(&m, &double_suspension(&m).0).passed());
            for f in Fault::ALL {
                if let Some(bad) = inject_fault(&m, f) {
                    assert!(
                        !verify_decomposition(&m, &bad).passed(),
                        "{f} not caught on {m:?}"
                    );
                }
            }
        }
    }
}
