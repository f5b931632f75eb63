//! Smith normal form and finitely generated abelian groups.
use susp6::abelian::{cokernel, primary_decomposition, snf, FgAbGroup, IntMatrix};

pub fn main() {
    let a = IntMatrix::from_rows(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]]);
    let s = snf(&a);
    println!("A = {:?}", a);
    println!("invariant factors: {:?}", s.invariant_factors());
    assert_eq!(&(&s.u * &a) * &s.v, s.d);
    println!("coker A = {}", cokernel(&a));

    let g = primary_decomposition([0, 0, 12, 45]);
    println!("Z^2 + Z/12 + Z/45 = {g}");
    println!("5-primary part: {}", g.p_primary(5));
    println!("odd torsion: {}", g.odd_torsion());

    let t = FgAbGroup::from_pairs(0, &[(5, 1), (5, 2), (7, 1)]).unwrap();
    println!("T = {t}, |T| = {}", t.torsion_order());
}
