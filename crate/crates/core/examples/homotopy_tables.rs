//! Homotopy groups of odd-primary Moore spaces, as far as they are tabulated.
use susp6::abelian::PrimePower;
use susp6::homotopy_tables::{pi_moore, smash_moore, suspension_on_pi6_p4, PiQuery};
use susp6::space_expr::Atom;

pub fn main() {
    for q in [5u64, 7, 25, 9] {
        let q = PrimePower::from_order(q).unwrap();
        for (n, k) in [(3, 3), (4, 4), (4, 5), (5, 7), (6, 8), (4, 6)] {
            println!("pi_{k}(P^{n}({q})) = {}", pi_moore(n, q, k).unwrap());
        }
    }
    let e = suspension_on_pi6_p4(PrimePower::from_order(5).unwrap()).unwrap();
    println!("E: {} -> {} is zero: {}", e.source, e.target, e.is_zero);
    println!(
        "P^4(5) ^ P^3(5) = {}",
        smash_moore(4, 3, PrimePower::from_order(5).unwrap()).unwrap()
    );

    let q = PiQuery::new(Atom::cp2().suspended(1), 6).unwrap();
    println!("pi_6(Sig CP2) = {}", q.evaluate().unwrap());
}
