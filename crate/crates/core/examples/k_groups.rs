//! K and KO groups of wedges and of manifolds.
use susp6::abelian::PrimePower;
use susp6::ktheory::{bott, k_group, k_groups, k_of_manifold, moore_k, Theory};
use susp6::manifold::Manifest;
use susp6::space_expr::SpaceExpr;

pub fn main() {
    let row: Vec<String> = (0..8).map(|j| bott(Theory::KO, j).to_string()).collect();
    println!("KO^-j(pt), j = 0..7: {}", row.join(", "));

    let q = PrimePower::from_order(5).unwrap();
    for n in [5, 6] {
        println!("K^0(P^{n}(5)) = {}", moore_k(Theory::K, n, q, 0).unwrap());
    }

    let e: SpaceExpr = "Sig CP2 v S^4 v S^6".parse().unwrap();
    println!("{e}: {}", k_groups(&e));
    let v = k_group(&e, Theory::KO, 1).unwrap();
    for line in v.provenance_chain(Theory::KO, 1) {
        println!("  {line}");
    }

    for raw in [
        Manifest::rank_one(0, &[], 1, true, None),
        Manifest::general(2, 0, &[(5, 1)], 1),
        Manifest::general(0, 1, &[], 0),
    ] {
        let m = raw.validate().unwrap();
        println!("\n{}", k_of_manifold(&m).unwrap());
    }
}
