//! Parsing, normalizing and taking homology of wedge expressions.
use susp6::abelian::FgAbGroup;
use susp6::space_expr::{moore_split, SpaceExpr};

pub fn main() {
    let e: SpaceExpr = "Sig^2 CP2 v S^5 v Sig P^4(5) v Sig^3 S^2 v Sig S^4 u_0 e^8"
        .parse()
        .unwrap();
    println!("normalized: {e}");
    println!("homology:   {}", e.homology());
    println!("euler:      {}", e.euler());
    println!("suspended:  {}", e.suspend(1));

    let t = FgAbGroup::from_pairs(0, &[(5, 1), (7, 2)]).unwrap();
    println!("P^6(T) = {}", moore_split(&t, 6).unwrap());

    let again: SpaceExpr = e.to_string().parse().unwrap();
    assert_eq!(again, e);
}
