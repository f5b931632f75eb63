//! Checking a splitting with the cellular oracle.
use susp6::cohomology_oracle::{
    homology_snf, manifold_template, module_signature, verify_decomposition,
};
use susp6::decompose::double_suspension;
use susp6::manifold::Manifest;
use susp6::space_expr::SpaceExpr;

pub fn main() {
    let m = Manifest::general(3, 1, &[(5, 1), (11, 1)], 2)
        .validate()
        .unwrap();
    println!(
        "template homology: {}",
        homology_snf(&manifold_template(&m))
    );
    let (e, _) = double_suspension(&m);
    println!("{e}\n{}\n", verify_decomposition(&m, &e));

    let cp3 = Manifest::rank_one(0, &[], 1, true, None)
        .validate()
        .unwrap();
    let wrong: SpaceExpr = "Sig^2 V3".parse().unwrap();
    println!("{}\n", verify_decomposition(&cp3, &wrong));

    for s in ["Sig^2 CP3", "Sig^2 V3", "S^4 u_eta3 e^8", "S^4 v S^8"] {
        let e: SpaceExpr = s.parse().unwrap();
        println!("{s:<16} {}", module_signature(&e));
    }
}
