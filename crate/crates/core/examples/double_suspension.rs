//! Single and double suspension splittings, with the derivation trace.
use susp6::decompose::{double_suspension, stage, suspension_splitting, Stage};
use susp6::manifold::Manifest;

pub fn main() {
    let cases = [
        Manifest::rank_one(0, &[], 1, true, None),
        Manifest::rank_one(1, &[(5, 1)], 3, true, None),
        Manifest::rank_one(0, &[], 2, false, None),
        Manifest::rank_one(0, &[], 0, true, Some(1)),
        Manifest::general(3, 2, &[(7, 1)], 0),
        Manifest::general(3, 0, &[], 3),
        Manifest::general(4, 1, &[(5, 2)], 2),
        Manifest::general(0, 1, &[], 0),
    ];
    for raw in cases {
        let m = raw.validate().unwrap();
        let (e, _) = double_suspension(&m);
        println!("ΣM  = {}", suspension_splitting(&m));
        println!("Σ²M = {e}\n");
    }

    let m = Manifest::general(2, 1, &[(5, 1)], 1).validate().unwrap();
    let (_, trace) = double_suspension(&m);
    print!("{trace}");
    for s in [Stage::M3, Stage::M5, Stage::SigmaM5, Stage::Sigma2V] {
        println!("{s:?}: {}", stage(&m, s));
    }
}
