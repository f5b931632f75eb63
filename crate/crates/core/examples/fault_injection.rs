//! Corrupting the splitting on purpose and watching the verifier object.
use susp6::cohomology_oracle::{inject_fault, verify_decomposition, Fault};
use susp6::manifold::Manifest;

pub fn main() {
    let ms = [
        Manifest::rank_one(1, &[(5, 1)], 1, true, None),
        Manifest::rank_one(0, &[(7, 1)], 3, true, None),
        Manifest::rank_one(0, &[], 6, true, Some(1)),
        Manifest::general(3, 0, &[(5, 1)], 1),
    ];
    for raw in ms {
        let m = raw.validate().unwrap();
        for f in Fault::ALL {
            match inject_fault(&m, f) {
                None => println!("{f:<12} n/a"),
                Some(bad) => {
                    let r = verify_decomposition(&m, &bad);
                    println!("{f:<12} {bad}  ->  failed: {}", r.failed().join(", "));
                }
            }
        }
        println!();
    }
}
