//! Deciding Σ²M ≃ Σ²M' when H^2 = Z.
use susp6::cohomology_oracle::distinguishing_invariant;
use susp6::decompose::{classify, compare, double_suspension};
use susp6::manifold::{Manifest, ManifoldInvariants};

fn d1(k: i64, spin: bool, lambda: Option<u8>) -> ManifoldInvariants {
    Manifest::rank_one(0, &[], k, spin, lambda)
        .validate()
        .unwrap()
}

pub fn main() {
    let ms = [
        d1(1, true, None),
        d1(-7, true, None),
        d1(3, true, None),
        d1(2, false, None),
        d1(4, true, Some(0)),
        d1(0, true, Some(1)),
    ];
    for a in &ms {
        println!(
            "{:?}: {}",
            classify(a).branch.unwrap(),
            double_suspension(a).0
        );
    }
    println!();
    for (i, a) in ms.iter().enumerate() {
        for b in &ms[i + 1..] {
            let same = compare(a, b).unwrap();
            let why = distinguishing_invariant(&double_suspension(a).0, &double_suspension(b).0);
            let (ka, kb) = (a.rank_one().unwrap().k, b.rank_one().unwrap().k);
            match why {
                Some(inv) if !same => println!("k={ka} vs k={kb}: DISTINCT by {inv}"),
                _ => println!("k={ka} vs k={kb}: EQUIVALENT"),
            }
        }
    }
}
