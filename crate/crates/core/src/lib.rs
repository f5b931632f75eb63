//! Double-suspension splittings of simply connected closed 6-manifolds whose
//! torsion has no 2- or 3-primary part, with K/KO-groups and an independent
//! cellular verifier.
//!
//! ```
//! use susp6::manifold::Manifest;
//! use susp6::decompose::double_suspension;
//!
//! let m = Manifest::rank_one(0, &[], 3, true, None).validate().unwrap();
//! assert_eq!(double_suspension(&m).0.to_string(), "Sig^2 V3");
//! ```

pub mod abelian;
pub mod cli;
pub mod cohomology_oracle;
pub mod decompose;
pub mod homotopy_tables;
pub mod ktheory;
pub mod manifold;
pub mod space_expr;
