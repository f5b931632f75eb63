//! Loading and validating manifold manifests.
use std::path::Path;

use susp6::manifold::Manifest;

pub fn main() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/manifests");
    let mut files: Vec<_> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    files.extend(
        std::fs::read_dir(dir.join("invalid"))
            .unwrap()
            .map(|e| e.unwrap().path()),
    );
    files.sort();
    for p in files
        .iter()
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
    {
        let name = p.strip_prefix(&dir).unwrap().display();
        match Manifest::load(p) {
            Err(e) => println!("{name}: {e}"),
            Ok(raw) => match raw.validate() {
                Ok(m) => println!(
                    "{name}: d={} m={} c={} T={} H = {}",
                    m.d(),
                    m.m(),
                    m.c(),
                    m.torsion(),
                    m.homology()
                ),
                Err(e) => println!("{name}: {e}"),
            },
        }
    }

    // the same thing built in code
    let m = Manifest::general(3, 1, &[(5, 1)], 2).validate().unwrap();
    println!("{}", m.to_manifest().to_json());
}
