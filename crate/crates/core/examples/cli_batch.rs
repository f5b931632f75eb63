//! Driving the command-line interface from code, including batch mode.
use susp6::cli::run;

pub fn main() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/manifests");
    for args in [
        vec!["susp6", "decompose", "--batch", dir],
        vec!["susp6", "k", "--batch", dir],
        vec!["susp6", "verify", "--batch", dir],
        vec!["susp6", "pi", "P^5(7)", "7"],
        vec![
            "susp6",
            "--json",
            "decompose",
            "--trace",
            &format!("{dir}/v3_torsion.json"),
        ],
    ] {
        let out = run(&args);
        println!(
            "$ {} (exit {})\n{}\n",
            args[1..].join(" "),
            out.code,
            out.text
        );
    }
}
