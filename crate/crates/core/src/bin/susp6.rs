fn main() {
    let out = susp6::cli::run(std::env::args_os());
    if out.code <= 1 {
        println!("{}", out.text);
    } else {
        eprintln!("{}", out.text);
    }
    std::process::exit(out.code);
}
