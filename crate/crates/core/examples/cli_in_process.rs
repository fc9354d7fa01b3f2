//! Driving the command-line interface from code, output captured in memory.
//!
//! ```bash
//! cargo run --example cli_in_process
//! ```

use aopoly::cli::run;

fn main() {
    let runs: [&[&str]; 4] = [
        &[
            "aopoly", "eval", "--family", "meixner", "--beta", "1", "--c", "0.5", "--gamma", "0",
            "--x", "1", "--n", "2",
        ],
        &[
            "aopoly", "table", "--family", "charlier", "--a", "1", "--gamma", "0.5", "--x-grid",
            "0:1:0.5", "--n-max", "3", "--output", "json",
        ],
        &[
            "aopoly", "gf-check", "--family", "laguerre", "--alpha", "0.5", "--gamma", "0.9",
            "--x", "1.2",
        ],
        &[
            "aopoly", "eval", "--family", "meixner", "--beta", "1", "--c", "0", "--gamma", "0",
            "--x", "1", "--n", "2",
        ],
    ];
    for args in runs {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(args.iter().copied(), &mut out, &mut err);
        println!("$ {}", args.join(" "));
        print!("{}", String::from_utf8_lossy(&out));
        print!("{}", String::from_utf8_lossy(&err));
        println!("exit {code}\n");
    }
}
