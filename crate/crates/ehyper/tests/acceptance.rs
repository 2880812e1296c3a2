//! Runs every acceptance criterion and prints one line per criterion.
//! Tolerances and time limits live in `ehyper::acceptance`.

use ehyper::acceptance::{run_suite, SuiteOptions};

fn main() {
    let opts = SuiteOptions::default();
    let results = match run_suite(&opts, |r| println!("{}", r.line())) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("acceptance: {e}");
            std::process::exit(2);
        }
    };
    let failed: Vec<u8> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    if failed.is_empty() {
        println!("acceptance: {} of {} criteria passed", results.len(), results.len());
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
