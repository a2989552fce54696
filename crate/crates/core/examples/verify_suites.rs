//! Runs every oracle-equivalence suite, as `grand verify` does.

use grand::verify::{run_all, VerifyOptions};

fn main() -> grand::Result<()> {
    let reports = run_all(&VerifyOptions::default())?;
    for r in &reports {
        println!("{r}");
    }
    if reports.iter().any(|r| !r.passed()) {
        std::process::exit(2);
    }
    Ok(())
}
