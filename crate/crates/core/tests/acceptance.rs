//! One line per reproduction criterion; exits non-zero if any criterion fails.

use std::process::ExitCode;

use autinv_core::field::Kernel;
use autinv_core::workbench::Verifier;

fn main() -> ExitCode {
    let verifier = Verifier::new(Kernel::BitPacked).expect("corpus loads");
    let results = verifier.run_all();
    for r in &results {
        println!("{r}");
    }
    let failed: Vec<usize> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    if failed.is_empty() {
        println!("acceptance: {} of {} criteria passed", results.len(), results.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
