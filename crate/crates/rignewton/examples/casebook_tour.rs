//! Run the whole casebook and print each report, then the JSON form of
//! one case.
//!
//! Run with: cargo run -p rignewton --example casebook_tour

use rignewton::casebook::{run_all, run_case};

fn main() {
    for report in run_all() {
        let status = if report.passed() { "PASS" } else { "FAIL" };
        println!("[{status}] {}", report.case_id);
        for claim in &report.claims {
            let mark = if claim.pass { "ok " } else { "BAD" };
            println!(
                "   {mark} {} (expected {}, got {})",
                claim.description, claim.expected, claim.computed
            );
        }
    }

    println!("\nJSON report for tn-norm-one:");
    let report = run_case("tn-norm-one").unwrap();
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
}
