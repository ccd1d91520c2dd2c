//! Driving a sweep from a config and replaying it from the CSV it wrote.
//!
//! Every CSV carries the config that produced it in a `# config:` line, so a
//! result file doubles as its own recipe.
//!
//! ```text
//! cargo run --release --example reproducible_sweep
//! ```

use casimir::cli::{cmd_sweep, CliError, RunConfig};

fn main() -> Result<(), CliError> {
    let config = RunConfig::parse(
        r#"{
            "mode": "lifshitz",
            "b": 3.0,
            "model": { "kind": "drude-gain", "omega0": 10.0 },
            "sweep": { "from": 3.0, "to": 5.0, "points": 9 }
        }"#,
    )?;
    let csv = cmd_sweep(&config)?.to_csv();
    print!("{csv}");

    let replayed = RunConfig::parse(&csv)?;
    let again = cmd_sweep(&replayed)?.to_csv();
    println!("\nreplay identical: {}", again == csv);
    Ok(())
}
