//! A small batch of trials written as CSV, as the `experiment` subcommand does.

use hamcolour::experiment::{run_experiment, to_csv, ExperimentConfig};

fn main() -> hamcolour::Result<()> {
    let config = ExperimentConfig::parse(
        "mode = adversary-audit\n\
         n = 12\n\
         alpha = 0.75\n\
         m = 2\n\
         trials = 5\n\
         seed = 1\n",
    )?;
    print!("{}", to_csv(&run_experiment(&config, 2)?));
    Ok(())
}
