//! Running command-line jobs in-process.
use irrational_toric::io::cli::{run, Command, Job, Options};
use irrational_toric::Result;
use serde_json::json;

fn main() -> Result<()> {
    let jobs = [
        (Command::Dual, json!({ "dim": 2, "generators": [[2, -1], [0, 1]] })),
        (Command::SecondaryPolytope, json!({ "points": [[0], [1], [2]] })),
        (Command::IsComplete, json!({ "dim": 2, "cones": [[[1, 0], [0, 1]], [[1, 0], [2, -1]]] })),
    ];
    for (command, input) in jobs {
        let out = run(&Job { command, input: Some(input), options: Options::default() })?;
        println!("{command:?}: {}", out.json);
    }
    let err = run(&Job {
        command: Command::CheckFan,
        input: Some(json!({ "dim": 2, "cones": [[[1, 0], [0, 1]], [[1, 1], [-1, 1]]] })),
        options: Options::default(),
    })
    .unwrap_err();
    println!("check-fan: {err} (exit {})", err.exit_code());
    Ok(())
}
