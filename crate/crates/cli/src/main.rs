// Copyright 2026 The qhash Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use std::process::ExitCode;

use clap::Parser;

use qhash_cli::{render, run, Cli, EXIT_INVALID};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(outcome) => outcome,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(EXIT_INVALID as u8);
        }
    };
    if !cli.quiet {
        for warning in &outcome.document.warnings {
            eprintln!("warning: {warning}");
        }
    }
    let text = render(&outcome.document);
    match &cli.out {
        Some(path) => {
            if let Err(err) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {err}", path.display());
                return ExitCode::from(EXIT_INVALID as u8);
            }
        }
        None => print!("{text}"),
    }
    if outcome.exit_code != 0 && !cli.quiet {
        for check in outcome.document.outputs["checks"]
            .as_array()
            .into_iter()
            .flatten()
        {
            if check["passed"] == false {
                eprintln!("check failed: {}", check["name"].as_str().unwrap_or("?"));
            }
        }
    }
    ExitCode::from(outcome.exit_code as u8)
}
