//! Replays every `$ angulated ...` line of the README's console blocks and
//! compares stdout followed by stderr with the lines printed under it.

use std::process::Command;

struct Example {
    args: Vec<String>,
    expected: String,
}

fn examples(readme: &str) -> Vec<Example> {
    let mut out: Vec<Example> = Vec::new();
    let mut in_console = false;
    for line in readme.lines() {
        if line.starts_with("```") {
            in_console = line == "```console";
            continue;
        }
        if !in_console {
            continue;
        }
        if let Some(cmd) = line.strip_prefix("$ angulated ") {
            out.push(Example { args: cmd.split_whitespace().map(String::from).collect(), expected: String::new() });
        } else if let Some(ex) = out.last_mut() {
            ex.expected.push_str(line);
            ex.expected.push('\n');
        }
    }
    out
}

#[test]
fn readme_examples_reproduce() {
    let readme = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../README.md")).unwrap();
    let examples = examples(&readme);
    assert!(examples.len() >= 20, "found only {} examples", examples.len());
    for ex in examples {
        let out = Command::new(env!("CARGO_BIN_EXE_angulated")).args(&ex.args).output().unwrap();
        let got = format!("{}{}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr));
        assert_eq!(got, ex.expected, "angulated {}", ex.args.join(" "));
    }
}
