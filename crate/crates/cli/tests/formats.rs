//! Regenerates every `golden` block of FORMATS.md and compares byte for byte.

use std::process::Command;

const FORMATS: &str = include_str!("../../../FORMATS.md");

/// The fenced block that starts on the line after `marker_line`.
fn block_after(lines: &[&str], marker_line: usize) -> String {
    let mut body = String::new();
    let start = marker_line + 1;
    assert!(lines[start].starts_with("```"), "marker on line {marker_line} is not followed by a code block");
    for l in &lines[start + 1..] {
        if l.starts_with("```") {
            return body;
        }
        body.push_str(l);
        body.push('\n');
    }
    panic!("unterminated code block after line {marker_line}");
}

#[test]
fn golden_blocks_match() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("input.json");
    let lines: Vec<&str> = FORMATS.lines().collect();
    let mut checked = 0;
    for (i, l) in lines.iter().enumerate() {
        if *l == "<!-- input -->" {
            std::fs::write(&input, block_after(&lines, i)).unwrap();
        } else if let Some(args) = l.strip_prefix("<!-- golden: ").and_then(|r| r.strip_suffix(" -->")) {
            let args: Vec<String> = args
                .split(' ')
                .map(|a| if a == "INPUT" { input.to_str().unwrap().to_string() } else { a.to_string() })
                .collect();
            let out = Command::new(env!("CARGO_BIN_EXE_lkb")).args(&args).output().unwrap();
            assert_eq!(out.status.code(), Some(0), "{args:?}");
            assert_eq!(String::from_utf8(out.stdout).unwrap(), block_after(&lines, i), "lkb {}", args.join(" "));
            checked += 1;
        }
    }
    assert_eq!(checked, 7);
}
