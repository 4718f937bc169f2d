//! Runs every example binary that `cargo test` built alongside this test.

use std::path::PathBuf;
use std::process::Command;

const EXAMPLES: [&str; 9] = [
    "local_sim",
    "local_cuts",
    "exact_solvers",
    "dominating_set",
    "three_round",
    "vertex_cover",
    "generators",
    "minor_check",
    "experiment",
];

fn example_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(|deps| deps.parent()).unwrap().join("examples")
}

#[test]
fn examples_run_cleanly() {
    let dir = example_dir();
    let mut ran = 0;
    for name in EXAMPLES {
        let path = dir.join(format!("{name}{}", std::env::consts::EXE_SUFFIX));
        if !path.exists() {
            eprintln!("skipping {name}: not built with this test run");
            continue;
        }
        let out = Command::new(&path).output().unwrap();
        assert!(out.status.success(), "{name} failed:\n{}", String::from_utf8_lossy(&out.stderr));
        assert!(!out.stdout.is_empty(), "{name} printed nothing");
        ran += 1;
    }
    eprintln!("ran {ran} examples");
}

#[test]
fn example_list_is_complete() {
    let src = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples");
    let mut on_disk: Vec<String> = std::fs::read_dir(src)
        .unwrap()
        .filter_map(|e| e.unwrap().path().file_stem().map(|s| s.to_string_lossy().into_owned()))
        .collect();
    on_disk.sort();
    let mut listed: Vec<String> = EXAMPLES.iter().map(|s| s.to_string()).collect();
    listed.sort();
    assert_eq!(on_disk, listed);
}
