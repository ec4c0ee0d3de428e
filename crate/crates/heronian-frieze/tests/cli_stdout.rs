//! The binary must behave as a Unix filter: a reader that goes away
//! mid-output (`render … | head`) is a normal termination, not a panic.

use std::process::{Command, Stdio};

#[test]
fn broken_stdout_pipe_is_not_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let polygon = dir.path().join("octagon.json");
    let binary = env!("CARGO_BIN_EXE_heronian-frieze");
    assert!(Command::new(binary)
        .args(["gen", "--n", "8", "--seed", "1", "-o", polygon.to_str().unwrap()])
        .status()
        .unwrap()
        .success());

    // A consumer that exits immediately leaves the write end of its stdin
    // pipe pointing at a closed reader, so every later write sees EPIPE.
    let mut consumer = Command::new("true").stdin(Stdio::piped()).spawn().unwrap();
    let closed_pipe = consumer.stdin.take().unwrap();
    consumer.wait().unwrap();

    let output = Command::new(binary)
        .args(["render", polygon.to_str().unwrap(), "--format", "json"])
        .stdout(Stdio::from(closed_pipe))
        .stderr(Stdio::piped())
        .output()
        .unwrap();
    assert_eq!(
        output.status.code(),
        Some(0),
        "a broken pipe is a success, not a failure"
    );
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(
        !stderr.contains("panic"),
        "no panic may reach stderr: {stderr}"
    );
}
