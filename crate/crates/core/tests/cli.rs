use std::path::PathBuf;
use std::process::{Command, Output};

fn config(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("configs").join(name)
}

fn nevlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nevlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn identities_on_the_conic_hold() {
    let out = nevlab(&[
        "verify",
        "identities",
        "--config",
        config("conic.toml").to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("identity,d,detail,residual"));
    let rows: Vec<&str> = lines.collect();
    assert!(rows.len() >= 6);
    assert!(rows.iter().all(|r| r.ends_with(",0")), "{text}");
}

#[test]
fn degenerate_curve_is_rejected() {
    let out = nevlab(&["check", "--config", config("degenerate.toml").to_str().unwrap()]);
    assert!(!out.status.success());
    let all = stdout(&out) + &stderr(&out);
    assert!(all.contains("image contained in a hyperplane"));
    assert!(all.contains("Wronskian vanishes identically"));

    let out = nevlab(&["sweep", "--config", config("degenerate.toml").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("Wronskian vanishes identically"));
}

#[test]
fn sweep_schema_and_determinism() {
    let path = config("line.toml");
    let args = ["sweep", "--config", path.to_str().unwrap()];
    let first = nevlab(&args);
    assert!(first.status.success(), "{}", stderr(&first));
    let text = stdout(&first);
    assert!(!text.contains('\r'));
    assert_eq!(
        text.lines().next(),
        Some("r,T_1,T_2,m_0,m_1,m_2,N_W,N_Ram,lhs,rhs,margin,converged")
    );
    assert_eq!(text.lines().count(), 31);
    assert!(text
        .lines()
        .skip(1)
        .all(|l| l.ends_with(",1") && l.split(',').count() == 12));
    assert_eq!(stdout(&nevlab(&args)), text);
}

#[test]
fn sweep_header_for_the_conic() {
    let out = nevlab(&["sweep", "--config", config("conic.toml").to_str().unwrap()]);
    assert_eq!(
        stdout(&out).lines().next(),
        Some("r,T_1,T_2,T_3,m_0,m_1,m_2,m_3,N_W,N_Ram,lhs,rhs,margin,converged")
    );
}

#[test]
fn verify_headers() {
    let path = config("ramified.toml");
    let cases = [
        ("cartan", "r,lhs,rhs,margin,cross_check,converged"),
        ("lemma55", "r,lhs,rhs,margin,converged"),
        ("prop62", "d,r,lhs,rhs,margin,route_margin,route_diff,converged"),
        ("growth", "d,r,lhs,rhs,margin,converged"),
        ("mcquillan", "r,lhs,rhs,margin,n_ram,converged"),
    ];
    for (name, header) in cases {
        let out = nevlab(&["verify", name, "--config", path.to_str().unwrap()]);
        assert!(out.status.success(), "{name}: {}", stderr(&out));
        assert_eq!(stdout(&out).lines().next(), Some(header), "{name}");
    }
}

#[test]
fn compute_writes_to_a_file() {
    let target = std::env::temp_dir().join(format!("nevlab-compute-{}.csv", std::process::id()));
    let out = nevlab(&[
        "compute",
        "--config",
        config("ramified.toml").to_str().unwrap(),
        "--r",
        "3",
        "--out",
        target.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).is_empty());
    let text = std::fs::read_to_string(&target).unwrap();
    std::fs::remove_file(&target).ok();
    assert!(text.starts_with("quantity,value\nr,3\n"));
    let n_ram = text.lines().find(|l| l.starts_with("N_Ram,")).unwrap();
    let value: f64 = n_ram[6..].parse().unwrap();
    assert!((value - 3f64.ln()).abs() < 1e-11);
}

#[test]
fn bad_configs_fail_with_positions() {
    let dir = std::env::temp_dir();
    let path = dir.join(format!("nevlab-bad-{}.toml", std::process::id()));
    std::fs::write(
        &path,
        "[curve]\ncoords = [\"1\", \"z\", \"z^2\"]\n\n[hyperplanes]\nforms = [[1, 0], [0, 1]]\n",
    )
    .unwrap();
    let out = nevlab(&["check", "--config", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 5"), "{}", stderr(&out));

    let out = nevlab(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}
