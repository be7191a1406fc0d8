use std::fs;
use std::process::{Command, Output};

fn pyramid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pyramid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn exact_pyramid_volumes() {
    let o = pyramid(&[
        "volume", "--figure", "pyramid", "--n", "2", "--method", "exact",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1/3");
    let o = pyramid(&[
        "volume", "--figure", "pyramid", "--n", "0", "--method", "exact",
    ]);
    assert_eq!(stdout(&o).trim(), "1");
    let o = pyramid(&[
        "volume", "--figure", "cube", "--n", "4", "--method", "exact",
    ]);
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn mc_volume_prints_estimate_and_stderr() {
    let o = pyramid(&[
        "volume",
        "--figure",
        "pyramid",
        "--n",
        "2",
        "--method",
        "mc",
        "--samples",
        "20000",
        "--seed",
        "3",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut parts = text.split_whitespace();
    let est: f64 = parts.next().unwrap().parse().unwrap();
    assert_eq!(parts.next(), Some("+/-"));
    let se: f64 = parts.next().unwrap().parse().unwrap();
    assert!((est - 1.0 / 3.0).abs() <= 4.0 * se);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        pyramid(&["volume", "--figure", "sphere", "--n", "2", "--method", "exact"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        pyramid(&["verify", "cuboids", "--n", "7"]).status.code(),
        Some(2)
    );
    assert_eq!(
        pyramid(&["volume", "--figure", "cube", "--n", "9", "--method", "exact"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        pyramid(&[
            "render",
            "--n",
            "2",
            "--projection",
            "octahedral",
            "--out",
            "/tmp/x.svg"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(pyramid(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn tessellation_json_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = pyramid(&[
        "verify",
        "tessellation",
        "--n",
        "2",
        "--samples",
        "3000",
        "--seed",
        "1",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_slice(&fs::read(&path).unwrap()).unwrap();
    assert_eq!(v["exact_volume_each"], serde_json::json!(["1", "3"]));
    assert_eq!(v["cover_violations"], 0);
    assert_eq!(v["per_region_hits"].as_array().unwrap().len(), 3);
}

#[test]
fn identical_arguments_give_identical_reports() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let p = dir.path().join(name);
        let o = pyramid(&[
            "verify",
            "cuboids",
            "--n",
            "2",
            "--samples",
            "200",
            "--seed",
            "9",
            "--json",
            p.to_str().unwrap(),
        ]);
        assert!(o.status.success());
        fs::read(p).unwrap()
    };
    assert_eq!(run("a.json"), run("b.json"));
}

#[test]
fn decompose_writes_chain() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("chain.json");
    let o = pyramid(&["decompose", "--n", "2", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&fs::read(&path).unwrap()).unwrap();
    assert_eq!(v["label"], "cube");
    assert_eq!(v["ambient"], 3);
    let simplices = v["simplices"].as_array().unwrap();
    assert_eq!(simplices.len(), 6);
    assert_eq!(simplices[0]["vertices"].as_array().unwrap().len(), 4);
    assert_eq!(
        simplices[0]["vertices"][0][0],
        serde_json::json!(["0", "1"])
    );
}

#[test]
fn render_and_animate() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("f.svg");
    let o = pyramid(&[
        "render",
        "--n",
        "2",
        "--projection",
        "roots2d",
        "--t",
        "0.25",
        "--out",
        svg.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let text = fs::read_to_string(&svg).unwrap();
    assert_eq!(text.matches("<line ").count(), 12 + 4 + 3 + 4);

    let obj = dir.path().join("f.obj");
    let o = pyramid(&[
        "render",
        "--n",
        "3",
        "--projection",
        "axes3d-favorite",
        "--format",
        "obj",
        "--out",
        obj.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(fs::read_to_string(&obj)
        .unwrap()
        .lines()
        .any(|l| l.starts_with("l ")));

    let frames = dir.path().join("frames");
    let o = pyramid(&[
        "animate",
        "--n",
        "3",
        "--projection",
        "roots3d",
        "--frames",
        "4",
        "--outdir",
        frames.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let mut names: Vec<String> = fs::read_dir(&frames)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(
        names,
        [
            "frame_0000.obj",
            "frame_0001.obj",
            "frame_0002.obj",
            "frame_0003.obj"
        ]
    );
}
