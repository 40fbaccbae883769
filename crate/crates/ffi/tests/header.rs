use std::path::PathBuf;
use std::process::Command;

fn header() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include/d21.h")
}

#[test]
fn header_declares_every_export() {
    let h = std::fs::read_to_string(header()).unwrap();
    let src = std::fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("src/lib.rs")).unwrap();
    let exports: Vec<&str> = src
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .filter_map(|l| l.split('(').next())
        .collect();
    assert!(exports.len() >= 14);
    for f in exports {
        assert!(h.contains(&format!("{f}(")), "{f} missing from header");
    }
    assert!(h.contains("typedef struct D21Symbol D21Symbol;"));
    assert!(h.contains("D21_STATUS_OK = 0"));
}

#[test]
fn header_compiles_as_c_and_cpp() {
    let probe = "#include \"d21.h\"\nint main(void) { D21Symbol *s = 0; return d21_symbol_parse(\"t\", &s) == D21_STATUS_OK ? 0 : 1; }\n";
    let dir = tempfile_dir();
    std::fs::write(dir.join("probe.c"), probe).unwrap();
    let inc = header().parent().unwrap().to_path_buf();
    for (cc, extra) in [("cc", vec!["-std=c99"]), ("c++", vec!["-x", "c++"])] {
        let out = Command::new(cc)
            .args(&extra)
            .args(["-fsyntax-only", "-Wall", "-Werror", "-I"])
            .arg(&inc)
            .arg(dir.join("probe.c"))
            .output()
            .expect("a C compiler on PATH");
        assert!(out.status.success(), "{cc}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

fn tempfile_dir() -> PathBuf {
    let d = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("d21-ffi-header");
    std::fs::create_dir_all(&d).unwrap();
    d
}
