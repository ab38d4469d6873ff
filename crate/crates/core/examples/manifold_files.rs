//! Manifold files and the command-line interface, driven in-process.
//!
//!     cargo run --example manifold_files

use heegaard_cs::cli::{parse_manifold, run, ManifoldFile};
use heegaard_cs::GluingData;

fn main() {
    let dir = std::env::temp_dir().join("heegaard-cs-example");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("lens_9_2.json");

    let g = GluingData::lens(9, 2).unwrap();
    let file = ManifoldFile::from_gluing(&g, Some("L(9,2)".into())).unwrap();
    std::fs::write(&path, file.to_canonical_string()).unwrap();
    print!("{}", std::fs::read_to_string(&path).unwrap());

    let (parsed, data) = parse_manifold(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(parsed, file);
    assert_eq!(data, g);

    let path = path.to_str().unwrap();
    for args in [
        vec!["validate", path],
        vec!["homology", path],
        vec!["partition", path, "--theory", "cs", "--level", "2", "--numeric"],
        vec!["oracle", path, "--level", "2"],
    ] {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("heegaard-cs").chain(args.iter().copied()), &mut out, &mut err);
        println!("$ heegaard-cs {}  -> exit {code}", args.join(" "));
        print!("{}", String::from_utf8_lossy(&out));
    }
}
