//! Runs the `turan` binary end to end.

use std::path::Path;
use std::process::{Command, Output};

use turan::format::certificate::certificate_to_string;
use turan::format::graph::{parse_enumeration, parse_graph};
use turan::format::sdp::parse_sdp;
use turan_core::constructions::{b_rec, build, ConstructionSpec};
use turan_core::enumerate::enumerate_free;
use turan_core::linalg::SymMatrix;
use turan_core::numeric::int;
use turan_core::sdp::{assemble, default_types, TypeSpec};
use turan_core::{Family, Hypergraph3, NamedGraph};

fn turan(args: &[&str]) -> Output {
    turan_env(args, None)
}

fn turan_env(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_turan"));
    cmd.args(args).env_remove("TURAN_CACHE_DIR");
    if let Some(dir) = cache {
        cmd.env("TURAN_CACHE_DIR", dir);
    }
    cmd.output().expect("run turan")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Value of `key` in TSV output.
fn field(o: &Output, key: &str) -> String {
    stdout(o)
        .lines()
        .find_map(|l| l.strip_prefix(&format!("{key}\t")).map(str::to_string))
        .unwrap_or_else(|| panic!("no `{key}` in {}", stdout(o)))
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn enumerate_reparses_to_the_same_keys() {
    let o = turan(&["enumerate", "--m", "5", "--forbid", "C4_3,F5_BAR"]);
    assert!(o.status.success());
    let listed = parse_enumeration(&stdout(&o)).unwrap();
    let fam = Family::named(&[NamedGraph::C4_3, NamedGraph::F5Bar]);
    let expected = enumerate_free(5, &fam).unwrap();
    let keys = |gs: &[Hypergraph3]| gs.iter().map(|g| g.canon_key().clone()).collect::<Vec<_>>();
    assert_eq!(keys(&listed), keys(&expected));
    assert!(stdout(&o).ends_with(&format!("count {}\n", expected.len())));
}

#[test]
fn emit_sdp_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m5.sdp");
    let o = turan(&["emit-sdp", "--m", "5", "--forbid", "C4_3,F5_BAR", "--out", path_str(&path)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let fam = Family::named(&[NamedGraph::C4_3, NamedGraph::F5Bar]);
    let model = assemble(5, &fam, &default_types(5, &fam)).unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(parse_sdp(&text).unwrap(), model);
    assert_eq!(field(&o, "constraints"), model.constraint_count().to_string());

    // Same bytes with one worker or several, and through the cache.
    let cache = dir.path().join("cache");
    for args in [vec!["--jobs", "1"], vec!["--jobs", "3"]] {
        let mut all = vec!["emit-sdp", "--m", "5", "--forbid", "C4_3,F5_BAR"];
        all.extend(args);
        let again = turan_env(&all, Some(&cache));
        assert_eq!(stdout(&again), text);
    }
    assert!(std::fs::read_dir(&cache).unwrap().count() >= 3);
}

#[test]
fn lp_pipeline_and_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let sdp = dir.path().join("lp.sdp");
    let o = turan(&["emit-sdp", "--m", "4", "--forbid", "C4_3", "--types", "none", "--out", path_str(&sdp)]);
    assert_eq!(field(&o, "lp_bound"), "3/4");
    assert_eq!(field(&o, "block_sizes"), "-5");

    // Targets in key order have 0, 3, 2, 1 edges; a solver would report
    // slacks u - obj and u = 3/4, slightly perturbed.
    let sol = dir.path().join("sol.txt");
    std::fs::write(&sol, "0.75 1e-12 0.25000001 0.4999999 0.7500000001\n").unwrap();
    let cert = dir.path().join("cert.txt");
    let o = turan(&["round", "--sdp", path_str(&sdp), "--solution", path_str(&sol), "--denominator", "1000", "--out", path_str(&cert)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));

    let o = turan(&["verify", "--cert", path_str(&cert)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("VERIFIED bound="), "{}", stdout(&o));

    let text = std::fs::read_to_string(&cert).unwrap();
    let lowered = text.lines().map(|l| if l.starts_with("bound") { "bound 7/10" } else { l }).collect::<Vec<_>>().join("\n");
    std::fs::write(&cert, lowered).unwrap();
    let o = turan(&["verify", "--cert", path_str(&cert)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("REJECTED"));
}

#[test]
fn sos_certificate_from_file() {
    let fam = Family::named(&[NamedGraph::C4_3]);
    let model = assemble(4, &fam, &[TypeSpec { sigma: Hypergraph3::empty(2), flag_size: 3 }]).unwrap();
    let q = SymMatrix::from_rows(&[vec![int(1), int(-1)], vec![int(-1), int(1)]]).unwrap();
    let cert = model.certificate_for(vec![q], None).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sos.txt");
    std::fs::write(&path, certificate_to_string(&cert)).unwrap();
    let o = turan(&["verify", "--cert", path_str(&path)]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().next().unwrap(), format!("VERIFIED bound={}", cert.bound));

    let broken = certificate_to_string(&cert).replace("1 -1\n", "1 2\n");
    std::fs::write(&path, broken).unwrap();
    let o = turan(&["verify", "--cert", path_str(&path)]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "REJECTED block 0 is not PSD\n");
}

#[test]
fn construct_report_and_emit() {
    let o = turan(&["construct", "--kind", "brec", "--n", "1000", "--report"]);
    assert_eq!(field(&o, "b_rec"), b_rec(1000).value.to_string());
    assert!(field(&o, "limit").starts_with("0.46410161513775458705"));

    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("p.txt");
    let o = turan(&["construct", "--kind", "partite3", "--sizes", "3,4,5", "--emit", path_str(&g), "--check", "F32,C5_3_MINUS"]);
    assert!(o.status.success());
    assert_eq!(field(&o, "free"), "true");
    let built = parse_graph(&std::fs::read_to_string(&g).unwrap()).unwrap();
    assert_eq!(built, build(&ConstructionSpec::Partite3([3, 4, 5])).unwrap());

    let o = turan(&["construct", "--kind", "brec", "--n", "9", "--splits", "6,2", "--check", "C4_3,F5_BAR"]);
    assert_eq!(field(&o, "free"), "true");
    let o = turan(&["construct", "--kind", "brec", "--n", "9", "--splits", "3"]);
    assert_eq!(o.status.code(), Some(1));
    let o = turan(&["construct", "--kind", "k4", "--n", "4", "--check", "F5_BAR,C4_3"]);
    assert_eq!(field(&o, "free"), "false");
    assert_eq!(field(&o, "violation_vertices"), "0,1,2,3");
}

#[test]
fn fact21_subcommands() {
    let o = turan(&["construct", "--fact21-point", "1/2"]);
    assert_eq!(field(&o, "first_holds"), "true");
    assert_eq!(field(&o, "second_holds"), "false");
    let o = turan(&["construct", "--fact21-point", "1/2", "--center", "optimizer"]);
    assert_eq!(field(&o, "second_holds"), "true");
    let o = turan(&["construct", "--fact21-grid", "1000", "--center", "optimizer"]);
    assert_eq!(field(&o, "argmax_x1"), "317/500");
    assert_eq!(field(&o, "first_violations"), "0");
    assert_eq!(field(&o, "second_violations"), "0");
}

#[test]
fn density_queries() {
    let dir = tempfile::tempdir().unwrap();
    let h = dir.path().join("h.txt");
    let f = dir.path().join("f.txt");
    std::fs::write(&h, "n 4\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n").unwrap();
    std::fs::write(&f, "n 3\n0 1 2\n").unwrap();
    let o = turan(&["density", "--graph", path_str(&h), "--of", path_str(&f)]);
    assert_eq!(field(&o, "edge_density"), "1");
    assert_eq!(field(&o, "p"), "1");
    let o = turan(&["density", "--graph", path_str(&h), "--m", "3"]);
    let out = stdout(&o);
    let ps: Vec<&str> = out.lines().filter(|l| l.starts_with("p\t")).map(|l| l.rsplit('\t').next().unwrap()).collect();
    assert_eq!(ps, ["0", "1"]);

    let o = turan(&["density", "--type", "01", "--flag-size", "3", "--m", "5", "--forbid", "C4_3,F5_BAR"]);
    assert!(o.status.success());
    let table = turan::format::table::parse_table(&stdout(&o)).unwrap();
    let fam = Family::named(&[NamedGraph::C4_3, NamedGraph::F5Bar]);
    let direct = turan_core::density::PairDensityTable::build(&Hypergraph3::empty(1), 3, 5, &fam).unwrap();
    assert_eq!(table, direct);
}

#[test]
fn partition_is_deterministic_and_accounted() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.txt");
    turan(&["construct", "--kind", "semibipartite", "--sizes", "6,3", "--emit", path_str(&g)]);
    let run = |jobs: &str| turan(&["partition", "--graph", path_str(&g), "--analyze", "--seed", "4", "--jobs", jobs]);
    let (a, b) = (run("1"), run("4"));
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(field(&a, "bad"), "0");
    assert_eq!(field(&a, "missing"), "0");
    assert_eq!(field(&a, "mu_lower"), field(&a, "mu_exact"));

    let o = turan(&["partition", "--graph", path_str(&g), "--analyze", "--v1", "0,1,2,3,4", "--list"]);
    let bad = stdout(&o).lines().filter(|l| l.starts_with("bad_edge\t")).count();
    assert_eq!(field(&o, "bad"), bad.to_string());
    assert_eq!(field(&o, "locally_maximal"), "false");
    let o = turan(&["partition", "--graph", path_str(&g), "--v1", "0,99"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn config_file_and_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let conf = dir.path().join("turan.conf");
    std::fs::write(&conf, "family = C4_3\nm = 5\n").unwrap();
    let o = turan(&["--config", path_str(&conf), "enumerate"]);
    assert_eq!(parse_enumeration(&stdout(&o)).unwrap().len(), enumerate_free(5, &Family::named(&[NamedGraph::C4_3])).unwrap().len());
    let o = turan(&["--config", path_str(&conf), "enumerate", "--m", "4"]);
    assert_eq!(parse_enumeration(&stdout(&o)).unwrap().len(), 4);
    std::fs::write(&conf, "colour = blue\n").unwrap();
    assert_eq!(turan(&["--config", path_str(&conf), "enumerate", "--m", "3"]).status.code(), Some(1));
}

#[test]
fn exit_codes() {
    assert_eq!(turan(&["enumerate", "--m", "4", "--forbid", "NOPE"]).status.code(), Some(1));
    assert_eq!(turan(&["enumerate", "--m", "8"]).status.code(), Some(1));
    assert_eq!(turan(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(turan(&["verify"]).status.code(), Some(2));
    assert_eq!(turan(&["emit-sdp", "--forbid", "C4_3"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "n 3\n0 1\n").unwrap();
    let o = turan(&["partition", "--graph", path_str(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(turan(&["verify", "--cert", path_str(&dir.path().join("missing.txt"))]).status.code(), Some(1));
}

#[test]
fn human_output() {
    let o = turan(&["--human", "construct", "--kind", "k4", "--n", "8", "--report"]);
    assert!(stdout(&o).lines().any(|l| l.starts_with("edges:") && l.ends_with(" 32")));
}
