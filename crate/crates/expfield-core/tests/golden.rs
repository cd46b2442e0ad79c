//! Golden reports for the bundled corpus: every `.efd` document is
//! exercised by at least one command whose JSON report is pinned under
//! corpus/golden/. Regenerate with EXPFIELD_BLESS=1.

use std::fs;
use std::path::PathBuf;

use expfield_core::cli::{execute, Options};
use expfield_core::doc::parse;
use expfield_core::ideal::GroebnerConfig;

struct Case {
    golden: &'static str,
    file: &'static str,
    command: &'static str,
    args: &'static [&'static str],
    over: Option<&'static str>,
    bound: u32,
}

const fn case(
    golden: &'static str,
    file: &'static str,
    command: &'static str,
    args: &'static [&'static str],
) -> Case {
    Case {
        golden,
        file,
        command,
        args,
        over: None,
        bound: 3,
    }
}

const fn case_over(
    golden: &'static str,
    file: &'static str,
    command: &'static str,
    args: &'static [&'static str],
    over: &'static str,
) -> Case {
    Case {
        over: Some(over),
        ..case(golden, file, command, args)
    }
}

const CASES: &[Case] = &[
    case("analogue_delta", "analogue.efd", "delta", &["F", "T"]),
    case("analogue_strong", "analogue.efd", "strong", &["F"]),
    case("analogue_khovanskii", "analogue.efd", "khovanskii-verify", &["F", "K"]),
    case("analogue_ecl_cl", "analogue.efd", "ecl-cl-check", &["F", "K"]),
    case("free1_khovanskii", "free1.efd", "khovanskii-verify", &["F", "K"]),
    case_over("free1_ecl_cl", "free1.efd", "ecl-cl-check", &["F", "K"], "ex"),
    case_over("free1_xi_dim", "free1.efd", "xi-dim", &["F"], "Q"),
    case_over("free2_ecl_cl", "free2.efd", "ecl-cl-check", &["F", "K"], "ex,ey"),
    case("free2_chain", "free2.efd", "chain", &["F"]),
    case("log_delta", "log.efd", "delta", &["F", "T"]),
    case("log_ecl_cl", "log.efd", "ecl-cl-check", &["F", "K"]),
    case("difference_strong", "difference.efd", "strong", &["F"]),
    case_over("difference_ax", "difference.efd", "ax-check", &["F", "T"], "Q"),
    case("pair_essential_t", "pair.efd", "essential", &["F", "T"]),
    case("pair_essential_a", "pair.efd", "essential", &["F", "A"]),
    case_over("mult_dep_ecl_cl", "mult_dep.efd", "ecl-cl-check", &["F", "K"], "ex"),
    case("algebraic_exp_khovanskii", "algebraic_exp.efd", "khovanskii-verify", &["F", "K"]),
    case_over("algebraic_exp_cl", "algebraic_exp.efd", "cl-member", &["F", "x"], "Q"),
    case("algebraic_arg_delta", "algebraic_arg.efd", "delta", &["F", "T"]),
    case("fixed_point_validate", "fixed_point.efd", "validate", &["F"]),
    case("two_step_strong", "two_step.efd", "strong", &["F"]),
    case("two_step_extend", "two_step.efd", "extend-derivation", &["F", "x=1"]),
    case("three_pairs_chain", "three_pairs.efd", "chain", &["F"]),
    case("three_pairs_dim", "three_pairs.efd", "dim", &["F", "T"]),
    case("base_named_td", "base_named.efd", "td", &["F", "T"]),
    case_over("sum_relation_ecl_cl", "sum_relation.efd", "ecl-cl-check", &["F", "K"], "ex"),
    case("sqrt_exp_khovanskii", "sqrt_exp.efd", "khovanskii-verify", &["F", "K"]),
    case_over("sqrt_exp_ecl_cl", "sqrt_exp.efd", "ecl-cl-check", &["F", "K"], "ex"),
    case_over("discrete_ecl_cl", "discrete.efd", "ecl-cl-check", &["F", "K"], "Q"),
    case("mixed_base_cl", "mixed_base.efd", "cl-member", &["F", "x"]),
    case("mixed_base_khovanskii", "mixed_base.efd", "khovanskii-verify", &["F", "K"]),
    case("neg_quad_strong", "neg_quad.efd", "strong", &["F"]),
    case_over("quad_pair_ecl_cl", "quad_pair.efd", "ecl-cl-check", &["F", "K"], "Q"),
    case("tower_log_delta", "tower_log.efd", "delta", &["F", "T"]),
    case("wide_dim", "wide.efd", "dim", &["F", "S"]),
    case_over("wide_xi_dim", "wide.efd", "xi-dim", &["F"], "Q"),
];

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpus")
        .canonicalize()
        .unwrap()
}

fn run_case(c: &Case) -> String {
    let src = fs::read_to_string(corpus_dir().join(c.file)).unwrap();
    let doc = parse(&src).unwrap_or_else(|e| panic!("{}: {}", c.file, e));
    let opts = Options {
        bound: c.bound,
        over: c.over.map(|s| s.to_string()),
        config: GroebnerConfig::default(),
    };
    let args: Vec<String> = c.args.iter().map(|s| s.to_string()).collect();
    let report = execute(c.command, &doc, &args, &opts)
        .unwrap_or_else(|e| panic!("{} {} on {}: {}", c.command, c.args.join(" "), c.file, e));
    format!("{}\n", serde_json::to_string_pretty(&report).unwrap())
}

#[test]
fn golden_reports_match() {
    let bless = std::env::var("EXPFIELD_BLESS").is_ok();
    let dir = corpus_dir().join("golden");
    for c in CASES {
        let got = run_case(c);
        let path = dir.join(format!("{}.json", c.golden));
        if bless {
            fs::write(&path, &got).unwrap();
            continue;
        }
        let want = fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("missing golden {}: {}", c.golden, e));
        assert_eq!(got, want, "golden mismatch for {}", c.golden);
    }
}

#[test]
fn every_corpus_file_has_a_golden_case() {
    let mut files: Vec<String> = fs::read_dir(corpus_dir())
        .unwrap()
        .filter_map(|e| {
            let name = e.unwrap().file_name().into_string().unwrap();
            name.ends_with(".efd").then_some(name)
        })
        .collect();
    files.sort();
    assert!(files.len() >= 20, "corpus has only {} documents", files.len());
    for f in &files {
        assert!(
            CASES.iter().any(|c| c.file == f),
            "corpus file {} has no golden case",
            f
        );
    }
}

#[test]
fn corpus_round_trips_through_the_printer() {
    for entry in fs::read_dir(corpus_dir()).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().and_then(|e| e.to_str()) != Some("efd") {
            continue;
        }
        let src = fs::read_to_string(&path).unwrap();
        let doc = parse(&src).unwrap_or_else(|e| panic!("{}: {}", path.display(), e));
        let printed = doc.to_string();
        let reparsed = parse(&printed)
            .unwrap_or_else(|e| panic!("reparse of {}: {}", path.display(), e));
        assert_eq!(doc, reparsed, "round trip failed for {}", path.display());
        assert_eq!(printed, reparsed.to_string(), "printing is not stable");
    }
}

#[test]
fn reports_are_byte_identical_across_runs() {
    for c in CASES.iter().take(6) {
        assert_eq!(run_case(c), run_case(c), "nondeterministic report {}", c.golden);
    }
}
