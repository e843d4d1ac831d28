//! The command lines exercised by the golden-file tests, shared with the
//! acceptance harness.

use std::path::{Path, PathBuf};
use std::process::Command;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub code: i32,
}

pub const CASES: &[Case] = &[
    Case {
        name: "normalize_weight_zero",
        args: &["normalize", "--lambda", "0", "--gens", "x", "y", "P(x)*P(y)"],
        code: 0,
    },
    Case {
        name: "normalize_weight_half",
        args: &[
            "normalize",
            "--lambda",
            "-1/2",
            "--gens",
            "x",
            "y",
            "P(x)*P(y)*x - 2*P(x*P(y))",
        ],
        code: 0,
    },
    Case {
        name: "normalize_nested",
        args: &["normalize", "--gens", "x", "P(P(x)*P(x))*P(x)"],
        code: 0,
    },
    Case {
        name: "normalize_parse_error",
        args: &["normalize", "--gens", "x", "y", "P(x*z)"],
        code: 2,
    },
    Case {
        name: "compare_lt",
        args: &["compare", "--gens", "x", "y", "x*P(y)", "P(x)*y"],
        code: 0,
    },
    Case {
        name: "compare_gt_by_degree",
        args: &["compare", "--gens", "x", "y", "P(x)", "y*y"],
        code: 0,
    },
    Case {
        name: "compare_eq",
        args: &["compare", "--gens", "x", "y", "P(x*y)", "P(x*y)"],
        code: 0,
    },
    Case {
        name: "reduce_plain",
        args: &["reduce", "--rules", "small.rules", "P(x)*y*x*x*x + y*x"],
        code: 0,
    },
    Case {
        name: "reduce_trace",
        args: &["reduce", "--rules", "comm2.rules", "--trace", "P(y)*y*x"],
        code: 0,
    },
    Case {
        name: "reduce_missing_file",
        args: &["reduce", "--rules", "absent.rules", "x"],
        code: 2,
    },
    Case {
        name: "compositions_text",
        args: &[
            "compositions",
            "--rules",
            "di1_f12.rules",
            "--max-deg",
            "5",
            "--jobs",
            "1",
        ],
        code: 0,
    },
    Case {
        name: "compositions_json",
        args: &[
            "compositions",
            "--rules",
            "small.rules",
            "--max-deg",
            "4",
            "--mult-deg",
            "1",
            "--json",
        ],
        code: 0,
    },
    Case {
        name: "check_gsb_commutative",
        args: &[
            "check-gsb",
            "--rules",
            "comm2.rules",
            "--max-deg",
            "4",
            "--mult-deg",
            "2",
        ],
        code: 0,
    },
    Case {
        name: "check_gsb_dialgebra_json",
        args: &[
            "check-gsb",
            "--rules",
            "di1.rules",
            "--max-deg",
            "5",
            "--kinds",
            "ambiguities",
            "--json",
        ],
        code: 0,
    },
    Case {
        name: "check_gsb_violated_axioms",
        args: &["check-gsb", "--rules", "skew2.rules", "--max-deg", "4", "--jobs", "2"],
        code: 1,
    },
    Case {
        name: "check_gsb_failure_json",
        args: &["check-gsb", "--rules", "di1_f12.rules", "--max-deg", "5", "--json"],
        code: 1,
    },
    Case {
        name: "check_gsb_needs_mult_deg",
        args: &[
            "check-gsb",
            "--rules",
            "comm2.rules",
            "--max-deg",
            "4",
            "--kinds",
            "all",
        ],
        code: 2,
    },
    Case {
        name: "complete_dialgebra",
        args: &[
            "complete",
            "--rules",
            "di1_f12.rules",
            "--max-deg",
            "5",
            "--max-rounds",
            "4",
        ],
        code: 0,
    },
    Case {
        name: "complete_round_limit",
        args: &[
            "complete",
            "--rules",
            "skew2.rules",
            "--max-deg",
            "4",
            "--max-rounds",
            "1",
        ],
        code: 1,
    },
    Case {
        name: "irr_commutative",
        args: &["irr", "--rules", "comm2.rules", "--max-deg", "3"],
        code: 0,
    },
    Case {
        name: "oracle_dim_text",
        args: &["oracle-dim", "--rules", "di1.rules", "--max-deg", "4"],
        code: 0,
    },
    Case {
        name: "oracle_dim_json",
        args: &["oracle-dim", "--rules", "comm2.rules", "--max-deg", "3", "--json"],
        code: 0,
    },
    Case {
        name: "preset_commutative",
        args: &["preset", "commutative", "--gens", "x", "y", "--max-deg", "4"],
        code: 0,
    },
    Case {
        name: "preset_dialgebra",
        args: &["preset", "dialgebra", "--data", "di1.dendri", "--lambda", "1"],
        code: 0,
    },
    Case {
        name: "preset_dialgebra_warns",
        args: &[
            "preset",
            "dialgebra",
            "--data",
            "skew2.dendri",
            "--lambda",
            "2",
            "--families",
            "f1,f2",
        ],
        code: 0,
    },
    Case {
        name: "preset_trialgebra",
        args: &["preset", "trialgebra", "--data", "tri1.dendri", "--lambda", "2"],
        code: 0,
    },
    Case {
        name: "preset_zero_weight",
        args: &["preset", "trialgebra", "--data", "tri1.dendri", "--lambda", "0"],
        code: 3,
    },
];

pub fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub fn render(case: &Case) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_rbgs"))
        .args(case.args)
        .current_dir(fixtures())
        .output()
        .expect("binary runs");
    let code = out.status.code().expect("exited normally");
    let text = format!(
        "$ rbgs {}\nexit: {code}\n--- stdout\n{}--- stderr\n{}",
        case.args.join(" "),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    );
    (text, code)
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}
