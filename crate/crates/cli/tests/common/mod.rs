use std::process::Command;

/// Golden name and argument vector, run from the crate root.
pub const CASES: &[(&str, &str)] = &[
    ("validate", "validate tests/data/examples.adl"),
    ("validate_bad", "validate tests/data/bad.adl"),
    ("validate_syntax", "validate tests/data/syntax.adl"),
    ("center_m2", "center tests/data/examples.adl M2"),
    ("center_ut2", "center tests/data/examples.adl UT2"),
    ("center_unknown", "center tests/data/examples.adl Q"),
    ("commutant_unit", "commutant tests/data/examples.adl M2 uM2"),
    ("commutant_diag", "commutant tests/data/examples.adl M2 diag"),
    ("commutant_vectors", "commutant tests/data/examples.adl M2 1,0,0,0;0,0,0,1"),
    ("opposite_ut2", "opposite tests/data/examples.adl UT2"),
    ("tensor_z2_dual", "tensor tests/data/examples.adl Z2 Dual"),
    ("tensor_over_z2", "tensor tests/data/examples.adl Z2 Z2 over Z2 idZ2 idZ2"),
    ("fuse_defects", "fuse-defects tests/data/examples.adl Zk Kz"),
    ("verify_fusion_m2", "verify-fusion tests/data/examples.adl M k M"),
    ("verify_fusion_z2", "verify-fusion tests/data/examples.adl Zid z Zid"),
    ("sector_check", "sector-check tests/data/examples.adl Minus"),
    ("vfuse", "vfuse tests/data/examples.adl SZ Minus"),
    ("hfuse_signs", "hfuse tests/data/examples.adl Minus Minus"),
    ("hfuse_zero", "hfuse tests/data/examples.adl Plus Minus"),
    ("coherence_pentagon", "coherence --suite pentagon --seed 42 --cases 10 --max-dim 2"),
    ("coherence_all", "coherence --suite all --seed 7 --cases 2 --max-dim 2"),
    ("coherence_empty", "coherence --suite triangle --cases 0"),
    ("net_axioms_isotony", "net-axioms tests/data/isotony.adl Aug --config tests/data/nested.cfg"),
    ("net_axioms_cover", "net-axioms tests/data/examples.adl Zid --config tests/data/cover.cfg"),
];

pub struct Run {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Run {
    pub fn transcript(&self) -> String {
        format!("{}--- stderr\n{}--- exit {}\n", self.stdout, self.stderr, self.code)
    }
}

pub fn comalg(args: &str) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_comalg"))
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .args(args.split(' '))
        .output()
        .expect("binary runs");
    Run {
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
        code: out.status.code().expect("exit code"),
    }
}
