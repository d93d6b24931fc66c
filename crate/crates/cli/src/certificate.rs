//! Verification certificates: the machine-readable result of running every
//! quadruple-level check and both constructions against one input file.

use hadamard::{
    classify_symmetry, goethals_seidel, is_complementary, is_complex_hadamard,
    is_real_hadamard, two_symmetric_array, Quadruple,
};
use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

/// All checks performed on one quadruple, with enough context to re-run
/// them: the input digest pins what was checked, the tool version pins how.
#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    pub tool_version: &'static str,
    pub input_digest: String,
    pub p: usize,
    pub row_sums: [i32; 4],
    pub symmetry_type: String,
    pub checks: Vec<CheckResult>,
    pub pass: bool,
}

impl Certificate {
    pub fn failing_checks(&self) -> Vec<&'static str> {
        self.checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name)
            .collect()
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("serializable");
        out.push('\n');
        out
    }
}

pub fn sha256_digest(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    format!("sha256:{:x}", hasher.finalize())
}

/// Runs the autocorrelation condition, the row-sum identity, and all three
/// constructions (each reverified on its output matrix).
pub fn certify(q: &Quadruple, input_digest: String) -> Certificate {
    let p = q.p();
    let row_sums = q.row_sums();
    let mut checks = Vec::new();

    let complementary = is_complementary(q);
    checks.push(CheckResult {
        name: "complementary",
        pass: complementary,
        detail: if complementary {
            "periodic autocorrelation sums vanish".to_string()
        } else {
            format!("autocorrelation sums are {:?}", q.paf_sum().coords())
        },
    });

    let squares: i64 = row_sums.iter().map(|&s| i64::from(s) * i64::from(s)).sum();
    let sos = squares == 4 * p as i64;
    checks.push(CheckResult {
        name: "row_sum_squares",
        pass: sos,
        detail: format!("{row_sums:?} squares sum to {squares}, target {}", 4 * p),
    });

    checks.push(match goethals_seidel(q.a(), q.b(), q.c(), q.d()) {
        Ok(h) => CheckResult {
            name: "goethals_seidel",
            pass: is_real_hadamard(&h),
            detail: format!("real Hadamard matrix of order {}", h.order()),
        },
        Err(e) => CheckResult {
            name: "goethals_seidel",
            pass: false,
            detail: e.to_string(),
        },
    });

    checks.push(match two_symmetric_array(q.a(), q.b(), q.c(), q.d()) {
        Ok(k) => CheckResult {
            name: "two_symmetric_array",
            pass: is_complex_hadamard(&k),
            detail: format!("complex Hadamard matrix of order {}", k.order()),
        },
        Err(e) => CheckResult {
            name: "two_symmetric_array",
            pass: false,
            detail: e.to_string(),
        },
    });

    let pass = checks.iter().all(|c| c.pass);
    Certificate {
        tool_version: env!("CARGO_PKG_VERSION"),
        input_digest,
        p,
        row_sums,
        symmetry_type: classify_symmetry(q).label(),
        checks,
        pass,
    }
}
