//! Exact checks of QYBE and the Hecke relation, plus per-triple reports and
//! the batch driver.

mod checks;
pub mod dense;

use std::time::Instant;

use serde::Serialize;

pub use checks::{check_hecke, check_qybe, hecke_component, qybe_component, CheckOutcome, WalkMode, Witness};
pub use dense::{dense_check as dense_oracle, DENSE_MAX_N};

use crate::algebra::LaurentPoly;
use crate::catalog::pairs_json;
use crate::error::{Error, Result};
use crate::r0::{self, CartanTensor};
use crate::rmatrix::{self, conjugate_by_q_r0, BandedOperator};
use crate::triple::BdTriple;

#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyOptions {
    pub mode: WalkMode,
    /// Keep every witness rather than the first per check.
    pub all_witnesses: bool,
    /// Cross-check against the dense oracle when `n ≤ DENSE_MAX_N`.
    pub dense_oracle: bool,
    /// Test hook: corrupt one entry of `R` before checking.
    pub fault: Option<usize>,
}

/// Adds 1 to the leading coefficient of the `index`-th stored entry
/// (mod the number of entries).
pub fn inject_fault(r: &BandedOperator, index: usize) -> BandedOperator {
    let mut out = r.clone();
    let Some(((i, k, j), v)) = r.iter().nth(index % r.len().max(1)) else {
        return out;
    };
    let (e, _) = &v.terms()[0];
    out.add_at(i, k, j, &LaurentPoly::q_power(e.clone()))
        .expect("existing key");
    out
}

/// Both checks hold for `q^{r'} R q^{r'}`. `rp` must lie in the free space of
/// `t`.
pub fn gauge_check(t: &BdTriple, r: &BandedOperator, rp: &CartanTensor) -> Result<bool> {
    if !r0::in_free_space(t, rp)? {
        return Err(Error::Input(format!("r' is not in the free space of {t}")));
    }
    let rr = conjugate_by_q_r0(r, rp)?;
    Ok(check_qybe(&rr, WalkMode::Sparse, false).ok() && check_hecke(&rr, false).ok())
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Timing {
    pub construct: f64,
    pub qybe: f64,
    pub hecke: f64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub qybe_ok: bool,
    pub hecke_ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    #[serde(serialize_with = "ser_triple")]
    pub triple: BdTriple,
    #[serde(serialize_with = "ser_r0", skip_serializing_if = "Option::is_none")]
    pub r0: Option<CartanTensor>,
    pub qybe_ok: bool,
    pub hecke_ok: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witness: Vec<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dense_oracle: Option<OracleResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub ms: Timing,
}

fn ser_triple<S: serde::Serializer>(t: &BdTriple, s: S) -> std::result::Result<S::Ok, S::Error> {
    pairs_json(t).serialize(s)
}

fn ser_r0<S: serde::Serializer>(r: &Option<CartanTensor>, s: S) -> std::result::Result<S::Ok, S::Error> {
    r.as_ref().map(CartanTensor::to_strings).serialize(s)
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.qybe_ok && self.hecke_ok && self.error.is_none()
    }

    /// The record without timings, for byte-level comparisons.
    pub fn to_json_untimed(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v.as_object_mut().expect("object").remove("ms");
        v
    }
}

fn ms_since(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

/// Runs the whole pipeline on one triple. Stage errors become a failed
/// report carrying the message.
pub fn verify_triple(t: &BdTriple, opts: &VerifyOptions) -> VerificationReport {
    let mut rep = VerificationReport {
        triple: t.clone(),
        r0: None,
        qybe_ok: false,
        hecke_ok: false,
        witness: Vec::new(),
        dense_oracle: None,
        error: None,
        ms: Timing::default(),
    };
    if let Err(e) = run(t, opts, &mut rep) {
        rep.qybe_ok = false;
        rep.hecke_ok = false;
        rep.error = Some(e.to_string());
    }
    rep
}

fn run(t: &BdTriple, opts: &VerifyOptions, rep: &mut VerificationReport) -> Result<()> {
    if !t.is_valid() {
        return Err(Error::InvalidTriple(t.to_string()));
    }
    let start = Instant::now();
    let cons = rmatrix::construct(t)?;
    rep.ms.construct = ms_since(start);
    rep.r0 = Some(cons.r0);
    let r = match opts.fault {
        Some(i) => inject_fault(&cons.r, i),
        None => cons.r,
    };

    let start = Instant::now();
    let q = check_qybe(&r, opts.mode, opts.all_witnesses);
    rep.ms.qybe = ms_since(start);
    let start = Instant::now();
    let h = check_hecke(&r, opts.all_witnesses);
    rep.ms.hecke = ms_since(start);

    rep.qybe_ok = q.ok();
    rep.hecke_ok = h.ok();
    rep.witness = q.witnesses.into_iter().chain(h.witnesses).collect();

    if opts.dense_oracle && t.n() <= DENSE_MAX_N {
        let (dq, dh) = dense_oracle(&r)?;
        rep.dense_oracle = Some(OracleResult {
            qybe_ok: dq,
            hecke_ok: dh,
        });
        if (dq, dh) != (rep.qybe_ok, rep.hecke_ok) {
            return Err(Error::Internal(format!(
                "dense oracle ({dq}, {dh}) disagrees with banded checks ({}, {})",
                rep.qybe_ok, rep.hecke_ok
            )));
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub n: usize,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

impl std::fmt::Display for Summary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "n={} total={} passed={} failed={}",
            self.n, self.total, self.passed, self.failed
        )
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BatchReport {
    pub summary: Summary,
    pub records: Vec<VerificationReport>,
}

impl BatchReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Verifies `triples` on `jobs` worker threads. Records come back in input
/// order whatever `jobs` is.
pub fn verify_batch(n: usize, triples: &[BdTriple], opts: &VerifyOptions, jobs: usize) -> Result<BatchReport> {
    use rayon::prelude::*;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Internal(format!("worker pool: {e}")))?;
    let records: Vec<_> = pool.install(|| triples.par_iter().map(|t| verify_triple(t, opts)).collect());
    let passed = records.iter().filter(|r| r.passed()).count();
    Ok(BatchReport {
        summary: Summary {
            n,
            total: records.len(),
            passed,
            failed: records.len() - passed,
        },
        records,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rmatrix::build_rs;

    #[test]
    fn empty_triple_n2_passes() {
        let rep = verify_triple(&BdTriple::empty(2).unwrap(), &VerifyOptions::default());
        assert!(rep.passed(), "{rep:?}");
        assert!(rep.witness.is_empty());
    }

    #[test]
    fn single_arrow_n3_passes_with_oracle() {
        let t = BdTriple::validated(3, &[(1, 2)]).unwrap();
        let opts = VerifyOptions {
            dense_oracle: true,
            ..Default::default()
        };
        let rep = verify_triple(&t, &opts);
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(
            rep.dense_oracle,
            Some(OracleResult {
                qybe_ok: true,
                hecke_ok: true
            })
        );
    }

    #[test]
    fn fault_hook_fails_with_witness() {
        let t = BdTriple::empty(3).unwrap();
        let opts = VerifyOptions {
            fault: Some(0),
            ..Default::default()
        };
        let rep = verify_triple(&t, &opts);
        assert!(!rep.passed());
        assert!(!rep.witness.is_empty());
        assert!(rep.error.is_none());
    }

    #[test]
    fn inject_fault_changes_exactly_one_entry() {
        let rs = build_rs(3);
        for idx in 0..rs.len() {
            let bad = inject_fault(&rs, idx);
            let diff = rs.iter().filter(|(k, v)| bad.get(k.0, k.1, k.2) != Some(*v)).count();
            assert_eq!(diff, 1);
        }
    }

    #[test]
    fn invalid_triple_is_an_error_report() {
        let raw = BdTriple::from_pairs(3, &[(1, 1)]).unwrap();
        let rep = verify_triple(&raw, &VerifyOptions::default());
        assert!(!rep.passed());
        assert!(rep.error.is_some());
        let js = serde_json::to_value(&rep).unwrap();
        assert_eq!(js["qybe_ok"], false);
        assert!(js.get("r0").is_none());
    }

    #[test]
    fn gauge_rejects_outside_free_space() {
        let t = BdTriple::empty(4).unwrap();
        let r = build_rs(4);
        assert!(gauge_check(&t, &r, &CartanTensor::zero(4)).unwrap());
        let p0 = r0::p0(4);
        assert!(matches!(gauge_check(&t, &r, &p0), Err(Error::Input(_))));
    }

    #[test]
    fn summary_line() {
        let s = Summary {
            n: 5,
            total: 13,
            passed: 12,
            failed: 1,
        };
        assert_eq!(s.to_string(), "n=5 total=13 passed=12 failed=1");
    }
}
