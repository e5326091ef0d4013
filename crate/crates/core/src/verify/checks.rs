//! QYBE and Hecke identities in component form.
//!
//! With `R = Σ r_{ik}^j e_ij ⊗ e_{k,i+k−j}`, `R₁₂R₁₃R₂₃ = R₂₃R₁₃R₁₂` reads
//!
//! ```text
//! Σ_p r_{ik}^{k+i−p} r_{k+i−p,m}^j r_{p,m+k+i−p−j}^l
//!     = Σ_p r_{km}^p r_{i,m+k−p}^{j+l−p} r_{j+l−p,p}^j        for all i, j, k, l, m
//! ```
//!
//! and `(PR − q)(PR + q⁻¹) = 0` reads
//! `Σ_l r_{ki}^l r_{k+i−l,l}^j = δ_ij + q̂ r_{ki}^j` for all `i, j, k`.
//! Terms whose implied indices leave `1..=n` are zero.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::algebra::LaurentPoly;
use crate::rmatrix::{fourth, BandedOperator};

/// How index tuples are visited.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum WalkMode {
    /// Only tuples reachable from nonzero entries of `R`.
    #[default]
    Sparse,
    /// Every tuple in range; for auditing the sparse walk.
    Full,
}

/// A component where the two sides differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub check: &'static str,
    /// `[i, j, k, l, m]` for QYBE, `[i, j, k]` for Hecke.
    pub indices: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    /// Empty iff the identity holds. Holds at most one witness unless all
    /// were requested.
    pub witnesses: Vec<Witness>,
}

impl CheckOutcome {
    pub fn ok(&self) -> bool {
        self.witnesses.is_empty()
    }

    pub fn first(&self) -> Option<&Witness> {
        self.witnesses.first()
    }
}

/// Dense `(a, b, c) ↦ r_{ab}^c` table with out-of-band lookups returning
/// `None`.
struct Table<'a> {
    n: usize,
    cells: Vec<Option<&'a LaurentPoly>>,
}

impl<'a> Table<'a> {
    fn new(r: &'a BandedOperator) -> Self {
        let n = r.n();
        let mut cells = vec![None; n * n * n];
        for ((i, k, j), v) in r.iter() {
            cells[((i - 1) * n + (k - 1)) * n + (j - 1)] = Some(v);
        }
        Self { n, cells }
    }

    fn get(&self, a: isize, b: isize, c: isize) -> Option<&'a LaurentPoly> {
        let n = self.n as isize;
        let ok = |x: isize| (1..=n).contains(&x);
        if !(ok(a) && ok(b) && ok(c) && ok(a + b - c)) {
            return None;
        }
        self.cells[(((a - 1) * n + (b - 1)) * n + (c - 1)) as usize]
    }
}

fn triple_product(x: Option<&LaurentPoly>, y: Option<&LaurentPoly>, z: Option<&LaurentPoly>) -> Option<LaurentPoly> {
    Some(&(x? * y?) * z?)
}

/// Both sides of the QYBE component `(i, j, k, l, m)`.
pub fn qybe_component(
    r: &BandedOperator,
    i: usize,
    j: usize,
    k: usize,
    l: usize,
    m: usize,
) -> (LaurentPoly, LaurentPoly) {
    qybe_component_with(&Table::new(r), i, j, k, l, m)
}

fn qybe_component_with(tab: &Table, i: usize, j: usize, k: usize, l: usize, m: usize) -> (LaurentPoly, LaurentPoly) {
    let (i, j, k, l, m) = (i as isize, j as isize, k as isize, l as isize, m as isize);
    let n = tab.n as isize;
    let mut lhs = LaurentPoly::zero();
    let mut rhs = LaurentPoly::zero();
    for p in 1..=n {
        let x = k + i - p;
        if let Some(t) = triple_product(tab.get(i, k, x), tab.get(x, m, j), tab.get(p, m + k + i - p - j, l)) {
            lhs += &t;
        }
        let y = j + l - p;
        if let Some(t) = triple_product(tab.get(k, m, p), tab.get(i, m + k - p, y), tab.get(y, p, j)) {
            rhs += &t;
        }
    }
    (lhs, rhs)
}

/// Both sides of the Hecke component `(i, j, k)`.
pub fn hecke_component(r: &BandedOperator, i: usize, j: usize, k: usize) -> (LaurentPoly, LaurentPoly) {
    hecke_component_with(&Table::new(r), i, j, k)
}

fn hecke_component_with(tab: &Table, i: usize, j: usize, k: usize) -> (LaurentPoly, LaurentPoly) {
    let (ii, jj, kk) = (i as isize, j as isize, k as isize);
    let mut lhs = LaurentPoly::zero();
    for l in 1..=tab.n as isize {
        if let (Some(a), Some(b)) = (tab.get(kk, ii, l), tab.get(kk + ii - l, l, jj)) {
            lhs += &(a * b);
        }
    }
    let mut rhs = if i == j {
        LaurentPoly::one()
    } else {
        LaurentPoly::zero()
    };
    if let Some(v) = tab.get(kk, ii, jj) {
        rhs += &(&LaurentPoly::q_hat() * v);
    }
    (lhs, rhs)
}

fn qybe_in_range(n: usize, i: usize, j: usize, k: usize, l: usize, m: usize) -> bool {
    let s = (i + k + m) as isize - (j + l) as isize;
    (1..=n as isize).contains(&s)
}

/// Checks `R₁₂R₁₃R₂₃ = R₂₃R₁₃R₁₂`.
pub fn check_qybe(r: &BandedOperator, mode: WalkMode, all_witnesses: bool) -> CheckOutcome {
    match mode {
        WalkMode::Sparse => qybe_sparse(r, all_witnesses),
        WalkMode::Full => qybe_full(r, all_witnesses),
    }
}

fn qybe_full(r: &BandedOperator, all_witnesses: bool) -> CheckOutcome {
    let n = r.n();
    let tab = Table::new(r);
    let mut witnesses = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for l in 1..=n {
                    for m in 1..=n {
                        if !qybe_in_range(n, i, j, k, l, m) {
                            continue;
                        }
                        let (lhs, rhs) = qybe_component_with(&tab, i, j, k, l, m);
                        if lhs != rhs {
                            witnesses.push(qybe_witness([i, j, k, l, m], &lhs, &rhs));
                            if !all_witnesses {
                                return CheckOutcome { witnesses };
                            }
                        }
                    }
                }
            }
        }
    }
    CheckOutcome { witnesses }
}

fn qybe_witness(idx: [usize; 5], lhs: &LaurentPoly, rhs: &LaurentPoly) -> Witness {
    Witness {
        check: "qybe",
        indices: idx.to_vec(),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    }
}

type Key5 = (usize, usize, usize, usize, usize);

fn qybe_sparse(r: &BandedOperator, all_witnesses: bool) -> CheckOutcome {
    let n = r.n();
    let mut rows: HashMap<(usize, usize), Vec<(usize, &LaurentPoly)>> = HashMap::new();
    for ((a, b, c), v) in r.iter() {
        rows.entry((a, b)).or_default().push((c, v));
    }
    let empty = Vec::new();
    let row = |a: usize, b: usize| rows.get(&(a, b)).unwrap_or(&empty);

    // R12 R13 R23: r(i,k; x,p) r(x,m; j,z) r(p,z; l,s)
    let mut lhs: HashMap<Key5, LaurentPoly> = HashMap::new();
    for ((i, k, x), v1) in r.iter() {
        let p = i + k - x;
        for m in 1..=n {
            for &(j, v2) in row(x, m) {
                let z = x + m - j;
                let v12 = v1 * v2;
                for &(l, v3) in row(p, z) {
                    *lhs.entry((i, j, k, l, m)).or_default() += &(&v12 * v3);
                }
            }
        }
    }
    // R23 R13 R12: r(k,m; p,z) r(i,z; x,s) r(x,p; j,l)
    let mut rhs: HashMap<Key5, LaurentPoly> = HashMap::new();
    for ((k, m, p), v1) in r.iter() {
        let z = k + m - p;
        for i in 1..=n {
            for &(x, v2) in row(i, z) {
                let v12 = v1 * v2;
                for &(j, v3) in row(x, p) {
                    let l = x + p - j;
                    *rhs.entry((i, j, k, l, m)).or_default() += &(&v12 * v3);
                }
            }
        }
    }

    let keys: BTreeSet<Key5> = lhs.keys().chain(rhs.keys()).copied().collect();
    let zero = LaurentPoly::zero();
    let mut witnesses = Vec::new();
    for key in keys {
        let a = lhs.get(&key).unwrap_or(&zero);
        let b = rhs.get(&key).unwrap_or(&zero);
        if a != b {
            let (i, j, k, l, m) = key;
            witnesses.push(qybe_witness([i, j, k, l, m], a, b));
            if !all_witnesses {
                break;
            }
        }
    }
    CheckOutcome { witnesses }
}

/// Checks `(PR − q)(PR + q⁻¹) = 0`.
pub fn check_hecke(r: &BandedOperator, all_witnesses: bool) -> CheckOutcome {
    let n = r.n();
    let tab = Table::new(r);
    let mut witnesses = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                if fourth(n, i, k, j).is_none() {
                    continue;
                }
                let (lhs, rhs) = hecke_component_with(&tab, i, j, k);
                if lhs != rhs {
                    witnesses.push(Witness {
                        check: "hecke",
                        indices: vec![i, j, k],
                        lhs: lhs.to_string(),
                        rhs: rhs.to_string(),
                    });
                    if !all_witnesses {
                        return CheckOutcome { witnesses };
                    }
                }
            }
        }
    }
    CheckOutcome { witnesses }
}
