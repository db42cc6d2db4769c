//! The identity-checking suite behind `ellgenus verify`.
//!
//! Every check is an exact equality. The fast level uses small truncation
//! orders and k ≤ 3 oracles; the full level runs the dimension-24
//! computations at the orders used by the acceptance tests.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::genus::{
    a_hat_genus_series, elliptic_log, genus_polynomial, l_genus_series, partitions, universal_char_series,
    universal_genus, CharSeries, PontryaginVector,
};
use crate::modular::{
    delta1, delta2, divisor_sum_oracle, elliptic_params, eps1, eps2, format_q, jacobi_solution, EllipticParam,
};
use crate::oracle::root_expansion_genus;
use crate::series::{int, pow2, rat, Coeff, ExactRational, QSeries, Series};
use crate::string24::{
    a_from_indices, a_from_kappa, basis_matrix_k, image_lattice_basis, image_matrix_raw, kappa_from_a, index_matrix,
    kappa_matrix, reference, string_relation, witten_genus_24, EllipticClass24, IndexQuadruple,
};
use crate::twist::{witten_bundle_ch, witten_genus_polynomial, BaseClass, TangentIndexFunctionals};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Fast,
    Full,
}

impl Level {
    pub fn as_str(self) -> &'static str {
        match self {
            Level::Fast => "fast",
            Level::Full => "full",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationSuiteResult {
    pub level: Level,
    pub checks: Vec<CheckResult>,
}

impl VerificationSuiteResult {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "level": self.level.as_str(),
            "passed": self.all_passed(),
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name, "status": if c.passed { "pass" } else { "fail" }, "detail": c.detail,
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for VerificationSuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

/// Seed for every randomized check; output is reproducible.
pub const SEED: u64 = 24;

/// `count` Pontryagin vectors at dimension 4k with entries in
/// `-bound..=bound`.
pub fn random_vectors(seed: u64, k: u32, count: usize, bound: i64) -> Vec<PontryaginVector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = partitions(k).len();
    (0..count)
        .map(|_| {
            let values: Vec<i64> = (0..n).map(|_| rng.gen_range(-bound..=bound)).collect();
            PontryaginVector::from_values(k, &values).expect("one value per partition")
        })
        .collect()
}

/// A random integer κ-quadruple.
pub fn random_kappas(seed: u64, count: usize, bound: i64) -> Vec<IndexQuadruple> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| IndexQuadruple::new(std::array::from_fn(|_| rng.gen_range(-bound..=bound))))
        .collect()
}

struct Suite {
    checks: Vec<CheckResult>,
}

impl Suite {
    fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(CheckResult { name: name.into(), passed, detail: detail.into() });
    }
}

fn q(values: &[ExactRational], order: usize) -> QSeries {
    Series::new(values.to_vec(), order)
}

/// Leading terms of δ₁, ε₁, δ₂, ε₂ as expected.
pub fn leading_terms() -> [(&'static str, QSeries, QSeries); 4] {
    [
        ("delta1", delta1(5), q(&[rat(1, 4), int(0), int(6), int(0), int(6)], 5)),
        ("eps1", eps1(5), q(&[rat(1, 16), int(0), int(-1), int(0), int(7)], 5)),
        ("delta2", delta2(3), q(&[rat(-1, 8), int(-3), int(-3)], 3)),
        ("eps2", eps2(3), q(&[int(0), int(1), int(8)], 3)),
    ]
}

fn theta_checks(s: &mut Suite, order: usize) {
    let all = leading_terms().iter().all(|(_, got, want)| got == want);
    s.check("theta-leading-terms", all, "delta1, eps1, delta2, eps2");
    let pairs = [
        (delta1(order), EllipticParam::Delta1),
        (eps1(order), EllipticParam::Eps1),
        (delta2(order), EllipticParam::Delta2),
        (eps2(order), EllipticParam::Eps2),
    ];
    let ok = pairs.iter().all(|(t, p)| *t == divisor_sum_oracle(*p, order));
    s.check("theta-vs-divisor-sums", ok, format!("below q^({order}/2)"));
}

fn jacobi_checks(s: &mut Suite, z_order: usize, q_order: usize) {
    for kind in [1u8, 2] {
        let f = jacobi_solution(kind, z_order, q_order).expect("valid orders");
        let (d, e) = elliptic_params(kind, q_order);
        let r = f.quartic_residual(&d, &e);
        s.check(
            &format!("jacobi-quartic-f{kind}"),
            r.is_zero(),
            format!("residual zero through z^{}, below q^({}/2)", z_order - 1, q_order),
        );
    }
    let z = 16;
    let f1 = jacobi_solution(1, z, 2).expect("valid").at_q_zero();
    let f2 = jacobi_solution(2, z, 2).expect("valid").at_q_zero();
    let two_tanh = universal_f_at(rat(1, 4), rat(1, 16), z);
    let two_sinh = universal_f_at(rat(-1, 8), int(0), z);
    s.check("jacobi-q0-limits", f1 == two_tanh && f2 == two_sinh, "2 tanh(z/2), 2 sinh(z/2) to z^15");
}

fn universal_f_at(delta: ExactRational, eps: ExactRational, order: usize) -> Series<ExactRational> {
    crate::genus::universal_f(order).map_coeffs(|c| c.evaluate(&delta, &eps))
}

fn genus_oracle_checks(s: &mut Suite) {
    let mut ok = true;
    for k in 1..=3u32 {
        let order = 2 * k as usize + 1;
        let u = universal_char_series(order);
        ok &= root_expansion_genus(&u, k) == genus_polynomial(&u, k).expect("order");
        for q in [l_genus_series(order), a_hat_genus_series(order)] {
            ok &= root_expansion_genus(&q, k) == genus_polynomial(&q, k).expect("order");
        }
    }
    s.check("genus-newton-vs-roots", ok, "universal, L, A-hat for k <= 3");
    let dg = elliptic_log(10).derivative();
    let ok = (1..=2u32).all(|n| {
        let v = PontryaginVector::complex_projective(n);
        universal_genus(n).evaluate(&v).expect("k") == dg.coeff(2 * n as usize)
    });
    s.check("logarithm-cp2n", ok, "g'(z) coefficients equal phi(CP^2), phi(CP^4)");
}

fn dim24_checks(s: &mut Suite, vectors: &[PontryaginVector], q_order: usize) {
    let f = TangentIndexFunctionals::new(6);
    let univ = universal_genus(6);
    let ell1 = witten_genus_polynomial(BaseClass::LHat, &witten_bundle_ch(1, 6, q_order));
    let ell2 = witten_genus_polynomial(BaseClass::AHat, &witten_bundle_ch(2, 6, q_order));
    let (d1, e1) = elliptic_params(1, q_order);
    let (d2, e2) = elliptic_params(2, q_order);
    let specialized1 = univ.specialize(&d1, &e1);
    let specialized2 = univ.specialize(&d2, &e2);

    let (mut low, mut cross1, mut cross2, mut idx_ok, mut rel) = (true, true, true, true, true);
    for v in vectors {
        let idx = f.evaluate(v).expect("k = 6");
        let e1v = ell1.evaluate(v).expect("k = 6");
        let e2v = ell2.evaluate(v).expect("k = 6");
        low &= e1v.coeff(0) == idx.sig
            && e1v.coeff(1).is_zero()
            && e1v.coeff(2) == int(2) * &idx.sig_t - int(48) * &idx.sig
            && e2v.coeff(0) == idx.ahat
            && e2v.coeff(1) == -(&idx.ahat_t - int(24) * &idx.ahat);
        cross1 &= e1v == specialized1.evaluate(v).expect("k = 6").scale(&pow2(12));
        cross2 &= e2v == specialized2.evaluate(v).expect("k = 6");
        let a = EllipticClass24::from_delta_eps(&univ.evaluate(v).expect("k = 6")).expect("weight 6");
        idx_ok &= a_from_indices(&idx) == a;
        rel &= string_relation(&idx.ahat, &idx.ahat_t, &idx.ahat_lambda2) == idx.sig_t;
    }
    let n = vectors.len();
    s.check("ell-low-order-terms", low, format!("{n} random vectors"));
    s.check("cross-path-ell1", cross1, format!("{n} vectors below q^({q_order}/2)"));
    s.check("cross-path-ell2", cross2, format!("{n} vectors below q^({q_order}/2)"));
    s.check("index-matrix-vs-universal-genus", idx_ok, format!("{n} random vectors"));
    s.check("string-relation", rel, format!("{n} random vectors"));

    let mut ok = true;
    for (kind, specialized) in [(1u8, &specialized1), (2, &specialized2)] {
        let jf = jacobi_solution(kind, 14, q_order).expect("valid");
        let cs = CharSeries::from_odd_function(&jf.series).expect("odd, leading 1");
        let direct = genus_polynomial(&cs, 6).expect("order");
        ok &= vectors.iter().all(|v| direct.evaluate(v).expect("k") == specialized.evaluate(v).expect("k"));
    }
    s.check("jacobi-genus-direct", ok, "genus of z/F_i equals universal genus at (delta_i, eps_i)");
}

fn matrix_checks(s: &mut Suite) {
    let idx = index_matrix();
    let row_ok = idx.row(0) == [pow2(18), int(0), int(0), int(0)]
        && idx.row(2) == [int(3) * pow2(16), pow2(13), pow2(-5), int(0)]
        && idx.row(3) == [pow2(15), -pow2(12), -pow2(-5), int(1)];
    s.check("index-matrix", row_ok, "rows a0, a2, a3");
    s.check("kappa-matrix", kappa_matrix() == reference::expected_kappa_matrix(), "16 entries");
    s.check("image-matrix", image_matrix_raw() == reference::expected_image_matrix(), "16 entries");
    s.check("det-K = ±1", basis_matrix_k().is_unimodular(), basis_matrix_k().det().to_string());
    let det = kappa_matrix().det();
    s.check("det-kappa-matrix != 0", !det.is_zero(), det.to_string());
    let h = image_lattice_basis();
    let diag_ok = h.is_diagonal() && h.diagonal() == [int(1), int(24), int(1), int(8)];
    s.check("image-hnf = diag(1,24,1,8)", diag_ok, h.to_string().replace('\n', " "));
    let ks = random_kappas(SEED, 20, 1000);
    let ok = ks.iter().all(|k| kappa_from_a(&a_from_kappa(k)) == k.to_vector());
    s.check("kappa-roundtrip", ok, "20 random integer quadruples");
}

fn witten_checks(s: &mut Suite) {
    let w1 = format_q(&witten_genus_24(&IndexQuadruple::new([1, 0, 0, 0]), 4));
    let w2 = format_q(&witten_genus_24(&IndexQuadruple::new([0, 1, 0, 0]), 6));
    let w0 = witten_genus_24(&IndexQuadruple::default(), 6);
    let ok = w1 == "1 - 24*q + O(q^2)" && w2 == "24*q - 576*q^2 + O(q^3)" && w0.is_zero();
    s.check("witten-genus-fixtures", ok, format!("{w1}; {w2}"));
}

pub fn run(level: Level) -> VerificationSuiteResult {
    let mut s = Suite { checks: Vec::new() };
    let (theta_order, z_order, jq_order, n_vectors, cross_order) = match level {
        Level::Fast => (8, 8, 4, 3, 4),
        Level::Full => (21, 13, 12, 10, 6),
    };
    theta_checks(&mut s, theta_order);
    jacobi_checks(&mut s, z_order, jq_order);
    genus_oracle_checks(&mut s);
    dim24_checks(&mut s, &random_vectors(SEED, 6, n_vectors, 50), cross_order);
    matrix_checks(&mut s);
    witten_checks(&mut s);
    VerificationSuiteResult { level, checks: s.checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_vectors_are_reproducible() {
        assert_eq!(random_vectors(7, 3, 2, 9), random_vectors(7, 3, 2, 9));
        assert_ne!(random_vectors(7, 3, 2, 9), random_vectors(8, 3, 2, 9));
    }

    #[test]
    fn fast_suite_passes() {
        let r = run(Level::Fast);
        assert!(r.all_passed(), "{r}");
        assert!(r.get("image-hnf = diag(1,24,1,8)").is_some());
    }
}
