//! Dimension 24: the elliptic genus coefficients (a₀, a₁, a₂, a₃) of
//! φ(M) = a₀δ⁶ + a₁δ⁴ε + a₂δ²ε² + a₃ε³, their expression through twisted
//! indices, the κ-coordinates of string cobordism, the image lattice, and a
//! classifier.

mod hnf;
mod matrix;
pub mod reference;

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

pub use hnf::column_hnf;
pub use matrix::{vector_is_integral, vector_to_integers, Matrix4, Vector4};

use crate::error::{Error, Result};
use crate::genus::{universal_genus, GenusPolynomial, PontryaginVector};
use crate::modular::{delta_bar, discriminant, format_q};
use crate::series::{from_bigint, from_wire, int, is_dyadic, pow2, to_wire, DeltaEpsPoly, ExactRational, QSeries, SeriesWire};
use crate::twist::{TangentIndexFunctionals, TangentIndices};

/// The weight-6 monomials δ⁶, δ⁴ε, δ²ε², ε³ as (δ-power, ε-power).
pub const MONOMIALS: [(u32, u32); 4] = [(6, 0), (4, 1), (2, 2), (0, 3)];

/// 8^{6−2j}: the factor relating δ^{6−2j}ε^j to (8δ)^{6−2j}ε^j.
fn eight_delta_factor(j: usize) -> ExactRational {
    pow2(3 * (6 - 2 * j as i32))
}

/// a₀..a₃, coefficients of δ⁶, δ⁴ε, δ²ε², ε³.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllipticClass24 {
    pub a: Vector4,
}

impl EllipticClass24 {
    pub fn new(a: Vector4) -> Self {
        EllipticClass24 { a }
    }

    pub fn zero() -> Self {
        Self::new(std::array::from_fn(|_| int(0)))
    }

    /// Fails unless `p` is homogeneous of weight 6.
    pub fn from_delta_eps(p: &DeltaEpsPoly) -> Result<Self> {
        if p.terms().keys().any(|m| !MONOMIALS.contains(m)) {
            return Err(Error::DimensionMismatch { expected: 24, got: 4 * p.homogeneous_weight().unwrap_or(0) });
        }
        Ok(Self::new(std::array::from_fn(|j| p.coeff(MONOMIALS[j].0, MONOMIALS[j].1))))
    }

    pub fn to_delta_eps(&self) -> DeltaEpsPoly {
        DeltaEpsPoly::from_terms(MONOMIALS.iter().copied().zip(self.a.iter().cloned()))
    }

    /// Coefficients of (8δ)⁶, (8δ)⁴ε, (8δ)²ε², ε³.
    pub fn to_8delta_basis(&self) -> Vector4 {
        std::array::from_fn(|j| &self.a[j] / eight_delta_factor(j))
    }

    pub fn from_8delta_basis(b: &Vector4) -> Self {
        Self::new(std::array::from_fn(|j| &b[j] * eight_delta_factor(j)))
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(Zero::is_zero)
    }

    pub fn is_dyadic(&self) -> bool {
        self.a.iter().all(is_dyadic)
    }
}

/// κ(M) = (Â(M), Â(M,T)/24, Â(M,Λ²), Sig(M)/8).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IndexQuadruple {
    pub ahat: BigInt,
    pub ahat_t_over_24: BigInt,
    pub ahat_lambda2: BigInt,
    pub sig_over_8: BigInt,
}

impl IndexQuadruple {
    pub fn new(v: [i64; 4]) -> Self {
        Self::from_array(v.map(BigInt::from))
    }

    pub fn from_array([a, b, c, d]: [BigInt; 4]) -> Self {
        IndexQuadruple { ahat: a, ahat_t_over_24: b, ahat_lambda2: c, sig_over_8: d }
    }

    pub fn to_array(&self) -> [BigInt; 4] {
        [self.ahat.clone(), self.ahat_t_over_24.clone(), self.ahat_lambda2.clone(), self.sig_over_8.clone()]
    }

    pub fn to_vector(&self) -> Vector4 {
        self.to_array().map(|x| from_bigint(&x))
    }

    pub fn from_vector(v: &Vector4) -> Result<Self> {
        vector_to_integers(v)
            .map(Self::from_array)
            .ok_or_else(|| Error::NonIntegral(format!("kappa = ({})", v.iter().map(to_wire).collect::<Vec<_>>().join(", "))))
    }

    pub fn is_zero(&self) -> bool {
        self.to_array().iter().all(Zero::is_zero)
    }

    /// Â(M, T) = 24·κ₁.
    pub fn ahat_t(&self) -> BigInt {
        &self.ahat_t_over_24 * 24
    }
}

/// The linear system in a₀..a₃ obtained by comparing low-order terms of
/// Ell₁ and Ell₂.
pub fn index_system() -> Matrix4 {
    Matrix4::from_fn(|i, j| match (i, j) {
        (0, 0) => pow2(-18),
        (1, 0) => int(9) * pow2(-14),
        (1, 1) => pow2(-12),
        (2, _) => int(1),
        (3, _) => int([144, 80, 16, -48][j]),
        _ => int(0),
    })
}

/// Right-hand side of [`index_system`] as a function of
/// (Â, Â(·,T), Sig(·,T), Sig).
pub fn index_rhs() -> Matrix4 {
    Matrix4::from_ints([[1, 0, 0, 0], [24, -1, 0, 0], [0, 0, 0, 1], [0, 0, 2, -48]])
}

/// (a₀..a₃)ᵗ = M·(Â, Â(·,T), Sig(·,T), Sig)ᵗ for any oriented 24-manifold.
pub fn index_matrix() -> Matrix4 {
    index_system().inverse().expect("nonsingular").mul(&index_rhs())
}

/// Sig(M,T) = 2¹¹(Â(M,Λ²) − 47Â(M,T) + 900Â(M)) for string 24-manifolds.
pub fn string_relation(ahat: &ExactRational, ahat_t: &ExactRational, ahat_lambda2: &ExactRational) -> ExactRational {
    pow2(11) * (ahat_lambda2 - int(47) * ahat_t + int(900) * ahat)
}

/// κ ↦ (Â, Â(·,T), Sig(·,T), Sig) under the string relation.
pub fn kappa_to_indices() -> Matrix4 {
    let r = |a: i64, t: i64, l: i64| string_relation(&int(a), &int(t), &int(l));
    Matrix4::from_fn(|i, j| match (i, j) {
        (0, 0) => int(1),
        (1, 1) => int(24),
        (2, 0) => r(1, 0, 0),
        (2, 1) => r(0, 24, 0),
        (2, 2) => r(0, 0, 1),
        (3, 3) => int(8),
        _ => int(0),
    })
}

/// (a₀..a₃)ᵗ = M·κᵗ for string 24-manifolds.
pub fn kappa_matrix() -> Matrix4 {
    index_matrix().mul(&kappa_to_indices())
}

/// Columns are κ(M₁), …, κ(M₄) for the string cobordism basis.
pub fn basis_matrix_k() -> Matrix4 {
    Matrix4::from_ints([
        [0, 1, 0, 0],
        [-1, 0, 0, 0],
        [8 * 27 * 5, 4 * 3 * 17 * 1069, -1, 0],
        [256 * 3 * 61, 256 * 5 * 37, 4 * 7, 1],
    ])
}

/// (a_j(M_i)): column i is the elliptic class of M_i.
pub fn image_matrix_raw() -> Matrix4 {
    kappa_matrix().mul(&basis_matrix_k())
}

/// [`image_matrix_raw`] in (8δ)-monomial coefficients.
pub fn image_matrix() -> Matrix4 {
    image_matrix_raw().scale_rows(&std::array::from_fn(|j| eight_delta_factor(j).recip()))
}

/// Column HNF of [`image_matrix`].
pub fn image_lattice_basis() -> Matrix4 {
    let rows = image_matrix().to_integers().expect("integral in the (8δ)-basis");
    let h = column_hnf(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>());
    Matrix4::from_fn(|i, j| from_bigint(&h[i][j]))
}

/// Integer coordinates of `a8` (an (8δ)-basis class) in the M₁..M₄ basis,
/// or `None` when it lies outside the image.
pub fn lattice_membership(a8: &Vector4) -> Result<Option<[BigInt; 4]>> {
    if !vector_is_integral(a8) {
        return Err(Error::NonIntegral("(8δ)-basis coefficients must be integers".into()));
    }
    Ok(vector_to_integers(&image_matrix().solve(a8)?))
}

fn kappa_matrix_inverse() -> &'static Matrix4 {
    static INV: OnceLock<Matrix4> = OnceLock::new();
    INV.get_or_init(|| kappa_matrix().inverse().expect("nonsingular"))
}

pub fn a_from_kappa(kappa: &IndexQuadruple) -> EllipticClass24 {
    EllipticClass24::new(kappa_matrix().mul_vec(&kappa.to_vector()))
}

/// kappa_matrix⁻¹·a, rational in general.
pub fn kappa_from_a(a: &EllipticClass24) -> Vector4 {
    kappa_matrix_inverse().mul_vec(&a.a)
}

/// (a₀..a₃) from the four indices via [`index_matrix`].
pub fn a_from_indices(idx: &TangentIndices) -> EllipticClass24 {
    let v = [idx.ahat.clone(), idx.ahat_t.clone(), idx.sig_t.clone(), idx.sig.clone()];
    EllipticClass24::new(index_matrix().mul_vec(&v))
}

/// W(M) = Â(M)·Δ̄ + Â(M,T)·Δ, valid below ν-order `order`.
pub fn witten_genus(ahat: &ExactRational, ahat_t: &ExactRational, order: usize) -> QSeries {
    &delta_bar(order).scale(ahat) + &discriminant(order).scale(ahat_t)
}

pub fn witten_genus_24(kappa: &IndexQuadruple, order: usize) -> QSeries {
    witten_genus(&from_bigint(&kappa.ahat), &from_bigint(&kappa.ahat_t()), order)
}

/// Default ν-order for the Witten genus in a report: q⁰, q¹, q².
pub const DEFAULT_WITTEN_ORDER: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassifyInput {
    Pontryagin(PontryaginVector),
    Kappa(IndexQuadruple),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportStatus {
    Consistent,
    Inconsistent,
}

impl ReportStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ReportStatus::Consistent => "consistent",
            ReportStatus::Inconsistent => "inconsistent",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConsistencyCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl ConsistencyCheck {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        ConsistencyCheck { name: name.into(), passed, detail: detail.into() }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClassificationReport {
    pub source: String,
    pub status: ReportStatus,
    pub a_delta_eps: EllipticClass24,
    pub a_8delta_basis: Option<[BigInt; 4]>,
    /// Integral in the (8δ)⁶, (8δ)⁴ε, (8δ)²ε², ε³ basis, the span of spin manifolds.
    pub in_spin_span: bool,
    pub kappa: Option<IndexQuadruple>,
    pub witten_genus: QSeries,
    pub in_string_image: bool,
    pub basis_coordinates: Option<[BigInt; 4]>,
    /// `None` when the input is inconsistent with a string manifold.
    pub bounds_string: Option<bool>,
    pub consistency: Vec<ConsistencyCheck>,
}

fn int_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

fn int_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| Error::Parse(format!("not an integer: {n}"))),
        Value::String(s) => s.parse().map_err(|_| Error::Parse(format!("not an integer: {s:?}"))),
        _ => Err(Error::Parse(format!("not an integer: {v}"))),
    }
}

fn ints_json(v: &Option<[BigInt; 4]>) -> Value {
    match v {
        Some(xs) => Value::Array(xs.iter().map(int_json).collect()),
        None => Value::Null,
    }
}

fn ints_from_json(v: &Value) -> Result<Option<[BigInt; 4]>> {
    if v.is_null() {
        return Ok(None);
    }
    let arr = v.as_array().filter(|a| a.len() == 4).ok_or_else(|| Error::Parse("expected 4 integers".into()))?;
    let mut out: [BigInt; 4] = Default::default();
    for (o, x) in out.iter_mut().zip(arr) {
        *o = int_from_json(x)?;
    }
    Ok(Some(out))
}

impl ClassificationReport {
    pub fn is_consistent(&self) -> bool {
        self.status == ReportStatus::Consistent
    }

    pub fn to_json(&self) -> Value {
        json!({
            "source": self.source,
            "status": self.status.as_str(),
            "a_delta_eps": self.a_delta_eps.a.iter().map(to_wire).collect::<Vec<_>>(),
            "a_8delta_basis": ints_json(&self.a_8delta_basis),
            "in_spin_span": self.in_spin_span,
            "kappa": ints_json(&self.kappa.as_ref().map(IndexQuadruple::to_array)),
            "witten_genus": SeriesWire(&self.witten_genus),
            "witten_genus_order": self.witten_genus.order(),
            "witten_genus_text": format_q(&self.witten_genus),
            "in_string_image": self.in_string_image,
            "basis_coordinates": ints_json(&self.basis_coordinates),
            "bounds_string": self.bounds_string,
            "consistency": self.consistency.iter().map(|c| json!({
                "name": c.name, "passed": c.passed, "detail": c.detail,
            })).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |field: &str| Error::Parse(format!("report field {field:?} missing or malformed"));
        let field = |name: &str| v.get(name).ok_or_else(|| bad(name));
        let string = |name: &str| field(name)?.as_str().map(str::to_owned).ok_or_else(|| bad(name));
        let boolean = |name: &str| field(name)?.as_bool().ok_or_else(|| bad(name));
        let status = match string("status")?.as_str() {
            "consistent" => ReportStatus::Consistent,
            "inconsistent" => ReportStatus::Inconsistent,
            _ => return Err(bad("status")),
        };
        let a_arr = field("a_delta_eps")?.as_array().filter(|a| a.len() == 4).ok_or_else(|| bad("a_delta_eps"))?;
        let mut a: Vector4 = std::array::from_fn(|_| int(0));
        for (o, x) in a.iter_mut().zip(a_arr) {
            *o = from_wire(x.as_str().ok_or_else(|| bad("a_delta_eps"))?)?;
        }
        let order = field("witten_genus_order")?.as_u64().ok_or_else(|| bad("witten_genus_order"))? as usize;
        let consistency = field("consistency")?
            .as_array()
            .ok_or_else(|| bad("consistency"))?
            .iter()
            .map(|c| {
                Ok(ConsistencyCheck {
                    name: c["name"].as_str().ok_or_else(|| bad("consistency"))?.to_owned(),
                    passed: c["passed"].as_bool().ok_or_else(|| bad("consistency"))?,
                    detail: c["detail"].as_str().ok_or_else(|| bad("consistency"))?.to_owned(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ClassificationReport {
            source: string("source")?,
            status,
            a_delta_eps: EllipticClass24::new(a),
            a_8delta_basis: ints_from_json(field("a_8delta_basis")?)?,
            in_spin_span: boolean("in_spin_span")?,
            kappa: ints_from_json(field("kappa")?)?.map(IndexQuadruple::from_array),
            witten_genus: crate::series::series_from_wire(field("witten_genus")?, order)?,
            in_string_image: boolean("in_string_image")?,
            basis_coordinates: ints_from_json(field("basis_coordinates")?)?,
            bounds_string: match field("bounds_string")? {
                Value::Null => None,
                Value::Bool(b) => Some(*b),
                _ => return Err(bad("bounds_string")),
            },
            consistency,
        })
    }
}

fn universal_genus_24() -> &'static GenusPolynomial<DeltaEpsPoly> {
    static G: OnceLock<GenusPolynomial<DeltaEpsPoly>> = OnceLock::new();
    G.get_or_init(|| universal_genus(6))
}

fn index_functionals_24() -> &'static TangentIndexFunctionals {
    static F: OnceLock<TangentIndexFunctionals> = OnceLock::new();
    F.get_or_init(|| TangentIndexFunctionals::new(6))
}

fn describe(v: &Vector4) -> String {
    format!("({})", v.iter().map(to_wire).collect::<Vec<_>>().join(", "))
}

/// Fills the lattice-dependent fields shared by both input kinds.
fn assemble(
    source: &str,
    a: EllipticClass24,
    kappa: Option<IndexQuadruple>,
    witten: QSeries,
    mut consistency: Vec<ConsistencyCheck>,
) -> ClassificationReport {
    let b = a.to_8delta_basis();
    let a_8delta_basis = vector_to_integers(&b);
    consistency.push(ConsistencyCheck::new("dyadic-coefficients", a.is_dyadic(), describe(&a.a)));
    let basis_coordinates = a_8delta_basis.as_ref().and_then(|_| lattice_membership(&b).ok().flatten());
    if let (Some(k), Some(x)) = (&kappa, &basis_coordinates) {
        let expected = basis_matrix_k().solve(&k.to_vector()).expect("unimodular");
        let got = x.clone().map(|n| from_bigint(&n));
        consistency.push(ConsistencyCheck::new("basis-coordinates = K^-1 kappa", expected == got, describe(&expected)));
    }
    let status = if consistency.iter().all(|c| c.passed) { ReportStatus::Consistent } else { ReportStatus::Inconsistent };
    let in_string_image = basis_coordinates.is_some();
    let bounds_string = (status == ReportStatus::Consistent).then(|| a.is_zero());
    ClassificationReport {
        source: source.into(),
        status,
        in_spin_span: a_8delta_basis.is_some(),
        a_8delta_basis,
        a_delta_eps: a,
        kappa: kappa.filter(|_| status == ReportStatus::Consistent),
        witten_genus: witten,
        in_string_image,
        basis_coordinates,
        bounds_string,
        consistency,
    }
}

/// Classifies a 24-dimensional class. An input that cannot come from a
/// string manifold yields a report with status `Inconsistent` and no
/// verdict.
pub fn classify(input: &ClassifyInput, witten_order: usize) -> Result<ClassificationReport> {
    match input {
        ClassifyInput::Kappa(k) => {
            let a = a_from_kappa(k);
            let back = kappa_from_a(&a);
            let checks = vec![ConsistencyCheck::new("kappa-roundtrip", back == k.to_vector(), describe(&back))];
            Ok(assemble("kappa", a, Some(k.clone()), witten_genus_24(k, witten_order), checks))
        }
        ClassifyInput::Pontryagin(v) => {
            if v.k() != 6 {
                return Err(Error::DimensionMismatch { expected: 24, got: v.dim() });
            }
            let a = EllipticClass24::from_delta_eps(&universal_genus_24().evaluate(v)?)?;
            let idx = index_functionals_24().evaluate(v)?;
            let via_indices = a_from_indices(&idx);
            let relation = string_relation(&idx.ahat, &idx.ahat_t, &idx.ahat_lambda2);
            let direct = [idx.ahat.clone(), &idx.ahat_t / int(24), idx.ahat_lambda2.clone(), &idx.sig / int(8)];
            let from_a = kappa_from_a(&a);
            let checks = vec![
                ConsistencyCheck::new("genus = index formula", via_indices == a, describe(&via_indices.a)),
                ConsistencyCheck::new(
                    "string-relation",
                    relation == idx.sig_t,
                    format!("Sig(M,T) = {}, relation gives {}", to_wire(&idx.sig_t), to_wire(&relation)),
                ),
                ConsistencyCheck::new("kappa-integral", vector_is_integral(&direct), describe(&direct)),
                ConsistencyCheck::new("kappa-from-a", from_a == direct, describe(&from_a)),
            ];
            let kappa = IndexQuadruple::from_vector(&direct).ok();
            let witten = witten_genus(&idx.ahat, &idx.ahat_t, witten_order);
            Ok(assemble("pontryagin", a, kappa, witten, checks))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    fn product(sign: i64, factors: &[i64]) -> ExactRational {
        rat(sign * factors.iter().product::<i64>(), 1)
    }

    #[test]
    fn index_matrix_rows() {
        let m = index_matrix();
        assert_eq!(m.row(0), [pow2(18), int(0), int(0), int(0)]);
        assert_eq!(m.row(1), [product(-1, &[1 << 15, 15]), -pow2(12), int(0), int(0)]);
        assert_eq!(m.row(2), [product(1, &[1 << 16, 3]), pow2(13), pow2(-5), int(0)]);
        assert_eq!(m.row(3), [pow2(15), -pow2(12), -pow2(-5), int(1)]);
    }

    #[test]
    fn string_relation_examples() {
        assert_eq!(string_relation(&int(0), &int(0), &int(0)), int(0));
        assert_eq!(string_relation(&int(1), &int(0), &int(0)), int(1843200));
        assert_eq!(string_relation(&int(0), &int(1), &int(0)), int(-96256));
    }

    #[test]
    fn derived_matrices_match_reference() {
        assert_eq!(kappa_matrix(), reference::expected_kappa_matrix());
        assert_eq!(image_matrix_raw(), reference::expected_image_matrix());
        assert!(basis_matrix_k().is_unimodular());
        assert_eq!(kappa_matrix().det(), pow2(18) * product(-1, &[1 << 15, 3]) * pow2(6) * pow2(3));
    }

    #[test]
    fn image_hnf() {
        let h = image_lattice_basis();
        assert!(h.is_diagonal(), "{h}");
        assert_eq!(h.diagonal(), [int(1), int(24), int(1), int(8)]);
    }

    #[test]
    fn membership_examples() {
        let m = |v: [i64; 4]| lattice_membership(&v.map(int)).unwrap();
        let n = |v: [i64; 4]| Some(v.map(BigInt::from));
        assert_eq!(m([0, 0, 0, 8]), n([0, 0, 0, 1]));
        assert_eq!(m([0, 0, 0, 1]), None);
        assert_eq!(m([1, -120, 32 * 27 * 257, -4096 * 81 * 41]), n([0, 1, 0, 0]));
        assert!(lattice_membership(&[rat(1, 2), int(0), int(0), int(0)]).is_err());
    }

    #[test]
    fn kappa_roundtrip() {
        let k = IndexQuadruple::new([3, -2, 7, 11]);
        assert_eq!(kappa_from_a(&a_from_kappa(&k)), k.to_vector());
    }

    #[test]
    fn witten_fixtures() {
        let w = witten_genus_24(&IndexQuadruple::new([1, 0, 5, 9]), 4);
        assert_eq!(format_q(&w), "1 - 24*q + O(q^2)");
        let w = witten_genus_24(&IndexQuadruple::new([0, 1, 0, 0]), 6);
        assert_eq!(format_q(&w), "24*q - 576*q^2 + O(q^3)");
        assert!(witten_genus_24(&IndexQuadruple::default(), 6).is_zero());
    }

    #[test]
    fn classify_kappa_examples() {
        let r = classify(&ClassifyInput::Kappa(IndexQuadruple::default()), 6).unwrap();
        assert_eq!(r.bounds_string, Some(true));
        let r = classify(&ClassifyInput::Kappa(IndexQuadruple::new([0, 0, 0, 1])), 6).unwrap();
        assert_eq!(r.a_8delta_basis, Some([0, 0, 0, 8].map(BigInt::from)));
        assert_eq!(r.basis_coordinates, Some([0, 0, 0, 1].map(BigInt::from)));
        assert_eq!(r.bounds_string, Some(false));
        assert!(r.is_consistent());
        assert_eq!(ClassificationReport::from_json(&r.to_json()).unwrap(), r);
    }

    #[test]
    fn classify_zero_vector() {
        let r = classify(&ClassifyInput::Pontryagin(PontryaginVector::zero(6)), 6).unwrap();
        assert!(r.is_consistent());
        assert_eq!(r.bounds_string, Some(true));
        assert!(classify(&ClassifyInput::Pontryagin(PontryaginVector::zero(5)), 6).is_err());
    }
}
