//! Acceptance gate: one line per criterion, every comparison an exact
//! equality, each criterion under its runtime budget.

use std::time::{Duration, Instant};

use ellgenus_core::genus::{
    a_hat_genus_series, genus_polynomial, l_genus_series, universal_char_series, universal_genus, Partition,
};
use ellgenus_core::modular::{
    delta1, delta2, divisor_sum_oracle, elliptic_params, eps1, eps2, format_q, jacobi_solution, EllipticParam,
};
use ellgenus_core::oracle::root_expansion_genus;
use ellgenus_core::series::{int, pow2, rat, ExactRational, QSeries, Series, ZSeries};
use ellgenus_core::string24::{
    basis_matrix_k, image_lattice_basis, image_matrix_raw, index_matrix, kappa_matrix, witten_genus_24, Matrix4,
};
use ellgenus_core::twist::{ell1, ell2, tangent_indices};
use ellgenus_core::verify::{random_vectors, SEED};
use ellgenus_core::IndexQuadruple;

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, Duration, fn() -> Outcome);

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, want {want:?}"))
    }
}

fn qs(values: &[ExactRational], order: usize) -> QSeries {
    Series::new(values.to_vec(), order)
}

fn factorial(n: usize) -> ExactRational {
    (1..=n).fold(int(1), |acc, i| acc * int(i as i64))
}

fn criterion_1() -> Outcome {
    expect("delta1", delta1(5), qs(&[rat(1, 4), int(0), int(6), int(0), int(6)], 5))?;
    expect("eps1", eps1(5), qs(&[rat(1, 16), int(0), int(-1), int(0), int(7)], 5))?;
    expect("delta2", delta2(3), qs(&[rat(-1, 8), int(-3), int(-3)], 3))?;
    expect("eps2", eps2(3), qs(&[int(0), int(1), int(8)], 3))?;
    let order = 21;
    expect("delta1 vs divisor sums", delta1(order), divisor_sum_oracle(EllipticParam::Delta1, order))?;
    expect("eps1 vs divisor sums", eps1(order), divisor_sum_oracle(EllipticParam::Eps1, order))?;
    expect("delta2 vs divisor sums", delta2(order), divisor_sum_oracle(EllipticParam::Delta2, order))?;
    expect("eps2 vs divisor sums", eps2(order), divisor_sum_oracle(EllipticParam::Eps2, order))?;
    Ok("leading terms and divisor sums through q^10".into())
}

fn criterion_2() -> Outcome {
    let (z_order, q_order) = (13, 13);
    for kind in [1u8, 2] {
        let f = jacobi_solution(kind, z_order, q_order).map_err(|e| e.to_string())?;
        let (d, e) = elliptic_params(kind, q_order);
        let r = f.quartic_residual(&d, &e);
        if !r.is_zero() || r.order() < z_order - 1 {
            return Err(format!("F{kind} residual nonzero or short: {r:?}"));
        }
    }
    let z = 16;
    let sinh_half: ZSeries = Series::from_fn(z, |n| if n % 2 == 1 { int(2) * rat(1, 2).pow(n as i32) / factorial(n) } else { int(0) });
    let cosh_half: ZSeries = Series::from_fn(z, |n| if n % 2 == 0 { rat(1, 2).pow(n as i32) / factorial(n) } else { int(0) });
    let two_tanh = &sinh_half * &cosh_half.invert().map_err(|e| e.to_string())?;
    expect("F1 at q=0", jacobi_solution(1, z, 3).map_err(|e| e.to_string())?.at_q_zero(), two_tanh)?;
    expect("F2 at q=0", jacobi_solution(2, z, 3).map_err(|e| e.to_string())?.at_q_zero(), sinh_half)?;
    Ok("residuals zero through z^12 and q^6; q=0 limits through z^15".into())
}

fn criterion_3() -> Outcome {
    let vectors = random_vectors(SEED, 6, 10, 100);
    for (i, v) in vectors.iter().enumerate() {
        let idx = tangent_indices(v);
        let e1 = ell1(v, 4);
        let e2 = ell2(v, 2);
        let want1 = qs(&[idx.sig.clone(), int(0), int(2) * &idx.sig_t - int(48) * &idx.sig], 4);
        let want2 = qs(&[idx.ahat.clone(), -(&idx.ahat_t - int(24) * &idx.ahat)], 2);
        expect(&format!("Ell1 vector {i}"), e1.truncate(3), want1.truncate(3))?;
        expect(&format!("Ell2 vector {i}"), e2, want2)?;
    }
    Ok(format!("{} random vectors", vectors.len()))
}

fn criterion_4() -> Outcome {
    let order = 7;
    let vectors = random_vectors(SEED + 1, 6, 5, 100);
    let phi = universal_genus(6);
    let (d1, e1) = elliptic_params(1, order);
    let (d2, e2) = elliptic_params(2, order);
    let (s1, s2) = (phi.specialize(&d1, &e1), phi.specialize(&d2, &e2));
    for (i, v) in vectors.iter().enumerate() {
        let via1 = s1.evaluate(v).map_err(|e| e.to_string())?.scale(&pow2(12));
        let via2 = s2.evaluate(v).map_err(|e| e.to_string())?;
        let twisted1 = ell1(v, order);
        let twisted2 = ell2(v, order);
        for n in 0..order {
            expect(&format!("Ell1 vector {i} q^({n}/2)"), twisted1.coeff(n), via1.coeff(n))?;
            expect(&format!("Ell2 vector {i} q^({n}/2)"), twisted2.coeff(n), via2.coeff(n))?;
        }
    }
    Ok(format!("{} random vectors through q^3", vectors.len()))
}

fn ints(rows: [[i64; 4]; 4]) -> Matrix4 {
    Matrix4::from_ints(rows)
}

fn criterion_5() -> Outcome {
    let idx = index_matrix();
    let r = |x: i64, e: i32| int(x) * pow2(e);
    expect("a0 row", idx.row(0), [r(1, 18), int(0), int(0), int(0)])?;
    expect("a1 row", idx.row(1), [r(-15, 15), r(-1, 12), int(0), int(0)])?;
    expect("a2 row", idx.row(2), [r(3, 16), r(1, 13), r(1, -5), int(0)])?;
    expect("a3 row", idx.row(3), [r(1, 15), r(-1, 12), r(-1, -5), int(1)])?;
    let p = |e: u32| 2i64.pow(e);
    let expected = ints([
        [p(18), 0, 0, 0],
        [-p(15) * 3 * 5, -p(15) * 3, 0, 0],
        [p(8) * 3 * 331, p(9) * 243, p(6), 0],
        [-p(8) * 97, -p(9) * 3 * 17, -p(6), p(3)],
    ]);
    expect("derived kappa matrix", kappa_matrix(), expected)?;
    Ok("solved and derived matrices, 32 entries".into())
}

fn criterion_6() -> Outcome {
    let p = |e: u32| 2i64.pow(e);
    let expected = ints([
        [0, p(18), 0, 0],
        [p(15) * 3, -p(15) * 3 * 5, 0, 0],
        [-p(11) * 27, p(11) * 27 * 257, -p(6), 0],
        [p(12) * 81, -p(12) * 81 * 41, p(5) * 9, p(3)],
    ]);
    expect("image matrix", image_matrix_raw(), expected)?;
    let det_k = basis_matrix_k().det();
    if det_k != int(1) && det_k != int(-1) {
        return Err(format!("det K = {det_k}"));
    }
    let det_m = kappa_matrix().det();
    expect("det kappa matrix", det_m.clone(), int(p(18)) * int(-p(15) * 3) * int(p(6)) * int(p(3)))?;
    let h = image_lattice_basis();
    expect("column HNF", h.clone(), ints([[1, 0, 0, 0], [0, 24, 0, 0], [0, 0, 1, 0], [0, 0, 0, 8]]))?;
    let index: ExactRational = h.diagonal().iter().product();
    expect("lattice index", index, int(192))?;
    Ok(format!("det K = {det_k}, HNF diag(1,24,1,8), index 192"))
}

fn criterion_7() -> Outcome {
    for k in 1..=3u32 {
        let order = 2 * k as usize + 1;
        let u = universal_char_series(order);
        expect(&format!("universal k={k}"), root_expansion_genus(&u, k), genus_polynomial(&u, k).map_err(|e| e.to_string())?)?;
        let l = l_genus_series(order);
        expect(&format!("L k={k}"), root_expansion_genus(&l, k), genus_polynomial(&l, k).map_err(|e| e.to_string())?)?;
        let a = a_hat_genus_series(order);
        expect(&format!("A-hat k={k}"), root_expansion_genus(&a, k), genus_polynomial(&a, k).map_err(|e| e.to_string())?)?;
    }
    let l2 = genus_polynomial(&l_genus_series(5), 2).map_err(|e| e.to_string())?;
    expect("L2 p2", l2.coeff(&Partition::new(vec![2])), rat(7, 45))?;
    Ok("universal, L and A-hat for k = 1, 2, 3".into())
}

fn criterion_8() -> Outcome {
    expect("kappa (1,0,*,*)", format_q(&witten_genus_24(&IndexQuadruple::new([1, 0, 3, -2]), 4)), "1 - 24*q + O(q^2)".into())?;
    expect("kappa (0,1,*,*)", format_q(&witten_genus_24(&IndexQuadruple::new([0, 1, 5, 7]), 6)), "24*q - 576*q^2 + O(q^3)".into())?;
    let zero = witten_genus_24(&IndexQuadruple::default(), 6);
    if !zero.is_zero() {
        return Err(format!("kappa 0 gives {}", format_q(&zero)));
    }
    Ok("Witten genus fixtures".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        (1, "theta products vs leading terms and divisor sums", Duration::from_secs(1), criterion_1),
        (2, "Jacobi quartic residuals and q=0 limits", Duration::from_secs(30), criterion_2),
        (3, "low-order Ell1/Ell2 identities", Duration::from_secs(60), criterion_3),
        (4, "twisted-index Ell_i vs universal genus at (delta_i, eps_i)", Duration::from_secs(300), criterion_4),
        (5, "solved and derived 4x4 matrices", Duration::from_millis(1), criterion_5),
        (6, "image matrix, determinants, HNF", Duration::from_millis(1), criterion_6),
        (7, "Newton path vs formal-root oracle", Duration::from_secs(10), criterion_7),
        (8, "Witten genus fixtures", Duration::from_secs(1), criterion_8),
    ];
    let mut failures = Vec::new();
    for (id, name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let line = match &outcome {
            Ok(detail) if elapsed <= budget => format!("criterion {id}: PASS {name}: {detail} ({elapsed:.2?})"),
            Ok(detail) => format!("criterion {id}: FAIL {name}: {detail}, took {elapsed:.2?} over {budget:?}"),
            Err(why) => format!("criterion {id}: FAIL {name}: {why} ({elapsed:.2?})"),
        };
        println!("{line}");
        if !line.contains(": PASS ") {
            failures.push(line);
        }
    }
    println!("acceptance: {} of 8 criteria passed", 8 - failures.len());
    if !failures.is_empty() {
        std::process::exit(1);
    }
}
