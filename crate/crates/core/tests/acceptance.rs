//! The acceptance criteria, one line each. Every comparison is an identity
//! of canonical forms.

mod common;

use std::time::Instant;

use d21::cohomology::{self, class_in_span, cup, d0, d1, h1_scan, is_coboundary, named_cocycle, BlockSpec, Complex};
use d21::deform::{self, OrderRelation};
use d21::gamma;
use d21::quantize::{self, contract, normal_order_word};
use d21::scalar::{rat, rat_int};
use d21::symalg::{euler_field, hamiltonian_field, virasoro, vf_commutator, Monomial, XI1, ETA1};
use d21::{Scalar, Symbol, Target};
use proptest::strategy::Strategy;
use proptest::test_runner::{Config, TestRng, TestRunner, RngAlgorithm};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn config(cases: u32) -> Config {
    Config { cases, failure_persistence: None, ..Config::default() }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: d21::Error) -> String {
    e.to_string()
}

fn c1_embedding() -> Outcome {
    let t = Instant::now();
    gamma::jacobi_check_image(&gamma::rho_alpha()).map_err(|f| format!("jacobi fails on {:?}: {}", f.triple, f.residual))?;
    gamma::verify_iso().map_err(|m| format!("iso fails on {:?}", m.pair))?;
    let secs = t.elapsed().as_secs_f64();
    ensure(secs < 10.0, || format!("took {secs:.1} s"))?;
    Ok(format!("jacobi on the image and 17x17 iso pairs exact ({secs:.2} s)"))
}

fn c2_virasoro() -> Outcome {
    for n in -6..=6 {
        for m in -6..=6 {
            let lhs = virasoro(n).poisson(&virasoro(m));
            let rhs = virasoro(n + m).scale(&Scalar::from_int((m - n) as i64));
            ensure(lhs == rhs, || format!("[L_{n}, L_{m}] = {lhs}"))?;
        }
    }
    Ok("[L_n, L_m] = (m-n) L_(n+m) for |n|, |m| <= 6".into())
}

fn random_monomial(rng: &mut ChaCha8Rng, range: i32) -> Monomial {
    Monomial::new(rng.gen_range(-range..=range), rng.gen_range(-range..=range), rng.gen_range(0..16))
}

fn c3_grading() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut nonzero = 0;
    for _ in 0..500 {
        let (a, b) = (random_monomial(&mut rng, 4), random_monomial(&mut rng, 4));
        let ca = Scalar::from_int(rng.gen_range(1..5));
        let r = Symbol::term(ca, a).poisson(&Symbol::term(Scalar::one(), b));
        if r.is_zero() {
            continue;
        }
        nonzero += 1;
        let want = a.k_degree() + b.k_degree() - 2;
        ensure(r.gradings().k == Some(want), || format!("{{{a}, {b}}} = {r} not of k-degree {want}"))?;
    }
    Ok(format!("500 pairs, {nonzero} nonzero brackets, all in P(i+j-2)"))
}

fn c4_euler() -> Outcome {
    let e = euler_field();
    let mut bad = Vec::new();
    let mut count = 0;
    for t in -3..=3 {
        for tau in -3..=3 {
            for mask in 0u8..16 {
                count += 1;
                let m = Monomial::new(t, tau, mask);
                let a = Symbol::term(Scalar::one(), m);
                let commutes = vf_commutator(&hamiltonian_field(&a).map_err(err)?, &e).map_err(err)?.is_zero();
                if commutes != (m.k_degree() == 2) {
                    bad.push(format!("A = {a} (k = {}, commutes = {commutes})", m.k_degree()));
                }
            }
        }
    }
    ensure(bad.is_empty(), || {
        format!("{} of {count} monomials violate the equivalence: {}; H_A vanishes for constant A", bad.len(), bad.join(", "))
    })?;
    Ok(format!("{count} monomials"))
}

fn certify_span(cx: &Complex, reps: &[cohomology::Cochain1], named: &[cohomology::Cochain1]) -> Result<(), String> {
    for c in named {
        let c = c.clone().with_block(reps[0].block);
        ensure(class_in_span(cx, &c, reps).map_err(err)?.is_some(), || "named cocycle outside span of representatives".into())?;
    }
    for r in reps {
        ensure(class_in_span(cx, r, named).map_err(err)?.is_some(), || "representative outside span of named cocycles".into())?;
    }
    Ok(())
}

fn c5_h1_in_p() -> Outcome {
    let named = [named_cocycle("theta1").map_err(err)?, named_cocycle("theta2").map_err(err)?];
    let mut notes = Vec::new();
    for alpha in [None, Some(rat_int(0)), Some(rat_int(1)), Some(rat_int(-1)), Some(rat_int(2))] {
        let spec;
        let cx = match &alpha {
            Some(a) => {
                spec = Complex::classical().specialize(a).map_err(err)?;
                &spec
            }
            None => Complex::classical(),
        };
        let all = h1_scan(cx, -6..=6, -6..=6, Target::P, 0).map_err(err)?;
        let nz: Vec<_> = all.iter().filter(|r| r.dim_h1 > 0).collect();
        let label = alpha.as_ref().map_or("generic alpha".to_string(), |a| format!("alpha = {a}"));
        ensure(nz.len() == 1 && nz[0].block.k == 0 && nz[0].block.n == 0 && nz[0].dim_h1 == 2, || {
            format!("{label}: nonzero blocks {:?}", nz.iter().map(|r| (r.block.k, r.block.n, r.dim_h1)).collect::<Vec<_>>())
        })?;
        let named_here: Vec<_> = match &alpha {
            Some(a) => named.iter().map(|c| c.specialize(a)).collect::<d21::Result<_>>().map_err(err)?,
            None => named.to_vec(),
        };
        certify_span(cx, &nz[0].representatives, &named_here).map_err(|e| format!("{label}: {e}"))?;
        notes.push(label);
    }
    Ok(format!("single block (0,0) of dim 2 in |k|,|n| <= 6, spanned by theta1, theta2 mod B1; {}", notes.join(", ")))
}

fn c6_k4prime() -> Outcome {
    let cx = Complex::classical();
    let all = h1_scan(cx, 2..=2, -6..=6, Target::K4prime, 0).map_err(err)?;
    let total: usize = all.iter().map(|r| r.dim_h1).sum();
    ensure(total == 1, || format!("total dim {total}"))?;
    let rep = all.iter().find(|r| r.dim_h1 == 1).unwrap();
    let theta = named_cocycle("theta").map_err(err)?;
    certify_span(cx, &rep.representatives, std::slice::from_ref(&theta))?;
    let k4 = BlockSpec::new(2, 0, Target::K4);
    let dc3 = d0(cx, &cohomology::c3(), &k4).map_err(err)?;
    ensure(dc3.images == theta.images, || format!("d0(c3) =\n{dc3}"))?;
    let coef = |name: &str, m: Monomial| dc3.get(name).unwrap().coefficient(&m);
    let s = [
        coef("T1", Monomial::new(0, -1, 0b1110)),
        coef("T2", Monomial::new(0, -1, 0b1101)),
        coef("T3", Monomial::new(0, -1, 0b1011)),
        coef("T4", Monomial::new(0, -1, 0b0111)),
    ];
    let q = [
        coef("D1", Monomial::new(-1, 0, 0b1011)),
        coef("D2", Monomial::new(-1, 0, 0b0111)),
        coef("D3", Monomial::new(-1, 0, 0b1110)),
        coef("D4", Monomial::new(-1, 0, 0b1101)),
    ];
    let (one, neg) = (Scalar::one(), Scalar::from_int(-1));
    for v in [&s, &q] {
        ensure(v[0] == one && v[2] == one && v[1] == neg && v[3] == neg, || format!("coefficient pattern {v:?}"))?;
    }
    ensure(cup(cx, &theta, &theta).map_err(err)?.is_zero(), || "cup(theta, theta) != 0".into())?;
    let d = deform::k4_deformation().map_err(err)?;
    let v = deform::verify_homomorphism(&d).map_err(err)?;
    ensure(v.passed(), || format!("{} residuals", v.residuals.len()))?;
    let rel = deform::verify_order_relations(&d, 2).map_err(err)?;
    ensure(rel.iter().all(OrderRelation::holds), || "order relations fail".into())?;
    Ok("K4' total dim 1 ~ theta; d0(c3) = theta with s, q = (1,-1,1,-1); [[theta,theta]] = 0; rho + beta theta exact".into())
}

fn c7_pplus() -> Outcome {
    let cx = Complex::classical();
    let all = h1_scan(cx, -6..=6, -6..=6, Target::Pplus, 0).map_err(err)?;
    let nz: Vec<_> = all.iter().filter(|r| r.dim_h1 > 0).collect();
    ensure(nz.len() == 1 && (nz[0].block.k, nz[0].block.n, nz[0].dim_h1) == (0, 0, 1), || {
        format!("nonzero blocks {:?}", nz.iter().map(|r| (r.block.k, r.block.n, r.dim_h1)).collect::<Vec<_>>())
    })?;
    let theta1 = named_cocycle("theta1").map_err(err)?;
    certify_span(cx, &nz[0].representatives, std::slice::from_ref(&theta1))?;
    let order2 = BlockSpec::new(-2, 0, Target::Pplus);
    let rho2 = cohomology::solve_obstruction(cx, &theta1, &order2).map_err(err)?.ok_or("obstruction not solvable")?;
    let diff = rho2.sub(&named_cocycle("rho2").map_err(err)?);
    ensure(d1(cx, &diff).map_err(err)?.is_zero(), || format!("difference is not a cocycle:\n{diff}"))?;
    let d = deform::pplus_deformation().map_err(err)?;
    let v = deform::verify_homomorphism(&d).map_err(err)?;
    ensure(v.passed(), || format!("{} residuals", v.residuals.len()))?;
    let rel = deform::verify_order_relations(&d, 4).map_err(err)?;
    ensure(rel.iter().all(OrderRelation::holds), || {
        format!("failing orders {:?}", rel.iter().filter(|r| !r.holds()).map(|r| r.order).collect::<Vec<_>>())
    })?;
    Ok("P+ dim 1 at (0,0) spanned by theta1; rho2 - {F1 -> t^-2} closed; homomorphism and orders 1..4 hold".into())
}

fn c8_quantized() -> Outcome {
    let b = quantize::gamma_h_basis().symbols();
    for x in &b {
        for y in &b {
            ensure(quantize::check_contraction(x, y).map_err(err)?, || format!("contraction fails for {x}, {y}"))?;
        }
    }
    let mut runner = TestRunner::new_with_rng(config(500), TestRng::from_seed(RngAlgorithm::ChaCha, &[8; 32]));
    runner
        .run(&(common::plus_homogeneous(), common::plus_homogeneous()), |(a, b)| common::check_contraction(a, b))
        .map_err(|e| e.to_string())?;
    let mut runner = TestRunner::new_with_rng(config(200), TestRng::from_seed(RngAlgorithm::ChaCha, &[9; 32]));
    runner
        .run(&(common::plus_symbol(), common::plus_symbol(), common::plus_symbol()), |(a, b, c)| common::check_moyal_assoc(a, b, c))
        .map_err(|e| e.to_string())?;
    let w = normal_order_word(&[ETA1, XI1]);
    let want: Symbol = "h - xi1*eta1".parse().map_err(err)?;
    ensure(w == want, || format!("eta1 xi1 = {w}"))?;
    Ok("17x17 basis pairs and 500 random pairs contract; 200 associative triples; eta1 xi1 = h - xi1*eta1".into())
}

fn c9_quantized_deformation() -> Outcome {
    let cx = Complex::quantized();
    let tb = named_cocycle("thetabar1").map_err(err)?;
    tb.validate(cx).map_err(err)?;
    ensure(d1(cx, &tb).map_err(err)?.is_zero(), || "thetabar1 is not closed".into())?;
    ensure(is_coboundary(cx, &tb).map_err(err)?.is_none(), || "thetabar1 is a coboundary".into())?;
    let v = deform::verify_quantized().map_err(err)?;
    ensure(v.homomorphism.passed(), || format!("{} residuals", v.homomorphism.residuals.len()))?;
    ensure(v.contraction_mismatches.is_empty(), || v.contraction_mismatches.join("; "))?;
    let classical = gamma::rho_alpha().symbols();
    for (i, s) in quantize::gamma_h_basis().symbols().iter().enumerate() {
        ensure(contract(s) == classical[i], || format!("basis element {} contracts to {}", gamma::NAMES[i], contract(s)))?;
    }
    let rel = deform::verify_order_relations(&deform::quantized_deformation().map_err(err)?, 4).map_err(err)?;
    ensure(rel.iter().all(OrderRelation::holds), || "quantized order relations fail".into())?;
    Ok("thetabar1 closed, not exact at h-depth 2; deformation exact in alpha, beta, h; h = 0 gives the classical objects".into())
}

fn c10_exceptional() -> Outcome {
    let mut seen = Vec::new();
    for (a, want) in [(rat_int(2), 9), (rat_int(3), 9), (rat(1, 2), 9), (rat_int(1), 6), (rat_int(-1), 6)] {
        let d = gamma::derived_even_dim(&a).map_err(err)?;
        ensure(d == want, || format!("alpha = {a}: {d} instead of {want}"))?;
        seen.push(format!("{a}:{d}"));
    }
    Ok(format!("dim [g1, g1] = {}", seen.join(", ")))
}

fn c11_properties() -> Outcome {
    fn runner(seed: u8) -> TestRunner {
        TestRunner::new_with_rng(config(200), TestRng::from_seed(RngAlgorithm::ChaCha, &[seed; 32]))
    }
    let h = || common::homogeneous(2);
    runner(1).run(&(h(), h()), |(a, b)| common::check_antisymmetry(a, b)).map_err(|e| format!("antisymmetry: {e}"))?;
    runner(2).run(&(h(), h(), h()), |(a, b, c)| common::check_jacobi(a, b, c)).map_err(|e| format!("jacobi: {e}"))?;
    runner(3).run(&(h(), h(), h()), |(a, b, c)| common::check_leibniz(a, b, c)).map_err(|e| format!("leibniz: {e}"))?;
    runner(4).run(&common::zero_cochain(), common::check_dd).map_err(|e| format!("d1 d0: {e}"))?;
    runner(5).run(&common::symbol(4).boxed(), common::check_round_trip).map_err(|e| format!("round trip: {e}"))?;
    Ok("antisymmetry, jacobi, leibniz, d1 d0 = 0, round trip: 200 cases each".into())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 11] = [
        ("embedding", c1_embedding),
        ("virasoro", c2_virasoro),
        ("grading law", c3_grading),
        ("euler characterization", c4_euler),
        ("H1 with values in P", c5_h1_in_p),
        ("K4' cocycle and its deformation", c6_k4prime),
        ("P+ cocycle and second order", c7_pplus),
        ("quantized product and contraction", c8_quantized),
        ("quantized deformation", c9_quantized_deformation),
        ("exceptional alpha", c10_exceptional),
        ("property suite", c11_properties),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = f();
        let secs = t.elapsed().as_secs_f64();
        match &r {
            Ok(d) => println!("criterion {:>2} PASS  {name}: {d} [{secs:.1} s]", i + 1),
            Err(d) => {
                println!("criterion {:>2} FAIL  {name}: {d} [{secs:.1} s]", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
