//! Acceptance suite: one test per criterion, each printing a pass line.
//! All comparisons are exact; no tolerances anywhere.

use num_bigint::BigInt;
use unitensor_core::combinatorics::{multipartitions, MultiPartition, Partition, SplitType};
use unitensor_core::exactalg::TPoly;
use unitensor_core::hall_littlewood::modified_kostka;
use unitensor_core::kernel::KernelContext;
use unitensor_core::oracle;
use unitensor_core::quiver;
use unitensor_core::sn_modules;
use unitensor_core::suites::{self, SuiteOptions};

fn mp(s: &str) -> MultiPartition {
    s.parse().unwrap()
}

fn steinberg(n: u32) -> MultiPartition {
    MultiPartition::diagonal(Partition::column(n), 3)
}

/// Criterion 1: the n = 3, k = 3, g = 0 table reproduces the published
/// values: ten U entries (constants and t + 1) and the four V entries with
/// their root classifications.
#[test]
fn criterion_1_table_reproduction() {
    let start = std::time::Instant::now();
    let ctx = KernelContext::new(3, 3, 0);
    // The ten U values, indexed by the multiset of components.
    let expected_u: &[(&str, &[i64])] = &[
        ("3|3|3", &[1]),
        ("3|3|2,1", &[]),
        ("3|3|1^3", &[]),
        ("3|2,1|2,1", &[1]),
        ("3|2,1|1^3", &[]),
        ("3|1^3|1^3", &[1]),
        ("2,1|2,1|2,1", &[2]),
        ("2,1|2,1|1^3", &[2]),
        ("2,1|1^3|1^3", &[2]),
        ("1^3|1^3|1^3", &[1, 1]),
    ];
    for (text, coeffs) in expected_u {
        let mu = mp(text);
        assert_eq!(
            ctx.u_poly(&mu).unwrap(),
            TPoly::from_int_coeffs(coeffs),
            "U at {mu}"
        );
    }
    // Every multipartition of size 3 is a coordinate permutation of one of
    // the ten rows; U is permutation invariant, so the full table is pinned.
    for mu in multipartitions(3, 3) {
        let mut comps: Vec<Partition> = mu.components().to_vec();
        comps.sort_by(|a, b| b.cmp(a));
        let canonical = MultiPartition::new(comps);
        assert_eq!(
            ctx.u_poly(&mu).unwrap(),
            ctx.u_poly(&canonical).unwrap(),
            "permutation invariance at {mu}"
        );
    }
    // The four V rows with root classes.
    let v_rows: &[(&str, &[i64], &str)] = &[
        ("1^3|1^3|1^3", &[0, 1], "imaginary"), // affine E6 indivisible
        ("2,1|1^3|1^3", &[1], "real"),         // E6
    ];
    for (text, coeffs, class) in v_rows {
        let mu = mp(text);
        assert_eq!(ctx.v_poly(&mu).unwrap(), TPoly::from_int_coeffs(coeffs));
        let (quiver, v) = quiver::build_quiver(&mu, 0);
        let got = match quiver.classify_root(&v) {
            quiver::RootClass::RealRoot { .. } => "real",
            quiver::RootClass::ImaginaryRoot { .. } => "imaginary",
            quiver::RootClass::NotRoot => "none",
        };
        assert_eq!(&got, class, "root class at {mu}");
    }
    // Sizes 2 and 1: D4 and A1 real roots with V = 1.
    let ctx2 = KernelContext::new(2, 3, 0);
    let d4 = mp("1^2|1^2|1^2");
    assert_eq!(ctx2.v_poly(&d4).unwrap(), TPoly::one());
    let (q4, v4) = quiver::build_quiver(&d4, 0);
    assert!(q4.classify_root(&v4).is_real());
    let ctx1 = KernelContext::new(1, 3, 0);
    let a1 = mp("1|1|1");
    assert_eq!(ctx1.v_poly(&a1).unwrap(), TPoly::one());
    let (q1, v1) = quiver::build_quiver(&a1, 0);
    assert!(q1.classify_root(&v1).is_real());
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 10,
        "criterion 1 exceeded 10 s: {elapsed:?}"
    );
    println!("criterion 1 (table reproduction, {elapsed:?}): pass");
}

/// Criterion 2: the A polynomial at the affine-E6 point is t + 6, through
/// both the direct pairing and the Kostka transform.
#[test]
fn criterion_2_a_polynomial_anchor() {
    let ctx = KernelContext::new(3, 3, 0);
    let mu = mp("1^3|1^3|1^3");
    let expected = TPoly::from_int_coeffs(&[6, 1]);
    assert_eq!(ctx.a_poly(&mu).unwrap(), expected);
    assert_eq!(ctx.a_poly_via_kostka(&mu).unwrap(), expected);
    println!("criterion 2 (A = t + 6 both routes): pass");
}

/// Criterion 3, exact part: triple Steinberg products for n = 2, 3, 4.
#[test]
fn criterion_3_steinberg_exact_values() {
    let expected: &[(u32, &[i64])] = &[(2, &[1]), (3, &[1, 1]), (4, &[1, 2, 0, 1])];
    for (n, coeffs) in expected {
        let ctx = KernelContext::new(*n, 3, 0);
        assert_eq!(
            ctx.u_poly(&steinberg(*n)).unwrap(),
            TPoly::from_int_coeffs(coeffs),
            "Steinberg product at n = {n}"
        );
    }
    println!("criterion 3a (Steinberg n = 2, 3, 4 exact): pass");
}

/// Criterion 3, shape part: for n = 5, 6 the triple Steinberg product is
/// monic of degree (n-1)(n-2)/2 with non-negative integer coefficients.
/// Runtime target: under two minutes.
#[test]
fn criterion_3_steinberg_shape_to_n6() {
    let start = std::time::Instant::now();
    for n in [5u32, 6] {
        let ctx = KernelContext::new(n, 3, 0);
        let u = ctx.u_poly(&steinberg(n)).unwrap();
        let expected_degree = ((n - 1) * (n - 2) / 2) as usize;
        assert!(u.is_monic(), "monic at n = {n}");
        assert_eq!(u.degree(), Some(expected_degree), "degree at n = {n}");
        assert!(u.is_integer() && u.has_nonnegative_coeffs());
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 120,
        "criterion 3 (n <= 6) exceeded 2 min"
    );
    println!("criterion 3b (Steinberg n = 5, 6 shape, {elapsed:?}): pass");
}

/// Criterion 3, large part: the same shape statement at n = 7.
/// Runtime target: under twenty minutes.
#[test]
fn criterion_3_steinberg_shape_n7() {
    let start = std::time::Instant::now();
    let ctx = KernelContext::new(7, 3, 0);
    let u = ctx.u_poly(&steinberg(7)).unwrap();
    assert!(u.is_monic());
    assert_eq!(u.degree(), Some(15));
    assert!(u.is_integer() && u.has_nonnegative_coeffs());
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 1200,
        "criterion 3 (n = 7) exceeded 20 min"
    );
    println!("criterion 3c (Steinberg n = 7 shape, {elapsed:?}): pass");
}

/// Criterion 4: at n = 6, mu = (2^3)^3, the quadratic invariant is 2 and
/// the split-type term over the doubled affine-E6 member is exactly t^2;
/// its leading coefficient matches the trivial multiplicity of the module
/// decomposition.
#[test]
fn criterion_4_doubled_imaginary_anchor() {
    let mu = mp("2^3|2^3|2^3");
    assert_eq!(quiver::d_mu(&mu, 0), 2);
    let alpha = mp("1^3|1^3|1^3");
    let split = SplitType::new([(alpha.clone(), 2)]);
    assert_eq!(quiver::d_split_type(&split, 0), 4);
    let ctx = KernelContext::new(6, 3, 0);
    let w = ctx.w_poly(&split, &mu).unwrap();
    assert_eq!(w, TPoly::monomial(2, unitensor_core::exactalg::rat(1)));
    // Leading coefficient = trivial multiplicity of the decomposition.
    let decomposition = sn_modules::decompose_module(&split, &mu).unwrap();
    assert_eq!(decomposition.trivial_multiplicity(), 1);
    println!("criterion 4 (doubled imaginary-root term = t^2): pass");
}

/// Criterion 5: pipeline vs brute-force tensor products over every
/// multipartition with n <= 3, k <= 3, g <= 1, q in {2, 3}, including the
/// independently derivable genus-one point. Runtime target: five minutes.
#[test]
fn criterion_5_oracle_equivalence() {
    let start = std::time::Instant::now();
    for g in 0..=1u32 {
        for q in [2u8, 3] {
            for k in 1..=3usize {
                let ctx = KernelContext::new(3, k, g);
                for n in 1..=3u32 {
                    for mu in multipartitions(n, k) {
                        let pipeline = ctx.u_poly(&mu).unwrap().eval_int(q as i64);
                        let brute = oracle::tensor_inner_product(&mu, g, q).unwrap();
                        assert_eq!(
                            pipeline,
                            unitensor_core::exactalg::Rat::from_integer(brute.clone()),
                            "mismatch at mu={mu}, k={k}, g={g}, q={q}"
                        );
                    }
                }
            }
        }
    }
    assert_eq!(
        oracle::tensor_inner_product(&mp("1^2|1^2"), 1, 2).unwrap(),
        BigInt::from(12)
    );
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 300, "criterion 5 exceeded 5 min");
    println!("criterion 5 (oracle equivalence, {elapsed:?}): pass");
}

/// Criterion 6: the twisted (generic) oracle at n = 2, q = 3 recovers V.
#[test]
fn criterion_6_generic_oracle() {
    let ctx = KernelContext::new(2, 3, 0);
    let d4 = mp("1^2|1^2|1^2");
    let got = oracle::generic_inner_product(&d4, &[2, 1, 1], 0, 3).unwrap();
    assert_eq!(got, BigInt::from(1));
    assert_eq!(
        ctx.v_poly(&d4).unwrap().eval_int(3),
        unitensor_core::exactalg::rat(1)
    );
    let row = mp("2|2|2");
    let got = oracle::generic_inner_product(&row, &[2, 1, 1], 0, 3).unwrap();
    assert_eq!(got, BigInt::from(0));
    assert!(ctx.v_poly(&row).unwrap().is_zero());
    println!("criterion 6 (generic oracle at q = 3): pass");
}

/// Criterion 7: every named theorem suite passes at its declared bound.
#[test]
fn criterion_7_theorem_suites() {
    let start = std::time::Instant::now();
    for name in suites::SUITE_NAMES {
        let report = suites::run_suite(name, SuiteOptions::default()).unwrap();
        assert!(
            report.passed(),
            "suite {name} failed: {:?}",
            report.failures
        );
        println!("criterion 7 [{name}]: pass ({} cases)", report.cases);
    }
    println!("criterion 7 (theorem suites, {:?}): pass", start.elapsed());
}

/// Criterion 8: convention locks between the finite-group oracle and the
/// symmetric-function side.
#[test]
fn criterion_8_convention_locks() {
    // Green values: U_mu(C) = <Htilde_{omega_C}(x; q), s_mu> everywhere.
    for (n, q) in [(1usize, 2u8), (1, 3), (2, 2), (2, 3), (3, 2), (3, 3)] {
        let table = oracle::unipotent_table(n, q).unwrap();
        let group = &table.group;
        for (idx, class) in group.classes.iter().enumerate() {
            let hl = oracle::htilde_of_type(&class.class_type, q);
            for mu in table.partitions() {
                let paired = hl.pair_schur_rat(&MultiPartition::new(vec![mu.clone()]));
                assert_eq!(
                    paired,
                    unitensor_core::exactalg::rat(table.character(mu)[idx]),
                    "Green value lock at n={n}, q={q}, mu={mu}"
                );
            }
            // Weight lock: H_{omega_C}(q) = E(C)/a_C(q) for g in {0, 1}.
            for g in 0..=1u32 {
                let mut weight = unitensor_core::exactalg::rat(1);
                for ((d, lam), mult) in class.class_type.entries() {
                    let qd = unitensor_core::exactalg::Rat::from_integer(BigInt::from(q).pow(*d));
                    let w =
                        unitensor_core::hall_littlewood::h_weight_eval(lam.component(0), g, &qd);
                    for _ in 0..mult {
                        weight *= &w;
                    }
                }
                let e_c = unitensor_core::exactalg::Rat::from_integer(
                    BigInt::from(q).pow(g * class.centralizer_dim),
                );
                let a_c = unitensor_core::exactalg::Rat::from_integer(BigInt::from(
                    group.order / class.size,
                ));
                assert_eq!(weight, e_c / a_c, "weight lock at n={n}, q={q}");
            }
        }
        // Steinberg degree lock: the modified Kostka value at the full
        // column matches the Steinberg dimension.
        let col = Partition::column(n as u32);
        let kt = modified_kostka(&col, &col).unwrap();
        let id_idx = group
            .classes
            .iter()
            .position(|c| c.rep == oracle::fq::Mat::identity(n, q))
            .unwrap();
        assert_eq!(
            kt.eval_int(q as i64),
            unitensor_core::exactalg::rat(table.character(&col)[id_idx])
        );
        assert_eq!(
            kt,
            TPoly::monomial(n * (n - 1) / 2, unitensor_core::exactalg::rat(1))
        );
    }
    println!("criterion 8 (convention locks): pass");
}
