//! Randomized property suites: exact field axioms, rank-nullity, gcd
//! divisibility, determinant multiplicativity, Perron estimates on
//! idempotent-shaped matrices, normal-form linearity, radical structure,
//! block certification, and multiplicity additivity.

use num::BigInt;
use proptest::prelude::*;

use fiberlab_core::exactmath::{
    perron_eigenvalue, poly_gcd_monic, root_of_unity, Matrix, Poly, Rational, Scalar,
};
use fiberlab_core::findim::{
    self, analyze, composition_multiplicities, jacobson_radical, numeric::CMat, NumericModule,
};
use fiberlab_core::presentation::{parse_presentation, HopfPresentation, NCPoly};

fn corpus(name: &str) -> HopfPresentation {
    let path = format!("{}/../../corpus/{name}", env!("CARGO_MANIFEST_DIR"));
    parse_presentation(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn rational_strategy() -> impl Strategy<Value = Rational> {
    (-50i64..50, 1i64..12)
        .prop_map(|(p, q)| Rational::new(BigInt::from(p), BigInt::from(q)))
}

fn scalar_strategy() -> impl Strategy<Value = Scalar> {
    let orders = prop_oneof![Just(1u64), Just(2), Just(3), Just(4), Just(6), Just(12)];
    (orders, proptest::collection::vec(rational_strategy(), 1..5)).prop_map(|(order, coeffs)| {
        let phi = coeffs.len();
        let mut padded = coeffs;
        padded.resize(phi, Rational::from_integer(BigInt::from(0)));
        Scalar::from_coordinates(order, padded)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1024))]

    /// Field axioms hold exactly on mixed-order cyclotomic scalars.
    #[test]
    fn field_axioms(a in scalar_strategy(), b in scalar_strategy(), c in scalar_strategy()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.add(&a.neg()).is_zero());
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inverse().unwrap()).is_one());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// rank + nullity = number of columns.
    #[test]
    fn rank_nullity(entries in proptest::collection::vec(rational_strategy(), 12)) {
        let scalars: Vec<Scalar> = entries.into_iter().map(Scalar::from_rational).collect();
        let m = Matrix::new(3, 4, scalars);
        prop_assert_eq!(m.rank() + m.kernel().len(), m.cols());
    }

    /// det(AB) = det(A) det(B) on exact 4x4 matrices.
    #[test]
    fn det_multiplicative(
        a in proptest::collection::vec(rational_strategy(), 16),
        b in proptest::collection::vec(rational_strategy(), 16),
        z in 0i64..4,
    ) {
        // sprinkle a root of unity into one entry for mixed-order coverage
        let mut av: Vec<Scalar> = a.into_iter().map(Scalar::from_rational).collect();
        av[5] = av[5].add(&root_of_unity(4, z));
        let bv: Vec<Scalar> = b.into_iter().map(Scalar::from_rational).collect();
        let ma = Matrix::new(4, 4, av);
        let mb = Matrix::new(4, 4, bv);
        let lhs = ma.mul(&mb).det().unwrap();
        let rhs = ma.det().unwrap().mul(&mb.det().unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    /// The monic gcd divides both inputs, and any common divisor divides it.
    #[test]
    fn gcd_divisibility(
        d in proptest::collection::vec(rational_strategy(), 1..4),
        p1 in proptest::collection::vec(rational_strategy(), 1..4),
        q1 in proptest::collection::vec(rational_strategy(), 1..4),
    ) {
        let mk = |v: Vec<Rational>| Poly::from_coeffs(v.into_iter().map(Scalar::from_rational).collect());
        let d = mk(d);
        let p = d.mul(&mk(p1));
        let q = d.mul(&mk(q1));
        if p.is_zero() && q.is_zero() {
            return Ok(());
        }
        let g = poly_gcd_monic(&p, &q).unwrap();
        prop_assert!(p.exact_div(&g).is_some());
        prop_assert!(q.exact_div(&g).is_some());
        if !d.is_zero() {
            prop_assert!(g.exact_div(&d.monic()).is_some());
        }
    }

    /// Power iteration recovers c for positive matrices with M^2 = c M.
    #[test]
    fn perron_on_idempotent_shape(
        v in proptest::collection::vec(1i64..6, 2..5),
        w in proptest::collection::vec(1i64..6, 2..5),
    ) {
        let n = v.len().min(w.len());
        let m: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| v[i] * w[j]).collect())
            .collect();
        let c: i64 = (0..n).map(|i| w[i] * v[i]).sum();
        let est = perron_eigenvalue(&m, 1e-9).unwrap();
        prop_assert!((est.value - c as f64).abs() < 1e-7, "estimate {} vs {}", est.value, c);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Normal forms are idempotent and linear over coefficients.
    #[test]
    fn normal_form_linear_idempotent(
        word1 in proptest::collection::vec(0u32..2, 0..6),
        word2 in proptest::collection::vec(0u32..2, 0..6),
        coeff in rational_strategy(),
    ) {
        let pres = corpus("ex3_8.hopf");
        let s = Scalar::from_rational(coeff);
        let e1 = NCPoly::from_word(word1, &pres.central);
        let e2 = NCPoly::from_word(word2, &pres.central);
        let nf1 = pres.normal_form(&e1, None).unwrap();
        let nf2 = pres.normal_form(&e2, None).unwrap();
        // idempotence
        prop_assert_eq!(&pres.normal_form(&nf1, None).unwrap(), &nf1);
        // linearity: NF(s e1 + e2) = s NF(e1) + NF(e2)
        let scaled = e1.scale(
            &fiberlab_core::presentation::CElem::from_scalar(&pres.central, s.clone()),
            &pres.central,
        );
        let sum = scaled.add(&e2);
        let lhs = pres.normal_form(&sum, None).unwrap();
        let rhs = nf1
            .scale(
                &fiberlab_core::presentation::CElem::from_scalar(&pres.central, s),
                &pres.central,
            )
            .add(&nf2);
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn radical_structure_and_block_certification_on_corpus() {
    for name in [
        "taft_inf_2.hopf",
        "taft_inf_3.hopf",
        "ex3_8.hopf",
        "ex3_2.hopf",
        "q8_central.hopf",
    ] {
        let pres = corpus(name);
        let space = pres
            .characters(
                &fiberlab_core::presentation::default_primitive_samples(),
                &fiberlab_core::presentation::default_group_samples(),
            )
            .unwrap();
        for chi in &space.sampled {
            let alg = pres.build_fiber(chi).unwrap();
            let analysis = analyze(alg, 17).unwrap();
            // radical is a nilpotent two-sided ideal
            assert!(
                findim::radical_is_nilpotent_ideal(&analysis.algebra, &analysis.radical),
                "{name}"
            );
            // exact bookkeeping
            assert_eq!(
                analysis.sd + analysis.radical.dim_radical(),
                analysis.algebra.dim
            );
            assert!(analysis.irr_count <= analysis.sd);
            let sq: usize = analysis.blocks.block_dims.iter().map(|n| n * n).sum();
            assert_eq!(sq, analysis.sd, "{name}: block certification");
            assert_eq!(analysis.blocks.block_dims.len(), analysis.irr_count);
            // every numeric irreducible satisfies the structure constants
            for rep in &analysis.irreps {
                assert!(rep.action_residual(&analysis.algebra) < 1e-8);
            }
        }
    }
}

#[test]
fn multiplicity_additivity_on_direct_sums() {
    let pres = corpus("ex3_8.hopf");
    let id = fiberlab_core::presentation::CentralCharacter::identity(&pres.central);
    let alg = pres.build_fiber(&id).unwrap();
    let analysis = analyze(alg, 23).unwrap();
    let reg = NumericModule::regular(&analysis.algebra);
    let reg_mults = composition_multiplicities(&analysis.blocks, &reg).unwrap();

    let direct_sum = |a: &NumericModule, b: &NumericModule| -> NumericModule {
        let dim = a.dim + b.dim;
        let mats = a
            .mats
            .iter()
            .zip(b.mats.iter())
            .map(|(ma, mb)| {
                let mut m = CMat::zero(dim, dim);
                for i in 0..a.dim {
                    for j in 0..a.dim {
                        m.set(i, j, ma.at(i, j));
                    }
                }
                for i in 0..b.dim {
                    for j in 0..b.dim {
                        m.set(a.dim + i, a.dim + j, mb.at(i, j));
                    }
                }
                m
            })
            .collect();
        NumericModule { dim, mats }
    };

    // regular + irreducible, irreducible + irreducible, regular + regular
    for other in analysis.irreps.iter().chain(std::iter::once(&reg)) {
        let sum = direct_sum(&reg, other);
        let sum_mults = composition_multiplicities(&analysis.blocks, &sum).unwrap();
        let other_mults = composition_multiplicities(&analysis.blocks, other).unwrap();
        let expected: Vec<usize> = reg_mults
            .iter()
            .zip(other_mults.iter())
            .map(|(a, b)| a + b)
            .collect();
        assert_eq!(sum_mults, expected);
    }
}

#[test]
fn semisimple_modules_reconstruct_dimension() {
    let pres = corpus("q8_central.hopf");
    let m = fiberlab_core::presentation::CentralCharacter {
        values: vec![Scalar::from_int(-1)],
    };
    let alg = pres.build_fiber(&m).unwrap();
    let analysis = analyze(alg, 29).unwrap();
    let rad = jacobson_radical(&analysis.algebra).unwrap();
    let reg = NumericModule::regular(&analysis.algebra);
    assert!(findim::is_semisimple_module(&rad, &reg, 1e-6));
    let mults = composition_multiplicities(&analysis.blocks, &reg).unwrap();
    let total: usize = mults
        .iter()
        .zip(analysis.blocks.block_dims.iter())
        .map(|(m, n)| m * n)
        .sum();
    assert_eq!(total, reg.dim);
}
