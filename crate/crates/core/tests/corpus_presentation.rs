//! End-to-end checks of the shipped corpus presentations through parsing,
//! rewriting, fiber construction and fiber analysis. Expected values are
//! frozen from independent hand computations with the regular
//! representation.

use fiberlab_core::exactmath::{root_of_unity, Matrix, Scalar};
use fiberlab_core::findim::{
    self, analyze, chevalley_property, composition_multiplicities, is_semisimple_module,
    jacobson_radical, NumericModule,
};
use fiberlab_core::presentation::{
    default_group_samples, default_primitive_samples, parse_presentation, reps, CentralCharacter,
    HopfPresentation, NCPoly,
};

fn load(name: &str) -> HopfPresentation {
    let path = format!("{}/../../corpus/{name}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("read {path}: {e}"));
    parse_presentation(&text).unwrap_or_else(|e| panic!("parse {name}: {e}"))
}

fn s(i: i64) -> Scalar {
    Scalar::from_int(i)
}

fn chi(values: Vec<Scalar>) -> CentralCharacter {
    CentralCharacter { values }
}

fn word_of(pres: &HopfPresentation, text: &[&str]) -> Vec<u32> {
    text.iter()
        .map(|n| pres.gens.iter().position(|g| g == n).unwrap() as u32)
        .collect()
}

fn numeric_module_of_rep(
    pres: &HopfPresentation,
    rep: &reps::Representation,
) -> NumericModule {
    let mats = pres
        .basis
        .iter()
        .map(|w| findim::numeric::CMat::from_exact(&rep.word_matrix(w)))
        .collect();
    NumericModule {
        dim: rep.dim,
        mats,
    }
}

#[test]
fn taft2_parses_and_rewrites() {
    let pres = load("taft_inf_2.hopf");
    assert_eq!(pres.gens, vec!["g", "x"]);
    assert_eq!(pres.rules.len(), 3);
    assert_eq!(pres.basis.len(), 4);
    assert!(pres.critical_pairs(8).unwrap().is_empty());

    // xg normalizes to -gx
    let xg = NCPoly::from_word(word_of(&pres, &["x", "g"]), &pres.central);
    let nf = pres.normal_form(&xg, None).unwrap();
    let gx = word_of(&pres, &["g", "x"]);
    assert_eq!(nf.terms.len(), 1);
    assert_eq!(nf.terms[&gx].to_scalar().unwrap(), s(-1));

    // xx normalizes to the central symbol T on the unit word
    let xx = NCPoly::from_word(word_of(&pres, &["x", "x"]), &pres.central);
    let nf = pres.normal_form(&xx, None).unwrap();
    let c = &nf.terms[&vec![]];
    assert_eq!(c.display(&pres.central), "T");

    // normal_form is idempotent on a mixed element
    let e = xg.add(&xx);
    let nf1 = pres.normal_form(&e, None).unwrap();
    let nf2 = pres.normal_form(&nf1, None).unwrap();
    assert_eq!(nf1, nf2);
}

#[test]
fn taft2_fibers() {
    let pres = load("taft_inf_2.hopf");
    let chars = pres
        .characters(&default_primitive_samples(), &default_group_samples())
        .unwrap();
    assert_eq!(chars.sampled.len(), 5);
    assert_eq!(chars.torsion.len(), 1);
    assert!(!chars.complete);

    // identity fiber: the 4-dimensional Taft algebra
    let f0 = pres.build_fiber(&chars.identity).unwrap();
    assert!(f0.coalgebra.is_some());
    // tr(L_g) = 0 in the regular representation
    let tv = f0.trace_vector();
    assert_eq!(tv[1], s(0));
    assert_eq!(tv[0], s(4));
    let a0 = analyze(f0, 7).unwrap();
    assert_eq!(a0.sd, 2);
    assert_eq!(a0.irr_count, 2);
    assert_eq!(a0.radical.dim_radical(), 2);
    assert_eq!(a0.blocks.block_dims, vec![1, 1]);
    assert_eq!(a0.one_dim_count, 2);
    assert!(findim::radical_is_nilpotent_ideal(&a0.algebra, &a0.radical));
    // x and gx span the radical
    let x_vec = findim::basis_vec(4, 2);
    let gx_vec = findim::basis_vec(4, 3);
    assert!(a0.radical.contains(&x_vec));
    assert!(a0.radical.contains(&gx_vec));
    // the identity fiber is basic, so its radical is a Hopf ideal
    let chev = chevalley_property(&a0.algebra, &a0.radical).unwrap();
    assert!(chev.holds);
    // regular module has composition multiplicities (2, 2)
    let reg = NumericModule::regular(&a0.algebra);
    assert_eq!(
        composition_multiplicities(&a0.blocks, &reg).unwrap(),
        vec![2, 2]
    );
    assert!(!is_semisimple_module(&a0.radical, &reg, 1e-6));
    // two 1-dimensional irreducibles with g acting by +1 and -1, x by 0
    for rep in &a0.irreps {
        assert_eq!(rep.dim, 1);
        let gv = rep.mats[1].at(0, 0);
        assert!((gv.norm() - 1.0).abs() < 1e-8);
        assert!(rep.mats[2].norm_inf() < 1e-8);
    }

    // fiber at T = 1 is a 2x2 matrix algebra
    let f1 = pres.build_fiber(&chi(vec![s(1)])).unwrap();
    let a1 = analyze(f1, 7).unwrap();
    assert_eq!(a1.sd, 4);
    assert_eq!(a1.irr_count, 1);
    assert_eq!(a1.blocks.block_dims, vec![2]);
    assert_eq!(a1.one_dim_count, 0);

    // same fiber dimension at every sampled character
    for c in &chars.sampled {
        assert_eq!(pres.build_fiber(c).unwrap().dim, 4);
    }
}

#[test]
fn taft3_fibers() {
    let pres = load("taft_inf_3.hopf");
    assert_eq!(pres.basis.len(), 9);
    assert!(pres.critical_pairs(9).unwrap().is_empty());
    let id = CentralCharacter::identity(&pres.central);
    let a0 = analyze(pres.build_fiber(&id).unwrap(), 3).unwrap();
    assert_eq!(a0.sd, 3);
    assert_eq!(a0.irr_count, 3);
    assert_eq!(a0.blocks.block_dims, vec![1, 1, 1]);
    assert_eq!(a0.one_dim_count, 3);
    let a1 = analyze(pres.build_fiber(&chi(vec![s(1)])).unwrap(), 3).unwrap();
    assert_eq!(a1.sd, 9);
    assert_eq!(a1.blocks.block_dims, vec![3]);
    assert_eq!(a1.one_dim_count, 0);
}

#[test]
fn ex3_8_fibers_and_chevalley() {
    let pres = load("ex3_8.hopf");
    assert_eq!(pres.basis.len(), 4);
    assert!(pres.critical_pairs(8).unwrap().is_empty());

    // g^4 normalizes to 1
    let g4 = NCPoly::from_word(word_of(&pres, &["g", "g", "g", "g"]), &pres.central);
    let nf = pres.normal_form(&g4, None).unwrap();
    assert_eq!(nf, NCPoly::one(&pres.central));

    let chars = pres
        .characters(&default_primitive_samples(), &default_group_samples())
        .unwrap();
    assert_eq!(chars.sampled.len(), 2);
    assert!(chars.complete);

    let a0 = analyze(pres.build_fiber(&chars.identity).unwrap(), 11).unwrap();
    assert_eq!(a0.sd, 2);
    assert_eq!(a0.irr_count, 2);
    let a1 = analyze(pres.build_fiber(&chi(vec![s(-1)])).unwrap(), 11).unwrap();
    assert_eq!(a1.sd, 4);
    assert_eq!(a1.blocks.block_dims, vec![2]);

    // identity fiber (basic) has the Chevalley property
    assert!(chevalley_property(&a0.algebra, &a0.radical).unwrap().holds);

    // the full 8-dimensional algebra does not: its radical is not a coideal
    let full = pres.full_record().unwrap();
    assert_eq!(full.dim, 8);
    let rad = jacobson_radical(&full).unwrap();
    assert_eq!(rad.ss_dim, 6);
    assert_eq!(rad.dim_radical(), 2);
    let chev = chevalley_property(&full, &rad).unwrap();
    assert!(!chev.holds);
    let (witness, why) = chev.witness.unwrap();
    assert!(why.contains("coproduct"), "{why}");
    assert!(rad.contains(&witness));

    // convolution: the nonidentity character squares to the identity
    let m = chi(vec![s(-1)]);
    assert_eq!(m.convolve(&m, &pres.central), chars.identity);
    assert_eq!(m.inverse(&pres.central), m);
}

#[test]
fn q8_fibers_all_semisimple() {
    let pres = load("q8_central.hopf");
    assert!(pres.critical_pairs(8).unwrap().is_empty());
    let chars = pres
        .characters(&default_primitive_samples(), &default_group_samples())
        .unwrap();
    assert_eq!(chars.sampled.len(), 2);
    for c in &chars.sampled {
        let a = analyze(pres.build_fiber(c).unwrap(), 5).unwrap();
        assert_eq!(a.sd, 4);
        assert_eq!(a.radical.dim_radical(), 0);
        if c.is_identity(&pres.central) {
            assert_eq!(a.blocks.block_dims, vec![1, 1, 1, 1]);
            assert_eq!(a.one_dim_count, 4);
        } else {
            assert_eq!(a.blocks.block_dims, vec![2]);
            assert_eq!(a.one_dim_count, 0);
        }
    }
    let full = pres.full_record().unwrap();
    assert_eq!(full.dim, 8);
    let rad = jacobson_radical(&full).unwrap();
    assert_eq!(rad.dim_radical(), 0);
    assert!(chevalley_property(&full, &rad).unwrap().holds);
}

#[test]
fn ex3_2_fibers() {
    let pres = load("ex3_2.hopf");
    assert_eq!(pres.basis.len(), 8);
    assert!(pres.critical_pairs(10).unwrap().is_empty());

    let chars = pres
        .characters(&default_primitive_samples(), &default_group_samples())
        .unwrap();
    assert_eq!(chars.sampled.len(), 2);

    let a0 = analyze(pres.build_fiber(&chars.identity).unwrap(), 13).unwrap();
    assert_eq!(a0.algebra.dim, 8);
    assert_eq!(a0.sd, 4);
    assert_eq!(a0.irr_count, 4);
    assert_eq!(a0.blocks.block_dims, vec![1, 1, 1, 1]);
    assert_eq!(a0.one_dim_count, 4);
    assert!(chevalley_property(&a0.algebra, &a0.radical).unwrap().holds);

    let a1 = analyze(pres.build_fiber(&chi(vec![s(-1)])).unwrap(), 13).unwrap();
    assert_eq!(a1.algebra.dim, 8);
    assert_eq!(a1.sd, 4);
    assert_eq!(a1.irr_count, 1);
    assert_eq!(a1.blocks.block_dims, vec![2]);
    assert_eq!(a1.one_dim_count, 0);

    // the full 16-dimensional algebra has the Chevalley property
    let full = pres.full_record().unwrap();
    assert_eq!(full.dim, 16);
    let rad = jacobson_radical(&full).unwrap();
    assert_eq!(rad.ss_dim, 8);
    assert!(chevalley_property(&full, &rad).unwrap().holds);
}

#[test]
fn ex3_2_representations() {
    let pres = load("ex3_2.hopf");
    let i = root_of_unity(4, 1);

    // the 2-dimensional irreducible: b, c diagonal, x the swap, y zero
    let rho5 = reps::Representation::new(
        chi(vec![s(-1)]),
        vec![
            Matrix::from_rows(vec![vec![s(-1), s(0)], vec![s(0), s(1)]]),
            Matrix::from_rows(vec![vec![s(1), s(0)], vec![s(0), s(-1)]]),
            Matrix::from_rows(vec![vec![s(0), s(1)], vec![s(1), s(0)]]),
            Matrix::zero(2, 2),
        ],
    );
    assert!(reps::verify_rep(&pres, &rho5).ok);

    // flipping one sign in the action of x breaks the x^2 relation
    let mut bad = rho5.clone();
    bad.action[2] = Matrix::from_rows(vec![vec![s(0), s(-1)], vec![s(1), s(0)]]);
    let check = reps::verify_rep(&pres, &bad);
    assert!(!check.ok);
    assert!(check.first_violation.unwrap().contains("rule"));

    // the trivial representation always passes
    let triv = reps::Representation::trivial(&pres);
    assert!(reps::verify_rep(&pres, &triv).ok);

    // one-dimensional representations at the identity character
    let one_dim = |bv: i64, xv: Scalar| {
        reps::Representation::new(
            chi(vec![s(1)]),
            vec![
                Matrix::new(1, 1, vec![s(bv)]),
                Matrix::new(1, 1, vec![s(bv)]),
                Matrix::new(1, 1, vec![xv]),
                Matrix::zero(1, 1),
            ],
        )
    };
    let rho1 = one_dim(1, s(1));
    let rho2 = one_dim(1, s(-1));
    let rho3 = one_dim(-1, i.clone());
    assert!(reps::verify_rep(&pres, &rho1).ok);
    assert!(reps::verify_rep(&pres, &rho2).ok);
    assert!(reps::verify_rep(&pres, &rho3).ok);

    // rho2 (x) rho2 sends x to +1, i.e. it is rho1
    let sq = reps::tensor_rep(&pres, &rho2, &rho2).unwrap();
    assert!(reps::verify_rep(&pres, &sq).ok);
    assert_eq!(*sq.action[2].at(0, 0), s(1));

    // the dual of rho2 sends x to rho2(S(x)) = rho2(x) = -1
    let dual = reps::dual_rep(&pres, &rho2).unwrap();
    assert!(reps::verify_rep(&pres, &dual).ok);
    assert_eq!(*dual.action[2].at(0, 0), s(-1));

    // dual of the trivial representation is trivial
    let dual_triv = reps::dual_rep(&pres, &triv).unwrap();
    assert!(reps::verify_rep(&pres, &dual_triv).ok);
    for (a, b) in dual_triv.action.iter().zip(triv.action.iter()) {
        assert_eq!(a, b);
    }
}

#[test]
fn tensor_with_trivial_and_duals() {
    let pres = load("taft_inf_2.hopf");
    // 2-dimensional irreducible of the fiber at T = 1
    let w = reps::Representation::new(
        chi(vec![s(1)]),
        vec![
            Matrix::from_rows(vec![vec![s(1), s(0)], vec![s(0), s(-1)]]),
            Matrix::from_rows(vec![vec![s(0), s(1)], vec![s(1), s(0)]]),
        ],
    );
    assert!(reps::verify_rep(&pres, &w).ok);

    // trivial (x) W acts exactly like W under the canonical identification
    let triv = reps::Representation::trivial(&pres);
    let tw = reps::tensor_rep(&pres, &triv, &w).unwrap();
    assert!(reps::verify_rep(&pres, &tw).ok);
    assert_eq!(tw.character, w.character);
    for (a, b) in tw.action.iter().zip(w.action.iter()) {
        assert_eq!(a, b);
    }

    // sign representation of the identity fiber tensored with W stays
    // irreducible of dimension 2: composition multiplicity 1
    let sign = reps::Representation::new(
        CentralCharacter::identity(&pres.central),
        vec![Matrix::new(1, 1, vec![s(-1)]), Matrix::zero(1, 1)],
    );
    assert!(reps::verify_rep(&pres, &sign).ok);
    let sw = reps::tensor_rep(&pres, &sign, &w).unwrap();
    assert!(reps::verify_rep(&pres, &sw).ok);
    assert_eq!(sw.character, w.character);
    let fiber = pres.build_fiber(&chi(vec![s(1)])).unwrap();
    let analysis = analyze(fiber, 1).unwrap();
    let module = numeric_module_of_rep(&pres, &sw);
    assert_eq!(
        composition_multiplicities(&analysis.blocks, &module).unwrap(),
        vec![1]
    );

    // double dual has the same composition multiplicities as W
    let dd = reps::dual_rep(&pres, &reps::dual_rep(&pres, &w).unwrap()).unwrap();
    assert!(reps::verify_rep(&pres, &dd).ok);
    let dd_mod = numeric_module_of_rep(&pres, &dd);
    let w_mod = numeric_module_of_rep(&pres, &w);
    assert_eq!(
        composition_multiplicities(&analysis.blocks, &dd_mod).unwrap(),
        composition_multiplicities(&analysis.blocks, &w_mod).unwrap()
    );
}

#[test]
fn bad_inputs_are_rejected() {
    // unclosed basis: products escape the declared span
    let text = r#"
[generators] g
[rules]
g^3 -> 1
[coproduct] g -> g (x) g
[counit] g -> 1
[antipode] g -> g^2
[basis] 1, g
"#;
    match parse_presentation(text).err() {
        Some(fiberlab_core::presentation::PresentationError::BasisNotClosed { detail }) => {
            assert!(detail.contains("g"), "{detail}");
        }
        other => panic!("expected BasisNotClosed, got {other:?}"),
    }

    // counit must respect the rules
    let text = r#"
[generators] g
[rules]
g^2 -> 1
[coproduct] g -> g (x) g
[counit] g -> 2
[antipode] g -> g
[basis] 1, g
"#;
    assert!(matches!(
        parse_presentation(text).err(),
        Some(fiberlab_core::presentation::PresentationError::HopfMapInconsistent { .. })
    ));
}

#[test]
fn taft3_tensor_square_cancellation() {
    // the cube of the skew-primitive generator is primitive: the cross
    // terms carry q-binomial coefficients that vanish at a cube root of
    // unity, leaving exactly two tensor terms
    let pres = load("taft_inf_3.hopf");
    let x = word_of(&pres, &["x", "x", "x"]);
    let delta = pres
        .delta_of(&NCPoly::from_word(x, &pres.central))
        .unwrap();
    let rw = fiberlab_core::presentation::Rewriter::new(&pres.rules, &pres.central);
    let nf = rw.normal_form_tensor(&delta).unwrap();
    // everything collapses onto the unit (x) unit word pair with central
    // coefficient T (x) 1 + 1 (x) T
    assert_eq!(nf.terms.len(), 1, "{nf:?}");
    let empty: Vec<u32> = vec![];
    let cc = nf.terms.get(&(empty.clone(), empty)).unwrap();
    assert_eq!(cc.terms.len(), 2);
    for ((l, r), s) in &cc.terms {
        assert!(s.is_one());
        assert_eq!(l.exps[0] + r.exps[0], 1);
    }
}

#[test]
fn circular_rules_hit_the_step_cap() {
    // both orientations of a commutation relation pass the subword guard
    // but rewrite forever; the cap turns that into a diagnosable error
    let text = r#"
[generators] a b
[rules]
a b -> b a
b a -> a b
[coproduct]
a -> a (x) a
b -> b (x) b
[counit] a -> 1 ; b -> 1
[antipode] a -> a ; b -> b
[basis] 1, a, b, a b
"#;
    match parse_presentation(text).err() {
        Some(fiberlab_core::presentation::PresentationError::StepCapExceeded) => {}
        other => panic!("expected StepCapExceeded, got {other:?}"),
    }
}
