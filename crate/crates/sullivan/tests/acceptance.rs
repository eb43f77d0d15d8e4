//! Acceptance suite: one test per criterion, each printing a PASS line when
//! its assertions hold (run with `--nocapture` to see them). Everything is
//! exact arithmetic; the time budgets are asserted with the stated limits.

use std::sync::Arc;
use std::time::{Duration, Instant};

use sullivan::bridge::{chevalley_eilenberg, sphere_mapping_space_model};
use sullivan::cdga::{
    cohomology_algebra, finite_dimensional_model, Cdga, Element, GeneratorSpec,
    Generators, SullivanAlgebra,
};
use sullivan::dgl::{mapping_space_lie_model, FreeDgl, LieGenerator};
use sullivan::io::{run_command, CommandArgs, ModelFile};
use sullivan::rational::rat;

fn model_path(name: &str) -> String {
    format!("{}/models/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn load(name: &str) -> ModelFile {
    let text = std::fs::read_to_string(model_path(name)).expect("model file");
    ModelFile::parse(&text).expect("shipped models parse")
}

fn wedge_model() -> Arc<SullivanAlgebra> {
    let gens = Generators::new(vec![
        GeneratorSpec::new("x1", 4),
        GeneratorSpec::new("x2", 4),
        GeneratorSpec::new("y", 7),
    ])
    .unwrap();
    let x1x2 = gens.mul(&gens.generator(0), &gens.generator(1));
    SullivanAlgebra::new(gens, vec![("y".into(), x1x2)]).unwrap()
}

fn args_with_degree(n: i64) -> CommandArgs {
    CommandArgs {
        max_degree: Some(n),
        format: "text".into(),
        ..CommandArgs::default()
    }
}

#[test]
fn criterion_01_wedge_cohomology_end_to_end() {
    let t0 = Instant::now();
    let files = vec![load("y_k4_wedge.model")];
    let report = run_command("cohomology", &args_with_degree(16), &files).unwrap();
    let text = report.to_text();
    let expected = [
        1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 2,
    ];
    for (n, dim) in expected.iter().enumerate() {
        let line = format!("  H^{n}: dim {dim}");
        assert!(
            text.lines().any(|l| l.starts_with(&line)),
            "missing `{line}` in report:\n{text}"
        );
    }
    assert!(t0.elapsed() < Duration::from_secs(10));
    println!(
        "acceptance 01 PASS: wedge model cohomology dims 1,0,0,0,2,... through degree 16 ({:?})",
        t0.elapsed()
    );
}

#[test]
fn criterion_02_sphere_mapping_model_shape() {
    let t0 = Instant::now();
    let model = sphere_mapping_space_model(&wedge_model(), 2).unwrap();
    let gens = model.algebra.gens();
    let mut degrees: Vec<i64> = gens.ids().map(|i| gens.degree(i)).collect();
    degrees.sort_unstable();
    assert_eq!(degrees, vec![2, 2, 4, 4, 5, 7]);
    for name in ["x1_bar", "x2_bar"] {
        assert!(model
            .algebra
            .differential_of(gens.id_of(name).unwrap())
            .is_zero());
    }
    let dyb = model.algebra.differential_of(gens.id_of("y_bar").unwrap());
    let combination = {
        let x1b = gens.generator(gens.id_of("x1_bar").unwrap());
        let x2b = gens.generator(gens.id_of("x2_bar").unwrap());
        let x1 = gens.generator(gens.id_of("x1").unwrap());
        let x2 = gens.generator(gens.id_of("x2").unwrap());
        gens.mul(&x1b, &x2).add(&gens.mul(&x1, &x2b))
    };
    assert!(
        dyb == &combination || dyb == &combination.neg(),
        "d(y_bar) must be the two-term combination up to the documented sign"
    );
    assert!(model.algebra.is_minimal());
    // d^2 = 0 holds by construction; re-assert on every generator
    for id in gens.ids() {
        assert!(model.algebra.d(model.algebra.differential_of(id)).is_zero());
    }
    // the same shape through the command surface
    let mut args = args_with_degree(14);
    args.sphere_dim = Some(2);
    let report = run_command("sphere-map", &args, &[load("y_k4_wedge.model")]).unwrap();
    let text = report.to_text();
    assert!(text.contains("generator-degrees: 2, 2, 4, 4, 5, 7"), "{text}");
    assert!(text.contains("d-squared: zero on every generator"));
    assert!(text.contains("minimal: yes"));
    println!(
        "acceptance 02 PASS: doubled model has degrees 2,2,4,4,5,7 with the stated \
         differentials ({:?})",
        t0.elapsed()
    );
}

#[test]
fn criterion_03_regular_sequence_both_orders() {
    let t0 = Instant::now();
    let files = vec![load("f_s2_y.model")];
    // default order: the odd differentials (d yb, d y)
    let report = run_command("regular-seq", &args_with_degree(16), &files).unwrap();
    assert!(report
        .to_text()
        .contains("verdict: REGULAR_UP_TO_BOUND at 16"));
    // reversed order via explicit expressions
    let mut args = args_with_degree(16);
    args.exprs = vec!["x1 * x2".into(), "xb1 * x2 + x1 * xb2".into()];
    let report = run_command("regular-seq", &args, &files).unwrap();
    assert!(report
        .to_text()
        .contains("verdict: REGULAR_UP_TO_BOUND at 16"));
    assert!(t0.elapsed() < Duration::from_secs(30));
    println!(
        "acceptance 03 PASS: the two mapping-model differentials form a regular sequence \
         at bound 16 in both orders ({:?})",
        t0.elapsed()
    );
}

#[test]
fn criterion_04_mapping_model_formality() {
    let t0 = Instant::now();
    let files = vec![load("f_s2_y.model")];
    let report = run_command("formality", &args_with_degree(14), &files).unwrap();
    let text = report.to_text();
    assert!(text.contains("verdict: CERTIFIED_FORMAL"), "{text}");
    assert!(text.contains("certificate: witness quasi-isomorphism re-verified"));
    assert!(t0.elapsed() < Duration::from_secs(120));
    println!(
        "acceptance 04 PASS: mapping-space model certified formal at bound 14 with a \
         machine-verified witness ({:?})",
        t0.elapsed()
    );
}

#[test]
fn criterion_05_nonformal_control() {
    let t0 = Instant::now();
    let files = vec![load("nonformal_massey.model")];
    let report = run_command("formality", &args_with_degree(10), &files).unwrap();
    let text = report.to_text();
    assert!(text.contains("verdict: CERTIFIED_NONFORMAL"), "{text}");
    assert!(text.contains("obstruction-degree: 8"));
    assert!(text.contains("indeterminacy-dimension: 0"));
    assert!(text.contains("massey-class: [x*z]"));
    assert!(t0.elapsed() < Duration::from_secs(10));
    println!(
        "acceptance 05 PASS: the control model is certified nonformal via <x,x,y> = [xz] \
         with zero indeterminacy ({:?})",
        t0.elapsed()
    );
}

#[test]
fn criterion_06_function_space_structural_suite() {
    let t0 = Instant::now();
    // finite model of the even 2-sphere
    let gens = Generators::new(vec![
        GeneratorSpec::new("u", 2),
        GeneratorSpec::new("v", 3),
    ])
    .unwrap();
    let u2 = gens.pow(&gens.generator(0), 2);
    let s2 = SullivanAlgebra::new(gens, vec![("v".into(), u2)]).unwrap();
    let (a, _) = finite_dimensional_model(&s2, 10).unwrap();
    assert_eq!(a.total_dim(), 2);
    let lie = FreeDgl::abelian_boundary(vec![
        LieGenerator::new("a", 3),
        LieGenerator::new("b", 3),
    ])
    .unwrap();
    // construction validates D^2 = 0, antisymmetry, Jacobi and the bracket
    // derivation on all basis pairs/triples through total degree 8
    let model = mapping_space_lie_model(&a, &lie, 8).unwrap();
    model.validate().unwrap();
    let maps = model.evaluation_maps().unwrap();
    for (i, _) in lie.generators().iter().enumerate() {
        let l = lie.generator(i as u32);
        assert_eq!(maps.project(&maps.include(&l)), l);
    }
    assert!(t0.elapsed() < Duration::from_secs(60));
    println!(
        "acceptance 06 PASS: tensor model structural suite and evaluation maps verified \
         through total degree 8 ({:?})",
        t0.elapsed()
    );
}

#[test]
fn criterion_07_finite_models_of_spheres() {
    let t0 = Instant::now();
    for (u, v) in [(2, 3), (4, 7)] {
        let gens = Generators::new(vec![
            GeneratorSpec::new("u", u),
            GeneratorSpec::new("v", v),
        ])
        .unwrap();
        let u2 = gens.pow(&gens.generator(0), 2);
        let alg = SullivanAlgebra::new(gens, vec![("v".into(), u2)]).unwrap();
        let (quotient, projection) = finite_dimensional_model(&alg, 12).unwrap();
        assert_eq!(quotient.total_dim(), 2, "sphere with |u| = {u}");
        let report = sullivan::cdga::check_morphism(&projection, 12).unwrap();
        assert!(report.all_isomorphisms());
    }
    println!(
        "acceptance 07 PASS: sphere models quotient to total dimension 2 with \
         quasi-isomorphic projections through degree 12 ({:?})",
        t0.elapsed()
    );
}

#[test]
fn criterion_08_minimal_model_of_the_polynomial_quotient() {
    let t0 = Instant::now();
    let h = cohomology_algebra(&Cdga::free(wedge_model()), 16).unwrap();
    let mm = sullivan::formality::minimal_model(&Cdga::finite(h), 16).unwrap();
    let gens = mm.model.gens();
    let degrees: Vec<i64> = gens.ids().map(|i| gens.degree(i)).collect();
    assert_eq!(degrees, vec![4, 4, 7], "no further generators below 12");
    let y = gens.ids().find(|&i| gens.degree(i) == 7).unwrap();
    let dy = mm.model.differential_of(y);
    assert!(
        dy.terms()
            .all(|(m, _)| m.word_length() == 2 && m.factors().len() == 2),
        "the degree-7 generator kills the product of the two degree-4 classes"
    );
    println!(
        "acceptance 08 PASS: minimal model of the truncated polynomial quotient has \
         generator degrees 4,4,7 and nothing else below 16 ({:?})",
        t0.elapsed()
    );
}

#[test]
fn criterion_09_dualization_of_the_odd_generator() {
    let t0 = Instant::now();
    let lie = FreeDgl::abelian_boundary(vec![LieGenerator::new("a", 3)]).unwrap();
    let ce = chevalley_eilenberg(&lie, 12).unwrap();
    let alg = &ce.algebra;
    let degrees: Vec<i64> = alg.gens().ids().map(|i| alg.gens().degree(i)).collect();
    assert_eq!(degrees, vec![4, 7]);
    let x = alg.gens().ids().find(|&i| alg.gens().degree(i) == 4).unwrap();
    let w = alg.gens().ids().find(|&i| alg.gens().degree(i) == 7).unwrap();
    assert!(alg.differential_of(x).is_zero());
    let dw = alg.differential_of(w);
    assert!(!dw.is_zero(), "the constant c must be nonzero");
    let x2 = alg.gens().pow(&alg.gens().generator(x), 2);
    let c = dw.terms().next().unwrap().1.clone();
    assert_eq!(dw, &x2.scale(&c));
    // d0 + d1 shape on every generator through degree 12
    for id in alg.gens().ids() {
        for (m, _) in alg.differential_of(id).terms() {
            assert!(m.word_length() == 1 || m.word_length() == 2);
        }
    }
    println!(
        "acceptance 09 PASS: the free Lie algebra on one odd degree-3 generator dualizes \
         to the even sphere shape with dw = {} x^2 ({:?})",
        c,
        t0.elapsed()
    );
}

#[test]
fn criterion_10_randomized_property_suite() {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    let t0 = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x511a);

    fn fixture_algebras() -> Vec<Arc<SullivanAlgebra>> {
        let mut out = vec![wedge_model()];
        for (u, v) in [(2i64, 3i64), (4, 7)] {
            let gens = Generators::new(vec![
                GeneratorSpec::new("u", u),
                GeneratorSpec::new("v", v),
            ])
            .unwrap();
            let u2 = gens.pow(&gens.generator(0), 2);
            out.push(SullivanAlgebra::new(gens, vec![("v".into(), u2)]).unwrap());
        }
        let f = load("f_s2_y.model");
        let sullivan::io::SectionKind::Algebra(a) = &f.sections[0].kind else {
            panic!()
        };
        out.push(a.clone());
        let n = load("nonformal_massey.model");
        let sullivan::io::SectionKind::Algebra(a) = &n.sections[0].kind else {
            panic!()
        };
        out.push(a.clone());
        out
    }

    fn random_homogeneous(
        rng: &mut StdRng,
        alg: &Arc<SullivanAlgebra>,
        max_degree: i64,
    ) -> (i64, Element) {
        loop {
            let n = rng.random_range(1..=max_degree);
            let basis = alg.basis_in_degree(n);
            if basis.is_empty() {
                continue;
            }
            let mut e = Element::zero();
            for m in &basis {
                let c = rng.random_range(-3i64..=3);
                if c != 0 {
                    e = e.add(&Element::from_monomial(m.clone(), rat(c)));
                }
            }
            if !e.is_zero() {
                return (n, e);
            }
        }
    }

    let algebras = fixture_algebras();
    assert_eq!(algebras.len(), 5);
    for alg in &algebras {
        let g = alg.gens();
        for _ in 0..200 {
            // degrees up to 6 each so the product stays within degree 12
            let (da, a) = random_homogeneous(&mut rng, alg, 6);
            let (db, b) = random_homogeneous(&mut rng, alg, 6);
            // graded Leibniz
            let sign = if da % 2 == 0 { 1 } else { -1 };
            let lhs = alg.d(&g.mul(&a, &b));
            let rhs = g.mul(&alg.d(&a), &b).add(&g.mul(&a, &alg.d(&b)).scale(&rat(sign)));
            assert_eq!(lhs, rhs, "Leibniz");
            // Koszul commutativity
            let ab = g.mul(&a, &b);
            let ba = g.mul(&b, &a);
            let expected = if (da * db) % 2 == 0 { ba.clone() } else { ba.neg() };
            assert_eq!(ab, expected, "graded commutativity");
            // d squared on elements up to degree 12
            let (_, e) = random_homogeneous(&mut rng, alg, 12);
            assert!(alg.d(&alg.d(&e)).is_zero(), "d^2 = 0");
        }
    }

    // Lie fixtures: antisymmetry and Jacobi on random homogeneous elements
    let lie_fixtures: Vec<Arc<FreeDgl>> = {
        let l1 = FreeDgl::abelian_boundary(vec![
            LieGenerator::new("a", 3),
            LieGenerator::new("b", 3),
        ])
        .unwrap();
        let l2 = FreeDgl::abelian_boundary(vec![
            LieGenerator::new("a", 1),
            LieGenerator::new("b", 1),
        ])
        .unwrap();
        let l3 = {
            let base = FreeDgl::abelian_boundary(vec![
                LieGenerator::new("a", 3),
                LieGenerator::new("b", 7),
            ])
            .unwrap();
            let a = base.generator(base.id_of("a").unwrap());
            let aa = base.bracket(&a, &a).unwrap();
            base.with_boundary(vec![("b".into(), aa)]).unwrap()
        };
        vec![l1, l2, l3]
    };
    let mut lie_checks = 0;
    'outer: for l in lie_fixtures.iter().cycle() {
        let random_lie = |rng: &mut StdRng, max: i64| loop {
            let n = rng.random_range(1..=max);
            let basis = l.basis_in_degree(n);
            if basis.dim() == 0 {
                continue;
            }
            let mut e = sullivan::dgl::LieElement::zero();
            for i in 0..basis.dim() {
                let c = rng.random_range(-2i64..=2);
                if c != 0 {
                    e = e.add(&basis.element(i).scale(&rat(c)));
                }
            }
            if !e.is_zero() {
                return (n, e);
            }
        };
        let (dx, x) = random_lie(&mut rng, 6);
        let (dy, y) = random_lie(&mut rng, 6);
        let (_dz, z) = random_lie(&mut rng, 4);
        // antisymmetry
        let xy = l.bracket(&x, &y).unwrap();
        let yx = l.bracket(&y, &x).unwrap();
        let expected = if (dx * dy) % 2 == 0 { yx.neg() } else { yx };
        assert_eq!(xy, expected, "graded antisymmetry");
        // Jacobi
        let lhs = l.bracket(&x, &l.bracket(&y, &z).unwrap()).unwrap();
        let mut rhs = l.bracket(&l.bracket(&x, &y).unwrap(), &z).unwrap();
        let second = l.bracket(&y, &l.bracket(&x, &z).unwrap()).unwrap();
        rhs = if (dx * dy) % 2 == 0 {
            rhs.add(&second)
        } else {
            rhs.sub(&second)
        };
        assert_eq!(lhs, rhs, "graded Jacobi");
        // boundary is a bracket derivation
        let lhs = l.boundary(&xy);
        let mut rhs = l.bracket(&l.boundary(&x), &y).unwrap();
        let second = l.bracket(&x, &l.boundary(&y)).unwrap();
        rhs = if dx % 2 == 0 {
            rhs.add(&second)
        } else {
            rhs.sub(&second)
        };
        assert_eq!(lhs, rhs, "boundary derivation");
        lie_checks += 1;
        if lie_checks >= 100 {
            break 'outer;
        }
    }
    assert!(t0.elapsed() < Duration::from_secs(120));
    println!(
        "acceptance 10 PASS: 200 random pairs per fixture algebra satisfy Leibniz, \
         Koszul commutativity and d^2 = 0; 100 random Lie pairs/triples satisfy \
         antisymmetry, Jacobi and the derivation rule ({:?})",
        t0.elapsed()
    );
}

#[test]
fn criterion_11_audit_narratives() {
    let t0 = Instant::now();
    // even sphere: the odd-retract assumption fails, the mapping space is
    // formal and the target cohomology is not free
    let files = vec![load("s2.model"), load("y_k4_wedge.model")];
    let report = run_command("audit", &args_with_degree(14), &files).unwrap();
    let text = report.to_text();
    assert!(text.contains("odd-retract-assumption: fails"), "{text}");
    assert!(text.contains("mapping-formality: CERTIFIED_FORMAL"), "{text}");
    assert!(text.contains("target-cohomology-free: NOT_FREE at degree 8"), "{text}");
    assert!(
        text.contains("the odd-retract assumption is necessary"),
        "{text}"
    );

    // odd sphere: the assumption holds and the prediction is surfaced with
    // the non-free diagnostic
    let files = vec![load("s3.model"), load("y_k4_wedge.model")];
    let report = run_command("audit", &args_with_degree(12), &files).unwrap();
    let text = report.to_text();
    assert!(text.contains("odd-retract-assumption: holds"), "{text}");
    assert!(
        text.contains("if the mapping space is formal, the target cohomology must be free"),
        "{text}"
    );
    assert!(text.contains("target-cohomology-free: NOT_FREE at degree 8"), "{text}");
    assert!(
        !text.contains("mapping-formality: CERTIFIED_FORMAL"),
        "formality must not be certified for the odd-sphere case here:\n{text}"
    );
    println!(
        "acceptance 11 PASS: both audit narratives match the expected assumption, \
         formality and freeness outcomes ({:?})",
        t0.elapsed()
    );
}
