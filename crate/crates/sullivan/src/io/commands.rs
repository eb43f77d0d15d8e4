//! Command dispatch. One command per invocation; every degree-bounded
//! command requires an explicit --max-degree. Reports are deterministic and
//! re-verify any certificate they embed.

use super::parse::{eval_algebra_expr, parse_expression, ModelFile, SectionKind};
use super::print::{print_algebra, print_section};
use super::report::Report;
use super::CliError;
use crate::bridge::{chevalley_eilenberg, sphere_mapping_space_model};
use crate::cdga::{
    cohomology_algebra, finite_dimensional_model, is_free_graded_commutative,
    odd_spherical_retract, sphere_dimension_of, Cdga, CdgaElement, Element, FreenessVerdict,
    Generators, SullivanAlgebra,
};
use crate::dgl::mapping_space_lie_model;
use crate::formality::{
    bigraded_model, formality_check, massey_triple, minimal_model, regular_sequence_check,
    FormalityOptions, FormalityVerdict, RegularityVerdict,
};
use std::path::PathBuf;
use std::sync::Arc;

#[derive(Debug, Clone, Default)]
pub struct CommandArgs {
    pub max_degree: Option<i64>,
    pub backtrack_cap: Option<usize>,
    pub sphere_dim: Option<i64>,
    pub exprs: Vec<String>,
    pub model_name: Option<String>,
    pub lie_name: Option<String>,
    pub with_cstar: bool,
    pub format: String,
}

const COMMANDS: &[&str] = &[
    "check",
    "cohomology",
    "minimal-model",
    "bigraded-model",
    "formality",
    "massey",
    "regular-seq",
    "cstar",
    "map-model",
    "sphere-map",
    "audit",
];

pub const USAGE: &str = "\
usage: sullivan <command> [flags] <file>...

commands:
  check         <file>                 validate and echo the presentations
  cohomology    --max-degree N <file>  degree-wise cohomology with representatives
  minimal-model --max-degree N <file>  minimal Sullivan model of the section
  bigraded-model --max-degree N <file> bigraded model of the cohomology
  formality     --max-degree N [--backtrack-cap K] <file>
  massey        --max-degree N <file> <a> <b> <c>
  regular-seq   --max-degree N <file> [<poly>...]
  cstar         --max-degree N <file>  dualize a lie section
  map-model     --max-degree N <file> [<file>]  function-space Lie model
  sphere-map    --sphere-dim P <file>  doubled sphere mapping model
  audit         --max-degree N <x-file> <y-file>

flags: --max-degree N, --backtrack-cap K, --sphere-dim P, --model NAME,
       --lie NAME, --cstar, --format text
";

/// Split argv into (command, flags, file paths). Trailing positionals of
/// `massey` and `regular-seq` are expressions, not paths.
pub fn parse_argv(argv: &[String]) -> Result<(String, CommandArgs, Vec<PathBuf>), CliError> {
    let mut it = argv.iter();
    let Some(command) = it.next() else {
        return Err(CliError::Usage("missing command".into()));
    };
    if !COMMANDS.contains(&command.as_str()) {
        return Err(CliError::Usage(format!("unknown command `{command}`")));
    }
    let mut args = CommandArgs {
        format: "text".into(),
        ..CommandArgs::default()
    };
    let mut positionals: Vec<String> = Vec::new();
    while let Some(a) = it.next() {
        let mut flag_value = |name: &str| -> Result<String, CliError> {
            it.next()
                .cloned()
                .ok_or_else(|| CliError::Usage(format!("{name} needs a value")))
        };
        match a.as_str() {
            "--max-degree" => {
                args.max_degree = Some(flag_value("--max-degree")?.parse().map_err(|_| {
                    CliError::Usage("--max-degree needs an integer".into())
                })?)
            }
            "--backtrack-cap" => {
                args.backtrack_cap = Some(flag_value("--backtrack-cap")?.parse().map_err(
                    |_| CliError::Usage("--backtrack-cap needs an integer".into()),
                )?)
            }
            "--sphere-dim" | "-p" => {
                args.sphere_dim = Some(flag_value("--sphere-dim")?.parse().map_err(|_| {
                    CliError::Usage("--sphere-dim needs an integer".into())
                })?)
            }
            "--model" => args.model_name = Some(flag_value("--model")?),
            "--lie" => args.lie_name = Some(flag_value("--lie")?),
            "--cstar" => args.with_cstar = true,
            "--format" => {
                let v = flag_value("--format")?;
                if v != "text" {
                    return Err(CliError::Usage(format!(
                        "unsupported format `{v}`; only `text` is available"
                    )));
                }
                args.format = v;
            }
            other if other.starts_with("--") => {
                return Err(CliError::Usage(format!("unknown flag `{other}`")))
            }
            other => positionals.push(other.to_string()),
        }
    }
    let n_files = match command.as_str() {
        "massey" | "regular-seq" => 1,
        "audit" => 2,
        "map-model" => positionals.len().clamp(1, 2),
        _ => 1,
    };
    if positionals.len() < n_files {
        return Err(CliError::Usage(format!(
            "`{command}` needs {n_files} input file(s)"
        )));
    }
    let paths = positionals
        .drain(..n_files)
        .map(PathBuf::from)
        .collect();
    args.exprs = positionals;
    Ok((command.clone(), args, paths))
}

fn require_degree(args: &CommandArgs) -> Result<i64, CliError> {
    args.max_degree
        .ok_or_else(|| CliError::Usage("this command requires --max-degree".into()))
}

fn find_algebra<'f>(
    files: &'f [ModelFile],
    name: Option<&str>,
) -> Result<(&'f str, &'f Arc<SullivanAlgebra>), CliError> {
    for f in files {
        for s in &f.sections {
            if let SectionKind::Algebra(a) = &s.kind {
                if name.is_none_or(|n| n == s.name) {
                    return Ok((&s.name, a));
                }
            }
        }
    }
    Err(CliError::Input(match name {
        Some(n) => format!("no algebra section named `{n}`"),
        None => "no algebra section in the input".into(),
    }))
}

fn find_lie<'f>(
    files: &'f [ModelFile],
    name: Option<&str>,
) -> Result<(&'f str, &'f Arc<crate::dgl::FreeDgl>), CliError> {
    for f in files {
        for s in &f.sections {
            if let SectionKind::Lie(l) = &s.kind {
                if name.is_none_or(|n| n == s.name) {
                    return Ok((&s.name, l));
                }
            }
        }
    }
    Err(CliError::Input(match name {
        Some(n) => format!("no lie section named `{n}`"),
        None => "no lie section in the input".into(),
    }))
}

fn internal(e: impl std::fmt::Display) -> CliError {
    CliError::Internal(e.to_string())
}

fn input(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

pub fn run_command(
    name: &str,
    args: &CommandArgs,
    files: &[ModelFile],
) -> Result<Report, CliError> {
    match name {
        "check" => cmd_check(files),
        "cohomology" => cmd_cohomology(args, files),
        "minimal-model" => cmd_minimal_model(args, files),
        "bigraded-model" => cmd_bigraded_model(args, files),
        "formality" => cmd_formality(args, files),
        "massey" => cmd_massey(args, files),
        "regular-seq" => cmd_regular_seq(args, files),
        "cstar" => cmd_cstar(args, files),
        "map-model" => cmd_map_model(args, files),
        "sphere-map" => cmd_sphere_map(args, files),
        "audit" => cmd_audit(args, files),
        other => Err(CliError::Usage(format!("unknown command `{other}`"))),
    }
}

fn cmd_check(files: &[ModelFile]) -> Result<Report, CliError> {
    let mut r = Report::new("check");
    for f in files {
        for s in &f.sections {
            r.section(&s.name);
            match &s.kind {
                SectionKind::Algebra(a) => {
                    r.item("kind", "algebra");
                    let degrees: Vec<String> = a
                        .gens()
                        .ids()
                        .map(|i| format!("{}:{}", a.gens().spec(i).name, a.gens().degree(i)))
                        .collect();
                    r.item("generators", degrees.join(", "));
                    r.item("d-squared", "zero on every generator");
                    r.item("minimal", if a.is_minimal() { "yes" } else { "no" });
                }
                SectionKind::Lie(l) => {
                    r.item("kind", "lie");
                    let degrees: Vec<String> = l
                        .generators()
                        .iter()
                        .map(|g| format!("{}:{}", g.name, g.degree))
                        .collect();
                    r.item("generators", degrees.join(", "));
                    r.item("boundary-squared", "zero on every generator");
                    r.item("minimal", if l.is_minimal() { "yes" } else { "no" });
                }
            }
        }
    }
    Ok(r)
}

fn cmd_cohomology(args: &CommandArgs, files: &[ModelFile]) -> Result<Report, CliError> {
    let bound = require_degree(args)?;
    let (name, alg) = find_algebra(files, args.model_name.as_deref())?;
    let c = Cdga::free(alg.clone());
    let mut r = Report::new("cohomology");
    r.kv("model", name);
    r.kv("max-degree", bound.to_string());
    if let Some(floor) = alg.partial_floor() {
        if floor <= bound {
            r.warn(format!(
                "differentials are truncated from degree {floor}; cohomology at and \
                 above that degree is unreliable"
            ));
        }
    }
    r.section("results");
    for n in 0..=bound {
        let reps = c.cohomology_representatives(n);
        let basis: Vec<String> = reps
            .iter()
            .map(|e| format!("[{}]", alg.gens().format_element(e.as_free())))
            .collect();
        let value = if basis.is_empty() {
            format!("dim {}", reps.len())
        } else {
            format!("dim {} basis {{ {} }}", reps.len(), basis.join(", "))
        };
        r.item(&format!("H^{n}"), value);
    }
    Ok(r)
}

fn cmd_minimal_model(args: &CommandArgs, files: &[ModelFile]) -> Result<Report, CliError> {
    let bound = require_degree(args)?;
    let (name, alg) = find_algebra(files, args.model_name.as_deref())?;
    let mm = minimal_model(&Cdga::free(alg.clone()), bound).map_err(input)?;
    let mut r = Report::new("minimal-model");
    r.kv("model", name);
    r.kv("max-degree", bound.to_string());
    r.section("results");
    let degrees: Vec<String> = mm
        .model
        .gens()
        .ids()
        .map(|i| mm.model.gens().degree(i).to_string())
        .collect();
    r.item("generator-degrees", degrees.join(", "));
    r.item("minimal", "yes");
    r.item(
        "quasi-isomorphism",
        format!("verified through degree {bound}"),
    );
    r.section("presentation");
    r.block(&print_algebra(&format!("{name}_minimal"), &mm.model));
    Ok(r)
}

fn cmd_bigraded_model(args: &CommandArgs, files: &[ModelFile]) -> Result<Report, CliError> {
    let bound = require_degree(args)?;
    let (name, alg) = find_algebra(files, args.model_name.as_deref())?;
    let h = cohomology_algebra(&Cdga::free(alg.clone()), bound).map_err(input)?;
    let model = bigraded_model(&h, bound).map_err(input)?;
    let mut r = Report::new("bigraded-model");
    r.kv("model", name);
    r.kv("max-degree", bound.to_string());
    r.section("results");
    let gens = model.algebra.gens();
    for id in gens.ids() {
        let s = gens.spec(id);
        r.item(
            &s.name,
            format!(
                "degree {}, lower-grading {}, d = {}",
                s.degree,
                model.grading_of(id),
                gens.format_element(model.algebra.differential_of(id))
            ),
        );
    }
    r.item(
        "augmentation",
        format!("quasi-isomorphism verified through degree {bound}"),
    );
    r.item("grading-law", "d drops the lower grading by exactly one");
    Ok(r)
}

fn verdict_into_report(
    r: &mut Report,
    verdict: &FormalityVerdict,
    context: &Cdga,
) -> Result<(), CliError> {
    // no stale certificates: re-verify before emission
    let ok = verdict.reverify().map_err(internal)?;
    if !ok {
        return Err(CliError::Internal(
            "certificate failed re-verification before emission".into(),
        ));
    }
    r.item("verdict", verdict.label());
    match verdict {
        FormalityVerdict::CertifiedFormal { bound, route, .. } => {
            r.item("route", route.label());
            r.item("bound", bound.to_string());
            r.item("certificate", "witness quasi-isomorphism re-verified");
        }
        FormalityVerdict::CertifiedNonformal { witness, bound, .. } => {
            r.item("bound", bound.to_string());
            r.item("obstruction-degree", witness.degree.to_string());
            r.item(
                "indeterminacy-dimension",
                witness.indeterminacy_dim().to_string(),
            );
            if let (Cdga::Free(alg), CdgaElement::Free(p)) = (context, &witness.product) {
                r.item("massey-class", format!("[{}]", alg.gens().format_element(p)));
            }
            r.item("certificate", "Massey system re-verified");
        }
        FormalityVerdict::Inconclusive {
            degree_reached,
            obstruction,
            ..
        } => {
            r.item("degree-reached", degree_reached.to_string());
            r.item("obstruction", obstruction.clone());
        }
    }
    Ok(())
}

fn cmd_formality(args: &CommandArgs, files: &[ModelFile]) -> Result<Report, CliError> {
    let bound = require_degree(args)?;
    let (name, alg) = find_algebra(files, args.model_name.as_deref())?;
    let mut opts = FormalityOptions::new(bound);
    if let Some(cap) = args.backtrack_cap {
        opts.backtrack_cap = cap;
    }
    let c = Cdga::free(alg.clone());
    let verdict = formality_check(&c, &opts);
    let mut r = Report::new("formality");
    r.kv("model", name);
    r.kv("max-degree", bound.to_string());
    r.kv("backtrack-cap", opts.backtrack_cap.to_string());
    r.section("results");
    verdict_into_report(&mut r, &verdict, &c)?;
    Ok(r)
}

fn parse_element(
    text: &str,
    gens: &Generators,
) -> Result<Element, CliError> {
    let expr = parse_expression(text, 1, 0, false)
        .map_err(|e| CliError::Input(format!("in `{text}`: {}", e.message)))?;
    eval_algebra_expr(&expr, gens)
        .map_err(|e| CliError::Input(format!("in `{text}`: {}", e.message)))
}

fn cmd_massey(args: &CommandArgs, files: &[ModelFile]) -> Result<Report, CliError> {
    let bound = require_degree(args)?;
    let (name, alg) = find_algebra(files, args.model_name.as_deref())?;
    if args.exprs.len() != 3 {
        return Err(CliError::Usage(
            "massey needs three class expressions after the file".into(),
        ));
    }
    let c = Cdga::free(alg.clone());
    let elems: Vec<CdgaElement> = args
        .exprs
        .iter()
        .map(|t| Ok(CdgaElement::Free(parse_element(t, alg.gens())?)))
        .collect::<Result<_, CliError>>()?;
    let sys = massey_triple(&c, &elems[0], &elems[1], &elems[2], bound).map_err(input)?;
    if !sys.reverify(&c).map_err(internal)? {
        return Err(CliError::Internal(
            "Massey system failed re-verification".into(),
        ));
    }
    let mut r = Report::new("massey");
    r.kv("model", name);
    r.kv("max-degree", bound.to_string());
    r.section("inputs");
    r.item("a", &args.exprs[0]);
    r.item("b", &args.exprs[1]);
    r.item("c", &args.exprs[2]);
    r.section("results");
    r.item("degree", sys.degree.to_string());
    r.item("u", alg.gens().format_element(sys.u.as_free()));
    r.item("v", alg.gens().format_element(sys.v.as_free()));
    r.item(
        "class",
        format!("[{}]", alg.gens().format_element(sys.product.as_free())),
    );
    r.item("indeterminacy-dimension", sys.indeterminacy_dim().to_string());
    r.item("avoids-zero", if sys.avoids_zero { "yes" } else { "no" });
    Ok(r)
}

fn cmd_regular_seq(args: &CommandArgs, files: &[ModelFile]) -> Result<Report, CliError> {
    let bound = require_degree(args)?;
    let (name, alg) = find_algebra(files, args.model_name.as_deref())?;
    let gens = alg.gens();
    let even = Arc::new(
        Generators::new(
            gens.ids()
                .filter(|&i| !gens.is_odd(i))
                .map(|i| gens.spec(i).clone())
                .collect(),
        )
        .map_err(input)?,
    );
    let (polys, sources): (Vec<Element>, Vec<String>) = if args.exprs.is_empty() {
        let mut p = Vec::new();
        let mut s = Vec::new();
        for id in gens.ids() {
            if gens.is_odd(id) && !alg.differential_of(id).is_zero() {
                let e = even
                    .embed(alg.differential_of(id), gens)
                    .map_err(|e| CliError::Input(format!(
                        "differential of `{}` is not an even polynomial: {e}",
                        gens.spec(id).name
                    )))?;
                s.push(format!(
                    "d {} = {}",
                    gens.spec(id).name,
                    even.format_element(&e)
                ));
                p.push(e);
            }
        }
        (p, s)
    } else {
        let mut p = Vec::new();
        let mut s = Vec::new();
        for text in &args.exprs {
            let el = parse_element(text, gens)?;
            let e = even
                .embed(&el, gens)
                .map_err(|e| CliError::Input(format!("`{text}`: {e}")))?;
            s.push(text.clone());
            p.push(e);
        }
        (p, s)
    };
    if polys.is_empty() {
        return Err(CliError::Input(
            "no polynomials: give expressions or a model with non-closed odd generators".into(),
        ));
    }
    let verdict = regular_sequence_check(&even, &polys, bound).map_err(input)?;
    let mut r = Report::new("regular-seq");
    r.kv("model", name);
    r.kv("max-degree", bound.to_string());
    r.section("inputs");
    for (i, s) in sources.iter().enumerate() {
        r.item(&format!("poly-{i}"), s);
    }
    r.section("results");
    match verdict {
        RegularityVerdict::RegularUpToBound { bound } => {
            r.item("verdict", format!("REGULAR_UP_TO_BOUND at {bound}"));
        }
        RegularityVerdict::NotRegular { index, witness } => {
            r.item("verdict", "NOT_REGULAR");
            r.item("failing-index", index.to_string());
            r.item("witness", even.format_element(&witness));
        }
    }
    Ok(r)
}

fn cmd_cstar(args: &CommandArgs, files: &[ModelFile]) -> Result<Report, CliError> {
    let bound = require_degree(args)?;
    let (name, dgl) = find_lie(files, args.lie_name.as_deref())?;
    let ce = chevalley_eilenberg(dgl, bound).map_err(input)?;
    let mut r = Report::new("cstar");
    r.kv("model", name);
    r.kv("max-degree", bound.to_string());
    r.section("results");
    for n in 2..=bound {
        r.item(
            &format!("dim V^{n}"),
            format!("{}", ce.dual_dim(n)),
        );
    }
    r.item("shape", "d = d0 + d1 on every generator");
    for p in &ce.partial_generators {
        r.warn(format!(
            "generator `{p}` sits at the truncation boundary; its linear differential \
             is incomplete and cohomology at that degree is unreliable"
        ));
    }
    r.section("presentation");
    r.block(&print_algebra(&format!("cstar_{name}"), &ce.algebra));
    Ok(r)
}

fn cmd_map_model(args: &CommandArgs, files: &[ModelFile]) -> Result<Report, CliError> {
    let bound = require_degree(args)?;
    let (aname, alg) = find_algebra(files, args.model_name.as_deref())?;
    let (lname, dgl) = find_lie(files, args.lie_name.as_deref())?;
    let (finite, _proj) = finite_dimensional_model(alg, bound).map_err(input)?;
    let model = mapping_space_lie_model(&finite, dgl, bound).map_err(input)?;
    let mut r = Report::new("map-model");
    r.kv("algebra", aname);
    r.kv("lie", lname);
    r.kv("max-degree", bound.to_string());
    r.section("results");
    r.item(
        "finite-model",
        format!(
            "total dimension {}, top degree {}",
            finite.total_dim(),
            finite.top_degree()
        ),
    );
    for n in 1..=bound {
        r.item(&format!("dim (A (x) L)_{n}"), model.dim_in_degree(n).to_string());
    }
    r.item(
        "structural-checks",
        "D^2, antisymmetry, Jacobi and the bracket derivation verified on all \
         basis pairs and triples up to the bound",
    );
    model.evaluation_maps().map_err(internal)?;
    r.item(
        "evaluation-maps",
        "projection and section verified; projection after section is the identity",
    );
    if args.with_cstar {
        let ce = chevalley_eilenberg(&model, bound).map_err(input)?;
        r.section("cstar");
        for p in &ce.partial_generators {
            r.warn(format!(
                "generator `{p}` sits at the truncation boundary; its linear \
                 differential is incomplete"
            ));
        }
        r.block(&print_algebra(&format!("cstar_{aname}_{lname}"), &ce.algebra));
    }
    Ok(r)
}

fn cmd_sphere_map(args: &CommandArgs, files: &[ModelFile]) -> Result<Report, CliError> {
    let p = args
        .sphere_dim
        .ok_or_else(|| CliError::Usage("sphere-map requires --sphere-dim".into()))?;
    let (name, alg) = find_algebra(files, args.model_name.as_deref())?;
    let model = sphere_mapping_space_model(alg, p).map_err(input)?;
    let mut r = Report::new("sphere-map");
    r.kv("model", name);
    r.kv("sphere-dim", p.to_string());
    r.section("results");
    let gens = model.algebra.gens();
    let degrees: Vec<String> = gens.ids().map(|i| gens.degree(i).to_string()).collect();
    r.item("generator-degrees", degrees.join(", "));
    r.item("d-squared", "zero on every generator");
    r.item("minimal", "yes");
    r.item(
        "suspension",
        format!(
            "degree -{p} derivation; d(z_bar) = -S(dz) holds on every generator"
        ),
    );
    r.section("presentation");
    r.block(&print_algebra(&format!("f_s{p}_{name}"), &model.algebra));
    Ok(r)
}

fn cmd_audit(args: &CommandArgs, files: &[ModelFile]) -> Result<Report, CliError> {
    let bound = require_degree(args)?;
    if files.len() != 2 {
        return Err(CliError::Usage(
            "audit needs two files: the domain sphere model and the target model".into(),
        ));
    }
    let x_section = files[0]
        .first_algebra()
        .ok_or_else(|| CliError::Input("no algebra section in the domain file".into()))?;
    let y_section = files[1]
        .first_algebra()
        .ok_or_else(|| CliError::Input("no algebra section in the target file".into()))?;
    let SectionKind::Algebra(x_model) = &x_section.kind else {
        unreachable!()
    };
    let SectionKind::Algebra(y_model) = &y_section.kind else {
        unreachable!()
    };
    let p = sphere_dimension_of(x_model).ok_or_else(|| {
        CliError::Input(
            "audit requires the domain to be a sphere model: one closed odd generator, \
             or an even generator whose square is killed"
                .into(),
        )
    })?;
    let mut r = Report::new("audit");
    r.kv("domain", &*x_section.name);
    r.kv("target", &*y_section.name);
    r.kv("max-degree", bound.to_string());
    r.section("results");
    r.item("sphere-dimension", p.to_string());

    // assumption: the domain has a closed odd generator (odd spherical retract)
    let retract = odd_spherical_retract(x_model).map_err(input)?;
    let assumption_holds = retract.is_some();
    match &retract {
        Some(sr) => r.item(
            "odd-retract-assumption",
            format!("holds (closed odd generator `{}`)", sr.generator.name),
        ),
        None => r.item(
            "odd-retract-assumption",
            "fails (no closed odd generator in the domain model)",
        ),
    }

    // mapping-space model and its formality
    let mapping = sphere_mapping_space_model(y_model, p).map_err(input)?;
    let gens = mapping.algebra.gens();
    let degrees: Vec<String> = gens.ids().map(|i| gens.degree(i).to_string()).collect();
    r.item("mapping-model-generators", degrees.join(", "));
    let mut opts = FormalityOptions::new(bound);
    if let Some(cap) = args.backtrack_cap {
        opts.backtrack_cap = cap;
    }
    let c = Cdga::free(mapping.algebra.clone());
    let verdict = formality_check(&c, &opts);
    if !verdict.reverify().map_err(internal)? {
        return Err(CliError::Internal(
            "certificate failed re-verification before emission".into(),
        ));
    }
    r.item("mapping-formality", verdict.label());
    if let FormalityVerdict::Inconclusive { obstruction, .. } = &verdict {
        r.item("mapping-formality-note", obstruction.clone());
    }

    // freeness of the target cohomology
    let h = cohomology_algebra(&Cdga::free(y_model.clone()), bound).map_err(input)?;
    let freeness = is_free_graded_commutative(&h, bound).map_err(input)?;
    let free_label = match &freeness {
        FreenessVerdict::Free { .. } => "FREE".to_string(),
        FreenessVerdict::FreeUpToBound { bound, .. } => format!("FREE_UP_TO_BOUND at {bound}"),
        FreenessVerdict::NotFree { degree, .. } => format!("NOT_FREE at degree {degree}"),
    };
    r.item("target-cohomology-free", free_label);

    // the narrative
    r.section("conclusion");
    let formal = matches!(verdict, FormalityVerdict::CertifiedFormal { .. });
    let not_free = matches!(freeness, FreenessVerdict::NotFree { .. });
    if assumption_holds {
        r.item(
            "prediction",
            "the odd-retract assumption holds: if the mapping space is formal, the \
             target cohomology must be free graded-commutative",
        );
        match (formal, not_free) {
            (true, true) => r.item(
                "status",
                "CONFLICT: a verified formality certificate together with non-free \
                 cohomology contradicts the implication; check the inputs",
            ),
            (true, false) => r.item(
                "status",
                "confirmed: mapping space certified formal and the target cohomology is free",
            ),
            (false, true) => r.item(
                "status",
                "consistent: formality was not certified and the non-free cohomology \
                 makes non-formality the expected outcome",
            ),
            (false, false) => r.item(
                "status",
                "nothing to conclude at this bound: formality was not certified",
            ),
        }
    } else {
        r.item(
            "prediction",
            "the odd-retract assumption fails: formality of the mapping space does \
             not force free target cohomology",
        );
        if formal && not_free {
            r.item(
                "status",
                "observed: mapping space certified formal while the target cohomology \
                 is not free; the odd-retract assumption is necessary for the implication",
            );
        } else {
            r.item(
                "status",
                "observed outcomes do not exhibit the counterexample pattern at this bound",
            );
        }
    }
    let _ = print_section;
    Ok(r)
}
