mod report;

use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use locdual::absolutes::absolute_space;
use locdual::ba::{Algebra, StructMap, MAX_ATOMS};
use locdual::completion::{completion_lemma, completions_equivalent, extend_contact, lca_completion};
use locdual::contact::{check_axioms, product, weight, ContactTriple};
use locdual::duality::{
    counit_lambda, fc as dfc, perfect_duality_check, product_sum_check, psi_a, psi_t, theta_a, theta_a_mor,
    theta_t, theta_t_mor, unit_tx,
};
use locdual::error::{Error, Result};
use locdual::lba::{classify_pair, contact_of, fc as lfc, morphism_flags, LocalPair, PairClass};
use locdual::serial::{pair_json, parse_structure, space_json, to_json, triple_json, Structure};
use locdual::topo::{classify_map, point_list, FinSpace};
use locdual::{absolutes, completion, corpus, ideals, topo};

use report::RunReport;

#[derive(Parser)]
#[command(name = "locdual", version, about = "Check and dualize local Boolean and local contact algebras")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Cap on the number of atoms accepted from structure files.
    #[arg(long, default_value_t = MAX_ATOMS, global = true)]
    max_atoms: usize,
    /// Order in which corpus members are visited; verdicts do not depend on it.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms or class membership of a structure.
    Check { file: String },
    /// Compute the dual of a structure.
    Dualize { file: String },
    /// Verify the unit and counit of the duality on a structure.
    Roundtrip { file: String },
    /// Build the completion of a local contact algebra.
    Complete { file: String },
    /// Build the absolute of a finite space.
    Absolute { file: String },
    /// Dual of a product of contact algebras against the sum of the duals.
    Product {
        #[arg(required = true)]
        files: Vec<String>,
    },
    /// Classify a map between spaces or algebras.
    ClassifyMap { file: String },
    /// Weights and π-weights.
    Weight { file: String },
    /// Run the property checks over the built-in corpus.
    Invariants {
        /// Largest atom / point count in the corpus.
        #[arg(long, default_value_t = 3)]
        size: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(report) => {
            let out = match cli.format {
                Format::Text => report.text(),
                Format::Json => report.json() + "\n",
                Format::Dot => match &report.dot {
                    Some(d) => d.clone(),
                    None => {
                        eprintln!("error: no DOT rendering for `{}`", report.command);
                        return ExitCode::from(2);
                    }
                },
            };
            print!("{out}");
            ExitCode::from(report.status() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &str, max_atoms: usize) -> Result<Structure> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
    parse_structure(&text, max_atoms)
}

fn unsupported(cmd: &str, s: &Structure) -> Error {
    Error::Unsupported(format!("`{cmd}` on a {}", s.kind()))
}

fn run(cli: &Cli) -> Result<RunReport> {
    let (name, inputs): (&str, Vec<String>) = match &cli.command {
        Command::Check { file } => ("check", vec![file.clone()]),
        Command::Dualize { file } => ("dualize", vec![file.clone()]),
        Command::Roundtrip { file } => ("roundtrip", vec![file.clone()]),
        Command::Complete { file } => ("complete", vec![file.clone()]),
        Command::Absolute { file } => ("absolute", vec![file.clone()]),
        Command::Product { files } => ("product", files.clone()),
        Command::ClassifyMap { file } => ("classify-map", vec![file.clone()]),
        Command::Weight { file } => ("weight", vec![file.clone()]),
        Command::Invariants { .. } => ("invariants", vec![]),
    };
    let mut r = RunReport::new(name, &inputs);
    if let Command::Invariants { size } = cli.command {
        invariants(&mut r, size, cli.seed)?;
        return Ok(r);
    }
    let structures = inputs
        .iter()
        .map(|f| load(f, cli.max_atoms))
        .collect::<Result<Vec<_>>>()?;
    let s = &structures[0];
    match &cli.command {
        Command::Check { .. } => check(&mut r, s)?,
        Command::Dualize { .. } => dualize(&mut r, s)?,
        Command::Roundtrip { .. } => roundtrip(&mut r, s)?,
        Command::Complete { .. } => complete(&mut r, s)?,
        Command::Absolute { .. } => absolute(&mut r, s)?,
        Command::Product { .. } => product_cmd(&mut r, &structures)?,
        Command::ClassifyMap { .. } => classify(&mut r, s)?,
        Command::Weight { .. } => weight_cmd(&mut r, s)?,
        Command::Invariants { .. } => unreachable!("handled above"),
    }
    Ok(r)
}

fn class_checks(r: &mut RunReport, c: &PairClass) {
    r.check_with("LBA", c.lba.holds(), c.lba.witness());
    r.check_with("PLBA", c.plba.holds(), c.plba.witness());
    r.check_with("ZLBA", c.zlba.holds(), c.zlba.witness());
    r.check_with("DZLC", c.dzlc.holds(), c.dzlc.witness());
}

fn check(r: &mut RunReport, s: &Structure) -> Result<()> {
    match s {
        Structure::Algebra(Algebra::Powerset(p)) => {
            r.data = json!({"atoms": p.atom_count(), "size": p.size(), "pi_weight": p.pi_weight()?.0});
        }
        Structure::Algebra(Algebra::FinCofin) => r.data = json!({"size": "aleph_0", "pi_weight": "aleph_0"}),
        Structure::Pair(p) => {
            class_checks(r, &classify_pair(p.algebra, &p.ideal)?);
            r.data = pair_json(p);
        }
        Structure::FcPair(i) => {
            class_checks(r, &lfc::classify(i));
            r.data = json!({"ideal": i});
        }
        Structure::Triple(t) => {
            let a = check_axioms(t);
            r.check_with("C1", a.c1.holds(), a.c1.witness());
            r.check_with("C2", a.c2.holds(), a.c2.witness());
            r.check_with("C3", a.c3.holds(), a.c3.witness());
            r.check_with("C4", a.c4.holds(), a.c4.witness());
            r.check_with("interpolation", a.interpolation.holds(), a.interpolation.witness());
            r.check_with("extension", a.extension.holds(), a.extension.witness());
            r.check_with("bounded ideal", a.bounded_ideal.holds(), a.bounded_ideal.witness());
            r.check_with("BC1", a.bc1.holds(), a.bc1.witness());
            r.check_with("BC2", a.bc2.holds(), a.bc2.witness());
            r.check_with("BC3", a.bc3.holds(), a.bc3.witness());
            r.data = json!({"contact": a.contact(), "nca": a.nca(), "lca": a.lca(), "clca": a.clca()});
        }
        Structure::Space(x) => {
            r.data = space_props(x);
            r.dot = Some(x.specialization_dot("X"));
        }
        Structure::SpaceMap(f) => map_checks(r, f)?,
        Structure::AlgebraMap { source, target, map } => algebra_map_checks(r, source, target, map)?,
    }
    Ok(())
}

fn space_props(x: &FinSpace) -> Value {
    json!({
        "points": x.point_count(),
        "opens": x.opens().len(),
        "zero_dimensional": x.is_zero_dimensional(),
        "semiregular": x.is_semiregular(),
        "pi_semiregular": x.is_pi_semiregular(),
        "extremally_disconnected": x.is_extremally_disconnected(),
        "regular_closed": x.regular_closed().iter().map(|&s| point_list(s)).collect::<Vec<_>>(),
    })
}

fn map_checks(r: &mut RunReport, f: &topo::SpaceMap) -> Result<()> {
    let rep = classify_map(f);
    r.check_with("continuous", rep.continuity.holds(), rep.continuity.witness().map(|&s| point_list(s)));
    if let Some(flags) = &rep.flags {
        let v = flags.violations();
        r.check_with("taxonomy consistent", v.is_empty(), &v);
    }
    r.data = json!({"map": f.table(), "flags": rep.flags});
    Ok(())
}

fn algebra_map_checks(r: &mut RunReport, source: &Structure, target: &Structure, map: &StructMap) -> Result<()> {
    let hom = locdual::ba::hom_check(map);
    r.check_with("Boolean homomorphism", hom.holds(), hom.witness());
    let mut data = json!({"table": map.table(), "injective": map.is_injective(), "surjective": map.is_surjective()});
    match (source, target) {
        (Structure::Pair(a), Structure::Pair(b)) if hom.holds() => {
            let fl = morphism_flags(a, b, map)?;
            r.check_with("LBA condition", fl.lba.holds(), fl.lba.witness());
            r.check_with("PLBA condition", fl.plba.holds(), fl.plba.witness());
            if fl.lba.holds() && fl.plba.holds() {
                let pw = perfect_duality_check(a, b, map)?;
                r.check("dual map is perfect", pw.perfect);
                r.check_with("λ(φ(a)) = f⁻¹(λ(a))", pw.preimage_identity.holds(), pw.preimage_identity.witness());
                data["dual_map"] = json!(pw.map.table());
            }
        }
        (Structure::Triple(a), Structure::Triple(b)) if hom.holds() => {
            let v = completion::lca_embedding_check(a, b, map);
            data["lca_embedding"] = json!(v);
        }
        _ => {}
    }
    r.data = data;
    Ok(())
}

fn dualize(r: &mut RunReport, s: &Structure) -> Result<()> {
    match s {
        Structure::Pair(p) => {
            let d = theta_a(p)?;
            r.check("{λ(a) | a ∈ I} is an open base", d.base_check);
            r.data = json!({"dual": space_json(&d.space), "points_are_atoms": d.atoms});
            r.dot = Some(d.space.specialization_dot("dual"));
        }
        Structure::FcPair(i) => {
            let d = dfc::theta_a(i)?;
            r.data = json!({"dual": d});
        }
        Structure::Triple(t) => {
            let d = psi_a(t)?;
            r.check("{int λ(a) | a ∈ ⅅ} is an open base", d.open_base_check);
            r.data = json!({"dual": space_json(&d.space), "clusters": d.points});
            r.dot = Some(d.space.specialization_dot("dual"));
        }
        Structure::Space(x) => {
            let t = theta_t(x)?;
            let p = psi_t(x)?;
            r.data = json!({
                "clopen_pair": pair_json(&t.pair),
                "clopen_sets": t.co.atoms().iter().map(|&s| point_list(s)).collect::<Vec<_>>(),
                "zlba": t.zlba,
                "regular_closed_triple": triple_json(&p.triple),
                "regular_closed_atoms": p.rc.atoms().iter().map(|&s| point_list(s)).collect::<Vec<_>>(),
            });
        }
        Structure::SpaceMap(f) => {
            let m = theta_t_mor(f)?;
            r.check_with("LBA condition", m.flags.lba.holds(), m.flags.lba.witness());
            r.check_with("PLBA condition", m.flags.plba.holds(), m.flags.plba.witness());
            r.data = json!({"table": m.map.table(), "perfect": m.perfect});
        }
        Structure::AlgebraMap { source, target, map } => match (&**source, &**target) {
            (Structure::Pair(a), Structure::Pair(b)) => {
                let m = theta_a_mor(a, b, map)?;
                r.check_with("image inclusion", m.image_inclusion.holds(), m.image_inclusion.witness());
                r.data = json!({"dual_map": to_json(&Structure::SpaceMap(m.map))});
            }
            _ => return Err(unsupported("dualize", s)),
        },
        Structure::Algebra(_) => return Err(unsupported("dualize", s)),
    }
    Ok(())
}

fn pair_roundtrip(r: &mut RunReport, p: &LocalPair) -> Result<()> {
    let d = theta_a(p)?;
    let u = unit_tx(&d.space)?;
    r.check("t is a homeomorphism", u.homeomorphism);
    let c = counit_lambda(p)?;
    r.check_with("λ is an isomorphism", c.iso.holds(), &c.iso);
    r.check_with("λ(I) = CK", c.ideal_onto_ck, c.missing_clopen.map(point_list));
    r.data = json!({"t": u.map.table(), "lambda": c.map.table()});
    Ok(())
}

fn roundtrip(r: &mut RunReport, s: &Structure) -> Result<()> {
    match s {
        Structure::Pair(p) => pair_roundtrip(r, p)?,
        Structure::Algebra(Algebra::Powerset(a)) => pair_roundtrip(r, &LocalPair::full(*a))?,
        Structure::Space(x) => {
            let u = unit_tx(x)?;
            r.check("t is continuous", u.continuous);
            r.check("t is a homeomorphism", u.homeomorphism);
            let t = theta_t(x)?;
            let c = counit_lambda(&t.pair)?;
            r.check_with("λ is an isomorphism", c.iso.holds(), &c.iso);
            r.data = json!({"t": u.map.table(), "lambda": c.map.table()});
        }
        Structure::FcPair(_) => {
            let v = lfc::check_unit(6);
            r.check_with("e is an isomorphism onto Si(Fin)", v.holds(), v.witness());
        }
        Structure::Triple(t) => {
            let c = lca_completion(t)?;
            r.check_with("λ is an LCA-embedding", c.checks.embedding.holds(), c.checks.embedding.witness());
            r.check("λ(ⅅ) is dV-dense", c.checks.dv_dense);
            r.check("RC of the dual is a CLCA", c.checks.clca);
            r.data = json!({"lambda": c.embedding.table()});
        }
        _ => return Err(unsupported("roundtrip", s)),
    }
    Ok(())
}

fn triple_of(cmd: &str, s: &Structure) -> Result<ContactTriple> {
    match s {
        Structure::Triple(t) => Ok(t.clone()),
        Structure::Pair(p) => contact_of(p),
        _ => Err(unsupported(cmd, s)),
    }
}

fn complete(r: &mut RunReport, s: &Structure) -> Result<()> {
    let t = triple_of("complete", s)?;
    let c = lca_completion(&t)?;
    r.check_with("LCA-embedding", c.checks.embedding.holds(), c.checks.embedding.witness());
    r.check("dV-dense bounded image", c.checks.dv_dense);
    r.check("target is a CLCA", c.checks.clca);
    let lemma = completion_lemma(&t, &c.target, &c.embedding)?;
    r.check_with("δ-ideal correspondences", lemma.holds(), &lemma);
    let e = extend_contact(&t, &StructMap::identity(t.algebra))?;
    r.check("case formulas reproduce ρ", e.eta == t);
    let again = lca_completion(&t)?;
    let eq = completions_equivalent(&c, &again);
    r.check_with("completions equivalent", eq.iso.is_some(), &eq.certificate);
    r.data = json!({
        "original": triple_json(&t),
        "dual_space": space_json(&c.dual),
        "completed": triple_json(&c.target),
        "regular_closed_atoms": c.rc.atoms().iter().map(|&s| point_list(s)).collect::<Vec<_>>(),
        "embedding": c.embedding.table(),
        "certificates": {
            "lemma": lemma,
            "case1_pairs": e.case1_pairs,
            "case2_pairs": e.case2_pairs,
            "equivalence": eq.certificate,
        },
    });
    Ok(())
}

fn absolute(r: &mut RunReport, s: &Structure) -> Result<()> {
    let Structure::Space(x) = s else {
        return Err(unsupported("absolute", s));
    };
    let w = absolute_space(x)?;
    r.check_with("RC(X) ≅ RC(Y)", w.rc_iso_check.holds(), &w.rc_iso_check);
    r.check("Y is extremally disconnected", w.extremally_disconnected);
    r.check("dual of (RC(X), ρ_s) agrees", w.via_contact);
    r.data = json!({"absolute": space_json(&w.space), "rc_iso": w.rc_iso});
    r.dot = Some(w.space.specialization_dot("absolute"));
    Ok(())
}

fn product_cmd(r: &mut RunReport, ss: &[Structure]) -> Result<()> {
    let ts = ss.iter().map(|s| triple_of("product", s)).collect::<Result<Vec<_>>>()?;
    let p = product_sum_check(&ts)?;
    r.check("dual of product ≅ sum of duals", p.homeomorphism);
    r.data = json!({
        "product": triple_json(&product(&ts)?),
        "sum_of_duals": space_json(&p.sum),
        "dual_of_product": space_json(&p.product_dual),
        "map": p.map.as_ref().map(|m| m.table().to_vec()),
    });
    r.dot = Some(p.product_dual.specialization_dot("dual"));
    Ok(())
}

fn classify(r: &mut RunReport, s: &Structure) -> Result<()> {
    match s {
        Structure::SpaceMap(f) => {
            map_checks(r, f)?;
            if let Ok(a) = absolutes::adjoint_pair(f) {
                r.check_with("F ⊆ φ(ψ(F))", a.unit.holds(), a.unit.witness());
                r.check_with("ψ(φ(G)) ⊆ G", a.counit.holds(), a.counit.witness());
                r.data["adjoint_pair"] = json!(a);
            }
            Ok(())
        }
        Structure::AlgebraMap { source, target, map } => algebra_map_checks(r, source, target, map),
        _ => Err(unsupported("classify-map", s)),
    }
}

fn weight_cmd(r: &mut RunReport, s: &Structure) -> Result<()> {
    match s {
        Structure::Algebra(Algebra::Powerset(p)) => r.data = json!({"pi_weight": p.pi_weight()?.0}),
        Structure::Algebra(Algebra::FinCofin) | Structure::FcPair(_) => r.data = json!({"pi_weight": "aleph_0"}),
        Structure::Pair(p) => r.data = json!({"pi_weight": p.algebra.pi_weight()?.0}),
        Structure::Triple(t) => {
            let (w, base) = weight(t)?;
            let mut data = json!({"weight": w, "base": base});
            if check_axioms(t).lca() {
                let x = psi_a(t)?.space;
                let (uw, _) = x.union_closed_weight()?;
                r.check("weight = union-closed weight of the dual", w == uw);
                data["dual_weight"] = json!(x.weight()?.0);
                data["dual_union_closed_weight"] = json!(uw);
            }
            r.data = data;
        }
        Structure::Space(x) => {
            let (pw, _) = x.pi_weight()?;
            let rc_pw = x.rc_algebra().algebra().pi_weight()?.0;
            if x.is_pi_semiregular() {
                r.check("π-weight = π-weight of RC", pw == rc_pw);
            }
            r.data = json!({
                "weight": x.weight()?.0,
                "pi_weight": pw,
                "rc_pi_weight": rc_pw,
                "pi_semiregular": x.is_pi_semiregular(),
            });
        }
        _ => return Err(unsupported("weight", s)),
    }
    Ok(())
}

/// Runs `f` over `items` in seed order; the result lists how many were
/// checked and the failing ones.
fn sweep<T>(r: &mut RunReport, name: &str, mut items: Vec<T>, rng: &mut ChaCha8Rng, f: impl Fn(&T) -> Result<bool>) -> Result<Value> {
    items.shuffle(rng);
    let mut failing = Vec::new();
    for (i, it) in items.iter().enumerate() {
        if !f(it)? {
            failing.push(i);
        }
    }
    r.check_with(name, failing.is_empty(), &failing);
    Ok(json!({"name": name, "checked": items.len(), "failing": failing.len()}))
}

fn invariants(r: &mut RunReport, size: usize, seed: u64) -> Result<()> {
    let size = size.min(3);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::new();
    let pairs = corpus::local_pairs(size);
    rows.push(sweep(r, "Σ is an isomorphism", pairs.clone(), &mut rng, |p| {
        Ok(ideals::sigma_zlba(p.algebra, &p.ideal)?.check.holds())
    })?);
    rows.push(sweep(r, "λ is an isomorphism onto CK", pairs, &mut rng, |p| {
        let c = counit_lambda(p)?;
        Ok(c.iso.holds() && c.ideal_onto_ck)
    })?);
    rows.push(sweep(r, "t is a homeomorphism on discrete spaces", corpus::discrete_spaces(size + 1), &mut rng, |x| {
        Ok(unit_tx(x)?.homeomorphism)
    })?);
    rows.push(sweep(r, "GBPL characterizations agree", corpus::pseudolattices(), &mut rng, |(_, p)| {
        Ok(p.is_gbpl().agree)
    })?);
    let spaces = corpus::spaces(size);
    rows.push(sweep(r, "map taxonomy", spaces.clone(), &mut rng, |x| {
        Ok(corpus::spaces(x.point_count()).iter().all(|y| {
            topo::continuous_maps(x, y)
                .iter()
                .all(|f| classify_map(f).flags.is_some_and(|fl| fl.violations().is_empty()))
        }))
    })?);
    rows.push(sweep(r, "absolute", spaces.clone(), &mut rng, |x| Ok(absolute_space(x)?.holds()))?);
    rows.push(sweep(r, "π-weight of π-semiregular spaces", spaces, &mut rng, |x| {
        Ok(!x.is_pi_semiregular() || x.pi_weight()?.0 == x.rc_algebra().algebra().pi_weight()?.0)
    })?);
    let lcas = corpus::lca_corpus(size);
    rows.push(sweep(r, "completion", lcas.clone(), &mut rng, |t| Ok(lca_completion(t)?.checks.holds()))?);
    rows.push(sweep(r, "case formulas reproduce ρ", lcas, &mut rng, |t| {
        Ok(extend_contact(t, &StructMap::identity(t.algebra))?.eta == *t)
    })?);
    rows.push(sweep(r, "FinCofin formulas reproduce ρ_s", vec![()], &mut rng, |_| {
        Ok(completion::fc::check_against_rho_s().is_none())
    })?);
    r.data = json!({"seed": seed, "size": size, "sweeps": rows});
    Ok(())
}
