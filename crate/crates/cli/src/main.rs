use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use ginwb::audit::{corpus, full_audit, run_audit};
use ginwb::rewriting::cone_genus as cone_genus_of;
use ginwb::enumeration::{
    enumerate_curve_gins, enumerate_hyperplane_gins_p3, enumerate_hyperplane_gins_p4,
    gplusi_bound_of, with_threads, ConstraintSet,
};
use ginwb::groebner::fixtures::{AUX2_PRINTED_FIRST_RELATION, AUX2_SPLITTING, AUX3_SPLITTING};
use ginwb::groebner::{
    common_scalar, evaluation_profile, image_degree_genus, implicitize, macaulay_check, parse_param_file,
    parse_relation, render_forms, solve_syzygy_constraints, syzygy_splitting_type, BinaryForm, Fixture,
    ImplicitOptions, PrimeField, DEFAULT_MODULUS,
};
use ginwb::liaison::{koszul_chi, liaison_bounds, surface_link_cases, CiType};
use ginwb::monomial::{colength, MonomialIdeal};
use ginwb::surface::{
    blowup6_solutions, divisor_stats, normal_sheaf_bound, scroll_family_dims, solve_classes, BlowupSystem,
    DivisorClass, SurfaceModel,
};
use ginwb::ReportDocument;

#[derive(Parser, Debug)]
#[command(name = "ginwb", version, about = "Gin enumeration, Groebner checks and codimension audit for degree-11 rational curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Worker threads for parallel enumeration (0 = all cores).
    #[arg(long, global = true, env = "GINWB_THREADS", default_value_t = 0)]
    threads: usize,
    /// Write the JSON report here and the text rendition next to it.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AmbientArg {
    P3,
    P4,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FixtureArg {
    Aux1,
    Aux2,
    Aux3,
}

impl From<FixtureArg> for Fixture {
    fn from(f: FixtureArg) -> Fixture {
        match f {
            FixtureArg::Aux1 => Fixture::Aux1,
            FixtureArg::Aux2 => Fixture::Aux2,
            FixtureArg::Aux3 => Fixture::Aux3,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderArg {
    Grevlex,
    Elim,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CurveFilter {
    None,
    Improved,
}

#[derive(clap::Args, Debug)]
struct MapSource {
    #[arg(long, value_enum, conflicts_with = "param_file")]
    fixture: Option<FixtureArg>,
    /// One binary form per line in `t, u`.
    #[arg(long)]
    param_file: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_MODULUS)]
    modulus: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hyperplane gins of degree-d sections.
    Enumerate {
        #[arg(long, value_enum, default_value = "p4")]
        ambient: AmbientArg,
        #[arg(long, default_value_t = 11)]
        degree: u32,
        /// Drop the general-position Hilbert bound (P^4 only).
        #[arg(long)]
        explicit: bool,
    },
    /// Colength, cone genus and g+i bound of a section gin.
    Bound {
        #[arg(long)]
        ideal: String,
    },
    /// Curve gins reachable from the cone over a section gin.
    CurveGins {
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value_t = 0)]
        min_rewrites: usize,
        #[arg(long)]
        max_rewrites: Option<usize>,
        #[arg(long, value_enum, default_value = "improved")]
        filter: CurveFilter,
    },
    /// Kernel of the map given by five binary forms.
    Implicitize {
        #[command(flatten)]
        source: MapSource,
        #[arg(long, value_enum, default_value = "grevlex")]
        order: OrderArg,
        /// Stop after this degree in x.
        #[arg(long)]
        truncate: Option<u32>,
        /// Compare Hilbert functions with direct evaluation up to this degree.
        #[arg(long, default_value_t = 8)]
        check_upto: u32,
    },
    /// Splitting type of the restricted tangent bundle from the syzygies of the forms.
    Splitting {
        #[command(flatten)]
        source: MapSource,
    },
    /// Solve the printed relation system for the forms.
    SyzygySolve {
        #[arg(long, value_enum)]
        fixture: FixtureArg,
        #[arg(long, default_value_t = DEFAULT_MODULUS)]
        modulus: u32,
    },
    /// Divisor classes on a scroll or on the plane blown up in six points.
    Surface {
        #[arg(long)]
        surface: SurfaceModel,
        #[arg(long, default_value_t = 11)]
        degree: i64,
        /// Genera to search for, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "0,1,2,12")]
        genus: Vec<i64>,
        /// Report a single class, e.g. "(4,7)".
        #[arg(long)]
        class: Option<String>,
    },
    /// Hilbert polynomials of complete intersections and residuals.
    Liaison,
    /// Codimension audit over the case corpus.
    Audit {
        /// Everything: rules, cases, reducible pairs.
        #[arg(long)]
        all: bool,
        /// Only cases whose label contains this text.
        #[arg(long)]
        case: Option<String>,
    },
}

enum Failure {
    Usage(String),
    Internal(String),
}

fn field(modulus: u32) -> Result<PrimeField, Failure> {
    PrimeField::try_new(modulus).ok_or_else(|| Failure::Usage(format!("{modulus} is not a usable prime")))
}

fn section_ideal(lit: &str) -> Result<MonomialIdeal, Failure> {
    MonomialIdeal::parse(lit, 3).map_err(|e| Failure::Usage(format!("bad ideal '{lit}': {e}")))
}

fn load_forms(src: &MapSource) -> Result<(PrimeField, Vec<BinaryForm>, serde_json::Value), Failure> {
    let f = field(src.modulus)?;
    match (&src.fixture, &src.param_file) {
        (Some(fx), None) => {
            let fx: Fixture = (*fx).into();
            let forms = fx.forms(f).map_err(|e| Failure::Internal(e.to_string()))?;
            Ok((f, forms, json!({"fixture": fx.name(), "modulus": src.modulus})))
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            let forms = parse_param_file(&text, f).map_err(|e| Failure::Usage(e.to_string()))?;
            Ok((f, forms, json!({"param_file": text, "modulus": src.modulus})))
        }
        _ => Err(Failure::Usage("give exactly one of --fixture or --param-file".into())),
    }
}

fn run(cli: &Cli) -> Result<ReportDocument, Failure> {
    let start = Instant::now();
    let mut doc = match &cli.command {
        Command::Enumerate { ambient, degree, explicit } => match ambient {
            AmbientArg::P4 => {
                let c = if *explicit { ConstraintSet::p4_sections_explicit() } else { ConstraintSet::p4_sections() };
                let mut doc = ReportDocument::new("enumerate", json!({"ambient": "p4", "degree": degree, "explicit": explicit}));
                let rep = with_threads(cli.threads, || enumerate_hyperplane_gins_p4(*degree as u64, &c));
                doc.section("records", &rep.records);
                doc.section("bound_multiset", &rep.bound_multiset);
                doc.section("verbatim_matches", rep.verbatim_matches);
                for d in &rep.discrepancies {
                    doc.discrepancy(d.clone());
                }
                doc
            }
            AmbientArg::P3 => {
                let mut doc = ReportDocument::new("enumerate", json!({"ambient": "p3", "degree": degree}));
                let recs = enumerate_hyperplane_gins_p3(*degree, 6);
                doc.section("staircases", &recs);
                let genera: Vec<i64> = recs.iter().map(|r| r.cone_genus).collect();
                doc.section("cone_genera", genera);
                doc
            }
        },
        Command::Bound { ideal } => {
            let s = section_ideal(ideal)?;
            let mut doc = ReportDocument::new("bound", json!({"ideal": ideal}));
            let internal = |e: ginwb::MonomialError| Failure::Usage(e.to_string());
            doc.section("ideal", s.borel_string());
            doc.section("colength", colength(&s).map_err(internal)?);
            doc.section("regularity", s.max_degree());
            doc.section("cone_genus", cone_genus_of(&s).map_err(internal)?);
            doc.section("gplusi_bound", gplusi_bound_of(&s).map_err(internal)?);
            doc
        }
        Command::CurveGins { ideal, min_rewrites, max_rewrites, filter } => {
            let s = section_ideal(ideal)?;
            let genus = cone_genus_of(&s).map_err(|e| Failure::Usage(e.to_string()))?;
            let hi = max_rewrites.unwrap_or(genus.max(0) as usize);
            if *min_rewrites > hi {
                return Err(Failure::Usage(format!("--min-rewrites {min_rewrites} exceeds {hi}")));
            }
            let c = match filter {
                CurveFilter::None => ConstraintSet::unfiltered_curves(),
                CurveFilter::Improved => ConstraintSet::improved_i_estimate(),
            };
            let mut doc = ReportDocument::new(
                "curve-gins",
                json!({"ideal": ideal, "min_rewrites": min_rewrites, "max_rewrites": hi, "filter": format!("{filter:?}")}),
            );
            let recs = with_threads(cli.threads, || enumerate_curve_gins(&s, *min_rewrites..=hi, &c))
                .map_err(|e| Failure::Usage(e.to_string()))?;
            doc.section("cone_genus", genus);
            doc.section("count", recs.len());
            doc.section("max_i", recs.iter().map(|r| r.i).max());
            doc.section("records", &recs);
            doc
        }
        Command::Implicitize { source, order, truncate, check_upto } => {
            let (f, forms, inputs) = load_forms(source)?;
            let mut inputs = inputs;
            inputs["order"] = json!(format!("{order:?}").to_lowercase());
            inputs["truncate"] = json!(truncate);
            let mut doc = ReportDocument::new("implicitize", inputs);
            let opts = ImplicitOptions { truncate: *truncate, allow_base_points: false };
            let t = Instant::now();
            let k = implicitize(&forms, f, &opts).map_err(|e| Failure::Usage(e.to_string()))?;
            doc.timing("groebner", t.elapsed().as_secs_f64());
            let basis: Vec<String> = k.basis.iter().map(|p| k.ring.render(p)).collect();
            doc.section("basis", basis);
            doc.section("initial_ideal", k.initial.to_string());
            doc.section("borel_fixed", ginwb::is_borel_fixed(&k.initial));
            doc.section("max_generator_degree", k.max_generator_degree());
            doc.section("complete_through", k.complete_through);
            doc.section("pairs", json!({"processed": k.stats.pairs_processed, "pruned": k.stats.pairs_pruned, "zero_reductions": k.stats.zero_reductions}));
            if matches!(order, OrderArg::Elim) {
                doc.section("elimination_leading_terms", &k.elimination_leads);
            }
            if k.complete_through.is_none() {
                match image_degree_genus(&k) {
                    Ok((d, g)) => doc.section("degree_genus", json!({"degree": d, "genus": g})),
                    Err(e) => doc.discrepancy(format!("degree and genus unavailable: {e}")),
                }
                let t = Instant::now();
                let mc = macaulay_check(&k, &forms, *check_upto);
                doc.timing("macaulay", t.elapsed().as_secs_f64());
                if !mc.holds() {
                    doc.discrepancy("kernel and initial ideal Hilbert functions differ");
                }
                doc.section("macaulay", &mc);
            } else {
                let top = *truncate.as_ref().expect("truncated");
                doc.section("evaluation_hilbert", (0..=top).map(|j| evaluation_profile(&forms, &f, j).hilbert).collect::<Vec<_>>());
            }
            if !k.substitution_sound(&forms) {
                return Err(Failure::Internal("a kernel element does not vanish on the forms".into()));
            }
            doc.section("substitution_sound", true);
            if let Some(Fixture::Aux3) = source.fixture.map(Fixture::from) {
                let printed = MonomialIdeal::parse(ginwb::groebner::fixtures::AUX3_INITIAL, 5)
                    .map_err(|e| Failure::Internal(e.to_string()))?;
                if printed != k.initial && k.complete_through.is_none() {
                    let extra: Vec<String> = k.initial.generators().iter().filter(|m| !printed.generators().contains(m)).map(|m| m.to_string()).collect();
                    let missing: Vec<String> = printed.generators().iter().filter(|m| !k.initial.generators().contains(m)).map(|m| m.to_string()).collect();
                    doc.discrepancy(format!(
                        "initial ideal differs from the printed listing: computed has {} where the listing has {}",
                        extra.join(", "),
                        missing.join(", ")
                    ));
                }
            }
            if let Some(Fixture::Aux2) = source.fixture.map(Fixture::from) {
                let printed = MonomialIdeal::parse(ginwb::groebner::fixtures::AUX2_INITIAL, 5)
                    .map_err(|e| Failure::Internal(e.to_string()))?;
                if printed != k.initial && k.complete_through.is_none() {
                    doc.discrepancy(format!("initial ideal {} differs from {}", k.initial, printed.borel_string()));
                }
            }
            doc
        }
        Command::Splitting { source } => {
            let (f, forms, inputs) = load_forms(source)?;
            let mut doc = ReportDocument::new("splitting", inputs);
            let (rec, t) = syzygy_splitting_type(&forms, f).map_err(|e| Failure::Usage(e.to_string()))?;
            doc.section("syzygy_degrees", &rec.syzygy_degrees);
            doc.section("splitting_type", t.to_string());
            doc.section("codimension", t.codimension());
            doc.section("betti", rec.render_betti().lines().map(str::to_string).collect::<Vec<_>>());
            let expected = match source.fixture {
                Some(FixtureArg::Aux2) => Some(&AUX2_SPLITTING[..]),
                Some(FixtureArg::Aux3) => Some(&AUX3_SPLITTING[..]),
                _ => None,
            };
            if let Some(e) = expected {
                if t.0 != e {
                    doc.discrepancy(format!("splitting {t} differs from the printed {e:?}"));
                }
            }
            doc
        }
        Command::SyzygySolve { fixture, modulus } => {
            let f = field(*modulus)?;
            let fx: Fixture = (*fixture).into();
            let mut doc = ReportDocument::new("syzygy-solve", json!({"fixture": fx.name(), "modulus": modulus}));
            let rels = fx.relations(f).map_err(|e| Failure::Internal(e.to_string()))?;
            let sol = solve_syzygy_constraints(&rels, 5, 11, f).map_err(|e| Failure::Internal(e.to_string()))?;
            doc.section("unknowns", sol.unknowns);
            doc.section("equations", sol.equations);
            doc.section("rank", sol.rank);
            doc.section("nullity", sol.nullity);
            if let Some(rep) = &sol.representative {
                doc.section("representative", render_forms(rep, f));
                if !matches!(fx, Fixture::Aux1) {
                    let printed = fx.forms(f).map_err(|e| Failure::Internal(e.to_string()))?;
                    match common_scalar(&printed, rep, &f) {
                        Some(s) => doc.section("scalar_to_printed", f.to_signed(s)),
                        None => doc.discrepancy("solution is not a multiple of the printed forms"),
                    }
                }
            }
            if matches!(fx, Fixture::Aux2) {
                let first = parse_relation(AUX2_PRINTED_FIRST_RELATION, f).map_err(|e| Failure::Internal(e.to_string()))?;
                if let Err(e) = solve_syzygy_constraints(&[first], 5, 11, f) {
                    doc.discrepancy(format!("first printed relation rejected ({e}); read as u^4 f_4"));
                }
            }
            doc
        }
        Command::Surface { surface, degree, genus, class } => {
            let mut doc = ReportDocument::new(
                "surface",
                json!({"surface": surface.to_string(), "degree": degree, "genus": genus, "class": class}),
            );
            let h = surface.hyperplane();
            doc.section("hyperplane", h.to_string());
            match surface {
                SurfaceModel::Hirzebruch(_) => {
                    let sols = solve_classes(*surface, &h, *degree, genus, false).map_err(|e| Failure::Usage(e.to_string()))?;
                    doc.section("classes", &sols);
                }
                SurfaceModel::Bl6P2 => {
                    let full = BlowupSystem { degree: *degree, ..BlowupSystem::default() };
                    doc.section("all_conditions", blowup6_solutions(&full).iter().map(|c| c.to_string()).collect::<Vec<_>>());
                    let relaxed = BlowupSystem { meets_exceptional_nonnegatively: false, ..full };
                    doc.section("without_exceptional_condition", blowup6_solutions(&relaxed).len());
                }
            }
            if let Some(text) = class {
                let lit = if text.contains(':') { text.clone() } else { format!("{surface}:{text}") };
                let c = DivisorClass::parse(&lit).map_err(|e| Failure::Usage(e.to_string()))?;
                doc.section("class", divisor_stats(&c, &h).map_err(|e| Failure::Usage(e.to_string()))?);
                doc.section("normal_sheaf", normal_sheaf_bound(&c));
            }
            if matches!(surface, SurfaceModel::Hirzebruch(0) | SurfaceModel::Hirzebruch(2)) {
                doc.section("family_dimensions", scroll_family_dims());
            }
            doc
        }
        Command::Liaison => {
            let mut doc = ReportDocument::new("liaison", json!({}));
            doc.section("koszul_333_p4", koszul_chi(&[3, 3, 3], 4));
            let cases = surface_link_cases();
            for c in &cases {
                if !c.matches_printed {
                    doc.discrepancy(format!(
                        "degree-{} residual: computed {} (sectional genus {}), printed {}",
                        c.degree, c.residual.chi, c.residual.sectional_genus, c.printed
                    ));
                }
            }
            doc.section("surface_links", &cases);
            let cubics: Vec<_> = [(2, 0), (3, 1), (4, 3)].iter().map(|&(m, gy)| liaison_bounds(CiType::Cubics333, m, 2, gy)).collect();
            doc.section("cubic_links", cubics);
            let quartics: Vec<_> = (1..=4).map(|m| liaison_bounds(CiType::Quartics44, m, 2, 0)).collect();
            doc.section("quartic_links", quartics);
            doc
        }
        Command::Audit { all, case } => {
            if !*all && case.is_none() {
                return Err(Failure::Usage("give --all or --case <text>".into()));
            }
            let mut doc = ReportDocument::new("audit", json!({"all": all, "case": case}));
            let report = if *all {
                full_audit()
            } else {
                let needle = case.as_deref().unwrap_or("");
                let picked: Vec<_> = corpus().into_iter().filter(|c| c.case.contains(needle)).collect();
                run_audit(&picked)
            };
            doc.section("cases", report.cases_json());
            if *all {
                doc.section("rules", &report.rules);
                doc.section("reducible_pairs", &report.reducible_pairs);
                doc.section("skipped", &report.skipped);
            }
            doc.section("reproduces_text", report.reproduces_text());
            for d in &report.discrepancies {
                doc.discrepancy(d.clone());
            }
            doc
        }
    };
    doc.timing("total", start.elapsed().as_secs_f64());
    Ok(doc)
}

fn write_outputs(doc: &ReportDocument, out: &Path) -> std::io::Result<()> {
    std::fs::write(out, doc.to_json())?;
    std::fs::write(out.with_extension("txt"), doc.render_text())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(doc) => {
            if cli.json {
                println!("{}", doc.to_json());
            } else {
                print!("{}", doc.render_text());
            }
            if let Some(out) = &cli.out {
                if let Err(e) = write_outputs(&doc, out) {
                    eprintln!("error: {}: {e}", out.display());
                    return ExitCode::from(3);
                }
            }
            if doc.has_discrepancies() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(m)) => {
            eprintln!("internal error: {m}");
            ExitCode::from(3)
        }
    }
}
