use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use d21::cohomology::{self, BlockSpec, Cochain1, Complex, Engine};
use d21::deform::{self, DeformedMap};
use d21::gamma;
use d21::parse::{parse_rat, parse_symbol};
use d21::quantize;
use d21::report::{self, Check, Report};
use d21::symalg::{virasoro, Target};
use d21::{Error, Rat, Symbol};

#[derive(Parser)]
#[command(name = "d21", version, about = "Exact computations with D(2,1;alpha) inside Poisson superalgebras of symbols")]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Poisson bracket (or h-bracket) of two symbols
    Bracket {
        a: String,
        b: String,
        #[arg(long)]
        quantized: bool,
    },
    /// The 17 basis elements of the image
    Basis {
        #[arg(long, value_parser = parse_rat_arg, allow_hyphen_values = true)]
        alpha: Option<Rat>,
        #[arg(long)]
        quantized: bool,
    },
    /// Structural checks
    Verify { what: VerifyWhat },
    /// First cohomology of one block or of a window of blocks
    H1 {
        #[arg(long, value_parser = parse_target)]
        target: Target,
        #[arg(long, requires = "n", allow_hyphen_values = true)]
        k: Option<i32>,
        #[arg(long, requires = "k", allow_hyphen_values = true)]
        n: Option<i32>,
        /// Scan |k|, |n| <= W
        #[arg(long, env = "D21_WINDOW", conflicts_with = "k")]
        window: Option<i32>,
        #[arg(long, value_parser = parse_rat_arg, allow_hyphen_values = true)]
        specialize: Option<Rat>,
        /// Powers of h allowed in values (quantized complex, P+ only)
        #[arg(long, default_value_t = 0)]
        h_depth: u32,
    },
    /// Check that a named or stored cochain is a cocycle
    Cocycle {
        name: Option<String>,
        #[arg(long, conflicts_with = "name")]
        file: Option<PathBuf>,
    },
    /// Cup product of two cochains
    Cup { f: String, g: String },
    /// Solve d(rho2) = -1/2 [[F, F]] in the block of k-degree K
    SolveObstruction {
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        k: i32,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        n: i32,
        #[arg(long, value_parser = parse_target)]
        target: Option<Target>,
    },
    /// Deformation checks
    Deform {
        #[command(subcommand)]
        cmd: DeformCmd,
    },
}

#[derive(Subcommand)]
enum DeformCmd {
    Verify {
        which: Option<Named>,
        #[arg(long, conflicts_with = "which")]
        file: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyWhat {
    Embedding,
    Iso,
    Jacobi,
    Virasoro,
    Contraction,
}

#[derive(Clone, Copy, ValueEnum)]
enum Named {
    /// rho + beta theta, values in K'(4)
    #[value(name = "cor42")]
    K4,
    /// rho + beta theta1 + beta^2 rho2, values in P+
    #[value(name = "thm43")]
    Pplus,
    /// the h-quantized version of thm43
    #[value(name = "thm45")]
    Quantized,
}

fn parse_target(s: &str) -> Result<Target, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_rat_arg(s: &str) -> Result<Rat, String> {
    parse_rat(s).map_err(|e| e.to_string())
}

/// What a command produced: text and JSON renderings and whether the
/// mathematical check it performed succeeded.
struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, ok: true }
    }

    fn report(r: Report) -> Self {
        Output { text: r.text(), json: r.json(), ok: r.passed() }
    }
}

fn load_cochain(arg: &str) -> d21::Result<Cochain1> {
    if cohomology::NAMED_COCHAINS.contains(&arg) {
        return cohomology::named_cocycle(arg);
    }
    let p = Path::new(arg);
    if p.exists() {
        return report::read_cochain(p);
    }
    Err(Error::UnknownName(arg.to_string()))
}

fn run(cmd: Cmd) -> d21::Result<Output> {
    match cmd {
        Cmd::Bracket { a, b, quantized } => {
            let (a, b) = (parse_symbol(&a)?, parse_symbol(&b)?);
            let r = if quantized { quantize::h_bracket(&a, &b)? } else { a.poisson(&b) };
            Ok(Output::ok(format!("{r}\n"), json!({ "bracket": r.to_string() })))
        }
        Cmd::Basis { alpha, quantized } => {
            let mut basis = if quantized { quantize::gamma_h_basis() } else { gamma::rho_alpha() };
            if let Some(a) = &alpha {
                basis = basis.specialize(a)?;
            }
            let text = basis.elements.iter().map(|e| format!("{:>3} = {}\n", e.name, e.symbol)).collect();
            Ok(Output::ok(text, report::basis_json(&basis)))
        }
        Cmd::Verify { what } => Ok(Output::report(verify(what))),
        Cmd::H1 { target, k, n, window, specialize, h_depth } => h1(target, k.zip(n), window, specialize, h_depth),
        Cmd::Cocycle { name, file } => {
            let c = match (name, file) {
                (_, Some(f)) => report::read_cochain(&f)?,
                (Some(n), None) => load_cochain(&n)?,
                (None, None) => return Err(Error::Semantic("give a cochain name or --file".into())),
            };
            cocycle(&c)
        }
        Cmd::Cup { f, g } => {
            let (f, g) = (load_cochain(&f)?, load_cochain(&g)?);
            if f.block.engine() != g.block.engine() {
                return Err(Error::BlockViolation("cochains belong to different complexes".into()));
            }
            let c = cohomology::cup(Complex::for_block(&f.block), &f, &g)?;
            Ok(Output::ok(format!("[[F, G]]:\n{c}"), report::cochain2_to_json(&c)))
        }
        Cmd::SolveObstruction { f, k, n, target } => {
            let f = load_cochain(&f)?;
            let block = if f.block.is_quantized() {
                BlockSpec::quantized(k, n, f.block.h_depth)
            } else {
                let t = target.unwrap_or(if f.block.target == Target::P { Target::Pplus } else { f.block.target });
                BlockSpec::new(k, n, t)
            };
            match cohomology::solve_obstruction(Complex::for_block(&block), &f, &block)? {
                Some(sol) => Ok(Output::ok(
                    format!("solution in block {block}:\n{sol}"),
                    json!({ "solvable": true, "solution": report::cochain_to_json(&sol) }),
                )),
                None => Ok(Output {
                    text: format!("no solution in block {block}\n"),
                    json: json!({ "solvable": false, "block": block }),
                    ok: false,
                }),
            }
        }
        Cmd::Deform { cmd: DeformCmd::Verify { which, file } } => match (which, file) {
            (_, Some(f)) => deform_verify(&deform::read_descriptor(&f)?),
            (Some(Named::K4), None) => deform_verify(&deform::k4_deformation()?),
            (Some(Named::Pplus), None) => deform_verify(&deform::pplus_deformation()?),
            (Some(Named::Quantized), None) => {
                let v = deform::verify_quantized()?;
                let rel = deform::verify_order_relations(&deform::quantized_deformation()?, 4)?;
                let mut out = deform_output(&v.homomorphism, &rel);
                for m in &v.contraction_mismatches {
                    out.text += &format!("contraction mismatch: {m}\n");
                }
                out.text += &format!("h = 0 contraction reproduces the classical map: {}\n", v.contraction_mismatches.is_empty());
                out.json["contraction_mismatches"] = json!(v.contraction_mismatches);
                out.json["passed"] = json!(out.ok && v.passed());
                out.ok = out.ok && v.passed();
                Ok(out)
            }
            (None, None) => Err(Error::Semantic("give cor42, thm43, thm45 or --file".into())),
        },
    }
}

fn verify(what: VerifyWhat) -> Report {
    let mut r = Report::default();
    match what {
        VerifyWhat::Embedding => {
            r.push(Check::new(
                "closure",
                true,
                "brackets of the 17 image elements expand in the image (structure table built)",
            ));
            let j = gamma::jacobi_check_image(&gamma::rho_alpha());
            r.push(match j {
                Ok(()) => Check::new("jacobi", true, "all basis triples"),
                Err(f) => Check::new("jacobi", false, format!("{:?}: {}", f.triple, f.residual)),
            });
        }
        VerifyWhat::Iso => r.push(match gamma::verify_iso() {
            Ok(()) => Check::new("iso", true, "17 x 17 pairs agree over Q(alpha)[s]/(s^2+2)"),
            Err(m) => Check::new("iso", false, format!("{:?}: {} vs {}", m.pair, m.abstract_side, m.poisson_side)),
        }),
        VerifyWhat::Jacobi => {
            let a = gamma::build_abstract(gamma::alpha_sigma());
            r.push(match a.jacobi_check() {
                Ok(()) => Check::new("abstract jacobi", true, "sigma sums to zero"),
                Err(f) => Check::new("abstract jacobi", false, format!("{:?}: {}", f.triple, f.residual)),
            });
            r.push(match gamma::structure_table().jacobi_violation() {
                None => Check::new("table jacobi", true, "structure table of the image"),
                Some((t, _)) => Check::new("table jacobi", false, format!("triple {t:?}")),
            });
        }
        VerifyWhat::Virasoro => {
            let mut bad = Vec::new();
            for n in -6..=6 {
                for m in -6..=6 {
                    let lhs = virasoro(n).poisson(&virasoro(m));
                    let rhs = virasoro(n + m).scale(&d21::Scalar::from_int((m - n) as i64));
                    if lhs != rhs {
                        bad.push(format!("({n}, {m})"));
                    }
                }
            }
            r.push(Check::new(
                "virasoro",
                bad.is_empty(),
                if bad.is_empty() { "[L_n, L_m] = (m - n) L_(n+m) for |n|, |m| <= 6".to_string() } else { bad.join(", ") },
            ));
        }
        VerifyWhat::Contraction => {
            let b = quantize::gamma_h_basis().symbols();
            let mut bad = Vec::new();
            for (i, x) in b.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    match quantize::check_contraction(x, y) {
                        Ok(true) => {}
                        Ok(false) => bad.push(format!("({}, {})", gamma::NAMES[i], gamma::NAMES[j])),
                        Err(e) => bad.push(format!("({}, {}): {e}", gamma::NAMES[i], gamma::NAMES[j])),
                    }
                }
            }
            r.push(Check::new(
                "contraction",
                bad.is_empty(),
                if bad.is_empty() { "h-bracket contracts to the Poisson bracket on all 17 x 17 pairs".to_string() } else { bad.join(", ") },
            ));
        }
    }
    r
}

fn h1(target: Target, kn: Option<(i32, i32)>, window: Option<i32>, alpha: Option<Rat>, h_depth: u32) -> d21::Result<Output> {
    let engine = if h_depth > 0 { Engine::Quantized } else { Engine::Poisson };
    let base = Complex::for_engine(engine);
    let spec;
    let cx = match &alpha {
        Some(a) => {
            spec = base.specialize(a)?;
            &spec
        }
        None => base,
    };
    if let Some((k, n)) = kn {
        let block = BlockSpec { k, n, target, weight_zero: true, h_depth };
        let r = cohomology::h1_block_with(cx, &block)?;
        return Ok(Output::ok(report::cohomology_text(&r), report::cohomology_to_json(&r)));
    }
    let w = window.unwrap_or(6);
    if w < 0 {
        return Err(Error::Semantic("window must be non-negative".into()));
    }
    let all = cohomology::h1_scan(cx, -w..=w, -w..=w, target, h_depth)?;
    let nonzero: Vec<_> = all.iter().filter(|r| r.dim_h1 > 0).collect();
    let total: usize = nonzero.iter().map(|r| r.dim_h1).sum();
    let mut text = format!("target {target}, window {w}: {} blocks scanned, total dim H1 = {total}\n", all.len());
    for r in &nonzero {
        text += &report::cohomology_text(r);
    }
    let json = json!({
        "target": target,
        "window": w,
        "alpha": alpha.as_ref().map(|a| a.to_string()),
        "blocks_scanned": all.len(),
        "total_dim_h1": total,
        "nonzero_blocks": nonzero.iter().map(|r| report::cohomology_to_json(r)).collect::<Vec<_>>(),
    });
    Ok(Output::ok(text, json))
}

fn cocycle(c: &Cochain1) -> d21::Result<Output> {
    let cx = Complex::for_block(&c.block);
    c.validate(cx)?;
    let d = cohomology::d1(cx, c)?;
    let closed = d.is_zero();
    let exact = if closed { cohomology::is_coboundary(cx, c)? } else { None };
    let mut text = format!("cochain in block {}:\n{c}", c.block);
    text += &format!("cocycle: {closed}\n");
    if !closed {
        text += &format!("d1:\n{d}");
    } else {
        match &exact {
            Some(m) => text += &format!("coboundary: d0({m})\n"),
            None => text += "coboundary: no\n",
        }
    }
    let json = json!({
        "cochain": report::cochain_to_json(c),
        "cocycle": closed,
        "d1": report::cochain2_to_json(&d),
        "coboundary_of": exact.as_ref().map(Symbol::to_string),
    });
    Ok(Output { text, json, ok: closed })
}

fn deform_output(h: &deform::HomomorphismVerdict, rel: &[deform::OrderRelation]) -> Output {
    let json = deform::verdict_json(h, rel);
    let mut text = format!("homomorphism on {} ordered pairs: {}\n", h.pairs_checked, if h.passed() { "pass" } else { "FAIL" });
    for r in &h.residuals {
        text += &format!("  ({}, {}) at beta^{}: {}\n", r.pair.0, r.pair.1, r.beta_power, r.residual);
    }
    for r in rel {
        text += &format!("order {} relation: {}\n", r.order, if r.holds() { "holds" } else { "FAILS" });
    }
    let ok = json["passed"].as_bool().unwrap_or(false);
    Output { text, json, ok }
}

fn deform_verify(d: &DeformedMap) -> d21::Result<Output> {
    let h = deform::verify_homomorphism(d)?;
    let rel = deform::verify_order_relations(d, (2 * d.top_order()).max(1))?;
    Ok(deform_output(&h, &rel))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let as_json = cli.json;
    match run(cli.cmd) {
        Ok(out) => {
            if as_json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable"));
            } else {
                print!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Syntax { .. }
                | Error::Semantic(_)
                | Error::UnknownName(_)
                | Error::Io(_)
                | Error::Json(_)
                | Error::BlockViolation(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
