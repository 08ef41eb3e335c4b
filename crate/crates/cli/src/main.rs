//! `autinv`: classify modules over small finite algebras.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use autinv_core::envelopes::{
    injective_envelope, projective_cover, verify_envelope, AlgebraContext,
};
use autinv_core::field::Kernel;
use autinv_core::invariance::{
    dual_indecomposable_report, indecomposable_report, socle_report, struct_decompose,
};
use autinv_core::modrep::{decompose, ModuleRep};
use autinv_core::oracle;
use autinv_core::workbench::{self, classify, search, LoadError, Verifier, Workbench};
use autinv_core::{Error, Mat};

#[derive(Parser)]
#[command(
    name = "autinv",
    version,
    about = "Automorphism-invariance of modules over finite algebras"
)]
struct Cli {
    /// Elimination kernel for F_2 matrices.
    #[arg(long, global = true, value_enum, default_value_t = KernelArg::Packed)]
    kernel: KernelArg,

    /// Cross-check with brute-force oracles where they fit.
    #[arg(long, global = true)]
    oracle: bool,

    /// Run every loop on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum KernelArg {
    Generic,
    Packed,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportKind {
    Indecomposable,
    Socle,
    Dual,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one module: envelope, cover and the four stability checks.
    Check {
        file: PathBuf,
        #[arg(long)]
        module: String,
        #[arg(long, value_enum)]
        report: Option<ReportKind>,
        /// Write the classification record as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Enumerate and classify small modules, writing a JSON report.
    Search {
        file: PathBuf,
        #[arg(long)]
        max_dim: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the injective envelope and projective cover of a module.
    Envelope {
        file: PathBuf,
        #[arg(long)]
        module: String,
    },
    /// Print the indecomposable summands and the N + L split of a module.
    Decompose {
        file: PathBuf,
        #[arg(long)]
        module: String,
    },
    /// Run the reproduction suite over the shipped corpus.
    Reproduce,
}

enum Failure {
    Validation(String),
    Criteria(usize),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Validation(e.to_string())
    }
}

impl From<LoadError> for Failure {
    fn from(e: LoadError) -> Self {
        Failure::Validation(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Validation(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    autinv_core::par::set_parallel(!cli.sequential);
    let kernel = match cli.kernel {
        KernelArg::Generic => Kernel::Generic,
        KernelArg::Packed => Kernel::BitPacked,
    };
    let outcome = match &cli.command {
        Command::Check {
            file,
            module,
            report,
            json,
        } => check(file, module, *report, json.as_deref(), kernel, cli.oracle),
        Command::Search { file, max_dim, out } => {
            run_search(file, *max_dim, out, kernel, cli.oracle)
        }
        Command::Envelope { file, module } => envelope(file, module, kernel),
        Command::Decompose { file, module } => run_decompose(file, module, kernel),
        Command::Reproduce => reproduce(kernel),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Criteria(n)) => {
            eprintln!("{n} criteria failed");
            ExitCode::from(3)
        }
    }
}

fn open(file: &Path, kernel: Kernel) -> Result<(Workbench, AlgebraContext), Failure> {
    let wb = workbench::load(file)?.with_kernel(kernel);
    let ctx = AlgebraContext::new(wb.algebra.clone())?;
    Ok((wb, ctx))
}

fn named<'a>(wb: &'a Workbench, name: &str) -> Result<&'a ModuleRep, Failure> {
    wb.module(name).ok_or_else(|| {
        Failure::Validation(format!(
            "no module named {name} (available: {})",
            wb.module_names().join(", ")
        ))
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn print_matrix(indent: &str, m: &Mat) {
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(|x| x.to_string()).collect();
        println!("{indent}[{}]", row.join(" "));
    }
}

fn check(
    file: &Path,
    name: &str,
    report: Option<ReportKind>,
    json: Option<&Path>,
    kernel: Kernel,
    run_oracle: bool,
) -> CmdResult {
    let (wb, ctx) = open(file, kernel)?;
    let m = named(&wb, name)?;
    let record = classify(&ctx, name, m, run_oracle)?;
    record.audit(&wb.algebra)?;
    println!("{}: module {name}, dim {}", wb.name, record.dim);
    println!(
        "  indecomposable            {}",
        yes_no(record.indecomposable)
    );
    println!(
        "  quasi-injective           {}",
        yes_no(record.quasi_injective)
    );
    println!(
        "  automorphism-invariant    {}",
        yes_no(record.automorphism_invariant)
    );
    println!(
        "  quasi-projective          {}",
        yes_no(record.quasi_projective)
    );
    println!(
        "  automorphism-coinvariant  {}",
        yes_no(record.automorphism_coinvariant)
    );
    if let Some(p) = record.pseudo_injective {
        println!("  pseudo-injective (oracle) {}", yes_no(p));
    }
    let blocks: Vec<String> = record
        .end_blocks
        .iter()
        .map(|b| format!("M{}(F{})", b.n, b.q))
        .collect();
    println!("  End(M)/J                  {}", blocks.join(" x "));
    println!("  F_2 quotients of End(M)   {}", record.end_f2_quotients);
    println!("  Goldie dimension          {}", record.goldie_dimension);
    println!(
        "  envelope                  dim {}, {} summands",
        record.envelope_dim, record.envelope_summands
    );
    println!(
        "  cover                     dim {}, {} summands",
        record.cover_dim, record.cover_summands
    );
    for w in &record.witnesses {
        let kind = if w.automorphism {
            "automorphism"
        } else {
            "endomorphism"
        };
        println!(
            "  not {}: {kind} moving the subspace",
            w.property.replace('_', "-")
        );
        print_matrix("    ", &Mat::from_rows(w.map.len(), w.map.len(), &w.map)?);
    }
    if run_oracle {
        let brute = oracle::is_pseudo_injective(m)?;
        if brute != record.automorphism_invariant {
            return Err(Failure::Validation(
                "pseudo-injectivity oracle disagrees with the checker".into(),
            ));
        }
    }
    if let Some(kind) = report {
        print_report(&ctx, m, kind)?;
    }
    if let Some(path) = json {
        let mut text = serde_json::to_string_pretty(&record)
            .map_err(|e| Failure::Validation(e.to_string()))?;
        text.push('\n');
        std::fs::write(path, text)?;
    }
    Ok(())
}

fn print_report(ctx: &AlgebraContext, m: &ModuleRep, kind: ReportKind) -> CmdResult {
    let (passed, text) = match kind {
        ReportKind::Indecomposable => {
            let r = indecomposable_report(&injective_envelope(ctx, m)?)?;
            (r.passed(), format!("{r:#?}"))
        }
        ReportKind::Socle => {
            let r = socle_report(ctx, &injective_envelope(ctx, m)?)?;
            (r.passed(), format!("{r:#?}"))
        }
        ReportKind::Dual => {
            let r = dual_indecomposable_report(&projective_cover(ctx, m)?)?;
            (r.passed(), format!("{r:#?}"))
        }
    };
    println!("report: {}", if passed { "passed" } else { "FAILED" });
    println!("{text}");
    if passed {
        Ok(())
    } else {
        Err(Failure::Criteria(1))
    }
}

fn run_search(
    file: &Path,
    max_dim: usize,
    out: &Path,
    kernel: Kernel,
    run_oracle: bool,
) -> CmdResult {
    let (wb, ctx) = open(file, kernel)?;
    let report = search(&ctx, max_dim, run_oracle)?;
    for r in &report.records {
        r.audit(&wb.algebra)?;
    }
    std::fs::write(out, report.to_json())?;
    let gaps = report.invariant_not_quasi_injective().count();
    println!(
        "{}: {} modules up to dim {max_dim}, {gaps} automorphism-invariant but not quasi-injective",
        wb.name,
        report.records.len()
    );
    Ok(())
}

fn envelope(file: &Path, name: &str, kernel: Kernel) -> CmdResult {
    let (wb, ctx) = open(file, kernel)?;
    let m = named(&wb, name)?;
    let env = injective_envelope(&ctx, m)?;
    verify_envelope(&ctx, &env)?;
    println!("injective envelope E({name}): dim {}", env.outer.dim());
    for (b, s) in env.summand_blocks.iter().zip(&env.summands) {
        println!("  E{b} (dim {})", s.dim());
    }
    println!("  embedding:");
    print_matrix("    ", &env.embedding);
    let cover = projective_cover(&ctx, m)?;
    println!("projective cover P({name}): dim {}", cover.outer.dim());
    for (b, s) in cover.summand_blocks.iter().zip(&cover.summands) {
        println!("  P{b} (dim {})", s.dim());
    }
    println!("  projection:");
    print_matrix("    ", &cover.projection);
    Ok(())
}

fn run_decompose(file: &Path, name: &str, kernel: Kernel) -> CmdResult {
    let (wb, ctx) = open(file, kernel)?;
    let m = named(&wb, name)?;
    let parts = decompose(m)?;
    println!("{name}: {} indecomposable summands", parts.len());
    for (i, s) in parts.iter().enumerate() {
        println!("  summand {i} (dim {}):", s.module.dim());
        print_matrix("    ", s.sub.space().basis());
    }
    let env = injective_envelope(&ctx, m)?;
    match struct_decompose(&ctx, &env) {
        Ok(dec) => {
            println!(
                "N + L split: dim N = {}, dim L = {}",
                dec.n.dim(),
                dec.l.dim()
            );
            println!("  End(N)/J Boolean: {}", yes_no(dec.n_semiboolean));
            println!(
                "  L quasi-injective: {}",
                yes_no(dec.l_quasi_injective.holds)
            );
        }
        Err(Error::Precondition(why)) => println!("N + L split: not applicable ({why})"),
        Err(e) => return Err(e.into()),
    }
    Ok(())
}

fn reproduce(kernel: Kernel) -> CmdResult {
    let verifier = Verifier::new(kernel)?;
    let results = verifier.run_all();
    for r in &results {
        println!("{r}");
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    if failed > 0 {
        return Err(Failure::Criteria(failed));
    }
    Ok(())
}
