//! `vlab` — exact computations with apolar ideals, Veronese projections,
//! Rees diagonals and graded free resolutions.
//!
//! Every subcommand prints one report, as text or as stable JSON
//! (`schema: 1`); identical invocations produce identical JSON except for
//! the `timing_ms` field.  Exit codes: 0 success, 1 a mathematical check
//! failed, 2 unparseable input or configuration, 3 zero form, 4 budget
//! exhausted.
//!
//! Global flags may also be set through `VLAB_*` environment variables
//! (`VLAB_FIELD`, `VLAB_CHECK_PRIME`, `VLAB_DEG_CAP`, `VLAB_HOM_CAP`,
//! `VLAB_SEED`, `VLAB_BUDGET_PAIRS`, `VLAB_FORMAT`).

mod commands;
mod report;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use vlab_core::arith::FieldDescriptor;
use vlab_core::Error;

use commands::Ctx;
use report::CommandOutput;

#[derive(Parser)]
#[command(
    name = "vlab",
    version,
    about = "Exact apolarity, subalgebra presentations, Rees diagonals and Betti tables"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Coefficient field: `q` for the rationals or `gf:P` for a prime P > 3.
    #[arg(long, global = true, env = "VLAB_FIELD", default_value = "gf:32003")]
    field: String,

    /// Re-run the command over GF(P) and require identical results.
    #[arg(long, global = true, env = "VLAB_CHECK_PRIME")]
    check_prime: Option<u64>,

    /// Internal-degree cap D (>= 4) for windows; defaults per command.
    #[arg(long, global = true, env = "VLAB_DEG_CAP")]
    deg_cap: Option<i64>,

    /// Homological cap s (>= 2) for resolutions; defaults per command.
    #[arg(long, global = true, env = "VLAB_HOM_CAP", visible_alias = "s")]
    hom_cap: Option<usize>,

    /// Seed for all randomized sampling.
    #[arg(long, global = true, env = "VLAB_SEED", default_value_t = 1729)]
    seed: u64,

    /// Groebner pair budget before giving up with exit code 4.
    #[arg(long, global = true, env = "VLAB_BUDGET_PAIRS")]
    budget_pairs: Option<usize>,

    /// Output format.
    #[arg(long, global = true, env = "VLAB_FORMAT", value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a ternary cubic by its secant stratum.
    Classify {
        /// The cubic, e.g. "y0^3 + y1^3 + y2^3".
        form: Option<String>,
        /// Fixture name instead of a literal form (f1..f5).
        #[arg(long)]
        preset: Option<String>,
        /// Path to a saved degree-four invariant for cross-checking.
        #[arg(long)]
        invariant: Option<PathBuf>,
    },
    /// Print the nine cubics spanning the apolar degree-3 slice of a cubic.
    Project {
        form: Option<String>,
        #[arg(long)]
        preset: Option<String>,
    },
    /// Present the subalgebra generated by the projection of a cubic.
    Present {
        form: Option<String>,
        #[arg(long)]
        preset: Option<String>,
    },
    /// Graded Betti numbers of a preset algebra.
    Betti {
        /// Algebra preset (f1..f5, pinched, h-matrix, segre-3x3, squares).
        #[arg(long, visible_alias = "preset")]
        ring: String,
        /// Resolve the algebra over its ambient polynomial ring ("poly")
        /// or the residue field over the algebra itself ("self").
        #[arg(long, default_value = "poly")]
        over: String,
    },
    /// Resolve the residue field and report the first nonlinear syzygy.
    KoszulProbe {
        #[arg(long)]
        preset: String,
    },
    /// Rees presentation of three quadrics: signed minors, syzygy rows,
    /// linear type.
    Rees {
        /// Comma-separated quadrics, e.g. "x1^2,x2^2,x3^2".
        #[arg(long)]
        quadrics: Option<String>,
        #[arg(long)]
        preset: Option<String>,
    },
    /// Check the four colon/regular-sequence identities of the Rees pair.
    LemmaCheck {
        #[arg(long)]
        quadrics: Option<String>,
        #[arg(long)]
        preset: Option<String>,
    },
    /// Verify the two-periodic complex: composition, homology window,
    /// diagonal vanishing.
    ComplexF {
        #[arg(long)]
        quadrics: Option<String>,
        #[arg(long)]
        preset: Option<String>,
    },
    /// Slice dimensions of a preset algebra, optionally against another.
    Hilbert {
        #[arg(long)]
        preset: String,
        /// Second preset whose dimensions must agree degree by degree.
        #[arg(long)]
        versus: Option<String>,
    },
    /// Interpolate the degree-four invariant of the secant hypersurface
    /// and save it.
    AronholdBuild {
        /// Output file for the interpolated invariant.
        #[arg(long)]
        out: PathBuf,
        /// Number of sampled points on the hypersurface.
        #[arg(long, default_value_t = 780)]
        samples: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Classify { .. } => "classify",
            Command::Project { .. } => "project",
            Command::Present { .. } => "present",
            Command::Betti { .. } => "betti",
            Command::KoszulProbe { .. } => "koszul-probe",
            Command::Rees { .. } => "rees",
            Command::LemmaCheck { .. } => "lemma-check",
            Command::ComplexF { .. } => "complex-f",
            Command::Hilbert { .. } => "hilbert",
            Command::AronholdBuild { .. } => "aronhold-build",
        }
    }
}

fn parse_field(spec: &str) -> Result<FieldDescriptor, Error> {
    let lower = spec.trim().to_ascii_lowercase();
    if lower == "q" {
        return Ok(FieldDescriptor::Rationals);
    }
    if let Some(p) = lower.strip_prefix("gf:") {
        let p: u64 = p
            .parse()
            .map_err(|_| Error::Parse(format!("bad field spec '{spec}'")))?;
        return FieldDescriptor::prime(p);
    }
    Err(Error::Parse(format!(
        "bad field spec '{spec}' (expected 'q' or 'gf:P')"
    )))
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::NotHomogeneous(_)
        | Error::InvalidModulus(_)
        | Error::CharacteristicTooSmall { .. } => 2,
        Error::ZeroForm => 3,
        Error::BudgetExceeded(_) => 4,
        _ => 1,
    }
}

fn execute(cmd: &Command, ctx: &Ctx) -> Result<CommandOutput, Error> {
    match cmd {
        Command::Classify {
            form,
            preset,
            invariant,
        } => commands::cmd_classify(ctx, form, preset, invariant),
        Command::Project { form, preset } => commands::cmd_project(ctx, form, preset),
        Command::Present { form, preset } => commands::cmd_present(ctx, form, preset),
        Command::Betti { ring, over } => commands::cmd_betti(ctx, ring, over),
        Command::KoszulProbe { preset } => commands::cmd_koszul_probe(ctx, preset),
        Command::Rees { quadrics, preset } => commands::cmd_rees(ctx, quadrics, preset),
        Command::LemmaCheck { quadrics, preset } => commands::cmd_lemma_check(ctx, quadrics, preset),
        Command::ComplexF { quadrics, preset } => commands::cmd_complex_f(ctx, quadrics, preset),
        Command::Hilbert { preset, versus } => commands::cmd_hilbert(ctx, preset, versus),
        Command::AronholdBuild { out, samples } => commands::cmd_aronhold_build(ctx, out, *samples),
    }
}

fn field_name(field: &FieldDescriptor) -> String {
    match field {
        FieldDescriptor::Rationals => "q".to_string(),
        FieldDescriptor::Prime(p) => format!("gf:{p}"),
    }
}

fn run(cli: Cli) -> i32 {
    if let Some(d) = cli.deg_cap {
        if d < 4 {
            eprintln!("error: --deg-cap must be at least 4");
            return 2;
        }
    }
    if let Some(s) = cli.hom_cap {
        if s < 2 {
            eprintln!("error: --hom-cap must be at least 2");
            return 2;
        }
    }
    let field = match parse_field(&cli.field) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    let ctx = Ctx {
        field,
        deg_cap: cli.deg_cap,
        hom_cap: cli.hom_cap,
        seed: cli.seed,
        budget: cli.budget_pairs,
    };

    let started = Instant::now();
    let mut out = match execute(&cli.command, &ctx) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };

    if let Some(p2) = cli.check_prime {
        let field2 = match FieldDescriptor::prime(p2) {
            Ok(f) => f,
            Err(e) => {
                eprintln!("error: {e}");
                return exit_code(&e);
            }
        };
        let ctx2 = Ctx {
            field: field2,
            ..ctx.clone()
        };
        match execute(&cli.command, &ctx2) {
            Ok(out2) => {
                let agrees = out.check_view() == out2.check_view();
                out.payload["cross_check"] = json!({
                    "field": format!("gf:{p2}"),
                    "agrees": agrees,
                });
                if !agrees {
                    out.ok = false;
                    out.caveats
                        .push(format!("results differ between {} and gf:{p2}", cli.field));
                }
            }
            Err(e) => {
                eprintln!("error during cross-check: {e}");
                return exit_code(&e);
            }
        }
    }

    let timing_ms = started.elapsed().as_millis();
    let config = json!({
        "field": field_name(&ctx.field),
        "check_prime": cli.check_prime.map(|p| p.to_string()),
        "deg_cap": ctx.deg_cap.map(|d| d.to_string()),
        "hom_cap": ctx.hom_cap.map(|s| s.to_string()),
        "seed": ctx.seed.to_string(),
        "budget_pairs": ctx.budget.map(|b| b.to_string()),
    });

    match cli.format {
        Format::Json => {
            let envelope = report::envelope(cli.command.name(), config, &out, timing_ms);
            println!("{}", serde_json::to_string_pretty(&envelope).expect("serializable"));
        }
        Format::Text => {
            println!("{}", report::render_text(cli.command.name(), &config, &out));
        }
    }
    if out.ok {
        0
    } else {
        1
    }
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli));
}
