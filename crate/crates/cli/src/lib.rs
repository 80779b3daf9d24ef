//! Command-line surface over the engine. [`run`] takes the full argument
//! vector and returns the exit status with the text to print.
//!
//! Exit status: 0 success, 1 failed checks or a false assertion, 2 usage or
//! parse errors.

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use tildebraid::btilde::{btilde_eq, btilde_nf, comb, lambda_hat};
use tildebraid::extension::{g0g_act_braid, gn_act_word, gn_s_ij, parse_g0, parse_gn};
use tildebraid::g9tower::{dictionary, g9_presentation, n9_chain_variant, n9_relators};
use tildebraid::monodromy::{
    hurwitz_move, invariance_check, parse_factorization, render_factorization, validate_full_twist, Budget,
};
use tildebraid::vankampen::{parse_presentation, parse_presentation_json, presentation, projectivize, tietze_simplify, Mode, Presentation};
use tildebraid::verify::{run_suite, DEFAULT_SEED};
use tildebraid::words::{artin_act, braid_eq, degree, parse_braid, parse_free, psi};

/// Environment variable capping the Hurwitz search state budget.
pub const MAX_STATES_ENV: &str = "TILDEBRAID_MAX_STATES";

#[derive(Parser, Debug)]
#[command(name = "tildebraid", version, about = "Braid words, the transversal quotient and presentations")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Braid group words.
    #[command(subcommand)]
    Braid(BraidCmd),
    /// Normal forms in the transversal quotient.
    #[command(subcommand)]
    Btilde(BtildeCmd),
    /// The chain-form extension.
    #[command(subcommand)]
    Gn(GnCmd),
    /// The graph-form group on nine strands.
    #[command(subcommand)]
    G0(G0Cmd),
    /// Factorization files and Hurwitz moves.
    #[command(subcommand)]
    Fact(FactCmd),
    /// Presentations from factorizations.
    #[command(subcommand)]
    Vk(VkCmd),
    /// The nine-strand tower.
    #[command(subcommand)]
    G9(G9Cmd),
    /// The identity suite.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(clap::Args, Debug)]
struct Strands {
    /// Number of strands.
    #[arg(long)]
    strands: usize,
}

#[derive(clap::Args, Debug)]
struct Assert {
    /// Exit with status 1 when the answer is false.
    #[arg(long)]
    assert: bool,
}

#[derive(Subcommand, Debug)]
enum BraidCmd {
    /// Equality in the braid group.
    Eq {
        #[command(flatten)]
        s: Strands,
        #[command(flatten)]
        a: Assert,
        lhs: String,
        rhs: String,
    },
    /// Right action of a braid on a free word.
    Act {
        #[command(flatten)]
        s: Strands,
        word: String,
        free: String,
    },
    /// Image in the symmetric group.
    Psi {
        #[command(flatten)]
        s: Strands,
        word: String,
    },
    /// Exponent sum.
    Degree {
        #[command(flatten)]
        s: Strands,
        word: String,
    },
}

#[derive(Subcommand, Debug)]
enum BtildeCmd {
    /// Normal form in the quotient.
    Nf {
        #[command(flatten)]
        s: Strands,
        word: String,
    },
    /// Equality in the quotient.
    Eq {
        #[command(flatten)]
        s: Strands,
        #[command(flatten)]
        a: Assert,
        lhs: String,
        rhs: String,
    },
    /// Combing of a pure word into squared half-twists.
    Comb {
        #[command(flatten)]
        s: Strands,
        word: String,
    },
    /// Extension coordinates of a pure word.
    Lambda {
        #[command(flatten)]
        s: Strands,
        word: String,
    },
}

#[derive(Subcommand, Debug)]
enum GnCmd {
    /// Product of two elements.
    Mul {
        #[command(flatten)]
        s: Strands,
        x: String,
        y: String,
    },
    /// Action of a braid word on an element.
    Act {
        #[command(flatten)]
        s: Strands,
        word: String,
        x: String,
    },
    /// The element s_ij.
    Sij {
        #[command(flatten)]
        s: Strands,
        i: usize,
        j: usize,
    },
}

#[derive(Subcommand, Debug)]
enum G0Cmd {
    /// Product of two elements.
    Mul { x: String, y: String },
    /// Action of a nine-strand braid word on an element.
    Act { word: String, x: String },
}

#[derive(clap::Args, Debug)]
struct BudgetArgs {
    /// State budget; defaults to the environment cap or 10000.
    #[arg(long)]
    max_states: Option<usize>,
    /// Depth budget.
    #[arg(long, default_value_t = 24)]
    max_depth: usize,
}

#[derive(Subcommand, Debug)]
enum FactCmd {
    /// Whether the product of a factorization file is the full twist.
    Validate {
        file: String,
        #[command(flatten)]
        a: Assert,
    },
    /// Applies one Hurwitz move and prints the new file.
    Move {
        file: String,
        position: usize,
        /// 1 or -1.
        #[arg(allow_hyphen_values = true)]
        dir: i8,
    },
    /// Searches for moves turning the factorization into its conjugate by a word.
    Invariance {
        file: String,
        word: String,
        #[command(flatten)]
        b: BudgetArgs,
        #[command(flatten)]
        a: Assert,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Cuspidal,
    General,
}

#[derive(Subcommand, Debug)]
enum VkCmd {
    /// Presentation of a factorization file.
    Present {
        file: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Cuspidal)]
        mode: ModeArg,
    },
    /// Adds the product of all generators as a relator.
    Projectivize { file: String },
    /// Light Tietze simplification.
    Simplify {
        file: String,
        #[arg(long, default_value_t = 8)]
        passes: usize,
    },
    /// Abelianization by Smith normal form.
    Abelianize { file: String },
}

#[derive(Subcommand, Debug)]
enum G9Cmd {
    /// The images of the generators in the working model.
    Dict,
    /// The extra relators of the quotient, evaluated in the working model.
    Relators,
    /// The symbolic presentation.
    Presentation,
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    /// Runs every check, or one.
    PaperSuite {
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        threads: Option<usize>,
    },
}

/// A command result: text and structured renderings plus the exit status.
struct Output {
    text: String,
    json: Value,
    code: i32,
}

impl Output {
    fn ok(text: impl std::fmt::Display, json: Value) -> Self {
        Output { text: format!("{text}\n"), json, code: 0 }
    }

    fn decision(answer: bool, assert: bool) -> Self {
        Output { text: format!("{answer}\n"), json: json!({ "result": answer }), code: (assert && !answer) as i32 }
    }
}

type Res = Result<Output, String>;

fn read(path: &str) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))
}

fn read_presentation(path: &str) -> Result<Presentation, String> {
    let s = read(path)?;
    let p = if s.trim_start().starts_with('{') { parse_presentation_json(&s) } else { parse_presentation(&s) };
    p.map_err(|e| e.to_string())
}

fn presentation_out(p: &Presentation) -> Output {
    Output::ok(p.to_string().trim_end(), serde_json::to_value(p.to_doc()).expect("plain data"))
}

/// Runs the command line `argv` (program name first).
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    let format = cli.format;
    match dispatch(cli.command) {
        Ok(o) => {
            let body = match format {
                Format::Text => o.text,
                Format::Structured => format!("{}\n", serde_json::to_string_pretty(&o.json).expect("json renders")),
            };
            (o.code, body)
        }
        Err(e) => (2, format!("error: {e}\n")),
    }
}

fn dispatch(c: Command) -> Res {
    match c {
        Command::Braid(c) => braid(c),
        Command::Btilde(c) => btilde(c),
        Command::Gn(c) => gn(c),
        Command::G0(c) => g0(c),
        Command::Fact(c) => fact(c),
        Command::Vk(c) => vk(c),
        Command::G9(c) => g9(c),
        Command::Verify(c) => verify(c),
    }
}

fn e<T>(r: tildebraid::Result<T>) -> Result<T, String> {
    r.map_err(|x| x.to_string())
}

fn braid(c: BraidCmd) -> Res {
    Ok(match c {
        BraidCmd::Eq { s, a, lhs, rhs } => {
            let (l, r) = (e(parse_braid(&lhs, s.strands))?, e(parse_braid(&rhs, s.strands))?);
            Output::decision(e(braid_eq(&l, &r))?, a.assert)
        }
        BraidCmd::Act { s, word, free } => {
            let w = e(parse_braid(&word, s.strands))?;
            let x = e(parse_free(&free, s.strands))?;
            let img = e(artin_act(&w, &x))?;
            Output::ok(&img, json!({ "image": img.to_string() }))
        }
        BraidCmd::Psi { s, word } => {
            let p = psi(&e(parse_braid(&word, s.strands))?);
            Output::ok(&p, json!({ "permutation": p.images() }))
        }
        BraidCmd::Degree { s, word } => {
            let d = degree(&e(parse_braid(&word, s.strands))?);
            Output::ok(d, json!({ "degree": d }))
        }
    })
}

fn btilde(c: BtildeCmd) -> Res {
    Ok(match c {
        BtildeCmd::Nf { s, word } => {
            let nf = e(btilde_nf(&e(parse_braid(&word, s.strands))?))?;
            Output::ok(&nf, json!({ "perm": nf.perm.images(), "coords": nf.coords.to_string() }))
        }
        BtildeCmd::Eq { s, a, lhs, rhs } => {
            let (l, r) = (e(parse_braid(&lhs, s.strands))?, e(parse_braid(&rhs, s.strands))?);
            Output::decision(e(btilde_eq(&l, &r))?, a.assert)
        }
        BtildeCmd::Comb { s, word } => {
            let f = e(comb(&e(parse_braid(&word, s.strands))?))?;
            Output::ok(&f, serde_json::to_value(&f).expect("plain data"))
        }
        BtildeCmd::Lambda { s, word } => {
            let g = e(lambda_hat(&e(parse_braid(&word, s.strands))?))?;
            Output::ok(&g, json!({ "element": g.to_string() }))
        }
    })
}

fn gn(c: GnCmd) -> Res {
    let g = match c {
        GnCmd::Mul { s, x, y } => e(e(parse_gn(&x, s.strands))?.mul(&e(parse_gn(&y, s.strands))?))?,
        GnCmd::Act { s, word, x } => e(gn_act_word(&e(parse_braid(&word, s.strands))?, &e(parse_gn(&x, s.strands))?))?,
        GnCmd::Sij { s, i, j } => e(gn_s_ij(i, j, s.strands))?,
    };
    Ok(Output::ok(&g, json!({ "element": g.to_string() })))
}

fn g0(c: G0Cmd) -> Res {
    let g = match c {
        G0Cmd::Mul { x, y } => e(parse_g0(&x))?.mul(&e(parse_g0(&y))?),
        G0Cmd::Act { word, x } => e(g0g_act_braid(&e(parse_braid(&word, 9))?, &e(parse_g0(&x))?))?,
    };
    Ok(Output::ok(&g, json!({ "element": g.to_string() })))
}

fn budget(b: &BudgetArgs) -> Result<Budget, String> {
    let env = match std::env::var(MAX_STATES_ENV) {
        Ok(v) => Some(v.trim().parse::<usize>().map_err(|_| format!("{MAX_STATES_ENV} is not a count: `{v}`"))?),
        Err(_) => None,
    };
    let max_states = match (b.max_states, env) {
        (Some(f), Some(cap)) => f.min(cap),
        (Some(f), None) => f,
        (None, Some(cap)) => cap,
        (None, None) => Budget::default().max_states,
    };
    Ok(Budget { max_states, max_depth: b.max_depth })
}

fn fact(c: FactCmd) -> Res {
    Ok(match c {
        FactCmd::Validate { file, a } => Output::decision(e(validate_full_twist(&e(parse_factorization(&read(&file)?))?))?, a.assert),
        FactCmd::Move { file, position, dir } => {
            if dir != 1 && dir != -1 {
                return Err(format!("direction must be 1 or -1, got {dir}"));
            }
            let moved = e(hurwitz_move(&e(parse_factorization(&read(&file)?))?, position, dir))?;
            let text = render_factorization(&moved);
            let json: Value = serde_json::from_str(&text).expect("rendered json parses");
            Output::ok(text, json)
        }
        FactCmd::Invariance { file, word, b, a } => {
            let expr = e(parse_factorization(&read(&file)?))?;
            let h = e(parse_braid(&word, expr.strands()))?;
            let outcome = e(invariance_check(&expr, &h, budget(&b)?))?;
            let json = serde_json::to_value(&outcome).expect("plain data");
            let mut o = Output::ok(serde_json::to_string(&json).expect("json renders"), json);
            o.code = (a.assert && !outcome.is_equivalent()) as i32;
            o
        }
    })
}

fn vk(c: VkCmd) -> Res {
    Ok(match c {
        VkCmd::Present { file, mode } => {
            let mode = match mode {
                ModeArg::Cuspidal => Mode::Cuspidal,
                ModeArg::General => Mode::General,
            };
            presentation_out(&e(presentation(&e(parse_factorization(&read(&file)?))?, mode))?)
        }
        VkCmd::Projectivize { file } => presentation_out(&projectivize(&read_presentation(&file)?)),
        VkCmd::Simplify { file, passes } => {
            let s = tietze_simplify(&read_presentation(&file)?, passes);
            let mut o = presentation_out(&s.presentation);
            o.json = json!({ "presentation": o.json, "log": s.log });
            o
        }
        VkCmd::Abelianize { file } => {
            let ab = read_presentation(&file)?.abelianization();
            Output::ok(&ab, json!({ "free_rank": ab.free_rank, "torsion": ab.torsion, "text": ab.to_string() }))
        }
    })
}

fn g9(c: G9Cmd) -> Res {
    Ok(match c {
        G9Cmd::Dict => {
            let d = e(dictionary())?;
            let mut lines = Vec::new();
            for x in &d.entries {
                lines.push(format!("t{} = {}", x.index, x.t));
                match &x.a {
                    Some(a) => lines.push(format!("a{} = {a}", x.index)),
                    None => lines.push(format!("a{} = unsupported", x.index)),
                }
                lines.push(format!("xi{} = {} = {}", x.index, x.xi_word, x.xi));
            }
            lines.push(format!("v1 = {}", d.v1));
            Output::ok(lines.join("\n"), serde_json::to_value(&d).expect("plain data"))
        }
        G9Cmd::Relators => {
            let main = e(n9_relators())?;
            let chain = e(n9_chain_variant())?;
            let line = |r: &tildebraid::g9tower::QuotientRelator| {
                format!("{} = {}{}", r.name, r.value, if r.is_identity { " (identity)" } else { "" })
            };
            let mut lines: Vec<String> = main.iter().map(line).collect();
            lines.push("# two-generator form".into());
            lines.extend(chain.iter().map(line));
            Output::ok(lines.join("\n"), json!({ "relators": main, "chain_variant": chain }))
        }
        G9Cmd::Presentation => {
            let p = e(g9_presentation())?;
            Output::ok(p.to_string().trim_end(), serde_json::to_value(&p).expect("plain data"))
        }
    })
}

fn verify(c: VerifyCmd) -> Res {
    let VerifyCmd::PaperSuite { filter, seed, threads } = c;
    let r = e(run_suite(seed, filter.as_deref(), threads))?;
    let code = if r.all_pass() { 0 } else { 1 };
    let json = serde_json::to_value(&r).expect("plain data");
    Ok(Output { text: r.to_string(), json, code })
}
