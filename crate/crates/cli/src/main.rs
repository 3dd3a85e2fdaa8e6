use std::fmt::Display;
use std::path::PathBuf;
use std::process::ExitCode;

use aromatic_core::algebra::{antipode, int, Basis, Coproduct, LinComb};
use aromatic_core::embedding::{fertility_clumped, fertility_forest, j_aro_lin, j_bar, j_cl_lin};
use aromatic_core::forests::enumerate as fe;
use aromatic_core::forests::gl::{gl_aro_lin, gl_cl_lin};
use aromatic_core::forests::{
    divergence, graft_lin, psi_star, trace, AromaticForest, AromaticTree, BckAro, BckCl,
    ClumpedForest,
};
use aromatic_core::multiindices::enumerate as me;
use aromatic_core::multiindices::{phi_star, AromaticMI, ClumpedMI, LotAro, LotCl};
use aromatic_core::text::{parse_lincomb_colored, render_lines, Parse};
use aromatic_core::verify;
use aromatic_core::ColorSet;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "aromatic",
    version,
    about = "Exact algebra on aromatic forests and multi-indices"
)]
struct Cli {
    /// Degree bound for `enumerate` and `verify`.
    #[arg(long, global = true, value_name = "N")]
    max_order: Option<usize>,
    /// Allowed vertex/letter colours, comma separated.
    #[arg(long, global = true, value_name = "c1,c2,...")]
    colors: Option<String>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Compare the output with this file; exit 1 on mismatch.
    #[arg(long, global = true, value_name = "FILE")]
    golden: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Grafting product x -> y of aromatic trees.
    Graft { x: String, y: String },
    /// Divergence of an aromatic tree.
    Div { x: String },
    /// Trace of an aromatic tree with one free edge.
    Trace { x: String },
    /// Symmetry factor of a forest-side or monomial-side object.
    Sigma { x: String },
    /// Aromatic BCK coproduct.
    BckAro { x: String },
    /// Clumped BCK coproduct.
    BckCl { x: String },
    /// Aromatic LOT coproduct.
    LotAro { x: String },
    /// Clumped LOT coproduct.
    LotCl { x: String },
    /// Grossman-Larson product (aromatic or clumped).
    Gl { x: String, y: String },
    /// Adjoint of forgetting the clumps of forests.
    PsiStar { x: String },
    /// Adjoint of forgetting the clumps of multi-indices.
    PhiStar { x: String },
    /// Fertility map from forests to multi-indices.
    Phi { x: String },
    /// Embedding of aromatic multi-indices into aromatic forests.
    EmbedAro { x: String },
    /// Embedding of clumped multi-indices into clumped forests.
    EmbedCl { x: String },
    /// Embedding allowing free edges.
    EmbedBar { x: String },
    /// List basis elements of one order (or all orders up to --max-order).
    Enumerate {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Antipode for the coproduct matching the input's side.
    Antipode { x: String },
    /// Run identity checks (all when none are named).
    Verify {
        checks: Vec<String>,
        /// List the registered checks and exit.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Tree,
    Aroma,
    Multiaroma,
    AromaticTree,
    Forest,
    Clumped,
    AromaticMi,
    ClumpedMi,
}

/// Which of the four bases an input belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Side {
    Forest,
    Clumped,
    Monomial,
    ClumpedMonomial,
}

fn detect(s: &str) -> Side {
    let monomial = s.contains("x(");
    let paren = s
        .char_indices()
        .any(|(i, c)| c == '(' && !s[..i].ends_with('x'));
    let clumped = s.contains('#') || paren;
    match (monomial, clumped) {
        (false, false) => Side::Forest,
        (false, true) => Side::Clumped,
        (true, false) => Side::Monomial,
        (true, true) => Side::ClumpedMonomial,
    }
}

struct Out {
    text: String,
    ok: bool,
}

impl Out {
    fn text(text: String) -> Self {
        Out { text, ok: true }
    }
}

struct Ctx {
    colors: ColorSet,
    json: bool,
    max_order: Option<usize>,
}

impl Ctx {
    fn parse<T: Parse + Ord + Clone>(&self, s: &str) -> Result<LinComb<T>, String> {
        parse_lincomb_colored(s, &self.colors).map_err(|e| e.to_string())
    }

    fn expansion<T: Ord + Clone + Display>(&self, x: &LinComb<T>) -> Out {
        if self.json {
            Out::text(format!("{}\n", x.to_json()))
        } else {
            Out::text(render_lines(x))
        }
    }

    fn list<T: Display>(&self, items: &[T]) -> Out {
        if self.json {
            let v: Vec<String> = items.iter().map(|x| x.to_string()).collect();
            Out::text(format!(
                "{}\n",
                serde_json::to_string(&v).expect("strings serialise")
            ))
        } else {
            Out::text(items.iter().map(|x| format!("{x}\n")).collect())
        }
    }
}

fn sigma_of<T: Basis>(x: &LinComb<T>) -> Result<String, String> {
    match x.iter().collect::<Vec<_>>().as_slice() {
        [(b, c)] if **c == int(1) => Ok(b.sigma().to_string()),
        _ => Err("sigma needs a single basis element".to_string()),
    }
}

fn antipode_lin<C: Coproduct>(cop: &C, x: &LinComb<C::B>) -> Result<LinComb<C::B>, String> {
    let mut out = LinComb::zero();
    for (b, c) in x.iter() {
        out.add_scaled(&antipode(cop, b).map_err(|e| e.to_string())?, c);
    }
    Ok(out)
}

fn enumerate(ctx: &Ctx, kind: Kind, order: usize) -> Vec<String> {
    let cs = &ctx.colors;
    fn s<T: Display>(v: Vec<T>) -> Vec<String> {
        v.iter().map(|x| x.to_string()).collect()
    }
    match kind {
        Kind::Tree => s(fe::trees(order, cs)),
        Kind::Aroma => s(fe::aromas(order, cs)),
        Kind::Multiaroma => s(fe::multiaromas(order, cs)),
        Kind::AromaticTree => s(fe::aromatic_trees(order, cs)),
        Kind::Forest => s(fe::aromatic_forests(order, cs)),
        Kind::Clumped => s(fe::clumped_forests(order, cs)),
        Kind::AromaticMi => s(me::aromatic_mis(order, cs)),
        Kind::ClumpedMi => s(me::clumped_mis(order, cs)),
    }
}

fn run(ctx: &Ctx, cmd: Cmd) -> Result<Out, String> {
    Ok(match cmd {
        Cmd::Graft { x, y } => {
            ctx.expansion(&graft_lin(&ctx.parse::<AromaticTree>(&x)?, &ctx.parse(&y)?))
        }
        Cmd::Div { x } => ctx.expansion(&ctx.parse::<AromaticTree>(&x)?.flat_map(divergence)),
        Cmd::Trace { x } => {
            let mut out = LinComb::zero();
            for (t, c) in ctx.parse::<AromaticTree>(&x)?.iter() {
                out.add_term(trace(t).map_err(|e| format!("{t}: {e}"))?, c.clone());
            }
            ctx.expansion(&out)
        }
        Cmd::Sigma { x } => Out::text(format!(
            "{}\n",
            match detect(&x) {
                Side::Forest => sigma_of(&ctx.parse::<AromaticForest>(&x)?),
                Side::Clumped => sigma_of(&ctx.parse::<ClumpedForest>(&x)?),
                Side::Monomial => sigma_of(&ctx.parse::<AromaticMI>(&x)?),
                Side::ClumpedMonomial => sigma_of(&ctx.parse::<ClumpedMI>(&x)?),
            }?
        )),
        Cmd::BckAro { x } => ctx.expansion(&BckAro.coproduct_lin(&ctx.parse(&x)?)),
        Cmd::BckCl { x } => ctx.expansion(&BckCl.coproduct_lin(&ctx.parse(&x)?)),
        Cmd::LotAro { x } => ctx.expansion(&LotAro.coproduct_lin(&ctx.parse(&x)?)),
        Cmd::LotCl { x } => ctx.expansion(&LotCl.coproduct_lin(&ctx.parse(&x)?)),
        Cmd::Gl { x, y } => match (detect(&x), detect(&y)) {
            (Side::Forest, Side::Forest) => {
                ctx.expansion(&gl_aro_lin(&ctx.parse(&x)?, &ctx.parse(&y)?))
            }
            (Side::Clumped | Side::Forest, Side::Clumped | Side::Forest) => {
                ctx.expansion(&gl_cl_lin(&ctx.parse(&x)?, &ctx.parse(&y)?))
            }
            _ => return Err("gl takes forests or clumped forests".to_string()),
        },
        Cmd::PsiStar { x } => ctx.expansion(&ctx.parse::<AromaticForest>(&x)?.flat_map(psi_star)),
        Cmd::PhiStar { x } => ctx.expansion(&ctx.parse::<AromaticMI>(&x)?.flat_map(phi_star)),
        Cmd::Phi { x } => match detect(&x) {
            Side::Forest => {
                ctx.expansion(&ctx.parse::<AromaticForest>(&x)?.map_basis(fertility_forest))
            }
            Side::Clumped => {
                ctx.expansion(&ctx.parse::<ClumpedForest>(&x)?.map_basis(fertility_clumped))
            }
            _ => return Err("phi takes forests or clumped forests".to_string()),
        },
        Cmd::EmbedAro { x } => {
            ctx.expansion(&j_aro_lin(&ctx.parse(&x)?).map_err(|e| e.to_string())?)
        }
        Cmd::EmbedCl { x } => ctx.expansion(&j_cl_lin(&ctx.parse(&x)?).map_err(|e| e.to_string())?),
        Cmd::EmbedBar { x } => ctx.expansion(&ctx.parse::<AromaticMI>(&x)?.flat_map(j_bar)),
        Cmd::Enumerate { kind, order } => {
            let items: Vec<String> = match (order, ctx.max_order) {
                (Some(n), _) => enumerate(ctx, kind, n),
                (None, Some(m)) => (1..=m).flat_map(|n| enumerate(ctx, kind, n)).collect(),
                (None, None) => return Err("enumerate needs --order or --max-order".to_string()),
            };
            ctx.list(&items)
        }
        Cmd::Antipode { x } => match detect(&x) {
            Side::Forest => ctx.expansion(&antipode_lin(&BckAro, &ctx.parse(&x)?)?),
            Side::Clumped => ctx.expansion(&antipode_lin(&BckCl, &ctx.parse(&x)?)?),
            Side::Monomial => ctx.expansion(&antipode_lin(&LotAro, &ctx.parse(&x)?)?),
            Side::ClumpedMonomial => ctx.expansion(&antipode_lin(&LotCl, &ctx.parse(&x)?)?),
        },
        Cmd::Verify { checks, list } => {
            if list {
                let names: Vec<String> = verify::registry()
                    .iter()
                    .map(|c| format!("{} {} {}", c.name, c.default_degree, c.statement))
                    .collect();
                return Ok(ctx.list(&names));
            }
            let vctx = verify::Context::new(ctx.colors.clone());
            let selected: Vec<verify::Check> = if checks.is_empty() {
                verify::registry()
            } else {
                checks
                    .iter()
                    .map(|n| verify::find(n))
                    .collect::<Result<_, _>>()
                    .map_err(|e| e.to_string())?
            };
            let mut text = String::new();
            let mut ok = true;
            for c in selected {
                let r = c.run(&vctx, ctx.max_order.unwrap_or(c.default_degree));
                ok &= r.passed();
                if ctx.json {
                    text.push_str(&r.to_json_line());
                } else {
                    let status = if r.passed() { "PASS" } else { "FAIL" };
                    text.push_str(&format!(
                        "{status} {} (degree <= {}, {} instances)",
                        r.identity, r.max_degree, r.instances
                    ));
                    if let Some(ce) = &r.counterexample {
                        text.push_str(&format!(
                            "\n  inputs: {}\n  lhs: {}\n  rhs: {}",
                            ce.inputs.join(" ; "),
                            ce.lhs,
                            ce.rhs
                        ));
                    }
                }
                text.push('\n');
            }
            Out { text, ok }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let colors = match cli.colors.as_deref().map(ColorSet::parse).transpose() {
        Ok(c) => c.unwrap_or_default(),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if cli.max_order == Some(0) {
        eprintln!("error: --max-order must be at least 1");
        return ExitCode::from(2);
    }
    let ctx = Ctx {
        colors,
        json: cli.json,
        max_order: cli.max_order,
    };
    let out = match run(&ctx, cli.cmd) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    print!("{}", out.text);
    if let Some(path) = cli.golden {
        let want = match std::fs::read_to_string(&path) {
            Ok(s) => s,
            Err(e) => {
                eprintln!("error: cannot read {}: {e}", path.display());
                return ExitCode::from(2);
            }
        };
        if want != out.text {
            eprintln!("golden mismatch against {}", path.display());
            for (i, (a, b)) in want.lines().zip(out.text.lines()).enumerate() {
                if a != b {
                    eprintln!("  line {}: expected '{a}', got '{b}'", i + 1);
                    break;
                }
            }
            return ExitCode::from(1);
        }
    }
    if out.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
