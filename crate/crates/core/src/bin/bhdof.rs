use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use backhaul_dof::channel::{derive_seed, ChannelRealization};
use backhaul_dof::dof::{converse_enumerate, tradeoff_bounds, TradeoffCurve};
use backhaul_dof::format::fmt_num;
use backhaul_dof::graph::{
    check_ehc_dual, check_feasibility, max_pis_global, FeasibilityMode, DEFAULT_EPSILON,
};
use backhaul_dof::io::{load_backhaul, load_topology};
use backhaul_dof::rank::{check_condition_b, check_condition_c, DEFAULT_TRIALS};
use backhaul_dof::sim::{fit_slope, scheme_rates, Scheme, DEFAULT_POWER_GRID};
use backhaul_dof::Error;

const EXIT_NEGATIVE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BREACH: u8 = 3;

#[derive(Parser)]
#[command(
    name = "bhdof",
    version,
    about = "DoF and backhaul-load analysis for MIMO interference channels"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Extended Hall Condition of a topology.
    CheckEhc {
        #[arg(long)]
        topology: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Print the DoF trade-off curve as CSV.
    Tradeoff {
        #[arg(long = "K")]
        k: usize,
        #[arg(long = "M")]
        m: usize,
        #[arg(long)]
        alpha_max: f64,
        #[arg(long, default_value_t = 21)]
        steps: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Decide whether a backhaul graph supports a centralized scheme.
    Feasibility {
        #[arg(long)]
        backhaul: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Finite)]
        mode: Mode,
        #[arg(long, default_value_t = DEFAULT_EPSILON)]
        epsilon: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Simulate a centralized scheme and print rates as CSV.
    Simulate {
        #[arg(long)]
        topology: PathBuf,
        #[arg(long, value_enum, default_value_t = SchemeArg::Zf)]
        scheme: SchemeArg,
        #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_POWER_GRID)]
        grid: Vec<f64>,
        /// Channel draws averaged per grid point.
        #[arg(long, default_value_t = 1)]
        trials: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Evaluate the three equivalent forms of the optimality condition.
    VerifyConditions {
        #[arg(long)]
        topology: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Converse bound for a given backhaul graph.
    PartitionConverse {
        #[arg(long)]
        topology: PathBuf,
        #[arg(long)]
        backhaul: PathBuf,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Finite,
    Asymptotic,
}

#[derive(Clone, Copy, ValueEnum)]
enum SchemeArg {
    Zf,
    Qf,
}

fn verdict(b: bool) -> &'static str {
    if b {
        "HOLDS"
    } else {
        "FAILS"
    }
}

fn exit_for(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_NEGATIVE)
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::CheckEhc { topology, common } => {
            let topo = load_topology(&topology)?;
            let pis = max_pis_global(&topo);
            let holds = pis.size <= topo.k().div_ceil(2);
            let witness: Vec<String> = pis.members.iter().map(ToString::to_string).collect();
            println!("# seed={}", common.seed);
            println!("EHC: {}", verdict(holds));
            println!("max PIS size: {}", pis.size);
            println!("witness: {{{}}}", witness.join(", "));
            Ok(exit_for(holds))
        }
        Command::Tradeoff {
            k,
            m,
            alpha_max,
            steps,
            common,
        } => {
            let curve = TradeoffCurve::sample(k, m, alpha_max, steps)?;
            eprintln!("# seed={}", common.seed);
            println!("alpha,dof_lower,dof_upper");
            for p in &curve.points {
                println!(
                    "{},{},{}",
                    fmt_num(p.alpha),
                    fmt_num(p.dof_lower),
                    fmt_num(p.dof_upper)
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Feasibility {
            backhaul,
            mode,
            epsilon,
            common,
        } => {
            let bh = load_backhaul(&backhaul)?;
            let mode = match mode {
                Mode::Finite => FeasibilityMode::Finite,
                Mode::Asymptotic => FeasibilityMode::Asymptotic,
            };
            let v = check_feasibility(&bh, mode, epsilon)?;
            println!("# seed={}", common.seed);
            match v.witness {
                Some(w) => println!("FEASIBLE witness={w}"),
                None => println!("INFEASIBLE max_degree={}", v.max_degree),
            }
            Ok(exit_for(v.feasible))
        }
        Command::Simulate {
            topology,
            scheme,
            grid,
            trials,
            common,
        } => {
            if trials == 0 {
                return Err(Error::InvalidParameter("trials must be at least 1".into()));
            }
            let topo = load_topology(&topology)?;
            let scheme = match scheme {
                SchemeArg::Zf => Scheme::ZfCentralized,
                SchemeArg::Qf => Scheme::QuantizeForward,
            };
            let k = topo.k();
            let channels: Vec<_> = (0..trials)
                .map(|t| ChannelRealization::sample(&topo, derive_seed(common.seed, t as u64)))
                .collect();
            let mut rows = Vec::with_capacity(grid.len());
            for &p in &grid {
                let mut mean = vec![0.0; k];
                for ch in &channels {
                    for (acc, r) in mean.iter_mut().zip(scheme_rates(scheme, ch, p)?) {
                        *acc += r / trials as f64;
                    }
                }
                rows.push(mean);
            }
            let per_user: Vec<f64> = rows
                .iter()
                .map(|r| r.iter().sum::<f64>() / k as f64)
                .collect();
            let slope = fit_slope(&grid, &per_user)?.slope;
            eprintln!("# seed={}", common.seed);
            let header: Vec<String> = (0..k).map(|u| format!("rate_user_{u}")).collect();
            println!("P,{},slope_fit", header.join(","));
            for (p, r) in grid.iter().zip(&rows) {
                let cells: Vec<String> = r.iter().map(|&x| fmt_num(x)).collect();
                println!("{},{},{}", fmt_num(*p), cells.join(","), fmt_num(slope));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyConditions {
            topology,
            trials,
            common,
        } => {
            let topo = load_topology(&topology)?;
            let a = max_pis_global(&topo).size <= topo.k().div_ceil(2);
            let dual = check_ehc_dual(&topo)?;
            let b = check_condition_b(&topo, trials, common.seed)?;
            let c = check_condition_c(&topo, trials, common.seed)?;
            let violations = b.violations.len() + c.violations.len();
            let agree = a == dual && a == b.holds && a == c.holds && violations == 0;
            println!("# seed={}", common.seed);
            println!(
                "a={} b={} c={} {}",
                verdict(a),
                verdict(b.holds),
                verdict(c.holds),
                if agree { "CONSISTENT" } else { "INCONSISTENT" }
            );
            println!(
                "spot checks: {} violations: {violations}",
                b.spot_checks + c.spot_checks
            );
            if !agree {
                return Ok(ExitCode::from(EXIT_BREACH));
            }
            Ok(exit_for(a))
        }
        Command::PartitionConverse {
            topology,
            backhaul,
            common,
        } => {
            let topo = load_topology(&topology)?;
            let bh = load_backhaul(&backhaul)?;
            let (k, m) = (topo.k(), topo.m());
            let upper = converse_enumerate(k, m, &bh)?;
            let alpha = bh.per_user_load();
            let (lower, closed_upper) = tradeoff_bounds(k, m, alpha)?;
            println!("# seed={}", common.seed);
            println!("K={k} M={m} alpha={}", fmt_num(alpha));
            println!("converse_dof={}", fmt_num(upper));
            println!(
                "closed_form_lower={} closed_form_upper={}",
                fmt_num(lower),
                fmt_num(closed_upper)
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
