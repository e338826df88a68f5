use std::path::{Path, PathBuf};
use std::process::ExitCode;

use calissons::api::{self, Request, Response};
use calissons::generate::{random_document, Kind};
use calissons::render::Format;
use calissons::solver::Extremal;
use calissons::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "calissons", version, about = "Solve, check and draw calissons puzzles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Puzzle document (`-` for standard input).
    file: PathBuf,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Advancing,
    BellmanFord,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Svg,
    Ascii,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Region,
    Hexagon,
    Infinite,
}

#[derive(Subcommand)]
enum Command {
    /// Find the highest or lowest solution of a finite puzzle.
    Solve {
        #[command(flatten)]
        io: Common,
        #[arg(long, conflicts_with = "lowest")]
        highest: bool,
        #[arg(long)]
        lowest: bool,
        #[arg(long, value_enum, default_value = "advancing")]
        method: MethodArg,
        /// Include the projected graph in the output.
        #[arg(long)]
        graph: bool,
    },
    /// Decide a puzzle on the whole grid.
    Decide {
        #[command(flatten)]
        io: Common,
    },
    /// Check a tiling against a puzzle.
    Check {
        #[command(flatten)]
        io: Common,
        tiling: PathBuf,
    },
    /// List all solutions.
    Enumerate {
        #[command(flatten)]
        io: Common,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Lowest and highest solutions with their height fields.
    Extremes {
        #[command(flatten)]
        io: Common,
        #[arg(long)]
        graph: bool,
    },
    /// Print the DIMACS encoding.
    EncodeSat {
        #[command(flatten)]
        io: Common,
    },
    /// Draw the puzzle, optionally with a tiling.
    Render {
        #[command(flatten)]
        io: Common,
        tiling: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "svg")]
        format: FormatArg,
    },
    /// Write a random puzzle document.
    Generate {
        #[arg(long, value_enum, default_value = "region")]
        kind: KindArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Triangle budget, hexagon size, or disc radius.
        #[arg(long, default_value_t = 24)]
        size: usize,
        #[arg(long)]
        edges: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the HTTP service.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: String,
    },
}

fn read(path: &Path) -> Result<String, Error> {
    let text = if path == Path::new("-") {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    };
    text.map_err(|e| Error::Parse { message: e.to_string(), location: Some(path.display().to_string()) })
}

fn load(io: &Common) -> Result<Request, Error> {
    Request::from_json(&read(&io.file)?)
}

fn emit(r: &Response, out: Option<&Path>) -> ExitCode {
    let text = r.text();
    if r.status.exit_code() == 2 {
        eprint!("{text}");
    } else if let Some(path) = out {
        if let Err(e) = std::fs::write(path, &text) {
            eprintln!("cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    } else {
        print!("{text}");
    }
    ExitCode::from(r.status.exit_code())
}

fn with_request(io: &Common, f: impl FnOnce(Request) -> Result<Response, Error>) -> ExitCode {
    let r = load(io).and_then(f).unwrap_or_else(|e| Response::error(&e));
    emit(&r, io.out.as_deref())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Solve { io, lowest, method, graph, .. } => with_request(&io, |mut req| {
            req.extremal = if lowest { Extremal::Lowest } else { Extremal::Highest };
            req.method = match method {
                MethodArg::Advancing => api::Method::Advancing,
                MethodArg::BellmanFord => api::Method::BellmanFord,
            };
            req.graph |= graph;
            Ok(api::solve(&req))
        }),
        Command::Decide { io } => with_request(&io, |req| Ok(api::decide(&req))),
        Command::Check { io, tiling } => {
            let tiling = read(&tiling).and_then(|t| api::parse_tiling(&t));
            with_request(&io, |mut req| {
                req.tiling = Some(tiling?);
                Ok(api::check_tiling(&req))
            })
        }
        Command::Enumerate { io, limit } => with_request(&io, |mut req| {
            req.limit = limit.or(req.limit);
            Ok(api::enumerate_tilings(&req))
        }),
        Command::Extremes { io, graph } => with_request(&io, |mut req| {
            req.graph |= graph;
            Ok(api::extremes(&req))
        }),
        Command::EncodeSat { io } => with_request(&io, |req| Ok(api::encode_sat(&req))),
        Command::Render { io, tiling, format } => {
            let tiling = tiling.map(|p| read(&p).and_then(|t| api::parse_tiling(&t))).transpose();
            with_request(&io, |mut req| {
                if let Some(t) = tiling? {
                    req.tiling = Some(t);
                }
                req.format = match format {
                    FormatArg::Svg => Format::Svg,
                    FormatArg::Ascii => Format::Ascii,
                };
                Ok(api::render_picture(&req))
            })
        }
        Command::Generate { kind, seed, size, edges, out } => {
            let kind = match kind {
                KindArg::Region => Kind::Region,
                KindArg::Hexagon => Kind::Hexagon,
                KindArg::Infinite => Kind::Infinite,
            };
            let text = random_document(kind, seed, size, edges).to_json() + "\n";
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, text) {
                        eprintln!("cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::SUCCESS
        }
        Command::Serve { port, host } => {
            let runtime = tokio::runtime::Runtime::new().expect("tokio runtime");
            match runtime.block_on(calissons_cli::serve(&format!("{host}:{port}"))) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("server error: {e}");
                    ExitCode::from(2)
                }
            }
        }
    }
}
