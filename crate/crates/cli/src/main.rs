mod envelope;
mod render;

use std::io::Read;
use std::process::ExitCode;

use anyhow::{Context, Result};
use baxter_core::census::verify_all;
use baxter_core::floorplan::{enumerate_pfps, is_alternating, pack, pack_with_trace, partitions, validate_pfp};
use baxter_core::nilp::{enumerate_triples, lgv, lgv_determinant, lgv_inclusion_exclusion, DyckPair, LgvParams};
use baxter_core::perm::{in_b, in_b_via_inverse, is_alternating_up, occurrences, BivincularPattern, Permutation};
use baxter_core::tlt::{brute_force_tlts, enumerate_baxter_tlts, enumerate_tlts, is_almost_complete, is_baxter};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use envelope::{check_size, input_error, Class, Object};

#[derive(Parser)]
#[command(
    name = "baxter",
    version,
    about = "Baxter-enumerated families and the bijections between them"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Accepted for scripting; every command is deterministic.
    #[arg(long, global = true)]
    seedless: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Ascii,
    Svg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountClass {
    Tlt,
    BaxterTlt,
    Pfp,
    Perm,
    PermTwistedInverse,
    Nilp,
    DyckPair,
    AlternatingTlt,
    AlternatingPfp,
    AlternatingPerm,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Oracle,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    Auto,
    Determinant,
    InclusionExclusion,
}

#[derive(Subcommand)]
enum Command {
    /// Print the number of objects of a class and size.
    Count {
        #[arg(long, value_enum)]
        class: CountClass,
        #[arg(long)]
        size: usize,
        #[arg(long, value_enum, default_value_t = Method::Direct)]
        method: Method,
    },
    /// Print every object of a class and size, one envelope per line.
    Gen {
        #[arg(long, value_enum)]
        class: CountClass,
        #[arg(long)]
        size: usize,
    },
    /// Apply the bijection between two classes to an envelope.
    Map {
        #[arg(long, value_enum)]
        from: Class,
        #[arg(long, value_enum)]
        to: Class,
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// Run every cross-family check up to a size; exits 1 on any failure.
    Verify {
        #[arg(long)]
        max_size: usize,
    },
    /// Number of triples in a refined parameter class.
    Lgv {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, value_enum, default_value_t = Route::Auto)]
        route: Route,
    },
    /// Pack a floorplan envelope into its packed representative.
    Pack {
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long)]
        trace: bool,
    },
    /// List occurrences of a pattern such as `2+-1-2` in a permutation.
    Patterns {
        #[arg(long)]
        perm: String,
        #[arg(long)]
        pattern: String,
    },
    /// Draw an envelope as text or SVG.
    Render {
        #[arg(long, default_value = "-")]
        input: String,
    },
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .context("reading standard input")?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| input_error(format!("cannot read {path}: {e}")))
    }
}

/// A stream of envelopes or bare payloads of `class`, one JSON value each.
fn read_objects(path: &str, class: Class) -> Result<Vec<Object>> {
    let text = read_input(path)?;
    let mut out = Vec::new();
    for v in serde_json::Deserializer::from_str(&text).into_iter::<Value>() {
        let v = v.map_err(|e| input_error(format!("input is not JSON: {e}")))?;
        let obj = match (v.get("class"), v.get("payload")) {
            (Some(_), Some(_)) => Object::from_envelope(&v.to_string())?,
            _ => Object::from_payload(class, v)?,
        };
        let c = obj.class();
        if c != class && !(class == Class::Tlt && c == Class::BaxterTlt) {
            return Err(input_error(format!(
                "expected a {} envelope, found {}",
                class.name(),
                c.name()
            )));
        }
        out.push(if class == Class::Tlt {
            obj.map_to(Class::Tlt)?
        } else {
            obj
        });
    }
    if out.is_empty() {
        return Err(input_error("no input objects"));
    }
    Ok(out)
}

fn read_any(path: &str) -> Result<Vec<Object>> {
    let text = read_input(path)?;
    let objs: Result<Vec<Object>> = serde_json::Deserializer::from_str(&text)
        .into_iter::<Value>()
        .map(|v| {
            let v = v.map_err(|e| input_error(format!("input is not JSON: {e}")))?;
            Object::from_envelope(&v.to_string())
        })
        .collect();
    objs
}

fn count(class: CountClass, n: usize, method: Method) -> BigInt {
    let oracle = method == Method::Oracle;
    let pfp_oracle = |keep: &dyn Fn(&baxter_core::floorplan::PackedFloorplan) -> bool| {
        (1..=n)
            .flat_map(|k| {
                partitions(k, n + 1 - k, n, |_, _| true)
                    .into_iter()
                    .map(move |ts| (k, ts))
            })
            .filter_map(|(k, ts)| validate_pfp(k, n + 1 - k, ts).ok())
            .filter(|f| keep(f))
            .count()
    };
    let almost = |t: &baxter_core::tlt::TreeLikeTableau| is_almost_complete(t).unwrap_or(false);
    let perms = |keep: &dyn Fn(&Permutation) -> bool| Permutation::all(n).iter().filter(|s| keep(s)).count();
    let c = match (class, oracle) {
        (CountClass::Tlt, false) => enumerate_tlts(n).len(),
        (CountClass::Tlt, true) => brute_force_tlts(n).len(),
        (CountClass::BaxterTlt, false) => enumerate_baxter_tlts(n).len(),
        (CountClass::BaxterTlt, true) => enumerate_tlts(n).iter().filter(|t| is_baxter(t)).count(),
        (CountClass::Pfp, false) => enumerate_pfps(n).len(),
        (CountClass::Pfp, true) => pfp_oracle(&|_| true),
        (CountClass::Perm | CountClass::PermTwistedInverse, false) => perms(&in_b),
        (CountClass::Perm | CountClass::PermTwistedInverse, true) => perms(&in_b_via_inverse),
        (CountClass::Nilp, false) => return LgvParams::grid(n).map(|lp| lgv(&lp)).sum(),
        (CountClass::Nilp, true) => enumerate_triples(n).len(),
        (CountClass::DyckPair, false) => DyckPair::all(n).len(),
        (CountClass::AlternatingTlt, false) => enumerate_baxter_tlts(n).iter().filter(|t| almost(t)).count(),
        (CountClass::DyckPair | CountClass::AlternatingTlt, true) => {
            enumerate_tlts(n).iter().filter(|t| is_baxter(t) && almost(t)).count()
        }
        (CountClass::AlternatingPfp, false) => enumerate_pfps(n).iter().filter(|f| is_alternating(f)).count(),
        (CountClass::AlternatingPfp, true) => pfp_oracle(&is_alternating),
        (CountClass::AlternatingPerm, false) => perms(&|s| in_b(s) && is_alternating_up(s)),
        (CountClass::AlternatingPerm, true) => perms(&|s| in_b_via_inverse(s) && is_alternating_up(s)),
    };
    BigInt::from(c)
}

fn generate(class: CountClass, n: usize) -> Vec<Object> {
    let almost = |t: &baxter_core::tlt::TreeLikeTableau| is_almost_complete(t).unwrap_or(false);
    let perms = |keep: &dyn Fn(&Permutation) -> bool| {
        Permutation::all(n)
            .into_iter()
            .filter(|s| keep(s))
            .map(Object::Perm)
            .collect::<Vec<_>>()
    };
    match class {
        CountClass::Tlt => enumerate_tlts(n).into_iter().map(Object::Tlt).collect(),
        CountClass::BaxterTlt => enumerate_baxter_tlts(n).into_iter().map(Object::BaxterTlt).collect(),
        CountClass::AlternatingTlt => enumerate_baxter_tlts(n)
            .into_iter()
            .filter(almost)
            .map(Object::BaxterTlt)
            .collect(),
        CountClass::Pfp => enumerate_pfps(n).into_iter().map(Object::Pfp).collect(),
        CountClass::AlternatingPfp => enumerate_pfps(n)
            .into_iter()
            .filter(is_alternating)
            .map(Object::Pfp)
            .collect(),
        CountClass::Perm | CountClass::PermTwistedInverse => perms(&in_b),
        CountClass::AlternatingPerm => perms(&|s| in_b(s) && is_alternating_up(s)),
        CountClass::Nilp => enumerate_triples(n).into_iter().map(Object::Nilp).collect(),
        CountClass::DyckPair => DyckPair::all(n).into_iter().map(Object::DyckPair).collect(),
    }
}

fn show(obj: &Object, format: Format) -> String {
    match format {
        Format::Json => obj.envelope() + "\n",
        Format::Ascii => render::ascii(obj),
        Format::Svg => render::svg(obj),
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let format = cli.format;
    match cli.command {
        Command::Count { class, size, method } => {
            check_size(size)?;
            println!("{}", count(class, size, method));
        }
        Command::Gen { class, size } => {
            check_size(size)?;
            let sep = if format == Format::Json { "" } else { "\n" };
            let parts: Vec<String> = generate(class, size).iter().map(|o| show(o, format)).collect();
            print!("{}", parts.join(sep));
        }
        Command::Map { from, to, input } => {
            for obj in read_objects(&input, from)? {
                print!("{}", show(&obj.map_to(to)?, format));
            }
        }
        Command::Verify { max_size } => {
            check_size(max_size)?;
            let report = verify_all(max_size);
            match format {
                Format::Json => print!("{}", report.to_json_lines()),
                _ => {
                    for c in &report.checks {
                        let tag = if c.experimental { " (experimental)" } else { "" };
                        println!("{:?} {} n={}{tag}", c.status, c.check, c.n);
                    }
                }
            }
            if !report.passed() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Lgv {
            n,
            k,
            r,
            p,
            s,
            q,
            route,
        } => {
            let lp = LgvParams::new(n, k, r, p, s, q).map_err(|e| input_error(e.to_string()))?;
            let v = match route {
                Route::Auto => lgv(&lp),
                Route::Determinant => lgv_determinant(&lp),
                Route::InclusionExclusion => lgv_inclusion_exclusion(&lp),
            };
            println!("{v}");
        }
        Command::Pack { input, trace } => {
            for obj in read_objects(&input, Class::Floorplan)? {
                let Object::Floorplan(f) = obj else { unreachable!() };
                if trace {
                    let t = pack_with_trace(&f).map_err(|e| input_error(e.to_string()))?;
                    let out = json!({
                        "steps": t.steps,
                        "tiles": t.tiles,
                        "result": { "class": "pfp", "payload": Object::Pfp(t.result).payload() },
                    });
                    println!("{out}");
                } else {
                    let p = pack(&f).map_err(|e| input_error(e.to_string()))?;
                    print!("{}", show(&Object::Pfp(p), format));
                }
            }
        }
        Command::Patterns { perm, pattern } => {
            let sigma: Permutation = perm.parse().map_err(|e| input_error(format!("{e}")))?;
            let pat = BivincularPattern::parse(&pattern).map_err(|e| input_error(e.to_string()))?;
            let occ = occurrences(&sigma, &pat);
            match format {
                Format::Json => {
                    let positions: Vec<&Vec<usize>> = occ.iter().map(|o| &o.positions).collect();
                    let values: Vec<Vec<usize>> = occ.iter().map(|o| o.values(&sigma)).collect();
                    let out = json!({
                        "perm": sigma,
                        "pattern": pattern,
                        "count": occ.len(),
                        "occurrences": positions,
                        "values": values,
                    });
                    println!("{out}");
                }
                _ => {
                    println!("{} occurrences of {pattern} in {sigma}", occ.len());
                    for o in &occ {
                        println!("{:?} -> {:?}", o.positions, o.values(&sigma));
                    }
                }
            }
        }
        Command::Render { input } => {
            let parts: Vec<String> = read_any(&input)?
                .iter()
                .map(|obj| match format {
                    Format::Svg => render::svg(obj),
                    Format::Json | Format::Ascii => render::ascii(obj),
                })
                .collect();
            print!("{}", parts.join("\n"));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
