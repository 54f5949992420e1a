//! The `popav` command line.

pub mod output;

use std::collections::{BTreeMap, BTreeSet};
use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::avoidance::{count_av, Family};
use crate::bijections::{verify_all, verify_bijection, Bijection};
use crate::counting::{self, SquareMatrix};
use crate::error::{invalid, Error, Result};
use crate::fib_simples::{self, SimpleClass};
use crate::fixtures;
use crate::perm::{perm, Permutation};
use crate::structures;

pub use output::{CountRow, Format, OutputRecord, Payload};

/// Largest listing `generate` will produce.
pub const GENERATE_LIMIT: u64 = 1_000_000;
/// Above this count `enumerate` skips the structured generator and reports
/// the closed form only.
pub const STRUCTURED_LIMIT: u64 = 1_000_000;

#[derive(Debug, Parser)]
#[command(name = "popav", version, about = "Permutations avoiding partially ordered patterns")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    pub format: Format,

    /// Largest n for which brute force over S_n is allowed.
    #[arg(long, env = "POPAV_MAX_BRUTE_N", default_value_t = 9, global = true)]
    pub max_brute_n: usize,

    /// Directory of reference sequences (`<id>.txt`); defaults to the bundled set.
    #[arg(long, global = true)]
    pub seed_fixtures: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count a family for each n in a range, several ways.
    Enumerate {
        #[arg(long)]
        family: String,
        /// A single n or an inclusive range `a..b`.
        #[arg(long)]
        n: String,
    },
    /// List the members of a family of size n.
    Generate {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        balls: Option<usize>,
    },
    /// Apply a bijection (or its inverse) to one element.
    Map {
        #[arg(long)]
        bijection: String,
        #[arg(long)]
        input: String,
        #[arg(long)]
        inverse: bool,
        #[command(flatten)]
        params: MapParams,
    },
    /// Check bijections exhaustively at length n.
    Verify {
        #[arg(long, required_unless_present = "all", conflicts_with = "all")]
        bijection: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        params: MapParams,
    },
    /// Permanent of a file or built-in matrix.
    Permanent {
        /// A file, or one of `ones:<n>`, `identity:<n>`, `qk:<k>,<n>`, `juggling:<b>,<n>`.
        #[arg(long)]
        matrix: String,
    },
    /// Simple permutations avoiding 2413, 3412 and 3421.
    Simples {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_class)]
        family: Option<SimpleClass>,
        #[arg(long)]
        check_2431: bool,
    },
}

#[derive(Debug, Clone, Copy, Args)]
pub struct MapParams {
    #[arg(long)]
    pub balls: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub j: Option<usize>,
}

fn parse_class(s: &str) -> std::result::Result<SimpleClass, String> {
    match s {
        "A" => Ok(SimpleClass::A),
        "B" => Ok(SimpleClass::B),
        "C" => Ok(SimpleClass::C),
        _ => Err(format!("expected A, B or C, got {s:?}")),
    }
}

/// Parses `a..b` (inclusive) or a single `n`.
pub fn parse_range(s: &str) -> Result<(usize, usize)> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad n range {s:?}")));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => {
            let n = num(s)?;
            (n, n)
        }
    };
    if lo == 0 || lo > hi {
        return invalid(format!("n range {s:?} must satisfy 1 <= a <= b"));
    }
    Ok((lo, hi))
}

/// Runs a parsed command line.
pub fn execute(cli: &Cli) -> Result<OutputRecord> {
    let cap = cli.max_brute_n;
    let mut params = BTreeMap::new();
    params.insert("max_brute_n".to_string(), cap.to_string());
    let mut put = |k: &str, v: String| {
        params.insert(k.to_string(), v);
    };
    match &cli.command {
        Command::Enumerate { family, n } => {
            put("family", family.clone());
            put("n", n.clone());
            let fam: Family = family.parse()?;
            let range = parse_range(n)?;
            let dir = cli.seed_fixtures.clone().unwrap_or_else(fixtures::bundled_dir);
            let result = enumerate(fam, range, cap, &dir)?;
            Ok(OutputRecord::new("enumerate", params, result))
        }
        Command::Generate { family, n, balls } => {
            put("family", family.clone());
            put("n", n.to_string());
            if let Some(b) = balls {
                put("balls", b.to_string());
            }
            let elements = generate(family, *n, *balls, cap)?;
            let result = Payload::Elements { family: family.clone(), n: *n, count: elements.len(), elements };
            Ok(OutputRecord::new("generate", params, result))
        }
        Command::Map { bijection, input, inverse, params: mp } => {
            put("bijection", bijection.clone());
            put("input", input.clone());
            put("inverse", inverse.to_string());
            put_map_params(&mut put, mp);
            let bij = Bijection::from_name(bijection, mp.balls, mp.k, mp.j)?;
            let output = bij.apply(input, *inverse)?;
            let result = Payload::Mapped { bijection: bij.to_string(), inverse: *inverse, input: input.clone(), output };
            Ok(OutputRecord::new("map", params, result))
        }
        Command::Verify { bijection, all, n, params: mp } => {
            put("n", n.to_string());
            put_map_params(&mut put, mp);
            let reports = match bijection {
                Some(name) if !*all => {
                    put("bijection", name.clone());
                    vec![verify_bijection(Bijection::from_name(name, mp.balls, mp.k, mp.j)?, *n, cap)?]
                }
                _ => {
                    put("all", "true".to_string());
                    verify_all(*n, cap)?
                }
            };
            let all_pass = reports.iter().all(|r| r.is_bijection);
            Ok(OutputRecord::new("verify", params, Payload::Reports { reports, all_pass }))
        }
        Command::Permanent { matrix } => {
            put("matrix", matrix.clone());
            let m = load_matrix(matrix)?;
            let value = counting::permanent(&m)?.to_string();
            let result = Payload::Permanent { source: matrix.clone(), order: m.order(), value };
            Ok(OutputRecord::new("permanent", params, result))
        }
        Command::Simples { n, family, check_2431 } => {
            put("n", n.to_string());
            if let Some(c) = family {
                put("family", format!("{c:?}"));
            }
            put("check_2431", check_2431.to_string());
            let result = simples(*n, *family, *check_2431, cap)?;
            Ok(OutputRecord::new("simples", params, result))
        }
    }
}

fn put_map_params(put: &mut impl FnMut(&str, String), mp: &MapParams) {
    for (k, v) in [("balls", mp.balls), ("k", mp.k), ("j", mp.j)] {
        if let Some(v) = v {
            put(k, v.to_string());
        }
    }
}

fn enumerate(fam: Family, (lo, hi): (usize, usize), cap: usize, dir: &std::path::Path) -> Result<Payload> {
    if hi > crate::perm::MAX_LEN {
        return Err(Error::ResourceLimit { what: "enumerate", n: hi, cap: crate::perm::MAX_LEN });
    }
    let seq = match fam.fixture_id() {
        Some(id) => Some(fixtures::load_sequence(dir, id)?),
        None => None,
    };
    let mut rows = Vec::new();
    for n in lo..=hi {
        let closed = count_av(fam, n)?;
        let small = closed.to_u64().is_some_and(|c| c <= STRUCTURED_LIMIT);
        let structured = match small {
            true => fam.structured(n)?.map(|v| v.len().to_string()),
            false => None,
        };
        let brute = match n <= cap {
            true => Some(fam.brute(n, cap)?.len().to_string()),
            false => None,
        };
        let fixture = seq.as_deref().and_then(|s| fixtures::term(s, n)).map(BigUint::to_string);
        let closed_form = Some(closed.to_string());
        let agree = [&structured, &brute, &closed_form, &fixture].into_iter().flatten().collect::<BTreeSet<_>>().len() <= 1;
        rows.push(CountRow { n, structured, brute, closed_form, fixture, agree });
    }
    let all_agree = rows.iter().all(|r| r.agree);
    Ok(Payload::Counts { family: fam.to_string(), rows, all_agree })
}

fn guard(what: &'static str, n: usize, count: &BigUint) -> Result<()> {
    if count.to_u64().is_none_or(|c| c > GENERATE_LIMIT) {
        return invalid(format!("{what} at n = {n} has {count} members, more than the listing limit of {GENERATE_LIMIT}"));
    }
    Ok(())
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(T::to_string).collect()
}

/// Lexicographic listing of a family.
pub fn generate(family: &str, n: usize, balls: Option<usize>, cap: usize) -> Result<Vec<String>> {
    match family {
        "compositions" => {
            guard("compositions", n, &counting::fib(n + 1))?;
            let mut v = structures::gen_compositions(n);
            v.sort();
            Ok(strings(&v))
        }
        "marked" => {
            let count = BigUint::from(n.saturating_sub(1)) * counting::fib(n.saturating_sub(1));
            guard("marked compositions", n, &count)?;
            let mut v = structures::gen_marked_compositions(n);
            v.sort();
            Ok(strings(&v))
        }
        "juggling" => {
            let b = balls.ok_or_else(|| Error::InvalidInput("juggling needs --balls".into()))?;
            guard("juggling sequences", n, &counting::juggling_closed_form(n, b))?;
            let mut v = structures::gen_ground_juggling(n, b)?;
            v.sort();
            Ok(strings(&v))
        }
        "shrub" => {
            if n == 0 {
                return invalid("shrub forests need n >= 1");
            }
            let count = BigUint::from(2u32) * BigUint::from(3u32).pow(n as u32 - 1);
            guard("shrub forests", n, &count)?;
            Ok(strings(&structures::gen_shrub_forests(n)?))
        }
        "simples-fib" => {
            if n > crate::perm::MAX_LEN {
                return Err(Error::ResourceLimit { what: "simples", n, cap: crate::perm::MAX_LEN });
            }
            guard("simple permutations", n, &counting::fib(n.saturating_sub(3)))?;
            Ok(strings(&fib_simples::gen_simple_family(n)?.all()))
        }
        other => {
            let fam: Family = other.parse()?;
            if n == 0 {
                return invalid("n must be at least 1");
            }
            if n > crate::perm::MAX_LEN {
                return Err(Error::ResourceLimit { what: "generate", n, cap: crate::perm::MAX_LEN });
            }
            guard("the class", n, &count_av(fam, n)?)?;
            let mut v = match fam.structured(n)? {
                Some(v) => v,
                None => fam.brute(n, cap)?,
            };
            v.sort();
            Ok(strings(&v))
        }
    }
}

/// Reads a matrix from a file or a built-in spec.
pub fn load_matrix(spec: &str) -> Result<SquareMatrix> {
    let nums = |t: &str| -> Result<Vec<usize>> {
        t.split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad matrix spec {spec:?}"))))
            .collect()
    };
    let two = |t: &str| -> Result<(usize, usize)> {
        match nums(t)?[..] {
            [a, b] => Ok((a, b)),
            _ => Err(Error::Parse(format!("expected two numbers in {spec:?}"))),
        }
    };
    let one = |t: &str| -> Result<usize> {
        match nums(t)?[..] {
            [a] => Ok(a),
            _ => Err(Error::Parse(format!("expected one number in {spec:?}"))),
        }
    };
    if let Some(t) = spec.strip_prefix("ones:") {
        return Ok(SquareMatrix::ones(one(t)?));
    }
    if let Some(t) = spec.strip_prefix("identity:") {
        return Ok(SquareMatrix::identity(one(t)?));
    }
    if let Some(t) = spec.strip_prefix("qk:") {
        let (k, n) = two(t)?;
        return Ok(counting::qk_matrix(k, n)?.matrix().clone());
    }
    if let Some(t) = spec.strip_prefix("juggling:") {
        let (b, n) = two(t)?;
        return Ok(counting::juggling_matrix(b, n)?.matrix().clone());
    }
    let text = std::fs::read_to_string(spec).map_err(|e| Error::Io(format!("{spec}: {e}")))?;
    text.parse()
}

fn simples(n: usize, class: Option<SimpleClass>, check_2431: bool, cap: usize) -> Result<Payload> {
    if n > crate::perm::MAX_LEN {
        return Err(Error::ResourceLimit { what: "simples", n, cap: crate::perm::MAX_LEN });
    }
    guard("simple permutations", n, &counting::fib(n.saturating_sub(3)))?;
    let fam = fib_simples::gen_simple_family(n)?;
    let wanted: Vec<SimpleClass> = match class {
        Some(c) => vec![c],
        None => vec![SimpleClass::A, SimpleClass::B, SimpleClass::C],
    };
    let members: Vec<Permutation> = wanted.iter().flat_map(|&c| fam.get(c).iter().cloned()).collect();
    let classes: BTreeMap<String, Vec<String>> =
        wanted.iter().map(|&c| (format!("{c:?}"), strings(fam.get(c)))).collect();
    let matches_brute = match n <= cap {
        true => {
            let brute = fib_simples::split(n, &fib_simples::brute_simple_avoiders_with_cap(n, cap)?)?;
            Some(wanted.iter().all(|&c| brute.get(c) == fam.get(c)))
        }
        false => None,
    };
    let avoids_2431 = check_2431.then(|| members.iter().all(|p| !p.contains_pattern(&perm("2431"))));
    let all_pass = matches_brute != Some(false) && avoids_2431 != Some(false);
    Ok(Payload::Simples { n, classes, total: members.len(), matches_brute, avoids_2431, all_pass })
}

/// Parses arguments, runs, prints, and returns the process exit code:
/// 0 when every check passes, 1 when a check fails, 2 on errors.
pub fn main_entry<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let record = match execute(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    match record.render(cli.format) {
        Ok(s) => {
            print!("{s}");
            if record.passed() {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> OutputRecord {
        let cli = Cli::try_parse_from(std::iter::once("popav").chain(args.iter().copied())).unwrap();
        execute(&cli).unwrap()
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1..8").unwrap(), (1, 8));
        assert_eq!(parse_range("1..=8").unwrap(), (1, 8));
        assert_eq!(parse_range("5").unwrap(), (5, 5));
        assert!(parse_range("0..3").is_err());
        assert!(parse_range("4..2").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn enumerate_rows() {
        let r = run(&["enumerate", "--family", "lambda", "--n", "1..8"]);
        let Payload::Counts { rows, all_agree, .. } = &r.result else { panic!() };
        assert!(all_agree);
        let got: Vec<&str> = rows.iter().map(|r| r.closed_form.as_deref().unwrap()).collect();
        assert_eq!(got, ["1", "2", "6", "16", "40", "100", "252", "636"]);
        assert!(rows[7].brute.is_some());
    }

    #[test]
    fn generate_examples() {
        assert_eq!(generate("compositions", 3, None, 9).unwrap(), ["1+1+1", "1+2", "2+1"]);
        assert_eq!(generate("simples-fib", 7, None, 9).unwrap().len(), 3);
        assert_eq!(generate("Sfrak", 4, None, 9).unwrap().len(), 12);
        assert!(generate("juggling", 3, None, 9).is_err());
        assert!(generate("Qkj:4,2", 12, None, 9).is_err());
        assert!(generate("lambda", 30, None, 9).is_err());
    }

    #[test]
    fn map_examples() {
        let r = run(&["map", "--bijection", "comp-to-P3", "--input", "2+2"]);
        assert!(matches!(&r.result, Payload::Mapped { output, .. } if output == "2143"));
        let r = run(&["map", "--bijection", "juggling", "--balls", "1", "--input", "3,0,0"]);
        assert!(matches!(&r.result, Payload::Mapped { output, .. } if output == "231"));
    }

    #[test]
    fn matrices() {
        assert_eq!(load_matrix("ones:4").unwrap(), SquareMatrix::ones(4));
        assert_eq!(load_matrix("qk:4,6").unwrap().order(), 6);
        assert!(load_matrix("qk:4").is_err());
        assert!(load_matrix("/nonexistent/matrix.txt").is_err());
    }
}
