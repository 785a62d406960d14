use std::fmt::Display;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use comprelie::algebra::{self, Algebra};
use comprelie::axioms::{check_laws, Law, Mode as SweepMode};
use comprelie::dual::{
    diamond_cp, diamond_ext, diamond_ucp, psi, psi_inverse, theta, DualCp, DualExt, DualUcp,
};
use comprelie::error::guard;
use comprelie::linear::{bilinear, parse_lincomb, LinComb, Rational, Tensor2};
use comprelie::ptree::{enumerate, Dec, Label, Mode as Shape, PForest};
use comprelie::rigidity::{build_hopf_iso, build_omega, f_a_eigenvalues, ucp_obstruction};
use comprelie::shuffle::{bullet_tvf, DegNeg1, Tvf, Word};
use comprelie::shuffle::{parse_spec_file, SpecFile};
use comprelie::ucp::{
    alphabet, cm_direct, cm_reduced_coproduct, delta_perm, induced_word_prelie, kernel_delta_dims,
    Cp, FMatrix, Hck, Ucp,
};
use comprelie::Error;

const DEFAULT_BOUND: usize = 5;
const ENV_BOUND: &str = "COMPRELIE_MAXDEG";

#[derive(Parser)]
#[command(
    name = "comprelie",
    version,
    about = "Com-PreLie algebras on partitioned trees and words"
)]
struct Cli {
    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Lift the default degree bound. COMPRELIE_MAXDEG still applies when set.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args, Clone, Default)]
struct AlphabetArgs {
    /// Use the alphabet d1..dk.
    #[arg(long, conflicts_with = "alphabet")]
    labels: Option<usize>,
    /// Comma-separated alphabet.
    #[arg(long, value_delimiter = ',')]
    alphabet: Option<Vec<String>>,
}

impl AlphabetArgs {
    fn explicit(&self) -> Option<Vec<Label>> {
        match (&self.labels, &self.alphabet) {
            (Some(k), _) => Some(alphabet(*k)),
            (None, Some(a)) => Some(a.iter().map(|s| Label::new(s.trim())).collect()),
            (None, None) => None,
        }
    }

    fn or(&self, found: Vec<Label>) -> Vec<Label> {
        self.explicit()
            .unwrap_or(if found.is_empty() { alphabet(1) } else { found })
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Ucp,
    Cp,
    Hck,
    Gucp,
    Gcp,
    CpDiamond,
    Tvf,
    Degneg1,
}

#[derive(Args, Clone)]
struct AlgebraArgs {
    #[arg(long, value_enum)]
    algebra: Kind,
    #[command(flatten)]
    alphabet: AlphabetArgs,
    /// Largest counter kept in the bases of ucp and gucp.
    #[arg(long, default_value_t = 1)]
    max_counter: u32,
    /// Structure-constant file for tvf (`f` lines) or degneg1 (`star`/`br` lines).
    #[arg(long)]
    spec: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Prelie,
    Mul,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumMode {
    Partitioned,
    OneRooted,
    Forest,
    Plain,
    PlainForest,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Ucp,
    Cp,
    Ext,
}

#[derive(Subcommand)]
enum Verb {
    /// List the isomorphism classes of trees with n vertices.
    Enum {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "partitioned")]
        mode: EnumMode,
        /// Decorate with counters 0..=c as well as labels.
        #[arg(long, default_value_t = 0)]
        max_counter: u32,
        #[command(flatten)]
        alphabet: AlphabetArgs,
    },
    /// Evaluate a product of two linear combinations.
    Eval {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, value_enum, default_value = "prelie")]
        op: Op,
        x: String,
        y: String,
    },
    /// Coproduct of a linear combination.
    Coprod {
        #[command(flatten)]
        algebra: AlgebraArgs,
        x: String,
    },
    /// Permutative coproduct of a combination of nonempty partitioned trees.
    Delta { x: String },
    /// Dimension of the kernel of the permutative coproduct in one degree.
    Kerdelta {
        #[arg(long)]
        degree: usize,
        #[command(flatten)]
        alphabet: AlphabetArgs,
    },
    /// Reduced coproduct of a word in the Connes-Moscovici subalgebra, or the induced preLie
    /// product of two words.
    Cm {
        u: String,
        v: Option<String>,
        /// Also compute through the tree algebra and fail on disagreement.
        #[arg(long)]
        check: bool,
    },
    /// The dual preLie product of two combinations.
    Diamond {
        #[arg(long, value_enum, default_value = "cp")]
        variant: Variant,
        x: String,
        y: String,
    },
    /// Image under the morphism to trees decorated by pieces.
    Theta { x: String },
    /// The refinement Möbius isomorphism, or its inverse.
    Psi {
        #[arg(long)]
        inverse: bool,
        x: String,
    },
    #[command(subcommand)]
    Rigidity(Rigidity),
    /// Run the law sweeps and print one line per law.
    Check {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, default_value_t = 3)]
        maxdeg: usize,
        /// Restrict to these laws (repeatable).
        #[arg(long)]
        law: Vec<String>,
        /// Sample this many random tuples instead of sweeping the basis.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum Rigidity {
    /// Build ω and F and check them.
    Iso {
        #[arg(long, value_enum, default_value = "hck")]
        algebra: IsoKind,
        #[arg(long, default_value_t = 4)]
        maxdeg: usize,
        #[command(flatten)]
        alphabet: AlphabetArgs,
    },
    /// Search for a degree-2 element with reduced coproduct d (x) e in the partitioned algebra.
    Obstruction {
        #[arg(default_value = "d")]
        d: String,
        #[arg(default_value = "e")]
        e: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum IsoKind {
    Hck,
    Cp,
}

enum Failure {
    Error(Error),
    Io(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

type Out = Result<String, Failure>;

struct Ctx {
    bound: usize,
}

impl Ctx {
    fn from_env(force: bool) -> Result<Self, Failure> {
        let bound = match std::env::var(ENV_BOUND) {
            Ok(s) => s.trim().parse().map_err(|_| {
                Failure::Error(Error::parse(
                    0,
                    format!("{ENV_BOUND}={s:?} is not a number"),
                ))
            })?,
            Err(_) if force => usize::MAX,
            Err(_) => DEFAULT_BOUND,
        };
        Ok(Ctx { bound })
    }

    fn guard(&self, what: &'static str, n: usize) -> Result<(), Error> {
        guard(what, n, self.bound)
    }
}

fn lines<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| format!("{x}\n")).collect()
}

fn forests(s: &str) -> Result<LinComb<PForest>, Error> {
    parse_lincomb(s, |t| t.parse())
}

fn word_lc(s: &str) -> Result<LinComb<Word>, Error> {
    parse_lincomb(s, |t| t.parse())
}

fn forest_labels(xs: &[&str]) -> Result<Vec<Label>, Error> {
    let mut out: Vec<Label> = Vec::new();
    for x in xs {
        for t in forests(x)?.keys() {
            out.extend(t.decorations().into_iter().map(|d| d.label));
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn word_labels(xs: &[&str]) -> Result<Vec<Label>, Error> {
    let mut out: Vec<Label> = Vec::new();
    for x in xs {
        for w in word_lc(x)?.keys() {
            out.extend(w.0.iter().cloned());
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Builds the requested algebra with an alphabet taken from the flags, the structure-constant
/// file or the inputs, and runs `$body` with it bound to `$alg`.
macro_rules! with_algebra {
    ($args:expr, $inputs:expr, |$alg:ident| $body:expr) => {{
        let args: &AlgebraArgs = $args;
        let inputs: &[&str] = $inputs;
        match args.algebra {
            Kind::Tvf | Kind::Degneg1 => {
                let file = match &args.spec {
                    Some(path) => {
                        let text = std::fs::read_to_string(path)
                            .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
                        Some(parse_spec_file(&text, args.alphabet.explicit())?)
                    }
                    None => None,
                };
                if let Kind::Tvf = args.algebra {
                    let f = match file {
                        Some(SpecFile { f: Some(f), .. }) => f,
                        Some(file) => FMatrix::zero(file.labels),
                        None => FMatrix::identity(args.alphabet.or(word_labels(inputs)?)),
                    };
                    let $alg = Tvf::new(f);
                    $body
                } else {
                    let spec = file.and_then(|f| f.degneg1).ok_or_else(|| {
                        Error::Invalid("degneg1 needs --spec with star/br entries".into())
                    })?;
                    let $alg = DegNeg1 { spec };
                    $body
                }
            }
            kind => {
                let labels = args.alphabet.or(forest_labels(inputs)?);
                match kind {
                    Kind::Ucp => {
                        let $alg = Ucp::new(labels, args.max_counter);
                        $body
                    }
                    Kind::Cp => {
                        let $alg = Cp::new(labels);
                        $body
                    }
                    Kind::Hck => {
                        let $alg = Hck::new(labels);
                        $body
                    }
                    Kind::Gucp => {
                        let $alg = DualUcp::new(labels, args.max_counter);
                        $body
                    }
                    Kind::Gcp => {
                        let $alg = DualCp { labels };
                        $body
                    }
                    _ => {
                        let $alg = DualExt { labels };
                        $body
                    }
                }
            }
        }
    }};
}

fn parse_in<A: Algebra>(_: &A, s: &str) -> Result<LinComb<A::B>, Error>
where
    A::B: FromStr<Err = Error>,
{
    parse_lincomb(s, |t| t.parse())
}

fn eval<A: Algebra>(alg: &A, op: Op, x: &str, y: &str) -> Out
where
    A::B: FromStr<Err = Error>,
{
    let (x, y) = (parse_in(alg, x)?, parse_in(alg, y)?);
    let z = match op {
        Op::Prelie => algebra::prelie(alg, &x, &y),
        Op::Mul if alg.has_mul() => algebra::mul(alg, &x, &y),
        Op::Mul => {
            return Err(
                Error::Unsupported(format!("{} has no commutative product", alg.name())).into(),
            )
        }
    };
    Ok(format!("{z}\n"))
}

fn coprod<A: Algebra>(alg: &A, x: &str) -> Out
where
    A::B: FromStr<Err = Error>,
{
    if !alg.has_coproduct() {
        return Err(Error::Unsupported(format!("{} has no coproduct", alg.name())).into());
    }
    let x = parse_in(alg, x)?;
    Ok(format!("{}\n", algebra::coproduct(alg, &x)))
}

fn check<A: Algebra>(alg: &A, laws: &[Law], maxdeg: usize, mode: SweepMode) -> Out {
    let laws: Vec<Law> = if laws.is_empty() {
        Law::all().collect()
    } else {
        laws.to_vec()
    };
    let report = check_laws(alg, &laws, maxdeg, mode);
    if report.passed() {
        Ok(report.to_string())
    } else {
        Err(Failure::Check(report.to_string()))
    }
}

fn matrix_rows<R: Display>(rows: &[R], matrix: &[Vec<Rational>]) -> String {
    rows.iter()
        .zip(matrix)
        .map(|(r, row)| {
            let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            format!("  {r} | {}\n", cells.join(" "))
        })
        .collect()
}

fn verdict(name: &str, c: &Result<(), comprelie::algebra::Counterexample>) -> String {
    match c {
        Ok(()) => format!("{name} PASS\n"),
        Err(w) => format!("{name} FAIL {}\n", w.0),
    }
}

fn rigidity_iso<A: Algebra>(alg: &A, maxdeg: usize) -> Out {
    let omega = build_omega(alg, maxdeg)?;
    let f = build_hopf_iso(&omega)?;
    let mut out = String::new();
    for l in omega.letters() {
        out += &format!("letter {} degree {} = {}\n", l.label, l.degree, l.elem);
    }
    for (label, lambda) in f_a_eigenvalues(&omega) {
        let shown = lambda.map_or("not diagonal".to_string(), |x| x.to_string());
        out += &format!("f_A {label} {shown}\n");
    }
    for n in 1..=maxdeg {
        let basis = alg.basis(n);
        let header: Vec<String> = basis.iter().map(|b| b.to_string()).collect();
        out += &format!(
            "omega degree {n}: rows words, columns {}\n",
            header.join(" ")
        );
        out += &matrix_rows(omega.words(n), &omega.matrix(n));
        let words: Vec<String> = omega.words(n).iter().map(|w| w.to_string()).collect();
        out += &format!("F degree {n}: rows basis, columns {}\n", words.join(" "));
        out += &matrix_rows(&basis, &f.matrix(n));
    }
    let checks = [
        ("omega isomorphism", omega.check_isomorphism()),
        ("omega coalgebra", omega.check_coalgebra()),
        ("F multiplicative", f.check_multiplicative()),
        ("F coalgebra", f.check_coalgebra()),
        ("F projection", f.check_projection()),
    ];
    for (name, c) in &checks {
        out += &verdict(name, c);
    }
    if checks.iter().all(|(_, c)| c.is_ok()) {
        Ok(out)
    } else {
        Err(Failure::Check(out))
    }
}

fn tensor_map(
    x: &LinComb<PForest>,
    f: impl Fn(&PForest) -> Result<Tensor2<PForest, PForest>, Error>,
) -> Result<Tensor2<PForest, PForest>, Error> {
    let mut out = LinComb::zero();
    for (t, c) in x.iter() {
        out.add_scaled(&f(t)?, c);
    }
    Ok(out)
}

fn run(cli: Cli) -> Out {
    let ctx = Ctx::from_env(cli.force)?;
    match cli.verb {
        Verb::Enum {
            n,
            mode,
            max_counter,
            alphabet,
        } => {
            ctx.guard("n", n)?;
            let labels = alphabet.or(Vec::new());
            let decs: Vec<Dec> = (0..=max_counter)
                .flat_map(|k| labels.iter().map(move |l| Dec::new(l.as_str(), k)))
                .collect();
            let shape = match mode {
                EnumMode::Partitioned => Shape::Partitioned,
                EnumMode::OneRooted => Shape::OneRooted,
                EnumMode::Forest => Shape::Forest,
                EnumMode::Plain => Shape::Plain,
                EnumMode::PlainForest => Shape::PlainForest,
            };
            Ok(lines(enumerate(n, &decs, shape)))
        }
        Verb::Eval { algebra, op, x, y } => {
            with_algebra!(&algebra, &[x.as_str(), y.as_str()], |alg| eval(
                &alg, op, &x, &y
            ))
        }
        Verb::Coprod { algebra, x } => {
            with_algebra!(&algebra, &[x.as_str()], |alg| coprod(&alg, &x))
        }
        Verb::Delta { x } => {
            let x = forests(&x)?;
            Ok(format!("{}\n", tensor_map(&x, delta_perm)?))
        }
        Verb::Kerdelta { degree, alphabet } => {
            let k = alphabet.or(Vec::new()).len();
            Ok(format!("{}\n", kernel_delta_dims(degree, k, ctx.bound)?))
        }
        Verb::Cm { u, v, check } => {
            let labels = word_labels(&[u.as_str(), v.as_deref().unwrap_or("eps")])?;
            let h = Hck::new(labels.clone());
            let u: Word = u.parse()?;
            match v {
                None => {
                    let got = cm_reduced_coproduct(&u);
                    if check && got != cm_direct(&h, &u) {
                        return Err(Failure::Check(format!(
                            "{got}\ndisagrees with {}\n",
                            cm_direct(&h, &u)
                        )));
                    }
                    Ok(format!("{got}\n"))
                }
                Some(v) => {
                    let v: Word = v.parse()?;
                    let got = induced_word_prelie(&h, &u, &v);
                    let expected = bullet_tvf(&FMatrix::identity(labels), &u, &v);
                    if check && got != expected {
                        return Err(Failure::Check(format!(
                            "{got}\ndisagrees with {expected}\n"
                        )));
                    }
                    Ok(format!("{got}\n"))
                }
            }
        }
        Verb::Diamond { variant, x, y } => {
            let (x, y) = (forests(&x)?, forests(&y)?);
            let op = match variant {
                Variant::Ucp => diamond_ucp,
                Variant::Cp => diamond_cp,
                Variant::Ext => diamond_ext,
            };
            Ok(format!("{}\n", bilinear(&x, &y, op)))
        }
        Verb::Theta { x } => Ok(format!("{}\n", theta(&forests(&x)?))),
        Verb::Psi { inverse, x } => {
            let x = forests(&x)?;
            Ok(format!(
                "{}\n",
                if inverse { psi_inverse(&x) } else { psi(&x) }
            ))
        }
        Verb::Rigidity(Rigidity::Iso {
            algebra,
            maxdeg,
            alphabet,
        }) => {
            ctx.guard("maxdeg", maxdeg)?;
            let labels = alphabet.or(Vec::new());
            match algebra {
                IsoKind::Hck => rigidity_iso(&Hck::new(labels), maxdeg),
                IsoKind::Cp => rigidity_iso(&Cp::new(labels), maxdeg),
            }
        }
        Verb::Rigidity(Rigidity::Obstruction { d, e }) => match ucp_obstruction(&d, &e) {
            None => Ok(format!(
                "no degree-2 element has reduced coproduct {d} (x) {e}\n"
            )),
            Some(x) => Err(Failure::Check(format!("solution: {x}\n"))),
        },
        Verb::Check {
            algebra,
            maxdeg,
            law,
            samples,
            seed,
        } => {
            ctx.guard("maxdeg", maxdeg)?;
            let laws = law
                .iter()
                .map(|l| l.parse())
                .collect::<Result<Vec<Law>, Error>>()?;
            let mode = match samples {
                Some(samples) => SweepMode::Sampled { samples, seed },
                None => SweepMode::Exhaustive,
            };
            with_algebra!(&algebra, &[], |alg| check(&alg, &laws, maxdeg, mode))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Check(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Error(e @ Error::Resource { .. })) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
