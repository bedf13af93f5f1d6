//! The `maxplus` command line.
//!
//! Text output is a sequence of blank-line separated blocks. Descriptive lines
//! start with `# `, so every block is either pure commentary or a matrix in
//! the library's text format. `--json` replaces it with one JSON document.
//! Exit codes: 0 success or positive decision, 1 negative decision, 2 error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand};
use maxplus::applications::{
    commute_symmetric, geneig_check_lambda, geneig_necessary, geneig_reduce, geneig_trivial_checks,
    expand_support, Verdict,
};
use maxplus::congruence::{
    canonical_m_form, congruent, d_system_solve, pseudo_diagonal_entries, pseudo_diagonalize,
};
use maxplus::io::parse_matrix;
use maxplus::maxlinear::{onesided_solve, twosided_solve, twosided_solve_with_supports, Polytrope, WinSequence};
use maxplus::minors::{pairs, plucker_check, psi};
use maxplus::monoid::{sol_check, sol_enumerate_diagonal, sol_family_membership, SolFamily};
use maxplus::regularity::{frobenius_normal_form, ranks};
use maxplus::scalar::{format_rational, parse_rational};
use maxplus::skewsym::{skew_block_form, skew_canonicalize, split};
use maxplus::{GenPerm, Matrix, Rational, Scalar};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "maxplus", version, about = "Exact max-plus linear algebra")]
struct Cli {
    /// Print one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct DiagonalArg {
    /// Diagonal of the pseudo-diagonal form, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    d: Option<Vec<String>>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Pseudo-diagonal form `PᵗAP = D_A` of a finite symmetric matrix.
    Canon {
        a: PathBuf,
        #[command(flatten)]
        d: DiagonalArg,
    },
    /// The zero-diagonal form `M_A`.
    Mform { a: PathBuf },
    /// Decide congruence of two finite symmetric matrices.
    Congruent { a: PathBuf, b: PathBuf },
    /// Pseudo-minor table.
    Psi {
        a: PathBuf,
        /// Also check the three-term relations.
        #[arg(long)]
        check_plucker: bool,
    },
    /// Split a square matrix into symmetric and skew-symmetric parts.
    Split { a: PathBuf },
    /// Cyclic canonical form of an invertible skew-symmetric matrix.
    SkewCanon { a: PathBuf },
    /// Block canonical form of a skew-symmetric matrix.
    SkewBlocks { a: PathBuf },
    /// One-sided system `A ⊗ x = b`.
    Solve1 { a: PathBuf, b: PathBuf },
    /// Two-sided system `B ⊗ x = C ⊗ x`.
    Solve2 {
        b: PathBuf,
        c: PathBuf,
        /// Include solutions with ε entries, grouped by support.
        #[arg(long)]
        supports: bool,
    },
    /// Symmetric matrices commuting with a pseudo-diagonalisable `A`.
    Commute {
        a: PathBuf,
        #[command(flatten)]
        d: DiagonalArg,
    },
    /// Generalised eigenproblem `A ⊗ x = λ ⊗ B ⊗ x`.
    #[command(group(ArgGroup::new("mode").required(true).args(["lambda", "check_necessary", "trivial"])))]
    Geneig {
        a: PathBuf,
        b: PathBuf,
        /// Solve for a fixed λ.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// Test the necessary condition on the pseudo-diagonal reduction.
        #[arg(long)]
        check_necessary: bool,
        /// Structural certificates only.
        #[arg(long)]
        trivial: bool,
    },
    /// Tropical and determinantal ranks.
    Rank { a: PathBuf },
    /// Frobenius normal form.
    Fnf { a: PathBuf },
    /// The congruence stabiliser `Sol_A = {X : XᵗAX = A}`.
    #[command(group(ArgGroup::new("mode").required(true).args(["check", "enumerate_diagonal"])))]
    Sol {
        a: PathBuf,
        /// Test membership of this matrix.
        #[arg(long)]
        check: Option<PathBuf>,
        /// List the generalised permutations in `Sol_A`.
        #[arg(long)]
        enumerate_diagonal: bool,
    },
}

struct Report {
    text: Vec<String>,
    json: Value,
    code: i32,
}

impl Report {
    fn new(json: Value) -> Self {
        Report {
            text: Vec::new(),
            json,
            code: 0,
        }
    }

    fn negative(mut self) -> Self {
        self.code = 1;
        self
    }

    fn decided(mut self, yes: bool) -> Self {
        self.code = if yes { 0 } else { 1 };
        self
    }

    fn note(mut self, line: impl AsRef<str>) -> Self {
        self.text.push(comment(line.as_ref()));
        self
    }

    fn matrix(mut self, label: impl AsRef<str>, m: &Matrix) -> Self {
        self.text.push(format!("{}{m}", comment(label.as_ref())));
        self
    }
}

fn comment(text: &str) -> String {
    text.lines().map(|l| format!("# {l}\n")).collect()
}

#[derive(Debug)]
struct Failure(String);

impl From<maxplus::Error> for Failure {
    fn from(e: maxplus::Error) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<Report, Failure>;

fn load(path: &Path) -> Result<Matrix, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    parse_matrix(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn load_vector(path: &Path) -> Result<Vec<Scalar>, Failure> {
    let m = load(path)?;
    match m.shape() {
        (_, 1) => Ok(m.vec()),
        (1, _) => Ok(m.row(0).to_vec()),
        (r, c) => Err(Failure(format!("{}: expected a vector, found a {r}x{c} matrix", path.display()))),
    }
}

fn parse_diagonal(d: &DiagonalArg) -> Result<Option<Vec<Rational>>, Failure> {
    d.d.as_ref()
        .map(|vals| {
            vals.iter()
                .map(|v| parse_rational(v).map_err(|e| Failure(format!("--d: {e}"))))
                .collect()
        })
        .transpose()
}

fn scalar_json(v: &Scalar) -> Value {
    Value::String(v.to_string())
}

fn rational_json(v: &Rational) -> Value {
    Value::String(format_rational(v))
}

fn rationals_json(v: &[Rational]) -> Value {
    v.iter().map(rational_json).collect()
}

fn matrix_json(m: &Matrix) -> Value {
    let rows: Vec<Value> = (0..m.rows()).map(|i| m.row(i).iter().map(scalar_json).collect()).collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": rows })
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i + 1).collect()
}

fn genperm_json(p: &GenPerm) -> Value {
    json!({ "sigma": one_based(p.sigma()), "weights": rationals_json(p.weights()), "matrix": matrix_json(&p.dense()) })
}

fn column(v: &[Scalar]) -> Matrix {
    Matrix::from_rows(v.iter().map(|x| vec![x.clone()]).collect()).expect("rows of equal length")
}

fn fin_column(v: &[Rational]) -> Matrix {
    column(&v.iter().cloned().map(Scalar::Fin).collect::<Vec<_>>())
}

fn list(v: &[usize]) -> String {
    v.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(" ")
}

/// Variable names `x1, x2, …` for a plain system.
fn plain_names(n: usize) -> Vec<String> {
    (1..=n).map(|j| format!("x{j}")).collect()
}

/// Variable `j * n + i` is the entry `X_ij`.
fn entry_names(n: usize) -> Vec<String> {
    (0..n * n).map(|u| format!("x{}{}", u % n + 1, u / n + 1)).collect()
}

fn family_json(p: &Polytrope, names: &[String]) -> Value {
    let side = |cs: Vec<(usize, usize, Rational)>| -> Value {
        cs.iter()
            .map(|(j, k, c)| json!({ "lhs": names[*j], "rhs": names[*k], "c": rational_json(c) }))
            .collect()
    };
    json!({ "equalities": side(p.equalities()), "upper_bounds": side(p.upper_bounds()) })
}

fn family_text(p: &Polytrope, names: &[String]) -> Vec<String> {
    let eq = p.equalities();
    let ub = p.upper_bounds();
    if eq.is_empty() && ub.is_empty() {
        return vec!["no constraints".into()];
    }
    let line = |(j, k, c): &(usize, usize, Rational), rel| format!("{} - {} {rel} {}", names[*j], names[*k], format_rational(c));
    eq.iter().map(|c| line(c, "=")).chain(ub.iter().map(|c| line(c, "<="))).collect()
}

fn sequence_json(s: &WinSequence) -> Value {
    s.pairs
        .iter()
        .map(|p| p.map_or(Value::Null, |(a, b)| json!([a + 1, b + 1])))
        .collect()
}

fn sequence_text(s: &WinSequence) -> String {
    s.pairs
        .iter()
        .map(|p| p.map_or("-".to_string(), |(a, b)| format!("({},{})", a + 1, b + 1)))
        .collect::<Vec<_>>()
        .join(" ")
}

fn canon(a: &Matrix, d: Option<Vec<Rational>>) -> Outcome {
    let Some(solution) = d_system_solve(a)? else {
        return Ok(Report::new(json!({ "feasible": false })).note("infeasible").negative());
    };
    let d = match d {
        Some(d) if !solution.contains(&d) => {
            return Err(Failure("--d does not solve the diagonal system of A".into()));
        }
        Some(d) => d,
        None => solution.particular,
    };
    let (p, dm) = pseudo_diagonalize(a, &d)?;
    Ok(Report::new(json!({ "feasible": true, "d": rationals_json(&d), "p": genperm_json(&p), "d_a": matrix_json(&dm) }))
        .matrix(format!("P: {p}"), &p.dense())
        .matrix("D_A = PᵗAP", &dm))
}

fn mform(a: &Matrix) -> Outcome {
    if d_system_solve(a)?.is_none() {
        return Ok(Report::new(json!({ "feasible": false })).note("infeasible").negative());
    }
    let f = canonical_m_form(a)?;
    Ok(Report::new(json!({
        "feasible": true,
        "m_a": matrix_json(&f.m),
        "from_a": genperm_json(&f.from_a),
        "d": rationals_json(&f.d),
        "to_d": genperm_json(&f.to_d),
    }))
    .matrix("M_A = RᵗAR", &f.m)
    .matrix(format!("R: {}", f.from_a), &f.from_a.dense())
    .matrix(format!("Q: {}", f.to_d), &f.to_d.dense()))
}

fn congruence(a: &Matrix, b: &Matrix) -> Outcome {
    Ok(match congruent(a, b)? {
        Some(p) => Report::new(json!({ "congruent": true, "witness": genperm_json(&p) }))
            .note("congruent")
            .matrix(format!("P: {p}"), &p.dense()),
        None => Report::new(json!({ "congruent": false })).note("not congruent").negative(),
    })
}

fn minor_table(a: &Matrix, check: bool) -> Outcome {
    let t = psi(a)?;
    let labels: Vec<String> = pairs(t.n()).iter().map(|(i, j)| format!("({},{})", i + 1, j + 1)).collect();
    let rows: Vec<Vec<Scalar>> = t.to_rows().into_iter().map(|r| r.into_iter().map(Scalar::Fin).collect()).collect();
    let table = Matrix::from_rows(rows)?;
    let mut json = json!({ "n": t.n(), "pairs": pairs(t.n()).iter().map(|(i, j)| [i + 1, j + 1]).collect::<Vec<_>>(), "table": matrix_json(&table) });
    let mut report = Report::new(Value::Null).matrix(format!("pairs: {}", labels.join(" ")), &table);
    if check {
        let holds = plucker_check(&t);
        json["relations_hold"] = Value::Bool(holds);
        report = report.note(if holds { "relations hold" } else { "relations fail" }).decided(holds);
    }
    report.json = json;
    Ok(report)
}

fn split_cmd(a: &Matrix) -> Outcome {
    let sp = split(a)?;
    Ok(Report::new(json!({ "s": matrix_json(&sp.s), "u": matrix_json(&sp.u), "unique": sp.unique }))
        .matrix("S", &sp.s)
        .matrix("U", &sp.u)
        .note(format!("unique: {}", sp.unique)))
}

fn skew_canon(a: &Matrix) -> Outcome {
    Ok(match skew_canonicalize(a)? {
        Some(f) => Report::new(json!({
            "solvable": true,
            "p": genperm_json(&f.p),
            "tau": one_based(&f.tau),
            "c": matrix_json(&f.c),
        }))
        .matrix(format!("P: {}", f.p), &f.p.dense())
        .note(format!("tau: {}", list(&f.tau)))
        .matrix("C = PᵗAP", &f.c),
        None => Report::new(json!({ "solvable": false })).note("no canonical form").negative(),
    })
}

fn skew_blocks(a: &Matrix) -> Outcome {
    Ok(match skew_block_form(a)? {
        Some(f) => {
            let blocks: Vec<Vec<usize>> = f.blocks.iter().map(|b| one_based(b)).collect();
            let shown: Vec<String> = f.blocks.iter().map(|b| format!("{{{}}}", list(b))).collect();
            Report::new(json!({ "solvable": true, "p": genperm_json(&f.p), "blocks": blocks, "form": matrix_json(&f.form) }))
                .matrix(format!("P: {}", f.p), &f.p.dense())
                .note(format!("blocks: {}", shown.join(" ")))
                .matrix("PᵗAP", &f.form)
        }
        None => Report::new(json!({ "solvable": false })).note("no canonical form").negative(),
    })
}

fn solve1(a: &Matrix, b: &[Scalar]) -> Outcome {
    let s = onesided_solve(a, b)?;
    let n_sets: Vec<Vec<usize>> = s.n_sets.iter().map(|v| one_based(v)).collect();
    let mut report = Report::new(json!({ "solvable": s.solvable, "x_bar": rationals_json(&s.x_bar), "n_sets": n_sets }))
        .note(if s.solvable { "solvable" } else { "not solvable" })
        .matrix("principal solution x̄", &fin_column(&s.x_bar));
    let sets: Vec<String> = s.n_sets.iter().enumerate().map(|(j, v)| format!("N{} = {{{}}}", j + 1, list(v))).collect();
    report = report.note(sets.join("\n"));
    Ok(report.decided(s.solvable))
}

fn solve2(b: &Matrix, c: &Matrix, supports: bool) -> Outcome {
    let names = plain_names(b.cols());
    let mut report = Report::new(Value::Null);
    let mut families = Vec::new();
    if supports {
        for (k, f) in twosided_solve_with_supports(b, c)?.iter().enumerate() {
            let sub: Vec<String> = f.support.iter().map(|&j| names[j].clone()).collect();
            let mut fam = family_json(&f.family, &sub);
            fam["support"] = json!(one_based(&f.support));
            families.push(fam);
            let mut lines = vec![format!("family {} on support {{{}}}", k + 1, list(&f.support))];
            lines.extend(family_text(&f.family, &sub));
            let sample = expand_support(b.cols(), f, f.family.sample_point().expect("families are non-empty"));
            report = report.matrix(lines.join("\n"), &column(&sample));
        }
    } else {
        for (k, p) in twosided_solve(b, c)?.iter().enumerate() {
            families.push(family_json(p, &names));
            let mut lines = vec![format!("family {}", k + 1)];
            lines.extend(family_text(p, &names));
            report = report.matrix(lines.join("\n"), &fin_column(&p.sample_point().expect("families are non-empty")));
        }
    }
    let found = !families.is_empty();
    report.json = json!({ "families": families });
    if !found {
        report = report.note("no solutions");
    }
    Ok(report.decided(found))
}

fn commute(a: &Matrix, d: Option<Vec<Rational>>) -> Outcome {
    let n = a.rows();
    let names = entry_names(n);
    let mut report = Report::new(Value::Null);
    let mut families = Vec::new();
    for (k, f) in commute_symmetric(a, d.as_deref())?.iter().enumerate() {
        let sample = f.sample().expect("families are non-empty");
        let mut fam = family_json(&f.constraints, &names);
        fam["provenance"] = sequence_json(&f.provenance);
        fam["sample"] = matrix_json(&sample);
        families.push(fam);
        let mut lines = vec![format!("family {} from {}", k + 1, sequence_text(&f.provenance))];
        lines.extend(family_text(&f.constraints, &names));
        report = report.matrix(lines.join("\n"), &sample);
    }
    report.json = json!({ "variables": names, "families": families });
    Ok(report)
}

fn geneig(a: &Matrix, b: &Matrix, lambda: Option<String>, necessary: bool) -> Outcome {
    let n = a.rows();
    if let Some(text) = lambda {
        let lambda: Scalar = text.parse().map_err(|e| Failure(format!("--lambda: {e}")))?;
        let names = plain_names(n);
        let mut report = Report::new(Value::Null);
        let mut families = Vec::new();
        for (k, f) in geneig_check_lambda(a, b, &lambda)?.iter().enumerate() {
            let sub: Vec<String> = f.support.iter().map(|&j| names[j].clone()).collect();
            let mut fam = family_json(&f.family, &sub);
            fam["support"] = json!(one_based(&f.support));
            families.push(fam);
            let mut lines = vec![format!("family {} on support {{{}}}", k + 1, list(&f.support))];
            lines.extend(family_text(&f.family, &sub));
            let x = expand_support(n, f, f.family.sample_point().expect("families are non-empty"));
            report = report.matrix(lines.join("\n"), &column(&x));
        }
        let found = !families.is_empty();
        report.json = json!({ "lambda": scalar_json(&lambda), "families": families });
        if !found {
            report = report.note(format!("no solutions for lambda = {lambda}"));
        }
        return Ok(report.decided(found));
    }
    if necessary {
        let (d, b_bar) = match pseudo_diagonal_entries(a) {
            Some(_) => (a.clone(), b.clone()),
            None => {
                let red = geneig_reduce(a, b, None)?;
                (red.d, red.b_bar)
            }
        };
        // λ absorbs a common shift of the diagonal
        let top = pseudo_diagonal_entries(&d).expect("pseudo-diagonal").into_iter().max().expect("non-empty");
        let d = Matrix::from_fn(n, n, |i, j| if i == j { d.get(i, i).shift(&-&top) } else { d.get(i, j).clone() });
        let holds = geneig_necessary(&d, &b_bar)?;
        return Ok(Report::new(json!({ "necessary_condition": holds, "d": matrix_json(&d), "b": matrix_json(&b_bar) }))
            .note(if holds { "necessary condition holds" } else { "necessary condition violated" })
            .matrix("D", &d)
            .matrix("B", &b_bar)
            .decided(holds));
    }
    let r = geneig_trivial_checks(a, b)?;
    let mut report = Report::new(json!({
        "verdict": r.verdict.to_string(),
        "lambda": r.lambda.as_ref().map(scalar_json),
        "x": r.x.as_ref().map(|x| x.iter().map(scalar_json).collect::<Vec<_>>()),
        "transposed": r.transposed,
    }))
    .note(format!("verdict: {}", r.verdict));
    if let (Some(lambda), Some(x)) = (&r.lambda, &r.x) {
        let system = if r.transposed { "transposed system" } else { "system" };
        report = report.matrix(format!("{system} solved by lambda = {lambda} and x"), &column(x));
    }
    let negative = matches!(r.verdict, Verdict::UnsolvableCertified | Verdict::NecessaryConditionViolated);
    Ok(report.decided(!negative))
}

fn rank(a: &Matrix) -> Outcome {
    let r = ranks(a)?;
    Ok(Report::new(json!({
        "tropical_rank": r.tropical_rank,
        "det_rank": r.det_rank,
        "strongly_regular": r.strongly_regular,
        "det_regular": r.det_regular,
    }))
    .note(format!(
        "tropical rank: {}\ndeterminantal rank: {}\nstrongly regular: {}\ndeterminantally regular: {}",
        r.tropical_rank, r.det_rank, r.strongly_regular, r.det_regular
    )))
}

fn fnf(a: &Matrix) -> Outcome {
    let f = frobenius_normal_form(a)?;
    let permuted = f.permuted(a)?;
    let blocks: Vec<Vec<usize>> = f.blocks.iter().map(|b| one_based(b)).collect();
    let shown: Vec<String> = f.blocks.iter().map(|b| format!("{{{}}}", list(b))).collect();
    Ok(Report::new(json!({ "q": genperm_json(&f.q), "blocks": blocks, "form": matrix_json(&permuted) }))
        .matrix(format!("Q: {}", f.q), &f.q.dense())
        .note(format!("blocks: {}", shown.join(" ")))
        .matrix("QᵗAQ", &permuted))
}

fn sol(a: &Matrix, check: Option<PathBuf>) -> Outcome {
    if let Some(path) = check {
        let x = load(&path)?;
        let member = sol_check(a, &x)?;
        let mut json = json!({ "member": member });
        let mut report = Report::new(Value::Null).note(if member { "member" } else { "not a member" });
        if let Some(kind) = SolFamily::detect(a) {
            let by_family = sol_family_membership(a, &x, kind)?;
            json["family"] = Value::String(kind.to_string());
            json["family_member"] = Value::Bool(by_family);
            report = report.note(format!("family {kind}: {}", if by_family { "member" } else { "not a member" }));
        }
        report.json = json;
        return Ok(report.decided(member));
    }
    let found = sol_enumerate_diagonal(a)?;
    let mut report = Report::new(json!({ "elements": found.iter().map(genperm_json).collect::<Vec<_>>() }))
        .note(format!("{} generalised permutations", found.len()));
    for p in &found {
        report = report.matrix(p.to_string(), &p.dense());
    }
    Ok(report)
}

fn dispatch(command: Command) -> Outcome {
    match command {
        Command::Canon { a, d } => canon(&load(&a)?, parse_diagonal(&d)?),
        Command::Mform { a } => mform(&load(&a)?),
        Command::Congruent { a, b } => congruence(&load(&a)?, &load(&b)?),
        Command::Psi { a, check_plucker } => minor_table(&load(&a)?, check_plucker),
        Command::Split { a } => split_cmd(&load(&a)?),
        Command::SkewCanon { a } => skew_canon(&load(&a)?),
        Command::SkewBlocks { a } => skew_blocks(&load(&a)?),
        Command::Solve1 { a, b } => solve1(&load(&a)?, &load_vector(&b)?),
        Command::Solve2 { b, c, supports } => solve2(&load(&b)?, &load(&c)?, supports),
        Command::Commute { a, d } => commute(&load(&a)?, parse_diagonal(&d)?),
        Command::Geneig {
            a,
            b,
            lambda,
            check_necessary,
            ..
        } => geneig(&load(&a)?, &load(&b)?, lambda, check_necessary),
        Command::Rank { a } => rank(&load(&a)?),
        Command::Fnf { a } => fnf(&load(&a)?),
        Command::Sol { a, check, .. } => sol(&load(&a)?, check),
    }
}

fn thread_pool() -> Result<Option<rayon::ThreadPool>, Failure> {
    let Ok(value) = std::env::var("MAXPLUS_THREADS") else {
        return Ok(None);
    };
    let threads: usize = value
        .trim()
        .parse()
        .map_err(|_| Failure(format!("MAXPLUS_THREADS must be a positive integer, got {value:?}")))?;
    if threads == 0 {
        return Err(Failure("MAXPLUS_THREADS must be a positive integer, got 0".into()));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map(Some)
        .map_err(|e| Failure(e.to_string()))
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let outcome = thread_pool().and_then(|pool| match pool {
        Some(pool) => pool.install(|| dispatch(cli.command)),
        None => dispatch(cli.command),
    });
    match outcome {
        Ok(report) => {
            let written = if cli.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report.json).expect("serialisable"))
            } else {
                write!(out, "{}", report.text.join("\n"))
            };
            if written.is_err() {
                return 2;
            }
            report.code
        }
        Err(Failure(message)) => {
            let _ = writeln!(err, "error: {message}");
            2
        }
    }
}
