use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use wordrev::analysis::{
    check_er, check_left_cancellative, check_right_cancellative, group_word_problem, ore_report, Hypotheses, MonoidWordProblem,
    TriVerdict, Verdict,
};
use wordrev::closure::{compute_closure, DEFAULT_MAX_WORDS};
use wordrev::completeness::{
    check_complete, complete_presentation, verify_pseudolength, CompletionError, CompletionStatus, CubeVerdict, HomogeneitySide,
    PseudoLength, DEFAULT_MAX_ROUNDS,
};
use wordrev::corpus::{self, CorpusEntry};
use wordrev::dot::emit_dot;
use wordrev::engine::{alternating_reduce, reverse_search, AlternatingOptions, Budget, Decision, Direction, SearchOptions, Strategy};
use wordrev::report::{Format, Report};
use wordrev::{parse_document, serialize, Document, PositiveWord, SignedWord};

const EXIT_OK: u8 = 0;
const EXIT_NO: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_PRECONDITION: u8 = 4;

#[derive(Parser)]
#[command(name = "wordrev", version, about = "Word reversing for positive presentations")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutFormat::Human, global = true)]
    format: OutFormat,
    /// Default budget, as `steps=N,len=N,visited=N` (any subset).
    #[arg(long, env = "WORDREV_BUDGET", global = true)]
    budget: Option<String>,
    /// Longest reversing sequence explored.
    #[arg(long, global = true)]
    max_steps: Option<usize>,
    /// Longest word kept during a search.
    #[arg(long, global = true)]
    max_len: Option<usize>,
    /// Most words visited by one search.
    #[arg(long, global = true)]
    max_visited: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Human,
    Kv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Dir {
    Right,
    Left,
}

impl From<Dir> for Direction {
    fn from(d: Dir) -> Self {
        match d {
            Dir::Right => Direction::Right,
            Dir::Left => Direction::Left,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Reverse a signed word and list terminals and stuck words.
    Reverse {
        /// Presentation file, or the name of a bundled example.
        file: String,
        word: String,
        #[arg(long, value_enum, default_value_t = Dir::Right)]
        dir: Dir,
        /// Explore every order of steps instead of the leftmost one.
        #[arg(long, conflicts_with = "first")]
        all: bool,
        /// Stop at the first terminal found.
        #[arg(long)]
        first: bool,
        /// Also allow relations inside positive or negative factors.
        #[arg(long)]
        extended: bool,
        /// Print the trace of each terminal.
        #[arg(long)]
        trace: bool,
        /// Print the diagram of the first terminal as DOT.
        #[arg(long)]
        dot: bool,
        /// Exit 3 when the budget runs out.
        #[arg(long)]
        strict: bool,
    },
    /// Closure of the letters under right complements.
    Closure {
        file: String,
        #[arg(long, default_value_t = DEFAULT_MAX_WORDS)]
        max_words: usize,
        #[arg(long)]
        strict: bool,
    },
    /// Strong cube check on letters, both sides.
    CheckComplete {
        file: String,
        /// `unit`, `weights a=1 b=2` or `inversions a b`; overrides the file.
        #[arg(long)]
        pseudolength: Option<String>,
    },
    /// Add relations until both strong cube checks pass.
    Complete {
        file: String,
        #[arg(long, default_value_t = DEFAULT_MAX_ROUNDS)]
        rounds: usize,
        #[arg(long)]
        pseudolength: Option<String>,
        /// Where to write the completed presentation.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Flags, closure, completeness, cancellativity, E_r and embedding.
    Analyze {
        file: String,
        /// Take completeness as given instead of checking it.
        #[arg(long)]
        assume_complete: bool,
        #[arg(long)]
        pseudolength: Option<String>,
    },
    /// Equivalence of two positive words in the monoid.
    WpMonoid {
        file: String,
        u: String,
        v: String,
        #[arg(long)]
        assume_complete: bool,
        #[arg(long)]
        trace: bool,
    },
    /// Triviality of a signed word in the group.
    WpGroup {
        file: String,
        word: String,
        #[arg(long)]
        assume_complete: bool,
        #[arg(long)]
        trace: bool,
    },
    /// Reduce a word to ε by alternating right and left reversing.
    AltReduce {
        file: String,
        word: String,
        #[arg(long, default_value_t = 4)]
        max_alternations: usize,
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        dot: bool,
    },
    /// Re-verify the claims attached to the bundled examples.
    CorpusCheck {
        /// Entries to check; all when empty.
        names: Vec<String>,
        /// Worker threads.
        #[arg(long, default_value_t = 4)]
        threads: usize,
        /// List the bundled examples and exit.
        #[arg(long)]
        list: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INPUT, message: message.into() }
    }
}

type Outcome = Result<u8, Failure>;

fn parse_budget(cli: &Cli) -> Result<Budget, Failure> {
    let mut b = Budget::default();
    if let Some(spec) = &cli.budget {
        for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = part.split_once('=').ok_or_else(|| Failure::input(format!("bad budget entry `{part}`")))?;
            let n: usize = v.trim().parse().map_err(|_| Failure::input(format!("bad budget value `{v}`")))?;
            match k.trim() {
                "steps" => b.max_branch_steps = n,
                "len" => b.max_word_len = n,
                "visited" => b.max_visited = n,
                other => return Err(Failure::input(format!("unknown budget key `{other}`"))),
            }
        }
    }
    if let Some(n) = cli.max_steps {
        b.max_branch_steps = n;
    }
    if let Some(n) = cli.max_len {
        b.max_word_len = n;
    }
    if let Some(n) = cli.max_visited {
        b.max_visited = n;
    }
    Budget::new(b.max_branch_steps, b.max_word_len, b.max_visited).ok_or_else(|| Failure::input("budget limits must be positive"))
}

/// Reads a presentation file, falling back to a bundled example of that name.
fn load(name: &str) -> Result<(Document, Option<&'static CorpusEntry>), Failure> {
    let path = Path::new(name);
    if path.exists() {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{name}: {e}")))?;
        let doc = parse_document(&text).map_err(|e| Failure::input(format!("{name}: {e}")))?;
        return Ok((doc, None));
    }
    match corpus::find(name) {
        Some(entry) => Ok((entry.document(), Some(entry))),
        None => Err(Failure::input(format!("{name}: no such file or bundled example"))),
    }
}

fn signed(doc: &Document, text: &str) -> Result<SignedWord, Failure> {
    doc.presentation.alphabet().parse_signed(text).map_err(|e| Failure::input(format!("word `{text}`: {e}")))
}

fn positive(doc: &Document, text: &str) -> Result<PositiveWord, Failure> {
    doc.presentation.alphabet().parse_positive(text).map_err(|e| Failure::input(format!("word `{text}`: {e}")))
}

fn pseudolength(doc: &Document, spec: Option<&str>) -> Result<PseudoLength, Failure> {
    match spec {
        Some(s) => PseudoLength::parse(doc.presentation.alphabet(), s).map_err(|e| Failure::input(format!("pseudolength: {e}"))),
        None => Ok(doc.pseudolength.clone().unwrap_or(PseudoLength::UnitLength)),
    }
}

fn verdict_code(v: &TriVerdict) -> u8 {
    match v.value {
        Verdict::Yes => EXIT_OK,
        Verdict::No => EXIT_NO,
        Verdict::Unknown => EXIT_BUDGET,
    }
}

/// Completeness hypotheses, either taken as given or checked.
fn hypotheses(doc: &Document, assume: bool, b: &Budget) -> Hypotheses {
    if assume {
        return Hypotheses { r_complete: true, l_complete: true, er: true };
    }
    let pl = doc.pseudolength.clone().unwrap_or(PseudoLength::UnitLength);
    let cert = verify_pseudolength(&doc.presentation, &pl, HomogeneitySide::Both).ok();
    let (r, l) = check_complete(&doc.presentation, cert.as_ref(), b);
    Hypotheses { r_complete: r.verdict == CubeVerdict::Complete, l_complete: l.verdict == CubeVerdict::Complete, er: false }
}

fn run(cli: &Cli, out: &mut String) -> Outcome {
    let b = parse_budget(cli)?;
    let format = match cli.format {
        OutFormat::Human => Format::Human,
        OutFormat::Kv => Format::KeyValue,
    };
    let mut r = Report::new();
    let code = match &cli.command {
        Command::Reverse { file, word, dir, all, first, extended, trace, dot, strict } => {
            let (doc, _) = load(file)?;
            let w = signed(&doc, word)?;
            let opts = SearchOptions {
                strategy: if *all { Strategy::Full } else { Strategy::Leftmost },
                extended: *extended,
                prune_dead: !*all,
                stop_at_empty: false,
            };
            let mut res = reverse_search(&doc.presentation, &w, (*dir).into(), &b, &opts);
            if *first {
                res.terminals.truncate(1);
            }
            let al = doc.presentation.alphabet();
            r.push("word", al.display_signed(&w));
            r.search("reverse", &res, al);
            if *trace {
                for (i, t) in res.terminals.iter().enumerate() {
                    r.push(format!("reverse.terminal.{i}.trace"), t.trace.to_text(al));
                }
            }
            if *dot {
                if let Some(t) = res.terminals.first() {
                    out.push_str(&r.render(format));
                    out.push_str(&emit_dot(&doc.presentation, &t.trace));
                    return Ok(if *strict && res.budget_exceeded { EXIT_BUDGET } else { EXIT_OK });
                }
            }
            if *strict && res.budget_exceeded {
                EXIT_BUDGET
            } else {
                EXIT_OK
            }
        }
        Command::Closure { file, max_words, strict } => {
            let (doc, _) = load(file)?;
            let (res, _) = compute_closure(&doc.presentation, &b, *max_words);
            r.closure("closure", &res, doc.presentation.alphabet());
            if *strict && !res.is_closed() {
                EXIT_BUDGET
            } else {
                EXIT_OK
            }
        }
        Command::CheckComplete { file, pseudolength: spec } => {
            let (doc, _) = load(file)?;
            let pl = pseudolength(&doc, spec.as_deref())?;
            let al = doc.presentation.alphabet();
            r.push("pseudolength", pl.to_text(al));
            let cert = match verify_pseudolength(&doc.presentation, &pl, HomogeneitySide::Both) {
                Ok(c) => Some(c),
                Err(e) => {
                    r.push("certificate", format!("failed: {e}"));
                    if spec.is_some() {
                        out.push_str(&r.render(format));
                        return Ok(EXIT_PRECONDITION);
                    }
                    None
                }
            };
            let (right, left) = check_complete(&doc.presentation, cert.as_ref(), &b);
            r.cube("right", &right, al).cube("left", &left, al);
            match (right.verdict, left.verdict) {
                (CubeVerdict::Incomplete, _) | (_, CubeVerdict::Incomplete) => EXIT_NO,
                (CubeVerdict::Unknown, _) | (_, CubeVerdict::Unknown) => EXIT_BUDGET,
                (CubeVerdict::Complete, CubeVerdict::Complete) => EXIT_OK,
                _ => EXIT_PRECONDITION,
            }
        }
        Command::Complete { file, rounds, pseudolength: spec, output } => {
            let (doc, _) = load(file)?;
            let pl = pseudolength(&doc, spec.as_deref())?;
            let al = doc.presentation.alphabet();
            let log = match complete_presentation(&doc.presentation, Some(&pl), *rounds, &b) {
                Ok(log) => log,
                Err(CompletionError::Homogeneity(e)) => {
                    r.push("certificate", format!("failed: {e}"));
                    out.push_str(&r.render(format));
                    return Ok(EXIT_PRECONDITION);
                }
                Err(e) => return Err(Failure { code: EXIT_PRECONDITION, message: e.to_string() }),
            };
            r.completion("completion", &log, al);
            let text = serialize(&log.final_presentation, Some(&pl));
            match output {
                Some(path) => {
                    std::fs::write(path, &text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
                    r.push("output", path.display());
                }
                None => {
                    r.push("presentation", text.trim_end());
                }
            }
            match log.status {
                CompletionStatus::Complete => EXIT_OK,
                _ => EXIT_BUDGET,
            }
        }
        Command::Analyze { file, assume_complete, pseudolength: spec } => {
            let (doc, entry) = load(file)?;
            let p = &doc.presentation;
            let al = p.alphabet();
            let pl = pseudolength(&doc, spec.as_deref())?;
            let f = p.syntactic_flags();
            r.push("letters", al.len()).push("relations", p.relations().len());
            r.push("flags.c_r", f.satisfies_cr).push("flags.c_l", f.satisfies_cl).push("flags.c", f.satisfies_c);
            r.push("flags.u_r", f.satisfies_ur).push("flags.r_complemented", f.is_r_complemented);
            r.push("flags.uniform_length", f.uniform_length);
            let (closure, table) = compute_closure(p, &b, DEFAULT_MAX_WORDS);
            r.closure("closure", &closure, al);
            r.push("wp.quadratic_path", MonoidWordProblem::new(p, Hypotheses::default(), &b).with_table(&table).uses_table());
            let seed = entry.and_then(|e| e.seed_words(&doc));
            let ore = ore_report(p, Some(&pl), seed.as_deref(), &b);
            r.push("certificate", ore.details.certificate.is_some());
            r.cube("right", &ore.details.right, al).cube("left", &ore.details.left, al);
            let hyp = if *assume_complete {
                Hypotheses { r_complete: true, l_complete: true, er: ore.details.er.verdict.is_yes() }
            } else {
                Hypotheses {
                    r_complete: ore.details.right.verdict == CubeVerdict::Complete,
                    l_complete: ore.details.left.verdict == CubeVerdict::Complete,
                    er: ore.details.er.verdict.is_yes(),
                }
            };
            r.verdict("left_cancellative", &check_left_cancellative(p, &hyp, &b), al);
            r.verdict("right_cancellative", &check_right_cancellative(p, &hyp, &b), al);
            r.verdict("e_r", &ore.details.er.verdict, al);
            r.push("e_r.family_size", ore.details.er.family.len());
            r.push("e_r.from_seed", ore.details.er.from_seed);
            r.verdict("embeds", &ore.embeds, al);
            r.verdict("group_of_fractions", &ore.group_of_fractions, al);
            if let Some(e) = entry {
                for c in e.claims.iter().filter(|c| c.external) {
                    r.push(format!("external.{}", c.property.key()), format!("{} ({})", c.expected.render(), c.citation));
                }
            }
            EXIT_OK
        }
        Command::WpMonoid { file, u, v, assume_complete, trace } => {
            let (doc, _) = load(file)?;
            let p = &doc.presentation;
            let (u, v) = (positive(&doc, u)?, positive(&doc, v)?);
            let hyp = hypotheses(&doc, *assume_complete, &b);
            let (closure, table) = compute_closure(p, &b, DEFAULT_MAX_WORDS);
            let mut solver = MonoidWordProblem::new(p, hyp, &b);
            if closure.is_closed() {
                solver = solver.with_table(&table);
            }
            r.push("quadratic_path", solver.uses_table());
            let v = solver.decide(&u, &v);
            let mut shown = v.clone();
            if !*trace {
                shown.witness = None;
            }
            r.verdict("equivalent", &shown, p.alphabet());
            verdict_code(&v)
        }
        Command::WpGroup { file, word, assume_complete, trace } => {
            let (doc, _) = load(file)?;
            let w = signed(&doc, word)?;
            let mut hyp = hypotheses(&doc, *assume_complete, &b);
            if !*assume_complete {
                hyp.er = check_er(&doc.presentation, None, &b).verdict.is_yes();
            }
            let v = group_word_problem(&doc.presentation, &w, &hyp, &b);
            let mut shown = v.clone();
            if !*trace {
                shown.witness = None;
            }
            r.verdict("trivial", &shown, doc.presentation.alphabet());
            verdict_code(&v)
        }
        Command::AltReduce { file, word, max_alternations, trace, dot } => {
            let (doc, _) = load(file)?;
            let w = signed(&doc, word)?;
            let opts = AlternatingOptions { max_alternations: *max_alternations, ..AlternatingOptions::default() };
            let al = doc.presentation.alphabet();
            match alternating_reduce(&doc.presentation, &w, &b, &opts) {
                Decision::Yes(t) => {
                    r.push("reduces", "yes").push("steps", t.len()).push("alternations", t.alternations());
                    if *trace {
                        r.push("trace", t.to_text(al));
                    }
                    if *dot {
                        out.push_str(&r.render(format));
                        out.push_str(&emit_dot(&doc.presentation, &t));
                        return Ok(EXIT_OK);
                    }
                    EXIT_OK
                }
                Decision::No => {
                    r.push("reduces", "no").push("note", format!("within {max_alternations} alternations"));
                    EXIT_NO
                }
                Decision::Unknown => {
                    r.push("reduces", "unknown");
                    EXIT_BUDGET
                }
            }
        }
        Command::CorpusCheck { names, threads, list } => {
            if *list {
                for e in corpus::entries() {
                    r.push(e.name, e.description);
                }
                out.push_str(&r.render(format));
                return Ok(EXIT_OK);
            }
            let selected: Vec<&'static CorpusEntry> = if names.is_empty() {
                corpus::entries().iter().collect()
            } else {
                names
                    .iter()
                    .map(|n| corpus::find(n).ok_or_else(|| Failure::input(format!("no bundled example `{n}`"))))
                    .collect::<Result<_, _>>()?
            };
            let results = corpus_check(&selected, (*threads).max(1), &b);
            let mut failed = 0;
            for (entry, checks) in selected.iter().zip(results) {
                for c in checks {
                    let status = match c.passed {
                        Some(true) => "pass",
                        Some(false) => {
                            failed += 1;
                            "FAIL"
                        }
                        None => "external",
                    };
                    r.push(
                        format!("{}.{}", entry.name, c.claim.property.key()),
                        format!("{status} expected={} observed={} ({})", c.claim.expected.render(), c.observed, c.claim.citation),
                    );
                }
            }
            r.push("failed", failed);
            if failed == 0 {
                EXIT_OK
            } else {
                EXIT_NO
            }
        }
    };
    out.push_str(&r.render(format));
    Ok(code)
}

/// Checks entries on `threads` workers; results come back in input order.
fn corpus_check(entries: &[&'static CorpusEntry], threads: usize, b: &Budget) -> Vec<Vec<corpus::ClaimCheck>> {
    let next = std::sync::atomic::AtomicUsize::new(0);
    let slots: Vec<std::sync::Mutex<Option<Vec<corpus::ClaimCheck>>>> = entries.iter().map(|_| std::sync::Mutex::new(None)).collect();
    std::thread::scope(|s| {
        for _ in 0..threads.min(entries.len()) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                let Some(e) = entries.get(i) else { break };
                let res = corpus::check_entry(e, b);
                *slots[i].lock().expect("worker panicked") = Some(res);
            });
        }
    });
    slots.into_iter().map(|m| m.into_inner().expect("worker panicked").unwrap_or_default()).collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    match run(&cli, &mut out) {
        Ok(code) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            print!("{out}");
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
