use std::collections::BTreeSet;
use std::fs;
use std::io::Write;
use std::path::Path;
use std::time::{Duration, Instant};

use anyhow::{bail, ensure, Context, Result};
use commclass_core::coxeter::MAX_RANK;
use commclass_core::reference::{known_class_count, S4_CLASSES};
use commclass_core::repr::{heap_of_word, render_svg, rhombic_tiling, wiring_diagram, SvgOptions};
use commclass_core::{
    canonical_words, count_commutation_classes, count_commutation_classes_with, count_reduced_words,
    count_reduced_words_longest, enumerate_classes, enumerate_reduced_words, partition_reduced_words, BigCount,
    Permutation, SearchOptions, Word, DEFAULT_ORACLE_BUDGET,
};

use crate::report::{ClassRecord, RunReport, Status};
use crate::{Kind, Outcome, RecordFormat, RenderArgs, Target, WordFormat};

fn resolve(target: &Target) -> Result<Permutation> {
    match (&target.perm, target.n) {
        (Some(p), n) => {
            let perm: Permutation = p.parse().with_context(|| format!("invalid permutation {p:?}"))?;
            if let Some(n) = n {
                ensure!(n == perm.rank(), "--n {n} does not match the rank {} of --perm", perm.rank());
            }
            Ok(perm)
        }
        (None, Some(n)) => {
            ensure!(n >= 1, "--n must be at least 1");
            Ok(Permutation::longest(n)?)
        }
        (None, None) => bail!("one of --n or --perm is required"),
    }
}

fn echo(kind: &str, target: &Target) -> String {
    match (&target.perm, target.n) {
        (Some(p), _) => format!("count {kind} --perm {p}"),
        (None, Some(n)) => format!("count {kind} --n {n}"),
        (None, None) => format!("count {kind}"),
    }
}

fn emit(report: &RunReport, json: bool, out: &mut impl Write) -> Result<()> {
    if json {
        serde_json::to_writer(&mut *out, report)?;
        writeln!(out)?;
    } else {
        writeln!(out, "{}", report.result)?;
    }
    eprintln!("{}", report.summary());
    Ok(())
}

pub fn count_reduced(target: &Target, json: bool, out: &mut impl Write) -> Result<Outcome> {
    let w = resolve(target)?;
    let start = Instant::now();
    let count = if w.is_longest() { count_reduced_words_longest(w.rank())? } else { count_reduced_words(&w) };
    let report = RunReport::new(echo("reduced", target), w.rank(), &count, start.elapsed(), 1, Status::UnknownRank);
    emit(&report, json, out)?;
    Ok(Outcome::Ok)
}

pub fn count_classes(
    target: &Target,
    threads: usize,
    time_limit: Option<f64>,
    json: bool,
    out: &mut impl Write,
) -> Result<Outcome> {
    let w = resolve(target)?;
    let time_limit = match time_limit {
        Some(t) => {
            ensure!(t.is_finite() && t >= 0.0, "--time-limit must be a non-negative number of seconds");
            Some(Duration::from_secs_f64(t))
        }
        None => None,
    };
    let options = SearchOptions { threads: threads.max(1), time_limit };
    let result = count_commutation_classes_with(&w, &options)?;
    let reference = if w.is_longest() { known_class_count(w.rank()) } else { None };
    let status = match (&reference, result.complete) {
        (_, false) => Status::Incomplete,
        (Some(r), true) if *r == result.count => Status::Match,
        (Some(_), true) => Status::Mismatch,
        (None, true) => Status::UnknownRank,
    };
    let report =
        RunReport::new(echo("classes", target), w.rank(), &result.count, result.elapsed, options.threads, status);
    emit(&report, json, out)?;
    Ok(match status {
        Status::Mismatch => {
            eprintln!("expected {}", reference.expect("mismatch implies a reference value"));
            Outcome::Mismatch
        }
        Status::Incomplete => {
            eprintln!("time limit reached; the count above is a lower bound");
            Outcome::Aborted
        }
        _ => Outcome::Ok,
    })
}

pub fn list_reduced(target: &Target, format: WordFormat, out: &mut impl Write) -> Result<Outcome> {
    let w = resolve(target)?;
    let words = enumerate_reduced_words(&w);
    match format {
        WordFormat::Text => {
            for word in words {
                writeln!(out, "{word}")?;
            }
        }
        WordFormat::Json => {
            out.write_all(b"[")?;
            for (i, word) in words.enumerate() {
                if i > 0 {
                    out.write_all(b",")?;
                }
                serde_json::to_writer(&mut *out, &word.to_string())?;
            }
            out.write_all(b"]\n")?;
        }
    }
    Ok(Outcome::Ok)
}

/// Refuses `--members` when the reduced words alone would exceed the oracle budget.
fn check_member_budget(w: &Permutation) -> Result<()> {
    let total = if w.is_longest() { count_reduced_words_longest(w.rank())? } else { count_reduced_words(w) };
    if total > BigCount::from(DEFAULT_ORACLE_BUDGET) {
        bail!(
            "--members would materialize {total} reduced words, more than the budget of {DEFAULT_ORACLE_BUDGET}; \
             drop --members or pick a smaller rank"
        );
    }
    Ok(())
}

pub fn list_classes(target: &Target, members: bool, format: RecordFormat, out: &mut impl Write) -> Result<Outcome> {
    let w = resolve(target)?;
    if members {
        check_member_budget(&w)?;
    }
    let classes = enumerate_classes(&w, members)?;
    match format {
        RecordFormat::Text => {
            for class in classes {
                write!(out, "{} {}", class.canonical, class.size)?;
                if let Some(m) = &class.members {
                    for word in m {
                        write!(out, " {word}")?;
                    }
                }
                writeln!(out)?;
            }
        }
        RecordFormat::Json => {
            out.write_all(b"[")?;
            for (i, class) in classes.enumerate() {
                if i > 0 {
                    out.write_all(b",")?;
                }
                serde_json::to_writer(&mut *out, &ClassRecord::from(&class))?;
            }
            out.write_all(b"]\n")?;
        }
        RecordFormat::Csv => {
            let mut csv = csv::Writer::from_writer(&mut *out);
            if members {
                csv.write_record(["canonical", "size", "members"])?;
            } else {
                csv.write_record(["canonical", "size"])?;
            }
            for class in classes {
                let record = ClassRecord::from(&class);
                match record.members {
                    Some(m) => csv.write_record([record.canonical, record.size, m.join(" ")])?,
                    None => csv.write_record([record.canonical, record.size])?,
                }
            }
            csv.flush()?;
        }
    }
    Ok(Outcome::Ok)
}

/// Parses a word whose rank may be implied by its largest letter.
fn parse_word(text: &str, n: Option<usize>) -> Result<Word> {
    let text = text.trim();
    let rank = match n {
        Some(n) => n,
        None if text.contains(',') => {
            let wide = Word::parse(text, MAX_RANK).with_context(|| format!("invalid word {text:?}"))?;
            wide.letters().iter().max().map_or(1, |&m| m as usize + 1)
        }
        None => text.chars().filter_map(|c| c.to_digit(10)).max().map_or(1, |m| m as usize + 1),
    };
    let word = Word::parse(text, rank).with_context(|| format!("invalid word {text:?}"))?;
    ensure!(word.is_reduced(), "{word} is not a reduced word");
    Ok(word)
}

fn draw(kind: Kind, word: &Word, coords: bool, options: &SvgOptions) -> Result<String> {
    let mut text = match (kind, coords) {
        (Kind::Heap, false) => render_svg(&heap_of_word(word), options),
        (Kind::Network, false) => render_svg(&wiring_diagram(word), options),
        (Kind::Tiling, false) => render_svg(&rhombic_tiling(word)?, options),
        (Kind::Heap, true) => serde_json::to_string_pretty(&heap_of_word(word))?,
        (Kind::Network, true) => serde_json::to_string_pretty(&wiring_diagram(word))?,
        (Kind::Tiling, true) => serde_json::to_string_pretty(&rhombic_tiling(word)?)?,
    };
    if !text.ends_with('\n') {
        text.push('\n');
    }
    Ok(text)
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("cannot write {}", path.display()))
}

pub fn render(args: &RenderArgs, out: &mut impl Write) -> Result<Outcome> {
    ensure!(args.scale.is_finite() && args.scale > 0.0, "--scale must be positive");
    ensure!(args.margin.is_finite() && args.margin >= 0.0, "--margin must be non-negative");
    let options = SvgOptions { scale: args.scale, margin: args.margin, transpose_heap: args.transpose };
    let ext = if args.coords { "json" } else { "svg" };

    if args.all {
        let n = args.n.context("--all needs --n")?;
        let w0 = Permutation::longest(n)?;
        fs::create_dir_all(&args.outdir).with_context(|| format!("cannot create {}", args.outdir.display()))?;
        let mut written = 0usize;
        for canonical in canonical_words(&w0)? {
            let path = args.outdir.join(format!("{canonical}.{ext}"));
            write_file(&path, &draw(args.kind, &canonical, args.coords, &options)?)?;
            writeln!(out, "{}", path.display())?;
            written += 1;
        }
        eprintln!("wrote {written} files to {}", args.outdir.display());
        return Ok(Outcome::Ok);
    }

    let text = args.word.as_deref().context("--word or --all is required")?;
    let word = parse_word(text, args.n)?;
    let doc = draw(args.kind, &word, args.coords, &options)?;
    match &args.output {
        Some(path) => write_file(path, &doc)?,
        None => out.write_all(doc.as_bytes())?,
    }
    Ok(Outcome::Ok)
}

fn size_multiset<'a>(classes: impl IntoIterator<Item = &'a BTreeSet<Word>>) -> Vec<usize> {
    let mut sizes: Vec<usize> = classes.into_iter().map(BTreeSet::len).collect();
    sizes.sort_unstable();
    sizes
}

pub fn verify(n_max: usize, threads: usize, out: &mut impl Write) -> Result<Outcome> {
    ensure!(n_max >= 1, "--n-max must be at least 1");
    let mut all_pass = true;
    for n in 1..=n_max {
        let w0 = Permutation::longest(n)?;
        let start = Instant::now();
        let options = SearchOptions { threads: threads.max(1), time_limit: None };
        let pruned = count_commutation_classes_with(&w0, &options)?.count;
        let mut pass = true;
        let mut line = format!("n={n} classes={pruned}");

        if n <= 6 {
            let partition = partition_reduced_words(&w0, DEFAULT_ORACLE_BUDGET)?;
            let ok = BigCount::from(partition.len()) == pruned;
            line.push_str(&format!(" oracle={}{}", partition.len(), if ok { "" } else { "!" }));
            pass &= ok;
            if n == 4 {
                let expected: BTreeSet<BTreeSet<String>> =
                    S4_CLASSES.iter().map(|c| c.iter().map(|s| s.to_string()).collect()).collect();
                let got: BTreeSet<BTreeSet<String>> =
                    partition.iter().map(|c| c.iter().map(ToString::to_string).collect()).collect();
                let sizes_ok = size_multiset(&partition) == [1, 1, 1, 1, 2, 2, 4, 4];
                let ok = got == expected && sizes_ok;
                line.push_str(if ok { " s4-classes=ok" } else { " s4-classes=differ" });
                pass &= ok;
            }
        }
        match known_class_count(n) {
            Some(r) => {
                let ok = r == pruned;
                line.push_str(&format!(" reference={r}{}", if ok { "" } else { "!" }));
                pass &= ok;
            }
            None => line.push_str(" reference=none"),
        }
        line.push_str(&format!(" ({:.3}s) {}", start.elapsed().as_secs_f64(), if pass { "PASS" } else { "FAIL" }));
        writeln!(out, "{line}")?;
        out.flush()?;
        all_pass &= pass;
    }
    Ok(if all_pass { Outcome::Ok } else { Outcome::Mismatch })
}

pub fn oracle_verify(target: &Target, budget: u64, out: &mut impl Write) -> Result<Outcome> {
    let w = resolve(target)?;
    let partition = partition_reduced_words(&w, budget)?;
    let oracle: BTreeSet<Word> = partition.iter().filter_map(|c| c.first().cloned()).collect();
    let pruned: BTreeSet<Word> = canonical_words(&w)?.collect();
    let count = count_commutation_classes(&w)?;
    let agree = oracle == pruned && BigCount::from(oracle.len()) == count;
    writeln!(out, "{w}: oracle={} pruned={} {}", oracle.len(), count, if agree { "match" } else { "mismatch" })?;
    for word in oracle.difference(&pruned) {
        eprintln!("missing from pruned search: {word}");
    }
    for word in pruned.difference(&oracle) {
        eprintln!("not a class minimum: {word}");
    }
    Ok(if agree { Outcome::Ok } else { Outcome::Mismatch })
}
