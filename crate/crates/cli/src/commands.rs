use std::io::Write;

use serde::Serialize;
use serde_json::json;

use sfword::disposability::{delete_factor, IrreducibilityReport};
use sfword::enumerate::{
    census_range_with, enumerate_square_free, square_free_count, CensusRow, SearchOptions,
};
use sfword::morphism::{alignment_test, crochemore_test, procedure_i_k, MorphismCertificate};
use sfword::replicate::{all_pass, replicate_all, ClaimResult};
use sfword::{
    construct, find_square, is_k_irreducible, DeletionSite, Error, Letter, Morphism, Word,
};

use crate::{input, Command, Failure, MorphismOp, Status};

type Out<'a> = &'a mut dyn Write;

pub fn run(command: Command, out: Out) -> Result<Status, Failure> {
    match command {
        Command::Check { words, json } => check(&input::words(&words)?, json.json, out),
        Command::Delete {
            word,
            start,
            length,
            json,
        } => delete(
            &input::parse(&word)?,
            DeletionSite::new(start, length),
            json.json,
            out,
        ),
        Command::Irreducible { words, json } => {
            irreducible(&input::words(&words)?, 1, json.json, out)
        }
        Command::KIrreducible { k, words, json } => {
            if k == 0 {
                return Err(Failure::Usage("k must be positive".into()));
            }
            irreducible(&input::words(&words)?, k, json.json, out)
        }
        Command::Enumerate {
            length,
            count,
            threads,
        } => {
            if count {
                let n = square_free_count(length, &SearchOptions::with_threads(threads.threads));
                writeln!(out, "{n}")?;
                return Ok(Status::Ok);
            }
            let mut err = Ok(());
            let mut line = String::with_capacity(length + 1);
            enumerate_square_free(length, |w| {
                if err.is_ok() {
                    line.clear();
                    line.extend(w.iter().map(|a| a.to_char()));
                    line.push('\n');
                    err = out.write_all(line.as_bytes());
                }
            });
            err?;
            Ok(Status::Ok)
        }
        Command::Census {
            from,
            to,
            csv: _,
            json,
            table,
            representatives,
            threads,
        } => {
            let opts = SearchOptions::with_threads(threads.threads);
            let rows = census_range_with(from, to, representatives, &opts)?;
            if json {
                write_pretty(out, &rows)?;
            } else if representatives {
                for rep in rows.iter().flat_map(|r| r.representatives.iter().flatten()) {
                    writeln!(out, "{rep}")?;
                }
            } else if table {
                census_table(&rows, out)?;
            } else {
                census_csv(&rows, out)?;
            }
            Ok(Status::Ok)
        }
        Command::Construct { length, json } => {
            let trace = construct(length)?;
            if json.json {
                write_pretty(out, &trace)?;
            } else {
                writeln!(out, "{}", trace.result)?;
            }
            Ok(Status::Ok)
        }
        Command::Morphism { spec, builtin, op } => {
            let m = match (spec, builtin) {
                (Some(path), None) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                    Morphism::parse_spec(&text)?
                }
                (None, Some(name)) => Morphism::builtin(&name)
                    .ok_or_else(|| Failure::Usage(format!("unknown built-in morphism {name:?}")))?,
                _ => {
                    return Err(Failure::Usage(
                        "give exactly one of --spec FILE or --builtin NAME".into(),
                    ))
                }
            };
            morphism(&m, op, out)
        }
        Command::VerifyPaper {
            depth,
            json,
            table: _,
            threads,
        } => {
            let opts = SearchOptions::with_threads(threads.threads);
            let results = opts.install(|| replicate_all(depth, &opts))?;
            if json {
                write_pretty(out, &results)?;
            } else {
                claims_table(&results, out)?;
            }
            Ok(if all_pass(&results) {
                Status::Ok
            } else {
                Status::Negative
            })
        }
    }
}

fn write_pretty<T: Serialize>(out: Out, value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).expect("report types serialize");
    writeln!(out, "{text}")?;
    Ok(())
}

fn write_line<T: Serialize>(out: Out, value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string(value).expect("report types serialize");
    writeln!(out, "{text}")?;
    Ok(())
}

/// One status line per word; the word itself is prefixed for batches.
fn status_line(out: Out, batch: bool, word: &Word, status: &str) -> Result<(), Failure> {
    if batch {
        writeln!(out, "{word}\t{status}")?;
    } else {
        writeln!(out, "{status}")?;
    }
    Ok(())
}

fn describe_square(w: &[Letter], sq: sfword::SquareWitness) -> String {
    format!(
        "square {} at {} (half-length {})",
        Word::from(sq.slice(w)),
        sq.start,
        sq.half_length
    )
}

fn check(words: &[Word], json: bool, out: Out) -> Result<Status, Failure> {
    let batch = words.len() > 1;
    let mut status = Status::Ok;
    for w in words {
        let sq = find_square(w);
        if sq.is_some() {
            status = Status::Negative;
        }
        if json {
            write_line(
                out,
                &json!({ "word": w, "square_free": sq.is_none(), "square": sq }),
            )?;
        } else {
            let text = match sq {
                None => "square-free".to_string(),
                Some(sq) => describe_square(w, sq),
            };
            status_line(out, batch, w, &text)?;
        }
    }
    Ok(status)
}

fn delete(w: &Word, site: DeletionSite, json: bool, out: Out) -> Result<Status, Failure> {
    let result = delete_factor(w, site)?;
    if json {
        let sq = find_square(&result);
        write_line(
            out,
            &json!({ "word": w, "site": site, "result": result, "square_free": sq.is_none(), "square": sq }),
        )?;
    } else {
        writeln!(out, "{result}")?;
    }
    Ok(Status::Ok)
}

fn irreducible(words: &[Word], k: usize, json: bool, out: Out) -> Result<Status, Failure> {
    let batch = words.len() > 1;
    let mut status = Status::Ok;
    for w in words {
        let report = match is_k_irreducible(w, k) {
            Ok(r) => r,
            Err(e @ (Error::NotSquareFree(_) | Error::TooShort { .. })) if batch => {
                eprintln!("error: {w}: {e}");
                status = Status::Negative;
                continue;
            }
            Err(e) => return Err(e.into()),
        };
        if !report.verdict {
            status = Status::Negative;
        }
        if json {
            write_line(out, &report)?;
        } else {
            status_line(out, batch, w, &describe_report(&report))?;
        }
    }
    Ok(status)
}

fn describe_report(r: &IrreducibilityReport) -> String {
    let name = if r.k == 1 {
        "irreducibly square-free".to_string()
    } else {
        format!("{}-irreducibly square-free", r.k)
    };
    match r.first_disposable {
        None => name,
        Some(site) => {
            let rest = delete_factor(&r.word, site).expect("reported sites are interior");
            format!(
                "not {name}: deleting {} at {} leaves square-free {rest}",
                Word::from(&r.word[site.start..site.start + site.length]),
                site.start
            )
        }
    }
}

fn census_csv(rows: &[CensusRow], out: Out) -> Result<(), Failure> {
    writeln!(
        out,
        "length,square_free,irreducible_raw,irreducible_canonical"
    )?;
    for r in rows {
        writeln!(
            out,
            "{},{},{},{}",
            r.length, r.square_free_count, r.irreducible_count_raw, r.irreducible_count_canonical
        )?;
    }
    Ok(())
}

fn census_table(rows: &[CensusRow], out: Out) -> Result<(), Failure> {
    writeln!(
        out,
        "{:>6}  {:>11}  {:>15}  {:>21}",
        "length", "square_free", "irreducible_raw", "irreducible_canonical"
    )?;
    for r in rows {
        writeln!(
            out,
            "{:>6}  {:>11}  {:>15}  {:>21}",
            r.length, r.square_free_count, r.irreducible_count_raw, r.irreducible_count_canonical
        )?;
    }
    Ok(())
}

fn claims_table(results: &[ClaimResult], out: Out) -> Result<(), Failure> {
    let width = results.iter().map(|r| r.claim_id.len()).max().unwrap_or(0);
    for r in results {
        writeln!(
            out,
            "{:<width$}  {:<14}  {:<9}  {}",
            r.claim_id,
            r.verdict.as_str(),
            if r.bounded { "bounded" } else { "exact" },
            r.description
        )?;
    }
    let aggregate = if all_pass(results) { "pass" } else { "fail" };
    writeln!(out, "aggregate: {aggregate}")?;
    Ok(())
}

fn morphism(m: &Morphism, op: MorphismOp, out: Out) -> Result<Status, Failure> {
    match op {
        MorphismOp::Apply { word } => {
            writeln!(out, "{}", m.apply(&input::parse(&word)?))?;
            Ok(Status::Ok)
        }
        MorphismOp::Power { n } => {
            write!(out, "{}", m.power(n)?)?;
            Ok(Status::Ok)
        }
        MorphismOp::Fixpoint { seed, length } => {
            let seed = seed
                .trim()
                .parse::<u8>()
                .ok()
                .and_then(Letter::new)
                .ok_or_else(|| Failure::Usage(format!("seed {seed:?} is not a letter")))?;
            writeln!(out, "{}", m.fixed_point_prefix(seed, length)?)?;
            Ok(Status::Ok)
        }
        MorphismOp::Crochemore { json } => {
            let outcome = crochemore_test(m);
            if json.json {
                write_pretty(out, &outcome)?;
            } else {
                match &outcome.witness {
                    None => writeln!(out, "pass")?,
                    Some(w) => writeln!(
                        out,
                        "fail: image {} of {} has {}",
                        w.image,
                        w.input,
                        describe_square(&w.image, w.square)
                    )?,
                }
            }
            Ok(verdict(outcome.pass))
        }
        MorphismOp::Align { json } => {
            let outcome = alignment_test(m);
            if json.json {
                write_pretty(out, &outcome)?;
            } else {
                match outcome.witness {
                    None => writeln!(out, "pass")?,
                    Some(w) => writeln!(
                        out,
                        "fail: image of {} occurs at offset {} of image({}{})",
                        w.a, w.offset, w.b, w.c
                    )?,
                }
            }
            Ok(verdict(outcome.pass))
        }
        MorphismOp::Procedure1 { k, json } => {
            let cert = procedure_i_k(m, k)?;
            if json.json {
                write_pretty(out, &cert)?;
            } else {
                certificate_text(&cert, out)?;
            }
            Ok(verdict(cert.procedure_pass))
        }
    }
}

fn verdict(pass: bool) -> Status {
    if pass {
        Status::Ok
    } else {
        Status::Negative
    }
}

fn certificate_text(cert: &MorphismCertificate, out: Out) -> Result<(), Failure> {
    let word = |b: bool| if b { "pass" } else { "fail" };
    writeln!(out, "crochemore: {}", word(cert.crochemore.pass))?;
    writeln!(out, "alignment: {}", word(cert.alignment.pass))?;
    for p in &cert.pair_checks {
        writeln!(
            out,
            "pair {}{} (k={}): {}",
            p.a,
            p.b,
            cert.k,
            word(p.verdict)
        )?;
    }
    writeln!(out, "procedure: {}", word(cert.procedure_pass))?;
    Ok(())
}
