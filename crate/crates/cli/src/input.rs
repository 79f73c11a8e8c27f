use std::io::{self, BufRead};

use sfword::Word;

use crate::Failure;

pub fn parse(text: &str) -> Result<Word, Failure> {
    Word::parse(text.trim()).map_err(|e| Failure::Usage(format!("{text:?}: {e}")))
}

/// Positional words, or one word per nonblank stdin line when none are given.
pub fn words(positional: &[String]) -> Result<Vec<Word>, Failure> {
    if !positional.is_empty() {
        return positional.iter().map(|s| parse(s)).collect();
    }
    let mut out = Vec::new();
    for line in io::stdin().lock().lines() {
        let line = line?;
        if !line.trim().is_empty() {
            out.push(parse(&line)?);
        }
    }
    if out.is_empty() {
        return Err(Failure::Usage(
            "no words given on the command line or stdin".into(),
        ));
    }
    Ok(out)
}
