//! Ternary morphisms: application, powers, fixed points and the text spec
//! format.

mod certify;

pub use certify::{
    alignment_test, crochemore_test, procedure_i, procedure_i_k, AlignmentOutcome,
    AlignmentWitness, CrochemoreOutcome, CrochemoreWitness, MorphismCertificate, PairCheck,
};

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::word::{word, Letter, Word};

/// A morphism on words over {0, 1, 2}, given by three nonempty images.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    images: [Word; 3],
}

impl Morphism {
    pub fn new(images: [Word; 3]) -> Result<Morphism> {
        for (a, image) in images.iter().enumerate() {
            if image.is_empty() {
                return Err(Error::EmptyImage { letter: a as u8 });
            }
        }
        Ok(Morphism { images })
    }

    /// Builds a morphism from digit-string images. Panics on malformed
    /// input; meant for literals.
    pub fn from_strs(images: [&str; 3]) -> Morphism {
        Morphism::new(images.map(word)).expect("literal morphism images are nonempty")
    }

    /// The Thue morphism `0 -> 012, 1 -> 02, 2 -> 1`.
    pub fn tau() -> Morphism {
        Morphism::from_strs(["012", "02", "1"])
    }

    /// The uniform palindromic morphism of length 17 whose images are the
    /// cyclic relabellings of `01202120102120210`.
    pub fn phi() -> Morphism {
        Morphism::from_strs([
            "01202120102120210",
            "12010201210201021",
            "20121012021012102",
        ])
    }

    /// A morphism whose fixed point avoids disposable factors of length 3.
    pub fn alpha3() -> Morphism {
        Morphism::from_strs(["0121012", "01020120212", "0102101210212"])
    }

    /// Looks up a built-in by name: `tau`, `phi` or `alpha3`.
    pub fn builtin(name: &str) -> Option<Morphism> {
        match name {
            "tau" => Some(Morphism::tau()),
            "phi" => Some(Morphism::phi()),
            "alpha3" => Some(Morphism::alpha3()),
            _ => None,
        }
    }

    #[inline]
    pub fn image(&self, a: Letter) -> &Word {
        &self.images[a.index()]
    }

    pub fn images(&self) -> &[Word; 3] {
        &self.images
    }

    pub fn image_length(&self, a: Letter) -> usize {
        self.image(a).len()
    }

    pub fn max_image_length(&self) -> usize {
        self.images.iter().map(|w| w.len()).max().unwrap_or(0)
    }

    pub fn is_uniform(&self) -> bool {
        self.images.iter().all(|w| w.len() == self.images[0].len())
    }

    /// The image of `a` starts with `a` and is at least two letters long.
    pub fn is_prolongable_on(&self, a: Letter) -> bool {
        let image = self.image(a);
        image.len() >= 2 && image[0] == a
    }

    pub fn apply(&self, w: &[Letter]) -> Word {
        let len = w.iter().map(|&a| self.image_length(a)).sum();
        let mut out = Vec::with_capacity(len);
        for &a in w {
            out.extend_from_slice(self.image(a));
        }
        Word::from(out)
    }

    /// The morphism `a -> self^n(a)`.
    pub fn power(&self, n: usize) -> Result<Morphism> {
        if n == 0 {
            return Err(Error::OutOfRange {
                what: "power",
                value: 0,
                min: 1,
                max: usize::MAX,
            });
        }
        let mut images = self.images.clone();
        for _ in 1..n {
            images = images.map(|w| self.apply(&w));
        }
        Ok(Morphism { images })
    }

    /// Length-`len` prefix of the fixed point obtained by iterating on `seed`.
    ///
    /// The fixed point `x` satisfies `x = m(x0) m(x1) ...`, so the output is
    /// grown by expanding its own letters in order. At most one image beyond
    /// the request is materialised.
    pub fn fixed_point_prefix(&self, seed: Letter, len: usize) -> Result<Word> {
        if !self.is_prolongable_on(seed) {
            return Err(Error::NotProlongable {
                letter: seed.value(),
            });
        }
        let mut out: Vec<Letter> = Vec::with_capacity(len + self.max_image_length());
        out.extend_from_slice(self.image(seed));
        let mut next = 1;
        while out.len() < len {
            let a = out[next];
            out.extend_from_slice(self.image(a));
            next += 1;
        }
        out.truncate(len);
        Ok(Word::from(out))
    }

    /// Parses the three-line spec format, e.g. `0 -> 012`. Blank lines and
    /// lines starting with `#` are ignored; each letter must be defined once.
    pub fn parse_spec(text: &str) -> Result<Morphism> {
        let mut images: [Option<Word>; 3] = [None, None, None];
        let mut defined = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::MorphismSpec {
                line: line_no,
                message,
            };
            let (lhs, rhs) = line
                .split_once("->")
                .ok_or_else(|| err("expected `<letter> -> <image>`".into()))?;
            let lhs = lhs.trim();
            let mut chars = lhs.chars();
            let letter = match (chars.next().and_then(Letter::from_char), chars.next()) {
                (Some(a), None) => a,
                _ => return Err(err(format!("{lhs:?} is not a letter"))),
            };
            let rhs = rhs.trim();
            if rhs.is_empty() {
                return Err(err(format!("empty image for {letter}")));
            }
            let image = Word::parse(rhs).map_err(|e| err(e.to_string()))?;
            if images[letter.index()].is_some() {
                return Err(err(format!("image of {letter} defined twice")));
            }
            images[letter.index()] = Some(image);
            defined += 1;
            if defined > 3 {
                return Err(err("more than three images".into()));
            }
        }
        let last_line = text.lines().count().max(1);
        match images {
            [Some(a), Some(b), Some(c)] => Morphism::new([a, b, c]),
            _ => {
                let missing = images.iter().position(|w| w.is_none()).unwrap_or(0);
                Err(Error::MorphismSpec {
                    line: last_line,
                    message: format!("no image given for {missing}"),
                })
            }
        }
    }

    /// Writes the spec format, one image per line.
    pub fn to_spec(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, image) in self.images.iter().enumerate() {
            writeln!(f, "{a} -> {image}")?;
        }
        Ok(())
    }
}

impl FromStr for Morphism {
    type Err = Error;

    fn from_str(s: &str) -> Result<Morphism> {
        Morphism::parse_spec(s)
    }
}

impl Serialize for Morphism {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(3))?;
        for (a, image) in self.images.iter().enumerate() {
            map.serialize_entry(&a.to_string(), image)?;
        }
        map.end()
    }
}

pub fn apply_morphism(m: &Morphism, w: &[Letter]) -> Word {
    m.apply(w)
}

pub fn fixed_point_prefix(m: &Morphism, seed: Letter, len: usize) -> Result<Word> {
    m.fixed_point_prefix(seed, len)
}
