//! Finitely presented groups and their finite-quotient fingerprints.
//!
//! A presentation is written in a small ASCII grammar:
//!
//! ```text
//! gen1 gen2 ... | relator (, relator)*
//! ```
//!
//! Generators are single lowercase letters. A relator word is a sequence of
//! whitespace-separated letters, lowercase for a generator and uppercase
//! for its inverse; `u = v` is sugar for the relator `u v^-1`. The trefoil
//! group, for instance, is `a b | a a = b b b`.
//!
//! On top of presentations this module computes abelianizations (through
//! the Smith normal form), counts epimorphisms onto finite groups realized
//! by permutation generators, and compares the resulting quotient
//! fingerprints — the computable shadow of the set of finite quotients.

mod catalog;
mod epi;
mod fingerprint;
mod table;

pub use catalog::{
    build_catalog_group, catalog_version, default_catalog, Catalog, CatalogEntry, CatalogError,
    CatalogId, GroupFamily, DEFAULT_MAX_ORDER,
};
pub use epi::{count_epimorphisms, epimorphisms, exists_epimorphism};
pub use fingerprint::{
    abelian_epi_exists, compare_fingerprints, quotient_fingerprint, CatalogMismatch, DiffEntry,
    DiffSide, FingerprintDiff, QuotientFingerprint,
};
pub use table::{FiniteGroupTable, Perm};

use crate::zlinalg::{cokernel_invariants, HomologySummary, IntMatrix};
use num_bigint::BigInt;
use std::fmt;

/// A freely reduced word in the generators of a presentation. Letters are
/// nonzero integers: +(i+1) is generator i, -(i+1) its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<i32>,
}

impl Word {
    pub fn from_letters(letters: Vec<i32>) -> Word {
        let mut w = Word {
            letters: Vec::with_capacity(letters.len()),
        };
        for l in letters {
            assert!(l != 0, "letters are nonzero signed generator indices");
            w.push_reduced(l);
        }
        w
    }

    pub fn empty() -> Word {
        Word {
            letters: Vec::new(),
        }
    }

    fn push_reduced(&mut self, letter: i32) {
        if self.letters.last() == Some(&-letter) {
            self.letters.pop();
        } else {
            self.letters.push(letter);
        }
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &l in &other.letters {
            w.push_reduced(l);
        }
        w
    }

    /// Net exponent of each generator, the abelianized image.
    pub fn exponent_sums(&self, num_gens: usize) -> Vec<i64> {
        let mut sums = vec![0i64; num_gens];
        for &l in &self.letters {
            let idx = (l.unsigned_abs() as usize) - 1;
            sums[idx] += if l > 0 { 1 } else { -1 };
        }
        sums
    }

    fn max_generator(&self) -> Option<usize> {
        self.letters
            .iter()
            .map(|l| (l.unsigned_abs() as usize) - 1)
            .max()
    }
}

/// A finitely presented group: generator names and freely reduced relators.
/// Relators that reduce to the empty word are dropped at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

/// Parse errors carry the byte offset into the input text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PresentationError {
    Parse { position: usize, message: String },
    UnknownGenerator { position: usize, letter: char },
}

impl fmt::Display for PresentationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PresentationError::Parse { position, message } => {
                write!(f, "parse error at byte {}: {}", position, message)
            }
            PresentationError::UnknownGenerator { position, letter } => {
                write!(f, "unknown generator '{}' at byte {}", letter, position)
            }
        }
    }
}

impl std::error::Error for PresentationError {}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Presentation {
        for g in &generators {
            assert!(
                g.len() == 1 && g.chars().all(|c| c.is_ascii_lowercase()),
                "generator names are single lowercase letters"
            );
        }
        assert!(!generators.is_empty(), "at least one generator");
        let n = generators.len();
        let relators = relators
            .into_iter()
            .inspect(|w| {
                if let Some(max) = w.max_generator() {
                    assert!(max < n, "relator references undeclared generator");
                }
            })
            .filter(|w| !w.is_empty())
            .collect();
        Presentation {
            generators,
            relators,
        }
    }

    pub fn parse(text: &str) -> Result<Presentation, PresentationError> {
        parse_presentation(text)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Canonical text form; `parse` of the output reproduces the value.
    pub fn to_text(&self) -> String {
        let gens = self.generators.join(" ");
        if self.relators.is_empty() {
            return gens;
        }
        let rels = self
            .relators
            .iter()
            .map(|w| self.word_to_text(w))
            .collect::<Vec<_>>()
            .join(", ");
        format!("{} | {}", gens, rels)
    }

    pub fn word_to_text(&self, w: &Word) -> String {
        w.letters()
            .iter()
            .map(|&l| {
                let name = &self.generators[(l.unsigned_abs() as usize) - 1];
                let c = name.chars().next().unwrap();
                if l > 0 {
                    c.to_string()
                } else {
                    c.to_ascii_uppercase().to_string()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Invariants of the abelianization: Smith normal form of the matrix of
    /// relator exponent sums (generators x relators).
    pub fn abelianization(&self) -> HomologySummary {
        let n = self.generators.len();
        if self.relators.is_empty() {
            return HomologySummary::free(n);
        }
        let mut entries = vec![BigInt::from(0); n * self.relators.len()];
        for (j, rel) in self.relators.iter().enumerate() {
            for (i, e) in rel.exponent_sums(n).into_iter().enumerate() {
                entries[i * self.relators.len() + j] = BigInt::from(e);
            }
        }
        let matrix = IntMatrix::new(n, self.relators.len(), entries);
        cokernel_invariants(&matrix)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Token {
    Letter(char),
    Pipe,
    Comma,
    Equals,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, PresentationError> {
    let mut tokens = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some((pos, c)) = chars.next() {
        let token = match c {
            c if c.is_whitespace() => continue,
            '|' => Token::Pipe,
            ',' => Token::Comma,
            '=' => Token::Equals,
            c if c.is_ascii_alphabetic() => {
                if let Some(&(_, next)) = chars.peek() {
                    if next.is_ascii_alphanumeric() {
                        return Err(PresentationError::Parse {
                            position: pos,
                            message: "letters must be single characters separated by spaces"
                                .to_string(),
                        });
                    }
                }
                Token::Letter(c)
            }
            other => {
                return Err(PresentationError::Parse {
                    position: pos,
                    message: format!("unexpected character '{}'", other),
                })
            }
        };
        tokens.push((pos, token));
    }
    Ok(tokens)
}

fn parse_presentation(text: &str) -> Result<Presentation, PresentationError> {
    let tokens = tokenize(text)?;
    let pipe_at = tokens.iter().position(|(_, t)| *t == Token::Pipe);
    let (gen_tokens, rel_tokens) = match pipe_at {
        Some(i) => (&tokens[..i], &tokens[i + 1..]),
        None => (&tokens[..], &[][..]),
    };
    if rel_tokens.iter().any(|(_, t)| *t == Token::Pipe) {
        let (pos, _) = rel_tokens.iter().find(|(_, t)| *t == Token::Pipe).unwrap();
        return Err(PresentationError::Parse {
            position: *pos,
            message: "more than one '|'".to_string(),
        });
    }

    let mut generators: Vec<String> = Vec::new();
    for (pos, t) in gen_tokens {
        match t {
            Token::Letter(c) if c.is_ascii_lowercase() => {
                let name = c.to_string();
                if generators.contains(&name) {
                    return Err(PresentationError::Parse {
                        position: *pos,
                        message: format!("duplicate generator '{}'", c),
                    });
                }
                generators.push(name);
            }
            Token::Letter(c) => {
                return Err(PresentationError::Parse {
                    position: *pos,
                    message: format!("generator names are lowercase, got '{}'", c),
                })
            }
            _ => {
                return Err(PresentationError::Parse {
                    position: *pos,
                    message: "expected a generator name before '|'".to_string(),
                })
            }
        }
    }
    if generators.is_empty() {
        return Err(PresentationError::Parse {
            position: 0,
            message: "no generators declared".to_string(),
        });
    }

    let lookup = |c: char, pos: usize| -> Result<i32, PresentationError> {
        let lower = c.to_ascii_lowercase();
        let idx = generators
            .iter()
            .position(|g| g == &lower.to_string())
            .ok_or(PresentationError::UnknownGenerator {
                position: pos,
                letter: c,
            })?;
        let signed = (idx + 1) as i32;
        Ok(if c.is_ascii_lowercase() {
            signed
        } else {
            -signed
        })
    };

    let mut relators = Vec::new();
    for group in rel_tokens.split(|(_, t)| *t == Token::Comma) {
        if group.is_empty() {
            // trailing or doubled comma, or an empty relator section
            if rel_tokens.is_empty() {
                break;
            }
            return Err(PresentationError::Parse {
                position: rel_tokens.last().unwrap().0,
                message: "empty relator".to_string(),
            });
        }
        let sides: Vec<&[(usize, Token)]> = group.split(|(_, t)| *t == Token::Equals).collect();
        if sides.len() > 2 {
            return Err(PresentationError::Parse {
                position: group[0].0,
                message: "at most one '=' per relator".to_string(),
            });
        }
        let mut words = Vec::new();
        for side in &sides {
            let mut letters = Vec::new();
            for (pos, t) in *side {
                match t {
                    Token::Letter(c) => letters.push(lookup(*c, *pos)?),
                    _ => {
                        return Err(PresentationError::Parse {
                            position: *pos,
                            message: "expected a letter".to_string(),
                        })
                    }
                }
            }
            if letters.is_empty() {
                return Err(PresentationError::Parse {
                    position: group[0].0,
                    message: "empty word in relator".to_string(),
                });
            }
            words.push(Word::from_letters(letters));
        }
        let relator = if words.len() == 2 {
            words[0].concat(&words[1].inverse())
        } else {
            words.into_iter().next().unwrap()
        };
        relators.push(relator);
    }

    Ok(Presentation::new(generators, relators))
}

/// The figure-eight knot group presentation on two meridians.
pub fn figure_eight_presentation() -> Presentation {
    Presentation::parse("x y | y x Y x y = x y X y x").unwrap()
}

/// The trefoil knot group, `a b | a a = b b b`.
pub fn trefoil_presentation() -> Presentation {
    Presentation::parse("a b | a a = b b b").unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_figure_eight() {
        let p = figure_eight_presentation();
        assert_eq!(p.generators(), &["x".to_string(), "y".to_string()]);
        assert_eq!(p.relators().len(), 1);
        // y x Y x y (x y X y x)^-1 = y x Y x y X Y x Y X, length 10
        assert_eq!(p.relators()[0].letters().len(), 10);
    }

    #[test]
    fn parse_trefoil() {
        let p = trefoil_presentation();
        // a a (b b b)^-1 = a a B B B
        assert_eq!(p.relators()[0].letters(), &[1, 1, -2, -2, -2]);
    }

    #[test]
    fn parse_cyclic_five() {
        let p = Presentation::parse("a | a a a a a").unwrap();
        assert_eq!(p.relators()[0].letters(), &[1, 1, 1, 1, 1]);
    }

    #[test]
    fn parse_free_group() {
        let p = Presentation::parse("a b").unwrap();
        assert!(p.relators().is_empty());
        let p2 = Presentation::parse("a b |").unwrap();
        assert_eq!(p, p2);
    }

    #[test]
    fn parse_errors_carry_positions() {
        match Presentation::parse("a b | a c") {
            Err(PresentationError::UnknownGenerator {
                letter: 'c',
                position,
            }) => {
                assert_eq!(position, 8);
            }
            other => panic!("expected unknown generator, got {:?}", other),
        }
        assert!(matches!(
            Presentation::parse("a b | a,"),
            Err(PresentationError::Parse { .. })
        ));
        assert!(matches!(
            Presentation::parse("ab | a"),
            Err(PresentationError::Parse { position: 0, .. })
        ));
        assert!(matches!(
            Presentation::parse("a a | a"),
            Err(PresentationError::Parse { .. })
        ));
        assert!(matches!(
            Presentation::parse(""),
            Err(PresentationError::Parse { .. })
        ));
    }

    #[test]
    fn words_reduce_freely() {
        let w = Word::from_letters(vec![1, 2, -2, -1, 1]);
        assert_eq!(w.letters(), &[1]);
        let u = Word::from_letters(vec![1, 2]);
        assert_eq!(u.concat(&u.inverse()).letters(), &[] as &[i32]);
    }

    #[test]
    fn round_trip_text() {
        for text in [
            "x y | y x Y x y X Y x Y X",
            "a b | a a B B B",
            "a | a a a a a",
            "a b t | t a T A, t b T A B",
            "a b",
        ] {
            let p = Presentation::parse(text).unwrap();
            assert_eq!(p.to_text(), text);
            assert_eq!(Presentation::parse(&p.to_text()).unwrap(), p);
        }
    }

    #[test]
    fn abelianization_examples() {
        let fig8 = figure_eight_presentation().abelianization();
        assert_eq!(fig8, HomologySummary::free(1));
        let tref = trefoil_presentation().abelianization();
        assert_eq!(tref, HomologySummary::free(1));
        let c5 = Presentation::parse("a | a a a a a")
            .unwrap()
            .abelianization();
        assert_eq!(c5.b1, 0);
        assert_eq!(c5.torsion, vec![BigInt::from(5)]);
        let free2 = Presentation::parse("a b").unwrap().abelianization();
        assert_eq!(free2, HomologySummary::free(2));
    }
}
