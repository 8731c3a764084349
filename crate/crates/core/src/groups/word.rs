use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A freely reduced word: syllables `g^e` with nonzero exponents and no two
/// adjacent syllables on the same generator.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    syllables: Vec<(char, i64)>,
}

/// Freely reduces an arbitrary syllable sequence.
pub fn free_reduce<I: IntoIterator<Item = (char, i64)>>(raw: I) -> FreeWord {
    let mut out: Vec<(char, i64)> = Vec::new();
    for (g, e) in raw {
        if e == 0 {
            continue;
        }
        match out.last_mut() {
            Some((h, f)) if *h == g => {
                *f += e;
                if *f == 0 {
                    out.pop();
                }
            }
            _ => out.push((g, e)),
        }
    }
    FreeWord { syllables: out }
}

impl FreeWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn gen(g: char) -> Self {
        Self::power(g, 1)
    }

    pub fn power(g: char, e: i64) -> Self {
        free_reduce([(g, e)])
    }

    pub fn syllables(&self) -> &[(char, i64)] {
        &self.syllables
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of syllables.
    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    /// Word length in letters, `Σ |e|`.
    pub fn letter_len(&self) -> u64 {
        self.syllables.iter().map(|(_, e)| e.unsigned_abs()).sum()
    }

    pub fn inverse(&self) -> Self {
        FreeWord {
            syllables: self.syllables.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    pub fn mul(&self, rhs: &FreeWord) -> FreeWord {
        free_reduce(self.syllables.iter().chain(rhs.syllables.iter()).copied())
    }

    pub fn pow(&self, n: i64) -> FreeWord {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let reps = n.unsigned_abs() as usize;
        free_reduce(base.syllables.iter().copied().cycle().take(base.len() * reps))
    }

    /// `g^-1 self g`.
    pub fn conjugate_by(&self, g: &FreeWord) -> FreeWord {
        g.inverse().mul(self).mul(g)
    }

    /// Sum of exponents of `g`.
    pub fn exponent_sum(&self, g: char) -> i64 {
        self.syllables.iter().filter(|(h, _)| *h == g).map(|(_, e)| e).sum()
    }

    /// Fails with [`Error::UnknownGenerator`] on a letter outside `alphabet`.
    pub fn check_alphabet(&self, alphabet: &[char]) -> Result<()> {
        match self.syllables.iter().find(|(g, _)| !alphabet.contains(g)) {
            Some(&(g, _)) => Err(Error::UnknownGenerator(g)),
            None => Ok(()),
        }
    }

    /// Replaces every generator by a word.
    pub fn substitute(&self, image: impl Fn(char) -> FreeWord) -> FreeWord {
        self.syllables
            .iter()
            .fold(FreeWord::identity(), |acc, &(g, e)| acc.mul(&image(g).pow(e)))
    }

    /// Splits the word into single letters `(g, ±1)`.
    pub fn letters(&self) -> impl Iterator<Item = (char, i64)> + '_ {
        self.syllables
            .iter()
            .flat_map(|&(g, e)| std::iter::repeat_n((g, e.signum()), e.unsigned_abs() as usize))
    }

    /// Parses `"b^-1 a a"`, `"aba^-1b^-1"`, `"x^2 z"`; `"1"` or `""` is the identity.
    pub fn parse(s: &str) -> Result<FreeWord> {
        let chars: Vec<char> = s.chars().collect();
        let mut raw = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            if c.is_whitespace() || c == '*' || c == '.' {
                i += 1;
                continue;
            }
            if c == '1' {
                i += 1;
                continue;
            }
            if !c.is_ascii_alphabetic() {
                return Err(Error::Parse(format!("unexpected `{c}` in word `{s}`")));
            }
            i += 1;
            let mut exp = 1i64;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let start = i;
                if i < chars.len() && (chars[i] == '-' || chars[i] == '+') {
                    i += 1;
                }
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                exp = digits
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent `{digits}` in `{s}`")))?;
            }
            raw.push((c, exp));
        }
        Ok(free_reduce(raw))
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return write!(f, "1");
        }
        for (i, &(g, e)) in self.syllables.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for FreeWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FreeWord::parse(s)
    }
}

impl Serialize for FreeWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> FreeWord {
        FreeWord::parse(s).unwrap()
    }

    #[test]
    fn reduction() {
        assert!(free_reduce([('a', 1), ('a', -1)]).is_empty());
        assert_eq!(free_reduce([('a', 1), ('b', 1), ('b', -1), ('a', 1)]), FreeWord::power('a', 2));
        assert_eq!(free_reduce([('b', 2), ('b', 3)]), FreeWord::power('b', 5));
        assert_eq!(free_reduce([('a', 1), ('b', 1), ('b', -1), ('a', -1), ('c', 0)]), FreeWord::identity());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(w("b^-1 a a").to_string(), "b^-1 a^2");
        assert_eq!(w("aba^-1b^-1").len(), 4);
        assert_eq!(w("1"), FreeWord::identity());
        assert_eq!(w(""), FreeWord::identity());
        assert_eq!(w("x^+3 z"), free_reduce([('x', 3), ('z', 1)]));
        assert!(FreeWord::parse("a^").is_err());
        assert!(FreeWord::parse("a^-").is_err());
        assert!(FreeWord::parse("a + b").is_err());
    }

    #[test]
    fn group_operations() {
        let g = w("a b^2");
        assert!(g.mul(&g.inverse()).is_empty());
        assert_eq!(g.pow(2), w("a b^2 a b^2"));
        assert_eq!(g.pow(-1), g.inverse());
        assert_eq!(w("b").conjugate_by(&w("a")), w("a^-1 b a"));
        assert_eq!(w("a b a^-3").exponent_sum('a'), -2);
        assert_eq!(w("a b").letters().count(), 2);
        assert_eq!(w("c").substitute(|g| if g == 'c' { w("b a^-1") } else { FreeWord::gen(g) }), w("b a^-1"));
    }
}
