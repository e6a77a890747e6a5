use std::fmt;

use crate::abgroups::NamedWord;
use crate::error::{domain, Result};

/// The elementary generator `E_ij` (one-based, `i != j`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct GenSymbol {
    pub i: usize,
    pub j: usize,
}

impl GenSymbol {
    pub fn new(i: usize, j: usize, d: usize) -> Result<Self> {
        if i == j || i == 0 || j == 0 || i > d || j > d {
            return domain(format!("no generator E({i},{j}) in dimension {d}"));
        }
        Ok(GenSymbol { i, j })
    }

    /// All `E_ij` in lexicographic order.
    pub fn all(d: usize) -> Vec<GenSymbol> {
        let mut out = Vec::with_capacity(d * d.saturating_sub(1));
        for i in 1..=d {
            for j in 1..=d {
                if i != j {
                    out.push(GenSymbol { i, j });
                }
            }
        }
        out
    }

    pub fn transposed(self) -> Self {
        GenSymbol { i: self.j, j: self.i }
    }
}

impl fmt::Display for GenSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.i < 10 && self.j < 10 {
            write!(f, "E{}{}", self.i, self.j)
        } else {
            write!(f, "E({},{})", self.i, self.j)
        }
    }
}

/// A word in the generators, each letter with exponent `+1` or `-1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word {
    letters: Vec<(GenSymbol, i8)>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn letter(g: GenSymbol) -> Self {
        Word { letters: vec![(g, 1)] }
    }

    pub fn letter_inv(g: GenSymbol) -> Self {
        Word { letters: vec![(g, -1)] }
    }

    pub fn from_letters(letters: Vec<(GenSymbol, i8)>) -> Result<Self> {
        if letters.iter().any(|&(_, e)| e != 1 && e != -1) {
            return domain("word exponents must be +1 or -1");
        }
        Ok(Word { letters })
    }

    pub fn letters(&self) -> &[(GenSymbol, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    pub fn pow(&self, k: usize) -> Word {
        Word { letters: self.letters.repeat(k) }
    }

    /// `a b a^-1 b^-1`.
    pub fn commutator(a: &Word, b: &Word) -> Word {
        a.concat(b).concat(&a.inverse()).concat(&b.inverse())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&(g, e)| if e == 1 { g.to_string() } else { format!("{g}^-1") })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Number of relators returned by [`steinberg_relations`].
pub fn steinberg_relator_count(d: usize) -> usize {
    d * (d - 1) * (d - 2) * (d + 1) / 2 + 1
}

/// Relators of the Steinberg presentation of `SL_d(Z)`, `d >= 3`:
///
/// * `[E_ij, E_kl]` for `j != k`, `i != l`, one per unordered pair;
/// * `[E_ij, E_jl] E_il^-1` for distinct `i, j, l`;
/// * `(E_12 E_21^-1 E_12)^4`.
pub fn steinberg_relations(d: usize) -> Result<Vec<Word>> {
    if d < 3 {
        return domain(format!("the Steinberg presentation needs d >= 3, got {d}"));
    }
    let gens = GenSymbol::all(d);
    let mut out = Vec::with_capacity(steinberg_relator_count(d));
    for (a, &x) in gens.iter().enumerate() {
        for &y in &gens[a + 1..] {
            if x.j != y.i && x.i != y.j {
                out.push(Word::commutator(&Word::letter(x), &Word::letter(y)));
            }
        }
    }
    for i in 1..=d {
        for j in 1..=d {
            for l in 1..=d {
                if i == j || j == l || i == l {
                    continue;
                }
                let c = Word::commutator(&Word::letter(GenSymbol { i, j }), &Word::letter(GenSymbol { i: j, j: l }));
                out.push(c.concat(&Word::letter_inv(GenSymbol { i, j: l })));
            }
        }
    }
    let e12 = GenSymbol { i: 1, j: 2 };
    let w = Word::letter(e12).concat(&Word::letter_inv(e12.transposed())).concat(&Word::letter(e12));
    out.push(w.pow(4));
    Ok(out)
}

/// Generator names and relators of the Steinberg presentation in the form
/// used by [`crate::abgroups::abelianize_presentation`].
pub fn steinberg_presentation(d: usize) -> Result<(Vec<String>, Vec<NamedWord>)> {
    let relators = steinberg_relations(d)?
        .iter()
        .map(|w| w.letters().iter().map(|&(g, e)| (g.to_string(), i64::from(e))).collect())
        .collect();
    Ok((GenSymbol::all(d).iter().map(ToString::to_string).collect(), relators))
}

#[cfg(test)]
mod tests {
    use super::*;

    // Count relators straight from the index conditions over ordered tuples.
    fn brute_count(d: usize) -> usize {
        let gens = GenSymbol::all(d);
        let mut ordered = 0;
        for x in &gens {
            for y in &gens {
                if x != y && x.j != y.i && x.i != y.j {
                    ordered += 1;
                }
            }
        }
        let triples = (1..=d)
            .flat_map(|i| (1..=d).flat_map(move |j| (1..=d).map(move |l| (i, j, l))))
            .filter(|&(i, j, l)| i != j && j != l && i != l)
            .count();
        ordered / 2 + triples + 1
    }

    #[test]
    fn relator_counts() {
        assert_eq!(steinberg_relations(3).unwrap().len(), 13);
        for d in 3..=6 {
            assert_eq!(steinberg_relations(d).unwrap().len(), brute_count(d));
            assert_eq!(steinberg_relator_count(d), brute_count(d));
        }
        assert!(steinberg_relations(2).is_err());
    }

    #[test]
    fn abelianizations_are_trivial() {
        for d in 3..=5 {
            let (gens, rels) = steinberg_presentation(d).unwrap();
            assert!(crate::abgroups::abelianize_presentation(&gens, &rels).unwrap().is_trivial());
        }
    }

    #[test]
    fn words() {
        let e12 = GenSymbol::new(1, 2, 3).unwrap();
        let e23 = GenSymbol::new(2, 3, 3).unwrap();
        let c = Word::commutator(&Word::letter(e12), &Word::letter(e23));
        assert_eq!(c.to_string(), "E12 E23 E12^-1 E23^-1");
        assert_eq!(c.inverse().inverse(), c);
        assert!(GenSymbol::new(2, 2, 3).is_err());
        assert!(GenSymbol::new(1, 4, 3).is_err());
        assert!(Word::from_letters(vec![(e12, 2)]).is_err());
        assert_eq!(Word::empty().to_string(), "1");
    }
}
