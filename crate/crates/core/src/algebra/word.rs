use std::cmp::Ordering;

use super::generators::GeneratorSet;

/// A monomial of the free algebra: a finite sequence of generator indices.
/// The empty word is the identity monomial.
///
/// Words are ordered by length first, then lexicographically by index.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    pub fn letter(index: u8) -> Self {
        Word(vec![index])
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.0.len() + other.0.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn repeat(&self, times: usize) -> Word {
        Word(self.0.repeat(times))
    }

    /// The rotation starting at `shift`.
    pub fn rotate(&self, shift: usize) -> Word {
        if self.0.is_empty() {
            return self.clone();
        }
        let shift = shift % self.0.len();
        let mut letters = Vec::with_capacity(self.0.len());
        letters.extend_from_slice(&self.0[shift..]);
        letters.extend_from_slice(&self.0[..shift]);
        Word(letters)
    }

    pub(crate) fn max_letter(&self) -> Option<u8> {
        self.0.iter().copied().max()
    }

    /// Generator names joined by `*`; the empty word renders as `1`.
    pub fn render_product(&self, gens: &GeneratorSet) -> String {
        if self.0.is_empty() {
            return "1".to_owned();
        }
        self.0.iter().map(|&i| gens.name(i)).collect::<Vec<_>>().join("*")
    }

    /// Compact label used in JSON: names juxtaposed when they are all one
    /// character long, otherwise joined by `*`. The empty word is `1`.
    pub fn label(&self, gens: &GeneratorSet) -> String {
        if self.0.is_empty() {
            "1".to_owned()
        } else if gens.single_char_names() {
            self.0.iter().map(|&i| gens.name(i)).collect()
        } else {
            self.render_product(gens)
        }
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Word{:?}", self.0)
    }
}
