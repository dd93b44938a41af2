use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest number of generators a [`GeneratorSet`] may hold; letters are
/// packed into bytes.
pub const MAX_GENERATORS: usize = 256;

/// Ordered, distinct generator names. The order fixes word comparison.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorSet {
    symbols: Arc<[String]>,
}

impl GeneratorSet {
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.len() > MAX_GENERATORS {
            return Err(Error::InvalidGenerators(format!(
                "at most {MAX_GENERATORS} generators are supported"
            )));
        }
        for (i, s) in symbols.iter().enumerate() {
            if !is_identifier(s) {
                return Err(Error::InvalidGenerators(format!("`{s}` is not an identifier")));
            }
            if symbols[..i].contains(s) {
                return Err(Error::InvalidGenerators(format!("`{s}` appears twice")));
            }
        }
        Ok(GeneratorSet { symbols: symbols.into() })
    }

    /// The two-generator set `{X, Y}`.
    pub fn xy() -> Self {
        GeneratorSet::new(["X", "Y"]).expect("valid generators")
    }

    /// Parses a comma separated list such as `"X,Y"`.
    pub fn parse_list(list: &str) -> Result<Self> {
        GeneratorSet::new(list.split(',').map(str::trim))
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn name(&self, index: u8) -> &str {
        &self.symbols[index as usize]
    }

    pub fn index_of(&self, name: &str) -> Option<u8> {
        self.symbols.iter().position(|s| s == name).map(|i| i as u8)
    }

    /// True when every generator name is a single character, so words can
    /// be written by juxtaposing names without ambiguity.
    pub fn single_char_names(&self) -> bool {
        self.symbols.iter().all(|s| s.chars().count() == 1)
    }

    pub(crate) fn check_same(&self, other: &GeneratorSet) -> Result<()> {
        if Arc::ptr_eq(&self.symbols, &other.symbols) || self.symbols == other.symbols {
            Ok(())
        } else {
            Err(Error::GeneratorMismatch { left: self.to_string(), right: other.to_string() })
        }
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbols.join(","))
    }
}

impl fmt::Debug for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GeneratorSet[{self}]")
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
