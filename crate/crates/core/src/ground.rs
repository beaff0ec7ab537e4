use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::set::{ElementSet, MAX_UNIVERSE};

/// Ordered universe of named elements. Element `i` is the `i`-th name.
#[derive(Clone, PartialEq, Eq)]
pub struct GroundSet {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl GroundSet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge {
                size: names.len(),
                limit: MAX_UNIVERSE,
            });
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            let bad = name.is_empty()
                || name
                    .chars()
                    .any(|c| c.is_whitespace() || matches!(c, ',' | '#' | '{' | '}'))
                || name == "->"
                || name == "<";
            if bad {
                return Err(Error::BadElementName(name.clone()));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateElement(name.clone()));
            }
        }
        Ok(GroundSet { names, index })
    }

    /// `a, b, c, ...` for the first `n` letters (then `e26`, `e27`, ...).
    pub fn letters(n: usize) -> Result<Self> {
        GroundSet::new((0..n).map(|i| {
            if i < 26 {
                char::from(b'a' + i as u8).to_string()
            } else {
                format!("e{i}")
            }
        }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn full(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    pub fn set<I, S>(&self, names: I) -> Result<ElementSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        names
            .into_iter()
            .map(|n| self.index_of(n.as_ref()))
            .collect::<Result<ElementSet>>()
    }

    /// Parses a comma- or whitespace-separated list of names. An empty string
    /// is the empty set.
    pub fn parse_set(&self, text: &str) -> Result<ElementSet> {
        self.set(
            text.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty()),
        )
    }

    /// Checks that `s` lies within this universe.
    pub fn check(&self, s: ElementSet) -> Result<ElementSet> {
        if s.fits(self.len()) {
            Ok(s)
        } else {
            Err(Error::OutsideUniverse)
        }
    }

    pub fn set_names(&self, s: ElementSet) -> Vec<&str> {
        s.iter().map(|i| self.name(i)).collect()
    }

    /// `{a,b,c}`; `{}` for the empty set.
    pub fn format_set(&self, s: ElementSet) -> String {
        format!("{{{}}}", self.set_names(s).join(","))
    }
}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.names).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_bad_names() {
        assert_eq!(
            GroundSet::new(["a", "b", "a"]),
            Err(Error::DuplicateElement("a".into()))
        );
        assert!(matches!(GroundSet::new(["a", ""]), Err(Error::BadElementName(_))));
        assert!(matches!(GroundSet::new(["x y"]), Err(Error::BadElementName(_))));
    }

    #[test]
    fn rejects_oversized_universe() {
        let names: Vec<String> = (0..65).map(|i| format!("v{i}")).collect();
        assert_eq!(
            GroundSet::new(names),
            Err(Error::UniverseTooLarge { size: 65, limit: 64 })
        );
        assert!(GroundSet::letters(64).is_ok());
    }

    #[test]
    fn parse_and_format() {
        let g = GroundSet::letters(6).unwrap();
        let s = g.parse_set("c, a f").unwrap();
        assert_eq!(g.format_set(s), "{a,c,f}");
        assert_eq!(g.parse_set("").unwrap(), ElementSet::EMPTY);
        assert_eq!(g.parse_set("z"), Err(Error::UnknownElement("z".into())));
        assert_eq!(g.check(ElementSet::singleton(7)), Err(Error::OutsideUniverse));
    }
}
