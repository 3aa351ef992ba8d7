use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// The multiset `A = {a_1, ..., a_n}` of positive integers.
///
/// Order is kept as given and repeats are allowed; every formula downstream
/// is symmetric in the elements but depends on multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DenominatorSet {
    elements: Vec<u64>,
}

impl DenominatorSet {
    pub fn new(elements: Vec<u64>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::EmptyDenominatorSet);
        }
        if let Some(index) = elements.iter().position(|&a| a == 0) {
            return Err(Error::NonPositiveElement { index, value: 0 });
        }
        Ok(Self { elements })
    }

    /// Like [`DenominatorSet::new`] but reports negative inputs by value.
    pub fn from_signed(elements: &[i64]) -> Result<Self> {
        let mut out = Vec::with_capacity(elements.len());
        for (index, &value) in elements.iter().enumerate() {
            if value <= 0 {
                return Err(Error::NonPositiveElement {
                    index,
                    value: value.into(),
                });
            }
            out.push(value as u64);
        }
        Self::new(out)
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn min(&self) -> u64 {
        *self.elements.iter().min().expect("nonempty")
    }

    pub fn max(&self) -> u64 {
        *self.elements.iter().max().expect("nonempty")
    }

    pub fn gcd(&self) -> u64 {
        self.elements.iter().fold(0, |g, &a| g.gcd(&a))
    }

    /// `None` when the lcm does not fit in 64 bits.
    pub fn lcm(&self) -> Option<u64> {
        self.elements.iter().try_fold(1u64, |l, &a| {
            let g = l.gcd(&a);
            (l / g).checked_mul(a)
        })
    }

    pub fn is_pairwise_coprime(&self) -> bool {
        let e = &self.elements;
        (0..e.len()).all(|i| (i + 1..e.len()).all(|j| e[i].gcd(&e[j]) == 1))
    }

    pub fn contains(&self, a: u64) -> bool {
        self.elements.contains(&a)
    }

    /// A copy with one more element appended.
    pub fn with_element(&self, a: u64) -> Result<Self> {
        let mut elements = self.elements.clone();
        elements.push(a);
        Self::new(elements)
    }
}

impl FromStr for DenominatorSet {
    type Err = Error;

    /// Parses a comma-separated list such as `3,5,7`.
    fn from_str(s: &str) -> Result<Self> {
        let mut values = Vec::new();
        for (index, part) in s.split(',').enumerate() {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let value: i128 = part
                .parse()
                .map_err(|_| Error::ParseRational(part.to_string()))?;
            if value <= 0 || value > u64::MAX as i128 {
                return Err(Error::NonPositiveElement { index, value });
            }
            values.push(value as u64);
        }
        Self::new(values)
    }
}

impl fmt::Display for DenominatorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_zero() {
        assert_eq!(DenominatorSet::new(vec![]), Err(Error::EmptyDenominatorSet));
        assert_eq!(
            DenominatorSet::new(vec![3, 0]),
            Err(Error::NonPositiveElement { index: 1, value: 0 })
        );
        assert_eq!(
            DenominatorSet::from_signed(&[2, -4]),
            Err(Error::NonPositiveElement { index: 1, value: -4 })
        );
        assert!("0,5".parse::<DenominatorSet>().is_err());
        assert!("".parse::<DenominatorSet>().is_err());
        assert!("3,x".parse::<DenominatorSet>().is_err());
    }

    #[test]
    fn keeps_repeats_and_order() {
        let a: DenominatorSet = "5, 3,5".parse().unwrap();
        assert_eq!(a.elements(), &[5, 3, 5]);
        assert_eq!(a.len(), 3);
        assert_eq!(a.to_string(), "{5,3,5}");
    }

    #[test]
    fn number_theory_helpers() {
        let a = DenominatorSet::new(vec![4, 6]).unwrap();
        assert_eq!(a.gcd(), 2);
        assert_eq!(a.lcm(), Some(12));
        assert!(!a.is_pairwise_coprime());
        let b = DenominatorSet::new(vec![4, 6, 9]).unwrap();
        assert_eq!(b.gcd(), 1);
        assert!(!b.is_pairwise_coprime());
        assert!(DenominatorSet::new(vec![3, 5, 7]).unwrap().is_pairwise_coprime());
        assert_eq!(DenominatorSet::new(vec![u64::MAX, u64::MAX - 1]).unwrap().lcm(), None);
    }
}
