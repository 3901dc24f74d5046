//! Sequences over an integer alphabet and positive integer weight functions.
//!
//! Symbols are plain non-negative integers ordered by integer order; every
//! construction downstream relies only on that order. Weights and all
//! accumulated values use 64-bit signed arithmetic with a validated `2^62`
//! budget, so an overflow is always reported as an error instead of wrapping.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

/// Upper bound for any single weight and for any accumulated total weight.
pub const WEIGHT_BUDGET: i64 = 1 << 62;

/// Errors from sequence and alphabet construction or measurement.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeqError {
    #[error("symbol value {0} is negative")]
    NegativeValue(i64),
    #[error("symbol value {0} does not fit in 32 bits")]
    ValueTooLarge(i64),
    #[error("weight {weight} for symbol {symbol} is outside 1..=2^62")]
    InvalidWeight { symbol: Symbol, weight: i64 },
    #[error("symbol {0} appears twice in the weight list")]
    DuplicateSymbol(Symbol),
    #[error("symbol {0} has no weight")]
    MissingWeight(Symbol),
    #[error("accumulated weight exceeds the 2^62 budget")]
    WeightOverflow,
}

/// A single alphabet symbol. Ordering is plain integer ordering.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(u32);

impl Symbol {
    pub const fn new(value: u32) -> Self {
        Symbol(value)
    }

    pub const fn value(self) -> u32 {
        self.0
    }

    /// Validating constructor for raw parsed integers.
    pub fn try_from_i64(value: i64) -> Result<Self, SeqError> {
        if value < 0 {
            Err(SeqError::NegativeValue(value))
        } else if value > u32::MAX as i64 {
            Err(SeqError::ValueTooLarge(value))
        } else {
            Ok(Symbol(value as u32))
        }
    }
}

impl From<u32> for Symbol {
    fn from(value: u32) -> Self {
        Symbol(value)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An ordered list of symbols. The empty sequence is valid.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Sequence(Vec<Symbol>);

impl Sequence {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Sequence(symbols)
    }

    pub fn empty() -> Self {
        Sequence(Vec::new())
    }

    /// Builds a sequence from raw integers, rejecting negative or oversized
    /// values. Order and multiplicity are preserved.
    pub fn from_values(values: &[i64]) -> Result<Self, SeqError> {
        values
            .iter()
            .map(|&v| Symbol::try_from_i64(v))
            .collect::<Result<Vec<_>, _>>()
            .map(Sequence)
    }

    /// Infallible convenience constructor for in-range values.
    pub fn from_u32s(values: &[u32]) -> Self {
        Sequence(values.iter().copied().map(Symbol).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.0
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Symbol> {
        self.0.iter()
    }

    pub fn max_symbol(&self) -> Option<Symbol> {
        self.0.iter().copied().max()
    }

    pub fn min_symbol(&self) -> Option<Symbol> {
        self.0.iter().copied().min()
    }
}

impl fmt::Display for Sequence {
    /// Space-separated decimal symbols, the on-disk line format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// A weight function from symbols to positive integers.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct WeightedAlphabet {
    weights: BTreeMap<Symbol, i64>,
}

impl WeightedAlphabet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds an alphabet from `(symbol, weight)` pairs. Weights must lie in
    /// `1..=2^62` and symbols must be distinct.
    pub fn from_pairs<I>(pairs: I) -> Result<Self, SeqError>
    where
        I: IntoIterator<Item = (Symbol, i64)>,
    {
        let mut weights = BTreeMap::new();
        for (symbol, weight) in pairs {
            if !(1..=WEIGHT_BUDGET).contains(&weight) {
                return Err(SeqError::InvalidWeight { symbol, weight });
            }
            if weights.insert(symbol, weight).is_some() {
                return Err(SeqError::DuplicateSymbol(symbol));
            }
        }
        Ok(WeightedAlphabet { weights })
    }

    /// Weight 1 for every given symbol; duplicates are harmless.
    pub fn unit<I>(symbols: I) -> Self
    where
        I: IntoIterator<Item = Symbol>,
    {
        WeightedAlphabet {
            weights: symbols.into_iter().map(|s| (s, 1)).collect(),
        }
    }

    /// Sets or replaces one weight.
    pub fn insert(&mut self, symbol: Symbol, weight: i64) -> Result<(), SeqError> {
        if !(1..=WEIGHT_BUDGET).contains(&weight) {
            return Err(SeqError::InvalidWeight { symbol, weight });
        }
        self.weights.insert(symbol, weight);
        Ok(())
    }

    pub fn weight(&self, symbol: Symbol) -> Option<i64> {
        self.weights.get(&symbol).copied()
    }

    pub fn require_weight(&self, symbol: Symbol) -> Result<i64, SeqError> {
        self.weight(symbol).ok_or(SeqError::MissingWeight(symbol))
    }

    pub fn min_symbol(&self) -> Option<Symbol> {
        self.weights.keys().next().copied()
    }

    pub fn max_symbol(&self) -> Option<Symbol> {
        self.weights.keys().next_back().copied()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Pairs in ascending symbol order.
    pub fn iter(&self) -> impl Iterator<Item = (Symbol, i64)> + '_ {
        self.weights.iter().map(|(&s, &w)| (s, w))
    }
}

/// True iff every adjacent pair of `s` satisfies `<=`.
pub fn is_weakly_increasing(s: &Sequence) -> bool {
    s.symbols().windows(2).all(|w| w[0] <= w[1])
}

/// True iff `candidate` embeds into `host` preserving order. Greedy
/// left-to-right matching decides this in `O(|host|)`.
pub fn is_subsequence(candidate: &Sequence, host: &Sequence) -> bool {
    let mut want = candidate.iter();
    let mut next = want.next();
    for sym in host.iter() {
        match next {
            None => return true,
            Some(n) if n == sym => next = want.next(),
            Some(_) => {}
        }
    }
    next.is_none()
}

/// Sum of `w` over the symbols of `s`, checked against the weight budget.
pub fn total_weight(s: &Sequence, w: &WeightedAlphabet) -> Result<i64, SeqError> {
    let mut total: i64 = 0;
    for &sym in s.iter() {
        total = total
            .checked_add(w.require_weight(sym)?)
            .filter(|&t| t <= WEIGHT_BUDGET)
            .ok_or(SeqError::WeightOverflow)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn from_values_preserves_order_and_multiplicity() {
        let s = Sequence::from_values(&[1, 2, 5, 2, 5, 3]).unwrap();
        assert_eq!(s.len(), 6);
        assert_eq!(s, Sequence::from_u32s(&[1, 2, 5, 2, 5, 3]));

        assert_eq!(Sequence::from_values(&[]).unwrap().len(), 0);
        assert_eq!(Sequence::from_values(&[7, 7, 7]).unwrap().len(), 3);
    }

    #[test]
    fn from_values_rejects_out_of_range() {
        assert_eq!(
            Sequence::from_values(&[1, -2]),
            Err(SeqError::NegativeValue(-2))
        );
        let too_big = u32::MAX as i64 + 1;
        assert_eq!(
            Sequence::from_values(&[too_big]),
            Err(SeqError::ValueTooLarge(too_big))
        );
    }

    #[test]
    fn weakly_increasing_cases() {
        assert!(is_weakly_increasing(&Sequence::from_u32s(&[2, 2, 3])));
        assert!(is_weakly_increasing(&Sequence::empty()));
        assert!(!is_weakly_increasing(&Sequence::from_u32s(&[3, 2])));
    }

    #[test]
    fn subsequence_cases() {
        let host = Sequence::from_u32s(&[1, 2, 5, 2, 5, 3]);
        assert!(is_subsequence(&Sequence::from_u32s(&[2, 2, 3]), &host));
        assert!(is_subsequence(&Sequence::empty(), &host));
        assert!(is_subsequence(&Sequence::empty(), &Sequence::empty()));
        assert!(!is_subsequence(
            &Sequence::from_u32s(&[5, 1]),
            &Sequence::from_u32s(&[1, 5])
        ));
    }

    #[test]
    fn total_weight_cases() {
        let unit = WeightedAlphabet::unit([Symbol::new(3), Symbol::new(4)]);
        assert_eq!(
            total_weight(&Sequence::from_u32s(&[3, 4]), &unit).unwrap(),
            2
        );
        assert_eq!(total_weight(&Sequence::empty(), &unit).unwrap(), 0);

        let w = WeightedAlphabet::from_pairs([(Symbol::new(9), 5)]).unwrap();
        assert_eq!(total_weight(&Sequence::from_u32s(&[9, 9]), &w).unwrap(), 10);
    }

    #[test]
    fn total_weight_missing_symbol_is_an_error() {
        let w = WeightedAlphabet::unit([Symbol::new(1)]);
        assert_eq!(
            total_weight(&Sequence::from_u32s(&[1, 2]), &w),
            Err(SeqError::MissingWeight(Symbol::new(2)))
        );
    }

    #[test]
    fn total_weight_overflow_is_an_error() {
        let w = WeightedAlphabet::from_pairs([(Symbol::new(1), WEIGHT_BUDGET)]).unwrap();
        assert_eq!(
            total_weight(&Sequence::from_u32s(&[1, 1]), &w),
            Err(SeqError::WeightOverflow)
        );
    }

    #[test]
    fn alphabet_validation() {
        assert!(matches!(
            WeightedAlphabet::from_pairs([(Symbol::new(1), 0)]),
            Err(SeqError::InvalidWeight { .. })
        ));
        assert!(matches!(
            WeightedAlphabet::from_pairs([(Symbol::new(1), 1), (Symbol::new(1), 2)]),
            Err(SeqError::DuplicateSymbol(_))
        ));
    }

    #[test]
    fn display_is_the_line_format() {
        let s = Sequence::from_u32s(&[1, 2, 5]);
        assert_eq!(alloc::format!("{s}"), "1 2 5");
        assert_eq!(alloc::format!("{}", Sequence::empty()), "");
    }

    #[test]
    fn sorted_sequences_are_weakly_increasing() {
        let mut values = vec![9u32, 1, 4, 4, 0, 7];
        values.sort_unstable();
        assert!(is_weakly_increasing(&Sequence::from_u32s(&values)));
    }
}
