//! Sequence constructions: coordinate gadgets, vector gadgets, the
//! combining construction, weight expansion, and the AND/OR combinators.
//!
//! Coordinate gadget `i` uses only the symbol band `{3i, 3i+1, 3i+2}`; a
//! pair of side-1/side-2 gadgets has LCWIS 0 exactly when both bits are 1
//! and LCWIS 1 otherwise. Concatenating one gadget per coordinate gives the
//! vector gadgets, whose pairwise LCWIS equals `d - (u . v)`.
//!
//! [`combine`] embeds `n` payload pairs `(s_i, t_j)` into a single sequence
//! pair whose weighted LCWIS equals the best pairwise weighted LCWIS plus a
//! fixed offset `(4n-2) * ell`:
//!
//! ```text
//! P1 = A^{2n}  s_1  YB s_2  YB ... YB  s_n  Z^{2n}
//! P2 = (ZYBA)^n  t_1  ZYBA t_2 ... ZYBA  t_n  (ZYBA)^n
//! ```
//!
//! where `A < B < sigma < Y < Z` for every payload symbol `sigma`,
//! `ell` is the maximum payload total weight, `w(A) = w(Z) = ell` and
//! `w(B) = w(Y) = 2 * ell`. The four framing symbols are placed directly
//! against the payload band: `A = lo-2`, `B = lo-1`, `Y = hi+1`,
//! `Z = hi+2`, where `lo..=hi` is the span of the payload weight map.

use alloc::vec::Vec;

use thiserror::Error;

use crate::seq::{self, SeqError, Sequence, Symbol, WeightedAlphabet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error(transparent)]
    Seq(#[from] SeqError),
    #[error("coordinate index must be at least 1")]
    ZeroCoordinate,
    #[error("coordinate index {0} overflows the 32-bit symbol space")]
    CoordinateTooLarge(u32),
    #[error("vector gadget requires a non-empty bit vector")]
    EmptyVector,
    #[error("payload lists have different lengths ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("at least one payload pair is required")]
    EmptyPayload,
    #[error("payload band starts at {0}; two symbols below it are needed for the framing")]
    BandTooLow(Symbol),
    #[error("symbol arithmetic overflows 32 bits")]
    SymbolOverflow,
}

/// Which of the two gadget families to build; side 1 goes with the first
/// sequence of a pair, side 2 with the second.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GadgetSide {
    One,
    Two,
}

/// The four framing symbols of a combined instance, with
/// `a < b < payload < y < z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpecialSymbols {
    pub a: Symbol,
    pub b: Symbol,
    pub y: Symbol,
    pub z: Symbol,
}

/// Output of [`combine`]: the sequence pair, the weight function extended
/// with the framing symbols, and the bookkeeping needed to decode values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinedInstance {
    pub p1: Sequence,
    pub p2: Sequence,
    pub weights: WeightedAlphabet,
    pub specials: SpecialSymbols,
    /// Maximum payload total weight, clamped to at least 1.
    pub ell: i64,
    /// `(4n - 2) * ell`; the combined value minus this offset is the best
    /// pairwise payload value.
    pub offset: i64,
    /// Number of payload pairs.
    pub n: usize,
}

impl CombinedInstance {
    /// Closed-form token count of `p1`: `2n + sum |s_i| + 2(n-1) + 2n`.
    pub fn expected_p1_tokens(n: usize, payload_tokens: usize) -> usize {
        4 * n + payload_tokens + 2 * (n - 1)
    }

    /// Closed-form token count of `p2`: `4n + sum |t_j| + 4(n-1) + 4n`.
    pub fn expected_p2_tokens(n: usize, payload_tokens: usize) -> usize {
        8 * n + payload_tokens + 4 * (n - 1)
    }
}

/// Builds the two-or-one symbol sequence for one vector coordinate.
///
/// Side 1: bit 0 gives `<3i, 3i+1>`, bit 1 gives `<3i+2>`.
/// Side 2: bit 0 gives `<3i, 3i+2>`, bit 1 gives `<3i+1>`.
pub fn coordinate_gadget(side: GadgetSide, bit: bool, index: u32) -> Result<Sequence, GadgetError> {
    if index == 0 {
        return Err(GadgetError::ZeroCoordinate);
    }
    if index > (u32::MAX - 2) / 3 {
        return Err(GadgetError::CoordinateTooLarge(index));
    }
    let base = 3 * index;
    let values: &[u32] = match (side, bit) {
        (GadgetSide::One, false) => &[base, base + 1],
        (GadgetSide::One, true) => &[base + 2],
        (GadgetSide::Two, false) => &[base, base + 2],
        (GadgetSide::Two, true) => &[base + 1],
    };
    Ok(Sequence::from_u32s(values))
}

/// Concatenates one coordinate gadget per bit, in coordinate order. The
/// result has between `d` and `2d` symbols and
/// `LCWIS(VG1(u), VG2(v)) = d - (u . v)`.
pub fn vector_gadget(side: GadgetSide, bits: &[bool]) -> Result<Sequence, GadgetError> {
    if bits.is_empty() {
        return Err(GadgetError::EmptyVector);
    }
    let mut symbols = Vec::with_capacity(2 * bits.len());
    for (idx, &bit) in bits.iter().enumerate() {
        let index = u32::try_from(idx + 1).unwrap_or(u32::MAX);
        let coord = coordinate_gadget(side, bit, index)?;
        symbols.extend_from_slice(coord.symbols());
    }
    Ok(Sequence::new(symbols))
}

/// Embeds `n` payload pairs into one sequence pair such that
/// `WLCWIS(P1, P2) = max_{i,j} WLCWIS(s_i, t_j) + (4n - 2) * ell`.
///
/// The payload band is the span of `payload_weights`' key set, so callers
/// control the framing-symbol placement by the symbols they weight. Every
/// symbol occurring in a payload sequence must be weighted.
pub fn combine(
    s_list: &[Sequence],
    t_list: &[Sequence],
    payload_weights: &WeightedAlphabet,
) -> Result<CombinedInstance, GadgetError> {
    if s_list.len() != t_list.len() {
        return Err(GadgetError::SizeMismatch(s_list.len(), t_list.len()));
    }
    let n = s_list.len();
    if n == 0 {
        return Err(GadgetError::EmptyPayload);
    }

    let mut ell = 1i64;
    for payload in s_list.iter().chain(t_list) {
        ell = ell.max(seq::total_weight(payload, payload_weights)?);
    }

    let specials = match (payload_weights.min_symbol(), payload_weights.max_symbol()) {
        (Some(lo), Some(hi)) => {
            if lo.value() < 2 {
                return Err(GadgetError::BandTooLow(lo));
            }
            if hi.value() > u32::MAX - 2 {
                return Err(GadgetError::SymbolOverflow);
            }
            SpecialSymbols {
                a: Symbol::new(lo.value() - 2),
                b: Symbol::new(lo.value() - 1),
                y: Symbol::new(hi.value() + 1),
                z: Symbol::new(hi.value() + 2),
            }
        }
        // No payload symbols at all: any ordered quadruple works.
        _ => SpecialSymbols {
            a: Symbol::new(1),
            b: Symbol::new(2),
            y: Symbol::new(3),
            z: Symbol::new(4),
        },
    };

    let double_ell = ell.checked_mul(2).ok_or(SeqError::WeightOverflow)?;
    let mut weights = payload_weights.clone();
    weights.insert(specials.a, ell)?;
    weights.insert(specials.z, ell)?;
    weights.insert(specials.b, double_ell)?;
    weights.insert(specials.y, double_ell)?;

    let s_tokens: usize = s_list.iter().map(Sequence::len).sum();
    let t_tokens: usize = t_list.iter().map(Sequence::len).sum();

    let mut p1 = Vec::with_capacity(CombinedInstance::expected_p1_tokens(n, s_tokens));
    p1.extend(core::iter::repeat(specials.a).take(2 * n));
    for (i, s) in s_list.iter().enumerate() {
        if i > 0 {
            p1.push(specials.y);
            p1.push(specials.b);
        }
        p1.extend_from_slice(s.symbols());
    }
    p1.extend(core::iter::repeat(specials.z).take(2 * n));

    let zyba = [specials.z, specials.y, specials.b, specials.a];
    let mut p2 = Vec::with_capacity(CombinedInstance::expected_p2_tokens(n, t_tokens));
    for _ in 0..n {
        p2.extend_from_slice(&zyba);
    }
    for (j, t) in t_list.iter().enumerate() {
        if j > 0 {
            p2.extend_from_slice(&zyba);
        }
        p2.extend_from_slice(t.symbols());
    }
    for _ in 0..n {
        p2.extend_from_slice(&zyba);
    }

    debug_assert_eq!(p1.len(), CombinedInstance::expected_p1_tokens(n, s_tokens));
    debug_assert_eq!(p2.len(), CombinedInstance::expected_p2_tokens(n, t_tokens));

    let offset = (4 * n as i64 - 2)
        .checked_mul(ell)
        .filter(|&o| o <= seq::WEIGHT_BUDGET)
        .ok_or(SeqError::WeightOverflow)?;

    Ok(CombinedInstance {
        p1: Sequence::new(p1),
        p2: Sequence::new(p2),
        weights,
        specials,
        ell,
        offset,
        n,
    })
}

/// Replaces each symbol `x` by `w(x)` consecutive copies, so that the
/// unweighted LCWIS of two expanded sequences equals the weighted LCWIS of
/// the originals. The output length is the total weight of the input.
pub fn expand_weights(a: &Sequence, w: &WeightedAlphabet) -> Result<Sequence, GadgetError> {
    let total = seq::total_weight(a, w)?;
    let capacity = usize::try_from(total).map_err(|_| SeqError::WeightOverflow)?;
    let mut symbols = Vec::with_capacity(capacity);
    for &sym in a.iter() {
        let copies = w.require_weight(sym)?;
        symbols.extend(core::iter::repeat(sym).take(copies as usize));
    }
    Ok(Sequence::new(symbols))
}

/// Adds `delta` to every symbol; order relations (and hence LCWIS values)
/// are preserved.
pub fn shift_alphabet(a: &Sequence, delta: u32) -> Result<Sequence, GadgetError> {
    a.iter()
        .map(|&s| {
            s.value()
                .checked_add(delta)
                .map(Symbol::new)
                .ok_or(GadgetError::SymbolOverflow)
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Sequence::new)
}

/// Conjunction combinator: lifts the second pair into a fresh symbol band
/// above the first and concatenates element-wise, so the LCWIS of the
/// output pair is exactly the sum of the two input LCWIS values.
pub fn and_gadget(
    pair1: (&Sequence, &Sequence),
    pair2: (&Sequence, &Sequence),
) -> Result<(Sequence, Sequence), GadgetError> {
    let band_top = pair1
        .0
        .max_symbol()
        .into_iter()
        .chain(pair1.1.max_symbol())
        .max()
        .map(|s| s.value().checked_add(1).ok_or(GadgetError::SymbolOverflow))
        .transpose()?
        .unwrap_or(0);

    let lifted_first = shift_alphabet(pair2.0, band_top)?;
    let lifted_second = shift_alphabet(pair2.1, band_top)?;

    let mut out1 = pair1.0.symbols().to_vec();
    out1.extend_from_slice(lifted_first.symbols());
    let mut out2 = pair1.1.symbols().to_vec();
    out2.extend_from_slice(lifted_second.symbols());
    Ok((Sequence::new(out1), Sequence::new(out2)))
}

/// Disjunction combinator: shifts every pair into its own disjoint symbol
/// band, puts weight 1 on each occurring symbol, and applies [`combine`].
/// Cross-band payload pairs share no symbols, so the combined value minus
/// the offset is `max_i LCWIS(pairs[i])`.
///
/// Only a single level of disjunction is supported; the outputs are
/// weighted instances, not inputs for another [`or_gadget`] call.
pub fn or_gadget(pairs: &[(Sequence, Sequence)]) -> Result<CombinedInstance, GadgetError> {
    if pairs.is_empty() {
        return Err(GadgetError::EmptyPayload);
    }

    // Uniform band width: the largest symbol in any pair, plus one. Bands
    // start at 3 to leave room for the two framing symbols below.
    let band_width = pairs
        .iter()
        .flat_map(|(first, second)| first.max_symbol().into_iter().chain(second.max_symbol()))
        .max()
        .map_or(1, |s| s.value() as u64 + 1);

    let mut s_list = Vec::with_capacity(pairs.len());
    let mut t_list = Vec::with_capacity(pairs.len());
    for (k, (first, second)) in pairs.iter().enumerate() {
        let delta = 3u64 + k as u64 * band_width;
        let delta = u32::try_from(delta).map_err(|_| GadgetError::SymbolOverflow)?;
        s_list.push(shift_alphabet(first, delta)?);
        t_list.push(shift_alphabet(second, delta)?);
    }

    let weights = WeightedAlphabet::unit(
        s_list
            .iter()
            .chain(&t_list)
            .flat_map(|s| s.iter().copied()),
    );
    combine(&s_list, &t_list, &weights)
}
