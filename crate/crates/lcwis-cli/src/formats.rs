//! Line-oriented ASCII formats: DIMACS CNF, vector sets, sequence files,
//! weighted alphabets, combined instances, and reduction certificates.
//!
//! Every parser takes raw bytes and returns either a value or a
//! [`ParseDiagnostic`] carrying a 1-based line number; none of them panic
//! on arbitrary input. Every serializer ends its output with a newline and
//! round-trips through its parser bit-exactly.

use std::fmt::Write as _;

use lcwis_core::gadget::{CombinedInstance, SpecialSymbols};
use lcwis_core::reduce::{BitVectorSet, CnfFormula, ReductionCertificate};
use lcwis_core::{Sequence, Symbol, WeightedAlphabet};

use thiserror::Error;

/// A parse rejection: what went wrong and on which input line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseDiagnostic {
    pub line: usize,
    pub message: String,
}

impl ParseDiagnostic {
    fn new(line: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            message: message.into(),
        }
    }
}

/// Splits input into lines: `\n` separated, a trailing final newline does
/// not produce a phantom empty line, `\r` before the break is dropped.
/// Each line must be UTF-8 on its own, so a bad byte is reported with the
/// right line number.
fn lines(bytes: &[u8]) -> Result<Vec<&str>, ParseDiagnostic> {
    if bytes.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for (idx, mut raw) in bytes.split(|&b| b == b'\n').enumerate() {
        if let [head @ .., b'\r'] = raw {
            raw = head;
        }
        let text = std::str::from_utf8(raw)
            .map_err(|_| ParseDiagnostic::new(idx + 1, "line is not valid UTF-8"))?;
        out.push(text);
    }
    if bytes.last() == Some(&b'\n') {
        out.pop();
    }
    Ok(out)
}

fn parse_int<T: std::str::FromStr>(
    token: &str,
    line: usize,
    what: &str,
) -> Result<T, ParseDiagnostic> {
    token
        .parse()
        .map_err(|_| ParseDiagnostic::new(line, format!("{what} `{token}` is not a valid integer")))
}

fn parse_symbol(token: &str, line: usize) -> Result<Symbol, ParseDiagnostic> {
    let value: i64 = parse_int(token, line, "symbol")?;
    Symbol::try_from_i64(value).map_err(|e| ParseDiagnostic::new(line, e.to_string()))
}

/// Expects `key=<integer>` and returns the integer.
fn parse_keyed<T: std::str::FromStr>(
    token: Option<&str>,
    key: &str,
    line: usize,
) -> Result<T, ParseDiagnostic> {
    let token = token
        .ok_or_else(|| ParseDiagnostic::new(line, format!("missing `{key}=<value>` field")))?;
    let value = token
        .strip_prefix(key)
        .and_then(|rest| rest.strip_prefix('='))
        .ok_or_else(|| ParseDiagnostic::new(line, format!("expected `{key}=<value>`, found `{token}`")))?;
    parse_int(value, line, key)
}

// ---------------------------------------------------------------------------
// DIMACS CNF

/// Parses the DIMACS CNF subset: `c` comment lines, one `p cnf N M`
/// header, then clauses as 0-terminated literal lists, possibly spanning
/// lines. Rejects out-of-range literals, tautological clauses, and a
/// clause count that disagrees with the header.
pub fn parse_dimacs(bytes: &[u8]) -> Result<CnfFormula, ParseDiagnostic> {
    let lines = lines(bytes)?;
    let mut header: Option<(u32, usize)> = None;
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    let mut last_line = lines.len().max(1);

    for (idx, text) in lines.iter().enumerate() {
        let line = idx + 1;
        let trimmed = text.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        if trimmed.starts_with('p') {
            if header.is_some() {
                return Err(ParseDiagnostic::new(line, "duplicate `p cnf` header"));
            }
            let mut fields = trimmed.split_whitespace();
            let (p, kind) = (fields.next(), fields.next());
            if p != Some("p") || kind != Some("cnf") {
                return Err(ParseDiagnostic::new(line, "malformed header, expected `p cnf N M`"));
            }
            let num_vars: u32 = match fields.next() {
                Some(token) => parse_int(token, line, "variable count")?,
                None => return Err(ParseDiagnostic::new(line, "header is missing the variable count")),
            };
            let num_clauses: usize = match fields.next() {
                Some(token) => parse_int(token, line, "clause count")?,
                None => return Err(ParseDiagnostic::new(line, "header is missing the clause count")),
            };
            if fields.next().is_some() {
                return Err(ParseDiagnostic::new(line, "trailing tokens after `p cnf N M`"));
            }
            header = Some((num_vars, num_clauses));
            continue;
        }

        let Some((num_vars, _)) = header else {
            return Err(ParseDiagnostic::new(line, "clause data before the `p cnf` header"));
        };
        last_line = line;
        for token in trimmed.split_whitespace() {
            let lit: i32 = parse_int(token, line, "literal")?;
            if lit == 0 {
                if current.iter().any(|&l| current.contains(&-l)) {
                    return Err(ParseDiagnostic::new(
                        line,
                        "tautological clause: contains a variable and its negation",
                    ));
                }
                clauses.push(std::mem::take(&mut current));
            } else {
                let var = lit.unsigned_abs();
                if var > num_vars {
                    return Err(ParseDiagnostic::new(
                        line,
                        format!("literal {lit} references variable {var}, but the header declares {num_vars}"),
                    ));
                }
                current.push(lit);
            }
        }
    }

    let Some((num_vars, declared)) = header else {
        return Err(ParseDiagnostic::new(last_line, "missing `p cnf N M` header"));
    };
    if !current.is_empty() {
        return Err(ParseDiagnostic::new(last_line, "last clause is not 0-terminated"));
    }
    if clauses.len() != declared {
        return Err(ParseDiagnostic::new(
            last_line,
            format!("header declares {declared} clauses, found {}", clauses.len()),
        ));
    }
    CnfFormula::new(num_vars, clauses).map_err(|e| ParseDiagnostic::new(last_line, e.to_string()))
}

pub fn serialize_dimacs(f: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", f.num_vars(), f.num_clauses());
    for clause in f.clauses() {
        for lit in clause {
            let _ = write!(out, "{lit} ");
        }
        out.push_str("0\n");
    }
    out
}

// ---------------------------------------------------------------------------
// Sequences

/// One sequence per line, space-separated decimal symbols; an empty line
/// is the empty sequence.
pub fn parse_sequences(bytes: &[u8]) -> Result<Vec<Sequence>, ParseDiagnostic> {
    lines(bytes)?
        .iter()
        .enumerate()
        .map(|(idx, text)| parse_sequence_line(text, idx + 1))
        .collect()
}

fn parse_sequence_line(text: &str, line: usize) -> Result<Sequence, ParseDiagnostic> {
    text.split_whitespace()
        .map(|token| parse_symbol(token, line))
        .collect::<Result<Vec<_>, _>>()
        .map(Sequence::new)
}

pub fn serialize_sequences(seqs: &[Sequence]) -> String {
    let mut out = String::new();
    for s in seqs {
        let _ = writeln!(out, "{s}");
    }
    out
}

// ---------------------------------------------------------------------------
// Vector sets

/// First line `d=<d>`, then one vector per line as `d` space-separated
/// 0/1 digits.
pub fn parse_vectors(bytes: &[u8]) -> Result<BitVectorSet, ParseDiagnostic> {
    let lines = lines(bytes)?;
    let Some((&first, rest)) = lines.split_first() else {
        return Err(ParseDiagnostic::new(1, "missing `d=<d>` header"));
    };
    let dim: usize = parse_keyed(Some(first.trim()), "d", 1)?;
    if dim == 0 {
        return Err(ParseDiagnostic::new(1, "dimension must be at least 1"));
    }

    let mut vectors = Vec::with_capacity(rest.len());
    for (idx, text) in rest.iter().enumerate() {
        let line = idx + 2;
        let row: Vec<bool> = text
            .split_whitespace()
            .map(|token| match token {
                "0" => Ok(false),
                "1" => Ok(true),
                other => Err(ParseDiagnostic::new(
                    line,
                    format!("expected 0 or 1, found `{other}`"),
                )),
            })
            .collect::<Result<_, _>>()?;
        if row.len() != dim {
            return Err(ParseDiagnostic::new(
                line,
                format!("row has {} coordinates, expected {dim}", row.len()),
            ));
        }
        vectors.push(row);
    }
    BitVectorSet::new(dim, vectors).map_err(|e| ParseDiagnostic::new(1, e.to_string()))
}

pub fn serialize_vectors(set: &BitVectorSet) -> String {
    let mut out = format!("d={}\n", set.dim());
    for vector in set.vectors() {
        for (i, &bit) in vector.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push(if bit { '1' } else { '0' });
        }
        out.push('\n');
    }
    out
}

// ---------------------------------------------------------------------------
// Weighted alphabets

/// One `symbol:weight` pair per whitespace-separated token; the
/// serializer writes one pair per line with symbols ascending.
pub fn parse_alphabet(bytes: &[u8]) -> Result<WeightedAlphabet, ParseDiagnostic> {
    let mut alphabet = WeightedAlphabet::new();
    for (idx, text) in lines(bytes)?.iter().enumerate() {
        for token in text.split_whitespace() {
            parse_weight_token(token, idx + 1, &mut alphabet)?;
        }
    }
    Ok(alphabet)
}

fn parse_weight_token(
    token: &str,
    line: usize,
    alphabet: &mut WeightedAlphabet,
) -> Result<(), ParseDiagnostic> {
    let Some((sym_text, weight_text)) = token.split_once(':') else {
        return Err(ParseDiagnostic::new(
            line,
            format!("expected `symbol:weight`, found `{token}`"),
        ));
    };
    let symbol = parse_symbol(sym_text, line)?;
    let weight: i64 = parse_int(weight_text, line, "weight")?;
    if alphabet.weight(symbol).is_some() {
        return Err(ParseDiagnostic::new(
            line,
            format!("symbol {symbol} is weighted twice"),
        ));
    }
    alphabet
        .insert(symbol, weight)
        .map_err(|e| ParseDiagnostic::new(line, e.to_string()))
}

pub fn serialize_alphabet(w: &WeightedAlphabet) -> String {
    let mut out = String::new();
    for (symbol, weight) in w.iter() {
        let _ = writeln!(out, "{symbol}:{weight}");
    }
    out
}

// ---------------------------------------------------------------------------
// Combined instances

/// Five lines: `n=<n> ell=<ell> offset=<offset>`, the two sequences, the
/// weight map as inline `symbol:weight` tokens, and the four framing
/// symbols `A B Y Z`.
pub fn parse_instance(bytes: &[u8]) -> Result<CombinedInstance, ParseDiagnostic> {
    let lines = lines(bytes)?;
    if lines.len() != 5 {
        return Err(ParseDiagnostic::new(
            lines.len().max(1),
            format!("instance needs exactly 5 lines, found {}", lines.len()),
        ));
    }

    let mut fields = lines[0].split_whitespace();
    let n: usize = parse_keyed(fields.next(), "n", 1)?;
    let ell: i64 = parse_keyed(fields.next(), "ell", 1)?;
    let offset: i64 = parse_keyed(fields.next(), "offset", 1)?;
    if fields.next().is_some() {
        return Err(ParseDiagnostic::new(1, "trailing tokens after the header"));
    }

    let p1 = parse_sequence_line(lines[1], 2)?;
    let p2 = parse_sequence_line(lines[2], 3)?;

    let mut weights = WeightedAlphabet::new();
    for token in lines[3].split_whitespace() {
        parse_weight_token(token, 4, &mut weights)?;
    }

    let special: Vec<Symbol> = lines[4]
        .split_whitespace()
        .map(|token| parse_symbol(token, 5))
        .collect::<Result<_, _>>()?;
    let [a, b, y, z] = special[..] else {
        return Err(ParseDiagnostic::new(
            5,
            format!("expected the 4 framing symbols, found {}", special.len()),
        ));
    };

    Ok(CombinedInstance {
        p1,
        p2,
        weights,
        specials: SpecialSymbols { a, b, y, z },
        ell,
        offset,
        n,
    })
}

pub fn serialize_instance(ci: &CombinedInstance) -> String {
    let mut out = format!("n={} ell={} offset={}\n{}\n{}\n", ci.n, ci.ell, ci.offset, ci.p1, ci.p2);
    for (i, (symbol, weight)) in ci.weights.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{symbol}:{weight}");
    }
    let s = ci.specials;
    let _ = write!(out, "\n{} {} {} {}\n", s.a, s.b, s.y, s.z);
    out
}

// ---------------------------------------------------------------------------
// Certificates

/// One line: `n=<n> d=<d> ell=<ell> offset=<offset> clauses=<M|->`.
pub fn parse_certificate(bytes: &[u8]) -> Result<ReductionCertificate, ParseDiagnostic> {
    let lines = lines(bytes)?;
    let [text] = lines[..] else {
        return Err(ParseDiagnostic::new(
            lines.len().max(1),
            format!("certificate needs exactly 1 line, found {}", lines.len()),
        ));
    };
    let mut fields = text.split_whitespace();
    let n: usize = parse_keyed(fields.next(), "n", 1)?;
    let dim: usize = parse_keyed(fields.next(), "d", 1)?;
    let ell: i64 = parse_keyed(fields.next(), "ell", 1)?;
    let offset: i64 = parse_keyed(fields.next(), "offset", 1)?;
    let clauses_token = fields
        .next()
        .ok_or_else(|| ParseDiagnostic::new(1, "missing `clauses=<value>` field"))?;
    let num_clauses = match clauses_token.strip_prefix("clauses=") {
        Some("-") => None,
        Some(value) => Some(parse_int(value, 1, "clauses")?),
        None => {
            return Err(ParseDiagnostic::new(
                1,
                format!("expected `clauses=<value>`, found `{clauses_token}`"),
            ))
        }
    };
    if fields.next().is_some() {
        return Err(ParseDiagnostic::new(1, "trailing tokens after the certificate"));
    }
    Ok(ReductionCertificate {
        n,
        dim,
        ell,
        offset,
        num_clauses,
    })
}

pub fn serialize_certificate(cert: &ReductionCertificate) -> String {
    let clauses = match cert.num_clauses {
        Some(m) => m.to_string(),
        None => "-".to_string(),
    };
    format!(
        "n={} d={} ell={} offset={} clauses={}\n",
        cert.n, cert.dim, cert.ell, cert.offset, clauses
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimacs_basic() {
        let f = parse_dimacs(b"p cnf 3 2\n1 -2 0\n2 3 0\n").unwrap();
        assert_eq!(f.num_vars(), 3);
        assert_eq!(f.num_clauses(), 2);
        assert_eq!(f.clauses()[0], vec![1, -2]);
    }

    #[test]
    fn dimacs_comments_and_multiline_clause() {
        let f = parse_dimacs(b"c comment\np cnf 1 1\n1 0\n").unwrap();
        assert_eq!((f.num_vars(), f.num_clauses()), (1, 1));

        let spread = parse_dimacs(b"p cnf 3 1\n1\n2 3 0\n").unwrap();
        assert_eq!(spread.clauses()[0], vec![1, 2, 3]);
    }

    #[test]
    fn dimacs_rejections() {
        let count = parse_dimacs(b"p cnf 1 2\n1 0\n").unwrap_err();
        assert!(count.message.contains("declares 2 clauses"));

        let range = parse_dimacs(b"p cnf 1 1\n2 0\n").unwrap_err();
        assert_eq!(range.line, 2);

        let taut = parse_dimacs(b"p cnf 2 1\n1 -1 0\n").unwrap_err();
        assert!(taut.message.contains("tautological"));

        let missing = parse_dimacs(b"1 0\n").unwrap_err();
        assert!(missing.message.contains("header"));

        let unterminated = parse_dimacs(b"p cnf 1 1\n1\n").unwrap_err();
        assert!(unterminated.message.contains("0-terminated"));
    }

    #[test]
    fn dimacs_round_trip() {
        let f = CnfFormula::new(4, vec![vec![1, -2], vec![3, 4, -1]]).unwrap();
        assert_eq!(parse_dimacs(serialize_dimacs(&f).as_bytes()).unwrap(), f);
    }

    #[test]
    fn sequences_basic() {
        let seqs = parse_sequences(b"1 2 5 2 5 3\n2 4 5 2 3 4\n").unwrap();
        assert_eq!(seqs.len(), 2);
        assert_eq!(seqs[0], Sequence::from_u32s(&[1, 2, 5, 2, 5, 3]));

        let empties = parse_sequences(b"\n\n").unwrap();
        assert_eq!(empties, vec![Sequence::empty(), Sequence::empty()]);

        assert_eq!(parse_sequences(b"").unwrap(), vec![]);
    }

    #[test]
    fn sequences_rejections() {
        let negative = parse_sequences(b"1 -2\n").unwrap_err();
        assert_eq!(negative.line, 1);
        assert!(negative.message.contains("negative"));

        let word = parse_sequences(b"1\nx\n").unwrap_err();
        assert_eq!(word.line, 2);
    }

    #[test]
    fn vectors_round_trip_and_rejections() {
        let set = parse_vectors(b"d=2\n1 0\n0 1\n").unwrap();
        assert_eq!(set.len(), 2);
        assert_eq!(parse_vectors(serialize_vectors(&set).as_bytes()).unwrap(), set);

        let ragged = parse_vectors(b"d=2\n1 0 1\n").unwrap_err();
        assert_eq!(ragged.line, 2);
        assert!(ragged.message.contains("3 coordinates"));

        let digit = parse_vectors(b"d=1\n2\n").unwrap_err();
        assert!(digit.message.contains("expected 0 or 1"));

        assert!(parse_vectors(b"").is_err());
        assert!(parse_vectors(b"d=0\n").is_err());
    }

    #[test]
    fn alphabet_round_trip_and_rejections() {
        let w = WeightedAlphabet::from_pairs([
            (Symbol::new(3), 5),
            (Symbol::new(1), 1),
        ])
        .unwrap();
        let text = serialize_alphabet(&w);
        assert_eq!(text, "1:1\n3:5\n");
        assert_eq!(parse_alphabet(text.as_bytes()).unwrap(), w);
        // Several tokens may share a line.
        assert_eq!(parse_alphabet(b"1:1 3:5\n").unwrap(), w);

        let dup = parse_alphabet(b"1:1\n1:2\n").unwrap_err();
        assert_eq!(dup.line, 2);

        let shape = parse_alphabet(b"1=4\n").unwrap_err();
        assert!(shape.message.contains("symbol:weight"));

        let zero = parse_alphabet(b"1:0\n").unwrap_err();
        assert!(zero.message.contains("outside"));
    }

    #[test]
    fn certificate_round_trip() {
        let with_clauses = ReductionCertificate {
            n: 4,
            dim: 7,
            ell: 14,
            offset: 196,
            num_clauses: Some(7),
        };
        let text = serialize_certificate(&with_clauses);
        assert_eq!(text, "n=4 d=7 ell=14 offset=196 clauses=7\n");
        assert_eq!(parse_certificate(text.as_bytes()).unwrap(), with_clauses);

        let bare = ReductionCertificate {
            num_clauses: None,
            ..with_clauses
        };
        assert_eq!(
            parse_certificate(serialize_certificate(&bare).as_bytes()).unwrap(),
            bare
        );

        assert!(parse_certificate(b"n=1 d=2\n").is_err());
        assert!(parse_certificate(b"").is_err());
    }

    #[test]
    fn instance_round_trip() {
        let w = WeightedAlphabet::unit([Symbol::new(3), Symbol::new(4)]);
        let ci = lcwis_core::gadget::combine(
            &[Sequence::from_u32s(&[3]), Sequence::from_u32s(&[4])],
            &[Sequence::from_u32s(&[4]), Sequence::from_u32s(&[3])],
            &w,
        )
        .unwrap();
        let text = serialize_instance(&ci);
        assert_eq!(parse_instance(text.as_bytes()).unwrap(), ci);
    }

    #[test]
    fn bad_utf8_is_reported_with_line() {
        let err = parse_sequences(b"1 2\n\xFF\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.message.contains("UTF-8"));
    }
}
