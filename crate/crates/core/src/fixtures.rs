//! Printed representation matrices kept as reference data, and a cell-by-cell comparator
//! against the matrices generated from multiplication.
//!
//! Entries use a small product grammar: factors joined by `*`, an optional leading `-`,
//! where a factor is an integer, `a`, `b`, `w`, `w2` or a coefficient `c0`..`c8`. Generator
//! matrices may instead be given as a 3x3 layout of named 3x3 blocks (`gamma1`, `betaN`,
//! `alphaIJ` with a 1 at 1-based position `(I, J)`), each optionally scaled by factors.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraParams, SymbolElement};
use crate::error::{Error, Result};
use crate::field::CycQ;
use crate::repr::{gamma_mat, lambda_mat};

pub const DEFAULT_FIXTURES: &str = include_str!("../fixtures/printed_matrices.json");

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FixtureFile {
    pub blocks: BTreeMap<String, Vec<String>>,
    pub matrices: Vec<PrintedMatrix>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Representation {
    Left,
    Right,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PrintedMatrix {
    pub name: String,
    pub representation: Representation,
    /// `z`, `z_w` (first twist of `z`), `x` or `y`.
    pub element: String,
    pub params: [String; 2],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entries: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub block_layout: Option<Vec<String>>,
    /// Cells, `[row, col]` from zero, known to disagree with the generated matrix.
    pub known_mismatches: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Factor {
    Int(i64),
    A,
    B,
    W,
    W2,
    Coeff(usize),
}

/// A parsed entry: sign, product of factors. The empty product is 1; `zero` marks `0`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Term {
    zero: bool,
    factors: Vec<Factor>,
}

fn parse_factors(text: &str, allow_coeff: bool) -> Result<(bool, Vec<Factor>, Option<String>)> {
    let bad = || Error::Fixture(format!("bad entry `{text}`"));
    let t = text.trim();
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t),
    };
    let mut factors = Vec::new();
    let mut block = None;
    for tok in body.split('*') {
        let f = match tok {
            "a" => Factor::A,
            "b" => Factor::B,
            "w" => Factor::W,
            "w2" => Factor::W2,
            _ if allow_coeff && tok.len() == 2 && tok.starts_with('c') => {
                let k = tok[1..].parse::<usize>().map_err(|_| bad())?;
                if k > 8 {
                    return Err(bad());
                }
                Factor::Coeff(k)
            }
            _ if !tok.is_empty() && tok.bytes().all(|b| b.is_ascii_digit()) => {
                Factor::Int(tok.parse().map_err(|_| bad())?)
            }
            _ if !allow_coeff && (tok.starts_with("alpha") || tok.starts_with("beta") || tok.starts_with("gamma")) => {
                if block.replace(tok.to_string()).is_some() {
                    return Err(bad());
                }
                continue;
            }
            _ => return Err(bad()),
        };
        factors.push(f);
    }
    Ok((neg, factors, block))
}

fn parse_entry(text: &str) -> Result<Term> {
    if text.trim() == "0" {
        return Ok(Term { zero: true, factors: vec![] });
    }
    let (neg, mut factors, _) = parse_factors(text, true)?;
    if neg {
        factors.push(Factor::Int(-1));
    }
    Ok(Term { zero: false, factors })
}

fn eval_term(t: &Term, a: &CycQ, b: &CycQ, c: &[CycQ; 9]) -> CycQ {
    if t.zero {
        return CycQ::zero();
    }
    t.factors
        .iter()
        .map(|f| match f {
            Factor::Int(n) => CycQ::from_int(*n),
            Factor::A => a.clone(),
            Factor::B => b.clone(),
            Factor::W => CycQ::omega(),
            Factor::W2 => CycQ::omega_sq(),
            Factor::Coeff(k) => c[*k].clone(),
        })
        .product()
}

fn mentions_params(t: &Term) -> bool {
    t.factors.iter().any(|f| matches!(f, Factor::A | Factor::B))
}

fn has_coeff(t: &Term) -> bool {
    t.factors.iter().any(|f| matches!(f, Factor::Coeff(_)))
}

impl FixtureFile {
    pub fn parse(json: &str) -> Result<Self> {
        serde_json::from_str(json).map_err(|e| Error::Fixture(e.to_string()))
    }

    pub fn builtin() -> Self {
        FixtureFile::parse(DEFAULT_FIXTURES).expect("embedded fixture file is valid")
    }

    /// Expands a block layout into 81 entry strings.
    fn expand_blocks(&self, layout: &[String]) -> Result<Vec<Term>> {
        if layout.len() != 9 {
            return Err(Error::Fixture("block layout needs 9 blocks".into()));
        }
        let mut cells = vec![Term { zero: true, factors: vec![] }; 81];
        for (bi, spec) in layout.iter().enumerate() {
            if spec.trim() == "0" {
                continue;
            }
            let (neg, mut scale, name) = parse_factors(spec, false)?;
            if neg {
                scale.push(Factor::Int(-1));
            }
            let name = name.ok_or_else(|| Error::Fixture(format!("block `{spec}` names no matrix")))?;
            let block: Vec<Term> = if let Some(ij) = name.strip_prefix("alpha") {
                let d: Vec<usize> = ij.bytes().map(|x| (x - b'0') as usize).collect();
                if d.len() != 2 || !(1..=3).contains(&d[0]) || !(1..=3).contains(&d[1]) {
                    return Err(Error::Fixture(format!("bad block `{name}`")));
                }
                (0..9)
                    .map(|k| Term { zero: k != (d[0] - 1) * 3 + (d[1] - 1), factors: vec![] })
                    .collect()
            } else {
                let raw = self.blocks.get(&name).ok_or_else(|| Error::Fixture(format!("unknown block `{name}`")))?;
                if raw.len() != 9 {
                    return Err(Error::Fixture(format!("block `{name}` needs 9 entries")));
                }
                raw.iter().map(|e| parse_entry(e)).collect::<Result<_>>()?
            };
            let (br, bc) = (bi / 3, bi % 3);
            for (k, t) in block.into_iter().enumerate() {
                let (r, c) = (br * 3 + k / 3, bc * 3 + k % 3);
                let mut factors = t.factors;
                factors.extend(scale.iter().cloned());
                cells[r * 9 + c] = Term { zero: t.zero, factors };
            }
        }
        Ok(cells)
    }

    fn terms(&self, m: &PrintedMatrix) -> Result<Vec<Term>> {
        match (&m.entries, &m.block_layout) {
            (Some(e), None) if e.len() == 81 => e.iter().map(|s| parse_entry(s)).collect(),
            (None, Some(l)) => self.expand_blocks(l),
            _ => Err(Error::Fixture(format!("`{}` needs exactly one of 81 entries or a block layout", m.name))),
        }
    }

    pub fn compare_all(&self) -> Result<Vec<FixtureComparison>> {
        self.matrices.iter().map(|m| self.compare(m)).collect()
    }

    pub fn compare(&self, m: &PrintedMatrix) -> Result<FixtureComparison> {
        let terms = self.terms(m)?;
        let a: CycQ = m.params[0].parse()?;
        let b: CycQ = m.params[1].parse()?;
        let p = AlgebraParams::new(a.clone(), b.clone())?;
        let generate = |z: &SymbolElement| match m.representation {
            Representation::Left => lambda_mat(z),
            Representation::Right => gamma_mat(z),
        };
        // (probe coefficients, generated matrix) pairs; entries are linear in the coefficients
        let probes: Vec<([CycQ; 9], crate::repr::MatK)> = match m.element.as_str() {
            "z" | "z_w" => (0..9)
                .map(|k| {
                    let e = SymbolElement::basis(&p, k);
                    let z = if m.element == "z_w" { e.twist(1) } else { e.clone() };
                    (e.into_coeffs(), generate(&z))
                })
                .collect(),
            "x" | "y" => {
                let z = if m.element == "x" { SymbolElement::x(&p) } else { SymbolElement::y(&p) };
                if terms.iter().any(has_coeff) {
                    return Err(Error::Fixture(format!("`{}` is a fixed element; entries may not use c0..c8", m.name)));
                }
                vec![(Default::default(), generate(&z))]
            }
            other => return Err(Error::Fixture(format!("unknown element `{other}`"))),
        };
        let mut mismatches = Vec::new();
        for (cell, term) in terms.iter().enumerate() {
            let (r, c) = (cell / 9, cell % 9);
            let differs = probes.iter().any(|(coeffs, gen)| &eval_term(term, &a, &b, coeffs) != gen.get(r, c));
            if differs {
                let generated = describe_generated(&probes, r, c, m.element.starts_with('z'));
                let printed = match (&m.entries, &m.block_layout) {
                    (Some(e), _) => e[cell].clone(),
                    _ => format!("{}", eval_term(term, &a, &b, &Default::default())),
                };
                mismatches.push(CellMismatch { row: r, col: c, printed, generated });
            }
        }
        let stray_parameters = if p.is_unit() {
            terms.iter().enumerate().filter(|(_, t)| mentions_params(t)).map(|(k, _)| [k / 9, k % 9]).collect()
        } else {
            Vec::new()
        };
        let found: Vec<[usize; 2]> = mismatches.iter().map(|m| [m.row, m.col]).collect();
        let mut known = m.known_mismatches.clone();
        known.sort();
        Ok(FixtureComparison {
            name: m.name.clone(),
            matches_documentation: found == known,
            mismatches,
            stray_parameters,
        })
    }
}

fn describe_generated(probes: &[([CycQ; 9], crate::repr::MatK)], r: usize, c: usize, linear: bool) -> String {
    if !linear {
        return probes[0].1.get(r, c).to_string();
    }
    let parts: Vec<String> = probes
        .iter()
        .enumerate()
        .filter(|(_, (_, m))| !m.get(r, c).is_zero())
        .map(|(k, (_, m))| format!("({})*c{k}", m.get(r, c)))
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellMismatch {
    pub row: usize,
    pub col: usize,
    pub printed: String,
    pub generated: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureComparison {
    pub name: String,
    pub mismatches: Vec<CellMismatch>,
    /// Cells of a unit-parameter matrix whose printed entry still names `a` or `b`.
    pub stray_parameters: Vec<[usize; 2]>,
    /// The mismatch set equals the documented list.
    pub matches_documentation: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entry_grammar() {
        let t = parse_entry("a*b*w2*c6").unwrap();
        let mut c: [CycQ; 9] = Default::default();
        c[6] = CycQ::one();
        let v = eval_term(&t, &CycQ::from_int(2), &CycQ::from_int(3), &c);
        assert_eq!(v, CycQ::from_int(6) * CycQ::omega_sq());
        assert_eq!(eval_term(&parse_entry("-2*w").unwrap(), &CycQ::one(), &CycQ::one(), &c), CycQ::from_ints(0, -2));
        assert!(eval_term(&parse_entry("0").unwrap(), &CycQ::one(), &CycQ::one(), &c).is_zero());
        for bad in ["c9", "q", "a**b", "", "c0*gamma1"] {
            assert!(parse_entry(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn identity_block_layout_matches_unit() {
        let file = FixtureFile {
            blocks: BTreeMap::new(),
            matrices: vec![],
        };
        let cells = file
            .expand_blocks(&["alpha11", "0", "0", "0", "alpha22", "0", "0", "0", "3*alpha33"].map(String::from))
            .unwrap();
        let nonzero: Vec<usize> = cells.iter().enumerate().filter(|(_, t)| !t.zero).map(|(k, _)| k).collect();
        assert_eq!(nonzero, vec![0, 40, 80]);
    }
}
