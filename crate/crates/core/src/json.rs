//! JSON shapes for elements, matrices and solution sets. Scalars are always strings in the
//! canonical `R+S*w` grammar, so every document round-trips exactly.

use serde::{Deserialize, Serialize, Serializer};

use crate::algebra::{AlgebraParams, SymbolElement};
use crate::error::{Error, Result};
use crate::field::CycQ;
use crate::repr::MatK;
use crate::solver::{SolutionSet, Verdict};

pub fn serialize_scalar<S: Serializer>(v: &CycQ, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementJson {
    pub a: String,
    pub b: String,
    pub coeffs: Vec<String>,
}

impl From<&SymbolElement> for ElementJson {
    fn from(z: &SymbolElement) -> Self {
        ElementJson {
            a: z.params().a().to_string(),
            b: z.params().b().to_string(),
            coeffs: z.coeffs().iter().map(ToString::to_string).collect(),
        }
    }
}

impl ElementJson {
    pub fn to_element(&self) -> Result<SymbolElement> {
        let params = AlgebraParams::new(self.a.parse()?, self.b.parse()?)?;
        let coeffs = self.coeffs.iter().map(|c| c.parse()).collect::<Result<Vec<CycQ>>>()?;
        if coeffs.len() != 9 {
            return Err(Error::Parse(format!("expected 9 coefficients, got {}", coeffs.len())));
        }
        SymbolElement::from_vec(&params, coeffs)
    }
}

pub fn element_to_json(z: &SymbolElement) -> String {
    serde_json::to_string(&ElementJson::from(z)).expect("plain strings serialize")
}

pub fn element_from_json(text: &str) -> Result<SymbolElement> {
    let doc: ElementJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    doc.to_element()
}

/// Row-major list of the 81 entries.
pub fn matrix_to_json(m: &MatK) -> String {
    serde_json::to_string(&m.to_strings()).expect("plain strings serialize")
}

pub fn matrix_from_json(text: &str) -> Result<MatK> {
    let cells: Vec<String> = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if cells.len() != 81 {
        return Err(Error::Parse(format!("expected 81 entries, got {}", cells.len())));
    }
    let vals = cells.iter().map(|c| c.parse()).collect::<Result<Vec<CycQ>>>()?;
    Ok(MatK::from_fn(|i, j| vals[9 * i + j].clone()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolutionSetJson {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub particular: Option<ElementJson>,
    pub kernel: Vec<ElementJson>,
}

impl From<&SolutionSet> for SolutionSetJson {
    fn from(s: &SolutionSet) -> Self {
        SolutionSetJson {
            verdict: s.verdict,
            particular: s.particular.as_ref().map(ElementJson::from),
            kernel: s.kernel.iter().map(ElementJson::from).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn element_round_trip() {
        let p = AlgebraParams::new(CycQ::omega(), "1+1*w".parse().unwrap()).unwrap();
        let z = SymbolElement::new(
            &p,
            ["1/2", "-3+2/5*w", "0", "0+1*w", "7", "-1", "0", "2/3", "-1-1*w"].map(|s| s.parse().unwrap()),
        );
        let text = element_to_json(&z);
        assert_eq!(element_from_json(&text).unwrap(), z);
        assert_eq!(element_to_json(&element_from_json(&text).unwrap()), text);
    }

    #[test]
    fn element_json_shape() {
        let z = SymbolElement::one(&AlgebraParams::unit());
        assert_eq!(
            element_to_json(&z),
            r#"{"a":"1","b":"1","coeffs":["1","0","0","0","0","0","0","0","0"]}"#
        );
    }

    #[test]
    fn malformed_documents_are_parse_errors() {
        for bad in [
            r#"{"a":"1","b":"1","coeffs":["1"]}"#,
            r#"{"a":"1","b":"1","coeffs":["x","0","0","0","0","0","0","0","0"]}"#,
            r#"{"a":"1","coeffs":[]}"#,
            "not json",
        ] {
            assert!(matches!(element_from_json(bad), Err(Error::Parse(_))), "{bad}");
        }
        let zero_a = r#"{"a":"0","b":"1","coeffs":["1","0","0","0","0","0","0","0","0"]}"#;
        assert_eq!(element_from_json(zero_a), Err(Error::ZeroParameter));
    }

    #[test]
    fn matrix_round_trip() {
        let z = SymbolElement::x(&AlgebraParams::new(CycQ::from_int(2), CycQ::from_int(3)).unwrap());
        let m = crate::repr::lambda_mat(&z);
        assert_eq!(matrix_from_json(&matrix_to_json(&m)).unwrap(), m);
    }
}
