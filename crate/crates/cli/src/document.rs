//! JSON weight-data documents.
//!
//! Weights are JSON integers of any size; the `arbitrary_precision` feature
//! of `serde_json` keeps them exact on the way to `BigInt`.

use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Number;
use weightsieve_core::{validate, BigInt, Canonical, RawData, RawPoint, WeightData};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DataDocument {
    pub complex_dimension: Number,
    pub points: Vec<PointDocument>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub weights: Vec<Number>,
}

pub fn int_number(v: &BigInt) -> Number {
    Number::from_str(&v.to_string()).expect("integers are valid JSON numbers")
}

impl DataDocument {
    pub fn parse(text: &str) -> Result<Self, Vec<String>> {
        serde_json::from_str(text).map_err(|e| vec![format!("malformed document: {e}")])
    }

    pub fn from_data(data: &WeightData) -> Self {
        Self {
            complex_dimension: Number::from(data.complex_dimension() as u64),
            points: data
                .points()
                .iter()
                .map(|p| PointDocument {
                    label: p.label.clone(),
                    weights: p.weights().iter().map(int_number).collect(),
                })
                .collect(),
        }
    }

    pub fn from_canonical(c: &Canonical) -> Self {
        Self::from_data(&c.to_data())
    }

    /// Converts and validates; every problem is listed.
    pub fn to_data(&self) -> Result<WeightData, Vec<String>> {
        let mut errors = Vec::new();
        let complex_dimension = match self.complex_dimension.as_i64() {
            Some(n) => n,
            None => {
                errors.push(format!(
                    "complex_dimension must be an integer, got {}",
                    self.complex_dimension
                ));
                0
            }
        };
        let mut points = Vec::with_capacity(self.points.len());
        for (i, p) in self.points.iter().enumerate() {
            let mut weights = Vec::with_capacity(p.weights.len());
            for (j, w) in p.weights.iter().enumerate() {
                match BigInt::from_str(&w.to_string()) {
                    Ok(v) => weights.push(v),
                    Err(_) => errors.push(format!("weight at point {i}, position {j} is not an integer: {w}")),
                }
            }
            points.push(RawPoint {
                label: p.label.clone(),
                weights,
            });
        }
        if !errors.is_empty() {
            return Err(errors);
        }
        validate(RawData {
            complex_dimension,
            points,
        })
        .map_err(|e| e.0.iter().map(|v| v.to_string()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_and_validates() {
        let doc = DataDocument::parse(
            r#"{"complex_dimension": 3, "points": [{"weights": [1, 2, -3]}, {"label": "q", "weights": [-1, -2, 3]}]}"#,
        )
        .unwrap();
        let data = doc.to_data().unwrap();
        assert_eq!(data.num_points(), 2);
        assert_eq!(data.points()[1].label.as_deref(), Some("q"));
    }

    #[test]
    fn rejects_unknown_fields() {
        let errs = DataDocument::parse(r#"{"complex_dimension": 1, "points": [], "extra": 1}"#).unwrap_err();
        assert!(errs[0].contains("unknown field"));
        let errs =
            DataDocument::parse(r#"{"complex_dimension": 1, "points": [{"weights": [1], "w": 2}]}"#).unwrap_err();
        assert!(errs[0].contains("unknown field"));
    }

    #[test]
    fn reports_zero_weight_and_arity_together() {
        let doc = DataDocument::parse(r#"{"complex_dimension": 2, "points": [{"weights": [0, 1]}, {"weights": [1]}]}"#)
            .unwrap();
        let errs = doc.to_data().unwrap_err();
        assert!(errs.iter().any(|e| e.contains("zero weight")));
        assert!(errs.iter().any(|e| e.contains("arity")));
    }

    #[test]
    fn non_integers_are_rejected() {
        let doc = DataDocument::parse(r#"{"complex_dimension": 1, "points": [{"weights": [1.5]}]}"#).unwrap();
        assert!(doc.to_data().unwrap_err()[0].contains("not an integer"));
        let doc = DataDocument::parse(r#"{"complex_dimension": 1.0, "points": [{"weights": [1]}]}"#).unwrap();
        assert!(doc.to_data().is_err());
    }

    #[test]
    fn huge_weights_stay_exact() {
        let text = r#"{"complex_dimension":1,"points":[{"weights":[123456789012345678901234567890]},{"weights":[-123456789012345678901234567890]}]}"#;
        let data = DataDocument::parse(text).unwrap().to_data().unwrap();
        assert_eq!(
            data.points()[0].weights()[0].to_string(),
            "123456789012345678901234567890"
        );
        assert_eq!(serde_json::to_string(&DataDocument::from_data(&data)).unwrap(), text);
    }

    fn arb_doc() -> impl Strategy<Value = DataDocument> {
        (1u64..=4, 1usize..=4).prop_flat_map(|(n, k)| {
            prop::collection::vec(
                (
                    prop::option::of("[a-z]{1,3}"),
                    prop::collection::vec(prop_oneof![-1000i64..=-1, 1i64..=1000], n as usize),
                ),
                k,
            )
            .prop_map(move |pts| DataDocument {
                complex_dimension: Number::from(n),
                points: pts
                    .into_iter()
                    .map(|(label, ws)| PointDocument {
                        label,
                        weights: ws.into_iter().map(Number::from).collect(),
                    })
                    .collect(),
            })
        })
    }

    proptest! {
        #[test]
        fn json_round_trip(doc in arb_doc()) {
            let text = serde_json::to_string(&doc).unwrap();
            let back = DataDocument::parse(&text).unwrap();
            prop_assert_eq!(&back, &doc);
            let data = back.to_data().unwrap();
            prop_assert_eq!(DataDocument::from_data(&data), doc);
        }
    }
}
