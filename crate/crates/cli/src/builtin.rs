//! Named reference datasets.

use weightsieve_core::{BigInt, RawData, RawPoint, WeightData};

pub const NAMES: [&str; 5] = ["remark", "s6", "cp2", "sphere2", "t1-contradiction"];

fn data(n: i64, points: Vec<(Option<&str>, Vec<i64>)>) -> WeightData {
    weightsieve_core::validate(RawData {
        complex_dimension: n,
        points: points
            .into_iter()
            .map(|(label, w)| RawPoint {
                label: label.map(str::to_string),
                weights: w.into_iter().map(BigInt::from).collect(),
            })
            .collect(),
    })
    .expect("builtin datasets are valid")
}

/// Three 8-dimensional weight sets that pass localization but not pairing.
pub fn remark() -> WeightData {
    data(
        4,
        vec![
            (None, vec![-7, -1, 10, 12]),
            (None, vec![-8, 3, 5, 14]),
            (None, vec![-8, 3, 5, 14]),
        ],
    )
}

/// Two fixed points with weights `{a, b, -a-b}` and `{-a, -b, a+b}`.
pub fn s6(a: i64, b: i64) -> WeightData {
    data(3, vec![(None, vec![a, b, -a - b]), (None, vec![-a, -b, a + b])])
}

/// Linear action with exponents `(0, 1, 2)` on the complex projective plane.
pub fn cp2() -> WeightData {
    data(
        2,
        vec![
            (Some("[1:0:0]"), vec![1, 2]),
            (Some("[0:1:0]"), vec![-1, 1]),
            (Some("[0:0:1]"), vec![-2, -1]),
        ],
    )
}

/// Rotation of the 2-sphere with speed `a`.
pub fn sphere2(a: i64) -> WeightData {
    data(1, vec![(Some("north"), vec![a]), (Some("south"), vec![-a])])
}

/// The 4-dimensional two-point data that localization rules out.
pub fn t1_contradiction() -> WeightData {
    data(2, vec![(None, vec![2, -1]), (None, vec![-2, 1])])
}

fn positive(name: &str, raw: &str) -> Result<i64, String> {
    match raw.parse::<i64>() {
        Ok(v) if (1..=i64::MAX / 2).contains(&v) => Ok(v),
        _ => Err(format!("{name}: parameter must be a positive integer, got '{raw}'")),
    }
}

/// Looks up a dataset by name with its positional parameters.
pub fn lookup(name: &str, params: &[String]) -> Result<WeightData, String> {
    let arity = |expected: usize| {
        if params.len() == expected {
            Ok(())
        } else {
            Err(format!("{name} takes {expected} parameter(s), got {}", params.len()))
        }
    };
    match name {
        "remark" => arity(0).map(|_| remark()),
        "cp2" => arity(0).map(|_| cp2()),
        "t1-contradiction" => arity(0).map(|_| t1_contradiction()),
        "sphere2" => {
            arity(1)?;
            Ok(sphere2(positive(name, &params[0])?))
        }
        "s6" => {
            arity(2)?;
            Ok(s6(positive(name, &params[0])?, positive(name, &params[1])?))
        }
        other => Err(format!(
            "unknown builtin '{other}' (expected one of: {})",
            NAMES.join(", ")
        )),
    }
}
