//! JSON system documents: a voter list plus either an MWC-set or weights
//! and a quota.

use std::sync::Arc;

use mwc_power::{derive_mwc, MwcSet, Rational, ValidationError, VoterSet, WeightedGame};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemDocument {
    pub voters: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mwc: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<Number>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quota: Option<Number>,
}

/// A rational written as a JSON integer or as a `"p/q"` / `"n"` string.
/// JSON floats are rejected.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Integer(i64),
    Text(String),
    Float(f64),
}

impl Number {
    fn to_rational(&self) -> Result<Rational, CliError> {
        match self {
            Number::Integer(i) => Ok(Rational::from(*i)),
            Number::Text(s) => Ok(s.parse()?),
            Number::Float(f) => Err(CliError::Input(format!(
                "{f} is a floating-point number; write it as an integer or a \"p/q\" string"
            ))),
        }
    }
}

pub enum System {
    Mwc(MwcSet),
    Weighted(WeightedGame),
}

impl System {
    /// The MWC-set, deriving it first for weighted games.
    pub fn into_mwc(self) -> Result<MwcSet, CliError> {
        match self {
            System::Mwc(s) => Ok(s),
            System::Weighted(g) => Ok(derive_mwc(&g)?),
        }
    }
}

impl SystemDocument {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("invalid system document: {e}")))
    }

    pub fn from_mwc(system: &MwcSet) -> Self {
        let voters = system.voters();
        SystemDocument {
            voters: voters.names().to_vec(),
            mwc: Some(
                system
                    .members()
                    .iter()
                    .map(|&c| voters.coalition_names(c).into_iter().map(String::from).collect())
                    .collect(),
            ),
            weights: None,
            quota: None,
        }
    }

    pub fn into_system(self) -> Result<System, CliError> {
        let voters = Arc::new(VoterSet::new(self.voters)?);
        match (self.mwc, self.weights, self.quota) {
            (Some(mwc), None, None) => Ok(System::Mwc(MwcSet::from_names(voters, &mwc)?)),
            (None, Some(weights), Some(quota)) => {
                let weights = weights
                    .iter()
                    .map(Number::to_rational)
                    .collect::<Result<Vec<_>, _>>()?;
                let game = WeightedGame::new(voters, weights, quota.to_rational()?)?;
                Ok(System::Weighted(game))
            }
            _ => Err(CliError::Input(
                "a system document needs either \"mwc\" or both \"weights\" and \"quota\"".into(),
            )),
        }
    }
}

impl From<ValidationError> for CliError {
    fn from(e: ValidationError) -> Self {
        CliError::Validation(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weighted_document() {
        let doc = SystemDocument::from_json(
            r#"{"voters":["A","B","C"],"weights":[2,"1/2","3/2"],"quota":"5/2"}"#,
        )
        .unwrap();
        let System::Weighted(game) = doc.into_system().unwrap() else {
            panic!("expected a weighted game");
        };
        assert_eq!(game.weights()[1], Rational::new(1, 2).unwrap());
        assert_eq!(game.quota(), &Rational::new(5, 2).unwrap());
    }

    #[test]
    fn exactly_one_description() {
        let both = r#"{"voters":["A"],"mwc":[["A"]],"weights":[1],"quota":1}"#;
        assert!(SystemDocument::from_json(both).unwrap().into_system().is_err());
        let neither = r#"{"voters":["A"]}"#;
        assert!(SystemDocument::from_json(neither).unwrap().into_system().is_err());
        let half = r#"{"voters":["A"],"weights":[1]}"#;
        assert!(SystemDocument::from_json(half).unwrap().into_system().is_err());
    }

    #[test]
    fn floats_and_unknown_fields_are_rejected() {
        let float = r#"{"voters":["A"],"weights":[0.5],"quota":1}"#;
        assert!(SystemDocument::from_json(float).unwrap().into_system().is_err());
        assert!(SystemDocument::from_json(r#"{"voters":["A"],"mwc":[["A"]],"x":1}"#).is_err());
    }

    #[test]
    fn unknown_member_name() {
        let doc = SystemDocument::from_json(r#"{"voters":["A","B"],"mwc":[["C"]]}"#).unwrap();
        assert!(matches!(
            doc.into_system(),
            Err(CliError::Validation(ValidationError::UnknownVoter(_)))
        ));
    }

    #[test]
    fn mwc_round_trip() {
        let text = r#"{"voters":["A","B","C"],"mwc":[["A","B"],["C"]]}"#;
        let doc = SystemDocument::from_json(text).unwrap();
        let system = doc.clone().into_system().unwrap().into_mwc().unwrap();
        assert_eq!(SystemDocument::from_mwc(&system), doc);
    }
}
