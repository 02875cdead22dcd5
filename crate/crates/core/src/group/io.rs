//! JSON group descriptions (`cayley-v1`, `perm-v1`).

use serde::{Deserialize, Serialize};

use super::FiniteGroup;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "format")]
pub enum GroupDescription {
    #[serde(rename = "cayley-v1")]
    Cayley { name: String, order: usize, table: Vec<Vec<usize>> },
    #[serde(rename = "perm-v1")]
    Perm { name: String, degree: usize, generators: Vec<Vec<usize>> },
}

impl GroupDescription {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Input(format!("group description: {e}")))
    }

    pub fn build(&self, order_cap: usize) -> Result<FiniteGroup> {
        match self {
            GroupDescription::Cayley { name, order, table } => {
                if table.len() != *order {
                    return Err(Error::MalformedGroup(format!(
                        "declared order {order} but table has {} rows",
                        table.len()
                    )));
                }
                if *order > order_cap {
                    return Err(Error::OrderCap { order: *order, cap: order_cap });
                }
                FiniteGroup::from_table(name.clone(), table)
            }
            GroupDescription::Perm { name, degree, generators } => {
                FiniteGroup::from_permutations(name.clone(), *degree, generators, order_cap)
            }
        }
    }

    /// The `cayley-v1` description of an existing group.
    pub fn cayley_of(group: &FiniteGroup) -> Self {
        let n = group.order();
        GroupDescription::Cayley {
            name: group.name().to_string(),
            order: n,
            table: (0..n).map(|i| (0..n).map(|j| group.mul(i, j)).collect()).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}
