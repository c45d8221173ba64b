//! Bundled groups and character tables.
//!
//! Each group ships as a table file and a character-table file; GL2F3 also
//! has a permutation-generator form acting on the nonzero vectors of F_3².

use serde_json::Value;

use crate::error::{Error, Result};
use crate::groups::{GroupData, DEFAULT_GROUP_CAP};

pub const NAMES: [&str; 8] = ["trivial", "C2", "C3", "C4", "C5", "C6", "Q8", "GL2F3"];

macro_rules! files {
    ($($name:literal),*) => {
        fn raw(name: &str) -> Option<(&'static str, &'static str)> {
            match name {
                $($name => Some((
                    include_str!(concat!("../data/", $name, ".group.json")),
                    include_str!(concat!("../data/", $name, ".table.json")),
                )),)*
                _ => None,
            }
        }
    };
}

files!("trivial", "C2", "C3", "C4", "C5", "C6", "Q8", "GL2F3");

/// GL₂(F₃) as permutations of the eight nonzero vectors of F_3².
pub const GL2F3_PERM: &str = include_str!("../data/GL2F3.perm.json");

/// The raw group and table JSON text of a bundled group.
pub fn raw_files(name: &str) -> Result<(&'static str, &'static str)> {
    raw(name).ok_or_else(|| Error::UnknownName(name.to_string()))
}

pub fn bundled(name: &str) -> Result<GroupData> {
    let (g, t) = raw_files(name)?;
    let g: Value = serde_json::from_str(g)?;
    let t: Value = serde_json::from_str(t)?;
    GroupData::from_json(&g, &t, DEFAULT_GROUP_CAP)
}
