//! JSON input formats.
//!
//! Cayley table: `{"name"?: string, "elements"?: [string], "table": [[int]]}`.
//! Subset: `[0, 2]`. Collection: `{"sets": [[0], [0, 1]]}` or the bare
//! array `[[0], [0, 1]]`; `[]` inside `sets` is the empty set as a member.

use serde::Deserialize;

use crate::collection::Collection;
use crate::error::{Error, Result};
use crate::semigroup::{CayleyRecord, FiniteSemigroup};
use crate::subset::Subset;

fn syntax(e: serde_json::Error) -> Error {
    Error::Syntax { line: e.line(), column: e.column(), message: e.to_string() }
}

pub fn parse_semigroup(text: &str) -> Result<FiniteSemigroup> {
    let record: CayleyRecord = serde_json::from_str(text).map_err(syntax)?;
    FiniteSemigroup::try_from(record)
}

pub fn parse_subset(text: &str, n: usize) -> Result<Subset> {
    let xs: Vec<usize> = serde_json::from_str(text).map_err(syntax)?;
    Subset::from_elements(n, xs)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CollectionRepr {
    Tagged {
        sets: Vec<Vec<usize>>,
    },
    Bare(Vec<Vec<usize>>),
}

pub fn parse_collection(text: &str, n: usize) -> Result<Collection> {
    // Untagged enums lose positions, so try the two shapes separately.
    let sets = match serde_json::from_str::<CollectionRepr>(text) {
        Ok(CollectionRepr::Tagged { sets }) | Ok(CollectionRepr::Bare(sets)) => sets,
        Err(_) => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct Tagged {
                #[allow(dead_code)]
                sets: Vec<Vec<usize>>,
            }
            let trimmed = text.trim_start();
            return Err(if trimmed.starts_with('[') {
                syntax(serde_json::from_str::<Vec<Vec<usize>>>(text).err().expect("shape failed above"))
            } else {
                syntax(serde_json::from_str::<Tagged>(text).err().expect("shape failed above"))
            });
        }
    };
    Collection::from_sets(n, &sets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard::{standard_semigroup, SemigroupKind};

    #[test]
    fn semigroup_round_trip() {
        let s = standard_semigroup(SemigroupKind::RectangularBand, 2).unwrap();
        let text = serde_json::to_string(&CayleyRecord::from(&s)).unwrap();
        assert_eq!(parse_semigroup(&text).unwrap(), s);
        let labelled = parse_semigroup(r#"{"name":"sl","elements":["lo","hi"],"table":[[0,0],[0,1]]}"#).unwrap();
        assert_eq!(labelled.name(), Some("sl"));
        assert_eq!(labelled.elements().unwrap()[1], "hi");
    }

    #[test]
    fn semigroup_errors() {
        assert_eq!(
            parse_semigroup(r#"{"table":[[1,0],[0,0]]}"#).err(),
            Some(Error::NonAssociative { i: 0, j: 0, k: 1 })
        );
        match parse_semigroup("{\"table\": [[0,1],\n [1,0]").unwrap_err() {
            Error::Syntax { line, .. } => assert_eq!(line, 2),
            e => panic!("unexpected {e:?}"),
        }
        assert!(matches!(parse_semigroup(r#"{"tabel":[[0]]}"#), Err(Error::Syntax { .. })));
    }

    #[test]
    fn collections_and_subsets() {
        let c = parse_collection(r#"{"sets":[[0],[0,1]]}"#, 2).unwrap();
        assert_eq!(c, Collection::from_sets(2, &[&[0][..], &[0, 1]]).unwrap());
        assert_eq!(parse_collection("[[0],[0,1]]", 2).unwrap(), c);
        assert!(parse_collection(r#"{"sets":[[]]}"#, 2).unwrap().contains_empty());
        assert!(parse_collection(r#"{"sets":[]}"#, 2).unwrap().is_empty());
        assert!(matches!(parse_collection("[[0],[2]]", 2), Err(Error::ElementOutOfRange { element: 2, n: 2 })));
        assert!(matches!(parse_collection("[[0], ", 2), Err(Error::Syntax { .. })));
        assert!(matches!(parse_collection(r#"{"set":[]}"#, 2), Err(Error::Syntax { .. })));
        assert_eq!(parse_subset("[0,2]", 3).unwrap(), Subset::from_elements(3, [0, 2]).unwrap());
        assert!(matches!(parse_subset("[3]", 3), Err(Error::ElementOutOfRange { .. })));
    }
}
