//! The ten fixed 7-vertex graphs used by the ordering experiment.
//!
//! Vertex labels are fixed so every derived value is reproducible:
//!
//! | id                | construction                                                   |
//! |-------------------|----------------------------------------------------------------|
//! | `star`            | hub 0, leaves 1..=6                                            |
//! | `wheel`           | hub 0 joined to the rim cycle 1-2-3-4-5-6-1                    |
//! | `balanced_tree`   | root 0, children 1 and 2, grandchildren 3,4 (of 1) and 5,6 (of 2) |
//! | `lollipop`        | triangle 0-1-2, tail 2-3-4-5-6                                 |
//! | `barbell`         | triangles 0-1-2 and 4-5-6, bridge vertex 3 adjacent to 2 and 4 |
//! | `bipartite_3_4`   | complete bipartite, parts {0,1,2} and {3,4,5,6}                |
//! | `two_story_house` | rungs 0-1, 2-3, 4-5; rails 0-2-4 and 1-3-5; apex 6 on 4 and 5  |
//! | `path`            | 0-1-2-3-4-5-6                                                  |
//! | `circle`          | 0-1-2-3-4-5-6-0                                                |
//! | `complete`        | K7                                                             |

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CatalogId {
    Star,
    Wheel,
    BalancedTree,
    Lollipop,
    Barbell,
    Bipartite34,
    TwoStoryHouse,
    Path,
    Circle,
    Complete,
}

impl CatalogId {
    pub const ALL: [CatalogId; 10] = [
        CatalogId::Star,
        CatalogId::Wheel,
        CatalogId::BalancedTree,
        CatalogId::Lollipop,
        CatalogId::Barbell,
        CatalogId::Bipartite34,
        CatalogId::TwoStoryHouse,
        CatalogId::Path,
        CatalogId::Circle,
        CatalogId::Complete,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CatalogId::Star => "star",
            CatalogId::Wheel => "wheel",
            CatalogId::BalancedTree => "balanced_tree",
            CatalogId::Lollipop => "lollipop",
            CatalogId::Barbell => "barbell",
            CatalogId::Bipartite34 => "bipartite_3_4",
            CatalogId::TwoStoryHouse => "two_story_house",
            CatalogId::Path => "path",
            CatalogId::Circle => "circle",
            CatalogId::Complete => "complete",
        }
    }

    pub fn graph(self) -> Graph {
        let edges: Vec<(usize, usize)> = match self {
            CatalogId::Star => (1..7).map(|i| (0, i)).collect(),
            CatalogId::Wheel => (1..7)
                .map(|i| (0, i))
                .chain((1..7).map(|i| (i, i % 6 + 1)))
                .collect(),
            CatalogId::BalancedTree => vec![(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)],
            CatalogId::Lollipop => vec![(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6)],
            CatalogId::Barbell => vec![
                (0, 1),
                (0, 2),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (4, 6),
                (5, 6),
            ],
            CatalogId::Bipartite34 => (0..3).flat_map(|i| (3..7).map(move |j| (i, j))).collect(),
            CatalogId::TwoStoryHouse => vec![
                (0, 1),
                (2, 3),
                (4, 5),
                (0, 2),
                (2, 4),
                (1, 3),
                (3, 5),
                (4, 6),
                (5, 6),
            ],
            CatalogId::Path => (1..7).map(|i| (i - 1, i)).collect(),
            CatalogId::Circle => (0..7).map(|i| (i, (i + 1) % 7)).collect(),
            CatalogId::Complete => (0..7)
                .flat_map(|i| (i + 1..7).map(move |j| (i, j)))
                .collect(),
        };
        Graph::new(7, edges).expect("catalog constructions are valid")
    }
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for CatalogId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown catalog graph `{0}`")]
pub struct UnknownCatalogId(pub String);

impl FromStr for CatalogId {
    type Err = UnknownCatalogId;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CatalogId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| UnknownCatalogId(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_member_is_connected_simple_and_on_seven_vertices() {
        for id in CatalogId::ALL {
            let g = id.graph();
            assert_eq!(g.n(), 7, "{id}");
            assert!(g.is_connected(), "{id}");
            assert_eq!(g.degrees().sum(), 2 * g.m(), "{id}");
        }
    }

    #[test]
    fn degree_sequences() {
        let sorted = |id: CatalogId| id.graph().degrees().sorted();
        assert_eq!(
            CatalogId::Star.graph().degrees().as_slice(),
            &[6, 1, 1, 1, 1, 1, 1]
        );
        assert_eq!(sorted(CatalogId::Complete), vec![6; 7]);
        assert_eq!(CatalogId::Complete.graph().m(), 21);
        assert_eq!(sorted(CatalogId::Wheel), vec![3, 3, 3, 3, 3, 3, 6]);
        assert_eq!(sorted(CatalogId::BalancedTree), vec![1, 1, 1, 1, 2, 3, 3]);
        assert_eq!(sorted(CatalogId::Lollipop), vec![1, 2, 2, 2, 2, 2, 3]);
        assert_eq!(sorted(CatalogId::Barbell), vec![2, 2, 2, 2, 2, 3, 3]);
        assert_eq!(sorted(CatalogId::Bipartite34), vec![3, 3, 3, 3, 4, 4, 4]);
        assert_eq!(
            CatalogId::TwoStoryHouse.graph().degrees().as_slice(),
            &[2, 2, 3, 3, 3, 3, 2]
        );
        assert_eq!(CatalogId::TwoStoryHouse.graph().m(), 9);
        assert_eq!(sorted(CatalogId::Path), vec![1, 1, 2, 2, 2, 2, 2]);
        assert_eq!(sorted(CatalogId::Circle), vec![2; 7]);
    }

    #[test]
    fn names_round_trip() {
        for id in CatalogId::ALL {
            assert_eq!(id.name().parse::<CatalogId>().unwrap(), id);
        }
        assert!("hexagon".parse::<CatalogId>().is_err());
    }
}
