use std::fmt;

use serde::{Deserialize, Serialize};

/// Label of an orbit in one irreducible summand of a reducible case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Comp {
    RankPair { r: u32, s: u32 },
    Index { i: u32 },
}

impl Comp {
    pub fn is_zero(&self) -> bool {
        match *self {
            Comp::Index { i } => i == 0,
            Comp::RankPair { r, .. } => r == 0,
        }
    }

    pub fn index(i: u32) -> Self {
        Comp::Index { i }
    }

    pub fn pair(r: u32, s: u32) -> Self {
        Comp::RankPair { r, s }
    }
}

impl fmt::Display for Comp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Comp::Index { i } => write!(f, "{i}"),
            Comp::RankPair { r, s } => write!(f, "{r}{s}"),
        }
    }
}

/// Extra data of a non-apparent orbit `Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ZData {
    Index(u32),
    Sim,
    Circ,
    Unit,
}

/// Orbit name as used in the orbit diagrams.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "variant")]
pub enum OrbitLabel {
    Index { i: u32 },
    RankPair { r: u32, s: u32 },
    DualRankPair { k: u32, t: u32 },
    Origin,
    Pure1 { l: Comp },
    Pure2 { l: Comp },
    Y { l: Comp, l2: Comp },
    Z { z: ZData },
}

impl OrbitLabel {
    pub fn index(i: u32) -> Self {
        OrbitLabel::Index { i }
    }

    pub fn pair(r: u32, s: u32) -> Self {
        OrbitLabel::RankPair { r, s }
    }

    pub fn y(l: Comp, l2: Comp) -> Self {
        OrbitLabel::Y { l, l2 }
    }

    pub fn z(z: ZData) -> Self {
        OrbitLabel::Z { z }
    }

    /// Is this the zero orbit?
    pub fn is_zero(&self) -> bool {
        matches!(
            self,
            OrbitLabel::Index { i: 0 } | OrbitLabel::RankPair { r: 0, .. } | OrbitLabel::Origin
        )
    }

    /// Compose a reducible-case label from component labels (no `Z`).
    pub fn from_components(a: Comp, b: Comp) -> Self {
        match (a.is_zero(), b.is_zero()) {
            (true, true) => OrbitLabel::Origin,
            (false, true) => OrbitLabel::Pure1 { l: a },
            (true, false) => OrbitLabel::Pure2 { l: b },
            (false, false) => OrbitLabel::Y { l: a, l2: b },
        }
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitLabel::Index { i } => write!(f, "O{i}"),
            OrbitLabel::RankPair { r, s } => write!(f, "O{r}{s}"),
            OrbitLabel::DualRankPair { k, t } => write!(f, "Q{k}{t}"),
            OrbitLabel::Origin => write!(f, "0"),
            OrbitLabel::Pure1 { l } => write!(f, "O{l}"),
            OrbitLabel::Pure2 { l } => write!(f, "O'{l}"),
            OrbitLabel::Y { l, l2 } => write!(f, "Y{l},{l2}"),
            OrbitLabel::Z { z } => match z {
                ZData::Index(i) => write!(f, "Z{i}"),
                ZData::Sim => write!(f, "Z~"),
                ZData::Circ => write!(f, "Zo"),
                ZData::Unit => write!(f, "Z"),
            },
        }
    }
}
