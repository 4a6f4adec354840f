use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cube::{CubeId, CubeName};
use crate::error::{Error, Result};

/// A set of distinct cubes as a 30-bit membership mask over [`CubeId`]s.
#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct CubeSet(u32);

pub const ALL_CUBES: CubeSet = CubeSet((1 << 30) - 1);

impl CubeSet {
    pub fn from_mask(mask: u32) -> CubeSet {
        debug_assert!(mask < 1 << 30);
        CubeSet(mask)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, id: CubeId) -> bool {
        self.0 >> id.index() & 1 == 1
    }

    pub fn with(self, id: CubeId) -> CubeSet {
        CubeSet(self.0 | 1 << id.index())
    }

    pub fn without(self, id: CubeId) -> CubeSet {
        CubeSet(self.0 & !(1 << id.index()))
    }

    pub fn union(self, other: CubeSet) -> CubeSet {
        CubeSet(self.0 | other.0)
    }

    pub fn intersection(self, other: CubeSet) -> CubeSet {
        CubeSet(self.0 & other.0)
    }

    pub fn difference(self, other: CubeSet) -> CubeSet {
        CubeSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: CubeSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members in ascending id order.
    pub fn iter(self) -> impl Iterator<Item = CubeId> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                return None;
            }
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            CubeId::new(i)
        })
    }

    pub fn names(self) -> Vec<CubeName> {
        self.iter().map(CubeId::name).collect()
    }

    /// Parse a list of names, rejecting duplicates.
    pub fn from_names<S: AsRef<str>>(names: &[S]) -> Result<CubeSet> {
        let mut set = CubeSet::default();
        for n in names {
            let name: CubeName = n.as_ref().parse()?;
            if set.contains(name.id()) {
                return Err(Error::DuplicateCube(name.to_string()));
            }
            set = set.with(name.id());
        }
        Ok(set)
    }

    /// Comma-separated names, e.g. `"Ac,Ad,Ae"`.
    pub fn parse_list(list: &str) -> Result<CubeSet> {
        let parts: Vec<&str> = list
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .collect();
        CubeSet::from_names(&parts)
    }

    /// Every subset of `self` with exactly `k` members, in colex order of masks.
    pub fn subsets(self, k: usize) -> impl Iterator<Item = CubeSet> {
        let members: Vec<CubeId> = self.iter().collect();
        crate::combinations::Combinations::new(members.len(), k).map(move |local| {
            let mut m = 0u32;
            let mut bits = local;
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                m |= 1 << members[i].index();
            }
            CubeSet(m)
        })
    }
}

impl FromIterator<CubeId> for CubeSet {
    fn from_iter<I: IntoIterator<Item = CubeId>>(iter: I) -> Self {
        iter.into_iter().fold(CubeSet::default(), CubeSet::with)
    }
}

impl fmt::Display for CubeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.iter().map(|id| id.name().to_string()).collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

/// A set of exactly eight distinct cubes: one candidate for a 2x2x2 model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "CubeSet", into = "CubeSet")]
pub struct Collection(CubeSet);

impl Collection {
    pub const SIZE: usize = 8;

    pub fn new(set: CubeSet) -> Result<Collection> {
        if set.len() != Self::SIZE {
            return Err(Error::CollectionSize {
                expected: Self::SIZE,
                found: set.len(),
            });
        }
        Ok(Collection(set))
    }

    /// Caller guarantees exactly eight bits are set.
    pub fn from_mask_unchecked(mask: u32) -> Collection {
        debug_assert_eq!(mask.count_ones(), 8);
        Collection(CubeSet(mask))
    }

    pub fn parse_list(list: &str) -> Result<Collection> {
        Collection::new(CubeSet::parse_list(list)?)
    }

    pub fn set(self) -> CubeSet {
        self.0
    }

    pub fn mask(self) -> u32 {
        self.0 .0
    }

    pub fn contains(self, id: CubeId) -> bool {
        self.0.contains(id)
    }

    pub fn iter(self) -> impl Iterator<Item = CubeId> {
        self.0.iter()
    }

    pub fn ids(self) -> [CubeId; 8] {
        let mut out = [CubeId::new(0).unwrap(); 8];
        for (slot, id) in out.iter_mut().zip(self.0.iter()) {
            *slot = id;
        }
        out
    }
}

impl TryFrom<CubeSet> for Collection {
    type Error = Error;

    fn try_from(set: CubeSet) -> Result<Collection> {
        Collection::new(set)
    }
}

impl From<Collection> for CubeSet {
    fn from(c: Collection) -> CubeSet {
        c.0
    }
}

impl fmt::Display for Collection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
