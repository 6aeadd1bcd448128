use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::deck::CardShape;
use crate::error::{Error, Result};
use crate::numeric::binomial;

/// The k-deck of an n-vertex graph: card shape to multiplicity.
///
/// Zero counts are never stored, so two profiles are equal exactly when the
/// decks are equal as multisets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DeckProfile {
    n: usize,
    k: usize,
    counts: BTreeMap<CardShape, BigUint>,
}

#[derive(Serialize, Deserialize)]
struct DeckJson {
    n: usize,
    k: usize,
    counts: BTreeMap<String, String>,
}

impl DeckProfile {
    pub fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            k,
            counts: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn add(&mut self, shape: CardShape, count: BigUint) {
        if count.is_zero() {
            return;
        }
        *self.counts.entry(shape).or_default() += count;
    }

    pub fn count(&self, shape: &CardShape) -> BigUint {
        self.counts.get(shape).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CardShape, &BigUint)> {
        self.counts.iter()
    }

    /// Number of distinct card shapes.
    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    /// Checks that the multiplicities add up to `C(n, k)` and every card has
    /// `k` vertices.
    pub fn check_consistent(&self) -> Result<()> {
        if let Some((shape, _)) = self.counts.iter().find(|(s, _)| s.order() != self.k) {
            return Err(Error::InconsistentDeck(format!(
                "card {shape} has {} vertices, expected {}",
                shape.order(),
                self.k
            )));
        }
        let want = binomial(self.n, self.k);
        let got = self.total();
        if got != want {
            return Err(Error::InconsistentDeck(format!(
                "card total {got} differs from C({}, {}) = {want}",
                self.n, self.k
            )));
        }
        Ok(())
    }

    /// First card (in key order) whose multiplicity differs, with the
    /// counts in `self` and `other`.
    pub fn first_difference(&self, other: &DeckProfile) -> Option<(CardShape, BigUint, BigUint)> {
        let mut keys: Vec<&CardShape> = self.counts.keys().chain(other.counts.keys()).collect();
        keys.sort_by_key(|s| s.key());
        keys.dedup();
        keys.into_iter().find_map(|s| {
            let (a, b) = (self.count(s), other.count(s));
            (a != b).then(|| (s.clone(), a, b))
        })
    }

    /// Byte-stable JSON: keys sorted, counts as decimal strings.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("deck serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("deck serializes")
    }

    fn to_json_value(&self) -> DeckJson {
        DeckJson {
            n: self.n,
            k: self.k,
            counts: self
                .counts
                .iter()
                .map(|(s, c)| (s.key(), c.to_string()))
                .collect(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: DeckJson = serde_json::from_str(text)?;
        let mut out = DeckProfile::new(raw.n, raw.k);
        for (key, count) in raw.counts {
            let shape = CardShape::parse_key(&key)?;
            if count.is_empty() || !count.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Malformed(format!(
                    "count {count:?} for {key} is not a decimal integer"
                )));
            }
            let value: BigUint = count
                .parse()
                .map_err(|_| Error::Malformed(format!("bad count {count:?}")))?;
            out.add(shape, value);
        }
        Ok(out)
    }

    /// SHA-256 of [`DeckProfile::to_json`], hex encoded.
    pub fn fingerprint(&self) -> String {
        hex::encode(Sha256::digest(self.to_json().as_bytes()))
    }
}
