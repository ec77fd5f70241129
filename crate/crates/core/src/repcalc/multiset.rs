use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::rootcore::Weight;
use crate::scalar::Count;

/// A finite multiset of weights with counts of type `C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMultiset<C> {
    map: BTreeMap<Weight, C>,
}

impl<C: Count> Default for WeightMultiset<C> {
    fn default() -> Self {
        Self {
            map: BTreeMap::new(),
        }
    }
}

impl<C: Count> FromIterator<Weight> for WeightMultiset<C> {
    fn from_iter<I: IntoIterator<Item = Weight>>(iter: I) -> Self {
        let mut ms = Self::default();
        for w in iter {
            ms.add(w, C::one());
        }
        ms
    }
}

impl<C: Count> FromIterator<(Weight, C)> for WeightMultiset<C> {
    fn from_iter<I: IntoIterator<Item = (Weight, C)>>(iter: I) -> Self {
        let mut ms = Self::default();
        for (w, c) in iter {
            ms.add(w, c);
        }
        ms
    }
}

impl<C: Count> WeightMultiset<C> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, w: Weight, c: C) {
        if c.is_zero() {
            return;
        }
        match self.map.get_mut(&w) {
            Some(v) => *v = v.clone() + c,
            None => {
                self.map.insert(w, c);
            }
        }
    }

    /// Remove `c` copies of `w`, failing if fewer are present.
    pub fn remove(&mut self, w: &Weight, c: &C) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        let have = self.map.get(w).cloned().unwrap_or_else(C::zero);
        let left = have
            .checked_sub(c)
            .ok_or_else(|| Error::NegativeMultiplicity(w.to_string()))?;
        if left.is_zero() {
            self.map.remove(w);
        } else {
            self.map.insert(w.clone(), left);
        }
        Ok(())
    }

    pub fn get(&self, w: &Weight) -> C {
        self.map.get(w).cloned().unwrap_or_else(C::zero)
    }

    /// Distinct weights with their counts, in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &C)> {
        self.map.iter()
    }

    pub fn distinct(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn total(&self) -> C {
        self.map.values().fold(C::zero(), |a, b| a + b.clone())
    }

    /// Shift every weight by `t`.
    pub fn translate(&self, t: &Weight) -> Self {
        Self {
            map: self
                .map
                .iter()
                .map(|(w, c)| (w.add(t), c.clone()))
                .collect(),
        }
    }

    /// Replace every weight `w` by `t − w`.
    pub fn reflect_through(&self, t: &Weight) -> Self {
        Self {
            map: self
                .map
                .iter()
                .map(|(w, c)| (t.sub(w), c.clone()))
                .collect(),
        }
    }

    /// Sum of all weights, counted with multiplicity.
    pub fn weight_sum(&self) -> Result<Weight> {
        let rank = self.map.keys().next().map_or(0, Weight::rank);
        let mut s = Weight::zero(rank);
        for (w, c) in &self.map {
            let k = c
                .to_i32()
                .ok_or_else(|| Error::Overflow("multiplicity exceeds i32".into()))?;
            s = s.add(&w.scale(k));
        }
        Ok(s)
    }
}
