use std::collections::btree_map::{self, BTreeMap};
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalars::RationalFunction;

/// A finitely supported linear combination over ℚ(q). Zero coefficients are
/// never stored and iteration follows the key order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, RationalFunction>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, RationalFunction::one())
    }

    pub fn term(key: K, coeff: RationalFunction) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> RationalFunction {
        self.terms
            .get(key)
            .cloned()
            .unwrap_or_else(RationalFunction::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, RationalFunction> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, RationalFunction> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, key: K, coeff: RationalFunction) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get() + &coeff;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &RationalFunction) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// Linear extension of `f` on basis keys.
    pub fn map_linear<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<K2>) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Like [`map_linear`](Self::map_linear) for fallible maps.
    pub fn try_map_linear<K2: Ord + Clone, E>(
        &self,
        mut f: impl FnMut(&K) -> Result<LinComb<K2>, E>,
    ) -> Result<LinComb<K2>, E> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k)?, c);
        }
        Ok(out)
    }

    pub fn filter(&self, mut keep: impl FnMut(&K) -> bool) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Sum of all coefficients.
    pub fn coeff_sum(&self) -> RationalFunction {
        self.terms.values().cloned().sum()
    }
}

impl<K: Ord + Clone> FromIterator<(K, RationalFunction)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, RationalFunction)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<'a, K: Ord> IntoIterator for &'a LinComb<K> {
    type Item = (&'a K, &'a RationalFunction);
    type IntoIter = btree_map::Iter<'a, K, RationalFunction>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone> Add for &LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &RationalFunction::one());
        out
    }
}

impl<K: Ord + Clone> Sub for &LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-RationalFunction::one());
        out
    }
}

impl<K: Ord + Clone> Neg for &LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        self.scale(&-RationalFunction::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_terms() {
        let mut v = LinComb::basis("x");
        v.add_term("x", RationalFunction::from_int(-1));
        assert!(v.is_zero());
        let w: LinComb<&str> = [
            ("y", RationalFunction::from_int(2)),
            ("x", RationalFunction::q()),
        ]
        .into_iter()
        .collect();
        assert_eq!(w.keys().copied().collect::<Vec<_>>(), ["x", "y"]);
        assert!((&w - &w).is_zero());
    }
}
