//! Bigraded dimension tables keyed by the bicharge `(Q_+, Q_-)`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Signed;
use serde_json::{Map, Value};

use crate::linalg::{parse_rat, rat_int, to_i64, Rat};

/// Dimensions of a bigraded vector space, zero entries omitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeTable {
    central_charge: Rat,
    entries: BTreeMap<(Rat, Rat), usize>,
}

impl HodgeTable {
    pub fn new(central_charge: Rat) -> Self {
        HodgeTable {
            central_charge,
            entries: BTreeMap::new(),
        }
    }

    /// Table from integer-keyed entries, convenient for fixed expectations.
    pub fn from_entries(central_charge: i64, entries: &[((i64, i64), usize)]) -> Self {
        let mut t = HodgeTable::new(rat_int(central_charge));
        for &((a, b), n) in entries {
            t.add(rat_int(a), rat_int(b), n);
        }
        t
    }

    pub fn central_charge(&self) -> &Rat {
        &self.central_charge
    }

    /// Adds `dim` to the entry at `(q_plus, q_minus)`.
    pub fn add(&mut self, q_plus: Rat, q_minus: Rat, dim: usize) {
        if dim > 0 {
            *self.entries.entry((q_plus, q_minus)).or_insert(0) += dim;
        }
    }

    pub fn get(&self, q_plus: &Rat, q_minus: &Rat) -> usize {
        self.entries
            .get(&(q_plus.clone(), q_minus.clone()))
            .copied()
            .unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(Rat, Rat), &usize)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    /// `(Q_+, Q_-) -> (Q_+, ĉ - Q_-)`.
    pub fn reflect_minus(&self) -> HodgeTable {
        let mut t = HodgeTable::new(self.central_charge.clone());
        for ((a, b), &n) in &self.entries {
            t.add(a.clone(), &self.central_charge - b, n);
        }
        t
    }

    /// Keys outside the square `[0, ĉ]^2`.
    pub fn outside_square(&self) -> Vec<(Rat, Rat)> {
        let c = &self.central_charge;
        self.entries
            .keys()
            .filter(|(a, b)| a.is_negative() || b.is_negative() || a > c || b > c)
            .cloned()
            .collect()
    }

    /// Machine-readable form: `{"Q+/Q-": dim}` with fractional charges
    /// parenthesized, e.g. `"(1/3)/(2/3)"`, in increasing `(Q_+, Q_-)` order.
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for ((a, b), &n) in &self.entries {
            map.insert(format!("{}/{}", charge(a), charge(b)), Value::from(n));
        }
        let mut out = Map::new();
        out.insert(
            "central_charge".into(),
            Value::from(self.central_charge.to_string()),
        );
        out.insert("entries".into(), Value::Object(map));
        Value::Object(out)
    }

    /// Hodge-diamond style grid: rows are `Q_-` from high to low, columns `Q_+`.
    /// Only available when all keys are integers.
    pub fn grid(&self) -> Option<String> {
        let keys: Option<Vec<(i64, i64)>> = self
            .entries
            .keys()
            .map(|(a, b)| Some((to_i64(a)?, to_i64(b)?)))
            .collect();
        let keys = keys?;
        let c = to_i64(&self.central_charge).unwrap_or(0);
        let lo = keys
            .iter()
            .flat_map(|&(a, b)| [a, b])
            .min()
            .unwrap_or(0)
            .min(0);
        let hi = keys
            .iter()
            .flat_map(|&(a, b)| [a, b])
            .max()
            .unwrap_or(0)
            .max(c);
        let width = self
            .entries
            .values()
            .map(|n| n.to_string().len())
            .max()
            .unwrap_or(1)
            .max(1);
        let mut out = String::new();
        out.push_str(&format!("{:>5} |", "Q-\\Q+"));
        for a in lo..=hi {
            out.push_str(&format!(" {:>width$}", a));
        }
        out.push('\n');
        for b in (lo..=hi).rev() {
            out.push_str(&format!("{:>5} |", b));
            for a in lo..=hi {
                let n = self.get(&rat_int(a), &rat_int(b));
                let cell = if n == 0 {
                    ".".to_string()
                } else {
                    n.to_string()
                };
                out.push_str(&format!(" {:>width$}", cell));
            }
            out.push('\n');
        }
        Some(out)
    }
}

fn charge(x: &Rat) -> String {
    if x.is_integer() {
        x.to_string()
    } else {
        format!("({x})")
    }
}

impl fmt::Display for HodgeTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|((a, b), n)| format!("({}, {}): {}", a, b, n))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl HodgeTable {
    /// Whether every entry has integer bicharge.
    pub fn is_integral(&self) -> bool {
        self.entries
            .keys()
            .all(|(a, b)| a.is_integer() && b.is_integer())
    }

    /// Inverse of [`HodgeTable::to_json`].
    pub fn from_json(value: &Value) -> Option<HodgeTable> {
        let c = parse_rat(value.get("central_charge")?.as_str()?)?;
        let mut t = HodgeTable::new(c);
        for (key, n) in value.get("entries")?.as_object()? {
            let (a, b) = split_key(key)?;
            t.add(a, b, usize::try_from(n.as_u64()?).ok()?);
        }
        Some(t)
    }
}

fn split_key(key: &str) -> Option<(Rat, Rat)> {
    let unwrap = |s: &str| {
        parse_rat(
            s.strip_prefix('(')
                .and_then(|s| s.strip_suffix(')'))
                .unwrap_or(s),
        )
    };
    let mut depth = 0;
    for (i, ch) in key.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '/' if depth == 0 => return Some((unwrap(&key[..i])?, unwrap(&key[i + 1..])?)),
            _ => {}
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    #[test]
    fn reflection_and_keys() {
        let t = HodgeTable::from_entries(1, &[((0, 0), 1), ((1, 1), 1)]);
        let r = t.reflect_minus();
        assert_eq!(r, HodgeTable::from_entries(1, &[((0, 1), 1), ((1, 0), 1)]));
        assert_eq!(r.reflect_minus(), t);
        assert!(t.outside_square().is_empty());
        let mut u = HodgeTable::new(rat_int(1));
        u.add(rat_int(2), rat_int(0), 1);
        assert_eq!(u.outside_square(), vec![(rat_int(2), rat_int(0))]);
    }

    #[test]
    fn json_keys_are_unambiguous() {
        let mut t = HodgeTable::new(rat_int(1));
        t.add(rat(1, 3), rat(2, 3), 2);
        t.add(rat_int(1), rat_int(0), 1);
        let j = t.to_json();
        assert_eq!(j["entries"]["(1/3)/(2/3)"], 2);
        assert_eq!(j["entries"]["1/0"], 1);
        assert_eq!(j["central_charge"], "1");
        assert_eq!(HodgeTable::from_json(&j), Some(t));
    }

    #[test]
    fn grid_rendering() {
        let t = HodgeTable::from_entries(1, &[((0, 0), 1), ((1, 0), 1), ((0, 1), 1), ((1, 1), 1)]);
        let g = t.grid().unwrap();
        assert_eq!(g.lines().count(), 3);
        assert!(g.lines().nth(1).unwrap().ends_with("1 1"));
    }
}
