use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use exalg::Form;
use ratlin::{Matrix, Rational, Zero};

/// Sparse tensor on ℝ⁷ (or ℝⁿ) with 0-based multi-indices.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SparseTensor {
    rank: usize,
    entries: BTreeMap<Vec<u8>, Rational>,
}

impl SparseTensor {
    pub fn zero(rank: usize) -> Self {
        SparseTensor { rank, entries: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, idx: &[u8]) -> Rational {
        self.entries.get(idx).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<u8>, &Rational)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add_entry(&mut self, idx: Vec<u8>, c: Rational) {
        assert_eq!(idx.len(), self.rank, "tensor arity");
        if c.is_zero() {
            return;
        }
        match self.entries.entry(idx) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// The antisymmetric tensor `T(i1,...,ip) = α(e_i1,...,e_ip)` of a form.
    pub fn from_form(f: &Form) -> Self {
        let p = f.degree().unwrap_or(0);
        let mut t = SparseTensor::zero(p);
        for (idx, c) in f.terms() {
            for (order, odd) in permutations(&idx) {
                let v = if odd { -c.clone() } else { c.clone() };
                t.add_entry(order.iter().map(|&i| (i - 1) as u8).collect(), v);
            }
        }
        t
    }

    /// `u ⊗ v`.
    pub fn tensor(&self, other: &SparseTensor) -> SparseTensor {
        let mut t = SparseTensor::zero(self.rank + other.rank);
        for (a, x) in &self.entries {
            for (b, y) in &other.entries {
                let mut k = a.clone();
                k.extend_from_slice(b);
                t.add_entry(k, x * y);
            }
        }
        t
    }

    pub fn vector(v: &[Rational]) -> Self {
        let mut t = SparseTensor::zero(1);
        for (i, c) in v.iter().enumerate() {
            t.add_entry(vec![i as u8], c.clone());
        }
        t
    }

    pub fn scale(&self, c: &Rational) -> SparseTensor {
        if c.is_zero() {
            return SparseTensor::zero(self.rank);
        }
        SparseTensor { rank: self.rank, entries: self.entries.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    pub fn add(&self, other: &SparseTensor) -> SparseTensor {
        let mut t = self.clone();
        for (k, v) in &other.entries {
            t.add_entry(k.clone(), v.clone());
        }
        t
    }

    pub fn sub(&self, other: &SparseTensor) -> SparseTensor {
        let mut t = self.clone();
        for (k, v) in &other.entries {
            t.add_entry(k.clone(), -v.clone());
        }
        t
    }

    /// Induced action of an endomorphism `a` of ℝⁿ on `⊗ᵖ ℝⁿ`, where column
    /// `j` of `a` is the image of `e_j`.
    pub fn act(&self, a: &Matrix<Rational>) -> SparseTensor {
        let n = a.rows();
        let mut out = SparseTensor::zero(self.rank);
        for (idx, c) in &self.entries {
            for s in 0..idx.len() {
                let j = idx[s] as usize;
                for k in 0..n {
                    let m = &a[(k, j)];
                    if m.is_zero() {
                        continue;
                    }
                    let mut key = idx.clone();
                    key[s] = k as u8;
                    out.add_entry(key, c * m);
                }
            }
        }
        out
    }

    /// Reorders slots: `out(k_0, ..., k_{p-1}) = self(k_{perm[0]}, ..., k_{perm[p-1]})`.
    pub fn permute(&self, perm: &[usize]) -> SparseTensor {
        let mut out = SparseTensor::zero(self.rank);
        for (idx, c) in &self.entries {
            let mut key = vec![0u8; idx.len()];
            for (slot, &src) in perm.iter().enumerate() {
                key[src] = idx[slot];
            }
            out.add_entry(key, c.clone());
        }
        out
    }
}

/// All orderings of `idx` with the parity of the reordering.
fn permutations(idx: &[usize]) -> Vec<(Vec<usize>, bool)> {
    if idx.len() <= 1 {
        return vec![(idx.to_vec(), false)];
    }
    let mut out = Vec::new();
    for i in 0..idx.len() {
        let mut rest = idx.to_vec();
        let first = rest.remove(i);
        for (mut p, s) in permutations(&rest) {
            p.insert(0, first);
            out.push((p, s ^ (i % 2 == 1)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use ratlin::qi;

    #[test]
    fn form_tensor_is_antisymmetric() {
        let t = SparseTensor::from_form(&Form::parse(7, "2*e135").unwrap());
        assert_eq!(t.get(&[0, 2, 4]), qi(2));
        assert_eq!(t.get(&[2, 0, 4]), qi(-2));
        assert_eq!(t.get(&[4, 0, 2]), qi(2));
        assert_eq!(t.entries().count(), 6);
    }

    #[test]
    fn permute_moves_slots() {
        let mut t = SparseTensor::zero(3);
        t.add_entry(vec![0, 1, 2], qi(1));
        // out[i0,i1,i2] = t[i1,i0,i2]
        let p = t.permute(&[1, 0, 2]);
        assert_eq!(p.get(&[1, 0, 2]), qi(1));
    }
}
