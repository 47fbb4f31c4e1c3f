use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::so_odd::label_order;
use crate::scalar::{int, Rational};

/// A reduced root system given by the Gram matrix of its simple roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystemData {
    gram: Vec<Vec<Rational>>,
    positive: Vec<Vec<i64>>,
}

impl RootSystemData {
    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    /// Positive roots in simple-root coordinates; entry `k` carries label `k+1`.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    /// All roots: `1..m` then `-1..-m`.
    pub fn root_count(&self) -> usize {
        2 * self.positive.len()
    }

    /// Signed label of a root given in simple-root coordinates.
    pub fn label_of(&self, coords: &[i64]) -> Option<i64> {
        if let Some(k) = self.positive.iter().position(|r| r == coords) {
            return Some(k as i64 + 1);
        }
        let neg: Vec<i64> = coords.iter().map(|x| -x).collect();
        self.positive.iter().position(|r| *r == neg).map(|k| -(k as i64) - 1)
    }

    pub fn root(&self, label: i64) -> Option<Vec<i64>> {
        let k = label.unsigned_abs() as usize;
        if label == 0 || k > self.positive.len() {
            return None;
        }
        let r = &self.positive[k - 1];
        Some(if label > 0 { r.clone() } else { r.iter().map(|x| -x).collect() })
    }

    /// Label of the highest root.
    pub fn highest_root(&self) -> i64 {
        self.positive.len() as i64
    }

    pub fn inner(&self, a: &[i64], b: &[i64]) -> Rational {
        let mut acc = Rational::zero();
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                acc += int(x * y) * &self.gram[i][j];
            }
        }
        acc
    }
}

/// Generates the positive roots from simple-root strings and labels them in
/// graded lexicographic order.
pub fn build_root_data(gram: Vec<Vec<Rational>>) -> RootSystemData {
    let r = gram.len();
    let unit = |i: usize| {
        let mut v = vec![0i64; r];
        v[i] = 1;
        v
    };
    let mut data = RootSystemData {
        gram,
        positive: (0..r).map(unit).collect(),
    };
    let mut frontier = data.positive.clone();
    while !frontier.is_empty() {
        let mut next: Vec<Vec<i64>> = Vec::new();
        for beta in &frontier {
            for i in 0..r {
                let ai = unit(i);
                // alpha_i-string through beta: p steps down, q = p - <beta, alpha_i^vee> up
                let mut p = 0;
                loop {
                    let down: Vec<i64> = beta.iter().zip(&ai).map(|(b, a)| b - (p + 1) * a).collect();
                    if data.positive.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing = int(2) * data.inner(beta, &ai) / data.inner(&ai, &ai);
                let q = int(p) - pairing;
                if q > Rational::zero() {
                    let up: Vec<i64> = beta.iter().zip(&ai).map(|(b, a)| b + a).collect();
                    if !data.positive.contains(&up) && !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
        }
        data.positive.extend(next.iter().cloned());
        frontier = next;
    }
    data.positive.sort_by(|a, b| label_order(a, b));
    data
}

/// `G2` with `<a1,a1> = 2`, `<a1,a2> = -3`, `<a2,a2> = 6`.
pub fn build_g2_root_data() -> RootSystemData {
    build_root_data(vec![vec![int(2), int(-3)], vec![int(-3), int(6)]])
}

/// `B_n` with simple roots `eps_i - eps_{i+1}` and `eps_n`.
pub fn so_odd_root_data(n: usize) -> RootSystemData {
    let gram = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        int(if i + 1 == n { 1 } else { 2 })
                    } else if i.abs_diff(j) == 1 {
                        int(-1)
                    } else {
                        int(0)
                    }
                })
                .collect()
        })
        .collect();
    build_root_data(gram)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g2_roots() {
        let g2 = build_g2_root_data();
        assert_eq!(g2.root_count(), 12);
        assert_eq!(
            g2.positive_roots(),
            &[vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 1], vec![3, 1], vec![3, 2]]
        );
        assert_eq!(g2.root(6).unwrap(), vec![3, 2]);
        assert_eq!(g2.label_of(&[-2, -1]), Some(-4));
    }

    #[test]
    fn b3_roots() {
        let b3 = so_odd_root_data(3);
        assert_eq!(b3.positive_roots().len(), 9);
        assert_eq!(b3.positive_roots()[8], vec![1, 2, 2]);
    }
}
