use std::fmt;

use crate::error::{Error, Result};

/// A partition: parts in weakly decreasing order, all positive.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Panics if `parts` is not weakly decreasing or contains a zero.
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing"
        );
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        Self { parts }
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Dyson's rank: largest part minus number of parts. The empty partition has rank 0.
    pub fn rank(&self) -> i64 {
        self.largest() as i64 - self.len() as i64
    }

    /// Andrews–Garvan crank.
    pub fn crank(&self) -> i64 {
        let ones = self.multiplicity(1);
        if ones == 0 {
            self.largest() as i64
        } else {
            let above = self.parts.iter().filter(|&&p| p > ones).count();
            above as i64 - ones as i64
        }
    }

    pub fn multiplicity(&self, part: usize) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }

    pub fn contains(&self, part: usize) -> bool {
        self.parts.contains(&part)
    }

    /// Smallest positive integer that is not a part.
    pub fn least_missing(&self) -> usize {
        (1..)
            .find(|&k| !self.contains(k))
            .expect("finite partition")
    }

    pub fn conjugate(&self) -> Self {
        let parts = (1..=self.largest())
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count())
            .collect();
        Self { parts }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Partitions of `n` in lexicographically decreasing order.
pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        // rightmost part that can still be split
        if let Some(i) = current.iter().rposition(|&p| p > 1) {
            let v = current[i] - 1;
            let mut rest = current[i + 1..].iter().sum::<usize>() + 1;
            let mut succ = current[..i].to_vec();
            succ.push(v);
            while rest > 0 {
                let p = v.min(rest);
                succ.push(p);
                rest -= p;
            }
            self.next = Some(succ);
        }
        Some(Partition { parts: current })
    }
}

/// Streams every partition of `n` exactly once; fails when `n > bound`.
pub fn enumerate_partitions(n: usize, bound: usize) -> Result<Partitions> {
    if n > bound {
        return Err(Error::OracleBoundExceeded { n, bound });
    }
    let first = if n == 0 { Vec::new() } else { vec![n] };
    Ok(Partitions { next: Some(first) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all(n: usize) -> Vec<Vec<usize>> {
        enumerate_partitions(n, 60)
            .unwrap()
            .map(|p| p.parts().to_vec())
            .collect()
    }

    #[test]
    fn small_cases() {
        assert_eq!(all(0), vec![Vec::<usize>::new()]);
        assert_eq!(
            all(4),
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
        assert_eq!(all(10).len(), 42);
    }

    #[test]
    fn order_is_strictly_decreasing() {
        let ps = all(12);
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
        assert!(ps.iter().all(|p| p.iter().sum::<usize>() == 12));
    }

    #[test]
    fn bound_enforced() {
        assert!(matches!(
            enumerate_partitions(46, 45),
            Err(Error::OracleBoundExceeded { n: 46, bound: 45 })
        ));
    }

    #[test]
    fn statistics() {
        let p = Partition::new(vec![2, 1]);
        assert_eq!(p.rank(), 0);
        assert_eq!(p.crank(), 0);
        assert_eq!(Partition::new(vec![1]).crank(), -1);
        assert_eq!(Partition::new(vec![4, 3]).crank(), 4);
        // one 1, parts > 1: 5, 3
        assert_eq!(Partition::new(vec![5, 3, 1]).crank(), 1);
        assert_eq!(Partition::new(vec![3, 1, 1, 1]).crank(), -3);
        assert_eq!(Partition::empty().rank(), 0);
        assert_eq!(Partition::empty().crank(), 0);
        assert_eq!(Partition::new(vec![3, 2]).least_missing(), 1);
        assert_eq!(Partition::new(vec![4, 2, 1]).least_missing(), 3);
    }

    #[test]
    fn conjugation_negates_rank() {
        for p in enumerate_partitions(9, 60).unwrap() {
            assert_eq!(p.conjugate().rank(), -p.rank());
            assert_eq!(p.conjugate().conjugate(), p);
        }
    }

    #[test]
    #[should_panic]
    fn rejects_increasing_parts() {
        Partition::new(vec![1, 2]);
    }
}
