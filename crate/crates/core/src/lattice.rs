//! Finite bounded lattices stored as dense order/meet/join tables.
//!
//! Elements are integers `0..n-1`. The bottom and top are stored indices,
//! not forced to be `0` and `n-1`, because sums and products renumber.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteBoundedLattice {
    n: usize,
    leq: Vec<bool>,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
    labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeLaws {
    pub distributive: bool,
    pub modular: bool,
}

impl FiniteBoundedLattice {
    /// Builds a lattice from its Hasse diagram. `covers` lists pairs `(a, b)`
    /// with `a` covered by `b`; the reflexive-transitive closure must be a
    /// bounded lattice order.
    pub fn from_covers(
        n: usize,
        bottom: usize,
        top: usize,
        covers: &[(usize, usize)],
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotBounded("empty carrier".into()));
        }
        if bottom >= n || top >= n {
            return Err(Error::NotBounded(format!(
                "bottom {bottom} or top {top} outside carrier 0..{n}"
            )));
        }
        for &(a, b) in covers {
            if a >= n || b >= n {
                return Err(Error::NotBounded(format!("cover ({a}, {b}) outside carrier")));
            }
        }
        // Reflexive-transitive closure.
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(a, b) in covers {
            leq[a * n + b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        // Antisymmetry: a cycle shows up as two distinct comparable-in-both-ways elements.
        for i in 0..n {
            for j in 0..n {
                if i != j && leq[i * n + j] && leq[j * n + i] {
                    return Err(Error::NotAPoset(i));
                }
            }
        }
        Self::from_leq_impl(n, leq, Some((bottom, top)))
    }

    /// Builds a lattice from a full order relation (used for quotients and
    /// congruence lattices; bounds are located automatically).
    pub(crate) fn from_leq(n: usize, leq: Vec<bool>) -> Result<Self> {
        Self::from_leq_impl(n, leq, None)
    }

    fn from_leq_impl(n: usize, leq: Vec<bool>, bounds: Option<(usize, usize)>) -> Result<Self> {
        let is_bottom = |b: usize| (0..n).all(|x| leq[b * n + x]);
        let is_top = |t: usize| (0..n).all(|x| leq[x * n + t]);
        let (bottom, top) = match bounds {
            Some((b, t)) => {
                if !is_bottom(b) {
                    return Err(Error::NotBounded(format!("{b} is not below every element")));
                }
                if !is_top(t) {
                    return Err(Error::NotBounded(format!("{t} is not above every element")));
                }
                (b, t)
            }
            None => {
                let b = (0..n).find(|&b| is_bottom(b)).ok_or_else(|| {
                    Error::NotBounded("no bottom element".into())
                })?;
                let t = (0..n).find(|&t| is_top(t)).ok_or_else(|| {
                    Error::NotBounded("no top element".into())
                })?;
                (b, t)
            }
        };
        let mut meet = vec![0usize; n * n];
        let mut join = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                let lower: Vec<usize> =
                    (0..n).filter(|&z| leq[z * n + a] && leq[z * n + b]).collect();
                let glb: Vec<usize> = lower
                    .iter()
                    .copied()
                    .filter(|&z| lower.iter().all(|&w| leq[w * n + z]))
                    .collect();
                if glb.len() != 1 {
                    return Err(Error::NotALattice(a, b, "greatest lower bound"));
                }
                meet[a * n + b] = glb[0];
                let upper: Vec<usize> =
                    (0..n).filter(|&z| leq[a * n + z] && leq[b * n + z]).collect();
                let lub: Vec<usize> = upper
                    .iter()
                    .copied()
                    .filter(|&z| upper.iter().all(|&w| leq[z * n + w]))
                    .collect();
                if lub.len() != 1 {
                    return Err(Error::NotALattice(a, b, "least upper bound"));
                }
                join[a * n + b] = lub[0];
            }
        }
        Ok(Self { n, leq, meet, join, bottom, top, labels: None })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.n + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.n + b]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(ls) => ls[x].clone(),
            None => format!("e{x}"),
        }
    }

    /// `b` covers `a`: a < b with nothing strictly between.
    pub fn covers_pair(&self, a: usize, b: usize) -> bool {
        self.lt(a, b) && (0..self.n).all(|z| !(self.lt(a, z) && self.lt(z, b)))
    }

    /// The cover relation of the lattice, as ordered pairs (lower, upper).
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in 0..self.n {
                if self.covers_pair(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn atoms(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.covers_pair(self.bottom, x)).collect()
    }

    pub fn coatoms(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.covers_pair(x, self.top)).collect()
    }

    /// The order-dual lattice: same carrier, order reversed, bounds swapped.
    pub fn dual(&self) -> Self {
        let n = self.n;
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                leq[a * n + b] = self.leq[b * n + a];
            }
        }
        Self {
            n,
            leq,
            meet: self.join.clone(),
            join: self.meet.clone(),
            bottom: self.top,
            top: self.bottom,
            labels: self.labels.clone(),
        }
    }

    /// Checks the distributivity and modularity laws by exhaustive triple sweep.
    pub fn lattice_laws(&self) -> LatticeLaws {
        let n = self.n;
        let mut distributive = true;
        let mut modular = true;
        'outer: for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.meet(x, self.join(y, z)) != self.join(self.meet(x, y), self.meet(x, z))
                    {
                        distributive = false;
                    }
                    if self.join(x, self.meet(y, self.join(x, z)))
                        != self.meet(self.join(x, y), self.join(x, z))
                    {
                        modular = false;
                    }
                    if !distributive && !modular {
                        break 'outer;
                    }
                }
            }
        }
        LatticeLaws { distributive, modular }
    }

    /// Cardinality of the largest chain contained in `subset` (longest path
    /// in the induced cover DAG, counted in elements).
    pub fn length_of(&self, subset: &[usize]) -> Result<usize> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        // Longest ascending path through the subset; order by a linear
        // extension (count of elements below) so the DP is well founded.
        let mut elems: Vec<usize> = subset.to_vec();
        elems.sort_unstable();
        elems.dedup();
        let mut order = elems.clone();
        order.sort_by_key(|&x| (0..self.n).filter(|&z| self.lt(z, x)).count());
        let mut best = vec![1usize; self.n];
        let mut max = 1;
        for (i, &x) in order.iter().enumerate() {
            for &y in &order[..i] {
                if self.lt(y, x) && best[y] + 1 > best[x] {
                    best[x] = best[y] + 1;
                }
            }
            max = max.max(best[x]);
        }
        Ok(max)
    }

    /// `(x, y)` is a splitting pair: y is not below x and every element is
    /// either below x or above y.
    pub fn is_splitting_pair(&self, x: usize, y: usize) -> bool {
        !self.leq(y, x) && (0..self.n).all(|z| self.leq(z, x) || self.leq(y, z))
    }

    /// Elements `a` with some `b` satisfying a meet b = 0 and a join b = 1.
    pub fn complemented_elements(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&a| {
                (0..self.n)
                    .any(|b| self.meet(a, b) == self.bottom && self.join(a, b) == self.top)
            })
            .collect()
    }

    /// `true` iff `bottom` is meet-irreducible: a meet b = 0 forces a = 0 or b = 0.
    pub fn zero_meet_irreducible(&self) -> bool {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                if a != self.bottom
                    && b != self.bottom
                    && self.meet(a, b) == self.bottom
                {
                    return false;
                }
            }
        }
        true
    }

    /// Invariant fingerprint used to prune isomorphism/embedding searches.
    fn profile(&self) -> Vec<(usize, usize, usize, usize)> {
        (0..self.n)
            .map(|x| {
                let below = (0..self.n).filter(|&z| self.lt(z, x)).count();
                let above = (0..self.n).filter(|&z| self.lt(x, z)).count();
                let up = (0..self.n).filter(|&z| self.covers_pair(x, z)).count();
                let down = (0..self.n).filter(|&z| self.covers_pair(z, x)).count();
                (below, above, up, down)
            })
            .collect()
    }

    /// A bottom/top/meet/join-preserving bijection onto `other`, if one
    /// exists. Backtracking over elements ordered by (rank, degree)
    /// invariants; the first bijection in that search order is returned.
    pub fn isomorphic_to(&self, other: &Self) -> Option<Vec<usize>> {
        if self.n != other.n {
            return None;
        }
        let pa = self.profile();
        let pb = other.profile();
        {
            let mut sa = pa.clone();
            let mut sb = pb.clone();
            sa.sort_unstable();
            sb.sort_unstable();
            if sa != sb {
                return None;
            }
        }
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&x| (pa[x], x));
        let mut map = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        map[self.bottom] = other.bottom();
        used[other.bottom()] = true;
        if self.n > 1 {
            map[self.top] = other.top();
            used[other.top()] = true;
        }
        let pending: Vec<usize> =
            order.into_iter().filter(|&x| map[x] == usize::MAX).collect();
        if self.search(other, &pb, &pending, 0, &mut map, &mut used) {
            Some(map)
        } else {
            None
        }
    }

    fn search(
        &self,
        other: &Self,
        pb: &[(usize, usize, usize, usize)],
        pending: &[usize],
        k: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if k == pending.len() {
            return true;
        }
        let x = pending[k];
        let pa = {
            let below = (0..self.n).filter(|&z| self.lt(z, x)).count();
            let above = (0..self.n).filter(|&z| self.lt(x, z)).count();
            let up = (0..self.n).filter(|&z| self.covers_pair(x, z)).count();
            let down = (0..self.n).filter(|&z| self.covers_pair(z, x)).count();
            (below, above, up, down)
        };
        for y in 0..self.n {
            if used[y] || pb[y] != pa {
                continue;
            }
            // Consistency with everything already assigned.
            let ok = (0..self.n).filter(|&z| map[z] != usize::MAX).all(|z| {
                self.leq(x, z) == other.leq(y, map[z])
                    && self.leq(z, x) == other.leq(map[z], y)
                    && (map[self.meet(x, z)] == usize::MAX
                        || map[self.meet(x, z)] == other.meet(y, map[z]))
                    && (map[self.join(x, z)] == usize::MAX
                        || map[self.join(x, z)] == other.join(y, map[z]))
            });
            if !ok {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if self.search(other, pb, pending, k + 1, map, used) {
                return true;
            }
            map[x] = usize::MAX;
            used[y] = false;
        }
        false
    }

    /// Direct product of bounded lattices; index of `(a, b)` is `a * other.n + b`.
    pub fn product(&self, other: &Self) -> Self {
        let n = self.n * other.n;
        let idx = |a: usize, b: usize| a * other.n + b;
        let mut leq = vec![false; n * n];
        let mut meet = vec![0usize; n * n];
        let mut join = vec![0usize; n * n];
        for a1 in 0..self.n {
            for b1 in 0..other.n {
                for a2 in 0..self.n {
                    for b2 in 0..other.n {
                        let p = idx(a1, b1);
                        let q = idx(a2, b2);
                        leq[p * n + q] = self.leq(a1, a2) && other.leq(b1, b2);
                        meet[p * n + q] = idx(self.meet(a1, a2), other.meet(b1, b2));
                        join[p * n + q] = idx(self.join(a1, a2), other.join(b1, b2));
                    }
                }
            }
        }
        Self {
            n,
            leq,
            meet,
            join,
            bottom: idx(self.bottom, other.bottom),
            top: idx(self.top, other.top),
            labels: None,
        }
    }

    /// The n-element chain 0 < 1 < ... < n-1.
    pub fn chain(n: usize) -> Self {
        let covers: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Self::from_covers(n, 0, n - 1, &covers).expect("chain is a lattice")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> FiniteBoundedLattice {
        // M3's lattice reduct: 0 under a, b, c; a, b, c under 1.
        FiniteBoundedLattice::from_covers(5, 0, 4, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
            .unwrap()
    }

    fn pentagon() -> FiniteBoundedLattice {
        // N5: 0 < a < 1 and 0 < b < b' < 1 with a incomparable to b, b'.
        FiniteBoundedLattice::from_covers(5, 0, 4, &[(0, 1), (1, 4), (0, 2), (2, 3), (3, 4)])
            .unwrap()
    }

    #[test]
    fn chain_is_total_order() {
        let c = FiniteBoundedLattice::from_covers(3, 0, 2, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(c.meet(0, 2), 0);
        assert_eq!(c.join(0, 2), 2);
        assert!(c.leq(0, 1) && c.leq(1, 2));
        assert_eq!(c, FiniteBoundedLattice::chain(3));
    }

    #[test]
    fn diamond_meets_and_joins() {
        let m = diamond();
        assert_eq!(m.meet(1, 2), 0);
        assert_eq!(m.join(1, 2), 4);
        assert_eq!(m.atoms(), vec![1, 2, 3]);
    }

    #[test]
    fn two_maximal_elements_is_not_a_lattice() {
        // 0 under a and b only; pair (a, b) has no upper bound at all.
        let err = FiniteBoundedLattice::from_covers(4, 0, 3, &[(0, 1), (0, 2)]).unwrap_err();
        assert!(matches!(err, Error::NotBounded(_) | Error::NotALattice(..)));
    }

    #[test]
    fn cycle_is_rejected() {
        let err =
            FiniteBoundedLattice::from_covers(3, 0, 2, &[(0, 1), (1, 0), (1, 2)]).unwrap_err();
        assert!(matches!(err, Error::NotAPoset(_)));
    }

    #[test]
    fn laws_on_classic_witnesses() {
        assert_eq!(diamond().lattice_laws(), LatticeLaws { distributive: false, modular: true });
        assert!(!pentagon().lattice_laws().modular);
        for n in 1..6 {
            let laws = FiniteBoundedLattice::chain(n).lattice_laws();
            assert!(laws.distributive && laws.modular);
        }
    }

    #[test]
    fn length_of_chains_and_subsets() {
        let c = FiniteBoundedLattice::chain(1);
        assert_eq!(c.length_of(&[0]).unwrap(), 1);
        for n in 1..7 {
            let c = FiniteBoundedLattice::chain(n);
            let all: Vec<usize> = (0..n).collect();
            assert_eq!(c.length_of(&all).unwrap(), n);
        }
        assert_eq!(diamond().length_of(&[1, 2, 3]).unwrap(), 1);
        assert!(matches!(diamond().length_of(&[]), Err(Error::EmptySubset)));
    }

    #[test]
    fn splitting_pairs() {
        let d2 = FiniteBoundedLattice::chain(2);
        assert!(d2.is_splitting_pair(0, 1));
        let d3 = FiniteBoundedLattice::chain(3);
        assert!(!d3.is_splitting_pair(0, 2));
        let square = FiniteBoundedLattice::chain(2).product(&FiniteBoundedLattice::chain(2));
        // atoms of the square are indices 1 = (0,1) and 2 = (1,0)
        assert!(square.is_splitting_pair(1, 2));
        assert!(square.is_splitting_pair(2, 1));
    }

    #[test]
    fn complemented_elements_basics() {
        let d3 = FiniteBoundedLattice::chain(3);
        assert_eq!(d3.complemented_elements(), vec![0, 2]);
        let square = FiniteBoundedLattice::chain(2).product(&FiniteBoundedLattice::chain(2));
        assert_eq!(square.complemented_elements().len(), 4);
    }

    #[test]
    fn dual_is_involutive() {
        for l in [diamond(), pentagon(), FiniteBoundedLattice::chain(4)] {
            assert_eq!(l.dual().dual(), l);
        }
    }

    #[test]
    fn covers_round_trip() {
        let covers = vec![(0, 1), (1, 4), (0, 2), (2, 3), (3, 4)];
        let l = FiniteBoundedLattice::from_covers(5, 0, 4, &covers).unwrap();
        let mut got = l.covers();
        let mut want = covers;
        got.sort_unstable();
        want.sort_unstable();
        assert_eq!(got, want);
    }

    #[test]
    fn isomorphism_finds_and_rejects() {
        let square = FiniteBoundedLattice::chain(2).product(&FiniteBoundedLattice::chain(2));
        let square2 = FiniteBoundedLattice::from_covers(4, 3, 0, &[(3, 1), (3, 2), (1, 0), (2, 0)])
            .unwrap();
        let map = square.isomorphic_to(&square2).unwrap();
        assert_eq!(map[square.bottom()], square2.bottom());
        assert!(square.isomorphic_to(&FiniteBoundedLattice::chain(4)).is_none());
        assert!(FiniteBoundedLattice::chain(3)
            .isomorphic_to(&FiniteBoundedLattice::chain(4))
            .is_none());
        assert!(diamond().isomorphic_to(&pentagon()).is_none());
    }
}
