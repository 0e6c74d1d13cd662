//! Congruence enumeration per flavor, quotients, congruence lattices and
//! irreducibility tests.
//!
//! Enumeration is principal congruences for all pairs followed by closure
//! under binary join, which is correct for any finite algebra and avoids the
//! Bell-number sweep over raw partitions.

use std::collections::BTreeSet;

use crate::algebra::{FiniteAlgebra, Flavor};
use crate::error::{Error, Result};
use crate::lattice::FiniteBoundedLattice;

pub const DEFAULT_ENUM_GUARD: usize = 24;

/// Reads the `PBZLAB_GUARD` override for sweep guards.
pub fn guard_override() -> Option<u64> {
    std::env::var("PBZLAB_GUARD").ok().and_then(|v| v.parse().ok())
}

/// A partition of the carrier, stored as element -> block id with block ids
/// normalized by order of first appearance.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Congruence {
    block: Vec<usize>,
    flavor: Flavor,
}

impl Congruence {
    pub fn delta(n: usize, flavor: Flavor) -> Self {
        Self { block: (0..n).collect(), flavor }
    }

    pub fn nabla(n: usize, flavor: Flavor) -> Self {
        Self { block: vec![0; n], flavor }
    }

    /// Builds a congruence from an element -> block map, normalizing ids.
    pub fn from_block_map(block: Vec<usize>, flavor: Flavor) -> Self {
        let mut c = Self { block, flavor };
        c.normalize();
        c
    }

    fn normalize(&mut self) {
        let cap = self.block.iter().copied().max().map_or(0, |m| m + 1);
        let mut remap = vec![usize::MAX; cap];
        let mut next = 0;
        for b in self.block.iter_mut() {
            if remap[*b] == usize::MAX {
                remap[*b] = next;
                next += 1;
            }
            *b = remap[*b];
        }
    }

    pub fn n(&self) -> usize {
        self.block.len()
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block[x]
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.block[a] == self.block[b]
    }

    pub fn num_blocks(&self) -> usize {
        self.block.iter().copied().max().map_or(0, |m| m + 1)
    }

    pub fn is_delta(&self) -> bool {
        self.num_blocks() == self.n()
    }

    pub fn is_nabla(&self) -> bool {
        self.num_blocks() <= 1
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_blocks()];
        for (x, &b) in self.block.iter().enumerate() {
            out[b].push(x);
        }
        out
    }

    /// `self` refines `other`: every block of `self` sits inside a block of `other`.
    pub fn refines(&self, other: &Self) -> bool {
        (0..self.n()).all(|a| (0..self.n()).all(|b| !self.related(a, b) || other.related(a, b)))
    }

    /// Join of two congruences of the same algebra: transitive closure of the union.
    pub fn join(&self, other: &Self) -> Self {
        let n = self.n();
        let mut uf = UnionFind::new(n);
        for x in 0..n {
            for y in (x + 1)..n {
                if self.related(x, y) || other.related(x, y) {
                    uf.union(x, y);
                }
            }
        }
        uf.into_congruence(self.flavor.min(other.flavor))
    }

    /// Meet of two congruences: intersection of the relations.
    pub fn meet(&self, other: &Self) -> Self {
        let n = self.n();
        let pairs: Vec<usize> = (0..n).map(|x| self.block[x] * n + other.block[x]).collect();
        Self::from_block_map(pairs, self.flavor.max(other.flavor))
    }

    /// Checks compatibility with every operation of `flavor`; returns the
    /// offending pair on failure.
    pub fn check(&self, a: &FiniteAlgebra, flavor: Flavor) -> Result<()> {
        let n = a.n();
        let l = a.lattice();
        for x in 0..n {
            for y in 0..n {
                if !self.related(x, y) {
                    continue;
                }
                for c in 0..n {
                    if !self.related(l.meet(x, c), l.meet(y, c))
                        || !self.related(l.join(x, c), l.join(y, c))
                    {
                        return Err(Error::NotACongruence(x, y));
                    }
                }
                if flavor >= Flavor::Bi && !self.related(a.kleene(x), a.kleene(y)) {
                    return Err(Error::NotACongruence(x, y));
                }
                if flavor >= Flavor::Bz && !self.related(a.brouwer(x), a.brouwer(y)) {
                    return Err(Error::NotACongruence(x, y));
                }
            }
        }
        Ok(())
    }

    /// Relation composition self then other equals the full relation.
    pub fn composes_to_nabla(&self, other: &Self) -> bool {
        let n = self.n();
        for a in 0..n {
            for b in 0..n {
                if !(0..n).any(|c| self.related(a, c) && other.related(c, b)) {
                    return false;
                }
            }
        }
        true
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let r = self.find(self.parent[x]);
            self.parent[x] = r;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            false
        } else {
            self.parent[ra.max(rb)] = ra.min(rb);
            true
        }
    }

    fn into_congruence(mut self, flavor: Flavor) -> Congruence {
        let n = self.parent.len();
        let roots: Vec<usize> = (0..n).map(|x| self.find(x)).collect();
        Congruence::from_block_map(roots, flavor)
    }
}

fn check_flavor(a: &FiniteAlgebra, flavor: Flavor) -> Result<()> {
    if flavor > a.flavor() {
        Err(Error::FlavorMismatch(flavor.name(), a.flavor().name()))
    } else {
        Ok(())
    }
}

/// Smallest `flavor`-congruence identifying `a` and `b`: fixpoint closure
/// under all unary polynomial translations plus transitive closure.
pub fn principal_congruence(alg: &FiniteAlgebra, a: usize, b: usize, flavor: Flavor) -> Result<Congruence> {
    check_flavor(alg, flavor)?;
    let n = alg.n();
    let l = alg.lattice();
    let mut uf = UnionFind::new(n);
    uf.union(a, b);
    loop {
        let mut changed = false;
        let roots: Vec<usize> = (0..n).map(|x| uf.find(x)).collect();
        for x in 0..n {
            for y in (x + 1)..n {
                if roots[x] != roots[y] {
                    continue;
                }
                for c in 0..n {
                    changed |= uf.union(l.meet(x, c), l.meet(y, c));
                    changed |= uf.union(l.join(x, c), l.join(y, c));
                }
                if flavor >= Flavor::Bi {
                    changed |= uf.union(alg.kleene(x), alg.kleene(y));
                }
                if flavor >= Flavor::Bz {
                    changed |= uf.union(alg.brouwer(x), alg.brouwer(y));
                }
            }
        }
        if !changed {
            break;
        }
    }
    let cg = uf.into_congruence(flavor);
    debug_assert!(cg.check(alg, flavor).is_ok());
    Ok(cg)
}

/// The full congruence set at `flavor`: join-closure of the principal
/// congruences plus the identity. Guarded by carrier size.
pub fn all_congruences(alg: &FiniteAlgebra, flavor: Flavor) -> Result<Vec<Congruence>> {
    let guard = guard_override().map(|g| g as usize).unwrap_or(DEFAULT_ENUM_GUARD);
    all_congruences_with_guard(alg, flavor, guard)
}

pub fn all_congruences_with_guard(
    alg: &FiniteAlgebra,
    flavor: Flavor,
    guard: usize,
) -> Result<Vec<Congruence>> {
    check_flavor(alg, flavor)?;
    let n = alg.n();
    if n > guard {
        return Err(Error::SizeGuardExceeded(n, guard));
    }
    let mut set: BTreeSet<Congruence> = BTreeSet::new();
    set.insert(Congruence::delta(n, flavor));
    let mut principals = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            let cg = principal_congruence(alg, a, b, flavor)?;
            principals.push(cg.clone());
            set.insert(cg);
        }
    }
    loop {
        let mut added = Vec::new();
        for c in set.iter() {
            for p in &principals {
                let j = c.join(p);
                if !set.contains(&j) {
                    added.push(j);
                }
            }
        }
        if added.is_empty() {
            break;
        }
        set.extend(added);
    }
    let out: Vec<Congruence> = set.into_iter().collect();
    debug_assert!(out.iter().any(|c| c.is_delta()) && out.iter().any(|c| c.is_nabla()));
    Ok(out)
}

/// Congruences with singleton blocks at 0 and 1. For antiortholattices, the
/// BZ congruence set equals the BI Con01 set plus the full relation, which is
/// asserted here.
pub fn con_01(alg: &FiniteAlgebra, flavor: Flavor) -> Result<Vec<Congruence>> {
    let all = all_congruences(alg, flavor)?;
    let singleton_bounds = |c: &Congruence| {
        (0..alg.n()).all(|x| {
            (!c.related(x, alg.bottom()) || x == alg.bottom())
                && (!c.related(x, alg.top()) || x == alg.top())
        })
    };
    let out: Vec<Congruence> = all.into_iter().filter(singleton_bounds).collect();
    if alg.flavor() == Flavor::Bz && alg.classify().antiortholattice == Some(true) {
        let bz = all_congruences(alg, Flavor::Bz)?;
        let mut expected: Vec<Congruence> = con_01_of(&all_congruences(alg, Flavor::Bi)?, alg);
        expected = expected
            .into_iter()
            .map(|c| Congruence { block: c.block, flavor: Flavor::Bz })
            .collect();
        expected.push(Congruence::nabla(alg.n(), Flavor::Bz));
        expected.sort();
        expected.dedup();
        assert_eq!(bz, expected, "Con_BZ = Con_BI01 + nabla for an antiortholattice");
    }
    Ok(out)
}

fn con_01_of(cons: &[Congruence], alg: &FiniteAlgebra) -> Vec<Congruence> {
    cons.iter()
        .filter(|c| {
            (0..alg.n()).all(|x| {
                (!c.related(x, alg.bottom()) || x == alg.bottom())
                    && (!c.related(x, alg.top()) || x == alg.top())
            })
        })
        .cloned()
        .collect()
}

/// Quotient algebra. Blocks are numbered by order of first appearance.
pub fn quotient(alg: &FiniteAlgebra, theta: &Congruence) -> Result<FiniteAlgebra> {
    theta.check(alg, alg.flavor())?;
    let n = alg.n();
    let l = alg.lattice();
    let m = theta.num_blocks();
    // Representative of each block: its first element.
    let mut rep = vec![usize::MAX; m];
    for x in 0..n {
        let b = theta.block_of(x);
        if rep[b] == usize::MAX {
            rep[b] = x;
        }
    }
    let mut leq = vec![false; m * m];
    for i in 0..m {
        for j in 0..m {
            // [a] <= [b] iff a ^ b is theta-related to a.
            leq[i * m + j] = theta.related(l.meet(rep[i], rep[j]), rep[i]);
        }
    }
    let lattice = FiniteBoundedLattice::from_leq(m, leq)?;
    let mut out = FiniteAlgebra::from_lattice(lattice);
    if alg.flavor() >= Flavor::Bi {
        let table: Vec<usize> = (0..m).map(|i| theta.block_of(alg.kleene(rep[i]))).collect();
        out = FiniteAlgebra::attach_involution(out.lattice().clone(), table)?;
    }
    if alg.flavor() >= Flavor::Bz {
        let table: Vec<usize> = (0..m).map(|i| theta.block_of(alg.brouwer(rep[i]))).collect();
        out = out.attach_brouwer(crate::algebra::BrouwerSpec::Table(table))?;
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct Irreducibility {
    pub simple: bool,
    pub subdirectly_irreducible: bool,
    pub monolith: Option<Congruence>,
    pub directly_irreducible: bool,
}

/// Simplicity, subdirect irreducibility (with monolith) and direct
/// irreducibility, decided from the full congruence set.
///
/// Direct reducibility demands a pair of nontrivial complementary
/// congruences that permute (both compositions give the full relation),
/// matching the factor congruences of a direct decomposition.
pub fn irreducibility(alg: &FiniteAlgebra, flavor: Flavor) -> Result<Irreducibility> {
    let cons = all_congruences(alg, flavor)?;
    let n = alg.n();
    let nontrivial: Vec<&Congruence> =
        cons.iter().filter(|c| !c.is_delta() && !c.is_nabla()).collect();
    let simple = n >= 2 && nontrivial.is_empty();
    // Monolith: unique minimal nontrivial congruence.
    let mut monolith = None;
    let mut subdirectly_irreducible = false;
    if n >= 2 {
        let minimal: Vec<&Congruence> = nontrivial
            .iter()
            .filter(|c| !nontrivial.iter().any(|d| *d != **c && d.refines(c)))
            .copied()
            .collect();
        if simple {
            subdirectly_irreducible = true;
            monolith = Some(Congruence::nabla(n, flavor));
        } else if minimal.len() == 1 {
            subdirectly_irreducible = true;
            monolith = Some(minimal[0].clone());
        }
    }
    let mut directly_irreducible = true;
    'outer: for t in &nontrivial {
        for p in &nontrivial {
            if t.meet(p).is_delta()
                && t.join(p).is_nabla()
                && t.composes_to_nabla(p)
                && p.composes_to_nabla(t)
            {
                directly_irreducible = false;
                break 'outer;
            }
        }
    }
    Ok(Irreducibility { simple, subdirectly_irreducible, monolith, directly_irreducible })
}

/// The congruence lattice at `flavor`, ordered by refinement. The element
/// order matches the canonically sorted output of `all_congruences`.
pub fn congruence_lattice(alg: &FiniteAlgebra, flavor: Flavor) -> Result<(FiniteBoundedLattice, Vec<Congruence>)> {
    let cons = all_congruences(alg, flavor)?;
    let m = cons.len();
    let mut leq = vec![false; m * m];
    for i in 0..m {
        for j in 0..m {
            leq[i * m + j] = cons[i].refines(&cons[j]);
        }
    }
    let lattice = FiniteBoundedLattice::from_leq(m, leq)?;
    Ok((lattice, cons))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BrouwerSpec;
    use crate::lattice::FiniteBoundedLattice;

    fn chain_bi(n: usize) -> FiniteAlgebra {
        let l = FiniteBoundedLattice::chain(n);
        let table: Vec<usize> = (0..n).map(|i| n - 1 - i).collect();
        FiniteAlgebra::attach_involution(l, table).unwrap()
    }

    #[test]
    fn principal_of_equal_pair_is_delta() {
        let a = chain_bi(4);
        let cg = principal_congruence(&a, 2, 2, Flavor::Bi).unwrap();
        assert!(cg.is_delta());
    }

    #[test]
    fn principal_on_d5_at_bz_flavor() {
        // D5 as antiortholattice, elements 0 < a < c < a' < 1.
        let a = chain_bi(5).attach_brouwer(BrouwerSpec::Trivial).unwrap();
        let cg = principal_congruence(&a, 1, 2, Flavor::Bz).unwrap();
        // Collapsing a and c drags in a' via the involution; bounds stay single.
        assert!(cg.related(1, 2) && cg.related(2, 3));
        assert!(!cg.related(0, 1) && !cg.related(3, 4));
        assert_eq!(cg.num_blocks(), 3);
    }

    #[test]
    fn con_bi_of_d3_is_two_element() {
        let cons = all_congruences(&chain_bi(3), Flavor::Bi).unwrap();
        assert_eq!(cons.len(), 2);
    }

    #[test]
    fn con_bi_of_d5_has_four_elements() {
        let cons = all_congruences(&chain_bi(5), Flavor::Bi).unwrap();
        assert_eq!(cons.len(), 4);
    }

    #[test]
    fn quotient_by_extremes() {
        let a = chain_bi(4);
        let q = quotient(&a, &Congruence::delta(4, Flavor::Bi)).unwrap();
        assert_eq!(q.n(), 4);
        let q = quotient(&a, &Congruence::nabla(4, Flavor::Bi)).unwrap();
        assert_eq!(q.n(), 1);
    }

    #[test]
    fn d4_quotients_to_d3() {
        // Collapse the middle pair of D4; the unique BI congruence with
        // singleton bounds.
        let a = chain_bi(4);
        let theta = Congruence::from_block_map(vec![0, 1, 1, 2], Flavor::Bi);
        theta.check(&a, Flavor::Bi).unwrap();
        let q = quotient(&a, &theta).unwrap();
        assert_eq!(q.n(), 3);
        assert!(q.isomorphic_at(&chain_bi(3), Flavor::Bi).is_some());
    }

    #[test]
    fn product_kernels_witness_reducibility() {
        let square = FiniteBoundedLattice::chain(2).product(&FiniteBoundedLattice::chain(2));
        let a = FiniteAlgebra::from_lattice(square);
        let ir = irreducibility(&a, Flavor::Lattice).unwrap();
        assert!(!ir.directly_irreducible);
        assert!(!ir.simple);
    }

    #[test]
    fn chains_are_directly_irreducible_lattices() {
        for n in 2..6 {
            let a = FiniteAlgebra::from_lattice(FiniteBoundedLattice::chain(n));
            let ir = irreducibility(&a, Flavor::Lattice).unwrap();
            assert!(ir.directly_irreducible, "chain D{n}");
        }
    }

    #[test]
    fn size_guard_fires() {
        let a = chain_bi(5);
        let err = all_congruences_with_guard(&a, Flavor::Bi, 4).unwrap_err();
        assert!(matches!(err, Error::SizeGuardExceeded(5, 4)));
    }

    #[test]
    fn congruence_lattice_of_simple_algebra_is_d2() {
        let a = chain_bi(3).attach_brouwer(BrouwerSpec::Trivial).unwrap();
        let (cl, _) = congruence_lattice(&a, Flavor::Bz).unwrap();
        assert_eq!(cl.n(), 2);
    }
}
