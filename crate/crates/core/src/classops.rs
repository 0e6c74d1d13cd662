//! Finite fragments of the class operators: embeddings, subalgebras, the
//! explicit GDM -> GD embedding, sandwich decomposition and the structural
//! characterizations built on them.

use crate::algebra::{FiniteAlgebra, Flavor};
use crate::constructions::{aol, gd, gdm};
use crate::error::{Error, Result};
use crate::lattice::FiniteBoundedLattice;

pub const SUBALGEBRA_GUARD: usize = 16;

/// Searches for an injective map preserving bounds, meet, join and the unary
/// operations demanded by `flavor`. Deterministic: elements of `a` are
/// assigned in index order, candidates tried in index order, first full
/// solution returned.
pub fn embeds(a: &FiniteAlgebra, b: &FiniteAlgebra, flavor: Flavor) -> Option<Vec<usize>> {
    assert!(
        flavor <= a.flavor() && flavor <= b.flavor(),
        "embedding flavor exceeds an operand's operations"
    );
    if a.n() > b.n() {
        return None;
    }
    let (la, lb) = (a.lattice(), b.lattice());
    let mut map = vec![usize::MAX; a.n()];
    let mut used = vec![false; b.n()];
    map[la.bottom()] = lb.bottom();
    map[la.top()] = lb.top();
    used[lb.bottom()] = true;
    if la.top() != la.bottom() {
        if lb.top() == lb.bottom() {
            return None;
        }
        used[lb.top()] = true;
    }
    let order: Vec<usize> =
        (0..a.n()).filter(|&x| x != la.bottom() && x != la.top()).collect();

    fn consistent(
        a: &FiniteAlgebra,
        b: &FiniteAlgebra,
        flavor: Flavor,
        map: &[usize],
        e: usize,
        c: usize,
    ) -> bool {
        let (la, lb) = (a.lattice(), b.lattice());
        for x in 0..a.n() {
            let mx = map[x];
            if mx == usize::MAX {
                continue;
            }
            let mx = if x == e { c } else { mx };
            if la.leq(x, e) != lb.leq(mx, c) || la.leq(e, x) != lb.leq(c, mx) {
                return false;
            }
            let me = la.meet(e, x);
            if map[me] != usize::MAX && map[me] != lb.meet(c, mx) {
                return false;
            }
            let jo = la.join(e, x);
            if map[jo] != usize::MAX && map[jo] != lb.join(c, mx) {
                return false;
            }
        }
        if flavor >= Flavor::Bi {
            let k = a.kleene(e);
            if map[k] != usize::MAX && map[k] != b.kleene(c) {
                return false;
            }
        }
        if flavor >= Flavor::Bz {
            let br = a.brouwer(e);
            if map[br] != usize::MAX && map[br] != b.brouwer(c) {
                return false;
            }
        }
        true
    }

    fn full_check(a: &FiniteAlgebra, b: &FiniteAlgebra, flavor: Flavor, map: &[usize]) -> bool {
        let (la, lb) = (a.lattice(), b.lattice());
        for x in 0..a.n() {
            if flavor >= Flavor::Bi && map[a.kleene(x)] != b.kleene(map[x]) {
                return false;
            }
            if flavor >= Flavor::Bz && map[a.brouwer(x)] != b.brouwer(map[x]) {
                return false;
            }
            for y in 0..a.n() {
                if map[la.meet(x, y)] != lb.meet(map[x], map[y])
                    || map[la.join(x, y)] != lb.join(map[x], map[y])
                {
                    return false;
                }
            }
        }
        true
    }

    fn search(
        a: &FiniteAlgebra,
        b: &FiniteAlgebra,
        flavor: Flavor,
        order: &[usize],
        depth: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let Some(&e) = order.get(depth) else {
            return full_check(a, b, flavor, map);
        };
        for c in 0..b.n() {
            if used[c] || !consistent(a, b, flavor, map, e, c) {
                continue;
            }
            map[e] = c;
            used[c] = true;
            if search(a, b, flavor, order, depth + 1, map, used) {
                return true;
            }
            map[e] = usize::MAX;
            used[c] = false;
        }
        false
    }

    if search(a, b, flavor, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn check_embedding(a: &FiniteAlgebra, b: &FiniteAlgebra, map: &[usize], flavor: Flavor) -> bool {
    let (la, lb) = (a.lattice(), b.lattice());
    if map[la.bottom()] != lb.bottom() || map[la.top()] != lb.top() {
        return false;
    }
    let mut seen = vec![false; b.n()];
    for &c in map {
        if seen[c] {
            return false;
        }
        seen[c] = true;
    }
    for x in 0..a.n() {
        if flavor >= Flavor::Bi && map[a.kleene(x)] != b.kleene(map[x]) {
            return false;
        }
        if flavor >= Flavor::Bz && map[a.brouwer(x)] != b.brouwer(map[x]) {
            return false;
        }
        for y in 0..a.n() {
            if map[la.meet(x, y)] != lb.meet(map[x], map[y])
                || map[la.join(x, y)] != lb.join(map[x], map[y])
            {
                return false;
            }
        }
    }
    true
}

/// The explicit BZ embedding of GDM(n) into GD(m): atoms go to atoms, the
/// lower cube maps by widening bitmasks, and involution images follow along.
/// Verified operation by operation before returning.
pub fn distsets_embedding(n: u32, m: u32) -> Result<(FiniteAlgebra, FiniteAlgebra, Vec<usize>)> {
    if !(1 <= n && n < m && m <= 5) {
        return Err(Error::ParamOutOfRange(format!(
            "distsets embedding needs 1 <= n < m <= 5, got ({n}, {m})"
        )));
    }
    let small = gdm(n)?;
    let big = gd(m)?;
    let mut map = vec![usize::MAX; small.algebra.n()];
    for s in 0..(1usize << n) {
        map[small.low[s]] = big.low[s];
        map[small.high[s]] = big.algebra.kleene(big.low[s]);
    }
    assert!(map.iter().all(|&v| v != usize::MAX));
    assert!(check_embedding(&small.algebra, &big.algebra, &map, Flavor::Bz));
    Ok((small.algebra, big.algebra, map))
}

/// If `a` is (isomorphic to) D2 + K + D2, returns the interior K with its
/// induced operations, as a BI algebra. Requires `a` to be PBZ*.
pub fn sandwich_decompose(a: &FiniteAlgebra) -> Option<FiniteAlgebra> {
    assert_eq!(a.classify().pbz, Some(true), "sandwich decomposition needs a PBZ* algebra");
    let l = a.lattice();
    let atoms = l.atoms();
    let coatoms = l.coatoms();
    if atoms.len() != 1 || coatoms.len() != 1 {
        return None;
    }
    let (u, w) = (atoms[0], coatoms[0]);
    if !l.leq(u, w) {
        return None;
    }
    let interior: Vec<usize> = (0..a.n()).filter(|&x| l.leq(u, x) && l.leq(x, w)).collect();
    if interior.len() != a.n() - 2 {
        return None;
    }
    // The interval is closed under ' because u' = w in such an algebra.
    if a.kleene(u) != w {
        return None;
    }
    let k = induced_algebra(a, &interior, Flavor::Bi);
    debug_assert_eq!(k.classify().pseudo_kleene, Some(true));
    // The decomposition is only reported when it reassembles to a.
    let rebuilt = aol(&FiniteBoundedLattice::chain(2), &k).ok()?;
    let flavor = a.flavor().min(Flavor::Bz);
    a.isomorphic_at(&rebuilt.algebra, flavor).map(|_| k)
}

/// The induced algebra on a subuniverse (assumed closed under the flavor's
/// operations and containing the bounds).
pub fn induced_algebra(a: &FiniteAlgebra, carrier: &[usize], flavor: Flavor) -> FiniteAlgebra {
    let l = a.lattice();
    let m = carrier.len();
    let mut pos = vec![usize::MAX; a.n()];
    for (i, &x) in carrier.iter().enumerate() {
        pos[x] = i;
    }
    let mut leq = vec![false; m * m];
    for i in 0..m {
        for j in 0..m {
            leq[i * m + j] = l.leq(carrier[i], carrier[j]);
        }
    }
    let lattice = FiniteBoundedLattice::from_leq(m, leq).expect("closed subuniverse is a lattice");
    let mut out = FiniteAlgebra::from_lattice(lattice);
    if flavor >= Flavor::Bi {
        let table: Vec<usize> = carrier.iter().map(|&x| pos[a.kleene(x)]).collect();
        out = FiniteAlgebra::attach_involution(out.lattice().clone(), table)
            .expect("induced involution");
    }
    if flavor >= Flavor::Bz {
        let table: Vec<usize> = carrier.iter().map(|&x| pos[a.brouwer(x)]).collect();
        out = out
            .attach_brouwer(crate::algebra::BrouwerSpec::Table(table))
            .expect("induced brouwer complement");
    }
    if let Some(labels) = a.lattice().labels() {
        out.set_labels(carrier.iter().map(|&x| labels[x].clone()).collect());
    }
    out
}

#[derive(Debug, Clone)]
pub struct RReport {
    pub satisfies_r: bool,
    pub satisfies_rv: bool,
    /// The structural side: |A| <= 2, or the sandwich interior exists and is
    /// an ortholattice.
    pub structural: bool,
    pub consistent: bool,
}

/// Checks the characterization of R on an antiortholattice: A satisfies R
/// iff A satisfies RV iff A is trivial/D2 or A = D2 + K + D2 with K an
/// ortholattice.
pub fn r_characterization(a: &FiniteAlgebra) -> Result<RReport> {
    if a.classify().antiortholattice != Some(true) {
        return Err(Error::NotAntiortholattice);
    }
    let r = crate::terms::satisfies(a, &crate::terms::named_identity("R", None)?)?.holds;
    let rv = crate::terms::satisfies(a, &crate::terms::named_identity("RV", None)?)?.holds;
    let structural = if a.n() <= 2 {
        true
    } else {
        match sandwich_decompose(a) {
            Some(k) => k.classify().ortholattice == Some(true),
            None => false,
        }
    };
    Ok(RReport { satisfies_r: r, satisfies_rv: rv, structural, consistent: r == rv && r == structural })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Dichotomy {
    Ortholattice,
    /// A BI embedding of D3 (an element with x = x').
    WitnessD3(Vec<usize>),
    /// A BI embedding of D4 (an element with 0 < x < x').
    WitnessD4(Vec<usize>),
}

/// Every BI-lattice either is an ortholattice or contains some x above 0
/// with x <= x', yielding a D3 or D4 chain closed under the involution.
pub fn d3_ol_dichotomy(a: &FiniteAlgebra) -> Dichotomy {
    assert!(a.flavor() >= Flavor::Bi);
    let l = a.lattice();
    if a.classify().ortholattice == Some(true) {
        return Dichotomy::Ortholattice;
    }
    for x in 0..a.n() {
        if x == l.bottom() || !l.leq(x, a.kleene(x)) {
            continue;
        }
        let (d, map) = if x == a.kleene(x) {
            (3, vec![l.bottom(), x, l.top()])
        } else {
            (4, vec![l.bottom(), x, a.kleene(x), l.top()])
        };
        let witness = crate::constructions::bz_chain(d).bi_reduct();
        assert!(check_embedding(&witness, a, &map, Flavor::Bi));
        return if d == 3 { Dichotomy::WitnessD3(map) } else { Dichotomy::WitnessD4(map) };
    }
    unreachable!("a non-ortholattice contains x != 0 with x <= x'");
}

#[derive(Debug, Clone)]
pub struct Subalgebra {
    pub carrier: Vec<usize>,
    pub algebra: FiniteAlgebra,
}

/// All subuniverses containing the bounds and closed under the flavor's
/// operations, grown by closing generator extensions to a fixpoint.
pub fn all_subalgebras(
    a: &FiniteAlgebra,
    flavor: Flavor,
    up_to_iso: bool,
) -> Result<Vec<Subalgebra>> {
    if a.n() > SUBALGEBRA_GUARD {
        return Err(Error::SizeGuardExceeded(a.n(), SUBALGEBRA_GUARD));
    }
    let l = a.lattice();
    let close = |seed: &[usize]| -> Vec<usize> {
        let mut inside = vec![false; a.n()];
        for &x in seed {
            inside[x] = true;
        }
        loop {
            let mut changed = false;
            let members: Vec<usize> = (0..a.n()).filter(|&x| inside[x]).collect();
            for &x in &members {
                for &y in &members {
                    for z in [l.meet(x, y), l.join(x, y)] {
                        if !inside[z] {
                            inside[z] = true;
                            changed = true;
                        }
                    }
                }
                if flavor >= Flavor::Bi && !inside[a.kleene(x)] {
                    inside[a.kleene(x)] = true;
                    changed = true;
                }
                if flavor >= Flavor::Bz && !inside[a.brouwer(x)] {
                    inside[a.brouwer(x)] = true;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        (0..a.n()).filter(|&x| inside[x]).collect()
    };

    let mut found: Vec<Vec<usize>> = vec![close(&[l.bottom(), l.top()])];
    let mut frontier = found.clone();
    while let Some(s) = frontier.pop() {
        for e in 0..a.n() {
            if s.contains(&e) {
                continue;
            }
            let mut seed = s.clone();
            seed.push(e);
            let bigger = close(&seed);
            if !found.contains(&bigger) {
                found.push(bigger.clone());
                frontier.push(bigger);
            }
        }
    }
    found.sort();
    let mut out: Vec<Subalgebra> = Vec::new();
    for carrier in found {
        let algebra = induced_algebra(a, &carrier, flavor);
        if up_to_iso && out.iter().any(|s| s.algebra.isomorphic_at(&algebra, flavor).is_some()) {
            continue;
        }
        out.push(Subalgebra { carrier, algebra });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{bz_chain, catalog, CatalogName};

    #[test]
    fn chains_embed_in_longer_chains_at_bz_flavor() {
        let (d3, d5) = (bz_chain(3), bz_chain(5));
        let map = embeds(&d3, &d5, Flavor::Bz).unwrap();
        assert!(check_embedding(&d3, &d5, &map, Flavor::Bz));
        // D3 has a self-involutive interior element; D2^2 does not.
        let square = crate::constructions::d2_power(2);
        assert!(embeds(&d3, &square, Flavor::Bi).is_none());
        // But the lattice reducts do embed.
        assert!(embeds(&d3.lattice_reduct(), &square.lattice_reduct(), Flavor::Lattice).is_some());
    }

    #[test]
    fn embedding_is_reflexive_and_composes() {
        let m3 = catalog(&CatalogName::M3).unwrap();
        let id = embeds(&m3, &m3, Flavor::Bz).unwrap();
        assert_eq!(id, (0..m3.n()).collect::<Vec<_>>());
        let d3 = bz_chain(3);
        let d5 = bz_chain(5);
        let gd2 = catalog(&CatalogName::Gd(2)).unwrap();
        let f = embeds(&d3, &d5, Flavor::Bz).unwrap();
        let g = embeds(&d5, &gd2, Flavor::Bz).unwrap();
        let comp: Vec<usize> = f.iter().map(|&x| g[x]).collect();
        assert!(check_embedding(&d3, &gd2, &comp, Flavor::Bz));
        // Bounds are pinned, so interior meets block M3 from embedding in
        // its own sandwich: mid(a) ^ mid(a') lands at mid(0), not 0.
        let sw: FiniteAlgebra = catalog(&CatalogName::Sandwich(Box::new(CatalogName::M3))).unwrap();
        assert!(embeds(&m3, &sw, Flavor::Bi).is_none());
    }

    #[test]
    fn distsets_map_is_verified() {
        for (n, m) in [(1, 2), (2, 3)] {
            let (small, big, map) = distsets_embedding(n, m).unwrap();
            assert!(check_embedding(&small, &big, &map, Flavor::Bz));
        }
        assert!(matches!(distsets_embedding(2, 2), Err(Error::ParamOutOfRange(_))));
    }

    #[test]
    fn sandwich_decomposition_round_trips() {
        let d5 = bz_chain(5);
        let k = sandwich_decompose(&d5).unwrap();
        assert!(k.isomorphic_at(&bz_chain(3).bi_reduct(), Flavor::Bi).is_some());
        let d4 = bz_chain(4);
        let k = sandwich_decompose(&d4).unwrap();
        assert_eq!(k.n(), 2);
        let gd2 = catalog(&CatalogName::Gd(2)).unwrap();
        assert!(sandwich_decompose(&gd2).is_none());
    }

    #[test]
    fn r_characterization_on_chains() {
        // D5 = D2 + D3 + D2 and D3 is not an ortholattice: R must fail.
        let rep = r_characterization(&bz_chain(5)).unwrap();
        assert!(rep.consistent && !rep.satisfies_r);
        // D4 = D2 + D2 + D2 and D2 is an ortholattice: R must hold.
        let rep = r_characterization(&bz_chain(4)).unwrap();
        assert!(rep.consistent && rep.satisfies_r);
        let rep = r_characterization(&bz_chain(2)).unwrap();
        assert!(rep.consistent && rep.satisfies_r);
        let mo2 = catalog(&CatalogName::Mo(2)).unwrap();
        assert!(matches!(r_characterization(&mo2), Err(Error::NotAntiortholattice)));
    }

    #[test]
    fn dichotomy_branches() {
        let b6 = catalog(&CatalogName::B6).unwrap();
        assert_eq!(d3_ol_dichotomy(&b6), Dichotomy::Ortholattice);
        let m3 = catalog(&CatalogName::M3).unwrap();
        assert!(matches!(d3_ol_dichotomy(&m3), Dichotomy::WitnessD3(_)));
        let d4 = bz_chain(4);
        match d3_ol_dichotomy(&d4) {
            Dichotomy::WitnessD4(map) => assert_eq!(map, vec![0, 1, 2, 3]),
            other => panic!("expected a D4 witness, got {other:?}"),
        }
    }

    #[test]
    fn subalgebras_of_d5_at_bz_flavor() {
        let subs = all_subalgebras(&bz_chain(5), Flavor::Bz, false).unwrap();
        let carriers: Vec<Vec<usize>> = subs.iter().map(|s| s.carrier.clone()).collect();
        assert_eq!(
            carriers,
            vec![vec![0, 1, 2, 3, 4], vec![0, 1, 3, 4], vec![0, 2, 4], vec![0, 4]]
        );
    }

    #[test]
    fn horizontal_sum_operands_are_subalgebras() {
        let mo2 = catalog(&CatalogName::Mo(2)).unwrap();
        let square = crate::constructions::d2_power(2);
        assert!(embeds(&square, &mo2, Flavor::Bz).is_some());
        let subs = all_subalgebras(&mo2, Flavor::Bz, true).unwrap();
        assert!(subs
            .iter()
            .any(|s| s.algebra.isomorphic_at(&square, Flavor::Bz).is_some()));
    }

    #[test]
    fn guard_on_subalgebra_sweep() {
        let gd4 = catalog(&CatalogName::Gd(4)).unwrap();
        assert!(matches!(
            all_subalgebras(&gd4, Flavor::Bz, false),
            Err(Error::SizeGuardExceeded(31, 16))
        ));
    }
}
