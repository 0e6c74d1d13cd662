//! Structure-building recipes: ordinal sums, the involutive sandwich sum
//! M + K + M^d, horizontal sums with their flavor side conditions, direct
//! products, and the named-algebra catalog.
//!
//! Canonical numbering. Ordinal sums keep the lower operand's indices and
//! append the upper operand's non-bottom elements in index order. Products
//! number lexicographically, left factor most significant. Horizontal sums
//! keep the left operand's indices and append the right operand's interior
//! in index order.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{BrouwerSpec, FiniteAlgebra, Flavor};
use crate::congruence::Congruence;
use crate::error::{Error, Result};
use crate::lattice::FiniteBoundedLattice;

/// Glues the top of `l` to the bottom of `m`. Also returns the index map of
/// `m` into the sum (`l` elements keep their indices).
pub fn ordinal_sum_with_map(
    l: &FiniteBoundedLattice,
    m: &FiniteBoundedLattice,
) -> (FiniteBoundedLattice, Vec<usize>) {
    let (nl, nm) = (l.n(), m.n());
    let s = nl + nm - 1;
    let mut map = vec![0; nm];
    let mut next = nl;
    for x in 0..nm {
        if x == m.bottom() {
            map[x] = l.top();
        } else {
            map[x] = next;
            next += 1;
        }
    }
    // Inverse of the strict upper part.
    let mut pre = vec![usize::MAX; s];
    for x in 0..nm {
        pre[map[x]] = x;
    }
    pre[l.top()] = m.bottom();
    let mut leq = vec![false; s * s];
    for p in 0..s {
        for q in 0..s {
            let p_low = p < nl;
            let q_low = q < nl;
            leq[p * s + q] = match (p_low, q_low) {
                (true, true) => l.leq(p, q),
                (true, false) => true,
                (false, true) => false,
                (false, false) => m.leq(pre[p], pre[q]),
            };
        }
    }
    let sum = FiniteBoundedLattice::from_leq(s, leq).expect("ordinal sum of lattices is a lattice");
    (sum, map)
}

pub fn ordinal_sum(l: &FiniteBoundedLattice, m: &FiniteBoundedLattice) -> FiniteBoundedLattice {
    ordinal_sum_with_map(l, m).0
}

/// The sum M + K + M^d together with the three embeddings, kept so that
/// congruences and quotients can be transported between the parts.
#[derive(Debug, Clone)]
pub struct BiOrdinalSum {
    pub algebra: FiniteAlgebra,
    /// Lower copy of M into the sum.
    pub low: Vec<usize>,
    /// K into the sum.
    pub mid: Vec<usize>,
    /// Upper copy (the dual of M) into the sum, indexed by M's carrier.
    pub high: Vec<usize>,
}

/// Builds M + K + M^d as a BI-lattice. The involution is f on the lower
/// copy, K's involution in the middle, and f inverse coming back down.
///
/// The paper writes f as a dual isomorphism M -> M^d; carrier-to-carrier
/// (with the upper copy already carrying the dual order) that amounts to an
/// automorphism of M, and the identity map is always valid.
pub fn ordinal_sum_bi(
    m: &FiniteBoundedLattice,
    k: &FiniteAlgebra,
    f: Option<&[usize]>,
) -> Result<BiOrdinalSum> {
    if k.flavor() < Flavor::Bi {
        return Err(Error::MissingOperation("kleene complement"));
    }
    let nm = m.n();
    let identity: Vec<usize> = (0..nm).collect();
    let f: &[usize] = f.unwrap_or(&identity);
    assert_eq!(f.len(), nm, "dual isomorphism must be total on M");
    let mut f_inv = vec![usize::MAX; nm];
    for x in 0..nm {
        if f[x] >= nm || f_inv[f[x]] != usize::MAX {
            return Err(Error::NotDualIso(x));
        }
        f_inv[f[x]] = x;
    }
    for x in 0..nm {
        for y in 0..nm {
            if m.leq(x, y) != m.leq(f[x], f[y]) {
                return Err(Error::NotDualIso(x));
            }
        }
    }

    let (lower, mid) = ordinal_sum_with_map(m, k.lattice());
    let m_dual = m.dual();
    let (sum, high) = ordinal_sum_with_map(&lower, &m_dual);
    let low: Vec<usize> = (0..nm).collect();

    let n = sum.n();
    let mut inv = vec![usize::MAX; n];
    for x in 0..k.n() {
        inv[mid[x]] = mid[k.kleene(x)];
    }
    for x in 0..nm {
        if x != m.top() {
            inv[low[x]] = high[f[x]];
            inv[high[x]] = low[f_inv[x]];
        }
    }
    debug_assert!(inv.iter().all(|&v| v != usize::MAX));
    let algebra = FiniteAlgebra::attach_involution(sum, inv)?;
    let r = algebra.classify();
    if k.classify().pseudo_kleene == Some(true) {
        assert_eq!(r.pseudo_kleene, Some(true), "M + K + M^d is pseudo-Kleene when K is");
    }
    Ok(BiOrdinalSum { algebra, low, mid, high })
}

/// The antiortholattice M + K + M^d with the trivial Brouwer complement.
pub fn aol(m: &FiniteBoundedLattice, k: &FiniteAlgebra) -> Result<BiOrdinalSum> {
    if m.n() < 2 {
        return Err(Error::TrivialLowerPart);
    }
    if k.classify().pseudo_kleene != Some(true) {
        return Err(Error::NotPseudoKleene);
    }
    let sum = ordinal_sum_bi(m, k, None)?;
    let algebra = sum.algebra.attach_brouwer(BrouwerSpec::Trivial)?;
    assert_eq!(algebra.classify().antiortholattice, Some(true));
    Ok(BiOrdinalSum { algebra, low: sum.low, mid: sum.mid, high: sum.high })
}

/// The congruence alpha + beta + alpha' of M + K + M^d: alpha on both copies
/// of M, beta on K, glue blocks merged. Verified as a BI congruence.
pub fn sum_congruence(
    sum: &BiOrdinalSum,
    alpha: &Congruence,
    beta: &Congruence,
) -> Result<Congruence> {
    let n = sum.algebra.n();
    let nm = sum.low.len();
    let nk = sum.mid.len();
    assert_eq!(alpha.n(), nm, "alpha must live on M");
    assert_eq!(beta.n(), nk, "beta must live on K");
    // Tag each sum element with a (part, block) pair, then merge the pairs
    // meeting at the two glue points.
    let mut block = vec![usize::MAX; n];
    for x in 0..nm {
        block[sum.low[x]] = alpha.block_of(x);
        block[sum.high[x]] = nm + nk + alpha.block_of(x);
    }
    for x in 0..nk {
        // The glue points take K's block, overriding the copies of M; the
        // merge below re-links whatever alpha glued to them.
        block[sum.mid[x]] = nm + beta.block_of(x);
    }
    let mut uf: Vec<usize> = (0..n).collect();
    fn find(uf: &mut Vec<usize>, x: usize) -> usize {
        if uf[x] != x {
            let r = find(uf, uf[x]);
            uf[x] = r;
        }
        uf[x]
    }
    for p in 0..n {
        for q in (p + 1)..n {
            if block[p] == block[q] {
                let (rp, rq) = (find(&mut uf, p), find(&mut uf, q));
                if rp != rq {
                    uf[rp.max(rq)] = rp.min(rq);
                }
            }
        }
    }
    // The glue points took beta's blocks above, dropping their alpha
    // relations in the copies of M; re-link those here.
    for x in 0..nm {
        for y in 0..nm {
            if alpha.related(x, y) {
                for (a, b) in [(sum.low[x], sum.low[y]), (sum.high[x], sum.high[y])] {
                    let (ra, rb) = (find(&mut uf, a), find(&mut uf, b));
                    if ra != rb {
                        uf[ra.max(rb)] = ra.min(rb);
                    }
                }
            }
        }
    }
    let roots: Vec<usize> = {
        let mut r = Vec::with_capacity(n);
        for x in 0..n {
            r.push(find(&mut uf, x));
        }
        r
    };
    let cg = Congruence::from_block_map(roots, Flavor::Bi);
    cg.check(&sum.algebra.bi_reduct(), Flavor::Bi)?;
    Ok(cg)
}

/// Flavor of a horizontal sum, fixing which side conditions are enforced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HsFlavor {
    Bi,
    Pk,
    Bz,
    Pbz,
}

impl HsFlavor {
    fn name(self) -> &'static str {
        match self {
            HsFlavor::Bi => "BI",
            HsFlavor::Pk => "PK",
            HsFlavor::Bz => "BZ",
            HsFlavor::Pbz => "PBZ",
        }
    }
}

/// Glues the bounds of two nontrivial algebras and leaves their interiors
/// mutually incomparable. Side conditions are checked per flavor, and the
/// resulting operations are re-validated rather than assumed.
pub fn horizontal_sum(a: &FiniteAlgebra, b: &FiniteAlgebra, flavor: HsFlavor) -> Result<FiniteAlgebra> {
    let violated = |reason: &str| Error::SideConditionViolated {
        flavor: flavor.name(),
        reason: reason.to_string(),
    };
    if a.n() < 2 || b.n() < 2 {
        return Err(violated("both operands must be nontrivial"));
    }
    if a.flavor() < Flavor::Bi || b.flavor() < Flavor::Bi {
        return Err(violated("both operands must carry an involution"));
    }
    let (ra, rb) = (a.classify(), b.classify());
    match flavor {
        HsFlavor::Bi => {}
        HsFlavor::Pk => {
            if ra.pseudo_kleene != Some(true) || rb.pseudo_kleene != Some(true) {
                return Err(violated("both operands must be pseudo-Kleene"));
            }
            if ra.ortholattice != Some(true) && rb.ortholattice != Some(true) {
                return Err(violated("at least one operand must be an ortholattice"));
            }
        }
        HsFlavor::Bz => {
            if ra.bz != Some(true) || rb.bz != Some(true) {
                return Err(violated("both operands must be BZ-lattices"));
            }
            if ra.ortholattice != Some(true) && rb.ortholattice != Some(true) {
                return Err(violated("at least one operand must be an ortholattice"));
            }
        }
        HsFlavor::Pbz => {
            if ra.pbz != Some(true) || rb.pbz != Some(true) {
                return Err(violated("both operands must be PBZ* lattices"));
            }
            if ra.orthomodular != Some(true) && rb.orthomodular != Some(true) {
                return Err(violated("at least one operand must be orthomodular"));
            }
        }
    }

    let (la, lb) = (a.lattice(), b.lattice());
    let (na, nb) = (la.n(), lb.n());
    let n = na + nb - 2;
    // b's interior appended after a; b's bounds fold onto a's.
    let mut map_b = vec![0; nb];
    let mut next = na;
    for x in 0..nb {
        map_b[x] = if x == lb.bottom() {
            la.bottom()
        } else if x == lb.top() {
            la.top()
        } else {
            let i = next;
            next += 1;
            i
        };
    }
    let mut pre_b = vec![usize::MAX; n];
    for x in 0..nb {
        pre_b[map_b[x]] = x;
    }
    let in_b_interior = |p: usize| p >= na;
    let mut leq = vec![false; n * n];
    for p in 0..n {
        for q in 0..n {
            leq[p * n + q] = match (in_b_interior(p), in_b_interior(q)) {
                (false, false) => la.leq(p, q),
                (true, true) => lb.leq(pre_b[p], pre_b[q]),
                (false, true) => p == la.bottom(),
                (true, false) => q == la.top(),
            };
        }
    }
    let lattice = FiniteBoundedLattice::from_leq(n, leq)
        .expect("horizontal sum of bounded lattices is a lattice");

    let side = |p: usize, fa: &dyn Fn(usize) -> usize, fb: &dyn Fn(usize) -> usize| {
        if in_b_interior(p) { map_b[fb(pre_b[p])] } else { fa(p) }
    };
    let inv: Vec<usize> = (0..n).map(|p| side(p, &|x| a.kleene(x), &|x| b.kleene(x))).collect();
    let mut out = FiniteAlgebra::attach_involution(lattice, inv)?;
    let wants_brouwer = matches!(flavor, HsFlavor::Bz | HsFlavor::Pbz);
    if wants_brouwer {
        let br: Vec<usize> =
            (0..n).map(|p| side(p, &|x| a.brouwer(x), &|x| b.brouwer(x))).collect();
        out = out.attach_brouwer(BrouwerSpec::Table(br))?;
    }
    let r = out.classify();
    match flavor {
        HsFlavor::Bi => {}
        HsFlavor::Pk => assert_eq!(r.pseudo_kleene, Some(true)),
        HsFlavor::Bz => assert_eq!(r.bz, Some(true)),
        HsFlavor::Pbz => assert_eq!(r.pbz, Some(true)),
    }
    // The operands sit inside the sum; verify the explicit maps directly.
    let map_a: Vec<usize> = (0..na).collect();
    verify_embedding(a, &out, &map_a, wants_brouwer);
    verify_embedding(b, &out, &map_b, wants_brouwer);
    Ok(out)
}

fn verify_embedding(small: &FiniteAlgebra, big: &FiniteAlgebra, map: &[usize], with_brouwer: bool) {
    let (ls, lb) = (small.lattice(), big.lattice());
    assert_eq!(map[ls.bottom()], lb.bottom());
    assert_eq!(map[ls.top()], lb.top());
    for x in 0..small.n() {
        assert_eq!(map[small.kleene(x)], big.kleene(map[x]));
        if with_brouwer {
            assert_eq!(map[small.brouwer(x)], big.brouwer(map[x]));
        }
        for y in 0..small.n() {
            assert_eq!(map[ls.meet(x, y)], lb.meet(map[x], map[y]));
            assert_eq!(map[ls.join(x, y)], lb.join(map[x], map[y]));
        }
    }
}

/// Componentwise product of two algebras of equal flavor; index of (i, j)
/// is i * |B| + j.
pub fn product2(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Result<FiniteAlgebra> {
    if a.flavor() != b.flavor() {
        return Err(Error::MixedFlavors);
    }
    let lattice = a.lattice().product(b.lattice());
    let nb = b.n();
    let mut out = FiniteAlgebra::from_lattice(lattice);
    if a.flavor() >= Flavor::Bi {
        let inv: Vec<usize> =
            (0..out.n()).map(|p| a.kleene(p / nb) * nb + b.kleene(p % nb)).collect();
        out = FiniteAlgebra::attach_involution(out.lattice().clone(), inv)?;
    }
    if a.flavor() >= Flavor::Bz {
        let br: Vec<usize> =
            (0..out.n()).map(|p| a.brouwer(p / nb) * nb + b.brouwer(p % nb)).collect();
        out = out.attach_brouwer(BrouwerSpec::Table(br))?;
    }
    Ok(out)
}

pub fn direct_product(items: &[FiniteAlgebra]) -> Result<FiniteAlgebra> {
    let (first, rest) = items.split_first().expect("product of at least one algebra");
    let mut acc = first.clone();
    for a in rest {
        acc = product2(&acc, a)?;
    }
    Ok(acc)
}

/// The Boolean cube D2^n as an ortholattice-with-~ (Brouwer = Kleene);
/// elements are bitmasks, left factor most significant.
pub fn d2_power(n: u32) -> FiniteAlgebra {
    assert!(n <= 6, "cube guard");
    let size = 1usize << n;
    let mut leq = vec![false; size * size];
    for p in 0..size {
        for q in 0..size {
            leq[p * size + q] = p | q == q;
        }
    }
    let lattice = FiniteBoundedLattice::from_leq(size, leq).unwrap();
    let inv: Vec<usize> = (0..size).map(|p| (size - 1) ^ p).collect();
    FiniteAlgebra::attach_involution(lattice, inv.clone())
        .unwrap()
        .attach_brouwer(BrouwerSpec::Table(inv))
        .unwrap()
}

/// The BZ Kleene chain D_n: the unique antitone involution, trivial ~.
pub fn bz_chain(n: usize) -> FiniteAlgebra {
    let lattice = FiniteBoundedLattice::chain(n);
    let inv: Vec<usize> = (0..n).map(|i| n - 1 - i).collect();
    FiniteAlgebra::attach_involution(lattice, inv)
        .unwrap()
        .attach_brouwer(BrouwerSpec::Trivial)
        .unwrap()
}

/// Named algebras used throughout the test suite and CLI.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogName {
    D(usize),
    Mo(usize),
    M3,
    N5,
    B6,
    Omlnm,
    CompAol11,
    Gd(u32),
    Gdm(u32),
    Sandwich(Box<CatalogName>),
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogName::D(n) => write!(f, "D:{n}"),
            CatalogName::Mo(k) => write!(f, "MO:{k}"),
            CatalogName::M3 => write!(f, "M3"),
            CatalogName::N5 => write!(f, "N5"),
            CatalogName::B6 => write!(f, "B6"),
            CatalogName::Omlnm => write!(f, "OMLNM"),
            CatalogName::CompAol11 => write!(f, "CompAOL11"),
            CatalogName::Gd(n) => write!(f, "GD:{n}"),
            CatalogName::Gdm(n) => write!(f, "GDM:{n}"),
            CatalogName::Sandwich(k) => write!(f, "SANDWICH:{k}"),
        }
    }
}

impl FromStr for CatalogName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (head, param) = match s.split_once(':') {
            Some((h, p)) => (h, Some(p)),
            None => (s, None),
        };
        let int = |p: Option<&str>| -> Result<usize> {
            p.and_then(|p| p.parse().ok())
                .ok_or_else(|| Error::MissingParam(head.to_string()))
        };
        match head {
            "D" => Ok(CatalogName::D(int(param)?)),
            "MO" => Ok(CatalogName::Mo(int(param)?)),
            "M3" => Ok(CatalogName::M3),
            "N5" => Ok(CatalogName::N5),
            "B6" => Ok(CatalogName::B6),
            "OMLNM" => Ok(CatalogName::Omlnm),
            "CompAOL11" => Ok(CatalogName::CompAol11),
            "GD" => Ok(CatalogName::Gd(int(param)? as u32)),
            "GDM" => Ok(CatalogName::Gdm(int(param)? as u32)),
            "SANDWICH" => {
                let inner = param.ok_or_else(|| Error::MissingParam("SANDWICH".into()))?;
                Ok(CatalogName::Sandwich(Box::new(inner.parse()?)))
            }
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

pub fn catalog(name: &CatalogName) -> Result<FiniteAlgebra> {
    match name {
        CatalogName::D(n) => {
            if *n < 1 {
                return Err(Error::ParamOutOfRange("D:n needs n >= 1".into()));
            }
            Ok(bz_chain(*n))
        }
        CatalogName::Mo(k) => mo(*k),
        CatalogName::M3 => {
            let mut m3 = horizontal_sum(&d2_power(2), &bz_chain(3), HsFlavor::Pbz)?;
            m3.set_labels(
                ["0", "a", "a'", "1", "b"].iter().map(|s| s.to_string()).collect(),
            );
            Ok(m3)
        }
        CatalogName::N5 => {
            horizontal_sum(&bz_chain(3).bi_reduct(), &bz_chain(4).bi_reduct(), HsFlavor::Bi)
        }
        CatalogName::B6 => Ok(b6()),
        CatalogName::Omlnm => horizontal_sum(&d2_power(2), &d2_power(3), HsFlavor::Pbz),
        CatalogName::CompAol11 => Ok(comp_aol_11()),
        CatalogName::Gd(n) => {
            if !(1..=6).contains(n) {
                return Err(Error::ParamOutOfRange("GD:n needs 1 <= n <= 6".into()));
            }
            Ok(gd(*n)?.algebra)
        }
        CatalogName::Gdm(n) => {
            if !(1..=6).contains(n) {
                return Err(Error::ParamOutOfRange("GDM:n needs 1 <= n <= 6".into()));
            }
            Ok(gdm(*n)?.algebra)
        }
        CatalogName::Sandwich(k) => {
            let inner = catalog(k)?;
            Ok(aol(&FiniteBoundedLattice::chain(2), &inner.bi_reduct())?.algebra)
        }
    }
}

/// GD(n) = D2^n + D2^n, glued top-to-bottom, as an antiortholattice. Built
/// as cube + D1 + cube so the standard involution comes along.
pub fn gd(n: u32) -> Result<BiOrdinalSum> {
    let cube = d2_power(n);
    let d1 = FiniteAlgebra::attach_involution(FiniteBoundedLattice::chain(1), vec![0]).unwrap();
    aol(cube.lattice(), &d1)
}

/// GDM(n) = D2^n + D2 + D2^n as an antiortholattice.
pub fn gdm(n: u32) -> Result<BiOrdinalSum> {
    let cube = d2_power(n);
    let d2 = FiniteAlgebra::attach_involution(FiniteBoundedLattice::chain(2), vec![1, 0]).unwrap();
    aol(cube.lattice(), &d2)
}

///// MO(k): 0, k pairs of mutually incomparable atoms-and-coatoms a_i, a_i',
/// top; the modular ortholattice with ~ = '.
fn mo(k: usize) -> Result<FiniteAlgebra> {
    if k < 1 {
        return Err(Error::ParamOutOfRange("MO:k needs k >= 1".into()));
    }
    let n = 2 * k + 2;
    let mut covers = Vec::new();
    for i in 1..=2 * k {
        covers.push((0, i));
        covers.push((i, n - 1));
    }
    let lattice = FiniteBoundedLattice::from_covers(n, 0, n - 1, &covers)?;
    let mut inv: Vec<usize> = vec![0; n];
    inv[0] = n - 1;
    inv[n - 1] = 0;
    for i in 0..k {
        inv[2 * i + 1] = 2 * i + 2;
        inv[2 * i + 2] = 2 * i + 1;
    }
    FiniteAlgebra::attach_involution(lattice, inv.clone())?.attach_brouwer(BrouwerSpec::Table(inv))
}

/// The Benzene ring: two 4-chains glued at the bounds with the crossed
/// involution 0 < a < b' < 1, 0 < b < a' < 1. An ortholattice that is not
/// orthomodular; ~ = '.
fn b6() -> FiniteAlgebra {
    // 0:0, 1:a, 2:b, 3:b', 4:a', 5:1
    let covers = [(0, 1), (0, 2), (1, 3), (2, 4), (3, 5), (4, 5)];
    let lattice = FiniteBoundedLattice::from_covers(6, 0, 5, &covers).unwrap();
    let inv = vec![5, 4, 3, 2, 1, 0];
    let mut a = FiniteAlgebra::attach_involution(lattice, inv.clone())
        .unwrap()
        .attach_brouwer(BrouwerSpec::Table(inv))
        .unwrap();
    a.set_labels(["0", "a", "b", "b'", "a'", "1"].iter().map(|s| s.to_string()).collect());
    a
}

/// The 11-element non-modular antiortholattice with complemented elements
/// beyond the bounds: a, a' complement both b and b'.
fn comp_aol_11() -> FiniteAlgebra {
    // 0:0, 1:u, 2:v, 3:a, 4:a', 5:b, 6:b', 7:c (= c'), 8:u', 9:v', 10:1
    let covers = [
        (0, 1),
        (0, 2),
        (1, 3),
        (1, 4),
        (1, 7),
        (2, 5),
        (2, 6),
        (2, 7),
        (3, 8),
        (4, 8),
        (7, 8),
        (5, 9),
        (6, 9),
        (7, 9),
        (8, 10),
        (9, 10),
    ];
    let lattice = FiniteBoundedLattice::from_covers(11, 0, 10, &covers).unwrap();
    let inv = vec![10, 8, 9, 4, 3, 6, 5, 7, 1, 2, 0];
    let mut a = FiniteAlgebra::attach_involution(lattice, inv)
        .unwrap()
        .attach_brouwer(BrouwerSpec::Trivial)
        .unwrap();
    a.set_labels(
        ["0", "u", "v", "a", "a'", "b", "b'", "c", "u'", "v'", "1"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
    );
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordinal_sum_of_edges_is_a_chain() {
        let d2 = FiniteBoundedLattice::chain(2);
        let s = ordinal_sum(&d2, &d2);
        assert!(s.isomorphic_to(&FiniteBoundedLattice::chain(3)).is_some());
    }

    #[test]
    fn ordinal_sum_with_trivial_part_is_identity_like() {
        let d1 = FiniteBoundedLattice::chain(1);
        let m = d2_power(2);
        let s = ordinal_sum(&d1, m.lattice());
        assert!(s.isomorphic_to(m.lattice()).is_some());
    }

    #[test]
    fn ordinal_sum_is_associative_up_to_iso() {
        let (a, b, c) = (
            FiniteBoundedLattice::chain(3),
            d2_power(2).lattice().clone(),
            FiniteBoundedLattice::chain(2),
        );
        let left = ordinal_sum(&ordinal_sum(&a, &b), &c);
        let right = ordinal_sum(&a, &ordinal_sum(&b, &c));
        assert!(left.isomorphic_to(&right).is_some());
    }

    #[test]
    fn sandwich_of_d2_d3_is_d5() {
        let d3 = bz_chain(3);
        let sum = ordinal_sum_bi(&FiniteBoundedLattice::chain(2), &d3.bi_reduct(), None).unwrap();
        assert_eq!(sum.algebra.n(), 5);
        assert!(sum
            .algebra
            .isomorphic_at(&bz_chain(5).bi_reduct(), Flavor::Bi)
            .is_some());
    }

    #[test]
    fn non_automorphism_is_rejected_as_dual_iso() {
        let m = d2_power(2);
        let d1 = FiniteAlgebra::attach_involution(FiniteBoundedLattice::chain(1), vec![0]).unwrap();
        // Swapping an atom with the top is not order-preserving.
        let err = ordinal_sum_bi(m.lattice(), &d1, Some(&[0, 3, 2, 1])).unwrap_err();
        assert!(matches!(err, Error::NotDualIso(_)));
    }

    #[test]
    fn aol_guards() {
        let d3 = bz_chain(3);
        assert!(matches!(
            aol(&FiniteBoundedLattice::chain(1), &d3.bi_reduct()),
            Err(Error::TrivialLowerPart)
        ));
        let n5 = catalog(&CatalogName::N5).unwrap();
        assert!(matches!(aol(&FiniteBoundedLattice::chain(2), &n5), Err(Error::NotPseudoKleene)));
    }

    #[test]
    fn gd_and_gdm_sizes_and_class() {
        for n in 1..=3u32 {
            let gd = catalog(&CatalogName::Gd(n)).unwrap();
            let gdm = catalog(&CatalogName::Gdm(n)).unwrap();
            assert_eq!(gd.n(), 2 * (1 << n) - 1);
            assert_eq!(gdm.n(), 2 * (1 << n));
            for a in [&gd, &gdm] {
                let r = a.classify();
                assert_eq!(r.antiortholattice, Some(true));
                assert_eq!(r.distributive, Some(true));
            }
        }
    }

    #[test]
    fn m3_is_the_diamond_with_trivial_brouwer() {
        let m3 = catalog(&CatalogName::M3).unwrap();
        assert_eq!(m3.n(), 5);
        let r = m3.classify();
        assert_eq!(r.pseudo_kleene, Some(true));
        assert_eq!(r.paraorthomodular, Some(true));
        assert_eq!(r.orthomodular, Some(false));
        assert_eq!(r.modular, Some(true));
        assert_eq!(r.distributive, Some(false));
    }

    #[test]
    fn n5_is_not_pseudo_kleene() {
        let n5 = catalog(&CatalogName::N5).unwrap();
        assert_eq!(n5.n(), 5);
        let r = n5.classify();
        assert_eq!(r.pseudo_kleene, Some(false));
        assert_eq!(r.modular, Some(false));
    }

    #[test]
    fn b6_is_an_ortholattice_but_not_orthomodular() {
        let b6 = catalog(&CatalogName::B6).unwrap();
        let r = b6.classify();
        assert_eq!(r.ortholattice, Some(true));
        assert_eq!(r.orthomodular, Some(false));
        assert_eq!(r.paraorthomodular, Some(false));
        // Lattice reduct is the horizontal sum of two 4-chains.
        let d4 = bz_chain(4);
        let hs = horizontal_sum(&d4.bi_reduct(), &d4.bi_reduct(), HsFlavor::Bi).unwrap();
        assert!(b6.lattice().isomorphic_to(hs.lattice()).is_some());
        // But B6 is not BI-isomorphic to that sum.
        assert!(b6.isomorphic_at(&hs, Flavor::Bi).is_none());
    }

    #[test]
    fn omlnm_is_orthomodular_not_modular() {
        let a = catalog(&CatalogName::Omlnm).unwrap();
        assert_eq!(a.n(), 10);
        let r = a.classify();
        assert_eq!(r.orthomodular, Some(true));
        assert_eq!(r.modular, Some(false));
    }

    #[test]
    fn mo2_is_a_modular_non_boolean_ortholattice() {
        let a = catalog(&CatalogName::Mo(2)).unwrap();
        let r = a.classify();
        assert_eq!(r.ortholattice, Some(true));
        assert_eq!(r.modular, Some(true));
        assert_eq!(r.boolean_algebra, Some(false));
        // MO2 is also the horizontal sum of two Boolean squares.
        let hs = horizontal_sum(&d2_power(2), &d2_power(2), HsFlavor::Pbz).unwrap();
        assert!(a.isomorphic_at(&hs, Flavor::Bz).is_some());
    }

    #[test]
    fn comp_aol_11_classification() {
        let a = catalog(&CatalogName::CompAol11).unwrap();
        assert_eq!(a.n(), 11);
        let r = a.classify();
        assert_eq!(r.antiortholattice, Some(true));
        // c sits above both atoms and below both coatoms, which rules out
        // any pentagon; distributivity still fails on the diamonds.
        assert_eq!(r.modular, Some(true));
        assert_eq!(r.distributive, Some(false));
        let comp = a.lattice().complemented_elements();
        let named: Vec<String> = comp.iter().map(|&x| a.label(x)).collect();
        assert_eq!(named, ["0", "a", "a'", "b", "b'", "1"]);
    }

    #[test]
    fn pk_side_condition_rejects_two_chains() {
        let d3 = bz_chain(3).bi_reduct();
        let err = horizontal_sum(&d3, &d3, HsFlavor::Pk).unwrap_err();
        assert!(matches!(err, Error::SideConditionViolated { .. }));
        let ok = horizontal_sum(&d3, &d3, HsFlavor::Bi).unwrap();
        assert_eq!(ok.n(), 4);
        // D3 x D3 at BI flavor has the square reduct.
        assert!(ok.lattice().isomorphic_to(d2_power(2).lattice()).is_some());
    }

    #[test]
    fn products_are_componentwise() {
        let d2 = bz_chain(2);
        let p = direct_product(&[d2.clone(), d2.clone()]).unwrap();
        assert_eq!(p.n(), 4);
        assert_eq!(p.kleene(0), 3);
        assert_eq!(p.kleene(1), 2);
        // PBZ* is equational, so the product still satisfies (*); here the
        // product Brouwer complement coincides with the involution.
        assert_eq!(p.classify().star, Some(true));
        assert_eq!(p.brouwer_table(), Some(&[3, 2, 1, 0][..]));
        let err = product2(&d2, &d2.bi_reduct()).unwrap_err();
        assert!(matches!(err, Error::MixedFlavors));
    }

    #[test]
    fn sum_congruence_glues_blocks() {
        // SANDWICH(D3): nabla on D2, delta on K collapses only the glue pairs.
        let d3 = bz_chain(3).bi_reduct();
        let sum = ordinal_sum_bi(&FiniteBoundedLattice::chain(2), &d3, None).unwrap();
        let alpha = Congruence::nabla(2, Flavor::Lattice);
        let beta = Congruence::delta(3, Flavor::Bi);
        let cg = sum_congruence(&sum, &alpha, &beta).unwrap();
        assert_eq!(cg.num_blocks(), 3);
        assert!(cg.related(sum.low[0], sum.mid[0]));
        assert!(cg.related(sum.high[0], sum.mid[2]));
        let q = crate::congruence::quotient(&sum.algebra, &cg).unwrap();
        assert!(q.isomorphic_at(&d3, Flavor::Bi).is_some());
    }

    #[test]
    fn catalog_names_round_trip() {
        for s in ["D:4", "MO:2", "M3", "N5", "B6", "OMLNM", "CompAOL11", "GD:2", "GDM:3", "SANDWICH:M3"] {
            let name: CatalogName = s.parse().unwrap();
            assert_eq!(name.to_string(), s);
            catalog(&name).unwrap();
        }
        assert!(matches!("XYZ".parse::<CatalogName>(), Err(Error::UnknownName(_))));
        assert!(matches!("GD".parse::<CatalogName>(), Err(Error::MissingParam(_))));
        assert!(matches!(catalog(&CatalogName::Gd(9)), Err(Error::ParamOutOfRange(_))));
    }
}
