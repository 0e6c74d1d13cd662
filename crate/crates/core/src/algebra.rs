//! Unary decorations (Kleene complement, Brouwer complement) on finite
//! bounded lattices, and the axiom-class classification sweep.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::FiniteBoundedLattice;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Flavor {
    Lattice,
    Bi,
    Bz,
}

impl Flavor {
    pub fn name(self) -> &'static str {
        match self {
            Flavor::Lattice => "Lattice",
            Flavor::Bi => "BI",
            Flavor::Bz => "BZ",
        }
    }
}

/// How to supply a Brouwer complement: an explicit table, or the trivial one
/// (everything nonzero maps to 0, and 0 maps to 1).
#[derive(Debug, Clone)]
pub enum BrouwerSpec {
    Table(Vec<usize>),
    Trivial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAlgebra {
    lattice: FiniteBoundedLattice,
    kleene: Option<Vec<usize>>,
    brouwer: Option<Vec<usize>>,
    flavor: Flavor,
}

impl FiniteAlgebra {
    /// Wraps a bare bounded lattice (no unary operations).
    pub fn from_lattice(lattice: FiniteBoundedLattice) -> Self {
        Self { lattice, kleene: None, brouwer: None, flavor: Flavor::Lattice }
    }

    /// Attaches an involution table, verifying it is involutive and
    /// order-reversing on every pair.
    pub fn attach_involution(lattice: FiniteBoundedLattice, table: Vec<usize>) -> Result<Self> {
        let n = lattice.n();
        assert_eq!(table.len(), n, "involution table must be total on the carrier");
        for a in 0..n {
            if table[a] >= n || table[table[a]] != a {
                return Err(Error::NotInvolutive(a));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if lattice.leq(a, b) && !lattice.leq(table[b], table[a]) {
                    return Err(Error::NotAntitone(a, b));
                }
            }
        }
        Ok(Self { lattice, kleene: Some(table), brouwer: None, flavor: Flavor::Bi })
    }

    /// Attaches a Brouwer complement to a BI algebra, verifying all axioms
    /// exhaustively, plus the derived laws that must follow from them.
    pub fn attach_brouwer(self, spec: BrouwerSpec) -> Result<Self> {
        let n = self.lattice.n();
        let kleene = self
            .kleene
            .clone()
            .ok_or(Error::MissingOperation("kleene complement"))?;
        let table = match spec {
            BrouwerSpec::Table(t) => {
                assert_eq!(t.len(), n, "Brouwer table must be total on the carrier");
                t
            }
            BrouwerSpec::Trivial => (0..n)
                .map(|a| if a == self.lattice.bottom() { self.lattice.top() } else { self.lattice.bottom() })
                .collect(),
        };
        let l = &self.lattice;
        for a in 0..n {
            if table[a] >= n {
                return Err(Error::BZAxiomFailure { axiom: "totality", witness: a });
            }
        }
        for a in 0..n {
            for b in 0..n {
                if l.leq(a, b) && !l.leq(table[b], table[a]) {
                    return Err(Error::BZAxiomFailure { axiom: "order-reversing", witness: a });
                }
            }
        }
        for a in 0..n {
            if l.meet(a, table[a]) != l.bottom() {
                return Err(Error::BZAxiomFailure { axiom: "a \u{2227} a~ = 0", witness: a });
            }
            if !l.leq(a, table[table[a]]) {
                return Err(Error::BZAxiomFailure { axiom: "a \u{2264} a~~", witness: a });
            }
            if table[table[a]] != kleene[table[a]] {
                return Err(Error::BZAxiomFailure { axiom: "a~~ = a~'", witness: a });
            }
        }
        // Derived laws of every BZ-lattice; a failure here is a bug.
        for a in 0..n {
            assert_eq!(table[table[table[a]]], table[a], "a~~~ = a~");
            assert!(l.leq(table[a], kleene[a]), "a~ <= a'");
            for b in 0..n {
                assert_eq!(table[l.join(a, b)], l.meet(table[a], table[b]), "(a v b)~ = a~ ^ b~");
                assert!(l.leq(l.join(table[a], table[b]), table[l.meet(a, b)]));
            }
        }
        Ok(Self { lattice: self.lattice, kleene: Some(kleene), brouwer: Some(table), flavor: Flavor::Bz })
    }

    pub fn lattice(&self) -> &FiniteBoundedLattice {
        &self.lattice
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn n(&self) -> usize {
        self.lattice.n()
    }

    pub fn bottom(&self) -> usize {
        self.lattice.bottom()
    }

    pub fn top(&self) -> usize {
        self.lattice.top()
    }

    pub fn kleene_table(&self) -> Option<&[usize]> {
        self.kleene.as_deref()
    }

    pub fn brouwer_table(&self) -> Option<&[usize]> {
        self.brouwer.as_deref()
    }

    pub fn kleene(&self, a: usize) -> usize {
        self.kleene.as_ref().expect("kleene complement present")[a]
    }

    pub fn brouwer(&self, a: usize) -> usize {
        self.brouwer.as_ref().expect("brouwer complement present")[a]
    }

    /// The bounded lattice reduct, as an algebra of flavor Lattice.
    pub fn lattice_reduct(&self) -> Self {
        Self::from_lattice(self.lattice.clone())
    }

    /// The BI-lattice reduct (drops the Brouwer complement).
    pub fn bi_reduct(&self) -> Self {
        Self {
            lattice: self.lattice.clone(),
            kleene: self.kleene.clone(),
            brouwer: None,
            flavor: if self.kleene.is_some() { Flavor::Bi } else { Flavor::Lattice },
        }
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        self.lattice.set_labels(labels);
    }

    pub fn label(&self, x: usize) -> String {
        self.lattice.label(x)
    }

    /// Sharp elements: S(L) = { x : x v x' = 1 }. For PBZ* algebras the two
    /// alternate descriptions of S are asserted as well.
    pub fn sharp_elements(&self) -> Vec<usize> {
        let k = self.kleene.as_ref().expect("sharp elements need the involution");
        let l = &self.lattice;
        let s: Vec<usize> = (0..l.n()).filter(|&x| l.join(x, k[x]) == l.top()).collect();
        if self.classify().pbz == Some(true) {
            let b = self.brouwer.as_ref().unwrap();
            let by_eq: Vec<usize> = (0..l.n()).filter(|&x| k[x] == b[x]).collect();
            let mut by_image: Vec<usize> = (0..l.n()).map(|x| b[x]).collect();
            by_image.sort_unstable();
            by_image.dedup();
            assert_eq!(s, by_eq, "S = {{ a : a' = a~ }} in a PBZ* algebra");
            assert_eq!(s, by_image, "S = {{ a~ : a in L }} in a PBZ* algebra");
        }
        s
    }

    /// Dense elements D(L) = { x : x~ = 0 } and T(L) = D(L) with 0 added.
    pub fn dense_and_t(&self) -> DenseSets {
        assert_eq!(self.flavor, Flavor::Bz, "dense elements need the Brouwer complement");
        let l = &self.lattice;
        let b = self.brouwer.as_ref().unwrap();
        let d: Vec<usize> = (0..l.n()).filter(|&x| b[x] == l.bottom()).collect();
        let mut t: Vec<usize> = d.clone();
        if !t.contains(&l.bottom()) {
            t.push(l.bottom());
            t.sort_unstable();
        }
        assert!(t.contains(&l.bottom()) && t.contains(&l.top()));
        for &x in &t {
            for &y in &t {
                assert!(t.contains(&l.join(x, y)), "T is closed under join");
            }
        }
        if self.classify().antiortholattice == Some(true) {
            assert_eq!(d.len(), l.n() - 1, "antiortholattice has D = L minus 0");
        }
        DenseSets { dense: d, t }
    }

    /// Full axiom-class classification by exhaustive sweep.
    pub fn classify(&self) -> ClassificationReport {
        let l = &self.lattice;
        let n = l.n();
        let laws = l.lattice_laws();
        let k = self.kleene.as_deref();
        let b = self.brouwer.as_deref();

        let pseudo_kleene = k.map(|k| {
            (0..n).all(|a| (0..n).all(|bb| l.leq(l.meet(a, k[a]), l.join(bb, k[bb]))))
        });
        let ortholattice = k.map(|k| (0..n).all(|a| l.join(a, k[a]) == l.top()));
        let orthomodular = k.map(|k| {
            (0..n).all(|a| {
                (0..n).all(|bb| !l.leq(a, bb) || bb == l.join(l.meet(bb, k[a]), a))
            })
        });
        let paraorthomodular = k.map(|k| {
            (0..n).all(|a| {
                (0..n).all(|bb| {
                    !(l.leq(a, bb) && l.meet(k[a], bb) == l.bottom()) || a == bb
                })
            })
        });
        let star = match (k, b) {
            (Some(k), Some(b)) => Some((0..n).all(|x| {
                b[l.meet(x, k[x])] == l.join(b[x], b[k[x]])
            })),
            _ => None,
        };
        let sdm = b.map(|b| {
            (0..n).all(|x| (0..n).all(|y| b[l.meet(x, y)] == l.join(b[x], b[y])))
        });
        let sk = match (k, b) {
            (Some(k), Some(b)) => Some((0..n).all(|x| {
                (0..n).all(|y| l.leq(l.meet(x, b[b[y]]), l.join(b[k[x]], y)))
            })),
            _ => None,
        };
        let j0 = b.map(|b| {
            (0..n).all(|x| {
                (0..n).all(|y| l.join(l.meet(x, b[y]), l.meet(x, b[b[y]])) == x)
            })
        });
        // A stored Brouwer table has already passed its axioms, but a
        // BZ-lattice additionally demands a pseudo-Kleene involution.
        let bz = match (pseudo_kleene, b) {
            (Some(pk), Some(_)) => Some(pk),
            _ => None,
        };
        let pbz = match (bz, paraorthomodular, star) {
            (Some(bz), Some(p), Some(s)) => Some(bz && p && s),
            _ => None,
        };
        let sharp_trivial = k.map(|k| {
            (0..n).all(|x| {
                l.join(x, k[x]) != l.top() || x == l.bottom() || x == l.top()
            })
        });
        let antiortholattice = match (pbz, sharp_trivial) {
            (Some(p), Some(s)) => Some(p && s),
            _ => None,
        };
        let boolean_algebra = ortholattice.map(|o| o && laws.distributive);
        let zero_meet_irreducible = Some(l.zero_meet_irreducible());
        let sandwich_shape = Some(
            l.atoms().len() == 1
                && l.coatoms().len() == 1
                && l.leq(l.atoms()[0], l.coatoms()[0]),
        );

        let report = ClassificationReport {
            pseudo_kleene,
            ortholattice,
            orthomodular,
            paraorthomodular,
            star,
            bz,
            pbz,
            antiortholattice,
            sdm,
            sk,
            j0,
            distributive: Some(laws.distributive),
            modular: Some(laws.modular),
            boolean_algebra,
            zero_meet_irreducible,
            sandwich_shape,
        };
        report.assert_implications();
        // In a PBZ* algebra, the sharp elements form the largest orthomodular
        // subalgebra; check the induced structure is orthomodular.
        if report.pbz == Some(true) && sharp_trivial != Some(true) {
            let k = k.unwrap();
            let s: Vec<usize> =
                (0..n).filter(|&x| l.join(x, k[x]) == l.top()).collect();
            for &x in &s {
                for &y in &s {
                    assert!(
                        s.contains(&l.meet(x, y)) && s.contains(&l.join(x, y)) && s.contains(&k[x]),
                        "sharp elements are a subuniverse of a PBZ* algebra"
                    );
                    assert!(
                        !l.leq(x, y) || y == l.join(l.meet(y, k[x]), x),
                        "sharp elements are orthomodular in a PBZ* algebra"
                    );
                }
            }
        }
        report
    }

    /// Flavor-aware isomorphism: a lattice isomorphism that also commutes
    /// with the unary operations demanded by `flavor`.
    pub fn isomorphic_at(&self, other: &Self, flavor: Flavor) -> Option<Vec<usize>> {
        if self.n() != other.n() {
            return None;
        }
        // Reuse the embedding machinery: a surjective embedding is an isomorphism.
        crate::classops::embeds(self, other, flavor)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseSets {
    pub dense: Vec<usize>,
    pub t: Vec<usize>,
}

/// Tri-state flags: `None` means the algebra lacks the operations the flag
/// needs, which is different from `Some(false)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub pseudo_kleene: Option<bool>,
    pub ortholattice: Option<bool>,
    pub orthomodular: Option<bool>,
    pub paraorthomodular: Option<bool>,
    pub star: Option<bool>,
    pub bz: Option<bool>,
    pub pbz: Option<bool>,
    pub antiortholattice: Option<bool>,
    pub sdm: Option<bool>,
    pub sk: Option<bool>,
    pub j0: Option<bool>,
    pub distributive: Option<bool>,
    pub modular: Option<bool>,
    pub boolean_algebra: Option<bool>,
    pub zero_meet_irreducible: Option<bool>,
    pub sandwich_shape: Option<bool>,
}

impl ClassificationReport {
    fn assert_implications(&self) {
        if self.ortholattice == Some(true) && self.paraorthomodular == Some(true) {
            assert_eq!(self.orthomodular, Some(true), "paraorthomodular ortholattice is orthomodular");
        }
        if self.orthomodular == Some(true) {
            assert_eq!(self.paraorthomodular, Some(true), "orthomodular implies paraorthomodular");
        }
        if let (Some(pbz), Some(bz), Some(p), Some(s)) =
            (self.pbz, self.bz, self.paraorthomodular, self.star)
        {
            assert_eq!(pbz, bz && p && s);
        }
        if self.antiortholattice == Some(true) {
            assert_eq!(self.pbz, Some(true), "antiortholattice is a PBZ* lattice");
        }
        if self.sdm == Some(true) && self.star.is_some() {
            assert_eq!(self.star, Some(true), "SDM implies (*)");
        }
        if self.ortholattice == Some(true) {
            assert_eq!(self.pseudo_kleene, Some(true), "ortholattice is pseudo-Kleene");
        }
    }

    fn fmt_flag(f: Option<bool>) -> &'static str {
        match f {
            Some(true) => "true",
            Some(false) => "false",
            None => "n/a",
        }
    }

    pub fn rows(&self) -> Vec<(&'static str, &'static str)> {
        vec![
            ("pseudo_kleene", Self::fmt_flag(self.pseudo_kleene)),
            ("ortholattice", Self::fmt_flag(self.ortholattice)),
            ("orthomodular", Self::fmt_flag(self.orthomodular)),
            ("paraorthomodular", Self::fmt_flag(self.paraorthomodular)),
            ("star", Self::fmt_flag(self.star)),
            ("bz", Self::fmt_flag(self.bz)),
            ("pbz", Self::fmt_flag(self.pbz)),
            ("antiortholattice", Self::fmt_flag(self.antiortholattice)),
            ("sdm", Self::fmt_flag(self.sdm)),
            ("sk", Self::fmt_flag(self.sk)),
            ("j0", Self::fmt_flag(self.j0)),
            ("distributive", Self::fmt_flag(self.distributive)),
            ("modular", Self::fmt_flag(self.modular)),
            ("boolean_algebra", Self::fmt_flag(self.boolean_algebra)),
            ("zero_meet_irreducible", Self::fmt_flag(self.zero_meet_irreducible)),
            ("sandwich_shape", Self::fmt_flag(self.sandwich_shape)),
        ]
    }
}

impl std::fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (name, val) in self.rows() {
            writeln!(f, "  {name:<22} {val}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain_bi(n: usize) -> FiniteAlgebra {
        let l = FiniteBoundedLattice::chain(n);
        let table: Vec<usize> = (0..n).map(|i| n - 1 - i).collect();
        FiniteAlgebra::attach_involution(l, table).unwrap()
    }

    #[test]
    fn unique_involution_on_three_chain() {
        let a = chain_bi(3);
        assert_eq!(a.flavor(), Flavor::Bi);
        assert_eq!(a.kleene(1), 1);
    }

    #[test]
    fn identity_table_is_not_antitone_on_a_chain() {
        let l = FiniteBoundedLattice::chain(3);
        let err = FiniteAlgebra::attach_involution(l, vec![0, 1, 2]).unwrap_err();
        assert!(matches!(err, Error::NotAntitone(..)));
    }

    #[test]
    fn bad_involution_is_rejected() {
        let l = FiniteBoundedLattice::chain(3);
        let err = FiniteAlgebra::attach_involution(l, vec![2, 2, 0]).unwrap_err();
        assert!(matches!(err, Error::NotInvolutive(_)));
    }

    #[test]
    fn trivial_brouwer_on_kleene_chain_is_an_antiortholattice() {
        let a = chain_bi(5).attach_brouwer(BrouwerSpec::Trivial).unwrap();
        let r = a.classify();
        assert_eq!(r.antiortholattice, Some(true));
        assert_eq!(r.pbz, Some(true));
        assert_eq!(a.sharp_elements(), vec![0, 4]);
    }

    #[test]
    fn dense_elements_of_chain() {
        let a = chain_bi(3).attach_brouwer(BrouwerSpec::Trivial).unwrap();
        let ds = a.dense_and_t();
        assert_eq!(ds.dense, vec![1, 2]);
        assert_eq!(ds.t, vec![0, 1, 2]);
    }

    #[test]
    fn brouwer_axiom_failure_is_named() {
        // On D3: send the middle element to the top; middle ^ top != 0.
        let err = chain_bi(3)
            .attach_brouwer(BrouwerSpec::Table(vec![2, 2, 0]))
            .unwrap_err();
        assert!(matches!(err, Error::BZAxiomFailure { .. }));
    }

    #[test]
    fn lattice_only_flags_are_not_applicable() {
        let a = FiniteAlgebra::from_lattice(FiniteBoundedLattice::chain(4));
        let r = a.classify();
        assert_eq!(r.orthomodular, None);
        assert_eq!(r.distributive, Some(true));
    }
}
