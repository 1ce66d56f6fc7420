//! F-signatures and F-matroids (dual pairs of signatures).

use std::collections::BTreeMap;
use std::fmt;

use tractlab_core::{Axiom, AxiomReport, Carrier, Tract, Witness};

use crate::matroid::Matroid;
use crate::vector::{inner_product_f, null_or_bound, FVector};
use crate::MatroidError;

/// One representative per unit orbit, each with first nonzero coordinate `1`.
#[derive(Clone, PartialEq, Eq)]
pub struct FSignature {
    matroid: Matroid,
    vectors: Vec<FVector>,
}

impl FSignature {
    /// Normalizes, deduplicates and sorts the representatives. The axioms
    /// are not checked here; see [`check_f_signature`].
    pub fn new(matroid: Matroid, vectors: Vec<FVector>, carrier: &Carrier) -> Result<Self, MatroidError> {
        for v in &vectors {
            if v.len() != matroid.len() {
                return Err(MatroidError::LengthMismatch {
                    expected: matroid.len(),
                    got: v.len(),
                });
            }
            if v.entries().iter().flatten().any(|u| u.index() >= carrier.n_units()) {
                return Err(MatroidError::Signature(format!(
                    "{v:?} has an entry outside the carrier"
                )));
            }
        }
        let mut vectors: Vec<FVector> = vectors.iter().map(|v| v.normalized(carrier)).collect();
        let order = |v: &FVector| {
            let s = v.support();
            let pos = matroid.circuits().iter().position(|&c| c == s).unwrap_or(usize::MAX);
            (pos, s, v.clone())
        };
        vectors.sort_by_key(order);
        vectors.dedup();
        Ok(Self { matroid, vectors })
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn vectors(&self) -> &[FVector] {
        &self.vectors
    }

    /// The representative supported on `mask`, if any.
    pub fn on_support(&self, mask: u64) -> Option<&FVector> {
        self.vectors.iter().find(|v| v.support() == mask)
    }

    /// Every orbit member of every representative.
    pub fn expanded(&self, carrier: &Carrier) -> Vec<FVector> {
        let mut all: Vec<FVector> = self
            .vectors
            .iter()
            .flat_map(|v| carrier.units().map(move |u| v.scale(carrier, u)))
            .collect();
        all.sort();
        all.dedup();
        all
    }
}

impl fmt::Debug for FSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FSignature").field("vectors", &self.vectors).finish()
    }
}

/// (C0)–(C2). The report carries the first failing axiom, or `C2` with
/// every verdict in `details` when all hold.
pub fn check_f_signature(sig: &FSignature, carrier: &Carrier) -> AxiomReport {
    let m = &sig.matroid;
    if let Some(v) = sig.vectors.iter().find(|v| v.is_zero()) {
        return AxiomReport::fail(Axiom::C0, 1, Witness::new().text("vector", v.display(carrier)));
    }
    // Representatives are scaled on demand, so (C1) reduces to being a
    // well-formed orbit representative.
    if let Some(v) = sig.vectors.iter().find(|v| v.normalized(carrier) != **v) {
        return AxiomReport::fail(Axiom::C1, 1, Witness::new().text("vector", v.display(carrier)));
    }
    let mut by_support: BTreeMap<u64, Vec<&FVector>> = BTreeMap::new();
    for v in &sig.vectors {
        by_support.entry(v.support()).or_default().push(v);
    }
    for (&s, vs) in &by_support {
        if !m.is_circuit(s) {
            return AxiomReport::fail(
                Axiom::C2,
                1,
                Witness::new()
                    .text("vector", vs[0].display(carrier))
                    .text("reason", format!("support {} is not a circuit", m.display_set(s))),
            );
        }
        if vs.len() > 1 {
            return AxiomReport::fail(
                Axiom::C2,
                1,
                Witness::new()
                    .text("vector", vs[0].display(carrier))
                    .text("other", vs[1].display(carrier))
                    .text("reason", format!("two projective classes on {}", m.display_set(s))),
            );
        }
    }
    if let Some(&c) = m.circuits().iter().find(|c| !by_support.contains_key(c)) {
        return AxiomReport::fail(
            Axiom::C2,
            1,
            Witness::new().text(
                "reason",
                format!("circuit {} has no signed representative", m.display_set(c)),
            ),
        );
    }
    AxiomReport::pass(Axiom::C2, 1)
        .detail("C0", true)
        .detail("C1", true)
        .detail("C2", true)
        .detail("representatives", sig.vectors.len())
}

/// A matroid with a dual pair of F-signatures.
#[derive(Clone)]
pub struct FMatroid {
    tract: Tract,
    matroid: Matroid,
    circuits: FSignature,
    cocircuits: FSignature,
}

impl FMatroid {
    /// Assembles the parts without checking (DP1)–(DP3).
    pub fn from_parts(
        tract: Tract,
        matroid: Matroid,
        circuits: Vec<FVector>,
        cocircuits: Vec<FVector>,
    ) -> Result<Self, MatroidError> {
        let dual = matroid.dual();
        let circuits = FSignature::new(matroid.clone(), circuits, tract.carrier())?;
        let cocircuits = FSignature::new(dual, cocircuits, tract.carrier())?;
        Ok(Self {
            tract,
            matroid,
            circuits,
            cocircuits,
        })
    }

    /// Like [`FMatroid::from_parts`], but rejects anything failing (DP1)–(DP3).
    pub fn new(
        tract: Tract,
        matroid: Matroid,
        circuits: Vec<FVector>,
        cocircuits: Vec<FVector>,
    ) -> Result<Self, MatroidError> {
        let fm = Self::from_parts(tract, matroid, circuits, cocircuits)?;
        let r = check_dual_pair(&fm)?;
        if !r.holds {
            return Err(MatroidError::NotDualPair(r.to_text(fm.tract.carrier())));
        }
        Ok(fm)
    }

    pub fn tract(&self) -> &Tract {
        &self.tract
    }

    pub fn carrier(&self) -> &Carrier {
        self.tract.carrier()
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn circuits(&self) -> &FSignature {
        &self.circuits
    }

    pub fn cocircuits(&self) -> &FSignature {
        &self.cocircuits
    }

    pub fn labels(&self) -> &[String] {
        self.matroid.labels()
    }

    pub fn len(&self) -> usize {
        self.matroid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matroid.is_empty()
    }

    /// Swaps circuits and cocircuits.
    pub fn dual(&self) -> FMatroid {
        FMatroid {
            tract: self.tract.clone(),
            matroid: self.cocircuits.matroid.clone(),
            circuits: self.cocircuits.clone(),
            cocircuits: self.circuits.clone(),
        }
    }
}

impl fmt::Debug for FMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FMatroid")
            .field("tract", &self.tract.name())
            .field("matroid", &self.matroid)
            .field("circuits", &self.circuits)
            .field("cocircuits", &self.cocircuits)
            .finish()
    }
}

/// (DP1)–(DP3) over representatives. Orthogonality of whole orbits follows
/// from invariance of the null set under unit scaling.
pub fn check_dual_pair(fm: &FMatroid) -> Result<AxiomReport, MatroidError> {
    let c = fm.carrier();
    let dp1 = check_f_signature(&fm.circuits, c);
    if !dp1.holds || fm.circuits.matroid != fm.matroid {
        let mut r = AxiomReport::fail(Axiom::DP1, 1, dp1.witness.unwrap_or_default());
        r.details.insert("signature".into(), dp1.axiom.to_string().into());
        return Ok(r);
    }
    let dual = fm.matroid.dual();
    let dp2 = if fm.cocircuits.matroid == dual {
        check_f_signature(&fm.cocircuits, c)
    } else {
        let relabelled = FSignature {
            matroid: dual,
            vectors: fm.cocircuits.vectors.clone(),
        };
        check_f_signature(&relabelled, c)
    };
    if !dp2.holds {
        let mut r = AxiomReport::fail(Axiom::DP2, 1, dp2.witness.unwrap_or_else(Witness::new));
        r.details.insert("signature".into(), dp2.axiom.to_string().into());
        return Ok(r);
    }
    let mut pairs = 0u64;
    for x in &fm.circuits.vectors {
        let xg = x.to_gen(c);
        for y in &fm.cocircuits.vectors {
            pairs += 1;
            let p = inner_product_f(&fm.tract, &xg, y)?;
            if !null_or_bound(&fm.tract, &p, || format!("{} · {}", x.display(c), y.display(c)))? {
                let w = Witness::new()
                    .text("circuit", x.display(c))
                    .text("cocircuit", y.display(c))
                    .sum("product", p);
                return Ok(AxiomReport::fail(Axiom::DP3, 1, w).detail("pairs_checked", pairs));
            }
        }
    }
    Ok(AxiomReport::pass(Axiom::DP3, 1)
        .detail("DP1", true)
        .detail("DP2", true)
        .detail("DP3", true)
        .detail("pairs_checked", pairs))
}
