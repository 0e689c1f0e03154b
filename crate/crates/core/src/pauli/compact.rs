use std::fmt;

use num_complex::Complex64;

use super::basis::{Alphabet, Generator, Kind};
use super::generators::build_relations_kind;
use super::ops::SmallOps;
use crate::error::Result;
use crate::matrix::{CMat, Mat};
use crate::ncalg::{derivative_matrix, DerivMap, EntryMismatch, NcPoly, TensorPoly};
use crate::scalar::{gauss, to_complex64, GaussRat};

/// Which tensor leg carries the generator: `g ⊗ 1` or `1 ⊗ g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Leg {
    Left,
    Right,
}

/// `sign · (g ⊗ 1 or 1 ⊗ g) ⊗ [op]`, with `op` stored sparsely.
#[derive(Clone, Debug)]
pub struct CompactTerm {
    pub leg: Leg,
    pub generator: Generator,
    pub sign: i64,
    pub op: Vec<(usize, usize, GaussRat)>,
    pub label: String,
}

impl CompactTerm {
    fn new(leg: Leg, generator: Generator, sign: i64, op: &Mat<GaussRat>, label: String) -> Self {
        CompactTerm {
            leg,
            generator,
            sign,
            op: op.iter_nonzero().map(|(r, c, v)| (r, c, v.clone())).collect(),
            label,
        }
    }
}

impl fmt::Display for CompactTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign < 0 { '-' } else { '+' };
        match self.leg {
            Leg::Left => write!(f, "{s}({}⊗1)[{}]", self.generator, self.label),
            Leg::Right => write!(f, "{s}(1⊗{})[{}]", self.generator, self.label),
        }
    }
}

/// A closed-form expression `Σ ± (tensor) ⊗ [operator]` for a derivative.
#[derive(Clone, Debug)]
pub struct CompactFormula {
    pub alphabet: Alphabet,
    pub terms: Vec<CompactTerm>,
}

impl CompactFormula {
    /// Reads off the `DerivMap` with entry `(out, in)` equal to
    /// `Σ sign · op[out, in] · tensor`.
    pub fn assemble(&self) -> DerivMap {
        let d = self.alphabet.len();
        let mut map = DerivMap::zeros(d, d);
        for t in &self.terms {
            let w = vec![self.alphabet.letter(t.generator)];
            let (l, r) = match t.leg {
                Leg::Left => (w, Vec::new()),
                Leg::Right => (Vec::new(), w),
            };
            let s = gauss(t.sign, 0);
            for (out, inp, c) in &t.op {
                map.get_mut(*out, *inp).add_term(l.clone(), r.clone(), c * &s);
            }
        }
        map
    }

    /// Negates one term (negative controls).
    pub fn flip_sign(&mut self, index: usize) {
        self.terms[index].sign = -self.terms[index].sign;
    }

    /// Scalar-point value `Σ sign · values[g] · op`, optionally restricted
    /// to one leg.
    pub fn eval_scalar(&self, values: &[f64], leg: Option<Leg>) -> CMat {
        let d = self.alphabet.len();
        let mut out = CMat::zeros(d, d);
        for t in self.terms.iter().filter(|t| leg.is_none_or(|l| l == t.leg)) {
            let v = values[self.alphabet.index(t.generator)] * t.sign as f64;
            if v == 0.0 {
                continue;
            }
            for (r, c, x) in &t.op {
                out[(*r, *c)] += to_complex64(x) * v;
            }
        }
        out
    }
}

/// `∂F1 = Σ ε_α (1⊗α_ij)[U λ^α_ji] + Σ ε_α (α_kl⊗1)[λ^α_lk]`.
pub fn compact_df1(kind: Kind, n: usize) -> Result<CompactFormula> {
    let ops = SmallOps::new(kind, n)?;
    let alphabet = *ops.alphabet();
    let u = ops.u();
    let mut terms = Vec::with_capacity(2 * alphabet.len());
    for g in alphabet.generators() {
        let eps = g.family.sign();
        let swapped = Generator::new(g.family, g.col, g.row);
        let lam = ops.lambda(swapped);
        let name = format!("λ^{}_{}{}", g.family, g.col + 1, g.row + 1);
        terms.push(CompactTerm::new(Leg::Right, g, eps, &u.dot(&lam), format!("U{name}")));
        terms.push(CompactTerm::new(Leg::Left, g, eps, &lam, name));
    }
    Ok(CompactFormula { alphabet, terms })
}

/// `∂F2 = Σ (1⊗α_ij)[U λ^α_ij U] + Σ (β_kl⊗1)[λ^β_kl U]`.
pub fn compact_df2(kind: Kind, n: usize) -> Result<CompactFormula> {
    let ops = SmallOps::new(kind, n)?;
    let alphabet = *ops.alphabet();
    let u = ops.u();
    let mut terms = Vec::with_capacity(2 * alphabet.len());
    for g in alphabet.generators() {
        let lam = ops.lambda(g);
        let name = format!("λ^{}_{}{}", g.family, g.row + 1, g.col + 1);
        let lu = lam.dot(&u);
        terms.push(CompactTerm::new(Leg::Right, g, 1, &u.dot(&lu), format!("U{name}U")));
        terms.push(CompactTerm::new(Leg::Left, g, 1, &lu, format!("{name}U")));
    }
    Ok(CompactFormula { alphabet, terms })
}

/// `∂F1` and `∂F2` computed by the derivation engine on the E-coordinates
/// of `u*u - I` and `uu* - I`.
pub fn relation_derivatives(kind: Kind, n: usize) -> Result<(DerivMap, DerivMap)> {
    let rel = build_relations_kind(kind, n)?;
    let (c1, c2) = rel.coordinates();
    let gens = rel.alphabet.letters();
    Ok((derivative_matrix(&c1, &gens)?, derivative_matrix(&c2, &gens)?))
}

/// A disagreeing entry, with labels in terms of basis elements and
/// generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub output: String,
    pub input: String,
    pub derived: String,
    pub formula: String,
    pub discrepancy_terms: usize,
}

impl Witness {
    pub fn from_mismatch(alphabet: &Alphabet, m: &EntryMismatch) -> Self {
        Witness {
            output: alphabet.basis_label(m.output),
            input: alphabet.generator(m.input).to_string(),
            derived: render(alphabet, &m.left),
            formula: render(alphabet, &m.right),
            discrepancy_terms: m.discrepancy_terms(),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "output {} / input {}: derived {} vs formula {}",
            self.output, self.input, self.derived, self.formula
        )
    }
}

/// Prints a tensor polynomial with generator names instead of letters.
pub fn render(alphabet: &Alphabet, t: &TensorPoly) -> String {
    if t.is_zero() {
        return "0".into();
    }
    let word = |w: &[crate::ncalg::Letter]| {
        if w.is_empty() {
            "1".to_string()
        } else {
            w.iter()
                .map(|l| alphabet.generator(l.0 as usize).to_string())
                .collect::<Vec<_>>()
                .join("·")
        }
    };
    t.terms()
        .map(|(l, r, c)| {
            let c = to_complex64(c);
            let coeff = if c == Complex64::new(1.0, 0.0) {
                String::new()
            } else if c == Complex64::new(-1.0, 0.0) {
                "-".into()
            } else {
                format!("({c})")
            };
            format!("{coeff}{}⊗{}", word(l), word(r))
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Entry-by-entry comparison of one derivative against its closed form.
#[derive(Clone, Debug)]
pub struct FormulaCheck {
    pub relation: String,
    pub matched: bool,
    pub entries: usize,
    pub mismatched_entries: usize,
    pub max_discrepancy_terms: usize,
    pub witness: Option<Witness>,
}

impl FormulaCheck {
    pub fn compare(
        relation: impl Into<String>,
        alphabet: &Alphabet,
        derived: &DerivMap,
        formula: &DerivMap,
    ) -> Result<Self> {
        let mism = derived.mismatches(formula)?;
        let worst = mism.iter().max_by_key(|m| m.discrepancy_terms());
        Ok(FormulaCheck {
            relation: relation.into(),
            matched: mism.is_empty(),
            entries: derived.output_dim() * derived.input_dim(),
            mismatched_entries: mism.len(),
            max_discrepancy_terms: worst.map_or(0, |m| m.discrepancy_terms()),
            witness: mism.first().map(|m| Witness::from_mismatch(alphabet, m)),
        })
    }
}

#[derive(Clone, Debug)]
pub struct Lemma31Report {
    pub kind: Kind,
    pub n: usize,
    pub f1: FormulaCheck,
    pub f2: FormulaCheck,
}

impl Lemma31Report {
    pub fn matched(&self) -> bool {
        self.f1.matched && self.f2.matched
    }

    pub fn max_discrepancy_terms(&self) -> usize {
        self.f1.max_discrepancy_terms.max(self.f2.max_discrepancy_terms)
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.f1.witness.as_ref().or(self.f2.witness.as_ref())
    }
}

/// Exact comparison of the derivation engine's `∂F1`, `∂F2` against the
/// compact operator formulas.
pub fn verify_lemma31_symbolic(n: usize) -> Result<Lemma31Report> {
    verify_lemma31_symbolic_kind(Kind::Symplectic, n)
}

pub fn verify_lemma31_symbolic_kind(kind: Kind, n: usize) -> Result<Lemma31Report> {
    let df1 = compact_df1(kind, n)?;
    let df2 = compact_df2(kind, n)?;
    verify_against(kind, n, &df1, &df2)
}

/// Same comparison with caller-supplied formulas (used for negative
/// controls).
pub fn verify_against(
    kind: Kind,
    n: usize,
    df1: &CompactFormula,
    df2: &CompactFormula,
) -> Result<Lemma31Report> {
    let (d1, d2) = relation_derivatives(kind, n)?;
    let al = df1.alphabet;
    Ok(Lemma31Report {
        kind,
        n,
        f1: FormulaCheck::compare("F1", &al, &d1, &df1.assemble())?,
        f2: FormulaCheck::compare("F2", &al, &d2, &df2.assemble())?,
    })
}

/// Zero polynomial placeholder for rows outside a block.
pub(crate) fn zero_rows(d: usize) -> Vec<NcPoly> {
    vec![NcPoly::zero(); d]
}
