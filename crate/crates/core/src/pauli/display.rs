//! Term-by-term checks of the printed block displays for `∂(F2_β τ_β)`,
//! both in the `ϑ_{α,β}` form and after rewriting `ϑ` through `λ_γ`, `Γ`
//! and `P_β`.

use std::fmt;

use super::basis::{Alphabet, Family, Kind};
use super::compact::{zero_rows, Leg};
use super::generators::build_relations;
use super::ops::{MatrixOps, SmallOps, TauOps};
use crate::error::Result;
use crate::matrix::Mat;
use crate::ncalg::{derivative_matrix, DerivMap, TensorPoly};
use crate::scalar::{gauss, GaussRat};

/// One signed rewriting `ϑ_{α,β} = s·λ_γΓP_β = s'·Γλ_γΓP_β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaEntry {
    pub alpha: Family,
    pub beta: Family,
    pub gamma: Family,
    pub sign_lg: i64,
    pub sign_glg: i64,
}

impl fmt::Display for ThetaEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |x: i64| if x < 0 { "-" } else { "" };
        write!(
            f,
            "ϑ_{{{},{}}} = {}Γλ_{}ΓP_{} = {}λ_{}ΓP_{}",
            self.alpha,
            self.beta,
            s(self.sign_glg),
            self.gamma,
            self.beta,
            s(self.sign_lg),
            self.gamma,
            self.beta
        )
    }
}

#[derive(Clone, Debug)]
pub struct ThetaTable {
    pub entries: Vec<ThetaEntry>,
    pub all_exact: bool,
}

fn signed_match(lhs: &Mat<GaussRat>, target: &Mat<GaussRat>) -> Option<i64> {
    if lhs == target {
        Some(1)
    } else if lhs.neg() == *target {
        Some(-1)
    } else {
        None
    }
}

/// Finds, for each of the 16 pairs `(α, β)`, the `γ` and signs with
/// `ϑ_{α,β} = s·λ_γΓP_β` and `ϑ_{α,β} = s'·Γλ_γΓP_β`, as exact `4 x 4`
/// identities on `M_2`.
pub fn theta_rewrite_check() -> ThetaTable {
    let t = TauOps::new(Kind::Symplectic);
    let g = t.gamma();
    let mut entries = Vec::new();
    let mut all_exact = true;
    for alpha in Family::ALL {
        for beta in Family::ALL {
            let theta = t.theta(alpha, beta);
            let found = Family::ALL.iter().find_map(|&gamma| {
                let lg = t.lambda(gamma).dot(&g).dot(&t.p(beta));
                let glg = g.dot(&lg);
                Some(ThetaEntry {
                    alpha,
                    beta,
                    gamma,
                    sign_lg: signed_match(&lg, &theta)?,
                    sign_glg: signed_match(&glg, &theta)?,
                })
            });
            match found {
                Some(e) => entries.push(e),
                None => all_exact = false,
            }
        }
    }
    ThetaTable { entries, all_exact }
}

/// Operator printed on the `τ` leg of a display term.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TauExpr {
    /// `ϑ_{α,β}`
    Theta(Family, Family),
    /// `Γλ_γΓP_β`
    GammaLambdaGamma(Family, Family),
    /// `λ_γΓP_β`
    LambdaGamma(Family, Family),
}

impl TauExpr {
    pub fn matrix(self, t: &TauOps) -> Mat<GaussRat> {
        let g = t.gamma();
        match self {
            TauExpr::Theta(a, b) => t.theta(a, b),
            TauExpr::GammaLambdaGamma(c, b) => g.dot(&t.lambda(c)).dot(&g).dot(&t.p(b)),
            TauExpr::LambdaGamma(c, b) => t.lambda(c).dot(&g).dot(&t.p(b)),
        }
    }
}

impl fmt::Display for TauExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TauExpr::Theta(a, b) => write!(f, "ϑ_{{{a},{b}}}"),
            TauExpr::GammaLambdaGamma(c, b) => write!(f, "Γλ_{c}ΓP_{b}"),
            TauExpr::LambdaGamma(c, b) => write!(f, "λ_{c}ΓP_{b}"),
        }
    }
}

/// A printed summand: `sign Σ (1⊗γ_ij ⊗ Tλ_ijT ⊗ op)` for the right leg or
/// `sign Σ (γ_kl⊗1 ⊗ λ_klT ⊗ op)` for the left leg.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DisplayTerm {
    pub sign: i64,
    pub leg: Leg,
    pub family: Family,
    pub tau: TauExpr,
}

impl fmt::Display for DisplayTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign < 0 { '-' } else { '+' };
        match self.leg {
            Leg::Right => write!(f, "{s}Σ(1⊗{}_ij⊗Tλ_ijT⊗{})", self.family, self.tau),
            Leg::Left => write!(f, "{s}Σ({}_kl⊗1⊗λ_klT⊗{})", self.family, self.tau),
        }
    }
}

/// Which version of the block displays to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DisplayForm {
    Theta,
    Rewritten,
}

fn term(sign: i64, leg: Leg, family: Family, tau: TauExpr) -> DisplayTerm {
    DisplayTerm {
        sign,
        leg,
        family,
        tau,
    }
}

/// The printed displays for block `β`, in order of appearance.
pub fn printed_block(form: DisplayForm, block: Family) -> Vec<DisplayTerm> {
    use Family::{A, B, C, D};
    use Leg::{Left as L, Right as R};
    use TauExpr::{GammaLambdaGamma as Glg, LambdaGamma as Lg, Theta as Th};
    match (form, block) {
        (DisplayForm::Theta, A) => Family::ALL
            .iter()
            .flat_map(|&f| [term(1, R, f, Th(A, f)), term(1, L, f, Th(A, f))])
            .collect(),
        (DisplayForm::Theta, B) => vec![
            term(1, R, B, Th(B, A)),
            term(-1, L, B, Th(B, A)),
            term(-1, R, A, Th(B, B)),
            term(1, L, A, Th(B, B)),
            term(-1, R, D, Th(B, C)),
            term(1, L, D, Th(B, C)),
            term(1, R, C, Th(B, D)),
            term(-1, L, C, Th(B, D)),
        ],
        (DisplayForm::Theta, C) => vec![
            term(1, R, C, Th(C, A)),
            term(-1, L, C, Th(C, A)),
            term(1, R, D, Th(C, B)),
            term(-1, L, D, Th(C, B)),
            term(-1, R, A, Th(C, C)),
            term(1, L, A, Th(C, C)),
            term(-1, R, B, Th(C, D)),
            term(1, L, B, Th(C, D)),
        ],
        (DisplayForm::Theta, D) => vec![
            term(1, R, D, Th(D, A)),
            term(-1, L, D, Th(D, A)),
            term(-1, R, C, Th(D, B)),
            term(1, L, C, Th(D, B)),
            term(1, R, B, Th(D, C)),
            term(-1, L, B, Th(D, C)),
            term(-1, R, A, Th(D, D)),
            term(1, L, A, Th(D, D)),
        ],
        (DisplayForm::Rewritten, A) => Family::ALL
            .iter()
            .flat_map(|&f| [term(1, R, f, Glg(f, f)), term(1, L, f, Lg(f, f))])
            .collect(),
        (DisplayForm::Rewritten, B) => vec![
            term(-1, R, B, Glg(B, A)),
            term(-1, L, B, Lg(B, A)),
            term(-1, R, A, Glg(A, B)),
            term(-1, L, A, Lg(A, B)),
            term(-1, R, D, Glg(C, D)),
            term(-1, L, D, Lg(D, C)),
            term(-1, R, C, Glg(D, C)),
            term(-1, L, C, Lg(C, D)),
        ],
        (DisplayForm::Rewritten, C) => [(C, A), (D, B), (A, C), (B, D)]
            .iter()
            .flat_map(|&(f, b)| [term(-1, R, f, Glg(f, b)), term(-1, L, f, Lg(f, b))])
            .collect(),
        (DisplayForm::Rewritten, D) => [(D, A), (C, B), (B, C), (A, D)]
            .iter()
            .flat_map(|&(f, b)| [term(-1, R, f, Glg(f, b)), term(-1, L, f, Lg(f, b))])
            .collect(),
    }
}

/// Result for one printed summand.
#[derive(Clone, Debug)]
pub struct DisplayTermCheck {
    pub block: Family,
    pub line: usize,
    pub printed: DisplayTerm,
    pub matched: bool,
    /// A same-shaped term that does match, when the printed one does not.
    pub correction: Option<DisplayTerm>,
}

#[derive(Clone, Debug)]
pub struct DisplayReport {
    pub form: DisplayForm,
    pub n: usize,
    pub terms: Vec<DisplayTermCheck>,
}

impl DisplayReport {
    pub fn matched(&self) -> bool {
        self.terms.iter().all(|t| t.matched)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &DisplayTermCheck> {
        self.terms.iter().filter(|t| !t.matched)
    }
}

fn assemble_term(al: &Alphabet, ops: &SmallOps, t: DisplayTerm) -> DerivMap {
    let n = al.n();
    let d = al.len();
    let mops = MatrixOps::new(n);
    let tau = t.tau.matrix(ops.tau_ops());
    let tm = mops.t();
    let s = gauss(t.sign, 0);
    let mut map = DerivMap::zeros(d, d);
    for i in 0..n {
        for j in 0..n {
            let gen = super::basis::Generator::new(t.family, i, j);
            let w = vec![al.letter(gen)];
            let (mat_op, l, r) = match t.leg {
                Leg::Right => (tm.dot(&mops.lambda(i, j)).dot(&tm), Vec::new(), w),
                Leg::Left => (mops.lambda(i, j).dot(&tm), w, Vec::new()),
            };
            for (out, inp, c) in ops.tensor(&tau, &mat_op).iter_nonzero() {
                map.get_mut(out, inp).add_term(l.clone(), r.clone(), c * &s);
            }
        }
    }
    map
}

/// Part of `map` made of terms `γ ⊗ 1` (left) or `1 ⊗ γ` (right) with `γ`
/// a generator of the given family.
fn restrict(al: &Alphabet, map: &DerivMap, leg: Leg, family: Family) -> DerivMap {
    let mut out = DerivMap::zeros(map.output_dim(), map.input_dim());
    for o in 0..map.output_dim() {
        for i in 0..map.input_dim() {
            let mut t = TensorPoly::zero();
            for (l, r, c) in map.get(o, i).terms() {
                let (one, other) = match leg {
                    Leg::Left => (l, r),
                    Leg::Right => (r, l),
                };
                if one.len() == 1
                    && other.is_empty()
                    && al.generator(one[0].0 as usize).family == family
                {
                    t.add_term(l.clone(), r.clone(), c.clone());
                }
            }
            *out.get_mut(o, i) = t;
        }
    }
    out
}

/// Derivative of `F2_β` placed in the output coordinates of `τ_β`.
pub fn block_derivative(n: usize, block: Family) -> Result<DerivMap> {
    let rel = build_relations(n)?;
    let al = rel.alphabet;
    let mut rows = zero_rows(al.len());
    let f2b = &rel.f2_blocks[block.index()];
    for k in 0..n {
        for l in 0..n {
            rows[al.index(super::basis::Generator::new(block, k, l))] = f2b.get(k, l).clone();
        }
    }
    derivative_matrix(&rows, &al.letters())
}

fn candidates(leg: Leg, family: Family, form: DisplayForm) -> Vec<DisplayTerm> {
    let mut out = Vec::new();
    for sign in [1, -1] {
        for x in Family::ALL {
            for y in Family::ALL {
                let tau = match (form, leg) {
                    (DisplayForm::Theta, _) => TauExpr::Theta(x, y),
                    (DisplayForm::Rewritten, Leg::Right) => TauExpr::GammaLambdaGamma(x, y),
                    (DisplayForm::Rewritten, Leg::Left) => TauExpr::LambdaGamma(x, y),
                };
                out.push(term(sign, leg, family, tau));
            }
        }
    }
    out
}

/// Checks every printed summand of the four block displays against the
/// derivation engine. Each summand is compared with the part of the
/// derived map carried by its own leg and generator family, so a wrong
/// summand is named individually; a matching replacement of the same shape
/// is searched for and reported.
pub fn check_block_displays(form: DisplayForm, n: usize) -> Result<DisplayReport> {
    let ops = SmallOps::new(Kind::Symplectic, n)?;
    let al = *ops.alphabet();
    let mut terms = Vec::new();
    for block in Family::ALL {
        let derived = block_derivative(n, block)?;
        for (line, printed) in printed_block(form, block).into_iter().enumerate() {
            let target = restrict(&al, &derived, printed.leg, printed.family);
            let matched = assemble_term(&al, &ops, printed) == target;
            let correction = if matched {
                None
            } else {
                candidates(printed.leg, printed.family, form)
                    .into_iter()
                    .find(|c| assemble_term(&al, &ops, *c) == target)
            };
            terms.push(DisplayTermCheck {
                block,
                line: line / 2 + 1,
                printed,
                matched,
                correction,
            });
        }
    }
    Ok(DisplayReport { form, n, terms })
}

/// True when the displays, combined with the block signs of
/// `F2 = F2_a τ_a - F2_b τ_b - F2_c τ_c - F2_d τ_d - I`, reproduce `∂F2`.
pub fn displays_sum_to_df2(form: DisplayForm, n: usize) -> Result<bool> {
    let ops = SmallOps::new(Kind::Symplectic, n)?;
    let al = *ops.alphabet();
    let d = al.len();
    let mut total = DerivMap::zeros(d, d);
    for block in Family::ALL {
        let sign = gauss(block.sign(), 0);
        for t in printed_block(form, block) {
            let m = assemble_term(&al, &ops, t);
            for o in 0..d {
                for i in 0..d {
                    total.get_mut(o, i).add_scaled(m.get(o, i), &sign);
                }
            }
        }
    }
    let (_, d2) = super::compact::relation_derivatives(Kind::Symplectic, n)?;
    Ok(total == d2)
}
