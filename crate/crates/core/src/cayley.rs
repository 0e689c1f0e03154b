//! The classical Cayley-graph picture on a finite group `G`: the
//! multiplicative unitary `V(δ_g⊗δ_h) = δ_g⊗δ_gh`, the antipode unitary,
//! the edge-reversing operator `Θ` and boundary map on edges, and exact
//! checks of the pentagon and Baaj–Skandalis identities. Every operator is
//! a permutation of basis vectors, so all comparisons are exact.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};

/// Largest group order accepted by the three-leg identity checks.
pub const MAX_CHECK_ORDER: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    pub name: String,
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
    e: usize,
}

impl FiniteGroup {
    /// Validates a Cayley table: identity, inverses, associativity.
    pub fn from_table(name: impl Into<String>, mul: Vec<Vec<usize>>) -> Result<Self> {
        let n = mul.len();
        let bad = |m: &str| Err(Error::InvalidGroup(m.to_string()));
        if n == 0 || mul.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return bad("table is not a square table over 0..n");
        }
        let Some(e) = (0..n).find(|&e| (0..n).all(|g| mul[e][g] == g && mul[g][e] == g)) else {
            return bad("no identity element");
        };
        let mut inv = vec![0; n];
        for g in 0..n {
            match (0..n).find(|&h| mul[g][h] == e && mul[h][g] == e) {
                Some(h) => inv[g] = h,
                None => return bad(&format!("element {g} has no inverse")),
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return bad(&format!("not associative at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            name: name.into(),
            mul,
            inv,
            e,
        })
    }

    /// `ℤ/n` for `1 ≤ n ≤ 24`, element `k` being the residue `k`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if !(1..=MAX_CHECK_ORDER).contains(&n) {
            return Err(Error::InvalidGroup(format!("Z/{n} is outside 1..=24")));
        }
        Self::from_table(
            format!("Z/{n}"),
            (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect(),
        )
    }

    /// The permutation group generated by `gens` (acting on `0..degree`).
    /// Elements are numbered in breadth-first order from the identity.
    pub fn generated_by(name: impl Into<String>, degree: usize, gens: &[Vec<usize>]) -> Result<Self> {
        let id: Vec<usize> = (0..degree).collect();
        let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { q.iter().map(|&i| p[i]).collect() };
        let mut elems = vec![id.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
        let mut queue = VecDeque::from([0]);
        while let Some(k) = queue.pop_front() {
            for g in gens {
                let p = compose(&elems[k], g);
                if !index.contains_key(&p) {
                    index.insert(p.clone(), elems.len());
                    queue.push_back(elems.len());
                    elems.push(p);
                }
            }
        }
        let mul = elems
            .iter()
            .map(|a| elems.iter().map(|b| index[&compose(a, b)]).collect())
            .collect();
        Self::from_table(name, mul)
    }

    pub fn symmetric(n: usize) -> Result<Self> {
        if !(2..=4).contains(&n) {
            return Err(Error::InvalidGroup(format!("S{n} not supported")));
        }
        let swap: Vec<usize> = (0..n).map(|i| [1, 0].get(i).copied().unwrap_or(i)).collect();
        let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        Self::generated_by(format!("S{n}"), n, &[swap, cycle])
    }

    /// Symmetries of a square, order 8.
    pub fn dihedral4() -> Result<Self> {
        Self::generated_by("D4", 4, &[vec![1, 2, 3, 0], vec![0, 3, 2, 1]])
    }

    /// `Z3`, `Z/3`, `Z_3`, `S3`, `S4`, `D4` (case-insensitive).
    pub fn by_name(name: &str) -> Result<Self> {
        let s = name.trim().to_ascii_uppercase().replace(['/', '_'], "");
        match s.as_str() {
            "S3" => Self::symmetric(3),
            "S4" => Self::symmetric(4),
            "D4" => Self::dihedral4(),
            _ => match s.strip_prefix('Z').and_then(|k| k.parse::<usize>().ok()) {
                Some(n) => Self::cyclic(n),
                None => Err(Error::InvalidGroup(format!("unknown group {name:?}"))),
            },
        }
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn identity(&self) -> usize {
        self.e
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// All elements other than the identity.
    pub fn default_generating_set(&self) -> Vec<usize> {
        (0..self.order()).filter(|&g| g != self.e).collect()
    }

    fn check_size(&self) -> Result<()> {
        if self.order() > MAX_CHECK_ORDER {
            return Err(Error::InvalidGroup(format!(
                "order {} exceeds {MAX_CHECK_ORDER} for exhaustive checks",
                self.order()
            )));
        }
        Ok(())
    }
}

/// A permutation of basis vectors, acting as `δ_x ↦ δ_{map[x]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Perm {
    pub map: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            map: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// Operator product `self · rhs` (apply `rhs` first).
    pub fn then_after(&self, rhs: &Perm) -> Perm {
        Perm {
            map: rhs.map.iter().map(|&x| self.map[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut map = vec![0; self.len()];
        for (x, &y) in self.map.iter().enumerate() {
            map[y] = x;
        }
        Perm { map }
    }

    /// Exactly one 1 in every row and column of the matrix.
    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.len()];
        for &y in &self.map {
            if y >= seen.len() || seen[y] {
                return false;
            }
            seen[y] = true;
        }
        true
    }

    /// The 0/1 matrix, row-major.
    pub fn matrix(&self) -> Vec<Vec<u8>> {
        let n = self.len();
        let mut m = vec![vec![0; n]; n];
        for (x, &y) in self.map.iter().enumerate() {
            m[y][x] = 1;
        }
        m
    }
}

/// Product of `Perm`s as operators, leftmost applied last.
pub fn product(ops: &[&Perm]) -> Perm {
    let mut acc = Perm::identity(ops[0].len());
    for op in ops {
        acc = acc.then_after(op);
    }
    acc
}

fn two(n: usize, f: impl Fn(usize, usize) -> (usize, usize)) -> Perm {
    Perm {
        map: (0..n * n)
            .map(|k| {
                let (a, b) = f(k / n, k % n);
                a * n + b
            })
            .collect(),
    }
}

/// `V(δ_g⊗δ_h) = δ_g⊗δ_gh` on `ℓ²G⊗ℓ²G`.
pub fn mult_unitary(g: &FiniteGroup) -> Perm {
    two(g.order(), |a, b| (a, g.mul(a, b)))
}

/// `U(δ_g) = δ_{g⁻¹}`.
pub fn antipode_unitary(g: &FiniteGroup) -> Perm {
    Perm {
        map: (0..g.order()).map(|x| g.inv(x)).collect(),
    }
}

/// `A ⊗ B` on two legs.
pub fn tensor(a: &Perm, b: &Perm) -> Perm {
    let n = b.len();
    Perm {
        map: (0..a.len() * n)
            .map(|k| a.apply(k / n) * n + b.apply(k % n))
            .collect(),
    }
}

/// The flip `Σ(δ_x⊗δ_y) = δ_y⊗δ_x`.
pub fn flip(n: usize) -> Perm {
    two(n, |a, b| (b, a))
}

/// `Ṽ = Σ(1⊗U)V(1⊗U)Σ`, assembled by composition.
pub fn v_tilde(g: &FiniteGroup) -> Perm {
    let n = g.order();
    let one_u = tensor(&Perm::identity(n), &antipode_unitary(g));
    let s = flip(n);
    product(&[&s, &one_u, &mult_unitary(g), &one_u, &s])
}

/// Places a two-leg operator on legs `(i, j)` of `ℓ²G^{⊗3}`.
pub fn on_legs(op: &Perm, n: usize, i: usize, j: usize) -> Perm {
    assert!(i != j && i < 3 && j < 3);
    Perm {
        map: (0..n * n * n)
            .map(|k| {
                let mut x = [k / (n * n), (k / n) % n, k % n];
                let y = op.apply(x[i] * n + x[j]);
                x[i] = y / n;
                x[j] = y % n;
                (x[0] * n + x[1]) * n + x[2]
            })
            .collect(),
    }
}

/// `V_12 V_13 V_23 = V_23 V_12` for the given two-leg operator.
pub fn pentagon_holds(g: &FiniteGroup, v: &Perm) -> Result<bool> {
    g.check_size()?;
    let n = g.order();
    let (v12, v13, v23) = (on_legs(v, n, 0, 1), on_legs(v, n, 0, 2), on_legs(v, n, 1, 2));
    Ok(product(&[&v12, &v13, &v23]) == product(&[&v23, &v12]))
}

pub fn pentagon_check(g: &FiniteGroup) -> Result<bool> {
    pentagon_holds(g, &mult_unitary(g))
}

/// `V_13 V_23 Ṽ_12 = Ṽ_12 V_13` with a caller-chosen `Ṽ`.
pub fn baaj_skandalis_holds(g: &FiniteGroup, v: &Perm, vt: &Perm) -> Result<bool> {
    g.check_size()?;
    let n = g.order();
    let (v13, v23, vt12) = (on_legs(v, n, 0, 2), on_legs(v, n, 1, 2), on_legs(vt, n, 0, 1));
    Ok(product(&[&v13, &v23, &vt12]) == product(&[&vt12, &v13]))
}

pub fn baaj_skandalis_check(g: &FiniteGroup) -> Result<bool> {
    baaj_skandalis_holds(g, &mult_unitary(g), &v_tilde(g))
}

/// Span of `δ_g⊗δ_h` with `h ∈ H`.
#[derive(Clone, Debug)]
pub struct EdgeSpace {
    pub generating_set: Vec<usize>,
    pub basis: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
}

impl EdgeSpace {
    pub fn new(g: &FiniteGroup, h: &[usize]) -> Result<Self> {
        let set: BTreeSet<usize> = h.iter().copied().collect();
        if let Some(&x) = set.iter().find(|&&x| x >= g.order()) {
            return Err(Error::InvalidGroup(format!("{x} is not an element of {}", g.name)));
        }
        if set.contains(&g.identity()) {
            return Err(Error::InvalidGroup("generating set contains the identity".into()));
        }
        if let Some(&x) = set.iter().find(|&&x| !set.contains(&g.inv(x))) {
            return Err(Error::InvalidGroup(format!(
                "generating set is not closed under inverses ({x})"
            )));
        }
        let generating_set: Vec<usize> = set.into_iter().collect();
        let basis: Vec<(usize, usize)> = (0..g.order())
            .flat_map(|a| generating_set.iter().map(move |&b| (a, b)))
            .collect();
        let index = basis.iter().enumerate().map(|(k, &p)| (p, k)).collect();
        Ok(EdgeSpace {
            generating_set,
            basis,
            index,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, edge: (usize, usize)) -> Option<usize> {
        self.index.get(&edge).copied()
    }
}

/// `Θ` on the edge space, assembled both ways.
#[derive(Clone, Debug)]
pub struct EdgeReversal {
    pub edges: EdgeSpace,
    /// From `Σ(1⊗U)V(U⊗U)Σ` restricted to edges.
    pub composed: Perm,
    /// From `Θ(δ_g⊗δ_h) = δ_gh⊗δ_{h⁻¹}`.
    pub closed: Perm,
}

impl EdgeReversal {
    pub fn formulas_agree(&self) -> bool {
        self.composed == self.closed
    }

    pub fn is_unitary(&self) -> bool {
        self.composed.is_bijective()
    }

    pub fn is_involution(&self) -> bool {
        self.composed.then_after(&self.composed) == Perm::identity(self.edges.dim())
    }
}

pub fn edge_reversal(g: &FiniteGroup, h: &[usize]) -> Result<EdgeReversal> {
    let edges = EdgeSpace::new(g, h)?;
    let n = g.order();
    let u = antipode_unitary(g);
    let s = flip(n);
    let full = product(&[
        &s,
        &tensor(&Perm::identity(n), &u),
        &mult_unitary(g),
        &tensor(&u, &u),
        &s,
    ]);
    let restrict = |f: &dyn Fn(usize, usize) -> usize| -> Result<Perm> {
        let map = edges
            .basis
            .iter()
            .map(|&(a, b)| {
                let y = f(a, b);
                edges
                    .index_of((y / n, y % n))
                    .ok_or_else(|| Error::InvalidGroup("Θ leaves the edge space".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Perm { map })
    };
    let composed = restrict(&|a, b| full.apply(a * n + b))?;
    let closed = restrict(&|a, b| g.mul(a, b) * n + g.inv(b))?;
    Ok(EdgeReversal {
        edges,
        composed,
        closed,
    })
}

/// `E(δ_g⊗δ_h) = δ_g⊗δ_gh`: the restriction of `V` to edges, as basis
/// indices of `ℓ²G⊗ℓ²G`.
pub fn boundary(g: &FiniteGroup, edges: &EdgeSpace) -> Vec<usize> {
    let v = mult_unitary(g);
    let n = g.order();
    edges.basis.iter().map(|&(a, b)| v.apply(a * n + b)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn groups() -> Vec<FiniteGroup> {
        ["Z3", "Z/4", "S3", "D4", "S4"]
            .iter()
            .map(|n| FiniteGroup::by_name(n).unwrap())
            .collect()
    }

    #[test]
    fn group_construction() {
        let orders: Vec<usize> = groups().iter().map(|g| g.order()).collect();
        assert_eq!(orders, vec![3, 4, 6, 8, 24]);
        assert!(!FiniteGroup::symmetric(3).unwrap().is_abelian());
        assert!(!FiniteGroup::dihedral4().unwrap().is_abelian());
        assert!(FiniteGroup::cyclic(25).is_err());
        assert!(FiniteGroup::by_name("Q8").is_err());
        assert!(FiniteGroup::from_table("bad", vec![vec![0, 1], vec![1, 1]]).is_err());
        // not associative: a quasigroup with identity 0
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(FiniteGroup::from_table("loop", t).is_err());
    }

    #[test]
    fn mult_unitary_examples() {
        let z3 = FiniteGroup::cyclic(3).unwrap();
        let v = mult_unitary(&z3);
        assert_eq!(v.apply(5), 3);
        for h in 0..3 {
            assert_eq!(v.apply(h), h);
        }
        assert!(v.is_bijective());
        let m = v.matrix();
        assert!(m.iter().all(|r| r.iter().map(|&x| x as usize).sum::<usize>() == 1));
    }

    #[test]
    fn antipode_examples() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let u = antipode_unitary(&z4);
        assert_eq!(u.apply(0), 0);
        assert_eq!(u.apply(1), 3);
        for g in groups() {
            let u = antipode_unitary(&g);
            assert_eq!(u.then_after(&u), Perm::identity(g.order()));
        }
    }

    #[test]
    fn pentagon_and_negative_control() {
        for g in groups() {
            assert!(pentagon_check(&g).unwrap(), "{}", g.name);
        }
        for name in ["Z3", "S3"] {
            let g = FiniteGroup::by_name(name).unwrap();
            assert!(!pentagon_holds(&g, &mult_unitary(&g).inverse()).unwrap(), "{name}");
        }
    }

    #[test]
    fn v_tilde_closed_form() {
        for g in groups() {
            let n = g.order();
            let expected = two(n, |x, y| (g.mul(x, g.inv(y)), y));
            assert_eq!(v_tilde(&g), expected);
        }
    }

    #[test]
    fn baaj_skandalis_and_negative_control() {
        for g in groups() {
            assert!(baaj_skandalis_check(&g).unwrap(), "{}", g.name);
        }
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let v = mult_unitary(&s3);
        assert!(!baaj_skandalis_holds(&s3, &v, &v).unwrap());
    }

    #[test]
    fn edge_reversal_properties() {
        let z3 = FiniteGroup::cyclic(3).unwrap();
        let th = edge_reversal(&z3, &[1, 2]).unwrap();
        let from = th.edges.index_of((1, 2)).unwrap();
        assert_eq!(th.edges.basis[th.closed.apply(from)], (0, 1));
        for g in groups() {
            let th = edge_reversal(&g, &g.default_generating_set()).unwrap();
            assert!(th.formulas_agree() && th.is_unitary() && th.is_involution(), "{}", g.name);
        }
        assert!(edge_reversal(&z3, &[1]).is_err());
        assert!(edge_reversal(&z3, &[0, 1, 2]).is_err());
    }

    #[test]
    fn boundary_is_restricted_v() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let edges = EdgeSpace::new(&s3, &s3.default_generating_set()).unwrap();
        let e = boundary(&s3, &edges);
        let n = s3.order();
        for (k, &(a, b)) in edges.basis.iter().enumerate() {
            assert_eq!(e[k], a * n + s3.mul(a, b));
        }
    }

    #[test]
    fn oversized_groups_rejected() {
        let big = FiniteGroup::from_table(
            "Z/25",
            (0..25).map(|a| (0..25).map(|b| (a + b) % 25).collect()).collect(),
        )
        .unwrap();
        assert!(pentagon_check(&big).is_err());
        assert!(baaj_skandalis_check(&big).is_err());
    }
}
