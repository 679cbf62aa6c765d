//! Irreducible character tables over F_p by the Dixon–Schneider method.
//!
//! The class matrices `A_i[j][k] = #{(x, y) ∈ C_i × C_j : xy = z_k}` commute
//! and share the central characters `ω_χ(C_j) = |C_j| χ(g_j) / χ(1)` as their
//! common eigenvectors. Splitting F_p^r into joint eigenspaces one class
//! matrix at a time isolates every irreducible; the degree then follows from
//! the first orthogonality relation.

mod lift;
mod linalg;

use std::sync::Arc;

pub use lift::{lift_value, CyclotomicValue};

use crate::error::{Error, Result};
use crate::field::{root_of_unity, PrimeField};
use crate::permcore::{ConjugacyData, PermGroup};
use linalg::{charpoly, mat_mul, nullspace, roots, solve_full_rank, Matrix};

/// Field data shared by a top group and all of its subgroups: `p > |G|`,
/// `p ≡ 1 (mod exp G)` and a fixed primitive `exp(G)`-th root of unity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnalysisContext {
    field: PrimeField,
    omega: u64,
    exponent: u64,
    order: usize,
}

impl AnalysisContext {
    pub fn new(order: usize, exponent: u64) -> Self {
        let (p, omega) = choose_prime(order, exponent);
        AnalysisContext {
            field: PrimeField::new(p),
            omega,
            exponent,
            order,
        }
    }

    pub fn for_group(g: &PermGroup) -> Self {
        Self::new(g.order(), g.exponent())
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn prime(&self) -> u64 {
        self.field.modulus()
    }

    pub fn omega(&self) -> u64 {
        self.omega
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// Order of the top group.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Whether a group of this order and exponent can be handled in this field.
    pub fn admits(&self, order: usize, exponent: u64) -> bool {
        order <= self.order && self.exponent % exponent == 0
    }
}

/// `(p, ω)` for a group of the given order and exponent.
pub fn choose_prime(order: usize, exponent: u64) -> (u64, u64) {
    let p = crate::field::choose_prime(order as u64, exponent);
    (p, root_of_unity(PrimeField::new(p), exponent))
}

/// Class multiplication coefficients `a_{ijk}` for fixed `i`, indexed `[j][k]`.
pub fn class_matrix(g: &PermGroup, cd: &ConjugacyData, i: usize) -> Vec<Vec<u64>> {
    let r = cd.len();
    let mut m = vec![vec![0u64; r]; r];
    for k in 0..r {
        let z = cd.rep(k);
        for x in cd.members(i) {
            let y = g.mul(g.inv(x), z);
            m[cd.class_of(y)][k] += 1;
        }
    }
    m
}

/// Irreducible characters reduced mod p: `values[i][j] = χ_i(g_j)`.
///
/// Rows are sorted by degree, then lexicographically by residues.
#[derive(Clone, Debug)]
pub struct ModularCharacterTable {
    field: PrimeField,
    classes: Arc<ConjugacyData>,
    values: Vec<Vec<u64>>,
    degrees: Vec<u64>,
}

impl ModularCharacterTable {
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn classes(&self) -> &Arc<ConjugacyData> {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> u64 {
        self.degrees[i]
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.values[i]
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.values
    }

    pub fn value(&self, i: usize, j: usize) -> u64 {
        self.values[i][j]
    }

    /// `|G|⁻¹ Σ_j |C_j| a_j b_{j*}` in F_p.
    pub fn inner(&self, a: &[u64], b: &[u64]) -> u64 {
        inner_product(self.field, &self.classes, a, b)
    }

    pub fn rows_orthonormal(&self) -> bool {
        (0..self.len()).all(|i| {
            (0..self.len()).all(|k| self.inner(&self.values[i], &self.values[k]) == u64::from(i == k))
        })
    }

    /// `Σ_χ χ(g_j) χ(g_l⁻¹) = δ_{jl} |C_G(g_j)|`.
    pub fn columns_orthogonal(&self) -> bool {
        let f = self.field;
        let cd = &self.classes;
        let r = self.len();
        (0..r).all(|j| {
            (0..r).all(|l| {
                let s = self.values.iter().fold(0, |acc, row| {
                    f.add(acc, f.mul(row[j], row[cd.inverse_class(l)]))
                });
                let expected = if j == l {
                    f.reduce(cd.centralizer_order(j) as u64)
                } else {
                    0
                };
                s == expected
            })
        })
    }

    fn verify(&self) -> Result<()> {
        let order = self.classes.group_order() as u64;
        let fail = |m: &str| Err(Error::CharacterTable(m.to_string()));
        if self.len() != self.classes.len() {
            return fail("row count differs from class count");
        }
        if self.degrees.iter().map(|d| d * d).sum::<u64>() != order {
            return fail("sum of squared degrees differs from the group order");
        }
        for (row, &d) in self.values.iter().zip(&self.degrees) {
            if row[0] != self.field.reduce(d) || d * d > order {
                return fail("degree column inconsistent");
            }
        }
        if !self.rows_orthonormal() {
            return fail("row orthogonality violated");
        }
        if !self.columns_orthogonal() {
            return fail("column orthogonality violated");
        }
        Ok(())
    }
}

pub(crate) fn inner_product(f: PrimeField, cd: &ConjugacyData, a: &[u64], b: &[u64]) -> u64 {
    let mut s = 0;
    for j in 0..cd.len() {
        let term = f.mul(f.reduce(cd.size(j) as u64), f.mul(a[j], b[cd.inverse_class(j)]));
        s = f.add(s, term);
    }
    f.mul(s, f.inv(f.reduce(cd.group_order() as u64)))
}

pub fn character_table(
    ctx: &AnalysisContext,
    g: &PermGroup,
    classes: Arc<ConjugacyData>,
) -> Result<ModularCharacterTable> {
    let f = ctx.field;
    let cd = &*classes;
    let r = cd.len();
    let order = g.order() as u64;
    if !ctx.admits(g.order(), cd.exponent()) {
        return Err(Error::CharacterTable(format!(
            "group of order {} and exponent {} does not fit the context field F_{}",
            g.order(),
            cd.exponent(),
            f.modulus()
        )));
    }

    // Each subspace is an r × d matrix whose columns span it.
    let identity: Matrix = (0..r)
        .map(|i| (0..r).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut spaces: Vec<Matrix> = vec![identity];
    for i in 1..r {
        if spaces.iter().all(|s| s[0].len() == 1) {
            break;
        }
        let a: Matrix = class_matrix(g, cd, i)
            .into_iter()
            .map(|row| row.into_iter().map(|x| f.reduce(x)).collect())
            .collect();
        let mut next = Vec::new();
        for basis in spaces {
            let d = basis[0].len();
            if d == 1 {
                next.push(basis);
                continue;
            }
            let image = mat_mul(f, &a, &basis);
            let restricted = solve_full_rank(f, &basis, &image, d).ok_or_else(|| {
                Error::CharacterTable("subspace not invariant under a class matrix".into())
            })?;
            let eigenvalues = roots(f, &charpoly(f, &restricted));
            let mut found = 0;
            for lambda in eigenvalues {
                let shifted: Matrix = restricted
                    .iter()
                    .enumerate()
                    .map(|(ri, row)| {
                        row.iter()
                            .enumerate()
                            .map(|(ci, &x)| if ri == ci { f.sub(x, lambda) } else { x })
                            .collect()
                    })
                    .collect();
                let kernel = nullspace(f, &shifted, d);
                if kernel.is_empty() {
                    continue;
                }
                found += kernel.len();
                // Columns of the kernel basis, mapped back to F_p^r.
                let coords: Matrix = (0..d)
                    .map(|row| kernel.iter().map(|v| v[row]).collect())
                    .collect();
                next.push(mat_mul(f, &basis, &coords));
            }
            if found != d {
                return Err(Error::CharacterTable(
                    "class matrix is not diagonalizable over F_p".into(),
                ));
            }
        }
        spaces = next;
    }
    if spaces.len() != r || spaces.iter().any(|s| s[0].len() != 1) {
        return Err(Error::CharacterTable(
            "eigenspace splitting did not separate all characters".into(),
        ));
    }

    let mut rows: Vec<(u64, Vec<u64>)> = Vec::with_capacity(r);
    for space in spaces {
        let v: Vec<u64> = space.iter().map(|row| row[0]).collect();
        if v[0] == 0 {
            return Err(Error::CharacterTable("central character vanishes at 1".into()));
        }
        let scale = f.inv(v[0]);
        let omega: Vec<u64> = v.iter().map(|&x| f.mul(x, scale)).collect();
        // χ(1)² = |G| / Σ_j ω_j ω_{j*} / |C_j|.
        let mut s = 0;
        for j in 0..r {
            let t = f.mul(omega[j], omega[cd.inverse_class(j)]);
            s = f.add(s, f.mul(t, f.inv(f.reduce(cd.size(j) as u64))));
        }
        if s == 0 {
            return Err(Error::CharacterTable("degenerate norm".into()));
        }
        let d2 = f.mul(f.reduce(order), f.inv(s));
        let degree = (1..)
            .take_while(|d| d * d <= order)
            .find(|d| f.reduce(d * d) == d2)
            .ok_or_else(|| Error::CharacterTable("no integral degree".into()))?;
        let values = (0..r)
            .map(|j| {
                f.mul(
                    f.mul(f.reduce(degree), omega[j]),
                    f.inv(f.reduce(cd.size(j) as u64)),
                )
            })
            .collect();
        rows.push((degree, values));
    }
    rows.sort();
    let table = ModularCharacterTable {
        field: f,
        classes,
        degrees: rows.iter().map(|(d, _)| *d).collect(),
        values: rows.into_iter().map(|(_, v)| v).collect(),
    };
    table.verify()?;
    Ok(table)
}
