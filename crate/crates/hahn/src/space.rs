//! The finite slices `Eₙ` with the form `⟨f,g⟩ = Σ fᵢ gᵢ tᵢ`, types, and
//! subspaces.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::gamma::{GammaExp, TypeClass, Val};
use crate::scalar::HahnScalar;
use crate::series::HahnSeries;
use crate::{Error, Result};

/// Coordinates over `e₀ .. e_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KVector(Vec<HahnScalar>);

impl KVector {
    pub fn new(coords: Vec<HahnScalar>) -> Self {
        KVector(coords)
    }

    pub fn zeros(n: usize) -> Self {
        KVector(vec![HahnScalar::zero(); n])
    }

    /// `eᵢ` in `Eₙ`.
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = HahnScalar::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[HahnScalar] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(HahnScalar::is_zero)
    }

    pub fn add(&self, other: &KVector) -> Result<KVector> {
        same_dim(self, other)?;
        Ok(KVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    pub fn sub(&self, other: &KVector) -> Result<KVector> {
        same_dim(self, other)?;
        Ok(KVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn scale(&self, c: &HahnScalar) -> KVector {
        KVector(self.0.iter().map(|a| a * c).collect())
    }

    /// A nonzero multiple with every coordinate a series.
    pub fn clear_denominators(&self) -> KVector {
        let mut dens: Vec<&HahnSeries> = Vec::new();
        for a in &self.0 {
            if !a.is_series() && !dens.contains(&a.den()) {
                dens.push(a.den());
            }
        }
        if dens.is_empty() {
            return self.clone();
        }
        let m = dens.into_iter().fold(HahnSeries::one(), |acc, d| &acc * d);
        self.scale(&m.into())
    }

    fn series_row(&self) -> Vec<HahnSeries> {
        self.clear_denominators().0.into_iter().map(|a| a.num().clone()).collect()
    }
}

impl fmt::Display for KVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "[{}]", parts.join("; "))
    }
}

fn same_dim(a: &KVector, b: &KVector) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch { left: a.dim(), right: b.dim() });
    }
    Ok(())
}

/// `⟨f,g⟩ = Σ fᵢ gᵢ tᵢ`.
pub fn form(f: &KVector, g: &KVector) -> Result<HahnScalar> {
    same_dim(f, g)?;
    Ok(f.0
        .iter()
        .zip(&g.0)
        .enumerate()
        .filter(|(_, (a, b))| !a.is_zero() && !b.is_zero())
        .fold(HahnScalar::zero(), |acc, (i, (a, b))| &acc + &(&(a * b) * &HahnScalar::t(i))))
}

/// `⟨f⟩ = ⟨f,f⟩`.
pub fn norm(f: &KVector) -> HahnScalar {
    form(f, f).expect("same vector")
}

/// `⟨f⟩` evaluated directly, next to the prediction `minᵢ 2φ(fᵢ) + δᵢ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Anisotropy {
    pub nonzero: bool,
    pub valuation: Val,
    pub predicted: Val,
    /// The minimum in the prediction is reached by one coordinate only.
    pub unique_minimum: bool,
}

impl Anisotropy {
    pub fn consistent(&self) -> bool {
        self.valuation == self.predicted && (self.predicted == Val::Inf || self.unique_minimum)
    }
}

pub fn anisotropy_check(f: &KVector) -> Anisotropy {
    let n = norm(f);
    let candidates: Vec<GammaExp> = f
        .0
        .iter()
        .enumerate()
        .filter_map(|(i, a)| a.valuation().fin().map(|g| &g.scale(2) + &GammaExp::delta(i)))
        .collect();
    let min = candidates.iter().min().cloned();
    let unique = min.as_ref().is_some_and(|m| candidates.iter().filter(|&c| c == m).count() == 1);
    Anisotropy {
        nonzero: !n.is_zero(),
        valuation: n.valuation(),
        predicted: min.map_or(Val::Inf, Val::Fin),
        unique_minimum: unique,
    }
}

/// `T(φ(⟨f⟩))`.
pub fn type_of(f: &KVector) -> Result<TypeClass> {
    match norm(f).valuation() {
        Val::Fin(g) => Ok(g.type_class()),
        Val::Inf => Err(Error::ZeroVector),
    }
}

/// `t ↦ |{i < n : type(eᵢ) = t}|`.
pub fn counting_types(n: usize) -> BTreeMap<TypeClass, usize> {
    let mut out = BTreeMap::new();
    for i in 0..n {
        *out.entry(type_of(&KVector::basis(n, i)).unwrap()).or_insert(0) += 1;
    }
    out
}

/// Gram–Schmidt, fraction-free. With `dⱼ` the Gram determinant of the first
/// `j` inputs, the `k`-th vector is computed as `dₖ₋₁` times the classical
/// one, which keeps every coordinate a series; the divisions are exact.
/// Inputs with fractional coordinates are first scaled to series ones.
pub fn orthogonalize(vectors: &[KVector]) -> Result<Vec<KVector>> {
    let Some(n) = vectors.first().map(KVector::dim) else {
        return Ok(Vec::new());
    };
    if Subspace::span(n, vectors)?.dim() != vectors.len() {
        return Err(Error::DependentInput);
    }
    let rows: Vec<Vec<HahnSeries>> = vectors.iter().map(KVector::series_row).collect();
    let mut ws: Vec<Vec<HahnSeries>> = Vec::new();
    let mut ds: Vec<HahnSeries> = vec![HahnSeries::one()];
    for v in &rows {
        let mut y = v.clone();
        for (j, w) in ws.iter().enumerate() {
            let c = series_form(v, w);
            let (prev, next) = (&ds[j], &ds[j + 1]);
            y = y
                .iter()
                .zip(w)
                .map(|(yi, wi)| {
                    (&(next * yi) - &(&c * wi)).div_exact(prev).expect("fraction-free Gram–Schmidt divides exactly")
                })
                .collect();
        }
        let d = series_form(&y, &y).div_exact(ds.last().unwrap()).expect("Gram determinants divide exactly");
        ds.push(d);
        ws.push(y);
    }
    // Report the classical vector whenever its coordinates are series.
    Ok(ws
        .into_iter()
        .zip(&ds)
        .map(|(w, d)| {
            let classical: Option<Vec<HahnSeries>> = w.iter().map(|x| x.div_exact(d)).collect();
            KVector::new(classical.unwrap_or(w).into_iter().map(HahnScalar::from).collect())
        })
        .collect())
}

fn series_form(f: &[HahnSeries], g: &[HahnSeries]) -> HahnSeries {
    f.iter()
        .zip(g)
        .enumerate()
        .filter(|(_, (a, b))| !a.is_zero() && !b.is_zero())
        .fold(HahnSeries::zero(), |acc, (i, (a, b))| &acc + &(&(a * b) * &HahnSeries::t(i)))
}

/// A subspace of `Eₙ`, kept as a fraction-free echelon basis.
#[derive(Debug, Clone)]
pub struct Subspace {
    n: usize,
    rows: Vec<KVector>,
    pivots: Vec<usize>,
    /// The input vectors that became pivot rows, in input order.
    generators: Vec<KVector>,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace { n, rows: Vec::new(), pivots: Vec::new(), generators: Vec::new() }
    }

    pub fn whole(n: usize) -> Self {
        Self::span(n, &(0..n).map(|i| KVector::basis(n, i)).collect::<Vec<_>>()).unwrap()
    }

    pub fn span(n: usize, vectors: &[KVector]) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.dim() != n) {
            return Err(Error::DimensionMismatch { left: n, right: v.dim() });
        }
        let (rows, pivots, mut origin) = echelon(vectors.iter().map(KVector::series_row).collect(), n);
        origin.sort_unstable();
        Ok(Subspace {
            n,
            rows: rows.into_iter().map(|r| KVector(r.into_iter().map(HahnScalar::from).collect())).collect(),
            pivots,
            generators: origin.into_iter().map(|i| vectors[i].clone()).collect(),
        })
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// The echelon basis.
    pub fn basis(&self) -> &[KVector] {
        &self.rows
    }

    /// A basis drawn from the spanning vectors this subspace was built from.
    pub fn generators(&self) -> &[KVector] {
        &self.generators
    }

    /// Reduces `v` against the echelon rows, clearing each pivot column in
    /// turn; `v` lies in the span exactly when nothing is left.
    pub fn contains(&self, v: &KVector) -> bool {
        if v.dim() != self.n {
            return false;
        }
        let mut x = v.series_row();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if x[p].is_zero() {
                continue;
            }
            let row: Vec<&HahnSeries> = row.0.iter().map(HahnScalar::num).collect();
            let (a, c) = (row[p].clone(), x[p].clone());
            x = x.iter().zip(&row).map(|(xi, ri)| &(&a * xi) - &(&c * *ri)).collect();
        }
        x.iter().all(HahnSeries::is_zero)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.n == other.n && self.generators.iter().all(|v| other.contains(v))
    }

    pub fn join(&self, other: &Subspace) -> Result<Subspace> {
        let mut all = self.generators.clone();
        all.extend(other.generators.iter().cloned());
        Subspace::span(self.n, &all)
    }

    pub fn is_orthogonal_to(&self, other: &Subspace) -> bool {
        self.generators
            .iter()
            .all(|a| other.generators.iter().all(|b| form(a, b).is_ok_and(|c| c.is_zero())))
    }

    /// `X⊥ = {f : ⟨f, b⟩ = 0 for every basis vector b}`, the null space of
    /// the rows `(bᵢ tᵢ)ᵢ`. After fraction-free Gauss–Jordan every pivot
    /// equals the same minor `D`, and each free column `c` gives the solution
    /// `x_c = D`, `x_p = −m[r][c]` at the pivot `p` of row `r`.
    pub fn ortho_complement(&self) -> Subspace {
        let gram: Vec<Vec<HahnSeries>> = self
            .generators
            .iter()
            .map(|b| b.series_row().iter().enumerate().map(|(i, x)| x * &HahnSeries::t(i)).collect())
            .collect();
        let (m, pivots, d) = reduced_echelon(gram, self.n);
        let solutions: Vec<KVector> = (0..self.n)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut x = vec![HahnScalar::zero(); self.n];
                x[free] = d.clone().into();
                for (r, &p) in pivots.iter().enumerate() {
                    x[p] = (-&m[r][free]).into();
                }
                KVector(x)
            })
            .collect();
        Subspace::span(self.n, &solutions).expect("same ambient dimension")
    }

    /// `X = X⊥⊥`.
    pub fn closure_check(&self) -> bool {
        self.ortho_complement().ortho_complement() == *self
    }

    /// Types of an orthogonal basis.
    pub fn pi(&self) -> BTreeSet<TypeClass> {
        pi_of_basis(&self.generators)
    }
}

/// Types of an orthogonalization of `basis`, read off the Gram matrix: the
/// `j`-th fraction-free Gram–Schmidt vector has norm `dⱼ₋₁ dⱼ`, where `dⱼ`
/// is the `j`-th leading principal minor, and those minors are the pivots of
/// fraction-free elimination. The form is anisotropic, so none vanish.
pub fn pi_of_basis(basis: &[KVector]) -> BTreeSet<TypeClass> {
    let rows: Vec<Vec<HahnSeries>> = basis.iter().map(KVector::series_row).collect();
    let mut m: Vec<Vec<HahnSeries>> = rows.iter().map(|a| rows.iter().map(|b| series_form(a, b)).collect()).collect();
    let k = m.len();
    let mut minors = vec![HahnSeries::one()];
    for s in 0..k {
        let p = m[s][s].clone();
        assert!(!p.is_zero(), "independent basis");
        let prev = minors.last().unwrap().clone();
        for i in s + 1..k {
            for j in s + 1..k {
                let v = &(&p * &m[i][j]) - &(&m[i][s] * &m[s][j]);
                m[i][j] = v.div_exact(&prev).expect("fraction-free elimination divides exactly");
            }
        }
        minors.push(p);
    }
    minors
        .windows(2)
        .map(|w| match (w[0].valuation(), w[1].valuation()) {
            (Val::Fin(a), Val::Fin(b)) => (&a + &b).type_class(),
            _ => unreachable!("minors are nonzero"),
        })
        .collect()
}

/// `π(X)`.
pub fn pi_map(x: &Subspace) -> BTreeSet<TypeClass> {
    x.pi()
}

pub fn ortho_complement(x: &Subspace) -> Subspace {
    x.ortho_complement()
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.dim() == other.dim() && self.is_subspace_of(other)
    }
}

/// Fraction-free elimination. Each update divides exactly by the previous
/// pivot, which keeps entries the size of minors. Returns the nonzero
/// echelon rows, their pivot columns and the input index of each row.
fn echelon(mut m: Vec<Vec<HahnSeries>>, n: usize) -> (Vec<Vec<HahnSeries>>, Vec<usize>, Vec<usize>) {
    let mut origin: Vec<usize> = (0..m.len()).collect();
    let mut prev = HahnSeries::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(i) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, i);
        origin.swap(r, i);
        let p = m[r][col].clone();
        for i in r + 1..m.len() {
            let a = m[i][col].clone();
            for j in col + 1..n {
                let v = &(&p * &m[i][j]) - &(&a * &m[r][j]);
                m[i][j] = v.div_exact(&prev).expect("fraction-free elimination divides exactly");
            }
            m[i][col] = HahnSeries::zero();
        }
        prev = p;
        pivots.push(col);
        r += 1;
    }
    m.truncate(r);
    origin.truncate(r);
    (m, pivots, origin)
}

/// Fraction-free Gauss–Jordan: like [`echelon`] but clearing above each pivot
/// as well. Returns the rows, their pivot columns and the common pivot value.
fn reduced_echelon(mut m: Vec<Vec<HahnSeries>>, n: usize) -> (Vec<Vec<HahnSeries>>, Vec<usize>, HahnSeries) {
    let mut prev = HahnSeries::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(i) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, i);
        let p = m[r][col].clone();
        for i in (0..m.len()).filter(|&i| i != r) {
            let a = m[i][col].clone();
            for j in (0..n).filter(|&j| j != col) {
                let v = &(&p * &m[i][j]) - &(&a * &m[r][j]);
                m[i][j] = v.div_exact(&prev).expect("fraction-free elimination divides exactly");
            }
            m[i][col] = HahnSeries::zero();
        }
        prev = p;
        pivots.push(col);
        r += 1;
    }
    m.truncate(r);
    (m, pivots, prev)
}
