//! Graded Grothendieck group of the principal block of category `O`.
//!
//! Classes are modelled in the Hecke algebra: the Verma module `Delta(x)` is
//! `T_x`, the indecomposable projective functor `theta_x` acts by right
//! multiplication with `b_x` (so `theta_x theta_y` corresponds to
//! `b_y b_x`), and `P(x) = theta_x Delta(e)` is `b_x`. Writing
//! `T_x = sum_y m_{x,y} L_y` with `m_{x,y} = v^{l(x)-l(y)} P_{x,y}(v^2)` fixes
//! the classes `L_y` of simple modules. A Hecke monomial `v^k` corresponds to
//! the grading shift placing a simple in degree `DEGREE_SIGN * k`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::cells::CellData;
use crate::coxeter::{Side, SymmetricGroup};
use crate::error::{Error, Result};
use crate::hecke::{Basis, HeckeAlgebra, HeckeElement};
use crate::kl::KLTable;
use crate::laurent::LaurentPolynomial;

/// Degree of the simple `L` carried by the Hecke monomial `v^k` is
/// `DEGREE_SIGN * k`: tops of modules sit in negative degree, socles in
/// positive degree.
pub const DEGREE_SIGN: i32 = -1;

/// Graded multiplicities of simple modules, keyed by `(degree, element)`.
///
/// Iteration order is degree first, then length, then one-line lex (the
/// dense index order).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedCharacter {
    pub rank: usize,
    entries: BTreeMap<(i32, usize), u64>,
}

impl GradedCharacter {
    pub fn empty(rank: usize) -> Self {
        GradedCharacter {
            rank,
            entries: BTreeMap::new(),
        }
    }

    /// Builds a character from Hecke coefficients of simple classes.
    /// Negative coefficients mean the input is not the class of a module.
    pub fn from_hecke_coords(
        rank: usize,
        coords: impl IntoIterator<Item = (usize, LaurentPolynomial)>,
    ) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (w, c) in coords {
            for (k, m) in c.terms() {
                if m < 0 {
                    return Err(Error::Precondition(format!(
                        "negative multiplicity {m} of simple {w} at v^{k}"
                    )));
                }
                entries.insert((DEGREE_SIGN * k, w), m as u64);
            }
        }
        Ok(GradedCharacter { rank, entries })
    }

    pub fn insert(&mut self, w: usize, degree: i32, multiplicity: u64) {
        if multiplicity > 0 {
            *self.entries.entry((degree, w)).or_default() += multiplicity;
        }
    }

    pub fn get(&self, w: usize, degree: i32) -> u64 {
        self.entries.get(&(degree, w)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (i32, usize, u64)> + '_ {
        self.entries.iter().map(|(&(d, w), &m)| (d, w, m))
    }

    pub fn degrees(&self) -> Vec<i32> {
        let mut ds: Vec<i32> = self.entries.keys().map(|&(d, _)| d).collect();
        ds.dedup();
        ds
    }

    /// Simples in one degree with their multiplicities.
    pub fn slice(&self, degree: i32) -> BTreeMap<usize, u64> {
        self.entries
            .range((degree, 0)..=(degree, usize::MAX))
            .map(|(&(_, w), &m)| (w, m))
            .collect()
    }

    /// Ungraded multiplicities.
    pub fn ungraded(&self) -> BTreeMap<usize, u64> {
        let mut out = BTreeMap::new();
        for (&(_, w), &m) in &self.entries {
            *out.entry(w).or_default() += m;
        }
        out
    }

    pub fn is_degree_symmetric(&self) -> bool {
        self.entries.iter().all(|(&(d, w), &m)| self.get(w, -d) == m)
    }

    /// Tab-separated graded picture: one row per degree, listing `L(word)`
    /// (with `^m` for multiplicity `m > 1`).
    pub fn to_tsv(&self, group: &SymmetricGroup) -> String {
        let mut out = String::from("degree\tsimples\n");
        for d in self.degrees() {
            let cells: Vec<String> = self
                .slice(d)
                .into_iter()
                .map(|(w, m)| {
                    let name = format!("L({})", group.element(w).word_string());
                    if m == 1 {
                        name
                    } else {
                        format!("{name}^{m}")
                    }
                })
                .collect();
            out.push_str(&format!("{d}\t{}\n", cells.join("\t")));
        }
        out
    }

    pub fn to_report(&self, group: &SymmetricGroup) -> CharacterReport {
        CharacterReport {
            rank: self.rank,
            rows: self
                .degrees()
                .into_iter()
                .map(|d| DegreeRow {
                    degree: d,
                    simples: self
                        .slice(d)
                        .into_iter()
                        .map(|(w, m)| SimpleEntry {
                            word: group.element(w).word_string(),
                            one_line: group.element(w).one_line_string(),
                            multiplicity: m,
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SimpleEntry {
    pub word: String,
    pub one_line: String,
    pub multiplicity: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct DegreeRow {
    pub degree: i32,
    pub simples: Vec<SimpleEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CharacterReport {
    pub rank: usize,
    pub rows: Vec<DegreeRow>,
}

/// Outcome of asking for the Jantzen middle of `theta_s L(y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JantzenMiddle {
    /// Set when `y s > y`, i.e. `theta_s L(y) = 0`; the middle is then empty.
    pub vanishes: bool,
    pub middle: GradedCharacter,
}

/// Query surface over the decategorified principal block.
#[derive(Debug, Clone)]
pub struct CategoryO {
    cells: Arc<CellData>,
    hecke: HeckeAlgebra,
}

impl CategoryO {
    pub fn new(cells: Arc<CellData>) -> Self {
        let hecke = HeckeAlgebra::new(cells.kl().clone());
        CategoryO { cells, hecke }
    }

    pub fn cells(&self) -> &Arc<CellData> {
        &self.cells
    }

    pub fn kl(&self) -> &Arc<KLTable> {
        self.cells.kl()
    }

    pub fn group(&self) -> &Arc<SymmetricGroup> {
        self.cells.group()
    }

    pub fn hecke(&self) -> &HeckeAlgebra {
        &self.hecke
    }

    /// Graded `[Delta(x) : L(y)]` as `sum_d c_d v^d` with `d` the degree;
    /// equals `v^{l(y)-l(x)} P_{x,y}(v^-2)`.
    pub fn verma_simple_graded(&self, x: usize, y: usize) -> LaurentPolynomial {
        let hecke_coeff = self.kl().kl_coefficient(x, y);
        if DEGREE_SIGN < 0 {
            hecke_coeff.bar()
        } else {
            hecke_coeff
        }
    }

    /// `[Delta(x) : L(y)] = P_{x,y}(1)`; nonzero iff `x <= y`.
    pub fn verma_simple_multiplicity(&self, x: usize, y: usize) -> u64 {
        self.kl().at_one(x, y) as u64
    }

    /// `[P(w) : Delta(e)] = [Delta(e) : L(w)]` by BGG reciprocity.
    pub fn verma_flag_multiplicity_of_dominant(&self, w: usize) -> u64 {
        self.verma_simple_multiplicity(self.group().identity(), w)
    }

    /// `theta_x L(y) != 0` iff `x <=_R y^-1`.
    pub fn theta_nonzero(&self, x: usize, y: usize) -> bool {
        self.cells.leq_right(x, self.group().inverse(y))
    }

    /// `[L(y)]` in the Verma basis: the row `N_{y,a}`, `a >= y`, of the
    /// inverse of the unitriangular matrix `m`, by back substitution.
    pub fn simple_in_verma_basis(&self, y: usize) -> HeckeElement {
        let g = self.group();
        let kl = self.kl();
        let order = g.order();
        let mut row = vec![LaurentPolynomial::zero(); order];
        row[y] = LaurentPolynomial::one();
        let mut support = vec![y];
        for a in y + 1..order {
            if !g.bruhat_leq(y, a) {
                continue;
            }
            let mut acc = LaurentPolynomial::zero();
            for &b in &support {
                if g.bruhat_leq(b, a) {
                    acc -= &(&row[b] * &kl.kl_coefficient(b, a));
                }
            }
            if !acc.is_zero() {
                row[a] = acc;
                support.push(a);
            }
        }
        let coords = support.into_iter().map(|a| (a, std::mem::take(&mut row[a]))).collect();
        HeckeElement {
            rank: g.rank(),
            basis: Basis::Standard,
            coords,
        }
    }

    /// Rewrites a Verma-basis class in the simple basis.
    pub fn verma_to_simple(&self, h: &HeckeElement) -> Result<BTreeMap<usize, LaurentPolynomial>> {
        let std_h = self.hecke.to_standard(h)?;
        let g = self.group();
        let mut out: BTreeMap<usize, LaurentPolynomial> = BTreeMap::new();
        for (&a, c) in &std_h.coords {
            for b in a..g.order() {
                if g.bruhat_leq(a, b) {
                    let term = c * &self.kl().kl_coefficient(a, b);
                    let entry = out.entry(b).or_default();
                    *entry += &term;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    /// Class of `theta_{s_k} ... theta_{s_1} theta_x L(y)`: `x` applied
    /// first, then `then` in order.
    pub fn theta_sequence_on_simple(&self, x: usize, then: &[usize], y: usize) -> Result<GradedCharacter> {
        let mut h = self.simple_in_verma_basis(y);
        if x != 0 {
            h = self.hecke.multiply(&h, &self.hecke.kl_basis_element(x))?;
        }
        for &s in then {
            let bs = self.hecke.kl_basis_element(self.group().rmul(0, s));
            h = self.hecke.multiply(&h, &bs)?;
        }
        GradedCharacter::from_hecke_coords(self.group().rank(), self.verma_to_simple(&h)?)
    }

    /// Graded class of `theta_x L(y)`.
    pub fn theta_on_simple(&self, x: usize, y: usize) -> Result<GradedCharacter> {
        self.theta_sequence_on_simple(x, &[], y)
    }

    /// Degree-zero layer of `theta_s L(y)` read off the mu-function: simples
    /// `L(z)` with `z s > z`, multiplicity `mu(y, z)`.
    pub fn jantzen_middle(&self, s: usize, y: usize) -> Result<JantzenMiddle> {
        let g = self.group();
        crate::coxeter::Permutation::simple(g.rank(), s)?;
        let mut middle = GradedCharacter::empty(g.rank());
        if !g.descents(y, Side::Right).contains(s) {
            return Ok(JantzenMiddle { vanishes: true, middle });
        }
        let kl = self.kl();
        for (z, m) in kl.mu_below(y) {
            if !g.descents(z, Side::Right).contains(s) {
                middle.insert(z, 0, m);
            }
        }
        for z in y + 1..g.order() {
            if !g.descents(z, Side::Right).contains(s) {
                let m = kl.mu(y, z);
                if m > 0 && g.bruhat_leq(y, z) {
                    middle.insert(z, 0, m);
                }
            }
        }
        Ok(JantzenMiddle {
            vanishes: false,
            middle,
        })
    }

    /// For adjacent `s, t` and `y` with `y s < y < y t`, the simple `L(y')`
    /// with `theta_t theta_s L(y) = theta_t L(y')`: `y' = y s` if
    /// `y s t < y s`, otherwise `y' = y t`.
    pub fn compose_pair_rewrite(&self, s: usize, t: usize, y: usize) -> Result<(usize, usize)> {
        let g = self.group();
        crate::coxeter::Permutation::simple(g.rank(), s)?;
        crate::coxeter::Permutation::simple(g.rank(), t)?;
        if s.abs_diff(t) != 1 {
            return Err(Error::NotApplicable(format!("s_{s} and s_{t} commute")));
        }
        let right = g.descents(y, Side::Right);
        if !right.contains(s) || right.contains(t) {
            return Err(Error::NotApplicable(format!(
                "need s_{s} a right descent and s_{t} not a right descent of {}",
                g.element(y)
            )));
        }
        let ys = g.rmul(y, s);
        if g.descents(ys, Side::Right).contains(t) {
            Ok((t, ys))
        } else {
            Ok((t, g.rmul(y, t)))
        }
    }

    /// Checks `(yt)s > yt  <=>  (ys)t > ys` for adjacent `s, t` and
    /// `y s < y < y t`, returning the common truth value.
    pub fn bruhat_hexagon_check(&self, s: usize, t: usize, y: usize) -> Result<bool> {
        let g = self.group();
        if s.abs_diff(t) != 1 || s == 0 || t == 0 || s.max(t) >= g.rank() {
            return Err(Error::Precondition(format!("s_{s}, s_{t} are not adjacent generators")));
        }
        let right = g.descents(y, Side::Right);
        if !right.contains(s) || right.contains(t) {
            return Err(Error::Precondition(format!(
                "descent pattern of {} not admissible",
                g.element(y)
            )));
        }
        let yt = g.rmul(y, t);
        let ys = g.rmul(y, s);
        let lhs = !g.descents(yt, Side::Right).contains(s);
        let rhs = !g.descents(ys, Side::Right).contains(t);
        if lhs != rhs {
            return Err(Error::Precondition(format!(
                "hexagon dichotomy fails at {} for s_{s}, s_{t}",
                g.element(y)
            )));
        }
        Ok(lhs)
    }
}
