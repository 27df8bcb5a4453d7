//! Linear spaces of matrices represented as matrices of linear forms.
//!
//! A [`LinMatrixSpace`] with entries in `z_0..z_k` stands for the span of its
//! coefficient matrices. The constructors cover generic matrices, standard
//! compression spaces, the banded blocks `D_s`, Kronecker-type pencils and the
//! special middle points; [`borel`] recognizes and enumerates staircase supports.

pub mod borel;
mod constructors;
mod pminors;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exactalg::{Echelon, Field, Poly};
use crate::error::{Error, Result};

pub use borel::{enumerate_borel_fixed, is_borel_pattern, StaircasePattern};
pub use constructors::{
    block_d, generic_matrix, intersection_point, kronecker_pencil, middle_point, middle_point_for, standard_compression,
    standard_shape,
};
pub use pminors::{bordered_expand, p_closed, p_minor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Symmetry {
    Symmetric,
    Alternating,
    None,
}

impl Symmetry {
    fn name(&self) -> &'static str {
        match self {
            Symmetry::Symmetric => "symmetric",
            Symmetry::Alternating => "alternating",
            Symmetry::None => "none",
        }
    }
}

/// Matrix of homogeneous linear forms in a fixed list of variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinMatrixSpace<F: Field> {
    field: F,
    symmetry: Symmetry,
    vars: Vec<String>,
    entries: Vec<Vec<Poly<F>>>,
}

impl<F: Field> LinMatrixSpace<F> {
    /// Validates shape, linearity and the symmetry flag.
    pub fn new(field: &F, symmetry: Symmetry, vars: Vec<String>, entries: Vec<Vec<Poly<F>>>) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        if entries.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged matrix".into()));
        }
        for row in &entries {
            for p in row {
                if p.nvars() != vars.len() {
                    return Err(Error::ArityMismatch { left: vars.len(), right: p.nvars() });
                }
                if !p.is_homogeneous_of_degree(1) {
                    return Err(Error::Shape(format!("entry {p} is not a linear form")));
                }
            }
        }
        if symmetry != Symmetry::None {
            if rows != cols {
                return Err(Error::Shape(format!("{} matrix must be square", symmetry.name())));
            }
            for i in 0..rows {
                for j in 0..rows {
                    let expected = match symmetry {
                        Symmetry::Symmetric => entries[j][i].clone(),
                        _ => -&entries[j][i],
                    };
                    if entries[i][j] != expected {
                        return Err(Error::Shape(format!("entries ({i},{j}) and ({j},{i}) break {} symmetry", symmetry.name())));
                    }
                }
            }
        }
        Ok(Self { field: field.clone(), symmetry, vars, entries })
    }

    /// Builds a symmetric/alternating matrix from its upper-triangular entries.
    pub fn from_upper(field: &F, symmetry: Symmetry, vars: Vec<String>, n: usize, upper: impl Fn(usize, usize) -> Poly<F>) -> Result<Self> {
        let nv = vars.len();
        let mut entries = vec![vec![Poly::zero(field, nv); n]; n];
        for i in 0..n {
            for j in i..n {
                if symmetry == Symmetry::Alternating && i == j {
                    continue;
                }
                let p = upper(i, j);
                entries[j][i] = if symmetry == Symmetry::Alternating { -&p } else { p.clone() };
                entries[i][j] = p;
            }
        }
        Self::new(field, symmetry, vars, entries)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries.first().map_or(0, Vec::len)
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn entries(&self) -> &[Vec<Poly<F>>] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly<F> {
        &self.entries[i][j]
    }

    /// Positions carrying independent entries: upper triangle (strict for alternating) or all.
    pub fn free_positions(&self) -> Vec<(usize, usize)> {
        let (rows, cols) = (self.rows(), self.cols());
        (0..rows)
            .flat_map(|i| (0..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| match self.symmetry {
                Symmetry::Symmetric => i <= j,
                Symmetry::Alternating => i < j,
                Symmetry::None => true,
            })
            .collect()
    }

    fn coefficient_rows(&self) -> Vec<Vec<F::Elem>> {
        self.free_positions()
            .into_iter()
            .map(|(i, j)| self.entries[i][j].linear_coeffs().expect("entries are linear"))
            .collect()
    }

    /// Dimension of the span of the coefficient matrices.
    pub fn span_dim(&self) -> usize {
        let mut ech = Echelon::new(&self.field, self.nvars());
        for row in self.coefficient_rows() {
            ech.insert(row);
        }
        ech.rank()
    }

    /// An equivalent space whose variables are independent (`nvars = span_dim`).
    pub fn reparametrized(&self) -> Self {
        let mut ech = Echelon::new(&self.field, self.nvars());
        for row in self.coefficient_rows() {
            ech.insert(row);
        }
        let pivots = ech.pivots();
        let d = pivots.len();
        let f = &self.field;
        let entries = self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|p| {
                        let v = p.linear_coeffs().expect("entries are linear");
                        let coeffs: Vec<F::Elem> = pivots.iter().map(|&c| v[c].clone()).collect();
                        Poly::linear(f, &coeffs)
                    })
                    .collect()
            })
            .collect();
        Self { field: f.clone(), symmetry: self.symmetry, vars: Poly::<F>::default_names(d), entries }
    }

    /// Renames the variables.
    pub fn with_var_names(mut self, vars: Vec<String>) -> Result<Self> {
        if vars.len() != self.vars.len() {
            return Err(Error::ArityMismatch { left: self.vars.len(), right: vars.len() });
        }
        self.vars = vars;
        Ok(self)
    }

    /// Scalar matrix of the coefficients of variable `t`.
    pub fn coefficient_matrix(&self, t: usize) -> Vec<Vec<F::Elem>> {
        let n = self.nvars();
        let mono = crate::exactalg::Monomial::var(n, t);
        self.entries.iter().map(|row| row.iter().map(|p| p.coeff(&mono)).collect()).collect()
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            rows: self.rows(),
            cols: self.cols(),
            symmetry: self.symmetry,
            entries: self.entries.iter().map(|r| r.iter().map(|p| p.display_with(&self.vars)).collect()).collect(),
            vars: Some(self.vars.clone()),
        }
    }

    pub fn from_json(field: &F, json: &MatrixJson) -> Result<Self> {
        if json.entries.len() != json.rows || json.entries.iter().any(|r| r.len() != json.cols) {
            return Err(Error::Shape(format!("entries do not form a {}×{} matrix", json.rows, json.cols)));
        }
        let vars = match &json.vars {
            Some(v) => v.clone(),
            None => infer_vars(json.entries.iter().flatten().map(String::as_str)),
        };
        let entries = json
            .entries
            .iter()
            .map(|r| r.iter().map(|s| Poly::parse(field, &vars, s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(field, json.symmetry, vars, entries)
    }

    pub fn from_json_str(field: &F, text: &str) -> Result<Self> {
        let json: MatrixJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(field, &json)
    }
}

impl<F: Field> fmt::Display for LinMatrixSpace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> =
            self.entries.iter().map(|r| r.iter().map(|p| p.display_with(&self.vars)).collect()).collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in &cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}

/// Variable names in natural order: alphabetic prefix, then numeric suffixes.
fn infer_vars<'a>(texts: impl Iterator<Item = &'a str>) -> Vec<String> {
    let mut names = BTreeSet::new();
    for t in texts {
        let mut cur = String::new();
        let mut in_exp = false;
        for ch in t.chars().chain(std::iter::once(' ')) {
            if ch.is_ascii_alphanumeric() || ch == '_' {
                if cur.is_empty() && (ch.is_ascii_digit() || in_exp) {
                    in_exp = false;
                    continue;
                }
                cur.push(ch);
            } else {
                in_exp = ch == '^';
                if !cur.is_empty() {
                    names.insert(std::mem::take(&mut cur));
                }
            }
        }
    }
    let mut v: Vec<String> = names.into_iter().collect();
    v.sort_by_key(|s| natural_key(s));
    v
}

fn natural_key(s: &str) -> Vec<(String, u64)> {
    let mut out = Vec::new();
    let mut text = String::new();
    let mut num = String::new();
    for ch in s.chars() {
        if ch.is_ascii_digit() {
            num.push(ch);
        } else {
            if !num.is_empty() {
                out.push((std::mem::take(&mut text), num.parse().unwrap_or(0)));
                num.clear();
            }
            text.push(ch);
        }
    }
    out.push((text, num.parse().unwrap_or(0)));
    out
}

/// Wire format of a matrix space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub symmetry: Symmetry,
    pub entries: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vars: Option<Vec<String>>,
}
