//! Intersection matrices, twist generators, and words in the twist monoid.
//!
//! An intersection matrix Ω describes two families of curves: `n` curves in
//! family A and `m` in family B. Curves within a family are disjoint, so Ω
//! is symmetric, nonnegative, zero on the diagonal, and zero within each
//! family block. The twist generator for index `i` is `Q_i = I + D_i Ω`,
//! where `D_i` has a single 1 at position `(i, i)`: it adds row `i` of Ω to
//! row `i` of the identity. Products of generators over words that use
//! every index form the admissible part of the monoid.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::ser::Serializer;
use serde::Serialize;

use crate::error::CoreError;
use crate::exact::IntMatrix;

/// 1-based curve index; indices `1..=n` are family A, `n+1..=n+m` family B.
pub type TwistLetter = usize;

/// Structural defect in a candidate intersection matrix. Indices are
/// 1-based to match input row/column numbering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OmegaViolation {
    /// Entry (row, col) differs from its transpose partner.
    NotSymmetric { row: usize, col: usize },
    /// Entry (row, col) is negative.
    NegativeEntry { row: usize, col: usize },
    /// Diagonal entry at index is nonzero.
    NonzeroDiagonal { index: usize },
    /// Nonzero entry between two curves of the same family.
    WithinFamilyEntry { row: usize, col: usize },
    /// Strict mode only: the intersection graph is disconnected; carries
    /// one proper component as sorted 1-based indices.
    Disconnected { component: Vec<usize> },
}

impl fmt::Display for OmegaViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OmegaViolation::NotSymmetric { row, col } => {
                write!(f, "entry ({row},{col}) breaks symmetry")
            }
            OmegaViolation::NegativeEntry { row, col } => {
                write!(f, "entry ({row},{col}) is negative")
            }
            OmegaViolation::NonzeroDiagonal { index } => {
                write!(f, "diagonal entry {index} is nonzero")
            }
            OmegaViolation::WithinFamilyEntry { row, col } => {
                write!(f, "entry ({row},{col}) joins two curves of the same family")
            }
            OmegaViolation::Disconnected { component } => {
                write!(
                    f,
                    "intersection graph is disconnected; component {component:?}"
                )
            }
        }
    }
}

/// Validated intersection matrix for `n` A-curves and `m` B-curves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionMatrix {
    n: usize,
    m: usize,
    omega: IntMatrix,
}

/// Structural checks on a candidate Ω. Returns every violation found;
/// empty means valid. `strict` additionally requires the bipartite
/// intersection graph (edges where Ω > 0) to be connected.
pub fn validate_omega(n: usize, m: usize, omega: &IntMatrix, strict: bool) -> Vec<OmegaViolation> {
    let dim = n + m;
    let mut violations = Vec::new();
    if omega.rows() != dim || omega.cols() != dim {
        // Dimension mismatch swamps everything else; report it alone via
        // a synthetic violation at the out-of-range corner.
        violations.push(OmegaViolation::NotSymmetric {
            row: omega.rows(),
            col: omega.cols(),
        });
        return violations;
    }
    for i in 0..dim {
        if !omega[(i, i)].is_zero() {
            violations.push(OmegaViolation::NonzeroDiagonal { index: i + 1 });
        }
        for j in 0..dim {
            if omega[(i, j)].is_negative() {
                violations.push(OmegaViolation::NegativeEntry {
                    row: i + 1,
                    col: j + 1,
                });
            }
            if i < j {
                if omega[(i, j)] != omega[(j, i)] {
                    violations.push(OmegaViolation::NotSymmetric {
                        row: i + 1,
                        col: j + 1,
                    });
                }
                let same_family = (i < n) == (j < n);
                if same_family && !omega[(i, j)].is_zero() {
                    violations.push(OmegaViolation::WithinFamilyEntry {
                        row: i + 1,
                        col: j + 1,
                    });
                }
            }
        }
    }
    if strict && violations.is_empty() && dim > 0 {
        // BFS from vertex 0 over positive entries.
        let mut seen = vec![false; dim];
        let mut queue = vec![0usize];
        seen[0] = true;
        while let Some(v) = queue.pop() {
            for w in 0..dim {
                if !seen[w] && omega[(v, w)].is_positive() {
                    seen[w] = true;
                    queue.push(w);
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            let component: Vec<usize> = (0..dim).filter(|&v| seen[v]).map(|v| v + 1).collect();
            violations.push(OmegaViolation::Disconnected { component });
        }
    }
    violations
}

impl IntersectionMatrix {
    /// Builds a structurally valid intersection matrix (connectivity not
    /// required).
    pub fn new(n: usize, m: usize, omega: IntMatrix) -> Result<Self, CoreError> {
        Self::with_strictness(n, m, omega, false)
    }

    /// Builds an intersection matrix that must also have a connected
    /// intersection graph.
    pub fn new_strict(n: usize, m: usize, omega: IntMatrix) -> Result<Self, CoreError> {
        Self::with_strictness(n, m, omega, true)
    }

    fn with_strictness(
        n: usize,
        m: usize,
        omega: IntMatrix,
        strict: bool,
    ) -> Result<Self, CoreError> {
        let violations = validate_omega(n, m, &omega, strict);
        if !violations.is_empty() {
            return Err(CoreError::InvalidOmega {
                violations: violations.iter().map(|v| v.to_string()).collect(),
            });
        }
        Ok(IntersectionMatrix { n, m, omega })
    }

    pub fn family_a_count(&self) -> usize {
        self.n
    }

    pub fn family_b_count(&self) -> usize {
        self.m
    }

    /// Total number of curves, `n + m`.
    pub fn dim(&self) -> usize {
        self.n + self.m
    }

    pub fn omega(&self) -> &IntMatrix {
        &self.omega
    }

    /// True when the bipartite intersection graph is connected.
    pub fn is_connected(&self) -> bool {
        validate_omega(self.n, self.m, &self.omega, true).is_empty()
    }

    /// Twist generator `Q_i = I + D_i Ω` for a 1-based index.
    pub fn twist_generator(&self, index: TwistLetter) -> Result<IntMatrix, CoreError> {
        let dim = self.dim();
        if index == 0 || index > dim {
            return Err(CoreError::IndexOutOfRange { index, max: dim });
        }
        let mut q = IntMatrix::identity(dim);
        let row = index - 1;
        for j in 0..dim {
            let add = self.omega[(row, j)].clone();
            q[(row, j)] += add;
        }
        Ok(q)
    }

    /// Product of generators over the word, leftmost letter applied as the
    /// leftmost factor. The empty word gives the identity.
    pub fn word_matrix(&self, word: &TwistWord) -> Result<IntMatrix, CoreError> {
        let mut acc = IntMatrix::identity(self.dim());
        for &letter in word.letters() {
            acc = acc.mul(&self.twist_generator(letter)?);
        }
        Ok(acc)
    }

    /// Applies `Q_i` to a vector without forming the matrix: adds
    /// `(row_i(Ω)·v)` to coordinate `i`.
    pub fn twist_apply(&self, index: TwistLetter, v: &[BigInt]) -> Result<Vec<BigInt>, CoreError> {
        let dim = self.dim();
        if index == 0 || index > dim {
            return Err(CoreError::IndexOutOfRange { index, max: dim });
        }
        if v.len() != dim {
            return Err(CoreError::DimensionMismatch {
                left: dim,
                right: v.len(),
            });
        }
        let row = index - 1;
        let t: BigInt = (0..dim).map(|j| &self.omega[(row, j)] * &v[j]).sum();
        let mut out = v.to_vec();
        out[row] += t;
        Ok(out)
    }

    /// Parses the plain-text form: a header line `n m`, then `n+m` rows of
    /// `n+m` space-separated integers.
    pub fn parse_text(input: &str, strict: bool) -> Result<Self, CoreError> {
        let mut lines = input.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| CoreError::Parse("empty intersection matrix input".into()))?;
        let mut parts = header.split_whitespace();
        let n: usize = parts
            .next()
            .ok_or_else(|| CoreError::Parse("header must be `n m`".into()))?
            .parse()
            .map_err(|e| CoreError::Parse(format!("bad n in header: {e}")))?;
        let m: usize = parts
            .next()
            .ok_or_else(|| CoreError::Parse("header must be `n m`".into()))?
            .parse()
            .map_err(|e| CoreError::Parse(format!("bad m in header: {e}")))?;
        if parts.next().is_some() {
            return Err(CoreError::Parse("header must be exactly `n m`".into()));
        }
        let dim = n + m;
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            let line = lines
                .next()
                .ok_or_else(|| CoreError::Parse(format!("missing matrix row {}", i + 1)))?;
            let row: Vec<BigInt> = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<BigInt>()
                        .map_err(|e| CoreError::Parse(format!("bad entry {tok:?}: {e}")))
                })
                .collect::<Result<_, _>>()?;
            if row.len() != dim {
                return Err(CoreError::Parse(format!(
                    "row {} has {} entries, expected {dim}",
                    i + 1,
                    row.len()
                )));
            }
            data.extend(row);
        }
        if lines.next().is_some() {
            return Err(CoreError::Parse(format!("more than {dim} matrix rows")));
        }
        Self::with_strictness(n, m, IntMatrix::from_rows(dim, dim, data), strict)
    }

    /// Parses the JSON form `{"n": …, "m": …, "omega": [[…]]}` where
    /// entries may be integers or decimal strings.
    pub fn parse_json(input: &str, strict: bool) -> Result<Self, CoreError> {
        let value: serde_json::Value = serde_json::from_str(input)
            .map_err(|e| CoreError::Parse(format!("invalid JSON: {e}")))?;
        let obj = value
            .as_object()
            .ok_or_else(|| CoreError::Parse("top level must be an object".into()))?;
        let n = obj
            .get("n")
            .and_then(|v| v.as_u64())
            .ok_or_else(|| CoreError::Parse("missing or invalid field `n`".into()))?
            as usize;
        let m = obj
            .get("m")
            .and_then(|v| v.as_u64())
            .ok_or_else(|| CoreError::Parse("missing or invalid field `m`".into()))?
            as usize;
        let rows = obj
            .get("omega")
            .and_then(|v| v.as_array())
            .ok_or_else(|| CoreError::Parse("missing or invalid field `omega`".into()))?;
        let dim = n + m;
        if rows.len() != dim {
            return Err(CoreError::Parse(format!(
                "omega has {} rows, expected {dim}",
                rows.len()
            )));
        }
        let mut data = Vec::with_capacity(dim * dim);
        for (i, row) in rows.iter().enumerate() {
            let entries = row
                .as_array()
                .ok_or_else(|| CoreError::Parse(format!("omega row {} is not an array", i + 1)))?;
            if entries.len() != dim {
                return Err(CoreError::Parse(format!(
                    "omega row {} has {} entries, expected {dim}",
                    i + 1,
                    entries.len()
                )));
            }
            for e in entries {
                let parsed = match e {
                    serde_json::Value::Number(num) => num
                        .as_i64()
                        .map(BigInt::from)
                        .ok_or_else(|| CoreError::Parse(format!("non-integer entry {num}"))),
                    serde_json::Value::String(s) => s
                        .parse::<BigInt>()
                        .map_err(|err| CoreError::Parse(format!("bad entry {s:?}: {err}"))),
                    other => Err(CoreError::Parse(format!("bad entry {other}"))),
                }?;
                data.push(parsed);
            }
        }
        Self::with_strictness(n, m, IntMatrix::from_rows(dim, dim, data), strict)
    }

    /// Text form accepted by [`IntersectionMatrix::parse_text`].
    pub fn to_text(&self) -> String {
        let dim = self.dim();
        let mut out = format!("{} {}\n", self.n, self.m);
        for i in 0..dim {
            let row: Vec<String> = (0..dim).map(|j| self.omega[(i, j)].to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

impl Serialize for IntersectionMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("IntersectionMatrix", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("m", &self.m)?;
        st.serialize_field("omega", &self.omega)?;
        st.end()
    }
}

/// Word in the twist monoid: a finite sequence of 1-based curve indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwistWord(Vec<TwistLetter>);

impl TwistWord {
    pub fn new(letters: Vec<TwistLetter>) -> Self {
        TwistWord(letters)
    }

    pub fn letters(&self) -> &[TwistLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// A word is admissible for a curve system when every index
    /// `1..=dim` appears at least once.
    pub fn is_admissible(&self, dim: usize) -> bool {
        self.missing_indices(dim).is_empty()
    }

    /// Indices in `1..=dim` that never appear, ascending.
    pub fn missing_indices(&self, dim: usize) -> Vec<usize> {
        let mut present = vec![false; dim + 1];
        for &l in &self.0 {
            if l <= dim {
                present[l] = true;
            }
        }
        (1..=dim).filter(|&i| !present[i]).collect()
    }
}

impl fmt::Display for TwistWord {
    /// Comma-separated 1-based indices: `1,2,3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for TwistWord {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(CoreError::EmptyWord);
        }
        let letters = trimmed
            .split(',')
            .map(|tok| {
                let t = tok.trim();
                t.parse::<usize>()
                    .map_err(|e| CoreError::Parse(format!("bad index {t:?}: {e}")))
                    .and_then(|i| {
                        if i == 0 {
                            Err(CoreError::Parse("indices are 1-based; got 0".into()))
                        } else {
                            Ok(i)
                        }
                    })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TwistWord(letters))
    }
}

impl Serialize for TwistWord {
    /// Serialized as the comma-separated display form.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}
