use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;
use crate::subset::MAX_ELEMENTS;

/// Families of semigroups generated on demand for tests and the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SemigroupKind {
    /// `Z_n` under addition.
    CyclicGroup,
    /// `x·y = x`.
    LeftZero,
    /// `x·y = y`.
    RightZero,
    /// The chain `0 < 1 < … < n-1` under `min`.
    MeetSemilatticeChain,
    /// Pairs `(i,j)` with `i,j < n` and `(i,j)(k,l) = (i,l)`; element `(i,j)` is index `i·n + j`.
    RectangularBand,
    /// All maps on `{0,…,n-1}` composed left to right: `(f·g)(x) = g(f(x))`.
    /// The map `f` has index `Σ f(x)·nˣ`.
    FullTransformation,
}

impl SemigroupKind {
    pub const ALL: [SemigroupKind; 6] = [
        Self::CyclicGroup,
        Self::LeftZero,
        Self::RightZero,
        Self::MeetSemilatticeChain,
        Self::RectangularBand,
        Self::FullTransformation,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::CyclicGroup => "cyclic_group",
            Self::LeftZero => "left_zero",
            Self::RightZero => "right_zero",
            Self::MeetSemilatticeChain => "meet_semilattice_chain",
            Self::RectangularBand => "rectangular_band",
            Self::FullTransformation => "full_transformation",
        }
    }

    /// Largest accepted size parameter.
    pub fn limit(self) -> usize {
        match self {
            Self::RectangularBand => 16,
            Self::FullTransformation => 4,
            _ => MAX_ELEMENTS,
        }
    }

    /// Short display name, e.g. `Z3` or `RB2x2`.
    pub fn short_name(self, n: usize) -> String {
        match self {
            Self::CyclicGroup => format!("Z{n}"),
            Self::LeftZero => format!("LZ{n}"),
            Self::RightZero => format!("RZ{n}"),
            Self::MeetSemilatticeChain => format!("SL{n}"),
            Self::RectangularBand => format!("RB{n}x{n}"),
            Self::FullTransformation => format!("T{n}"),
        }
    }
}

impl fmt::Display for SemigroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SemigroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.replace('-', "_");
        Self::ALL
            .into_iter()
            .find(|k| k.as_str() == norm)
            .ok_or_else(|| Error::Parse(format!("unknown semigroup kind `{s}`")))
    }
}

/// Builds a member of a standard family with a deterministic element order.
pub fn standard_semigroup(kind: SemigroupKind, n: usize) -> Result<FiniteSemigroup> {
    if n == 0 || n > kind.limit() {
        return Err(Error::SizeLimit { kind: kind.as_str(), n, limit: kind.limit() });
    }
    let table: Vec<Vec<usize>> = match kind {
        SemigroupKind::CyclicGroup => (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect(),
        SemigroupKind::LeftZero => (0..n).map(|i| vec![i; n]).collect(),
        SemigroupKind::RightZero => (0..n).map(|_| (0..n).collect()).collect(),
        SemigroupKind::MeetSemilatticeChain => (0..n).map(|i| (0..n).map(|j| i.min(j)).collect()).collect(),
        SemigroupKind::RectangularBand => {
            let m = n * n;
            (0..m).map(|a| (0..m).map(|b| (a / n) * n + b % n).collect()).collect()
        }
        SemigroupKind::FullTransformation => {
            let m = n.pow(n as u32);
            let decode = |f: usize| -> Vec<usize> { (0..n).map(|x| f / n.pow(x as u32) % n).collect() };
            let maps: Vec<Vec<usize>> = (0..m).map(decode).collect();
            let encode = |f: &[usize]| -> usize { f.iter().enumerate().map(|(x, &v)| v * n.pow(x as u32)).sum() };
            maps.iter()
                .map(|f| {
                    maps.iter()
                        .map(|g| encode(&(0..n).map(|x| g[f[x]]).collect::<Vec<_>>()))
                        .collect()
                })
                .collect()
        }
    };
    Ok(FiniteSemigroup::from_table(&table)?.with_name(kind.short_name(n)))
}
