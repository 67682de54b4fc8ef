//! Dimension tables over ranges of weights and depths.

use std::fmt;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use super::{solve, Space, SpaceError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionTable {
    pub space: Space,
    pub cells: Vec<Cell>,
}

impl DimensionTable {
    pub fn get(&self, n: usize, r: Option<usize>) -> Option<usize> {
        self.cells.iter().find(|c| c.n == n && c.r == r).map(|c| c.dim)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes")
    }
}

/// Every cell of the ranges inside the space's domain, solved in parallel
/// and listed in `(r, n)` order. `V_krv` has one cell per weight.
pub fn dimension_table(
    space: Space,
    ns: RangeInclusive<usize>,
    rs: RangeInclusive<usize>,
) -> Result<DimensionTable, SpaceError> {
    let coords: Vec<(usize, Option<usize>)> = if space.is_bigraded() {
        rs.flat_map(|r| ns.clone().map(move |n| (n, Some(r)))).filter(|&(n, r)| space.accepts(n, r.unwrap())).collect()
    } else {
        ns.filter(|&n| space.accepts(n, 0)).map(|n| (n, None)).collect()
    };
    let cells = coords
        .into_par_iter()
        .map(|(n, r)| solve(space, n, r.unwrap_or(0)).map(|b| Cell { n, r, dim: b.dim() }))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DimensionTable { space, cells })
}

impl fmt::Display for DimensionTable {
    /// A grid with one row per depth and one column per weight; cells
    /// outside the domain print as `.`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut ns: Vec<usize> = self.cells.iter().map(|c| c.n).collect();
        ns.sort();
        ns.dedup();
        let mut rs: Vec<Option<usize>> = self.cells.iter().map(|c| c.r).collect();
        rs.sort();
        rs.dedup();
        writeln!(f, "{}", self.space)?;
        write!(f, "{:>6}", "r\\n")?;
        for n in &ns {
            write!(f, "{n:>4}")?;
        }
        writeln!(f)?;
        for r in rs {
            match r {
                Some(r) => write!(f, "{r:>6}")?,
                None => write!(f, "{:>6}", "all")?,
            }
            for &n in &ns {
                match self.get(n, r) {
                    Some(d) => write!(f, "{d:>4}")?,
                    None => write!(f, "{:>4}", ".")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
