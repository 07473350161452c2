//! Closed-form crossing-number values and lower-bound machinery.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families;
use crate::graph::PartitionedGraph;

/// The Zarankiewicz number `Z(m,n) = ⌊m/2⌋⌊(m-1)/2⌋⌊n/2⌋⌊(n-1)/2⌋`.
///
/// Equals `cr(K_{m,n})` whenever `min(m,n) ≤ 6`; see [`known_bipartite_cr`].
pub fn zarankiewicz(m: u64, n: u64) -> u64 {
    (m / 2) * ((m - 1) / 2) * (n / 2) * ((n - 1) / 2)
}

/// `cr(K_{m,n})` when it is a proved value, i.e. `min(m,n) ≤ 6`.
pub fn known_bipartite_cr(m: u64, n: u64) -> Option<u64> {
    if m.min(n) <= 6 {
        Some(zarankiewicz(m, n))
    } else {
        None
    }
}

/// Provenance of a catalogued closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormulaStatus {
    /// Proved; this crate's constructions realize the value as a drawing.
    Proved,
    /// Proved in the literature; carried here as a trusted import.
    ProvedElsewhere,
    /// Conjectural; the CLI warns when such a value is used as ground truth.
    Conjectured,
}

impl FormulaStatus {
    pub fn is_conjectured(self) -> bool {
        matches!(self, FormulaStatus::Conjectured)
    }
}

impl std::fmt::Display for FormulaStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FormulaStatus::Proved => write!(f, "proved"),
            FormulaStatus::ProvedElsewhere => write!(f, "proved-elsewhere"),
            FormulaStatus::Conjectured => write!(f, "conjectured"),
        }
    }
}

/// One evaluated catalogue entry.
#[derive(Debug, Clone, Serialize)]
pub struct FormulaEntry {
    pub family: &'static str,
    pub n: u64,
    pub value: u64,
    pub status: FormulaStatus,
}

/// Evaluates the catalogued closed form for `family` at `n`.
pub fn family_formula(family: &str, n: u64) -> Result<FormulaEntry> {
    if n == 0 {
        return Err(Error::invalid("n must be at least 1"));
    }
    let fam = families::lookup(family)
        .ok_or_else(|| Error::invalid(format!("unknown family {family:?}")))?;
    Ok(FormulaEntry {
        family: fam.code(),
        n,
        value: fam.formula(n),
        status: fam.status(),
    })
}

/// The Euler-formula bound `cr(G) ≥ |E| − 3|V| + 6` (clamped at 0).
pub fn euler_lower_bound(g: &PartitionedGraph) -> u64 {
    let v = g.vertex_count() as i64;
    let e = g.edge_count() as i64;
    if v < 3 {
        return 0;
    }
    (e - 3 * v + 6).max(0) as u64
}

/// Bipartite refinement `cr(G) ≥ |E| − 2|V| + 4` for triangle-free graphs;
/// applies to any graph with at most two parts.
fn euler_bipartite_bound(g: &PartitionedGraph) -> u64 {
    let v = g.vertex_count() as i64;
    let e = g.edge_count() as i64;
    if g.part_count() > 2 || v < 3 {
        return 0;
    }
    (e - 2 * v + 4).max(0) as u64
}

/// Best available lower bound for a complete multipartite graph.
///
/// Takes the maximum of the Euler bounds and `Z(m,n)` over every complete
/// bipartite subgraph obtained by merging the parts into two blocks, for
/// those blocks where the bipartite crossing number is proved.
pub fn best_lower_bound(g: &PartitionedGraph) -> u64 {
    let sizes = g.part_sizes();
    let k = sizes.len();
    let mut best = euler_lower_bound(g).max(euler_bipartite_bound(g));
    if !(2..=20).contains(&k) {
        return best;
    }
    // Every split of the part list into two nonempty blocks; fixing part 0 in
    // the first block avoids counting each split twice.
    for mask in 0..(1u64 << k) {
        if mask & 1 == 0 || mask == (1 << k) - 1 {
            continue;
        }
        let mut m = 0u64;
        let mut n = 0u64;
        for (i, &s) in sizes.iter().enumerate() {
            if mask & (1 << i) != 0 {
                m += s as u64;
            } else {
                n += s as u64;
            }
        }
        if let Some(z) = known_bipartite_cr(m, n) {
            best = best.max(z);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::PartitionedGraph;

    #[test]
    fn zarankiewicz_values() {
        assert_eq!(zarankiewicz(5, 5), 16);
        assert_eq!(zarankiewicz(4, 4), 4);
        for n in 1..=20 {
            assert_eq!(zarankiewicz(1, n), 0);
        }
    }

    #[test]
    fn zarankiewicz_symmetric_and_recurrence() {
        for m in 1..=50u64 {
            for n in 1..=50u64 {
                assert_eq!(zarankiewicz(m, n), zarankiewicz(n, m));
                if n >= 2 {
                    assert_eq!(
                        zarankiewicz(m, n) - zarankiewicz(m, n - 1),
                        (m / 2) * ((m - 1) / 2) * ((n - 1) / 2)
                    );
                }
            }
        }
    }

    #[test]
    fn kleitman_range() {
        assert_eq!(known_bipartite_cr(5, 3), Some(4));
        assert_eq!(known_bipartite_cr(6, 6), Some(36));
        assert_eq!(known_bipartite_cr(7, 7), None);
    }

    #[test]
    fn catalogue_values() {
        let e = family_formula("K1111n", 4).unwrap();
        assert_eq!(e.value, 8);
        assert_eq!(e.status, FormulaStatus::Proved);

        let e = family_formula("K122n", 2).unwrap();
        assert_eq!(e.value, 3);

        let e = family_formula("K24n", 3).unwrap();
        assert_eq!(e.value, 12);
        assert_eq!(e.status, FormulaStatus::Conjectured);

        assert!(family_formula("K999n", 1).is_err());
        assert!(family_formula("K1111n", 0).is_err());
    }

    #[test]
    fn formula_monotone_in_n() {
        for fam in families::all() {
            let mut prev = 0;
            for n in 1..=50 {
                let v = fam.formula(n);
                assert!(v >= prev, "{} not monotone at n={}", fam.code(), n);
                prev = v;
            }
        }
    }

    #[test]
    fn euler_bounds() {
        let k5 = PartitionedGraph::complete_multipartite(&[1, 1, 1, 1, 1]).unwrap();
        assert_eq!(euler_lower_bound(&k5), 1);
        let k33 = PartitionedGraph::complete_multipartite(&[3, 3]).unwrap();
        assert_eq!(euler_lower_bound(&k33), 0);
        assert_eq!(euler_bipartite_bound(&k33), 1);
        let k4 = PartitionedGraph::complete_multipartite(&[1, 1, 1, 1]).unwrap();
        assert_eq!(euler_lower_bound(&k4), 0);
    }

    #[test]
    fn best_lower_bounds() {
        let g = PartitionedGraph::complete_multipartite(&[1, 2, 2, 3]).unwrap();
        assert!(best_lower_bound(&g) >= 4); // contains K_{5,3}

        let g = PartitionedGraph::complete_multipartite(&[1, 1, 1, 1, 2]).unwrap();
        assert_eq!(best_lower_bound(&g), 2); // Euler beats Z(4,2) = 0

        let k23 = PartitionedGraph::complete_multipartite(&[2, 3]).unwrap();
        assert_eq!(best_lower_bound(&k23), 0);
    }

    #[test]
    fn lower_bound_never_exceeds_formula() {
        for code in ["K1111n", "K122n", "K1112n", "K14n", "K13n", "K23n"] {
            let fam = families::lookup(code).unwrap();
            for n in 1..=12 {
                let g = fam.graph(n as usize).unwrap();
                assert!(
                    best_lower_bound(&g) <= fam.formula(n),
                    "{code} n={n}: lower bound exceeds formula"
                );
            }
        }
    }
}
