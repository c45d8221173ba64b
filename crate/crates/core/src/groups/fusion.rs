//! Classes merged with their inverses (G_{**}) and characters merged under
//! χ ↦ conj(χ)⊗η (G_η^{**}).

use serde::Serialize;

use super::GroupData;
use crate::CycNum;

/// R = C ∪ C⁻¹.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MergedClass {
    /// Table columns in R, ascending.
    pub columns: Vec<usize>,
    pub real: bool,
    /// g_R, the minimal element of R.
    pub rep: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FusionStats {
    pub n_starstar: usize,
    pub n_eta_starstar: usize,
    /// Real classes with ξ = −1.
    pub n_xi: usize,
    /// Real classes with ξ = 1.
    pub n_r_xi: usize,
    /// Classes with C ≠ C⁻¹.
    pub n_c: usize,
    /// n_{**} − n_C/2, the number of real classes.
    pub n_r: usize,
    /// Characters with χ = conj(χ)⊗ξ.
    pub n_upper_r_xi: usize,
    /// Characters with χ ≠ conj(χ)⊗ξ.
    pub n_upper_c_xi: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassFusion {
    pub eta: usize,
    pub g_starstar: Vec<MergedClass>,
    /// Orbits {χ, conj(χ)⊗η}, each ascending; the first entry represents it.
    pub g_eta_starstar: Vec<Vec<usize>>,
    pub stats: FusionStats,
    merged_of_column: Vec<usize>,
}

impl ClassFusion {
    pub(super) fn new(data: &GroupData, eta: usize) -> Self {
        let k = data.num_classes();
        let mut merged_of_column = vec![usize::MAX; k];
        let mut g_starstar = Vec::new();
        for c in 0..k {
            if merged_of_column[c] != usize::MAX {
                continue;
            }
            let ci = data.inverse_column(c);
            let mut columns = vec![c, ci];
            columns.sort_unstable();
            columns.dedup();
            let rep = columns.iter().map(|&x| data.class_rep(x)).min().unwrap();
            for &x in &columns {
                merged_of_column[x] = g_starstar.len();
            }
            g_starstar.push(MergedClass {
                real: columns.len() == 1,
                columns,
                rep,
            });
        }
        let mut seen = vec![false; k];
        let mut g_eta_starstar = Vec::new();
        let mut n_upper_r_xi = 0;
        for chi in 0..k {
            let partner = data.conj_tensor(chi, eta);
            if partner == chi {
                n_upper_r_xi += 1;
            }
            if seen[chi] {
                continue;
            }
            seen[chi] = true;
            seen[partner] = true;
            let mut orbit = vec![chi, partner];
            orbit.dedup();
            g_eta_starstar.push(orbit);
        }
        let mut n_xi = 0;
        let mut n_r_xi = 0;
        let mut n_c = 0;
        for c in 0..k {
            if data.inverse_column(c) != c {
                n_c += 1;
            } else if *data.value(eta, c) == CycNum::from_int(-1) {
                n_xi += 1;
            } else {
                n_r_xi += 1;
            }
        }
        let n_starstar = g_starstar.len();
        let stats = FusionStats {
            n_starstar,
            n_eta_starstar: g_eta_starstar.len(),
            n_xi,
            n_r_xi,
            n_c,
            n_r: n_starstar - n_c / 2,
            n_upper_r_xi,
            n_upper_c_xi: k - n_upper_r_xi,
        };
        ClassFusion {
            eta,
            g_starstar,
            g_eta_starstar,
            stats,
            merged_of_column,
        }
    }

    /// Index of the merged class containing a column.
    pub fn merged_of_column(&self, col: usize) -> usize {
        self.merged_of_column[col]
    }

    pub fn merged_names(&self) -> Vec<String> {
        (1..=self.g_starstar.len())
            .map(|i| format!("R{i}"))
            .collect()
    }

    /// The two counting identities relating classes and characters, plus
    /// the combined count n^{R,ξ} + n^{C,ξ}/2 = n_{**} − n_ξ. Returns the
    /// failing identities.
    pub fn check_identities(&self) -> Vec<String> {
        let s = &self.stats;
        let mut bad = Vec::new();
        if s.n_c + 2 * s.n_xi != s.n_upper_c_xi {
            bad.push(format!(
                "n_C/2 + n_xi = n^C/2 fails: {} + 2*{} != {}",
                s.n_c, s.n_xi, s.n_upper_c_xi
            ));
        }
        if s.n_r < 2 * s.n_xi || s.n_r - 2 * s.n_xi != s.n_upper_r_xi {
            bad.push(format!(
                "n_R - 2 n_xi = n^R fails: {} - 2*{} != {}",
                s.n_r, s.n_xi, s.n_upper_r_xi
            ));
        }
        if 2 * s.n_upper_r_xi + s.n_upper_c_xi != 2 * (s.n_starstar - s.n_xi) {
            bad.push(format!(
                "n^R + n^C/2 = n_** - n_xi fails: {} + {}/2 != {} - {}",
                s.n_upper_r_xi, s.n_upper_c_xi, s.n_starstar, s.n_xi
            ));
        }
        if s.n_r_xi + s.n_xi != s.n_r {
            bad.push("real class count mismatch".into());
        }
        bad
    }
}

#[cfg(test)]
mod tests {
    use crate::data;

    #[test]
    fn c6_merged_sets() {
        let d = data::bundled("C6").unwrap();
        let f = d.fusion(1).unwrap();
        let merged: Vec<Vec<usize>> = f.g_starstar.iter().map(|r| r.columns.clone()).collect();
        assert_eq!(merged, vec![vec![0], vec![1, 5], vec![2, 4], vec![3]]);
        assert_eq!(f.g_eta_starstar, vec![vec![0, 1], vec![2, 5], vec![3, 4]]);
        assert_eq!(f.stats.n_starstar, 4);
        assert_eq!(f.stats.n_eta_starstar, 3);
    }

    #[test]
    fn gl2f3_counts() {
        let d = data::bundled("GL2F3").unwrap();
        let f = d.fusion(1).unwrap();
        assert_eq!(f.stats.n_xi, 1);
        assert_eq!(f.stats.n_c, 2);
        assert_eq!(f.stats.n_upper_c_xi, 4);
        assert_eq!(f.stats.n_upper_r_xi, 4);
        assert_eq!(f.g_starstar.len(), 7);
        assert!(f.g_starstar[6].columns == vec![6, 7] && !f.g_starstar[6].real);
        assert!(f.check_identities().is_empty());
    }

    #[test]
    fn identities_for_every_bundled_pair() {
        for name in data::NAMES {
            let d = data::bundled(name).unwrap();
            for xi in d.linear_characters().unwrap() {
                let f = d.fusion(xi).unwrap();
                assert!(
                    f.check_identities().is_empty(),
                    "{name} {xi}: {:?}",
                    f.check_identities()
                );
                // The untwisted case: n_C = n^{C,1} and n_R = n^{R,1}.
                if xi == d.trivial_char() {
                    assert_eq!(f.stats.n_c, f.stats.n_upper_c_xi);
                    assert_eq!(f.stats.n_r, f.stats.n_upper_r_xi);
                }
            }
        }
    }

    #[test]
    fn odd_abelian_classes_pair_up() {
        for name in ["C3", "C5"] {
            let d = data::bundled(name).unwrap();
            let f = d.fusion(0).unwrap();
            assert_eq!(f.stats.n_c, d.order() - 1);
            assert_eq!(f.stats.n_r, 1);
        }
    }
}
