//! Budgets for exhaustive searches.
//!
//! Exceeding a limit is always an error; nothing is silently truncated.

use crate::error::{Error, Result};
use serde::Serialize;

macro_rules! guards {
    ($($(#[$doc:meta])* $name:ident = $default:expr;)*) => {
        #[derive(Debug, Clone, PartialEq, Eq, Serialize)]
        pub struct Guards {
            $($(#[$doc])* pub $name: u128,)*
        }

        impl Default for Guards {
            fn default() -> Self {
                Guards { $($name: $default,)* }
            }
        }

        impl Guards {
            pub const NAMES: &'static [&'static str] = &[$(stringify!($name),)*];

            /// Override a limit by name (as given on the command line).
            pub fn set(&mut self, name: &str, value: u128) -> Result<()> {
                match name {
                    $(stringify!($name) => self.$name = value,)*
                    _ => {
                        return Err(Error::InvalidInput(format!(
                            "unknown guard `{name}` (known: {})",
                            Self::NAMES.join(", ")
                        )))
                    }
                }
                Ok(())
            }
        }
    };
}

guards! {
    /// Members of a family for 3^|F| subfamily-pair enumeration.
    family_members = 16;
    /// Ground size for exhaustive extremal-family search.
    family_ground = 5;
    /// p^n for full evaluation over F_p^n.
    field_points = 10_000_000;
    /// p^n for exhaustive Kakeya minimisation over 2^(p^n) subsets.
    kakeya_points = 12;
    /// Grid size Π|S_i| for Nullstellensatz checks.
    grid_points = 1_000_000;
    /// Largest prime for exhaustive sumset checks.
    sumset_prime = 11;
    /// Group order for the Davenport search.
    davenport_order = 9;
    /// Multisets enumerated per length by the EGZ-constant search.
    multisets = 1_000_000;
    /// Sequence length for Kemnitz counters.
    kemnitz_len = 20;
    /// 3^|E| for the F_3 common-zero scan in the Berge–Sauer search.
    berge_f3_scan = 1_600_000;
    /// Edges for the Berge–Sauer DFS fallback.
    berge_edges = 64;
    /// C(N, k) for monochromatic clique search.
    clique_subsets = 10_000_000;
    /// Vertices of an explicit Ramsey construction.
    ramsey_vertices = 2000;
    /// Clique size for the probabilistic sampler.
    sampler_n = 12;
    /// Vertices for exact independence number.
    independence_vertices = 40;
    /// Vertices for exact max cut.
    maxcut_vertices = 24;
    /// n + |E| for deletion–contraction.
    chromatic_size = 30;
    /// Largest order for the friendship scan.
    friendship_n = 7;
    /// Hypercube dimension for the exhaustive W scan.
    sensitivity_scan = 4;
    /// Hypercube dimension for exact matrix identities.
    sensitivity_matrix = 10;
    /// Dimension t for consistent colourings of K_{2^t}.
    consistent_t = 5;
    /// Convex sets in a Helly instance.
    helly_sets = 12;
    /// Points for the centerpoint search.
    centerpoint_points = 40;
    /// Ambient dimension for the centerpoint search.
    centerpoint_dim = 3;
    /// Points per colour class.
    colour_class = 12;
    /// r^|S| for the exhaustive Tverberg fallback.
    tverberg_partitions = 10_000_000;
    /// Planar points for line counting.
    sylvester_points = 200;
    /// Lines for joint counting.
    joints_lines = 300;
    /// Vectors for the nearly-orthogonal check.
    nearly_orthogonal = 60;
    /// Matrix order for dense eigen-decompositions.
    eigen_order = 256;
}

impl Guards {
    pub fn check(&self, guard: &'static str, limit: u128, requested: u128) -> Result<()> {
        if requested > limit {
            Err(Error::GuardExceeded { guard, limit, requested })
        } else {
            Ok(())
        }
    }
}

/// `base^exp` saturating at `u128::MAX`, for guard arithmetic.
pub(crate) fn sat_pow(base: u128, exp: u32) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn override_and_reject_unknown() {
        let mut g = Guards::default();
        g.set("kakeya_points", 16).unwrap();
        assert_eq!(g.kakeya_points, 16);
        assert!(g.set("nope", 1).is_err());
        assert!(g.check("kakeya_points", g.kakeya_points, 17).is_err());
    }
}
