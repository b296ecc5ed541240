//! Triples of non-intersecting lattice paths: the tree/path-pair bijection, the bijection with
//! Baxter tableaux, refined LGV counts and the Dyck-pair restriction.

mod dyck;
mod lgv;
mod path;
mod tree_pair;
mod triple;

pub use dyck::{from_dyck_pair, to_dyck_pair, DyckPair};
pub use lgv::{
    binomial, brute_force_lgv, lgv, lgv_determinant, lgv_inclusion_exclusion, tlt_lgv_params, triple_params, LgvParams,
};
pub use path::{parse_steps, words, LatticePath, Point, Step};
pub use tree_pair::{pair_to_tree, traversal_word, tree_to_pair, TraversalLetter, PAIR_LOWER_START, PAIR_UPPER_START};
pub use triple::{enumerate_triples, phi_p, phi_p_inverse, NilpTriple, BOTTOM_START, MIDDLE_START, TOP_START};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum NilpError {
    #[error("paths do not form a non-intersecting pair from (0,1) and (1,0)")]
    NotAPair,
    #[error("tableau is not Baxter")]
    NotBaxter,
    #[error("tableau is not almost complete")]
    NotAlmostComplete,
    #[error("not a valid pair of Dyck paths")]
    NotDyck,
    #[error("invalid triple: {0}")]
    InvalidTriple(String),
    #[error("invalid LGV parameters {0:?}")]
    InvalidParams(lgv::LgvParams),
    #[error("cannot parse step word {0:?}")]
    Parse(String),
}
