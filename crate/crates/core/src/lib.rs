//! Exact character arithmetic for modular and quantum BGG categories:
//! truncated formal characters, Steinberg-type tensor product expansions,
//! linkage witnesses, and a complete rank-one toolkit.

pub mod error;
pub mod json;
pub mod linkage;
pub mod charring;
pub mod rootsys;
pub mod sl2;
pub mod steinberg;

pub use error::{Error, Result};
pub use rootsys::{
    adic_decompose, build_root_datum, count_bounded_partitions, dominance_leq, dot_action,
    kostant_partition, AdicDecomposition, PartitionTable, RootCoords, RootDatum, Weight,
    WeylElement,
};
pub use charring::{
    baby_verma_character, char_add, char_mul, frobenius_stretch, q_minus, q_minus_at_depth,
    steinberg_character, verma_character, weyl_character, Character, TruncationWindow,
};
pub use steinberg::{
    antidominant_simple_char, simple_char, simple_char_modular, simple_char_quantum,
    weight_mult_at, weight_mult_stabilized, Regime, RestrictedCharProvider, SimpleCharRequest,
};
pub use linkage::{
    apply_reflection, linkage_downset, strongly_linked, AffineReflection, ChainStep,
    LinkageWitness,
};
pub use sl2::{
    quotient_character, sl2_baby_verma_comp, sl2_baby_verma_comp_quantum,
    sl2_composition_factors, sl2_reciprocity_check, sl2_simple_char, sl2_socle,
    sl2_verma_filtration_step, tilting_character, weyl_decomposition, CompositionLedger,
    FiltrationQuotient, ReciprocityOutcome, RemainderItem, Sl2Regime, WeightCounts,
};
