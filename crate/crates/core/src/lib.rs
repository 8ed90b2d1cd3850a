//! Exact computations around zonal polynomials: pair-partitions and their
//! loop graphs, zonal and symplectic characters, Stanley polynomials, free
//! cumulants of Young diagrams and zonal Kerov polynomials.

pub mod characters;
pub mod cumulants;
pub mod error;
pub mod kerov;
pub mod linalg;
pub mod loops;
pub mod maps;
pub mod orientation;
pub mod pair_partition;
pub mod partition;
pub mod poly;
pub mod rational;
pub mod triplet;
pub mod zonal;

pub use characters::{
    n1_bruteforce, n1_graph, n1_graph_symbolic, n2_bruteforce, stanley_polynomial, stanley_positivity_report,
    symplectic_character, zonal_character, zonal_character_oracle, zonal_character_orbit_formula, Diagram,
    StanleyPositivityReport,
};
pub use cumulants::{
    anisotropic_cumulant, anisotropic_cumulants, anisotropic_cumulants_symbolic, free_cumulants,
    free_cumulants_symbolic, interlacing_of_multirect, transition_measure, InterlacingCoords, TransitionMeasure,
};
pub use error::{Error, Result};
pub use kerov::{
    evaluate_kerov, kerov_count, kerov_count_without_subset_condition, kerov_integrality_report, kerov_oracle,
    kerov_polynomial_combinatorial, symplectic_kerov, KerovIntegrityReport,
};
pub use loops::{canonical_couple, loop_structure, LoopStructure};
pub use maps::{map_stats, map_stats_for, MapStats};
pub use orientation::{compatible_orientations, orientation_orbits, Color, Orientation, OrientationOrbit};
pub use pair_partition::{
    couples_of_type_count, enumerate_pair_partitions, enumerate_pair_partitions_with_ceiling, first_pair_partition,
    make_pair_partition, PairPartition,
};
pub use partition::{tableau_2lambda, MultiRect, Partition, Tableau2Lambda};
pub use poly::{
    moments_from_cumulants, pfun_coefficient, pq_substitute_negate_q, series_functional_inverse, FormalSeries,
    KerovPolynomial, PQPolynomial, PSymmetricFunction,
};
pub use rational::Rational;
pub use triplet::{is_transitive_triplet, triplet_graph, BipartiteGraph, TripletGraph};
pub use zonal::{jack_oracle, theta_coefficient, zonal_polynomial, Alpha};
