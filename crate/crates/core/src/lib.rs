//! Exact computations for Borel-type fixed points of the `C^*`-action on
//! `G`-Higgs bundle moduli: very-stability of multiplicity divisors, wobbly
//! witnesses, virtual equivariant multiplicities and Dynkin polynomials.

pub mod equivmult;
pub mod error;
pub mod grading;
pub mod hecke;
pub mod polyfactor;
pub mod rootsys;

pub use equivmult::{
    degree_profile, dynkin_polynomial, table1, table1_closed_form, tangent_weights,
    virtual_multiplicity, weyl_dimension, Table1Row, TangentWeightProfile,
};
pub use error::{Error, Result};
pub use grading::{grading_profile, mu_can, GradingProfile};
pub use hecke::{
    classical_weights, classify, classify_classical, component_feasible, hecke_shift,
    lemma_admissible, wobbly_witness, MultiplicityDivisor, Verdict, Witness,
};
pub use polyfactor::{FactoredProduct, IntPoly, Polynomiality};
pub use rootsys::{CartanType, Coweight, Family, Root, RootSystem, SimpleType};
